//! Brute-force reference implementations.
//!
//! Nothing here touches the fast order computation, totient shortcuts or the
//! lifting constructions; the scans are deliberately naive so they can check
//! those paths independently.

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::construct::PrimitiveRootSet;
use crate::error::{Error, Result};
use crate::hensel::{eval_mod, Polynomial};
use crate::modarith::Natural;

/// Largest modulus the oracle scans unless told otherwise.
pub const DEFAULT_ORACLE_CEILING: u64 = 1_000_000;

fn check_ceiling(n: &Natural, ceiling: &Natural) -> Result<()> {
    if n.is_zero() {
        return Err(Error::ZeroModulus);
    }
    if n > ceiling {
        return Err(Error::OracleCeiling { n: n.clone(), ceiling: ceiling.clone() });
    }
    Ok(())
}

/// Smallest `m >= 1` with `a^m = 1 (mod n)`, by successive multiplication.
/// Gives up past `limit` and returns `limit + 1`.
fn naive_order(a: u64, n: u64, limit: u64) -> u64 {
    let one = 1 % n;
    let mut x = a % n;
    let mut m = 1;
    let a = a % n;
    if n <= u32::MAX as u64 {
        while x != one && m <= limit {
            x = x * a % n;
            m += 1;
        }
    } else {
        while x != one && m <= limit {
            x = ((x as u128 * a as u128) % n as u128) as u64;
            m += 1;
        }
    }
    m
}

/// Scans `a = 1..=n` for units whose naive order equals the number of units.
pub fn brute_primitive_roots(n: &Natural, ceiling: &Natural) -> Result<PrimitiveRootSet> {
    check_ceiling(n, ceiling)?;
    let modulus = n
        .to_u64()
        .ok_or_else(|| Error::OracleCeiling { n: n.clone(), ceiling: Natural::from(u64::MAX) })?;

    let units: Vec<u64> = (1..=modulus).filter(|a| a.gcd(&modulus) == 1).collect();
    let unit_count = units.len() as u64;
    let roots: Vec<Natural> = units
        .into_iter()
        .filter(|&a| naive_order(a, modulus, unit_count) == unit_count)
        .map(Natural::from)
        .collect();
    Ok(PrimitiveRootSet::from_sorted_unchecked(n.clone(), roots))
}

/// Every `x` in `[0, m)` with `f(x) = 0 (mod m)`.
pub fn brute_congruence_solutions(f: &Polynomial, m: &Natural, ceiling: &Natural) -> Result<Vec<Natural>> {
    check_ceiling(m, ceiling)?;
    let mut out = Vec::new();
    let mut x = Natural::zero();
    while &x < m {
        if eval_mod(f, &x, m)?.is_zero() {
            out.push(x.clone());
        }
        x += 1u32;
    }
    Ok(out)
}
