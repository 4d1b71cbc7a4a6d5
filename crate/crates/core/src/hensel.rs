//! Polynomial congruences modulo prime powers and the three-way Hensel lift.
//!
//! A solution `x0` of `f(x) = 0 (mod p^k)` lifts to solutions of
//! `f(x) = 0 (mod p^(k+1))` of the form `x0 + t p^k`. Which `t` work is
//! decided by `f'(x0) mod p`: a nonzero derivative gives exactly one lift, a
//! vanishing derivative gives either all `p` choices or none.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modarith::{is_prime, mod_inverse, Natural};

/// Integer-coefficient polynomial; `coefficients[i]` multiplies `x^i`.
/// Trailing zeros are always trimmed, so the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coefficients: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn from_i64s(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `x^d - 1`.
    pub fn power_minus_one(d: usize) -> Self {
        let mut c = vec![BigInt::zero(); d + 1];
        c[0] = -BigInt::one();
        c[d] += BigInt::one();
        Self::new(c)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Comma-separated coefficients, constant term first: `"1,0,1"` is `x^2 + 1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: String| Error::ParsePolynomial { input: s.to_owned(), reason };
        if s.trim().is_empty() {
            return Err(bad("empty coefficient list".into()));
        }
        let coefficients = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                let digits = tok.strip_prefix('-').unwrap_or(tok);
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad(format!("{tok:?} is not an integer")));
                }
                BigInt::parse_bytes(tok.as_bytes(), 10).ok_or_else(|| bad(format!("{tok:?} is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(coefficients))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Reduces a signed integer into `[0, m)`.
fn reduce(c: &BigInt, m: &Natural) -> Natural {
    let m_int = BigInt::from_biguint(Sign::Plus, m.clone());
    c.mod_floor(&m_int).to_biguint().expect("mod_floor by a positive modulus is nonnegative")
}

/// `f(x) mod m` in `[0, m)`, by Horner's rule with reduction at every step.
pub fn eval_mod(f: &Polynomial, x: &Natural, m: &Natural) -> Result<Natural> {
    if m.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let x = x % m;
    let mut acc = Natural::zero();
    for c in f.coefficients.iter().rev() {
        acc = (acc * &x + reduce(c, m)) % m;
    }
    Ok(acc)
}

/// Formal derivative.
pub fn derivative(f: &Polynomial) -> Polynomial {
    Polynomial::new(
        f.coefficients
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect(),
    )
}

/// Result of lifting one solution from `p^k` to `p^(k+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LiftOutcome {
    /// `f'(x0) != 0 (mod p)`: the single lift `x1 = x0 + t p^k`.
    UniqueLift {
        #[serde(with = "crate::serde_decimal")]
        t: Natural,
        #[serde(with = "crate::serde_decimal")]
        x1: Natural,
    },
    /// `f'(x0) = 0 (mod p)` and `f(x0) = 0 (mod p^(k+1))`: all `p` residues above `x0`.
    MultipleLift {
        #[serde(with = "crate::serde_decimal::vec")]
        solutions: Vec<Natural>,
    },
    /// `f'(x0) = 0 (mod p)` and `f(x0) != 0 (mod p^(k+1))`.
    NoLift,
}

impl LiftOutcome {
    /// Solutions modulo `p^(k+1)` lying above `x0`.
    pub fn solutions(&self) -> Vec<Natural> {
        match self {
            LiftOutcome::UniqueLift { x1, .. } => vec![x1.clone()],
            LiftOutcome::MultipleLift { solutions } => solutions.clone(),
            LiftOutcome::NoLift => Vec::new(),
        }
    }
}

fn require_prime(p: &Natural) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p.clone()))
    }
}

/// Lifts the solution `x0` of `f(x) = 0 (mod p^k)` to modulus `p^(k+1)`.
pub fn lift_solution(f: &Polynomial, x0: &Natural, p: &Natural, k: u32) -> Result<LiftOutcome> {
    require_prime(p)?;
    if k == 0 {
        return Err(Error::ZeroArgument { what: "k" });
    }
    let pk = num_traits::pow(p.clone(), k as usize);
    let pk1 = &pk * p;
    if *x0 >= pk {
        return Err(Error::OutOfRange { value: x0.clone(), modulus: pk });
    }
    if !eval_mod(f, x0, &pk)?.is_zero() {
        return Err(Error::NotASolution { x0: x0.clone(), modulus: pk });
    }

    // f(x0) mod p^(k+1) is divisible by p^k, and the exact quotient
    // agrees with f(x0) / p^k modulo p.
    let value = eval_mod(f, x0, &pk1)?;
    let slope = eval_mod(&derivative(f), x0, p)?;

    if !slope.is_zero() {
        let (quotient, rem) = value.div_rem(&pk);
        debug_assert!(rem.is_zero());
        let neg_quotient = (p - quotient % p) % p;
        let t = neg_quotient * mod_inverse(&slope, p)? % p;
        let x1 = x0 + &t * &pk;
        return Ok(LiftOutcome::UniqueLift { t, x1 });
    }
    if value.is_zero() {
        let mut solutions = Vec::new();
        let mut x = x0.clone();
        let mut t = Natural::zero();
        while &t < p {
            solutions.push(x.clone());
            x += &pk;
            t += 1u32;
        }
        return Ok(LiftOutcome::MultipleLift { solutions });
    }
    Ok(LiftOutcome::NoLift)
}

/// All solutions of `f(x) = 0 (mod p^k)` in `[0, p^k)`, ascending.
///
/// Level one is an exhaustive scan of `[0, p)`; every further level lifts
/// each solution of the level below.
pub fn solve_prime_power(f: &Polynomial, p: &Natural, k: u32) -> Result<Vec<Natural>> {
    require_prime(p)?;
    if k == 0 {
        return Err(Error::ZeroArgument { what: "k" });
    }
    let mut level = Vec::new();
    let mut x = Natural::zero();
    while &x < p {
        if eval_mod(f, &x, p)?.is_zero() {
            level.push(x.clone());
        }
        x += 1u32;
    }
    for j in 1..k {
        let mut next = Vec::with_capacity(level.len());
        for x0 in &level {
            next.extend(lift_solution(f, x0, p, j)?.solutions());
        }
        level = next;
    }
    level.sort();
    level.dedup();
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Natural {
        Natural::from(v)
    }

    fn nats(vs: &[u64]) -> Vec<Natural> {
        vs.iter().map(|&v| n(v)).collect()
    }

    #[test]
    fn polynomial_trims_trailing_zeros() {
        let f = Polynomial::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(f.coefficients().len(), 2);
        assert_eq!(f.degree(), Some(1));
        assert!(Polynomial::from_i64s(&[0, 0]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn parse_and_display() {
        let f: Polynomial = "1,0,1".parse().unwrap();
        assert_eq!(f, Polynomial::from_i64s(&[1, 0, 1]));
        assert_eq!(f.to_string(), "x^2 + 1");
        let g: Polynomial = "-3, 0, 1".parse().unwrap();
        assert_eq!(g.to_string(), "x^2 - 3");
        assert_eq!("-1,2,-1".parse::<Polynomial>().unwrap().to_string(), "-x^2 + 2x - 1");
        assert_eq!("0".parse::<Polynomial>().unwrap(), Polynomial::zero());
        for bad in ["", "1,,2", "a", "1.5", "--1", "+1"] {
            assert!(bad.parse::<Polynomial>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn eval_mod_examples() {
        let f = Polynomial::from_i64s(&[1, 0, 1]);
        assert_eq!(eval_mod(&f, &n(2), &n(5)).unwrap(), n(0));
        // x^phi(9) - 1 at 2 is 63, nonzero mod 27.
        let g = Polynomial::power_minus_one(6);
        assert_eq!(eval_mod(&g, &n(2), &n(27)).unwrap(), n(9));
        assert_eq!(eval_mod(&Polynomial::zero(), &n(11), &n(7)).unwrap(), n(0));
        assert_eq!(eval_mod(&Polynomial::from_i64s(&[-7]), &n(0), &n(5)).unwrap(), n(3));
        assert_eq!(eval_mod(&f, &n(2), &n(0)), Err(Error::ZeroModulus));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(derivative(&Polynomial::from_i64s(&[1, 0, 1])), Polynomial::from_i64s(&[0, 2]));
        let d = derivative(&Polynomial::power_minus_one(6));
        assert_eq!(d, Polynomial::from_i64s(&[0, 0, 0, 0, 0, 6]));
        assert_eq!(eval_mod(&d, &n(2), &n(3)).unwrap(), n(0));
        assert!(derivative(&Polynomial::from_i64s(&[5])).is_zero());
        assert!(derivative(&Polynomial::zero()).is_zero());
    }

    #[test]
    fn lift_solution_three_cases() {
        // Scan of 0..25 for x^2 + 1 gives {7, 18}; 7 lies above 2.
        let f = Polynomial::from_i64s(&[1, 0, 1]);
        assert_eq!(
            lift_solution(&f, &n(2), &n(5), 1).unwrap(),
            LiftOutcome::UniqueLift { t: n(1), x1: n(7) }
        );
        let sq = Polynomial::from_i64s(&[0, 0, 1]);
        assert_eq!(
            lift_solution(&sq, &n(0), &n(3), 1).unwrap(),
            LiftOutcome::MultipleLift { solutions: nats(&[0, 3, 6]) }
        );
        // -3 is 0 mod 3 but not mod 9, and no x in 0..9 has x^2 = 3 mod 9.
        let g = Polynomial::from_i64s(&[-3, 0, 1]);
        assert!((0..9u64).all(|x| (x * x) % 9 != 3));
        assert_eq!(lift_solution(&g, &n(0), &n(3), 1).unwrap(), LiftOutcome::NoLift);
    }

    #[test]
    fn lift_solution_errors() {
        let f = Polynomial::from_i64s(&[1, 0, 1]);
        assert!(matches!(lift_solution(&f, &n(1), &n(5), 1), Err(Error::NotASolution { .. })));
        assert!(matches!(lift_solution(&f, &n(2), &n(6), 1), Err(Error::NotPrime(_))));
        assert!(matches!(lift_solution(&f, &n(7), &n(5), 1), Err(Error::OutOfRange { .. })));
        assert!(matches!(lift_solution(&f, &n(2), &n(5), 0), Err(Error::ZeroArgument { .. })));
    }

    #[test]
    fn solve_prime_power_examples() {
        let f = Polynomial::from_i64s(&[1, 0, 1]);
        assert_eq!(solve_prime_power(&f, &n(5), 2).unwrap(), nats(&[7, 18]));
        assert!(solve_prime_power(&f, &n(3), 2).unwrap().is_empty());
        let lin = Polynomial::from_i64s(&[-1, 1]);
        for (p, k) in [(2, 1), (3, 4), (7, 3), (101, 2)] {
            assert_eq!(solve_prime_power(&lin, &n(p), k).unwrap(), nats(&[1]));
        }
        assert_eq!(solve_prime_power(&Polynomial::zero(), &n(2), 3).unwrap().len(), 8);
        assert!(matches!(solve_prime_power(&f, &n(9), 2), Err(Error::NotPrime(_))));
    }

    #[test]
    fn unique_lift_is_the_only_solution_above() {
        let f = Polynomial::from_i64s(&[-2, 0, 0, 1]);
        for p in [3u64, 5, 7, 11, 13] {
            for k in 1..3u32 {
                let pk = p.pow(k);
                for x0 in 0..pk {
                    if eval_mod(&f, &n(x0), &n(pk)).unwrap() != n(0) {
                        continue;
                    }
                    if let LiftOutcome::UniqueLift { x1, .. } = lift_solution(&f, &n(x0), &n(p), k).unwrap() {
                        let above: Vec<_> = (0..p)
                            .map(|t| x0 + t * pk)
                            .filter(|&x| eval_mod(&f, &n(x), &n(pk * p)).unwrap() == n(0))
                            .collect();
                        assert_eq!(above, vec![u64::try_from(x1).unwrap()]);
                    }
                }
            }
        }
    }

    #[test]
    fn lift_outcome_json() {
        let o = LiftOutcome::UniqueLift { t: n(1), x1: n(7) };
        assert_eq!(serde_json::to_string(&o).unwrap(), r#"{"kind":"unique_lift","t":"1","x1":"7"}"#);
        let m = LiftOutcome::MultipleLift { solutions: nats(&[0, 3]) };
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"{"kind":"multiple_lift","solutions":["0","3"]}"#);
    }
}
