//! Unbounded-integer arithmetic kernel.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Unbounded nonnegative integer used for moduli, residues and exponents.
pub type Natural = BigUint;

/// Trial division covers every divisor below this bound.
const TRIAL_BOUND: u32 = 1_000_000;

/// First thirteen primes. As Miller–Rabin bases they decide primality
/// exactly for every n < 3_317_044_064_679_887_385_961_981.
const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Extra bases used above the proven bound.
const MR_EXTRA_BASES: [u32; 12] = [43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

/// Parses an ASCII decimal string (digits only, no sign) into a [`Natural`].
pub fn parse_natural(s: &str) -> Result<Natural> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::ParseNatural(s.to_owned()));
    }
    Natural::parse_bytes(s.as_bytes(), 10).ok_or_else(|| Error::ParseNatural(s.to_owned()))
}

/// `base^exp mod modulus`, in `[0, modulus)`.
pub fn pow_mod(base: &Natural, exp: &Natural, modulus: &Natural) -> Result<Natural> {
    if modulus.is_zero() {
        return Err(Error::ZeroModulus);
    }
    Ok(base.modpow(exp, modulus))
}

/// Greatest common divisor, with `gcd(0, 0) = 0`.
pub fn gcd(a: &Natural, b: &Natural) -> Natural {
    a.gcd(b)
}

/// Returns `b` in `[1, n)` with `a * b = 1 (mod n)`.
pub fn mod_inverse(a: &Natural, n: &Natural) -> Result<Natural> {
    if n.is_zero() {
        return Err(Error::ZeroModulus);
    }
    if n.is_one() {
        return Err(Error::ModulusTooSmall { modulus: n.clone(), min: 2 });
    }
    let a_int = BigInt::from(a % n);
    let n_int = BigInt::from(n.clone());
    let egcd = a_int.extended_gcd(&n_int);
    if !egcd.gcd.is_one() {
        return Err(Error::NotInvertible {
            a: a.clone(),
            modulus: n.clone(),
            gcd: gcd(a, n),
        });
    }
    let inv = egcd.x.mod_floor(&n_int);
    Ok(inv.to_biguint().expect("mod_floor by a positive modulus is nonnegative"))
}

/// Strong probable-prime test to base `a` for odd `n > 2` with `n - 1 = d * 2^s`.
fn strong_probable_prime(n: &Natural, d: &Natural, s: u64, a: &Natural) -> bool {
    let n_minus_1 = n - 1u32;
    let mut x = a.modpow(d, n);
    if x.is_one() || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = &x * &x % n;
        if x == n_minus_1 {
            return true;
        }
        if x.is_one() {
            return false;
        }
    }
    false
}

/// Miller–Rabin with a fixed base set.
///
/// Exact below 3.3 * 10^24; above that the answer is reproducible but only
/// probabilistic (25 bases).
pub fn is_prime(n: &Natural) -> bool {
    if let Some(small) = n.to_u32() {
        if small < 2 {
            return false;
        }
        for &p in MR_BASES.iter().chain(MR_EXTRA_BASES.iter()) {
            if small == p {
                return true;
            }
            if small % p == 0 {
                return false;
            }
        }
    } else if MR_BASES.iter().any(|&p| (n % p).is_zero()) {
        return false;
    }

    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().expect("n > 1");
    let d = &n_minus_1 >> s;

    let proven_bound = Natural::parse_bytes(b"3317044064679887385961981", 10).unwrap();
    let extra: &[u32] = if *n < proven_bound { &[] } else { &MR_EXTRA_BASES };
    MR_BASES
        .iter()
        .chain(extra.iter())
        .map(|&a| Natural::from(a))
        .filter(|a| a < n)
        .all(|a| strong_probable_prime(n, &d, s, &a))
}

/// Prime factorization of a positive integer, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(Natural, u32)>,
}

impl Factorization {
    fn from_map(map: BTreeMap<Natural, u32>) -> Self {
        Self { factors: map.into_iter().filter(|(_, e)| *e > 0).collect() }
    }

    pub fn factors(&self) -> &[(Natural, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &Natural> {
        self.factors.iter().map(|(p, _)| p)
    }

    /// True for the factorization of 1.
    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// Reassembles the factored integer.
    pub fn value(&self) -> Natural {
        self.factors
            .iter()
            .fold(Natural::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), *e as usize))
    }

    /// Factorization of `phi(n)`, built from the factors of `n` and of each `p - 1`.
    pub fn totient(&self) -> Factorization {
        let mut map = BTreeMap::new();
        for (p, e) in &self.factors {
            if *e > 1 {
                *map.entry(p.clone()).or_insert(0) += e - 1;
            }
            let pm1 = p - 1u32;
            if !pm1.is_one() {
                for (q, f) in factorize(&pm1).expect("p - 1 >= 1").factors {
                    *map.entry(q).or_insert(0) += f;
                }
            }
        }
        Factorization::from_map(map)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Canonical prime factorization; `factorize(1)` is empty.
///
/// Trial division below 10^6, then Pollard–Brent rho on the remaining
/// cofactor with Miller–Rabin deciding when a piece is prime.
pub fn factorize(n: &Natural) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::ZeroArgument { what: "n" });
    }
    let mut map = BTreeMap::new();
    let mut rest = n.clone();

    let mut divide_out = |rest: &mut Natural, d: u32| {
        let mut count = 0;
        while (&*rest % d).is_zero() {
            *rest /= d;
            count += 1;
        }
        if count > 0 {
            map.insert(Natural::from(d), count);
        }
    };

    divide_out(&mut rest, 2);
    divide_out(&mut rest, 3);
    let mut limit = trial_limit(&rest);
    let mut d = 5u32;
    while d <= limit {
        for cand in [d, d + 2] {
            if (&rest % cand).is_zero() {
                divide_out(&mut rest, cand);
                limit = trial_limit(&rest);
            }
        }
        d += 6;
    }

    if !rest.is_one() {
        let bound = Natural::from(TRIAL_BOUND);
        if rest < &bound * &bound {
            *map.entry(rest).or_insert(0) += 1;
        } else {
            split_large(rest, &mut map);
        }
    }
    Ok(Factorization::from_map(map))
}

fn trial_limit(n: &Natural) -> u32 {
    n.sqrt().to_u32().map_or(TRIAL_BOUND, |r| r.min(TRIAL_BOUND))
}

/// Splits a cofactor with no prime factors below the trial bound.
fn split_large(n: Natural, map: &mut BTreeMap<Natural, u32>) {
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            *map.entry(m).or_insert(0) += 1;
            continue;
        }
        let root = m.sqrt();
        if &root * &root == m {
            stack.push(root.clone());
            stack.push(root);
            continue;
        }
        let d = pollard_brent(&m);
        let q = &m / &d;
        stack.push(d);
        stack.push(q);
    }
}

/// Finds a nontrivial divisor of an odd composite `n`.
fn pollard_brent(n: &Natural) -> Natural {
    let one = Natural::one();
    let mut c = Natural::one();
    loop {
        let step = |x: &Natural| (x * x + &c) % n;
        let mut y = Natural::from(2u32);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut g = one.clone();
        let mut q = one.clone();
        let mut r: u64 = 1;
        const BATCH: u64 = 128;

        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = step(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
        }

        if &g == n {
            // Batch overshot; replay one step at a time.
            loop {
                ys = step(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

/// Euler's totient, computed from the factorization; `phi(1) = 1`.
pub fn euler_phi(n: &Natural) -> Result<Natural> {
    let fac = factorize(n)?;
    Ok(phi_of(&fac))
}

pub(crate) fn phi_of(fac: &Factorization) -> Natural {
    fac.factors().iter().fold(Natural::one(), |acc, (p, e)| {
        acc * num_traits::pow(p.clone(), (*e - 1) as usize) * (p - 1u32)
    })
}
