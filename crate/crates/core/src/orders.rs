//! Multiplicative order, the primitive-root predicate, and the classification
//! of moduli that possess primitive roots.

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modarith::{factorize, gcd, phi_of, Factorization, Natural};

/// Which moduli have primitive roots: 1, 2, 4, `p^k` and `2p^k` for odd primes `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModulusClass {
    One,
    Two,
    Four,
    OddPrimePower {
        #[serde(with = "crate::serde_decimal")]
        p: Natural,
        k: u32,
    },
    TwiceOddPrimePower {
        #[serde(with = "crate::serde_decimal")]
        p: Natural,
        k: u32,
    },
    NoPrimitiveRoots,
}

impl ModulusClass {
    pub fn has_primitive_roots(&self) -> bool {
        !matches!(self, ModulusClass::NoPrimitiveRoots)
    }

    fn from_factorization(fac: &Factorization) -> Self {
        let two = Natural::from(2u32);
        match fac.factors() {
            [] => ModulusClass::One,
            [(p, 1)] if *p == two => ModulusClass::Two,
            [(p, 2)] if *p == two => ModulusClass::Four,
            [(p, _)] if *p == two => ModulusClass::NoPrimitiveRoots,
            [(p, k)] => ModulusClass::OddPrimePower { p: p.clone(), k: *k },
            [(two_, 1), (p, k)] if *two_ == two => {
                ModulusClass::TwiceOddPrimePower { p: p.clone(), k: *k }
            }
            _ => ModulusClass::NoPrimitiveRoots,
        }
    }
}

/// `x == 1 (mod n)` for a residue `x` already reduced mod `n`.
fn is_unit_residue(x: &Natural, n: &Natural) -> bool {
    if n.is_one() {
        x.is_zero()
    } else {
        x.is_one()
    }
}

/// Order of `a` given `phi(n)` and its factorization.
fn order_from_phi(a: &Natural, n: &Natural, phi: &Natural, phi_fac: &Factorization) -> Natural {
    let mut m = phi.clone();
    for (q, e) in phi_fac.factors() {
        for _ in 0..*e {
            let (candidate, rem) = m.div_rem(q);
            debug_assert!(rem.is_zero());
            if is_unit_residue(&a.modpow(&candidate, n), n) {
                m = candidate;
            } else {
                break;
            }
        }
    }
    m
}

fn require_coprime(a: &Natural, n: &Natural) -> Result<()> {
    if n.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let g = gcd(a, n);
    if g.is_one() {
        Ok(())
    } else {
        Err(Error::NotCoprime { a: a.clone(), modulus: n.clone(), gcd: g })
    }
}

/// Multiplicative order of `a` modulo `n`.
///
/// Starts from `phi(n)` and strips each prime factor `q` of `phi(n)` for as
/// long as `a^(m/q) = 1` still holds.
pub fn order(a: &Natural, n: &Natural) -> Result<Natural> {
    require_coprime(a, n)?;
    let fac = factorize(n)?;
    let phi = phi_of(&fac);
    Ok(order_from_phi(a, n, &phi, &fac.totient()))
}

/// Precomputed `phi(n)` data for repeated primitive-root tests against one modulus.
#[derive(Debug, Clone)]
pub(crate) struct RootTester {
    modulus: Natural,
    exponents: Vec<Natural>,
}

impl RootTester {
    pub(crate) fn new(n: &Natural) -> Result<Self> {
        let fac = factorize(n)?;
        let phi = phi_of(&fac);
        let exponents = fac.totient().primes().map(|q| &phi / q).collect();
        Ok(Self { modulus: n.clone(), exponents })
    }

    pub(crate) fn test(&self, a: &Natural) -> bool {
        let n = &self.modulus;
        gcd(a, n).is_one()
            && self.exponents.iter().all(|e| !is_unit_residue(&a.modpow(e, n), n))
    }
}

/// True iff `a` is coprime to `n` and its order is `phi(n)`. Never errors on
/// non-coprime `a`; `n = 0` is simply false.
pub fn is_primitive_root(a: &Natural, n: &Natural) -> bool {
    match RootTester::new(n) {
        Ok(tester) => tester.test(a),
        Err(_) => false,
    }
}

pub fn classify_modulus(n: &Natural) -> Result<ModulusClass> {
    if n.is_zero() {
        return Err(Error::ZeroArgument { what: "n" });
    }
    Ok(ModulusClass::from_factorization(&factorize(n)?))
}

/// `phi(phi(n))` for moduli that have primitive roots.
pub fn count_primitive_roots(n: &Natural) -> Result<Natural> {
    if n.is_zero() {
        return Err(Error::ZeroArgument { what: "n" });
    }
    let fac = factorize(n)?;
    if !ModulusClass::from_factorization(&fac).has_primitive_roots() {
        return Err(Error::NoPrimitiveRoots { n: n.clone(), factorization: fac.to_string() });
    }
    Ok(phi_of(&fac.totient()))
}
