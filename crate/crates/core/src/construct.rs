//! Constructive enumeration of primitive roots.
//!
//! The chain runs prime → `p^2` → `p^k` → `2p^k`:
//!
//! * the roots of a prime `p` are the powers `g^e` of one root with
//!   `gcd(e, p - 1) = 1`;
//! * each root `g` of `p` yields the `p - 1` roots `g + t p` of `p^2`, where
//!   `t` runs over `[0, p)` minus one exceptional value;
//! * for odd `p` and `k >= 2`, each root `g` of `p^k` yields the `p` roots
//!   `g + t p^k` of `p^(k+1)`, with no exceptions;
//! * a root `g` of `p^k` gives the root `g` (odd) or `g + p^k` (even) of `2p^k`.

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modarith::{factorize, is_prime, mod_inverse, phi_of, Natural};
use crate::orders::{classify_modulus, is_primitive_root, ModulusClass, RootTester};

/// Default refusal threshold for materialized enumerations.
pub const DEFAULT_ROOT_CEILING: u64 = 10_000_000;

/// The primitive roots of a modulus, as representatives in `[1, modulus]`,
/// strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "RootSetDocument", try_from = "RootSetDocument")]
pub struct PrimitiveRootSet {
    modulus: Natural,
    roots: Vec<Natural>,
}

#[derive(Serialize, Deserialize)]
struct RootSetDocument {
    #[serde(with = "crate::serde_decimal")]
    modulus: Natural,
    #[serde(with = "crate::serde_decimal")]
    phi: Natural,
    #[serde(with = "crate::serde_decimal")]
    count: Natural,
    #[serde(with = "crate::serde_decimal::vec")]
    roots: Vec<Natural>,
}

impl From<PrimitiveRootSet> for RootSetDocument {
    fn from(set: PrimitiveRootSet) -> Self {
        RootSetDocument {
            phi: set.phi(),
            count: Natural::from(set.roots.len()),
            modulus: set.modulus,
            roots: set.roots,
        }
    }
}

impl TryFrom<RootSetDocument> for PrimitiveRootSet {
    type Error = String;

    fn try_from(doc: RootSetDocument) -> std::result::Result<Self, String> {
        if doc.count != Natural::from(doc.roots.len()) {
            return Err(format!("count {} does not match {} listed roots", doc.count, doc.roots.len()));
        }
        let set = PrimitiveRootSet::from_unsorted(doc.modulus, doc.roots).map_err(|e| e.to_string())?;
        if set.phi() != doc.phi {
            return Err(format!("phi {} is wrong for modulus {}", doc.phi, set.modulus));
        }
        Ok(set)
    }
}

impl PrimitiveRootSet {
    /// Sorts and deduplicates; every root must be a unit in `[1, modulus]`.
    pub fn from_unsorted(modulus: Natural, mut roots: Vec<Natural>) -> Result<Self> {
        if modulus.is_zero() {
            return Err(Error::ZeroModulus);
        }
        roots.sort();
        roots.dedup();
        for r in &roots {
            if r.is_zero() || *r > modulus {
                return Err(Error::OutOfRange { value: r.clone(), modulus: &modulus + 1u32 });
            }
            let g = r.gcd(&modulus);
            if !g.is_one() {
                return Err(Error::NotCoprime { a: r.clone(), modulus: modulus.clone(), gcd: g });
            }
        }
        Ok(Self { modulus, roots })
    }

    pub(crate) fn from_sorted_unchecked(modulus: Natural, roots: Vec<Natural>) -> Self {
        debug_assert!(roots.windows(2).all(|w| w[0] < w[1]));
        Self { modulus, roots }
    }

    pub fn modulus(&self) -> &Natural {
        &self.modulus
    }

    pub fn roots(&self) -> &[Natural] {
        &self.roots
    }

    pub fn into_roots(self) -> Vec<Natural> {
        self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, x: &Natural) -> bool {
        self.roots.binary_search(x).is_ok()
    }

    pub fn phi(&self) -> Natural {
        phi_of(&factorize(&self.modulus).expect("modulus is positive"))
    }
}

/// Representative of `x mod n` in `[1, n]`.
fn canonical(x: &Natural, n: &Natural) -> Natural {
    let r = x % n;
    if r.is_zero() {
        n.clone()
    } else {
        r
    }
}

fn require_prime(p: &Natural) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p.clone()))
    }
}

fn require_odd_prime(p: &Natural) -> Result<()> {
    require_prime(p)?;
    if p.is_even() {
        return Err(Error::EvenPrime);
    }
    Ok(())
}

fn require_root_in_range(g: &Natural, modulus: &Natural) -> Result<()> {
    if g.is_zero() || g >= modulus {
        return Err(Error::OutOfRange { value: g.clone(), modulus: modulus.clone() });
    }
    if !is_primitive_root(g, modulus) {
        return Err(Error::NotPrimitiveRoot { g: g.clone(), modulus: modulus.clone() });
    }
    Ok(())
}

/// The offset formula without input validation.
fn exceptional_offset(g: &Natural, p: &Natural) -> Natural {
    let p2 = p * p;
    let pm1 = p - 1u32;
    // Fermat: g^(p-1) = 1 (mod p), so 1 - g^(p-1) is divisible by p.
    let r = g.modpow(&pm1, &p2);
    let numerator = ((&p2 + 1u32 - r) % &p2) / p;
    let denominator = &pm1 * g.modpow(&(p - 2u32), p) % p;
    let inv = mod_inverse(&denominator, p).expect("(p - 1) g^(p - 2) is a unit mod p");
    numerator * inv % p
}

/// The unique `t` in `[0, p)` for which `g + t p` is not a primitive root of `p^2`:
/// `t = ((1 - g^(p-1)) / p) * ((p - 1) g^(p-2))^(-1) mod p`.
pub fn exceptional_t(g: &Natural, p: &Natural) -> Result<Natural> {
    require_prime(p)?;
    require_root_in_range(g, p)?;
    Ok(exceptional_offset(g, p))
}

fn square_lifts(g: &Natural, p: &Natural) -> Vec<Natural> {
    let skip = exceptional_offset(g, p);
    let mut out = Vec::new();
    let mut t = Natural::zero();
    while &t < p {
        if t != skip {
            out.push(g + &t * p);
        }
        t += 1u32;
    }
    out
}

/// The `p - 1` primitive roots `g + t p` of `p^2` above the root `g` of `p`.
/// Accepts `p = 2`, where the only root 1 of 2 lifts to 3.
pub fn lift_prime_to_square(g: &Natural, p: &Natural) -> Result<Vec<Natural>> {
    exceptional_t(g, p)?;
    Ok(square_lifts(g, p))
}

/// The `p` primitive roots `g + t p^k`, `t = 0..p`, of `p^(k+1)` above the
/// root `g` of `p^k`. Needs an odd prime and `k >= 2`.
pub fn lift_power(g: &Natural, p: &Natural, k: u32) -> Result<Vec<Natural>> {
    require_odd_prime(p)?;
    if k < 2 {
        return Err(Error::LiftDepth { k });
    }
    let pk = num_traits::pow(p.clone(), k as usize);
    require_root_in_range(g, &pk)?;
    let mut out = Vec::new();
    let mut x = g.clone();
    let mut t = Natural::zero();
    while &t < p {
        out.push(x.clone());
        x += &pk;
        t += 1u32;
    }
    Ok(out)
}

/// Root of `2p^k` from the root `g` of `p^k`: `g` when odd, else `g + p^k`.
pub fn to_twice_prime_power(g: &Natural, p: &Natural, k: u32) -> Result<Natural> {
    require_odd_prime(p)?;
    if k == 0 {
        return Err(Error::ZeroArgument { what: "k" });
    }
    let pk = num_traits::pow(p.clone(), k as usize);
    require_root_in_range(g, &pk)?;
    Ok(twice(g, &pk))
}

fn twice(g: &Natural, pk: &Natural) -> Natural {
    if g.is_odd() {
        g.clone()
    } else {
        g + pk
    }
}

/// Every primitive root of `n` as `g^e mod n` with `gcd(e, phi(n)) = 1`.
pub fn from_generator(g: &Natural, n: &Natural) -> Result<PrimitiveRootSet> {
    if n.is_zero() {
        return Err(Error::ZeroModulus);
    }
    if !is_primitive_root(g, n) {
        return Err(Error::NotPrimitiveRoot { g: g.clone(), modulus: n.clone() });
    }
    let mut roots: Vec<Natural> = GeneratorPowers::new(g, n)?.collect();
    roots.sort();
    Ok(PrimitiveRootSet::from_sorted_unchecked(n.clone(), roots))
}

/// Least primitive root of a prime.
pub fn smallest_primitive_root(p: &Natural) -> Result<Natural> {
    require_prime(p)?;
    let tester = RootTester::new(p)?;
    let mut g = Natural::one();
    while !tester.test(&g) {
        g += 1u32;
    }
    Ok(g)
}

/// Lazily yields `g^e mod n` for `e = 1..=phi(n)` coprime to `phi(n)`, in `[1, n]`.
struct GeneratorPowers {
    generator: Natural,
    modulus: Natural,
    phi: Natural,
    exponent: Natural,
    power: Natural,
}

impl GeneratorPowers {
    fn new(g: &Natural, n: &Natural) -> Result<Self> {
        let phi = phi_of(&factorize(n)?);
        Ok(Self {
            generator: g % n,
            modulus: n.clone(),
            phi,
            exponent: Natural::zero(),
            power: Natural::one() % n,
        })
    }
}

impl Iterator for GeneratorPowers {
    type Item = Natural;

    fn next(&mut self) -> Option<Natural> {
        while self.exponent < self.phi {
            self.exponent += 1u32;
            self.power = &self.power * &self.generator % &self.modulus;
            if self.exponent.gcd(&self.phi).is_one() {
                return Some(canonical(&self.power, &self.modulus));
            }
        }
        None
    }
}

/// One depth-first frame: the residues `base + t * step` for `t` in `[t, p)`,
/// skipping `skip`.
struct LiftFrame {
    level: u32,
    base: Natural,
    step: Natural,
    t: Natural,
    skip: Option<Natural>,
}

enum StreamSource {
    Fixed(std::vec::IntoIter<Natural>),
    Chain {
        p: Natural,
        k: u32,
        /// `p^k` when emitting roots of `2p^k`.
        twice: Option<Natural>,
        /// `powers[j] = p^j`.
        powers: Vec<Natural>,
        base: GeneratorPowers,
        stack: Vec<LiftFrame>,
    },
}

/// Primitive roots of one modulus in lift-chain order: for each root of the
/// prime (in generator-power order), its lifts depth-first by ascending `t`.
/// Memory stays proportional to `k`, not to the number of roots.
pub struct RootStream {
    modulus: Natural,
    count: Natural,
    source: StreamSource,
}

impl RootStream {
    pub fn modulus(&self) -> &Natural {
        &self.modulus
    }

    /// Number of roots the stream will yield, `phi(phi(n))`.
    pub fn root_count(&self) -> &Natural {
        &self.count
    }
}

impl Iterator for RootStream {
    type Item = Natural;

    fn next(&mut self) -> Option<Natural> {
        let (p, k, twice_pk, powers, base, stack) = match &mut self.source {
            StreamSource::Fixed(it) => return it.next(),
            StreamSource::Chain { p, k, twice, powers, base, stack } => (p, *k, twice, powers, base, stack),
        };
        let twice_pk = twice_pk.as_ref();
        let emit = |r: Natural| match twice_pk {
            Some(pk) => twice(&r, pk),
            None => r,
        };
        loop {
            let Some(frame) = stack.last_mut() else {
                let g = base.next()?;
                if k == 1 {
                    return Some(emit(g));
                }
                let skip = exceptional_offset(&g, p);
                stack.push(LiftFrame { level: 2, base: g, step: p.clone(), t: Natural::zero(), skip: Some(skip) });
                continue;
            };
            if frame.skip.as_ref() == Some(&frame.t) {
                frame.t += 1u32;
            }
            if &frame.t >= p {
                stack.pop();
                continue;
            }
            let r = &frame.base + &frame.t * &frame.step;
            frame.t += 1u32;
            if frame.level == k {
                return Some(emit(r));
            }
            let level = frame.level;
            stack.push(LiftFrame {
                level: level + 1,
                base: r,
                step: powers[level as usize].clone(),
                t: Natural::zero(),
                skip: None,
            });
        }
    }
}

/// Streams every primitive root of `n` without materializing the set.
pub fn stream_roots(n: &Natural) -> Result<RootStream> {
    let class = classify_modulus(n)?;
    let fixed = |roots: Vec<u32>| {
        let roots: Vec<Natural> = roots.into_iter().map(Natural::from).collect();
        RootStream {
            modulus: n.clone(),
            count: Natural::from(roots.len()),
            source: StreamSource::Fixed(roots.into_iter()),
        }
    };
    let (p, k, is_twice) = match class {
        ModulusClass::One | ModulusClass::Two => return Ok(fixed(vec![1])),
        ModulusClass::Four => return Ok(fixed(vec![3])),
        ModulusClass::OddPrimePower { p, k } => (p, k, false),
        ModulusClass::TwiceOddPrimePower { p, k } => (p, k, true),
        ModulusClass::NoPrimitiveRoots => {
            let fac = factorize(n)?;
            return Err(Error::NoPrimitiveRoots { n: n.clone(), factorization: fac.to_string() });
        }
    };
    let powers: Vec<Natural> = (0..=k).map(|j| num_traits::pow(p.clone(), j as usize)).collect();
    let g = smallest_primitive_root(&p)?;
    let base = GeneratorPowers::new(&g, &p)?;
    let count = phi_of(&factorize(n)?.totient());
    Ok(RootStream {
        modulus: n.clone(),
        count,
        source: StreamSource::Chain {
            twice: is_twice.then(|| powers[k as usize].clone()),
            p,
            k,
            powers,
            base,
            stack: Vec::new(),
        },
    })
}

/// All primitive roots of `n`, sorted, refusing sets larger than `ceiling`.
pub fn enumerate_with_ceiling(n: &Natural, ceiling: &Natural) -> Result<PrimitiveRootSet> {
    let stream = stream_roots(n)?;
    if stream.root_count() > ceiling {
        return Err(Error::TooManyRoots { n: n.clone(), count: stream.root_count().clone(), ceiling: ceiling.clone() });
    }
    let modulus = stream.modulus().clone();
    let mut roots: Vec<Natural> = stream.collect();
    roots.sort();
    Ok(PrimitiveRootSet::from_sorted_unchecked(modulus, roots))
}

/// All primitive roots of `n`, sorted, built by lifting from the roots of the prime.
pub fn enumerate(n: &Natural) -> Result<PrimitiveRootSet> {
    enumerate_with_ceiling(n, &Natural::from(DEFAULT_ROOT_CEILING))
}
