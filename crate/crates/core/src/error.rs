use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 1")]
    ZeroModulus,

    #[error("modulus {modulus} is too small, need at least {min}")]
    ModulusTooSmall { modulus: BigUint, min: u32 },

    #[error("{what} must be positive, got 0")]
    ZeroArgument { what: &'static str },

    #[error("{a} is not invertible modulo {modulus} (gcd = {gcd})")]
    NotInvertible { a: BigUint, modulus: BigUint, gcd: BigUint },

    #[error("{a} is not coprime to {modulus} (gcd = {gcd})")]
    NotCoprime { a: BigUint, modulus: BigUint, gcd: BigUint },

    #[error("{0} is not prime")]
    NotPrime(BigUint),

    #[error("expected an odd prime, got 2")]
    EvenPrime,

    #[error("{g} is not a primitive root of {modulus}")]
    NotPrimitiveRoot { g: BigUint, modulus: BigUint },

    #[error("{value} is outside the residue range [1, {modulus})")]
    OutOfRange { value: BigUint, modulus: BigUint },

    #[error("{n} = {factorization} has no primitive roots")]
    NoPrimitiveRoots { n: BigUint, factorization: String },

    #[error("lift_power needs k >= 2 (got k = {k}); use lift_prime_to_square to go from p to p^2")]
    LiftDepth { k: u32 },

    #[error("{x0} is not a solution of f(x) = 0 mod {modulus}")]
    NotASolution { x0: BigUint, modulus: BigUint },

    #[error("refusing to scan modulus {n}: exceeds oracle ceiling {ceiling}")]
    OracleCeiling { n: BigUint, ceiling: BigUint },

    #[error("{n} has {count} primitive roots, above the ceiling of {ceiling}; use streaming output")]
    TooManyRoots { n: BigUint, count: BigUint, ceiling: BigUint },

    #[error("invalid natural number {0:?}: expected ASCII decimal digits")]
    ParseNatural(String),

    #[error("invalid polynomial {input:?}: {reason}")]
    ParsePolynomial { input: String, reason: String },
}
