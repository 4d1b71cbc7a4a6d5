//! Constructive enumeration of primitive roots.
//!
//! Primitive roots of a prime are obtained from one generator; those of `p^2`
//! come from the roots of `p` by skipping one exceptional offset per root;
//! every higher odd prime power is reached by adding multiples of `p^k`
//! without exceptions; and `2p^k` follows by a parity rule. A general
//! Hensel-lifting solver for polynomial congruences modulo prime powers and a
//! brute-force oracle are included for verification.
//!
//! All scalars are unbounded integers ([`Natural`]).

pub mod construct;
pub mod error;
pub mod hensel;
pub mod modarith;
pub mod oracle;
pub mod orders;
pub mod serde_decimal;

pub use construct::{
    enumerate, enumerate_with_ceiling, exceptional_t, from_generator, lift_power,
    lift_prime_to_square, smallest_primitive_root, stream_roots, to_twice_prime_power,
    PrimitiveRootSet, RootStream, DEFAULT_ROOT_CEILING,
};
pub use error::{Error, Result};
pub use hensel::{derivative, eval_mod, lift_solution, solve_prime_power, LiftOutcome, Polynomial};
pub use modarith::{
    euler_phi, factorize, gcd, is_prime, mod_inverse, parse_natural, pow_mod, Factorization,
    Natural,
};
pub use oracle::{brute_congruence_solutions, brute_primitive_roots, DEFAULT_ORACLE_CEILING};
pub use orders::{classify_modulus, count_primitive_roots, is_primitive_root, order, ModulusClass};
