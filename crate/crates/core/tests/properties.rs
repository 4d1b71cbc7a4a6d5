use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;
use rand::{rngs::StdRng, Rng, SeedableRng};

use primroots::{
    brute_primitive_roots, classify_modulus, count_primitive_roots, enumerate, euler_phi,
    exceptional_t, factorize, from_generator, is_prime, is_primitive_root, lift_prime_to_square,
    lift_solution, mod_inverse, order, pow_mod, solve_prime_power, stream_roots, LiftOutcome,
    ModulusClass, Natural, Polynomial, DEFAULT_ORACLE_CEILING,
};

fn n(v: u64) -> Natural {
    Natural::from(v)
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn odd_primes_upto(limit: u64) -> Vec<u64> {
    (3..=limit).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)).collect()
}

#[test]
fn euler_phi_matches_coprime_count() {
    for m in 1..=10_000u64 {
        let count = (1..=m).filter(|&a| gcd_u64(a, m) == 1).count() as u64;
        assert_eq!(euler_phi(&n(m)).unwrap(), n(count), "n = {m}");
    }
}

#[test]
fn factorize_reassembles_small_range() {
    for m in 1..=100_000u64 {
        let fac = factorize(&n(m)).unwrap();
        assert_eq!(fac.value(), n(m));
    }
}

#[test]
fn factorize_reassembles_random_u64() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let m: u64 = rng.gen_range(1..=u64::MAX);
        let fac = factorize(&n(m)).unwrap();
        assert_eq!(fac.value(), n(m));
        assert!(fac.primes().all(is_prime), "{m} = {fac}");
        assert!(fac.factors().windows(2).all(|w| w[0].0 < w[1].0));
    }
}

#[test]
fn pow_mod_matches_repeated_multiplication() {
    for modulus in 1..100u64 {
        for base in 0..50u64 {
            let mut acc = 1 % modulus;
            for exp in 0..50u64 {
                assert_eq!(pow_mod(&n(base), &n(exp), &n(modulus)).unwrap(), n(acc));
                acc = acc * base % modulus;
            }
        }
    }
}

proptest! {
    #[test]
    fn euler_theorem(a in 0u64..1_000_000, m in 1u64..1_000_000) {
        prop_assume!(gcd_u64(a, m) == 1);
        let phi = euler_phi(&n(m)).unwrap();
        prop_assert_eq!(pow_mod(&n(a), &phi, &n(m)).unwrap(), n(1 % m));
    }

    #[test]
    fn inverse_multiplies_to_one(a in 1u64..u64::MAX, m in 2u64..u64::MAX) {
        prop_assume!(gcd_u64(a, m) == 1);
        let inv = mod_inverse(&n(a), &n(m)).unwrap();
        prop_assert!(inv >= n(1) && inv < n(m));
        prop_assert_eq!(pow_mod(&(n(a) * inv), &n(1), &n(m)).unwrap(), n(1));
    }

    #[test]
    fn decimal_round_trip(digits in "[1-9][0-9]{0,60}") {
        let v = primroots::parse_natural(&digits).unwrap();
        prop_assert_eq!(v.to_string(), digits);
    }

    #[test]
    fn order_divides_phi_and_is_minimal(a in 1u64..2000, m in 1u64..2000) {
        prop_assume!(gcd_u64(a, m) == 1);
        let ord = order(&n(a), &n(m)).unwrap().to_u64().unwrap();
        let phi = euler_phi(&n(m)).unwrap().to_u64().unwrap();
        prop_assert_eq!(phi % ord, 0);
        let mut x = a % m;
        let mut naive = 1;
        while x != 1 % m {
            x = x * a % m;
            naive += 1;
        }
        prop_assert_eq!(ord, naive);
    }

    #[test]
    fn multiple_lift_is_every_residue_above(coeffs in prop::collection::vec(-20i64..=20, 1..7), p in prop::sample::select(vec![2u64, 3, 5, 7]), k in 1u32..4) {
        let f = Polynomial::from_i64s(&coeffs);
        let pk = p.pow(k);
        for x0 in solve_prime_power(&f, &n(p), k).unwrap() {
            let outcome = lift_solution(&f, &x0, &n(p), k).unwrap();
            if let LiftOutcome::MultipleLift { solutions } = &outcome {
                let expected: Vec<_> = (0..p).map(|t| &x0 + n(t * pk)).collect();
                prop_assert_eq!(solutions, &expected);
            }
            for x1 in outcome.solutions() {
                prop_assert_eq!(&x1 % n(pk), x0.clone());
            }
        }
    }
}

#[test]
fn oracle_finds_roots_iff_classification_allows() {
    let ceiling = n(DEFAULT_ORACLE_CEILING);
    for m in 1..=2000u64 {
        let brute = brute_primitive_roots(&n(m), &ceiling).unwrap();
        let class = classify_modulus(&n(m)).unwrap();
        assert_eq!(brute.is_empty(), class == ModulusClass::NoPrimitiveRoots, "n = {m}");
        if class.has_primitive_roots() {
            assert_eq!(count_primitive_roots(&n(m)).unwrap(), n(brute.len() as u64));
        }
    }
}

#[test]
fn exceptional_value_is_the_only_failure() {
    for p in odd_primes_upto(100) {
        let p2 = n(p * p);
        for g in 1..p {
            if !is_primitive_root(&n(g), &n(p)) {
                continue;
            }
            let t_ex = exceptional_t(&n(g), &n(p)).unwrap().to_u64().unwrap();
            for t in 0..p {
                let x = n(g + t * p);
                assert_eq!(is_primitive_root(&x, &p2), t != t_ex, "p = {p}, g = {g}, t = {t}");
            }
            // The excluded value solves x^(p-1) = 1 mod p^2.
            let x = n(g + t_ex * p);
            assert!(pow_mod(&x, &n(p - 1), &p2).unwrap().is_one());
        }
    }
}

#[test]
fn one_of_g_and_g_plus_p_lifts_to_square() {
    for p in std::iter::once(2).chain(odd_primes_upto(200)) {
        let p2 = n(p * p);
        for g in 1..p {
            if is_primitive_root(&n(g), &n(p)) {
                assert!(
                    is_primitive_root(&n(g), &p2) || is_primitive_root(&n(g + p), &p2),
                    "p = {p}, g = {g}"
                );
            }
        }
    }
}

#[test]
fn roots_of_square_stay_roots_of_higher_powers() {
    for p in odd_primes_upto(50) {
        let p2 = p * p;
        for g in 1..p2 {
            if !is_primitive_root(&n(g), &n(p2)) {
                continue;
            }
            let mut pk = p2 * p;
            while pk <= 1_000_000 {
                assert!(is_primitive_root(&n(g), &n(pk)), "g = {g}, modulus {pk}");
                pk *= p;
            }
        }
    }
}

#[test]
fn square_lifts_of_all_roots_are_distinct_and_complete() {
    for p in odd_primes_upto(60) {
        let roots_p = enumerate(&n(p)).unwrap();
        let mut lifted: Vec<BigUint> =
            roots_p.roots().iter().flat_map(|g| lift_prime_to_square(g, &n(p)).unwrap()).collect();
        let total = lifted.len();
        lifted.sort();
        lifted.dedup();
        assert_eq!(lifted.len(), total, "duplicate lift for p = {p}");
        assert_eq!(lifted, enumerate(&n(p * p)).unwrap().into_roots());
    }
}

#[test]
fn stream_matches_enumerate_as_sets() {
    for m in 1..=3000u64 {
        let Ok(stream) = stream_roots(&n(m)) else {
            continue;
        };
        let expected_count = stream.root_count().clone();
        let mut streamed: Vec<_> = stream.collect();
        assert_eq!(n(streamed.len() as u64), expected_count);
        streamed.sort();
        assert_eq!(streamed, enumerate(&n(m)).unwrap().into_roots(), "n = {m}");
    }
}

#[test]
fn enumerate_large_prime_power() {
    // 7^6 = 117649 has phi(phi) = 7^4 * phi(6) * 6 = 28812 roots.
    let m = n(7u64.pow(6));
    let set = enumerate(&m).unwrap();
    assert_eq!(n(set.len() as u64), count_primitive_roots(&m).unwrap());
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..200 {
        let r = &set.roots()[rng.gen_range(0..set.len())];
        assert!(is_primitive_root(r, &m));
    }
    assert!(set.roots().iter().all(|r| !r.is_zero() && r < &m));
}

#[test]
fn from_generator_with_every_root_agrees() {
    for m in [9u64, 25, 27, 49, 50, 81, 98, 121, 162, 250, 343] {
        let expected = enumerate(&n(m)).unwrap();
        for g in expected.roots() {
            assert_eq!(from_generator(g, &n(m)).unwrap(), expected, "n = {m}, g = {g}");
        }
    }
}
