//! Randomized invariants over the whole instance space the library accepts.
//! Deterministic unit tests pin known values; these pin the laws that must
//! hold everywhere: oracle agreement, group-theoretic symmetries, and the
//! algebra of the equivalence maps.

use std::sync::OnceLock;

use proptest::prelude::*;

use comer::cycles::{classify, classify_naive, sumset, Cycle};
use comer::equivalence::{involution_image, orbit, shift_cycle};
use comer::numtheory::{factorize, is_prime, is_primitive_root, pow_mod, PrimeModulus};
use comer::{build_coset_table, make_parameters, CosetTable, Parameters};

/// Every valid (p, n) with p <= 500 and n <= 30 — the same shape of pool the
/// oracle-equivalence sweep uses, kept small enough that the quadratic oracle
/// stays cheap inside a 256-case property run.
fn instance_pool() -> &'static [(u64, usize)] {
    static POOL: OnceLock<Vec<(u64, usize)>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut pool = Vec::new();
        for p in (3..=500u64).filter(|&p| is_prime(p)) {
            for n in 1..=30usize {
                if (p - 1) % n as u64 == 0 {
                    pool.push((p, n));
                }
            }
        }
        pool
    })
}

fn instances() -> impl Strategy<Value = (u64, usize)> {
    prop::sample::select(instance_pool())
}

/// An instance plus two class indices, which most grid properties need.
fn instance_with_pair() -> impl Strategy<Value = ((u64, usize), usize, usize)> {
    instances().prop_flat_map(|(p, n)| (Just((p, n)), 0..n, 0..n))
}

fn table(p: u64, n: usize) -> CosetTable {
    build_coset_table(params(p, n))
}

fn params(p: u64, n: usize) -> Parameters {
    make_parameters(p, n, None).unwrap()
}

proptest! {
    #[test]
    fn fast_classifier_agrees_with_naive_oracle((p, n) in instances()) {
        let t = table(p, n);
        prop_assert_eq!(classify(&t), classify_naive(&t).unwrap());
    }

    #[test]
    fn pow_mod_turns_exponent_sums_into_products(
        (p, _) in instances(),
        base in 0u64..500,
        x in 0u64..1_000_000,
        y in 0u64..1_000_000,
    ) {
        let modulus = PrimeModulus::new(p).unwrap();
        let base = base % p;
        let product = pow_mod(base, x, modulus) * pow_mod(base, y, modulus) % p;
        prop_assert_eq!(pow_mod(base, x + y, modulus), product);
    }

    #[test]
    fn factorize_recomposes_its_input(m in 1u64..10_000_000) {
        let factors = factorize(m);
        let recomposed: u64 = factors.iter().map(|&(q, e)| q.pow(e)).product();
        prop_assert_eq!(recomposed, m);
        prop_assert!(factors.iter().all(|&(q, e)| is_prime(q) && e >= 1));
        prop_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn involution_applied_twice_is_the_identity(
        half in 1usize..128,
        b in 0usize..256,
        c in 0usize..256,
    ) {
        let n = 2 * half;
        let cycle = Cycle::new(0, b % n, c % n);
        let once = involution_image(n, cycle).unwrap();
        prop_assert_eq!(involution_image(n, once).unwrap(), cycle);
    }

    #[test]
    fn shifts_invert_and_renormalize(
        n in 1usize..256,
        b in 0usize..256,
        c in 0usize..256,
        s in 0usize..256,
    ) {
        let cycle = Cycle::new(0, b % n, c % n);
        let (s, shifted) = (s % n, shift_cycle(n, cycle, s % n));
        prop_assert_eq!(shift_cycle(n, shifted, n - s), cycle);
        // shifting by the negated leading index renormalizes any triple
        prop_assert_eq!(shift_cycle(n, shifted, (n - shifted.a) % n).a, 0);
    }

    #[test]
    fn sumset_is_commutative(((p, n), i, j) in instance_with_pair()) {
        let t = table(p, n);
        prop_assert_eq!(sumset(&t, i, j).members(), sumset(&t, j, i).members());
    }

    #[test]
    fn orbit_members_share_the_oracle_status(((p, n), i, j) in instance_with_pair()) {
        let t = table(p, n);
        let structure = classify_naive(&t).unwrap();
        let status = structure.status(i, j);
        for member in orbit(t.params(), Cycle::new(0, i, j)).members {
            prop_assert_eq!(structure.status(member.b, member.c), status);
        }
    }

    #[test]
    fn orbits_canonicalize_idempotently(((p, n), i, j) in instance_with_pair()) {
        let ps = params(p, n);
        let orb = orbit(&ps, Cycle::new(0, i, j));
        prop_assert!(orb.members.contains(&Cycle::new(0, i, j)));
        prop_assert!(orb.members.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(orb.members[0], orb.canon);
        // the orbit is already closed: every member names the same orbit
        for &member in &orb.members {
            prop_assert_eq!(&orbit(&ps, member), &orb);
        }
    }

    #[test]
    fn class_negation_is_an_involution_with_parity_shape(
        ((p, n), i, _) in instance_with_pair(),
    ) {
        let t = table(p, n);
        let neg = t.negate_class(i);
        prop_assert_eq!(t.negate_class(neg), i);
        if t.params().symmetric {
            prop_assert_eq!(neg, i);
        } else {
            prop_assert_eq!(neg, (i + n / 2) % n);
        }
    }

    #[test]
    fn forbidden_count_is_generator_independent((p, n) in instances()) {
        let modulus = PrimeModulus::new(p).unwrap();
        let default = params(p, n);
        // the next primitive root after the default; p = 3 has only one
        if let Some(other) = (default.g + 1..p).find(|&g| is_primitive_root(g, modulus)) {
            let relabeled = make_parameters(p, n, Some(other)).unwrap();
            let base_count = classify(&build_coset_table(default)).forbidden_cells().len();
            let other_count = classify(&build_coset_table(relabeled)).forbidden_cells().len();
            prop_assert_eq!(base_count, other_count);
        }
    }
}
