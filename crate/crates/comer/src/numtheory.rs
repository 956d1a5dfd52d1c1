//! Exact integer and modular arithmetic: primality, factorization, modular
//! exponentiation, and primitive roots.
//!
//! Everything here is deterministic trial-division-grade arithmetic. The
//! moduli this crate works with stay far below 2^31, so there is no need for
//! probabilistic primality tests or clever factoring.

use crate::error::Error;

/// Deterministic primality by trial division up to the square root.
pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    if m < 4 {
        return true;
    }
    if m % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d <= m / d {
        if m % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs with strictly increasing
/// primes.
///
/// # Panics
///
/// Panics if `m < 2`; units have no factorization into primes.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    assert!(m >= 2, "factorize requires m >= 2, got {m}");
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d <= m / d {
        if m % d == 0 {
            let mut exp = 0u32;
            while m % d == 0 {
                m /= d;
                exp += 1;
            }
            factors.push((d, exp));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    factors
}

/// A validated odd prime modulus in [3, 2^31).
///
/// The upper bound keeps every residue sum below 2^32 and every residue
/// product below 2^62, so plain `u64` arithmetic never overflows and `u128`
/// is needed only inside [`pow_mod`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    /// Largest accepted modulus, 2^31 - 1 (itself prime, conveniently).
    pub const MAX: u64 = (1 << 31) - 1;

    pub fn new(p: u64) -> Result<Self, Error> {
        if p < 3 || p > Self::MAX {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }
}

/// base^exponent mod p by square-and-multiply, intermediates in u128.
pub fn pow_mod(base: u64, exponent: u64, modulus: PrimeModulus) -> u64 {
    let p = modulus.get() as u128;
    debug_assert!((base as u128) < p, "base must be reduced mod p");
    let mut result = 1u128;
    let mut b = base as u128;
    let mut e = exponent;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    result as u64
}

/// Does g generate the full multiplicative group mod p?
///
/// g generates iff g^((p-1)/q) != 1 for every prime q dividing p - 1. Values
/// outside [2, p-1] are rejected outright: 0 and 1 generate nothing, and
/// callers are expected to pass reduced residues.
pub fn is_primitive_root(g: u64, modulus: PrimeModulus) -> bool {
    let p = modulus.get();
    if g < 2 || g >= p {
        return false;
    }
    factorize(p - 1)
        .iter()
        .all(|&(q, _)| pow_mod(g, (p - 1) / q, modulus) != 1)
}

/// The least primitive root, found by scanning upward from 2.
///
/// Scanning from 2 makes the result reproducible across runs and machines;
/// the construction downstream does not depend on which root is chosen, but
/// fixed outputs make golden tests possible.
pub fn smallest_primitive_root(modulus: PrimeModulus) -> u64 {
    let p = modulus.get();
    let factors = factorize(p - 1);
    (2..p)
        .find(|&g| {
            factors
                .iter()
                .all(|&(q, _)| pow_mod(g, (p - 1) / q, modulus) != 1)
        })
        .expect("every prime has a primitive root")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_basics() {
        assert!(is_prime(113));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(!is_prime(4));
        assert!(is_prime(15013));
        assert!(!is_prime(15015));
        assert!(is_prime(2147483647)); // 2^31 - 1, the Mersenne prime
    }

    #[test]
    fn primality_agrees_with_sieve_below_10000() {
        let limit = 10_000usize;
        let mut composite = vec![false; limit + 1];
        for d in 2..=limit {
            if !composite[d] {
                let mut m = d * d;
                while m <= limit {
                    composite[m] = true;
                    m += d;
                }
            }
        }
        for m in 0..=limit {
            assert_eq!(is_prime(m as u64), m >= 2 && !composite[m], "m = {m}");
        }
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(112), vec![(2, 4), (7, 1)]);
        assert_eq!(factorize(2), vec![(2, 1)]);
        assert_eq!(factorize(70), vec![(2, 1), (5, 1), (7, 1)]);
        assert_eq!(factorize(1024), vec![(2, 10)]);
        assert_eq!(factorize(9999991), vec![(9999991, 1)]); // large prime tail
    }

    #[test]
    #[should_panic(expected = "factorize requires m >= 2")]
    fn factorize_rejects_units() {
        factorize(1);
    }

    #[test]
    fn modulus_validation() {
        assert!(PrimeModulus::new(3).is_ok());
        assert!(PrimeModulus::new(2147483647).is_ok());
        assert!(matches!(PrimeModulus::new(2), Err(Error::ModulusOutOfRange(2))));
        assert!(matches!(PrimeModulus::new(0), Err(Error::ModulusOutOfRange(0))));
        assert!(matches!(PrimeModulus::new(112), Err(Error::NotPrime(112))));
        assert!(matches!(
            PrimeModulus::new(1 << 31),
            Err(Error::ModulusOutOfRange(_))
        ));
    }

    #[test]
    fn pow_mod_examples() {
        let p113 = PrimeModulus::new(113).unwrap();
        assert_eq!(pow_mod(3, 0, p113), 1);
        assert_eq!(pow_mod(3, 112, p113), 1); // order divides p - 1
        let p71 = PrimeModulus::new(71).unwrap();
        assert_eq!(pow_mod(7, 1, p71), 7);
        // near the modulus ceiling, where u64-only arithmetic would overflow
        let big = PrimeModulus::new(2147483647).unwrap();
        assert_eq!(pow_mod(2147483646, 2, big), 1); // (-1)^2
        assert_eq!(pow_mod(2, 2147483646, big), 1);
    }

    #[test]
    fn smallest_roots_match_known_values() {
        for (p, g) in [(3, 2), (5, 2), (13, 2), (71, 7), (113, 3)] {
            let modulus = PrimeModulus::new(p).unwrap();
            assert_eq!(smallest_primitive_root(modulus), g, "p = {p}");
        }
    }

    #[test]
    fn primitive_root_check() {
        let p13 = PrimeModulus::new(13).unwrap();
        assert!(is_primitive_root(2, p13));
        assert!(is_primitive_root(6, p13));
        assert!(!is_primitive_root(4, p13)); // order 6
        assert!(!is_primitive_root(0, p13));
        assert!(!is_primitive_root(1, p13));
        assert!(!is_primitive_root(13, p13));
    }

    #[test]
    fn smallest_root_generates_full_group_below_10000() {
        for p in (3..10_000u64).filter(|&p| is_prime(p)) {
            let modulus = PrimeModulus::new(p).unwrap();
            let g = smallest_primitive_root(modulus);
            let mut seen = vec![false; p as usize];
            let mut power = 1u64;
            let mut count = 0u64;
            for _ in 0..p - 1 {
                if !seen[power as usize] {
                    seen[power as usize] = true;
                    count += 1;
                }
                power = power * g % p;
            }
            assert_eq!(count, p - 1, "g = {g} does not generate mod {p}");
            assert_eq!(power, 1);
        }
    }
}
