//! Instance construction: validate (p, n), derive the coset size k and the
//! generator g, and materialize the power cosets of Z/pZ.
//!
//! For a prime p = nk + 1 and a primitive root g, the nonzero residues split
//! into n classes
//!
//! ```text
//! X_i = { g^(an + i) : 0 <= a < k },
//! ```
//!
//! each of size k. X_0 is the subgroup of n-th power residues and
//! X_i = g^i · X_0 its cosets. The whole construction below is one pass over
//! the powers of g, recording for every residue which class it landed in, so
//! later membership questions are a single array lookup.

use crate::error::Error;
use crate::numtheory::{is_primitive_root, smallest_primitive_root, PrimeModulus};

/// Reserved `class_index` value for the residue 0, which lies in no coset.
pub const IDENTITY_CLASS: u8 = u8::MAX;

/// Class indices live in a byte alongside the [`IDENTITY_CLASS`] sentinel.
pub const MAX_CLASSES: usize = 255;

/// One validated instance: p = nk + 1 prime, g a primitive root mod p.
///
/// Construct through [`make_parameters`]; the fields are read everywhere
/// downstream and trusted to be consistent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Parameters {
    pub p: u64,
    /// Number of classes (index of the subgroup X_0).
    pub n: usize,
    /// Size of each class, k = (p - 1) / n.
    pub k: usize,
    /// Generator of the multiplicative group.
    pub g: u64,
    /// True iff k is even, in which case every class satisfies X_i = -X_i.
    pub symmetric: bool,
}

/// Validate (p, n), fix the generator, and derive k and the symmetry flag.
///
/// With no override the generator is the smallest primitive root, which makes
/// outputs reproducible; an explicit `g_override` is checked before use.
pub fn make_parameters(p: u64, n: usize, g_override: Option<u64>) -> Result<Parameters, Error> {
    let modulus = PrimeModulus::new(p)?;
    if n == 0 || (p - 1) % n as u64 != 0 {
        return Err(Error::NotDivisor { n, pm1: p - 1 });
    }
    if n > MAX_CLASSES {
        return Err(Error::TooManyClasses(n));
    }
    let k = ((p - 1) / n as u64) as usize;
    let g = match g_override {
        Some(g) => {
            if !is_primitive_root(g, modulus) {
                return Err(Error::NotPrimitiveRoot { g, p });
            }
            g
        }
        None => smallest_primitive_root(modulus),
    };
    // p - 1 is even, so k and n cannot both be odd
    debug_assert!(k % 2 == 0 || n % 2 == 0);
    Ok(Parameters {
        p,
        n,
        k,
        g,
        symmetric: k % 2 == 0,
    })
}

/// The materialized classes plus a dense residue -> class lookup.
///
/// `class_index` is a length-p byte array rather than a hash map: the fast
/// classifier's linear running time rests on membership being one indexed
/// load, and a byte per residue keeps even the largest supported instance
/// affordable.
#[derive(Clone, Debug)]
pub struct CosetTable {
    params: Parameters,
    /// All n classes back to back, k residues each, so `class(i)` is a slice
    /// into one allocation.
    classes: Vec<u64>,
    class_index: Vec<u8>,
}

/// Build the table in one pass over the powers of g.
///
/// Walking e = 0..p-2 with a running power assigns g^e to class e mod n, so
/// class i holds exactly {g^(an+i)} in increasing-exponent order; in
/// particular `class(i)[0] = g^i`.
pub fn build_coset_table(params: Parameters) -> CosetTable {
    let p = params.p;
    let n = params.n as u64;
    let k = params.k as u64;
    let mut classes = vec![0u64; (p - 1) as usize];
    let mut class_index = vec![IDENTITY_CLASS; p as usize];
    let mut power = 1u64;
    for e in 0..p - 1 {
        let class = e % n;
        classes[(class * k + e / n) as usize] = power;
        class_index[power as usize] = class as u8;
        power = power * params.g % p;
    }
    debug_assert_eq!(power, 1, "g^(p-1) must return to 1");
    CosetTable {
        params,
        classes,
        class_index,
    }
}

impl CosetTable {
    pub fn params(&self) -> &Parameters {
        &self.params
    }

    /// The residues of X_i, in increasing-exponent order (first entry g^i).
    pub fn class(&self, i: usize) -> &[u64] {
        &self.classes[i * self.params.k..(i + 1) * self.params.k]
    }

    /// All classes in index order; `classes().nth(i)` equals `class(i)`.
    pub fn classes(&self) -> std::slice::ChunksExact<'_, u64> {
        self.classes.chunks_exact(self.params.k)
    }

    /// Raw class byte for a residue r < p; 0 maps to [`IDENTITY_CLASS`].
    /// This is the hot lookup of the fast classifier.
    #[inline]
    pub fn raw_class(&self, r: u64) -> u8 {
        self.class_index[r as usize]
    }

    /// Class of a nonzero residue, or None for r = 0.
    pub fn class_of(&self, r: u64) -> Option<usize> {
        match self.raw_class(r) {
            IDENTITY_CLASS => None,
            class => Some(class as usize),
        }
    }

    /// The class holding -X_i. Negating any single element suffices since
    /// -X_i is itself a class: the identity i when k is even, and the class
    /// half a turn away, (i + n/2) mod n, when k is odd.
    pub fn negate_class(&self, i: usize) -> usize {
        let x = self.class(i)[0];
        self.raw_class(self.params.p - x) as usize
    }
}
