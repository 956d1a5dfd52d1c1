use thiserror::Error;

/// Everything that can go wrong: bad parameters from the caller, or a broken
/// internal invariant (which should never happen and is reported separately).
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// The modulus must be an odd prime in [3, 2^31) so that sums and products
    /// of residues fit comfortably in 64 bits.
    #[error("modulus {0} is outside the supported range of odd primes 3 <= p < 2^31")]
    ModulusOutOfRange(u64),

    #[error("class count {n} does not divide p - 1 = {pm1}")]
    NotDivisor { n: usize, pm1: u64 },

    #[error("{g} is not a primitive root modulo {p}")]
    NotPrimitiveRoot { g: u64, p: u64 },

    /// Class indices are stored in single bytes; one value is reserved for the
    /// zero residue, so at most 255 classes are supported.
    #[error("class count {0} exceeds the supported maximum of 255")]
    TooManyClasses(usize),

    #[error("coset size {0} is odd; the symmetric classifier requires an even coset size")]
    NotSymmetric(usize),

    #[error("not an asymmetric instance: {0}")]
    NotAsymmetric(String),

    /// The sum of two classes must either contain a class entirely or miss it
    /// entirely. A partial overlap means the classifier itself is broken.
    #[error("sum of classes 0 and {i} covers class {j} only partially")]
    PartialCover { i: usize, j: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors that signal a broken internal invariant rather than bad
    /// input; the CLI maps these to a distinct exit code.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::PartialCover { .. })
    }
}
