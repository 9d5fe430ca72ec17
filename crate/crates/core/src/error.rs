use thiserror::Error;

/// Errors for construction, budget, and cross-validation failures.
///
/// `Verification` is special: it means two routes that a theorem says must
/// agree (closed form vs. brute force) disagreed. It always names the
/// violated property and the witness input.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("modulus must be even and at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: u64, modulus: u64 },

    #[error("dichotomy mask {mask:#x} has {got} points set, expected {expected} (mod {modulus})")]
    WrongPopcount { mask: u64, got: u32, expected: u32, modulus: u64 },

    #[error("dichotomy mask {mask:#x} has bits at or above position {modulus}")]
    MaskOutOfRange { mask: u64, modulus: u64 },

    #[error("degree {0} exceeds the 64-point limit for bit-mask dichotomies")]
    DegreeTooLarge(usize),

    #[error("images {0:?} are not a bijection on 0..{1}")]
    NotABijection(Vec<usize>, usize),

    #[error("permutation degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },

    #[error("symmetric group is limited to degree {max}, got {got}")]
    SymmetricDegreeTooLarge { got: u64, max: u64 },

    #[error("dihedral group on Z_n needs n >= 4, got {0}")]
    DihedralDegenerate(u64),

    #[error("element is not a member of the group")]
    NotInGroup,

    #[error("map {0} is not a quasipolarity (needs to be an involution without fixed points)")]
    NotAQuasipolarity(String),

    #[error("n = {n} exceeds the {strategy} enumeration budget of n <= {max_n} (override with --budget or ANTICHAIN_BUDGET)")]
    BudgetExceeded { n: u64, max_n: u64, strategy: &'static str },

    #[error("the via-Mq strategy requires the affine group on Z_n")]
    StrategyNeedsAffine,

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("golden file is malformed at line {line}: {reason}")]
    MalformedGolden { line: usize, reason: String },

    #[error("verification failure: {property} (witness: {witness})")]
    Verification { property: String, witness: String },
}

impl Error {
    pub(crate) fn verification(property: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::Verification { property: property.into(), witness: witness.into() }
    }

    /// True when the error is a cross-validation failure rather than bad input.
    pub fn is_verification(&self) -> bool {
        matches!(self, Error::Verification { .. })
    }
}
