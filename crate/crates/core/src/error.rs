use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// Errors fall into three classes (see [`Error::class`]): malformed input,
/// mathematically inadmissible input, and enumeration caps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed exponent in token `{0}`")]
    MalformedExponent(String),
    #[error("zero exponent in token `{0}`")]
    ZeroExponent(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),

    #[error("no normal form is defined for free groups")]
    NoNormalForm,
    #[error("generator arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("generators {found:?} do not match the family's generators {expected:?}")]
    GeneratorNames { expected: Vec<String>, found: Vec<String> },
    #[error("operands belong to different group families")]
    FamilyMismatch,
    #[error("matrix is not square ({rows} rows, row of length {cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is not hermitian (entry ({0},{1}) differs from the conjugate of ({1},{0}))")]
    NotHermitian(usize, usize),
    #[error("at most one summand may be the augmentation ideal")]
    DuplicateAugmentationSummand,
    #[error("form has no augmentation-ideal summand")]
    NoAugmentationSummand,
    #[error("entry ({0},{1}) is not an integer multiple of the identity")]
    NonIntegerEntry(usize, usize),
    #[error("sigma = 0 admits only gamma = 0")]
    SigmaGammaConflict,
    #[error("presentation is not square ({generators} generators, {relators} relators)")]
    NonSquarePresentation { generators: usize, relators: usize },
    #[error("gamma does not vanish on relator {0}, so it is not a homomorphism to Z/2")]
    GammaNotHomomorphism(usize),
    #[error("w must be nonzero for an almost spin type")]
    ZeroW,
    #[error("inconsistent target: {0}")]
    InconsistentTarget(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("bilinear form is degenerate")]
    Degenerate,
    #[error("bilinear form is not alternating")]
    NotAlternating,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("generator {0} is not invertible")]
    NotInvertible(usize),
    #[error("subset is not closed under the action")]
    SubsetNotClosed,

    #[error("signature {signature} is not divisible by {modulus}")]
    SignatureDivisibility { signature: i64, modulus: i64 },
    #[error("even form requires a tau class")]
    MissingTau,
    #[error("tau class supplied for an odd form")]
    UnexpectedTau,
    #[error("tau class of an even form is unknown")]
    TauUnknown,
    #[error("Kirby-Siebenmann bit {supplied} contradicts the determined value {determined}")]
    KsConflict { supplied: u8, determined: u8 },
    #[error("Kirby-Siebenmann bit is required in this normal 1-type")]
    MissingKs,

    #[error("dimension {d} exceeds the cap {cap}")]
    DimensionTooLarge { d: usize, cap: usize },
    #[error("enumeration exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Usage,
    Domain,
    Cap,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::UnknownGenerator(_)
            | Error::MalformedExponent(_)
            | Error::ZeroExponent(_)
            | Error::Parse(_)
            | Error::Io(_) => ErrorClass::Usage,
            Error::DimensionTooLarge { .. } | Error::CapExceeded { .. } => ErrorClass::Cap,
            _ => ErrorClass::Domain,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
