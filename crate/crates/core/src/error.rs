use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the workbench can report. Each variant carries a stable
/// code (see [`Error::code`]) used by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("division by zero")]
    DivisionByZero,
    #[error("order {from} does not divide {to}")]
    IncompatibleOrder { from: u64, to: u64 },

    #[error("pairing is degenerate")]
    DegeneratePairing,
    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("multiplication operators do not split over Q(z_{order})")]
    SplitFieldNeeded { order: u64 },

    #[error("level r = {0} is below 3")]
    BadLevel(u64),
    #[error("not a quadratic form: {0}")]
    NonQuadraticForm(String),
    #[error("transparent simples are not closed under {0}")]
    NotClosed(String),
    #[error("transparent simple `{0}` has twist other than +1/-1")]
    NonInvolutiveTransparentTwist(String),

    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),
    #[error("color {color} out of range for {simples} simples")]
    ColorOutOfRange { color: usize, simples: usize },
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("backend mismatch: {0}")]
    BackendMismatch(String),
    #[error("index {index} out of range for {len} components")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("component {0} is not a split +-1-framed unknot")]
    NotBlowDownable(usize),

    #[error("1- and 3-handles are not supported")]
    HandlesUnsupported,
    #[error("spin manifold with signature {0} not divisible by 16")]
    RohlinViolation(i64),
    #[error("chi + sigma = {0} is odd")]
    ParityViolation(i64),
    #[error("|sigma| exceeds chi - 2 ({0})")]
    NotRealizable(String),
    #[error("exponent is not an integer: {0}")]
    ExponentNotIntegral(String),
    #[error("K3 generator is unavailable for this category")]
    K3Unavailable,
    #[error("closed form for fundamental group Z requires a fermion-free theory")]
    UnsupportedPi1Fermionic,
    #[error("generator values violate {0}")]
    InconsistentGenerators(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{line}:{column}: {reason}")]
    Parse { line: usize, column: usize, reason: String },
    #[error("invariant violated ({invariant}): {detail}")]
    InvariantViolation { invariant: String, detail: String },
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    pub fn parse(line: usize, column: usize, reason: impl Into<String>) -> Self {
        Error::Parse { line, column, reason: reason.into() }
    }

    pub fn invariant(invariant: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::InvariantViolation { invariant: invariant.into(), detail: detail.into() }
    }

    /// Stable identifier, independent of the human-readable message.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroOrder => "E-ZERO-ORDER",
            Error::DivisionByZero => "E-DIV-ZERO",
            Error::IncompatibleOrder { .. } => "E-ORDER",
            Error::DegeneratePairing => "E-DEGENERATE-PAIRING",
            Error::NotSemisimple => "E-NOT-SEMISIMPLE",
            Error::SplitFieldNeeded { .. } => "E-SPLIT-FIELD",
            Error::BadLevel(_) => "E-BAD-LEVEL",
            Error::NonQuadraticForm(_) => "E-QUADRATIC-FORM",
            Error::NotClosed(_) => "E-NOT-CLOSED",
            Error::NonInvolutiveTransparentTwist(_) => "E-TRANSPARENT-TWIST",
            Error::MalformedDiagram(_) => "E-MALFORMED-DIAGRAM",
            Error::ColorOutOfRange { .. } => "E-COLOR-RANGE",
            Error::ResourceLimit(_) => "E-RESOURCE-LIMIT",
            Error::BackendMismatch(_) => "E-BACKEND",
            Error::IndexOutOfRange { .. } => "E-INDEX",
            Error::NotBlowDownable(_) => "E-NOT-BLOW-DOWNABLE",
            Error::HandlesUnsupported => "E-HANDLES",
            Error::RohlinViolation(_) => "E-ROHLIN",
            Error::ParityViolation(_) => "E-PARITY",
            Error::NotRealizable(_) => "E-NOT-REALIZABLE",
            Error::ExponentNotIntegral(_) => "E-EXPONENT",
            Error::K3Unavailable => "E-K3-UNAVAILABLE",
            Error::UnsupportedPi1Fermionic => "E-PI1-FERMIONIC",
            Error::InconsistentGenerators(_) => "E-GENERATORS",
            Error::InvalidInput(_) => "E-INPUT",
            Error::Parse { .. } => "E-PARSE",
            Error::InvariantViolation { .. } => "E-INVARIANT",
            Error::Io(_) => "E-IO",
        }
    }

    /// True for errors produced while reading input text.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::InvariantViolation { .. } | Error::Io(_))
    }
}
