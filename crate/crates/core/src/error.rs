use thiserror::Error;

/// A literal (rational, singularity, fiber name, ...) that failed to parse.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {what} from {input:?}")]
pub struct ParseError {
    pub what: &'static str,
    pub input: String,
}

impl ParseError {
    pub fn new(what: &'static str, input: impl Into<String>) -> Self {
        ParseError {
            what,
            input: input.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("conductor {0} is not an odd prime")]
    UnsupportedConductor(u32),
    #[error("elements live in different cyclotomic fields ({0} and {1})")]
    ConductorMismatch(u32, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SingularityError {
    #[error("group order must be at least 2, got {0}")]
    InvalidOrder(u64),
    #[error("weight {q} is not a unit modulo {n}")]
    InvalidWeight { n: u64, q: u64 },
    #[error("invalid exceptional chain: {0}")]
    InvalidChain(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LedgerError {
    #[error(
        "Noether identity fails for {label}: K^2 + e = {lhs}, expected 12(1 - q + pg) = {rhs}"
    )]
    NoetherViolation {
        label: String,
        lhs: String,
        rhs: i64,
    },
    #[error("ledger {0} has pg or q nonzero; rank-based checks need pg = q = 0")]
    IrregularLedger(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("cover degree {0} is not prime")]
    DegreeNotPrime(u32),
    #[error("branch index {index} out of range for {count} singular points")]
    BranchIndexOutOfRange { index: usize, count: usize },
    #[error("branch point {0} listed twice")]
    DuplicateBranchPoint(usize),
    #[error("{branch} branch points but {preimages} preimage types")]
    PreimageCountMismatch { branch: usize, preimages: usize },
    #[error("no built-in preimage type for {singularity} under a degree {degree} cover")]
    MissingPreimage { singularity: String, degree: u32 },
    #[error("branch data inconsistent: {0}")]
    BranchMismatch(String),
    #[error("unsupported action: {0}")]
    UnsupportedAction(String),
    #[error("Euler number {numerator} is not divisible by the group order {order}")]
    NonIntegralEuler { numerator: i64, order: u32 },
    #[error("ambient lattice of rank {ambient} cannot hold {required} exceptional curves")]
    AmbientRankTooSmall { ambient: usize, required: usize },
    #[error(transparent)]
    Ledger(#[from] LedgerError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LefschetzError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u32),
    #[error("index {i} out of range 1..{p}")]
    IndexOutOfRange { p: u32, i: u32 },
    #[error("expected {expected} traces, found {found}")]
    TraceCount { expected: usize, found: usize },
    #[error("traces must cover degrees 0..=m exactly once")]
    InvalidTraces,
    #[error("averaged value is not rational: {0}")]
    NonRationalResult(String),
    #[error("forced invariant count {forced} exceeds H^(1,1) rank {rank}")]
    ForcedExceedsRank { forced: u32, rank: u32 },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FibrationError {
    #[error("required chain is not an A_n chain of (-2)-curves: {0}")]
    InvalidChain(String),
    #[error("target Euler number must be positive")]
    NonPositiveEuler,
    #[error("fibre {index} ({fiber}) has no unramified connected triple cover")]
    NoTripleCover { index: usize, fiber: String },
    #[error("base change needs {expected} branch points, plan gives {found}")]
    BranchCountMismatch { expected: i64, found: i64 },
    #[error("plan lists {found} fibres, configuration has {expected}")]
    PlanLength { expected: usize, found: usize },
    #[error("no transport rule for fibre {index} ({fiber}) with {cusps} branch cusps")]
    UnsupportedTransport {
        index: usize,
        fiber: String,
        cusps: usize,
    },
    #[error("split fibre {0} in a plan whose general fibre stays connected")]
    InconsistentSplit(usize),
    #[error("Riemann-Hurwitz has no nonnegative integral branch count")]
    NonIntegralSolution,
    #[error("degree must be at least 2")]
    InvalidDegree,
}

/// Union of the module errors, used by callers that drive several modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Singularity(#[from] SingularityError),
    #[error(transparent)]
    Ledger(#[from] LedgerError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Lefschetz(#[from] LefschetzError),
    #[error(transparent)]
    Fibration(#[from] FibrationError),
}

impl Error {
    /// Short variant name used in reports, e.g. `NoTripleCover`.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::Exact(e) => match e {
                ExactError::SingularMatrix => "SingularMatrix",
                ExactError::DivisionByZero => "DivisionByZero",
                ExactError::DimensionMismatch { .. } => "DimensionMismatch",
                ExactError::UnsupportedConductor(_) => "UnsupportedConductor",
                ExactError::ConductorMismatch(..) => "ConductorMismatch",
            },
            Error::Singularity(e) => match e {
                SingularityError::InvalidOrder(_) => "InvalidOrder",
                SingularityError::InvalidWeight { .. } => "InvalidWeight",
                SingularityError::InvalidChain(_) => "InvalidChain",
            },
            Error::Ledger(e) | Error::Cover(CoverError::Ledger(e)) => match e {
                LedgerError::NoetherViolation { .. } => "NoetherViolation",
                LedgerError::IrregularLedger(_) => "IrregularLedger",
            },
            Error::Cover(e) => match e {
                CoverError::DegreeNotPrime(_) => "DegreeNotPrime",
                CoverError::BranchIndexOutOfRange { .. } => "BranchIndexOutOfRange",
                CoverError::DuplicateBranchPoint(_) => "DuplicateBranchPoint",
                CoverError::PreimageCountMismatch { .. } => "PreimageCountMismatch",
                CoverError::MissingPreimage { .. } => "MissingPreimage",
                CoverError::BranchMismatch(_) => "BranchMismatch",
                CoverError::UnsupportedAction(_) => "UnsupportedAction",
                CoverError::NonIntegralEuler { .. } => "NonIntegralEuler",
                CoverError::AmbientRankTooSmall { .. } => "AmbientRankTooSmall",
                CoverError::Ledger(_) => unreachable!(),
            },
            Error::Lefschetz(e) => match e {
                LefschetzError::NotOddPrime(_) => "NotOddPrime",
                LefschetzError::IndexOutOfRange { .. } => "IndexOutOfRange",
                LefschetzError::TraceCount { .. } => "TraceCount",
                LefschetzError::InvalidTraces => "InvalidTraces",
                LefschetzError::NonRationalResult(_) => "NonRationalResult",
                LefschetzError::ForcedExceedsRank { .. } => "ForcedExceedsRank",
                LefschetzError::Exact(_) => "ExactError",
            },
            Error::Fibration(e) => match e {
                FibrationError::InvalidChain(_) => "InvalidChain",
                FibrationError::NonPositiveEuler => "NonPositiveEuler",
                FibrationError::NoTripleCover { .. } => "NoTripleCover",
                FibrationError::BranchCountMismatch { .. } => "BranchCountMismatch",
                FibrationError::PlanLength { .. } => "PlanLength",
                FibrationError::UnsupportedTransport { .. } => "UnsupportedTransport",
                FibrationError::InconsistentSplit(_) => "InconsistentSplit",
                FibrationError::NonIntegralSolution => "NonIntegralSolution",
                FibrationError::InvalidDegree => "InvalidDegree",
            },
        }
    }
}
