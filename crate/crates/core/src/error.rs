use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("signature ({p},{q}) exceeds the generator cap p+q <= {cap}")]
    DimensionCap { p: usize, q: usize, cap: usize },

    #[error("operands live in different algebras")]
    AlgebraMismatch,

    #[error("complex coefficient in a real algebra")]
    ComplexCoefficientInRealAlgebra,

    #[error("blade {mask:#b} uses generators outside the algebra")]
    BladeOutOfRange { mask: u32 },

    #[error("operation requires {expected} p+q, got p+q = {n}")]
    Parity { expected: &'static str, n: usize },

    #[error("operation requires p >= 1")]
    NeedsPositiveGenerator,

    #[error("no set of {k} commuting +1-square blades found in {algebra}")]
    IdempotentSearch { algebra: String, k: usize },

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("idempotent factors are invalid: {0}")]
    InvalidFactors(String),

    #[error("f.A.f has dimension {dimension}, not a division ring")]
    NotDivisionRing { dimension: usize },

    #[error("isomorphism check failed: {0}")]
    Iso(#[from] IsoFailure),

    #[error("oracle limited to k + r <= {cap}, got {k} + {r}")]
    OracleCap { k: usize, r: usize, cap: usize },
}

/// Structured reason a candidate isomorphism witness was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoFailure {
    #[error("dimension mismatch: target has {target}, candidate has {candidate}")]
    DimensionMismatch { target: usize, candidate: usize },

    #[error("image of e{generator} squares to {found} instead of {expected}")]
    WrongSquare { generator: usize, expected: i8, found: String },

    #[error("images of e{i} and e{j} do not anticommute")]
    NotAnticommuting { i: usize, j: usize },

    #[error("images span {rank} dimensions, expected {expected}")]
    SpanDeficient { rank: usize, expected: usize },

    #[error("image of e{generator} leaves the required subalgebra")]
    OutsideSubalgebra { generator: usize },

    #[error("no tensor construction matches {0}")]
    NoConstruction(String),
}
