//! The single error type shared by every module in the crate.

use thiserror::Error;

/// Everything that can go wrong across parsing, threshold computation,
/// boundary construction, graph analysis, and corpus verification.
#[derive(Debug, Error)]
pub enum Error {
    /// Text could not be parsed as a polynomial. `offset` is the byte
    /// position of the offending character in the input.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A variable declaration string was malformed (empty, repeated letters,
    /// or a non-letter character).
    #[error("invalid variable list {0:?}: expected distinct ASCII letters")]
    InvalidVariables(String),

    /// An operation that needs a nonzero polynomial received the zero
    /// polynomial.
    #[error("{0} is undefined for the zero polynomial")]
    ZeroPolynomial(&'static str),

    /// A polynomial had the wrong number of variables for the operation.
    #[error("expected a polynomial in {expected} variable(s), found {found}")]
    ArityMismatch { expected: usize, found: usize },

    /// A weight vector's length did not match the polynomial's arity.
    #[error("weight has {weight_len} entries but the polynomial has {arity} variable(s)")]
    WeightLengthMismatch { weight_len: usize, arity: usize },

    /// A weight vector was structurally invalid (empty, or a zero entry).
    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    /// The polynomial has a nonzero constant term, so it does not vanish at
    /// the blown-up point and no threshold candidate exists.
    #[error("polynomial has a nonzero constant term; it does not vanish at the origin")]
    ConstantTerm,

    /// A form expected to be homogeneous (for the relevant grading) was not.
    #[error("polynomial is not homogeneous for the given grading")]
    NotHomogeneous,

    /// A form had the wrong total degree for the operation.
    #[error("expected a form of degree {expected}, found degree {found}")]
    DegreeMismatch { expected: u32, found: u32 },

    /// Exponent rewriting hit an exponent not divisible by its modulus, so
    /// the form does not descend to the well-formed plane.
    #[error(
        "exponent {exponent} of variable {variable} is not divisible by {modulus}; \
         the form does not descend to the well-formed plane"
    )]
    NonExactExponent {
        variable: char,
        exponent: u32,
        modulus: u32,
    },

    /// The cubic part has a triple linear factor that is not the last
    /// coordinate, so the sample normal form does not apply as written.
    #[error("cubic part has triple factor ({0}) not aligned with the last coordinate")]
    TripleNotAligned(String),

    /// A Diff coefficient reached or exceeded 1, so the boundary is not a
    /// valid log Enriques boundary.
    #[error("Diff coefficient delta_{index} = {value} is not in [0, 1)")]
    DeltaOutOfRange { index: usize, value: String },

    /// The threshold is not of the form `1 - 1/m`, so no cyclic cover of
    /// that shape exists.
    #[error("threshold {0} is not of the form 1 - 1/m; no simple-K3 cover")]
    NotStandardForm(String),

    /// A rational argument was outside the interval required by the
    /// operation.
    #[error("{context}: {value} is outside {interval}")]
    OutOfRange {
        context: &'static str,
        value: String,
        interval: &'static str,
    },

    /// The weight search was asked to run with a zero bound.
    #[error("weight search bound must be at least 1")]
    ZeroSearchBound,

    /// A dual graph file violated the schema or the structural rules.
    #[error("invalid dual graph: {0}")]
    InvalidGraph(String),

    /// The relevant intersection matrix is not negative definite.
    #[error("intersection matrix is not negative definite")]
    NotNegativeDefinite,

    /// The discrepancy system needs a vertex marked `C1` and none exists.
    #[error("no vertex is marked C1; the discrepancy system has no boundary curve")]
    MissingBoundary,

    /// An interior vertex of a discrepancy system had self-intersection
    /// other than -2.
    #[error("interior vertex {id} has self-intersection {self_int}; the system requires -2")]
    InteriorNotMinusTwo { id: String, self_int: i64 },

    /// The linear system was singular and could not be solved.
    #[error("linear system is singular")]
    SingularSystem,

    /// A JSON payload failed to deserialize.
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    /// A corpus file deserialized but violated the row schema.
    #[error("corpus row {index}: {message}")]
    CorpusSchema { index: usize, message: String },
}
