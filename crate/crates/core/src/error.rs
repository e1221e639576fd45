use thiserror::Error;

/// Errors reported by the library.
///
/// Every checker reports a localized witness: the offending basis names,
/// arity, or tuple are carried in the message.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate basis name `{0}`")]
    DuplicateBasisName(String),
    #[error("unknown basis name `{0}`")]
    UnknownBasisName(String),
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("orientation mismatch: {0}")]
    OrientationMismatch(String),
    #[error("entry violates degree invariant: inputs {tuple:?} -> {single}, map degree {degree}")]
    EntryDegree {
        tuple: Vec<String>,
        single: String,
        degree: i64,
    },
    #[error("slot index {slot} out of range for arity {arity}")]
    SlotOutOfRange { slot: usize, arity: usize },
    #[error("permutation length mismatch: permutation on {perm} letters, {given} degrees given")]
    PermLengthMismatch { perm: usize, given: usize },
    #[error("invalid permutation one-line notation {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("shuffle parts must be positive, got ({0}, {1})")]
    InvalidShuffleParts(usize, usize),
    #[error("arity {0} exceeds the configured Eulerian maximum {1}")]
    EulerianArityTooLarge(usize, usize),
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("element is not Maurer-Cartan: defect is nonzero in arity {0}")]
    NotMaurerCartan(usize),
    #[error("element has degree {got}, expected {expected}")]
    WrongElementDegree { expected: i64, got: i64 },
    #[error("flavor violation: {0}")]
    FlavorViolation(String),
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    NotAssociative(String, String, String),
    #[error("commutativity fails on basis pair ({0}, {1})")]
    NotCommutative(String, String),
    #[error("Leibniz rule fails on basis element(s) {0}")]
    LeibnizFailure(String),
    #[error("antisymmetry fails on basis pair ({0}, {1})")]
    NotAntisymmetric(String, String),
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiFailure(String, String, String),
    #[error("unit `{0}` must have degree 0, found degree {1}")]
    UnitDegree(String, i64),
    #[error("gauge precondition failed: {0}")]
    GaugePrecondition(String),
    #[error("retraction setup invalid: {0}")]
    RetractionSetup(String),
    #[error("iteration cap {0} exceeded; per-step filtration invariant broken at arity {1}")]
    IterationCap(usize, usize),
    #[error("not an isotopy between the given structures: first failing arity {0}")]
    NotAnIsotopy(usize),
    #[error("augmentation is not an algebra map: fails on ({0}, {1})")]
    NotAnAlgebraMap(String, String),
    #[error("differential does not square to zero: d^2 nonzero on `{0}`")]
    DifferentialSquare(String),
    #[error("coassociativity fails on basis element `{0}`")]
    NotCoassociative(String),
    #[error("cocommutativity fails on basis element `{0}`")]
    NotCocommutative(String),
    #[error("basis is not adapted to the filtration: `{0}` has no well-defined level")]
    BasisNotAdapted(String),
    #[error("map does not preserve filtrations: basis element `{0}` of level {1} maps to level {2}")]
    NotFiltered(String, usize, usize),
    #[error("subspace membership failed while expressing `{0}`")]
    NotInSubspace(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
