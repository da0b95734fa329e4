use thiserror::Error;

use crate::complex::Violation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("expected {expected} entries, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("cannot multiply {left:?} by {right:?}")]
    IncompatibleProduct {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix of shape {0:?} is not square")]
    NotSquare((usize, usize)),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("cannot parse abelian group from {0:?}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("duplicate face id {0:?}")]
    DuplicateFace(String),
    #[error("unknown face id {0:?}")]
    UnknownFace(String),
    #[error("face {face:?} has dimension {dim} above the complex dimension {top}")]
    FaceDimension { face: String, dim: usize, top: usize },
    #[error("orientation of face {0:?} must be 1 or -1")]
    Orientation(String),
    #[error("incidence [{high}:{low}]: {reason}")]
    BadIncidence {
        high: String,
        low: String,
        reason: String,
    },
    #[error("level l={l} out of range 1..={top}")]
    LevelOutOfRange { l: usize, top: usize },
    #[error("invalid manifold file: {0}")]
    Json(String),
    #[error("unknown builtin manifold {0:?}")]
    UnknownBuiltin(String),
    #[error("complex fails validation: {}", summarize(.0))]
    Invalid(Vec<Violation>),
}

fn summarize(v: &[Violation]) -> String {
    let mut s: Vec<String> = v.iter().take(3).map(ToString::to_string).collect();
    if v.len() > 3 {
        s.push(format!("... ({} total)", v.len()));
    }
    s.join("; ")
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KTheoryError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("six-term sequence: slot {slot} is unknown but its neighbour {neighbour} is unknown too")]
    AdjacentUnknowns { slot: String, neighbour: String },
    #[error("six-term sequence: map {map} has shape {got:?}, expected {expected:?}")]
    MapShape {
        map: String,
        got: (usize, usize),
        expected: (usize, usize),
    },
    #[error("six-term sequence: no exact completion, fails at {slot}: {reason}")]
    Inconsistent { slot: String, reason: String },
    #[error("missing input: {0}")]
    MissingInput(String),
    #[error("cannot parse six-term problem: {0}")]
    Parse(String),
    #[error("cannot map {0} onto Z: its free part has rank 0")]
    ImpossibleSurjection(String),
    #[error("boundary map is declared non-surjective, contradicting its surjectivity onto Z")]
    NotSurjective,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ToeplitzError {
    #[error("symbol has no nonzero terms")]
    ZeroSymbol,
    #[error("symbol vanishes on the unit circle (|phi| = {modulus:.3e} at t = {angle:.6})")]
    VanishingSymbol { modulus: f64, angle: f64 },
    #[error("argument increment {increment:.3} too large with {samples} samples")]
    Undersampled { samples: usize, increment: f64 },
    #[error("winding residual {residual:.3} exceeds 0.1 with {samples} samples")]
    Residual { samples: usize, residual: f64 },
    #[error("a root lies within {margin:e} of the unit circle (|z| ~ {modulus:.9})")]
    RootNearCircle { modulus: f64, margin: f64 },
    #[error("root finder did not converge for a degree-{0} polynomial")]
    NoConvergence(usize),
    #[error("winding oracles disagree: argument count {numeric}, root count {roots}")]
    OracleDisagreement { numeric: i64, roots: i64 },
    #[error("truncation {truncation} too small for shift power {k}")]
    TruncationTooSmall { k: i64, truncation: usize },
    #[error("cannot parse symbol: {0}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharClassError {
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("ring has no degree-0 unit labelled \"1\"")]
    MissingUnit,
    #[error("product {left}*{right} has a term {term} of degree {got}, expected {expected}")]
    DegreeMismatch {
        left: String,
        right: String,
        term: String,
        got: usize,
        expected: usize,
    },
    #[error("graded commutativity fails for {0}, {1}")]
    NotGradedCommutative(String, String),
    #[error("associativity fails for ({0}*{1})*{2}")]
    NotAssociative(String, String, String),
    #[error("unit product {0} conflicts with the implicit unit")]
    UnitConflict(String),
    #[error("fundamental class {label:?} must have the top degree {top}")]
    FundamentalClass { label: String, top: usize },
    #[error("elements belong to different rings")]
    RingMismatch,
    #[error("chern class c{index} has degree {got}, expected {expected}")]
    ChernDegree {
        index: usize,
        got: String,
        expected: usize,
    },
    #[error("bundle of rank {rank} cannot carry {given} chern classes")]
    TooManyClasses { rank: usize, given: usize },
    #[error("cannot parse {0}")]
    Parse(String),
    #[error("invalid ring description: {0}")]
    Json(String),
    #[error("unknown builtin ring {0:?}")]
    UnknownBuiltin(String),
}
