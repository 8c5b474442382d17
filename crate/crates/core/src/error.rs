//! Error types shared across the pipeline stages.

use alloc::string::String;
use core::fmt;

use crate::ops::OpId;

/// Any failure produced by the adaptation pipeline.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Malformed input that could not be tokenized, with the byte offset of
    /// the first offending character.
    Parse { offset: usize, message: String },
    /// Structurally valid input that is missing required information
    /// (e.g. an `svg` root without resolvable dimensions).
    Input(String),
    /// Input uses a feature outside the supported subset. Named explicitly
    /// rather than guessed around.
    Unsupported { feature: String, offset: usize },
    /// A chart document violated the schema; `path` points at the failing
    /// node (e.g. `panels[0].layers[1].marks[3].x`).
    Validation { path: String, message: String },
    /// A value fell outside a scale's domain (or a position outside its
    /// range) beyond the allowed 5% extension.
    ScaleDomain { scale: String, message: String },
    /// Fewer than two usable ticks were available for a linear fit.
    InsufficientTicks { axis: String, found: usize },
    /// Tick positions do not fit a line within the residual budget; the
    /// axis is not recoverable as a linear scale.
    NonlinearScale { axis: String, residual_rms: f64 },
    /// A categorical axis carries the same label twice.
    AmbiguousCategories { label: String },
    /// An operator's precondition does not hold on the current scene.
    Inapplicable { op: OpId, reason: String },
    /// A planned step failed while executing the plan; routed to the critic
    /// as an adherence failure.
    PlanExecution { op: OpId, reason: String },
    /// An operator received an out-of-range parameter.
    Parameter { op: OpId, message: String },
    /// The scene cannot be serialized (not laid out, or a manifest entry
    /// references a missing element).
    Emission(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { offset, message } => {
                write!(f, "parse error at byte {offset}: {message}")
            }
            Error::Input(message) => write!(f, "input error: {message}"),
            Error::Unsupported { feature, offset } => {
                write!(f, "unsupported feature at byte {offset}: {feature}")
            }
            Error::Validation { path, message } => {
                write!(f, "validation error at {path}: {message}")
            }
            Error::ScaleDomain { scale, message } => {
                write!(f, "domain error on scale {scale}: {message}")
            }
            Error::InsufficientTicks { axis, found } => {
                write!(f, "insufficient ticks on {axis} axis: found {found}, need 2")
            }
            Error::NonlinearScale { axis, residual_rms } => write!(
                f,
                "{axis} axis is not linear: fit residual {residual_rms:.3}px exceeds 1.0px"
            ),
            Error::AmbiguousCategories { label } => {
                write!(f, "ambiguous categories: label {label:?} appears more than once")
            }
            Error::Inapplicable { op, reason } => {
                write!(f, "operator {} not applicable: {reason}", op.as_str())
            }
            Error::PlanExecution { op, reason } => {
                write!(f, "plan execution failed at step {}: {reason}", op.as_str())
            }
            Error::Parameter { op, message } => {
                write!(f, "bad parameter for {}: {message}", op.as_str())
            }
            Error::Emission(message) => write!(f, "emission error: {message}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
