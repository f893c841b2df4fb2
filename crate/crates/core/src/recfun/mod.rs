//! Partial recursive programs.
//!
//! Programs are rule-name derivations over the constructors zero, successor,
//! projection, composition, recursion and minimization, written in linear
//! form. Evaluation is bounded by fuel; running out is reported as
//! divergence.

mod enumerate;
mod eval;
mod godel;
mod program;
mod syntax;

pub use enumerate::{programs_of_size, well_formed_programs};
pub use eval::{eval, eval_with, Fuel, MuConvention, Outcome};
pub use godel::{godel, pair, ungodel, unpair, MAX_DECODED_LIST};
pub use program::{arity_of, diagonal, Program};
pub use syntax::{parse_program, print_program};

use crate::syntax::NodePath;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecError {
    #[error("ill-formed at {path}: {reason}")]
    IllFormed { path: NodePath, reason: String },
    #[error("expected {expected} argument(s), got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("value does not fit the natural-number type")]
    Overflow,
    #[error("cannot decode: {0}")]
    Decode(String),
}
