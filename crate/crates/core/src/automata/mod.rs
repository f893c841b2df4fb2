//! Finite automata as rule systems.
//!
//! A transition `s --a--> t` is a rule with premise `t` and conclusion `s`,
//! and each final state is an axiom. A word is then recognized from `s`
//! exactly when it is the erasure of a name-labeled derivation of `s`.

mod compile;
mod format;
mod nfa;

pub use compile::{compile, derivations_of, CompiledRule, CompiledRules};
pub use format::{parse_nfa, print_nfa};
pub use nfa::{is_identifier, is_valid_letter, Nfa, Transition, Word};

use crate::syntax::NodePath;

/// Name stem of the nullary rules for final states.
pub const FINAL_RULE_PREFIX: &str = "eps";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutomatonError {
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("invalid name `{0}`")]
    InvalidName(String),
    #[error("malformed chain at {path}: {reason}")]
    MalformedChain { path: NodePath, reason: String },
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

/// Whether `word` is recognized from `state`.
pub fn recognizes(nfa: &Nfa, state: &str, word: &Word) -> Result<bool, AutomatonError> {
    nfa.recognizes(state, word)
}

pub fn is_deterministic(nfa: &Nfa) -> bool {
    nfa.is_deterministic()
}
