//! Inductive definitions as systems of named rules, the one-step operator
//! and its iterates, and derivation trees under the three labelings.

mod check;
mod even;
mod fixpoint;
mod linear;
mod rule;
mod tree;

pub use check::{
    check_elem_tree, check_full_tree, infer_conclusion, infer_labels, RejectReason, Rejection,
};
pub use even::even_system;
pub use fixpoint::{iterate, member, step, FiniteSet, Iterates, Membership};
pub use linear::{parse_name_tree, print_name_tree};
pub use rule::{Element, Limits, Rule, RuleName, RuleSystem};
pub use tree::{DerivTree, FullLabel};

/// Errors raised by the engine itself, as opposed to rejected derivations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IndError {
    #[error("invalid rule name {0:?}")]
    InvalidRuleName(String),
    #[error("duplicate rule name `{0}`")]
    DuplicateRuleName(RuleName),
    #[error("rule `{rule}` takes {expected} argument(s), got {found}")]
    ArityMismatch {
        rule: RuleName,
        expected: usize,
        found: usize,
    },
    #[error("rule table `{0}` maps one input to two outputs")]
    NonFunctionalTable(RuleName),
    #[error("resource limit: stage {stage} exceeds {limit} elements")]
    SetLimit { stage: usize, limit: usize },
    #[error("resource limit: {requested} steps requested, limit is {limit}")]
    DepthLimit { requested: usize, limit: usize },
    #[error("search depth must be at least 1")]
    ZeroDepth,
}

impl IndError {
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            IndError::SetLimit { .. } | IndError::DepthLimit { .. }
        )
    }
}
