//! Natural deduction for `∧` and `⇒`.
//!
//! A proof can be a sequent-labeled derivation, a scheme term (rule names
//! only, `λA` and `[A]`), or a variable term (`λx:A` and `x`). Scheme and
//! variable terms are checked by inferring contexts from the root down and
//! conclusions from the leaves up.

mod check;
mod convert;
mod functional;
mod prop;
mod syntax;
mod term;

pub use check::{
    check_scheme, check_sequent_deriv, check_var, scheme_derivation, var_derivation, NdReason,
    NdRejection, NdRule, SequentDeriv, SequentLabel,
};
pub use convert::{scheme_to_var, var_to_scheme};
pub use functional::{functionalize, infer_top_down, FunctionalProof, SchemeRule};
pub use prop::{Context, Prop, Sequent};
pub use syntax::{
    parse_context, parse_prop, parse_scheme, parse_sequent, parse_sequent_deriv, parse_term,
    parse_var, print_prop, print_sequent_deriv, print_term, AnyTerm, TermForm,
};
pub use term::{SchemeTerm, VarTerm};
