//! Rules, derivations and conclusion inference.
//!
//! [`ind`] is the generic engine: inductive definitions given by named
//! partial functions, the one-step operator and its iterates, and derivation
//! trees labeled with elements, rule names, or both. Three instantiations
//! sit on top of it:
//!
//! * [`natded`]: natural deduction for `∧`/`⇒` with sequent derivations,
//!   scheme terms and variable (BHK) terms;
//! * [`recfun`]: partial recursive programs, a fuel-bounded evaluator,
//!   Gödel numbering and the diagonal program;
//! * [`automata`]: finite automata compiled to rule systems, where a word
//!   is a name-labeled derivation of a state.

pub mod automata;
pub mod cli;
pub mod ind;
pub mod latex;
pub mod natded;
pub mod natural;
pub mod recfun;
pub mod syntax;

pub use natural::Natural;
pub use syntax::{NodePath, SyntaxError};

/// Arbitrary-precision naturals.
pub type Nat = num_bigint::BigUint;
/// The even-number system over arbitrary-precision naturals.
pub type EvenSystem = ind::RuleSystem<Nat>;
/// Evaluation outcome over arbitrary-precision naturals.
pub type Outcome = recfun::Outcome<Nat>;
