use std::fmt::{self, Display};

use super::{Context, Prop};

/// A proof in scheme form: rule names only, with the discharged proposition
/// on each `λ` and the used hypothesis on each axiom.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SchemeTerm {
    /// `[A]`: axiom whose context is inferred.
    Hyp(Prop),
    /// `axiom⟨Γ, A⟩`: axiom with its context spelled out; concludes `Γ, A ⊢ A`.
    HypFull(Context, Prop),
    Lam(Prop, Box<SchemeTerm>),
    Pair(Box<SchemeTerm>, Box<SchemeTerm>),
    Fst(Box<SchemeTerm>),
    Snd(Box<SchemeTerm>),
}

/// A proof in variable form: `λx:A`, variables, pairs and projections.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarTerm {
    Var(String),
    Lam(String, Prop, Box<VarTerm>),
    Pair(Box<VarTerm>, Box<VarTerm>),
    Fst(Box<VarTerm>),
    Snd(Box<VarTerm>),
}

impl SchemeTerm {
    pub fn lam(a: Prop, body: SchemeTerm) -> Self {
        SchemeTerm::Lam(a, Box::new(body))
    }

    pub fn pair(l: SchemeTerm, r: SchemeTerm) -> Self {
        SchemeTerm::Pair(Box::new(l), Box::new(r))
    }

    pub fn fst(t: SchemeTerm) -> Self {
        SchemeTerm::Fst(Box::new(t))
    }

    pub fn snd(t: SchemeTerm) -> Self {
        SchemeTerm::Snd(Box::new(t))
    }

    pub fn children(&self) -> Vec<&SchemeTerm> {
        match self {
            SchemeTerm::Hyp(_) | SchemeTerm::HypFull(..) => vec![],
            SchemeTerm::Lam(_, t) | SchemeTerm::Fst(t) | SchemeTerm::Snd(t) => vec![t],
            SchemeTerm::Pair(l, r) => vec![l, r],
        }
    }

    pub fn size(&self) -> usize {
        1 + self
            .children()
            .into_iter()
            .map(SchemeTerm::size)
            .sum::<usize>()
    }

    pub fn contains_hyp_full(&self) -> bool {
        matches!(self, SchemeTerm::HypFull(..))
            || self
                .children()
                .into_iter()
                .any(SchemeTerm::contains_hyp_full)
    }

    pub fn contains_hyp(&self) -> bool {
        matches!(self, SchemeTerm::Hyp(..))
            || self.children().into_iter().any(SchemeTerm::contains_hyp)
    }
}

impl VarTerm {
    pub fn var(x: impl Into<String>) -> Self {
        VarTerm::Var(x.into())
    }

    pub fn lam(x: impl Into<String>, a: Prop, body: VarTerm) -> Self {
        VarTerm::Lam(x.into(), a, Box::new(body))
    }

    pub fn pair(l: VarTerm, r: VarTerm) -> Self {
        VarTerm::Pair(Box::new(l), Box::new(r))
    }

    pub fn fst(t: VarTerm) -> Self {
        VarTerm::Fst(Box::new(t))
    }

    pub fn snd(t: VarTerm) -> Self {
        VarTerm::Snd(Box::new(t))
    }
}

impl Display for SchemeTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemeTerm::Hyp(a) => write!(f, "hyp [{a}]"),
            SchemeTerm::HypFull(ctx, a) if ctx.is_empty() => write!(f, "axiom {{| {a}}}"),
            SchemeTerm::HypFull(ctx, a) => write!(f, "axiom {{{ctx} | {a}}}"),
            SchemeTerm::Lam(a, t) => write!(f, "fun [{a}] {t}"),
            SchemeTerm::Pair(l, r) => write!(f, "<{l}, {r}>"),
            SchemeTerm::Fst(t) => write!(f, "fst({t})"),
            SchemeTerm::Snd(t) => write!(f, "snd({t})"),
        }
    }
}

impl Display for VarTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarTerm::Var(x) => f.write_str(x),
            VarTerm::Lam(x, a, t) => write!(f, "fun {x} : {a} . {t}"),
            VarTerm::Pair(l, r) => write!(f, "<{l}, {r}>"),
            VarTerm::Fst(t) => write!(f, "fst({t})"),
            VarTerm::Snd(t) => write!(f, "snd({t})"),
        }
    }
}
