use std::collections::BTreeSet;
use std::fmt::{self, Display};

/// A proposition built from atoms with `∧` and `⇒`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Prop {
    Atom(String),
    And(Box<Prop>, Box<Prop>),
    Imp(Box<Prop>, Box<Prop>),
}

impl Prop {
    pub fn atom(name: impl Into<String>) -> Prop {
        Prop::Atom(name.into())
    }

    pub fn and(a: Prop, b: Prop) -> Prop {
        Prop::And(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Prop, b: Prop) -> Prop {
        Prop::Imp(Box::new(a), Box::new(b))
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Prop::Atom(_))
    }

    /// The two sides of a conjunction.
    pub fn as_and(&self) -> Option<(&Prop, &Prop)> {
        match self {
            Prop::And(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_imp(&self) -> Option<(&Prop, &Prop)> {
        match self {
            Prop::Imp(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

/// `/\` binds tighter than `=>`, both associate to the right. Compound
/// operands of `=>` are always parenthesized for readability.
impl Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prop::Atom(name) => f.write_str(name),
            Prop::And(a, b) => {
                match **a {
                    Prop::Atom(_) => write!(f, "{a}")?,
                    _ => write!(f, "({a})")?,
                }
                f.write_str(" /\\ ")?;
                match **b {
                    Prop::Imp(..) => write!(f, "({b})"),
                    _ => write!(f, "{b}"),
                }
            }
            Prop::Imp(a, b) => {
                for (i, side) in [a, b].into_iter().enumerate() {
                    if i == 1 {
                        f.write_str(" => ")?;
                    }
                    if side.is_atom() {
                        write!(f, "{side}")?;
                    } else {
                        write!(f, "({side})")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// A finite set of hypotheses.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Context(BTreeSet<Prop>);

impl Context {
    pub fn empty() -> Self {
        Context(BTreeSet::new())
    }

    pub fn contains(&self, p: &Prop) -> bool {
        self.0.contains(p)
    }

    /// `self ∪ {p}`; a no-op when `p` is already present.
    pub fn with(&self, p: &Prop) -> Context {
        let mut ctx = self.clone();
        ctx.0.insert(p.clone());
        ctx
    }

    pub fn without(&self, p: &Prop) -> Context {
        let mut ctx = self.clone();
        ctx.0.remove(p);
        ctx
    }

    pub fn union(&self, other: &Context) -> Context {
        Context(self.0.union(&other.0).cloned().collect())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Prop> {
        self.0.iter()
    }
}

impl FromIterator<Prop> for Context {
    fn from_iter<I: IntoIterator<Item = Prop>>(iter: I) -> Self {
        Context(iter.into_iter().collect())
    }
}

impl Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// `Γ ⊢ A`, written `Γ |- A`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sequent {
    pub ctx: Context,
    pub concl: Prop,
}

impl Sequent {
    pub fn new(ctx: Context, concl: Prop) -> Self {
        Sequent { ctx, concl }
    }
}

impl Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ctx.is_empty() {
            write!(f, "|- {}", self.concl)
        } else {
            write!(f, "{} |- {}", self.ctx, self.concl)
        }
    }
}
