use std::fmt;

use super::{Context, Prop, SchemeTerm, Sequent, VarTerm};
use crate::ind::DerivTree;
use crate::syntax::NodePath;

/// The five natural-deduction rules for `∧` and `⇒`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NdRule {
    Axiom,
    AndIntro,
    AndElim1,
    AndElim2,
    ImpIntro,
}

impl NdRule {
    pub const ALL: [NdRule; 5] = [
        NdRule::Axiom,
        NdRule::AndIntro,
        NdRule::AndElim1,
        NdRule::AndElim2,
        NdRule::ImpIntro,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NdRule::Axiom => "axiom",
            NdRule::AndIntro => "and-intro",
            NdRule::AndElim1 => "and-elim1",
            NdRule::AndElim2 => "and-elim2",
            NdRule::ImpIntro => "imp-intro",
        }
    }

    pub fn from_name(name: &str) -> Option<NdRule> {
        NdRule::ALL.into_iter().find(|r| r.name() == name)
    }

    /// Whether `node` follows from `premises` by this rule.
    fn admits(self, node: &Sequent, premises: &[&Sequent]) -> Result<(), String> {
        let same_ctx = |s: &Sequent| s.ctx == node.ctx;
        match (self, premises) {
            (NdRule::Axiom, []) => {
                if node.ctx.contains(&node.concl) {
                    Ok(())
                } else {
                    Err(format!("{} is not among the hypotheses", node.concl))
                }
            }
            (NdRule::AndIntro, [a, b]) => match node.concl.as_and() {
                Some((l, r)) if same_ctx(a) && same_ctx(b) && a.concl == *l && b.concl == *r => {
                    Ok(())
                }
                Some(_) => Err("premises must conclude both conjuncts in the same context".into()),
                None => Err(format!("{} is not a conjunction", node.concl)),
            },
            (NdRule::AndElim1, [a]) => match a.concl.as_and() {
                Some((l, _)) if same_ctx(a) && *l == node.concl => Ok(()),
                _ => Err(format!("premise does not conclude {} /\\ _", node.concl)),
            },
            (NdRule::AndElim2, [a]) => match a.concl.as_and() {
                Some((_, r)) if same_ctx(a) && *r == node.concl => Ok(()),
                _ => Err(format!("premise does not conclude _ /\\ {}", node.concl)),
            },
            (NdRule::ImpIntro, [a]) => match node.concl.as_imp() {
                Some((hyp, body)) if a.ctx == node.ctx.with(hyp) && a.concl == *body => Ok(()),
                Some((hyp, body)) => Err(format!(
                    "premise must be {}",
                    Sequent::new(node.ctx.with(hyp), body.clone())
                )),
                None => Err(format!("{} is not an implication", node.concl)),
            },
            _ => Err(format!(
                "rule `{}` does not take {} premise(s)",
                self.name(),
                premises.len()
            )),
        }
    }
}

impl fmt::Display for NdRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A node of a sequent derivation, optionally naming its rule.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SequentLabel {
    pub sequent: Sequent,
    pub rule: Option<NdRule>,
}

impl fmt::Display for SequentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rule {
            Some(rule) => write!(f, "{} by {rule}", self.sequent),
            None => write!(f, "{}", self.sequent),
        }
    }
}

pub type SequentDeriv = DerivTree<SequentLabel>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NdReason {
    /// Sequent node matched by none of the five rules.
    NoRuleMatches(Sequent),
    /// Sequent node does not follow by the rule it names.
    RuleMismatch {
        rule: NdRule,
        detail: String,
    },
    HypNotInContext {
        prop: Prop,
        ctx: Context,
    },
    ContextMismatch {
        expected: Context,
        found: Context,
    },
    ShapeMismatch {
        expected: &'static str,
        found: Prop,
    },
    UnboundVariable(String),
    NoMatchingBinder(Prop),
    /// `axiom⟨Γ,A⟩` has no variable-form counterpart.
    ExplicitAxiom,
    /// Top-down inference refused a node.
    Inference(String),
}

impl fmt::Display for NdReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NdReason::NoRuleMatches(s) => write!(f, "no rule concludes {s}"),
            NdReason::RuleMismatch { rule, detail } => write!(f, "{rule}: {detail}"),
            NdReason::HypNotInContext { prop, ctx } => {
                write!(f, "hypothesis {prop} is not in the context {{{ctx}}}")
            }
            NdReason::ContextMismatch { expected, found } => {
                write!(
                    f,
                    "axiom context {{{found}}} differs from the inferred {{{expected}}}"
                )
            }
            NdReason::ShapeMismatch { expected, found } => {
                write!(f, "expected {expected}, found {found}")
            }
            NdReason::UnboundVariable(x) => write!(f, "unbound variable {x}"),
            NdReason::NoMatchingBinder(a) => write!(f, "no enclosing binder for [{a}]"),
            NdReason::ExplicitAxiom => f.write_str("explicit axiom contexts cannot be converted"),
            NdReason::Inference(msg) => f.write_str(msg),
        }
    }
}

/// A refused proof, localized by child-index path from the root.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("rejected at {path}: {reason}")]
pub struct NdRejection {
    pub path: NodePath,
    pub reason: NdReason,
}

impl NdRejection {
    pub fn new(path: NodePath, reason: NdReason) -> Self {
        NdRejection { path, reason }
    }
}

/// Checks a sequent derivation. Unnamed nodes are accepted if any rule fits.
pub fn check_sequent_deriv(tree: &SequentDeriv) -> Result<(), NdRejection> {
    for (path, node) in tree.preorder() {
        let premises: Vec<&Sequent> = node.children.iter().map(|c| &c.label.sequent).collect();
        let seq = &node.label.sequent;
        match node.label.rule {
            Some(rule) => rule.admits(seq, &premises).map_err(|detail| {
                NdRejection::new(path, NdReason::RuleMismatch { rule, detail })
            })?,
            None => {
                if !NdRule::ALL.iter().any(|r| r.admits(seq, &premises).is_ok()) {
                    return Err(NdRejection::new(path, NdReason::NoRuleMatches(seq.clone())));
                }
            }
        }
    }
    Ok(())
}

/// Context inference: every node gets its parent's context, except that the
/// body of `λA` gets the context extended with `A`.
fn infer_contexts(term: &SchemeTerm, ctx: Context) -> DerivTree<Context> {
    let children = match term {
        SchemeTerm::Lam(a, body) => vec![infer_contexts(body, ctx.with(a))],
        _ => term
            .children()
            .into_iter()
            .map(|c| infer_contexts(c, ctx.clone()))
            .collect(),
    };
    DerivTree::new(ctx, children)
}

fn conjunction<'p>(p: &'p Prop, path: &NodePath) -> Result<(&'p Prop, &'p Prop), NdRejection> {
    p.as_and().ok_or_else(|| {
        NdRejection::new(
            path.clone(),
            NdReason::ShapeMismatch {
                expected: "a conjunction",
                found: p.clone(),
            },
        )
    })
}

/// Conclusion inference over a context-annotated term, leaves first.
fn infer_conclusions(
    term: &SchemeTerm,
    ctxs: &DerivTree<Context>,
    path: NodePath,
) -> Result<SequentDeriv, NdRejection> {
    let ctx = &ctxs.label;
    let children = term
        .children()
        .into_iter()
        .zip(&ctxs.children)
        .enumerate()
        .map(|(i, (t, c))| infer_conclusions(t, c, path.child(i)))
        .collect::<Result<Vec<_>, _>>()?;
    let concl_of = |i: usize| &children[i].label.sequent.concl;
    let (concl, rule) = match term {
        SchemeTerm::Hyp(a) => {
            if !ctx.contains(a) {
                return Err(NdRejection::new(
                    path,
                    NdReason::HypNotInContext {
                        prop: a.clone(),
                        ctx: ctx.clone(),
                    },
                ));
            }
            (a.clone(), NdRule::Axiom)
        }
        SchemeTerm::HypFull(gamma, a) => {
            let stated = gamma.with(a);
            if stated != *ctx {
                return Err(NdRejection::new(
                    path,
                    NdReason::ContextMismatch {
                        expected: ctx.clone(),
                        found: stated,
                    },
                ));
            }
            (a.clone(), NdRule::Axiom)
        }
        SchemeTerm::Lam(a, _) => (Prop::imp(a.clone(), concl_of(0).clone()), NdRule::ImpIntro),
        SchemeTerm::Pair(..) => (
            Prop::and(concl_of(0).clone(), concl_of(1).clone()),
            NdRule::AndIntro,
        ),
        SchemeTerm::Fst(_) => (conjunction(concl_of(0), &path)?.0.clone(), NdRule::AndElim1),
        SchemeTerm::Snd(_) => (conjunction(concl_of(0), &path)?.1.clone(), NdRule::AndElim2),
    };
    Ok(DerivTree::new(
        SequentLabel {
            sequent: Sequent::new(ctx.clone(), concl),
            rule: Some(rule),
        },
        children,
    ))
}

/// Reconstructs the full sequent derivation of a scheme term: contexts from
/// the root down, then conclusions from the leaves up.
pub fn scheme_derivation(
    term: &SchemeTerm,
    root_ctx: &Context,
) -> Result<SequentDeriv, NdRejection> {
    let ctxs = infer_contexts(term, root_ctx.clone());
    infer_conclusions(term, &ctxs, NodePath::root())
}

/// The sequent a scheme term proves under `root_ctx`.
pub fn check_scheme(term: &SchemeTerm, root_ctx: &Context) -> Result<Sequent, NdRejection> {
    scheme_derivation(term, root_ctx).map(|d| d.label.sequent)
}

/// Reconstructs the sequent derivation of a closed variable term.
pub fn var_derivation(term: &VarTerm) -> Result<SequentDeriv, NdRejection> {
    var_at(term, &Context::empty(), &mut Vec::new(), NodePath::root())
}

/// The sequent a closed variable term proves; its context is empty.
pub fn check_var(term: &VarTerm) -> Result<Sequent, NdRejection> {
    var_derivation(term).map(|d| d.label.sequent)
}

fn var_at(
    term: &VarTerm,
    ctx: &Context,
    binders: &mut Vec<(String, Prop)>,
    path: NodePath,
) -> Result<SequentDeriv, NdRejection> {
    let node = |concl: Prop, rule: NdRule, children: Vec<SequentDeriv>| {
        DerivTree::new(
            SequentLabel {
                sequent: Sequent::new(ctx.clone(), concl),
                rule: Some(rule),
            },
            children,
        )
    };
    match term {
        VarTerm::Var(x) => {
            let (_, a) = binders
                .iter()
                .rev()
                .find(|(name, _)| name == x)
                .ok_or_else(|| NdRejection::new(path, NdReason::UnboundVariable(x.clone())))?;
            Ok(node(a.clone(), NdRule::Axiom, vec![]))
        }
        VarTerm::Lam(x, a, body) => {
            binders.push((x.clone(), a.clone()));
            let inner = var_at(body, &ctx.with(a), binders, path.child(0));
            binders.pop();
            let inner = inner?;
            let concl = Prop::imp(a.clone(), inner.label.sequent.concl.clone());
            Ok(node(concl, NdRule::ImpIntro, vec![inner]))
        }
        VarTerm::Pair(l, r) => {
            let l = var_at(l, ctx, binders, path.child(0))?;
            let r = var_at(r, ctx, binders, path.child(1))?;
            let concl = Prop::and(l.label.sequent.concl.clone(), r.label.sequent.concl.clone());
            Ok(node(concl, NdRule::AndIntro, vec![l, r]))
        }
        VarTerm::Fst(t) | VarTerm::Snd(t) => {
            let inner = var_at(t, ctx, binders, path.child(0))?;
            let (a, b) = conjunction(&inner.label.sequent.concl, &path)?;
            let (concl, rule) = if matches!(term, VarTerm::Fst(_)) {
                (a.clone(), NdRule::AndElim1)
            } else {
                (b.clone(), NdRule::AndElim2)
            };
            Ok(node(concl, rule, vec![inner]))
        }
    }
}
