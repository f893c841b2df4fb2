//! Scheme terms whose axioms all carry their context are derivations over
//! a rule system of functional rules, so the engine's generic top-down
//! conclusion inference applies to them unchanged.

use std::collections::BTreeMap;
use std::fmt;

use super::{Context, NdReason, NdRejection, Prop, SchemeTerm, Sequent};
use crate::ind::{infer_conclusion, DerivTree, Rule, RuleName, RuleSystem};
use crate::syntax::NodePath;

/// A natural-deduction rule made functional by fixing what the conclusion
/// cannot be computed from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SchemeRule {
    /// `axiom⟨Γ, A⟩`: concludes `Γ, A ⊢ A`.
    Axiom(Context, Prop),
    Pair,
    Fst,
    Snd,
    /// `λA`: from `Δ ⊢ B` concludes `Δ \ {A} ⊢ A ⇒ B`.
    Lam(Prop),
}

impl SchemeRule {
    pub fn arity(&self) -> usize {
        match self {
            SchemeRule::Axiom(..) => 0,
            SchemeRule::Pair => 2,
            SchemeRule::Fst | SchemeRule::Snd | SchemeRule::Lam(_) => 1,
        }
    }

    /// The unique conclusion, if the rule applies to `premises`.
    pub fn conclude(&self, premises: &[Sequent]) -> Option<Sequent> {
        match (self, premises) {
            (SchemeRule::Axiom(gamma, a), []) => Some(Sequent::new(gamma.with(a), a.clone())),
            (SchemeRule::Pair, [l, r]) if l.ctx == r.ctx => Some(Sequent::new(
                l.ctx.clone(),
                Prop::and(l.concl.clone(), r.concl.clone()),
            )),
            (SchemeRule::Fst, [s]) => s
                .concl
                .as_and()
                .map(|(a, _)| Sequent::new(s.ctx.clone(), a.clone())),
            (SchemeRule::Snd, [s]) => s
                .concl
                .as_and()
                .map(|(_, b)| Sequent::new(s.ctx.clone(), b.clone())),
            (SchemeRule::Lam(a), [s]) => Some(Sequent::new(
                s.ctx.without(a),
                Prop::imp(a.clone(), s.concl.clone()),
            )),
            _ => None,
        }
    }
}

impl fmt::Display for SchemeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemeRule::Axiom(gamma, a) => write!(f, "axiom<{{{gamma}}}, {a}>"),
            SchemeRule::Pair => f.write_str("<,>"),
            SchemeRule::Fst => f.write_str("fst"),
            SchemeRule::Snd => f.write_str("snd"),
            SchemeRule::Lam(a) => write!(f, "fun [{a}]"),
        }
    }
}

/// A scheme term recast as a name-labeled derivation over its own rule
/// system. Each distinct axiom and binder gets a numbered name; `legend`
/// says which rule each name stands for.
#[derive(Debug, Clone)]
pub struct FunctionalProof {
    pub system: RuleSystem<Sequent>,
    pub tree: DerivTree<RuleName>,
    pub legend: Vec<(RuleName, SchemeRule)>,
}

/// Builds the functional rule system of a term without `[A]` leaves.
pub fn functionalize(term: &SchemeTerm) -> Result<FunctionalProof, NdRejection> {
    let mut names: BTreeMap<SchemeRule, RuleName> = BTreeMap::new();
    let mut legend = Vec::new();
    let tree = name_tree(term, &mut names, &mut legend, NodePath::root())?;
    let rules = legend
        .iter()
        .map(|(name, rule): &(RuleName, SchemeRule)| {
            let rule = rule.clone();
            Rule::new(name.clone(), rule.arity(), move |premises: &[Sequent]| {
                rule.conclude(premises)
            })
        })
        .collect();
    let system = RuleSystem::new("sequents", rules).expect("names are numbered");
    Ok(FunctionalProof {
        system,
        tree,
        legend,
    })
}

fn name_tree(
    term: &SchemeTerm,
    names: &mut BTreeMap<SchemeRule, RuleName>,
    legend: &mut Vec<(RuleName, SchemeRule)>,
    path: NodePath,
) -> Result<DerivTree<RuleName>, NdRejection> {
    let rule = match term {
        SchemeTerm::Hyp(a) => {
            return Err(NdRejection::new(
                path,
                NdReason::Inference(format!(
                    "hyp [{a}] leaves its context open; top-down inference needs axiom {{.. | {a}}}"
                )),
            ))
        }
        SchemeTerm::HypFull(gamma, a) => SchemeRule::Axiom(gamma.clone(), a.clone()),
        SchemeTerm::Lam(a, _) => SchemeRule::Lam(a.clone()),
        SchemeTerm::Pair(..) => SchemeRule::Pair,
        SchemeTerm::Fst(_) => SchemeRule::Fst,
        SchemeTerm::Snd(_) => SchemeRule::Snd,
    };
    let name = match names.get(&rule) {
        Some(name) => name.clone(),
        None => {
            let base = match rule {
                SchemeRule::Axiom(..) => "axiom",
                SchemeRule::Lam(_) => "lam",
                SchemeRule::Pair => "pair",
                SchemeRule::Fst => "fst",
                SchemeRule::Snd => "snd",
            };
            let numbered = matches!(rule, SchemeRule::Axiom(..) | SchemeRule::Lam(_));
            let text = if numbered {
                let n = legend.iter().filter(|(_, r)| same_kind(r, &rule)).count() + 1;
                format!("{base}{n}")
            } else {
                base.to_string()
            };
            let name = RuleName::new(text).expect("plain identifier");
            names.insert(rule.clone(), name.clone());
            legend.push((name.clone(), rule));
            name
        }
    };
    let children = term
        .children()
        .into_iter()
        .enumerate()
        .map(|(i, c)| name_tree(c, names, legend, path.child(i)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DerivTree::new(name, children))
}

fn same_kind(a: &SchemeRule, b: &SchemeRule) -> bool {
    std::mem::discriminant(a) == std::mem::discriminant(b)
}

/// Conclusion inference with no context pass: every axiom states its
/// context, so the sequent of each node follows from its children alone.
pub fn infer_top_down(term: &SchemeTerm) -> Result<Sequent, NdRejection> {
    let proof = functionalize(term)?;
    infer_conclusion(&proof.system, &proof.tree)
        .map_err(|r| NdRejection::new(r.path, NdReason::Inference(r.reason.to_string())))
}
