use std::fmt;

use super::{DerivTree, Element, FullLabel, RuleName, RuleSystem};
use crate::syntax::NodePath;

/// Why a node of a derivation was refused.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RejectReason {
    /// No rule of the system maps the children to the node.
    NoRuleApplies {
        conclusion: String,
        premises: Vec<String>,
    },
    UnknownRuleName(RuleName),
    ArityMismatch {
        rule: RuleName,
        expected: usize,
        found: usize,
    },
    /// The named rule is undefined on the children.
    RuleUndefined {
        rule: RuleName,
        premises: Vec<String>,
    },
    /// The named rule produces something other than the node's label.
    WrongConclusion {
        rule: RuleName,
        expected: String,
        found: String,
    },
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::NoRuleApplies {
                conclusion,
                premises,
            } => {
                write!(
                    f,
                    "no rule derives {conclusion} from ({})",
                    premises.join(", ")
                )
            }
            RejectReason::UnknownRuleName(name) => write!(f, "unknown rule name `{name}`"),
            RejectReason::ArityMismatch {
                rule,
                expected,
                found,
            } => write!(
                f,
                "rule `{rule}` takes {expected} premise(s), node has {found}"
            ),
            RejectReason::RuleUndefined { rule, premises } => {
                write!(f, "rule `{rule}` is undefined on ({})", premises.join(", "))
            }
            RejectReason::WrongConclusion {
                rule,
                expected,
                found,
            } => write!(
                f,
                "rule `{rule}` concludes {found}, node is labeled {expected}"
            ),
        }
    }
}

/// A refused derivation: the first failing node and the reason.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("rejected at {path}: {reason}")]
pub struct Rejection {
    pub path: NodePath,
    pub reason: RejectReason,
}

impl Rejection {
    pub fn new(path: NodePath, reason: RejectReason) -> Self {
        Rejection { path, reason }
    }
}

fn render<E: Element>(items: &[E]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

/// Checks an element-labeled derivation by searching the rules at each node.
pub fn check_elem_tree<E: Element>(
    sys: &RuleSystem<E>,
    tree: &DerivTree<E>,
) -> Result<(), Rejection> {
    for (path, node) in tree.preorder() {
        let premises: Vec<E> = node.child_labels().cloned().collect();
        let justified = sys.rules().iter().any(|rule| {
            rule.arity() == premises.len()
                && matches!(rule.apply(&premises), Ok(Some(ref e)) if *e == node.label)
        });
        if !justified {
            return Err(Rejection::new(
                path,
                RejectReason::NoRuleApplies {
                    conclusion: node.label.to_string(),
                    premises: render(&premises),
                },
            ));
        }
    }
    Ok(())
}

/// Checks a fully labeled derivation by applying the named rule at each node.
pub fn check_full_tree<E: Element>(
    sys: &RuleSystem<E>,
    tree: &DerivTree<FullLabel<E>>,
) -> Result<(), Rejection> {
    for (path, node) in tree.preorder() {
        let name = &node.label.rule;
        let rule = sys.rule(name).ok_or_else(|| {
            Rejection::new(path.clone(), RejectReason::UnknownRuleName(name.clone()))
        })?;
        if rule.arity() != node.children.len() {
            return Err(Rejection::new(
                path,
                RejectReason::ArityMismatch {
                    rule: name.clone(),
                    expected: rule.arity(),
                    found: node.children.len(),
                },
            ));
        }
        let premises: Vec<E> = node
            .children
            .iter()
            .map(|c| c.label.element.clone())
            .collect();
        match rule.apply(&premises) {
            Ok(Some(e)) if e == node.label.element => {}
            Ok(Some(e)) => {
                return Err(Rejection::new(
                    path,
                    RejectReason::WrongConclusion {
                        rule: name.clone(),
                        expected: node.label.element.to_string(),
                        found: e.to_string(),
                    },
                ))
            }
            _ => {
                return Err(Rejection::new(
                    path,
                    RejectReason::RuleUndefined {
                        rule: name.clone(),
                        premises: render(&premises),
                    },
                ))
            }
        }
    }
    Ok(())
}

/// Conclusion inference: computes the element of every node of a name-labeled
/// derivation, leaves first, and returns the fully labeled tree.
pub fn infer_labels<E: Element>(
    sys: &RuleSystem<E>,
    tree: &DerivTree<RuleName>,
) -> Result<DerivTree<FullLabel<E>>, Rejection> {
    infer_at(sys, tree, NodePath::root())
}

fn infer_at<E: Element>(
    sys: &RuleSystem<E>,
    node: &DerivTree<RuleName>,
    path: NodePath,
) -> Result<DerivTree<FullLabel<E>>, Rejection> {
    let name = &node.label;
    let rule = sys
        .rule(name)
        .ok_or_else(|| Rejection::new(path.clone(), RejectReason::UnknownRuleName(name.clone())))?;
    if rule.arity() != node.children.len() {
        return Err(Rejection::new(
            path,
            RejectReason::ArityMismatch {
                rule: name.clone(),
                expected: rule.arity(),
                found: node.children.len(),
            },
        ));
    }
    let children = node
        .children
        .iter()
        .enumerate()
        .map(|(i, c)| infer_at(sys, c, path.child(i)))
        .collect::<Result<Vec<_>, _>>()?;
    let premises: Vec<E> = children.iter().map(|c| c.label.element.clone()).collect();
    match rule.apply(&premises) {
        Ok(Some(e)) => Ok(DerivTree::new(FullLabel::new(e, name.clone()), children)),
        _ => Err(Rejection::new(
            path,
            RejectReason::RuleUndefined {
                rule: name.clone(),
                premises: render(&premises),
            },
        )),
    }
}

/// The root element inferred from a name-labeled derivation.
pub fn infer_conclusion<E: Element>(
    sys: &RuleSystem<E>,
    tree: &DerivTree<RuleName>,
) -> Result<E, Rejection> {
    infer_labels(sys, tree).map(|t| t.label.element)
}
