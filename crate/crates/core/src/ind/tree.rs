use std::fmt::{self, Display};

use super::RuleName;
use crate::syntax::NodePath;

/// A finite tree with ordered children.
///
/// Derivations come in three labelings: by element (`DerivTree<E>`), by rule
/// name (`DerivTree<RuleName>`) and by both (`DerivTree<FullLabel<E>>`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DerivTree<L> {
    pub label: L,
    pub children: Vec<DerivTree<L>>,
}

impl<L> DerivTree<L> {
    pub fn new(label: L, children: Vec<DerivTree<L>>) -> Self {
        DerivTree { label, children }
    }

    pub fn leaf(label: L) -> Self {
        DerivTree {
            label,
            children: Vec::new(),
        }
    }

    /// A unary chain; the first label is the leaf, the last one the root.
    ///
    /// # Panics
    /// If `labels` is empty.
    pub fn chain(labels: impl IntoIterator<Item = L>) -> Self {
        let mut labels = labels.into_iter();
        let mut tree = DerivTree::leaf(labels.next().expect("chain needs at least one label"));
        for label in labels {
            tree = DerivTree::new(label, vec![tree]);
        }
        tree
    }

    /// Number of nodes on the longest root-to-leaf path; a leaf has height 1.
    pub fn height(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(DerivTree::height)
            .max()
            .unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(DerivTree::size).sum::<usize>()
    }

    pub fn map<M>(&self, f: &impl Fn(&L) -> M) -> DerivTree<M> {
        DerivTree {
            label: f(&self.label),
            children: self.children.iter().map(|c| c.map(f)).collect(),
        }
    }

    pub fn get(&self, path: &NodePath) -> Option<&DerivTree<L>> {
        path.0
            .iter()
            .try_fold(self, |node, &i| node.children.get(i))
    }

    /// All nodes in preorder, each with its path.
    pub fn preorder(&self) -> Vec<(NodePath, &DerivTree<L>)> {
        let mut out = Vec::new();
        let mut stack = vec![(NodePath::root(), self)];
        while let Some((path, node)) = stack.pop() {
            for (i, child) in node.children.iter().enumerate().rev() {
                stack.push((path.child(i), child));
            }
            out.push((path, node));
        }
        out
    }

    pub fn child_labels(&self) -> impl Iterator<Item = &L> {
        self.children.iter().map(|c| &c.label)
    }
}

/// Node label of a fully labeled derivation: the element and the rule that
/// produced it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FullLabel<E> {
    pub element: E,
    pub rule: RuleName,
}

impl<E> FullLabel<E> {
    pub fn new(element: E, rule: RuleName) -> Self {
        FullLabel { element, rule }
    }
}

impl<E: Display> Display for FullLabel<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.rule, self.element)
    }
}

impl<E: Clone> DerivTree<FullLabel<E>> {
    pub fn erase_names(&self) -> DerivTree<E> {
        self.map(&|l| l.element.clone())
    }

    pub fn erase_elements(&self) -> DerivTree<RuleName> {
        self.map(&|l| l.rule.clone())
    }

    pub fn conclusion(&self) -> &E {
        &self.label.element
    }
}

/// Linear form: `name` for a leaf, `name(child, ...)` otherwise.
impl<L: Display> Display for DerivTree<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if !self.children.is_empty() {
            f.write_str("(")?;
            for (i, child) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{child}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}
