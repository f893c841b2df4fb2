use std::collections::{BTreeSet, HashMap};
use std::fmt::{self, Display};

use super::{DerivTree, Element, FullLabel, IndError, RuleSystem};

/// A finite set of elements, rendered `{e1, e2, ...}` in element order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSet<E>(BTreeSet<E>);

impl<E: Element> FiniteSet<E> {
    pub fn empty() -> Self {
        FiniteSet(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.0.contains(e)
    }

    pub fn insert(&mut self, e: E) -> bool {
        self.0.insert(e)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = &E> {
        self.0.iter()
    }

    pub fn as_btree(&self) -> &BTreeSet<E> {
        &self.0
    }
}

impl<E: Element> Default for FiniteSet<E> {
    fn default() -> Self {
        FiniteSet::empty()
    }
}

impl<E: Element> FromIterator<E> for FiniteSet<E> {
    fn from_iter<I: IntoIterator<Item = E>>(iter: I) -> Self {
        FiniteSet(iter.into_iter().collect())
    }
}

impl<E: Element, const N: usize> From<[E; N]> for FiniteSet<E> {
    fn from(items: [E; N]) -> Self {
        items.into_iter().collect()
    }
}

impl<E: Element> IntoIterator for FiniteSet<E> {
    type Item = E;
    type IntoIter = std::collections::btree_set::IntoIter<E>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<E: Display> Display for FiniteSet<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Calls `visit` on every tuple of `pool^arity` in lexicographic order.
fn for_each_tuple<E: Clone>(pool: &[E], arity: usize, mut visit: impl FnMut(&[E])) {
    if arity == 0 {
        visit(&[]);
        return;
    }
    if pool.is_empty() {
        return;
    }
    let mut idx = vec![0usize; arity];
    let mut tuple: Vec<E> = vec![pool[0].clone(); arity];
    loop {
        visit(&tuple);
        let mut pos = arity;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < pool.len() {
                tuple[pos] = pool[idx[pos]].clone();
                break;
            }
            idx[pos] = 0;
            tuple[pos] = pool[0].clone();
        }
    }
}

/// Every defined application of a rule over tuples drawn from `pool`, in
/// rule-list order then tuple order.
fn applications<E: Element>(
    sys: &RuleSystem<E>,
    pool: &[E],
    mut visit: impl FnMut(usize, &[E], E),
) {
    for (ri, rule) in sys.rules().iter().enumerate() {
        for_each_tuple(pool, rule.arity(), |args| {
            // arity is right by construction
            if let Ok(Some(out)) = rule.apply(args) {
                visit(ri, args, out);
            }
        });
    }
}

/// One application of the operator: all conclusions of rules whose premises
/// all lie in `x`.
pub fn step<E: Element>(sys: &RuleSystem<E>, x: &FiniteSet<E>) -> FiniteSet<E> {
    let pool: Vec<E> = x.iter().cloned().collect();
    let mut out = FiniteSet::empty();
    applications(sys, &pool, |_, _, e| {
        out.insert(e);
    });
    out
}

/// Result of `iterate`: the set reached and, if it was observed, the first
/// stage `k` with `F^k(∅) = F^(k+1)(∅)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Iterates<E> {
    pub set: FiniteSet<E>,
    pub fixed_point: Option<usize>,
}

/// `F^steps(∅)`.
pub fn iterate<E: Element>(sys: &RuleSystem<E>, steps: usize) -> Result<Iterates<E>, IndError> {
    let limits = sys.limits();
    if steps > limits.max_depth {
        return Err(IndError::DepthLimit {
            requested: steps,
            limit: limits.max_depth,
        });
    }
    let mut set = FiniteSet::empty();
    for k in 0..steps {
        let next = step(sys, &set);
        if next.len() > limits.max_set_size {
            return Err(IndError::SetLimit {
                stage: k + 1,
                limit: limits.max_set_size,
            });
        }
        if next == set {
            return Ok(Iterates {
                set,
                fixed_point: Some(k),
            });
        }
        set = next;
    }
    Ok(Iterates {
        set,
        fixed_point: None,
    })
}

/// Outcome of a bounded membership search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership<E> {
    Found(DerivTree<FullLabel<E>>),
    NotFoundWithin(usize),
}

impl<E> Membership<E> {
    pub fn witness(&self) -> Option<&DerivTree<FullLabel<E>>> {
        match self {
            Membership::Found(t) => Some(t),
            Membership::NotFoundWithin(_) => None,
        }
    }
}

/// Searches `F^depth(∅)` for `target` by iterative deepening.
///
/// Each element keeps the first witness found for it, so witnesses have
/// minimal height; ties go to the earlier rule, then the earlier tuple.
pub fn member<E: Element>(
    sys: &RuleSystem<E>,
    target: &E,
    depth: usize,
) -> Result<Membership<E>, IndError> {
    if depth == 0 {
        return Err(IndError::ZeroDepth);
    }
    let limits = sys.limits();
    if depth > limits.max_depth {
        return Err(IndError::DepthLimit {
            requested: depth,
            limit: limits.max_depth,
        });
    }
    let mut witness: HashMap<E, (usize, Vec<E>)> = HashMap::new();
    let mut pool: Vec<E> = Vec::new();
    for stage in 1..=depth {
        let mut fresh: HashMap<E, (usize, Vec<E>)> = HashMap::new();
        let mut next: BTreeSet<E> = BTreeSet::new();
        applications(sys, &pool, |ri, args, out| {
            if !witness.contains_key(&out) && !fresh.contains_key(&out) {
                fresh.insert(out.clone(), (ri, args.to_vec()));
            }
            next.insert(out);
        });
        if next.len() > limits.max_set_size {
            return Err(IndError::SetLimit {
                stage,
                limit: limits.max_set_size,
            });
        }
        let stalled = fresh.is_empty();
        witness.extend(fresh);
        if witness.contains_key(target) {
            return Ok(Membership::Found(build_witness(sys, &witness, target)));
        }
        if stalled {
            break;
        }
        pool = next.into_iter().collect();
    }
    Ok(Membership::NotFoundWithin(depth))
}

fn build_witness<E: Element>(
    sys: &RuleSystem<E>,
    witness: &HashMap<E, (usize, Vec<E>)>,
    e: &E,
) -> DerivTree<FullLabel<E>> {
    let (ri, args) = &witness[e];
    DerivTree::new(
        FullLabel::new(e.clone(), sys.rules()[*ri].name().clone()),
        args.iter()
            .map(|a| build_witness(sys, witness, a))
            .collect(),
    )
}
