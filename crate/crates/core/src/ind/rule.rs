use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;
use std::sync::Arc;

use super::IndError;

/// A value of the domain an inductive definition carves a subset out of.
///
/// Equality must agree with the textual rendering: two elements that render
/// the same are the same element.
pub trait Element: Clone + Ord + Hash + Debug + Display + Send + Sync + 'static {}

impl<T> Element for T where T: Clone + Ord + Hash + Debug + Display + Send + Sync + 'static {}

/// Name of a rule: nonempty, without parentheses, commas or whitespace.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RuleName(String);

impl RuleName {
    pub fn new(name: impl Into<String>) -> Result<Self, IndError> {
        let name = name.into();
        if Self::is_valid(&name) {
            Ok(RuleName(name))
        } else {
            Err(IndError::InvalidRuleName(name))
        }
    }

    pub fn is_valid(name: &str) -> bool {
        !name.is_empty()
            && !name
                .chars()
                .any(|c| c == '(' || c == ')' || c == ',' || c.is_whitespace())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for RuleName {
    type Err = IndError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleName::new(s)
    }
}

impl TryFrom<&str> for RuleName {
    type Error = IndError;

    fn try_from(s: &str) -> Result<Self, Self::Error> {
        RuleName::new(s)
    }
}

type ApplyFn<E> = dyn Fn(&[E]) -> Option<E> + Send + Sync;

/// A named partial function from `arity`-tuples of elements to an element.
///
/// The function must be deterministic. `None` means the rule does not apply
/// to that tuple.
#[derive(Clone)]
pub struct Rule<E> {
    name: RuleName,
    arity: usize,
    apply: Arc<ApplyFn<E>>,
}

impl<E: Element> Rule<E> {
    /// A rule given by a program.
    pub fn new(
        name: RuleName,
        arity: usize,
        apply: impl Fn(&[E]) -> Option<E> + Send + Sync + 'static,
    ) -> Self {
        Rule {
            name,
            arity,
            apply: Arc::new(apply),
        }
    }

    /// A rule given by its finite graph. Two entries with the same inputs and
    /// different outputs would make the rule non-functional and are rejected.
    pub fn table(
        name: RuleName,
        arity: usize,
        entries: impl IntoIterator<Item = (Vec<E>, E)>,
    ) -> Result<Self, IndError> {
        let mut graph: BTreeMap<Vec<E>, E> = BTreeMap::new();
        for (args, out) in entries {
            if args.len() != arity {
                return Err(IndError::ArityMismatch {
                    rule: name,
                    expected: arity,
                    found: args.len(),
                });
            }
            if let Some(prev) = graph.get(&args) {
                if *prev != out {
                    return Err(IndError::NonFunctionalTable(name));
                }
            }
            graph.insert(args, out);
        }
        Ok(Rule::new(name, arity, move |args: &[E]| {
            graph.get(args).cloned()
        }))
    }

    pub fn name(&self) -> &RuleName {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Applies the rule; `Ok(None)` when the rule is undefined on `args`.
    pub fn apply(&self, args: &[E]) -> Result<Option<E>, IndError> {
        if args.len() != self.arity {
            return Err(IndError::ArityMismatch {
                rule: self.name.clone(),
                expected: self.arity,
                found: args.len(),
            });
        }
        Ok((self.apply)(args))
    }
}

impl<E> Debug for Rule<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Rule")
            .field("name", &self.name)
            .field("arity", &self.arity)
            .finish_non_exhaustive()
    }
}

/// Bounds on materialized iterates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest set an iterate may reach.
    pub max_set_size: usize,
    /// Largest number of steps `iterate` and `member` accept.
    pub max_depth: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_set_size: 100_000,
            max_depth: 10_000,
        }
    }
}

/// An ordered family of rules with pairwise distinct names.
#[derive(Debug, Clone)]
pub struct RuleSystem<E> {
    domain: String,
    rules: Vec<Rule<E>>,
    by_name: HashMap<RuleName, usize>,
    limits: Limits,
}

impl<E: Element> RuleSystem<E> {
    pub fn new(domain: impl Into<String>, rules: Vec<Rule<E>>) -> Result<Self, IndError> {
        let mut by_name = HashMap::with_capacity(rules.len());
        for (i, rule) in rules.iter().enumerate() {
            if by_name.insert(rule.name.clone(), i).is_some() {
                return Err(IndError::DuplicateRuleName(rule.name.clone()));
            }
        }
        Ok(RuleSystem {
            domain: domain.into(),
            rules,
            by_name,
            limits: Limits::default(),
        })
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn domain(&self) -> &str {
        &self.domain
    }

    pub fn rules(&self) -> &[Rule<E>] {
        &self.rules
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn rule(&self, name: &RuleName) -> Option<&Rule<E>> {
        self.by_name.get(name).map(|&i| &self.rules[i])
    }

    /// Position of the named rule in the rule list.
    pub fn position(&self, name: &RuleName) -> Option<usize> {
        self.by_name.get(name).copied()
    }
}
