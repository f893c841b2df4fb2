use std::collections::BTreeMap;

use super::{AutomatonError, Nfa, Transition, Word, FINAL_RULE_PREFIX};
use crate::ind::{DerivTree, Rule, RuleName, RuleSystem};
use crate::syntax::NodePath;

/// What a compiled rule stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompiledRule {
    /// From premise `to`, conclude `from`; erases to `letter`.
    Step(Transition),
    /// Conclude the final state with no premise; erases to the empty word.
    Accept(String),
}

impl CompiledRule {
    /// The letter this rule erases to, if any.
    pub fn letter(&self) -> Option<&str> {
        match self {
            CompiledRule::Step(t) => Some(&t.letter),
            CompiledRule::Accept(_) => None,
        }
    }

    pub fn conclusion(&self) -> &str {
        match self {
            CompiledRule::Step(t) => &t.from,
            CompiledRule::Accept(q) => q,
        }
    }
}

/// An automaton as a rule system over its states, with the erasure table
/// from rule names back to letters.
#[derive(Debug, Clone)]
pub struct CompiledRules {
    pub system: RuleSystem<String>,
    pub table: BTreeMap<RuleName, CompiledRule>,
}

/// Each transition `s --a--> t` becomes a unary rule `a_k : t ↦ s`, with
/// `k` counting the transitions on `a` in order of (premise, conclusion).
/// Each final state `q` becomes a nullary rule `eps_j : () ↦ q`.
pub fn compile(nfa: &Nfa) -> CompiledRules {
    let mut steps: Vec<&Transition> = nfa.transitions().iter().collect();
    steps.sort_by(|x, y| (&x.letter, &x.to, &x.from).cmp(&(&y.letter, &y.to, &y.from)));
    let mut rules = Vec::new();
    let mut table = BTreeMap::new();
    let mut per_letter: BTreeMap<&str, usize> = BTreeMap::new();
    for t in steps {
        let k = per_letter.entry(&t.letter).or_default();
        *k += 1;
        let name = RuleName::new(format!("{}{}", t.letter, k)).expect("letters are identifiers");
        let rule = Rule::table(name.clone(), 1, [(vec![t.to.clone()], t.from.clone())])
            .expect("single entry");
        rules.push(rule);
        table.insert(name, CompiledRule::Step(t.clone()));
    }
    for (j, q) in nfa.finals().iter().enumerate() {
        let name = RuleName::new(format!("{FINAL_RULE_PREFIX}{}", j + 1)).expect("identifier");
        rules.push(Rule::table(name.clone(), 0, [(vec![], q.clone())]).expect("single entry"));
        table.insert(name, CompiledRule::Accept(q.clone()));
    }
    // letters cannot end in a digit and `eps` is not a letter
    let system = RuleSystem::new("states", rules).expect("compiled names are distinct");
    CompiledRules { system, table }
}

impl CompiledRules {
    /// The erasure map: the word a linear derivation spells, root first.
    pub fn erase(&self, tree: &DerivTree<RuleName>) -> Result<Word, AutomatonError> {
        let mut letters = Vec::new();
        let mut node = tree;
        let mut path = NodePath::root();
        loop {
            let malformed = |reason: String| AutomatonError::MalformedChain {
                path: path.clone(),
                reason,
            };
            let rule = self
                .table
                .get(&node.label)
                .ok_or_else(|| malformed(format!("unknown rule name `{}`", node.label)))?;
            match (rule, node.children.as_slice()) {
                (CompiledRule::Accept(_), []) => return Ok(Word::new(letters)),
                (CompiledRule::Step(t), [child]) => {
                    letters.push(t.letter.clone());
                    node = child;
                    path = path.child(0);
                }
                (_, kids) => {
                    return Err(malformed(format!(
                        "`{}` cannot have {} premise(s) in a chain",
                        node.label,
                        kids.len()
                    )))
                }
            }
        }
    }

    /// Rule names in the system's order, with what each erases to.
    pub fn erasure_table(&self) -> Vec<(RuleName, Option<String>)> {
        self.system
            .rules()
            .iter()
            .map(|r| {
                let letter = self.table[r.name()].letter().map(str::to_string);
                (r.name().clone(), letter)
            })
            .collect()
    }
}

/// Every name-labeled derivation of `state` that erases to `word`, in
/// lexicographic order of rule names.
pub fn derivations_of(
    nfa: &Nfa,
    state: &str,
    word: &Word,
) -> Result<Vec<DerivTree<RuleName>>, AutomatonError> {
    nfa.check_input(state, word)?;
    let compiled = compile(nfa);
    let mut out = chains(&compiled, state, word.letters());
    out.sort();
    Ok(out)
}

fn chains(compiled: &CompiledRules, state: &str, letters: &[String]) -> Vec<DerivTree<RuleName>> {
    let mut out = Vec::new();
    for (name, rule) in &compiled.table {
        match (rule, letters.split_first()) {
            (CompiledRule::Accept(q), None) if q == state => {
                out.push(DerivTree::leaf(name.clone()))
            }
            (CompiledRule::Step(t), Some((first, rest)))
                if t.from == state && t.letter == *first =>
            {
                for sub in chains(compiled, &t.to, rest) {
                    out.push(DerivTree::new(name.clone(), vec![sub]));
                }
            }
            _ => {}
        }
    }
    out
}
