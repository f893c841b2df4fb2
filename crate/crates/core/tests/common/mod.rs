//! Generators and independent oracles shared by the property suites and the
//! acceptance suite.
#![allow(dead_code)]

pub mod golden;

use std::collections::BTreeSet;

use deriv::automata::{Nfa, Transition, Word};
use deriv::ind::{FiniteSet, Rule, RuleName, RuleSystem};
use deriv::natded::{Prop, SchemeTerm, VarTerm};
use deriv::recfun::Program;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

/// Property config without on-disk failure persistence.
pub fn config(cases: u32) -> Config {
    Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    }
}

/// Seeded runner so the acceptance numbers are reproducible.
pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        config(cases),
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

// ---------------------------------------------------------------------------
// rule systems over small naturals

/// Elements above this bound are outside every generated system.
pub const BOUND: u64 = 40;

#[derive(Debug, Clone)]
pub enum RuleSpec {
    Const(u64),
    Add(u64),
    Double,
    Sum,
    /// Defined only on even premises: `a ↦ a / 2`.
    Halve,
}

impl RuleSpec {
    fn rule(&self, name: String) -> Rule<u64> {
        let name = RuleName::new(name).expect("generated rule names are valid");
        let keep = |v: u64| (v <= BOUND).then_some(v);
        match *self {
            RuleSpec::Const(c) => Rule::new(name, 0, move |_| keep(c)),
            RuleSpec::Add(k) => Rule::new(name, 1, move |a: &[u64]| keep(a[0] + k)),
            RuleSpec::Double => Rule::new(name, 1, move |a: &[u64]| keep(a[0] * 2)),
            RuleSpec::Sum => Rule::new(name, 2, move |a: &[u64]| keep(a[0] + a[1])),
            RuleSpec::Halve => Rule::new(name, 1, |a: &[u64]| {
                a[0].is_multiple_of(2).then_some(a[0] / 2)
            }),
        }
    }
}

pub fn rule_spec() -> impl Strategy<Value = RuleSpec> {
    prop_oneof![
        (0..BOUND).prop_map(RuleSpec::Const),
        (1..6u64).prop_map(RuleSpec::Add),
        Just(RuleSpec::Double),
        Just(RuleSpec::Sum),
        Just(RuleSpec::Halve),
    ]
}

/// A nonempty list of rules; the first is always a constant so the defined
/// set is nonempty.
pub fn system_specs() -> impl Strategy<Value = Vec<RuleSpec>> {
    (
        (0..BOUND).prop_map(RuleSpec::Const),
        prop::collection::vec(rule_spec(), 0..4),
    )
        .prop_map(|(first, rest)| {
            let mut v = vec![first];
            v.extend(rest);
            v
        })
}

pub fn build_system(specs: &[RuleSpec]) -> RuleSystem<u64> {
    let rules = specs
        .iter()
        .enumerate()
        .map(|(i, s)| s.rule(format!("r{}", i + 1)))
        .collect();
    RuleSystem::new("small naturals", rules).expect("names are distinct")
}

pub fn small_set() -> impl Strategy<Value = FiniteSet<u64>> {
    prop::collection::btree_set(0..=BOUND, 0..12).prop_map(|s| s.into_iter().collect())
}

/// Independent oracle for one step: applies every rule to every tuple.
pub fn step_oracle(specs: &[RuleSpec], x: &BTreeSet<u64>) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for s in specs {
        match *s {
            RuleSpec::Const(c) => {
                out.insert(c);
            }
            RuleSpec::Add(k) => out.extend(x.iter().map(|a| a + k)),
            RuleSpec::Double => out.extend(x.iter().map(|a| a * 2)),
            RuleSpec::Sum => out.extend(x.iter().flat_map(|a| x.iter().map(move |b| a + b))),
            RuleSpec::Halve => out.extend(x.iter().filter(|a| *a % 2 == 0).map(|a| a / 2)),
        }
    }
    out.retain(|v| *v <= BOUND);
    out
}

// ---------------------------------------------------------------------------
// natural deduction terms

pub fn atom_name(i: u8) -> &'static str {
    ["P", "Q", "R"][usize::from(i % 3)]
}

/// Propositions over P, Q, R of depth at most `depth`.
pub fn prop_from(bytes: &mut impl Iterator<Item = u8>, depth: usize) -> Prop {
    let b = bytes.next().unwrap_or(0);
    if depth == 0 || b % 4 < 2 {
        return Prop::atom(atom_name(b / 4));
    }
    let l = prop_from(bytes, depth - 1);
    let r = prop_from(bytes, depth - 1);
    if b % 4 == 2 {
        Prop::and(l, r)
    } else {
        Prop::imp(l, r)
    }
}

/// Builds a well-typed variable term from a byte stream, returning the term
/// and its type. Binders reuse the names x, y, z so shadowing is common.
pub struct VarBuilder<I> {
    bytes: I,
}

impl<I: Iterator<Item = u8>> VarBuilder<I> {
    pub fn new(bytes: I) -> Self {
        VarBuilder { bytes }
    }

    fn byte(&mut self) -> u8 {
        self.bytes.next().unwrap_or(0)
    }

    pub fn build(&mut self, env: &[(String, Prop)], fuel: usize) -> (VarTerm, Prop) {
        let choice = self.byte() % 6;
        if fuel == 0 || choice == 0 {
            if let Some(last) = env.len().checked_sub(1) {
                let i = usize::from(self.byte()) % (last + 1);
                // Only pick names that are not shadowed by a later binder.
                let x = &env[i].0;
                let (x, a) = env.iter().rev().find(|(y, _)| y == x).unwrap_or(&env[i]);
                return (VarTerm::var(x.clone()), a.clone());
            }
        }
        match choice {
            _ if fuel == 0 => {
                let a = prop_from(&mut self.bytes, 1);
                (
                    VarTerm::lam("x", a.clone(), VarTerm::var("x")),
                    Prop::imp(a.clone(), a),
                )
            }
            0 | 1 => {
                let x = ["x", "y", "z"][usize::from(self.byte() % 3)].to_string();
                let a = prop_from(&mut self.bytes, 2);
                let mut inner = env.to_vec();
                inner.push((x.clone(), a.clone()));
                let (body, b) = self.build(&inner, fuel - 1);
                (VarTerm::lam(x, a.clone(), body), Prop::imp(a, b))
            }
            2 => {
                let (l, a) = self.build(env, fuel - 1);
                let (r, b) = self.build(env, fuel - 1);
                (VarTerm::pair(l, r), Prop::and(a, b))
            }
            _ => {
                let (t, a) = self.build(env, fuel - 1);
                let parts = a.as_and().map(|(l, r)| (l.clone(), r.clone()));
                match parts {
                    Some((l, _)) if choice == 3 => (VarTerm::fst(t), l),
                    Some((_, r)) => (VarTerm::snd(t), r),
                    None => (t, a),
                }
            }
        }
    }
}

/// A variable term that is well typed unless `mutate` is set, in which case
/// one binder annotation or variable is perturbed and the term may or may
/// not check.
pub fn var_term_from(bytes: &[u8], mutate: Option<u8>) -> VarTerm {
    let (t, _) = VarBuilder::new(bytes.iter().copied()).build(&[], 4);
    match mutate {
        None => t,
        Some(m) => perturb(t, m, &mut 0),
    }
}

fn perturb(t: VarTerm, m: u8, seen: &mut u8) -> VarTerm {
    *seen = seen.wrapping_add(1);
    let hit = *seen == m % 4 + 1;
    match t {
        VarTerm::Var(x) if hit => VarTerm::Var(if x == "x" { "w".into() } else { "x".into() }),
        VarTerm::Var(x) => VarTerm::Var(x),
        VarTerm::Lam(x, a, body) => {
            let a = if hit { Prop::atom(atom_name(m)) } else { a };
            VarTerm::lam(x, a, perturb(*body, m, seen))
        }
        VarTerm::Pair(l, r) => {
            let l = perturb(*l, m, seen);
            VarTerm::pair(l, perturb(*r, m, seen))
        }
        VarTerm::Fst(t) if hit => VarTerm::snd(*t),
        VarTerm::Fst(t) => VarTerm::fst(perturb(*t, m, seen)),
        VarTerm::Snd(t) if hit => VarTerm::fst(*t),
        VarTerm::Snd(t) => VarTerm::snd(perturb(*t, m, seen)),
    }
}

pub fn var_term() -> impl Strategy<Value = VarTerm> {
    (
        prop::collection::vec(any::<u8>(), 0..48),
        prop::option::weighted(0.4, any::<u8>()),
    )
        .prop_map(|(bytes, m)| var_term_from(&bytes, m))
}

/// Unconstrained scheme terms without explicit axioms; most do not check.
pub fn raw_scheme_term() -> impl Strategy<Value = SchemeTerm> {
    let prop =
        prop::collection::vec(any::<u8>(), 1..6).prop_map(|b| prop_from(&mut b.into_iter(), 2));
    let leaf = prop.clone().prop_map(SchemeTerm::Hyp);
    leaf.prop_recursive(4, 16, 2, move |inner| {
        prop_oneof![
            (prop.clone(), inner.clone()).prop_map(|(a, t)| SchemeTerm::lam(a, t)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| SchemeTerm::pair(l, r)),
            inner.clone().prop_map(SchemeTerm::fst),
            inner.prop_map(SchemeTerm::snd),
        ]
    })
}

// ---------------------------------------------------------------------------
// partial recursive programs

/// Builds a well-formed program of the given arity from a byte stream.
pub fn program_from(
    bytes: &mut impl Iterator<Item = u8>,
    arity: usize,
    size: usize,
    mu: bool,
) -> Program {
    let b = bytes.next().unwrap_or(0);
    let leaf = |b: u8| {
        if arity == 1 && b.is_multiple_of(3) {
            Program::Succ
        } else if arity > 0 && b % 3 == 1 {
            Program::Proj(arity, usize::from(b / 3) % arity + 1)
        } else {
            Program::Zero(arity)
        }
    };
    if size <= 1 {
        return leaf(b);
    }
    let budget = size - 1;
    match b % 5 {
        0 => leaf(b / 5),
        1 | 2 => {
            let m = usize::from(b / 5) % 2 + 1;
            let share = budget / (m + 1);
            let f = program_from(bytes, m, share.max(1), mu);
            let gs = (0..m)
                .map(|_| program_from(bytes, arity, share.max(1), mu))
                .collect();
            Program::comp(f, gs)
        }
        3 if arity >= 1 => {
            let g = program_from(bytes, arity - 1, budget / 2, mu);
            let h = program_from(bytes, arity + 1, budget - budget / 2, mu);
            Program::rec(g, h)
        }
        4 if mu => Program::mu(program_from(bytes, arity + 1, budget, mu)),
        _ => leaf(b / 5),
    }
}

pub fn program_with_input(mu: bool) -> impl Strategy<Value = (Program, Vec<u64>)> {
    (
        0..3usize,
        1..10usize,
        prop::collection::vec(any::<u8>(), 0..32),
        prop::collection::vec(0..=6u64, 3),
    )
        .prop_map(move |(arity, size, bytes, xs)| {
            let p = program_from(&mut bytes.into_iter(), arity, size, mu);
            (p, xs[..arity].to_vec())
        })
}

/// A μ-free program whose root is a recursion, with inputs at most 6.
pub fn rec_program_with_input() -> impl Strategy<Value = (Program, Vec<u64>)> {
    (
        1..3usize,
        1..6usize,
        prop::collection::vec(any::<u8>(), 0..32),
        prop::collection::vec(0..=6u64, 2),
    )
        .prop_map(|(arity, size, bytes, xs)| {
            let mut bytes = bytes.into_iter();
            let g = program_from(&mut bytes, arity - 1, size, false);
            let h = program_from(&mut bytes, arity + 1, size, false);
            (Program::rec(g, h), xs[..arity].to_vec())
        })
}

/// Independent evaluator for μ-free programs: recursion as a plain loop,
/// checked u128 arithmetic, and a step budget. `None` means the budget or
/// the arithmetic ran out.
pub fn loop_oracle(p: &Program, xs: &[u128], budget: &mut u64) -> Option<u128> {
    *budget = budget.checked_sub(1)?;
    match p {
        Program::Zero(_) => Some(0),
        Program::Succ => xs[0].checked_add(1),
        Program::Proj(_, i) => Some(xs[i - 1]),
        Program::Comp(f, gs) => {
            let ys = gs
                .iter()
                .map(|g| loop_oracle(g, xs, budget))
                .collect::<Option<Vec<_>>>()?;
            loop_oracle(f, &ys, budget)
        }
        Program::Rec(g, h) => {
            let (n, rest) = xs.split_first()?;
            let mut acc = loop_oracle(g, rest, budget)?;
            let mut y = 0u128;
            while y < *n {
                let mut args = vec![y, acc];
                args.extend_from_slice(rest);
                acc = loop_oracle(h, &args, budget)?;
                y += 1;
            }
            Some(acc)
        }
        Program::Mu(_) => None,
    }
}

// ---------------------------------------------------------------------------
// automata

pub const STATE_NAMES: [&str; 3] = ["s0", "s1", "s2"];
pub const LETTER_NAMES: [&str; 2] = ["a", "b"];

/// An NFA with up to 3 states and 2 letters, all chosen from bit masks.
pub fn nfa_from(states: usize, letters: usize, trans_mask: u32, final_mask: u8) -> Nfa {
    let mut transitions = Vec::new();
    let mut bit = 0;
    for from in &STATE_NAMES[..states] {
        for letter in &LETTER_NAMES[..letters] {
            for to in &STATE_NAMES[..states] {
                if trans_mask >> bit & 1 == 1 {
                    transitions.push(Transition::new(*from, *letter, *to));
                }
                bit += 1;
            }
        }
    }
    let finals: Vec<&str> = (0..states)
        .filter(|i| final_mask >> i & 1 == 1)
        .map(|i| STATE_NAMES[i])
        .collect();
    Nfa::new(
        STATE_NAMES[..states].iter().copied(),
        LETTER_NAMES[..letters].iter().copied(),
        transitions,
        finals,
    )
    .expect("generated automata are valid")
}

pub fn small_nfa() -> impl Strategy<Value = Nfa> {
    (1..=3usize, 1..=2usize, any::<u32>(), any::<u8>())
        .prop_map(|(s, l, t, f)| nfa_from(s, l, t, f))
}

/// Every word over the automaton's alphabet of length at most `max`.
pub fn all_words(nfa: &Nfa, max: usize) -> Vec<Word> {
    let letters: Vec<String> = nfa.alphabet().iter().cloned().collect();
    let mut out = vec![Vec::<String>::new()];
    let mut frontier = out.clone();
    for _ in 0..max {
        frontier = frontier
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |a| {
                    let mut w = w.clone();
                    w.push(a.clone());
                    w
                })
            })
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out.into_iter().map(Word::new).collect()
}

/// Independent oracle: the number of accepting paths from `state` reading
/// `word`, by direct recursion over the transition list.
pub fn accepting_paths(nfa: &Nfa, state: &str, word: &[String]) -> usize {
    match word.split_first() {
        None => usize::from(nfa.finals().contains(state)),
        Some((a, rest)) => nfa
            .transitions()
            .iter()
            .filter(|t| t.from == state && t.letter == *a)
            .map(|t| accepting_paths(nfa, &t.to, rest))
            .sum(),
    }
}
