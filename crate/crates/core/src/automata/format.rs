//! Line-oriented automaton files:
//!
//! ```text
//! # parity
//! state odd
//! state even
//! letter a
//! final even
//! trans odd a even
//! trans even a odd
//! ```

use super::{AutomatonError, Nfa, Transition};

pub fn parse_nfa(text: &str) -> Result<Nfa, AutomatonError> {
    let mut states = Vec::new();
    let mut letters = Vec::new();
    let mut finals = Vec::new();
    let mut transitions = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let format = |message: String| AutomatonError::Format {
            line: i + 1,
            message,
        };
        let words: Vec<&str> = line.split_whitespace().collect();
        match words.as_slice() {
            ["state", name] => states.push(name.to_string()),
            ["final", name] => finals.push(name.to_string()),
            ["letter", name] => letters.push(name.to_string()),
            ["trans", from, letter, to] => transitions.push(Transition::new(*from, *letter, *to)),
            [keyword @ ("state" | "final" | "letter" | "trans"), ..] => {
                return Err(format(format!("wrong number of fields for `{keyword}`")))
            }
            [other, ..] => return Err(format(format!("unknown directive `{other}`"))),
            [] => unreachable!(),
        }
    }
    Nfa::new(states, letters, transitions, finals)
}

pub fn print_nfa(nfa: &Nfa) -> String {
    let mut out = String::new();
    for s in nfa.states() {
        out.push_str(&format!("state {s}\n"));
    }
    for a in nfa.alphabet() {
        out.push_str(&format!("letter {a}\n"));
    }
    for f in nfa.finals() {
        out.push_str(&format!("final {f}\n"));
    }
    for t in nfa.transitions() {
        out.push_str(&format!("trans {} {} {}\n", t.from, t.letter, t.to));
    }
    out
}
