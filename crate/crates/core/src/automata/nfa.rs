use std::collections::BTreeSet;
use std::fmt;

use super::AutomatonError;

/// A transition `from --letter--> to`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub from: String,
    pub letter: String,
    pub to: String,
}

impl Transition {
    pub fn new(from: impl Into<String>, letter: impl Into<String>, to: impl Into<String>) -> Self {
        Transition {
            from: from.into(),
            letter: letter.into(),
            to: to.into(),
        }
    }
}

/// A nondeterministic finite automaton without ε-transitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    states: BTreeSet<String>,
    alphabet: BTreeSet<String>,
    transitions: BTreeSet<Transition>,
    finals: BTreeSet<String>,
}

/// Letters become rule names by appending an index, so a letter may not end
/// in a digit, and `eps` is reserved for the final-state rules.
pub fn is_valid_letter(letter: &str) -> bool {
    is_identifier(letter)
        && !letter.ends_with(|c: char| c.is_ascii_digit())
        && letter != super::FINAL_RULE_PREFIX
}

pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_alphanumeric() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

impl Nfa {
    pub fn new(
        states: impl IntoIterator<Item = impl Into<String>>,
        alphabet: impl IntoIterator<Item = impl Into<String>>,
        transitions: impl IntoIterator<Item = Transition>,
        finals: impl IntoIterator<Item = impl Into<String>>,
    ) -> Result<Nfa, AutomatonError> {
        let states: BTreeSet<String> = states.into_iter().map(Into::into).collect();
        let alphabet: BTreeSet<String> = alphabet.into_iter().map(Into::into).collect();
        let transitions: BTreeSet<Transition> = transitions.into_iter().collect();
        let finals: BTreeSet<String> = finals.into_iter().map(Into::into).collect();
        if let Some(bad) = states.iter().find(|s| !is_identifier(s)) {
            return Err(AutomatonError::InvalidName(bad.clone()));
        }
        if let Some(bad) = alphabet.iter().find(|a| !is_valid_letter(a)) {
            return Err(AutomatonError::InvalidName(bad.clone()));
        }
        for t in &transitions {
            for s in [&t.from, &t.to] {
                if !states.contains(s) {
                    return Err(AutomatonError::UnknownState(s.clone()));
                }
            }
            if !alphabet.contains(&t.letter) {
                return Err(AutomatonError::UnknownLetter(t.letter.clone()));
            }
        }
        if let Some(bad) = finals.iter().find(|f| !states.contains(*f)) {
            return Err(AutomatonError::UnknownState(bad.clone()));
        }
        Ok(Nfa {
            states,
            alphabet,
            transitions,
            finals,
        })
    }

    /// `odd --a--> even`, `even --a--> odd`, with `even` final.
    pub fn parity() -> Nfa {
        Nfa::new(
            ["even", "odd"],
            ["a"],
            [
                Transition::new("odd", "a", "even"),
                Transition::new("even", "a", "odd"),
            ],
            ["even"],
        )
        .expect("valid automaton")
    }

    pub fn states(&self) -> &BTreeSet<String> {
        &self.states
    }

    pub fn alphabet(&self) -> &BTreeSet<String> {
        &self.alphabet
    }

    pub fn transitions(&self) -> &BTreeSet<Transition> {
        &self.transitions
    }

    pub fn finals(&self) -> &BTreeSet<String> {
        &self.finals
    }

    /// No two transitions leave the same state on the same letter.
    pub fn is_deterministic(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.transitions
            .iter()
            .all(|t| seen.insert((&t.from, &t.letter)))
    }

    pub(crate) fn check_input(&self, state: &str, word: &Word) -> Result<(), AutomatonError> {
        if !self.states.contains(state) {
            return Err(AutomatonError::UnknownState(state.to_string()));
        }
        if let Some(bad) = word.letters().iter().find(|l| !self.alphabet.contains(*l)) {
            return Err(AutomatonError::UnknownLetter(bad.clone()));
        }
        Ok(())
    }

    /// Whether some run reading `word` from `state` ends in a final state.
    pub fn recognizes(&self, state: &str, word: &Word) -> Result<bool, AutomatonError> {
        self.check_input(state, word)?;
        let mut current: BTreeSet<&str> = BTreeSet::from([state]);
        for letter in word.letters() {
            current = self
                .transitions
                .iter()
                .filter(|t| t.letter == *letter && current.contains(t.from.as_str()))
                .map(|t| t.to.as_str())
                .collect();
        }
        Ok(current.iter().any(|s| self.finals.contains(*s)))
    }
}

/// A finite sequence of letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<String>);

impl Word {
    pub fn new(letters: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Word(letters.into_iter().map(Into::into).collect())
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Reads a word over `alphabet`. Letters may be separated by spaces or
    /// commas; otherwise the text is split by longest match. `ε` and the
    /// empty string denote the empty word.
    pub fn parse(text: &str, alphabet: &BTreeSet<String>) -> Result<Word, AutomatonError> {
        let text = text.trim();
        if text == "ε" {
            return Ok(Word::empty());
        }
        if text.contains(|c: char| c == ',' || c.is_whitespace()) {
            return Ok(Word::new(
                text.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty()),
            ));
        }
        let mut letters = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let best = alphabet
                .iter()
                .filter(|a| rest.starts_with(a.as_str()))
                .max_by_key(|a| a.len())
                .ok_or_else(|| {
                    AutomatonError::UnknownLetter(rest.chars().next().unwrap().to_string())
                })?;
            letters.push(best.clone());
            rest = &rest[best.len()..];
        }
        Ok(Word(letters))
    }
}

/// Letters are concatenated when all are one character long and separated
/// by spaces otherwise; the empty word is `ε`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        let sep = if self.0.iter().all(|l| l.chars().count() == 1) {
            ""
        } else {
            " "
        };
        f.write_str(&self.0.join(sep))
    }
}
