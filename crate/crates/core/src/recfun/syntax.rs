//! `p := zero^N | succ | proj^N_I | comp(p; p, ..., p) | rec(p, p) | mu(p)`

use std::fmt;

use super::{Program, RecError};
use crate::ind::{DerivTree, RuleName};
use crate::syntax::{Cursor, NodePath, SyntaxError};

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Program::Zero(n) => write!(f, "zero^{n}"),
            Program::Succ => f.write_str("succ"),
            Program::Proj(n, i) => write!(f, "proj^{n}_{i}"),
            Program::Comp(outer, gs) => {
                write!(f, "comp({outer}; ")?;
                for (j, g) in gs.iter().enumerate() {
                    if j > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{g}")?;
                }
                f.write_str(")")
            }
            Program::Rec(g, h) => write!(f, "rec({g}, {h})"),
            Program::Mu(inner) => write!(f, "mu({inner})"),
        }
    }
}

/// Parses a program. Arities are not checked here; use `Program::arity`.
pub fn parse_program(text: &str) -> Result<Program, SyntaxError> {
    let mut cur = Cursor::new(text);
    let p = program(&mut cur)?;
    cur.finish()?;
    Ok(p)
}

pub fn print_program(p: &Program) -> String {
    p.to_string()
}

fn number(cur: &mut Cursor<'_>) -> Result<usize, SyntaxError> {
    cur.skip_ws();
    let start = cur.pos();
    let digits = cur.take_while(|c| c.is_ascii_digit());
    if digits.is_empty() {
        return Err(cur.error("expected a number"));
    }
    digits
        .parse()
        .map_err(|_| SyntaxError::new(start, "number too large"))
}

fn program(cur: &mut Cursor<'_>) -> Result<Program, SyntaxError> {
    cur.skip_ws();
    let start = cur.pos();
    let Some(word) = cur.ident() else {
        return Err(cur.error("expected a program"));
    };
    match word {
        "succ" => Ok(Program::Succ),
        "zero" => {
            cur.expect("^")?;
            Ok(Program::Zero(number(cur)?))
        }
        "proj" => {
            cur.expect("^")?;
            let n = number(cur)?;
            cur.expect("_")?;
            Ok(Program::Proj(n, number(cur)?))
        }
        "comp" => {
            cur.expect("(")?;
            let f = program(cur)?;
            cur.expect(";")?;
            let mut gs = vec![program(cur)?];
            while cur.eat(",") {
                gs.push(program(cur)?);
            }
            cur.expect(")")?;
            Ok(Program::comp(f, gs))
        }
        "rec" => {
            cur.expect("(")?;
            let g = program(cur)?;
            cur.expect(",")?;
            let h = program(cur)?;
            cur.expect(")")?;
            Ok(Program::rec(g, h))
        }
        "mu" => {
            cur.expect("(")?;
            let f = program(cur)?;
            cur.expect(")")?;
            Ok(Program::mu(f))
        }
        // identifiers may swallow `_`, as in `proj_`
        other => Err(SyntaxError::new(
            start,
            format!("unknown constructor `{other}`"),
        )),
    }
}

impl Program {
    /// The program as a rule-name derivation: constructors are rule names
    /// (`zero^N`, `succ`, `proj^N_I`, `comp`, `rec`, `mu`) and subprograms
    /// are premises.
    pub fn to_name_tree(&self) -> DerivTree<RuleName> {
        let label = match self {
            Program::Zero(_) | Program::Succ | Program::Proj(..) => self.to_string(),
            Program::Comp(..) => "comp".into(),
            Program::Rec(..) => "rec".into(),
            Program::Mu(_) => "mu".into(),
        };
        DerivTree::new(
            RuleName::new(label).expect("constructor names are valid rule names"),
            self.children()
                .into_iter()
                .map(Program::to_name_tree)
                .collect(),
        )
    }

    pub fn from_name_tree(tree: &DerivTree<RuleName>) -> Result<Program, RecError> {
        from_tree_at(tree, NodePath::root())
    }
}

fn from_tree_at(tree: &DerivTree<RuleName>, path: NodePath) -> Result<Program, RecError> {
    let bad = |reason: String| RecError::IllFormed {
        path: path.clone(),
        reason,
    };
    let kids = tree
        .children
        .iter()
        .enumerate()
        .map(|(i, c)| from_tree_at(c, path.child(i)))
        .collect::<Result<Vec<_>, _>>()?;
    let name = tree.label.as_str();
    let p = match (name, kids.len()) {
        ("comp", n) if n >= 2 => {
            let mut kids = kids.into_iter();
            let f = kids.next().expect("n >= 2");
            Program::comp(f, kids.collect())
        }
        ("rec", 2) => {
            let [g, h]: [Program; 2] = kids.try_into().expect("two children");
            Program::rec(g, h)
        }
        ("mu", 1) => Program::mu(kids.into_iter().next().expect("one child")),
        (leaf, 0) if !matches!(leaf, "comp" | "rec" | "mu") => parse_program(leaf)
            .ok()
            .filter(|p| p.children().is_empty())
            .ok_or_else(|| bad(format!("unknown rule name `{leaf}`")))?,
        (name, n) => return Err(bad(format!("`{name}` cannot take {n} premise(s)"))),
    };
    Ok(p)
}
