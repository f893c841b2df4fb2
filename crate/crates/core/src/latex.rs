//! Inference-rule layout for handouts: `\irule{premises}{conclusion}{rule}`,
//! premises separated by `~~~~`.

use crate::ind::DerivTree;
use crate::natded::{Prop, Sequent};

/// Renders a tree; `render` gives each node's conclusion and rule name.
pub fn irule<L>(tree: &DerivTree<L>, render: &impl Fn(&L) -> (String, String)) -> String {
    let (concl, name) = render(&tree.label);
    let premises: Vec<String> = tree.children.iter().map(|c| irule(c, render)).collect();
    format!(
        "\\irule{{{}}}{{{concl}}}{{{name}}}",
        premises.join(" ~~~~ ")
    )
}

pub fn prop(p: &Prop) -> String {
    match p {
        Prop::Atom(a) => a.clone(),
        Prop::And(a, b) => {
            let l = if a.is_atom() {
                prop(a)
            } else {
                format!("({})", prop(a))
            };
            let r = if matches!(**b, Prop::Imp(..)) {
                format!("({})", prop(b))
            } else {
                prop(b)
            };
            format!("{l} \\wedge {r}")
        }
        Prop::Imp(a, b) => {
            let side = |x: &Prop| {
                if x.is_atom() {
                    prop(x)
                } else {
                    format!("({})", prop(x))
                }
            };
            format!("{} \\Rightarrow {}", side(a), side(b))
        }
    }
}

pub fn sequent(s: &Sequent) -> String {
    let ctx: Vec<String> = s.ctx.iter().map(prop).collect();
    if ctx.is_empty() {
        format!("\\vdash {}", prop(&s.concl))
    } else {
        format!("{} \\vdash {}", ctx.join(", "), prop(&s.concl))
    }
}

/// Rule names in math mode: `f_2`, `a_1`, `\varepsilon_1`.
pub fn rule_name(name: &str) -> String {
    let split = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (stem, index) = name.split_at(split);
    let stem = match stem {
        "eps" => "\\varepsilon".to_string(),
        "and-intro" => "\\wedge\\mbox{-intro}".to_string(),
        "and-elim" => "\\wedge\\mbox{-elim}".to_string(),
        "imp-intro" => "\\Rightarrow\\mbox{-intro}".to_string(),
        s if s.len() > 1 => format!("\\mbox{{{s}}}"),
        s => s.to_string(),
    };
    if index.is_empty() {
        stem
    } else {
        format!("{stem}_{{{index}}}")
    }
}
