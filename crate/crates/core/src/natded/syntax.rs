//! Concrete syntax.
//!
//! ```text
//! prop    := conj ("=>" prop)?          conj := atom ("/\" conj)?
//! atom    := IDENT | "(" prop ")"
//! term    := "fun" "[" prop "]" term    | "fun" IDENT ":" prop "." term
//!          | "hyp" "[" prop "]"         | "axiom" "{" [prop ("," prop)*] "|" prop "}"
//!          | "<" term "," term ">"      | "fst" "(" term ")" | "snd" "(" term ")"
//!          | IDENT                      | "(" term ")"
//! sequent := [prop ("," prop)*] "|-" prop
//! deriv   := sequent ["by" RULE] ["{" deriv (";" deriv)* "}"]
//! ```
//!
//! Scheme terms use the `[A]` binder and `hyp`/`axiom` leaves; variable terms
//! use `fun x : A .` and identifiers.

use super::{Context, NdRule, Prop, SchemeTerm, Sequent, SequentDeriv, SequentLabel, VarTerm};
use crate::ind::DerivTree;
use crate::syntax::{Cursor, SyntaxError};

const KEYWORDS: [&str; 5] = ["fun", "hyp", "axiom", "fst", "snd"];

/// Which of the two term languages to parse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermForm {
    Scheme,
    Var,
}

/// A parsed term of either form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyTerm {
    Scheme(SchemeTerm),
    Var(VarTerm),
}

impl std::fmt::Display for AnyTerm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AnyTerm::Scheme(t) => t.fmt(f),
            AnyTerm::Var(t) => t.fmt(f),
        }
    }
}

pub fn parse_prop(text: &str) -> Result<Prop, SyntaxError> {
    let mut cur = Cursor::new(text);
    let p = prop(&mut cur)?;
    cur.finish()?;
    Ok(p)
}

pub fn print_prop(p: &Prop) -> String {
    p.to_string()
}

pub fn parse_sequent(text: &str) -> Result<Sequent, SyntaxError> {
    let mut cur = Cursor::new(text);
    let s = sequent(&mut cur)?;
    cur.finish()?;
    Ok(s)
}

/// Parses a comma-separated context such as `P, Q, R`; blank means empty.
pub fn parse_context(text: &str) -> Result<Context, SyntaxError> {
    let mut cur = Cursor::new(text);
    let mut props = Vec::new();
    if !cur.at_end() {
        props.push(prop(&mut cur)?);
        while cur.eat(",") {
            props.push(prop(&mut cur)?);
        }
    }
    cur.finish()?;
    Ok(props.into_iter().collect())
}

pub fn parse_term(text: &str, form: TermForm) -> Result<AnyTerm, SyntaxError> {
    let mut cur = Cursor::new(text);
    let t = match form {
        TermForm::Scheme => AnyTerm::Scheme(scheme_term(&mut cur)?),
        TermForm::Var => AnyTerm::Var(var_term(&mut cur)?),
    };
    cur.finish()?;
    Ok(t)
}

pub fn parse_scheme(text: &str) -> Result<SchemeTerm, SyntaxError> {
    match parse_term(text, TermForm::Scheme)? {
        AnyTerm::Scheme(t) => Ok(t),
        AnyTerm::Var(_) => unreachable!(),
    }
}

pub fn parse_var(text: &str) -> Result<VarTerm, SyntaxError> {
    match parse_term(text, TermForm::Var)? {
        AnyTerm::Var(t) => Ok(t),
        AnyTerm::Scheme(_) => unreachable!(),
    }
}

pub fn print_term(t: &AnyTerm) -> String {
    t.to_string()
}

/// Parses a sequent-labeled derivation.
pub fn parse_sequent_deriv(text: &str) -> Result<SequentDeriv, SyntaxError> {
    let mut cur = Cursor::new(text);
    let d = deriv(&mut cur)?;
    cur.finish()?;
    Ok(d)
}

/// Prints a sequent-labeled derivation in the syntax `parse_sequent_deriv`
/// reads.
pub fn print_sequent_deriv(d: &SequentDeriv) -> String {
    let mut out = d.label.sequent.to_string();
    if let Some(rule) = d.label.rule {
        out.push_str(" by ");
        out.push_str(rule.name());
    }
    if !d.children.is_empty() {
        let kids: Vec<String> = d.children.iter().map(print_sequent_deriv).collect();
        out.push_str(" { ");
        out.push_str(&kids.join("; "));
        out.push_str(" }");
    }
    out
}

fn prop(cur: &mut Cursor<'_>) -> Result<Prop, SyntaxError> {
    let lhs = conj(cur)?;
    if cur.eat("=>") {
        Ok(Prop::imp(lhs, prop(cur)?))
    } else {
        Ok(lhs)
    }
}

fn conj(cur: &mut Cursor<'_>) -> Result<Prop, SyntaxError> {
    let lhs = prop_atom(cur)?;
    if cur.eat("/\\") {
        Ok(Prop::and(lhs, conj(cur)?))
    } else {
        Ok(lhs)
    }
}

fn prop_atom(cur: &mut Cursor<'_>) -> Result<Prop, SyntaxError> {
    if cur.eat("(") {
        let p = prop(cur)?;
        cur.expect(")")?;
        return Ok(p);
    }
    match cur.ident() {
        Some(name) => Ok(Prop::atom(name)),
        None => Err(cur.error("expected a proposition")),
    }
}

fn sequent(cur: &mut Cursor<'_>) -> Result<Sequent, SyntaxError> {
    let mut props = Vec::new();
    if !cur.eat("|-") {
        props.push(prop(cur)?);
        while cur.eat(",") {
            props.push(prop(cur)?);
        }
        cur.expect("|-")?;
    }
    let concl = prop(cur)?;
    Ok(Sequent::new(props.into_iter().collect(), concl))
}

fn deriv(cur: &mut Cursor<'_>) -> Result<SequentDeriv, SyntaxError> {
    let seq = sequent(cur)?;
    let mut rule = None;
    if cur.keyword("by") {
        let start = {
            cur.skip_ws();
            cur.pos()
        };
        let name = cur.take_while(|c| c.is_alphanumeric() || c == '-');
        rule = Some(
            NdRule::from_name(name)
                .ok_or_else(|| SyntaxError::new(start, format!("unknown rule `{name}`")))?,
        );
    }
    let mut children = Vec::new();
    if cur.eat("{") {
        children.push(deriv(cur)?);
        while cur.eat(";") {
            children.push(deriv(cur)?);
        }
        cur.expect("}")?;
    }
    Ok(DerivTree::new(
        SequentLabel { sequent: seq, rule },
        children,
    ))
}

fn bracketed_prop(cur: &mut Cursor<'_>) -> Result<Prop, SyntaxError> {
    cur.expect("[")?;
    let p = prop(cur)?;
    cur.expect("]")?;
    Ok(p)
}

fn variable(cur: &mut Cursor<'_>) -> Result<String, SyntaxError> {
    let save = cur.clone();
    match cur.ident() {
        Some(x) if !KEYWORDS.contains(&x) => Ok(x.to_string()),
        _ => {
            *cur = save;
            Err(cur.error("expected a variable"))
        }
    }
}

fn scheme_term(cur: &mut Cursor<'_>) -> Result<SchemeTerm, SyntaxError> {
    if cur.keyword("fun") {
        if cur.peek() != Some('[') {
            return Err(cur.error("expected `[` (scheme binders are written `fun [A] t`)"));
        }
        let a = bracketed_prop(cur)?;
        return Ok(SchemeTerm::lam(a, scheme_term(cur)?));
    }
    if cur.keyword("hyp") {
        return Ok(SchemeTerm::Hyp(bracketed_prop(cur)?));
    }
    if cur.keyword("axiom") {
        cur.expect("{")?;
        let mut ctx = Vec::new();
        if !cur.eat("|") {
            ctx.push(prop(cur)?);
            while cur.eat(",") {
                ctx.push(prop(cur)?);
            }
            cur.expect("|")?;
        }
        let a = prop(cur)?;
        cur.expect("}")?;
        return Ok(SchemeTerm::HypFull(ctx.into_iter().collect(), a));
    }
    if cur.eat("<") {
        let l = scheme_term(cur)?;
        cur.expect(",")?;
        let r = scheme_term(cur)?;
        cur.expect(">")?;
        return Ok(SchemeTerm::pair(l, r));
    }
    if let Some(proj) = projection(cur) {
        cur.expect("(")?;
        let t = scheme_term(cur)?;
        cur.expect(")")?;
        return Ok(if proj {
            SchemeTerm::fst(t)
        } else {
            SchemeTerm::snd(t)
        });
    }
    if cur.eat("(") {
        let t = scheme_term(cur)?;
        cur.expect(")")?;
        return Ok(t);
    }
    Err(cur.error("expected a scheme term"))
}

fn var_term(cur: &mut Cursor<'_>) -> Result<VarTerm, SyntaxError> {
    if cur.keyword("fun") {
        let x = variable(cur)?;
        cur.expect(":")?;
        let a = prop(cur)?;
        cur.expect(".")?;
        return Ok(VarTerm::lam(x, a, var_term(cur)?));
    }
    if cur.eat("<") {
        let l = var_term(cur)?;
        cur.expect(",")?;
        let r = var_term(cur)?;
        cur.expect(">")?;
        return Ok(VarTerm::pair(l, r));
    }
    if let Some(proj) = projection(cur) {
        cur.expect("(")?;
        let t = var_term(cur)?;
        cur.expect(")")?;
        return Ok(if proj {
            VarTerm::fst(t)
        } else {
            VarTerm::snd(t)
        });
    }
    if cur.eat("(") {
        let t = var_term(cur)?;
        cur.expect(")")?;
        return Ok(t);
    }
    variable(cur)
        .map(VarTerm::Var)
        .map_err(|_| cur.error("expected a variable term"))
}

/// `Some(true)` for `fst`, `Some(false)` for `snd`.
fn projection(cur: &mut Cursor<'_>) -> Option<bool> {
    if cur.keyword("fst") {
        Some(true)
    } else if cur.keyword("snd") {
        Some(false)
    } else {
        None
    }
}
