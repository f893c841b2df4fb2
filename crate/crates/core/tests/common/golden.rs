//! Golden-file runner for the command-line binary.
//!
//! A case file lists one argument per indented line, the parser its output
//! must re-parse with, the exit code and the exact stdout:
//!
//! ```text
//! args:
//!   even
//!   iterate
//!   --steps
//!   3
//! parse: set
//! exit: 0
//! stdout:
//! {0, 2, 4}
//! ```
//!
//! Set `DERIV_BLESS=1` to rewrite the exit code and stdout from the binary.

use std::path::{Path, PathBuf};
use std::process::Command;

use deriv::automata::is_identifier;
use deriv::ind::{parse_name_tree, FiniteSet, RuleName};
use deriv::natded::{parse_scheme, parse_sequent, parse_var};
use deriv::recfun::parse_program;
use deriv::{Nat, Natural};

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

#[derive(Debug, Clone)]
pub struct Case {
    pub name: String,
    pub path: PathBuf,
    pub args: Vec<String>,
    pub parse: String,
    pub exit: Option<i32>,
    pub stdout: String,
}

impl Case {
    pub fn load(path: &Path) -> Case {
        let text = std::fs::read_to_string(path).unwrap();
        let (head, stdout) = text
            .split_once("stdout:\n")
            .unwrap_or_else(|| (text.trim_end_matches("stdout:"), ""));
        let mut args = Vec::new();
        let mut parse = String::from("none");
        let mut exit = None;
        for line in head.lines() {
            if let Some(arg) = line.strip_prefix("  ") {
                args.push(arg.to_string());
            } else if let Some(p) = line.strip_prefix("parse: ") {
                parse = p.trim().to_string();
            } else if let Some(e) = line.strip_prefix("exit: ") {
                exit = e.trim().parse().ok();
            }
        }
        Case {
            name: path.file_stem().unwrap().to_string_lossy().into_owned(),
            path: path.to_path_buf(),
            args,
            parse,
            exit,
            stdout: stdout.to_string(),
        }
    }

    fn render(&self, exit: i32, stdout: &str) -> String {
        let mut out = String::from("args:\n");
        for a in &self.args {
            out.push_str(&format!("  {a}\n"));
        }
        out.push_str(&format!(
            "parse: {}\nexit: {exit}\nstdout:\n{stdout}",
            self.parse
        ));
        out
    }
}

pub fn cases() -> Vec<Case> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(golden_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "case"))
        .collect();
    paths.sort();
    paths.iter().map(|p| Case::load(p)).collect()
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_binary(args: &[String]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_deriv"))
        .args(args)
        .current_dir(golden_dir())
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Runs one case; returns a description of every mismatch.
pub fn check_case(case: &Case) -> Vec<String> {
    let run = run_binary(&case.args);
    if std::env::var_os("DERIV_BLESS").is_some() {
        std::fs::write(&case.path, case.render(run.code, &run.stdout)).unwrap();
        return Vec::new();
    }
    let mut problems = Vec::new();
    if Some(run.code) != case.exit {
        problems.push(format!("exit {} , expected {:?}", run.code, case.exit));
    }
    if run.stdout != case.stdout {
        problems.push(format!(
            "stdout {:?}, expected {:?}",
            run.stdout, case.stdout
        ));
    }
    if run.code == 2 {
        if !run.stdout.is_empty() || run.stderr.is_empty() {
            problems.push("usage errors go to stderr only".into());
        }
    } else if !run.stderr.is_empty() {
        problems.push(format!("unexpected stderr {:?}", run.stderr));
    }
    if let Err(e) = reparse(&case.parse, &run.stdout) {
        problems.push(format!("output does not re-parse: {e}"));
    }
    problems
}

/// Checks that printed output parses back and prints identically.
pub fn reparse(kind: &str, stdout: &str) -> Result<(), String> {
    let lines: Vec<&str> = stdout.lines().collect();
    let same = |got: String, line: &str| {
        if got == line {
            Ok(())
        } else {
            Err(format!("{line:?} re-prints as {got:?}"))
        }
    };
    let err = |e: &dyn std::fmt::Display| e.to_string();
    for (i, line) in lines.iter().enumerate() {
        match kind {
            "none" => {}
            "set" => {
                let inner = line
                    .strip_prefix('{')
                    .and_then(|l| l.strip_suffix('}'))
                    .ok_or("not a set")?;
                let set: FiniteSet<Nat> = inner
                    .split(", ")
                    .filter(|s| !s.is_empty())
                    .map(|s| Nat::parse_decimal(s).ok_or(format!("bad element {s}")))
                    .collect::<Result<_, _>>()?;
                same(set.to_string(), line)?;
            }
            "name-tree" | "name-trees" => same(
                parse_name_tree(line).map_err(|e| err(&e))?.to_string(),
                line,
            )?,
            "natural" => same(
                Nat::parse_decimal(line).ok_or("not a natural")?.to_string(),
                line,
            )?,
            "identifier" if !is_identifier(line) => return Err(format!("{line:?}")),
            "identifier" => {}
            "sequent" => same(parse_sequent(line).map_err(|e| err(&e))?.to_string(), line)?,
            "var" => same(parse_var(line).map_err(|e| err(&e))?.to_string(), line)?,
            "scheme" => same(parse_scheme(line).map_err(|e| err(&e))?.to_string(), line)?,
            "program" => same(parse_program(line).map_err(|e| err(&e))?.to_string(), line)?,
            "program-outcome" if i == 0 => {
                same(parse_program(line).map_err(|e| err(&e))?.to_string(), line)?
            }
            "outcome" | "program-outcome" => parse_outcome(line)?,
            "rules" => parse_rule_line(line)?,
            "latex" => {
                let mut depth = 0i64;
                for c in line.chars() {
                    depth += match c {
                        '{' => 1,
                        '}' => -1,
                        _ => 0,
                    };
                    if depth < 0 {
                        return Err("unbalanced braces".into());
                    }
                }
                if depth != 0 || !line.starts_with("\\irule{") {
                    return Err(format!("not an inference-rule layout: {line}"));
                }
            }
            other => return Err(format!("unknown parse kind {other}")),
        }
    }
    if kind != "none" && lines.is_empty() {
        return Err("no output".into());
    }
    Ok(())
}

fn parse_outcome(line: &str) -> Result<(), String> {
    if let Some(v) = line.strip_prefix("value ") {
        return Nat::parse_decimal(v)
            .map(drop)
            .ok_or(format!("bad value {v}"));
    }
    line.strip_prefix("diverged (fuel ")
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|f| f.parse::<u64>().ok())
        .map(drop)
        .ok_or(format!("not an outcome: {line}"))
}

/// `NAME : [PREMISE] -> CONCLUSION    erases to LETTER`
fn parse_rule_line(line: &str) -> Result<(), String> {
    let (rule, erasure) = line.split_once("    erases to ").ok_or("missing erasure")?;
    let (name, body) = rule.split_once(" : ").ok_or("missing name")?;
    RuleName::new(name).map_err(|e| e.to_string())?;
    let (premise, conclusion) = body.split_once("->").ok_or("missing arrow")?;
    let premise = premise.trim();
    if !(premise.is_empty() || is_identifier(premise)) || !is_identifier(conclusion.trim()) {
        return Err(format!("bad states in {line}"));
    }
    if !(erasure == "ε" || is_identifier(erasure)) {
        return Err(format!("bad letter {erasure}"));
    }
    Ok(())
}
