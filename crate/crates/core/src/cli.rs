//! Command-line front end.
//!
//! Exit codes: 0 for accept / value / recognized, 1 for reject / diverged /
//! not recognized (and other engine-level refusals), 2 for usage and syntax
//! errors.

use std::ffi::OsString;
use std::fmt::Display;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::automata::{self, parse_nfa, CompiledRule, Nfa, Word};
use crate::ind::{
    self, even_system, infer_labels, member, parse_name_tree, DerivTree, Element, FullLabel,
    Membership, RuleSystem,
};
use crate::natded::{
    self, parse_context, parse_scheme, parse_sequent_deriv, parse_var, Context, SequentDeriv,
};
use crate::recfun::{self, parse_program, Fuel, MuConvention, Outcome, Program};
use crate::{latex, Nat, Natural};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Report {
    fn ok(text: impl Display) -> Self {
        Report::out(EXIT_OK, text)
    }

    fn reject(text: impl Display) -> Self {
        Report::out(EXIT_REJECT, text)
    }

    fn out(code: i32, text: impl Display) -> Self {
        let mut stdout = text.to_string();
        if !stdout.ends_with('\n') {
            stdout.push('\n');
        }
        Report {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(text: impl Display) -> Self {
        let mut stderr = text.to_string();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Report {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "deriv",
    about = "Rule systems, derivations and conclusion inference"
)]
struct Cli {
    /// Print derivations as nested \irule{premises}{conclusion}{rule}.
    #[arg(long, global = true)]
    latex: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The even numbers: f1 gives 0, f2 adds 2.
    #[command(subcommand)]
    Even(EvenCmd),
    /// Infer the conclusion of a rule-name tree.
    Infer {
        /// `even` or an automaton file.
        #[arg(long)]
        system: String,
        tree: String,
    },
    /// Natural deduction proofs.
    #[command(subcommand)]
    Natded(NatdedCmd),
    /// Partial recursive programs.
    #[command(subcommand)]
    Recfun(RecfunCmd),
    /// Finite automata as rule systems.
    #[command(subcommand)]
    Nfa(NfaCmd),
}

#[derive(Debug, Subcommand)]
enum EvenCmd {
    /// Print F^I(∅).
    Iterate {
        #[arg(long)]
        steps: usize,
    },
    /// Search F^D(∅) for N and print a derivation.
    Member {
        n: String,
        #[arg(long)]
        depth: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProofForm {
    Scheme,
    Var,
    Sequent,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TermKind {
    Scheme,
    Var,
}

#[derive(Debug, Subcommand)]
enum NatdedCmd {
    /// Check a proof and print the sequent it proves.
    Check {
        #[arg(long, value_enum)]
        form: ProofForm,
        /// Root context for scheme terms, e.g. "P, Q, R".
        #[arg(long)]
        context: Option<String>,
        /// The proof, `@FILE`, or a file path.
        term: String,
    },
    /// Convert between scheme and variable terms.
    Convert {
        #[arg(long, value_enum)]
        to: TermKind,
        term: String,
    },
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum MuArg {
    #[default]
    Last,
    First,
}

#[derive(Debug, Args)]
struct FuelArgs {
    #[arg(long, default_value_t = 10_000)]
    fuel: u64,
    /// Which argument mu minimizes.
    #[arg(long, value_enum, default_value = "last")]
    mu: MuArg,
}

#[derive(Debug, Subcommand)]
enum RecfunCmd {
    /// Evaluate a program on arguments.
    Eval {
        program: String,
        args: Vec<String>,
        #[command(flatten)]
        fuel: FuelArgs,
    },
    /// Print the Gödel number of a program.
    Godel { program: String },
    /// Decode a Gödel number.
    Ungodel { code: String },
    /// Build the diagonal program k of a binary program h.
    Diagonal {
        h: String,
        /// Also run k on its own Gödel number.
        #[arg(long)]
        self_apply: bool,
        #[command(flatten)]
        fuel: FuelArgs,
    },
}

#[derive(Debug, Args)]
struct NfaQuery {
    file: PathBuf,
    #[arg(long)]
    state: String,
    #[arg(long, allow_hyphen_values = true)]
    word: String,
}

#[derive(Debug, Subcommand)]
enum NfaCmd {
    /// Decide whether a word is recognized from a state.
    Run(NfaQuery),
    /// List the derivations of a state that erase to a word.
    Derivations(NfaQuery),
    /// Print the compiled rule system and erasure table.
    Rules { file: PathBuf },
}

/// Runs one command line; `args` includes the program name.
pub fn run<I, T>(args: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Report::ok(e.render())
                }
                _ => Report::usage(e.render()),
            }
        }
    };
    let latex = cli.latex;
    match cli.command {
        Command::Even(cmd) => even(cmd, latex),
        Command::Infer { system, tree } => infer(&system, &tree, latex),
        Command::Natded(cmd) => natded_cmd(cmd, latex),
        Command::Recfun(cmd) => recfun_cmd(cmd),
        Command::Nfa(cmd) => nfa_cmd(cmd, latex),
    }
}

/// Reads `@FILE`, or an existing file, or the text itself.
fn read_input(arg: &str) -> Result<String, Report> {
    let path = match arg.strip_prefix('@') {
        Some(p) => Some(Path::new(p)),
        None if Path::new(arg).is_file() => Some(Path::new(arg)),
        None => None,
    };
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map(|s| s.trim().to_string())
            .map_err(|e| Report::usage(format!("cannot read {}: {e}", p.display()))),
        None => Ok(arg.to_string()),
    }
}

fn read_nfa(path: &Path) -> Result<Nfa, Report> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Report::usage(format!("cannot read {}: {e}", path.display())))?;
    parse_nfa(&text).map_err(|e| Report::usage(format!("{}: {e}", path.display())))
}

fn full_tree_latex<E: Element>(tree: &DerivTree<FullLabel<E>>) -> String {
    latex::irule(tree, &|l: &FullLabel<E>| {
        (l.element.to_string(), latex::rule_name(l.rule.as_str()))
    })
}

fn sequent_latex(tree: &SequentDeriv) -> String {
    latex::irule(tree, &|l: &natded::SequentLabel| {
        let name = l
            .rule
            .map(|r| latex::rule_name(r.name()))
            .unwrap_or_default();
        (latex::sequent(&l.sequent), name)
    })
}

fn even(cmd: EvenCmd, latex: bool) -> Report {
    let sys = even_system::<Nat>();
    match cmd {
        EvenCmd::Iterate { steps } => match ind::iterate(&sys, steps) {
            Ok(it) => Report::ok(it.set),
            Err(e) => Report::reject(e),
        },
        EvenCmd::Member { n, depth } => {
            let Some(n) = Nat::parse_decimal(&n) else {
                return Report::usage(format!("not a natural number: {n}"));
            };
            match member(&sys, &n, depth) {
                Ok(Membership::Found(w)) if latex => Report::ok(full_tree_latex(&w)),
                Ok(Membership::Found(w)) => Report::ok(w.erase_elements()),
                Ok(Membership::NotFoundWithin(d)) => {
                    Report::reject(format!("not found within depth {d}"))
                }
                Err(e) => Report::reject(e),
            }
        }
    }
}

fn infer_in<E: Element>(sys: &RuleSystem<E>, tree: &str, latex: bool) -> Report {
    let tree = match read_input(tree).map(|t| parse_name_tree(&t)) {
        Ok(Ok(t)) => t,
        Ok(Err(e)) => return Report::usage(e),
        Err(r) => return r,
    };
    match infer_labels(sys, &tree) {
        Ok(full) if latex => Report::ok(full_tree_latex(&full)),
        Ok(full) => Report::ok(full.conclusion()),
        Err(r) => Report::reject(r),
    }
}

fn infer(system: &str, tree: &str, latex: bool) -> Report {
    if system == "even" {
        return infer_in(&even_system::<Nat>(), tree, latex);
    }
    match read_nfa(Path::new(system)) {
        Ok(nfa) => infer_in(&automata::compile(&nfa).system, tree, latex),
        Err(r) => r,
    }
}

fn natded_cmd(cmd: NatdedCmd, latex: bool) -> Report {
    match cmd {
        NatdedCmd::Check {
            form,
            context,
            term,
        } => {
            let text = match read_input(&term) {
                Ok(t) => t,
                Err(r) => return r,
            };
            let ctx = match context.as_deref().map(parse_context).transpose() {
                Ok(c) => c.unwrap_or_else(Context::empty),
                Err(e) => return Report::usage(e),
            };
            let derivation = match form {
                ProofForm::Scheme => match parse_scheme(&text) {
                    Ok(t) => natded::scheme_derivation(&t, &ctx),
                    Err(e) => return Report::usage(e),
                },
                ProofForm::Var => {
                    if !ctx.is_empty() {
                        return Report::usage("--context applies to scheme terms only");
                    }
                    match parse_var(&text) {
                        Ok(t) => natded::var_derivation(&t),
                        Err(e) => return Report::usage(e),
                    }
                }
                ProofForm::Sequent => match parse_sequent_deriv(&text) {
                    Ok(d) => natded::check_sequent_deriv(&d).map(|()| d),
                    Err(e) => return Report::usage(e),
                },
            };
            match derivation {
                Ok(d) if latex => Report::ok(sequent_latex(&d)),
                Ok(d) => Report::ok(&d.label.sequent),
                Err(r) => Report::reject(r),
            }
        }
        NatdedCmd::Convert { to, term } => {
            let text = match read_input(&term) {
                Ok(t) => t,
                Err(r) => return r,
            };
            let converted = match to {
                TermKind::Var => match parse_scheme(&text) {
                    Ok(t) => natded::scheme_to_var(&t).map(|v| v.to_string()),
                    Err(e) => return Report::usage(e),
                },
                TermKind::Scheme => match parse_var(&text) {
                    Ok(t) => natded::var_to_scheme(&t).map(|s| s.to_string()),
                    Err(e) => return Report::usage(e),
                },
            };
            match converted {
                Ok(s) => Report::ok(s),
                Err(r) => Report::reject(r),
            }
        }
    }
}

fn program_arg(arg: &str) -> Result<Program, Report> {
    let text = read_input(arg)?;
    parse_program(&text).map_err(Report::usage)
}

fn fuel_of(args: &FuelArgs) -> Result<(Fuel, MuConvention), Report> {
    let fuel = Fuel::new(args.fuel).ok_or_else(|| Report::usage("--fuel must be positive"))?;
    let mu = match args.mu {
        MuArg::Last => MuConvention::LastArgument,
        MuArg::First => MuConvention::FirstArgument,
    };
    Ok((fuel, mu))
}

fn render_outcome(outcome: &Outcome<Nat>, fuel: Fuel) -> String {
    match outcome {
        Outcome::Value(v) => format!("value {v}"),
        Outcome::Diverged => format!("diverged (fuel {})", fuel.units()),
    }
}

fn outcome_code(outcome: &Outcome<Nat>) -> i32 {
    if outcome.converged() {
        EXIT_OK
    } else {
        EXIT_REJECT
    }
}

fn rec_error(e: recfun::RecError) -> Report {
    match e {
        recfun::RecError::ArityMismatch { .. } => Report::usage(e),
        _ => Report::reject(e),
    }
}

fn recfun_cmd(cmd: RecfunCmd) -> Report {
    let result = (|| -> Result<Report, Report> {
        Ok(match cmd {
            RecfunCmd::Eval {
                program,
                args,
                fuel,
            } => {
                let p = program_arg(&program)?;
                let (fuel, mu) = fuel_of(&fuel)?;
                let args = args
                    .iter()
                    .map(|a| {
                        Nat::parse_decimal(a)
                            .ok_or_else(|| Report::usage(format!("not a natural number: {a}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let outcome = recfun::eval_with(&p, &args, fuel, mu).map_err(rec_error)?;
                Report::out(outcome_code(&outcome), render_outcome(&outcome, fuel))
            }
            RecfunCmd::Godel { program } => {
                let p = program_arg(&program)?;
                Report::ok(recfun::godel(&p).map_err(rec_error)?)
            }
            RecfunCmd::Ungodel { code } => {
                let code = Nat::parse_decimal(&code)
                    .ok_or_else(|| Report::usage(format!("not a natural number: {code}")))?;
                Report::ok(recfun::ungodel(&code).map_err(rec_error)?)
            }
            RecfunCmd::Diagonal {
                h,
                self_apply,
                fuel,
            } => {
                let h = program_arg(&h)?;
                let (fuel, mu) = fuel_of(&fuel)?;
                let k = recfun::diagonal(h).map_err(rec_error)?;
                if !self_apply {
                    return Ok(Report::ok(&k));
                }
                let code = recfun::godel(&k).map_err(rec_error)?;
                let outcome = recfun::eval_with(&k, &[code], fuel, mu).map_err(rec_error)?;
                Report::out(
                    outcome_code(&outcome),
                    format!("{k}\n{}", render_outcome(&outcome, fuel)),
                )
            }
        })
    })();
    result.unwrap_or_else(|r| r)
}

fn nfa_query(q: &NfaQuery) -> Result<(Nfa, Word), Report> {
    let nfa = read_nfa(&q.file)?;
    let word = Word::parse(&q.word, nfa.alphabet()).map_err(Report::usage)?;
    Ok((nfa, word))
}

fn nfa_cmd(cmd: NfaCmd, latex: bool) -> Report {
    let result = (|| -> Result<Report, Report> {
        Ok(match cmd {
            NfaCmd::Run(q) => {
                let (nfa, word) = nfa_query(&q)?;
                match automata::recognizes(&nfa, &q.state, &word).map_err(Report::usage)? {
                    true => Report::ok("recognized"),
                    false => Report::reject("not recognized"),
                }
            }
            NfaCmd::Derivations(q) => {
                let (nfa, word) = nfa_query(&q)?;
                let ds = automata::derivations_of(&nfa, &q.state, &word).map_err(Report::usage)?;
                if ds.is_empty() {
                    return Ok(Report::reject("no derivations"));
                }
                let lines: Vec<String> = if latex {
                    let sys = automata::compile(&nfa).system;
                    ds.iter()
                        .map(|d| {
                            let full = infer_labels(&sys, d).expect("enumerated derivations infer");
                            full_tree_latex(&full)
                        })
                        .collect()
                } else {
                    ds.iter().map(ToString::to_string).collect()
                };
                Report::ok(lines.join("\n"))
            }
            NfaCmd::Rules { file } => {
                let nfa = read_nfa(&file)?;
                let compiled = automata::compile(&nfa);
                let lines: Vec<String> = compiled
                    .system
                    .rules()
                    .iter()
                    .map(|r| match &compiled.table[r.name()] {
                        CompiledRule::Step(t) => {
                            format!(
                                "{} : {} -> {}    erases to {}",
                                r.name(),
                                t.to,
                                t.from,
                                t.letter
                            )
                        }
                        CompiledRule::Accept(q) => {
                            format!("{} : -> {}    erases to ε", r.name(), q)
                        }
                    })
                    .collect();
                Report::ok(lines.join("\n"))
            }
        })
    })();
    result.unwrap_or_else(|r| r)
}
