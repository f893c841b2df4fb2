//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};

use common::golden::{cases, check_case, run_binary};
use common::*;
use deriv::automata::{compile, derivations_of, recognizes, Nfa, Word};
use deriv::ind::{
    check_elem_tree, check_full_tree, even_system, infer_conclusion, infer_labels, iterate, member,
    parse_name_tree, step, DerivTree, FiniteSet, FullLabel, Membership, RuleName,
};
use deriv::natded::{
    check_scheme, check_var, parse_context, parse_scheme, parse_sequent, parse_var, scheme_to_var,
    var_to_scheme, Context,
};
use deriv::recfun::{
    diagonal, eval, godel, parse_program, ungodel, well_formed_programs, Fuel, Outcome, Program,
};
use deriv::Nat;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn nat_set(xs: &[u32]) -> FiniteSet<Nat> {
    xs.iter().map(|&x| Nat::from(x)).collect()
}

fn nats(xs: &[u64]) -> Vec<Nat> {
    xs.iter().map(|&x| Nat::from(x)).collect()
}

/// Runs a property over `cases` seeded inputs.
fn property<S: Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner(cases)
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn criterion_1() -> Verdict {
    let sys = even_system::<Nat>();
    let checks = [
        (
            step(&sys, &nat_set(&[4, 5, 6])),
            nat_set(&[0, 6, 7, 8]),
            "step({4,5,6})",
        ),
        (step(&sys, &FiniteSet::empty()), nat_set(&[0]), "step(∅)"),
        (step(&sys, &nat_set(&[0])), nat_set(&[0, 2]), "step({0})"),
        (iterate(&sys, 1).unwrap().set, nat_set(&[0]), "iterate 1"),
        (iterate(&sys, 2).unwrap().set, nat_set(&[0, 2]), "iterate 2"),
        (
            iterate(&sys, 3).unwrap().set,
            nat_set(&[0, 2, 4]),
            "iterate 3",
        ),
    ];
    for (got, want, what) in checks {
        ensure(got == want, || format!("{what} = {got}, expected {want}"))?;
    }
    Ok("6 set equalities".into())
}

fn criterion_2() -> Verdict {
    let sys = even_system::<Nat>();
    let Membership::Found(w) = member(&sys, &Nat::from(4u32), 3).map_err(|e| e.to_string())? else {
        return Err("4 not found within depth 3".into());
    };
    let f1 = RuleName::new("f1").unwrap();
    let f2 = RuleName::new("f2").unwrap();
    let chain = DerivTree::chain([
        FullLabel::new(Nat::from(0u32), f1),
        FullLabel::new(Nat::from(2u32), f2.clone()),
        FullLabel::new(Nat::from(4u32), f2),
    ]);
    ensure(w == chain, || format!("witness {w}"))?;
    ensure(w.size() == 3 && w.height() == 3, || {
        "witness is not a 3-node chain".into()
    })?;
    let names = parse_name_tree("f2(f2(f1))").map_err(|e| e.to_string())?;
    let four = infer_conclusion(&sys, &names).map_err(|e| e.to_string())?;
    ensure(four == Nat::from(4u32), || format!("inferred {four}"))?;
    check_full_tree(&sys, &chain).map_err(|e| e.to_string())?;
    Ok("witness f2(f2(f1)), inferred 4, full tree accepted".into())
}

fn criterion_3() -> Verdict {
    const CASES: u32 = 256;
    property(
        "monotonicity",
        CASES,
        (system_specs(), small_set(), small_set()),
        |(specs, x, extra)| {
            let sys = build_system(&specs);
            let y: FiniteSet<u64> = x.iter().chain(extra.iter()).copied().collect();
            prop_assert!(step(&sys, &x).is_subset(&step(&sys, &y)));
            prop_assert_eq!(
                step(&sys, &x).iter().copied().collect::<BTreeSet<_>>(),
                step_oracle(&specs, x.as_btree())
            );
            Ok(())
        },
    )?;
    property("chain inclusion", CASES, system_specs(), |specs| {
        let sys = build_system(&specs);
        let mut prev = FiniteSet::empty();
        for i in 1..8 {
            let cur = iterate(&sys, i).unwrap().set;
            prop_assert!(prev.is_subset(&cur));
            prev = cur;
        }
        Ok(())
    })?;
    property(
        "member/iterate agreement",
        CASES,
        (system_specs(), 0..=BOUND, 1..6usize),
        |(specs, t, d)| {
            let sys = build_system(&specs);
            let stage = iterate(&sys, d).unwrap().set;
            match member(&sys, &t, d).unwrap() {
                Membership::Found(w) => {
                    prop_assert!(stage.contains(&t));
                    prop_assert!(check_full_tree(&sys, &w).is_ok());
                    prop_assert_eq!(*w.conclusion(), t);
                    prop_assert!(!iterate(&sys, w.height() - 1).unwrap().set.contains(&t));
                }
                Membership::NotFoundWithin(_) => prop_assert!(!stage.contains(&t)),
            }
            Ok(())
        },
    )?;
    property(
        "labeling coherence",
        CASES,
        (system_specs(), 0..=BOUND),
        |(specs, t)| {
            let sys = build_system(&specs);
            if let Membership::Found(w) = member(&sys, &t, 6).unwrap() {
                let names = w.erase_elements();
                prop_assert_eq!(&infer_labels(&sys, &names).unwrap(), &w);
                prop_assert!(check_elem_tree(&sys, &w.erase_names()).is_ok());
                prop_assert_eq!(parse_name_tree(&names.to_string()).unwrap(), names);
            }
            Ok(())
        },
    )?;
    Ok(format!("4 properties x {CASES} cases"))
}

fn criterion_4() -> Verdict {
    let swap = parse_sequent("|- (P /\\ Q) => (Q /\\ P)").unwrap();
    let scheme = parse_scheme("fun [P /\\ Q] <snd(hyp [P /\\ Q]), fst(hyp [P /\\ Q])>")
        .map_err(|e| e.to_string())?;
    let got = check_scheme(&scheme, &Context::empty()).map_err(|e| e.to_string())?;
    ensure(got == swap, || format!("scheme proves {got}"))?;

    let two = parse_scheme("<axiom {Q, R | P}, axiom {P, R | Q}>").unwrap();
    let got = check_scheme(&two, &parse_context("P, Q, R").unwrap()).map_err(|e| e.to_string())?;
    let want = parse_sequent("P, Q, R |- P /\\ Q").unwrap();
    ensure(got == want, || format!("two-axiom tree proves {got}"))?;

    let var = parse_var("fun x : P /\\ Q . <snd(x), fst(x)>").map_err(|e| e.to_string())?;
    let got = check_var(&var).map_err(|e| e.to_string())?;
    ensure(got == swap, || format!("variable term proves {got}"))?;

    const CASES: u32 = 256;
    property("scheme/var agreement", CASES, var_term(), |t| {
        let by_var = check_var(&t).ok();
        match var_to_scheme(&t) {
            Ok(s) => {
                prop_assert_eq!(check_scheme(&s, &Context::empty()).ok(), by_var.clone());
                let back = scheme_to_var(&s).unwrap();
                prop_assert_eq!(check_var(&back).ok(), by_var);
            }
            Err(_) => prop_assert!(by_var.is_none()),
        }
        Ok(())
    })?;
    Ok(format!(
        "3 exact sequents, conversions agree on {CASES} terms"
    ))
}

fn criterion_5() -> Verdict {
    let plus2 = parse_program("comp(succ; succ)").unwrap();
    for x in 0..=20u64 {
        let got = eval(&plus2, &nats(&[x]), Fuel::new(100).unwrap()).map_err(|e| e.to_string())?;
        ensure(got == Outcome::Value(Nat::from(x + 2)), || {
            format!("x = {x}: {got:?}")
        })?;
    }

    let all = well_formed_programs(4, 3);
    let mut codes = BTreeSet::new();
    for p in &all {
        let code = godel(p).map_err(|e| e.to_string())?;
        let back = ungodel(&code).map_err(|e| e.to_string())?;
        ensure(&back == p, || format!("{p} decodes as {back}"))?;
        codes.insert(code);
    }
    ensure(codes.len() == all.len(), || {
        "two programs share a code".into()
    })?;

    const CASES: u32 = 256;
    let run = |p: &Program, xs: &[u64], f: u64| eval(p, &nats(xs), Fuel::new(f).unwrap()).unwrap();
    property(
        "fuel monotonicity",
        CASES,
        (program_with_input(true), 1..400u64, 0..2000u64),
        |((p, xs), f, extra)| {
            if let Outcome::Value(v) = run(&p, &xs, f) {
                prop_assert_eq!(run(&p, &xs, f + extra), Outcome::Value(v));
            }
            Ok(())
        },
    )?;
    property(
        "recursion vs loop oracle",
        CASES,
        rec_program_with_input(),
        |(p, xs)| {
            let wide: Vec<u128> = xs.iter().map(|&x| u128::from(x)).collect();
            let expected = loop_oracle(&p, &wide, &mut 1_000_000);
            prop_assert!(expected.is_some(), "oracle budget exhausted on {}", p);
            prop_assert_eq!(
                run(&p, &xs, 10_000_000),
                Outcome::Value(Nat::from(expected.unwrap()))
            );
            Ok(())
        },
    )?;
    Ok(format!(
        "x+2 on 0..=20, {} programs round-trip, {CASES} fuel pairs, {CASES} recursion samples",
        all.len()
    ))
}

fn criterion_6() -> Verdict {
    let fuel = Fuel::new(10_000).unwrap();
    let self_apply = |h: &str| -> Result<Outcome<Nat>, String> {
        let k =
            diagonal(parse_program(h).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let code = godel(&k).map_err(|e| e.to_string())?;
        eval(&k, &[code], fuel).map_err(|e| e.to_string())
    };
    let zero = self_apply("zero^2")?;
    ensure(zero == Outcome::Value(Nat::from(0u32)), || {
        format!("h = 0 gives {zero:?}")
    })?;
    let one = self_apply("comp(succ; zero^2)")?;
    ensure(one == Outcome::Diverged, || format!("h = 1 gives {one:?}"))?;
    Ok("h = 0 gives Value(0), h = 1 gives Diverged".into())
}

fn criterion_7() -> Verdict {
    let parity = Nfa::parity();
    let word = |s: &str| Word::parse(s, parity.alphabet()).unwrap();
    let rec = |q: &str, w: &str| recognizes(&parity, q, &word(w)).map_err(|e| e.to_string());
    ensure(rec("odd", "aaa")?, || "aaa not recognized in odd".into())?;
    ensure(rec("even", "")?, || "ε not recognized in even".into())?;
    ensure(!rec("odd", "aa")?, || "aa recognized in odd".into())?;
    let ds = derivations_of(&parity, "odd", &word("aaa")).map_err(|e| e.to_string())?;
    let want = parse_name_tree("a1(a2(a1(eps1)))").unwrap();
    ensure(ds == [want.clone()], || format!("derivations {ds:?}"))?;
    let erased = compile(&parity).erase(&want).map_err(|e| e.to_string())?;
    ensure(erased == word("aaa"), || format!("erases to {erased}"))?;

    const MACHINES: u32 = 128;
    property("recognition iff derivation", MACHINES, small_nfa(), |nfa| {
        for state in nfa.states() {
            for w in all_words(&nfa, 4) {
                let paths = accepting_paths(&nfa, state, w.letters());
                prop_assert_eq!(derivations_of(&nfa, state, &w).unwrap().len(), paths);
                prop_assert_eq!(recognizes(&nfa, state, &w).unwrap(), paths > 0);
            }
        }
        Ok(())
    })?;
    Ok(format!(
        "parity exact, {MACHINES} sampled machines, words up to length 4"
    ))
}

fn criterion_8() -> Verdict {
    let examples: [(&[&str], &str, i32); 3] = [
        (&["even", "iterate", "--steps", "3"], "{0, 2, 4}\n", 0),
        (
            &[
                "nfa",
                "run",
                "parity.nfa",
                "--state",
                "odd",
                "--word",
                "aaa",
            ],
            "recognized\n",
            0,
        ),
        (
            &["recfun", "eval", "comp(succ; succ)", "3", "--fuel", "100"],
            "value 5\n",
            0,
        ),
    ];
    for (args, stdout, code) in examples {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let run = run_binary(&args);
        ensure(run.stdout == stdout && run.code == code, || {
            format!(
                "`{}` printed {:?} with exit {}",
                args.join(" "),
                run.stdout,
                run.code
            )
        })?;
    }
    let cases = cases();
    let failures: Vec<String> = cases
        .iter()
        .flat_map(|c| {
            check_case(c)
                .into_iter()
                .map(move |p| format!("{}: {p}", c.name))
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("3 examples, {} golden cases re-parse", cases.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 fixed-point values", criterion_1),
        ("2 derivation of 4", criterion_2),
        ("3 fixed-point properties", criterion_3),
        ("4 natural deduction", criterion_4),
        ("5 partial recursive programs", criterion_5),
        ("6 diagonal program", criterion_6),
        ("7 automata", criterion_7),
        ("8 command line", criterion_8),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let verdict =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match verdict {
            Ok(detail) => println!("criterion {name}: PASS ({detail})"),
            Err(why) => {
                failed += 1;
                println!("criterion {name}: FAIL ({why})");
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} acceptance criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} acceptance criteria passed", criteria.len());
}
