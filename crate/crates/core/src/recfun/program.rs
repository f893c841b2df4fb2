use super::RecError;
use crate::syntax::NodePath;

/// A partial recursive program. Each constructor is a rule name; a program
/// is a derivation labeled with rule names.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Program {
    /// The constant 0 with `n` ignored arguments.
    Zero(usize),
    Succ,
    /// `Proj(n, i)` returns the `i`-th of `n` arguments, 1-based.
    Proj(usize, usize),
    /// `f(g_1(x), ..., g_m(x))`.
    Comp(Box<Program>, Vec<Program>),
    /// Recursion on the first argument: `f(0, x) = g(x)`,
    /// `f(y + 1, x) = h(y, f(y, x), x)`.
    Rec(Box<Program>, Box<Program>),
    /// Least root of `f` in its minimized argument.
    Mu(Box<Program>),
}

impl Program {
    pub fn comp(f: Program, gs: Vec<Program>) -> Program {
        Program::Comp(Box::new(f), gs)
    }

    pub fn rec(g: Program, h: Program) -> Program {
        Program::Rec(Box::new(g), Box::new(h))
    }

    pub fn mu(f: Program) -> Program {
        Program::Mu(Box::new(f))
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        1 + self
            .children()
            .into_iter()
            .map(Program::size)
            .sum::<usize>()
    }

    /// Subprograms in order; for `Comp` the outer function comes first.
    pub fn children(&self) -> Vec<&Program> {
        match self {
            Program::Zero(_) | Program::Succ | Program::Proj(..) => vec![],
            Program::Comp(f, gs) => std::iter::once(&**f).chain(gs).collect(),
            Program::Rec(g, h) => vec![g, h],
            Program::Mu(f) => vec![f],
        }
    }

    pub fn contains_mu(&self) -> bool {
        matches!(self, Program::Mu(_)) || self.children().into_iter().any(Program::contains_mu)
    }

    /// The arity of a well-formed program.
    pub fn arity(&self) -> Result<usize, RecError> {
        arity_at(self, NodePath::root())
    }
}

/// The arity of `p`, or where and why it is ill-formed.
pub fn arity_of(p: &Program) -> Result<usize, RecError> {
    p.arity()
}

fn ill(path: NodePath, reason: impl Into<String>) -> RecError {
    RecError::IllFormed {
        path,
        reason: reason.into(),
    }
}

fn arity_at(p: &Program, path: NodePath) -> Result<usize, RecError> {
    match p {
        Program::Zero(n) => Ok(*n),
        Program::Succ => Ok(1),
        Program::Proj(n, i) => {
            if (1..=*n).contains(i) {
                Ok(*n)
            } else {
                Err(ill(path, format!("projection index {i} outside 1..={n}")))
            }
        }
        Program::Comp(f, gs) => {
            let fa = arity_at(f, path.child(0))?;
            if gs.is_empty() {
                return Err(ill(path, "composition needs at least one inner program"));
            }
            let mut inner = None;
            for (j, g) in gs.iter().enumerate() {
                let ga = arity_at(g, path.child(j + 1))?;
                match inner {
                    None => inner = Some(ga),
                    Some(m) if m != ga => {
                        return Err(ill(
                            path.child(j + 1),
                            format!("inner program has arity {ga}, expected {m}"),
                        ))
                    }
                    Some(_) => {}
                }
            }
            if fa != gs.len() {
                return Err(ill(
                    path.child(0),
                    format!(
                        "outer program has arity {fa}, but {} inner programs",
                        gs.len()
                    ),
                ));
            }
            Ok(inner.unwrap_or(0))
        }
        Program::Rec(g, h) => {
            let n = arity_at(g, path.child(0))?;
            let ha = arity_at(h, path.child(1))?;
            if ha != n + 2 {
                return Err(ill(
                    path.child(1),
                    format!("step program has arity {ha}, expected {}", n + 2),
                ));
            }
            Ok(n + 1)
        }
        Program::Mu(f) => match arity_at(f, path.child(0))? {
            0 => Err(ill(path.child(0), "cannot minimize a nullary program")),
            n => Ok(n - 1),
        },
    }
}

/// The program `k = comp(mu(proj^2_1); comp(h; proj^1_1, proj^1_1))`.
///
/// Under last-argument minimization, `k(x)` is 0 when `h(x, x) = 0` and is
/// undefined when `h(x, x)` is any other value.
pub fn diagonal(h: Program) -> Result<Program, RecError> {
    let arity = h.arity()?;
    if arity != 2 {
        return Err(RecError::ArityMismatch {
            expected: 2,
            found: arity,
        });
    }
    Ok(Program::comp(
        Program::mu(Program::Proj(2, 1)),
        vec![Program::comp(
            h,
            vec![Program::Proj(1, 1), Program::Proj(1, 1)],
        )],
    ))
}
