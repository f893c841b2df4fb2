use super::{Program, RecError};
use crate::natural::Natural;

/// Evaluation budget. One unit is spent on entering a `Comp`, `Rec` or `Mu`
/// node, on each recursion step of a `Rec`, and on each probe of a `Mu`
/// search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fuel(u64);

impl Fuel {
    /// `None` for a zero budget.
    pub fn new(units: u64) -> Option<Fuel> {
        (units > 0).then_some(Fuel(units))
    }

    pub fn units(self) -> u64 {
        self.0
    }
}

/// Result of a bounded evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Outcome<N> {
    Value(N),
    /// The budget ran out; the only observable form of non-termination.
    Diverged,
}

impl<N> Outcome<N> {
    pub fn value(&self) -> Option<&N> {
        match self {
            Outcome::Value(v) => Some(v),
            Outcome::Diverged => None,
        }
    }

    pub fn converged(&self) -> bool {
        matches!(self, Outcome::Value(_))
    }
}

/// Which argument `Mu` minimizes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum MuConvention {
    /// `mu(f)(x) = least y with f(x, y) = 0`.
    #[default]
    LastArgument,
    /// `mu(f)(x) = least y with f(y, x) = 0`.
    FirstArgument,
}

/// Evaluates under the default last-argument minimization.
pub fn eval<N: Natural>(p: &Program, args: &[N], fuel: Fuel) -> Result<Outcome<N>, RecError> {
    eval_with(p, args, fuel, MuConvention::default())
}

pub fn eval_with<N: Natural>(
    p: &Program,
    args: &[N],
    fuel: Fuel,
    mu: MuConvention,
) -> Result<Outcome<N>, RecError> {
    let arity = p.arity()?;
    if args.len() != arity {
        return Err(RecError::ArityMismatch {
            expected: arity,
            found: args.len(),
        });
    }
    let mut machine = Machine {
        remaining: fuel.units(),
        mu,
    };
    Ok(match machine.run(p, args)? {
        Some(v) => Outcome::Value(v),
        None => Outcome::Diverged,
    })
}

struct Machine {
    remaining: u64,
    mu: MuConvention,
}

impl Machine {
    fn spend(&mut self) -> bool {
        if self.remaining == 0 {
            false
        } else {
            self.remaining -= 1;
            true
        }
    }

    /// `Ok(None)` when fuel ran out. Arities were checked up front.
    fn run<N: Natural>(&mut self, p: &Program, args: &[N]) -> Result<Option<N>, RecError> {
        match p {
            Program::Zero(_) => Ok(Some(N::zero())),
            Program::Succ => args[0].checked_succ().map(Some).ok_or(RecError::Overflow),
            Program::Proj(_, i) => Ok(Some(args[i - 1].clone())),
            Program::Comp(f, gs) => {
                if !self.spend() {
                    return Ok(None);
                }
                let mut inner = Vec::with_capacity(gs.len());
                for g in gs {
                    match self.run(g, args)? {
                        Some(v) => inner.push(v),
                        None => return Ok(None),
                    }
                }
                self.run(f, &inner)
            }
            Program::Rec(g, h) => {
                if !self.spend() {
                    return Ok(None);
                }
                let (y, rest) = args.split_first().expect("recursion has arity >= 1");
                let Some(mut acc) = self.run(g, rest)? else {
                    return Ok(None);
                };
                let mut k = N::zero();
                let mut step_args: Vec<N> = Vec::with_capacity(args.len() + 1);
                while k < *y {
                    if !self.spend() {
                        return Ok(None);
                    }
                    step_args.clear();
                    step_args.push(k.clone());
                    step_args.push(acc);
                    step_args.extend_from_slice(rest);
                    acc = match self.run(h, &step_args)? {
                        Some(v) => v,
                        None => return Ok(None),
                    };
                    k = k.checked_succ().ok_or(RecError::Overflow)?;
                }
                Ok(Some(acc))
            }
            Program::Mu(f) => {
                if !self.spend() {
                    return Ok(None);
                }
                let mut probe_args: Vec<N> = Vec::with_capacity(args.len() + 1);
                let mut y = N::zero();
                loop {
                    if !self.spend() {
                        return Ok(None);
                    }
                    probe_args.clear();
                    match self.mu {
                        MuConvention::LastArgument => {
                            probe_args.extend_from_slice(args);
                            probe_args.push(y.clone());
                        }
                        MuConvention::FirstArgument => {
                            probe_args.push(y.clone());
                            probe_args.extend_from_slice(args);
                        }
                    }
                    match self.run(f, &probe_args)? {
                        Some(v) if v.is_zero() => return Ok(Some(y)),
                        Some(_) => y = y.checked_succ().ok_or(RecError::Overflow)?,
                        None => return Ok(None),
                    }
                }
            }
        }
    }
}
