use super::{Rule, RuleName, RuleSystem};
use crate::natural::Natural;

/// The even numbers: `f1 : () ↦ 0` and `f2 : a ↦ a + 2`.
///
/// On fixed-width types `f2` is undefined where `a + 2` overflows.
pub fn even_system<N: Natural>() -> RuleSystem<N> {
    let f1 = Rule::new(RuleName::new("f1").unwrap(), 0, |_: &[N]| Some(N::zero()));
    let f2 = Rule::new(RuleName::new("f2").unwrap(), 1, |args: &[N]| {
        args[0].checked_add(&(N::one() + N::one()))
    });
    RuleSystem::new("even", vec![f1, f2]).expect("distinct names")
}
