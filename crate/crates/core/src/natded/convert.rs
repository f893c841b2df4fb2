use super::{NdReason, NdRejection, Prop, SchemeTerm, VarTerm};
use crate::syntax::NodePath;

/// Names every `λA` with `x` followed by its 1-based preorder index and
/// replaces each `[A]` by the innermost binder annotated `A`.
pub fn scheme_to_var(term: &SchemeTerm) -> Result<VarTerm, NdRejection> {
    let mut counter = 0;
    to_var(term, &mut Vec::new(), &mut counter, NodePath::root())
}

fn to_var(
    term: &SchemeTerm,
    binders: &mut Vec<(Prop, String)>,
    counter: &mut usize,
    path: NodePath,
) -> Result<VarTerm, NdRejection> {
    Ok(match term {
        SchemeTerm::Hyp(a) => {
            let (_, x) = binders
                .iter()
                .rev()
                .find(|(b, _)| b == a)
                .ok_or_else(|| NdRejection::new(path, NdReason::NoMatchingBinder(a.clone())))?;
            VarTerm::Var(x.clone())
        }
        SchemeTerm::HypFull(..) => return Err(NdRejection::new(path, NdReason::ExplicitAxiom)),
        SchemeTerm::Lam(a, body) => {
            *counter += 1;
            let x = format!("x{counter}");
            binders.push((a.clone(), x.clone()));
            let body = to_var(body, binders, counter, path.child(0));
            binders.pop();
            VarTerm::lam(x, a.clone(), body?)
        }
        SchemeTerm::Pair(l, r) => VarTerm::pair(
            to_var(l, binders, counter, path.child(0))?,
            to_var(r, binders, counter, path.child(1))?,
        ),
        SchemeTerm::Fst(t) => VarTerm::fst(to_var(t, binders, counter, path.child(0))?),
        SchemeTerm::Snd(t) => VarTerm::snd(to_var(t, binders, counter, path.child(0))?),
    })
}

/// Forgets variable names: `λx:A` becomes `λA` and `x` becomes `[A]` for
/// the annotation of its innermost binder.
pub fn var_to_scheme(term: &VarTerm) -> Result<SchemeTerm, NdRejection> {
    to_scheme(term, &mut Vec::new(), NodePath::root())
}

fn to_scheme(
    term: &VarTerm,
    binders: &mut Vec<(String, Prop)>,
    path: NodePath,
) -> Result<SchemeTerm, NdRejection> {
    Ok(match term {
        VarTerm::Var(x) => {
            let (_, a) = binders
                .iter()
                .rev()
                .find(|(name, _)| name == x)
                .ok_or_else(|| NdRejection::new(path, NdReason::UnboundVariable(x.clone())))?;
            SchemeTerm::Hyp(a.clone())
        }
        VarTerm::Lam(x, a, body) => {
            binders.push((x.clone(), a.clone()));
            let body = to_scheme(body, binders, path.child(0));
            binders.pop();
            SchemeTerm::lam(a.clone(), body?)
        }
        VarTerm::Pair(l, r) => SchemeTerm::pair(
            to_scheme(l, binders, path.child(0))?,
            to_scheme(r, binders, path.child(1))?,
        ),
        VarTerm::Fst(t) => SchemeTerm::fst(to_scheme(t, binders, path.child(0))?),
        VarTerm::Snd(t) => SchemeTerm::snd(to_scheme(t, binders, path.child(0))?),
    })
}
