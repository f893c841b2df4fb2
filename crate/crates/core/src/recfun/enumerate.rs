use super::Program;

/// Every program with exactly `size` nodes whose `Zero`/`Proj` arities are
/// at most `max_arity`, well-formed or not.
pub fn programs_of_size(size: usize, max_arity: usize) -> Vec<Program> {
    let mut table: Vec<Vec<Program>> = vec![Vec::new()];
    for s in 1..=size {
        let next = shapes(s, max_arity, &table);
        table.push(next);
    }
    table.pop().unwrap_or_default()
}

/// Every well-formed program with at most `max_size` nodes, by size.
pub fn well_formed_programs(max_size: usize, max_arity: usize) -> Vec<Program> {
    let mut table: Vec<Vec<Program>> = vec![Vec::new()];
    for s in 1..=max_size {
        let next = shapes(s, max_arity, &table);
        table.push(next);
    }
    table
        .into_iter()
        .flatten()
        .filter(|p| p.arity().is_ok())
        .collect()
}

fn shapes(size: usize, max_arity: usize, smaller: &[Vec<Program>]) -> Vec<Program> {
    let mut out = Vec::new();
    if size == 1 {
        out.extend((0..=max_arity).map(Program::Zero));
        out.push(Program::Succ);
        for n in 1..=max_arity {
            out.extend((1..=n).map(|i| Program::Proj(n, i)));
        }
        return out;
    }
    let inner = size - 1;
    for f in &smaller[inner] {
        out.push(Program::mu(f.clone()));
    }
    for a in 1..inner {
        for g in &smaller[a] {
            for h in &smaller[inner - a] {
                out.push(Program::rec(g.clone(), h.clone()));
            }
        }
    }
    for a in 1..inner {
        for f in &smaller[a] {
            for gs in lists(inner - a, smaller) {
                out.push(Program::comp(f.clone(), gs));
            }
        }
    }
    out
}

/// Nonempty lists of programs whose sizes sum to `total`.
fn lists(total: usize, smaller: &[Vec<Program>]) -> Vec<Vec<Program>> {
    let mut out = Vec::new();
    for first in 1..=total {
        for p in &smaller[first] {
            if first == total {
                out.push(vec![p.clone()]);
            } else {
                for mut rest in lists(total - first, smaller) {
                    rest.insert(0, p.clone());
                    out.push(rest);
                }
            }
        }
    }
    out
}
