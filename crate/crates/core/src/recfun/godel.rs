//! Gödel numbering of programs.
//!
//! `⟨a, b⟩ = (a + b)(a + b + 1)/2 + b` is the pairing. A program is
//! `⟨tag, payload⟩` with tags 0..=5 in constructor order:
//!
//! | program      | payload                 |
//! |--------------|-------------------------|
//! | `Zero(n)`    | `n`                     |
//! | `Succ`       | `0`                     |
//! | `Proj(n, i)` | `⟨n, i⟩`                |
//! | `Comp(f, gs)`| `⟨#f, list(#gs)⟩`       |
//! | `Rec(g, h)`  | `⟨#g, #h⟩`              |
//! | `Mu(f)`      | `#f`                    |
//!
//! `list([a1, .., am]) = ⟨m, ⟨a1, ⟨a2, .. ⟨am, 0⟩ ..⟩⟩⟩`.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::{Program, RecError};

/// Lists longer than this are refused by the decoder.
pub const MAX_DECODED_LIST: usize = 1 << 16;

pub fn pair(a: &BigUint, b: &BigUint) -> BigUint {
    let s = a + b;
    (&s * (&s + 1u32)) / 2u32 + b
}

/// Inverse of [`pair`].
pub fn unpair(z: &BigUint) -> (BigUint, BigUint) {
    // largest w with w(w+1)/2 <= z
    let w = ((z * 8u32 + 1u32).sqrt() - 1u32) / 2u32;
    let t = (&w * (&w + 1u32)) / 2u32;
    let b = z - t;
    let a = &w - &b;
    (a, b)
}

/// The code of a well-formed program.
pub fn godel(p: &Program) -> Result<BigUint, RecError> {
    p.arity()?;
    Ok(encode(p))
}

fn encode(p: &Program) -> BigUint {
    let tagged = |tag: u32, payload: BigUint| pair(&BigUint::from(tag), &payload);
    match p {
        Program::Zero(n) => tagged(0, BigUint::from(*n)),
        Program::Succ => tagged(1, BigUint::zero()),
        Program::Proj(n, i) => tagged(2, pair(&BigUint::from(*n), &BigUint::from(*i))),
        Program::Comp(f, gs) => {
            let list = gs
                .iter()
                .rev()
                .fold(BigUint::zero(), |rest, g| pair(&encode(g), &rest));
            let list = pair(&BigUint::from(gs.len()), &list);
            tagged(3, pair(&encode(f), &list))
        }
        Program::Rec(g, h) => tagged(4, pair(&encode(g), &encode(h))),
        Program::Mu(f) => tagged(5, encode(f)),
    }
}

/// Decodes a code back to its program. Codes of ill-formed programs and
/// non-canonical payloads are refused.
pub fn ungodel(code: &BigUint) -> Result<Program, RecError> {
    let p = decode(code)?;
    p.arity()
        .map_err(|e| RecError::Decode(format!("code denotes an ill-formed program ({e})")))?;
    Ok(p)
}

fn small(n: &BigUint, what: &str) -> Result<usize, RecError> {
    n.to_usize()
        .ok_or_else(|| RecError::Decode(format!("{what} {n} is too large")))
}

fn decode(code: &BigUint) -> Result<Program, RecError> {
    let (tag, payload) = unpair(code);
    let tag = tag
        .to_u8()
        .filter(|t| *t <= 5)
        .ok_or_else(|| RecError::Decode(format!("tag {tag} is not a constructor")))?;
    Ok(match tag {
        0 => Program::Zero(small(&payload, "arity")?),
        1 => {
            if !payload.is_zero() {
                return Err(RecError::Decode("successor payload must be 0".into()));
            }
            Program::Succ
        }
        2 => {
            let (n, i) = unpair(&payload);
            Program::Proj(small(&n, "arity")?, small(&i, "index")?)
        }
        3 => {
            let (f, list) = unpair(&payload);
            let (len, mut rest) = unpair(&list);
            let len = small(&len, "list length")?;
            if len > MAX_DECODED_LIST {
                return Err(RecError::Decode(format!("list length {len} exceeds limit")));
            }
            let mut gs = Vec::with_capacity(len);
            for _ in 0..len {
                let (g, tail) = unpair(&rest);
                gs.push(decode(&g)?);
                rest = tail;
            }
            if !rest.is_zero() {
                return Err(RecError::Decode("list has trailing entries".into()));
            }
            Program::comp(decode(&f)?, gs)
        }
        4 => {
            let (g, h) = unpair(&payload);
            Program::rec(decode(&g)?, decode(&h)?)
        }
        _ => Program::mu(decode(&payload)?),
    })
}
