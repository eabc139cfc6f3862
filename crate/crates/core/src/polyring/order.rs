use std::cmp::Ordering;

use super::monomial::{Monomial, MAX_VARS};
use crate::error::{Error, Result};

/// Monomial orders supported by the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Weighted degree first, ties broken lexicographically.
    WeightedGraded(Vec<u32>),
    /// The first `k` variables are eliminated: compare by grevlex on the
    /// first block, then grevlex on the rest.
    Elimination(usize),
}

#[inline]
fn grevlex_block(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let (da, db) = (a.block_degree(lo, hi), b.block_degree(lo, hi));
    if da != db {
        return da.cmp(&db);
    }
    let (ea, eb) = (a.raw(), b.raw());
    for i in (lo..hi).rev() {
        if ea[i] != eb[i] {
            return eb[i].cmp(&ea[i]);
        }
    }
    Ordering::Equal
}

#[inline]
fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    a.raw().cmp(b.raw())
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => {
                if a.degree() != b.degree() {
                    return a.degree().cmp(&b.degree());
                }
                let (ea, eb) = (a.raw(), b.raw());
                for i in (0..MAX_VARS).rev() {
                    if ea[i] != eb[i] {
                        return eb[i].cmp(&ea[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::WeightedGraded(w) => a
                .weighted_degree(w)
                .cmp(&b.weighted_degree(w))
                .then_with(|| lex(a, b)),
            MonomialOrder::Elimination(k) => {
                grevlex_block(a, b, 0, *k).then_with(|| grevlex_block(a, b, *k, MAX_VARS))
            }
        }
    }

    /// Header token used by the ideal file format.
    pub fn token(&self) -> Result<String> {
        match self {
            MonomialOrder::Grevlex => Ok("grevlex".into()),
            MonomialOrder::Lex => Ok("lex".into()),
            MonomialOrder::Elimination(k) => Ok(format!("elim:{k}")),
            MonomialOrder::WeightedGraded(_) => Err(Error::Unsupported(
                "weighted orders have no file token".into(),
            )),
        }
    }

    pub fn from_token(tok: &str) -> Result<Self> {
        match tok {
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "lex" => Ok(MonomialOrder::Lex),
            t => t
                .strip_prefix("elim:")
                .and_then(|k| k.parse().ok())
                .map(MonomialOrder::Elimination)
                .ok_or_else(|| Error::Parse {
                    pos: 0,
                    msg: format!("unknown order `{t}`"),
                }),
        }
    }
}

/// Compares two exponent vectors under `order`.
pub fn compare_monomials(order: &MonomialOrder, a: &[u32], b: &[u32]) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    if a.len() > MAX_VARS {
        return Err(Error::TooManyVariables(a.len()));
    }
    Ok(order.cmp(&Monomial::from_exps(a), &Monomial::from_exps(b)))
}
