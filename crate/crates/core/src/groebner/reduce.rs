use std::cmp::Ordering;

use crate::modfield::PrimeField;
use crate::polyring::{Monomial, MonomialOrder, Polynomial, Term};

/// Lead monomials of a reducer set with their support masks.
pub(crate) struct Leads {
    entries: Vec<(Monomial, u32, usize)>,
}

impl Leads {
    pub fn new() -> Self {
        Leads { entries: Vec::new() }
    }

    pub fn from_basis(basis: &[Polynomial]) -> Self {
        let mut l = Leads::new();
        for (i, g) in basis.iter().enumerate() {
            if let Some(m) = g.lead_monomial() {
                l.push(m, i);
            }
        }
        l
    }

    pub fn push(&mut self, m: Monomial, idx: usize) {
        self.entries.push((m, m.support_mask(), idx));
    }

    pub fn remove_index(&mut self, idx: usize) {
        self.entries.retain(|e| e.2 != idx);
    }

    /// Index of the first reducer whose lead divides `m`.
    #[inline]
    pub fn find(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        self.entries
            .iter()
            .find(|(l, lm, _)| lm & !mask == 0 && l.divides(m))
            .map(|e| e.2)
    }
}

/// `acc_asc - c·q·tail` where `acc_asc` and the result are ascending and
/// `tail` is a descending term list.
fn sub_multiple(
    field: PrimeField,
    order: &MonomialOrder,
    acc_asc: &[Term],
    tail_desc: &[Term],
    q: &Monomial,
    c: u32,
    out: &mut Vec<Term>,
) {
    out.clear();
    out.reserve(acc_asc.len() + tail_desc.len());
    let negc = field.neg(c);
    let mut i = 0;
    let mut j = tail_desc.len();
    while i < acc_asc.len() && j > 0 {
        let (tm, tc) = tail_desc[j - 1];
        let m = tm.mul(q);
        match order.cmp(&acc_asc[i].0, &m) {
            Ordering::Less => {
                out.push(acc_asc[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push((m, field.mul(tc, negc)));
                j -= 1;
            }
            Ordering::Equal => {
                let v = field.add(acc_asc[i].1, field.mul(tc, negc));
                if v != 0 {
                    out.push((m, v));
                }
                i += 1;
                j -= 1;
            }
        }
    }
    out.extend_from_slice(&acc_asc[i..]);
    while j > 0 {
        let (tm, tc) = tail_desc[j - 1];
        out.push((tm.mul(q), field.mul(tc, negc)));
        j -= 1;
    }
}

/// Fully reduces `f` by monic reducers; returns descending terms.
pub(crate) fn reduce_terms(
    f: &Polynomial,
    basis: &[Polynomial],
    leads: &Leads,
) -> Vec<Term> {
    let field = f.field();
    let order = f.ring().order().clone();
    let mut work: Vec<Term> = f.terms().iter().rev().copied().collect();
    let mut scratch: Vec<Term> = Vec::new();
    let mut out: Vec<Term> = Vec::new();
    while let Some((m, c)) = work.pop() {
        match leads.find(&m) {
            None => out.push((m, c)),
            Some(k) => {
                let g = &basis[k];
                let lead = g.terms()[0].0;
                let q = lead.quotient_of(&m).expect("lead divides");
                debug_assert_eq!(g.terms()[0].1, 1);
                sub_multiple(field, &order, &work, &g.terms()[1..], &q, c, &mut scratch);
                std::mem::swap(&mut work, &mut scratch);
            }
        }
    }
    out
}
