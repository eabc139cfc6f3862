use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ideal::{contains, GroebnerBasis, Ideal};
use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, Ring, RingDescriptor};

/// Copy of `ring` with the variables listed in `front` moved to the front;
/// returns the new ring and the old-to-new index map.
fn reorder_front(ring: &Ring, front: &[usize], order: MonomialOrder) -> Result<(Ring, Vec<usize>)> {
    let n = ring.nvars();
    let mut seq: Vec<usize> = front.to_vec();
    seq.extend((0..n).filter(|v| !front.contains(v)));
    let mut map = vec![0; n];
    for (new, &old) in seq.iter().enumerate() {
        map[old] = new;
    }
    let names: Vec<String> = seq.iter().map(|&v| ring.vars()[v].clone()).collect();
    Ok((RingDescriptor::new(ring.field(), names, order)?, map))
}

fn inverse_map(map: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; map.len()];
    for (old, &new) in map.iter().enumerate() {
        inv[new] = old;
    }
    inv
}

/// `I ∩ k[x ∖ block]`, read off a block-elimination basis.
pub fn eliminate(i: &Ideal, block: &[usize]) -> Result<Ideal> {
    let ring = i.ring();
    if let Some(&b) = block.iter().find(|&&b| b >= ring.nvars()) {
        return Err(Error::OutOfRange(format!("variable index {b}")));
    }
    let mut block = block.to_vec();
    block.sort_unstable();
    block.dedup();
    if block.is_empty() {
        return Ok(i.clone());
    }
    let k = block.len();
    let (er, map) = reorder_front(ring, &block, MonomialOrder::Elimination(k))?;
    let gens: Vec<Polynomial> = i.gens().iter().map(|g| g.permute_into(&er, &map)).collect();
    let gb = GroebnerBasis::compute(&er, &gens);
    let back = inverse_map(&map);
    let kept = gb
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|t| t.0.block_degree(0, k) == 0))
        .map(|g| g.permute_into(ring, &back))
        .collect();
    Ok(Ideal::new(ring, kept))
}

/// Eliminates the named variables.
pub fn eliminate_names(i: &Ideal, names: &[&str]) -> Result<Ideal> {
    let block = names
        .iter()
        .map(|n| {
            i.ring()
                .var_index(n)
                .ok_or_else(|| Error::UnknownVariable((*n).into()))
        })
        .collect::<Result<Vec<_>>>()?;
    eliminate(i, &block)
}

/// Ring with one extra variable in front; returns it with the shift map.
fn with_front_var(ring: &Ring, stem: &str) -> Result<(Ring, Vec<usize>)> {
    let name = ring.fresh_name(stem);
    let names = std::iter::once(name).chain(ring.vars().iter().cloned());
    let r = RingDescriptor::new(ring.field(), names, MonomialOrder::Elimination(1))?;
    Ok((r, (1..=ring.nvars()).collect()))
}

/// `I ∩ J` as `(t·I + (1 − t)·J) ∩ k[x]`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    let ring = a.ring();
    if !crate::polyring::same_ring(ring, b.ring()) {
        return Err(Error::RingMismatch);
    }
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let (er, shift) = with_front_var(ring, "t")?;
    let t = Polynomial::var(&er, 0);
    let one_minus_t = &Polynomial::one(&er) - &t;
    let mut gens = Vec::new();
    for g in a.gens() {
        gens.push(&t * &g.permute_into(&er, &shift));
    }
    for g in b.gens() {
        gens.push(&one_minus_t * &g.permute_into(&er, &shift));
    }
    let gb = GroebnerBasis::compute(&er, &gens);
    let back: Vec<usize> = std::iter::once(0).chain(0..ring.nvars()).collect();
    let kept = gb
        .elements()
        .iter()
        .filter(|g| g.degree_in(0) == 0)
        .map(|g| g.permute_into(ring, &back))
        .collect();
    Ok(Ideal::new(ring, kept))
}

/// `I : f^∞` via `(I + (u·f − 1)) ∩ k[x]`.
fn saturate_rabinowitsch(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    let ring = i.ring();
    let (er, shift) = with_front_var(ring, "u")?;
    let u = Polynomial::var(&er, 0);
    let mut gens: Vec<Polynomial> = i.gens().iter().map(|g| g.permute_into(&er, &shift)).collect();
    gens.push(&(&u * &f.permute_into(&er, &shift)) - &Polynomial::one(&er));
    let gb = GroebnerBasis::compute(&er, &gens);
    let back: Vec<usize> = std::iter::once(0).chain(0..ring.nvars()).collect();
    let kept = gb
        .elements()
        .iter()
        .filter(|g| g.degree_in(0) == 0)
        .map(|g| g.permute_into(ring, &back))
        .collect();
    Ok(Ideal::new(ring, kept))
}

/// `I : x_v^∞` for homogeneous `I`: grevlex basis with `x_v` last, then
/// strip the powers of `x_v` from each element.
fn saturate_variable_homogeneous(i: &Ideal, v: usize) -> Result<Ideal> {
    let ring = i.ring();
    let n = ring.nvars();
    let others: Vec<usize> = (0..n).filter(|&w| w != v).collect();
    let (gr, map) = reorder_front(ring, &others, MonomialOrder::Grevlex)?;
    let gens: Vec<Polynomial> = i.gens().iter().map(|g| g.permute_into(&gr, &map)).collect();
    let gb = GroebnerBasis::compute(&gr, &gens);
    let last = n - 1;
    let back = inverse_map(&map);
    let out = gb
        .elements()
        .iter()
        .map(|g| {
            let k = g.terms().iter().map(|t| t.0.exp(last)).min().unwrap_or(0);
            let terms = g
                .terms()
                .iter()
                .map(|&(m, c)| (m.with_exp(last, m.exp(last) - k), c))
                .collect();
            Polynomial::from_terms(&gr, terms).permute_into(ring, &back)
        })
        .collect();
    Ok(Ideal::new(ring, out))
}

/// `I : ℓ^∞` for homogeneous `I` and a linear form `ℓ`, by a coordinate
/// change that turns `ℓ` into a variable.
fn saturate_linear_homogeneous(i: &Ideal, l: &Polynomial) -> Result<Ideal> {
    let ring = i.ring();
    let f = ring.field();
    let n = ring.nvars();
    let coeff = |v: usize| l.coeff(&Monomial::var(v));
    let k = (0..n).rev().find(|&v| coeff(v) != 0).ok_or(Error::SaturateByZero)?;
    // x_k ↦ (x_k − Σ_{i≠k} c_i x_i) / c_k makes ℓ ↦ x_k.
    let inv = f.inv(coeff(k))?;
    let mut fwd: Vec<Polynomial> = (0..n).map(|v| Polynomial::var(ring, v)).collect();
    let mut img = Polynomial::var(ring, k);
    for v in (0..n).filter(|&v| v != k) {
        img = img.add_scaled(&Polynomial::var(ring, v), f.neg(coeff(v)));
    }
    fwd[k] = img.scale(inv);
    let mut back: Vec<Polynomial> = (0..n).map(|v| Polynomial::var(ring, v)).collect();
    back[k] = l.clone();
    let mut fw = crate::polyring::RingMap::new(fwd, ring);
    let moved = Ideal::new(ring, i.gens().iter().map(|g| fw.apply(g)).collect());
    let sat = saturate_variable_homogeneous(&moved, k)?;
    let mut bw = crate::polyring::RingMap::new(back, ring);
    Ok(Ideal::new(ring, sat.gens().iter().map(|g| bw.apply(g)).collect()))
}

/// `I : f^∞` for a single polynomial.
pub fn saturate_poly(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::SaturateByZero);
    }
    if f.is_constant() {
        return Ok(i.clone());
    }
    let homog = i.is_homogeneous();
    if homog && f.len() == 1 {
        let m = f.terms()[0].0;
        let mut cur = i.clone();
        for v in 0..i.ring().nvars() {
            if m.exp(v) > 0 {
                cur = saturate_variable_homogeneous(&cur, v)?;
            }
        }
        return Ok(cur);
    }
    if homog && f.is_homogeneous() && f.degree() == Some(1) {
        return saturate_linear_homogeneous(i, f);
    }
    saturate_rabinowitsch(i, f)
}

/// `I : J^∞`.
///
/// With several generators the result is `I : f^∞` for a seeded random
/// combination `f` of them, accepted only after checking that it lies in
/// every `I : g^∞`; otherwise the single saturations are intersected.
pub fn saturate(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if !crate::polyring::same_ring(i.ring(), j.ring()) {
        return Err(Error::RingMismatch);
    }
    if j.is_zero() {
        return Err(Error::SaturateByZero);
    }
    if i.is_unit() {
        return Ok(Ideal::unit(i.ring()));
    }
    if j.gens().iter().any(|g| g.is_constant()) {
        return Ok(i.clone());
    }
    let gens = j.gens();
    if gens.len() == 1 {
        return saturate_poly(i, &gens[0]);
    }
    let singles: Vec<Ideal> = gens
        .iter()
        .map(|g| saturate_poly(i, g))
        .collect::<Result<_>>()?;
    let field = i.ring().field();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a7);
    let same_degree = gens.iter().all(|g| g.is_homogeneous() && g.degree() == gens[0].degree());
    if same_degree {
        for _ in 0..3 {
            let mut f = Polynomial::zero(i.ring());
            for g in gens {
                f = f.add_scaled(g, rng.gen_range(1..field.modulus()));
            }
            if f.is_zero() {
                continue;
            }
            let s = saturate_poly(i, &f)?;
            let mut ok = true;
            for t in &singles {
                if !contains(t, &s)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Ok(s);
            }
        }
    }
    let mut acc = singles[0].clone();
    for t in &singles[1..] {
        acc = intersect(&acc, t)?;
    }
    Ok(acc)
}

/// `I : (x_0, ..., x_n)^∞`.
pub fn saturate_irrelevant(i: &Ideal) -> Result<Ideal> {
    saturate(i, &Ideal::irrelevant(i.ring()))
}

/// `I : f` via `(I ∩ (f)) / f`.
pub fn quotient_poly(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::SaturateByZero);
    }
    let ring = i.ring();
    let cap = intersect(i, &Ideal::new(ring, vec![f.clone()]))?;
    let mut gens = Vec::new();
    for g in cap.gens() {
        gens.push(divide_exact(g, f)?);
    }
    Ok(Ideal::new(ring, gens))
}

/// Exact division by a polynomial known to divide `g`.
pub fn divide_exact(g: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    let ring = g.ring();
    let field = ring.field();
    let (lm, lc) = *f.lead_term().ok_or(Error::ZeroPolynomial)?;
    let inv = field.inv(lc)?;
    let mut rem = g.clone();
    let mut q = Polynomial::zero(ring);
    while let Some(&(m, c)) = rem.lead_term() {
        let Some(t) = lm.quotient_of(&m) else {
            return Err(Error::Unsupported("inexact polynomial division".into()));
        };
        let coef = field.mul(c, inv);
        q = q.add_scaled(&Polynomial::monomial(ring, t, coef), 1);
        rem = rem.add_scaled(&f.mul_term(&t, coef), field.neg(1));
    }
    Ok(q)
}
