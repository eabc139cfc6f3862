use super::map::RationalMap;
use super::sample::{rng_for, sample_with};
use super::util::{eval_monomials, image_dimension, monomials_of_degree, poly_from_coeffs, Echelon};
use crate::error::{Error, Result};
use crate::groebner::{hilbert_data, hilbert_dim_degree, saturate_poly, GroebnerBasis, Ideal};
use crate::modfield::FMatrix;
use crate::polyring::{Monomial, MonomialOrder, Polynomial, RingDescriptor};

/// Extra sample rows beyond the number of unknowns.
const OVERSAMPLE: usize = 20;

/// Combined variable count up to which elimination is the default.
const ELIMINATION_DEFAULT_MAX_VARS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImageStrategy {
    /// Elimination when source plus target has at most ten variables,
    /// interpolation otherwise.
    Auto,
    Interpolation,
    Elimination,
    /// Lattice ideal of a monomial map, saturated by the variables.
    Toric,
}

impl ImageStrategy {
    pub fn token(&self) -> &'static str {
        match self {
            ImageStrategy::Auto => "auto",
            ImageStrategy::Interpolation => "interpolation",
            ImageStrategy::Elimination => "elimination",
            ImageStrategy::Toric => "toric",
        }
    }
}

impl std::str::FromStr for ImageStrategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => ImageStrategy::Auto,
            "interpolation" => ImageStrategy::Interpolation,
            "elimination" => ImageStrategy::Elimination,
            "toric" => ImageStrategy::Toric,
            _ => return Err(Error::Unsupported(format!("image strategy {s}"))),
        })
    }
}

/// Homogeneous ideal of the closure of the image, with every generator
/// certified by exact substitution. Uses seed 0 for sampling.
pub fn image(phi: &RationalMap, strategy: ImageStrategy, max_degree: u32) -> Result<Ideal> {
    image_seeded(phi, strategy, max_degree, 0)
}

pub fn image_seeded(
    phi: &RationalMap,
    strategy: ImageStrategy,
    max_degree: u32,
    seed: u64,
) -> Result<Ideal> {
    let strategy = match strategy {
        ImageStrategy::Auto => {
            if phi.source().nvars() + phi.target().nvars() <= ELIMINATION_DEFAULT_MAX_VARS {
                ImageStrategy::Elimination
            } else {
                ImageStrategy::Interpolation
            }
        }
        s => s,
    };
    let j = match strategy {
        ImageStrategy::Interpolation => image_interpolation(phi, max_degree, seed)?,
        ImageStrategy::Elimination => image_elimination(phi)?,
        ImageStrategy::Toric => image_toric(phi)?,
        ImageStrategy::Auto => unreachable!(),
    };
    certify(phi, &j)?;
    Ok(j)
}

/// Checks `g(forms) ≡ 0` on the source for every generator.
pub fn certify(phi: &RationalMap, j: &Ideal) -> Result<()> {
    for g in j.gens() {
        if !phi.pulls_back_to_zero(g)? {
            return Err(Error::CertificateFailed(format!(
                "image generator {} does not vanish on the source",
                g.to_signed_string()
            )));
        }
    }
    Ok(())
}

/// Degree-by-degree interpolation.
///
/// For each degree the kernel of the evaluation matrix on sampled image
/// points is the degree part of the image ideal (with high probability;
/// every generator is certified exactly afterwards). The ideal is closed
/// once its dimension matches the image dimension and the next degree
/// brings nothing new.
pub fn image_interpolation(phi: &RationalMap, max_degree: u32, seed: u64) -> Result<Ideal> {
    let target = phi.target().clone();
    let field = target.field();
    let mut rng = rng_for(seed, 2);
    let img_dim = image_dimension(phi, &mut rng)?;
    let chain = phi.chain();
    let mut samples: Vec<Vec<u32>> = Vec::new();
    let mut gens: Vec<Polynomial> = Vec::new();
    let mut gb: Option<GroebnerBasis> = None;
    for d in 1..=max_degree + 1 {
        let monos = monomials_of_degree(&target, d);
        let need = monos.len() + OVERSAMPLE;
        if samples.len() < need {
            let more = sample_with(&chain, need - samples.len(), &mut rng)?;
            samples.extend(more.into_iter().map(|p| p.coords().to_vec()));
        }
        let kernel = degree_kernel(field, &monos, &samples[..need]);
        let j_dim = ideal_degree_dim(&target, &gens, d)?;
        if d >= 2 && kernel.len() == j_dim && current_dim(&target, &gens)? == img_dim {
            return Ok(Ideal::new(&target, gens));
        }
        if d == max_degree + 1 {
            break;
        }
        if kernel.len() > j_dim {
            let mut ech = Echelon::new(field);
            let mut fresh = Vec::new();
            for v in kernel {
                let g = poly_from_coeffs(&target, &monos, &v);
                let nf = match &gb {
                    Some(b) => b.normal_form(&g)?,
                    None => g.clone(),
                };
                if nf.is_zero() {
                    continue;
                }
                let row: Vec<u32> = monos.iter().map(|m| nf.coeff(m)).collect();
                if ech.insert(row) {
                    fresh.push(g);
                }
            }
            gens.extend(fresh);
            gb = Some(GroebnerBasis::compute(&target, &gens));
        }
    }
    Err(Error::Inconclusive {
        last_degree: max_degree,
    })
}

fn degree_kernel(
    field: crate::modfield::PrimeField,
    monos: &[Monomial],
    pts: &[Vec<u32>],
) -> Vec<Vec<u32>> {
    let mut data = Vec::with_capacity(pts.len() * monos.len());
    for x in pts {
        data.extend(eval_monomials(field, monos, x));
    }
    FMatrix::from_rows(field, pts.len(), monos.len(), data)
        .expect("shape")
        .kernel_basis()
}

fn ideal_degree_dim(ring: &crate::polyring::Ring, gens: &[Polynomial], d: u32) -> Result<usize> {
    let total = monomials_count(ring.nvars(), d);
    if gens.is_empty() {
        return Ok(0);
    }
    let h = hilbert_data(&Ideal::new(ring, gens.to_vec()))?;
    Ok(total - h.hilbert_function(d) as usize)
}

fn current_dim(ring: &crate::polyring::Ring, gens: &[Polynomial]) -> Result<i64> {
    if gens.is_empty() {
        return Ok(ring.nvars() as i64 - 1);
    }
    Ok(hilbert_dim_degree(&Ideal::new(ring, gens.to_vec()))?.0)
}

fn monomials_count(n: usize, d: u32) -> usize {
    // C(n-1+d, d)
    let mut c: u128 = 1;
    for i in 0..d as u128 {
        c = c * (n as u128 + i) / (i + 1);
    }
    c as usize
}

/// Graph ideal `(y_j − f_j(x)) + I_X`, with the source block eliminated.
///
/// The forms are homogeneous of one degree, so the graph ideal is
/// quasi-homogeneous and its elimination is already the cone over the image;
/// no auxiliary scaling variable is needed.
pub fn image_elimination(phi: &RationalMap) -> Result<Ideal> {
    let src = phi.source();
    let tgt = phi.target();
    let nx = src.nvars();
    let mut names: Vec<String> = src
        .vars()
        .iter()
        .enumerate()
        .map(|(i, n)| {
            if tgt.var_index(n).is_some() {
                format!("src_{i}")
            } else {
                n.clone()
            }
        })
        .collect();
    names.extend(tgt.vars().iter().cloned());
    let big = RingDescriptor::new(src.field(), names, MonomialOrder::Elimination(nx))?;
    let xmap: Vec<usize> = (0..nx).collect();
    let mut gens: Vec<Polynomial> = Vec::new();
    if let Some(i) = phi.source_ideal() {
        gens.extend(i.gens().iter().map(|g| g.permute_into(&big, &xmap)));
    }
    for (j, f) in phi.forms().iter().enumerate() {
        let y = Polynomial::var(&big, nx + j);
        gens.push(&y - &f.permute_into(&big, &xmap));
    }
    let gb = GroebnerBasis::compute(&big, &gens);
    let mut back = vec![0usize; nx + tgt.nvars()];
    for (j, b) in back.iter_mut().enumerate().skip(nx) {
        *b = j - nx;
    }
    let kept: Vec<Polynomial> = gb
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|t| t.0.block_degree(0, nx) == 0))
        .map(|g| g.permute_into(tgt, &back))
        .collect();
    Ok(Ideal::new(tgt, kept))
}

/// Kernel of a monomial map through its exponent lattice.
///
/// A Z-basis of `{u : A u = 0}` gives binomials `y^{u+} − y^{u−}`; the
/// toric ideal is their saturation by the product of the variables.
pub fn image_toric(phi: &RationalMap) -> Result<Ideal> {
    if phi.source_ideal().is_some() || phi.parametrization().is_some() {
        return Err(Error::Unsupported("toric image of a restricted map".into()));
    }
    let src = phi.source();
    let tgt = phi.target();
    let n = src.nvars();
    let mut cols: Vec<Vec<i64>> = Vec::new();
    for f in phi.forms() {
        if f.len() != 1 || f.lead_coeff() != 1 {
            return Err(Error::Unsupported("toric image needs monic monomial forms".into()));
        }
        let m = f.lead_monomial().unwrap();
        cols.push((0..n).map(|v| m.exp(v) as i64).collect());
    }
    let basis = integer_kernel(&cols);
    let gens: Vec<Polynomial> = basis
        .iter()
        .map(|u| {
            let pos: Vec<u32> = u.iter().map(|&c| c.max(0) as u32).collect();
            let neg: Vec<u32> = u.iter().map(|&c| (-c).max(0) as u32).collect();
            Polynomial::monomial(tgt, Monomial::from_exps(&pos), 1)
                - Polynomial::monomial(tgt, Monomial::from_exps(&neg), 1)
        })
        .collect();
    let mut ideal = Ideal::new(tgt, gens);
    for v in 0..tgt.nvars() {
        ideal = saturate_poly(&ideal, &Polynomial::var(tgt, v))?;
    }
    Ok(ideal.reduced())
}

/// Z-basis of the integer vectors `u` with `Σ_j u_j cols[j] = 0`.
///
/// Unimodular row operations on `[cols | I]` bring the left block to
/// echelon form; the identity parts of the vanishing rows span the kernel.
pub fn integer_kernel(cols: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let m = cols.len();
    let n = cols.first().map_or(0, |c| c.len());
    let mut rows: Vec<(Vec<i64>, Vec<i64>)> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut e = vec![0i64; m];
            e[j] = 1;
            (c.clone(), e)
        })
        .collect();
    let mut r0 = 0;
    for c in 0..n {
        loop {
            let piv = (r0..m)
                .filter(|&r| rows[r].0[c] != 0)
                .min_by_key(|&r| rows[r].0[c].abs());
            let Some(piv) = piv else { break };
            rows.swap(r0, piv);
            let mut done = true;
            for r in r0 + 1..m {
                let a = rows[r].0[c];
                if a != 0 {
                    let q = a / rows[r0].0[c];
                    let (pa, pe) = rows[r0].clone();
                    for (x, y) in rows[r].0.iter_mut().zip(&pa) {
                        *x -= q * y;
                    }
                    for (x, y) in rows[r].1.iter_mut().zip(&pe) {
                        *x -= q * y;
                    }
                    if rows[r].0[c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                r0 += 1;
                break;
            }
        }
        if r0 == m {
            break;
        }
    }
    rows.into_iter()
        .skip(r0)
        .filter(|(a, _)| a.iter().all(|&x| x == 0))
        .map(|(_, e)| e)
        .collect()
}
