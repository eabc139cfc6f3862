use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::map::RationalMap;
use super::point::ProjectivePoint;
use crate::error::{Error, Result};
use crate::modfield::PrimeField;

/// Rejection window used to detect degenerate chains.
const WINDOW: usize = 1000;

/// Seeded generator for all random choices; `stream` separates independent
/// uses of one user seed.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Uniform nonzero vector of length `n`.
pub fn random_coords(rng: &mut ChaCha8Rng, field: PrimeField, n: usize) -> Vec<u32> {
    loop {
        let v: Vec<u32> = (0..n).map(|_| rng.gen_range(0..field.modulus())).collect();
        if v.iter().any(|&c| c != 0) {
            return v;
        }
    }
}

/// Pushes seeded random points of the first source through the chain.
///
/// A candidate is rejected when some stage evaluates to zero. More than
/// 99% rejections over a window of candidates is reported as a degenerate
/// chain.
pub fn sample_points(chain: &[RationalMap], n: usize, seed: u64) -> Result<Vec<ProjectivePoint>> {
    let mut rng = rng_for(seed, 1);
    sample_with(chain, n, &mut rng)
}

pub fn sample_with(
    chain: &[RationalMap],
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<ProjectivePoint>> {
    let first = chain.first().ok_or(Error::OutOfRange("empty chain".into()))?;
    for w in chain.windows(2) {
        if !crate::polyring::same_ring(w[0].target(), w[1].source()) {
            return Err(Error::RingMismatch);
        }
    }
    let field = first.source().field();
    let dim = first.source().nvars();
    let mut out = Vec::with_capacity(n);
    let (mut tried, mut rejected) = (0usize, 0usize);
    while out.len() < n {
        let mut x = random_coords(rng, field, dim);
        tried += 1;
        let mut ok = true;
        for m in chain {
            let y = m.eval_raw(&x);
            if y.iter().all(|&c| c == 0) {
                ok = false;
                break;
            }
            x = y;
        }
        if ok {
            out.push(ProjectivePoint::new(field, &x)?);
        } else {
            rejected += 1;
        }
        if tried >= WINDOW && rejected * 100 > tried * 99 {
            return Err(Error::DegenerateChain { rejected, tried });
        }
        if tried % WINDOW == 0 && rejected * 100 <= tried * 99 {
            tried = 0;
            rejected = 0;
        }
    }
    Ok(out)
}

/// Points on the source variety of `phi` (via its parametrization) together
/// with their images.
pub fn sample_source_and_image(
    phi: &RationalMap,
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<(ProjectivePoint, ProjectivePoint)>> {
    let chain = phi.chain();
    let (pre, last) = chain.split_at(chain.len() - 1);
    let field = phi.source().field();
    let mut out = Vec::with_capacity(n);
    let mut guard = 0usize;
    while out.len() < n {
        guard += 1;
        if guard > 100 * n + WINDOW {
            return Err(Error::DegenerateChain {
                rejected: guard - out.len(),
                tried: guard,
            });
        }
        let x = if pre.is_empty() {
            if phi.source_ideal().is_some() {
                return Err(Error::Unsupported(
                    "sampling a restricted map needs a parametrization".into(),
                ));
            }
            ProjectivePoint::new(field, &random_coords(rng, field, phi.source().nvars()))?
        } else {
            match sample_with(pre, 1, rng) {
                Ok(mut v) => v.pop().unwrap(),
                Err(e) => return Err(e),
            }
        };
        let y = last[0].eval_raw(x.coords());
        if y.iter().all(|&c| c == 0) {
            continue;
        }
        out.push((x, ProjectivePoint::new(field, &y)?));
    }
    Ok(out)
}
