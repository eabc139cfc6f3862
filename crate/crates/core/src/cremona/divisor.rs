use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Exceptional and pulled-back classes on the iterated blow-up of P^3:
/// hyperplane, the point p, the four vertices, the points of the lines
/// r_i on the edges, the six edges and the three lines r_i.
pub const BLOWUP_BASIS: [&str; 21] = [
    "H", "Ep", "E0", "E1", "E2", "E3", "E'1", "E'2", "E'3", "E''1", "E''2", "E''3", "F01", "F02",
    "F03", "F12", "F13", "F23", "R1", "R2", "R3",
];

/// Integer combination of basis classes; linear equivalence only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClass {
    basis: Arc<[String]>,
    coeffs: Vec<i64>,
}

impl DivisorClass {
    pub fn new(basis: Arc<[String]>, coeffs: Vec<i64>) -> Result<Self> {
        if basis.len() != coeffs.len() {
            return Err(Error::LengthMismatch {
                expected: basis.len(),
                got: coeffs.len(),
            });
        }
        Ok(DivisorClass { basis, coeffs })
    }

    pub fn zero(basis: Arc<[String]>) -> Self {
        let n = basis.len();
        DivisorClass {
            basis,
            coeffs: vec![0; n],
        }
    }

    /// Class on [`BLOWUP_BASIS`] from `(name, coefficient)` pairs.
    pub fn blowup(terms: &[(&str, i64)]) -> Result<Self> {
        let mut c = Self::zero(blowup_basis());
        for (name, k) in terms {
            let i = BLOWUP_BASIS
                .iter()
                .position(|b| b == name)
                .ok_or_else(|| Error::MissingLabel((*name).to_string()))?;
            c.coeffs[i] += k;
        }
        Ok(c)
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, name: &str) -> Option<i64> {
        self.basis.iter().position(|b| b == name).map(|i| self.coeffs[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Shared handle to [`BLOWUP_BASIS`].
pub fn blowup_basis() -> Arc<[String]> {
    BLOWUP_BASIS.iter().map(|s| s.to_string()).collect()
}

pub fn class_sum(a: &DivisorClass, b: &DivisorClass) -> Result<DivisorClass> {
    if a.basis != b.basis {
        return Err(Error::BasisMismatch);
    }
    let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
    Ok(DivisorClass {
        basis: a.basis.clone(),
        coeffs,
    })
}

fn sum_over(names: &[&str], k: i64) -> Vec<(&'static str, i64)> {
    BLOWUP_BASIS
        .iter()
        .filter(|b| names.iter().any(|n| b.starts_with(n) && is_family(b, n)))
        .map(|b| (*b, k))
        .collect()
}

// `E` must not swallow `E'1` or `Ep`; `E'` must not swallow `E''1`.
fn is_family(b: &str, stem: &str) -> bool {
    let rest = &b[stem.len()..];
    !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit())
}

/// Strict transform of a general sextic double along the edges, triple at
/// p and containing the lines r_i.
pub fn sigma_bullet() -> DivisorClass {
    let mut t = vec![("H", 6), ("Ep", -3)];
    t.extend(sum_over(&["E"], -3));
    t.extend(sum_over(&["E'", "E''", "F"], -2));
    t.extend(sum_over(&["R"], -1));
    DivisorClass::blowup(&t).expect("basis names")
}

/// Canonical class of the blow-up.
pub fn canonical_class() -> DivisorClass {
    let mut t = vec![("H", -4), ("Ep", 2)];
    t.extend(sum_over(&["E", "E'", "E''"], 2));
    t.extend(sum_over(&["F", "R"], 1));
    DivisorClass::blowup(&t).expect("basis names")
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (b, &c) in self.basis.iter().zip(&self.coeffs) {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            let mag = c.abs();
            let coef = if mag == 1 { String::new() } else { mag.to_string() };
            if first {
                let lead = if c < 0 { "-" } else { "" };
                write!(f, "{lead}{coef}{b}")?;
                first = false;
            } else {
                write!(f, " {sign} {coef}{b}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
