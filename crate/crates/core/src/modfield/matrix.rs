use std::fmt;

use super::field::{FieldScalar, PrimeField};
use crate::error::{Error, Result};

/// Dense row-major matrix over F_p.
#[derive(Clone, PartialEq, Eq)]
pub struct FMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Output of [`FMatrix::row_reduce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowReduction {
    /// Reduced row-echelon form; zero rows are kept at the bottom.
    pub reduced: FMatrix,
    pub rank: usize,
    /// Pivot column of each nonzero row, ascending.
    pub pivots: Vec<usize>,
    /// One vector per free column, free columns in ascending order.
    pub kernel: Vec<Vec<u32>>,
}

impl FMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from residues; every entry is reduced mod p.
    pub fn from_rows(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        let p = field.modulus();
        let data = data.into_iter().map(|v| v % p).collect();
        Ok(FMatrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_i64_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend(r.iter().map(|&v| field.from_i64(v)));
        }
        Ok(FMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldScalar {
        FieldScalar::new(self.field, self.data[r * self.cols + c] as u64)
    }

    #[inline]
    pub fn raw(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.modulus();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: &[u32]) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: row.len(),
            });
        }
        let p = self.field.modulus();
        self.data.extend(row.iter().map(|&v| v % p));
        self.rows += 1;
        Ok(())
    }

    pub fn mul_vec(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let p = self.field.modulus() as u64;
        Ok((0..self.rows)
            .map(|r| {
                let acc = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % p);
                acc as u32
            })
            .collect())
    }

    pub fn transpose(&self) -> FMatrix {
        let mut t = FMatrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    /// Gauss-Jordan elimination. The pivot of each step is the first row
    /// (from the current one down) with a nonzero entry in the leftmost
    /// remaining column.
    pub fn row_reduce(&self) -> RowReduction {
        let f = self.field;
        let p = f.modulus() as u64;
        let cols = self.cols;
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    m.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(m[r * cols + c]).expect("nonzero pivot") as u64;
            for j in c..cols {
                m[r * cols + j] = ((m[r * cols + j] as u64 * inv) % p) as u32;
            }
            let (head, tail) = m.split_at_mut(r * cols);
            let (prow, tail) = tail.split_at_mut(cols);
            let prow = &prow[c..];
            for row in head.chunks_mut(cols).chain(tail.chunks_mut(cols)) {
                let factor = row[c] as u64;
                if factor == 0 {
                    continue;
                }
                let neg = p - factor;
                for (x, &y) in row[c..].iter_mut().zip(prow) {
                    if y != 0 {
                        *x = ((*x as u64 + neg * y as u64) % p) as u32;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        let mut kernel = Vec::with_capacity(cols - rank);
        let mut is_pivot = vec![false; cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        for free in (0..cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[i * cols + free]);
            }
            kernel.push(v);
        }
        RowReduction {
            reduced: FMatrix {
                field: f,
                rows: self.rows,
                cols,
                data: m,
            },
            rank,
            pivots,
            kernel,
        }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().rank
    }

    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        self.row_reduce().kernel
    }
}

impl fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FMatrix {}x{} over F_{}", self.rows, self.cols, self.field.modulus())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn identity_has_full_rank() {
        let red = FMatrix::identity(PrimeField::default(), 5).row_reduce();
        assert_eq!(red.rank, 5);
        assert!(red.kernel.is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_standard_basis() {
        let red = FMatrix::zeros(PrimeField::default(), 3, 4).row_reduce();
        assert_eq!(red.rank, 0);
        assert_eq!(red.kernel.len(), 4);
        for (i, v) in red.kernel.iter().enumerate() {
            let mut e = vec![0; 4];
            e[i] = 1;
            assert_eq!(v, &e);
        }
    }

    #[test]
    fn empty_matrix() {
        let red = FMatrix::zeros(PrimeField::default(), 0, 0).row_reduce();
        assert_eq!(red.rank, 0);
        assert!(red.kernel.is_empty());
    }

    #[test]
    fn kernel_uses_echelon_parametrization() {
        let f = small();
        let m = FMatrix::from_i64_rows(f, &[vec![1, 2, 3], vec![2, 4, 7]]).unwrap();
        let red = m.row_reduce();
        assert_eq!(red.pivots, vec![0, 2]);
        assert_eq!(red.kernel, vec![vec![f.from_i64(-2), 1, 0]]);
    }

    #[test]
    fn rejects_bad_shape() {
        assert!(FMatrix::from_rows(small(), 2, 2, vec![1, 2, 3]).is_err());
    }

    prop_compose! {
        fn matrix()(rows in 0usize..7, cols in 0usize..7)
            (data in proptest::collection::vec(0u32..5, rows * cols), rows in Just(rows), cols in Just(cols))
            -> FMatrix {
            FMatrix::from_rows(PrimeField::new(7).unwrap(), rows, cols, data).unwrap()
        }
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_annihilated(m in matrix()) {
            let red = m.row_reduce();
            prop_assert_eq!(red.rank + red.kernel.len(), m.cols());
            for k in &red.kernel {
                prop_assert!(m.mul_vec(k).unwrap().iter().all(|&x| x == 0));
            }
        }

        #[test]
        fn reduction_is_idempotent_and_deterministic(m in matrix()) {
            let once = m.row_reduce();
            let twice = once.reduced.row_reduce();
            prop_assert_eq!(&once.reduced, &twice.reduced);
            prop_assert_eq!(once.rank, twice.rank);
            prop_assert_eq!(m.row_reduce(), once);
        }
    }
}
