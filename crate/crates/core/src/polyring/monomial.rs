use std::fmt;

/// Largest supported number of ring variables.
pub const MAX_VARS: usize = 32;

/// Exponent vector with cached total degree. Unused slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u32,
    exps: [u8; MAX_VARS],
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial {
            deg: 0,
            exps: [0; MAX_VARS],
        }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    /// Panics if a slice entry exceeds 255 or the slice is longer than [`MAX_VARS`].
    pub fn from_exps(e: &[u32]) -> Self {
        assert!(e.len() <= MAX_VARS, "too many variables");
        let mut m = Self::one();
        for (i, &x) in e.iter().enumerate() {
            m.exps[i] = u8::try_from(x).expect("exponent overflow");
            m.deg += x;
        }
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn raw(&self) -> &[u8; MAX_VARS] {
        &self.exps
    }

    pub fn exps(&self, n: usize) -> Vec<u32> {
        self.exps[..n].iter().map(|&e| e as u32).collect()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn weighted_degree(&self, w: &[u32]) -> u32 {
        w.iter()
            .zip(self.exps.iter())
            .map(|(&a, &b)| a * b as u32)
            .sum()
    }

    /// Degree restricted to variables `lo..hi`.
    pub fn block_degree(&self, lo: usize, hi: usize) -> u32 {
        self.exps[lo..hi].iter().map(|&e| e as u32).sum()
    }

    /// Bit `i` set iff variable `i` occurs.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut m = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e != 0 {
                m |= 1 << i;
            }
        }
        m
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("exponent overflow");
        }
        r.deg = self.deg + other.deg;
        r
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut r = *other;
        for i in 0..MAX_VARS {
            r.exps[i] -= self.exps[i];
        }
        r.deg = other.deg - self.deg;
        Some(r)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut r = Monomial::one();
        for i in 0..MAX_VARS {
            r.exps[i] = self.exps[i].max(other.exps[i]);
            r.deg += r.exps[i] as u32;
        }
        r
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut r = Monomial::one();
        for i in 0..MAX_VARS {
            r.exps[i] = self.exps[i].min(other.exps[i]);
            r.deg += r.exps[i] as u32;
        }
        r
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Replaces exponent `i` by `e`.
    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut r = *self;
        r.deg = r.deg - r.exps[i] as u32 + e;
        r.exps[i] = u8::try_from(e).expect("exponent overflow");
        r
    }

    /// Moves exponents by a variable map: slot `i` goes to `map[i]`.
    /// Slots sent to the same place add up.
    pub fn permuted(&self, map: &[usize]) -> Monomial {
        let mut r = Monomial::one();
        for (i, &j) in map.iter().enumerate() {
            r.exps[j] = r.exps[j]
                .checked_add(self.exps[i])
                .expect("exponent overflow");
        }
        r.deg = self.deg;
        r
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}
