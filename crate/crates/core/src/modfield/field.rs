use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Modulus used throughout unless a scenario overrides it.
pub const DEFAULT_PRIME: u32 = 10_000_019;

/// The prime field F_p, carried at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a % self.p == 0 {
            return Err(Error::DivisionByZero(self.p));
        }
        let (mut r0, mut r1) = (self.p as i64, (a % self.p) as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(t0.rem_euclid(self.p as i64) as u32)
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn from_u64(&self, v: u64) -> u32 {
        (v % self.p as u64) as u32
    }

    /// Symmetric representative in (-p/2, p/2].
    pub fn to_signed(&self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    pub fn elem(&self, v: i64) -> FieldScalar {
        FieldScalar {
            value: self.from_i64(v),
            p: self.p,
        }
    }
}

/// A residue class in F_p together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldScalar {
    value: u32,
    p: u32,
}

impl FieldScalar {
    pub fn new(field: PrimeField, value: u64) -> Self {
        FieldScalar {
            value: field.from_u64(value),
            p: field.p,
        }
    }

    #[inline]
    pub fn value(&self) -> u32 {
        self.value
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn inv(&self) -> Result<FieldScalar> {
        Ok(FieldScalar {
            value: self.field().inv(self.value)?,
            p: self.p,
        })
    }

    pub fn pow(&self, e: u64) -> FieldScalar {
        FieldScalar {
            value: self.field().pow(self.value, e),
            p: self.p,
        }
    }
}

/// Multiplicative inverse of a nonzero scalar.
pub fn inv(a: FieldScalar) -> Result<FieldScalar> {
    a.inv()
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:ident) => {
        impl $tr for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: FieldScalar) -> FieldScalar {
                assert_eq!(self.p, rhs.p, "scalars from different fields");
                FieldScalar {
                    value: self.field().$op(self.value, rhs.value),
                    p: self.p,
                }
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        FieldScalar {
            value: self.field().neg(self.value),
            p: self.p,
        }
    }
}

impl Div for FieldScalar {
    type Output = FieldScalar;
    /// Panics on division by zero; use [`FieldScalar::inv`] for the fallible form.
    fn div(self, rhs: FieldScalar) -> FieldScalar {
        self * rhs.inv().expect("division by zero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn inverse_examples() {
        let f = PrimeField::default();
        assert_eq!(f.inv(1).unwrap(), 1);
        assert_eq!(f.inv(DEFAULT_PRIME - 1).unwrap(), DEFAULT_PRIME - 1);
        assert_eq!(f.inv(2).unwrap(), 5_000_010);
        assert_eq!(f.inv(0), Err(Error::DivisionByZero(DEFAULT_PRIME)));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(PrimeField::new(10_000_020).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(65537).is_ok());
    }

    #[test]
    fn signed_representatives() {
        let f = PrimeField::default();
        assert_eq!(f.to_signed(f.from_i64(-3)), -3);
        assert_eq!(f.to_signed(7), 7);
    }

    proptest! {
        #[test]
        fn inverse_is_multiplicative(a in 1u32..DEFAULT_PRIME, b in 1u32..DEFAULT_PRIME) {
            let f = PrimeField::default();
            let (x, y) = (FieldScalar::new(f, a as u64), FieldScalar::new(f, b as u64));
            prop_assert_eq!((x * y).inv().unwrap(), y.inv().unwrap() * x.inv().unwrap());
            prop_assert_eq!(x.inv().unwrap().inv().unwrap(), x);
            prop_assert_eq!((x * x.inv().unwrap()).value(), 1);
        }
    }
}
