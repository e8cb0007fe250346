//! Exact integer power series truncated at a fixed order.
//!
//! Coefficients are `BigInt`; there is no floating point anywhere. Division
//! is supported when the divisor has constant term 1 or -1, which covers all
//! the rational generating functions used in this crate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Power series over `BigInt` with coefficients for t^0 .. t^order.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// c * t^k, truncated.
    pub fn monomial(order: usize, k: usize, c: i64) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = BigInt::from(c);
        }
        s
    }

    /// Polynomial from low-order coefficients; anything past `order` is cut.
    pub fn polynomial(order: usize, coeffs: &[i64]) -> Self {
        let mut s = Self::zero(order);
        for (i, &c) in coeffs.iter().enumerate().take(order + 1) {
            s.coeffs[i] = BigInt::from(c);
        }
        s
    }

    pub fn from_coeffs(order: usize, coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, BigInt::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient as an unsigned count; panics on negative values.
    pub fn coeff_count(&self, k: usize) -> BigUint {
        let c = self.coeff(k);
        assert!(!c.is_negative(), "coefficient of t^{k} is negative: {c}");
        c.to_biguint().unwrap()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by t^k (shift up, truncating at the order).
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for i in k..=order {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Multiplicative inverse; requires constant term 1 or -1.
    pub fn recip(&self) -> Self {
        let order = self.order();
        let c0 = &self.coeffs[0];
        assert!(
            c0.magnitude().is_one(),
            "series inverse requires unit constant term, got {c0}"
        );
        let mut inv = Self::zero(order);
        inv.coeffs[0] = c0.clone(); // 1/1 = 1, 1/-1 = -1
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for i in 1..=n {
                acc += &self.coeffs[i] * &inv.coeffs[n - i];
            }
            inv.coeffs[n] = -c0 * acc;
        }
        inv
    }

    pub fn div(&self, rhs: &TruncatedSeries) -> Self {
        self * &rhs.recip()
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// 1/(1 - c t), the geometric series.
    pub fn geometric(order: usize, c: i64) -> Self {
        Self::polynomial(order, &[1, -c]).recip()
    }

    /// t/(1 - t).
    pub fn t_over_one_minus_t(order: usize) -> Self {
        Self::geometric(order, 1).shift(1)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order());
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order());
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order());
        let order = self.order();
        let mut out = TruncatedSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let prod = &self.coeffs[i] * &rhs.coeffs[j];
                out.coeffs[i + j] += prod;
            }
        }
        out
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[{:?}]", self.coeffs)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*t^{}", c, i)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
