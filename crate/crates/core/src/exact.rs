//! Exact integers, rationals and truncated rational power series.
//!
//! The series engine is the independent oracle for the Fubini-type numbers:
//! the exponential generating functions are expanded here term by term in
//! exact rationals, never through the polynomial recurrences.

use std::fmt;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Factorials `0!, 1!, ..., n!`.
pub fn factorials_upto(n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = BigInt::one();
    out.push(acc.clone());
    for k in 1..=n {
        acc *= k;
        out.push(acc.clone());
    }
    out
}

pub(crate) fn int_ratio(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A power series in `t` truncated after the `t^order` term.
///
/// All coefficients are reduced rationals. Binary operations require both
/// operands to share the same truncation order.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

impl RationalSeries {
    /// Builds a series of the given order from leading coefficients, padding
    /// with zeros. Extra coefficients beyond `order` are dropped.
    pub fn new(coeffs: Vec<BigRational>, order: usize) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| int_ratio(c)).collect(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &BigRational {
        &self.coeffs[j]
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// `Σ a^j t^j / j!` up to `t^order`.
    pub fn exp_rate(rate: i64, order: usize) -> Self {
        let rate = int_ratio(rate);
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = BigRational::one();
        coeffs.push(term.clone());
        for j in 1..=order {
            term = term * &rate / int_ratio(j as i64);
            coeffs.push(term.clone());
        }
        Self { coeffs }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self { coeffs })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(BigRational::zero(), |acc, j| {
                    let (a, b) = (&self.coeffs[j], &other.coeffs[k - j]);
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc + a * b
                    }
                })
            })
            .collect();
        Ok(Self { coeffs })
    }

    /// The series `q` with `q * divisor = self` up to truncation.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        self.check_order(divisor)?;
        let b0 = &divisor.coeffs[0];
        if b0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order();
        let mut q: Vec<BigRational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for (qj, b) in q.iter().zip(divisor.coeffs[1..=k].iter().rev()) {
                if !b.is_zero() {
                    acc -= qj * b;
                }
            }
            q.push(acc / b0);
        }
        Ok(Self { coeffs: q })
    }

    /// `self^e` by binary exponentiation; `e = 0` gives the one-series.
    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same order");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same order");
            }
        }
        result
    }

    /// `n! · [t^n]` for every `n`, asserting each is an integer.
    pub fn egf_coefficients(&self) -> Result<Vec<BigInt>> {
        let mut fact = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                fact *= n;
            }
            let scaled = c * BigRational::from_integer(fact.clone());
            if !scaled.is_integer() {
                return Err(Error::NonIntegral { index: n });
            }
            out.push(scaled.to_integer());
        }
        Ok(out)
    }
}

impl fmt::Debug for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.coeffs.iter().map(|c| c.to_string()))
            .finish()
    }
}

/// `F_{n,r}` for `n = 0..=order` from `r! e^{rt} / (2 - e^t)^{r+1}`.
pub fn egf_r_fubini(r: u32, order: usize) -> Result<Vec<BigInt>> {
    let numerator = RationalSeries::exp_rate(i64::from(r), order)
        .scale(&BigRational::from_integer(factorial(u64::from(r))));
    let two = RationalSeries::constant(int_ratio(2), order);
    let base = two.sub(&RationalSeries::exp_rate(1, order))?;
    numerator.div(&base.pow(r + 1))?.egf_coefficients()
}

/// `F_m(n)` for `n = 0..=order` from `e^t / (1 - (e^{mt} - 1)/m)`.
pub fn egf_whitney_fubini(m: u32, order: usize) -> Result<Vec<BigInt>> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let one = RationalSeries::one(order);
    let shifted = RationalSeries::exp_rate(i64::from(m), order).sub(&one)?;
    let inv_m = BigRational::new(BigInt::one(), BigInt::from(m));
    let denominator = one.sub(&shifted.scale(&inv_m))?;
    RationalSeries::exp_rate(1, order)
        .div(&denominator)?
        .egf_coefficients()
}
