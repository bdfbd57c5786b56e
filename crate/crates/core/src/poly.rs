//! Dense integer polynomials and the Fubini-type polynomial families.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::{factorial, BigInt, BigRational};
use crate::triangles::TriangleFamily;

/// Polynomial with integer coefficients, `coeffs[i]` multiplying `x^i`.
/// Trailing zeros are always trimmed, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * i)
                .collect(),
        )
    }

    /// Coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval_int(&self, x0: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x0 + c)
    }

    pub fn eval_rational(&self, x0: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x0 + BigRational::from_integer(c.clone())
        })
    }

    /// Sign of `p(num/den)` for `den > 0`, computed from the homogenised
    /// integer form `Σ c_i num^i den^(d-i)` without rationals.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> i8 {
        let Some(d) = self.degree() else { return 0 };
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs[..=d].iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        sign_of(&acc)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `x^j`.
    pub fn shift_up(&self, j: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); j];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Gcd of the coefficients, taken nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            if g.is_one() {
                break;
            }
            // Reducing first keeps the gcd on the smaller operand.
            g = if g.is_zero() { c.abs() } else { g.gcd(&(c % &g)) };
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Removes the factor `x^j` of highest `j`, returning `(j, p / x^j)`.
    pub fn strip_zero_root(&self) -> (usize, Self) {
        let j = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (j, Self::new(self.coeffs[j..].to_vec()))
    }

    /// A positive multiple of the remainder of `self` divided by `divisor`.
    ///
    /// Each elimination step scales by `|lc(divisor)|`, so the result has the
    /// sign pattern of the true remainder over the rationals.
    pub fn positive_pseudo_rem(&self, divisor: &Self) -> Self {
        let d = divisor.degree().expect("nonzero divisor");
        let lc = divisor.leading().unwrap();
        let lc_abs = lc.abs();
        let lc_sign = BigInt::from(sign_of(lc));
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < d {
                break;
            }
            let factor = r.leading().unwrap() * &lc_sign;
            let sub = divisor.scale(&factor).shift_up(dr - d);
            r = &r.scale(&lc_abs) - &sub;
        }
        r
    }

    /// Exact quotient in `Z[x]`, or `None` when `divisor` does not divide.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let d = divisor.degree()?;
        let lc = divisor.leading().unwrap();
        let mut r = self.clone();
        let Some(dr) = r.degree() else {
            return Some(Self::zero());
        };
        if dr < d {
            return None;
        }
        let mut q = vec![BigInt::zero(); dr - d + 1];
        while let Some(dr) = r.degree() {
            if dr < d {
                return None;
            }
            let (c, rem) = r.leading().unwrap().div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            r = &r - &divisor.scale(&c).shift_up(dr - d);
            q[dr - d] = c;
        }
        Some(Self::new(q))
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (a, b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        let (mut a, mut b) = (a, b);
        while !b.is_zero() {
            let r = a.positive_pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Primitive squarefree part: `p / gcd(p, p')`.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .exact_div(&g)
            .expect("gcd divides its argument")
            .primitive_part()
    }

    /// Yun decomposition `p = c · Π f_i^i` with squarefree, pairwise coprime
    /// primitive `f_i`. Entry `i - 1` holds `f_i`; trailing constant factors
    /// are dropped.
    pub fn squarefree_decomposition(&self) -> Vec<Self> {
        let p = self.primitive_part();
        if p.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let dp = p.derivative();
        let a0 = p.gcd(&dp);
        let mut b = p.exact_div(&a0).expect("gcd divides p");
        let c = dp.exact_div(&a0).expect("gcd divides p'");
        let mut d = &c - &b.derivative();
        let mut factors = Vec::new();
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let next_b = b.exact_div(&a).expect("gcd divides b");
            let c = d.exact_div(&a).expect("gcd divides d");
            d = &c - &next_b.derivative();
            factors.push(a);
            b = next_b;
        }
        while factors.last().is_some_and(|f| f.degree() == Some(0)) {
            factors.pop();
        }
        factors
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let mag = c.abs();
            let coef = if i > 0 && mag.is_one() {
                String::new()
            } else {
                mag.to_string()
            };
            match i {
                0 => write!(f, "{sep}{coef}")?,
                1 => write!(f, "{sep}{coef}x")?,
                _ => write!(f, "{sep}{coef}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// One step `F_{n-1,r} -> F_{n,r}` of
/// `F_n(x) = x[(r+1)F_{n-1}(x) + (1+x)F'_{n-1}(x)] + r F_{n-1}(x)`.
fn r_fubini_step(r: u32, prev: &IntPolynomial) -> IntPolynomial {
    let r = BigInt::from(r);
    let one_plus_x = IntPolynomial::from_i64(&[1, 1]);
    let inner = &prev.scale(&(&r + 1u32)) + &(&one_plus_x * &prev.derivative());
    &inner.shift_up(1) + &prev.scale(&r)
}

/// One step of `F_m(n,x) = (x+1)F_m(n-1,x) + (x^2+mx)F_m'(n-1,x)`.
fn whitney_step(m: u32, prev: &IntPolynomial) -> IntPolynomial {
    let one_plus_x = IntPolynomial::from_i64(&[1, 1]);
    let x2_mx = IntPolynomial::new(vec![BigInt::zero(), BigInt::from(m), BigInt::one()]);
    &(&one_plus_x * prev) + &(&x2_mx * &prev.derivative())
}

/// Successive Fubini-type polynomials of one family, starting at `n = 0`.
///
/// Stirling and r-Stirling families use the r-Fubini recurrence (with
/// `r = 0` for Stirling) and base `r!`; the Whitney family uses its own
/// recurrence with base `1`.
#[derive(Debug, Clone)]
pub struct FubiniPolynomials {
    family: TriangleFamily,
    current: Option<IntPolynomial>,
}

impl FubiniPolynomials {
    pub fn new(family: TriangleFamily) -> Self {
        Self {
            family,
            current: None,
        }
    }
}

impl Iterator for FubiniPolynomials {
    type Item = IntPolynomial;

    fn next(&mut self) -> Option<IntPolynomial> {
        let next = match (&self.current, self.family) {
            (None, TriangleFamily::Whitney { .. }) => IntPolynomial::constant(BigInt::one()),
            (None, TriangleFamily::Stirling) => IntPolynomial::constant(BigInt::one()),
            (None, TriangleFamily::RStirling { r }) => {
                IntPolynomial::constant(factorial(u64::from(r)))
            }
            (Some(prev), TriangleFamily::Whitney { m }) => whitney_step(m.get(), prev),
            (Some(prev), TriangleFamily::Stirling) => r_fubini_step(0, prev),
            (Some(prev), TriangleFamily::RStirling { r }) => r_fubini_step(r, prev),
        };
        self.current = Some(next.clone());
        Some(next)
    }
}

/// `F_{n,r}(x)` for `n = 0..=n_max`.
pub fn fubini_polynomials(family: TriangleFamily, n_max: usize) -> Vec<IntPolynomial> {
    FubiniPolynomials::new(family).take(n_max + 1).collect()
}

/// `F_{n,r}(x) = Σ_k (k+r)! S_r(n,k) x^k`, built by its recurrence.
pub fn r_fubini_poly(r: u32, n: usize) -> IntPolynomial {
    FubiniPolynomials::new(TriangleFamily::r_stirling(r))
        .nth(n)
        .expect("infinite iterator")
}

/// `F_m(n,x) = Σ_k k! W_m(n,k) x^k`, built by its recurrence.
pub fn whitney_fubini_poly(m: u32, n: usize) -> crate::Result<IntPolynomial> {
    let family = TriangleFamily::whitney(m)?;
    Ok(FubiniPolynomials::new(family)
        .nth(n)
        .expect("infinite iterator"))
}
