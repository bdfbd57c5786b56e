//! Modes, strict log-concavity and Darroch's mode bound.
//!
//! For a polynomial `p` with only real zeros and `p(1) > 0`, the smallest
//! mode `M` of its coefficient sequence satisfies `|M - p'(1)/p(1)| < 1`.
//! Every comparison here is made in exact integer or rational arithmetic.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::exact::BigInt;
use crate::poly::IntPolynomial;
use crate::triangles::{build_triangle, TriangleFamily};
use crate::{Error, Result};

/// Smallest index attaining the maximum, and how many consecutive indices
/// from there attain it.
pub fn mode_of(seq: &[BigInt]) -> Result<(usize, usize)> {
    let max = seq.iter().max().ok_or(Error::EmptySequence)?;
    if !max.is_positive() {
        return Err(Error::AllZero);
    }
    let mode = seq.iter().position(|v| v == max).unwrap();
    let plateau = seq[mode..].iter().take_while(|v| *v == max).count();
    Ok((mode, plateau))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlcVerdict {
    pub holds: bool,
    /// Index where the positive support breaks or `a_k^2 > a_{k-1} a_{k+1}`
    /// fails.
    pub first_violation: Option<usize>,
}

/// Strict log-concavity over the positive support, which must be contiguous.
/// A sequence without a positive entry is not log-concave.
pub fn is_strictly_log_concave(seq: &[BigInt]) -> SlcVerdict {
    let fail = |k| SlcVerdict {
        holds: false,
        first_violation: Some(k),
    };
    if let Some(k) = seq.iter().position(Signed::is_negative) {
        return fail(k);
    }
    let Some(start) = seq.iter().position(Signed::is_positive) else {
        return SlcVerdict {
            holds: false,
            first_violation: None,
        };
    };
    let end = seq.iter().rposition(Signed::is_positive).unwrap();
    if let Some(gap) = seq[start..=end].iter().position(Zero::is_zero) {
        return fail(start + gap);
    }
    for k in start + 1..end {
        if &seq[k] * &seq[k] <= &seq[k - 1] * &seq[k + 1] {
            return fail(k);
        }
    }
    SlcVerdict {
        holds: true,
        first_violation: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModeReport {
    pub mode_index: usize,
    pub plateau_length: usize,
    pub slc: bool,
    /// `p'(1) / p(1)`.
    pub darroch_mean: BigRational,
    /// `|mode_index - darroch_mean| < 1`.
    pub darroch_bound_holds: bool,
}

/// `|k - mean| < 1`, decided by cross-multiplication.
pub fn within_one(k: usize, mean: &BigRational) -> bool {
    let diff = BigInt::from(k) * mean.denom() - mean.numer();
    diff.abs() < *mean.denom()
}

/// Mode report for the coefficient sequence of `p`.
///
/// Real-rootedness is the caller's responsibility. Negative coefficients and
/// `p(1) <= 0` are rejected.
pub fn darroch_localize(p: &IntPolynomial) -> Result<ModeReport> {
    if let Some(i) = p.coeffs().iter().position(Signed::is_negative) {
        return Err(Error::NegativeCoefficient(i));
    }
    let at_one = p.eval_at_one();
    if !at_one.is_positive() {
        return Err(Error::NonPositiveAtOne);
    }
    let mean = BigRational::new(p.derivative().eval_at_one(), at_one);
    let (mode_index, plateau_length) = mode_of(p.coeffs())?;
    Ok(ModeReport {
        mode_index,
        plateau_length,
        slc: is_strictly_log_concave(p.coeffs()).holds,
        darroch_bound_holds: within_one(mode_index, &mean),
        darroch_mean: mean,
    })
}

/// `(F_{n+1,r} - (2r+1) F_{n,r}) / (2 F_{n,r})`, the Darroch mean of
/// `F_{n,r}(x)` obtained from the values at `x = 1` alone.
pub fn darroch_mean_r_fubini(r: u32, value: &BigInt, next: &BigInt) -> Result<BigRational> {
    if value.is_zero() {
        return Err(Error::NonPositiveAtOne);
    }
    let numer = next - value * (2 * u64::from(r) + 1);
    Ok(BigRational::new(numer, value * 2u32))
}

/// `(F_m(n+1) - 2 F_m(n)) / ((m+1) F_m(n))`, from the Whitney recurrence at
/// `x = 1`.
pub fn darroch_mean_whitney(m: u32, value: &BigInt, next: &BigInt) -> Result<BigRational> {
    if value.is_zero() {
        return Err(Error::NonPositiveAtOne);
    }
    let numer = next - value * 2u32;
    Ok(BigRational::new(numer, value * (u64::from(m) + 1)))
}

/// Closed-form Darroch mean for row `n` of a family's Fubini polynomial.
pub fn darroch_mean_closed_form(
    family: TriangleFamily,
    value: &BigInt,
    next: &BigInt,
) -> Result<BigRational> {
    match family {
        TriangleFamily::Stirling => darroch_mean_r_fubini(0, value, next),
        TriangleFamily::RStirling { r } => darroch_mean_r_fubini(r, value, next),
        TriangleFamily::Whitney { m } => darroch_mean_whitney(m.get(), value, next),
    }
}

/// Rows `3..=n_max` of `S(n, ·)` whose maximum is attained more than once.
pub fn wegner_check(n_max: usize) -> Result<Vec<usize>> {
    if n_max < 3 {
        return Err(Error::InvalidParameter("Wegner scan needs n_max >= 3".into()));
    }
    let t = build_triangle(TriangleFamily::Stirling, n_max);
    let mut out = Vec::new();
    for n in 3..=n_max {
        let (_, plateau) = mode_of(t.row(n).unwrap())?;
        if plateau != 1 {
            out.push(n);
        }
    }
    Ok(out)
}
