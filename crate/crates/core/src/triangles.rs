//! Stirling, r-Stirling and Whitney triangles and their ordered rows.
//!
//! All three families obey `T(n,k) = T(n-1,k-1) + w(k)·T(n-1,k)` with
//! `T(0,0) = 1`, differing only in the column weight `w(k)`:
//!
//! | family       | `w(k)`     |
//! |--------------|------------|
//! | Stirling     | `k`        |
//! | r-Stirling   | `k + r`    |
//! | Whitney (m)  | `m·k + 1`  |
//!
//! Rows are indexed from `k = 0`. The r-Stirling convention counts
//! partitions of an `(n+r)`-set into `k+r` blocks that keep `r`
//! distinguished elements apart, so `S_r(n,0) = r^n`.

use std::fmt;
use std::num::NonZeroU32;

use num_traits::Zero;

use crate::exact::{factorials_upto, BigInt};
use crate::poly::IntPolynomial;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleFamily {
    Stirling,
    RStirling { r: u32 },
    Whitney { m: NonZeroU32 },
}

impl TriangleFamily {
    pub fn r_stirling(r: u32) -> Self {
        Self::RStirling { r }
    }

    pub fn whitney(m: u32) -> Result<Self> {
        NonZeroU32::new(m)
            .map(|m| Self::Whitney { m })
            .ok_or_else(|| Error::InvalidParameter("Whitney order m must be at least 1".into()))
    }

    /// Column weight `w(k)` in the triangle recurrence.
    pub fn weight(self, k: usize) -> u64 {
        let k = k as u64;
        match self {
            Self::Stirling => k,
            Self::RStirling { r } => k + u64::from(r),
            Self::Whitney { m } => u64::from(m.get()) * k + 1,
        }
    }

    /// Factorial offset of the ordered variant: `a_k = (k + shift)!·T(n,k)`.
    pub fn ordered_shift(self) -> usize {
        match self {
            Self::RStirling { r } => r as usize,
            _ => 0,
        }
    }
}

impl fmt::Display for TriangleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Stirling => write!(f, "stirling"),
            Self::RStirling { r } => write!(f, "r-stirling(r={r})"),
            Self::Whitney { m } => write!(f, "whitney(m={m})"),
        }
    }
}

/// All rows `0..=n_max` of one family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    family: TriangleFamily,
    rows: Vec<Vec<BigInt>>,
}

impl Triangle {
    /// Wraps externally produced rows. Used to feed alternative builders
    /// through the verification suites.
    pub fn from_rows(family: TriangleFamily, rows: Vec<Vec<BigInt>>) -> Self {
        Self { family, rows }
    }

    pub fn family(&self) -> TriangleFamily {
        self.family
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// `T(n,k)`, zero outside the triangle.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }
}

/// Triangle rows built with an arbitrary column weight.
pub fn build_with_weight(
    family: TriangleFamily,
    n_max: usize,
    weight: impl Fn(usize) -> u64,
) -> Triangle {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![BigInt::from(1)]);
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let mut v = if k > 0 { prev[k - 1].clone() } else { BigInt::zero() };
                if k < n {
                    v += &prev[k] * weight(k);
                }
                v
            })
            .collect();
        rows.push(row);
    }
    Triangle { family, rows }
}

pub fn build_triangle(family: TriangleFamily, n_max: usize) -> Triangle {
    build_with_weight(family, n_max, |k| family.weight(k))
}

/// Row `n` with each entry multiplied by `(k + shift)!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedRow {
    pub family: TriangleFamily,
    pub n: usize,
    pub coefficients: Vec<BigInt>,
}

impl OrderedRow {
    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.coefficients.clone())
    }
}

pub fn ordered_row(triangle: &Triangle, n: usize) -> Result<OrderedRow> {
    let row = triangle.row(n).ok_or(Error::RowOutOfRange {
        n,
        n_max: triangle.n_max(),
    })?;
    let shift = triangle.family().ordered_shift();
    let fact = factorials_upto(n + shift);
    let coefficients = row
        .iter()
        .enumerate()
        .map(|(k, t)| t * &fact[k + shift])
        .collect();
    Ok(OrderedRow {
        family: triangle.family(),
        n,
        coefficients,
    })
}

/// Outcome of an entrywise identity scan: the first `(n, k)` that differs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityCheck {
    pub first_failure: Option<(usize, usize)>,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Compares `W_1(n,k)` against `S(n+1,k+1)` for every row of `whitney1`.
/// `stirling` must reach at least one row further.
pub fn compare_w1_shift(whitney1: &Triangle, stirling: &Triangle) -> IdentityCheck {
    for (n, row) in whitney1.rows().iter().enumerate() {
        for (k, w) in row.iter().enumerate() {
            if *w != stirling.get(n + 1, k + 1) {
                return IdentityCheck {
                    first_failure: Some((n, k)),
                };
            }
        }
    }
    IdentityCheck { first_failure: None }
}

/// Compares two triangles entry by entry over the rows of `left`.
pub fn compare_rows(left: &Triangle, right: &Triangle) -> IdentityCheck {
    for (n, row) in left.rows().iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            if *v != right.get(n, k) {
                return IdentityCheck {
                    first_failure: Some((n, k)),
                };
            }
        }
    }
    IdentityCheck { first_failure: None }
}

/// `W_1(n,k) = S(n+1,k+1)` for `0 ≤ k ≤ n ≤ n_max`.
pub fn identity_check_w1(n_max: usize) -> IdentityCheck {
    let whitney1 = build_triangle(TriangleFamily::whitney(1).expect("m = 1"), n_max);
    let stirling = build_triangle(TriangleFamily::Stirling, n_max + 1);
    compare_w1_shift(&whitney1, &stirling)
}

/// `S_0(n,k) = S(n,k)` for every row up to `n_max`.
pub fn identity_check_r0(n_max: usize) -> IdentityCheck {
    compare_rows(
        &build_triangle(TriangleFamily::r_stirling(0), n_max),
        &build_triangle(TriangleFamily::Stirling, n_max),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn known_rows() {
        let s = build_triangle(TriangleFamily::Stirling, 4);
        assert_eq!(s.row(4).unwrap(), ints(&[0, 1, 7, 6, 1]).as_slice());
        let r1 = build_triangle(TriangleFamily::r_stirling(1), 2);
        assert_eq!(r1.row(2).unwrap(), ints(&[1, 3, 1]).as_slice());
        let w2 = build_triangle(TriangleFamily::whitney(2).unwrap(), 3);
        assert_eq!(w2.row(3).unwrap(), ints(&[1, 13, 9, 1]).as_slice());
    }

    #[test]
    fn triangle_shape() {
        let t = build_triangle(TriangleFamily::whitney(3).unwrap(), 12);
        assert_eq!(t.get(0, 0), BigInt::from(1));
        for (n, row) in t.rows().iter().enumerate() {
            assert_eq!(row.len(), n + 1);
            assert!(row.iter().all(|v| *v >= BigInt::zero()));
        }
        assert_eq!(t.get(3, 7), BigInt::zero());
        assert_eq!(t.get(40, 0), BigInt::zero());
    }

    #[test]
    fn r_stirling_first_column_is_power_of_r() {
        let t = build_triangle(TriangleFamily::r_stirling(3), 10);
        for n in 0..=10u32 {
            assert_eq!(t.get(n as usize, 0), BigInt::from(3u64.pow(n)));
        }
    }

    #[test]
    fn ordered_rows() {
        let s = build_triangle(TriangleFamily::Stirling, 4);
        assert_eq!(
            ordered_row(&s, 4).unwrap().coefficients,
            ints(&[0, 1, 14, 36, 24])
        );
        let r1 = build_triangle(TriangleFamily::r_stirling(1), 2);
        assert_eq!(ordered_row(&r1, 2).unwrap().coefficients, ints(&[1, 6, 6]));
        let w2 = build_triangle(TriangleFamily::whitney(2).unwrap(), 3);
        assert_eq!(
            ordered_row(&w2, 3).unwrap().coefficients,
            ints(&[1, 13, 18, 6])
        );
        assert_eq!(
            ordered_row(&w2, 4),
            Err(Error::RowOutOfRange { n: 4, n_max: 3 })
        );
    }

    #[test]
    fn leading_ordered_coefficient_is_positive() {
        for family in [
            TriangleFamily::Stirling,
            TriangleFamily::r_stirling(2),
            TriangleFamily::whitney(2).unwrap(),
        ] {
            let t = build_triangle(family, 15);
            for n in 0..=15 {
                let row = ordered_row(&t, n).unwrap();
                assert_eq!(row.coefficients.len(), n + 1);
                assert!(row.coefficients[n] > BigInt::zero());
            }
        }
    }

    #[test]
    fn structural_identities() {
        assert!(identity_check_w1(0).holds());
        assert!(identity_check_w1(2).holds());
        assert!(identity_check_w1(60).holds());
        assert!(identity_check_r0(0).holds());
        assert!(identity_check_r0(4).holds());
        assert!(identity_check_r0(60).holds());
    }

    #[test]
    fn identity_scan_reports_first_mismatch() {
        let family = TriangleFamily::whitney(1).unwrap();
        let corrupted = build_with_weight(family, 5, |k| 2 * (k as u64) + 1);
        let s = build_triangle(TriangleFamily::Stirling, 6);
        let check = compare_w1_shift(&corrupted, &s);
        assert_eq!(check.first_failure, Some((2, 1)));
        assert!(!check.holds());
    }

    #[test]
    fn zero_whitney_order_is_rejected() {
        assert!(matches!(
            TriangleFamily::whitney(0),
            Err(Error::InvalidParameter(_))
        ));
    }
}
