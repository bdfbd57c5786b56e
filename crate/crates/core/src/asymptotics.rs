//! Asymptotic value and mode laws, compared against exact values.
//!
//! Value laws, in log space:
//!
//! * ordered r-Stirling: `F_{n,r} ~ n! n^r / (2 log^{r+1}(2) log^n(2))`
//! * ordered Whitney:    `F_m(n) ~ m (1+m)^{1/m-1} / log(m+1) · m^n n! / log^n(m+1)`
//!
//! Mode laws: `n / (2 log 2)` for every ordered r-Stirling family,
//! `m n / ((m+1) log(m+1))` for ordered Whitney and `n / log n` for the
//! classical Stirling row.
//!
//! Exact values enter through [`log_bigint`], which keeps the comparison
//! error far below the asymptotic gaps being measured.

use std::f64::consts::LN_2;

use num_traits::{Signed, ToPrimitive};

use crate::exact::{factorial, BigInt};
use crate::modes::mode_of;
use crate::poly::FubiniPolynomials;
use crate::triangles::{build_triangle, TriangleFamily};
use crate::{Error, Result};

/// Relative accuracy promised by [`log_bigint`].
pub const LOG_RELATIVE_ERROR: f64 = 2.842170943040401e-14; // 2^-45

/// Natural logarithm of a positive big integer from its bit length and top
/// 64 bits.
pub fn log_bigint(x: &BigInt) -> Result<f64> {
    if !x.is_positive() {
        return Err(Error::NonPositiveLog);
    }
    let bits = x.bits();
    if bits <= 64 {
        return Ok((x.to_u64().unwrap() as f64).ln());
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().unwrap() as f64;
    Ok(top.ln() + shift as f64 * LN_2)
}

/// `log F ≈ log n! + power·log n + n·growth + constant`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValueLaw {
    pub power: u32,
    pub growth: f64,
    pub constant: f64,
}

impl ValueLaw {
    pub fn r_fubini(r: u32) -> Self {
        let lnln2 = LN_2.ln();
        Self {
            power: r,
            growth: -lnln2,
            constant: -LN_2 - f64::from(r + 1) * lnln2,
        }
    }

    pub fn whitney(m: u32) -> Self {
        let m = f64::from(m);
        let log_m1 = (m + 1.0).ln();
        Self {
            power: 0,
            growth: m.ln() - log_m1.ln(),
            constant: m.ln() + (1.0 / m - 1.0) * log_m1 - log_m1.ln(),
        }
    }

    pub fn predicted_log(&self, n: u64) -> f64 {
        let log_fact = log_bigint(&factorial(n)).expect("n! > 0");
        log_fact + f64::from(self.power) * (n as f64).ln() + n as f64 * self.growth + self.constant
    }
}

/// `log(n! / (2 log^{n+1} 2))`, the `r = 0` value law written on its own.
pub fn velleman_call_log(n: u64) -> f64 {
    log_bigint(&factorial(n)).expect("n! > 0") - LN_2 - (n as f64 + 1.0) * LN_2.ln()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModeLaw {
    /// `mode ≈ coefficient · n`.
    Linear { coefficient: f64 },
    /// `mode ≈ n / log n`.
    NOverLogN,
}

impl ModeLaw {
    pub fn ordered_r_stirling() -> Self {
        Self::Linear {
            coefficient: 1.0 / (2.0 * LN_2),
        }
    }

    pub fn ordered_whitney(m: u32) -> Self {
        let m = f64::from(m);
        Self::Linear {
            coefficient: m / ((m + 1.0) * (m + 1.0).ln()),
        }
    }

    pub fn predict(&self, n: u64) -> f64 {
        let n = n as f64;
        match self {
            Self::Linear { coefficient } => coefficient * n,
            Self::NOverLogN => n / n.ln(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    /// Ordered rows of a triangle family; Stirling is the `r = 0` case.
    Ordered(TriangleFamily),
    /// Unordered Stirling rows `S(n, ·)`; exact values are Bell numbers,
    /// for which no value law is checked.
    ClassicalStirling,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticModel {
    pub kind: ModelKind,
    pub value_law: Option<ValueLaw>,
    pub mode_law: ModeLaw,
}

impl AsymptoticModel {
    pub fn ordered(family: TriangleFamily) -> Self {
        let (value_law, mode_law) = match family {
            TriangleFamily::Stirling => (ValueLaw::r_fubini(0), ModeLaw::ordered_r_stirling()),
            TriangleFamily::RStirling { r } => {
                (ValueLaw::r_fubini(r), ModeLaw::ordered_r_stirling())
            }
            TriangleFamily::Whitney { m } => {
                (ValueLaw::whitney(m.get()), ModeLaw::ordered_whitney(m.get()))
            }
        };
        Self {
            kind: ModelKind::Ordered(family),
            value_law: Some(value_law),
            mode_law,
        }
    }

    pub fn classical_stirling() -> Self {
        Self {
            kind: ModelKind::ClassicalStirling,
            value_law: None,
            mode_law: ModeLaw::NOverLogN,
        }
    }

    pub fn predicted_log_value(&self, n: u64) -> Option<f64> {
        self.value_law.map(|law| law.predicted_log(n))
    }

    pub fn predicted_mode(&self, n: u64) -> f64 {
        self.mode_law.predict(n)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub exact_log: f64,
    pub predicted_log: Option<f64>,
    /// `exp(exact_log - predicted_log)`.
    pub value_ratio: Option<f64>,
    pub exact_mode: usize,
    pub predicted_mode: f64,
    pub mode_ratio: f64,
}

impl ConvergenceRow {
    /// Bound on the float error of `exact_log - predicted_log`.
    pub fn log_resolution(&self) -> f64 {
        let predicted = self.predicted_log.unwrap_or(0.0);
        4.0 * LOG_RELATIVE_ERROR * (self.exact_log.abs() + predicted.abs())
    }

    /// `|log(value_ratio)|`, the log-space deviation from the law.
    pub fn log_deviation(&self) -> Option<f64> {
        self.predicted_log.map(|p| (self.exact_log - p).abs())
    }
}

/// How the value deviation evolves between two rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Approach {
    Shrinks,
    /// Both deviations are below the float resolution of their rows, so a
    /// double-precision comparison cannot order them.
    BelowResolution,
    Grows,
}

pub fn compare_approach(earlier: &ConvergenceRow, later: &ConvergenceRow) -> Option<Approach> {
    let (a, b) = (earlier.log_deviation()?, later.log_deviation()?);
    let unresolved = a <= earlier.log_resolution() && b <= later.log_resolution();
    Some(if unresolved {
        Approach::BelowResolution
    } else if b < a {
        Approach::Shrinks
    } else {
        Approach::Grows
    })
}

struct ExactInput {
    n: usize,
    value: BigInt,
    coefficients: Vec<BigInt>,
}

fn exact_inputs(kind: ModelKind, grid: &[usize]) -> Vec<ExactInput> {
    let Some(&n_last) = grid.last() else {
        return Vec::new();
    };
    match kind {
        ModelKind::Ordered(family) => {
            let mut wanted = grid.iter().peekable();
            let mut out = Vec::with_capacity(grid.len());
            for (n, poly) in FubiniPolynomials::new(family).take(n_last + 1).enumerate() {
                while wanted.next_if(|&&g| g == n).is_some() {
                    out.push(ExactInput {
                        n,
                        value: poly.eval_at_one(),
                        coefficients: poly.coeffs().to_vec(),
                    });
                }
            }
            out
        }
        ModelKind::ClassicalStirling => {
            let t = build_triangle(TriangleFamily::Stirling, n_last);
            grid.iter()
                .map(|&n| {
                    let row = t.row(n).unwrap().to_vec();
                    ExactInput {
                        n,
                        value: row.iter().sum(),
                        coefficients: row,
                    }
                })
                .collect()
        }
    }
}

fn row_for(model: &AsymptoticModel, input: &ExactInput) -> Result<ConvergenceRow> {
    let n = input.n as u64;
    let exact_log = log_bigint(&input.value)?;
    let predicted_log = model.predicted_log_value(n);
    let (exact_mode, _) = mode_of(&input.coefficients)?;
    let predicted_mode = model.predicted_mode(n);
    Ok(ConvergenceRow {
        n: input.n,
        exact_log,
        predicted_log,
        value_ratio: predicted_log.map(|p| (exact_log - p).exp()),
        exact_mode,
        predicted_mode,
        mode_ratio: exact_mode as f64 / predicted_mode,
    })
}

/// One row per grid point, in grid order.
///
/// Exact polynomials are generated sequentially; the per-row float work is
/// spread over up to `threads` workers (`0` runs inline). Output is
/// independent of `threads`.
pub fn convergence_table(
    model: &AsymptoticModel,
    grid: &[usize],
    threads: usize,
) -> Result<Vec<ConvergenceRow>> {
    if let Some(&bad) = grid.iter().find(|&&n| n < 2) {
        return Err(Error::InvalidGrid(format!("grid points must be >= 2, got {bad}")));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidGrid("grid must be strictly ascending".into()));
    }
    let inputs = exact_inputs(model.kind, grid);
    map_rows(model, &inputs, threads)
}

#[cfg(feature = "parallel")]
fn map_rows(
    model: &AsymptoticModel,
    inputs: &[ExactInput],
    threads: usize,
) -> Result<Vec<ConvergenceRow>> {
    use rayon::prelude::*;
    if threads == 0 {
        return inputs.iter().map(|i| row_for(model, i)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    pool.install(|| inputs.par_iter().map(|i| row_for(model, i)).collect())
}

#[cfg(not(feature = "parallel"))]
fn map_rows(
    model: &AsymptoticModel,
    inputs: &[ExactInput],
    _threads: usize,
) -> Result<Vec<ConvergenceRow>> {
    inputs.iter().map(|i| row_for(model, i)).collect()
}

/// Grid used when none is given.
pub const DEFAULT_GRID: [usize; 6] = [10, 25, 50, 100, 200, 400];
