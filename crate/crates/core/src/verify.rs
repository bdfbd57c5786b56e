//! Oracle-equivalence and identity suites.
//!
//! Each suite checks one family of exact statements (EGF oracle against the
//! recurrences, structural identities, Darroch bounds, Sturm certificates and
//! the Wegner scan). Triangles are obtained through a caller-supplied builder
//! so that a deliberately broken recurrence can be run through the same
//! suites.

use std::fmt;

use crate::exact::{egf_r_fubini, egf_whitney_fubini, BigInt};
use crate::modes::{darroch_localize, darroch_mean_closed_form, wegner_check};
use crate::poly::{fubini_polynomials, IntPolynomial};
use crate::sturm::{certify_real_rooted_in, RootWindow};
use crate::triangles::{
    build_triangle, compare_rows, compare_w1_shift, ordered_row, Triangle, TriangleFamily,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Depth {
    Quick,
    Full,
}

/// Row limits per suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub oracle_n: usize,
    pub oracle_params: u32,
    pub identity_n: usize,
    pub shift_n: usize,
    pub derivative_n: usize,
    pub derivative_params: u32,
    pub darroch_n: usize,
    pub darroch_params: u32,
    pub certify_n: usize,
    pub certify_params: u32,
    pub wegner_n: usize,
}

impl Depth {
    pub fn limits(self) -> Limits {
        match self {
            Depth::Quick => Limits {
                oracle_n: 20,
                oracle_params: 3,
                identity_n: 30,
                shift_n: 30,
                derivative_n: 30,
                derivative_params: 3,
                darroch_n: 30,
                darroch_params: 3,
                certify_n: 12,
                certify_params: 2,
                wegner_n: 30,
            },
            Depth::Full => Limits {
                oracle_n: 40,
                oracle_params: 5,
                identity_n: 60,
                shift_n: 40,
                derivative_n: 200,
                derivative_params: 5,
                darroch_n: 300,
                darroch_params: 5,
                certify_n: 60,
                certify_params: 3,
                wegner_n: 300,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

fn outcome(name: &'static str, failure: Option<String>, ok: String) -> SuiteResult {
    match failure {
        None => SuiteResult {
            name,
            passed: true,
            detail: ok,
        },
        Some(detail) => SuiteResult {
            name,
            passed: false,
            detail,
        },
    }
}

/// `Stirling`, `RStirling(0..=max_r)` and `Whitney(1..=max_m)`.
pub fn families(max_r: u32, max_m: u32) -> Vec<TriangleFamily> {
    let mut out = vec![TriangleFamily::Stirling];
    out.extend((0..=max_r).map(TriangleFamily::r_stirling));
    out.extend((1..=max_m).map(|m| TriangleFamily::whitney(m).expect("m >= 1")));
    out
}

fn egf_values(family: TriangleFamily, n_max: usize) -> crate::Result<Vec<BigInt>> {
    match family {
        TriangleFamily::Stirling => egf_r_fubini(0, n_max),
        TriangleFamily::RStirling { r } => egf_r_fubini(r, n_max),
        TriangleFamily::Whitney { m } => egf_whitney_fubini(m.get(), n_max),
    }
}

/// EGF oracle against polynomial sums, and polynomial coefficients against
/// ordered triangle rows.
pub fn oracle_suite(
    limits: &Limits,
    build: &dyn Fn(TriangleFamily, usize) -> Triangle,
) -> SuiteResult {
    let n_max = limits.oracle_n;
    let mut failure = None;
    'families: for family in families(limits.oracle_params, limits.oracle_params) {
        let egf = match egf_values(family, n_max) {
            Ok(v) => v,
            Err(e) => {
                failure = Some(format!("{family}: EGF oracle error: {e}"));
                break;
            }
        };
        let polys = fubini_polynomials(family, n_max);
        let triangle = build(family, n_max);
        for n in 0..=n_max {
            if polys[n].eval_at_one() != egf[n] {
                failure = Some(format!("{family}: F({n}) differs from EGF coefficient"));
                break 'families;
            }
            let row = ordered_row(&triangle, n).expect("row in range");
            if row.to_polynomial() != polys[n] {
                failure = Some(format!(
                    "{family}: ordered row {n} differs from polynomial coefficients"
                ));
                break 'families;
            }
        }
    }
    outcome(
        "egf-oracle",
        failure,
        format!(
            "EGF, recurrence and triangles agree for n <= {n_max}, r, m <= {}",
            limits.oracle_params
        ),
    )
}

pub fn w1_stirling_suite(
    limits: &Limits,
    build: &dyn Fn(TriangleFamily, usize) -> Triangle,
) -> SuiteResult {
    let n = limits.identity_n;
    let whitney = build(TriangleFamily::whitney(1).expect("m = 1"), n);
    let stirling = build(TriangleFamily::Stirling, n + 1);
    let check = compare_w1_shift(&whitney, &stirling);
    outcome(
        "w1-stirling-shift",
        check
            .first_failure
            .map(|(n, k)| format!("W_1({n},{k}) != S({},{})", n + 1, k + 1)),
        format!("W_1(n,k) = S(n+1,k+1) for n <= {n}"),
    )
}

pub fn r0_reduction_suite(
    limits: &Limits,
    build: &dyn Fn(TriangleFamily, usize) -> Triangle,
) -> SuiteResult {
    let n = limits.identity_n;
    let check = compare_rows(
        &build(TriangleFamily::r_stirling(0), n),
        &build(TriangleFamily::Stirling, n),
    );
    outcome(
        "r0-reduction",
        check
            .first_failure
            .map(|(n, k)| format!("S_0({n},{k}) != S({n},{k})")),
        format!("S_0(n,k) = S(n,k) for n <= {n}"),
    )
}

pub fn shift_identity_suite(limits: &Limits) -> SuiteResult {
    let n = limits.shift_n;
    let r1 = fubini_polynomials(TriangleFamily::r_stirling(1), n);
    let r0 = fubini_polynomials(TriangleFamily::r_stirling(0), n + 1);
    let failure = (0..=n)
        .find(|&k| r1[k].eval_at_one() != r0[k + 1].eval_at_one())
        .map(|k| format!("F_{{{k},1}} != F_{{{},0}}", k + 1));
    outcome(
        "shift-identity",
        failure,
        format!("F_{{n,1}} = F_{{n+1,0}} for n <= {n}"),
    )
}

/// `2 F'_{n,r}(1) = F_{n+1,r} - (2r+1) F_{n,r}` and
/// `(m+1) F_m'(n,1) = F_m(n+1) - 2 F_m(n)`.
pub fn derivative_suite(limits: &Limits) -> SuiteResult {
    let n_max = limits.derivative_n;
    let p = limits.derivative_params;
    let mut failure = None;
    'outer: for family in families(p, p) {
        let polys = fubini_polynomials(family, n_max + 1);
        for n in 0..=n_max {
            let slope = polys[n].derivative().eval_at_one();
            let (value, next) = (polys[n].eval_at_one(), polys[n + 1].eval_at_one());
            let holds = match family {
                TriangleFamily::Stirling => slope * 2u32 == next - value,
                TriangleFamily::RStirling { r } => {
                    slope * 2u32 == next - value * (2 * u64::from(r) + 1)
                }
                TriangleFamily::Whitney { m } => {
                    slope * (u64::from(m.get()) + 1) == next - value * 2u32
                }
            };
            if !holds {
                failure = Some(format!("{family}: identity fails at n = {n}"));
                break 'outer;
            }
        }
    }
    outcome(
        "derivative-identities",
        failure,
        format!("x = 1 derivative identities hold for n <= {n_max}, r, m <= {p}"),
    )
}

/// Strict log-concavity of every ordered row, Darroch's bound, and the
/// closed-form mean against `p'(1)/p(1)`.
pub fn darroch_suite(limits: &Limits) -> SuiteResult {
    let n_max = limits.darroch_n;
    let p = limits.darroch_params;
    let mut failure = None;
    let mut plateaus = 0usize;
    'outer: for family in families(p, p) {
        let polys = fubini_polynomials(family, n_max + 1);
        for n in 0..=n_max {
            let report = match darroch_localize(&polys[n]) {
                Ok(r) => r,
                Err(e) => {
                    failure = Some(format!("{family}, n = {n}: {e}"));
                    break 'outer;
                }
            };
            if report.plateau_length > 1 {
                plateaus += 1;
            }
            let closed = darroch_mean_closed_form(
                family,
                &polys[n].eval_at_one(),
                &polys[n + 1].eval_at_one(),
            );
            let problem = if !report.slc {
                Some("row is not strictly log-concave")
            } else if !report.darroch_bound_holds {
                Some("|mode - mean| >= 1")
            } else if closed.as_ref() != Ok(&report.darroch_mean) {
                Some("closed-form mean differs from p'(1)/p(1)")
            } else {
                None
            };
            if let Some(problem) = problem {
                failure = Some(format!("{family}, n = {n}: {problem}"));
                break 'outer;
            }
        }
    }
    outcome(
        "slc-darroch",
        failure,
        format!(
            "ordered rows SLC and within 1 of the Darroch mean for n <= {n_max}, r, m <= {p} \
             ({plateaus} tied maxima)"
        ),
    )
}

/// Expected multiplicity of the root `x = 0` in the family's `n`-th
/// polynomial.
pub fn expected_zero_root(family: TriangleFamily, n: usize) -> usize {
    match family {
        TriangleFamily::Stirling | TriangleFamily::RStirling { r: 0 } if n > 0 => 1,
        _ => 0,
    }
}

/// Window holding every root of the family's Fubini polynomials: `(-1, 0]`
/// for the r-Stirling families and `[-m, 0]` for Whitney.
pub fn root_window(family: TriangleFamily) -> RootWindow {
    match family {
        TriangleFamily::Whitney { m } => RootWindow::closed_to(m.get()),
        _ => RootWindow::unit(),
    }
}

pub fn certify_polynomial(family: TriangleFamily, n: usize, poly: &IntPolynomial) -> bool {
    certify_real_rooted_in(poly, &root_window(family))
        .map(|c| c.certified && c.zero_root_multiplicity == expected_zero_root(family, n))
        .unwrap_or(false)
}

pub fn certification_suite(limits: &Limits) -> SuiteResult {
    let n_max = limits.certify_n;
    let p = limits.certify_params;
    let mut failure = None;
    'outer: for family in families(p, p) {
        for (n, poly) in fubini_polynomials(family, n_max).iter().enumerate().skip(1) {
            if !certify_polynomial(family, n, poly) {
                failure = Some(format!("{family}: certificate fails at n = {n}"));
                break 'outer;
            }
        }
    }
    outcome(
        "real-rootedness",
        failure,
        format!(
            "all roots real, in (-1, 0] (r-Stirling) or [-m, 0] (Whitney) for 1 <= n <= {n_max}, \
             r, m <= {p}"
        ),
    )
}

pub fn wegner_suite(limits: &Limits) -> SuiteResult {
    let n = limits.wegner_n;
    match wegner_check(n) {
        Ok(ties) if ties.is_empty() => outcome(
            "wegner",
            None,
            format!("no counterexample <= {n}"),
        ),
        Ok(ties) => outcome("wegner", Some(format!("tied maxima at n in {ties:?}")), String::new()),
        Err(e) => outcome("wegner", Some(e.to_string()), String::new()),
    }
}

/// Runs every suite with the given triangle builder.
pub fn run_with(depth: Depth, build: &dyn Fn(TriangleFamily, usize) -> Triangle) -> Vec<SuiteResult> {
    let limits = depth.limits();
    vec![
        oracle_suite(&limits, build),
        w1_stirling_suite(&limits, build),
        r0_reduction_suite(&limits, build),
        shift_identity_suite(&limits),
        derivative_suite(&limits),
        darroch_suite(&limits),
        certification_suite(&limits),
        wegner_suite(&limits),
    ]
}

pub fn run(depth: Depth) -> Vec<SuiteResult> {
    run_with(depth, &build_triangle)
}
