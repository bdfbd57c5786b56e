//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export takes plain scalars and returns a JSON string, so the page
//! needs no generated glue types. The `*_json` functions hold the logic and
//! are what the native tests exercise.

use num_traits::ToPrimitive;
use ordmode::asymptotics::{convergence_table, log_bigint, AsymptoticModel};
use ordmode::modes::darroch_localize;
use ordmode::poly::fubini_polynomials;
use ordmode::sturm::certify_real_rooted_in;
use ordmode::triangles::{build_triangle, ordered_row, TriangleFamily};
use ordmode::verify::{expected_zero_root, root_window};
use ordmode::{BigInt, BigRational};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

pub const MAX_ROW: usize = 400;
pub const MAX_CERTIFIED_ROW: usize = 80;
pub const MAX_TRIANGLE: usize = 40;
pub const MAX_GRID_POINT: usize = 1000;

/// `name` is `stirling`, `r-stirling` or `whitney`; `param` is r or m and is
/// ignored for `stirling`.
pub fn parse_family(name: &str, param: u32) -> Result<TriangleFamily, String> {
    match name {
        "stirling" => Ok(TriangleFamily::Stirling),
        "r-stirling" => Ok(TriangleFamily::r_stirling(param)),
        "whitney" => TriangleFamily::whitney(param).map_err(|e| e.to_string()),
        other => Err(format!("unknown family {other:?}")),
    }
}

fn log10(x: &BigInt) -> Value {
    log_bigint(x).map_or(Value::Null, |l| json!(l / std::f64::consts::LN_10))
}

fn rational(q: &BigRational) -> Value {
    json!(format!("{}/{}", q.numer(), q.denom()))
}

/// Ordered row `n` with its mode, Darroch mean and, for small `n`, a Sturm
/// certificate of real-rootedness.
pub fn row_report_json(family: &str, param: u32, n: usize) -> Result<String, String> {
    let family = parse_family(family, param)?;
    if n > MAX_ROW {
        return Err(format!("n must be at most {MAX_ROW}"));
    }
    let poly = fubini_polynomials(family, n).pop().unwrap();
    let report = darroch_localize(&poly).map_err(|e| e.to_string())?;
    let certificate = (1..=MAX_CERTIFIED_ROW).contains(&n).then(|| {
        let window = root_window(family);
        let cert = certify_real_rooted_in(&poly, &window).expect("nonzero polynomial");
        json!({
            "window": window.to_string(),
            "degree": cert.degree,
            "zero_root_multiplicity": cert.zero_root_multiplicity,
            "real_roots": cert.real_roots_with_multiplicity,
            "distinct_in_window": cert.distinct_in_interval,
            "certified": cert.certified && cert.zero_root_multiplicity == expected_zero_root(family, n),
        })
    });
    let out = json!({
        "family": family.to_string(),
        "n": n,
        "coefficients": poly.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "log10_coefficients": poly.coeffs().iter().map(log10).collect::<Vec<_>>(),
        "value": poly.eval_at_one().to_string(),
        "mode": report.mode_index,
        "plateau": report.plateau_length,
        "darroch_mean": rational(&report.darroch_mean),
        "darroch_mean_float": report.darroch_mean.to_f64(),
        "bound_holds": report.darroch_bound_holds,
        "slc": report.slc,
        "certificate": certificate,
    });
    Ok(out.to_string())
}

/// Convergence table over a comma-separated grid. `classical` switches the
/// Stirling family to unordered rows and the n/ln n mode law.
pub fn convergence_json(family: &str, param: u32, grid: &str, classical: bool) -> Result<String, String> {
    let family = parse_family(family, param)?;
    let grid: Vec<usize> = grid
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| format!("bad grid point {s:?}")))
        .collect::<Result<_, _>>()?;
    if grid.iter().any(|&n| n > MAX_GRID_POINT) {
        return Err(format!("grid points must be at most {MAX_GRID_POINT}"));
    }
    let model = match (classical, family) {
        (false, _) => AsymptoticModel::ordered(family),
        (true, TriangleFamily::Stirling) => AsymptoticModel::classical_stirling(),
        (true, _) => return Err("the classical model only applies to stirling".into()),
    };
    let rows = convergence_table(&model, &grid, 0).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "exact_log": r.exact_log,
                "predicted_log": r.predicted_log,
                "value_ratio": r.value_ratio,
                "exact_mode": r.exact_mode,
                "predicted_mode": r.predicted_mode,
                "mode_ratio": r.mode_ratio,
            })
        })
        .collect();
    Ok(Value::Array(rows).to_string())
}

/// Rows `0..=n_max` of the triangle, or of its ordered variant.
pub fn triangle_json(family: &str, param: u32, n_max: usize, ordered: bool) -> Result<String, String> {
    let family = parse_family(family, param)?;
    if n_max > MAX_TRIANGLE {
        return Err(format!("n_max must be at most {MAX_TRIANGLE}"));
    }
    let t = build_triangle(family, n_max);
    let rows: Vec<Vec<String>> = (0..=n_max)
        .map(|n| {
            let row = if ordered {
                ordered_row(&t, n).unwrap().coefficients
            } else {
                t.row(n).unwrap().to_vec()
            };
            row.iter().map(ToString::to_string).collect()
        })
        .collect();
    Ok(json!({ "family": family.to_string(), "ordered": ordered, "rows": rows }).to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn row_report(family: &str, param: u32, n: u32) -> Result<String, JsError> {
    js(row_report_json(family, param, n as usize))
}

#[wasm_bindgen]
pub fn convergence(family: &str, param: u32, grid: &str, classical: bool) -> Result<String, JsError> {
    js(convergence_json(family, param, grid, classical))
}

#[wasm_bindgen]
pub fn triangle(family: &str, param: u32, n_max: u32, ordered: bool) -> Result<String, JsError> {
    js(triangle_json(family, param, n_max as usize, ordered))
}
