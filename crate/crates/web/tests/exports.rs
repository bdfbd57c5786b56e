use ordmode_demo::{convergence_json, parse_family, row_report_json, triangle_json};
use serde_json::Value;

fn parse(s: Result<String, String>) -> Value {
    serde_json::from_str(&s.unwrap()).unwrap()
}

#[test]
fn row_report_for_ordered_stirling_four() {
    let v = parse(row_report_json("stirling", 0, 4));
    assert_eq!(v["coefficients"], serde_json::json!(["0", "1", "14", "36", "24"]));
    assert_eq!(v["value"], "75");
    assert_eq!(v["mode"], 3);
    assert_eq!(v["darroch_mean"], "233/75");
    assert_eq!(v["bound_holds"], true);
    assert!(v["log10_coefficients"][0].is_null());
    assert_eq!(v["certificate"]["window"], "(-1, 0]");
    assert_eq!(v["certificate"]["certified"], true);
}

#[test]
fn whitney_rows_certify_in_their_window() {
    let v = parse(row_report_json("whitney", 3, 20));
    assert_eq!(v["family"], "whitney(m=3)");
    assert_eq!(v["certificate"]["window"], "[-3, 0]");
    assert_eq!(v["certificate"]["certified"], true);
    assert_eq!(v["certificate"]["real_roots"], 20);
}

#[test]
fn large_rows_skip_the_certificate() {
    let v = parse(row_report_json("r-stirling", 2, 200));
    assert!(v["certificate"].is_null());
    assert_eq!(v["slc"], true);
    assert!(row_report_json("stirling", 0, 401).is_err());
}

#[test]
fn convergence_rows_follow_the_grid() {
    let v = parse(convergence_json("r-stirling", 1, "10, 100", false));
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1]["n"], 100);
    assert_eq!(rows[1]["exact_mode"], 72);
    let classical = parse(convergence_json("stirling", 0, "50", true));
    assert!(classical[0]["value_ratio"].is_null());
    assert!(convergence_json("whitney", 2, "50", true).is_err());
    assert!(convergence_json("stirling", 0, "50,10", false).is_err());
    assert!(convergence_json("stirling", 0, "ten", false).is_err());
}

#[test]
fn triangle_rows() {
    let v = parse(triangle_json("whitney", 2, 3, false));
    assert_eq!(v["rows"][3][1], "13");
    let v = parse(triangle_json("stirling", 0, 4, true));
    assert_eq!(v["rows"][4][3], "36");
    assert!(triangle_json("stirling", 0, 41, false).is_err());
}

#[test]
fn family_names() {
    assert!(parse_family("whitney", 0).is_err());
    assert!(parse_family("bell", 1).is_err());
    assert_eq!(parse_family("r-stirling", 2).unwrap().to_string(), "r-stirling(r=2)");
}
