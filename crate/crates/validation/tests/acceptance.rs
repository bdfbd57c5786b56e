//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::path::PathBuf;
use std::process::{Command, ExitCode};

use num_bigint::BigInt;
use ordmode::asymptotics::{compare_approach, convergence_table, Approach, AsymptoticModel, ConvergenceRow};
use ordmode::modes::wegner_check;
use ordmode::poly::fubini_polynomials;
use ordmode::sturm::{certify_real_rooted_in, RootWindow};
use ordmode::triangles::{build_triangle, ordered_row, TriangleFamily};
use ordmode::verify::{self, expected_zero_root, root_window, Depth, SuiteResult};
use ordmode_oracles as oracles;

/// The `ordmode` binary from the same target directory as this test.
fn bin() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    let dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let path = dir.join(format!("ordmode{}", std::env::consts::EXE_SUFFIX));
    assert!(
        path.exists(),
        "{} not found; build it with `cargo build -p ordmode-cli` or run `cargo test --workspace`",
        path.display()
    );
    path
}

struct Verdict {
    id: u32,
    name: &'static str,
    passed: bool,
    detail: String,
    notes: Vec<String>,
}

impl Verdict {
    fn new(id: u32, name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            id,
            name,
            passed,
            detail: detail.into(),
            notes: Vec::new(),
        }
    }

    fn print(&self) {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        println!("{tag} {} {}: {}", self.id, self.name, self.detail);
        for note in &self.notes {
            println!("    {note}");
        }
    }
}

fn from_suites(id: u32, name: &'static str, suites: &[SuiteResult]) -> Verdict {
    let passed = suites.iter().all(|s| s.passed);
    let detail = suites
        .iter()
        .map(|s| s.detail.as_str())
        .collect::<Vec<_>>()
        .join("; ");
    Verdict::new(id, name, passed, detail)
}

fn big(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn oracle_equivalence() -> Verdict {
    let limits = Depth::Full.limits();
    from_suites(1, "oracle-equivalence", &[verify::oracle_suite(&limits, &build_triangle)])
}

fn brute_force() -> Verdict {
    let mut failure = None;
    let t = build_triangle(TriangleFamily::Stirling, 8);
    for n in 0..=8 {
        let fubini: BigInt = ordered_row(&t, n).unwrap().coefficients.iter().sum();
        if t.row(n).unwrap() != big(&oracles::stirling2_row(n)).as_slice()
            || ordered_row(&t, n).unwrap().coefficients != big(&oracles::ordered_stirling_row(n))
            || fubini != BigInt::from(oracles::fubini(n))
        {
            failure.get_or_insert(format!("S or Fubini mismatch at n = {n}"));
        }
    }
    for r in 0..=2u32 {
        let t = build_triangle(TriangleFamily::r_stirling(r), 6);
        for n in 0..=6 {
            if t.row(n).unwrap() != big(&oracles::r_stirling_row(n, r as usize)).as_slice() {
                failure.get_or_insert(format!("S_{r} mismatch at n = {n}"));
            }
        }
    }
    let detail = failure.unwrap_or_else(|| {
        "S(n,k), Fubini numbers for n <= 8 and S_r(n,k) for n <= 6, r <= 2 match enumeration".into()
    });
    Verdict::new(2, "brute-force", detail.ends_with("enumeration"), detail)
}

fn structural_identities() -> Verdict {
    let limits = Depth::Full.limits();
    from_suites(
        3,
        "structural-identities",
        &[
            verify::w1_stirling_suite(&limits, &build_triangle),
            verify::r0_reduction_suite(&limits, &build_triangle),
            verify::shift_identity_suite(&limits),
            verify::derivative_suite(&limits),
        ],
    )
}

fn slc_darroch() -> Verdict {
    from_suites(4, "slc-darroch", &[verify::darroch_suite(&Depth::Full.limits())])
}

/// First `(family, n)` in the grid whose certificate fails in `window`.
fn first_uncertified(
    families: &[TriangleFamily],
    window: impl Fn(TriangleFamily) -> RootWindow,
) -> Option<(TriangleFamily, usize)> {
    for &family in families {
        let w = window(family);
        for (n, p) in fubini_polynomials(family, 60).iter().enumerate().skip(1) {
            let cert = certify_real_rooted_in(p, &w).unwrap();
            if !cert.certified || cert.zero_root_multiplicity != expected_zero_root(family, n) {
                return Some((family, n));
            }
        }
    }
    None
}

fn real_rootedness() -> Verdict {
    let r_families: Vec<_> = (0..=3).map(TriangleFamily::r_stirling).collect();
    let whitney: Vec<_> = (1..=3).map(|m| TriangleFamily::whitney(m).unwrap()).collect();
    let r_fail = first_uncertified(&r_families, |_| RootWindow::unit());
    let w_literal = first_uncertified(&whitney, |_| RootWindow::unit());
    let w_closed = first_uncertified(&whitney, root_window);
    let describe = |f: Option<(TriangleFamily, usize)>| match f {
        None => "certified".to_string(),
        Some((family, n)) => format!("fails first at {family}, n = {n}"),
    };
    let mut v = Verdict::new(
        5,
        "real-rootedness",
        r_fail.is_none() && w_literal.is_none(),
        format!(
            "n <= 60 in (-1, 0]: r-Stirling r <= 3 {}; Whitney m <= 3 {}",
            describe(r_fail),
            describe(w_literal)
        ),
    );
    v.notes.push(format!(
        "Whitney in [-m, 0] with no zero root: {}",
        describe(w_closed)
    ));
    v
}

fn table(family: TriangleFamily, grid: &[usize]) -> Vec<ConvergenceRow> {
    convergence_table(&AsymptoticModel::ordered(family), grid, 0).unwrap()
}

fn in_band(x: f64, lo: f64, hi: f64) -> bool {
    (lo..=hi).contains(&x)
}

fn value_asymptotics() -> Verdict {
    let mut families: Vec<_> = (0..=3).map(TriangleFamily::r_stirling).collect();
    families.extend((1..=3).map(|m| TriangleFamily::whitney(m).unwrap()));
    let mut passed = true;
    let mut notes = Vec::new();
    for &family in &families {
        let rows = table(family, &[100, 200, 400]);
        let at200 = rows[1].value_ratio.unwrap();
        let band = if family == TriangleFamily::r_stirling(0) {
            (0.99, 1.01)
        } else {
            (0.95, 1.05)
        };
        let approach = compare_approach(&rows[0], &rows[2]).unwrap();
        let ok = in_band(at200, band.0, band.1) && approach != Approach::Grows;
        passed &= ok;
        notes.push(format!(
            "{family}: ratio(200) = {at200:.6} in [{}, {}], |ratio - 1| 100 -> 400: {:.3e} -> {:.3e} ({approach:?})",
            band.0,
            band.1,
            rows[0].log_deviation().unwrap(),
            rows[2].log_deviation().unwrap(),
        ));
    }
    // Anchor recomputed as F_10 = sum k! S(10,k) from enumerated set
    // partitions, against 10!/(2 ln^11 2).
    let f10: u64 = oracles::stirling2_row(10)
        .iter()
        .enumerate()
        .map(|(k, s)| (1..=k as u64).product::<u64>() * s)
        .sum();
    let anchor = f10 as f64 / (3_628_800.0 / (2.0 * std::f64::consts::LN_2.powi(11)));
    let got = table(TriangleFamily::r_stirling(0), &[10])[0].value_ratio.unwrap();
    let anchor_ok = (got - anchor).abs() <= 2e-4;
    passed &= anchor_ok;
    notes.push(format!(
        "anchor r = 0, n = 10: value_ratio = {got:.11}, recomputed {anchor:.11} +- 0.0002"
    ));
    let mut v = Verdict::new(
        6,
        "value-asymptotics",
        passed,
        "bands at n = 200, deviation not growing from n = 100 to 400, n = 10 anchor",
    );
    v.notes = notes;
    v
}

fn mode_asymptotics() -> Verdict {
    let mut families = vec![TriangleFamily::Stirling];
    families.extend((1..=3).map(TriangleFamily::r_stirling));
    families.extend((1..=3).map(|m| TriangleFamily::whitney(m).unwrap()));
    let mut ordered_ok = true;
    let mut notes = Vec::new();
    for &family in &families {
        let rows = table(family, &[200, 400]);
        let (a, b) = (rows[0].mode_ratio, rows[1].mode_ratio);
        let ok = in_band(a, 0.9, 1.1) && in_band(b, 0.95, 1.05);
        ordered_ok &= ok;
        notes.push(format!(
            "ordered {family}: mode(200)/law = {a:.4}, mode(400)/law = {b:.4}{}",
            if ok { "" } else { " out of band" }
        ));
    }
    let classical =
        convergence_table(&AsymptoticModel::classical_stirling(), &[400], 0).unwrap()[0].clone();
    let classical_ok = in_band(classical.mode_ratio, 0.85, 1.15);
    notes.push(format!(
        "classical Stirling n = 400: mode {} vs n/ln n = {:.2}, ratio {:.4} in [0.85, 1.15]: {classical_ok}",
        classical.exact_mode, classical.predicted_mode, classical.mode_ratio
    ));
    let mut v = Verdict::new(
        7,
        "mode-asymptotics",
        ordered_ok && classical_ok,
        format!(
            "ordered families {}; classical Stirling {}",
            if ordered_ok { "in band" } else { "out of band" },
            if classical_ok { "in band" } else { "out of band" }
        ),
    );
    v.notes = notes;
    v
}

fn wegner_scan() -> Verdict {
    let out = Command::new(bin()).args(["verify", "--depth", "full"]).output().unwrap();
    let stdout = String::from_utf8_lossy(&out.stdout);
    let line = stdout.lines().find(|l| l.contains("wegner")).unwrap_or("").to_string();
    let direct = wegner_check(300).unwrap();
    let passed = out.status.success() && line == "PASS wegner: no counterexample <= 300" && direct.is_empty();
    Verdict::new(8, "wegner-scan", passed, format!("verify --depth full exit {:?}: {line}", out.status.code()))
}

fn asymptotics_csv(args: &[&str], threads: &str) -> Vec<u8> {
    let out = Command::new(bin())
        .arg("asymptotics")
        .args(args)
        .env("ORDMODE_THREADS", threads)
        .output()
        .unwrap();
    assert!(out.status.success(), "asymptotics {args:?} failed");
    out.stdout
}

fn determinism() -> Verdict {
    let cases: [&[&str]; 4] = [
        &["--family", "stirling"],
        &["--family", "r-stirling", "--r", "2"],
        &["--family", "whitney", "--m", "3", "--grid", "5,50,150,300"],
        &["--family", "stirling", "--classical"],
    ];
    let mut mismatches = Vec::new();
    for args in cases {
        let first = asymptotics_csv(args, "0");
        if first != asymptotics_csv(args, "4") || first != asymptotics_csv(args, "0") {
            mismatches.push(args.join(" "));
        }
    }
    let detail = if mismatches.is_empty() {
        format!("{} argument sets byte-identical with ORDMODE_THREADS = 0 and 4", cases.len())
    } else {
        format!("differs for: {}", mismatches.join("; "))
    };
    Verdict::new(9, "determinism", mismatches.is_empty(), detail)
}

fn main() -> ExitCode {
    let checks: [fn() -> Verdict; 9] = [
        oracle_equivalence,
        brute_force,
        structural_identities,
        slc_darroch,
        real_rootedness,
        value_asymptotics,
        mode_asymptotics,
        wegner_scan,
        determinism,
    ];
    let mut failed = 0;
    for check in checks {
        let v = check();
        v.print();
        failed += usize::from(!v.passed);
    }
    println!("{} of {} criteria pass", checks.len() - failed, checks.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
