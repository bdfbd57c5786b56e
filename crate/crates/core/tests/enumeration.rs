//! Triangles and Fubini-type numbers against brute-force enumeration and the
//! EGF oracle.

use num_bigint::BigInt;
use ordmode::exact::{egf_r_fubini, egf_whitney_fubini};
use ordmode::poly::{fubini_polynomials, r_fubini_poly, whitney_fubini_poly};
use ordmode::triangles::{build_triangle, ordered_row, TriangleFamily};
use ordmode_oracles as oracles;

fn big(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn stirling_rows_and_bell_numbers_match_enumeration() {
    let t = build_triangle(TriangleFamily::Stirling, 8);
    for n in 0..=8 {
        let counted = oracles::stirling2_row(n);
        assert_eq!(t.row(n).unwrap(), big(&counted).as_slice(), "row {n}");
        let bell: BigInt = t.row(n).unwrap().iter().sum();
        assert_eq!(bell, BigInt::from(oracles::set_partitions(n).len()));
    }
}

#[test]
fn ordered_rows_and_fubini_numbers_match_enumeration() {
    let t = build_triangle(TriangleFamily::Stirling, 8);
    let egf = egf_r_fubini(0, 8).unwrap();
    for (n, value) in egf.iter().enumerate() {
        let row = ordered_row(&t, n).unwrap();
        assert_eq!(row.coefficients, big(&oracles::ordered_stirling_row(n)));
        assert_eq!(value, &BigInt::from(oracles::fubini(n)), "n = {n}");
    }
}

#[test]
fn r_stirling_rows_match_enumeration() {
    for r in 0..=2u32 {
        let t = build_triangle(TriangleFamily::r_stirling(r), 6);
        for n in 0..=6 {
            let counted = oracles::r_stirling_row(n, r as usize);
            assert_eq!(t.row(n).unwrap(), big(&counted).as_slice(), "r = {r}, n = {n}");
        }
    }
}

#[test]
fn whitney_one_sums_count_ordered_partitions_with_a_marked_block() {
    // F_1(n) = Σ_k k! S(n+1, k+1)
    let egf = egf_whitney_fubini(1, 7).unwrap();
    for (n, value) in egf.iter().enumerate() {
        let row = oracles::stirling2_row(n + 1);
        let fact = |k: usize| (1..=k as u64).product::<u64>();
        let sum: u64 = (0..=n).map(|k| fact(k) * row[k + 1]).sum();
        assert_eq!(value, &BigInt::from(sum));
    }
}

#[test]
fn polynomial_coefficients_match_ordered_triangles() {
    for r in 0..=5 {
        let family = TriangleFamily::r_stirling(r);
        let t = build_triangle(family, 60);
        for (n, p) in fubini_polynomials(family, 60).iter().enumerate() {
            assert_eq!(&ordered_row(&t, n).unwrap().to_polynomial(), p, "r = {r}, n = {n}");
        }
    }
    for m in 1..=5 {
        let family = TriangleFamily::whitney(m).unwrap();
        let t = build_triangle(family, 60);
        for (n, p) in fubini_polynomials(family, 60).iter().enumerate() {
            assert_eq!(&ordered_row(&t, n).unwrap().to_polynomial(), p, "m = {m}, n = {n}");
        }
    }
}

#[test]
fn polynomial_sums_match_egf_oracle() {
    for r in 0..=5 {
        let egf = egf_r_fubini(r, 40).unwrap();
        for (n, value) in egf.iter().enumerate() {
            assert_eq!(&r_fubini_poly(r, n).eval_at_one(), value);
        }
    }
    for m in 1..=5 {
        let egf = egf_whitney_fubini(m, 40).unwrap();
        let polys = fubini_polynomials(TriangleFamily::whitney(m).unwrap(), 40);
        for (p, value) in polys.iter().zip(&egf) {
            assert_eq!(&p.eval_at_one(), value);
        }
    }
    assert_eq!(whitney_fubini_poly(2, 3).unwrap().eval_at_one(), BigInt::from(38));
}

#[test]
fn one_stirling_rows_are_f_n1_coefficients() {
    let t = build_triangle(TriangleFamily::r_stirling(1), 30);
    for n in 0..=30 {
        let p = r_fubini_poly(1, n);
        for k in 0..=n {
            let fact: BigInt = (1..=k as u64 + 1).map(BigInt::from).product();
            assert_eq!(p.coeff(k), fact * t.get(n, k));
        }
    }
}
