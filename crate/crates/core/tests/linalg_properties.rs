use nalgebra::{Complex, DMatrix};
use proptest::prelude::*;
use qgain_core::adjoint::complex_adjoint;
use qgain_core::det::{
    cdet, char_poly_hermitian, det_hermitian, det_hermitian_checked, principal_minor_sum, rdet,
};
use qgain_core::{Config, LeaderOrder, QMatrix, Quaternion};

fn quat() -> impl Strategy<Value = Quaternion> {
    prop::array::uniform4(-1.0f64..1.0).prop_map(|c| Quaternion::from_components(c).unwrap())
}

fn square(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(quat(), n * n).prop_map(move |d| QMatrix::new(n, n, d).unwrap())
}

fn rect(r: usize, c: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(quat(), r * c).prop_map(move |d| QMatrix::new(r, c, d).unwrap())
}

fn hermitian(max_n: usize) -> impl Strategy<Value = QMatrix> {
    (2..=max_n)
        .prop_flat_map(square)
        .prop_map(|b| b.add(&b.conj_transpose()).unwrap())
}

fn cfg() -> Config {
    Config::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hermitian_determinants_agree(a in hermitian(5)) {
        let checked = det_hermitian_checked(&a, &cfg()).unwrap();
        prop_assert!(checked.spread <= 1e-9);
        prop_assert!(checked.residue <= 1e-9);
    }

    #[test]
    fn conjugation_duality(a in (1usize..=4).prop_flat_map(square)) {
        let at = a.conj_transpose();
        for i in 0..a.rows() {
            let lhs = rdet(&at, i, &cfg()).unwrap();
            let rhs = cdet(&a, i, &cfg()).unwrap().conj();
            prop_assert!(lhs.approx_eq(&rhs, 1e-9));
        }
    }

    #[test]
    fn left_row_combination_keeps_rdet(
        a in hermitian(5),
        coeffs in prop::collection::vec(quat(), 5),
        pick in 0usize..5,
    ) {
        let n = a.rows();
        let i = pick % n;
        let det = det_hermitian(&a, &cfg()).unwrap();
        let terms: Vec<_> = (0..n).filter(|&k| k != i).map(|k| (coeffs[k], k)).collect();
        let b = a.add_left_row_combination(i, &terms);
        let r = rdet(&b, i, &cfg()).unwrap();
        let c = cdet(&b, i, &cfg()).unwrap();
        let scale = det.abs().max(1.0);
        prop_assert!(r.approx_eq(&Quaternion::real(det), 1e-9 * scale));
        prop_assert!(c.approx_eq(&Quaternion::real(det), 1e-9 * scale));
    }

    #[test]
    fn right_column_combination_keeps_cdet(
        a in hermitian(5),
        coeffs in prop::collection::vec(quat(), 5),
        pick in 0usize..5,
    ) {
        let n = a.rows();
        let j = pick % n;
        let det = det_hermitian(&a, &cfg()).unwrap();
        let terms: Vec<_> = (0..n).filter(|&k| k != j).map(|k| (coeffs[k], k)).collect();
        let b = a.add_right_col_combination(j, &terms);
        let c = cdet(&b, j, &cfg()).unwrap();
        let r = rdet(&b, j, &cfg()).unwrap();
        let scale = det.abs().max(1.0);
        prop_assert!(c.approx_eq(&Quaternion::real(det), 1e-9 * scale));
        prop_assert!(r.approx_eq(&Quaternion::real(det), 1e-9 * scale));
    }

    #[test]
    fn adjoint_determinant_is_square(a in hermitian(5)) {
        let det = det_hermitian(&a, &cfg()).unwrap();
        let oracle = complex_adjoint(&a).det().unwrap();
        prop_assert!(oracle.im.abs() <= 1e-6 * det.powi(2).max(1.0));
        prop_assert!((oracle.re - det * det).abs() <= 1e-6 * (det * det).max(1.0));
    }

    #[test]
    fn adjoint_is_homomorphism(a in square(3), b in square(3)) {
        let ab = complex_adjoint(&a.matmul(&b).unwrap());
        let prod = complex_adjoint(&a).matmul(&complex_adjoint(&b)).unwrap();
        prop_assert!(ab.max_abs_diff(&prod).unwrap() <= 1e-12);
        let h = complex_adjoint(&a.conj_transpose());
        prop_assert!(h.max_abs_diff(&complex_adjoint(&a).conj_transpose()).unwrap() == 0.0);
    }

    #[test]
    fn gram_matrices_are_psd((r, c) in (1usize..=4, 1usize..=4), seed in rect(4, 4)) {
        let b = seed.submatrix(&(0..r).collect::<Vec<_>>(), &(0..c).collect::<Vec<_>>()).unwrap();
        prop_assert!(det_hermitian(&b.gram_rows(), &cfg()).unwrap() >= -1e-9);
        prop_assert!(det_hermitian(&b.gram_cols(), &cfg()).unwrap() >= -1e-9);
    }

    #[test]
    fn principal_minor_sums_match_across_grams(b in rect(3, 5)) {
        // generic 3x5 has rank 3
        for s in 1..=3 {
            let left = principal_minor_sum(&b.gram_cols(), s, &cfg()).unwrap();
            let right = principal_minor_sum(&b.gram_rows(), s, &cfg()).unwrap();
            prop_assert!((left - right).abs() <= 1e-9 * left.abs().max(1.0));
        }
    }
}

/// Eigenvalues of `χ(A)` (a complex Hermitian matrix) are the right
/// eigenvalues of `A`, each doubled; they must be roots of `p_A`.
#[test]
fn char_poly_vanishes_on_adjoint_spectrum() {
    let a = {
        let z = Quaternion::ZERO;
        let g = Quaternion::new(0.5, -0.5, 0.5, 0.5).unwrap();
        let b = QMatrix::from_rows(&[
            &[Quaternion::real(3.0), -Quaternion::I, Quaternion::J, z],
            &[Quaternion::I, Quaternion::real(2.0), -g, z],
            &[
                -Quaternion::J,
                -g.conj(),
                Quaternion::real(4.0),
                -Quaternion::K,
            ],
            &[z, z, Quaternion::K, Quaternion::real(1.0)],
        ])
        .unwrap();
        assert!(b.is_hermitian(0.0));
        b
    };
    let p = char_poly_hermitian(&a, &cfg()).unwrap();
    let trace: f64 = (0..4).map(|i| a[(i, i)].re()).sum();
    assert!((p.coefficients[0] - trace).abs() < 1e-12);
    assert!((p.coefficients[3] - det_hermitian(&a, &cfg()).unwrap()).abs() < 1e-9);

    let chi = complex_adjoint(&a);
    let n = chi.rows();
    let m = DMatrix::from_fn(n, n, |i, j| Complex::new(chi[(i, j)].re, chi[(i, j)].im));
    let eig = m.symmetric_eigen();
    for lambda in eig.eigenvalues.iter() {
        assert!(
            p.eval(*lambda).abs() < 1e-6,
            "p({lambda}) = {}",
            p.eval(*lambda)
        );
    }
}

/// Exchanging the first two non-pivot cycles in the column determinant
/// only is caught by the conjugation-duality check.
#[test]
fn swapped_leaders_break_duality() {
    let runner_cfg = Config::default();
    let mutated = Config::default().with_leader_order(LeaderOrder::SwappedLeaders);
    let a = QMatrix::from_fn(3, 3, |i, j| {
        Quaternion::new(
            1.0 + i as f64,
            j as f64 - 0.5,
            (i * j) as f64 * 0.3,
            0.7 - j as f64,
        )
        .unwrap()
    });
    let at = a.conj_transpose();
    let lhs = rdet(&at, 0, &runner_cfg).unwrap();
    let rhs = cdet(&a, 0, &mutated).unwrap().conj();
    assert!(!lhs.approx_eq(&rhs, 1e-9));
    // mutating both sides consistently keeps the identity
    let both = rdet(&at, 0, &mutated).unwrap();
    assert!(both.approx_eq(&rhs, 1e-9));
}
