use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use proptest::prelude::*;
use xi_core::matrix::Matrix;
use xi_core::signature::{signature_int, signature_symmetric, tl_sum, tristram_levine};
use xi_core::{Int, Rat};

/// Eigenvalues closer to zero than this count as zero in the float oracle.
const EIGEN_TOL: f64 = 1e-8;

fn float_signature(m: DMatrix<Complex64>) -> i64 {
    let e = SymmetricEigen::new(m).eigenvalues;
    e.iter()
        .map(|&v| {
            if v > EIGEN_TOL {
                1
            } else if v < -EIGEN_TOL {
                -1
            } else {
                0
            }
        })
        .sum()
}

fn float_tl(a: &[Vec<i64>], i: u32) -> i64 {
    let n = a.len();
    let theta = 2.0 * std::f64::consts::PI * f64::from(i) / 3.0;
    let w = Complex64::new(theta.cos(), theta.sin());
    let c = Complex64::new(1.0, 0.0) - w;
    float_signature(DMatrix::from_fn(n, n, |r, s| {
        c * a[r][s] as f64 + c.conj() * a[s][r] as f64
    }))
}

fn square(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-3i64..=3, n), n))
}

fn symmetric(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    square(max).prop_map(|a| {
        let n = a.len();
        (0..n)
            .map(|r| {
                (0..n)
                    .map(|s| if r <= s { a[r][s] } else { a[s][r] })
                    .collect()
            })
            .collect()
    })
}

/// Product of elementary row operations: add k times row j to row i.
fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec((0..n, 0..n, -2i64..=2), 0..8).prop_map(move |ops| {
        let mut p: Vec<Vec<i64>> = (0..n)
            .map(|r| (0..n).map(|s| i64::from(r == s)).collect())
            .collect();
        for (i, j, k) in ops {
            if i != j {
                for c in 0..n {
                    p[i][c] += k * p[j][c];
                }
            }
        }
        p
    })
}

fn mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|s| (0..n).map(|k| a[r][k] * b[k][s]).sum())
                .collect()
        })
        .collect()
}

fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|r| (0..n).map(|s| a[s][r]).collect()).collect()
}

fn int(a: &[Vec<i64>]) -> Matrix<i64> {
    Matrix::from_rows(a.to_vec()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn signature_matches_eigenvalues(s in symmetric(6)) {
        let n = s.len();
        let f = float_signature(DMatrix::from_fn(n, n, |r, c| Complex64::new(s[r][c] as f64, 0.0)));
        prop_assert_eq!(signature_int(&int(&s)).unwrap(), f);
    }

    #[test]
    fn signature_is_a_congruence_invariant(
        (s, p) in symmetric(5).prop_flat_map(|s| { let n = s.len(); (Just(s), unimodular(n)) })
    ) {
        let t = mul(&mul(&transpose(&p), &s), &p);
        prop_assert_eq!(signature_int(&int(&s)).unwrap(), signature_int(&int(&t)).unwrap());
    }

    #[test]
    fn rational_scaling_keeps_signature(s in symmetric(5), k in 1i64..=7) {
        let r = Matrix::from_rows(
            s.iter().map(|row| row.iter().map(|&v| Rat::new(Int::from(v), Int::from(k))).collect()).collect(),
        ).unwrap();
        prop_assert_eq!(signature_symmetric(&r).unwrap(), signature_int(&int(&s)).unwrap());
    }

    #[test]
    fn tristram_levine_is_conjugation_symmetric(a in square(5)) {
        let m = int(&a);
        prop_assert_eq!(tristram_levine(&m, 1, 3).unwrap(), tristram_levine(&m, 2, 3).unwrap());
    }

    #[test]
    fn tristram_levine_matches_eigenvalues(a in square(5)) {
        let m = int(&a);
        prop_assert_eq!(tristram_levine(&m, 1, 3).unwrap(), float_tl(&a, 1));
        prop_assert_eq!(tl_sum(&m, 3).unwrap(), float_tl(&a, 1) + float_tl(&a, 2));
    }
}
