//! Exact signatures of symmetric rational and Hermitian cyclotomic matrices.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::cyclotomic::Cyclo;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::{Int, Rat};

/// Signature of a symmetric rational matrix by congruence diagonalisation.
pub fn signature_symmetric(m: &Matrix<Rat>) -> Result<i64, Error> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut a = m.to_rows();
    let mut sig = 0i64;
    while !a.is_empty() {
        let n = a.len();
        let pivot = match (0..n).find(|&i| !a[i][i].is_zero()) {
            Some(i) => i,
            None => {
                let Some((i, j)) = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero())
                else {
                    break;
                };
                // v_i ← v_i + v_j makes the diagonal entry 2·a_ij ≠ 0
                for k in 0..n {
                    let v = a[j][k].clone();
                    a[i][k] += v;
                }
                for k in 0..n {
                    let v = a[k][j].clone();
                    a[k][i] += v;
                }
                i
            }
        };
        let d = a[pivot][pivot].clone();
        sig += if d.is_positive() { 1 } else { -1 };
        let prow = a[pivot].clone();
        for r in 0..n {
            if r == pivot || a[r][pivot].is_zero() {
                continue;
            }
            let f = &a[r][pivot] / &d;
            for k in 0..n {
                let v = &f * &prow[k];
                a[r][k] -= v;
            }
        }
        a.remove(pivot);
        for row in a.iter_mut() {
            row.remove(pivot);
        }
    }
    Ok(sig)
}

pub fn signature_int(m: &Matrix<i64>) -> Result<i64, Error> {
    signature_symmetric(&m.map(|&v| Rat::from_integer(Int::from(v))))
}

/// Signature of a Hermitian matrix over ℚ(ζ_p).
pub fn signature_hermitian(h: &[Vec<Cyclo>], p: usize) -> Result<i64, Error> {
    let n = h.len();
    if h.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare);
    }
    for i in 0..n {
        for j in 0..=i {
            if h[i][j] != h[j][i].conj() {
                return Err(Error::NotSymmetric);
            }
        }
    }
    let mut a: Vec<Vec<Cyclo>> = h.to_vec();
    let mut sig = 0i64;
    while !a.is_empty() {
        let n = a.len();
        let pivot = match (0..n).find(|&i| !a[i][i].is_zero()) {
            Some(i) => i,
            None => {
                let Some((i, j)) = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero())
                else {
                    break;
                };
                // v_i ← v_i + u·v_j gives diagonal 2·Re(u·a_ji); one of u ∈ {1, ζ} works
                let u = [Cyclo::from_int(p, 1), Cyclo::zeta_pow(p, 1)]
                    .into_iter()
                    .find(|u| {
                        let x = u.mul(&a[j][i]);
                        !x.add(&x.conj()).is_zero()
                    })
                    .expect("a nonzero entry has a nonzero real part after rotation by 1 or ζ");
                let ub = u.conj();
                for k in 0..n {
                    let v = u.mul(&a[j][k]);
                    a[i][k] = a[i][k].add(&v);
                }
                for k in 0..n {
                    let v = a[k][j].mul(&ub);
                    a[k][i] = a[k][i].add(&v);
                }
                i
            }
        };
        let d = a[pivot][pivot].clone();
        sig += match d.real_sign() {
            Ordering::Greater => 1,
            Ordering::Less => -1,
            Ordering::Equal => unreachable!("pivot is nonzero"),
        };
        let prow = a[pivot].clone();
        let dinv = d.inv().expect("nonzero pivot");
        for r in 0..n {
            if r == pivot || a[r][pivot].is_zero() {
                continue;
            }
            let f = a[r][pivot].mul(&dinv);
            for k in 0..n {
                let v = f.mul(&prow[k]);
                a[r][k] = a[r][k].sub(&v);
            }
        }
        a.remove(pivot);
        for row in a.iter_mut() {
            row.remove(pivot);
        }
    }
    Ok(sig)
}

/// Tristram–Levine signature of `(1−ω)A + (1−ω̄)Aᵀ` at ω = ζ_p^i.
pub fn tristram_levine(a: &Matrix<i64>, i: u32, p: u32) -> Result<i64, Error> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    if i % p == 0 {
        return Err(Error::BadExponent);
    }
    let pu = p as usize;
    let one = Cyclo::from_int(pu, 1);
    let w = Cyclo::zeta_pow(pu, i64::from(i));
    let c = one.sub(&w);
    let cb = c.conj();
    let n = a.nrows();
    let h: Vec<Vec<Cyclo>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|s| {
                    let x = c.scale(&Rat::from_integer(Int::from(*a.get(r, s))));
                    x.add(&cb.scale(&Rat::from_integer(Int::from(*a.get(s, r)))))
                })
                .collect()
        })
        .collect();
    signature_hermitian(&h, pu)
}

/// Σ_{i=1}^{p−1} σ_{ζ^i}(A).
pub fn tl_sum(a: &Matrix<i64>, p: u32) -> Result<i64, Error> {
    (1..p).map(|i| tristram_levine(a, i, p)).sum()
}
