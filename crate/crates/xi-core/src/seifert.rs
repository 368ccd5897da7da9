//! Seifert forms, their symmetrization and mod p characteristic classes.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::coloring::nullspace_mod_p;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::snf::Smith;
use crate::Int;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertData {
    /// The Seifert matrix, when known. Only its symmetrization enters Ξ.
    pub a_v: Option<Matrix<i64>>,
    pub l_v: Matrix<i64>,
    pub basis: Vec<String>,
}

impl SeifertData {
    /// From a Seifert matrix; A − Aᵀ must be unimodular.
    pub fn from_seifert_matrix(a: Matrix<i64>, basis: Vec<String>) -> Result<Self, Error> {
        let l_v = symmetrize(&a)?;
        check_basis(&basis, a.nrows())?;
        let skew = a.add(&a.transpose().map(|v| -v))?;
        if !is_unimodular(&skew) {
            return Err(Error::Schema(String::from(
                "Seifert matrix A satisfies |det(A - A^T)| != 1",
            )));
        }
        Ok(SeifertData {
            a_v: Some(a),
            l_v,
            basis,
        })
    }

    /// From a symmetrized form only.
    pub fn from_symmetrized(l_v: Matrix<i64>, basis: Vec<String>) -> Result<Self, Error> {
        if !l_v.is_square() {
            return Err(Error::NotSquare);
        }
        if !l_v.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        check_basis(&basis, l_v.nrows())?;
        Ok(SeifertData {
            a_v: None,
            l_v,
            basis,
        })
    }

    pub fn genus(&self) -> usize {
        self.l_v.nrows() / 2
    }
}

fn check_basis(basis: &[String], n: usize) -> Result<(), Error> {
    if !basis.is_empty() && basis.len() != n {
        return Err(Error::DimensionMismatch);
    }
    Ok(())
}

fn is_unimodular(m: &Matrix<i64>) -> bool {
    let n = m.nrows();
    let rows = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(Int::from).collect())
        .collect();
    let s = Smith::new(n, n, rows);
    s.rank() == n && s.torsion().is_empty()
}

pub fn symmetrize(a: &Matrix<i64>) -> Result<Matrix<i64>, Error> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    a.add(&a.transpose())
}

/// True iff v is primitive and L·v ≡ 0 (mod p).
pub fn verify_characteristic(l: &Matrix<i64>, v: &[i64], p: u32) -> Result<bool, Error> {
    let lv = l.mul_vec(v)?;
    let primitive = v.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1;
    Ok(primitive && lv.iter().all(|x| x.rem_euclid(i64::from(p)) == 0))
}

/// vᵀ L v.
pub fn self_pairing(l: &Matrix<i64>, v: &[i64]) -> Result<i64, Error> {
    let lv = l.mul_vec(v)?;
    Ok(lv.iter().zip(v).map(|(a, b)| a * b).sum())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicClasses {
    /// Basis of ker(L mod p), entries in 0..p.
    pub kernel: Vec<Vec<i64>>,
    /// One primitive lift per projective class: balanced entries, first nonzero entry 1.
    /// Left empty when the kernel is too large to enumerate.
    pub classes: Vec<Vec<i64>>,
}

/// Kernel dimensions above this are reported by basis only.
pub const MAX_ENUMERATED_KERNEL: usize = 8;

pub fn characteristic_classes_mod_p(
    l: &Matrix<i64>,
    p: u32,
) -> Result<CharacteristicClasses, Error> {
    if !l.is_square() {
        return Err(Error::NotSquare);
    }
    let n = l.nrows();
    let p = i64::from(p);
    let kernel = nullspace_mod_p(&l.to_rows(), n, p);
    let mut classes = Vec::new();
    if kernel.len() <= MAX_ENUMERATED_KERNEL {
        let total = (p as u64).pow(kernel.len() as u32);
        for idx in 1..total {
            let mut v = vec![0i64; n];
            let mut t = idx;
            for b in &kernel {
                let c = (t % p as u64) as i64;
                t /= p as u64;
                for (x, y) in v.iter_mut().zip(b) {
                    *x = (*x + c * y).rem_euclid(p);
                }
            }
            let lead = v
                .iter()
                .copied()
                .find(|&x| x != 0)
                .expect("nonzero combination");
            let inv = inv_mod(lead, p);
            let w: Vec<i64> = v
                .iter()
                .map(|&x| {
                    let y = (x * inv).rem_euclid(p);
                    if 2 * y > p {
                        y - p
                    } else {
                        y
                    }
                })
                .collect();
            if !classes.contains(&w) {
                classes.push(w);
            }
        }
        classes.sort_by(|a: &Vec<i64>, b: &Vec<i64>| {
            let la = a.iter().position(|&x| x != 0);
            let lb = b.iter().position(|&x| x != 0);
            la.cmp(&lb).then_with(|| a.cmp(b))
        });
    }
    Ok(CharacteristicClasses { kernel, classes })
}

fn inv_mod(a: i64, p: i64) -> i64 {
    (1..p).find(|&x| (a * x).rem_euclid(p) == 1).unwrap_or(1)
}
