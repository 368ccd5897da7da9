//! Evaluation of Ξ_p and the ribbon verdict.
//!
//! Ξ_p = (p² − 1)/(6p)·L_V(β, β) + Σ_{i=1}^{p−1} σ_{ζ^i}(β) + σ(W), with σ(W) = −σ(M).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::coloring::{basis_lifts, BasisElement, BasisInput, DihedralPermutation};
use crate::error::Error;
use crate::linking::{assemble_m, BlockProvider};
use crate::matrix::Matrix;
use crate::seifert::{self_pairing, verify_characteristic, SeifertData};
use crate::signature::{signature_symmetric, tl_sum};
use crate::{Int, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Obstructed,
    NotObstructed,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Obstructed => "obstructed",
            Verdict::NotObstructed => "not obstructed by Xi",
        }
    }
}

/// Obstructed iff |Ξ| > (p − 1)/2. Only meaningful when the cover is a rational homology sphere.
pub fn ribbon_verdict(xi: &Rat, p: u32) -> Verdict {
    let bound = Rat::new(Int::from(p - 1), Int::from(2));
    if xi.abs() > bound {
        Verdict::Obstructed
    } else {
        Verdict::NotObstructed
    }
}

/// p·σ(X) − (p − 1)/4·e(B) − Ξ.
pub fn cover_signature(p: u32, sigma_x: i64, e_b: i64, xi: &Rat) -> Rat {
    let p = Int::from(p);
    Rat::from_integer(&p * Int::from(sigma_x))
        - Rat::new((&p - Int::one()) * Int::from(e_b), Int::from(4))
        - xi
}

/// σ(W) = −σ(M).
pub fn sigma_w(m: &Matrix<Rat>) -> Result<i64, Error> {
    Ok(-signature_symmetric(m)?)
}

pub struct XiInput<'a> {
    pub p: u32,
    pub seifert: SeifertData,
    /// β in the Seifert basis.
    pub beta: Vec<i64>,
    /// Seifert matrix of β as a knot in S³; empty for an unknot.
    pub beta_seifert: Matrix<i64>,
    pub anchors: BasisInput,
    /// Color of α's zeroth arc.
    pub c0: u8,
    /// Invariant factors of H₁ of the cover (0 for a free summand), if known.
    pub h1: Option<Vec<Int>>,
    pub provider: &'a dyn BlockProvider,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiReport {
    pub p: u32,
    pub h1: Option<Vec<Int>>,
    pub monodromies: Vec<(String, DihedralPermutation)>,
    pub basis: Vec<BasisElement>,
    pub m: Matrix<Rat>,
    pub sigma_m: i64,
    pub sigma_w: i64,
    pub self_pairing: i64,
    pub term1: Rat,
    pub term2: i64,
    pub xi: Rat,
    pub verdict: Verdict,
    pub warnings: Vec<String>,
}

pub fn compute_xi(input: &XiInput<'_>) -> Result<XiReport, Error> {
    let p = input.p;
    if p != 3 {
        return Err(Error::Unsupported(format!(
            "p = {p}; only p = 3 is implemented"
        )));
    }
    let mut warnings = Vec::new();
    if let Some(h1) = &input.h1 {
        if h1.iter().any(Zero::is_zero) {
            return Err(Error::NotRationalHomologySphere);
        }
    } else {
        warnings.push(String::from(
            "H1 of the cover was not computed; the rational homology sphere hypothesis is assumed",
        ));
    }
    let l = &input.seifert.l_v;
    if !verify_characteristic(l, &input.beta, p)? {
        return Err(Error::NotCharacteristic);
    }
    let pairing = self_pairing(l, &input.beta)?;

    let mut monodromies = Vec::new();
    for (name, mu) in &input.anchors.omegas {
        monodromies.push((name.clone(), mu.clone()));
    }
    if let Some(g) = &input.anchors.gamma_r {
        monodromies.push((format!("{}_r", input.anchors.beta), g.clone()));
    }
    if let Some(g) = &input.anchors.gamma_l {
        monodromies.push((format!("{}_l", input.anchors.beta), g.clone()));
    }
    let basis = basis_lifts(&input.anchors, input.c0)?;
    let genus = input.seifert.genus();
    if genus > 0 && basis.len() != 2 * genus - 1 {
        warnings.push(format!(
            "basis has {} elements but the surface has genus {genus}",
            basis.len()
        ));
    }

    let m = assemble_m(input.provider, &basis)?;
    let integral = (0..m.nrows()).all(|i| m.row(i).iter().all(|v| v.is_integer()));
    let trivial_h1 = input.h1.as_ref().is_some_and(|h| h.is_empty());
    if trivial_h1 && !integral {
        warnings.push(String::from("M has non-integral entries although H1 = 0"));
    }
    let sym = if m.is_symmetric() {
        m.clone()
    } else {
        warnings.push(String::from(
            "M is not symmetric; its symmetric part was used",
        ));
        let half = Rat::new(Int::one(), Int::from(2));
        m.add(&m.transpose())?.map(|v| v * &half)
    };
    let sigma_m = signature_symmetric(&sym)?;
    let sigma_w = -sigma_m;

    let p_int = Int::from(p);
    let term1 = Rat::new(&p_int * &p_int - Int::one(), Int::from(6) * &p_int)
        * Rat::from_integer(Int::from(pairing));
    let term2 = tl_sum(&input.beta_seifert, p)?;
    let xi = &term1 + Rat::from_integer(Int::from(term2 + sigma_w));
    if !xi.is_integer() {
        warnings.push(format!(
            "Xi = {xi} is not an integer; the inputs may be inconsistent"
        ));
    }
    let verdict = ribbon_verdict(&xi, p);
    Ok(XiReport {
        p,
        h1: input.h1.clone(),
        monodromies,
        basis,
        m,
        sigma_m,
        sigma_w,
        self_pairing: pairing,
        term1,
        term2,
        xi,
        verdict,
        warnings,
    })
}
