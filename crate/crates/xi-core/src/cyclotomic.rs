//! Exact arithmetic in ℚ(ζ_p) for an odd prime p, with ζ = e^{2πi/p}.
//!
//! Elements are stored on the spanning set 1, ζ, …, ζ^{p-1} and normalised so
//! the coefficient of ζ^{p-1} is zero, which gives the power basis modulo Φ_p.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Int, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cyclo {
    p: usize,
    c: Vec<Rat>,
}

impl Cyclo {
    pub fn zero(p: usize) -> Self {
        Cyclo {
            p,
            c: vec![Rat::zero(); p],
        }
    }

    pub fn from_rat(p: usize, r: Rat) -> Self {
        let mut z = Cyclo::zero(p);
        z.c[0] = r;
        z
    }

    pub fn from_int(p: usize, v: i64) -> Self {
        Cyclo::from_rat(p, Rat::from_integer(Int::from(v)))
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(p: usize, k: i64) -> Self {
        let mut z = Cyclo::zero(p);
        z.c[k.rem_euclid(p as i64) as usize] = Rat::one();
        z.normalize();
        z
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Coefficients on 1, ζ, …, ζ^{p-2}.
    pub fn coords(&self) -> &[Rat] {
        &self.c[..self.p - 1]
    }

    fn normalize(&mut self) {
        let top = self.c[self.p - 1].clone();
        if !top.is_zero() {
            for v in self.c.iter_mut() {
                *v -= &top;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &Cyclo) -> Cyclo {
        Cyclo {
            p: self.p,
            c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Cyclo) -> Cyclo {
        Cyclo {
            p: self.p,
            c: self.c.iter().zip(&o.c).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Cyclo {
        Cyclo {
            p: self.p,
            c: self.c.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Cyclo {
        Cyclo {
            p: self.p,
            c: self.c.iter().map(|a| a * r).collect(),
        }
    }

    pub fn mul(&self, o: &Cyclo) -> Cyclo {
        let p = self.p;
        let mut c = vec![Rat::zero(); p];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[(i + j) % p] += a * b;
                }
            }
        }
        let mut z = Cyclo { p, c };
        z.normalize();
        z
    }

    /// Galois automorphism ζ ↦ ζ^k.
    pub fn galois(&self, k: usize) -> Cyclo {
        let p = self.p;
        let mut c = vec![Rat::zero(); p];
        for (i, a) in self.c.iter().enumerate() {
            c[(i * k) % p] += a;
        }
        let mut z = Cyclo { p, c };
        z.normalize();
        z
    }

    pub fn conj(&self) -> Cyclo {
        self.galois(self.p - 1)
    }

    /// Inverse through the norm: a⁻¹ = (∏_{k≠1} σ_k(a)) / N(a).
    pub fn inv(&self) -> Option<Cyclo> {
        if self.is_zero() {
            return None;
        }
        let mut rest = Cyclo::from_int(self.p, 1);
        for k in 2..self.p {
            rest = rest.mul(&self.galois(k));
        }
        let norm = self.mul(&rest);
        debug_assert!(norm.c[1..].iter().all(Zero::is_zero));
        Some(rest.scale(&norm.c[0].recip()))
    }

    pub fn div(&self, o: &Cyclo) -> Option<Cyclo> {
        o.inv().map(|i| self.mul(&i))
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Sign of a real element under ζ = e^{2πi/p}.
    ///
    /// Zero is decided exactly. Otherwise the value Σ c_k cos(2πk/p) is
    /// enclosed in shrinking intervals until the enclosure excludes zero.
    pub fn real_sign(&self) -> Ordering {
        debug_assert!(self.is_real());
        if self.is_zero() {
            return Ordering::Equal;
        }
        let mut bits = 64u32;
        loop {
            let (lo, hi) = self.real_enclosure(bits);
            if lo.is_positive() {
                return Ordering::Greater;
            }
            if hi.is_negative() {
                return Ordering::Less;
            }
            bits *= 2;
        }
    }

    fn real_enclosure(&self, bits: u32) -> (Rat, Rat) {
        let scale = Int::one() << bits;
        let mut mid = Rat::zero();
        let mut rad = Rat::zero();
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (m, e) = cos_two_pi_fraction(k, self.p, bits);
            mid += a * Rat::new(m, scale.clone());
            rad += a.abs() * Rat::new(e, scale.clone());
        }
        (&mid - &rad, mid + rad)
    }
}

/// Fixed-point enclosure of cos(2πk/p): returns (m, e) with
/// |cos(2πk/p)·2^bits − m| ≤ e.
fn cos_two_pi_fraction(k: usize, p: usize, bits: u32) -> (Int, Int) {
    let k = k % p;
    if k == 0 {
        return (Int::one() << bits, Int::zero());
    }
    let k = k.min(p - k);
    // extra guard bits absorb the rounding of every step
    let guard = 16u32;
    let w = bits + guard;
    let one = Int::one() << w;
    let (pi, pi_err) = pi_fixed(w);
    // θ = 2πk/p ∈ (0, π]
    let theta = (&pi * Int::from(2 * k as u64)).div_floor(&Int::from(p as u64));
    let theta_err = &pi_err * Int::from(2 * k as u64) / Int::from(p as u64) + Int::one();
    // Taylor series: Σ (-1)^n θ^{2n} / (2n)!
    let mut term = one.clone();
    let mut sum = one.clone();
    let mut n: u64 = 0;
    let mut steps: u64 = 0;
    let theta_sq = (&theta * &theta) >> w;
    loop {
        n += 1;
        term = (&term * &theta_sq) >> w;
        term = term / Int::from((2 * n - 1) * (2 * n));
        steps += 1;
        if term.is_zero() {
            break;
        }
        if n % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
    }
    // each step loses at most a few units and the tail is below one unit;
    // the angle error is amplified at most ~20x by squaring and the first terms
    let err = Int::from(4 * steps + 8) + theta_err * 32;
    let m = round_shift(&sum, guard);
    let e = (err >> guard) + Int::from(2);
    (m, e)
}

fn round_shift(v: &BigInt, s: u32) -> BigInt {
    let half = Int::one() << (s - 1);
    match v.sign() {
        Sign::Minus => -((-v + &half) >> s),
        _ => (v + &half) >> s,
    }
}

/// π·2^w with an error bound, via Machin's formula π = 16·atan(1/5) − 4·atan(1/239).
fn pi_fixed(w: u32) -> (Int, Int) {
    let (a, ea) = atan_inv(5, w);
    let (b, eb) = atan_inv(239, w);
    (a * 16 - b * 4, ea * 16 + eb * 4)
}

fn atan_inv(x: u64, w: u32) -> (Int, Int) {
    let one = Int::one() << w;
    let x = Int::from(x);
    let x2 = &x * &x;
    let mut power = &one / &x;
    let mut sum = power.clone();
    let mut k: u64 = 1;
    let mut steps: u64 = 1;
    loop {
        power = &power / &x2;
        if power.is_zero() {
            break;
        }
        let term = &power / Int::from(2 * k + 1);
        if k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        k += 1;
        steps += 1;
    }
    (sum, Int::from(2 * steps + 2))
}
