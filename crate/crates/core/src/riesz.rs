//! Riesz means of counts in doubly-constrained progressions.
//!
//! A_k(x, q, a, d) = (1/k!) * sum over l <= x, l = a (mod q), l = 0 (mod d)
//! of (log x/l)^k, and the remainder r_k = A_k - x/(qd). k = 0 is the
//! sharp count; k = 4 is the heavily smoothed variant used alongside it.

use crate::error::{Error, Result};
use crate::kahan::KahanSum;

/// Largest admissible smoothing order; beyond this (log x/l)^k risks
/// overflowing double precision for desk-scale x.
pub const MAX_RIESZ_ORDER: u32 = 60;

/// Parameters of a Riesz mean: threshold x, progression l = a (mod q),
/// divisibility l = 0 (mod d), smoothing order k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RieszParams {
    pub x: f64,
    pub q: u64,
    pub a: i64,
    pub d: u64,
    pub k: u32,
}

impl RieszParams {
    fn validate(&self) -> Result<u64> {
        if self.q == 0 || self.d == 0 {
            return Err(Error::Domain("q and d must be positive".into()));
        }
        if self.k > MAX_RIESZ_ORDER {
            return Err(Error::Domain(format!(
                "Riesz order k = {} exceeds cap {MAX_RIESZ_ORDER}",
                self.k
            )));
        }
        if !self.x.is_finite() || self.x < 0.0 || self.x > crate::ap_error::MAX_X {
            return Err(Error::Domain(format!("x = {} out of range", self.x)));
        }
        Ok(self.x.floor() as u64)
    }
}

/// First positive solution of l = a (mod q), l = 0 (mod d), together with
/// the common step lcm(q, d). Returns None when the congruences clash.
pub(crate) fn progression_start(q: u64, a: i64, d: u64) -> Option<(u64, u64)> {
    let g = num_integer::gcd(q, d);
    let a0 = a.rem_euclid(q as i64) as u64;
    if a0 % g != 0 {
        return None;
    }
    let qg = q / g;
    let step = d / g * q; // lcm(q, d)
    // Solve (d/g) * m = (a0/g)  (mod q/g); d/g is invertible mod q/g.
    let inv = mod_inverse(d / g % qg, qg)?;
    let m0 = (a0 / g % qg) as u128 * inv as u128 % qg as u128;
    let l0 = m0 as u64 * d;
    Some((if l0 == 0 { step } else { l0 }, step))
}

/// Modular inverse via extended Euclid; modulus 1 maps everything to 0.
fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// The k-th Riesz mean A_k(x, q, a, d).
pub fn riesz_mean(p: &RieszParams) -> Result<f64> {
    let fx = p.validate()?;
    let Some((start, step)) = progression_start(p.q, p.a, p.d) else {
        return Ok(0.0);
    };
    let mut acc = KahanSum::new();
    let mut l = start;
    while l <= fx {
        acc.add((p.x / l as f64).ln().powi(p.k as i32));
        l += step;
    }
    Ok(acc.value() / factorial(p.k))
}

/// r_k(x, q, a, d) = A_k(x, q, a, d) - x/(qd).
pub fn riesz_remainder(p: &RieszParams) -> Result<f64> {
    Ok(riesz_mean(p)? - p.x / (p.q as f64 * p.d as f64))
}

fn factorial(k: u32) -> f64 {
    (1..=k as u64).map(|i| i as f64).product()
}
