//! Progression sums of the von Mangoldt function and their error terms.
//!
//! The central quantity is
//! `E(x, q) = max over reduced residues a of |psi(x; q, a) - x/phi(q)|`,
//! evaluated for individual moduli and averaged over a window of square
//! moduli {q^2 : Q < q^2 <= 2Q}. The per-modulus evaluation scans the
//! prime list once and accumulates every residue class simultaneously;
//! the per-residue progression walk is kept as an independent route for
//! cross-checks.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::sieve::PrimeTable;

/// Largest x accepted by the float-valued cutoffs (floor stays exact).
pub const MAX_X: f64 = 9.0e15;

/// The window of integers q whose squares lie in (Q, 2Q].
///
/// The boundary convention is half-open on the left: q^2 > Q and
/// q^2 <= 2Q.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquareModulusWindow {
    scale: f64,
    q_min: u64,
    q_max: u64,
}

impl SquareModulusWindow {
    /// Window for the dyadic scale Q (may be empty, e.g. Q = 1.5).
    pub fn new(scale: f64) -> Result<Self> {
        if !(scale > 0.0) || !scale.is_finite() || scale > MAX_X {
            return Err(Error::Config(format!(
                "window scale {scale} must be a positive real <= {MAX_X:e}"
            )));
        }
        // Smallest q with q^2 > Q.
        let mut q_min = scale.sqrt().floor() as u64;
        while square_as_f64(q_min) <= scale {
            q_min += 1;
        }
        while q_min > 1 && square_as_f64(q_min - 1) > scale {
            q_min -= 1;
        }
        // Largest q with q^2 <= 2Q.
        let two_q = 2.0 * scale;
        let mut q_max = two_q.sqrt().floor() as u64 + 1;
        while q_max > 0 && square_as_f64(q_max) > two_q {
            q_max -= 1;
        }
        Ok(Self { scale, q_min, q_max })
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Inclusive q range; empty when q_min > q_max.
    pub fn q_range(&self) -> (u64, u64) {
        (self.q_min, self.q_max)
    }

    pub fn is_empty(&self) -> bool {
        self.q_min > self.q_max
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            (self.q_max - self.q_min + 1) as usize
        }
    }

    /// The square roots q of the moduli q^2 in the window, ascending.
    pub fn roots(&self) -> impl Iterator<Item = u64> {
        self.q_min..=self.q_max
    }
}

fn square_as_f64(q: u64) -> f64 {
    (q as f64) * (q as f64)
}

fn check_x(x: f64, table: &PrimeTable) -> Result<u64> {
    if !x.is_finite() || x < 0.0 || x > MAX_X {
        return Err(Error::Domain(format!("x = {x} must be a finite real in [0, {MAX_X:e}]")));
    }
    let fx = x.floor() as u64;
    if fx > table.limit() {
        return Err(Error::Range(format!(
            "x = {x} exceeds prime table limit {}",
            table.limit()
        )));
    }
    Ok(fx)
}

/// psi(x; q, a): sum of Lambda(n) over n <= x with n = a (mod q).
///
/// Walks the progression directly and tests each member for being a
/// prime power; this is the reference route used to cross-check the
/// shared-scan path in [`ap_max_error`].
pub fn psi_ap(x: f64, q: u64, a: i64, table: &PrimeTable) -> Result<f64> {
    if q == 0 {
        return Err(Error::Domain("modulus q must be positive".into()));
    }
    let fx = check_x(x, table)?;
    let a0 = a.rem_euclid(q as i64) as u64;
    let mut n = if a0 == 0 { q } else { a0 };
    let mut acc = KahanSum::new();
    while n <= fx {
        if let Some((p, _)) = table.prime_power(n)? {
            acc.add((p as f64).ln());
        }
        n += q;
    }
    Ok(acc.value())
}

/// Progression sums for every residue class mod each given modulus, in a
/// single pass over the prime-power list.
///
/// Returns, for each modulus m in `moduli`, the vector of compensated
/// sums `psi(x; m, a)` indexed by a in 0..m. The pass over primes is
/// shared: each prime power contributes to every modulus in one scan.
/// Partitioning over moduli keeps the reduction order fixed, so results
/// are identical for any worker count.
pub fn progression_sums_multi(x: f64, moduli: &[u64], table: &PrimeTable) -> Result<Vec<Vec<f64>>> {
    let fx = check_x(x, table)?;
    if let Some(&m) = moduli.iter().find(|&&m| m == 0) {
        return Err(Error::Domain(format!("modulus {m} must be positive")));
    }
    let sums: Vec<Vec<f64>> = moduli
        .par_iter()
        .map(|&m| {
            let mut classes = vec![KahanSum::new(); m as usize];
            for p in table.primes() {
                if p > fx {
                    break;
                }
                let lp = (p as f64).ln();
                let mut pw = p;
                loop {
                    classes[(pw % m) as usize].add(lp);
                    match pw.checked_mul(p) {
                        Some(next) if next <= fx => pw = next,
                        _ => break,
                    }
                }
            }
            classes.into_iter().map(|k| k.value()).collect()
        })
        .collect();
    Ok(sums)
}

/// E(x, q): the maximal progression error over reduced residues a mod q.
///
/// Uses the shared prime-scan route of [`progression_sums_multi`]. For
/// q = 1 the single class a = 0 (equivalently a = 1) is used.
pub fn ap_max_error(x: f64, q: u64, table: &PrimeTable) -> Result<f64> {
    let sums = progression_sums_multi(x, &[q], table)?;
    Ok(max_error_from_classes(x, q, &sums[0], table)?)
}

fn max_error_from_classes(x: f64, q: u64, classes: &[f64], table: &PrimeTable) -> Result<f64> {
    let main_term = x / table.euler_phi_wide(q)? as f64;
    let mut best = 0.0f64;
    for a in 0..q {
        if num_integer::gcd(a, q) == 1 {
            let err = (classes[a as usize] - main_term).abs();
            if err > best {
                best = err;
            }
        }
    }
    Ok(best)
}

/// Sum of E(x, q^2) over the square-modulus window, computed with the
/// shared scan and a fixed q-ascending reduction order.
pub fn averaged_error(x: f64, window: &SquareModulusWindow, table: &PrimeTable) -> Result<f64> {
    if window.is_empty() {
        return Ok(0.0);
    }
    let moduli: Vec<u64> = window.roots().map(|q| q * q).collect();
    let sums = progression_sums_multi(x, &moduli, table)?;
    let mut acc = KahanSum::new();
    for (m, classes) in moduli.iter().zip(sums.iter()) {
        acc.add(max_error_from_classes(x, *m, classes, table)?);
    }
    Ok(acc.value())
}
