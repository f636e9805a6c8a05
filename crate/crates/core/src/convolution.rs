//! Multi-fold coefficient convolutions over dyadic ranges and the
//! weighted remainder sums built from them.
//!
//! Given ranges (M_i/2, M_i] and per-factor weights a_i, the convolution
//! table holds u_d = sum over all factorizations d = m_1 ... m_j with
//! m_i in range of the product a_1(m_1) ... a_j(m_j). The support is
//! contained in (D_1, D] with D = prod M_i and D_1 = 2^-j * D.

use rayon::prelude::*;

use crate::ap_error::SquareModulusWindow;
use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::riesz::progression_start;

/// Dense-output ceiling for prod M_i.
pub const MAX_DENSE_SUPPORT: u64 = 10_000_000;

/// Weight sequence for one convolution factor. The large-factor rule in
/// the bilinear machinery only ever needs the constant-1 and log weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorWeights {
    One,
    Log,
}

impl FactorWeights {
    fn eval(self, m: u64) -> f64 {
        match self {
            FactorWeights::One => 1.0,
            FactorWeights::Log => (m as f64).ln(),
        }
    }
}

/// Specification of a j-fold convolution: per-factor dyadic ranges
/// (M_i/2, M_i] and weights.
#[derive(Debug, Clone)]
pub struct ConvolutionSpec {
    ranges: Vec<u64>,
    weights: Vec<FactorWeights>,
}

impl ConvolutionSpec {
    pub fn new(ranges: Vec<u64>, weights: Vec<FactorWeights>) -> Result<Self> {
        if ranges.is_empty() {
            return Err(Error::Config("fold count must be positive".into()));
        }
        if ranges.len() != weights.len() {
            return Err(Error::Config(format!(
                "{} ranges but {} weight families",
                ranges.len(),
                weights.len()
            )));
        }
        if ranges.iter().any(|&m| m == 0) {
            return Err(Error::Config("every range bound M_i must be >= 1".into()));
        }
        let mut product: u64 = 1;
        for &m in &ranges {
            product = product
                .checked_mul(m)
                .filter(|&p| p <= MAX_DENSE_SUPPORT)
                .ok_or_else(|| {
                    Error::Config(format!(
                        "product of range bounds exceeds dense ceiling {MAX_DENSE_SUPPORT}"
                    ))
                })?;
        }
        Ok(Self { ranges, weights })
    }

    pub fn fold_count(&self) -> usize {
        self.ranges.len()
    }

    pub fn ranges(&self) -> &[u64] {
        &self.ranges
    }

    /// The support bracket (D_1, D]: D = prod M_i, D_1 = 2^-fold * D.
    pub fn support_bounds(&self) -> (f64, u64) {
        let d: u64 = self.ranges.iter().product();
        let d1 = d as f64 / (1u64 << self.fold_count().min(63)) as f64;
        (d1, d)
    }
}

/// Dense table of convolution coefficients u_d, indexed by d.
#[derive(Debug, Clone)]
pub struct ConvolutionTable {
    /// Support bracket lower bound D_1 (exclusive, may be fractional).
    pub d_lower: f64,
    /// Support bracket upper bound D (inclusive).
    pub d_upper: u64,
    values: Vec<f64>,
}

impl ConvolutionTable {
    /// Coefficient u_d (0 outside the table).
    pub fn get(&self, d: u64) -> f64 {
        self.values.get(d as usize).copied().unwrap_or(0.0)
    }

    /// Nonzero coefficients in increasing d order.
    pub fn iter_support(&self) -> impl Iterator<Item = (u64, f64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0.0)
            .map(|(d, &v)| (d as u64, v))
    }

    /// Build a single-coefficient table (u_d = weight at d), handy for
    /// reducing weighted sums to plain remainders.
    pub fn singleton(d: u64, weight: f64) -> Self {
        let mut values = vec![0.0; d as usize + 1];
        values[d as usize] = weight;
        Self { d_lower: d as f64 / 2.0, d_upper: d, values }
    }
}

/// Exact multiplicative convolution of the factor sequences, by iterated
/// pairwise folding over the dyadic supports.
pub fn convolution_coefficients(spec: &ConvolutionSpec) -> Result<ConvolutionTable> {
    let mut cur = vec![0.0f64; 2];
    cur[1] = 1.0;
    let mut cap = 1u64;
    for (&mi, &w) in spec.ranges.iter().zip(&spec.weights) {
        let new_cap = cap * mi;
        let mut next = vec![0.0f64; new_cap as usize + 1];
        let lo = mi / 2 + 1;
        for (d, &ud) in cur.iter().enumerate() {
            if ud == 0.0 {
                continue;
            }
            for m in lo..=mi {
                next[d * m as usize] += ud * w.eval(m);
            }
        }
        cur = next;
        cap = new_cap;
    }
    let (d_lower, d_upper) = spec.support_bounds();
    Ok(ConvolutionTable { d_lower, d_upper, values: cur })
}

/// How the reduced residue a^(q) is chosen for each modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueRule {
    /// Maximize the absolute inner sum over reduced residues (adversarial).
    WorstCase,
    /// Use the given residue (must be coprime to every modulus).
    Fixed(u64),
}

/// Weighted remainder sum over the square-modulus window:
/// sum over q of |sum over d of u_d * r_k(x, q^2, a, d)|, with a chosen
/// per modulus by `rule`.
///
/// For each modulus the inner double sum is evaluated in one pass over
/// (d, multiples of d), accumulating every residue class at once.
pub fn weighted_remainder_sum(
    coeffs: &ConvolutionTable,
    x: f64,
    window: &SquareModulusWindow,
    k: u32,
    rule: ResidueRule,
) -> Result<f64> {
    if k > crate::riesz::MAX_RIESZ_ORDER {
        return Err(Error::Domain(format!("Riesz order k = {k} exceeds cap")));
    }
    if !x.is_finite() || x < 0.0 || x > crate::ap_error::MAX_X {
        return Err(Error::Domain(format!("x = {x} out of range")));
    }
    if window.is_empty() {
        return Ok(0.0);
    }
    let fx = x.floor() as u64;
    let kfact: f64 = (1..=k as u64).map(|i| i as f64).product();
    let support: Vec<(u64, f64)> = coeffs.iter_support().collect();

    let per_q: Vec<Result<f64>> = window
        .roots()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&q| {
            let m = q * q;
            // Raw class sums of u_d * (log x/l)^k over l = 0 (mod d).
            let mut classes = vec![KahanSum::new(); m as usize];
            for &(d, ud) in &support {
                let mut l = d;
                while l <= fx {
                    classes[(l % m) as usize].add(ud * (x / l as f64).ln().powi(k as i32));
                    l += d;
                }
            }
            // Main term sum_d u_d * x / (q^2 d), shared by every class.
            let mut main = KahanSum::new();
            for &(d, ud) in &support {
                main.add(ud * x / (m as f64 * d as f64));
            }
            let inner = |a: u64| classes[a as usize].value() / kfact - main.value();
            match rule {
                ResidueRule::WorstCase => {
                    let mut best = 0.0f64;
                    for a in 0..m {
                        if num_integer::gcd(a, m) == 1 {
                            best = best.max(inner(a).abs());
                        }
                    }
                    Ok(best)
                }
                ResidueRule::Fixed(a) => {
                    let a = a % m;
                    if num_integer::gcd(a, m) != 1 {
                        return Err(Error::Domain(format!(
                            "fixed residue {a} is not coprime to modulus {m}"
                        )));
                    }
                    Ok(inner(a).abs())
                }
            }
        })
        .collect();

    let mut acc = KahanSum::new();
    for r in per_q {
        acc.add(r?);
    }
    Ok(acc.value())
}

/// Reference route for tests: the same quantity via independent
/// per-(a, d) Riesz remainders.
pub fn weighted_remainder_sum_direct(
    coeffs: &ConvolutionTable,
    x: f64,
    window: &SquareModulusWindow,
    k: u32,
    rule: ResidueRule,
) -> Result<f64> {
    let mut acc = KahanSum::new();
    for q in window.roots() {
        let m = q * q;
        let inner = |a: u64| -> Result<f64> {
            let mut s = KahanSum::new();
            for (d, ud) in coeffs.iter_support() {
                let p = crate::riesz::RieszParams { x, q: m, a: a as i64, d, k };
                s.add(ud * crate::riesz::riesz_remainder(&p)?);
            }
            Ok(s.value())
        };
        let contribution = match rule {
            ResidueRule::WorstCase => {
                let mut best = 0.0f64;
                for a in 0..m {
                    if num_integer::gcd(a, m) == 1 {
                        best = best.max(inner(a)?.abs());
                    }
                }
                best
            }
            ResidueRule::Fixed(a) => inner(a % m)?.abs(),
        };
        acc.add(contribution);
    }
    Ok(acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_fold_identity() {
        let spec =
            ConvolutionSpec::new(vec![2, 2], vec![FactorWeights::One, FactorWeights::One])
                .unwrap();
        let t = convolution_coefficients(&spec).unwrap();
        assert_eq!(t.get(4), 1.0);
        for d in 0..4 {
            assert_eq!(t.get(d), 0.0, "d={d}");
        }
        assert_eq!(t.d_upper, 4);
        assert_eq!(t.d_lower, 1.0);
    }

    #[test]
    fn single_fold_log() {
        let spec = ConvolutionSpec::new(vec![4], vec![FactorWeights::Log]).unwrap();
        let t = convolution_coefficients(&spec).unwrap();
        assert!((t.get(3) - 3f64.ln()).abs() < 1e-15);
        assert!((t.get(4) - 4f64.ln()).abs() < 1e-15);
        assert_eq!(t.get(2), 0.0);
    }

    #[test]
    fn triple_fold_counts() {
        let spec = ConvolutionSpec::new(
            vec![4, 4, 4],
            vec![FactorWeights::One, FactorWeights::One, FactorWeights::One],
        )
        .unwrap();
        let t = convolution_coefficients(&spec).unwrap();
        // 27 = 3*3*3 only; 36 = perms of (3,3,4); 64 = 4*4*4.
        assert_eq!(t.get(27), 1.0);
        assert_eq!(t.get(36), 3.0);
        assert_eq!(t.get(48), 3.0);
        assert_eq!(t.get(64), 1.0);
        assert_eq!(t.d_upper, 64);
        assert_eq!(t.d_lower, 8.0);
    }

    #[test]
    fn support_bracket_holds() {
        let spec = ConvolutionSpec::new(
            vec![6, 3, 5],
            vec![FactorWeights::One, FactorWeights::Log, FactorWeights::One],
        )
        .unwrap();
        let t = convolution_coefficients(&spec).unwrap();
        for (d, u) in t.iter_support() {
            assert!(u != 0.0);
            assert!(d as f64 > t.d_lower && d <= t.d_upper, "d={d} outside bracket");
        }
    }

    #[test]
    fn counts_match_exhaustive_enumeration() {
        let ranges = vec![6u64, 4, 3];
        let spec =
            ConvolutionSpec::new(ranges.clone(), vec![FactorWeights::One; 3]).unwrap();
        let t = convolution_coefficients(&spec).unwrap();
        let mut expect = std::collections::BTreeMap::new();
        for m1 in 4..=6u64 {
            for m2 in 3..=4u64 {
                for m3 in 2..=3u64 {
                    *expect.entry(m1 * m2 * m3).or_insert(0u64) += 1;
                }
            }
        }
        for d in 0..=t.d_upper {
            assert_eq!(t.get(d), *expect.get(&d).unwrap_or(&0) as f64, "d={d}");
        }
    }

    #[test]
    fn rejects_oversized_product() {
        let spec = ConvolutionSpec::new(vec![100_000, 101], vec![FactorWeights::One; 2]);
        assert!(spec.is_err());
    }

    #[test]
    fn weighted_sum_reduces_to_plain_remainders() {
        let coeffs = ConvolutionTable::singleton(1, 1.0);
        let window = SquareModulusWindow::new(8.0).unwrap();
        let got =
            weighted_remainder_sum(&coeffs, 50.0, &window, 0, ResidueRule::WorstCase).unwrap();
        // Direct: per q in {3,4}, max over reduced a mod q^2 of |r_0(50, q^2, a, 1)|.
        let mut expect = 0.0;
        for q in [3u64, 4] {
            let m = q * q;
            let mut best = 0.0f64;
            for a in 0..m {
                if num_integer::gcd(a, m) == 1 {
                    let p = crate::riesz::RieszParams { x: 50.0, q: m, a: a as i64, d: 1, k: 0 };
                    best = best.max(crate::riesz::riesz_remainder(&p).unwrap().abs());
                }
            }
            expect += best;
        }
        assert!((got - expect).abs() < 1e-9 * expect.max(1.0));
    }

    #[test]
    fn weighted_sum_matches_double_loop() {
        let spec =
            ConvolutionSpec::new(vec![4, 4], vec![FactorWeights::One, FactorWeights::Log])
                .unwrap();
        let coeffs = convolution_coefficients(&spec).unwrap();
        let window = SquareModulusWindow::new(50.0).unwrap();
        for k in [0u32, 4] {
            for rule in [ResidueRule::WorstCase, ResidueRule::Fixed(1)] {
                let fast = weighted_remainder_sum(&coeffs, 1000.0, &window, k, rule).unwrap();
                let slow =
                    weighted_remainder_sum_direct(&coeffs, 1000.0, &window, k, rule).unwrap();
                assert!(
                    (fast - slow).abs() <= 1e-9 * slow.abs().max(1.0),
                    "k={k} rule={rule:?}: {fast} vs {slow}"
                );
            }
        }
    }

    #[test]
    fn empty_window_is_zero() {
        let coeffs = ConvolutionTable::singleton(1, 1.0);
        let window = SquareModulusWindow::new(1.5).unwrap();
        assert_eq!(
            weighted_remainder_sum(&coeffs, 100.0, &window, 0, ResidueRule::WorstCase).unwrap(),
            0.0
        );
    }

    #[test]
    fn fixed_rule_requires_coprimality() {
        let coeffs = ConvolutionTable::singleton(1, 1.0);
        let window = SquareModulusWindow::new(8.0).unwrap();
        // 3 shares a factor with 9.
        assert!(
            weighted_remainder_sum(&coeffs, 100.0, &window, 0, ResidueRule::Fixed(3)).is_err()
        );
    }
}
