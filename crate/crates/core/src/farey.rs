//! Exact-rational counting of Farey points with square and
//! g-times-square denominators near a target.
//!
//! All distance comparisons happen in integer arithmetic (i128 cross
//! multiplication), so boundary ties `dist == Delta` are decided exactly
//! and consistently: the counts include the boundary.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational used throughout the Farey module.
pub type Rat = Ratio<i128>;

/// Total admissible-fraction budget for the sweep (desk scale).
pub const SWEEP_BUDGET: u64 = 4_000_000;

/// Convenience constructor; errors on a zero denominator.
pub fn rat(numer: i128, denom: i128) -> Result<Rat> {
    if denom == 0 {
        return Err(Error::Domain("rational with zero denominator".into()));
    }
    Ok(Rat::new(numer, denom))
}

/// Parse "p/q" or a plain integer into an exact rational.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse = |part: &str| -> Result<i128> {
        part.trim()
            .parse::<i128>()
            .map_err(|_| Error::Domain(format!("cannot parse '{part}' as integer")))
    };
    match s.split_once('/') {
        Some((n, d)) => rat(parse(n)?, parse(d)?),
        None => Ok(Rat::from_integer(parse(s)?)),
    }
}

/// Distance from theta to the nearest integer, exactly.
pub fn dist_to_nearest_int(theta: &Rat) -> Rat {
    let frac = theta - theta.floor();
    let complement = Rat::from_integer(1) - frac;
    frac.min(complement)
}

/// A counting query: target point, distance bound, denominator family
/// g * q^2 with q <= q_bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareyQuery {
    target: Rat,
    delta: Rat,
    q_bound: u64,
    g: u64,
}

impl FareyQuery {
    /// The target is reduced mod 1; delta must be a nonnegative rational
    /// (delta = 0 counts exact hits, delta >= 1/2 counts everything).
    pub fn new(target: Rat, delta: Rat, q_bound: u64, g: u64) -> Result<Self> {
        if delta.is_negative() {
            return Err(Error::Domain(format!("delta = {delta} must be >= 0")));
        }
        if q_bound == 0 || g == 0 {
            return Err(Error::Domain("q bound and g must be positive".into()));
        }
        let target = target.clone() - target.floor();
        Ok(Self { target, delta, q_bound, g })
    }

    pub fn target(&self) -> &Rat {
        &self.target
    }

    pub fn delta(&self) -> &Rat {
        &self.delta
    }

    pub fn q_bound(&self) -> u64 {
        self.q_bound
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    pub fn with_target(&self, target: Rat) -> Result<Self> {
        Self::new(target, self.delta.clone(), self.q_bound, self.g)
    }
}

/// Is dist(a/m, target) <= delta? Pure integer cross multiplication.
fn within_delta(a: u64, m: u64, target: &Rat, delta: &Rat) -> bool {
    let td = *target.denom();
    let tn = *target.numer();
    let big_m = m as i128 * td;
    // a/m - target = (a*td - tn*m) / (m*td), reduced mod 1 into [0, M).
    let diff = (a as i128 * td - tn * m as i128).rem_euclid(big_m);
    let dist_num = diff.min(big_m - diff);
    // dist = dist_num / M <= delta ?
    dist_num * delta.denom() <= delta.numer() * big_m
}

/// Count coprime pairs (a, q) with 1 <= a <= q^2, q <= q_bound,
/// gcd(a, q) = 1 and dist(a/q^2, target) <= delta. Requires g = 1.
pub fn count_square_farey(query: &FareyQuery) -> Result<u64> {
    if query.g != 1 {
        return Err(Error::Domain(format!(
            "square-denominator count is defined for g = 1, got g = {}",
            query.g
        )));
    }
    let mut count = 0u64;
    for q in 1..=query.q_bound {
        let m = q * q;
        for a in 1..=m {
            if num_integer::gcd(a, q) == 1 && within_delta(a % m, m, &query.target, &query.delta)
            {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Count pairs (a, q) with 0 <= a <= g*q^2 - 1, gcd(a, g*q^2) = 1,
/// q <= q_bound and dist(a/(g*q^2), target) <= delta.
///
/// gcd(0, m) is m, so a = 0 is admissible only for modulus 1.
pub fn count_scaled_farey(query: &FareyQuery) -> u64 {
    let mut count = 0u64;
    for q in 1..=query.q_bound {
        let m = query.g * q * q;
        for a in 0..m {
            if num_integer::gcd(a, m) == 1 && within_delta(a, m, &query.target, &query.delta) {
                count += 1;
            }
        }
    }
    count
}

/// All admissible fractions (a, m = g*q^2) of the scaled family, for
/// q <= q_bound, in (q, a) lexicographic order.
pub fn scaled_fractions(q_bound: u64, g: u64) -> Result<Vec<(u64, u64)>> {
    let mut total: u64 = 0;
    for q in 1..=q_bound {
        total = total
            .checked_add(g * q * q)
            .filter(|&t| t <= SWEEP_BUDGET)
            .ok_or_else(|| {
                Error::Budget(format!(
                    "fraction enumeration for q <= {q_bound}, g = {g} exceeds {SWEEP_BUDGET}"
                ))
            })?;
    }
    let mut out = Vec::new();
    for q in 1..=q_bound {
        let m = g * q * q;
        for a in 0..m {
            if num_integer::gcd(a, m) == 1 {
                out.push((a, m));
            }
        }
    }
    Ok(out)
}

/// Result of the event sweep: the maximal overlap count and a point
/// attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepResult {
    pub max_count: u64,
    pub witness: Rat,
}

/// Exact maximum over all real alpha of the scaled-Farey count, by an
/// event sweep over interval endpoints.
///
/// Each admissible fraction contributes the closed arc
/// [a/m - delta, a/m + delta] wrapped mod 1; arcs crossing 0 are split.
/// Closing events sort after opening events at equal positions, so
/// closed intervals that share an endpoint overlap there, matching the
/// boundary-inclusive distance comparison.
pub fn max_overlap_sweep(delta: &Rat, q_bound: u64, g: u64) -> Result<SweepResult> {
    if delta.is_negative() {
        return Err(Error::Domain(format!("delta = {delta} must be >= 0")));
    }
    if q_bound == 0 || g == 0 {
        return Err(Error::Domain("q bound and g must be positive".into()));
    }
    let fractions = scaled_fractions(q_bound, g)?;
    let half = rat(1, 2)?;
    if delta >= &half {
        // Every point of the circle is within 1/2 of every fraction.
        return Ok(SweepResult { max_count: fractions.len() as u64, witness: Rat::zero() });
    }

    const OPEN: u8 = 0;
    const CLOSE: u8 = 1;
    let one = Rat::from_integer(1);
    let mut events: Vec<(Rat, u8)> = Vec::with_capacity(2 * fractions.len());
    for &(a, m) in &fractions {
        let v = rat(a as i128, m as i128)?;
        let lo = v.clone() - delta;
        let hi = v + delta;
        if lo.is_negative() {
            events.push((lo + one.clone(), OPEN));
            events.push((one.clone(), CLOSE));
            events.push((Rat::zero(), OPEN));
            events.push((hi, CLOSE));
        } else if hi >= one {
            events.push((lo, OPEN));
            events.push((one.clone(), CLOSE));
            events.push((Rat::zero(), OPEN));
            events.push((hi - one.clone(), CLOSE));
        } else {
            events.push((lo, OPEN));
            events.push((hi, CLOSE));
        }
    }
    events.sort();

    let mut depth = 0u64;
    let mut max_count = 0u64;
    let mut witness = Rat::zero();
    for (pos, kind) in events {
        if kind == OPEN {
            depth += 1;
            if depth > max_count {
                max_count = depth;
                witness = pos;
            }
        } else {
            depth -= 1;
        }
    }
    Ok(SweepResult { max_count, witness })
}

/// The unique split a = b + q^2 * n with 0 <= b < q^2, 0 <= n < g.
pub fn residue_split(a: u64, q: u64, g: u64) -> Result<(u64, u64)> {
    if q == 0 || g == 0 {
        return Err(Error::Domain("q and g must be positive".into()));
    }
    let qsq = q
        .checked_mul(q)
        .ok_or_else(|| Error::Domain(format!("q = {q} overflows q^2")))?;
    let m = qsq
        .checked_mul(g)
        .ok_or_else(|| Error::Domain(format!("g*q^2 overflows for q = {q}, g = {g}")))?;
    if a >= m {
        return Err(Error::Domain(format!("a = {a} outside [0, g*q^2 = {m})")));
    }
    Ok((a % qsq, a / qsq))
}

/// Observed count divided by the spacing-bound envelope
/// (Q/delta)^eps * (Q^3 * delta + sqrt(Q)), for empirical constant
/// tracking of the square-denominator count.
pub fn spacing_bound_ratio(query: &FareyQuery, eps: f64) -> Result<f64> {
    let count = count_square_farey(query)?;
    if count == 0 {
        return Ok(0.0);
    }
    let q = query.q_bound as f64;
    let delta = rat_to_f64(&query.delta);
    let envelope = (q / delta).powf(eps) * (q * q * q * delta + q.sqrt());
    Ok(count as f64 / envelope)
}

/// Nearest-double view of an exact rational.
pub fn rat_to_f64(r: &Rat) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
