//! Log-log least squares, for reading off empirical growth exponents.

use crate::error::{Error, Result};

/// Result of fitting log(value) = slope * log(x) + intercept.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawFit {
    pub slope: f64,
    pub intercept: f64,
}

/// Least-squares fit of log(value) against log(x).
///
/// Requires at least two samples with distinct positive x and positive
/// values.
pub fn fit_power_law(samples: &[(f64, f64)]) -> Result<PowerLawFit> {
    if samples.len() < 2 {
        return Err(Error::Domain("power-law fit needs at least 2 samples".into()));
    }
    for &(x, v) in samples {
        if !(x > 0.0) || !(v > 0.0) || !x.is_finite() || !v.is_finite() {
            return Err(Error::Domain(format!(
                "power-law fit needs positive finite samples, got ({x}, {v})"
            )));
        }
    }
    let n = samples.len() as f64;
    let logs: Vec<(f64, f64)> = samples.iter().map(|&(x, v)| (x.ln(), v.ln())).collect();
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.0 - mean_x)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    if sxx == 0.0 {
        return Err(Error::Domain("power-law fit needs at least 2 distinct x".into()));
    }
    let slope = sxy / sxx;
    Ok(PowerLawFit { slope, intercept: mean_y - slope * mean_x })
}
