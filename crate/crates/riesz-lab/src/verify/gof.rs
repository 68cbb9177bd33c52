//! Goodness-of-fit statistics: one- and two-sample Kolmogorov–Smirnov tests
//! with asymptotic critical values, and a z-score moment comparator.

use crate::error::{Error, Result};

/// Significance level of a test; only the two standard levels are wired in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alpha {
    P01,
    P05,
}

impl Alpha {
    /// Asymptotic KS coefficient c(alpha) = sqrt(-ln(alpha/2) / 2).
    pub fn ks_coefficient(self) -> f64 {
        match self {
            Alpha::P01 => 1.627_624_304_112_358_3,
            Alpha::P05 => 1.358_102_316_156_585_2,
        }
    }
}

/// Outcome of one statistical check: passed iff statistic < critical value.
#[derive(Debug, Clone, Copy)]
pub struct GofReport {
    pub statistic: f64,
    pub critical_value: f64,
    pub n: usize,
    pub passed: bool,
}

impl GofReport {
    fn new(statistic: f64, critical_value: f64, n: usize) -> Self {
        Self {
            statistic,
            critical_value,
            n,
            passed: statistic < critical_value,
        }
    }
}

const MIN_SAMPLES: usize = 100;

/// One-sample KS test of `samples` against the continuous CDF `cdf`.
pub fn ks_test(samples: &[f64], cdf: impl Fn(f64) -> f64, alpha: Alpha) -> Result<GofReport> {
    let n = samples.len();
    if n < MIN_SAMPLES {
        return Err(Error::TooFewSamples {
            min: MIN_SAMPLES,
            got: n,
        });
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let nf = n as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        d = d.max((f - i as f64 / nf).abs());
        d = d.max((f - (i + 1) as f64 / nf).abs());
    }
    Ok(GofReport::new(d, alpha.ks_coefficient() / nf.sqrt(), n))
}

/// Two-sample KS test.
pub fn ks_two_sample(xs: &[f64], ys: &[f64], alpha: Alpha) -> Result<GofReport> {
    let (n, m) = (xs.len(), ys.len());
    if n < MIN_SAMPLES || m < MIN_SAMPLES {
        return Err(Error::TooFewSamples {
            min: MIN_SAMPLES,
            got: n.min(m),
        });
    }
    let mut a = xs.to_vec();
    let mut b = ys.to_vec();
    a.sort_by(|x, y| x.partial_cmp(y).unwrap());
    b.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let (mut i, mut j) = (0usize, 0usize);
    let mut d: f64 = 0.0;
    while i < n && j < m {
        let xi = a[i];
        let yj = b[j];
        if xi <= yj {
            i += 1;
        }
        if yj <= xi {
            j += 1;
        }
        d = d.max((i as f64 / n as f64 - j as f64 / m as f64).abs());
    }
    let crit = alpha.ks_coefficient() * ((n + m) as f64 / (n as f64 * m as f64)).sqrt();
    Ok(GofReport::new(d, crit, n))
}

/// Sample-mean z-score against an analytic mean/variance, 3-sigma acceptance.
pub fn moment_report(samples: &[f64], analytic_mean: f64, analytic_var: f64) -> Result<GofReport> {
    if samples.is_empty() {
        return Err(Error::TooFewSamples { min: 1, got: 0 });
    }
    if !(analytic_var.is_finite() && analytic_var >= 0.0) {
        return Err(Error::DomainViolation {
            requirement: format!("finite analytic variance (got {analytic_var})"),
        });
    }
    let n = samples.len();
    let mean = samples.iter().sum::<f64>() / n as f64;
    let se = (analytic_var / n as f64).sqrt();
    let z = if se == 0.0 {
        if mean == analytic_mean {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        (mean - analytic_mean).abs() / se
    };
    Ok(GofReport::new(z, 3.0, n))
}
