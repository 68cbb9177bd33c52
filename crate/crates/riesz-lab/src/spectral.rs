//! Joint eigenvalue densities of the beta-Riesz laws.
//!
//! The generic eigenvalue transform contributes the constant
//! `pi^{m^2 beta/2 + rho} / G_m[m beta / 2]` together with the Vandermonde
//! factor `prod_{i<j} (l_i - l_j)^beta`, where
//!
//! ```text
//! rho = 0 (beta=1), -m (beta=2), -2m (beta=4), -4m (beta=8).
//! ```
//!
//! On top of that, per ordered eigenvalue (descending):
//!
//! ```text
//! c, type I :  l_i^{a+k_i-c0-1} (1-l_i)^{b+t_i-c0-1}
//! c, type II:  d_i^{a+k_i-c0-1} (1+d_i)^{-(a+b+k_i+t_i)}
//! k, type I :  l_i^{a-k_i-c0-1} (1-l_i)^{b-t_i-c0-1}
//! k, type II:  d_i^{a-k_i-c0-1} (1+d_i)^{-(a+b-k_i-t_i)}
//! ```
//!
//! divided by the matching beta-function normalizer, with
//! `c0 = (m-1) beta / 2`. All four formulas are evaluated for every beta in
//! {1, 2, 4, 8}; they attach the i-th weight part to the i-th ordered
//! eigenvalue, which is exact when the weights are constant (the highest
//! weight vector is not orthogonally invariant otherwise), so Monte Carlo
//! cross-validation against the matrix samplers is confined to constant
//! weights.

use crate::beta_riesz::{BetaRieszParams, Family};
use crate::division_algebra::{AlgebraTag, HermitianPD};
use crate::error::{Error, Result};
use crate::riesz::Variant;
use crate::specfun::ln_mv_gamma;

const LN_PI: f64 = 1.144_729_885_849_400_2;

/// Parameters of a joint eigenvalue density; a thin wrapper that pins the
/// eigenvalue-transform constant to the base matrix law.
#[derive(Debug, Clone)]
pub struct EigenDensityParams {
    base: BetaRieszParams,
}

impl EigenDensityParams {
    pub fn new(base: BetaRieszParams) -> Self {
        Self { base }
    }

    pub fn base(&self) -> &BetaRieszParams {
        &self.base
    }

    /// The exponent correction rho(beta, m).
    pub fn rho(&self) -> f64 {
        rho(self.base.tag(), self.base.dim())
    }
}

/// rho(beta, m): 0, -m, -2m, -4m for beta = 1, 2, 4, 8.
pub fn rho(tag: AlgebraTag, m: usize) -> f64 {
    let m = m as f64;
    match tag {
        AlgebraTag::Real => 0.0,
        AlgebraTag::Complex => -m,
        AlgebraTag::Quaternion => -2.0 * m,
        AlgebraTag::Octonion => -4.0 * m,
    }
}

/// log prod_{i<j} (l_i - l_j)^beta for strictly descending positive input.
pub fn log_vandermonde_beta(lams: &[f64], tag: AlgebraTag) -> Result<f64> {
    check_descending_positive(lams)?;
    let beta = tag.beta_f();
    let mut out = 0.0;
    for i in 0..lams.len() {
        for j in (i + 1)..lams.len() {
            out += (lams[i] - lams[j]).ln();
        }
    }
    Ok(beta * out)
}

fn check_descending_positive(lams: &[f64]) -> Result<()> {
    if lams.is_empty() {
        return Err(Error::EigenvalueOrdering {
            reason: "empty eigenvalue vector".into(),
        });
    }
    if !lams.iter().all(|l| l.is_finite() && *l > 0.0) {
        return Err(Error::EigenvalueOrdering {
            reason: "eigenvalues must be positive".into(),
        });
    }
    for w in lams.windows(2) {
        if !(w[0] > w[1]) {
            return Err(Error::EigenvalueOrdering {
                reason: format!(
                    "expected strictly descending order, got {} before {}",
                    w[0], w[1]
                ),
            });
        }
    }
    Ok(())
}

/// Log of the joint density of the ordered eigenvalues.
///
/// Type I requires `1 > l_1 > ... > l_m > 0`, type II only descending
/// positive entries. Accepts all four algebras; the formula is analytic in
/// beta, so no matrix operations are involved.
pub fn log_joint_eigen_density(params: &EigenDensityParams, lams: &[f64]) -> Result<f64> {
    let base = params.base();
    let m = base.dim();
    let tag = base.tag();
    if lams.len() != m {
        return Err(Error::DimensionMismatch {
            context: format!("expected {m} eigenvalues, got {}", lams.len()),
        });
    }
    check_descending_positive(lams)?;
    if base.variant() == Variant::TypeI && !(lams[0] < 1.0) {
        return Err(Error::EigenvalueOrdering {
            reason: format!("type I eigenvalues must stay below 1, got {}", lams[0]),
        });
    }
    let beta = tag.beta_f();
    let c0 = (m as f64 - 1.0) * beta / 2.0;
    let m_f = m as f64;

    let mut out = (m_f * m_f * beta / 2.0 + params.rho()) * LN_PI
        - ln_mv_gamma(tag, m, m_f * beta / 2.0)?.log_abs
        - base.ln_normalizer().log_abs
        + log_vandermonde_beta(lams, tag)?;

    let weight_sign = match base.family() {
        Family::C => 1.0,
        Family::K => -1.0,
    };
    for (i, &l) in lams.iter().enumerate() {
        let ki = weight_sign * base.kappa().part(i);
        let ti = weight_sign * base.tau().part(i);
        match base.variant() {
            Variant::TypeI => {
                out += (base.a() + ki - c0 - 1.0) * l.ln()
                    + (base.b() + ti - c0 - 1.0) * (1.0 - l).ln();
            }
            Variant::TypeII => {
                out += (base.a() + ki - c0 - 1.0) * l.ln()
                    - (base.a() + base.b() + ki + ti) * (1.0 + l).ln();
            }
        }
    }
    Ok(out)
}

/// Sorted descending eigenvalues of one sampled matrix; bridges the matrix
/// samplers to the eigenvalue densities.
pub fn empirical_eigenvalues(draw: &HermitianPD) -> Result<Vec<f64>> {
    draw.eigenvalues()
}
