//! Scalar building blocks of the Bartlett samplers: the gamma law
//! `G^beta(a, alpha)` with density
//! `(alpha/beta)^{-a} / Gamma(a) * exp(-beta x / alpha) x^{a-1}`
//! (a plain gamma with shape `a` and scale `alpha/beta`), and the
//! beta-component standard normal with per-component variance `1/beta`.
//!
//! The algorithms are pinned for reproducibility: gamma draws use the
//! Marsaglia–Tsang squeeze (with the `u^{1/a}` boost below shape 1) and
//! normals use the Marsaglia polar method, both driven only by `f64` units
//! from the supplied generator, so identical seeds give identical draws on
//! every platform.

use rand::Rng;

use crate::division_algebra::{AlgebraTag, DivisionScalar};
use crate::error::{Error, Result};
use crate::specfun::ln_gamma;

/// Parameters of the scalar gamma law `G^beta(a, alpha)`.
#[derive(Debug, Clone, Copy)]
pub struct ScalarGammaParams {
    pub a: f64,
    pub alpha: f64,
    pub tag: AlgebraTag,
}

impl ScalarGammaParams {
    pub fn new(a: f64, alpha: f64, tag: AlgebraTag) -> Result<Self> {
        if !(a > 0.0) {
            return Err(Error::DomainViolation {
                requirement: format!("a > 0 (got {a})"),
            });
        }
        if !(alpha > 0.0) {
            return Err(Error::DomainViolation {
                requirement: format!("alpha > 0 (got {alpha})"),
            });
        }
        Ok(Self { a, alpha, tag })
    }

    /// Mean a * alpha / beta.
    pub fn mean(&self) -> f64 {
        self.a * self.alpha / self.tag.beta_f()
    }

    /// Variance a * (alpha / beta)^2.
    pub fn variance(&self) -> f64 {
        let scale = self.alpha / self.tag.beta_f();
        self.a * scale * scale
    }
}

/// Standard normal draw by the polar method.
pub(crate) fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    loop {
        let u = 2.0 * rng.random::<f64>() - 1.0;
        let v = 2.0 * rng.random::<f64>() - 1.0;
        let s = u * u + v * v;
        if s > 0.0 && s < 1.0 {
            return u * (-2.0 * s.ln() / s).sqrt();
        }
    }
}

/// Uniform draw on the open interval (0, 1).
fn open01<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    loop {
        let u = rng.random::<f64>();
        if u > 0.0 {
            return u;
        }
    }
}

/// Gamma(shape, 1) by Marsaglia–Tsang rejection.
fn gamma_shape_unit<R: Rng + ?Sized>(shape: f64, rng: &mut R) -> f64 {
    if shape < 1.0 {
        let u = open01(rng);
        return gamma_shape_unit(shape + 1.0, rng) * u.powf(1.0 / shape);
    }
    let d = shape - 1.0 / 3.0;
    let c = 1.0 / (9.0 * d).sqrt();
    loop {
        let x = standard_normal(rng);
        let v_cbrt = 1.0 + c * x;
        if v_cbrt <= 0.0 {
            continue;
        }
        let v = v_cbrt * v_cbrt * v_cbrt;
        let u = open01(rng);
        let x2 = x * x;
        if u < 1.0 - 0.0331 * x2 * x2 || u.ln() < 0.5 * x2 + d * (1.0 - v + v.ln()) {
            return d * v;
        }
    }
}

/// Draw from `G^beta(a, alpha)`.
pub fn sample_scalar_gamma<R: Rng + ?Sized>(params: &ScalarGammaParams, rng: &mut R) -> f64 {
    gamma_shape_unit(params.a, rng) * params.alpha / params.tag.beta_f()
}

/// Log-density of `G^beta(a, alpha)` at x > 0.
pub fn log_density_scalar_gamma(params: &ScalarGammaParams, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::DomainViolation {
            requirement: format!("x > 0 (got {x})"),
        });
    }
    let scale = params.alpha / params.tag.beta_f();
    Ok(-params.a * scale.ln() - ln_gamma(params.a) - x / scale + (params.a - 1.0) * x.ln())
}

/// CDF of `G^beta(a, alpha)` at x.
pub fn cdf_scalar_gamma(params: &ScalarGammaParams, x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Ok(0.0);
    }
    crate::specfun::gamma_p(params.a, x * params.tag.beta_f() / params.alpha)
}

/// One draw of the beta-component standard normal: each of the beta real
/// components is i.i.d. mean 0, variance 1/beta, so the squared norm follows
/// `G^beta(beta/2, 2)`.
pub fn sample_scalar_normal_beta<R: Rng + ?Sized>(tag: AlgebraTag, rng: &mut R) -> DivisionScalar {
    let sd = 1.0 / tag.beta_f().sqrt();
    let comps: Vec<f64> = (0..tag.beta()).map(|_| standard_normal(rng) * sd).collect();
    DivisionScalar::new(tag, &comps).unwrap()
}
