//! The four beta-Riesz distributions (c/k family, type I/II) and their
//! exact samplers via pairs of Riesz draws.
//!
//! Writing `c0 = (m-1) beta / 2`, the densities are
//!
//! ```text
//! c, type I :  |S|^{a-c0-1} q_k(S)      |I-S|^{b-c0-1} q_t(I-S)      / B_c[a,k; b,t]
//! c, type II:  |R|^{a-c0-1} q_k(R)      |I+R|^{-(a+b)} / q_{k+t}(I+R) / B_c[a,k; b,t]
//! k, type I :  |S|^{a-c0-1} / q_k(S)    |I-S|^{b-c0-1} / q_t(I-S)    / B_k[a,k; b,t]
//! k, type II:  |R|^{a-c0-1} / q_k(R)    |I+R|^{-(a+b)} q_{k+t}(I+R)  / B_k[a,k; b,t]
//! ```
//!
//! with type I supported on `0 < S < I` and type II on the full cone.
//!
//! # Samplers and parameter order
//!
//! The constructions draw two independent identity-scale Riesz matrices
//! `X1 ~ (a, kappa)` and `X2 ~ (b, tau)` (type I Riesz draws for the c
//! family, type II draws for the k family) and return
//!
//! * type I: `S = W^{-1/2} X2 W^{-1/2'}` with `W = X1 + X2`,
//! * type II: `R = X1^{-1/2} X2 X1^{-1/2'}`,
//!
//! all square roots taken as triangular Cholesky factors. Because the
//! returned matrix is built around `X2`, the sampled law coincides with the
//! density above at the *interchanged* parameter pairs `(b, tau; a, kappa)`;
//! at m = 1 with zero weights the type I draw is a `Beta(b, a)` variable and
//! the type II draw a `BetaPrime(b, a)` variable. Tests that compare the two
//! routes apply the interchange.

use rand::Rng;

use crate::division_algebra::{AlgebraTag, DivisionMatrix, HermitianPD};
use crate::error::{Error, Result};
use crate::riesz::{sample_riesz_bartlett, RieszParams, Variant};
use crate::specfun::{ln_c_beta, ln_k_beta, log_q_kappa, LogValue, Weight};

/// c-beta functions generalize the classical multivariate beta, k-beta
/// functions the Khatri convention with negated weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    C,
    K,
}

/// Validated parameter bundle (a, kappa, b, tau, family, variant).
#[derive(Debug, Clone)]
pub struct BetaRieszParams {
    tag: AlgebraTag,
    m: usize,
    a: f64,
    kappa: Weight,
    b: f64,
    tau: Weight,
    family: Family,
    variant: Variant,
    ln_norm: LogValue,
}

impl BetaRieszParams {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        tag: AlgebraTag,
        m: usize,
        a: f64,
        kappa: Weight,
        b: f64,
        tau: Weight,
        family: Family,
        variant: Variant,
    ) -> Result<Self> {
        if kappa.len() != m || tau.len() != m {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "weights have {} and {} parts but m = {m}",
                    kappa.len(),
                    tau.len()
                ),
            });
        }
        let beta = tag.beta_f();
        let c0 = (m as f64 - 1.0) * beta / 2.0;
        let ln_norm = match family {
            Family::C => {
                if !(a + kappa.last() > c0) {
                    return Err(Error::DomainViolation {
                        requirement: format!("a + k_m > (m-1)beta/2 = {c0} for the c family"),
                    });
                }
                if !(b + tau.last() > c0) {
                    return Err(Error::DomainViolation {
                        requirement: format!("b + t_m > (m-1)beta/2 = {c0} for the c family"),
                    });
                }
                ln_c_beta(tag, m, a, &kappa, b, &tau)?
            }
            Family::K => {
                if !(a - kappa.first() > c0) {
                    return Err(Error::DomainViolation {
                        requirement: format!("a - k_1 > (m-1)beta/2 = {c0} for the k family"),
                    });
                }
                if !(b - tau.first() > c0) {
                    return Err(Error::DomainViolation {
                        requirement: format!("b - t_1 > (m-1)beta/2 = {c0} for the k family"),
                    });
                }
                ln_k_beta(tag, m, a, &kappa, b, &tau)?
            }
        };
        Ok(Self {
            tag,
            m,
            a,
            kappa,
            b,
            tau,
            family,
            variant,
            ln_norm,
        })
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn kappa(&self) -> &Weight {
        &self.kappa
    }

    pub fn tau(&self) -> &Weight {
        &self.tau
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Log of the normalizing beta function.
    pub fn ln_normalizer(&self) -> LogValue {
        self.ln_norm
    }

    /// Parameters with `(a, kappa)` and `(b, tau)` interchanged.
    pub fn swapped(&self) -> Result<Self> {
        Self::new(
            self.tag,
            self.m,
            self.b,
            self.tau.clone(),
            self.a,
            self.kappa.clone(),
            self.family,
            self.variant,
        )
    }

    /// The pairwise constructions are stated on the stronger domain
    /// `a - k_1 > (m-1)beta/2` and `b - t_1 > (m-1)beta/2` for both
    /// families; samplers enforce it on top of the density domain.
    fn check_construction_domain(&self) -> Result<()> {
        let c0 = (self.m as f64 - 1.0) * self.tag.beta_f() / 2.0;
        if !(self.a - self.kappa.first() > c0) {
            return Err(Error::DomainViolation {
                requirement: format!("a - k_1 > (m-1)beta/2 = {c0} for the pair construction"),
            });
        }
        if !(self.b - self.tau.first() > c0) {
            return Err(Error::DomainViolation {
                requirement: format!("b - t_1 > (m-1)beta/2 = {c0} for the pair construction"),
            });
        }
        Ok(())
    }

    fn riesz_pair(&self) -> Result<(RieszParams, RieszParams)> {
        let variant = match self.family {
            Family::C => Variant::TypeI,
            Family::K => Variant::TypeII,
        };
        let x1 = RieszParams::with_identity_sigma(
            self.tag,
            self.m,
            self.a,
            self.kappa.clone(),
            variant,
        )?;
        let x2 =
            RieszParams::with_identity_sigma(self.tag, self.m, self.b, self.tau.clone(), variant)?;
        Ok((x1, x2))
    }

    fn check_argument(&self, x: &HermitianPD) -> Result<()> {
        if x.tag() != self.tag {
            return Err(Error::TagMismatch {
                expected: self.tag.beta() as u32,
                got: x.tag().beta() as u32,
            });
        }
        if x.dim() != self.m {
            return Err(Error::DimensionMismatch {
                context: format!("argument is {}x{} but m = {}", x.dim(), x.dim(), self.m),
            });
        }
        Ok(())
    }
}

/// Log-density of the beta-Riesz distribution at M.
///
/// Type I additionally requires `I - M` positive definite; the error
/// reports the boundary violation.
pub fn log_density_beta_riesz(params: &BetaRieszParams, m_arg: &HermitianPD) -> Result<f64> {
    params.check_argument(m_arg)?;
    let beta = params.tag.beta_f();
    let c0 = (params.m as f64 - 1.0) * beta / 2.0;
    let ln_b = params.ln_norm.log_abs;
    let exponent = params.a - c0 - 1.0;
    let q_sign = match params.family {
        Family::C => 1.0,
        Family::K => -1.0,
    };
    match params.variant {
        Variant::TypeI => {
            let complement =
                m_arg
                    .complement_to_identity()
                    .map_err(|_| Error::NotPositiveDefinite {
                        reason: "type I support requires I - S positive definite".into(),
                    })?;
            Ok(-ln_b
                + exponent * m_arg.logdet()
                + q_sign * log_q_kappa(m_arg, &params.kappa)?
                + (params.b - c0 - 1.0) * complement.logdet()
                + q_sign * log_q_kappa(&complement, &params.tau)?)
        }
        Variant::TypeII => {
            let id = DivisionMatrix::identity(params.tag, params.m);
            let shifted = HermitianPD::new(id.add(m_arg.matrix())?)?;
            let kt = params.kappa.add(&params.tau)?;
            Ok(
                -ln_b + exponent * m_arg.logdet() + q_sign * log_q_kappa(m_arg, &params.kappa)?
                    - (params.a + params.b) * shifted.logdet()
                    - q_sign * log_q_kappa(&shifted, &kt)?,
            )
        }
    }
}

const MAX_RETRIES: u32 = 100;

/// Type I draw: `S = W^{-1/2} X2 W^{-1/2'}` with `W = X1 + X2`.
///
/// With `U` the upper Cholesky factor of `W` (`W = U* U`), the square root
/// pairing `W = F F*` forces `F = U*`, so the returned matrix is
/// `S = U^{-*} X2 U^{-1}`; both `S` and `I - S` are positive definite by
/// construction. Draws whose boundary checks fail in floating point are
/// rejected and retried a bounded number of times.
pub fn sample_beta_riesz_type1<R: Rng + ?Sized>(
    params: &BetaRieszParams,
    rng: &mut R,
) -> Result<HermitianPD> {
    if params.variant != Variant::TypeI {
        return Err(Error::Unsupported {
            context: "sample_beta_riesz_type1 requires type I parameters".into(),
        });
    }
    params.tag.require_matrix_ops()?;
    params.check_construction_domain()?;
    let (p1, p2) = params.riesz_pair()?;
    let mut last = String::new();
    for _ in 0..MAX_RETRIES {
        let x1 = sample_riesz_bartlett(&p1, rng)?;
        let x2 = sample_riesz_bartlett(&p2, rng)?;
        let w = match x1.add(&x2) {
            Ok(w) => w,
            Err(e) => {
                last = e.to_string();
                continue;
            }
        };
        let v = w.cholesky_upper().invert();
        let s_raw = v
            .as_matrix()
            .conj_transpose()
            .matmul(x2.matrix())?
            .matmul(v.as_matrix())?
            .hermitian_part()?;
        let s = match HermitianPD::new(s_raw) {
            Ok(s) => s,
            Err(e) => {
                last = e.to_string();
                continue;
            }
        };
        match s.complement_to_identity() {
            Ok(_) => return Ok(s),
            Err(e) => {
                last = e.to_string();
                continue;
            }
        }
    }
    Err(Error::RetryExhausted {
        attempts: MAX_RETRIES,
        reason: last,
    })
}

/// Type II draw: `R = X1^{-1/2} X2 X1^{-1/2'}`.
///
/// Here the pairing `X1 = F' F` makes `F = U` the upper Cholesky factor
/// itself, so the returned matrix is `R = U^{-1} X2 U^{-*}`.
pub fn sample_beta_riesz_type2<R: Rng + ?Sized>(
    params: &BetaRieszParams,
    rng: &mut R,
) -> Result<HermitianPD> {
    if params.variant != Variant::TypeII {
        return Err(Error::Unsupported {
            context: "sample_beta_riesz_type2 requires type II parameters".into(),
        });
    }
    params.tag.require_matrix_ops()?;
    params.check_construction_domain()?;
    let (p1, p2) = params.riesz_pair()?;
    let mut last = String::new();
    for _ in 0..MAX_RETRIES {
        let x1 = sample_riesz_bartlett(&p1, rng)?;
        let x2 = sample_riesz_bartlett(&p2, rng)?;
        let v = x1.cholesky_upper().invert();
        let r_raw = v
            .as_matrix()
            .matmul(x2.matrix())?
            .matmul(&v.as_matrix().conj_transpose())?
            .hermitian_part()?;
        match HermitianPD::new(r_raw) {
            Ok(r) => return Ok(r),
            Err(e) => {
                last = e.to_string();
            }
        }
    }
    Err(Error::RetryExhausted {
        attempts: MAX_RETRIES,
        reason: last,
    })
}

/// The map from the full cone into the open interval,
/// `S = (I+R)^{-1/2} R (I+R)^{-1/2'}`, with the same Cholesky orientation
/// as the type I construction: `S = U^{-*} R U^{-1}` for `I + R = U* U`.
/// At m = 1 this is `r / (1 + r)` and carries type II draws exactly onto
/// type I draws; the acceptance suite verifies that identity in law.
pub fn type2_to_type1(r: &HermitianPD) -> Result<HermitianPD> {
    let id = DivisionMatrix::identity(r.tag(), r.dim());
    let w = HermitianPD::new(id.add(r.matrix())?)?;
    let v = w.cholesky_upper().invert();
    let s = v
        .as_matrix()
        .conj_transpose()
        .matmul(r.matrix())?
        .matmul(v.as_matrix())?
        .hermitian_part()?;
    HermitianPD::new(s)
}
