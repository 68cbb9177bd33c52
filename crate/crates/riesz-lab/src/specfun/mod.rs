//! Log-domain special functions of weight kappa.
//!
//! All values are returned as [`LogValue`] (sign plus log-magnitude);
//! densities multiply many large and small factors, so callers should only
//! exponentiate at the very end.
//!
//! Conventions, writing `beta` for the algebra dimension and
//! `c0 = (m-1) beta / 2`:
//!
//! * multivariate gamma
//!   `G_m[a] = pi^{m(m-1)beta/4} prod_i Gamma(a - (i-1) beta/2)`, `a > c0`;
//! * weighted gamma (positive weight)
//!   `G_m[a, +k] = pi^{m(m-1)beta/4} prod_i Gamma(a + k_i - (i-1) beta/2)`,
//!   requiring `a + k_m > c0`, and `G_m[a, +k] = [a]_k G_m[a]` with the
//!   generalized Pochhammer `[a]_k = prod_i (a - (i-1) beta/2)_{k_i}`;
//! * weighted gamma (negative weight, Khatri's convention)
//!   `G_m[a, -k] = pi^{m(m-1)beta/4} prod_i Gamma(a - k_i - (m-i) beta/2)`,
//!   requiring `a - k_1 > c0`;
//! * beta functions built from the two conventions:
//!   `B_c[a,k; b,t] = G_m[a,k] G_m[b,t] / G_m[a+b, k+t]` and
//!   `B_k[a,k; b,t] = G_m[a,-k] G_m[b,-t] / G_m[a+b, -k-t]`.
//!
//! The highest weight vector `q_k(S)` is the telescoped product of leading
//! principal minors `|S_m|^{k_m} prod_{i<m} |S_i|^{k_i - k_{i+1}}`. It is
//! multiplicative under congruence by triangular factors in the orientation
//! `q_k(U* S U) = q_k(U* U) q_k(S)` for upper triangular `U` with positive
//! diagonal, which is exactly how the samplers apply scale matrices.

mod gamma;

pub use gamma::{beta_inc_reg, digamma, gamma_p, ln_gamma, signed_ln_gamma};

use crate::division_algebra::{AlgebraTag, HermitianPD};
use crate::error::{Error, Result};

const LN_PI: f64 = 1.144_729_885_849_400_2;

/// Sign + log-magnitude representation of a real number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogValue {
    pub log_abs: f64,
    /// +1, -1, or 0; zero sign means the represented value is exactly 0 and
    /// `log_abs` is ignored.
    pub sign: i8,
}

impl LogValue {
    pub fn zero() -> Self {
        Self {
            log_abs: f64::NEG_INFINITY,
            sign: 0,
        }
    }

    pub fn one() -> Self {
        Self {
            log_abs: 0.0,
            sign: 1,
        }
    }

    /// Positive value given by its natural log.
    pub fn from_ln(ln: f64) -> Self {
        Self {
            log_abs: ln,
            sign: 1,
        }
    }

    pub fn from_value(v: f64) -> Self {
        if v == 0.0 {
            Self::zero()
        } else {
            Self {
                log_abs: v.abs().ln(),
                sign: if v > 0.0 { 1 } else { -1 },
            }
        }
    }

    pub fn value(&self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => f64::from(s) * self.log_abs.exp(),
        }
    }

    pub fn mul(&self, rhs: &LogValue) -> LogValue {
        if self.sign == 0 || rhs.sign == 0 {
            return LogValue::zero();
        }
        LogValue {
            log_abs: self.log_abs + rhs.log_abs,
            sign: self.sign * rhs.sign,
        }
    }

    pub fn div(&self, rhs: &LogValue) -> LogValue {
        debug_assert!(rhs.sign != 0, "division by an exact zero");
        if self.sign == 0 {
            return LogValue::zero();
        }
        LogValue {
            log_abs: self.log_abs - rhs.log_abs,
            sign: self.sign * rhs.sign,
        }
    }
}

/// Non-increasing, nonnegative weight vector kappa = (k_1, ..., k_m).
#[derive(Debug, Clone, PartialEq)]
pub struct Weight {
    parts: Vec<f64>,
}

impl Weight {
    pub fn new(parts: Vec<f64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidWeight {
                reason: "weight must have at least one part".into(),
            });
        }
        for w in parts.windows(2) {
            if !(w[1] <= w[0]) {
                return Err(Error::InvalidWeight {
                    reason: format!("parts must be non-increasing, got {} before {}", w[0], w[1]),
                });
            }
        }
        let last = *parts.last().unwrap();
        if !(last >= 0.0) {
            return Err(Error::InvalidWeight {
                reason: format!("parts must be nonnegative, got {last}"),
            });
        }
        Ok(Self { parts })
    }

    pub fn zero(m: usize) -> Self {
        Self {
            parts: vec![0.0; m],
        }
    }

    pub fn constant(m: usize, p: f64) -> Result<Self> {
        Self::new(vec![p; m])
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    #[inline]
    pub fn parts(&self) -> &[f64] {
        &self.parts
    }

    #[inline]
    pub fn part(&self, i: usize) -> f64 {
        self.parts[i]
    }

    pub fn sum(&self) -> f64 {
        self.parts.iter().sum()
    }

    /// Largest part k_1.
    pub fn first(&self) -> f64 {
        self.parts[0]
    }

    /// Smallest part k_m.
    pub fn last(&self) -> f64 {
        *self.parts.last().unwrap()
    }

    /// Elementwise sum kappa + tau.
    pub fn add(&self, rhs: &Weight) -> Result<Weight> {
        if self.len() != rhs.len() {
            return Err(Error::DimensionMismatch {
                context: format!("weight lengths {} vs {}", self.len(), rhs.len()),
            });
        }
        Weight::new(
            self.parts
                .iter()
                .zip(rhs.parts.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn is_integer(&self) -> bool {
        self.parts.iter().all(|k| k.fract() == 0.0)
    }

    pub fn is_constant(&self) -> bool {
        self.parts.iter().all(|&k| k == self.parts[0])
    }
}

fn check_len(m: usize, kappa: &Weight) -> Result<()> {
    if kappa.len() != m {
        return Err(Error::DimensionMismatch {
            context: format!("weight has {} parts but m = {m}", kappa.len()),
        });
    }
    Ok(())
}

/// Multivariate gamma `G_m[a]`; requires `a > (m-1) beta / 2`.
pub fn ln_mv_gamma(tag: AlgebraTag, m: usize, a: f64) -> Result<LogValue> {
    let beta = tag.beta_f();
    let bound = (m as f64 - 1.0) * beta / 2.0;
    if !(a > bound) {
        return Err(Error::DomainViolation {
            requirement: format!("a > (m-1)beta/2 = {bound} (got a = {a})"),
        });
    }
    let mut ln = (m * (m - 1)) as f64 * beta / 4.0 * LN_PI;
    for i in 0..m {
        ln += ln_gamma(a - i as f64 * beta / 2.0);
    }
    Ok(LogValue::from_ln(ln))
}

/// Weighted gamma `G_m[a, +kappa]`; requires `a + k_m > (m-1) beta / 2`.
pub fn ln_gamma_weight_pos(tag: AlgebraTag, m: usize, a: f64, kappa: &Weight) -> Result<LogValue> {
    check_len(m, kappa)?;
    let beta = tag.beta_f();
    let bound = (m as f64 - 1.0) * beta / 2.0;
    if !(a + kappa.last() > bound) {
        return Err(Error::DomainViolation {
            requirement: format!(
                "a + k_m > (m-1)beta/2 = {bound} (got a + k_m = {})",
                a + kappa.last()
            ),
        });
    }
    let mut ln = (m * (m - 1)) as f64 * beta / 4.0 * LN_PI;
    for i in 0..m {
        ln += ln_gamma(a + kappa.part(i) - i as f64 * beta / 2.0);
    }
    Ok(LogValue::from_ln(ln))
}

/// Weighted gamma `G_m[a, -kappa]`; requires `a - k_1 > (m-1) beta / 2`.
pub fn ln_gamma_weight_neg(tag: AlgebraTag, m: usize, a: f64, kappa: &Weight) -> Result<LogValue> {
    check_len(m, kappa)?;
    let beta = tag.beta_f();
    let bound = (m as f64 - 1.0) * beta / 2.0;
    if !(a - kappa.first() > bound) {
        return Err(Error::DomainViolation {
            requirement: format!(
                "a - k_1 > (m-1)beta/2 = {bound} (got a - k_1 = {})",
                a - kappa.first()
            ),
        });
    }
    let mut ln = (m * (m - 1)) as f64 * beta / 4.0 * LN_PI;
    for i in 0..m {
        ln += ln_gamma(a - kappa.part(i) - (m - 1 - i) as f64 * beta / 2.0);
    }
    Ok(LogValue::from_ln(ln))
}

/// Generalized Pochhammer `[a]_kappa = prod_i (a - (i-1) beta/2)_{k_i}`.
///
/// Integer weights use the literal product with sign tracking (an exact-zero
/// factor yields an exact zero); real weights go through the gamma ratio
/// `(x)_k = Gamma(x + k) / Gamma(x)` and report poles.
pub fn gen_pochhammer(tag: AlgebraTag, m: usize, a: f64, kappa: &Weight) -> Result<LogValue> {
    check_len(m, kappa)?;
    let beta = tag.beta_f();
    let mut out = LogValue::one();
    for i in 0..m {
        let base = a - i as f64 * beta / 2.0;
        let k = kappa.part(i);
        let factor = if k == 0.0 {
            LogValue::one()
        } else if k.fract() == 0.0 {
            let mut f = LogValue::one();
            for j in 0..(k as u64) {
                f = f.mul(&LogValue::from_value(base + j as f64));
            }
            f
        } else {
            let num = signed_ln_gamma(base + k).ok_or_else(|| Error::GammaPole {
                context: format!("Gamma({}) in the Pochhammer ratio", base + k),
            })?;
            let den = signed_ln_gamma(base).ok_or_else(|| Error::GammaPole {
                context: format!("Gamma({base}) in the Pochhammer ratio"),
            })?;
            LogValue {
                log_abs: num.0 - den.0,
                sign: num.1 * den.1,
            }
        };
        out = out.mul(&factor);
    }
    Ok(out)
}

/// Multivariate beta `B_m[a, b] = G_m[a] G_m[b] / G_m[a+b]`.
pub fn ln_mv_beta(tag: AlgebraTag, m: usize, a: f64, b: f64) -> Result<LogValue> {
    let ga = ln_mv_gamma(tag, m, a)?;
    let gb = ln_mv_gamma(tag, m, b)?;
    let gab = ln_mv_gamma(tag, m, a + b)?;
    Ok(ga.mul(&gb).div(&gab))
}

/// c-beta `B_c[a,kappa; b,tau] = G_m[a,k] G_m[b,t] / G_m[a+b, k+t]`.
///
/// Symmetric under swapping `(a, kappa)` with `(b, tau)`.
pub fn ln_c_beta(
    tag: AlgebraTag,
    m: usize,
    a: f64,
    kappa: &Weight,
    b: f64,
    tau: &Weight,
) -> Result<LogValue> {
    check_len(m, kappa)?;
    check_len(m, tau)?;
    let ga = ln_gamma_weight_pos(tag, m, a, kappa)?;
    let gb = ln_gamma_weight_pos(tag, m, b, tau)?;
    let gab = ln_gamma_weight_pos(tag, m, a + b, &kappa.add(tau)?)?;
    Ok(ga.mul(&gb).div(&gab))
}

/// k-beta `B_k[a,kappa; b,tau] = G_m[a,-k] G_m[b,-t] / G_m[a+b, -k-t]`.
pub fn ln_k_beta(
    tag: AlgebraTag,
    m: usize,
    a: f64,
    kappa: &Weight,
    b: f64,
    tau: &Weight,
) -> Result<LogValue> {
    check_len(m, kappa)?;
    check_len(m, tau)?;
    let ga = ln_gamma_weight_neg(tag, m, a, kappa)?;
    let gb = ln_gamma_weight_neg(tag, m, b, tau)?;
    let gab = ln_gamma_weight_neg(tag, m, a + b, &kappa.add(tau)?)?;
    Ok(ga.mul(&gb).div(&gab))
}

/// log q_kappa(S): telescoped leading principal minors.
pub fn log_q_kappa(s: &HermitianPD, kappa: &Weight) -> Result<f64> {
    check_len(s.dim(), kappa)?;
    let minors = s.leading_principal_logminors();
    Ok(log_q_from_logminors(&minors, kappa.parts()))
}

/// Telescoped sum `k_m L_m + sum_{i<m} (k_i - k_{i+1}) L_i` over log-minors.
///
/// Exposed separately so oracles can apply it to arbitrary exponent vectors
/// (not necessarily valid weights).
pub fn log_q_from_logminors(logminors: &[f64], exponents: &[f64]) -> f64 {
    let m = logminors.len();
    let mut out = exponents[m - 1] * logminors[m - 1];
    for i in 0..m - 1 {
        out += (exponents[i] - exponents[i + 1]) * logminors[i];
    }
    out
}

/// Volume of the Stiefel manifold of n x m frames:
/// `2^m pi^{m n beta / 2} / G_m[n beta / 2]`.
pub fn ln_stiefel_volume(tag: AlgebraTag, m: usize, n: usize) -> Result<LogValue> {
    if !(n >= m && m >= 1) {
        return Err(Error::DomainViolation {
            requirement: format!("n >= m >= 1 (got m={m}, n={n})"),
        });
    }
    let beta = tag.beta_f();
    let ln = m as f64 * std::f64::consts::LN_2 + (m * n) as f64 * beta / 2.0 * LN_PI
        - ln_mv_gamma(tag, m, n as f64 * beta / 2.0)?.log_abs;
    Ok(LogValue::from_ln(ln))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::division_algebra::{DivisionMatrix, DivisionScalar};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
    }

    #[test]
    fn weight_validation() {
        assert!(Weight::new(vec![2.0, 1.0, 0.0]).is_ok());
        assert!(Weight::new(vec![1.0, 2.0]).is_err());
        assert!(Weight::new(vec![1.0, -0.5]).is_err());
        assert!(Weight::new(vec![]).is_err());
        assert!(!Weight::new(vec![2.5, 1.25]).unwrap().is_integer());
    }

    #[test]
    fn log_value_roundtrip() {
        let v = LogValue::from_value(-12.5);
        assert_eq!(v.sign, -1);
        assert!((v.value() + 12.5).abs() < 1e-12);
        assert_eq!(LogValue::from_value(0.0).sign, 0);
        assert_eq!(LogValue::zero().mul(&LogValue::one()).sign, 0);
    }

    #[test]
    fn mv_gamma_examples() {
        // m=1, beta=1, a=0.5 -> log sqrt(pi).
        let v = ln_mv_gamma(AlgebraTag::Real, 1, 0.5).unwrap();
        assert!((v.log_abs - 0.5 * LN_PI).abs() < 1e-13);

        // beta=1, m=2, a=1.5 -> pi^{1/2} Gamma(1.5) Gamma(1).
        let v = ln_mv_gamma(AlgebraTag::Real, 2, 1.5).unwrap();
        let expect = 0.5 * LN_PI + ln_gamma(1.5);
        assert!((v.log_abs - expect).abs() < 1e-13);

        // beta=2, m=2, a=2 -> pi Gamma(2) Gamma(1) = pi.
        let v = ln_mv_gamma(AlgebraTag::Complex, 2, 2.0).unwrap();
        assert!((v.log_abs - LN_PI).abs() < 1e-13);

        assert!(ln_mv_gamma(AlgebraTag::Complex, 3, 2.0).is_err()); // a <= (m-1)beta/2
    }

    #[test]
    fn gamma_weight_pos_examples() {
        let tag = AlgebraTag::Real;
        // kappa = 0 reduces to the plain gamma.
        let k0 = Weight::zero(2);
        let a = 1.7;
        let lhs = ln_gamma_weight_pos(tag, 2, a, &k0).unwrap();
        let rhs = ln_mv_gamma(tag, 2, a).unwrap();
        assert!((lhs.log_abs - rhs.log_abs).abs() < 1e-14);

        // m=1, a=2, kappa=(3) -> Gamma(5) = 24.
        let v = ln_gamma_weight_pos(tag, 1, 2.0, &Weight::new(vec![3.0]).unwrap()).unwrap();
        assert!((v.log_abs - 24.0f64.ln()).abs() < 1e-13);
    }

    #[test]
    fn gamma_weight_neg_examples() {
        let tag = AlgebraTag::Real;
        let k0 = Weight::zero(3);
        let lhs = ln_gamma_weight_neg(tag, 3, 4.0, &k0).unwrap();
        let rhs = ln_mv_gamma(tag, 3, 4.0).unwrap();
        assert!((lhs.log_abs - rhs.log_abs).abs() < 1e-14);

        // m=1, a=5, kappa=(2) -> Gamma(3) = 2.
        let v = ln_gamma_weight_neg(tag, 1, 5.0, &Weight::new(vec![2.0]).unwrap()).unwrap();
        assert!((v.log_abs - 2.0f64.ln()).abs() < 1e-14);

        assert!(ln_gamma_weight_neg(tag, 2, 1.0, &Weight::new(vec![1.0, 0.0]).unwrap()).is_err());
    }

    #[test]
    fn pochhammer_examples() {
        let tag = AlgebraTag::Real;
        // m=1, a=3, kappa=(2) -> 3*4 = 12.
        let v = gen_pochhammer(tag, 1, 3.0, &Weight::new(vec![2.0]).unwrap()).unwrap();
        assert_eq!(v.sign, 1);
        assert!((v.log_abs - 12.0f64.ln()).abs() < 1e-13);

        // kappa = 0 -> 1.
        let v = gen_pochhammer(tag, 3, 2.5, &Weight::zero(3)).unwrap();
        assert_eq!(v.sign, 1);
        assert_eq!(v.log_abs, 0.0);

        // beta=1, m=2, a=1, kappa=(1,1) -> (1)(0.5) = 0.5.
        let v = gen_pochhammer(tag, 2, 1.0, &Weight::new(vec![1.0, 1.0]).unwrap()).unwrap();
        assert!((v.log_abs - 0.5f64.ln()).abs() < 1e-13);

        // Negative base with integer weight keeps the sign.
        let v = gen_pochhammer(tag, 1, -4.5, &Weight::new(vec![2.0]).unwrap()).unwrap();
        // (-4.5)(-3.5) = 15.75 > 0
        assert_eq!(v.sign, 1);
        assert!((v.log_abs - 15.75f64.ln()).abs() < 1e-13);

        // Exact zero factor -> exact zero.
        let v = gen_pochhammer(tag, 1, 0.0, &Weight::new(vec![1.0]).unwrap()).unwrap();
        assert_eq!(v.sign, 0);
    }

    #[test]
    fn factorization_identity_random_grid() {
        // G_m[a, kappa] = [a]_kappa G_m[a] over random valid inputs.
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for _ in 0..300 {
            let tag = AlgebraTag::ALL[rng.random_range(0..4)];
            let m = rng.random_range(1..=6);
            let beta = tag.beta_f();
            let mut parts: Vec<f64> = (0..m).map(|_| rng.random::<f64>() * 3.0).collect();
            parts.sort_by(|a, b| b.partial_cmp(a).unwrap());
            if rng.random::<f64>() < 0.5 {
                parts = parts.iter().map(|k| k.round()).collect();
            }
            let kappa = Weight::new(parts).unwrap();
            let a = (m as f64 - 1.0) * beta / 2.0 + 0.3 + rng.random::<f64>() * 4.0;
            let lhs = ln_gamma_weight_pos(tag, m, a, &kappa).unwrap();
            let rhs = gen_pochhammer(tag, m, a, &kappa)
                .unwrap()
                .mul(&ln_mv_gamma(tag, m, a).unwrap());
            assert_eq!(rhs.sign, 1);
            assert!(
                rel_close(lhs.log_abs, rhs.log_abs, 1e-12),
                "factorization identity failed: {} vs {}",
                lhs.log_abs,
                rhs.log_abs
            );
        }
    }

    #[test]
    fn neg_weight_sign_identity_integer_kappa() {
        // G_m[a,-kappa] = (-1)^k G_m[a] / [-a + (m-1)beta/2 + 1]_kappa
        // for integer kappa.
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        for _ in 0..200 {
            let tag = AlgebraTag::ALL[rng.random_range(0..4)];
            let m = rng.random_range(1..=5);
            let beta = tag.beta_f();
            let mut parts: Vec<f64> = (0..m).map(|_| rng.random_range(0..4) as f64).collect();
            parts.sort_by(|a, b| b.partial_cmp(a).unwrap());
            let kappa = Weight::new(parts).unwrap();
            let a = (m as f64 - 1.0) * beta / 2.0 + kappa.first() + 0.3 + rng.random::<f64>() * 3.0;
            let lhs = ln_gamma_weight_neg(tag, m, a, &kappa).unwrap();
            let k_total = kappa.sum() as i64;
            let sign_k = if k_total % 2 == 0 { 1i8 } else { -1i8 };
            let poch =
                gen_pochhammer(tag, m, -a + (m as f64 - 1.0) * beta / 2.0 + 1.0, &kappa).unwrap();
            assert_ne!(poch.sign, 0);
            let rhs = LogValue {
                log_abs: 0.0,
                sign: sign_k,
            }
            .mul(&ln_mv_gamma(tag, m, a).unwrap())
            .div(&poch);
            assert_eq!(lhs.sign, rhs.sign, "sign mismatch");
            assert!(
                rel_close(lhs.log_abs, rhs.log_abs, 1e-10),
                "magnitude mismatch: {} vs {}",
                lhs.log_abs,
                rhs.log_abs
            );
        }
    }

    #[test]
    fn beta_function_examples() {
        let tag = AlgebraTag::Real;
        // B(1,1) = 1.
        let v = ln_mv_beta(tag, 1, 1.0, 1.0).unwrap();
        assert!(v.log_abs.abs() < 1e-14);
        // B(2,3) = 1/12.
        let v = ln_mv_beta(tag, 1, 2.0, 3.0).unwrap();
        assert!((v.log_abs + 12.0f64.ln()).abs() < 1e-13);
    }

    #[test]
    fn c_and_k_beta_examples() {
        let tag = AlgebraTag::Real;
        let k0 = Weight::zero(2);
        // Zero weights collapse to the multivariate beta.
        let lhs = ln_c_beta(tag, 2, 2.0, &k0, 3.0, &k0).unwrap();
        let rhs = ln_mv_beta(tag, 2, 2.0, 3.0).unwrap();
        assert!((lhs.log_abs - rhs.log_abs).abs() < 1e-13);
        let lhs = ln_k_beta(tag, 2, 2.0, &k0, 3.0, &k0).unwrap();
        assert!((lhs.log_abs - rhs.log_abs).abs() < 1e-13);

        // m=1: Gamma(2)Gamma(1)/Gamma(3) = 1/2.
        let v = ln_c_beta(
            tag,
            1,
            1.0,
            &Weight::new(vec![1.0]).unwrap(),
            1.0,
            &Weight::zero(1),
        )
        .unwrap();
        assert!((v.log_abs + 2.0f64.ln()).abs() < 1e-13);

        // m=1: Gamma(2)Gamma(2)/Gamma(4) = 1/6.
        let v = ln_k_beta(
            tag,
            1,
            3.0,
            &Weight::new(vec![1.0]).unwrap(),
            2.0,
            &Weight::zero(1),
        )
        .unwrap();
        assert!((v.log_abs + 6.0f64.ln()).abs() < 1e-13);
    }

    #[test]
    fn c_beta_is_symmetric_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(79);
        for _ in 0..50 {
            let tag = AlgebraTag::MATRIX[rng.random_range(0..3)];
            let m = rng.random_range(1..=4);
            let beta = tag.beta_f();
            let mk = |rng: &mut ChaCha8Rng| {
                let mut p: Vec<f64> = (0..m).map(|_| rng.random::<f64>() * 2.0).collect();
                p.sort_by(|a, b| b.partial_cmp(a).unwrap());
                Weight::new(p).unwrap()
            };
            let kappa = mk(&mut rng);
            let tau = mk(&mut rng);
            let a = (m as f64 - 1.0) * beta / 2.0 + 1.0 + rng.random::<f64>();
            let b = (m as f64 - 1.0) * beta / 2.0 + 1.0 + rng.random::<f64>();
            let lhs = ln_c_beta(tag, m, a, &kappa, b, &tau).unwrap();
            let rhs = ln_c_beta(tag, m, b, &tau, a, &kappa).unwrap();
            assert_eq!(lhs.log_abs, rhs.log_abs);
            assert_eq!(lhs.sign, rhs.sign);
        }
    }

    #[test]
    fn q_kappa_examples() {
        // Any S with kappa = 0 gives 0.
        let s = HermitianPD::new(DivisionMatrix::from_real_rows(&[
            vec![2.0, 1.0],
            vec![1.0, 1.0],
        ]))
        .unwrap();
        assert_eq!(log_q_kappa(&s, &Weight::zero(2)).unwrap(), 0.0);

        // diag(2,3) with kappa=(2,1) -> log 12.
        let d = HermitianPD::new(DivisionMatrix::from_real_rows(&[
            vec![2.0, 0.0],
            vec![0.0, 3.0],
        ]))
        .unwrap();
        let v = log_q_kappa(&d, &Weight::new(vec![2.0, 1.0]).unwrap()).unwrap();
        assert!((v - 12.0f64.ln()).abs() < 1e-13);

        // Constant weight p gives p * logdet.
        let mut rng = ChaCha8Rng::seed_from_u64(83);
        for tag in AlgebraTag::MATRIX {
            let m = 3;
            let a = DivisionMatrix::from_fn(tag, m, m, |_, _| {
                let c: Vec<f64> = (0..tag.beta()).map(|_| rng.random::<f64>() - 0.5).collect();
                DivisionScalar::new(tag, &c).unwrap()
            });
            let s = HermitianPD::new(
                a.conj_transpose()
                    .matmul(&a)
                    .unwrap()
                    .add(&DivisionMatrix::identity(tag, m).scale(2.0))
                    .unwrap()
                    .hermitian_part()
                    .unwrap(),
            )
            .unwrap();
            let p = 1.75;
            let v = log_q_kappa(&s, &Weight::constant(m, p).unwrap()).unwrap();
            assert!((v - p * s.logdet()).abs() < 1e-10);
        }
    }

    #[test]
    fn stiefel_volume_known_values() {
        // Unit circle: 2 pi.
        let v = ln_stiefel_volume(AlgebraTag::Real, 1, 2).unwrap();
        assert!((v.log_abs - (2.0 * std::f64::consts::PI).ln()).abs() < 1e-13);
        // Unit 2-sphere: 4 pi.
        let v = ln_stiefel_volume(AlgebraTag::Real, 1, 3).unwrap();
        assert!((v.log_abs - (4.0 * std::f64::consts::PI).ln()).abs() < 1e-13);
        // Complex circle: 2 pi.
        let v = ln_stiefel_volume(AlgebraTag::Complex, 1, 1).unwrap();
        assert!((v.log_abs - (2.0 * std::f64::consts::PI).ln()).abs() < 1e-13);
        assert!(ln_stiefel_volume(AlgebraTag::Real, 3, 2).is_err());
    }
}
