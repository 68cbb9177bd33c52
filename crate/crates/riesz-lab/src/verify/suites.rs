//! Registered verification checks, grouped into the four suites exposed by
//! the CLI (`specfun`, `riesz`, `beta`, `eigen`).
//!
//! Every density in the crate has a normalization check here: the m = 1
//! laws are integrated over their supports, the 2x2 real matrix laws over
//! the cone domains, and the eigenvalue laws over the ordered chamber. The
//! special-function suite carries the gamma-factorization and sign
//! identities on random grids plus the highest-weight-vector property
//! checks; the sampler suites add light goodness-of-fit comparisons of the
//! samplers against quadrature CDFs of their own densities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::beta_riesz::{log_density_beta_riesz, BetaRieszParams, Family};
use crate::division_algebra::{AlgebraTag, DivisionMatrix, HermitianPD};
use crate::error::{Error, Result};
use crate::riesz::{
    log_density_inverse_riesz, log_density_riesz, log_density_scalar_gamma, sample_riesz_bartlett,
    RieszParams, ScalarGammaParams, Variant,
};
use crate::specfun::{
    gen_pochhammer, ln_c_beta, ln_gamma_weight_neg, ln_gamma_weight_pos, ln_k_beta, ln_mv_beta,
    ln_mv_gamma, ln_stiefel_volume, log_q_from_logminors, log_q_kappa, LogValue, Weight,
};
use crate::spectral::{log_joint_eigen_density, EigenDensityParams};
use crate::verify::testutil::{random_hpd, random_upper_triangular, random_weight, GridCdf};
use crate::verify::{integrate, ks_test, Alpha, Domain, QuadratureSpec};

/// The four CLI-visible suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteName {
    Specfun,
    Riesz,
    Beta,
    Eigen,
}

impl SuiteName {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "specfun" => Ok(SuiteName::Specfun),
            "riesz" => Ok(SuiteName::Riesz),
            "beta" => Ok(SuiteName::Beta),
            "eigen" => Ok(SuiteName::Eigen),
            other => Err(Error::Unsupported {
                context: format!("unknown suite '{other}'"),
            }),
        }
    }
}

/// One executed check, serializable as a machine-readable report line.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub kind: &'static str,
    pub observed: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckReport {
    fn close(name: String, kind: &'static str, observed: f64, expected: f64, tol: f64) -> Self {
        let passed = (observed - expected).abs() <= tol && observed.is_finite();
        Self {
            name,
            kind,
            observed,
            expected,
            tolerance: tol,
            passed,
        }
    }

    fn error(name: String, kind: &'static str, err: &Error) -> Self {
        let _ = err;
        Self {
            name,
            kind,
            observed: f64::NAN,
            expected: 0.0,
            tolerance: 0.0,
            passed: false,
        }
    }
}

/// Run one named suite with a fixed seed.
pub fn run_suite(name: SuiteName, seed: u64) -> Vec<CheckReport> {
    match name {
        SuiteName::Specfun => specfun_checks(seed),
        SuiteName::Riesz => riesz_checks(seed),
        SuiteName::Beta => beta_checks(seed),
        SuiteName::Eigen => eigen_checks(seed),
    }
}

fn scalar_hpd(tag: AlgebraTag, x: f64) -> HermitianPD {
    HermitianPD::new(DivisionMatrix::identity(tag, 1).scale(x)).unwrap()
}

// ---------------------------------------------------------------------------
// specfun suite
// ---------------------------------------------------------------------------

pub fn specfun_checks(seed: u64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    out.push(check_gamma_factorization(seed, 200));
    out.push(check_gamma_neg_sign_identity(seed.wrapping_add(1), 200));
    out.push(check_c_beta_symmetry(seed.wrapping_add(2)));
    out.extend(q_property_checks(seed.wrapping_add(3), 60, 4));
    out.extend(check_mv_beta_quadrature_m1());
    out.push(check_mv_beta_cubature_m2());
    out.extend(check_stiefel_known_values());
    out
}

/// Max relative error of `G_m[a, kappa] = [a]_kappa G_m[a]` on a random
/// grid over all four algebras, m <= 6, mixed integer/real weights.
pub fn check_gamma_factorization(seed: u64, points: usize) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for idx in 0..points {
        let tag = AlgebraTag::ALL[idx % 4];
        let m = rng.random_range(1..=6);
        let beta = tag.beta_f();
        let kappa = random_weight(m, 3.0, idx % 2 == 0, &mut rng);
        let a = (m as f64 - 1.0) * beta / 2.0 + 0.3 + rng.random::<f64>() * 4.0;
        let lhs = match ln_gamma_weight_pos(tag, m, a, &kappa) {
            Ok(v) => v,
            Err(e) => {
                return CheckReport::error("specfun/factorization_identity".into(), "identity", &e)
            }
        };
        let rhs = gen_pochhammer(tag, m, a, &kappa)
            .unwrap()
            .mul(&ln_mv_gamma(tag, m, a).unwrap());
        let rel = (lhs.log_abs - rhs.log_abs).abs() / (1.0 + lhs.log_abs.abs());
        worst = worst.max(rel);
        if rhs.sign != 1 {
            worst = f64::INFINITY;
        }
    }
    CheckReport::close(
        "specfun/factorization_identity".into(),
        "identity",
        worst,
        0.0,
        1e-10,
    )
}

/// Max relative error of
/// `G_m[a,-kappa] = (-1)^k G_m[a] / [-a + (m-1)beta/2 + 1]_kappa`
/// for integer weights, including the sign agreement.
pub fn check_gamma_neg_sign_identity(seed: u64, points: usize) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for idx in 0..points {
        let tag = AlgebraTag::ALL[idx % 4];
        let m = rng.random_range(1..=6);
        let beta = tag.beta_f();
        let kappa = random_weight(m, 4.0, true, &mut rng);
        let a = (m as f64 - 1.0) * beta / 2.0 + kappa.first() + 0.3 + rng.random::<f64>() * 3.0;
        let lhs = match ln_gamma_weight_neg(tag, m, a, &kappa) {
            Ok(v) => v,
            Err(e) => {
                return CheckReport::error(
                    "specfun/neg_weight_sign_identity".into(),
                    "identity",
                    &e,
                )
            }
        };
        let poch =
            gen_pochhammer(tag, m, -a + (m as f64 - 1.0) * beta / 2.0 + 1.0, &kappa).unwrap();
        if poch.sign == 0 {
            worst = f64::INFINITY;
            continue;
        }
        let sign_k = if (kappa.sum() as i64) % 2 == 0 {
            1i8
        } else {
            -1
        };
        let rhs = LogValue {
            log_abs: 0.0,
            sign: sign_k,
        }
        .mul(&ln_mv_gamma(tag, m, a).unwrap())
        .div(&poch);
        if rhs.sign != lhs.sign {
            worst = f64::INFINITY;
            continue;
        }
        let rel = (lhs.log_abs - rhs.log_abs).abs() / (1.0 + lhs.log_abs.abs());
        worst = worst.max(rel);
    }
    CheckReport::close(
        "specfun/neg_weight_sign_identity".into(),
        "identity",
        worst,
        0.0,
        1e-10,
    )
}

fn check_c_beta_symmetry(seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let tag = AlgebraTag::ALL[rng.random_range(0..4)];
        let m = rng.random_range(1..=4);
        let beta = tag.beta_f();
        let kappa = random_weight(m, 2.0, false, &mut rng);
        let tau = random_weight(m, 2.0, false, &mut rng);
        let a = (m as f64 - 1.0) * beta / 2.0 + 1.0 + rng.random::<f64>();
        let b = (m as f64 - 1.0) * beta / 2.0 + 1.0 + rng.random::<f64>();
        let lhs = ln_c_beta(tag, m, a, &kappa, b, &tau).unwrap();
        let rhs = ln_c_beta(tag, m, b, &tau, a, &kappa).unwrap();
        worst = worst.max((lhs.log_abs - rhs.log_abs).abs());
    }
    CheckReport::close(
        "specfun/c_beta_symmetry".into(),
        "identity",
        worst,
        0.0,
        f64::MIN_POSITIVE,
    )
}

/// Highest-weight-vector property checks on random HPD matrices.
///
/// The suite asserts the identities in the orientations in which they hold
/// for the leading-minor definition:
///
/// * diagonal evaluation (exact) and its failure under rotation for
///   non-constant weights;
/// * the inverse identity literally at constant weights, and in general
///   through the dual (trailing-minor, reversed negated weight) form;
/// * constant-weight power and additivity in the weight;
/// * triangular congruence `q(U* S U) = q(U* U) q(S)` and its inverse
///   `q(U^{-*} S U^{-1}) = q(S) / q(U* U)` for upper triangular `U`.
pub fn q_property_checks(seed: u64, n_per_beta: usize, max_m: usize) -> Vec<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tol = 1e-9;
    let mut diag_err: f64 = 0.0;
    let mut rotation_gap: f64 = f64::INFINITY;
    let mut inv_const_err: f64 = 0.0;
    let mut inv_dual_err: f64 = 0.0;
    let mut const_power_err: f64 = 0.0;
    let mut additive_err: f64 = 0.0;
    let mut congruence_err: f64 = 0.0;
    let mut inv_congruence_err: f64 = 0.0;

    for tag in AlgebraTag::MATRIX {
        for _ in 0..n_per_beta {
            let m = rng.random_range(1..=max_m.max(1));
            let kappa = random_weight(m, 3.0, false, &mut rng);
            let tau = random_weight(m, 2.0, false, &mut rng);
            let s = random_hpd(tag, m, &mut rng);

            // (5) diagonal matrices: q is the product of diagonal powers.
            let diag = HermitianPD::new(DivisionMatrix::from_fn(tag, m, m, |i, j| {
                if i == j {
                    crate::division_algebra::DivisionScalar::from_real(tag, 0.5 + i as f64 + 0.1)
                } else {
                    crate::division_algebra::DivisionScalar::zero(tag)
                }
            }))
            .unwrap();
            let direct: f64 = (0..m)
                .map(|i| kappa.part(i) * diag.matrix().get(i, i).re().ln())
                .sum();
            diag_err = diag_err.max((log_q_kappa(&diag, &kappa).unwrap() - direct).abs());

            // (6) constant weight: q(S^{-1}) = 1 / q(S) literally.
            let p = 1.0 + rng.random::<f64>();
            let const_w = Weight::constant(m, p).unwrap();
            let s_inv = s.inverse().unwrap();
            inv_const_err = inv_const_err.max(
                (log_q_kappa(&s_inv, &const_w).unwrap() + log_q_kappa(&s, &const_w).unwrap()).abs(),
            );

            // (6) general weight via the dual identity: the p-th leading
            // log-minor of S^{-1} is the (m-p)-th trailing log-minor of S
            // minus logdet S.
            let trailing = trailing_logminors(&s);
            let logdet = s.logdet();
            let expected_minors: Vec<f64> = (1..=m)
                .map(|p| {
                    if p == m {
                        -logdet
                    } else {
                        trailing[m - p - 1] - logdet
                    }
                })
                .collect();
            let expected_q = log_q_from_logminors(&expected_minors, kappa.parts());
            inv_dual_err =
                inv_dual_err.max((log_q_kappa(&s_inv, &kappa).unwrap() - expected_q).abs());

            // (7) constant weight is a determinant power.
            const_power_err =
                const_power_err.max((log_q_kappa(&s, &const_w).unwrap() - p * s.logdet()).abs());

            // (8) additivity in the weight.
            let sum_w = kappa.add(&tau).unwrap();
            additive_err = additive_err.max(
                (log_q_kappa(&s, &sum_w).unwrap()
                    - log_q_kappa(&s, &kappa).unwrap()
                    - log_q_kappa(&s, &tau).unwrap())
                .abs(),
            );

            // (9) triangular congruence.
            let u = random_upper_triangular(tag, m, &mut rng);
            let gram = HermitianPD::new(
                u.conj_transpose()
                    .matmul(&u)
                    .unwrap()
                    .hermitian_part()
                    .unwrap(),
            )
            .unwrap();
            let cong = HermitianPD::new(
                u.conj_transpose()
                    .matmul(s.matrix())
                    .unwrap()
                    .matmul(&u)
                    .unwrap()
                    .hermitian_part()
                    .unwrap(),
            )
            .unwrap();
            congruence_err = congruence_err.max(
                (log_q_kappa(&cong, &kappa).unwrap()
                    - log_q_kappa(&gram, &kappa).unwrap()
                    - log_q_kappa(&s, &kappa).unwrap())
                .abs(),
            );

            // (10) inverse triangular congruence.
            let u_tri = crate::division_algebra::UpperTriangularPosDiag::new(u.clone()).unwrap();
            let v = u_tri.invert();
            let inv_cong = HermitianPD::new(
                v.as_matrix()
                    .conj_transpose()
                    .matmul(s.matrix())
                    .unwrap()
                    .matmul(v.as_matrix())
                    .unwrap()
                    .hermitian_part()
                    .unwrap(),
            )
            .unwrap();
            inv_congruence_err = inv_congruence_err.max(
                (log_q_kappa(&inv_cong, &kappa).unwrap() - log_q_kappa(&s, &kappa).unwrap()
                    + log_q_kappa(&gram, &kappa).unwrap())
                .abs(),
            );
        }

        // (5) continued: non-constant weights are not orthogonally
        // invariant. Rotate a real diagonal matrix and record the gap.
        if tag == AlgebraTag::Real {
            let (c, s_) = (0.7f64.cos(), 0.7f64.sin());
            let h = DivisionMatrix::from_real_rows(&[vec![c, -s_], vec![s_, c]]);
            let d = DivisionMatrix::from_real_rows(&[vec![3.0, 0.0], vec![0.0, 1.0]]);
            let rot = HermitianPD::new(
                h.matmul(&d)
                    .unwrap()
                    .matmul(&h.conj_transpose())
                    .unwrap()
                    .hermitian_part()
                    .unwrap(),
            )
            .unwrap();
            let kappa2 = Weight::new(vec![2.0, 0.0]).unwrap();
            let spectral_q = 2.0 * 3.0f64.ln();
            rotation_gap = (log_q_kappa(&rot, &kappa2).unwrap() - spectral_q).abs();
        }
    }

    let mut out = vec![
        CheckReport::close("specfun/q5_diagonal".into(), "identity", diag_err, 0.0, tol),
        CheckReport::close(
            "specfun/q6_inverse_constant_weight".into(),
            "identity",
            inv_const_err,
            0.0,
            tol,
        ),
        CheckReport::close(
            "specfun/q6_inverse_dual_form".into(),
            "identity",
            inv_dual_err,
            0.0,
            tol,
        ),
        CheckReport::close(
            "specfun/q7_constant_power".into(),
            "identity",
            const_power_err,
            0.0,
            tol,
        ),
        CheckReport::close(
            "specfun/q8_weight_additivity".into(),
            "identity",
            additive_err,
            0.0,
            tol,
        ),
        CheckReport::close(
            "specfun/q9_triangular_congruence".into(),
            "identity",
            congruence_err,
            0.0,
            tol,
        ),
        CheckReport::close(
            "specfun/q10_inverse_congruence".into(),
            "identity",
            inv_congruence_err,
            0.0,
            tol,
        ),
    ];
    // Not a closeness check: the rotated value must differ.
    out.push(CheckReport {
        name: "specfun/q5_not_orthogonally_invariant".into(),
        kind: "identity",
        observed: rotation_gap,
        expected: f64::INFINITY,
        tolerance: 1e-3,
        passed: rotation_gap > 1e-3,
    });
    out
}

/// Trailing principal log-minors (sizes 1..m-1) of S.
fn trailing_logminors(s: &HermitianPD) -> Vec<f64> {
    let m = s.dim();
    let tag = s.tag();
    (1..m)
        .map(|p| {
            let block =
                DivisionMatrix::from_fn(tag, p, p, |i, j| s.matrix().get(m - p + i, m - p + j));
            HermitianPD::new(block).unwrap().logdet()
        })
        .collect()
}

fn check_mv_beta_quadrature_m1() -> Vec<CheckReport> {
    let spec = QuadratureSpec {
        domain: Domain::Unit01,
        abs_tol: 1e-10,
        max_subdivisions: 80,
    };
    [(2.5, 1.5), (1.0, 1.0), (3.0, 0.75)]
        .iter()
        .map(|&(a, b)| {
            let name = format!("specfun/mv_beta_m1_quadrature/a{a}-b{b}");
            let target = ln_mv_beta(AlgebraTag::Real, 1, a, b).unwrap().log_abs.exp();
            match integrate(|c| c[0].powf(a - 1.0) * (1.0 - c[0]).powf(b - 1.0), &spec) {
                Ok(v) => CheckReport::close(name, "normalization", v / target, 1.0, 1e-8),
                Err(e) => CheckReport::error(name, "normalization", &e),
            }
        })
        .collect()
}

/// 3-D cubature of the m = 2 multivariate beta integrand over 0 < S < I
/// against the closed form.
fn check_mv_beta_cubature_m2() -> CheckReport {
    let name = "specfun/mv_beta_m2_cubature".to_string();
    let (a, b) = (2.0, 2.0);
    let ln_b = ln_mv_beta(AlgebraTag::Real, 2, a, b).unwrap().log_abs;
    let spec = QuadratureSpec {
        domain: Domain::SpdInterval2x2,
        abs_tol: 2.5e-7,
        max_subdivisions: 30,
    };
    let result = integrate(
        |c| {
            let (s11, s22, s12) = (c[0], c[1], c[2]);
            let det = s11 * s22 - s12 * s12;
            let cdet = (1.0 - s11) * (1.0 - s22) - s12 * s12;
            if det <= 0.0 || cdet <= 0.0 {
                return 0.0;
            }
            ((a - 1.5) * det.ln() + (b - 1.5) * cdet.ln() - ln_b).exp()
        },
        &spec,
    );
    match result {
        Ok(v) => CheckReport::close(name, "normalization", v, 1.0, 1e-6),
        Err(e) => CheckReport::error(name, "normalization", &e),
    }
}

fn check_stiefel_known_values() -> Vec<CheckReport> {
    let two_pi = (2.0 * std::f64::consts::PI).ln();
    let four_pi = (4.0 * std::f64::consts::PI).ln();
    [
        (AlgebraTag::Real, 1usize, 2usize, two_pi, "circle"),
        (AlgebraTag::Real, 1, 3, four_pi, "sphere"),
        (AlgebraTag::Complex, 1, 1, two_pi, "complex_circle"),
    ]
    .iter()
    .map(|&(tag, m, n, expect, label)| {
        let v = ln_stiefel_volume(tag, m, n).unwrap();
        CheckReport::close(
            format!("specfun/stiefel_volume/{label}"),
            "identity",
            v.log_abs,
            expect,
            1e-12,
        )
    })
    .collect()
}

// ---------------------------------------------------------------------------
// riesz suite
// ---------------------------------------------------------------------------

pub fn riesz_checks(seed: u64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    // m = 1 normalization grid: both variants, three algebras, two
    // parameter points each, including a non-unit scale.
    for (variant, vname) in [(Variant::TypeI, "type1"), (Variant::TypeII, "type2")] {
        for tag in AlgebraTag::MATRIX {
            for &(a, k, sigma) in &[
                (2.0, 1.0, 1.0),
                (3.5, 2.0, 1.7),
                (1.5, 0.0, 0.6),
                (2.75, 1.5, 2.4),
            ] {
                out.push(riesz_m1_normalization(
                    tag, variant, a, k, sigma, vname, false,
                ));
                out.push(riesz_m1_normalization(
                    tag, variant, a, k, sigma, vname, true,
                ));
            }
        }
    }
    // Scalar gamma density normalization for each algebra.
    for tag in AlgebraTag::MATRIX {
        out.push(scalar_gamma_normalization(tag, 1.5, 2.0));
    }
    // Full-cone 2x2 cubatures of the real matrix densities with a
    // non-constant weight; type II exercises the literal-inverse weight
    // term against the Khatri normalizer, and the inverse law is an exact
    // change of variables on the same cone.
    out.push(riesz_m2_cone_normalization(
        Variant::TypeI,
        2.0,
        false,
        "riesz_type1",
    ));
    out.push(riesz_m2_cone_normalization(
        Variant::TypeII,
        4.0,
        false,
        "riesz_type2",
    ));
    out.push(riesz_m2_cone_normalization(
        Variant::TypeI,
        2.0,
        true,
        "inv_riesz_type1",
    ));
    // Sampler vs quadrature CDF of its own density at m = 1 (dual route).
    out.push(riesz_sampler_vs_density_cdf(
        seed,
        AlgebraTag::Real,
        Variant::TypeI,
        2.0,
        1.0,
    ));
    out.push(riesz_sampler_vs_density_cdf(
        seed.wrapping_add(9),
        AlgebraTag::Quaternion,
        Variant::TypeII,
        4.0,
        1.0,
    ));
    out
}

fn riesz_m1_normalization(
    tag: AlgebraTag,
    variant: Variant,
    a: f64,
    k: f64,
    sigma: f64,
    vname: &str,
    inverse: bool,
) -> CheckReport {
    let label = if inverse { "inv_riesz" } else { "riesz" };
    let name = format!(
        "riesz/{label}_{vname}_m1_normalization/beta{}-a{a}-k{k}-s{sigma}",
        tag.beta()
    );
    let params = match RieszParams::new(
        a,
        Weight::new(vec![k]).unwrap(),
        scalar_hpd(tag, sigma),
        variant,
    ) {
        Ok(p) => p,
        Err(e) => return CheckReport::error(name, "normalization", &e),
    };
    let spec = QuadratureSpec {
        domain: Domain::HalfLine,
        abs_tol: 1e-9,
        max_subdivisions: 80,
    };
    let result = integrate(
        |c| {
            if !(c[0] > 0.0) || !c[0].is_finite() {
                return 0.0;
            }
            let x = scalar_hpd(tag, c[0]);
            let ld = if inverse {
                log_density_inverse_riesz(&params, &x)
            } else {
                log_density_riesz(&params, &x)
            };
            ld.map(f64::exp).unwrap_or(0.0)
        },
        &spec,
    );
    match result {
        Ok(v) => CheckReport::close(name, "normalization", v, 1.0, 1e-8),
        Err(e) => CheckReport::error(name, "normalization", &e),
    }
}

fn scalar_gamma_normalization(tag: AlgebraTag, a: f64, alpha: f64) -> CheckReport {
    let name = format!(
        "riesz/scalar_gamma_normalization/beta{}-a{a}-alpha{alpha}",
        tag.beta()
    );
    let p = ScalarGammaParams::new(a, alpha, tag).unwrap();
    let spec = QuadratureSpec {
        domain: Domain::HalfLine,
        abs_tol: 1e-9,
        max_subdivisions: 80,
    };
    match integrate(
        |c| {
            if !c[0].is_finite() {
                return 0.0;
            }
            log_density_scalar_gamma(&p, c[0])
                .map(f64::exp)
                .unwrap_or(0.0)
        },
        &spec,
    ) {
        Ok(v) => CheckReport::close(name, "normalization", v, 1.0, 1e-8),
        Err(e) => CheckReport::error(name, "normalization", &e),
    }
}

/// Full-cone cubature of a real m = 2 matrix density with a non-constant
/// weight; exercises the matrix density end to end.
fn riesz_m2_cone_normalization(
    variant: Variant,
    a: f64,
    inverse: bool,
    label: &str,
) -> CheckReport {
    let name = format!("riesz/{label}_m2_cone_normalization");
    let tag = AlgebraTag::Real;
    let params = match RieszParams::with_identity_sigma(
        tag,
        2,
        a,
        Weight::new(vec![1.0, 0.0]).unwrap(),
        variant,
    ) {
        Ok(p) => p,
        Err(e) => return CheckReport::error(name, "normalization", &e),
    };
    let spec = QuadratureSpec {
        domain: Domain::SpdCone2x2,
        abs_tol: 2e-4,
        max_subdivisions: 28,
    };
    let result = integrate(
        |c| {
            if c.iter().any(|v| !v.is_finite()) {
                return 0.0;
            }
            let mat = DivisionMatrix::from_real_rows(&[vec![c[0], c[2]], vec![c[2], c[1]]]);
            match HermitianPD::new(mat) {
                Ok(x) => {
                    let ld = if inverse {
                        log_density_inverse_riesz(&params, &x)
                    } else {
                        log_density_riesz(&params, &x)
                    };
                    ld.map(f64::exp).unwrap_or(0.0)
                }
                Err(_) => 0.0,
            }
        },
        &spec,
    );
    match result {
        Ok(v) => CheckReport::close(name, "normalization", v, 1.0, 1e-3),
        Err(e) => CheckReport::error(name, "normalization", &e),
    }
}

fn riesz_sampler_vs_density_cdf(
    seed: u64,
    tag: AlgebraTag,
    variant: Variant,
    a: f64,
    k: f64,
) -> CheckReport {
    let name = format!(
        "riesz/sampler_vs_density_cdf_m1/beta{}-{}",
        tag.beta(),
        match variant {
            Variant::TypeI => "type1",
            Variant::TypeII => "type2",
        }
    );
    let params = match RieszParams::new(
        a,
        Weight::new(vec![k]).unwrap(),
        scalar_hpd(tag, 1.0),
        variant,
    ) {
        Ok(p) => p,
        Err(e) => return CheckReport::error(name, "gof", &e),
    };
    // CDF from the density itself (quadrature route, not the closed form).
    let shape = params.bartlett_shape(0);
    let hi = (shape + 12.0 * shape.sqrt() + 12.0) / tag.beta_f();
    let cdf = GridCdf::build(
        |x| {
            if x <= 0.0 {
                0.0
            } else {
                log_density_riesz(&params, &scalar_hpd(tag, x))
                    .map(f64::exp)
                    .unwrap_or(0.0)
            }
        },
        0.0,
        hi,
        4096,
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 4000;
    let samples: Vec<f64> = (0..n)
        .map(|_| {
            sample_riesz_bartlett(&params, &mut rng)
                .unwrap()
                .matrix()
                .get(0, 0)
                .re()
        })
        .collect();
    match ks_test(&samples, |x| cdf.eval(x), Alpha::P01) {
        Ok(rep) => CheckReport {
            name,
            kind: "gof",
            observed: rep.statistic,
            expected: 0.0,
            tolerance: rep.critical_value,
            passed: rep.passed,
        },
        Err(e) => CheckReport::error(name, "gof", &e),
    }
}

// ---------------------------------------------------------------------------
// beta suite
// ---------------------------------------------------------------------------

pub fn beta_checks(_seed: u64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let params = [
        (3.0, 1.0, 2.5, 0.5),
        (2.0, 0.0, 2.0, 0.0),
        (4.5, 2.0, 3.0, 1.0),
        (2.5, 1.25, 3.5, 0.75),
    ];
    for (family, fname) in [(Family::C, "c"), (Family::K, "k")] {
        for (variant, vname) in [(Variant::TypeI, "type1"), (Variant::TypeII, "type2")] {
            for tag in AlgebraTag::MATRIX {
                for &(a, k, b, t) in &params {
                    out.push(beta_m1_normalization(
                        tag, family, variant, a, k, b, t, fname, vname,
                    ));
                }
            }
        }
    }
    out.push(beta_normalizer_vs_quadrature_m1(Family::C));
    out.push(beta_normalizer_vs_quadrature_m1(Family::K));
    out.push(cbeta1_m2_cubature());
    out.push(cbeta2_m2_cone_cubature());
    out
}

#[allow(clippy::too_many_arguments)]
fn beta_m1_normalization(
    tag: AlgebraTag,
    family: Family,
    variant: Variant,
    a: f64,
    k: f64,
    b: f64,
    t: f64,
    fname: &str,
    vname: &str,
) -> CheckReport {
    let name = format!(
        "beta/{fname}beta_{vname}_m1_normalization/beta{}-a{a}-k{k}-b{b}-t{t}",
        tag.beta()
    );
    let params = match BetaRieszParams::new(
        tag,
        1,
        a,
        Weight::new(vec![k]).unwrap(),
        b,
        Weight::new(vec![t]).unwrap(),
        family,
        variant,
    ) {
        Ok(p) => p,
        Err(e) => return CheckReport::error(name, "normalization", &e),
    };
    let domain = match variant {
        Variant::TypeI => Domain::Unit01,
        Variant::TypeII => Domain::HalfLine,
    };
    let spec = QuadratureSpec {
        domain,
        abs_tol: 1e-9,
        max_subdivisions: 80,
    };
    let result = integrate(
        |c| {
            if !(c[0] > 0.0) || !c[0].is_finite() {
                return 0.0;
            }
            log_density_beta_riesz(&params, &scalar_hpd(tag, c[0]))
                .map(f64::exp)
                .unwrap_or(0.0)
        },
        &spec,
    );
    match result {
        Ok(v) => CheckReport::close(name, "normalization", v, 1.0, 1e-8),
        Err(e) => CheckReport::error(name, "normalization", &e),
    }
}

/// Quadrature of the unnormalized m = 1 type I integrand against the closed
/// beta-function value.
fn beta_normalizer_vs_quadrature_m1(family: Family) -> CheckReport {
    let fname = match family {
        Family::C => "c",
        Family::K => "k",
    };
    let name = format!("beta/{fname}_beta_function_vs_quadrature_m1");
    let (a, k, b, t) = (2.5, 1.0, 3.0, 0.5);
    let kappa = Weight::new(vec![k]).unwrap();
    let tau = Weight::new(vec![t]).unwrap();
    let closed = match family {
        Family::C => ln_c_beta(AlgebraTag::Real, 1, a, &kappa, b, &tau),
        Family::K => ln_k_beta(AlgebraTag::Real, 1, a, &kappa, b, &tau),
    };
    let closed = match closed {
        Ok(v) => v.log_abs.exp(),
        Err(e) => return CheckReport::error(name, "normalization", &e),
    };
    let sign = match family {
        Family::C => 1.0,
        Family::K => -1.0,
    };
    let spec = QuadratureSpec {
        domain: Domain::Unit01,
        abs_tol: 1e-10,
        max_subdivisions: 80,
    };
    let result = integrate(
        |c| {
            let s = c[0];
            ((a + sign * k - 1.0) * s.ln() + (b + sign * t - 1.0) * (1.0 - s).ln()).exp()
        },
        &spec,
    );
    match result {
        Ok(v) => CheckReport::close(name, "normalization", v / closed, 1.0, 1e-8),
        Err(e) => CheckReport::error(name, "normalization", &e),
    }
}

/// Full-matrix cubature of the c-family type I density at m = 2, beta = 1,
/// with a non-constant weight.
fn cbeta1_m2_cubature() -> CheckReport {
    let name = "beta/cbeta_type1_m2_cubature".to_string();
    let tag = AlgebraTag::Real;
    let params = match BetaRieszParams::new(
        tag,
        2,
        2.5,
        Weight::new(vec![1.0, 0.0]).unwrap(),
        2.0,
        Weight::zero(2),
        Family::C,
        Variant::TypeI,
    ) {
        Ok(p) => p,
        Err(e) => return CheckReport::error(name, "normalization", &e),
    };
    let spec = QuadratureSpec {
        domain: Domain::SpdInterval2x2,
        abs_tol: 2e-5,
        max_subdivisions: 26,
    };
    let result = integrate(
        |c| {
            let mat = DivisionMatrix::from_real_rows(&[vec![c[0], c[2]], vec![c[2], c[1]]]);
            match HermitianPD::new(mat) {
                Ok(x) => log_density_beta_riesz(&params, &x)
                    .map(f64::exp)
                    .unwrap_or(0.0),
                Err(_) => 0.0,
            }
        },
        &spec,
    );
    match result {
        Ok(v) => CheckReport::close(name, "normalization", v, 1.0, 1e-4),
        Err(e) => CheckReport::error(name, "normalization", &e),
    }
}

// ---------------------------------------------------------------------------
// eigen suite
// ---------------------------------------------------------------------------

pub fn eigen_checks(_seed: u64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    // m = 1 normalization for every family/variant and matrix algebra.
    for (family, fname) in [(Family::C, "c"), (Family::K, "k")] {
        for (variant, vname) in [(Variant::TypeI, "type1"), (Variant::TypeII, "type2")] {
            for tag in AlgebraTag::MATRIX {
                for &(a, k, b, t) in &[
                    (3.0, 1.0, 2.5, 0.5),
                    (2.0, 0.0, 2.0, 0.0),
                    (4.5, 2.0, 3.0, 1.0),
                    (2.5, 1.25, 3.5, 0.75),
                ] {
                    out.push(eigen_m1_normalization(
                        tag, family, variant, a, k, b, t, fname, vname,
                    ));
                }
            }
        }
    }
    // m = 2 ordered-chamber normalizations at constant weights.
    out.push(eigen_m2_simplex(
        AlgebraTag::Real,
        1.0,
        0.0,
        1.0,
        0.0,
        1e-6,
        "uniform_exponents",
    ));
    out.push(eigen_m2_simplex(
        AlgebraTag::Real,
        2.0,
        1.0,
        1.7,
        2.0,
        1e-4,
        "shifted_weights",
    ));
    out.push(eigen_m2_simplex(
        AlgebraTag::Complex,
        2.5,
        0.0,
        2.5,
        0.0,
        1e-4,
        "complex_zero_weights",
    ));
    out.push(eigen_m2_type2_orthant());
    out
}

#[allow(clippy::too_many_arguments)]
fn eigen_m1_normalization(
    tag: AlgebraTag,
    family: Family,
    variant: Variant,
    a: f64,
    k: f64,
    b: f64,
    t: f64,
    fname: &str,
    vname: &str,
) -> CheckReport {
    let name = format!(
        "eigen/{fname}beta_{vname}_m1_normalization/beta{}-a{a}-k{k}-b{b}-t{t}",
        tag.beta()
    );
    let params = match BetaRieszParams::new(
        tag,
        1,
        a,
        Weight::new(vec![k]).unwrap(),
        b,
        Weight::new(vec![t]).unwrap(),
        family,
        variant,
    ) {
        Ok(p) => p,
        Err(e) => return CheckReport::error(name, "normalization", &e),
    };
    let params = EigenDensityParams::new(params);
    let domain = match variant {
        Variant::TypeI => Domain::Unit01,
        Variant::TypeII => Domain::HalfLine,
    };
    let spec = QuadratureSpec {
        domain,
        abs_tol: 1e-9,
        max_subdivisions: 80,
    };
    let result = integrate(
        |c| {
            if !(c[0] > 0.0) || !c[0].is_finite() {
                return 0.0;
            }
            log_joint_eigen_density(&params, &[c[0]])
                .map(f64::exp)
                .unwrap_or(0.0)
        },
        &spec,
    );
    match result {
        Ok(v) => CheckReport::close(name, "normalization", v, 1.0, 1e-8),
        Err(e) => CheckReport::error(name, "normalization", &e),
    }
}

fn eigen_m2_simplex(
    tag: AlgebraTag,
    a: f64,
    k: f64,
    b: f64,
    t: f64,
    tol: f64,
    label: &str,
) -> CheckReport {
    let name = format!("eigen/cbeta_type1_m2_simplex_normalization/{label}");
    let params = match BetaRieszParams::new(
        tag,
        2,
        a,
        Weight::constant(2, k).unwrap(),
        b,
        Weight::constant(2, t).unwrap(),
        Family::C,
        Variant::TypeI,
    ) {
        Ok(p) => p,
        Err(e) => return CheckReport::error(name, "normalization", &e),
    };
    let params = EigenDensityParams::new(params);
    let spec = QuadratureSpec {
        domain: Domain::OrderedSimplex2D,
        abs_tol: tol / 4.0,
        max_subdivisions: 60,
    };
    let result = integrate(
        |c| {
            if c[0] <= c[1] {
                return 0.0;
            }
            log_joint_eigen_density(&params, &[c[0], c[1]])
                .map(f64::exp)
                .unwrap_or(0.0)
        },
        &spec,
    );
    match result {
        Ok(v) => CheckReport::close(name, "normalization", v, 1.0, tol),
        Err(e) => CheckReport::error(name, "normalization", &e),
    }
}

/// Type II m = 2 normalization over the ordered orthant, mapped to the
/// ordered simplex by the order-preserving substitution d = l / (1 - l).
fn eigen_m2_type2_orthant() -> CheckReport {
    let name = "eigen/cbeta_type2_m2_orthant_normalization".to_string();
    let params = match BetaRieszParams::new(
        AlgebraTag::Real,
        2,
        2.5,
        Weight::zero(2),
        3.0,
        Weight::zero(2),
        Family::C,
        Variant::TypeII,
    ) {
        Ok(p) => p,
        Err(e) => return CheckReport::error(name, "normalization", &e),
    };
    let params = EigenDensityParams::new(params);
    let spec = QuadratureSpec {
        domain: Domain::OrderedSimplex2D,
        abs_tol: 2.5e-5,
        max_subdivisions: 60,
    };
    let result = integrate(
        |c| {
            if c[0] <= c[1] {
                return 0.0;
            }
            let d1 = c[0] / (1.0 - c[0]);
            let d2 = c[1] / (1.0 - c[1]);
            let jac = 1.0 / ((1.0 - c[0]) * (1.0 - c[0]) * (1.0 - c[1]) * (1.0 - c[1]));
            log_joint_eigen_density(&params, &[d1, d2])
                .map(|l| l.exp() * jac)
                .unwrap_or(0.0)
        },
        &spec,
    );
    match result {
        Ok(v) => CheckReport::close(name, "normalization", v, 1.0, 1e-4),
        Err(e) => CheckReport::error(name, "normalization", &e),
    }
}

/// Full-cone cubature of the c-family type II density at m = 2 with
/// constant weights (the regime where the printed type II weight terms are
/// exact).
fn cbeta2_m2_cone_cubature() -> CheckReport {
    let name = "beta/cbeta_type2_m2_cone_cubature".to_string();
    let tag = AlgebraTag::Real;
    let params = match BetaRieszParams::new(
        tag,
        2,
        4.0,
        Weight::constant(2, 1.0).unwrap(),
        5.0,
        Weight::constant(2, 2.0).unwrap(),
        Family::C,
        Variant::TypeII,
    ) {
        Ok(p) => p,
        Err(e) => return CheckReport::error(name, "normalization", &e),
    };
    let spec = QuadratureSpec {
        domain: Domain::SpdCone2x2,
        abs_tol: 2e-4,
        max_subdivisions: 28,
    };
    let result = integrate(
        |c| {
            if c.iter().any(|v| !v.is_finite()) {
                return 0.0;
            }
            let mat = DivisionMatrix::from_real_rows(&[vec![c[0], c[2]], vec![c[2], c[1]]]);
            match HermitianPD::new(mat) {
                Ok(x) => log_density_beta_riesz(&params, &x)
                    .map(f64::exp)
                    .unwrap_or(0.0),
                Err(_) => 0.0,
            }
        },
        &spec,
    );
    match result {
        Ok(v) => CheckReport::close(name, "normalization", v, 1.0, 1e-3),
        Err(e) => CheckReport::error(name, "normalization", &e),
    }
}
