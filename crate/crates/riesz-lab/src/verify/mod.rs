//! Independent verification oracles: adaptive quadrature over the fixed
//! domains, goodness-of-fit statistics, and the registered check suites
//! behind the `verify` CLI subcommand and the acceptance tests.

mod gof;
mod quad;
pub mod suites;

pub use gof::{ks_test, ks_two_sample, moment_report, Alpha, GofReport};
pub use quad::{integrate, Domain, QuadratureSpec};
pub use suites::{run_suite, CheckReport, SuiteName};

/// Deterministic random inputs shared by unit, property and acceptance
/// tests: generic HPD matrices, weights, and CDF grids built from density
/// evaluations.
pub mod testutil {
    use rand::Rng;

    use crate::division_algebra::{AlgebraTag, DivisionMatrix, DivisionScalar, HermitianPD};
    use crate::specfun::Weight;

    /// Dense matrix with components uniform on (-1, 1).
    pub fn random_matrix<R: Rng + ?Sized>(
        tag: AlgebraTag,
        rows: usize,
        cols: usize,
        rng: &mut R,
    ) -> DivisionMatrix {
        DivisionMatrix::from_fn(tag, rows, cols, |_, _| {
            let comps: Vec<f64> = (0..tag.beta())
                .map(|_| rng.random::<f64>() * 2.0 - 1.0)
                .collect();
            DivisionScalar::new(tag, &comps).unwrap()
        })
    }

    /// Well-conditioned random HPD matrix A* A + m I.
    pub fn random_hpd<R: Rng + ?Sized>(tag: AlgebraTag, m: usize, rng: &mut R) -> HermitianPD {
        let a = random_matrix(tag, m, m, rng);
        let s = a
            .conj_transpose()
            .matmul(&a)
            .unwrap()
            .add(&DivisionMatrix::identity(tag, m).scale(m as f64))
            .unwrap()
            .hermitian_part()
            .unwrap();
        HermitianPD::new(s).unwrap()
    }

    /// Random upper triangular matrix with diagonal in (0.5, 1.5).
    pub fn random_upper_triangular<R: Rng + ?Sized>(
        tag: AlgebraTag,
        m: usize,
        rng: &mut R,
    ) -> DivisionMatrix {
        let mut u = random_matrix(tag, m, m, rng);
        for i in 0..m {
            for j in 0..i {
                u.set(i, j, DivisionScalar::zero(tag));
            }
            u.set(
                i,
                i,
                DivisionScalar::from_real(tag, 0.5 + rng.random::<f64>()),
            );
        }
        u
    }

    /// Random weight with `m` parts, each in [0, span), non-increasing;
    /// rounded to integers when `integer` is set.
    pub fn random_weight<R: Rng + ?Sized>(
        m: usize,
        span: f64,
        integer: bool,
        rng: &mut R,
    ) -> Weight {
        let mut parts: Vec<f64> = (0..m).map(|_| rng.random::<f64>() * span).collect();
        if integer {
            for p in parts.iter_mut() {
                *p = p.floor();
            }
        }
        parts.sort_by(|a, b| b.partial_cmp(a).unwrap());
        Weight::new(parts).unwrap()
    }

    /// Tabulated CDF on [lo, hi] built by cumulative trapezoid integration
    /// of `density` on a uniform grid; evaluation interpolates linearly.
    pub struct GridCdf {
        lo: f64,
        step: f64,
        cdf: Vec<f64>,
    }

    impl GridCdf {
        pub fn build(density: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> Self {
            let step = (hi - lo) / n as f64;
            let mut cdf = Vec::with_capacity(n + 1);
            cdf.push(0.0);
            let mut acc = 0.0;
            let mut prev = density(lo);
            for i in 1..=n {
                let x = lo + i as f64 * step;
                let cur = density(x);
                acc += 0.5 * (prev + cur) * step;
                cdf.push(acc);
                prev = cur;
            }
            // Normalize away the residual truncation error.
            let total = *cdf.last().unwrap();
            if total > 0.0 {
                for v in cdf.iter_mut() {
                    *v /= total;
                }
            }
            Self { lo, step, cdf }
        }

        pub fn eval(&self, x: f64) -> f64 {
            let t = (x - self.lo) / self.step;
            if t <= 0.0 {
                return 0.0;
            }
            let idx = t.floor() as usize;
            if idx + 1 >= self.cdf.len() {
                return 1.0;
            }
            let frac = t - idx as f64;
            self.cdf[idx] * (1.0 - frac) + self.cdf[idx + 1] * frac
        }
    }
}
