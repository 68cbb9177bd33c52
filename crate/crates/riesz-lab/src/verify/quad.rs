//! Adaptive Simpson quadrature with Richardson stopping, plus the fixed
//! integration domains used by the normalization checks.
//!
//! Every domain is mapped onto closed boxes by smoothing substitutions
//! (`x = sin^2(theta)` on unit intervals, `x = t/(1-t)` with the same
//! softening for half lines), which removes the inverse-square-root
//! endpoint behavior of beta-type integrands. Integrand values that come
//! out non-finite are treated as zero: the checks integrate densities,
//! which vanish wherever the transformed coordinates blow up.

use crate::error::{Error, Result};

/// Supported integration regions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// The open interval (0, 1); integrand takes one coordinate.
    Unit01,
    /// The half line (0, inf); integrand takes one coordinate.
    HalfLine,
    /// Ordered pairs 1 > l1 > l2 > 0, integrated by symmetrizing over the
    /// unit square and halving; integrand takes (l1, l2) already ordered.
    OrderedSimplex2D,
    /// Real symmetric positive definite 2x2 matrices, coordinates
    /// (s11, s22, s12); s11, s22 on the half line and |s12| < sqrt(s11 s22).
    SpdCone2x2,
    /// Real symmetric 2x2 matrices with 0 < S < I, same coordinates with
    /// both S and I - S positive definite.
    SpdInterval2x2,
}

/// Tolerance and budget for one integral.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    pub domain: Domain,
    pub abs_tol: f64,
    pub max_subdivisions: u32,
}

impl QuadratureSpec {
    pub fn new(domain: Domain, abs_tol: f64, max_subdivisions: u32) -> Result<Self> {
        if !(abs_tol > 0.0) {
            return Err(Error::DomainViolation {
                requirement: format!("abs_tol > 0 (got {abs_tol})"),
            });
        }
        Ok(Self {
            domain,
            abs_tol,
            max_subdivisions,
        })
    }
}

/// Adaptive estimate of the integral of `f` over the spec's domain.
///
/// `f` receives the domain coordinates as a slice (1 entry for the 1-D
/// domains, 2 for the simplex, 3 for the matrix cones).
pub fn integrate(f: impl Fn(&[f64]) -> f64, spec: &QuadratureSpec) -> Result<f64> {
    use std::cell::Cell;
    let tol = spec.abs_tol;
    let depth = spec.max_subdivisions;
    // Inner non-convergence inside nested domains is recorded here and
    // reported after the outer pass, instead of silently zeroing regions.
    let inner_failed = Cell::new(false);
    let fail = || {
        inner_failed.set(true);
        0.0
    };
    let result = match spec.domain {
        Domain::Unit01 => integrate_unit(|x| f(&[x]), tol, depth),
        Domain::HalfLine => integrate_halfline(|x| f(&[x]), tol, depth),
        Domain::OrderedSimplex2D => {
            // Symmetric extension over the square, divided by 2!.
            let inner_tol = tol / 4.0;
            integrate_unit(
                |x| {
                    integrate_unit(
                        |y| {
                            let (a, b) = if x >= y { (x, y) } else { (y, x) };
                            f(&[a, b])
                        },
                        inner_tol,
                        depth,
                    )
                    .unwrap_or_else(|_| fail())
                },
                tol / 2.0,
                depth,
            )
            .map(|v| v / 2.0)
        }
        Domain::SpdCone2x2 => {
            let mid_tol = tol / 6.0;
            let inner_tol = tol / 36.0;
            integrate_halfline(
                |s11| {
                    integrate_halfline(
                        |s22| {
                            let r = (s11 * s22).sqrt();
                            slab_integral(&f, s11, s22, r, inner_tol, depth)
                                .unwrap_or_else(|_| fail())
                        },
                        mid_tol,
                        depth,
                    )
                    .unwrap_or_else(|_| fail())
                },
                tol / 2.0,
                depth,
            )
        }
        Domain::SpdInterval2x2 => {
            let mid_tol = tol / 6.0;
            let inner_tol = tol / 36.0;
            integrate_unit(
                |s11| {
                    integrate_unit(
                        |s22| {
                            let r = (s11 * s22).sqrt().min(((1.0 - s11) * (1.0 - s22)).sqrt());
                            slab_integral(&f, s11, s22, r, inner_tol, depth)
                                .unwrap_or_else(|_| fail())
                        },
                        mid_tol,
                        depth,
                    )
                    .unwrap_or_else(|_| fail())
                },
                tol / 2.0,
                depth,
            )
        }
    };
    if inner_failed.get() {
        return Err(Error::QuadratureNoConvergence {
            max_subdivisions: depth,
        });
    }
    result
}

/// Integral over s12 in (-r, r) with the softening s12 = r sin(u).
fn slab_integral(
    f: &impl Fn(&[f64]) -> f64,
    s11: f64,
    s22: f64,
    r: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    if !(r > 0.0) {
        return Ok(0.0);
    }
    adaptive_simpson(
        &sanitize(|u: f64| f(&[s11, s22, r * u.sin()]) * r * u.cos()),
        -std::f64::consts::FRAC_PI_2,
        std::f64::consts::FRAC_PI_2,
        tol,
        depth,
    )
}

/// (0,1) with x = sin^2 theta.
fn integrate_unit(f: impl Fn(f64) -> f64, tol: f64, depth: u32) -> Result<f64> {
    let g = sanitize(move |theta: f64| {
        let s = theta.sin();
        let x = s * s;
        f(x) * (2.0 * theta).sin()
    });
    adaptive_simpson(&g, 0.0, std::f64::consts::FRAC_PI_2, tol, depth)
}

/// (0,inf) with x = t/(1-t), then t = sin^2 theta.
fn integrate_halfline(f: impl Fn(f64) -> f64, tol: f64, depth: u32) -> Result<f64> {
    let g = sanitize(move |theta: f64| {
        let s = theta.sin();
        let t = s * s;
        let one_minus = 1.0 - t;
        let x = t / one_minus;
        f(x) * (2.0 * theta).sin() / (one_minus * one_minus)
    });
    adaptive_simpson(&g, 0.0, std::f64::consts::FRAC_PI_2, tol, depth)
}

fn sanitize(f: impl Fn(f64) -> f64) -> impl Fn(f64) -> f64 {
    move |x| {
        let v = f(x);
        if v.is_finite() {
            v
        } else {
            0.0
        }
    }
}

/// Adaptive Simpson on [a, b] with Richardson extrapolation at each split.
///
/// Function evaluations are clamped a relative 1e-12 inside the interval,
/// so integrands only defined on the open interval are probed at their
/// limiting values instead of the endpoints themselves.
fn adaptive_simpson(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    max_depth: u32,
) -> Result<f64> {
    let delta = (b - a) * 1e-12;
    let (lo_clamp, hi_clamp) = (a + delta, b - delta);
    let g = move |x: f64| f(x.clamp(lo_clamp, hi_clamp));
    // Panels narrower than this are accepted as is: at that scale the
    // Richardson gap of our (cancellation-prone) integrands is dominated
    // by floating-point noise, not by quadrature error.
    let min_width = (b - a) * 1e-9;
    // A modest uniform pre-split guards against the coarse first panel
    // missing structure in the middle of the interval.
    const PRESPLIT: usize = 8;
    let h = (b - a) / PRESPLIT as f64;
    let mut total = 0.0;
    for i in 0..PRESPLIT {
        let lo = a + i as f64 * h;
        let hi = lo + h;
        let mid = 0.5 * (lo + hi);
        let (flo, fmid, fhi) = (g(lo), g(mid), g(hi));
        let whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        total += adapt(
            &g,
            lo,
            hi,
            flo,
            fmid,
            fhi,
            whole,
            tol / PRESPLIT as f64,
            max_depth,
            min_width,
        )?;
    }
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn adapt(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    min_width: f64,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    // The second and third acceptance branches are roundoff floors: once the
    // Richardson gap sits at the relative machine-noise level of the panel,
    // or the panel is vanishingly narrow, further splitting chases noise.
    if delta.abs() <= 15.0 * tol || delta.abs() <= 1e-14 * whole.abs() || (b - a) <= min_width {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::QuadratureNoConvergence {
            max_subdivisions: 0,
        });
    }
    let l = adapt(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1, min_width)?;
    let r = adapt(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1, min_width)?;
    Ok(l + r)
}
