//! Cyclic Jacobi eigensolver for Hermitian matrices with real or complex
//! entries. Quaternion spectra are obtained elsewhere through the complex
//! adjoint embedding.

use crate::division_algebra::{AlgebraTag, DivisionMatrix, DivisionScalar, HermitianPD};
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 60;

/// Dense complex matrix as parallel real/imag storage.
struct CMat {
    n: usize,
    re: Vec<f64>,
    im: Vec<f64>,
}

impl CMat {
    fn from_division(m: &DivisionMatrix) -> Result<Self> {
        let n = m.rows();
        if m.rows() != m.cols() {
            return Err(Error::DimensionMismatch {
                context: "eigensolver needs a square matrix".into(),
            });
        }
        let mut re = vec![0.0; n * n];
        let mut im = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let e = m.get(i, j);
                re[i * n + j] = e.component(0);
                im[i * n + j] = if m.tag().beta() > 1 {
                    e.component(1)
                } else {
                    0.0
                };
            }
        }
        Ok(Self { n, re, im })
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> (f64, f64) {
        (self.re[i * self.n + j], self.im[i * self.n + j])
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: (f64, f64)) {
        self.re[i * self.n + j] = v.0;
        self.im[i * self.n + j] = v.1;
    }

    fn off_diag_sq(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let (r, m) = self.at(i, j);
                s += r * r + m * m;
            }
        }
        s
    }

    fn frob_sq(&self) -> f64 {
        self.re.iter().map(|x| x * x).sum::<f64>() + self.im.iter().map(|x| x * x).sum::<f64>()
    }
}

/// One two-sided rotation zeroing a[p][q]; optionally accumulates the
/// rotations into `vecs` so columns of `vecs` end up as eigenvectors.
fn rotate(a: &mut CMat, vecs: Option<&mut CMat>, p: usize, q: usize) {
    let apq = a.at(p, q);
    let mag = (apq.0 * apq.0 + apq.1 * apq.1).sqrt();
    if mag == 0.0 {
        return;
    }
    let phase = (apq.0 / mag, apq.1 / mag); // e^{i phi}
    let app = a.at(p, p).0;
    let aqq = a.at(q, q).0;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // Column update: B = A G with G[p][p]=c, G[p][q]=s e^{i phi},
    // G[q][p]=-s e^{-i phi}, G[q][q]=c.
    let n = a.n;
    let se_pos = (s * phase.0, s * phase.1); // s e^{i phi}
    let se_neg = (s * phase.0, -s * phase.1); // s e^{-i phi}
    for k in 0..n {
        let akp = a.at(k, p);
        let akq = a.at(k, q);
        let new_p = (
            c * akp.0 - (se_neg.0 * akq.0 - se_neg.1 * akq.1),
            c * akp.1 - (se_neg.0 * akq.1 + se_neg.1 * akq.0),
        );
        let new_q = (
            se_pos.0 * akp.0 - se_pos.1 * akp.1 + c * akq.0,
            se_pos.0 * akp.1 + se_pos.1 * akp.0 + c * akq.1,
        );
        a.set(k, p, new_p);
        a.set(k, q, new_q);
    }
    // Row update: A' = G* B.
    for k in 0..n {
        let apk = a.at(p, k);
        let aqk = a.at(q, k);
        let new_p = (
            c * apk.0 - (se_pos.0 * aqk.0 - se_pos.1 * aqk.1),
            c * apk.1 - (se_pos.0 * aqk.1 + se_pos.1 * aqk.0),
        );
        let new_q = (
            se_neg.0 * apk.0 - se_neg.1 * apk.1 + c * aqk.0,
            se_neg.0 * apk.1 + se_neg.1 * apk.0 + c * aqk.1,
        );
        a.set(p, k, new_p);
        a.set(q, k, new_q);
    }
    a.set(p, q, (0.0, 0.0));
    a.set(q, p, (0.0, 0.0));
    a.im[p * n + p] = 0.0;
    a.im[q * n + q] = 0.0;

    if let Some(v) = vecs {
        for k in 0..n {
            let vkp = v.at(k, p);
            let vkq = v.at(k, q);
            let new_p = (
                c * vkp.0 - (se_neg.0 * vkq.0 - se_neg.1 * vkq.1),
                c * vkp.1 - (se_neg.0 * vkq.1 + se_neg.1 * vkq.0),
            );
            let new_q = (
                se_pos.0 * vkp.0 - se_pos.1 * vkp.1 + c * vkq.0,
                se_pos.0 * vkp.1 + se_pos.1 * vkp.0 + c * vkq.1,
            );
            v.set(k, p, new_p);
            v.set(k, q, new_q);
        }
    }
}

fn jacobi(a: &mut CMat, mut vecs: Option<&mut CMat>) -> Result<()> {
    let n = a.n;
    if n <= 1 {
        return Ok(());
    }
    let scale = a.frob_sq().max(f64::MIN_POSITIVE);
    for _ in 0..MAX_SWEEPS {
        if a.off_diag_sq() <= 1e-30 * scale {
            return Ok(());
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(a, vecs.as_deref_mut(), p, q);
            }
        }
    }
    if a.off_diag_sq() <= 1e-22 * scale {
        Ok(())
    } else {
        Err(Error::Unsupported {
            context: "Jacobi eigensolver did not converge".into(),
        })
    }
}

/// Eigenvalues of a real-symmetric or complex-Hermitian matrix, descending.
pub(crate) fn eigenvalues_complex(m: &DivisionMatrix) -> Result<Vec<f64>> {
    let mut a = CMat::from_division(m)?;
    jacobi(&mut a, None)?;
    let mut lams: Vec<f64> = (0..a.n).map(|i| a.at(i, i).0).collect();
    lams.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(lams)
}

/// Full eigendecomposition S = V diag(lams) V* for beta <= 2.
///
/// Returns eigenvalues in descending order with the matching eigenvector
/// columns as a complex `DivisionMatrix`.
pub fn eigen_decomposition_hermitian(s: &HermitianPD) -> Result<(Vec<f64>, DivisionMatrix)> {
    if s.tag().beta() > 2 {
        return Err(Error::Unsupported {
            context: "eigenvectors are only computed for beta <= 2".into(),
        });
    }
    let mut a = CMat::from_division(s.matrix())?;
    let n = a.n;
    let mut v = CMat::from_division(&DivisionMatrix::identity(AlgebraTag::Complex, n))?;
    jacobi(&mut a, Some(&mut v))?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.at(j, j).0.partial_cmp(&a.at(i, i).0).unwrap());
    let lams: Vec<f64> = order.iter().map(|&i| a.at(i, i).0).collect();
    let vecs = DivisionMatrix::from_fn(AlgebraTag::Complex, n, n, |i, j| {
        let (re, im) = v.at(i, order[j]);
        DivisionScalar::new(AlgebraTag::Complex, &[re, im]).unwrap()
    });
    Ok((lams, vecs))
}
