use crate::division_algebra::eigen;
use crate::division_algebra::{AlgebraTag, DivisionScalar};
use crate::error::{Error, Result};

/// Tolerance on the imaginary components of a Hermitian diagonal.
const DIAG_IMAG_TOL: f64 = 1e-12;

/// Dense row-major matrix over one of the division algebras.
#[derive(Clone, Debug)]
pub struct DivisionMatrix {
    tag: AlgebraTag,
    rows: usize,
    cols: usize,
    entries: Vec<DivisionScalar>,
}

impl DivisionMatrix {
    pub fn zeros(tag: AlgebraTag, rows: usize, cols: usize) -> Self {
        Self {
            tag,
            rows,
            cols,
            entries: vec![DivisionScalar::zero(tag); rows * cols],
        }
    }

    pub fn identity(tag: AlgebraTag, n: usize) -> Self {
        let mut m = Self::zeros(tag, n, n);
        for i in 0..n {
            m.set(i, i, DivisionScalar::one(tag));
        }
        m
    }

    pub fn from_fn(
        tag: AlgebraTag,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> DivisionScalar,
    ) -> Self {
        let mut m = Self::zeros(tag, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Real matrix from nested rows; only for `beta = 1`.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        Self::from_fn(AlgebraTag::Real, r, c, |i, j| {
            DivisionScalar::from_real(AlgebraTag::Real, rows[i][j])
        })
    }

    #[inline]
    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> DivisionScalar {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: DivisionScalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.tag, self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs)?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(rhs.entries.iter()) {
            *a = a.add(b);
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs)?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(rhs.entries.iter()) {
            *a = a.sub(b);
        }
        Ok(out)
    }

    pub fn scale(&self, t: f64) -> Self {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = a.scale(t);
        }
        out
    }

    fn check_same_shape(&self, rhs: &Self) -> Result<()> {
        if self.tag != rhs.tag {
            return Err(Error::TagMismatch {
                expected: self.tag.beta() as u32,
                got: rhs.tag.beta() as u32,
            });
        }
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                context: format!("{}x{} vs {}x{}", self.rows, self.cols, rhs.rows, rhs.cols),
            });
        }
        Ok(())
    }

    /// Matrix product; requires an associative algebra (beta <= 4).
    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        self.tag.require_matrix_ops()?;
        if self.tag != rhs.tag {
            return Err(Error::TagMismatch {
                expected: self.tag.beta() as u32,
                got: rhs.tag.beta() as u32,
            });
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "inner dimensions {} and {} do not agree",
                    self.cols, rhs.rows
                ),
            });
        }
        let mut out = Self::zeros(self.tag, self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = DivisionScalar::zero(self.tag);
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).mul(&rhs.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Real part of the trace.
    pub fn re_trace(&self) -> f64 {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).re())
            .sum()
    }

    /// Frobenius norm over all real components.
    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|e| e.norm_sq()).sum::<f64>().sqrt()
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.entries.iter().map(|e| e.abs()).fold(0.0, f64::max)
    }

    /// Replace by the Hermitian part (A + A*)/2, removing roundoff asymmetry.
    pub fn hermitian_part(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                context: format!("hermitian part of {}x{} matrix", self.rows, self.cols),
            });
        }
        Ok(Self::from_fn(self.tag, self.rows, self.cols, |i, j| {
            self.get(i, j).add(&self.get(j, i).conj()).scale(0.5)
        }))
    }

    /// Complex-adjoint embedding of a quaternion matrix.
    ///
    /// Each quaternion `q = a1 + a2 j` with complex `a1`, `a2` maps to the
    /// block form `[[A1, A2], [-conj(A2), conj(A1)]]`, a `2m x 2n` complex
    /// matrix. The embedding is a homomorphism (`adj(AB) = adj(A) adj(B)`)
    /// and sends conjugate transposes to conjugate transposes, so Hermitian
    /// quaternion matrices become Hermitian complex matrices whose spectrum
    /// carries every eigenvalue twice.
    pub fn complex_adjoint(&self) -> Result<DivisionMatrix> {
        if self.tag != AlgebraTag::Quaternion {
            return Err(Error::TagMismatch {
                expected: 4,
                got: self.tag.beta() as u32,
            });
        }
        let (m, n) = (self.rows, self.cols);
        let ctag = AlgebraTag::Complex;
        let mut out = DivisionMatrix::zeros(ctag, 2 * m, 2 * n);
        for i in 0..m {
            for j in 0..n {
                let q = self.get(i, j);
                let a1 = DivisionScalar::new(ctag, &[q.component(0), q.component(1)]).unwrap();
                let a2 = DivisionScalar::new(ctag, &[q.component(2), q.component(3)]).unwrap();
                out.set(i, j, a1);
                out.set(i, n + j, a2);
                out.set(m + i, j, a2.conj().neg());
                out.set(m + i, n + j, a1.conj());
            }
        }
        Ok(out)
    }
}

/// Upper triangular matrix with strictly positive real diagonal.
#[derive(Clone, Debug)]
pub struct UpperTriangularPosDiag {
    mat: DivisionMatrix,
}

impl UpperTriangularPosDiag {
    /// Validates the triangular shape and the diagonal.
    pub fn new(mat: DivisionMatrix) -> Result<Self> {
        mat.tag().require_matrix_ops()?;
        if mat.rows() != mat.cols() {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "triangular matrix must be square, got {}x{}",
                    mat.rows(),
                    mat.cols()
                ),
            });
        }
        let n = mat.rows();
        for i in 0..n {
            let d = mat.get(i, i);
            if !(d.re() > 0.0) || d.abs() - d.re().abs() > DIAG_IMAG_TOL {
                return Err(Error::NotPositiveDefinite {
                    reason: format!("diagonal entry {i} is not real positive"),
                });
            }
            for j in 0..i {
                if mat.get(i, j).abs() != 0.0 {
                    return Err(Error::DimensionMismatch {
                        context: format!("entry ({i},{j}) below the diagonal is nonzero"),
                    });
                }
            }
        }
        Ok(Self { mat })
    }

    #[inline]
    pub fn as_matrix(&self) -> &DivisionMatrix {
        &self.mat
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    #[inline]
    pub fn diag(&self, i: usize) -> f64 {
        self.mat.get(i, i).re()
    }

    /// Product of two upper triangular factors, again upper triangular.
    pub fn mul_upper(&self, rhs: &Self) -> Result<Self> {
        let prod = self.mat.matmul(&rhs.mat)?;
        Self::new(prod)
    }

    /// Inverse by back substitution; stays upper triangular.
    pub fn invert(&self) -> Self {
        let n = self.dim();
        let tag = self.mat.tag();
        let mut v = DivisionMatrix::zeros(tag, n, n);
        for j in (0..n).rev() {
            v.set(j, j, DivisionScalar::from_real(tag, 1.0 / self.diag(j)));
            for i in (0..j).rev() {
                let mut acc = DivisionScalar::zero(tag);
                for k in (i + 1)..=j {
                    acc = acc.add(&self.mat.get(i, k).mul(&v.get(k, j)));
                }
                v.set(i, j, acc.scale(-1.0 / self.diag(i)));
            }
        }
        Self { mat: v }
    }

    /// Reconstruct T* T.
    pub fn gram(&self) -> Result<DivisionMatrix> {
        self.mat.conj_transpose().matmul(&self.mat)
    }

    fn from_parts_unchecked(mat: DivisionMatrix) -> Self {
        Self { mat }
    }
}

/// Hermitian positive definite matrix, validated at construction.
///
/// Validity is established by one canonical check: the upper Cholesky
/// factorization `S = T* T` must succeed with strictly positive pivots.
/// The factor is cached, so determinants, leading minors and inverses come
/// for free afterwards.
#[derive(Clone, Debug)]
pub struct HermitianPD {
    mat: DivisionMatrix,
    chol: UpperTriangularPosDiag,
}

impl HermitianPD {
    pub fn new(mat: DivisionMatrix) -> Result<Self> {
        mat.tag().require_matrix_ops()?;
        if mat.rows() != mat.cols() {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "Hermitian matrix must be square, got {}x{}",
                    mat.rows(),
                    mat.cols()
                ),
            });
        }
        let n = mat.rows();
        let scale = mat.max_abs_entry().max(1.0);
        for i in 0..n {
            let d = mat.get(i, i);
            let imag = (d.norm_sq() - d.re() * d.re()).max(0.0).sqrt();
            if imag > DIAG_IMAG_TOL {
                return Err(Error::NotPositiveDefinite {
                    reason: format!("diagonal entry {i} has imaginary magnitude {imag:.3e}"),
                });
            }
            for j in (i + 1)..n {
                let d = mat.get(i, j).sub(&mat.get(j, i).conj()).abs();
                if d > 1e-10 * scale {
                    return Err(Error::NotPositiveDefinite {
                        reason: format!(
                            "entries ({i},{j}) and ({j},{i}) are not conjugate (gap {d:.3e})"
                        ),
                    });
                }
            }
        }
        let chol = cholesky_upper_raw(&mat)?;
        Ok(Self { mat, chol })
    }

    /// Build S = T* T from its own upper factor; skips revalidation since
    /// the factor is the Cholesky factor of the product by uniqueness.
    pub fn from_upper_factor(t: UpperTriangularPosDiag) -> Result<Self> {
        let mat = t.gram()?.hermitian_part()?;
        Ok(Self { mat, chol: t })
    }

    pub fn identity(tag: AlgebraTag, n: usize) -> Result<Self> {
        Self::new(DivisionMatrix::identity(tag, n))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    #[inline]
    pub fn tag(&self) -> AlgebraTag {
        self.mat.tag()
    }

    #[inline]
    pub fn matrix(&self) -> &DivisionMatrix {
        &self.mat
    }

    /// The cached upper Cholesky factor T with S = T* T.
    #[inline]
    pub fn cholesky_upper(&self) -> &UpperTriangularPosDiag {
        &self.chol
    }

    /// log det S = 2 sum_i log t_ii.
    pub fn logdet(&self) -> f64 {
        (0..self.dim()).map(|i| 2.0 * self.chol.diag(i).ln()).sum()
    }

    /// Logs of the leading principal minors |S_p|, p = 1..m.
    ///
    /// The p-th leading block of T* T is T_p* T_p, so the p-th minor is the
    /// running product of squared Cholesky diagonals.
    pub fn leading_principal_logminors(&self) -> Vec<f64> {
        let mut acc = 0.0;
        (0..self.dim())
            .map(|i| {
                acc += 2.0 * self.chol.diag(i).ln();
                acc
            })
            .collect()
    }

    /// Inverse via the triangular factor: S^{-1} = T^{-1} T^{-*}.
    pub fn inverse(&self) -> Result<HermitianPD> {
        let v = self.chol.invert();
        let inv = v
            .as_matrix()
            .matmul(&v.as_matrix().conj_transpose())?
            .hermitian_part()?;
        HermitianPD::new(inv)
    }

    /// Eigenvalues, real positive, sorted descending.
    ///
    /// Real and complex matrices go through a cyclic Jacobi sweep; a
    /// quaternion matrix is embedded as a 2m x 2m complex matrix whose
    /// spectrum repeats every eigenvalue twice, checked and deduplicated.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        match self.tag() {
            AlgebraTag::Real | AlgebraTag::Complex => eigen::eigenvalues_complex(&self.mat),
            AlgebraTag::Quaternion => {
                let emb = self.mat.complex_adjoint()?;
                let all = eigen::eigenvalues_complex(&emb)?;
                dedup_pairs(&all)
            }
            AlgebraTag::Octonion => Err(Error::OctonionMatrixOp),
        }
    }

    /// Sum of two HPD matrices (revalidated).
    pub fn add(&self, rhs: &HermitianPD) -> Result<HermitianPD> {
        HermitianPD::new(self.mat.add(&rhs.mat)?)
    }

    /// I - S when that difference is still positive definite.
    pub fn complement_to_identity(&self) -> Result<HermitianPD> {
        let id = DivisionMatrix::identity(self.tag(), self.dim());
        HermitianPD::new(id.sub(&self.mat)?)
    }

    /// Real part of tr(A S) for the stored matrix.
    pub fn re_trace_product(&self, rhs: &HermitianPD) -> Result<f64> {
        Ok(self.mat.matmul(&rhs.mat)?.re_trace())
    }
}

/// Log-Jacobian of the congruence Y = A X A* on the Hermitian space:
/// `(beta (m-1)/2 + 1) * logdet(A* A)`.
pub fn log_jacobian_congruence(a: &DivisionMatrix) -> Result<f64> {
    if a.rows() != a.cols() {
        return Err(Error::DimensionMismatch {
            context: format!(
                "congruence matrix must be square, got {}x{}",
                a.rows(),
                a.cols()
            ),
        });
    }
    let gram = HermitianPD::new(a.conj_transpose().matmul(a)?.hermitian_part()?)?;
    let m = a.rows() as f64;
    let beta = a.tag().beta_f();
    Ok((beta * (m - 1.0) / 2.0 + 1.0) * gram.logdet())
}

/// Log-Jacobian of the Cholesky map T -> S = T* T at T:
/// `m log 2 + sum_i (beta (m-i) + 1) log t_ii` with i counted from one.
pub fn log_jacobian_cholesky_gram(t: &UpperTriangularPosDiag) -> f64 {
    let m = t.dim();
    let beta = t.as_matrix().tag().beta_f();
    let mut out = m as f64 * std::f64::consts::LN_2;
    for i in 0..m {
        out += (beta * (m - 1 - i) as f64 + 1.0) * t.diag(i).ln();
    }
    out
}

/// Log-Jacobian (magnitude) of matrix inversion Y = S^{-1} at S:
/// `-(beta (m-1) + 2) logdet S`.
pub fn log_jacobian_inversion(s: &HermitianPD) -> f64 {
    let m = s.dim() as f64;
    let beta = s.tag().beta_f();
    -(beta * (m - 1.0) + 2.0) * s.logdet()
}

/// Upper Cholesky factorization S = T* T with positive pivots.
///
/// Works for beta in {1, 2, 4}; each pivot must stay strictly positive,
/// otherwise the input is reported as not positive definite with the index
/// of the first failing leading minor.
pub(crate) fn cholesky_upper_raw(s: &DivisionMatrix) -> Result<UpperTriangularPosDiag> {
    s.tag().require_matrix_ops()?;
    let n = s.rows();
    let tag = s.tag();
    let mut t = DivisionMatrix::zeros(tag, n, n);
    for j in 0..n {
        for i in 0..j {
            // t_ij = (s_ij - sum_{k<i} conj(t_ki) t_kj) / t_ii
            let mut acc = s.get(i, j);
            for k in 0..i {
                acc = acc.sub(&t.get(k, i).conj().mul(&t.get(k, j)));
            }
            t.set(i, j, acc.scale(1.0 / t.get(i, i).re()));
        }
        let mut pivot = s.get(j, j).re();
        for k in 0..j {
            pivot -= t.get(k, j).norm_sq();
        }
        if !(pivot > 1e-300) || !pivot.is_finite() {
            return Err(Error::NotPositiveDefinite {
                reason: format!("leading minor of order {} is not positive", j + 1),
            });
        }
        t.set(j, j, DivisionScalar::from_real(tag, pivot.sqrt()));
    }
    Ok(UpperTriangularPosDiag::from_parts_unchecked(t))
}

/// Collapse a spectrum that must consist of coincident pairs.
fn dedup_pairs(sorted_desc: &[f64]) -> Result<Vec<f64>> {
    if !sorted_desc.len().is_multiple_of(2) {
        return Err(Error::PairingFailure {
            detail: "odd spectrum length".into(),
        });
    }
    let mut out = Vec::with_capacity(sorted_desc.len() / 2);
    for pair in sorted_desc.chunks_exact(2) {
        let (a, b) = (pair[0], pair[1]);
        if (a - b).abs() > 1e-8 * a.abs().max(1.0) {
            return Err(Error::PairingFailure {
                detail: format!("eigenvalues {a} and {b} do not pair"),
            });
        }
        out.push(0.5 * (a + b));
    }
    Ok(out)
}
