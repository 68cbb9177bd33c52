use std::fmt;

use crate::error::{Error, Result};

/// Which real normed division algebra a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraTag {
    Real,
    Complex,
    Quaternion,
    Octonion,
}

impl AlgebraTag {
    /// Real dimension of the algebra (1, 2, 4 or 8).
    #[inline]
    pub fn beta(self) -> usize {
        match self {
            AlgebraTag::Real => 1,
            AlgebraTag::Complex => 2,
            AlgebraTag::Quaternion => 4,
            AlgebraTag::Octonion => 8,
        }
    }

    /// `beta` as f64, handy in density exponents.
    #[inline]
    pub fn beta_f(self) -> f64 {
        self.beta() as f64
    }

    pub fn from_beta(beta: u32) -> Result<Self> {
        match beta {
            1 => Ok(AlgebraTag::Real),
            2 => Ok(AlgebraTag::Complex),
            4 => Ok(AlgebraTag::Quaternion),
            8 => Ok(AlgebraTag::Octonion),
            got => Err(Error::InvalidBeta { got }),
        }
    }

    /// Matrix operations require an associative algebra.
    #[inline]
    pub fn supports_matrix_ops(self) -> bool {
        !matches!(self, AlgebraTag::Octonion)
    }

    /// Error unless matrix operations are available.
    pub fn require_matrix_ops(self) -> Result<()> {
        if self.supports_matrix_ops() {
            Ok(())
        } else {
            Err(Error::OctonionMatrixOp)
        }
    }

    pub const ALL: [AlgebraTag; 4] = [
        AlgebraTag::Real,
        AlgebraTag::Complex,
        AlgebraTag::Quaternion,
        AlgebraTag::Octonion,
    ];

    /// The algebras with full matrix support.
    pub const MATRIX: [AlgebraTag; 3] = [
        AlgebraTag::Real,
        AlgebraTag::Complex,
        AlgebraTag::Quaternion,
    ];
}

/// A number with `beta` real components; component 0 is the real part.
///
/// Multiplication follows the Cayley–Dickson doubling
/// `(a, b)(c, d) = (ac - d̄b, da + bc̄)`, which reproduces the usual
/// complex, quaternion (`ij = k`) and octonion tables and keeps the norm
/// multiplicative for all four algebras.
#[derive(Clone, Copy)]
pub struct DivisionScalar {
    tag: AlgebraTag,
    parts: [f64; 8],
}

impl DivisionScalar {
    pub fn new(tag: AlgebraTag, components: &[f64]) -> Result<Self> {
        if components.len() != tag.beta() {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "scalar needs {} components for beta={}, got {}",
                    tag.beta(),
                    tag.beta(),
                    components.len()
                ),
            });
        }
        let mut parts = [0.0; 8];
        parts[..components.len()].copy_from_slice(components);
        Ok(Self { tag, parts })
    }

    #[inline]
    pub fn zero(tag: AlgebraTag) -> Self {
        Self {
            tag,
            parts: [0.0; 8],
        }
    }

    #[inline]
    pub fn one(tag: AlgebraTag) -> Self {
        Self::from_real(tag, 1.0)
    }

    #[inline]
    pub fn from_real(tag: AlgebraTag, x: f64) -> Self {
        let mut parts = [0.0; 8];
        parts[0] = x;
        Self { tag, parts }
    }

    /// Basis element e_k (e_0 = 1, e_1 = i, ...).
    pub fn unit(tag: AlgebraTag, k: usize) -> Result<Self> {
        if k >= tag.beta() {
            return Err(Error::DimensionMismatch {
                context: format!("basis index {k} out of range for beta={}", tag.beta()),
            });
        }
        let mut parts = [0.0; 8];
        parts[k] = 1.0;
        Ok(Self { tag, parts })
    }

    #[inline]
    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    #[inline]
    pub fn re(&self) -> f64 {
        self.parts[0]
    }

    #[inline]
    pub fn component(&self, k: usize) -> f64 {
        self.parts[k]
    }

    pub fn components(&self) -> &[f64] {
        &self.parts[..self.tag.beta()]
    }

    /// Conjugation fixes the real part and negates components 1..beta.
    pub fn conj(&self) -> Self {
        let mut parts = self.parts;
        for p in parts.iter_mut().take(self.tag.beta()).skip(1) {
            *p = -*p;
        }
        Self {
            tag: self.tag,
            parts,
        }
    }

    pub fn neg(&self) -> Self {
        let mut parts = self.parts;
        for p in parts.iter_mut().take(self.tag.beta()) {
            *p = -*p;
        }
        Self {
            tag: self.tag,
            parts,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.tag, rhs.tag);
        let mut parts = self.parts;
        for (p, q) in parts.iter_mut().zip(rhs.parts.iter()) {
            *p += q;
        }
        Self {
            tag: self.tag,
            parts,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.tag, rhs.tag);
        let mut parts = self.parts;
        for (p, q) in parts.iter_mut().zip(rhs.parts.iter()) {
            *p -= q;
        }
        Self {
            tag: self.tag,
            parts,
        }
    }

    pub fn scale(&self, t: f64) -> Self {
        let mut parts = self.parts;
        for p in parts.iter_mut().take(self.tag.beta()) {
            *p *= t;
        }
        Self {
            tag: self.tag,
            parts,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.tag, rhs.tag);
        let n = self.tag.beta();
        let mut out = [0.0; 8];
        cayley_dickson_mul(&self.parts[..n], &rhs.parts[..n], &mut out[..n]);
        Self {
            tag: self.tag,
            parts: out,
        }
    }

    #[inline]
    pub fn norm_sq(&self) -> f64 {
        self.parts[..self.tag.beta()].iter().map(|x| x * x).sum()
    }

    #[inline]
    pub fn abs(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        self.tag == rhs.tag && self.sub(rhs).abs() <= tol
    }
}

impl fmt::Debug for DivisionScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.components())
    }
}

/// `out = x * y` by Cayley–Dickson recursion on halves.
fn cayley_dickson_mul(x: &[f64], y: &[f64], out: &mut [f64]) {
    let n = x.len();
    if n == 1 {
        out[0] = x[0] * y[0];
        return;
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let mut t1 = [0.0; 4];
    let mut t2 = [0.0; 4];
    let mut cj = [0.0; 4];

    // first half: ac - d̄b
    cayley_dickson_mul(a, c, &mut t1[..h]);
    cj[..h].copy_from_slice(d);
    conj_in_place(&mut cj[..h]);
    cayley_dickson_mul(&cj[..h], b, &mut t2[..h]);
    for i in 0..h {
        out[i] = t1[i] - t2[i];
    }

    // second half: da + bc̄
    cayley_dickson_mul(d, a, &mut t1[..h]);
    cj[..h].copy_from_slice(c);
    conj_in_place(&mut cj[..h]);
    cayley_dickson_mul(b, &cj[..h], &mut t2[..h]);
    for i in 0..h {
        out[h + i] = t1[i] + t2[i];
    }
}

fn conj_in_place(v: &mut [f64]) {
    for x in v.iter_mut().skip(1) {
        *x = -*x;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_scalar<R: Rng>(tag: AlgebraTag, rng: &mut R) -> DivisionScalar {
        let comps: Vec<f64> = (0..tag.beta())
            .map(|_| rng.random::<f64>() * 2.0 - 1.0)
            .collect();
        DivisionScalar::new(tag, &comps).unwrap()
    }

    #[test]
    fn quaternion_table_ij_equals_k() {
        let tag = AlgebraTag::Quaternion;
        let i = DivisionScalar::unit(tag, 1).unwrap();
        let j = DivisionScalar::unit(tag, 2).unwrap();
        let k = DivisionScalar::unit(tag, 3).unwrap();
        assert!(i.mul(&j).approx_eq(&k, 0.0));
        assert!(j.mul(&i).approx_eq(&k.neg(), 0.0));
    }

    #[test]
    fn complex_matches_hand_computation() {
        let tag = AlgebraTag::Complex;
        let a = DivisionScalar::new(tag, &[1.0, 2.0]).unwrap();
        let b = DivisionScalar::new(tag, &[3.0, -1.0]).unwrap();
        // (1+2i)(3-i) = 5+5i
        let p = a.mul(&b);
        assert!(p.approx_eq(&DivisionScalar::new(tag, &[5.0, 5.0]).unwrap(), 1e-15));
    }

    #[test]
    fn conjugation_negates_imaginary_parts() {
        let tag = AlgebraTag::Octonion;
        let x = DivisionScalar::new(tag, &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0]).unwrap();
        let c = x.conj();
        assert_eq!(c.re(), 1.0);
        for k in 1..8 {
            assert_eq!(c.component(k), -x.component(k));
        }
        assert!(c.conj().approx_eq(&x, 0.0));
    }

    #[test]
    fn norm_is_multiplicative_for_all_algebras() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for tag in AlgebraTag::ALL {
            for _ in 0..200 {
                let x = random_scalar(tag, &mut rng);
                let y = random_scalar(tag, &mut rng);
                let lhs = x.mul(&y).norm_sq();
                let rhs = x.norm_sq() * y.norm_sq();
                assert!(
                    (lhs - rhs).abs() <= 1e-12 * (1.0 + rhs),
                    "norm multiplicativity failed for beta={}",
                    tag.beta()
                );
            }
        }
    }

    #[test]
    fn octonions_are_not_associative_but_quaternions_are() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut worst_quat: f64 = 0.0;
        let mut worst_oct: f64 = 0.0;
        for _ in 0..50 {
            for (tag, worst) in [
                (AlgebraTag::Quaternion, &mut worst_quat),
                (AlgebraTag::Octonion, &mut worst_oct),
            ] {
                let x = random_scalar(tag, &mut rng);
                let y = random_scalar(tag, &mut rng);
                let z = random_scalar(tag, &mut rng);
                let d = x.mul(&y).mul(&z).sub(&x.mul(&y.mul(&z))).abs();
                if d > *worst {
                    *worst = d;
                }
            }
        }
        assert!(worst_quat < 1e-13);
        assert!(worst_oct > 1e-3);
    }
}
