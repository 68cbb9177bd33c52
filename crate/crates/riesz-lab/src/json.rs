//! Matrix interchange format shared by the CLI and test fixtures:
//!
//! ```json
//! {"beta": 2, "rows": 2, "cols": 2,
//!  "entries": [[1.0, 0.0], [0.5, -0.25], [0.5, 0.25], [2.0, 0.0]]}
//! ```
//!
//! Entries are row-major; each entry lists the `beta` real components of
//! one scalar (component 0 is the real part).

use serde::{Deserialize, Serialize};

use crate::division_algebra::{AlgebraTag, DivisionMatrix, DivisionScalar, HermitianPD};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub beta: u32,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<f64>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &DivisionMatrix) -> Self {
        let mut entries = Vec::with_capacity(m.rows() * m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                entries.push(m.get(i, j).components().to_vec());
            }
        }
        Self {
            beta: m.tag().beta() as u32,
            rows: m.rows(),
            cols: m.cols(),
            entries,
        }
    }

    pub fn to_matrix(&self) -> Result<DivisionMatrix> {
        let tag = AlgebraTag::from_beta(self.beta)?;
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::InvalidMatrixJson {
                reason: "rows and cols must be positive".into(),
            });
        }
        if self.entries.len() != self.rows * self.cols {
            return Err(Error::InvalidMatrixJson {
                reason: format!(
                    "expected {} entries for a {}x{} matrix, got {}",
                    self.rows * self.cols,
                    self.rows,
                    self.cols,
                    self.entries.len()
                ),
            });
        }
        let mut m = DivisionMatrix::zeros(tag, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let comps = &self.entries[i * self.cols + j];
                if comps.len() != tag.beta() {
                    return Err(Error::InvalidMatrixJson {
                        reason: format!(
                            "entry ({i},{j}) has {} components, expected {}",
                            comps.len(),
                            tag.beta()
                        ),
                    });
                }
                m.set(i, j, DivisionScalar::new(tag, comps)?);
            }
        }
        Ok(m)
    }
}

/// Parse a JSON string into a raw matrix.
pub fn matrix_from_json(text: &str) -> Result<DivisionMatrix> {
    let parsed: MatrixJson = serde_json::from_str(text).map_err(|e| Error::InvalidMatrixJson {
        reason: e.to_string(),
    })?;
    parsed.to_matrix()
}

/// Parse and validate a Hermitian positive definite matrix.
pub fn hpd_from_json(text: &str) -> Result<HermitianPD> {
    HermitianPD::new(matrix_from_json(text)?)
}

/// Serialize a matrix to a JSON string.
pub fn matrix_to_json(m: &DivisionMatrix) -> String {
    serde_json::to_string(&MatrixJson::from_matrix(m)).expect("matrix serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_complex_hpd() {
        let text = r#"{"beta": 2, "rows": 2, "cols": 2,
            "entries": [[2.0, 0.0], [0.5, -0.25], [0.5, 0.25], [1.5, 0.0]]}"#;
        let hpd = hpd_from_json(text).unwrap();
        assert_eq!(hpd.dim(), 2);
        let back = matrix_to_json(hpd.matrix());
        let again = hpd_from_json(&back).unwrap();
        assert!((again.logdet() - hpd.logdet()).abs() < 1e-15);
    }

    #[test]
    fn rejects_malformed_inputs() {
        assert!(matrix_from_json("{").is_err());
        let bad_beta = r#"{"beta": 3, "rows": 1, "cols": 1, "entries": [[1.0, 0.0, 0.0]]}"#;
        assert!(matches!(
            matrix_from_json(bad_beta),
            Err(Error::InvalidBeta { .. })
        ));
        let bad_count = r#"{"beta": 1, "rows": 2, "cols": 2, "entries": [[1.0]]}"#;
        assert!(matches!(
            matrix_from_json(bad_count),
            Err(Error::InvalidMatrixJson { .. })
        ));
        let bad_comps = r#"{"beta": 2, "rows": 1, "cols": 1, "entries": [[1.0]]}"#;
        assert!(matches!(
            matrix_from_json(bad_comps),
            Err(Error::InvalidMatrixJson { .. })
        ));
        let not_pd =
            r#"{"beta": 1, "rows": 2, "cols": 2, "entries": [[1.0], [2.0], [2.0], [1.0]]}"#;
        assert!(matches!(
            hpd_from_json(not_pd),
            Err(Error::NotPositiveDefinite { .. })
        ));
    }
}
