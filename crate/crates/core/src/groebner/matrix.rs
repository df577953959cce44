//! Homogeneous matrices between graded free modules.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{parse_poly, PolyRing, Polynomial};

use super::vector::{ModuleOrder, Vector};

/// A map `⊕ R(-col_degrees[j]) -> ⊕ R(-row_degrees[i])`, stored by columns.
#[derive(Debug, Clone)]
pub struct GradedMatrix {
    pub ring: Arc<PolyRing>,
    pub row_degrees: Vec<i32>,
    pub col_degrees: Vec<i32>,
    pub columns: Vec<Vector>,
}

/// Serialized form: degree lists plus row-major entry text.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GradedMatrixJson {
    pub rows: Vec<i32>,
    pub cols: Vec<i32>,
    pub entries: Vec<Vec<String>>,
}

impl GradedMatrix {
    pub fn new(
        ring: &Arc<PolyRing>,
        row_degrees: Vec<i32>,
        col_degrees: Vec<i32>,
        columns: Vec<Vector>,
    ) -> GradedMatrix {
        GradedMatrix {
            ring: ring.clone(),
            row_degrees,
            col_degrees,
            columns,
        }
    }

    /// Builds from row-major polynomial entries; column degrees are
    /// inferred from the first nonzero entry of each column (zero columns
    /// get the degree of the first row).
    pub fn from_rows(
        ring: &Arc<PolyRing>,
        row_degrees: Vec<i32>,
        rows: &[Vec<Polynomial>],
    ) -> Result<GradedMatrix> {
        let order = ModuleOrder::new(ring.order().clone(), row_degrees.clone());
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut columns = Vec::new();
        let mut col_degrees = Vec::new();
        for j in 0..ncols {
            let entries: Vec<Polynomial> = rows.iter().map(|r| r[j].clone()).collect();
            let v = Vector::from_polys(&order, &entries, 0);
            let d = if v.is_zero() {
                row_degrees.first().copied().unwrap_or(0)
            } else {
                v.degree(&order)
                    .ok_or_else(|| Error::NotHomogeneous(format!("column {} of the matrix", j)))?
            };
            col_degrees.push(d);
            columns.push(v);
        }
        Ok(GradedMatrix::new(ring, row_degrees, col_degrees, columns))
    }

    pub fn nrows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn row_order(&self) -> ModuleOrder {
        ModuleOrder::new(self.ring.order().clone(), self.row_degrees.clone())
    }

    pub fn entry(&self, i: usize, j: usize) -> Polynomial {
        self.columns[j].entry(&self.ring, i)
    }

    /// Row-major polynomial entries.
    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        let cols: Vec<Vec<Polynomial>> = self
            .columns
            .iter()
            .map(|c| c.to_polys(&self.ring, self.nrows()))
            .collect();
        (0..self.nrows())
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect()
    }

    /// The transpose, a map between the dual modules.
    pub fn transpose(&self) -> GradedMatrix {
        let rows = self.rows();
        let row_degrees: Vec<i32> = self.col_degrees.iter().map(|d| -d).collect();
        let col_degrees: Vec<i32> = self.row_degrees.iter().map(|d| -d).collect();
        let order = ModuleOrder::new(self.ring.order().clone(), row_degrees.clone());
        let columns = rows
            .iter()
            .map(|r| Vector::from_polys(&order, r, 0))
            .collect();
        GradedMatrix::new(&self.ring, row_degrees, col_degrees, columns)
    }

    pub fn to_json(&self) -> GradedMatrixJson {
        GradedMatrixJson {
            rows: self.row_degrees.clone(),
            cols: self.col_degrees.clone(),
            entries: self
                .rows()
                .iter()
                .map(|r| r.iter().map(|p| p.to_string()).collect())
                .collect(),
        }
    }

    pub fn from_json(ring: &Arc<PolyRing>, js: &GradedMatrixJson) -> Result<GradedMatrix> {
        let rows: Vec<Vec<Polynomial>> = js
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| parse_poly(e, ring))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        if rows.len() != js.rows.len() || rows.iter().any(|r| r.len() != js.cols.len()) {
            return Err(Error::InvalidParameters(
                "matrix shape does not match degree lists".into(),
            ));
        }
        let m = GradedMatrix::from_rows(ring, js.rows.clone(), &rows)?;
        for (j, c) in m.columns.iter().enumerate() {
            if !c.is_zero() && m.col_degrees[j] != js.cols[j] {
                return Err(Error::NotHomogeneous(format!(
                    "column {} has degree {} but is declared {}",
                    j, m.col_degrees[j], js.cols[j]
                )));
            }
        }
        Ok(GradedMatrix::new(
            ring,
            js.rows.clone(),
            js.cols.clone(),
            m.columns,
        ))
    }
}
