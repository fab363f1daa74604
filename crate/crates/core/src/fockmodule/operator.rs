use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::json;

use super::{pool, FockBasis, Z2Z2Degree};
use crate::error::{Error, Result};
use crate::exactnum::RadicalSum;

/// Sparse exact operator on a truncated Fock basis, stored by columns.
///
/// Truncation makes products of generators wrong near the cap, so every
/// matrix records `exact_up_to`: the highest source level whose column
/// agrees with the untruncated operator. Columns above it are left empty
/// and must not be inspected.
#[derive(Clone, Debug)]
pub struct OperatorMatrix {
    basis: Arc<FockBasis>,
    pub degree: Z2Z2Degree,
    pub level_shift: i64,
    pub exact_up_to: i64,
    cols: Vec<Vec<(usize, RadicalSum)>>,
}

impl OperatorMatrix {
    pub(crate) fn from_columns(
        basis: Arc<FockBasis>,
        degree: Z2Z2Degree,
        level_shift: i64,
        exact_up_to: i64,
        mut cols: Vec<Vec<(usize, RadicalSum)>>,
    ) -> Self {
        for (j, col) in cols.iter_mut().enumerate() {
            if basis.levels[j] > exact_up_to {
                col.clear();
            }
        }
        OperatorMatrix {
            basis,
            degree,
            level_shift,
            exact_up_to,
            cols,
        }
    }

    pub fn zero(basis: &Arc<FockBasis>, degree: Z2Z2Degree, level_shift: i64) -> Self {
        OperatorMatrix {
            basis: basis.clone(),
            degree,
            level_shift,
            exact_up_to: basis.sig.level_cap as i64,
            cols: vec![Vec::new(); basis.len()],
        }
    }

    pub fn identity(basis: &Arc<FockBasis>) -> Self {
        let cols = (0..basis.len())
            .map(|j| vec![(j, RadicalSum::one())])
            .collect();
        OperatorMatrix {
            basis: basis.clone(),
            degree: Z2Z2Degree::default(),
            level_shift: 0,
            exact_up_to: basis.sig.level_cap as i64,
            cols,
        }
    }

    pub fn basis(&self) -> &Arc<FockBasis> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, RadicalSum)] {
        &self.cols[j]
    }

    pub fn get(&self, i: usize, j: usize) -> RadicalSum {
        let col = &self.cols[j];
        match col.binary_search_by_key(&i, |e| e.0) {
            Ok(pos) => col[pos].1.clone(),
            Err(_) => RadicalSum::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// All stored entries `(row, column, value)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &RadicalSum)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, v)| (*i, j, v)))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.basis, &other.basis) || self.basis.sig == other.basis.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }

    fn in_range(&self, j: usize, exact: i64) -> bool {
        self.basis.levels[j] <= exact
    }

    /// `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let exact = other.exact_up_to.min(self.exact_up_to - other.level_shift);
        let cols: Vec<Vec<(usize, RadicalSum)>> = pool().install(|| {
            (0..other.dim())
                .into_par_iter()
                .map(|j| {
                    if !self.in_range(j, exact) {
                        return Vec::new();
                    }
                    let mut acc: BTreeMap<usize, RadicalSum> = BTreeMap::new();
                    for (k, b) in &other.cols[j] {
                        for (i, a) in &self.cols[*k] {
                            *acc.entry(*i).or_default() += &(a * b);
                        }
                    }
                    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
                })
                .collect()
        });
        Ok(OperatorMatrix {
            basis: self.basis.clone(),
            degree: self.degree.add(other.degree),
            level_shift: self.level_shift + other.level_shift,
            exact_up_to: exact,
            cols,
        })
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Self, c: &RadicalSum) -> Result<Self> {
        self.check_same(other)?;
        if self.level_shift != other.level_shift && self.nnz() > 0 && other.nnz() > 0 {
            return Err(Error::Shape(format!(
                "adding operators with level shifts {} and {}",
                self.level_shift, other.level_shift
            )));
        }
        let exact = self.exact_up_to.min(other.exact_up_to);
        let cols = (0..self.dim())
            .map(|j| {
                if !self.in_range(j, exact) {
                    return Vec::new();
                }
                let mut acc: BTreeMap<usize, RadicalSum> = self.cols[j].iter().cloned().collect();
                for (i, v) in &other.cols[j] {
                    *acc.entry(*i).or_default() += &(c * v);
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        let level_shift = if self.nnz() > 0 {
            self.level_shift
        } else {
            other.level_shift
        };
        Ok(OperatorMatrix {
            basis: self.basis.clone(),
            degree: self.degree,
            level_shift,
            exact_up_to: exact,
            cols,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, &RadicalSum::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, &RadicalSum::from_integer(-1))
    }

    pub fn scale(&self, c: &RadicalSum) -> Self {
        let cols = self
            .cols
            .iter()
            .map(|col| {
                col.iter()
                    .map(|(i, v)| (*i, c * v))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        OperatorMatrix {
            cols,
            basis: self.basis.clone(),
            ..*self
        }
    }

    pub fn with_degree(mut self, degree: Z2Z2Degree) -> Self {
        self.degree = degree;
        self
    }

    /// Graded bracket `AB - (-1)^{a.b} BA`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        let ab = self.mul(other)?;
        let ba = other.mul(self)?;
        let c = if self.degree.dot(other.degree) == 1 {
            1
        } else {
            -1
        };
        let out = ab.add_scaled(&ba, &RadicalSum::from_integer(c))?;
        Ok(out.with_degree(self.degree.add(other.degree)))
    }

    /// First nonzero entry among columns of level `<= max_level`.
    pub fn first_nonzero(&self, max_level: i64) -> Option<(usize, usize, RadicalSum)> {
        let max_level = max_level.min(self.exact_up_to);
        self.cols.iter().enumerate().find_map(|(j, col)| {
            if self.basis.levels[j] > max_level {
                return None;
            }
            col.first().map(|(i, v)| (*i, j, v.clone()))
        })
    }

    /// First off-diagonal entry among checked columns.
    pub fn first_off_diagonal(&self, max_level: i64) -> Option<(usize, usize, RadicalSum)> {
        let max_level = max_level.min(self.exact_up_to);
        self.cols.iter().enumerate().find_map(|(j, col)| {
            if self.basis.levels[j] > max_level {
                return None;
            }
            col.iter()
                .find(|(i, _)| *i != j)
                .map(|(i, v)| (*i, j, v.clone()))
        })
    }

    /// Row/column labels plus entries as canonical JSON.
    pub fn to_json(&self) -> serde_json::Value {
        let labels: Vec<String> = self.basis.patterns.iter().map(|p| p.to_string()).collect();
        let entries: Vec<serde_json::Value> = self
            .entries()
            .map(|(i, j, v)| json!({"row": i, "col": j, "value": v}))
            .collect();
        json!({
            "dimension": self.dim(),
            "degree": [self.degree.0, self.degree.1],
            "level_shift": self.level_shift,
            "exact_up_to": self.exact_up_to,
            "basis": labels,
            "entries": entries,
        })
    }
}

impl PartialEq for OperatorMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.basis.sig == other.basis.sig
            && self.degree == other.degree
            && self.exact_up_to == other.exact_up_to
            && self.cols == other.cols
    }
}
