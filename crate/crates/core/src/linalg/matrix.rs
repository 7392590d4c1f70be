use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::field::Field;
use crate::error::{Error, Result};
use crate::face::Face;

/// Column-major sparse matrix whose rows and columns are labelled by faces.
///
/// Columns hold `(row, value)` pairs sorted by row with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<E> {
    row_labels: Vec<Face>,
    col_labels: Vec<Face>,
    columns: Vec<Vec<(usize, E)>>,
}

/// Integer matrix, the form boundary maps are built in.
pub type IntMatrix = SparseMatrix<i64>;

impl<E: Clone> SparseMatrix<E> {
    /// Builds a matrix. Columns must have sorted, in-range row indices;
    /// zero entries are the caller's responsibility to omit.
    pub fn new(row_labels: Vec<Face>, col_labels: Vec<Face>, columns: Vec<Vec<(usize, E)>>) -> Result<Self> {
        if columns.len() != col_labels.len() {
            return Err(Error::Shape {
                expected: col_labels.len(),
                found: columns.len(),
            });
        }
        let sorted = |l: &[Face]| l.windows(2).all(|w| w[0] < w[1]);
        if !sorted(&row_labels) || !sorted(&col_labels) {
            return Err(Error::Input("matrix labels must be strictly increasing".into()));
        }
        for col in &columns {
            if col.windows(2).any(|w| w[0].0 >= w[1].0) || col.last().is_some_and(|e| e.0 >= row_labels.len()) {
                return Err(Error::Input("column rows must be sorted and in range".into()));
            }
        }
        Ok(SparseMatrix {
            row_labels,
            col_labels,
            columns,
        })
    }

    pub fn zero(row_labels: Vec<Face>, col_labels: Vec<Face>) -> Self {
        let columns = col_labels.iter().map(|_| Vec::new()).collect();
        SparseMatrix {
            row_labels,
            col_labels,
            columns,
        }
    }

    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn row_labels(&self) -> &[Face] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[Face] {
        &self.col_labels
    }

    pub fn column(&self, j: usize) -> &[(usize, E)] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<(usize, E)>] {
        &self.columns
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Keeps the listed columns; `keep` must be increasing.
    pub fn select_columns(&self, keep: &[usize]) -> Self {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        SparseMatrix {
            row_labels: self.row_labels.clone(),
            col_labels: keep.iter().map(|&j| self.col_labels[j]).collect(),
            columns: keep.iter().map(|&j| self.columns[j].clone()).collect(),
        }
    }
}

impl IntMatrix {
    /// Dense integer rows, labelled by singleton faces `{0}, {1}, ..`.
    pub fn from_rows(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Shape {
                expected: cols,
                found: r.len(),
            });
        }
        let label = |i: usize| Face::from_vertices([i]);
        let columns = (0..cols)
            .map(|j| {
                rows.iter()
                    .enumerate()
                    .filter(|(_, r)| r[j] != 0)
                    .map(|(i, r)| (i, r[j]))
                    .collect()
            })
            .collect();
        SparseMatrix::new(
            (0..rows.len()).map(label).collect(),
            (0..cols).map(label).collect(),
            columns,
        )
    }

    /// Reduces the integer entries into `field`, dropping zeros.
    pub fn to_field<F: Field>(&self, field: &F) -> SparseMatrix<F::Elem> {
        let columns = self
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|(r, v)| (*r, field.from_i64(*v)))
                    .filter(|(_, v)| !field.is_zero(v))
                    .collect()
            })
            .collect();
        SparseMatrix {
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
            columns,
        }
    }

    /// Integer matrix product `self * rhs`.
    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols() != rhs.rows() {
            return Err(Error::Shape {
                expected: self.cols(),
                found: rhs.rows(),
            });
        }
        let columns = rhs
            .columns
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for (k, b) in col {
                    for (i, a) in &self.columns[*k] {
                        *acc.entry(*i).or_insert(0) += a * b;
                    }
                }
                acc.into_iter().filter(|(_, v)| *v != 0).collect()
            })
            .collect();
        Ok(SparseMatrix {
            row_labels: self.row_labels.clone(),
            col_labels: rhs.col_labels.clone(),
            columns,
        })
    }
}

impl<E: Clone> SparseMatrix<E> {
    /// `self * x` for a dense coefficient vector indexed by columns.
    pub fn mul_dense<F: Field<Elem = E>>(&self, x: &[E], field: &F) -> Result<Vec<E>> {
        if x.len() != self.cols() {
            return Err(Error::Shape {
                expected: self.cols(),
                found: x.len(),
            });
        }
        let mut out = alloc::vec![field.zero(); self.rows()];
        for (j, col) in self.columns.iter().enumerate() {
            if field.is_zero(&x[j]) {
                continue;
            }
            for (i, a) in col {
                out[*i] = field.add(&out[*i], &field.mul(a, &x[j]));
            }
        }
        Ok(out)
    }
}

/// A chain: nonzero coefficients keyed by face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainVector<E> {
    coeffs: BTreeMap<Face, E>,
}

impl<E: Clone> Default for ChainVector<E> {
    fn default() -> Self {
        ChainVector {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<E: Clone> ChainVector<E> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a chain, dropping zero coefficients.
    pub fn from_terms<F, I>(field: &F, terms: I) -> Self
    where
        F: Field<Elem = E>,
        I: IntoIterator<Item = (Face, E)>,
    {
        let mut v = ChainVector::new();
        for (f, c) in terms {
            v.add_term(field, f, c);
        }
        v
    }

    /// The sum of the given faces with coefficient one.
    pub fn sum_of<F: Field<Elem = E>>(field: &F, faces: impl IntoIterator<Item = Face>) -> Self {
        ChainVector::from_terms(field, faces.into_iter().map(|f| (f, field.one())))
    }

    pub fn add_term<F: Field<Elem = E>>(&mut self, field: &F, face: Face, c: E) {
        let sum = match self.coeffs.get(&face) {
            Some(old) => field.add(old, &c),
            None => c,
        };
        if field.is_zero(&sum) {
            self.coeffs.remove(&face);
        } else {
            self.coeffs.insert(face, sum);
        }
    }

    pub fn get(&self, face: &Face) -> Option<&E> {
        self.coeffs.get(face)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = Face> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Face, &E)> {
        self.coeffs.iter()
    }

    /// Dense coefficients over an ordered label list. Faces outside the
    /// list are a shape error.
    pub fn to_dense<F: Field<Elem = E>>(&self, labels: &[Face], field: &F) -> Result<Vec<E>> {
        let mut out = alloc::vec![field.zero(); labels.len()];
        for (f, c) in &self.coeffs {
            let i = labels.binary_search(f).map_err(|_| Error::Shape {
                expected: labels.len(),
                found: labels.len() + 1,
            })?;
            out[i] = c.clone();
        }
        Ok(out)
    }

    pub fn from_dense<F: Field<Elem = E>>(labels: &[Face], values: &[E], field: &F) -> Self {
        ChainVector::from_terms(field, labels.iter().copied().zip(values.iter().cloned()))
    }
}
