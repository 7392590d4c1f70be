//! Column reduction with a fixed pivot rule: a column's pivot is its lowest
//! nonzero row index, and columns are processed left to right.

use alloc::vec;
use alloc::vec::Vec;

use super::bits::BitVec;
use super::field::Field;
use super::matrix::SparseMatrix;

/// Column reduction over a general field. Records, for every reduced column,
/// the combination of original columns that produced it.
pub struct Reduction<'f, F: Field> {
    field: &'f F,
    rows: usize,
    cols: usize,
    pivot_of_row: Vec<Option<usize>>,
    /// Reduced column paired with the combination of original columns that produced it.
    #[allow(clippy::type_complexity)]
    reduced: Vec<(Vec<F::Elem>, Vec<F::Elem>)>,
    kernel: Vec<Vec<F::Elem>>,
}

impl<'f, F: Field> Reduction<'f, F> {
    pub fn new(m: &SparseMatrix<F::Elem>, field: &'f F) -> Self {
        let rows = m.rows();
        let cols = m.cols();
        let mut red = Reduction {
            field,
            rows,
            cols,
            pivot_of_row: vec![None; rows],
            reduced: Vec::new(),
            kernel: Vec::new(),
        };
        for j in 0..cols {
            let mut col = vec![field.zero(); rows];
            for (i, v) in m.column(j) {
                col[*i] = v.clone();
            }
            let mut hist = vec![field.zero(); cols];
            hist[j] = field.one();
            match red.reduce(&mut col, &mut hist) {
                Some(r) => {
                    red.pivot_of_row[r] = Some(red.reduced.len());
                    red.reduced.push((col, hist));
                }
                None => red.kernel.push(hist),
            }
        }
        red
    }

    /// Eliminates `col` against existing pivots, applying the same
    /// operations to `hist`. Returns the surviving pivot row, if any.
    fn reduce(&self, col: &mut [F::Elem], hist: &mut [F::Elem]) -> Option<usize> {
        let f = self.field;
        let mut start = 0;
        loop {
            let r = (start..self.rows).find(|&i| !f.is_zero(&col[i]))?;
            let Some(p) = self.pivot_of_row[r] else {
                return Some(r);
            };
            let (pcol, phist) = &self.reduced[p];
            let factor = f.mul(&col[r], &f.inv(&pcol[r]));
            for i in r..self.rows {
                if !f.is_zero(&pcol[i]) {
                    col[i] = f.sub(&col[i], &f.mul(&factor, &pcol[i]));
                }
            }
            for (h, ph) in hist.iter_mut().zip(phist) {
                if !f.is_zero(ph) {
                    *h = f.sub(h, &f.mul(&factor, ph));
                }
            }
            start = r + 1;
        }
    }

    pub fn rank(&self) -> usize {
        self.reduced.len()
    }

    /// Dense kernel basis vectors, one per column that reduced to zero.
    pub fn kernel(&self) -> &[Vec<F::Elem>] {
        &self.kernel
    }

    /// A preimage `x` with `m x = v`, if `v` lies in the column span.
    pub fn solve(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let mut col = v.to_vec();
        let mut hist = vec![self.field.zero(); self.cols];
        if self.reduce(&mut col, &mut hist).is_some() {
            return None;
        }
        // col = v - sum(factor * m h) = 0, so x = -hist.
        Some(hist.iter().map(|h| self.field.neg(h)).collect())
    }
}

/// Column reduction over GF(2) on packed bit columns.
pub struct Gf2Reduction {
    rows: usize,
    cols: usize,
    pivot_of_row: Vec<Option<usize>>,
    reduced: Vec<(BitVec, Option<BitVec>)>,
    kernel: Vec<BitVec>,
    track: bool,
}

impl Gf2Reduction {
    /// `columns[j]` holds the rows set in column `j`. With `track` off no
    /// kernel or preimages are recorded, only the rank.
    pub fn new(rows: usize, columns: &[BitVec], track: bool) -> Self {
        let cols = columns.len();
        let mut red = Gf2Reduction {
            rows,
            cols,
            pivot_of_row: vec![None; rows],
            reduced: Vec::new(),
            kernel: Vec::new(),
            track,
        };
        for (j, c) in columns.iter().enumerate() {
            debug_assert_eq!(c.len(), rows);
            let mut col = c.clone();
            let mut hist = track.then(|| BitVec::from_indices(cols, [j]));
            match red.reduce(&mut col, hist.as_mut()) {
                Some(r) => {
                    red.pivot_of_row[r] = Some(red.reduced.len());
                    red.reduced.push((col, hist));
                }
                None => {
                    if let Some(h) = hist {
                        red.kernel.push(h);
                    }
                }
            }
        }
        red
    }

    fn reduce(&self, col: &mut BitVec, mut hist: Option<&mut BitVec>) -> Option<usize> {
        let mut word = 0;
        loop {
            let r = col.first_one_from_word(word)?;
            let Some(p) = self.pivot_of_row[r] else {
                return Some(r);
            };
            let (pcol, phist) = &self.reduced[p];
            word = r / 64;
            col.xor_assign_from(pcol, word);
            if let (Some(h), Some(ph)) = (hist.as_deref_mut(), phist) {
                h.xor_assign(ph);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.reduced.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Kernel basis; empty unless built with tracking.
    pub fn kernel(&self) -> &[BitVec] {
        &self.kernel
    }

    /// Whether `v` lies in the column span.
    pub fn in_span(&self, v: &BitVec) -> bool {
        let mut col = v.clone();
        self.reduce(&mut col, None).is_none()
    }

    /// A preimage of `v`; requires tracking.
    pub fn solve(&self, v: &BitVec) -> Option<BitVec> {
        assert!(self.track, "preimages need a tracking reduction");
        let mut col = v.clone();
        let mut hist = BitVec::zeros(self.cols);
        self.reduce(&mut col, Some(&mut hist)).is_none().then_some(hist)
    }
}
