//! GF(2) front end over packed columns.

use alloc::vec::Vec;

use super::bits::BitVec;
use super::matrix::{ChainVector, IntMatrix};
use super::reduce::Gf2Reduction;
use super::Gf2;
use crate::error::{Error, Result};
use crate::face::Face;

/// Packed columns of `m` read mod 2.
pub fn columns(m: &IntMatrix) -> Vec<BitVec> {
    m.columns()
        .iter()
        .map(|col| BitVec::from_indices(m.rows(), col.iter().filter(|(_, v)| v & 1 == 1).map(|(r, _)| *r)))
        .collect()
}

pub fn rank(m: &IntMatrix) -> usize {
    Gf2Reduction::new(m.rows(), &columns(m), false).rank()
}

/// Kernel basis as column-index bit vectors.
pub fn kernel_basis(m: &IntMatrix) -> Vec<BitVec> {
    Gf2Reduction::new(m.rows(), &columns(m), true).kernel().to_vec()
}

/// Kernel basis as chains of column labels.
pub fn kernel_chains(m: &IntMatrix) -> Vec<ChainVector<bool>> {
    kernel_basis(m)
        .iter()
        .map(|v| ChainVector::sum_of(&Gf2, v.iter_ones().map(|j| m.col_labels()[j])))
        .collect()
}

fn indicator(labels: &[Face], faces: impl IntoIterator<Item = Face>) -> Result<BitVec> {
    let mut v = BitVec::zeros(labels.len());
    for f in faces {
        let i = labels.binary_search(&f).map_err(|_| Error::Shape {
            expected: labels.len(),
            found: labels.len() + 1,
        })?;
        v.flip(i);
    }
    Ok(v)
}

/// A set of columns whose sum is the indicator of `target`, checked by
/// recomputing the sum.
pub fn in_image(m: &IntMatrix, target: &[Face]) -> Result<Option<Vec<Face>>> {
    let v = indicator(m.row_labels(), target.iter().copied())?;
    let cols = columns(m);
    let red = Gf2Reduction::new(m.rows(), &cols, true);
    let Some(x) = red.solve(&v) else {
        return Ok(None);
    };
    let mut check = BitVec::zeros(m.rows());
    for j in x.iter_ones() {
        check.xor_assign(&cols[j]);
    }
    if check != v {
        return Err(Error::Precondition("preimage failed verification"));
    }
    Ok(Some(x.iter_ones().map(|j| m.col_labels()[j]).collect()))
}

/// Every nonzero vector in the span of `basis`, in Gray-code order.
/// Fails when there are more than `cap` of them.
pub fn span_vectors(basis: &[BitVec], cap: u128) -> Result<Vec<BitVec>> {
    let k = basis.len();
    let needed = if k >= 128 { u128::MAX } else { (1u128 << k) - 1 };
    if needed > cap {
        return Err(Error::CapExceeded {
            what: "kernel vectors",
            needed,
            limit: cap,
        });
    }
    let Some(first) = basis.first() else {
        return Ok(Vec::new());
    };
    let mut out = Vec::with_capacity(needed as usize);
    let mut cur = BitVec::zeros(first.len());
    for i in 1..=needed {
        cur.xor_assign(&basis[i.trailing_zeros() as usize]);
        out.push(cur.clone());
    }
    Ok(out)
}

/// Every nonzero GF(2) kernel vector of `m` as a chain over the column
/// labels, in Gray-code order over the kernel basis. Refuses when there are
/// more than `cap`.
pub fn enumerate_kernel_vectors(m: &IntMatrix, cap: u128) -> Result<Vec<ChainVector<bool>>> {
    Ok(span_vectors(&kernel_basis(m), cap)?
        .iter()
        .map(|v| ChainVector::sum_of(&Gf2, v.iter_ones().map(|j| m.col_labels()[j])))
        .collect())
}
