//! Exact linear algebra over GF(2), GF(p) and the rationals.
//!
//! GF(2) work runs on packed bit columns ([`gf2`]); the other fields go
//! through a generic column reduction. Both use the same pivot rule (lowest
//! row index, columns left to right), so certificates are reproducible.

pub mod bits;
pub mod field;
pub mod gf2;
pub mod matrix;
pub mod reduce;

use alloc::vec::Vec;

pub use bits::BitVec;
pub use field::{Field, FieldSpec, Gf2, PrimeField, Rationals};
pub use matrix::{ChainVector, IntMatrix, SparseMatrix};
pub use reduce::{Gf2Reduction, Reduction};

use crate::error::{Error, Result};

/// Rank of an integer matrix read over `spec`.
pub fn rank(m: &IntMatrix, spec: FieldSpec) -> usize {
    match spec {
        FieldSpec::Gf2 => gf2::rank(m),
        FieldSpec::Gfp(p) => {
            let f = PrimeField::new(p).expect("FieldSpec holds a valid prime");
            Reduction::new(&m.to_field(&f), &f).rank()
        }
        FieldSpec::Rational => Reduction::new(&m.to_field(&Rationals), &Rationals).rank(),
    }
}

/// `cols - rank` over `spec`.
pub fn nullity(m: &IntMatrix, spec: FieldSpec) -> usize {
    m.cols() - rank(m, spec)
}

/// Basis of the right null space, as chains over the column labels.
pub fn kernel_basis<F: Field>(m: &SparseMatrix<F::Elem>, field: &F) -> Vec<ChainVector<F::Elem>> {
    let red = Reduction::new(m, field);
    red.kernel()
        .iter()
        .map(|v| ChainVector::from_dense(m.col_labels(), v, field))
        .collect()
}

/// A preimage of `v` under `m` when `v` lies in the column span. The
/// preimage is checked by multiplication before it is returned.
pub fn in_image<F: Field>(
    m: &SparseMatrix<F::Elem>,
    v: &ChainVector<F::Elem>,
    field: &F,
) -> Result<Option<ChainVector<F::Elem>>> {
    let dense = v.to_dense(m.row_labels(), field)?;
    let red = Reduction::new(m, field);
    let Some(x) = red.solve(&dense) else {
        return Ok(None);
    };
    let back = m.mul_dense(&x, field)?;
    if back != dense {
        return Err(Error::Precondition("preimage failed verification"));
    }
    Ok(Some(ChainVector::from_dense(m.col_labels(), &x, field)))
}
