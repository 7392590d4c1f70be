//! Boundary maps and reduced Betti numbers.
//!
//! Faces are oriented by sorted vertex order. Deleting the `j`-th vertex
//! (0-indexed) carries the sign `(-1)^j`.

use alloc::vec::Vec;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::{sorted_index, Face, Vertex};
use crate::linalg::{self, FieldSpec, IntMatrix, SparseMatrix};

/// Matrix of `∂_i` from the `i`-faces to the `(i-1)`-faces lying in `w`.
///
/// For `i = 0` the single row is the augmentation (the empty face) when
/// `augmented` is set, and there are no rows otherwise.
pub fn boundary_matrix_within(c: &Complex, i: isize, w: Face, augmented: bool) -> IntMatrix {
    let cols = c.faces_of_dim_within(i, w);
    let rows = if i == 0 && !augmented {
        Vec::new()
    } else {
        c.faces_of_dim_within(i - 1, w)
    };
    let columns = cols
        .iter()
        .map(|f| {
            if rows.is_empty() {
                return Vec::new();
            }
            let mut col: Vec<(usize, i64)> = f
                .facets_of_boundary()
                .map(|(j, g)| {
                    let r = sorted_index(&rows, g).expect("boundary of a face is in the complex");
                    (r, if j % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect();
    SparseMatrix::new(rows, cols, columns).expect("faces are sorted")
}

/// Matrix of `∂_i` on the whole complex.
pub fn boundary_matrix(c: &Complex, i: isize, augmented: bool) -> IntMatrix {
    boundary_matrix_within(c, i, c.vertex_set(), augmented)
}

/// Reduced Betti numbers `H̃_i` of the induced subcomplex on `w`, for
/// `i = 0 ..= dim`. Empty when the induced subcomplex has no vertices.
pub fn betti_profile_within(c: &Complex, w: Face, field: FieldSpec) -> Vec<usize> {
    let top = c.faces_of_dim_within(0, w).iter().fold(Face::EMPTY, |a, f| a.union(*f));
    let dim = c
        .facets()
        .iter()
        .map(|f| f.intersection(top).len() as isize - 1)
        .max()
        .unwrap_or(-1);
    if dim < 0 {
        return Vec::new();
    }
    // ranks[i] = rank ∂_i for i = 0 ..= dim + 1
    let ranks: Vec<usize> = (0..=dim + 1)
        .map(|i| linalg::rank(&boundary_matrix_within(c, i, w, true), field))
        .collect();
    (0..=dim as usize)
        .map(|i| {
            let n = c.faces_of_dim_within(i as isize, w).len();
            n - ranks[i] - ranks[i + 1]
        })
        .collect()
}

/// `dim H̃_i(c)` over `field`. At `i = -1` this is 1 for `{∅}` and 0
/// otherwise.
pub fn reduced_betti(c: &Complex, i: isize, field: FieldSpec) -> usize {
    if i < -1 {
        return 0;
    }
    let n = c.faces_of_dim(i).len();
    if n == 0 {
        return 0;
    }
    let down = if i == -1 {
        0
    } else {
        linalg::rank(&boundary_matrix(c, i, true), field)
    };
    let up = linalg::rank(&boundary_matrix(c, i + 1, true), field);
    n - down - up
}

/// `H̃_i` for `i = 0 ..= dim`.
pub fn betti_profile(c: &Complex, field: FieldSpec) -> Vec<usize> {
    betti_profile_within(c, c.vertex_set(), field)
}

/// An oriented face: a face plus the parity of its vertex order relative to
/// sorted order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrientedFace {
    pub face: Face,
    pub odd: bool,
}

fn inversions(order: &[Vertex]) -> usize {
    let mut n = 0;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if order[i] > order[j] {
                n += 1;
            }
        }
    }
    n
}

impl OrientedFace {
    pub fn sorted(face: Face) -> Self {
        OrientedFace { face, odd: false }
    }

    /// Orientation given by a vertex order. Repeated vertices are an error.
    pub fn from_order(order: &[Vertex]) -> Result<Self> {
        let face = Face::from_vertices(order.iter().copied());
        if face.len() != order.len() {
            return Err(Error::Input("repeated vertex in oriented face".into()));
        }
        Ok(OrientedFace {
            face,
            odd: inversions(order) % 2 == 1,
        })
    }

    /// A vertex order in this orientation class.
    pub fn order(&self) -> Vec<Vertex> {
        let mut v = self.face.to_vec();
        if self.odd {
            assert!(v.len() >= 2, "a face with fewer than two vertices has one orientation");
            v.swap(0, 1);
        }
        v
    }

    /// `+1` for the sorted class, `-1` for the other.
    pub fn sign(&self) -> i64 {
        if self.odd {
            -1
        } else {
            1
        }
    }
}

/// Orientation induced on `of` minus `removed`: with the vertices listed as
/// `[v0, .., vd]`, removal at an odd position keeps the order of the rest and
/// removal at an even position swaps one pair.
pub fn induced_orientation(of: &OrientedFace, removed: Vertex) -> Result<OrientedFace> {
    if !of.face.contains(removed) {
        return Err(Error::Input("vertex is not in the face".into()));
    }
    if of.face.len() < 2 {
        return Err(Error::Input("face has no proper nonempty subface".into()));
    }
    let order = of.order();
    let k = order.iter().position(|&v| v == removed).expect("present");
    let rest: Vec<Vertex> = order.into_iter().filter(|&v| v != removed).collect();
    let mut o = OrientedFace::from_order(&rest)?;
    if k % 2 == 0 {
        o.odd = !o.odd;
    }
    Ok(o)
}

/// The signed boundary of a chain given as `(face, coefficient)` pairs,
/// keyed by face.
pub fn chain_boundary(terms: &[(Face, i64)]) -> Vec<(Face, i64)> {
    let mut out: Vec<(Face, i64)> = Vec::new();
    for &(f, c) in terms {
        for (j, g) in f.facets_of_boundary() {
            out.push((g, if j % 2 == 0 { c } else { -c }));
        }
    }
    out.sort_unstable_by_key(|e| e.0);
    let mut merged: Vec<(Face, i64)> = Vec::with_capacity(out.len());
    for (g, c) in out {
        match merged.last_mut() {
            Some(last) if last.0 == g => last.1 += c,
            _ => merged.push((g, c)),
        }
    }
    merged.retain(|e| e.1 != 0);
    merged
}

/// Euler characteristic identity check value: `Σ (-1)^i f_i` over
/// `i = -1 ..= dim`, which should equal `Σ (-1)^i H̃_i`.
pub fn reduced_euler_characteristic(c: &Complex) -> i64 {
    c.f_vector()
        .iter()
        .enumerate()
        .map(|(k, &n)| if k % 2 == 1 { n as i64 } else { -(n as i64) })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use alloc::vec;

    fn f(v: &[Vertex]) -> Face {
        Face::from_vertices(v.iter().copied())
    }

    #[test]
    fn boundary_of_triangle() {
        let c = Complex::simplex(3);
        let m = boundary_matrix(&c, 2, true);
        // rows ab, ac, bc
        assert_eq!(m.column(0), &[(0, 1), (1, -1), (2, 1)]);
        let e = boundary_matrix(&Complex::on_vertices(2, [f(&[0, 1])]).unwrap(), 1, true);
        assert_eq!(e.column(0), &[(0, -1), (1, 1)]);
    }

    #[test]
    fn augmentation_row() {
        let c = Complex::on_vertices(3, [f(&[0]), f(&[1]), f(&[2])]).unwrap();
        let m = boundary_matrix(&c, 0, true);
        assert_eq!(m.rows(), 1);
        assert!((0..3).all(|j| m.column(j) == [(0, 1)]));
        assert_eq!(boundary_matrix(&c, 0, false).rows(), 0);
        assert_eq!(reduced_betti(&c, 0, FieldSpec::Gf2), 2);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let c = Complex::simplex(5);
        for i in 0..5 {
            let p = boundary_matrix(&c, i, true).mul(&boundary_matrix(&c, i + 1, true)).unwrap();
            assert_eq!(p.nnz(), 0);
        }
    }

    #[test]
    fn spheres_and_simplices() {
        for field in FieldSpec::PROBES {
            assert_eq!(betti_profile(&Complex::simplex(5), field), vec![0; 5]);
            assert_eq!(betti_profile(&named::lambda(4, 2), field), vec![0, 0, 1]);
        }
    }

    #[test]
    fn rp2_depends_on_characteristic() {
        let rp2 = named::rp2();
        assert_eq!(betti_profile(&rp2, FieldSpec::Gf2), vec![0, 1, 1]);
        assert_eq!(betti_profile(&rp2, FieldSpec::Gfp(3)), vec![0, 0, 0]);
        assert_eq!(betti_profile(&rp2, FieldSpec::Rational), vec![0, 0, 0]);
    }

    #[test]
    fn minus_one_dimension() {
        let empty_face = Complex::on_vertices(0, [Face::EMPTY]).unwrap();
        assert_eq!(reduced_betti(&empty_face, -1, FieldSpec::Gf2), 1);
        let void = Complex::on_vertices(2, []).unwrap();
        assert_eq!(reduced_betti(&void, -1, FieldSpec::Gf2), 0);
        assert_eq!(reduced_betti(&Complex::simplex(2), -1, FieldSpec::Gf2), 0);
        assert!(betti_profile(&void, FieldSpec::Gf2).is_empty());
    }

    #[test]
    fn induced_orientation_rule() {
        let o = OrientedFace::from_order(&[0, 1, 2]).unwrap();
        let a = induced_orientation(&o, 1).unwrap();
        assert_eq!(a, OrientedFace::from_order(&[0, 2]).unwrap());
        let b = induced_orientation(&o, 0).unwrap();
        assert_eq!(b, OrientedFace::from_order(&[2, 1]).unwrap());
        assert!(induced_orientation(&o, 5).is_err());
        assert_eq!(OrientedFace::from_order(&[1, 0, 2]).unwrap(), OrientedFace::from_order(&[0, 2, 1]).unwrap());
    }

    #[test]
    fn induced_orientations_cancel_in_pairs() {
        // Each codimension-2 face of an oriented 3-face is reached twice,
        // with opposite orientations.
        for order in [[0, 1, 2, 3], [1, 0, 2, 3], [3, 1, 0, 2]] {
            let o = OrientedFace::from_order(&order).unwrap();
            let mut seen: Vec<(Face, i64)> = Vec::new();
            for &u in &order {
                let a = induced_orientation(&o, u).unwrap();
                for &v in &order {
                    if v != u {
                        let b = induced_orientation(&a, v).unwrap();
                        seen.push((b.face, b.sign()));
                    }
                }
            }
            let mut total: Vec<(Face, i64)> = Vec::new();
            for (g, s) in seen {
                match total.iter_mut().find(|e| e.0 == g) {
                    Some(e) => e.1 += s,
                    None => total.push((g, s)),
                }
            }
            assert!(total.iter().all(|e| e.1 == 0));
        }
    }

    #[test]
    fn euler_identity() {
        for c in [named::rp2(), named::lambda(4, 2), named::double_tetrahedron(), named::example7()] {
            let chi: i64 = betti_profile(&c, FieldSpec::Rational)
                .iter()
                .enumerate()
                .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
                .sum();
            assert_eq!(reduced_euler_characteristic(&c), chi);
        }
    }

    #[test]
    fn chain_boundary_cancels() {
        let t = named::lambda(4, 2);
        // signs making the hollow tetrahedron a cycle: ∂(abcd) coefficients
        let terms: Vec<(Face, i64)> = Face::full(4)
            .facets_of_boundary()
            .map(|(j, g)| (g, if j % 2 == 0 { 1 } else { -1 }))
            .collect();
        assert!(chain_boundary(&terms).is_empty());
        assert_eq!(t.facets().len(), 4);
    }
}
