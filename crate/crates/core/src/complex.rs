//! Simplicial complexes stored by their facets, and the purely
//! combinatorial transforms on them.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::face::{sorted_index, Face, Vertex, MAX_VERTICES};

/// A finite simplicial complex on an explicit vertex set.
///
/// Only the facets are stored. The vertex set may be larger than the union
/// of the facets: a vertex lying in no facet is not a face (its singleton is
/// a non-face), which is how Stanley-Reisner complexes of ideals with linear
/// generators look.
///
/// The void complex (no faces at all) has an empty facet list; the complex
/// `{∅}` has the single facet `∅`.
///
/// Equality compares the labelled vertex set and the facet set.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Complex {
    labels: Vec<String>,
    facets: Vec<Face>,
}

/// An induced subcomplex together with the ids its vertices had in the
/// parent complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub complex: Complex,
    /// `parent_ids[i]` is the parent id of vertex `i` of `complex`.
    pub parent_ids: Vec<Vertex>,
}

/// Keeps only the inclusion-maximal faces, sorted.
pub(crate) fn maximal_faces(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| f.is_subset(*k)) {
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}

/// Default labels `x0, x1, ..`.
pub fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

/// Builds a complex from facets given as label lists. Vertex ids are
/// assigned in first-seen order, then `extra_vertices` not yet seen.
/// Non-maximal inputs are absorbed.
pub fn build_complex<F, S>(facets: &[F], extra_vertices: &[S]) -> Result<Complex>
where
    F: AsRef<[S]>,
    S: AsRef<str>,
{
    let mut labels: Vec<String> = Vec::new();
    let id_of = |label: &str, labels: &mut Vec<String>| -> Result<Vertex> {
        if label.is_empty() {
            return Err(Error::Input("empty vertex label".to_owned()));
        }
        if let Some(i) = labels.iter().position(|l| l == label) {
            return Ok(i);
        }
        if labels.len() == MAX_VERTICES {
            return Err(Error::Input(format!(
                "more than {MAX_VERTICES} vertices are not supported"
            )));
        }
        labels.push(label.to_owned());
        Ok(labels.len() - 1)
    };
    let mut faces = Vec::with_capacity(facets.len());
    for facet in facets {
        let mut face = Face::EMPTY;
        for label in facet.as_ref() {
            let v = id_of(label.as_ref(), &mut labels)?;
            if face.contains(v) {
                return Err(Error::Input(format!(
                    "duplicate label {:?} in one facet",
                    label.as_ref()
                )));
            }
            face = face.with(v);
        }
        faces.push(face);
    }
    for label in extra_vertices {
        id_of(label.as_ref(), &mut labels)?;
    }
    Complex::new(labels, faces)
}

impl Complex {
    /// Creates a complex, absorbing non-maximal faces.
    pub fn new<I: IntoIterator<Item = Face>>(labels: Vec<String>, faces: I) -> Result<Self> {
        let n = labels.len();
        if n > MAX_VERTICES {
            return Err(Error::Input(format!(
                "{n} vertices exceed the supported maximum of {MAX_VERTICES}"
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::Input(format!("duplicate vertex label {l:?}")));
            }
        }
        let all = Face::full(n);
        let faces: Vec<Face> = faces.into_iter().collect();
        if let Some(bad) = faces.iter().find(|f| !f.is_subset(all)) {
            return Err(Error::Input(format!("facet {bad:?} uses an unknown vertex id")));
        }
        Ok(Complex {
            labels,
            facets: maximal_faces(faces),
        })
    }

    /// Creates a complex on `n` vertices labelled `x0 .. x{n-1}`.
    pub fn on_vertices<I: IntoIterator<Item = Face>>(n: usize, faces: I) -> Result<Self> {
        Complex::new(default_labels(n), faces)
    }

    /// Same labels, new faces. Faces must already be in range.
    pub(crate) fn with_faces(&self, faces: Vec<Face>) -> Complex {
        Complex {
            labels: self.labels.clone(),
            facets: maximal_faces(faces),
        }
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Self {
        Complex::on_vertices(n, [Face::full(n)]).expect("n within range")
    }

    /// `Λ_n^d`: all `(d+1)`-subsets of `n` vertices.
    pub fn complete_pure(n: usize, d: usize) -> Self {
        Complex::on_vertices(n, Face::full(n).subsets_of_size(d + 1)).expect("n within range")
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertex_set(&self) -> Face {
        Face::full(self.labels.len())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn vertex_id(&self, label: &str) -> Option<Vertex> {
        self.labels.iter().position(|l| l == label)
    }

    /// Sorted label list of a face.
    pub fn face_labels(&self, f: Face) -> Vec<String> {
        f.vertices().map(|v| self.labels[v].clone()).collect()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// No faces at all, not even `∅`.
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Largest facet dimension; `-1` for `{∅}` and for the void complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn is_face(&self, f: Face) -> bool {
        self.facets.iter().any(|g| f.is_subset(*g))
    }

    /// Every facet has exactly `d + 1` vertices (vacuous for the void
    /// complex).
    pub fn is_pure_of_dim(&self, d: usize) -> bool {
        self.facets.iter().all(|f| f.len() == d + 1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub(crate) fn check_pure(&self, d: usize) -> Result<()> {
        match self.facets.iter().find(|f| f.len() != d + 1) {
            None => Ok(()),
            Some(f) => Err(Error::Purity {
                expected: d,
                found: f.dim(),
            }),
        }
    }

    /// All faces of dimension `i`, sorted.
    pub fn faces_of_dim(&self, i: isize) -> Vec<Face> {
        self.faces_of_dim_within(i, self.vertex_set())
    }

    /// All faces of dimension `i` contained in `w`, sorted.
    pub fn faces_of_dim_within(&self, i: isize, w: Face) -> Vec<Face> {
        if i < -1 || self.is_void() {
            return Vec::new();
        }
        let k = (i + 1) as usize;
        let mut out: Vec<Face> = Vec::new();
        for f in &self.facets {
            let g = f.intersection(w);
            if g.len() >= k {
                out.extend(g.subsets_of_size(k));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Number of faces in each dimension `-1 ..= dim`; index 0 is `f_{-1}`.
    pub fn f_vector(&self) -> Vec<usize> {
        (-1..=self.dim())
            .map(|i| self.faces_of_dim(i).len())
            .collect()
    }

    /// `Γ^[d]`: same vertex set, facets are the `d`-faces.
    pub fn pure_skeleton(&self, d: usize) -> Complex {
        Complex {
            labels: self.labels.clone(),
            facets: self.faces_of_dim(d as isize),
        }
    }

    /// `Γ_W` with re-densified ids.
    pub fn induced_subcomplex(&self, w: &[Vertex]) -> Result<Induced> {
        let n = self.vertex_count();
        if let Some(&v) = w.iter().find(|&&v| v >= n) {
            return Err(Error::Input(format!("unknown vertex id {v}")));
        }
        Ok(self.induced_on(Face::from_vertices(w.iter().copied())))
    }

    /// `Γ_W` for a vertex mask inside the vertex set.
    pub fn induced_on(&self, w: Face) -> Induced {
        debug_assert!(w.is_subset(self.vertex_set()));
        let labels = w.vertices().map(|v| self.labels[v].clone()).collect();
        let faces: Vec<Face> = self
            .facets
            .iter()
            .map(|f| f.intersection(w).compress(w))
            .collect();
        Induced {
            complex: Complex {
                labels,
                facets: maximal_faces(faces),
            },
            parent_ids: w.to_vec(),
        }
    }

    /// `Δ_d(Γ)`: adds every set of size at most `d` and every larger set all
    /// of whose `(d+1)`-subsets are faces. Requires a pure `d`-dimensional
    /// input (an empty facet list is accepted).
    pub fn d_closure(&self, d: usize) -> Result<Complex> {
        self.check_pure(d)?;
        let n = self.vertex_count();
        let all = self.vertex_set();
        if n < d {
            return Ok(self.with_faces(vec![all]));
        }
        let mut levels: Vec<Vec<Face>> = vec![self.facets.clone()];
        loop {
            let cur = levels.last().expect("nonempty");
            let mut next = Vec::new();
            for &s in cur {
                let start = s.max_vertex().map_or(0, |m| m + 1);
                for v in start..n {
                    let t = s.with(v);
                    if s.vertices().all(|u| sorted_index(cur, t.without(u)).is_some()) {
                        next.push(t);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            levels.push(next);
        }
        let mut facets = Vec::new();
        for k in 0..levels.len() {
            let upper = levels.get(k + 1);
            for &s in &levels[k] {
                let covered = upper.is_some_and(|up| {
                    all.difference(s)
                        .vertices()
                        .any(|v| sorted_index(up, s.with(v)).is_some())
                });
                if !covered {
                    facets.push(s);
                }
            }
        }
        for s in all.subsets_of_size(d) {
            let covered = all
                .difference(s)
                .vertices()
                .any(|v| sorted_index(&levels[0], s.with(v)).is_some());
            if !covered {
                facets.push(s);
            }
        }
        Ok(self.with_faces(facets))
    }

    /// The pure complex on the same vertex set whose facets are the
    /// `(d+1)`-subsets that are not faces.
    pub fn d_complement(&self, d: usize) -> Result<Complex> {
        self.check_pure(d)?;
        let facets = self
            .vertex_set()
            .subsets_of_size(d + 1)
            .filter(|s| sorted_index(&self.facets, *s).is_none())
            .collect();
        Ok(Complex {
            labels: self.labels.clone(),
            facets,
        })
    }

    /// Every `(d+1)`-subset of the vertex set is a face.
    pub fn is_d_complete(&self, d: usize) -> bool {
        self.vertex_set()
            .subsets_of_size(d + 1)
            .all(|s| self.is_face(s))
    }

    /// Renders the facets as label lists.
    pub fn facet_labels(&self) -> Vec<Vec<String>> {
        self.facets.iter().map(|f| self.face_labels(*f)).collect()
    }
}

impl core::fmt::Display for Complex {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("<")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let labels = self.face_labels(*facet);
            if labels.iter().all(|l| l.chars().count() == 1) {
                f.write_str(&labels.concat())?;
            } else {
                f.write_str(&labels.join(" "))?;
            }
            if labels.is_empty() {
                f.write_str("∅")?;
            }
        }
        f.write_str(">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn cx(facets: &[&str]) -> Complex {
        let lists: Vec<Vec<String>> = facets
            .iter()
            .map(|f| f.chars().map(|c| c.to_string()).collect())
            .collect();
        build_complex::<_, String>(&lists, &[]).unwrap()
    }

    fn cx_on(vertices: &str, facets: &[&str]) -> Complex {
        let labels: Vec<String> = vertices.chars().map(|c| c.to_string()).collect();
        let faces = facets.iter().map(|f| {
            Face::from_vertices(f.chars().map(|ch| vertices.find(ch).unwrap()))
        });
        Complex::new(labels, faces).unwrap()
    }

    fn names(c: &Complex) -> Vec<String> {
        c.facet_labels().into_iter().map(|l| l.concat()).collect()
    }

    #[test]
    fn absorption_and_extra_vertices() {
        assert_eq!(names(&cx(&["abc", "ab"])), ["abc"]);
        let c = build_complex::<Vec<&str>, &str>(&[], &["a"]).unwrap();
        assert_eq!(c.vertex_count(), 1);
        assert!(c.facets().is_empty());
        assert!(c.is_void());
    }

    #[test]
    fn duplicate_label_in_facet_is_rejected() {
        let err = build_complex(&[vec!["a", "b", "a"]], &[] as &[&str]).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }

    #[test]
    fn faces_of_hollow_tetrahedron() {
        let t = Complex::complete_pure(4, 2);
        assert_eq!(t.faces_of_dim(1).len(), 6);
        assert_eq!(t.faces_of_dim(-1), [Face::EMPTY]);
        assert!(t.faces_of_dim(3).is_empty());
        assert_eq!(cx(&["abc"]).faces_of_dim(2).len(), 1);
    }

    #[test]
    fn skeletons() {
        let t = Complex::complete_pure(4, 2);
        assert_eq!(t.pure_skeleton(1), Complex::complete_pure(4, 1));
        assert_eq!(Complex::simplex(4).pure_skeleton(2), t);
    }

    #[test]
    fn induced() {
        let t = cx(&["abc", "abd", "acd", "bcd"]);
        let i = t.induced_subcomplex(&[0, 1, 2]).unwrap();
        assert_eq!(names(&i.complex), ["abc"]);
        assert_eq!(i.parent_ids, [0, 1, 2]);
        let all: Vec<Vertex> = (0..4).collect();
        assert_eq!(t.induced_subcomplex(&all).unwrap().complex, t);
        assert!(t.induced_subcomplex(&[7]).is_err());
    }

    #[test]
    fn closure_of_figure_complex() {
        let g = cx(&["abc", "abd", "acd", "bcd", "cde"]);
        let delta = g.d_closure(2).unwrap();
        assert_eq!(names(&delta), ["abcd", "ae", "be", "cde"]);
    }

    #[test]
    fn closure_of_lambda_is_simplex() {
        for d in 0..4 {
            let l = Complex::complete_pure(d + 2, d);
            assert_eq!(l.d_closure(d).unwrap(), Complex::simplex(d + 2));
        }
    }

    #[test]
    fn closure_of_path_graph() {
        let p = cx(&["ab", "bc"]);
        let delta = p.d_closure(1).unwrap();
        assert_eq!(names(&delta), ["ab", "bc"]);
        let q = cx_on("abcd", &["ab", "bc"]);
        assert_eq!(names(&q.d_closure(1).unwrap()), ["ab", "bc", "d"]);
    }

    #[test]
    fn closure_rejects_impure() {
        assert!(matches!(
            cx(&["abc", "de"]).d_closure(2),
            Err(Error::Purity { .. })
        ));
    }

    #[test]
    fn complement() {
        let c = cx_on("abcd", &["abc"]);
        assert_eq!(names(&c.d_complement(2).unwrap()), ["abd", "acd", "bcd"]);
        let t = Complex::complete_pure(4, 2);
        let tc = t.d_complement(2).unwrap();
        assert_eq!(tc.vertex_count(), 4);
        assert!(tc.facets().is_empty());
        assert_eq!(c.d_complement(2).unwrap().d_complement(2).unwrap(), c);
    }

    #[test]
    fn completeness() {
        assert!(Complex::complete_pure(4, 2).is_d_complete(2));
        assert!(Complex::complete_pure(5, 1).is_d_complete(1));
        assert!(!cx(&["abc", "abd"]).is_d_complete(2));
    }

    #[test]
    fn void_and_empty_face_differ() {
        let void = Complex::on_vertices(2, []).unwrap();
        let empty = Complex::on_vertices(2, [Face::EMPTY]).unwrap();
        assert_ne!(void, empty);
        assert!(void.faces_of_dim(-1).is_empty());
        assert_eq!(empty.faces_of_dim(-1), [Face::EMPTY]);
    }
}
