//! Faces as bit sets over at most 64 dense vertex ids.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Dense vertex index inside a complex or ideal.
pub type Vertex = usize;

/// Largest number of vertices a [`Face`] can address.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex ids, stored as a 64-bit mask.
///
/// Faces are ordered lexicographically by their sorted vertex lists, so a
/// prefix sorts first: `[] < [0] < [0, 1] < [0, 2] < [1]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Builds a face from vertex ids; duplicates collapse.
    ///
    /// # Panics
    /// If an id is `>= 64`.
    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        let mut bits = 0u64;
        for v in vertices {
            assert!(v < MAX_VERTICES, "vertex id {v} out of range");
            bits |= 1 << v;
        }
        Face(bits)
    }

    /// The full vertex set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|F| - 1`; the empty face has dimension -1.
    #[inline]
    pub const fn dim(self) -> isize {
        self.len() as isize - 1
    }

    #[inline]
    pub const fn contains(self, v: Vertex) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    #[inline]
    pub const fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    #[inline]
    pub const fn with(self, v: Vertex) -> Face {
        Face(self.0 | (1 << v))
    }

    #[inline]
    pub const fn without(self, v: Vertex) -> Face {
        Face(self.0 & !(1 << v))
    }

    /// Largest vertex id, if any.
    #[inline]
    pub fn max_vertex(self) -> Option<Vertex> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.vertices().collect()
    }

    /// All subsets of `self` with exactly `k` elements, in increasing
    /// face order.
    pub fn subsets_of_size(self, k: usize) -> SubsetsOfSize {
        SubsetsOfSize::new(self, k)
    }

    /// The faces `self \ {v}` for each vertex, ordered by the position of
    /// the removed vertex in the sorted vertex list.
    pub fn facets_of_boundary(self) -> impl Iterator<Item = (usize, Face)> {
        self.vertices().enumerate().map(move |(j, v)| (j, self.without(v)))
    }

    /// Position of `v` in the sorted vertex list of `self`.
    #[inline]
    pub fn position(self, v: Vertex) -> Option<usize> {
        self.contains(v)
            .then(|| (self.0 & ((1u64 << v) - 1)).count_ones() as usize)
    }

    /// Re-indexes `self` through an increasing list of kept ids: vertex
    /// `keep[i]` maps to `i`. Vertices outside `keep` are dropped.
    pub fn compress(self, keep: Face) -> Face {
        let mut out = 0u64;
        for (i, v) in keep.vertices().enumerate() {
            if self.contains(v) {
                out |= 1 << i;
            }
        }
        Face(out)
    }

    /// Inverse of [`Face::compress`].
    pub fn expand(self, keep: Face) -> Face {
        let mut out = 0u64;
        for (i, v) in keep.vertices().enumerate() {
            if self.contains(i) {
                out |= 1 << v;
            }
        }
        Face(out)
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // The sorted lists agree below the lowest differing vertex `v`. The
        // side holding `v` is smaller unless the other side has run out.
        let v = diff.trailing_zeros();
        let above = if v == 63 { 0 } else { u64::MAX << (v + 1) };
        if self.0 & (1 << v) != 0 {
            if other.0 & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

impl FromIterator<Vertex> for Face {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Face::from_vertices(iter)
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = Vertex;

    #[inline]
    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Iterator over the `k`-subsets of a face.
pub struct SubsetsOfSize {
    verts: Vec<Vertex>,
    idx: Vec<usize>,
    done: bool,
}

impl SubsetsOfSize {
    fn new(face: Face, k: usize) -> Self {
        let verts = face.to_vec();
        let done = k > verts.len();
        SubsetsOfSize {
            verts,
            idx: (0..k).collect(),
            done,
        }
    }
}

impl Iterator for SubsetsOfSize {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        if self.done {
            return None;
        }
        let face = Face::from_vertices(self.idx.iter().map(|&i| self.verts[i]));
        // Advance in lexicographic order of index tuples.
        let n = self.verts.len();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(face)
    }
}

/// Index of `f` in a sorted face list.
pub(crate) fn sorted_index(faces: &[Face], f: Face) -> Option<usize> {
    faces.binary_search(&f).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn lex(a: Face, b: Face) -> Ordering {
        a.to_vec().cmp(&b.to_vec())
    }

    #[test]
    fn order_is_lexicographic_on_sorted_lists() {
        let faces = [
            Face::EMPTY,
            Face::from_vertices([0]),
            Face::from_vertices([0, 1]),
            Face::from_vertices([0, 1, 2]),
            Face::from_vertices([0, 2]),
            Face::from_vertices([1]),
            Face::from_vertices([1, 63]),
            Face::from_vertices([63]),
        ];
        for w in faces.windows(2) {
            assert!(w[0] < w[1], "{:?} < {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn subsets_enumerate_binomially() {
        let f = Face::from_vertices([1, 3, 4, 7, 9]);
        let subs: Vec<Face> = f.subsets_of_size(3).collect();
        assert_eq!(subs.len(), 10);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert!(subs.iter().all(|s| s.len() == 3 && s.is_subset(f)));
        assert_eq!(f.subsets_of_size(0).collect::<Vec<_>>(), vec![Face::EMPTY]);
        assert_eq!(f.subsets_of_size(6).count(), 0);
    }

    #[test]
    fn compress_expand() {
        let keep = Face::from_vertices([2, 5, 6]);
        let f = Face::from_vertices([2, 6]);
        assert_eq!(f.compress(keep), Face::from_vertices([0, 2]));
        assert_eq!(f.compress(keep).expand(keep), f);
        assert_eq!(Face::from_vertices([2, 5, 6]).position(6), Some(2));
    }

    proptest! {
        #[test]
        fn ord_matches_vec_order(a in any::<u64>(), b in any::<u64>()) {
            let (a, b) = (Face::from_bits(a), Face::from_bits(b));
            prop_assert_eq!(a.cmp(&b), lex(a, b));
        }

        #[test]
        fn ord_matches_vec_order_small(a in 0u64..64, b in 0u64..64) {
            let (a, b) = (Face::from_bits(a), Face::from_bits(b));
            prop_assert_eq!(a.cmp(&b), lex(a, b));
        }
    }
}
