//! d-dimensional cycles: detection, enumeration, minimality, orientability
//! and decomposition.
//!
//! A set of d-faces is a cycle when it is d-path-connected and every
//! (d-1)-face lies in an even number of its members. Over GF(2) these are
//! exactly the connected supports of vectors in the kernel of `∂_d`, and the
//! face-minimal cycles are the circuits of the column matroid of `∂_d`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::{sorted_index, Face};
use crate::linalg::{gf2, BitVec, Field, Gf2Reduction, IntMatrix, Rationals, SparseMatrix};

/// Default limit on enumerated kernel vectors and search nodes.
pub const DEFAULT_CAP: u128 = 1 << 20;

/// A d-dimensional cycle with whatever classification has been computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleRecord {
    pub d: usize,
    /// Sorted d-faces.
    pub faces: Vec<Face>,
    pub vertex_set: Face,
    pub d_complete: bool,
    pub face_minimal: Option<bool>,
    pub vertex_minimal: Option<bool>,
    pub orientable: Option<bool>,
    /// Only meaningful for orientable cycles.
    pub orientably_vertex_minimal: Option<bool>,
    /// Signs parallel to `faces` whose signed sum has zero boundary.
    pub orientation: Option<Vec<i8>>,
}

impl CycleRecord {
    /// Wraps a face set, checking that it is a d-dimensional cycle.
    pub fn new(d: usize, mut faces: Vec<Face>) -> Result<Self> {
        faces.sort_unstable();
        faces.dedup();
        if !is_cycle(&faces, d) {
            return Err(Error::Precondition("faces do not form a d-dimensional cycle"));
        }
        Ok(Self::unchecked(d, faces))
    }

    pub(crate) fn unchecked(d: usize, faces: Vec<Face>) -> Self {
        let vertex_set = union(&faces);
        let d_complete = vertex_set
            .subsets_of_size(d + 1)
            .all(|s| sorted_index(&faces, s).is_some());
        CycleRecord {
            d,
            faces,
            vertex_set,
            d_complete,
            face_minimal: None,
            vertex_minimal: None,
            orientable: None,
            orientably_vertex_minimal: None,
            orientation: None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_set.len()
    }
}

pub(crate) fn union(faces: &[Face]) -> Face {
    faces.iter().fold(Face::EMPTY, |a, f| a.union(*f))
}

/// `∂` restricted to a list of equal-size faces, with every boundary face as
/// a row. Faces must be sorted.
pub fn face_boundary_matrix(faces: &[Face]) -> IntMatrix {
    let mut rows: Vec<Face> = faces.iter().flat_map(|f| f.facets_of_boundary().map(|e| e.1)).collect();
    rows.sort_unstable();
    rows.dedup();
    let columns = faces
        .iter()
        .map(|f| {
            let mut col: Vec<(usize, i64)> = f
                .facets_of_boundary()
                .map(|(j, g)| (sorted_index(&rows, g).expect("listed"), if j % 2 == 0 { 1 } else { -1 }))
                .collect();
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect();
    SparseMatrix::new(rows, faces.to_vec(), columns).expect("sorted faces")
}

/// GF(2) boundary columns of a face list, reused across subset queries.
pub(crate) struct Columns {
    pub faces: Vec<Face>,
    pub rows: usize,
    pub cols: Vec<BitVec>,
}

impl Columns {
    pub fn new(faces: &[Face]) -> Self {
        let m = face_boundary_matrix(faces);
        Columns {
            faces: faces.to_vec(),
            rows: m.rows(),
            cols: gf2::columns(&m),
        }
    }

    fn select(&self, keep: &BitVec) -> Vec<BitVec> {
        keep.iter_ones().map(|j| self.cols[j].clone()).collect()
    }

    pub fn nullity_of(&self, keep: &BitVec) -> usize {
        let sel = self.select(keep);
        sel.len() - Gf2Reduction::new(self.rows, &sel, false).rank()
    }

    pub fn kernel(&self) -> Vec<BitVec> {
        Gf2Reduction::new(self.rows, &self.cols, true).kernel().to_vec()
    }

    pub fn faces_of(&self, keep: &BitVec) -> Vec<Face> {
        keep.iter_ones().map(|j| self.faces[j]).collect()
    }

    /// The d-path components of a support, as index sets.
    pub fn components_of(&self, keep: &BitVec) -> Vec<BitVec> {
        let idx: Vec<usize> = keep.iter_ones().collect();
        let faces: Vec<Face> = idx.iter().map(|&j| self.faces[j]).collect();
        components(&faces)
            .into_iter()
            .map(|block| BitVec::from_indices(self.faces.len(), block.into_iter().map(|k| idx[k])))
            .collect()
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// d-path components of a list of equal-size faces, as index lists in
/// increasing order, ordered by their first index.
fn components(faces: &[Face]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..faces.len()).collect();
    let mut first_with: BTreeMap<Face, usize> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for (_, r) in f.facets_of_boundary() {
            match first_with.get(&r) {
                Some(&j) => {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a.max(b)] = a.min(b);
                }
                None => {
                    first_with.insert(r, i);
                }
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..faces.len() {
        let r = find(&mut parent, i);
        blocks.entry(r).or_default().push(i);
    }
    blocks.into_values().collect()
}

/// Components of the graph on the d-faces of `c` in which two faces are
/// adjacent when they share `d` vertices.
pub fn d_path_components(c: &Complex, d: usize) -> Vec<Vec<Face>> {
    let faces = c.faces_of_dim(d as isize);
    components(&faces)
        .into_iter()
        .map(|b| b.into_iter().map(|i| faces[i]).collect())
        .collect()
}

/// Whether a sorted list of d-faces forms a d-dimensional cycle.
pub fn is_cycle(faces: &[Face], d: usize) -> bool {
    if faces.is_empty() || faces.iter().any(|f| f.len() != d + 1) {
        return false;
    }
    let mut incidence: BTreeMap<Face, usize> = BTreeMap::new();
    for f in faces {
        for (_, r) in f.facets_of_boundary() {
            *incidence.entry(r).or_insert(0) += 1;
        }
    }
    incidence.values().all(|n| n % 2 == 0) && components(faces).len() == 1
}

/// Whether `c` itself is a d-dimensional cycle.
pub fn is_d_dimensional_cycle(c: &Complex, d: usize) -> bool {
    !c.is_void() && c.is_pure_of_dim(d) && is_cycle(c.facets(), d)
}

fn kernel_supports(cols: &Columns, cap: u128) -> Result<Vec<BitVec>> {
    gf2::span_vectors(&cols.kernel(), cap)
}

/// All cycles whose faces are among `faces` (sorted d-faces), as sorted face
/// lists in increasing order.
pub fn cycles_among(faces: &[Face], cap: u128) -> Result<Vec<Vec<Face>>> {
    let cols = Columns::new(faces);
    let mut found: BTreeSet<Vec<Face>> = BTreeSet::new();
    for v in kernel_supports(&cols, cap)? {
        for block in cols.components_of(&v) {
            found.insert(cols.faces_of(&block));
        }
    }
    Ok(found.into_iter().collect())
}

/// The face-minimal cycles among `faces`: supports of kernel vectors whose
/// own kernel is one-dimensional.
pub fn circuits_among(faces: &[Face], cap: u128) -> Result<Vec<Vec<Face>>> {
    let cols = Columns::new(faces);
    let mut out: Vec<Vec<Face>> = kernel_supports(&cols, cap)?
        .into_iter()
        .filter(|v| cols.nullity_of(v) == 1)
        .map(|v| cols.faces_of(&v))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Every d-dimensional cycle of `c` with vertices in `w`.
pub fn enumerate_cycles_within(c: &Complex, d: usize, w: Face, cap: u128) -> Result<Vec<CycleRecord>> {
    if !w.is_subset(c.vertex_set()) {
        return Err(Error::Input("vertex subset is not inside the complex".into()));
    }
    let faces = c.faces_of_dim_within(d as isize, w);
    Ok(cycles_among(&faces, cap)?
        .into_iter()
        .map(|f| CycleRecord::unchecked(d, f))
        .collect())
}

/// No cycle lies on a strict subset of the faces.
pub fn is_face_minimal(faces: &[Face]) -> bool {
    let cols = Columns::new(faces);
    cols.nullity_of(&BitVec::ones(faces.len())) == 1
}

/// Memoized "does the ambient complex have a (orientable) cycle on vertices
/// inside `w`" queries.
pub struct CycleOracle<'a> {
    ambient: &'a [Face],
    d: usize,
    cap: u128,
    any: BTreeMap<u64, bool>,
    orientable: BTreeMap<u64, bool>,
}

impl<'a> CycleOracle<'a> {
    /// `ambient` holds the sorted d-faces of the ambient complex.
    pub fn new(ambient: &'a [Face], d: usize, cap: u128) -> Self {
        CycleOracle {
            ambient,
            d,
            cap,
            any: BTreeMap::new(),
            orientable: BTreeMap::new(),
        }
    }

    fn within(&self, w: Face) -> Vec<Face> {
        self.ambient.iter().copied().filter(|f| f.is_subset(w)).collect()
    }

    pub fn has_cycle(&mut self, w: Face) -> bool {
        if let Some(&b) = self.any.get(&w.bits()) {
            return b;
        }
        let faces = self.within(w);
        let b = !faces.is_empty() && Columns::new(&faces).nullity_of(&BitVec::ones(faces.len())) > 0;
        self.any.insert(w.bits(), b);
        b
    }

    pub fn has_orientable_cycle(&mut self, w: Face) -> Result<bool> {
        if let Some(&b) = self.orientable.get(&w.bits()) {
            return Ok(b);
        }
        let mut b = false;
        if self.has_cycle(w) {
            for v in w.vertices() {
                if self.has_orientable_cycle(w.without(v))? {
                    b = true;
                    break;
                }
            }
            if !b {
                // Only cycles spanning all of `w` are left to try.
                for cyc in cycles_among(&self.within(w), self.cap)? {
                    if union(&cyc) == w && orientation(&cyc, self.d, self.cap)?.is_some() {
                        b = true;
                        break;
                    }
                }
            }
        }
        self.orientable.insert(w.bits(), b);
        Ok(b)
    }

    /// No cycle on a strict subset of `vertices`.
    pub fn is_vertex_minimal(&mut self, vertices: Face) -> bool {
        vertices.vertices().all(|v| !self.has_cycle(vertices.without(v)))
    }

    /// No orientable cycle on a strict subset of `vertices`.
    pub fn is_orientably_vertex_minimal(&mut self, vertices: Face) -> Result<bool> {
        for v in vertices.vertices() {
            if self.has_orientable_cycle(vertices.without(v))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Fills in every classification flag of `cycle` relative to `ambient`.
pub fn classify_minimality(cycle: &CycleRecord, ambient: &Complex, cap: u128) -> Result<CycleRecord> {
    let d = cycle.d;
    let ambient_faces = ambient.faces_of_dim(d as isize);
    if cycle.faces.iter().any(|f| sorted_index(&ambient_faces, *f).is_none()) {
        return Err(Error::Precondition("cycle does not lie in the ambient complex"));
    }
    let mut out = cycle.clone();
    out.face_minimal = Some(is_face_minimal(&cycle.faces));
    let mut oracle = CycleOracle::new(&ambient_faces, d, cap);
    out.vertex_minimal = Some(oracle.is_vertex_minimal(cycle.vertex_set));
    let signs = orientation(&cycle.faces, d, cap)?;
    out.orientable = Some(signs.is_some());
    out.orientably_vertex_minimal = match signs {
        Some(_) => Some(oracle.is_orientably_vertex_minimal(cycle.vertex_set)?),
        None => None,
    };
    out.orientation = signs;
    Ok(out)
}

/// Signs `ε` on a cycle's faces with `∂(Σ ε_i F_i) = 0`, if any exist. The
/// returned signs are checked over the rationals.
///
/// Signs are forced across (d-1)-faces met by exactly two faces; branching
/// only happens at higher incidence. More than `cap` search nodes is a cap
/// error.
pub fn orientation(faces: &[Face], d: usize, cap: u128) -> Result<Option<Vec<i8>>> {
    if !is_cycle(faces, d) {
        return Err(Error::Precondition("faces do not form a d-dimensional cycle"));
    }
    let m = face_boundary_matrix(faces);
    let mut ridges: Vec<Vec<(usize, i8)>> = vec![Vec::new(); m.rows()];
    let mut of_face: Vec<Vec<usize>> = vec![Vec::new(); faces.len()];
    for (j, col) in m.columns().iter().enumerate() {
        for &(r, s) in col {
            ridges[r].push((j, s as i8));
            of_face[j].push(r);
        }
    }
    let mut search = SignSearch {
        ridges: &ridges,
        of_face: &of_face,
        nodes: 0,
        cap,
    };
    let mut signs = vec![0i8; faces.len()];
    signs[0] = 1;
    let Some(signs) = search.run(signs, vec![0])? else {
        return Ok(None);
    };
    let x: Vec<_> = signs.iter().map(|&s| Rationals.from_i64(s as i64)).collect();
    let q = m.to_field(&Rationals);
    if q.mul_dense(&x, &Rationals)?.iter().any(|e| !num_traits::Zero::is_zero(e)) {
        return Err(Error::Precondition("orientation failed verification"));
    }
    Ok(Some(signs))
}

struct SignSearch<'a> {
    ridges: &'a [Vec<(usize, i8)>],
    of_face: &'a [Vec<usize>],
    nodes: u128,
    cap: u128,
}

impl SignSearch<'_> {
    /// Propagates from `queue`; false on a contradiction.
    fn propagate(&self, signs: &mut [i8], mut queue: Vec<usize>) -> bool {
        while let Some(j) = queue.pop() {
            for &r in &self.of_face[j] {
                let inc = &self.ridges[r];
                if inc.len() == 2 {
                    let (a, b) = if inc[0].0 == j { (inc[0], inc[1]) } else { (inc[1], inc[0]) };
                    let want = -signs[a.0] * a.1 * b.1;
                    if signs[b.0] == 0 {
                        signs[b.0] = want;
                        queue.push(b.0);
                    } else if signs[b.0] != want {
                        return false;
                    }
                } else {
                    let mut sum = 0i64;
                    let mut free = 0i64;
                    for &(k, s) in inc {
                        if signs[k] == 0 {
                            free += 1;
                        } else {
                            sum += (signs[k] * s) as i64;
                        }
                    }
                    if sum.abs() > free {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, mut signs: Vec<i8>, queue: Vec<usize>) -> Result<Option<Vec<i8>>> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::CapExceeded {
                what: "orientation search nodes",
                needed: self.nodes,
                limit: self.cap,
            });
        }
        if !self.propagate(&mut signs, queue) {
            return Ok(None);
        }
        // Branch on a face next to an assigned one; cycles are connected.
        let next = (0..signs.len())
            .find(|&j| {
                signs[j] == 0
                    && self.of_face[j]
                        .iter()
                        .any(|&r| self.ridges[r].iter().any(|&(k, _)| signs[k] != 0))
            })
            .or_else(|| signs.iter().position(|&s| s == 0));
        let Some(j) = next else {
            return Ok(Some(signs));
        };
        for s in [1i8, -1] {
            let mut trial = signs.clone();
            trial[j] = s;
            if let Some(done) = self.run(trial, vec![j])? {
                return Ok(Some(done));
            }
        }
        Ok(None)
    }
}

/// Signed orientation of a cycle record, as `(face, ±1)` pairs.
pub fn is_orientable(cycle: &CycleRecord, cap: u128) -> Result<Option<Vec<(Face, i8)>>> {
    Ok(orientation(&cycle.faces, cycle.d, cap)?.map(|s| cycle.faces.iter().copied().zip(s).collect()))
}

/// Splits a cycle's faces into face-minimal cycles by repeatedly cutting a
/// circuit out of what remains.
pub fn decompose_cycle(cycle: &CycleRecord) -> Result<Vec<Vec<Face>>> {
    if !is_cycle(&cycle.faces, cycle.d) {
        return Err(Error::Precondition("faces do not form a d-dimensional cycle"));
    }
    let cols = Columns::new(&cycle.faces);
    let n = cycle.faces.len();
    let mut remaining = BitVec::ones(n);
    let mut blocks = Vec::new();
    while !remaining.is_zero() {
        // `remaining` is always a GF(2) cycle, so it has nullity >= 1.
        let mut s = remaining.clone();
        for j in remaining.iter_ones() {
            s.clear(j);
            if cols.nullity_of(&s) == 0 {
                s.set(j);
            }
        }
        blocks.push(cols.faces_of(&s));
        remaining = remaining.and_not(&s);
    }
    blocks.sort_unstable();
    Ok(blocks)
}
