//! Chord sets and the d-chorded hierarchy.
//!
//! The decision procedure for d-chordedness tests, for every face-minimal
//! non-complete cycle Ω, whether the GF(2) sum of its faces is a boundary in
//! the d-closure induced on V(Ω). A preimage `{G_i}` yields the chord set
//! directly: the witnesses are the boundaries of the `G_i`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::complex::Complex;
use crate::cycles::{self, union, Columns, CycleOracle, CycleRecord};
use crate::error::{Error, Result};
use crate::face::{sorted_index, Face};
use crate::linalg::{BitVec, Gf2Reduction};

/// Largest candidate-chord count the exhaustive search accepts.
pub const MAX_CANDIDATE_CHORDS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChordSource {
    Exhaustive,
    BoundaryCertificate,
}

/// A chord set `C` for a cycle together with the cycles `Ω_1 .. Ω_k` that
/// certify it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordSetRecord {
    pub chords: Vec<Face>,
    pub witnesses: Vec<Vec<Face>>,
    pub source: ChordSource,
}

/// Checks the four chord-set conditions for `chords` and `witnesses`
/// against the cycle `omega` (sorted d-faces) inside `ambient`.
pub fn verify_chord_set(chords: &[Face], omega: &[Face], ambient: &Complex, witnesses: &[Vec<Face>]) -> bool {
    let Some(d) = omega.first().map(|f| f.len() - 1) else {
        return false;
    };
    if witnesses.len() < 2 || !cycles::is_cycle(omega, d) {
        return false;
    }
    let v_omega = union(omega);
    let mut chord_set = chords.to_vec();
    chord_set.sort_unstable();
    chord_set.dedup();
    let chords_ok = chord_set.iter().all(|c| {
        c.len() == d + 1 && c.is_subset(v_omega) && ambient.is_face(*c) && sorted_index(omega, *c).is_none()
    });
    if !chords_ok {
        return false;
    }
    let mut counts: BTreeMap<Face, usize> = BTreeMap::new();
    for w in witnesses {
        let mut w = w.clone();
        w.sort_unstable();
        w.dedup();
        if !cycles::is_cycle(&w, d) || union(&w).len() >= v_omega.len() {
            return false;
        }
        for f in w {
            *counts.entry(f).or_insert(0) += 1;
        }
    }
    let mut expected: Vec<Face> = omega.iter().chain(&chord_set).copied().collect();
    expected.sort_unstable();
    if !counts.keys().copied().eq(expected.iter().copied()) {
        return false;
    }
    counts.iter().all(|(f, &n)| {
        let in_omega = sorted_index(omega, *f).is_some();
        (n % 2 == 1) == in_omega
    })
}

/// The `(d+1)`-faces of the d-closure of `ambient` lying inside `w`: the
/// `(d+2)`-subsets of `w` all of whose `(d+1)`-subsets are d-faces.
fn closure_cells(ambient_dfaces: &[Face], w: Face, d: usize) -> Vec<Face> {
    w.subsets_of_size(d + 2)
        .filter(|s| s.facets_of_boundary().all(|(_, g)| sorted_index(ambient_dfaces, g).is_some()))
        .collect()
}

/// GF(2) reduction of `∂_{d+1}` of the closure induced on one vertex set.
struct ClosureBoundary {
    rows: Vec<Face>,
    cells: Vec<Face>,
    reduction: Gf2Reduction,
}

impl ClosureBoundary {
    fn new(ambient_dfaces: &[Face], w: Face, d: usize) -> Self {
        let rows: Vec<Face> = ambient_dfaces.iter().copied().filter(|f| f.is_subset(w)).collect();
        let cells = closure_cells(ambient_dfaces, w, d);
        let cols: Vec<BitVec> = cells
            .iter()
            .map(|c| {
                BitVec::from_indices(
                    rows.len(),
                    c.facets_of_boundary().map(|(_, g)| sorted_index(&rows, g).expect("closure cell")),
                )
            })
            .collect();
        let reduction = Gf2Reduction::new(rows.len(), &cols, true);
        ClosureBoundary { rows, cells, reduction }
    }

    /// The cells whose boundaries sum to `omega`, if any.
    fn preimage(&self, omega: &[Face]) -> Option<Vec<Face>> {
        let v = BitVec::from_indices(
            self.rows.len(),
            omega.iter().map(|f| sorted_index(&self.rows, *f).expect("cycle faces are ambient faces")),
        );
        let x = self.reduction.solve(&v)?;
        Some(x.iter_ones().map(|j| self.cells[j]).collect())
    }
}

fn certificate_from_cells(omega: &[Face], cells: &[Face]) -> ChordSetRecord {
    let witnesses: Vec<Vec<Face>> = cells
        .iter()
        .map(|g| {
            let mut w: Vec<Face> = g.facets_of_boundary().map(|e| e.1).collect();
            w.sort_unstable();
            w
        })
        .collect();
    let mut chords: Vec<Face> = witnesses
        .iter()
        .flatten()
        .copied()
        .filter(|f| sorted_index(omega, *f).is_none())
        .collect();
    chords.sort_unstable();
    chords.dedup();
    ChordSetRecord {
        chords,
        witnesses,
        source: ChordSource::BoundaryCertificate,
    }
}

fn check_boundary_preconditions(cycle: &CycleRecord) -> Result<()> {
    if !cycles::is_cycle(&cycle.faces, cycle.d) {
        return Err(Error::Precondition("faces do not form a d-dimensional cycle"));
    }
    if cycle.d_complete {
        return Err(Error::Precondition("cycle is d-complete"));
    }
    if !cycles::is_face_minimal(&cycle.faces) {
        return Err(Error::Precondition("cycle is not face-minimal"));
    }
    Ok(())
}

/// A chord set for a face-minimal, non-complete cycle read off a GF(2)
/// preimage of its face sum under `∂_{d+1}` of the d-closure of `ambient`
/// on V(Ω). `None` when the face sum is not such a boundary.
pub fn boundary_chord_test(cycle: &CycleRecord, ambient: &Complex) -> Result<Option<ChordSetRecord>> {
    check_boundary_preconditions(cycle)?;
    let dfaces = ambient.faces_of_dim(cycle.d as isize);
    if cycle.faces.iter().any(|f| sorted_index(&dfaces, *f).is_none()) {
        return Err(Error::Precondition("cycle does not lie in the ambient complex"));
    }
    let cb = ClosureBoundary::new(&dfaces, cycle.vertex_set, cycle.d);
    finish_certificate(cycle, ambient, cb.preimage(&cycle.faces))
}

fn finish_certificate(cycle: &CycleRecord, ambient: &Complex, cells: Option<Vec<Face>>) -> Result<Option<ChordSetRecord>> {
    let Some(cells) = cells else {
        return Ok(None);
    };
    let rec = certificate_from_cells(&cycle.faces, &cells);
    if !verify_chord_set(&rec.chords, &cycle.faces, ambient, &rec.witnesses) {
        return Err(Error::Precondition("boundary certificate failed verification"));
    }
    Ok(Some(rec))
}

/// Direct search for a chord set: tries candidate chord sets by increasing
/// size and asks whether the cycle's face sum is a GF(2) combination of
/// strictly smaller cycles inside `Ω ∪ C`.
///
/// The first size that succeeds gives a valid chord set. Any combination at
/// that size uses every chord, since otherwise a smaller set would have
/// succeeded.
pub fn exhaustive_chord_set_search(cycle: &CycleRecord, ambient: &Complex, cap: u128) -> Result<Option<ChordSetRecord>> {
    if !cycles::is_cycle(&cycle.faces, cycle.d) {
        return Err(Error::Precondition("faces do not form a d-dimensional cycle"));
    }
    let d = cycle.d;
    let candidates: Vec<Face> = ambient
        .faces_of_dim_within(d as isize, cycle.vertex_set)
        .into_iter()
        .filter(|f| sorted_index(&cycle.faces, *f).is_none())
        .collect();
    if candidates.len() > MAX_CANDIDATE_CHORDS {
        return Err(Error::CapExceeded {
            what: "candidate chords",
            needed: candidates.len() as u128,
            limit: MAX_CANDIDATE_CHORDS as u128,
        });
    }
    let n = candidates.len();
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let limit = cycle.vertex_count();
    for mask in masks {
        let chords: Vec<Face> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| candidates[i]).collect();
        let mut universe: Vec<Face> = cycle.faces.iter().chain(&chords).copied().collect();
        universe.sort_unstable();
        let smaller: Vec<Vec<Face>> = cycles::cycles_among(&universe, cap)?
            .into_iter()
            .filter(|c| union(c).len() < limit)
            .collect();
        if smaller.len() < 2 {
            continue;
        }
        let col = |faces: &[Face]| {
            BitVec::from_indices(
                universe.len(),
                faces.iter().map(|f| sorted_index(&universe, *f).expect("inside universe")),
            )
        };
        let cols: Vec<BitVec> = smaller.iter().map(|c| col(c)).collect();
        let red = Gf2Reduction::new(universe.len(), &cols, true);
        if let Some(x) = red.solve(&col(&cycle.faces)) {
            let witnesses: Vec<Vec<Face>> = x.iter_ones().map(|j| smaller[j].clone()).collect();
            let rec = ChordSetRecord {
                chords,
                witnesses,
                source: ChordSource::Exhaustive,
            };
            if !verify_chord_set(&rec.chords, &cycle.faces, ambient, &rec.witnesses) {
                return Err(Error::Precondition("exhaustive certificate failed verification"));
            }
            return Ok(Some(rec));
        }
    }
    Ok(None)
}

/// Outcome of the d-chorded decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordedVerdict {
    pub d: usize,
    pub chorded: bool,
    /// Vertex sets on which the cycle space was compared with the closure
    /// boundaries.
    pub vertex_sets_checked: usize,
    /// A face-minimal non-complete cycle with no chord set.
    pub failure: Option<CycleRecord>,
}

/// Decides whether the pure d-complex `c` is d-chorded.
///
/// Every face-minimal cycle Ω on a vertex set `W` must have its face sum in
/// the image of `∂_{d+1}` of the closure induced on `W`. The cycles on `W`
/// are spanned by face-minimal ones, so this holds for all of them exactly
/// when, for every `W`, the GF(2) cycle space of the d-faces inside `W`
/// equals that boundary image. Sets are visited by increasing size, so the
/// first failing `W` carries a failing cycle whose vertex set is all of `W`;
/// it is extracted and returned.
pub fn is_d_chorded(c: &Complex, d: usize, cap: u128) -> Result<ChordedVerdict> {
    c.check_pure(d)?;
    let n = c.vertex_count();
    if n > 16 {
        return Err(Error::CapExceeded {
            what: "vertices in a subset sweep",
            needed: n as u128,
            limit: 16,
        });
    }
    let dfaces = c.faces_of_dim(d as isize);
    let support = union(&dfaces);
    let mut sets: Vec<u64> = (1..(1u64 << n)).filter(|b| b & !support.bits() == 0).collect();
    sets.sort_by_key(|b| (b.count_ones(), Face::from_bits(*b)));
    let mut checked = 0;
    for bits in sets {
        let w = Face::from_bits(bits);
        if w.len() <= d + 2 {
            continue;
        }
        let inside: Vec<Face> = dfaces.iter().copied().filter(|f| f.is_subset(w)).collect();
        let z = Columns::new(&inside).nullity_of(&BitVec::ones(inside.len()));
        if z == 0 {
            continue;
        }
        checked += 1;
        let cb = ClosureBoundary::new(&dfaces, w, d);
        if cb.reduction.rank() == z {
            continue;
        }
        for faces in cycles::circuits_among(&inside, cap)? {
            if union(&faces) != w {
                continue;
            }
            if cb.preimage(&faces).is_none() {
                let mut rec = CycleRecord::unchecked(d, faces);
                rec.face_minimal = Some(true);
                return Ok(ChordedVerdict {
                    d,
                    chorded: false,
                    vertex_sets_checked: checked,
                    failure: Some(rec),
                });
            }
        }
        return Err(Error::Precondition("no failing cycle on a failing vertex set"));
    }
    Ok(ChordedVerdict {
        d,
        chorded: true,
        vertex_sets_checked: checked,
        failure: None,
    })
}

/// Chord-set certificates for every face-minimal non-complete cycle of the
/// pure d-complex `c`, in cycle order. A cycle without a chord set comes
/// with `None`.
pub fn chord_certificates(c: &Complex, d: usize, cap: u128) -> Result<Vec<(CycleRecord, Option<ChordSetRecord>)>> {
    c.check_pure(d)?;
    let dfaces = c.faces_of_dim(d as isize);
    let mut by_set: BTreeMap<u64, ClosureBoundary> = BTreeMap::new();
    let mut out = Vec::new();
    for faces in cycles::circuits_among(&dfaces, cap)? {
        let mut rec = CycleRecord::unchecked(d, faces);
        rec.face_minimal = Some(true);
        if rec.d_complete {
            continue;
        }
        let w = rec.vertex_set;
        let cb = by_set
            .entry(w.bits())
            .or_insert_with(|| ClosureBoundary::new(&dfaces, w, d));
        let cert = finish_certificate(&rec, c, cb.preimage(&rec.faces))?;
        out.push((rec, cert));
    }
    Ok(out)
}

/// The d-chorded verdict straight from the definition: every face-minimal
/// non-complete cycle passes [`boundary_chord_test`].
pub fn is_d_chorded_by_cycles(c: &Complex, d: usize, cap: u128) -> Result<bool> {
    Ok(chord_certificates(c, d, cap)?.iter().all(|(_, cert)| cert.is_some()))
}

/// No d-dimensional cycles: the GF(2) kernel of `∂_d` is zero.
pub fn is_d_tree(c: &Complex, d: usize) -> Result<bool> {
    c.check_pure(d)?;
    let faces = c.faces_of_dim(d as isize);
    Ok(Columns::new(&faces).nullity_of(&BitVec::ones(faces.len())) == 0)
}

/// A vertex set carrying a vertex-minimal cycle that is not d-complete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCompleteVerdict {
    pub complete: bool,
    pub failure: Option<Face>,
}

/// (Orientably-) d-cycle-complete: every (orientably-) vertex-minimal cycle
/// is d-complete.
///
/// A vertex-minimal cycle lives on a vertex set `W` that carries a cycle
/// while no `W - v` does, and such a cycle is d-complete exactly when
/// `|W| = d + 2`. The same holds with "orientable cycle" throughout.
pub fn is_d_cycle_complete(c: &Complex, d: usize, orientable: bool, cap: u128) -> Result<CycleCompleteVerdict> {
    c.check_pure(d)?;
    let n = c.vertex_count();
    if n > 16 {
        return Err(Error::CapExceeded {
            what: "vertices in a subset sweep",
            needed: n as u128,
            limit: 16,
        });
    }
    let dfaces = c.faces_of_dim(d as isize);
    let mut oracle = CycleOracle::new(&dfaces, d, cap);
    let mut sets: Vec<u64> = (1..(1u64 << n)).collect();
    sets.sort_by_key(|b| (b.count_ones(), Face::from_bits(*b)));
    for bits in sets {
        let w = Face::from_bits(bits);
        if w.len() <= d + 2 {
            continue;
        }
        let minimal = if orientable {
            oracle.is_orientably_vertex_minimal(w)? && oracle.has_orientable_cycle(w)?
        } else {
            oracle.is_vertex_minimal(w) && oracle.has_cycle(w)
        };
        if minimal {
            return Ok(CycleCompleteVerdict {
                complete: false,
                failure: Some(w),
            });
        }
    }
    Ok(CycleCompleteVerdict {
        complete: true,
        failure: None,
    })
}

/// All four verdicts for one dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordalityReport {
    pub d: usize,
    pub d_tree: bool,
    pub d_chorded: ChordedVerdict,
    pub d_cycle_complete: CycleCompleteVerdict,
    pub orientably_d_cycle_complete: CycleCompleteVerdict,
}

impl ChordalityReport {
    /// tree ⇒ chorded ⇒ cycle-complete ⇒ orientably cycle-complete.
    pub fn nesting_holds(&self) -> bool {
        (!self.d_tree || self.d_chorded.chorded)
            && (!self.d_chorded.chorded || self.d_cycle_complete.complete)
            && (!self.d_cycle_complete.complete || self.orientably_d_cycle_complete.complete)
    }
}

pub fn analyze(c: &Complex, d: usize, cap: u128) -> Result<ChordalityReport> {
    Ok(ChordalityReport {
        d,
        d_tree: is_d_tree(c, d)?,
        d_chorded: is_d_chorded(c, d, cap)?,
        d_cycle_complete: is_d_cycle_complete(c, d, false, cap)?,
        orientably_d_cycle_complete: is_d_cycle_complete(c, d, true, cap)?,
    })
}

/// Every pure skeleton `c^[d]`, `1 <= d <= dim c`, is d-chorded. Returns the
/// first dimension that fails.
pub fn is_chorded(c: &Complex, cap: u128) -> Result<Option<usize>> {
    let dim = c.dim();
    for d in 1..=dim.max(0) as usize {
        if !is_d_chorded(&c.pure_skeleton(d), d, cap)?.chorded {
            return Ok(Some(d));
        }
    }
    Ok(None)
}
