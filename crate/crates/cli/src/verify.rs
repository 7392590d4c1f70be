//! The corpus runner: every cross-module property, on the shipped facet
//! files and on seeded random complexes.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::json;

use chorded_core::chordality::{self, boundary_chord_test, exhaustive_chord_set_search, verify_chord_set};
use chorded_core::cycles::{self, CycleRecord};
use chorded_core::homology::{boundary_matrix, chain_boundary, reduced_betti, reduced_euler_characteristic};
use chorded_core::linalg::{self, ChainVector, Field, Gf2, IntMatrix, PrimeField, Rationals};
use chorded_core::resolutions::{degree_component, has_t_linear_resolution, is_componentwise_linear};
use chorded_core::{named, Complex, Error, Face, FieldSpec};

use crate::commands::Computed;
use crate::report::{sha256_hex, Settings};
use crate::{random, CliError, Common, FacetFile, EXIT_OK, EXIT_VIOLATION};

pub const DEFAULT_INSTANCES: usize = 200;
pub const DEFAULT_SEED: u64 = 0x00c4_0bd5;
/// Kernel-vector cap used when `--cap` is not given. Small enough that the
/// complete skeletons of larger corpus members are skipped rather than
/// enumerated.
pub const VERIFY_CAP: u128 = 1 << 12;
/// Largest vertex count for the properties that sweep every vertex subset.
pub const SWEEP_VERTICES: usize = 8;

pub enum Check {
    Pass,
    Skip,
    Fail(String),
}

impl From<Result<bool, Error>> for Check {
    fn from(r: Result<bool, Error>) -> Self {
        match r {
            Ok(true) => Check::Pass,
            Ok(false) => Check::Fail("property does not hold".into()),
            Err(e) => err_check(e),
        }
    }
}

fn err_check(e: Error) -> Check {
    match e {
        Error::CapExceeded { .. } => Check::Skip,
        e => Check::Fail(e.to_string()),
    }
}

fn fail_if(bad: bool, detail: impl FnOnce() -> String) -> Check {
    if bad {
        Check::Fail(detail())
    } else {
        Check::Pass
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub source: String,
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
    pub detail: String,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq, Default)]
pub struct PropertyResult {
    pub name: &'static str,
    pub instances: usize,
    pub skipped: usize,
    pub violations: usize,
    pub counterexample: Option<Counterexample>,
}

/// Tallies per property, in first-use order.
#[derive(Default)]
pub struct Tally {
    order: Vec<&'static str>,
    results: BTreeMap<&'static str, PropertyResult>,
}

impl Tally {
    pub fn record(&mut self, name: &'static str, source: &str, c: &Complex, check: Check) {
        let entry = self.results.entry(name).or_insert_with(|| {
            self.order.push(name);
            PropertyResult {
                name,
                ..PropertyResult::default()
            }
        });
        match check {
            Check::Pass => entry.instances += 1,
            Check::Skip => entry.skipped += 1,
            Check::Fail(detail) => {
                entry.instances += 1;
                entry.violations += 1;
                if entry.counterexample.is_none() {
                    entry.counterexample = Some(Counterexample {
                        source: source.to_owned(),
                        vertices: c.labels().to_vec(),
                        facets: c.facet_labels(),
                        detail,
                    });
                }
            }
        }
    }

    pub fn results(&self) -> Vec<PropertyResult> {
        self.order.iter().map(|n| self.results[n].clone()).collect()
    }

    pub fn violations(&self) -> usize {
        self.results.values().map(|r| r.violations).sum()
    }
}

/// Membership of an integer chain in the column span of `m` over `spec`.
pub fn in_span(m: &IntMatrix, terms: &[(Face, i64)], spec: FieldSpec) -> Result<bool, Error> {
    fn go<F: Field>(m: &IntMatrix, terms: &[(Face, i64)], f: &F) -> Result<bool, Error> {
        let v = ChainVector::from_terms(f, terms.iter().map(|(face, c)| (*face, f.from_i64(*c))));
        Ok(linalg::in_image(&m.to_field(f), &v, f)?.is_some())
    }
    match spec {
        FieldSpec::Gf2 => go(m, terms, &Gf2),
        FieldSpec::Gfp(p) => go(m, terms, &PrimeField::new(p)?),
        FieldSpec::Rational => go(m, terms, &Rationals),
    }
}

fn subsets(c: &Complex) -> impl Iterator<Item = Face> {
    let n = c.vertex_count();
    (0..1u64 << n).map(Face::from_bits)
}

fn top_dims(c: &Complex) -> std::ops::RangeInclusive<usize> {
    1..=c.dim().max(0) as usize
}

/// Properties of one complex that need no dimension.
fn structural(t: &mut Tally, src: &str, c: &Complex, cap: u128) {
    let f = c.facets();
    t.record(
        "absorption",
        src,
        c,
        fail_if(
            f.iter().enumerate().any(|(i, a)| f.iter().enumerate().any(|(j, b)| i != j && a.is_subset(*b))),
            || "a facet lies inside another".into(),
        ),
    );
    for d in 0..=c.dim().max(0) as usize {
        let s = c.pure_skeleton(d);
        t.record("skeleton_idempotence", src, c, fail_if(s.pure_skeleton(d) != s, || format!("d = {d}")));
    }
    t.record(
        "sr_round_trip",
        src,
        c,
        fail_if(c.stanley_reisner_ideal().stanley_reisner_complex() != *c, String::new),
    );
    for i in 1..=c.dim().max(1) {
        let lo = boundary_matrix(c, i, true);
        let hi = boundary_matrix(c, i + 1, true);
        let check = match lo.mul(&hi) {
            Ok(p) => fail_if(p.nnz() != 0, || format!("∂_{i} ∂_{} has {} nonzero entries", i + 1, p.nnz())),
            Err(e) => err_check(e),
        };
        t.record("boundary_squared_zero", src, c, check);
    }
    let mut alt = 0i64;
    let mut odd_ok = true;
    for i in 0..=c.dim().max(-1) {
        let q = reduced_betti(c, i, FieldSpec::Rational);
        odd_ok &= reduced_betti(c, i, FieldSpec::Gfp(3)) == q && reduced_betti(c, i, FieldSpec::Gfp(5)) == q;
        alt += if i % 2 == 0 { q as i64 } else { -(q as i64) };
    }
    t.record("odd_characteristic_independence", src, c, fail_if(!odd_ok, String::new));
    if c.dim() >= 0 {
        let chi = reduced_euler_characteristic(c);
        t.record(
            "euler_identity",
            src,
            c,
            fail_if(chi != alt, || format!("face count gives {chi}, homology gives {alt}")),
        );
    }
    for d in 1..=c.vertex_count() {
        let back = degree_component(&c.stanley_reisner_ideal(), d).stanley_reisner_complex();
        t.record(
            "skeleton_lemma",
            src,
            c,
            fail_if(back.pure_skeleton(d - 1) != c.pure_skeleton(d - 1), || format!("d = {d}")),
        );
    }
    if c.vertex_count() <= SWEEP_VERTICES && !c.is_void() {
        let ideal = c.stanley_reisner_ideal();
        let check = (|| -> Result<Check, Error> {
            if ideal.is_zero() {
                return Ok(Check::Skip);
            }
            for f in FieldSpec::PROBES {
                if !is_componentwise_linear(&ideal, f)?.linear {
                    return Ok(Check::Skip);
                }
            }
            Ok(match chordality::is_chorded(c, cap)? {
                None => Check::Pass,
                Some(d) => Check::Fail(format!("componentwise linear but not {d}-chorded")),
            })
        })();
        t.record("componentwise_linear_implies_chorded", src, c, check.unwrap_or_else(err_check));
    }
}

/// Properties of the complex `c` in dimension `d` that read its cycles.
fn cycle_properties(t: &mut Tally, src: &str, c: &Complex, d: usize, cap: u128) {
    let dfaces = c.faces_of_dim(d as isize);
    let found = match cycles::cycles_among(&dfaces, cap) {
        Ok(f) => f,
        Err(e) => {
            for name in [
                "cycle_records_valid",
                "cycle_homology_equivalence",
                "circuits_are_minimal_supports",
                "orientation_witnesses",
                "orientable_non_boundary_forces_homology",
            ] {
                t.record(name, src, c, err_check(e.clone()));
            }
            return;
        }
    };
    t.record(
        "cycle_records_valid",
        src,
        c,
        fail_if(found.iter().any(|f| CycleRecord::new(d, f.clone()).is_err()), String::new),
    );

    let up = boundary_matrix(c, d as isize + 1, false);
    let check = (|| -> Result<Check, Error> {
        let mut escapes = false;
        for f in &found {
            let terms: Vec<(Face, i64)> = f.iter().map(|x| (*x, 1)).collect();
            if !in_span(&up, &terms, FieldSpec::Gf2)? {
                escapes = true;
                break;
            }
        }
        let b = reduced_betti(c, d as isize, FieldSpec::Gf2);
        Ok(fail_if((b != 0) != escapes, || format!("H_{d} has rank {b}; non-boundary cycle found: {escapes}")))
    })();
    t.record("cycle_homology_equivalence", src, c, check.unwrap_or_else(err_check));

    let check = match cycles::circuits_among(&dfaces, cap) {
        Ok(circuits) => {
            let minimal: Vec<Vec<Face>> = found
                .iter()
                .filter(|s| !found.iter().any(|o| o.len() < s.len() && o.iter().all(|x| s.contains(x))))
                .cloned()
                .collect();
            fail_if(
                circuits != minimal || circuits.iter().any(|s| !cycles::is_cycle(s, d)),
                || format!("{} circuits, {} minimal cycles", circuits.len(), minimal.len()),
            )
        }
        Err(e) => err_check(e),
    };
    t.record("circuits_are_minimal_supports", src, c, check);

    for f in &found {
        let check = (|| -> Result<Check, Error> {
            let Some(signs) = cycles::orientation(f, d, cap)? else {
                return Ok(Check::Skip);
            };
            let terms: Vec<(Face, i64)> = f.iter().zip(&signs).map(|(x, e)| (*x, i64::from(*e))).collect();
            if !chain_boundary(&terms).is_empty() {
                return Ok(Check::Fail("signed boundary is not zero".into()));
            }
            for spec in FieldSpec::PROBES {
                if !in_span(&up, &terms, spec)? && reduced_betti(c, d as isize, spec) == 0 {
                    return Ok(Check::Fail(format!("orientable non-boundary cycle but H_{d} = 0 over {spec}")));
                }
            }
            Ok(Check::Pass)
        })();
        let check = check.unwrap_or_else(err_check);
        let (a, b) = match &check {
            Check::Fail(x) if x.starts_with("signed") => (Check::Fail(x.clone()), Check::Skip),
            Check::Fail(x) => (Check::Pass, Check::Fail(x.clone())),
            Check::Pass => (Check::Pass, Check::Pass),
            Check::Skip => (Check::Skip, Check::Skip),
        };
        t.record("orientation_witnesses", src, c, a);
        t.record("orientable_non_boundary_forces_homology", src, c, b);
    }
}

/// Properties of the pure d-complex `s` (a skeleton of a corpus member).
fn pure_properties(t: &mut Tally, src: &str, s: &Complex, d: usize, cap: u128) {
    let closed = match s.d_closure(d) {
        Ok(x) => x,
        Err(e) => {
            t.record("closure_fixes_d_faces", src, s, err_check(e));
            return;
        }
    };
    t.record(
        "closure_fixes_d_faces",
        src,
        s,
        fail_if(closed.faces_of_dim(d as isize) != s.faces_of_dim(d as isize), String::new),
    );
    let twice = s.d_complement(d).and_then(|x| x.d_complement(d));
    t.record(
        "complement_involution",
        src,
        s,
        match twice {
            Ok(x) => fail_if(x.facets() != s.facets(), String::new),
            Err(e) => err_check(e),
        },
    );
    let complement_ideal = s.d_complement(d).map(|x| x.facet_ideal());
    let closure_ideal = degree_component(&closed.stanley_reisner_ideal(), d + 1);
    t.record(
        "complement_is_closure_ideal",
        src,
        s,
        match complement_ideal {
            Ok(x) => fail_if(x.generators() != closure_ideal.generators(), String::new),
            Err(e) => err_check(e),
        },
    );

    let sweep = s.vertex_count() <= SWEEP_VERTICES;
    if sweep {
        let bad = subsets(s).find(|w| {
            let lhs = closed.induced_on(*w).complex;
            let rhs = s.induced_on(*w).complex.pure_skeleton(d).d_closure(d);
            rhs.map_or(true, |r| r != lhs)
        });
        t.record(
            "closure_induced_commutation",
            src,
            s,
            fail_if(bad.is_some(), || format!("W = {:?}", bad.map(|w| s.face_labels(w)))),
        );
    }

    chord_properties(t, src, s, d, cap);

    let report = match chordality::analyze(s, d, cap) {
        Ok(r) => r,
        Err(e) => {
            t.record("nesting_chain", src, s, err_check(e));
            return;
        }
    };
    t.record(
        "nesting_chain",
        src,
        s,
        fail_if(!report.nesting_holds(), || {
            format!(
                "tree {} chorded {} complete {} orientably complete {}",
                report.d_tree,
                report.d_chorded.chorded,
                report.d_cycle_complete.complete,
                report.orientably_d_cycle_complete.complete
            )
        }),
    );
    let by_cycles = chordality::is_d_chorded_by_cycles(s, d, cap);
    t.record(
        "sweep_matches_cycle_definition",
        src,
        s,
        match by_cycles {
            Ok(b) => fail_if(b != report.d_chorded.chorded, || format!("sweep {} cycles {b}", report.d_chorded.chorded)),
            Err(e) => err_check(e),
        },
    );

    if report.d_chorded.chorded && sweep {
        let bad = subsets(s).find(|w| {
            let sub = s.induced_on(*w).complex.pure_skeleton(d);
            !chordality::is_d_chorded(&sub, d, cap).map_or(true, |v| v.chorded)
        });
        t.record(
            "heredity",
            src,
            s,
            fail_if(bad.is_some(), || format!("W = {:?}", bad.map(|w| s.face_labels(w)))),
        );
        let bad = subsets(s).find(|w| {
            let ind = closed.induced_on(*w).complex;
            (0..=d).filter(|i| *i + 1 != d).any(|i| reduced_betti(&ind, i as isize, FieldSpec::Gf2) != 0)
        });
        t.record(
            "vanishing_homology",
            src,
            s,
            fail_if(bad.is_some(), || format!("W = {:?}", bad.map(|w| s.face_labels(w)))),
        );
    }

    if sweep {
        let ideal = closed.stanley_reisner_ideal();
        let check = (|| -> Result<Check, Error> {
            let gf2 = has_t_linear_resolution(&ideal, d + 1, FieldSpec::Gf2)?.linear;
            if gf2 && !report.d_chorded.chorded {
                return Ok(Check::Fail("GF(2)-linear but not chorded".into()));
            }
            let mut any = gf2;
            for f in [FieldSpec::Gfp(3), FieldSpec::Rational] {
                any |= has_t_linear_resolution(&ideal, d + 1, f)?.linear;
            }
            if any && !report.orientably_d_cycle_complete.complete {
                return Ok(Check::Fail("linear over a probe but not orientably cycle-complete".into()));
            }
            Ok(Check::Pass)
        })();
        t.record("linear_resolution_forward", src, s, check.unwrap_or_else(err_check));
        if report.d_tree {
            let check = has_t_linear_resolution(&ideal, d + 1, FieldSpec::Gf2).map(|v| v.linear);
            t.record("tree_theorem", src, s, check.into());
        }
    }
}

/// Pure 2-complexes this small have no room for a face-minimal cycle that
/// splits off a smaller non-boundary cycle, so the two chord oracles agree
/// cycle by cycle.
fn per_cycle_domain(s: &Complex, d: usize) -> bool {
    d == 2 && s.vertex_count() <= 6 && s.facets().len() <= 8
}

fn chord_properties(t: &mut Tally, src: &str, s: &Complex, d: usize, cap: u128) {
    const NAMES: [&str; 3] = [
        "boundary_certificate_implies_chord_set",
        "chorded_verdict_oracle_equivalence",
        "chord_oracle_equivalence_small",
    ];
    let circuits = match cycles::circuits_among(&s.faces_of_dim(d as isize), cap) {
        Ok(x) => x,
        Err(e) => {
            for name in NAMES {
                t.record(name, src, s, err_check(e.clone()));
            }
            return;
        }
    };
    let mut every_cycle_has_chords = Some(true);
    for faces in circuits {
        let rec = match CycleRecord::new(d, faces) {
            Ok(r) if !r.d_complete => r,
            Ok(_) => continue,
            Err(e) => {
                t.record(NAMES[0], src, s, err_check(e));
                continue;
            }
        };
        let name = |r: &CycleRecord| r.faces.iter().map(|f| s.face_labels(*f).concat()).collect::<Vec<_>>();
        let fast = boundary_chord_test(&rec, s);
        let slow = exhaustive_chord_set_search(&rec, s, cap);
        let (fast_ok, slow_ok) = match (&fast, &slow) {
            (Ok(a), Ok(b)) => (a.is_some(), b.is_some()),
            (Err(e), _) | (_, Err(e)) => {
                t.record(NAMES[0], src, s, err_check(e.clone()));
                if per_cycle_domain(s, d) {
                    t.record(NAMES[2], src, s, err_check(e.clone()));
                }
                every_cycle_has_chords = None;
                continue;
            }
        };
        t.record(
            NAMES[0],
            src,
            s,
            fail_if(fast_ok && !slow_ok, || format!("cycle {:?}: boundary but no chord set", name(&rec))),
        );
        if per_cycle_domain(s, d) {
            t.record(
                NAMES[2],
                src,
                s,
                fail_if(fast_ok != slow_ok, || {
                    format!("cycle {:?}: boundary test {fast_ok}, exhaustive search {slow_ok}", name(&rec))
                }),
            );
        }
        if let Some(all) = every_cycle_has_chords.as_mut() {
            *all &= slow_ok;
        }
        for cert in [fast, slow].into_iter().flatten().flatten() {
            t.record(
                "chord_records_verify",
                src,
                s,
                fail_if(!verify_chord_set(&cert.chords, &rec.faces, s, &cert.witnesses), String::new),
            );
        }
    }
    let check = match (every_cycle_has_chords, chordality::is_d_chorded(s, d, cap)) {
        (Some(all), Ok(v)) => fail_if(all != v.chorded, || format!("sweep {} exhaustive {all}", v.chorded)),
        (None, _) => Check::Skip,
        (_, Err(e)) => err_check(e),
    };
    t.record(NAMES[1], src, s, check);
}

/// Properties that need the complex itself to be a cycle. Anything else is
/// skipped.
fn cycle_input_properties(t: &mut Tally, src: &str, c: &Complex, cap: u128) {
    let d = c.dim();
    if d < 1 || !cycles::is_d_dimensional_cycle(c, d as usize) {
        t.record("cycle_input_decomposition", src, c, Check::Skip);
        return;
    }
    let rec = match CycleRecord::new(d as usize, c.facets().to_vec()) {
        Ok(r) => r,
        Err(e) => return t.record("cycle_input_decomposition", src, c, err_check(e)),
    };
    let check = (|| -> Result<Check, Error> {
        let blocks = cycles::decompose_cycle(&rec)?;
        let mut all: Vec<Face> = blocks.concat();
        all.sort();
        if all != rec.faces || blocks.iter().any(|b| !cycles::is_face_minimal(b) || !cycles::is_cycle(b, rec.d)) {
            return Ok(Check::Fail("blocks do not partition into face-minimal cycles".into()));
        }
        if cycles::is_face_minimal(&rec.faces) && blocks.len() != 1 {
            return Ok(Check::Fail("face-minimal cycle split".into()));
        }
        if let Some(signs) = cycles::is_orientable(&rec, cap)? {
            let terms: Vec<(Face, i64)> = signs.iter().map(|(f, e)| (*f, i64::from(*e))).collect();
            if !chain_boundary(&terms).is_empty() {
                return Ok(Check::Fail("orientation does not cancel".into()));
            }
        }
        Ok(Check::Pass)
    })();
    t.record("cycle_input_decomposition", src, c, check.unwrap_or_else(err_check));
}

/// Runs the per-complex properties.
pub fn check_complex(t: &mut Tally, src: &str, c: &Complex, cap: u128) {
    structural(t, src, c, cap);
    cycle_input_properties(t, src, c, cap);
    for d in top_dims(c) {
        cycle_properties(t, src, c, d, cap);
        let s = c.pure_skeleton(d);
        if !s.is_void() {
            pure_properties(t, src, &s, d, cap);
        }
    }
}

/// Properties that concern the corpus as a whole.
pub fn check_witnesses(t: &mut Tally, corpus: &[(String, Complex)], cap: u128) {
    let lambda = named::lambda(4, 2);
    let check = chordality::analyze(&lambda, 2, cap).map(|r| r.d_chorded.chorded && !r.d_tree);
    t.record("strictness_tree_vs_chorded", "lambda4_2", &lambda, check.into());
    let rp2 = named::rp2();
    let check = chordality::analyze(&rp2, 2, cap)
        .map(|r| r.orientably_d_cycle_complete.complete && !r.d_cycle_complete.complete);
    t.record("strictness_complete_vs_orientably_complete", "rp2", &rp2, check.into());
    let split = corpus.iter().find(|(_, c)| {
        (0..=c.dim().max(-1)).any(|i| reduced_betti(c, i, FieldSpec::Gf2) != reduced_betti(c, i, FieldSpec::Rational))
    });
    let empty = Complex::on_vertices(0, []).expect("no vertices");
    match split {
        Some((name, c)) => t.record("characteristic_two_differs", name, c, Check::Pass),
        None => t.record(
            "characteristic_two_differs",
            "corpus",
            &empty,
            Check::Fail("no corpus member has different homology over GF(2) and Q".into()),
        ),
    }
}

#[derive(Serialize)]
struct FileEntry {
    name: String,
    sha256: String,
    vertices: usize,
    facets: usize,
}

/// Reads every `*.facets` file in `dir`, sorted by name.
pub fn load_corpus(dir: &Path) -> Result<Vec<(String, Complex, String)>, CliError> {
    let entries = std::fs::read_dir(dir).map_err(|e| CliError::Io(dir.to_path_buf(), e))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "facets"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(CliError::Input(format!("{}: no .facets files", dir.display())));
    }
    paths
        .iter()
        .map(|p| {
            let (ff, bytes) = FacetFile::read(p)?;
            let name = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            Ok((name, ff.complex, sha256_hex(&bytes)))
        })
        .collect()
}

pub struct CorpusRun {
    pub tally: Tally,
    pub random_complexes: usize,
    pub random_trees: usize,
}

pub fn verify(corpus: &[(String, Complex)], seed: u64, instances: usize, cap: u128) -> CorpusRun {
    let mut t = Tally::default();
    for (name, c) in corpus {
        check_complex(&mut t, name, c, cap);
    }
    check_witnesses(&mut t, corpus, cap);
    let mut rng = random::rng(seed);
    for i in 0..instances {
        let c = random::pure_complex(&mut rng, 2, 4, 7, 12);
        check_complex(&mut t, &format!("random#{i}"), &c, cap);
    }
    let trees = instances / 4;
    for i in 0..trees {
        let c = random::tree(&mut rng, 2, 8);
        let check = chordality::is_d_tree(&c, 2);
        t.record("generated_trees_are_trees", &format!("tree#{i}"), &c, check.into());
        check_complex(&mut t, &format!("tree#{i}"), &c, cap);
    }
    CorpusRun {
        tally: t,
        random_complexes: instances,
        random_trees: trees,
    }
}

pub(crate) fn run_command(dir: &Path, instances: usize, common: &Common, settings: &mut Settings) -> Result<Computed, CliError> {
    let cap = common.cap.unwrap_or(VERIFY_CAP);
    let seed = common.seed.unwrap_or(DEFAULT_SEED);
    settings.cap = cap.to_string();
    settings.seed = Some(seed);
    settings.fields = FieldSpec::PROBES.iter().map(|f| f.to_string()).collect();
    let loaded = load_corpus(dir)?;
    let files: Vec<FileEntry> = loaded
        .iter()
        .map(|(name, c, digest)| FileEntry {
            name: name.clone(),
            sha256: digest.clone(),
            vertices: c.vertex_count(),
            facets: c.facets().len(),
        })
        .collect();
    let corpus: Vec<(String, Complex)> = loaded.into_iter().map(|(n, c, _)| (n, c)).collect();
    let run = verify(&corpus, seed, instances, cap);
    let results = run.tally.results();
    let violations = run.tally.violations();
    let mut text = String::new();
    for r in &results {
        text.push_str(&format!(
            "{} {:<42} {:>6} checked {:>5} skipped\n",
            if r.violations == 0 { "ok  " } else { "FAIL" },
            r.name,
            r.instances,
            r.skipped
        ));
        if let Some(ce) = &r.counterexample {
            text.push_str(&format!("     {}: {} ({})\n", ce.source, ce.detail, ce.facets.iter().map(|f| f.join(" ")).collect::<Vec<_>>().join(", ")));
        }
    }
    text.push_str(&format!(
        "{} properties, {violations} violation(s)\n",
        results.len()
    ));
    Ok(Computed {
        result: json!({
            "corpus_dir": dir.display().to_string(),
            "files": files,
            "seed": seed,
            "random_complexes": run.random_complexes,
            "random_trees": run.random_trees,
            "passed": violations == 0,
            "violations": violations,
            "properties": results,
        }),
        summary: text,
        exit_code: if violations == 0 { EXIT_OK } else { EXIT_VIOLATION },
    })
}
