//! The library against brute-force oracles, exhaustively on small vertex
//! sets.

mod common;

use std::collections::BTreeSet;

use chorded_core::chordality::{self, boundary_chord_test, exhaustive_chord_set_search, verify_chord_set};
use chorded_core::cycles::{self, CycleOracle, CycleRecord};
use chorded_core::homology::{boundary_matrix, reduced_betti};
use chorded_core::linalg::{self, gf2, ChainVector, Gf2, IntMatrix, Rationals};
use chorded_core::resolutions::has_t_linear_resolution;
use chorded_core::{named, Complex, Face, FieldSpec, DEFAULT_CAP};
use num_rational::BigRational;

use common::*;

/// Every pure complex on `n` vertices whose facets are `k`-subsets.
fn all_pure(n: usize, k: usize) -> Vec<Complex> {
    let slots: Vec<Face> = Face::full(n).subsets_of_size(k).collect();
    (0u64..(1 << slots.len()))
        .map(|m| {
            let facets = (0..slots.len()).filter(|i| m >> i & 1 == 1).map(|i| slots[i]);
            Complex::on_vertices(n, facets).unwrap()
        })
        .collect()
}

fn dense(m: &IntMatrix) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0; m.cols()]; m.rows()];
    for (j, col) in m.columns().iter().enumerate() {
        for (i, v) in col {
            out[*i][j] = *v;
        }
    }
    out
}

fn field_char(f: FieldSpec) -> i64 {
    f.characteristic() as i64
}

#[test]
fn faces_closure_and_ideal_match_enumeration() {
    for (n, k) in [(5, 3), (5, 2), (4, 3)] {
        for c in all_pure(n, k) {
            let d = k - 1;
            for i in -1..=(k as isize) {
                let got: Vec<u64> = c.faces_of_dim(i).iter().map(|f| f.bits()).collect();
                assert_eq!(got, faces_of_size(&c, (i + 1) as usize), "{c}");
            }
            let closed = c.d_closure(d).unwrap();
            assert_eq!(facet_bits(&closed), maximal(&closure_faces(&c, d)), "{c}");
            let ideal: BTreeSet<u64> = c.stanley_reisner_ideal().generators().iter().map(|g| g.bits()).collect();
            assert_eq!(ideal, sr_generators(&c), "{c}");
            let comp = c.d_complement(d).unwrap();
            let missing: BTreeSet<u64> = Face::full(n)
                .subsets_of_size(k)
                .map(|f| f.bits())
                .filter(|b| !all_faces(&c).contains(b))
                .collect();
            assert_eq!(facet_bits(&comp), missing);
        }
    }
}

#[test]
fn rp2_induced_on_five_vertices_drops_exactly_the_star() {
    let rp2 = named::rp2();
    for v in 0..6 {
        let w: Vec<usize> = (0..6).filter(|u| *u != v).collect();
        let sub = rp2.induced_subcomplex(&w).unwrap();
        let kept: Vec<Face> = rp2.facets().iter().copied().filter(|f| !f.contains(v)).collect();
        let relabelled: Vec<u64> = kept.iter().map(|f| f.compress(Face::from_vertices(w.clone())).bits()).collect();
        assert_eq!(facet_bits(&sub.complex), relabelled.into_iter().collect());
        assert_eq!(sub.parent_ids, w);
    }
}

#[test]
fn boundary_matrices_and_ranks_match_dense_oracle() {
    for c in all_pure(5, 3).into_iter().step_by(7) {
        for k in 1..=3usize {
            let m = boundary_matrix(&c, k as isize, false);
            assert_eq!(dense(&m), dense_boundary(&c, k + 1).into_iter().collect::<Vec<_>>());
            for f in [FieldSpec::Gf2, FieldSpec::Gfp(3), FieldSpec::Gfp(5), FieldSpec::Rational] {
                assert_eq!(linalg::rank(&m, f), rank(&dense(&m), field_char(f)));
            }
        }
    }
}

#[test]
fn reduced_betti_matches_dense_oracle() {
    let mut corpus = all_pure(5, 3).into_iter().step_by(3).collect::<Vec<_>>();
    corpus.extend(named::all().into_iter().map(|(_, c)| c).filter(|c| c.vertex_count() <= 7));
    for c in corpus {
        for f in [FieldSpec::Gf2, FieldSpec::Gfp(3), FieldSpec::Rational] {
            let want = betti(&c, field_char(f));
            for (i, b) in want.iter().enumerate() {
                assert_eq!(reduced_betti(&c, i as isize, f), *b, "{c} i={i} {f}");
            }
        }
    }
}

#[test]
fn linear_algebra_examples() {
    let tetra = boundary_matrix(&named::lambda(4, 2), 2, false);
    assert_eq!((tetra.rows(), tetra.cols()), (6, 4));
    assert_eq!(linalg::rank(&tetra, FieldSpec::Gf2), 3);
    let zero = IntMatrix::from_rows(&[&[0, 0], &[0, 0]]).unwrap();
    assert_eq!(linalg::rank(&zero, FieldSpec::Rational), 0);
    let rows: Vec<Vec<i64>> = (0..5).map(|i| (0..5).map(|j| i64::from(i == j)).collect()).collect();
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    assert_eq!(linalg::rank(&IntMatrix::from_rows(&refs).unwrap(), FieldSpec::Gfp(7)), 5);

    let k = gf2::enumerate_kernel_vectors(&tetra, 1024).unwrap();
    assert_eq!(k.len(), 1);
    assert_eq!(k[0].support().collect::<Vec<_>>(), named::lambda(4, 2).facets());

    let dt = named::double_tetrahedron();
    let m = boundary_matrix(&dt, 2, false);
    let mut supports: Vec<Vec<Face>> = gf2::enumerate_kernel_vectors(&m, DEFAULT_CAP)
        .unwrap()
        .iter()
        .map(|v| v.support().collect())
        .collect();
    supports.sort();
    let a = |s: &str| -> Face { Face::from_vertices(s.bytes().map(|b| (b - b'a') as usize)) };
    let left: Vec<Face> = ["abc", "abd", "acd", "bcd"].map(a).to_vec();
    let right: Vec<Face> = ["cde", "cdf", "cef", "def"].map(a).to_vec();
    let mut both = [left.clone(), right.clone()].concat();
    both.sort();
    let mut want = vec![left, right, both];
    want.sort();
    assert_eq!(supports, want);

    let injective = IntMatrix::from_rows(&[&[1, 0], &[1, 1], &[0, 1]]).unwrap();
    assert!(gf2::enumerate_kernel_vectors(&injective, 10).unwrap().is_empty());
}

#[test]
fn hexagon_kernel_over_the_rationals() {
    let hex = named::cycle_graph(6);
    let m = boundary_matrix(&hex, 1, false).to_field(&Rationals);
    let basis = linalg::kernel_basis(&m, &Rationals);
    assert_eq!(basis.len(), 1);
    let v = &basis[0];
    let x: Vec<BigRational> = v.to_dense(m.col_labels(), &Rationals).unwrap();
    assert!(m.mul_dense(&x, &Rationals).unwrap().iter().all(|e| e == &BigRational::from_integer(0.into())));
    // Edges in order 01 05 12 23 34 45: the closing edge 05 runs against
    // the others.
    let unit = x[0].clone();
    let ratios: Vec<BigRational> = x.iter().map(|e| e / &unit).collect();
    let want: Vec<BigRational> = [1, -1, 1, 1, 1, 1].iter().map(|s| BigRational::from_integer((*s).into())).collect();
    assert_eq!(ratios, want);
}

#[test]
fn rp2_face_sum_is_not_a_boundary_of_its_closure() {
    let closed = named::rp2().d_closure(2).unwrap();
    let m = boundary_matrix(&closed, 3, false);
    assert!(gf2::in_image(&m, named::rp2().facets()).unwrap().is_none());
    let simplex = Complex::simplex(4);
    let m = boundary_matrix(&simplex, 3, false);
    assert_eq!(gf2::in_image(&m, named::lambda(4, 2).facets()).unwrap(), Some(vec![Face::full(4)]));
    let g = m.to_field(&Gf2);
    assert_eq!(linalg::in_image(&g, &ChainVector::new(), &Gf2).unwrap(), Some(ChainVector::new()));
}

#[test]
fn cycles_match_brute_force() {
    for c in all_pure(5, 3).into_iter().chain(all_pure(5, 2)) {
        let d = c.dim().max(0) as usize;
        if c.is_void() {
            continue;
        }
        let dfaces_bits = faces_of_size(&c, d + 1);
        let dfaces = to_faces(&dfaces_bits);
        let brute = all_cycles(&dfaces_bits, d);
        let mut want: Vec<Vec<Face>> = brute.iter().map(|s| to_faces(s)).collect();
        want.sort();
        assert_eq!(cycles::cycles_among(&dfaces, DEFAULT_CAP).unwrap(), want, "{c}");

        let mut minimal: Vec<Vec<Face>> = brute
            .iter()
            .filter(|s| !brute.iter().any(|t| t.len() < s.len() && is_subset_of(t, s)))
            .map(|s| to_faces(s))
            .collect();
        minimal.sort();
        assert_eq!(cycles::circuits_among(&dfaces, DEFAULT_CAP).unwrap(), minimal, "{c}");

        let mut oracle = CycleOracle::new(&dfaces, d, DEFAULT_CAP);
        for s in &brute {
            let vs = union(s);
            let vm = !brute.iter().any(|t| union(t) & !vs == 0 && union(t) != vs);
            let rec = cycles::classify_minimality(&CycleRecord::new(d, to_faces(s)).unwrap(), &c, DEFAULT_CAP).unwrap();
            assert_eq!(rec.vertex_minimal, Some(vm), "{c}");
            assert_eq!(oracle.is_vertex_minimal(Face::from_bits(vs)), vm);
            let or = orientable(s);
            assert_eq!(rec.orientable, Some(or), "{c}");
            if let Some(signs) = &rec.orientation {
                let terms: Vec<(Face, i64)> = rec.faces.iter().zip(signs).map(|(f, e)| (*f, i64::from(*e))).collect();
                assert!(chorded_core::homology::chain_boundary(&terms).is_empty());
            }
        }
    }
}

fn brute_cycle_complete(c: &Complex, d: usize, orient: bool) -> bool {
    let brute: Vec<Vec<u64>> = all_cycles(&faces_of_size(c, d + 1), d)
        .into_iter()
        .filter(|s| !orient || orientable(s))
        .collect();
    brute.iter().all(|s| {
        let vs = union(s);
        let vertex_minimal = !brute.iter().any(|t| union(t) & !vs == 0 && union(t) != vs);
        !vertex_minimal || popcount(vs) == d + 2
    })
}

#[test]
fn cycle_completeness_matches_brute_force() {
    for c in all_pure(5, 3).into_iter().chain(all_pure(5, 2)).filter(|c| !c.is_void()) {
        let d = c.dim() as usize;
        for orient in [false, true] {
            let got = chordality::is_d_cycle_complete(&c, d, orient, DEFAULT_CAP).unwrap();
            assert_eq!(got.complete, brute_cycle_complete(&c, d, orient), "{c} orientable={orient}");
        }
        let tree = all_cycles(&faces_of_size(&c, d + 1), d).is_empty();
        assert_eq!(chordality::is_d_tree(&c, d).unwrap(), tree);
    }
}

/// d-chorded straight from the definition, with the exhaustive searcher.
fn chorded_by_search(c: &Complex, d: usize) -> bool {
    let bits = faces_of_size(c, d + 1);
    let brute = all_cycles(&bits, d);
    brute
        .iter()
        .filter(|s| !brute.iter().any(|t| t.len() < s.len() && is_subset_of(t, s)))
        .map(|s| CycleRecord::new(d, to_faces(s)).unwrap())
        .filter(|r| !r.d_complete)
        .all(|r| exhaustive_chord_set_search(&r, c, DEFAULT_CAP).unwrap().is_some())
}

#[test]
fn chordedness_matches_exhaustive_search() {
    let mut corpus: Vec<Complex> = all_pure(5, 3).into_iter().chain(all_pure(5, 2)).filter(|c| !c.is_void()).collect();
    corpus.extend([
        named::octahedron(),
        named::octahedron_with_chords(),
        named::bipyramid(),
        named::bipyramid_with_chord(),
        named::rp2(),
        named::cycle_graph(6),
    ]);
    for c in corpus {
        let d = c.dim() as usize;
        let fast = chordality::is_d_chorded(&c, d, DEFAULT_CAP).unwrap();
        assert_eq!(fast.chorded, chorded_by_search(&c, d), "{c}");
        assert_eq!(chordality::is_d_chorded_by_cycles(&c, d, DEFAULT_CAP).unwrap(), fast.chorded, "{c}");
        if let Some(rec) = &fast.failure {
            assert!(is_cycle(&rec.faces.iter().map(|f| f.bits()).collect::<Vec<_>>(), d));
            assert!(boundary_chord_test(rec, &c).unwrap().is_none());
        }
        for (rec, cert) in chordality::chord_certificates(&c, d, DEFAULT_CAP).unwrap() {
            if let Some(cert) = cert {
                assert!(verify_chord_set(&cert.chords, &rec.faces, &c, &cert.witnesses), "{c}");
            }
        }
    }
}

#[test]
fn froberg_sweep_matches_dense_homology() {
    for c in all_pure(5, 3).into_iter().step_by(5) {
        let ideal = c.d_closure(2).unwrap().stanley_reisner_ideal();
        let gamma = ideal.stanley_reisner_complex();
        for f in [FieldSpec::Gf2, FieldSpec::Rational] {
            let got = has_t_linear_resolution(&ideal, 3, f).unwrap();
            let want = (1u64..32).all(|w| {
                betti(&induced(&gamma, w), field_char(f))
                    .iter()
                    .enumerate()
                    .all(|(i, b)| *b == 0 || i == 1)
            });
            assert_eq!(got.linear, want, "{c} {f}");
        }
    }
}
