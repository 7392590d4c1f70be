//! Seeded random complexes.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use chorded_core::{Complex, Face};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A pure `d`-complex on `min_vertices..=max_vertices` vertices with
/// `1..=max_facets` distinct facets chosen uniformly.
pub fn pure_complex<R: Rng>(rng: &mut R, d: usize, min_vertices: usize, max_vertices: usize, max_facets: usize) -> Complex {
    let n = rng.gen_range(min_vertices..=max_vertices);
    let mut slots: Vec<Face> = Face::full(n).subsets_of_size(d + 1).collect();
    slots.shuffle(rng);
    let k = rng.gen_range(1..=max_facets.min(slots.len()).max(1));
    slots.truncate(k);
    Complex::on_vertices(n, slots).expect("at most 64 vertices")
}

/// A `d`-dimensional tree grown by leaf attachment: start from one simplex
/// and repeatedly glue a new `d`-face along an existing `(d-1)`-face, the
/// remaining vertex being either new or an old vertex that creates no
/// repeated `(d-1)`-face.
pub fn tree<R: Rng>(rng: &mut R, d: usize, max_vertices: usize) -> Complex {
    assert!(max_vertices > d);
    let target = rng.gen_range(d + 1..=max_vertices);
    let mut n = d + 1;
    let mut facets = vec![Face::full(d + 1)];
    let steps = rng.gen_range(0..=2 * max_vertices);
    for _ in 0..steps {
        let ridges: Vec<Face> = facets
            .iter()
            .flat_map(|f| f.facets_of_boundary().map(|(_, r)| r))
            .collect();
        let ridge = ridges[rng.gen_range(0..ridges.len())];
        let fresh = n < target && rng.gen_bool(0.6);
        let apex = if fresh {
            n += 1;
            n - 1
        } else {
            let choices: Vec<usize> = (0..n)
                .filter(|v| !ridge.contains(*v))
                .filter(|v| {
                    let f = ridge.with(*v);
                    !facets.contains(&f)
                        && f.facets_of_boundary()
                            .all(|(_, r)| r == ridge || !facets.iter().any(|g| r.is_subset(*g)))
                })
                .collect();
            match choices.as_slice() {
                [] => continue,
                cs => cs[rng.gen_range(0..cs.len())],
            }
        };
        facets.push(ridge.with(apex));
    }
    Complex::on_vertices(n, facets).expect("at most 64 vertices")
}
