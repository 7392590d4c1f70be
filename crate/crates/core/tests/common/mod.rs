#![allow(clippy::needless_range_loop)]
//! Brute-force reference implementations. Nothing here calls into the
//! library's linear algebra or face enumeration.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};

use chorded_core::{Complex, Face};

pub fn subsets(n: usize) -> impl Iterator<Item = u64> {
    0..(1u64 << n)
}

pub fn popcount(b: u64) -> usize {
    b.count_ones() as usize
}

/// Every face, by testing each subset against each facet.
pub fn all_faces(c: &Complex) -> BTreeSet<u64> {
    let n = c.vertex_count();
    subsets(n)
        .filter(|s| c.facets().iter().any(|f| s & !f.bits() == 0))
        .collect()
}

pub fn faces_of_size(c: &Complex, k: usize) -> Vec<u64> {
    let mut v: Vec<u64> = all_faces(c).into_iter().filter(|s| popcount(*s) == k).collect();
    v.sort_by_key(|b| Face::from_bits(*b));
    v
}

pub fn maximal(sets: &BTreeSet<u64>) -> BTreeSet<u64> {
    sets.iter()
        .copied()
        .filter(|s| !sets.iter().any(|t| t != s && s & !t == 0))
        .collect()
}

pub fn facet_bits(c: &Complex) -> BTreeSet<u64> {
    c.facets().iter().map(|f| f.bits()).collect()
}

/// Sets of size at most `d`, plus every set whose `(d+1)`-subsets are all
/// faces.
pub fn closure_faces(c: &Complex, d: usize) -> BTreeSet<u64> {
    let n = c.vertex_count();
    let dfaces: BTreeSet<u64> = faces_of_size(c, d + 1).into_iter().collect();
    subsets(n)
        .filter(|s| {
            popcount(*s) <= d
                || subsets(n)
                    .filter(|t| t & !s == 0 && popcount(*t) == d + 1)
                    .all(|t| dfaces.contains(&t))
        })
        .collect()
}

/// Minimal non-faces.
pub fn sr_generators(c: &Complex) -> BTreeSet<u64> {
    let faces = all_faces(c);
    let n = c.vertex_count();
    let non: BTreeSet<u64> = subsets(n).filter(|s| !faces.contains(s)).collect();
    non.iter()
        .copied()
        .filter(|s| !non.iter().any(|t| t != s && t & !s == 0))
        .collect()
}

/// `(-1)^j` for the `j`-th sorted vertex of `col` when `row = col - v_j`.
pub fn boundary_sign(row: u64, col: u64) -> Option<i64> {
    let removed = col & !row;
    if row & !col != 0 || removed.count_ones() != 1 {
        return None;
    }
    let j = (col & (removed - 1)).count_ones();
    Some(if j.is_multiple_of(2) { 1 } else { -1 })
}

/// Dense boundary from size-`k` faces to size-`k-1` faces of `c`.
pub fn dense_boundary(c: &Complex, k: usize) -> Vec<Vec<i64>> {
    let rows = faces_of_size(c, k - 1);
    let cols = faces_of_size(c, k);
    rows.iter()
        .map(|r| cols.iter().map(|col| boundary_sign(*r, *col).unwrap_or(0)).collect())
        .collect()
}

pub fn rank_q(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer((*x).into())).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|r| !a[*r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = BigRational::one() / a[rank][c].clone();
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let f = a[r][c].clone() * inv.clone();
                for k in c..cols {
                    let t = a[rank][k].clone() * f.clone();
                    a[r][k] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank_mod(m: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let inv = |x: i64| (1..p).find(|y| x * y % p == 1).unwrap();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|r| a[*r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let s = inv(a[rank][c]);
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c] * s % p;
                for k in c..cols {
                    a[r][k] = (a[r][k] - f * a[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over GF(p), or over the rationals when `p == 0`.
pub fn rank(m: &[Vec<i64>], p: i64) -> usize {
    if p == 0 {
        rank_q(m)
    } else {
        rank_mod(m, p)
    }
}

/// Reduced Betti numbers for `i = 0..=dim`, straight from dense ranks.
pub fn betti(c: &Complex, p: i64) -> Vec<usize> {
    let dim = c.dim();
    if dim < 0 {
        return Vec::new();
    }
    let dim = dim as usize;
    let r = |k: usize| -> usize {
        if k == 0 || faces_of_size(c, k).is_empty() {
            return 0;
        }
        rank(&dense_boundary(c, k), p)
    };
    (0..=dim)
        .map(|i| faces_of_size(c, i + 1).len() - r(i + 1) - r(i + 2))
        .collect()
}

/// Induced subcomplex on the vertex set `w`, keeping ids.
pub fn induced(c: &Complex, w: u64) -> Complex {
    let faces: BTreeSet<u64> = all_faces(c).into_iter().filter(|s| s & !w == 0).collect();
    Complex::new(c.labels().to_vec(), maximal(&faces).into_iter().map(Face::from_bits)).unwrap()
}

fn even_incidence(set: &[u64], d: usize) -> bool {
    let mut ridges: std::collections::BTreeMap<u64, usize> = Default::default();
    for f in set {
        for v in 0..64 {
            if f >> v & 1 == 1 {
                *ridges.entry(f & !(1 << v)).or_default() += 1;
            }
        }
    }
    let _ = d;
    ridges.values().all(|k| k % 2 == 0)
}

fn path_connected(set: &[u64]) -> bool {
    if set.is_empty() {
        return false;
    }
    let mut seen = vec![false; set.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..set.len() {
            if !seen[j] && popcount(set[i] & set[j]) + 1 == popcount(set[i]) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub fn is_cycle(set: &[u64], d: usize) -> bool {
    !set.is_empty() && set.iter().all(|f| popcount(*f) == d + 1) && even_incidence(set, d) && path_connected(set)
}

/// Every cycle made of faces from `faces`, by trying every subset.
pub fn all_cycles(faces: &[u64], d: usize) -> Vec<Vec<u64>> {
    assert!(faces.len() <= 16, "brute force is exponential");
    let mut out = Vec::new();
    for mask in 1u64..(1 << faces.len()) {
        let set: Vec<u64> = (0..faces.len()).filter(|i| mask >> i & 1 == 1).map(|i| faces[i]).collect();
        if is_cycle(&set, d) {
            out.push(set);
        }
    }
    out
}

pub fn is_subset_of(a: &[u64], b: &[u64]) -> bool {
    a.iter().all(|x| b.contains(x))
}

pub fn union(set: &[u64]) -> u64 {
    set.iter().fold(0, |a, f| a | f)
}

/// Tries every sign vector.
pub fn orientable(set: &[u64]) -> bool {
    assert!(set.len() <= 20);
    let first = 1u64;
    (0..(1u64 << set.len())).filter(|m| m & first == 0).any(|m| {
        let mut sums: std::collections::BTreeMap<u64, i64> = Default::default();
        for (i, f) in set.iter().enumerate() {
            let eps = if m >> i & 1 == 1 { -1 } else { 1 };
            for v in 0..64 {
                if f >> v & 1 == 1 {
                    let r = f & !(1 << v);
                    *sums.entry(r).or_default() += eps * boundary_sign(r, *f).unwrap();
                }
            }
        }
        sums.values().all(|s| *s == 0)
    })
}

pub fn to_faces(set: &[u64]) -> Vec<Face> {
    let mut v: Vec<Face> = set.iter().map(|b| Face::from_bits(*b)).collect();
    v.sort();
    v
}
