//! Square-free monomial ideals and the Stanley-Reisner / facet
//! correspondences with simplicial complexes.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::{default_labels, Complex};
use crate::error::{Error, Result};
use crate::face::{sorted_index, Face, MAX_VERTICES};

/// A square-free monomial ideal, kept as its minimal generating set. Each
/// generator is the support of a monomial.
///
/// The zero ideal has no generators. The unit ideal is the single empty
/// generator; it only arises as the Stanley-Reisner ideal of the void
/// complex.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct MonomialIdeal {
    labels: Vec<String>,
    generators: Vec<Face>,
}

/// Keeps only the inclusion-minimal sets, sorted.
fn minimal_sets(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

impl MonomialIdeal {
    /// Ideal generated by the given supports; redundant generators are
    /// dropped.
    pub fn new<I: IntoIterator<Item = Face>>(labels: Vec<String>, generators: I) -> Result<Self> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::Input(format!(
                "{} variables exceed the supported maximum of {MAX_VERTICES}",
                labels.len()
            )));
        }
        let all = Face::full(labels.len());
        let generators: Vec<Face> = generators.into_iter().collect();
        if generators.iter().any(|g| !g.is_subset(all)) {
            return Err(Error::Input("generator uses an unknown variable".into()));
        }
        Ok(MonomialIdeal {
            labels,
            generators: minimal_sets(generators),
        })
    }

    pub fn on_variables<I: IntoIterator<Item = Face>>(n: usize, generators: I) -> Result<Self> {
        MonomialIdeal::new(default_labels(n), generators)
    }

    pub fn variable_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generators(&self) -> &[Face] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.first() == Some(&Face::EMPTY)
    }

    /// Whether the square-free monomial with support `f` lies in the ideal.
    pub fn contains(&self, f: Face) -> bool {
        self.generators.iter().any(|g| g.is_subset(f))
    }

    pub fn generator_labels(&self) -> Vec<Vec<String>> {
        self.generators
            .iter()
            .map(|g| g.vertices().map(|v| self.labels[v].clone()).collect())
            .collect()
    }

    /// `N(I)`: the complex of supports of monomials outside the ideal.
    pub fn stanley_reisner_complex(&self) -> Complex {
        let n = self.variable_count();
        if self.is_unit() {
            return Complex::new(self.labels.clone(), []).expect("valid labels");
        }
        if self.is_zero() {
            return Complex::new(self.labels.clone(), [Face::full(n)]).expect("valid labels");
        }
        let all = Face::full(n);
        let mut facets = Vec::new();
        let mut level = vec![Face::EMPTY];
        while !level.is_empty() {
            let mut next = Vec::new();
            for &s in &level {
                let mut maximal = true;
                for v in all.difference(s).vertices() {
                    let t = s.with(v);
                    if !self.contains(t) {
                        maximal = false;
                        if Some(v) > s.max_vertex() {
                            next.push(t);
                        }
                    }
                }
                if maximal {
                    facets.push(s);
                }
            }
            level = next;
        }
        Complex::new(self.labels.clone(), facets).expect("valid labels")
    }

    /// `F(I)`: the complex whose facets are the generators.
    pub fn facet_complex(&self) -> Complex {
        Complex::new(self.labels.clone(), self.generators.iter().copied()).expect("valid labels")
    }
}

impl Complex {
    /// `N(Γ)`: generated by the minimal non-faces.
    pub fn stanley_reisner_ideal(&self) -> MonomialIdeal {
        let labels = self.labels().to_vec();
        if self.is_void() {
            return MonomialIdeal {
                labels,
                generators: vec![Face::EMPTY],
            };
        }
        let all = self.vertex_set();
        let mut generators = Vec::new();
        let mut level = vec![Face::EMPTY];
        while !level.is_empty() {
            let mut next = Vec::new();
            for &s in &level {
                let start = s.max_vertex().map_or(0, |m| m + 1);
                for v in start..all.len() {
                    let t = s.with(v);
                    if !s.vertices().all(|u| sorted_index(&level, t.without(u)).is_some()) {
                        continue;
                    }
                    if self.is_face(t) {
                        next.push(t);
                    } else {
                        generators.push(t);
                    }
                }
            }
            level = next;
        }
        generators.sort_unstable();
        MonomialIdeal { labels, generators }
    }

    /// `F(Γ)`: generated by the facets.
    pub fn facet_ideal(&self) -> MonomialIdeal {
        MonomialIdeal {
            labels: self.labels().to_vec(),
            generators: self.facets().iter().copied().filter(|f| !f.is_empty()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_complex;
    use alloc::string::ToString;

    fn cx(facets: &[&str]) -> Complex {
        let lists: Vec<Vec<String>> = facets
            .iter()
            .map(|f| f.chars().map(|c| c.to_string()).collect())
            .collect();
        build_complex::<_, String>(&lists, &[]).unwrap()
    }

    fn f(v: &[usize]) -> Face {
        Face::from_vertices(v.iter().copied())
    }

    #[test]
    fn sr_ideal_of_small_complexes() {
        // <x1x2, x3> -> (x1x3, x2x3)
        let c = Complex::on_vertices(3, [f(&[0, 1]), f(&[2])]).unwrap();
        assert_eq!(c.stanley_reisner_ideal().generators(), [f(&[0, 2]), f(&[1, 2])]);
        let t = Complex::complete_pure(4, 2);
        assert_eq!(t.stanley_reisner_ideal().generators(), [f(&[0, 1, 2, 3])]);
        assert!(Complex::simplex(3).stanley_reisner_ideal().is_zero());
    }

    #[test]
    fn ghost_vertex_is_a_linear_generator() {
        let c = Complex::on_vertices(3, [f(&[0, 1])]).unwrap();
        assert_eq!(c.stanley_reisner_ideal().generators(), [f(&[2])]);
    }

    #[test]
    fn facet_ideal() {
        let c = cx(&["abc", "abd"]);
        assert_eq!(c.facet_ideal().generators(), [f(&[0, 1, 2]), f(&[0, 1, 3])]);
        assert!(Complex::on_vertices(3, []).unwrap().facet_ideal().is_zero());
    }

    #[test]
    fn complex_of_ideal() {
        let i = MonomialIdeal::on_variables(3, [f(&[0, 2]), f(&[1, 2])]).unwrap();
        assert_eq!(i.stanley_reisner_complex().facets(), [f(&[0, 1]), f(&[2])]);
        let j = MonomialIdeal::on_variables(4, [f(&[0, 1, 2, 3])]).unwrap();
        assert_eq!(j.stanley_reisner_complex(), Complex::complete_pure(4, 2));
        let k = MonomialIdeal::on_variables(3, [f(&[0])]).unwrap();
        assert_eq!(k.stanley_reisner_complex().facets(), [f(&[1, 2])]);
    }

    #[test]
    fn generators_are_minimalized() {
        let i = MonomialIdeal::on_variables(3, [f(&[0, 1]), f(&[0, 1, 2]), f(&[0])]).unwrap();
        assert_eq!(i.generators(), [f(&[0])]);
    }

    #[test]
    fn round_trip_including_void() {
        for c in [
            Complex::on_vertices(3, []).unwrap(),
            Complex::on_vertices(3, [Face::EMPTY]).unwrap(),
            Complex::complete_pure(5, 2),
            cx(&["abc", "cde", "ae"]),
        ] {
            assert_eq!(c.stanley_reisner_ideal().stanley_reisner_complex(), c);
        }
    }
}
