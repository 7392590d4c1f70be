//! Linear resolutions of square-free monomial ideals through the vanishing of
//! reduced homology on induced subcomplexes of the Stanley-Reisner complex.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::face::Face;
use crate::homology::betti_profile_within;
use crate::ideal::MonomialIdeal;
use crate::linalg::FieldSpec;

/// Largest variable count the subset sweep accepts.
pub const MAX_SWEEP_VARIABLES: usize = 20;

/// A nonzero `H̃_i` of `N(I)_W` with `i != t - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub subset: Face,
    pub degree: usize,
    pub betti: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionVerdict {
    pub t: usize,
    pub field: FieldSpec,
    pub linear: bool,
    /// First failure in sweep order: subsets by size, then lexicographic.
    pub witness: Option<Witness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenerationDegree {
    /// All minimal generators have this degree. `closure_equality` records
    /// whether `N(I) = Δ_{t-1}(N(I)^[t-1])`; it is absent for the unit ideal.
    Uniform {
        degree: usize,
        closure_equality: Option<bool>,
    },
    NotPure,
}

pub fn min_generation_degree(ideal: &MonomialIdeal) -> Result<GenerationDegree> {
    let Some(first) = ideal.generators().first() else {
        return Err(Error::Input("the zero ideal has no generators".into()));
    };
    let t = first.len();
    if ideal.generators().iter().any(|g| g.len() != t) {
        return Ok(GenerationDegree::NotPure);
    }
    let closure_equality = match t {
        0 => None,
        _ => {
            let gamma = ideal.stanley_reisner_complex();
            let closed = gamma.pure_skeleton(t - 1).d_closure(t - 1)?;
            Some(closed == gamma)
        }
    };
    Ok(GenerationDegree::Uniform {
        degree: t,
        closure_equality,
    })
}

/// Nonempty subsets of `n` vertices, by size and then lexicographically.
pub fn sweep_order(n: usize) -> Vec<Face> {
    let all = Face::full(n);
    (1..=n).flat_map(|k| all.subsets_of_size(k)).collect()
}

/// Whether an ideal generated in degree `t` has a `t`-linear resolution
/// over `field`: `H̃_i(N(I)_W) = 0` for every nonempty `W` and every
/// `i >= 0` other than `t - 2`.
pub fn has_t_linear_resolution(ideal: &MonomialIdeal, t: usize, field: FieldSpec) -> Result<ResolutionVerdict> {
    let n = ideal.variable_count();
    if n > MAX_SWEEP_VARIABLES {
        return Err(Error::CapExceeded {
            what: "variables in a subset sweep",
            needed: n as u128,
            limit: MAX_SWEEP_VARIABLES as u128,
        });
    }
    if ideal.generators().iter().any(|g| g.len() != t) {
        return Err(Error::Input("ideal is not generated in the requested degree".into()));
    }
    let gamma = ideal.stanley_reisner_complex();
    let allowed = t as isize - 2;
    for w in sweep_order(n) {
        let profile = betti_profile_within(&gamma, w, field);
        if let Some((i, &b)) = profile
            .iter()
            .enumerate()
            .find(|(i, b)| **b != 0 && *i as isize != allowed)
        {
            return Ok(ResolutionVerdict {
                t,
                field,
                linear: false,
                witness: Some(Witness {
                    subset: w,
                    degree: i,
                    betti: b,
                }),
            });
        }
    }
    Ok(ResolutionVerdict {
        t,
        field,
        linear: true,
        witness: None,
    })
}

/// `I_[d]`: generated by the square-free degree-`d` monomials of `I`.
pub fn degree_component(ideal: &MonomialIdeal, d: usize) -> MonomialIdeal {
    let n = ideal.variable_count();
    let gens = Face::full(n).subsets_of_size(d).filter(|s| ideal.contains(*s));
    MonomialIdeal::new(ideal.labels().to_vec(), gens).expect("same variables")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentVerdict {
    pub field: FieldSpec,
    pub linear: bool,
    /// One verdict per nonzero component, keyed by its degree `t`.
    pub components: Vec<ResolutionVerdict>,
}

/// Every nonzero component `I_[d]`, from the least generator degree up to
/// the number of variables, has a `d`-linear resolution.
pub fn is_componentwise_linear(ideal: &MonomialIdeal, field: FieldSpec) -> Result<ComponentVerdict> {
    let lo = ideal.generators().iter().map(|g| g.len()).min();
    let mut components = Vec::new();
    if let Some(lo) = lo {
        for d in lo..=ideal.variable_count() {
            let comp = degree_component(ideal, d);
            if comp.is_zero() {
                continue;
            }
            components.push(has_t_linear_resolution(&comp, d, field)?);
        }
    }
    Ok(ComponentVerdict {
        field,
        linear: components.iter().all(|v| v.linear),
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Complex;
    use crate::named;

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::on_variables(n, gens.iter().map(|g| Face::from_vertices(g.iter().copied()))).unwrap()
    }

    #[test]
    fn generation_degree() {
        let closed = named::tetra_with_fin().d_closure(2).unwrap();
        assert_eq!(
            min_generation_degree(&closed.stanley_reisner_ideal()).unwrap(),
            GenerationDegree::Uniform {
                degree: 3,
                closure_equality: Some(true)
            }
        );
        let c5 = named::cycle_graph(5).stanley_reisner_ideal();
        assert_eq!(c5.generators().len(), 5);
        assert!(matches!(
            min_generation_degree(&c5).unwrap(),
            GenerationDegree::Uniform { degree: 2, .. }
        ));
        assert_eq!(
            min_generation_degree(&ideal(4, &[&[0, 1], &[0, 2, 3]])).unwrap(),
            GenerationDegree::NotPure
        );
        assert!(min_generation_degree(&ideal(3, &[])).is_err());
    }

    #[test]
    fn graph_ideals() {
        let p4 = named::path_graph(4).stanley_reisner_ideal();
        for f in FieldSpec::PROBES {
            assert!(has_t_linear_resolution(&p4, 2, f).unwrap().linear);
        }
        let c5 = named::cycle_graph(5).stanley_reisner_ideal();
        let v = has_t_linear_resolution(&c5, 2, FieldSpec::Gf2).unwrap();
        assert!(!v.linear);
        assert_eq!(
            v.witness,
            Some(Witness {
                subset: Face::full(5),
                degree: 1,
                betti: 1
            })
        );
        assert!(has_t_linear_resolution(&c5, 3, FieldSpec::Gf2).is_err());
    }

    #[test]
    fn rp2_split() {
        let n = named::rp2().d_closure(2).unwrap().stanley_reisner_ideal();
        assert!(!has_t_linear_resolution(&n, 3, FieldSpec::Gf2).unwrap().linear);
        assert!(has_t_linear_resolution(&n, 3, FieldSpec::Rational).unwrap().linear);
        assert!(has_t_linear_resolution(&n, 3, FieldSpec::Gfp(3)).unwrap().linear);
    }

    #[test]
    fn example7_not_linear_over_gf2() {
        let n = named::example7().d_closure(3).unwrap().stanley_reisner_ideal();
        let v = has_t_linear_resolution(&n, 4, FieldSpec::Gf2).unwrap();
        assert!(!v.linear);
        assert_eq!(v.witness.unwrap().degree, 4);
    }

    #[test]
    fn components() {
        let i = ideal(3, &[&[0]]);
        assert_eq!(degree_component(&i, 2), ideal(3, &[&[0, 1], &[0, 2]]));
        assert!(degree_component(&ideal(3, &[&[0, 1, 2]]), 2).is_zero());
        let c5 = named::cycle_graph(5).stanley_reisner_ideal();
        assert_eq!(degree_component(&c5, 2), c5);
        assert!(is_componentwise_linear(&ideal(2, &[&[0, 1]]), FieldSpec::Gf2).unwrap().linear);
        for f in FieldSpec::PROBES {
            assert!(is_componentwise_linear(&ideal(3, &[&[0], &[1, 2]]), f).unwrap().linear);
        }
        let v = is_componentwise_linear(&c5, FieldSpec::Gf2).unwrap();
        assert!(!v.linear);
        assert!(!v.components[0].linear);
    }

    #[test]
    fn zero_ideal_is_linear() {
        let z = ideal(3, &[]);
        assert!(has_t_linear_resolution(&z, 2, FieldSpec::Gf2).unwrap().linear);
        assert!(is_componentwise_linear(&z, FieldSpec::Gf2).unwrap().linear);
        assert_eq!(z.stanley_reisner_complex(), Complex::simplex(3));
    }
}
