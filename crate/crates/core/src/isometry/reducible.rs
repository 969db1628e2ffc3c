//! Checks for systems with several irreducible components.

use super::{component_generators, g_subset};
use crate::coxeter::{CoxeterSystem, Word};
use crate::error::{Error, Result};
use crate::geometry::Realization;
use crate::sortable::c_singletons;

/// One `(c, A)` case.
#[derive(Clone, Debug)]
pub struct ReducibleCheck {
    pub c: Word,
    /// Indices into [`CoxeterSystem::components`].
    pub components: Vec<usize>,
    /// `w_A c^A w_A` as a word.
    pub twisted: Word,
    /// `Ass_c = g_A(Ass_{w_A c^A w_A})` as vertex sets.
    pub vertex_sets_agree: bool,
    /// `w_A` is a c-singleton.
    pub w_a_is_singleton: bool,
}

#[derive(Clone, Debug)]
pub struct ReducibleReport {
    pub checks: Vec<ReducibleCheck>,
}

impl ReducibleReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.vertex_sets_agree && c.w_a_is_singleton)
    }
}

/// `c^A`: the letters of `c` lying in `gens` in reverse order, the others
/// untouched.
pub fn reversed_on(c: &Word, gens: &[usize]) -> Word {
    let mut picked = c.letters().iter().copied().filter(|s| gens.contains(s)).rev();
    Word(
        c.letters()
            .iter()
            .map(|&s| if gens.contains(&s) { picked.next().expect("same count") } else { s })
            .collect(),
    )
}

/// For every Coxeter element `c` and every set `A` of components, compare
/// `Ass_c` with `g_A(Ass_{w_A c^A w_A})` and test that `w_A` is a
/// c-singleton.
pub fn classify_reducible(real: &Realization<'_>) -> Result<ReducibleReport> {
    let sys: &CoxeterSystem = real.system();
    let k = sys.components().len();
    if k < 2 {
        return Err(Error::NotReducible);
    }
    let eps = real.epsilon();
    let mut checks = Vec::new();
    for element in sys.coxeter_elements() {
        let c = element.word;
        let ass = real.associahedron(&c)?;
        let singletons = c_singletons(sys, &c)?;
        for mask in 0..(1usize << k) {
            let components: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
            let gens = component_generators(sys, &components);
            let w_a = sys.parabolic_longest(&gens);
            let twisted = reversed_on(&c, &gens).map(|s| sys.conjugate_generator(&w_a, s).expect("w_A normalizes S"));
            let other = real.associahedron(&twisted)?;
            let g_a = g_subset(sys, &components);
            checks.push(ReducibleCheck {
                c: c.clone(),
                components,
                twisted,
                vertex_sets_agree: g_a.maps_vertex_set(&other, &ass, eps),
                w_a_is_singleton: singletons.contains(&w_a),
            });
        }
    }
    Ok(ReducibleReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::BasePoint;

    #[test]
    fn reversal_touches_only_chosen_letters() {
        let c = Word(vec![0, 1, 2, 3]);
        assert_eq!(reversed_on(&c, &[1, 3]), Word(vec![0, 3, 2, 1]));
        assert_eq!(reversed_on(&c, &[]), c);
        assert_eq!(reversed_on(&c, &[0, 1, 2, 3]), c.reversed());
    }

    #[test]
    fn a1xa2_identities_hold() {
        let sys = CoxeterSystem::from_type("A1xA2").unwrap();
        let real = Realization::new(&sys, BasePoint::balanced(3)).unwrap();
        let report = classify_reducible(&real).unwrap();
        assert_eq!(report.checks.len(), 2 * 4);
        assert!(report.all_hold());
        let empty = report.checks.iter().find(|c| c.components.is_empty()).unwrap();
        assert_eq!(empty.twisted, empty.c);
    }

    #[test]
    fn irreducible_input_is_refused() {
        let sys = CoxeterSystem::from_type("A3").unwrap();
        let real = Realization::new(&sys, BasePoint::balanced(3)).unwrap();
        assert!(matches!(classify_reducible(&real), Err(Error::NotReducible)));
    }
}
