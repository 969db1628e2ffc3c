use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;

use super::oracle::congruence_oracle;
use super::{g_map, is_u_automorphism, phi_mu, LinearIsometry};
use crate::coxeter::{CoxeterElement, CoxeterSystem, GraphAutomorphism, GroupElement, Word};
use crate::error::{Error, Result};
use crate::geometry::{BasePoint, Polytope, Realization};

/// An isometry taking the polytope (or fan) of `from` onto that of `to`.
#[derive(Clone, Debug)]
pub struct Witness {
    pub from: Word,
    pub to: Word,
    pub isometry: LinearIsometry,
}

/// Coxeter elements sharing an isometry class, with witnesses from the first
/// member to every other member.
#[derive(Clone, Debug)]
pub struct IsometryClass {
    pub members: Vec<Word>,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub elements: Vec<CoxeterElement>,
    pub classes: Vec<IsometryClass>,
}

impl Classification {
    /// Class sizes in class order.
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.members.len()).collect()
    }

    /// The partition as sets of words, independent of class order.
    pub fn partition(&self) -> BTreeSet<BTreeSet<Word>> {
        self.classes.iter().map(|c| c.members.iter().cloned().collect()).collect()
    }

    pub fn class_of(&self, c: &Word) -> Option<usize> {
        self.classes.iter().position(|k| k.members.contains(c))
    }
}

#[derive(Clone, Debug)]
pub struct FanClassification {
    pub classification: Classification,
    /// Set when `κ_s ≠ κ_{w0 s w0}` for some `s`: fan classes then need not
    /// coincide with associahedron classes at this base point.
    pub caveat: bool,
}

/// A relation `step(from, to)` returning an isometry for directly related
/// pairs; classes are its connected components.
fn partition(
    sys: &CoxeterSystem,
    elements: Vec<CoxeterElement>,
    step: impl Fn(&GroupElement, &GroupElement) -> Option<LinearIsometry>,
) -> Classification {
    let k = elements.len();
    let mut class_of = vec![usize::MAX; k];
    let mut classes = Vec::new();
    for root in 0..k {
        if class_of[root] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[root] = id;
        let mut reach: Vec<Option<LinearIsometry>> = vec![None; k];
        reach[root] = Some(LinearIsometry::identity(sys.rank()));
        let mut order = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            for b in 0..k {
                if class_of[b] != usize::MAX {
                    continue;
                }
                if let Some(iso) = step(&elements[a].element, &elements[b].element) {
                    class_of[b] = id;
                    reach[b] = Some(iso.compose(reach[a].as_ref().expect("reached")));
                    order.push(b);
                    queue.push_back(b);
                }
            }
        }
        order.sort_unstable();
        let members = order.iter().map(|&i| elements[i].word.clone()).collect();
        let witnesses = order[1..]
            .iter()
            .map(|&i| Witness {
                from: elements[root].word.clone(),
                to: elements[i].word.clone(),
                isometry: reach[i].take().expect("reached"),
            })
            .collect();
        classes.push(IsometryClass { members, witnesses });
    }
    Classification { elements, classes }
}

fn conjugate_by_w0(sys: &CoxeterSystem, x: &GroupElement) -> GroupElement {
    let w0 = sys.longest_element();
    w0.compose_unchecked(x).compose_unchecked(&w0)
}

/// Coxeter elements up to isometry of their associahedra at the given base
/// point: `c1 ~ c2` when a graph automorphism `μ` with `κ_s = κ_{μ(s)}` sends
/// `c2` to `c1` or to `w0 c1⁻¹ w0`. Witnesses are `φ_μ` or `g ∘ φ_μ`.
pub fn classify_associahedra(real: &Realization<'_>) -> Result<Classification> {
    let sys = real.system();
    if !sys.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    let autos: Vec<GraphAutomorphism> =
        sys.graph_automorphisms().into_iter().filter(|mu| is_u_automorphism(mu, real.base())).collect();
    let g = g_map(sys);
    let step = |from: &GroupElement, to: &GroupElement| {
        let twisted = conjugate_by_w0(sys, &to.inverse());
        let images: Vec<GroupElement> = autos.iter().map(|mu| mu.apply_element(sys, from)).collect();
        if let Some(i) = images.iter().position(|im| im == to) {
            return Some(phi_mu(sys, &autos[i]));
        }
        images.iter().position(|im| *im == twisted).map(|i| g.compose(&phi_mu(sys, &autos[i])))
    };
    Ok(partition(sys, sys.coxeter_elements(), step))
}

/// Coxeter elements up to isometry of their Cambrian fans: `c ~ c'` when a
/// graph automorphism sends `c'` to `c` or to `c⁻¹`.
///
/// The fan of `c⁻¹` is carried to that of `c` by `g ∘ φ_ψ`, with `ψ` the
/// conjugation by `w0`, so the second branch is witnessed by `g ∘ φ_{ψμ}`.
pub fn classify_cambrian_fans(sys: &CoxeterSystem, base: &BasePoint) -> Result<FanClassification> {
    if !sys.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    let autos = sys.graph_automorphisms();
    let psi = sys.conjugation_by_w0();
    let g = g_map(sys);
    let step = |from: &GroupElement, to: &GroupElement| {
        let inverse = to.inverse();
        let images: Vec<GroupElement> = autos.iter().map(|mu| mu.apply_element(sys, from)).collect();
        if let Some(i) = images.iter().position(|im| im == to) {
            return Some(phi_mu(sys, &autos[i]));
        }
        images.iter().position(|im| *im == inverse).map(|i| g.compose(&phi_mu(sys, &psi.compose(&autos[i]))))
    };
    let kappa = base.kappa();
    let caveat = (0..sys.rank()).any(|s| kappa[s] != kappa[psi.apply(s)]);
    Ok(FanClassification { classification: partition(sys, sys.coxeter_elements(), step), caveat })
}

/// Whether `iso` carries every maximal normal cone of `from` onto a maximal
/// normal cone of `to`, comparing ray directions within `eps`.
pub fn maps_fan(from: &Polytope, to: &Polytope, iso: &LinearIsometry, eps: f64) -> bool {
    let gram = &to.gram;
    let unit = |v: &nalgebra::DVector<f64>| {
        let n = (v.transpose() * gram * v)[(0, 0)].sqrt();
        v / n
    };
    let near = |a: &nalgebra::DVector<f64>, b: &nalgebra::DVector<f64>| {
        let d = a - b;
        (d.transpose() * gram * &d)[(0, 0)].max(0.0).sqrt() < eps
    };
    let target: Vec<Vec<nalgebra::DVector<f64>>> =
        to.normal_cones().iter().map(|c| c.rays.iter().map(unit).collect()).collect();
    from.vertices.len() == to.vertices.len()
        && from.normal_cones().iter().all(|cone| {
            let moved: Vec<_> = cone.rays.iter().map(|r| unit(&iso.apply(r))).collect();
            target
                .iter()
                .any(|rays| rays.len() == moved.len() && moved.iter().all(|m| rays.iter().any(|r| near(m, r))))
        })
}

/// Outcome of comparing the combinatorial classification with the pairwise
/// congruence search.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub classification: Classification,
    /// Classes found by the congruence search, as sorted word lists.
    pub oracle_classes: Vec<Vec<Word>>,
    /// Every witness maps vertex sets onto each other.
    pub witnesses_verified: bool,
    pub agreement: bool,
    /// First pair on which the two procedures differ:
    /// `(c1, c2, same combinatorial class, oracle found an isometry)`.
    pub counterexample: Option<(Word, Word, bool, bool)>,
}

/// Run the classifier and the congruence search on every pair of Coxeter
/// elements. With `jobs > 1` pairs are checked on that many threads.
pub fn verify_against_oracle(real: &Realization<'_>, jobs: usize) -> Result<OracleReport> {
    let classification = classify_associahedra(real)?;
    let eps = real.epsilon();
    let elements = &classification.elements;
    let polytopes: Vec<Polytope> = elements.iter().map(|c| real.associahedron(&c.word)).collect::<Result<_>>()?;
    let index = |w: &Word| elements.iter().position(|c| c.word == *w).expect("classified element");

    let witnesses_verified = classification.classes.iter().all(|class| {
        class.witnesses.iter().all(|w| {
            w.isometry.preserves_gram(real.system().gram(), eps)
                && w.isometry.maps_vertex_set(&polytopes[index(&w.from)], &polytopes[index(&w.to)], eps)
        })
    });

    let pairs: Vec<(usize, usize)> =
        (0..elements.len()).flat_map(|i| (i + 1..elements.len()).map(move |j| (i, j))).collect();
    let check = |&(i, j): &(usize, usize)| congruence_oracle(&polytopes[i], &polytopes[j], eps).map(|o| o.is_some());
    let found: Vec<bool> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::DegenerateInput(format!("thread pool: {e}")))?;
        pool.install(|| pairs.par_iter().map(check).collect::<Result<Vec<bool>>>())?
    } else {
        pairs.iter().map(check).collect::<Result<Vec<bool>>>()?
    };

    let mut counterexample = None;
    let mut component: Vec<usize> = (0..elements.len()).collect();
    for (&(i, j), &congruent) in pairs.iter().zip(&found) {
        let same = classification.class_of(&elements[i].word) == classification.class_of(&elements[j].word);
        if same != congruent && counterexample.is_none() {
            counterexample = Some((elements[i].word.clone(), elements[j].word.clone(), same, congruent));
        }
        if congruent {
            let (a, b) = (component[i], component[j]);
            for c in component.iter_mut() {
                if *c == b {
                    *c = a;
                }
            }
        }
    }
    let mut oracle_classes: Vec<Vec<Word>> = Vec::new();
    let mut seen = Vec::new();
    for i in 0..elements.len() {
        if !seen.contains(&component[i]) {
            seen.push(component[i]);
            oracle_classes.push(
                (0..elements.len()).filter(|&j| component[j] == component[i]).map(|j| elements[j].word.clone()).collect(),
            );
        }
    }
    let oracle_partition: BTreeSet<BTreeSet<Word>> =
        oracle_classes.iter().map(|c| c.iter().cloned().collect()).collect();
    let agreement = counterexample.is_none() && oracle_partition == classification.partition();
    Ok(OracleReport { classification, oracle_classes, witnesses_verified, agreement, counterexample })
}
