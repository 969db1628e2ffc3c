use nalgebra::DVector;

use crate::coxeter::{CoxeterSystem, GroupElement};

/// The coset `x W_{S∖{s}}` labelling `H_(x,s)`; `coset` is always the
/// minimal-length representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetLabel {
    pub generator: usize,
    pub coset: GroupElement,
}

impl CosetLabel {
    pub fn new(sys: &CoxeterSystem, x: &GroupElement, s: usize) -> Self {
        CosetLabel { generator: s, coset: sys.min_coset_rep(x, s) }
    }

    /// Whether `M(w)` lies on the hyperplane with this label.
    pub fn contains_orbit_point(&self, sys: &CoxeterSystem, w: &GroupElement) -> bool {
        sys.min_coset_rep(w, self.generator) == self.coset
    }
}

/// The inequality `⟨v, normal⟩ ≤ offset`, with normal in simple-root
/// coordinates.
#[derive(Clone, Debug)]
pub struct Halfspace {
    pub label: Option<CosetLabel>,
    pub normal: DVector<f64>,
    pub offset: f64,
}

impl Halfspace {
    pub fn unlabeled(normal: DVector<f64>, offset: f64) -> Self {
        Halfspace { label: None, normal, offset }
    }

    /// Signed slack `⟨v, normal⟩ − offset`, unnormalized.
    pub fn slack(&self, sys_gram: &nalgebra::DMatrix<f64>, v: &DVector<f64>) -> f64 {
        (v.transpose() * sys_gram * &self.normal)[(0, 0)] - self.offset
    }
}

impl PartialEq for Halfspace {
    fn eq(&self, other: &Self) -> bool {
        match (&self.label, &other.label) {
            (Some(a), Some(b)) => a == b,
            _ => self.normal == other.normal && self.offset == other.offset,
        }
    }
}
