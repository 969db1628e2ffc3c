//! Orbit points, labeled halfspaces and the polytopes built from them.

mod export;
mod halfspace;
mod polytope;
mod vertices;

use std::collections::BTreeSet;

use nalgebra::DVector;

pub use export::{polytope_json, to_off};
pub use halfspace::{CosetLabel, Halfspace};
pub use polytope::{NormalCone, Polytope};
pub use vertices::enumerate_vertices;

use crate::coxeter::{CoxeterSystem, GroupElement, Word};
use crate::error::{Error, Result};
use crate::sortable::c_singletons;

/// Tolerance for feasibility, incidence and vertex identification.
pub const DEFAULT_EPSILON: f64 = 1e-9;

/// The point `u = Σ κ_s v_s`, given by its positive coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct BasePoint {
    kappa: Vec<f64>,
}

impl BasePoint {
    pub fn new(kappa: Vec<f64>) -> Result<Self> {
        if kappa.is_empty() {
            return Err(Error::InvalidBasePoint("no coefficients".into()));
        }
        if let Some(k) = kappa.iter().find(|k| !(k.is_finite() && **k > 0.0)) {
            return Err(Error::InvalidBasePoint(format!("coefficient {k} is not positive")));
        }
        Ok(BasePoint { kappa })
    }

    /// All coefficients equal to 1.
    pub fn balanced(rank: usize) -> Self {
        BasePoint { kappa: vec![1.0; rank] }
    }

    /// Parse `balanced` or a comma-separated list of positive numbers or
    /// fractions such as `1,3/2,2`.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let text = text.trim();
        if text.eq_ignore_ascii_case("balanced") {
            return Ok(Self::balanced(rank));
        }
        let kappa = text.split(',').map(parse_positive).collect::<Result<Vec<f64>>>()?;
        if kappa.len() != rank {
            return Err(Error::InvalidBasePoint(format!("{} coefficients for rank {rank}", kappa.len())));
        }
        Self::new(kappa)
    }

    pub fn rank(&self) -> usize {
        self.kappa.len()
    }

    pub fn kappa(&self) -> &[f64] {
        &self.kappa
    }

    pub fn is_balanced(&self) -> bool {
        self.kappa.iter().all(|&k| k == self.kappa[0])
    }

    /// `u` in simple-root coordinates.
    pub fn coordinates(&self, sys: &CoxeterSystem) -> DVector<f64> {
        sys.gram_inverse() * DVector::from_column_slice(&self.kappa)
    }
}

fn parse_positive(item: &str) -> Result<f64> {
    let item = item.trim();
    let bad = || Error::InvalidBasePoint(format!("cannot parse `{item}`"));
    let value = match item.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| bad())?;
            let q: f64 = q.trim().parse().map_err(|_| bad())?;
            p / q
        }
        None => item.parse().map_err(|_| bad())?,
    };
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidBasePoint(format!("coefficient `{item}` is not positive")))
    }
}

/// The dual basis `v_s` of the simple roots: the columns of `G⁻¹`.
pub fn fundamental_weights(sys: &CoxeterSystem) -> Vec<DVector<f64>> {
    let inv = sys.gram_inverse();
    (0..sys.rank()).map(|s| inv.column(s).into_owned()).collect()
}

/// A system with a chosen base point.
#[derive(Clone, Debug)]
pub struct Realization<'a> {
    sys: &'a CoxeterSystem,
    base: BasePoint,
    weights: Vec<DVector<f64>>,
    origin: DVector<f64>,
    eps: f64,
}

impl<'a> Realization<'a> {
    pub fn new(sys: &'a CoxeterSystem, base: BasePoint) -> Result<Self> {
        Self::with_epsilon(sys, base, DEFAULT_EPSILON)
    }

    pub fn with_epsilon(sys: &'a CoxeterSystem, base: BasePoint, eps: f64) -> Result<Self> {
        if base.rank() != sys.rank() {
            return Err(Error::InvalidBasePoint(format!(
                "{} coefficients for rank {}",
                base.rank(),
                sys.rank()
            )));
        }
        let origin = base.coordinates(sys);
        Ok(Realization { sys, weights: fundamental_weights(sys), origin, base, eps })
    }

    pub fn system(&self) -> &'a CoxeterSystem {
        self.sys
    }

    pub fn base(&self) -> &BasePoint {
        &self.base
    }

    pub fn epsilon(&self) -> f64 {
        self.eps
    }

    pub fn weights(&self) -> &[DVector<f64>] {
        &self.weights
    }

    /// `M(w) = w(u)`.
    pub fn orbit_point(&self, w: &GroupElement) -> DVector<f64> {
        self.sys.apply(w, &self.origin)
    }

    /// The `w` with `point = M(w)` within ε, if any.
    pub fn orbit_element(&self, point: &DVector<f64>) -> Option<GroupElement> {
        let gram = self.sys.gram();
        let mut p = point.clone();
        let mut w = self.sys.identity();
        // Reflect into the dominant chamber; w records the letters used.
        loop {
            let pairing = gram * &p;
            let Some(s) = (0..self.sys.rank()).find(|&s| pairing[s] < -self.eps) else { break };
            p[s] -= 2.0 * pairing[s];
            w = self.sys.mul_generator(&w, s);
        }
        let d = &self.orbit_point(&w) - point;
        (self.sys.norm(&d) < self.eps).then_some(w)
    }

    /// The halfspace `{v : ⟨v, x(v_s)⟩ ≤ ⟨u, v_s⟩}` labelled by the coset of `x`.
    pub fn halfspace(&self, x: &GroupElement, s: usize) -> Halfspace {
        let label = CosetLabel::new(self.sys, x, s);
        let normal = self.sys.apply(&label.coset, &self.weights[s]);
        let offset = self.sys.inner(&self.origin, &self.weights[s]);
        Halfspace { label: Some(label), normal, offset }
    }

    /// `Perm(W)`: every halfspace `H_(x,s)`, with vertices `M(w)`.
    pub fn permutahedron(&self) -> Polytope {
        let elements = self.sys.elements();
        let halfspaces: Vec<Halfspace> = (0..self.sys.rank())
            .flat_map(|s| self.sys.coset_reps(s).into_iter().map(move |x| (x, s)))
            .map(|(x, s)| self.halfspace(&x, s))
            .collect();
        let incidence = halfspaces
            .iter()
            .map(|h| {
                let label = h.label.as_ref().expect("labelled");
                elements.iter().map(|w| label.contains_orbit_point(self.sys, w)).collect()
            })
            .collect();
        let vertices = elements.iter().map(|w| self.orbit_point(w)).collect();
        Polytope::from_parts(
            self.sys.gram().clone(),
            halfspaces,
            vertices,
            incidence,
            elements.into_iter().map(Some).collect(),
        )
    }

    /// Halfspaces whose hyperplane contains `M(w)` for some c-singleton `w`.
    pub fn admissible_halfspaces(&self, c: &Word) -> Result<Vec<Halfspace>> {
        let lattice = c_singletons(self.sys, c)?;
        let labels: BTreeSet<CosetLabel> = lattice
            .elements()
            .flat_map(|w| (0..self.sys.rank()).map(move |s| (w, s)))
            .map(|(w, s)| CosetLabel::new(self.sys, w, s))
            .collect();
        Ok(labels.into_iter().map(|l| self.halfspace(&l.coset, l.generator)).collect())
    }

    /// `Ass_c(W)`, the intersection of the c-admissible halfspaces.
    pub fn associahedron(&self, c: &Word) -> Result<Polytope> {
        let halfspaces = self.admissible_halfspaces(c)?;
        self.from_halfspaces(halfspaces)
    }

    /// The polytope cut out by `H_(e,s)` and `H_(w0,s)` for all `s`.
    pub fn polytope_p(&self) -> Result<Polytope> {
        let w0 = self.sys.longest_element();
        let mut halfspaces: Vec<Halfspace> = (0..self.sys.rank()).map(|s| self.halfspace(&self.sys.identity(), s)).collect();
        for s in 0..self.sys.rank() {
            let h = self.halfspace(&w0, s);
            if !halfspaces.contains(&h) {
                halfspaces.push(h);
            }
        }
        self.from_halfspaces(halfspaces)
    }

    /// Enumerate vertices, compute incidence and tag vertices that are orbit
    /// points.
    pub fn from_halfspaces(&self, halfspaces: Vec<Halfspace>) -> Result<Polytope> {
        let vertices = enumerate_vertices(self.sys.gram(), &halfspaces, self.eps)?;
        let elements = vertices.iter().map(|v| self.orbit_element(v)).collect();
        Polytope::from_halfspaces(self.sys.gram().clone(), halfspaces, vertices, elements, self.eps)
    }
}
