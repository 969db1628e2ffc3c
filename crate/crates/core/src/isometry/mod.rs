//! Explicit isometries between associahedra, the classification of Coxeter
//! elements by isometry class, and a brute-force congruence search used to
//! cross-check it.

mod classify;
mod oracle;
mod reducible;

use nalgebra::{DMatrix, DVector};

pub use classify::{
    classify_associahedra, classify_cambrian_fans, maps_fan, verify_against_oracle, Classification, FanClassification,
    IsometryClass, OracleReport, Witness,
};
pub use oracle::congruence_oracle;
pub use reducible::{classify_reducible, reversed_on, ReducibleCheck, ReducibleReport};

use crate::coxeter::{CoxeterSystem, GraphAutomorphism};
use crate::error::{Error, Result};
use crate::geometry::{BasePoint, Halfspace, Polytope, Realization};

/// Where a linear isometry came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `α_s ↦ α_{μ(s)}`.
    PhiMu(GraphAutomorphism),
    /// The action of `w0`.
    G,
    /// The action of the longest element of the listed components.
    GSubset(Vec<usize>),
    /// Applied right to left.
    Composition(Vec<Provenance>),
    /// Found by [`congruence_oracle`].
    Oracle,
}

impl Provenance {
    pub fn describe(&self, sys: &CoxeterSystem) -> String {
        let labels = sys.labels();
        match self {
            Provenance::PhiMu(mu) => {
                let parts: Vec<String> =
                    (0..sys.rank()).map(|s| format!("{}->{}", labels[s], labels[mu.apply(s)])).collect();
                format!("phi_mu({})", parts.join(","))
            }
            Provenance::G => "g".into(),
            Provenance::GSubset(components) => {
                let gens: Vec<&str> =
                    components.iter().flat_map(|&k| sys.components()[k].iter()).map(|&s| labels[s].as_str()).collect();
                format!("g_A({{{}}})", gens.join(","))
            }
            Provenance::Composition(parts) => {
                parts.iter().map(|p| p.describe(sys)).collect::<Vec<_>>().join(" o ")
            }
            Provenance::Oracle => "oracle".into(),
        }
    }
}

/// A linear map of `V`, in simple-root coordinates, with its origin.
#[derive(Clone, Debug)]
pub struct LinearIsometry {
    pub matrix: DMatrix<f64>,
    pub provenance: Provenance,
}

impl LinearIsometry {
    pub fn identity(rank: usize) -> Self {
        LinearIsometry { matrix: DMatrix::identity(rank, rank), provenance: Provenance::Composition(Vec::new()) }
    }

    pub fn apply(&self, v: &DVector<f64>) -> DVector<f64> {
        &self.matrix * v
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearIsometry) -> LinearIsometry {
        let mut parts = Vec::new();
        for p in [&self.provenance, &other.provenance] {
            match p {
                Provenance::Composition(inner) => parts.extend(inner.iter().cloned()),
                p => parts.push(p.clone()),
            }
        }
        let provenance = if parts.len() == 1 { parts.pop().expect("one part") } else { Provenance::Composition(parts) };
        LinearIsometry { matrix: &self.matrix * &other.matrix, provenance }
    }

    /// `MᵀGM = G` entrywise within `eps`.
    pub fn preserves_gram(&self, gram: &DMatrix<f64>, eps: f64) -> bool {
        let pulled = self.matrix.transpose() * gram * &self.matrix;
        (pulled - gram).amax() <= eps
    }

    /// Whether the map sends the vertices of `from` bijectively onto those of
    /// `to`, within `eps` in the Gram norm.
    pub fn maps_vertex_set(&self, from: &Polytope, to: &Polytope, eps: f64) -> bool {
        if from.vertices.len() != to.vertices.len() {
            return false;
        }
        let mut hit = vec![false; to.vertices.len()];
        for v in &from.vertices {
            let image = self.apply(v);
            let found = to.vertices.iter().enumerate().find(|(j, q)| {
                let d = &image - *q;
                !hit[*j] && (d.transpose() * &to.gram * &d)[(0, 0)].max(0.0).sqrt() < eps
            });
            match found {
                Some((j, _)) => hit[j] = true,
                None => return false,
            }
        }
        true
    }
}

/// `φ_μ`: the permutation matrix `e_s ↦ e_{μ(s)}`.
pub fn phi_mu(sys: &CoxeterSystem, mu: &GraphAutomorphism) -> LinearIsometry {
    let n = sys.rank();
    let matrix = DMatrix::from_fn(n, n, |i, j| if mu.apply(j) == i { 1.0 } else { 0.0 });
    LinearIsometry { matrix, provenance: Provenance::PhiMu(mu.clone()) }
}

/// `g`: the action of `w0`.
pub fn g_map(sys: &CoxeterSystem) -> LinearIsometry {
    LinearIsometry { matrix: sys.matrix_of(&sys.longest_element()), provenance: Provenance::G }
}

/// `g_A`: the action of the longest element of the parabolic subgroup
/// generated by the listed components.
pub fn g_subset(sys: &CoxeterSystem, components: &[usize]) -> LinearIsometry {
    let w_a = sys.parabolic_longest(&component_generators(sys, components));
    LinearIsometry { matrix: sys.matrix_of(&w_a), provenance: Provenance::GSubset(components.to_vec()) }
}

pub(crate) fn component_generators(sys: &CoxeterSystem, components: &[usize]) -> Vec<usize> {
    let mut gens: Vec<usize> = components.iter().flat_map(|&k| sys.components()[k].iter().copied()).collect();
    gens.sort_unstable();
    gens
}

/// `κ_s = κ_{μ(s)}` for every `s`.
pub fn is_u_automorphism(mu: &GraphAutomorphism, base: &BasePoint) -> bool {
    let k = base.kappa();
    (0..k.len()).all(|s| k[s] == k[mu.apply(s)])
}

/// The halfspace labelled `(μ(x), μ(s))`, checked against the image of `h`
/// under `φ_μ`.
pub fn halfspace_image(real: &Realization<'_>, mu: &GraphAutomorphism, h: &Halfspace) -> Result<Halfspace> {
    let sys = real.system();
    let label = h
        .label
        .as_ref()
        .ok_or_else(|| Error::LabelGeometryMismatch("halfspace carries no coset label".into()))?;
    let image = real.halfspace(&mu.apply_element(sys, &label.coset), mu.apply(label.generator));
    let moved = phi_mu(sys, mu).apply(&h.normal);
    let eps = real.epsilon();
    let d = &moved - &image.normal;
    if sys.norm(&d) > eps || (image.offset - h.offset).abs() > eps {
        return Err(Error::LabelGeometryMismatch(format!(
            "image of {}·H_{} is not H_{}",
            sys.format_word(&sys.reduced_word(&label.coset)),
            sys.labels()[label.generator],
            sys.labels()[mu.apply(label.generator)],
        )));
    }
    Ok(image)
}
