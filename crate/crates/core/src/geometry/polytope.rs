use std::collections::BTreeSet;

use nalgebra::{DMatrix, DVector};

use super::halfspace::Halfspace;
use super::vertices::rows;
use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::error::Result;

/// Singular values below this count as zero when measuring affine dimension.
const RANK_TOLERANCE: f64 = 1e-7;

/// A bounded polytope with matching H- and V-representations.
#[derive(Clone, Debug)]
pub struct Polytope {
    /// Gram matrix of the coordinates.
    pub gram: DMatrix<f64>,
    /// Facet-defining halfspaces.
    pub halfspaces: Vec<Halfspace>,
    /// Input halfspaces that turned out not to support a facet.
    pub redundant: Vec<Halfspace>,
    pub vertices: Vec<DVector<f64>>,
    /// `incidence[f][v]`: vertex `v` lies on facet `f`.
    pub incidence: Vec<Vec<bool>>,
    /// The `w` with `vertex = M(w)`, when the vertex is an orbit point.
    pub vertex_elements: Vec<Option<GroupElement>>,
}

/// The normal cone at a vertex, spanned by the outer normals of its facets.
#[derive(Clone, Debug)]
pub struct NormalCone {
    pub vertex: usize,
    pub facets: Vec<usize>,
    pub rays: Vec<DVector<f64>>,
}

fn unit(gram: &DMatrix<f64>, v: &DVector<f64>) -> DVector<f64> {
    let n = (v.transpose() * gram * v)[(0, 0)].sqrt();
    v / n
}

fn gram_distance(gram: &DMatrix<f64>, a: &DVector<f64>, b: &DVector<f64>) -> f64 {
    let d = a - b;
    (d.transpose() * gram * &d)[(0, 0)].max(0.0).sqrt()
}

impl NormalCone {
    /// The `w` whose chamber `w(C)` this cone is, where `C` is spanned by the
    /// fundamental weights.
    pub fn chamber(&self, sys: &CoxeterSystem) -> Option<GroupElement> {
        let n = sys.rank();
        if self.rays.len() != n {
            return None;
        }
        let gram = sys.gram();
        let units: Vec<DVector<f64>> = self.rays.iter().map(|r| unit(gram, r)).collect();
        let mut d: DVector<f64> = units.iter().sum();
        let mut w = sys.identity();
        loop {
            let pairing = gram * &d;
            if (0..n).any(|s| pairing[s].abs() < 1e-9) {
                return None;
            }
            let Some(s) = (0..n).find(|&s| pairing[s] < 0.0) else { break };
            d[s] -= 2.0 * pairing[s];
            w = sys.mul_generator(&w, s);
        }
        let inv = sys.gram_inverse();
        let mut used = vec![false; n];
        for u in &units {
            let hit = (0..n).find(|&s| {
                !used[s] && gram_distance(gram, u, &unit(gram, &sys.apply(&w, &inv.column(s).into_owned()))) < 1e-9
            })?;
            used[hit] = true;
        }
        Some(w)
    }

    /// `self = −other` as sets of ray directions.
    pub fn is_antipodal(&self, other: &NormalCone, gram: &DMatrix<f64>, eps: f64) -> bool {
        self.rays.len() == other.rays.len()
            && self.rays.iter().all(|r| {
                let target = -unit(gram, r);
                other.rays.iter().any(|q| gram_distance(gram, &unit(gram, q), &target) < eps)
            })
    }
}

/// Affine dimension of a point set.
pub(crate) fn affine_dimension(points: &[&DVector<f64>]) -> usize {
    if points.len() < 2 {
        return 0;
    }
    let n = points[0].len();
    let diffs = DMatrix::from_fn(n, points.len() - 1, |i, j| points[j + 1][i] - points[0][i]);
    diffs.rank(RANK_TOLERANCE)
}

impl Polytope {
    /// Assemble from data whose incidence is already known exactly.
    pub fn from_parts(
        gram: DMatrix<f64>,
        halfspaces: Vec<Halfspace>,
        vertices: Vec<DVector<f64>>,
        incidence: Vec<Vec<bool>>,
        vertex_elements: Vec<Option<GroupElement>>,
    ) -> Self {
        Polytope { gram, halfspaces, redundant: Vec::new(), vertices, incidence, vertex_elements }
    }

    /// Compute incidence within `eps` and set aside halfspaces whose tight
    /// vertices do not span a hyperplane.
    pub fn from_halfspaces(
        gram: DMatrix<f64>,
        halfspaces: Vec<Halfspace>,
        vertices: Vec<DVector<f64>>,
        vertex_elements: Vec<Option<GroupElement>>,
        eps: f64,
    ) -> Result<Self> {
        let n = gram.nrows();
        let rows = rows(&gram, &halfspaces)?;
        let mut kept = Vec::new();
        let mut redundant = Vec::new();
        let mut incidence = Vec::new();
        for (h, row) in halfspaces.into_iter().zip(&rows) {
            let tight: Vec<bool> = vertices
                .iter()
                .map(|v| (row.a.iter().zip(v.iter()).map(|(a, x)| a * x).sum::<f64>() - row.b).abs() <= eps)
                .collect();
            let on: Vec<&DVector<f64>> = vertices.iter().zip(&tight).filter(|(_, &t)| t).map(|(v, _)| v).collect();
            if !on.is_empty() && affine_dimension(&on) + 1 == n {
                kept.push(h);
                incidence.push(tight);
            } else {
                redundant.push(h);
            }
        }
        Ok(Polytope { gram, halfspaces: kept, redundant, vertices, incidence, vertex_elements })
    }

    pub fn dimension(&self) -> usize {
        self.gram.nrows()
    }

    pub fn vertex_index(&self, w: &GroupElement) -> Option<usize> {
        self.vertex_elements.iter().position(|e| e.as_ref() == Some(w))
    }

    pub fn facet_vertices(&self, f: usize) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.incidence[f][v]).collect()
    }

    pub fn vertex_facets(&self, v: usize) -> Vec<usize> {
        (0..self.halfspaces.len()).filter(|&f| self.incidence[f][v]).collect()
    }

    /// Every vertex lies on exactly `dimension` facets.
    pub fn is_simple(&self) -> bool {
        (0..self.vertices.len()).all(|v| self.vertex_facets(v).len() == self.dimension())
    }

    /// Whether `point` satisfies every facet inequality within `eps`.
    pub fn contains(&self, point: &DVector<f64>, eps: f64) -> bool {
        self.halfspaces.iter().all(|h| {
            let norm = (h.normal.transpose() * &self.gram * &h.normal)[(0, 0)].sqrt();
            h.slack(&self.gram, point) <= eps * norm
        })
    }

    /// Faces by dimension, each a sorted vertex-index list; index `d` holds
    /// the `d`-dimensional faces (proper faces only).
    pub fn faces(&self) -> Vec<Vec<Vec<usize>>> {
        let n = self.dimension();
        let mut levels: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
        levels[0] = (0..self.vertices.len()).map(|v| vec![v]).collect();
        if n == 1 {
            return levels;
        }
        let facets: Vec<Vec<usize>> = (0..self.halfspaces.len()).map(|f| self.facet_vertices(f)).collect();
        levels[n - 1] = facets.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        for d in (2..n).rev() {
            let mut found = BTreeSet::new();
            for face in &levels[d] {
                for facet in &facets {
                    let meet: Vec<usize> = face.iter().copied().filter(|v| facet.binary_search(v).is_ok()).collect();
                    if meet.len() < d || meet.len() == face.len() {
                        continue;
                    }
                    let points: Vec<&DVector<f64>> = meet.iter().map(|&v| &self.vertices[v]).collect();
                    if affine_dimension(&points) == d - 1 {
                        found.insert(meet);
                    }
                }
            }
            levels[d - 1] = found.into_iter().collect();
        }
        levels
    }

    /// `(f_0, …, f_{d−1})`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces().iter().map(Vec::len).collect()
    }

    /// Vertex pairs joined by an edge, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        match self.dimension() {
            1 => vec![(0, 1)],
            _ => self.faces()[1].iter().map(|e| (e[0], e[1])).collect(),
        }
    }

    pub fn normal_cones(&self) -> Vec<NormalCone> {
        (0..self.vertices.len())
            .map(|v| {
                let facets = self.vertex_facets(v);
                let rays = facets.iter().map(|&f| self.halfspaces[f].normal.clone()).collect();
                NormalCone { vertex: v, facets, rays }
            })
            .collect()
    }

    /// Pairs `(v, v')` of vertices whose normal cones are single chambers and
    /// antipodal to each other, with `v < v'`.
    pub fn antipodal_chamber_pairs(&self, sys: &CoxeterSystem, eps: f64) -> Vec<(usize, usize)> {
        let cones = self.normal_cones();
        let chambers: Vec<usize> = cones.iter().filter(|c| c.chamber(sys).is_some()).map(|c| c.vertex).collect();
        let mut out = Vec::new();
        for (i, &a) in chambers.iter().enumerate() {
            for &b in &chambers[i + 1..] {
                if cones[a].is_antipodal(&cones[b], &self.gram, eps) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Whether both polytopes have the same vertices within `eps`.
    pub fn same_vertex_set(&self, other: &Polytope, eps: f64) -> bool {
        self.vertices.len() == other.vertices.len()
            && self
                .vertices
                .iter()
                .all(|v| other.vertices.iter().any(|q| gram_distance(&self.gram, v, q) < eps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::enumerate_vertices;

    fn cube() -> Polytope {
        let g = DMatrix::identity(3, 3);
        let mut hs = Vec::new();
        for i in 0..3 {
            for sign in [-1.0, 1.0] {
                let mut n = DVector::zeros(3);
                n[i] = sign;
                hs.push(Halfspace::unlabeled(n, 1.0));
            }
        }
        let v = enumerate_vertices(&g, &hs, 1e-9).unwrap();
        let count = v.len();
        Polytope::from_halfspaces(g, hs, v, vec![None; count], 1e-9).unwrap()
    }

    #[test]
    fn cube_f_vector() {
        let c = cube();
        assert_eq!(c.f_vector(), vec![8, 12, 6]);
        assert!(c.is_simple());
        assert_eq!(c.edges().len(), 12);
    }

    #[test]
    fn redundant_halfspace_is_set_aside() {
        let g = DMatrix::identity(2, 2);
        let mut hs: Vec<Halfspace> = [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)]
            .iter()
            .map(|&(a, b)| Halfspace::unlabeled(DVector::from_vec(vec![a, b]), 1.0))
            .collect();
        hs.push(Halfspace::unlabeled(DVector::from_vec(vec![1.0, 1.0]), 5.0));
        hs.push(Halfspace::unlabeled(DVector::from_vec(vec![1.0, 1.0]), 2.0));
        let v = enumerate_vertices(&g, &hs, 1e-9).unwrap();
        let p = Polytope::from_halfspaces(g, hs, v, vec![None; 4], 1e-9).unwrap();
        assert_eq!(p.halfspaces.len(), 4);
        assert_eq!(p.redundant.len(), 2);
        assert!(p.is_simple());
    }

    #[test]
    fn cube_cones_at_opposite_corners_are_antipodal() {
        let c = cube();
        let cones = c.normal_cones();
        let g = DMatrix::identity(3, 3);
        let antipodal = |a: usize| (0..8).filter(|&b| cones[a].is_antipodal(&cones[b], &g, 1e-9)).count();
        assert!((0..8).all(|a| antipodal(a) == 1));
    }
}
