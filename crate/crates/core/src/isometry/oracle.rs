//! Brute-force search for a linear isometry between two vertex sets.

use nalgebra::{DMatrix, DVector};

use super::{LinearIsometry, Provenance};
use crate::error::{Error, Result};
use crate::geometry::Polytope;

/// Norm and sorted distances to all other vertices.
struct Signature {
    norm: f64,
    distances: Vec<f64>,
}

impl Signature {
    fn matches(&self, other: &Signature, eps: f64) -> bool {
        (self.norm - other.norm).abs() < eps
            && self.distances.iter().zip(&other.distances).all(|(a, b)| (a - b).abs() < eps)
    }
}

fn inner(gram: &DMatrix<f64>, a: &DVector<f64>, b: &DVector<f64>) -> f64 {
    (a.transpose() * gram * b)[(0, 0)]
}

fn signatures(poly: &Polytope) -> Vec<Signature> {
    let g = &poly.gram;
    poly.vertices
        .iter()
        .map(|v| {
            let mut distances: Vec<f64> = poly
                .vertices
                .iter()
                .map(|q| {
                    let d = v - q;
                    inner(g, &d, &d).max(0.0).sqrt()
                })
                .collect();
            distances.sort_by(f64::total_cmp);
            Signature { norm: inner(g, v, v).sqrt(), distances }
        })
        .collect()
}

/// A linear map preserving the Gram form and sending the vertices of `p1`
/// onto those of `p2`, or `None`.
///
/// A linearly independent frame of `p1` vertices is matched against every
/// compatible frame of `p2` vertices: same norm and distance multiset, same
/// pairwise inner products. Each complete match determines a map, which is
/// accepted once it preserves the form and the vertex set.
pub fn congruence_oracle(p1: &Polytope, p2: &Polytope, eps: f64) -> Result<Option<LinearIsometry>> {
    let n = p1.dimension();
    if p2.dimension() != n || p1.vertices.len() != p2.vertices.len() {
        return Ok(None);
    }
    let s1 = signatures(p1);
    let s2 = signatures(p2);
    let candidates: Vec<Vec<usize>> =
        s1.iter().map(|a| (0..s2.len()).filter(|&j| a.matches(&s2[j], eps)).collect()).collect();

    // Rarest vertices first; keep those that extend the linear span.
    let mut by_rarity: Vec<usize> = (0..p1.vertices.len()).collect();
    by_rarity.sort_by_key(|&i| (candidates[i].len(), i));
    let mut frame: Vec<usize> = Vec::with_capacity(n);
    for &i in &by_rarity {
        let mut trial: Vec<&DVector<f64>> = frame.iter().map(|&f| &p1.vertices[f]).collect();
        trial.push(&p1.vertices[i]);
        let m = DMatrix::from_columns(&trial.iter().map(|v| (*v).clone()).collect::<Vec<_>>());
        if m.rank(1e-7) == trial.len() {
            frame.push(i);
            if frame.len() == n {
                break;
            }
        }
    }
    if frame.len() < n {
        return Err(Error::DegenerateInput("vertices do not span the space".into()));
    }
    if frame.iter().any(|&i| candidates[i].is_empty()) {
        return Ok(None);
    }

    let a = DMatrix::from_columns(&frame.iter().map(|&i| p1.vertices[i].clone()).collect::<Vec<_>>());
    let a_inv = a.clone().try_inverse().ok_or_else(|| Error::DegenerateInput("singular frame".into()))?;
    let gram_a: Vec<Vec<f64>> = frame
        .iter()
        .map(|&i| frame.iter().map(|&j| inner(&p1.gram, &p1.vertices[i], &p1.vertices[j])).collect())
        .collect();

    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    Ok(search(p1, p2, &frame, &candidates, &gram_a, &a_inv, eps, &mut chosen))
}

#[allow(clippy::too_many_arguments)]
fn search(
    p1: &Polytope,
    p2: &Polytope,
    frame: &[usize],
    candidates: &[Vec<usize>],
    gram_a: &[Vec<f64>],
    a_inv: &DMatrix<f64>,
    eps: f64,
    chosen: &mut Vec<usize>,
) -> Option<LinearIsometry> {
    let k = chosen.len();
    if k == frame.len() {
        let b = DMatrix::from_columns(&chosen.iter().map(|&j| p2.vertices[j].clone()).collect::<Vec<_>>());
        let iso = LinearIsometry { matrix: b * a_inv, provenance: Provenance::Oracle };
        return (iso.preserves_gram(&p1.gram, eps) && iso.maps_vertex_set(p1, p2, eps)).then_some(iso);
    }
    for &j in &candidates[frame[k]] {
        if chosen.contains(&j) {
            continue;
        }
        let consistent =
            (0..k).all(|i| (inner(&p2.gram, &p2.vertices[j], &p2.vertices[chosen[i]]) - gram_a[k][i]).abs() < eps);
        if !consistent {
            continue;
        }
        chosen.push(j);
        if let Some(found) = search(p1, p2, frame, candidates, gram_a, a_inv, eps, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterSystem;
    use crate::geometry::{BasePoint, Realization};

    #[test]
    fn a_polytope_is_congruent_to_itself() {
        let sys = CoxeterSystem::from_type("A3").unwrap();
        let real = Realization::new(&sys, BasePoint::balanced(3)).unwrap();
        let ass = real.associahedron(&sys.parse_word("s1,s2,s3").unwrap()).unwrap();
        let iso = congruence_oracle(&ass, &ass, 1e-9).unwrap().unwrap();
        assert!(iso.maps_vertex_set(&ass, &ass, 1e-9));
    }

    #[test]
    fn a2_pentagons_are_congruent() {
        let sys = CoxeterSystem::from_type("A2").unwrap();
        let real = Realization::new(&sys, BasePoint::balanced(2)).unwrap();
        let p = real.associahedron(&sys.parse_word("s1,s2").unwrap()).unwrap();
        let q = real.associahedron(&sys.parse_word("s2,s1").unwrap()).unwrap();
        assert!(congruence_oracle(&p, &q, 1e-9).unwrap().is_some());
    }

    #[test]
    fn a3_linear_and_bipartite_are_not_congruent() {
        let sys = CoxeterSystem::from_type("A3").unwrap();
        let real = Realization::new(&sys, BasePoint::balanced(3)).unwrap();
        let p = real.associahedron(&sys.parse_word("s1,s2,s3").unwrap()).unwrap();
        let q = real.associahedron(&sys.parse_word("s2,s1,s3").unwrap()).unwrap();
        assert!(congruence_oracle(&p, &q, 1e-9).unwrap().is_none());
    }
}
