//! Brute-force vertex enumeration for small halfspace systems.

use itertools::Itertools;
use nalgebra::{DMatrix, DVector};

use super::halfspace::Halfspace;
use crate::error::{Error, Result};

/// Pivots below this are treated as singular.
const PIVOT_TOLERANCE: f64 = 1e-10;

/// Normalized inequality `a · x ≤ b` in coordinates, with `‖a‖` the
/// Euclidean norm of the normal (so `a · x − b` is a signed distance).
#[derive(Clone, Debug)]
pub(crate) struct Row {
    pub a: Vec<f64>,
    pub b: f64,
}

pub(crate) fn rows(gram: &DMatrix<f64>, halfspaces: &[Halfspace]) -> Result<Vec<Row>> {
    halfspaces
        .iter()
        .map(|h| {
            let covector = gram * &h.normal;
            let norm = covector.dot(&h.normal).max(0.0).sqrt();
            if norm == 0.0 || !norm.is_finite() {
                return Err(Error::UnboundedOrDegenerate("zero normal vector".into()));
            }
            Ok(Row { a: (covector / norm).iter().copied().collect(), b: h.offset / norm })
        })
        .collect()
}

fn dot(a: &[f64], x: &[f64]) -> f64 {
    a.iter().zip(x).map(|(p, q)| p * q).sum()
}

/// Solve the square system by Gaussian elimination with partial pivoting.
fn solve(rows: &[&Row]) -> Option<Vec<f64>> {
    let n = rows.len();
    let mut m: Vec<Vec<f64>> = rows
        .iter()
        .map(|r| {
            let mut v = r.a.clone();
            v.push(r.b);
            v
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[pivot][col].abs() < PIVOT_TOLERANCE {
            return None;
        }
        m.swap(col, pivot);
        for i in col + 1..n {
            let f = m[i][col] / m[col][col];
            if f != 0.0 {
                let (top, bottom) = m.split_at_mut(i);
                for (a, b) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                    *a -= f * b;
                }
            }
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|k| m[i][k] * x[k]).sum();
        x[i] = (m[i][n] - s) / m[i][i];
    }
    Some(x)
}

/// Directions `d` with `a_j · d = 0` on `n − 1` rows, when those rows have
/// rank `n − 1`.
fn null_direction(rows: &[&Row], n: usize) -> Option<DVector<f64>> {
    let m = DMatrix::from_fn(n, n, |i, j| if i < rows.len() { rows[i].a[j] } else { 0.0 });
    let svd = m.svd(false, true);
    let v_t = svd.v_t?;
    let mut singular: Vec<(usize, f64)> = svd.singular_values.iter().copied().enumerate().collect();
    singular.sort_by(|a, b| a.1.total_cmp(&b.1));
    if singular.len() > 1 && singular[1].1 < PIVOT_TOLERANCE {
        return None;
    }
    Some(v_t.row(singular[0].0).transpose())
}

/// Every vertex of `{x : ⟨x, normal_i⟩ ≤ offset_i}`.
///
/// All `rank`-subsets of boundary hyperplanes are solved; solutions feasible
/// for every inequality within `eps` are kept and deduplicated within `eps`.
/// Fails when no vertex exists or the region contains a ray.
pub fn enumerate_vertices(gram: &DMatrix<f64>, halfspaces: &[Halfspace], eps: f64) -> Result<Vec<DVector<f64>>> {
    let n = gram.nrows();
    let rows = rows(gram, halfspaces)?;
    if rows.len() < n + 1 {
        return Err(Error::UnboundedOrDegenerate(format!(
            "{} halfspaces cannot bound a region of dimension {n}",
            rows.len()
        )));
    }
    let feasible = |x: &[f64]| rows.iter().all(|r| dot(&r.a, x) <= r.b + eps);

    let mut vertices: Vec<Vec<f64>> = Vec::new();
    for subset in rows.iter().combinations(n) {
        let Some(x) = solve(&subset) else { continue };
        if !feasible(&x) {
            continue;
        }
        let dup = vertices.iter().any(|v| {
            let d = DVector::from_iterator(n, v.iter().zip(&x).map(|(p, q)| p - q));
            (d.transpose() * gram * &d)[(0, 0)].max(0.0).sqrt() < eps
        });
        if !dup {
            vertices.push(x);
        }
    }
    if vertices.is_empty() {
        return Err(Error::UnboundedOrDegenerate("no vertices".into()));
    }

    for subset in rows.iter().combinations(n - 1) {
        let Some(d) = null_direction(&subset, n) else { continue };
        for dir in [d.clone(), -d] {
            let recedes = rows.iter().all(|r| dot(&r.a, dir.as_slice()) <= eps);
            if recedes {
                return Err(Error::UnboundedOrDegenerate("recession direction found".into()));
            }
        }
    }
    Ok(vertices.into_iter().map(DVector::from_vec).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex() -> Vec<Halfspace> {
        // x ≥ 0, y ≥ 0, z ≥ 0, x + y + z ≤ 1.
        let mut hs: Vec<Halfspace> = (0..3)
            .map(|i| {
                let mut n = DVector::zeros(3);
                n[i] = -1.0;
                Halfspace::unlabeled(n, 0.0)
            })
            .collect();
        hs.push(Halfspace::unlabeled(DVector::from_vec(vec![1.0, 1.0, 1.0]), 1.0));
        hs
    }

    #[test]
    fn simplex_has_four_vertices() {
        let g = DMatrix::identity(3, 3);
        let v = enumerate_vertices(&g, &simplex(), 1e-9).unwrap();
        assert_eq!(v.len(), 4);
    }

    #[test]
    fn dropping_a_facet_of_a_simplex_is_unbounded() {
        let g = DMatrix::identity(3, 3);
        for drop in 0..4 {
            let mut hs = simplex();
            hs.remove(drop);
            let err = enumerate_vertices(&g, &hs, 1e-9).unwrap_err();
            assert!(matches!(err, Error::UnboundedOrDegenerate(_)), "drop {drop}");
        }
    }

    #[test]
    fn pentagon_from_five_halfspaces() {
        // Regular pentagon: normals at angles 2πk/5, offset 1.
        let g = DMatrix::identity(2, 2);
        let hs: Vec<Halfspace> = (0..5)
            .map(|k| {
                let t = 2.0 * std::f64::consts::PI * k as f64 / 5.0;
                Halfspace::unlabeled(DVector::from_vec(vec![t.cos(), t.sin()]), 1.0)
            })
            .collect();
        assert_eq!(enumerate_vertices(&g, &hs, 1e-9).unwrap().len(), 5);
    }

    #[test]
    fn octahedron_vertices_are_deduplicated() {
        // Each octahedron vertex lies on four facets.
        let g = DMatrix::identity(3, 3);
        let mut hs = Vec::new();
        for sx in [-1.0, 1.0] {
            for sy in [-1.0, 1.0] {
                for sz in [-1.0, 1.0] {
                    hs.push(Halfspace::unlabeled(DVector::from_vec(vec![sx, sy, sz]), 1.0));
                }
            }
        }
        assert_eq!(enumerate_vertices(&g, &hs, 1e-9).unwrap().len(), 6);
    }
}
