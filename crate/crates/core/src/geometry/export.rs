//! OFF and JSON renderings of a polytope.

use std::fmt::Write as _;

use nalgebra::{DMatrix, Vector3};
use serde_json::{json, Value};

use super::polytope::Polytope;
use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::format::{fmt_sig, json_number, json_vector};

/// Orthonormal coordinates `Lᵀx` for the Cholesky factor `G = LLᵀ`.
fn orthonormal(gram: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let chol = gram.clone().cholesky().ok_or_else(|| Error::Export("Gram matrix is not positive definite".into()))?;
    Ok(chol.l().transpose())
}

/// Indices sorted counterclockwise around `axis` (viewed from its tip).
fn counterclockwise(points: &[(usize, Vector3<f64>)], axis: &Vector3<f64>) -> Vec<usize> {
    let centroid: Vector3<f64> = points.iter().map(|(_, p)| p).sum::<Vector3<f64>>() / points.len() as f64;
    let first = (points[0].1 - centroid).normalize();
    let second = axis.normalize().cross(&first);
    let mut with_angle: Vec<(f64, usize)> = points
        .iter()
        .map(|(i, p)| {
            let d = p - centroid;
            (d.dot(&second).atan2(d.dot(&first)), *i)
        })
        .collect();
    with_angle.sort_by(|a, b| a.0.total_cmp(&b.0));
    with_angle.into_iter().map(|(_, i)| i).collect()
}

/// ASCII OFF for polytopes of dimension 2 or 3, in orthonormal coordinates.
/// Faces are oriented counterclockwise seen from outside; a polygon is a
/// single face in the plane `z = 0`.
pub fn to_off(poly: &Polytope) -> Result<String> {
    let dim = poly.dimension();
    if !(2..=3).contains(&dim) {
        return Err(Error::Export(format!("OFF export needs dimension 2 or 3, got {dim}")));
    }
    let basis = orthonormal(&poly.gram)?;
    let coords: Vec<Vector3<f64>> = poly
        .vertices
        .iter()
        .map(|v| {
            let y = &basis * v;
            Vector3::new(y[0], y[1], if dim == 3 { y[2] } else { 0.0 })
        })
        .collect();

    let faces: Vec<Vec<usize>> = if dim == 2 {
        let all: Vec<(usize, Vector3<f64>)> = coords.iter().copied().enumerate().collect();
        vec![counterclockwise(&all, &Vector3::z())]
    } else {
        (0..poly.halfspaces.len())
            .map(|f| {
                let n = &basis * &poly.halfspaces[f].normal;
                let axis = Vector3::new(n[0], n[1], n[2]);
                let members: Vec<(usize, Vector3<f64>)> =
                    poly.facet_vertices(f).into_iter().map(|v| (v, coords[v])).collect();
                counterclockwise(&members, &axis)
            })
            .collect()
    };

    let edges = if dim == 3 { poly.edges().len() } else { poly.vertices.len() };
    let mut out = String::from("OFF\n");
    writeln!(out, "{} {} {}", coords.len(), faces.len(), edges).expect("write to string");
    for p in &coords {
        writeln!(out, "{} {} {}", fmt_sig(p.x), fmt_sig(p.y), fmt_sig(p.z)).expect("write to string");
    }
    for face in &faces {
        let ids: Vec<String> = face.iter().map(usize::to_string).collect();
        writeln!(out, "{} {}", face.len(), ids.join(" ")).expect("write to string");
    }
    Ok(out)
}

/// `{vertices, facets: [{label: {x, s}, normal, offset, vertex_ids}], f_vector}`.
///
/// `x` is the label word of the minimal-length coset representative, as a
/// list of generator labels; unlabeled facets carry `label: null`.
pub fn polytope_json(sys: &CoxeterSystem, poly: &Polytope) -> Value {
    let vertices: Vec<Value> = poly.vertices.iter().map(json_vector).collect();
    let facets: Vec<Value> = poly
        .halfspaces
        .iter()
        .enumerate()
        .map(|(f, h)| {
            let label = h.label.as_ref().map_or(Value::Null, |l| {
                json!({
                    "x": sys.word_labels(&sys.reduced_word(&l.coset)),
                    "s": sys.labels()[l.generator],
                })
            });
            json!({
                "label": label,
                "normal": json_vector(&h.normal),
                "offset": json_number(h.offset),
                "vertex_ids": poly.facet_vertices(f),
            })
        })
        .collect();
    json!({
        "vertices": vertices,
        "facets": facets,
        "f_vector": poly.f_vector(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{BasePoint, Realization};

    #[test]
    fn pentagon_off() {
        let sys = CoxeterSystem::from_type("A2").unwrap();
        let r = Realization::new(&sys, BasePoint::balanced(2)).unwrap();
        let ass = r.associahedron(&sys.parse_word("s1,s2").unwrap()).unwrap();
        let off = to_off(&ass).unwrap();
        let lines: Vec<&str> = off.lines().collect();
        assert_eq!(lines[0], "OFF");
        assert_eq!(lines[1], "5 1 5");
        assert!(lines[7].starts_with("5 "));
    }

    #[test]
    fn a3_permutahedron_off_faces_point_outward() {
        let sys = CoxeterSystem::from_type("A3").unwrap();
        let r = Realization::new(&sys, BasePoint::balanced(3)).unwrap();
        let perm = r.permutahedron();
        let off = to_off(&perm).unwrap();
        let lines: Vec<&str> = off.lines().collect();
        assert_eq!(lines[1], "24 14 36");
        let pts: Vec<Vector3<f64>> = lines[2..26]
            .iter()
            .map(|l| {
                let v: Vec<f64> = l.split(' ').map(|t| t.parse().unwrap()).collect();
                Vector3::new(v[0], v[1], v[2])
            })
            .collect();
        let centroid: Vector3<f64> = pts.iter().sum::<Vector3<f64>>() / 24.0;
        for line in &lines[26..] {
            let ids: Vec<usize> = line.split(' ').skip(1).map(|t| t.parse().unwrap()).collect();
            let n = (pts[ids[1]] - pts[ids[0]]).cross(&(pts[ids[2]] - pts[ids[1]]));
            assert!(n.dot(&(pts[ids[0]] - centroid)) > 0.0);
        }
    }

    #[test]
    fn rank_four_off_is_rejected() {
        let sys = CoxeterSystem::from_type("A1xA1xA1xA1").unwrap();
        let r = Realization::new(&sys, BasePoint::balanced(4)).unwrap();
        assert!(matches!(to_off(&r.permutahedron()), Err(Error::Export(_))));
    }

    #[test]
    fn json_has_schema_fields() {
        let sys = CoxeterSystem::from_type("A2").unwrap();
        let r = Realization::new(&sys, BasePoint::balanced(2)).unwrap();
        let ass = r.associahedron(&sys.parse_word("s1,s2").unwrap()).unwrap();
        let v = polytope_json(&sys, &ass);
        assert_eq!(v["vertices"].as_array().unwrap().len(), 5);
        assert_eq!(v["facets"].as_array().unwrap().len(), 5);
        assert_eq!(v["f_vector"], json!([5, 5]));
        assert!(v["facets"][0]["label"]["s"].is_string());
    }
}
