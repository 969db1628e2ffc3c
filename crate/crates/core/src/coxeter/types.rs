//! Named finite types and the JSON matrix format.
//!
//! Labelling conventions (generators `s1..sn`):
//!
//! * `A_n`: path `s1 - s2 - … - sn`.
//! * `B_n`: path with `m(s_{n-1}, s_n) = 4`.
//! * `D_n`: `s1` is the branch node, joined to `s2`, `s3` and `s4`; for
//!   `n > 4` the path `s4 - s5 - … - sn` continues from `s4`.
//! * `E_n`: `s1 - s3 - s4 - … - sn` with `s2` attached to `s4`.
//! * `F4`: `s1 - s2 =4= s3 - s4`.
//! * `H3`, `H4`: `s1 =5= s2 - s3 (- s4)`.
//! * `I2(m)`: `s1 =m= s2`.
//!
//! Products are written `A2xA1`; generators are numbered left to right.

use serde::{Deserialize, Serialize};

use super::system::{CoxeterSystem, DEFAULT_ROOT_CAP, INFINITE_ORDER};
use crate::error::{Error, Result};

/// `{"labels": [...], "m": [[...]]}`; `m` entries of `0` or `null` mean `∞`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct MatrixSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub m: Vec<Vec<Option<u32>>>,
}

impl MatrixSpec {
    pub fn build(&self) -> Result<CoxeterSystem> {
        let matrix: Vec<Vec<u32>> = self
            .m
            .iter()
            .map(|row| row.iter().map(|e| e.unwrap_or(INFINITE_ORDER)).collect())
            .collect();
        let labels = match &self.labels {
            Some(l) => l.clone(),
            None => (1..=matrix.len()).map(|i| format!("s{i}")).collect(),
        };
        CoxeterSystem::with_labels(labels, matrix, DEFAULT_ROOT_CAP)
    }
}

impl CoxeterSystem {
    /// Parse a JSON matrix description.
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: MatrixSpec =
            serde_json::from_str(text).map_err(|e| Error::InvalidMatrix(e.to_string()))?;
        spec.build()
    }

    /// Build a named type such as `A3`, `H3`, `I2(7)` or `A2xA1`.
    pub fn from_type(code: &str) -> Result<Self> {
        let mut parts = code.split(['x', 'X', '×']).map(str::trim);
        let first = parts.next().ok_or_else(|| Error::UnknownType(code.into()))?;
        let mut sys = CoxeterSystem::from_matrix(named_matrix(first)?)?;
        for part in parts {
            sys = sys.product(&CoxeterSystem::from_matrix(named_matrix(part)?)?)?;
        }
        Ok(sys)
    }
}

/// Coxeter matrix of an irreducible named type.
pub fn named_matrix(code: &str) -> Result<Vec<Vec<u32>>> {
    let unknown = || Error::UnknownType(code.to_string());
    let code = code.trim();
    if let Some(rest) = code.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
        let m: u32 = rest.trim().parse().map_err(|_| unknown())?;
        if m < 2 {
            return Err(unknown());
        }
        return Ok(vec![vec![1, m], vec![m, 1]]);
    }
    if code.len() < 2 || !code.is_char_boundary(1) {
        return Err(unknown());
    }
    let (family, n) = code.split_at(1);
    let n: usize = n.parse().map_err(|_| unknown())?;
    let mut edges: Vec<(usize, usize, u32)> = Vec::new();
    let path = |len: usize| (1..len).map(|i| (i - 1, i, 3)).collect::<Vec<_>>();
    match (family, n) {
        ("A", n) if n >= 1 => edges = path(n),
        ("B", n) if n >= 2 => {
            edges = path(n);
            edges.last_mut().unwrap().2 = 4;
        }
        ("D", n) if n >= 4 => {
            edges.extend([(0, 1, 3), (0, 2, 3), (0, 3, 3)]);
            edges.extend((4..n).map(|i| (i - 1, i, 3)));
        }
        ("E", n) if (6..=8).contains(&n) => {
            edges.extend([(0, 2, 3), (1, 3, 3)]);
            edges.extend((3..n).map(|i| (i - 1, i, 3)));
        }
        ("F", 4) => edges = vec![(0, 1, 3), (1, 2, 4), (2, 3, 3)],
        ("G", 2) => edges = vec![(0, 1, 6)],
        ("H", n) if n == 3 || n == 4 => {
            edges = path(n);
            edges[0].2 = 5;
        }
        _ => return Err(unknown()),
    }
    let mut m = vec![vec![2u32; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for (a, b, v) in edges {
        m[a][b] = v;
        m[b][a] = v;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_types_have_expected_root_counts() {
        for (code, n) in [("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("H4", 60)] {
            let sys = CoxeterSystem::from_type(code).unwrap();
            assert_eq!(sys.positive_root_count(), n, "{code}");
        }
    }

    #[test]
    fn product_labels_are_renumbered() {
        let sys = CoxeterSystem::from_type("A2xA1").unwrap();
        assert_eq!(sys.labels(), ["s1", "s2", "s3"]);
        assert_eq!(sys.components(), [vec![0, 1], vec![2]]);
    }

    #[test]
    fn json_null_means_infinity() {
        let err = CoxeterSystem::from_json(r#"{"m": [[1, null], [null, 1]]}"#).unwrap_err();
        assert!(matches!(err, Error::NonFinite(_)));
        let sys = CoxeterSystem::from_json(r#"{"labels": ["a", "b"], "m": [[1, 3], [3, 1]]}"#).unwrap();
        assert_eq!(sys.labels(), ["a", "b"]);
    }

    #[test]
    fn unknown_codes_are_rejected() {
        for code in ["Z3", "D3", "E9", "I2(1)", "A0", "H5", ""] {
            assert!(CoxeterSystem::from_type(code).is_err(), "{code}");
        }
    }
}
