//! Finite Coxeter systems, their unit-length root systems, and word-free
//! group arithmetic on signed root permutations.

mod automorphism;
mod element;
mod system;
mod types;
mod word;

pub use automorphism::GraphAutomorphism;
pub use element::{GroupElement, RootImage};
pub use system::{CoxeterElement, CoxeterSystem, DEFAULT_ROOT_CAP, INFINITE_ORDER, ROOT_SNAP};
pub use types::{named_matrix, MatrixSpec};
pub use word::Word;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn sys(code: &str) -> CoxeterSystem {
        CoxeterSystem::from_type(code).unwrap()
    }

    #[test]
    fn a2_has_three_positive_roots() {
        let a2 = CoxeterSystem::from_matrix(vec![vec![1, 3], vec![3, 1]]).unwrap();
        assert_eq!(a2.positive_root_count(), 3);
        assert_eq!(a2.longest_element().length(), 3);
        assert_eq!(a2.group_order(), 6);
    }

    #[test]
    fn a1xa1_is_two_orthogonal_roots() {
        let s = CoxeterSystem::from_matrix(vec![vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(s.positive_root_count(), 2);
        assert_eq!(s.components().len(), 2);
        assert_eq!(s.gram()[(0, 1)], 0.0);
    }

    #[test]
    fn b2_simple_roots_at_three_quarter_pi() {
        let b2 = sys("B2");
        let g = b2.gram();
        assert_eq!(g[(0, 0)], 1.0);
        assert_eq!(g[(1, 1)], 1.0);
        // (1,0) and (-1/√2, 1/√2) have inner product -1/√2.
        assert!((g[(0, 1)] + std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((g[(0, 1)].acos() - 3.0 * std::f64::consts::FRAC_PI_4).abs() < 1e-12);
    }

    #[test]
    fn invalid_matrices_are_rejected() {
        let bad = [
            vec![vec![1, 3], vec![2, 1]],
            vec![vec![2, 3], vec![3, 1]],
            vec![vec![1, 1], vec![1, 1]],
            vec![vec![1, 3, 2], vec![3, 1]],
        ];
        for m in bad {
            assert!(matches!(CoxeterSystem::from_matrix(m), Err(Error::InvalidMatrix(_))));
        }
    }

    #[test]
    fn affine_and_hyperbolic_matrices_are_non_finite() {
        let affine_a2 = vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]];
        assert!(matches!(CoxeterSystem::from_matrix(affine_a2), Err(Error::NonFinite(_))));
        let affine_a1 = vec![vec![1, INFINITE_ORDER], vec![INFINITE_ORDER, 1]];
        assert!(matches!(CoxeterSystem::from_matrix(affine_a1), Err(Error::NonFinite(_))));
        let hyperbolic = vec![vec![1, 7, 2], vec![7, 1, 3], vec![2, 3, 1]];
        assert!(matches!(CoxeterSystem::from_matrix(hyperbolic), Err(Error::NonFinite(_))));
    }

    #[test]
    fn root_cap_triggers_non_finite() {
        let labels = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        let a3 = named_matrix("A3").unwrap();
        assert!(matches!(CoxeterSystem::with_labels(labels, a3, 5), Err(Error::NonFinite(_))));
    }

    #[test]
    fn compose_basics() {
        let a2 = sys("A2");
        let s1 = a2.generator(0).clone();
        let s2 = a2.generator(1).clone();
        assert!(s1.compose(&s1).unwrap().is_identity());
        assert_eq!(s1.compose(&s2).unwrap().length(), 2);
        let w0 = a2.longest_element();
        assert!(w0.compose(&w0).unwrap().is_identity());
        let other = sys("A2");
        assert_eq!(s1.compose(other.generator(0)), Err(Error::SystemMismatch));
    }

    #[test]
    fn longest_elements() {
        let a2 = sys("A2");
        assert_eq!(a2.longest_element(), a2.evaluate(&a2.parse_word("s1,s2,s1").unwrap()));
        let a3 = sys("A3");
        let w0 = a3.longest_element();
        assert_eq!(w0.length(), 6);
        assert_eq!(w0, a3.evaluate(&a3.parse_word("s2,s1,s3,s2,s1,s3").unwrap()));
        let a1 = sys("A1");
        assert_eq!(a1.longest_element(), *a1.generator(0));
    }

    #[test]
    fn inversion_sets() {
        let a3 = sys("A3");
        assert!(a3.inversions(&a3.identity()).is_empty());
        assert_eq!(a3.inversions(&a3.longest_element()).len(), 6);
        let i_s1: Vec<usize> = a3.inversions(a3.generator(0)).into_iter().collect();
        assert_eq!(i_s1, vec![0]);
    }

    #[test]
    fn coxeter_element_counts() {
        assert_eq!(sys("A3").coxeter_elements().len(), 4);
        assert_eq!(sys("A2").coxeter_elements().len(), 2);
        assert_eq!(sys("A1xA1").coxeter_elements().len(), 1);
        assert_eq!(sys("D4").coxeter_elements().len(), 8);
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(sys("A3").graph_automorphisms().len(), 2);
        assert_eq!(sys("B3").graph_automorphisms().len(), 1);
        assert_eq!(sys("D4").graph_automorphisms().len(), 6);
        assert_eq!(sys("F4").graph_automorphisms().len(), 2);
        assert_eq!(sys("E6").graph_automorphisms().len(), 2);
        assert_eq!(sys("A1xA1").graph_automorphisms().len(), 2);
    }

    #[test]
    fn conjugation_by_longest_element() {
        assert!(sys("B3").conjugation_by_w0().is_identity());
        assert!(sys("A1").conjugation_by_w0().is_identity());
        assert!(sys("D4").conjugation_by_w0().is_identity());
        assert_eq!(sys("A2").conjugation_by_w0().mapping(), [1, 0]);
        assert_eq!(sys("A4").conjugation_by_w0().mapping(), [3, 2, 1, 0]);
        assert_eq!(sys("D5").conjugation_by_w0().mapping(), [0, 2, 1, 3, 4]);
    }

    #[test]
    fn group_orders() {
        for (code, order) in [
            ("A3", 24u128),
            ("B3", 48),
            ("H3", 120),
            ("D4", 192),
            ("F4", 1152),
            ("H4", 14400),
            ("E6", 51840),
            ("E7", 2903040),
            ("E8", 696729600),
            ("I2(7)", 14),
            ("A2xA1", 12),
        ] {
            assert_eq!(sys(code).group_order(), order, "{code}");
        }
    }

    #[test]
    fn reduced_word_is_lexicographically_first() {
        let a3 = sys("A3");
        let w0 = a3.longest_element();
        assert_eq!(a3.format_word(&a3.reduced_word(&w0)), "s1s2s1s3s2s1");
        assert_eq!(a3.format_word(&a3.reduced_word(&a3.identity())), "e");
    }

    #[test]
    fn reflections_are_involutions_with_odd_length() {
        let h3 = sys("H3");
        for r in 0..h3.positive_root_count() {
            let t = h3.reflection(r);
            assert!(t.compose(&t).unwrap().is_identity());
            assert_eq!(t.length() % 2, 1);
        }
    }
}
