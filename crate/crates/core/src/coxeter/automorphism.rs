use super::element::{GroupElement, RootImage};
use super::system::CoxeterSystem;
use super::word::Word;

/// A bijection `μ` on the generators with `m(μ(s), μ(t)) = m(s, t)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GraphAutomorphism {
    mapping: Vec<usize>,
}

impl GraphAutomorphism {
    pub fn identity(rank: usize) -> Self {
        GraphAutomorphism { mapping: (0..rank).collect() }
    }

    /// Wrap `mapping` if it is a bijection preserving the Coxeter matrix.
    pub fn new(sys: &CoxeterSystem, mapping: Vec<usize>) -> Option<Self> {
        let n = sys.rank();
        if mapping.len() != n {
            return None;
        }
        let mut hit = vec![false; n];
        for &t in &mapping {
            if t >= n || std::mem::replace(&mut hit[t], true) {
                return None;
            }
        }
        let preserved = (0..n).all(|s| (0..n).all(|t| sys.order(mapping[s], mapping[t]) == sys.order(s, t)));
        preserved.then_some(GraphAutomorphism { mapping })
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn apply(&self, s: usize) -> usize {
        self.mapping[s]
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &t)| i == t)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GraphAutomorphism) -> GraphAutomorphism {
        GraphAutomorphism { mapping: other.mapping.iter().map(|&s| self.mapping[s]).collect() }
    }

    pub fn inverse(&self) -> GraphAutomorphism {
        let mut mapping = vec![0; self.mapping.len()];
        for (s, &t) in self.mapping.iter().enumerate() {
            mapping[t] = s;
        }
        GraphAutomorphism { mapping }
    }

    pub fn apply_word(&self, word: &Word) -> Word {
        word.map(|s| self.mapping[s])
    }

    /// The induced permutation of positive roots, `α_s ↦ α_{μ(s)}` extended
    /// linearly.
    pub fn root_permutation(&self, sys: &CoxeterSystem) -> Vec<usize> {
        let roots = sys.positive_roots();
        roots
            .iter()
            .map(|beta| {
                let mut image = beta.clone();
                for (s, &t) in self.mapping.iter().enumerate() {
                    image[t] = beta[s];
                }
                roots
                    .iter()
                    .position(|r| (r - &image).amax() < 1e-9)
                    .expect("graph automorphisms permute roots")
            })
            .collect()
    }

    /// `μ(w)`, the image under the induced group automorphism.
    pub fn apply_element(&self, sys: &CoxeterSystem, w: &GroupElement) -> GroupElement {
        let perm = self.root_permutation(sys);
        let mut inverse = vec![0; perm.len()];
        for (i, &j) in perm.iter().enumerate() {
            inverse[j] = i;
        }
        let images = (0..perm.len())
            .map(|i| {
                let im = w.image(inverse[i]);
                RootImage { index: perm[im.index as usize] as u16, negative: im.negative }
            })
            .collect();
        GroupElement::from_images(sys.id(), images)
    }
}

impl CoxeterSystem {
    /// All Coxeter-graph automorphisms, in lexicographic order of mappings.
    pub fn graph_automorphisms(&self) -> Vec<GraphAutomorphism> {
        let n = self.rank();
        let mut out = Vec::new();
        let mut mapping = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.extend_automorphism(&mut mapping, &mut used, &mut out);
        out
    }

    fn extend_automorphism(&self, mapping: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<GraphAutomorphism>) {
        let s = mapping.len();
        if s == self.rank() {
            out.push(GraphAutomorphism { mapping: mapping.clone() });
            return;
        }
        for t in 0..self.rank() {
            if used[t] {
                continue;
            }
            let consistent = (0..s).all(|r| self.order(mapping[r], t) == self.order(r, s));
            if !consistent {
                continue;
            }
            used[t] = true;
            mapping.push(t);
            self.extend_automorphism(mapping, used, out);
            mapping.pop();
            used[t] = false;
        }
    }

    /// The graph automorphism `s ↦ w0 s w0`.
    pub fn conjugation_by_w0(&self) -> GraphAutomorphism {
        let w0 = self.longest_element();
        let mapping = (0..self.rank())
            .map(|s| self.conjugate_generator(&w0, s).expect("w0 normalizes S"))
            .collect();
        GraphAutomorphism { mapping }
    }
}
