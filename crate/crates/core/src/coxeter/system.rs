use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::atomic::{AtomicU64, Ordering};

use itertools::Itertools;
use nalgebra::{DMatrix, DVector};

use super::element::{GroupElement, RootImage};
use super::word::Word;
use crate::error::{Error, Result};

static NEXT_SYSTEM_ID: AtomicU64 = AtomicU64::new(1);

/// Default bound on the number of positive roots generated before the
/// matrix is declared non-finite; `|Φ(E8)| = 240`.
pub const DEFAULT_ROOT_CAP: usize = 240;

/// Tolerance used to identify root vectors during closure.
pub const ROOT_SNAP: f64 = 1e-9;

/// `m(s,t)` entry meaning `∞`.
pub const INFINITE_ORDER: u32 = 0;

/// A finite Coxeter system with a unit-length root system.
///
/// Vectors of `V` are stored in simple-root coordinates; every inner product
/// goes through [`gram`](Self::gram).
#[derive(Clone, Debug)]
pub struct CoxeterSystem {
    id: u64,
    labels: Vec<String>,
    matrix: Vec<Vec<u32>>,
    gram: DMatrix<f64>,
    gram_inverse: DMatrix<f64>,
    roots: Vec<DVector<f64>>,
    tables: Vec<Vec<RootImage>>,
    components: Vec<Vec<usize>>,
    generators: Vec<GroupElement>,
}

/// A Coxeter element together with the word it was first found as.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterElement {
    pub word: Word,
    pub element: GroupElement,
}

impl CoxeterSystem {
    /// Build the system of a Coxeter matrix with labels `s1..sn`.
    pub fn from_matrix(matrix: Vec<Vec<u32>>) -> Result<Self> {
        let labels = (1..=matrix.len()).map(|i| format!("s{i}")).collect();
        Self::with_labels(labels, matrix, DEFAULT_ROOT_CAP)
    }

    /// Build a system with explicit generator labels and root cap.
    pub fn with_labels(labels: Vec<String>, matrix: Vec<Vec<u32>>, root_cap: usize) -> Result<Self> {
        validate_matrix(&labels, &matrix)?;
        let n = matrix.len();
        let gram = DMatrix::from_fn(n, n, |i, j| gram_entry(matrix[i][j]));

        // A finite reflection group has a positive definite invariant form.
        if gram.clone().cholesky().is_none() {
            return Err(Error::NonFinite("Gram matrix is not positive definite".into()));
        }
        let gram_inverse = gram.clone().try_inverse().ok_or(Error::SingularGram)?;

        let roots = close_roots(&gram, root_cap)?;
        let tables = (0..n)
            .map(|s| {
                roots
                    .iter()
                    .enumerate()
                    .map(|(i, beta)| {
                        if i == s {
                            RootImage { index: s as u16, negative: true }
                        } else {
                            let image = reflect(&gram, beta, s);
                            let j = find_root(&roots, &image).expect("root system closed");
                            RootImage::positive(j)
                        }
                    })
                    .collect()
            })
            .collect::<Vec<Vec<RootImage>>>();

        let id = NEXT_SYSTEM_ID.fetch_add(1, Ordering::Relaxed);
        let generators = tables
            .iter()
            .map(|t| GroupElement::from_images(id, t.clone()))
            .collect();
        let components = connected_components(&matrix);
        Ok(CoxeterSystem {
            id,
            labels,
            matrix,
            gram,
            gram_inverse,
            roots,
            tables,
            components,
            generators,
        })
    }

    /// Direct product; generators of `other` follow those of `self` and are
    /// renumbered `s{k}` when both use default labels.
    pub fn product(&self, other: &CoxeterSystem) -> Result<Self> {
        let n = self.rank() + other.rank();
        let mut matrix = vec![vec![2u32; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                matrix[i][j] = self.matrix[i][j];
            }
        }
        let off = self.rank();
        for i in 0..other.rank() {
            for j in 0..other.rank() {
                matrix[off + i][off + j] = other.matrix[i][j];
            }
        }
        let default = |sys: &CoxeterSystem| {
            sys.labels.iter().enumerate().all(|(i, l)| *l == format!("s{}", i + 1))
        };
        let labels = if default(self) && default(other) {
            (1..=n).map(|i| format!("s{i}")).collect()
        } else {
            self.labels.iter().chain(other.labels.iter()).cloned().collect()
        };
        Self::with_labels(labels, matrix, DEFAULT_ROOT_CAP.max(self.positive_root_count() + other.positive_root_count()))
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    /// `m(s,t)`.
    pub fn order(&self, s: usize, t: usize) -> u32 {
        self.matrix[s][t]
    }

    pub fn commute(&self, s: usize, t: usize) -> bool {
        s != t && self.matrix[s][t] == 2
    }

    pub fn gram(&self) -> &DMatrix<f64> {
        &self.gram
    }

    pub fn gram_inverse(&self) -> &DMatrix<f64> {
        &self.gram_inverse
    }

    /// `⟨x, y⟩` for vectors in simple-root coordinates.
    pub fn inner(&self, x: &DVector<f64>, y: &DVector<f64>) -> f64 {
        (x.transpose() * &self.gram * y)[(0, 0)]
    }

    pub fn norm(&self, x: &DVector<f64>) -> f64 {
        self.inner(x, x).max(0.0).sqrt()
    }

    pub fn positive_roots(&self) -> &[DVector<f64>] {
        &self.roots
    }

    pub fn positive_root_count(&self) -> usize {
        self.roots.len()
    }

    /// Signed permutation of positive roots induced by simple reflection `s`.
    pub fn reflection_table(&self, s: usize) -> &[RootImage] {
        &self.tables[s]
    }

    /// Connected components of the Coxeter graph, each sorted, ordered by
    /// smallest generator.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.id, self.roots.len())
    }

    pub fn generator(&self, s: usize) -> &GroupElement {
        &self.generators[s]
    }

    /// Index of the generator named `label`.
    pub fn generator_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Parse a comma-separated list of generator labels, e.g. `s2,s3,s1`.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "e" {
            return Ok(Word::empty());
        }
        text.split(',')
            .map(|tok| self.generator_index(tok.trim()))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Concatenated labels, `e` for the empty word.
    pub fn format_word(&self, word: &Word) -> String {
        if word.is_empty() {
            return "e".to_string();
        }
        word.letters().iter().map(|&s| self.labels[s].as_str()).collect()
    }

    pub fn word_labels(&self, word: &Word) -> Vec<String> {
        word.letters().iter().map(|&s| self.labels[s].clone()).collect()
    }

    pub fn evaluate(&self, word: &Word) -> GroupElement {
        word.letters()
            .iter()
            .fold(self.identity(), |w, &s| self.mul_generator(&w, s))
    }

    /// `w · s`.
    pub fn mul_generator(&self, w: &GroupElement, s: usize) -> GroupElement {
        w.compose_unchecked(&self.generators[s])
    }

    /// `s · w`.
    pub fn generator_mul(&self, s: usize, w: &GroupElement) -> GroupElement {
        self.generators[s].compose_unchecked(w)
    }

    pub fn is_reduced(&self, word: &Word) -> bool {
        self.evaluate(word).length() == word.len()
    }

    /// Lexicographically smallest reduced word (by generator index).
    pub fn reduced_word(&self, w: &GroupElement) -> Word {
        let mut rest = w.clone();
        let mut letters = Vec::with_capacity(w.length());
        while !rest.is_identity() {
            let s = (0..self.rank())
                .find(|&s| rest.has_left_descent(s))
                .expect("non-identity element has a left descent");
            letters.push(s);
            rest = self.generator_mul(s, &rest);
        }
        Word(letters)
    }

    /// The longest element, found by ascending in right weak order.
    pub fn longest_element(&self) -> GroupElement {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.parabolic_longest(&all)
    }

    /// Longest element of the standard parabolic subgroup generated by `gens`.
    pub fn parabolic_longest(&self, gens: &[usize]) -> GroupElement {
        let mut w = self.identity();
        while let Some(&s) = gens.iter().find(|&&s| !w.has_right_descent(s)) {
            w = self.mul_generator(&w, s);
        }
        w
    }

    /// Inversion set `{t ∈ T : ℓ(t w) < ℓ(w)}` as positive-root indices
    /// (reflection `t_β` for root `β`).
    pub fn inversions(&self, w: &GroupElement) -> BTreeSet<usize> {
        w.left_inversion_roots().into_iter().collect()
    }

    /// The reflection `t_β` along positive root `root`.
    pub fn reflection(&self, root: usize) -> GroupElement {
        let beta = &self.roots[root];
        let g_beta = &self.gram * beta;
        let images = self
            .roots
            .iter()
            .map(|gamma| {
                let coeff = 2.0 * gamma.dot(&g_beta);
                let image = gamma - beta * coeff;
                locate_signed(&self.roots, &image).expect("reflection permutes roots")
            })
            .collect();
        GroupElement::from_images(self.id, images)
    }

    /// Matrix of `w` acting on `V` in simple-root coordinates.
    pub fn matrix_of(&self, w: &GroupElement) -> DMatrix<f64> {
        let n = self.rank();
        let mut m = DMatrix::zeros(n, n);
        for s in 0..n {
            let im = w.image(s);
            let sign = if im.negative { -1.0 } else { 1.0 };
            m.set_column(s, &(&self.roots[im.index as usize] * sign));
        }
        m
    }

    pub fn apply(&self, w: &GroupElement, v: &DVector<f64>) -> DVector<f64> {
        self.matrix_of(w) * v
    }

    /// All group elements, sorted by length then root action.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut seen: HashSet<GroupElement> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.identity());
        queue.push_back(self.identity());
        while let Some(w) = queue.pop_front() {
            for s in 0..self.rank() {
                if !w.has_right_descent(s) {
                    let ws = self.mul_generator(&w, s);
                    if seen.insert(ws.clone()) {
                        queue.push_back(ws);
                    }
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// Minimal-length representative of the coset `w W_{S∖{s}}`.
    pub fn min_coset_rep(&self, w: &GroupElement, s: usize) -> GroupElement {
        let mut x = w.clone();
        while let Some(t) = (0..self.rank()).find(|&t| t != s && x.has_right_descent(t)) {
            x = self.mul_generator(&x, t);
        }
        x
    }

    /// Minimal representatives of `W / W_{S∖{s}}`, sorted.
    pub fn coset_reps(&self, s: usize) -> Vec<GroupElement> {
        let all: Vec<usize> = (0..self.rank()).collect();
        let mut reps = self.quotient_reps(&all, s, usize::MAX).expect("uncapped");
        reps.sort();
        reps
    }

    /// Minimal representatives of `W_J / W_{J∖{r}}`, or `None` past `cap`.
    fn quotient_reps(&self, gens: &[usize], r: usize, cap: usize) -> Option<Vec<GroupElement>> {
        let is_min = |w: &GroupElement| gens.iter().all(|&t| t == r || !w.has_right_descent(t));
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.identity());
        queue.push_back(self.identity());
        while let Some(w) = queue.pop_front() {
            for &t in gens {
                if w.has_left_descent(t) {
                    continue;
                }
                let tw = self.generator_mul(t, &w);
                if is_min(&tw) && seen.insert(tw.clone()) {
                    if seen.len() > cap {
                        return None;
                    }
                    queue.push_back(tw);
                }
            }
        }
        Some(seen.into_iter().collect())
    }

    /// `|W|`, via a chain of parabolic subgroups `|W_J| = |W_{J∖r}| · |W_J/W_{J∖r}|`.
    pub fn group_order(&self) -> u128 {
        let mut gens: Vec<usize> = (0..self.rank()).collect();
        let mut order: u128 = 1;
        while !gens.is_empty() {
            // Leaves first: their quotients tend to be small, which caps the rest.
            let degree = |r: usize| gens.iter().filter(|&&t| t != r && self.matrix[r][t] != 2).count();
            let candidates: Vec<usize> = gens.iter().copied().sorted_by_key(|&r| degree(r)).collect();
            let mut best: Option<(usize, usize)> = None;
            for &r in &candidates {
                let cap = best.map_or(usize::MAX, |(_, n)| n);
                if let Some(reps) = self.quotient_reps(&gens, r, cap) {
                    if best.is_none_or(|(_, n)| reps.len() < n) {
                        best = Some((r, reps.len()));
                    }
                }
            }
            let (r, count) = best.expect("some quotient is finite");
            order *= count as u128;
            gens.retain(|&t| t != r);
        }
        order
    }

    /// All Coxeter elements, deduplicated as group elements. Each keeps the
    /// lexicographically first generator ordering that produces it.
    pub fn coxeter_elements(&self) -> Vec<CoxeterElement> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for perm in (0..self.rank()).permutations(self.rank()) {
            let word = Word(perm);
            let element = self.evaluate(&word);
            if seen.insert(element.clone()) {
                out.push(CoxeterElement { word, element });
            }
        }
        out
    }

    /// Whether `word` uses every generator exactly once.
    pub fn is_coxeter_word(&self, word: &Word) -> bool {
        let mut seen = vec![false; self.rank()];
        word.len() == self.rank()
            && word.letters().iter().all(|&s| s < self.rank() && !std::mem::replace(&mut seen[s], true))
    }

    /// Map every generator index `s` to the generator `t` with `w s w⁻¹ = t`,
    /// when such `t` exists.
    pub fn conjugate_generator(&self, w: &GroupElement, s: usize) -> Option<usize> {
        let conj = w
            .compose_unchecked(&self.generators[s])
            .compose_unchecked(&w.inverse());
        (0..self.rank()).find(|&t| self.generators[t] == conj)
    }
}

fn validate_matrix(labels: &[String], m: &[Vec<u32>]) -> Result<()> {
    let n = m.len();
    if n == 0 {
        return Err(Error::InvalidMatrix("empty matrix".into()));
    }
    if labels.len() != n {
        return Err(Error::InvalidMatrix(format!("{} labels for rank {n}", labels.len())));
    }
    let distinct: HashSet<&String> = labels.iter().collect();
    if distinct.len() != n {
        return Err(Error::InvalidMatrix("duplicate labels".into()));
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidMatrix(format!("row {i} has {} entries, expected {n}", row.len())));
        }
        if row[i] != 1 {
            return Err(Error::InvalidMatrix(format!("m({i},{i}) = {} != 1", row[i])));
        }
        for (j, &v) in row.iter().enumerate() {
            if v != m[j][i] {
                return Err(Error::InvalidMatrix(format!("not symmetric at ({i},{j})")));
            }
            if i != j && v != INFINITE_ORDER && v < 2 {
                return Err(Error::InvalidMatrix(format!("m({i},{j}) = {v} < 2")));
            }
        }
    }
    Ok(())
}

fn gram_entry(m: u32) -> f64 {
    match m {
        1 => 1.0,
        2 => 0.0,
        INFINITE_ORDER => -1.0,
        m => -(std::f64::consts::PI / m as f64).cos(),
    }
}

/// `s(β) = β − 2⟨β, α_s⟩ α_s` in simple-root coordinates.
fn reflect(gram: &DMatrix<f64>, beta: &DVector<f64>, s: usize) -> DVector<f64> {
    let pairing = gram.row(s).transpose().dot(beta);
    let mut out = beta.clone();
    out[s] -= 2.0 * pairing;
    out
}

fn find_root(roots: &[DVector<f64>], v: &DVector<f64>) -> Option<usize> {
    roots.iter().position(|r| (r - v).amax() < ROOT_SNAP)
}

fn locate_signed(roots: &[DVector<f64>], v: &DVector<f64>) -> Option<RootImage> {
    if let Some(i) = find_root(roots, v) {
        return Some(RootImage::positive(i));
    }
    find_root(roots, &(-v)).map(|i| RootImage { index: i as u16, negative: true })
}

/// Positive roots, closing the simple roots under simple reflections.
fn close_roots(gram: &DMatrix<f64>, cap: usize) -> Result<Vec<DVector<f64>>> {
    let n = gram.nrows();
    let mut roots: Vec<DVector<f64>> = (0..n)
        .map(|s| {
            let mut e = DVector::zeros(n);
            e[s] = 1.0;
            e
        })
        .collect();
    let mut next = 0;
    while next < roots.len() {
        for s in 0..n {
            if next == s {
                continue;
            }
            let image = reflect(gram, &roots[next], s);
            if image.iter().any(|&x| x < -ROOT_SNAP) {
                return Err(Error::NonFinite("root closure produced a mixed-sign root".into()));
            }
            if find_root(&roots, &image).is_none() {
                roots.push(image);
                if 2 * roots.len() > 2 * cap {
                    return Err(Error::NonFinite(format!("more than {} roots generated", 2 * cap)));
                }
            }
        }
        next += 1;
    }
    Ok(roots)
}

fn connected_components(m: &[Vec<u32>]) -> Vec<Vec<usize>> {
    let n = m.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![];
        let mut stack = vec![start];
        comp[start] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for w in 0..n {
                if w != v && m[v][w] != 2 && comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}
