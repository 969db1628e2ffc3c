//! Prefixes up to commutation.
//!
//! Two routes decide whether an element is a prefix of some word in the
//! commutation class of a reduced word: explicit breadth-first enumeration
//! of the class, and the heap criterion (the element's inversion set must be
//! the set of reflections attached to an order ideal of the heap).

use std::collections::{HashSet, VecDeque};

use crate::coxeter::{CoxeterSystem, GroupElement, Word};
use crate::error::{Error, Result};

/// Largest commutation class enumerated explicitly before falling back to
/// the heap criterion.
pub const COMMUTATION_CLASS_CAP: usize = 20_000;

/// The heap of a reduced word: positions ordered by "earlier and not
/// commuting", each tagged with the reflection it contributes.
#[derive(Clone, Debug)]
pub struct Heap {
    letters: Vec<usize>,
    /// `preds[q]`: positions `p < q` whose letters do not commute with `q`'s.
    preds: Vec<Vec<usize>>,
    /// Positive-root index of the reflection `a_1⋯a_{p-1} a_p a_{p-1}⋯a_1`.
    roots: Vec<usize>,
}

impl Heap {
    pub fn new(sys: &CoxeterSystem, word: &Word) -> Result<Self> {
        let letters = word.letters().to_vec();
        let mut prefix = sys.identity();
        let mut roots = Vec::with_capacity(letters.len());
        for &s in &letters {
            let im = prefix.image(s);
            if im.negative {
                return Err(Error::NotReduced(sys.format_word(word)));
            }
            roots.push(im.index as usize);
            prefix = sys.mul_generator(&prefix, s);
        }
        let preds = (0..letters.len())
            .map(|q| (0..q).filter(|&p| !sys.commute(letters[p], letters[q])).collect())
            .collect();
        Ok(Heap { letters, preds, roots })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letter(&self, p: usize) -> usize {
        self.letters[p]
    }

    pub fn root(&self, p: usize) -> usize {
        self.roots[p]
    }

    pub fn predecessors(&self, p: usize) -> &[usize] {
        &self.preds[p]
    }

    /// Whether the position set is down-closed.
    pub fn is_ideal(&self, members: &[bool]) -> bool {
        (0..self.len()).all(|q| !members[q] || self.preds[q].iter().all(|&p| members[p]))
    }
}

/// Every word obtained from `word` by swapping adjacent commuting letters,
/// or `None` when the class exceeds `cap`.
pub fn commutation_class(sys: &CoxeterSystem, word: &Word, cap: usize) -> Option<Vec<Word>> {
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.clone());
    queue.push_back(word.clone());
    while let Some(w) = queue.pop_front() {
        for i in 0..w.len().saturating_sub(1) {
            let (a, b) = (w.0[i], w.0[i + 1]);
            if sys.commute(a, b) {
                let mut swapped = w.clone();
                swapped.0.swap(i, i + 1);
                if seen.insert(swapped.clone()) {
                    if seen.len() > cap {
                        return None;
                    }
                    queue.push_back(swapped);
                }
            }
        }
    }
    let mut out: Vec<Word> = seen.into_iter().collect();
    out.sort();
    Some(out)
}

/// Decide by enumerating the commutation class; `None` when it is too big.
pub fn prefix_by_commutation_class(
    sys: &CoxeterSystem,
    candidate: &GroupElement,
    target: &Word,
    cap: usize,
) -> Result<Option<bool>> {
    if !sys.is_reduced(target) {
        return Err(Error::NotReduced(sys.format_word(target)));
    }
    let k = candidate.length();
    if k > target.len() {
        return Ok(Some(false));
    }
    let Some(class) = commutation_class(sys, target, cap) else {
        return Ok(None);
    };
    let mut prefixes = HashSet::new();
    for w in &class {
        let prefix = Word(w.0[..k].to_vec());
        if prefixes.insert(prefix.clone()) && sys.evaluate(&prefix) == *candidate {
            return Ok(Some(true));
        }
    }
    Ok(Some(false))
}

/// Decide with the heap criterion.
pub fn prefix_by_heap(sys: &CoxeterSystem, candidate: &GroupElement, target: &Word) -> Result<bool> {
    let heap = Heap::new(sys, target)?;
    let inversions = sys.inversions(candidate);
    let mut members = vec![false; heap.len()];
    let mut hits = 0;
    for (p, m) in members.iter_mut().enumerate() {
        if inversions.contains(&heap.root(p)) {
            *m = true;
            hits += 1;
        }
    }
    Ok(hits == inversions.len() && heap.is_ideal(&members))
}

/// Whether some reduced word of `candidate` is a prefix of a word in the
/// commutation class of the reduced word `target`.
pub fn is_prefix_up_to_commutation(sys: &CoxeterSystem, candidate: &GroupElement, target: &Word) -> Result<bool> {
    match prefix_by_commutation_class(sys, candidate, target, COMMUTATION_CLASS_CAP)? {
        Some(answer) => Ok(answer),
        None => prefix_by_heap(sys, candidate, target),
    }
}
