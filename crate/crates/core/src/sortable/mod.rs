//! c-sorting words, c-factorizations, c-sortability and c-singletons.

mod commutation;
mod singletons;

use std::collections::BTreeSet;

pub use commutation::{
    commutation_class, is_prefix_up_to_commutation, prefix_by_commutation_class, prefix_by_heap, Heap,
    COMMUTATION_CLASS_CAP,
};
pub use singletons::{both_singleton_pairs, c_singletons, SingletonLattice, SingletonNode};

use crate::coxeter::{CoxeterSystem, GroupElement, Word};
use crate::error::{Error, Result};

/// The blocks `K_1, …, K_p` read off the c-sorting word, one per scanned
/// copy of `c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization {
    pub blocks: Vec<BTreeSet<usize>>,
}

impl Factorization {
    /// Total number of letters, equal to the length of the element.
    pub fn total_len(&self) -> usize {
        self.blocks.iter().map(BTreeSet::len).sum()
    }

    /// `K_1 ⊇ K_2 ⊇ … ⊇ K_p`.
    pub fn is_nested(&self) -> bool {
        self.blocks.windows(2).all(|w| w[1].is_subset(&w[0]))
    }

    /// `c_(K_1) c_(K_2) … c_(K_p)` for the given word of `c`.
    pub fn word(&self, c: &Word) -> Word {
        Word(
            self.blocks
                .iter()
                .flat_map(|block| c.letters().iter().copied().filter(|s| block.contains(s)))
                .collect(),
        )
    }
}

pub(crate) fn check_coxeter_word(sys: &CoxeterSystem, c: &Word) -> Result<()> {
    if sys.is_coxeter_word(c) {
        Ok(())
    } else {
        Err(Error::NotCoxeterWord(sys.format_word(c)))
    }
}

/// Letters of the c-sorting word of `w`, tagged with the copy of `c` they
/// were taken from.
fn sorting_scan(sys: &CoxeterSystem, w: &GroupElement, c: &Word) -> Vec<(usize, usize)> {
    let mut rest = w.clone();
    let mut taken = Vec::with_capacity(w.length());
    let mut copy = 0;
    while !rest.is_identity() {
        for &s in c.letters() {
            if rest.has_left_descent(s) {
                taken.push((copy, s));
                rest = sys.generator_mul(s, &rest);
            }
        }
        copy += 1;
    }
    taken
}

/// The c-sorting word of `w`: the reduced subword of `c c c …` with the
/// lexicographically smallest position sequence.
pub fn c_sorting_word(sys: &CoxeterSystem, w: &GroupElement, c: &Word) -> Result<Word> {
    check_coxeter_word(sys, c)?;
    Ok(Word(sorting_scan(sys, w, c).into_iter().map(|(_, s)| s).collect()))
}

pub fn c_factorization(sys: &CoxeterSystem, w: &GroupElement, c: &Word) -> Result<Factorization> {
    check_coxeter_word(sys, c)?;
    let mut blocks: Vec<BTreeSet<usize>> = Vec::new();
    for (copy, s) in sorting_scan(sys, w, c) {
        if blocks.len() <= copy {
            blocks.resize(copy + 1, BTreeSet::new());
        }
        blocks[copy].insert(s);
    }
    Ok(Factorization { blocks })
}

pub fn is_c_sortable(sys: &CoxeterSystem, w: &GroupElement, c: &Word) -> Result<bool> {
    Ok(c_factorization(sys, w, c)?.is_nested())
}
