use std::collections::HashMap;

use super::commutation::Heap;
use super::{c_sorting_word, check_coxeter_word};
use crate::coxeter::{CoxeterSystem, GroupElement, Word};
use crate::error::Result;

/// A c-singleton with the word it is reached by (positions of the c-sorting
/// word of `w0`, in increasing order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingletonNode {
    pub word: Word,
    pub element: GroupElement,
}

/// The c-singletons ordered by right weak order, with their Hasse diagram.
///
/// Nodes are sorted by length, then by word; `hasse_edges` holds index pairs
/// `(lower, upper)` with `upper = lower · s` for a simple `s`.
#[derive(Clone, Debug)]
pub struct SingletonLattice {
    pub c: Word,
    pub w0_sorting_word: Word,
    pub nodes: Vec<SingletonNode>,
    pub hasse_edges: Vec<(usize, usize)>,
}

impl SingletonLattice {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, w: &GroupElement) -> Option<usize> {
        self.nodes.iter().position(|n| n.element == *w)
    }

    pub fn contains(&self, w: &GroupElement) -> bool {
        self.index_of(w).is_some()
    }

    pub fn elements(&self) -> impl Iterator<Item = &GroupElement> {
        self.nodes.iter().map(|n| &n.element)
    }

    /// Graphviz rendering of the Hasse diagram, bottom to top.
    pub fn to_dot(&self, sys: &CoxeterSystem) -> String {
        let mut out = String::from("digraph singletons {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for (i, n) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", sys.format_word(&n.word)));
        }
        for (a, b) in &self.hasse_edges {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Order ideals of the heap of the c-sorting word of `w0`, i.e. the
/// c-singletons, found breadth first from the empty ideal.
pub fn c_singletons(sys: &CoxeterSystem, c: &Word) -> Result<SingletonLattice> {
    check_coxeter_word(sys, c)?;
    let w0 = sys.longest_element();
    let sorting = c_sorting_word(sys, &w0, c)?;
    let heap = Heap::new(sys, &sorting)?;
    let n = heap.len();

    let mut ideals: Vec<Vec<bool>> = vec![vec![false; n]];
    let mut elements = vec![sys.identity()];
    let mut index: HashMap<Vec<bool>, usize> = HashMap::from([(ideals[0].clone(), 0)]);
    let mut edges = Vec::new();
    let mut next = 0;
    while next < ideals.len() {
        let ideal = ideals[next].clone();
        for p in 0..n {
            if ideal[p] || !heap.predecessors(p).iter().all(|&q| ideal[q]) {
                continue;
            }
            let mut grown = ideal.clone();
            grown[p] = true;
            let target = match index.get(&grown) {
                Some(&i) => i,
                None => {
                    let i = ideals.len();
                    elements.push(sys.mul_generator(&elements[next], heap.letter(p)));
                    ideals.push(grown.clone());
                    index.insert(grown, i);
                    i
                }
            };
            edges.push((next, target));
        }
        next += 1;
    }

    let words: Vec<Word> = ideals
        .iter()
        .map(|ideal| Word((0..n).filter(|&p| ideal[p]).map(|p| heap.letter(p)).collect()))
        .collect();
    let mut order: Vec<usize> = (0..ideals.len()).collect();
    order.sort_by(|&a, &b| words[a].len().cmp(&words[b].len()).then_with(|| words[a].cmp(&words[b])));
    let mut rank = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let nodes = order
        .iter()
        .map(|&i| SingletonNode { word: words[i].clone(), element: elements[i].clone() })
        .collect();
    let mut hasse_edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (rank[a], rank[b])).collect();
    hasse_edges.sort_unstable();
    Ok(SingletonLattice { c: c.clone(), w0_sorting_word: sorting, nodes, hasse_edges })
}

/// `{w : w and w·w0 are both c-singletons}`, sorted.
pub fn both_singleton_pairs(sys: &CoxeterSystem, c: &Word) -> Result<Vec<GroupElement>> {
    let lattice = c_singletons(sys, c)?;
    let w0 = sys.longest_element();
    let mut out: Vec<GroupElement> = lattice
        .elements()
        .filter(|w| lattice.contains(&w.compose_unchecked(&w0)))
        .cloned()
        .collect();
    out.sort();
    Ok(out)
}
