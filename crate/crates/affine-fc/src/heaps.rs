//! Heaps over a Coxeter graph: labeled posets in which same-label fibers
//! and edge fibers are chains, encoding commutation classes of words.
//!
//! A heap is stored as a label vector plus, per element, the bitset of its
//! strict predecessors. Element indices always form a linear extension of
//! the order, so the fiber of a generator read in index order is its chain.
//! Equality of commutation classes is decided through the canonical word
//! (Cartier-Foata normal form: repeatedly emit the label-sorted antichain
//! of minimal elements).

use std::fmt;

/// Coxeter graph on generators `0..size` with symmetric bond labels
/// `m_st in {2, 3, 4, ...}`; bond 2 means the generators commute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterGraph {
    bonds: Vec<Vec<u8>>,
}

impl CoxeterGraph {
    /// Graph with all generators commuting (every bond 2).
    pub fn new(size: usize) -> Self {
        CoxeterGraph { bonds: vec![vec![2; size]; size] }
    }

    pub fn size(&self) -> usize {
        self.bonds.len()
    }

    pub fn set_bond(&mut self, s: u8, t: u8, m: u8) {
        assert!(s != t, "no self bonds");
        assert!(m >= 2, "bond label must be at least 2");
        self.bonds[s as usize][t as usize] = m;
        self.bonds[t as usize][s as usize] = m;
    }

    pub fn bond(&self, s: u8, t: u8) -> u8 {
        self.bonds[s as usize][t as usize]
    }

    /// Generators adjacent to `s` (bond at least 3).
    pub fn neighbors(&self, s: u8) -> impl Iterator<Item = u8> + '_ {
        self.bonds[s as usize]
            .iter()
            .enumerate()
            .filter(|&(_, &m)| m >= 3)
            .map(|(t, _)| t as u8)
    }

    /// Whether two letters are forced to stack: equal or adjacent.
    fn related(&self, s: u8, t: u8) -> bool {
        s == t || self.bond(s, t) >= 3
    }
}

/// Fixed-capacity bitset over element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn new(capacity: usize) -> Self {
        Bits { words: vec![0; capacity.div_ceil(64)] }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w & (1 << (i % 64)) != 0)
    }

    fn or_assign(&mut self, other: &Bits) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    /// True when every set bit of `self` is set in `other`.
    fn is_subset(&self, other: &Bits) -> bool {
        self.words
            .iter()
            .zip(other.words.iter().chain(std::iter::repeat(&0)))
            .all(|(w, o)| w & !o == 0)
    }

    fn grown(&self, capacity: usize) -> Bits {
        let mut words = self.words.clone();
        words.resize(capacity.div_ceil(64), 0);
        Bits { words }
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

/// A finite heap: elements `0..size`, their generator labels, and the
/// strict order as predecessor bitsets. Immutable; extension returns a new
/// value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Heap {
    labels: Vec<u8>,
    below: Vec<Bits>,
}

impl Heap {
    pub fn empty() -> Self {
        Heap { labels: Vec::new(), below: Vec::new() }
    }

    /// Heap of a word: letter `j` goes above every earlier letter that is
    /// equal or adjacent to it, transitively.
    pub fn from_word(g: &CoxeterGraph, word: &[u8]) -> Self {
        let n = word.len();
        let mut labels = Vec::with_capacity(n);
        let mut below: Vec<Bits> = Vec::with_capacity(n);
        for (i, &s) in word.iter().enumerate() {
            assert!((s as usize) < g.size(), "letter out of range");
            let mut be = Bits::new(n);
            for j in 0..i {
                if g.related(labels[j], s) {
                    be.or_assign(&below[j]);
                    be.set(j);
                }
            }
            labels.push(s);
            below.push(be);
        }
        Heap { labels, below }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> u8 {
        self.labels[i]
    }

    /// Strictly below: `i < j` in the heap order.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.below[j].get(i)
    }

    /// Elements labeled `s` in chain order.
    pub fn chain(&self, s: u8) -> Vec<usize> {
        (0..self.size()).filter(|&i| self.labels[i] == s).collect()
    }

    /// Number of elements labeled `s`.
    pub fn chain_len(&self, s: u8) -> usize {
        self.labels.iter().filter(|&&l| l == s).count()
    }

    /// Elements labeled `s` or `t` in chain order. For adjacent `s, t` this
    /// fiber is totally ordered.
    pub fn edge_chain(&self, s: u8, t: u8) -> Vec<usize> {
        (0..self.size()).filter(|&i| self.labels[i] == s || self.labels[i] == t).collect()
    }

    /// Cartier-Foata normal form: peel the antichain of minimal elements,
    /// sorting each layer by label. Two heaps are isomorphic exactly when
    /// their canonical words agree.
    pub fn canonical_word(&self) -> Vec<u8> {
        let n = self.size();
        let mut removed = Bits::new(n);
        let mut done = vec![false; n];
        let mut word = Vec::with_capacity(n);
        let mut emitted = 0;
        while emitted < n {
            let mut layer: Vec<usize> = (0..n)
                .filter(|&i| !done[i] && self.below[i].is_subset(&removed))
                .collect();
            debug_assert!(!layer.is_empty(), "order must be acyclic");
            layer.sort_by_key(|&i| self.labels[i]);
            for &i in &layer {
                word.push(self.labels[i]);
                done[i] = true;
                emitted += 1;
            }
            for &i in &layer {
                removed.set(i);
            }
        }
        word
    }

    /// Order-reversed heap. Elements are renumbered so indices stay a
    /// linear extension.
    pub fn dual(&self) -> Heap {
        let n = self.size();
        let mut above: Vec<Bits> = vec![Bits::new(n); n];
        for j in 0..n {
            for i in self.below[j].ones() {
                above[i].set(j);
            }
        }
        let mut labels = vec![0u8; n];
        let mut below = vec![Bits::new(n); n];
        for i in 0..n {
            let ni = n - 1 - i;
            labels[ni] = self.labels[i];
            let mut be = Bits::new(n);
            for j in above[i].ones() {
                be.set(n - 1 - j);
            }
            below[ni] = be;
        }
        Heap { labels, below }
    }

    /// Reducedness of the encoded words: between any two consecutive
    /// elements of a generator fiber there must lie an element with an
    /// adjacent label.
    pub fn is_reduced(&self, g: &CoxeterGraph) -> bool {
        for s in 0..g.size() as u8 {
            let chain = self.chain(s);
            for pair in chain.windows(2) {
                let (x, y) = (pair[0], pair[1]);
                let blocked = self.below[y]
                    .ones()
                    .any(|z| self.lt(x, z) && g.bond(self.labels[z], s) >= 3);
                if !blocked {
                    return false;
                }
            }
        }
        true
    }

    /// Full commutativity of a reduced heap: no bond `m_st >= 3` carries a
    /// convex chain of `m_st` elements with alternating labels. Assumes
    /// [`Heap::is_reduced`] already holds.
    pub fn is_fc(&self, g: &CoxeterGraph) -> bool {
        for s in 0..g.size() as u8 {
            for t in g.neighbors(s) {
                if t < s {
                    continue;
                }
                let m = g.bond(s, t) as usize;
                let merged = self.edge_chain(s, t);
                if merged.len() < m {
                    continue;
                }
                for window in merged.windows(m) {
                    if self.is_braid_window(g, window, s, t) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether `window` (consecutive in the `{s,t}` fiber) is an
    /// alternating convex chain: labels alternate and no element of another
    /// label lies strictly between its endpoints.
    fn is_braid_window(&self, _g: &CoxeterGraph, window: &[usize], s: u8, t: u8) -> bool {
        for pair in window.windows(2) {
            if self.labels[pair[0]] == self.labels[pair[1]] {
                return false;
            }
        }
        let first = window[0];
        let last = *window.last().unwrap();
        let blocked = self.below[last].ones().any(|z| {
            let l = self.labels[z];
            l != s && l != t && self.lt(first, z)
        });
        !blocked
    }

    /// Whether every edge fiber has alternating labels.
    pub fn is_alternating(&self, g: &CoxeterGraph) -> bool {
        for s in 0..g.size() as u8 {
            for t in g.neighbors(s) {
                if t < s {
                    continue;
                }
                let merged = self.edge_chain(s, t);
                if merged.windows(2).any(|p| self.labels[p[0]] == self.labels[p[1]]) {
                    return false;
                }
            }
        }
        true
    }

    /// Try to extend a fully commutative heap by one maximal element
    /// labeled `s`. Returns `None` when the extension stops being reduced
    /// or creates a braid chain; both checks are local to the new element,
    /// which is sound because a new maximal element cannot lie between
    /// older ones.
    pub fn append_max(&self, g: &CoxeterGraph, s: u8) -> Option<Heap> {
        assert!((s as usize) < g.size(), "generator out of range");
        let n = self.size();
        let mut be = Bits::new(n + 1);
        let mut prev_s = None;
        for j in 0..n {
            let l = self.labels[j];
            if l == s {
                prev_s = Some(j);
            }
            if g.related(l, s) {
                be.or_assign(&self.below[j].grown(n + 1));
                be.set(j);
            }
        }
        // reducedness at the new chain pair
        if let Some(p) = prev_s {
            let blocked =
                (0..n).any(|z| g.bond(self.labels[z], s) >= 3 && self.lt(p, z));
            if !blocked {
                return None;
            }
        }
        // no bond may acquire an alternating convex chain of full length
        for t in g.neighbors(s) {
            let m = g.bond(s, t) as usize;
            let merged = self.edge_chain(s, t);
            if merged.len() < m - 1 {
                continue;
            }
            let tail = &merged[merged.len() - (m - 1)..];
            let mut labels_ok = true;
            let mut expect = if (m - 1) % 2 == 1 { t } else { s };
            for &i in tail {
                if self.labels[i] != expect {
                    labels_ok = false;
                    break;
                }
                expect = if expect == s { t } else { s };
            }
            if !labels_ok {
                continue;
            }
            let first = tail[0];
            let blocked = (0..n).any(|z| {
                let l = self.labels[z];
                l != s && l != t && be.get(z) && self.lt(first, z)
            });
            if !blocked {
                return None;
            }
        }
        let mut labels = self.labels.clone();
        labels.push(s);
        let mut below: Vec<Bits> = self.below.iter().map(|b| b.grown(n + 1)).collect();
        below.push(be);
        Some(Heap { labels, below })
    }
}

impl fmt::Debug for Heap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Heap{:?}", self.canonical_word())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Path graph with the given consecutive bonds.
    fn path(bonds: &[u8]) -> CoxeterGraph {
        let mut g = CoxeterGraph::new(bonds.len() + 1);
        for (i, &m) in bonds.iter().enumerate() {
            g.set_bond(i as u8, i as u8 + 1, m);
        }
        g
    }

    #[test]
    fn word_to_heap_and_canonical_form() {
        let g = path(&[3, 3]);
        assert_eq!(Heap::from_word(&g, &[]).canonical_word(), Vec::<u8>::new());
        // commuting letters sort inside the layer
        let h = Heap::from_word(&g, &[2, 0]);
        assert_eq!(h.canonical_word(), vec![0, 2]);
        assert!(!h.lt(0, 1) && !h.lt(1, 0));
        // a bond keeps the order
        let h = Heap::from_word(&g, &[1, 0]);
        assert_eq!(h.canonical_word(), vec![1, 0]);
        // braid word stays a 3-chain
        let h = Heap::from_word(&g, &[0, 1, 0]);
        assert_eq!(h.canonical_word(), vec![0, 1, 0]);
        assert!(h.lt(0, 1) && h.lt(1, 2));
    }

    #[test]
    fn canonical_word_is_commutation_invariant() {
        // all words in a commutation class share the canonical form
        let g = path(&[3, 3, 3]);
        let w = [0u8, 2, 1, 3, 0];
        let h = Heap::from_word(&g, &w);
        let canon = h.canonical_word();
        assert_eq!(Heap::from_word(&g, &canon).canonical_word(), canon);
        // swap the commuting pair (0,2) and the commuting pair (3,0)
        assert_eq!(Heap::from_word(&g, &[2, 0, 1, 3, 0]).canonical_word(), canon);
        assert_eq!(Heap::from_word(&g, &[0, 2, 1, 0, 3]).canonical_word(), canon);
    }

    #[test]
    fn dual_reverses_and_is_involutive() {
        let g = path(&[3]);
        let h = Heap::from_word(&g, &[0, 1]);
        let d = h.dual();
        assert_eq!(d.canonical_word(), vec![1, 0]);
        assert_eq!(d.dual().canonical_word(), h.canonical_word());
        // the braid heap is self-dual
        let h = Heap::from_word(&g, &[0, 1, 0]);
        assert_eq!(h.dual().canonical_word(), h.canonical_word());
    }

    #[test]
    fn reducedness_criterion() {
        let g = path(&[3, 2]);
        // ss is not reduced
        assert!(!Heap::from_word(&g, &[0, 0]).is_reduced(&g));
        // sts is reduced for a bond
        assert!(Heap::from_word(&g, &[0, 1, 0]).is_reduced(&g));
        // s u s with u commuting with s is not reduced
        let mut g2 = CoxeterGraph::new(2);
        g2.set_bond(0, 1, 2);
        assert!(!Heap::from_word(&g2, &[0, 1, 0]).is_reduced(&g2));
    }

    #[test]
    fn fc_criterion() {
        let g = path(&[3, 3]);
        // the braid itself
        assert!(!Heap::from_word(&g, &[0, 1, 0]).is_fc(&g));
        // too short
        assert!(Heap::from_word(&g, &[0, 1]).is_fc(&g));
        // s u s with the end letters commuting still exposes the braid:
        // 0 and 2 commute, so 0,1,2,0 ~ 0,1,0,2
        assert!(!Heap::from_word(&g, &[0, 1, 2, 0]).is_fc(&g));
        // t s u t: both braid windows are blocked by the third letter
        assert!(Heap::from_word(&g, &[1, 0, 2, 1]).is_fc(&g));
        // bond 4 tolerates sts but not stst
        let g4 = path(&[4]);
        assert!(Heap::from_word(&g4, &[0, 1, 0]).is_fc(&g4));
        assert!(!Heap::from_word(&g4, &[0, 1, 0, 1]).is_fc(&g4));
    }

    #[test]
    fn alternating_criterion() {
        let g = path(&[3, 3]);
        assert!(Heap::empty().is_alternating(&g));
        assert!(Heap::from_word(&g, &[0, 1, 0]).is_alternating(&g));
        // on a triangle, s0 s1 s0 has two s0 elements with no s2 between
        let mut tri = CoxeterGraph::new(3);
        tri.set_bond(0, 1, 3);
        tri.set_bond(1, 2, 3);
        tri.set_bond(2, 0, 3);
        assert!(!Heap::from_word(&tri, &[0, 1, 0]).is_alternating(&tri));
    }

    #[test]
    fn append_rejects_unreduced_and_braids() {
        let g = path(&[3]);
        let single = Heap::empty().append_max(&g, 0).unwrap();
        assert_eq!(single.size(), 1);
        assert!(single.append_max(&g, 0).is_none());
        let st = single.append_max(&g, 1).unwrap();
        assert!(st.append_max(&g, 0).is_none());
        // matches the standalone criterion
        assert!(!Heap::from_word(&g, &[0, 1, 0]).is_fc(&g));

        let g3 = path(&[3, 3]);
        // the commuting third letter does not block the braid window
        let h = Heap::from_word(&g3, &[0, 1, 2]);
        assert!(h.append_max(&g3, 0).is_none());
        // but an interior letter, adjacent to both ends, does
        let h = Heap::from_word(&g3, &[1, 0, 2]);
        let extended = h.append_max(&g3, 1).unwrap();
        assert_eq!(extended.canonical_word(), Heap::from_word(&g3, &[1, 0, 2, 1]).canonical_word());
    }
}
