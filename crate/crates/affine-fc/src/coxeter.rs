//! Affine Coxeter graphs of the four classical families, the brute-force
//! census of fully commutative elements by length, and the constructive
//! decomposition of long heaps into box partitions.
//!
//! The census is a layered breadth-first search: every fully commutative
//! heap of size `l+1` arises from one of size `l` by adding a maximal
//! element, so extending each layer through [`Heap::append_max`] and
//! deduplicating by canonical word is sound and complete. Only the current
//! layer is kept in memory.

use std::collections::BTreeMap;
use std::fmt;

use crate::heaps::{CoxeterGraph, Heap};
use crate::partitions::Partition;

/// The four classical affine families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::C => write!(f, "C"),
            Family::D => write!(f, "D"),
        }
    }
}

/// An affine type with its size parameter `n`: family A denotes the cycle
/// on `n` generators, C the path on `n+1` generators with end bonds 4, B
/// the same with the bond-4 end at one side replaced by a fork (`n+2`
/// generators), and D with forks at both ends (`n+3` generators).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineType {
    family: Family,
    n: u32,
}

/// Errors from type construction and the census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    ParameterOutOfRange { family: Family, n: u32, reason: &'static str },
    LayerLimit { length: usize, size: usize },
}

impl fmt::Display for CoxeterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterError::ParameterOutOfRange { family, n, reason } => {
                write!(f, "parameter n={n} out of range for family {family}: {reason}")
            }
            CoxeterError::LayerLimit { length, size } => {
                write!(f, "census layer at length {length} holds {size} heaps, over the resource limit")
            }
        }
    }
}

impl std::error::Error for CoxeterError {}

impl AffineType {
    pub fn new(family: Family, n: u32) -> Result<Self, CoxeterError> {
        if n < 2 {
            return Err(CoxeterError::ParameterOutOfRange { family, n, reason: "need n >= 2" });
        }
        Ok(AffineType { family, n })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        let n = self.n as usize;
        match self.family {
            Family::A => n,
            Family::C => n + 1,
            Family::B => n + 2,
            Family::D => n + 3,
        }
    }

    /// The Coxeter graph. Family A needs `n >= 3` to form a cycle with
    /// finite bonds; smaller parameters are served by closed forms only.
    pub fn graph(&self) -> Result<CoxeterGraph, CoxeterError> {
        let n = self.n as usize;
        match self.family {
            Family::A => {
                if n < 3 {
                    return Err(CoxeterError::ParameterOutOfRange {
                        family: self.family,
                        n: self.n,
                        reason: "the cycle needs n >= 3",
                    });
                }
                let mut g = CoxeterGraph::new(n);
                for i in 0..n {
                    g.set_bond(i as u8, ((i + 1) % n) as u8, 3);
                }
                Ok(g)
            }
            Family::C => {
                let mut g = CoxeterGraph::new(n + 1);
                for i in 0..n {
                    let m = if i == 0 || i == n - 1 { 4 } else { 3 };
                    g.set_bond(i as u8, (i + 1) as u8, m);
                }
                Ok(g)
            }
            Family::B => {
                // fork 0,1 joined at 2, then a path ending in a bond 4
                let mut g = CoxeterGraph::new(n + 2);
                g.set_bond(0, 2, 3);
                g.set_bond(1, 2, 3);
                for i in 2..n {
                    g.set_bond(i as u8, (i + 1) as u8, 3);
                }
                g.set_bond(n as u8, (n + 1) as u8, 4);
                Ok(g)
            }
            Family::D => {
                // forks at both ends of a path
                let mut g = CoxeterGraph::new(n + 3);
                g.set_bond(0, 2, 3);
                g.set_bond(1, 2, 3);
                for i in 2..n {
                    g.set_bond(i as u8, (i + 1) as u8, 3);
                }
                g.set_bond(n as u8, (n + 1) as u8, 3);
                g.set_bond(n as u8, (n + 2) as u8, 3);
                Ok(g)
            }
        }
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={})", self.family, self.n)
    }
}

/// Counts of fully commutative elements (or involutions) by length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    pub counts: Vec<u64>,
    pub max_len: usize,
}

/// Resource guard: a census layer may not exceed this many heaps.
const MAX_LAYER: usize = 200_000;

/// Drive the layered census, handing each layer (sorted by canonical word)
/// to the visitor together with its length.
pub fn walk_census<F>(t: &AffineType, max_len: usize, mut visit: F) -> Result<(), CoxeterError>
where
    F: FnMut(usize, &BTreeMap<Vec<u8>, Heap>),
{
    let g = t.graph()?;
    let mut layer: BTreeMap<Vec<u8>, Heap> = BTreeMap::new();
    layer.insert(Vec::new(), Heap::empty());
    visit(0, &layer);
    for length in 1..=max_len {
        let mut next: BTreeMap<Vec<u8>, Heap> = BTreeMap::new();
        for h in layer.values() {
            for s in 0..g.size() as u8 {
                if let Some(h2) = h.append_max(&g, s) {
                    next.entry(h2.canonical_word()).or_insert(h2);
                }
            }
            if next.len() > MAX_LAYER {
                return Err(CoxeterError::LayerLimit { length, size: next.len() });
            }
        }
        visit(length, &next);
        layer = next;
        if layer.is_empty() {
            break;
        }
    }
    Ok(())
}

/// Brute-force census of fully commutative elements by Coxeter length,
/// optionally restricted to involutions (heaps fixed by order reversal).
pub fn fc_census(
    t: &AffineType,
    max_len: usize,
    involutions_only: bool,
) -> Result<CensusResult, CoxeterError> {
    let mut counts = vec![0u64; max_len + 1];
    walk_census(t, max_len, |length, layer| {
        counts[length] = if involutions_only {
            layer.iter().filter(|(word, h)| &h.dual().canonical_word() == *word).count() as u64
        } else {
            layer.len() as u64
        };
    })?;
    Ok(CensusResult { counts, max_len })
}

/// Errors from long-heap decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    WrongFamily { expected: Family, got: Family },
    /// The anchor chain is too short for the construction to apply.
    TooShort { anchor_len: usize, needed: usize },
    /// The heap is not alternating (in type C, a zigzag heap).
    NotAlternating,
    /// The claimed size bookkeeping failed; indicates corrupt input data.
    Inconsistent(&'static str),
}

impl fmt::Display for DecomposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecomposeError::WrongFamily { expected, got } => {
                write!(f, "decomposition for family {expected} applied to {got}")
            }
            DecomposeError::TooShort { anchor_len, needed } => {
                write!(f, "anchor chain has {anchor_len} elements, construction needs more than {needed}")
            }
            DecomposeError::NotAlternating => write!(f, "heap is not alternating"),
            DecomposeError::Inconsistent(what) => write!(f, "inconsistent decomposition data: {what}"),
        }
    }
}

impl std::error::Error for DecomposeError {}

/// Descent positions of the first elements of consecutive column chains:
/// position `i` is a descent when column `i+1` starts strictly below column
/// `i`. For a cyclic column arrangement the last comparison wraps around.
fn bottom_descents(h: &Heap, columns: usize, cyclic: bool) -> Vec<usize> {
    let firsts: Vec<usize> = (0..columns)
        .map(|i| h.chain(i as u8).first().copied().expect("nonempty column"))
        .collect();
    let edges = if cyclic { columns } else { columns - 1 };
    (0..edges)
        .filter(|&i| {
            let a = firsts[i];
            let b = firsts[(i + 1) % columns];
            debug_assert!(h.lt(a, b) || h.lt(b, a), "edge fiber must be a chain");
            h.lt(b, a)
        })
        .collect()
}

/// The partition encoded by a descent set over `positions` slots: part `r`
/// counts the non-descent positions above the `r`-th descent. This is the
/// standard bijection between `k`-subsets and partitions in a
/// `k x (positions - k)` box; the size equals the number of
/// (descent, later ascent) inversions.
fn partition_from_descents(descents: &[usize], positions: usize) -> Partition {
    let k = descents.len();
    let parts: Vec<u32> = descents
        .iter()
        .enumerate()
        .map(|(idx, &d)| ((positions - 1 - d) - (k - 1 - idx)) as u32)
        .collect();
    Partition::new(parts)
}

/// Inverse of [`partition_from_descents`] for a given subset size `k`.
fn descents_from_partition(p: &Partition, k: usize, positions: usize) -> Vec<usize> {
    (0..k).map(|idx| (positions - 1) - (k - 1 - idx) - p.part(idx) as usize).collect()
}

/// Rebuild a heap from per-column heights and per-edge start sides.
///
/// `starts_first[i]` says the lower of columns `i` and `i+1` (mod wrap) is
/// column `i`. Elements are emitted in Cartier-Foata layers, so the word
/// handed to [`Heap::from_word`] is already canonical.
fn assemble_heap(
    g: &CoxeterGraph,
    heights: &[usize],
    starts_first: &[bool],
    cyclic: bool,
) -> Result<Heap, DecomposeError> {
    let columns = heights.len();
    let total: usize = heights.iter().sum();
    let mut emitted = vec![0usize; columns];
    let mut word = Vec::with_capacity(total);
    let mut produced = 0;
    while produced < total {
        let mut layer = Vec::new();
        for i in 0..columns {
            let j = emitted[i] + 1;
            if j > heights[i] {
                continue;
            }
            // predecessors in the left and right edge fibers
            let mut ok = true;
            let left_edge = if i > 0 {
                Some(i - 1)
            } else if cyclic {
                Some(columns - 1)
            } else {
                None
            };
            if let Some(e) = left_edge {
                let need = if starts_first[e] { j } else { j - 1 };
                if emitted[e] < need {
                    ok = false;
                }
            }
            let right_edge = if i + 1 < columns {
                Some(i)
            } else if cyclic {
                Some(columns - 1)
            } else {
                None
            };
            if ok {
                if let Some(e) = right_edge {
                    let neighbor = (i + 1) % columns;
                    let need = if starts_first[e] { j - 1 } else { j };
                    if emitted[neighbor] < need {
                        ok = false;
                    }
                }
            }
            if ok {
                layer.push(i);
            }
        }
        if layer.is_empty() {
            return Err(DecomposeError::Inconsistent("no minimal element available"));
        }
        for i in layer {
            emitted[i] += 1;
            word.push(i as u8);
            produced += 1;
        }
    }
    Ok(Heap::from_word(g, &word))
}

/// Decomposition of a long alternating heap on the cycle of `n` generators:
/// descent count `k`, anchor chain length `m`, and the two box partitions
/// carried by the bottom and top boundaries. The size identity
/// `|H| = |low| + |high| + (m-k)n + k^2` always holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeADecomposition {
    pub k: usize,
    pub m: usize,
    /// Bottom boundary partition, at most `k` parts, each at most `n-k`.
    pub low: Partition,
    /// Top boundary partition, at most `n-k` parts, each at most `k`.
    pub high: Partition,
}

/// Extract the boundary data of a long alternating heap of the cyclic
/// family. Requires the anchor chain (generator 0) to have more than `n/2`
/// elements, which holds for every heap of size at least `n^2`.
pub fn decompose_a(h: &Heap, t: &AffineType) -> Result<TypeADecomposition, DecomposeError> {
    if t.family != Family::A {
        return Err(DecomposeError::WrongFamily { expected: Family::A, got: t.family });
    }
    let n = t.n as usize;
    let g = t.graph().map_err(|_| DecomposeError::Inconsistent("family A needs n >= 3"))?;
    if !h.is_alternating(&g) {
        return Err(DecomposeError::NotAlternating);
    }
    let m = h.chain_len(0);
    if 2 * m <= n {
        return Err(DecomposeError::TooShort { anchor_len: m, needed: n / 2 });
    }
    let descents = bottom_descents(h, n, true);
    let k = descents.len();
    if k == 0 || k == n {
        return Err(DecomposeError::Inconsistent("cyclic descent count must be in 1..n"));
    }
    let low = partition_from_descents(&descents, n);
    let dual = h.dual();
    let top_descents = bottom_descents(&dual, n, true);
    if top_descents.len() != n - k {
        return Err(DecomposeError::Inconsistent("dual descent count must complement k"));
    }
    let high = partition_from_descents(&top_descents, n);
    let expected = low.size() + high.size() + (m - k) * n + k * k;
    if h.size() != expected {
        return Err(DecomposeError::Inconsistent("size identity violated"));
    }
    Ok(TypeADecomposition { k, m, low, high })
}

/// Inverse of [`decompose_a`].
pub fn recompose_a(d: &TypeADecomposition, t: &AffineType) -> Result<Heap, DecomposeError> {
    if t.family != Family::A {
        return Err(DecomposeError::WrongFamily { expected: Family::A, got: t.family });
    }
    let n = t.n as usize;
    let g = t.graph().map_err(|_| DecomposeError::Inconsistent("family A needs n >= 3"))?;
    let k = d.k;
    if k == 0 || k >= n {
        return Err(DecomposeError::Inconsistent("k must be in 1..n"));
    }
    if !d.low.fits_in(k, n - k) || !d.high.fits_in(n - k, k) {
        return Err(DecomposeError::Inconsistent("partition outside its box"));
    }
    if 2 * d.m <= n {
        return Err(DecomposeError::TooShort { anchor_len: d.m, needed: n / 2 });
    }
    let descents = descents_from_partition(&d.low, k, n);
    let top_descents = descents_from_partition(&d.high, n - k, n);
    let is_descent: Vec<bool> = (0..n).map(|i| descents.binary_search(&i).is_ok()).collect();
    let is_top_ascent: Vec<bool> =
        (0..n).map(|i| top_descents.binary_search(&i).is_ok()).collect();
    let mut heights = vec![0usize; n];
    heights[0] = d.m;
    for i in 0..n - 1 {
        let step: i64 = match (is_descent[i], is_top_ascent[i]) {
            (true, true) => 1,
            (false, false) => -1,
            _ => 0,
        };
        let next = heights[i] as i64 + step;
        if next <= 0 {
            return Err(DecomposeError::Inconsistent("column height dropped to zero"));
        }
        heights[i + 1] = next as usize;
    }
    // wrap-around consistency of the final step
    let last_step: i64 = match (is_descent[n - 1], is_top_ascent[n - 1]) {
        (true, true) => 1,
        (false, false) => -1,
        _ => 0,
    };
    if heights[n - 1] as i64 + last_step != heights[0] as i64 {
        return Err(DecomposeError::Inconsistent("heights do not close up around the cycle"));
    }
    let starts_first: Vec<bool> = (0..n).map(|i| !is_descent[i]).collect();
    assemble_heap(&g, &heights, &starts_first, true)
}

/// Decomposition of a long alternating heap of the bond-4 path family:
/// bottom descent count `j`, top parameter `k`, anchor chain length `m`,
/// and the two boundary partitions. The size identity
/// `|H| = |low| + |high| + (m-(n-j))(n+1) + C(n-j+1,2) + C(n-k+1,2)` holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeCDecomposition {
    pub j: usize,
    pub k: usize,
    pub m: usize,
    /// Bottom boundary partition, at most `j` parts, each at most `n-j`.
    pub low: Partition,
    /// Top boundary partition, at most `n-k` parts, each at most `k`.
    pub high: Partition,
}

/// Extract the boundary data of a long alternating heap of the bond-4 path
/// family. Zigzag (non-alternating) heaps are rejected; the anchor chain
/// (generator 0) must have more than `n` elements.
pub fn decompose_c(h: &Heap, t: &AffineType) -> Result<TypeCDecomposition, DecomposeError> {
    if t.family != Family::C {
        return Err(DecomposeError::WrongFamily { expected: Family::C, got: t.family });
    }
    let n = t.n as usize;
    let g = t.graph().map_err(|_| DecomposeError::Inconsistent("graph construction failed"))?;
    if !h.is_alternating(&g) {
        return Err(DecomposeError::NotAlternating);
    }
    let m = h.chain_len(0);
    if m <= n {
        return Err(DecomposeError::TooShort { anchor_len: m, needed: n });
    }
    let descents = bottom_descents(h, n + 1, false);
    let j = descents.len();
    let low = partition_from_descents(&descents, n);
    let dual = h.dual();
    let top_descents = bottom_descents(&dual, n + 1, false);
    let q = top_descents.len();
    let k = n - q;
    let high = partition_from_descents(&top_descents, n);
    let expected = low.size()
        + high.size()
        + (m - (n - j)) * (n + 1)
        + (n - j + 1) * (n - j) / 2
        + (n - k + 1) * (n - k) / 2;
    if h.size() != expected {
        return Err(DecomposeError::Inconsistent("size identity violated"));
    }
    Ok(TypeCDecomposition { j, k, m, low, high })
}

/// Inverse of [`decompose_c`].
pub fn recompose_c(d: &TypeCDecomposition, t: &AffineType) -> Result<Heap, DecomposeError> {
    if t.family != Family::C {
        return Err(DecomposeError::WrongFamily { expected: Family::C, got: t.family });
    }
    let n = t.n as usize;
    let g = t.graph().map_err(|_| DecomposeError::Inconsistent("graph construction failed"))?;
    let (j, k) = (d.j, d.k);
    if j > n || k > n {
        return Err(DecomposeError::Inconsistent("indices must lie in 0..=n"));
    }
    if !d.low.fits_in(j, n - j) || !d.high.fits_in(n - k, k) {
        return Err(DecomposeError::Inconsistent("partition outside its box"));
    }
    if d.m <= n {
        return Err(DecomposeError::TooShort { anchor_len: d.m, needed: n });
    }
    let descents = descents_from_partition(&d.low, j, n);
    let top_descents = descents_from_partition(&d.high, n - k, n);
    let is_descent: Vec<bool> = (0..n).map(|i| descents.binary_search(&i).is_ok()).collect();
    let is_top_ascent: Vec<bool> =
        (0..n).map(|i| top_descents.binary_search(&i).is_ok()).collect();
    let mut heights = vec![0usize; n + 1];
    heights[0] = d.m;
    for i in 0..n {
        let step: i64 = match (is_descent[i], is_top_ascent[i]) {
            (true, true) => 1,
            (false, false) => -1,
            _ => 0,
        };
        let next = heights[i] as i64 + step;
        if next <= 0 {
            return Err(DecomposeError::Inconsistent("column height dropped to zero"));
        }
        heights[i + 1] = next as usize;
    }
    let starts_first: Vec<bool> = (0..n).map(|i| !is_descent[i]).collect();
    assemble_heap(&g, &heights, &starts_first, false)
}
