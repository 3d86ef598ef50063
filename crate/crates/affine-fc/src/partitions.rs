//! Integer partitions in a box, with the Durfee-square and staircase
//! bijections that underlie the two classical Gaussian-binomial identities
//! `sum_k [a k][b k] q^{k^2} = [a+b a]` and
//! `sum_k [n k] q^{k(k+1)/2} = prod (1+q^i)`.

use std::fmt;

use num_bigint::BigInt;

use crate::qseries::{Poly, Polynomial};

/// Errors from partition surgery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    /// The partition does not fit in the stated box.
    OutsideBox { rows: usize, cols: usize },
    /// Staircase bijection needs strictly decreasing parts.
    PartsNotDistinct,
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::OutsideBox { rows, cols } => {
                write!(f, "partition does not fit in a {rows}x{cols} box")
            }
            PartitionError::PartsNotDistinct => write!(f, "parts are not distinct"),
        }
    }
}

impl std::error::Error for PartitionError {}

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from parts, dropping trailing zeros. Panics if the remaining
    /// parts are not weakly decreasing and positive.
    pub fn new(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be weakly decreasing and positive: {parts:?}"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at `i` (zero beyond the last part).
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Whether the diagram fits in `rows` rows of width `cols`.
    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.parts.len() <= rows && self.parts.first().map_or(0, |&p| p as usize) <= cols
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Visit every partition with at most `max_parts` parts, each at most
/// `max_part`, in lexicographic order by part list. The callback receives
/// the current part slice (largest part first).
pub fn for_each_box_partition<F: FnMut(&[u32])>(max_parts: usize, max_part: usize, mut f: F) {
    fn recurse<F: FnMut(&[u32])>(
        parts: &mut Vec<u32>,
        remaining_rows: usize,
        bound: usize,
        f: &mut F,
    ) {
        f(parts);
        if remaining_rows == 0 {
            return;
        }
        for next in 1..=bound {
            parts.push(next as u32);
            recurse(parts, remaining_rows - 1, next, f);
            parts.pop();
        }
    }
    let mut parts = Vec::with_capacity(max_parts);
    f(&[]);
    if max_parts == 0 {
        return;
    }
    for first in 1..=max_part {
        parts.push(first as u32);
        recurse(&mut parts, max_parts - 1, first, &mut f);
        parts.pop();
    }
}

/// All partitions fitting in a `max_parts x max_part` box. The generating
/// polynomial by size equals `gauss_binomial(max_parts + max_part, max_parts)`.
pub fn box_partitions(max_parts: usize, max_part: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_box_partition(max_parts, max_part, |parts| {
        out.push(Partition { parts: parts.to_vec() });
    });
    out
}

/// Generating polynomial by size of a family of partitions.
pub fn size_polynomial(parts: &[Partition]) -> Poly {
    let max = parts.iter().map(Partition::size).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::from(0); max + 1];
    for p in parts {
        coeffs[p.size()] += 1;
    }
    Polynomial::new(coeffs)
}

/// Split a partition in an `a x b` box by its Durfee square: the largest
/// `k` with `part_k >= k`. Returns `(k, left, right)` where `left` (the
/// rows below the square) fits in `(a-k) x k` and `right` (the columns to
/// its right) fits in `k x (b-k)`, with
/// `size = k^2 + |left| + |right|`.
pub fn durfee_decompose(
    p: &Partition,
    a: usize,
    b: usize,
) -> Result<(usize, Partition, Partition), PartitionError> {
    if !p.fits_in(a, b) {
        return Err(PartitionError::OutsideBox { rows: a, cols: b });
    }
    let mut k = 0;
    while k < p.num_parts() && p.part(k) as usize >= k + 1 {
        k += 1;
    }
    let right = Partition::new((0..k).map(|r| p.part(r) - k as u32).collect());
    let left = Partition::new(p.parts()[k.min(p.num_parts())..].to_vec());
    debug_assert!(left.fits_in(a - k, k));
    debug_assert!(right.fits_in(k, b - k));
    debug_assert_eq!(p.size(), k * k + left.size() + right.size());
    Ok((k, left, right))
}

/// Inverse of [`durfee_decompose`].
pub fn durfee_recompose(k: usize, left: &Partition, right: &Partition) -> Partition {
    let mut parts: Vec<u32> = (0..k).map(|r| k as u32 + right.part(r)).collect();
    parts.extend_from_slice(left.parts());
    Partition::new(parts)
}

/// Map a distinct-part partition with largest part at most `n` to `(k, mu)`
/// where `k` is its number of parts and `mu` fits in a `k x (n-k)` box:
/// subtract `k, k-1, ..., 1` from the parts. `size = |mu| + k(k+1)/2`.
pub fn staircase_decompose(
    p: &Partition,
    n: usize,
) -> Result<(usize, Partition), PartitionError> {
    if !p.has_distinct_parts() {
        return Err(PartitionError::PartsNotDistinct);
    }
    if p.part(0) as usize > n {
        return Err(PartitionError::OutsideBox { rows: n, cols: n });
    }
    let k = p.num_parts();
    let mu = Partition::new((0..k).map(|r| p.part(r) - (k - r) as u32).collect());
    debug_assert!(mu.fits_in(k, n - k));
    debug_assert_eq!(p.size(), mu.size() + k * (k + 1) / 2);
    Ok((k, mu))
}

/// Inverse of [`staircase_decompose`]: add back the staircase `k, ..., 1`.
pub fn staircase_recompose(k: usize, mu: &Partition) -> Partition {
    Partition::new((0..k).map(|r| mu.part(r) + (k - r) as u32).collect())
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::qseries::{gauss_binomial, int_poly, neg_q_pochhammer, Polynomial};

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn box_enumeration_examples() {
        let ps = box_partitions(2, 2);
        assert_eq!(ps.len(), 6);
        assert_eq!(size_polynomial(&ps), int_poly(&[1, 1, 2, 1, 1]));
        assert_eq!(size_polynomial(&ps), gauss_binomial(4, 2));

        assert_eq!(box_partitions(0, 7), vec![Partition::empty()]);

        let ps = box_partitions(3, 3);
        assert_eq!(ps.len(), 20);
        assert_eq!(size_polynomial(&ps), gauss_binomial(6, 3));
    }

    #[test]
    fn box_polynomials_match_gauss_binomials() {
        for k in 0..=6usize {
            for w in 0..=6usize {
                assert_eq!(
                    size_polynomial(&box_partitions(k, w)),
                    gauss_binomial(k + w, k),
                    "box {k}x{w}"
                );
            }
        }
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(durfee_decompose(&Partition::empty(), 3, 3).unwrap(), (0, Partition::empty(), Partition::empty()));
        assert_eq!(durfee_decompose(&pt(&[2, 2]), 2, 2).unwrap(), (2, Partition::empty(), Partition::empty()));
        assert_eq!(durfee_decompose(&pt(&[3, 1]), 2, 3).unwrap(), (1, pt(&[1]), pt(&[2])));
        assert!(durfee_decompose(&pt(&[4]), 2, 3).is_err());
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase_decompose(&Partition::empty(), 3).unwrap(), (0, Partition::empty()));
        assert_eq!(staircase_decompose(&pt(&[3, 1]), 3).unwrap(), (2, pt(&[1])));
        assert_eq!(staircase_decompose(&pt(&[3, 2, 1]), 3).unwrap(), (3, Partition::empty()));
        assert!(staircase_decompose(&pt(&[2, 2]), 3).is_err());
    }

    #[test]
    fn durfee_bijection_reproduces_identity() {
        // summing q^{k^2 + |left| + |right|} over an a x b box gives [a+b a],
        // and the round trip restores every partition
        for a in 0..=9usize {
            for b in 0..=9usize {
                let expect = gauss_binomial(a + b, a);
                let mut coeffs = vec![BigInt::from(0); a * b + 1];
                for_each_box_partition(a, b, |parts| {
                    let p = Partition { parts: parts.to_vec() };
                    let (k, left, right) = durfee_decompose(&p, a, b).unwrap();
                    coeffs[k * k + left.size() + right.size()] += 1;
                    assert_eq!(durfee_recompose(k, &left, &right), p);
                });
                assert_eq!(Polynomial::new(coeffs), expect, "durfee in {a}x{b} box");
            }
        }
    }

    #[test]
    fn staircase_bijection_reproduces_identity() {
        // distinct-part partitions with largest part <= n, counted by size,
        // give prod_{i<=n} (1+q^i); the image lands in the k x (n-k) box
        for n in 0..=15usize {
            let expect = neg_q_pochhammer(n, 1);
            let mut coeffs = vec![BigInt::from(0); n * (n + 1) / 2 + 1];
            // enumerate distinct-part partitions as subsets of {1..n}
            for mask in 0u32..(1 << n) {
                let parts: Vec<u32> =
                    (1..=n as u32).rev().filter(|&p| mask & (1 << (p - 1)) != 0).collect();
                let p = Partition::new(parts);
                let (k, mu) = staircase_decompose(&p, n).unwrap();
                assert!(mu.fits_in(k, n - k));
                coeffs[p.size()] += 1;
                assert_eq!(mu.size() + k * (k + 1) / 2, p.size());
                assert_eq!(staircase_recompose(k, &mu), p);
            }
            assert_eq!(Polynomial::new(coeffs), expect, "staircase at n={n}");
        }
    }
}
