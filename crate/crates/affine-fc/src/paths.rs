//! Lattice paths with unit up, down, and two flavors of level steps,
//! normalized to touch the x-axis from above. Two families are counted:
//! closed paths (equal numbers of up and down steps) weighted by the area
//! below them, and free paths weighted by the sum of all node heights.
//! The closed family carries a rotation action whose fixed points realize
//! a cyclic sieving phenomenon against the area generating polynomial.

use std::fmt;

use num_bigint::BigInt;

use crate::numtheory::{binomial, gcd};
use crate::qseries::{eval_at_root, Poly, Polynomial};

/// A single step: up, down, or one of two level flavors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
    H1,
    H2,
}

impl Step {
    fn rise(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D => -1,
            Step::H1 | Step::H2 => 0,
        }
    }

    fn from_code(c: usize) -> Step {
        match c {
            0 => Step::U,
            1 => Step::D,
            2 => Step::H1,
            _ => Step::H2,
        }
    }
}

/// Errors from path operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathError {
    /// Rotation needs a closed path (equal up and down steps).
    NotClosed,
    /// Enumeration request too large to run exactly.
    TooLarge { n: usize, limit: usize },
}

impl fmt::Display for PathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathError::NotClosed => write!(f, "path is not closed under rotation"),
            PathError::TooLarge { n, limit } => {
                write!(f, "path enumeration for n={n} exceeds the exact limit {limit}")
            }
        }
    }
}

impl std::error::Error for PathError {}

/// Largest step count enumerated exhaustively (4^n words).
pub const ENUMERATION_LIMIT: usize = 12;

/// A path of `n` steps with base height normalized so that the minimum
/// node height is zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Node heights `h_0 ..= h_n`, shifted so their minimum is zero.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = Vec::with_capacity(self.steps.len() + 1);
        let mut cur = 0i64;
        h.push(cur);
        for s in &self.steps {
            cur += s.rise();
            h.push(cur);
        }
        let min = *h.iter().min().unwrap();
        for v in &mut h {
            *v -= min;
        }
        h
    }

    /// Whether the endpoints have equal height.
    pub fn is_closed(&self) -> bool {
        self.steps.iter().map(|s| s.rise()).sum::<i64>() == 0
    }

    /// Area below a closed path: the sum of `h_0 .. h_{n-1}`, which equals
    /// the trapezoid area under the steps when `h_0 = h_n`.
    pub fn area(&self) -> u64 {
        let h = self.heights();
        h[..h.len() - 1].iter().sum::<i64>() as u64
    }

    /// Sum of all node heights `h_0 ..= h_n`.
    pub fn height_sum(&self) -> u64 {
        self.heights().iter().sum::<i64>() as u64
    }

    /// Move the first step to the end and renormalize the base height.
    /// Defined for closed paths, where the result is again closed and the
    /// n-fold rotation is the identity.
    pub fn rotate(&self) -> Result<LatticePath, PathError> {
        if !self.is_closed() {
            return Err(PathError::NotClosed);
        }
        let mut steps = self.steps.clone();
        if !steps.is_empty() {
            let first = steps.remove(0);
            steps.push(first);
        }
        Ok(LatticePath { steps })
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            let c = match s {
                Step::U => 'U',
                Step::D => 'D',
                Step::H1 => 'h',
                Step::H2 => 'H',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn check_limit(n: usize) -> Result<(), PathError> {
    if n > ENUMERATION_LIMIT {
        return Err(PathError::TooLarge { n, limit: ENUMERATION_LIMIT });
    }
    Ok(())
}

fn for_each_word(n: usize, mut f: impl FnMut(LatticePath)) {
    for code in 0..4usize.pow(n as u32) {
        let mut c = code;
        let steps: Vec<Step> = (0..n)
            .map(|_| {
                let s = Step::from_code(c % 4);
                c /= 4;
                s
            })
            .collect();
        f(LatticePath::new(steps));
    }
}

/// All closed paths of `n` steps (equal up and down counts). Their number
/// is the central binomial coefficient `binomial(2n, n)`.
pub fn enumerate_closed(n: usize) -> Result<Vec<LatticePath>, PathError> {
    check_limit(n)?;
    let mut out = Vec::new();
    for_each_word(n, |p| {
        if p.is_closed() {
            out.push(p);
        }
    });
    Ok(out)
}

/// Area generating polynomial of the closed family.
pub fn closed_area_poly(n: usize) -> Result<Poly, PathError> {
    check_limit(n)?;
    let mut coeffs = vec![BigInt::from(0); n * n / 2 + 2];
    for_each_word(n, |p| {
        if p.is_closed() {
            coeffs[p.area() as usize] += 1;
        }
    });
    Ok(Polynomial::new(coeffs))
}

/// All paths of `n` steps with free endpoints; there are `4^n` of them.
pub fn enumerate_free(n: usize) -> Result<Vec<LatticePath>, PathError> {
    check_limit(n)?;
    let mut out = Vec::new();
    for_each_word(n, |p| out.push(p));
    Ok(out)
}

/// Height-sum generating polynomial of the free family.
pub fn free_height_poly(n: usize) -> Result<Poly, PathError> {
    check_limit(n)?;
    let mut coeffs = vec![BigInt::from(0); n * (n + 1) + 2];
    for_each_word(n, |p| {
        coeffs[p.height_sum() as usize] += 1;
    });
    Ok(Polynomial::new(coeffs))
}

/// One row of the cyclic sieving check for rotation power `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CspRow {
    pub j: usize,
    /// Fixed points of the `j`-th rotation power, counted directly.
    pub fixed_points: u64,
    /// Area polynomial evaluated at the `j`-th power of the primitive
    /// `n`-th root of unity, rounded to the nearest integer.
    pub evaluation: BigInt,
    /// Central binomial `binomial(2 gcd(n,j), gcd(n,j))`.
    pub binomial: BigInt,
}

impl CspRow {
    pub fn coincide(&self) -> bool {
        BigInt::from(self.fixed_points) == self.evaluation && self.evaluation == self.binomial
    }
}

/// For each rotation power `j` of the closed `n`-step family, report the
/// direct fixed-point count, the rounded root-of-unity evaluation of the
/// area polynomial, and the closed-form central binomial. The three agree
/// exactly when the cyclic sieving phenomenon holds.
pub fn csp_verify(n: usize) -> Result<Vec<CspRow>, PathError> {
    let paths = enumerate_closed(n)?;
    let poly = closed_area_poly(n)?;
    let mut fixed = vec![0u64; n];
    for p in &paths {
        let mut q = p.clone();
        for j in 1..=n {
            q = q.rotate().expect("closed stays closed");
            if j < n && q == *p {
                fixed[j] += 1;
            }
        }
        debug_assert_eq!(q, *p, "n-fold rotation is the identity");
    }
    fixed[0] = paths.len() as u64;
    let mut rows = Vec::with_capacity(n);
    for j in 0..n {
        let v = eval_at_root(&poly, n as u64, j as i64);
        let evaluation = BigInt::from(v.re.round() as i64);
        let d = if j == 0 { n as u64 } else { gcd(n as u64, j as u64) };
        rows.push(CspRow { j, fixed_points: fixed[j], evaluation, binomial: binomial(2 * d, d) });
    }
    Ok(rows)
}
