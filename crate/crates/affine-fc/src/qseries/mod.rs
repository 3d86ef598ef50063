//! Exact q-series arithmetic: Gaussian binomials, finite q-Pochhammer
//! products, quasi-rational tails `sum_i P_i(q)/(1-q^{N_i})`, geometric
//! expansion, ultimate-period extraction, and root-of-unity evaluation.
//!
//! Everything reported as ground truth here is computed with exact integer
//! arithmetic; complex double-precision evaluation exists only as a
//! cross-check tool ([`eval_at_root`], [`partial_fraction_coeffs`]).

pub mod poly;

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{FromPrimitive, ToPrimitive, Zero};

use crate::numtheory;

pub use poly::{Polynomial, Scalar};

/// Dense polynomial with arbitrary-precision integer coefficients.
pub type Poly = Polynomial<BigInt>;

/// Absolute tolerance for rounding complex evaluations that are known to be
/// integers. Far above double-precision noise for the degrees involved.
pub const ROUNDING_TOLERANCE: f64 = 1e-6;

/// Errors from q-series operations.
#[derive(Debug, Clone, PartialEq)]
pub enum QSeriesError {
    /// The coefficient window is too short to certify any period.
    InconclusivePeriod { window: usize, needed: usize },
    /// A complex evaluation expected to be an integer had rounding residue
    /// at least [`ROUNDING_TOLERANCE`].
    RoundingResidue { index: usize, residue: f64 },
}

impl fmt::Display for QSeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QSeriesError::InconclusivePeriod { window, needed } => write!(
                f,
                "inconclusive: window of {window} coefficients cannot certify a period (need at least {needed})"
            ),
            QSeriesError::RoundingResidue { index, residue } => write!(
                f,
                "rounding residue {residue:.3e} at index {index} exceeds tolerance {ROUNDING_TOLERANCE:.0e}"
            ),
        }
    }
}

impl std::error::Error for QSeriesError {}

/// Integer-coefficient polynomial from machine-word literals, for tests and
/// small closed forms.
pub fn int_poly(coeffs: &[i64]) -> Poly {
    Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

/// Gaussian binomial coefficient `[n k]_q` as an exact polynomial.
///
/// Computed by the Pascal-type recurrence
/// `[n k] = [n-1 k-1] + q^k [n-1 k]`; the result has degree `k(n-k)` and
/// nonnegative coefficients summing to `binomial(n, k)`.
///
/// Panics on the empty range `k > n`.
pub fn gauss_binomial(n: usize, k: usize) -> Poly {
    assert!(k <= n, "empty range: gauss_binomial({n}, {k}) needs k <= n");
    let k = k.min(n - k);
    // Build only the first k+1 columns of each row.
    let mut row: Vec<Poly> = vec![Poly::one()];
    for m in 1..=n {
        let width = k.min(m);
        let mut next: Vec<Poly> = Vec::with_capacity(width + 1);
        next.push(Poly::one());
        for j in 1..=width {
            let left = &row[j - 1];
            let up = if j < row.len() { row[j].shifted(j) } else { Poly::zero() };
            next.push(left + &up);
        }
        row = next;
    }
    row[k].clone()
}

/// Table of all Gaussian binomials `[n k]_q` for `n <= n_max`.
///
/// `table[n][k]` holds `[n k]_q`; handy when an identity sweep needs many of
/// them at once.
pub fn gauss_binomial_table(n_max: usize) -> Vec<Vec<Poly>> {
    let mut table: Vec<Vec<Poly>> = Vec::with_capacity(n_max + 1);
    table.push(vec![Poly::one()]);
    for n in 1..=n_max {
        let prev = &table[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        row.push(Poly::one());
        for k in 1..n {
            row.push(&prev[k - 1] + &prev[k].shifted(k));
        }
        row.push(Poly::one());
        table.push(row);
    }
    table
}

/// Finite product `prod_{i=1}^{n} (1 + q^{step*i})`.
///
/// `step = 1` gives the generating polynomial of partitions into distinct
/// parts at most `n`; `step = 2` is the same in `q^2`. The value at `q = 1`
/// is `2^n`.
pub fn neg_q_pochhammer(n: usize, step: usize) -> Poly {
    assert!(step >= 1, "pochhammer step must be positive");
    let mut acc = Poly::one();
    for i in 1..=n {
        let factor = &Poly::one() + &Poly::monomial(BigInt::from(1), step * i);
        acc = &acc * &factor;
    }
    acc
}

/// A finite sum of terms `numerator / (1 - q^modulus)`, considered only up
/// to an additive polynomial: the object of interest is the eventually
/// periodic tail of its coefficient sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiRational {
    terms: Vec<(Poly, u64)>,
}

impl QuasiRational {
    pub fn new() -> Self {
        QuasiRational { terms: Vec::new() }
    }

    /// Single term `numerator / (1 - q^modulus)`.
    pub fn from_term(numerator: Poly, modulus: u64) -> Self {
        let mut qr = QuasiRational::new();
        qr.push(numerator, modulus);
        qr
    }

    /// Append a term `numerator / (1 - q^modulus)`.
    pub fn push(&mut self, numerator: Poly, modulus: u64) {
        assert!(modulus >= 1, "modulus must be positive");
        self.terms.push((numerator, modulus));
    }

    pub fn terms(&self) -> &[(Poly, u64)] {
        &self.terms
    }

    /// Least common multiple of the term moduli; a guaranteed (not
    /// necessarily minimal) period of the coefficient tail.
    pub fn lcm_moduli(&self) -> u64 {
        self.terms.iter().fold(1, |acc, (_, m)| acc.lcm(m))
    }

    /// First index from which every expansion coefficient has reached its
    /// eventual residue-class value: one past the largest numerator degree.
    pub fn stabilization_bound(&self) -> usize {
        self.terms.iter().map(|(p, _)| p.degree().map_or(0, |d| d + 1)).max().unwrap_or(0)
    }

    /// Exact coefficients `c_0 .. c_order` of the geometric expansion: each
    /// term contributes `numerator * (1 + q^N + q^{2N} + ...)`.
    pub fn expand(&self, order: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); order + 1];
        for (num, modulus) in &self.terms {
            let step = *modulus as usize;
            for (i, c) in num.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut e = i;
                while e <= order {
                    out[e] += c;
                    e += step;
                }
            }
        }
        out
    }
}

impl Default for QuasiRational {
    fn default() -> Self {
        QuasiRational::new()
    }
}

/// Certified ultimately periodic tail of a coefficient sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailReport {
    /// First index from which periodicity is certified within the window.
    pub start: usize,
    /// Minimal certified period (a divisor of the lcm hint).
    pub period: usize,
    /// Tail values indexed by residue class: `pattern[r]` is the eventual
    /// value at indices congruent to `r` modulo `period`.
    pub pattern: Vec<BigInt>,
    /// Last index of the inspected window.
    pub window_end: usize,
}

/// Find the minimal ultimate period of `coeffs` among the divisors of
/// `lcm_hint`, certifying it on a suffix of length `3 * lcm_hint`.
///
/// `lcm_hint` must be a guaranteed period of the tail (for sequences
/// expanded from a [`QuasiRational`] use [`QuasiRational::lcm_moduli`]).
/// Returns an inconclusive error rather than guessing when the window is
/// too short.
pub fn tail_min_period(coeffs: &[BigInt], lcm_hint: u64) -> Result<TailReport, QSeriesError> {
    assert!(lcm_hint >= 1, "lcm hint must be positive");
    let hint = lcm_hint as usize;
    let window = 3 * hint;
    let len = coeffs.len();
    if len < window + 1 {
        return Err(QSeriesError::InconclusivePeriod { window: len, needed: window + 1 });
    }
    let window_end = len - 1;
    let suffix_start = len - window;
    let is_period_from = |p: usize, s: usize| (s..=window_end - p).all(|l| coeffs[l] == coeffs[l + p]);

    let mut divisors = numtheory::divisors(lcm_hint);
    divisors.sort_unstable();
    for d in divisors {
        let p = d as usize;
        if !is_period_from(p, suffix_start) {
            continue;
        }
        // smallest certified start for this period
        let mut start = suffix_start;
        while start > 0 && coeffs[start - 1] == coeffs[start - 1 + p] {
            start -= 1;
        }
        let mut pattern = vec![BigInt::zero(); p];
        for t in 0..p {
            pattern[(start + t) % p] = coeffs[start + t].clone();
        }
        return Ok(TailReport { start, period: p, pattern, window_end });
    }
    Err(QSeriesError::InconclusivePeriod { window: len, needed: window + 1 })
}

/// Exact residue-class sums of the coefficients of `p` modulo `modulus`:
/// entry `r` is the sum of coefficients of `q^i` over `i = r (mod modulus)`.
/// This is the reduction of `p` modulo `q^modulus - 1`.
pub fn residue_class_sums(p: &Poly, modulus: u64) -> Vec<BigInt> {
    assert!(modulus >= 1, "modulus must be positive");
    let m = modulus as usize;
    let mut sums = vec![BigInt::zero(); m];
    for (i, c) in p.coeffs().iter().enumerate() {
        sums[i % m] += c;
    }
    sums
}

/// Evaluate `p` at the root of unity `exp(2*pi*i*j/modulus)` in complex
/// double precision.
///
/// The polynomial is first reduced exactly modulo `q^modulus - 1` (integer
/// residue-class sums) and recentered by the integer mean, which cancels
/// out of the evaluation at any nontrivial root; the short Horner loop then
/// runs on small integers, keeping rounding residue orders of magnitude
/// below [`ROUNDING_TOLERANCE`] even for degrees in the hundreds.
pub fn eval_at_root(p: &Poly, modulus: u64, j: i64) -> Complex64 {
    let m = modulus as i64;
    let jm = j.rem_euclid(m) as u64;
    let sums = residue_class_sums(p, modulus);
    if jm == 0 {
        let total: BigInt = sums.into_iter().sum();
        return Complex64::new(total.to_f64().unwrap_or(f64::NAN), 0.0);
    }
    let total: BigInt = sums.iter().sum();
    let mean = total.div_floor(&BigInt::from(modulus));
    let theta = 2.0 * std::f64::consts::PI * (jm as f64) / (modulus as f64);
    let z = Complex64::new(theta.cos(), theta.sin());
    let mut acc = Complex64::new(0.0, 0.0);
    for s in sums.iter().rev() {
        let centered = (s - &mean).to_f64().unwrap_or(f64::NAN);
        acc = acc * z + centered;
    }
    acc
}

/// Numeric partial-fraction coefficients of `p / (1 - q^modulus)` over the
/// simple poles at the roots of unity: entry `j` is
/// `p(xi^{-j}) / modulus` with `xi = exp(2*pi*i/modulus)`.
pub fn partial_fraction_coeffs(p: &Poly, modulus: u64) -> Vec<Complex64> {
    (0..modulus)
        .map(|j| eval_at_root(p, modulus, -(j as i64)) / (modulus as f64))
        .collect()
}

/// Rounded partial-fraction numerators `modulus * alpha_j = p(xi^{-j})`,
/// for use when those values are known to be integers.
///
/// Fails with a precision error if any rounding residue reaches
/// [`ROUNDING_TOLERANCE`]; the caller must then supply an exact closed form
/// instead.
pub fn partial_fraction_numerators(p: &Poly, modulus: u64) -> Result<Vec<BigInt>, QSeriesError> {
    let mut out = Vec::with_capacity(modulus as usize);
    for j in 0..modulus {
        let v = eval_at_root(p, modulus, -(j as i64));
        let rounded = v.re.round();
        let residue = ((v.re - rounded).powi(2) + v.im.powi(2)).sqrt();
        if residue >= ROUNDING_TOLERANCE {
            return Err(QSeriesError::RoundingResidue { index: j as usize, residue });
        }
        out.push(BigInt::from_f64(rounded).expect("finite rounded value"));
    }
    Ok(out)
}

/// Outcome of checking the finite q-binomial theorem
/// `prod_{i=0}^{n-1} (y - q^i) = sum_k [n k]_q q^{C(k,2)} (-1)^k y^{n-k}`
/// at sampled integer values of `y`.
#[derive(Debug, Clone)]
pub struct QbinomFormulaCheck {
    pub ok: bool,
    /// `(y, lhs, rhs)` for every sampled `y` where the sides disagree.
    pub counterexamples: Vec<(i64, Poly, Poly)>,
}

/// Verify the finite q-binomial theorem as an exact polynomial identity in
/// `q` for each integer `y` in `y_samples`.
pub fn qbinom_formula_check(n: usize, y_samples: &[i64]) -> QbinomFormulaCheck {
    let binomials = gauss_binomial_table(n);
    let mut counterexamples = Vec::new();
    for &y in y_samples {
        let y_big = BigInt::from(y);
        // lhs: prod_{i=0}^{n-1} (y - q^i)
        let mut lhs = Poly::one();
        for i in 0..n {
            let factor = &Poly::constant(y_big.clone()) - &Poly::monomial(BigInt::from(1), i);
            lhs = &lhs * &factor;
        }
        // rhs: sum_k [n k] q^{k(k-1)/2} (-1)^k y^{n-k}
        let mut rhs = Poly::zero();
        for k in 0..=n {
            let mut scale = y_big.pow((n - k) as u32);
            if k % 2 == 1 {
                scale = -scale;
            }
            let term = binomials[n][k].shifted(k * k.saturating_sub(1) / 2).scaled(&scale);
            rhs = &rhs + &term;
        }
        if lhs != rhs {
            counterexamples.push((y, lhs, rhs));
        }
    }
    QbinomFormulaCheck { ok: counterexamples.is_empty(), counterexamples }
}
