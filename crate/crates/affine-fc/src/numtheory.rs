//! Elementary arithmetic functions and exact Ramanujan sums.
//!
//! Factorization is plain trial division; every input in this crate stays
//! well below a million. The Ramanujan sum uses the Hoelder closed form so
//! that no floating point enters reported values; complex summation over
//! primitive roots exists only in tests as an independent oracle.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::One;

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

/// Prime factorization `[(p, multiplicity)]` by trial division, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize needs a positive integer");
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1];
    for (p, e) in factorize(n) {
        let base = divs.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            divs.extend(base.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    divs
}

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// Moebius function: 0 on non-squarefree, otherwise parity of the number of
/// prime factors.
pub fn mobius(n: u64) -> i64 {
    let factors = factorize(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        return 0;
    }
    if factors.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Some((p, alpha))` when `n = p^alpha` for a prime `p` and `alpha >= 1`.
pub fn is_prime_power(n: u64) -> Option<(u64, u32)> {
    let factors = factorize(n);
    match factors.as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Ramanujan sum: sum of `l`-th powers of the primitive `r`-th roots of
/// unity, via the Hoelder formula `mu(r/g) * phi(r) / phi(r/g)` with
/// `g = gcd(r, l)`.
pub fn ramanujan_sum(r: u64, l: u64) -> i64 {
    assert!(r >= 1, "ramanujan_sum needs r >= 1");
    let g = gcd(r, l);
    let rg = r / g;
    let mu = mobius(rg);
    if mu == 0 {
        return 0;
    }
    mu * (euler_phi(r) / euler_phi(rg)) as i64
}

/// Gaussian binomial `[n k]_q` evaluated at the root of unity
/// `exp(2*pi*i*j/n)`, by the exact closed form: with `d = gcd(n, j)` the
/// value is `binomial(d, k*d/n)` when `n` divides `k*d`, and `0` otherwise.
pub fn qbi_at_root(n: u64, k: u64, j: i64) -> BigInt {
    assert!(k <= n, "qbi_at_root needs k <= n");
    let jm = j.rem_euclid(n as i64) as u64;
    let d = if jm == 0 { n } else { gcd(n, jm) };
    if (k * d) % n == 0 {
        binomial(d, k * d / n)
    } else {
        BigInt::from(0)
    }
}

/// A root of unity `exp(2*pi*i*exponent/modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootOfUnity {
    modulus: u64,
    exponent: u64,
}

impl RootOfUnity {
    pub fn new(modulus: u64, exponent: i64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        RootOfUnity { modulus, exponent: exponent.rem_euclid(modulus as i64) as u64 }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Multiplicative order: `modulus / gcd(modulus, exponent)`.
    pub fn order(&self) -> u64 {
        if self.exponent == 0 {
            1
        } else {
            self.modulus / gcd(self.modulus, self.exponent)
        }
    }

    pub fn value(&self) -> Complex64 {
        let theta = 2.0 * std::f64::consts::PI * self.exponent as f64 / self.modulus as f64;
        Complex64::new(theta.cos(), theta.sin())
    }
}

#[cfg(test)]
mod tests {
    use num_traits::ToPrimitive;

    use super::*;

    #[test]
    fn basic_arithmetic_functions() {
        assert_eq!(is_prime_power(8), Some((2, 3)));
        assert_eq!(is_prime_power(10), None);
        assert_eq!(is_prime_power(1), None);
        assert_eq!(is_prime_power(13), Some((13, 1)));
        assert_eq!(euler_phi(6), 2);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(binomial(20, 10), BigInt::from(184756));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }

    #[test]
    fn euler_phi_matches_definition_scan() {
        for n in 1..=200u64 {
            let direct = (1..=n).filter(|&k| gcd(n, k) == 1).count() as u64;
            assert_eq!(euler_phi(n), direct, "phi({n})");
        }
    }

    #[test]
    fn ramanujan_sum_examples() {
        for l in 0..10 {
            assert_eq!(ramanujan_sum(1, l), 1);
        }
        for r in 1..30 {
            assert_eq!(ramanujan_sum(r, 0), euler_phi(r) as i64);
        }
        assert_eq!(ramanujan_sum(6, 2), -1);
        assert_eq!(ramanujan_sum(4, 2), -2);
    }

    #[test]
    fn ramanujan_sum_matches_complex_summation() {
        for r in 1..=200u64 {
            for l in [0, 1, 2, 5, r - 1, r, r + 1, 2 * r + 3] {
                let mut acc = Complex64::new(0.0, 0.0);
                for j in 1..=r {
                    if gcd(j, r) == 1 {
                        let theta =
                            2.0 * std::f64::consts::PI * ((l % r) * j % r) as f64 / r as f64;
                        acc += Complex64::new(theta.cos(), theta.sin());
                    }
                }
                let exact = ramanujan_sum(r, l) as f64;
                assert!(
                    (acc.re - exact).abs() < 1e-6 && acc.im.abs() < 1e-6,
                    "Ram_{r}({l}): complex {acc}, exact {exact}"
                );
            }
        }
    }

    #[test]
    fn ramanujan_orthogonality_and_bound() {
        // sum over d | r of Ram_d(l) is r when r | l and 0 otherwise
        for r in 1..=100u64 {
            for l in 0..=3 * r {
                let total: i64 = divisors(r).iter().map(|&d| ramanujan_sum(d, l)).sum();
                let expect = if l % r == 0 { r as i64 } else { 0 };
                assert_eq!(total, expect, "orthogonality at r={r}, l={l}");
            }
        }
        for r in 1..=100u64 {
            for l in 0..2 * r {
                assert!(ramanujan_sum(r, l).unsigned_abs() <= euler_phi(r));
            }
        }
    }

    #[test]
    fn qbi_at_root_examples() {
        assert_eq!(qbi_at_root(4, 2, 1), BigInt::from(0));
        assert_eq!(qbi_at_root(4, 2, 2), BigInt::from(2));
        for n in 1..=12u64 {
            for k in 0..=n {
                assert_eq!(qbi_at_root(n, k, 0), binomial(n, k));
            }
        }
    }

    #[test]
    fn qbi_at_root_matches_numeric_evaluation() {
        for n in 1..=30u64 {
            for k in 0..=n {
                let p = crate::qseries::gauss_binomial(n as usize, k as usize);
                for j in 0..n as i64 {
                    let exact = qbi_at_root(n, k, j).to_f64().unwrap();
                    let numeric = crate::qseries::eval_at_root(&p, n, j);
                    assert!(
                        (numeric.re - exact).abs() < 1e-6 && numeric.im.abs() < 1e-6,
                        "[{n} {k}] at root {j}: numeric {numeric}, exact {exact}"
                    );
                }
            }
        }
    }

    #[test]
    fn central_binomial_instantiation() {
        // [2n n] at even exponents reduces to a smaller central binomial
        for n in 1..=30u64 {
            for j in 0..n as i64 {
                let d = if j == 0 { n } else { gcd(n, j as u64) };
                assert_eq!(qbi_at_root(2 * n, n, 2 * j), binomial(2 * d, d));
            }
        }
    }

    #[test]
    fn root_of_unity_order() {
        assert_eq!(RootOfUnity::new(12, 8).order(), 3);
        assert_eq!(RootOfUnity::new(12, 0).order(), 1);
        assert_eq!(RootOfUnity::new(7, -1).order(), 7);
        let z = RootOfUnity::new(8, 1);
        assert!((z.value().powu(8) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }
}
