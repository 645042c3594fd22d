//! Exact integer combinatorics: binomials with arbitrary integer upper
//! index, generalized binomial coefficients, Eulerian numbers and dense
//! integer polynomials.

use std::fmt;
use std::ops::Mul;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;

/// `C(r, k)` via the falling factorial `r(r-1)...(r-k+1) / k!`.
///
/// Defined for every integer `r`; zero when `k < 0`. For `0 <= r < k` the
/// falling factorial passes through zero, so the result is zero as well.
pub fn binomial(r: i64, k: i64) -> Integer {
    if k < 0 {
        return Integer::zero();
    }
    // symmetry only applies to a nonnegative upper index
    let k = if r >= 0 && k <= r { k.min(r - k) } else { k };
    if r >= 0 && k > r {
        return Integer::zero();
    }
    let mut acc = Integer::one();
    for i in 0..k {
        // acc * (r - i) is a product of i + 1 consecutive integers, so the
        // division by i + 1 is exact at every step
        acc *= r - i;
        acc /= i + 1;
    }
    acc
}

/// Coefficient of `x^m` in `(1 + x + ... + x^(s-1))^n`.
pub fn gbinomial(n: u32, m: i64, order: u32) -> Result<Integer> {
    if order == 0 {
        return Err(Error::InvalidOrder(order));
    }
    let top = i64::from(n) * (i64::from(order) - 1);
    if m < 0 || m > top {
        return Ok(Integer::zero());
    }
    let base = IntPolynomial::from_coeffs(vec![Integer::one(); order as usize]);
    Ok(base.pow_truncated(n, m as usize).coeff(m as usize))
}

fn eulerian_rows() -> &'static RwLock<Vec<Vec<Integer>>> {
    static ROWS: OnceLock<RwLock<Vec<Vec<Integer>>>> = OnceLock::new();
    ROWS.get_or_init(|| RwLock::new(vec![vec![Integer::one()]]))
}

/// Eulerian number `E(d, i)`: permutations of `d` elements with exactly
/// `i` descents.
///
/// Rows are built by the recurrence
/// `E(n, k) = (k + 1) E(n-1, k) + (n - k) E(n-1, k-1)` and cached for the
/// lifetime of the process.
pub fn eulerian(d: u32, i: i64) -> Integer {
    let d = d as usize;
    if i < 0 || i as usize >= d.max(1) {
        return Integer::zero();
    }
    let i = i as usize;
    {
        let rows = eulerian_rows().read().unwrap();
        if let Some(row) = rows.get(d) {
            return row[i].clone();
        }
    }
    let mut rows = eulerian_rows().write().unwrap();
    while rows.len() <= d {
        let n = rows.len();
        let prev = &rows[n - 1];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_default();
        let row: Vec<Integer> = (0..n)
            .map(|k| {
                let stay = at(k) * (k + 1);
                let rise = if k == 0 { Integer::zero() } else { at(k - 1) * (n - k) };
                stay + rise
            })
            .collect();
        rows.push(row);
    }
    rows[d][i].clone()
}

/// Dense polynomial with integer coefficients; `coeffs[j]` multiplies `x^j`.
///
/// Always stored trimmed: no trailing zero coefficients, and the zero
/// polynomial has no coefficients at all.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<Integer>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![Integer::one()] }
    }

    pub fn from_coeffs(coeffs: Vec<Integer>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    /// `(1 - x)^e`, exactly.
    pub fn one_minus_x_pow(e: u32) -> Self {
        Self::from_coeffs(
            (0..=i64::from(e))
                .map(|k| {
                    let c = binomial(i64::from(e), k);
                    if k % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent with a nonzero coefficient; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, j: usize) -> Integer {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    /// Coefficients `0..=deg`, zero-padded.
    pub fn coeffs_through(&self, deg: usize) -> Vec<Integer> {
        (0..=deg).map(|j| self.coeff(j)).collect()
    }

    pub fn truncate(&self, deg: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(deg + 1).cloned().collect())
    }

    /// Product with all terms above `deg` discarded.
    pub fn mul_truncated(&self, other: &Self, deg: usize) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(deg + 1);
        let mut out = vec![Integer::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// `self^e` truncated to degree `deg`, by repeated squaring.
    pub fn pow_truncated(&self, mut e: u32, deg: usize) -> Self {
        let mut result = Self::one();
        let mut base = self.truncate(deg);
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_truncated(&base, deg);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_truncated(&base, deg);
            }
        }
        result
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        self.mul_truncated(rhs, self.coeffs.len() + rhs.coeffs.len() - 2)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{j}")?,
                (_, false) => write!(f, "{mag}x^{j}")?,
            }
        }
        Ok(())
    }
}

pub fn poly_mul(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    p * q
}

pub fn poly_pow_truncated(p: &IntPolynomial, e: u32, deg: usize) -> IntPolynomial {
    p.pow_truncated(e, deg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    // falling factorial over factorial, kept apart from the stepwise loop
    fn binomial_by_product(r: i64, k: i64) -> Integer {
        if k < 0 {
            return Integer::zero();
        }
        let num: Integer = (0..k).map(|i| int(r - i)).product();
        let den: Integer = (1..=k).map(int).product();
        assert!((&num % &den).is_zero());
        num / den
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn descents_histogram(n: usize) -> Vec<u64> {
        let mut hist = vec![0u64; n.max(1)];
        for p in permutations(n) {
            let des = p.windows(2).filter(|w| w[0] > w[1]).count();
            hist[des] += 1;
        }
        hist
    }

    fn gbinomial_by_enumeration(n: u32, m: i64, s: u32) -> Integer {
        let mut count = 0u64;
        let total = (s as u64).pow(n);
        for mut code in 0..total {
            let mut sum = 0i64;
            for _ in 0..n {
                sum += (code % s as u64) as i64;
                code /= s as u64;
            }
            if sum == m {
                count += 1;
            }
        }
        int(count as i64)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(4, -1), int(0));
        assert_eq!(binomial(-1, 2), binomial_by_product(-1, 2));
        assert_eq!(binomial(-1, 2), int(1));
        assert_eq!(binomial(3, 7), int(0));
        assert_eq!(binomial(-3, 3), int(-10));
    }

    #[test]
    fn binomial_matches_product_formula() {
        for r in -15..=25 {
            for k in -2..=20 {
                assert_eq!(binomial(r, k), binomial_by_product(r, k), "C({r},{k})");
            }
        }
    }

    #[test]
    fn binomial_is_exact_for_huge_values() {
        let c = binomial(200, 100);
        assert_eq!(c.to_string(), "90548514656103281165404177077484163874504589675413336841320");
    }

    #[test]
    fn gbinomial_examples() {
        assert_eq!(gbinomial(3, 2, 2).unwrap(), int(3));
        assert_eq!(gbinomial(4, 1, 1).unwrap(), int(0));
        assert_eq!(gbinomial(2, 2, 3).unwrap(), gbinomial_by_enumeration(2, 2, 3));
        assert_eq!(gbinomial(2, 2, 3).unwrap(), int(3));
        assert_eq!(gbinomial(0, 0, 5).unwrap(), int(1));
        assert_eq!(gbinomial(3, -1, 2).unwrap(), int(0));
        assert_eq!(gbinomial(2, 0, 0), Err(Error::InvalidOrder(0)));
    }

    #[test]
    fn gbinomial_matches_enumeration() {
        for s in 1..=4 {
            for n in 0..=6 {
                for m in -1..=(n as i64 * (s as i64 - 1) + 1) {
                    assert_eq!(gbinomial(n, m, s).unwrap(), gbinomial_by_enumeration(n, m, s));
                }
            }
        }
    }

    #[test]
    fn gbinomial_order_two_is_binomial() {
        for n in 0..=30u32 {
            for m in 0..=n as i64 {
                assert_eq!(gbinomial(n, m, 2).unwrap(), binomial(n as i64, m));
            }
        }
    }

    #[test]
    fn gbinomial_row_sum_and_symmetry() {
        for s in 1..=5u32 {
            for n in 0..=8u32 {
                let top = n as i64 * (s as i64 - 1);
                let row: Vec<Integer> = (0..=top).map(|m| gbinomial(n, m, s).unwrap()).collect();
                assert_eq!(row.iter().sum::<Integer>(), Integer::from(s).pow(n));
                for m in 0..=top {
                    assert_eq!(row[m as usize], row[(top - m) as usize]);
                }
            }
        }
    }

    #[test]
    fn eulerian_examples() {
        assert_eq!(eulerian(3, 1), int(4));
        assert_eq!(eulerian(4, 1), int(11));
        for d in 1..10 {
            assert_eq!(eulerian(d, 0), int(1));
        }
        assert_eq!(eulerian(0, 0), int(1));
        assert_eq!(eulerian(0, 1), int(0));
        assert_eq!(eulerian(4, 4), int(0));
        assert_eq!(eulerian(4, -1), int(0));
    }

    #[test]
    fn eulerian_matches_descent_census() {
        for n in 1..=7usize {
            let hist = descents_histogram(n);
            for (i, &count) in hist.iter().enumerate() {
                assert_eq!(eulerian(n as u32, i as i64), int(count as i64), "E({n},{i})");
            }
        }
    }

    #[test]
    fn eulerian_matches_alternating_sum() {
        // E(n, k) = sum_{j=0}^{k} (-1)^j C(n+1, j) (k+1-j)^n
        for n in 1..=14u32 {
            for k in 0..n as i64 {
                let closed: Integer = (0..=k)
                    .map(|j| {
                        let t = binomial(i64::from(n) + 1, j) * int(k + 1 - j).pow(n);
                        if j % 2 == 0 {
                            t
                        } else {
                            -t
                        }
                    })
                    .sum();
                assert_eq!(eulerian(n, k), closed);
            }
        }
    }

    #[test]
    fn eulerian_rows_sum_to_factorial() {
        for d in 1..=9u32 {
            let sum: Integer = (0..d as i64).map(|i| eulerian(d, i)).sum();
            let fact: Integer = (1..=i64::from(d)).map(int).product();
            assert_eq!(sum, fact);
        }
    }

    #[test]
    fn eulerian_concurrent_readers_agree() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || (0..20u32).map(|d| eulerian(d + t % 3, 1)).collect::<Vec<_>>()))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (t, row) in results.iter().enumerate() {
            for (d, v) in row.iter().enumerate() {
                assert_eq!(*v, eulerian(d as u32 + t as u32 % 3, 1));
            }
        }
    }

    #[test]
    fn poly_examples() {
        let a = IntPolynomial::from_i64s(&[1, -1]);
        let b = IntPolynomial::from_i64s(&[1, 1]);
        assert_eq!(poly_mul(&a, &b), IntPolynomial::from_i64s(&[1, 0, -1]));

        let cube = poly_pow_truncated(&a, 3, 3);
        assert_eq!(cube, IntPolynomial::from_i64s(&[1, -3, 3, -1]));
        let series = IntPolynomial::from_i64s(&[1, 6, 15, 28]);
        assert_eq!(
            poly_mul(&cube, &series).truncate(3).coeffs_through(3),
            IntPolynomial::from_i64s(&[1, 3]).coeffs_through(3)
        );

        assert!(poly_mul(&a, &IntPolynomial::zero()).is_zero());
        assert_eq!(poly_pow_truncated(&a, 0, 4), IntPolynomial::one());
        assert_eq!(poly_pow_truncated(&a, 5, 2), IntPolynomial::from_i64s(&[1, -5, 10]));
        assert_eq!(IntPolynomial::one_minus_x_pow(5), poly_pow_truncated(&a, 5, 5));
    }

    #[test]
    fn poly_canonical_form() {
        let p = IntPolynomial::from_i64s(&[0, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(IntPolynomial::from_i64s(&[0, 0]).degree(), None);
        assert_eq!(p.to_string(), "2x");
        assert_eq!(IntPolynomial::from_i64s(&[1, -3, 3, -1]).to_string(), "1 - 3x + 3x^2 - x^3");
    }

    fn schoolbook(p: &[i64], q: &[i64]) -> Vec<Integer> {
        if p.is_empty() || q.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Integer::zero(); p.len() + q.len() - 1];
        for (i, a) in p.iter().enumerate() {
            for (j, b) in q.iter().enumerate() {
                out[i + j] += int(*a) * int(*b);
            }
        }
        out
    }

    proptest! {
        #[test]
        fn binomial_symmetry_and_pascal(r in 1i64..60, k in 0i64..60) {
            prop_assume!(k <= r);
            prop_assert_eq!(binomial(r, k), binomial(r, r - k));
            prop_assert_eq!(binomial(r, k), binomial(r - 1, k) + binomial(r - 1, k - 1));
        }

        #[test]
        fn binomial_upper_negation(r in -40i64..40, k in 0i64..25) {
            let neg = binomial(k - r - 1, k);
            let signed = if k % 2 == 0 { neg } else { -neg };
            prop_assert_eq!(binomial(r, k), signed);
        }

        #[test]
        fn poly_mul_matches_schoolbook(
            p in proptest::collection::vec(-50i64..50, 0..12),
            q in proptest::collection::vec(-50i64..50, 0..12),
        ) {
            let got = poly_mul(&IntPolynomial::from_i64s(&p), &IntPolynomial::from_i64s(&q));
            prop_assert_eq!(got, IntPolynomial::from_coeffs(schoolbook(&p, &q)));
        }

        #[test]
        fn pow_truncated_matches_repeated_mul(
            p in proptest::collection::vec(-4i64..5, 1..5),
            e in 0u32..7,
            deg in 0usize..10,
        ) {
            let base = IntPolynomial::from_i64s(&p);
            let mut full = IntPolynomial::one();
            for _ in 0..e {
                full = &full * &base;
            }
            prop_assert_eq!(base.pow_truncated(e, deg), full.truncate(deg));
        }
    }
}
