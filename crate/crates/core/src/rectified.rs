//! Rectified simplex numbers `λ_r^d(n)` and their decompositions over
//! shifted simplex numbers `α^d(n - j)`.
//!
//! For `r < d` the sequences are those of the r-rectified d-simplex and use
//! the clamped simplex numbers. For `d <= r` there is no polytope; the
//! sequences are defined by the same alternating sums read as plain
//! binomial coefficients.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, gbinomial, IntPolynomial, Integer};
use crate::simplex::{alpha, alpha_binomial, alpha_interior, alpha_interior_binomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RectifiedParams {
    pub d: u32,
    pub r: u32,
}

impl RectifiedParams {
    pub fn new(d: u32, r: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::OutOfRange("rectified simplex needs d >= 1".into()));
        }
        Ok(Self { d, r })
    }

    /// `r < d`: the sequence belongs to an actual convex polytope.
    pub fn is_polytope(&self) -> bool {
        self.r < self.d
    }

    fn require_polytope(&self) -> Result<()> {
        if self.is_polytope() {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!("decomposition needs 0 <= r < d (got d={}, r={})", self.d, self.r)))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ShiftParams {
    pub d: u32,
    pub a: u32,
    pub b: u32,
}

impl ShiftParams {
    pub fn new(d: u32, a: u32, b: u32) -> Result<Self> {
        if d == 0 || a == 0 {
            return Err(Error::OutOfRange(format!("shift decomposition needs d >= 1 and a >= 1 (got d={d}, a={a})")));
        }
        Ok(Self { d, a, b })
    }

    /// Argument of the left-hand simplex number at `n`.
    pub fn shifted_argument(&self, n: i64) -> i64 {
        let (a, b) = (i64::from(self.a), i64::from(self.b));
        a * n - (a - 1) - b
    }
}

/// `Σ_j coeffs[j] · α^d(n - j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoefficientVector {
    pub d: u32,
    pub coeffs: Vec<Integer>,
}

impl CoefficientVector {
    pub fn evaluate(&self, n: i64) -> Integer {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| c * alpha(self.d, n - j as i64)).sum()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for CoefficientVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

fn signed(sign_exp: u32, value: Integer) -> Integer {
    if sign_exp.is_multiple_of(2) {
        value
    } else {
        -value
    }
}

/// `λ_r^d(n) = Σ_{i=0}^{r} (-1)^{r-i} C(d+1, r-i) α^d((i+1)n - r)`; zero for `n <= 0`.
pub fn lambda(params: RectifiedParams, n: i64) -> Integer {
    if n <= 0 {
        return Integer::zero();
    }
    let RectifiedParams { d, r } = params;
    let (dd, rr) = (i64::from(d), i64::from(r));
    (0..=r)
        .map(|i| {
            let m = (i64::from(i) + 1) * n - rr;
            let simplex = if params.is_polytope() { alpha(d, m) } else { alpha_binomial(dd, m) };
            signed(r - i, binomial(dd + 1, rr - i64::from(i)) * simplex)
        })
        .sum()
}

/// `λ_r^d(n)^# = Σ_{i=0}^{r} (-1)^{r-i} C(d+1, r-i) α^d((i+1)n + r - 2i)^#`; zero for `n <= 0`.
pub fn lambda_interior(params: RectifiedParams, n: i64) -> Integer {
    if n <= 0 {
        return Integer::zero();
    }
    let RectifiedParams { d, r } = params;
    let (dd, rr) = (i64::from(d), i64::from(r));
    (0..=r)
        .map(|i| {
            let ii = i64::from(i);
            let m = (ii + 1) * n + rr - 2 * ii;
            let interior = if params.is_polytope() { alpha_interior(d, m) } else { alpha_interior_binomial(dd, m) };
            signed(r - i, binomial(dd + 1, rr - ii) * interior)
        })
        .sum()
}

/// `C(d + a k - b, d)`: coefficient of `x^k` in the series whose product
/// with `(1 - x)^{d+1}` gives the shift coefficients.
fn shift_series_term(params: ShiftParams, k: i64) -> Integer {
    let d = i64::from(params.d);
    binomial(d + i64::from(params.a) * k - i64::from(params.b), d)
}

fn checked_prefix(what: &'static str, d: u32, coeffs: Vec<Integer>, keep: usize) -> Result<CoefficientVector> {
    if let Some((index, value)) = coeffs.iter().enumerate().skip(keep).find(|(_, c)| !c.is_zero()) {
        return Err(Error::NonVanishingTail { what, index, limit: keep - 1, value: value.to_string() });
    }
    let mut coeffs = coeffs;
    coeffs.truncate(keep);
    coeffs.resize(keep, Integer::zero());
    Ok(CoefficientVector { d, coeffs })
}

/// Coefficients `c_0..c_d` with `α^d(an - (a-1) - b) = Σ_j c_j α^d(n - j)`,
/// by the double sum
/// `c_j = Σ_{i=0}^{j} (-1)^i C(d+1, i) C(d + a(j-i) - b, d)`.
///
/// The sum is evaluated through `j = d + a + b`; a nonzero entry past `d`
/// is reported as [`Error::NonVanishingTail`].
pub fn shift_decompose_sum(params: ShiftParams) -> Result<CoefficientVector> {
    let d = params.d;
    let last = (d + params.a + params.b) as i64;
    let coeffs = (0..=last)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let t = binomial(i64::from(d) + 1, i) * shift_series_term(params, j - i);
                    signed(i as u32, t)
                })
                .sum()
        })
        .collect();
    checked_prefix("shift double-sum", d, coeffs, d as usize + 1)
}

/// Same coefficients as [`shift_decompose_sum`], read off the truncated
/// product `(1 - x)^{d+1} · Σ_k C(d + ak - b, d) x^k`.
pub fn shift_decompose_gf(params: ShiftParams) -> Result<CoefficientVector> {
    let d = params.d;
    let deg = (d + params.a + params.b + 2) as usize;
    let series = IntPolynomial::from_coeffs((0..=deg as i64).map(|k| shift_series_term(params, k)).collect());
    let product = IntPolynomial::one_minus_x_pow(d + 1).mul_truncated(&series, deg);
    checked_prefix("shift generating-function", d, product.coeffs_through(deg), d as usize + 1)
}

/// Both sides of `α^d(an - (a-1) - b) = Σ_j c_j α^d(n - j)` at `n`.
///
/// Equality is guaranteed when the left argument is at least 1.
pub fn eval_shift_identity(params: ShiftParams, n: i64) -> Result<(Integer, Integer)> {
    let lhs = alpha(params.d, params.shifted_argument(n));
    let rhs = shift_decompose_sum(params)?.evaluate(n);
    Ok((lhs, rhs))
}

/// Decomposition `λ_r^d(n) = Σ_{j<d} a_j α^d(n - j)` assembled from one
/// shift decomposition per term of the alternating sum (`a = i + 1`,
/// `b = r - i`).
pub fn lambda_decompose_via_shifts(params: RectifiedParams) -> Result<CoefficientVector> {
    params.require_polytope()?;
    let RectifiedParams { d, r } = params;
    let mut acc = vec![Integer::zero(); d as usize + 1];
    for i in 0..=r {
        let weight = signed(r - i, binomial(i64::from(d) + 1, i64::from(r - i)));
        let shift = shift_decompose_sum(ShiftParams::new(d, i + 1, r - i)?)?;
        for (slot, c) in acc.iter_mut().zip(&shift.coeffs) {
            *slot += &weight * c;
        }
    }
    checked_prefix("rectified via shifts", d, acc, d as usize)
}

/// The same decomposition from generalized binomial coefficients:
/// `a_j = Σ_{i=0}^{r} (-1)^{r-i} C(d+1, r-i) · C(d+1, (i+1)j + i - r)_{i+1}`.
pub fn lambda_decompose_gbinom(params: RectifiedParams) -> Result<CoefficientVector> {
    params.require_polytope()?;
    let RectifiedParams { d, r } = params;
    let coeffs = (0..i64::from(d))
        .map(|j| {
            (0..=r)
                .map(|i| {
                    let ii = i64::from(i);
                    let g = gbinomial(d + 1, (ii + 1) * j + ii - i64::from(r), i + 1)?;
                    Ok(signed(r - i, binomial(i64::from(d) + 1, i64::from(r - i)) * g))
                })
                .sum::<Result<Integer>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoefficientVector { d, coeffs })
}

pub fn lambda_via_decomposition(params: RectifiedParams, n: i64) -> Result<Integer> {
    Ok(lambda_decompose_gbinom(params)?.evaluate(n))
}

/// `a_0 = 1` and every `a_j >= 0`.
pub fn is_valid_simplex_decomposition(v: &CoefficientVector) -> bool {
    v.coeffs.first().is_some_and(One::is_one) && v.coeffs.iter().all(|c| *c >= Integer::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex::beta;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().copied().map(int).collect()
    }

    fn rect(d: u32, r: u32) -> RectifiedParams {
        RectifiedParams::new(d, r).unwrap()
    }

    fn shift(d: u32, a: u32, b: u32) -> ShiftParams {
        ShiftParams::new(d, a, b).unwrap()
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda(rect(3, 1), 2), int(6));
        assert_eq!(lambda(rect(2, 1), 4), int(10));
        for d in 1..=9 {
            for r in 0..d {
                assert_eq!(lambda(rect(d, r), 1), int(1));
                assert_eq!(lambda(rect(d, r), 0), int(0));
            }
        }
    }

    #[test]
    fn lambda_interior_examples() {
        assert_eq!(lambda_interior(rect(3, 1), 3), int(1));
        for r in 1..=8 {
            let expected = if r % 2 == 0 { int(1) } else { int(-1) };
            for n in 1..=40 {
                assert_eq!(lambda_interior(rect(r, r), n), expected, "r={r} n={n}");
                assert_eq!(lambda(rect(r, r), n), int(1));
            }
            for d in 1..r {
                for n in 2..=40 {
                    assert_eq!(lambda_interior(rect(d, r), n), int(0));
                }
            }
        }
    }

    #[test]
    fn true_polytopes_have_no_interior_at_one() {
        for d in 1..=8 {
            for r in 0..d {
                assert_eq!(lambda_interior(rect(d, r), 1), int(0));
            }
        }
    }

    #[test]
    fn zero_rectification_and_duality() {
        for d in 1..=8 {
            for n in 1..=60 {
                assert_eq!(lambda(rect(d, 0), n), alpha(d, n));
                assert_eq!(lambda_interior(rect(d, 0), n), alpha_interior(d, n));
                if d >= 2 {
                    assert_eq!(lambda(rect(d, d - 1), n), alpha(d, n));
                }
            }
        }
    }

    #[test]
    fn octahedron_bridge() {
        for n in 1..=200 {
            assert_eq!(lambda(rect(3, 1), n), beta(3, n));
        }
    }

    #[test]
    fn second_term_counts_vertices() {
        for d in 1..=10 {
            for r in 0..d {
                assert_eq!(lambda(rect(d, r), 2), binomial(i64::from(d) + 1, i64::from(r) + 1));
            }
        }
    }

    #[test]
    fn shift_sum_examples() {
        assert_eq!(shift_decompose_sum(shift(1, 2, 0)).unwrap().coeffs, ints(&[1, 1]));
        assert_eq!(shift_decompose_sum(shift(2, 2, 0)).unwrap().coeffs, ints(&[1, 3, 0]));
        for d in 1..=6 {
            let mut id = vec![0; d as usize + 1];
            id[0] = 1;
            assert_eq!(shift_decompose_sum(shift(d, 1, 0)).unwrap().coeffs, ints(&id));
        }
    }

    #[test]
    fn shift_gf_examples() {
        assert_eq!(shift_decompose_gf(shift(1, 2, 0)).unwrap().coeffs, ints(&[1, 1]));
        assert_eq!(shift_decompose_gf(shift(4, 2, 0)).unwrap().coeffs, ints(&[1, 10, 5, 0, 0]));
        assert_eq!(shift_decompose_gf(shift(2, 1, 1)).unwrap().coeffs, ints(&[0, 1, 0]));
    }

    #[test]
    fn large_offset_stays_within_d_plus_one() {
        // b > d: 5n - 7 = -2 α¹(n) + 7 α¹(n - 1)
        let v = shift_decompose_sum(shift(1, 5, 3)).unwrap();
        assert_eq!(v.coeffs, ints(&[-2, 7]));
        assert_eq!(shift_decompose_gf(shift(1, 5, 3)).unwrap(), v);
        let v = shift_decompose_sum(shift(1, 1, 2)).unwrap();
        assert_eq!(v.coeffs, ints(&[-1, 2]));
    }

    #[test]
    fn shift_identity_examples() {
        assert_eq!(eval_shift_identity(shift(2, 2, 0), 3).unwrap(), (int(15), int(15)));
        assert_eq!(eval_shift_identity(shift(1, 2, 0), 2).unwrap(), (int(3), int(3)));
        assert_eq!(eval_shift_identity(shift(3, 1, 0), 7).unwrap(), (int(84), int(84)));
    }

    #[test]
    fn shift_identity_grid() {
        for d in 1..=6 {
            for a in 1..=5 {
                for b in 0..=5 {
                    let p = shift(d, a, b);
                    assert_eq!(shift_decompose_sum(p).unwrap(), shift_decompose_gf(p).unwrap());
                    for n in 1..=30 {
                        if p.shifted_argument(n) >= 1 {
                            let (l, r) = eval_shift_identity(p, n).unwrap();
                            assert_eq!(l, r, "d={d} a={a} b={b} n={n}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn offset_reduction_by_a() {
        for d in 1..=5 {
            for a in 1..=4 {
                for b in a..=8 {
                    let full = shift_decompose_sum(shift(d, a, b)).unwrap();
                    let reduced = shift_decompose_sum(shift(d, a, b - a)).unwrap();
                    for n in 2..=25 {
                        if shift(d, a, b).shifted_argument(n) >= 1 {
                            assert_eq!(full.evaluate(n), reduced.evaluate(n - 1));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lambda_decomposition_examples() {
        assert_eq!(lambda_decompose_via_shifts(rect(3, 1)).unwrap().coeffs, ints(&[1, 2, 1]));
        assert_eq!(lambda_decompose_via_shifts(rect(2, 1)).unwrap().coeffs, ints(&[1, 0]));
        assert_eq!(lambda_decompose_via_shifts(rect(4, 1)).unwrap().coeffs, ints(&[1, 5, 5, 0]));
        assert_eq!(lambda_decompose_gbinom(rect(3, 1)).unwrap().coeffs, ints(&[1, 2, 1]));
        assert_eq!(lambda_decompose_gbinom(rect(2, 1)).unwrap().coeffs, ints(&[1, 0]));
        for d in 1..=8 {
            let mut id = vec![0; d as usize];
            id[0] = 1;
            assert_eq!(lambda_decompose_gbinom(rect(d, 0)).unwrap().coeffs, ints(&id));
        }
    }

    #[test]
    fn lambda_via_decomposition_examples() {
        assert_eq!(lambda_via_decomposition(rect(4, 1), 3).unwrap(), int(45));
        assert_eq!(lambda_via_decomposition(rect(3, 1), 4).unwrap(), int(44));
        for d in 1..=8 {
            for r in 0..d {
                assert_eq!(lambda_via_decomposition(rect(d, r), 1).unwrap(), int(1));
            }
        }
    }

    #[test]
    fn decompositions_agree_and_are_valid() {
        for d in 1..=8 {
            for r in 0..d {
                let p = rect(d, r);
                let g = lambda_decompose_gbinom(p).unwrap();
                assert_eq!(lambda_decompose_via_shifts(p).unwrap(), g);
                assert!(is_valid_simplex_decomposition(&g), "{g}");
                for n in 1..=40 {
                    assert_eq!(g.evaluate(n), lambda(p, n));
                }
            }
        }
    }

    #[test]
    fn extended_parameters_are_not_decomposed() {
        assert!(matches!(lambda_decompose_gbinom(rect(3, 3)), Err(Error::OutOfRange(_))));
        assert!(matches!(lambda_decompose_via_shifts(rect(2, 5)), Err(Error::OutOfRange(_))));
        assert!(RectifiedParams::new(0, 0).is_err());
        assert!(ShiftParams::new(2, 0, 1).is_err());
    }

    #[test]
    fn extended_lambda_vanishes_below_r() {
        for r in 2..=8 {
            for d in 1..r {
                for n in 1..=20 {
                    assert_eq!(lambda(rect(d, r), n), int(0), "d={d} r={r} n={n}");
                    assert_eq!(lambda_interior(rect(d, r), n), int(0));
                }
            }
        }
    }

    #[test]
    fn display() {
        let v = CoefficientVector { d: 3, coeffs: ints(&[1, 2, 1]) };
        assert_eq!(v.to_string(), "[1, 2, 1]");
    }
}
