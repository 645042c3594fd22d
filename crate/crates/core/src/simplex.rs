//! Closed forms for the regular polytope sequences: simplex numbers `α^d`,
//! cross-polytope numbers `β^d` and measure-polytope numbers `γ^d`.
//!
//! All sequences are clamped: terms at a nonpositive index are zero.

use num_traits::Zero;

use crate::exact::{binomial, eulerian, Integer};

/// Which regular family a closed form belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegularFamily {
    Alpha,
    Beta,
    Gamma,
}

/// Simplex number `α^d(m) = C(m + d - 1, d)`, zero for `m <= 0`.
pub fn alpha(d: u32, m: i64) -> Integer {
    if m <= 0 {
        return Integer::zero();
    }
    binomial(m + i64::from(d) - 1, i64::from(d))
}

/// Interior simplex number `α^d(m)^# = C(m - 2, d)`, zero for `m <= 1`.
///
/// Equal to `alpha(d, m - d - 1)` for every `m >= 1`: removing all `d + 1`
/// facets is `d + 1` facet cuts.
pub fn alpha_interior(d: u32, m: i64) -> Integer {
    if m <= 1 {
        return Integer::zero();
    }
    binomial(m - 2, i64::from(d))
}

/// Unclamped simplex number `C(m + e - 1, e)` for any integer dimension;
/// zero when `e < 0`. This is the binomial reading used by the identities.
pub fn alpha_binomial(e: i64, m: i64) -> Integer {
    binomial(m + e - 1, e)
}

/// Unclamped interior simplex number `C(m - 2, e)`; zero when `e < 0`.
pub fn alpha_interior_binomial(e: i64, m: i64) -> Integer {
    binomial(m - 2, e)
}

/// `d` facet cuts: `k` facets removed from `α^d(n)` leaves `α^d(n - k)`.
pub fn facet_cut(d: u32, n: i64, k: u32) -> Integer {
    alpha(d, n - i64::from(k))
}

/// Cross-polytope number `β^d(n) = Σ_{i<d} C(d-1, i) α^d(n - i)`.
pub fn beta(d: u32, n: i64) -> Integer {
    (0..i64::from(d)).map(|i| binomial(i64::from(d) - 1, i) * alpha(d, n - i)).sum()
}

/// Measure-polytope number `γ^d(n) = Σ_{i<d} E(d, i) α^d(n - i)`.
pub fn gamma(d: u32, n: i64) -> Integer {
    (0..i64::from(d)).map(|i| eulerian(d, i) * alpha(d, n - i)).sum()
}

pub fn evaluate(family: RegularFamily, d: u32, n: i64) -> Integer {
    match family {
        RegularFamily::Alpha => alpha(d, n),
        RegularFamily::Beta => beta(d, n),
        RegularFamily::Gamma => gamma(d, n),
    }
}
