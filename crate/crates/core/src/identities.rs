//! Two-sided exact checks of the binomial identities behind the rectified
//! simplex formulas.
//!
//! Simplex numbers inside these identities are read as plain binomial
//! coefficients, `α^e(m) = C(m + e - 1, e)` and `α^e(m)^# = C(m - 2, e)`,
//! with every negative dimension giving zero. Each checker evaluates its
//! two sides from scratch.

use std::fmt;

use crate::exact::{binomial, Integer};
use crate::grid::IdentityGrid;
use crate::simplex::{alpha_binomial as simplex, alpha_interior_binomial as interior};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    AltVandermonde,
    GenKim,
    Claim1,
    Claim2,
    Claim3,
    Claim4,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::AltVandermonde,
        Identity::GenKim,
        Identity::Claim1,
        Identity::Claim2,
        Identity::Claim3,
        Identity::Claim4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::AltVandermonde => "alt-vandermonde",
            Identity::GenKim => "generalized-kim",
            Identity::Claim1 => "claim1",
            Identity::Claim2 => "claim2",
            Identity::Claim3 => "claim3",
            Identity::Claim4 => "claim4",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheckResult {
    pub identity: Identity,
    pub params: Vec<(&'static str, i64)>,
    pub lhs: Integer,
    pub rhs: Integer,
    pub ok: bool,
}

impl IdentityCheckResult {
    fn new(identity: Identity, params: Vec<(&'static str, i64)>, lhs: Integer, rhs: Integer) -> Self {
        let ok = lhs == rhs;
        Self { identity, params, lhs, rhs, ok }
    }
}

impl fmt::Display for IdentityCheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.identity.name())?;
        for (i, (k, v)) in self.params.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        write!(f, "): lhs={} rhs={}", self.lhs, self.rhs)
    }
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `Σ_{k=0}^{n} (-1)^k C(c-k, b-k) C(n, k) = C(c-n, b)` for `b, c, n > 0`.
pub fn check_alt_vandermonde(b: i64, c: i64, n: i64) -> IdentityCheckResult {
    assert!(b > 0 && c > 0 && n > 0, "alternating Vandermonde needs b, c, n > 0");
    let lhs = (0..=n).map(|k| sign(k) * binomial(c - k, b - k) * binomial(n, k)).sum();
    let rhs = binomial(c - n, b);
    IdentityCheckResult::new(Identity::AltVandermonde, vec![("b", b), ("c", c), ("n", n)], lhs, rhs)
}

/// `Σ_{m=0}^{d-1} C(d-1-k, m-k) α^{m-k-1+j}(n)^# = α^{d-k+j-2}(n-j)` for
/// `d > k >= 0`, `j >= 0`.
pub fn check_gen_kim(d: i64, k: i64, j: i64, n: i64) -> IdentityCheckResult {
    assert!(d > k && k >= 0 && j >= 0 && n >= 1, "generalized Kim identity needs d > k >= 0, j >= 0, n >= 1");
    let lhs = (0..d).map(|m| binomial(d - 1 - k, m - k) * interior(m - k - 1 + j, n)).sum();
    let rhs = simplex(d - k + j - 2, n - j);
    IdentityCheckResult::new(Identity::GenKim, vec![("d", d), ("k", k), ("j", j), ("n", n)], lhs, rhs)
}

/// Signed interior sum `Σ_{i=0}^{k} (-1)^{k-i} C(m+1, k-i) α^m((i+1)n + k - 2i)^#`.
fn rectified_interior_terms(m: i64, k: i64, n: i64) -> Integer {
    (0..=k).map(|i| sign(k - i) * binomial(m + 1, k - i) * interior(m, (i + 1) * n + k - 2 * i)).sum()
}

/// `Σ_{i=0}^{r} (-1)^{r-i} C(d+1, r-i) α^d((i+1)n - r)`.
fn rectified_simplex_terms(d: i64, r: i64, n: i64) -> Integer {
    (0..=r).map(|i| sign(r - i) * binomial(d + 1, r - i) * simplex(d, (i + 1) * n - r)).sum()
}

fn claim1_lhs(r: i64, d: i64, n: i64, m_start: i64) -> Integer {
    (0..=r)
        .flat_map(|k| (m_start..=d - r + k).map(move |m| (k, m)))
        .map(|(k, m)| binomial(d + 1, r - k) * binomial(d + 1 - r + k, m + 1) * rectified_interior_terms(m, k, n))
        .sum()
}

fn claim2_lhs(r: i64, d: i64, n: i64, m_start: i64) -> Integer {
    (0..=r)
        .flat_map(|k| (m_start..=d - r + k).map(move |m| (k, m)))
        .map(|(k, m)| binomial(r + 1, r - k) * binomial(d - r, m - k) * rectified_interior_terms(m, k, n))
        .sum()
}

/// Face-weighted sum of rectified interiors against the alternating simplex
/// sum at `n`. The face sum runs over every face dimension `m >= 0`.
pub fn check_claim1(r: i64, d: i64, n: i64) -> IdentityCheckResult {
    assert!(r >= 0 && d >= 1 && n >= 1, "claim1 needs r >= 0, d >= 1, n >= 1");
    let lhs = claim1_lhs(r, d, n, 0);
    let rhs = rectified_simplex_terms(d, r, n);
    IdentityCheckResult::new(Identity::Claim1, vec![("r", r), ("d", d), ("n", n)], lhs, rhs)
}

/// Same face sum with the vertex-figure weights `C(r+1, r-k) C(d-r, m-k)`,
/// against the alternating simplex sum at `n - 1`.
pub fn check_claim2(r: i64, d: i64, n: i64) -> IdentityCheckResult {
    assert!(r >= 0 && d >= 1 && n >= 2, "claim2 needs r >= 0, d >= 1, n >= 2");
    let lhs = claim2_lhs(r, d, n, 0);
    let rhs = rectified_simplex_terms(d, r, n - 1);
    IdentityCheckResult::new(Identity::Claim2, vec![("r", r), ("d", d), ("n", n)], lhs, rhs)
}

fn claim3_lhs(d: i64, r: i64) -> Integer {
    (0..=r).map(|k| sign(k) * binomial(d + 1, r - k) * binomial(d + 1 - r + k, k + 1)).sum()
}

/// `Σ_{k=0}^{r} (-1)^k C(d+1, r-k) C(d+1-r+k, k+1) = C(d+1, r+1)`.
pub fn check_claim3(d: i64, r: i64) -> IdentityCheckResult {
    assert!(d >= 1 && r >= 0, "claim3 needs d >= 1, r >= 0");
    let rhs = binomial(d + 1, r + 1);
    IdentityCheckResult::new(Identity::Claim3, vec![("d", d), ("r", r)], claim3_lhs(d, r), rhs)
}

/// `Σ_{k=0}^{r} (-1)^k C(r+1, r-k) = 1`.
pub fn check_claim4(r: i64) -> IdentityCheckResult {
    assert!(r >= 0, "claim4 needs r >= 0");
    let lhs = (0..=r).map(|k| sign(k) * binomial(r + 1, r - k)).sum();
    IdentityCheckResult::new(Identity::Claim4, vec![("r", r)], lhs, Integer::from(1))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteSummary {
    /// `(identity, checks run)` in suite order, for identities with at least one point.
    pub per_identity: Vec<(Identity, usize)>,
    pub total: usize,
    pub failures: Vec<IdentityCheckResult>,
}

impl SuiteSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every identity at every point of `grid`, in a fixed order.
pub fn run_suite(grid: &IdentityGrid) -> SuiteSummary {
    run_suite_with(grid, check_claim3)
}

fn run_suite_with(grid: &IdentityGrid, claim3: impl Fn(i64, i64) -> IdentityCheckResult) -> SuiteSummary {
    let mut batches: Vec<(Identity, Vec<IdentityCheckResult>)> = Vec::new();
    if let Some([bs, cs, ns]) = grid.alt_vandermonde {
        let v = bs
            .iter()
            .flat_map(|b| cs.iter().filter(move |&c| c >= b).map(move |c| (b, c)))
            .flat_map(|(b, c)| ns.iter().map(move |n| check_alt_vandermonde(b, c, n)))
            .collect();
        batches.push((Identity::AltVandermonde, v));
    }
    if let Some([ds, js, ns]) = grid.gen_kim {
        let mut v = Vec::new();
        for d in ds.iter() {
            for k in 0..d {
                for j in js.iter() {
                    for n in ns.iter() {
                        v.push(check_gen_kim(d, k, j, n));
                    }
                }
            }
        }
        batches.push((Identity::GenKim, v));
    }
    for (id, spans) in [(Identity::Claim1, grid.claim1), (Identity::Claim2, grid.claim2)] {
        let Some([rs, ds, ns]) = spans else { continue };
        let mut v = Vec::new();
        for r in rs.iter() {
            for d in ds.iter() {
                for n in ns.iter() {
                    v.push(if id == Identity::Claim1 { check_claim1(r, d, n) } else { check_claim2(r, d, n) });
                }
            }
        }
        batches.push((id, v));
    }
    if let Some(ds) = grid.claim3 {
        let v = ds.iter().flat_map(|d| (0..=d).map(move |r| (d, r))).map(|(d, r)| claim3(d, r)).collect();
        batches.push((Identity::Claim3, v));
    }
    if let Some(rs) = grid.claim4 {
        batches.push((Identity::Claim4, rs.iter().map(check_claim4).collect()));
    }

    let mut summary = SuiteSummary::default();
    for (id, results) in batches {
        if results.is_empty() {
            continue;
        }
        summary.total += results.len();
        summary.per_identity.push((id, results.len()));
        summary.failures.extend(results.into_iter().filter(|r| !r.ok));
    }
    summary
}
