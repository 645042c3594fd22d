//! Batch comparisons of closed forms against the face-lattice oracle and
//! of the decomposition routes against each other.

use std::fmt;

use crate::oracle::{KimOracle, Polytope};
use crate::rectified::{
    eval_shift_identity, is_valid_simplex_decomposition, lambda, lambda_decompose_gbinom, lambda_decompose_via_shifts,
    lambda_interior, shift_decompose_gf, shift_decompose_sum, RectifiedParams, ShiftParams,
};
use crate::simplex::{alpha, alpha_interior, beta, gamma};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub what: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: lhs={} rhs={}", self.what, self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub total: usize,
    pub failures: Vec<Mismatch>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn compare<T: PartialEq + fmt::Display>(&mut self, what: impl FnOnce() -> String, lhs: T, rhs: T) {
        self.total += 1;
        if lhs != rhs {
            self.failures.push(Mismatch { what: what(), lhs: lhs.to_string(), rhs: rhs.to_string() });
        }
    }

    fn fail(&mut self, what: String, reason: String) {
        self.total += 1;
        self.failures.push(Mismatch { what, lhs: reason, rhs: String::new() });
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleRanges {
    pub simplex_d_max: u32,
    pub cross_cube_d_max: u32,
    pub rectified_d_max: u32,
    pub n_max: i64,
}

impl Default for OracleRanges {
    fn default() -> Self {
        Self { simplex_d_max: 8, cross_cube_d_max: 6, rectified_d_max: 7, n_max: 40 }
    }
}

impl OracleRanges {
    pub fn with_overrides(d_max: Option<u32>, n_max: Option<i64>) -> Self {
        let mut r = Self::default();
        if let Some(d) = d_max {
            r.simplex_d_max = d;
            r.cross_cube_d_max = d;
            r.rectified_d_max = d;
        }
        if let Some(n) = n_max {
            r.n_max = n;
        }
        r
    }
}

/// Oracle against `α`, `β`, `γ` and `λ` (values and interiors where a
/// closed interior exists) for `1 <= n <= n_max`.
pub fn oracle_suite(ranges: OracleRanges) -> CheckReport {
    let mut report = CheckReport::default();
    let mut oracle = KimOracle::new();
    let ns = 1..=ranges.n_max;
    for d in 1..=ranges.simplex_d_max {
        let p = Polytope::simplex(d);
        for n in ns.clone() {
            report.compare(|| format!("{p} n={n}"), oracle.number(p, n), alpha(d, n));
            report.compare(|| format!("{p} n={n} interior"), oracle.interior(p, n), alpha_interior(d, n));
        }
    }
    for d in 1..=ranges.cross_cube_d_max {
        let (cross, cube) = (Polytope::cross_polytope(d), Polytope::hypercube(d));
        for n in ns.clone() {
            report.compare(|| format!("cross-polytope({d}) n={n}"), oracle.number(cross, n), beta(d, n));
            report.compare(|| format!("hypercube({d}) n={n}"), oracle.number(cube, n), gamma(d, n));
        }
    }
    for d in 2..=ranges.rectified_d_max {
        for r in 1..d {
            let params = RectifiedParams { d, r };
            let p = Polytope::rectified_simplex(d, r).expect("r < d");
            for n in ns.clone() {
                report.compare(|| format!("{p} (d={d}, r={r}) n={n}"), oracle.number(p, n), lambda(params, n));
                report.compare(
                    || format!("{p} (d={d}, r={r}) n={n} interior"),
                    oracle.interior(p, n),
                    lambda_interior(params, n),
                );
            }
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecompositionRanges {
    pub shift_d_max: u32,
    pub a_max: u32,
    pub b_max: u32,
    pub shift_n_max: i64,
    pub lambda_d_max: u32,
    pub lambda_n_max: i64,
}

impl Default for DecompositionRanges {
    fn default() -> Self {
        Self { shift_d_max: 6, a_max: 5, b_max: 5, shift_n_max: 30, lambda_d_max: 8, lambda_n_max: 40 }
    }
}

impl DecompositionRanges {
    pub fn with_overrides(d_max: Option<u32>, n_max: Option<i64>) -> Self {
        let mut r = Self::default();
        if let Some(d) = d_max {
            r.shift_d_max = d;
            r.lambda_d_max = d;
        }
        if let Some(n) = n_max {
            r.shift_n_max = n;
            r.lambda_n_max = n;
        }
        r
    }
}

/// Shift decompositions (both routes, identity at every valid `n`) and
/// rectified decompositions (both routes, validity, pointwise agreement).
pub fn decomposition_suite(ranges: DecompositionRanges) -> CheckReport {
    let mut report = CheckReport::default();
    for d in 1..=ranges.shift_d_max {
        for a in 1..=ranges.a_max {
            for b in 0..=ranges.b_max {
                let p = ShiftParams { d, a, b };
                let tag = format!("shift(d={d}, a={a}, b={b})");
                let (sum, gf) = match (shift_decompose_sum(p), shift_decompose_gf(p)) {
                    (Ok(s), Ok(g)) => (s, g),
                    (s, g) => {
                        let err = s.err().or(g.err()).unwrap();
                        report.fail(tag, err.to_string());
                        continue;
                    }
                };
                report.compare(|| format!("{tag} routes"), &sum, &gf);
                for n in 1..=ranges.shift_n_max {
                    if p.shifted_argument(n) < 1 {
                        continue;
                    }
                    match eval_shift_identity(p, n) {
                        Ok((lhs, rhs)) => report.compare(|| format!("{tag} n={n}"), lhs, rhs),
                        Err(e) => report.fail(format!("{tag} n={n}"), e.to_string()),
                    }
                }
            }
        }
    }
    for d in 1..=ranges.lambda_d_max {
        for r in 0..d {
            let params = RectifiedParams { d, r };
            let tag = format!("lambda(d={d}, r={r})");
            let (via_g, via_s) = match (lambda_decompose_gbinom(params), lambda_decompose_via_shifts(params)) {
                (Ok(g), Ok(s)) => (g, s),
                (g, s) => {
                    let err = g.err().or(s.err()).unwrap();
                    report.fail(tag, err.to_string());
                    continue;
                }
            };
            report.compare(|| format!("{tag} routes"), &via_g, &via_s);
            report.compare(|| format!("{tag} a_0 = 1, a_j >= 0"), is_valid_simplex_decomposition(&via_g), true);
            for n in 1..=ranges.lambda_n_max {
                report.compare(|| format!("{tag} n={n}"), via_g.evaluate(n), lambda(params, n));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let o = oracle_suite(OracleRanges::with_overrides(Some(4), Some(12)));
        assert!(o.passed(), "{:?}", o.failures);
        // simplex: 4 dims x 12 x 2; cross+cube: 4 x 12 x 2; rectified: 6 pairs x 12 x 2
        assert_eq!(o.total, 96 + 96 + 144);
        let dcmp = decomposition_suite(DecompositionRanges::with_overrides(Some(3), Some(10)));
        assert!(dcmp.passed(), "{:?}", dcmp.failures);
    }

    #[test]
    fn failures_are_recorded() {
        let mut r = CheckReport::default();
        r.compare(|| "x".into(), 1, 2);
        r.compare(|| "y".into(), 3, 3);
        assert_eq!(r.total, 2);
        assert_eq!(r.failures[0].to_string(), "x: lhs=1 rhs=2");
    }
}
