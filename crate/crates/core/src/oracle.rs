//! Polytope numbers straight from the recursive face-lattice definition.
//!
//! For a polytope `P` of dimension `d > 0` with a distinguished vertex
//! `v_P`:
//!
//! ```text
//! P(0) = P(0)^# = 0,  P(1) = 1,  P(1)^# = 0
//! P(n)   = P(n-1) + Σ_{F ∌ v_P} F(n)^#
//! P(n)^# = P(n)   - Σ_{F proper} F(n)^#
//! ```
//!
//! and a point has `P(n) = P(n)^# = 1` for `n >= 1`. Faces are tracked by
//! combinatorial type and count only, never as vertex sets, so the cost is
//! polynomial in the dimension.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, Integer};
use crate::simplex::RegularFamily;

/// Combinatorial type of a uniform polytope. Build values through the
/// constructors, which canonicalize, so that structural equality is
/// combinatorial equality within each family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polytope {
    Point,
    Simplex(u32),
    CrossPolytope(u32),
    Hypercube(u32),
    /// Convex hull of the 0/1 vectors of length `m` with exactly `s` ones;
    /// canonical when `2 <= s <= m / 2`.
    Hypersimplex(u32, u32),
}

impl Polytope {
    pub fn simplex(d: u32) -> Self {
        if d == 0 {
            Self::Point
        } else {
            Self::Simplex(d)
        }
    }

    pub fn cross_polytope(d: u32) -> Self {
        match d {
            0 => Self::Point,
            1 => Self::Simplex(1),
            _ => Self::CrossPolytope(d),
        }
    }

    pub fn hypercube(d: u32) -> Self {
        match d {
            0 => Self::Point,
            1 => Self::Simplex(1),
            _ => Self::Hypercube(d),
        }
    }

    pub fn hypersimplex(m: u32, s: u32) -> Result<Self> {
        if s > m {
            return Err(Error::OutOfRange(format!("hypersimplex needs s <= m (got m={m}, s={s})")));
        }
        let s = s.min(m - s);
        Ok(match s {
            0 => Self::Point,
            1 => Self::simplex(m - 1),
            _ => Self::Hypersimplex(m, s),
        })
    }

    /// The r-rectified d-simplex, `Δ(d + 1, r + 1)`.
    pub fn rectified_simplex(d: u32, r: u32) -> Result<Self> {
        if r >= d {
            return Err(Error::OutOfRange(format!("rectification needs r < d (got d={d}, r={r})")));
        }
        Self::hypersimplex(d + 1, r + 1)
    }

    pub fn regular(family: RegularFamily, d: u32) -> Self {
        match family {
            RegularFamily::Alpha => Self::simplex(d),
            RegularFamily::Beta => Self::cross_polytope(d),
            RegularFamily::Gamma => Self::hypercube(d),
        }
    }

    pub fn dimension(&self) -> u32 {
        match *self {
            Self::Point => 0,
            Self::Simplex(d) | Self::CrossPolytope(d) | Self::Hypercube(d) => d,
            Self::Hypersimplex(m, _) => m - 1,
        }
    }
}

impl fmt::Display for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Point => f.write_str("point"),
            Self::Simplex(d) => write!(f, "simplex({d})"),
            Self::CrossPolytope(d) => write!(f, "cross-polytope({d})"),
            Self::Hypercube(d) => write!(f, "hypercube({d})"),
            Self::Hypersimplex(m, s) => write!(f, "hypersimplex({m},{s})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCount {
    pub face: Polytope,
    pub dim: u32,
    pub total: Integer,
    pub not_containing: Integer,
}

impl FaceCount {
    pub fn containing(&self) -> Integer {
        &self.total - &self.not_containing
    }
}

/// Proper faces of a polytope grouped by type, with how many avoid the
/// distinguished vertex. Entries are sorted by `(dim, face)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FaceCensus {
    pub entries: Vec<FaceCount>,
}

impl FaceCensus {
    /// `f_k` for `k = 0..dim`.
    pub fn f_vector(&self, dim: u32) -> Vec<Integer> {
        let mut f = vec![Integer::zero(); dim as usize];
        for e in &self.entries {
            f[e.dim as usize] += &e.total;
        }
        f
    }

    /// `Σ_k (-1)^k f_k == 1 - (-1)^dim`.
    pub fn satisfies_euler(&self, dim: u32) -> bool {
        let alternating: Integer =
            self.f_vector(dim).into_iter().enumerate().map(|(k, f)| if k % 2 == 0 { f } else { -f }).sum();
        let expected = if dim.is_multiple_of(2) { 0 } else { 2 };
        alternating == Integer::from(expected)
    }

    pub fn is_consistent(&self) -> bool {
        self.entries.iter().all(|e| e.not_containing >= Integer::zero() && e.not_containing <= e.total)
    }
}

#[derive(Default)]
struct CensusBuilder {
    by_key: BTreeMap<(u32, Polytope), (Integer, Integer)>,
}

impl CensusBuilder {
    fn add(&mut self, face: Polytope, dim: u32, total: Integer, containing: Integer) {
        debug_assert_eq!(face.dimension(), dim);
        let slot = self.by_key.entry((dim, face)).or_default();
        slot.1 += &total - containing;
        slot.0 += total;
    }

    fn finish(self) -> FaceCensus {
        let entries = self
            .by_key
            .into_iter()
            .map(|((dim, face), (total, not_containing))| FaceCount { face, dim, total, not_containing })
            .collect();
        FaceCensus { entries }
    }
}

fn pow2(k: u32) -> Integer {
    Integer::one() << k as usize
}

fn c(n: u32, k: u32) -> Integer {
    binomial(i64::from(n), i64::from(k))
}

/// All proper nonempty faces of `p`, grouped by canonical type. Empty for
/// a point.
pub fn faces_of(p: Polytope) -> FaceCensus {
    let mut census = CensusBuilder::default();
    match p {
        Polytope::Point => {}
        Polytope::Simplex(d) => {
            for k in 0..d {
                census.add(Polytope::simplex(k), k, c(d + 1, k + 1), c(d, k));
            }
        }
        Polytope::CrossPolytope(d) => {
            for k in 0..d {
                census.add(Polytope::simplex(k), k, pow2(k + 1) * c(d, k + 1), pow2(k) * c(d - 1, k));
            }
        }
        Polytope::Hypercube(d) => {
            for k in 0..d {
                census.add(Polytope::hypercube(k), k, pow2(d - k) * c(d, k), c(d, k));
            }
        }
        Polytope::Hypersimplex(m, s) => {
            census.add(Polytope::Point, 0, c(m, s), Integer::one());
            // a coordinates pinned to 0 (set A), b pinned to 1 (set B); the
            // free coordinates span Δ(m - a - b, s - b) of dimension k
            for k in 1..m - 1 {
                for a in 0..m - k {
                    let b = m - k - 1 - a;
                    if b >= s || s - b >= m - a - b {
                        continue;
                    }
                    let face = Polytope::hypersimplex(m - a - b, s - b).expect("s - b < m - a - b");
                    let total = c(m, a) * c(m - a, b);
                    // v_P is the indicator of a fixed s-set S: A must avoid S, B must lie in S
                    let containing = c(m - s, a) * c(s, b);
                    census.add(face, k, total, containing);
                }
            }
        }
    }
    census.finish()
}

type Row = (Integer, Integer);

/// Memoized evaluator. Each instance owns its caches; share one behind a
/// lock or keep one per thread.
#[derive(Default)]
pub struct KimOracle {
    censuses: HashMap<Polytope, FaceCensus>,
    tables: HashMap<Polytope, Vec<Row>>,
}

impl KimOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn census(&mut self, p: Polytope) -> &FaceCensus {
        self.censuses.entry(p).or_insert_with(|| faces_of(p))
    }

    /// `P(n)`; zero for `n <= 0`.
    pub fn number(&mut self, p: Polytope, n: i64) -> Integer {
        self.row(p, n).0
    }

    /// `P(n)^#`; zero for `n <= 0`.
    pub fn interior(&mut self, p: Polytope, n: i64) -> Integer {
        self.row(p, n).1
    }

    /// `(n, P(n), P(n)^#)` for `n = 0..=n_max`.
    pub fn report(&mut self, p: Polytope, n_max: u32) -> Vec<(u32, Integer, Integer)> {
        self.extend(p, n_max as usize);
        if p == Polytope::Point {
            return (0..=n_max)
                .map(|n| {
                    let (a, b) = point_row(i64::from(n));
                    (n, a, b)
                })
                .collect();
        }
        self.tables[&p][..=n_max as usize]
            .iter()
            .enumerate()
            .map(|(n, (v, i))| (n as u32, v.clone(), i.clone()))
            .collect()
    }

    fn row(&mut self, p: Polytope, n: i64) -> Row {
        if n <= 0 {
            return (Integer::zero(), Integer::zero());
        }
        if p == Polytope::Point {
            return point_row(n);
        }
        self.extend(p, n as usize);
        self.tables[&p][n as usize].clone()
    }

    fn extend(&mut self, p: Polytope, n: usize) {
        if p == Polytope::Point {
            return;
        }
        let have = self.tables.get(&p).map_or(0, Vec::len);
        if have > n {
            return;
        }
        let census = self.census(p).clone();
        for e in &census.entries {
            self.extend(e.face, n);
        }
        let mut table = self.tables.remove(&p).unwrap_or_default();
        for m in have..=n {
            let row = match m {
                0 => (Integer::zero(), Integer::zero()),
                1 => (Integer::one(), Integer::zero()),
                _ => {
                    let mut value = table[m - 1].0.clone();
                    let mut boundary = Integer::zero();
                    for e in &census.entries {
                        let inner = self.row(e.face, m as i64).1;
                        value += &e.not_containing * &inner;
                        boundary += &e.total * inner;
                    }
                    let interior = &value - boundary;
                    (value, interior)
                }
            };
            table.push(row);
        }
        self.tables.insert(p, table);
    }
}

fn point_row(n: i64) -> Row {
    if n >= 1 {
        (Integer::one(), Integer::one())
    } else {
        (Integer::zero(), Integer::zero())
    }
}

/// Direct recursion without any caching; exponential, for cross-checks.
pub fn kim_uncached(p: Polytope, n: i64) -> (Integer, Integer) {
    if n <= 0 {
        return (Integer::zero(), Integer::zero());
    }
    if p == Polytope::Point {
        return point_row(n);
    }
    if n == 1 {
        return (Integer::one(), Integer::zero());
    }
    let census = faces_of(p);
    let mut value = kim_uncached(p, n - 1).0;
    let mut boundary = Integer::zero();
    for e in &census.entries {
        let inner = kim_uncached(e.face, n).1;
        value += &e.not_containing * &inner;
        boundary += &e.total * inner;
    }
    let interior = &value - boundary;
    (value, interior)
}

thread_local! {
    static SESSION: RefCell<KimOracle> = RefCell::new(KimOracle::new());
}

pub fn kim_number(p: Polytope, n: i64) -> Integer {
    SESSION.with(|o| o.borrow_mut().number(p, n))
}

pub fn kim_interior(p: Polytope, n: i64) -> Integer {
    SESSION.with(|o| o.borrow_mut().interior(p, n))
}

pub fn oracle_report(p: Polytope, n_max: u32) -> Vec<(u32, Integer, Integer)> {
    SESSION.with(|o| o.borrow_mut().report(p, n_max))
}
