//! Parameter grids for the identity suite, read from a small
//! `key = lo..hi` text format.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const DEFAULT_GRID: &str = include_str!("../grids/default.grid");
pub const GRID_VERSION: i64 = 1;

/// Inclusive integer range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub lo: i64,
    pub hi: i64,
}

impl Span {
    pub const fn new(lo: i64, hi: i64) -> Self {
        Self { lo, hi }
    }

    pub const fn point(v: i64) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn iter(self) -> RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("bad integer {t:?}: {e}"));
        match s.split_once("..") {
            Some((lo, hi)) => {
                let span = Span::new(parse(lo)?, parse(hi)?);
                if span.lo > span.hi {
                    return Err(format!("empty range {s:?}"));
                }
                Ok(span)
            }
            None => parse(s).map(Span::point),
        }
    }
}

/// Ranges per identity; `None` skips that identity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityGrid {
    /// `(b, c, n)`
    pub alt_vandermonde: Option<[Span; 3]>,
    /// `(d, j, n)`; `k` covers `0..d`
    pub gen_kim: Option<[Span; 3]>,
    /// `(r, d, n)`
    pub claim1: Option<[Span; 3]>,
    /// `(r, d, n)`
    pub claim2: Option<[Span; 3]>,
    /// `d`; `r` covers `0..=d`
    pub claim3: Option<Span>,
    /// `r`
    pub claim4: Option<Span>,
}

const KEYS: &[(&str, &[&str])] = &[
    ("alt_vandermonde", &["b", "c", "n"]),
    ("gen_kim", &["d", "j", "n"]),
    ("claim1", &["r", "d", "n"]),
    ("claim2", &["r", "d", "n"]),
    ("claim3", &["d"]),
    ("claim4", &["r"]),
];

impl IdentityGrid {
    pub fn default_grid() -> Self {
        Self::parse(DEFAULT_GRID).expect("bundled default grid parses")
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut values: BTreeMap<String, (usize, Span)> = BTreeMap::new();
        let mut version = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |msg: String| Error::GridSyntax { line: line_no, msg };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| err("expected key = value".into()))?;
            let (key, value) = (key.trim(), value.trim());
            if key == "version" {
                let v: i64 = value.parse().map_err(|_| err(format!("bad version {value:?}")))?;
                if v != GRID_VERSION {
                    return Err(err(format!("unsupported grid version {v}")));
                }
                version = Some(v);
                continue;
            }
            let known =
                key.split_once('.').is_some_and(|(id, p)| KEYS.iter().any(|(k, ps)| *k == id && ps.contains(&p)));
            if !known {
                return Err(err(format!("unknown key {key:?}")));
            }
            let span = value.parse::<Span>().map_err(err)?;
            if values.insert(key.to_string(), (line_no, span)).is_some() {
                return Err(err(format!("duplicate key {key:?}")));
            }
        }
        if version.is_none() {
            return Err(Error::GridSyntax { line: 0, msg: "missing version line".into() });
        }

        let mut take = |id: &str| -> Result<Option<Vec<Span>>> {
            let params = KEYS.iter().find(|(k, _)| *k == id).unwrap().1;
            let found: Vec<Option<(usize, Span)>> =
                params.iter().map(|p| values.remove(&format!("{id}.{p}"))).collect();
            if found.iter().all(Option::is_none) {
                return Ok(None);
            }
            if let Some(pos) = found.iter().position(Option::is_none) {
                let line = found.iter().flatten().map(|(l, _)| *l).max().unwrap_or(0);
                return Err(Error::GridSyntax { line, msg: format!("{id} is missing {id}.{}", params[pos]) });
            }
            Ok(Some(found.into_iter().map(|f| f.unwrap().1).collect()))
        };
        let triple = |v: Vec<Span>| [v[0], v[1], v[2]];
        Ok(Self {
            alt_vandermonde: take("alt_vandermonde")?.map(triple),
            gen_kim: take("gen_kim")?.map(triple),
            claim1: take("claim1")?.map(triple),
            claim2: take("claim2")?.map(triple),
            claim3: take("claim3")?.map(|v| v[0]),
            claim4: take("claim4")?.map(|v| v[0]),
        })
    }
}
