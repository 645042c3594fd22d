use polytope_numbers::oracle::{KimOracle, Polytope};
use polytope_numbers::rectified::{lambda, lambda_interior, RectifiedParams};
use polytope_numbers::simplex::{alpha, alpha_interior, beta, gamma};
use polytope_numbers::Integer;
use serde::Serialize;

use crate::cli::{Family, Format, Route, SeqArgs, Shape};
use crate::error::CliError;

/// Validated `seq` request.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceQuery {
    pub family: Family,
    pub d: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shape: Option<Shape>,
    pub n_from: i64,
    pub n_to: i64,
    pub route: Route,
    pub format: Format,
    pub interior: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub n: i64,
    pub value: Integer,
    pub interior: Option<Integer>,
    pub matches: Option<bool>,
}

/// Closed form the query resolves to, if any.
#[derive(Clone, Copy, Debug)]
enum Formula {
    Alpha(u32),
    Beta(u32),
    Gamma(u32),
    Lambda(RectifiedParams),
}

impl Formula {
    fn value(self, n: i64) -> Integer {
        match self {
            Formula::Alpha(d) => alpha(d, n),
            Formula::Beta(d) => beta(d, n),
            Formula::Gamma(d) => gamma(d, n),
            Formula::Lambda(p) => lambda(p, n),
        }
    }

    fn interior(self, n: i64) -> Option<Integer> {
        match self {
            Formula::Alpha(d) => Some(alpha_interior(d, n)),
            Formula::Lambda(p) => Some(lambda_interior(p, n)),
            Formula::Beta(_) | Formula::Gamma(_) => None,
        }
    }
}

impl SequenceQuery {
    pub fn from_args(args: &SeqArgs) -> Result<Self, CliError> {
        let usage = |m: String| Err(CliError::Usage(m));
        if args.from < 0 {
            return usage(format!("--from must be >= 0 (got {})", args.from));
        }
        if args.to < args.from {
            return usage(format!("--to ({}) must be >= --from ({})", args.to, args.from));
        }
        let needs_r =
            matches!(args.family, Family::Lambda) || (args.family == Family::Oracle && args.shape == Shape::Rectified);
        match (needs_r, args.r) {
            (true, None) => return usage("-r is required for this family".into()),
            (false, Some(_)) => return usage("-r only applies to --family lambda or --shape rectified".into()),
            _ => {}
        }
        let route = args.route.unwrap_or(if args.family == Family::Oracle { Route::Oracle } else { Route::Formula });
        if args.family == Family::Oracle && route == Route::Formula {
            return usage("--family oracle has no formula route; use --route oracle or both".into());
        }
        if args.format == Format::Bfile && args.interior {
            return usage("bfile output carries a single sequence; drop --interior".into());
        }
        let query = SequenceQuery {
            family: args.family,
            d: args.d,
            r: args.r,
            shape: (args.family == Family::Oracle).then_some(args.shape),
            n_from: args.from,
            n_to: args.to,
            route,
            format: args.format,
            interior: args.interior,
        };
        // resolve now so bad parameter combinations fail before any output
        query.formula()?;
        query.polytope()?;
        if query.interior && query.route != Route::Oracle && query.formula()?.and_then(|f| f.interior(1)).is_none() {
            return usage("no closed interior formula for this family; use --route oracle".into());
        }
        Ok(query)
    }

    fn formula(&self) -> Result<Option<Formula>, CliError> {
        if self.route == Route::Oracle {
            return Ok(None);
        }
        let d = self.d;
        let at_least_one = |what: &str| {
            if d == 0 {
                Err(CliError::Usage(format!("{what} needs -d >= 1")))
            } else {
                Ok(())
            }
        };
        let f = match (self.family, self.shape) {
            (Family::Alpha, _) | (Family::Oracle, Some(Shape::Simplex)) => Formula::Alpha(d),
            (Family::Beta, _) | (Family::Oracle, Some(Shape::Cross)) => {
                at_least_one("cross-polytope")?;
                Formula::Beta(d)
            }
            (Family::Gamma, _) | (Family::Oracle, Some(Shape::Cube)) => {
                at_least_one("measure-polytope")?;
                Formula::Gamma(d)
            }
            (Family::Lambda, _) | (Family::Oracle, Some(Shape::Rectified)) => {
                let p = RectifiedParams::new(d, self.r.unwrap_or(0)).map_err(|e| CliError::Usage(e.to_string()))?;
                Formula::Lambda(p)
            }
            (Family::Oracle, None) => unreachable!("oracle family always carries a shape"),
        };
        Ok(Some(f))
    }

    fn polytope(&self) -> Result<Option<Polytope>, CliError> {
        if self.route == Route::Formula {
            return Ok(None);
        }
        let d = self.d;
        let shape = match self.family {
            Family::Alpha => Shape::Simplex,
            Family::Beta => Shape::Cross,
            Family::Gamma => Shape::Cube,
            Family::Lambda => Shape::Rectified,
            Family::Oracle => self.shape.expect("oracle family always carries a shape"),
        };
        let p = match shape {
            Shape::Simplex => Polytope::simplex(d),
            Shape::Cross => Polytope::cross_polytope(d),
            Shape::Cube => Polytope::hypercube(d),
            Shape::Rectified => Polytope::rectified_simplex(d, self.r.unwrap_or(0))
                .map_err(|e| CliError::Usage(format!("{e}; d <= r sequences have no polytope, use --route formula")))?,
        };
        Ok(Some(p))
    }

    pub fn rows(&self) -> Result<Vec<Row>, CliError> {
        let formula = self.formula()?;
        let polytope = self.polytope()?;
        let mut oracle = KimOracle::new();
        let rows = (self.n_from..=self.n_to)
            .map(|n| {
                let from_formula = formula.map(|f| (f.value(n), if self.interior { f.interior(n) } else { None }));
                let from_oracle = polytope.map(|p| {
                    let v = oracle.number(p, n);
                    (v, self.interior.then(|| oracle.interior(p, n)))
                });
                match (from_formula, from_oracle) {
                    (Some((value, interior)), Some(other)) => {
                        let matches = value == other.0 && interior == other.1;
                        Row { n, value, interior, matches: Some(matches) }
                    }
                    (Some((value, interior)), None) | (None, Some((value, interior))) => {
                        Row { n, value, interior, matches: None }
                    }
                    (None, None) => unreachable!("every route has a source"),
                }
            })
            .collect();
        Ok(rows)
    }
}
