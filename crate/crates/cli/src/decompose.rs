use std::io::Write;

use polytope_numbers::rectified::{
    lambda_decompose_gbinom, lambda_decompose_via_shifts, shift_decompose_gf, shift_decompose_sum, RectifiedParams,
    ShiftParams,
};
use polytope_numbers::CoefficientVector;
use serde_json::json;

use crate::cli::{DecomposeArgs, DecomposeFormat};
use crate::error::CliError;

pub struct Decomposition {
    pub title: String,
    pub routes: Vec<(&'static str, CoefficientVector)>,
}

impl Decomposition {
    pub fn agree(&self) -> bool {
        self.routes.windows(2).all(|w| w[0].1 == w[1].1)
    }
}

pub fn compute(args: &DecomposeArgs) -> Result<Decomposition, CliError> {
    let d = args.d;
    if args.lambda {
        let r = args.r.expect("clap requires -r with --lambda");
        let params = RectifiedParams::new(d, r)?;
        if !params.is_polytope() {
            return Err(CliError::Usage(format!("--lambda needs 0 <= r < d (got d={d}, r={r})")));
        }
        Ok(Decomposition {
            title: format!("lambda d={d} r={r}"),
            routes: vec![
                ("via-shifts", lambda_decompose_via_shifts(params)?),
                ("gbinomial", lambda_decompose_gbinom(params)?),
            ],
        })
    } else {
        let (a, b) = (args.a.expect("clap requires -a"), args.b.expect("clap requires -b"));
        let params = ShiftParams::new(d, a, b)?;
        Ok(Decomposition {
            title: format!("shift d={d} a={a} b={b}"),
            routes: vec![("double-sum", shift_decompose_sum(params)?), ("series", shift_decompose_gf(params)?)],
        })
    }
}

pub fn write(out: &mut impl Write, dec: &Decomposition, format: DecomposeFormat) -> std::io::Result<()> {
    let verdict = if dec.agree() { "routes agree" } else { "routes DISAGREE" };
    match format {
        DecomposeFormat::Text => {
            writeln!(out, "{}", dec.title)?;
            let w = dec.routes.iter().map(|(name, _)| name.len()).max().unwrap_or(0);
            for (name, v) in &dec.routes {
                writeln!(out, "{name:<w$}  {v}")?;
            }
            writeln!(out, "{verdict}")
        }
        DecomposeFormat::Json => {
            let routes: serde_json::Map<String, serde_json::Value> = dec
                .routes
                .iter()
                .map(|(name, v)| {
                    (name.to_string(), json!(v.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>()))
                })
                .collect();
            let doc = json!({ "decomposition": dec.title, "routes": routes, "agree": dec.agree() });
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)
        }
    }
}
