use std::fs;
use std::io::Write;

use polytope_numbers::grid::IdentityGrid;
use polytope_numbers::identities::run_suite;
use polytope_numbers::verify::{decomposition_suite, oracle_suite, CheckReport, DecompositionRanges, OracleRanges};

use crate::cli::{Suite, VerifyArgs};
use crate::error::CliError;

/// Runs the selected suites, writes the report and returns the failure count.
pub fn run(out: &mut impl Write, args: &VerifyArgs) -> Result<usize, CliError> {
    let grid = match &args.grid {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read grid {}: {e}", path.display())))?;
            IdentityGrid::parse(&text)?
        }
        None => IdentityGrid::default_grid(),
    };
    if args.n_max.is_some_and(|n| n < 1) {
        return Err(CliError::Usage("--n-max must be >= 1".into()));
    }
    let wants = |s: Suite| args.suite == s || args.suite == Suite::All;
    let oracle_ranges = OracleRanges::with_overrides(args.d_max, args.n_max);
    let dec_ranges = DecompositionRanges::with_overrides(args.d_max, args.n_max);

    // suites are independent; run them side by side and report in a fixed order
    let (identities, oracle, decompositions) = std::thread::scope(|s| {
        let o = wants(Suite::Oracle).then(|| s.spawn(|| oracle_suite(oracle_ranges)));
        let dc = wants(Suite::Decompositions).then(|| s.spawn(|| decomposition_suite(dec_ranges)));
        let id = wants(Suite::Identities).then(|| run_suite(&grid));
        (
            id,
            o.map(|h| h.join().expect("oracle suite panicked")),
            dc.map(|h| h.join().expect("decomposition suite panicked")),
        )
    });

    let mut failures = 0;
    if let Some(summary) = identities {
        writeln!(
            out,
            "identities: {} identities, {} checks, {} failures",
            summary.per_identity.len(),
            summary.total,
            summary.failures.len()
        )?;
        for (identity, count) in &summary.per_identity {
            writeln!(out, "  {}: {count}", identity.name())?;
        }
        for f in &summary.failures {
            writeln!(out, "  FAIL {f}")?;
        }
        failures += summary.failures.len();
    }
    for (name, report) in [("oracle", oracle), ("decompositions", decompositions)] {
        if let Some(report) = report {
            failures += write_report(out, name, &report)?;
        }
    }
    Ok(failures)
}

fn write_report(out: &mut impl Write, name: &str, report: &CheckReport) -> std::io::Result<usize> {
    writeln!(out, "{name}: {} checks, {} failures", report.total, report.failures.len())?;
    for f in &report.failures {
        writeln!(out, "  FAIL {f}")?;
    }
    Ok(report.failures.len())
}
