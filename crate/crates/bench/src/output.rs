//! CSV result tables.

use std::io::Write;

use crate::error::Result;
use crate::experiment::ExperimentResult;

pub const HEADER: [&str; 11] =
    ["problem", "scheme", "L_D", "L_N", "N_inner", "M_eval", "seed", "l2_rel_err", "max_err", "cond_est", "wall_ms"];

/// Scientific notation with six significant digits.
pub fn sci(x: f64) -> String {
    format!("{x:.5e}")
}

fn record(r: &ExperimentResult) -> [String; 11] {
    [
        r.problem.clone(),
        r.scheme.short_name().to_string(),
        r.dirichlet_knots.to_string(),
        r.neumann_knots.to_string(),
        r.inner_knots.to_string(),
        r.eval_knots.to_string(),
        r.seed.to_string(),
        sci(r.l2_relative_error),
        sci(r.max_error),
        sci(r.condition_estimate),
        r.wall_ms.map_or_else(|| "NaN".to_string(), sci),
    ]
}

pub fn write_csv(out: impl Write, results: &[ExperimentResult]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for r in results {
        w.write_record(record(r))?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}
