//! Single runs and convergence sweeps.

use std::time::Instant;

use bkm_core::drm::fit;
use bkm_core::geometry::{boundary_knots, evaluation_knots, interior_knots};
use bkm_core::solver::{evaluate, solve_bkm};
use bkm_core::{BcKind, Dd, KernelSpec, KnotSet, Point, Qd, Real, Scheme};

use crate::config::{BoundaryCounts, ExperimentConfig, Precision};
use crate::error::{numerical, usage, BenchError, Result};
use crate::metric::{l2_relative_error, max_error};

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentResult {
    pub problem: String,
    pub scheme: Scheme,
    pub dirichlet_knots: usize,
    pub neumann_knots: usize,
    pub inner_knots: usize,
    pub eval_knots: usize,
    pub seed: u64,
    pub l2_relative_error: f64,
    pub max_error: f64,
    /// 1-norm condition estimate of the collocation matrix.
    pub condition_estimate: f64,
    /// `None` when timing is switched off for reproducible output.
    pub wall_ms: Option<f64>,
}

fn build_knots(cfg: &ExperimentConfig) -> Result<KnotSet<f64>> {
    let domain = &cfg.problem.domain;
    let counts = cfg.boundary_knots.resolve(domain)?;
    let boundary = boundary_knots(domain, &counts, cfg.seed).map_err(usage)?;
    let interior = if cfg.inner_knots > 0 { interior_knots(domain, cfg.inner_knots).map_err(usage)? } else { Vec::new() };
    let evaluation = evaluation_knots(domain, cfg.eval_knots).map_err(usage)?;
    Ok(KnotSet::new(boundary, interior, evaluation))
}

fn run_in<T: Real>(cfg: &ExperimentConfig, knots: &KnotSet<f64>) -> Result<(f64, f64, f64)> {
    let problem = &cfg.problem;
    let mut knots: KnotSet<T> = knots.cast();
    knots.set_bc_values(|k| match k.bc_kind {
        BcKind::Dirichlet => problem.exact(&k.position),
        BcKind::Neumann => problem.normal_derivative(&k.position, &k.normal),
    });
    let op = problem.operator::<T>();
    let particular = if problem.inhomogeneous {
        let mut centers: Vec<Point<T>> = knots.boundary().iter().map(|k| k.position).collect();
        centers.extend(knots.interior.iter().cloned());
        let f: Vec<T> = centers.iter().map(|c| problem.source(c)).collect();
        Some(fit(&f, &centers, &KernelSpec::general(op, 1)).map_err(numerical)?)
    } else {
        None
    };
    let solution = solve_bkm(&knots, &KernelSpec::general(op, 0), particular, cfg.scheme).map_err(numerical)?;
    let computed = knots.evaluation.iter().map(|p| evaluate(&solution, p)).collect::<bkm_core::Result<Vec<T>>>();
    let computed = computed.map_err(numerical)?;
    let exact: Vec<T> = knots.evaluation.iter().map(|p| problem.exact(p)).collect();
    let l2 = l2_relative_error(&computed, &exact)?;
    let max = max_error(&computed, &exact)?;
    if !(l2.is_finite() && max.is_finite()) {
        return Err(BenchError::Numerical(bkm_core::BkmError::Domain("non-finite field values".into())));
    }
    Ok((l2, max, solution.condition_estimate().as_f64()))
}

pub fn run(cfg: &ExperimentConfig) -> Result<ExperimentResult> {
    let start = Instant::now();
    let knots = build_knots(cfg)?;
    let (l2, max, cond) = match cfg.precision {
        Precision::F64 => run_in::<f64>(cfg, &knots)?,
        Precision::Dd => run_in::<Dd>(cfg, &knots)?,
        Precision::Qd => run_in::<Qd>(cfg, &knots)?,
    };
    let wall_ms = cfg.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    Ok(ExperimentResult {
        problem: cfg.problem.name.to_string(),
        scheme: cfg.scheme,
        dirichlet_knots: knots.dirichlet_count(),
        neumann_knots: knots.neumann_count(),
        inner_knots: knots.interior.len(),
        eval_knots: knots.evaluation.len(),
        seed: cfg.seed,
        l2_relative_error: l2,
        max_error: max,
        condition_estimate: cond,
        wall_ms,
    })
}

/// One run per scheme and total boundary knot count, ordered by scheme and
/// then by count.
pub fn convergence_sweep(base: &ExperimentConfig, schemes: &[Scheme], counts: &[usize]) -> Result<Vec<ExperimentResult>> {
    let mut counts = counts.to_vec();
    counts.sort_unstable();
    counts.dedup();
    if counts.len() < 2 {
        return Err(BenchError::Usage("a sweep needs at least two distinct boundary knot counts".into()));
    }
    if schemes.is_empty() {
        return Err(BenchError::Usage("a sweep needs at least one scheme".into()));
    }
    let mut results = Vec::with_capacity(schemes.len() * counts.len());
    for &scheme in schemes {
        for &n in &counts {
            let cfg = ExperimentConfig { scheme, boundary_knots: BoundaryCounts::Total(n), ..base.clone() };
            results.push(run(&cfg)?);
        }
    }
    Ok(results)
}
