//! Experiment configuration from TOML files and command-line overrides.
//!
//! ```toml
//! problem = "helmholtz2d_inhom"
//! scheme = "sym"                 # "unsym" | "sym"
//! boundary_knots = 49            # total, or per component: [40, 9]
//! inner_knots = 15
//! eval_knots = 460
//! seed = 0
//! precision = "qd"               # "f64" | "dd" | "qd"
//! timing = true
//! out = "results.csv"
//!
//! [params]                       # gamma, or d and tau
//! gamma = 1.4142135623730951
//!
//! [domain]
//! kind = "rect2d_with_ellipse_hole"
//! lower = [0.0, 0.0]
//! upper = [2.0, 2.0]
//! center = [1.0, 1.0]
//! semi_axes = [0.5, 0.3]
//! bc = { hole = "neumann" }
//!
//! [sweep]
//! boundary_knots = [41, 49]
//! schemes = ["unsym", "sym"]
//! ```

use std::path::{Path, PathBuf};
use std::str::FromStr;

use bkm_core::geometry::split_boundary_count;
use bkm_core::{DomainSpec, Scheme};
use serde::{Deserialize, Serialize};

use crate::error::{usage, BenchError, Result};
use crate::problems::{find_problem, ProblemParams, TestProblem};

/// Working precision of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Precision {
    F64,
    Dd,
    Qd,
}

impl Precision {
    /// Quad-double, except for 3-D problems whose larger systems make it
    /// slow; those use double-double.
    pub fn default_for(problem: &TestProblem) -> Self {
        if problem.dim() == 3 {
            Precision::Dd
        } else {
            Precision::Qd
        }
    }
}

/// Total boundary knots, or one count per boundary component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BoundaryCounts {
    Total(usize),
    PerComponent(Vec<usize>),
}

impl BoundaryCounts {
    pub fn resolve(&self, domain: &DomainSpec) -> Result<Vec<usize>> {
        match self {
            BoundaryCounts::Total(0) => Err(BenchError::Usage("boundary knot count must be positive".into())),
            BoundaryCounts::Total(n) => split_boundary_count(domain, *n).map_err(usage),
            BoundaryCounts::PerComponent(counts) if counts.iter().sum::<usize>() == 0 => {
                Err(BenchError::Usage("boundary knot count must be positive".into()))
            }
            BoundaryCounts::PerComponent(counts) => Ok(counts.clone()),
        }
    }
}

impl FromStr for BoundaryCounts {
    type Err = String;

    /// `"49"` or `"40,9"`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts = parse_list(s)?;
        Ok(match parts.as_slice() {
            [n] => BoundaryCounts::Total(*n),
            _ => BoundaryCounts::PerComponent(parts),
        })
    }
}

pub fn parse_list(s: &str) -> std::result::Result<Vec<usize>, String> {
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("invalid count `{p}`: {e}")))
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    pub boundary_knots: Option<Vec<usize>>,
    pub schemes: Option<Vec<Scheme>>,
}

/// Contents of a config file; every key is optional.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub problem: Option<String>,
    pub scheme: Option<Scheme>,
    pub boundary_knots: Option<BoundaryCounts>,
    pub inner_knots: Option<usize>,
    pub eval_knots: Option<usize>,
    pub seed: Option<u64>,
    pub precision: Option<Precision>,
    pub timing: Option<bool>,
    pub out: Option<PathBuf>,
    pub params: Option<ProblemParams>,
    pub domain: Option<DomainSpec>,
    pub sweep: Option<SweepSection>,
}

impl ConfigFile {
    pub fn parse(text: &str, path: &str) -> Result<Self> {
        toml::from_str(text).map_err(|source| BenchError::Config { path: path.to_string(), source })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| BenchError::Io { context: format!("reading {}", path.display()), source })?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Applies values set on `other`, which take precedence.
    pub fn merge(mut self, other: ConfigFile) -> Self {
        macro_rules! take {
            ($($f:ident),*) => { $(if other.$f.is_some() { self.$f = other.$f; })* };
        }
        take!(problem, scheme, boundary_knots, inner_knots, eval_knots, seed, precision, timing, out, params, domain, sweep);
        self
    }
}

/// A fully resolved single run.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub problem: TestProblem,
    pub scheme: Scheme,
    pub boundary_knots: BoundaryCounts,
    pub inner_knots: usize,
    pub eval_knots: usize,
    pub seed: u64,
    pub precision: Precision,
    pub timing: bool,
    pub out: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn from_file(file: &ConfigFile) -> Result<Self> {
        let name = file.problem.as_deref().ok_or_else(|| BenchError::Usage("no problem given".into()))?;
        let mut problem = find_problem(name)?;
        if let Some(params) = &file.params {
            problem = problem.with_params(params)?;
        }
        if let Some(domain) = &file.domain {
            problem = problem.with_domain(domain.clone())?;
        }
        problem.check_source(10, 0)?;
        let inner_knots = file.inner_knots.unwrap_or(problem.default_inner_knots);
        if inner_knots > 0 && !problem.inhomogeneous {
            return Err(BenchError::Usage(format!("{} has no source term and takes no inner knots", problem.name)));
        }
        let eval_knots = file.eval_knots.unwrap_or(problem.default_eval_knots);
        if eval_knots == 0 {
            return Err(BenchError::Usage("evaluation knot count must be positive".into()));
        }
        Ok(ExperimentConfig {
            scheme: file.scheme.unwrap_or(Scheme::Symmetric),
            boundary_knots: file.boundary_knots.clone().unwrap_or(BoundaryCounts::Total(problem.default_boundary_knots)),
            inner_knots,
            eval_knots,
            seed: file.seed.unwrap_or(0),
            precision: file.precision.unwrap_or_else(|| Precision::default_for(&problem)),
            timing: file.timing.unwrap_or(true),
            out: file.out.clone(),
            problem,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_counts() {
        assert_eq!("49".parse::<BoundaryCounts>().unwrap(), BoundaryCounts::Total(49));
        assert_eq!("40, 9".parse::<BoundaryCounts>().unwrap(), BoundaryCounts::PerComponent(vec![40, 9]));
        assert!("4x".parse::<BoundaryCounts>().is_err());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(ConfigFile::parse("problem = \"helmholtz3d_hom\"\nseeed = 1\n", "t").is_err());
        assert!(ConfigFile::parse("[domain]\nkind = \"rect2d\"\nlower = [0, 0]\nupper = [1, 1]\nfoo = 1\n", "t").is_err());
        assert!(ConfigFile::parse("[params]\nomega = 1.0\n", "t").is_err());
    }
}
