//! Built-in test problems with closed-form solutions.

use bkm_core::geometry::point_in_domain;
use bkm_core::{DomainSpec, OperatorSpec, Point, Real};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{BenchError, Result};

/// Analytic solution family of a problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Solution {
    /// `x² sin x cos y`
    QuadraticSine,
    /// `sin x cos y cos z`
    TripleTrig,
    /// `sin x cos y`
    PlanarTrig,
    /// `e^{−d(x+y)}`
    Exponential,
}

/// Parameters that may be overridden from a config file.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ProblemParams {
    /// Wave number of a Helmholtz problem.
    pub gamma: Option<f64>,
    /// Decay rate `d` of the exponential solution.
    pub d: Option<f64>,
    /// Thiele parameter of a diffusion-reaction problem; `d·√2` when unset.
    pub tau: Option<f64>,
}

/// A positive parameter given either directly or as the root of a value,
/// so that `√2` is exact in every working precision.
#[derive(Clone, Copy, Debug, PartialEq)]
enum Positive {
    Value(f64),
    Sqrt(f64),
}

impl Positive {
    fn get<T: Real>(self) -> T {
        match self {
            Positive::Value(v) => T::lit(v),
            Positive::Sqrt(v) => T::lit(v).sqrt(),
        }
    }

    fn squared<T: Real>(self) -> T {
        match self {
            Positive::Value(v) => T::lit(v) * T::lit(v),
            Positive::Sqrt(v) => T::lit(v),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TestProblem {
    pub name: &'static str,
    pub description: &'static str,
    pub solution: Solution,
    pub domain: DomainSpec,
    /// Whether the problem is posed with a source term and goes through the
    /// particular-solution fit, even if that source happens to vanish.
    pub inhomogeneous: bool,
    pub default_boundary_knots: usize,
    pub default_inner_knots: usize,
    pub default_eval_knots: usize,
    gamma: Positive,
    d: f64,
    tau: Option<f64>,
}

pub fn builtin_problems() -> Vec<TestProblem> {
    let base = TestProblem {
        name: "",
        description: "",
        solution: Solution::PlanarTrig,
        domain: DomainSpec::default_2d(),
        inhomogeneous: false,
        default_boundary_knots: 0,
        default_inner_knots: 0,
        default_eval_knots: 460,
        gamma: Positive::Sqrt(2.0),
        d: 1.0,
        tau: None,
    };
    vec![
        TestProblem {
            name: "helmholtz2d_inhom",
            description: "Helmholtz, gamma = sqrt 2, u = x^2 sin x cos y, plate with elliptical hole",
            solution: Solution::QuadraticSine,
            inhomogeneous: true,
            default_boundary_knots: 49,
            default_inner_knots: 15,
            ..base.clone()
        },
        TestProblem {
            name: "helmholtz3d_hom",
            description: "Helmholtz, gamma = sqrt 3, u = sin x cos y cos z, cube with peanut cavity",
            solution: Solution::TripleTrig,
            domain: DomainSpec::default_3d(),
            default_boundary_knots: 376,
            default_eval_knots: 1012,
            gamma: Positive::Sqrt(3.0),
            ..base.clone()
        },
        TestProblem {
            name: "diffreact2d_d1",
            description: "diffusion-reaction, tau = sqrt 2, u = exp(-(x+y)), plate with elliptical hole",
            solution: Solution::Exponential,
            inhomogeneous: true,
            default_boundary_knots: 33,
            default_inner_knots: 15,
            ..base.clone()
        },
        TestProblem {
            name: "diffreact2d_d5",
            description: "diffusion-reaction, tau = 5 sqrt 2, u = exp(-5(x+y)), plate with elliptical hole",
            solution: Solution::Exponential,
            inhomogeneous: true,
            default_boundary_knots: 33,
            default_inner_knots: 15,
            d: 5.0,
            ..base.clone()
        },
        TestProblem {
            name: "helmholtz2d_square",
            description: "Helmholtz, gamma = sqrt 2, u = sin x cos y, Dirichlet unit square",
            domain: DomainSpec::unit_square(),
            default_boundary_knots: 40,
            ..base
        },
    ]
}

pub fn find_problem(name: &str) -> Result<TestProblem> {
    builtin_problems()
        .into_iter()
        .find(|p| p.name == name)
        .ok_or_else(|| BenchError::Usage(format!("unknown problem `{name}`; see `list-problems`")))
}

fn lit<T: Real>(x: f64) -> T {
    T::lit(x)
}

impl TestProblem {
    pub fn dim(&self) -> usize {
        match self.solution {
            Solution::TripleTrig => 3,
            _ => 2,
        }
    }

    pub fn is_diffusion_reaction(&self) -> bool {
        self.solution == Solution::Exponential
    }

    pub fn with_params(mut self, params: &ProblemParams) -> Result<Self> {
        if self.is_diffusion_reaction() {
            if params.gamma.is_some() {
                return Err(BenchError::Usage(format!("`gamma` does not apply to {}", self.name)));
            }
            self.d = params.d.unwrap_or(self.d);
            self.tau = params.tau.or(self.tau);
        } else {
            if params.d.is_some() || params.tau.is_some() {
                return Err(BenchError::Usage(format!("`d` and `tau` do not apply to {}", self.name)));
            }
            if params.gamma.is_some() && !self.inhomogeneous {
                return Err(BenchError::Usage(format!("{} is homogeneous only for its default gamma", self.name)));
            }
            if let Some(g) = params.gamma {
                self.gamma = Positive::Value(g);
            }
        }
        for v in [params.gamma, Some(self.d), self.tau].into_iter().flatten() {
            if !(v.is_finite() && v > 0.0) {
                return Err(BenchError::Usage(format!("problem parameters must be positive, got {v}")));
            }
        }
        Ok(self)
    }

    pub fn with_domain(mut self, domain: DomainSpec) -> Result<Self> {
        if domain.dim() != self.dim() {
            return Err(BenchError::Usage(format!(
                "{} is a {}-D problem but the domain is {}-D",
                self.name,
                self.dim(),
                domain.dim()
            )));
        }
        domain.validate().map_err(|e| BenchError::Usage(e.to_string()))?;
        self.domain = domain;
        Ok(self)
    }

    fn tau<T: Real>(&self) -> T {
        match self.tau {
            Some(t) => lit(t),
            None => lit::<T>(self.d) * lit::<T>(2.0).sqrt(),
        }
    }

    pub fn operator<T: Real>(&self) -> OperatorSpec<T> {
        let op = if self.is_diffusion_reaction() {
            OperatorSpec::modified_helmholtz(self.tau(), 2)
        } else {
            OperatorSpec::helmholtz(self.gamma.get(), self.dim())
        };
        op.expect("problem parameters are validated")
    }

    pub fn exact<T: Real>(&self, p: &Point<T>) -> T {
        let (x, y) = (p.x(), p.y());
        match self.solution {
            Solution::QuadraticSine => x * x * x.sin() * y.cos(),
            Solution::TripleTrig => x.sin() * y.cos() * p.z().cos(),
            Solution::PlanarTrig => x.sin() * y.cos(),
            Solution::Exponential => (-lit::<T>(self.d) * (x + y)).exp(),
        }
    }

    pub fn gradient<T: Real>(&self, p: &Point<T>) -> Vec<T> {
        let (x, y) = (p.x(), p.y());
        let (sx, cx, sy, cy) = (x.sin(), x.cos(), y.sin(), y.cos());
        match self.solution {
            Solution::QuadraticSine => vec![(lit::<T>(2.0) * x * sx + x * x * cx) * cy, -x * x * sx * sy],
            Solution::TripleTrig => {
                let (sz, cz) = (p.z().sin(), p.z().cos());
                vec![cx * cy * cz, -sx * sy * cz, -sx * cy * sz]
            }
            Solution::PlanarTrig => vec![cx * cy, -sx * sy],
            Solution::Exponential => {
                let g = -lit::<T>(self.d) * self.exact(p);
                vec![g, g]
            }
        }
    }

    pub fn normal_derivative<T: Real>(&self, p: &Point<T>, n: &Point<T>) -> T {
        self.gradient(p).iter().zip(n.coords()).fold(T::zero(), |acc, (g, c)| acc + *g * *c)
    }

    /// Source term: the operator applied to the exact solution.
    pub fn source<T: Real>(&self, p: &Point<T>) -> T {
        let (x, y) = (p.x(), p.y());
        match self.solution {
            Solution::QuadraticSine => {
                let shift = self.gamma.squared::<T>() - lit(2.0);
                (lit::<T>(2.0) * x.sin() + lit::<T>(4.0) * x * x.cos() + shift * x * x * x.sin()) * y.cos()
            }
            Solution::TripleTrig | Solution::PlanarTrig => T::zero(),
            Solution::Exponential => {
                let d = lit::<T>(self.d);
                let coefficient = match self.tau {
                    None => T::zero(),
                    Some(t) => lit::<T>(2.0) * d * d - lit::<T>(t) * lit::<T>(t),
                };
                coefficient * self.exact(p)
            }
        }
    }

    /// Compares [`source`](Self::source) with a finite-difference
    /// application of the operator at random interior points.
    pub fn check_source(&self, samples: usize, seed: u64) -> Result<()> {
        let op = self.operator::<f64>();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = 1e-3;
        let mut found = 0;
        for _ in 0..100_000 {
            if found == samples {
                return Ok(());
            }
            let coords: Vec<f64> = (0..self.dim()).map(|_| rng.gen_range(0.0..2.0)).collect();
            let p = Point::from_slice(&coords).expect("dimension is 2 or 3");
            if !point_in_domain(&self.domain, &p) {
                continue;
            }
            found += 1;
            let centre = self.exact(&p);
            let lap: f64 = (0..p.dim())
                .map(|axis| {
                    let c = p.coords()[axis];
                    (self.exact(&p.with(axis, c + h)) - 2.0 * centre + self.exact(&p.with(axis, c - h))) / (h * h)
                })
                .sum();
            let fd = op.apply(lap, centre);
            let f = self.source(&p);
            if (fd - f).abs() > 1e-4 * f.abs().max(1.0) {
                return Err(BenchError::Usage(format!(
                    "{}: source term {f:e} disagrees with the operator applied to the exact solution ({fd:e}) at {:?}",
                    self.name,
                    p.coords()
                )));
            }
        }
        Err(BenchError::Usage(format!("{}: could not sample the domain", self.name)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let problems = builtin_problems();
        for (i, p) in problems.iter().enumerate() {
            assert!(problems[i + 1..].iter().all(|q| q.name != p.name));
        }
    }

    #[test]
    fn default_diffusion_reaction_source_vanishes() {
        let p = find_problem("diffreact2d_d5").unwrap();
        assert_eq!(p.source(&Point::new2(0.3, 0.7)), 0.0);
        let q = p.with_params(&ProblemParams { tau: Some(3.0), ..Default::default() }).unwrap();
        assert!(q.source(&Point::new2(0.3, 0.7)) != 0.0);
    }
}
