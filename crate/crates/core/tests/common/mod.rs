#![allow(dead_code)]

use bkm_core::Point;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn unit_vector(rng: &mut ChaCha8Rng, dim: usize) -> Point<f64> {
    loop {
        let v = if dim == 2 {
            Point::new2(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        } else {
            Point::new3(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        };
        if v.norm() > 0.1 {
            return v.normalized().unwrap();
        }
    }
}

pub fn random_point(rng: &mut ChaCha8Rng, dim: usize, half_width: f64) -> Point<f64> {
    let mut c = || rng.gen_range(-half_width..half_width);
    if dim == 2 {
        Point::new2(c(), c())
    } else {
        Point::new3(c(), c(), c())
    }
}

/// Second-order central finite-difference Laplacian.
pub fn fd_laplacian(f: impl Fn(&Point<f64>) -> f64, x: &Point<f64>, h: f64) -> f64 {
    let centre = f(x);
    (0..x.dim())
        .map(|axis| {
            let plus = x.with(axis, x.coords()[axis] + h);
            let minus = x.with(axis, x.coords()[axis] - h);
            (f(&plus) - 2.0 * centre + f(&minus)) / (h * h)
        })
        .sum()
}

/// Central difference of `f(x + t·dir)` at `t = 0`.
pub fn fd_directional(f: impl Fn(&Point<f64>) -> f64, x: &Point<f64>, dir: &Point<f64>, h: f64) -> f64 {
    (f(&(*x + *dir * h)) - f(&(*x - *dir * h))) / (2.0 * h)
}

pub fn rel_err(got: f64, expected: f64) -> f64 {
    (got - expected).abs() / expected.abs()
}
