//! Error measures over the evaluation knots.

use bkm_core::Real;

use crate::error::{BenchError, Result};

/// Below this magnitude of the exact value the absolute error is used.
pub const RELATIVE_THRESHOLD: f64 = 1e-3;

fn check_lengths<T>(computed: &[T], exact: &[T]) -> Result<()> {
    if computed.len() != exact.len() || computed.is_empty() {
        return Err(BenchError::Usage(format!(
            "error metric needs equal non-empty inputs, got {} and {}",
            computed.len(),
            exact.len()
        )));
    }
    Ok(())
}

/// Root-mean-square of the per-point errors `|c − u|/|u|`, or `|c − u|`
/// where `|u| < 0.001`.
pub fn l2_relative_error<T: Real>(computed: &[T], exact: &[T]) -> Result<f64> {
    check_lengths(computed, exact)?;
    let threshold = T::lit(RELATIVE_THRESHOLD);
    let mut sum = T::zero();
    for (c, u) in computed.iter().zip(exact) {
        let diff = (*c - *u).abs();
        let e = if u.abs() >= threshold { diff / u.abs() } else { diff };
        sum = sum + e * e;
    }
    Ok((sum / T::of_usize(computed.len())).sqrt().as_f64())
}

/// `max |c − u|`.
pub fn max_error<T: Real>(computed: &[T], exact: &[T]) -> Result<f64> {
    check_lengths(computed, exact)?;
    Ok(computed.iter().zip(exact).map(|(c, u)| (*c - *u).abs().as_f64()).fold(0.0, f64::max))
}
