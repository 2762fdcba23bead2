//! Bessel and modified Bessel functions of integer and half-integer order.
//!
//! Evaluation strategy per kind:
//!
//! * `J`: ascending series while `x² ≤ 8(ν+1)`; beyond that upward recurrence
//!   from the elementary half-order closed forms (half-integer orders with
//!   `x ≥ ν`) or Miller's backward recurrence.
//! * `Y`: half-integer orders by upward recurrence from the closed forms;
//!   integer orders from ascending series (`x ≤ 2`) or Neumann series built on
//!   the Miller `J` sequence, then upward recurrence.
//! * `I`: ascending series (all terms positive) for `x ≤ 25`, Miller's
//!   backward recurrence above.
//! * `K`: half-integer closed forms; integer orders from the ascending series
//!   (`x ≤ 2`) or Steed's continued fraction, then upward recurrence.

use serde::{Deserialize, Serialize};

use crate::error::{BkmError, Result};
use crate::scalar::Real;

/// Largest supported order.
pub const MAX_ORDER: u32 = 60;

/// Euler's constant as a sum of non-overlapping doubles.
const EULER_GAMMA: [f64; 4] = [0.5772156649015329, -4.942915152430645e-18, -2.322111740706957e-34, 1.7004947433810964e-50];
const MODIFIED_SERIES_LIMIT: f64 = 25.0;
const MAX_SERIES_TERMS: usize = 1000;

fn euler_gamma<T: Real>() -> T {
    EULER_GAMMA.iter().rev().fold(T::zero(), |acc, &c| acc + T::lit(c))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BesselKind {
    /// First kind.
    J,
    /// Second kind.
    Y,
    /// Modified, first kind.
    I,
    /// Modified, second kind.
    K,
}

impl BesselKind {
    /// Sign `s` in `d/dx [x^-ν C_ν(x)] = s · x^-ν C_{ν+1}(x)`.
    pub fn lowering_sign(self) -> i32 {
        match self {
            BesselKind::I => 1,
            _ => -1,
        }
    }

    /// Whether `x^-ν C_ν(x)` is finite at the origin.
    pub fn is_regular(self) -> bool {
        matches!(self, BesselKind::J | BesselKind::I)
    }
}

/// A non-negative integer or half-integer order, stored as `2ν`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Order {
    twice: u32,
}

impl Order {
    pub fn integer(n: u32) -> Self {
        Order { twice: 2 * n }
    }

    /// The order `k + 1/2`.
    pub fn half_odd(k: u32) -> Self {
        Order { twice: 2 * k + 1 }
    }

    /// Order from twice its value, e.g. `from_twice(3)` is `3/2`.
    pub fn from_twice(twice: u32) -> Self {
        Order { twice }
    }

    pub fn from_real<T: Real>(nu: T) -> Result<Self> {
        let twice = nu + nu;
        let rounded = twice.round();
        let max = T::of_usize(2 * MAX_ORDER as usize);
        if !nu.is_finite() || nu < T::zero() || (twice - rounded).abs() > T::lit(1e-9) || rounded > max {
            return Err(BkmError::UnsupportedOrder(nu.as_f64()));
        }
        Ok(Order {
            twice: rounded.to_u32().ok_or(BkmError::UnsupportedOrder(nu.as_f64()))?,
        })
    }

    pub fn twice(self) -> u32 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// Integer part of the order.
    pub fn floor(self) -> u32 {
        self.twice / 2
    }

    pub fn value<T: Real>(self) -> T {
        T::of_usize(self.twice as usize) / T::lit(2.0)
    }

    /// The order `ν + steps`.
    pub fn raised(self, steps: u32) -> Self {
        Order {
            twice: self.twice + 2 * steps,
        }
    }

    fn check(self) -> Result<()> {
        if self.twice > 2 * MAX_ORDER {
            Err(BkmError::UnsupportedOrder(self.twice as f64 / 2.0))
        } else {
            Ok(())
        }
    }
}

/// Evaluates `C_ν(x)` for the requested kind.
pub fn bessel<T: Real>(kind: BesselKind, order: Order, x: T) -> Result<T> {
    order.check()?;
    check_argument(kind, x)?;
    Ok(match kind {
        BesselKind::J => bessel_j(order, x),
        BesselKind::Y => bessel_y(order, x),
        BesselKind::I => bessel_i(order, x),
        BesselKind::K => bessel_k(order, x),
    })
}

/// Same as [`bessel`] with the order given as a real number.
pub fn bessel_real<T: Real>(kind: BesselKind, order: T, x: T) -> Result<T> {
    bessel(kind, Order::from_real(order)?, x)
}

/// Evaluates `x^-ν C_ν(x)`.
///
/// For `J` and `I` this is an entire function of `x²` and is evaluated
/// directly by its series near the origin, so the value at `x = 0` is the
/// finite limit `1 / (2^ν Γ(ν+1))`.
pub fn bessel_scaled<T: Real>(kind: BesselKind, order: Order, x: T) -> Result<T> {
    order.check()?;
    check_argument(kind, x)?;
    let value = match kind {
        BesselKind::J if j_series_region(order, x) => scaled_series(order, x, -1),
        BesselKind::I if x <= T::lit(MODIFIED_SERIES_LIMIT) => scaled_series(order, x, 1),
        _ => bessel(kind, order, x)? / power(order, x),
    };
    Ok(value)
}

fn check_argument<T: Real>(kind: BesselKind, x: T) -> Result<()> {
    if x.is_nan() || x < T::zero() {
        return Err(BkmError::Domain(format!("Bessel argument must be non-negative, got {x}")));
    }
    if x == T::zero() && !kind.is_regular() {
        return Err(BkmError::Domain(format!("{kind:?} is singular at the origin")));
    }
    Ok(())
}

fn j_series_region<T: Real>(order: Order, x: T) -> bool {
    x * x <= T::lit(8.0) * (order.value::<T>() + T::one())
}

/// `x^ν`
fn power<T: Real>(order: Order, x: T) -> T {
    let p = x.powi(order.floor() as i32);
    if order.is_integer() {
        p
    } else {
        p * x.sqrt()
    }
}

/// `2^ν Γ(ν+1)`
fn series_denominator<T: Real>(order: Order) -> T {
    let two = T::lit(2.0);
    let nu = order.value::<T>();
    // Γ(ν+1) by upward products from Γ(1) or Γ(1/2).
    let (mut gamma, mut arg) = if order.is_integer() {
        (T::one(), T::one())
    } else {
        (T::PI().sqrt(), T::lit(0.5))
    };
    while arg < nu + T::lit(0.5) {
        gamma = gamma * arg;
        arg = arg + T::one();
    }
    let mut pow2 = two.powi(order.floor() as i32);
    if !order.is_integer() {
        pow2 = pow2 * T::SQRT_2();
    }
    pow2 * gamma
}

/// `Σ_j sign^j (x²/4)^j / (j! Γ(j+ν+1)) / 2^ν`
fn scaled_series<T: Real>(order: Order, x: T, sign: i32) -> T {
    let nu = order.value::<T>();
    let q = x * x / T::lit(4.0);
    let q = if sign < 0 { -q } else { q };
    let mut term = T::one() / series_denominator::<T>(order);
    let mut sum = term;
    let tol = T::unit_roundoff();
    for j in 1..MAX_SERIES_TERMS {
        let jt = T::of_usize(j);
        term = term * q / (jt * (jt + nu));
        sum = sum + term;
        if term.abs() <= tol * sum.abs() {
            break;
        }
    }
    sum
}

fn bessel_j<T: Real>(order: Order, x: T) -> T {
    if x == T::zero() {
        return if order.twice == 0 { T::one() } else { T::zero() };
    }
    if j_series_region(order, x) {
        return power(order, x) * scaled_series(order, x, -1);
    }
    if order.is_integer() {
        let n = order.floor() as usize;
        miller_j_integer(x, n)[n]
    } else if x >= order.value() {
        half_upward(order.floor(), x, half_j_seed(x))
    } else {
        miller_j_half(order.floor(), x)
    }
}

/// `(J_{-1/2}(x), J_{1/2}(x))`
fn half_j_seed<T: Real>(x: T) -> (T, T) {
    let amp = (T::lit(2.0) / (T::PI() * x)).sqrt();
    let (s, c) = x.sin_cos();
    (amp * c, amp * s)
}

/// `(Y_{-1/2}(x), Y_{1/2}(x))`
fn half_y_seed<T: Real>(x: T) -> (T, T) {
    let amp = (T::lit(2.0) / (T::PI() * x)).sqrt();
    let (s, c) = x.sin_cos();
    (amp * s, -amp * c)
}

/// Upward three-term recurrence `C_{ν+1} = (2ν/x) C_ν − C_{ν−1}` over
/// half-integer orders, returning `C_{k+1/2}`.
fn half_upward<T: Real>(k: u32, x: T, seed: (T, T)) -> T {
    let (mut prev, mut cur) = seed;
    for step in 0..k {
        let nu = T::of_usize(2 * step as usize + 1) / T::lit(2.0);
        let next = (nu + nu) / x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn working_digits<T: Real>() -> f64 {
    -T::unit_roundoff().as_f64().log10()
}

fn miller_start<T: Real>(top: T) -> usize {
    let top = top.to_f64().unwrap_or(0.0).max(1.0);
    let digits = working_digits::<T>();
    let n = top.ceil() as usize + (2.0 * digits).ceil() as usize + (10.0 * digits * top).sqrt().ceil() as usize;
    n + (n % 2)
}

/// Normalized `J_0(x), ..., J_N(x)` for `N ≥ n_min`, from Miller's backward
/// recurrence with the `J_0 + 2 Σ J_2k = 1` normalization.
fn miller_j_integer<T: Real>(x: T, n_min: usize) -> Vec<T> {
    let start = miller_start(x.max(T::of_usize(n_min)));
    let mut seq = vec![T::zero(); start + 2];
    seq[start] = T::min_positive_value().sqrt();
    let big = T::rescale_threshold();
    for n in (1..=start).rev() {
        let nt = T::of_usize(n);
        seq[n - 1] = (nt + nt) / x * seq[n] - seq[n + 1];
        if seq[n - 1].abs() > big {
            let s = T::one() / big;
            for v in seq[n - 1..].iter_mut() {
                *v = *v * s;
            }
        }
    }
    let mut norm = seq[0];
    for k in (2..=start).step_by(2) {
        norm = norm + T::lit(2.0) * seq[k];
    }
    for v in seq.iter_mut() {
        *v = *v / norm;
    }
    seq.truncate(start + 1);
    seq
}

/// `J_{k+1/2}(x)` by backward recurrence normalized against the closed forms.
fn miller_j_half<T: Real>(k: u32, x: T) -> T {
    let start = miller_start(x.max(T::of_usize(k as usize + 1)));
    // a[i] holds J_{i - 1/2}
    let mut a = vec![T::zero(); start + 2];
    a[start] = T::min_positive_value().sqrt();
    let big = T::rescale_threshold();
    for i in (1..=start).rev() {
        // order of a[i] is i - 1/2; C_{ν-1} = (2ν/x) C_ν - C_{ν+1}
        let nu = T::of_usize(2 * i - 1) / T::lit(2.0);
        a[i - 1] = (nu + nu) / x * a[i] - a[i + 1];
        if a[i - 1].abs() > big {
            let s = T::one() / big;
            for v in a[i - 1..].iter_mut() {
                *v = *v * s;
            }
        }
    }
    let (jm, jp) = half_j_seed(x);
    let scale = if jm.abs() > jp.abs() { jm / a[0] } else { jp / a[1] };
    a[k as usize + 1] * scale
}

fn bessel_y<T: Real>(order: Order, x: T) -> T {
    if !order.is_integer() {
        return half_upward(order.floor(), x, half_y_seed(x));
    }
    let (y0, y1) = if x <= T::lit(2.0) {
        y01_series(x)
    } else {
        y01_neumann(x)
    };
    integer_upward(order.floor(), x, y0, y1, -1)
}

/// Upward recurrence over integer orders. `sign = -1` gives
/// `C_{n+1} = (2n/x) C_n − C_{n−1}` (J, Y); `+1` gives the `K` form
/// `C_{n+1} = (2n/x) C_n + C_{n−1}`.
fn integer_upward<T: Real>(n: u32, x: T, c0: T, c1: T, sign: i32) -> T {
    if n == 0 {
        return c0;
    }
    let (mut prev, mut cur) = (c0, c1);
    for m in 1..n {
        let mt = T::of_usize(m as usize);
        let next = if sign < 0 {
            (mt + mt) / x * cur - prev
        } else {
            (mt + mt) / x * cur + prev
        };
        prev = cur;
        cur = next;
    }
    cur
}

fn y01_series<T: Real>(x: T) -> (T, T) {
    let two_over_pi = T::lit(2.0) / T::PI();
    let gamma = euler_gamma::<T>();
    let log_half = (x / T::lit(2.0)).ln();
    let j0 = scaled_series(Order::integer(0), x, -1);
    let j1 = x * scaled_series(Order::integer(1), x, -1);
    let q = x * x / T::lit(4.0);
    let tol = T::unit_roundoff();

    // Σ_{k≥1} (-1)^{k+1} H_k q^k / (k!)^2
    let mut term = T::one();
    let mut harmonic = T::zero();
    let mut sum0 = T::zero();
    for k in 1..MAX_SERIES_TERMS {
        let kt = T::of_usize(k);
        term = -term * q / (kt * kt);
        harmonic = harmonic + T::one() / kt;
        let contrib = -term * harmonic;
        sum0 = sum0 + contrib;
        if contrib.abs() <= tol * sum0.abs() {
            break;
        }
    }
    let y0 = two_over_pi * ((log_half + gamma) * j0 + sum0);

    // Σ_{k≥0} (ψ(k+1) + ψ(k+2)) (-q)^k / (k! (k+1)!)
    let mut term = T::one();
    let mut psi_a = -gamma;
    let mut psi_b = T::one() - gamma;
    let mut sum1 = psi_a + psi_b;
    for k in 1..MAX_SERIES_TERMS {
        let kt = T::of_usize(k);
        term = -term * q / (kt * (kt + T::one()));
        psi_a = psi_a + T::one() / kt;
        psi_b = psi_b + T::one() / (kt + T::one());
        let contrib = term * (psi_a + psi_b);
        sum1 = sum1 + contrib;
        if contrib.abs() <= tol * sum1.abs() {
            break;
        }
    }
    let y1 = -two_over_pi / x + two_over_pi * log_half * j1 - x / (T::lit(2.0) * T::PI()) * sum1;
    (y0, y1)
}

/// Neumann series for `Y_0`, `Y_1` over the normalized `J` sequence.
fn y01_neumann<T: Real>(x: T) -> (T, T) {
    let j = miller_j_integer(x, 2);
    let two_over_pi = T::lit(2.0) / T::PI();
    let log_term = (x / T::lit(2.0)).ln() + euler_gamma::<T>();
    let mut s0 = T::zero();
    let mut s1 = T::zero();
    let mut k = 1;
    while 2 * k + 1 < j.len() {
        let kt = T::of_usize(k);
        let sign = if k % 2 == 0 { T::one() } else { -T::one() };
        s0 = s0 + sign * j[2 * k] / kt;
        s1 = s1 + sign * (j[2 * k - 1] - j[2 * k + 1]) / kt;
        k += 1;
    }
    let y0 = two_over_pi * (log_term * j[0] - T::lit(2.0) * s0);
    let y1 = two_over_pi * (log_term * j[1] - j[0] / x + s1);
    (y0, y1)
}

fn bessel_i<T: Real>(order: Order, x: T) -> T {
    if x == T::zero() {
        return if order.twice == 0 { T::one() } else { T::zero() };
    }
    if x <= T::lit(MODIFIED_SERIES_LIMIT) {
        return power(order, x) * scaled_series(order, x, 1);
    }
    miller_i(order, x)
}

/// Backward recurrence `I_{ν−1} = (2ν/x) I_ν + I_{ν+1}` normalized by
/// `e^x = I_0 + 2 Σ I_k` (integer) or the closed form of `I_{1/2}`.
fn miller_i<T: Real>(order: Order, x: T) -> T {
    let k = order.floor() as usize;
    let digits = working_digits::<T>();
    let root = x.sqrt().to_f64().unwrap_or(10.0);
    let start = k + (2.0 * digits).ceil() as usize + (0.625 * digits * root).ceil() as usize;
    let half = !order.is_integer();
    let mut a = vec![T::zero(); start + 2];
    a[start] = T::min_positive_value().sqrt();
    let big = T::rescale_threshold();
    for i in (1..=start).rev() {
        // a[i] has order i (integer) or i + 1/2 (half-integer)
        let nu = if half {
            T::of_usize(2 * i + 1) / T::lit(2.0)
        } else {
            T::of_usize(i)
        };
        a[i - 1] = (nu + nu) / x * a[i] + a[i + 1];
        if a[i - 1].abs() > big {
            let s = T::one() / big;
            for v in a[i - 1..].iter_mut() {
                *v = *v * s;
            }
        }
    }
    if half {
        let exact = (T::lit(2.0) / (T::PI() * x)).sqrt() * x.sinh();
        a[k] * (exact / a[0])
    } else {
        let mut norm = a[0];
        for v in &a[1..=start] {
            norm = norm + T::lit(2.0) * *v;
        }
        a[k] / norm * x.exp()
    }
}

fn bessel_k<T: Real>(order: Order, x: T) -> T {
    if !order.is_integer() {
        let k_half = (T::PI() / (T::lit(2.0) * x)).sqrt() * (-x).exp();
        // K_{-1/2} = K_{1/2}; K_{ν+1} = K_{ν−1} + (2ν/x) K_ν
        let (mut prev, mut cur) = (k_half, k_half);
        for step in 0..order.floor() {
            let nu = T::of_usize(2 * step as usize + 1) / T::lit(2.0);
            let next = (nu + nu) / x * cur + prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    let (k0, k1) = if x <= T::lit(2.0) {
        k01_series(x)
    } else {
        k01_continued_fraction(x)
    };
    integer_upward(order.floor(), x, k0, k1, 1)
}

fn k01_series<T: Real>(x: T) -> (T, T) {
    let gamma = euler_gamma::<T>();
    let log_half = (x / T::lit(2.0)).ln();
    let i0 = scaled_series(Order::integer(0), x, 1);
    let i1 = x * scaled_series(Order::integer(1), x, 1);
    let q = x * x / T::lit(4.0);
    let tol = T::unit_roundoff();

    let mut term = T::one();
    let mut harmonic = T::zero();
    let mut sum0 = T::zero();
    for k in 1..MAX_SERIES_TERMS {
        let kt = T::of_usize(k);
        term = term * q / (kt * kt);
        harmonic = harmonic + T::one() / kt;
        let contrib = term * harmonic;
        sum0 = sum0 + contrib;
        if contrib <= tol * sum0.abs() {
            break;
        }
    }
    let k0 = -(log_half + gamma) * i0 + sum0;

    let mut term = T::one();
    let mut psi_a = -gamma;
    let mut psi_b = T::one() - gamma;
    let mut sum1 = psi_a + psi_b;
    for k in 1..MAX_SERIES_TERMS {
        let kt = T::of_usize(k);
        term = term * q / (kt * (kt + T::one()));
        psi_a = psi_a + T::one() / kt;
        psi_b = psi_b + T::one() / (kt + T::one());
        let contrib = term * (psi_a + psi_b);
        sum1 = sum1 + contrib;
        if contrib.abs() <= tol * sum1.abs() {
            break;
        }
    }
    let k1 = T::one() / x + log_half * i1 - x / T::lit(4.0) * sum1;
    (k0, k1)
}

/// Ratio `K_1/K_0` from Steed's continued fraction (Temme's CF2), `x > 2`,
/// normalized by the Wronskian `I_0 K_1 + I_1 K_0 = 1/x`.
fn k01_continued_fraction<T: Real>(x: T) -> (T, T) {
    let two = T::lit(2.0);
    let tol = T::unit_roundoff();
    let a1 = T::lit(0.25);
    let mut a = -a1;
    let mut b = two * (T::one() + x);
    let mut d = T::one() / b;
    let mut h = d;
    let mut delh = d;
    for i in 2..100_000usize {
        a = a - two * (T::of_usize(i) - T::one());
        b = b + two;
        d = T::one() / (b + a * d);
        delh = (b * d - T::one()) * delh;
        h = h + delh;
        if (delh / h).abs() < tol {
            break;
        }
    }
    let ratio = (x + T::lit(0.5) - a1 * h) / x;
    let i0 = bessel_i(Order::integer(0), x);
    let i1 = bessel_i(Order::integer(1), x);
    let k0 = T::one() / (x * (i0 * ratio + i1));
    (k0, k0 * ratio)
}
