//! Quad-double scalar.
//!
//! A value is an unevaluated sum of four non-overlapping `f64` components,
//! giving about 212 bits of significand. Arithmetic follows the algorithms
//! of Hida, Li and Bailey's QD library. `sqrt`, `exp`, `ln`, `sin` and `cos`
//! are computed to full precision; the remaining elementary functions go
//! through `f64` and are only accurate to double precision.

use std::cmp::Ordering;
use std::fmt;
use std::num::FpCategory;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, RemAssign, Sub, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive, Num, NumCast, One, ToPrimitive, Zero};

use crate::scalar::Real;

#[derive(Clone, Copy, Default, PartialEq, PartialOrd)]
pub struct QuadDouble([f64; 4]);

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

#[inline]
fn three_sum(a: f64, b: f64, c: f64) -> (f64, f64, f64) {
    let (t1, t2) = two_sum(a, b);
    let (a, t3) = two_sum(c, t1);
    let (b, c) = two_sum(t2, t3);
    (a, b, c)
}

fn quick_three_accum(a: &mut f64, b: &mut f64, c: f64) -> f64 {
    let (s, nb) = two_sum(*b, c);
    let (s, na) = two_sum(*a, s);
    *a = na;
    *b = nb;
    let (za, zb) = (*a != 0.0, *b != 0.0);
    if za && zb {
        return s;
    }
    if !zb {
        *b = *a;
    }
    *a = s;
    0.0
}

fn renorm4(c: [f64; 4]) -> [f64; 4] {
    let [mut c0, mut c1, mut c2, mut c3] = c;
    if c0.is_infinite() {
        return c;
    }
    let (s0, n3) = quick_two_sum(c2, c3);
    c3 = n3;
    let (s0, n2) = quick_two_sum(c1, s0);
    c2 = n2;
    let (n0, n1) = quick_two_sum(c0, s0);
    c0 = n0;
    c1 = n1;
    let (mut s0, mut s1, mut s2, mut s3) = (c0, c1, 0.0, 0.0);
    if s1 != 0.0 {
        (s1, s2) = quick_two_sum(s1, c2);
        if s2 != 0.0 {
            (s2, s3) = quick_two_sum(s2, c3);
        } else {
            (s1, s2) = quick_two_sum(s1, c3);
        }
    } else {
        (s0, s1) = quick_two_sum(s0, c2);
        if s1 != 0.0 {
            (s1, s2) = quick_two_sum(s1, c3);
        } else {
            (s0, s1) = quick_two_sum(s0, c3);
        }
    }
    [s0, s1, s2, s3]
}

fn renorm5(c: [f64; 5]) -> [f64; 4] {
    let [mut c0, mut c1, mut c2, mut c3, mut c4] = c;
    if c0.is_infinite() {
        return [c0, c1, c2, c3];
    }
    let (s0, n4) = quick_two_sum(c3, c4);
    c4 = n4;
    let (s0, n3) = quick_two_sum(c2, s0);
    c3 = n3;
    let (s0, n2) = quick_two_sum(c1, s0);
    c2 = n2;
    let (n0, n1) = quick_two_sum(c0, s0);
    c0 = n0;
    c1 = n1;

    let (mut s0, mut s1) = quick_two_sum(c0, c1);
    let (mut s2, mut s3) = (0.0, 0.0);
    if s1 != 0.0 {
        (s1, s2) = quick_two_sum(s1, c2);
        if s2 != 0.0 {
            (s2, s3) = quick_two_sum(s2, c3);
            if s3 != 0.0 {
                s3 += c4;
            } else {
                (s2, s3) = quick_two_sum(s2, c4);
            }
        } else {
            (s1, s2) = quick_two_sum(s1, c3);
            if s2 != 0.0 {
                (s2, s3) = quick_two_sum(s2, c4);
            } else {
                (s1, s2) = quick_two_sum(s1, c4);
            }
        }
    } else {
        (s0, s1) = quick_two_sum(s0, c2);
        if s1 != 0.0 {
            (s1, s2) = quick_two_sum(s1, c3);
            if s2 != 0.0 {
                (s2, s3) = quick_two_sum(s2, c4);
            } else {
                (s1, s2) = quick_two_sum(s1, c4);
            }
        } else {
            (s0, s1) = quick_two_sum(s0, c3);
            if s1 != 0.0 {
                (s1, s2) = quick_two_sum(s1, c4);
            } else {
                (s0, s1) = quick_two_sum(s0, c4);
            }
        }
    }
    [s0, s1, s2, s3]
}

impl QuadDouble {
    pub const fn from_components(c: [f64; 4]) -> Self {
        QuadDouble(c)
    }

    pub fn new(x: f64) -> Self {
        QuadDouble([x, 0.0, 0.0, 0.0])
    }

    pub fn components(self) -> [f64; 4] {
        self.0
    }

    pub fn hi(self) -> f64 {
        self.0[0]
    }

    fn is_special(self) -> bool {
        !self.0[0].is_finite()
    }

    /// Multiplies by a power of two exactly.
    fn ldexp(self, e: i32) -> Self {
        let s = 2f64.powi(e);
        QuadDouble(self.0.map(|c| c * s))
    }

    fn sqr(self) -> Self {
        self * self
    }

    fn add_qd(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
        let (mut i, mut j) = (0usize, 0usize);
        let mut x = [0.0f64; 4];
        let take = |i: &mut usize, j: &mut usize| -> f64 {
            if *i >= 4 {
                *j += 1;
                b[*j - 1]
            } else if *j >= 4 || a[*i].abs() > b[*j].abs() {
                *i += 1;
                a[*i - 1]
            } else {
                *j += 1;
                b[*j - 1]
            }
        };
        let mut u = take(&mut i, &mut j);
        let v = take(&mut i, &mut j);
        let (nu, mut v) = quick_two_sum(u, v);
        u = nu;
        let mut k = 0;
        while k < 4 {
            if i >= 4 && j >= 4 {
                x[k] = u;
                if k < 3 {
                    k += 1;
                    x[k] = v;
                }
                break;
            }
            let t = take(&mut i, &mut j);
            let s = quick_three_accum(&mut u, &mut v, t);
            if s != 0.0 {
                x[k] = s;
                k += 1;
            }
        }
        for &r in &a[i.min(4)..] {
            x[3] += r;
        }
        for &r in &b[j.min(4)..] {
            x[3] += r;
        }
        renorm4(x)
    }

    fn mul_qd(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
        let (p0, q0) = two_prod(a[0], b[0]);
        let (p1, q1) = two_prod(a[0], b[1]);
        let (p2, q2) = two_prod(a[1], b[0]);
        let (p3, q3) = two_prod(a[0], b[2]);
        let (p4, q4) = two_prod(a[1], b[1]);
        let (p5, q5) = two_prod(a[2], b[0]);

        let (p1, p2, q0) = three_sum(p1, p2, q0);

        let (p2, q1, q2) = three_sum(p2, q1, q2);
        let (p3, p4, p5) = three_sum(p3, p4, p5);
        let (s0, t0) = two_sum(p2, p3);
        let (s1, t1) = two_sum(q1, p4);
        let mut s2 = q2 + p5;
        let (s1, t0) = two_sum(s1, t0);
        s2 += t0 + t1;

        let (p6, q6) = two_prod(a[0], b[3]);
        let (p7, q7) = two_prod(a[1], b[2]);
        let (p8, q8) = two_prod(a[2], b[1]);
        let (p9, q9) = two_prod(a[3], b[0]);

        let (q0, q3) = two_sum(q0, q3);
        let (q4, q5) = two_sum(q4, q5);
        let (p6, p7) = two_sum(p6, p7);
        let (p8, p9) = two_sum(p8, p9);
        let (t0, mut t1) = two_sum(q0, q4);
        t1 += q3 + q5;
        let (r0, mut r1) = two_sum(p6, p8);
        r1 += p7 + p9;
        let (q3, mut q4) = two_sum(t0, r0);
        q4 += t1 + r1;
        let (t0, mut t1) = two_sum(q3, s1);
        t1 += q4;

        t1 += a[1] * b[3] + a[2] * b[2] + a[3] * b[1] + q6 + q7 + q8 + q9 + s2;
        renorm5([p0, p1, s0, t0, t1])
    }

    fn div_qd(a: Self, b: Self) -> Self {
        let b0 = b.0[0];
        if b0 == 0.0 || a.is_special() || b.is_special() {
            return QuadDouble::new(a.0[0] / b0);
        }
        let q0 = a.0[0] / b0;
        let mut r = a - b * QuadDouble::new(q0);
        let q1 = r.0[0] / b0;
        r = r - b * QuadDouble::new(q1);
        let q2 = r.0[0] / b0;
        r = r - b * QuadDouble::new(q2);
        let q3 = r.0[0] / b0;
        r = r - b * QuadDouble::new(q3);
        let q4 = r.0[0] / b0;
        QuadDouble(renorm5([q0, q1, q2, q3, q4]))
    }

    fn sqrt_qd(self) -> Self {
        if self.0[0] == 0.0 {
            return QuadDouble::zero();
        }
        if self.0[0] < 0.0 || self.is_special() {
            return QuadDouble::new(self.0[0].sqrt());
        }
        // Newton on 1/sqrt(a), three steps from a double estimate
        let half = QuadDouble::new(0.5);
        let h = self * half;
        let mut r = QuadDouble::new(1.0 / self.0[0].sqrt());
        for _ in 0..3 {
            r = r + (half - h * r.sqr()) * r;
        }
        r * self
    }

    fn exp_qd(self) -> Self {
        let x = self.0[0];
        if x > 709.0 {
            return QuadDouble::infinity();
        }
        if x < -745.0 {
            return QuadDouble::zero();
        }
        if x == 0.0 && self.0[1] == 0.0 {
            return QuadDouble::one();
        }
        let ln2 = QuadDouble(LN_2);
        let m = (x / ln2.0[0]).round();
        // |r| ≤ ln 2 / 2^11
        let r = (self - ln2 * QuadDouble::new(m)).ldexp(-10);
        let mut term = r;
        let mut s = r;
        for n in 2..40 {
            term = term * r / QuadDouble::new(n as f64);
            s = s + term;
            if term.0[0].abs() < 1e-70 * s.0[0].abs().max(1e-300) {
                break;
            }
        }
        // exp(2t) − 1 = 2s + s² applied ten times
        for _ in 0..10 {
            s = s.ldexp(1) + s.sqr();
        }
        (s + QuadDouble::one()).ldexp(m as i32)
    }

    fn ln_qd(self) -> Self {
        if self.0[0] <= 0.0 || self.is_special() {
            return QuadDouble::new(self.0[0].ln());
        }
        if self == QuadDouble::one() {
            return QuadDouble::zero();
        }
        let mut x = QuadDouble::new(self.0[0].ln());
        for _ in 0..3 {
            x = x + self * (-x).exp_qd() - QuadDouble::one();
        }
        x
    }

    /// `(sin t, cos t)` for `|t| ≤ π/4`.
    fn sin_cos_reduced(t: Self) -> (Self, Self) {
        let t2 = t.sqr();
        let mut term = t;
        let mut s = t;
        for n in (3..80).step_by(2) {
            term = -(term * t2) / QuadDouble::new((n * (n - 1)) as f64);
            s = s + term;
            if term.0[0].abs() < 1e-68 * s.0[0].abs().max(1e-300) {
                break;
            }
        }
        let mut term = QuadDouble::one();
        let mut c = QuadDouble::one();
        for n in (2..80).step_by(2) {
            term = -(term * t2) / QuadDouble::new((n * (n - 1)) as f64);
            c = c + term;
            if term.0[0].abs() < 1e-68 {
                break;
            }
        }
        (s, c)
    }

    fn sin_cos_qd(self) -> (Self, Self) {
        if self.is_special() {
            return (QuadDouble::nan(), QuadDouble::nan());
        }
        let tau = QuadDouble(TAU);
        let z = (self / tau).round();
        let r = self - tau * z;
        let half_pi = QuadDouble(FRAC_PI_2);
        let j = (r.0[0] / half_pi.0[0]).round();
        let t = r - half_pi * QuadDouble::new(j);
        let (s, c) = Self::sin_cos_reduced(t);
        match (j as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    fn via_f64(self, f: impl Fn(f64) -> f64) -> Self {
        QuadDouble::new(f(self.0[0] + self.0[1]))
    }
}

const E: [f64; 4] = [2.718281828459045, 1.4456468917292502e-16, -2.1277171080381768e-33, 1.5156301598412191e-49];
const FRAC_1_PI: [f64; 4] = [0.3183098861837907, -1.9678676675182486e-17, -1.0721436282893004e-33, 8.053563926594112e-50];
const FRAC_1_SQRT_2: [f64; 4] = [0.7071067811865476, -4.833646656726457e-17, 2.0693376543497068e-33, 2.4677734957341755e-50];
const FRAC_2_PI: [f64; 4] = [0.6366197723675814, -3.935735335036497e-17, -2.1442872565786008e-33, 1.6107127853188224e-49];
const FRAC_2_SQRT_PI: [f64; 4] = [1.1283791670955126, 1.533545961316588e-17, -4.765684596693686e-34, -2.007794661655263e-50];
const FRAC_PI_2: [f64; 4] = [1.5707963267948966, 6.123233995736766e-17, -1.4973849048591698e-33, 5.562271104316826e-50];
const FRAC_PI_3: [f64; 4] = [1.0471975511965979, -1.072081766451091e-16, -9.982566032394464e-34, -7.6956153601821505e-50];
const FRAC_PI_4: [f64; 4] = [0.7853981633974483, 3.061616997868383e-17, -7.486924524295849e-34, 2.781135552158413e-50];
const FRAC_PI_6: [f64; 4] = [0.5235987755982989, -5.360408832255455e-17, -4.991283016197232e-34, -3.8478076800910752e-50];
const FRAC_PI_8: [f64; 4] = [0.39269908169872414, 1.5308084989341915e-17, -3.7434622621479246e-34, 1.3905677760792066e-50];
const LN_10: [f64; 4] = [2.302585092994046, -2.1707562233822494e-16, -9.984262454465777e-33, -4.023357454450206e-49];
const LN_2: [f64; 4] = [0.6931471805599453, 2.3190468138462996e-17, 5.707708438416212e-34, -3.5824322106018114e-50];
const LOG10_E: [f64; 4] = [0.4342944819032518, 1.098319650216765e-17, 3.717181233110959e-34, 7.734484346504299e-51];
const LOG2_E: [f64; 4] = [1.4426950408889634, 2.0355273740931033e-17, -1.0614659956117258e-33, -1.3836716780181402e-50];
const PI: [f64; 4] = [3.141592653589793, 1.2246467991473532e-16, -2.9947698097183397e-33, 1.1124542208633653e-49];
const SQRT_2: [f64; 4] = [1.4142135623730951, -9.667293313452913e-17, 4.1386753086994136e-33, 4.935546991468351e-50];
const TAU: [f64; 4] = [6.283185307179586, 2.4492935982947064e-16, -5.989539619436679e-33, 2.2249084417267306e-49];

impl fmt::Debug for QuadDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "QuadDouble({a:e} + {b:e} + {c:e} + {d:e})")
    }
}

impl fmt::Display for QuadDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0[0], f)
    }
}

impl fmt::LowerExp for QuadDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerExp::fmt(&self.0[0], f)
    }
}

impl From<f64> for QuadDouble {
    fn from(x: f64) -> Self {
        QuadDouble::new(x)
    }
}

impl Add for QuadDouble {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.is_special() || rhs.is_special() {
            return QuadDouble::new(self.0[0] + rhs.0[0]);
        }
        QuadDouble(Self::add_qd(self.0, rhs.0))
    }
}

impl Sub for QuadDouble {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for QuadDouble {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_special() || rhs.is_special() {
            return QuadDouble::new(self.0[0] * rhs.0[0]);
        }
        QuadDouble(Self::mul_qd(self.0, rhs.0))
    }
}

impl Div for QuadDouble {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        Self::div_qd(self, rhs)
    }
}

impl Rem for QuadDouble {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        self - (self / rhs).trunc() * rhs
    }
}

impl Neg for QuadDouble {
    type Output = Self;
    fn neg(self) -> Self {
        QuadDouble(self.0.map(|c| -c))
    }
}

macro_rules! assign_ops {
    ($($tr:ident $method:ident $op:tt),*) => {
        $(impl $tr for QuadDouble {
            fn $method(&mut self, rhs: Self) {
                *self = *self $op rhs;
            }
        })*
    };
}

assign_ops!(AddAssign add_assign +, SubAssign sub_assign -, MulAssign mul_assign *, DivAssign div_assign /, RemAssign rem_assign %);

impl Zero for QuadDouble {
    fn zero() -> Self {
        QuadDouble::new(0.0)
    }
    fn is_zero(&self) -> bool {
        self.0[0] == 0.0
    }
}

impl One for QuadDouble {
    fn one() -> Self {
        QuadDouble::new(1.0)
    }
}

impl Num for QuadDouble {
    type FromStrRadixErr = num_traits::ParseFloatError;

    /// Parses through `f64`, so only double precision is retained.
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        f64::from_str_radix(s, radix).map(QuadDouble::new)
    }
}

impl ToPrimitive for QuadDouble {
    fn to_i64(&self) -> Option<i64> {
        let t = self.trunc();
        let total: i128 = t.0.iter().map(|&c| c as i128).sum();
        i64::try_from(total).ok()
    }
    fn to_u64(&self) -> Option<u64> {
        let t = self.trunc();
        let total: i128 = t.0.iter().map(|&c| c as i128).sum();
        u64::try_from(total).ok()
    }
    fn to_f64(&self) -> Option<f64> {
        Some(self.0[0] + self.0[1])
    }
}

impl FromPrimitive for QuadDouble {
    fn from_i64(n: i64) -> Option<Self> {
        let hi = n as f64;
        let lo = (n as i128 - hi as i128) as f64;
        Some(QuadDouble(renorm4([hi, lo, 0.0, 0.0])))
    }
    fn from_u64(n: u64) -> Option<Self> {
        let hi = n as f64;
        let lo = (n as i128 - hi as i128) as f64;
        Some(QuadDouble(renorm4([hi, lo, 0.0, 0.0])))
    }
    fn from_f64(n: f64) -> Option<Self> {
        Some(QuadDouble::new(n))
    }
}

impl NumCast for QuadDouble {
    fn from<N: ToPrimitive>(n: N) -> Option<Self> {
        n.to_f64().map(QuadDouble::new)
    }
}

impl Float for QuadDouble {
    fn nan() -> Self {
        QuadDouble::new(f64::NAN)
    }
    fn infinity() -> Self {
        QuadDouble::new(f64::INFINITY)
    }
    fn neg_infinity() -> Self {
        QuadDouble::new(f64::NEG_INFINITY)
    }
    fn neg_zero() -> Self {
        QuadDouble::new(-0.0)
    }
    fn min_value() -> Self {
        QuadDouble::new(f64::MIN)
    }
    fn min_positive_value() -> Self {
        QuadDouble::new(f64::MIN_POSITIVE)
    }
    fn max_value() -> Self {
        QuadDouble::new(f64::MAX)
    }
    fn epsilon() -> Self {
        // 2^-209
        QuadDouble::new(2f64.powi(-209))
    }
    fn is_nan(self) -> bool {
        self.0[0].is_nan()
    }
    fn is_infinite(self) -> bool {
        self.0[0].is_infinite()
    }
    fn is_finite(self) -> bool {
        self.0[0].is_finite()
    }
    fn is_normal(self) -> bool {
        self.0[0].is_normal()
    }
    fn classify(self) -> FpCategory {
        self.0[0].classify()
    }
    fn is_sign_positive(self) -> bool {
        self.0[0].is_sign_positive()
    }
    fn is_sign_negative(self) -> bool {
        self.0[0].is_sign_negative()
    }

    fn floor(self) -> Self {
        let mut x = [self.0[0].floor(), 0.0, 0.0, 0.0];
        if x[0] == self.0[0] {
            x[1] = self.0[1].floor();
            if x[1] == self.0[1] {
                x[2] = self.0[2].floor();
                if x[2] == self.0[2] {
                    x[3] = self.0[3].floor();
                }
            }
            return QuadDouble(renorm4(x));
        }
        QuadDouble(x)
    }

    fn ceil(self) -> Self {
        -(-self).floor()
    }

    fn round(self) -> Self {
        if self.0[0] >= 0.0 {
            (self + QuadDouble::new(0.5)).floor()
        } else {
            -((-self) + QuadDouble::new(0.5)).floor()
        }
    }

    fn trunc(self) -> Self {
        if self.0[0] >= 0.0 {
            self.floor()
        } else {
            self.ceil()
        }
    }

    fn fract(self) -> Self {
        self - self.trunc()
    }

    fn abs(self) -> Self {
        if self.0[0] < 0.0 {
            -self
        } else {
            self
        }
    }

    fn signum(self) -> Self {
        QuadDouble::new(self.0[0].signum())
    }

    fn mul_add(self, a: Self, b: Self) -> Self {
        self * a + b
    }

    fn recip(self) -> Self {
        QuadDouble::one() / self
    }

    fn powi(self, n: i32) -> Self {
        let mut base = self;
        let mut e = n.unsigned_abs();
        let mut acc = QuadDouble::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base.sqr();
            e >>= 1;
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    fn powf(self, n: Self) -> Self {
        (self.ln() * n).exp()
    }

    fn sqrt(self) -> Self {
        self.sqrt_qd()
    }

    fn exp(self) -> Self {
        self.exp_qd()
    }

    fn exp2(self) -> Self {
        (self * QuadDouble(LN_2)).exp_qd()
    }

    fn ln(self) -> Self {
        self.ln_qd()
    }

    fn log(self, base: Self) -> Self {
        self.ln() / base.ln()
    }

    fn log2(self) -> Self {
        self.ln() * QuadDouble(LOG2_E)
    }

    fn log10(self) -> Self {
        self.ln() * QuadDouble(LOG10_E)
    }

    fn max(self, other: Self) -> Self {
        if self.is_nan() || other > self {
            other
        } else {
            self
        }
    }

    fn min(self, other: Self) -> Self {
        if self.is_nan() || other < self {
            other
        } else {
            self
        }
    }

    fn abs_sub(self, other: Self) -> Self {
        if self > other {
            self - other
        } else {
            QuadDouble::zero()
        }
    }

    fn cbrt(self) -> Self {
        if self.0[0] == 0.0 || self.is_special() {
            return self;
        }
        let mut x = QuadDouble::new(self.0[0].cbrt());
        let three = QuadDouble::new(3.0);
        for _ in 0..3 {
            x = x - (x * x * x - self) / (three * x * x);
        }
        x
    }

    fn hypot(self, other: Self) -> Self {
        (self.sqr() + other.sqr()).sqrt()
    }

    fn sin(self) -> Self {
        self.sin_cos_qd().0
    }

    fn cos(self) -> Self {
        self.sin_cos_qd().1
    }

    fn tan(self) -> Self {
        let (s, c) = self.sin_cos_qd();
        s / c
    }

    fn asin(self) -> Self {
        self.via_f64(f64::asin)
    }

    fn acos(self) -> Self {
        self.via_f64(f64::acos)
    }

    fn atan(self) -> Self {
        self.via_f64(f64::atan)
    }

    fn atan2(self, other: Self) -> Self {
        QuadDouble::new((self.0[0] + self.0[1]).atan2(other.0[0] + other.0[1]))
    }

    fn sin_cos(self) -> (Self, Self) {
        self.sin_cos_qd()
    }

    fn exp_m1(self) -> Self {
        self.exp() - QuadDouble::one()
    }

    fn ln_1p(self) -> Self {
        (self + QuadDouble::one()).ln()
    }

    fn sinh(self) -> Self {
        let e = self.exp();
        (e - e.recip()).ldexp(-1)
    }

    fn cosh(self) -> Self {
        let e = self.exp();
        (e + e.recip()).ldexp(-1)
    }

    fn tanh(self) -> Self {
        let e2 = self.ldexp(1).exp();
        (e2 - QuadDouble::one()) / (e2 + QuadDouble::one())
    }

    fn asinh(self) -> Self {
        self.via_f64(f64::asinh)
    }

    fn acosh(self) -> Self {
        self.via_f64(f64::acosh)
    }

    fn atanh(self) -> Self {
        self.via_f64(f64::atanh)
    }

    fn integer_decode(self) -> (u64, i16, i8) {
        self.0[0].integer_decode()
    }
}

macro_rules! float_consts {
    ($($name:ident),*) => {
        impl FloatConst for QuadDouble {
            $(fn $name() -> Self {
                QuadDouble($name)
            })*
        }
    };
}

float_consts!(
    E, FRAC_1_PI, FRAC_1_SQRT_2, FRAC_2_PI, FRAC_2_SQRT_PI, FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, FRAC_PI_8, LN_10,
    LN_2, LOG10_E, LOG2_E, PI, SQRT_2
);

impl Real for QuadDouble {
    fn unit_roundoff() -> Self {
        QuadDouble::new(2f64.powi(-210))
    }
}

impl PartialEq<f64> for QuadDouble {
    fn eq(&self, other: &f64) -> bool {
        *self == QuadDouble::new(*other)
    }
}

impl PartialOrd<f64> for QuadDouble {
    fn partial_cmp(&self, other: &f64) -> Option<Ordering> {
        self.partial_cmp(&QuadDouble::new(*other))
    }
}
