use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{BkmError, Result};
use crate::scalar::Real;

/// A point or vector in two or three dimensions.
///
/// Two-dimensional values keep a zero third coordinate so the arithmetic is
/// shared between dimensions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point<T> {
    coords: [T; 3],
    dim: usize,
}

impl<T: Real> Point<T> {
    pub fn new2(x: T, y: T) -> Self {
        Point { coords: [x, y, T::zero()], dim: 2 }
    }

    pub fn new3(x: T, y: T, z: T) -> Self {
        Point { coords: [x, y, z], dim: 3 }
    }

    pub fn origin(dim: usize) -> Self {
        Point {
            coords: [T::zero(); 3],
            dim,
        }
    }

    pub fn from_slice(values: &[T]) -> Result<Self> {
        match *values {
            [x, y] => Ok(Self::new2(x, y)),
            [x, y, z] => Ok(Self::new3(x, y, z)),
            _ => Err(BkmError::DimensionMismatch {
                expected: 3,
                found: values.len(),
            }),
        }
    }

    /// Converts the coordinates of an `f64` point.
    pub fn from_f64(p: &Point<f64>) -> Self {
        Point {
            coords: p.coords.map(T::lit),
            dim: p.dim,
        }
    }

    pub fn to_f64(&self) -> Point<f64> {
        Point {
            coords: self.coords.map(|c| c.as_f64()),
            dim: self.dim,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> &[T] {
        &self.coords[..self.dim]
    }

    pub fn x(&self) -> T {
        self.coords[0]
    }

    pub fn y(&self) -> T {
        self.coords[1]
    }

    pub fn z(&self) -> T {
        self.coords[2]
    }

    /// Copy with coordinate `axis` replaced.
    pub fn with(mut self, axis: usize, value: T) -> Self {
        self.coords[axis] = value;
        self
    }

    pub fn dot(&self, other: &Self) -> T {
        self.coords[0] * other.coords[0] + self.coords[1] * other.coords[1] + self.coords[2] * other.coords[2]
    }

    pub fn norm(&self) -> T {
        self.dot(self).sqrt()
    }

    pub fn distance(&self, other: &Self) -> T {
        (*self - *other).norm()
    }

    pub fn cross(&self, other: &Self) -> Self {
        let [a1, a2, a3] = self.coords;
        let [b1, b2, b3] = other.coords;
        Point::new3(a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)
    }

    /// Unit vector in the same direction, or `None` for a zero vector.
    pub fn normalized(&self) -> Option<Self> {
        let n = self.norm();
        if n > T::zero() && n.is_finite() {
            Some(*self * (T::one() / n))
        } else {
            None
        }
    }

    pub fn is_finite(&self) -> bool {
        self.coords.iter().all(|c| c.is_finite())
    }
}

impl<T: Real> Add for Point<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Point {
            coords: [
                self.coords[0] + rhs.coords[0],
                self.coords[1] + rhs.coords[1],
                self.coords[2] + rhs.coords[2],
            ],
            dim: self.dim.max(rhs.dim),
        }
    }
}

impl<T: Real> Sub for Point<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Real> Neg for Point<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Point {
            coords: self.coords.map(|c| -c),
            dim: self.dim,
        }
    }
}

impl<T: Real> Mul<T> for Point<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        Point {
            coords: self.coords.map(|c| c * rhs),
            dim: self.dim,
        }
    }
}
