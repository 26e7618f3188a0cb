use std::ops::{Add, Mul, Sub};

use crate::scalar::Scalar;

/// A point (or displacement) in canonical-skeleton space.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Scalar> Point3<T> {
    pub const fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    pub fn origin() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    pub fn dot(self, other: Self) -> T {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Self) -> Self {
        Self::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm(self) -> T {
        self.dot(self).sqrt()
    }

    pub fn distance(self, other: Self) -> T {
        (self - other).norm()
    }

    pub fn scale(self, factor: T) -> Self {
        Self::new(self.x * factor, self.y * factor, self.z * factor)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn coords(self) -> [T; 3] {
        [self.x, self.y, self.z]
    }
}

impl<T: Scalar> Add for Point3<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl<T: Scalar> Sub for Point3<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl<T: Scalar> Mul<T> for Point3<T> {
    type Output = Self;

    fn mul(self, rhs: T) -> Self {
        self.scale(rhs)
    }
}

/// Row-major 3x3 rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation3<T> {
    rows: [Point3<T>; 3],
}

impl<T: Scalar> Rotation3<T> {
    /// Builds the rotation whose rows are the given orthonormal basis vectors,
    /// i.e. the map taking `x_axis` to +x, `y_axis` to +y and `z_axis` to +z.
    pub fn from_basis_rows(x_axis: Point3<T>, y_axis: Point3<T>, z_axis: Point3<T>) -> Self {
        Self {
            rows: [x_axis, y_axis, z_axis],
        }
    }

    pub fn identity() -> Self {
        let (o, l) = (T::zero(), T::one());
        Self::from_basis_rows(Point3::new(l, o, o), Point3::new(o, l, o), Point3::new(o, o, l))
    }

    /// Rotation by `angle` radians about the z axis.
    pub fn about_z(angle: T) -> Self {
        let (s, c) = angle.sin_cos();
        let (o, l) = (T::zero(), T::one());
        Self::from_basis_rows(Point3::new(c, -s, o), Point3::new(s, c, o), Point3::new(o, o, l))
    }

    /// Rotation by `angle` radians about the x axis.
    pub fn about_x(angle: T) -> Self {
        let (s, c) = angle.sin_cos();
        let (o, l) = (T::zero(), T::one());
        Self::from_basis_rows(Point3::new(l, o, o), Point3::new(o, c, -s), Point3::new(o, s, c))
    }

    pub fn apply(&self, p: Point3<T>) -> Point3<T> {
        Point3::new(self.rows[0].dot(p), self.rows[1].dot(p), self.rows[2].dot(p))
    }

    pub fn compose(&self, inner: &Self) -> Self {
        let cols = [
            Point3::new(inner.rows[0].x, inner.rows[1].x, inner.rows[2].x),
            Point3::new(inner.rows[0].y, inner.rows[1].y, inner.rows[2].y),
            Point3::new(inner.rows[0].z, inner.rows[1].z, inner.rows[2].z),
        ];
        let row = |r: Point3<T>| Point3::new(r.dot(cols[0]), r.dot(cols[1]), r.dot(cols[2]));
        Self::from_basis_rows(row(self.rows[0]), row(self.rows[1]), row(self.rows[2]))
    }
}
