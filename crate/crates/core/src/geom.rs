//! Planar geometry kernel for the unit disk.
//!
//! Frame: the disk is centered at the origin, the search start point `I` is
//! `(0, 1)` and its antipode `I'` is `(0, -1)`. Robot R1 searches the boundary
//! counter-clockwise and robot R2 clockwise, so an arc position `s` maps to the
//! polar angle `π/2 + s` for R1 and `π/2 - s` for R2.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Collinearity and degeneracy tolerance used throughout the kernel.
pub const GEOM_EPS: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("zero-length direction vector")]
    ZeroVector,
    #[error("degenerate line: points coincide")]
    DegenerateLine,
    #[error("interior point lies on or outside the unit circle (|b| = {0})")]
    NotInterior(f64),
}

/// A point (or free vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

/// Directions share the point representation.
pub type Vec2 = Point;

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Unit vector at polar angle `theta`.
    pub fn polar(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self { x: c, y: s }
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, o: Point) -> f64 {
        (self - o).norm()
    }

    pub fn normalized(self) -> Result<Point, GeomError> {
        let n = self.norm();
        if n <= GEOM_EPS {
            return Err(GeomError::ZeroVector);
        }
        Ok(self * (1.0 / n))
    }

    /// Reflection across the y-axis.
    pub fn mirror(self) -> Point {
        Point::new(-self.x, self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:.9}, {:.9})", self.x, self.y)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// The two searching robots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Robot {
    /// Searches counter-clockwise from `I`.
    R1,
    /// Searches clockwise from `I`.
    R2,
}

impl Robot {
    pub fn other(self) -> Robot {
        match self {
            Robot::R1 => Robot::R2,
            Robot::R2 => Robot::R1,
        }
    }

    /// +1 for counter-clockwise search, -1 for clockwise.
    pub fn orientation(self) -> f64 {
        match self {
            Robot::R1 => 1.0,
            Robot::R2 => -1.0,
        }
    }

    pub fn polar_angle(self, s: f64) -> f64 {
        FRAC_PI_2 + self.orientation() * s
    }
}

impl fmt::Display for Robot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Robot::R1 => f.write_str("R1"),
            Robot::R2 => f.write_str("R2"),
        }
    }
}

/// Boundary point at arc distance `s` from `I` in the robot's search direction.
pub fn boundary_point(s: f64, robot: Robot) -> Point {
    Point::polar(robot.polar_angle(s))
}

/// Unit tangent of the boundary at arc `s`, pointing along the robot's search.
pub fn boundary_tangent(s: f64, robot: Robot) -> Vec2 {
    let theta = robot.polar_angle(s);
    let o = robot.orientation();
    Point::new(-o * theta.sin(), o * theta.cos())
}

/// Length of the segment between R1's boundary point at arc `x` and R2's at arc `y`.
pub fn chord(x: f64, y: f64) -> f64 {
    2.0 * ((x + y) / 2.0).sin().abs()
}

/// Second intersection of the line through `a` (on the circle) and `b`
/// (strictly inside) with the unit circle.
pub fn line_circle_second_intersection(a: Point, b: Point) -> Result<Point, GeomError> {
    let nb = b.norm();
    if nb >= 1.0 - GEOM_EPS {
        return Err(GeomError::NotInterior(nb));
    }
    let d = b - a;
    let len2 = d.dot(d);
    if len2.sqrt() <= GEOM_EPS {
        return Err(GeomError::DegenerateLine);
    }
    // |a + u d|^2 = 1 with |a| = 1 has roots u = 0 and u = -2 a·d / |d|^2.
    let u = -2.0 * a.dot(d) / len2;
    Ok(a + d * u)
}

/// Unsigned angle between two directions, in `[0, π]`.
pub fn angle_between(u: Vec2, v: Vec2) -> Result<f64, GeomError> {
    if u.norm() <= GEOM_EPS || v.norm() <= GEOM_EPS {
        return Err(GeomError::ZeroVector);
    }
    // atan2 keeps full precision near 0 and π where acos does not.
    Ok(u.cross(v).abs().atan2(u.dot(v)))
}

/// Arc position (along R1's direction, in `[0, 2π)`) of a boundary point.
pub fn arc_of(p: Point, robot: Robot) -> f64 {
    let theta = p.y.atan2(p.x);
    let s = robot.orientation() * (theta - FRAC_PI_2);
    s.rem_euclid(std::f64::consts::TAU)
}
