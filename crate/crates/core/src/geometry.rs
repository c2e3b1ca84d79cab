//! Plane geometry primitives.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Point {
        Point { x, y }
    }

    /// Unit vector at angle `theta` (radians, counter-clockwise from +x).
    pub fn polar(theta: f64) -> Point {
        let (s, c) = theta.sin_cos();
        Point::new(c, s)
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    /// Largest absolute coordinate.
    pub fn magnitude(self) -> f64 {
        self.x.abs().max(self.y.abs())
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    /// Rotates counter-clockwise by `theta`.
    pub fn rotate(self, theta: f64) -> Point {
        let (s, c) = theta.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    /// Left-hand normal (rotation by +90 degrees), exact.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn unit(self) -> Point {
        let n = self.norm();
        Point::new(self.x / n, self.y / n)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
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

/// Normalizes an angle into `[0, 2π)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(2.0 * PI);
    if t >= 2.0 * PI {
        0.0
    } else {
        t
    }
}

/// Closed circular sector: apex, unit bisector direction, half opening angle
/// and radius. Half angle `π/2` is a half-disk, `π/4` a quarter-disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sector {
    pub apex: Point,
    pub direction: Point,
    pub half_angle: f64,
    pub radius: f64,
}

impl Sector {
    /// Inward unit normals of the two bounding rays. For a half-disk both
    /// equal the bisector direction.
    fn inward_normals(&self) -> [Point; 2] {
        let a = self.half_angle;
        // Boundary rays are the bisector rotated by ±a; their inward normals
        // are those rays rotated back toward the bisector by 90 degrees.
        [
            self.direction.rotate(a - PI / 2.0),
            self.direction.rotate(PI / 2.0 - a),
        ]
    }

    /// Whether `p` lies in the sector, allowing an absolute slack `tol`.
    pub fn contains_point(&self, p: Point, tol: f64) -> bool {
        let d = p - self.apex;
        if d.norm() > self.radius + tol {
            return false;
        }
        self.inward_normals().iter().all(|n| d.dot(*n) >= -tol)
    }

    /// Whether the closed disk lies in the sector (convex sectors only,
    /// i.e. half angle at most `π/2`).
    pub fn contains_disk(&self, center: Point, radius: f64, tol: f64) -> bool {
        let d = center - self.apex;
        if d.norm() + radius > self.radius + tol {
            return false;
        }
        self.inward_normals()
            .iter()
            .all(|n| d.dot(*n) >= radius - tol)
    }

    /// Whether two sectors sharing an apex have disjoint interiors.
    pub fn interior_disjoint_from(&self, other: &Sector, tol: f64) -> bool {
        let gap = normalize_angle(other.direction.angle() - self.direction.angle());
        let gap = gap.min(2.0 * PI - gap);
        gap + tol >= self.half_angle + other.half_angle
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_sector_disk_containment() {
        let s = Sector {
            apex: Point::ORIGIN,
            direction: Point::new(0.0, 1.0),
            half_angle: PI / 4.0,
            radius: 10.0,
        };
        // Distance from (0, t) to the bounding rays is t / sqrt(2).
        assert!(s.contains_disk(Point::new(0.0, 4.0), 2.8, 0.0));
        assert!(!s.contains_disk(Point::new(0.0, 4.0), 2.9, 0.0));
        assert!(!s.contains_disk(Point::new(0.0, 8.0), 2.5, 0.0));
        assert!(s.contains_point(Point::new(1.0, 1.0), 1e-12));
        assert!(!s.contains_point(Point::new(1.1, 1.0), 0.0));
    }

    #[test]
    fn half_sector_is_a_half_plane_cap() {
        let s = Sector {
            apex: Point::ORIGIN,
            direction: Point::new(1.0, 0.0),
            half_angle: PI / 2.0,
            radius: 5.0,
        };
        assert!(s.contains_point(Point::new(0.0, 4.9), 0.0));
        assert!(!s.contains_point(Point::new(-0.1, 0.0), 0.0));
        assert!(s.contains_disk(Point::new(2.0, 0.0), 2.0, 1e-12));
        assert!(!s.contains_disk(Point::new(2.0, 0.0), 2.1, 0.0));
    }

    #[test]
    fn quadrants_are_disjoint() {
        let q = |deg: f64| Sector {
            apex: Point::ORIGIN,
            direction: Point::polar(deg.to_radians()),
            half_angle: PI / 4.0,
            radius: 1.0,
        };
        assert!(q(45.0).interior_disjoint_from(&q(-45.0), 1e-12));
        assert!(q(135.0).interior_disjoint_from(&q(-135.0), 1e-12));
        assert!(!q(45.0).interior_disjoint_from(&q(60.0), 1e-12));
    }
}
