use crate::angle::normalize_angle;
use serde::{Deserialize, Serialize};

/// Plain Cartesian point; used by the rectilinear module and for rendering.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn dist(&self, other: &Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    #[inline]
    pub fn sub(&self, other: &Point2) -> Point2 {
        Point2::new(self.x - other.x, self.y - other.y)
    }

    #[inline]
    pub fn dot(&self, other: &Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product.
    #[inline]
    pub fn cross(&self, other: &Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn to_polar(&self) -> PolarPoint {
        PolarPoint::new(self.norm(), self.y.atan2(self.x))
    }
}

/// Position as (radius, angle) about the root at the origin.
///
/// radius >= 0 and angle is normalized to [0, 2*pi); radius = 0 identifies
/// the root (angle conventionally 0).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarPoint {
    pub radius: f64,
    pub angle: f64,
}

impl PolarPoint {
    pub fn new(radius: f64, angle: f64) -> Self {
        debug_assert!(radius >= 0.0, "negative radius {radius}");
        if radius == 0.0 {
            return PolarPoint { radius: 0.0, angle: 0.0 };
        }
        PolarPoint { radius, angle: normalize_angle(angle) }
    }

    pub const fn root() -> Self {
        PolarPoint { radius: 0.0, angle: 0.0 }
    }

    #[inline]
    pub fn is_root(&self) -> bool {
        self.radius == 0.0
    }

    pub fn to_cartesian(&self) -> Point2 {
        Point2::new(self.radius * self.angle.cos(), self.radius * self.angle.sin())
    }

    pub fn dist(&self, other: &PolarPoint) -> f64 {
        self.to_cartesian().dist(&other.to_cartesian())
    }

    /// Coordinate-wise closeness; angles compared modulo 2*pi.
    pub fn approx_eq(&self, other: &PolarPoint, eps: f64) -> bool {
        self.dist(other) <= eps
    }
}
