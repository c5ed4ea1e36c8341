use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI, TAU};

/// The restricting angle alpha together with its cached trigonometry.
///
/// Every arc of a spiral tree makes an angle of at most alpha with the
/// direction towards the root; logarithmic spirals of pitch alpha make
/// exactly that angle everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngleConfig {
    alpha: f64,
    #[serde(skip, default)]
    tan_alpha: f64,
    #[serde(skip, default)]
    sec_alpha: f64,
    #[serde(skip, default)]
    csc_alpha: f64,
}

impl AngleConfig {
    /// Requires 0 < alpha < pi/2; alpha = 0 is degenerate (pure radial trees)
    /// and alpha >= pi/2 breaks the inward-motion guarantee.
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < FRAC_PI_2) || !alpha.is_finite() {
            return Err(Error::InvalidAlpha(alpha));
        }
        let cfg = AngleConfig {
            alpha,
            tan_alpha: alpha.tan(),
            sec_alpha: 1.0 / alpha.cos(),
            csc_alpha: 1.0 / alpha.sin(),
        };
        debug_assert!(cfg.tan_alpha.is_finite() && cfg.tan_alpha > 0.0);
        debug_assert!(cfg.sec_alpha.is_finite() && cfg.sec_alpha > 0.0);
        debug_assert!(cfg.csc_alpha.is_finite() && cfg.csc_alpha > 0.0);
        Ok(cfg)
    }

    /// The paper's recommended default, alpha = pi/6.
    pub fn default_alpha() -> Self {
        AngleConfig::new(PI / 6.0).unwrap()
    }

    #[inline]
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    #[inline]
    pub fn tan_alpha(&self) -> f64 {
        self.tan_alpha
    }

    #[inline]
    pub fn cot_alpha(&self) -> f64 {
        1.0 / self.tan_alpha
    }

    #[inline]
    pub fn sec_alpha(&self) -> f64 {
        self.sec_alpha
    }

    #[inline]
    pub fn csc_alpha(&self) -> f64 {
        self.csc_alpha
    }

    /// Restores the cached trig values after deserialization.
    pub fn revalidate(self) -> Result<Self> {
        AngleConfig::new(self.alpha)
    }
}

/// Normalizes an angle to [0, 2*pi).
#[inline]
pub fn normalize_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    // rem_euclid can return exactly TAU for tiny negative inputs.
    if r >= TAU {
        r - TAU
    } else {
        r
    }
}

/// Signed angular difference `to - from` as the representative in (-pi, pi].
#[inline]
pub fn signed_delta(from: f64, to: f64) -> f64 {
    let d = normalize_angle(to - from);
    if d > PI {
        d - TAU
    } else {
        d
    }
}

/// Counterclockwise angular offset from `from` to `to` in [0, 2*pi).
#[inline]
pub fn ccw_delta(from: f64, to: f64) -> f64 {
    normalize_angle(to - from)
}

/// Absolute angular distance in [0, pi].
#[inline]
pub fn angular_distance(a: f64, b: f64) -> f64 {
    signed_delta(a, b).abs()
}
