//! Logarithmic-spiral primitives: reachability regions, distances, join
//! points, and shortest angle-restricted paths.
//!
//! A right spiral through p = (R, phi) is R(t) = R*exp(-t),
//! phi(t) = phi + tan(alpha)*t; the left spiral uses -tan(alpha). Both make
//! a constant angle alpha with the direction to the root, so any path glued
//! from inward spiral segments is angle-restricted by construction.

use crate::angle::{angular_distance, ccw_delta, normalize_angle, signed_delta, AngleConfig};
use crate::error::{Error, Result};
use crate::polar::{Point2, PolarPoint};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Relative slack for region-membership tests; join points land exactly on
/// region boundaries, so the test must not reject its own outputs.
const REGION_EPS: f64 = 1e-12;

/// Spiral orientation: a right spiral winds counterclockwise going inward,
/// a left spiral clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    Left,
    Right,
}

impl Orientation {
    #[inline]
    pub fn sign(&self) -> f64 {
        match self {
            Orientation::Right => 1.0,
            Orientation::Left => -1.0,
        }
    }

    #[inline]
    pub fn opposite(&self) -> Orientation {
        match self {
            Orientation::Right => Orientation::Left,
            Orientation::Left => Orientation::Right,
        }
    }
}

/// One primitive path piece, traversed from its outer end towards the root.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum SpiralArc {
    Straight {
        from: PolarPoint,
        to: PolarPoint,
    },
    /// Traces spiral_point_at(anchor, orientation, t) for t in [0, t_end].
    Spiral {
        anchor: PolarPoint,
        orientation: Orientation,
        t_end: f64,
    },
}

impl SpiralArc {
    pub fn start(&self) -> PolarPoint {
        match self {
            SpiralArc::Straight { from, .. } => *from,
            SpiralArc::Spiral { anchor, .. } => *anchor,
        }
    }

    pub fn end(&self, cfg: &AngleConfig) -> PolarPoint {
        match self {
            SpiralArc::Straight { to, .. } => *to,
            SpiralArc::Spiral { anchor, orientation, t_end } => {
                spiral_point_at_unchecked(anchor, *orientation, *t_end, cfg)
            }
        }
    }

    /// Point at parameter fraction f in [0, 1] along the piece.
    pub fn point_at_fraction(&self, f: f64, cfg: &AngleConfig) -> PolarPoint {
        match self {
            SpiralArc::Straight { from, to } => {
                let a = from.to_cartesian();
                let b = to.to_cartesian();
                Point2::new(a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)).to_polar()
            }
            SpiralArc::Spiral { anchor, orientation, t_end } => {
                spiral_point_at_unchecked(anchor, *orientation, f * t_end, cfg)
            }
        }
    }

    /// Unit tangent in the direction of travel (outer end towards root).
    pub fn tangent_at_fraction(&self, f: f64, cfg: &AngleConfig) -> Point2 {
        match self {
            SpiralArc::Straight { from, to } => {
                let d = to.to_cartesian().sub(&from.to_cartesian());
                let n = d.norm();
                if n == 0.0 {
                    Point2::new(0.0, 0.0)
                } else {
                    Point2::new(d.x / n, d.y / n)
                }
            }
            SpiralArc::Spiral { anchor, orientation, t_end } => {
                let p = spiral_point_at_unchecked(anchor, *orientation, f * t_end, cfg);
                let (sin_phi, cos_phi) = p.angle.sin_cos();
                let s = orientation.sign() * cfg.tan_alpha();
                // v = -r_hat + s * theta_hat, normalized by sec(alpha)
                let vx = -cos_phi - s * sin_phi;
                let vy = -sin_phi + s * cos_phi;
                let n = vx.hypot(vy);
                Point2::new(vx / n, vy / n)
            }
        }
    }

    /// Closed-form arc length.
    pub fn length(&self, cfg: &AngleConfig) -> f64 {
        match self {
            SpiralArc::Straight { from, to } => from.dist(to),
            SpiralArc::Spiral { anchor, t_end, .. } => {
                cfg.sec_alpha() * anchor.radius * (1.0 - (-t_end).exp())
            }
        }
    }

    /// Radial interval [min, max] covered by the piece.
    pub fn radial_span(&self) -> (f64, f64) {
        match self {
            SpiralArc::Straight { from, to } => {
                let a = from.to_cartesian();
                let b = to.to_cartesian();
                let d = b.sub(&a);
                let denom = d.dot(&d);
                let mut lo = from.radius.min(to.radius);
                let hi = from.radius.max(to.radius);
                if denom > 0.0 {
                    let t = -a.dot(&d) / denom;
                    if t > 0.0 && t < 1.0 {
                        let c = Point2::new(a.x + t * d.x, a.y + t * d.y);
                        lo = lo.min(c.norm());
                    }
                }
                (lo, hi)
            }
            SpiralArc::Spiral { anchor, t_end, .. } => {
                (anchor.radius * (-t_end).exp(), anchor.radius)
            }
        }
    }

    pub fn is_degenerate(&self) -> bool {
        match self {
            SpiralArc::Straight { from, to } => from.dist(to) == 0.0,
            SpiralArc::Spiral { anchor, t_end, .. } => *t_end == 0.0 || anchor.radius == 0.0,
        }
    }
}

fn spiral_point_at_unchecked(
    p: &PolarPoint,
    orientation: Orientation,
    t: f64,
    cfg: &AngleConfig,
) -> PolarPoint {
    PolarPoint::new(
        p.radius * (-t).exp(),
        p.angle + orientation.sign() * cfg.tan_alpha() * t,
    )
}

/// Point on the spiral through p at parameter t; t may be negative (outward).
pub fn spiral_point_at(
    p: &PolarPoint,
    orientation: Orientation,
    t: f64,
    cfg: &AngleConfig,
) -> Result<PolarPoint> {
    if p.is_root() {
        return Err(Error::SpiralAtRoot);
    }
    Ok(spiral_point_at_unchecked(p, orientation, t, cfg))
}

/// Radius of the boundary of the spiral region of p at absolute angular
/// offset `dphi` from p (valid for dphi in [0, pi]).
#[inline]
pub fn region_boundary_radius(p: &PolarPoint, dphi: f64, cfg: &AngleConfig) -> f64 {
    p.radius * (-dphi * cfg.cot_alpha()).exp()
}

/// Reachability test: q is in the spiral region of p iff q lies on or below
/// both boundary spirals of p. The boundary branch covering q's ray is the
/// one with the smaller angular offset, so a single comparison at the
/// absolute angular distance suffices.
pub fn in_spiral_region(p: &PolarPoint, q: &PolarPoint, cfg: &AngleConfig) -> bool {
    if q.is_root() {
        return true;
    }
    if p.is_root() {
        return false;
    }
    let dphi = angular_distance(p.angle, q.angle);
    q.radius <= region_boundary_radius(p, dphi, cfg) * (1.0 + REGION_EPS)
}

/// Spiral-path distance between region-related points (the length of any
/// radially monotone spiral path between them): sec(alpha) * |R_p - R_q|.
pub fn spiral_distance(p: &PolarPoint, q: &PolarPoint, cfg: &AngleConfig) -> Result<f64> {
    if !in_spiral_region(p, q, cfg) && !in_spiral_region(q, p, cfg) {
        return Err(Error::NotReachable(q.radius, q.angle));
    }
    Ok(cfg.sec_alpha() * (p.radius - q.radius).abs())
}

/// Length of a spiral segment from its outer endpoint at radius R through an
/// angular extent dphi: sec(alpha) * R * (1 - exp(-dphi / tan(alpha))).
pub fn spiral_arc_length_by_angle(radius: f64, dphi: f64, cfg: &AngleConfig) -> f64 {
    debug_assert!(radius > 0.0 && dphi >= 0.0);
    cfg.sec_alpha() * radius * (1.0 - (-dphi * cfg.cot_alpha()).exp())
}

/// The two boundary spirals of the spiral region of `apex`, each valid for
/// t in [0, pi*cot(alpha)]; they meet again at angle apex.angle + pi.
#[derive(Debug, Clone)]
pub struct SpiralRegionBoundary {
    pub apex: PolarPoint,
    pub t_max: f64,
}

impl SpiralRegionBoundary {
    pub fn new(apex: PolarPoint, cfg: &AngleConfig) -> Result<Self> {
        if apex.is_root() {
            return Err(Error::SpiralAtRoot);
        }
        Ok(SpiralRegionBoundary { apex, t_max: PI * cfg.cot_alpha() })
    }

    pub fn pieces(&self) -> [SpiralArc; 2] {
        [
            SpiralArc::Spiral { anchor: self.apex, orientation: Orientation::Right, t_end: self.t_max },
            SpiralArc::Spiral { anchor: self.apex, orientation: Orientation::Left, t_end: self.t_max },
        ]
    }

    /// The inner meeting point of the two boundary branches.
    pub fn inner_point(&self, cfg: &AngleConfig) -> PolarPoint {
        spiral_point_at_unchecked(&self.apex, Orientation::Right, self.t_max, cfg)
    }
}

/// Directional spiral intersection: the first meeting point of the right
/// spiral of `u` with the left spiral of `v`, going counterclockwise from u
/// to v. Valid whenever neither point lies strictly inside the other's
/// region along that gap; both spiral parameters come out nonnegative.
pub fn ccw_spiral_intersection(u: &PolarPoint, v: &PolarPoint, cfg: &AngleConfig) -> PolarPoint {
    debug_assert!(!u.is_root() && !v.is_root());
    let delta = ccw_delta(u.angle, v.angle);
    // Angular offset of the meet point from u along S+_u.
    let theta = 0.5 * (delta + cfg.tan_alpha() * (u.radius / v.radius).ln());
    let radius = (u.radius * v.radius).sqrt() * (-0.5 * delta * cfg.cot_alpha()).exp();
    PolarPoint::new(radius, u.angle + theta)
}

/// The farthest-from-root point of the intersection of the spiral regions of
/// u and v: where the greedy sweep merges u and v. If one point is in the
/// other's region the inner point itself is returned. For collinear u, v, r
/// the two symmetric candidates tie; the one on the counterclockwise
/// boundary of u wins.
pub fn join_point(u: &PolarPoint, v: &PolarPoint, cfg: &AngleConfig) -> PolarPoint {
    if u.is_root() || v.is_root() {
        return PolarPoint::root();
    }
    if in_spiral_region(u, v, cfg) {
        return *v;
    }
    if in_spiral_region(v, u, cfg) {
        return *u;
    }
    let ccw = ccw_spiral_intersection(u, v, cfg);
    let cw = ccw_spiral_intersection(v, u, cfg);
    if ccw.radius >= cw.radius {
        ccw
    } else {
        cw
    }
}

fn push_nondegenerate(path: &mut Vec<SpiralArc>, arc: SpiralArc) {
    if !arc.is_degenerate() {
        path.push(arc);
    }
}

/// Spiral parameter ratio used to realize arcs that terminate at the root:
/// the winding spiral is cut when the radius has dropped by this factor and
/// closed with a radial stub of matching length.
pub const ROOT_ARC_RADIUS_RATIO: f64 = 1e-12;

/// Canonical geometry for an arc from p all the way to the root: a right
/// spiral winding down to ROOT_ARC_RADIUS_RATIO * p.radius, closed by a
/// radial stub. Exact length bookkeeping treats the whole arc as a monotone
/// spiral of radial drop p.radius.
pub fn canonical_root_arc(p: &PolarPoint, cfg: &AngleConfig) -> Vec<SpiralArc> {
    debug_assert!(!p.is_root());
    let t_end = -ROOT_ARC_RADIUS_RATIO.ln();
    let spiral = SpiralArc::Spiral { anchor: *p, orientation: Orientation::Right, t_end };
    let inner = spiral.end(cfg);
    vec![spiral, SpiralArc::Straight { from: inner, to: PolarPoint::root() }]
}

/// Canonical radially monotone spiral path from `outer` to `inner`
/// (pre: inner in the spiral region of outer): follow the boundary-side
/// spiral of the outer point, then switch once onto the opposite spiral
/// through the inner point. Shortest spiral paths are not unique; this is
/// the deterministic representative used everywhere.
pub fn canonical_monotone_path(
    outer: &PolarPoint,
    inner: &PolarPoint,
    cfg: &AngleConfig,
) -> Result<Vec<SpiralArc>> {
    if !in_spiral_region(outer, inner, cfg) {
        return Err(Error::NotReachable(inner.radius, inner.angle));
    }
    if inner.is_root() {
        return Ok(canonical_root_arc(outer, cfg));
    }
    if outer.approx_eq(inner, 0.0) {
        return Ok(Vec::new());
    }
    let delta = signed_delta(outer.angle, inner.angle);
    let side = if delta >= 0.0 { Orientation::Right } else { Orientation::Left };
    let ratio = (outer.radius / inner.radius).ln().max(0.0);
    // Meet point of S(side)_outer with the opposite-family spiral through
    // inner, overshooting the inner ray by (theta - |delta|).
    let theta = 0.5 * (delta.abs() + cfg.tan_alpha() * ratio);
    let t_first = theta * cfg.cot_alpha();
    let mid = spiral_point_at_unchecked(outer, side, t_first, cfg);
    let t_second = (mid.radius / inner.radius).ln().max(0.0);
    let mut path = Vec::with_capacity(2);
    push_nondegenerate(&mut path, SpiralArc::Spiral { anchor: *outer, orientation: side, t_end: t_first });
    push_nondegenerate(&mut path, SpiralArc::Spiral {
        anchor: mid,
        orientation: side.opposite(),
        t_end: t_second,
    });
    Ok(path)
}

fn angle_between(a: &Point2, b: &Point2) -> f64 {
    a.cross(b).atan2(a.dot(b)).abs()
}

/// Angle between the direction of travel `dir` at point `at` and the
/// direction towards the root.
pub fn gamma_at(at: &Point2, dir: &Point2) -> f64 {
    let to_root = Point2::new(-at.x, -at.y);
    angle_between(dir, &to_root)
}

/// Shortest angle-restricted path from p to q in R_p: a straight segment
/// from p tangent to the backward spiral through q, then along that spiral
/// into q. Either piece can be empty. The tangent point is located by
/// bisection on the backward branch; no closed form is attempted.
pub fn shortest_angle_restricted_path(
    p: &PolarPoint,
    q: &PolarPoint,
    cfg: &AngleConfig,
) -> Result<Vec<SpiralArc>> {
    if !in_spiral_region(p, q, cfg) {
        return Err(Error::NotReachable(q.radius, q.angle));
    }
    if q.is_root() {
        return Ok(vec![SpiralArc::Straight { from: *p, to: PolarPoint::root() }]);
    }
    if p.approx_eq(q, 0.0) {
        return Ok(Vec::new());
    }
    let pc = p.to_cartesian();
    let qc = q.to_cartesian();
    let seg = qc.sub(&pc);
    // Along a straight segment the angle to the root grows monotonically
    // towards the line's closest point to the root, so the restriction
    // binds at the inner endpoint q.
    if gamma_at(&qc, &seg) <= cfg.alpha() + 1e-12 {
        return Ok(vec![SpiralArc::Straight { from: *p, to: *q }]);
    }

    let delta = signed_delta(p.angle, q.angle);
    let side = if delta >= 0.0 { Orientation::Right } else { Orientation::Left };
    let sgn = side.sign();
    let tan_a = cfg.tan_alpha();

    // x(s) walks the backward branch of the final spiral through q;
    // h(s) is the tangency residual of the straight piece p -> x(s).
    let x_at = |s: f64| spiral_point_at_unchecked(q, side, -s, cfg);
    let h = |s: f64| -> f64 {
        let x = x_at(s);
        let (sin_phi, cos_phi) = x.angle.sin_cos();
        // Outward tangent of the spiral at x.
        let tx = cos_phi + sgn * tan_a * sin_phi;
        let ty = sin_phi - sgn * tan_a * cos_phi;
        let xc = x.to_cartesian();
        let dx = pc.x - xc.x;
        let dy = pc.y - xc.y;
        tx * dy - ty * dx
    };

    let s_max = (p.radius / q.radius).ln().max(0.0);
    let n = 256;
    let mut lo = 0.0;
    let mut hi = s_max;
    let mut prev = h(0.0);
    let mut found = prev.abs() <= 1e-15;
    if !found {
        for i in 1..=n {
            let s = s_max * i as f64 / n as f64;
            let val = h(s);
            if val == 0.0 || val.signum() != prev.signum() {
                lo = s_max * (i - 1) as f64 / n as f64;
                hi = s;
                found = true;
                break;
            }
            prev = val;
        }
    }
    if !found {
        // p lies numerically on the backward spiral; the straight piece is
        // empty and the entire path follows the spiral.
        let s_p = s_max;
        return Ok(vec![SpiralArc::Spiral { anchor: x_at(s_p), orientation: side, t_end: s_p }]);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let val = h(mid);
        if val == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if val.signum() == h(lo).signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let s_star = 0.5 * (lo + hi);
    let x = x_at(s_star);
    let mut path = Vec::with_capacity(2);
    push_nondegenerate(&mut path, SpiralArc::Straight { from: *p, to: x });
    push_nondegenerate(&mut path, SpiralArc::Spiral { anchor: x, orientation: side, t_end: s_star });
    Ok(path)
}

/// An inward-going path of at most two spiral segments joining p and q;
/// its length is at most 3 * |pq| * max(sec alpha, csc alpha). When one
/// point lies in the other's region the path is monotone; otherwise the two
/// segments descend to the join point and the distance to the root has its
/// only interior minimum there.
pub fn inward_two_spiral_path(
    p: &PolarPoint,
    q: &PolarPoint,
    cfg: &AngleConfig,
) -> Result<Vec<SpiralArc>> {
    if p.is_root() || q.is_root() {
        let outer = if p.is_root() { q } else { p };
        if outer.is_root() {
            return Ok(Vec::new());
        }
        return Ok(canonical_root_arc(outer, cfg));
    }
    if p.approx_eq(q, 0.0) {
        return Ok(Vec::new());
    }
    if in_spiral_region(p, q, cfg) {
        return canonical_monotone_path(p, q, cfg);
    }
    if in_spiral_region(q, p, cfg) {
        let mut path = canonical_monotone_path(q, p, cfg)?;
        path.reverse();
        return Ok(path);
    }
    let join = join_point(p, q, cfg);
    // Each endpoint descends along its own boundary spiral into the join.
    let mut path = Vec::with_capacity(2);
    let arc_to_join = |from: &PolarPoint| -> SpiralArc {
        let t_end = (from.radius / join.radius).ln().max(0.0);
        // The join lies on the right spiral of the endpoint it is ccw of.
        let ccw_gap = ccw_delta(from.angle, join.angle);
        let orientation = if ccw_gap <= PI { Orientation::Right } else { Orientation::Left };
        SpiralArc::Spiral { anchor: *from, orientation, t_end }
    };
    push_nondegenerate(&mut path, arc_to_join(p));
    push_nondegenerate(&mut path, arc_to_join(q));
    Ok(path)
}

/// Membership in the spiral rectangle SR(p, q): the region bounded by the
/// two unique two-spiral-segment paths from p to q. Computed through the
/// log-polar transformation, under which SR(p, q) is the preimage of an
/// axis-aligned rectangle; candidate angle lifts of x are enumerated.
pub fn spiral_rectangle_contains(
    p: &PolarPoint,
    q: &PolarPoint,
    x: &PolarPoint,
    cfg: &AngleConfig,
) -> Result<bool> {
    if !in_spiral_region(p, q, cfg) {
        return Err(Error::NotReachable(q.radius, q.angle));
    }
    if q.is_root() {
        // Both bounding paths wind to the root; SR degenerates to R_p.
        return Ok(in_spiral_region(p, x, cfg));
    }
    if x.is_root() {
        return Ok(false);
    }
    let tan_a = cfg.tan_alpha();
    let to_rect = |radius: f64, lifted_angle: f64| -> (f64, f64) {
        let l = radius.ln();
        (0.5 * (l - lifted_angle / tan_a), 0.5 * (l + lifted_angle / tan_a))
    };
    let phi_p = p.angle;
    let phi_q = p.angle + signed_delta(p.angle, q.angle);
    let (xp, yp) = to_rect(p.radius, phi_p);
    let (xq, yq) = to_rect(q.radius, phi_q);
    debug_assert!(xq <= xp + 1e-9 && yq <= yp + 1e-9);

    let eps = 1e-12 * (1.0 + xp.abs() + yp.abs());
    // Angle window compatible with the rectangle at x's radius.
    let l = x.radius.ln();
    let phi_lo = (l - 2.0 * xp) * tan_a;
    let phi_hi = (l - 2.0 * xq) * tan_a;
    let k_lo = ((phi_lo - x.angle) / (2.0 * PI)).floor() as i64 - 1;
    let k_hi = ((phi_hi - x.angle) / (2.0 * PI)).ceil() as i64 + 1;
    for k in k_lo..=k_hi {
        let lifted = x.angle + 2.0 * PI * k as f64;
        let (xx, xy) = to_rect(x.radius, lifted);
        if xx >= xq - eps && xx <= xp + eps && xy >= yq - eps && xy <= yp + eps {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Points subdividing a polygon edge for the sweeping circle: the at most
/// two points where the edge's line makes angle exactly alpha with the
/// direction to the root, plus the closest point to the root when it is
/// interior to the edge. Sorted along the edge from a to b.
pub fn spiral_points_on_edge(a: &Point2, b: &Point2, cfg: &AngleConfig) -> Vec<Point2> {
    let d = b.sub(a);
    let denom = d.dot(&d);
    if denom == 0.0 {
        return Vec::new();
    }
    let c = d.cross(a);
    let proj = d.dot(a);
    let mut taus: Vec<f64> = Vec::with_capacity(3);
    let tol = 1e-12;
    // |cross(d, u)| = tan(alpha) * |dot(d, u)| with cross constant along the
    // edge and dot linear, giving up to two parameter solutions.
    let rhs = c.abs() * cfg.cot_alpha();
    for target in [rhs, -rhs] {
        let tau = (target - proj) / denom;
        if tau > tol && tau < 1.0 - tol {
            taus.push(tau);
        }
        if rhs == 0.0 {
            break;
        }
    }
    // Closest point to the root (dot(d, u) = 0), when interior.
    let tau_closest = -proj / denom;
    if tau_closest > tol && tau_closest < 1.0 - tol {
        let pt = Point2::new(a.x + tau_closest * d.x, a.y + tau_closest * d.y);
        if pt.norm() > tol {
            taus.push(tau_closest);
        }
    }
    taus.sort_by(f64::total_cmp);
    taus.dedup_by(|u, v| (*u - *v).abs() < 1e-12);
    taus.iter().map(|&t| Point2::new(a.x + t * d.x, a.y + t * d.y)).collect()
}

/// Total length of a piecewise path using closed forms.
pub fn path_length(path: &[SpiralArc], cfg: &AngleConfig) -> f64 {
    path.iter().map(|arc| arc.length(cfg)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, FRAC_PI_4, FRAC_PI_6, PI};

    fn cfg(alpha: f64) -> AngleConfig {
        AngleConfig::new(alpha).unwrap()
    }

    #[test]
    fn spiral_point_identity_and_boundary() {
        let c = cfg(FRAC_PI_6);
        let p = PolarPoint::new(1.0, 0.0);
        let at0 = spiral_point_at(&p, Orientation::Right, 0.0, &c).unwrap();
        assert!(at0.approx_eq(&p, 1e-15));

        // Region boundary endpoint: t = pi*cot(alpha) lands at angle pi.
        let t = PI * c.cot_alpha();
        let end = spiral_point_at(&p, Orientation::Right, t, &c).unwrap();
        assert!((end.radius - (-t).exp()).abs() < 1e-15);
        assert!((end.angle - PI).abs() < 1e-9);

        // Left and right boundaries meet at the same inner point.
        let endl = spiral_point_at(&p, Orientation::Left, t, &c).unwrap();
        assert!(end.approx_eq(&endl, 1e-12));
    }

    #[test]
    fn spiral_point_quarter_alpha() {
        let c = cfg(FRAC_PI_4);
        let p = PolarPoint::new(1.0, 0.0);
        let at1 = spiral_point_at(&p, Orientation::Right, 1.0, &c).unwrap();
        assert!((at1.radius - (-1.0f64).exp()).abs() < 1e-15);
        assert!((at1.angle - 1.0).abs() < 1e-15);
    }

    #[test]
    fn spiral_at_root_rejected() {
        let c = cfg(FRAC_PI_6);
        assert!(spiral_point_at(&PolarPoint::root(), Orientation::Right, 1.0, &c).is_err());
    }

    #[test]
    fn region_membership() {
        let c = cfg(FRAC_PI_6);
        let p = PolarPoint::new(1.0, 0.0);
        assert!(in_spiral_region(&p, &PolarPoint::root(), &c));
        assert!(in_spiral_region(&p, &p, &c));
        // Opposite ray at equal radius is far outside the region.
        assert!(!in_spiral_region(&p, &PolarPoint::new(1.0, PI), &c));
        let boundary = region_boundary_radius(&p, PI, &c);
        assert!((boundary - (-PI * c.cot_alpha()).exp()).abs() < 1e-15);
        assert!(in_spiral_region(&p, &PolarPoint::new(boundary * 0.999, PI), &c));
    }

    #[test]
    fn distances_match_closed_forms() {
        let c6 = cfg(FRAC_PI_6);
        let p = PolarPoint::new(2.0, 0.0);
        let q = PolarPoint::new(1.0, 0.1);
        assert!(in_spiral_region(&p, &q, &c6));
        let d = spiral_distance(&p, &q, &c6).unwrap();
        assert!((d - 1.154_700_5).abs() < 1e-6);
        assert_eq!(spiral_distance(&p, &p, &c6).unwrap(), 0.0);

        let c4 = cfg(FRAC_PI_4);
        let a = PolarPoint::new(E, 0.0);
        let b = PolarPoint::new(1.0, 0.3);
        let d2 = spiral_distance(&a, &b, &c4).unwrap();
        assert!((d2 - 2.0f64.sqrt() * (E - 1.0)).abs() < 1e-12);

        let far = PolarPoint::new(2.0, PI);
        assert!(spiral_distance(&p, &far, &c6).is_err());
    }

    #[test]
    fn arc_length_by_angle() {
        let c = cfg(FRAC_PI_4);
        assert_eq!(spiral_arc_length_by_angle(1.0, 0.0, &c), 0.0);
        let full = spiral_arc_length_by_angle(1.0, 1e9, &c);
        assert!((full - c.sec_alpha()).abs() < 1e-12);
        let one = spiral_arc_length_by_angle(1.0, 1.0, &c);
        assert!((one - 2.0f64.sqrt() * (1.0 - (-1.0f64).exp())).abs() < 1e-12);
    }

    #[test]
    fn join_point_cases() {
        let c = cfg(FRAC_PI_6);
        let u = PolarPoint::new(1.0, 0.5);
        assert!(join_point(&u, &u, &c).approx_eq(&u, 0.0));

        // v inside R_u: intersection of regions is R_v, farthest point v.
        let v = PolarPoint::new(0.5, 0.5);
        assert!(join_point(&u, &v, &c).approx_eq(&v, 0.0));

        // Symmetric pair about angle 0.
        let delta = 0.05;
        let a = PolarPoint::new(1.0, -delta + 2.0 * PI);
        let b = PolarPoint::new(1.0, delta);
        let j = join_point(&a, &b, &c);
        assert!((j.radius - (-delta * c.cot_alpha()).exp()).abs() < 1e-12);
        assert!(j.angle < 1e-12 || (j.angle - 2.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn join_point_on_both_boundaries() {
        let c = cfg(FRAC_PI_6);
        let u = PolarPoint::new(1.3, 0.2);
        let v = PolarPoint::new(0.9, 1.1);
        let j = join_point(&u, &v, &c);
        let du = angular_distance(u.angle, j.angle);
        let dv = angular_distance(v.angle, j.angle);
        assert!((j.radius - region_boundary_radius(&u, du, &c)).abs() < 1e-12);
        assert!((j.radius - region_boundary_radius(&v, dv, &c)).abs() < 1e-12);
    }

    #[test]
    fn canonical_path_is_monotone_and_has_exact_length() {
        let c = cfg(FRAC_PI_6);
        let outer = PolarPoint::new(2.0, 0.3);
        let inner = PolarPoint::new(0.4, 0.5);
        assert!(in_spiral_region(&outer, &inner, &c));
        let path = canonical_monotone_path(&outer, &inner, &c).unwrap();
        assert!(path.len() <= 2);
        let total = path_length(&path, &c);
        assert!((total - c.sec_alpha() * (outer.radius - inner.radius)).abs() < 1e-12);
        let end = path.last().unwrap().end(&c);
        assert!(end.approx_eq(&inner, 1e-9));
    }

    #[test]
    fn shortest_path_radial_and_boundary_cases() {
        let c = cfg(FRAC_PI_6);
        let p = PolarPoint::new(1.5, 1.0);

        // q = root: straight radial segment of length p.radius.
        let to_root = shortest_angle_restricted_path(&p, &PolarPoint::root(), &c).unwrap();
        assert_eq!(to_root.len(), 1);
        assert!((path_length(&to_root, &c) - p.radius).abs() < 1e-12);

        // q on the boundary spiral: pure spiral piece.
        let q = spiral_point_at(&p, Orientation::Right, 0.8, &c).unwrap();
        let path = shortest_angle_restricted_path(&p, &q, &c).unwrap();
        let spiral_len: f64 = path
            .iter()
            .filter(|a| matches!(a, SpiralArc::Spiral { .. }))
            .map(|a| a.length(&c))
            .sum();
        let straight_len: f64 = path
            .iter()
            .filter(|a| matches!(a, SpiralArc::Straight { .. }))
            .map(|a| a.length(&c))
            .sum();
        assert!(straight_len < 1e-6 * spiral_len.max(1e-12));
        assert!(path.last().unwrap().end(&c).approx_eq(&q, 1e-6));
    }

    #[test]
    fn shortest_path_respects_angle_restriction() {
        let c = cfg(FRAC_PI_6);
        let p = PolarPoint::new(2.0, 0.0);
        let q = PolarPoint::new(0.3, 0.9);
        assert!(in_spiral_region(&p, &q, &c));
        let path = shortest_angle_restricted_path(&p, &q, &c).unwrap();
        for arc in &path {
            for i in 0..=64 {
                let f = i as f64 / 64.0;
                let at = arc.point_at_fraction(f, &c);
                if at.radius < 1e-12 {
                    continue;
                }
                let dir = arc.tangent_at_fraction(f, &c);
                assert!(gamma_at(&at.to_cartesian(), &dir) <= c.alpha() + 1e-7);
            }
        }
        assert!(path.last().unwrap().end(&c).approx_eq(&q, 1e-9));
    }

    #[test]
    fn inward_path_cases() {
        let c = cfg(FRAC_PI_6);
        let p = PolarPoint::new(1.0, 0.0);
        assert!(inward_two_spiral_path(&p, &p, &c).unwrap().is_empty());

        let q = PolarPoint::new(0.8, 0.05);
        assert!(in_spiral_region(&p, &q, &c));
        let path = inward_two_spiral_path(&p, &q, &c).unwrap();
        let len = path_length(&path, &c);
        assert!((len - c.sec_alpha() * (p.radius - q.radius)).abs() < 1e-12);

        // Non-related pair descends through the join point.
        let w = PolarPoint::new(1.0, 1.2);
        let path2 = inward_two_spiral_path(&p, &w, &c).unwrap();
        let j = join_point(&p, &w, &c);
        let expect = c.sec_alpha() * (p.radius + w.radius - 2.0 * j.radius);
        assert!((path_length(&path2, &c) - expect).abs() < 1e-12);
    }

    #[test]
    fn spiral_rectangle_corners_and_outside() {
        let c = cfg(FRAC_PI_6);
        let p = PolarPoint::new(2.0, 0.4);
        let q = PolarPoint::new(0.5, 0.7);
        assert!(in_spiral_region(&p, &q, &c));
        assert!(spiral_rectangle_contains(&p, &q, &p, &c).unwrap());
        assert!(spiral_rectangle_contains(&p, &q, &q, &c).unwrap());
        // A point outside R_p cannot be inside SR(p, q).
        let far = PolarPoint::new(2.0, 0.4 + PI);
        assert!(!spiral_rectangle_contains(&p, &q, &far, &c).unwrap());
        // The midpoint of the canonical path is on the boundary, hence inside.
        let path = canonical_monotone_path(&p, &q, &c).unwrap();
        let mid = path[0].end(&c);
        assert!(spiral_rectangle_contains(&p, &q, &mid, &c).unwrap());
    }

    #[test]
    fn spiral_points_on_horizontal_edge() {
        let c = cfg(FRAC_PI_4);
        let pts = spiral_points_on_edge(&Point2::new(-2.0, 1.0), &Point2::new(2.0, 1.0), &c);
        assert_eq!(pts.len(), 3);
        assert!((pts[0].x + 1.0).abs() < 1e-12);
        assert!((pts[1].x).abs() < 1e-12);
        assert!((pts[2].x - 1.0).abs() < 1e-12);
    }

    #[test]
    fn spiral_points_on_radial_edge() {
        let c = cfg(FRAC_PI_4);
        // Edge along a ray from the origin: angle is 0 everywhere, the
        // closest point is the inner endpoint and is omitted.
        let pts = spiral_points_on_edge(&Point2::new(1.0, 1.0), &Point2::new(3.0, 3.0), &c);
        assert!(pts.is_empty());
    }

    #[test]
    fn spiral_points_on_tangent_edge() {
        let c = cfg(FRAC_PI_6);
        // Edge tangent to a circle about r: closest point at the midpoint,
        // two symmetric spiral points.
        let pts = spiral_points_on_edge(&Point2::new(-3.0, 2.0), &Point2::new(3.0, 2.0), &c);
        assert_eq!(pts.len(), 3);
        assert!(pts[1].x.abs() < 1e-12);
        assert!((pts[0].x + pts[2].x).abs() < 1e-12);
        // At a spiral point the line-to-root angle equals alpha:
        // tan(alpha) = y / |x| for the horizontal edge.
        let expect = 2.0 * c.cot_alpha();
        assert!((pts[2].x - expect).abs() < 1e-9);
    }
}
