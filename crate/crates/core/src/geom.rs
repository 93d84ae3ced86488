//! Planar primitives and predicates shared by every solver.
//!
//! All regions are closed: a point on a circle belongs to its disk, and a point
//! on a horizontal line belongs to the half-plane below it.

use crate::error::{Error, Result};
use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist2(&self, other: &Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn dist(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Lexicographic order on (x, y).
    pub fn cmp_xy(&self, other: &Point) -> Ordering {
        self.x.total_cmp(&other.x).then(self.y.total_cmp(&other.y))
    }

    /// Lexicographic order on (y, x).
    pub fn cmp_yx(&self, other: &Point) -> Ordering {
        self.y.total_cmp(&other.y).then(self.x.total_cmp(&other.x))
    }
}

/// A closed disk. Most solvers only ever build radius-1 disks, hence the name.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitDisk {
    pub center: Point,
    pub radius: f64,
}

impl UnitDisk {
    pub const fn unit(x: f64, y: f64) -> Self {
        UnitDisk {
            center: Point::new(x, y),
            radius: 1.0,
        }
    }

    pub fn with_radius(center: Point, radius: f64) -> Self {
        debug_assert!(radius > 0.0, "radius must be positive");
        UnitDisk { center, radius }
    }

    pub fn contains(&self, p: &Point, tol: Tolerance) -> bool {
        point_in_disk(p, self, tol)
    }

    /// Whether the disk meets the closed rectangle.
    pub fn intersects_rect(&self, rect: &Rect, tol: Tolerance) -> bool {
        rect.dist_to(&self.center) <= self.radius + tol.eps
    }

    /// Whether the closed rectangle lies entirely inside the disk.
    pub fn contains_rect(&self, rect: &Rect, tol: Tolerance) -> bool {
        rect.corners().iter().all(|c| self.contains(c, tol))
    }

    pub fn same_as(&self, other: &UnitDisk, tol: Tolerance) -> bool {
        self.center.dist(&other.center) <= tol.eps && (self.radius - other.radius).abs() <= tol.eps
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub xmin: f64,
    pub ymin: f64,
    pub xmax: f64,
    pub ymax: f64,
}

impl Rect {
    pub fn new(xmin: f64, ymin: f64, xmax: f64, ymax: f64) -> Result<Self> {
        let all_finite = [xmin, ymin, xmax, ymax].iter().all(|v| v.is_finite());
        if !all_finite || xmin >= xmax || ymin >= ymax {
            return Err(Error::InvalidInstance(format!(
                "rect [{xmin}, {xmax}] x [{ymin}, {ymax}] must satisfy xmin < xmax and ymin < ymax"
            )));
        }
        Ok(Rect {
            xmin,
            ymin,
            xmax,
            ymax,
        })
    }

    pub fn width(&self) -> f64 {
        self.xmax - self.xmin
    }

    pub fn height(&self) -> f64 {
        self.ymax - self.ymin
    }

    pub fn contains(&self, p: &Point, tol: Tolerance) -> bool {
        p.x >= self.xmin - tol.eps
            && p.x <= self.xmax + tol.eps
            && p.y >= self.ymin - tol.eps
            && p.y <= self.ymax + tol.eps
    }

    /// Corners in counter-clockwise order starting at (xmin, ymin).
    pub fn corners(&self) -> [Point; 4] {
        [
            Point::new(self.xmin, self.ymin),
            Point::new(self.xmax, self.ymin),
            Point::new(self.xmax, self.ymax),
            Point::new(self.xmin, self.ymax),
        ]
    }

    /// Euclidean distance from `p` to the closed rectangle (0 inside).
    pub fn dist_to(&self, p: &Point) -> f64 {
        let dx = (self.xmin - p.x).max(0.0).max(p.x - self.xmax);
        let dy = (self.ymin - p.y).max(0.0).max(p.y - self.ymax);
        dx.hypot(dy)
    }

    pub fn intersection(&self, other: &Rect) -> Option<Rect> {
        Rect::new(
            self.xmin.max(other.xmin),
            self.ymin.max(other.ymin),
            self.xmax.min(other.xmax),
            self.ymax.min(other.ymax),
        )
        .ok()
    }
}

/// Horizontal line `y = const`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HLine {
    pub y: f64,
}

impl HLine {
    pub const fn new(y: f64) -> Self {
        HLine { y }
    }

    /// Closed lower half-plane membership.
    pub fn is_below(&self, p: &Point, tol: Tolerance) -> bool {
        p.y <= self.y + tol.eps
    }

    /// Open upper half-plane membership, with the tolerance band counted as
    /// belonging to the line.
    pub fn is_strictly_above(&self, p: &Point, tol: Tolerance) -> bool {
        p.y > self.y + tol.eps
    }
}

/// Absolute slack for every geometric comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub eps: f64,
}

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(eps: f64) -> Result<Self> {
        if eps > 0.0 && eps <= 1e-6 {
            Ok(Tolerance { eps })
        } else {
            Err(Error::InvalidParameter(format!(
                "tolerance {eps} outside (0, 1e-6]"
            )))
        }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps: Self::DEFAULT_EPS,
        }
    }
}

pub fn point_in_disk(p: &Point, d: &UnitDisk, tol: Tolerance) -> bool {
    p.dist(&d.center) <= d.radius + tol.eps
}

/// Intersection points of two circles, ascending in y (ties by x). Tangency
/// within tolerance yields a single point.
pub fn circle_circle_intersections(
    d1: &UnitDisk,
    d2: &UnitDisk,
    tol: Tolerance,
) -> Result<Vec<Point>> {
    let (c1, c2) = (d1.center, d2.center);
    let (r1, r2) = (d1.radius, d2.radius);
    let d = c1.dist(&c2);
    if d <= tol.eps {
        if (r1 - r2).abs() <= tol.eps {
            return Err(Error::CoincidentCircles);
        }
        return Ok(Vec::new());
    }
    if d > r1 + r2 + tol.eps || d < (r1 - r2).abs() - tol.eps {
        return Ok(Vec::new());
    }
    let ux = (c2.x - c1.x) / d;
    let uy = (c2.y - c1.y) / d;
    let a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    let tangent = (d - (r1 + r2)).abs() <= tol.eps || (d - (r1 - r2).abs()).abs() <= tol.eps;
    let h2 = r1 * r1 - a * a;
    let base = Point::new(c1.x + a * ux, c1.y + a * uy);
    if tangent || h2 <= 0.0 {
        return Ok(vec![base]);
    }
    let h = h2.sqrt();
    let mut pts = vec![
        Point::new(base.x - h * uy, base.y + h * ux),
        Point::new(base.x + h * uy, base.y - h * ux),
    ];
    pts.sort_by(Point::cmp_yx);
    Ok(pts)
}

/// Intersection points of a circle with a horizontal line, left point first.
pub fn circle_hline_intersections(d: &UnitDisk, line: &HLine, tol: Tolerance) -> Vec<Point> {
    let dy = line.y - d.center.y;
    if dy.abs() > d.radius + tol.eps {
        return Vec::new();
    }
    if (dy.abs() - d.radius).abs() <= tol.eps {
        return vec![Point::new(d.center.x, line.y)];
    }
    let half = (d.radius * d.radius - dy * dy).max(0.0).sqrt();
    vec![
        Point::new(d.center.x - half, line.y),
        Point::new(d.center.x + half, line.y),
    ]
}

/// Intersection points of a circle with a vertical line, lower point first.
pub fn circle_vline_intersections(d: &UnitDisk, x: f64, tol: Tolerance) -> Vec<Point> {
    let dx = x - d.center.x;
    if dx.abs() > d.radius + tol.eps {
        return Vec::new();
    }
    if (dx.abs() - d.radius).abs() <= tol.eps {
        return vec![Point::new(x, d.center.y)];
    }
    let half = (d.radius * d.radius - dx * dx).max(0.0).sqrt();
    vec![Point::new(x, d.center.y - half), Point::new(x, d.center.y + half)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TOL: Tolerance = Tolerance {
        eps: Tolerance::DEFAULT_EPS,
    };

    fn close(a: Point, b: Point) -> bool {
        a.dist(&b) < 1e-12
    }

    #[test]
    fn membership_is_closed() {
        let d = UnitDisk::unit(0.0, 0.0);
        assert!(point_in_disk(&Point::new(0.0, 0.0), &d, TOL));
        assert!(point_in_disk(&Point::new(1.0, 0.0), &d, TOL));
        assert!(!point_in_disk(&Point::new(2.1, 0.0), &d, TOL));
    }

    #[test]
    fn symmetric_lens() {
        let pts = circle_circle_intersections(
            &UnitDisk::unit(0.0, 0.0),
            &UnitDisk::unit(1.0, 0.0),
            TOL,
        )
        .unwrap();
        let h = 3f64.sqrt() / 2.0;
        assert_eq!(pts.len(), 2);
        assert!(close(pts[0], Point::new(0.5, -h)));
        assert!(close(pts[1], Point::new(0.5, h)));
    }

    #[test]
    fn tangent_and_disjoint_circles() {
        let a = UnitDisk::unit(0.0, 0.0);
        let t = circle_circle_intersections(&a, &UnitDisk::unit(2.0, 0.0), TOL).unwrap();
        assert_eq!(t.len(), 1);
        assert!(close(t[0], Point::new(1.0, 0.0)));
        assert!(circle_circle_intersections(&a, &UnitDisk::unit(3.0, 0.0), TOL)
            .unwrap()
            .is_empty());
        assert_eq!(
            circle_circle_intersections(&a, &a, TOL),
            Err(Error::CoincidentCircles)
        );
    }

    #[test]
    fn circle_line_chords() {
        let line = HLine::new(0.0);
        let pts = circle_hline_intersections(&UnitDisk::unit(0.0, 0.5), &line, TOL);
        let w = 0.75f64.sqrt();
        assert_eq!(pts.len(), 2);
        assert!(close(pts[0], Point::new(-w, 0.0)));
        assert!(close(pts[1], Point::new(w, 0.0)));
        let t = circle_hline_intersections(&UnitDisk::unit(0.0, 1.0), &line, TOL);
        assert_eq!(t, vec![Point::new(0.0, 0.0)]);
        assert!(circle_hline_intersections(&UnitDisk::unit(0.0, 2.0), &line, TOL).is_empty());
    }

    #[test]
    fn rect_distance() {
        let r = Rect::new(0.0, 0.0, 2.0, 1.0).unwrap();
        assert_eq!(r.dist_to(&Point::new(1.0, 0.5)), 0.0);
        assert!((r.dist_to(&Point::new(5.0, 5.0)) - 5.0).abs() < 1e-12);
        assert!(Rect::new(1.0, 0.0, 1.0, 2.0).is_err());
    }

    fn coord() -> impl Strategy<Value = f64> {
        -5.0..5.0f64
    }

    proptest! {
        #[test]
        fn intersections_lie_on_both_circles(
            x1 in coord(), y1 in coord(), r1 in 0.2..2.0f64,
            x2 in coord(), y2 in coord(), r2 in 0.2..2.0f64,
        ) {
            let d1 = UnitDisk::with_radius(Point::new(x1, y1), r1);
            let d2 = UnitDisk::with_radius(Point::new(x2, y2), r2);
            // Near-tangent configurations collapse to one point; the residual
            // then scales with sqrt(eps) rather than eps.
            let gap = (d1.center.dist(&d2.center) - (r1 + r2)).abs()
                .min((d1.center.dist(&d2.center) - (r1 - r2).abs()).abs());
            prop_assume!(gap > 1e-6);
            if let Ok(pts) = circle_circle_intersections(&d1, &d2, TOL) {
                for p in pts {
                    prop_assert!((p.dist(&d1.center) - r1).abs() <= 2.0 * TOL.eps);
                    prop_assert!((p.dist(&d2.center) - r2).abs() <= 2.0 * TOL.eps);
                }
            }
        }

        #[test]
        fn membership_monotone_in_radius(
            px in coord(), py in coord(), cx in coord(), cy in coord(),
            r in 0.1..3.0f64, grow in 0.0..3.0f64,
        ) {
            let p = Point::new(px, py);
            let small = UnitDisk::with_radius(Point::new(cx, cy), r);
            let large = UnitDisk::with_radius(Point::new(cx, cy), r + grow);
            if point_in_disk(&p, &small, TOL) {
                prop_assert!(point_in_disk(&p, &large, TOL));
            }
        }
    }
}
