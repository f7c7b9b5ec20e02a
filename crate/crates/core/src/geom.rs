//! Points, point sets and the exact predicates every other module is built on.
//!
//! Two coordinate kinds exist. Exact points carry signed integers bounded by
//! [`MAX_EXACT_COORD`] in magnitude and are decided with integer arithmetic, so
//! results are bit-exact. Real points carry `f64` coordinates and a tolerance
//! `eps`; any test whose normalized value falls inside the tolerance band is
//! reported as [`DiskSide::Boundary`] and treated as a conflict.
//!
//! Disks are closed: a point on the boundary circle of `d_pq` is contained in it.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::BigInt;
use thiserror::Error;

/// Largest magnitude accepted for an exact coordinate (2^30).
pub const MAX_EXACT_COORD: i64 = 1 << 30;

/// Tolerance used for real-coordinate points when none is given.
pub const DEFAULT_EPSILON: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("cannot mix exact and real coordinates")]
    KindMismatch,
    #[error("exact coordinate {0} exceeds the 2^30 magnitude bound")]
    CoordinateOutOfRange(i64),
    #[error("real coordinate is not finite")]
    NonFinite,
    #[error("tolerance must be finite and nonnegative, got {0}")]
    BadEpsilon(f64),
    #[error("point set is empty")]
    Empty,
    #[error("duplicate point at index {0}")]
    Duplicate(usize),
    #[error("predicate needs distinct points")]
    Coincident,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoordKind {
    Exact,
    Real,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Coords {
    Exact { x: i64, y: i64 },
    Real { x: f64, y: f64, eps: f64 },
}

/// A point in the plane, either exact-integer or tolerance-tagged real.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    coords: Coords,
}

impl Point {
    pub fn exact(x: i64, y: i64) -> Result<Self, GeomError> {
        for v in [x, y] {
            if v.unsigned_abs() > MAX_EXACT_COORD as u64 {
                return Err(GeomError::CoordinateOutOfRange(v));
            }
        }
        Ok(Point {
            coords: Coords::Exact { x, y },
        })
    }

    pub fn real(x: f64, y: f64, eps: f64) -> Result<Self, GeomError> {
        if !x.is_finite() || !y.is_finite() {
            return Err(GeomError::NonFinite);
        }
        if !(eps.is_finite() && eps >= 0.0) {
            return Err(GeomError::BadEpsilon(eps));
        }
        // -0.0 and 0.0 must compare and hash alike.
        Ok(Point {
            coords: Coords::Real {
                x: x + 0.0,
                y: y + 0.0,
                eps,
            },
        })
    }

    pub fn kind(&self) -> CoordKind {
        match self.coords {
            Coords::Exact { .. } => CoordKind::Exact,
            Coords::Real { .. } => CoordKind::Real,
        }
    }

    /// Integer coordinates of an exact point.
    pub fn as_exact(&self) -> Option<(i64, i64)> {
        match self.coords {
            Coords::Exact { x, y } => Some((x, y)),
            Coords::Real { .. } => None,
        }
    }

    /// Coordinates as floats. Lossless for exact points.
    pub fn to_f64(&self) -> (f64, f64) {
        match self.coords {
            Coords::Exact { x, y } => (x as f64, y as f64),
            Coords::Real { x, y, .. } => (x, y),
        }
    }

    pub fn epsilon(&self) -> f64 {
        match self.coords {
            Coords::Exact { .. } => 0.0,
            Coords::Real { eps, .. } => eps,
        }
    }
}

/// Which side of a closed diametral disk a point falls on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiskSide {
    Interior,
    Boundary,
    Outside,
}

enum Pair {
    Exact([(i64, i64); 3]),
    Real([(f64, f64); 3], f64),
}

fn unify(p: &Point, q: &Point, r: &Point) -> Result<Pair, GeomError> {
    match (p.coords, q.coords, r.coords) {
        (
            Coords::Exact { x: px, y: py },
            Coords::Exact { x: qx, y: qy },
            Coords::Exact { x: rx, y: ry },
        ) => Ok(Pair::Exact([(px, py), (qx, qy), (rx, ry)])),
        (
            Coords::Real { x: px, y: py, eps: e1 },
            Coords::Real { x: qx, y: qy, eps: e2 },
            Coords::Real { x: rx, y: ry, eps: e3 },
        ) => Ok(Pair::Real(
            [(px, py), (qx, qy), (rx, ry)],
            e1.max(e2).max(e3),
        )),
        _ => Err(GeomError::KindMismatch),
    }
}

/// Position of `r` relative to the closed disk with diameter `pq`.
///
/// Decided by the sign of `(p - r) . (q - r)`, which is negative exactly when
/// the angle `prq` is obtuse.
pub fn disk_side(p: &Point, q: &Point, r: &Point) -> Result<DiskSide, GeomError> {
    match unify(p, q, r)? {
        Pair::Exact([p, q, r]) => {
            if p == q || r == p || r == q {
                return Err(GeomError::Coincident);
            }
            let dot = (p.0 - r.0) as i128 * (q.0 - r.0) as i128
                + (p.1 - r.1) as i128 * (q.1 - r.1) as i128;
            Ok(match dot.cmp(&0) {
                Ordering::Less => DiskSide::Interior,
                Ordering::Equal => DiskSide::Boundary,
                Ordering::Greater => DiskSide::Outside,
            })
        }
        Pair::Real([p, q, r], eps) => {
            if p == q || r == p || r == q {
                return Err(GeomError::Coincident);
            }
            let (ax, ay) = (p.0 - r.0, p.1 - r.1);
            let (bx, by) = (q.0 - r.0, q.1 - r.1);
            let dot = ax * bx + ay * by;
            let band = eps * ax.hypot(ay) * bx.hypot(by);
            Ok(if dot < -band {
                DiskSide::Interior
            } else if dot <= band {
                DiskSide::Boundary
            } else {
                DiskSide::Outside
            })
        }
    }
}

/// True iff `r` lies in the closed disk with diameter `pq`.
pub fn in_closed_disk(p: &Point, q: &Point, r: &Point) -> Result<bool, GeomError> {
    Ok(disk_side(p, q, r)? != DiskSide::Outside)
}

/// The stronger of the two disk tests for edges `(p, q)` and `(p, r)`, or
/// `None` when they can coexist.
pub fn conflict_side(p: &Point, q: &Point, r: &Point) -> Result<Option<DiskSide>, GeomError> {
    let side = disk_side(p, q, r)?.min(disk_side(p, r, q)?);
    Ok((side != DiskSide::Outside).then_some(side))
}

/// True iff edges `(p, q)` and `(p, r)` cannot both be in a locally Gabriel
/// graph, i.e. angle `pqr` or angle `prq` is at least a right angle.
pub fn edges_conflict(p: &Point, q: &Point, r: &Point) -> Result<bool, GeomError> {
    Ok(conflict_side(p, q, r)?.is_some())
}

/// Cosine of the angle at `r` in triangle `p r q`, computed in floating point.
///
/// Positive values mean `r` is outside `d_pq`; the magnitude is how far the
/// configuration is from the boundary case.
pub fn disk_margin(p: &Point, q: &Point, r: &Point) -> f64 {
    let (p, q, r) = (p.to_f64(), q.to_f64(), r.to_f64());
    let (ax, ay) = (p.0 - r.0, p.1 - r.1);
    let (bx, by) = (q.0 - r.0, q.1 - r.1);
    (ax * bx + ay * by) / (ax.hypot(ay) * bx.hypot(by))
}

/// Orientation of the triple `(a, b, c)`: `Greater` for a counter-clockwise
/// turn, `Less` for clockwise, `Equal` for collinear (within tolerance for
/// real points).
pub fn orient(a: &Point, b: &Point, c: &Point) -> Result<Ordering, GeomError> {
    match unify(a, b, c)? {
        Pair::Exact([a, b, c]) => {
            let cross = (b.0 - a.0) as i128 * (c.1 - a.1) as i128
                - (b.1 - a.1) as i128 * (c.0 - a.0) as i128;
            Ok(cross.cmp(&0))
        }
        Pair::Real([a, b, c], eps) => {
            let (ux, uy) = (b.0 - a.0, b.1 - a.1);
            let (vx, vy) = (c.0 - a.0, c.1 - a.1);
            let cross = ux * vy - uy * vx;
            let band = eps * ux.hypot(uy) * vx.hypot(vy);
            Ok(if cross > band {
                Ordering::Greater
            } else if cross < -band {
                Ordering::Less
            } else {
                Ordering::Equal
            })
        }
    }
}

/// An ordered set of distinct points of one coordinate kind.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    points: Vec<Point>,
    kind: CoordKind,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self, GeomError> {
        let kind = points.first().ok_or(GeomError::Empty)?.kind();
        if points.iter().any(|p| p.kind() != kind) {
            return Err(GeomError::KindMismatch);
        }
        let mut seen = HashSet::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            let key = match p.coords {
                Coords::Exact { x, y } => (x as u64, y as u64),
                Coords::Real { x, y, .. } => (x.to_bits(), y.to_bits()),
            };
            if !seen.insert(key) {
                return Err(GeomError::Duplicate(i));
            }
        }
        Ok(PointSet { points, kind })
    }

    pub fn from_exact(coords: &[(i64, i64)]) -> Result<Self, GeomError> {
        let points = coords
            .iter()
            .map(|&(x, y)| Point::exact(x, y))
            .collect::<Result<Vec<_>, _>>()?;
        PointSet::new(points)
    }

    pub fn from_real(coords: &[(f64, f64)], eps: f64) -> Result<Self, GeomError> {
        let points = coords
            .iter()
            .map(|&(x, y)| Point::real(x, y, eps))
            .collect::<Result<Vec<_>, _>>()?;
        PointSet::new(points)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn kind(&self) -> CoordKind {
        self.kind
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn get(&self, i: usize) -> Option<&Point> {
        self.points.get(i)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    /// Subset in the given index order.
    pub fn select(&self, indices: &[usize]) -> Result<Self, GeomError> {
        PointSet::new(indices.iter().map(|&i| self.points[i]).collect())
    }

    fn epsilon(&self) -> f64 {
        self.points.iter().map(Point::epsilon).fold(0.0, f64::max)
    }

    /// Largest absolute coordinate, at least 1; the scale real-mode
    /// coordinate comparisons are measured against.
    fn scale(&self) -> f64 {
        self.points
            .iter()
            .map(|p| {
                let (x, y) = p.to_f64();
                x.abs().max(y.abs())
            })
            .fold(1.0, f64::max)
    }
}

impl std::ops::Index<usize> for PointSet {
    type Output = Point;

    fn index(&self, i: usize) -> &Point {
        &self.points[i]
    }
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

/// Convex subclasses a point set can belong to, from most to least specific.
///
/// Monotonic types are named after the part of a convex polygon's boundary
/// they can occupy: an upper-right set runs from the topmost point clockwise
/// to the rightmost one (abscissas increase while ordinates decrease and the
/// chain bulges up and to the right).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConvexKind {
    UpperRightMonotonic,
    UpperLeftMonotonic,
    LowerRightMonotonic,
    LowerLeftMonotonic,
    RightHalfConvex,
    LeftHalfConvex,
    OnCommonCircle,
    CentrallySymmetricConvex,
    GeneralConvex,
    NonConvex,
}

impl ConvexKind {
    pub fn is_monotonic(self) -> bool {
        matches!(
            self,
            ConvexKind::UpperRightMonotonic
                | ConvexKind::UpperLeftMonotonic
                | ConvexKind::LowerRightMonotonic
                | ConvexKind::LowerLeftMonotonic
        )
    }

    pub fn is_half_convex(self) -> bool {
        self.is_monotonic() || matches!(self, ConvexKind::RightHalfConvex | ConvexKind::LeftHalfConvex)
    }

    pub fn is_convex(self) -> bool {
        self != ConvexKind::NonConvex
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConvexClass {
    pub kind: ConvexKind,
    /// All defining coordinate comparisons and turns hold strictly.
    pub strict: bool,
}

/// Most specific convex class of `ps`.
///
/// Precedence: monotonic, half convex, centrally symmetric, common circle,
/// general convex, non-convex.
pub fn classify(ps: &PointSet) -> ConvexClass {
    if let Some(class) = monotonic_class(ps) {
        return class;
    }
    let Some(strict_hull) = convex_position(ps) else {
        return ConvexClass {
            kind: ConvexKind::NonConvex,
            strict: false,
        };
    };
    // Half convexity is only claimed for sets whose points are all hull
    // vertices; collinear runs on the hull fall through to the broader classes.
    if strict_hull {
        if let Some(class) = half_convex_class(ps, strict_hull) {
            return class;
        }
    }
    if is_centrally_symmetric(ps) {
        return ConvexClass {
            kind: ConvexKind::CentrallySymmetricConvex,
            strict: strict_hull,
        };
    }
    if is_on_common_circle(ps) {
        return ConvexClass {
            kind: ConvexKind::OnCommonCircle,
            strict: strict_hull,
        };
    }
    ConvexClass {
        kind: ConvexKind::GeneralConvex,
        strict: strict_hull,
    }
}

fn cmp_axis(a: &Point, b: &Point, axis: usize, eps: f64, scale: f64) -> Ordering {
    match (a.as_exact(), b.as_exact()) {
        (Some(a), Some(b)) => {
            if axis == 0 {
                a.0.cmp(&b.0)
            } else {
                a.1.cmp(&b.1)
            }
        }
        _ => {
            let (a, b) = (a.to_f64(), b.to_f64());
            let (u, v) = if axis == 0 { (a.0, b.0) } else { (a.1, b.1) };
            if (u - v).abs() <= eps * scale {
                Ordering::Equal
            } else {
                u.total_cmp(&v)
            }
        }
    }
}

fn sorted_indices(ps: &PointSet, y_descending: bool) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..ps.len()).collect();
    idx.sort_by(|&i, &j| {
        let (a, b) = (ps[i].to_f64(), ps[j].to_f64());
        let by_y = a.1.total_cmp(&b.1);
        a.0.total_cmp(&b.0)
            .then(if y_descending { by_y.reverse() } else { by_y })
    });
    idx
}

/// Index order along a monotonic chain, or `None` if `ps` is not one.
pub fn monotonic_order(ps: &PointSet) -> Option<(ConvexClass, Vec<usize>)> {
    let eps = ps.epsilon();
    let scale = ps.scale();
    for y_descending in [true, false] {
        let order = sorted_indices(ps, y_descending);
        let want_y = if y_descending {
            Ordering::Greater
        } else {
            Ordering::Less
        };
        let mut strict = true;
        let mut ok = true;
        for w in order.windows(2) {
            let (a, b) = (&ps[w[0]], &ps[w[1]]);
            let cx = cmp_axis(a, b, 0, eps, scale);
            let cy = cmp_axis(a, b, 1, eps, scale);
            if cx == Ordering::Greater || cy == want_y.reverse() {
                ok = false;
                break;
            }
            if cx == Ordering::Equal || cy == Ordering::Equal {
                strict = false;
            }
        }
        if !ok {
            continue;
        }
        let (mut left, mut right) = (false, false);
        for w in order.windows(3) {
            match orient(&ps[w[0]], &ps[w[1]], &ps[w[2]]).expect("uniform kind") {
                Ordering::Greater => left = true,
                Ordering::Less => right = true,
                Ordering::Equal => strict = false,
            }
        }
        if left && right {
            continue;
        }
        let kind = match (y_descending, left) {
            (true, false) => ConvexKind::UpperRightMonotonic,
            (true, true) => ConvexKind::LowerLeftMonotonic,
            (false, true) => ConvexKind::LowerRightMonotonic,
            (false, false) => ConvexKind::UpperLeftMonotonic,
        };
        return Some((ConvexClass { kind, strict }, order));
    }
    None
}

fn monotonic_class(ps: &PointSet) -> Option<ConvexClass> {
    monotonic_order(ps).map(|(class, _)| class)
}

/// Whether every point lies on the boundary of the convex hull. Returns
/// `Some(true)` when every point is a strict hull vertex.
pub fn convex_position(ps: &PointSet) -> Option<bool> {
    let n = ps.len();
    if n <= 2 {
        return Some(true);
    }
    let hull = strict_hull(ps);
    if hull.len() == n {
        return Some(true);
    }
    let on_hull: HashSet<usize> = hull.iter().copied().collect();
    for i in (0..n).filter(|i| !on_hull.contains(i)) {
        let on_boundary = (0..hull.len()).any(|k| {
            let a = &ps[hull[k]];
            let b = &ps[hull[(k + 1) % hull.len()]];
            orient(a, b, &ps[i]).expect("uniform kind") == Ordering::Equal
                && between(a, b, &ps[i])
        });
        if !on_boundary {
            return None;
        }
    }
    Some(false)
}

fn between(a: &Point, b: &Point, c: &Point) -> bool {
    let (a, b, c) = (a.to_f64(), b.to_f64(), c.to_f64());
    (c.0 - a.0) * (c.0 - b.0) <= 0.0 && (c.1 - a.1) * (c.1 - b.1) <= 0.0
}

/// Counter-clockwise strict hull (collinear points dropped) by monotone chain.
fn strict_hull(ps: &PointSet) -> Vec<usize> {
    let order = sorted_indices(ps, false);
    let mut lower: Vec<usize> = Vec::new();
    for &i in &order {
        while lower.len() >= 2
            && orient(&ps[lower[lower.len() - 2]], &ps[lower[lower.len() - 1]], &ps[i])
                .expect("uniform kind")
                != Ordering::Greater
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in order.iter().rev() {
        while upper.len() >= 2
            && orient(&ps[upper[upper.len() - 2]], &ps[upper[upper.len() - 1]], &ps[i])
                .expect("uniform kind")
                != Ordering::Greater
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn half_convex_class(ps: &PointSet, strict_hull: bool) -> Option<ConvexClass> {
    let eps = ps.epsilon();
    let scale = ps.scale();
    let n = ps.len();
    for right in [true, false] {
        // Extremes along y; ties resolved toward the side opposite the bulge.
        let pick = |want: Ordering| {
            (0..n).fold(0, |best, i| {
                let cy = cmp_axis(&ps[i], &ps[best], 1, eps, scale);
                let cx = cmp_axis(&ps[i], &ps[best], 0, eps, scale);
                let toward = if right { Ordering::Less } else { Ordering::Greater };
                if cy == want || (cy == Ordering::Equal && cx == toward) {
                    i
                } else {
                    best
                }
            })
        };
        let top = pick(Ordering::Greater);
        let bottom = pick(Ordering::Less);
        if top == bottom {
            continue;
        }
        let side = if right { Ordering::Less } else { Ordering::Greater };
        let all_on_side = (0..n)
            .filter(|&i| i != top && i != bottom)
            .all(|i| orient(&ps[bottom], &ps[top], &ps[i]).expect("uniform kind") == side);
        if !all_on_side {
            continue;
        }
        let unique = |axis: usize, target: usize| {
            (0..n).filter(|&i| i != target).all(|i| {
                cmp_axis(&ps[i], &ps[target], axis, eps, scale) != Ordering::Equal
            })
        };
        let extreme_x = (0..n).fold(0, |best, i| {
            let want = if right { Ordering::Greater } else { Ordering::Less };
            if cmp_axis(&ps[i], &ps[best], 0, eps, scale) == want {
                i
            } else {
                best
            }
        });
        let strict = strict_hull
            && unique(1, top)
            && unique(1, bottom)
            && unique(0, extreme_x);
        let kind = if right {
            ConvexKind::RightHalfConvex
        } else {
            ConvexKind::LeftHalfConvex
        };
        return Some(ConvexClass { kind, strict });
    }
    None
}

/// Point symmetry about the centroid (membership test only; convex position
/// is checked separately).
pub fn is_centrally_symmetric(ps: &PointSet) -> bool {
    let n = ps.len();
    match ps.kind() {
        CoordKind::Exact => {
            let pts: Vec<(i64, i64)> = ps.iter().map(|p| p.as_exact().expect("exact")).collect();
            let sx: i128 = pts.iter().map(|p| p.0 as i128).sum();
            let sy: i128 = pts.iter().map(|p| p.1 as i128).sum();
            let set: HashSet<(i128, i128)> =
                pts.iter().map(|p| (p.0 as i128, p.1 as i128)).collect();
            let n = n as i128;
            pts.iter().all(|&(x, y)| {
                let tx = 2 * sx - n * x as i128;
                let ty = 2 * sy - n * y as i128;
                tx % n == 0 && ty % n == 0 && set.contains(&(tx / n, ty / n))
            })
        }
        CoordKind::Real => {
            let pts: Vec<(f64, f64)> = ps.iter().map(Point::to_f64).collect();
            let cx = pts.iter().map(|p| p.0).sum::<f64>() / n as f64;
            let cy = pts.iter().map(|p| p.1).sum::<f64>() / n as f64;
            let tol = ps.epsilon() * ps.scale();
            pts.iter().all(|&(x, y)| {
                let (tx, ty) = (2.0 * cx - x, 2.0 * cy - y);
                pts.iter()
                    .any(|&(u, v)| (u - tx).abs() <= tol && (v - ty).abs() <= tol)
            })
        }
    }
}

/// All points on one circle. Sets of at most three non-collinear points are
/// trivially cocircular; collinear sets never are.
pub fn is_on_common_circle(ps: &PointSet) -> bool {
    let n = ps.len();
    if n <= 2 {
        return true;
    }
    let Some((a, b, c)) = (2..n).find_map(|k| {
        (orient(&ps[0], &ps[1], &ps[k]).expect("uniform kind") != Ordering::Equal)
            .then_some((0, 1, k))
    }) else {
        return false;
    };
    match ps.kind() {
        CoordKind::Exact => {
            let p = |i: usize| ps[i].as_exact().expect("exact");
            (0..n).all(|d| incircle_exact(p(a), p(b), p(c), p(d)) == 0)
        }
        CoordKind::Real => {
            let (ax, ay) = ps[a].to_f64();
            let (bx, by) = ps[b].to_f64();
            let (cx, cy) = ps[c].to_f64();
            let (bx, by, cx, cy) = (bx - ax, by - ay, cx - ax, cy - ay);
            let d = 2.0 * (bx * cy - by * cx);
            let ux = (cy * (bx * bx + by * by) - by * (cx * cx + cy * cy)) / d;
            let uy = (bx * (cx * cx + cy * cy) - cx * (bx * bx + by * by)) / d;
            let radius = ux.hypot(uy);
            let tol = ps.epsilon().max(f64::EPSILON * 16.0) * radius;
            ps.iter().all(|p| {
                let (x, y) = p.to_f64();
                ((x - ax - ux).hypot(y - ay - uy) - radius).abs() <= tol
            })
        }
    }
}

/// Sign of the incircle determinant of `d` against circle `abc`.
fn incircle_exact(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> i32 {
    let rel = |p: (i64, i64)| ((p.0 - d.0) as i128, (p.1 - d.1) as i128);
    let (a, b, c) = (rel(a), rel(b), rel(c));
    let lift = |p: (i128, i128)| p.0 * p.0 + p.1 * p.1;
    let checked = || -> Option<i128> {
        let t1 = (a.0.checked_mul(b.1)?.checked_sub(b.0.checked_mul(a.1)?)?).checked_mul(lift(c))?;
        let t2 = (b.0.checked_mul(c.1)?.checked_sub(c.0.checked_mul(b.1)?)?).checked_mul(lift(a))?;
        let t3 = (c.0.checked_mul(a.1)?.checked_sub(a.0.checked_mul(c.1)?)?).checked_mul(lift(b))?;
        t1.checked_add(t2)?.checked_add(t3)
    };
    if let Some(det) = checked() {
        return det.signum() as i32;
    }
    let big = |v: i128| BigInt::from(v);
    let liftb = |p: (i128, i128)| big(p.0) * big(p.0) + big(p.1) * big(p.1);
    let det = (big(a.0) * big(b.1) - big(b.0) * big(a.1)) * liftb(c)
        + (big(b.0) * big(c.1) - big(c.0) * big(b.1)) * liftb(a)
        + (big(c.0) * big(a.1) - big(a.0) * big(c.1)) * liftb(b);
    match det.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}
