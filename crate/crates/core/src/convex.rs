//! Extremal locally Gabriel graphs on convex point classes.

use std::f64::consts::{FRAC_PI_2, PI};

use thiserror::Error;

use crate::geom::{self, ConvexClass, ConvexKind, GeomError, PointSet, DEFAULT_EPSILON};
use crate::graph::{self, Graph, GraphError};

/// Circle radius used by the real-coordinate constructions.
pub const DEFAULT_RADIUS: f64 = (1u64 << 20) as f64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstructionError {
    #[error("point set is {0:?} (strict: {1}); a strictly monotonic set is required")]
    NotStrictlyMonotonic(ConvexKind, bool),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("construction {0} failed verification with {1} violations")]
    Invalid(&'static str, usize),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A point set together with the graph built on it and the count that graph
/// is meant to reach.
#[derive(Debug, Clone, PartialEq)]
pub struct Construction {
    pub name: &'static str,
    pub points: PointSet,
    pub graph: Graph,
    pub expected_edges: usize,
    pub claimed_class: ConvexClass,
}

fn finish(
    name: &'static str,
    graph: Graph,
    expected_edges: usize,
    claimed_class: ConvexClass,
) -> Result<Construction, ConstructionError> {
    let report = graph::verify(&graph);
    if !report.is_valid() {
        return Err(ConstructionError::Invalid(name, report.violations.len()));
    }
    Ok(Construction {
        name,
        points: graph.points().clone(),
        graph,
        expected_edges,
        claimed_class,
    })
}

/// Path through a strictly monotonic convex set in monotone order: `n - 1`
/// edges.
///
/// Weakly monotonic sets (a tie in one coordinate) are refused.
pub fn monotonic_path(ps: &PointSet) -> Result<Construction, ConstructionError> {
    let class = geom::classify(ps);
    let order = match geom::monotonic_order(ps) {
        Some((c, order)) if c.strict => order,
        _ => return Err(ConstructionError::NotStrictlyMonotonic(class.kind, class.strict)),
    };
    let edges = order.windows(2).map(|w| (w[0], w[1])).collect();
    let graph = Graph::new(ps.clone(), edges)?;
    finish("path", graph, ps.len() - 1, class)
}

/// Center point plus `n - 1` points spread evenly over a quarter circle
/// around it; the arc path and the star from the center give `2n - 3` edges.
///
/// Point `k` (0-based, `k < n - 1`) sits at angle `k (pi/2) / (n - 2)`; the
/// center is the last point.
pub fn half_convex_fan(n: usize, radius: f64) -> Result<Construction, ConstructionError> {
    if n < 4 {
        // With three points the center lies on the boundary of the disk
        // spanned by the two arc ends, so the triangle is not valid.
        return Err(ConstructionError::Parameter(format!(
            "fan needs at least 4 points, got {n}"
        )));
    }
    check_radius(radius)?;
    let arc = n - 1;
    let mut coords: Vec<(f64, f64)> = (0..arc)
        .map(|k| {
            let angle = k as f64 * FRAC_PI_2 / (n - 2) as f64;
            (radius * angle.cos(), radius * angle.sin())
        })
        .collect();
    coords.push((0.0, 0.0));
    let ps = PointSet::from_real(&coords, DEFAULT_EPSILON)?;
    let center = n - 1;
    let edges = (0..arc - 1)
        .map(|k| (k, k + 1))
        .chain((0..arc).map(|k| (k, center)))
        .collect();
    let graph = Graph::new(ps, edges)?;
    let class = ConvexClass {
        kind: ConvexKind::RightHalfConvex,
        strict: false,
    };
    finish("fan", graph, 2 * n - 3, class)
}

/// `n` points evenly spaced on a circle joined in a cycle: `n` edges.
pub fn circle_cycle(n: usize, radius: f64) -> Result<Construction, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::Parameter(format!(
            "cycle needs at least 3 points, got {n}"
        )));
    }
    check_radius(radius)?;
    let coords: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let angle = 2.0 * PI * k as f64 / n as f64;
            (radius * angle.cos(), radius * angle.sin())
        })
        .collect();
    let ps = PointSet::from_real(&coords, DEFAULT_EPSILON)?;
    let edges = (0..n).map(|k| (k, (k + 1) % n)).collect();
    let graph = Graph::new(ps, edges)?;
    let kind = match n {
        3 => ConvexKind::RightHalfConvex,
        n if n % 2 == 0 => ConvexKind::CentrallySymmetricConvex,
        _ => ConvexKind::OnCommonCircle,
    };
    finish("cycle", graph, n, ConvexClass { kind, strict: true })
}

/// Two columns of `n/2` integer points at `x = -1` and `x = 1`, rows
/// `-n/4 .. n/4`. Edges skip one row along each column and join each left
/// point to the right points one row above and below.
///
/// Point `(−1, i)` has index `i + n/4`, point `(1, i)` has index
/// `n/2 + i + n/4`. The set is symmetric about `(0, -1/2)`.
pub fn centrally_symmetric_ladder(n: usize) -> Result<Construction, ConstructionError> {
    if n < 12 || !n.is_multiple_of(4) {
        return Err(ConstructionError::Parameter(format!(
            "ladder needs n >= 12 with n divisible by 4, got {n}"
        )));
    }
    let half = n / 2;
    let q = (n / 4) as i64;
    let rows: Vec<i64> = (-q..q).collect();
    let coords: Vec<(i64, i64)> = rows
        .iter()
        .map(|&i| (-1, i))
        .chain(rows.iter().map(|&i| (1, i)))
        .collect();
    let ps = PointSet::from_exact(&coords)?;
    let left = |i: i64| (i + q) as usize;
    let right = |i: i64| half + (i + q) as usize;
    let has = |i: i64| (-q..q).contains(&i);

    let mut edges = Vec::new();
    for &i in &rows {
        if has(i + 2) {
            edges.push((left(i), left(i + 2)));
            edges.push((right(i), right(i + 2)));
        }
        if has(i + 1) {
            edges.push((left(i), right(i + 1)));
        }
        if has(i - 1) {
            edges.push((left(i), right(i - 1)));
        }
    }
    let graph = Graph::new(ps, edges)?;
    let class = ConvexClass {
        kind: ConvexKind::CentrallySymmetricConvex,
        strict: false,
    };
    finish("ladder", graph, 2 * n - 8, class)
}

fn check_radius(radius: f64) -> Result<(), ConstructionError> {
    if radius > 0.0 && radius.is_finite() {
        Ok(())
    } else {
        Err(ConstructionError::Parameter(format!("radius must be positive, got {radius}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::XorShift64Star;

    fn degrees(g: &Graph) -> Vec<usize> {
        (0..g.vertex_count()).map(|u| g.degree(u)).collect()
    }

    #[test]
    fn path_example() {
        let ps = PointSet::from_exact(&[(0, 5), (1, 3), (3, 2), (6, 1), (10, 0)]).unwrap();
        let c = monotonic_path(&ps).unwrap();
        assert_eq!(c.graph.edge_count(), 4);
        assert_eq!(c.expected_edges, 4);
        assert!(graph::verify(&c.graph).is_valid());
    }

    #[test]
    fn path_on_two_points() {
        let ps = PointSet::from_exact(&[(0, 0), (3, 1)]).unwrap();
        assert_eq!(monotonic_path(&ps).unwrap().graph.edge_count(), 1);
    }

    #[test]
    fn path_follows_monotone_order_not_input_order() {
        let ps = PointSet::from_exact(&[(6, 1), (0, 5), (10, 0), (3, 2), (1, 3)]).unwrap();
        let c = monotonic_path(&ps).unwrap();
        assert_eq!(c.graph.edges(), &[(0, 2), (0, 3), (1, 4), (3, 4)]);
    }

    #[test]
    fn weak_monotone_path_rejected() {
        let ps = PointSet::from_exact(&[(0, 0), (0, -1), (1, -1)]).unwrap();
        assert!(matches!(
            monotonic_path(&ps),
            Err(ConstructionError::NotStrictlyMonotonic(_, false))
        ));
        // The right angle sits at the shared vertex, so the path itself is
        // still locally Gabriel.
        let g = Graph::new(ps, vec![(0, 1), (1, 2)]).unwrap();
        assert!(graph::verify(&g).is_valid());
    }

    #[test]
    fn non_monotone_path_rejected() {
        let ps = PointSet::from_exact(&[(0, 0), (1, 2), (2, 0)]).unwrap();
        assert!(monotonic_path(&ps).is_err());
    }

    #[test]
    fn fan_counts_degrees_and_class() {
        let c = half_convex_fan(5, DEFAULT_RADIUS).unwrap();
        assert_eq!(c.graph.edge_count(), 7);
        assert_eq!(geom::classify(&c.points).kind, ConvexKind::RightHalfConvex);
        for n in 4..40 {
            let c = half_convex_fan(n, DEFAULT_RADIUS).unwrap();
            assert_eq!(c.graph.edge_count(), 2 * n - 3);
            let deg = degrees(&c.graph);
            assert_eq!(deg[n - 1], n - 1);
            assert_eq!(deg[0], 2);
            assert_eq!(deg[n - 2], 2);
            assert!(deg[1..n - 2].iter().all(|&d| d == 3));
            assert_eq!(geom::classify(&c.points).kind, c.claimed_class.kind);
        }
    }

    #[test]
    fn three_point_fan_is_refused() {
        assert!(matches!(half_convex_fan(3, 1.0), Err(ConstructionError::Parameter(_))));
        // The right angle at the center is a boundary conflict.
        let ps = PointSet::from_real(&[(1.0, 0.0), (0.0, 1.0), (0.0, 0.0)], 1e-9).unwrap();
        let g = Graph::new(ps, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(!graph::verify(&g).is_valid());
    }

    #[test]
    fn cycles() {
        let sq = circle_cycle(4, DEFAULT_RADIUS).unwrap();
        assert_eq!(sq.graph.edge_count(), 4);
        let oct = circle_cycle(8, DEFAULT_RADIUS).unwrap();
        assert_eq!(oct.graph.edge_count(), 8);
        for n in 3..60 {
            let c = circle_cycle(n, DEFAULT_RADIUS).unwrap();
            assert!(degrees(&c.graph).iter().all(|&d| d == 2));
            assert_eq!(c.graph.edge_count(), n);
            let class = geom::classify(&c.points);
            assert_eq!(class.kind, c.claimed_class.kind, "n = {n}");
            assert!(geom::is_on_common_circle(&c.points));
        }
        assert!(circle_cycle(2, 1.0).is_err());
    }

    #[test]
    fn ladder_counts_and_symmetry() {
        for n in (12..=64).step_by(4) {
            let c = centrally_symmetric_ladder(n).unwrap();
            assert!(c.graph.edge_count() >= 2 * n - 8);
            assert_eq!(c.graph.edge_count(), 2 * n - 6);
            assert_eq!(geom::classify(&c.points).kind, ConvexKind::CentrallySymmetricConvex);
            // Point reflection through (0, -1/2) maps (x, y) to (-x, -1 - y).
            let q = (n / 4) as i64;
            let index_of = |x: i64, y: i64| {
                let base = if x < 0 { 0 } else { n / 2 };
                base + (y + q) as usize
            };
            for &(a, b) in c.graph.edges() {
                let (ax, ay) = c.points[a].as_exact().unwrap();
                let (bx, by) = c.points[b].as_exact().unwrap();
                assert!(c.graph.has_edge(index_of(-ax, -1 - ay), index_of(-bx, -1 - by)));
            }
        }
        assert!(centrally_symmetric_ladder(14).is_err());
        assert!(centrally_symmetric_ladder(8).is_err());
    }

    #[test]
    fn random_strict_monotone_paths() {
        let mut rng = XorShift64Star::new(3);
        for _ in 0..200 {
            let n = rng.range_i64(2, 30) as usize;
            let mut xs: Vec<i64> = Vec::new();
            while xs.len() < n {
                let v = rng.range_i64(-1000, 1000);
                if !xs.contains(&v) {
                    xs.push(v);
                }
            }
            xs.sort();
            // y = (x - x_max)^2 is strictly decreasing and convex on the range.
            let xmax = xs[n - 1] + 1;
            let pts: Vec<(i64, i64)> = xs.iter().map(|&x| (x, (xmax - x) * (xmax - x))).collect();
            let ps = PointSet::from_exact(&pts).unwrap();
            let c = monotonic_path(&ps).unwrap();
            assert_eq!(c.graph.edge_count(), n - 1);
        }
    }
}
