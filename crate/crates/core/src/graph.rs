//! Geometric graphs on a point set and the locally Gabriel verifier.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::geom::{self, DiskSide, GeomError, Point, PointSet};
use crate::rng::XorShift64Star;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    OutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// A geometric graph: a point set plus an undirected simple edge set.
///
/// Edges are stored as `(i, j)` with `i < j`, sorted lexicographically, and
/// the adjacency lists are sorted.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    points: PointSet,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, normalizing edge orientation and order.
    pub fn new(points: PointSet, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let n = points.len();
        let mut canon = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::OutOfRange(a, b, n));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &canon {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            points,
            edges: canon,
            adjacency,
        })
    }

    pub fn empty(points: PointSet) -> Self {
        let n = points.len();
        Graph {
            points,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn vertex_count(&self) -> usize {
        self.points.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.vertex_count() && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// The same points with only the edges `keep` accepts.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Graph {
        let edges = self.edges.iter().copied().filter(|&(a, b)| keep(a, b)).collect();
        Graph::new(self.points.clone(), edges).expect("subset of a valid edge set")
    }

    /// Induced subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut position = vec![usize::MAX; self.vertex_count()];
        for (k, &v) in vertices.iter().enumerate() {
            position[v] = k;
        }
        let points = self.points.select(vertices)?;
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| position[a] != usize::MAX && position[b] != usize::MAX)
            .map(|&(a, b)| (position[a], position[b]))
            .collect();
        Graph::new(points, edges)
    }
}

/// One pair of conflicting edges `(u, v)` and `(u, w)`, with `v < w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub shared: usize,
    pub v: usize,
    pub w: usize,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    /// A neighbor lies strictly inside a diametral disk.
    Interior,
    /// A neighbor lies on a diametral circle (or within tolerance of it).
    Boundary,
}

impl From<DiskSide> for ViolationKind {
    fn from(side: DiskSide) -> Self {
        match side {
            DiskSide::Interior => ViolationKind::Interior,
            _ => ViolationKind::Boundary,
        }
    }
}

/// Verifier output, sorted by `(shared, v, w)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConflictReport {
    pub violations: Vec<Violation>,
}

impl ConflictReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the locally Gabriel condition by testing every pair of edges that
/// share an endpoint. Cost is the sum of squared degrees.
pub fn verify(g: &Graph) -> ConflictReport {
    let violations = (0..g.vertex_count())
        .into_par_iter()
        .flat_map_iter(|u| {
            let nb = g.neighbors(u);
            let mut found = Vec::new();
            for (i, &v) in nb.iter().enumerate() {
                for &w in &nb[i + 1..] {
                    let side = geom::conflict_side(g.point(u), g.point(v), g.point(w))
                        .expect("points of one set are distinct and uniform");
                    if let Some(side) = side {
                        found.push(Violation {
                            shared: u,
                            v,
                            w,
                            kind: side.into(),
                        });
                    }
                }
            }
            found
        })
        .collect();
    ConflictReport { violations }
}

/// Checks the condition edge by edge: for every edge `(a, b)` no neighbor of
/// `a` or `b` may lie in the closed disk `d_ab`.
///
/// Reports the same canonical violations as [`verify`]; kept separate so the
/// two readings of the definition can be checked against each other.
pub fn verify_direct(g: &Graph) -> ConflictReport {
    let mut found: BTreeMap<(usize, usize, usize), ViolationKind> = BTreeMap::new();
    for &(a, b) in g.edges() {
        for (end, other) in [(a, b), (b, a)] {
            for &z in g.neighbors(end) {
                if z == other {
                    continue;
                }
                let side = geom::disk_side(g.point(end), g.point(other), g.point(z))
                    .expect("points of one set are distinct and uniform");
                if side == DiskSide::Outside {
                    continue;
                }
                let key = (end, other.min(z), other.max(z));
                let kind = ViolationKind::from(side);
                found
                    .entry(key)
                    .and_modify(|k| *k = (*k).min(kind))
                    .or_insert(kind);
            }
        }
    }
    ConflictReport {
        violations: found
            .into_iter()
            .map(|((shared, v, w), kind)| Violation { shared, v, w, kind })
            .collect(),
    }
}

/// Smallest cosine over every angle the verifier inspects, or `None` for a
/// graph without adjacent edges. A valid real-coordinate graph is robust
/// when this exceeds its tolerance by a comfortable factor.
pub fn conflict_margin(g: &Graph) -> Option<f64> {
    let mut best: Option<f64> = None;
    for u in 0..g.vertex_count() {
        let nb = g.neighbors(u);
        for (i, &v) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                let (pu, pv, pw) = (g.point(u), g.point(v), g.point(w));
                let m = geom::disk_margin(pu, pv, pw).min(geom::disk_margin(pu, pw, pv));
                best = Some(best.map_or(m, |b| b.min(m)));
            }
        }
    }
    best
}

/// Whether edge `(a, b)` can join `g` without creating a conflict.
pub fn can_add_edge(g: &Graph, a: usize, b: usize) -> bool {
    !blocked(&g.points, &g.adjacency, a, b)
}

fn blocked(points: &PointSet, adjacency: &[Vec<usize>], a: usize, b: usize) -> bool {
    let hit = |end: usize, other: usize| {
        adjacency[end].iter().any(|&z| {
            z == other
                || geom::edges_conflict(&points[end], &points[other], &points[z])
                    .expect("points of one set are distinct and uniform")
        })
    };
    hit(a, b) || hit(b, a)
}

/// A maximal locally Gabriel graph obtained by inserting all candidate edges
/// in a seeded random order, skipping any that would conflict.
pub fn random_maximal_lgg(ps: &PointSet, seed: u64) -> Graph {
    let n = ps.len();
    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    XorShift64Star::new(seed).shuffle(&mut candidates);
    insert_greedily(ps, &candidates)
}

/// Inserts candidates in order, keeping each one that conflicts with nothing
/// already present.
pub fn insert_greedily(ps: &PointSet, order: &[(usize, usize)]) -> Graph {
    let mut adjacency = vec![Vec::new(); ps.len()];
    let mut edges = Vec::new();
    for &(a, b) in order {
        if !blocked(ps, &adjacency, a, b) {
            adjacency[a].push(b);
            adjacency[b].push(a);
            edges.push((a, b));
        }
    }
    Graph::new(ps.clone(), edges).expect("candidates are distinct in-range pairs")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::XorShift64Star;

    fn set(coords: &[(i64, i64)]) -> PointSet {
        PointSet::from_exact(coords).unwrap()
    }

    fn random_points(n: usize, range: i64, seed: u64) -> PointSet {
        let mut rng = XorShift64Star::new(seed);
        let mut seen = std::collections::HashSet::new();
        let mut pts = Vec::new();
        while pts.len() < n {
            let p = (rng.range_i64(-range, range), rng.range_i64(-range, range));
            if seen.insert(p) {
                pts.push(p);
            }
        }
        set(&pts)
    }

    #[test]
    fn construction_normalizes_and_rejects() {
        let ps = set(&[(0, 0), (1, 0), (1, 1)]);
        let g = Graph::new(ps.clone(), vec![(2, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(
            Graph::new(ps.clone(), vec![(0, 3)]),
            Err(GraphError::OutOfRange(0, 3, 3))
        );
        assert_eq!(Graph::new(ps.clone(), vec![(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(ps, vec![(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn path_is_valid() {
        let g = Graph::new(set(&[(0, 0), (1, 0), (1, 1)]), vec![(0, 1), (1, 2)]).unwrap();
        assert!(verify(&g).is_valid());
        assert!(verify_direct(&g).is_valid());
    }

    #[test]
    fn right_isoceles_triangle_is_invalid() {
        let g = Graph::new(set(&[(0, 0), (2, 0), (2, 2)]), vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        let report = verify(&g);
        assert!(!report.is_valid());
        assert!(report.violations.contains(&Violation {
            shared: 0,
            v: 1,
            w: 2,
            kind: ViolationKind::Boundary,
        }));
        assert_eq!(report, verify_direct(&g));
    }

    #[test]
    fn two_point_set_gets_its_edge() {
        let ps = set(&[(3, 4), (-1, 2)]);
        for seed in 0..10 {
            assert_eq!(random_maximal_lgg(&ps, seed).edges(), &[(0, 1)]);
        }
    }

    #[test]
    fn collinear_triple_by_insertion_order() {
        // Enumerate every insertion order of the three candidates: the long
        // edge admitted first blocks both short ones, otherwise both short
        // edges survive and block the long one.
        let ps = set(&[(0, 0), (1, 0), (2, 0)]);
        let cands = [(0, 1), (1, 2), (0, 2)];
        let orders = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for order in orders {
            let seq: Vec<_> = order.iter().map(|&k| cands[k]).collect();
            let g = insert_greedily(&ps, &seq);
            if seq[0] == (0, 2) {
                assert_eq!(g.edges(), &[(0, 2)]);
            } else {
                assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
            }
        }
        for seed in 0..50 {
            let g = random_maximal_lgg(&ps, seed);
            assert!(verify(&g).is_valid());
            assert!(g.edge_count() == 1 || g.edge_count() == 2);
        }
    }

    #[test]
    fn random_graphs_are_valid_maximal_and_deterministic() {
        for seed in 0..30 {
            let ps = random_points(20, 30, seed);
            let g = random_maximal_lgg(&ps, seed);
            assert!(verify(&g).is_valid());
            assert_eq!(g, random_maximal_lgg(&ps, seed));
            for a in 0..ps.len() {
                for b in a + 1..ps.len() {
                    if g.has_edge(a, b) {
                        continue;
                    }
                    assert!(!can_add_edge(&g, a, b));
                    let mut edges = g.edges().to_vec();
                    edges.push((a, b));
                    let bigger = Graph::new(ps.clone(), edges).unwrap();
                    assert!(!verify(&bigger).is_valid());
                }
            }
        }
    }

    #[test]
    fn verifiers_agree_on_arbitrary_graphs() {
        let mut rng = XorShift64Star::new(99);
        for seed in 0..200 {
            let ps = random_points(12, 6, seed);
            let edges: Vec<_> = (0..12)
                .flat_map(|a| (a + 1..12).map(move |b| (a, b)))
                .filter(|_| rng.below(3) == 0)
                .collect();
            let g = Graph::new(ps, edges).unwrap();
            assert_eq!(verify(&g), verify_direct(&g));
        }
    }

    #[test]
    fn deletion_keeps_validity() {
        let mut rng = XorShift64Star::new(5);
        for seed in 0..40 {
            let ps = random_points(25, 40, 1000 + seed);
            let g = random_maximal_lgg(&ps, seed);
            let fewer = g.filter_edges(|_, _| rng.below(2) == 0);
            assert!(verify(&fewer).is_valid());
            let keep: Vec<usize> = (0..ps.len()).filter(|_| rng.below(3) != 0).collect();
            if !keep.is_empty() {
                assert!(verify(&g.induced(&keep).unwrap()).is_valid());
            }
        }
    }

    #[test]
    fn valid_iff_no_vertex_has_conflicting_pair() {
        let mut rng = XorShift64Star::new(17);
        for seed in 0..60 {
            let ps = random_points(10, 5, 500 + seed);
            let edges: Vec<_> = (0..10)
                .flat_map(|a| (a + 1..10).map(move |b| (a, b)))
                .filter(|_| rng.below(4) == 0)
                .collect();
            let g = Graph::new(ps, edges).unwrap();
            let per_vertex_clean = (0..g.vertex_count()).all(|u| {
                let nb = g.neighbors(u);
                nb.iter().enumerate().all(|(i, &v)| {
                    nb[i + 1..].iter().all(|&w| {
                        !geom::edges_conflict(g.point(u), g.point(v), g.point(w)).unwrap()
                    })
                })
            });
            let per_edge_clean = g.edges().iter().all(|&(a, b)| {
                g.neighbors(a)
                    .iter()
                    .chain(g.neighbors(b))
                    .filter(|&&z| z != a && z != b)
                    .all(|&z| !geom::in_closed_disk(g.point(a), g.point(b), g.point(z)).unwrap())
            });
            assert_eq!(verify(&g).is_valid(), per_vertex_clean);
            assert_eq!(verify(&g).is_valid(), per_edge_clean);
        }
    }
}
