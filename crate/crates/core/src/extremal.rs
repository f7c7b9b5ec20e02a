//! Exact maximum locally Gabriel graphs on small point sets.
//!
//! A set of edges is locally Gabriel exactly when no two of them conflict, so
//! the largest such graph is a maximum independent set in the conflict graph
//! over all `n choose 2` candidate edges.

use thiserror::Error;

use crate::geom::{self, PointSet};
use crate::graph::Graph;

/// Largest supported point count; `14 choose 2 = 91` candidates fit in a `u128`.
pub const MAX_POINTS: usize = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("exact search supports 2..={MAX_POINTS} points, got {0}")]
    Size(usize),
}

type Set = u128;

/// Conflict relation between candidate edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictGraph {
    candidates: Vec<(usize, usize)>,
    adjacency: Vec<Set>,
}

impl ConflictGraph {
    pub fn new(ps: &PointSet) -> Result<Self, ExtremalError> {
        let n = ps.len();
        if !(2..=MAX_POINTS).contains(&n) {
            return Err(ExtremalError::Size(n));
        }
        let candidates: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        let mut adjacency = vec![0 as Set; candidates.len()];
        for (i, &(a, b)) in candidates.iter().enumerate() {
            for (j, &(c, d)) in candidates.iter().enumerate().skip(i + 1) {
                let shared = if a == c || a == d {
                    a
                } else if b == c || b == d {
                    b
                } else {
                    continue;
                };
                let q = if a == shared { b } else { a };
                let r = if c == shared { d } else { c };
                let conflict = geom::edges_conflict(&ps[shared], &ps[q], &ps[r])
                    .expect("points of one set are distinct and uniform");
                if conflict {
                    adjacency[i] |= 1 << j;
                    adjacency[j] |= 1 << i;
                }
            }
        }
        Ok(ConflictGraph {
            candidates,
            adjacency,
        })
    }

    /// Candidate edges `(a, b)`, `a < b`, in lexicographic order.
    pub fn candidates(&self) -> &[(usize, usize)] {
        &self.candidates
    }

    pub fn conflicts(&self, i: usize, j: usize) -> bool {
        self.adjacency[i] >> j & 1 == 1
    }

    /// Indices of the candidates conflicting with candidate `i`.
    pub fn conflicts_of(&self, i: usize) -> Vec<usize> {
        members(self.adjacency[i]).collect()
    }

    pub fn conflict_count(&self) -> usize {
        self.adjacency.iter().map(|s| s.count_ones() as usize).sum::<usize>() / 2
    }

    fn all(&self) -> Set {
        match self.candidates.len() {
            128 => Set::MAX,
            m => (1 << m) - 1,
        }
    }
}

fn members(mut s: Set) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (s != 0).then(|| {
            let i = s.trailing_zeros() as usize;
            s &= s - 1;
            i
        })
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalResult {
    pub max_edges: usize,
    pub witness: Graph,
    pub nodes_explored: u64,
}

struct Search<'a> {
    cg: &'a ConflictGraph,
    nodes: u64,
}

impl Search<'_> {
    /// Number of cliques in a greedy clique cover of `p`, an upper bound on
    /// any independent subset.
    fn cover_bound(&self, p: Set) -> usize {
        let mut cliques: Vec<Set> = Vec::new();
        for v in members(p) {
            match cliques.iter_mut().find(|c| **c >> v & 1 == 1) {
                Some(common) => *common &= self.cg.adjacency[v],
                None => cliques.push(self.cg.adjacency[v] & p),
            }
        }
        cliques.len()
    }

    /// Largest independent subset of `p`, if it exceeds `floor`; stops as
    /// soon as `goal` is reached.
    fn best(&mut self, p: Set, floor: usize, goal: usize) -> Option<usize> {
        let mut best = floor;
        self.grow(p, 0, &mut best, goal);
        (best > floor).then_some(best)
    }

    fn grow(&mut self, p: Set, size: usize, best: &mut usize, goal: usize) {
        self.nodes += 1;
        if *best >= goal {
            return;
        }
        if size + p.count_ones() as usize <= *best {
            return;
        }
        let mut pivot = None;
        let mut top = 0;
        for v in members(p) {
            let d = (self.cg.adjacency[v] & p).count_ones();
            if d > top {
                top = d;
                pivot = Some(v);
            }
        }
        let Some(v) = pivot else {
            *best = (*best).max(size + p.count_ones() as usize);
            return;
        };
        if size + self.cover_bound(p) <= *best {
            return;
        }
        let bit = 1 << v;
        self.grow(p & !bit & !self.cg.adjacency[v], size + 1, best, goal);
        self.grow(p & !bit, size, best, goal);
    }
}

/// Maximum locally Gabriel graph on `ps`.
///
/// The witness is the lexicographically least maximum edge set under the
/// candidate order.
pub fn max_lgg(ps: &PointSet) -> Result<ExtremalResult, ExtremalError> {
    let cg = ConflictGraph::new(ps)?;
    let mut search = Search {
        cg: &cg,
        nodes: 0,
    };
    let all = cg.all();
    let max_edges = search.best(all, 0, usize::MAX).unwrap_or(0);

    let mut chosen = Vec::new();
    let mut open = all;
    for c in 0..cg.candidates.len() {
        if chosen.len() == max_edges {
            break;
        }
        if open >> c & 1 == 0 {
            continue;
        }
        let rest = open & !(1 << c) & !cg.adjacency[c];
        let need = max_edges - chosen.len() - 1;
        let reachable =
            need == 0 || search.best(rest, need - 1, need).is_some_and(|s| s >= need);
        if reachable {
            chosen.push(cg.candidates[c]);
            open = rest;
        } else {
            open &= !(1 << c);
        }
    }
    let witness = Graph::new(ps.clone(), chosen).expect("candidates are distinct pairs");
    Ok(ExtremalResult {
        max_edges,
        witness,
        nodes_explored: search.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex;
    use crate::graph;
    use crate::rng::XorShift64Star;
    use proptest::prelude::*;

    fn set(coords: &[(i64, i64)]) -> PointSet {
        PointSet::from_exact(coords).unwrap()
    }

    /// Tries every subset of candidates; returns the size and the
    /// lexicographically least maximum subset.
    fn naive(ps: &PointSet) -> (usize, Vec<(usize, usize)>) {
        let cg = ConflictGraph::new(ps).unwrap();
        let m = cg.candidates().len();
        let mut best: Option<Vec<usize>> = None;
        for mask in 0u32..(1 << m) {
            let pick: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            let independent = pick
                .iter()
                .all(|&i| pick.iter().all(|&j| !cg.conflicts(i, j)));
            if !independent {
                continue;
            }
            let better = match &best {
                None => true,
                Some(b) => pick.len() > b.len() || (pick.len() == b.len() && pick < *b),
            };
            if better {
                best = Some(pick);
            }
        }
        let best = best.unwrap();
        let edges = best.iter().map(|&i| cg.candidates()[i]).collect();
        (best.len(), edges)
    }

    fn random_set(rng: &mut XorShift64Star, n: usize, span: i64) -> PointSet {
        let mut pts: Vec<(i64, i64)> = Vec::new();
        while pts.len() < n {
            let p = (rng.range_i64(0, span), rng.range_i64(0, span));
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        set(&pts)
    }

    #[test]
    fn collinear_triple() {
        let ps = set(&[(0, 0), (1, 0), (2, 0)]);
        let cg = ConflictGraph::new(&ps).unwrap();
        // Candidates: (0,1), (0,2), (1,2).
        assert!(cg.conflicts(1, 0) && cg.conflicts(1, 2));
        assert!(!cg.conflicts(0, 2));
        let r = max_lgg(&ps).unwrap();
        assert_eq!(r.max_edges, 2);
        assert_eq!(r.witness.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn acute_triangle_has_no_conflicts() {
        let ps = set(&[(0, 0), (4, 0), (2, 3)]);
        let cg = ConflictGraph::new(&ps).unwrap();
        assert_eq!(cg.conflict_count(), 0);
        assert_eq!(max_lgg(&ps).unwrap().max_edges, 3);
    }

    #[test]
    fn square_conflicts() {
        let ps = set(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let cg = ConflictGraph::new(&ps).unwrap();
        // Each diagonal conflicts with the four sides; sides meet at right
        // angles at their shared corner, which is not a conflict.
        let diagonals = [(0, 2), (1, 3)];
        for (i, &e) in cg.candidates().iter().enumerate() {
            let expected = if diagonals.contains(&e) { 4 } else { 2 };
            assert_eq!(cg.conflicts_of(i).len(), expected, "{e:?}");
        }
        assert_eq!(cg.conflict_count(), 8);
        let r = max_lgg(&ps).unwrap();
        assert_eq!(r.max_edges, 4);
        assert!(graph::verify(&r.witness).is_valid());
    }

    #[test]
    fn size_limits() {
        assert_eq!(
            ConflictGraph::new(&set(&[(0, 0)])),
            Err(ExtremalError::Size(1))
        );
        let big: Vec<(i64, i64)> = (0..15).map(|i| (i, i * i)).collect();
        assert_eq!(max_lgg(&set(&big)), Err(ExtremalError::Size(15)));
    }

    #[test]
    fn monotone_six() {
        let ps = set(&[(0, 25), (1, 16), (2, 9), (3, 4), (4, 1), (5, 0)]);
        assert_eq!(max_lgg(&ps).unwrap().max_edges, 5);
    }

    #[test]
    fn matches_naive_enumeration() {
        let mut rng = XorShift64Star::new(11);
        for _ in 0..150 {
            let n = rng.range_i64(2, 5) as usize;
            let ps = random_set(&mut rng, n, 6);
            let (size, edges) = naive(&ps);
            let r = max_lgg(&ps).unwrap();
            assert_eq!(r.max_edges, size);
            assert_eq!(r.witness.edges(), &edges[..]);
        }
    }

    #[test]
    fn dominates_constructions_and_random_graphs() {
        let mut rng = XorShift64Star::new(5);
        for _ in 0..40 {
            let n = rng.range_i64(3, 10) as usize;
            let ps = random_set(&mut rng, n, 20);
            let r = max_lgg(&ps).unwrap();
            assert!(graph::verify(&r.witness).is_valid());
            assert_eq!(r.witness.edge_count(), r.max_edges);
            for seed in 0..5 {
                assert!(graph::random_maximal_lgg(&ps, seed).edge_count() <= r.max_edges);
            }
        }
        for n in 4..=8 {
            let fan = convex::half_convex_fan(n, convex::DEFAULT_RADIUS).unwrap();
            assert_eq!(max_lgg(&fan.points).unwrap().max_edges, 2 * n - 3);
        }
        for n in 4..=10 {
            let cyc = convex::circle_cycle(n, convex::DEFAULT_RADIUS).unwrap();
            assert_eq!(max_lgg(&cyc.points).unwrap().max_edges, n);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn conflict_graph_is_symmetric_and_local(
            pts in proptest::collection::btree_set((0i64..12, 0i64..12), 2..8)
        ) {
            let pts: Vec<_> = pts.into_iter().collect();
            let ps = set(&pts);
            let cg = ConflictGraph::new(&ps).unwrap();
            let c = cg.candidates();
            for i in 0..c.len() {
                prop_assert!(!cg.conflicts(i, i));
                for j in 0..c.len() {
                    prop_assert_eq!(cg.conflicts(i, j), cg.conflicts(j, i));
                    let share = c[i].0 == c[j].0 || c[i].0 == c[j].1
                        || c[i].1 == c[j].0 || c[i].1 == c[j].1;
                    if !share {
                        prop_assert!(!cg.conflicts(i, j));
                    }
                }
            }
        }

        #[test]
        fn witness_is_valid_and_maximal(
            pts in proptest::collection::btree_set((0i64..10, 0i64..10), 2..8)
        ) {
            let pts: Vec<_> = pts.into_iter().collect();
            let ps = set(&pts);
            let r = max_lgg(&ps).unwrap();
            prop_assert!(graph::verify(&r.witness).is_valid());
            let n = ps.len();
            for a in 0..n {
                for b in a + 1..n {
                    if !r.witness.has_edge(a, b) {
                        prop_assert!(!graph::can_add_edge(&r.witness, a, b));
                    }
                }
            }
        }
    }
}
