//! Independent sets in locally Gabriel graphs via monotone subsequences.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use thiserror::Error;

use crate::geom::PointSet;
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndependenceError {
    #[error("terminal vertex {vertex} has degree {degree} in the monotone subgraph")]
    TerminalDegree { vertex: usize, degree: usize },
    #[error("neighbor {vertex} of {center} has induced degree {degree} > 3")]
    NeighborhoodDegree {
        center: usize,
        vertex: usize,
        degree: usize,
    },
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    NonDecreasing,
    NonIncreasing,
}

/// Point indices ordered by abscissa whose ordinates are monotone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneSeq {
    pub indices: Vec<usize>,
    pub direction: Direction,
}

impl MonotoneSeq {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    MonotoneGreedy,
    PlainGreedy,
    /// Both methods found sets of the same size.
    Best,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSetResult {
    /// Sorted vertex indices.
    pub vertices: Vec<usize>,
    pub method: Method,
    /// `ceil(ceil(sqrt(n)) / 2)`.
    pub guarantee: usize,
}

fn coord(ps: &PointSet, i: usize) -> (f64, f64) {
    ps[i].to_f64()
}

/// Longest weakly monotone subsequence in `O(n log n)`.
///
/// Points are ordered by `x`; among equal abscissas the ordinates are taken
/// in the order that lets them extend the sequence. Ties in length go to
/// [`Direction::NonDecreasing`].
pub fn longest_monotone_subsequence(ps: &PointSet) -> MonotoneSeq {
    let up = longest_in(ps, Direction::NonDecreasing);
    let down = longest_in(ps, Direction::NonIncreasing);
    if down.len() > up.len() {
        down
    } else {
        up
    }
}

fn longest_in(ps: &PointSet, direction: Direction) -> MonotoneSeq {
    let mut order: Vec<usize> = (0..ps.len()).collect();
    order.sort_by(|&a, &b| {
        let (pa, pb) = (coord(ps, a), coord(ps, b));
        let by_y = pa.1.total_cmp(&pb.1);
        pa.0.total_cmp(&pb.0).then(match direction {
            Direction::NonDecreasing => by_y,
            Direction::NonIncreasing => by_y.reverse(),
        })
    });
    // Map to a non-decreasing problem on keys.
    let key = |i: usize| match direction {
        Direction::NonDecreasing => coord(ps, i).1,
        Direction::NonIncreasing => -coord(ps, i).1,
    };
    // tails[k]: position in `order` of the smallest-key end of a length k+1 run.
    let mut tails: Vec<usize> = Vec::new();
    let mut prev: Vec<Option<usize>> = vec![None; order.len()];
    for (pos, &i) in order.iter().enumerate() {
        let y = key(i);
        let slot = tails.partition_point(|&t| key(order[t]).total_cmp(&y) != Ordering::Greater);
        prev[pos] = slot.checked_sub(1).map(|s| tails[s]);
        if slot == tails.len() {
            tails.push(pos);
        } else {
            tails[slot] = pos;
        }
    }
    let mut indices = Vec::with_capacity(tails.len());
    let mut cur = tails.last().copied();
    while let Some(pos) = cur {
        indices.push(order[pos]);
        cur = prev[pos];
    }
    indices.reverse();
    MonotoneSeq { indices, direction }
}

/// Independent set of size at least `ceil(|seq| / 2)` inside the subgraph
/// induced by a monotone sequence.
///
/// Repeatedly takes the lowest-abscissa remaining vertex and discards its
/// neighbor, if any.
pub fn monotone_greedy_is(
    g: &Graph,
    seq: &MonotoneSeq,
) -> Result<IndependentSetResult, IndependenceError> {
    let n = g.vertex_count();
    if let Some(&bad) = seq.indices.iter().find(|&&v| v >= n) {
        return Err(IndependenceError::OutOfRange(bad));
    }
    let mut alive = vec![false; n];
    for &v in &seq.indices {
        alive[v] = true;
    }
    let mut vertices = Vec::new();
    for &v in &seq.indices {
        if !alive[v] {
            continue;
        }
        let live: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
        if live.len() > 1 {
            return Err(IndependenceError::TerminalDegree {
                vertex: v,
                degree: live.len(),
            });
        }
        alive[v] = false;
        for w in live {
            alive[w] = false;
        }
        vertices.push(v);
    }
    vertices.sort_unstable();
    Ok(IndependentSetResult {
        vertices,
        method: Method::MonotoneGreedy,
        guarantee: guarantee(n),
    })
}

/// Minimum-degree greedy independent set; ties go to the lower index.
pub fn plain_greedy_is(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut vertices = Vec::new();
    while let Some(v) = (0..n).filter(|&v| alive[v]).min_by_key(|&v| degree[v]) {
        vertices.push(v);
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                alive[w] = false;
                for &x in g.neighbors(w) {
                    degree[x] = degree[x].saturating_sub(1);
                }
            }
        }
    }
    vertices.sort_unstable();
    vertices
}

/// `ceil(ceil(sqrt(n)) / 2)`.
pub fn guarantee(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r < n {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= n {
        r -= 1;
    }
    r.div_ceil(2)
}

/// The larger of the monotone-peeling and minimum-degree greedy sets.
pub fn independent_set(g: &Graph) -> Result<IndependentSetResult, IndependenceError> {
    let seq = longest_monotone_subsequence(g.points());
    let mono = monotone_greedy_is(g, &seq)?;
    let plain = plain_greedy_is(g);
    let (vertices, method) = match plain.len().cmp(&mono.vertices.len()) {
        Ordering::Greater => (plain, Method::PlainGreedy),
        Ordering::Less => (mono.vertices, Method::MonotoneGreedy),
        Ordering::Equal => (mono.vertices, Method::Best),
    };
    Ok(IndependentSetResult {
        vertices,
        method,
        guarantee: guarantee(g.vertex_count()),
    })
}

/// Whether no edge of `g` joins two of `vertices`.
pub fn is_independent(g: &Graph, vertices: &[usize]) -> bool {
    let mut member = vec![false; g.vertex_count()];
    for &v in vertices {
        member[v] = true;
    }
    g.edges().iter().all(|&(a, b)| !(member[a] && member[b]))
}

/// Greedy coloring of `u` and its neighbors with at most four colors.
///
/// Fails if some neighbor has more than three neighbors inside `{u} ∪ N(u)`.
pub fn neighborhood_coloring(
    g: &Graph,
    u: usize,
) -> Result<BTreeMap<usize, u8>, IndependenceError> {
    if u >= g.vertex_count() {
        return Err(IndependenceError::OutOfRange(u));
    }
    let nbrs = g.neighbors(u);
    let inside = |w: usize| w == u || nbrs.binary_search(&w).is_ok();
    let mut colors = BTreeMap::from([(u, 0u8)]);
    for &v in nbrs {
        let local: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| inside(w)).collect();
        if local.len() > 3 {
            return Err(IndependenceError::NeighborhoodDegree {
                center: u,
                vertex: v,
                degree: local.len(),
            });
        }
        let used: Vec<u8> = local.iter().filter_map(|w| colors.get(w).copied()).collect();
        let c = (0u8..).find(|c| !used.contains(c)).expect("unbounded range");
        colors.insert(v, c);
    }
    Ok(colors)
}
