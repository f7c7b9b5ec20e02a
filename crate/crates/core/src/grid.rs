//! The dense grid construction.
//!
//! On a `g x g` integer grid every point `p` in the middle third is given a
//! counter-clockwise run of first-quadrant neighbors `q_0, q_1, ...`. Each
//! `q_{i+1}` must lie outside the closed disk `d_{p q_i}` and strictly on
//! `p`'s side of the tangent to that disk at `q_i`; the run stops once the
//! angle of `p q_i` would exceed 45 degrees. Third-quadrant neighbors come
//! from the same run on the point-reflected grid.
//!
//! Two rules pick `q_{i+1}`:
//! * [`SelectionMode::GreedyFeasible`]: the feasible grid point nearest to
//!   `q_i`.
//! * [`SelectionMode::AnalysisGuided`]: step `d_i = ceil(c1 * sqrt(x_i))`
//!   columns left and round up past the disk boundary.
//!
//! Offsets are always relative to `p`: `x_i = q_i.x - p.x`, `y_i = q_i.y - p.y`.

use rayon::prelude::*;
use thiserror::Error;

use crate::geom::PointSet;
use crate::graph::{self, ConflictReport, Graph};

pub const DEFAULT_THETA0: f64 = 1.74e-3;
pub const DEFAULT_C1: f64 = 1.01;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GridError {
    #[error("grid side must be at least 9, got {0}")]
    SideTooSmall(i64),
    #[error("grid side {0} is too large for exact coordinates")]
    SideTooLarge(i64),
    #[error("initial angle must lie in (0, pi/4), got {0}")]
    BadTheta0(f64),
    #[error("step constant must exceed 1, got {0}")]
    BadC1(f64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("constructed graph has {} locally Gabriel violations", .0.violations.len())]
    InvariantViolated(ConflictReport),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SelectionMode {
    GreedyFeasible,
    AnalysisGuided,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridParams {
    side: i64,
    offset: i64,
    theta0: f64,
    c1: f64,
    mode: SelectionMode,
}

impl GridParams {
    pub fn new(side: i64, mode: SelectionMode) -> Result<Self, GridError> {
        Self::with_constants(side, mode, DEFAULT_THETA0, DEFAULT_C1)
    }

    pub fn with_constants(
        side: i64,
        mode: SelectionMode,
        theta0: f64,
        c1: f64,
    ) -> Result<Self, GridError> {
        if side < 9 {
            return Err(GridError::SideTooSmall(side));
        }
        if side > 1 << 20 {
            return Err(GridError::SideTooLarge(side));
        }
        if !(theta0 > 0.0 && theta0 < std::f64::consts::FRAC_PI_4) {
            return Err(GridError::BadTheta0(theta0));
        }
        if !(c1 > 1.0 && c1.is_finite()) {
            return Err(GridError::BadC1(c1));
        }
        Ok(GridParams {
            side,
            offset: side / 3,
            theta0,
            c1,
            mode,
        })
    }

    pub fn side(&self) -> i64 {
        self.side
    }

    /// Horizontal offset `s` of the first neighbor.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn theta0(&self) -> f64 {
        self.theta0
    }

    pub fn c1(&self) -> f64 {
        self.c1
    }

    pub fn mode(&self) -> SelectionMode {
        self.mode
    }

    /// Range of center coordinates, `floor(g/3) .. floor(2g/3)`.
    pub fn center_range(&self) -> std::ops::Range<i64> {
        self.side / 3..2 * self.side / 3
    }

    fn in_bounds(&self, (x, y): (i64, i64)) -> bool {
        (0..self.side).contains(&x) && (0..self.side).contains(&y)
    }
}

/// Positive root of `h^2 + x tan(theta) h - d (x - d) = 0`: how far above
/// `q_i` the column `d` steps to its left leaves the disk `d_{p q_i}`.
pub fn h_from_eq1(x: i64, tan_theta: f64, d: i64) -> Result<f64, GridError> {
    if d <= 0 || d >= x {
        return Err(GridError::Domain(format!("need 0 < d < x, got d={d}, x={x}")));
    }
    if !(tan_theta >= 0.0 && tan_theta.is_finite()) {
        return Err(GridError::Domain(format!("tan(theta) must be nonnegative, got {tan_theta}")));
    }
    let a = x as f64 * tan_theta;
    let c = d as f64 * (x - d) as f64;
    // Rationalized form of (sqrt(a^2 + 4c) - a) / 2; no cancellation.
    Ok(2.0 * c / ((a * a + 4.0 * c).sqrt() + a))
}

/// Height `h'_i - h_i` of the feasible window in column `d`; a grid point is
/// guaranteed to fit when this exceeds 1.
pub fn feasibility_gap(x: i64, theta: f64, d: i64) -> Result<f64, GridError> {
    if !(theta > 0.0 && theta <= std::f64::consts::FRAC_PI_4) {
        return Err(GridError::Domain(format!("need 0 < theta <= pi/4, got {theta}")));
    }
    let h = h_from_eq1(x, theta.tan(), d)?;
    Ok(d as f64 / theta.tan() - h)
}

/// `(r - p) . (r - q)` for `r = q + (-d, t)`, in offsets relative to `p`.
/// Positive exactly when `r` is outside the closed disk `d_{p q}`.
fn disk_value(x: i64, y: i64, d: i64, t: i64) -> i128 {
    let (t, y, d, x) = (t as i128, y as i128, d as i128, x as i128);
    t * t + y * t - d * (x - d)
}

/// `(p - q) . (r - q)`; positive exactly when angle `p q r` is acute.
fn tangent_value(x: i64, y: i64, d: i64, t: i64) -> i128 {
    x as i128 * d as i128 - y as i128 * t as i128
}

fn feasible_step(x: i64, y: i64, d: i64, t: i64) -> bool {
    d > 0 && d < x && disk_value(x, y, d, t) > 0 && tangent_value(x, y, d, t) > 0
}

/// Smallest `t >= 0` putting column `d` outside the disk.
fn lowest_outside(x: i64, y: i64, d: i64) -> i64 {
    let tan = y as f64 / x as f64;
    let mut t = h_from_eq1(x, tan, d).map_or(0, |h| h.floor() as i64).max(0);
    while t > 0 && disk_value(x, y, d, t - 1) > 0 {
        t -= 1;
    }
    while disk_value(x, y, d, t) <= 0 {
        t += 1;
    }
    t
}

/// The next counter-clockwise neighbor of `p` after `q`, or `None` when the
/// run stops.
///
/// The greedy rule searches without regard to the grid edge; a winner that
/// lies off the grid or past 45 degrees ends the run. This keeps the chosen
/// offsets independent of where `p` sits.
pub fn next_neighbor(p: (i64, i64), q: (i64, i64), params: &GridParams) -> Option<(i64, i64)> {
    let (x, y) = (q.0 - p.0, q.1 - p.1);
    if x < 1 || y < 1 || y > x {
        return None;
    }
    let (d, t) = match params.mode {
        SelectionMode::GreedyFeasible => greedy_step(x, y)?,
        SelectionMode::AnalysisGuided => guided_step(x, y, params.c1)?,
    };
    let r = (q.0 - d, q.1 + t);
    let (rx, ry) = (r.0 - p.0, r.1 - p.1);
    if ry > rx || !params.in_bounds(r) {
        return None;
    }
    Some(r)
}

fn greedy_step(x: i64, y: i64) -> Option<(i64, i64)> {
    // (distance^2, t, -d) orders by distance, then lower y, then lower x.
    let mut best: Option<(i128, i64, i64)> = None;
    for d in 1..x {
        let d2 = d as i128 * d as i128;
        if best.is_some_and(|b| d2 > b.0) {
            break;
        }
        let t = lowest_outside(x, y, d);
        if tangent_value(x, y, d, t) <= 0 {
            continue;
        }
        let key = (d2 + t as i128 * t as i128, t, -d);
        if best.is_none_or(|b| key < b) {
            best = Some(key);
        }
    }
    best.map(|(_, t, neg_d)| (-neg_d, t))
}

fn guided_step(x: i64, y: i64, c1: f64) -> Option<(i64, i64)> {
    let d = (c1 * (x as f64).sqrt()).ceil() as i64;
    if d >= x {
        return None;
    }
    let h = h_from_eq1(x, y as f64 / x as f64, d).ok()?;
    let t = (h + 1.0).floor() as i64;
    feasible_step(x, y, d, t).then_some((d, t))
}

/// First-quadrant neighbor run of `p`, starting from
/// `q_0 = p + (s, max(1, ceil(s tan(theta0))))`.
pub fn neighbors_q1(p: (i64, i64), params: &GridParams) -> Vec<(i64, i64)> {
    let s = params.offset;
    let rise = ((s as f64 * params.theta0.tan()).ceil() as i64).max(1);
    let q0 = (p.0 + s, p.1 + rise);
    if rise > s || !params.in_bounds(q0) {
        return Vec::new();
    }
    let mut run = vec![q0];
    while let Some(next) = next_neighbor(p, *run.last().expect("nonempty"), params) {
        run.push(next);
    }
    run
}

/// Third-quadrant run of `p`: the first-quadrant run of the reflected point,
/// reflected back.
pub fn neighbors_q3(p: (i64, i64), params: &GridParams) -> Vec<(i64, i64)> {
    let flip = |(x, y): (i64, i64)| (params.side - 1 - x, params.side - 1 - y);
    neighbors_q1(flip(p), params).into_iter().map(flip).collect()
}

/// Quantities of one step `q_i -> q_{i+1}` of a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepState {
    pub p: (i64, i64),
    pub q: (i64, i64),
    pub x: i64,
    pub y: i64,
    pub theta: f64,
    /// Columns moved left to reach `q_{i+1}`.
    pub d: i64,
    /// Height above `q_i` where that column leaves the disk.
    pub h: f64,
    /// Height above `q_i` where that column meets the tangent line.
    pub h_prime: f64,
}

/// Step-by-step quantities of the first-quadrant run of `p`.
pub fn trace_q1(p: (i64, i64), params: &GridParams) -> Vec<StepState> {
    let run = neighbors_q1(p, params);
    run.windows(2)
        .map(|w| {
            let (q, r) = (w[0], w[1]);
            let (x, y) = (q.0 - p.0, q.1 - p.1);
            let d = q.0 - r.0;
            let tan = y as f64 / x as f64;
            StepState {
                p,
                q,
                x,
                y,
                theta: (y as f64).atan2(x as f64),
                d,
                h: h_from_eq1(x, tan, d).expect("run steps satisfy 0 < d < x"),
                h_prime: d as f64 / tan,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridBuildStats {
    pub centers: Vec<(i64, i64)>,
    /// First-quadrant neighbor count `m` of each center, aligned with `centers`.
    pub q1_counts: Vec<usize>,
    pub q3_counts: Vec<usize>,
    pub edge_count: usize,
    pub conflict_count: usize,
}

impl GridBuildStats {
    pub fn assigned_total(&self) -> usize {
        self.q1_counts.iter().sum::<usize>() + self.q3_counts.iter().sum::<usize>()
    }
}

fn index(side: i64, (x, y): (i64, i64)) -> usize {
    (y * side + x) as usize
}

/// Runs the construction on the full grid and verifies the result.
///
/// Points are numbered row by row: `(x, y)` has index `y * g + x`.
pub fn build(params: &GridParams) -> Result<(Graph, GridBuildStats), GridError> {
    let g = params.side;
    let coords: Vec<(i64, i64)> = (0..g).flat_map(|y| (0..g).map(move |x| (x, y))).collect();
    let points = PointSet::from_exact(&coords).expect("grid points are distinct and small");

    let range = params.center_range();
    let centers: Vec<(i64, i64)> = range
        .clone()
        .flat_map(|y| range.clone().map(move |x| (x, y)))
        .collect();
    type Run = (Vec<(i64, i64)>, Vec<(i64, i64)>);
    let runs: Vec<Run> = centers
        .par_iter()
        .map(|&p| (neighbors_q1(p, params), neighbors_q3(p, params)))
        .collect();

    let mut edges = Vec::new();
    for (&p, (q1, q3)) in centers.iter().zip(&runs) {
        let a = index(g, p);
        for &q in q1.iter().chain(q3) {
            let b = index(g, q);
            edges.push((a.min(b), a.max(b)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let graph = Graph::new(points, edges).expect("grid edges are in range");

    let report = graph::verify(&graph);
    if !report.is_valid() {
        return Err(GridError::InvariantViolated(report));
    }
    let stats = GridBuildStats {
        q1_counts: runs.iter().map(|r| r.0.len()).collect(),
        q3_counts: runs.iter().map(|r| r.1.len()).collect(),
        edge_count: graph.edge_count(),
        conflict_count: 0,
        centers,
    };
    Ok((graph, stats))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PredictedBounds {
    /// Lower bound on `x_k`.
    pub x_lower: f64,
    /// Upper bound on `y_k`.
    pub y_upper: f64,
    /// Proven lower bound on the neighbors per center, `1e-4 n^(1/4)`.
    pub m_pred: f64,
}

/// Closed-form bounds from the step analysis for `n` grid points after `k`
/// analysis-guided steps.
pub fn predicted_bounds(n: f64, k: u64, params: &GridParams) -> PredictedBounds {
    let k = k as f64;
    let root = n.sqrt();
    let quarter = n.powf(0.25);
    let tan0 = params.theta0.tan();
    let sqrt3 = 3f64.sqrt();
    PredictedBounds {
        x_lower: root / 3.0 - k * params.c1 * quarter / sqrt3,
        y_upper: tan0 * root / 3.0 + params.c1 * k * quarter / (sqrt3 * tan0) + k,
        m_pred: 1e-4 * quarter,
    }
}
