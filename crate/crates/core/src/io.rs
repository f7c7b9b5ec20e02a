//! Point and graph file formats, and SVG output.
//!
//! Points files are CSV with one `x,y` pair per line. Text after `#` is a
//! comment and blank lines are skipped. If any coordinate contains `.`, `e`
//! or `E`, or names a non-finite value, the whole file is read in real mode;
//! otherwise every coordinate is an exact integer.
//!
//! Graph files are a single JSON object:
//!
//! ```json
//! {"edges":[[0,1],[1,2]],"meta":{"generator":"path"},"points":[[0,2],[1,1],[3,0]]}
//! ```
//!
//! Edges are written with `i < j` in lexicographic order. Real-mode files
//! store their tolerance as `meta.epsilon`; integer coordinates written as
//! JSON integers select exact mode.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{Map, Number, Value};
use thiserror::Error;

use crate::geom::{CoordKind, GeomError, Point, PointSet, DEFAULT_EPSILON};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("graph file: {0}")]
    Schema(String),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn looks_real(field: &str) -> bool {
    let lower = field.to_ascii_lowercase();
    field.contains(['.', 'e', 'E']) || lower.contains("inf") || lower.contains("nan")
}

/// Parses a points file. `epsilon` is used only when the file is in real mode.
pub fn parse_points(text: &str, epsilon: f64) -> Result<PointSet, ParseError> {
    let mut rows: Vec<(usize, &str, &str)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split(',').map(str::trim);
        match (fields.next(), fields.next(), fields.next()) {
            (Some(x), Some(y), None) if !x.is_empty() && !y.is_empty() => rows.push((i + 1, x, y)),
            _ => {
                return Err(ParseError::Line {
                    line: i + 1,
                    message: format!("expected `x,y`, got {line:?}"),
                })
            }
        }
    }
    let real = rows.iter().any(|(_, x, y)| looks_real(x) || looks_real(y));
    let bad = |line: usize, field: &str| ParseError::Line {
        line,
        message: format!("bad coordinate {field:?}"),
    };
    let mut points = Vec::with_capacity(rows.len());
    for (line, x, y) in rows {
        let point = if real {
            let fx: f64 = x.parse().map_err(|_| bad(line, x))?;
            let fy: f64 = y.parse().map_err(|_| bad(line, y))?;
            Point::real(fx, fy, epsilon)
        } else {
            let ix: i64 = x.parse().map_err(|_| bad(line, x))?;
            let iy: i64 = y.parse().map_err(|_| bad(line, y))?;
            Point::exact(ix, iy)
        };
        points.push(point.map_err(|e| ParseError::Line {
            line,
            message: e.to_string(),
        })?);
    }
    Ok(PointSet::new(points)?)
}

/// Writes points in the format read by [`parse_points`].
pub fn write_points(ps: &PointSet) -> String {
    let mut out = String::new();
    for p in ps.iter() {
        match p.as_exact() {
            Some((x, y)) => writeln!(out, "{x},{y}"),
            None => {
                let (x, y) = p.to_f64();
                writeln!(out, "{},{}", real_text(x), real_text(y))
            }
        }
        .expect("writing to a String");
    }
    out
}

/// Shortest round-trip text that still reads back as a real value.
fn real_text(v: f64) -> String {
    let s = v.to_string();
    if looks_real(&s) {
        s
    } else {
        format!("{s}.0")
    }
}

/// A graph with the free-form metadata stored alongside it.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphFile {
    pub graph: Graph,
    pub meta: BTreeMap<String, Value>,
}

impl GraphFile {
    pub fn new(graph: Graph) -> Self {
        GraphFile {
            graph,
            meta: BTreeMap::new(),
        }
    }

    pub fn with_meta(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.meta.insert(key.to_string(), value.into());
        self
    }
}

/// Reads a graph file.
pub fn read_graph(text: &str) -> Result<GraphFile, ParseError> {
    let value: Value = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let schema = |m: &str| ParseError::Schema(m.to_string());
    let obj = value.as_object().ok_or_else(|| schema("top level must be an object"))?;
    let meta: BTreeMap<String, Value> = match obj.get("meta") {
        None => BTreeMap::new(),
        Some(Value::Object(m)) => m.iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
        Some(_) => return Err(schema("`meta` must be an object")),
    };
    let pairs = |key: &str| -> Result<Vec<[Number; 2]>, ParseError> {
        let arr = obj
            .get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| ParseError::Schema(format!("`{key}` must be an array")))?;
        arr.iter()
            .map(|item| match item.as_array().map(Vec::as_slice) {
                Some([Value::Number(a), Value::Number(b)]) => Ok([a.clone(), b.clone()]),
                _ => Err(ParseError::Schema(format!("`{key}` entries must be [a, b]"))),
            })
            .collect()
    };
    let raw_points = pairs("points")?;
    let raw_edges = pairs("edges")?;

    let real = raw_points.iter().flatten().any(Number::is_f64);
    let points = if real {
        let eps = match meta.get("epsilon") {
            None => DEFAULT_EPSILON,
            Some(v) => v.as_f64().ok_or_else(|| schema("`meta.epsilon` must be a number"))?,
        };
        raw_points
            .iter()
            .map(|[x, y]| {
                let (x, y) = (x.as_f64().unwrap_or(f64::NAN), y.as_f64().unwrap_or(f64::NAN));
                Point::real(x, y, eps)
            })
            .collect::<Result<Vec<_>, _>>()?
    } else {
        raw_points
            .iter()
            .map(|[x, y]| match (x.as_i64(), y.as_i64()) {
                (Some(x), Some(y)) => Ok(Point::exact(x, y)?),
                _ => Err(schema("integer coordinate does not fit in 64 bits")),
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    let ps = PointSet::new(points)?;
    let edges = raw_edges
        .iter()
        .map(|[a, b]| match (a.as_u64(), b.as_u64()) {
            (Some(a), Some(b)) => Ok((a as usize, b as usize)),
            _ => Err(schema("edge endpoints must be non-negative integers")),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let graph = Graph::new(ps, edges)?;
    Ok(GraphFile { graph, meta })
}

/// Writes a graph file as one line of JSON with sorted keys.
pub fn write_graph(file: &GraphFile) -> String {
    let g = &file.graph;
    let mut meta: Map<String, Value> = file.meta.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
    let points: Vec<Value> = g
        .points()
        .iter()
        .map(|p| match p.as_exact() {
            Some((x, y)) => Value::from(vec![x, y]),
            None => {
                let (x, y) = p.to_f64();
                Value::from(vec![x, y])
            }
        })
        .collect();
    if g.points().kind() == CoordKind::Real {
        meta.insert("epsilon".into(), Value::from(g.points()[0].epsilon()));
    }
    let edges: Vec<Value> = g.edges().iter().map(|&(a, b)| Value::from(vec![a, b])).collect();
    let mut root = Map::new();
    root.insert("edges".into(), Value::Array(edges));
    root.insert("meta".into(), Value::Object(meta));
    root.insert("points".into(), Value::Array(points));
    let mut out = Value::Object(root).to_string();
    out.push('\n');
    out
}

/// Draws the graph as a standalone SVG document, optionally with the
/// diametral disk of the pair `disk`.
pub fn emit_svg(g: &Graph, disk: Option<(usize, usize)>) -> Result<String, GraphError> {
    let n = g.vertex_count();
    if let Some((a, b)) = disk {
        if a >= n || b >= n {
            return Err(GraphError::OutOfRange(a, b, n));
        }
    }
    let coords: Vec<(f64, f64)> = g.points().iter().map(Point::to_f64).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &coords {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1.0);
    let pad = span * 0.05;
    let dot = span * 0.006;
    let stroke = span * 0.002;
    // SVG's y axis points down; flip so the picture matches the plane.
    let fy = |y: f64| y0 + y1 - y;

    let mut out = String::new();
    let w = &mut out;
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        x0 - pad,
        y0 - pad,
        x1 - x0 + 2.0 * pad,
        y1 - y0 + 2.0 * pad
    )
    .expect("writing to a String");
    writeln!(w, r#"<g stroke="black" stroke-width="{stroke}">"#).expect("writing to a String");
    for &(a, b) in g.edges() {
        let (pa, pb) = (coords[a], coords[b]);
        writeln!(
            w,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            pa.0,
            fy(pa.1),
            pb.0,
            fy(pb.1)
        )
        .expect("writing to a String");
    }
    writeln!(w, "</g>").expect("writing to a String");
    if let Some((a, b)) = disk {
        let (pa, pb) = (coords[a], coords[b]);
        let (cx, cy) = ((pa.0 + pb.0) / 2.0, (pa.1 + pb.1) / 2.0);
        let r = (pa.0 - pb.0).hypot(pa.1 - pb.1) / 2.0;
        writeln!(
            w,
            r#"<circle cx="{cx}" cy="{}" r="{r}" fill="none" stroke="red" stroke-width="{stroke}"/>"#,
            fy(cy)
        )
        .expect("writing to a String");
    }
    writeln!(w, r#"<g fill="blue">"#).expect("writing to a String");
    for &(x, y) in &coords {
        writeln!(w, r#"<circle cx="{x}" cy="{}" r="{dot}"/>"#, fy(y)).expect("writing to a String");
    }
    writeln!(w, "</g>\n</svg>").expect("writing to a String");
    Ok(out)
}
