//! Undirected multigraphs with positive edge weights, power assignments,
//! and the activation predicate.
//!
//! An edge `uv` is activated by powers `p` when
//! `alpha(uv) * p(u) + beta(uv) * p(v) >= w(uv)`; the plain model is
//! `alpha = beta = 1`. Equality activates. All values are exact rationals.

use crate::rational::{format_rational, parse_rational, Rational};
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap, VecDeque};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: Rational,
    pub alpha: Rational,
    pub beta: Rational,
}

impl Edge {
    pub fn other(&self, w: VertexId) -> VertexId {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn has_unit_coefficients(&self) -> bool {
        self.alpha.is_one() && self.beta.is_one()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge weight must be strictly positive")]
    NonPositiveWeight,
    #[error("activation coefficients must be strictly positive")]
    NonPositiveCoefficient,
    #[error("self-loops are not allowed")]
    SelfLoop,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("source and sink must be distinct")]
    EqualTerminals,
    #[error("terminals are not set")]
    MissingTerminals,
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),
}

/// Undirected multigraph with designated terminals. Vertex names are opaque
/// strings in files; internally vertices are dense indices in insertion order.
#[derive(Debug, Clone)]
pub struct WeightedGraph {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<EdgeId>>,
    source: VertexId,
    sink: VertexId,
    pub budget: Option<Rational>,
}

pub struct GraphBuilder {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    edges: Vec<Edge>,
    terminals: Option<(VertexId, VertexId)>,
    budget: Option<Rational>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        GraphBuilder {
            names: Vec::new(),
            index: HashMap::new(),
            edges: Vec::new(),
            terminals: None,
            budget: None,
        }
    }

    pub fn vertex(&mut self, name: &str) -> VertexId {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = VertexId(self.names.len());
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        id
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId, GraphError> {
        if self.index.contains_key(name) {
            return Err(GraphError::DuplicateVertex(name.to_string()));
        }
        Ok(self.vertex(name))
    }

    pub fn edge(&mut self, u: VertexId, v: VertexId, weight: Rational) -> Result<EdgeId, GraphError> {
        self.edge_with_coefficients(u, v, weight, Rational::one(), Rational::one())
    }

    pub fn edge_with_coefficients(
        &mut self,
        u: VertexId,
        v: VertexId,
        weight: Rational,
        alpha: Rational,
        beta: Rational,
    ) -> Result<EdgeId, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop);
        }
        if !weight.is_positive() {
            return Err(GraphError::NonPositiveWeight);
        }
        if !alpha.is_positive() || !beta.is_positive() {
            return Err(GraphError::NonPositiveCoefficient);
        }
        let id = EdgeId(self.edges.len());
        self.edges.push(Edge { u, v, weight, alpha, beta });
        Ok(id)
    }

    pub fn terminals(&mut self, s: VertexId, t: VertexId) -> Result<(), GraphError> {
        if s == t {
            return Err(GraphError::EqualTerminals);
        }
        self.terminals = Some((s, t));
        Ok(())
    }

    pub fn budget(&mut self, c: Rational) {
        self.budget = Some(c);
    }

    pub fn build(self) -> Result<WeightedGraph, GraphError> {
        let (source, sink) = self.terminals.ok_or(GraphError::MissingTerminals)?;
        let mut adjacency = vec![Vec::new(); self.names.len()];
        for (i, e) in self.edges.iter().enumerate() {
            adjacency[e.u.0].push(EdgeId(i));
            adjacency[e.v.0].push(EdgeId(i));
        }
        Ok(WeightedGraph {
            names: self.names,
            index: self.index,
            edges: self.edges,
            adjacency,
            source,
            sink,
            budget: self.budget,
        })
    }
}

impl WeightedGraph {
    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.names.len()).map(VertexId)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id.0]
    }

    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.adjacency[v.0]
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.0]
    }

    pub fn lookup(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn sink(&self) -> VertexId {
        self.sink
    }

    pub fn has_unit_coefficients(&self) -> bool {
        self.edges.iter().all(Edge::has_unit_coefficients)
    }

    pub fn max_weight(&self) -> Rational {
        self.edges
            .iter()
            .map(|e| e.weight.clone())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Edges activated by `p`: exact test, equality counts.
    pub fn activated_edges(&self, p: &PowerAssignment) -> Vec<EdgeId> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| {
                &e.alpha * p.get(e.u) + &e.beta * p.get(e.v) >= e.weight
            })
            .map(|(i, _)| EdgeId(i))
            .collect()
    }

    /// True iff the activated edges contain an s-t path.
    pub fn is_feasible(&self, p: &PowerAssignment) -> bool {
        let active = self.activated_edges(p);
        self.connects(&active, self.source, self.sink)
    }

    /// BFS over a restricted edge set.
    pub fn connects(&self, edges: &[EdgeId], from: VertexId, to: VertexId) -> bool {
        self.bfs_path(edges, from, to).is_some()
    }

    /// Shortest (fewest edges) path from `from` to `to` using only `edges`.
    /// Deterministic: edges are scanned in id order.
    pub fn bfs_path(&self, edges: &[EdgeId], from: VertexId, to: VertexId) -> Option<Path> {
        let mut allowed = vec![false; self.edges.len()];
        for &e in edges {
            allowed[e.0] = true;
        }
        let mut prev: Vec<Option<(VertexId, EdgeId)>> = vec![None; self.names.len()];
        let mut seen = vec![false; self.names.len()];
        let mut queue = VecDeque::new();
        seen[from.0] = true;
        queue.push_back(from);
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for &eid in &self.adjacency[u.0] {
                if !allowed[eid.0] {
                    continue;
                }
                let v = self.edges[eid.0].other(u);
                if !seen[v.0] {
                    seen[v.0] = true;
                    prev[v.0] = Some((u, eid));
                    queue.push_back(v);
                }
            }
        }
        if !seen[to.0] {
            return None;
        }
        let mut vertices = vec![to];
        let mut path_edges = Vec::new();
        let mut cur = to;
        while cur != from {
            let (p, e) = prev[cur.0].expect("broken BFS chain");
            vertices.push(p);
            path_edges.push(e);
            cur = p;
        }
        vertices.reverse();
        path_edges.reverse();
        Some(Path { vertices, edges: path_edges })
    }
}

/// Nonnegative power per vertex; absent vertices hold power zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PowerAssignment {
    powers: BTreeMap<VertexId, Rational>,
}

impl PowerAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, v: VertexId, power: Rational) {
        assert!(!power.is_negative(), "powers must be nonnegative");
        if power.is_zero() {
            self.powers.remove(&v);
        } else {
            self.powers.insert(v, power);
        }
    }

    pub fn get(&self, v: VertexId) -> Rational {
        self.powers.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn cost(&self) -> Rational {
        self.powers.values().fold(Rational::zero(), |acc, p| acc + p)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &Rational)> {
        self.powers.iter().map(|(v, p)| (*v, p))
    }

    /// Raise `v` to at least `power`.
    pub fn raise(&mut self, v: VertexId, power: Rational) {
        if self.get(v) < power {
            self.set(v, power);
        }
    }
}

/// Simple path: pairwise-distinct vertices plus the chosen edge instance
/// between each consecutive pair (parallel edges make the edge list necessary).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("path must contain at least one vertex")]
    Empty,
    #[error("edge count must be one less than vertex count")]
    LengthMismatch,
    #[error("edge {0} does not join the consecutive vertices at position {1}")]
    NotIncident(usize, usize),
    #[error("path vertices must be pairwise distinct")]
    RepeatedVertex,
}

impl Path {
    pub fn new(g: &WeightedGraph, vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Result<Self, PathError> {
        if vertices.is_empty() {
            return Err(PathError::Empty);
        }
        if edges.len() + 1 != vertices.len() {
            return Err(PathError::LengthMismatch);
        }
        for (i, &eid) in edges.iter().enumerate() {
            let e = g.edge(eid);
            let (a, b) = (vertices[i], vertices[i + 1]);
            if !((e.u == a && e.v == b) || (e.u == b && e.v == a)) {
                return Err(PathError::NotIncident(eid.0, i));
            }
        }
        let mut sorted: Vec<_> = vertices.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(PathError::RepeatedVertex);
        }
        Ok(Path { vertices, edges })
    }

    pub fn single(v: VertexId) -> Self {
        Path { vertices: vec![v], edges: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn perr(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// Parses the line-based graph format:
///
/// ```text
/// mip <num_vertices> <num_edges>
/// terminals <s> <t>
/// budget <C>           # optional
/// edge <u> <v> <w> [<alpha> <beta>]
/// ```
///
/// `#` starts a comment; numbers are decimal integers or `p/q` rationals.
pub fn parse_graph(text: &str) -> Result<WeightedGraph, ParseError> {
    let mut builder = GraphBuilder::new();
    let mut header: Option<(usize, usize)> = None;
    let mut terminals: Option<(String, String)> = None;
    let mut edge_lines: Vec<(usize, Vec<String>)> = Vec::new();
    let mut budget = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<String> = line.split_whitespace().map(str::to_string).collect();
        match tokens[0].as_str() {
            "mip" => {
                if tokens.len() != 3 {
                    return Err(perr(line_no, "expected `mip <num_vertices> <num_edges>`"));
                }
                let nv = tokens[1].parse().map_err(|_| perr(line_no, "bad vertex count"))?;
                let ne = tokens[2].parse().map_err(|_| perr(line_no, "bad edge count"))?;
                header = Some((nv, ne));
            }
            "terminals" => {
                if tokens.len() != 3 {
                    return Err(perr(line_no, "expected `terminals <s> <t>`"));
                }
                terminals = Some((tokens[1].clone(), tokens[2].clone()));
            }
            "budget" => {
                if tokens.len() != 2 {
                    return Err(perr(line_no, "expected `budget <C>`"));
                }
                budget = Some(parse_rational(&tokens[1]).map_err(|e| perr(line_no, e))?);
            }
            "edge" => {
                if tokens.len() != 4 && tokens.len() != 6 {
                    return Err(perr(line_no, "expected `edge <u> <v> <w> [<alpha> <beta>]`"));
                }
                edge_lines.push((line_no, tokens));
            }
            other => return Err(perr(line_no, format!("unknown directive `{other}`"))),
        }
    }

    let (nv, ne) = header.ok_or_else(|| perr(1, "missing `mip` header"))?;
    let (s, t) = terminals.ok_or_else(|| perr(1, "missing `terminals` line"))?;
    let s_id = builder.vertex(&s);
    let t_id = builder.vertex(&t);
    builder.terminals(s_id, t_id).map_err(|e| perr(1, e.to_string()))?;
    if let Some(c) = budget {
        builder.budget(c);
    }

    for (line_no, tokens) in &edge_lines {
        let u = builder.vertex(&tokens[1]);
        let v = builder.vertex(&tokens[2]);
        let w = parse_rational(&tokens[3]).map_err(|e| perr(*line_no, e))?;
        let (alpha, beta) = if tokens.len() == 6 {
            (
                parse_rational(&tokens[4]).map_err(|e| perr(*line_no, e))?,
                parse_rational(&tokens[5]).map_err(|e| perr(*line_no, e))?,
            )
        } else {
            (Rational::one(), Rational::one())
        };
        builder
            .edge_with_coefficients(u, v, w, alpha, beta)
            .map_err(|e| perr(*line_no, e.to_string()))?;
    }

    let g = builder.build().map_err(|e| perr(1, e.to_string()))?;
    if g.vertex_count() != nv {
        return Err(perr(
            1,
            format!("header declares {nv} vertices, found {}", g.vertex_count()),
        ));
    }
    if g.edge_count() != ne {
        return Err(perr(1, format!("header declares {ne} edges, found {}", g.edge_count())));
    }
    Ok(g)
}

/// Emits the graph in the same line-based format. Byte-deterministic.
pub fn format_graph(g: &WeightedGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("mip {} {}\n", g.vertex_count(), g.edge_count()));
    out.push_str(&format!("terminals {} {}\n", g.name(g.source()), g.name(g.sink())));
    if let Some(c) = &g.budget {
        out.push_str(&format!("budget {}\n", format_rational(c)));
    }
    for e in g.edges() {
        if e.has_unit_coefficients() {
            out.push_str(&format!(
                "edge {} {} {}\n",
                g.name(e.u),
                g.name(e.v),
                format_rational(&e.weight)
            ));
        } else {
            out.push_str(&format!(
                "edge {} {} {} {} {}\n",
                g.name(e.u),
                g.name(e.v),
                format_rational(&e.weight),
                format_rational(&e.alpha),
                format_rational(&e.beta)
            ));
        }
    }
    out
}
