use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub source: usize,
    pub range: usize,
}

/// A finite directed graph; parallel edges and loops are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    out: Vec<Vec<usize>>,
}

/// Outcome of the MT-3 check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mt3 {
    /// For each pair `u ≤ v` (by index), the least-index vertex reachable
    /// from both.
    Satisfied(BTreeMap<(usize, usize), usize>),
    /// The first pair (lexicographic by index) with no common descendant.
    Violated(usize, usize),
}

impl Mt3 {
    pub fn holds(&self) -> bool {
        matches!(self, Mt3::Satisfied(_))
    }
}

impl DirectedGraph {
    pub fn new<S: Into<String>>(vertices: Vec<S>, edges: Vec<(S, S, S)>) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex {v}")));
            }
        }
        let mut names = HashMap::new();
        let mut list = Vec::new();
        for (name, src, dst) in edges {
            let (name, src, dst): (String, String, String) = (name.into(), src.into(), dst.into());
            if names.insert(name.clone(), ()).is_some() || index.contains_key(&name) {
                return Err(Error::InvalidGraph(format!("duplicate name {name}")));
            }
            let lookup = |v: &str| {
                index
                    .get(v)
                    .copied()
                    .ok_or_else(|| Error::InvalidGraph(format!("edge {name} uses unknown vertex {v}")))
            };
            let source = lookup(&src)?;
            let range = lookup(&dst)?;
            list.push(Edge { name, source, range });
        }
        Ok(Self::from_parts(vertices, list))
    }

    /// Graph on vertices `v0, v1, ..` with edges `e0, e1, ..` given by
    /// endpoint indices.
    pub fn from_indices(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let vertices = (0..vertex_count).map(|i| format!("v{i}")).collect();
        let mut list = Vec::new();
        for (k, &(s, r)) in edges.iter().enumerate() {
            if s >= vertex_count || r >= vertex_count {
                return Err(Error::InvalidGraph(format!("edge {k} has an endpoint out of range")));
            }
            list.push(Edge {
                name: format!("e{k}"),
                source: s,
                range: r,
            });
        }
        Ok(Self::from_parts(vertices, list))
    }

    fn from_parts(vertices: Vec<String>, edges: Vec<Edge>) -> Self {
        let mut out = vec![Vec::new(); vertices.len()];
        for (k, e) in edges.iter().enumerate() {
            out[e.source].push(k);
        }
        DirectedGraph { vertices, edges, out }
    }

    /// Parses `vertex <name>` lines followed by `edge <name>: <src> -> <dst>`
    /// lines. `#` starts a comment.
    pub fn parse(src: &str) -> Result<Self> {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for (lineno, raw) in src.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |what: &str| Error::InvalidGraph(format!("line {}: {what}", lineno + 1));
            if let Some(rest) = line.strip_prefix("vertex ") {
                if !edges.is_empty() {
                    return Err(bad("vertices must precede edges"));
                }
                let name = rest.trim();
                if name.is_empty() || name.contains(char::is_whitespace) || name.contains(':') {
                    return Err(bad("malformed vertex name"));
                }
                vertices.push(name.to_string());
            } else if let Some(rest) = line.strip_prefix("edge ") {
                let (name, ends) = rest.split_once(':').ok_or_else(|| bad("expected ':'"))?;
                let (s, d) = ends.split_once("->").ok_or_else(|| bad("expected '->'"))?;
                let (name, s, d) = (name.trim(), s.trim(), d.trim());
                if [name, s, d].iter().any(|t| t.is_empty() || t.contains(char::is_whitespace)) {
                    return Err(bad("malformed edge"));
                }
                edges.push((name.to_string(), s.to_string(), d.to_string()));
            } else {
                return Err(bad("expected 'vertex' or 'edge'"));
            }
        }
        Self::new(vertices, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn edge(&self, f: usize) -> &Edge {
        &self.edges[f]
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.name == name)
    }

    /// `s⁻¹(v)` in declaration order.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// The edge eliminated by the normal form at a regular vertex: the last
    /// one declared.
    pub fn special_edge(&self, v: usize) -> Option<usize> {
        self.out[v].last().copied()
    }

    /// `reach[u][v]` iff there is a path from `u` to `v`.
    pub fn reachability(&self) -> Vec<Vec<bool>> {
        let n = self.vertices.len();
        let mut reach = vec![vec![false; n]; n];
        for (u, row) in reach.iter_mut().enumerate() {
            let mut stack = vec![u];
            row[u] = true;
            while let Some(x) = stack.pop() {
                for &f in &self.out[x] {
                    let y = self.edges[f].range;
                    if !row[y] {
                        row[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        reach
    }

    /// Every two vertices have a common descendant.
    pub fn satisfies_mt3(&self) -> Result<Mt3> {
        if self.vertices.is_empty() {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        let reach = self.reachability();
        let n = self.vertices.len();
        let mut sinks = BTreeMap::new();
        for u in 0..n {
            for v in u..n {
                match (0..n).find(|&w| reach[u][w] && reach[v][w]) {
                    Some(w) => {
                        sinks.insert((u, v), w);
                    }
                    None => return Ok(Mt3::Violated(u, v)),
                }
            }
        }
        Ok(Mt3::Satisfied(sinks))
    }
}

impl fmt::Display for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.vertices {
            writeln!(f, "vertex {v}")?;
        }
        for e in &self.edges {
            writeln!(f, "edge {}: {} -> {}", e.name, self.vertices[e.source], self.vertices[e.range])?;
        }
        Ok(())
    }
}
