//! The inclusion ideal graph itself: vertices are the non-trivial ideals,
//! an edge joins two ideals exactly when one properly contains the other.
//! Distances come from plain per-source BFS; for connected specs the
//! diameter never exceeds 3, which later modules lean on hard.

use crate::error::Error;
use crate::ring::{IdealVector, RingSpec};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::collections::VecDeque;

/// A hop count or an explicit marker for "no path". Deliberately not an
/// integer sentinel, so unreachable pairs cannot leak into arithmetic.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Distance {
    Hops(u32),
    Unreachable,
}

impl Distance {
    pub fn hops(self) -> Option<u32> {
        match self {
            Distance::Hops(h) => Some(h),
            Distance::Unreachable => None,
        }
    }
}

const UNREACHED: u32 = u32::MAX;

/// All-pairs distances, dense. Row-major, `UNREACHED` internally for pairs
/// with no path; that value never escapes `raw()`, which is crate-private
/// and only used on matrices already known to be finite.
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        match self.data[u * self.n + v] {
            UNREACHED => Distance::Unreachable,
            h => Distance::Hops(h),
        }
    }

    pub fn all_finite(&self) -> bool {
        !self.data.contains(&UNREACHED)
    }

    pub(crate) fn raw(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub(crate) fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    spec: Vec<u32>,
    vertices: Vec<Vec<u32>>,
    edges: Vec<[usize; 2]>,
}

/// The inclusion ideal graph of a ring spec. Vertices are stored in
/// ascending lexicographic order of their level vectors and addressed by
/// index everywhere; the adjacency matrix is the containment relation.
pub struct IdealGraph {
    spec: RingSpec,
    vertices: Vec<IdealVector>,
    index: HashMap<IdealVector, usize>,
    n: usize,
    adj: Vec<bool>,
    neighbors: Vec<Vec<u32>>,
}

impl IdealGraph {
    pub fn build(spec: &RingSpec) -> IdealGraph {
        let vertices = spec.enumerate_ideals();
        let n = vertices.len();
        let mut adj = vec![false; n * n];
        let mut neighbors = vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                // same spec, lengths always agree
                if vertices[u].comparable(&vertices[v]).unwrap() {
                    adj[u * n + v] = true;
                    adj[v * n + u] = true;
                    neighbors[u].push(v as u32);
                    neighbors[v].push(u as u32);
                }
            }
        }
        let index = vertices.iter().cloned().zip(0..).collect();
        IdealGraph { spec: spec.clone(), vertices, index, n, adj, neighbors }
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[IdealVector] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &IdealVector {
        &self.vertices[i]
    }

    pub fn index_of(&self, v: &IdealVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, u: usize) -> &[u32] {
        &self.neighbors[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors[u].len()
    }

    /// Edges as (smaller index, larger index), ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &v in &self.neighbors[u] {
                if (v as usize) > u {
                    out.push((u, v as usize));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// BFS from every source.
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.n;
        let mut data = vec![UNREACHED; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            let row = &mut data[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &v in &self.neighbors[u] {
                    if row[v as usize] == UNREACHED {
                        row[v as usize] = du + 1;
                        queue.push_back(v as usize);
                    }
                }
            }
        }
        DistanceMatrix { n, data }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.neighbors[u] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    queue.push_back(v as usize);
                }
            }
        }
        count == self.n
    }

    /// Largest finite distance. A one-vertex graph has diameter 0.
    pub fn diameter(&self, dist: &DistanceMatrix) -> Result<u32, Error> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        if !dist.all_finite() {
            return Err(Error::Disconnected);
        }
        Ok((0..self.n)
            .flat_map(|u| (0..self.n).map(move |v| (u, v)))
            .map(|(u, v)| dist.raw(u, v))
            .max()
            .unwrap())
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph inclusion_ideal {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("    v{} [label=\"{}\"];\n", i, v.render(&self.spec, "x")));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("    v{u} -- v{v};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            spec: self.spec.chain_lengths().to_vec(),
            vertices: self.vertices.iter().map(|v| v.levels().to_vec()).collect(),
            edges: self.edges().iter().map(|&(u, v)| [u, v]).collect(),
        };
        serde_json::to_string(&doc).expect("graph json never fails to serialize")
    }

    /// Inverse of `to_json`. The file must agree exactly with what the spec
    /// generates; this is a consistency check, not a free-form graph loader.
    pub fn from_json(text: &str) -> Result<IdealGraph, Error> {
        let doc: GraphJson =
            serde_json::from_str(text).map_err(|e| Error::BadGraphJson(e.to_string()))?;
        let spec = RingSpec::new(doc.spec)?;
        let graph = IdealGraph::build(&spec);
        let vertices: Vec<Vec<u32>> =
            graph.vertices.iter().map(|v| v.levels().to_vec()).collect();
        if vertices != doc.vertices {
            return Err(Error::BadGraphJson("vertex list does not match spec".into()));
        }
        let edges: Vec<[usize; 2]> = graph.edges().iter().map(|&(u, v)| [u, v]).collect();
        if edges != doc.edges {
            return Err(Error::BadGraphJson("edge list does not match spec".into()));
        }
        Ok(graph)
    }
}
