use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::Error;

/// A simple undirected graph on vertices `1..=n`.
///
/// Edges are stored with `u < v` in lexicographic order, so equal graphs
/// have equal representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    /// Builds a graph from an edge list, normalizing each pair to
    /// `(min, max)` and sorting. Rejects self-loops, duplicate edges, and
    /// endpoints outside `1..=n`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, Error> {
        let mut normalized: Vec<(u32, u32)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph { detail: format!("self-loop at vertex {a}") });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if u < 1 || v as usize > n {
                return Err(Error::InvalidGraph { detail: format!("endpoint out of range in edge {u} {v}") });
            }
            normalized.push((u, v));
        }
        normalized.sort_unstable();
        if normalized.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph { detail: "duplicate edge".to_string() });
        }
        Ok(Self { n, edges: normalized })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertex degrees in nonincreasing order, including isolated vertices,
    /// so the result always has length `n`.
    pub fn degree_multiset(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.n];
        for &(u, v) in &self.edges {
            deg[(u - 1) as usize] += 1;
            deg[(v - 1) as usize] += 1;
        }
        deg.sort_unstable_by(|x, y| y.cmp(x));
        deg
    }

    /// One `u v` line per edge, 1-based, lexicographically sorted.
    pub fn edge_list_text(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let edges: Vec<[u32; 2]> = self.edges.iter().map(|&(u, v)| [u, v]).collect();
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("edges", &edges)?;
        map.serialize_entry("n", &self.n)?;
        map.end()
    }
}
