//! The class graph of a normal subgroup: vertices are the G-conjugacy
//! classes of N of size greater than one, edges join classes whose sizes
//! share a prime divisor. Components, distances, diameter, isolated pairs,
//! and dot/json export.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{GroupError, Result};
use crate::group::{g_classes_in, GClass, PermGroup, Subgroup};

/// The class graph with precomputed adjacency and all-pairs distances.
pub struct ClassGraph {
    /// Non-central classes in (size, least member index) order.
    pub vertices: Vec<GClass>,
    /// Symmetric, no self-loops.
    pub adjacency: Vec<Vec<bool>>,
    /// BFS distances; `None` marks unreachable pairs.
    pub distances: Vec<Vec<Option<u32>>>,
}

/// Diameter of a class graph. Disconnected and empty graphs get tagged
/// markers rather than a number so that downstream dispatch cannot confuse
/// "no finite diameter" with a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Diameter {
    Empty,
    Disconnected,
    Finite(u32),
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Empty => write!(f, "empty"),
            Diameter::Disconnected => write!(f, "disconnected"),
            Diameter::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphSummary {
    pub vertex_count: usize,
    pub component_count: usize,
    /// Vertex indices per component, each sorted, components ordered by
    /// least vertex.
    pub components: Vec<Vec<usize>>,
    pub diameter: Diameter,
}

fn sizes_linked(a: &GClass, b: &GClass) -> bool {
    // same semantics as gcd(|a|, |b|) > 1
    a.primes.iter().any(|p| b.primes.contains(p))
}

/// Build the class graph of N under conjugation by G.
pub fn build_graph(g: &Arc<PermGroup>, n: &Subgroup) -> Result<ClassGraph> {
    let classes = g_classes_in(g, n)?;
    Ok(graph_from_classes(classes))
}

/// Build the graph from already-computed classes (central ones are dropped).
pub fn graph_from_classes(classes: Vec<GClass>) -> ClassGraph {
    let mut vertices: Vec<GClass> = classes.into_iter().filter(|c| c.size > 1).collect();
    vertices.sort_by_key(|c| (c.size, c.least_index));
    let k = vertices.len();
    let mut adjacency = vec![vec![false; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            if sizes_linked(&vertices[i], &vertices[j]) {
                adjacency[i][j] = true;
                adjacency[j][i] = true;
            }
        }
    }
    let distances = (0..k).map(|s| bfs_distances(&adjacency, s)).collect();
    ClassGraph {
        vertices,
        adjacency,
        distances,
    }
}

fn bfs_distances(adjacency: &[Vec<bool>], start: usize) -> Vec<Option<u32>> {
    let k = adjacency.len();
    let mut dist = vec![None; k];
    dist[start] = Some(0);
    let mut frontier = vec![start];
    let mut d = 0u32;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for &v in &frontier {
            for (w, &adj) in adjacency[v].iter().enumerate() {
                if adj && dist[w].is_none() {
                    dist[w] = Some(d);
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    dist
}

/// Components and diameter of the graph.
pub fn summarize(graph: &ClassGraph) -> GraphSummary {
    let k = graph.vertices.len();
    let mut assigned = vec![false; k];
    let mut components = Vec::new();
    for start in 0..k {
        if assigned[start] {
            continue;
        }
        let mut comp: Vec<usize> = graph.distances[start]
            .iter()
            .enumerate()
            .filter(|(_, d)| d.is_some())
            .map(|(v, _)| v)
            .collect();
        comp.sort_unstable();
        for &v in &comp {
            assigned[v] = true;
        }
        components.push(comp);
    }
    let diameter = if k == 0 {
        Diameter::Empty
    } else if components.len() > 1 {
        Diameter::Disconnected
    } else {
        Diameter::Finite(
            graph
                .distances
                .iter()
                .flatten()
                .filter_map(|d| *d)
                .max()
                .unwrap_or(0),
        )
    };
    GraphSummary {
        vertex_count: k,
        component_count: components.len(),
        components,
        diameter,
    }
}

/// Unordered vertex pairs {X, Y} such that every vertex Z has size coprime to
/// |X| or to |Y|. Taking Z = X forces gcd(|X|, |Y|) = 1 for any such pair.
pub fn isolated_pairs(graph: &ClassGraph) -> Vec<(usize, usize)> {
    let k = graph.vertices.len();
    let mut out = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let splits_all = graph.vertices.iter().all(|z| {
                !sizes_linked(z, &graph.vertices[i]) || !sizes_linked(z, &graph.vertices[j])
            });
            if splits_all {
                out.push((i, j));
            }
        }
    }
    out
}

/// True iff the pair is at distance >= 3 or in different components: the
/// metric characterization of `isolated_pairs`, asserted as an invariant.
pub fn is_distant_pair(graph: &ClassGraph, i: usize, j: usize) -> bool {
    match graph.distances[i][j] {
        None => true,
        Some(d) => d >= 3,
    }
}

/// Collapse vertices with equal class size. The reduced view matches how the
/// example graphs are usually drawn: one node per distinct size.
pub struct SizeGraph {
    /// Distinct vertex sizes, ascending.
    pub sizes: Vec<u64>,
    /// Edges between distinct sizes (shared prime), as index pairs; a size
    /// whose class occurs more than once may also carry a self-edge.
    pub edges: Vec<(usize, usize)>,
}

pub fn size_collapsed(graph: &ClassGraph) -> SizeGraph {
    let mut sizes: Vec<u64> = graph.vertices.iter().map(|c| c.size).collect();
    sizes.sort_unstable();
    sizes.dedup();
    let mut edges = Vec::new();
    for (i, &a) in sizes.iter().enumerate() {
        for (j, &b) in sizes.iter().enumerate().skip(i) {
            let pa = crate::structure::primes_of(a);
            let linked = crate::structure::primes_of(b).iter().any(|p| pa.contains(p));
            let multiple = i == j
                && graph.vertices.iter().filter(|c| c.size == a).count() > 1;
            if linked && (i != j || multiple) {
                edges.push((i, j));
            }
        }
    }
    SizeGraph { sizes, edges }
}

#[derive(Serialize, serde::Deserialize, PartialEq, Eq, Debug)]
struct GraphDocument {
    vertices: Vec<VertexDocument>,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, serde::Deserialize, PartialEq, Eq, Debug)]
struct VertexDocument {
    size: u64,
    rep: String,
    primes: Vec<u64>,
}

fn edge_list(graph: &ClassGraph) -> Vec<(usize, usize)> {
    let k = graph.vertices.len();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if graph.adjacency[i][j] {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// Deterministic dot or json text for the graph.
pub fn export_graph(graph: &ClassGraph, format: &str) -> Result<String> {
    match format {
        "dot" => {
            let mut out = String::from("graph class_graph {\n");
            for (i, v) in graph.vertices.iter().enumerate() {
                out.push_str(&format!(
                    "  v{i} [label=\"size={} rep={}\"];\n",
                    v.size, v.representative
                ));
            }
            for (i, j) in edge_list(graph) {
                out.push_str(&format!("  v{i} -- v{j};\n"));
            }
            out.push_str("}\n");
            Ok(out)
        }
        "json" => {
            let doc = GraphDocument {
                vertices: graph
                    .vertices
                    .iter()
                    .map(|v| VertexDocument {
                        size: v.size,
                        rep: v.representative.to_string(),
                        primes: v.primes.clone(),
                    })
                    .collect(),
                edges: edge_list(graph),
            };
            let mut text = serde_json::to_string_pretty(&doc)?;
            text.push('\n');
            Ok(text)
        }
        other => Err(GroupError::UnknownFormat(other.to_string())),
    }
}
