//! Undirected simple graphs, habitats, and solution verification.
//!
//! Edge identity is positional: the index into the edge list is the canonical
//! name of an edge, and all other modules exchange sets of edge indices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// An undirected simple graph. Edges are stored as unordered pairs with
/// endpoints normalized to `(min, max)`; the position in `edges` is the
/// canonical edge index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u >= vertex_count {
                return Err(Error::InvalidVertex {
                    index: u,
                    count: vertex_count,
                });
            }
            if v >= vertex_count {
                return Err(Error::InvalidVertex {
                    index: v,
                    count: vertex_count,
                });
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::Input(format!("duplicate edge {{{}, {}}}", e.0, e.1)));
            }
            normalized.push(e);
        }
        Ok(Graph {
            vertex_count,
            edges: normalized,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<(usize, usize)> {
        self.edges.get(index).copied().ok_or(Error::InvalidEdge {
            index,
            count: self.edges.len(),
        })
    }

    /// Index of the edge joining `u` and `v`, if present.
    pub fn find_edge(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.iter().position(|&e| e == key)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    /// Adjacency lists as `(neighbor, edge index)` pairs.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        adj
    }

    /// Connected component labels, numbered in order of lowest contained vertex.
    pub fn components(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for start in 0..self.vertex_count {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = next;
            while let Some(v) = stack.pop() {
                for &(w, _) in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }
}

/// Positive integer cost per edge index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCosts {
    cost: Vec<u64>,
}

impl EdgeCosts {
    pub fn new(cost: Vec<u64>, graph: &Graph) -> Result<Self> {
        if cost.len() != graph.edge_count() {
            return Err(Error::Input(format!(
                "expected {} edge costs, got {}",
                graph.edge_count(),
                cost.len()
            )));
        }
        if let Some(pos) = cost.iter().position(|&c| c == 0) {
            return Err(Error::Input(format!(
                "edge {pos} has cost 0; costs must be >= 1"
            )));
        }
        Ok(EdgeCosts { cost })
    }

    pub fn unit(graph: &Graph) -> Self {
        EdgeCosts {
            cost: vec![1; graph.edge_count()],
        }
    }

    pub fn get(&self, edge: usize) -> u64 {
        self.cost[edge]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.cost
    }

    pub fn total<'a>(&self, edges: impl IntoIterator<Item = &'a usize>) -> u64 {
        edges.into_iter().map(|&e| self.cost[e]).sum()
    }
}

/// A habitat: a set of at least two vertices that must induce a connected
/// subgraph under the chosen edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Habitat {
    vertices: Vec<usize>,
}

impl Habitat {
    pub fn new(vertices: impl IntoIterator<Item = usize>, graph: &Graph) -> Result<Self> {
        let set: BTreeSet<usize> = vertices.into_iter().collect();
        if set.len() < 2 {
            return Err(Error::Input(format!(
                "habitat has {} vertices; need >= 2",
                set.len()
            )));
        }
        for &v in &set {
            if v >= graph.vertex_count() {
                return Err(Error::InvalidVertex {
                    index: v,
                    count: graph.vertex_count(),
                });
            }
        }
        Ok(Habitat {
            vertices: set.into_iter().collect(),
        })
    }

    /// Sorted, deduplicated vertex list.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// Shape of the subgraph induced by a habitat.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HabitatClass {
    /// Exactly two vertices joined by one edge.
    P2,
    /// Connected with |E| = |V| - 1 (and more than two vertices).
    Tree,
    /// Connected and 2-regular.
    Cycle,
    /// Anything else, including disconnected induced subgraphs.
    Other,
}

/// A problem instance: graph, costs, habitats, and an optional budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub costs: EdgeCosts,
    pub habitats: Vec<Habitat>,
    pub budget: Option<u64>,
}

impl Instance {
    pub fn new(
        graph: Graph,
        costs: EdgeCosts,
        habitats: Vec<Habitat>,
        budget: Option<u64>,
    ) -> Self {
        Instance {
            graph,
            costs,
            habitats,
            budget,
        }
    }

    /// Edge indices induced by at least one habitat, sorted ascending.
    pub fn covered_edges(&self) -> Vec<usize> {
        let mut covered = Vec::new();
        for (i, &(u, v)) in self.graph.edges().iter().enumerate() {
            if self.habitats.iter().any(|h| h.contains(u) && h.contains(v)) {
                covered.push(i);
            }
        }
        covered
    }
}

/// A candidate solution: a set of edge indices and its total cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub edge_indices: BTreeSet<usize>,
    pub total_cost: u64,
}

impl Solution {
    /// Builds a solution from edge indices, computing the cost.
    pub fn from_edges(edges: impl IntoIterator<Item = usize>, costs: &EdgeCosts) -> Self {
        let edge_indices: BTreeSet<usize> = edges.into_iter().collect();
        let total_cost = costs.total(edge_indices.iter());
        Solution {
            edge_indices,
            total_cost,
        }
    }
}

/// Outcome of checking a solution against an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verification {
    /// Every habitat induces a connected subgraph under the solution edges.
    pub feasible: bool,
    /// No budget present, or total cost within it.
    pub within_budget: bool,
}

/// Subgraph of `g` induced by the vertex set `vs`, plus the map from the new
/// vertex indices back to the originals.
pub fn induced_subgraph(g: &Graph, vs: &BTreeSet<usize>) -> Result<(Graph, Vec<usize>)> {
    for &v in vs {
        if v >= g.vertex_count() {
            return Err(Error::InvalidVertex {
                index: v,
                count: g.vertex_count(),
            });
        }
    }
    let back: Vec<usize> = vs.iter().copied().collect();
    let mut fwd = vec![usize::MAX; g.vertex_count()];
    for (new, &old) in back.iter().enumerate() {
        fwd[old] = new;
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| vs.contains(&u) && vs.contains(&v))
        .map(|&(u, v)| (fwd[u], fwd[v]))
        .collect();
    Ok((Graph::new(back.len(), edges)?, back))
}

/// Subgraph of `g` induced by the edge set `f`; its vertex set is exactly the
/// union of the endpoints. Also returns the vertex map back to `g`.
pub fn edge_induced_subgraph(g: &Graph, f: &BTreeSet<usize>) -> Result<(Graph, Vec<usize>)> {
    let mut vs = BTreeSet::new();
    for &e in f {
        let (u, v) = g.edge(e)?;
        vs.insert(u);
        vs.insert(v);
    }
    let back: Vec<usize> = vs.iter().copied().collect();
    let mut fwd = vec![usize::MAX; g.vertex_count()];
    for (new, &old) in back.iter().enumerate() {
        fwd[old] = new;
    }
    let edges: Vec<(usize, usize)> = f
        .iter()
        .map(|&e| {
            let (u, v) = g.edges()[e];
            (fwd[u], fwd[v])
        })
        .collect();
    Ok((Graph::new(back.len(), edges)?, back))
}

/// True iff `h` lies inside the vertex set of `G[f]` and the subgraph of
/// `G[f]` induced on `h` is connected. Traversal is restricted to edges of
/// `f` with both endpoints in `h`.
pub fn is_connected_on(g: &Graph, f: &BTreeSet<usize>, h: &Habitat) -> Result<bool> {
    for &e in f {
        if e >= g.edge_count() {
            return Err(Error::InvalidEdge {
                index: e,
                count: g.edge_count(),
            });
        }
    }
    // Every habitat vertex must be an endpoint of some selected edge.
    let mut touched = vec![false; g.vertex_count()];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for &e in f {
        let (u, v) = g.edges()[e];
        touched[u] = true;
        touched[v] = true;
        if h.contains(u) && h.contains(v) {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    if h.vertices().iter().any(|&v| !touched[v]) {
        return Ok(false);
    }
    let start = h.vertices()[0];
    let mut seen = vec![false; g.vertex_count()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    Ok(reached == h.len())
}

/// Checks a solution: habitat connectivity and budget. Fails with an
/// integrity error when the stored cost disagrees with the recomputed one.
pub fn verify_solution(inst: &Instance, sol: &Solution) -> Result<Verification> {
    let recomputed = inst.costs.total(sol.edge_indices.iter());
    for &e in &sol.edge_indices {
        if e >= inst.graph.edge_count() {
            return Err(Error::InvalidEdge {
                index: e,
                count: inst.graph.edge_count(),
            });
        }
    }
    if recomputed != sol.total_cost {
        return Err(Error::Integrity(format!(
            "stored cost {} != recomputed cost {}",
            sol.total_cost, recomputed
        )));
    }
    let mut feasible = true;
    for h in &inst.habitats {
        if !is_connected_on(&inst.graph, &sol.edge_indices, h)? {
            feasible = false;
            break;
        }
    }
    let within_budget = inst.budget.is_none_or(|k| sol.total_cost <= k);
    Ok(Verification {
        feasible,
        within_budget,
    })
}

/// Classifies the subgraph of `g` induced by `h`.
pub fn classify_habitat(g: &Graph, h: &Habitat) -> HabitatClass {
    let vs: BTreeSet<usize> = h.vertices().iter().copied().collect();
    let (sub, _) = induced_subgraph(g, &vs).expect("habitat vertices validated on construction");
    let n = sub.vertex_count();
    let m = sub.edge_count();
    let connected = n > 0 && sub.components().iter().all(|&c| c == 0);
    if n == 2 && m == 1 {
        return HabitatClass::P2;
    }
    if connected && m == n - 1 {
        return HabitatClass::Tree;
    }
    if connected && m == n && (0..n).all(|v| sub.degree(v) == 2) {
        return HabitatClass::Cycle;
    }
    HabitatClass::Other
}
