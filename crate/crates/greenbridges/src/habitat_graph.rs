//! The habitat graph: a weighted multi-hypergraph over habitats whose
//! matchings are exactly the removable edge sets of a cycle-habitat instance.
//!
//! Each habitat becomes a node. An original edge induced by two or more
//! habitats becomes a hyperedge over those habitat nodes; an edge induced by
//! exactly one habitat gets a fresh pendant node and a pendant hyperedge.
//! A set of original edges can be omitted from a solution simultaneously if
//! and only if its hyperedges form a matching, so minimizing solution cost is
//! maximizing matching weight.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{classify_habitat, is_connected_on, HabitatClass, Instance, Solution};
use crate::matching::WeightedGraph;

/// One hyperedge of the habitat graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperedge {
    /// Sorted node indices; habitat nodes come first in the global numbering.
    pub nodes: Vec<usize>,
    /// Weight, equal to the cost of the origin edge.
    pub weight: u64,
    /// Index of the original graph edge this hyperedge stands for.
    pub origin: usize,
}

/// The weighted multi-hypergraph of a cycle-habitat instance. Nodes
/// `0..habitat_count` are habitat nodes; nodes from `habitat_count` up are
/// pendant nodes, one per edge induced by a single habitat.
#[derive(Debug, Clone)]
pub struct HabitatGraph {
    habitat_count: usize,
    node_count: usize,
    hyperedges: Vec<Hyperedge>,
    /// Position of the hyperedge standing for each origin edge.
    origin_to_position: BTreeMap<usize, usize>,
    /// Origin edges whose hyperedges were discarded by `simplify`; they can
    /// never be omitted and belong to every solution.
    forced_edges: Vec<usize>,
}

impl HabitatGraph {
    /// Assembles a habitat graph directly from hyperedges. Nodes below
    /// `habitat_count` are habitat nodes; origins must be distinct.
    pub fn from_hyperedges(
        habitat_count: usize,
        node_count: usize,
        hyperedges: Vec<Hyperedge>,
    ) -> Result<Self> {
        let mut origin_to_position = BTreeMap::new();
        for (pos, he) in hyperedges.iter().enumerate() {
            if he.nodes.len() < 2 {
                return Err(Error::Input(format!(
                    "hyperedge {pos} has {} nodes; need >= 2",
                    he.nodes.len()
                )));
            }
            if !he.nodes.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::Input(format!(
                    "hyperedge {pos} nodes not sorted unique"
                )));
            }
            if *he.nodes.last().unwrap() >= node_count {
                return Err(Error::InvalidVertex {
                    index: *he.nodes.last().unwrap(),
                    count: node_count,
                });
            }
            if he.weight == 0 {
                return Err(Error::Input(format!("hyperedge {pos} has weight 0")));
            }
            if origin_to_position.insert(he.origin, pos).is_some() {
                return Err(Error::Input(format!("duplicate origin edge {}", he.origin)));
            }
        }
        Ok(HabitatGraph {
            habitat_count,
            node_count,
            hyperedges,
            origin_to_position,
            forced_edges: Vec::new(),
        })
    }

    pub fn habitat_count(&self) -> usize {
        self.habitat_count
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn hyperedges(&self) -> &[Hyperedge] {
        &self.hyperedges
    }

    /// Origin edges forced into every solution by simplification.
    pub fn forced_edges(&self) -> &[usize] {
        &self.forced_edges
    }

    /// Position of the hyperedge standing for origin edge `e`, if any.
    pub fn position_of_origin(&self, e: usize) -> Option<usize> {
        self.origin_to_position.get(&e).copied()
    }

    /// True when `node` is a pendant node rather than a habitat node.
    pub fn is_pendant_node(&self, node: usize) -> bool {
        node >= self.habitat_count
    }

    /// Largest hyperedge cardinality among non-pendant hyperedges: the
    /// maximum number of habitats sharing a single edge. Falls back to 1 when
    /// every hyperedge is pendant (each edge in exactly one habitat) and to 0
    /// on an empty hypergraph.
    pub fn max_habitats_per_edge(&self) -> usize {
        let mut best = if self.hyperedges.is_empty() { 0 } else { 1 };
        for he in &self.hyperedges {
            if he.nodes.iter().all(|&n| !self.is_pendant_node(n)) {
                best = best.max(he.nodes.len());
            }
        }
        best
    }

    /// View as an ordinary weighted graph, with graph-edge position k equal
    /// to hyperedge position k. Requires a simplified hypergraph in which
    /// every hyperedge has cardinality 2.
    pub fn as_weighted_graph(&self) -> Result<WeightedGraph> {
        let mut edges = Vec::with_capacity(self.hyperedges.len());
        for he in &self.hyperedges {
            if he.nodes.len() != 2 {
                return Err(Error::Precondition(format!(
                    "hyperedge for edge {} spans {} habitats; not a plain graph",
                    he.origin,
                    he.nodes.len()
                )));
            }
            edges.push((he.nodes[0], he.nodes[1], he.weight));
        }
        WeightedGraph::new(self.node_count, edges)
    }
}

/// Builds the habitat graph of an instance whose habitats all induce cycles.
pub fn build_habitat_graph(inst: &Instance) -> Result<HabitatGraph> {
    for (i, h) in inst.habitats.iter().enumerate() {
        if classify_habitat(&inst.graph, h) != HabitatClass::Cycle {
            return Err(Error::Precondition(format!(
                "habitat {i} does not induce a cycle"
            )));
        }
    }
    let habitat_count = inst.habitats.len();
    let mut node_count = habitat_count;
    let mut hyperedges = Vec::new();
    let mut origin_to_position = BTreeMap::new();
    for e in inst.covered_edges() {
        let (u, v) = inst.graph.edges()[e];
        let mut nodes: Vec<usize> = inst
            .habitats
            .iter()
            .enumerate()
            .filter(|(_, h)| h.contains(u) && h.contains(v))
            .map(|(i, _)| i)
            .collect();
        if nodes.len() == 1 {
            // Pendant node for an edge in exactly one habitat.
            nodes.push(node_count);
            node_count += 1;
        }
        nodes.sort_unstable();
        origin_to_position.insert(e, hyperedges.len());
        hyperedges.push(Hyperedge {
            nodes,
            weight: inst.costs.get(e),
            origin: e,
        });
    }
    Ok(HabitatGraph {
        habitat_count,
        node_count,
        hyperedges,
        origin_to_position,
        forced_edges: Vec::new(),
    })
}

/// Among hyperedges with identical node sets, keeps exactly one of maximum
/// weight (ties by lowest origin edge index). The discarded origins can never
/// all be omitted together, so they are recorded as forced into the solution.
pub fn simplify(hg: &HabitatGraph) -> HabitatGraph {
    let mut best_by_nodes: BTreeMap<&[usize], usize> = BTreeMap::new();
    for (pos, he) in hg.hyperedges.iter().enumerate() {
        match best_by_nodes.get(&he.nodes.as_slice()) {
            Some(&prev) if hg.hyperedges[prev].weight >= he.weight => {}
            _ => {
                best_by_nodes.insert(&he.nodes, pos);
            }
        }
    }
    let keep: BTreeSet<usize> = best_by_nodes.into_values().collect();
    let mut hyperedges = Vec::with_capacity(keep.len());
    let mut origin_to_position = BTreeMap::new();
    let mut forced_edges = hg.forced_edges.clone();
    for (pos, he) in hg.hyperedges.iter().enumerate() {
        if keep.contains(&pos) {
            origin_to_position.insert(he.origin, hyperedges.len());
            hyperedges.push(he.clone());
        } else {
            forced_edges.push(he.origin);
        }
    }
    forced_edges.sort_unstable();
    HabitatGraph {
        habitat_count: hg.habitat_count,
        node_count: hg.node_count,
        hyperedges,
        origin_to_position,
        forced_edges,
    }
}

fn check_disjoint(hg: &HabitatGraph, m: &[usize]) -> Result<()> {
    let mut used = vec![false; hg.node_count];
    for &pos in m {
        let he = hg
            .hyperedges
            .get(pos)
            .ok_or_else(|| Error::Input(format!("hyperedge position {pos} out of range")))?;
        for &n in &he.nodes {
            if used[n] {
                return Err(Error::Precondition(format!(
                    "not a matching: node {n} covered twice"
                )));
            }
            used[n] = true;
        }
    }
    Ok(())
}

/// Turns a matching (hyperedge positions) into the solution that keeps every
/// habitat-covered edge except the matched origins.
pub fn matching_to_solution(inst: &Instance, hg: &HabitatGraph, m: &[usize]) -> Result<Solution> {
    check_disjoint(hg, m)?;
    let omitted: BTreeSet<usize> = m.iter().map(|&pos| hg.hyperedges[pos].origin).collect();
    let edges = inst
        .covered_edges()
        .into_iter()
        .filter(|e| !omitted.contains(e));
    Ok(Solution::from_edges(edges, &inst.costs))
}

/// Inverse direction: the hyperedges of covered edges missing from a feasible
/// solution form a matching.
pub fn solution_to_matching(
    inst: &Instance,
    hg: &HabitatGraph,
    f_sol: &BTreeSet<usize>,
) -> Result<Vec<usize>> {
    for (i, h) in inst.habitats.iter().enumerate() {
        if !is_connected_on(&inst.graph, f_sol, h)? {
            return Err(Error::Precondition(format!(
                "habitat {i} is disconnected under the given edge set"
            )));
        }
    }
    let m: Vec<usize> = hg
        .hyperedges
        .iter()
        .enumerate()
        .filter(|(_, he)| !f_sol.contains(&he.origin))
        .map(|(pos, _)| pos)
        .collect();
    // Guaranteed for feasible solutions: two omitted edges of one habitat
    // would disconnect its cycle. Checked anyway to catch inconsistent input.
    check_disjoint(hg, &m).map_err(|_| {
        Error::Integrity("omitted edges of a feasible solution must form a matching".into())
    })?;
    Ok(m)
}
