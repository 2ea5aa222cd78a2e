//! Exact maximum-weight hypergraph matching (weighted set packing) by
//! branch and bound.
//!
//! The problem is solved exactly per connected component by branch and bound
//! on the highest-weight undecided hyperedge, pruned with the smaller of two
//! relaxation bounds: a fractional bound where every free node contributes at
//! most the largest weight-per-cardinality ratio among its remaining incident
//! hyperedges, and a representative bound exploiting that disjoint hyperedges
//! have distinct minimum nodes, so every node contributes at most the
//! heaviest free hyperedge it represents. When neither prunes, a matching
//! relaxation is consulted: restricting each free hyperedge to its two
//! smallest nodes turns packings into matchings, so a blossom run on the
//! restriction graph bounds the packing — exactly so on rank-2 hypergraphs.
//! A cooperative deadline turns long searches into a timeout carrying the
//! best incumbent and a valid upper bound.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::habitat_graph::{HabitatGraph, Hyperedge};
use crate::matching::{max_weight_matching, WeightedGraph};

/// Result of a packing search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingOutcome {
    /// Chosen hyperedge positions, sorted ascending, pairwise node-disjoint.
    pub positions: Vec<usize>,
    /// Total weight of the chosen hyperedges (a lower bound on the optimum).
    pub weight: u64,
    /// Valid upper bound on the optimum; equals `weight` when optimal.
    pub upper_bound: u64,
    /// True when the deadline cut the search short.
    pub timed_out: bool,
}

/// Exact maximum-weight set packing over a simplified habitat graph.
pub fn max_weight_set_packing(
    hg: &HabitatGraph,
    deadline: Option<Instant>,
) -> Result<PackingOutcome> {
    let mut node_sets = BTreeSet::new();
    for he in hg.hyperedges() {
        if !node_sets.insert(&he.nodes) {
            return Err(Error::Precondition(
                "hypergraph not simplified: duplicate hyperedge node sets".into(),
            ));
        }
    }

    let mut outcome = PackingOutcome {
        positions: Vec::new(),
        weight: 0,
        upper_bound: 0,
        timed_out: false,
    };
    for component in components(hg.node_count(), hg.hyperedges()) {
        let mut search = Search::new(hg.hyperedges(), hg.node_count(), component, deadline);
        search.run();
        outcome.positions.extend(search.best_positions);
        outcome.weight += search.best_weight;
        outcome.upper_bound += if search.timed_out {
            search.root_bound
        } else {
            search.best_weight
        };
        outcome.timed_out |= search.timed_out;
    }
    outcome.positions.sort_unstable();
    Ok(outcome)
}

/// Exhaustive oracle over all hyperedge subsets. Guarded to 20 hyperedges.
pub fn brute_force_set_packing(hg: &HabitatGraph) -> Result<PackingOutcome> {
    let n = hg.hyperedges().len();
    if n > 20 {
        return Err(Error::GuardExceeded(format!(
            "brute-force set packing limited to 20 hyperedges, got {n}"
        )));
    }
    let mut best: Vec<usize> = Vec::new();
    let mut best_weight = 0u64;
    'subsets: for mask in 0u32..(1 << n) {
        let mut used = vec![false; hg.node_count()];
        let mut weight = 0u64;
        for (pos, he) in hg.hyperedges().iter().enumerate() {
            if mask >> pos & 1 == 0 {
                continue;
            }
            for &node in &he.nodes {
                if used[node] {
                    continue 'subsets;
                }
                used[node] = true;
            }
            weight += he.weight;
        }
        if weight > best_weight {
            best_weight = weight;
            best = (0..n).filter(|&p| mask >> p & 1 == 1).collect();
        }
    }
    Ok(PackingOutcome {
        positions: best,
        weight: best_weight,
        upper_bound: best_weight,
        timed_out: false,
    })
}

/// Hyperedge positions grouped by connected component of the hypergraph.
fn components(node_count: usize, hyperedges: &[Hyperedge]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..node_count).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for he in hyperedges {
        let root = find(&mut parent, he.nodes[0]);
        for &node in &he.nodes[1..] {
            let r = find(&mut parent, node);
            parent[r] = root;
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (pos, he) in hyperedges.iter().enumerate() {
        let root = find(&mut parent, he.nodes[0]);
        groups.entry(root).or_default().push(pos);
    }
    groups.into_values().collect()
}

struct Search<'a> {
    /// Component hyperedges ordered by descending weight, ties by position.
    order: Vec<usize>,
    hyperedges: &'a [Hyperedge],
    blocked: Vec<bool>,
    deadline: Option<Instant>,
    ticks: u32,
    timed_out: bool,
    best_weight: u64,
    best_positions: Vec<usize>,
    root_bound: u64,
}

impl<'a> Search<'a> {
    fn new(
        hyperedges: &'a [Hyperedge],
        node_count: usize,
        mut component: Vec<usize>,
        deadline: Option<Instant>,
    ) -> Self {
        component.sort_by_key(|&p| (std::cmp::Reverse(hyperedges[p].weight), p));
        Search {
            order: component,
            hyperedges,
            blocked: vec![false; node_count],
            deadline,
            ticks: 0,
            timed_out: false,
            best_weight: 0,
            best_positions: Vec::new(),
            root_bound: 0,
        }
    }

    fn run(&mut self) {
        self.root_bound = self.fractional_bound(0).min(self.matching_bound(0));
        let mut chosen = Vec::new();
        self.dfs(0, 0, &mut chosen);
    }

    /// Upper bound on the additional weight obtainable from hyperedges at
    /// order index >= `from` whose nodes are all free: the smaller of
    ///
    /// * the fractional relaxation — every free node contributes its best
    ///   weight-per-cardinality ratio (overestimates are harmless; the float
    ///   sum is padded before rounding up), and
    /// * the representative bound — disjoint hyperedges have distinct
    ///   minimum nodes, so each node contributes at most the heaviest
    ///   hyperedge it represents. This is what tames pendant-heavy habitat
    ///   graphs, where many hyperedges compete for one habitat node.
    fn fractional_bound(&self, from: usize) -> u64 {
        let mut per_node: std::collections::BTreeMap<usize, (f64, u64)> = Default::default();
        for &pos in &self.order[from..] {
            let he = &self.hyperedges[pos];
            if he.nodes.iter().any(|&n| self.blocked[n]) {
                continue;
            }
            let ratio = he.weight as f64 / he.nodes.len() as f64;
            for &node in &he.nodes {
                let entry = per_node.entry(node).or_insert((0.0, 0));
                if ratio > entry.0 {
                    entry.0 = ratio;
                }
            }
            let rep = per_node
                .get_mut(&he.nodes[0])
                .expect("representative just inserted");
            if he.weight > rep.1 {
                rep.1 = he.weight;
            }
        }
        let fractional = per_node.values().map(|&(r, _)| r).sum::<f64>() + 1e-6;
        let representative: u64 = per_node.values().map(|&(_, w)| w).sum();
        (fractional.ceil() as u64).min(representative)
    }

    /// Matching relaxation bound: restricting every free hyperedge to its two
    /// smallest nodes maps any packing to an equal-weight matching of the
    /// restriction graph, so that graph's maximum-weight matching bounds the
    /// packing. Exact when all hyperedges have rank 2; costs a blossom run,
    /// so it is consulted only after the cheap bound fails to prune.
    fn matching_bound(&self, from: usize) -> u64 {
        let mut best: std::collections::BTreeMap<(usize, usize), u64> = Default::default();
        for &pos in &self.order[from..] {
            let he = &self.hyperedges[pos];
            if he.nodes.iter().any(|&n| self.blocked[n]) {
                continue;
            }
            let slot = best.entry((he.nodes[0], he.nodes[1])).or_insert(0);
            *slot = (*slot).max(he.weight);
        }
        let mut local: std::collections::BTreeMap<usize, usize> = Default::default();
        let mut edges = Vec::with_capacity(best.len());
        for (&(u, v), &w) in &best {
            let next = local.len();
            let lu = *local.entry(u).or_insert(next);
            let next = local.len();
            let lv = *local.entry(v).or_insert(next);
            edges.push((lu, lv, w));
        }
        let wg = WeightedGraph::new(local.len(), edges)
            .expect("restriction graph is simple with positive weights");
        max_weight_matching(&wg).weight
    }

    fn hit_deadline(&mut self) -> bool {
        if self.timed_out {
            return true;
        }
        self.ticks += 1;
        if self.ticks.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    fn dfs(&mut self, mut i: usize, current: u64, chosen: &mut Vec<usize>) {
        if self.hit_deadline() {
            return;
        }
        // Hyperedges conflicting with the current choice are forced out.
        while i < self.order.len() {
            let he = &self.hyperedges[self.order[i]];
            if he.nodes.iter().any(|&n| self.blocked[n]) {
                i += 1;
            } else {
                break;
            }
        }
        if current > self.best_weight {
            self.best_weight = current;
            self.best_positions = chosen.clone();
        }
        if i == self.order.len() {
            return;
        }
        if current + self.fractional_bound(i) <= self.best_weight {
            return;
        }
        if current + self.matching_bound(i) <= self.best_weight {
            return;
        }
        // Include the highest-weight undecided hyperedge…
        let pos = self.order[i];
        let weight = self.hyperedges[pos].weight;
        for idx in 0..self.hyperedges[pos].nodes.len() {
            let node = self.hyperedges[pos].nodes[idx];
            self.blocked[node] = true;
        }
        chosen.push(pos);
        self.dfs(i + 1, current + weight, chosen);
        chosen.pop();
        for idx in 0..self.hyperedges[pos].nodes.len() {
            let node = self.hyperedges[pos].nodes[idx];
            self.blocked[node] = false;
        }
        // …or exclude it.
        self.dfs(i + 1, current, chosen);
    }
}
