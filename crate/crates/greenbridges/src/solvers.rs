//! Problem-level solvers: matching-based and set-packing-based exact solvers
//! for cycle habitats, a generic branch-and-cut for arbitrary habitats, the
//! polynomial special cases (tree habitats, maximum degree two), the K4 data
//! reduction, and a brute-force oracle.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use crate::approx::mst_on_induced;
use crate::error::{Error, Result};
use crate::graph::{
    classify_habitat, is_connected_on, verify_solution, EdgeCosts, Graph, Habitat, HabitatClass,
    Instance, Solution,
};
use crate::habitat_graph::{build_habitat_graph, matching_to_solution, simplify};
use crate::matching::max_weight_matching;
use crate::setpacking::max_weight_set_packing;

/// How a solve call ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// The solution is feasible and provably minimum.
    Optimal,
    /// The deadline expired; the solution (if any) is the best incumbent and
    /// `lower_bound` bounds the optimum from below.
    TimeoutIncumbent,
    /// Some habitat is disconnected in the input graph; no solution exists.
    InfeasibleInput,
    /// The instance is outside this solver's habitat class.
    UnsupportedHabitats,
    /// Feasible but without an optimality proof (heuristic solvers).
    Feasible,
}

/// Outcome of a solver run.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub solution: Option<Solution>,
    pub status: SolveStatus,
    pub wall_time: Duration,
    /// Lower bound on the optimal cost, when the solver can provide one.
    pub lower_bound: Option<u64>,
}

impl SolveResult {
    fn finish(start: Instant, status: SolveStatus, solution: Option<Solution>) -> Self {
        let lower_bound = match status {
            SolveStatus::Optimal => solution.as_ref().map(|s| s.total_cost),
            _ => None,
        };
        SolveResult {
            solution,
            status,
            wall_time: start.elapsed(),
            lower_bound,
        }
    }
}

/// True when every habitat is connected in the full graph; a necessary and
/// sufficient condition for a feasible solution to exist.
fn habitats_connected_in_g(inst: &Instance) -> bool {
    let all: BTreeSet<usize> = (0..inst.graph.edge_count()).collect();
    inst.habitats
        .iter()
        .all(|h| is_connected_on(&inst.graph, &all, h).unwrap_or(false))
}

/// A_mwm: exact solver for cycle habitats where, after simplification, every
/// edge lies in at most two habitats.
pub fn solve_mwm(inst: &Instance) -> SolveResult {
    let start = Instant::now();
    let hg = match build_habitat_graph(inst) {
        Ok(hg) => simplify(&hg),
        Err(_) => return SolveResult::finish(start, SolveStatus::UnsupportedHabitats, None),
    };
    let wg = match hg.as_weighted_graph() {
        Ok(wg) => wg,
        Err(_) => return SolveResult::finish(start, SolveStatus::UnsupportedHabitats, None),
    };
    let matching = max_weight_matching(&wg);
    // Weighted-graph edge position k is hyperedge position k by construction.
    let sol =
        matching_to_solution(inst, &hg, &matching.edges).expect("blossom output is a matching");
    SolveResult::finish(start, SolveStatus::Optimal, Some(sol))
}

/// A_mwhm: exact solver for arbitrary cycle habitats via weighted set packing.
pub fn solve_mwhm(inst: &Instance, time_limit: Option<Duration>) -> SolveResult {
    let start = Instant::now();
    let hg = match build_habitat_graph(inst) {
        Ok(hg) => simplify(&hg),
        Err(_) => return SolveResult::finish(start, SolveStatus::UnsupportedHabitats, None),
    };
    let deadline = time_limit.map(|d| start + d);
    let packing = max_weight_set_packing(&hg, deadline).expect("simplified by construction");
    let sol =
        matching_to_solution(inst, &hg, &packing.positions).expect("packing output is a matching");
    if packing.timed_out {
        let covered_cost = inst.costs.total(inst.covered_edges().iter());
        let lower_bound = covered_cost.saturating_sub(packing.upper_bound);
        return SolveResult {
            solution: Some(sol),
            status: SolveStatus::TimeoutIncumbent,
            wall_time: start.elapsed(),
            lower_bound: Some(lower_bound),
        };
    }
    SolveResult::finish(start, SolveStatus::Optimal, Some(sol))
}

/// Finds a violated connectivity cut for habitat `h` under the edge set `x`,
/// or `None` when `h` is already connected. The returned cut is δ_H(S): all
/// graph edges between S and H \ S, where S is the component of `G[x][h]`
/// containing the lowest-index vertex of `h`.
pub fn separate_connectivity_cut(
    inst: &Instance,
    x: &BTreeSet<usize>,
    h: &Habitat,
) -> Option<BTreeSet<usize>> {
    // Components of the subgraph on h's vertices using only edges of x.
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); inst.graph.vertex_count()];
    for &e in x {
        let (u, v) = inst.graph.edges()[e];
        if h.contains(u) && h.contains(v) {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let start = h.vertices()[0];
    let mut in_s = vec![false; inst.graph.vertex_count()];
    in_s[start] = true;
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !in_s[w] {
                in_s[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    if reached == h.len() {
        return None;
    }
    let cut: BTreeSet<usize> = (0..inst.graph.edge_count())
        .filter(|&e| {
            let (u, v) = inst.graph.edges()[e];
            h.contains(u) && h.contains(v) && in_s[u] != in_s[v]
        })
        .collect();
    Some(cut)
}

/// Largest single-habitat lower bound: any solution restricted to a habitat
/// must connect it, which costs at least its induced MST.
fn mst_lower_bound(inst: &Instance) -> u64 {
    inst.habitats
        .iter()
        .filter_map(|h| {
            mst_on_induced(&inst.graph, &inst.costs, h)
                .ok()
                .map(|t| inst.costs.total(t.iter()))
        })
        .max()
        .unwrap_or(0)
}

/// Habitats grouped into clusters that share covered edges; clusters can be
/// optimized independently and their solutions unioned.
fn habitat_clusters(inst: &Instance) -> Vec<Vec<usize>> {
    let r = inst.habitats.len();
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(u, v) in inst.graph.edges() {
        let mut owners = (0..r).filter(|&i| {
            let h = &inst.habitats[i];
            h.contains(u) && h.contains(v)
        });
        if let Some(first) = owners.next() {
            let root = find(&mut parent, first);
            for other in owners {
                let r2 = find(&mut parent, other);
                parent[r2] = root;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..r {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(i);
    }
    groups.into_values().collect()
}

struct GenericSearch<'a> {
    inst: &'a Instance,
    habitats: Vec<&'a Habitat>,
    /// Covered edges of this cluster, in ascending index order.
    edges: Vec<usize>,
    cuts: Vec<BTreeSet<usize>>,
    best_cost: u64,
    best: Option<BTreeSet<usize>>,
    deadline: Option<Instant>,
    ticks: u32,
    timed_out: bool,
}

impl<'a> GenericSearch<'a> {
    fn hit_deadline(&mut self) -> bool {
        if self.timed_out {
            return true;
        }
        self.ticks += 1;
        if self.ticks.is_multiple_of(256) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    /// DFS over cluster edges; `included` holds chosen edges, `i` indexes
    /// into `self.edges`. Excluding first reaches cheap candidates early.
    fn dfs(&mut self, i: usize, included: &mut BTreeSet<usize>, cost: u64) {
        if self.hit_deadline() || cost >= self.best_cost {
            return;
        }
        // A cut whose edges are all already decided against cannot be
        // satisfied anywhere below this node.
        let undecided: Vec<usize> = self.edges[i..].to_vec();
        for cut in &self.cuts {
            if cut.iter().all(|e| !included.contains(e)) {
                let open = cut.iter().any(|e| undecided.binary_search(e).is_ok());
                if !open {
                    return;
                }
            }
        }
        if i == self.edges.len() {
            // Integral candidate: either feasible or it yields a new cut.
            for h in &self.habitats {
                if let Some(cut) = separate_connectivity_cut(self.inst, included, h) {
                    debug_assert!(self
                        .best
                        .as_ref()
                        .is_none_or(|b| cut.iter().any(|e| b.contains(e))));
                    self.cuts.push(cut);
                    return;
                }
            }
            self.best_cost = cost;
            self.best = Some(included.clone());
            return;
        }
        let e = self.edges[i];
        self.dfs(i + 1, included, cost);
        included.insert(e);
        self.dfs(i + 1, included, cost + self.inst.costs.get(e));
        included.remove(&e);
    }
}

/// A_gen: branch and cut over habitat-covered edges with lazily separated
/// connectivity cuts; handles arbitrary habitats.
pub fn solve_generic(inst: &Instance, time_limit: Option<Duration>) -> SolveResult {
    let start = Instant::now();
    if !habitats_connected_in_g(inst) {
        return SolveResult::finish(start, SolveStatus::InfeasibleInput, None);
    }
    let deadline = time_limit.map(|d| start + d);

    let mut all_edges = BTreeSet::new();
    let mut timed_out = false;
    for cluster in habitat_clusters(inst) {
        let habitats: Vec<&Habitat> = cluster.iter().map(|&i| &inst.habitats[i]).collect();
        let edges: Vec<usize> = (0..inst.graph.edge_count())
            .filter(|&e| {
                let (u, v) = inst.graph.edges()[e];
                habitats.iter().any(|h| h.contains(u) && h.contains(v))
            })
            .collect();
        let mut search = GenericSearch {
            inst,
            habitats,
            edges,
            cuts: Vec::new(),
            best_cost: u64::MAX,
            best: None,
            deadline,
            ticks: 0,
            timed_out: false,
        };
        // Feasible warm start: all cluster edges. Guarantees an incumbent
        // exists even under a tight deadline.
        let full: BTreeSet<usize> = search.edges.iter().copied().collect();
        search.best_cost = inst.costs.total(full.iter());
        search.best = Some(full);
        let mut included = BTreeSet::new();
        search.dfs(0, &mut included, 0);
        timed_out |= search.timed_out;
        all_edges.extend(search.best.expect("warm start present"));
    }

    let sol = Solution::from_edges(all_edges, &inst.costs);
    debug_assert!(verify_solution(inst, &sol).unwrap().feasible);
    if timed_out {
        return SolveResult {
            solution: Some(sol),
            status: SolveStatus::TimeoutIncumbent,
            wall_time: start.elapsed(),
            lower_bound: Some(mst_lower_bound(inst)),
        };
    }
    SolveResult::finish(start, SolveStatus::Optimal, Some(sol))
}

/// Polynomial case: every habitat induces a tree (including single edges).
/// The solution is forced: each induced tree edge is the only path between
/// its endpoints inside the habitat.
pub fn solve_tree_habitats(inst: &Instance) -> SolveResult {
    let start = Instant::now();
    for h in &inst.habitats {
        match classify_habitat(&inst.graph, h) {
            HabitatClass::Tree | HabitatClass::P2 => {}
            _ => return SolveResult::finish(start, SolveStatus::UnsupportedHabitats, None),
        }
    }
    let edges = inst.covered_edges();
    let sol = Solution::from_edges(edges, &inst.costs);
    SolveResult::finish(start, SolveStatus::Optimal, Some(sol))
}

/// Polynomial case Δ(G) ≤ 2: components are paths and cycles. Path-inducing
/// habitats force their edges; a habitat inducing a full cycle component lets
/// exactly one unforced edge of maximum cost be omitted.
pub fn solve_maxdeg2(inst: &Instance) -> SolveResult {
    let start = Instant::now();
    if inst.graph.max_degree() > 2 {
        return SolveResult::finish(start, SolveStatus::UnsupportedHabitats, None);
    }
    if !habitats_connected_in_g(inst) {
        return SolveResult::finish(start, SolveStatus::InfeasibleInput, None);
    }
    let comp = inst.graph.components();
    let mut forced = BTreeSet::new();
    let mut cycle_components = BTreeSet::new();
    for h in &inst.habitats {
        match classify_habitat(&inst.graph, h) {
            HabitatClass::Cycle => {
                // In a Δ≤2 graph a habitat inducing a cycle is a whole
                // cycle component.
                cycle_components.insert(comp[h.vertices()[0]]);
            }
            _ => {
                for e in 0..inst.graph.edge_count() {
                    let (u, v) = inst.graph.edges()[e];
                    if h.contains(u) && h.contains(v) {
                        forced.insert(e);
                    }
                }
            }
        }
    }
    let mut chosen = forced.clone();
    for &c in &cycle_components {
        let cycle_edges: Vec<usize> = (0..inst.graph.edge_count())
            .filter(|&e| comp[inst.graph.edges()[e].0] == c)
            .collect();
        let unforced: Vec<usize> = cycle_edges
            .iter()
            .copied()
            .filter(|e| !forced.contains(e))
            .collect();
        // Omit one unforced edge of maximum cost (lowest index among ties);
        // if everything is forced there is nothing to save.
        let omit = unforced
            .iter()
            .copied()
            .max_by_key(|&e| (inst.costs.get(e), std::cmp::Reverse(e)));
        for e in cycle_edges {
            if Some(e) != omit {
                chosen.insert(e);
            }
        }
    }
    let sol = Solution::from_edges(chosen, &inst.costs);
    SolveResult::finish(start, SolveStatus::Optimal, Some(sol))
}

/// Data reduction for Δ(G) ≤ 3 with triangle habitats: a vertex lying in
/// three habitats certifies that its closed neighborhood is a K4 component,
/// which can be solved locally and removed. Returns the reduced instance and
/// the cost contributed by removed components; in the result, every edge lies
/// in at most two habitats.
pub fn apply_k4_reduction(inst: &Instance) -> Result<(Instance, u64)> {
    if inst.graph.max_degree() > 3 {
        return Err(Error::Precondition(
            "reduction requires maximum degree 3".into(),
        ));
    }
    for (i, h) in inst.habitats.iter().enumerate() {
        if h.len() != 3 || classify_habitat(&inst.graph, h) != HabitatClass::Cycle {
            return Err(Error::Precondition(format!(
                "habitat {i} does not induce a triangle"
            )));
        }
    }

    let n = inst.graph.vertex_count();
    let mut removed = vec![false; n];
    let mut accumulated = 0u64;
    for v in 0..n {
        if removed[v] {
            continue;
        }
        let containing: Vec<usize> = (0..inst.habitats.len())
            .filter(|&i| inst.habitats[i].contains(v))
            .collect();
        if containing.len() < 3 {
            continue;
        }
        // N[v] must be a K4 forming its own component.
        let mut closed: BTreeSet<usize> = [v].into();
        for &(a, b) in inst.graph.edges() {
            if a == v {
                closed.insert(b);
            } else if b == v {
                closed.insert(a);
            }
        }
        let is_k4_component = closed.len() == 4
            && closed.iter().all(|&u| inst.graph.degree(u) == 3)
            && inst
                .graph
                .edges()
                .iter()
                .filter(|&&(a, b)| closed.contains(&a) && closed.contains(&b))
                .count()
                == 6;
        if !is_k4_component {
            return Err(Error::Integrity(format!(
                "vertex {v} lies in three habitats but N[{v}] is not a K4 component"
            )));
        }
        // Solve the component locally over its 6 edges.
        let local_edges: Vec<usize> = (0..inst.graph.edge_count())
            .filter(|&e| {
                let (a, b) = inst.graph.edges()[e];
                closed.contains(&a) && closed.contains(&b)
            })
            .collect();
        let local_habitats: Vec<&Habitat> = inst
            .habitats
            .iter()
            .filter(|h| h.vertices().iter().all(|u| closed.contains(u)))
            .collect();
        let mut best = u64::MAX;
        for mask in 0u32..(1 << local_edges.len()) {
            let f: BTreeSet<usize> = local_edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if local_habitats
                .iter()
                .all(|h| is_connected_on(&inst.graph, &f, h).unwrap_or(false))
            {
                best = best.min(inst.costs.total(f.iter()));
            }
        }
        accumulated += best;
        for &u in &closed {
            removed[u] = true;
        }
    }

    // Reindex the surviving vertices, edges, and habitats.
    let mut fwd = vec![usize::MAX; n];
    let mut kept = 0;
    for v in 0..n {
        if !removed[v] {
            fwd[v] = kept;
            kept += 1;
        }
    }
    let mut edges = Vec::new();
    let mut costs = Vec::new();
    for (e, &(u, v)) in inst.graph.edges().iter().enumerate() {
        if !removed[u] && !removed[v] {
            edges.push((fwd[u], fwd[v]));
            costs.push(inst.costs.get(e));
        }
    }
    let graph = Graph::new(kept, edges)?;
    let costs = EdgeCosts::new(costs, &graph)?;
    let habitats: Vec<Habitat> = inst
        .habitats
        .iter()
        .filter(|h| h.vertices().iter().all(|&v| !removed[v]))
        .map(|h| Habitat::new(h.vertices().iter().map(|&v| fwd[v]), &graph))
        .collect::<Result<_>>()?;
    let reduced = Instance::new(graph, costs, habitats, inst.budget);
    Ok((reduced, accumulated))
}

/// Ground-truth oracle: enumerates subsets of the habitat-covered edges in
/// ascending mask order, keeping the first minimum found.
pub fn solve_brute_force(inst: &Instance) -> Result<SolveResult> {
    let start = Instant::now();
    let covered = inst.covered_edges();
    if covered.len() > 22 {
        return Err(Error::GuardExceeded(format!(
            "brute force limited to 22 covered edges, got {}",
            covered.len()
        )));
    }
    if !habitats_connected_in_g(inst) {
        return Ok(SolveResult::finish(
            start,
            SolveStatus::InfeasibleInput,
            None,
        ));
    }
    let mut best_cost = u64::MAX;
    let mut best: Option<BTreeSet<usize>> = None;
    for mask in 0u64..(1 << covered.len()) {
        let f: BTreeSet<usize> = covered
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let cost = inst.costs.total(f.iter());
        if cost >= best_cost {
            continue;
        }
        if inst
            .habitats
            .iter()
            .all(|h| is_connected_on(&inst.graph, &f, h).unwrap_or(false))
        {
            best_cost = cost;
            best = Some(f);
        }
    }
    let sol = Solution::from_edges(best.expect("covered set is feasible"), &inst.costs);
    Ok(SolveResult::finish(start, SolveStatus::Optimal, Some(sol)))
}

/// Picks the most specialized applicable solver: tree habitats, then Δ≤2,
/// then matching, then set packing, then the generic branch and cut.
pub fn solve_auto(inst: &Instance, time_limit: Option<Duration>) -> SolveResult {
    let classes: Vec<HabitatClass> = inst
        .habitats
        .iter()
        .map(|h| classify_habitat(&inst.graph, h))
        .collect();
    if classes
        .iter()
        .all(|c| matches!(c, HabitatClass::Tree | HabitatClass::P2))
    {
        return solve_tree_habitats(inst);
    }
    if inst.graph.max_degree() <= 2 {
        let res = solve_maxdeg2(inst);
        if res.status != SolveStatus::UnsupportedHabitats {
            return res;
        }
    }
    if classes.iter().all(|&c| c == HabitatClass::Cycle) {
        let res = solve_mwm(inst);
        if res.status != SolveStatus::UnsupportedHabitats {
            return res;
        }
        return solve_mwhm(inst, time_limit);
    }
    solve_generic(inst, time_limit)
}
