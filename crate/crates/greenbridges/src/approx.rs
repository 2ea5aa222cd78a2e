//! The approximation solver: one minimum spanning tree per habitat's induced
//! subgraph, unioned over all habitats.
//!
//! The union is feasible by construction. On instances whose habitats all
//! induce cycles it is at most r·c_max above the optimum, where r is the
//! habitat count and c_max the largest edge cost: each per-habitat tree
//! contains at most one edge outside some fixed optimal solution.

use crate::error::{Error, Result};
use crate::graph::{EdgeCosts, Graph, Habitat, Instance, Solution};
use crate::solvers::{SolveResult, SolveStatus};

/// Minimum spanning tree of `G[h]`, as edge indices of `g`. Kruskal with ties
/// broken by global edge index, so overlapping habitats prefer the same edges.
pub fn mst_on_induced(g: &Graph, c: &EdgeCosts, h: &Habitat) -> Result<Vec<usize>> {
    let mut induced: Vec<usize> = (0..g.edge_count())
        .filter(|&e| {
            let (u, v) = g.edges()[e];
            h.contains(u) && h.contains(v)
        })
        .collect();
    induced.sort_by_key(|&e| (c.get(e), e));

    // Union-find over habitat vertices (positions within the sorted list).
    let index_of = |v: usize| h.vertices().binary_search(&v).unwrap();
    let mut parent: Vec<usize> = (0..h.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut tree = Vec::with_capacity(h.len().saturating_sub(1));
    for e in induced {
        let (u, v) = g.edges()[e];
        let (ru, rv) = (
            find(&mut parent, index_of(u)),
            find(&mut parent, index_of(v)),
        );
        if ru != rv {
            parent[ru] = rv;
            tree.push(e);
        }
    }
    if tree.len() + 1 != h.len() {
        return Err(Error::Precondition(
            "habitat induces a disconnected subgraph; no spanning tree exists".into(),
        ));
    }
    tree.sort_unstable();
    Ok(tree)
}

/// A_apx: the union of per-habitat minimum spanning trees.
pub fn solve_apx(inst: &Instance) -> SolveResult {
    let start = std::time::Instant::now();
    let mut edges = std::collections::BTreeSet::new();
    for h in &inst.habitats {
        match mst_on_induced(&inst.graph, &inst.costs, h) {
            Ok(tree) => edges.extend(tree),
            Err(_) => {
                return SolveResult {
                    solution: None,
                    status: SolveStatus::InfeasibleInput,
                    wall_time: start.elapsed(),
                    lower_bound: None,
                }
            }
        }
    }
    SolveResult {
        solution: Some(Solution::from_edges(edges, &inst.costs)),
        status: SolveStatus::Feasible,
        wall_time: start.elapsed(),
        lower_bound: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify_solution;

    fn triangle(costs: [u64; 3]) -> Instance {
        let g = Graph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        let c = EdgeCosts::new(costs.to_vec(), &g).unwrap();
        let h = vec![Habitat::new([0, 1, 2], &g).unwrap()];
        Instance::new(g, c, h, None)
    }

    #[test]
    fn triangle_mst_drops_heaviest_edge() {
        let inst = triangle([1, 2, 3]);
        let tree = mst_on_induced(&inst.graph, &inst.costs, &inst.habitats[0]).unwrap();
        assert_eq!(tree, vec![0, 1]);
    }

    #[test]
    fn tree_habitat_keeps_all_induced_edges() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = EdgeCosts::new(vec![5, 1, 7], &g).unwrap();
        let h = Habitat::new([0, 1, 2, 3], &g).unwrap();
        assert_eq!(mst_on_induced(&g, &c, &h).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn c4_mst_omits_max_cost_edge() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let c = EdgeCosts::new(vec![1, 2, 3, 4], &g).unwrap();
        let h = Habitat::new([0, 1, 2, 3], &g).unwrap();
        assert_eq!(mst_on_induced(&g, &c, &h).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn disconnected_habitat_is_rejected() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let c = EdgeCosts::unit(&g);
        let h = Habitat::new([0, 2], &g).unwrap();
        assert!(mst_on_induced(&g, &c, &h).is_err());

        let inst = Instance::new(g, c, vec![h], None);
        assert_eq!(solve_apx(&inst).status, SolveStatus::InfeasibleInput);
    }

    #[test]
    fn union_is_feasible_and_shares_cheap_edges() {
        // Two triangles sharing edge {0,1} (index 0): both MSTs keep it.
        let g = Graph::new(4, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let c = EdgeCosts::unit(&g);
        let habitats = vec![
            Habitat::new([0, 1, 2], &g).unwrap(),
            Habitat::new([0, 1, 3], &g).unwrap(),
        ];
        let inst = Instance::new(g, c, habitats, None);
        let res = solve_apx(&inst);
        let sol = res.solution.unwrap();
        assert_eq!(sol.total_cost, 3);
        assert!(verify_solution(&inst, &sol).unwrap().feasible);
        assert!(sol.edge_indices.contains(&0));
    }

    #[test]
    fn single_cycle_habitat_is_solved_exactly() {
        let inst = triangle([3, 1, 2]);
        let res = solve_apx(&inst);
        assert_eq!(res.solution.unwrap().total_cost, 3);
    }

    #[test]
    fn deterministic_output() {
        let inst = triangle([2, 2, 2]);
        let a = solve_apx(&inst).solution.unwrap();
        let b = solve_apx(&inst).solution.unwrap();
        assert_eq!(a, b);
    }
}
