//! Evaluation metrics: the habitat intersection rate λ and the quality /
//! additive ratios comparing the approximation against an exact optimum.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::Instance;

/// Intersection rate λ: total habitat-induced edge incidences divided by the
/// number of distinct covered edges; the average number of habitats per
/// covered edge. Exact rational, always ≥ 1.
pub fn intersection_rate(inst: &Instance) -> Result<Ratio<u64>> {
    let mut incidences = 0u64;
    for h in &inst.habitats {
        for &(u, v) in inst.graph.edges() {
            if h.contains(u) && h.contains(v) {
                incidences += 1;
            }
        }
    }
    let covered = inst.covered_edges().len() as u64;
    if covered == 0 {
        return Err(Error::UndefinedMetric(
            "intersection rate needs at least one habitat-covered edge".into(),
        ));
    }
    Ok(Ratio::new(incidences, covered))
}

/// Quality ratio apx/opt and additive ratio (apx − opt) / (d·r), where
/// d = opt / |F*| is the average edge weight of the optimal solution and r
/// the habitat count.
pub fn compute_ratios(
    apx_cost: u64,
    opt_cost: u64,
    r: usize,
    opt_edge_count: usize,
) -> Result<(Ratio<u64>, Ratio<u64>)> {
    if opt_cost == 0 || opt_edge_count == 0 {
        return Err(Error::Integrity(
            "optimal reference must have positive cost and at least one edge".into(),
        ));
    }
    if r == 0 {
        return Err(Error::Integrity("ratios need at least one habitat".into()));
    }
    if apx_cost < opt_cost {
        return Err(Error::Integrity(format!(
            "approximation cost {apx_cost} below claimed optimum {opt_cost}"
        )));
    }
    let quality = Ratio::new(apx_cost, opt_cost);
    // (apx − opt) / (d·r) with d = opt / |F*|.
    let additive = Ratio::new(
        (apx_cost - opt_cost) * opt_edge_count as u64,
        opt_cost * r as u64,
    );
    Ok((quality, additive))
}
