//! Exact maximum-weight matching in general weighted graphs.
//!
//! The solver follows the blossom method for finding augmenting paths
//! combined with the primal-dual method for maximum weight, as described by
//! Galil (ACM Computing Surveys, 1986), in the formulation popularized by
//! Joris van Rantwijk's reference implementation. Vertex duals are kept
//! premultiplied by two so that every quantity stays an integer for integer
//! edge weights.
//!
//! Semantics are maximum total weight, not maximum cardinality: an edge is
//! only matched when it pays for itself.

use crate::error::{Error, Result};

/// A simple undirected graph with positive integer edge weights.
#[derive(Debug, Clone)]
pub struct WeightedGraph {
    node_count: usize,
    edges: Vec<(usize, usize, u64)>,
}

impl WeightedGraph {
    pub fn new(node_count: usize, edges: Vec<(usize, usize, u64)>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for &(u, v, w) in &edges {
            if u >= node_count || v >= node_count {
                return Err(Error::InvalidVertex {
                    index: u.max(v),
                    count: node_count,
                });
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at node {u}")));
            }
            if w == 0 {
                return Err(Error::Input(format!("edge ({u}, {v}) has weight 0")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Input(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(WeightedGraph { node_count, edges })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[(usize, usize, u64)] {
        &self.edges
    }
}

/// A matching as positions into the graph's edge list, plus its weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingResult {
    pub edges: Vec<usize>,
    pub weight: u64,
}

/// Maximum-weight matching via the blossom algorithm.
pub fn max_weight_matching(wg: &WeightedGraph) -> MatchingResult {
    if wg.edges.is_empty() {
        return MatchingResult {
            edges: Vec::new(),
            weight: 0,
        };
    }
    let edges: Vec<(usize, usize, i64)> =
        wg.edges.iter().map(|&(u, v, w)| (u, v, w as i64)).collect();
    let mate = blossom::Solver::new(wg.node_count, edges).solve();
    let mut picked = Vec::new();
    let mut weight = 0u64;
    for (k, &(u, v, w)) in wg.edges.iter().enumerate() {
        if mate[u] == v {
            debug_assert_eq!(mate[v], u);
            picked.push(k);
            weight += w;
        }
    }
    MatchingResult {
        edges: picked,
        weight,
    }
}

/// Exhaustive oracle: depth-first enumeration over edge subsets, pruned to
/// pairwise-disjoint ones. Guarded to at most 25 edges.
pub fn brute_force_matching(wg: &WeightedGraph) -> Result<MatchingResult> {
    if wg.edges.len() > 25 {
        return Err(Error::GuardExceeded(format!(
            "brute-force matching limited to 25 edges, got {}",
            wg.edges.len()
        )));
    }
    let mut best = MatchingResult {
        edges: Vec::new(),
        weight: 0,
    };
    let mut used = vec![false; wg.node_count];
    let mut chosen = Vec::new();
    fn go(
        edges: &[(usize, usize, u64)],
        k: usize,
        weight: u64,
        used: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        best: &mut MatchingResult,
    ) {
        if weight > best.weight {
            best.weight = weight;
            best.edges = chosen.clone();
        }
        if k == edges.len() {
            return;
        }
        let (u, v, w) = edges[k];
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            chosen.push(k);
            go(edges, k + 1, weight + w, used, chosen, best);
            chosen.pop();
            used[u] = false;
            used[v] = false;
        }
        go(edges, k + 1, weight, used, chosen, best);
    }
    go(&wg.edges, 0, 0, &mut used, &mut chosen, &mut best);
    Ok(best)
}

mod blossom {
    //! Blossom/primal-dual engine. Vertices are 0..n-1; non-trivial blossoms
    //! are numbered n..2n-1. Edge endpoints are numbered so that endpoints
    //! 2k and 2k+1 belong to edge k.

    type Weight = i64;

    pub(super) const SENTINEL: usize = usize::MAX;

    pub(super) struct Solver {
        nvertex: usize,
        nedge: usize,
        edges: Vec<(usize, usize, Weight)>,
        endpoint: Vec<usize>,
        neighbend: Vec<Vec<usize>>,
        mate: Vec<usize>,
        label: Vec<usize>,
        labelend: Vec<usize>,
        inblossom: Vec<usize>,
        blossomparent: Vec<usize>,
        blossomchilds: Vec<Vec<usize>>,
        blossombase: Vec<usize>,
        blossomendps: Vec<Vec<usize>>,
        bestedge: Vec<usize>,
        blossombestedges: Vec<Vec<usize>>,
        unusedblossoms: Vec<usize>,
        dualvar: Vec<Weight>,
        allowedge: Vec<bool>,
        queue: Vec<usize>,
    }

    impl Solver {
        pub(super) fn new(node_count: usize, edges: Vec<(usize, usize, Weight)>) -> Solver {
            let nedge = edges.len();
            let mut nvertex = node_count;
            for &(i, j, _) in &edges {
                nvertex = nvertex.max(i + 1).max(j + 1);
            }
            let maxweight = edges.iter().map(|e| e.2).max().unwrap_or(0);
            let endpoint: Vec<usize> = (0..2 * nedge)
                .map(|p| {
                    if p % 2 == 0 {
                        edges[p / 2].0
                    } else {
                        edges[p / 2].1
                    }
                })
                .collect();
            let mut neighbend = vec![Vec::new(); nvertex];
            for (k, &(i, j, _)) in edges.iter().enumerate() {
                neighbend[i].push(2 * k + 1);
                neighbend[j].push(2 * k);
            }
            let mut dualvar = vec![maxweight; nvertex];
            dualvar.extend(vec![0; nvertex]);
            let mut blossombase: Vec<usize> = (0..nvertex).collect();
            blossombase.extend(vec![SENTINEL; nvertex]);
            Solver {
                nvertex,
                nedge,
                edges,
                endpoint,
                neighbend,
                mate: vec![SENTINEL; nvertex],
                label: vec![0; 2 * nvertex],
                labelend: vec![SENTINEL; 2 * nvertex],
                inblossom: (0..nvertex).collect(),
                blossomparent: vec![SENTINEL; 2 * nvertex],
                blossomchilds: vec![Vec::new(); 2 * nvertex],
                blossombase,
                blossomendps: vec![Vec::new(); 2 * nvertex],
                bestedge: vec![SENTINEL; 2 * nvertex],
                blossombestedges: vec![Vec::new(); 2 * nvertex],
                unusedblossoms: (nvertex..2 * nvertex).collect(),
                dualvar,
                allowedge: vec![false; nedge],
                queue: Vec::new(),
            }
        }

        // 2 * slack of edge k (does not work inside blossoms).
        fn slack(&self, k: usize) -> Weight {
            let (i, j, wt) = self.edges[k];
            self.dualvar[i] + self.dualvar[j] - 2 * wt
        }

        fn blossom_leaves(&self, b: usize) -> Vec<usize> {
            let mut leaves = Vec::new();
            if b < self.nvertex {
                leaves.push(b);
            } else {
                for &t in &self.blossomchilds[b] {
                    if t < self.nvertex {
                        leaves.push(t);
                    } else {
                        leaves.extend(self.blossom_leaves(t));
                    }
                }
            }
            leaves
        }

        /// Assign label `t` to the top-level blossom containing vertex `w`,
        /// reached through the edge with remote endpoint `p`.
        fn assign_label(&mut self, w: usize, t: usize, p: usize) {
            let b = self.inblossom[w];
            assert!(self.label[w] == 0 && self.label[b] == 0);
            self.label[w] = t;
            self.label[b] = t;
            self.labelend[w] = p;
            self.labelend[b] = p;
            self.bestedge[w] = SENTINEL;
            self.bestedge[b] = SENTINEL;
            if t == 1 {
                let leaves = self.blossom_leaves(b);
                self.queue.extend(leaves);
            } else if t == 2 {
                // The base of a T-blossom is the only vertex with an external
                // mate; relabel it S.
                let base = self.blossombase[b];
                assert!(self.mate[base] != SENTINEL);
                let mbase = self.mate[base];
                let endpoint = self.endpoint[mbase];
                self.assign_label(endpoint, 1, mbase ^ 1);
            }
        }

        /// Trace back from v and w to discover either a new blossom or an
        /// augmenting path. Returns the base vertex of the new blossom, or
        /// SENTINEL when an augmenting path was found.
        fn scan_blossom(&mut self, v: usize, w: usize) -> usize {
            let mut path = Vec::new();
            let mut base = SENTINEL;
            let mut v = v;
            let mut w = w;
            while v != SENTINEL || w != SENTINEL {
                let mut b = self.inblossom[v];
                if (self.label[b] & 4) != 0 {
                    base = self.blossombase[b];
                    break;
                }
                assert!(self.label[b] == 1);
                path.push(b);
                self.label[b] = 5;
                assert!(self.labelend[b] == self.mate[self.blossombase[b]]);
                if self.labelend[b] == SENTINEL {
                    // The base of blossom b is single; stop tracing this path.
                    v = SENTINEL;
                } else {
                    v = self.endpoint[self.labelend[b]];
                    b = self.inblossom[v];
                    assert!(self.label[b] == 2);
                    assert!(self.labelend[b] != SENTINEL);
                    v = self.endpoint[self.labelend[b]];
                }
                if w != SENTINEL {
                    std::mem::swap(&mut v, &mut w);
                }
            }
            for b in path {
                self.label[b] = 1;
            }
            base
        }

        /// Construct a new blossom with the given base, containing edge k
        /// which connects a pair of S vertices.
        fn add_blossom(&mut self, base: usize, k: usize) {
            let (mut v, mut w, _) = self.edges[k];
            let bb = self.inblossom[base];
            let mut bv = self.inblossom[v];
            let mut bw = self.inblossom[w];

            let b = self.unusedblossoms.pop().unwrap();
            self.blossombase[b] = base;
            self.blossomparent[b] = SENTINEL;
            self.blossomparent[bb] = b;

            self.blossomchilds[b] = Vec::new();
            self.blossomendps[b] = Vec::new();

            // Trace back from v to base.
            while bv != bb {
                self.blossomparent[bv] = b;
                self.blossomchilds[b].push(bv);
                self.blossomendps[b].push(self.labelend[bv]);
                assert!(
                    self.label[bv] == 2
                        || (self.label[bv] == 1
                            && self.labelend[bv] == self.mate[self.blossombase[bv]])
                );
                assert!(self.labelend[bv] != SENTINEL);
                v = self.endpoint[self.labelend[bv]];
                bv = self.inblossom[v];
            }
            self.blossomchilds[b].push(bb);
            self.blossomchilds[b].reverse();
            self.blossomendps[b].reverse();
            self.blossomendps[b].push(2 * k);

            // Trace back from w to base.
            while bw != bb {
                self.blossomparent[bw] = b;
                self.blossomchilds[b].push(bw);
                self.blossomendps[b].push(self.labelend[bw] ^ 1);
                assert!(
                    self.label[bw] == 2
                        || (self.label[bw] == 1
                            && self.labelend[bw] == self.mate[self.blossombase[bw]])
                );
                assert!(self.labelend[bw] != SENTINEL);
                w = self.endpoint[self.labelend[bw]];
                bw = self.inblossom[w];
            }

            assert!(self.label[bb] == 1);
            self.label[b] = 1;
            self.labelend[b] = self.labelend[bb];
            self.dualvar[b] = 0;

            for v in self.blossom_leaves(b) {
                if self.label[self.inblossom[v]] == 2 {
                    // Former T-vertices become S-vertices inside an S-blossom.
                    self.queue.push(v);
                }
                self.inblossom[v] = b;
            }

            // Compute least-slack edges to neighbouring S-blossoms.
            let mut bestedgeto = vec![SENTINEL; 2 * self.nvertex];
            for &bv in &self.blossomchilds[b] {
                let mut nblists: Vec<Vec<usize>> = Vec::new();
                if self.blossombestedges[bv].is_empty() {
                    for v in self.blossom_leaves(bv) {
                        nblists.push(self.neighbend[v].iter().map(|p| p / 2).collect());
                    }
                } else {
                    nblists.push(self.blossombestedges[bv].clone());
                }
                for nblist in nblists {
                    for k in nblist {
                        let (mut i, mut j, _) = self.edges[k];
                        if self.inblossom[j] == b {
                            std::mem::swap(&mut i, &mut j);
                        }
                        let bj = self.inblossom[j];
                        let bestto = bestedgeto[bj];
                        if bj != b
                            && self.label[bj] == 1
                            && (bestto == SENTINEL || self.slack(k) < self.slack(bestto))
                        {
                            bestedgeto[bj] = k;
                        }
                    }
                }
                self.blossombestedges[bv] = Vec::new();
                self.bestedge[bv] = SENTINEL;
            }
            self.blossombestedges[b] = bestedgeto.into_iter().filter(|&k| k != SENTINEL).collect();
            self.bestedge[b] = SENTINEL;
            for k in self.blossombestedges[b].clone() {
                let be = self.bestedge[b];
                if be == SENTINEL || self.slack(k) < self.slack(be) {
                    self.bestedge[b] = k;
                }
            }
        }

        /// Expand the given top-level blossom.
        fn expand_blossom(&mut self, b: usize, endstage: bool) {
            for s in self.blossomchilds[b].clone() {
                self.blossomparent[s] = SENTINEL;
                if s < self.nvertex {
                    self.inblossom[s] = s;
                } else if endstage && self.dualvar[s] == 0 {
                    self.expand_blossom(s, endstage);
                } else {
                    for v in self.blossom_leaves(s) {
                        self.inblossom[v] = s;
                    }
                }
            }

            // A T-blossom expanded during a stage needs its sub-blossoms
            // relabeled.
            if !endstage && self.label[b] == 2 {
                assert!(self.labelend[b] != SENTINEL);
                let entrychild = self.inblossom[self.endpoint[self.labelend[b] ^ 1]];

                let mut j = self.blossomchilds[b]
                    .iter()
                    .position(|&r| r == entrychild)
                    .unwrap() as i32;
                let jstep: i32;
                let endptrick: usize;
                if (j & 1) != 0 {
                    j -= self.blossomchilds[b].len() as i32;
                    jstep = 1;
                    endptrick = 0;
                } else {
                    jstep = -1;
                    endptrick = 1;
                }

                let mut p = self.labelend[b];
                while j != 0 {
                    self.label[self.endpoint[p ^ 1]] = 0;
                    self.label[self.endpoint[index_wrap(
                        &self.blossomendps[b],
                        j - endptrick as i32,
                    ) ^ endptrick
                        ^ 1]] = 0;
                    let ep = self.endpoint[p ^ 1];
                    self.assign_label(ep, 2, p);

                    self.allowedge[index_wrap(&self.blossomendps[b], j - endptrick as i32) / 2] =
                        true;
                    j += jstep;
                    p = index_wrap(&self.blossomendps[b], j - endptrick as i32) ^ endptrick;

                    self.allowedge[p / 2] = true;
                    j += jstep;
                }

                // Relabel the base T-sub-blossom without stepping to its mate.
                let bv = index_wrap(&self.blossomchilds[b], j);
                self.label[self.endpoint[p ^ 1]] = 2;
                self.label[bv] = 2;
                self.labelend[self.endpoint[p ^ 1]] = p;
                self.labelend[bv] = p;
                self.bestedge[bv] = SENTINEL;

                j += jstep;
                while index_wrap(&self.blossomchilds[b], j) != entrychild {
                    let bv = index_wrap(&self.blossomchilds[b], j);
                    if self.label[bv] == 1 {
                        j += jstep;
                        continue;
                    }
                    let mut v = SENTINEL;
                    for t in self.blossom_leaves(bv) {
                        v = t;
                        if self.label[v] != 0 {
                            break;
                        }
                    }
                    if self.label[v] != 0 {
                        assert!(self.label[v] == 2);
                        assert!(self.inblossom[v] == bv);
                        self.label[v] = 0;
                        self.label[self.endpoint[self.mate[self.blossombase[bv]]]] = 0;
                        let lblend = self.labelend[v];
                        self.assign_label(v, 2, lblend);
                    }
                    j += jstep;
                }
            }

            self.label[b] = SENTINEL;
            self.labelend[b] = SENTINEL;
            self.blossombase[b] = SENTINEL;
            self.bestedge[b] = SENTINEL;
            self.blossomchilds[b] = Vec::new();
            self.blossomendps[b] = Vec::new();
            self.blossombestedges[b] = Vec::new();
            self.unusedblossoms.push(b);
        }

        /// Swap matched/unmatched edges over an alternating path through
        /// blossom b between vertex v and the base vertex.
        fn augment_blossom(&mut self, b: usize, v: usize) {
            let mut t = v;
            while self.blossomparent[t] != b {
                t = self.blossomparent[t];
            }
            if t != SENTINEL && t >= self.nvertex {
                self.augment_blossom(t, v);
            }

            let i = self.blossomchilds[b].iter().position(|&r| r == t).unwrap();
            let mut j = i as i32;
            let jstep: i32;
            let endptrick: usize;
            if (i & 1) != 0 {
                j -= self.blossomchilds[b].len() as i32;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }

            while j != 0 {
                j += jstep;
                let mut t = index_wrap(&self.blossomchilds[b], j);
                let p = index_wrap(&self.blossomendps[b], j - endptrick as i32) ^ endptrick;
                if t != SENTINEL && t >= self.nvertex {
                    let endp = self.endpoint[p];
                    self.augment_blossom(t, endp);
                }
                j += jstep;
                t = index_wrap(&self.blossomchilds[b], j);
                if t != SENTINEL && t >= self.nvertex {
                    let endp = self.endpoint[p ^ 1];
                    self.augment_blossom(t, endp);
                }
                self.mate[self.endpoint[p]] = p ^ 1;
                self.mate[self.endpoint[p ^ 1]] = p;
            }

            rotate(&mut self.blossomchilds[b], i);
            rotate(&mut self.blossomendps[b], i);
            self.blossombase[b] = self.blossombase[self.blossomchilds[b][0]];
            assert!(self.blossombase[b] == v);
        }

        /// Swap matched/unmatched edges over an alternating path between two
        /// single vertices, running through edge k.
        fn augment_matching(&mut self, k: usize) {
            let (v, w, _) = self.edges[k];
            for &(mut s, mut p) in [(v, 2 * k + 1), (w, 2 * k)].iter() {
                loop {
                    let bs = self.inblossom[s];
                    assert!(self.label[bs] == 1);
                    assert!(self.labelend[bs] == self.mate[self.blossombase[bs]]);
                    if bs != SENTINEL && bs >= self.nvertex {
                        self.augment_blossom(bs, s);
                    }
                    self.mate[s] = p;
                    if self.labelend[bs] == SENTINEL {
                        // Reached a single vertex; stop.
                        break;
                    }
                    let t = self.endpoint[self.labelend[bs]];
                    let bt = self.inblossom[t];
                    assert!(self.label[bt] == 2);
                    assert!(self.labelend[bt] != SENTINEL);
                    s = self.endpoint[self.labelend[bt]];
                    let j = self.endpoint[self.labelend[bt] ^ 1];
                    assert!(self.blossombase[bt] == t);
                    if bt != SENTINEL && bt >= self.nvertex {
                        self.augment_blossom(bt, j);
                    }
                    self.mate[j] = self.labelend[bt];
                    p = self.labelend[bt] ^ 1;
                }
            }
        }

        /// Check the complementary-slackness conditions of the optimum.
        #[cfg(debug_assertions)]
        fn verify_optimum(&self) {
            for k in 0..self.nedge {
                let (i, j, wt) = self.edges[k];
                let mut s = self.dualvar[i] + self.dualvar[j] - 2 * wt;
                let mut iblossoms = vec![i];
                let mut jblossoms = vec![j];
                while self.blossomparent[*iblossoms.last().unwrap()] != SENTINEL {
                    let &ix = iblossoms.last().unwrap();
                    iblossoms.push(self.blossomparent[ix]);
                }
                while self.blossomparent[*jblossoms.last().unwrap()] != SENTINEL {
                    let &jx = jblossoms.last().unwrap();
                    jblossoms.push(self.blossomparent[jx]);
                }
                iblossoms.reverse();
                jblossoms.reverse();
                for (&bi, bj) in iblossoms.iter().zip(jblossoms) {
                    if bi != bj {
                        break;
                    }
                    s += 2 * self.dualvar[bi];
                }
                assert!(s >= 0);
                if self.mate[i] / 2 == k || self.mate[j] / 2 == k {
                    assert!(self.mate[i] / 2 == k && self.mate[j] / 2 == k);
                    assert!(s == 0);
                }
            }
            for v in 0..self.nvertex {
                assert!(self.mate[v] != SENTINEL || self.dualvar[v] == 0);
            }
        }

        /// Runs the algorithm; returns `mate` with `mate[v]` the partner of
        /// `v` or SENTINEL when single.
        pub(super) fn solve(mut self) -> Vec<usize> {
            let mut kslack = 0i64;
            for _ in 0..self.nvertex {
                // Each stage finds an augmenting path and uses it to improve
                // the matching.
                self.label = vec![0; 2 * self.nvertex];
                self.bestedge = vec![SENTINEL; 2 * self.nvertex];
                for b in self.nvertex..2 * self.nvertex {
                    self.blossombestedges[b] = Vec::new();
                }
                self.allowedge = vec![false; self.nedge];
                self.queue = Vec::new();

                for v in 0..self.nvertex {
                    if self.mate[v] == SENTINEL && self.label[self.inblossom[v]] == 0 {
                        self.assign_label(v, 1, SENTINEL);
                    }
                }

                let mut augmented = false;
                loop {
                    // Substage: look for an augmenting path; otherwise pump
                    // slack out of the dual variables.
                    while !self.queue.is_empty() && !augmented {
                        let v = self.queue.pop().unwrap();
                        assert!(self.label[self.inblossom[v]] == 1);
                        for p in self.neighbend[v].clone() {
                            let k = p / 2;
                            let w = self.endpoint[p];
                            if self.inblossom[v] == self.inblossom[w] {
                                // Internal to a blossom; ignore.
                                continue;
                            }
                            if !self.allowedge[k] {
                                kslack = self.slack(k);
                                if kslack <= 0 {
                                    self.allowedge[k] = true;
                                }
                            }
                            if self.allowedge[k] {
                                if self.label[self.inblossom[w]] == 0 {
                                    self.assign_label(w, 2, p ^ 1);
                                } else if self.label[self.inblossom[w]] == 1 {
                                    let base = self.scan_blossom(v, w);
                                    if base != SENTINEL {
                                        self.add_blossom(base, k);
                                    } else {
                                        self.augment_matching(k);
                                        augmented = true;
                                        break;
                                    }
                                } else if self.label[w] == 0 {
                                    assert!(self.label[self.inblossom[w]] == 2);
                                    self.label[w] = 2;
                                    self.labelend[w] = p ^ 1;
                                }
                            } else if self.label[self.inblossom[w]] == 1 {
                                let b = self.inblossom[v];
                                if self.bestedge[b] == SENTINEL
                                    || kslack < self.slack(self.bestedge[b])
                                {
                                    self.bestedge[b] = k;
                                }
                            } else if self.label[w] == 0
                                && (self.bestedge[w] == SENTINEL
                                    || kslack < self.slack(self.bestedge[w]))
                            {
                                self.bestedge[w] = k;
                            }
                        }
                    }
                    if augmented {
                        break;
                    }

                    // No augmenting path under these constraints; compute the
                    // dual delta. (Duals and slacks are premultiplied by two.)
                    let mut deltatype = 1;
                    let mut delta = *self.dualvar[0..self.nvertex].iter().min().unwrap();
                    let mut deltaedge = 0;
                    let mut deltablossom = 0;

                    // delta2: minimum slack on any edge between an S-vertex
                    // and a free vertex.
                    for v in 0..self.nvertex {
                        if self.label[self.inblossom[v]] == 0 && self.bestedge[v] != SENTINEL {
                            let d = self.slack(self.bestedge[v]);
                            if d < delta {
                                delta = d;
                                deltatype = 2;
                                deltaedge = self.bestedge[v];
                            }
                        }
                    }

                    // delta3: half the minimum slack on any edge between a
                    // pair of S-blossoms.
                    for b in 0..2 * self.nvertex {
                        if self.blossomparent[b] == SENTINEL
                            && self.label[b] == 1
                            && self.bestedge[b] != SENTINEL
                        {
                            let d = self.slack(self.bestedge[b]) / 2;
                            if d < delta {
                                delta = d;
                                deltatype = 3;
                                deltaedge = self.bestedge[b];
                            }
                        }
                    }

                    // delta4: minimum z variable of any T-blossom.
                    for b in self.nvertex..2 * self.nvertex {
                        if self.blossombase[b] != SENTINEL
                            && self.blossomparent[b] == SENTINEL
                            && self.label[b] == 2
                            && self.dualvar[b] < delta
                        {
                            delta = self.dualvar[b];
                            deltatype = 4;
                            deltablossom = b;
                        }
                    }

                    // Update dual variables.
                    for v in 0..self.nvertex {
                        match self.label[self.inblossom[v]] {
                            0 => {}
                            1 => self.dualvar[v] -= delta,
                            2 => self.dualvar[v] += delta,
                            _ => unreachable!("unexpected label"),
                        }
                    }
                    for b in self.nvertex..2 * self.nvertex {
                        if self.blossombase[b] != SENTINEL && self.blossomparent[b] == SENTINEL {
                            match self.label[b] {
                                0 => {}
                                1 => self.dualvar[b] += delta,
                                2 => self.dualvar[b] -= delta,
                                _ => unreachable!("unexpected label"),
                            }
                        }
                    }

                    match deltatype {
                        1 => break, // Optimum reached.
                        2 => {
                            let (mut i, j, _) = self.edges[deltaedge];
                            self.allowedge[deltaedge] = true;
                            if self.label[self.inblossom[i]] == 0 {
                                i = j;
                            }
                            assert!(self.label[self.inblossom[i]] == 1);
                            self.queue.push(i);
                        }
                        3 => {
                            self.allowedge[deltaedge] = true;
                            let (i, _, _) = self.edges[deltaedge];
                            assert!(self.label[self.inblossom[i]] == 1);
                            self.queue.push(i);
                        }
                        4 => self.expand_blossom(deltablossom, false),
                        _ => unreachable!("unexpected deltatype"),
                    }
                }

                if !augmented {
                    break;
                }

                // End of a stage; expand all S-blossoms with zero dual.
                for b in self.nvertex..2 * self.nvertex {
                    if self.blossomparent[b] == SENTINEL
                        && self.blossombase[b] != SENTINEL
                        && self.label[b] == 1
                        && self.dualvar[b] == 0
                    {
                        self.expand_blossom(b, true);
                    }
                }
            }

            #[cfg(debug_assertions)]
            self.verify_optimum();

            // Transform mate[] from endpoints to partner vertices.
            for v in 0..self.nvertex {
                if self.mate[v] != SENTINEL {
                    self.mate[v] = self.endpoint[self.mate[v]];
                }
            }
            for v in 0..self.nvertex {
                assert!(self.mate[v] == SENTINEL || self.mate[self.mate[v]] == v);
            }
            self.mate
        }
    }

    /// Moves the back of the vector to the front (Python `v[i:] + v[:i]`).
    fn rotate(v: &mut [usize], split: usize) {
        v.rotate_left(split);
    }

    /// Python-style indexing with negative offsets wrapping from the end.
    fn index_wrap(v: &[usize], index: i32) -> usize {
        if index >= 0 {
            v[index as usize]
        } else {
            v[v.len() - (-index) as usize]
        }
    }
}
