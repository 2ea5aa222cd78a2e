//! Instance factories: random planar graphs with sampled habitats, the crown
//! gadget, and the NP-hardness constructions that reduce Cubic Vertex Cover
//! to green-bridge placement.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{classify_habitat, EdgeCosts, Graph, Habitat, HabitatClass, Instance};
use crate::planar::{enumerate_faces, Coordinates, Embedding};

/// Maximum number of induced cycles the enumerator will produce.
pub const INDUCED_CYCLE_CAP: usize = 100_000;

/// Retry budget multiplier for the walk sampler.
const WALK_RETRIES_PER_HABITAT: usize = 100;

/// `n` points uniform in the unit square; identical seeds reproduce exactly.
pub fn random_points(n: usize, seed: u64) -> Result<Coordinates> {
    if n == 0 {
        return Err(Error::Input("need at least one point".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<(f64, f64)> = (0..n)
        .map(|_| (rng.gen::<f64>(), rng.gen::<f64>()))
        .collect();
    Coordinates::new(pts)
}

/// Relative neighborhood graph: {u, v} is an edge iff no third point w is
/// strictly closer to both endpoints than they are to each other. The result
/// contains a Euclidean minimum spanning tree, hence is connected, and its
/// straight-line drawing is planar.
pub fn rng_graph(pts: &Coordinates) -> Result<Graph> {
    let n = pts.len();
    let p = pts.as_slice();
    for i in 0..n {
        for j in (i + 1)..n {
            if p[i] == p[j] {
                return Err(Error::DegenerateGeometry(format!(
                    "points {i} and {j} coincide"
                )));
            }
        }
    }
    let d2 = |a: (f64, f64), b: (f64, f64)| -> f64 {
        let (dx, dy) = (a.0 - b.0, a.1 - b.1);
        dx * dx + dy * dy
    };
    let mut edges = Vec::new();
    for u in 0..n {
        'pair: for v in (u + 1)..n {
            let duv = d2(p[u], p[v]);
            for w in 0..n {
                if w != u && w != v && d2(p[u], p[w]).max(d2(p[v], p[w])) < duv {
                    continue 'pair;
                }
            }
            edges.push((u, v));
        }
    }
    Graph::new(n, edges)
}

fn draw_costs(g: &Graph, rng: &mut ChaCha8Rng) -> EdgeCosts {
    let costs: Vec<u64> = (0..g.edge_count()).map(|_| rng.gen_range(1..=8)).collect();
    EdgeCosts::new(costs, g).expect("costs in 1..=8")
}

/// Uniform integer edge costs in 1..=8.
pub fn assign_costs(g: &Graph, seed: u64) -> EdgeCosts {
    draw_costs(g, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Draws `r` indices out of `0..len` without replacement, sorted ascending;
/// takes everything when fewer than `r` exist.
fn sample_without_replacement(len: usize, r: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut all: Vec<usize> = (0..len).collect();
    all.shuffle(rng);
    all.truncate(r.min(len));
    all.sort_unstable();
    all
}

/// Samples `r` habitats from the inner faces whose boundary induces a cycle.
pub fn gen_face_instance(g: &Graph, emb: &Embedding, r: usize, seed: u64) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let costs = draw_costs(g, &mut rng);
    let faces = enumerate_faces(g, emb)?;
    let qualifying: Vec<Habitat> = faces
        .iter()
        .filter(|f| !f.is_outer && f.is_simple_cycle())
        .map(|f| Habitat::new(f.vertex_set(), g))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|h| classify_habitat(g, h) == HabitatClass::Cycle)
        .collect();
    if qualifying.is_empty() {
        return Err(Error::Generation(
            "no face of the embedding induces a cycle".into(),
        ));
    }
    let picked = sample_without_replacement(qualifying.len(), r, &mut rng);
    let habitats = picked.into_iter().map(|i| qualifying[i].clone()).collect();
    Ok(Instance::new(g.clone(), costs, habitats, None))
}

/// All induced (chordless) cycles with `min_len..=max_len` vertices, up to
/// `cap` many. Each cycle is listed once, in deterministic DFS order: it
/// starts at its minimum vertex and runs towards its smaller neighbor first.
pub fn enumerate_chordless_cycles(
    g: &Graph,
    min_len: usize,
    max_len: usize,
    cap: usize,
) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut mat = vec![false; n * n];
    for &(u, v) in g.edges() {
        mat[u * n + v] = true;
        mat[v * n + u] = true;
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn extend(
        path: &mut Vec<usize>,
        in_path: &mut Vec<bool>,
        adj: &[Vec<(usize, usize)>],
        mat: &[bool],
        n: usize,
        min_len: usize,
        max_len: usize,
        cap: usize,
        cycles: &mut Vec<Vec<usize>>,
    ) {
        if cycles.len() >= cap {
            return;
        }
        let s = path[0];
        let u = *path.last().unwrap();
        for &(w, _) in &adj[u] {
            if cycles.len() >= cap {
                return;
            }
            if w <= s || in_path[w] {
                continue;
            }
            // A chord to any interior path vertex rules w out entirely.
            let interior = path.len().saturating_sub(2);
            if path.iter().skip(1).take(interior).any(|&x| mat[w * n + x]) {
                continue;
            }
            let closes = path.len() >= 2 && mat[w * n + s];
            if closes {
                let len = path.len() + 1;
                if (min_len..=max_len).contains(&len) && path[1] < w {
                    let mut cycle = path.clone();
                    cycle.push(w);
                    cycles.push(cycle);
                }
                // Extending past w would leave the chord {w, s} behind.
                continue;
            }
            if path.len() + 1 < max_len {
                path.push(w);
                in_path[w] = true;
                extend(path, in_path, adj, mat, n, min_len, max_len, cap, cycles);
                in_path[w] = false;
                path.pop();
            }
        }
    }

    for s in 0..n {
        if cycles.len() >= cap {
            break;
        }
        let mut path = vec![s];
        let mut in_path = vec![false; n];
        in_path[s] = true;
        extend(
            &mut path,
            &mut in_path,
            &adj,
            &mat,
            n,
            min_len,
            max_len,
            cap,
            &mut cycles,
        );
    }
    cycles
}

/// Samples `r` habitats from the induced cycles with q±1 vertices.
pub fn gen_cycle_instance(g: &Graph, r: usize, q: usize, seed: u64) -> Result<Instance> {
    if q < 4 {
        return Err(Error::Input(format!(
            "cycle length parameter q={q} must be >= 4"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let costs = draw_costs(g, &mut rng);
    let cycles = enumerate_chordless_cycles(g, q - 1, q + 1, INDUCED_CYCLE_CAP);
    if cycles.is_empty() {
        return Err(Error::Generation(format!(
            "no induced cycle with {} to {} vertices",
            q - 1,
            q + 1
        )));
    }
    let picked = sample_without_replacement(cycles.len(), r, &mut rng);
    let habitats = picked
        .into_iter()
        .map(|i| Habitat::new(cycles[i].iter().copied(), g))
        .collect::<Result<Vec<_>>>()?;
    Ok(Instance::new(g.clone(), costs, habitats, None))
}

/// Samples `r` habitats as self-avoiding random walks on q' = q±1 vertices.
pub fn gen_walk_instance(g: &Graph, r: usize, q: usize, seed: u64) -> Result<Instance> {
    if q < 3 {
        return Err(Error::Input(format!(
            "walk length parameter q={q} must be >= 3"
        )));
    }
    if g.vertex_count() == 0 {
        return Err(Error::Generation(
            "cannot sample walks on an empty graph".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let costs = draw_costs(g, &mut rng);
    let adj = g.adjacency();
    let mut habitats = Vec::with_capacity(r);
    let mut retries = WALK_RETRIES_PER_HABITAT * r;
    while habitats.len() < r {
        if retries == 0 {
            return Err(Error::Generation(format!(
                "walk sampling exhausted {} retries",
                WALK_RETRIES_PER_HABITAT * r
            )));
        }
        retries -= 1;
        let target = q - 1 + rng.gen_range(0..=2);
        let mut walk = vec![rng.gen_range(0..g.vertex_count())];
        let mut visited = vec![false; g.vertex_count()];
        visited[walk[0]] = true;
        while walk.len() < target {
            let u = *walk.last().unwrap();
            let options: Vec<usize> = adj[u]
                .iter()
                .map(|&(w, _)| w)
                .filter(|&w| !visited[w])
                .collect();
            match options.as_slice() {
                [] => break,
                opts => {
                    let w = opts[rng.gen_range(0..opts.len())];
                    visited[w] = true;
                    walk.push(w);
                }
            }
        }
        if walk.len() == target {
            habitats.push(Habitat::new(walk, g)?);
        }
    }
    Ok(Instance::new(g.clone(), costs, habitats, None))
}

/// Incremental graph assembly used by the crown gadget and the hardness
/// constructions. Edges are deduplicated so that degenerate crowns (p = 0 or
/// q = 0) reuse existing edges rather than creating parallels.
struct Builder {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    edge_set: BTreeSet<(usize, usize)>,
}

impl Builder {
    fn new(vertex_count: usize) -> Self {
        Builder {
            vertex_count,
            edges: Vec::new(),
            edge_set: BTreeSet::new(),
        }
    }

    fn from_graph(g: &Graph) -> Self {
        let mut b = Builder::new(g.vertex_count());
        for &(u, v) in g.edges() {
            b.add_edge(u, v);
        }
        b
    }

    fn add_vertex(&mut self) -> usize {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        let key = (u.min(v), u.max(v));
        if self.edge_set.insert(key) {
            self.edges.push(key);
        }
    }

    /// Path of `len >= 1` edges from `a` to `b` through fresh interior
    /// vertices; returns the full vertex sequence including both endpoints.
    fn add_path(&mut self, a: usize, b: usize, len: usize) -> Vec<usize> {
        assert!(len >= 1);
        let mut seq = vec![a];
        for _ in 0..(len - 1) {
            seq.push(self.add_vertex());
        }
        seq.push(b);
        for w in seq.windows(2) {
            self.add_edge(w[0], w[1]);
        }
        seq
    }

    /// (p, q)-crowns `a` and `b`: base path of length p+1 plus two crown
    /// paths of length q+1, with the two crown habitats appended to
    /// `habitats`. Returns the base path vertex sequence.
    fn crown(
        &mut self,
        a: usize,
        b: usize,
        p: usize,
        q: usize,
        habitats: &mut Vec<BTreeSet<usize>>,
    ) -> Vec<usize> {
        let base = self.add_path(a, b, p + 1);
        let base_set: BTreeSet<usize> = base.iter().copied().collect();
        for _ in 0..2 {
            let crown_path = self.add_path(a, b, q + 1);
            let mut h = base_set.clone();
            h.extend(crown_path);
            habitats.push(h);
        }
        base
    }

    fn build(self) -> Result<Graph> {
        Graph::new(self.vertex_count, self.edges)
    }
}

fn to_habitats(sets: Vec<BTreeSet<usize>>, g: &Graph) -> Result<Vec<Habitat>> {
    sets.into_iter().map(|s| Habitat::new(s, g)).collect()
}

/// (p, q)-crowns two existing vertices, returning the extended graph and the
/// two crown habitats. The minimum cost to satisfy both habitats with unit
/// costs is p + 2q + 1.
pub fn crown(g: &Graph, a: usize, b: usize, p: usize, q: usize) -> Result<(Graph, Vec<Habitat>)> {
    if a == b {
        return Err(Error::Input("crown endpoints must be distinct".into()));
    }
    if a >= g.vertex_count() || b >= g.vertex_count() {
        return Err(Error::InvalidVertex {
            index: a.max(b),
            count: g.vertex_count(),
        });
    }
    let mut builder = Builder::from_graph(g);
    let mut sets = Vec::new();
    builder.crown(a, b, p, q, &mut sets);
    let graph = builder.build()?;
    let habitats = to_habitats(sets, &graph)?;
    Ok((graph, habitats))
}

/// A Cubic Vertex Cover instance: a 3-regular graph and a budget p.
#[derive(Debug, Clone)]
pub struct CVCInstance {
    graph: Graph,
    p: usize,
}

impl CVCInstance {
    pub fn new(graph: Graph, p: usize) -> Result<Self> {
        for v in 0..graph.vertex_count() {
            if graph.degree(v) != 3 {
                return Err(Error::Input(format!(
                    "vertex {v} has degree {}; the graph must be cubic",
                    graph.degree(v)
                )));
            }
        }
        Ok(CVCInstance { graph, p })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn p(&self) -> usize {
        self.p
    }
}

/// Minimum vertex cover size by subset enumeration; guarded to 16 vertices.
pub fn cvc_brute_force(cvc: &CVCInstance) -> Result<usize> {
    let n = cvc.graph.vertex_count();
    if n > 16 {
        return Err(Error::GuardExceeded(format!(
            "vertex-cover brute force limited to 16 vertices, got {n}"
        )));
    }
    let mut best = n;
    'cover: for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        for &(u, v) in cvc.graph.edges() {
            if mask >> u & 1 == 0 && mask >> v & 1 == 0 {
                continue 'cover;
            }
        }
        best = size;
    }
    Ok(best)
}

fn unit_instance(graph: Graph, habitats: Vec<Habitat>, budget: usize) -> Instance {
    let costs = EdgeCosts::unit(&graph);
    Instance::new(graph, costs, habitats, Some(budget as u64))
}

/// Construction 1: apex vertex x joined to every vertex; habitats e_i and
/// e_i ∪ {x}; budget m + p. With `ell = Some(ℓ ≥ 3)`, every original edge is
/// replaced by an (ℓ−3, 1)-crowning and each apex habitat becomes the base
/// path plus x, so all habitats induce C_ℓ; the budget becomes m·ℓ + p.
pub fn construct_c3(cvc: &CVCInstance, ell: Option<usize>) -> Result<Instance> {
    if let Some(l) = ell {
        if l < 3 {
            return Err(Error::Input(format!("cycle length {l} must be >= 3")));
        }
    }
    let g = &cvc.graph;
    let (n, m) = (g.vertex_count(), g.edge_count());
    let mut b = Builder::new(n + 1);
    let x = n;
    let mut sets: Vec<BTreeSet<usize>> = Vec::new();
    match ell {
        None => {
            for &(u, v) in g.edges() {
                b.add_edge(u, v);
            }
            for v in 0..n {
                b.add_edge(v, x);
            }
            for &(u, v) in g.edges() {
                sets.push([u, v].into());
                sets.push([u, v, x].into());
            }
            let graph = b.build()?;
            let habitats = to_habitats(sets, &graph)?;
            Ok(unit_instance(graph, habitats, m + cvc.p))
        }
        Some(l) => {
            for v in 0..n {
                b.add_edge(v, x);
            }
            for &(u, v) in g.edges() {
                let base = b.crown(u, v, l - 3, 1, &mut sets);
                let mut apex: BTreeSet<usize> = base.into_iter().collect();
                apex.insert(x);
                sets.push(apex);
            }
            let graph = b.build()?;
            let habitats = to_habitats(sets, &graph)?;
            Ok(unit_instance(graph, habitats, m * l + cvc.p))
        }
    }
}

/// Construction 2: two apexes x, y with only star edges; habitats {v_i, x}
/// and e_i ∪ {x, y}; budget n + p. With `ell` (4, even ≥ 6, or odd ≥ 7) the
/// x-star edges are replaced by crownings so that every habitat induces C_ℓ.
pub fn construct_planar(cvc: &CVCInstance, ell: Option<usize>) -> Result<Instance> {
    let g = &cvc.graph;
    let n = g.vertex_count();
    let mut b = Builder::new(n + 2);
    let (x, y) = (n, n + 1);
    let mut sets: Vec<BTreeSet<usize>> = Vec::new();
    for v in 0..n {
        b.add_edge(v, y);
    }
    match ell {
        None => {
            for v in 0..n {
                b.add_edge(v, x);
            }
            for v in 0..n {
                sets.push([v, x].into());
            }
            for &(u, v) in g.edges() {
                sets.push([u, v, x, y].into());
            }
            let graph = b.build()?;
            let habitats = to_habitats(sets, &graph)?;
            Ok(unit_instance(graph, habitats, n + cvc.p))
        }
        Some(l) if l == 4 || (l % 2 == 0 && l >= 6) => {
            // One (ℓ/2−2, ℓ/2)-crowning per x-star edge; the cross habitat
            // runs over both base paths and y.
            let mut bases: Vec<BTreeSet<usize>> = Vec::new();
            for v in 0..n {
                let base = b.crown(v, x, l / 2 - 2, l / 2, &mut sets);
                bases.push(base.into_iter().collect());
            }
            for &(u, v) in g.edges() {
                let mut h = bases[u].clone();
                h.extend(bases[v].iter().copied());
                h.insert(y);
                sets.push(h);
            }
            let graph = b.build()?;
            let habitats = to_habitats(sets, &graph)?;
            Ok(unit_instance(graph, habitats, n * (3 * l / 2 - 1) + cvc.p))
        }
        Some(l) if l % 2 == 1 && l >= 7 => {
            // Two crownings per x-star edge with base lengths differing by
            // one; a cross habitat mixes a short base with a long one so the
            // resulting cycle has odd length ℓ.
            let mut short_bases: Vec<BTreeSet<usize>> = Vec::new();
            let mut long_bases: Vec<BTreeSet<usize>> = Vec::new();
            for v in 0..n {
                let short = b.crown(v, x, (l - 1) / 2 - 2, l.div_ceil(2), &mut sets);
                let long = b.crown(v, x, l.div_ceil(2) - 2, (l - 1) / 2, &mut sets);
                short_bases.push(short.into_iter().collect());
                long_bases.push(long.into_iter().collect());
            }
            for &(u, v) in g.edges() {
                let mut h = short_bases[u].clone();
                h.extend(long_bases[v].iter().copied());
                h.insert(y);
                sets.push(h);
            }
            let graph = b.build()?;
            let habitats = to_habitats(sets, &graph)?;
            Ok(unit_instance(graph, habitats, n * (3 * l - 2) + cvc.p))
        }
        Some(l) => Err(Error::Input(format!(
            "cycle length {l} not supported: need 4, even >= 6, or odd >= 7"
        ))),
    }
}

/// Extension selector for Construction 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegExtension {
    /// The base construction: habitats P2 and C4, budget 2m + p.
    None,
    /// Subdivide every original edge ℓ−4 times; habitats P2 and C_ℓ,
    /// budget m(ℓ−2) + p.
    Subdivide(usize),
    /// Replace original edges by (ℓ−4, 2)-crownings and mirror edges by
    /// (0, ℓ−2)-crownings; all habitats C_ℓ, budget m(3ℓ−2) + p.
    Crown(usize),
}

/// Construction 3: the graph plus a mirrored copy joined by rungs; habitats
/// e_i, e_i*, and the 4-cycle e_i ∪ e_i*.
pub fn construct_deg(cvc: &CVCInstance, ext: DegExtension) -> Result<Instance> {
    if let DegExtension::Subdivide(l) | DegExtension::Crown(l) = ext {
        if l < 4 {
            return Err(Error::Input(format!("cycle length {l} must be >= 4")));
        }
    }
    let g = &cvc.graph;
    let (n, m) = (g.vertex_count(), g.edge_count());
    let mut b = Builder::new(2 * n);
    let star = |v: usize| v + n;
    for v in 0..n {
        b.add_edge(v, star(v));
    }
    let mut sets: Vec<BTreeSet<usize>> = Vec::new();
    match ext {
        DegExtension::None => {
            for &(u, v) in g.edges() {
                b.add_edge(u, v);
                b.add_edge(star(u), star(v));
                sets.push([u, v].into());
                sets.push([star(u), star(v)].into());
                sets.push([u, v, star(u), star(v)].into());
            }
            let graph = b.build()?;
            let habitats = to_habitats(sets, &graph)?;
            Ok(unit_instance(graph, habitats, 2 * m + cvc.p))
        }
        DegExtension::Subdivide(l) => {
            for &(u, v) in g.edges() {
                b.add_edge(star(u), star(v));
                let path = b.add_path(u, v, l - 3);
                for seg in path.windows(2) {
                    sets.push([seg[0], seg[1]].into());
                }
                sets.push([star(u), star(v)].into());
                let mut h: BTreeSet<usize> = path.into_iter().collect();
                h.insert(star(u));
                h.insert(star(v));
                sets.push(h);
            }
            let graph = b.build()?;
            let habitats = to_habitats(sets, &graph)?;
            Ok(unit_instance(graph, habitats, m * (l - 2) + cvc.p))
        }
        DegExtension::Crown(l) => {
            for &(u, v) in g.edges() {
                let base = b.crown(u, v, l - 4, 2, &mut sets);
                let mirror_base = b.crown(star(u), star(v), 0, l - 2, &mut sets);
                let mut h: BTreeSet<usize> = base.into_iter().collect();
                h.extend(mirror_base);
                sets.push(h);
            }
            let graph = b.build()?;
            let habitats = to_habitats(sets, &graph)?;
            Ok(unit_instance(graph, habitats, m * (3 * l - 2) + cvc.p))
        }
    }
}

/// Construction 4: two mirrored full binary trees whose leaves stand for the
/// original vertices, joined by leaf rungs. Each tree edge is a P2 habitat
/// (or, with `crowned`, a (0,1)-crowning); each original edge {v_i, v_j}
/// becomes the cycle habitat running up from leaf i to the lowest common
/// ancestor, down to leaf j, across the rung, and back through the mirror.
pub fn construct_bintree(cvc: &CVCInstance, crowned: bool) -> Result<Instance> {
    let g = &cvc.graph;
    let n = g.vertex_count();
    let leaves = n.next_power_of_two();
    // Heap layout: node i has children 2i+1 and 2i+2; leaves occupy
    // leaves-1 .. 2*leaves-2 in depth-first (left to right) order.
    let tree_size = 2 * leaves - 1;
    let t_node = |i: usize| i;
    let t_mirror = |i: usize| tree_size + i;
    let leaf = |v: usize| leaves - 1 + v;
    let mut b = Builder::new(2 * tree_size);
    let mut sets: Vec<BTreeSet<usize>> = Vec::new();

    let mut tree_edges = Vec::new();
    for i in 1..tree_size {
        let parent = (i - 1) / 2;
        tree_edges.push((t_node(parent), t_node(i)));
        tree_edges.push((t_mirror(parent), t_mirror(i)));
    }
    for &(a, bb) in &tree_edges {
        if crowned {
            b.crown(a, bb, 0, 1, &mut sets);
        } else {
            b.add_edge(a, bb);
            sets.push([a, bb].into());
        }
    }
    for v in 0..leaves {
        b.add_edge(t_node(leaf(v)), t_mirror(leaf(v)));
    }
    for &(u, v) in g.edges() {
        // Path from leaf u to leaf v through the lowest common ancestor.
        let mut h = BTreeSet::new();
        let (mut a, mut bb) = (leaf(u), leaf(v));
        while a != bb {
            if a > bb {
                h.insert(t_node(a));
                h.insert(t_mirror(a));
                a = (a - 1) / 2;
            } else {
                h.insert(t_node(bb));
                h.insert(t_mirror(bb));
                bb = (bb - 1) / 2;
            }
        }
        h.insert(t_node(a));
        h.insert(t_mirror(a));
        sets.push(h);
    }
    let graph = b.build()?;
    let habitats = to_habitats(sets, &graph)?;
    let tree_edge_count = tree_edges.len();
    let k = if crowned {
        3 * tree_edge_count
    } else {
        tree_edge_count
    } + cvc.p;
    Ok(unit_instance(graph, habitats, k))
}
