//! Graph automorphism search.
//!
//! The main engine individualizes vertices and refines colorings, descending
//! a stabilizer chain: for each base vertex it finds one automorphism per
//! orbit of candidate images, pruning candidates already reachable under the
//! generators discovered so far. A naive backtracking oracle over all vertex
//! bijections serves as the independent reference for small graphs.
//!
//! Candidate testing may run in parallel; results are merged in candidate
//! order, replaying exactly the sequential accept/skip decisions, so the
//! emitted generator list is identical in every mode and schedule.

use crate::error::{Error, Result};
use crate::exec::ExecMode;
use crate::graph::Graph;
use crate::group::PermGroup;
use crate::perm::Perm;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Vertex-count cap for the refinement-based engine.
pub const DEFAULT_SEARCH_BOUND: usize = 10_080;

/// Vertex-count cap for the naive oracle.
pub const DEFAULT_ORACLE_BOUND: usize = 40;

/// A vertex coloring with consecutive color ids `0..classes`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    color: Vec<u32>,
    classes: usize,
}

impl Coloring {
    pub fn uniform(n: usize) -> Coloring {
        assert!(n >= 1, "degenerate vertex count 0");
        Coloring {
            color: vec![0; n],
            classes: 1,
        }
    }

    pub fn colors(&self) -> &[u32] {
        &self.color
    }

    pub fn color_of(&self, v: usize) -> u32 {
        self.color[v]
    }

    pub fn class_count(&self) -> usize {
        self.classes
    }

    pub fn is_discrete(&self) -> bool {
        self.classes == self.color.len()
    }

    /// Moves `v` into a fresh singleton class (color id = old class count).
    pub fn individualize(&self, v: usize) -> Coloring {
        let mut color = self.color.clone();
        color[v] = self.classes as u32;
        Coloring {
            color,
            classes: self.classes + 1,
        }
    }

    fn class_sizes(&self) -> Vec<u32> {
        let mut sizes = vec![0u32; self.classes];
        for &c in &self.color {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// Vertices of color `c`, ascending.
    pub fn members(&self, c: u32) -> Vec<usize> {
        (0..self.color.len()).filter(|&v| self.color[v] == c).collect()
    }
}

/// Coarsest equitable refinement of `start`: same-colored vertices end up
/// with identical neighbor-color multisets. Color ids are assigned by sorted
/// signature, so the relabeling commutes with every graph automorphism and
/// never merges classes; the map is idempotent.
pub fn equitable_refine(g: &Graph, start: &Coloring) -> Coloring {
    let n = g.vertex_count();
    assert_eq!(start.color.len(), n, "coloring size mismatch");
    let mut color = start.color.clone();
    let mut classes = start.classes;
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nc: Vec<u32> =
                    g.neighbors(v).iter().map(|&w| color[w as usize]).collect();
                nc.sort_unstable();
                (color[v], nc)
            })
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
        let mut new_color = vec![0u32; n];
        let mut next = 0u32;
        for (k, &v) in order.iter().enumerate() {
            if k > 0 && sigs[v] != sigs[order[k - 1]] {
                next += 1;
            }
            new_color[v] = next;
        }
        let new_classes = (next + 1) as usize;
        if new_classes == classes {
            return Coloring { color: new_color, classes };
        }
        color = new_color;
        classes = new_classes;
    }
}

/// Non-singleton class to split next: smallest size, then smallest color id.
fn target_cell(c: &Coloring) -> Option<u32> {
    c.class_sizes()
        .iter()
        .enumerate()
        .filter(|&(_, &s)| s > 1)
        .min_by_key(|&(id, &s)| (s, id))
        .map(|(id, _)| id as u32)
}

/// Same class sizes per color on both sides, and every pinned pair
/// color-aligned. Any automorphism extending the pins keeps both conditions,
/// so failing them prunes safely.
fn compatible(dom: &Coloring, img: &Coloring, pins: &[(usize, usize)]) -> bool {
    dom.classes == img.classes
        && dom.class_sizes() == img.class_sizes()
        && pins.iter().all(|&(a, b)| dom.color[a] == img.color[b])
}

/// Complete backtracking search for one automorphism mapping the dom side
/// onto the img side and honoring `pins` (a ↦ b). Both colorings must come
/// from `equitable_refine` of individualizations of one common coloring.
fn find_mapping(g: &Graph, dom: &Coloring, img: Coloring, pins: &[(usize, usize)]) -> Option<Perm> {
    if !compatible(dom, &img, pins) {
        return None;
    }
    if dom.is_discrete() {
        let n = g.vertex_count();
        let mut img_vertex_of = vec![0u32; img.classes];
        for v in 0..n {
            img_vertex_of[img.color_of(v) as usize] = v as u32;
        }
        let images: Vec<u32> = (0..n)
            .map(|x| img_vertex_of[dom.color_of(x) as usize])
            .collect();
        let p = Perm::from_images(images).expect("discrete compatible colorings give a bijection");
        let pins_ok = pins.iter().all(|&(a, b)| p.apply(a) == b);
        if pins_ok && edges_preserved(g, &p) {
            return Some(p);
        }
        return None;
    }
    let cell = target_cell(dom).expect("non-discrete coloring has a splittable cell");
    let x = dom.members(cell)[0];
    let dom2 = equitable_refine(g, &dom.individualize(x));
    for y in img.members(cell) {
        let img2 = equitable_refine(g, &img.individualize(y));
        if let Some(m) = find_mapping(g, &dom2, img2, pins) {
            return Some(m);
        }
    }
    None
}

fn edges_preserved(g: &Graph, p: &Perm) -> bool {
    g.edges().all(|(u, v)| g.has_edge(p.apply(u), p.apply(v)))
}

/// True iff `p` maps every edge to an edge. For a bijection on a fixed
/// finite graph this already forces non-edges to non-edges.
pub fn is_edge_preserving(g: &Graph, p: &Perm) -> bool {
    is_edge_preserving_with(g, p, ExecMode::default())
}

pub fn is_edge_preserving_with(g: &Graph, p: &Perm, mode: ExecMode) -> bool {
    assert_eq!(
        p.degree(),
        g.vertex_count(),
        "permutation degree {} != vertex count {}",
        p.degree(),
        g.vertex_count()
    );
    match mode {
        ExecMode::Sequential => edges_preserved(g, p),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => (0..g.vertex_count()).into_par_iter().all(|u| {
            g.neighbors(u)
                .iter()
                .filter(|&&v| u < v as usize)
                .all(|&v| g.has_edge(p.apply(u), p.apply(v as usize)))
        }),
    }
}

fn close_orbit(in_orbit: &mut [bool], gens: &[Perm]) {
    let mut frontier: Vec<usize> = (0..in_orbit.len()).filter(|&x| in_orbit[x]).collect();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = g.apply(x);
            if !in_orbit[y] {
                in_orbit[y] = true;
                frontier.push(y);
            }
        }
    }
}

/// Generators of the full automorphism group, in discovery order.
pub fn automorphism_generators(g: &Graph) -> Result<Vec<Perm>> {
    automorphism_generators_with(g, DEFAULT_SEARCH_BOUND, ExecMode::default())
}

/// Same generator list for every mode and thread schedule: parallel runs
/// replay the sequential accept/skip decisions during the ordered merge.
pub fn automorphism_generators_with(
    g: &Graph,
    bound: usize,
    mode: ExecMode,
) -> Result<Vec<Perm>> {
    let nv = g.vertex_count();
    if nv > bound {
        return Err(Error::Capacity {
            what: "automorphism search",
            requested: nv as u64,
            bound: bound as u64,
        });
    }
    assert!(nv >= 1, "degenerate vertex count 0");

    // Fix one vertex per step until the refinement is discrete. Every
    // automorphism fixing all of `base` pointwise is the identity.
    let mut colorings = vec![equitable_refine(g, &Coloring::uniform(nv))];
    let mut base: Vec<usize> = Vec::new();
    while !colorings.last().unwrap().is_discrete() {
        let c = colorings.last().unwrap();
        let cell = target_cell(c).unwrap();
        let v = c.members(cell)[0];
        let refined = equitable_refine(g, &c.individualize(v));
        base.push(v);
        colorings.push(refined);
    }

    // Deepest stabilizer first. At step i the discovered generators form the
    // stabilizer of base[0..=i]; candidate images already in the orbit of
    // base[i] under them need no new generator.
    let mut gens: Vec<Perm> = Vec::new();
    for i in (0..base.len()).rev() {
        let v = base[i];
        let dom = &colorings[i + 1];
        let cell_color = colorings[i].color_of(v);
        let candidates: Vec<usize> = colorings[i]
            .members(cell_color)
            .into_iter()
            .filter(|&w| w != v)
            .collect();
        let pins: Vec<(usize, usize)> = base[..i].iter().map(|&b| (b, b)).collect();

        let mut in_orbit = vec![false; nv];
        in_orbit[v] = true;
        close_orbit(&mut in_orbit, &gens);

        let try_candidate = |w: usize| -> Option<Perm> {
            let img = equitable_refine(g, &colorings[i].individualize(w));
            let mut full_pins = pins.clone();
            full_pins.push((v, w));
            find_mapping(g, dom, img, &full_pins)
        };

        match mode {
            ExecMode::Sequential => {
                for &w in &candidates {
                    if in_orbit[w] {
                        continue;
                    }
                    if let Some(m) = try_candidate(w) {
                        debug_assert!(m.apply(v) == w);
                        gens.push(m);
                        close_orbit(&mut in_orbit, &gens);
                    }
                }
            }
            #[cfg(feature = "parallel")]
            ExecMode::Parallel => {
                // Chunks only decide what is precomputed; the in-order merge
                // below makes the same accept/skip decisions as the
                // sequential loop, so chunking cannot change the output.
                let chunk_cap = rayon::current_num_threads().max(2);
                let mut idx = 0;
                while idx < candidates.len() {
                    let mut chunk: Vec<usize> = Vec::new();
                    while idx < candidates.len() && chunk.len() < chunk_cap {
                        let w = candidates[idx];
                        idx += 1;
                        if !in_orbit[w] {
                            chunk.push(w);
                        }
                    }
                    let results: Vec<(usize, Option<Perm>)> =
                        chunk.par_iter().map(|&w| (w, try_candidate(w))).collect();
                    for (w, res) in results {
                        if in_orbit[w] {
                            continue;
                        }
                        if let Some(m) = res {
                            debug_assert!(m.apply(v) == w);
                            gens.push(m);
                            close_orbit(&mut in_orbit, &gens);
                        }
                    }
                }
            }
        }
    }

    for m in &gens {
        assert!(is_edge_preserving_with(g, m, ExecMode::Sequential));
    }
    Ok(gens)
}

/// The full automorphism group, order certified by the stabilizer chain.
pub fn automorphism_group(g: &Graph) -> Result<PermGroup> {
    automorphism_group_with(g, DEFAULT_SEARCH_BOUND, ExecMode::default())
}

pub fn automorphism_group_with(g: &Graph, bound: usize, mode: ExecMode) -> Result<PermGroup> {
    let gens = automorphism_generators_with(g, bound, mode)?;
    Ok(PermGroup::from_generators_with_degree(g.vertex_count(), gens)
        .expect("generators share the vertex count"))
}

/// Every automorphism, by plain DFS over images with pairwise adjacency
/// consistency. Independent of the refinement engine; the reference for
/// differential tests.
pub fn brute_force_automorphism_list(g: &Graph) -> Result<Vec<Perm>> {
    brute_force_automorphism_list_with(g, DEFAULT_ORACLE_BOUND, ExecMode::default())
}

pub fn brute_force_automorphism_list_with(
    g: &Graph,
    bound: usize,
    mode: ExecMode,
) -> Result<Vec<Perm>> {
    let nv = g.vertex_count();
    let bound = bound.min(64); // adjacency rows are u64 bitmasks
    if nv > bound {
        return Err(Error::Capacity {
            what: "brute-force automorphism oracle",
            requested: nv as u64,
            bound: bound as u64,
        });
    }
    assert!(nv >= 1, "degenerate vertex count 0");
    let rows: Vec<u64> = (0..nv)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u64, |acc, &w| acc | (1u64 << w))
        })
        .collect();

    // Map vertices in BFS order (restarting at the smallest unvisited vertex
    // per component) so all but the first vertex of a component carry an
    // already-mapped neighbor and the adjacency constraint prunes at once.
    let mut order: Vec<usize> = Vec::with_capacity(nv);
    let mut seen = vec![false; nv];
    for root in 0..nv {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push_back(w as usize);
                }
            }
        }
    }

    let out = match mode {
        ExecMode::Sequential => {
            let mut out = Vec::new();
            let mut map = vec![u32::MAX; nv];
            oracle_dfs(&rows, &order, &mut map, 0, 0, &mut out);
            out
        }
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            // one task per image of the first vertex; flattening in image
            // order reproduces the sequential DFS order
            let v0 = order[0];
            let first: Vec<usize> = (0..nv)
                .filter(|&w| rows[w].count_ones() == rows[v0].count_ones())
                .collect();
            let nested: Vec<Vec<Perm>> = first
                .par_iter()
                .map(|&w| {
                    let mut out = Vec::new();
                    let mut map = vec![u32::MAX; nv];
                    map[v0] = w as u32;
                    oracle_dfs(&rows, &order, &mut map, 1u64 << w, 1, &mut out);
                    out
                })
                .collect();
            nested.into_iter().flatten().collect()
        }
    };
    Ok(out)
}

fn oracle_dfs(
    rows: &[u64],
    order: &[usize],
    map: &mut Vec<u32>,
    used: u64,
    depth: usize,
    out: &mut Vec<Perm>,
) {
    if depth == order.len() {
        out.push(Perm::from_images(map.clone()).expect("bijection by construction"));
        return;
    }
    let v = order[depth];
    // Image of v's already-mapped neighborhood. A candidate w is consistent
    // with every mapped vertex exactly when its adjacency into the used set
    // equals this mask, adjacency and non-adjacency alike.
    let mut req = 0u64;
    let mut rest = rows[v];
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if map[u] != u32::MAX {
            req |= 1u64 << map[u];
        }
    }
    let deg = rows[v].count_ones();
    for w in 0..rows.len() {
        if used & (1u64 << w) != 0 || rows[w].count_ones() != deg || rows[w] & used != req {
            continue;
        }
        map[v] = w as u32;
        oracle_dfs(rows, order, map, used | (1u64 << w), depth + 1, out);
        map[v] = u32::MAX;
    }
}

pub fn brute_force_automorphisms(g: &Graph) -> Result<PermGroup> {
    let all = brute_force_automorphism_list(g)?;
    Ok(PermGroup::from_generators_with_degree(g.vertex_count(), all)
        .expect("uniform degree"))
}

/// Subgroup of `a` fixing vertex `v`, via a base change putting `v` first.
pub fn vertex_stabilizer(a: &PermGroup, v: usize) -> PermGroup {
    a.point_stabilizer(v)
}
