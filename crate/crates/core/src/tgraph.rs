//! Transposition sets and their graphs: the graph on points 1..n with one
//! edge per transposition. Connectivity decides whether the set generates
//! the full symmetric group; girth and tree/cycle shape feed the normality
//! precheck.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::PermGroup;
use crate::perm::{parse_cycle_list, Perm};

/// A set of transpositions on points `0..n`, stored as sorted pairs (i, j)
/// with i < j. Empty only for n = 1 (S_1 needs no generators).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TranspositionSet {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl TranspositionSet {
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<TranspositionSet> {
        if n == 0 {
            return Err(Error::invalid("point count must be at least 1"));
        }
        if pairs.is_empty() && n > 1 {
            return Err(Error::invalid("empty transposition set (only allowed for n = 1)"));
        }
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!(
                    "transposition ({},{}) out of range for n = {n}",
                    a + 1,
                    b + 1
                )));
            }
            if a == b {
                return Err(Error::InvalidInput(format!(
                    "degenerate transposition ({},{})",
                    a + 1,
                    b + 1
                )));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        let before = norm.len();
        norm.dedup();
        if norm.len() != before {
            return Err(Error::invalid("repeated transposition"));
        }
        Ok(TranspositionSet { n, pairs: norm })
    }

    /// Parses a 1-based list such as `"(1,2),(2,3),(3,1)"`. Every cycle must
    /// be a 2-cycle.
    pub fn parse(text: &str, n: usize) -> Result<TranspositionSet> {
        let cycles = parse_cycle_list(text, n)?;
        let mut pairs = Vec::with_capacity(cycles.len());
        for c in &cycles {
            if c.len() != 2 {
                return Err(Error::InvalidInput(format!(
                    "generator {} is not a transposition",
                    cycle_text(c)
                )));
            }
            pairs.push((c[0], c[1]));
        }
        TranspositionSet::new(n, &pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted pairs (i, j), i < j, 0-based.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The transpositions as degree-n permutations, in pair order.
    pub fn as_perms(&self) -> Vec<Perm> {
        self.pairs
            .iter()
            .map(|&(a, b)| Perm::transposition(self.n, a, b))
            .collect()
    }

    /// 1-based `"(i,j)"` strings, in pair order.
    pub fn pair_strings(&self) -> Vec<String> {
        self.pairs
            .iter()
            .map(|&(a, b)| format!("({},{})", a + 1, b + 1))
            .collect()
    }
}

impl std::fmt::Display for TranspositionSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.pair_strings().join(","))
    }
}

fn cycle_text(cycle: &[usize]) -> String {
    let inner: Vec<String> = cycle.iter().map(|p| (p + 1).to_string()).collect();
    format!("({})", inner.join(","))
}

/// The graph on `n` vertices whose edges are the transpositions of `S`.
#[derive(Clone, Debug)]
pub struct TranspositionGraph {
    set: TranspositionSet,
    graph: Graph,
}

pub fn build_transposition_graph(set: &TranspositionSet) -> TranspositionGraph {
    let graph = Graph::from_edges(set.n(), set.pairs());
    TranspositionGraph {
        set: set.clone(),
        graph,
    }
}

impl TranspositionGraph {
    pub fn set(&self) -> &TranspositionSet {
        &self.set
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.set.n()
    }

    /// The set generates the full symmetric group iff this graph is
    /// connected.
    pub fn generates_symmetric_group(&self) -> bool {
        self.graph.is_connected()
    }

    /// Shortest cycle length; `None` when the graph is a forest.
    pub fn girth(&self) -> Option<usize> {
        self.graph.girth()
    }

    pub fn is_tree(&self) -> bool {
        self.graph.is_connected() && self.graph.edge_count() + 1 == self.n()
    }

    /// Whether the graph is the cycle C_n: connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.n() >= 3
            && self.graph.is_connected()
            && (0..self.n()).all(|v| self.graph.degree_of(v) == 2)
    }

    /// DOT rendering with 1-based vertex labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph transpositions {\n");
        for v in 0..self.n() {
            out.push_str(&format!("  {};\n", v + 1));
        }
        for (u, v) in self.graph.edges() {
            out.push_str(&format!("  {} -- {};\n", u + 1, v + 1));
        }
        out.push_str("}\n");
        out
    }
}

/// What published structure results say about normality of the Cayley graph,
/// from the shape of the transposition graph alone. Advisory: the verifier
/// always measures normality directly.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Precheck {
    /// Tree shapes force a normal Cayley graph.
    TreeNormal,
    /// Girth at least five forces a normal Cayley graph.
    Girth5Normal,
    /// The cycles C_3 and C_4 are known non-normal.
    SmallCycleNonnormal,
    /// No applicable structure result.
    Unknown,
}

impl Precheck {
    pub fn as_str(self) -> &'static str {
        match self {
            Precheck::TreeNormal => "TREE_NORMAL",
            Precheck::Girth5Normal => "GIRTH5_NORMAL",
            Precheck::SmallCycleNonnormal => "SMALL_CYCLE_NONNORMAL",
            Precheck::Unknown => "UNKNOWN",
        }
    }
}

impl std::fmt::Display for Precheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn normality_precheck(t: &TranspositionGraph) -> Result<Precheck> {
    if !t.generates_symmetric_group() {
        return Err(Error::Disconnected);
    }
    if t.is_tree() {
        return Ok(Precheck::TreeNormal);
    }
    if t.girth().is_some_and(|g| g >= 5) {
        return Ok(Precheck::Girth5Normal);
    }
    if t.is_cycle() && (t.n() == 3 || t.n() == 4) {
        return Ok(Precheck::SmallCycleNonnormal);
    }
    Ok(Precheck::Unknown)
}

/// Full automorphism group of the graph on its n points, by backtracking
/// over images with (degree, neighbor-degree multiset) pruning. Intended for
/// the small transposition graphs only; vertex counts above 12 are refused.
pub fn small_graph_automorphisms(t: &TranspositionGraph) -> Result<PermGroup> {
    let n = t.n();
    if n > 12 {
        return Err(Error::Capacity {
            what: "transposition-graph automorphism search",
            requested: n as u64,
            bound: 12,
        });
    }
    let g = t.graph();
    let invariant: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree_of(w as usize)).collect();
            nd.sort_unstable();
            (g.degree_of(v), nd)
        })
        .collect();

    let mut found: Vec<Perm> = Vec::new();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search(g, &invariant, 0, &mut map, &mut used, &mut found);
    // Re-generate from the strong generators so callers iterating
    // `generators()` see a handful of permutations, not every element.
    let full = PermGroup::from_generators_with_degree(n, found).expect("uniform degree");
    let compact = PermGroup::from_generators_with_degree(n, full.strong_generators())
        .expect("uniform degree");
    debug_assert_eq!(compact.order(), full.order());
    return Ok(compact);

    fn search(
        g: &Graph,
        invariant: &[(usize, Vec<usize>)],
        v: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<Perm>,
    ) {
        let n = invariant.len();
        if v == n {
            let images: Vec<u32> = map.iter().map(|&w| w as u32).collect();
            found.push(Perm::from_images(images).expect("bijection by construction"));
            return;
        }
        for w in 0..n {
            if used[w] || invariant[v] != invariant[w] {
                continue;
            }
            // adjacency with every already-mapped vertex must match both ways
            let ok = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(map[u], w));
            if !ok {
                continue;
            }
            map[v] = w;
            used[w] = true;
            search(g, invariant, v + 1, map, used, found);
            used[w] = false;
            map[v] = usize::MAX;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::factorial;

    fn set(pairs: &[(usize, usize)], n: usize) -> TranspositionSet {
        let pairs0: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
        TranspositionSet::new(n, &pairs0).unwrap()
    }

    fn cycle_set(n: usize) -> TranspositionSet {
        let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        TranspositionSet::new(n, &pairs).unwrap()
    }

    fn path_set(n: usize) -> TranspositionSet {
        let pairs: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        TranspositionSet::new(n, &pairs).unwrap()
    }

    fn star_set(n: usize) -> TranspositionSet {
        let pairs: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
        TranspositionSet::new(n, &pairs).unwrap()
    }

    #[test]
    fn set_validation() {
        assert!(TranspositionSet::new(4, &[(0, 1), (1, 0)]).is_err()); // repeat after normalize
        assert!(TranspositionSet::new(4, &[(2, 2)]).is_err());
        assert!(TranspositionSet::new(3, &[(0, 3)]).is_err());
        assert!(TranspositionSet::new(4, &[]).is_err());
        assert!(TranspositionSet::new(1, &[]).is_ok());
        let s = set(&[(2, 1), (1, 3)], 3);
        assert_eq!(s.pairs(), &[(0, 1), (0, 2)]);
    }

    #[test]
    fn parse_accepts_only_transpositions() {
        let s = TranspositionSet::parse("(1,2),(2,3),(3,1)", 3).unwrap();
        assert_eq!(s.len(), 3);
        assert!(TranspositionSet::parse("(1,2,3)", 3).is_err());
        assert!(TranspositionSet::parse("(1,2)(2,3)", 3).is_ok());
        assert_eq!(s.pair_strings(), vec!["(1,2)", "(1,3)", "(2,3)"]);
    }

    #[test]
    fn graph_shapes() {
        let c5 = build_transposition_graph(&cycle_set(5));
        assert!(c5.is_cycle());
        assert!(!c5.is_tree());
        assert_eq!(c5.girth(), Some(5));
        assert_eq!(c5.graph().edge_count(), 5);

        let p4 = build_transposition_graph(&path_set(4));
        assert!(p4.is_tree());
        assert_eq!(p4.girth(), None);

        let k13 = build_transposition_graph(&star_set(4));
        assert!(k13.is_tree());
        assert_eq!(k13.graph().degree_of(0), 3);

        let k3 = build_transposition_graph(&cycle_set(3));
        assert_eq!(k3.girth(), Some(3));
    }

    #[test]
    fn connectivity_decides_generation() {
        for n in 2..=6 {
            for s in [path_set(n), star_set(n)] {
                let t = build_transposition_graph(&s);
                assert!(t.generates_symmetric_group());
                let g = PermGroup::from_generators(s.as_perms()).unwrap();
                assert_eq!(g.order_u64(), Some(factorial(n)));
            }
        }
        let split = set(&[(1, 2), (3, 4)], 4);
        let t = build_transposition_graph(&split);
        assert!(!t.generates_symmetric_group());
        let g = PermGroup::from_generators(split.as_perms()).unwrap();
        assert_eq!(g.order_u64(), Some(4));

        let t1 = build_transposition_graph(&TranspositionSet::new(1, &[]).unwrap());
        assert!(t1.generates_symmetric_group());
    }

    #[test]
    fn precheck_verdicts() {
        let cases = [
            (path_set(5), Precheck::TreeNormal),
            (star_set(6), Precheck::TreeNormal),
            (cycle_set(5), Precheck::Girth5Normal),
            (cycle_set(8), Precheck::Girth5Normal),
            (cycle_set(3), Precheck::SmallCycleNonnormal),
            (cycle_set(4), Precheck::SmallCycleNonnormal),
        ];
        for (s, want) in cases {
            let t = build_transposition_graph(&s);
            assert_eq!(normality_precheck(&t).unwrap(), want, "{s}");
        }
        // C_4 plus a chord: girth 3 but not a cycle graph
        let chord = set(&[(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)], 4);
        let t = build_transposition_graph(&chord);
        assert_eq!(normality_precheck(&t).unwrap(), Precheck::Unknown);

        let split = set(&[(1, 2), (3, 4)], 4);
        let t = build_transposition_graph(&split);
        assert!(matches!(normality_precheck(&t), Err(Error::Disconnected)));
    }

    #[test]
    fn automorphism_orders_of_named_graphs() {
        for n in 3..=8 {
            let t = build_transposition_graph(&cycle_set(n));
            let aut = small_graph_automorphisms(&t).unwrap();
            assert_eq!(aut.order_u64(), Some(2 * n as u64), "Aut(C_{n})");
            assert_eq!(aut.recognize_dihedral().unwrap(), Some(n as u64));
        }
        let p4 = small_graph_automorphisms(&build_transposition_graph(&path_set(4))).unwrap();
        assert_eq!(p4.order_u64(), Some(2));
        let k13 = small_graph_automorphisms(&build_transposition_graph(&star_set(4))).unwrap();
        assert_eq!(k13.order_u64(), Some(6));
        let k3 = small_graph_automorphisms(&build_transposition_graph(&cycle_set(3))).unwrap();
        assert_eq!(k3.order_u64(), Some(6));
    }

    #[test]
    fn automorphisms_match_naive_filter() {
        let sets = [cycle_set(5), path_set(5), star_set(5), cycle_set(6), set(&[(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)], 4)];
        for s in sets {
            let t = build_transposition_graph(&s);
            let aut = small_graph_automorphisms(&t).unwrap();
            let mut naive = 0u64;
            for r in 0..factorial(s.n()) {
                let p = Perm::unrank(r, s.n());
                let preserves = t
                    .graph()
                    .edges()
                    .all(|(u, v)| t.graph().has_edge(p.apply(u), p.apply(v)));
                if preserves {
                    naive += 1;
                    assert!(aut.contains(&p));
                }
            }
            assert_eq!(aut.order_u64(), Some(naive), "{s}");
        }
    }

    #[test]
    fn automorphisms_fix_the_set_of_pairs() {
        let s = cycle_set(6);
        let t = build_transposition_graph(&s);
        let aut = small_graph_automorphisms(&t).unwrap();
        for a in aut.elements(100).unwrap() {
            for &(i, j) in s.pairs() {
                let (x, y) = (a.apply(i), a.apply(j));
                let norm = (x.min(y), x.max(y));
                assert!(s.pairs().contains(&norm));
            }
        }
    }

    #[test]
    fn capacity_limit() {
        let s = path_set(13);
        let t = build_transposition_graph(&s);
        assert!(small_graph_automorphisms(&t).unwrap_err().is_capacity());
    }

    #[test]
    fn dot_output_shape() {
        let t = build_transposition_graph(&cycle_set(3));
        let dot = t.to_dot();
        assert!(dot.starts_with("graph transpositions {"));
        assert!(dot.contains("1 -- 2;"));
        assert!(dot.contains("1 -- 3;"));
        assert!(dot.contains("2 -- 3;"));
        assert!(dot.ends_with("}\n"));
    }
}
