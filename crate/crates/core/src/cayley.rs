//! Cayley graphs of the symmetric group over transposition sets, with
//! vertices indexed by lexicographic rank. Vertex v is adjacent to w exactly
//! when unrank(w) = compose(s, unrank(v)) for some generator s, i.e. edges
//! come from left multiplication. Also provides the right and left regular
//! embeddings of group elements as vertex permutations.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exec::ExecMode;
use crate::graph::Graph;
use crate::perm::{factorial, Perm};
use crate::tgraph::TranspositionSet;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Largest n for which `build_cayley` will materialize the n! vertices.
pub const DEFAULT_BUILD_BOUND: usize = 8;

/// Named transposition families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// The n cyclically adjacent transpositions; transposition graph C_n.
    Mbs,
    /// Adjacent transpositions; transposition graph the path P_n.
    Bubble,
    /// Transpositions through point 1; transposition graph the star K_{1,n-1}.
    Star,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Mbs => "mbs",
            Family::Bubble => "bubble",
            Family::Star => "star",
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s {
            "mbs" => Ok(Family::Mbs),
            "bubble" => Ok(Family::Bubble),
            "star" => Ok(Family::Star),
            other => Err(Error::InvalidInput(format!("unknown family \"{other}\""))),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The cyclically adjacent transpositions (1,2),(2,3),…,(n−1,n),(n,1).
pub fn mbs_generators(n: usize) -> Result<TranspositionSet> {
    if n < 3 {
        return Err(Error::InvalidInput(format!(
            "cyclic family needs n >= 3, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    TranspositionSet::new(n, &pairs)
}

pub fn family_generators(family: Family, n: usize) -> Result<TranspositionSet> {
    match family {
        Family::Mbs => mbs_generators(n),
        Family::Bubble => {
            if n < 2 {
                return Err(Error::InvalidInput(format!(
                    "bubble family needs n >= 2, got {n}"
                )));
            }
            let pairs: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            TranspositionSet::new(n, &pairs)
        }
        Family::Star => {
            if n < 2 {
                return Err(Error::InvalidInput(format!(
                    "star family needs n >= 2, got {n}"
                )));
            }
            let pairs: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
            TranspositionSet::new(n, &pairs)
        }
    }
}

/// Cay(S_n, S): n! vertices indexed by rank, |S|-regular.
#[derive(Clone)]
pub struct CayleyGraph {
    n: usize,
    set: TranspositionSet,
    graph: Graph,
}

impl CayleyGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&self) -> &TranspositionSet {
        &self.set
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }

    /// DOT rendering with one-line-notation vertex labels. Refused above
    /// n = 4 (already 24 vertices).
    pub fn to_dot(&self) -> Result<String> {
        if self.n > 4 {
            return Err(Error::Capacity {
                what: "cayley graph DOT export",
                requested: self.n as u64,
                bound: 4,
            });
        }
        let mut out = String::from("graph cayley {\n");
        for v in 0..self.vertex_count() {
            out.push_str(&format!(
                "  {v} [label=\"{}\"];\n",
                one_line(&Perm::unrank(v as u64, self.n))
            ));
        }
        for (u, v) in self.graph.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        Ok(out)
    }
}

impl std::fmt::Debug for CayleyGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "CayleyGraph(n={}, S={}, vertices={})",
            self.n,
            self.set,
            self.vertex_count()
        )
    }
}

fn one_line(p: &Perm) -> String {
    p.images().iter().map(|&x| (x + 1).to_string()).collect()
}

pub fn build_cayley(n: usize, set: &TranspositionSet) -> Result<CayleyGraph> {
    build_cayley_with(n, set, DEFAULT_BUILD_BOUND, ExecMode::default())
}

pub fn build_cayley_with(
    n: usize,
    set: &TranspositionSet,
    bound: usize,
    mode: ExecMode,
) -> Result<CayleyGraph> {
    assert_eq!(set.n(), n, "transposition set is on {} points, not {n}", set.n());
    if n < 3 {
        return Err(Error::InvalidInput(format!(
            "cayley build needs n >= 3, got {n}"
        )));
    }
    if n > bound {
        return Err(Error::Capacity {
            what: "cayley graph build",
            requested: n as u64,
            bound: bound as u64,
        });
    }
    let total = factorial(n) as usize;
    let gens = set.as_perms();
    let row = |v: usize| -> Vec<u32> {
        let p = Perm::unrank(v as u64, n);
        let mut neighbors: Vec<u32> = gens.iter().map(|s| s.compose(&p).rank() as u32).collect();
        neighbors.sort_unstable();
        neighbors
    };
    let adj: Vec<Vec<u32>> = match mode {
        ExecMode::Sequential => (0..total).map(row).collect(),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => (0..total).into_par_iter().map(row).collect(),
    };
    Ok(CayleyGraph {
        n,
        set: set.clone(),
        graph: Graph::from_adjacency(adj),
    })
}

/// R(a): the permutation of the n! vertices sending rank(x) to rank(x·a).
/// A homomorphism: R(a)∘R(b) = R(a·b).
pub fn right_regular_embed(a: &Perm, n: usize) -> Perm {
    assert_eq!(a.degree(), n, "element degree {} != {n}", a.degree());
    let total = factorial(n);
    let images: Vec<u32> = (0..total)
        .map(|v| Perm::unrank(v, n).compose(a).rank() as u32)
        .collect();
    Perm::from_images(images).expect("regular action is a bijection")
}

/// λ_a: the permutation of the n! vertices sending rank(x) to rank(a⁻¹·x).
/// A homomorphism commuting with every R(b).
pub fn left_regular_embed(a: &Perm, n: usize) -> Perm {
    assert_eq!(a.degree(), n, "element degree {} != {n}", a.degree());
    let a_inv = a.inverse();
    let total = factorial(n);
    let images: Vec<u32> = (0..total)
        .map(|v| a_inv.compose(&Perm::unrank(v, n)).rank() as u32)
        .collect();
    Perm::from_images(images).expect("regular action is a bijection")
}
