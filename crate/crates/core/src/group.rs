//! Permutation groups with a base and strong generating set.
//!
//! The chain is built deterministically (no randomization): every Schreier
//! generator of every level is sifted through the deeper levels, and residues
//! that fail to sift are recorded as new strong generators. Construction
//! finishes only when every Schreier pair has been processed, so `order`,
//! `contains`, and everything built on them are exact.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Largest group order the enumeration-based queries (`elements`,
/// `intersection_is_trivial`, `center_is_trivial`, `recognize_dihedral`)
/// will expand.
pub const DEFAULT_ENUM_BOUND: u64 = 1_000_000;

/// One level of the stabilizer chain: the orbit of `base` under the strong
/// generators registered here, with an explicit transversal (`transversal[u]`
/// maps `base` to `u`).
struct Level {
    base: usize,
    orbit: Vec<usize>,
    transversal: Vec<Option<Perm>>,
    gen_ids: Vec<usize>,
    /// Schreier pairs (orbit point, generator id) not yet verified.
    pending: VecDeque<(usize, usize)>,
}

/// A permutation group given by generators, with a verified stabilizer chain.
/// Immutable once constructed; all queries are read-only.
pub struct PermGroup {
    degree: usize,
    /// Canonical (sorted, deduplicated, identity-free) input generators.
    generators: Vec<Perm>,
    /// Strong generator arena; levels refer into it by index.
    arena: Vec<Perm>,
    levels: Vec<Level>,
    base_hints: Vec<usize>,
}

impl PermGroup {
    /// Builds the group generated by `gens`. The degree is inferred from the
    /// first generator, so the list must be nonempty; a list containing only
    /// identities yields the trivial group.
    pub fn from_generators(gens: Vec<Perm>) -> Result<PermGroup> {
        assert!(!gens.is_empty(), "need at least one generator to infer the degree");
        let degree = gens[0].degree();
        Self::with_base_hints(degree, gens, &[])
    }

    /// Like [`PermGroup::from_generators`] but with the degree given
    /// explicitly, so an empty generator list (the trivial group) is allowed.
    pub fn from_generators_with_degree(degree: usize, gens: Vec<Perm>) -> Result<PermGroup> {
        Self::with_base_hints(degree, gens, &[])
    }

    /// Builds the chain with the first base points forced to `base_hints`
    /// (in order). Used for base changes, e.g. putting a vertex first so the
    /// tail of the chain is its stabilizer.
    pub fn with_base_hints(degree: usize, gens: Vec<Perm>, base_hints: &[usize]) -> Result<PermGroup> {
        assert!(degree >= 1, "degenerate degree 0");
        for (i, &b) in base_hints.iter().enumerate() {
            assert!(b < degree, "base hint {b} out of range for degree {degree}");
            assert!(!base_hints[..i].contains(&b), "duplicate base hint {b}");
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::MixedDegrees(degree, g.degree()));
            }
        }
        let mut generators: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        generators.sort();
        generators.dedup();

        let mut group = PermGroup {
            degree,
            generators,
            arena: Vec::new(),
            levels: Vec::new(),
            base_hints: base_hints.to_vec(),
        };
        for g in group.generators.clone() {
            group.sift_and_register(g, 0);
        }
        group.drain_pending();
        for g in &group.generators {
            assert!(group.sifts_to_identity(g), "chain fails to certify generator {g}");
        }
        Ok(group)
    }

    /// Sifts `p` starting at `start_level`; if a nontrivial residue drops out
    /// at level `j`, records it as a strong generator at levels `0..=j`
    /// (it fixes the first `j` base points, so it belongs to all of them).
    fn sift_and_register(&mut self, p: Perm, start_level: usize) {
        let mut p = p;
        let mut j = start_level;
        loop {
            if p.is_identity() {
                return;
            }
            if j == self.levels.len() {
                let base = self
                    .base_hints
                    .get(j)
                    .copied()
                    .unwrap_or_else(|| p.smallest_moved().unwrap());
                self.push_level(base);
            }
            let base = self.levels[j].base;
            let v = p.apply(base);
            if v == base {
                j += 1;
                continue;
            }
            match &self.levels[j].transversal[v] {
                Some(t) => {
                    p = p.compose(&t.inverse());
                    j += 1;
                }
                None => {
                    let gid = self.arena.len();
                    self.arena.push(p);
                    for k in 0..=j {
                        self.register_gen(k, gid);
                    }
                    return;
                }
            }
        }
    }

    fn push_level(&mut self, base: usize) {
        let mut transversal = vec![None; self.degree];
        transversal[base] = Some(Perm::identity(self.degree));
        self.levels.push(Level {
            base,
            orbit: vec![base],
            transversal,
            gen_ids: Vec::new(),
            pending: VecDeque::new(),
        });
    }

    /// Adds strong generator `gid` to level `k`: queues Schreier pairs for
    /// the existing orbit, then grows the orbit. The orbit is only ever
    /// extended, never rebuilt, so pairs already processed stay valid.
    fn register_gen(&mut self, k: usize, gid: usize) {
        {
            let level = &mut self.levels[k];
            level.gen_ids.push(gid);
            for &u in &level.orbit {
                level.pending.push_back((u, gid));
            }
        }
        let old_len = self.levels[k].orbit.len();
        for idx in 0..old_len {
            let u = self.levels[k].orbit[idx];
            self.extend_point(k, u, gid);
        }
        // points added above (or below) still need closing under every
        // generator of the level
        let mut idx = old_len;
        while idx < self.levels[k].orbit.len() {
            let u = self.levels[k].orbit[idx];
            idx += 1;
            for gi in 0..self.levels[k].gen_ids.len() {
                let gid2 = self.levels[k].gen_ids[gi];
                self.extend_point(k, u, gid2);
            }
        }
    }

    fn extend_point(&mut self, k: usize, u: usize, gid: usize) {
        let v = self.arena[gid].apply(u);
        if self.levels[k].transversal[v].is_some() {
            return;
        }
        let t_v = {
            let t_u = self.levels[k].transversal[u].as_ref().unwrap();
            t_u.compose(&self.arena[gid])
        };
        let level = &mut self.levels[k];
        level.transversal[v] = Some(t_v);
        level.orbit.push(v);
        for &gid2 in &level.gen_ids {
            level.pending.push_back((v, gid2));
        }
    }

    /// Processes Schreier pairs, shallowest level first, until none remain.
    /// Each pair (u, s) yields the Schreier generator t_u·s·t_{u^s}⁻¹, which
    /// fixes this level's base and is sifted through the levels below.
    fn drain_pending(&mut self) {
        loop {
            let Some(i) = self.levels.iter().position(|l| !l.pending.is_empty()) else {
                return;
            };
            let (u, gid) = self.levels[i].pending.pop_front().unwrap();
            let sigma = {
                let level = &self.levels[i];
                let g = &self.arena[gid];
                let t_u = level.transversal[u].as_ref().unwrap();
                let w = t_u.compose(g);
                let t_v = level.transversal[g.apply(u)].as_ref().unwrap();
                if w == *t_v {
                    continue;
                }
                w.compose(&t_v.inverse())
            };
            self.sift_and_register(sigma, i + 1);
        }
    }

    fn sifts_to_identity(&self, p: &Perm) -> bool {
        let mut p = p.clone();
        for level in &self.levels {
            let v = p.apply(level.base);
            if v == level.base {
                continue;
            }
            match &level.transversal[v] {
                Some(t) => p = p.compose(&t.inverse()),
                None => return false,
            }
        }
        p.is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Canonical generator list (sorted, deduplicated, identities dropped).
    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Strong generators certifying the chain, in canonical order.
    pub fn strong_generators(&self) -> Vec<Perm> {
        let mut sg = self.arena.clone();
        sg.sort();
        sg.dedup();
        sg
    }

    /// Base points of the stabilizer chain, shallowest first.
    pub fn base_points(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Exact group order: the product of the fundamental orbit sizes.
    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().try_into().ok()
    }

    /// Membership by sifting; no enumeration.
    pub fn contains(&self, p: &Perm) -> bool {
        assert_eq!(
            p.degree(),
            self.degree,
            "degree mismatch in contains: {} vs {}",
            p.degree(),
            self.degree
        );
        self.sifts_to_identity(p)
    }

    /// Orbit of `point` under the group, sorted ascending.
    pub fn orbit_of(&self, point: usize) -> Vec<usize> {
        assert!(point < self.degree, "point {point} out of range");
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut idx = 0;
        while idx < orbit.len() {
            let u = orbit[idx];
            idx += 1;
            for g in &self.generators {
                let v = g.apply(u);
                if !seen[v] {
                    seen[v] = true;
                    orbit.push(v);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit_of(0).len() == self.degree
    }

    /// All elements, in the deterministic order induced by the chain.
    /// Errors if the order exceeds `bound`.
    pub fn elements(&self, bound: u64) -> Result<Vec<Perm>> {
        let order = self.order();
        if order > BigUint::from(bound) {
            return Err(Error::Capacity {
                what: "group element enumeration",
                requested: order.try_into().unwrap_or(u64::MAX),
                bound,
            });
        }
        let mut elems = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for x in &elems {
                for &u in &level.orbit {
                    next.push(x.compose(level.transversal[u].as_ref().unwrap()));
                }
            }
            elems = next;
        }
        Ok(elems)
    }

    /// Uniformly random element, via one random transversal representative
    /// per level (the factorization is unique, so this is exactly uniform).
    pub fn random_element<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Perm {
        let mut x = Perm::identity(self.degree);
        for level in self.levels.iter().rev() {
            let u = level.orbit[rng.gen_range(0..level.orbit.len())];
            x = x.compose(level.transversal[u].as_ref().unwrap());
        }
        x
    }

    pub fn is_subgroup_of(&self, ambient: &PermGroup) -> bool {
        self.degree == ambient.degree && self.generators.iter().all(|g| ambient.contains(g))
    }

    /// Whether `sub` is normal in `self`. Checking generator conjugates both
    /// ways suffices: conjugation by a generator maps `sub` into itself, hence
    /// onto itself (finite), and products of generators follow.
    pub fn is_normal_subgroup(&self, sub: &PermGroup) -> Result<bool> {
        if !sub.is_subgroup_of(self) {
            return Err(Error::NotASubgroup);
        }
        Ok(self.generators.iter().all(|g| {
            sub.generators
                .iter()
                .all(|s| sub.contains(&s.conjugate(g)))
        }))
    }

    /// Whether the two groups meet only in the identity, by enumerating the
    /// smaller one and sifting each element through the other.
    pub fn intersection_is_trivial(&self, other: &PermGroup) -> Result<bool> {
        assert_eq!(
            self.degree, other.degree,
            "degree mismatch in intersection: {} vs {}",
            self.degree, other.degree
        );
        let (small, big) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        let elems = small.elements(DEFAULT_ENUM_BOUND)?;
        Ok(elems.iter().all(|x| x.is_identity() || !big.contains(x)))
    }

    /// Whether no non-identity element commutes with every generator.
    pub fn center_is_trivial(&self) -> Result<bool> {
        let elems = self.elements(DEFAULT_ENUM_BOUND)?;
        Ok(!elems.iter().any(|z| {
            !z.is_identity() && self.generators.iter().all(|g| z.compose(g) == g.compose(z))
        }))
    }

    /// Returns `Some(m)` iff the group is dihedral of order 2m, m ≥ 3:
    /// a cyclic ⟨r⟩ of order m plus an involution inverting r. Any single
    /// element outside ⟨r⟩ decides, since in a genuine dihedral group every
    /// such element is an inverting involution.
    pub fn recognize_dihedral(&self) -> Result<Option<u64>> {
        let elems = self.elements(DEFAULT_ENUM_BOUND)?;
        let order = elems.len() as u64;
        if order < 6 || !order.is_multiple_of(2) {
            return Ok(None);
        }
        let m = order / 2;
        let Some(r) = elems.iter().find(|x| x.element_order() == m) else {
            return Ok(None);
        };
        let mut powers = HashSet::with_capacity(m as usize);
        let mut x = Perm::identity(self.degree);
        for _ in 0..m {
            powers.insert(x.clone());
            x = x.compose(r);
        }
        let t = elems
            .iter()
            .find(|x| !powers.contains(*x))
            .expect("index-2 subgroup cannot exhaust the group");
        let ok = t.element_order() == 2 && r.conjugate(t) == r.inverse();
        Ok(if ok { Some(m) } else { None })
    }

    /// Whether the group is the full symmetric group on its `n` points.
    pub fn is_full_symmetric(&self, n: usize) -> bool {
        assert_eq!(self.degree, n, "degree mismatch in is_full_symmetric");
        let fact = (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i));
        self.order() == fact
    }

    /// Stabilizer of `point`, by rebuilding the chain with `point` as the
    /// first base and collecting the strong generators that fix it.
    pub fn point_stabilizer(&self, point: usize) -> PermGroup {
        assert!(point < self.degree, "point {point} out of range");
        let rebased = PermGroup::with_base_hints(self.degree, self.generators.clone(), &[point])
            .expect("degrees already validated");
        let stab_gens: Vec<Perm> = rebased
            .arena
            .iter()
            .filter(|g| g.apply(point) == point)
            .cloned()
            .collect();
        PermGroup::from_generators_with_degree(self.degree, stab_gens)
            .expect("degrees already validated")
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PermGroup(degree={}, order={}, base={:?})",
            self.degree,
            self.order(),
            self.base_points()
        )
    }
}
