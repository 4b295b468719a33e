//! Subgroup closure inside an enumerated group, and the abelian / nilpotent /
//! solvable predicates on closed subgroups (derived series and lower central
//! series over explicit element sets, with the standard fast paths).

use crate::error::{Error, Result};
use crate::group::{prime_factors, FiniteGroup};
use crate::perm::Permutation;
use dashmap::DashMap;

/// A two-sided handle on ⟨seeds⟩: either the closed element set, or the fact
/// that closure passed the requested cap.
#[derive(Clone, Debug)]
pub struct SubgroupHandle {
    seeds: Vec<usize>,
    elements: Option<Vec<u32>>,
    cap: usize,
}

impl SubgroupHandle {
    pub fn seeds(&self) -> &[usize] {
        &self.seeds
    }

    pub fn overflowed(&self) -> bool {
        self.elements.is_none()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Order of the closed subgroup; None when the closure overflowed.
    pub fn order(&self) -> Option<usize> {
        self.elements.as_ref().map(|e| e.len())
    }

    /// Ascending element indices; None when the closure overflowed.
    pub fn elements(&self) -> Option<&[u32]> {
        self.elements.as_deref()
    }
}

impl FiniteGroup {
    /// Closure of the seed indices, reported as overflow once it passes `cap`.
    pub fn subgroup_closure(&self, seeds: &[usize], cap: usize) -> SubgroupHandle {
        let elements = self
            .close_indices(seeds, cap)
            .map(|set| set.into_iter().collect());
        SubgroupHandle {
            seeds: seeds.to_vec(),
            elements,
            cap,
        }
    }

    /// Closure of explicit elements, which must lie in the group.
    pub fn subgroup_closure_of(
        &self,
        seeds: &[Permutation],
        cap: usize,
    ) -> Result<SubgroupHandle> {
        let idx: Vec<usize> = seeds
            .iter()
            .map(|p| {
                self.index_of(p)
                    .ok_or_else(|| Error::input(format!("{p} is not an element of {}", self.name())))
            })
            .collect::<Result<_>>()?;
        Ok(self.subgroup_closure(&idx, cap))
    }

    /// True iff ⟨seeds⟩ is abelian; a generating set is abelian iff it
    /// commutes pairwise, so this needs no element scan.
    pub fn is_abelian_subgroup(&self, h: &SubgroupHandle) -> bool {
        assert!(!h.overflowed(), "predicate requires a completed closure");
        h.seeds.iter().all(|&a| {
            h.seeds
                .iter()
                .all(|&b| self.multiply(a, b) == self.multiply(b, a))
        })
    }

    /// True iff the lower central series of ⟨seeds⟩ reaches the trivial
    /// subgroup. p-groups short-circuit to true.
    pub fn is_nilpotent_subgroup(&self, h: &SubgroupHandle) -> bool {
        assert!(!h.overflowed(), "predicate requires a completed closure");
        let order = h.order().unwrap() as u64;
        if order == 1 || prime_factors(order).len() == 1 {
            return true;
        }
        self.lower_central_reaches_trivial(&h.seeds, order)
    }

    /// True iff the derived series of ⟨seeds⟩ reaches the trivial subgroup.
    /// Orders with at most two distinct prime factors short-circuit to true.
    pub fn is_solvable_subgroup(&self, h: &SubgroupHandle) -> bool {
        assert!(!h.overflowed(), "predicate requires a completed closure");
        let order = h.order().unwrap() as u64;
        if prime_factors(order).len() <= 2 {
            return true;
        }
        self.derived_reaches_trivial(&h.seeds, order)
    }

    /// Derived series by generator sets: H ⊇ [H,H] ⊇ … until trivial (true)
    /// or stable nontrivial (false).
    pub(crate) fn derived_reaches_trivial(&self, gens: &[usize], order: u64) -> bool {
        let mut cur_gens: Vec<usize> = gens.to_vec();
        let mut cur_order = order;
        loop {
            let (next_gens, next_order) = self.derived_subgroup(&cur_gens);
            if next_order == 1 {
                return true;
            }
            if next_order == cur_order {
                return false; // perfect
            }
            cur_gens = next_gens;
            cur_order = next_order;
        }
    }

    pub(crate) fn lower_central_reaches_trivial(&self, gens: &[usize], _order: u64) -> bool {
        // γ₂ = [H, H], γ_{k+1} = [H, γ_k]; nilpotent iff some γ_k is trivial.
        let (mut term_gens, mut term_order) = self.derived_subgroup(gens);
        loop {
            if term_order == 1 {
                return true;
            }
            let (next_gens, next_order) = self.commutator_with(gens, &term_gens);
            if next_order == term_order {
                return false;
            }
            term_gens = next_gens;
            term_order = next_order;
        }
    }

    /// [H, H] as (generating indices, order), H given by generators.
    fn derived_subgroup(&self, gens: &[usize]) -> (Vec<usize>, u64) {
        self.commutator_with(gens, gens)
    }

    /// [⟨a_gens⟩, ⟨b_gens⟩]-style term: the normal closure under a_gens of
    /// all commutators [a, b] with a ∈ a_gens, b ∈ b_gens.
    fn commutator_with(&self, a_gens: &[usize], b_gens: &[usize]) -> (Vec<usize>, u64) {
        let mut seeds: Vec<usize> = Vec::new();
        for &a in a_gens {
            for &b in b_gens {
                let c = self.commutator(a, b);
                if c != self.identity_index() && !seeds.contains(&c) {
                    seeds.push(c);
                }
            }
        }
        if seeds.is_empty() {
            return (seeds, 1);
        }
        self.normal_closure_under(a_gens, seeds)
    }

    /// Subgroup generated by `seeds` closed under conjugation by `norm_gens`.
    fn normal_closure_under(&self, norm_gens: &[usize], mut seeds: Vec<usize>) -> (Vec<usize>, u64) {
        loop {
            let set = self
                .close_indices(&seeds, self.order())
                .expect("closure within the group cannot overflow its order");
            let mut new = Vec::new();
            for &s in &seeds {
                for &g in norm_gens {
                    let c = self.conjugate(s, g);
                    if !set.contains(&(c as u32)) && !new.contains(&c) {
                        new.push(c);
                    }
                }
            }
            if new.is_empty() {
                return (seeds, set.len() as u64);
            }
            seeds.extend(new);
        }
    }

    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        // [a, b] = a⁻¹ b⁻¹ a b
        let ai = self.inverse_of(a);
        let bi = self.inverse_of(b);
        self.multiply(self.multiply(self.multiply(ai, bi), a), b)
    }
}

/// Verdicts for a two-generated subgroup ⟨a, b⟩.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairVerdict {
    pub nilpotent: bool,
    pub solvable: bool,
    /// Order of ⟨a, b⟩ (equals the group order when the pair generates).
    pub order: usize,
}

/// Concurrent memo for two-generated subgroup verdicts, keyed by the
/// unordered pair of element indices. Writes are idempotent: the verdict for
/// a key is a pure function of the group, so racing inserts agree.
#[derive(Debug, Default)]
pub struct PairCache {
    map: DashMap<(u32, u32), PairVerdict>,
}

impl PairCache {
    pub fn new() -> Self {
        PairCache { map: DashMap::new() }
    }

    fn key(a: usize, b: usize) -> (u32, u32) {
        let (x, y) = if a <= b { (a, b) } else { (b, a) };
        (x as u32, y as u32)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Cached nilpotent/solvable verdicts for ⟨a, b⟩. When the pair generates
    /// the whole group the memoized group-level verdict is used.
    pub fn verdict(&self, group: &FiniteGroup, a: usize, b: usize, group_verdict: PairVerdict) -> PairVerdict {
        let key = Self::key(a, b);
        if let Some(v) = self.map.get(&key) {
            return *v;
        }
        let v = compute_pair_verdict(group, a, b, group_verdict);
        self.map.insert(key, v);
        v
    }
}

/// Group-level nilpotent/solvable verdict, computed once per group.
pub fn group_verdict(group: &FiniteGroup) -> PairVerdict {
    let gen_ids: Vec<usize> = group
        .generators()
        .iter()
        .map(|g| group.index_of(g).unwrap())
        .collect();
    let order = group.order() as u64;
    let nilpotent = prime_factors(order).len() == 1
        || group.lower_central_reaches_trivial(&gen_ids, order);
    let solvable = prime_factors(order).len() <= 2
        || group.derived_reaches_trivial(&gen_ids, order);
    PairVerdict {
        nilpotent,
        solvable,
        order: group.order(),
    }
}

fn compute_pair_verdict(
    group: &FiniteGroup,
    a: usize,
    b: usize,
    group_verdict: PairVerdict,
) -> PairVerdict {
    // Early exit once the closure is known to be the whole group: a proper
    // subgroup has at most |G|/2 elements.
    let half = group.order() / 2;
    match group.close_indices(&[a, b], half) {
        None => group_verdict,
        Some(set) => {
            let order = set.len() as u64;
            let gens = [a, b];
            let nfac = prime_factors(order).len();
            let nilpotent = nfac <= 1 || group.lower_central_reaches_trivial(&gens, order);
            let solvable = nfac <= 2 || group.derived_reaches_trivial(&gens, order);
            PairVerdict {
                nilpotent,
                solvable,
                order: set.len(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, d: usize) -> Permutation {
        Permutation::parse(s, d).unwrap()
    }

    fn group(name: &str, gens: &[&str], d: usize) -> FiniteGroup {
        let gs: Vec<Permutation> = gens.iter().map(|s| perm(s, d)).collect();
        FiniteGroup::enumerate(name, &gs, 1_000_000).unwrap()
    }

    fn sym(n: usize) -> FiniteGroup {
        let cycle = Permutation::from_images((1..n).chain([0]).collect()).unwrap();
        FiniteGroup::enumerate(&format!("S{n}"), &[perm("(1,2)", n), cycle], 1_000_000).unwrap()
    }

    #[test]
    fn cyclic_closure_has_element_order() {
        let g = sym(5);
        let x = g.index_of(&perm("(1,2)(3,4,5)", 5)).unwrap();
        let h = g.subgroup_closure(&[x], 100);
        assert_eq!(h.order(), Some(6));
        assert!(g.is_abelian_subgroup(&h));
    }

    #[test]
    fn sym3_inside_sym3() {
        let g = sym(3);
        let a = g.index_of(&perm("(1,2)", 3)).unwrap();
        let b = g.index_of(&perm("(1,2,3)", 3)).unwrap();
        let h = g.subgroup_closure(&[a, b], 100);
        assert_eq!(h.order(), Some(6));
        assert!(!g.is_abelian_subgroup(&h));
        assert!(!g.is_nilpotent_subgroup(&h));
        assert!(g.is_solvable_subgroup(&h));
    }

    #[test]
    fn overflow_is_reported_not_fatal() {
        let g = sym(4);
        let a = g.index_of(&perm("(1,2)", 4)).unwrap();
        let b = g.index_of(&perm("(1,2,3,4)", 4)).unwrap();
        let h = g.subgroup_closure(&[a, b], 10);
        assert!(h.overflowed());
        assert_eq!(h.order(), None);
    }

    #[test]
    fn quaternion_is_nilpotent_not_abelian() {
        // Q8 as ⟨(1,2,3,4)(5,6,7,8), (1,5,3,7)(2,8,4,6)⟩ (regular representation).
        let g = group("Q8", &["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"], 8);
        assert_eq!(g.order(), 8);
        let gens: Vec<usize> = g
            .generators()
            .iter()
            .map(|p| g.index_of(p).unwrap())
            .collect();
        let h = g.subgroup_closure(&gens, 100);
        assert!(!g.is_abelian_subgroup(&h));
        assert!(g.is_nilpotent_subgroup(&h));
        assert!(g.is_solvable_subgroup(&h));
    }

    #[test]
    fn sym4_solvable_alt5_not() {
        let s4 = sym(4);
        let gv = group_verdict(&s4);
        assert!(gv.solvable);
        assert!(!gv.nilpotent);

        let a5 = group("A5", &["(1,2,3)", "(3,4,5)"], 5);
        assert_eq!(a5.order(), 60);
        let gv = group_verdict(&a5);
        assert!(!gv.solvable);
        assert!(!gv.nilpotent);
    }

    #[test]
    fn abelian_implies_nilpotent_implies_solvable() {
        let g = sym(4);
        let cache = PairCache::new();
        let gv = group_verdict(&g);
        for a in 0..g.order() {
            for b in 0..g.order() {
                let v = cache.verdict(&g, a, b, gv);
                let h = g.subgroup_closure(&[a, b], g.order());
                if g.is_abelian_subgroup(&h) {
                    assert!(v.nilpotent);
                }
                if v.nilpotent {
                    assert!(v.solvable);
                }
            }
        }
    }

    #[test]
    fn conjugation_invariance_of_pair_verdicts() {
        let g = sym(4);
        let cache = PairCache::new();
        let gv = group_verdict(&g);
        let probes = [(1usize, 5usize), (2, 7), (3, 11), (0, 9)];
        for &(a, b) in &probes {
            let base = cache.verdict(&g, a, b, gv);
            for c in 0..g.order() {
                let ac = g.conjugate(a, c);
                let bc = g.conjugate(b, c);
                assert_eq!(cache.verdict(&g, ac, bc, gv), base);
            }
        }
    }

    #[test]
    fn lagrange_on_closures() {
        let g = sym(4);
        for a in 0..g.order() {
            let h = g.subgroup_closure(&[a], g.order());
            assert_eq!(g.order() % h.order().unwrap(), 0);
        }
    }

    #[test]
    fn burnside_fast_path_agrees_with_series() {
        // For subgroups of Sym(4) every order has ≤ 2 prime factors; the
        // derived series must agree with the fast path everywhere.
        let g = sym(4);
        for a in 0..g.order() {
            for b in (a..g.order()).step_by(3) {
                let h = g.subgroup_closure(&[a, b], g.order());
                let order = h.order().unwrap() as u64;
                if prime_factors(order).len() <= 2 {
                    let gens = [a, b];
                    assert!(g.derived_reaches_trivial(&gens, order));
                }
            }
        }
    }

    #[test]
    fn nilpotency_matches_all_sylows_normal() {
        // Cross-check on every 2-generated subgroup of Sym(4) (order ≤ 24).
        let g = sym(4);
        for a in 0..g.order() {
            for b in 0..g.order() {
                let h = g.subgroup_closure(&[a, b], g.order());
                let set: std::collections::BTreeSet<u32> =
                    h.elements().unwrap().iter().copied().collect();
                let order = set.len() as u64;
                let by_series = g.is_nilpotent_subgroup(&h);
                // H is nilpotent iff for each prime p the p-power-order
                // elements of H are closed under multiplication (they then
                // form the unique, hence normal, Sylow p-subgroup).
                let by_sylow = prime_factors(order).iter().all(|&p| {
                    let pset: std::collections::BTreeSet<u32> = set
                        .iter()
                        .copied()
                        .filter(|&x| {
                            let mut m = g.order_of_index(x as usize);
                            while m % p == 0 {
                                m /= p;
                            }
                            m == 1
                        })
                        .collect();
                    pset.iter().all(|&x| {
                        pset.iter()
                            .all(|&y| pset.contains(&(g.multiply(x as usize, y as usize) as u32)))
                    })
                });
                assert_eq!(by_series, by_sylow, "disagreement at pair ({a},{b})");
            }
        }
    }
}
