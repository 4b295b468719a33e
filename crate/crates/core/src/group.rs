//! Finite permutation groups: breadth-first enumeration from generators,
//! conjugacy classes with canonical labels, centers, centralizers, and the
//! Sylow-subgroup machinery the class-graph predicates need.

use crate::error::{Error, Result};
use crate::exec;
use crate::perm::Permutation;
use std::collections::{BTreeSet, HashMap, HashSet};

/// One conjugacy class: canonical label, representative, element order,
/// size, and the full member set (ascending element indices).
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub label: String,
    rep: u32,
    pub elem_order: u64,
    pub size: usize,
    members: Vec<u32>,
}

impl ConjClass {
    pub fn rep_index(&self) -> usize {
        self.rep as usize
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn is_central(&self) -> bool {
        self.size == 1
    }
}

/// A fully enumerated finite group of permutations.
///
/// Elements are stored sorted by image sequence; that order is the canonical
/// element order used everywhere (class representatives, scan order, labels).
/// The value is immutable once built, so it is safe to share across threads.
#[derive(Debug)]
pub struct FiniteGroup {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    inverses: Vec<u32>,
    orders: Vec<u64>,
    center: Vec<u32>,
    classes: Vec<ConjClass>,
    class_of: Vec<u32>,
}

impl FiniteGroup {
    /// Enumerates the group generated by `generators` by breadth-first
    /// product closure, then computes center, classes, and labels.
    pub fn enumerate(name: &str, generators: &[Permutation], cap: usize) -> Result<FiniteGroup> {
        if generators.is_empty() {
            return Err(Error::input("at least one generator required"));
        }
        let degree = generators[0].degree();
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(Error::input("generators must share one degree"));
        }

        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(Permutation::identity(degree));
        let mut frontier: Vec<Permutation> = vec![Permutation::identity(degree)];
        while !frontier.is_empty() {
            let products: Vec<Vec<Permutation>> = exec::map_slice(&frontier, |g| {
                generators.iter().map(|s| g.compose_unchecked(s)).collect()
            });
            let mut next = Vec::new();
            for batch in products {
                for h in batch {
                    if !seen.contains(&h) {
                        seen.insert(h.clone());
                        next.push(h);
                    }
                }
            }
            if seen.len() > cap {
                return Err(Error::Capacity { cap });
            }
            frontier = next;
        }

        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        let index: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let n = elements.len();

        let inverses: Vec<u32> = exec::map_range(n, |i| index[&elements[i].inverse()]);
        let orders: Vec<u64> = exec::map_range(n, |i| elements[i].order());

        // Center: elements commuting with every generator.
        let center: Vec<u32> = exec::filter_range(n, |i| {
            generators.iter().all(|g| {
                elements[i].compose_unchecked(g) == g.compose_unchecked(&elements[i])
            })
        })
        .into_iter()
        .map(|i| i as u32)
        .collect();

        // Conjugacy classes as orbits of conjugation by the generators.
        let gen_invs: Vec<Permutation> = generators.iter().map(|g| g.inverse()).collect();
        let mut class_of: Vec<u32> = vec![u32::MAX; n];
        let mut raw_classes: Vec<(u32, Vec<u32>)> = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let id = raw_classes.len() as u32;
            let mut members = vec![start as u32];
            class_of[start] = id;
            let mut queue = vec![start as u32];
            while let Some(x) = queue.pop() {
                for (g, ginv) in generators.iter().zip(&gen_invs) {
                    let conj = ginv.compose_unchecked(&elements[x as usize].compose_unchecked(g));
                    let y = index[&conj];
                    if class_of[y as usize] == u32::MAX {
                        class_of[y as usize] = id;
                        members.push(y);
                        queue.push(y);
                    }
                }
            }
            members.sort_unstable();
            raw_classes.push((start as u32, members));
        }

        let mut group = FiniteGroup {
            name: name.to_string(),
            degree,
            generators: generators.to_vec(),
            elements,
            index,
            inverses,
            orders,
            center,
            classes: Vec::new(),
            class_of,
        };
        group.install_classes(raw_classes);
        Ok(group)
    }

    /// Sorts classes canonically (element order, then size, then least
    /// member), assigns labels, and rewires `class_of`.
    fn install_classes(&mut self, raw: Vec<(u32, Vec<u32>)>) {
        let mut order_ids: Vec<usize> = (0..raw.len()).collect();
        let key = |i: usize| {
            let (rep, members) = &raw[i];
            (self.orders[*rep as usize], members.len(), members[0])
        };
        order_ids.sort_by_key(|&i| key(i));

        let mut classes = Vec::with_capacity(raw.len());
        let mut remap = vec![0u32; raw.len()];
        let mut prev_order: Option<u64> = None;
        let mut letter = 0usize;
        for (new_id, &old_id) in order_ids.iter().enumerate() {
            let (_, members) = &raw[old_id];
            let elem_order = self.orders[members[0] as usize];
            if prev_order == Some(elem_order) {
                letter += 1;
            } else {
                letter = 0;
                prev_order = Some(elem_order);
            }
            classes.push(ConjClass {
                label: format!("{}{}", elem_order, letter_suffix(letter)),
                rep: members[0],
                elem_order,
                size: members.len(),
                members: members.clone(),
            });
            remap[old_id] = new_id as u32;
        }
        for c in self.class_of.iter_mut() {
            *c = remap[*c as usize];
        }
        self.classes = classes;
    }

    /// Replaces default labels using representative→label overrides, then
    /// re-sorts classes by (element order, label). Every override must name a
    /// distinct class and keep labels unique.
    pub fn apply_label_table(&mut self, table: &[(Permutation, String)]) -> Result<()> {
        let mut assigned: HashMap<usize, String> = HashMap::new();
        for (rep, label) in table {
            let idx = self
                .index_of(rep)
                .ok_or_else(|| Error::integrity(format!("label representative {rep} not in group")))?;
            let cid = self.class_of[idx] as usize;
            if assigned.insert(cid, label.clone()).is_some() {
                return Err(Error::integrity(format!(
                    "two label overrides target the class of {rep}"
                )));
            }
        }
        for (cid, label) in &assigned {
            self.classes[*cid].label = label.clone();
        }
        let labels: HashSet<&str> = self.classes.iter().map(|c| c.label.as_str()).collect();
        if labels.len() != self.classes.len() {
            return Err(Error::integrity("label table produced duplicate class labels"));
        }

        // Re-sort by (element order, label) so vertex order follows labels.
        let mut ids: Vec<usize> = (0..self.classes.len()).collect();
        ids.sort_by(|&a, &b| {
            let ca = &self.classes[a];
            let cb = &self.classes[b];
            ca.elem_order
                .cmp(&cb.elem_order)
                .then_with(|| ca.label.cmp(&cb.label))
        });
        let mut remap = vec![0u32; ids.len()];
        for (new_id, &old_id) in ids.iter().enumerate() {
            remap[old_id] = new_id as u32;
        }
        let mut sorted = ids.iter().map(|&i| self.classes[i].clone()).collect::<Vec<_>>();
        std::mem::swap(&mut self.classes, &mut sorted);
        for c in self.class_of.iter_mut() {
            *c = remap[*c as usize];
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    #[inline]
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        let prod = self.elements[a].compose_unchecked(&self.elements[b]);
        self.index[&prod] as usize
    }

    #[inline]
    pub fn inverse_of(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// Index of `x^g = g⁻¹xg`.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        let gi = self.inverses[g] as usize;
        self.multiply(self.multiply(gi, x), g)
    }

    pub fn order_of_index(&self, i: usize) -> u64 {
        self.orders[i]
    }

    pub fn identity_index(&self) -> usize {
        0 // the identity is lexicographically least
    }

    pub fn center_indices(&self) -> &[u32] {
        &self.center
    }

    pub fn is_abelian(&self) -> bool {
        self.center.len() == self.order()
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &ConjClass {
        &self.classes[id]
    }

    pub fn class_of(&self, elem: usize) -> usize {
        self.class_of[elem] as usize
    }

    pub fn class_by_label(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    /// Ids of the classes of size > 1, in canonical order.
    pub fn non_central_class_ids(&self) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&i| !self.classes[i].is_central())
            .collect()
    }

    /// Ids of all non-identity classes, in canonical order.
    pub fn non_identity_class_ids(&self) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&i| self.classes[i].elem_order > 1)
            .collect()
    }

    /// Elements commuting with the element at `x`, ascending.
    pub fn centralizer_of_index(&self, x: usize) -> Vec<u32> {
        let xp = &self.elements[x];
        exec::filter_range(self.order(), |i| {
            self.elements[i].compose_unchecked(xp) == xp.compose_unchecked(&self.elements[i])
        })
        .into_iter()
        .map(|i| i as u32)
        .collect()
    }

    /// Centralizer of an explicit element, which must lie in the group.
    pub fn centralizer(&self, x: &Permutation) -> Result<Vec<Permutation>> {
        let idx = self
            .index_of(x)
            .ok_or_else(|| Error::input(format!("{x} is not an element of {}", self.name)))?;
        Ok(self
            .centralizer_of_index(idx)
            .into_iter()
            .map(|i| self.elements[i as usize].clone())
            .collect())
    }

    /// True iff every non-identity element order is a prime power.
    pub fn is_eppo(&self) -> bool {
        self.classes
            .iter()
            .filter(|c| c.elem_order > 1)
            .all(|c| is_prime_power(c.elem_order).is_some())
    }

    /// Distinct element orders, from the class data.
    pub fn element_orders(&self) -> BTreeSet<u64> {
        self.classes.iter().map(|c| c.elem_order).collect()
    }

    pub fn has_element_of_order(&self, n: u64) -> bool {
        self.classes.iter().any(|c| c.elem_order == n)
    }

    /// A Sylow p-subgroup as an ascending element-index set, grown greedily
    /// from p-elements (a non-Sylow p-subgroup always extends inside its
    /// normalizer, so the greedy step never gets stuck).
    pub fn sylow_subgroup(&self, p: u64) -> Result<Vec<u32>> {
        let order = self.order() as u64;
        if order % p != 0 || is_prime_power(p) != Some((p, 1)) {
            return Err(Error::input(format!(
                "{p} is not a prime divisor of |{}| = {order}",
                self.name
            )));
        }
        let mut target = 1u64;
        let mut rest = order;
        while rest % p == 0 {
            rest /= p;
            target *= p;
        }
        let candidates: Vec<usize> = (0..self.order())
            .filter(|&i| {
                let o = self.orders[i];
                o > 1 && matches!(is_prime_power(o), Some((q, _)) if q == p)
            })
            .collect();
        let mut current: BTreeSet<u32> = BTreeSet::new();
        current.insert(self.identity_index() as u32);
        let mut gens: Vec<usize> = Vec::new();
        while (current.len() as u64) < target {
            let mut grew = false;
            for &cand in &candidates {
                if current.contains(&(cand as u32)) {
                    continue;
                }
                let mut seeds = gens.clone();
                seeds.push(cand);
                if let Some(set) = self.close_indices(&seeds, target as usize) {
                    if is_power_of(set.len() as u64, p) {
                        current = set;
                        gens = seeds;
                        grew = true;
                        break;
                    }
                }
            }
            if !grew {
                return Err(Error::integrity(format!(
                    "Sylow {p}-subgroup construction stalled in {}",
                    self.name
                )));
            }
        }
        Ok(current.into_iter().collect())
    }

    /// Closure of the given seeds inside the group, or None once it exceeds `cap`.
    pub(crate) fn close_indices(&self, seeds: &[usize], cap: usize) -> Option<BTreeSet<u32>> {
        let mut set: HashSet<u32> = HashSet::new();
        set.insert(self.identity_index() as u32);
        let mut frontier: Vec<u32> = vec![self.identity_index() as u32];
        while let Some(x) = frontier.pop() {
            for &s in seeds {
                let y = self.multiply(x as usize, s) as u32;
                if set.insert(y) {
                    if set.len() > cap {
                        return None;
                    }
                    frontier.push(y);
                }
            }
        }
        Some(set.into_iter().collect())
    }

    /// Whether the element-index subset is closed under conjugation by the group.
    pub fn is_normal_subset(&self, subset: &BTreeSet<u32>) -> bool {
        let gen_ids: Vec<usize> = self
            .generators
            .iter()
            .map(|g| self.index[g] as usize)
            .collect();
        subset.iter().all(|&x| {
            gen_ids
                .iter()
                .all(|&g| subset.contains(&(self.conjugate(x as usize, g) as u32)))
        })
    }

    /// p+1 elements of a non-abelian Sylow p-subgroup that pairwise fail to
    /// commute and lie in distinct conjugacy classes; None when every Sylow
    /// p-subgroup is abelian (or no such family exists).
    pub fn find_sylow_witnesses(&self, p: u64) -> Result<Option<Vec<Permutation>>> {
        let sylow = self.sylow_subgroup(p)?;
        let is_abelian = sylow.iter().all(|&a| {
            sylow.iter().all(|&b| {
                self.multiply(a as usize, b as usize) == self.multiply(b as usize, a as usize)
            })
        });
        if is_abelian {
            return Ok(None);
        }
        let want = (p + 1) as usize;
        let pool: Vec<usize> = sylow
            .iter()
            .map(|&i| i as usize)
            .filter(|&i| i != self.identity_index())
            .collect();
        let mut chosen: Vec<usize> = Vec::new();
        if self.search_witnesses(&pool, 0, want, &mut chosen) {
            Ok(Some(chosen.iter().map(|&i| self.elements[i].clone()).collect()))
        } else {
            Ok(None)
        }
    }

    fn search_witnesses(
        &self,
        pool: &[usize],
        from: usize,
        want: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == want {
            return true;
        }
        for pos in from..pool.len() {
            let cand = pool[pos];
            let ok = chosen.iter().all(|&c| {
                self.class_of[c] != self.class_of[cand]
                    && self.multiply(c, cand) != self.multiply(cand, c)
            });
            if ok {
                chosen.push(cand);
                if self.search_witnesses(pool, pos + 1, want, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
}

fn letter_suffix(mut i: usize) -> String {
    // A, B, …, Z, AA, AB, … (bijective base 26)
    let mut out = Vec::new();
    loop {
        out.push(b'A' + (i % 26) as u8);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    out.reverse();
    String::from_utf8(out).unwrap()
}

/// Returns (p, k) when n = p^k with p prime and k ≥ 1.
pub fn is_prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut m = n;
    let mut p = 0u64;
    for d in 2..=m {
        if d * d > m {
            p = m; // remaining m is prime
            break;
        }
        if m % d == 0 {
            p = d;
            break;
        }
    }
    let mut k = 0u32;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    if m == 1 {
        Some((p, k))
    } else {
        None
    }
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Distinct prime factors of n, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, d: usize) -> Permutation {
        Permutation::parse(s, d).unwrap()
    }

    fn sym(n: usize) -> FiniteGroup {
        let gens = vec![
            perm("(1,2)", n),
            Permutation::from_images((1..n).chain([0]).collect()).unwrap(),
        ];
        FiniteGroup::enumerate(&format!("S{n}"), &gens, 100_000).unwrap()
    }

    #[test]
    fn sym4_order_24() {
        let g = sym(4);
        assert_eq!(g.order(), 24);
        assert_eq!(g.classes().len(), 5);
        assert_eq!(g.center_indices().len(), 1);
    }

    #[test]
    fn dihedral8_order_and_classes() {
        // D_8 on 4 points: rotation + reflection.
        let gens = vec![perm("(1,2,3,4)", 4), perm("(2,4)", 4)];
        let g = FiniteGroup::enumerate("D8", &gens, 100).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.classes().len(), 5);
        assert_eq!(g.center_indices().len(), 2);
    }

    #[test]
    fn cap_overflow_is_capacity_error() {
        let gens = vec![perm("(1,2)", 5), perm("(1,2,3,4,5)", 5)];
        match FiniteGroup::enumerate("S5", &gens, 30) {
            Err(Error::Capacity { cap }) => assert_eq!(cap, 30),
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn class_sizes_divide_order_and_sum() {
        let g = sym(5);
        let total: usize = g.classes().iter().map(|c| c.size).sum();
        assert_eq!(total, g.order());
        for c in g.classes() {
            assert_eq!(g.order() % c.size, 0);
            // element order is constant on the class
            for &m in c.members() {
                assert_eq!(g.order_of_index(m as usize), c.elem_order);
            }
        }
    }

    #[test]
    fn centralizer_of_transposition_in_sym3() {
        let g = sym(3);
        let x = perm("(1,2)", 3);
        let cent = g.centralizer(&x).unwrap();
        assert_eq!(cent.len(), 2);
        assert!(cent.contains(&Permutation::identity(3)));
        assert!(cent.contains(&x));
    }

    #[test]
    fn centralizer_of_3cycle_in_sym4_has_order_3() {
        let g = sym(4);
        let x = perm("(1,2,3)", 4);
        assert_eq!(g.centralizer(&x).unwrap().len(), 3);
    }

    #[test]
    fn centralizer_requires_membership() {
        let g = sym(3);
        let outside = perm("(1,2,3)", 4);
        assert!(g.centralizer(&outside).is_err());
    }

    #[test]
    fn central_element_centralizer_is_whole_group() {
        let gens = vec![perm("(1,2,3,4)", 4), perm("(2,4)", 4)];
        let g = FiniteGroup::enumerate("D8", &gens, 100).unwrap();
        let z = perm("(1,3)(2,4)", 4); // the central rotation
        assert_eq!(g.centralizer(&z).unwrap().len(), 8);
    }

    #[test]
    fn eppo_detection() {
        assert!(sym(3).is_eppo()); // orders 1,2,3
        assert!(sym(4).is_eppo()); // orders 1,2,3,4
        assert!(!sym(5).is_eppo()); // (1,2)(3,4,5) has order 6
    }

    #[test]
    fn class_labels_follow_atlas_convention() {
        let g = sym(5);
        // Sym(5): transpositions (size 10) get 2A, double transpositions (15) 2B.
        let c2a = g.class(g.class_by_label("2A").unwrap());
        let c2b = g.class(g.class_by_label("2B").unwrap());
        assert_eq!(c2a.size, 10);
        assert_eq!(c2b.size, 15);
        assert!(g.class_by_label("6A").is_some());
    }

    #[test]
    fn sylow_witnesses_in_dihedral8() {
        let gens = vec![perm("(1,2,3,4)", 4), perm("(2,4)", 4)];
        let g = FiniteGroup::enumerate("D8", &gens, 100).unwrap();
        let w = g.find_sylow_witnesses(2).unwrap().unwrap();
        assert_eq!(w.len(), 3);
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                let ij = w[i].compose(&w[j]).unwrap();
                let ji = w[j].compose(&w[i]).unwrap();
                assert_ne!(ij, ji, "witnesses must not commute");
                let ci = g.class_of(g.index_of(&w[i]).unwrap());
                let cj = g.class_of(g.index_of(&w[j]).unwrap());
                assert_ne!(ci, cj, "witnesses must be non-conjugate");
            }
        }
    }

    #[test]
    fn sylow_witnesses_absent_for_cyclic_sylow() {
        let g = sym(3);
        assert!(g.find_sylow_witnesses(3).unwrap().is_none());
        assert!(g.find_sylow_witnesses(5).is_err()); // 5 ∤ 6
    }

    #[test]
    fn prime_power_helper() {
        assert_eq!(is_prime_power(8), Some((2, 3)));
        assert_eq!(is_prime_power(9), Some((3, 2)));
        assert_eq!(is_prime_power(13), Some((13, 1)));
        assert_eq!(is_prime_power(12), None);
        assert_eq!(is_prime_power(1), None);
    }
}
