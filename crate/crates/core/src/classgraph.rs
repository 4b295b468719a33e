//! The class-level graphs: commuting (CCC), nilpotent (NCC), solvable (SCC)
//! conjugacy class graphs on the non-central classes, and the invariable
//! generation graph (INVGEN) on all non-identity classes.
//!
//! Adjacency for X ≠ Y asks for elements a ∈ X, b ∈ Y with ⟨a, b⟩ abelian /
//! nilpotent / solvable. Fixing a = rep(X) and scanning b over Y is sound by
//! conjugation-invariance, and b only matters up to conjugation by C(a), so
//! the scan runs over C(a)-orbit representatives. Cheap sound filters run
//! first:
//!  * CCC is decided by a centralizer intersection, no closures at all;
//!  * same-prime prime-power classes are always adjacent in NCC and SCC
//!    (both reps conjugate into one Sylow subgroup);
//!  * a nilpotent subgroup containing element orders p^i and q^j has an
//!    element of order p^i·q^j, so missing orders kill NCC adjacency;
//!  * a nontrivial nilpotent subgroup centralizes one of its prime-power
//!    elements, which bounds nilpotent closures by the largest centralizer
//!    of a prime-power class;
//!  * a solvable subgroup with order divisible by two primes p, q whose
//!    Sylow counts are forced trivial by the divisor/congruence arithmetic
//!    of |G| splits as P × Q and yields an element of order pq, so missing
//!    pq orders kill SCC adjacency for such prime pairs.

use crate::error::{Error, Result};
use crate::exec;
use crate::graph::SimpleGraph;
use crate::group::{is_prime_power, prime_factors, FiniteGroup};
use crate::perm::Permutation;
use crate::subgroup::{group_verdict, PairCache, PairVerdict};
use dashmap::DashMap;
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

/// Which adjacency relation a class graph carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Ccc,
    Ncc,
    Scc,
    InvGen,
}

impl Relation {
    pub fn tag(self) -> &'static str {
        match self {
            Relation::Ccc => "CCC",
            Relation::Ncc => "NCC",
            Relation::Scc => "SCC",
            Relation::InvGen => "INVGEN",
        }
    }

    pub fn parse(text: &str) -> Result<Relation> {
        match text.to_ascii_lowercase().as_str() {
            "ccc" => Ok(Relation::Ccc),
            "ncc" => Ok(Relation::Ncc),
            "scc" => Ok(Relation::Scc),
            "invgen" => Ok(Relation::InvGen),
            _ => Err(Error::input(format!(
                "unknown relation '{text}' (expected ccc, ncc, scc, or invgen)"
            ))),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// Vertex metadata carried by a class graph.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VertexInfo {
    pub label: String,
    pub order: u64,
    pub size: usize,
}

/// A simple undirected graph on conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGraph {
    group: String,
    relation: Relation,
    vertices: Vec<VertexInfo>,
    class_ids: Vec<usize>,
    adj: Vec<u64>,
}

impl ClassGraph {
    pub fn group_name(&self) -> &str {
        &self.group
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[VertexInfo] {
        &self.vertices
    }

    /// Class id (into the group's class list) behind vertex `i`.
    pub fn class_id(&self, i: usize) -> usize {
        self.class_ids[i]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.label == label)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && (self.adj[i] >> j) & 1 == 1
    }

    /// Edges as index pairs (i, j) with i < j, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.vertex_count() {
            for j in i + 1..self.vertex_count() {
                if self.adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Graph id used in exports and reports, e.g. `M11-CCC`.
    pub fn id(&self) -> String {
        format!("{}-{}", self.group, self.relation.tag())
    }

    pub fn to_simple_graph(&self) -> SimpleGraph {
        let labels = self.vertices.iter().map(|v| v.label.clone()).collect();
        SimpleGraph::new(labels, &self.edges()).expect("class graph within size bounds")
    }

    /// DOT export; byte-stable for a fixed input.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("graph \"{}\" {{\n", self.id()));
        for v in &self.vertices {
            out.push_str(&format!("  \"{}\";\n", v.label));
        }
        for (i, j) in self.edges() {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\";\n",
                self.vertices[i].label, self.vertices[j].label
            ));
        }
        out.push_str("}\n");
        out
    }

    /// JSON export; byte-stable for a fixed input.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct GraphJson<'a> {
            group: &'a str,
            relation: &'a str,
            vertices: &'a [VertexInfo],
            edges: Vec<[usize; 2]>,
        }
        serde_json::to_string(&GraphJson {
            group: &self.group,
            relation: self.relation.tag(),
            vertices: &self.vertices,
            edges: self.edges().into_iter().map(|(i, j)| [i, j]).collect(),
        })
        .expect("class graph serializes")
    }
}

/// A concrete adjacency certificate: elements of the two classes whose
/// two-generated subgroup satisfied the predicate.
#[derive(Clone, Debug)]
pub struct EdgeWitness {
    pub classes: (String, String),
    pub a: Permutation,
    pub b: Permutation,
    pub subgroup_order: usize,
    pub predicate: &'static str,
}

impl EdgeWitness {
    /// Recomputes the closure and predicate from the stored elements.
    pub fn replay(&self, group: &FiniteGroup) -> bool {
        let (Some(ai), Some(bi)) = (group.index_of(&self.a), group.index_of(&self.b)) else {
            return false;
        };
        let in_classes = |x: usize, label: &str| {
            group
                .class_by_label(label)
                .is_some_and(|c| group.class_of(x) == c)
        };
        if !in_classes(ai, &self.classes.0) || !in_classes(bi, &self.classes.1) {
            return false;
        }
        let h = group.subgroup_closure(&[ai, bi], group.order());
        if h.order() != Some(self.subgroup_order) {
            return false;
        }
        match self.predicate {
            "abelian" => group.is_abelian_subgroup(&h),
            "nilpotent" => group.is_nilpotent_subgroup(&h),
            "solvable" => group.is_solvable_subgroup(&h),
            "generates" => h.order() == Some(group.order()),
            _ => false,
        }
    }
}

struct Centralizer {
    members: Vec<u32>,
    gens: Vec<usize>,
}

/// Shared builder for the class graphs of one group. Caches centralizers,
/// two-generated subgroup verdicts, and the group-level verdict, so building
/// several relations over one group amortizes the heavy scans.
pub struct GraphBuilder<'g> {
    group: &'g FiniteGroup,
    gv: PairVerdict,
    pairs: PairCache,
    nilpotent_pairs: DashMap<(u32, u32), bool>,
    cents: DashMap<usize, Arc<Centralizer>>,
    hall: DashMap<(u64, u64), bool>,
    /// Upper bound on the order of any nontrivial nilpotent subgroup.
    nilp_bound: usize,
}

impl<'g> GraphBuilder<'g> {
    pub fn new(group: &'g FiniteGroup) -> GraphBuilder<'g> {
        let gv = group_verdict(group);
        let nilp_bound = group
            .classes()
            .iter()
            .filter(|c| c.elem_order > 1 && is_prime_power(c.elem_order).is_some())
            .map(|c| group.order() / c.size)
            .max()
            .unwrap_or(group.order());
        GraphBuilder {
            group,
            gv,
            pairs: PairCache::new(),
            nilpotent_pairs: DashMap::new(),
            cents: DashMap::new(),
            hall: DashMap::new(),
            nilp_bound,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        self.group
    }

    /// The memoized nilpotent/solvable verdict for the whole group.
    pub fn group_level_verdict(&self) -> PairVerdict {
        self.gv
    }

    fn centralizer(&self, class_id: usize) -> Arc<Centralizer> {
        if let Some(c) = self.cents.get(&class_id) {
            return c.clone();
        }
        let rep = self.group.class(class_id).rep_index();
        let members = self.group.centralizer_of_index(rep);
        // Greedy small generating set, ascending.
        let mut gens: Vec<usize> = Vec::new();
        let mut closed: HashSet<u32> = HashSet::new();
        closed.insert(self.group.identity_index() as u32);
        for &c in &members {
            if closed.contains(&c) {
                continue;
            }
            gens.push(c as usize);
            let set = self
                .group
                .close_indices(&gens, members.len())
                .expect("centralizer closure stays within the centralizer");
            closed = set.into_iter().collect();
        }
        let cent = Arc::new(Centralizer { members, gens });
        self.cents.insert(class_id, cent.clone());
        cent
    }

    /// CCC adjacency via the centralizer criterion: some conjugate of y
    /// commutes with x, i.e. Y meets C(rep X). Scans the smaller centralizer.
    fn ccc_adjacent(&self, x: usize, y: usize) -> bool {
        let (a_side, b_side) = if self.group.class(x).size >= self.group.class(y).size {
            (x, y) // larger class has the smaller centralizer
        } else {
            (y, x)
        };
        let cent = self.centralizer(a_side);
        cent.members
            .iter()
            .any(|&m| self.group.class_of(m as usize) == b_side)
    }

    /// Least member of Y commuting with rep(X), if any.
    fn ccc_witness_b(&self, x: usize, y: usize) -> Option<usize> {
        let cent = self.centralizer(x);
        cent.members
            .iter()
            .map(|&m| m as usize)
            .find(|&m| self.group.class_of(m) == y)
    }

    fn same_prime_prime_power(&self, x: usize, y: usize) -> bool {
        let ox = self.group.class(x).elem_order;
        let oy = self.group.class(y).elem_order;
        matches!((is_prime_power(ox), is_prime_power(oy)),
            (Some((p, _)), Some((q, _))) if p == q)
    }

    /// Exact prime-power parts (p, p^i) of n.
    fn prime_power_parts(n: u64) -> Vec<(u64, u64)> {
        prime_factors(n)
            .into_iter()
            .map(|p| {
                let mut part = 1;
                let mut m = n;
                while m % p == 0 {
                    part *= p;
                    m /= p;
                }
                (p, part)
            })
            .collect()
    }

    /// NCC exclusion: a nilpotent subgroup containing element orders with
    /// exact parts p^i and q^j (p ≠ q) contains an element of order p^i·q^j.
    fn ncc_order_filter_excludes(&self, x: usize, y: usize) -> bool {
        let xs = Self::prime_power_parts(self.group.class(x).elem_order);
        let ys = Self::prime_power_parts(self.group.class(y).elem_order);
        for &(p, pi) in &xs {
            for &(q, qj) in &ys {
                if p != q && !self.group.has_element_of_order(pi * qj) {
                    return true;
                }
            }
        }
        false
    }

    /// SCC exclusion for a prime pair: when every group of order p^α·q^β
    /// (α, β bounded by |G|) has both Sylow counts forced to one, a solvable
    /// subgroup divisible by pq would contain an element of order pq.
    fn hall_excludes(&self, p: u64, q: u64) -> bool {
        let key = if p < q { (p, q) } else { (q, p) };
        if let Some(v) = self.hall.get(&key) {
            return *v;
        }
        let (p, q) = key;
        let order = self.group.order() as u64;
        let exp = |r: u64| {
            let mut e = 0;
            let mut m = order;
            while m % r == 0 {
                e += 1;
                m /= r;
            }
            e
        };
        let mut forced = !self.group.has_element_of_order(p * q);
        if forced {
            let mut pk = 1;
            for _ in 0..exp(p) {
                pk *= p;
                if pk % q == 1 {
                    forced = false;
                }
            }
            let mut qk = 1;
            for _ in 0..exp(q) {
                qk *= q;
                if qk % p == 1 {
                    forced = false;
                }
            }
        }
        self.hall.insert(key, forced);
        forced
    }

    fn scc_order_filter_excludes(&self, x: usize, y: usize) -> bool {
        let xp = prime_factors(self.group.class(x).elem_order);
        let yp = prime_factors(self.group.class(y).elem_order);
        for &p in &xp {
            for &q in &yp {
                if p != q && self.hall_excludes(p, q) {
                    return true;
                }
            }
        }
        false
    }

    /// C(rep X)-orbit representatives on the members of Y, ascending.
    fn orbit_reps(&self, x: usize, y: usize) -> Vec<usize> {
        let cent = self.centralizer(x);
        let members = self.group.class(y).members();
        let mut visited: HashSet<u32> = HashSet::with_capacity(members.len());
        let mut reps = Vec::new();
        for &m in members {
            if visited.contains(&m) {
                continue;
            }
            reps.push(m as usize);
            let mut queue = vec![m];
            visited.insert(m);
            while let Some(e) = queue.pop() {
                for &g in &cent.gens {
                    let c = self.group.conjugate(e as usize, g) as u32;
                    if visited.insert(c) {
                        queue.push(c);
                    }
                }
            }
        }
        reps
    }

    fn nilpotent_pair(&self, a: usize, b: usize) -> bool {
        let key = if a <= b {
            (a as u32, b as u32)
        } else {
            (b as u32, a as u32)
        };
        if let Some(v) = self.nilpotent_pairs.get(&key) {
            return *v;
        }
        // A nontrivial nilpotent subgroup lies inside the centralizer of one
        // of its prime-power elements, so anything bigger cannot be nilpotent.
        let res = match self.group.close_indices(&[a, b], self.nilp_bound) {
            None => false,
            Some(set) => {
                let order = set.len() as u64;
                prime_factors(order).len() <= 1
                    || self.group.lower_central_reaches_trivial(&[a, b], order)
            }
        };
        self.nilpotent_pairs.insert(key, res);
        res
    }

    fn solvable_pair(&self, a: usize, b: usize) -> bool {
        self.pairs.verdict(self.group, a, b, self.gv).solvable
    }

    /// Scan Y's orbit representatives for the first b making ⟨rep X, b⟩
    /// satisfy the relation's predicate; scans in canonical order.
    fn scan(&self, x: usize, y: usize, relation: Relation) -> Option<usize> {
        let (x, y) = if self.group.class(x).size <= self.group.class(y).size {
            (x, y)
        } else {
            (y, x)
        };
        let a = self.group.class(x).rep_index();
        let reps = self.orbit_reps(x, y);
        let hit = exec::find_first_map(reps.len(), |i| {
            let b = reps[i];
            let ok = match relation {
                Relation::Ncc => self.nilpotent_pair(a, b),
                Relation::Scc => self.solvable_pair(a, b),
                _ => unreachable!("scan is for NCC/SCC"),
            };
            if ok {
                Some(b)
            } else {
                None
            }
        });
        hit
    }

    /// Adjacency under the given relation (CCC/NCC/SCC), classes by id.
    pub fn adjacent(&self, x: usize, y: usize, relation: Relation) -> Result<bool> {
        let cx = self.group.class(x);
        let cy = self.group.class(y);
        if cx.is_central() || cy.is_central() {
            return Err(Error::input(format!(
                "classes {} and {} must both be non-central",
                cx.label, cy.label
            )));
        }
        if x == y {
            return Err(Error::input("class adjacency requires distinct classes"));
        }
        Ok(match relation {
            Relation::Ccc => self.ccc_adjacent(x, y),
            Relation::Ncc => {
                self.ccc_adjacent(x, y)
                    || self.same_prime_prime_power(x, y)
                    || (!self.ncc_order_filter_excludes(x, y)
                        && self.scan(x, y, Relation::Ncc).is_some())
            }
            Relation::Scc => {
                self.ccc_adjacent(x, y)
                    || self.same_prime_prime_power(x, y)
                    || (!self.scc_order_filter_excludes(x, y)
                        && self.scan(x, y, Relation::Scc).is_some())
            }
            Relation::InvGen => self.invgen_adjacent(x, y),
        })
    }

    /// Adjacency decided purely by the orbit scan, with every shortcut and
    /// filter disabled. Used to validate the shortcuts independently.
    pub fn adjacent_by_raw_scan(&self, x: usize, y: usize, relation: Relation) -> bool {
        match relation {
            Relation::Ccc => {
                let a = self.group.class(x).rep_index();
                let ap = self.group.element(a);
                self.group.class(y).members().iter().any(|&b| {
                    let bp = self.group.element(b as usize);
                    ap.compose_unchecked(bp) == bp.compose_unchecked(ap)
                })
            }
            Relation::Ncc | Relation::Scc => self.scan(x, y, relation).is_some(),
            Relation::InvGen => self.invgen_adjacent(x, y),
        }
    }

    /// Same verdict as `adjacent`, but with an explicitly chosen element of X
    /// in place of the canonical representative (scans all of Y).
    pub fn adjacent_with_rep(&self, a: usize, y: usize, relation: Relation) -> bool {
        let members = self.group.class(y).members();
        match relation {
            Relation::Ccc => {
                let ap = self.group.element(a);
                members.iter().any(|&b| {
                    let bp = self.group.element(b as usize);
                    ap.compose_unchecked(bp) == bp.compose_unchecked(ap)
                })
            }
            Relation::Ncc => members.iter().any(|&b| self.nilpotent_pair(a, b as usize)),
            Relation::Scc => members.iter().any(|&b| self.solvable_pair(a, b as usize)),
            Relation::InvGen => members
                .iter()
                .all(|&b| self.generates_group(a, b as usize)),
        }
    }

    /// A concrete witness for an adjacent pair, or None when non-adjacent.
    pub fn adjacency_witness(
        &self,
        x: usize,
        y: usize,
        relation: Relation,
    ) -> Result<Option<EdgeWitness>> {
        if !self.adjacent(x, y, relation)? {
            return Ok(None);
        }
        let a = self.group.class(x).rep_index();
        let make = |b: usize, predicate: &'static str| {
            let h = self.group.subgroup_closure(&[a, b], self.group.order());
            EdgeWitness {
                classes: (
                    self.group.class(x).label.clone(),
                    self.group.class(y).label.clone(),
                ),
                a: self.group.element(a).clone(),
                b: self.group.element(b).clone(),
                subgroup_order: h.order().expect("closure within the group"),
                predicate,
            }
        };
        // Preferred witness: a commuting pair; otherwise the first scan hit.
        if let Some(b) = self.ccc_witness_b(x, y) {
            return Ok(Some(make(b, "abelian")));
        }
        let predicate = match relation {
            Relation::Ncc => "nilpotent",
            Relation::Scc => "solvable",
            Relation::Ccc => unreachable!("CCC adjacency always has a commuting witness"),
            Relation::InvGen => {
                let b = self.group.class(y).members()[0] as usize;
                return Ok(Some(make(b, "generates")));
            }
        };
        let b = match relation {
            Relation::Ncc => self
                .group
                .class(y)
                .members()
                .iter()
                .map(|&b| b as usize)
                .find(|&b| self.nilpotent_pair(a, b)),
            _ => self
                .group
                .class(y)
                .members()
                .iter()
                .map(|&b| b as usize)
                .find(|&b| self.solvable_pair(a, b)),
        };
        Ok(b.map(|b| make(b, predicate)))
    }

    fn generates_group(&self, a: usize, b: usize) -> bool {
        if self.group.order() == 1 {
            return true;
        }
        // A proper subgroup has at most half the elements.
        self.group.close_indices(&[a, b], self.group.order() / 2).is_none()
    }

    /// INVGEN adjacency: every member of the larger class must generate the
    /// whole group together with the smaller class's representative.
    fn invgen_adjacent(&self, x: usize, y: usize) -> bool {
        let (x, y) = if self.group.class(x).size <= self.group.class(y).size {
            (x, y)
        } else {
            (y, x)
        };
        let a = self.group.class(x).rep_index();
        let reps = self.orbit_reps(x, y);
        let fail = exec::find_first_map(reps.len(), |i| {
            if self.generates_group(a, reps[i]) {
                None
            } else {
                Some(())
            }
        });
        fail.is_none()
    }

    /// Builds the graph for CCC/NCC/SCC on the non-central classes.
    pub fn build(&self, relation: Relation) -> ClassGraph {
        if relation == Relation::InvGen {
            return self.build_invgen();
        }
        let ids = self.group.non_central_class_ids();
        self.assemble(relation, ids)
    }

    /// Builds the invariable-generation graph on all non-identity classes.
    pub fn build_invgen(&self) -> ClassGraph {
        let ids = self.group.non_identity_class_ids();
        self.assemble(Relation::InvGen, ids)
    }

    fn assemble(&self, relation: Relation, ids: Vec<usize>) -> ClassGraph {
        let n = ids.len();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        let verdicts: Vec<bool> = exec::map_slice(&pairs, |&(i, j)| match relation {
            Relation::InvGen => self.invgen_adjacent(ids[i], ids[j]),
            _ => self
                .adjacent(ids[i], ids[j], relation)
                .expect("vertex classes are valid for the relation"),
        });
        let mut adj = vec![0u64; n];
        for (&(i, j), &edge) in pairs.iter().zip(&verdicts) {
            if edge {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        let vertices = ids
            .iter()
            .map(|&id| {
                let c = self.group.class(id);
                VertexInfo {
                    label: c.label.clone(),
                    order: c.elem_order,
                    size: c.size,
                }
            })
            .collect();
        ClassGraph {
            group: self.group.name().to_string(),
            relation,
            vertices,
            class_ids: ids,
            adj,
        }
    }
}

/// One-shot graph construction (a fresh builder per call).
pub fn build_graph(group: &FiniteGroup, relation: Relation) -> ClassGraph {
    GraphBuilder::new(group).build(relation)
}

/// One-shot adjacency with witness, classes given by label.
pub fn class_adjacent(
    group: &FiniteGroup,
    x_label: &str,
    y_label: &str,
    relation: Relation,
) -> Result<(bool, Option<EdgeWitness>)> {
    let x = group
        .class_by_label(x_label)
        .ok_or_else(|| Error::input(format!("no class labeled {x_label}")))?;
    let y = group
        .class_by_label(y_label)
        .ok_or_else(|| Error::input(format!("no class labeled {y_label}")))?;
    let builder = GraphBuilder::new(group);
    let adjacent = builder.adjacent(x, y, relation)?;
    let witness = if adjacent {
        builder.adjacency_witness(x, y, relation)?
    } else {
        None
    };
    Ok((adjacent, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build, GroupSpec};
    use crate::shape::ShapeExpr;
    use crate::DEFAULT_CAP;

    fn dihedral(n: usize) -> FiniteGroup {
        build(&GroupSpec::Dihedral(n), DEFAULT_CAP).unwrap()
    }

    #[test]
    fn d10_ccc_is_k2_plus_k1() {
        let g = dihedral(5);
        let graph = build_graph(&g, Relation::Ccc);
        assert!(graph
            .to_simple_graph()
            .match_shape(&ShapeExpr::parse("K2 + K1").unwrap()));
    }

    #[test]
    fn d12_ccc_is_k2_plus_k2() {
        let g = dihedral(6);
        let graph = build_graph(&g, Relation::Ccc);
        assert!(graph
            .to_simple_graph()
            .match_shape(&ShapeExpr::parse("K2 + K2").unwrap()));
    }

    #[test]
    fn d8_ncc_is_complete() {
        // D8 is nilpotent, so its NCC graph is complete.
        let g = dihedral(4);
        let graph = build_graph(&g, Relation::Ncc);
        let n = graph.vertex_count();
        assert_eq!(graph.edge_count(), n * (n - 1) / 2);
    }

    #[test]
    fn abelian_group_yields_empty_graph() {
        let g = build(&GroupSpec::Abelian(vec![6]), DEFAULT_CAP).unwrap();
        let graph = build_graph(&g, Relation::Ccc);
        assert_eq!(graph.vertex_count(), 0);
        let sg = graph.to_simple_graph();
        assert!(sg.is_cograph() && sg.is_chordal() && sg.is_split());
    }

    #[test]
    fn chain_inclusion_on_sym4() {
        let g = build(&GroupSpec::Symmetric(4), DEFAULT_CAP).unwrap();
        let b = GraphBuilder::new(&g);
        let ccc = b.build(Relation::Ccc);
        let ncc = b.build(Relation::Ncc);
        let scc = b.build(Relation::Scc);
        for (i, j) in ccc.edges() {
            assert!(ncc.adjacent(i, j));
        }
        for (i, j) in ncc.edges() {
            assert!(scc.adjacent(i, j));
        }
        // Sym(4) is solvable: SCC must be complete.
        let n = scc.vertex_count();
        assert_eq!(scc.edge_count(), n * (n - 1) / 2);
    }

    #[test]
    fn adjacency_symmetric_and_rep_independent() {
        let g = build(&GroupSpec::Symmetric(4), DEFAULT_CAP).unwrap();
        let b = GraphBuilder::new(&g);
        let ids = g.non_central_class_ids();
        for &x in &ids {
            for &y in &ids {
                if x == y {
                    continue;
                }
                for rel in [Relation::Ccc, Relation::Ncc, Relation::Scc] {
                    let xy = b.adjacent(x, y, rel).unwrap();
                    let yx = b.adjacent(y, x, rel).unwrap();
                    assert_eq!(xy, yx);
                    // every member of X as the fixed representative
                    for &a in g.class(x).members() {
                        assert_eq!(b.adjacent_with_rep(a as usize, y, rel), xy);
                    }
                }
            }
        }
    }

    #[test]
    fn central_class_is_input_error() {
        let g = dihedral(4); // center of D8 is {1, r²}
        let b = GraphBuilder::new(&g);
        let central = (0..g.classes().len())
            .find(|&i| g.class(i).is_central() && g.class(i).elem_order > 1)
            .unwrap();
        let other = g.non_central_class_ids()[0];
        assert!(b.adjacent(central, other, Relation::Ccc).is_err());
    }

    #[test]
    fn witnesses_replay() {
        let g = build(&GroupSpec::Symmetric(5), DEFAULT_CAP).unwrap();
        let b = GraphBuilder::new(&g);
        let ids = g.non_central_class_ids();
        let mut found = 0;
        for &x in &ids {
            for &y in &ids {
                if x >= y {
                    continue;
                }
                for rel in [Relation::Ccc, Relation::Ncc, Relation::Scc] {
                    if let Some(w) = b.adjacency_witness(x, y, rel).unwrap() {
                        assert!(w.replay(&g), "witness failed to replay: {w:?}");
                        found += 1;
                    }
                }
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn shortcuts_agree_with_raw_scan_on_sym5() {
        let g = build(&GroupSpec::Symmetric(5), DEFAULT_CAP).unwrap();
        let b = GraphBuilder::new(&g);
        let ids = g.non_central_class_ids();
        for &x in &ids {
            for &y in &ids {
                if x >= y {
                    continue;
                }
                for rel in [Relation::Ncc, Relation::Scc] {
                    assert_eq!(
                        b.adjacent(x, y, rel).unwrap(),
                        b.adjacent_by_raw_scan(x, y, rel),
                        "shortcut mismatch for ({}, {}, {rel:?})",
                        g.class(x).label,
                        g.class(y).label
                    );
                }
            }
        }
    }

    #[test]
    fn invgen_alt5_is_scc_complement() {
        let g = build(&GroupSpec::Alternating(5), DEFAULT_CAP).unwrap();
        let b = GraphBuilder::new(&g);
        let scc = b.build(Relation::Scc);
        let inv = b.build_invgen();
        assert_eq!(scc.vertex_count(), inv.vertex_count());
        let n = inv.vertex_count();
        for i in 0..n {
            for j in i + 1..n {
                assert_eq!(inv.adjacent(i, j), !scc.adjacent(i, j));
            }
        }
    }

    #[test]
    fn invgen_abelian_rank3_is_empty() {
        // No pair of elements generates C2×C2×C2, so its graph has no edges.
        let g = build(&GroupSpec::Abelian(vec![2, 2, 2]), DEFAULT_CAP).unwrap();
        let b = GraphBuilder::new(&g);
        let inv = b.build_invgen();
        assert_eq!(inv.vertex_count(), 7);
        assert_eq!(inv.edge_count(), 0);

        // Any two distinct involutions generate C2×C2.
        let v4 = build(&GroupSpec::Abelian(vec![2, 2]), DEFAULT_CAP).unwrap();
        let inv4 = GraphBuilder::new(&v4).build_invgen();
        assert_eq!(inv4.edge_count(), 3);
    }

    #[test]
    fn exports_are_stable() {
        let g = dihedral(5);
        let graph = build_graph(&g, Relation::Ccc);
        assert_eq!(graph.to_dot(), build_graph(&g, Relation::Ccc).to_dot());
        assert_eq!(graph.to_json(), build_graph(&g, Relation::Ccc).to_json());
        assert!(graph.to_dot().starts_with("graph \"D10-CCC\" {"));
        assert!(graph.to_json().contains("\"relation\":\"CCC\""));
    }

    #[test]
    fn class_adjacent_by_label() {
        let g = build(&GroupSpec::Symmetric(4), DEFAULT_CAP).unwrap();
        let (adj, w) = class_adjacent(&g, "2A", "2B", Relation::Ccc).unwrap();
        assert!(adj);
        assert!(w.unwrap().replay(&g));
        assert!(class_adjacent(&g, "2A", "9Z", Relation::Ccc).is_err());
    }
}
