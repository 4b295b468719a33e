//! Simple undirected graphs on at most 64 vertices, recognition of the five
//! forbidden-subgraph classes, and induced-pattern witness search.
//!
//! Graphs here are class graphs, so they have tens of vertices at most. The
//! brute-force forbidden-subgraph scans are the primary recognizers (they
//! encode the definitions directly); the polynomial characterizations are
//! kept as independent cross-check routes.

use crate::error::{Error, Result};
use crate::shape::ShapeExpr;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Induced-subgraph pattern kinds used for witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum WitnessKind {
    P4,
    C4,
    C5,
    /// An induced cycle of the given length (≥ 4).
    Cycle(usize),
    TwoK2,
    Claw,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessKind::P4 => write!(f, "P4"),
            WitnessKind::C4 => write!(f, "C4"),
            WitnessKind::C5 => write!(f, "C5"),
            WitnessKind::Cycle(n) => write!(f, "C{n}"),
            WitnessKind::TwoK2 => write!(f, "2K2"),
            WitnessKind::Claw => write!(f, "claw"),
        }
    }
}

/// An ordered vertex list realizing an induced pattern.
///
/// For P4 the order is the path, for cycles the cyclic order, for 2K2 the two
/// edges in order, and for a claw the center followed by the three pendants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
}

impl Witness {
    /// Checks that the vertex list reproduces exactly the pattern's edges and
    /// non-edges in `g`.
    pub fn replay(&self, g: &SimpleGraph) -> bool {
        let v = &self.vertices;
        let mut distinct = v.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != v.len() || v.iter().any(|&x| x >= g.len()) {
            return false;
        }
        let e = |a: usize, b: usize| g.has_edge(v[a], v[b]);
        match self.kind {
            WitnessKind::P4 => {
                v.len() == 4
                    && e(0, 1) && e(1, 2) && e(2, 3)
                    && !e(0, 2) && !e(0, 3) && !e(1, 3)
            }
            WitnessKind::C4 | WitnessKind::C5 | WitnessKind::Cycle(_) => {
                let n = match self.kind {
                    WitnessKind::C4 => 4,
                    WitnessKind::C5 => 5,
                    WitnessKind::Cycle(n) => n,
                    _ => unreachable!(),
                };
                if v.len() != n || n < 4 {
                    return false;
                }
                for i in 0..n {
                    for j in i + 1..n {
                        let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                        if e(i, j) != adjacent {
                            return false;
                        }
                    }
                }
                true
            }
            WitnessKind::TwoK2 => {
                v.len() == 4
                    && e(0, 1) && e(2, 3)
                    && !e(0, 2) && !e(0, 3) && !e(1, 2) && !e(1, 3)
            }
            WitnessKind::Claw => {
                v.len() == 4
                    && e(0, 1) && e(0, 2) && e(0, 3)
                    && !e(1, 2) && !e(1, 3) && !e(2, 3)
            }
        }
    }
}

/// Classification verdicts for one graph, with witnesses for the failing
/// predicates keyed by pattern kind.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PropertyReport {
    pub graph: String,
    pub cograph: bool,
    pub chordal: bool,
    pub split: bool,
    pub threshold: bool,
    pub claw_free: bool,
    pub witnesses: BTreeMap<String, Vec<String>>,
}

/// A simple undirected graph with labeled vertices (adjacency as bitset rows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<SimpleGraph> {
        let n = labels.len();
        if n > 64 {
            return Err(Error::input(format!("graphs are capped at 64 vertices, got {n}")));
        }
        let mut g = SimpleGraph {
            labels,
            adj: vec![0; n],
        };
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(Error::input("loops are not allowed"));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// An unlabeled graph with vertices named by index.
    pub fn unlabeled(n: usize, edges: &[(usize, usize)]) -> Result<SimpleGraph> {
        SimpleGraph::new((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (self.adj[u] >> v) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.len() {
            for v in u + 1..self.len() {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.len();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let adj = (0..n)
            .map(|v| (!self.adj[v]) & full & !(1 << v))
            .collect();
        SimpleGraph {
            labels: self.labels.clone(),
            adj,
        }
    }

    /// Induced subgraph on the given vertices (kept in the given order).
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let mut adj = vec![0u64; vertices.len()];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if i != j && self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        SimpleGraph {
            labels,
            adj,
        }
    }

    /// Connected components as ascending vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for v in 0..n {
                    if !seen[v] && self.has_edge(u, v) {
                        seen[v] = true;
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Shortest-path length, None across components.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        let n = self.len();
        if u >= n || v >= n {
            return Err(Error::input(format!("vertex out of range: {u} or {v}")));
        }
        let mut dist = vec![usize::MAX; n];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                return Ok(Some(dist[v]));
            }
            for y in 0..n {
                if self.has_edge(x, y) && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        Ok(None)
    }

    // ---- induced-pattern search -------------------------------------------

    /// Exhaustive scan for an induced pattern; returns the least witness
    /// (ordered by the sorted vertex set, then by the pattern ordering).
    pub fn find_induced(&self, kind: WitnessKind) -> Option<Witness> {
        match kind {
            WitnessKind::P4 => self.scan4(|g, s| g.p4_in(s), WitnessKind::P4),
            WitnessKind::C4 => self.scan4(|g, s| g.c4_in(s), WitnessKind::C4),
            WitnessKind::TwoK2 => self.scan4(|g, s| g.two_k2_in(s), WitnessKind::TwoK2),
            WitnessKind::Claw => self.scan4(|g, s| g.claw_in(s), WitnessKind::Claw),
            WitnessKind::C5 => self.find_cycle_of_len(5).map(|v| Witness {
                kind: WitnessKind::C5,
                vertices: v,
            }),
            WitnessKind::Cycle(n) => self.find_cycle_of_len(n).map(|v| Witness {
                kind: WitnessKind::Cycle(n),
                vertices: v,
            }),
        }
    }

    /// Least induced cycle of length ≥ 4, if any (the chordality witness).
    pub fn find_long_induced_cycle(&self) -> Option<Witness> {
        for n in 4..=self.len() {
            if let Some(v) = self.find_cycle_of_len(n) {
                let kind = match n {
                    4 => WitnessKind::C4,
                    5 => WitnessKind::C5,
                    _ => WitnessKind::Cycle(n),
                };
                return Some(Witness { kind, vertices: v });
            }
        }
        None
    }

    fn scan4(
        &self,
        pattern: impl Fn(&SimpleGraph, [usize; 4]) -> Option<Vec<usize>>,
        kind: WitnessKind,
    ) -> Option<Witness> {
        let n = self.len();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        if let Some(vertices) = pattern(self, [a, b, c, d]) {
                            return Some(Witness { kind, vertices });
                        }
                    }
                }
            }
        }
        None
    }

    /// Path orderings of a 4-set realizing an induced P4, least first.
    fn p4_in(&self, s: [usize; 4]) -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        let perms = permutations4(&s);
        for p in perms {
            if p[0] > p[3] {
                continue; // canonical direction
            }
            let e = |i: usize, j: usize| self.has_edge(p[i], p[j]);
            if e(0, 1) && e(1, 2) && e(2, 3) && !e(0, 2) && !e(0, 3) && !e(1, 3) {
                let v = p.to_vec();
                if best.as_ref().is_none_or(|b| v < *b) {
                    best = Some(v);
                }
            }
        }
        best
    }

    fn c4_in(&self, s: [usize; 4]) -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        for p in permutations4(&s) {
            if p[0] != s[0] || p[1] > p[3] {
                continue; // fix the least vertex first, canonical direction
            }
            let e = |i: usize, j: usize| self.has_edge(p[i], p[j]);
            if e(0, 1) && e(1, 2) && e(2, 3) && e(3, 0) && !e(0, 2) && !e(1, 3) {
                let v = p.to_vec();
                if best.as_ref().is_none_or(|b| v < *b) {
                    best = Some(v);
                }
            }
        }
        best
    }

    fn two_k2_in(&self, s: [usize; 4]) -> Option<Vec<usize>> {
        let [a, b, c, d] = s;
        // Pairings with the least vertex in the first edge.
        for (p, q, r, t) in [(a, b, c, d), (a, c, b, d), (a, d, b, c)] {
            if self.has_edge(p, q)
                && self.has_edge(r, t)
                && !self.has_edge(p, r)
                && !self.has_edge(p, t)
                && !self.has_edge(q, r)
                && !self.has_edge(q, t)
            {
                return Some(vec![p, q, r, t]);
            }
        }
        None
    }

    fn claw_in(&self, s: [usize; 4]) -> Option<Vec<usize>> {
        for center in s {
            let pendants: Vec<usize> = s.iter().copied().filter(|&v| v != center).collect();
            if pendants.iter().all(|&p| self.has_edge(center, p))
                && !self.has_edge(pendants[0], pendants[1])
                && !self.has_edge(pendants[0], pendants[2])
                && !self.has_edge(pendants[1], pendants[2])
            {
                return Some(vec![center, pendants[0], pendants[1], pendants[2]]);
            }
        }
        None
    }

    /// Least induced cycle of exactly length n, by DFS over induced paths.
    fn find_cycle_of_len(&self, n: usize) -> Option<Vec<usize>> {
        if n < 4 || n > self.len() {
            return None;
        }
        let mut path = Vec::with_capacity(n);
        for start in 0..self.len() {
            path.push(start);
            if self.extend_induced_cycle(&mut path, n, start) {
                return Some(path);
            }
            path.pop();
        }
        None
    }

    fn extend_induced_cycle(&self, path: &mut Vec<usize>, n: usize, start: usize) -> bool {
        if path.len() == n {
            // Close the cycle; take each cycle in one direction only.
            return self.has_edge(*path.last().unwrap(), start) && path[1] < path[n - 1];
        }
        let tail = *path.last().unwrap();
        for next in 0..self.len() {
            if next <= start || path.contains(&next) || !self.has_edge(tail, next) {
                continue;
            }
            // Induced path: `next` may touch only the tail; an edge back to
            // `start` is tolerated only for the vertex that closes the cycle.
            let closes = path.len() + 1 == n;
            let induced = path.iter().all(|&p| {
                p == tail || !self.has_edge(next, p) || (p == start && closes)
            });
            if !induced {
                continue;
            }
            path.push(next);
            if self.extend_induced_cycle(path, n, start) {
                return true;
            }
            path.pop();
        }
        false
    }

    // ---- the five recognizers ---------------------------------------------

    /// Cograph test: no induced P4. Also runs the complement-component
    /// decomposition and asserts the two routes agree.
    pub fn is_cograph(&self) -> bool {
        let by_scan = self.find_induced(WitnessKind::P4).is_none();
        let by_cotree = self.is_cograph_by_cotree();
        assert_eq!(by_scan, by_cotree, "cograph recognizers disagree");
        by_scan
    }

    /// Cotree route: single vertices are cographs; otherwise decompose into
    /// components, or complement components when connected.
    pub fn is_cograph_by_cotree(&self) -> bool {
        fn rec(g: &SimpleGraph) -> bool {
            if g.len() <= 1 {
                return true;
            }
            let comps = g.components();
            if comps.len() > 1 {
                return comps.iter().all(|c| rec(&g.induced(c)));
            }
            let comp = g.complement();
            let co_comps = comp.components();
            if co_comps.len() > 1 {
                return co_comps.iter().all(|c| rec(&comp.induced(c)));
            }
            false // connected with connected complement and ≥ 2 vertices
        }
        rec(self)
    }

    /// Chordality via maximum cardinality search: the reverse MCS order must
    /// be a perfect elimination ordering.
    pub fn is_chordal(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return true;
        }
        // MCS: repeatedly pick the unvisited vertex with the most visited
        // neighbors (least index on ties).
        let mut visited = 0u64;
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let mut best = usize::MAX;
            let mut best_w = 0;
            for v in 0..n {
                if (visited >> v) & 1 == 1 {
                    continue;
                }
                let w = (self.adj[v] & visited).count_ones();
                if best == usize::MAX || w > best_w {
                    best = v;
                    best_w = w;
                }
            }
            visited |= 1 << best;
            order.push(best);
        }
        // Eliminate in reverse: each vertex's earlier-ordered neighbors must
        // form a clique.
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        for (i, &v) in order.iter().enumerate() {
            let earlier: Vec<usize> = (0..n)
                .filter(|&u| self.has_edge(v, u) && pos[u] < i)
                .collect();
            for (a, &x) in earlier.iter().enumerate() {
                for &y in &earlier[a + 1..] {
                    if !self.has_edge(x, y) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Chordality by exhaustive induced-cycle search (the cross-check route).
    pub fn is_chordal_by_cycle_search(&self) -> bool {
        self.find_long_induced_cycle().is_none()
    }

    /// Split test: no induced C4, C5, or 2K2.
    pub fn is_split(&self) -> bool {
        self.find_induced(WitnessKind::C4).is_none()
            && self.find_induced(WitnessKind::C5).is_none()
            && self.find_induced(WitnessKind::TwoK2).is_none()
    }

    /// Split test by the degree-sequence characterization: with degrees
    /// d₁ ≥ … ≥ dₙ and m = max{i : dᵢ ≥ i−1}, the graph is split iff
    /// Σ_{i≤m} dᵢ = m(m−1) + Σ_{i>m} dᵢ.
    pub fn is_split_by_degrees(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return true;
        }
        let mut degs: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        let mut m = 0;
        for i in 1..=n {
            if degs[i - 1] >= i - 1 {
                m = i;
            }
        }
        let left: usize = degs[..m].iter().sum();
        let right: usize = m * (m - 1) + degs[m..].iter().sum::<usize>();
        left == right
    }

    /// Threshold test by peeling: repeatedly delete a vertex that is
    /// currently isolated or dominating; threshold iff the graph empties.
    pub fn is_threshold(&self) -> bool {
        let n = self.len();
        let mut alive: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut remaining = n;
        while remaining > 0 {
            let mut peeled = false;
            for v in 0..n {
                if (alive >> v) & 1 == 0 {
                    continue;
                }
                let nbrs = self.adj[v] & alive;
                let others = alive & !(1u64 << v);
                if nbrs == 0 || nbrs == others {
                    alive &= !(1u64 << v);
                    remaining -= 1;
                    peeled = true;
                    break;
                }
            }
            if !peeled {
                return false;
            }
        }
        true
    }

    /// Claw-freeness: no vertex has three pairwise non-adjacent neighbors.
    pub fn is_claw_free(&self) -> bool {
        let n = self.len();
        for v in 0..n {
            let nbrs: Vec<usize> = (0..n).filter(|&u| self.has_edge(v, u)).collect();
            for (i, &a) in nbrs.iter().enumerate() {
                for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &c in &nbrs[j + 1..] {
                        if !self.has_edge(a, c) && !self.has_edge(b, c) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// True iff every component is a clique and the multiset of component
    /// sizes equals the shape expression.
    pub fn match_shape(&self, expr: &ShapeExpr) -> bool {
        let comps = self.components();
        let mut sizes = Vec::with_capacity(comps.len());
        for comp in &comps {
            for (i, &u) in comp.iter().enumerate() {
                for &v in &comp[i + 1..] {
                    if !self.has_edge(u, v) {
                        return false;
                    }
                }
            }
            sizes.push(comp.len());
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes == expr.sizes()
    }

    /// Full classification with witnesses for every failing predicate.
    pub fn property_report(&self, graph_id: &str) -> PropertyReport {
        let mut witnesses: BTreeMap<String, Vec<String>> = BTreeMap::new();
        let mut record = |w: &Witness| {
            witnesses.insert(
                w.kind.to_string(),
                w.vertices.iter().map(|&v| self.labels[v].clone()).collect(),
            );
        };
        let cograph = match self.find_induced(WitnessKind::P4) {
            Some(w) => {
                record(&w);
                false
            }
            None => true,
        };
        let chordal = {
            let by_peo = self.is_chordal();
            if !by_peo {
                if let Some(w) = self.find_long_induced_cycle() {
                    record(&w);
                }
            }
            by_peo
        };
        let split = {
            let mut ok = true;
            for kind in [WitnessKind::C4, WitnessKind::C5, WitnessKind::TwoK2] {
                if let Some(w) = self.find_induced(kind) {
                    record(&w);
                    ok = false;
                    break;
                }
            }
            ok
        };
        let threshold = self.is_threshold();
        let claw_free = match self.find_induced(WitnessKind::Claw) {
            Some(w) => {
                record(&w);
                false
            }
            None => true,
        };
        PropertyReport {
            graph: graph_id.to_string(),
            cograph,
            chordal,
            split,
            threshold,
            claw_free,
            witnesses,
        }
    }
}

fn permutations4(s: &[usize; 4]) -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    let mut arr = *s;
    heap_permute(&mut arr, 4, &mut out);
    out.sort_unstable();
    out
}

fn heap_permute(arr: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
    if k == 1 {
        out.push(*arr);
        return;
    }
    for i in 0..k {
        heap_permute(arr, k - 1, out);
        if k % 2 == 0 {
            arr.swap(i, k - 1);
        } else {
            arr.swap(0, k - 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path4() -> SimpleGraph {
        SimpleGraph::unlabeled(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::unlabeled(n, &edges).unwrap()
    }

    fn complete(n: usize) -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        SimpleGraph::unlabeled(n, &edges).unwrap()
    }

    #[test]
    fn p4_is_its_own_witness() {
        let w = path4().find_induced(WitnessKind::P4).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3]);
        assert!(w.replay(&path4()));
        assert!(!path4().is_cograph());
    }

    #[test]
    fn complete_graph_satisfies_everything() {
        let g = complete(5);
        assert!(g.is_cograph());
        assert!(g.is_chordal());
        assert!(g.is_split());
        assert!(g.is_threshold());
        assert!(g.is_claw_free());
    }

    #[test]
    fn empty_and_single_vertex_satisfy_everything() {
        for g in [
            SimpleGraph::unlabeled(0, &[]).unwrap(),
            SimpleGraph::unlabeled(1, &[]).unwrap(),
        ] {
            assert!(g.is_cograph());
            assert!(g.is_chordal());
            assert!(g.is_split());
            assert!(g.is_threshold());
            assert!(g.is_claw_free());
        }
    }

    #[test]
    fn c4_recognized() {
        let g = cycle(4);
        assert!(!g.is_chordal());
        assert!(!g.is_chordal_by_cycle_search());
        assert!(!g.is_split());
        assert!(!g.is_threshold());
        assert!(g.is_cograph()); // C4 is P4-free
        let w = g.find_induced(WitnessKind::C4).unwrap();
        assert!(w.replay(&g));
    }

    #[test]
    fn c5_and_longer_cycles() {
        assert!(!cycle(5).is_chordal());
        let w = cycle(5).find_long_induced_cycle().unwrap();
        assert_eq!(w.kind, WitnessKind::C5);
        assert!(w.replay(&cycle(5)));
        let w6 = cycle(6).find_long_induced_cycle().unwrap();
        assert_eq!(w6.kind, WitnessKind::Cycle(6));
        assert!(w6.replay(&cycle(6)));
        assert!(cycle(6).find_induced(WitnessKind::C5).is_none());
    }

    #[test]
    fn trees_are_chordal() {
        let star = SimpleGraph::unlabeled(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(star.is_chordal());
        assert!(star.is_threshold());
        assert!(!star.is_claw_free()); // K_{1,4} contains a claw
        let w = star.find_induced(WitnessKind::Claw).unwrap();
        assert_eq!(w.vertices[0], 0);
        assert!(w.replay(&star));
    }

    #[test]
    fn two_k2_blocks_split() {
        let g = SimpleGraph::unlabeled(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_split());
        assert!(!g.is_split_by_degrees());
        let w = g.find_induced(WitnessKind::TwoK2).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3]);
        assert!(w.replay(&g));
    }

    #[test]
    fn threshold_equals_cograph_and_split() {
        // A few pointed cases; the verifier covers randoms.
        for g in [path4(), cycle(4), cycle(5), complete(4), SimpleGraph::unlabeled(4, &[(0, 1), (2, 3)]).unwrap()] {
            assert_eq!(g.is_threshold(), g.is_cograph_by_cotree() && g.is_split());
        }
    }

    #[test]
    fn disjoint_cliques_are_claw_free() {
        let g = SimpleGraph::unlabeled(6, &[(0, 1), (0, 2), (1, 2), (3, 4)]).unwrap();
        assert!(g.is_claw_free());
    }

    #[test]
    fn shape_matching() {
        let g = SimpleGraph::unlabeled(4, &[(0, 1), (0, 2), (1, 2)]).unwrap(); // K3 + K1
        assert!(g.match_shape(&ShapeExpr::parse("K3 + K1").unwrap()));
        assert!(!g.match_shape(&ShapeExpr::parse("K3").unwrap()));
        assert!(!complete(3).match_shape(&ShapeExpr::parse("3K1").unwrap()));
        let p = path4();
        assert!(!p.match_shape(&ShapeExpr::parse("K4").unwrap())); // P4 is not a clique union
    }

    #[test]
    fn distance_bfs() {
        let g = path4();
        assert_eq!(g.distance(0, 0).unwrap(), Some(0));
        assert_eq!(g.distance(0, 1).unwrap(), Some(1));
        assert_eq!(g.distance(0, 3).unwrap(), Some(3));
        let h = SimpleGraph::unlabeled(3, &[(0, 1)]).unwrap();
        assert_eq!(h.distance(0, 2).unwrap(), None);
        assert!(h.distance(0, 7).is_err());
    }

    #[test]
    fn cograph_closed_under_complement() {
        for g in [complete(4), cycle(4), path4(), SimpleGraph::unlabeled(5, &[(0, 1), (1, 2)]).unwrap()] {
            assert_eq!(
                g.is_cograph_by_cotree(),
                g.complement().is_cograph_by_cotree()
            );
        }
    }

    #[test]
    fn property_report_records_witnesses() {
        let r = path4().property_report("P4");
        assert!(!r.cograph);
        assert!(r.chordal);
        assert!(r.witnesses.contains_key("P4"));
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"cograph\":false"));
    }
}
