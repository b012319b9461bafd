//! Subgraph counts. A copy of `H` is a (not necessarily induced) subgraph
//! isomorphic to `H`, so `copies * |Aut(H)| = embeddings`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, low_mask, Graph};
use crate::pattern::Pattern;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub pattern: Pattern,
    pub embeddings: u128,
    pub automorphisms: u128,
    pub copies: u128,
}

#[inline]
fn above(v: usize) -> u64 {
    !low_mask(v + 1)
}

/// Injective edge-preserving maps from a pattern into a host, found by
/// backtracking in a connectivity-first vertex order.
pub(crate) struct Embedder<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
    fixed: usize,
}

impl<'a> Embedder<'a> {
    /// `pinned` pattern vertices are mapped in advance and placed first.
    pub(crate) fn new(host: &'a Graph, pattern: &'a Graph, pinned: &[(usize, usize)]) -> Self {
        let pn = pattern.n();
        let mut order: Vec<usize> = pinned.iter().map(|&(p, _)| p).collect();
        let mut placed: u64 = order.iter().fold(0, |m, &p| m | 1 << p);
        while order.len() < pn {
            let next = (0..pn)
                .filter(|&p| placed >> p & 1 == 0)
                .max_by_key(|&p| {
                    let back = (pattern.neighbors(p) & placed).count_ones();
                    (back, pattern.degree(p), std::cmp::Reverse(p))
                })
                .expect("unplaced vertex exists");
            order.push(next);
            placed |= 1 << next;
        }
        let mut map = vec![usize::MAX; pn];
        for &(p, h) in pinned {
            map[p] = h;
        }
        Embedder {
            host,
            pattern,
            order,
            map,
            fixed: pinned.len(),
        }
    }

    fn pinned_ok(&self) -> bool {
        let mut used = 0u64;
        for &p in &self.order[..self.fixed] {
            let h = self.map[p];
            if h >= self.host.n() || used >> h & 1 == 1 {
                return false;
            }
            used |= 1 << h;
            for q in bits(self.pattern.neighbors(p)) {
                let hq = self.map[q];
                if hq != usize::MAX && self.order[..self.fixed].contains(&q) && !self.host.has_edge(h, hq) {
                    return false;
                }
            }
        }
        true
    }

    fn used_mask(&self, depth: usize) -> u64 {
        self.order[..depth].iter().fold(0, |m, &p| m | 1 << self.map[p])
    }

    fn candidates(&self, depth: usize, used: u64) -> u64 {
        let p = self.order[depth];
        let mut cand = self.host.vertex_mask() & !used;
        for &q in &self.order[..depth] {
            if self.pattern.has_edge(p, q) {
                cand &= self.host.neighbors(self.map[q]);
            }
        }
        cand
    }

    pub(crate) fn count(mut self) -> u128 {
        if self.pattern.n() > self.host.n() || !self.pinned_ok() {
            return 0;
        }
        let used = self.used_mask(self.fixed);
        self.count_from(self.fixed, used)
    }

    fn count_from(&mut self, depth: usize, used: u64) -> u128 {
        if depth == self.order.len() {
            return 1;
        }
        let cand = self.candidates(depth, used);
        if depth + 1 == self.order.len() {
            return cand.count_ones() as u128;
        }
        let p = self.order[depth];
        let mut total = 0;
        for h in bits(cand) {
            self.map[p] = h;
            total += self.count_from(depth + 1, used | 1 << h);
        }
        total
    }

    /// First embedding in lexicographic search order, as `map[pattern vertex]`.
    pub(crate) fn find(mut self) -> Option<Vec<usize>> {
        if self.pattern.n() > self.host.n() || !self.pinned_ok() {
            return None;
        }
        let used = self.used_mask(self.fixed);
        self.find_from(self.fixed, used).then_some(self.map)
    }

    fn find_from(&mut self, depth: usize, used: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        for h in bits(self.candidates(depth, used)) {
            self.map[p] = h;
            if self.find_from(depth + 1, used | 1 << h) {
                return true;
            }
        }
        false
    }
}

pub fn count_embeddings(g: &Graph, h: &Graph) -> u128 {
    Embedder::new(g, h, &[]).count()
}

pub fn automorphism_count(h: &Graph) -> u128 {
    count_embeddings(h, h)
}

fn count_cliques_in(g: &Graph, cand: u64, k: usize) -> u128 {
    match k {
        0 => 1,
        1 => cand.count_ones() as u128,
        2 => bits(cand)
            .map(|v| (cand & g.neighbors(v) & above(v)).count_ones() as u128)
            .sum(),
        _ => bits(cand)
            .map(|v| count_cliques_in(g, cand & g.neighbors(v) & above(v), k - 1))
            .sum(),
    }
}

pub fn count_cliques(g: &Graph, r: usize) -> u128 {
    count_cliques_in(g, g.vertex_mask(), r)
}

/// A clique of size `k` inside `cand`, smallest vertices first.
pub fn find_clique_in(g: &Graph, cand: u64, k: usize) -> Option<Vec<usize>> {
    if k == 0 {
        return Some(Vec::new());
    }
    if (cand.count_ones() as usize) < k {
        return None;
    }
    for v in bits(cand) {
        if let Some(mut rest) = find_clique_in(g, cand & g.neighbors(v) & above(v), k - 1) {
            rest.insert(0, v);
            return Some(rest);
        }
    }
    None
}

pub fn has_clique_in(g: &Graph, cand: u64, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < k {
        return false;
    }
    if k == 1 {
        return true;
    }
    bits(cand).any(|v| has_clique_in(g, cand & g.neighbors(v) & above(v), k - 1))
}

/// Cycles rooted at their minimum vertex `s`, walked in the direction
/// whose second vertex is smaller than the last, so each is seen once.
struct CycleWalk<'a> {
    g: &'a Graph,
    len: usize,
    root: usize,
    first: usize,
    path: Vec<usize>,
    dist: Vec<usize>,
}

impl<'a> CycleWalk<'a> {
    fn new(g: &'a Graph, len: usize, root: usize) -> Self {
        let allowed = above(root) | 1 << root;
        let sub = restrict(g, allowed & g.vertex_mask());
        CycleWalk {
            g,
            len,
            root,
            first: 0,
            path: Vec::with_capacity(len),
            dist: crate::metrics::distances_from(&sub, root),
        }
    }

    fn closing(&self, cur: usize, visited: u64) -> u64 {
        self.g.neighbors(cur) & self.g.neighbors(self.root) & !visited & above(self.root) & above(self.first)
    }

    fn count(&mut self) -> u128 {
        let start = self.g.neighbors(self.root) & above(self.root);
        let mut total = 0;
        for p1 in bits(start) {
            self.first = p1;
            total += self.count_from(p1, 1 << self.root | 1 << p1, 2);
        }
        total
    }

    fn count_from(&mut self, cur: usize, visited: u64, depth: usize) -> u128 {
        if depth + 1 == self.len {
            return self.closing(cur, visited).count_ones() as u128;
        }
        let remaining = self.len - depth + 1;
        let mut total = 0;
        for w in bits(self.g.neighbors(cur) & !visited & above(self.root)) {
            if self.dist[w] < remaining {
                total += self.count_from(w, visited | 1 << w, depth + 1);
            }
        }
        total
    }

    fn find(&mut self) -> bool {
        let start = self.g.neighbors(self.root) & above(self.root);
        for p1 in bits(start) {
            self.first = p1;
            self.path.clear();
            self.path.extend([self.root, p1]);
            if self.find_from(p1, 1 << self.root | 1 << p1, 2) {
                return true;
            }
        }
        false
    }

    fn find_from(&mut self, cur: usize, visited: u64, depth: usize) -> bool {
        if depth + 1 == self.len {
            if let Some(last) = bits(self.closing(cur, visited)).next() {
                self.path.push(last);
                return true;
            }
            return false;
        }
        let remaining = self.len - depth + 1;
        for w in bits(self.g.neighbors(cur) & !visited & above(self.root)) {
            if self.dist[w] < remaining {
                self.path.push(w);
                if self.find_from(w, visited | 1 << w, depth + 1) {
                    return true;
                }
                self.path.pop();
            }
        }
        false
    }
}

/// Same vertex set, only edges inside `mask`.
fn restrict(g: &Graph, mask: u64) -> Graph {
    let mut rows = vec![0u64; g.n()];
    for v in bits(mask) {
        rows[v] = g.neighbors(v) & mask;
    }
    Graph::from_neighbor_masks(&rows).expect("restriction of a valid graph")
}

pub fn count_cycles(g: &Graph, len: usize) -> u128 {
    assert!(len >= 3);
    (0..g.n()).map(|s| CycleWalk::new(g, len, s).count()).sum()
}

/// Some cycle of length `len`, as its vertex sequence.
pub fn find_cycle(g: &Graph, len: usize) -> Option<Vec<usize>> {
    assert!(len >= 3);
    (0..g.n()).find_map(|s| {
        let mut walk = CycleWalk::new(g, len, s);
        walk.find().then(|| walk.path.clone())
    })
}

fn factorial(k: usize) -> Option<u128> {
    (1..=k as u128).try_fold(1u128, |acc, x| acc.checked_mul(x))
}

fn pattern_automorphisms(p: &Pattern) -> Result<u128> {
    let overflow = || Error::OutOfRange(format!("|Aut({p})| overflows 128 bits"));
    match p {
        Pattern::Clique(r) => factorial(*r).ok_or_else(overflow),
        Pattern::Cycle(l) => Ok(2 * *l as u128),
        Pattern::CompleteBipartite(a, b) => {
            let base = factorial(*a)
                .and_then(|x| factorial(*b).and_then(|y| x.checked_mul(y)))
                .ok_or_else(overflow)?;
            Ok(if a == b { base * 2 } else { base })
        }
        Pattern::Explicit(h) => Ok(automorphism_count(h)),
    }
}

pub fn count_copies(g: &Graph, p: &Pattern) -> Result<CountReport> {
    p.validate()?;
    let automorphisms = pattern_automorphisms(p)?;
    let (copies, embeddings) = match p {
        Pattern::Clique(r) => {
            let c = count_cliques(g, *r);
            (c, c.checked_mul(automorphisms))
        }
        Pattern::Cycle(l) => {
            let c = count_cycles(g, *l);
            (c, c.checked_mul(automorphisms))
        }
        _ => {
            let e = count_embeddings(g, &p.graph());
            debug_assert_eq!(e % automorphisms, 0);
            (e / automorphisms, Some(e))
        }
    };
    let embeddings =
        embeddings.ok_or_else(|| Error::OutOfRange(format!("embedding count of {p} overflows")))?;
    Ok(CountReport {
        pattern: p.clone(),
        embeddings,
        automorphisms,
        copies,
    })
}

/// Shorthand for `count_copies(g, p)?.copies`.
pub fn copies(g: &Graph, p: &Pattern) -> Result<u128> {
    Ok(count_copies(g, p)?.copies)
}

/// Number of 3-subsets spanning no edge (an induced count).
pub fn count_independent_triples(g: &Graph) -> u128 {
    count_cliques(&g.complement(), 3)
}

/// Copies of `h` inside `K_s` whose vertices `h1`, `h2` land on a fixed
/// ordered pair `(u1, u2)` of `K_s`.
pub fn rooted_pair_count(h: &Graph, h1: usize, h2: usize, s: usize) -> Result<u128> {
    h.check_vertex(h1)?;
    h.check_vertex(h2)?;
    if h1 == h2 {
        return Err(Error::OutOfRange("h1 and h2 must be distinct".into()));
    }
    if h.has_edge(h1, h2) {
        return Err(Error::ExpectedNonedge { u: h1, v: h2 });
    }
    if h.n() > s {
        return Err(Error::OutOfRange(format!("pattern on {} vertices does not fit in K{s}", h.n())));
    }
    let ks = Graph::complete(s);
    let rooted = Embedder::new(&ks, h, &[(h1, 0), (h2, 1)]).count();
    let stabilizer = Embedder::new(h, h, &[(h1, h1), (h2, h2)]).count();
    Ok(rooted / stabilizer)
}

/// True iff `g` has a copy of `p` through vertex `v`.
pub fn has_copy_through(g: &Graph, v: usize, p: &Pattern) -> bool {
    match p {
        Pattern::Clique(r) => has_clique_in(g, g.neighbors(v), r - 1),
        Pattern::Cycle(l) => {
            bits(g.neighbors(v)).any(|w| crate::saturation::find_path(g, v, w, l - 1).is_some())
        }
        _ => {
            let h = p.graph();
            (0..h.n()).any(|x| Embedder::new(g, &h, &[(x, v)]).find().is_some())
        }
    }
}
