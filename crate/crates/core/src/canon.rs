//! Canonical labeling by equitable refinement plus individualization.
//!
//! The search tree is explored depth first. Every leaf is a discrete
//! ordered partition; the leaf whose relabeled adjacency rows compare
//! greatest is canonical. A leaf reproducing the first or the best leaf's
//! relabeled graph yields an automorphism, and children of a node that lie
//! in one orbit of the automorphisms fixing that node's prefix are skipped.
//! The automorphisms found this way generate the whole group.

use crate::graph::{bits, Graph};

/// A vertex permutation `p` stored as `p[v]`.
pub type Perm = Vec<usize>;

#[derive(Clone, Debug)]
pub struct Canonical {
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Perm,
    /// The graph relabeled by `labeling`.
    pub graph: Graph,
    /// Generators of the automorphism group.
    pub generators: Vec<Perm>,
}

impl Canonical {
    /// Orbit representative (smallest member) of each vertex.
    pub fn orbits(&self) -> Vec<usize> {
        orbits_of(self.graph.n(), &self.generators)
    }
}

pub fn orbits_of(n: usize, generators: &[Perm]) -> Vec<usize> {
    let mut uf = UnionFind::new(n);
    for g in generators {
        for (v, &w) in g.iter().enumerate() {
            uf.union(v, w);
        }
    }
    (0..n).map(|v| uf.find(v)).collect()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    // smaller root wins so representatives are orbit minima
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }
}

/// Split cells until every cell is equitable with respect to every other.
/// Sub-cells are ordered by increasing neighbor count, so the result
/// depends only on structure and the incoming cell order.
fn refine(g: &Graph, cells: &mut Vec<u64>, mut queue: Vec<u64>) {
    let n = g.n();
    let mut head = 0;
    let mut buf: Vec<(u32, usize)> = Vec::with_capacity(n);
    while head < queue.len() && cells.len() < n {
        let splitter = queue[head];
        head += 1;
        let mut ci = 0;
        while ci < cells.len() {
            let cell = cells[ci];
            if cell & (cell - 1) == 0 {
                ci += 1;
                continue;
            }
            buf.clear();
            let mut first = None;
            let mut uniform = true;
            for v in bits(cell) {
                let c = (g.neighbors(v) & splitter).count_ones();
                match first {
                    None => first = Some(c),
                    Some(f) if f != c => uniform = false,
                    _ => {}
                }
                buf.push((c, v));
            }
            if uniform {
                ci += 1;
                continue;
            }
            buf.sort_unstable();
            let mut frags: Vec<u64> = Vec::new();
            let mut cur = 0u64;
            let mut cur_key = buf[0].0;
            for &(c, v) in &buf {
                if c != cur_key {
                    frags.push(cur);
                    cur = 0;
                    cur_key = c;
                }
                cur |= 1 << v;
            }
            frags.push(cur);
            let k = frags.len();
            queue.extend_from_slice(&frags);
            cells.splice(ci..=ci, frags);
            ci += k;
        }
    }
}

struct Leaf {
    pos: Perm,
    key: Vec<u64>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Perm>,
}

impl<'a> Search<'a> {
    fn leaf(&mut self, cells: &[u64]) {
        let n = self.g.n();
        let mut pos = vec![0usize; n];
        for (i, &c) in cells.iter().enumerate() {
            pos[c.trailing_zeros() as usize] = i;
        }
        let relabeled = self.g.permuted(&pos);
        let key: Vec<u64> = relabeled.rows().to_vec();
        let Some(first) = &self.first else {
            self.first = Some(Leaf { pos, key });
            return;
        };
        if key == first.key {
            self.generators.push(automorphism(&first.pos, &pos));
            return;
        }
        let best = self.best.as_ref().unwrap_or(first);
        match key.cmp(&best.key) {
            std::cmp::Ordering::Equal => {
                let a = automorphism(&best.pos, &pos);
                self.generators.push(a);
            }
            std::cmp::Ordering::Greater => self.best = Some(Leaf { pos, key }),
            std::cmp::Ordering::Less => {}
        }
    }

    fn descend(&mut self, mut cells: Vec<u64>, queue: Vec<u64>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells, queue);
        if cells.len() == self.g.n() {
            self.leaf(&cells);
            return;
        }
        // first smallest non-singleton cell
        let (target, _) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[target];
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(cell) {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            let mut child = cells.clone();
            let single = 1u64 << v;
            child.splice(target..=target, [single, cell & !single]);
            prefix.push(v);
            self.descend(child, vec![single], prefix);
            prefix.pop();
        }
    }

    fn equivalent_to_explored(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let fixing: Vec<&Perm> = self
            .generators
            .iter()
            .filter(|p| prefix.iter().all(|&x| p[x] == x))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.g.n());
        for p in fixing {
            for (a, &b) in p.iter().enumerate() {
                uf.union(a, b);
            }
        }
        let rv = uf.find(v);
        explored.iter().any(|&w| uf.find(w) == rv)
    }
}

/// Automorphism sending each vertex `v` to the vertex that the reference
/// leaf places where `leaf` places `v`.
fn automorphism(reference: &[usize], leaf: &[usize]) -> Perm {
    let n = reference.len();
    let mut inv = vec![0usize; n];
    for (v, &p) in reference.iter().enumerate() {
        inv[p] = v;
    }
    (0..n).map(|v| inv[leaf[v]]).collect()
}

/// Canonical labeling respecting an initial vertex coloring: vertices of
/// smaller color receive smaller positions.
pub fn canonical_labeling_colored(g: &Graph, colors: &[u32]) -> Canonical {
    let n = g.n();
    assert_eq!(colors.len(), n);
    if n == 0 {
        return Canonical {
            labeling: vec![],
            graph: g.clone(),
            generators: vec![],
        };
    }
    let mut distinct: Vec<u32> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let cells: Vec<u64> = distinct
        .iter()
        .map(|&c| {
            (0..n)
                .filter(|&v| colors[v] == c)
                .fold(0u64, |m, v| m | 1 << v)
        })
        .collect();
    let mut search = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let queue = cells.clone();
    search.descend(cells, queue, &mut Vec::new());
    let leaf = search.best.or(search.first).expect("search reaches a leaf");
    Canonical {
        graph: g.permuted(&leaf.pos),
        labeling: leaf.pos,
        generators: search.generators,
    }
}

pub fn canonical_labeling(g: &Graph) -> Canonical {
    canonical_labeling_colored(g, &vec![0; g.n()])
}

/// Canonical byte string: the graph6 code of the canonically relabeled graph.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    crate::graph6::to_graph6(&canonical_labeling(g).graph).into_bytes()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    canonical_labeling(a).graph == canonical_labeling(b).graph
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{named_graph, NamedGraph};

    fn check_generators(g: &Graph, c: &Canonical) {
        for p in &c.generators {
            assert_eq!(&g.permuted(p), g, "generator is not an automorphism");
        }
    }

    fn group_order(n: usize, gens: &[Perm]) -> usize {
        let id: Perm = (0..n).collect();
        let mut seen = std::collections::HashSet::new();
        seen.insert(id.clone());
        let mut stack = vec![id];
        while let Some(p) = stack.pop() {
            for g in gens {
                let q: Perm = p.iter().map(|&x| g[x]).collect();
                if seen.insert(q.clone()) {
                    stack.push(q);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn k3_vs_empty() {
        assert_ne!(canonical_form(&Graph::complete(3)), canonical_form(&Graph::empty(3)));
    }

    #[test]
    fn generators_generate_full_group() {
        let cases = [
            (Graph::cycle(4), 8),
            (Graph::cycle(5), 10),
            (Graph::complete(5), 120),
            (Graph::empty(6), 720),
            (Graph::complete_bipartite(3, 3), 72),
            (named_graph(NamedGraph::Petersen), 120),
            (Graph::path(5), 2),
        ];
        for (g, order) in cases {
            let c = canonical_labeling(&g);
            check_generators(&g, &c);
            assert_eq!(group_order(g.n(), &c.generators), order, "{g:?}");
        }
    }

    #[test]
    fn orbits_of_path() {
        let c = canonical_labeling(&Graph::path(4));
        assert_eq!(c.orbits(), vec![0, 1, 1, 0]);
    }

    #[test]
    fn relabeled_cycle_isomorphic() {
        let g = Graph::cycle(5);
        let h = g.permuted(&[3, 0, 4, 1, 2]);
        assert!(is_isomorphic(&g, &h));
        assert!(!is_isomorphic(&Graph::complete_bipartite(1, 3), &Graph::path(4)));
    }

    #[test]
    fn large_symmetric_graphs_finish() {
        for name in [NamedGraph::Coxeter, NamedGraph::HoffmanSingleton] {
            let g = named_graph(name);
            let c = canonical_labeling(&g);
            check_generators(&g, &c);
            let h = g.permuted(&(0..g.n()).rev().collect::<Vec<_>>());
            assert_eq!(canonical_labeling(&h).graph, c.graph);
        }
    }
}
