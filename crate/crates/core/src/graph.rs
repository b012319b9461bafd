//! Dense bitset graphs on at most 64 vertices.
//!
//! Vertex `v` owns bit `v` of every neighbor mask, so neighbor-set
//! intersection is a single `&` and membership a single shift.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Iterate the set bits of `mask` in increasing order.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Mask with the low `n` bits set.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n > 64`; use [`Graph::try_empty`] for untrusted sizes.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES, "graph on {n} vertices exceeds the 64-vertex cap");
        Graph {
            n,
            adj: [0; MAX_VERTICES],
        }
    }

    pub fn try_empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph::empty(n))
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::try_empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::OutOfRange(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Build from per-vertex neighbor masks, checking symmetry and loops.
    pub fn from_neighbor_masks(masks: &[u64]) -> Result<Graph> {
        let n = masks.len();
        let mut g = Graph::try_empty(n)?;
        let valid = low_mask(n);
        for (v, &m) in masks.iter().enumerate() {
            if m & !valid != 0 {
                return Err(Error::OutOfRange(format!("vertex {v} has a neighbor >= {n}")));
            }
            if m >> v & 1 == 1 {
                return Err(Error::OutOfRange(format!("loop at vertex {v}")));
            }
            g.adj[v] = m;
        }
        for u in 0..n {
            for v in bits(g.adj[u]) {
                if g.adj[v] >> u & 1 == 0 {
                    return Err(Error::OutOfRange(format!("asymmetric adjacency at {u},{v}")));
                }
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    /// Path `0-1-...-(n-1)` on `n` vertices.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n].iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    /// Nonedges `(u, v)` with `u < v`, in lexicographic order.
    pub fn nonedges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = self.vertex_mask();
        (0..self.n).flat_map(move |u| {
            let rest = !self.adj[u] & all & !low_mask(u + 1);
            bits(rest).map(move |v| (u, v))
        })
    }

    pub fn nonedge_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2 - self.edge_count()
    }

    pub fn is_complete(&self) -> bool {
        self.nonedge_count() == 0
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Degrees sorted in decreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        let all = self.vertex_mask();
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & all & !(1 << v);
        }
        g
    }

    /// Relabel so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            let mut m = 0u64;
            for v in bits(self.adj[u]) {
                m |= 1 << perm[v];
            }
            g.adj[perm[u]] = m;
        }
        g
    }

    /// Subgraph induced by `mask`, vertices renumbered in increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertex_mask() & !(1 << v))
    }

    /// Append vertex `n` adjacent to exactly `neighbors`.
    pub fn with_vertex(&self, neighbors: u64) -> Result<Graph> {
        if self.n >= MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n + 1));
        }
        if neighbors & !self.vertex_mask() != 0 {
            return Err(Error::OutOfRange("new vertex neighbor out of range".into()));
        }
        let mut g = self.clone();
        let u = g.n;
        g.n += 1;
        g.adj[u] = neighbors;
        for v in bits(neighbors) {
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Graph on `n` vertices whose vertex `v` becomes vertex `offset + v`.
    fn place_into(&self, target: &mut Graph, offset: usize) {
        for u in 0..self.n {
            target.adj[offset + u] |= self.adj[u] << offset;
        }
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let total = self.n + other.n;
        let mut g = Graph::try_empty(total)?;
        self.place_into(&mut g, 0);
        other.place_into(&mut g, self.n);
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.vertex_mask()
    }

    /// Adjacency row masks of all vertices.
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }
}

/// Join `g1 + g2`: disjoint union plus every edge between the parts.
/// Vertices of `g1` keep their labels; `g2` is shifted by `g1.n()`.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let mut g = g1.disjoint_union(g2)?;
    let n1 = g1.n();
    for u in 0..n1 {
        for v in n1..g.n() {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Add a twin `u = n` of `v`: same neighborhood, not adjacent to `v`.
pub fn clone_vertex(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    g.with_vertex(g.neighbors(v))
}

/// Merge the distinguished vertex of every graph into one vertex.
///
/// Labeling: the merged vertex is 0; the remaining vertices of graph `i`
/// follow in their original relative order after those of graph `i - 1`.
pub fn identify_vertices(parts: &[(&Graph, usize)]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::Empty("identify_vertices needs at least one graph".into()));
    }
    let mut total = 1usize;
    for (g, v) in parts {
        g.check_vertex(*v)?;
        total += g.n() - 1;
    }
    let mut out = Graph::try_empty(total)?;
    let mut next = 1;
    for (g, v) in parts {
        let map: Vec<usize> = (0..g.n())
            .map(|x| match x.cmp(v) {
                std::cmp::Ordering::Equal => 0,
                std::cmp::Ordering::Less => next + x,
                std::cmp::Ordering::Greater => next + x - 1,
            })
            .collect();
        for (a, b) in g.edges() {
            out.add_edge(map[a], map[b]);
        }
        next += g.n() - 1;
    }
    Ok(out)
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj[..self.n] == other.adj[..other.n]
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj[..self.n].hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::graph6::to_graph6(self))
    }
}
