//! Explicit graph families, each with a fixed vertex labeling.
//!
//! | family | labeling |
//! |---|---|
//! | `EhmJoin(n,s)` | clique `0..s-2`, independent set `s-2..n` |
//! | `BookJoin(n,s)` | `0..s-1` is `K_{s-1}` minus edge `{s-3,s-2}`, independent set `s-1..n` |
//! | `Ws(s,m1,m3,m4)` | central clique `0..s-3`, then `I1`, `a2`, `I3`, `I4`, `a5` in blocks |
//! | `G4k(k)` / `G4k2(k)` | `v=0, u1=1, u2=2`, then blocks `X`, `Y`, `A`, `B` |
//! | `CompleteBipartite(a,b)` | parts `0..a`, `a..a+b` |
//! | `FriendshipLike(m,r)` | shared vertex `0`; copy `i` owns `1+i(r-1) .. 1+(i+1)(r-1)` |
//! | `ApexCliqueFan(n,k)` | apex `0`; cliques of size `k-2` in blocks, the remainder clique last |
//! | `TwoApexClique(n,k)` | clique `0..2k-2` with `x=0, z=1`; `y_i` are `2k-2..n` |
//! | `StarMatching(n)` | center `0`, matching edges `{1,2}, {3,4}, ...` |
//! | `KaszonyiTuza(n,F)` | clique `0..c`, then `J`; edges inside `J` added greedily |

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, join, Graph, MAX_VERTICES};
use crate::pattern::Pattern;
use crate::saturation::is_free;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilyParams {
    EhmJoin { n: usize, s: usize },
    BookJoin { n: usize, s: usize },
    Ws { s: usize, m1: usize, m3: usize, m4: usize },
    G4k { k: usize },
    G4k2 { k: usize },
    CompleteBipartite { a: usize, b: usize },
    FriendshipLike { m: usize, r: usize },
    ApexCliqueFan { n: usize, k: usize },
    TwoApexClique { n: usize, k: usize },
    StarMatching { n: usize },
    KaszonyiTuza { n: usize, f: Pattern },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NamedGraph {
    Petersen,
    C5,
    Coxeter,
    HoffmanSingleton,
    C6Builder11,
}

/// Distinguished vertex of [`NamedGraph::C6Builder11`].
pub const C6_BUILDER_VERTEX: usize = 5;

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::OutOfRange(what()))
    }
}

fn fits(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices(n))
    } else {
        Ok(())
    }
}

impl FamilyParams {
    /// Vertex count implied by the parameters.
    pub fn vertex_count(&self) -> usize {
        match self {
            FamilyParams::EhmJoin { n, .. }
            | FamilyParams::BookJoin { n, .. }
            | FamilyParams::ApexCliqueFan { n, .. }
            | FamilyParams::TwoApexClique { n, .. }
            | FamilyParams::StarMatching { n }
            | FamilyParams::KaszonyiTuza { n, .. } => *n,
            FamilyParams::Ws { s, m1, m3, m4 } => m1 + m3 + m4 + s - 1,
            FamilyParams::G4k { k } => 4 * k + 2,
            FamilyParams::G4k2 { k } => 4 * k + 4,
            FamilyParams::CompleteBipartite { a, b } => a + b,
            FamilyParams::FriendshipLike { m, r } => m * (r - 1) + 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FamilyParams::EhmJoin { n, s } => {
                require(*s >= 3 && n >= s, || format!("EhmJoin needs s >= 3 and n >= s (n={n}, s={s})"))?
            }
            FamilyParams::BookJoin { n, s } => {
                require(*s >= 3 && n > s, || format!("BookJoin needs s >= 3 and n > s (n={n}, s={s})"))?
            }
            FamilyParams::Ws { s, m1, m3, m4 } => require(*s >= 3 && *m1 >= 1 && *m3 >= 1 && *m4 >= 1, || {
                format!("Ws needs s >= 3 and m1, m3, m4 >= 1 (s={s}, m=({m1},{m3},{m4}))")
            })?,
            FamilyParams::G4k { k } => require(*k >= 2, || format!("G(4k) needs k >= 2 (k={k})"))?,
            FamilyParams::G4k2 { k } => require(*k >= 1, || format!("G(4k+2) needs k >= 1 (k={k})"))?,
            FamilyParams::CompleteBipartite { a, b } => {
                require(*a >= 1 && *b >= 1, || format!("K_{{a,b}} needs a, b >= 1 (a={a}, b={b})"))?
            }
            FamilyParams::FriendshipLike { m, r } => {
                require(*m >= 1 && *r >= 2, || format!("FriendshipLike needs m >= 1, r >= 2 (m={m}, r={r})"))?
            }
            FamilyParams::ApexCliqueFan { n, k } => {
                require(*k >= 3 && *n >= 1, || format!("ApexCliqueFan needs k >= 3, n >= 1 (n={n}, k={k})"))?
            }
            FamilyParams::TwoApexClique { n, k } => require(*k >= 2 && *n >= 2 * k - 2, || {
                format!("TwoApexClique needs k >= 2 and n >= 2k-2 (n={n}, k={k})")
            })?,
            FamilyParams::StarMatching { n } => require(*n >= 1, || "StarMatching needs n >= 1".into())?,
            FamilyParams::KaszonyiTuza { n, f } => {
                f.validate()?;
                require(f.edge_count() >= 1, || "KaszonyiTuza needs F with an edge".into())?;
                require(*n >= f.order(), || format!("KaszonyiTuza needs n >= |V(F)| (n={n})"))?;
            }
        }
        fits(self.vertex_count())
    }

    pub fn legend(&self) -> String {
        match self {
            FamilyParams::EhmJoin { n, s } => format!("clique 0..{}, independent set {}..{n}", s - 2, s - 2),
            FamilyParams::BookJoin { n, s } => format!(
                "K_{} minus edge {{{},{}}} on 0..{}, independent set {}..{n}",
                s - 1,
                s - 3,
                s - 2,
                s - 1,
                s - 1
            ),
            FamilyParams::Ws { s, m1, m3, m4 } => {
                let z = s - 3;
                let i1 = z;
                let a2 = i1 + m1;
                let i3 = a2 + 1;
                let i4 = i3 + m3;
                let a5 = i4 + m4;
                format!(
                    "central clique 0..{z}, I1 {i1}..{a2}, a2 {a2}, I3 {i3}..{i4}, I4 {i4}..{a5}, a5 {a5}"
                )
            }
            FamilyParams::G4k { k } => g_legend(*k, *k, k - 1),
            FamilyParams::G4k2 { k } => g_legend(*k, k + 1, *k),
            FamilyParams::CompleteBipartite { a, b } => format!("parts 0..{a} and {a}..{}", a + b),
            FamilyParams::FriendshipLike { m, r } => {
                format!("shared vertex 0, copy i of K_{r} on 1+{}i..1+{}(i+1) for i < {m}", r - 1, r - 1)
            }
            FamilyParams::ApexCliqueFan { n, k } => {
                let (q, rem) = fan_split(*n, *k);
                format!("apex 0, {q} cliques of size {} in consecutive blocks, then a K_{rem}", k - 2)
            }
            FamilyParams::TwoApexClique { n, k } => {
                format!("clique 0..{} with x=0, z=1; y vertices {}..{n}", 2 * k - 2, 2 * k - 2)
            }
            FamilyParams::StarMatching { n } => format!("center 0, matching {{1,2}}, {{3,4}}, ... on 1..{n}"),
            FamilyParams::KaszonyiTuza { n, f } => {
                let c = kt_clique_size(f);
                format!("clique 0..{c}, J = {c}..{n}; J edges added in lexicographic order while {f}-free")
            }
        }
    }
}

fn g_legend(x: usize, a: usize, b: usize) -> String {
    let xs = 3;
    let ys = xs + x;
    let as_ = ys + x;
    let bs = as_ + a;
    format!(
        "v=0, u1=1, u2=2, X {xs}..{ys}, Y {ys}..{as_}, A {as_}..{bs}, B {bs}..{}",
        bs + b
    )
}

fn fan_split(n: usize, k: usize) -> (usize, usize) {
    let rest = n - 1;
    (rest / (k - 2), rest % (k - 2))
}

fn clique_on(g: &mut Graph, verts: &[usize]) {
    for (i, &a) in verts.iter().enumerate() {
        for &b in &verts[i + 1..] {
            g.add_edge(a, b);
        }
    }
}

fn g_family(k: usize, a_size: usize, b_size: usize) -> Graph {
    let x0 = 3;
    let y0 = x0 + k;
    let a0 = y0 + k;
    let b0 = a0 + a_size;
    let n = b0 + b_size;
    let mut g = Graph::empty(n);
    let (v, u1, u2) = (0, 1, 2);
    g.add_edge(v, u1);
    g.add_edge(v, u2);
    for x in x0..y0 {
        g.add_edge(u1, x);
        for y in y0..a0 {
            g.add_edge(x, y);
        }
        for a in a0..b0 {
            g.add_edge(x, a);
        }
    }
    for a in a0..b0 {
        g.add_edge(u2, a);
        for b in b0..n {
            g.add_edge(a, b);
        }
    }
    g
}

/// `|V(F)| - α(F) - 1`, the clique size of the construction.
pub fn kt_clique_size(f: &Pattern) -> usize {
    let h = f.graph();
    h.n() - independence_number(&h) - 1
}

pub fn independence_number(g: &Graph) -> usize {
    fn mis(g: &Graph, cand: u64, best: &mut usize, size: usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        mis(g, cand & !(1 << v) & !g.neighbors(v), best, size + 1);
        if g.neighbors(v) & cand != 0 {
            mis(g, cand & !(1 << v), best, size);
        }
    }
    let mut best = 0;
    mis(g, g.vertex_mask(), &mut best, 0);
    best
}

/// Clique joined to an independent set `J`, then `J`-internal edges added in
/// lexicographic order whenever they keep the graph `f`-free. A pair rejected
/// once stays rejected, so a single pass reaches an `f`-saturated graph.
pub fn kaszonyi_tuza(n: usize, f: &Pattern) -> Result<Graph> {
    FamilyParams::KaszonyiTuza { n, f: f.clone() }.validate()?;
    let c = kt_clique_size(f);
    let mut g = join(&Graph::complete(c), &Graph::empty(n - c))?;
    debug_assert!(is_free(&g, f)?);
    for u in c..n {
        for v in u + 1..n {
            g.add_edge(u, v);
            if !is_free(&g, f)? {
                g.remove_edge(u, v);
            }
        }
    }
    Ok(g)
}

pub fn make(params: &FamilyParams) -> Result<Graph> {
    params.validate()?;
    let g = match *params {
        FamilyParams::EhmJoin { n, s } => join(&Graph::complete(s - 2), &Graph::empty(n - s + 2))?,
        FamilyParams::BookJoin { n, s } => {
            let mut book = Graph::complete(s - 1);
            book.remove_edge(s - 3, s - 2);
            join(&book, &Graph::empty(n - s + 1))?
        }
        FamilyParams::Ws { s, m1, m3, m4 } => {
            let z = s - 3;
            let n = params.vertex_count();
            let mut g = Graph::empty(n);
            let blocks = {
                let i1 = z..z + m1;
                let a2 = i1.end..i1.end + 1;
                let i3 = a2.end..a2.end + m3;
                let i4 = i3.end..i3.end + m4;
                let a5 = i4.end..i4.end + 1;
                [i1, a2, i3, i4, a5]
            };
            for i in 0..5 {
                for x in blocks[i].clone() {
                    for y in blocks[(i + 1) % 5].clone() {
                        g.add_edge(x, y);
                    }
                }
            }
            for c in 0..z {
                for w in 0..n {
                    if w != c {
                        g.add_edge(c, w);
                    }
                }
            }
            g
        }
        FamilyParams::G4k { k } => g_family(k, k, k - 1),
        FamilyParams::G4k2 { k } => g_family(k, k + 1, k),
        FamilyParams::CompleteBipartite { a, b } => Graph::complete_bipartite(a, b),
        FamilyParams::FriendshipLike { m, r } => {
            let mut g = Graph::empty(params.vertex_count());
            for i in 0..m {
                let mut verts = vec![0];
                verts.extend(1 + i * (r - 1)..1 + (i + 1) * (r - 1));
                clique_on(&mut g, &verts);
            }
            g
        }
        FamilyParams::ApexCliqueFan { n, k } => {
            let (q, rem) = fan_split(n, k);
            let mut g = Graph::empty(n);
            let mut start = 1;
            for size in std::iter::repeat(k - 2).take(q).chain(std::iter::once(rem)) {
                let mut verts = vec![0];
                verts.extend(start..start + size);
                clique_on(&mut g, &verts);
                start += size;
            }
            g
        }
        FamilyParams::TwoApexClique { n, k } => {
            let c = 2 * k - 2;
            let mut g = Graph::complete(c).disjoint_union(&Graph::empty(n - c))?;
            for y in c..n {
                g.add_edge(0, y);
                g.add_edge(1, y);
            }
            g
        }
        FamilyParams::StarMatching { n } => {
            let mut g = Graph::empty(n);
            for v in 1..n {
                g.add_edge(0, v);
            }
            let mut v = 1;
            while v + 1 < n {
                g.add_edge(v, v + 1);
                v += 2;
            }
            g
        }
        FamilyParams::KaszonyiTuza { n, ref f } => kaszonyi_tuza(n, f)?,
    };
    debug_assert_eq!(g.n(), params.vertex_count());
    Ok(g)
}

pub fn named_graph(name: NamedGraph) -> Graph {
    match name {
        // outer cycle 0..5, inner pentagram 5..10, spokes i ~ i+5
        NamedGraph::Petersen => {
            let mut g = Graph::empty(10);
            for i in 0..5 {
                g.add_edge(i, (i + 1) % 5);
                g.add_edge(5 + i, 5 + (i + 2) % 5);
                g.add_edge(i, i + 5);
            }
            g
        }
        NamedGraph::C5 => Graph::cycle(5),
        // a_i = i, b_i = 7+i, c_i = 14+i, d_i = 21+i;
        // a_i ~ a_{i+1}, b_i ~ b_{i+2}, c_i ~ c_{i+3}, d_i ~ a_i, b_i, c_i
        NamedGraph::Coxeter => {
            let mut g = Graph::empty(28);
            for i in 0..7 {
                g.add_edge(i, (i + 1) % 7);
                g.add_edge(7 + i, 7 + (i + 2) % 7);
                g.add_edge(14 + i, 14 + (i + 3) % 7);
                for block in [0, 7, 14] {
                    g.add_edge(21 + i, block + i);
                }
            }
            g
        }
        // pentagons P_h (5h + j) and pentagrams Q_i (25 + 5i + j);
        // P_h[j] ~ Q_i[h*i + j mod 5]
        NamedGraph::HoffmanSingleton => {
            let mut g = Graph::empty(50);
            for h in 0..5 {
                for j in 0..5 {
                    g.add_edge(5 * h + j, 5 * h + (j + 1) % 5);
                    g.add_edge(25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5);
                }
            }
            for h in 0..5 {
                for i in 0..5 {
                    for j in 0..5 {
                        g.add_edge(5 * h + j, 25 + 5 * i + (h * i + j) % 5);
                    }
                }
            }
            g
        }
        // Drawn 11-vertex C6-builder; vertices numbered by figure position
        // (left to right, bottom to top), distinguished vertex 5.
        NamedGraph::C6Builder11 => Graph::from_edges(
            11,
            &[
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 4),
                (2, 3),
                (2, 5),
                (2, 6),
                (4, 5),
                (4, 7),
                (5, 6),
                (5, 9),
                (6, 10),
                (7, 8),
                (8, 9),
                (9, 10),
            ],
        )
        .expect("static edge list"),
    }
}

/// Set of vertices with degree `d`.
pub fn vertices_of_degree(g: &Graph, d: usize) -> u64 {
    (0..g.n()).filter(|&v| g.degree(v) == d).fold(0, |m, v| m | 1 << v)
}

/// Vertices whose neighborhood equals that of `v` (including `v`).
pub fn twins_of(g: &Graph, v: usize) -> Vec<usize> {
    let nb = g.neighbors(v);
    bits(g.vertex_mask()).filter(|&w| g.neighbors(w) == nb).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::copies;
    use crate::metrics::{diameter, girth};
    use crate::saturation::check_saturated;

    #[test]
    fn family_sizes() {
        let g = make(&FamilyParams::EhmJoin { n: 10, s: 4 }).unwrap();
        assert_eq!((g.n(), g.edge_count()), (10, 17));
        for k in 2..=5 {
            let g = make(&FamilyParams::G4k { k }).unwrap();
            assert_eq!(g.n(), 4 * k + 2);
            assert_eq!(g.edge_count(), 3 * k * k + k + 2);
        }
        assert_eq!(make(&FamilyParams::G4k2 { k: 1 }).unwrap().n(), 8);
        let bowtie = make(&FamilyParams::FriendshipLike { m: 2, r: 3 }).unwrap();
        assert_eq!((bowtie.n(), bowtie.edge_count()), (5, 6));
    }

    #[test]
    fn ehm_edge_formula() {
        for s in 3..=6 {
            for n in s..=14 {
                let g = make(&FamilyParams::EhmJoin { n, s }).unwrap();
                assert_eq!(g.edge_count(), (s - 2) * (n - s + 2) + (s - 2) * (s - 3) / 2);
            }
        }
    }

    #[test]
    fn star_matching_triangles() {
        let g = make(&FamilyParams::StarMatching { n: 7 }).unwrap();
        assert_eq!(copies(&g, &Pattern::Clique(3)).unwrap(), 3);
        let g = make(&FamilyParams::StarMatching { n: 8 }).unwrap();
        assert_eq!(copies(&g, &Pattern::Clique(3)).unwrap(), 3);
    }

    #[test]
    fn parameter_errors() {
        assert!(make(&FamilyParams::G4k { k: 1 }).is_err());
        assert!(make(&FamilyParams::G4k2 { k: 0 }).is_err());
        assert!(make(&FamilyParams::Ws { s: 2, m1: 1, m3: 1, m4: 1 }).is_err());
        assert!(make(&FamilyParams::Ws { s: 4, m1: 0, m3: 1, m4: 1 }).is_err());
        assert!(make(&FamilyParams::CompleteBipartite { a: 40, b: 40 }).is_err());
        assert!(make(&FamilyParams::KaszonyiTuza { n: 2, f: Pattern::Clique(3) }).is_err());
    }

    #[test]
    fn kaszonyi_tuza_cases() {
        let star = kaszonyi_tuza(7, &Pattern::Clique(3)).unwrap();
        assert_eq!(star, Graph::complete_bipartite(1, 6));
        assert!(check_saturated(&star, &Pattern::Clique(3)).unwrap());

        let g = kaszonyi_tuza(8, &Pattern::Clique(4)).unwrap();
        assert!(check_saturated(&g, &Pattern::Clique(4)).unwrap());
        for v in 2..8 {
            assert!(g.degree(v) <= 2);
        }

        let p3 = Pattern::path(3);
        let m = kaszonyi_tuza(5, &p3).unwrap();
        assert_eq!(m.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        assert!(check_saturated(&m, &p3).unwrap());
    }

    #[test]
    fn named_graph_facts() {
        let p = named_graph(NamedGraph::Petersen);
        assert_eq!((p.n(), p.edge_count(), girth(&p)), (10, 15, Some(5)));
        let c = named_graph(NamedGraph::Coxeter);
        assert_eq!((c.n(), c.edge_count(), girth(&c)), (28, 42, Some(7)));
        let hs = named_graph(NamedGraph::HoffmanSingleton);
        assert_eq!((hs.n(), hs.edge_count()), (50, 175));
        assert_eq!((girth(&hs), diameter(&hs)), (Some(5), Some(2)));
        let b = named_graph(NamedGraph::C6Builder11);
        assert_eq!((b.n(), b.edge_count()), (11, 15));
        assert_eq!(copies(&b, &Pattern::Cycle(4)).unwrap(), 2);
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(independence_number(&Graph::cycle(5)), 2);
        assert_eq!(independence_number(&named_graph(NamedGraph::Petersen)), 4);
        assert_eq!(independence_number(&Graph::empty(4)), 4);
        assert_eq!(independence_number(&Graph::complete(4)), 1);
    }
}
