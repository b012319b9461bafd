//! `F`-freeness, `F`-saturation and checkable certificates.
//!
//! A witness for nonedge `uv` lists the vertices of a copy of `F` in
//! `g + uv` in pattern order: `copy[i]` is the image of vertex `i` of
//! [`Pattern::graph`]. For cycles that is the `u`-to-`v` path followed by
//! the closing edge; for cliques it starts with `u, v`.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::count::{find_clique_in, find_cycle, has_clique_in, Embedder};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::metrics::{diameter, distances_from, girth};
use crate::pattern::Pattern;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub u: usize,
    pub v: usize,
    pub copy: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationCertificate {
    pub target: Pattern,
    pub free_checked: bool,
    pub witnesses: Vec<Witness>,
}

impl SaturationCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Verification(format!("bad certificate JSON: {e}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MooreClass {
    Moore,
    Diameter3Saturated,
    NotApplicable,
}

pub fn is_free(g: &Graph, f: &Pattern) -> Result<bool> {
    f.validate()?;
    Ok(match f {
        Pattern::Clique(r) => !has_clique_in(g, g.vertex_mask(), *r),
        Pattern::Cycle(l) => find_cycle(g, *l).is_none(),
        _ => {
            let h = f.graph();
            Embedder::new(g, &h, &[]).find().is_none()
        }
    })
}

/// A simple path from `from` to `to` with exactly `len` edges.
pub fn find_path(g: &Graph, from: usize, to: usize, len: usize) -> Option<Vec<usize>> {
    if from == to {
        return (len == 0).then(|| vec![from]);
    }
    if len == 0 {
        return None;
    }
    let dist = distances_from(g, to);
    if dist[from] > len {
        return None;
    }
    let mut path = Vec::with_capacity(len + 1);
    path.push(from);
    if extend_path(g, to, &dist, &mut path, 1 << from | 1 << to, len) {
        Some(path)
    } else {
        None
    }
}

fn extend_path(g: &Graph, to: usize, dist: &[usize], path: &mut Vec<usize>, visited: u64, remaining: usize) -> bool {
    let cur = *path.last().unwrap();
    if remaining == 1 {
        if g.has_edge(cur, to) {
            path.push(to);
            return true;
        }
        return false;
    }
    for w in bits(g.neighbors(cur) & !visited) {
        // dist is usize::MAX for vertices cut off from `to`
        if dist[w] < remaining {
            path.push(w);
            if extend_path(g, to, dist, path, visited | 1 << w, remaining - 1) {
                return true;
            }
            path.pop();
        }
    }
    false
}

/// Vertex list of a copy of `f` in `g + uv` that uses the new edge.
pub fn creates_through(g: &Graph, u: usize, v: usize, f: &Pattern) -> Result<Option<Vec<usize>>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::OutOfRange("u and v coincide".into()));
    }
    if g.has_edge(u, v) {
        return Err(Error::AlreadyEdge { u, v });
    }
    f.validate()?;
    Ok(witness_for(g, u, v, f))
}

fn witness_for(g: &Graph, u: usize, v: usize, f: &Pattern) -> Option<Vec<usize>> {
    match f {
        Pattern::Clique(r) if *r < 2 => None,
        Pattern::Clique(r) => {
            let common = g.neighbors(u) & g.neighbors(v);
            find_clique_in(g, common, r - 2).map(|rest| {
                let mut w = vec![u, v];
                w.extend(rest);
                w
            })
        }
        Pattern::Cycle(l) => find_path(g, u, v, l - 1),
        _ => {
            let h = f.graph();
            let mut plus = g.clone();
            plus.add_edge(u, v);
            for (a, b) in h.edges() {
                for (x, y) in [(a, b), (b, a)] {
                    if let Some(map) = Embedder::new(&plus, &h, &[(x, u), (y, v)]).find() {
                        return Some(map);
                    }
                }
            }
            None
        }
    }
}

/// Saturation test without building a certificate; stops at the first
/// failing nonedge.
pub fn check_saturated(g: &Graph, f: &Pattern) -> Result<bool> {
    if !is_free(g, f)? {
        return Ok(false);
    }
    Ok(g.nonedges().all(|(u, v)| witness_for(g, u, v, f).is_some()))
}

/// Saturation with a complete certificate on success. Nonedges are checked
/// in parallel; the certificate lists them in lexicographic order.
pub fn is_saturated(g: &Graph, f: &Pattern) -> Result<(bool, Option<SaturationCertificate>)> {
    if !is_free(g, f)? {
        return Ok((false, None));
    }
    let pairs: Vec<(usize, usize)> = g.nonedges().collect();
    let found: Vec<Option<Witness>> = pairs
        .par_iter()
        .map(|&(u, v)| witness_for(g, u, v, f).map(|copy| Witness { u, v, copy }))
        .collect();
    let witnesses: Option<Vec<Witness>> = found.into_iter().collect();
    Ok(match witnesses {
        Some(witnesses) => (
            true,
            Some(SaturationCertificate {
                target: f.clone(),
                free_checked: true,
                witnesses,
            }),
        ),
        None => (false, None),
    })
}

/// Check a certificate against `g` from scratch: every nonedge keyed exactly
/// once, every witness a copy of the target through its nonedge, and, when
/// `free_checked` is set, no copy of the target in `g` itself.
pub fn verify_certificate(g: &Graph, cert: &SaturationCertificate) -> bool {
    if cert.target.validate().is_err() {
        return false;
    }
    let h = cert.target.graph();
    let mut keys = HashSet::new();
    for w in &cert.witnesses {
        let (u, v) = (w.u.min(w.v), w.u.max(w.v));
        if v >= g.n() || u == v || g.has_edge(u, v) || !keys.insert((u, v)) {
            return false;
        }
        if !witness_is_copy(g, &h, w) {
            return false;
        }
    }
    if keys.len() != g.nonedge_count() {
        return false;
    }
    if cert.free_checked && Embedder::new(g, &h, &[]).find().is_some() {
        return false;
    }
    true
}

fn witness_is_copy(g: &Graph, h: &Graph, w: &Witness) -> bool {
    if w.copy.len() != h.n() {
        return false;
    }
    let mut seen = 0u64;
    for &x in &w.copy {
        if x >= g.n() || seen >> x & 1 == 1 {
            return false;
        }
        seen |= 1 << x;
    }
    let is_new = |a: usize, b: usize| (a == w.u && b == w.v) || (a == w.v && b == w.u);
    let mut uses_new = false;
    for (a, b) in h.edges() {
        let (x, y) = (w.copy[a], w.copy[b]);
        if is_new(x, y) {
            uses_new = true;
        } else if !g.has_edge(x, y) {
            return false;
        }
    }
    uses_new
}

/// Triangle-free `C4`-saturated graphs have diameter at most 3; those of
/// diameter 2 have girth 5.
pub fn moore_check(g: &Graph) -> MooreClass {
    let triangle_free = is_free(g, &Pattern::Clique(3)).unwrap_or(false);
    if !triangle_free || !check_saturated(g, &Pattern::Cycle(4)).unwrap_or(false) {
        return MooreClass::NotApplicable;
    }
    match (diameter(g), girth(g)) {
        (Some(2), Some(5)) => MooreClass::Moore,
        (Some(3), _) => MooreClass::Diameter3Saturated,
        _ => MooreClass::NotApplicable,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{make, named_graph, FamilyParams, NamedGraph};
    use crate::graph::join;

    #[test]
    fn freeness() {
        let petersen = named_graph(NamedGraph::Petersen);
        assert!(is_free(&petersen, &Pattern::Cycle(4)).unwrap());
        let kj = join(&Graph::complete(2), &Graph::empty(4)).unwrap();
        assert!(is_free(&kj, &Pattern::Clique(4)).unwrap());
        assert!(!is_free(&Graph::complete(4), &Pattern::Clique(4)).unwrap());
    }

    #[test]
    fn creates_through_examples() {
        let g8 = make(&FamilyParams::G4k { k: 2 }).unwrap();
        for (u, v) in g8.nonedges() {
            let w = creates_through(&g8, u, v, &Pattern::Cycle(8)).unwrap().unwrap();
            assert_eq!((w[0], w[7]), (u, v));
        }
        assert_eq!(creates_through(&Graph::empty(2), 0, 1, &Pattern::Clique(3)).unwrap(), None);
        let c5 = Graph::cycle(5);
        let w = creates_through(&c5, 0, 2, &Pattern::Cycle(4)).unwrap().unwrap();
        assert_eq!(w, vec![0, 4, 3, 2]);
        assert!(matches!(
            creates_through(&c5, 0, 1, &Pattern::Cycle(4)),
            Err(Error::AlreadyEdge { .. })
        ));
    }

    #[test]
    fn saturation_examples() {
        assert!(is_saturated(&Graph::cycle(5), &Pattern::Cycle(4)).unwrap().0);
        for n in 6..=12 {
            let g = join(&Graph::complete(2), &Graph::empty(n - 2)).unwrap();
            assert!(is_saturated(&g, &Pattern::Clique(4)).unwrap().0);
        }
        assert!(is_saturated(&Graph::complete_bipartite(3, 3), &Pattern::Cycle(5)).unwrap().0);
        assert!(!is_saturated(&Graph::path(4), &Pattern::Clique(3)).unwrap().0);
        // complete graphs are vacuously saturated when F-free
        let (ok, cert) = is_saturated(&Graph::complete(3), &Pattern::Clique(4)).unwrap();
        assert!(ok && cert.unwrap().witnesses.is_empty());
    }

    #[test]
    fn certificate_checks() {
        let g = named_graph(NamedGraph::Petersen);
        let (ok, cert) = is_saturated(&g, &Pattern::Cycle(4)).unwrap();
        let cert = cert.unwrap();
        assert!(ok && verify_certificate(&g, &cert));
        assert_eq!(cert.witnesses.len(), 30);

        let mut corrupted = cert.clone();
        corrupted.witnesses[3].copy.swap(1, 2);
        assert!(!verify_certificate(&g, &corrupted));

        let mut missing = cert.clone();
        missing.witnesses.pop();
        assert!(!verify_certificate(&g, &missing));

        let mut dup = cert.clone();
        dup.witnesses.push(cert.witnesses[0].clone());
        assert!(!verify_certificate(&g, &dup));

        let json = cert.to_json();
        assert!(json.contains("\"target\":\"C4\""));
        let back = SaturationCertificate::from_json(&json).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn certificate_for_non_free_graph_rejected() {
        let g = Graph::complete(4);
        let cert = SaturationCertificate {
            target: Pattern::Clique(3),
            free_checked: true,
            witnesses: vec![],
        };
        assert!(!verify_certificate(&g, &cert));
    }

    #[test]
    fn explicit_pattern_witnesses() {
        let k4e = Pattern::clique_minus_edge(4).unwrap();
        let g = make(&FamilyParams::StarMatching { n: 7 }).unwrap();
        let (ok, cert) = is_saturated(&g, &k4e).unwrap();
        assert!(ok);
        assert!(verify_certificate(&g, &cert.unwrap()));
    }

    #[test]
    fn moore_classes() {
        assert_eq!(moore_check(&named_graph(NamedGraph::Petersen)), MooreClass::Moore);
        assert_eq!(moore_check(&Graph::cycle(5)), MooreClass::Moore);
        assert_eq!(moore_check(&Graph::complete_bipartite(3, 3)), MooreClass::NotApplicable);
        assert_eq!(moore_check(&named_graph(NamedGraph::HoffmanSingleton)), MooreClass::Moore);
    }

    #[test]
    fn paths_have_exact_length() {
        let g = Graph::complete(6);
        for len in 1..=5 {
            let p = find_path(&g, 0, 5, len).unwrap();
            assert_eq!(p.len(), len + 1);
        }
        assert!(find_path(&g, 0, 5, 6).is_none());
        assert!(find_path(&Graph::empty(3), 0, 1, 1).is_none());
    }
}
