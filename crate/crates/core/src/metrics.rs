use serde::{Deserialize, Serialize};

use crate::graph::{bits, Graph};

/// `None` stands for infinity: disconnected diameter, acyclic girth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMetrics {
    pub diameter: Option<usize>,
    pub girth: Option<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_regular: bool,
}

/// BFS distance layers from `src` as masks; `layers[d]` holds vertices at distance `d`.
pub fn bfs_layers(g: &Graph, src: usize) -> Vec<u64> {
    let mut seen = 1u64 << src;
    let mut layers = vec![seen];
    loop {
        let mut next = 0;
        for v in bits(*layers.last().unwrap()) {
            next |= g.neighbors(v);
        }
        next &= !seen;
        if next == 0 {
            return layers;
        }
        seen |= next;
        layers.push(next);
    }
}

/// Distances from `src`; unreachable vertices get `usize::MAX`.
pub fn distances_from(g: &Graph, src: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    for (d, layer) in bfs_layers(g, src).into_iter().enumerate() {
        for v in bits(layer) {
            dist[v] = d;
        }
    }
    dist
}

pub fn eccentricity(g: &Graph, v: usize) -> Option<usize> {
    let layers = bfs_layers(g, v);
    let reached: u32 = layers.iter().map(|l| l.count_ones()).sum();
    (reached as usize == g.n()).then(|| layers.len() - 1)
}

pub fn diameter(g: &Graph) -> Option<usize> {
    let mut best = 0;
    for v in 0..g.n() {
        best = best.max(eccentricity(g, v)?);
    }
    Some(best)
}

/// Shortest cycle length. A BFS from every vertex sees the shortest cycle
/// through its root either as an edge inside a layer (odd) or as a vertex
/// with two parents in the previous layer (even).
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for root in 0..g.n() {
        let layers = bfs_layers(g, root);
        for (d, &layer) in layers.iter().enumerate() {
            if best.is_some_and(|b| 2 * d >= b) {
                break;
            }
            for v in bits(layer) {
                let nb = g.neighbors(v);
                if nb & layer != 0 {
                    let c = 2 * d + 1;
                    best = Some(best.map_or(c, |b| b.min(c)));
                }
                if d > 0 && (nb & layers[d - 1]).count_ones() >= 2 {
                    let c = 2 * d;
                    best = Some(best.map_or(c, |b| b.min(c)));
                }
            }
        }
    }
    best
}

pub fn metrics(g: &Graph) -> VertexMetrics {
    let min_degree = g.min_degree();
    let max_degree = g.max_degree();
    VertexMetrics {
        diameter: diameter(g),
        girth: girth(g),
        min_degree,
        max_degree,
        is_regular: min_degree == max_degree,
    }
}
