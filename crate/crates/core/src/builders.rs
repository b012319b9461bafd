//! `C_k`-builders: `C_k`-saturated graphs with a vertex at which two copies
//! can be identified without losing saturation.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, identify_vertices, Graph};
use crate::graph6::{from_graph6, to_graph6};
use crate::pattern::Pattern;
use crate::saturation::check_saturated;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuilderSpec {
    graph: Graph,
    distinguished: usize,
    k: usize,
}

impl BuilderSpec {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn distinguished(&self) -> usize {
        self.distinguished
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn record(&self) -> BuilderRecord {
        BuilderRecord {
            graph6: to_graph6(&self.graph),
            distinguished: self.distinguished,
            k: self.k,
            verified: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuilderRecord {
    pub graph6: String,
    pub distinguished: usize,
    pub k: usize,
    pub verified: bool,
}

impl BuilderRecord {
    /// Re-verifies the record rather than trusting its `verified` flag.
    pub fn to_spec(&self) -> Result<Option<BuilderSpec>> {
        let g = from_graph6(&self.graph6)?;
        Ok(verify_builder(&g, self.distinguished, self.k)?.1)
    }
}

pub fn verify_builder(g: &Graph, v: usize, k: usize) -> Result<(bool, Option<BuilderSpec>)> {
    g.check_vertex(v)?;
    if k < 5 {
        return Err(Error::OutOfRange(format!("builders need k >= 5 (k={k})")));
    }
    let f = Pattern::Cycle(k);
    if !check_saturated(g, &f)? {
        return Ok((false, None));
    }
    let doubled = identify_vertices(&[(g, v), (g, v)])?;
    if !check_saturated(&doubled, &f)? {
        return Ok((false, None));
    }
    let spec = BuilderSpec { graph: g.clone(), distinguished: v, k };
    Ok((true, Some(spec)))
}

/// `lengths[u]` has bit `l` set when a simple `u`-to-distinguished path
/// with `l` edges exists. The distinguished vertex itself gets `{0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathLengthProfile {
    pub distinguished: usize,
    pub lengths: Vec<u64>,
}

impl PathLengthProfile {
    pub fn lengths_of(&self, u: usize) -> Vec<usize> {
        bits(self.lengths[u]).collect()
    }
}

pub fn path_length_profile(b: &BuilderSpec) -> PathLengthProfile {
    path_lengths_to(&b.graph, b.distinguished)
}

/// Exhaustive DFS over all simple paths starting at `v`.
pub fn path_lengths_to(g: &Graph, v: usize) -> PathLengthProfile {
    fn walk(g: &Graph, cur: usize, visited: u64, depth: usize, lengths: &mut [u64]) {
        lengths[cur] |= 1 << depth;
        for w in bits(g.neighbors(cur) & !visited) {
            walk(g, w, visited | 1 << w, depth + 1, lengths);
        }
    }
    let mut lengths = vec![0u64; g.n()];
    walk(g, v, 1 << v, 0, &mut lengths);
    PathLengthProfile { distinguished: v, lengths }
}

pub fn are_compatible(b1: &BuilderSpec, b2: &BuilderSpec) -> Result<bool> {
    if b1.k != b2.k {
        return Err(Error::Incompatible(format!("builders for C{} and C{}", b1.k, b2.k)));
    }
    let target = b1.k - 1;
    let p1 = path_length_profile(b1);
    let p2 = path_length_profile(b2);
    // complements[l] = lengths l' with l + l' = k - 1
    let complement = |mask: u64| -> u64 {
        bits(mask).filter(|&l| l <= target).fold(0, |m, l| m | 1 << (target - l))
    };
    for u in (0..b1.graph.n()).filter(|&u| u != b1.distinguished) {
        let need = complement(p1.lengths[u]);
        for w in (0..b2.graph.n()).filter(|&w| w != b2.distinguished) {
            if p2.lengths[w] & need == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `m1` copies of `b1` and `m2` copies of `b2` identified at their
/// distinguished vertices (merged vertex 0, see [`identify_vertices`]).
/// The result is re-checked for `C_k`-saturation.
pub fn glue(b1: &BuilderSpec, m1: usize, b2: Option<&BuilderSpec>, m2: usize) -> Result<Graph> {
    if m1 + m2 == 0 {
        return Err(Error::OutOfRange("glue needs at least one copy".into()));
    }
    if m2 > 0 {
        let b2 = b2.ok_or_else(|| Error::OutOfRange("m2 > 0 without a second builder".into()))?;
        if m1 > 0 && !are_compatible(b1, b2)? {
            return Err(Error::Incompatible("builders fail the path-length condition".into()));
        }
    }
    let mut parts: Vec<(&Graph, usize)> = vec![(&b1.graph, b1.distinguished); m1];
    if let Some(b2) = b2 {
        parts.extend(std::iter::repeat((&b2.graph, b2.distinguished)).take(m2));
    }
    let g = identify_vertices(&parts)?;
    let k = if m1 > 0 { b1.k } else { b2.map_or(b1.k, |b| b.k) };
    if !check_saturated(&g, &Pattern::Cycle(k))? {
        return Err(Error::Verification(format!("glued graph is not C{k}-saturated")));
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coverage {
    /// Least `n0` with every `n >= n0` of the form `1 + m1 a + m2 b`.
    pub threshold: Option<usize>,
    pub representable: Vec<usize>,
}

pub fn size_coverage(a: usize, b: usize, limit: usize) -> Result<Coverage> {
    if a == 0 || b == 0 {
        return Err(Error::OutOfRange("size_coverage needs a, b >= 1".into()));
    }
    let small = a.min(b);
    // gaps end below a*b, so a run of `small` hits appears by a*b + small
    let scan = limit.max(a * b + small + 1);
    let mut hit = vec![false; scan + 1];
    hit[0] = true;
    for m in 1..=scan {
        hit[m] = (m >= a && hit[m - a]) || (m >= b && hit[m - b]);
    }
    let threshold = if a.gcd(&b) == 1 {
        let mut run = 0;
        let mut start = None;
        for (m, &h) in hit.iter().enumerate() {
            if h {
                run += 1;
                if run == small {
                    start = Some(m + 1 - small);
                    break;
                }
            } else {
                run = 0;
            }
        }
        start.map(|m| m + 1)
    } else {
        None
    };
    let representable = (1..=limit).filter(|&n| hit[n - 1]).collect();
    Ok(Coverage { threshold, representable })
}
