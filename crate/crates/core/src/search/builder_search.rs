use std::ops::RangeInclusive;
use std::time::Instant;

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Enumerator, SearchBudget, SearchStatus, Tracker};
use crate::builders::{are_compatible, verify_builder, BuilderRecord, BuilderSpec};
use crate::canon::canonical_labeling;
use crate::count::{copies, has_copy_through};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::Pattern;
use crate::saturation::{check_saturated, creates_through};

/// At most `max_copies` copies of `pattern`; `0` forbids it outright.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopyLimit {
    pub pattern: Pattern,
    pub max_copies: u64,
}

impl CopyLimit {
    pub fn forbid(pattern: Pattern) -> Self {
        CopyLimit { pattern, max_copies: 0 }
    }

    fn allows_vertex(&self, g: &Graph, v: usize) -> bool {
        if self.max_copies == 0 {
            !has_copy_through(g, v, &self.pattern)
        } else {
            self.allows(g)
        }
    }

    fn allows(&self, g: &Graph) -> bool {
        copies(g, &self.pattern).map_or(false, |c| c <= self.max_copies as u128)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuilderPair {
    pub first: usize,
    pub second: usize,
    /// `|V(G1)| - 1` and `|V(G2)| - 1` are coprime.
    pub coprime: bool,
    pub compatible: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BuilderSearchResult {
    pub k: usize,
    pub builders: Vec<BuilderRecord>,
    pub pairs: Vec<BuilderPair>,
    pub status: SearchStatus,
}

/// Orders up to this bound are searched exhaustively; larger ones by the
/// random maximal process.
pub const EXHAUSTIVE_BUILDER_ORDER: usize = 12;

const DEFAULT_TRIALS: u64 = 500;

/// Builders on `g`, one per vertex orbit, on the canonical relabeling.
fn builders_in(g: &Graph, k: usize) -> Vec<BuilderSpec> {
    let canon = canonical_labeling(g);
    let orbits = canon.orbits();
    (0..canon.graph.n())
        .filter(|&v| orbits[v] == v)
        .filter_map(|v| verify_builder(&canon.graph, v, k).ok()?.1)
        .collect()
}

fn random_candidate(n: usize, k: usize, limit: &CopyLimit, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let cycle = Pattern::Cycle(k);
    let mut g = Graph::empty(n);
    for (u, v) in pairs {
        if creates_through(&g, u, v, &cycle).map_or(true, |w| w.is_some()) {
            continue;
        }
        g.add_edge(u, v);
        let ok = if limit.max_copies == 0 {
            creates_through_after(&g, u, v, &limit.pattern)
        } else {
            limit.allows(&g)
        };
        if !ok {
            g.remove_edge(u, v);
        }
    }
    g
}

fn creates_through_after(g: &Graph, u: usize, v: usize, p: &Pattern) -> bool {
    let mut without = g.clone();
    without.remove_edge(u, v);
    creates_through(&without, u, v, p).map_or(false, |w| w.is_none())
}

/// `C_k`-builders obeying `limit` with orders in `orders`.
pub fn search_builder(
    k: usize,
    limit: &CopyLimit,
    orders: RangeInclusive<usize>,
    budget: &SearchBudget,
) -> Result<BuilderSearchResult> {
    if k < 5 {
        return Err(Error::OutOfRange(format!("builders need k >= 5 (k={k})")));
    }
    limit.pattern.validate()?;
    budget.validate()?;
    let start = Instant::now();
    let cycle = Pattern::Cycle(k);
    let mut found: Vec<BuilderSpec> = Vec::new();
    let mut status = SearchStatus::Complete;
    for n in orders {
        let remaining = SearchBudget {
            max_seconds: budget.max_seconds.map(|s| (s - start.elapsed().as_secs_f64()).max(1e-3)),
            ..budget.clone()
        };
        if n <= EXHAUSTIVE_BUILDER_ORDER {
            let out = Enumerator::new(n)?
                .keep(|g, v| !has_copy_through(g, v, &cycle) && limit.allows_vertex(g, v))
                .budget(remaining)
                .run(Vec::new, |acc, g| {
                    if check_saturated(g, &cycle).unwrap_or(false) {
                        acc.extend(builders_in(g, k));
                    }
                    false
                });
            found.extend(out.branches.into_iter().flatten());
            if out.status == SearchStatus::BudgetExhausted {
                status = SearchStatus::BudgetExhausted;
                break;
            }
        } else {
            let capped = if remaining.max_nodes.is_none() && remaining.max_seconds.is_none() {
                SearchBudget { max_nodes: Some(DEFAULT_TRIALS), ..remaining }
            } else {
                remaining
            };
            let tracker = Tracker::new(&capped);
            let mut seed = 0u64;
            let mut hit = false;
            while tracker.tick() {
                let g = random_candidate(n, k, limit, seed);
                seed += 1;
                if check_saturated(&g, &cycle)? {
                    let bs = builders_in(&g, k);
                    if !bs.is_empty() {
                        found.extend(bs);
                        hit = true;
                        break;
                    }
                }
            }
            if !hit {
                status = SearchStatus::BudgetExhausted;
            }
        }
    }
    let mut pairs = Vec::new();
    for i in 0..found.len() {
        for j in i..found.len() {
            let (a, b) = (found[i].graph().n() - 1, found[j].graph().n() - 1);
            pairs.push(BuilderPair {
                first: i,
                second: j,
                coprime: a.gcd(&b) == 1,
                compatible: are_compatible(&found[i], &found[j])?,
            });
        }
    }
    Ok(BuilderSearchResult {
        k,
        builders: found.iter().map(BuilderSpec::record).collect(),
        pairs,
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_range() {
        #[allow(clippy::reversed_empty_ranges)]
        let r = search_builder(6, &CopyLimit::forbid(Pattern::Cycle(4)), 5..=4, &SearchBudget::unlimited()).unwrap();
        assert!(r.builders.is_empty() && r.pairs.is_empty());
        assert_eq!(r.status, SearchStatus::Complete);
    }

    #[test]
    fn rejects_small_k() {
        assert!(search_builder(4, &CopyLimit::forbid(Pattern::Clique(3)), 5..=5, &SearchBudget::unlimited()).is_err());
    }
}
