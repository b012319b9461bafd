use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Enumerator, SearchBudget, SearchStatus, Tracker};
use crate::constructions::{make, named_graph, FamilyParams, NamedGraph};
use crate::count::{copies, has_copy_through};
use crate::error::Result;
use crate::graph::{clone_vertex, Graph};
use crate::graph6::{from_graph6, to_graph6};
use crate::pattern::Pattern;
use crate::saturation::{check_saturated, creates_through};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    Exhaustive,
    Construction,
    RandomGreedy,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HFreeResult {
    pub n: usize,
    pub pattern_h: Pattern,
    pub pattern_f: Pattern,
    pub graph6: Option<String>,
    pub strategy: Option<Strategy>,
    /// Set when an exhaustive run finished without finding a graph.
    pub proven_none: bool,
    pub status: SearchStatus,
}

impl HFreeResult {
    pub fn graph(&self) -> Option<Graph> {
        self.graph6.as_deref().map(|s| from_graph6(s).expect("stored code is valid"))
    }
}

const DEFAULT_TRIALS: u64 = 2000;

fn valid(g: &Graph, h: &Pattern, f: &Pattern) -> bool {
    copies(g, h).map_or(false, |c| c == 0) && check_saturated(g, f).unwrap_or(false)
}

fn constructions(n: usize, f: &Pattern) -> Vec<Graph> {
    let mut out = Vec::new();
    match *f {
        Pattern::Cycle(l) if l % 2 == 1 => {
            if let Ok(g) = make(&FamilyParams::CompleteBipartite { a: n / 2, b: n - n / 2 }) {
                out.push(g);
            }
        }
        Pattern::Cycle(4) => {
            for name in [NamedGraph::C5, NamedGraph::Petersen, NamedGraph::HoffmanSingleton] {
                let g = named_graph(name);
                if g.n() == n {
                    out.push(g);
                }
            }
        }
        Pattern::Cycle(l) => {
            let (params, k) = if l % 4 == 0 {
                (FamilyParams::G4k { k: l / 4 }, l / 4)
            } else {
                (FamilyParams::G4k2 { k: (l - 2) / 4 }, (l - 2) / 4)
            };
            if let Ok(mut g) = make(&params) {
                // clone the first Y vertex until the order is reached
                let y = 3 + k;
                while g.n() < n {
                    match clone_vertex(&g, y) {
                        Ok(next) => g = next,
                        Err(_) => break,
                    }
                }
                if g.n() == n {
                    out.push(g);
                }
            }
        }
        _ => {}
    }
    out
}

/// One pass of the random `{F, H}`-free process: pairs in random order,
/// each added when it creates neither pattern. The result is maximal.
fn random_maximal(n: usize, h: &Pattern, f: &Pattern, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let mut g = Graph::empty(n);
    for (u, v) in pairs {
        let blocked = |p: &Pattern| creates_through(&g, u, v, p).map_or(true, |w| w.is_some());
        if !blocked(f) && !blocked(h) {
            g.add_edge(u, v);
        }
    }
    g
}

/// An `n`-vertex `F`-saturated graph with no copy of `H`. Tries exhaustive
/// enumeration for `n <= 10`, then known constructions, then the seeded
/// random process until the budget runs out.
pub fn find_h_free_saturated(n: usize, h: &Pattern, f: &Pattern, budget: &SearchBudget) -> Result<HFreeResult> {
    h.validate()?;
    f.validate()?;
    budget.validate()?;
    Graph::try_empty(n)?;
    let mut result = HFreeResult {
        n,
        pattern_h: h.clone(),
        pattern_f: f.clone(),
        graph6: None,
        strategy: None,
        proven_none: false,
        status: SearchStatus::Complete,
    };
    let found = |mut r: HFreeResult, g: &Graph, s: Strategy| {
        r.graph6 = Some(to_graph6(g));
        r.strategy = Some(s);
        r
    };

    if (1..=10).contains(&n) {
        let out = Enumerator::new(n)?
            .keep(|g, v| !has_copy_through(g, v, f) && !has_copy_through(g, v, h))
            .budget(budget.clone())
            .run(
                || None,
                |slot: &mut Option<Graph>, g| {
                    if check_saturated(g, f).unwrap_or(false) {
                        *slot = Some(g.clone());
                        return true;
                    }
                    false
                },
            );
        if let Some(g) = out.branches.into_iter().flatten().next() {
            debug_assert!(valid(&g, h, f));
            return Ok(found(result, &g, Strategy::Exhaustive));
        }
        if out.status == SearchStatus::Complete {
            result.proven_none = true;
            return Ok(result);
        }
    }

    for g in constructions(n, f) {
        if valid(&g, h, f) {
            return Ok(found(result, &g, Strategy::Construction));
        }
    }

    let capped = if budget.max_nodes.is_none() && budget.max_seconds.is_none() {
        SearchBudget { max_nodes: Some(DEFAULT_TRIALS), ..budget.clone() }
    } else {
        budget.clone()
    };
    let tracker = Tracker::new(&capped);
    let mut seed = 0u64;
    while tracker.tick() {
        let g = random_maximal(n, h, f, seed);
        if check_saturated(&g, f)? {
            return Ok(found(result, &g, Strategy::RandomGreedy));
        }
        seed += 1;
    }
    result.status = SearchStatus::BudgetExhausted;
    Ok(result)
}
