use serde::{Deserialize, Serialize};

use super::{Enumerator, SearchBudget, SearchStatus};
use crate::canon::canonical_labeling;
use crate::count::{copies, has_copy_through};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::pattern::Pattern;
use crate::saturation::check_saturated;

/// The complete graph `K_n` is vacuously saturated whenever it is `F`-free.
/// It is left out of `minimum`, `witnesses` and `saturated_count` and
/// reported through `complete_graph_saturated` instead.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleResult {
    pub n: usize,
    pub pattern_h: Pattern,
    pub pattern_f: Pattern,
    /// `None` when no non-complete saturated graph exists (or none was seen).
    pub minimum: Option<u64>,
    /// Canonical graph6 codes of the extremal classes, sorted.
    pub witnesses: Vec<String>,
    pub saturated_count: u64,
    pub complete_graph_saturated: bool,
    pub status: SearchStatus,
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_seconds: Option<f64>,
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > 10 {
        return Err(Error::OutOfRange(format!("oracle order must be in 1..=10 (got {n})")));
    }
    Ok(())
}

/// Every `F`-saturated class on `n` vertices, complete graph included,
/// canonically relabeled and sorted by graph6 code.
pub fn saturated_classes(n: usize, f: &Pattern, budget: &SearchBudget) -> Result<(Vec<Graph>, SearchStatus)> {
    check_order(n)?;
    f.validate()?;
    budget.validate()?;
    let out = Enumerator::new(n)?
        .keep(|g, v| !has_copy_through(g, v, f))
        .budget(budget.clone())
        .run(Vec::new, |acc, g| {
            if check_saturated(g, f).unwrap_or(false) {
                acc.push(canonical_labeling(g).graph);
            }
            false
        });
    let mut all: Vec<Graph> = out.branches.into_iter().flatten().collect();
    all.sort_by_cached_key(to_graph6);
    Ok((all, out.status))
}

pub fn sat_oracle(n: usize, h: &Pattern, f: &Pattern, budget: &SearchBudget) -> Result<OracleResult> {
    check_order(n)?;
    h.validate()?;
    f.validate()?;
    budget.validate()?;
    let out = Enumerator::new(n)?
        .keep(|g, v| !has_copy_through(g, v, f))
        .budget(budget.clone())
        .run(
            || (None::<u64>, Vec::<Graph>::new(), 0u64, false),
            |(min, best, count, complete), g| {
                if !check_saturated(g, f).unwrap_or(false) {
                    return false;
                }
                if g.is_complete() {
                    *complete = true;
                    return false;
                }
                *count += 1;
                let c = copies(g, h).expect("validated pattern") as u64;
                match *min {
                    Some(m) if c > m => {}
                    Some(m) if c == m => best.push(g.clone()),
                    _ => {
                        *min = Some(c);
                        best.clear();
                        best.push(g.clone());
                    }
                }
                false
            },
        );
    let mut minimum = None;
    let mut best: Vec<Graph> = Vec::new();
    let mut saturated_count = 0;
    let mut complete_graph_saturated = false;
    for (m, gs, count, complete) in out.branches {
        saturated_count += count;
        complete_graph_saturated |= complete;
        let Some(m) = m else { continue };
        if minimum.map_or(true, |cur| m < cur) {
            minimum = Some(m);
            best = gs;
        } else if minimum == Some(m) {
            best.extend(gs);
        }
    }
    let mut witnesses: Vec<String> = best.iter().map(|g| to_graph6(&canonical_labeling(g).graph)).collect();
    witnesses.sort();
    Ok(OracleResult {
        n,
        pattern_h: h.clone(),
        pattern_f: f.clone(),
        minimum,
        witnesses,
        saturated_count,
        complete_graph_saturated,
        status: out.status,
        nodes: out.nodes,
        elapsed_seconds: (!budget.deterministic).then_some(out.elapsed),
    })
}
