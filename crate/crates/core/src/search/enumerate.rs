//! Isomorph-free generation by canonical vertex augmentation.
//!
//! A node with automorphism generators is extended by one new vertex for
//! each orbit of neighbor sets under its automorphism group. A child is
//! kept only when the new vertex lies in the orbit of the child's canonical
//! deletion vertex: the first vertex, in canonical order, among those with
//! the greatest `(degree, triangles, neighbor degree sum)` invariant.
//! Pruning predicates must be hereditary (closed under vertex deletion).

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::{SearchBudget, SearchStatus, Tracker};
use crate::canon::{canonical_labeling_colored, Perm};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Largest order the enumerator accepts; full enumeration is only
/// practical up to 10 vertices, pruned searches go a little further.
pub const MAX_ENUMERATION_ORDER: usize = 16;

type Keep<'a> = dyn Fn(&Graph, usize) -> bool + Sync + 'a;

pub struct Enumerator<'a> {
    n: usize,
    keep: Option<Box<Keep<'a>>>,
    budget: SearchBudget,
}

pub struct EnumOutcome<A> {
    /// One accumulator per top-level branch, in branch order.
    pub branches: Vec<A>,
    pub status: SearchStatus,
    pub nodes: u64,
    pub elapsed: f64,
}

fn invariants(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|x| {
            let nb = g.neighbors(x);
            let deg = nb.count_ones() as u64;
            let mut tri = 0u64;
            let mut sum = 0u64;
            for w in bits(nb) {
                tri += (g.neighbors(w) & nb).count_ones() as u64;
                sum += g.degree(w) as u64;
            }
            deg << 40 | (tri / 2) << 20 | sum
        })
        .collect()
}

/// Automorphism generators of `child` when it is the canonical extension
/// through vertex `v`, `None` otherwise. Generators are skipped when not
/// needed and the test is decided by invariants alone.
fn accept(child: &Graph, v: usize, need_gens: bool) -> Option<Vec<Perm>> {
    let inv = invariants(child);
    let max = *inv.iter().max().unwrap();
    if inv[v] != max {
        return None;
    }
    let ties = inv.iter().filter(|&&x| x == max).count();
    if ties == 1 && !need_gens {
        return Some(Vec::new());
    }
    let mut distinct = inv.clone();
    distinct.sort_unstable_by(|a, b| b.cmp(a));
    distinct.dedup();
    let colors: Vec<u32> = inv
        .iter()
        .map(|x| distinct.iter().position(|d| d == x).unwrap() as u32)
        .collect();
    let canon = canonical_labeling_colored(child, &colors);
    if ties > 1 {
        let c = canon.labeling.iter().position(|&p| p == 0).unwrap();
        let orbits = canon.orbits();
        if orbits[c] != orbits[v] {
            return None;
        }
    }
    Some(canon.generators)
}

/// One representative (the smallest mask) per orbit of subsets of `0..m`.
fn subset_reps(m: usize, gens: &[Perm]) -> Vec<u64> {
    let total = 1usize << m;
    if gens.is_empty() {
        return (0..total as u64).collect();
    }
    let apply = |p: &Perm, x: u64| bits(x).fold(0u64, |acc, v| acc | 1 << p[v]);
    let mut seen = vec![false; total];
    let mut reps = Vec::new();
    let mut stack = Vec::new();
    for s in 0..total {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        reps.push(s as u64);
        stack.push(s as u64);
        while let Some(x) = stack.pop() {
            for p in gens {
                let y = apply(p, x) as usize;
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y as u64);
                }
            }
        }
    }
    reps
}

impl<'a> Enumerator<'a> {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ENUMERATION_ORDER {
            return Err(Error::OutOfRange(format!(
                "enumeration order must be in 1..={MAX_ENUMERATION_ORDER} (got {n})"
            )));
        }
        Ok(Enumerator { n, keep: None, budget: SearchBudget::default() })
    }

    /// Hereditary filter, called on each child with the index of its new vertex.
    pub fn keep(mut self, f: impl Fn(&Graph, usize) -> bool + Sync + 'a) -> Self {
        self.keep = Some(Box::new(f));
        self
    }

    pub fn budget(mut self, budget: SearchBudget) -> Self {
        self.budget = budget;
        self
    }

    fn kept(&self, g: &Graph, v: usize) -> bool {
        self.keep.as_ref().map_or(true, |k| k(g, v))
    }

    /// Depth-first expansion; `visit` returns false to abort.
    fn expand(
        &self,
        g: &Graph,
        gens: &[Perm],
        depth: usize,
        tracker: &Tracker,
        cancelled: &dyn Fn() -> bool,
        visit: &mut dyn FnMut(&Graph, &[Perm]) -> bool,
    ) -> bool {
        if g.n() == depth {
            return visit(g, gens);
        }
        let m = g.n();
        for s in subset_reps(m, gens) {
            if cancelled() || !tracker.tick() {
                return false;
            }
            let child = g.with_vertex(s).expect("order checked");
            if !self.kept(&child, m) {
                continue;
            }
            let last = child.n() == self.n;
            if let Some(child_gens) = accept(&child, m, !last) {
                if !self.expand(&child, &child_gens, depth, tracker, cancelled, visit) {
                    return false;
                }
            }
        }
        true
    }

    fn root(&self) -> Option<Graph> {
        let g = Graph::empty(1);
        self.kept(&g, 0).then_some(g)
    }

    /// Visits every kept class of order `n` sequentially.
    pub fn for_each(&self, mut visit: impl FnMut(&Graph) -> bool) -> (SearchStatus, u64) {
        let tracker = Tracker::new(&self.budget);
        if let Some(root) = self.root() {
            self.expand(&root, &[], self.n, &tracker, &|| false, &mut |g, _| visit(g));
        }
        (tracker.status(), tracker.nodes())
    }

    /// Parallel run over top-level branches. Each branch folds its leaves
    /// into a fresh accumulator. When `step` returns true the branch ends
    /// and later branches are abandoned, so the earliest such branch is the
    /// same for every thread count.
    pub fn run<A: Send>(
        &self,
        init: impl Fn() -> A + Sync,
        step: impl Fn(&mut A, &Graph) -> bool + Sync,
    ) -> EnumOutcome<A> {
        let tracker = Tracker::new(&self.budget);
        let Some(root) = self.root() else {
            return EnumOutcome { branches: vec![], status: SearchStatus::Complete, nodes: 0, elapsed: 0.0 };
        };
        let split = if self.n <= 4 { self.n } else { (self.n - 3).min(6) };
        let mut frontier: Vec<(Graph, Vec<Perm>)> = Vec::new();
        self.expand(&root, &[], split, &tracker, &|| false, &mut |g, gens| {
            frontier.push((g.clone(), gens.to_vec()));
            true
        });
        let first_hit = AtomicUsize::new(usize::MAX);
        let branch = |(i, (g, gens)): (usize, &(Graph, Vec<Perm>))| {
            let mut acc = init();
            let cancelled = || first_hit.load(Ordering::Relaxed) < i;
            self.expand(g, gens, self.n, &tracker, &cancelled, &mut |leaf, _| {
                if step(&mut acc, leaf) {
                    first_hit.fetch_min(i, Ordering::Relaxed);
                    false
                } else {
                    true
                }
            });
            acc
        };
        let sequential = self.budget.deterministic && self.budget.max_nodes.is_some();
        let mut branches: Vec<A> = if sequential {
            frontier.iter().enumerate().map(branch).collect()
        } else {
            frontier.par_iter().enumerate().map(branch).collect()
        };
        let hit = first_hit.load(Ordering::Relaxed);
        if hit != usize::MAX {
            branches.truncate(hit + 1);
        }
        EnumOutcome {
            branches,
            status: tracker.status(),
            nodes: tracker.nodes(),
            elapsed: tracker.elapsed(),
        }
    }
}

/// Visits one graph per isomorphism class on `n` vertices, `1 <= n <= 10`.
pub fn enumerate_graphs(n: usize, mut visitor: impl FnMut(&Graph)) -> Result<u64> {
    if n > 10 {
        return Err(Error::OutOfRange(format!("full enumeration is limited to n <= 10 (got {n})")));
    }
    let mut count = 0u64;
    Enumerator::new(n)?.for_each(|g| {
        count += 1;
        visitor(g);
        true
    });
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use std::collections::HashSet;

    #[test]
    fn class_counts() {
        let expected = [1, 2, 4, 11, 34, 156, 1044, 12346];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(enumerate_graphs(i + 1, |_| {}).unwrap(), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn classes_are_distinct() {
        let mut seen = HashSet::new();
        enumerate_graphs(6, |g| assert!(seen.insert(canonical_form(g)))).unwrap();
        assert_eq!(seen.len(), 156);
    }

    #[test]
    fn parallel_matches_sequential() {
        let e = Enumerator::new(7).unwrap();
        let out = e.run(Vec::new, |acc, g| {
            acc.push(canonical_form(g));
            false
        });
        let par: Vec<_> = out.branches.into_iter().flatten().collect();
        let mut seq = Vec::new();
        e.for_each(|g| {
            seq.push(canonical_form(g));
            true
        });
        assert_eq!(par, seq);
    }

    #[test]
    fn pruned_triangle_free() {
        let tf = |g: &Graph, v: usize| {
            let nb = g.neighbors(v);
            bits(nb).all(|w| g.neighbors(w) & nb == 0)
        };
        // triangle-free graphs on 1..=8 vertices
        let expected = [1, 2, 3, 7, 14, 38, 107, 410];
        for (i, &want) in expected.iter().enumerate() {
            let mut count = 0;
            Enumerator::new(i + 1).unwrap().keep(tf).for_each(|_| {
                count += 1;
                true
            });
            assert_eq!(count, want);
        }
    }

    #[test]
    fn budget_stops() {
        let (status, _) = Enumerator::new(8).unwrap().budget(SearchBudget::nodes(100)).for_each(|_| true);
        assert_eq!(status, SearchStatus::BudgetExhausted);
        assert!(enumerate_graphs(11, |_| {}).is_err());
    }
}
