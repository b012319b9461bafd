use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use satlab::bounds::{evaluate_bound, BoundCase};
use satlab::builders::{glue, size_coverage, verify_builder, BuilderRecord};
use satlab::canon::{canonical_form, is_isomorphic};
use satlab::constructions::{kaszonyi_tuza, make, named_graph, FamilyParams, NamedGraph, C6_BUILDER_VERTEX};
use satlab::count::{copies, count_embeddings, count_independent_triples, rooted_pair_count};
use satlab::graph::{identify_vertices, join};
use satlab::graph6::{from_graph6, to_graph6};
use satlab::metrics::{diameter, distances_from, girth};
use satlab::saturation::{check_saturated, creates_through, is_free, is_saturated, verify_certificate};
use satlab::search::{enumerate_graphs, sat_oracle, saturated_classes, search_builder, CopyLimit, SearchBudget};
use satlab::{Graph, Pattern};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n);
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                g.add_edge(u, v);
            }
            i += 1;
        }
    }
    g
}

fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |b| graph_from_bits(n, &b))
    })
}

// Brute force: every injective map, checked edge by edge at the leaves.
fn bf_embeddings(host: &Graph, pat: &Graph) -> u128 {
    fn go(host: &Graph, pat: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> u128 {
        if map.len() == pat.n() {
            let ok = pat.edges().all(|(a, b)| host.has_edge(map[a], map[b]));
            return ok as u128;
        }
        let mut total = 0;
        for x in 0..host.n() {
            if !used[x] {
                used[x] = true;
                map.push(x);
                total += go(host, pat, map, used);
                map.pop();
                used[x] = false;
            }
        }
        total
    }
    go(host, pat, &mut Vec::new(), &mut vec![false; host.n()])
}

fn bf_copies(host: &Graph, pat: &Graph) -> u128 {
    bf_embeddings(host, pat) / bf_embeddings(pat, pat)
}

fn bf_saturated(g: &Graph, f: &Graph) -> bool {
    bf_embeddings(g, f) == 0
        && g.nonedges().all(|(u, v)| {
            let mut h = g.clone();
            h.add_edge(u, v);
            bf_embeddings(&h, f) > 0
        })
}

fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    d
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

// Burnside over S_n acting on vertex pairs.
fn burnside_graph_count(n: usize) -> u128 {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let mut fixed = 0u128;
    for p in permutations(n) {
        let mut seen = vec![false; pairs.len()];
        let mut cycles = 0;
        for start in 0..pairs.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                let (a, b) = pairs[i];
                i = index(p[a], p[b]);
            }
        }
        fixed += 1u128 << cycles;
    }
    fixed / factorial(n as u128)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trips(g in arb_graph(0, 20)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(1, 12), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let form = canonical_form(&g);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        for _ in 0..50 {
            perm.shuffle(&mut rng);
            prop_assert_eq!(canonical_form(&g.permuted(&perm)), form.clone());
        }
    }

    #[test]
    fn isomorphism_agrees_with_all_relabelings(a in arb_graph(5, 5), b in arb_graph(5, 5)) {
        let bf = a.edge_count() == b.edge_count() && permutations(5).iter().any(|p| a.permuted(p) == b);
        prop_assert_eq!(is_isomorphic(&a, &b), bf);
    }

    #[test]
    fn join_and_identify_sizes(a in arb_graph(1, 8), b in arb_graph(1, 8), c in arb_graph(1, 8)) {
        let j = join(&a, &b).unwrap();
        prop_assert_eq!(j.n(), a.n() + b.n());
        prop_assert_eq!(j.edge_count(), a.edge_count() + b.edge_count() + a.n() * b.n());
        let glued = identify_vertices(&[(&a, a.n() - 1), (&b, 0), (&c, c.n() / 2)]).unwrap();
        prop_assert_eq!(glued.n(), a.n() + b.n() + c.n() - 2);
        prop_assert_eq!(glued.edge_count(), a.edge_count() + b.edge_count() + c.edge_count());
    }

    #[test]
    fn distances_match_floyd_warshall(g in arb_graph(1, 12)) {
        let d = floyd_warshall(&g);
        let inf = usize::MAX / 4;
        for u in 0..g.n() {
            let bfs = distances_from(&g, u);
            for v in 0..g.n() {
                if d[u][v] < inf {
                    prop_assert_eq!(bfs[v], d[u][v]);
                } else {
                    prop_assert!(bfs[v] > g.n());
                }
            }
        }
        let all: Vec<usize> = d.iter().flatten().copied().collect();
        let expect = if all.iter().any(|&x| x >= inf) { None } else { all.iter().max().copied() };
        prop_assert_eq!(diameter(&g), expect);
    }

    #[test]
    fn girth_is_shortest_cycle(g in arb_graph(3, 7)) {
        let expect = (3..=g.n()).find(|&l| bf_embeddings(&g, &Graph::cycle(l)) > 0);
        prop_assert_eq!(girth(&g), expect);
    }

    #[test]
    fn counts_match_brute_force(g in arb_graph(1, 8)) {
        for p in ["K3", "K4", "C4", "C5", "P3", "K1,3", "Kbar3", "K4-e"] {
            let pattern: Pattern = p.parse().unwrap();
            let h = pattern.graph();
            prop_assert_eq!(count_embeddings(&g, &h), bf_embeddings(&g, &h), "{}", p);
            prop_assert_eq!(copies(&g, &pattern).unwrap(), bf_copies(&g, &h), "{}", p);
        }
    }

    #[test]
    fn triangles_and_complement(g in arb_graph(3, 14)) {
        let n = g.n() as i128;
        let t = copies(&g, &Pattern::Clique(3)).unwrap() as i128;
        let tc = copies(&g.complement(), &Pattern::Clique(3)).unwrap() as i128;
        prop_assert_eq!(count_independent_triples(&g) as i128, tc);
        let s: i128 = (0..g.n()).map(|v| { let d = g.degree(v) as i128; d * (n - 1 - d) }).sum();
        prop_assert_eq!(t + tc, n * (n - 1) * (n - 2) / 6 - s / 2);
    }

    #[test]
    fn saturation_matches_brute_force(g in arb_graph(2, 7)) {
        for p in ["K3", "K4", "C4", "C5", "K4-e"] {
            let pattern: Pattern = p.parse().unwrap();
            prop_assert_eq!(check_saturated(&g, &pattern).unwrap(), bf_saturated(&g, &pattern.graph()), "{}", p);
        }
    }

    #[test]
    fn rooted_pair_matches_brute_force(h in arb_graph(2, 6), s in 6usize..=8) {
        if let Some((h1, h2)) = h.nonedges().next() {
            let stab = permutations(h.n())
                .iter()
                .filter(|p| p[h1] == h1 && p[h2] == h2 && h.permuted(p) == h)
                .count() as u128;
            let rooted: u128 = (0..h.n() - 2).map(|i| (s - 2 - i) as u128).product();
            prop_assert_eq!(rooted_pair_count(&h, h1, h2, s).unwrap(), rooted / stab);
        }
    }
}

#[test]
fn path_in_five_cycle_has_ten_embeddings() {
    assert_eq!(bf_embeddings(&Graph::cycle(5), &Graph::path(3)), 10);
    assert_eq!(count_embeddings(&Graph::cycle(5), &Graph::path(3)), 10);
}

#[test]
fn clique_and_cycle_counts_in_complete_graphs() {
    for n in 1..=10u128 {
        let kn = Graph::complete(n as usize);
        for r in 1..=n {
            assert_eq!(copies(&kn, &Pattern::Clique(r as usize)).unwrap(), binom(n, r));
        }
        for l in 3..=n.min(8) {
            let want = binom(n, l) * factorial(l - 1) / 2;
            assert_eq!(copies(&kn, &Pattern::Cycle(l as usize)).unwrap(), want, "n={n} l={l}");
        }
    }
}

#[test]
fn enumeration_matches_burnside() {
    for n in 1..=7 {
        assert_eq!(enumerate_graphs(n, |_| {}).unwrap() as u128, burnside_graph_count(n), "n={n}");
    }
}

#[test]
fn certificates_verify_and_corruption_fails() {
    let g = named_graph(NamedGraph::Petersen);
    let (ok, cert) = is_saturated(&g, &Pattern::Cycle(4)).unwrap();
    assert!(ok);
    let cert = cert.unwrap();
    assert_eq!(cert.witnesses.len(), g.nonedge_count());
    assert!(verify_certificate(&g, &cert));

    let mut dropped = cert.clone();
    dropped.witnesses.remove(7);
    assert!(!verify_certificate(&g, &dropped));

    let mut bent = cert.clone();
    bent.witnesses[3].copy.swap(1, 2);
    assert!(!verify_certificate(&g, &bent));

    let mut other = g.clone();
    let (u, v) = g.nonedges().next().unwrap();
    other.add_edge(u, v);
    assert!(!verify_certificate(&other, &cert));
}

#[test]
fn saturated_graphs_have_small_diameter() {
    for n in 4..=8 {
        for s in 3..=5 {
            for g in saturated_classes(n, &Pattern::Clique(s), &SearchBudget::unlimited()).unwrap().0 {
                assert!(diameter(&g).unwrap() <= 2, "{g}");
            }
        }
        for l in 4..=6 {
            for g in saturated_classes(n, &Pattern::Cycle(l), &SearchBudget::unlimited()).unwrap().0 {
                assert!(diameter(&g).unwrap() < l, "{g} C{l}");
            }
        }
    }
}

#[test]
fn clique_joins_are_saturated() {
    for s in 3..=5 {
        for n in 5.max(s)..=14 {
            let g = make(&FamilyParams::EhmJoin { n, s }).unwrap();
            assert!(check_saturated(&g, &Pattern::Clique(s)).unwrap(), "n={n} s={s}");
            assert_eq!(g.edge_count(), (s - 2) * (n - s + 2) + (s - 2) * (s - 3) / 2);
        }
    }
}

#[test]
fn min_degree_families_are_saturated() {
    for s in 4..=6 {
        for n in s + 1..=12 {
            let g = make(&FamilyParams::BookJoin { n, s }).unwrap();
            assert!(check_saturated(&g, &Pattern::Clique(s)).unwrap(), "book n={n} s={s}");
            assert_eq!(g.min_degree(), s - 1);
        }
        for m1 in 1..=3 {
            for m3 in 1..=3 {
                for m4 in 1..=3 {
                    let g = make(&FamilyParams::Ws { s, m1, m3, m4 }).unwrap();
                    assert!(check_saturated(&g, &Pattern::Clique(s)).unwrap(), "W s={s} {m1} {m3} {m4}");
                    assert_eq!(g.min_degree(), s - 1);
                }
            }
        }
    }
}

#[test]
fn two_block_families_are_triangle_free_and_saturated() {
    for (params, l) in [(FamilyParams::G4k { k: 2 }, 8), (FamilyParams::G4k { k: 3 }, 12), (FamilyParams::G4k2 { k: 2 }, 10)] {
        let g = make(&params).unwrap();
        assert!(is_free(&g, &Pattern::Clique(3)).unwrap());
        assert!(check_saturated(&g, &Pattern::Cycle(l)).unwrap(), "{params:?}");
    }
}

#[test]
fn smallest_odd_block_graph_misses_two_nonedges() {
    let g = make(&FamilyParams::G4k2 { k: 1 }).unwrap();
    assert!(is_free(&g, &Pattern::Clique(3)).unwrap());
    assert!(is_free(&g, &Pattern::Cycle(6)).unwrap());
    let failing: Vec<_> = g
        .nonedges()
        .filter(|&(u, v)| creates_through(&g, u, v, &Pattern::Cycle(6)).unwrap().is_none())
        .collect();
    assert_eq!(failing, vec![(0, 4), (2, 3)]);
    for (u, v) in failing {
        let mut h = g.clone();
        h.add_edge(u, v);
        assert_eq!(bf_embeddings(&h, &Graph::cycle(6)), 0);
    }
}

#[test]
fn complete_bipartite_blocks_odd_cycles() {
    for k in 1..=3 {
        for a in k + 1..=k + 3 {
            for b in a..=k + 3 {
                let g = make(&FamilyParams::CompleteBipartite { a, b }).unwrap();
                assert!(check_saturated(&g, &Pattern::Cycle(2 * k + 1)).unwrap(), "K{a},{b} C{}", 2 * k + 1);
                for odd in (3..=g.n()).step_by(2) {
                    assert!(is_free(&g, &Pattern::Cycle(odd)).unwrap());
                }
            }
        }
    }
}

#[test]
fn two_apex_clique_is_even_cycle_saturated() {
    for k in [3, 4] {
        for n in 2 * k..=14 {
            let g = make(&FamilyParams::TwoApexClique { n, k }).unwrap();
            assert!(check_saturated(&g, &Pattern::Cycle(2 * k)).unwrap(), "n={n} k={k}");
        }
    }
}

#[test]
fn friendship_like_edges_close_every_long_cycle() {
    for r in 3..=5 {
        for m in 1..=4 {
            let g = make(&FamilyParams::FriendshipLike { m, r }).unwrap();
            assert_eq!(g.n(), m * (r - 1) + 1);
            for t in r + 1..=g.n() {
                assert!(is_free(&g, &Pattern::Cycle(t)).unwrap());
            }
            for k in r + 1..=2 * r - 1 {
                for (u, v) in g.nonedges() {
                    assert!(creates_through(&g, u, v, &Pattern::Cycle(k)).unwrap().is_some(), "r={r} m={m} k={k}");
                }
            }
        }
    }
}

#[test]
fn apex_clique_fan_has_no_long_cycles() {
    for k in 4..=7 {
        for n in k..=14 {
            let g = make(&FamilyParams::ApexCliqueFan { n, k }).unwrap();
            assert!(check_saturated(&g, &Pattern::Cycle(k)).unwrap(), "n={n} k={k}");
            for t in k..=n {
                assert!(is_free(&g, &Pattern::Cycle(t)).unwrap());
            }
        }
    }
}

#[test]
fn star_with_matching() {
    for n in 4..=13 {
        let g = make(&FamilyParams::StarMatching { n }).unwrap();
        assert!(check_saturated(&g, &Pattern::clique_minus_edge(4).unwrap()).unwrap());
        assert!(is_free(&g, &Pattern::Cycle(4)).unwrap());
        assert_eq!(copies(&g, &Pattern::Clique(3)).unwrap() as usize, (n - 1) / 2);
    }
}

#[test]
fn greedy_construction_is_saturated() {
    for f in ["K3", "K4", "C4", "C5", "K1,3", "K4-e"] {
        let pattern: Pattern = f.parse().unwrap();
        for n in pattern.order()..=12 {
            let g = kaszonyi_tuza(n, &pattern).unwrap();
            assert!(check_saturated(&g, &pattern).unwrap(), "{f} n={n}");
            for r in 2..=4 {
                let bound = evaluate_bound(&BoundCase::KtCount { n: n as i64, r: r as i64, f: pattern.clone() })
                    .unwrap()
                    .upper
                    .unwrap()
                    .value;
                let realized = copies(&g, &Pattern::Clique(r)).unwrap();
                assert!(bound >= num_rational::BigRational::from_integer(realized.into()), "{f} n={n} r={r}");
            }
        }
    }
}

#[test]
fn c6_builder_only_at_its_vertex() {
    let g = named_graph(NamedGraph::C6Builder11);
    for v in 0..g.n() {
        assert_eq!(verify_builder(&g, v, 6).unwrap().0, v == C6_BUILDER_VERTEX, "v={v}");
    }
}

#[test]
fn glued_c7_builders_stay_c4_free() {
    let limit = CopyLimit::forbid(Pattern::Cycle(4));
    let found = search_builder(7, &limit, 10..=10, &SearchBudget::unlimited()).unwrap();
    assert!(!found.builders.is_empty());
    let specs: Vec<_> = found.builders.iter().map(|b| b.to_spec().unwrap().unwrap()).collect();
    for b1 in &specs {
        for b2 in &specs {
            let g = glue(b1, 2, Some(b2), 1).unwrap();
            assert_eq!(g.n(), 1 + 3 * (b1.graph().n() - 1));
            assert!(is_free(&g, &Pattern::Cycle(4)).unwrap());
            assert!(check_saturated(&g, &Pattern::Cycle(7)).unwrap());
        }
    }
}

#[test]
fn c6_builder_search_rederives_builders() {
    let limit = CopyLimit { pattern: Pattern::Cycle(4), max_copies: 2 };
    let found = search_builder(6, &limit, 11..=11, &SearchBudget::unlimited()).unwrap();
    assert!(!found.builders.is_empty());
    for BuilderRecord { graph6, distinguished, .. } in &found.builders {
        let g = from_graph6(graph6).unwrap();
        assert!(copies(&g, &Pattern::Cycle(4)).unwrap() <= 2);
        assert!(verify_builder(&g, *distinguished, 6).unwrap().0);
    }
}

#[test]
fn coverage_matches_brute_force() {
    for a in 2..=8 {
        for b in a + 1..=9 {
            let limit = 10 * a * b;
            let c = size_coverage(a, b, limit).unwrap();
            let reach = |n: usize| (0..=n / a).any(|m1| (n - 1) >= a * m1 && (n - 1 - a * m1) % b == 0);
            let bf: Vec<usize> = (1..=limit).filter(|&n| n >= 1 && reach(n)).collect();
            assert_eq!(c.representable, bf, "a={a} b={b}");
            if num_integer::gcd(a, b) == 1 {
                let t = (1..=limit).rev().find(|&n| !reach(n)).map_or(1, |n| n + 1);
                assert_eq!(c.threshold, Some(t), "a={a} b={b}");
            } else {
                assert_eq!(c.threshold, None);
            }
        }
    }
}

#[test]
fn bounds_sandwich_oracle_values() {
    let unlimited = SearchBudget::unlimited();
    let rat = |x: u64| num_rational::BigRational::from_integer(x.into());
    for n in 4..=8i64 {
        for s in 3..=5 {
            if n < s {
                continue;
            }
            let oracle = sat_oracle(n as usize, &Pattern::Clique(2), &Pattern::Clique(s as usize), &unlimited).unwrap();
            let bound = evaluate_bound(&BoundCase::Ehm { n, s }).unwrap();
            assert_eq!(bound.upper.unwrap().value, rat(oracle.minimum.unwrap()), "n={n} s={s}");
        }

        let oracle = sat_oracle(n as usize, &Pattern::Cycle(4), &Pattern::Clique(4), &unlimited).unwrap();
        let got = rat(oracle.minimum.unwrap());
        let report = evaluate_bound(&BoundCase::C4K4 { n }).unwrap();
        assert!(report.lower.unwrap().value <= got && got <= report.upper.unwrap().value, "C4K4 n={n}");

        let quad = evaluate_bound(&BoundCase::quad_lb(n, &Graph::cycle(4), 0, 2, 4)).unwrap();
        assert!(quad.lower.unwrap().value <= got, "quad n={n}");

        for s in 4..=5 {
            if n < s {
                continue;
            }
            let oracle = sat_oracle(n as usize, &Pattern::Clique(3), &Pattern::Clique(s as usize), &unlimited).unwrap();
            let upper = evaluate_bound(&BoundCase::KrKs { n, r: 3, s }).unwrap().upper.unwrap().value;
            assert!(rat(oracle.minimum.unwrap()) <= upper, "KrKs n={n} s={s}");
        }
    }
}
