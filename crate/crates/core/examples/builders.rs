// Verifying a C6-builder and gluing copies of it at the distinguished vertex.

use satlab::builders::{glue, path_length_profile, verify_builder};
use satlab::constructions::{named_graph, NamedGraph, C6_BUILDER_VERTEX};
use satlab::count::copies;
use satlab::saturation::check_saturated;
use satlab::Pattern;

pub fn run() -> satlab::Result<()> {
    let g = named_graph(NamedGraph::C6Builder11);
    let (ok, spec) = verify_builder(&g, C6_BUILDER_VERTEX, 6)?;
    println!("builder at vertex {C6_BUILDER_VERTEX}: {ok}");
    let b = spec.expect("verified");

    let profile = path_length_profile(&b);
    for u in 0..g.n() {
        println!("  paths {u} -> {}: lengths {:?}", profile.distinguished, profile.lengths_of(u));
    }

    for t in 1..=3 {
        let glued = glue(&b, t, None, 0)?;
        println!(
            "t={t}: n={} C4 copies={} C6-saturated={}",
            glued.n(),
            copies(&glued, &Pattern::Cycle(4))?,
            check_saturated(&glued, &Pattern::Cycle(6))?
        );
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
