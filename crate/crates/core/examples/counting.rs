// Counting copies of a pattern in a host graph.

use satlab::count::{count_copies, count_embeddings, count_independent_triples};
use satlab::constructions::{named_graph, NamedGraph};
use satlab::{Graph, Pattern};

pub fn run() -> satlab::Result<()> {
    let petersen = named_graph(NamedGraph::Petersen);
    for p in ["K3", "C5", "C6", "K1,3", "Kbar3"] {
        let pattern: Pattern = p.parse()?;
        let r = count_copies(&petersen, &pattern)?;
        println!("{p:>6}: {} copies ({} embeddings / {} automorphisms)", r.copies, r.embeddings, r.automorphisms);
    }
    // injective maps only: each middle vertex, two orientations
    assert_eq!(count_embeddings(&Graph::cycle(5), &Graph::path(3)), 10);
    println!("independent triples in C6: {}", count_independent_triples(&Graph::cycle(6)));
    Ok(())
}

fn main() {
    run().unwrap();
}
