// Relabeling-invariant canonical forms.

use satlab::canon::{canonical_form, canonical_labeling, is_isomorphic};
use satlab::count::automorphism_count;
use satlab::graph6::to_graph6;
use satlab::Graph;

pub fn run() -> satlab::Result<()> {
    let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)])?;
    let h = g.permuted(&[5, 3, 1, 0, 2, 4]);
    assert_eq!(canonical_form(&g), canonical_form(&h));
    assert!(is_isomorphic(&g, &h));

    let c = canonical_labeling(&g);
    println!("canonical graph6: {}", to_graph6(&c.graph));
    println!("|Aut(C6)| = {}", automorphism_count(&Graph::cycle(6)));
    assert!(!is_isomorphic(&Graph::cycle(6), &Graph::complete_bipartite(3, 3)));
    Ok(())
}

fn main() {
    run().unwrap();
}
