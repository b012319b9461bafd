// Reading and writing graph6 and adjacency matrices.

use satlab::constructions::{named_graph, NamedGraph};
use satlab::graph6::{from_adjacency_matrix, from_graph6, to_adjacency_matrix, to_graph6};
use satlab::Graph;

pub fn run() -> satlab::Result<()> {
    let petersen = named_graph(NamedGraph::Petersen);
    let code = to_graph6(&petersen);
    println!("petersen: {code}");
    assert_eq!(from_graph6(&code)?, petersen);

    let square = from_adjacency_matrix("0101\n1010\n0101\n1010\n")?;
    assert_eq!(square, Graph::cycle(4));
    print!("{}", to_adjacency_matrix(&square));

    // malformed input is an error, not a panic
    assert!(from_graph6("~~").is_err());
    Ok(())
}

fn main() {
    run().unwrap();
}
