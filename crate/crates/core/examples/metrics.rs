// Distances, girth and the Moore dichotomy for C4-saturated graphs.

use satlab::constructions::{named_graph, NamedGraph};
use satlab::metrics::{diameter, eccentricity, girth, metrics};
use satlab::saturation::moore_check;

pub fn run() -> satlab::Result<()> {
    for name in [NamedGraph::C5, NamedGraph::Petersen, NamedGraph::Coxeter, NamedGraph::HoffmanSingleton] {
        let g = named_graph(name);
        let m = metrics(&g);
        println!(
            "{name:?}: n={} girth={:?} diameter={:?} moore={:?} ecc(0)={:?} regular={}",
            g.n(),
            girth(&g),
            diameter(&g),
            moore_check(&g),
            eccentricity(&g, 0),
            m.is_regular
        );
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
