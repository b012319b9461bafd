// Isomorph-free enumeration, with and without hereditary pruning.

use satlab::saturation::is_free;
use satlab::search::{enumerate_graphs, Enumerator, SearchBudget};
use satlab::Pattern;

pub fn run() -> satlab::Result<()> {
    for n in 1..=7 {
        println!("n={n}: {} graphs", enumerate_graphs(n, |_| {})?);
    }

    let triangle = Pattern::Clique(3);
    let mut found = 0;
    let (status, nodes) = Enumerator::new(8)?
        .keep(|g, _| is_free(g, &triangle).unwrap())
        .for_each(|_| {
            found += 1;
            true
        });
    println!("triangle-free on 8 vertices: {found} ({status:?}, {nodes} nodes)");

    let (status, _) = Enumerator::new(9)?.budget(SearchBudget::nodes(1000)).for_each(|_| true);
    println!("capped run: {status:?}");
    Ok(())
}

fn main() {
    run().unwrap();
}
