// H-free F-saturated graphs: exhaustive when small, constructive or random beyond.

use satlab::search::{find_h_free_saturated, SearchBudget};
use satlab::Pattern;

pub fn run() -> satlab::Result<()> {
    let budget = SearchBudget { max_seconds: Some(20.0), ..Default::default() };
    for (n, h, f) in [
        (9, Pattern::Clique(3), Pattern::Cycle(4)),
        (10, Pattern::Clique(3), Pattern::Cycle(4)),
        (14, Pattern::Clique(3), Pattern::Cycle(8)),
        (12, Pattern::Clique(3), Pattern::Cycle(5)),
    ] {
        let r = find_h_free_saturated(n, &h, &f, &budget)?;
        println!("n={n} {h}-free {f}-saturated: {:?} via {:?} (proven none: {})", r.graph6, r.strategy, r.proven_none);
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
