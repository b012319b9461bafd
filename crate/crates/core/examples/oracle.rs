// Exact generalized saturation numbers for small orders.

use satlab::search::{sat_oracle, SearchBudget};
use satlab::Pattern;

pub fn run() -> satlab::Result<()> {
    let cases = [
        (6, Pattern::Clique(2), Pattern::Clique(4)),
        (7, Pattern::Clique(3), Pattern::Clique(4)),
        (7, Pattern::Cycle(4), Pattern::Clique(4)),
        (7, Pattern::Clique(3), Pattern::Cycle(5)),
    ];
    for (n, h, f) in cases {
        let r = sat_oracle(n, &h, &f, &SearchBudget::unlimited())?;
        println!(
            "sat({n}, {h}, {f}) = {:?}  witnesses {:?}  saturated classes {}",
            r.minimum, r.witnesses, r.saturated_count
        );
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
