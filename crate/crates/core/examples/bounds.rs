// Exact evaluation of the closed-form bounds and the summary table.

use satlab::bounds::{evaluate_bound, summary_table, BoundCase, TableParams};
use satlab::Graph;

pub fn run() -> satlab::Result<()> {
    let cases = [
        BoundCase::Ehm { n: 20, s: 5 },
        BoundCase::KrKs { n: 20, r: 3, s: 5 },
        BoundCase::quad_lb(10, &Graph::cycle(4), 0, 2, 5),
        BoundCase::C4K4 { n: 30 },
        BoundCase::C6K5 { n: 30 },
    ];
    for case in &cases {
        let report = evaluate_bound(case)?;
        println!("{}", serde_json::to_string(&report).unwrap());
    }
    assert!(evaluate_bound(&BoundCase::CrKs { n: 20, r: 3, s: 5 }).is_err());

    let params = TableParams { n: 20, r: 3, s: 5, k: 6, l: 8, t: 2 };
    for row in summary_table(&params) {
        println!("{:<28} applies={:<5} {:?}", row.result, row.applies, row.value);
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
