// Searching for C4-free C7-builders and compatible pairs.

use satlab::search::{search_builder, CopyLimit, SearchBudget};
use satlab::Pattern;

pub fn run() -> satlab::Result<()> {
    let limit = CopyLimit::forbid(Pattern::Cycle(4));
    let r = search_builder(7, &limit, 9..=10, &SearchBudget::unlimited())?;
    println!("{:?}: {} builders", r.status, r.builders.len());
    for b in &r.builders {
        println!("  {} at vertex {}", b.graph6, b.distinguished);
    }
    for p in &r.pairs {
        println!("  pair {} / {} coprime={} compatible={}", p.first, p.second, p.coprime, p.compatible);
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
