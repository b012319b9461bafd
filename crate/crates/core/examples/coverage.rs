// Orders reachable as 1 + a*m1 + b*m2.

use satlab::builders::size_coverage;

pub fn run() -> satlab::Result<()> {
    let c = size_coverage(11, 12, 130)?;
    println!("threshold: {:?}", c.threshold);
    println!("reachable up to 130: {:?}", c.representable);
    assert!(size_coverage(4, 6, 100)?.threshold.is_none());
    Ok(())
}

fn main() {
    run().unwrap();
}
