// Saturation checks with checkable certificates.

use satlab::constructions::{named_graph, NamedGraph};
use satlab::saturation::{is_saturated, verify_certificate, SaturationCertificate};
use satlab::Pattern;

pub fn run() -> satlab::Result<()> {
    let g = named_graph(NamedGraph::Petersen);
    let (ok, cert) = is_saturated(&g, &Pattern::Cycle(4))?;
    let cert = cert.expect("saturated graphs come with a certificate");
    println!("Petersen C4-saturated: {ok}, {} witnesses", cert.witnesses.len());

    let json = cert.to_json();
    let back = SaturationCertificate::from_json(&json)?;
    assert!(verify_certificate(&g, &back));

    let mut broken = back.clone();
    broken.witnesses.pop();
    assert!(!verify_certificate(&g, &broken));

    let (ok, _) = is_saturated(&g, &Pattern::Cycle(5))?;
    println!("Petersen C5-saturated: {ok}");
    Ok(())
}

fn main() {
    run().unwrap();
}
