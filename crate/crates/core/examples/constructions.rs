// The parametrized graph families.

use satlab::constructions::{make, FamilyParams};
use satlab::count::copies;
use satlab::saturation::{check_saturated, is_free};
use satlab::Pattern;

pub fn run() -> satlab::Result<()> {
    let families = [
        (FamilyParams::EhmJoin { n: 9, s: 5 }, Pattern::Clique(5)),
        (FamilyParams::BookJoin { n: 9, s: 5 }, Pattern::Clique(5)),
        (FamilyParams::Ws { s: 5, m1: 2, m3: 2, m4: 1 }, Pattern::Clique(5)),
        (FamilyParams::G4k { k: 2 }, Pattern::Cycle(8)),
        (FamilyParams::G4k2 { k: 2 }, Pattern::Cycle(10)),
        (FamilyParams::CompleteBipartite { a: 4, b: 4 }, Pattern::Cycle(5)),
        (FamilyParams::FriendshipLike { m: 3, r: 4 }, Pattern::Cycle(6)),
        (FamilyParams::ApexCliqueFan { n: 9, k: 6 }, Pattern::Cycle(6)),
        (FamilyParams::TwoApexClique { n: 10, k: 3 }, Pattern::Cycle(6)),
        (FamilyParams::StarMatching { n: 9 }, Pattern::clique_minus_edge(4)?),
        (FamilyParams::KaszonyiTuza { n: 10, f: Pattern::Cycle(5) }, Pattern::Cycle(5)),
    ];
    for (params, f) in families {
        let g = make(&params)?;
        println!(
            "{:<60} n={:>2} e={:>2} {f}-free={} {f}-saturated={} triangles={}",
            format!("{params:?}"),
            g.n(),
            g.edge_count(),
            is_free(&g, &f)?,
            check_saturated(&g, &f)?,
            copies(&g, &Pattern::Clique(3))?,
        );
    }
    println!("{}", FamilyParams::G4k { k: 2 }.legend());
    assert!(make(&FamilyParams::G4k { k: 1 }).is_err());
    Ok(())
}

fn main() {
    run().unwrap();
}
