// Matchings: bipartite, general, Hall and Tutte-Berge certificates, and the
// dual-graph identity for maximum degree 2.

use transversal::algebra::{family_f, special, SpecialKind};
use transversal::matching::{
    check_dual_identity, hall_violator, max_matching_bipartite, max_matching_general, tutte_berge_certificate, Side,
};
use transversal::{iso, Graph};

pub fn run_example() -> anyhow::Result<()> {
    let g = Graph::with_bipartition(5, [(0, 3), (1, 3), (2, 3), (2, 4)], vec![0, 1, 2], vec![3, 4])?;
    let m = max_matching_bipartite(&g)?;
    println!("bipartite matching size {}, Hall violator on the left: {:?}", m.size(), hall_violator(&g, Side::Left)?);

    let p = Graph::petersen();
    let tb = tutte_berge_certificate(&p)?;
    assert!(tb.agrees());
    println!("Petersen: matching {} certified by set {:?}", max_matching_general(&p).size(), tb.set);

    let h10 = special(SpecialKind::H10)?;
    let dual = h10.dual_graph()?;
    assert!(iso::graph_isomorphic(&dual, &Graph::complete(5)));
    for (name, h) in [("H10", h10), ("F_0", family_f(0)), ("F_1", family_f(1)), ("F_2", family_f(2))] {
        let d = check_dual_identity(&h)?;
        assert!(d.identity_holds);
        println!("{name}: tau={} = m - alpha' = {} - {}", d.tau, d.m, d.alpha_prime);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
