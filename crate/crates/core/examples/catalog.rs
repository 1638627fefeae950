// The special hypergraph catalog and its property suite.

use transversal::algebra::{special, SpecialKind};
use transversal::deficiency::deficiency;
use transversal::solver;
use transversal::verify::catalog_property_suite;

pub fn run_example() -> anyhow::Result<()> {
    for kind in SpecialKind::shipped() {
        let h = special(kind)?;
        let tau = solver::tau(&h).tau;
        let defic = deficiency(&h)?.value;
        let identity = 45 * tau as i64 - 6 * h.n() as i64 - 13 * h.m() as i64;
        assert_eq!(defic, identity);
        assert_eq!(defic, kind.class().weight());
        let report = catalog_property_suite(kind)?;
        let failed: Vec<String> =
            report.failures().map(|c| format!("({}) {}", c.id, c.witness.clone().unwrap_or_default())).collect();
        println!("{:<6} n={:<2} m={:<2} tau={} defic={:<2} failures: {:?}", kind.name(), h.n(), h.m(), tau, defic, failed);
    }
    let missing: Vec<&str> = SpecialKind::ALL.iter().filter(|k| !k.is_shipped()).map(|k| k.name()).collect();
    println!("not shipped: {missing:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
