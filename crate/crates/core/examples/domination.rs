// Total domination through open neighbourhood hypergraphs.

use transversal::algebra::{g30, heawood};
use transversal::solver::gamma_t;
use transversal::verify::{graph_bound_check, GraphBoundId};

pub fn run_example() -> anyhow::Result<()> {
    let h = heawood();
    let c = h.with_detected_bipartition()?.bipartite_complement()?;
    assert!(c.is_regular(4));
    let (gt, bound, holds) = graph_bound_check(&c, GraphBoundId::Td37)?;
    assert!(holds);
    println!("Heawood bipartite complement: n={} gamma_t={gt} <= 3n/7 = {bound}", c.n());

    let g = g30();
    let onh = g.onh()?;
    println!("G30: {}-regular, girth {:?}, neighbourhood hypergraph linear: {}", g.degrees()[0], g.girth(), onh.is_linear());
    let (gt, bound, holds) = graph_bound_check(&g, GraphBoundId::Td25)?;
    assert!(holds && gt == gamma_t(&g)?);
    println!("G30: gamma_t={gt} <= 2n/5 = {bound}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
