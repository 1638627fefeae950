// Special sets, deficiency and the weighted transversal inequality.

use transversal::algebra::{random_linear, special, SpecialKind};
use transversal::deficiency::{check_defic_bound, check_estar_bound, deficiency, deficiency_visit, find_embeddings};
use transversal::Hypergraph;

pub fn run_example() -> anyhow::Result<()> {
    // Two disjoint copies of H10 plus a 4-edge tying them together.
    let h10 = special(SpecialKind::H10)?;
    let two = h10.disjoint_union(&h10);
    let mut edges = two.edges().to_vec();
    edges.push(vec![0, 10, 20, 21]);
    let host = Hypergraph::new(22, edges)?;
    let copies = find_embeddings(&host, SpecialKind::H10)?;
    println!("H10 copies in host: {}", copies.len());
    let d = deficiency(&host)?;
    println!("defic={} counts={:?} E*={:?}", d.value, d.counts, d.estar);

    let mut visited = 0;
    let mut bound_ok = true;
    deficiency_visit(&host, 30, &mut |x| {
        visited += 1;
        bound_ok &= check_estar_bound(&host, x);
    })?;
    assert!(bound_ok);
    println!("special sets visited: {visited}");

    let mut checked = 0;
    for seed in 0..20 {
        let h = random_linear(16, 4, 3, 10, seed)?;
        let k = check_defic_bound(&h)?;
        assert!(k.holds, "seed {seed}: {k:?}");
        checked += 1;
    }
    println!("45 tau <= 6n + 13m + defic on {checked} random hosts");
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
