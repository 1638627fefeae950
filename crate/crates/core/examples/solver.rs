// Exact transversal numbers: branch and bound against the subset scan.

use transversal::algebra::{affine_residual, fano_complement, l_k, random_linear};
use transversal::solver;

pub fn run_example() -> anyhow::Result<()> {
    let h = random_linear(14, 4, 3, 10, 7)?;
    let fast = solver::tau(&h);
    let slow = solver::tau_bruteforce(&h)?;
    assert_eq!(fast.tau, slow.tau);
    assert!(h.is_transversal(&fast.witness));
    println!(
        "random host: tau={} via {:?} ({} nodes), subset scan agrees",
        fast.tau, fast.method, fast.nodes_explored
    );

    // Non-linear hosts can exceed (n + m)/5.
    let c = fano_complement();
    let tau = solver::tau(&c).tau;
    assert_eq!(tau, 3);
    println!("Fano complement: tau={tau}, (n+m)/5={}", (c.n() + c.m()) as f64 / 5.0);

    let f7 = affine_residual(3, 2)?;
    let all = solver::enumerate_min_transversals(&f7)?;
    println!("AG(2,3) minus 2 points: tau={}, {} minimum transversals", all[0].len(), all.len());

    let l4 = l_k(4)?;
    let contains_zero = solver::exists_min_transversal(&l4, |t| t.contains(&0))?;
    println!("L_4: tau={}, some minimum transversal uses vertex 1: {contains_zero}", solver::tau(&l4).tau);
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
