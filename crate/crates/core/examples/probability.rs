// Exact and floating-point pieces of the random-subset counting argument.

use transversal::algebra::projective_plane;
use transversal::probability::{
    balanced_bound, envelope_maximum, envelope_threshold, mc_tau_profile, pr_transversal, shrink, threshold_scan, to_f64,
};

pub fn run_example() -> anyhow::Result<()> {
    let p = pr_transversal(2, &[1, 1, 2]);
    println!("pr_transversal(k=2, [1,1,2]) = {p}");
    println!("balanced bound k=3 n=13 |T|=4: {:.6}", to_f64(&balanced_bound(3, 13, 4)?));

    let scan = threshold_scan(2, 4000)?;
    println!("threshold: {:?}, later failures: {}", scan.threshold, scan.non_monotone.len());

    let e = envelope_maximum();
    println!("envelope max {:.4} at k = {:.3}, below ln 5: {}", e.max, e.argmax, e.max < 5f64.ln());
    for coef in [2.0, 1.5] {
        println!("envelope threshold for coefficient {coef}: {:?}", envelope_threshold(coef));
    }

    let host = projective_plane(3)?;
    let small = shrink(&host, 2, 11)?;
    println!("PG(2,3) shrunk to pairs: n={} m={} uniform={:?}", small.n(), small.m(), small.uniformity());

    let profile = mc_tau_profile(5, 16, 2024)?;
    println!(
        "PG(2,5) shrunk to {} points per line, {} trials: tau in {}..={}, mean {:.2}",
        profile.k, profile.trials, profile.min, profile.max, profile.mean
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
