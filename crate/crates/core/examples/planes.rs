// Finite fields and the affine/projective plane families.

use transversal::algebra::{affine_plane, affine_residual, gf, projective_plane};
use transversal::solver;

pub fn run_example() -> anyhow::Result<()> {
    let f = gf(9)?;
    let (a, b) = (f.element(4), f.element(7));
    println!("GF(9): {:?} * {:?} = {:?}", a.coefficients(), b.coefficients(), (a * b).coefficients());
    let generator = (1..9).find(|&x| f.multiplicative_order(x) == Some(8)).expect("cyclic group");
    println!("GF(9) generator index: {generator}");

    for q in [2, 3, 4, 5] {
        let h = affine_plane(q)?;
        let r = solver::tau(&h);
        assert_eq!(r.tau as u64, 2 * q - 1);
        println!("AG(2,{q}): n={} m={} tau={}", h.n(), h.m(), r.tau);
    }

    let fano = projective_plane(2)?;
    assert!(fano.is_linear() && fano.is_intersecting());
    println!("PG(2,2): n={} m={} tau={}", fano.n(), fano.m(), solver::tau(&fano).tau);

    for s in 1..=4 {
        let h = affine_residual(4, s)?;
        let tau = solver::tau(&h).tau;
        assert_eq!(5 * tau, h.n() + h.m());
        println!("AG(2,4) minus s={s} points: tau={tau} n={} m={}", h.n(), h.m());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
