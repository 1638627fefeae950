// Upper bounds on τ checked over seeded random corpora, with tight cases.

use transversal::algebra::{family_f, special, SpecialKind};
use transversal::verify::{bound_check, builtin_corpus, tightness_scan, BoundId};

pub fn run_example() -> anyhow::Result<()> {
    for bound in BoundId::ALL {
        let corpus = builtin_corpus(bound, 30, 42);
        let mut tight = 0;
        for (name, h) in &corpus {
            let c = bound_check(h, bound)?;
            assert!(c.holds, "{name} violates {bound}");
            tight += usize::from(c.tight);
        }
        println!("{:<9} {} instances, {tight} tight", bound.name(), corpus.len());
    }

    let named = [
        ("H14_5", special(SpecialKind::H14_5)?),
        ("H14_6", special(SpecialKind::H14_6)?),
        ("H14_1", special(SpecialKind::H14_1)?),
        ("F_0", family_f(0)),
        ("F_1", family_f(1)),
        ("F_2", family_f(2)),
    ];
    let refs = named.iter().map(|(n, h)| (*n, h));
    println!("tight for DEG2: {:?}", tightness_scan(refs, BoundId::Deg2));
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
