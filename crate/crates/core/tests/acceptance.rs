use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use transversal::algebra::{
    affine_plane, affine_residual, fano_complement, family_f, g30, heawood, projective_plane, random_linear, special,
    SpecialClass, SpecialKind,
};
use transversal::deficiency::{check_defic_bound, check_estar_bound, deficiency, deficiency_visit};
use transversal::iso::{graph_isomorphic, hypergraph_isomorphic};
use transversal::matching::check_dual_identity;
use transversal::probability::{
    balanced_split, envelope_maximum, envelope_threshold, pr_transversal, shrink, threshold_scan, to_f64, trial_seed,
};
use transversal::solver::{gamma_t, tau};
use transversal::verify::{bound_check, builtin_corpus, catalog_property_suite, BoundId};
use transversal::{Graph, Hypergraph};

/// Criteria expected to print FAIL; see the README.
const KNOWN_FAILURES: [u32; 1] = [4];

type Outcome = (bool, String);

fn criterion(id: u32, budget: Duration, check: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let (ok, detail) = check();
    let elapsed = start.elapsed();
    let pass = ok && elapsed <= budget;
    report(&format!(
        "criterion {id:>2}: {} ({:.2}s of {}s) {detail}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs()
    ));
    pass
}

/// Straight to stderr, so the lines show up without `--nocapture`.
fn report(line: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stderr(), "{line}");
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn c1_small_residuals() -> Outcome {
    let f7 = affine_residual(3, 2).unwrap();
    let f8 = affine_residual(3, 1).unwrap();
    let f9 = affine_plane(3).unwrap();
    let got: Vec<(usize, usize)> = [f7, f8, f9].iter().map(|h| (h.n(), tau(h).tau)).collect();
    (got == [(7, 3), (8, 4), (9, 5)], format!("(n, tau) = {got:?}"))
}

fn c2_affine_planes() -> Outcome {
    let taus: Vec<usize> = (2..=5).map(|q| tau(&affine_plane(q).unwrap()).tau).collect();
    (taus == [3, 5, 7, 9], format!("tau(AG(2,q)) for q=2..5: {taus:?}"))
}

fn c3_residual_table() -> Outcome {
    let rows: Vec<(usize, usize, usize)> = (1..=4)
        .map(|s| {
            let h = affine_residual(4, s).unwrap();
            (tau(&h).tau, h.n(), h.m())
        })
        .collect();
    let exact = rows.iter().all(|&(t, n, m)| 5 * t == n + m);
    (exact && rows == [(6, 15, 15), (5, 14, 11), (4, 13, 7), (3, 12, 3)], format!("(tau, n, m) = {rows:?}"))
}

fn c4_catalog() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for kind in SpecialKind::shipped() {
        let h = special(kind).unwrap();
        let t = tau(&h).tau as i64;
        let defic = deficiency(&h).unwrap().value;
        let expected = match kind.class() {
            SpecialClass::X4 => 8,
            SpecialClass::X10 => 10,
            SpecialClass::X11 => 4,
            SpecialClass::X14 => 5,
            SpecialClass::X21 => 1,
        };
        if defic != expected || defic != 45 * t - 6 * h.n() as i64 - 13 * h.m() as i64 {
            ok = false;
            notes.push(format!("{kind}: defic {defic}"));
        }
        let report = catalog_property_suite(kind).unwrap();
        for c in report.failures() {
            ok = false;
            notes.push(format!("{kind} ({}): {}", c.id, c.witness.clone().unwrap_or_default()));
        }
    }
    let detail = if notes.is_empty() { "all shipped entries pass".to_string() } else { notes.join("; ") };
    (ok, detail)
}

fn c5_fano_complement() -> Outcome {
    let h = fano_complement();
    let t = tau(&h).tau;
    (!h.is_linear() && t == 3 && 5 * t > h.n() + h.m(), format!("tau = {t}, (n+m)/5 = {}", (h.n() + h.m()) as f64 / 5.0))
}

/// Seeded 4-uniform linear hosts with `n <= 18` and the given degree cap.
fn random_hosts(count: usize, max_deg_cap: usize, seed: u64) -> Vec<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut i = 0;
    while out.len() < count {
        i += 1;
        let n = rng.gen_range(8..=18);
        let d = rng.gen_range(1..=max_deg_cap);
        let m = rng.gen_range(1..=(d * n / 4).max(1));
        if let Ok(h) = random_linear(n, 4, d, m, trial_seed(seed, i)) {
            out.push(h);
        }
    }
    out
}

fn c6_defic_bound() -> Outcome {
    let hosts = random_hosts(200, 3, 6);
    let bad: Vec<usize> = (0..hosts.len()).filter(|&i| !check_defic_bound(&hosts[i]).unwrap().holds).collect();
    let special_hosts = hosts.iter().filter(|h| deficiency(h).unwrap().value > 0).count();
    (bad.is_empty(), format!("{} hosts ({special_hosts} with positive defic), violations {bad:?}", hosts.len()))
}

fn c7_fifth_bound() -> Outcome {
    let corpus = builtin_corpus(BoundId::Main5, 500, 7);
    let n_max = corpus.iter().map(|(_, h)| h.n()).max().unwrap_or(0);
    let d_max = corpus.iter().map(|(_, h)| h.max_degree()).max().unwrap_or(0);
    let bad: Vec<&str> =
        corpus.iter().filter(|(_, h)| !bound_check(h, BoundId::Main5).unwrap().holds).map(|(s, _)| s.as_str()).collect();
    let ok = corpus.len() >= 500 && n_max <= 18 && bad.is_empty();
    (ok, format!("{} hosts, n <= {n_max}, max degree {d_max}, violations {bad:?}", corpus.len()))
}

fn c8_degree_two() -> Outcome {
    let named: Vec<(&str, Hypergraph)> = vec![
        ("H14_5", special(SpecialKind::H14_5).unwrap()),
        ("H14_6", special(SpecialKind::H14_6).unwrap()),
        ("F_0", family_f(0)),
        ("F_1", family_f(1)),
        ("F_2", family_f(2)),
    ];
    let f_taus: Vec<usize> = (0..=2).map(|i| tau(&family_f(i)).tau).collect();
    let mut ok = f_taus == [1, 4, 7];
    for (name, h) in &named {
        let c = bound_check(h, BoundId::Deg2).unwrap();
        if !c.tight {
            ok = false;
            report(&format!("    {name} is not tight"));
        }
    }
    let mut corpus = builtin_corpus(BoundId::Deg2, 300, 8);
    // Catalog entries within the hypotheses join the corpus.
    corpus.extend(
        SpecialKind::shipped()
            .map(|k| (k.name().to_string(), special(k).unwrap()))
            .filter(|(_, h)| bound_check(h, BoundId::Deg2).is_ok()),
    );
    let mut tight = 0;
    for (name, h) in &corpus {
        let c = bound_check(h, BoundId::Deg2).unwrap();
        let is_named = named.iter().any(|(_, f)| hypergraph_isomorphic(f, h));
        ok &= c.holds && c.tight == is_named;
        if c.tight != is_named {
            report(&format!("    {name}: tight {} but named {is_named}", c.tight));
        }
        tight += usize::from(c.tight);
    }
    (ok, format!("tau(F_i) = {f_taus:?}; {} instances, {tight} tight, all tight ones named", corpus.len()))
}

fn c9_dual_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut checked = 0;
    let mut bad = 0;
    let mut i = 0;
    while checked < 200 {
        i += 1;
        let n = rng.gen_range(4..=24);
        let m = rng.gen_range(1..=(n / 2).max(1));
        let Ok(h) = random_linear(n, 4, 2, m, trial_seed(9, i)) else { continue };
        bad += usize::from(!check_dual_identity(&h).unwrap().identity_holds);
        checked += 1;
    }
    let k5 = graph_isomorphic(&special(SpecialKind::H10).unwrap().dual_graph().unwrap(), &Graph::complete(5));
    (bad == 0 && k5, format!("{checked} hosts, {bad} violations, dual(H10) = K5: {k5}"))
}

fn c10_total_domination() -> Outcome {
    let c = heawood().with_detected_bipartition().unwrap().bipartite_complement().unwrap();
    let a = gamma_t(&c).unwrap();
    let b = gamma_t(&g30()).unwrap();
    (a == 6 && b == 12, format!("gamma_t(Heawood complement) = {a}, gamma_t(G30) = {b}"))
}

fn c11_numerics() -> Outcome {
    let scan = threshold_scan(2, 4000).unwrap();
    let t = scan.threshold.unwrap_or(0);
    let e = envelope_maximum();
    let (t2, t15) = (envelope_threshold(2.0), envelope_threshold(1.5));
    let ok = t.abs_diff(2753) <= 5
        && scan.non_monotone.is_empty()
        && (e.max - 1.5037).abs() <= 1e-3
        && (e.argmax - 3.753).abs() <= 1e-2
        && e.max < 5f64.ln()
        && t2.is_some_and(|x| x.abs_diff(23) <= 2)
        && t15.is_some_and(|x| x.abs_diff(54) <= 2);
    let detail = format!(
        "threshold {t} (deviation {}), envelope max {:.4} at {:.3}, coefficient 2 and 1.5 thresholds {t2:?} / {t15:?}",
        t as i64 - 2753,
        e.max,
        e.argmax
    );
    (ok, detail)
}

/// Every way to write `total` as `parts` non-negative integers.
fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn c12_balanced_split() -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for k in 1..=4 {
        for n in 1..=4 {
            for total in 0..=8 {
                let best = pr_transversal(k, &balanced_split(total, n as u64));
                for split in compositions(total, n) {
                    cases += 1;
                    if pr_transversal(k, &split) > best {
                        bad.push((k, split));
                    }
                }
            }
        }
    }
    (bad.is_empty(), format!("{cases} splits, violations {bad:?}"))
}

fn c13_estar_bound() -> Outcome {
    let mut hosts: Vec<Hypergraph> = SpecialKind::shipped().map(|k| special(k).unwrap()).collect();
    hosts.extend(random_hosts(100, 3, 13));
    let (mut sets, mut bad) = (0, 0);
    for h in &hosts {
        deficiency_visit(h, 30, &mut |x| {
            sets += 1;
            bad += usize::from(!check_estar_bound(h, x));
        })
        .unwrap();
    }
    (bad == 0, format!("{} hosts, {sets} special sets visited, {bad} violations", hosts.len()))
}

fn c14_probability_model() -> Outcome {
    let host = projective_plane(3).unwrap();
    // |T| = 10 puts the exact probability nearest 1/2.
    let (k, t_size) = (2u64, 10usize);
    let subsets: Vec<Vec<usize>> =
        (0u32..1 << host.n()).filter(|s| s.count_ones() as usize == t_size).map(|s| {
            (0..host.n()).filter(|v| s >> v & 1 == 1).collect()
        }).collect();
    let mut sum = BigRational::zero();
    for t in &subsets {
        let hits: Vec<u64> = host.edges().iter().map(|e| e.iter().filter(|v| t.contains(v)).count() as u64).collect();
        sum += pr_transversal(k, &hits);
    }
    let exact = to_f64(&(sum / BigRational::from_integer(BigInt::from(subsets.len()))));

    let samples = 100_000u64;
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut hits = 0u64;
    for i in 0..samples {
        let t: BTreeSet<usize> = rand::seq::index::sample(&mut rng, host.n(), t_size).into_iter().collect();
        let small = shrink(&host, k as usize, trial_seed(14, i)).unwrap();
        hits += u64::from(small.is_transversal(&t.into_iter().collect::<Vec<_>>()));
    }
    let empirical = hits as f64 / samples as f64;
    let sigma = (exact * (1.0 - exact) / samples as f64).sqrt();
    let z = (empirical - exact) / sigma;
    (z.abs() <= 3.0, format!("PG(2,3), k=2, |T|={t_size}: exact {exact:.5}, empirical {empirical:.5}, z = {z:.2}"))
}

#[test]
fn acceptance() {
    let results = [
        criterion(1, secs(1), c1_small_residuals),
        criterion(2, secs(30), c2_affine_planes),
        criterion(3, secs(10), c3_residual_table),
        criterion(4, secs(60), c4_catalog),
        criterion(5, secs(1), c5_fano_complement),
        criterion(6, secs(300), c6_defic_bound),
        criterion(7, secs(300), c7_fifth_bound),
        criterion(8, secs(120), c8_degree_two),
        criterion(9, secs(120), c9_dual_identity),
        criterion(10, secs(120), c10_total_domination),
        criterion(11, secs(10), c11_numerics),
        criterion(12, secs(30), c12_balanced_split),
        criterion(13, secs(120), c13_estar_bound),
        criterion(14, secs(60), c14_probability_model),
    ];
    let failed: Vec<u32> = (1..=14).filter(|&i| !results[i as usize - 1]).collect();
    report(&format!("failed criteria: {failed:?} (known: {KNOWN_FAILURES:?})"));
    assert_eq!(failed, KNOWN_FAILURES);
}
