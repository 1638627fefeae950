//! Exact and floating-point quantities behind the random edge-shrinking
//! construction, plus a seeded sampler.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::projective_plane;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::solver;

/// `C(n, r)`, zero when `r > n`.
pub fn binom(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Probability that a uniformly random `k`-subset of a `2k`-set misses a
/// fixed `t`-subset: `C(2k - t, k) / C(2k, k)`.
pub fn pr_uncovered(k: u64, t: u64) -> BigRational {
    let top = if t > 2 * k { BigUint::zero() } else { binom(2 * k - t, k) };
    ratio(top, binom(2 * k, k))
}

/// `∏ (1 - pr_uncovered(k, t_i))`.
pub fn pr_transversal(k: u64, ts: &[u64]) -> BigRational {
    ts.iter().fold(BigRational::one(), |acc, &t| acc * (BigRational::one() - pr_uncovered(k, t)))
}

/// `total` split into `parts` integers differing by at most one, larger
/// parts first.
pub fn balanced_split(total: u64, parts: u64) -> Vec<u64> {
    assert!(parts > 0, "need at least one part");
    let (q, r) = (total / parts, total % parts);
    (0..parts).map(|i| q + u64::from(i < r)).collect()
}

/// `C(n, |T|) ∏ (1 - pr_uncovered(k, s_i))` over the balanced split of
/// `2k |T|` into `n` parts.
pub fn balanced_bound(k: u64, n: u64, t_size: u64) -> Result<BigRational> {
    if t_size > n || n == 0 {
        return Err(Error::Domain(format!("need 0 <= |T| = {t_size} <= n = {n} and n >= 1")));
    }
    let split = balanced_split(2 * k * t_size, n);
    Ok(BigRational::from_integer(BigInt::from(binom(n, t_size))) * pr_transversal(k, &split))
}

/// `exp(⌊c ln k / k · n⌋ ln n - n / (5 · 2^{2c ln k}))`.
pub fn final_bound(k: u64, n: u64, c: f64) -> Result<f64> {
    if k < 2 || n < 1 || !(c > 0.0 && c < 1.0 / 4f64.ln()) {
        return Err(Error::Domain(format!("need k >= 2, n >= 1, 0 < c < 1/ln 4; got k={k} n={n} c={c}")));
    }
    let (kf, nf) = (k as f64, n as f64);
    let t = (c * kf.ln() / kf * nf).floor();
    let s_star = 2.0 * c * kf.ln();
    Ok((t * nf.ln() - nf / (5.0 * 2f64.powf(s_star))).exp())
}

pub const GUARD_BAND: f64 = 1e-12;

/// `coef · c ln k ln n < k^{1 - c ln 4}`, required to hold with a relative
/// margin of [`GUARD_BAND`].
pub fn check_condition_coef(coef: f64, k: f64, c: f64, n: f64) -> bool {
    let lhs = coef * c * k.ln() * n.ln();
    let rhs = k.powf(1.0 - c * 4f64.ln());
    lhs < rhs * (1.0 - GUARD_BAND)
}

pub fn check_condition(k: u64, c: f64, n: u64) -> bool {
    check_condition_coef(5.0, k as f64, c, n as f64)
}

/// Order-`k` parameters from equating `(c ln k / k) n` with `(n + m)/(k + 1)`
/// at `m = n`: the host has `4k² - 2k + 1` points.
pub fn scan_parameters(k: u64) -> (u64, f64) {
    let n = 4 * k * k - 2 * k + 1;
    let kf = k as f64;
    (n, 2.0 * kf / ((kf + 1.0) * kf.ln()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdScan {
    pub coefficient: f64,
    pub k_lo: u64,
    pub k_hi: u64,
    /// Least `k` in the window where the condition holds.
    pub threshold: Option<u64>,
    /// `k` values after the threshold where the condition fails again.
    pub non_monotone: Vec<u64>,
}

pub fn threshold_scan(k_lo: u64, k_hi: u64) -> Result<ThresholdScan> {
    threshold_scan_coef(k_lo, k_hi, 5.0)
}

pub fn threshold_scan_coef(k_lo: u64, k_hi: u64, coefficient: f64) -> Result<ThresholdScan> {
    if k_lo < 2 || k_lo > k_hi {
        return Err(Error::Domain(format!("need 2 <= k_lo <= k_hi, got {k_lo}..{k_hi}")));
    }
    let holds = |k: u64| {
        let (n, c) = scan_parameters(k);
        check_condition_coef(coefficient, k as f64, c, n as f64)
    };
    let threshold = (k_lo..=k_hi).find(|&k| holds(k));
    let non_monotone = match threshold {
        Some(t) => (t..=k_hi).filter(|&k| !holds(k)).collect(),
        None => Vec::new(),
    };
    Ok(ThresholdScan { coefficient, k_lo, k_hi, threshold, non_monotone })
}

/// `g(k) = (1 + 2 ln k / ln 4) · 2 ln k / (2 ln 4 · k - 4 ln k)`.
pub fn envelope(k: f64) -> f64 {
    let (l, l4) = (k.ln(), 4f64.ln());
    (1.0 + 2.0 * l / l4) * 2.0 * l / (2.0 * l4 * k - 4.0 * l)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnvelopeMax {
    pub max: f64,
    pub argmax: f64,
}

/// Maximum of [`envelope`] over `k > 1` by golden-section search.
pub fn envelope_maximum() -> EnvelopeMax {
    let (mut a, mut b) = (1.0 + 1e-9, 64.0);
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    while b - a > 1e-9 {
        let x1 = b - phi * (b - a);
        let x2 = a + phi * (b - a);
        if envelope(x1) < envelope(x2) {
            a = x1;
        } else {
            b = x2;
        }
    }
    let argmax = (a + b) / 2.0;
    EnvelopeMax { max: envelope(argmax), argmax }
}

/// Least integer `k0 >= 2` with `g(k) < ln(coef)` for every integer
/// `k >= k0`. The envelope decreases past its maximum, so it suffices to scan
/// until it drops below the target for good.
pub fn envelope_threshold(coef: f64) -> Option<u64> {
    let target = coef.ln();
    let peak = envelope_maximum().argmax.ceil() as u64;
    let mut last_bad = None;
    let mut k = 2u64;
    loop {
        let g = envelope(k as f64);
        if g >= target {
            last_bad = Some(k);
        } else if k > peak {
            break;
        }
        k += 1;
        if k > 1 << 40 {
            return None;
        }
    }
    Some(last_bad.map_or(2, |b| b + 1))
}

/// `(1 - 1/x)^x < e^{-1} < (1 - 1/x)^{x-1}` for `x > 1`.
pub fn exp_sandwich_check(x: f64) -> Result<bool> {
    if !(x > 1.0) {
        return Err(Error::Domain(format!("need x > 1, got {x}")));
    }
    let l = (-1.0 / x).ln_1p();
    Ok(x * l < -1.0 && -1.0 < (x - 1.0) * l)
}

fn f_exact(s: u64) -> BigRational {
    BigRational::one() - ratio(BigUint::one(), BigUint::from(5u32) * (BigUint::one() << s as usize))
}

/// `f(x - y) f(x + y) <= f(x)²` for `f(s) = 1 - (1/5)(1/2)^s`, exact.
pub fn pair_product_check(x: u64, y: u64) -> Result<bool> {
    if y > x {
        return Err(Error::Domain(format!("need 0 <= y <= x, got x={x} y={y}")));
    }
    let fx = f_exact(x);
    Ok(f_exact(x - y) * f_exact(x + y) <= &fx * &fx)
}

/// Real-argument version of [`pair_product_check`].
pub fn pair_product_check_real(x: f64, y: f64) -> Result<bool> {
    if !(0.0 <= y && y <= x) {
        return Err(Error::Domain(format!("need 0 <= y <= x, got x={x} y={y}")));
    }
    let f = |s: f64| 1.0 - 0.2 * 0.5f64.powf(s);
    Ok(f(x - y) * f(x + y) <= f(x) * f(x) * (1.0 + GUARD_BAND))
}

/// Replaces each edge of a `2k`-uniform hypergraph by a uniform random
/// `k`-subset; edge `i` draws from its own stream seeded with `seed ^ i`.
pub fn shrink(h: &Hypergraph, k: usize, seed: u64) -> Result<Hypergraph> {
    if k == 0 || !h.is_uniform(2 * k) {
        return Err(Error::pre(format!("shrinking to {k} needs a {}-uniform hypergraph", 2 * k)));
    }
    let edges = h.edges().iter().enumerate().map(|(i, e)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ i as u64);
        sample(&mut rng, 2 * k, k).into_iter().map(|j| e[j]).collect()
    });
    Hypergraph::new(h.n(), edges)
}

/// Seed for trial `i`, independent of execution order.
pub fn trial_seed(seed: u64, i: u64) -> u64 {
    seed ^ i.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TauProfile {
    pub p: u64,
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub trials: usize,
    pub seed: u64,
    pub taus: Vec<usize>,
    pub min: usize,
    pub max: usize,
    pub mean: f64,
    /// Share of trials with `τ > (n + m)/(k + 1)`.
    pub exceed_fraction: f64,
}

pub fn mc_tau_profile(p: u64, trials: usize, seed: u64) -> Result<TauProfile> {
    if ![3, 5, 7].contains(&p) {
        return Err(Error::Domain(format!("p must be 3, 5 or 7, got {p}")));
    }
    if trials == 0 {
        return Err(Error::Domain("need at least one trial".into()));
    }
    let host = projective_plane(p)?;
    let k = (p as usize).div_ceil(2);
    let taus: Vec<usize> = (0..trials as u64)
        .into_par_iter()
        .map(|i| shrink(&host, k, trial_seed(seed, i)).map(|h| solver::tau(&h).tau))
        .collect::<Result<_>>()?;
    let (n, m) = (host.n(), host.m());
    let exceed = taus.iter().filter(|&&t| t * (k + 1) > n + m).count();
    Ok(TauProfile {
        p,
        k,
        n,
        m,
        trials,
        seed,
        min: *taus.iter().min().unwrap(),
        max: *taus.iter().max().unwrap(),
        mean: taus.iter().sum::<usize>() as f64 / trials as f64,
        exceed_fraction: exceed as f64 / trials as f64,
        taus,
    })
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 2), BigUint::from(6u32));
        assert_eq!(binom(20, 10), BigUint::from(184_756u32));
        assert_eq!(binom(3, 5), BigUint::zero());
        for n in 1..40 {
            for r in 1..=n {
                assert_eq!(binom(n, r), binom(n - 1, r - 1) + binom(n - 1, r));
            }
        }
    }

    #[test]
    fn uncovered_probabilities() {
        assert_eq!(pr_uncovered(2, 0), q(1, 1));
        assert_eq!(pr_uncovered(2, 1), q(1, 2));
        assert_eq!(pr_uncovered(2, 4), q(0, 1));
        assert_eq!(pr_transversal(2, &[4, 4, 4]), q(1, 1));
        assert_eq!(pr_transversal(2, &[1, 1]), q(1, 4));
        let t = 3;
        assert_eq!(pr_transversal(3, &[t; 5]), num_traits::pow(BigRational::one() - pr_uncovered(3, t), 5));
    }

    #[test]
    fn balanced_bound_values() {
        assert_eq!(balanced_split(4, 3), vec![2, 1, 1]);
        assert_eq!(balanced_bound(2, 3, 1).unwrap(), q(5, 8));
        assert_eq!(balanced_bound(2, 3, 0).unwrap(), q(0, 1));
    }

    #[test]
    fn condition_is_false_for_tiny_k_and_monotone_in_n() {
        assert!(!check_condition(2, 0.5, 13));
        for k in [10u64, 100, 3000] {
            let mut was_false = false;
            for n in 2..400 {
                let ok = check_condition(k, 0.3, n);
                assert!(!(was_false && ok));
                was_false |= !ok;
            }
        }
    }

    #[test]
    fn final_bound_with_empty_t() {
        let v = final_bound(5, 20, 1e-9).unwrap();
        assert!((v - (-4.0f64).exp()).abs() < 1e-6);
        assert!(final_bound(1, 20, 0.3).is_err());
        assert!(final_bound(5, 20, 0.8).is_err());
    }

    #[test]
    fn envelope_peak() {
        let e = envelope_maximum();
        assert!((e.max - 1.5037).abs() < 1e-3);
        assert!((e.argmax - 3.753).abs() < 1e-2);
        assert!(e.max < 5f64.ln());
    }

    #[test]
    fn thresholds() {
        let scan = threshold_scan(2700, 2800).unwrap();
        assert_eq!(scan.threshold, Some(2753));
        assert!(scan.non_monotone.is_empty());
        assert_eq!(envelope_threshold(2.0), Some(23));
        assert_eq!(envelope_threshold(1.5), Some(54));
        assert_eq!(envelope_threshold(5.0), Some(2));
        assert_eq!(threshold_scan(2, 10).unwrap().threshold, None);
    }

    #[test]
    fn exp_sandwich_grid() {
        for x in [1.01, 1.1, 2.0, 10.0, 1e3, 1e6] {
            assert!(exp_sandwich_check(x).unwrap(), "x = {x}");
        }
        assert!(exp_sandwich_check(1.0).is_err());
    }

    #[test]
    fn pair_product_exact() {
        assert!(pair_product_check(3, 0).unwrap());
        assert_eq!(f_exact(1) * f_exact(3), q(9, 10) * q(39, 40));
        assert!(q(9, 10) * q(39, 40) <= q(19, 20) * q(19, 20));
        for x in 0..=20 {
            for y in 0..=x {
                assert!(pair_product_check(x, y).unwrap());
            }
        }
        assert!(pair_product_check(1, 2).is_err());
    }

    #[test]
    fn pointwise_envelope_bound() {
        for k in 2u64..=30 {
            let s_max = (2.0 / 4f64.ln() * (k as f64).ln() + 1.0).floor() as u64;
            for s in 0..=s_max.min(2 * k) {
                let dyadic = ratio(BigUint::one(), BigUint::from(5u32) << s as usize);
                assert!(pr_uncovered(k, s) > dyadic, "k={k} s={s}");
            }
        }
    }

    #[test]
    fn shrink_is_deterministic() {
        let h = projective_plane(3).unwrap();
        let a = shrink(&h, 2, 42).unwrap();
        assert!(a.is_uniform(2));
        assert_eq!((a.n(), a.m()), (13, 13));
        assert_eq!(a, shrink(&h, 2, 42).unwrap());
        assert!(shrink(&h, 3, 0).is_err());
    }
}
