//! Independent ground truth: witnesses built from prescribed roots, Euclidean
//! and repeated gcd chains, the confluent Vandermonde identity, Sturm counts,
//! and named verification suites over seeded random trials.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::discriminate::{gcd_candidates, generate_all, yhz_generate_all, ConditionSet, GenOptions, Method};
use crate::error::{Error, Result};
use crate::evaluate::{classify, classify_with};
use crate::partitions::{enumerate_all_complete, enumerate_m, enumerate_n, CompletePartition};
use crate::signs::count_roots;
use crate::sylvester::{determinant, subresultant, subresultant_via_prem, PolyMatrix};
use crate::xpoly::NumPoly;

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `lead * prod (x - r)^m * prod quad^m` together with its complete
/// multiplicity. Quadratics must be monic with negative discriminant.
pub fn construct_witness(
    real_roots: &[(BigRational, usize)],
    imag_factors: &[(NumPoly, usize)],
    lead: &BigRational,
) -> Result<(NumPoly, CompletePartition)> {
    if lead.is_zero() {
        return Err(Error::Invalid("zero leading coefficient".into()));
    }
    let mut p = NumPoly::constant(lead.clone());
    let mut real = Vec::new();
    let mut imag = Vec::new();
    for (i, (r, m)) in real_roots.iter().enumerate() {
        if *m == 0 {
            return Err(Error::Invalid("zero multiplicity".into()));
        }
        if real_roots[..i].iter().any(|(s, _)| s == r) {
            return Err(Error::Invalid(format!("repeated root {r}")));
        }
        let lin = NumPoly::new(vec![-r.clone(), BigRational::one()]);
        for _ in 0..*m {
            p = p.mul(&lin);
        }
        real.push(*m);
    }
    for (i, (f, m)) in imag_factors.iter().enumerate() {
        if f.degree() != Some(2) || !f.coeff(2).is_one() {
            return Err(Error::Invalid(format!("{f} is not a monic quadratic")));
        }
        let disc = f.coeff(1) * f.coeff(1) - q(4) * f.coeff(0);
        if !disc.is_negative() {
            return Err(Error::Invalid(format!("{f} has real roots")));
        }
        if *m == 0 {
            return Err(Error::Invalid("zero multiplicity".into()));
        }
        if imag_factors[..i].iter().any(|(g, _)| g == f) {
            return Err(Error::Invalid(format!("repeated quadratic {f}")));
        }
        for _ in 0..*m {
            p = p.mul(f);
        }
        imag.extend([*m, *m]);
    }
    Ok((p, CompletePartition::new(real, imag)))
}

fn grid_rational(rng: &mut ChaCha8Rng, span: i64) -> BigRational {
    BigRational::new(rng.gen_range(-span..=span).into(), rng.gen_range(1i64..=3).into())
}

/// A random witness with the prescribed structure: roots on a small rational
/// grid, quadratics `(x - α)^2 + β^2`, random nonzero leading coefficient.
pub fn random_witness(mu_c: &CompletePartition, rng: &mut ChaCha8Rng) -> Result<NumPoly> {
    let mut roots: Vec<(BigRational, usize)> = Vec::new();
    for &m in &mu_c.real {
        loop {
            let r = grid_rational(rng, 9);
            if roots.iter().all(|(s, _)| *s != r) {
                roots.push((r, m));
                break;
            }
        }
    }
    let mut quads: Vec<(NumPoly, usize)> = Vec::new();
    for pair in mu_c.imag.chunks(2) {
        loop {
            let alpha = grid_rational(rng, 6);
            let beta = BigRational::new(rng.gen_range(1i64..=6).into(), rng.gen_range(1i64..=3).into());
            let f = NumPoly::new(vec![&alpha * &alpha + &beta * &beta, -(q(2) * &alpha), q(1)]);
            if quads.iter().all(|(g, _)| *g != f) {
                quads.push((f, pair[0]));
                break;
            }
        }
    }
    let mut lead = q(0);
    while lead.is_zero() {
        lead = grid_rational(rng, 5);
    }
    Ok(construct_witness(&roots, &quads, &lead)?.0)
}

/// A witness with a uniformly chosen structure of degree `n`.
pub fn random_structure_witness(n: usize, rng: &mut ChaCha8Rng) -> Result<(NumPoly, CompletePartition)> {
    let all = enumerate_all_complete(n);
    let mu_c = all.choose(rng).expect("degree has structures").clone();
    Ok((random_witness(&mu_c, rng)?, mu_c))
}

/// `(G_0, G_1, ...)` with `G_0 = P` and `G_i = gcd(G_{i-1}, P^(i))`, all
/// monic, ending at the first constant.
pub fn euclid_gcd_chain(p: &NumPoly) -> Vec<NumPoly> {
    let mut chain = vec![p.monic()];
    let mut i = 1;
    while chain.last().and_then(NumPoly::degree).unwrap_or(0) > 0 {
        let next = chain.last().unwrap().gcd(&p.derivative(i));
        chain.push(next);
        i += 1;
    }
    chain
}

/// `(G~_0, G~_1, ...)` with `G~_i = gcd(G~_{i-1}, G~_{i-1}')`.
pub fn repeated_gcd_chain(p: &NumPoly) -> Vec<NumPoly> {
    let mut chain = vec![p.monic()];
    while chain.last().and_then(NumPoly::degree).unwrap_or(0) > 0 {
        let g = chain.last().unwrap();
        let next = g.gcd(&g.derivative(1));
        chain.push(next);
    }
    chain
}

/// Determinant of the confluent Vandermonde matrix and the product
/// `prod_{i<j} (x_j - x_i)^(τ_i τ_j)`.
pub fn confluent_vandermonde_det(xs: &[BigRational], taus: &[usize]) -> Result<(BigRational, BigRational)> {
    if xs.len() != taus.len() {
        return Err(Error::Invalid("xs and taus differ in length".into()));
    }
    let size: usize = taus.iter().sum();
    let mut rows = vec![Vec::with_capacity(size); size];
    for (x, &tau) in xs.iter().zip(taus) {
        for j in 0..tau {
            for (i, row) in rows.iter_mut().enumerate() {
                let c = if i >= j {
                    BigRational::from_integer(binomial(BigInt::from(i), BigInt::from(j))) * pow(x, i - j)
                } else {
                    q(0)
                };
                row.push(c);
            }
        }
    }
    let det = if size == 0 { q(1) } else { determinant(&PolyMatrix::from_rows(rows))? };
    let mut closed = q(1);
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            closed *= pow(&(&xs[j] - &xs[i]), taus[i] * taus[j]);
        }
    }
    Ok((det, closed))
}

fn pow(x: &BigRational, e: usize) -> BigRational {
    num_traits::pow(x.clone(), e)
}

fn sign_at_infinity(p: &NumPoly, negative: bool) -> i8 {
    let d = p.degree().unwrap_or(0);
    let lc = p.leading_coeff().map_or(0, |c| if c.is_positive() { 1 } else { -1 });
    if negative && d % 2 == 1 {
        -lc
    } else {
        lc
    }
}

/// Distinct real roots from the Sturm sequence of the squarefree part.
pub fn sturm_real_root_count(p: &NumPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (sqf, _) = p.div_rem(&p.gcd(&p.derivative(1)))?;
    let mut seq = vec![sqf.clone(), sqf.derivative(1)];
    while !seq.last().unwrap().is_zero() {
        let k = seq.len();
        let (_, r) = seq[k - 2].div_rem(&seq[k - 1])?;
        seq.push(r.neg());
    }
    seq.pop();
    let changes = |neg: bool| {
        let s: Vec<i8> = seq.iter().map(|f| sign_at_infinity(f, neg)).filter(|&s| s != 0).collect();
        s.windows(2).filter(|w| w[0] != w[1]).count()
    };
    Ok(changes(true) - changes(false))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Icgcd,
    AppendixB,
    Prem,
    Vandermonde,
    YhzRoots,
    CrossMethod,
    Exclusivity,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Icgcd,
        Suite::AppendixB,
        Suite::Prem,
        Suite::Vandermonde,
        Suite::YhzRoots,
        Suite::CrossMethod,
        Suite::Exclusivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Icgcd => "icgcd",
            Suite::AppendixB => "appendixB",
            Suite::Prem => "prem",
            Suite::Vandermonde => "vandermonde",
            Suite::YhzRoots => "yhz-roots",
            Suite::CrossMethod => "cross-method",
            Suite::Exclusivity => "exclusivity",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub trials: usize,
    pub passed: usize,
    /// One line per failing trial.
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.passed == self.trials
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}/{} pass", self.suite, self.passed, self.trials)?;
        for line in &self.failures {
            write!(f, "\n  {line}")?;
        }
        Ok(())
    }
}

/// Generator for trial `t` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, t: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(t as u64);
    rng
}

type TrialFn<'a> = dyn Fn(usize, &mut ChaCha8Rng) -> std::result::Result<(), String> + Sync + 'a;

fn run_trials(suite: Suite, trials: usize, seed: u64, f: &TrialFn<'_>) -> SuiteReport {
    let outcomes: Vec<_> = (0..trials)
        .into_par_iter()
        .map(|t| f(t, &mut trial_rng(seed, t)).map_err(|e| format!("trial {t}: {e}")))
        .collect();
    let failures: Vec<String> = outcomes.into_iter().filter_map(|o| o.err()).collect();
    SuiteReport { suite, trials, passed: trials - failures.len(), failures }
}

fn norm(p: &NumPoly) -> std::result::Result<NumPoly, String> {
    p.normalize_assoc().map_err(|e| e.to_string())
}

/// Subresultant-route gcds against Euclidean gcds, degrees cycling 4..=7.
fn icgcd_trial(t: usize, rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let n = 4 + t % 4;
    let (p, mu_c) = random_structure_witness(n, rng).map_err(|e| e.to_string())?;
    let mu = mu_c.merged();
    let euclid = euclid_gcd_chain(&p);
    let scaled = rng.gen_bool(0.5);
    let sub = gcd_candidates(&p.derivative_tower(scaled), &mu).map_err(|e| e.to_string())?;
    for i in 1..mu[0] {
        if norm(&sub[i])? != norm(&euclid[i])? {
            return Err(format!("{p} {mu_c}: G_{i} is {} but gcd is {}", sub[i], euclid[i]));
        }
    }
    Ok(())
}

fn appendix_b_trial(t: usize, rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let n = 2 + t % 7;
    let (p, mu_c) = random_structure_witness(n, rng).map_err(|e| e.to_string())?;
    let (a, b) = (euclid_gcd_chain(&p), repeated_gcd_chain(&p));
    if a.len() != b.len() {
        return Err(format!("{p} {mu_c}: chain lengths {} and {}", a.len(), b.len()));
    }
    for (i, (x, y)) in a.iter().zip(&b).enumerate() {
        if norm(x)? != norm(y)? {
            return Err(format!("{p} {mu_c}: entry {i} is {x} vs {y}"));
        }
    }
    Ok(())
}

/// Pseudo-remainder route against the determinant route for every index of
/// the right shape on a random dense integer polynomial.
fn prem_trial(t: usize, rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let n = 4 + t % 4;
    let coeffs: Vec<BigRational> = (0..=n)
        .map(|i| if i == n { q(rng.gen_range(1..=4)) } else { q(rng.gen_range(-9..=9)) })
        .collect();
    let p = NumPoly::new(coeffs);
    let tower = p.derivative_tower(rng.gen_bool(0.5));
    let mut checked = 0;
    for delta in enumerate_m(n).into_iter().chain(enumerate_n(n)) {
        match subresultant_via_prem(&tower, &delta) {
            Ok(r) => {
                let d = subresultant(&tower, &delta).map_err(|e| e.to_string())?;
                if r != d {
                    return Err(format!("{p} at {delta:?}: prem {r} vs det {d}"));
                }
                checked += 1;
            }
            Err(Error::BadPremIndex(_) | Error::ZeroDivisor(_) | Error::Degenerate(_)) => {}
            Err(e) => return Err(e.to_string()),
        }
    }
    if checked == 0 {
        return Err(format!("{p}: no index checked"));
    }
    Ok(())
}

fn vandermonde_trial(_t: usize, rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let total = rng.gen_range(1usize..=9);
    let mut taus = Vec::new();
    let mut left = total;
    while left > 0 {
        let k = rng.gen_range(1..=left);
        taus.push(k);
        left -= k;
    }
    let mut xs: Vec<BigRational> = Vec::new();
    while xs.len() < taus.len() {
        let x = grid_rational(rng, 7);
        if !xs.contains(&x) {
            xs.push(x);
        }
    }
    let (det, closed) = confluent_vandermonde_det(&xs, &taus).map_err(|e| e.to_string())?;
    if det != closed {
        return Err(format!("xs {xs:?} taus {taus:?}: det {det} vs {closed}"));
    }
    Ok(())
}

/// Root counts from the discriminant sequence against construction and
/// against Sturm, degrees cycling 2..=8.
fn roots_trial(t: usize, rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let n = 2 + t % 7;
    let (p, mu_c) = random_structure_witness(n, rng).map_err(|e| e.to_string())?;
    let (real, pairs) = count_roots(&p).map_err(|e| e.to_string())?;
    let sturm = sturm_real_root_count(&p).map_err(|e| e.to_string())?;
    let want = (mu_c.real.len(), mu_c.imag.len() / 2);
    if (real, pairs) != want || sturm != want.0 {
        return Err(format!("{p} {mu_c}: counted {real},{pairs}, sturm {sturm}"));
    }
    Ok(())
}

/// Condition sets for degrees 3..=5, shared by the classification suites.
pub struct ConditionCache {
    sets: BTreeMap<(usize, Method), ConditionSet>,
}

impl ConditionCache {
    pub fn build(methods: &[Method]) -> Result<Self> {
        let mut sets = BTreeMap::new();
        for n in 3..=5 {
            for &m in methods {
                let cs = match m {
                    Method::Qxy => generate_all(n, &GenOptions::default())?,
                    Method::Yhz => yhz_generate_all(n, &GenOptions::default())?,
                };
                sets.insert((n, m), cs);
            }
        }
        Ok(Self { sets })
    }

    pub fn get(&self, n: usize, m: Method) -> Option<&ConditionSet> {
        self.sets.get(&(n, m))
    }
}

fn verdict(cs: &ConditionSet, p: &NumPoly) -> std::result::Result<CompletePartition, String> {
    classify_with(cs, p).map(|v| v.mu_c).map_err(|e| e.to_string())
}

fn cross_trial(cache: &ConditionCache, t: usize, rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let n = 3 + t % 3;
    let (p, mu_c) = random_structure_witness(n, rng).map_err(|e| e.to_string())?;
    let a = verdict(cache.get(n, Method::Qxy).ok_or("missing set")?, &p)?;
    let b = verdict(cache.get(n, Method::Yhz).ok_or("missing set")?, &p)?;
    if a != mu_c || b != mu_c {
        return Err(format!("{p} {mu_c}: qxy {a}, yhz {b}"));
    }
    Ok(())
}

/// Cycles through every structure of degrees 3..=5 in turn; the matching
/// condition must be unique and equal the fast-path verdict.
fn exclusivity_trial(cache: &ConditionCache, t: usize, rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let all: Vec<CompletePartition> = (3..=5).flat_map(enumerate_all_complete).collect();
    let mu_c = &all[t % all.len()];
    let n = mu_c.degree();
    let p = random_witness(mu_c, rng).map_err(|e| e.to_string())?;
    let slow = verdict(cache.get(n, Method::Qxy).ok_or("missing set")?, &p)?;
    let fast = classify(&p).map_err(|e| e.to_string())?.mu_c;
    if slow != *mu_c || fast != *mu_c {
        return Err(format!("{p} {mu_c}: conditions {slow}, fast path {fast}"));
    }
    Ok(())
}

/// Runs `trials` seeded trials of a suite.
pub fn run_suite(suite: Suite, trials: usize, seed: u64) -> Result<SuiteReport> {
    Ok(match suite {
        Suite::Icgcd => run_trials(suite, trials, seed, &icgcd_trial),
        Suite::AppendixB => run_trials(suite, trials, seed, &appendix_b_trial),
        Suite::Prem => run_trials(suite, trials, seed, &prem_trial),
        Suite::Vandermonde => run_trials(suite, trials, seed, &vandermonde_trial),
        Suite::YhzRoots => run_trials(suite, trials, seed, &roots_trial),
        Suite::CrossMethod => {
            let cache = ConditionCache::build(&[Method::Qxy, Method::Yhz])?;
            run_trials(suite, trials, seed, &|t, rng| cross_trial(&cache, t, rng))
        }
        Suite::Exclusivity => {
            let cache = ConditionCache::build(&[Method::Qxy])?;
            run_trials(suite, trials, seed, &|t, rng| exclusivity_trial(&cache, t, rng))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_numeric;

    fn np(s: &str) -> NumPoly {
        parse_numeric(s).unwrap()
    }

    #[test]
    fn witnesses_by_construction() {
        let (p, mc) = construct_witness(&[(q(1), 2), (q(2), 1)], &[(np("x^2+1"), 1)], &q(1)).unwrap();
        assert_eq!(p, np("x^5-4*x^4+6*x^3-6*x^2+5*x-2"));
        assert_eq!(mc, CompletePartition::new(vec![2, 1], vec![1, 1]));
        let (p, mc) = construct_witness(&[(q(1), 3), (q(-1), 2)], &[(np("x^2+1"), 1)], &q(1)).unwrap();
        assert_eq!(p, np("x^7-x^6-x^5+x^4-x^3+x^2+x-1"));
        assert_eq!(mc, CompletePartition::new(vec![3, 2], vec![1, 1]));
        let (p, mc) = construct_witness(&[], &[(np("x^2+x+1"), 2)], &q(1)).unwrap();
        assert_eq!(p, np("(x^2+x+1)^2"));
        assert_eq!(mc, CompletePartition::new(vec![], vec![2, 2]));
        assert!(construct_witness(&[], &[(np("x^2-1"), 1)], &q(1)).is_err());
        assert!(construct_witness(&[], &[(np("x^2+2*x+1"), 1)], &q(1)).is_err());
        assert!(construct_witness(&[(q(1), 1), (q(1), 2)], &[], &q(1)).is_err());
        assert!(construct_witness(&[], &[(np("x^2+1"), 1), (np("x^2+1"), 1)], &q(1)).is_err());
    }

    #[test]
    fn gcd_chains() {
        let p = np("(x-1)^3*(x+1)^2*(x^2+1)");
        let chain = euclid_gcd_chain(&p);
        assert_eq!(chain[1], np("(x-1)^2*(x+1)"));
        assert_eq!(chain[2], np("x-1"));
        assert_eq!(chain[3], np("1"));
        assert_eq!(chain.len(), 4);
        assert_eq!(repeated_gcd_chain(&p), chain);
        assert_eq!(euclid_gcd_chain(&np("x^3-x")), vec![np("x^3-x"), np("1")]);
        let c = euclid_gcd_chain(&np("(x-2)^4"));
        assert_eq!(&c[1..], &[np("(x-2)^3"), np("(x-2)^2"), np("x-2"), np("1")]);
    }

    #[test]
    fn confluent_vandermonde_examples() {
        let (det, closed) = confluent_vandermonde_det(&[q(0), q(1), q(2)], &[3, 1, 2]).unwrap();
        assert_eq!(det, q(64));
        assert_eq!(closed, q(64));
        let (det, _) = confluent_vandermonde_det(&[q(2), q(5), q(-1)], &[1, 1, 1]).unwrap();
        assert_eq!(det, q((5 - 2) * (-1 - 2) * (-1 - 5)));
        assert_eq!(confluent_vandermonde_det(&[q(7)], &[4]).unwrap().0, q(1));
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(sturm_real_root_count(&np("(x-1)^2*(x-2)*(x^2+1)")).unwrap(), 2);
        assert_eq!(sturm_real_root_count(&np("x^2+1")).unwrap(), 0);
        assert_eq!(sturm_real_root_count(&np("(x-1)*(x-2)*(x-3)*(x+5)^3")).unwrap(), 4);
        assert_eq!(sturm_real_root_count(&np("7")).unwrap(), 0);
    }

    #[test]
    fn trials_are_reproducible() {
        let a = random_structure_witness(6, &mut trial_rng(7, 3)).unwrap();
        let b = random_structure_witness(6, &mut trial_rng(7, 3)).unwrap();
        assert_eq!(a, b);
        let w = random_witness(&CompletePartition::new(vec![3, 1], vec![2, 2]), &mut trial_rng(1, 0)).unwrap();
        assert_eq!(w.degree(), Some(8));
    }

    #[test]
    fn small_suites_pass() {
        for suite in [Suite::Icgcd, Suite::AppendixB, Suite::Prem, Suite::Vandermonde, Suite::YhzRoots] {
            let r = run_suite(suite, 12, 3).unwrap();
            assert!(r.ok(), "{r}");
        }
        assert_eq!("appendixB".parse::<Suite>().unwrap(), Suite::AppendixB);
        assert!("nope".parse::<Suite>().is_err());
    }
}
