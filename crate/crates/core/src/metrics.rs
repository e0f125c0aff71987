//! Closed-form and measured sizes of generated condition sets, and timing.

use std::time::{Duration, Instant};

use crate::discriminate::{generate_all, yhz_generate_all, ConditionSet, GenOptions, Method};
use crate::error::{Error, Result};
use crate::partitions::partition_counts;

/// Polynomials in the nested-chain conditions: `3 * 2^n / 4 - 1`.
pub fn t_yhz(n: usize) -> u128 {
    assert!((2..=120).contains(&n), "t_yhz defined for 2 <= n <= 120");
    3 * (1u128 << (n - 2)) - 1
}

/// Polynomials in the non-nested conditions:
/// `p(n) + sum_{i=0}^{n-2} p(i) * (n - i)`.
pub fn t_qxy(n: usize) -> u128 {
    assert!(n >= 2, "t_qxy defined for n >= 2");
    let p = partition_counts(n);
    p[n] + (0..=n - 2).map(|i| p[i] * (n - i) as u128).sum::<u128>()
}

/// Maximum total parameter degree in the non-nested conditions.
pub fn d_qxy(n: usize) -> usize {
    n * (n - 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyDegree {
    pub key: String,
    pub xdeg: usize,
    pub param_degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measurement {
    /// Registry polynomials that partition the parameter space: scalar
    /// subresultants indexed by partitions of `n` plus every stored
    /// discriminant-sequence entry.
    pub poly_count: usize,
    /// Distinct keys some atom actually references.
    pub referenced_count: usize,
    /// Largest total degree in the parameters over the counted polynomials.
    pub max_param_degree: u32,
    /// Largest `x`-degree over all registry entries.
    pub max_x_degree: usize,
    pub per_key: Vec<KeyDegree>,
}

pub fn measure(cs: &ConditionSet) -> Measurement {
    let n = cs.degree;
    let mut per_key = Vec::new();
    let mut max_param_degree = 0;
    let mut max_x_degree = 0;
    for (k, e) in &cs.registry.entries {
        let xdeg = e.poly.degree().unwrap_or(0);
        max_x_degree = max_x_degree.max(xdeg);
        if !k.is_condition_polynomial(n) {
            continue;
        }
        let d = e.poly.coeffs().iter().filter_map(|c| c.total_degree()).max().unwrap_or(0);
        max_param_degree = max_param_degree.max(d);
        per_key.push(KeyDegree { key: k.to_string(), xdeg, param_degree: d });
    }
    let mut refs: Vec<String> = cs
        .items
        .iter()
        .flat_map(|(_, c)| c.atoms.iter().flat_map(|a| a.keys().into_iter().map(ToString::to_string)))
        .collect();
    refs.sort();
    refs.dedup();
    Measurement {
        poly_count: per_key.len(),
        referenced_count: refs.len(),
        max_param_degree,
        max_x_degree,
        per_key,
    }
}

pub fn generate(n: usize, method: Method, opts: &GenOptions) -> Result<ConditionSet> {
    match method {
        Method::Qxy => generate_all(n, opts),
        Method::Yhz => yhz_generate_all(n, opts),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub method: Method,
    pub seconds: f64,
    pub threads: usize,
}

impl BenchRow {
    pub const CSV_HEADER: &'static str = "n,method,seconds,threads";

    pub fn csv(&self) -> String {
        format!("{},{},{:.6},{}", self.n, self.method, self.seconds, self.threads)
    }
}

/// Median wall-clock time of `repetitions` symbolic generations.
pub fn bench(n: usize, method: Method, repetitions: usize, opts: &GenOptions) -> Result<BenchRow> {
    if n < 3 {
        return Err(Error::Invalid("bench needs n >= 3".into()));
    }
    let mut times: Vec<Duration> = Vec::with_capacity(repetitions.max(1));
    for _ in 0..repetitions.max(1) {
        let start = Instant::now();
        generate(n, method, opts)?;
        times.push(start.elapsed());
    }
    times.sort();
    Ok(BenchRow {
        n,
        method,
        seconds: times[times.len() / 2].as_secs_f64(),
        threads: opts.threads,
    })
}

/// `n,t_yhz,t_qxy,ratio` rows.
pub fn counts_csv(ns: impl IntoIterator<Item = usize>) -> String {
    let mut out = String::from("n,t_yhz,t_qxy,ratio\n");
    for n in ns {
        let (y, q) = (t_yhz(n), t_qxy(n));
        out.push_str(&format!("{n},{y},{q},{:.3}\n", y as f64 / q as f64));
    }
    out
}

/// `n,d_yhz_measured,d_qxy_measured,d_qxy_formula` rows. Measurements that
/// fail or exceed `budget` are left empty.
pub fn maxdeg_csv(ns: impl IntoIterator<Item = usize>, budget: Option<Duration>) -> String {
    let mut out = String::from("n,d_yhz_measured,d_qxy_measured,d_qxy_formula\n");
    for n in ns {
        let cell = |method| {
            let opts = GenOptions {
                deadline: budget.map(|b| Instant::now() + b),
                ..GenOptions::default()
            };
            generate(n, method, &opts)
                .map(|cs| measure(&cs).max_param_degree.to_string())
                .unwrap_or_default()
        };
        out.push_str(&format!("{n},{},{},{}\n", cell(Method::Yhz), cell(Method::Qxy), d_qxy(n)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(t_yhz(3), 5);
        assert_eq!(t_yhz(10), 767);
        assert_eq!(t_yhz(18), 196607);
        assert_eq!(t_qxy(3), 8);
        assert_eq!(t_qxy(6), 49);
        assert_eq!(t_qxy(18), 4670);
        assert_eq!(d_qxy(3), 6);
        assert_eq!(d_qxy(4), 12);
        assert_eq!(d_qxy(8), 56);
    }

    /// The recursive count `T(n) = n + sum_{i=2}^{n-1} T(i)` from which the
    /// closed form is derived.
    #[test]
    fn yhz_closed_form_matches_recursion() {
        let mut t = vec![0u128; 40];
        for n in 2..40 {
            t[n] = n as u128 + (2..n).map(|i| t[i]).sum::<u128>();
            assert_eq!(t_yhz(n), t[n], "n={n}");
            if n >= 3 {
                assert_eq!(t_yhz(n) - t_yhz(n - 1), 1 + t_yhz(n - 1));
            }
        }
    }

    #[test]
    fn csv_shapes() {
        let c = counts_csv(3..=4);
        assert_eq!(c, "n,t_yhz,t_qxy,ratio\n3,5,8,0.625\n4,11,16,0.688\n");
        let row = BenchRow { n: 3, method: Method::Qxy, seconds: 0.5, threads: 1 };
        assert_eq!(row.csv(), "3,qxy,0.500000,1");
    }

    #[test]
    fn measured_cubic() {
        let m = measure(&generate_all(3, &GenOptions::default()).unwrap());
        assert_eq!(m.poly_count, 8);
        assert_eq!(m.max_param_degree, 6);
        let y = measure(&yhz_generate_all(3, &GenOptions::default()).unwrap());
        assert_eq!(y.poly_count, 5);
        assert_eq!(y.max_param_degree, 6);
    }
}
