//! Method dispatch and the benchmark harness behind the `bench` command.

use std::io::Write;
use std::time::Instant;

use crate::estimators::{
    aingworth, approx_diam_dense, approx_diam_sparse, default_delta, default_dense_s,
    large_diameter_sampling_with, rv_estimate_with, sparse_htilde, two_approx,
    undirected_four_fifths, Estimate, EstimateError, Method, Params, RvConfig, Witness,
    DEFAULT_RERUN_CAP, DEFAULT_SAMPLE_CONST,
};
use crate::exact::{exact_diameter, DEFAULT_APSP_CAP};
use crate::graph::{Diameter, Dist, Graph};

/// CSV header written by [`write_csv`].
pub const CSV_HEADER: [&str; 13] = [
    "instance", "n", "m", "method", "s", "delta", "htilde", "seed", "estimate", "oracle_d", "ratio", "reruns",
    "millis",
];

/// Per-method overrides; `None` means the method's default.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MethodParams {
    pub s: Option<usize>,
    pub delta: Option<usize>,
    pub htilde: Option<Dist>,
    pub sample_const: f64,
    pub rerun_cap: u32,
    pub eps: f64,
    pub sampling_delta: f64,
}

impl Default for MethodParams {
    fn default() -> Self {
        MethodParams {
            s: None,
            delta: None,
            htilde: None,
            sample_const: DEFAULT_SAMPLE_CONST,
            rerun_cap: DEFAULT_RERUN_CAP,
            eps: 0.5,
            sampling_delta: 0.25,
        }
    }
}

/// `ceil(sqrt(n))`, the default `s` for the Aingworth-style estimators.
pub fn sqrt_s(n: usize) -> usize {
    let mut s = (n as f64).sqrt() as usize;
    while s * s < n {
        s += 1;
    }
    while s > 1 && (s - 1) * (s - 1) >= n {
        s -= 1;
    }
    s.max(1)
}

/// Runs `method` on `g`. `seed` is only consulted by randomized methods.
pub fn run_method(g: &Graph, method: Method, params: &MethodParams, seed: u64) -> Result<Estimate, EstimateError> {
    let s = || params.s.unwrap_or_else(|| sqrt_s(g.n()));
    let rv_config = RvConfig {
        sample_const: params.sample_const,
        rerun_cap: params.rerun_cap,
    };
    match method {
        Method::TwoApprox => two_approx(g),
        Method::Aingworth => aingworth(g, s()),
        Method::Rv => rv_estimate_with(g, s(), seed, rv_config, false),
        Method::RvWeighted => rv_estimate_with(g, s(), seed, rv_config, true),
        Method::Dense => approx_diam_dense(g, params.s.unwrap_or_else(|| default_dense_s(g))),
        Method::Sparse => {
            let htilde = match params.htilde {
                Some(h) => h,
                None => sparse_htilde(two_approx(g)?.value),
            };
            let delta = params.delta.unwrap_or_else(|| default_delta(g.edge_count(), htilde));
            approx_diam_sparse(g, htilde, delta)
        }
        Method::FourFifths => undirected_four_fifths(g),
        Method::Sampling => large_diameter_sampling_with(g, params.eps, params.sampling_delta, seed, params.sample_const),
        Method::Exact => {
            let result = exact_diameter(g);
            match (result.diameter, result.witness) {
                (Diameter::Finite(d), Some((from, to))) => Ok(Estimate {
                    value: d,
                    method: Method::Exact,
                    witness: Witness::Distance { from, to },
                    reruns: 0,
                    params: Params::default(),
                }),
                _ => Err(EstimateError::InfiniteDiameter),
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub methods: Vec<Method>,
    pub reps: u32,
    /// Repetition `r` of a randomized method uses seed `seed + r`.
    pub seed: u64,
    pub oracle_cap: usize,
    pub params: MethodParams,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            methods: vec![Method::Rv],
            reps: 1,
            seed: 0,
            oracle_cap: DEFAULT_APSP_CAP,
            params: MethodParams::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub method: Method,
    pub params: Params,
    /// Absent when the method rejected the instance.
    pub estimate: Option<Dist>,
    pub oracle: Option<Diameter>,
    pub reruns: u32,
    pub millis: f64,
}

impl BenchRecord {
    /// `estimate / D` when both are known and `D` is finite and positive.
    pub fn ratio(&self) -> Option<f64> {
        match (self.estimate, self.oracle) {
            (Some(e), Some(Diameter::Finite(d))) if d > 0 => Some(e as f64 / d as f64),
            (Some(_), Some(Diameter::Finite(0))) => Some(1.0),
            _ => None,
        }
    }

    fn fields(&self) -> [String; 13] {
        let opt = |v: Option<String>| v.unwrap_or_default();
        [
            self.instance.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.method.to_string(),
            opt(self.params.s.map(|v| v.to_string())),
            opt(self.params.delta.map(|v| v.to_string())),
            opt(self.params.htilde.map(|v| v.to_string())),
            opt(self.params.seed.map(|v| v.to_string())),
            opt(self.estimate.map(|v| v.to_string())),
            opt(self.oracle.map(|d| d.to_string())),
            opt(self.ratio().map(|r| format!("{r:.6}"))),
            self.reruns.to_string(),
            format!("{:.3}", self.millis),
        ]
    }
}

/// One row per (instance, method, repetition), in that nesting order.
pub fn run_bench(instances: &[(String, Graph)], config: &BenchConfig) -> Vec<BenchRecord> {
    let mut rows = Vec::new();
    for (name, g) in instances {
        let oracle = (g.n() <= config.oracle_cap).then(|| exact_diameter(g).diameter);
        for &method in &config.methods {
            for rep in 0..config.reps {
                let seed = config.seed.wrapping_add(u64::from(rep));
                let start = Instant::now();
                let result = run_method(g, method, &config.params, seed);
                let millis = start.elapsed().as_secs_f64() * 1e3;
                let (estimate, params, reruns) = match result {
                    Ok(e) => (Some(e.value), e.params, e.reruns),
                    Err(EstimateError::RerunCapExceeded { reruns }) => (None, Params::default(), reruns),
                    Err(_) => (None, Params::default(), 0),
                };
                rows.push(BenchRecord {
                    instance: name.clone(),
                    n: g.n(),
                    m: g.edge_count(),
                    method,
                    params,
                    estimate,
                    oracle,
                    reruns,
                    millis,
                });
            }
        }
    }
    rows
}

pub fn write_csv<W: Write>(out: W, rows: &[BenchRecord]) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(CSV_HEADER)?;
    for row in rows {
        writer.write_record(row.fields())?;
    }
    writer.flush()?;
    Ok(())
}

/// Least-squares slope of `ln t` against `ln n`.
pub fn fit_exponent(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(n, t)| (n.ln(), t.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = logs.iter().map(|&(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = logs.iter().map(|&(x, _)| (x - mx) * (x - mx)).sum();
    sxy / sxx
}
