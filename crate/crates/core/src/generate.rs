//! Seeded graph generators for test and benchmark corpora.
//!
//! A [`GenSpec`] is a pure description: the same spec always yields the same
//! graph. Specs have a compact text form, e.g. `gnm:n=100,m=300,seed=7` or
//! `barbell:clique=5,path=4,weights=1..10,directed`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use thiserror::Error;

use crate::estimators::{Prng, PRNG_ID};
use crate::graph::{finite_diameter_check, Graph, MAX_WEIGHT};

pub const DEFAULT_RETRY_CAP: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// Uniform over graphs with exactly `m` edges.
    Gnm { n: usize, m: usize },
    /// Each possible edge independently with probability `p`.
    Gnp { n: usize, p: f64 },
    Path { n: usize },
    /// Undirected cycle, or a one-way cycle when directed.
    Cycle { n: usize },
    Star { n: usize },
    Complete { n: usize },
    Grid { rows: usize, cols: usize },
    /// Two `K_clique` joined by a path of `path` edges between one member of each.
    Barbell { clique: usize, path: usize },
    /// Spanning path (cycle if directed) plus up to `m` random edges, every
    /// degree at most `max_degree`.
    BoundedDegree { n: usize, m: usize, max_degree: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Gnm { .. } => "gnm",
            Family::Gnp { .. } => "gnp",
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Star { .. } => "star",
            Family::Complete { .. } => "complete",
            Family::Grid { .. } => "grid",
            Family::Barbell { .. } => "barbell",
            Family::BoundedDegree { .. } => "bounded_degree",
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            Family::Gnm { n, .. }
            | Family::Gnp { n, .. }
            | Family::Path { n }
            | Family::Cycle { n }
            | Family::Star { n }
            | Family::Complete { n }
            | Family::BoundedDegree { n, .. } => n,
            Family::Grid { rows, cols } => rows * cols,
            Family::Barbell { clique, path } => 2 * clique + path - 1,
        }
    }

    fn is_random(&self) -> bool {
        matches!(self, Family::Gnm { .. } | Family::Gnp { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub family: Family,
    pub directed: bool,
    /// Inclusive weight range; `None` for an unweighted graph.
    pub weights: Option<(u64, u64)>,
    pub seed: u64,
    /// Force finite diameter for the random families.
    pub connect: bool,
    pub retry_cap: u32,
}

impl GenSpec {
    pub fn new(family: Family) -> Self {
        GenSpec {
            family,
            directed: false,
            weights: None,
            seed: 0,
            connect: true,
            retry_cap: DEFAULT_RETRY_CAP,
        }
    }

    pub fn directed(mut self, directed: bool) -> Self {
        self.directed = directed;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn weights(mut self, lo: u64, hi: u64) -> Self {
        self.weights = Some((lo, hi));
        self
    }

    pub fn connect(mut self, connect: bool) -> Self {
        self.connect = connect;
        self
    }

    /// One-line provenance header for emitted files.
    pub fn provenance(&self) -> String {
        format!("# generator={self} prng={PRNG_ID}")
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("no connected sample after {0} retries")]
    RetryCapExhausted(u32),
    #[error("malformed generator spec `{spec}`: {message}")]
    Malformed { spec: String, message: String },
}

fn infeasible(message: impl Into<String>) -> GenError {
    GenError::Infeasible(message.into())
}

fn max_edges(n: usize, directed: bool) -> usize {
    let pairs = n * n.saturating_sub(1);
    if directed {
        pairs
    } else {
        pairs / 2
    }
}

fn validate(spec: &GenSpec) -> Result<(), GenError> {
    let n = spec.family.n();
    if n == 0 {
        return Err(infeasible("graph needs at least one vertex"));
    }
    match spec.family {
        Family::Gnm { n, m } if m > max_edges(n, spec.directed) => {
            return Err(infeasible(format!("m = {m} exceeds the {} possible edges", max_edges(n, spec.directed))));
        }
        Family::Gnp { p, .. } if !(0.0..=1.0).contains(&p) => {
            return Err(infeasible(format!("p = {p} outside [0, 1]")));
        }
        Family::Barbell { clique, path } if clique < 2 || path == 0 => {
            return Err(infeasible("barbell needs clique >= 2 and path >= 1"));
        }
        Family::BoundedDegree { n, max_degree, .. } if max_degree < 2 && n > 2 => {
            return Err(infeasible("bounded_degree needs max_degree >= 2"));
        }
        _ => {}
    }
    if let Some((lo, hi)) = spec.weights {
        if lo == 0 || lo > hi || hi > MAX_WEIGHT {
            return Err(infeasible(format!("weight range {lo}..{hi} must satisfy 1 <= lo <= hi <= 2^40")));
        }
    }
    Ok(())
}

/// Decodes index `i` of the strict upper triangle of an `n x n` matrix, in
/// row-major order, into `(u, v)` with `u < v`.
fn triangle_pair(i: usize, n: usize) -> (usize, usize) {
    // Row u starts at offset u * (2n - u - 1) / 2.
    let start = |u: usize| u * (2 * n - u - 1) / 2;
    let nf = n as f64;
    let guess = (nf - 0.5 - ((nf - 0.5).powi(2) - 2.0 * i as f64).max(0.0).sqrt()).floor() as usize;
    let mut u = guess.min(n - 2);
    while start(u) > i {
        u -= 1;
    }
    while u + 1 < n - 1 && start(u + 1) <= i {
        u += 1;
    }
    (u, u + 1 + (i - start(u)))
}

fn gnm_edges(n: usize, m: usize, directed: bool, rng: &mut Prng) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    let total = max_edges(n, directed);
    let mut picked = sample(rng, total, m).into_vec();
    picked.sort_unstable();
    picked
        .into_iter()
        .map(|i| {
            if directed {
                let u = i / (n - 1);
                let r = i % (n - 1);
                (u, if r >= u { r + 1 } else { r })
            } else {
                triangle_pair(i, n)
            }
        })
        .collect()
}

fn gnp_edges(n: usize, p: f64, directed: bool, rng: &mut Prng) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v || (!directed && v < u) {
                continue;
            }
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Random Hamiltonian path, closed into a cycle for directed graphs so the
/// overlay alone makes the graph strongly connected.
fn hamiltonian_overlay(n: usize, directed: bool, rng: &mut Prng) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = order.windows(2).map(|w| (w[0], w[1])).collect();
    if directed && n > 1 {
        edges.push((order[n - 1], order[0]));
    }
    edges
}

fn bounded_degree_edges(
    n: usize,
    m: usize,
    max_degree: usize,
    directed: bool,
    rng: &mut Prng,
) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    if directed && n > 2 {
        edges.push((n - 1, 0));
    }
    let key = |u: usize, v: usize| if directed { (u, v) } else { (u.min(v), u.max(v)) };
    let mut out_deg = vec![0usize; n];
    let mut in_deg = vec![0usize; n];
    let mut seen = HashSet::new();
    let record = |u: usize, v: usize, out_deg: &mut [usize], in_deg: &mut [usize]| {
        out_deg[u] += 1;
        in_deg[v] += 1;
        if !directed {
            out_deg[v] += 1;
            in_deg[u] += 1;
        }
    };
    for &(u, v) in &edges {
        record(u, v, &mut out_deg, &mut in_deg);
        seen.insert(key(u, v));
    }
    let mut added = 0;
    let mut attempts = 0;
    while added < m && attempts < 20 * m.max(1) && n > 1 {
        attempts += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || out_deg[u] >= max_degree || in_deg[v] >= max_degree {
            continue;
        }
        if !directed && (out_deg[v] >= max_degree || in_deg[u] >= max_degree) {
            continue;
        }
        if !seen.insert(key(u, v)) {
            continue;
        }
        record(u, v, &mut out_deg, &mut in_deg);
        edges.push((u, v));
        added += 1;
    }
    edges
}

fn structured_edges(family: Family, directed: bool) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    match family {
        Family::Path { n } => edges.extend((1..n).map(|i| (i - 1, i))),
        Family::Cycle { n } => {
            if n > 1 {
                edges.extend((0..n).map(|i| (i, (i + 1) % n)));
            }
        }
        Family::Star { n } => edges.extend((1..n).map(|i| (0, i))),
        Family::Complete { n } => {
            for u in 0..n {
                edges.extend((u + 1..n).map(|v| (u, v)));
            }
        }
        Family::Grid { rows, cols } => {
            for r in 0..rows {
                for c in 0..cols {
                    let v = r * cols + c;
                    if c + 1 < cols {
                        edges.push((v, v + 1));
                    }
                    if r + 1 < rows {
                        edges.push((v, v + cols));
                    }
                }
            }
        }
        Family::Barbell { clique, path } => {
            let second = clique + path - 1;
            for base in [0, second] {
                for u in 0..clique {
                    edges.extend((u + 1..clique).map(|v| (base + u, base + v)));
                }
            }
            // Path from node clique-1 through clique..second-1 to node second.
            edges.extend((clique..=second).map(|v| (v - 1, v)));
        }
        _ => unreachable!("random families are handled separately"),
    }
    // Structured families are symmetric when directed, except the one-way cycle.
    if directed && !matches!(family, Family::Cycle { .. }) {
        let back: Vec<_> = edges.iter().map(|&(u, v)| (v, u)).collect();
        edges.extend(back);
    }
    edges
}

fn attach_weights(
    n: usize,
    directed: bool,
    edges: Vec<(usize, usize)>,
    weights: Option<(u64, u64)>,
    rng: &mut Prng,
) -> Graph {
    match weights {
        None => Graph::from_edges(n, directed, edges).expect("generated endpoints are in range"),
        Some((lo, hi)) => {
            let unweighted = Graph::from_edges(n, directed, edges).expect("generated endpoints are in range");
            let weighted = unweighted
                .edges()
                .map(|(u, v, _)| (u, v, rng.gen_range(lo..=hi) as i64))
                .collect::<Vec<_>>();
            Graph::from_weighted_edges(n, directed, weighted).expect("weights are within range")
        }
    }
}

/// Generates the graph described by `spec`.
pub fn generate(spec: &GenSpec) -> Result<Graph, GenError> {
    validate(spec)?;
    let mut rng = Prng::seed_from_u64(spec.seed);
    let n = spec.family.n();
    let directed = spec.directed;
    let edges = if spec.family.is_random() {
        let draw = |rng: &mut Prng| match spec.family {
            Family::Gnm { n, m } => gnm_edges(n, m, directed, rng),
            Family::Gnp { n, p } => gnp_edges(n, p, directed, rng),
            _ => unreachable!(),
        };
        let mut edges = draw(&mut rng);
        if spec.connect {
            let mut tries = 0;
            while !finite_diameter_check(&Graph::from_edges(n, directed, edges.iter().copied()).expect("in range")) {
                if tries == spec.retry_cap {
                    edges.extend(hamiltonian_overlay(n, directed, &mut rng));
                    break;
                }
                tries += 1;
                edges = draw(&mut rng);
            }
        }
        edges
    } else if let Family::BoundedDegree { n, m, max_degree } = spec.family {
        bounded_degree_edges(n, m, max_degree, directed, &mut rng)
    } else {
        structured_edges(spec.family, directed)
    };
    Ok(attach_weights(n, directed, edges, spec.weights, &mut rng))
}

/// Like [`generate`], but fails instead of overlaying a Hamiltonian path when
/// no sample within the retry cap has finite diameter.
pub fn generate_strict(spec: &GenSpec) -> Result<Graph, GenError> {
    let loose = GenSpec { connect: false, ..*spec };
    let mut rng_seed = spec.seed;
    for _ in 0..=spec.retry_cap {
        let g = generate(&GenSpec { seed: rng_seed, ..loose })?;
        if finite_diameter_check(&g) {
            return Ok(g);
        }
        rng_seed = rng_seed.wrapping_add(0x9e37_79b9_7f4a_7c15);
    }
    Err(GenError::RetryCapExhausted(spec.retry_cap))
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.family.name())?;
        match self.family {
            Family::Gnm { n, m } => write!(f, "n={n},m={m}")?,
            Family::Gnp { n, p } => write!(f, "n={n},p={p}")?,
            Family::Path { n } | Family::Cycle { n } | Family::Star { n } | Family::Complete { n } => {
                write!(f, "n={n}")?
            }
            Family::Grid { rows, cols } => write!(f, "rows={rows},cols={cols}")?,
            Family::Barbell { clique, path } => write!(f, "clique={clique},path={path}")?,
            Family::BoundedDegree { n, m, max_degree } => write!(f, "n={n},m={m},degree={max_degree}")?,
        }
        write!(f, ",seed={}", self.seed)?;
        if let Some((lo, hi)) = self.weights {
            write!(f, ",weights={lo}..{hi}")?;
        }
        if self.directed {
            f.write_str(",directed")?;
        }
        if !self.connect {
            f.write_str(",noconnect")?;
        }
        if self.retry_cap != DEFAULT_RETRY_CAP {
            write!(f, ",retries={}", self.retry_cap)?;
        }
        Ok(())
    }
}

impl FromStr for GenSpec {
    type Err = GenError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = |message: String| GenError::Malformed {
            spec: text.to_string(),
            message,
        };
        let (name, rest) = text.split_once(':').unwrap_or((text, ""));
        let mut n = None;
        let mut m = None;
        let mut p = None;
        let mut rows = None;
        let mut cols = None;
        let mut clique = None;
        let mut path = None;
        let mut degree = None;
        let mut spec = GenSpec::new(Family::Path { n: 1 });
        for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let Some((key, value)) = item.split_once('=') else {
                match item {
                    "directed" => spec.directed = true,
                    "undirected" => spec.directed = false,
                    "connect" => spec.connect = true,
                    "noconnect" => spec.connect = false,
                    _ => return Err(bad(format!("unknown flag `{item}`"))),
                }
                continue;
            };
            let int = |v: &str| v.parse::<usize>().map_err(|_| bad(format!("`{key}` needs an integer, got `{v}`")));
            match key {
                "n" => n = Some(int(value)?),
                "m" => m = Some(int(value)?),
                "rows" => rows = Some(int(value)?),
                "cols" => cols = Some(int(value)?),
                "clique" => clique = Some(int(value)?),
                "path" => path = Some(int(value)?),
                "degree" => degree = Some(int(value)?),
                "retries" => spec.retry_cap = int(value)? as u32,
                "p" => p = Some(value.parse::<f64>().map_err(|_| bad(format!("`p` needs a number, got `{value}`")))?),
                "seed" => spec.seed = value.parse().map_err(|_| bad(format!("bad seed `{value}`")))?,
                "weights" => {
                    let (lo, hi) = value
                        .split_once("..")
                        .ok_or_else(|| bad(format!("weights must look like lo..hi, got `{value}`")))?;
                    let parse = |s: &str| s.parse::<u64>().map_err(|_| bad(format!("bad weight `{s}`")));
                    spec.weights = Some((parse(lo)?, parse(hi)?));
                }
                _ => return Err(bad(format!("unknown key `{key}`"))),
            }
        }
        let need = |v: Option<usize>, key: &str| v.ok_or_else(|| bad(format!("`{name}` needs `{key}`")));
        spec.family = match name {
            "gnm" => Family::Gnm {
                n: need(n, "n")?,
                m: need(m, "m")?,
            },
            "gnp" => Family::Gnp {
                n: need(n, "n")?,
                p: p.ok_or_else(|| bad("`gnp` needs `p`".into()))?,
            },
            "path" => Family::Path { n: need(n, "n")? },
            "cycle" => Family::Cycle { n: need(n, "n")? },
            "star" => Family::Star { n: need(n, "n")? },
            "complete" => Family::Complete { n: need(n, "n")? },
            "grid" => Family::Grid {
                rows: need(rows, "rows")?,
                cols: need(cols, "cols")?,
            },
            "barbell" => Family::Barbell {
                clique: need(clique, "clique")?,
                path: need(path, "path")?,
            },
            "bounded_degree" => Family::BoundedDegree {
                n: need(n, "n")?,
                m: m.unwrap_or(0),
                max_degree: need(degree, "degree")?,
            },
            _ => return Err(bad(format!("unknown family `{name}`"))),
        };
        Ok(spec)
    }
}
