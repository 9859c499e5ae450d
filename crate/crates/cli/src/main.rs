use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use diamapx_core::bench::{run_bench, run_method, write_csv, BenchConfig, MethodParams};
use diamapx_core::estimators::{DEFAULT_RERUN_CAP, DEFAULT_SAMPLE_CONST};
use diamapx_core::exact::DEFAULT_APSP_CAP;
use diamapx_core::generate::{generate, GenSpec};
use diamapx_core::hardness::{build_diameter_instance, ExpectedDiameter, Reduction, DEFAULT_NODE_CAP};
use diamapx_core::{
    exact_diameter, parse_edge_list, write_edge_list, Diameter, EstimateError, Graph, Method, ParseOptions,
};

/// Exit code for a graph whose diameter is infinite.
const EXIT_INFINITE: u8 = 2;

#[derive(Parser)]
#[command(name = "diamapx", version, about = "Approximate and exact graph diameter")]
struct Cli {
    /// Seed for randomized methods and generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Largest n for which the exact oracle is run by `bench`.
    #[arg(long, global = true, default_value_t = DEFAULT_APSP_CAP)]
    oracle_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Edge-list or DIMACS file.
    input: PathBuf,
    /// Read edges as directed arcs.
    #[arg(long)]
    directed: bool,
    /// Decimal digits kept when scaling fractional weights to integers.
    #[arg(long, default_value_t = 0)]
    weight_scale: u32,
}

#[derive(Args)]
struct MethodArgs {
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    htilde: Option<u64>,
    /// Sample-size constant for rv and sampling.
    #[arg(long, default_value_t = DEFAULT_SAMPLE_CONST)]
    sample_const: f64,
    #[arg(long, default_value_t = DEFAULT_RERUN_CAP)]
    rerun_cap: u32,
    /// Diameter threshold exponent for sampling (D >= n^eps).
    #[arg(long, default_value_t = 0.5)]
    eps: f64,
    /// Relative error for sampling.
    #[arg(long, default_value_t = 0.25)]
    sampling_delta: f64,
}

impl MethodArgs {
    fn params(&self) -> MethodParams {
        MethodParams {
            s: self.s,
            delta: self.delta,
            htilde: self.htilde,
            sample_const: self.sample_const,
            rerun_cap: self.rerun_cap,
            eps: self.eps,
            sampling_delta: self.sampling_delta,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Estimate the diameter of a graph file.
    Estimate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, short)]
        method: Method,
        #[command(flatten)]
        method_args: MethodArgs,
    },
    /// Exact diameter with a witness pair.
    Exact {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Benchmark methods over a corpus, writing CSV.
    Bench {
        /// Generator specs separated by `;`.
        #[arg(long, required_unless_present = "corpus_file")]
        corpus: Option<String>,
        /// File with one generator spec or graph path per line.
        #[arg(long)]
        corpus_file: Option<PathBuf>,
        /// Comma-separated method names.
        #[arg(long, value_delimiter = ',', default_value = "rv")]
        methods: Vec<Method>,
        #[arg(long, default_value_t = 1)]
        reps: u32,
        /// Output CSV; stdout if omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[command(flatten)]
        method_args: MethodArgs,
    },
    /// Build a 2-vs-3 diameter instance from a k-dominating-set instance.
    Reduce {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, short)]
        k: usize,
        /// Output edge list; metadata goes to `<output>.meta`.
        #[arg(long, short)]
        output: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        node_cap: usize,
    },
    /// Generate a graph from a spec such as `gnm:n=100,m=300`.
    Gen {
        spec: String,
        /// Output edge list; stdout if omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn read_graph(input: &InputArgs) -> Result<Graph> {
    let text = fs::read_to_string(&input.input).with_context(|| format!("reading {}", input.input.display()))?;
    let options = ParseOptions {
        directed: input.directed,
        weight_scale: input.weight_scale,
    };
    parse_edge_list(&text, options).with_context(|| format!("parsing {}", input.input.display()))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_corpus(corpus: Option<&str>, corpus_file: Option<&Path>, seed: u64) -> Result<Vec<(String, Graph)>> {
    let mut entries: Vec<String> = Vec::new();
    if let Some(c) = corpus {
        entries.extend(c.split(';').map(str::trim).filter(|s| !s.is_empty()).map(String::from));
    }
    if let Some(path) = corpus_file {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        entries.extend(
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(String::from),
        );
    }
    entries
        .into_iter()
        .map(|entry| {
            let graph = if Path::new(&entry).is_file() {
                let text = fs::read_to_string(&entry)?;
                parse_edge_list(&text, ParseOptions::default()).with_context(|| format!("parsing {entry}"))?
            } else {
                let mut spec: GenSpec = entry.parse()?;
                if !entry.contains("seed=") {
                    spec.seed = seed;
                }
                generate(&spec)?
            };
            Ok((entry, graph))
        })
        .collect()
}

fn run(cli: Cli) -> Result<ExitCode> {
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .context("configuring thread pool")?;
    }
    match cli.command {
        Command::Estimate {
            input,
            method,
            method_args,
        } => {
            let g = read_graph(&input)?;
            let start = Instant::now();
            let result = run_method(&g, method, &method_args.params(), cli.seed);
            let millis = start.elapsed().as_secs_f64() * 1e3;
            let e = match result {
                Ok(e) => e,
                Err(EstimateError::InfiniteDiameter) => {
                    println!("method={method}");
                    println!("value=inf");
                    return Ok(ExitCode::from(EXIT_INFINITE));
                }
                Err(err) => return Err(err.into()),
            };
            println!("method={}", e.method);
            println!("value={}", e.value);
            println!("witness={}", e.witness);
            let p = e.params;
            for (key, value) in [
                ("s", p.s.map(|v| v.to_string())),
                ("delta", p.delta.map(|v| v.to_string())),
                ("htilde", p.htilde.map(|v| v.to_string())),
                ("seed", p.seed.map(|v| v.to_string())),
                ("sample_size", p.sample_size.map(|v| v.to_string())),
            ] {
                if let Some(value) = value {
                    println!("{key}={value}");
                }
            }
            println!("reruns={}", e.reruns);
            println!("millis={millis:.3}");
        }
        Command::Exact { input } => {
            let g = read_graph(&input)?;
            let start = Instant::now();
            let result = exact_diameter(&g);
            let millis = start.elapsed().as_secs_f64() * 1e3;
            println!("diameter={}", result.diameter);
            if let Some((a, b)) = result.witness {
                println!("witness={a},{b}");
            }
            println!("millis={millis:.3}");
            if result.diameter == Diameter::Infinite {
                return Ok(ExitCode::from(EXIT_INFINITE));
            }
        }
        Command::Bench {
            corpus,
            corpus_file,
            methods,
            reps,
            output,
            method_args,
        } => {
            let instances = load_corpus(corpus.as_deref(), corpus_file.as_deref(), cli.seed)?;
            let config = BenchConfig {
                methods,
                reps,
                seed: cli.seed,
                oracle_cap: cli.oracle_cap,
                params: method_args.params(),
            };
            let rows = run_bench(&instances, &config);
            let mut buf = Vec::new();
            write_csv(&mut buf, &rows)?;
            write_output(output.as_deref(), &String::from_utf8(buf)?)?;
        }
        Command::Reduce {
            input,
            k,
            output,
            node_cap,
        } => {
            let g = read_graph(&input)?;
            if g.is_directed() {
                bail!("reduce needs an undirected graph");
            }
            let reduction = build_diameter_instance(&g, k, node_cap)?;
            let mut meta_path = output.clone().into_os_string();
            meta_path.push(".meta");
            match &reduction {
                Reduction::EarlyExit { dominating, .. } => {
                    println!("early_exit=true");
                    println!("dominating_set={}", join(dominating));
                }
                Reduction::Built(inst) => {
                    fs::write(&output, write_edge_list(&inst.graph))
                        .with_context(|| format!("writing {}", output.display()))?;
                    println!("nodes={}", inst.graph.n());
                    println!("expected_diameter={}", inst.expected.value());
                    match &inst.expected {
                        ExpectedDiameter::Three { certificate } => println!("certificate={}", join(certificate)),
                        ExpectedDiameter::Two => println!("certificate=none"),
                    }
                }
            }
            fs::write(&meta_path, reduction.metadata())
                .with_context(|| format!("writing {}", PathBuf::from(&meta_path).display()))?;
        }
        Command::Gen { spec, output } => {
            let text = spec;
            let mut spec: GenSpec = text.parse()?;
            if !text.contains("seed=") {
                spec.seed = cli.seed;
            }
            let g = generate(&spec)?;
            let text = format!("{}\n{}", spec.provenance(), write_edge_list(&g));
            write_output(output.as_deref(), &text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn join(items: &[usize]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { ExitCode::FAILURE } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            if let Some(EstimateError::InfiniteDiameter) = err.downcast_ref::<EstimateError>() {
                eprintln!("error: {err}");
                return ExitCode::from(EXIT_INFINITE);
            }
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
