use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use voterank::epidemic::{self, epidemic_threshold, Model, SimParams};
use voterank::graph::{compute_stats, degree_moments, load_edge_list};
use voterank::{generators, report, spreaders_for_fraction, Decrement, Graph, Method, MethodOptions};
use voterank_cli::experiment::{self, ExperimentSpec};
use voterank_cli::{output, read_seeds};

#[derive(Parser)]
#[command(name = "voterank", version, about = "Influential spreader selection and epidemic evaluation")]
struct Cli {
    /// More log output on stderr (repeat for debug).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summary statistics of an edge list.
    Stats {
        dataset: PathBuf,
        #[arg(long)]
        directed: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Select spreaders with one method.
    Rank {
        dataset: PathBuf,
        #[arg(long)]
        directed: bool,
        #[command(flatten)]
        selection: Selection,
        /// Write the whole node ranking instead of the top r (score-based methods only).
        #[arg(long)]
        full: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo spreading from a seed set.
    Simulate(SimulateArgs),
    /// Run a sweep described by a TOML experiment file.
    Experiment {
        spec: PathBuf,
        /// Overrides the file's `out`.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Overrides the file's `replicas`.
        #[arg(long)]
        replicas: Option<usize>,
    },
    /// Write a synthetic edge list.
    Generate {
        /// `ba` (preferential attachment) or `er` (G(n, p)).
        #[arg(long, default_value = "ba")]
        kind: String,
        #[arg(long)]
        n: usize,
        /// Links per new node for `ba`.
        #[arg(long, default_value_t = 3)]
        attach: usize,
        /// Link probability for `er`.
        #[arg(long, default_value_t = 0.01)]
        prob: f64,
        #[arg(long)]
        directed: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Selection {
    #[arg(long, default_value = "voterank")]
    method: String,
    /// Number of spreaders.
    #[arg(long, conflicts_with = "p")]
    r: Option<usize>,
    /// Fraction of nodes to select; r = round(p n), at least 1.
    #[arg(long)]
    p: Option<f64>,
    /// Constant decrement; the default is k^alpha/<k>.
    #[arg(long)]
    f: Option<f64>,
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    /// Forbid adjacent spreaders (voterank and kshell).
    #[arg(long)]
    non_adjacent: bool,
    /// Fill an exhausted election with the smallest remaining ids.
    #[arg(long)]
    pad: bool,
}

impl Selection {
    fn method(&self) -> Result<Method> {
        let method: Method = self.method.parse()?;
        Ok(match (method, self.non_adjacent) {
            (m, false) => m,
            (Method::VoteRank | Method::VoteRankNon, true) => Method::VoteRankNon,
            (Method::KShell | Method::KShellNon, true) => Method::KShellNon,
            (m, true) => bail!("--non-adjacent is not available for {m}"),
        })
    }

    fn options(&self) -> MethodOptions {
        MethodOptions {
            alpha: self.alpha,
            decrement: self.f.map_or(Decrement::DegreeScaled, Decrement::Constant),
            pad: self.pad,
            ..Default::default()
        }
    }

    fn count(&self, n: usize) -> Result<usize> {
        match (self.r, self.p) {
            (Some(r), _) => Ok(r),
            (None, Some(p)) if p > 0.0 && p <= 1.0 => {
                let r = spreaders_for_fraction(p, n);
                log::info!("r = round({p} * {n}) = {r}");
                Ok(r)
            }
            (None, Some(p)) => bail!("p = {p} outside (0, 1]"),
            (None, None) => bail!("one of --r or --p is required"),
        }
    }
}

#[derive(Args)]
struct SimulateArgs {
    dataset: PathBuf,
    #[arg(long)]
    directed: bool,
    /// Seed nodes: a spreader CSV or one label per line. Without it the
    /// seeds come from --method with --r or --p.
    #[arg(long)]
    seeds: Option<PathBuf>,
    #[command(flatten)]
    selection: Selection,
    #[arg(long, default_value = "sir-limited")]
    model: String,
    /// Infected rate mu/beta.
    #[arg(long, default_value_t = 1.5)]
    lambda: f64,
    /// Read --lambda as a multiple of the epidemic threshold.
    #[arg(long)]
    threshold_relative: bool,
    /// Recovery probability; defaults to 1/<k> (out-degree when directed).
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long, default_value_t = 100)]
    replicas: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    max_steps: Option<usize>,
    /// Write the compartment counts of replica 0 instead of the aggregate.
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn load(path: &Path, directed: bool) -> Result<Graph> {
    let g = load_edge_list(path, directed).with_context(|| format!("loading {}", path.display()))?;
    log::info!("{}: {} nodes, {} edges", path.display(), g.node_count(), g.edge_count());
    Ok(g)
}

fn finish(mut w: Box<dyn Write>) -> Result<()> {
    w.flush()?;
    Ok(())
}

fn stats(dataset: &Path, directed: bool, out: Option<&Path>) -> Result<()> {
    let g = load(dataset, directed)?;
    let s = compute_stats(&g);
    if out.is_some() {
        let h = s.heterogeneity.map_or("undefined".into(), |h| format!("{h:.4}"));
        println!(
            "n={} m={} <k>={:.4} k_max={} C={:.4} H={h}",
            s.nodes, s.edges, s.mean_degree, s.max_degree, s.mean_clustering
        );
    }
    let mut w = output(out)?;
    report::write_stats(&s, &mut w)?;
    finish(w)
}

fn rank(dataset: &Path, directed: bool, selection: &Selection, full: bool, out: Option<&Path>) -> Result<()> {
    let g = load(dataset, directed)?;
    let method = selection.method()?;
    let opts = selection.options();
    let mut w = output(out)?;
    if full {
        let Some(ranked) = method.ranking(&g, &opts) else {
            bail!("{method} produces a spreader sequence, not a full ranking");
        };
        report::write_ranking(&g, &ranked?, &mut w)?;
    } else {
        let r = selection.count(g.node_count())?;
        let set = method.select(&g, r, &opts)?;
        if set.exhausted {
            log::warn!("{method}: only {} of {r} spreaders could be selected", set.len());
        }
        report::write_spreaders(&g, &set, &mut w)?;
    }
    finish(w)
}

fn simulate(args: &SimulateArgs) -> Result<()> {
    let g = load(&args.dataset, args.directed)?;
    let model: Model = args.model.parse()?;
    let seeds = match &args.seeds {
        Some(path) => read_seeds(&g, path)?,
        None => {
            let r = args.selection.count(g.node_count())?;
            args.selection.method()?.select(&g, r, &args.selection.options())?.nodes
        }
    };
    let lambda = if args.threshold_relative {
        args.lambda * epidemic_threshold(&g)?
    } else {
        args.lambda
    };
    let beta = args.beta.unwrap_or_else(|| 1.0 / degree_moments(&g).0);
    let mut params = SimParams::from_rate(model, lambda, beta, seeds).rng_seed(args.seed);
    params.max_steps = args.max_steps;
    log::info!("{model}: mu = {}, beta = {}, {} seeds", params.mu, params.beta, params.seeds.len());
    let mut w = output(args.out.as_deref())?;
    if args.trace {
        let trace = epidemic::run(&g, &params)?;
        report::write_trace(&trace, g.node_count(), &mut w)?;
    } else {
        let agg = epidemic::monte_carlo(&g, &params, args.replicas)?;
        eprintln!(
            "F(t_c) = {:.6} +- {:.6} over {} replicas",
            agg.final_mean, agg.final_std, agg.replicas
        );
        report::write_aggregate(&agg, &mut w)?;
    }
    finish(w)
}

fn run_experiment(path: &Path, out: Option<PathBuf>, replicas: Option<usize>) -> Result<()> {
    let mut spec = ExperimentSpec::load(path)?;
    if let Some(r) = replicas {
        if r == 0 {
            bail!("replicas must be at least 1");
        }
        spec.replicas = r;
    }
    let out = out.or_else(|| spec.out.clone());
    let g = load(&spec.dataset, spec.directed)?;
    let cells = experiment::run(&spec, &g)?;
    let failed = cells.iter().filter(|c| c.outcome.is_err()).count();
    let mut w = output(out.as_deref())?;
    experiment::write_cells(&spec, &cells, &mut w)?;
    finish(w)?;
    if let Some(path) = &spec.curves {
        let mut w = output(Some(path))?;
        experiment::write_curves(&spec, &cells, &mut w)?;
        finish(w)?;
    }
    if failed > 0 {
        log::warn!("{failed} of {} cells failed; see the error column", cells.len());
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn generate(kind: &str, n: usize, attach: usize, prob: f64, directed: bool, seed: u64, out: Option<&Path>) -> Result<()> {
    let g = match kind {
        "ba" if directed => generators::barabasi_albert_directed(n, attach, seed),
        "ba" => generators::barabasi_albert(n, attach, seed),
        "er" => generators::erdos_renyi(n, prob, directed, seed),
        other => bail!("unknown graph kind {other:?}; expected ba or er"),
    };
    let mut w = output(out)?;
    writeln!(w, "# {kind} n={n} seed={seed} directed={directed}")?;
    for u in 0..g.node_count() {
        for &v in g.out_neighbors(u) {
            if directed || u < v {
                writeln!(w, "{u}\t{v}")?;
            }
        }
    }
    finish(w)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    let result = match &cli.command {
        Command::Stats { dataset, directed, out } => stats(dataset, *directed, out.as_deref()),
        Command::Rank { dataset, directed, selection, full, out } => rank(dataset, *directed, selection, *full, out.as_deref()),
        Command::Simulate(args) => simulate(args),
        Command::Experiment { spec, out, replicas } => run_experiment(spec, out.clone(), *replicas),
        Command::Generate { kind, n, attach, prob, directed, seed, out } => {
            generate(kind, *n, *attach, *prob, *directed, *seed, out.as_deref())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
