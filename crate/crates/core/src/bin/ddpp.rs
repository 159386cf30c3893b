//! Command-line front end. Documents go to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success (routed), 3 blocked, 4 search/oracle disagreement,
//! 1 usage or input error.

use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use ddpp::bench::{lobe_bench, to_csv};
use ddpp::compare::{compare, CompareError, CounterexampleBundle};
use ddpp::generate::{desk_instance, lobe_network, random_network, RandomNetworkParams};
use ddpp::oracle::{budget_from_env, oracle_solve, OracleError, OracleOptions};
use ddpp::search::{solve, SearchOptions};
use ddpp::sim::{self, gen_traffic, TrafficDocument, TrafficParams};
use ddpp::spectrum::{CostModel, ModulationTable, Relation};
use ddpp::{load_network, Demand, Network};
use serde::Serialize;

const EXIT_BLOCKED: u8 = 3;
const EXIT_DISAGREE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "ddpp",
    version,
    about = "Exact dedicated path protection for elastic optical networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a minimal-cost pair of link-disjoint routes.
    Solve(SolveArgs),
    /// Brute-force reference minimum.
    Oracle(OracleArgs),
    /// Check the search against the oracle on one instance or a seeded corpus.
    Compare(CompareArgs),
    /// Lobe worst-case table as CSV.
    LobeBench(LobeArgs),
    /// Generate a network document.
    GenNet(GenNetArgs),
    /// Generate a traffic document for a network.
    GenTraffic(GenTrafficArgs),
    /// Replay a traffic document against a network.
    Simulate(SimulateArgs),
}

#[derive(Args)]
struct Instance {
    #[arg(long)]
    net: PathBuf,
    #[arg(long)]
    demand: PathBuf,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    instance: Instance,
    #[arg(long, default_value = "prime")]
    relation: Relation,
    #[arg(long)]
    max_route_cost: Option<u64>,
    /// `additive`, or `modulation FILE` with a step table document.
    #[arg(long, num_args = 1..=2, value_names = ["MODEL", "FILE"])]
    cost_model: Vec<String>,
    /// Keep every efficient label at the destination.
    #[arg(long)]
    all_efficient: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    instance: Instance,
    #[arg(long)]
    max_route_cost: Option<u64>,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long, requires = "demand", conflicts_with = "corpus")]
    net: Option<PathBuf>,
    #[arg(long, requires = "net")]
    demand: Option<PathBuf>,
    /// Number of seeded desk-scale instances to check.
    #[arg(long)]
    corpus: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    max_route_cost: Option<u64>,
    /// Where to write counterexample bundles on disagreement.
    #[arg(long)]
    bundle_out: Option<PathBuf>,
}

#[derive(Args)]
struct LobeArgs {
    #[arg(long)]
    m_max: u32,
    #[arg(long, default_value = "prime")]
    relation: Relation,
}

#[derive(Args)]
struct GenNetArgs {
    /// Build the lobe worst case with this many intermediate nodes.
    #[arg(long, conflicts_with_all = ["nodes", "avg_degree", "fill", "seed"])]
    lobe: Option<u32>,
    #[arg(long, default_value_t = 8)]
    nodes: usize,
    #[arg(long, default_value_t = 3.0)]
    avg_degree: f64,
    #[arg(long, default_value_t = 8)]
    units: u32,
    #[arg(long, default_value_t = 1.0)]
    fill: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct GenTrafficArgs {
    #[arg(long)]
    net: PathBuf,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 2.0)]
    mean_hold: f64,
    #[arg(long, default_value_t = 1.0)]
    mean_gap: f64,
    #[arg(long, default_value_t = 1)]
    units_min: u32,
    #[arg(long, default_value_t = 1)]
    units_max: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    net: PathBuf,
    #[arg(long)]
    traffic: PathBuf,
    #[arg(long, default_value = "prime")]
    relation: Relation,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_net(path: &Path) -> Result<Network> {
    load_network(&read(path)?).with_context(|| format!("loading {}", path.display()))
}

fn read_demand(path: &Path) -> Result<Demand> {
    serde_json::from_str(&read(path)?).with_context(|| format!("parsing demand {}", path.display()))
}

fn out(text: &str) -> Result<()> {
    let mut stdout = std::io::stdout().lock();
    match stdout
        .write_all(text.as_bytes())
        .and_then(|()| stdout.flush())
    {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit(doc: &impl Serialize) -> Result<()> {
    out(&(serde_json::to_string_pretty(doc)? + "\n"))
}

fn cost_model(values: &[String]) -> Result<CostModel> {
    match values {
        [] => Ok(CostModel::Additive),
        [m] if m == "additive" => Ok(CostModel::Additive),
        [m, file] if m == "modulation" => {
            let table: ModulationTable = serde_json::from_str(&read(Path::new(file))?)
                .with_context(|| format!("parsing modulation table {file}"))?;
            Ok(CostModel::Modulation(table))
        }
        other => bail!("--cost-model expects `additive` or `modulation FILE`, got {other:?}"),
    }
}

fn routed_code(routed: bool) -> ExitCode {
    if routed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_BLOCKED)
    }
}

fn cmd_solve(a: SolveArgs) -> Result<ExitCode> {
    let opts = SearchOptions {
        relation: a.relation,
        max_route_cost: a.max_route_cost,
        cost_model: cost_model(&a.cost_model)?,
        enumerate_all: a.all_efficient,
    };
    opts.validate()?;
    let net = read_net(&a.instance.net)?;
    let demand = read_demand(&a.instance.demand)?;
    let sol = solve(&net, &demand, &opts)?;
    emit(&sol.to_document(&net))?;
    Ok(routed_code(sol.routing.is_some()))
}

fn cmd_oracle(a: OracleArgs) -> Result<ExitCode> {
    let net = read_net(&a.instance.net)?;
    let demand = read_demand(&a.instance.demand)?;
    let opts = OracleOptions {
        max_route_cost: a.max_route_cost,
        budget: budget_from_env(),
        ..Default::default()
    };
    let res = oracle_solve(&net, &demand, &opts)?;
    emit(&res)?;
    Ok(routed_code(res.best.is_some()))
}

#[derive(Serialize)]
struct CorpusSummary {
    instances: u64,
    skipped_over_budget: u64,
    routed: u64,
    disagreements: Vec<u64>,
}

fn cmd_compare(a: CompareArgs) -> Result<ExitCode> {
    let budget = budget_from_env();
    let mut bundles: Vec<CounterexampleBundle> = Vec::new();
    match (a.net, a.demand, a.corpus) {
        (Some(net), Some(demand), None) => {
            let net = read_net(&net)?;
            let demand = read_demand(&demand)?;
            let cmp = compare(&net, &demand, a.max_route_cost, budget)?;
            emit(&cmp.report)?;
            bundles.extend(cmp.bundle);
        }
        (None, None, Some(count)) => {
            let mut summary = CorpusSummary {
                instances: 0,
                skipped_over_budget: 0,
                routed: 0,
                disagreements: vec![],
            };
            for seed in a.seed..a.seed + count {
                let inst = desk_instance(seed);
                match compare(&inst.net, &inst.demand, a.max_route_cost, budget) {
                    Ok(cmp) => {
                        summary.instances += 1;
                        summary.routed += u64::from(cmp.report.oracle_cost.is_some());
                        if let Some(b) = cmp.bundle {
                            summary.disagreements.push(seed);
                            bundles.push(b);
                        }
                    }
                    Err(CompareError::Oracle(OracleError::BudgetExceeded { .. })) => {
                        summary.skipped_over_budget += 1
                    }
                    Err(e) => return Err(e).with_context(|| format!("corpus seed {seed}")),
                }
            }
            emit(&summary)?;
        }
        _ => bail!("compare needs either --net and --demand, or --corpus N"),
    }
    if bundles.is_empty() {
        return Ok(ExitCode::SUCCESS);
    }
    match a.bundle_out {
        Some(path) => {
            std::fs::write(&path, serde_json::to_string_pretty(&bundles)?)
                .with_context(|| format!("writing {}", path.display()))?;
            eprintln!(
                "{} disagreement(s); bundles written to {}",
                bundles.len(),
                path.display()
            );
        }
        None => eprintln!(
            "{} disagreement(s); pass --bundle-out to keep the bundles",
            bundles.len()
        ),
    }
    Ok(ExitCode::from(EXIT_DISAGREE))
}

fn cmd_lobe_bench(a: LobeArgs) -> Result<ExitCode> {
    if a.m_max == 0 {
        bail!("--m-max must be at least 1");
    }
    out(&to_csv(&lobe_bench(a.m_max, a.relation)?))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen_net(a: GenNetArgs) -> Result<ExitCode> {
    let net = match a.lobe {
        Some(m) => lobe_network(m, a.units)?,
        None => random_network(&RandomNetworkParams {
            nodes: a.nodes,
            avg_degree: a.avg_degree,
            units: a.units,
            fill: a.fill,
            seed: a.seed,
        })?,
    };
    out(&(net.to_json() + "\n"))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen_traffic(a: GenTrafficArgs) -> Result<ExitCode> {
    let net = read_net(&a.net)?;
    let params = TrafficParams {
        count: a.count,
        mean_hold: a.mean_hold,
        mean_gap: a.mean_gap,
        units_range: (a.units_min, a.units_max),
        seed: a.seed,
    };
    emit(&TrafficDocument {
        events: gen_traffic(&net, &params)?,
    })?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SimulateDocument {
    report: sim::SimReport,
    timing: sim::SimTiming,
}

fn cmd_simulate(a: SimulateArgs) -> Result<ExitCode> {
    let net = read_net(&a.net)?;
    let doc: TrafficDocument = serde_json::from_str(&read(&a.traffic)?)
        .with_context(|| format!("parsing {}", a.traffic.display()))?;
    let run = sim::run(&net, &doc.events, &SearchOptions::new(a.relation))?;
    emit(&SimulateDocument {
        report: run.report,
        timing: run.timing,
    })?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Compare(a) => cmd_compare(a),
        Command::LobeBench(a) => cmd_lobe_bench(a),
        Command::GenNet(a) => cmd_gen_net(a),
        Command::GenTraffic(a) => cmd_gen_traffic(a),
        Command::Simulate(a) => cmd_simulate(a),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::FAILURE
    })
}
