use std::net::{IpAddr, SocketAddr};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context;
use anysort_bench::output::sidecar_path;
use anysort_bench::{run_profile, run_termination, Estimator, ExperimentConfig};
use anysort_core::algorithms::trace::trace;
use anysort_core::{reference, Algorithm, Permutation};
use anysort_service::ServiceConfig;

use crate::args::{BenchKind, Cli, Command, ExperimentArgs, ServeArgs, TraceArgs, TraceEstimator};
use crate::Failure;

pub fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Trace(args) => cmd_trace(args),
        Command::Bench { kind } => cmd_bench(kind),
        Command::Verify { only } => cmd_verify(only),
        Command::Serve(args) => cmd_serve(args),
    }
}

fn init_logging(default: &str) {
    let filter = tracing_subscriber::EnvFilter::try_from_default_env()
        .unwrap_or_else(|_| tracing_subscriber::EnvFilter::new(default));
    let _ = tracing_subscriber::fmt()
        .with_env_filter(filter)
        .with_writer(std::io::stderr)
        .try_init();
}

fn parse_algorithm(id: &str) -> Result<Algorithm, Failure> {
    id.trim().parse().map_err(|e: anysort_core::CoreError| Failure::Usage(e.to_string()))
}

fn parse_list(list: &str) -> Result<Permutation, Failure> {
    let ranks = list
        .split(',')
        .map(|v| v.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Usage(format!("malformed list {list:?}: {e}")))?;
    Permutation::new(ranks).map_err(|e| Failure::Usage(format!("malformed list {list:?}: {e}")))
}

fn cmd_trace(args: TraceArgs) -> Result<ExitCode, Failure> {
    let algorithm = parse_algorithm(&args.algo)?;
    let truth = parse_list(&args.list)?;
    for mut line in trace(algorithm, &truth)? {
        let rho = match args.estimator {
            TraceEstimator::Native => "NA".to_string(),
            _ => line.rho_error.to_string(),
        };
        if args.estimator == TraceEstimator::Rho {
            line.native_error = None;
        }
        let native = line.native_error.map_or_else(|| "NA".to_string(), |s| s.to_string());
        println!("{}\t{}\t{}\t{}\t{native}\t{rho}", line.k, line.i, line.j, line.lo);
    }
    Ok(ExitCode::SUCCESS)
}

fn experiment_config(args: &ExperimentArgs, default_out: &str, default_sizes: Vec<usize>) -> Result<ExperimentConfig, Failure> {
    let algorithms = if args.algos.is_empty() {
        Algorithm::ALL.to_vec()
    } else {
        args.algos.iter().map(|a| parse_algorithm(a)).collect::<Result<_, _>>()?
    };
    let estimators = if args.estimators.is_empty() {
        None
    } else {
        let parsed = args
            .estimators
            .iter()
            .map(|e| match e.trim() {
                "native" => Ok(Estimator::Native),
                "rho" => Ok(Estimator::Rho),
                other => Err(Failure::Usage(format!("unknown estimator {other:?}, expected native or rho"))),
            })
            .collect::<Result<_, _>>()?;
        Some(parsed)
    };
    let cfg = ExperimentConfig {
        algorithms,
        sizes: if args.sizes.is_empty() { default_sizes } else { args.sizes.clone() },
        trials: args.trials,
        seed: args.seed,
        checkpoints: args.checkpoints,
        extra_checkpoints: args.at.clone(),
        estimators,
        output: Some(args.out.clone().unwrap_or_else(|| PathBuf::from(default_out))),
        long_format: args.long,
        jobs: args.jobs,
    };
    let cfg = match &args.config {
        Some(path) => override_from_file(cfg, path)?,
        None => cfg,
    };
    cfg.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(cfg)
}

/// Fields present in the JSON file replace the values given by flags.
fn override_from_file(cfg: ExperimentConfig, path: &PathBuf) -> Result<ExperimentConfig, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {}: {e}", path.display())))?;
    let file: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("parsing {}: {e}", path.display())))?;
    let serde_json::Value::Object(fields) = file else {
        return Err(Failure::Usage(format!("{} must hold a JSON object", path.display())));
    };
    let mut merged = serde_json::to_value(&cfg)?;
    for (k, v) in fields {
        merged[k] = v;
    }
    serde_json::from_value(merged).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn cmd_bench(kind: BenchKind) -> Result<ExitCode, Failure> {
    init_logging("warn");
    match kind {
        BenchKind::Termination(args) => {
            let cfg = experiment_config(&args, "termination.csv", vec![8, 16, 32, 64, 128, 256])?;
            let stats = run_termination(&cfg)?;
            println!("{:<18} {:>6} {:>7} {:>10} {:>10} {:>10}", "algorithm", "n", "trials", "median%", "q2.5%", "q97.5%");
            for r in &stats.rows {
                println!(
                    "{:<18} {:>6} {:>7} {:>10.2} {:>10.2} {:>10.2}",
                    r.algorithm.id(),
                    r.n,
                    r.trials,
                    r.overhead.median,
                    r.overhead.q025,
                    r.overhead.q975
                );
            }
            report_files(&cfg);
        }
        BenchKind::Profile(args) => {
            let cfg = experiment_config(&args, "profile.csv", vec![1000])?;
            let series = run_profile(&cfg)?;
            println!("{:<18} {:>7} {:>6} {:>7} {:>10} {:>10}", "algorithm", "est", "n", "k", "median%", "q97.5%");
            for &n in &cfg.sizes {
                let mut ks: Vec<usize> = cfg.extra_checkpoints.clone();
                if n == 1000 {
                    ks.extend([4000, 6000, 8000]);
                }
                for r in series.rows.iter().filter(|r| r.n == n && ks.contains(&r.k)) {
                    println!(
                        "{:<18} {:>7} {:>6} {:>7} {:>10.2} {:>10.2}",
                        r.algorithm.id(),
                        r.estimator.to_string(),
                        r.n,
                        r.k,
                        100.0 * r.error.median,
                        100.0 * r.error.q975
                    );
                }
            }
            report_files(&cfg);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn report_files(cfg: &ExperimentConfig) {
    if let Some(out) = &cfg.output {
        eprintln!("wrote {} and {}", out.display(), sidecar_path(out).display());
    }
}

fn cmd_verify(only: Option<String>) -> Result<ExitCode, Failure> {
    let reports = match only {
        Some(id) => vec![reference::run_check(&id).map_err(|e| Failure::Usage(e.to_string()))?],
        None => reference::run_all(),
    };
    let mut ok = true;
    for r in &reports {
        println!("{} {} ({})", if r.passed() { "PASS" } else { "FAIL" }, r.id, r.title);
        for m in &r.mismatches {
            println!("    {m}");
        }
        ok &= r.passed();
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn cmd_serve(args: ServeArgs) -> Result<ExitCode, Failure> {
    init_logging("info");
    let host: IpAddr = args
        .host
        .parse()
        .map_err(|e| Failure::Usage(format!("invalid host {:?}: {e}", args.host)))?;
    if !(args.ttl_hours.is_finite() && args.ttl_hours > 0.0) {
        return Err(Failure::Usage("--ttl-hours must be positive".into()));
    }
    let config = ServiceConfig {
        max_items: args.max_items,
        idle_ttl: Duration::from_secs_f64(args.ttl_hours * 3600.0),
        snapshot_dir: args.snapshot_dir,
        allowed_origin: args.origin,
    };
    let runtime = tokio::runtime::Runtime::new().context("starting the async runtime")?;
    runtime
        .block_on(anysort_service::serve(SocketAddr::new(host, args.port), config))
        .context("serving")?;
    Ok(ExitCode::SUCCESS)
}
