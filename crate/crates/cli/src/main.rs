//! `energylab` — construct graph families, report energies against their
//! bounds, run spectral Monte Carlo experiments, and execute the
//! verification suites.
//!
//! Exit codes: 0 success (all checks pass), 1 verification failure,
//! 2 usage or input error.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use energylab_core::bounds::energy_report;
use energylab_core::constructors;
use energylab_core::graph::Graph;
use energylab_core::graph6::{graph6_decode, graph6_encode};
use energylab_core::spectral::{
    adjacency_eigenvalues, ks_distance, mckay_cdf, mckay_support, semicircle_cdf,
    semicircle_transform, EsdHistogram,
};
use energylab_core::verify::{run_suite, SuiteOptions, SuiteReport, SUITE_NAMES};

#[derive(Parser)]
#[command(name = "energylab", version, about = "Graph energy toolkit", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph family; emits graph6 plus a JSON sidecar
    Construct {
        /// One of: complete, matching, cycle, paley, symplectic,
        /// symplectic-complement, ahrens-szekeres, pg-incidence, random-regular
        family: String,
        /// Family parameters (e.g. `paley 13`, `symplectic 2 2`, `random-regular 100 3`)
        params: Vec<u64>,
        /// Seed for randomized families
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write graph6 here (sidecar goes to `<out>.json`); stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Energy report for a graph6 input (stdin when no path given)
    Energy {
        /// Read graph6 from this file instead of stdin
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write the report here; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite and report per-check pass/fail
    Verify {
        /// Suite name; see `verify list`
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Override the suite's order parameter
        #[arg(long)]
        n: Option<usize>,
        /// Override the suite's trial count
        #[arg(long)]
        trials: Option<usize>,
        /// Override the suite's equality tolerance
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pooled eigenvalue histogram of random regular graphs with
    /// Kolmogorov-Smirnov statistics against the two limiting laws
    Esd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Histogram bins for the CSV output
        #[arg(long, default_value_t = 64)]
        bins: usize,
        /// Write the CSV here; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

type AnyError = Box<dyn std::error::Error + Send + Sync>;

fn run(command: Command) -> Result<ExitCode, AnyError> {
    match command {
        Command::Construct { family, params, seed, out } => construct(&family, &params, seed, out.as_deref()),
        Command::Energy { input, format, out } => energy_cmd(input.as_deref(), format, out.as_deref()),
        Command::Verify { suite, seed, n, trials, tol, format, out } => {
            verify_cmd(&suite, SuiteOptions { seed, n, trials, tol }, format, out.as_deref())
        }
        Command::Esd { n, k, trials, seed, bins, out } => esd_cmd(n, k, trials, seed, bins, out.as_deref()),
    }
}

fn construct(family: &str, params: &[u64], seed: u64, out: Option<&Path>) -> Result<ExitCode, AnyError> {
    let need = |count: usize| -> Result<(), AnyError> {
        if params.len() == count {
            Ok(())
        } else {
            Err(format!("family '{family}' takes {count} parameter(s), got {}", params.len()).into())
        }
    };
    let graph = match family {
        "complete" => {
            need(1)?;
            constructors::complete(params[0] as usize)
        }
        "matching" => {
            need(1)?;
            constructors::perfect_matching(params[0] as usize)?
        }
        "cycle" => {
            need(1)?;
            constructors::cycle(params[0] as usize)?
        }
        "paley" => {
            need(1)?;
            constructors::paley(params[0])?
        }
        "symplectic" => {
            need(2)?;
            constructors::symplectic_graph(params[0], params[1] as usize)?
        }
        "symplectic-complement" => {
            need(2)?;
            constructors::symplectic_complement(params[0], params[1] as usize)?
        }
        "ahrens-szekeres" => {
            need(1)?;
            constructors::ahrens_szekeres(params[0])?
        }
        "pg-incidence" => {
            need(1)?;
            constructors::pg_incidence(params[0])?
        }
        "random-regular" => {
            need(2)?;
            constructors::random_regular(params[0] as usize, params[1] as usize, seed)?
        }
        other => return Err(format!("unknown family '{other}'").into()),
    };
    let sidecar = json!({
        "schema": 1,
        "family": family,
        "params": params,
        "seed": seed,
        "n": graph.order(),
        "m": graph.size(),
        "k": graph.regular_degree(),
    });
    let encoded = graph6_encode(&graph);
    match out {
        Some(path) => {
            std::fs::write(path, format!("{encoded}\n"))?;
            let mut sidecar_path = path.as_os_str().to_owned();
            sidecar_path.push(".json");
            std::fs::write(sidecar_path, format!("{sidecar:#}\n"))?;
        }
        None => {
            println!("{encoded}");
            eprintln!("{sidecar:#}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn read_graph(input: Option<&Path>) -> Result<Graph, AnyError> {
    let text = match input {
        Some(path) => std::fs::read_to_string(path)?,
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    let line = text.lines().next().ok_or("empty graph6 input")?;
    Ok(graph6_decode(line)?)
}

fn write_output(out: Option<&Path>, body: &str) -> Result<(), AnyError> {
    match out {
        Some(path) => std::fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn energy_cmd(input: Option<&Path>, format: Format, out: Option<&Path>) -> Result<ExitCode, AnyError> {
    let graph = read_graph(input)?;
    let report = energy_report(&graph);
    let body = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report)?),
        Format::Csv => format!(
            "{}\n{}\n",
            energylab_core::EnergyReport::CSV_HEADER,
            report.csv_row()
        ),
        Format::Graph6 => return Err("energy reports serialize to json or csv".into()),
    };
    write_output(out, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn render_suite_text(report: &SuiteReport) -> String {
    let mut out = String::new();
    for check in &report.checks {
        let status = if check.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{status}  {}  measured={:.6e} bound={:.6e}\n",
            check.label, check.measured, check.bound
        ));
    }
    out.push_str(&format!(
        "suite {}: {}\n",
        report.suite,
        if report.pass { "all checks passed" } else { "FAILED" }
    ));
    out
}

fn verify_cmd(
    suite: &str,
    opts: SuiteOptions,
    format: Format,
    out: Option<&Path>,
) -> Result<ExitCode, AnyError> {
    if suite == "list" {
        for name in SUITE_NAMES {
            println!("{name}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    let report = run_suite(suite, &opts)?;
    let body = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report)?),
        Format::Csv | Format::Graph6 => render_suite_text(&report),
    };
    write_output(out, &body)?;
    if report.pass {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

/// Per-trial eigenvalues: raw spectrum and the semicircle-normalized one,
/// derived from a single eigensolve.
fn esd_trial(n: usize, k: usize, seed: u64) -> Result<(Vec<f64>, Vec<f64>), AnyError> {
    let g = constructors::random_regular(n, k, seed)?;
    let raw = adjacency_eigenvalues(&g);
    let normalized = semicircle_transform(n, k, &raw);
    Ok((raw, normalized))
}

fn esd_cmd(
    n: usize,
    k: usize,
    trials: usize,
    seed: u64,
    bins: usize,
    out: Option<&Path>,
) -> Result<ExitCode, AnyError> {
    if trials < 1 {
        return Err("esd needs at least one trial".into());
    }
    if k < 2 || k >= n {
        return Err(format!("esd needs 2 <= k < n, got n={n} k={k}").into());
    }
    let threads: usize = std::env::var("ENERGYLAB_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1);
    let results: Vec<(Vec<f64>, Vec<f64>)> = if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
        // trial-indexed seeds keep the merge deterministic under parallelism
        pool.install(|| {
            use rayon::prelude::*;
            (0..trials)
                .into_par_iter()
                .map(|t| esd_trial(n, k, seed.wrapping_add(t as u64)))
                .collect::<Result<Vec<_>, _>>()
        })?
    } else {
        (0..trials)
            .map(|t| esd_trial(n, k, seed.wrapping_add(t as u64)))
            .collect::<Result<Vec<_>, _>>()?
    };

    let lo = -mckay_support(k) - 0.5;
    let hi = k as f64 + 0.5;
    let mut hist = EsdHistogram::new(lo, hi, bins);
    // high-resolution histograms for the KS statistics
    let mut bulk = EsdHistogram::new(lo, hi, 4096);
    let mut normalized = EsdHistogram::new(-2.5, 2.5, 4096);
    for (raw, norm) in &results {
        hist.add_all(raw.iter().copied());
        // drop the top eigenvalue: it is an atom at k outside the bulk law
        bulk.add_all(raw.iter().skip(1).copied());
        normalized.add_all(norm.iter().copied());
    }

    let scale = ((k * (n - k)) as f64 / n as f64).sqrt();
    let mut csv = String::from("bin_lo,bin_hi,count,mckay_cdf,semicircle_cdf\n");
    for (i, &count) in hist.counts().iter().enumerate() {
        let (lo, hi) = (hist.edges()[i], hist.edges()[i + 1]);
        csv.push_str(&format!(
            "{lo},{hi},{count},{},{}\n",
            mckay_cdf(k, hi),
            semicircle_cdf(hi / scale)
        ));
    }

    let stats = json!({
        "schema": 1,
        "n": n,
        "k": k,
        "trials": trials,
        "seed": seed,
        "eigenvalues": hist.n_total(),
        "ks_mckay_bulk": ks_distance(&bulk, |x| mckay_cdf(k, x))?,
        "ks_semicircle_normalized": ks_distance(&normalized, semicircle_cdf)?,
    });
    match out {
        Some(path) => {
            std::fs::write(path, csv)?;
            println!("{stats:#}");
        }
        None => {
            print!("{csv}");
            eprintln!("{stats:#}");
        }
    }
    Ok(ExitCode::SUCCESS)
}
