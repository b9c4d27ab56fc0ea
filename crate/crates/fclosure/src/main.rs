//! Command-line front end: parses arguments, loads the ring, and hands the
//! job to the library's report layer. Exit codes: 0 certified, 2 uncertified
//! (a cap was hit or a verdict was inconclusive), 1 error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fclosure::config::Config;
use fclosure::corpus;
use fclosure::parse::parse_ring_file;
use fclosure::report::{run_job, JobSpec, Outcome};
use fclosure::ring::Ring;

#[derive(Parser)]
#[command(name = "fclosure", version, about = "Closure operations on parameter ideals over F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Ring file (path, or the name of a bundled corpus ring)
    #[arg(long)]
    ring: String,
    /// Write the full JSON report to this path
    #[arg(long)]
    json: Option<PathBuf>,
    /// Chain cap for Frobenius exponents (closure.cap_e)
    #[arg(long = "cap-e")]
    cap_e: Option<u32>,
    /// Chain cap for colon indices (closure.cap_n)
    #[arg(long = "cap-n")]
    cap_n: Option<u64>,
    /// Sample count for probing commands (probe.samples)
    #[arg(long)]
    samples: Option<usize>,
    /// Sampling seed (probe.seed)
    #[arg(long)]
    seed: Option<u64>,
    /// Config override KEY=VAL (repeatable); see the README for keys
    #[arg(long = "config", value_name = "KEY=VAL")]
    config: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Frobenius closure q^F of an m-primary homogeneous ideal
    Fclose {
        #[command(flatten)]
        common: Common,
        /// Comma-separated ideal generators
        #[arg(long)]
        ideal: String,
    },
    /// Limit closure q^lim of a system of parameters
    Limclose {
        #[command(flatten)]
        common: Common,
        /// Comma-separated parameter sequence (order matters)
        #[arg(long)]
        gens: String,
    },
    /// q^F + q^lim
    Flim {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        gens: String,
    },
    /// (q^lim)^F
    Limf {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        gens: String,
    },
    /// Bounded tight-closure membership probe with an asserted test element
    Tprobe {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
        /// Element whose membership in the tight closure is probed
        #[arg(long)]
        element: String,
        /// Asserted test element (unchecked)
        #[arg(long = "test-element")]
        test_element: String,
    },
    /// Colength of an ideal
    Length {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
    },
    /// Hilbert-Samuel multiplicity of a parameter sequence
    Mult {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        gens: String,
    },
    /// Full invariant record for one parameter sequence
    Invariants {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        gens: String,
    },
    /// Sampled constancy probe of a surplus quantity
    Probe {
        #[command(flatten)]
        common: Common,
        /// One of: surplus_buchsbaum, surplus_f, surplus_f_alt,
        /// len_qflim_over_q, len_qF_over_q
        #[arg(long)]
        quantity: String,
    },
    /// Exact maximal-ideal containment checks m*(q^F+q^lim) in q and m*q^lim in q
    Mcontain {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        gens: String,
    },
    /// Search for a certifying parameter ideal Q (Cohen-Macaulay rings)
    Corgor {
        #[command(flatten)]
        common: Common,
    },
    /// F-purity via Fedder's criterion
    Fedder {
        #[command(flatten)]
        common: Common,
    },
    /// Replay the bundled corpus and compare against the golden reports
    CheckCorpus {
        /// Config override KEY=VAL (repeatable)
        #[arg(long = "config", value_name = "KEY=VAL")]
        config: Vec<String>,
        /// Regenerate the golden files into this directory instead of checking
        #[arg(long, value_name = "DIR")]
        update: Option<PathBuf>,
    },
}

fn load_ring(name: &str) -> Result<Ring, fclosure::Error> {
    if let Ok(text) = std::fs::read_to_string(name) {
        return parse_ring_file(&text);
    }
    if let Some(text) = corpus::corpus_ring_text(name) {
        return parse_ring_file(text);
    }
    Err(fclosure::Error::Invalid(format!(
        "cannot read ring file `{name}` (not a file, not a bundled corpus name)"
    )))
}

fn build_config(common: &Common) -> Result<Config, fclosure::Error> {
    let mut cfg = Config::default();
    cfg.apply_overrides(&common.config)?;
    if let Some(e) = common.cap_e {
        cfg.cap_e = e;
    }
    if let Some(n) = common.cap_n {
        cfg.cap_n = n;
    }
    if let Some(s) = common.samples {
        cfg.probe_samples = s;
    }
    if let Some(s) = common.seed {
        cfg.seed = s;
    }
    Ok(cfg)
}

fn finish(outcome: Outcome, common: &Common) -> Result<i32, fclosure::Error> {
    println!("{}", outcome.summary);
    for caveat in &outcome.report.caveats {
        println!("  note: {caveat}");
    }
    if let Some(path) = &common.json {
        std::fs::write(path, serde_json::to_string_pretty(&outcome.report)? + "\n")?;
        println!("  report: {}", path.display());
    }
    Ok(outcome.status.code())
}

fn dispatch(cli: Cli) -> Result<i32, fclosure::Error> {
    let (common, mut job) = match &cli.command {
        Command::Fclose { common, ideal } => {
            let mut j = JobSpec::new("fclose", &common.ring);
            j.ideal = Some(ideal.clone());
            (common.clone(), j)
        }
        Command::Limclose { common, gens } => {
            let mut j = JobSpec::new("limclose", &common.ring);
            j.gens = Some(gens.clone());
            (common.clone(), j)
        }
        Command::Flim { common, gens } => {
            let mut j = JobSpec::new("flim", &common.ring);
            j.gens = Some(gens.clone());
            (common.clone(), j)
        }
        Command::Limf { common, gens } => {
            let mut j = JobSpec::new("limf", &common.ring);
            j.gens = Some(gens.clone());
            (common.clone(), j)
        }
        Command::Tprobe { common, ideal, element, test_element } => {
            let mut j = JobSpec::new("tprobe", &common.ring);
            j.ideal = Some(ideal.clone());
            j.element = Some(element.clone());
            j.test_element = Some(test_element.clone());
            (common.clone(), j)
        }
        Command::Length { common, ideal } => {
            let mut j = JobSpec::new("length", &common.ring);
            j.ideal = Some(ideal.clone());
            (common.clone(), j)
        }
        Command::Mult { common, gens } => {
            let mut j = JobSpec::new("mult", &common.ring);
            j.gens = Some(gens.clone());
            (common.clone(), j)
        }
        Command::Invariants { common, gens } => {
            let mut j = JobSpec::new("invariants", &common.ring);
            j.gens = Some(gens.clone());
            (common.clone(), j)
        }
        Command::Probe { common, quantity } => {
            let mut j = JobSpec::new("probe", &common.ring);
            j.quantity = Some(quantity.clone());
            (common.clone(), j)
        }
        Command::Mcontain { common, gens } => {
            let mut j = JobSpec::new("mcontain", &common.ring);
            j.gens = Some(gens.clone());
            (common.clone(), j)
        }
        Command::Corgor { common } => (common.clone(), JobSpec::new("corgor", &common.ring)),
        Command::Fedder { common } => (common.clone(), JobSpec::new("fedder", &common.ring)),
        Command::CheckCorpus { config, update } => {
            let mut cfg = Config::default();
            cfg.apply_overrides(config)?;
            if let Some(dir) = update {
                std::fs::create_dir_all(dir)?;
                for path in corpus::write_expected(dir, &cfg)? {
                    println!("wrote {path}");
                }
                return Ok(0);
            }
            let outcome = corpus::check_corpus(&cfg)?;
            for check in &outcome.checks {
                let mark = if check.pass { "PASS" } else { "FAIL" };
                println!("{mark} {} :: {}", check.ring, check.command);
                if !check.pass {
                    println!("     {}", check.detail);
                }
            }
            return Ok(if outcome.all_pass { 0 } else { 1 });
        }
    };

    job.samples = common.samples;
    job.seed = common.seed;
    job.config_overrides = common.config.clone();

    let cfg = build_config(&common)?;
    let ring = load_ring(&common.ring)?;
    let outcome = run_job(&job, &ring, &cfg)?;
    finish(outcome, &common)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
