//! The machine-readable report layer behind the command-line interface.
//!
//! Every subcommand produces one JSON [`Report`]: a schema version, an echo
//! of the job, a command-specific result payload, caveats, and a timing
//! field. Reports are byte-stable for fixed inputs and seed; only
//! `timing_ms` varies between runs and golden comparisons exclude it.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::closure::{
    f_lim_closure, frobenius_closure, lim_then_frobenius, limit_closure, tight_closure_probe,
    ClosureResult, TightVerdict,
};
use crate::config::Config;
use crate::criteria::{
    check_m_containment, corgor_search, fedder_fpure, probe_constancy,
    sample_parameter_sequences, CorGorOutcome, ProbeVerdict,
};
use crate::error::{Error, Result};
use crate::ideal::IdealHandle;
use crate::invariant::{colength, invariant_record, multiplicity, Length, ProbeQuantity};
use crate::parse::{parse_generators, poly_parse};
use crate::ring::Ring;

pub const SCHEMA_VERSION: u32 = 1;

/// Echo of one command invocation; round-trips through the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    pub command: String,
    pub ring: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gens: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub test_element: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quantity: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub config_overrides: Vec<String>,
}

impl JobSpec {
    pub fn new(command: &str, ring: &str) -> Self {
        JobSpec {
            command: command.to_string(),
            ring: ring.to_string(),
            ideal: None,
            gens: None,
            element: None,
            test_element: None,
            quantity: None,
            samples: None,
            seed: None,
            config_overrides: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub job: JobSpec,
    pub result: Value,
    pub caveats: Vec<String>,
    pub timing_ms: u128,
}

impl Report {
    /// The report with the timing field zeroed, for golden comparison.
    pub fn stable(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["timing_ms"] = json!(0);
        v
    }
}

/// What a finished job tells the shell: exit 0 when certified, 2 when a cap
/// was hit or a verdict is inconclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Certified,
    Uncertified,
}

impl ExitStatus {
    pub fn code(&self) -> i32 {
        match self {
            ExitStatus::Certified => 0,
            ExitStatus::Uncertified => 2,
        }
    }
}

pub struct Outcome {
    pub report: Report,
    pub status: ExitStatus,
    /// One-line human summary for standard output.
    pub summary: String,
}

/// Canonical JSON form of an ideal: a minimal generating set plus the full
/// reduced basis of the lift, both in declared-order text.
fn ideal_json(handle: &IdealHandle, cfg: &Config) -> Result<Value> {
    let budget = cfg.budget();
    let ring = handle.ring();
    let minimal: Vec<String> = handle
        .minimal_generators(&budget)?
        .iter()
        .map(|g| ring.text(g))
        .collect();
    Ok(json!({
        "generators": minimal,
        "groebner_basis": handle.basis_text(),
    }))
}

fn closure_json(r: &ClosureResult, cfg: &Config) -> Result<Value> {
    Ok(json!({
        "kind": r.kind,
        "ideal": ideal_json(&r.ideal, cfg)?,
        "colength": r.ideal.colength(cfg.length_cap)?,
        "stabilized_at": r.stabilized_at,
        "window": r.window,
        "cap": r.cap,
        "certified": r.certified,
    }))
}

fn need<'a>(opt: &'a Option<String>, what: &str) -> Result<&'a str> {
    opt.as_deref()
        .ok_or_else(|| Error::Invalid(format!("missing required argument `{what}`")))
}

/// Execute one job against a loaded ring.
pub fn run_job(job: &JobSpec, ring: &Ring, cfg: &Config) -> Result<Outcome> {
    let start = Instant::now();
    let mut caveats: Vec<String> = Vec::new();
    let budget = cfg.budget();

    let (result, status, summary): (Value, ExitStatus, String) = match job.command.as_str() {
        cmd @ ("fclose" | "limclose" | "flim" | "limf") => {
            let r = match cmd {
                "fclose" => {
                    let gens = parse_generators(need(&job.ideal, "--ideal")?, ring)?;
                    let q = IdealHandle::new(ring, gens, &budget)?;
                    frobenius_closure(&q, cfg)?
                }
                "limclose" => {
                    let gens = parse_generators(need(&job.gens, "--gens")?, ring)?;
                    limit_closure(ring, &gens, cfg)?
                }
                "flim" => {
                    let gens = parse_generators(need(&job.gens, "--gens")?, ring)?;
                    f_lim_closure(ring, &gens, cfg)?
                }
                _ => {
                    let gens = parse_generators(need(&job.gens, "--gens")?, ring)?;
                    lim_then_frobenius(ring, &gens, cfg)?
                }
            };
            if !r.certified {
                caveats.push("chain hit its cap without stabilizing; raise the cap".into());
            }
            let status = if r.certified { ExitStatus::Certified } else { ExitStatus::Uncertified };
            let gens: Vec<String> = r
                .ideal
                .minimal_generators(&budget)?
                .iter()
                .map(|g| ring.text(g))
                .collect();
            let summary = format!(
                "{cmd}: ({}) [{}certified, stabilized at {}]",
                gens.join(", "),
                if r.certified { "" } else { "NOT " },
                r.stabilized_at
            );
            (closure_json(&r, cfg)?, status, summary)
        }
        "tprobe" => {
            let gens = parse_generators(need(&job.ideal, "--ideal")?, ring)?;
            let q = IdealHandle::new(ring, gens, &budget)?;
            let x = poly_parse(need(&job.element, "--element")?, ring)?;
            let c = poly_parse(need(&job.test_element, "--test-element")?, ring)?;
            caveats.push(
                "the test element is user-asserted and unchecked; a failure certifies \
                 non-membership only if it is genuine"
                    .into(),
            );
            let r = tight_closure_probe(&q, &x, &c, cfg.cap_e, cfg)?;
            let (v, summary) = match r.verdict {
                TightVerdict::NotInClosure { witness_e } => (
                    json!({"verdict": "not_in_closure", "witness_e": witness_e, "cap_e": r.cap_e}),
                    format!("tprobe: not in tight closure (witness e = {witness_e})"),
                ),
                TightVerdict::InClosureUpTo(e) => (
                    json!({"verdict": "in_closure_up_to", "cap_e": e}),
                    format!("tprobe: membership holds for all e <= {e} (evidence only)"),
                ),
            };
            (v, ExitStatus::Certified, summary)
        }
        "length" => {
            let gens = parse_generators(need(&job.ideal, "--ideal")?, ring)?;
            let i = IdealHandle::new(ring, gens, &budget)?;
            let len = colength(&i, cfg)?;
            let (v, s) = match len {
                Length::Finite(n) => (json!({"colength": n}), format!("length: {n}")),
                Length::Infinite => (json!({"colength": "infinite"}), "length: infinite".into()),
            };
            (v, ExitStatus::Certified, s)
        }
        "mult" => {
            let gens = parse_generators(need(&job.gens, "--gens")?, ring)?;
            let m = multiplicity(ring, &gens, cfg.mult_mode, cfg)?;
            let v = serde_json::to_value(m)?;
            (v, ExitStatus::Certified, format!("mult: {} ({:?})", m.value, m.method))
        }
        "invariants" => {
            let gens = parse_generators(need(&job.gens, "--gens")?, ring)?;
            let rec = invariant_record(ring, &gens, cfg)?;
            caveats.extend(rec.caveats.iter().cloned());
            let status = if rec.certified { ExitStatus::Certified } else { ExitStatus::Uncertified };
            let summary = format!(
                "invariants: len_q={} e={} surplus_f={} len_qF_over_q={}",
                rec.len_q, rec.mult, rec.surplus_f, rec.len_qf_over_q
            );
            (serde_json::to_value(&rec)?, status, summary)
        }
        "probe" => {
            let quantity = ProbeQuantity::parse(need(&job.quantity, "--quantity")?)?;
            let count = job.samples.unwrap_or(cfg.probe_samples);
            let seed = job.seed.unwrap_or(cfg.seed);
            let samples = sample_parameter_sequences(ring, count, cfg.degree_range, seed, cfg)?;
            let report = probe_constancy(ring, quantity, &samples, seed, cfg)?;
            caveats.extend(report.caveats.iter().cloned());
            let (status, summary) = match &report.verdict {
                ProbeVerdict::Constant { value } => (
                    ExitStatus::Certified,
                    format!(
                        "probe {}: constant({value}) across {} samples",
                        quantity.name(),
                        report.samples.len()
                    ),
                ),
                ProbeVerdict::NonConstant { value_a, value_b, .. } => (
                    ExitStatus::Certified,
                    format!("probe {}: NON-CONSTANT ({value_a} vs {value_b})", quantity.name()),
                ),
                ProbeVerdict::Inconclusive { reason } => (
                    ExitStatus::Uncertified,
                    format!("probe {}: inconclusive ({reason})", quantity.name()),
                ),
            };
            (serde_json::to_value(&report)?, status, summary)
        }
        "mcontain" => {
            let gens = parse_generators(need(&job.gens, "--gens")?, ring)?;
            let r = check_m_containment(ring, &gens, cfg)?;
            let status = if r.certified { ExitStatus::Certified } else { ExitStatus::Uncertified };
            let summary = format!(
                "mcontain: m*(q^F + q^lim) in q: {}; m*q^lim in q: {}",
                r.flim_contained, r.lim_contained
            );
            (serde_json::to_value(r)?, status, summary)
        }
        "corgor" => {
            let count = job.samples.unwrap_or(cfg.probe_samples);
            let seed = job.seed.unwrap_or(cfg.seed);
            let samples = sample_parameter_sequences(ring, count, cfg.degree_range, seed, cfg)?;
            caveats.push(
                "certificate containment evidence is sampled; only the m-containment and \
                 colon consistency are exact"
                    .into(),
            );
            let outcome = corgor_search(ring, &samples, cfg)?;
            let summary = match &outcome {
                CorGorOutcome::Found(c) => {
                    format!("corgor: certificate Q = ({})", c.q_generators.join(", "))
                }
                CorGorOutcome::NotFound { reason } => format!("corgor: not found ({reason})"),
            };
            (serde_json::to_value(&outcome)?, ExitStatus::Certified, summary)
        }
        "fedder" => {
            let fpure = fedder_fpure(ring, cfg)?;
            caveats.push("for Gorenstein rings, F-pure coincides with F-injective".into());
            let p = ring.p();
            let v = json!({
                "f_pure": fpure,
                "p": p,
                "p_mod_3": p % 3,
                "p_mod_4": p % 4,
            });
            (v, ExitStatus::Certified, format!("fedder: F-pure = {fpure} (p = {p})"))
        }
        other => return Err(Error::Invalid(format!("unknown command `{other}`"))),
    };

    Ok(Outcome {
        report: Report {
            schema_version: SCHEMA_VERSION,
            job: job.clone(),
            result,
            caveats,
            timing_ms: start.elapsed().as_millis(),
        },
        status,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ring_file;

    fn hyp4() -> Ring {
        parse_ring_file("char 5\nvars x y z\nrel x^4+y^4+z^4\n").unwrap()
    }

    #[test]
    fn job_spec_round_trips_through_report() {
        let ring = hyp4();
        let cfg = Config::default();
        let mut job = JobSpec::new("fclose", "hyp4_p5.ring");
        job.ideal = Some("y^2,z^2".into());
        let out = run_job(&job, &ring, &cfg).unwrap();
        let text = serde_json::to_string(&out.report).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back.job, job);
        assert_eq!(back.schema_version, SCHEMA_VERSION);
        assert_eq!(out.status, ExitStatus::Certified);
    }

    #[test]
    fn fclose_report_carries_the_closure_generators() {
        let ring = hyp4();
        let cfg = Config::default();
        let mut job = JobSpec::new("fclose", "hyp4_p5.ring");
        job.ideal = Some("y^2,z^2".into());
        let out = run_job(&job, &ring, &cfg).unwrap();
        let gens = out.report.result["ideal"]["generators"].as_array().unwrap();
        let texts: Vec<&str> = gens.iter().map(|v| v.as_str().unwrap()).collect();
        assert_eq!(texts, vec!["z^2", "y^2", "x^3*y*z"]);
        assert_eq!(out.report.result["certified"], serde_json::json!(true));
    }

    #[test]
    fn stable_reports_differ_only_in_timing() {
        let ring = hyp4();
        let cfg = Config::default();
        let mut job = JobSpec::new("length", "hyp4_p5.ring");
        job.ideal = Some("y^2,z^2".into());
        let a = run_job(&job, &ring, &cfg).unwrap().report.stable();
        let b = run_job(&job, &ring, &cfg).unwrap().report.stable();
        assert_eq!(a, b);
        assert_eq!(a["result"]["colength"], serde_json::json!(16));
    }

    #[test]
    fn errors_surface_for_bad_jobs() {
        let ring = hyp4();
        let cfg = Config::default();
        let mut job = JobSpec::new("fclose", "r");
        job.ideal = Some("y^2".into());
        assert!(matches!(run_job(&job, &ring, &cfg), Err(Error::NotMPrimary(_))));
        let job = JobSpec::new("nope", "r");
        assert!(run_job(&job, &ring, &cfg).is_err());
    }
}
