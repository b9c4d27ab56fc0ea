//! The bundled example corpus: five ring presentations with golden expected
//! reports, embedded in the binary so `check-corpus` is self-contained.
//!
//! Each corpus ring carries a fixed battery of jobs. A check run replays the
//! battery and compares each report (timing excluded) byte-for-byte against
//! the frozen expectation.

use serde_json::Value;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::parse::parse_ring_file;
use crate::report::{run_job, JobSpec, Report};
use crate::ring::Ring;

pub struct CorpusRing {
    pub name: &'static str,
    pub ring_text: &'static str,
    pub expected_json: &'static str,
}

pub fn corpus() -> Vec<CorpusRing> {
    vec![
        CorpusRing {
            name: "hyp4_p5.ring",
            ring_text: include_str!("../corpus/hyp4_p5.ring"),
            expected_json: include_str!("../corpus/expected/hyp4_p5.json"),
        },
        CorpusRing {
            name: "cubic_p2.ring",
            ring_text: include_str!("../corpus/cubic_p2.ring"),
            expected_json: include_str!("../corpus/expected/cubic_p2.json"),
        },
        CorpusRing {
            name: "quintic_p2.ring",
            ring_text: include_str!("../corpus/quintic_p2.ring"),
            expected_json: include_str!("../corpus/expected/quintic_p2.json"),
        },
        CorpusRing {
            name: "sr4_p2.ring",
            ring_text: include_str!("../corpus/sr4_p2.ring"),
            expected_json: include_str!("../corpus/expected/sr4_p2.json"),
        },
        CorpusRing {
            name: "regular2_p5.ring",
            ring_text: include_str!("../corpus/regular2_p5.ring"),
            expected_json: include_str!("../corpus/expected/regular2_p5.json"),
        },
    ]
}

/// Look up a corpus ring by file name (`hyp4_p5.ring` or bare `hyp4_p5`).
pub fn corpus_ring_text(name: &str) -> Option<&'static str> {
    let name = name.strip_suffix(".ring").unwrap_or(name);
    corpus()
        .into_iter()
        .find(|c| c.name.strip_suffix(".ring") == Some(name))
        .map(|c| c.ring_text)
}

fn job(command: &str, ring: &str) -> JobSpec {
    JobSpec::new(command, ring)
}

/// The golden battery for one corpus ring.
pub fn battery(name: &str) -> Vec<JobSpec> {
    let mut jobs = Vec::new();
    let fedder = job("fedder", name);
    match name {
        "hyp4_p5.ring" => {
            jobs.push(fedder);
            let mut j = job("fclose", name);
            j.ideal = Some("y^2,z^2".into());
            jobs.push(j);
            let mut j = job("limclose", name);
            j.gens = Some("y^2,z^2".into());
            jobs.push(j);
            let mut j = job("invariants", name);
            j.gens = Some("y^2,z^2".into());
            jobs.push(j);
            let mut j = job("mcontain", name);
            j.gens = Some("y^2,z^2".into());
            jobs.push(j);
            let mut j = job("corgor", name);
            j.samples = Some(6);
            j.seed = Some(1);
            jobs.push(j);
        }
        "cubic_p2.ring" => {
            jobs.push(fedder);
            let mut j = job("fclose", name);
            j.ideal = Some("x,y".into());
            jobs.push(j);
            let mut j = job("invariants", name);
            j.gens = Some("x,y".into());
            jobs.push(j);
        }
        "quintic_p2.ring" => {
            jobs.push(fedder);
            let mut j = job("fclose", name);
            j.ideal = Some("x,y".into());
            jobs.push(j);
            let mut j = job("fclose", name);
            j.ideal = Some("x^2,y^2".into());
            jobs.push(j);
            let mut j = job("probe", name);
            j.quantity = Some("len_qF_over_q".into());
            j.samples = Some(6);
            j.seed = Some(1);
            jobs.push(j);
        }
        "sr4_p2.ring" => {
            jobs.push(fedder);
            let mut j = job("limclose", name);
            j.gens = Some("x+z,y+w".into());
            jobs.push(j);
            let mut j = job("mult", name);
            j.gens = Some("x+z,y+w".into());
            jobs.push(j);
            let mut j = job("invariants", name);
            j.gens = Some("x+z,y+w".into());
            jobs.push(j);
        }
        "regular2_p5.ring" => {
            jobs.push(fedder);
            let mut j = job("fclose", name);
            j.ideal = Some("x,y".into());
            jobs.push(j);
            let mut j = job("invariants", name);
            j.gens = Some("x^2,y^3".into());
            jobs.push(j);
            let mut j = job("probe", name);
            j.quantity = Some("surplus_f".into());
            j.samples = Some(3);
            j.seed = Some(1);
            jobs.push(j);
        }
        _ => {}
    }
    jobs
}

#[derive(Debug)]
pub struct CorpusCheck {
    pub ring: String,
    pub command: String,
    pub pass: bool,
    pub detail: String,
}

pub struct CorpusOutcome {
    pub checks: Vec<CorpusCheck>,
    pub all_pass: bool,
}

fn run_battery(entry: &CorpusRing, cfg: &Config) -> Result<(Ring, Vec<Report>)> {
    let ring = parse_ring_file(entry.ring_text)?;
    let mut reports = Vec::new();
    for j in battery(entry.name) {
        reports.push(run_job(&j, &ring, cfg)?.report);
    }
    Ok((ring, reports))
}

/// Replay every battery and compare against the frozen goldens.
pub fn check_corpus(cfg: &Config) -> Result<CorpusOutcome> {
    let mut checks = Vec::new();
    for entry in corpus() {
        let expected: Vec<Value> = serde_json::from_str(entry.expected_json).map_err(|e| {
            Error::Invalid(format!("corrupt expected file for {}: {e}", entry.name))
        })?;
        let (_, reports) = run_battery(&entry, cfg)?;
        if expected.len() != reports.len() {
            checks.push(CorpusCheck {
                ring: entry.name.into(),
                command: "battery".into(),
                pass: false,
                detail: format!("expected {} reports, got {}", expected.len(), reports.len()),
            });
            continue;
        }
        for (want, got) in expected.iter().zip(&reports) {
            let got_stable = got.stable();
            let pass = *want == got_stable;
            let detail = if pass {
                "ok".to_string()
            } else {
                format!(
                    "mismatch:\n  expected: {}\n  got:      {}",
                    serde_json::to_string(want).unwrap(),
                    serde_json::to_string(&got_stable).unwrap()
                )
            };
            checks.push(CorpusCheck {
                ring: entry.name.into(),
                command: got.job.command.clone(),
                pass,
                detail,
            });
        }
    }
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(CorpusOutcome { checks, all_pass })
}

/// Recompute every battery and write fresh goldens into `dir`
/// (`<name>.json`, timing zeroed). Used to regenerate the frozen files.
pub fn write_expected(dir: &std::path::Path, cfg: &Config) -> Result<Vec<String>> {
    let mut written = Vec::new();
    for entry in corpus() {
        let (_, reports) = run_battery(&entry, cfg)?;
        let stable: Vec<Value> = reports.iter().map(|r| r.stable()).collect();
        let name = entry.name.replace(".ring", ".json");
        let path = dir.join(&name);
        std::fs::write(&path, serde_json::to_string_pretty(&stable)? + "\n")?;
        written.push(path.display().to_string());
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_rings_parse_and_have_batteries() {
        for entry in corpus() {
            let ring = parse_ring_file(entry.ring_text).unwrap();
            assert!(ring.dim() >= 2, "{} should be at least a surface chart", entry.name);
            assert!(!battery(entry.name).is_empty());
        }
        assert!(corpus_ring_text("hyp4_p5.ring").is_some());
        assert!(corpus_ring_text("hyp4_p5").is_some());
        assert!(corpus_ring_text("nope").is_none());
    }
}
