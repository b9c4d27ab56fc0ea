use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::GbBudget;

/// Multiplicity computation mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MultMode {
    Auto,
    CmExact,
    Lech,
}

/// All tunable knobs, addressable as `section.key` strings from the command
/// line (`--config KEY=VAL`).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Config {
    /// gb.max_pairs
    pub gb_max_pairs: usize,
    /// gb.max_terms
    pub gb_max_terms: usize,
    /// closure.cap_e
    pub cap_e: u32,
    /// closure.cap_n
    pub cap_n: u64,
    /// closure.window
    pub window: u32,
    /// closure.min_e
    pub min_e: u32,
    /// length.cap
    pub length_cap: usize,
    /// mult.lech_max_n
    pub lech_max_n: u64,
    /// mult.mode
    pub mult_mode: MultMode,
    /// probe.samples
    pub probe_samples: usize,
    /// probe.degree_range (inclusive)
    pub degree_range: (u64, u64),
    /// probe.seed
    pub seed: u64,
    /// corgor.candidate_degrees (inclusive)
    pub corgor_candidate_degrees: (u64, u64),
    /// corgor.E
    pub corgor_e: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            gb_max_pairs: 500_000,
            gb_max_terms: 1_000_000,
            cap_e: 6,
            cap_n: 8,
            window: 2,
            min_e: 0,
            length_cap: 1_000_000,
            lech_max_n: 8,
            mult_mode: MultMode::Auto,
            probe_samples: 6,
            degree_range: (1, 2),
            seed: 1,
            corgor_candidate_degrees: (1, 2),
            corgor_e: 4,
        }
    }
}

fn parse_range(v: &str) -> Result<(u64, u64)> {
    let parts: Vec<&str> = if v.contains("..") {
        v.splitn(2, "..").collect()
    } else {
        v.splitn(2, ',').collect()
    };
    let lo: u64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| Error::Invalid(format!("bad range `{v}`")))?;
    let hi: u64 = if parts.len() > 1 {
        parts[1].trim().parse().map_err(|_| Error::Invalid(format!("bad range `{v}`")))?
    } else {
        lo
    };
    if lo == 0 || hi < lo {
        return Err(Error::Invalid(format!("bad range `{v}`")));
    }
    Ok((lo, hi))
}

impl Config {
    pub fn budget(&self) -> GbBudget {
        GbBudget { max_pairs: self.gb_max_pairs, max_terms: self.gb_max_terms }
    }

    /// Apply one `KEY=VAL` override.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = || Error::Invalid(format!("bad value `{value}` for `{key}`"));
        match key {
            "gb.max_pairs" => self.gb_max_pairs = value.parse().map_err(|_| bad())?,
            "gb.max_terms" => self.gb_max_terms = value.parse().map_err(|_| bad())?,
            "closure.cap_e" => self.cap_e = value.parse().map_err(|_| bad())?,
            "closure.cap_n" => self.cap_n = value.parse().map_err(|_| bad())?,
            "closure.window" => self.window = value.parse().map_err(|_| bad())?,
            "closure.min_e" => self.min_e = value.parse().map_err(|_| bad())?,
            "length.cap" => self.length_cap = value.parse().map_err(|_| bad())?,
            "mult.lech_max_n" => self.lech_max_n = value.parse().map_err(|_| bad())?,
            "mult.mode" => {
                self.mult_mode = match value {
                    "auto" => MultMode::Auto,
                    "cm_exact" => MultMode::CmExact,
                    "lech" => MultMode::Lech,
                    _ => return Err(bad()),
                }
            }
            "probe.samples" => self.probe_samples = value.parse().map_err(|_| bad())?,
            "probe.degree_range" => self.degree_range = parse_range(value)?,
            "probe.seed" => self.seed = value.parse().map_err(|_| bad())?,
            "corgor.candidate_degrees" => self.corgor_candidate_degrees = parse_range(value)?,
            "corgor.E" => self.corgor_e = value.parse().map_err(|_| bad())?,
            _ => return Err(Error::Invalid(format!("unknown config key `{key}`"))),
        }
        Ok(())
    }

    /// Parse KEY=VAL pairs.
    pub fn apply_overrides(&mut self, overrides: &[String]) -> Result<()> {
        for kv in overrides {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Invalid(format!("expected KEY=VAL, got `{kv}`")))?;
            self.set(k.trim(), v.trim())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_apply() {
        let mut cfg = Config::default();
        cfg.apply_overrides(&[
            "closure.cap_e=4".into(),
            "probe.degree_range=1..3".into(),
            "mult.mode=lech".into(),
        ])
        .unwrap();
        assert_eq!(cfg.cap_e, 4);
        assert_eq!(cfg.degree_range, (1, 3));
        assert_eq!(cfg.mult_mode, MultMode::Lech);
        assert!(cfg.set("nope", "1").is_err());
        assert!(cfg.set("closure.cap_e", "x").is_err());
    }
}
