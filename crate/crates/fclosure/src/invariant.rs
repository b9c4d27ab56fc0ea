//! Numerical invariants of parameter ideals: colengths, quotient lengths,
//! Hilbert–Samuel multiplicity, and the surplus quantities that the decision
//! probes compare across samples.

use serde::{Deserialize, Serialize};

use crate::closure::{
    f_lim_closure, frobenius_closure, limit_closure, validate_parameter_sequence,
};
use crate::config::{Config, MultMode};
use crate::error::{Error, Result};
use crate::ideal::IdealHandle;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// A module length: finite or provably infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Length {
    Finite(usize),
    Infinite,
}

impl Length {
    pub fn finite(&self) -> Option<usize> {
        match self {
            Length::Finite(n) => Some(*n),
            Length::Infinite => None,
        }
    }
}

/// ℓ(R/I): the number of standard monomials of I + J when finite. Over the
/// graded chart this is the local colength for homogeneous m-primary I.
pub fn colength(ideal: &IdealHandle, cfg: &Config) -> Result<Length> {
    Ok(match ideal.colength(cfg.length_cap)? {
        Some(n) => Length::Finite(n),
        None => Length::Infinite,
    })
}

/// ℓ(outer/inner) for m-primary inner ⊆ outer; the containment is verified
/// rather than trusted.
pub fn quotient_length(inner: &IdealHandle, outer: &IdealHandle, cfg: &Config) -> Result<usize> {
    let budget = cfg.budget();
    if !outer.contains(inner, &budget)? {
        return Err(Error::Containment(
            "quotient_length requires inner ⊆ outer".into(),
        ));
    }
    let li = colength(inner, cfg)?
        .finite()
        .ok_or_else(|| Error::NotMPrimary("inner ideal has infinite colength".into()))?;
    let lo = colength(outer, cfg)?
        .finite()
        .ok_or_else(|| Error::NotMPrimary("outer ideal has infinite colength".into()))?;
    Ok(li - lo)
}

/// How a multiplicity value was certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "method", content = "n_used")]
pub enum MultMethod {
    /// The generators were verified to be a regular sequence, so
    /// e(q) = ℓ(R/q).
    CmExact,
    /// Stabilized difference quotient of ℓ(R/(x_1^n, …, x_d^n)) along a
    /// doubling schedule; two consecutive exact integer agreements required.
    Lech(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multiplicity {
    pub value: usize,
    #[serde(flatten)]
    pub method: MultMethod,
}

/// Iterated colon test: x_{i+1} is a nonzerodivisor on R/(x_1, …, x_i) for
/// every i.
pub fn is_regular_sequence(ring: &Ring, gens: &[Polynomial], cfg: &Config) -> Result<bool> {
    let budget = cfg.budget();
    for i in 0..gens.len() {
        let partial = IdealHandle::new(ring, gens[..i].to_vec(), &budget)?;
        let colon = partial.colon_poly(&gens[i], &budget)?;
        if colon != partial {
            return Ok(false);
        }
    }
    Ok(true)
}

fn lech_estimate(ring: &Ring, gens: &[Polynomial], cfg: &Config) -> Result<Multiplicity> {
    let budget = cfg.budget();
    let d = ring.dim() as u32;
    let mut lengths: std::collections::BTreeMap<u64, usize> = std::collections::BTreeMap::new();
    let colength_at = |n: u64, lengths: &mut std::collections::BTreeMap<u64, usize>| -> Result<usize> {
        if let Some(&v) = lengths.get(&n) {
            return Ok(v);
        }
        let mut powered = Vec::with_capacity(gens.len());
        for g in gens {
            powered.push(g.pow(n)?);
        }
        let handle = IdealHandle::new(ring, powered, &budget)?;
        let v = handle
            .colength(cfg.length_cap)?
            .ok_or_else(|| Error::NotMPrimary("powered sequence has infinite colength".into()))?;
        lengths.insert(n, v);
        Ok(v)
    };

    let mut prev: Option<usize> = None;
    let mut n = 1u64;
    while 2 * n <= cfg.lech_max_n.max(2) {
        let a_n = colength_at(n, &mut lengths)?;
        let a_2n = colength_at(2 * n, &mut lengths)?;
        let denom = (2u64.pow(d) - 1)
            .checked_mul(n.pow(d))
            .ok_or(Error::Overflow("Lech denominator"))?;
        let numer = (a_2n - a_n) as u64;
        if numer.is_multiple_of(denom) {
            let est = (numer / denom) as usize;
            if prev == Some(est) {
                return Ok(Multiplicity { value: est, method: MultMethod::Lech(n) });
            }
            prev = Some(est);
        } else {
            prev = None;
        }
        n *= 2;
    }
    Err(Error::MultiplicityNotCertified(format!(
        "no two consecutive integer-equal estimates up to n = {}",
        cfg.lech_max_n
    )))
}

/// Hilbert–Samuel multiplicity of the parameter ideal generated by `gens`.
///
/// `cm_exact` verifies that the sequence is regular and returns ℓ(R/q);
/// `lech` runs the normalized-colength estimator; `auto` tries the exact
/// path first. Either path refuses to answer rather than guessing.
pub fn multiplicity(
    ring: &Ring,
    gens: &[Polynomial],
    mode: MultMode,
    cfg: &Config,
) -> Result<Multiplicity> {
    let q = validate_parameter_sequence(ring, gens, cfg)?;
    let run_cm = |cfg: &Config| -> Result<Option<Multiplicity>> {
        if is_regular_sequence(ring, gens, cfg)? {
            let value = q
                .colength(cfg.length_cap)?
                .ok_or_else(|| Error::NotMPrimary("infinite colength".into()))?;
            Ok(Some(Multiplicity { value, method: MultMethod::CmExact }))
        } else {
            Ok(None)
        }
    };
    match mode {
        MultMode::CmExact => run_cm(cfg)?.ok_or_else(|| {
            Error::MultiplicityNotCertified("generators are not a regular sequence".into())
        }),
        MultMode::Lech => lech_estimate(ring, gens, cfg),
        MultMode::Auto => match run_cm(cfg)? {
            Some(m) => Ok(m),
            None => lech_estimate(ring, gens, cfg),
        },
    }
}

/// The full per-ideal record: every colength in the closure chain, the
/// multiplicity, and the derived surpluses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    /// Canonical generator texts, in the order given.
    pub generators: Vec<String>,
    pub generator_degrees: Vec<u64>,
    /// ℓ(R/q)
    pub len_q: usize,
    /// ℓ(R/q^F)
    pub len_qf: usize,
    /// ℓ(R/q^lim)
    pub len_qlim: usize,
    /// ℓ(R/(q^F + q^lim))
    pub len_qflim: usize,
    /// ℓ(R/(q^lim)^F)
    pub len_qlimf: usize,
    /// e(q)
    pub mult: usize,
    #[serde(flatten)]
    pub mult_method: MultMethod,
    /// ℓ(R/q) - e(q)
    pub surplus_buchsbaum: usize,
    /// e(q) - ℓ(R/(q^F + q^lim))
    pub surplus_f: usize,
    /// e(q) - ℓ(R/(q^lim)^F)
    pub surplus_f_alt: usize,
    /// ℓ(q^F/q)
    pub len_qf_over_q: usize,
    /// ℓ((q^F + q^lim)/q)
    pub len_qflim_over_q: usize,
    /// All closure chains stabilized within their caps.
    pub certified: bool,
    pub caveats: Vec<String>,
}

/// The surplus quantities a constancy probe can compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeQuantity {
    SurplusBuchsbaum,
    SurplusF,
    SurplusFAlt,
    LenQflimOverQ,
    LenQfOverQ,
}

impl ProbeQuantity {
    pub fn parse(name: &str) -> Result<Self> {
        Ok(match name {
            "surplus_buchsbaum" => ProbeQuantity::SurplusBuchsbaum,
            "surplus_f" => ProbeQuantity::SurplusF,
            "surplus_f_alt" => ProbeQuantity::SurplusFAlt,
            "len_qflim_over_q" => ProbeQuantity::LenQflimOverQ,
            "len_qF_over_q" | "len_qf_over_q" => ProbeQuantity::LenQfOverQ,
            other => return Err(Error::Invalid(format!("unknown quantity `{other}`"))),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            ProbeQuantity::SurplusBuchsbaum => "surplus_buchsbaum",
            ProbeQuantity::SurplusF => "surplus_f",
            ProbeQuantity::SurplusFAlt => "surplus_f_alt",
            ProbeQuantity::LenQflimOverQ => "len_qflim_over_q",
            ProbeQuantity::LenQfOverQ => "len_qF_over_q",
        }
    }
}

impl InvariantRecord {
    pub fn quantity(&self, q: ProbeQuantity) -> usize {
        match q {
            ProbeQuantity::SurplusBuchsbaum => self.surplus_buchsbaum,
            ProbeQuantity::SurplusF => self.surplus_f,
            ProbeQuantity::SurplusFAlt => self.surplus_f_alt,
            ProbeQuantity::LenQflimOverQ => self.len_qflim_over_q,
            ProbeQuantity::LenQfOverQ => self.len_qf_over_q,
        }
    }
}

/// Compute every invariant for one parameter sequence. The colength chain
/// ℓ(R/q) ≥ ℓ(R/q^lim) ≥ ℓ(R/q^{F-lim}) ≥ ℓ(R/(q^lim)^F) and
/// e(q) ≥ ℓ(R/q^lim) are verified on certified data; a violation there is a
/// hard internal error rather than a wrong record.
pub fn invariant_record(ring: &Ring, gens: &[Polynomial], cfg: &Config) -> Result<InvariantRecord> {
    let q = validate_parameter_sequence(ring, gens, cfg)?;
    let budget = cfg.budget();
    let mut caveats: Vec<String> = vec![
        "ring assumed excellent, unmixed and equidimensional (not verified)".into(),
    ];

    let frob = frobenius_closure(&q, cfg)?;
    let lim = limit_closure(ring, gens, cfg)?;
    let flim = f_lim_closure(ring, gens, cfg)?;
    let limf_ideal = frobenius_closure(&lim.ideal, cfg)?;
    let certified = frob.certified && lim.certified && flim.certified && limf_ideal.certified;
    if !certified {
        caveats.push("one or more closure chains hit their cap uncertified".into());
    }

    let len_of = |i: &IdealHandle| -> Result<usize> {
        i.colength(cfg.length_cap)?
            .ok_or_else(|| Error::NotMPrimary("infinite colength in record".into()))
    };
    let len_q = len_of(&q)?;
    let len_qf = len_of(&frob.ideal)?;
    let len_qlim = len_of(&lim.ideal)?;
    let len_qflim = len_of(&flim.ideal)?;
    let len_qlimf = len_of(&limf_ideal.ideal)?;

    let mult = multiplicity(ring, gens, cfg.mult_mode, cfg)?;

    let chain_ok = len_q >= len_qlim
        && len_qlim >= len_qflim
        && len_qflim >= len_qlimf
        && mult.value >= len_qlim
        && len_q >= mult.value;
    if !chain_ok {
        if certified {
            return Err(Error::Invalid(format!(
                "internal: colength chain violated: len_q={len_q} len_qlim={len_qlim} \
                 len_qflim={len_qflim} len_qlimf={len_qlimf} mult={}",
                mult.value
            )));
        }
        caveats.push("colength chain violated on uncertified data".into());
    }

    // cross-check: the sum of closures contains both constituents
    debug_assert!(flim.ideal.contains(&frob.ideal, &budget)?);
    debug_assert!(flim.ideal.contains(&lim.ideal, &budget)?);

    Ok(InvariantRecord {
        generators: gens.iter().map(|g| ring.text(g)).collect(),
        generator_degrees: gens.iter().map(|g| g.degree().unwrap_or(0)).collect(),
        len_q,
        len_qf,
        len_qlim,
        len_qflim,
        len_qlimf,
        mult: mult.value,
        mult_method: mult.method,
        surplus_buchsbaum: len_q - mult.value,
        surplus_f: mult.value - len_qflim,
        surplus_f_alt: mult.value - len_qlimf,
        len_qf_over_q: len_q - len_qf,
        len_qflim_over_q: len_q - len_qflim,
        certified,
        caveats,
    })
}
