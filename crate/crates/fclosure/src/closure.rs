//! Closure operations on m-primary parameter ideals in prime characteristic.
//!
//! Four closures are computed, all as ascending chains of ideals with
//! stabilization detection:
//!
//! * Frobenius closure q^F: the elements x with x^(p^e) ∈ q^[p^e] for some e.
//!   The level-e stage K_e = { x : x^(p^e) ∈ q^[p^e] } is found exactly by
//!   F_p-linear algebra — the map m ↦ NF(m^(p^e)) is linear on the span of
//!   the standard monomials of q, degree by degree, and K_e is q plus its
//!   kernel.
//! * Limit closure q^lim: the union of the colon ideals
//!   (x_1^(n+1), …, x_d^(n+1)) : (x_1⋯x_d)^n over n ≥ 1.
//! * Their sum q^F + q^lim and the composite (q^lim)^F.
//!
//! A chain is reported `certified` only after `window` consecutive equal
//! steps; caps are explicit and a capped non-stabilized chain is returned
//! uncertified, never silently truncated. A bounded membership probe for
//! tight closure with a user-supplied multiplier rounds out the module.

use std::collections::BTreeMap;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::field::Fp;
use crate::ideal::IdealHandle;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// Which closure a result describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureKind {
    Frobenius,
    Limit,
    FLim,
    LimThenFrobenius,
}

/// A computed closure with its stabilization certificate.
#[derive(Debug, Clone)]
pub struct ClosureResult {
    pub ideal: IdealHandle,
    pub kind: ClosureKind,
    /// Chain index (Frobenius exponent e, or colon index n) at which the
    /// final value first appeared; 0 when the input was already closed.
    pub stabilized_at: u64,
    /// Consecutive equal steps observed at the end of the run.
    pub window: u32,
    /// Cap the chain ran under.
    pub cap: u64,
    /// True only when `window` consecutive equalities were seen before the
    /// cap. The heuristic can under-report (never over-report) the closure.
    pub certified: bool,
}

/// Outcome of the bounded tight-closure membership probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TightVerdict {
    /// c·x^(p^e) ∉ q^[p^e] at the witness exponent. Sound certificate of
    /// x ∉ q^* provided c is a genuine test element.
    NotInClosure { witness_e: u32 },
    /// All membership tests up to the cap passed: evidence, not a proof.
    InClosureUpTo(u32),
}

#[derive(Debug, Clone)]
pub struct TightProbeResult {
    pub element: Polynomial,
    pub test_element: Polynomial,
    pub verdict: TightVerdict,
    pub cap_e: u32,
}

/// Validate a (possibly empty, when dim R = 0) homogeneous system of
/// parameters and return the ideal it generates.
pub fn validate_parameter_sequence(
    ring: &Ring,
    gens: &[Polynomial],
    cfg: &Config,
) -> Result<IdealHandle> {
    let budget = cfg.budget();
    for g in gens {
        ring.check_poly(g)?;
        if g.is_zero() {
            return Err(Error::NotParameterSequence("zero generator".into()));
        }
        if !g.is_homogeneous() {
            return Err(Error::NotParameterSequence(format!(
                "generator `{}` is not homogeneous",
                ring.text(g)
            )));
        }
    }
    if gens.len() != ring.dim() {
        return Err(Error::NotParameterSequence(format!(
            "{} generators for a ring of dimension {}",
            gens.len(),
            ring.dim()
        )));
    }
    let q = IdealHandle::new(ring, gens.to_vec(), &budget)?;
    if !q.is_m_primary(cfg.length_cap)? {
        return Err(Error::NotParameterSequence("colength is not finite".into()));
    }
    Ok(q)
}

/// Tracks an ascending chain of ideals and detects stabilization.
struct ChainTracker {
    prev: IdealHandle,
    run: u32,
    first_appeared: u64,
    window: u32,
    min_index: u64,
}

impl ChainTracker {
    fn new(start: IdealHandle, window: u32, min_index: u64) -> Self {
        ChainTracker { prev: start, run: 0, first_appeared: 0, window, min_index }
    }

    /// Feed the chain value at `index`; errors if the chain ever descends.
    fn push(&mut self, index: u64, value: IdealHandle, cfg: &Config) -> Result<bool> {
        let budget = cfg.budget();
        if !value.contains(&self.prev, &budget)? {
            return Err(Error::Invalid(format!(
                "internal: closure chain is not ascending at step {index}"
            )));
        }
        if value == self.prev {
            self.run += 1;
        } else {
            self.run = 0;
            self.first_appeared = index;
            self.prev = value;
        }
        Ok(self.run >= self.window && index >= self.min_index)
    }
}

/// One level of the Frobenius chain: K_e = { x : x^(p^e) ∈ q^[p^e] }, as an
/// ideal of R. Exact for m-primary homogeneous q.
///
/// The images NF(m^(p^e), q^[p^e] + J) are computed by a level ladder
/// instead of one giant reduction: if r is the level-(k-1) residue of m,
/// then m^(p^k) - r^p = (m^(p^(k-1)) - r)^p lies in (q^[p^(k-1)] + J)^[p]
/// ⊆ q^[p^k] + J, so reducing r^p at level k gives the level-k residue.
/// Every reduction chain stays short this way.
pub fn frobenius_closure_step(q: &IdealHandle, e: u32, cfg: &Config) -> Result<IdealHandle> {
    if !q.is_homogeneous() {
        // the degree-block kernel is only complete on graded input
        return Err(Error::Invalid(
            "Frobenius closure requires a homogeneous ideal".into(),
        ));
    }
    let budget = cfg.budget();
    let ring = q.ring().clone();
    let p = ring.p();
    let basis = match q.std_monomials(cfg.length_cap)? {
        crate::groebner::StdMonomials::Finite(v) => v,
        crate::groebner::StdMonomials::Infinite => {
            return Err(Error::NotMPrimary("infinite colength".into()))
        }
    };
    p.checked_pow(e).ok_or(Error::Overflow("Frobenius exponent p^e"))?;

    let mut residues: Vec<Polynomial> = basis
        .iter()
        .map(|m| Polynomial::monomial(m.clone(), Fp::one(p)))
        .collect();
    for k in 1..=e {
        let bracket = q.bracket_power(k, &budget)?;
        for r in &mut residues {
            *r = bracket.normal_form(&r.frobenius_power(1)?, &budget)?;
        }
    }

    // group the standard-monomial basis by degree; the Frobenius-then-reduce
    // map is graded, so each degree block has its own kernel
    let mut by_degree: BTreeMap<u64, Vec<(Monomial, Polynomial)>> = BTreeMap::new();
    for (m, r) in basis.into_iter().zip(residues) {
        by_degree.entry(m.degree()).or_default().push((m, r));
    }

    let mut kernel_gens: Vec<Polynomial> = Vec::new();
    for block in by_degree.values() {
        let images: Vec<Polynomial> = block.iter().map(|(_, r)| r.clone()).collect();
        for vec in kernel_of_images(&images, p) {
            let terms: Vec<(Monomial, Fp)> = vec
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (block[i].0.clone(), Fp::from_u64(c, p)))
                .collect();
            kernel_gens.push(Polynomial::from_terms(p, ring.nvars(), terms));
        }
    }

    let mut gens = q.gens().to_vec();
    gens.extend(kernel_gens);
    IdealHandle::new(&ring, gens, &budget)
}

/// Kernel of the linear map sending the i-th basis vector to `images[i]`,
/// as coefficient vectors over F_p.
fn kernel_of_images(images: &[Polynomial], p: u64) -> Vec<Vec<u64>> {
    let ncols = images.len();
    if ncols == 0 {
        return Vec::new();
    }
    // row index: every monomial that appears in some image
    let mut row_of: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for f in images {
        for (m, _) in f.terms() {
            let next = row_of.len();
            row_of.entry(m).or_insert(next);
        }
    }
    let nrows = row_of.len();
    let mut mat = vec![vec![0u64; ncols]; nrows];
    for (col, f) in images.iter().enumerate() {
        for (m, c) in f.terms() {
            mat[row_of[m]][col] = c.value();
        }
    }

    // Gauss-Jordan to reduced row echelon form
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(r) = (rank..nrows).find(|&r| mat[r][col] != 0) else {
            continue;
        };
        mat.swap(rank, r);
        let inv = Fp::from_u64(mat[rank][col], p).inv().value();
        for x in mat[rank][col..].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = mat[rank].clone();
        for (r2, row) in mat.iter_mut().enumerate() {
            if r2 != rank && row[col] != 0 {
                let f = row[col];
                for (x, &pv) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    let t = f * pv % p;
                    *x = (*x + p - t) % p;
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }

    let mut kernel = Vec::new();
    for j in 0..ncols {
        if pivot_of_col[j].is_some() {
            continue;
        }
        let mut v = vec![0u64; ncols];
        v[j] = 1;
        for (c, pivot) in pivot_of_col.iter().enumerate() {
            if let Some(r) = pivot {
                v[c] = (p - mat[*r][j]) % p;
            }
        }
        kernel.push(v);
    }
    kernel
}

/// Frobenius closure of an m-primary homogeneous ideal, by stabilizing the
/// ascending chain K_1 ⊆ K_2 ⊆ ….
pub fn frobenius_closure(q: &IdealHandle, cfg: &Config) -> Result<ClosureResult> {
    if !q.is_homogeneous() {
        return Err(Error::Invalid(
            "Frobenius closure requires a homogeneous ideal".into(),
        ));
    }
    if !q.is_m_primary(cfg.length_cap)? {
        return Err(Error::NotMPrimary(
            "Frobenius closure requires finite colength".into(),
        ));
    }
    let mut tracker = ChainTracker::new(q.clone(), cfg.window, cfg.min_e as u64);
    let mut certified = false;
    for e in 1..=cfg.cap_e {
        let k_e = frobenius_closure_step(q, e, cfg)?;
        if tracker.push(e as u64, k_e, cfg)? {
            certified = true;
            break;
        }
    }
    Ok(ClosureResult {
        ideal: tracker.prev,
        kind: ClosureKind::Frobenius,
        stabilized_at: tracker.first_appeared,
        window: tracker.run,
        cap: cfg.cap_e as u64,
        certified,
    })
}

/// One level of the limit-closure chain:
/// (x_1^(n+1), …, x_d^(n+1)) : (x_1⋯x_d)^n.
pub fn limit_closure_step(
    ring: &Ring,
    gens: &[Polynomial],
    n: u64,
    cfg: &Config,
) -> Result<IdealHandle> {
    let budget = cfg.budget();
    let mut powered = Vec::with_capacity(gens.len());
    for g in gens {
        powered.push(g.pow(n + 1)?);
    }
    let powered = IdealHandle::new(ring, powered, &budget)?;
    let mut prod = Polynomial::constant(Fp::one(ring.p()), ring.nvars());
    for g in gens {
        prod = prod.mul(g)?;
    }
    powered.colon_poly(&prod.pow(n)?, &budget)
}

/// Limit closure of the parameter ideal generated by an explicit sequence.
/// The result depends only on the ideal; generator independence is a tested
/// property, not an assumption.
pub fn limit_closure(ring: &Ring, gens: &[Polynomial], cfg: &Config) -> Result<ClosureResult> {
    let q = validate_parameter_sequence(ring, gens, cfg)?;
    let budget = cfg.budget();
    if ring.dim() == 0 {
        // the empty system of parameters: the chain (0) : 1 is constant
        return Ok(ClosureResult {
            ideal: q,
            kind: ClosureKind::Limit,
            stabilized_at: 0,
            window: cfg.window,
            cap: cfg.cap_n,
            certified: true,
        });
    }
    let mut tracker = ChainTracker::new(q.clone(), cfg.window, 0);
    let mut certified = false;
    for n in 1..=cfg.cap_n {
        let j_n = limit_closure_step(ring, gens, n, cfg)?;
        if tracker.push(n, j_n.sum(&q, &budget)?, cfg)? {
            certified = true;
            break;
        }
    }
    Ok(ClosureResult {
        ideal: tracker.prev.sum(&q, &budget)?,
        kind: ClosureKind::Limit,
        stabilized_at: tracker.first_appeared,
        window: tracker.run,
        cap: cfg.cap_n,
        certified,
    })
}

/// q^F + q^lim, certified when both constituents are.
pub fn f_lim_closure(ring: &Ring, gens: &[Polynomial], cfg: &Config) -> Result<ClosureResult> {
    let q = validate_parameter_sequence(ring, gens, cfg)?;
    let budget = cfg.budget();
    let frob = frobenius_closure(&q, cfg)?;
    let lim = limit_closure(ring, gens, cfg)?;
    Ok(ClosureResult {
        ideal: frob.ideal.sum(&lim.ideal, &budget)?,
        kind: ClosureKind::FLim,
        stabilized_at: frob.stabilized_at.max(lim.stabilized_at),
        window: frob.window.min(lim.window),
        cap: frob.cap.max(lim.cap),
        certified: frob.certified && lim.certified,
    })
}

/// (q^lim)^F: Frobenius closure of the limit closure.
pub fn lim_then_frobenius(ring: &Ring, gens: &[Polynomial], cfg: &Config) -> Result<ClosureResult> {
    let lim = limit_closure(ring, gens, cfg)?;
    let frob = frobenius_closure(&lim.ideal, cfg)?;
    Ok(ClosureResult {
        ideal: frob.ideal,
        kind: ClosureKind::LimThenFrobenius,
        stabilized_at: frob.stabilized_at.max(lim.stabilized_at),
        window: frob.window.min(lim.window),
        cap: frob.cap.max(lim.cap),
        certified: frob.certified && lim.certified,
    })
}

/// Bounded tight-closure membership probe: check c·x^(p^e) ∈ q^[p^e] for
/// e = 1..E with a user-asserted test element c. A single failure certifies
/// x ∉ q^* when c is genuine; uniform passing is evidence only.
pub fn tight_closure_probe(
    q: &IdealHandle,
    x: &Polynomial,
    c: &Polynomial,
    cap_e: u32,
    cfg: &Config,
) -> Result<TightProbeResult> {
    if c.is_zero() {
        return Err(Error::ZeroTestElement);
    }
    if cap_e == 0 {
        return Err(Error::Invalid("tight-closure probe needs E >= 1".into()));
    }
    let budget = cfg.budget();
    q.ring().check_poly(x)?;
    q.ring().check_poly(c)?;
    for e in 1..=cap_e {
        let bracket = q.bracket_power(e, &budget)?;
        let lhs = c.mul(&x.frobenius_power(e)?)?;
        if !bracket.contains_poly(&lhs, &budget)? {
            return Ok(TightProbeResult {
                element: x.clone(),
                test_element: c.clone(),
                verdict: TightVerdict::NotInClosure { witness_e: e },
                cap_e,
            });
        }
    }
    Ok(TightProbeResult {
        element: x.clone(),
        test_element: c.clone(),
        verdict: TightVerdict::InClosureUpTo(cap_e),
        cap_e,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::GbBudget;
    use crate::parse::{parse_generators, parse_ring_file, poly_parse};

    fn hyp4() -> Ring {
        parse_ring_file("char 5\nvars x y z\nrel x^4+y^4+z^4\n").unwrap()
    }

    fn quintic() -> Ring {
        parse_ring_file("char 2\nvars x y z\nrel x^5+y^5+z^5\n").unwrap()
    }

    fn sr4() -> Ring {
        parse_ring_file("char 2\nvars x y z w\nrel x*z\nrel x*w\nrel y*z\nrel y*w\n").unwrap()
    }

    fn ideal(ring: &Ring, text: &str) -> IdealHandle {
        IdealHandle::new(ring, parse_generators(text, ring).unwrap(), &GbBudget::default()).unwrap()
    }

    #[test]
    fn quartic_frobenius_closure_adds_one_socle_element() {
        let ring = hyp4();
        let cfg = Config::default();
        let q = ideal(&ring, "y^2,z^2");
        let result = frobenius_closure(&q, &cfg).unwrap();
        assert!(result.certified);
        assert_eq!(result.ideal, ideal(&ring, "y^2,z^2,x^3*y*z"));
    }

    #[test]
    fn quintic_deg_one_closure() {
        let ring = quintic();
        let cfg = Config::default();
        let q = ideal(&ring, "x,y");
        let result = frobenius_closure(&q, &cfg).unwrap();
        assert!(result.certified);
        assert_eq!(result.ideal, ideal(&ring, "x,y,z^2"));
    }

    #[test]
    fn regular_ring_ideals_are_frobenius_closed() {
        let ring = parse_ring_file("char 5\nvars x y\n").unwrap();
        let cfg = Config::default();
        for text in ["x,y", "x^2,y^3", "x^2+x*y,y^2"] {
            let q = ideal(&ring, text);
            let result = frobenius_closure(&q, &cfg).unwrap();
            assert!(result.certified);
            assert_eq!(result.ideal, q, "failed for {text}");
            assert_eq!(result.stabilized_at, 0);
        }
    }

    #[test]
    fn frobenius_closure_rejects_non_primary() {
        let ring = hyp4();
        let cfg = Config::default();
        let i = ideal(&ring, "y^2");
        assert!(matches!(frobenius_closure(&i, &cfg), Err(Error::NotMPrimary(_))));
    }

    #[test]
    fn quartic_limit_closure_is_trivial_on_cm_ring() {
        let ring = hyp4();
        let cfg = Config::default();
        let gens = parse_generators("y^2,z^2", &ring).unwrap();
        let result = limit_closure(&ring, &gens, &cfg).unwrap();
        assert!(result.certified);
        assert_eq!(result.ideal, ideal(&ring, "y^2,z^2"));
    }

    #[test]
    fn stanley_reisner_limit_closure_is_maximal() {
        let ring = sr4();
        let cfg = Config::default();
        let gens = parse_generators("x+z,y+w", &ring).unwrap();
        let result = limit_closure(&ring, &gens, &cfg).unwrap();
        assert!(result.certified);
        assert_eq!(result.ideal, IdealHandle::maximal(&ring, &GbBudget::default()).unwrap());
        // colength drop of two
        let q = ideal(&ring, "x+z,y+w");
        assert_eq!(q.colength(10_000).unwrap(), Some(3));
        assert_eq!(result.ideal.colength(10_000).unwrap(), Some(1));
    }

    #[test]
    fn stanley_reisner_matches_the_colon_sum_formula() {
        // on a Buchsbaum presentation the chain value agrees with
        // q + sum_i (x_1,..,x_i^,..,x_d) : x_i
        let ring = sr4();
        let cfg = Config::default();
        let budget = GbBudget::default();
        for text in ["x+z,y+w", "x+w,y+z"] {
            let gens = parse_generators(text, &ring).unwrap();
            let q = IdealHandle::new(&ring, gens.clone(), &budget).unwrap();
            let lim = limit_closure(&ring, &gens, &cfg).unwrap();
            assert!(lim.certified);
            let g0 = IdealHandle::new(&ring, vec![gens[0].clone()], &budget).unwrap();
            let g1 = IdealHandle::new(&ring, vec![gens[1].clone()], &budget).unwrap();
            let formula = q
                .sum(&g1.colon_poly(&gens[0], &budget).unwrap(), &budget)
                .unwrap()
                .sum(&g0.colon_poly(&gens[1], &budget).unwrap(), &budget)
                .unwrap();
            assert_eq!(formula, lim.ideal, "colon-sum formula failed for ({text})");
        }
    }

    #[test]
    fn one_dim_hypersurface_limit_closure() {
        let ring = parse_ring_file("char 3\nvars x y\nrel x*y\n").unwrap();
        let cfg = Config::default();
        let gens = parse_generators("x+y", &ring).unwrap();
        let result = limit_closure(&ring, &gens, &cfg).unwrap();
        assert!(result.certified);
        assert_eq!(result.ideal, ideal(&ring, "x+y"));
    }

    #[test]
    fn limit_closure_validates_input() {
        let ring = hyp4();
        let cfg = Config::default();
        let too_short = parse_generators("y^2", &ring).unwrap();
        assert!(matches!(
            limit_closure(&ring, &too_short, &cfg),
            Err(Error::NotParameterSequence(_))
        ));
        let not_cofinite = parse_generators("y,y^2", &ring).unwrap();
        assert!(limit_closure(&ring, &not_cofinite, &cfg).is_err());
    }

    #[test]
    fn flim_and_limf_on_the_quartic() {
        let ring = hyp4();
        let cfg = Config::default();
        let gens = parse_generators("y^2,z^2", &ring).unwrap();
        let expected = ideal(&ring, "y^2,z^2,x^3*y*z");
        let flim = f_lim_closure(&ring, &gens, &cfg).unwrap();
        assert!(flim.certified);
        assert_eq!(flim.ideal, expected);
        let limf = lim_then_frobenius(&ring, &gens, &cfg).unwrap();
        assert!(limf.certified);
        assert_eq!(limf.ideal, expected);
    }

    #[test]
    fn tight_probe_on_the_quintic() {
        let ring = quintic();
        let cfg = Config::default();
        let q1 = ideal(&ring, "x,y");
        let z2 = poly_parse("z^2", &ring).unwrap();
        let z = poly_parse("z", &ring).unwrap();
        let c = poly_parse("z^3", &ring).unwrap();
        let r = tight_closure_probe(&q1, &z2, &c, 4, &cfg).unwrap();
        assert_eq!(r.verdict, TightVerdict::InClosureUpTo(4));
        let r = tight_closure_probe(&q1, &z, &c, 6, &cfg).unwrap();
        assert!(matches!(r.verdict, TightVerdict::NotInClosure { .. }));
        // literal members always pass
        let x = poly_parse("x", &ring).unwrap();
        let r = tight_closure_probe(&q1, &x, &c, 4, &cfg).unwrap();
        assert_eq!(r.verdict, TightVerdict::InClosureUpTo(4));
        // zero multiplier is rejected
        let zero = poly_parse("0", &ring).unwrap();
        assert!(matches!(
            tight_closure_probe(&q1, &z, &zero, 4, &cfg),
            Err(Error::ZeroTestElement)
        ));
    }

    #[test]
    fn min_e_forces_the_chain_past_early_stabilization() {
        let ring = hyp4();
        let q = ideal(&ring, "y^2,z^2");
        let relaxed = frobenius_closure(&q, &Config::default()).unwrap();
        let forced = frobenius_closure(&q, &Config { min_e: 4, ..Default::default() }).unwrap();
        assert!(forced.certified);
        assert_eq!(forced.ideal, relaxed.ideal);
        // with the floor in place certification cannot fire before e = 4,
        // and an unreachable floor leaves the result uncertified
        let capped = frobenius_closure(&q, &Config { min_e: 10, cap_e: 6, ..Default::default() })
            .unwrap();
        assert!(!capped.certified);
        assert_eq!(capped.ideal, relaxed.ideal);
    }

    #[test]
    fn dimension_zero_ring_takes_the_empty_sequence() {
        let ring = parse_ring_file("char 5\nvars x y\nrel x^2\nrel x*y\nrel y^3\n").unwrap();
        assert_eq!(ring.dim(), 0);
        let cfg = Config::default();
        let r = limit_closure(&ring, &[], &cfg).unwrap();
        assert!(r.certified);
        assert!(r.ideal.is_zero_in_quotient());
        // a nonempty sequence is rejected in dimension zero
        let x = poly_parse("x", &ring).unwrap();
        assert!(matches!(
            limit_closure(&ring, &[x], &cfg),
            Err(Error::NotParameterSequence(_))
        ));
    }

    #[test]
    fn overflowing_frobenius_exponents_error_loudly() {
        let ring = parse_ring_file("char 2147483647\nvars x y\n").unwrap();
        let cfg = Config::default();
        let q = ideal(&ring, "x,y");
        // p^e no longer fits: the bracket power must refuse, not wrap
        assert!(matches!(
            q.bracket_power(3, &cfg.budget()),
            Err(Error::Overflow(_))
        ));
        let f = poly_parse("x+y", &ring).unwrap();
        assert!(matches!(f.frobenius_power(3), Err(Error::Overflow(_))));
        // small exponents still work at the characteristic cap
        assert_eq!(f.frobenius_power(1).unwrap().num_terms(), 2);
    }

    #[test]
    fn extensivity_and_idempotence() {
        let ring = quintic();
        let cfg = Config::default();
        let budget = GbBudget::default();
        for text in ["x,y", "x^2,y^2", "y,z"] {
            let q = ideal(&ring, text);
            let r = frobenius_closure(&q, &cfg).unwrap();
            assert!(r.certified);
            assert!(r.ideal.contains(&q, &budget).unwrap());
            let again = frobenius_closure(&r.ideal, &cfg).unwrap();
            assert!(again.certified);
            assert_eq!(again.ideal, r.ideal, "idempotence failed for {text}");
        }
    }
}
