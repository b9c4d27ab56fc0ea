//! Buchberger engine: reduced Gröbner bases, normal forms, ideal membership,
//! elimination, Krull dimension, and standard-monomial enumeration.
//!
//! The engine is deliberately plain: sugar selection, both of Buchberger's
//! pair criteria, deterministic tie-breaking, and explicit computation
//! budgets that fail loudly instead of returning a wrong answer.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

/// Resource caps for basis computation and reduction.
#[derive(Debug, Clone)]
pub struct GbBudget {
    /// Maximum number of S-pairs processed in one Buchberger run.
    pub max_pairs: usize,
    /// Maximum number of terms any intermediate polynomial may reach.
    pub max_terms: usize,
}

impl Default for GbBudget {
    fn default() -> Self {
        GbBudget { max_pairs: 500_000, max_terms: 1_000_000 }
    }
}

/// A polynomial kept sorted descending under one fixed monomial order; the
/// internal working form of the engine.
#[derive(Debug, Clone)]
struct OrdPoly {
    terms: Vec<(Monomial, Fp)>,
}

impl OrdPoly {
    fn from_polynomial(f: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms = f.terms().to_vec();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        OrdPoly { terms }
    }

    fn to_polynomial(&self, p: u64, nvars: usize) -> Polynomial {
        Polynomial::from_terms(p, nvars, self.terms.clone())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn leading(&self) -> &(Monomial, Fp) {
        &self.terms[0]
    }

    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.first() {
            let inv = lc.inv();
            for (_, c) in &mut self.terms {
                *c = c.mul(&inv);
            }
        }
    }

    fn sugar(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// self := self - c * m * g, merging the two sorted term lists.
    fn sub_mul(&self, c: &Fp, m: &Monomial, g: &OrdPoly, order: &MonomialOrder) -> Result<OrdPoly> {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < g.terms.len() {
            let gm = g.terms[j].0.mul(m)?;
            match order.compare(&self.terms[i].0, &gm) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let coeff = g.terms[j].1.mul(c).neg();
                    if !coeff.is_zero() {
                        out.push((gm, coeff));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = self.terms[i].1.sub(&g.terms[j].1.mul(c));
                    if !coeff.is_zero() {
                        out.push((gm, coeff));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        while j < g.terms.len() {
            let gm = g.terms[j].0.mul(m)?;
            let coeff = g.terms[j].1.mul(c).neg();
            if !coeff.is_zero() {
                out.push((gm, coeff));
            }
            j += 1;
        }
        Ok(OrdPoly { terms: out })
    }
}

/// A reduced Gröbner basis: monic elements, no term of any element divisible
/// by another element's leading monomial, sorted ascending by leading
/// monomial. Unique for a given (ideal, order).
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    p: u64,
    nvars: usize,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    // working copies, parallel to `elements`
    ord_elements: Vec<OrdPoly>,
    leading: Vec<(Monomial, Fp)>,
}

impl GroebnerBasis {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.leading.iter().map(|(m, _)| m.clone()).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.leading.iter().any(|(m, _)| m.is_one())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Full reduction of `f` modulo `basis` (sorted-desc working forms): the
/// remainder has no term divisible by any basis leading monomial. The
/// remainder modulo a Gröbner basis is the canonical normal form, which is
/// F_p-linear in `f`.
fn reduce_full(
    f: OrdPoly,
    basis: &[OrdPoly],
    order: &MonomialOrder,
    budget: &GbBudget,
) -> Result<OrdPoly> {
    let mut work = f;
    let mut i = 0;
    while i < work.terms.len() {
        if work.terms.len() > budget.max_terms {
            return Err(Error::BudgetExhausted(format!(
                "normal form exceeded {} terms",
                budget.max_terms
            )));
        }
        let (mon, coeff) = work.terms[i].clone();
        let mut reduced = false;
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (lm, lc) = g.leading();
            if let Some(quot) = mon.div(lm) {
                let c = coeff.mul(&lc.inv());
                work = work.sub_mul(&c, &quot, g, order)?;
                reduced = true;
                break;
            }
        }
        if !reduced {
            // terms above i are final: every later subtraction only touches
            // monomials strictly below the cancelled one
            i += 1;
        }
    }
    Ok(work)
}

/// Compute the reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(
    gens: &[Polynomial],
    order: &MonomialOrder,
    p: u64,
    nvars: usize,
    budget: &GbBudget,
) -> Result<GroebnerBasis> {
    assert_eq!(order.nvars(), nvars, "order arity must match the ring");
    let mut basis: Vec<OrdPoly> = Vec::new();
    let mut sugars: Vec<u64> = Vec::new();

    let mut seed: Vec<OrdPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            debug_assert_eq!(g.characteristic(), p);
            debug_assert_eq!(g.nvars(), nvars);
            OrdPoly::from_polynomial(g, order)
        })
        .collect();
    // deterministic start: seed generators sorted by leading monomial
    seed.sort_by(|a, b| order.compare(&a.leading().0, &b.leading().0));

    // pending S-pairs keyed by (sugar, i, j); BTreeSet pop-min gives the
    // sugar strategy with lexicographic pair index as tie-break
    let mut pairs: BTreeSet<(u64, usize, usize)> = BTreeSet::new();

    let push_element = |basis: &mut Vec<OrdPoly>,
                            sugars: &mut Vec<u64>,
                            pairs: &mut BTreeSet<(u64, usize, usize)>,
                            mut g: OrdPoly,
                            sugar: u64| {
        g.make_monic();
        let j = basis.len();
        for i in 0..j {
            let lm_i = &basis[i].leading().0;
            let lm_j = &g.leading().0;
            let lcm = lm_i.lcm(lm_j);
            let s = (sugars[i] + lcm.degree() - lm_i.degree())
                .max(sugar + lcm.degree() - lm_j.degree());
            pairs.insert((s, i, j));
        }
        sugars.push(sugar);
        basis.push(g);
    };

    for g in seed {
        let s = g.sugar();
        push_element(&mut basis, &mut sugars, &mut pairs, g, s);
    }

    let mut processed = 0usize;
    while let Some(&(sugar, i, j)) = pairs.iter().next() {
        pairs.remove(&(sugar, i, j));
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::BudgetExhausted(format!(
                "Buchberger exceeded {} S-pairs",
                budget.max_pairs
            )));
        }

        let (lm_i, _) = basis[i].leading().clone();
        let (lm_j, _) = basis[j].leading().clone();

        // first criterion: coprime leading monomials
        if lm_i.is_coprime_with(&lm_j) {
            continue;
        }
        // second (chain) criterion: some k with LT(k) | lcm(i,j) and both
        // companion pairs already handled
        let lcm_ij = lm_i.lcm(&lm_j);
        let mut skip = false;
        for (k, g) in basis.iter().enumerate() {
            if k == i || k == j || g.is_zero() {
                continue;
            }
            if g.leading().0.divides(&lcm_ij) {
                let pending = |a: usize, b: usize, set: &BTreeSet<(u64, usize, usize)>| {
                    let (a, b) = (a.min(b), a.max(b));
                    set.iter().any(|&(_, x, y)| x == a && y == b)
                };
                if !pending(i, k, &pairs) && !pending(j, k, &pairs) {
                    skip = true;
                    break;
                }
            }
        }
        if skip {
            continue;
        }

        // S-polynomial
        let (lm_i, lc_i) = basis[i].leading().clone();
        let (lm_j, lc_j) = basis[j].leading().clone();
        let quot_i = lcm_ij.div(&lm_i).unwrap();
        let quot_j = lcm_ij.div(&lm_j).unwrap();
        let zero = OrdPoly { terms: Vec::new() };
        let s_i = zero.sub_mul(&lc_i.inv().neg(), &quot_i, &basis[i], order)?;
        let spoly = s_i.sub_mul(&lc_j.inv(), &quot_j, &basis[j], order)?;

        let reduced = reduce_full(spoly, &basis, order, budget)?;
        if !reduced.is_zero() {
            let s = sugar.max(reduced.sugar());
            push_element(&mut basis, &mut sugars, &mut pairs, reduced, s);
        }
    }

    // interreduce to the unique reduced basis
    let mut kept: Vec<OrdPoly> = Vec::new();
    'outer: for (i, g) in basis.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        for (k, h) in basis.iter().enumerate() {
            if k == i || h.is_zero() {
                continue;
            }
            let divides = h.leading().0.divides(&g.leading().0);
            let strictly = h.leading().0 != g.leading().0;
            // equal leading monomials: keep the earliest
            if divides && (strictly || k < i) {
                continue 'outer;
            }
        }
        kept.push(g.clone());
    }
    let mut reduced_basis: Vec<OrdPoly> = Vec::new();
    for i in 0..kept.len() {
        let others: Vec<OrdPoly> = kept
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, g)| g.clone())
            .collect();
        let mut r = reduce_full(kept[i].clone(), &others, order, budget)?;
        if !r.is_zero() {
            r.make_monic();
            reduced_basis.push(r);
        }
    }
    reduced_basis.sort_by(|a, b| order.compare(&a.leading().0, &b.leading().0));

    let elements: Vec<Polynomial> = reduced_basis.iter().map(|g| g.to_polynomial(p, nvars)).collect();
    let leading: Vec<(Monomial, Fp)> = reduced_basis.iter().map(|g| g.leading().clone()).collect();
    Ok(GroebnerBasis { p, nvars, order: order.clone(), elements, ord_elements: reduced_basis, leading })
}

/// Canonical remainder of `f` modulo the basis.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis, budget: &GbBudget) -> Result<Polynomial> {
    assert_eq!(f.nvars(), gb.nvars, "arity mismatch in normal_form");
    assert_eq!(f.characteristic(), gb.p, "characteristic mismatch in normal_form");
    let work = OrdPoly::from_polynomial(f, &gb.order);
    let r = reduce_full(work, &gb.ord_elements, &gb.order, budget)?;
    Ok(r.to_polynomial(gb.p, gb.nvars))
}

/// Membership test: f lies in the ideal iff its normal form vanishes.
pub fn ideal_member(f: &Polynomial, gb: &GroebnerBasis, budget: &GbBudget) -> Result<bool> {
    Ok(normal_form(f, gb, budget)?.is_zero())
}

/// Generators of the elimination ideal I ∩ F_p[keep]: compute a basis under
/// a block order with the dropped variables leading, keep the elements free
/// of dropped variables.
pub fn eliminate(
    gens: &[Polynomial],
    keep: &[usize],
    p: u64,
    nvars: usize,
    budget: &GbBudget,
) -> Result<Vec<Polynomial>> {
    let keep_set: BTreeSet<usize> = keep.iter().copied().collect();
    let dropped: Vec<usize> = (0..nvars).filter(|i| !keep_set.contains(i)).collect();
    if dropped.is_empty() {
        let gb = buchberger(gens, &MonomialOrder::grevlex(nvars), p, nvars, budget)?;
        return Ok(gb.elements().to_vec());
    }
    let mut precedence = dropped.clone();
    precedence.extend(keep_set.iter().copied());
    let order = MonomialOrder::elimination(dropped.len(), precedence);
    let gb = buchberger(gens, &order, p, nvars, budget)?;
    let out: Vec<Polynomial> = gb
        .elements()
        .iter()
        .filter(|g| {
            g.terms()
                .iter()
                .all(|(m, _)| dropped.iter().all(|&d| m.0[d] == 0))
        })
        .cloned()
        .collect();
    Ok(out)
}

/// Krull dimension of S/(gens), computed combinatorially from the initial
/// ideal under grevlex: the largest set of variables meeting the support of
/// no leading monomial.
pub fn krull_dim(gens: &[Polynomial], p: u64, nvars: usize, budget: &GbBudget) -> Result<usize> {
    // grevlex is degree-compatible, which keeps the initial-ideal dimension
    // argument valid for inhomogeneous input too
    let gb = buchberger(gens, &MonomialOrder::grevlex(nvars), p, nvars, budget)?;
    if gb.is_unit_ideal() {
        return Err(Error::UnitIdeal);
    }
    Ok(dim_of_monomial_ideal(&gb.leading_monomials(), nvars))
}

/// Dimension of S/(monomial ideal) by brute force over variable subsets.
pub fn dim_of_monomial_ideal(leading: &[Monomial], nvars: usize) -> usize {
    let mut best = 0usize;
    for mask in 0u32..(1 << nvars) {
        let subset: Vec<usize> = (0..nvars).filter(|i| mask & (1 << i) != 0).collect();
        let independent = leading
            .iter()
            .all(|m| !m.support().iter().all(|v| subset.contains(v)));
        if independent {
            best = best.max(subset.len());
        }
    }
    best
}

/// Standard monomials of a basis: all monomials outside the initial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StdMonomials {
    Finite(Vec<Monomial>),
    Infinite,
}

impl StdMonomials {
    pub fn count(&self) -> Option<usize> {
        match self {
            StdMonomials::Finite(v) => Some(v.len()),
            StdMonomials::Infinite => None,
        }
    }
}

/// Monomials of total degree `d` in `nvars` variables, ascending.
pub fn monomials_of_degree(d: u64, nvars: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u64; nvars];
    fn rec(current: &mut Vec<u64>, idx: usize, remaining: u64, out: &mut Vec<Monomial>) {
        if idx + 1 == current.len() {
            current[idx] = remaining;
            out.push(Monomial(current.clone()));
            return;
        }
        for e in 0..=remaining {
            current[idx] = e;
            rec(current, idx + 1, remaining - e, out);
        }
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial(vec![]));
        }
        return out;
    }
    rec(&mut current, 0, d, &mut out);
    out.sort();
    out
}

/// Enumerate the standard monomials degree by degree. Returns `Infinite`
/// when the initial ideal has positive dimension; errors past `cap`.
pub fn std_monomials(gb: &GroebnerBasis, cap: usize) -> Result<StdMonomials> {
    if gb.is_unit_ideal() {
        return Ok(StdMonomials::Finite(Vec::new()));
    }
    let leading = gb.leading_monomials();
    if dim_of_monomial_ideal(&leading, gb.nvars) > 0 {
        return Ok(StdMonomials::Infinite);
    }
    let mut out = Vec::new();
    let mut d = 0u64;
    loop {
        let layer: Vec<Monomial> = monomials_of_degree(d, gb.nvars)
            .into_iter()
            .filter(|m| !leading.iter().any(|l| l.divides(m)))
            .collect();
        if layer.is_empty() {
            // a fully covered degree stays covered in all higher degrees
            break;
        }
        out.extend(layer);
        if out.len() > cap {
            return Err(Error::CapExceeded(cap));
        }
        d += 1;
    }
    Ok(StdMonomials::Finite(out))
}
