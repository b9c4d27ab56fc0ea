//! Ideal algebra in the quotient ring R = S/J. An ideal of R is always
//! manipulated through a lift in S containing J: every handle's Gröbner
//! basis is computed from (generators + J), so two handles are equal exactly
//! when their reduced bases coincide.

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::groebner::{
    buchberger, eliminate, ideal_member, normal_form, std_monomials, GbBudget, GroebnerBasis,
    StdMonomials,
};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// An ideal of R = S/J, held as generator lifts plus the cached reduced
/// Gröbner basis of (lifts + J).
#[derive(Debug, Clone)]
pub struct IdealHandle {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: GroebnerBasis,
}

impl PartialEq for IdealHandle {
    fn eq(&self, other: &Self) -> bool {
        self.gb.elements() == other.gb.elements()
    }
}

impl Eq for IdealHandle {}

impl IdealHandle {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>, budget: &GbBudget) -> Result<Self> {
        for g in &gens {
            ring.check_poly(g)?;
        }
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let mut input = gens.clone();
        input.extend(ring.defining_gb().elements().iter().cloned());
        let gb = buchberger(&input, ring.order(), ring.p(), ring.nvars(), budget)?;
        Ok(IdealHandle { ring: ring.clone(), gens, gb })
    }

    pub fn zero(ring: &Ring, budget: &GbBudget) -> Result<Self> {
        IdealHandle::new(ring, Vec::new(), budget)
    }

    /// The maximal ideal m = (vars).
    pub fn maximal(ring: &Ring, budget: &GbBudget) -> Result<Self> {
        IdealHandle::new(ring, ring.maximal_ideal_gens(), budget)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn is_zero_in_quotient(&self) -> bool {
        self.gb.elements() == self.ring.defining_gb().elements()
    }

    pub fn is_proper(&self) -> bool {
        !self.gb.is_unit_ideal()
    }

    /// Every reduced-basis element homogeneous; equivalent to the ideal
    /// being homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.gb.elements().iter().all(|g| g.is_homogeneous())
    }

    pub fn contains_poly(&self, f: &Polynomial, budget: &GbBudget) -> Result<bool> {
        self.ring.check_poly(f)?;
        ideal_member(f, &self.gb, budget)
    }

    pub fn normal_form(&self, f: &Polynomial, budget: &GbBudget) -> Result<Polynomial> {
        self.ring.check_poly(f)?;
        normal_form(f, &self.gb, budget)
    }

    /// self ⊇ other.
    pub fn contains(&self, other: &IdealHandle, budget: &GbBudget) -> Result<bool> {
        for g in other.gb.elements() {
            if !self.contains_poly(g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &IdealHandle) -> bool {
        self == other
    }

    pub fn sum(&self, other: &IdealHandle, budget: &GbBudget) -> Result<IdealHandle> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        IdealHandle::new(&self.ring, gens, budget)
    }

    pub fn product(&self, other: &IdealHandle, budget: &GbBudget) -> Result<IdealHandle> {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        IdealHandle::new(&self.ring, gens, budget)
    }

    /// Intersection via the t-trick: eliminate t from t·A + (1-t)·B.
    pub fn intersect(&self, other: &IdealHandle, budget: &GbBudget) -> Result<IdealHandle> {
        let a = self.lift_generators();
        let b = other.lift_generators();
        let gens = intersect_raw(&a, &b, self.ring.p(), self.ring.nvars(), budget)?;
        IdealHandle::new(&self.ring, gens, budget)
    }

    /// Colon ideal self : other = { r : r·other ⊆ self }, computed
    /// generator-wise: each (self : g) via eliminating the intersection with
    /// (g) and dividing by g, then intersecting over the generators of
    /// `other`.
    pub fn colon(&self, other: &IdealHandle, budget: &GbBudget) -> Result<IdealHandle> {
        let divisors: Vec<&Polynomial> = other.gens.iter().filter(|g| !g.is_zero()).collect();
        if divisors.is_empty() {
            return Err(Error::ColonByZero);
        }
        let mut acc: Option<IdealHandle> = None;
        for g in divisors {
            let part = self.colon_poly(g, budget)?;
            acc = Some(match acc {
                None => part,
                Some(prev) => prev.intersect(&part, budget)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// self : (f) for a single nonzero f.
    pub fn colon_poly(&self, f: &Polynomial, budget: &GbBudget) -> Result<IdealHandle> {
        self.ring.check_poly(f)?;
        if f.is_zero() {
            return Err(Error::ColonByZero);
        }
        let a = self.lift_generators();
        let meet = intersect_raw(&a, std::slice::from_ref(f), self.ring.p(), self.ring.nvars(), budget)?;
        let mut gens = Vec::with_capacity(meet.len());
        for h in &meet {
            gens.push(div_exact(h, f, self.ring.order())?);
        }
        IdealHandle::new(&self.ring, gens, budget)
    }

    /// Saturation self : f^∞ via eliminating t from self + (t·f - 1).
    pub fn saturate(&self, f: &Polynomial, budget: &GbBudget) -> Result<IdealHandle> {
        self.ring.check_poly(f)?;
        if f.is_zero() {
            return Err(Error::ColonByZero);
        }
        let nvars = self.ring.nvars();
        let p = self.ring.p();
        let mut ext: Vec<Polynomial> = self.lift_generators().iter().map(|g| g.prepend_vars(1)).collect();
        let t = Polynomial::var(0, p, nvars + 1);
        let one = Polynomial::constant(Fp::one(p), nvars + 1);
        ext.push(t.mul(&f.prepend_vars(1))?.sub(&one));
        let keep: Vec<usize> = (1..=nvars).collect();
        let out = eliminate(&ext, &keep, p, nvars + 1, budget)?;
        let gens: Vec<Polynomial> = out.iter().map(|g| g.drop_leading_vars(1)).collect();
        IdealHandle::new(&self.ring, gens, budget)
    }

    /// Frobenius bracket power: the ideal generated by g^(p^e) over the
    /// stored generators. Independent of the generating set.
    pub fn bracket_power(&self, e: u32, budget: &GbBudget) -> Result<IdealHandle> {
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            gens.push(g.frobenius_power(e)?);
        }
        IdealHandle::new(&self.ring, gens, budget)
    }

    /// Standard monomials of the lift (basis of R/I as an F_p-vector space).
    pub fn std_monomials(&self, cap: usize) -> Result<StdMonomials> {
        std_monomials(&self.gb, cap)
    }

    /// Vector-space dimension of R/I; None when infinite.
    pub fn colength(&self, cap: usize) -> Result<Option<usize>> {
        Ok(self.std_monomials(cap)?.count())
    }

    pub fn is_m_primary(&self, cap: usize) -> Result<bool> {
        Ok(self.colength(cap)?.is_some())
    }

    /// Generator lifts together with J's basis: a generating set of the lift
    /// ideal in S.
    pub fn lift_generators(&self) -> Vec<Polynomial> {
        let mut out = self.gens.clone();
        out.extend(self.ring.defining_gb().elements().iter().cloned());
        out
    }

    /// A minimal generating set of the ideal in R: reduced-basis elements
    /// with the redundant ones (members of J plus the other generators)
    /// greedily removed. Canonical given the deterministic basis order.
    pub fn minimal_generators(&self, budget: &GbBudget) -> Result<Vec<Polynomial>> {
        let mut kept: Vec<Polynomial> = self
            .gb
            .elements()
            .iter()
            .filter(|g| !ideal_member(g, self.ring.defining_gb(), budget).unwrap_or(false))
            .cloned()
            .collect();
        let mut i = 0;
        while i < kept.len() {
            let mut input: Vec<Polynomial> = kept
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, g)| g.clone())
                .collect();
            input.extend(self.ring.defining_gb().elements().iter().cloned());
            let gb = buchberger(&input, self.ring.order(), self.ring.p(), self.ring.nvars(), budget)?;
            if ideal_member(&kept[i], &gb, budget)? {
                kept.remove(i);
            } else {
                i += 1;
            }
        }
        Ok(kept)
    }

    /// Canonical text of the reduced basis, ascending by leading monomial.
    pub fn basis_text(&self) -> Vec<String> {
        self.gb.elements().iter().map(|g| self.ring.text(g)).collect()
    }
}

/// Raw t-trick intersection of two generator lists in S.
fn intersect_raw(
    a: &[Polynomial],
    b: &[Polynomial],
    p: u64,
    nvars: usize,
    budget: &GbBudget,
) -> Result<Vec<Polynomial>> {
    let t = Polynomial::var(0, p, nvars + 1);
    let one = Polynomial::constant(Fp::one(p), nvars + 1);
    let one_minus_t = one.sub(&t);
    let mut ext: Vec<Polynomial> = Vec::with_capacity(a.len() + b.len());
    for f in a {
        ext.push(t.mul(&f.prepend_vars(1))?);
    }
    for g in b {
        ext.push(one_minus_t.mul(&g.prepend_vars(1))?);
    }
    let keep: Vec<usize> = (1..=nvars).collect();
    let out = eliminate(&ext, &keep, p, nvars + 1, budget)?;
    Ok(out.iter().map(|g| g.drop_leading_vars(1)).collect())
}

/// Exact multivariate division h / f; errors when f does not divide h.
fn div_exact(h: &Polynomial, f: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    let (lm_f, lc_f) = f
        .leading_term(order)
        .ok_or_else(|| Error::Invalid("division by zero polynomial".into()))?
        .clone();
    let mut rem = h.clone();
    let mut quot = Polynomial::zero(h.characteristic(), h.nvars());
    while !rem.is_zero() {
        let (lm_r, lc_r) = rem.leading_term(order).unwrap().clone();
        let Some(q) = lm_r.div(&lm_f) else {
            return Err(Error::Invalid(
                "internal: intersection output not divisible in colon computation".into(),
            ));
        };
        let c = lc_r.mul(&lc_f.inv());
        quot = quot.add(&Polynomial::monomial(q.clone(), c));
        rem = rem.sub(&f.mul_term(&q, &c)?);
    }
    debug_assert_eq!(&quot.mul(f).unwrap(), h);
    Ok(quot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_ring_file, poly_parse};

    fn hyp4() -> Ring {
        parse_ring_file("char 5\nvars x y z\nrel x^4+y^4+z^4\n").unwrap()
    }

    fn regular2() -> Ring {
        parse_ring_file("char 5\nvars x y\n").unwrap()
    }

    fn sr4() -> Ring {
        parse_ring_file("char 2\nvars x y z w\nrel x*z\nrel x*w\nrel y*z\nrel y*w\n").unwrap()
    }

    fn ideal(ring: &Ring, gens: &[&str]) -> IdealHandle {
        let budget = GbBudget::default();
        let gens: Vec<Polynomial> = gens.iter().map(|t| poly_parse(t, ring).unwrap()).collect();
        IdealHandle::new(ring, gens, &budget).unwrap()
    }

    #[test]
    fn sum_with_zero_is_identity() {
        let ring = hyp4();
        let budget = GbBudget::default();
        let i = ideal(&ring, &["y^2", "z^2"]);
        let z = IdealHandle::zero(&ring, &budget).unwrap();
        assert_eq!(i.sum(&z, &budget).unwrap(), i);
    }

    #[test]
    fn product_of_principals() {
        let ring = regular2();
        let budget = GbBudget::default();
        let i = ideal(&ring, &["x"]);
        let k = ideal(&ring, &["y"]);
        assert_eq!(i.product(&k, &budget).unwrap(), ideal(&ring, &["x*y"]));
    }

    #[test]
    fn intersection_examples() {
        let ring = regular2();
        let budget = GbBudget::default();
        let i = ideal(&ring, &["x"]);
        assert_eq!(i.intersect(&i, &budget).unwrap(), i);
        let k = ideal(&ring, &["y"]);
        assert_eq!(i.intersect(&k, &budget).unwrap(), ideal(&ring, &["x*y"]));
        let a = ideal(&ring, &["x^2"]);
        let b = ideal(&ring, &["x^3"]);
        assert_eq!(a.intersect(&b, &budget).unwrap(), b);
    }

    #[test]
    fn colon_examples() {
        let budget = GbBudget::default();
        let ring = regular2();
        let i = ideal(&ring, &["x^2"]);
        let k = ideal(&ring, &["x"]);
        assert_eq!(i.colon(&k, &budget).unwrap(), k);
        // the paper-adjacent case: (y^2, z^2) : (y^2, z^2, x^3yz) = m on the quartic
        let ring = hyp4();
        let q = ideal(&ring, &["y^2", "z^2"]);
        let qf = ideal(&ring, &["y^2", "z^2", "x^3*y*z"]);
        let m = IdealHandle::maximal(&ring, &budget).unwrap();
        assert_eq!(q.colon(&qf, &budget).unwrap(), m);
        // colon in the Stanley-Reisner quotient
        let ring = sr4();
        let z = IdealHandle::zero(&ring, &budget).unwrap();
        let x = ideal(&ring, &["x"]);
        let expected = ideal(&ring, &["z", "w"]);
        assert_eq!(z.colon(&x, &budget).unwrap(), expected);
        assert!(matches!(z.colon(&z, &budget), Err(Error::ColonByZero)));
    }

    #[test]
    fn colon_contains_the_ideal() {
        let ring = hyp4();
        let budget = GbBudget::default();
        let i = ideal(&ring, &["y^2", "z^2"]);
        let k = ideal(&ring, &["y", "z"]);
        let c = i.colon(&k, &budget).unwrap();
        assert!(c.contains(&i, &budget).unwrap());
        // I : (I : K) ⊇ K
        let back = i.colon(&c, &budget).unwrap();
        assert!(back.contains(&k, &budget).unwrap());
    }

    #[test]
    fn saturation_examples() {
        let budget = GbBudget::default();
        let ring = regular2();
        let i = ideal(&ring, &["x^2*y"]);
        let x = poly_parse("x", &ring).unwrap();
        assert_eq!(i.saturate(&x, &budget).unwrap(), ideal(&ring, &["y"]));
        let one = poly_parse("1", &ring).unwrap();
        assert_eq!(i.saturate(&one, &budget).unwrap(), i);
        // Stanley-Reisner: (0) : x^∞ = (z, w)
        let ring = sr4();
        let z = IdealHandle::zero(&ring, &budget).unwrap();
        let x = poly_parse("x", &ring).unwrap();
        assert_eq!(z.saturate(&x, &budget).unwrap(), ideal(&ring, &["z", "w"]));
    }

    #[test]
    fn bracket_power_examples() {
        let budget = GbBudget::default();
        let ring = parse_ring_file("char 2\nvars x y\n").unwrap();
        let i = ideal(&ring, &["x", "y"]);
        assert_eq!(i.bracket_power(1, &budget).unwrap(), ideal(&ring, &["x^2", "y^2"]));
        assert_eq!(i.bracket_power(0, &budget).unwrap(), i);
        let ring3 = parse_ring_file("char 3\nvars x y\n").unwrap();
        let j = ideal(&ring3, &["x+y"]);
        assert_eq!(j.bracket_power(1, &budget).unwrap(), ideal(&ring3, &["x^3+y^3"]));
    }

    #[test]
    fn bracket_power_generator_independence() {
        let ring = hyp4();
        let budget = GbBudget::default();
        let i = ideal(&ring, &["y^2", "z^2"]);
        // same ideal, messier generators
        let j = ideal(&ring, &["y^2+z^2", "z^2", "y^2+4*z^2"]);
        assert_eq!(i, j);
        assert_eq!(i.bracket_power(2, &budget).unwrap(), j.bracket_power(2, &budget).unwrap());
    }

    #[test]
    fn bracket_distributes_over_sums() {
        let ring = hyp4();
        let budget = GbBudget::default();
        let i = ideal(&ring, &["y^2"]);
        let k = ideal(&ring, &["z^2", "x*y"]);
        let lhs = i.sum(&k, &budget).unwrap().bracket_power(1, &budget).unwrap();
        let rhs = i
            .bracket_power(1, &budget)
            .unwrap()
            .sum(&k.bracket_power(1, &budget).unwrap(), &budget)
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn sum_contains_and_intersection_is_contained() {
        let ring = hyp4();
        let budget = GbBudget::default();
        let pairs = [
            ("y^2,z^2", "x*y,z^3"),
            ("x,y", "y,z"),
            ("x^2+y*z", "y^2,z^2"),
        ];
        for (a, b) in pairs {
            let i = ideal(&ring, &a.split(',').collect::<Vec<_>>());
            let k = ideal(&ring, &b.split(',').collect::<Vec<_>>());
            let s = i.sum(&k, &budget).unwrap();
            assert!(s.contains(&i, &budget).unwrap());
            assert!(s.contains(&k, &budget).unwrap());
            let meet = i.intersect(&k, &budget).unwrap();
            assert!(i.contains(&meet, &budget).unwrap());
            assert!(k.contains(&meet, &budget).unwrap());
            let prod = i.product(&k, &budget).unwrap();
            assert!(meet.contains(&prod, &budget).unwrap());
        }
    }

    #[test]
    fn containment_and_equality() {
        let ring = hyp4();
        let budget = GbBudget::default();
        let m = IdealHandle::maximal(&ring, &budget).unwrap();
        let q = ideal(&ring, &["y^2", "z^2"]);
        assert!(m.contains(&q, &budget).unwrap());
        assert!(!q.contains(&m, &budget).unwrap());
        let z = IdealHandle::zero(&ring, &budget).unwrap();
        assert_eq!(q.sum(&z, &budget).unwrap(), q);
    }

    #[test]
    fn colength_and_m_primary() {
        let ring = hyp4();
        let q = ideal(&ring, &["y^2", "z^2"]);
        assert_eq!(q.colength(100_000).unwrap(), Some(16));
        let m = ideal(&ring, &["x", "y", "z"]);
        assert_eq!(m.colength(100_000).unwrap(), Some(1));
        let one_var = ideal(&ring, &["y^2"]);
        assert_eq!(one_var.colength(100_000).unwrap(), None);
        assert!(!one_var.is_m_primary(100_000).unwrap());
    }

    #[test]
    fn minimal_generators_drop_defining_relations() {
        let ring = hyp4();
        let budget = GbBudget::default();
        let qf = ideal(&ring, &["y^2", "z^2", "x^3*y*z"]);
        let min = qf.minimal_generators(&budget).unwrap();
        // x^4 is in (y^2, z^2) + J so only three generators survive
        let texts: Vec<String> = min.iter().map(|g| ring.text(g)).collect();
        assert_eq!(texts, vec!["z^2", "y^2", "x^3*y*z"]);
    }
}
