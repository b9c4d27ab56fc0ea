use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::monomial::{Monomial, MonomialOrder};

/// Sparse multivariate polynomial over F_p in canonical form: no zero
/// coefficients, terms sorted descending by the plain exponent-vector order.
/// The canonical form is independent of any monomial order, so structural
/// equality is ideal-theoretic equality of ring elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    p: u64,
    nvars: usize,
    terms: Vec<(Monomial, Fp)>,
}

impl Polynomial {
    pub fn zero(p: u64, nvars: usize) -> Self {
        Polynomial { p, nvars, terms: Vec::new() }
    }

    pub fn constant(c: Fp, nvars: usize) -> Self {
        let mut f = Polynomial::zero(c.characteristic(), nvars);
        if !c.is_zero() {
            f.terms.push((Monomial::one(nvars), c));
        }
        f
    }

    pub fn monomial(m: Monomial, c: Fp) -> Self {
        let nvars = m.nvars();
        let mut f = Polynomial::zero(c.characteristic(), nvars);
        if !c.is_zero() {
            f.terms.push((m, c));
        }
        f
    }

    pub fn var(index: usize, p: u64, nvars: usize) -> Self {
        Polynomial::monomial(Monomial::var(index, nvars), Fp::one(p))
    }

    /// Build from arbitrary (monomial, coefficient) pairs, merging duplicates
    /// and dropping zeros.
    pub fn from_terms(p: u64, nvars: usize, terms: Vec<(Monomial, Fp)>) -> Self {
        let mut map: BTreeMap<Monomial, Fp> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            let entry = map.entry(m).or_insert_with(|| Fp::zero(p));
            *entry = entry.add(&c);
        }
        let mut out: Vec<(Monomial, Fp)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial { p, nvars, terms: out }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Fp)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    fn check_compat(&self, other: &Polynomial) {
        assert_eq!(self.p, other.p, "mixed characteristics");
        assert_eq!(self.nvars, other.nvars, "mixed variable counts");
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_compat(other);
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Polynomial::from_terms(self.p, self.nvars, terms)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            p: self.p,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Fp) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.p, self.nvars);
        }
        Polynomial {
            p: self.p,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.mul(c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Fp) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero(self.p, self.nvars));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (mm, cc) in &self.terms {
            terms.push((mm.mul(m)?, cc.mul(c)));
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Ok(Polynomial { p: self.p, nvars: self.nvars, terms })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compat(other);
        let mut map: BTreeMap<Monomial, Fp> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb)?;
                let entry = map.entry(m).or_insert_with(|| Fp::zero(self.p));
                *entry = entry.add(&ca.mul(cb));
            }
        }
        let mut out: Vec<(Monomial, Fp)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_by(|a, b| b.0.cmp(&a.0));
        Ok(Polynomial { p: self.p, nvars: self.nvars, terms: out })
    }

    pub fn pow(&self, k: u64) -> Result<Polynomial> {
        let mut acc = Polynomial::constant(Fp::one(self.p), self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// f^(p^e), computed term by term: in characteristic p the Frobenius is
    /// additive, and over the prime field c^(p^e) = c.
    pub fn frobenius_power(&self, e: u32) -> Result<Polynomial> {
        if e == 0 {
            return Ok(self.clone());
        }
        let q = self
            .p
            .checked_pow(e)
            .ok_or(Error::Overflow("Frobenius exponent p^e"))?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.pow(q)?, *c));
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Ok(Polynomial { p: self.p, nvars: self.nvars, terms })
    }

    /// Leading term under the given order (the maximal term).
    pub fn leading_term<'a>(&'a self, order: &MonomialOrder) -> Option<&'a (Monomial, Fp)> {
        self.terms.iter().max_by(|a, b| order.compare(&a.0, &b.0))
    }

    /// Reinterpret in a ring with `extra` new variables prepended (used by
    /// the elimination constructions).
    pub fn prepend_vars(&self, extra: usize) -> Polynomial {
        let nv = self.nvars + extra;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u64; extra];
                e.extend_from_slice(&m.0);
                (Monomial(e), *c)
            })
            .collect();
        let mut f = Polynomial { p: self.p, nvars: nv, terms };
        f.terms.sort_by(|a, b| b.0.cmp(&a.0));
        f
    }

    /// Drop the first `extra` variables; every term must have exponent zero
    /// there (callers filter first).
    pub fn drop_leading_vars(&self, extra: usize) -> Polynomial {
        let terms: Vec<(Monomial, Fp)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                debug_assert!(m.0[..extra].iter().all(|&e| e == 0));
                (Monomial(m.0[extra..].to_vec()), *c)
            })
            .collect();
        let mut f = Polynomial { p: self.p, nvars: self.nvars - extra, terms };
        f.terms.sort_by(|a, b| b.0.cmp(&a.0));
        f
    }

    /// True when no term touches any of the first `extra` variables.
    pub fn avoids_leading_vars(&self, extra: usize) -> bool {
        self.terms.iter().all(|(m, _)| m.0[..extra].iter().all(|&e| e == 0))
    }

    /// Canonical text form: terms descending under `order`, coefficients in
    /// [1, p), `*` between factors, `^` for exponents. Round-trips through
    /// the parser.
    pub fn to_text(&self, names: &[String], order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut sorted: Vec<&(Monomial, Fp)> = self.terms.iter().collect();
        sorted.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut out = String::new();
        for (i, (m, c)) in sorted.iter().enumerate() {
            if i > 0 {
                out.push('+');
            }
            let mut factors: Vec<String> = Vec::new();
            if c.value() != 1 || m.is_one() {
                factors.push(format!("{}", c.value()));
            }
            for (vi, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(names[vi].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", names[vi], e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[u64]) -> Monomial {
        Monomial(e.to_vec())
    }

    fn xy_sum(p: u64) -> Polynomial {
        // x + y in two variables
        Polynomial::var(0, p, 2).add(&Polynomial::var(1, p, 2))
    }

    #[test]
    fn freshman_dream() {
        let f = xy_sum(2).frobenius_power(1).unwrap();
        assert_eq!(
            f,
            Polynomial::from_terms(
                2,
                2,
                vec![(mono(&[2, 0]), Fp::one(2)), (mono(&[0, 2]), Fp::one(2))]
            )
        );
        let g = xy_sum(3).frobenius_power(1).unwrap();
        assert_eq!(
            g,
            Polynomial::from_terms(
                3,
                2,
                vec![(mono(&[3, 0]), Fp::one(3)), (mono(&[0, 3]), Fp::one(3))]
            )
        );
    }

    #[test]
    fn frobenius_identity_at_e0() {
        let f = xy_sum(5);
        assert_eq!(f.frobenius_power(0).unwrap(), f);
    }

    #[test]
    fn cancellation_keeps_canonical_form() {
        let f = xy_sum(5);
        assert!(f.sub(&f).is_zero());
        assert_eq!(f.add(&f.neg()).num_terms(), 0);
    }

    fn arb_poly(p: u64, nvars: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(
            (proptest::collection::vec(0u64..4, nvars), 0..p),
            0..5,
        )
        .prop_map(move |ts| {
            Polynomial::from_terms(
                p,
                nvars,
                ts.into_iter().map(|(e, c)| (Monomial(e), Fp::from_u64(c, p))).collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(5, 3), g in arb_poly(5, 3), h in arb_poly(5, 3)) {
            prop_assert_eq!(f.add(&g), g.add(&f));
            prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
            prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
            prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
            prop_assert_eq!(f.mul(&g.add(&h)).unwrap(), f.mul(&g).unwrap().add(&f.mul(&h).unwrap()));
        }

        #[test]
        fn frobenius_additive_and_composes(f in arb_poly(3, 2), g in arb_poly(3, 2)) {
            // (f+g)^(p^e) = f^(p^e) + g^(p^e)
            let lhs = f.add(&g).frobenius_power(2).unwrap();
            let rhs = f.frobenius_power(2).unwrap().add(&g.frobenius_power(2).unwrap());
            prop_assert_eq!(lhs, rhs);
            // composition of iterates
            let once_then_twice = f.frobenius_power(1).unwrap().frobenius_power(2).unwrap();
            prop_assert_eq!(once_then_twice, f.frobenius_power(3).unwrap());
        }

        #[test]
        fn frobenius_power_matches_repeated_multiplication(f in arb_poly(3, 2)) {
            prop_assert_eq!(f.frobenius_power(1).unwrap(), f.pow(3).unwrap());
        }
    }
}
