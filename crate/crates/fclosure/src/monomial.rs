use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector of a power product. Exponents are exact u64 values and
/// every arithmetic step is overflow-checked; bracket powers can push
/// exponents far beyond what fixed small widths would tolerate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u64>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(index: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_add(*b).ok_or(Error::Overflow("monomial product"))?);
        }
        Ok(Monomial(out))
    }

    /// Component-wise quotient; None when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u64) -> Result<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for a in &self.0 {
            out.push(a.checked_mul(k).ok_or(Error::Overflow("monomial power"))?);
        }
        Ok(Monomial(out))
    }

    /// Variable indices with nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// The shape of a monomial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderKind {
    /// Graded reverse lexicographic.
    Grevlex,
    /// Pure lexicographic.
    Lex,
    /// Elimination order: grevlex on the first `block` variables (in
    /// precedence position), grevlex on the rest as tie-break. Monomials
    /// touching the block dominate those that do not, so the order
    /// eliminates the leading block.
    Block { block: usize },
}

/// A total multiplicative order on monomials: an order kind plus a variable
/// precedence (a permutation of variable indices; position 0 is the most
/// significant variable).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub precedence: Vec<usize>,
}

impl MonomialOrder {
    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::Grevlex, precedence: (0..nvars).collect() }
    }

    pub fn lex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::Lex, precedence: (0..nvars).collect() }
    }

    /// Elimination order that drops the first `block` variables of the given
    /// precedence.
    pub fn elimination(block: usize, precedence: Vec<usize>) -> Self {
        MonomialOrder { kind: OrderKind::Block { block }, precedence }
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    /// Total order comparison. Callers must pass monomials with the right
    /// arity; the checked public entry point is [`monomial_cmp`].
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), self.precedence.len());
        debug_assert_eq!(b.nvars(), self.precedence.len());
        match self.kind {
            OrderKind::Grevlex => self.grevlex_cmp(a, b, &self.precedence),
            OrderKind::Lex => {
                for &i in &self.precedence {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Block { block } => {
                let (head, tail) = self.precedence.split_at(block.min(self.precedence.len()));
                match self.grevlex_cmp(a, b, head) {
                    Ordering::Equal => self.grevlex_cmp(a, b, tail),
                    ord => ord,
                }
            }
        }
    }

    /// Grevlex restricted to the variables listed in `prec`: compare total
    /// degree over `prec`, then the reversed exponent comparison (the last
    /// variable where they differ decides, smaller exponent wins).
    fn grevlex_cmp(&self, a: &Monomial, b: &Monomial, prec: &[usize]) -> Ordering {
        let da: u64 = prec.iter().map(|&i| a.0[i]).sum();
        let db: u64 = prec.iter().map(|&i| b.0[i]).sum();
        match da.cmp(&db) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for &i in prec.iter().rev() {
            match a.0[i].cmp(&b.0[i]) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

/// Checked comparison of two monomials under an order.
pub fn monomial_cmp(order: &MonomialOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() || a.nvars() != order.nvars() {
        return Err(Error::ArityMismatch(a.nvars(), b.nvars()));
    }
    Ok(order.compare(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u64]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        let ord = MonomialOrder::grevlex(2);
        // x^2 > xy at equal degree (grevlex tie-break on the last variable)
        assert_eq!(ord.compare(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(ord.compare(&m(&[1, 1]), &m(&[1, 1])), Ordering::Equal);
    }

    #[test]
    fn lex_ignores_degree() {
        let ord = MonomialOrder::lex(3);
        // y^9 < x under lex with x > y > z
        assert_eq!(ord.compare(&m(&[0, 9, 0]), &m(&[1, 0, 0])), Ordering::Less);
    }

    #[test]
    fn grevlex_degree_4_fermat_terms() {
        let ord = MonomialOrder::grevlex(3);
        // x^4 > y^4 > z^4
        assert_eq!(ord.compare(&m(&[4, 0, 0]), &m(&[0, 4, 0])), Ordering::Greater);
        assert_eq!(ord.compare(&m(&[0, 4, 0]), &m(&[0, 0, 4])), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        // t > anything in the tail variables
        let ord = MonomialOrder::elimination(1, vec![0, 1, 2]);
        assert_eq!(ord.compare(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(ord.compare(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let ord = MonomialOrder::grevlex(2);
        assert!(monomial_cmp(&ord, &m(&[1, 0]), &m(&[1, 0, 0])).is_err());
    }

    fn arb_monomial(nvars: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u64..6, nvars).prop_map(Monomial)
    }

    fn arb_order(nvars: usize) -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::grevlex(nvars)),
            Just(MonomialOrder::lex(nvars)),
            (1..nvars).prop_map(move |b| MonomialOrder::elimination(b, (0..nvars).collect())),
        ]
    }

    proptest! {
        // The three defining properties of a monomial order, on random triples.
        #[test]
        fn order_is_total_and_multiplicative(
            ord in arb_order(3),
            a in arb_monomial(3),
            b in arb_monomial(3),
            c in arb_monomial(3),
        ) {
            // totality + antisymmetry
            let ab = ord.compare(&a, &b);
            prop_assert_eq!(ab.reverse(), ord.compare(&b, &a));
            // transitivity on the sorted triple
            let mut v = [a.clone(), b.clone(), c.clone()];
            v.sort_by(|x, y| ord.compare(x, y));
            prop_assert_ne!(ord.compare(&v[0], &v[2]), Ordering::Greater);
            // multiplicative: a < b implies ca < cb
            if ab != Ordering::Equal {
                let ca = c.mul(&a).unwrap();
                let cb = c.mul(&b).unwrap();
                prop_assert_eq!(ord.compare(&ca, &cb), ab);
            }
            // 1 is minimal
            let one = Monomial::one(3);
            prop_assert_ne!(ord.compare(&one, &a), Ordering::Greater);
        }
    }
}
