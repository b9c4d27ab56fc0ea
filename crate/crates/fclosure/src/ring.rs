use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::check_prime;
use crate::groebner::{buchberger, krull_dim, GbBudget, GroebnerBasis};
use crate::monomial::{MonomialOrder, OrderKind};
use crate::poly::Polynomial;

/// Presentation of a quotient ring R = S/J over F_p: the ambient polynomial
/// ring S = F_p[vars] with a monomial order, and the defining ideal J.
///
/// The homogeneous maximal ideal m = (vars) plays the role of the maximal
/// ideal of the corresponding local ring: for homogeneous J, membership,
/// colon, colength and closure questions in the graded chart agree with the
/// completed local ring.
#[derive(Debug, Clone)]
pub struct RingPresentation {
    p: u64,
    vars: Vec<String>,
    order: MonomialOrder,
    defining: Vec<Polynomial>,
    defining_gb: GroebnerBasis,
    dim: usize,
}

/// Shared handle; every ideal built on the ring keeps one.
pub type Ring = Arc<RingPresentation>;

impl RingPresentation {
    pub fn new(p: u64, vars: Vec<String>, order: OrderKind, defining: Vec<Polynomial>) -> Result<Ring> {
        let p = check_prime(p)?;
        let nvars = vars.len();
        if nvars == 0 {
            return Err(Error::Invalid("a ring needs at least one variable".into()));
        }
        let order = MonomialOrder { kind: order, precedence: (0..nvars).collect() };
        if matches!(order.kind, OrderKind::Block { .. }) {
            return Err(Error::Invalid("elimination orders are internal only".into()));
        }
        let defining: Vec<Polynomial> = defining.into_iter().filter(|f| !f.is_zero()).collect();
        for f in &defining {
            if f.characteristic() != p {
                return Err(Error::CharMismatch { expected: p, got: f.characteristic() });
            }
            if f.nvars() != nvars {
                return Err(Error::ArityMismatch(f.nvars(), nvars));
            }
        }
        let budget = GbBudget::default();
        let defining_gb = buchberger(&defining, &order, p, nvars, &budget)?;
        if defining_gb.is_unit_ideal() {
            return Err(Error::Invalid("defining ideal is the unit ideal".into()));
        }
        let dim = krull_dim(&defining, p, nvars, &budget)?;
        Ok(Arc::new(RingPresentation { p, vars, order, defining, defining_gb, dim }))
    }

    /// The polynomial ring F_p[vars] itself (empty defining ideal), sharing
    /// the variable list. Used for ambient-ring computations such as
    /// Fedder's criterion.
    pub fn ambient(&self) -> Result<Ring> {
        RingPresentation::new(self.p, self.vars.clone(), self.order.kind, Vec::new())
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn defining(&self) -> &[Polynomial] {
        &self.defining
    }

    pub fn defining_gb(&self) -> &GroebnerBasis {
        &self.defining_gb
    }

    /// Krull dimension of R = S/J, cached at construction.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_regular_polynomial_ring(&self) -> bool {
        self.defining.is_empty()
    }

    /// Generators of the maximal ideal m = (vars).
    pub fn maximal_ideal_gens(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| Polynomial::var(i, self.p, self.nvars())).collect()
    }

    pub fn var_poly(&self, index: usize) -> Polynomial {
        Polynomial::var(index, self.p, self.nvars())
    }

    /// Pretty-print a polynomial with this ring's names and order.
    pub fn text(&self, f: &Polynomial) -> String {
        f.to_text(&self.vars, &self.order)
    }

    /// One-line canonical description, used as the ring id in reports.
    pub fn signature(&self) -> String {
        let rels: Vec<String> = self.defining.iter().map(|f| self.text(f)).collect();
        if rels.is_empty() {
            format!("F_{}[{}]", self.p, self.vars.join(","))
        } else {
            format!("F_{}[{}]/({})", self.p, self.vars.join(","), rels.join(", "))
        }
    }

    pub fn check_poly(&self, f: &Polynomial) -> Result<()> {
        if f.characteristic() != self.p {
            return Err(Error::CharMismatch { expected: self.p, got: f.characteristic() });
        }
        if f.nvars() != self.nvars() {
            return Err(Error::ArityMismatch(f.nvars(), self.nvars()));
        }
        Ok(())
    }
}
