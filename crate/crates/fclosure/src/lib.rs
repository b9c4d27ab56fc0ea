//! Closure operations on parameter ideals in prime characteristic.
//!
//! The crate computes, for quotient rings R = F_p[x_1..x_n]/J presented by
//! homogeneous relations, the Frobenius closure and limit closure of
//! parameter ideals, the composite closures built from them, colengths and
//! Hilbert–Samuel multiplicities, the Buchsbaum-type surplus invariants, and
//! sampled decision probes (constancy of surpluses, maximal-ideal
//! containments, F-purity via Fedder's criterion, and the search for a
//! certifying parameter ideal in the Cohen–Macaulay case).
//!
//! Everything is exact arithmetic over F_p driven by a deterministic
//! Buchberger engine with explicit computation budgets: a computation either
//! returns a certified answer or fails loudly, never silently wrong.
//!
//! See the `examples/` directory for one runnable walkthrough per major
//! capability, and the `fclosure` binary for the command-line interface.

pub mod closure;
pub mod config;
pub mod corpus;
pub mod criteria;
pub mod error;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod invariant;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod report;
pub mod ring;

pub use closure::{
    f_lim_closure, frobenius_closure, frobenius_closure_step, lim_then_frobenius, limit_closure,
    limit_closure_step, tight_closure_probe, validate_parameter_sequence, ClosureKind,
    ClosureResult, TightProbeResult, TightVerdict,
};
pub use config::{Config, MultMode};
pub use criteria::{
    check_m_containment, corgor_search, fedder_fpure, is_parameter_sequence, probe_constancy,
    sample_parameter_sequences, CorGorCertificate, CorGorOutcome, JEvidence, MContainment,
    ProbeReport, ProbeSample, ProbeVerdict,
};
pub use error::{Error, Result};
pub use field::Fp;
pub use groebner::{
    buchberger, eliminate, ideal_member, krull_dim, normal_form, std_monomials, GbBudget,
    GroebnerBasis, StdMonomials,
};
pub use ideal::IdealHandle;
pub use invariant::{
    colength, invariant_record, is_regular_sequence, multiplicity, quotient_length,
    InvariantRecord, Length, MultMethod, Multiplicity, ProbeQuantity,
};
pub use monomial::{monomial_cmp, Monomial, MonomialOrder, OrderKind};
pub use parse::{parse_generators, parse_ring_file, poly_parse};
pub use poly::Polynomial;
pub use ring::{Ring, RingPresentation};
