//! The Fermat quartic chart F_5[x,y,z]/(x^4+y^4+z^4): a ring that is
//! neither F-pure nor tight-Buchsbaum, yet every surplus e(q) - l(R/q^{F-lim})
//! is constant. Walks the full pipeline: Frobenius closure, colon ideal,
//! invariant record, maximal-ideal containment, and the certificate search.

use fclosure::{
    check_m_containment, corgor_search, fedder_fpure, frobenius_closure, invariant_record,
    parse_generators, parse_ring_file, sample_parameter_sequences, Config, CorGorOutcome,
    IdealHandle,
};

fn main() -> fclosure::Result<()> {
    let ring = parse_ring_file("char 5\nvars x y z\nrel x^4+y^4+z^4\n")?;
    let cfg = Config::default();
    let budget = cfg.budget();
    println!("ring: {} (dim {})", ring.signature(), ring.dim());

    println!("\nF-pure by Fedder: {}", fedder_fpure(&ring, &cfg)?);

    let gens = parse_generators("y^2,z^2", &ring)?;
    let q = IdealHandle::new(&ring, gens.clone(), &budget)?;
    let qf = frobenius_closure(&q, &cfg)?;
    let min: Vec<String> = qf.ideal.minimal_generators(&budget)?.iter().map(|g| ring.text(g)).collect();
    println!("\nq = (y^2, z^2)");
    println!("q^F = ({})   [certified: {}, stabilized at e = {}]", min.join(", "), qf.certified, qf.stabilized_at);

    let colon = q.colon(&qf.ideal, &budget)?;
    let m = IdealHandle::maximal(&ring, &budget)?;
    println!("q : q^F = m? {}", colon == m);

    let rec = invariant_record(&ring, &gens, &cfg)?;
    println!("\ninvariants: l(R/q) = {}, e(q) = {} ({:?})", rec.len_q, rec.mult, rec.mult_method);
    println!("  l(R/q^F) = {}, l(R/q^lim) = {}, l(R/q^(F-lim)) = {}", rec.len_qf, rec.len_qlim, rec.len_qflim);
    println!("  e(q) - l(R/q^(F-lim)) = {}", rec.surplus_f);

    let cont = check_m_containment(&ring, &gens, &cfg)?;
    println!("\nm·q^(F-lim) ⊆ q: {}, m·q^lim ⊆ q: {}", cont.flim_contained, cont.lim_contained);

    let samples = sample_parameter_sequences(&ring, 6, (1, 2), 1, &cfg)?;
    println!("\nsearching for a certifying parameter ideal over {} samples...", samples.len());
    match corgor_search(&ring, &samples, &cfg)? {
        CorGorOutcome::Found(cert) => {
            println!("certificate: Q = ({})", cert.q_generators.join(", "));
            println!("  m·Q^F ⊆ Q exactly: {}", cert.m_containment);
            println!("  colon consistency at t = {:?}", cert.t_consistency);
            println!("  Q ⊆ q : q^F verified on {} sampled q", cert.j_evidence.len());
        }
        CorGorOutcome::NotFound { reason } => println!("not found: {reason}"),
    }
    Ok(())
}
