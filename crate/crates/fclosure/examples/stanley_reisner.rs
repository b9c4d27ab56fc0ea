//! Two planes glued at a point: F_2[x,y,z,w]/(xz,xw,yz,yw). The ring is
//! F-pure and Buchsbaum but not Cohen-Macaulay, so the limit closure is
//! strictly larger than the ideal and the multiplicity needs the
//! normalized-colength estimator.

use fclosure::{
    fedder_fpure, invariant_record, limit_closure, multiplicity, parse_generators,
    parse_ring_file, Config, IdealHandle, MultMode,
};

fn main() -> fclosure::Result<()> {
    let ring =
        parse_ring_file("char 2\nvars x y z w\nrel x*z\nrel x*w\nrel y*z\nrel y*w\n")?;
    let cfg = Config::default();
    let budget = cfg.budget();
    println!("ring: {} (dim {})", ring.signature(), ring.dim());
    println!("F-pure by Fedder: {}", fedder_fpure(&ring, &cfg)?);

    let gens = parse_generators("x+z,y+w", &ring)?;
    let q = IdealHandle::new(&ring, gens.clone(), &budget)?;

    let lim = limit_closure(&ring, &gens, &cfg)?;
    let min: Vec<String> = lim.ideal.minimal_generators(&budget)?.iter().map(|g| ring.text(g)).collect();
    println!("\nq = (x+z, y+w)");
    println!("q^lim = ({})   [stabilized at n = {}]", min.join(", "), lim.stabilized_at);
    println!(
        "l(q^lim/q) = {}",
        q.colength(cfg.length_cap)?.unwrap() - lim.ideal.colength(cfg.length_cap)?.unwrap()
    );

    // cross-check against the alternating colon-sum formula valid on
    // Buchsbaum rings: q^lim = q + sum_i (x_1,..,x_i^,..,x_d) : x_i
    let g0 = IdealHandle::new(&ring, vec![gens[0].clone()], &budget)?;
    let g1 = IdealHandle::new(&ring, vec![gens[1].clone()], &budget)?;
    let formula = q
        .sum(&g1.colon_poly(&gens[0], &budget)?, &budget)?
        .sum(&g0.colon_poly(&gens[1], &budget)?, &budget)?;
    println!("colon-sum formula agrees: {}", formula == lim.ideal);

    let e = multiplicity(&ring, &gens, MultMode::Auto, &cfg)?;
    println!("\ne(q) = {} via {:?}", e.value, e.method);

    let rec = invariant_record(&ring, &gens, &cfg)?;
    println!("l(R/q) = {}, so l(R/q) - e(q) = {}", rec.len_q, rec.surplus_buchsbaum);
    println!("e(q) - l(R/q^(F-lim)) = {}", rec.surplus_f);
    println!("l(q^F/q) = {} (F-pure rings keep parameter ideals Frobenius closed)", rec.len_qf_over_q);
    Ok(())
}
