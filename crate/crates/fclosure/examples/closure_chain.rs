//! The containment chain q ⊆ q^lim ⊆ q^F + q^lim ⊆ (q^lim)^F and its
//! colength shadow e(q) ≥ l(R/q^lim) ≥ l(R/q^(F-lim)) ≥ l(R/(q^lim)^F),
//! checked live on sampled parameter ideals of the quintic, together with
//! colon capturing for (-^lim)^F.

use fclosure::{
    f_lim_closure, frobenius_closure, lim_then_frobenius, limit_closure, multiplicity,
    parse_ring_file, sample_parameter_sequences, Config, Fp, IdealHandle, MultMode, Polynomial,
};

fn main() -> fclosure::Result<()> {
    let ring = parse_ring_file("char 2\nvars x y z\nrel x^5+y^5+z^5\n")?;
    let cfg = Config::default();
    let budget = cfg.budget();
    println!("ring: {}", ring.signature());

    let samples = sample_parameter_sequences(&ring, 4, (1, 2), 9, &cfg)?;
    for gens in &samples {
        let texts: Vec<String> = gens.iter().map(|g| ring.text(g)).collect();
        let q = IdealHandle::new(&ring, gens.clone(), &budget)?;
        let lim = limit_closure(&ring, gens, &cfg)?;
        let flim = f_lim_closure(&ring, gens, &cfg)?;
        let limf = lim_then_frobenius(&ring, gens, &cfg)?;
        let e = multiplicity(&ring, gens, MultMode::Auto, &cfg)?.value;

        let len = |i: &IdealHandle| i.colength(cfg.length_cap).unwrap().unwrap();
        println!(
            "\nq = ({}): e = {e}, lengths {} >= {} >= {} >= {}",
            texts.join(", "),
            len(&q),
            len(&lim.ideal),
            len(&flim.ideal),
            len(&limf.ideal)
        );
        assert!(lim.ideal.contains(&q, &budget)?);
        assert!(flim.ideal.contains(&lim.ideal, &budget)?);
        assert!(limf.ideal.contains(&flim.ideal, &budget)?);
        assert!(e >= len(&lim.ideal));

        // closing the sum lands on (q^lim)^F
        let closed_sum = frobenius_closure(&flim.ideal, &cfg)?;
        println!("  (q^(F-lim))^F = (q^lim)^F: {}", closed_sum.ideal == limf.ideal);

        // colon capturing: ((q_2)^lim)^F : x ⊆ (q^lim)^F
        let mut x = Polynomial::constant(Fp::one(ring.p()), ring.nvars());
        for g in gens {
            x = x.mul(g)?;
        }
        let powered: Vec<Polynomial> = gens.iter().map(|g| g.pow(2).unwrap()).collect();
        let limf2 = lim_then_frobenius(&ring, &powered, &cfg)?;
        let captured = limf2.ideal.colon_poly(&x, &budget)?;
        println!("  colon capturing at n = 2: {}", limf.ideal.contains(&captured, &budget)?);
    }
    Ok(())
}
