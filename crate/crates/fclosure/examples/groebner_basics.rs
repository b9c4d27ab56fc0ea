//! The engine underneath everything: reduced Gröbner bases, normal forms,
//! ideal membership, elimination, dimension, and standard monomials.

use fclosure::{
    buchberger, eliminate, ideal_member, krull_dim, normal_form, parse_ring_file, poly_parse,
    std_monomials, GbBudget, StdMonomials,
};

fn main() -> fclosure::Result<()> {
    let ring = parse_ring_file("char 5\nvars x y z\n")?;
    let budget = GbBudget::default();
    let p = |t: &str| poly_parse(t, &ring);

    // twisted cubic: y - x^2, z - x^3
    let gens = vec![p("y-x^2")?, p("z-x^3")?];
    let gb = buchberger(&gens, ring.order(), ring.p(), ring.nvars(), &budget)?;
    println!("reduced basis of the twisted cubic ideal (grevlex):");
    for g in gb.elements() {
        println!("  {}", ring.text(g));
    }

    let f = p("x^4*y - z*x^2 + y^3")?;
    let nf = normal_form(&f, &gb, &budget)?;
    println!("\nNF({}) = {}", ring.text(&f), ring.text(&nf));
    println!("f - NF(f) in the ideal: {}", ideal_member(&f.sub(&nf), &gb, &budget)?);

    // eliminating x yields the plane curve z^2 - y^3
    let elim = eliminate(&gens, &[1, 2], ring.p(), ring.nvars(), &budget)?;
    println!("\neliminate x:");
    for g in &elim {
        println!("  {}", ring.text(g));
    }

    println!("\ndim S/(twisted cubic) = {}", krull_dim(&gens, ring.p(), ring.nvars(), &budget)?);

    // an Artinian quotient and its monomial basis
    let art = vec![p("x^2")?, p("y^3")?, p("z^2-x*y")?];
    let gb = buchberger(&art, ring.order(), ring.p(), ring.nvars(), &budget)?;
    match std_monomials(&gb, 10_000)? {
        StdMonomials::Finite(mons) => {
            println!("\nS/(x^2, y^3, z^2 - xy) has vector-space dimension {}", mons.len());
        }
        StdMonomials::Infinite => println!("\nunexpected: positive dimension"),
    }
    Ok(())
}
