//! The Fermat quintic chart F_2[x,y,z]/(x^5+y^5+z^5): a normal Gorenstein
//! surface ring where l(q^F/q) jumps between parameter ideals, so no
//! Buchsbaum-type constancy can hold. Also demonstrates the bounded
//! tight-closure membership probe with an asserted test element.

use fclosure::{
    frobenius_closure, parse_generators, parse_ring_file, poly_parse, probe_constancy,
    quotient_length, sample_parameter_sequences, tight_closure_probe, Config, IdealHandle,
    ProbeQuantity, ProbeVerdict, TightVerdict,
};

fn main() -> fclosure::Result<()> {
    let ring = parse_ring_file("char 2\nvars x y z\nrel x^5+y^5+z^5\n")?;
    let cfg = Config::default();
    let budget = cfg.budget();
    println!("ring: {} (dim {})", ring.signature(), ring.dim());

    for text in ["x,y", "x^2,y^2"] {
        let gens = parse_generators(text, &ring)?;
        let q = IdealHandle::new(&ring, gens, &budget)?;
        let qf = frobenius_closure(&q, &cfg)?;
        let min: Vec<String> = qf.ideal.minimal_generators(&budget)?.iter().map(|g| ring.text(g)).collect();
        println!("\nq = ({text}): q^F = ({})", min.join(", "));
        println!("  l(q^F/q) = {}", quotient_length(&q, &qf.ideal, &cfg)?);
    }

    let samples = sample_parameter_sequences(&ring, 6, (1, 2), 1, &cfg)?;
    let report = probe_constancy(&ring, ProbeQuantity::LenQfOverQ, &samples, 1, &cfg)?;
    match &report.verdict {
        ProbeVerdict::NonConstant { value_a, value_b, witness_a, witness_b } => {
            println!("\nl(q^F/q) is NOT constant:");
            println!("  ({}) gives {}", witness_a.generators.join(", "), value_a);
            println!("  ({}) gives {}", witness_b.generators.join(", "), value_b);
        }
        other => println!("\nunexpected verdict: {other:?}"),
    }

    // bounded tight-closure probe: z^2 behaves like a member of (x,y)^*,
    // z does not (z^3 is asserted as a test element, unchecked)
    let q1 = IdealHandle::new(&ring, parse_generators("x,y", &ring)?, &budget)?;
    let c = poly_parse("z^3", &ring)?;
    for elt in ["z^2", "z"] {
        let x = poly_parse(elt, &ring)?;
        let r = tight_closure_probe(&q1, &x, &c, 4, &cfg)?;
        match r.verdict {
            TightVerdict::InClosureUpTo(e) => {
                println!("tprobe {elt}: passes all membership tests up to e = {e} (evidence)")
            }
            TightVerdict::NotInClosure { witness_e } => {
                println!("tprobe {elt}: fails at e = {witness_e} (not in the tight closure if z^3 is a genuine test element)")
            }
        }
    }
    Ok(())
}
