//! Sampling parameter ideals and probing a surplus for constancy, with the
//! full JSON probe report printed at the end.

use fclosure::{
    probe_constancy, parse_ring_file, sample_parameter_sequences, Config, ProbeQuantity,
    ProbeVerdict,
};

fn main() -> fclosure::Result<()> {
    let ring = parse_ring_file("char 2\nvars x y z\nrel x^3+y^3+z^3\n")?;
    let cfg = Config::default();
    println!("ring: {}", ring.signature());

    let samples = sample_parameter_sequences(&ring, 6, (1, 2), 11, &cfg)?;
    println!("sampled {} parameter sequences:", samples.len());
    for gens in &samples {
        let texts: Vec<String> = gens.iter().map(|g| ring.text(g)).collect();
        println!("  ({})", texts.join(", "));
    }

    let report = probe_constancy(&ring, ProbeQuantity::SurplusF, &samples, 11, &cfg)?;
    match &report.verdict {
        ProbeVerdict::Constant { value } => {
            println!("\ne(q) - l(R/q^(F-lim)) = {value} across all samples");
        }
        ProbeVerdict::NonConstant { value_a, value_b, .. } => {
            println!("\nnon-constant: {value_a} vs {value_b}");
        }
        ProbeVerdict::Inconclusive { reason } => println!("\ninconclusive: {reason}"),
    }
    for caveat in &report.caveats {
        println!("note: {caveat}");
    }

    println!("\nfull report:\n{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
