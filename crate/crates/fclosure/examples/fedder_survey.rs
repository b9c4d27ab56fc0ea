//! F-purity of every bundled corpus ring by Fedder's criterion
//! (J^[p] : J) ⊄ m^[p], plus the residue hints that matter for the
//! hypersurface examples.

use fclosure::corpus::corpus;
use fclosure::{fedder_fpure, parse_ring_file, Config};

fn main() -> fclosure::Result<()> {
    let cfg = Config::default();
    for entry in corpus() {
        let ring = parse_ring_file(entry.ring_text)?;
        let fpure = fedder_fpure(&ring, &cfg)?;
        let p = ring.p();
        println!(
            "{:18} {}  F-pure: {:5}  (p = {p}, p mod 3 = {}, p mod 4 = {})",
            entry.name,
            ring.signature(),
            fpure,
            p % 3,
            p % 4
        );
    }
    Ok(())
}
