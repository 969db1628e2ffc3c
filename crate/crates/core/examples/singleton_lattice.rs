//! Prints the c-singletons of D4 as a DOT Hasse diagram.
//!
//! `cargo run --example singleton_lattice | dot -Tsvg > lattice.svg`

use coxassoc::sortable::c_singletons;
use coxassoc::CoxeterSystem;

fn main() -> coxassoc::Result<()> {
    let sys = CoxeterSystem::from_type("D4")?;
    let c = sys.parse_word("s1,s2,s3,s4")?;
    let lattice = c_singletons(&sys, &c)?;
    eprintln!("{} singletons, w0 sorts as {}", lattice.len(), sys.format_word(&lattice.w0_sorting_word));
    print!("{}", lattice.to_dot(&sys));
    Ok(())
}
