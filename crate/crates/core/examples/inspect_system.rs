//! Basic data for a finite Coxeter system given by its type code.
//!
//! `cargo run --example inspect_system -- H3`

use coxassoc::CoxeterSystem;

fn main() -> coxassoc::Result<()> {
    let code = std::env::args().nth(1).unwrap_or_else(|| "B3".into());
    let sys = CoxeterSystem::from_type(&code)?;
    let w0 = sys.longest_element();
    println!("{code}: rank {}, |W| = {}", sys.rank(), sys.group_order());
    println!("positive roots: {}", sys.positive_root_count());
    println!("w0 = {} (length {})", sys.format_word(&sys.reduced_word(&w0)), w0.length());
    for c in sys.coxeter_elements() {
        println!("coxeter element {}", sys.format_word(&c.word));
    }
    Ok(())
}
