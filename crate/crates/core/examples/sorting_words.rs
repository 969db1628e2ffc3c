//! c-sorting words and their block factorizations for every element of A3.

use coxassoc::sortable::{c_factorization, c_sorting_word, is_c_sortable};
use coxassoc::CoxeterSystem;

fn main() -> coxassoc::Result<()> {
    let sys = CoxeterSystem::from_type("A3")?;
    let c = sys.parse_word("s2,s1,s3")?;
    let mut sortable = 0;
    for w in sys.elements() {
        let word = c_sorting_word(&sys, &w, &c)?;
        let blocks: Vec<String> = c_factorization(&sys, &w, &c)?
            .blocks
            .iter()
            .map(|b| b.iter().map(|&s| sys.labels()[s].clone()).collect::<Vec<_>>().join(""))
            .collect();
        let ok = is_c_sortable(&sys, &w, &c)?;
        sortable += ok as usize;
        println!("{:<16} {:<24} {}", sys.format_word(&word), blocks.join(" | "), if ok { "sortable" } else { "" });
    }
    println!("{sortable} c-sortable elements");
    Ok(())
}
