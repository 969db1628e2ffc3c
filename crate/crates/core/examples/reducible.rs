//! Reducible systems: the twisted element whose associahedron maps onto
//! Ass_c under each partial longest-element reflection.

use coxassoc::geometry::{BasePoint, Realization};
use coxassoc::isometry::classify_reducible;
use coxassoc::CoxeterSystem;

fn main() -> coxassoc::Result<()> {
    let sys = CoxeterSystem::from_type("A2xB2")?;
    let real = Realization::new(&sys, BasePoint::balanced(sys.rank()))?;
    let report = classify_reducible(&real)?;
    for check in &report.checks {
        println!(
            "c = {:<10} components {:?}: twisted {:<10} maps onto c: {}",
            sys.format_word(&check.c),
            check.components,
            sys.format_word(&check.twisted),
            check.vertex_sets_agree && check.w_a_is_singleton
        );
    }
    println!("all hold: {}", report.all_hold());
    Ok(())
}
