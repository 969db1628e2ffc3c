//! Face counts of permutahedra, and the normal cone of each vertex.

use coxassoc::geometry::{BasePoint, Realization};
use coxassoc::CoxeterSystem;

fn main() -> coxassoc::Result<()> {
    for code in ["A3", "B3", "H3", "A4"] {
        let sys = CoxeterSystem::from_type(code)?;
        let real = Realization::new(&sys, BasePoint::balanced(sys.rank()))?;
        let perm = real.permutahedron();
        println!("{code}: f-vector {:?}, simple: {}", perm.f_vector(), perm.is_simple());
    }

    let sys = CoxeterSystem::from_type("A2")?;
    let real = Realization::new(&sys, BasePoint::parse("1,2", 2)?)?;
    let perm = real.permutahedron();
    for cone in perm.normal_cones() {
        let w = cone.chamber(&sys).expect("every vertex cone is a chamber");
        println!("vertex {} has the chamber of {}", cone.vertex, sys.format_word(&sys.reduced_word(&w)));
    }
    Ok(())
}
