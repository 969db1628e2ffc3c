//! Decides congruence of two polytopes directly from their vertices.

use coxassoc::geometry::{BasePoint, Realization};
use coxassoc::isometry::congruence_oracle;
use coxassoc::{CoxeterSystem, DEFAULT_EPSILON};

fn main() -> coxassoc::Result<()> {
    let sys = CoxeterSystem::from_type("A3")?;
    let real = Realization::new(&sys, BasePoint::balanced(3))?;
    let elements = sys.coxeter_elements();
    for a in &elements {
        for b in &elements {
            let pa = real.associahedron(&a.word)?;
            let pb = real.associahedron(&b.word)?;
            let verdict = match congruence_oracle(&pa, &pb, DEFAULT_EPSILON)? {
                Some(iso) => format!("congruent, det {:+.0}", iso.matrix.determinant()),
                None => "not congruent".into(),
            };
            println!("{:<8} {:<8} {verdict}", sys.format_word(&a.word), sys.format_word(&b.word));
        }
    }
    Ok(())
}
