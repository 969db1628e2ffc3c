//! Isometry classes of c-associahedra, balanced and generic.

use coxassoc::geometry::{BasePoint, Realization};
use coxassoc::isometry::{classify_associahedra, verify_against_oracle};
use coxassoc::CoxeterSystem;

fn show(sys: &CoxeterSystem, base: BasePoint) -> coxassoc::Result<()> {
    let real = Realization::new(sys, base)?;
    let classification = classify_associahedra(&real)?;
    println!("kappa {:?}: sizes {:?}", real.base().kappa(), classification.sizes());
    for class in &classification.classes {
        let members: Vec<String> = class.members.iter().map(|c| sys.format_word(c)).collect();
        println!("  {{{}}}", members.join(", "));
        for witness in &class.witnesses {
            println!(
                "    {} -> {} by {}",
                sys.format_word(&witness.from),
                sys.format_word(&witness.to),
                witness.isometry.provenance.describe(sys)
            );
        }
    }
    let report = verify_against_oracle(&real, 1)?;
    println!("  brute-force congruence agrees: {}", report.agreement);
    Ok(())
}

fn main() -> coxassoc::Result<()> {
    let sys = CoxeterSystem::from_type("D4")?;
    show(&sys, BasePoint::balanced(4))?;
    show(&sys, BasePoint::new(vec![1.0, 2.0, 2.0, 3.0])?)?;
    Ok(())
}
