//! Writes the c-associahedron of a rank 3 system as an OFF mesh.
//!
//! `cargo run --example associahedron -- H3 s1,s3,s2 > h3.off`

use coxassoc::geometry::{to_off, BasePoint, Realization};
use coxassoc::CoxeterSystem;

fn main() -> coxassoc::Result<()> {
    let mut args = std::env::args().skip(1);
    let code = args.next().unwrap_or_else(|| "A3".into());
    let sys = CoxeterSystem::from_type(&code)?;
    let c = match args.next() {
        Some(text) => sys.parse_word(&text)?,
        None => sys.coxeter_elements()[0].word.clone(),
    };
    let real = Realization::new(&sys, BasePoint::balanced(sys.rank()))?;
    let ass = real.associahedron(&c)?;
    let kept = ass.vertex_elements.iter().flatten().count();
    eprintln!(
        "{code} c = {}: f-vector {:?}, {kept} vertices shared with the permutahedron",
        sys.format_word(&c),
        ass.f_vector()
    );
    print!("{}", to_off(&ass)?);
    Ok(())
}
