//! Walk the status-preserving cycle equivalences on one instance: the orbit
//! of a single cycle, the half-turn involution (asymmetric case), and how
//! canonicalization compresses the forbidden list to one name per orbit.
//!
//!     cargo run --release --example orbits

use comer::cycles::{classify, Cycle, CycleStatus};
use comer::equivalence::{canonical_forbidden_set, involution_image, orbit};
use comer::{build_coset_table, make_parameters};

fn main() -> Result<(), comer::Error> {
    let params = make_parameters(71, 10, None)?;
    let structure = classify(&build_coset_table(params));

    let seed = Cycle::new(0, 1, 2);
    let orb = orbit(&params, seed);
    println!("orbit of {seed} in the (71, 10) structure:");
    for member in &orb.members {
        println!(
            "  {member}  ->  {}",
            structure.status(member.b, member.c)
        );
    }
    println!("canonical representative: {}", orb.canon);

    // k = 7 is odd, so the half-turn map (0, i, j) -> (0, j+5, i+5) preserves
    // status; it is one of the generators behind the orbit above
    let image = involution_image(params.n, seed)?;
    println!("involution image of {seed}: {image}");

    let forbidden = structure.upper_cycles(CycleStatus::Forbidden);
    let canons = canonical_forbidden_set(&structure);
    println!(
        "forbidden cycles: {} with x <= y, {} up to equivalence:",
        forbidden.len(),
        canons.len()
    );
    for canon in &canons {
        println!("  {canon}");
    }
    Ok(())
}
