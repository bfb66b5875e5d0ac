//! The presented algebra R[x, 1/x][y, z] / (y^2 - y - 2, z^2 - 2z - y - 1):
//! normal forms, structure constants, and the four components.

use repring_a4::rep_ring::{component_maps, PresentedAlgebra};

fn main() -> repring_a4::Result<()> {
    let alg = PresentedAlgebra::new();
    for (text, _) in alg.relations() {
        println!("relation {}", text);
    }
    println!("locally confluent: {}", alg.locally_confluent());
    for e in ["y^3", "z^2", "z*yz", "yz*yz", "(z + 1)(z - 3)", "z(z - 2)", "x^2 * (1/x) * y z"] {
        println!("{:<18} -> {}", e, alg.normalize_str(e)?);
    }
    let c = component_maps();
    println!("components at (y, z) = {:?}", c.points);
    println!("determinant of the evaluation matrix: {}", c.determinant);
    let u = alg.normalize_str("x z + y")?;
    for ((y, z), v) in c.points.iter().zip(c.evaluate(&u)) {
        println!("  x z + y at ({}, {}): {:?}", y, z, v.iter().map(|(k, q)| format!("{} x^{}", q, k)).collect::<Vec<_>>());
    }
    Ok(())
}
