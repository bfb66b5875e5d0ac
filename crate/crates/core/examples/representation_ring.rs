//! Class arithmetic from a computed product table: the idempotents, the
//! projection by f3, and Corollary 2.

use repring_a4::g_modules::{product_table, ModuleClassLabel as M, Registry};
use repring_a4::rep_ring::{class_multiply, corollary2_check, f3_project, verify_idempotents, ClassElement};
use repring_a4::reps::EquivalenceSearch;

fn main() -> repring_a4::Result<()> {
    let reg = Registry::new();
    let table = product_table(1, &reg, &EquivalenceSearch::default(), false)?;
    for (name, r) in &table.entries {
        println!("{:<22} = {}", name, r.summary());
    }
    let (f, cert) = verify_idempotents(&table)?;
    println!("\nf1 = {}\nf2 = {}\nf3 = {}\ncertificate passes: {}", f.f1, f.f2, f.f3, cert.passes());

    for l in [M::Delta(0), M::Tau, M::L, M::Delta(1), M::P0] {
        println!("[{}] f3 = {}", l, f3_project(&ClassElement::class(l.clone()), &table)?);
    }
    let tau = ClassElement::class(M::Tau);
    println!("[Tau]^2 = {}", class_multiply(&tau, &tau, &table)?);
    for (n, m) in [(1, 1), (1, -1), (-1, -1)] {
        let c = corollary2_check(n, m, &table)?;
        println!("[Delta_{}][Delta_{}] f3 = {}  (holds: {})", n, m, c.lhs, c.holds);
    }
    Ok(())
}
