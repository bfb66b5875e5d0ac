//! Decomposing tensor products into known classes, each result backed by an
//! invertible intertwiner.

use repring_a4::g_modules::{decompose, ModuleClassLabel as M, Registry};
use repring_a4::reps::{EquivalenceSearch, GroupModule};

fn main() -> repring_a4::Result<()> {
    let reg = Registry::new();
    let search = EquivalenceSearch::default();
    let library = [M::Delta(0), M::Tau, M::L, M::Delta(2), M::Delta(-2), M::P0, M::P1];
    let cases = [
        (M::L, M::L),
        (M::Tau, M::Tau),
        (M::Tau, M::L),
        (M::P0, M::P1),
        (M::Delta(1), M::Delta(1)),
        (M::Delta(1), M::Delta(-1)),
        (M::Tau, M::Delta(1)),
    ];
    for (a, b) in cases {
        let t = reg.get(&a)?.tensor(reg.get(&b)?.as_ref());
        let name = format!("{} x {}", a, b);
        let r = decompose(&name, &t, &library, &reg, &search, false)?;
        println!("{:<22} (degree {:>2}) = {}   [{:?}]", name, t.degree(), r.summary(), r.status);
    }
    Ok(())
}
