//! The periodic resolution over the Klein four-group: the matrices F_n,
//! exactness certificates, and the modules Delta_n over H and over A4.

use repring_a4::g_modules::{expected_cover_shape, projective_cover_g, Registry};
use repring_a4::reps::GroupModule;
use repring_a4::syzygy::{delta_h, f_matrix, theta_h, verify_complex};

fn main() -> repring_a4::Result<()> {
    let f4 = f_matrix(4);
    println!("F_4 ({} x {}):", f4.rows, f4.cols);
    for i in 0..f4.rows {
        let row: Vec<String> = (0..f4.cols).map(|j| format!("{:>9}", f4.get(i, j).to_string())).collect();
        println!("  {}", row.join(" "));
    }
    for n in [2, 5, 10, 20] {
        let c = verify_complex(n)?;
        println!("n = {:>2}: F_(n-1) F_n = 0: {}, kernel rank {}, exact {}", n, c.product_zero, c.kernel_rank, c.passes());
    }
    for n in -3..=3 {
        let d = delta_h(n)?;
        let next = theta_h(&d)?;
        println!("Delta_{:>2} over H: rank {:>2}, Theta gives rank {}", n, d.degree(), next.degree());
    }

    let reg = Registry::new();
    for n in 0..=5 {
        let d = reg.delta(n)?;
        let cover = projective_cover_g(&d)?;
        println!(
            "Delta_{} over G: degree {:>2}, cover P0^{} + P1^{} (expected {:?}), kernel degree {}",
            n,
            d.degree(),
            cover.s,
            cover.t,
            expected_cover_shape(n as u64),
            cover.kernel()?.degree()
        );
    }
    Ok(())
}
