//! Smith normal form over the 2-local integers, with the unimodular
//! transforms checked.

use repring_a4::arith::{smith_normal_form, Local2Rational};
use repring_a4::Matrix;

fn main() -> repring_a4::Result<()> {
    let a = Matrix::from_rows(vec![
        vec![Local2Rational::from_i64(2), Local2Rational::from_i64(4), Local2Rational::new(6, 3)?],
        vec![Local2Rational::from_i64(12), Local2Rational::new(1, 5)?, Local2Rational::from_i64(8)],
        vec![Local2Rational::from_i64(8), Local2Rational::from_i64(16), Local2Rational::from_i64(24)],
    ])?;
    println!("A =\n{}", a);
    let s = smith_normal_form(&a);
    println!("D =\n{}", s.d);
    println!("elementary divisors: {:?}", s.elementary_exponents.iter().map(|e| format!("2^{}", e)).collect::<Vec<_>>());
    println!("rank {}", s.rank());
    assert_eq!(&(&s.u * &a) * &s.v, s.d);
    assert!(s.u.is_unimodular() && s.v.is_unimodular());
    println!("u A v = D, u and v unimodular");
    Ok(())
}
