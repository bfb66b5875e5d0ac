//! Exact integral LLL reduction and reduced integer kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::echelon;
use super::{Lattice, Local2Rational, Matrix};

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Nearest integer to `a / b` for `b > 0`.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let num: BigInt = a * 2 + b;
    num.div_floor(&(b * 2))
}

/// LLL-reduces linearly independent integer vectors in place (δ = 3/4),
/// using integer Gram–Schmidt data only.
pub fn lll_reduce(b: &mut [Vec<BigInt>]) {
    let n = b.len();
    if n < 2 {
        return;
    }
    // d[i + 1] = d_i in 1-based notation; d[0] = 1
    let mut d: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    let mut lam: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    d[0] = BigInt::one();
    d[1] = dot(&b[0], &b[0]);
    assert!(!d[1].is_zero(), "dependent vectors");
    let mut k = 1;
    let mut kmax = 0;
    while k < n {
        if k > kmax {
            kmax = k;
            for j in 0..=k {
                let mut u = dot(&b[k], &b[j]);
                for i in 0..j {
                    u = (&d[i + 1] * &u - &lam[k][i] * &lam[j][i]) / &d[i];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    assert!(!u.is_zero(), "dependent vectors");
                    d[k + 1] = u;
                }
            }
        }
        reduce(b, &mut lam, &d, k, k - 1);
        let lhs = BigInt::from(4) * &d[k + 1] * &d[k - 1];
        let rhs = BigInt::from(3) * &d[k] * &d[k] - BigInt::from(4) * &lam[k][k - 1] * &lam[k][k - 1];
        if lhs < rhs {
            b.swap(k, k - 1);
            for j in 0..k - 1 {
                let t = lam[k][j].clone();
                lam[k][j] = lam[k - 1][j].clone();
                lam[k - 1][j] = t;
            }
            let l = lam[k][k - 1].clone();
            let bb = (&d[k - 1] * &d[k + 1] + &l * &l) / &d[k];
            for i in k + 1..=kmax {
                let t = lam[i][k].clone();
                lam[i][k] = (&d[k + 1] * &lam[i][k - 1] - &l * &t) / &d[k];
                lam[i][k - 1] = (&bb * &t + &l * &lam[i][k]) / &d[k + 1];
            }
            d[k] = bb;
            if k > 1 {
                k -= 1;
            }
        } else {
            for l in (0..k.saturating_sub(1)).rev() {
                reduce(b, &mut lam, &d, k, l);
            }
            k += 1;
        }
    }
}

fn reduce(b: &mut [Vec<BigInt>], lam: &mut [Vec<BigInt>], d: &[BigInt], k: usize, l: usize) {
    if BigInt::from(2) * lam[k][l].abs() <= d[l + 1] {
        return;
    }
    let q = round_div(&lam[k][l], &d[l + 1]);
    let (lo, hi) = b.split_at_mut(k);
    for (x, y) in hi[0].iter_mut().zip(&lo[l]) {
        *x -= &q * y;
    }
    lam[k][l] -= &q * &d[l + 1];
    for i in 0..l {
        let t = &q * &lam[l][i];
        lam[k][i] -= t;
    }
}

/// Multiplies each row by the lcm of its denominators (odd for matrices over
/// the 2-local integers), leaving the kernel unchanged.
fn integral_rows(a: &Matrix) -> Vec<Vec<BigInt>> {
    a.to_rows()
        .into_iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(&x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

/// LLL-reduced basis of `{x in Z^n : A x = 0}`.
///
/// Reduces the rows of `[I | N Aᵀ]`; for `N` large the first `n - rank`
/// reduced rows have vanishing second block and form a basis of the integer
/// kernel. `N` is increased until that happens.
pub fn integer_kernel(a: &Matrix) -> Vec<Vec<BigInt>> {
    let (m, n) = (a.rows(), a.cols());
    let rank = echelon(a.to_rows(), n).rows.len();
    let dim = n - rank;
    if dim == 0 {
        return vec![];
    }
    if rank == 0 {
        return (0..n)
            .map(|i| (0..n).map(|j| BigInt::from((i == j) as i32)).collect())
            .collect();
    }
    let rows = integral_rows(a);
    let mut weight = BigInt::from(1u64 << 20);
    loop {
        let mut b: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let mut v = vec![BigInt::zero(); n + m];
                v[i] = BigInt::one();
                for (r, row) in rows.iter().enumerate() {
                    v[n + r] = &weight * &row[i];
                }
                v
            })
            .collect();
        lll_reduce(&mut b);
        if b[..dim].iter().all(|v| v[n..].iter().all(|x| x.is_zero())) {
            return b.into_iter().take(dim).map(|mut v| {
                v.truncate(n);
                v
            }).collect();
        }
        weight = &weight * &weight;
    }
}

/// The kernel of `a` as a lattice with an LLL-reduced integer basis. The
/// basis is saturated over the integers, so representation matrices on it
/// stay integral.
pub fn integral_kernel_lattice(a: &Matrix) -> Lattice {
    let basis: Vec<Vec<Local2Rational>> = integer_kernel(a)
        .into_iter()
        .map(|v| v.into_iter().map(Local2Rational::from).collect())
        .collect();
    Lattice::from_basis(a.cols(), basis).expect("integer kernel basis is independent")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn reduces_a_skewed_basis() {
        let mut b = big(&[&[1, 0, 0], &[1000, 1, 0], &[2001, 3, 1]]);
        lll_reduce(&mut b);
        for v in &b {
            assert!(v.iter().all(|x| x.abs() <= BigInt::from(1)), "{:?}", b);
        }
    }

    #[test]
    fn kernel_is_saturated_and_reduced() {
        let a = Matrix::from_i64(&[&[2, 4, 6, 8], &[1, 1, 1, 1]]);
        let k = integer_kernel(&a);
        assert_eq!(k.len(), 2);
        let l = integral_kernel_lattice(&a);
        assert!(l.is_saturated());
        for v in &k {
            let w: Vec<Local2Rational> = v.iter().cloned().map(Local2Rational::from).collect();
            assert!(a.mul_vec(&w).iter().all(|x| x.is_zero()));
            assert!(v.iter().all(|x| x.abs() <= BigInt::from(2)));
        }
    }

    #[test]
    fn kernel_of_fractional_matrix() {
        let third = Local2Rational::new(1, 3).unwrap();
        let a = Matrix::new(1, 3, vec![third.clone(), third.clone(), third]).unwrap();
        assert_eq!(integer_kernel(&a).len(), 2);
    }
}
