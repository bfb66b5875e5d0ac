use super::local2::Local2Rational;
use super::matrix::Matrix;

/// `u * a * v == d` with `u`, `v` unimodular and `d` diagonal.
///
/// The nonzero diagonal entries of `d` are exact powers of two, each dividing
/// the next; `elementary_exponents` lists those exponents in order.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
    pub elementary_exponents: Vec<u32>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.elementary_exponents.len()
    }
}

/// Smith normal form over the 2-local integers.
///
/// Each step picks the entry of minimal 2-adic valuation in the remaining
/// block (ties by smallest row, then column). In a discrete valuation ring
/// that entry divides everything else, so one round of row and column
/// clearing per pivot suffices, and the divisibility chain comes for free.
pub fn smith_normal_form(a: &Matrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.to_rows();
    let mut u = Matrix::identity(m).to_rows();
    // v is kept transposed so column operations become row operations
    let mut vt = Matrix::identity(n).to_rows();
    let mut exps = Vec::new();

    for t in 0..m.min(n) {
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, row) in d.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if let Some(val) = x.val2() {
                    if best.is_none_or(|(bv, _, _)| val < bv) {
                        best = Some((val, i, j));
                    }
                }
            }
        }
        let Some((val, pi, pj)) = best else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        for row in d.iter_mut() {
            row.swap(t, pj);
        }
        vt.swap(t, pj);

        // normalize the pivot to 2^val by dividing its row by the unit part
        let unit = d[t][t].div_pow2(val).expect("valuation is exact");
        let uinv = unit.inverse().expect("unit part is invertible");
        for x in d[t].iter_mut() {
            *x = &*x * &uinv;
        }
        for x in u[t].iter_mut() {
            *x = &*x * &uinv;
        }
        let pivot = d[t][t].clone();

        for i in t + 1..m {
            if d[i][t].is_zero() {
                continue;
            }
            let f = d[i][t].checked_div(&pivot).expect("pivot of minimal valuation divides");
            for j in t..n {
                if !d[t][j].is_zero() {
                    let s = &f * &d[t][j];
                    d[i][j] -= &s;
                }
            }
            for j in 0..m {
                if !u[t][j].is_zero() {
                    let s = &f * &u[t][j];
                    u[i][j] -= &s;
                }
            }
        }
        for j in t + 1..n {
            if d[t][j].is_zero() {
                continue;
            }
            let f = d[t][j].checked_div(&pivot).expect("pivot of minimal valuation divides");
            // column j -= f * column t; only row t is nonzero in column t now
            d[t][j] = Local2Rational::zero();
            for k in 0..n {
                if !vt[t][k].is_zero() {
                    let s = &f * &vt[t][k];
                    vt[j][k] -= &s;
                }
            }
        }
        exps.push(val);
    }

    SmithDecomposition {
        u: Matrix::from_rows(u).expect("square"),
        d: Matrix::from_rows(d).unwrap_or_else(|_| Matrix::zeros(m, n)),
        v: Matrix::from_rows(vt).expect("square").transpose(),
        elementary_exponents: exps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &Matrix) -> SmithDecomposition {
        let s = smith_normal_form(a);
        assert_eq!(&(&s.u * a) * &s.v, s.d);
        assert!(s.u.is_unimodular());
        assert!(s.v.is_unimodular());
        s
    }

    #[test]
    fn identity_is_its_own_form() {
        let s = check(&Matrix::identity(3));
        assert_eq!(s.d, Matrix::identity(3));
        assert_eq!(s.elementary_exponents, vec![0, 0, 0]);
    }

    #[test]
    fn odd_entries_normalize_to_one() {
        let s = check(&Matrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.d, Matrix::from_i64(&[&[1, 0], &[0, 2]]));
    }

    #[test]
    fn hand_elimination_diag_4_6() {
        // 6 = 2*3 has valuation 1 and 4 has valuation 2
        let s = check(&Matrix::from_i64(&[&[4, 0], &[0, 6]]));
        assert_eq!(s.d, Matrix::from_i64(&[&[2, 0], &[0, 4]]));
        assert_eq!(s.elementary_exponents, vec![1, 2]);
    }

    #[test]
    fn zero_matrix_has_empty_exponents() {
        let s = check(&Matrix::zeros(2, 3));
        assert!(s.d.is_zero());
        assert!(s.elementary_exponents.is_empty());
    }

    #[test]
    fn rectangular_with_dependent_rows() {
        let a = Matrix::from_i64(&[&[2, 4, 6], &[1, 2, 3], &[0, 2, 2]]);
        let s = check(&a);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.elementary_exponents, vec![0, 1]);
    }
}
