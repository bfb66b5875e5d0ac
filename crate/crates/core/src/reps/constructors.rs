use super::{GroupModule, HRepresentation, Representation};
use crate::arith::{integral_kernel_lattice, Lattice, Local2Rational, Matrix};
use crate::error::{Error, Result};
use crate::groups::{self, Perm4};

/// Coordinates in the basis `u1 = d e1, u2 = e2 - e1, u3 = e3 - e2` of
/// `M_d = L_d / R(e1+e2+e3+e4)` for an element of `L_d` given in the `e` basis.
fn md_coordinates(d: i64, c: [i64; 4]) -> [Local2Rational; 3] {
    // e4 = -e1 - e2 - e3 modulo L_0
    let c1 = c[0] - c[3];
    let c2 = c[1] - c[3];
    let c3 = c[2] - c[3];
    let x3 = c3;
    let x2 = c2 + c3;
    let s = c1 + c2 + c3;
    debug_assert_eq!(s % d, 0, "element lies in L_d");
    [
        Local2Rational::from(s / d),
        Local2Rational::from(x2),
        Local2Rational::from(x3),
    ]
}

fn md_matrix(d: i64, g: &Perm4) -> Matrix {
    let basis: [[i64; 4]; 3] = [[d, 0, 0, 0], [-1, 1, 0, 0], [0, -1, 1, 0]];
    let mut m = Matrix::zeros(3, 3);
    for (j, v) in basis.iter().enumerate() {
        let mut image = [0i64; 4];
        for (i, &coef) in v.iter().enumerate() {
            image[g.apply(i + 1) - 1] += coef;
        }
        for (i, x) in md_coordinates(d, image).into_iter().enumerate() {
            m[(i, j)] = x;
        }
    }
    m
}

/// The representation afforded by `M_d`, derived from the permutation action
/// on `e1..e4`.
pub fn gamma_d(d: u32) -> Result<Representation> {
    if ![1, 2, 4].contains(&d) {
        return Err(Error::InvalidArgument(format!("d must be 1, 2 or 4, got {}", d)));
    }
    let d = d as i64;
    Representation::new(
        md_matrix(d, &groups::a1()),
        md_matrix(d, &groups::a2()),
        md_matrix(d, &groups::b()),
    )
}

/// The matrices as printed in the literature, reading the `a2` entry
/// `4d{-1}` as `4/d`. Kept only for entrywise comparison with [`gamma_d`].
pub fn gamma_d_typeset(d: u32) -> Result<[Matrix; 3]> {
    if ![1, 2, 4].contains(&d) {
        return Err(Error::InvalidArgument(format!("d must be 1, 2 or 4, got {}", d)));
    }
    let d = d as i64;
    let q = 4 / d;
    Ok([
        Matrix::from_i64(&[&[1, 0, -q], &[d, -1, -2], &[0, 0, -1]]),
        Matrix::from_i64(&[&[-3, q, 0], &[-2 * d, 3, 0], &[-d, 2, -1]]),
        Matrix::from_i64(&[&[1, 0, 0], &[d, 0, -1], &[0, 1, -1]]),
    ])
}

/// The monomial form of `Γ_2`: `a1 -> diag(-1, 1, -1)`, `b` a cyclic shift.
/// The `a2` matrix is forced by `a2 = b a1 b^-1`.
pub fn monomial_gamma2() -> Representation {
    let a1 = Matrix::from_i64(&[&[-1, 0, 0], &[0, 1, 0], &[0, 0, -1]]);
    let b = Matrix::from_i64(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
    let binv = b.transpose();
    let a2 = &(&b * &a1) * &binv;
    Representation::new(a1, a2, b).expect("monomial form satisfies the relations")
}

pub fn tau0() -> Representation {
    Representation::new(Matrix::identity(1), Matrix::identity(1), Matrix::identity(1))
        .expect("trivial representation")
}

/// Degree 2, `H` acting trivially, `b -> (0 -1; 1 -1)`.
pub fn tau() -> Representation {
    Representation::new(
        Matrix::identity(2),
        Matrix::identity(2),
        Matrix::from_i64(&[&[0, -1], &[1, -1]]),
    )
    .expect("tau satisfies the relations")
}

fn perm_matrix(f: impl Fn(usize) -> usize, n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for j in 0..n {
        m[(f(j), j)] = Local2Rational::one();
    }
    m
}

fn g_index(g: &Perm4) -> usize {
    groups::factor(g).expect("element of A4").index()
}

/// Left regular representation on the basis [`groups::enumerate_g`].
pub fn regular_rep() -> Representation {
    let elems = groups::enumerate_g();
    let left = |g: Perm4| perm_matrix(|j| g_index(&groups::compose(&g, &elems[j])), 12);
    Representation::new(left(groups::a1()), left(groups::a2()), left(groups::b()))
        .expect("regular representation")
}

/// Matrix of `x -> x * w` on the group ring, `w` given by coefficients in
/// the order of [`groups::enumerate_g`].
pub fn right_multiplication(w: &[Local2Rational]) -> Matrix {
    let elems = groups::enumerate_g();
    let mut m = Matrix::zeros(12, 12);
    for (j, x) in elems.iter().enumerate() {
        for (k, g) in elems.iter().enumerate() {
            if w[k].is_zero() {
                continue;
            }
            let i = g_index(&groups::compose(x, g));
            m[(i, j)] += &w[k];
        }
    }
    m
}

/// `P0 = RG w0` and `P1 = RG w1` with `w0 = (1 + b + b^2)/3`, `w1 = 1 - w0`.
#[derive(Clone, Debug)]
pub struct ProjectiveParts {
    pub p0: Representation,
    pub p1: Representation,
    /// Basis of `P0` inside the group ring: `h (1 + b + b^2)` for `h` in H.
    pub p0_basis: Lattice,
    /// Reduced integer basis of `P1 = ker(x -> x w0)` inside the group ring.
    pub p1_basis: Lattice,
    pub w0: Vec<Local2Rational>,
}

pub fn w0() -> Vec<Local2Rational> {
    let third = Local2Rational::new(1, 3).unwrap();
    let mut w = vec![Local2Rational::zero(); 12];
    for j in 0..3 {
        w[j * 4] = third.clone();
    }
    w
}

pub fn projective_parts() -> ProjectiveParts {
    let reg = regular_rep();
    let w0 = w0();
    let hs = reg.element_matrices();
    let three = Local2Rational::from_i64(3);
    let p0_vectors: Vec<Vec<Local2Rational>> =
        (0..4).map(|k| hs[k].mul_vec(&w0).iter().map(|x| x * &three).collect()).collect();
    let p0_basis = Lattice::from_basis(12, p0_vectors).expect("independent");
    let p0 = reg.restrict_to_lattice(&p0_basis).expect("RG w0 is a submodule");
    let p1_basis = integral_kernel_lattice(&right_multiplication(&w0));
    let p1 = reg.restrict_to_lattice(&p1_basis).expect("RG w1 is a submodule");
    ProjectiveParts {
        p0,
        p1,
        p0_basis,
        p1_basis,
        w0,
    }
}

/// `δ0..δ3` with values `(a1, a2)`: (1,1), (-1,1), (1,-1), (-1,-1).
pub fn linear_characters_h() -> Vec<HRepresentation> {
    [(1, 1), (-1, 1), (1, -1), (-1, -1)]
        .iter()
        .map(|&(x, y)| {
            HRepresentation::new(Matrix::from_i64(&[&[x]]), Matrix::from_i64(&[&[y]]))
                .expect("linear character")
        })
        .collect()
}
