use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::local2::Local2Rational;
use super::matrix::{echelon, Matrix};
use super::modp::{BitMatrix, F2Echelon};
use crate::error::{Error, Result};

/// A free submodule of `R^n`, `R` the 2-local integers, given by a basis.
///
/// Bases produced by [`kernel_lattice`] and [`Lattice::saturate`] are
/// saturated; a lattice built from an arbitrary basis may not be, and
/// [`Lattice::is_saturated`] says which.
#[derive(Clone, Debug)]
pub struct Lattice {
    ambient_dim: usize,
    basis: Vec<Vec<Local2Rational>>,
    coords: Option<CoordinateMap>,
}

// For saturated lattices: rows `pivots` of the basis matrix form a unimodular
// block whose inverse reads off coordinates.
#[derive(Clone, Debug)]
struct CoordinateMap {
    pivots: Vec<usize>,
    inverse: Matrix,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.rank() == other.rank()
            && other.basis.iter().all(|v| self.contains(v).unwrap_or(false))
            && self.basis.iter().all(|v| other.contains(v).unwrap_or(false))
    }
}

impl Lattice {
    /// Lattice with the given basis; fails unless the vectors are independent.
    pub fn from_basis(ambient_dim: usize, basis: Vec<Vec<Local2Rational>>) -> Result<Self> {
        for b in &basis {
            if b.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: b.len(),
                });
            }
        }
        let independent_mod2 = rank_mod2(&basis, ambient_dim) == basis.len();
        if !independent_mod2 && echelon(basis.clone(), ambient_dim).pivots.len() != basis.len() {
            return Err(Error::ConstructionFailure(format!(
                "{} basis vectors are dependent",
                basis.len()
            )));
        }
        let coords = coordinate_map(ambient_dim, &basis);
        Ok(Lattice {
            ambient_dim,
            basis,
            coords,
        })
    }

    // Basis known to be in unit echelon form with identity on `pivots`.
    pub(crate) fn from_echelon(
        ambient_dim: usize,
        basis: Vec<Vec<Local2Rational>>,
        pivots: Vec<usize>,
    ) -> Self {
        debug_assert!(basis.iter().enumerate().all(|(i, b)| pivots
            .iter()
            .enumerate()
            .all(|(j, &p)| if i == j { b[p].is_one() } else { b[p].is_zero() })));
        let r = basis.len();
        Lattice {
            ambient_dim,
            basis,
            coords: Some(CoordinateMap {
                pivots,
                inverse: Matrix::identity(r),
            }),
        }
    }

    /// The saturation of the span of `generators`: all 2-integral vectors in
    /// their rational span.
    pub fn saturate(ambient_dim: usize, generators: Vec<Vec<Local2Rational>>) -> Self {
        let e = echelon(generators, ambient_dim);
        Lattice::from_echelon(ambient_dim, e.rows, e.pivots)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Local2Rational>] {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient_dim x rank` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient_dim, &self.basis)
    }

    /// Saturated iff the basis stays independent modulo 2.
    pub fn is_saturated(&self) -> bool {
        self.basis_matrix().mod2().rank() == self.rank()
    }

    /// Basis vectors reduced modulo 2, as `ambient_dim`-long bit vectors.
    pub fn basis_mod2(&self) -> Vec<Vec<bool>> {
        self.basis
            .iter()
            .map(|b| b.iter().map(|x| x.mod2()).collect())
            .collect()
    }

    /// Coordinates of `v` in the basis if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[Local2Rational]) -> Result<Option<Vec<Local2Rational>>> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        if let Some(cm) = &self.coords {
            let head: Vec<Local2Rational> = cm.pivots.iter().map(|&p| v[p].clone()).collect();
            let c = cm.inverse.mul_vec(&head);
            return Ok(if self.combine(&c) == v { Some(c) } else { None });
        }
        Ok(rational_coordinates(&self.basis, v).and_then(|c| {
            c.iter()
                .map(|x| Local2Rational::from_big_rational(x).ok())
                .collect()
        }))
    }

    /// True iff `v` is a combination of the basis with 2-integral coefficients.
    pub fn contains(&self, v: &[Local2Rational]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn combine(&self, coeffs: &[Local2Rational]) -> Vec<Local2Rational> {
        let mut out = vec![Local2Rational::zero(); self.ambient_dim];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o += &(c * x);
                }
            }
        }
        out
    }
}

fn coordinate_map(ambient: usize, basis: &[Vec<Local2Rational>]) -> Option<CoordinateMap> {
    if basis.is_empty() {
        return Some(CoordinateMap {
            pivots: vec![],
            inverse: Matrix::zeros(0, 0),
        });
    }
    // choose rows where the mod-2 reduction of the basis matrix is independent
    let bm = Matrix::from_columns(ambient, basis);
    let mut t = bm.transpose().mod2();
    let pivots = t.eliminate();
    if pivots.len() != basis.len() {
        return None;
    }
    let all: Vec<usize> = (0..basis.len()).collect();
    let inverse = bm.submatrix(&pivots, &all).inverse()?;
    Some(CoordinateMap { pivots, inverse })
}

// Solves sum c_i b_i = v over the rationals.
fn rational_coordinates(basis: &[Vec<Local2Rational>], v: &[Local2Rational]) -> Option<Vec<BigRational>> {
    let r = basis.len();
    let n = v.len();
    // augmented system: n equations, r unknowns
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| b[i].to_big_rational()).collect();
            row.push(v[i].to_big_rational());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for c in 0..r {
        let Some(p) = (row..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let s = BigRational::one() / a[row][c].clone();
        for x in a[row].iter_mut() {
            *x = &*x * &s;
        }
        for i in 0..n {
            if i != row && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=r {
                    let t = &f * &a[row][j];
                    a[i][j] -= t;
                }
            }
        }
        pivot_cols.push(c);
        row += 1;
    }
    if a[row..].iter().any(|x| !x[r].is_zero()) {
        return None;
    }
    let mut c = vec![BigRational::zero(); r];
    for (i, &pc) in pivot_cols.iter().enumerate() {
        c[pc] = a[i][r].clone();
    }
    Some(c)
}

/// Saturated basis of `{x : a * x = 0}`.
///
/// Row-reduce with unit pivots; each free column `f` then gives the vector
/// with 1 at `f`, 0 at the other free columns and `-row[f]` at the pivots.
/// Those vectors carry an identity block on the free columns, which makes
/// the basis saturated.
pub fn kernel_lattice(a: &Matrix) -> Lattice {
    let n = a.cols();
    let e = echelon(a.to_rows(), n);
    let free: Vec<usize> = (0..n).filter(|c| !e.pivots.contains(c)).collect();
    let basis: Vec<Vec<Local2Rational>> = free
        .iter()
        .map(|&f| {
            let mut x = vec![Local2Rational::zero(); n];
            x[f] = Local2Rational::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                x[p] = -&row[f];
            }
            x
        })
        .collect();
    Lattice::from_echelon(n, basis, free)
}

/// Saturation of the span of independent integer vectors, by repeatedly
/// halving sums that vanish mod 2. Avoids denominators altogether, so
/// entries stay small where [`Lattice::saturate`] would let them grow.
pub fn saturate_integral(ambient_dim: usize, mut vectors: Vec<Vec<BigInt>>) -> Lattice {
    let d = vectors.len();
    'restart: loop {
        let mut ech = F2Echelon::new(ambient_dim);
        for (i, v) in vectors.iter().enumerate() {
            let bits: Vec<bool> = v.iter().map(|x| x.is_odd()).collect();
            if let Err(comb) = ech.insert(&bits, i, d) {
                // replace the longest member of the dependency by the half sum
                let norm = |v: &[BigInt]| v.iter().map(|x| x.bits()).sum::<u64>();
                let &k = comb.iter().max_by_key(|&&j| norm(&vectors[j])).expect("nonempty dependency");
                let mut sum = vec![BigInt::zero(); ambient_dim];
                for &j in &comb {
                    for (a, b) in sum.iter_mut().zip(&vectors[j]) {
                        *a += b;
                    }
                }
                vectors[k] = sum.into_iter().map(|x| x >> 1).collect();
                continue 'restart;
            }
        }
        break;
    }
    let basis = vectors
        .into_iter()
        .map(|v| v.into_iter().map(Local2Rational::from).collect())
        .collect();
    Lattice::from_basis(ambient_dim, basis).expect("independent mod 2")
}

/// Rank over GF(2) of a list of vectors.
pub fn rank_mod2(vectors: &[Vec<Local2Rational>], len: usize) -> usize {
    let mut b = BitMatrix::zeros(vectors.len(), len);
    for (i, v) in vectors.iter().enumerate() {
        for (j, x) in v.iter().enumerate() {
            if x.mod2() {
                b.set(i, j, true);
            }
        }
    }
    b.rank()
}

pub fn is_unimodular(a: &Matrix) -> bool {
    a.is_unimodular()
}

/// Membership in a lattice; a convenience wrapper over [`Lattice::contains`].
pub fn lattice_contains(l: &Lattice, v: &[Local2Rational]) -> Result<bool> {
    l.contains(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Local2Rational> {
        xs.iter().map(|&x| Local2Rational::from(x)).collect()
    }

    #[test]
    fn kernel_of_row_vector() {
        let k = kernel_lattice(&Matrix::from_i64(&[&[1, 1]]));
        assert_eq!(k, Lattice::from_basis(2, vec![v(&[1, -1])]).unwrap());
        assert!(kernel_lattice(&Matrix::identity(2)).basis().is_empty());
    }

    #[test]
    fn kernel_is_saturated() {
        let k = kernel_lattice(&Matrix::from_i64(&[&[2, 1]]));
        assert_eq!(k.basis(), &[v(&[1, -2])]);
        assert!(k.is_saturated());
        // (2, -4) spans the same rational line but not the same lattice
        let bad = Lattice::from_basis(2, vec![v(&[2, -4])]).unwrap();
        assert!(!bad.is_saturated());
        assert_ne!(k, bad);
    }

    #[test]
    fn containment() {
        let l = Lattice::from_basis(2, vec![v(&[1, -1])]).unwrap();
        assert!(l.contains(&v(&[3, -3])).unwrap());
        let l = Lattice::from_basis(2, vec![v(&[2, 0])]).unwrap();
        assert!(!l.contains(&v(&[1, 0])).unwrap());
        let l = Lattice::from_basis(2, vec![v(&[1, -2])]).unwrap();
        let third = Local2Rational::new(1, 3).unwrap();
        let x = vec![third.clone(), Local2Rational::new(-2, 3).unwrap()];
        assert!(l.contains(&x).unwrap());
        assert!(l.contains(&v(&[1, 2, 3])).is_err());
    }

    #[test]
    fn saturate_is_idempotent() {
        let l = Lattice::saturate(3, vec![v(&[2, 4, 6]), v(&[0, 2, 2])]);
        assert!(l.is_saturated());
        let again = Lattice::saturate(3, l.basis().to_vec());
        assert_eq!(l, again);
        // (1,2,3) is in the saturation even though only 2*(1,2,3) was given
        assert!(l.contains(&v(&[1, 2, 3])).unwrap());
    }
}
