//! Representations of A4 and of its Klein four-subgroup H by generator
//! matrices over the 2-local integers.
//!
//! Matrices act on coordinate columns: column `j` of the matrix of `g` holds
//! the coordinates of `g` applied to basis vector `j`.

mod character;
mod constructors;
mod hom;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use character::{is_irreducible, rational_multiplicities, Character, QOmega, RationalMultiplicities};
pub use constructors::{
    gamma_d, gamma_d_typeset, linear_characters_h, monomial_gamma2, projective_parts, regular_rep,
    right_multiplication, tau, tau0, ProjectiveParts,
};
pub use hom::{
    are_equivalent, hom_dimension, intertwiner_lattice, is_intertwiner, mod2_nontrivial_idempotent,
    Equivalence, EquivalenceSearch, HomLattice, SearchMode,
};

use crate::arith::{Lattice, Local2Rational, Matrix};
use crate::error::{Error, Result};
use crate::groups::{self, FactoredElement};

/// Common surface of G- and H-representations used by the generic
/// intertwiner and decomposition machinery.
pub trait GroupModule: Clone + Send + Sync {
    fn degree(&self) -> usize;
    fn generators(&self) -> Vec<&Matrix>;
    fn group_order(&self) -> usize;
    /// Matrices of all group elements, in the group's enumeration order.
    fn element_matrices(&self) -> Arc<Vec<Matrix>>;
    /// Index of the inverse of each element in the enumeration order.
    fn inverse_indices(&self) -> Vec<usize>;
    fn direct_sum(&self, other: &Self) -> Self;
    fn tensor(&self, other: &Self) -> Self;
    fn dual(&self) -> Self;
    /// Action on a G-stable sublattice, in the lattice's basis.
    fn restrict_to_lattice(&self, lattice: &Lattice) -> Result<Self>;
    /// Header for the dump format, e.g. `3 group(a1,a2,b)`.
    fn dump_header(&self) -> String;

    fn to_dump(&self) -> String {
        let mut s = self.dump_header();
        s.push('\n');
        for g in self.generators() {
            s.push_str(&g.to_text());
        }
        s
    }
}

/// A representation of A4: matrices for `a1`, `a2` and `b`.
#[derive(Clone)]
pub struct Representation {
    degree: usize,
    a1: Matrix,
    a2: Matrix,
    b: Matrix,
    elements: OnceLock<Arc<Vec<Matrix>>>,
}

/// A representation of H = <a1, a2>.
#[derive(Clone)]
pub struct HRepresentation {
    degree: usize,
    a1: Matrix,
    a2: Matrix,
    elements: OnceLock<Arc<Vec<Matrix>>>,
}

fn check_square(m: &Matrix, n: usize, name: &str) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::InvalidRepresentation(format!(
            "{} is {}x{}, expected {}x{}",
            name,
            m.rows(),
            m.cols(),
            n,
            n
        )));
    }
    Ok(())
}

impl Representation {
    /// Validates `a1^2 = a2^2 = b^3 = 1`, `b a1 b^-1 = a2`, `b a2 b^-1 = a1 a2`.
    pub fn new(a1: Matrix, a2: Matrix, b: Matrix) -> Result<Self> {
        let n = a1.rows();
        check_square(&a1, n, "a1")?;
        check_square(&a2, n, "a2")?;
        check_square(&b, n, "b")?;
        let id = Matrix::identity(n);
        let fail = |what: &str| Err(Error::InvalidRepresentation(what.to_string()));
        if &a1 * &a1 != id {
            return fail("a1^2 != 1");
        }
        if &a2 * &a2 != id {
            return fail("a2^2 != 1");
        }
        if b.pow(3) != id {
            return fail("b^3 != 1");
        }
        // b x b^-1 = y  <=>  b x = y b
        if &b * &a1 != &a2 * &b {
            return fail("b a1 b^-1 != a2");
        }
        if &b * &a2 != &(&a1 * &a2) * &b {
            return fail("b a2 b^-1 != a1 a2");
        }
        Ok(Self::new_unchecked(a1, a2, b))
    }

    pub(crate) fn new_unchecked(a1: Matrix, a2: Matrix, b: Matrix) -> Self {
        Representation {
            degree: a1.rows(),
            a1,
            a2,
            b,
            elements: OnceLock::new(),
        }
    }

    pub fn a1(&self) -> &Matrix {
        &self.a1
    }

    pub fn a2(&self) -> &Matrix {
        &self.a2
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    /// Matrix of `a1^e1 a2^e2 b^j`.
    pub fn matrix_of(&self, f: FactoredElement) -> Matrix {
        self.element_matrices()[f.index()].clone()
    }

    pub fn character(&self) -> Character {
        Character::of(self)
    }

    pub fn restrict_to_h(&self) -> HRepresentation {
        HRepresentation::new_unchecked(self.a1.clone(), self.a2.clone())
    }

    /// `n` copies of `self`.
    pub fn power_sum(&self, n: usize) -> Representation {
        let mut acc = Representation::zero();
        for _ in 0..n {
            acc = acc.direct_sum(self);
        }
        acc
    }

    /// The zero-dimensional representation.
    pub fn zero() -> Representation {
        Self::new_unchecked(Matrix::zeros(0, 0), Matrix::zeros(0, 0), Matrix::zeros(0, 0))
    }

    /// Parses the dump format written by [`GroupModule::to_dump`].
    pub fn parse_dump(s: &str) -> Result<Representation> {
        let mats = parse_dump_matrices(s, 3)?;
        let [a1, a2, b]: [Matrix; 3] = mats.try_into().expect("three matrices");
        Representation::new(a1, a2, b)
    }
}

impl HRepresentation {
    pub fn new(a1: Matrix, a2: Matrix) -> Result<Self> {
        let n = a1.rows();
        check_square(&a1, n, "a1")?;
        check_square(&a2, n, "a2")?;
        let id = Matrix::identity(n);
        if &a1 * &a1 != id || &a2 * &a2 != id {
            return Err(Error::InvalidRepresentation("generators are not involutions".into()));
        }
        if &a1 * &a2 != &a2 * &a1 {
            return Err(Error::InvalidRepresentation("generators do not commute".into()));
        }
        Ok(Self::new_unchecked(a1, a2))
    }

    pub(crate) fn new_unchecked(a1: Matrix, a2: Matrix) -> Self {
        HRepresentation {
            degree: a1.rows(),
            a1,
            a2,
            elements: OnceLock::new(),
        }
    }

    pub fn a1(&self) -> &Matrix {
        &self.a1
    }

    pub fn a2(&self) -> &Matrix {
        &self.a2
    }

    pub fn trivial() -> HRepresentation {
        Self::new_unchecked(Matrix::identity(1), Matrix::identity(1))
    }

    /// Traces at 1, a1, a2, a1a2.
    pub fn traces(&self) -> [Local2Rational; 4] {
        let e = self.element_matrices();
        [e[0].trace(), e[1].trace(), e[2].trace(), e[3].trace()]
    }

    /// The twist `h -> self(c^-1 h c)` by `c = b^j`, a representation of the
    /// conjugate subgroup (which is H again, H being normal).
    pub fn conjugate_by_b(&self, j: u32) -> HRepresentation {
        let twist = |h: &groups::Perm4| {
            let bj = groups::b().pow(j);
            let x = groups::compose(&bj.inverse(), &groups::compose(h, &bj));
            let f = groups::factor(&x).expect("H is normal");
            self.element_matrices()[f.h_index()].clone()
        };
        HRepresentation::new_unchecked(twist(&groups::a1()), twist(&groups::a2()))
    }

    pub fn parse_dump(s: &str) -> Result<HRepresentation> {
        let mats = parse_dump_matrices(s, 2)?;
        let [a1, a2]: [Matrix; 2] = mats.try_into().expect("two matrices");
        HRepresentation::new(a1, a2)
    }
}

fn parse_dump_matrices(s: &str, count: usize) -> Result<Vec<Matrix>> {
    let mut lines = s.lines().filter(|l| !l.trim().is_empty()).peekable();
    let header = lines.next().ok_or_else(|| Error::Parse("empty dump".into()))?;
    let (deg, group) = header
        .split_once(' ')
        .ok_or_else(|| Error::Parse(format!("bad dump header `{}`", header)))?;
    let deg: usize = deg
        .parse()
        .map_err(|_| Error::Parse(format!("bad degree in `{}`", header)))?;
    let expected = if count == 3 { "group(a1,a2,b)" } else { "group(a1,a2)" };
    if group.trim() != expected {
        return Err(Error::Parse(format!("expected `{}`, found `{}`", expected, group)));
    }
    let rest: Vec<&str> = lines.collect();
    let mut mats = Vec::new();
    let mut k = 0;
    for _ in 0..count {
        let chunk = rest
            .get(k..k + deg + 1)
            .ok_or_else(|| Error::Parse("truncated dump".into()))?
            .join("\n");
        let m = Matrix::parse_text(&chunk)?;
        if m.rows() != deg {
            return Err(Error::DimensionMismatch {
                expected: deg,
                found: m.rows(),
            });
        }
        mats.push(m);
        k += deg + 1;
    }
    Ok(mats)
}

fn sub_action(lattice: &Lattice, g: &Matrix) -> Result<Matrix> {
    let r = lattice.rank();
    let mut m = Matrix::zeros(r, r);
    for (j, v) in lattice.basis().iter().enumerate() {
        let image = g.mul_vec(v);
        let c = lattice.coordinates(&image)?.ok_or_else(|| {
            Error::ConstructionFailure("sublattice is not stable under the group".into())
        })?;
        for (i, x) in c.into_iter().enumerate() {
            m[(i, j)] = x;
        }
    }
    Ok(m)
}

impl GroupModule for Representation {
    fn degree(&self) -> usize {
        self.degree
    }

    fn generators(&self) -> Vec<&Matrix> {
        vec![&self.a1, &self.a2, &self.b]
    }

    fn group_order(&self) -> usize {
        12
    }

    fn element_matrices(&self) -> Arc<Vec<Matrix>> {
        self.elements
            .get_or_init(|| {
                let h = [
                    Matrix::identity(self.degree),
                    self.a1.clone(),
                    self.a2.clone(),
                    &self.a1 * &self.a2,
                ];
                let b2 = &self.b * &self.b;
                let bpow = [Matrix::identity(self.degree), self.b.clone(), b2];
                let mut out = Vec::with_capacity(12);
                for bj in &bpow {
                    for hm in &h {
                        out.push(hm * bj);
                    }
                }
                Arc::new(out)
            })
            .clone()
    }

    fn inverse_indices(&self) -> Vec<usize> {
        g_inverse_indices()
    }

    fn direct_sum(&self, other: &Self) -> Self {
        Representation::new_unchecked(
            Matrix::block_diag(&[&self.a1, &other.a1]),
            Matrix::block_diag(&[&self.a2, &other.a2]),
            Matrix::block_diag(&[&self.b, &other.b]),
        )
    }

    fn tensor(&self, other: &Self) -> Self {
        Representation::new_unchecked(
            self.a1.kron(&other.a1),
            self.a2.kron(&other.a2),
            self.b.kron(&other.b),
        )
    }

    /// The contragredient: the matrix of `g` is the transpose of that of `g^-1`.
    fn dual(&self) -> Self {
        Representation::new_unchecked(
            self.a1.transpose(),
            self.a2.transpose(),
            (&self.b * &self.b).transpose(),
        )
    }

    fn restrict_to_lattice(&self, lattice: &Lattice) -> Result<Self> {
        Ok(Representation::new_unchecked(
            sub_action(lattice, &self.a1)?,
            sub_action(lattice, &self.a2)?,
            sub_action(lattice, &self.b)?,
        ))
    }

    fn dump_header(&self) -> String {
        format!("{} group(a1,a2,b)", self.degree)
    }
}

impl GroupModule for HRepresentation {
    fn degree(&self) -> usize {
        self.degree
    }

    fn generators(&self) -> Vec<&Matrix> {
        vec![&self.a1, &self.a2]
    }

    fn group_order(&self) -> usize {
        4
    }

    fn element_matrices(&self) -> Arc<Vec<Matrix>> {
        self.elements
            .get_or_init(|| {
                Arc::new(vec![
                    Matrix::identity(self.degree),
                    self.a1.clone(),
                    self.a2.clone(),
                    &self.a1 * &self.a2,
                ])
            })
            .clone()
    }

    fn inverse_indices(&self) -> Vec<usize> {
        vec![0, 1, 2, 3]
    }

    fn direct_sum(&self, other: &Self) -> Self {
        HRepresentation::new_unchecked(
            Matrix::block_diag(&[&self.a1, &other.a1]),
            Matrix::block_diag(&[&self.a2, &other.a2]),
        )
    }

    fn tensor(&self, other: &Self) -> Self {
        HRepresentation::new_unchecked(self.a1.kron(&other.a1), self.a2.kron(&other.a2))
    }

    fn dual(&self) -> Self {
        HRepresentation::new_unchecked(self.a1.transpose(), self.a2.transpose())
    }

    fn restrict_to_lattice(&self, lattice: &Lattice) -> Result<Self> {
        Ok(HRepresentation::new_unchecked(
            sub_action(lattice, &self.a1)?,
            sub_action(lattice, &self.a2)?,
        ))
    }

    fn dump_header(&self) -> String {
        format!("{} group(a1,a2)", self.degree)
    }
}

fn g_inverse_indices() -> Vec<usize> {
    groups::enumerate_g()
        .iter()
        .map(|g| groups::factor(&g.inverse()).expect("A4 is closed").index())
        .collect()
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.a1 == other.a1 && self.a2 == other.a2 && self.b == other.b
    }
}

impl PartialEq for HRepresentation {
    fn eq(&self, other: &Self) -> bool {
        self.a1 == other.a1 && self.a2 == other.a2
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Representation")
            .field("degree", &self.degree)
            .field("a1", &self.a1)
            .field("a2", &self.a2)
            .field("b", &self.b)
            .finish()
    }
}

impl fmt::Debug for HRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HRepresentation")
            .field("degree", &self.degree)
            .field("a1", &self.a1)
            .field("a2", &self.a2)
            .finish()
    }
}

pub fn direct_sum<M: GroupModule>(a: &M, b: &M) -> M {
    a.direct_sum(b)
}

pub fn tensor<M: GroupModule>(a: &M, b: &M) -> M {
    a.tensor(b)
}

pub fn dual<M: GroupModule>(a: &M) -> M {
    a.dual()
}

pub fn restrict_to_h(a: &Representation) -> HRepresentation {
    a.restrict_to_h()
}

/// Induction from H to G with coset representatives `1, b, b^2`.
///
/// The induced module is `⊕_i b^i ⊗ W`. An element `h` of H acts on block
/// `i` by `W(b^-i h b^i)`; `b` moves block `i` to block `i+1 mod 3`.
pub fn induce(w: &HRepresentation) -> Representation {
    let n = w.degree();
    let blocks = |h: &groups::Perm4| -> Matrix {
        let mats: Vec<Matrix> = (0..3)
            .map(|i| w.conjugate_by_b(i).element_matrices()[groups::factor(h).unwrap().h_index()].clone())
            .collect();
        Matrix::block_diag(&[&mats[0], &mats[1], &mats[2]])
    };
    let a1 = blocks(&groups::a1());
    let a2 = blocks(&groups::a2());
    let mut b = Matrix::zeros(3 * n, 3 * n);
    for i in 0..3 {
        let to = (i + 1) % 3;
        for k in 0..n {
            b[(to * n + k, i * n + k)] = Local2Rational::one();
        }
    }
    Representation::new_unchecked(a1, a2, b)
}

#[cfg(test)]
mod tests;
