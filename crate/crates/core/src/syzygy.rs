//! The syzygy tower of the trivial module over the Klein four-group ring.
//!
//! Elements of `RH` are coefficient vectors on `1, a1, a2, a1a2`; index
//! `e1 + 2 e2` for `a1^e1 a2^e2`, so multiplication of basis elements is XOR
//! of indices. Matrices over `RH` act on columns of `(RH)^n`, and `expand`
//! replaces each entry by its left-regular 4x4 block.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::arith::lattice::rank_mod2;
use crate::arith::{integral_kernel_lattice, kernel_lattice, Lattice, Local2Rational, Matrix};
use crate::error::{Error, Result};
use crate::reps::{GroupModule, HRepresentation};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupRingElementH {
    pub coeffs: [Local2Rational; 4],
}

impl GroupRingElementH {
    pub fn from_i64(c: [i64; 4]) -> Self {
        GroupRingElementH {
            coeffs: c.map(Local2Rational::from),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64([1, 0, 0, 0])
    }

    pub fn a1() -> Self {
        Self::from_i64([0, 1, 0, 0])
    }

    pub fn a2() -> Self {
        Self::from_i64([0, 0, 1, 0])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// 4x4 matrix of left multiplication on the basis `1, a1, a2, a1a2`.
    pub fn regular_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(4, 4);
        for h in 0..4 {
            if self.coeffs[h].is_zero() {
                continue;
            }
            for k in 0..4 {
                m[(k ^ h, k)] += &self.coeffs[h];
            }
        }
        m
    }
}

impl Add for &GroupRingElementH {
    type Output = GroupRingElementH;
    fn add(self, rhs: &GroupRingElementH) -> GroupRingElementH {
        GroupRingElementH {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
        }
    }
}

impl Sub for &GroupRingElementH {
    type Output = GroupRingElementH;
    fn sub(self, rhs: &GroupRingElementH) -> GroupRingElementH {
        GroupRingElementH {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]),
        }
    }
}

impl Neg for &GroupRingElementH {
    type Output = GroupRingElementH;
    fn neg(self) -> GroupRingElementH {
        GroupRingElementH {
            coeffs: std::array::from_fn(|i| -self.coeffs[i].clone()),
        }
    }
}

impl Mul for &GroupRingElementH {
    type Output = GroupRingElementH;
    fn mul(self, rhs: &GroupRingElementH) -> GroupRingElementH {
        let mut out = GroupRingElementH::zero();
        for i in 0..4 {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if !rhs.coeffs[j].is_zero() {
                    out.coeffs[i ^ j] += &(&self.coeffs[i] * &rhs.coeffs[j]);
                }
            }
        }
        out
    }
}

impl fmt::Display for GroupRingElementH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["1", "a1", "a2", "a1a2"];
        let mut first = true;
        for (c, name) in self.coeffs.iter().zip(NAMES) {
            if c.is_zero() {
                continue;
            }
            let neg = c.signum() < 0;
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (abs.is_one(), name) {
                (true, _) => f.write_str(name)?,
                (false, "1") => write!(f, "{}", abs)?,
                (false, _) => write!(f, "{}{}", abs, name)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElementH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Row-major grid of group-ring elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RHMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<GroupRingElementH>,
}

impl RHMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RHMatrix {
            rows,
            cols,
            entries: vec![GroupRingElementH::zero(); rows * cols],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &GroupRingElementH {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: GroupRingElementH) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn mul(&self, other: &RHMatrix) -> Result<RHMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = RHMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = GroupRingElementH::zero();
                for k in 0..self.cols {
                    let (x, y) = (self.get(i, k), other.get(k, j));
                    if !x.is_zero() && !y.is_zero() {
                        acc = &acc + &(x * y);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Positions `(i, j)` of the nonzero entries, as offsets `j - i`.
    pub fn nonzero_offsets(&self) -> Vec<isize> {
        let mut v: Vec<isize> = (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.get(i, j).is_zero())
            .map(|(i, j)| j as isize - i as isize)
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

fn e(a1: i64, a2: i64, one: i64) -> GroupRingElementH {
    GroupRingElementH::from_i64([one, a1, a2, 0])
}

// a1 - 1, a2 - 1, a1 + 1, a2 + 1 and negatives
fn a1m() -> GroupRingElementH {
    e(1, 0, -1)
}
fn a2m() -> GroupRingElementH {
    e(0, 1, -1)
}
fn a1p() -> GroupRingElementH {
    e(1, 0, 1)
}
fn a2p() -> GroupRingElementH {
    e(0, 1, 1)
}

fn seq_f1(n: usize) -> [GroupRingElementH; 4] {
    if n % 2 == 1 {
        [a1m(), a2m(), -&a1p(), -&a2p()]
    } else {
        [a1p(), a2p(), -&a1m(), -&a2m()]
    }
}

fn seq_f2() -> [GroupRingElementH; 4] {
    [a2m(), a1m(), a2p(), a1p()]
}

/// The `n x (n+1)` matrix `F_n`. `F_0` is the `0 x 1` empty matrix.
pub fn f_matrix(n: usize) -> RHMatrix {
    let mut f = RHMatrix::zeros(n, n + 1);
    if n == 0 {
        return f;
    }
    let f1 = seq_f1(n);
    let f2 = seq_f2();
    for i in 0..n {
        f.set(i, i, f1[i % 4].clone());
    }
    let last = match n % 4 {
        1 => a2m(),
        2 => -&a1m(),
        3 => a2p(),
        _ => a1p(),
    };
    f.set(n - 1, n, last);
    for i in 0..n - 1 {
        f.set(i, i + 2, f2[i % 4].clone());
    }
    f
}

/// `F_4` and `F_5` as printed, kept for entrywise comparison.
pub fn displayed_f4() -> RHMatrix {
    grid(
        4,
        5,
        &[
            (0, 0, a1p()),
            (0, 2, a2m()),
            (1, 1, a2p()),
            (1, 3, a1m()),
            (2, 2, -&a1m()),
            (2, 4, a2p()),
            (3, 3, -&a2m()),
            (3, 4, a1p()),
        ],
    )
}

pub fn displayed_f5() -> RHMatrix {
    grid(
        5,
        6,
        &[
            (0, 0, a1m()),
            (0, 2, a2m()),
            (1, 1, a2m()),
            (1, 3, a1m()),
            (2, 2, -&a1p()),
            (2, 4, a2p()),
            (3, 3, -&a2p()),
            (3, 5, a1p()),
            (4, 4, a1m()),
            (4, 5, a2m()),
        ],
    )
}

fn grid(rows: usize, cols: usize, entries: &[(usize, usize, GroupRingElementH)]) -> RHMatrix {
    let mut m = RHMatrix::zeros(rows, cols);
    for (i, j, x) in entries {
        m.set(*i, *j, x.clone());
    }
    m
}

/// Replaces each entry by its 4x4 left-regular block.
pub fn expand(m: &RHMatrix) -> Matrix {
    let mut out = Matrix::zeros(4 * m.rows, 4 * m.cols);
    for i in 0..m.rows {
        for j in 0..m.cols {
            let x = m.get(i, j);
            if x.is_zero() {
                continue;
            }
            let blk = x.regular_matrix();
            for r in 0..4 {
                for c in 0..4 {
                    out[(4 * i + r, 4 * j + c)] = blk[(r, c)].clone();
                }
            }
        }
    }
    out
}

/// Column `j` of `f` multiplied by `r`, as a vector in `(RH)^rows`.
fn column_times(f: &RHMatrix, j: usize, r: &GroupRingElementH) -> Vec<Local2Rational> {
    let mut v = Vec::with_capacity(4 * f.rows);
    for i in 0..f.rows {
        v.extend((f.get(i, j) * r).coeffs);
    }
    v
}

/// The `2n+1` generators of `V_n`: the columns of `F_n`, then the first `n`
/// columns times `a2-1, a1-1, a2+1, a1+1` cyclically.
pub fn vn_basis(n: usize) -> Result<Vec<Vec<Local2Rational>>> {
    if n == 0 {
        return Err(Error::InvalidArgument("vn_basis needs n >= 1".into()));
    }
    let f = f_matrix(n);
    let f3 = seq_f2();
    let one = GroupRingElementH::one();
    let mut out: Vec<_> = (0..=n).map(|j| column_times(&f, j, &one)).collect();
    out.extend((0..n).map(|j| column_times(&f, j, &f3[j % 4])));
    Ok(out)
}

/// `vn_basis(n)` as a lattice; fails if the vectors are dependent or not
/// saturated.
pub fn vn_lattice(n: usize) -> Result<Lattice> {
    let basis = vn_basis(n)?;
    let l = Lattice::from_basis(4 * n, basis)
        .map_err(|e| Error::ConstructionFailure(format!("V_{} basis dependent: {}", n, e)))?;
    if !l.is_saturated() {
        return Err(Error::ConstructionFailure(format!("V_{} basis not saturated", n)));
    }
    Ok(l)
}

/// `(RH)^r` as an H-module.
pub fn free_module(r: usize) -> HRepresentation {
    let a1 = GroupRingElementH::a1().regular_matrix();
    let a2 = GroupRingElementH::a2().regular_matrix();
    let blocks1: Vec<&Matrix> = vec![&a1; r];
    let blocks2: Vec<&Matrix> = vec![&a2; r];
    HRepresentation::new(Matrix::block_diag(&blocks1), Matrix::block_diag(&blocks2))
        .expect("free module")
}

/// `Δ_n`: trivial for `n = 0`, `V_n` inside `(RH)^n` for `n > 0`, the dual
/// of `Δ_{-n}` for `n < 0`.
pub fn delta_h(n: i64) -> Result<HRepresentation> {
    match n {
        0 => Ok(HRepresentation::trivial()),
        n if n < 0 => Ok(delta_h(-n)?.dual()),
        n => {
            let n = n as usize;
            free_module(n).restrict_to_lattice(&vn_lattice(n)?)
        }
    }
}

/// Minimal free cover: `(RH)^r -> M` sending generator `i` to the `i`-th
/// standard basis vector of `M` that is independent of the previous ones
/// modulo `2M + (a1-1)M + (a2-1)M`.
#[derive(Clone, Debug)]
pub struct FreeCover {
    pub rank: usize,
    /// `deg M x 4r`, the image of `h * generator_i` in column `4i + h`.
    pub surjection: Matrix,
    /// Indices of the standard basis vectors used as generators.
    pub generators: Vec<usize>,
}

/// First-fit lifts of a basis of the mod-2 top `M / rad M`, where the radical
/// is spanned by `2M` and the images of `g - 1` for the given generators.
pub(crate) fn top_lifts(generators: &[&Matrix], n: usize) -> Vec<usize> {
    use crate::arith::modp::F2Echelon;
    let mut ech = F2Echelon::new(n);
    for g in generators {
        let d = g.mod2();
        for j in 0..n {
            let mut col: Vec<bool> = (0..n).map(|i| d.get(i, j)).collect();
            col[j] ^= true;
            let _ = ech.insert(&col, 0, 0);
        }
    }
    let mut lifts = Vec::new();
    for k in 0..n {
        let mut v = vec![false; n];
        v[k] = true;
        if ech.insert(&v, 0, 0).is_ok() {
            lifts.push(k);
        }
    }
    lifts
}

pub fn free_cover(m: &HRepresentation) -> Result<FreeCover> {
    let n = m.degree();
    let generators = top_lifts(&m.generators(), n);
    let r = generators.len();
    let elems = m.element_matrices();
    let mut surj = Matrix::zeros(n, 4 * r);
    for (i, &k) in generators.iter().enumerate() {
        for (h, g) in elems.iter().enumerate() {
            for row in 0..n {
                surj[(row, 4 * i + h)] = g[(row, k)].clone();
            }
        }
    }
    if surj.mod2().rank() != n {
        return Err(Error::Singular("free cover is not surjective mod 2".into()));
    }
    Ok(FreeCover {
        rank: r,
        surjection: surj,
        generators,
    })
}

/// `Θ(M)`: the kernel of the minimal free cover.
pub fn theta_h(m: &HRepresentation) -> Result<HRepresentation> {
    let cover = free_cover(m)?;
    let ker = integral_kernel_lattice(&cover.surjection);
    free_module(cover.rank).restrict_to_lattice(&ker)
}

/// Exactness certificate at step `n`: `F_{n-1} F_n = 0` and the image of
/// `F_n` (spanned by the `V_n` basis) equals the kernel of `F_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexCertificate {
    pub n: usize,
    pub product_zero: bool,
    pub kernel_rank: usize,
    pub image_rank: usize,
    /// The `V_n` basis is independent mod 2.
    pub saturated: bool,
    /// Every `V_n` basis vector lies in the kernel.
    pub basis_in_kernel: bool,
}

impl ComplexCertificate {
    pub fn passes(&self) -> bool {
        let r = 2 * self.n + 1;
        self.product_zero && self.kernel_rank == r && self.image_rank == r && self.saturated && self.basis_in_kernel
    }
}

/// The `V_n` vectors lie in the image of `F_n` by construction; if they are
/// independent mod 2 they span a saturated lattice of rank `2n+1`, which
/// contained in the kernel of `F_{n-1}` (saturated, rank `2n+1`) forces
/// image = kernel.
pub fn verify_complex(n: usize) -> Result<ComplexCertificate> {
    if n < 2 {
        return Err(Error::InvalidArgument("verify_complex needs n >= 2".into()));
    }
    let prev = f_matrix(n - 1);
    let cur = f_matrix(n);
    let product_zero = prev.mul(&cur)?.is_zero();
    let ker = kernel_lattice(&expand(&prev));
    let image_rank = expand(&cur).rank();
    let basis = vn_basis(n)?;
    let saturated = rank_mod2(&basis, 4 * n) == basis.len();
    let ep = expand(&prev);
    let basis_in_kernel = basis.iter().all(|v| ep.mul_vec(v).iter().all(|x| x.is_zero()));
    Ok(ComplexCertificate {
        n,
        product_zero,
        kernel_rank: ker.rank(),
        image_rank,
        saturated,
        basis_in_kernel,
    })
}

/// `Δ_1` is the augmentation ideal: `V_1` equals the kernel of `RH -> R`.
pub fn augmentation_check() -> Result<bool> {
    let aug = Matrix::from_i64(&[&[1, 1, 1, 1]]);
    let ker = kernel_lattice(&aug);
    let v1 = vn_lattice(1)?;
    Ok(ker == v1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{are_equivalent, mod2_nontrivial_idempotent, EquivalenceSearch};

    #[test]
    fn group_ring_arithmetic() {
        let x = &a1m() * &a1p();
        assert!(x.is_zero());
        assert_eq!(&a1m() * &a1m(), -&(&a1m() + &a1m()));
        assert_eq!(a1m().to_string(), "-1 + a1");
        assert_eq!(expand(&grid(1, 1, &[(0, 0, a1m())])).rank(), 2);
        assert!(expand(&RHMatrix::zeros(2, 3)).is_zero());
    }

    #[test]
    fn expand_is_multiplicative() {
        let a = f_matrix(3);
        let b = f_matrix(4);
        assert_eq!(expand(&a.mul(&b).unwrap()), &expand(&a) * &expand(&b));
        let c = f_matrix(2);
        assert_eq!(expand(&c.mul(&a).unwrap()), &expand(&c) * &expand(&a));
    }

    #[test]
    fn displayed_matrices_match() {
        assert_eq!(f_matrix(4), displayed_f4());
        assert_eq!(f_matrix(5), displayed_f5());
        let f1 = f_matrix(1);
        assert_eq!((f1.rows, f1.cols), (1, 2));
        assert_eq!(f1.get(0, 0), &a1m());
        assert_eq!(f1.get(0, 1), &a2m());
    }

    #[test]
    fn three_upper_diagonals() {
        for n in 1..=12 {
            let off = f_matrix(n).nonzero_offsets();
            assert!(off.iter().all(|o| (0..=2).contains(o)), "n = {}: {:?}", n, off);
        }
    }

    #[test]
    fn v1_is_augmentation_ideal() {
        let b = vn_basis(1).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b[2], (&a1m() * &a2m()).coeffs.to_vec());
        assert!(augmentation_check().unwrap());
        let v2 = vn_basis(2).unwrap();
        assert_eq!((v2.len(), v2[0].len()), (5, 8));
    }

    #[test]
    fn complexes_are_exact() {
        for n in 2..=10 {
            let c = verify_complex(n).unwrap();
            assert!(c.passes(), "{:?}", c);
        }
    }

    #[test]
    fn delta_h_degrees_and_action() {
        assert_eq!(delta_h(0).unwrap().degree(), 1);
        for n in -5..=5i64 {
            assert_eq!(delta_h(n).unwrap().degree(), 2 * n.unsigned_abs() as usize + 1);
        }
        // a1 (a1-1)(a2-1) = -(a1-1)(a2-1)
        let d1 = delta_h(1).unwrap();
        let col = d1.a1().column(2);
        let q = Local2Rational::from;
        assert_eq!(col, vec![q(0), q(0), q(-1)]);
    }

    #[test]
    fn theta_climbs_the_tower() {
        let s = EquivalenceSearch::default();
        for n in 0..=4i64 {
            let d = delta_h(n).unwrap();
            assert_eq!(free_cover(&d).unwrap().rank, n as usize + 1);
            let t = theta_h(&d).unwrap();
            let next = delta_h(n + 1).unwrap();
            assert!(are_equivalent(&t, &next, &s).unwrap().equivalent, "n = {}", n);
        }
    }

    #[test]
    fn small_deltas_are_indecomposable() {
        for n in -3..=3 {
            let d = delta_h(n).unwrap();
            assert!(mod2_nontrivial_idempotent(&d, 22).unwrap().is_none(), "n = {}", n);
        }
    }
}
