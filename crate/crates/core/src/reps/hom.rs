//! Intertwiner lattices `Hom_RG(A, B)` and the equivalence decision.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::GroupModule;
use crate::arith::modp::{self, BitMatrix, ModPEchelon};
use crate::arith::lattice::saturate_integral;
use crate::arith::{Lattice, Local2Rational, Matrix};
use crate::error::{Error, Result};

/// All `X` (of shape `deg B x deg A`) with `X A(g) = B(g) X`, as a saturated
/// lattice in row-major `Mat(deg B, deg A)`.
#[derive(Clone, Debug)]
pub struct HomLattice {
    pub target_degree: usize,
    pub source_degree: usize,
    pub lattice: Lattice,
}

impl HomLattice {
    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    fn to_matrix(&self, v: &[Local2Rational]) -> Matrix {
        Matrix::new(self.target_degree, self.source_degree, v.to_vec()).expect("shape")
    }

    pub fn element(&self, i: usize) -> Matrix {
        self.to_matrix(&self.lattice.basis()[i])
    }

    pub fn elements(&self) -> Vec<Matrix> {
        (0..self.rank()).map(|i| self.element(i)).collect()
    }

    pub fn basis_mod2(&self) -> Vec<BitMatrix> {
        self.elements().iter().map(|m| m.mod2()).collect()
    }

    /// Sum of the basis elements selected by `coeffs`.
    pub fn combine_bits(&self, coeffs: &[bool]) -> Matrix {
        let mut out = Matrix::zeros(self.target_degree, self.source_degree);
        for (i, &c) in coeffs.iter().enumerate() {
            if c {
                out = &out + &self.element(i);
            }
        }
        out
    }
}

/// `X A(g) = B(g) X` for every generator.
pub fn is_intertwiner<M: GroupModule>(x: &Matrix, a: &M, b: &M) -> bool {
    x.rows() == b.degree()
        && x.cols() == a.degree()
        && a
            .generators()
            .iter()
            .zip(b.generators())
            .all(|(ga, gb)| x * *ga == gb * x)
}

/// Rational dimension of the intertwiner space, from characters:
/// `(1/|G|) Σ_g tr A(g^-1) tr B(g)`.
pub fn hom_dimension<M: GroupModule>(a: &M, b: &M) -> usize {
    let ea = a.element_matrices();
    let eb = b.element_matrices();
    let inv = a.inverse_indices();
    let mut s = BigRational::zero();
    for (g, gi) in inv.iter().enumerate() {
        s += ea[*gi].trace().to_big_rational() * eb[g].trace().to_big_rational();
    }
    let q = s / BigRational::from_integer(BigInt::from(a.group_order()));
    assert!(q.is_integer(), "character inner product is an integer");
    usize::try_from(q.to_integer()).expect("nonnegative")
}

/// Saturated basis of the intertwiners from `a` to `b`.
///
/// The averaging operator `X -> Σ_g B(g) X A(g^-1)` maps matrix units onto a
/// spanning set of the rational intertwiner space, whose dimension is known
/// from characters. Independent images are picked cheaply modulo a large
/// prime (independence mod p implies independence over Q), computed exactly,
/// and saturated at 2.
pub fn intertwiner_lattice<M: GroupModule>(a: &M, b: &M) -> HomLattice {
    let (n, m) = (a.degree(), b.degree());
    let d = hom_dimension(a, b);
    let ambient = m * n;
    if d == 0 {
        return HomLattice {
            target_degree: m,
            source_degree: n,
            lattice: Lattice::from_echelon(ambient, vec![], vec![]),
        };
    }
    let ea = a.element_matrices();
    let eb = b.element_matrices();
    let inv = a.inverse_indices();
    let p = modp::P;
    let to_p = |x: &Local2Rational| x.mod_p(p).expect("denominator invertible mod p");
    // per group element: (B(g) mod p, A(g^-1) mod p)
    let pairs_p: Vec<(Vec<u64>, Vec<u64>)> = (0..ea.len())
        .map(|g| {
            (
                eb[g].entries().iter().map(to_p).collect(),
                ea[inv[g]].entries().iter().map(to_p).collect(),
            )
        })
        .collect();

    let mut ech = ModPEchelon::new();
    let mut chosen = Vec::with_capacity(d);
    'outer: for i in 0..m {
        for j in 0..n {
            let mut v = vec![0u64; ambient];
            for (bg, ag) in &pairs_p {
                for r in 0..m {
                    let x = bg[r * m + i];
                    if x == 0 {
                        continue;
                    }
                    for c in 0..n {
                        let y = ag[j * n + c];
                        if y != 0 {
                            let k = r * n + c;
                            v[k] = modp::add(v[k], modp::mul(x, y, p), p);
                        }
                    }
                }
            }
            if ech.insert(v) {
                chosen.push((i, j));
                if chosen.len() == d {
                    break 'outer;
                }
            }
        }
    }
    assert_eq!(chosen.len(), d, "averaged matrix units span the intertwiners");

    let exact: Vec<Vec<Local2Rational>> = chosen
        .iter()
        .map(|&(i, j)| {
            let mut v = vec![Local2Rational::zero(); ambient];
            for (g, gi) in inv.iter().enumerate() {
                let bg = &eb[g];
                let ag = &ea[*gi];
                for r in 0..m {
                    let x = &bg[(r, i)];
                    if x.is_zero() {
                        continue;
                    }
                    for c in 0..n {
                        let y = &ag[(j, c)];
                        if !y.is_zero() {
                            v[r * n + c] += &(x * y);
                        }
                    }
                }
            }
            v
        })
        .collect();
    // odd denominators only: clearing them keeps the span's saturation
    let integral: Vec<Vec<BigInt>> = exact
        .into_iter()
        .map(|v| {
            let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(&x.denom()));
            v.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    HomLattice {
        target_degree: m,
        source_degree: n,
        lattice: saturate_integral(ambient, integral),
    }
}

/// Caps for the odd-determinant search.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct EquivalenceSearch {
    /// Enumerate all `2^rank` combinations when `rank <= exhaustive_cap`.
    pub exhaustive_cap: u32,
    /// Seeded random combinations tried above the exhaustive cap.
    pub sample_cap: u64,
    pub seed: u64,
    /// After sampling fails, enumerate exhaustively if `rank <= fallback_cap`.
    pub fallback_cap: u32,
}

impl Default for EquivalenceSearch {
    fn default() -> Self {
        EquivalenceSearch {
            exhaustive_cap: 22,
            sample_cap: 1 << 20,
            seed: 0,
            fallback_cap: 26,
        }
    }
}

impl EquivalenceSearch {
    pub fn with_seed(self, seed: u64) -> Self {
        EquivalenceSearch { seed, ..self }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SearchMode {
    DegreeMismatch,
    Exhaustive { tried: u64 },
    Sampled { draws: u64 },
    Fallback { tried: u64 },
}

#[derive(Clone, Debug)]
pub struct Equivalence {
    pub equivalent: bool,
    /// Intertwiner `A -> B` with odd determinant, when one was found.
    pub witness: Option<Matrix>,
    pub hom_rank: usize,
    pub mode: SearchMode,
}

fn enumerate_invertible(basis: &[BitMatrix], n: usize, start: u64, count: u64) -> (Option<Vec<bool>>, u64) {
    let r = basis.len();
    let mut cur = BitMatrix::zeros(n, n);
    let mut code: u64 = 0;
    let mut tried = 0;
    for k in 1..count.min(1u64 << r) {
        let bit = k.trailing_zeros() as usize;
        cur.xor_assign(&basis[bit]);
        code ^= 1 << bit;
        tried += 1;
        if k >= start && cur.is_invertible() {
            return (Some((0..r).map(|i| (code >> i) & 1 == 1).collect()), tried);
        }
    }
    (None, tried)
}

/// Finds an odd-determinant element in `basis` (mod 2), following the caps.
/// Returns the selecting coefficient vector, or `None` if the search proved
/// none exists.
pub(crate) fn search_invertible(
    basis: &[BitMatrix],
    n: usize,
    search: &EquivalenceSearch,
) -> Result<(Option<Vec<bool>>, SearchMode)> {
    let r = basis.len();
    if r == 0 {
        return Ok((if n == 0 { Some(vec![]) } else { None }, SearchMode::Exhaustive { tried: 0 }));
    }
    if r as u32 <= search.exhaustive_cap {
        let (found, tried) = enumerate_invertible(basis, n, 0, u64::MAX);
        return Ok((found, SearchMode::Exhaustive { tried }));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
    for draw in 1..=search.sample_cap {
        let coeffs: Vec<bool> = (0..r).map(|_| rng.gen::<bool>()).collect();
        let mut cur = BitMatrix::zeros(n, n);
        for (b, &c) in basis.iter().zip(&coeffs) {
            if c {
                cur.xor_assign(b);
            }
        }
        if cur.is_invertible() {
            return Ok((Some(coeffs), SearchMode::Sampled { draws: draw }));
        }
    }
    if r as u32 <= search.fallback_cap {
        let (found, tried) = enumerate_invertible(basis, n, 0, u64::MAX);
        return Ok((found, SearchMode::Fallback { tried }));
    }
    Err(Error::Indeterminate(format!(
        "intertwiner lattice of rank {} exceeds caps after {} samples",
        r, search.sample_cap
    )))
}

/// Decides whether `a` and `b` are equivalent over the 2-local integers.
///
/// They are iff the intertwiner lattice holds an element of odd determinant.
/// Determinant parity depends only on the reduction mod 2, so searching the
/// mod-2 image of the lattice is exact; an exhausted search is a proof of
/// inequivalence.
pub fn are_equivalent<M: GroupModule>(a: &M, b: &M, search: &EquivalenceSearch) -> Result<Equivalence> {
    if a.degree() != b.degree() {
        return Ok(Equivalence {
            equivalent: false,
            witness: None,
            hom_rank: 0,
            mode: SearchMode::DegreeMismatch,
        });
    }
    let hom = intertwiner_lattice(a, b);
    let basis = hom.basis_mod2();
    let (found, mode) = search_invertible(&basis, a.degree(), search)?;
    let witness = found.map(|c| hom.combine_bits(&c));
    Ok(Equivalence {
        equivalent: witness.is_some(),
        witness,
        hom_rank: hom.rank(),
        mode,
    })
}

/// Searches the endomorphism algebra mod 2 for an idempotent other than 0
/// and 1. Such an idempotent exists iff the module decomposes over the
/// 2-adic integers (idempotents lift from the reduction).
pub fn mod2_nontrivial_idempotent<M: GroupModule>(m: &M, cap: u32) -> Result<Option<BitMatrix>> {
    let end = intertwiner_lattice(m, m);
    let basis = end.basis_mod2();
    let r = basis.len();
    if r as u32 > cap {
        return Err(Error::Indeterminate(format!(
            "endomorphism lattice of rank {} above idempotent-search cap {}",
            r, cap
        )));
    }
    let n = m.degree();
    let id = BitMatrix::identity(n);
    let mut cur = BitMatrix::zeros(n, n);
    for k in 1u64..(1u64 << r) {
        cur.xor_assign(&basis[k.trailing_zeros() as usize]);
        if cur != id && cur.mul(&cur) == cur {
            return Ok(Some(cur));
        }
    }
    Ok(None)
}
