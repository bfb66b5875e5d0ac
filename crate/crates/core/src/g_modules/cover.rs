use crate::arith::modp::{BitMatrix, F2Echelon};
use crate::arith::{integral_kernel_lattice, Local2Rational, Matrix};
use crate::error::{Error, Result};
use crate::reps::{projective_parts, GroupModule, Representation};
use crate::syzygy::top_lifts;

/// Minimal projective cover `P0^s ⊕ P1^t -> M`.
#[derive(Clone, Debug)]
pub struct GCover {
    pub s: usize,
    pub t: usize,
    pub cover: Representation,
    /// `deg M x (4s + 8t)`.
    pub surjection: Matrix,
}

impl GCover {
    /// The next syzygy: kernel of the surjection, as a representation.
    pub fn kernel(&self) -> Result<Representation> {
        self.cover.restrict_to_lattice(&integral_kernel_lattice(&self.surjection))
    }
}

/// Cover shape predicted for `Δ_n`, `n >= 0`: `P0 ⊕ Γ^k`, `P1 ⊕ Γ^k`,
/// `Γ^{k+1}` for `n = 3k, 3k+1, 3k+2`.
pub fn expected_cover_shape(n: u64) -> (usize, usize) {
    let k = (n / 3) as usize;
    match n % 3 {
        0 => (k + 1, k),
        1 => (k, k + 1),
        _ => (k + 1, k + 1),
    }
}

/// Coordinates in `M / rad M` with respect to chosen lifts.
struct Top {
    ech: F2Echelon,
    r: usize,
}

impl Top {
    fn new(m: &Representation, lifts: &[usize]) -> Self {
        let n = m.degree();
        let r = lifts.len();
        let mut ech = F2Echelon::new(n);
        for k in lifts {
            let mut v = vec![false; n];
            v[*k] = true;
            ech.insert(&v, lifts.iter().position(|x| x == k).unwrap(), r + 1)
                .expect("lifts independent");
        }
        for g in [m.a1(), m.a2()] {
            let d = g.mod2();
            for j in 0..n {
                let mut col: Vec<bool> = (0..n).map(|i| d.get(i, j)).collect();
                col[j] ^= true;
                let _ = ech.insert(&col, r, r + 1);
            }
        }
        Top { ech, r }
    }

    fn coords(&self, v: &[bool]) -> Vec<bool> {
        let mut e = self.ech.clone();
        let mut out = vec![false; self.r];
        match e.insert(v, self.r + 1, self.r + 2) {
            Ok(()) => unreachable!("lifts and radical span the module mod 2"),
            Err(deps) => {
                for t in deps {
                    if t < self.r {
                        out[t] = true;
                    }
                }
            }
        }
        out
    }
}

fn bit_column(m: &BitMatrix, j: usize) -> Vec<bool> {
    (0..m.rows()).map(|i| m.get(i, j)).collect()
}

/// Computes the minimal projective cover from the mod-2 top, a module for
/// the group of order 3: its `b`-fixed part gives the `P0` generators, the
/// complementary part (a vector space over the field of four elements) the
/// `P1` generators.
pub fn projective_cover_g(m: &Representation) -> Result<GCover> {
    let n = m.degree();
    let lifts = top_lifts(&[m.a1(), m.a2()], n);
    let r = lifts.len();
    let top = Top::new(m, &lifts);
    let bmod = m.b().mod2();
    let mut bt = BitMatrix::zeros(r, r);
    for (j, &k) in lifts.iter().enumerate() {
        for (i, x) in top.coords(&bit_column(&bmod, k)).into_iter().enumerate() {
            bt.set(i, j, x);
        }
    }
    let mut bt_minus = bt.clone();
    bt_minus.xor_assign(&BitMatrix::identity(r));
    let fixed = bt_minus.kernel();
    let s = fixed.len();
    if !(r - s).is_multiple_of(2) {
        return Err(Error::TopDecompositionFailure(format!(
            "top of dimension {} has b-fixed part of dimension {}",
            r, s
        )));
    }
    let t = (r - s) / 2;
    let mut proj = bt.mul(&bt);
    proj.xor_assign(&bt);
    let mut span = F2Echelon::new(r);
    let mut p1_gens = Vec::new();
    for j in 0..r {
        if p1_gens.len() == t {
            break;
        }
        let u = bit_column(&proj, j);
        if span.insert(&u, 0, 0).is_err() {
            continue;
        }
        let bu: Vec<bool> = (0..r).map(|i| (0..r).fold(false, |acc, k| acc ^ (bt.get(i, k) & u[k]))).collect();
        span.insert(&bu, 0, 0)
            .map_err(|_| Error::TopDecompositionFailure("b acts with a fixed vector on the non-fixed part".into()))?;
        p1_gens.push(u);
    }
    if p1_gens.len() != t {
        return Err(Error::TopDecompositionFailure("could not split the non-fixed part".into()));
    }

    let lift = |x: &[bool]| -> Vec<Local2Rational> {
        let mut v = vec![Local2Rational::zero(); n];
        for (i, &bit) in x.iter().enumerate() {
            if bit {
                v[lifts[i]] = Local2Rational::one();
            }
        }
        v
    };
    let pp = projective_parts();
    let elems = m.element_matrices();
    let apply = |basis: &[Vec<Local2Rational>], gen: &[Local2Rational], out: &mut Vec<Vec<Local2Rational>>| {
        let images: Vec<Vec<Local2Rational>> = elems.iter().map(|g| g.mul_vec(gen)).collect();
        for x in basis {
            let mut col = vec![Local2Rational::zero(); n];
            for (g, c) in x.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (acc, y) in col.iter_mut().zip(&images[g]) {
                    *acc += &(c * y);
                }
            }
            out.push(col);
        }
    };
    let mut columns = Vec::with_capacity(4 * s + 8 * t);
    for f in &fixed {
        apply(pp.p0_basis.basis(), &lift(f), &mut columns);
    }
    for u in &p1_gens {
        apply(pp.p1_basis.basis(), &lift(u), &mut columns);
    }
    let surjection = Matrix::from_columns(n, &columns);
    if surjection.mod2().rank() != n {
        return Err(Error::Singular("projective cover is not surjective mod 2".into()));
    }
    let mut cover = Representation::zero();
    for _ in 0..s {
        cover = cover.direct_sum(&pp.p0);
    }
    for _ in 0..t {
        cover = cover.direct_sum(&pp.p1);
    }
    Ok(GCover {
        s,
        t,
        cover,
        surjection,
    })
}
