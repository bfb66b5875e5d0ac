use std::time::Instant;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{ModuleClassLabel, Registry};
use crate::arith::modp::BitMatrix;
use crate::arith::{integral_kernel_lattice, Lattice, Local2Rational, Matrix};
use crate::error::{Error, Result};
use crate::reps::{
    intertwiner_lattice, is_intertwiner, rational_multiplicities, EquivalenceSearch, GroupModule, Representation,
};

/// `T ≅ C ⊕ T'` with `T' = ker π`.
#[derive(Clone, Debug)]
pub struct Split<M> {
    /// `T -> C`.
    pub pi: Matrix,
    /// `C -> T`, normalized so that `π σ = 1`.
    pub sigma: Matrix,
    pub complement: M,
    pub complement_basis: Lattice,
    /// `T -> C ⊕ T'`, rows `[π; κ]` with `κ` the projection onto `ker π`.
    pub witness: Matrix,
}

fn combine_bits(basis: &[BitMatrix], bits: &[bool], rows: usize, cols: usize) -> BitMatrix {
    let mut m = BitMatrix::zeros(rows, cols);
    for (b, &x) in basis.iter().zip(bits) {
        if x {
            m.xor_assign(b);
        }
    }
    m
}

fn combine_exact(basis: &[Matrix], bits: &[bool], rows: usize, cols: usize) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for (b, &x) in basis.iter().zip(bits) {
        if x {
            m = &m + b;
        }
    }
    m
}

/// Looks for `π: T -> C`, `σ: C -> T` with `π σ` invertible.
///
/// If `End(C)` is local (`C` indecomposable), its non-units form an ideal,
/// so some pair of basis elements already works whenever any pair does and
/// a failed pass over basis pairs proves `C` is not a summand. Otherwise
/// seeded random combinations are tried, and failure is indeterminate.
pub fn find_split<M: GroupModule>(
    t: &M,
    c: &M,
    c_is_local: bool,
    search: &EquivalenceSearch,
) -> Result<Option<Split<M>>> {
    let (dt, dc) = (t.degree(), c.degree());
    if dc > dt || dc == 0 {
        return Ok(None);
    }
    let h_tc = intertwiner_lattice(t, c);
    if h_tc.rank() == 0 {
        return Ok(None);
    }
    let h_ct = intertwiner_lattice(c, t);
    if h_ct.rank() == 0 {
        return Ok(None);
    }
    let pis = h_tc.basis_mod2();
    let sigmas = h_ct.basis_mod2();
    let mut found: Option<(Vec<bool>, Vec<bool>)> = None;
    'pairs: for (i, p) in pis.iter().enumerate() {
        for (j, s) in sigmas.iter().enumerate() {
            if p.mul(s).is_invertible() {
                let mut a = vec![false; pis.len()];
                let mut b = vec![false; sigmas.len()];
                a[i] = true;
                b[j] = true;
                found = Some((a, b));
                break 'pairs;
            }
        }
    }
    if found.is_none() && !c_is_local {
        let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
        for _ in 0..search.sample_cap {
            let a: Vec<bool> = (0..pis.len()).map(|_| rng.gen()).collect();
            let b: Vec<bool> = (0..sigmas.len()).map(|_| rng.gen()).collect();
            let p = combine_bits(&pis, &a, dc, dt);
            let s = combine_bits(&sigmas, &b, dt, dc);
            if p.mul(&s).is_invertible() {
                found = Some((a, b));
                break;
            }
        }
        if found.is_none() {
            return Err(Error::Indeterminate(format!(
                "no split found after {} samples",
                search.sample_cap
            )));
        }
    }
    let Some((a, b)) = found else {
        return Ok(None);
    };
    let pi = combine_exact(&h_tc.elements(), &a, dc, dt);
    let sigma0 = combine_exact(&h_ct.elements(), &b, dt, dc);
    let phi_inv = (&pi * &sigma0)
        .inverse()
        .ok_or_else(|| Error::Singular("composite of split maps not invertible".into()))?;
    let sigma = &sigma0 * &phi_inv;
    let ker = integral_kernel_lattice(&pi);
    let complement = t.restrict_to_lattice(&ker)?;
    let e = &sigma * &pi;
    let mut kappa_cols = Vec::with_capacity(dt);
    for j in 0..dt {
        let mut w: Vec<Local2Rational> = e.column(j).into_iter().map(|x| -x).collect();
        w[j] += &Local2Rational::one();
        let coords = ker
            .coordinates(&w)?
            .ok_or_else(|| Error::NonIntegral("projection leaves the complement lattice".into()))?;
        kappa_cols.push(coords);
    }
    let kappa = Matrix::from_columns(ker.rank(), &kappa_cols);
    let witness = Matrix::vstack(&[&pi, &kappa]);
    Ok(Some(Split {
        pi,
        sigma,
        complement,
        complement_basis: ker,
        witness,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub label: ModuleClassLabel,
    pub mult: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DecompositionStatus {
    Verified,
    Unknown,
    Indeterminate,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub target: String,
    pub summands: Vec<Summand>,
    pub status: DecompositionStatus,
    /// 2-adic valuation of the witness determinant; 0 when the witness is
    /// invertible over the base ring.
    pub witness_det_val2: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    /// Candidates whose split search was indeterminate.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Summands in split order, remainder last.
    #[serde(skip)]
    pub parts: Vec<ModuleClassLabel>,
    /// `T -> ⊕ parts` (the remainder lattice included).
    #[serde(skip)]
    pub witness: Option<Matrix>,
    #[serde(skip)]
    pub remainder: Option<Representation>,
}

impl DecompositionReport {
    pub fn multiplicity(&self, label: &ModuleClassLabel) -> u32 {
        self.summands.iter().find(|s| &s.label == label).map_or(0, |s| s.mult)
    }

    pub fn is_resolved(&self) -> bool {
        self.status == DecompositionStatus::Verified
    }

    /// `2 Delta(0) + Tau` style rendering.
    pub fn summary(&self) -> String {
        if self.summands.is_empty() {
            return "0".into();
        }
        self.summands
            .iter()
            .map(|s| if s.mult == 1 { s.label.to_string() } else { format!("{} {}", s.mult, s.label) })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn signature(r: &Representation) -> String {
    let c = r.character();
    format!("deg={},chi(a1)={},chi(b)={}", r.degree(), c.at_a1(), c.at_b())
}

/// Splits off library modules greedily, largest degree first (ties by
/// registry order), and composes the split witnesses into one invertible
/// intertwiner from `t` onto the direct sum of the parts.
pub fn decompose(
    target: &str,
    t: &Representation,
    library: &[ModuleClassLabel],
    registry: &Registry,
    search: &EquivalenceSearch,
    timings: bool,
) -> Result<DecompositionReport> {
    let start = Instant::now();
    let mut cands = Vec::new();
    for label in library {
        let rep = registry.get(label)?;
        let mults = rational_multiplicities(&rep.character())
            .ok_or_else(|| Error::InvalidRepresentation(format!("{} has no rational character", label)))?;
        cands.push((label.clone(), rep, mults));
    }
    cands.sort_by(|a, b| {
        b.1.degree()
            .cmp(&a.1.degree())
            .then(a.0.registry_rank().cmp(&b.0.registry_rank()))
    });

    let mut cur = t.clone();
    let mut witness = Matrix::identity(t.degree());
    let mut placed_degree = 0;
    let mut parts: Vec<(ModuleClassLabel, Representation)> = Vec::new();
    let mut notes = Vec::new();
    'outer: while cur.degree() > 0 {
        let cm = rational_multiplicities(&cur.character())
            .ok_or_else(|| Error::InvalidRepresentation("target character is not rational".into()))?;
        for (label, rep, mults) in &cands {
            if rep.degree() > cur.degree() || !mults.fits_in(&cm) {
                continue;
            }
            let local = !matches!(label, ModuleClassLabel::GammaReg | ModuleClassLabel::Unknown(_));
            match find_split(&cur, rep.as_ref(), local, search) {
                Ok(Some(sp)) => {
                    let step = Matrix::block_diag(&[&Matrix::identity(placed_degree), &sp.witness]);
                    witness = &step * &witness;
                    placed_degree += rep.degree();
                    parts.push((label.clone(), (**rep).clone()));
                    cur = sp.complement;
                    continue 'outer;
                }
                Ok(None) => {}
                Err(Error::Indeterminate(msg)) => notes.push(format!("{}: {}", label, msg)),
                Err(e) => return Err(e),
            }
        }
        break;
    }

    let mut labels: Vec<ModuleClassLabel> = parts.iter().map(|p| p.0.clone()).collect();
    let mut sum = Representation::zero();
    for (_, r) in &parts {
        sum = sum.direct_sum(r);
    }
    let remainder = if cur.degree() > 0 {
        labels.push(ModuleClassLabel::Unknown(signature(&cur)));
        sum = sum.direct_sum(&cur);
        Some(cur)
    } else {
        None
    };
    if !(is_intertwiner(&witness, t, &sum) && witness.is_unimodular()) {
        return Err(Error::ConstructionFailure(format!("decomposition witness for {} failed verification", target)));
    }
    let mut summands: Vec<Summand> = Vec::new();
    for l in &labels {
        match summands.iter_mut().find(|s| &s.label == l) {
            Some(s) => s.mult += 1,
            None => summands.push(Summand { label: l.clone(), mult: 1 }),
        }
    }
    summands.sort_by(|a, b| a.label.registry_rank().cmp(&b.label.registry_rank()).then(a.label.cmp(&b.label)));
    let status = match (&remainder, notes.is_empty()) {
        (None, _) => DecompositionStatus::Verified,
        (Some(_), false) => DecompositionStatus::Indeterminate,
        (Some(_), true) => DecompositionStatus::Unknown,
    };
    Ok(DecompositionReport {
        target: target.to_string(),
        summands,
        status,
        witness_det_val2: Some(0),
        elapsed_ms: timings.then(|| start.elapsed().as_millis() as u64),
        notes,
        parts: labels,
        witness: Some(witness),
        remainder,
    })
}

/// `(s, t)` with `T ≅ P0^s ⊕ P1^t`, from `deg T = 4s + 8t` and
/// `χ_T(b) = s - t`.
pub fn projective_multiplicities(t: &Representation) -> Result<(u32, u32)> {
    let deg = t.degree() as i64;
    let chi = t.character();
    let cb = chi.at_b();
    if !cb.is_rational() || !cb.re.is_integer() {
        return Err(Error::NonIntegral(format!("χ(b) = {}", cb)));
    }
    let chi_b = cb.re.to_integer().to_i64().expect("small");
    let num = deg - 4 * chi_b;
    if num % 12 != 0 {
        return Err(Error::NonIntegral(format!("t = ({} - 4·{})/12", deg, chi_b)));
    }
    let tt = num / 12;
    let s = chi_b + tt;
    if s < 0 || tt < 0 {
        return Err(Error::NonIntegral(format!("negative solution s = {}, t = {}", s, tt)));
    }
    Ok((s as u32, tt as u32))
}
