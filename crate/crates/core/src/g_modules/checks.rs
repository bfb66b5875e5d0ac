use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::cover::{expected_cover_shape, projective_cover_g};
use super::decompose::{decompose, find_split, DecompositionReport};
use super::{ModuleClassLabel, Registry};
use crate::arith::{Local2Rational, Matrix};
use crate::error::Result;
use crate::reps::{
    are_equivalent, induce, is_intertwiner, tau, EquivalenceSearch, GroupModule, HRepresentation, Representation,
};
use crate::syzygy::delta_h;

#[derive(Clone, Debug, Serialize)]
pub struct LiftingCertificate {
    pub n: i64,
    /// `Δ_n` over G restricts to `Δ_n` over H.
    pub restriction_equivalent: bool,
    /// The induced module restricts to three copies, each block checked.
    pub induced_restriction_equivalent: bool,
    /// `Δ_n` over G splits off the induced module.
    pub is_summand: bool,
    pub complement_degree: usize,
}

impl LiftingCertificate {
    pub fn passes(&self) -> bool {
        self.restriction_equivalent && self.induced_restriction_equivalent && self.is_summand
    }
}

fn h_block(m: &HRepresentation, j: usize, d: usize) -> HRepresentation {
    let idx: Vec<usize> = (j * d..(j + 1) * d).collect();
    HRepresentation::new_unchecked(m.a1().submatrix(&idx, &idx), m.a2().submatrix(&idx, &idx))
}

pub fn check_lifting(n: i64, registry: &Registry, search: &EquivalenceSearch) -> Result<LiftingCertificate> {
    let g = registry.delta(n)?;
    let w = delta_h(n)?;
    let restriction_equivalent = are_equivalent(&g.restrict_to_h(), &w, search)?.equivalent;

    let ind = induce(&w);
    let res = ind.restrict_to_h();
    let d = w.degree();
    let mut blocks = vec![Matrix::identity(d)];
    let mut ok = true;
    for j in 1..3 {
        match are_equivalent(&w, &h_block(&res, j, d), search)?.witness {
            Some(x) => blocks.push(x),
            None => ok = false,
        }
    }
    let induced_restriction_equivalent = ok && {
        let x = Matrix::block_diag(&blocks.iter().collect::<Vec<_>>());
        let three = w.direct_sum(&w).direct_sum(&w);
        is_intertwiner(&x, &three, &res) && x.is_unimodular()
    };

    let split = find_split(&ind, g.as_ref(), true, search)?;
    let mut is_summand = split.is_some();
    let complement_degree = split.as_ref().map_or(0, |s| s.complement.degree());
    if n == 0 {
        if let Some(sp) = &split {
            is_summand &= are_equivalent(&sp.complement, &tau(), search)?.equivalent;
        }
    }
    Ok(LiftingCertificate {
        n,
        restriction_equivalent,
        induced_restriction_equivalent,
        is_summand,
        complement_degree,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverShape {
    pub n: i64,
    pub s: usize,
    pub t: usize,
    pub expected_s: usize,
    pub expected_t: usize,
    pub kernel_degree: usize,
}

impl CoverShape {
    pub fn passes(&self) -> bool {
        self.s == self.expected_s && self.t == self.expected_t && self.kernel_degree == 2 * self.n as usize + 3
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorIdentity {
    pub m: i64,
    pub stated: String,
    pub found: String,
    /// Decomposition verified and a block-permuted witness intertwines the
    /// target with the stated sum exactly.
    pub verified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaFiveCertificate {
    pub k: u32,
    pub covers: Vec<CoverShape>,
    pub identities: Vec<TensorIdentity>,
}

impl LemmaFiveCertificate {
    pub fn passes(&self) -> bool {
        self.covers.iter().all(|c| c.passes()) && self.identities.iter().all(|i| i.verified)
    }
}

fn labels_text(labels: &[ModuleClassLabel]) -> String {
    labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" + ")
}

/// Reorders the witness of `report` so that it maps `t` onto the direct sum
/// of `stated` in the given order, and checks it exactly.
pub(crate) fn witness_matches(
    report: &DecompositionReport,
    t: &Representation,
    stated: &[ModuleClassLabel],
    registry: &Registry,
) -> Result<bool> {
    let Some(w) = &report.witness else {
        return Ok(false);
    };
    if report.remainder.is_some() || report.parts.len() != stated.len() {
        return Ok(false);
    }
    let reps: Vec<_> = report.parts.iter().map(|l| registry.get(l)).collect::<Result<_>>()?;
    let mut offsets = Vec::with_capacity(reps.len());
    let mut acc = 0;
    for r in &reps {
        offsets.push(acc);
        acc += r.degree();
    }
    let mut used = vec![false; reps.len()];
    let mut perm = Matrix::zeros(acc, acc);
    let mut sum = Representation::zero();
    let mut row = 0;
    for label in stated {
        let Some(i) = (0..reps.len()).find(|&i| !used[i] && &report.parts[i] == label) else {
            return Ok(false);
        };
        used[i] = true;
        for k in 0..reps[i].degree() {
            perm[(row + k, offsets[i] + k)] = Local2Rational::one();
        }
        row += reps[i].degree();
        sum = sum.direct_sum(registry.get(label)?.as_ref());
    }
    let x = &perm * w;
    Ok(is_intertwiner(&x, t, &sum) && x.is_unimodular())
}

/// `Δ_{m+1}`, then `P0` or `P1` according to `m mod 3`, then `Γ^k` as
/// `P0, P1` pairs.
fn lemma5_summands(m: i64) -> Vec<ModuleClassLabel> {
    let k = m / 3;
    let mut v = vec![ModuleClassLabel::Delta(m + 1)];
    match m % 3 {
        1 => v.push(ModuleClassLabel::P0),
        2 => v.push(ModuleClassLabel::P1),
        _ => {}
    }
    for _ in 0..k {
        v.push(ModuleClassLabel::P0);
        v.push(ModuleClassLabel::P1);
    }
    v
}

pub fn verify_lemma5(
    k: u32,
    registry: &Registry,
    search: &EquivalenceSearch,
) -> Result<LemmaFiveCertificate> {
    let d1 = registry.delta(1)?;
    let mut covers = Vec::new();
    let mut identities = Vec::new();
    for m in 3 * k as i64..3 * k as i64 + 3 {
        let dm = registry.delta(m)?;
        let cover = projective_cover_g(&dm)?;
        let (es, et) = expected_cover_shape(m as u64);
        covers.push(CoverShape {
            n: m,
            s: cover.s,
            t: cover.t,
            expected_s: es,
            expected_t: et,
            kernel_degree: cover.kernel()?.degree(),
        });
        let t = dm.tensor(&d1);
        let stated = lemma5_summands(m);
        let mut library: Vec<ModuleClassLabel> = stated.clone();
        library.sort();
        library.dedup();
        let report = decompose(&format!("Delta({}) x Delta(1)", m), &t, &library, registry, search, false)?;
        let verified = report.is_resolved() && witness_matches(&report, &t, &stated, registry)?;
        identities.push(TensorIdentity {
            m,
            stated: labels_text(&stated),
            found: report.summary(),
            verified,
        });
    }
    Ok(LemmaFiveCertificate { k, covers, identities })
}

/// Decompositions of pairwise tensor products, keyed by unordered label
/// pairs.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ProductTable {
    pub table_n: u32,
    pub entries: BTreeMap<String, DecompositionReport>,
    #[serde(skip)]
    pub pairs: BTreeMap<(ModuleClassLabel, ModuleClassLabel), String>,
}

fn pair_key(a: &ModuleClassLabel, b: &ModuleClassLabel) -> (ModuleClassLabel, ModuleClassLabel) {
    if a.registry_rank() <= b.registry_rank() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

impl ProductTable {
    pub fn get(&self, a: &ModuleClassLabel, b: &ModuleClassLabel) -> Option<&DecompositionReport> {
        self.pairs.get(&pair_key(a, b)).and_then(|k| self.entries.get(k))
    }

    /// Adds (or replaces) the entry for the unordered pair `a, b`.
    pub fn insert(&mut self, a: &ModuleClassLabel, b: &ModuleClassLabel, report: DecompositionReport) {
        let key = pair_key(a, b);
        let name = format!("{} x {}", key.0, key.1);
        self.pairs.insert(key, name.clone());
        self.entries.insert(name, report);
    }
}

/// Base classes of the table at level `n`: `Δ0, Tau, L, Δ±1..±n, P0, P1`.
pub fn table_classes(n: u32) -> Vec<ModuleClassLabel> {
    let mut v = vec![ModuleClassLabel::Delta(0), ModuleClassLabel::Tau, ModuleClassLabel::L];
    for k in 1..=n as i64 {
        v.push(ModuleClassLabel::Delta(k));
        v.push(ModuleClassLabel::Delta(-k));
    }
    v.push(ModuleClassLabel::P0);
    v.push(ModuleClassLabel::P1);
    v
}

/// All products among the base classes, decomposed against `Δ_k` for
/// `|k| <= 2n` together with `Tau, L, P0, P1`; plus the products of `P0, P1`
/// with every `Δ_k` (`|k| <= 2n`), `Tau` and `L`, decomposed against the
/// projectives, so that every projection by the third idempotent resolves.
pub fn product_table(
    n: u32,
    registry: &Registry,
    search: &EquivalenceSearch,
    timings: bool,
) -> Result<ProductTable> {
    let base = table_classes(n);
    let mut library = vec![ModuleClassLabel::Tau, ModuleClassLabel::L, ModuleClassLabel::P0, ModuleClassLabel::P1];
    for k in -(2 * n as i64)..=(2 * n as i64) {
        library.push(ModuleClassLabel::Delta(k));
    }
    registry.delta(2 * n as i64)?;
    for k in 1..=2 * n as i64 {
        registry.delta(-k)?;
    }
    let projectives = vec![ModuleClassLabel::P0, ModuleClassLabel::P1];

    let mut jobs: Vec<(ModuleClassLabel, ModuleClassLabel, bool)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for i in 0..base.len() {
        for j in i..base.len() {
            let key = pair_key(&base[i], &base[j]);
            if seen.insert(key.clone()) {
                jobs.push((key.0, key.1, false));
            }
        }
    }
    let mut extra = vec![ModuleClassLabel::Tau, ModuleClassLabel::L];
    for k in -(2 * n as i64)..=(2 * n as i64) {
        extra.push(ModuleClassLabel::Delta(k));
    }
    for p in &projectives {
        for x in &extra {
            let key = pair_key(x, p);
            if seen.insert(key.clone()) {
                jobs.push((key.0, key.1, true));
            }
        }
    }

    let results: Vec<Result<(String, (ModuleClassLabel, ModuleClassLabel), DecompositionReport)>> = jobs
        .par_iter()
        .enumerate()
        .map(|(idx, (a, b, proj))| {
            let s = search.with_seed(search.seed ^ idx as u64);
            let t = registry.get(a)?.tensor(registry.get(b)?.as_ref());
            let name = format!("{} x {}", a, b);
            let lib = if *proj { &projectives } else { &library };
            let report = decompose(&name, &t, lib, registry, &s, timings)?;
            Ok((name, (a.clone(), b.clone()), report))
        })
        .collect();
    let mut table = ProductTable {
        table_n: n,
        ..Default::default()
    };
    for r in results {
        let (_, (a, b), report) = r?;
        table.insert(&a, &b, report);
    }
    Ok(table)
}
