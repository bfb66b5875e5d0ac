//! The syzygy tower over the full group ring, and the decomposition engine.

mod checks;
mod cover;
mod decompose;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::reps::{self, gamma_d, projective_parts, GroupModule, Representation};

pub use checks::{
    check_lifting, product_table, table_classes, verify_lemma5, CoverShape, LemmaFiveCertificate, LiftingCertificate,
    ProductTable, TensorIdentity,
};
pub use cover::{expected_cover_shape, projective_cover_g, GCover};
pub use decompose::{
    decompose, find_split, projective_multiplicities, DecompositionReport, DecompositionStatus, Split, Summand,
};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModuleClassLabel {
    Delta(i64),
    Tau,
    L,
    P0,
    P1,
    GammaReg,
    Unknown(String),
}

impl ModuleClassLabel {
    /// Position in the registry order: `Δ0, Tau, L, Δ1, Δ-1, Δ2, Δ-2, ...,
    /// P0, P1, Gamma`; used to break ties.
    pub fn registry_rank(&self) -> (u8, u64) {
        match self {
            ModuleClassLabel::Delta(0) => (0, 0),
            ModuleClassLabel::Tau => (1, 0),
            ModuleClassLabel::L => (2, 0),
            ModuleClassLabel::Delta(n) => (3, 2 * n.unsigned_abs() - u64::from(*n > 0)),
            ModuleClassLabel::P0 => (4, 0),
            ModuleClassLabel::P1 => (5, 0),
            ModuleClassLabel::GammaReg => (6, 0),
            ModuleClassLabel::Unknown(_) => (7, 0),
        }
    }

    pub fn is_projective(&self) -> bool {
        matches!(self, ModuleClassLabel::P0 | ModuleClassLabel::P1 | ModuleClassLabel::GammaReg)
    }
}

impl fmt::Display for ModuleClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleClassLabel::Delta(n) => write!(f, "Delta({})", n),
            ModuleClassLabel::Tau => f.write_str("Tau"),
            ModuleClassLabel::L => f.write_str("L"),
            ModuleClassLabel::P0 => f.write_str("P0"),
            ModuleClassLabel::P1 => f.write_str("P1"),
            ModuleClassLabel::GammaReg => f.write_str("Gamma"),
            ModuleClassLabel::Unknown(s) => write!(f, "Unknown({})", s),
        }
    }
}

impl fmt::Debug for ModuleClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ModuleClassLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for ModuleClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Ok(match s {
            "Tau" => ModuleClassLabel::Tau,
            "L" => ModuleClassLabel::L,
            "P0" => ModuleClassLabel::P0,
            "P1" => ModuleClassLabel::P1,
            "Gamma" => ModuleClassLabel::GammaReg,
            _ => {
                if let Some(n) = s.strip_prefix("Delta(").and_then(|r| r.strip_suffix(')')) {
                    ModuleClassLabel::Delta(n.parse().map_err(|_| Error::Parse(format!("bad label `{}`", s)))?)
                } else if let Some(x) = s.strip_prefix("Unknown(").and_then(|r| r.strip_suffix(')')) {
                    ModuleClassLabel::Unknown(x.to_string())
                } else {
                    return Err(Error::Parse(format!("bad label `{}`", s)));
                }
            }
        })
    }
}

/// Canonical representations for the class labels. `Δ_n` is built lazily
/// by iterated projective covers and cached.
pub struct Registry {
    tower: Mutex<Vec<Arc<Representation>>>,
    duals: Mutex<BTreeMap<i64, Arc<Representation>>>,
    fixed: BTreeMap<ModuleClassLabel, Arc<Representation>>,
}

impl Default for Registry {
    fn default() -> Self {
        Self::new()
    }
}

impl Registry {
    pub fn new() -> Self {
        let pp = projective_parts();
        let mut fixed = BTreeMap::new();
        fixed.insert(ModuleClassLabel::Tau, Arc::new(reps::tau()));
        fixed.insert(ModuleClassLabel::L, Arc::new(gamma_d(2).expect("Γ2")));
        fixed.insert(ModuleClassLabel::P0, Arc::new(pp.p0));
        fixed.insert(ModuleClassLabel::P1, Arc::new(pp.p1));
        fixed.insert(ModuleClassLabel::GammaReg, Arc::new(reps::regular_rep()));
        Registry {
            tower: Mutex::new(vec![Arc::new(reps::tau0())]),
            duals: Mutex::new(BTreeMap::new()),
            fixed,
        }
    }

    /// `Δ_n`; for `n < 0` the dual of `Δ_{-n}`.
    pub fn delta(&self, n: i64) -> Result<Arc<Representation>> {
        if n < 0 {
            if let Some(d) = self.duals.lock().unwrap().get(&n) {
                return Ok(d.clone());
            }
            let d = Arc::new(self.delta(-n)?.dual());
            self.duals.lock().unwrap().insert(n, d.clone());
            return Ok(d);
        }
        let n = n as usize;
        let mut tower = self.tower.lock().unwrap();
        while tower.len() <= n {
            let last = tower.last().unwrap().clone();
            let cover = projective_cover_g(&last)?;
            tower.push(Arc::new(cover.kernel()?));
        }
        Ok(tower[n].clone())
    }

    pub fn get(&self, label: &ModuleClassLabel) -> Result<Arc<Representation>> {
        match label {
            ModuleClassLabel::Delta(n) => self.delta(*n),
            ModuleClassLabel::Unknown(s) => Err(Error::InvalidArgument(format!("no module for Unknown({})", s))),
            other => Ok(self.fixed[other].clone()),
        }
    }
}

/// `Δ_n` built by a fresh registry.
pub fn delta_g(n: i64) -> Result<Representation> {
    Ok((*Registry::new().delta(n)?).clone())
}

#[cfg(test)]
mod tests;
