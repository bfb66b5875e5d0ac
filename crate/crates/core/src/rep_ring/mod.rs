//! The representation algebra on computed class symbols, its idempotents,
//! the presented quotient algebra and the audit relating the two.

mod audit;
mod presented;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::g_modules::{ModuleClassLabel, ProductTable};

pub use audit::{consistency_audit, AuditLine, AuditReport, AuditStatus, InjectivityCheck};
pub use presented::{
    component_maps, ComponentCertificate, Monomial, NormalFormElement, Polynomial, PresentedAlgebra,
};

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// A rational combination of module classes; zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ClassElement {
    coeffs: BTreeMap<ModuleClassLabel, BigRational>,
}

impl ClassElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `[Δ0]`.
    pub fn unit() -> Self {
        Self::class(ModuleClassLabel::Delta(0))
    }

    pub fn class(label: ModuleClassLabel) -> Self {
        Self::term(label, BigRational::one())
    }

    pub fn term(label: ModuleClassLabel, c: BigRational) -> Self {
        let mut e = Self::zero();
        e.add_term(label, c);
        e
    }

    pub fn add_term(&mut self, label: ModuleClassLabel, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(label.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&label);
        }
    }

    pub fn coefficient(&self, label: &ModuleClassLabel) -> BigRational {
        self.coeffs.get(label).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ModuleClassLabel, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &ModuleClassLabel> {
        self.coeffs.keys()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (l, x) in &self.coeffs {
            out.add_term(l.clone(), x * c);
        }
        out
    }

    pub fn has_unknown(&self) -> bool {
        self.coeffs.keys().any(|l| matches!(l, ModuleClassLabel::Unknown(_)))
    }
}

impl Add for &ClassElement {
    type Output = ClassElement;
    fn add(self, other: &ClassElement) -> ClassElement {
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Sub for &ClassElement {
    type Output = ClassElement;
    fn sub(self, other: &ClassElement) -> ClassElement {
        self + &(-other)
    }
}

impl Neg for &ClassElement {
    type Output = ClassElement;
    fn neg(self) -> ClassElement {
        self.scale(&-BigRational::one())
    }
}

impl fmt::Display for ClassElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.coeffs.iter().collect();
        terms.sort_by(|a, b| a.0.registry_rank().cmp(&b.0.registry_rank()).then(a.0.cmp(b.0)));
        for (i, (l, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{}", l)?;
            } else {
                write!(f, "{} {}", fmt_coeff(&a), l)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ClassElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ClassElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `[a]·[b]` from the table; `Δ0` acts as the unit without a lookup.
pub fn class_product(a: &ModuleClassLabel, b: &ModuleClassLabel, table: &ProductTable) -> Result<ClassElement> {
    if *a == ModuleClassLabel::Delta(0) {
        return Ok(ClassElement::class(b.clone()));
    }
    if *b == ModuleClassLabel::Delta(0) {
        return Ok(ClassElement::class(a.clone()));
    }
    let unresolved = || Error::UnresolvedProduct(a.to_string(), b.to_string());
    let report = table.get(a, b).ok_or_else(unresolved)?;
    if !report.is_resolved() {
        return Err(unresolved());
    }
    let mut out = ClassElement::zero();
    for s in &report.summands {
        out.add_term(s.label.clone(), BigRational::from_integer(BigInt::from(s.mult)));
    }
    Ok(out)
}

/// Bilinear extension of the table.
pub fn class_multiply(u: &ClassElement, v: &ClassElement, table: &ProductTable) -> Result<ClassElement> {
    let mut out = ClassElement::zero();
    for (a, x) in u.terms() {
        for (b, y) in v.terms() {
            let p = class_product(a, b, table)?;
            out = &out + &p.scale(&(x * y));
        }
    }
    Ok(out)
}

/// `f1 = [Γ]/12`, `f2 = [P0](1 - f1)`, `f3 = (1 - [P0])(1 - f1)`, with
/// `[Γ] = [P0] + [P1]`.
#[derive(Clone, Debug, Serialize)]
pub struct Idempotents {
    pub f1: ClassElement,
    pub f2: ClassElement,
    pub f3: ClassElement,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdempotentCertificate {
    pub idempotent: [bool; 3],
    pub orthogonal: bool,
    pub sum_is_unit: bool,
    /// `[P0] f3 = [P1] f3 = 0`.
    pub projectives_vanish: bool,
}

impl IdempotentCertificate {
    pub fn passes(&self) -> bool {
        self.idempotent.iter().all(|&b| b) && self.orthogonal && self.sum_is_unit && self.projectives_vanish
    }
}

pub fn idempotents(table: &ProductTable) -> Result<Idempotents> {
    let one = ClassElement::unit();
    let p0 = ClassElement::class(ModuleClassLabel::P0);
    let gamma = &p0 + &ClassElement::class(ModuleClassLabel::P1);
    let f1 = gamma.scale(&rat(1, 12));
    let co = &one - &f1;
    let f2 = class_multiply(&p0, &co, table)?;
    let f3 = class_multiply(&(&one - &p0), &co, table)?;
    Ok(Idempotents { f1, f2, f3 })
}

pub fn verify_idempotents(table: &ProductTable) -> Result<(Idempotents, IdempotentCertificate)> {
    let f = idempotents(table)?;
    let fs = [&f.f1, &f.f2, &f.f3];
    let mut idempotent = [false; 3];
    for (i, e) in fs.iter().enumerate() {
        idempotent[i] = class_multiply(e, e, table)? == **e;
    }
    let mut orthogonal = true;
    for i in 0..3 {
        for j in i + 1..3 {
            orthogonal &= class_multiply(fs[i], fs[j], table)?.is_zero();
        }
    }
    let sum_is_unit = &(&f.f1 + &f.f2) + &f.f3 == ClassElement::unit();
    let projectives_vanish = [ModuleClassLabel::P0, ModuleClassLabel::P1]
        .into_iter()
        .map(|p| class_multiply(&ClassElement::class(p), &f.f3, table).map(|x| x.is_zero()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|b| b);
    let cert = IdempotentCertificate {
        idempotent,
        orthogonal,
        sum_is_unit,
        projectives_vanish,
    };
    Ok((f, cert))
}

/// `u f3`.
pub fn f3_project(u: &ClassElement, table: &ProductTable) -> Result<ClassElement> {
    let f = idempotents(table)?;
    class_multiply(u, &f.f3, table)
}

#[derive(Clone, Debug, Serialize)]
pub struct Corollary2Certificate {
    pub n: i64,
    pub m: i64,
    /// `[Δ_n][Δ_m] f3`.
    pub lhs: ClassElement,
    /// `[Δ_{n+m}] f3`.
    pub rhs: ClassElement,
    pub holds: bool,
}

pub fn corollary2_check(n: i64, m: i64, table: &ProductTable) -> Result<Corollary2Certificate> {
    let dn = ClassElement::class(ModuleClassLabel::Delta(n));
    let dm = ClassElement::class(ModuleClassLabel::Delta(m));
    let lhs = f3_project(&class_multiply(&dn, &dm, table)?, table)?;
    let rhs = f3_project(&ClassElement::class(ModuleClassLabel::Delta(n + m)), table)?;
    let holds = lhs == rhs;
    Ok(Corollary2Certificate { n, m, lhs, rhs, holds })
}

#[cfg(test)]
mod tests;
