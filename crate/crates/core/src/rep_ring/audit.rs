use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::presented::{Monomial, NormalFormElement, Polynomial, PresentedAlgebra};
use super::{class_product, f3_project, ClassElement};
use crate::error::{Error, Result};
use crate::g_modules::{ModuleClassLabel, ProductTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AuditStatus {
    Holds,
    Fails,
    Unknown,
    ExtraRelation,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditLine {
    pub relation: String,
    pub status: AuditStatus,
    /// The computed product, projected by `f3`.
    pub lhs_canonical: String,
    /// The presented side, mapped into classes where possible.
    pub rhs_canonical: String,
    /// Decomposition of the underlying tensor product.
    pub witness: String,
}

/// Rank of `u -> u f3` on the non-projective classes of the table.
#[derive(Clone, Debug, Serialize)]
pub struct InjectivityCheck {
    pub classes: Vec<String>,
    pub rank: usize,
    pub injective: bool,
    /// Evidence only up to this table level.
    pub level: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub lines: Vec<AuditLine>,
    pub injectivity: InjectivityCheck,
}

impl AuditReport {
    pub fn line(&self, relation_prefix: &str) -> Option<&AuditLine> {
        self.lines.iter().find(|l| l.relation.starts_with(relation_prefix))
    }

    /// No line fails and the projection is injective.
    pub fn consistent(&self) -> bool {
        self.injectivity.injective && self.lines.iter().all(|l| l.status != AuditStatus::Fails)
    }
}

// Coordinates of the elements over the union of their labels.
fn coordinates(elems: &[&ClassElement]) -> Vec<Vec<BigRational>> {
    let labels: BTreeSet<&ModuleClassLabel> = elems.iter().flat_map(|e| e.labels()).collect();
    elems
        .iter()
        .map(|e| labels.iter().map(|l| e.coefficient(l)).collect())
        .collect()
}

// A combination of `spans` equal to `target`, if there is one.
fn solve(spans: &[&ClassElement], target: &ClassElement) -> Option<Vec<BigRational>> {
    let mut all: Vec<&ClassElement> = spans.to_vec();
    all.push(target);
    let coords = coordinates(&all);
    let n = spans.len();
    let width = coords.first().map_or(0, |r| r.len());
    // columns are the spans, rows the labels: solve A c = t
    let mut a: Vec<Vec<BigRational>> = (0..width)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..n).map(|j| coords[j][i].clone()).collect();
            row.push(coords[n][i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..width).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = BigRational::one() / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..width {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=n {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut sol = vec![BigRational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = a[i][n].clone();
    }
    Some(sol)
}

fn rank(elems: &[&ClassElement]) -> usize {
    let mut rows = coordinates(elems);
    let width = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &rows[r][c];
            for j in c..width {
                let t = &f * &rows[r][j];
                rows[i][j] -= t;
            }
        }
        r += 1;
    }
    r
}

/// Generator symbol, its class and its polynomial.
struct Gen {
    name: &'static str,
    label: ModuleClassLabel,
    poly: Polynomial,
}

fn gens() -> Vec<Gen> {
    let p = |s: &str| s.parse::<Polynomial>().expect("static");
    vec![
        Gen { name: "x", label: ModuleClassLabel::Delta(1), poly: p("x") },
        Gen { name: "x^-1", label: ModuleClassLabel::Delta(-1), poly: p("x^-1") },
        Gen { name: "y", label: ModuleClassLabel::Tau, poly: p("y") },
        Gen { name: "z", label: ModuleClassLabel::L, poly: p("z") },
    ]
}

/// Compares the computed classes with the presented algebra under
/// `x -> [Δ1] f3`, `1/x -> [Δ-1] f3`, `y -> [Tau] f3`, `z -> [L] f3`
/// (and `x^k -> [Δ_k] f3` within the table range).
///
/// One line per product of two generators. When the normal form of the
/// product only involves monomials with a class image, the line holds or
/// fails. Otherwise the product is a new basis element of the presented
/// algebra, and if its computed class nevertheless lies in the span of the
/// other images, that identity is reported as an extra relation.
pub fn consistency_audit(table: &ProductTable) -> Result<AuditReport> {
    let alg = PresentedAlgebra::new();
    let n = table.table_n as i64;
    if n < 1 {
        return Err(Error::InvalidArgument("the audit needs a table of level at least 1".into()));
    }
    let mut images: Vec<(Monomial, ClassElement)> = Vec::new();
    images.push((Monomial::new(0, false, false), f3_project(&ClassElement::unit(), table)?));
    images.push((Monomial::new(0, true, false), f3_project(&ClassElement::class(ModuleClassLabel::Tau), table)?));
    images.push((Monomial::new(0, false, true), f3_project(&ClassElement::class(ModuleClassLabel::L), table)?));
    for k in (-2 * n..=2 * n).filter(|&k| k != 0) {
        images.push((Monomial::new(k, false, false), f3_project(&ClassElement::class(ModuleClassLabel::Delta(k)), table)?));
    }
    let image_of = |m: &Monomial| images.iter().find(|(a, _)| a == m).map(|(_, c)| c);
    let phi = |u: &NormalFormElement| -> Option<ClassElement> {
        let mut out = ClassElement::zero();
        for (m, c) in u.terms() {
            out = &out + &image_of(m)?.scale(c);
        }
        Some(out)
    };

    let gs = gens();
    let mut lines = Vec::new();
    for i in 0..gs.len() {
        for j in i..gs.len() {
            let (a, b) = (&gs[i], &gs[j]);
            let nf = alg.normalize(&a.poly.mul(&b.poly));
            let witness = match table.get(&a.label, &b.label) {
                Some(r) => format!("{} x {} = {}", a.label, b.label, r.summary()),
                None => format!("{} x {} not in table", a.label, b.label),
            };
            let product = format!("{}*{}", a.name, b.name);
            let line = match class_product(&a.label, &b.label, table) {
                Err(Error::UnresolvedProduct(..)) => AuditLine {
                    relation: format!("{} = {}", product, nf),
                    status: AuditStatus::Unknown,
                    lhs_canonical: format!("({}) f3", table.get(&a.label, &b.label).map_or("?".into(), |r| r.summary())),
                    rhs_canonical: phi(&nf).map_or_else(|| format!("image of {}", nf), |c| c.to_string()),
                    witness,
                },
                Err(e) => return Err(e),
                Ok(p) => {
                    let lhs = f3_project(&p, table)?;
                    if let Some(rhs) = phi(&nf) {
                        AuditLine {
                            relation: format!("{} = {}", product, nf),
                            status: if lhs == rhs { AuditStatus::Holds } else { AuditStatus::Fails },
                            lhs_canonical: lhs.to_string(),
                            rhs_canonical: rhs.to_string(),
                            witness,
                        }
                    } else {
                        let spans: Vec<&ClassElement> = images.iter().map(|(_, c)| c).collect();
                        match solve(&spans, &lhs) {
                            Some(sol) => {
                                let rel = NormalFormElement::from_terms(
                                    images.iter().zip(sol).map(|((m, _), c)| (*m, c)),
                                );
                                AuditLine {
                                    relation: format!("{} = {}", product, rel),
                                    status: AuditStatus::ExtraRelation,
                                    lhs_canonical: lhs.to_string(),
                                    rhs_canonical: phi(&rel).expect("images only").to_string(),
                                    witness,
                                }
                            }
                            None => AuditLine {
                                relation: format!("{} = {}", product, nf),
                                status: AuditStatus::Holds,
                                lhs_canonical: lhs.to_string(),
                                rhs_canonical: format!("new basis element {}", nf),
                                witness,
                            },
                        }
                    }
                }
            };
            lines.push(line);
        }
    }

    let mut classes = vec![ModuleClassLabel::Delta(0), ModuleClassLabel::Tau, ModuleClassLabel::L];
    for k in 1..=2 * n {
        classes.push(ModuleClassLabel::Delta(k));
        classes.push(ModuleClassLabel::Delta(-k));
    }
    let projected: Vec<ClassElement> = classes
        .iter()
        .map(|l| f3_project(&ClassElement::class(l.clone()), table))
        .collect::<Result<_>>()?;
    let r = rank(&projected.iter().collect::<Vec<_>>());
    let injectivity = InjectivityCheck {
        classes: classes.iter().map(|l| l.to_string()).collect(),
        rank: r,
        injective: r == classes.len(),
        level: table.table_n,
    };
    Ok(AuditReport { lines, injectivity })
}
