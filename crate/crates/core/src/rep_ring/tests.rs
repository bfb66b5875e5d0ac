use super::*;
use crate::g_modules::{DecompositionReport, DecompositionStatus, Summand};

use ModuleClassLabel::*;

fn report(summands: &[(ModuleClassLabel, u32)], status: DecompositionStatus) -> DecompositionReport {
    DecompositionReport {
        target: String::new(),
        summands: summands.iter().map(|(l, m)| Summand { label: l.clone(), mult: *m }).collect(),
        status,
        witness_det_val2: Some(0),
        elapsed_ms: None,
        notes: vec![],
        parts: vec![],
        witness: None,
        remainder: None,
    }
}

// Level-one products as computed by `product_table(1)`.
fn level_one() -> ProductTable {
    use DecompositionStatus::{Unknown as U, Verified as V};
    let mut t = ProductTable {
        table_n: 1,
        ..Default::default()
    };
    let unknown = |s: &str| ModuleClassLabel::Unknown(s.into());
    let rows: Vec<(ModuleClassLabel, ModuleClassLabel, Vec<(ModuleClassLabel, u32)>, DecompositionStatus)> = vec![
        (Delta(-1), Delta(-1), vec![(Delta(-2), 1), (P0, 1)], V),
        (Delta(1), Delta(-1), vec![(Delta(0), 1), (P1, 1)], V),
        (Delta(1), Delta(1), vec![(Delta(2), 1), (P0, 1)], V),
        (Delta(1), P0, vec![(P0, 1), (P1, 1)], V),
        (Delta(-1), P0, vec![(P0, 1), (P1, 1)], V),
        (Delta(1), P1, vec![(P0, 2), (P1, 2)], V),
        (Delta(-1), P1, vec![(P0, 2), (P1, 2)], V),
        (Delta(2), P0, vec![(P0, 1), (P1, 2)], V),
        (Delta(-2), P0, vec![(P0, 1), (P1, 2)], V),
        (Delta(2), P1, vec![(P0, 4), (P1, 3)], V),
        (Delta(-2), P1, vec![(P0, 4), (P1, 3)], V),
        (L, L, vec![(Delta(0), 1), (Tau, 1), (L, 2)], V),
        (L, P0, vec![(P0, 1), (P1, 1)], V),
        (L, P1, vec![(P0, 2), (P1, 2)], V),
        (P0, P0, vec![(P0, 2), (P1, 1)], V),
        (P0, P1, vec![(P0, 2), (P1, 3)], V),
        (P1, P1, vec![(P0, 6), (P1, 5)], V),
        (Tau, L, vec![(L, 2)], V),
        (Tau, P0, vec![(P1, 1)], V),
        (Tau, P1, vec![(P0, 2), (P1, 1)], V),
        (Tau, Tau, vec![(Delta(0), 2), (Tau, 1)], V),
        (Tau, Delta(1), vec![(unknown("deg=6,chi(a1)=-2,chi(b)=0"), 1)], U),
        (Tau, Delta(-1), vec![(unknown("deg=6,chi(a1)=-2,chi(b)=0"), 1)], U),
        (L, Delta(1), vec![(unknown("deg=9,chi(a1)=1,chi(b)=0"), 1)], U),
        (L, Delta(-1), vec![(unknown("deg=9,chi(a1)=1,chi(b)=0"), 1)], U),
    ];
    for (a, b, s, st) in rows {
        t.insert(&a, &b, report(&s, st));
    }
    t
}

fn c(l: ModuleClassLabel) -> ClassElement {
    ClassElement::class(l)
}

#[test]
fn class_products_follow_the_table() {
    let t = level_one();
    let p0 = c(P0);
    assert_eq!(class_multiply(&p0, &p0, &t).unwrap().to_string(), "2 P0 + P1");
    assert_eq!(class_multiply(&c(P1), &c(P1), &t).unwrap().to_string(), "6 P0 + 5 P1");
    let v = &c(Tau) + &c(L).scale(&rat(-1, 2));
    assert_eq!(class_multiply(&ClassElement::unit(), &v, &t).unwrap(), v);
    assert_eq!(v.to_string(), "Tau - 1/2 L");
    match class_multiply(&c(Tau), &c(Delta(1)), &t) {
        Err(Error::UnresolvedProduct(a, b)) => assert_eq!((a.as_str(), b.as_str()), ("Tau", "Delta(1)")),
        other => panic!("{:?}", other),
    }
}

#[test]
fn idempotents_from_lemma2() {
    let t = level_one();
    let (f, cert) = verify_idempotents(&t).unwrap();
    assert!(cert.passes(), "{:?}", cert);
    assert_eq!(f.f1.to_string(), "1/12 P0 + 1/12 P1");
    assert_eq!(f.f2.to_string(), "2/3 P0 - 1/3 P1");
    assert_eq!(f.f3.to_string(), "Delta(0) - 3/4 P0 + 1/4 P1");
    // [Γ]^2 = 12 [Γ]
    let g = &c(P0) + &c(P1);
    assert_eq!(class_multiply(&g, &g, &t).unwrap(), g.scale(&rat(12, 1)));
}

#[test]
fn projection_by_f3() {
    let t = level_one();
    let f3 = idempotents(&t).unwrap().f3;
    assert!(f3_project(&c(P0), &t).unwrap().is_zero());
    assert_eq!(f3_project(&ClassElement::unit(), &t).unwrap(), f3);
    assert_eq!(f3_project(&f3, &t).unwrap(), f3);
}

#[test]
fn corollary2_low_cases() {
    let t = level_one();
    for (n, m) in [(1, 1), (1, -1), (-1, -1), (0, 1), (0, -2)] {
        let cert = corollary2_check(n, m, &t).unwrap();
        assert!(cert.holds, "{:?}", cert);
    }
    assert_eq!(corollary2_check(1, -1, &t).unwrap().rhs, idempotents(&t).unwrap().f3);
}

#[test]
fn normal_forms() {
    let a = PresentedAlgebra::new();
    assert_eq!(a.normalize_str("y^2").unwrap().to_string(), "y + 2");
    assert_eq!(a.normalize_str("z^2").unwrap().to_string(), "2z + y + 1");
    assert!(a.normalize_str("(y-2)(y+1)").unwrap().is_zero());
    assert_eq!(a.normalize_str("z*yz").unwrap().to_string(), "2yz + 2y + 2");
    assert_eq!(a.normalize_str("yz*yz").unwrap().to_string(), "2yz + 4z + 4y + 4");
    assert_eq!(a.normalize_str("x * 1/x").unwrap().to_string(), "1");
    assert_eq!(a.normalize_str("x^-2 * x^3 * y").unwrap().to_string(), "xy");
    assert!(a.locally_confluent());
    assert!("y^".parse::<Polynomial>().is_err());
    assert!("1/y".parse::<Polynomial>().is_err());
}

#[test]
fn normalize_is_idempotent_and_multiplicative() {
    let a = PresentedAlgebra::new();
    let exprs = ["y^3 z^2", "(x + y)(z - 1)^3", "x^-1 yz + 3", "z^5 - y"];
    for u in exprs {
        let nu = a.normalize_str(u).unwrap();
        assert_eq!(a.normalize(&nu.to_polynomial()), nu);
        for v in exprs {
            let nv = a.normalize_str(v).unwrap();
            let direct = a.normalize_str(&format!("({})*({})", u, v)).unwrap();
            assert_eq!(a.multiply(&nu, &nv), direct);
        }
    }
}

#[test]
fn four_components() {
    let cert = component_maps();
    assert!(cert.passes());
    assert_eq!(cert.points, vec![(2, 3), (2, -1), (-1, 0), (-1, 2)]);
    assert_eq!(cert.determinant, rat(72, 1));
    let a = PresentedAlgebra::new();
    let v = cert.evaluate(&a.normalize_str("x z + y").unwrap());
    assert_eq!(v[0].get(&1), Some(&rat(3, 1)));
    assert_eq!(v[0].get(&0), Some(&rat(2, 1)));
    assert_eq!(v[2].get(&1), None);
}

#[test]
fn audit_on_level_one() {
    let t = level_one();
    let r = consistency_audit(&t).unwrap();
    let st = |p: &str| r.line(p).unwrap_or_else(|| panic!("no line {}", p)).status;
    assert_eq!(st("y*y"), AuditStatus::Holds);
    assert_eq!(st("z*z"), AuditStatus::Holds);
    assert_eq!(st("x*x^-1"), AuditStatus::Holds);
    assert_eq!(st("x*x ="), AuditStatus::Holds);
    assert_eq!(st("x*y"), AuditStatus::Unknown);
    assert_eq!(st("x^-1*z"), AuditStatus::Unknown);
    let yz = r.line("y*z").unwrap();
    assert_eq!(yz.status, AuditStatus::ExtraRelation);
    assert_eq!(yz.relation, "y*z = 2z");
    assert_eq!(yz.witness, "Tau x L = 2 L");
    assert_eq!(r.lines.len(), 10);
    assert!(r.injectivity.injective);
    assert_eq!(r.injectivity.rank, 7);
    assert!(r.consistent());
}
