use super::*;
use crate::reps::{are_equivalent, mod2_nontrivial_idempotent, restrict_to_h, EquivalenceSearch, QOmega};
use crate::syzygy::delta_h;

use ModuleClassLabel::*;

fn search() -> EquivalenceSearch {
    EquivalenceSearch::default()
}

#[test]
fn label_round_trip() {
    for l in [Delta(-3), Delta(0), Tau, L, P0, P1, GammaReg] {
        assert_eq!(l.to_string().parse::<ModuleClassLabel>().unwrap(), l);
    }
    assert!("Delta(x)".parse::<ModuleClassLabel>().is_err());
    assert!(Delta(1).registry_rank() < Delta(-1).registry_rank());
    assert!(Delta(-1).registry_rank() < Delta(2).registry_rank());
}

#[test]
fn cover_shapes_follow_the_pattern() {
    let reg = Registry::new();
    for n in 0..=5 {
        let c = projective_cover_g(&reg.delta(n).unwrap()).unwrap();
        assert_eq!((c.s, c.t), expected_cover_shape(n as u64), "n = {}", n);
    }
    assert_eq!(expected_cover_shape(0), (1, 0));
    assert_eq!(expected_cover_shape(1), (0, 1));
    assert_eq!(expected_cover_shape(2), (1, 1));
}

#[test]
fn tower_degrees_and_low_terms() {
    let reg = Registry::new();
    for n in -4..=4i64 {
        assert_eq!(reg.delta(n).unwrap().degree(), 2 * n.unsigned_abs() as usize + 1);
    }
    let s = search();
    // Δ1 is the augmentation kernel of the permutation module P0, i.e. L_4 / L_0
    let eq = |n: i64, d: u32| are_equivalent(reg.delta(n).unwrap().as_ref(), &gamma_d(d).unwrap(), &s).unwrap().equivalent;
    assert!(eq(1, 4));
    assert!(eq(-1, 1));
    assert!(!eq(1, 1));
    assert!(!eq(-1, 4));
    assert_eq!(reg.delta(2).unwrap().character().at_b(), &QOmega::int(-1));
}

#[test]
fn towers_agree_on_restriction() {
    let reg = Registry::new();
    let s = search();
    for n in 0..=4 {
        let g = restrict_to_h(&reg.delta(n).unwrap());
        assert!(are_equivalent(&g, &delta_h(n).unwrap(), &s).unwrap().equivalent, "n = {}", n);
    }
}

#[test]
fn lifting_certificates() {
    let reg = Registry::new();
    let c0 = check_lifting(0, &reg, &search()).unwrap();
    assert!(c0.passes(), "{:?}", c0);
    assert_eq!(c0.complement_degree, 2);
    let c1 = check_lifting(1, &reg, &search()).unwrap();
    assert!(c1.passes(), "{:?}", c1);
    assert_eq!(c1.complement_degree, 6);
}

#[test]
fn projective_products_by_characters() {
    let reg = Registry::new();
    let p0 = reg.get(&P0).unwrap();
    let p1 = reg.get(&P1).unwrap();
    assert_eq!(projective_multiplicities(&p0.tensor(&p0)).unwrap(), (2, 1));
    assert_eq!(projective_multiplicities(&p0.tensor(&p1)).unwrap(), (2, 3));
    assert_eq!(projective_multiplicities(&p1.tensor(&p1)).unwrap(), (6, 5));
    assert!(projective_multiplicities(&reg.delta(1).unwrap()).is_err());
}

#[test]
fn lemma6_decompositions() {
    let reg = Registry::new();
    let s = search();
    let l = reg.get(&L).unwrap();
    let r = decompose("L x L", &l.tensor(&l), &[Delta(0), Tau, L], &reg, &s, false).unwrap();
    assert!(r.is_resolved());
    assert_eq!((r.multiplicity(&Delta(0)), r.multiplicity(&Tau), r.multiplicity(&L)), (1, 1, 2));
    let t = reg.get(&Tau).unwrap();
    let r = decompose("Tau x Tau", &t.tensor(&t), &[Delta(0), Tau], &reg, &s, false).unwrap();
    assert!(r.is_resolved());
    assert_eq!((r.multiplicity(&Delta(0)), r.multiplicity(&Tau)), (2, 1));
}

#[test]
fn decompose_reports_unknown_remainder() {
    let reg = Registry::new();
    let l = reg.get(&L).unwrap();
    let r = decompose("L x L", &l.tensor(&l), &[Tau], &reg, &search(), false).unwrap();
    assert_eq!(r.status, DecompositionStatus::Unknown);
    assert_eq!(r.multiplicity(&Tau), 1);
    assert_eq!(r.remainder.as_ref().unwrap().degree(), 7);
}

#[test]
fn lemma5_level_zero() {
    let reg = Registry::new();
    let c = verify_lemma5(0, &reg, &search()).unwrap();
    assert!(c.passes(), "{:?}", c);
    let p0 = reg.get(&P0).unwrap();
    let d1 = reg.delta(1).unwrap();
    let r = decompose("P0 x Delta(1)", &p0.tensor(&d1), &[P0, P1], &reg, &search(), false).unwrap();
    assert_eq!(r.summary(), "P0 + P1");
}

#[test]
fn library_modules_are_indecomposable() {
    let reg = Registry::new();
    for l in [Delta(0), Delta(1), Delta(-1), Delta(2), Delta(-2), Tau, L, P0, P1] {
        let r = reg.get(&l).unwrap();
        assert!(mod2_nontrivial_idempotent(r.as_ref(), 22).unwrap().is_none(), "{}", l);
    }
    assert!(mod2_nontrivial_idempotent(reg.get(&GammaReg).unwrap().as_ref(), 22).unwrap().is_some());
}
