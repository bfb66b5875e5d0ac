use super::*;
use crate::arith::{Local2Rational, Matrix};

fn q(n: i64) -> Local2Rational {
    Local2Rational::from(n)
}

fn search() -> EquivalenceSearch {
    EquivalenceSearch::default()
}

fn equiv<M: GroupModule>(a: &M, b: &M) -> bool {
    let e = are_equivalent(a, b, &search()).unwrap();
    if let Some(w) = &e.witness {
        assert!(is_intertwiner(w, a, b));
        assert!(w.is_unimodular());
    }
    e.equivalent
}

fn irreducibles() -> Vec<(&'static str, Representation)> {
    vec![
        ("tau0", tau0()),
        ("tau", tau()),
        ("gamma1", gamma_d(1).unwrap()),
        ("gamma2", gamma_d(2).unwrap()),
        ("gamma4", gamma_d(4).unwrap()),
    ]
}

#[test]
fn gamma_columns_and_traces() {
    let g1 = gamma_d(1).unwrap();
    assert_eq!(g1.a1().column(0), vec![q(1), q(1), q(0)]);
    for d in [1, 2, 4] {
        let g = gamma_d(d).unwrap();
        assert_eq!(g.b().trace(), q(0));
        assert_eq!(g.a1().column(0), vec![q(1), q(d as i64), q(0)]);
    }
    assert_eq!(gamma_d(4).unwrap().a1()[(0, 2)], q(-1));
    assert!(gamma_d(3).is_err());
}

#[test]
fn typeset_matrices_agree_with_derivation() {
    for d in [1, 2, 4] {
        let g = gamma_d(d).unwrap();
        let [a1, a2, b] = gamma_d_typeset(d).unwrap();
        assert_eq!(g.a1(), &a1, "d = {}", d);
        assert_eq!(g.a2(), &a2, "d = {}", d);
        assert_eq!(g.b(), &b, "d = {}", d);
    }
}

#[test]
fn tau_examples() {
    assert_eq!(tau0().degree(), 1);
    let t = tau();
    assert!(t.a2().is_identity());
    assert_eq!(t.b().pow(2).trace(), q(-1));
    assert_eq!(t.character().at_b(), &QOmega::int(-1));
}

#[test]
fn projective_parts_degrees_and_characters() {
    let pp = projective_parts();
    assert_eq!(pp.p0.degree(), 4);
    assert_eq!(pp.p1.degree(), 8);
    assert_eq!(pp.p0.character().at_b(), &QOmega::int(1));
    assert_eq!(pp.p1.character().at_b(), &QOmega::int(-1));
    assert!(equiv(&pp.p0.direct_sum(&pp.p1), &regular_rep()));
    assert_eq!(right_multiplication(&pp.w0).rank(), 4);
}

#[test]
fn characters() {
    assert_eq!(gamma_d(1).unwrap().character().at_a1(), &QOmega::int(-1));
    assert_eq!(regular_rep().character().at_b(), &QOmega::int(0));
    let lib = irreducibles();
    for (_, a) in &lib {
        for (_, b) in &lib {
            let (ca, cb) = (a.character(), b.character());
            assert_eq!(a.direct_sum(b).character(), ca.sum(&cb));
            assert_eq!(a.tensor(b).character(), ca.product(&cb));
        }
        let d = a.dual().character();
        let c = a.character();
        assert_eq!(d.at_b(), c.at_b2());
        assert_eq!(d.at_a1(), c.at_a1());
    }
}

#[test]
fn irreducibility() {
    assert!(is_irreducible(&tau()));
    assert!(is_irreducible(&gamma_d(1).unwrap()));
    assert!(!is_irreducible(&regular_rep()));
    for (name, r) in irreducibles() {
        assert!(is_irreducible(&r), "{}", name);
    }
}

#[test]
fn lemma1_pairwise_inequivalent() {
    let lib = irreducibles();
    let mut pairs = 0;
    for i in 0..lib.len() {
        assert!(equiv(&lib[i].1, &lib[i].1));
        for j in i + 1..lib.len() {
            assert!(!equiv(&lib[i].1, &lib[j].1), "{} ~ {}", lib[i].0, lib[j].0);
            pairs += 1;
        }
    }
    assert_eq!(pairs, 10);
}

#[test]
fn monomial_gamma2_is_equivalent() {
    let m = monomial_gamma2();
    assert_eq!(m.a2(), &Matrix::from_i64(&[&[-1, 0, 0], &[0, -1, 0], &[0, 0, 1]]));
    assert!(equiv(&gamma_d(2).unwrap(), &m));
}

#[test]
fn intertwiner_ranks() {
    assert_eq!(intertwiner_lattice(&tau0(), &tau0()).rank(), 1);
    assert_eq!(intertwiner_lattice(&gamma_d(1).unwrap(), &tau()).rank(), 0);
    let tt = intertwiner_lattice(&tau(), &tau());
    assert_eq!(tt.rank(), 2);
    assert!(tt.lattice.is_saturated());
    for x in tt.elements() {
        assert!(is_intertwiner(&x, &tau(), &tau()));
    }
}

#[test]
fn functor_identities() {
    let g2 = gamma_d(2).unwrap();
    assert!(equiv(&g2.dual().dual(), &g2));
    assert!(equiv(&tau0().tensor(&g2), &g2));
    assert!(equiv(&g2.tensor(&tau0()), &g2));
}

#[test]
fn induction() {
    let triv = induce(&HRepresentation::trivial());
    assert_eq!(triv.degree(), 3);
    assert_eq!(triv.character().at_b(), &QOmega::int(0));
    let deltas = linear_characters_h();
    assert_eq!(deltas[0].traces()[1..3], [q(1), q(1)]);
    assert_eq!(deltas[1].traces()[1..3], [q(-1), q(1)]);
    assert_eq!(deltas[3].traces()[1..3], [q(-1), q(-1)]);
    for d in &deltas {
        let ind = induce(d);
        assert_eq!(ind.degree(), 3);
        let res = ind.restrict_to_h();
        assert_eq!(res.degree(), 3);
        assert!(equiv(&res, &d.direct_sum(d).direct_sum(d)) == (d == &deltas[0]));
    }
    assert!(equiv(&induce(&deltas[2]), &gamma_d(2).unwrap()));
}

#[test]
fn mod2_idempotents_detect_splitting() {
    let pp = projective_parts();
    assert!(mod2_nontrivial_idempotent(&pp.p0, 22).unwrap().is_none());
    assert!(mod2_nontrivial_idempotent(&tau0().direct_sum(&tau()), 22).unwrap().is_some());
}

#[test]
fn dump_round_trip() {
    let g = gamma_d(4).unwrap();
    assert_eq!(Representation::parse_dump(&g.to_dump()).unwrap(), g);
}
