use num_rational::BigRational;
use proptest::prelude::*;
use repring_a4::arith::{smith_normal_form, Local2Rational};
use repring_a4::g_modules::Registry;
use repring_a4::rep_ring::{component_maps, Polynomial, PresentedAlgebra};
use repring_a4::reps::{are_equivalent, EquivalenceSearch, GroupModule, Representation};
use repring_a4::Matrix;

fn local() -> impl Strategy<Value = Local2Rational> {
    (-200i64..200, prop::sample::select(vec![1i64, 3, 5, 7, 9, 15]))
        .prop_map(|(n, d)| Local2Rational::new(n, d).unwrap())
}

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(local(), c), r).prop_map(|rows| Matrix::from_rows(rows).unwrap())
    })
}

// c x^k y^a z^b, with y, z exponents kept small
fn polynomial() -> impl Strategy<Value = String> {
    prop::collection::vec((-9i64..10, -3i64..4, 0u32..4, 0u32..4), 1..5).prop_map(|terms| {
        terms
            .iter()
            .map(|(c, k, a, b)| format!("({})*x^{}*y^{}*z^{}", c, k, a, b))
            .collect::<Vec<_>>()
            .join(" + ")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn local_ring_laws(a in local(), b in local(), c in local()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!((&a * &b).is_unit(), a.is_unit() && b.is_unit());
        if let (Some(x), Some(y)) = (a.val2(), b.val2()) {
            prop_assert_eq!((&a * &b).val2(), Some(x + y));
        }
        if let Some(inv) = a.inverse() {
            prop_assert!(a.is_unit());
            prop_assert!((&a * &inv).is_one());
        }
        prop_assert_eq!(a.to_string().parse::<Local2Rational>().unwrap(), a);
    }

    #[test]
    fn smith_identities(a in matrix(6)) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(&(&s.u * &a) * &s.v, s.d.clone());
        prop_assert!(s.u.is_unimodular() && s.v.is_unimodular());
        prop_assert!(s.elementary_exponents.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(s.rank(), a.rank());
    }

    #[test]
    fn matrix_text_roundtrip(a in matrix(5)) {
        prop_assert_eq!(Matrix::parse_text(&a.to_text()).unwrap(), a);
    }

    // Normal forms agree with the original polynomial at every component.
    #[test]
    fn normalize_respects_components(p in polynomial(), q in polynomial()) {
        let alg = PresentedAlgebra::new();
        let comps = component_maps();
        let pp: Polynomial = p.parse().unwrap();
        let qq: Polynomial = q.parse().unwrap();
        let np = alg.normalize(&pp);
        let prod = alg.multiply(&np, &alg.normalize(&qq));
        for (i, &(y, z)) in comps.points.iter().enumerate() {
            let (y, z) = (BigRational::from_integer(y.into()), BigRational::from_integer(z.into()));
            prop_assert_eq!(&comps.evaluate(&np)[i], &pp.evaluate_yz(&y, &z));
            prop_assert_eq!(&comps.evaluate(&prod)[i], &pp.mul(&qq).evaluate_yz(&y, &z));
        }
        prop_assert_eq!(alg.normalize(&np.to_polynomial()), np);
    }
}

#[test]
fn dump_roundtrip() {
    let reg = Registry::new();
    for n in -3..=3 {
        let d = reg.delta(n).unwrap();
        let back = Representation::parse_dump(&d.to_dump()).unwrap();
        assert_eq!(back.to_dump(), d.to_dump());
        assert!(are_equivalent(&back, d.as_ref(), &EquivalenceSearch::default()).unwrap().equivalent);
    }
}
