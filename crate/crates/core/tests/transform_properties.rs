use num_traits::Zero;
use proptest::prelude::*;
use quartic_forms::cubicmap::{
    change_coordinates, coeff_tensor, compose_left, compose_right, equivalence_tensor,
    left_composed_tensor, restore_coordinates, right_composed_tensor, AffineMap, CoeffTensor,
    CubicMap, Matrix2,
};
use quartic_forms::invariants::{
    derived_forms, g_determinants, printed_form, symmetrized_form, FormSource, PseudoD,
};
use quartic_forms::polyalg::{ratio, MultiPoly, PolyScalar, Rational};
use quartic_forms::tensor::DenseTensor;
use quartic_forms::transforms::{
    check_tensoriality, composed_determinant_check, hat_matrix, pseudo_transform, right_law_check,
    PseudoSpec,
};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| ratio(n, d))
}

fn tensor() -> impl Strategy<Value = CoeffTensor<Rational>> {
    prop::collection::vec(rational(), 8).prop_map(|v| {
        CoeffTensor::from_independent([
            [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()],
            [v[4].clone(), v[5].clone(), v[6].clone(), v[7].clone()],
        ])
    })
}

fn matrix() -> impl Strategy<Value = Matrix2<Rational>> {
    prop::collection::vec(rational(), 4)
        .prop_map(|v| Matrix2::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()))
}

fn invertible() -> impl Strategy<Value = Matrix2<Rational>> {
    matrix().prop_filter("invertible", |m| !m.det().is_zero())
}

fn dense(dim: usize, rank: usize) -> impl Strategy<Value = DenseTensor<Rational>> {
    prop::collection::vec(rational(), dim.pow(rank as u32)).prop_map(move |v| {
        let mut it = v.into_iter();
        DenseTensor::from_fn(dim, rank, |_| it.next().unwrap())
    })
}

fn spec() -> impl Strategy<Value = PseudoSpec> {
    (0usize..=2, 0usize..=4, -2i32..=2, prop::bool::ANY)
        .prop_filter("rank 1..=4", |(r, s, _, _)| (1..=4).contains(&(r + s)))
        .prop_map(|(r, s, m, wide)| PseudoSpec::new(r, s, m, if wide { 4 } else { 2 }))
}

fn spec_and_array() -> impl Strategy<Value = (PseudoSpec, DenseTensor<Rational>)> {
    spec().prop_flat_map(|sp| (Just(sp), dense(sp.dim, sp.rank())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn pseudotensor_law_is_functorial((sp, a) in spec_and_array(), s1 in invertible(), s2 in invertible()) {
        let stepwise = pseudo_transform(&pseudo_transform(&a, sp, &s1).unwrap(), sp, &s2).unwrap();
        prop_assert_eq!(stepwise, pseudo_transform(&a, sp, &s2.mul(&s1)).unwrap());
    }

    #[test]
    fn weights_add_under_outer_product(s in invertible()) {
        let d = PseudoD::dense::<Rational>();
        let outer = DenseTensor::from_fn(2, 4, |t| d.get(&t[..2]).clone() * d.get(&t[2..]));
        let law = pseudo_transform(&outer, PseudoSpec::new(0, 4, -2, 2), &s).unwrap();
        prop_assert_eq!(&law, &outer);
        let one = pseudo_transform(&d, PseudoSpec::new(0, 2, -1, 2), &s).unwrap();
        let product = DenseTensor::from_fn(2, 4, |t| one.get(&t[..2]).clone() * one.get(&t[2..]));
        prop_assert_eq!(product, pseudo_transform(&outer, PseudoSpec::new(0, 4, -2, 2), &s).unwrap());
    }

    #[test]
    fn hat_is_multiplicative(a in matrix(), b in matrix()) {
        prop_assert_eq!(hat_matrix(&a.mul(&b)), hat_matrix(&a).mul(&hat_matrix(&b)));
        prop_assert_eq!(hat_matrix(&a).det(), a.det() * a.det());
    }

    #[test]
    fn coordinate_change_is_a_group_action(f in tensor(), s1 in invertible(), s2 in invertible()) {
        let stepwise = change_coordinates(&change_coordinates(&f, &s1).unwrap(), &s2).unwrap();
        prop_assert_eq!(stepwise, change_coordinates(&f, &s1.mul(&s2)).unwrap());
        prop_assert_eq!(change_coordinates(&f, &Matrix2::identity()).unwrap(), f.clone());
    }

    #[test]
    fn restore_undoes_change(f in tensor(), s in invertible()) {
        let moved = change_coordinates(&f, &s).unwrap();
        prop_assert_eq!(restore_coordinates(&moved, &s).unwrap(), f.clone());
        let via_law = pseudo_transform(moved.dense(), PseudoSpec::new(1, 3, 0, 2), &s).unwrap();
        prop_assert_eq!(&via_law, f.dense());
    }

    #[test]
    fn one_sided_compositions_commute(f in tensor(), s in invertible(), t in matrix()) {
        let left_then_right = right_composed_tensor(&left_composed_tensor(&f, &s), &t);
        let right_then_left = left_composed_tensor(&right_composed_tensor(&f, &t), &s);
        prop_assert_eq!(&left_then_right, &right_then_left);
        prop_assert_eq!(left_then_right, equivalence_tensor(&f, &s, &t));
    }

    #[test]
    fn forms_are_fully_symmetric(f in tensor()) {
        for w in derived_forms(&f).unwrap() {
            prop_assert!(w.to_dense().is_fully_symmetric());
        }
    }

    #[test]
    fn symmetrized_forms_equal_derived(f in tensor()) {
        for (k, d) in derived_forms(&f).unwrap().into_iter().enumerate() {
            prop_assert_eq!(symmetrized_form(k + 1, &f).unwrap(), d);
        }
    }

    #[test]
    fn printed_forms_are_quartic_or_zero(f in tensor()) {
        let g = g_determinants(&f);
        for q in 1..=6 {
            let p = printed_form(q, &g).unwrap().to_poly();
            prop_assert!(p.is_zero() || p.degree() == Some(4));
        }
    }

    #[test]
    fn forms_transform_as_tensors(f in tensor(), s in invertible()) {
        let report = check_tensoriality(&f, &s, FormSource::Derived).unwrap();
        prop_assert!(report.holds(), "{:?}", report.summary());
    }

    #[test]
    fn composed_determinants_match_forms(f in tensor(), t in matrix()) {
        for row in composed_determinant_check(&f, &t, FormSource::Derived).unwrap() {
            prop_assert_eq!(&row.lhs, &row.rhs, "G{}", row.label);
        }
    }

    #[test]
    fn polynomial_and_tensor_composition_agree(f in tensor(), t in matrix(), a in prop::collection::vec(rational(), 2)) {
        let map = CubicMap::new(
            quartic_forms::cubicmap::cubic_polys(&f)[0].clone(),
            quartic_forms::cubicmap::cubic_polys(&f)[1].clone(),
        ).unwrap();
        let phi = AffineMap { linear: t.clone(), shift: [a[0].clone(), a[1].clone()] };
        prop_assert_eq!(coeff_tensor(&compose_right(&map, &phi)), right_composed_tensor(&f, &t));
        if let Ok(inv) = t.inverse() {
            prop_assert_eq!(coeff_tensor(&compose_left(&map, &phi).unwrap()), left_composed_tensor(&f, &inv));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn right_law_holds_for_symbolic_matrix(f in tensor()) {
        let lifted = f.map(PolyScalar::to_poly);
        let t = Matrix2::<MultiPoly>::symbolic("T");
        let report = right_law_check(&lifted, &t, FormSource::Derived).unwrap();
        prop_assert!(report.holds(), "{:?}", report.summary());
    }

    #[test]
    fn composed_identity_for_symbolic_matrix(f in tensor()) {
        let lifted = f.map(PolyScalar::to_poly);
        let t = Matrix2::<MultiPoly>::symbolic("T");
        for row in composed_determinant_check(&lifted, &t, FormSource::Derived).unwrap() {
            prop_assert_eq!(&row.lhs, &row.rhs);
            prop_assert_eq!(row.lhs.degree(), if row.lhs.is_zero() { None } else { Some(6) });
        }
    }
}
