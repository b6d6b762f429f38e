use super::*;
use crate::fixtures;
use crate::report::{SearchBudget, Status};

#[test]
fn point3_validates() {
    let t = fixtures::point3();
    assert!(validate_category(&t.cat).all_pass());
    assert!(validate_triple(&t).all_pass());
}

#[test]
fn a2_validates() {
    let t = fixtures::a2();
    assert!(validate_category(&t.cat).all_pass());
    assert!(validate_triple(&t).all_pass());
}

#[test]
fn ardual_validates() {
    let t = fixtures::ardual();
    assert!(validate_category(&t.cat).all_pass());
    assert!(validate_triple(&t).all_pass());
}

#[test]
fn corrupted_identity_fails_identity_law() {
    let field = crate::exactla::FieldSpec::prime(3).unwrap();
    let pres = TriplePresentation {
        objects: vec!["pt".into()],
        homs: vec![("pt".into(), "pt".into(), vec!["one".into()])],
        comps: vec![(
            "one".into(),
            "one".into(),
            vec![("one".into(), field.from_i64(1))],
        )],
        // claims 1 = 2·one, so 1∘1 = 4·(one∘one) = one ≠ 2·one
        ids: vec![("pt".into(), vec![("one".into(), field.from_i64(2))])],
        ..Default::default()
    };
    let t = BimoduleTriple::principal(pres.build(field).unwrap().cat);
    let rep = validate_category(&t.cat);
    assert_eq!(rep.find("identity_laws").unwrap().status, Status::Fail);
}

#[test]
fn zero_differentiation_satisfies_leibniz() {
    let t = fixtures::dual3();
    assert!(validate_triple(&t).all_pass());
}

#[test]
fn formal_derivative_on_dual3_violates_leibniz() {
    // ∂t = 1 forces ∂(t∘t) = 2t ≠ 0, but t² = 0
    let t = fixtures::dual3_bad_diff();
    let rep = validate_triple(&t);
    let leibniz = rep.find("leibniz_rule").unwrap();
    assert_eq!(leibniz.status, Status::Fail);
    assert!(leibniz.details.iter().any(|d| d.contains("t ∘ t")));
}

#[test]
fn nonzero_diff_of_identity_fails() {
    let field = crate::exactla::FieldSpec::prime(3).unwrap();
    let mut pres = TriplePresentation {
        objects: vec!["pt".into()],
        homs: vec![("pt".into(), "pt".into(), vec!["one".into()])],
        comps: vec![(
            "one".into(),
            "one".into(),
            vec![("one".into(), field.from_i64(1))],
        )],
        ids: vec![("pt".into(), vec![("one".into(), field.from_i64(1))])],
        ..Default::default()
    };
    pres.diffs = vec![("one".into(), vec![("one".into(), field.from_i64(1))])];
    let t = pres.build(field).unwrap();
    let rep = validate_triple(&t);
    assert_eq!(rep.find("diff_kills_identities").unwrap().status, Status::Fail);
}

#[test]
fn double_of_point3_is_valid_and_has_expected_homs() {
    let t = fixtures::point3();
    let d = double_bimodule(&t.cat);
    assert!(validate_category(&d.cat).all_pass());
    assert!(validate_triple(&d).all_pass());
    // one pair object, hom dimension 2 (a component each side), elements dim 1
    assert_eq!(d.cat.object_count(), 1);
    assert_eq!(d.cat.hom_dim(0, 0), 2);
    assert_eq!(d.bim.el_dim(0, 0), 1);
}

#[test]
fn double_morphism_spaces_are_commuting_squares() {
    // objects of El(double) over the pair object are scalars x; a morphism
    // (a,b): x → y satisfies b·x = y·a
    let t = fixtures::point3();
    let d = double_bimodule(&t.cat);
    let f = d.cat.field;
    let hom_of = |xv: i64, yv: i64| -> usize {
        // solve for (a,b) with b·x = y·a over the basis of the pair homs
        let x = Mat::from_i64(f, &[&[xv]]);
        let y = Mat::from_i64(f, &[&[yv]]);
        let mut m = Mat::zero(f, 1, 2);
        for k in 0..2 {
            let a = d.cat.basis_vec(0, 0, k);
            let ax = d.bim.right(&d.cat, 0, 0, 0, &x, &a);
            let ya = d.bim.left(&d.cat, 0, 0, 0, &a, &y);
            let diff = ya.sub(&ax);
            m.set(0, k, diff.at(0, 0).clone());
        }
        m.kernel_basis().len()
    };
    // x = 1, y = 0: only (a, 0)
    assert_eq!(hom_of(1, 0), 1);
    // x = y = 1: pairs a = b
    assert_eq!(hom_of(1, 1), 1);
}

#[test]
fn identity_bifunctor_is_equivalence() {
    let t = fixtures::point3();
    let f = Bifunctor::identity(&t);
    assert!(validate_bifunctor(&t, &t, &f).all_pass());
    let rep = is_equivalence(&f, &t, &t, &SearchBudget::default(), &[]);
    assert!(rep.all_pass());
}

#[test]
fn inclusion_into_bigger_homs_fails_fully_faithful() {
    // map point3 into dual3 sending one ↦ one: hom dimensions grow 1 → 2
    let src = fixtures::point3();
    let dst = fixtures::dual3();
    let f = dst.cat.field;
    let mut hom_mats = std::collections::BTreeMap::new();
    hom_mats.insert((0, 0), Mat::from_i64(f, &[&[1], &[0]]));
    let mut bim_mats = std::collections::BTreeMap::new();
    bim_mats.insert((0, 0), Mat::from_i64(f, &[&[1], &[0]]));
    let func = Bifunctor {
        obj_map: vec![0],
        hom_mats,
        bim_mats,
    };
    assert!(validate_bifunctor(&src, &dst, &func).all_pass());
    let rep = is_equivalence(&func, &src, &dst, &SearchBudget::default(), &[]);
    assert_eq!(rep.find("fully_faithful").unwrap().status, Status::Fail);
}

#[test]
fn invert_morphism_works_on_dual3_units() {
    let t = fixtures::dual3();
    let f = t.field();
    // 1 + t is invertible with inverse 1 - t
    let u = Mat::from_i64(f, &[&[1], &[1]]);
    let inv = invert_morphism(&t.cat, 0, 0, &u).unwrap();
    assert_eq!(inv, Mat::from_i64(f, &[&[1], &[2]]));
    // t is not invertible
    assert!(invert_morphism(&t.cat, 0, 0, &t.cat.basis_vec(0, 0, 1)).is_none());
}

mod proptests {
    use crate::exactla::{FieldSpec, Mat};
    use proptest::prelude::*;

    fn arb_mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
        proptest::collection::vec(0i64..3, rows * cols).prop_map(move |v| {
            let f = FieldSpec::prime(3).unwrap();
            let entries = v.into_iter().map(|x| f.from_i64(x)).collect();
            Mat::from_entries(f, rows, cols, entries)
        })
    }

    proptest! {
        #[test]
        fn solve_recovers_consistent_systems(a in arb_mat(3, 4), x in arb_mat(4, 1)) {
            let b = a.mul(&x);
            let solved = a.solve(&b).expect("consistent by construction");
            prop_assert_eq!(a.mul(&solved), b);
        }

        #[test]
        fn kernel_count_is_cols_minus_rank(a in arb_mat(3, 5)) {
            let k = a.kernel_basis();
            prop_assert_eq!(k.len(), 5 - a.rank());
            for v in &k {
                prop_assert!(a.mul(v).is_zero());
            }
        }

        #[test]
        fn inverse_is_two_sided(a in arb_mat(3, 3)) {
            if a.is_invertible() {
                let inv = a.inverse().unwrap();
                let f = FieldSpec::prime(3).unwrap();
                prop_assert_eq!(inv.mul(&a), Mat::identity(f, 3));
                prop_assert_eq!(a.mul(&inv), Mat::identity(f, 3));
            }
        }
    }
}
