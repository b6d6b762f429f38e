use super::*;
use crate::fixtures;
use crate::report::SearchBudget;

fn z2triv_crossed() -> CrossedTriple {
    let t = fixtures::point3();
    let g = fixtures::z2();
    let act = fixtures::trivial_action(&t, &g);
    let lam = fixtures::trivial_factors(&t, &g, &act);
    build_crossed(&t, &g, &act, &lam)
}

fn z4triv_crossed() -> CrossedTriple {
    let t = fixtures::point5();
    let g = fixtures::z4();
    let act = fixtures::trivial_action(&t, &g);
    let lam = fixtures::trivial_factors(&t, &g, &act);
    build_crossed(&t, &g, &act, &lam)
}

#[test]
fn characters_of_z2_over_f3() {
    let g = fixtures::z2();
    let f = crate::exactla::FieldSpec::prime(3).unwrap();
    let chars = character_group(&g, f, None).unwrap();
    assert_eq!(chars.zeta, f.from_i64(2));
    assert_eq!(chars.characters.len(), 2);
    let values: Vec<Vec<String>> = chars
        .characters
        .iter()
        .map(|c| c.iter().map(|s| format!("{s}")).collect())
        .collect();
    assert!(values.contains(&vec!["1".to_string(), "1".to_string()]));
    assert!(values.contains(&vec!["1".to_string(), "2".to_string()]));
}

#[test]
fn characters_of_z4_over_f5_and_trivial_group() {
    let g = fixtures::z4();
    let f = crate::exactla::FieldSpec::prime(5).unwrap();
    let chars = character_group(&g, f, Some(f.from_i64(2))).unwrap();
    assert_eq!(chars.characters.len(), 4);
    // ζ = 2 has order exactly 4 over F_5
    assert_eq!(chars.zeta, f.from_i64(2));

    let triv = fixtures::trivial_group();
    let chars = character_group(&triv, f, None).unwrap();
    assert_eq!(chars.characters.len(), 1);
}

#[test]
fn no_primitive_root_is_refused() {
    let g = fixtures::z2();
    let f2 = crate::exactla::FieldSpec::prime(2).unwrap();
    assert!(character_group(&g, f2, None).is_err());
    // wrong ζ is refused too
    let f5 = crate::exactla::FieldSpec::prime(5).unwrap();
    assert!(character_group(&fixtures::z4(), f5, Some(f5.from_i64(4))).is_err());
}

#[test]
fn hat_action_validates_and_scales_tags() {
    let ct = z2triv_crossed();
    let f = ct.base.field();
    let chars = character_group(&ct.group, f, None).unwrap();
    let (ghat, act, lam) = hat_action(&ct, &chars);
    assert!(crate::groupact::validate_group(&ghat).all_pass());
    assert!(crate::groupact::validate_action(&ct.triple, &ghat, &act).all_pass());
    assert!(crate::groupact::validate_factor_system(&ct.triple, &ghat, &act, &lam).all_pass());
    // the sign character negates the [g] tag
    let chi1 = chars
        .characters
        .iter()
        .position(|c| !c[1].is_one())
        .unwrap();
    let tag_g = ct.hom_tagged(0, 0, 1, &ct.base.cat.basis_vec(0, 0, 0));
    let moved = act.act_hom(&ct.triple, chi1, 0, 0, &tag_g);
    assert_eq!(moved, tag_g.scale(&f.from_i64(-1)));
}

#[test]
fn idempotents_of_z2_double() {
    let ct = z2triv_crossed();
    let f = ct.base.field();
    let chars = character_group(&ct.group, f, None).unwrap();
    let cd = char_double(&ct, &chars).unwrap();
    let rep = check_idempotents(&ct, &cd);
    assert!(rep.all_pass(), "{rep:?}");
    // e_1 = 2[χ0] + 2[χ1], e_g = 2[χ0] + [χ1] in the double coordinates
    // (characters are sorted, so χ0 = trivial comes first)
    let e1 = &cd.idempotents[0][0];
    let eg = &cd.idempotents[1][0];
    let expect = |chi0: i64, chi1: i64| -> Mat {
        let unit = ct.triple.cat.id_coords(0).clone();
        let a = cd.double.hom_tagged(0, 0, 0, &unit.scale(&f.from_i64(chi0)));
        let b = cd.double.hom_tagged(0, 0, 1, &unit.scale(&f.from_i64(chi1)));
        a.add(&b)
    };
    assert_eq!(e1, &expect(2, 2));
    assert_eq!(eg, &expect(2, 1));
}

#[test]
fn idempotents_of_z4_double_conjugate_exactly() {
    let ct = z4triv_crossed();
    let chars = character_group(&ct.group, ct.base.field(), Some(ct.base.field().from_i64(2))).unwrap();
    let cd = char_double(&ct, &chars).unwrap();
    let rep = check_idempotents(&ct, &cd);
    assert!(rep.all_pass(), "{rep:?}");
}

#[test]
fn char_double_refused_in_bad_characteristic() {
    let t = fixtures::point2();
    let g = fixtures::z2();
    let act = fixtures::trivial_action(&t, &g);
    let lam = fixtures::trivial_factors(&t, &g, &act);
    let ct = build_crossed(&t, &g, &act, &lam);
    assert!(character_group(&g, t.field(), None).is_err());
    let _ = ct;
}

#[test]
fn theta_is_an_equivalence_on_z2triv() {
    let ct = z2triv_crossed();
    let t = ct.base.clone();
    let chars = character_group(&ct.group, t.field(), None).unwrap();
    let cd = char_double(&ct, &chars).unwrap();
    assert!(check_idempotents(&ct, &cd).all_pass());
    let th = theta(&t, &ct, &cd, &SearchBudget::default());
    assert!(th.report.all_pass(), "{:?}", th.report);
    // dim AGĜ(pt,pt) = 4, corner dim = 1 = dim A(pt,pt)
    assert_eq!(cd.double.triple.cat.hom_dim(0, 0), 4);
    assert_eq!(th.corner.triple.cat.hom_dim(0, 0), 1);
}

#[test]
fn theta_is_an_equivalence_on_z4triv() {
    let ct = z4triv_crossed();
    let t = ct.base.clone();
    let chars = character_group(&ct.group, t.field(), Some(t.field().from_i64(2))).unwrap();
    let cd = char_double(&ct, &chars).unwrap();
    assert!(check_idempotents(&ct, &cd).all_pass());
    let th = theta(&t, &ct, &cd, &SearchBudget::default());
    assert!(th.report.all_pass(), "{:?}", th.report);
    assert_eq!(cd.double.triple.cat.hom_dim(0, 0), 16);
    assert_eq!(th.corner.triple.cat.hom_dim(0, 0), 1);
}

#[test]
fn trivial_group_theta_is_identity_like() {
    let t = fixtures::point3();
    let g = fixtures::trivial_group();
    let act = fixtures::trivial_action(&t, &g);
    let lam = fixtures::trivial_factors(&t, &g, &act);
    let ct = build_crossed(&t, &g, &act, &lam);
    let chars = character_group(&g, t.field(), None).unwrap();
    let cd = char_double(&ct, &chars).unwrap();
    let th = theta(&t, &ct, &cd, &SearchBudget::default());
    assert!(th.report.all_pass());
    assert_eq!(th.corner.triple.cat.hom_dim(0, 0), 1);
}

#[test]
fn element_restoration_dims_on_z2triv() {
    let ct = z2triv_crossed();
    let t = ct.base.clone();
    let chars = character_group(&ct.group, t.field(), None).unwrap();
    let cd = char_double(&ct, &chars).unwrap();
    let th = theta(&t, &ct, &cd, &SearchBudget::default());
    let mk = |v: i64| {
        let carrier = crate::fincat::AddObject::plain(&t.cat, vec![0]);
        let mut elem =
            crate::fincat::BlockMat::zero_el(&t.cat, &t.bim, vec![0], vec![0]);
        elem.set_block(0, 0, Mat::from_i64(t.field(), &[&[v]]));
        ElObject::new(&t, carrier, elem).unwrap()
    };
    let pairs = vec![
        (mk(0), mk(0)),
        (mk(1), mk(1)),
        (mk(1), mk(0)),
        (mk(2), mk(1)),
    ];
    let rep = check_el_restoration(&t, &ct, &cd, &th, &pairs);
    assert!(rep.all_pass(), "{rep:?}");
}
