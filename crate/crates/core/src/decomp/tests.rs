use super::*;
use crate::crossed::build_crossed;
use crate::exactla::FieldSpec;
use crate::fincat::AddObject;
use crate::fixtures;
use crate::report::Status;

fn budget() -> SearchBudget {
    SearchBudget::default()
}

fn scalar_algebra(f: FieldSpec) -> Algebra {
    let unit = Mat::identity(f, 1).column(0);
    Algebra::new(f, 1, vec![unit.clone()], unit)
}

fn group_algebra(f: FieldSpec, g: &crate::groupact::FiniteGroup) -> Algebra {
    let d = scalar_algebra(f);
    let ds: Vec<Mat> = (0..g.order()).map(|_| Mat::identity(f, 1)).collect();
    let mus: Vec<Mat> = (0..g.order() * g.order()).map(|_| d.unit.clone()).collect();
    nu::twisted_group_algebra(&d, g, &ds, &mus)
}

mod nu {
    pub use super::super::nu::twisted_group_algebra;
}

#[test]
fn radical_of_dual_numbers_is_t() {
    let t = fixtures::dual3();
    let end = EndAlgebra::of(&t.cat, &AddObject::plain(&t.cat, vec![0]));
    let j = radical(&end.algebra).unwrap();
    assert_eq!(j.dim(), 1);
    // the radical is spanned by t (second coordinate)
    assert!(j.contains(&Mat::from_i64(t.field(), &[&[0], &[1]])));
}

#[test]
fn radical_of_group_algebras() {
    let f3 = FieldSpec::prime(3).unwrap();
    let f2 = FieldSpec::prime(2).unwrap();
    let z2 = fixtures::z2();
    // Maschke case: 3 does not divide 2
    let a3 = group_algebra(f3, &z2);
    assert_eq!(radical(&a3).unwrap().dim(), 0);
    // modular case: rad F_2[Z/2] = span{1 + g}
    let a2 = group_algebra(f2, &z2);
    let j = radical(&a2).unwrap();
    assert_eq!(j.dim(), 1);
    assert!(j.contains(&Mat::from_i64(f2, &[&[1], &[1]])));
}

#[test]
fn radical_chain_handles_matrix_algebra_over_f2() {
    // M_2(F_2) in its regular representation has an identically zero trace
    // form; the characteristic-coefficient chain must still find rad = 0
    let f = FieldSpec::prime(2).unwrap();
    // structure constants of M_2: basis E11, E12, E21, E22
    let e = |i: usize, j: usize| -> usize { i * 2 + j };
    let mut mult = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            let (i, j) = (a / 2, a % 2);
            let (k, l) = (b / 2, b % 2);
            let mut out = Mat::zero(f, 4, 1);
            if j == k {
                out.set(e(i, l), 0, f.one());
            }
            mult.push(out);
        }
    }
    let mut unit = Mat::zero(f, 4, 1);
    unit.set(e(0, 0), 0, f.one());
    unit.set(e(1, 1), 0, f.one());
    let m2 = Algebra::new(f, 4, mult, unit);
    assert!(m2.validate().all_pass());
    assert_eq!(radical(&m2).unwrap().dim(), 0);
}

#[test]
fn radical_over_q_uses_trace_form() {
    // Q[t]/(t²) as a 2-dimensional algebra
    let f = FieldSpec::rational();
    let mut mult = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let mut out = Mat::zero(f, 2, 1);
            if i + j < 2 {
                out.set(i + j, 0, f.one());
            }
            mult.push(out);
        }
    }
    let mut unit = Mat::zero(f, 2, 1);
    unit.set(0, 0, f.one());
    let a = Algebra::new(f, 2, mult, unit);
    let j = radical(&a).unwrap();
    assert_eq!(j.dim(), 1);
    assert!(j.contains(&Mat::from_i64(f, &[&[0], &[1]])));
}

#[test]
fn category_radical_blocks_of_a2_and_ardual() {
    let t = fixtures::a2();
    let o = |i: usize| AddObject::plain(&t.cat, vec![i]);
    assert_eq!(radical_of_pair(&t.cat, &o(0), &o(1)).unwrap().len(), 1);
    assert_eq!(radical_of_pair(&t.cat, &o(0), &o(0)).unwrap().len(), 0);
    assert_eq!(radical_of_pair(&t.cat, &o(1), &o(1)).unwrap().len(), 0);

    let t = fixtures::ardual();
    let s = AddObject::plain(&t.cat, vec![0]);
    let p = AddObject::plain(&t.cat, vec![1]);
    assert_eq!(radical_of_pair(&t.cat, &p, &p).unwrap().len(), 1); // span{t}
    assert_eq!(radical_of_pair(&t.cat, &s, &p).unwrap().len(), 1); // span{ι}
    assert_eq!(radical_of_pair(&t.cat, &p, &s).unwrap().len(), 1); // span{π}
    assert_eq!(radical_of_pair(&t.cat, &s, &s).unwrap().len(), 0);
}

#[test]
fn category_radical_is_consistent_across_ambients() {
    // the (S,P) block computed inside End(S⊕P) matches the one inside
    // End(S⊕P⊕P)
    let t = fixtures::ardual();
    let s = AddObject::plain(&t.cat, vec![0]);
    let p = AddObject::plain(&t.cat, vec![1]);
    let small = radical_of_pair(&t.cat, &s, &p).unwrap();
    let big_ambient = AddObject::plain(&t.cat, vec![0, 1, 1]);
    let end = EndAlgebra::of(&t.cat, &big_ambient);
    let j = radical(&end.algebra).unwrap();
    // project each radical basis element to the (P-slot-1, S-slot) block
    let f = t.field();
    let mut projected = Vec::new();
    for coeffs in j.basis() {
        let block = end.to_block(&t.cat, &Mat::col(f, coeffs.entries().to_vec()));
        projected.push(block.block(1, 0).clone());
    }
    let span = crate::exactla::Subspace::from_vectors(f, t.cat.hom_dim(0, 1), &projected);
    assert_eq!(span.dim(), small.len());
    for b in &small {
        assert!(span.contains(b.block(0, 0)));
    }
}

#[test]
fn lift_idempotents_in_semisimple_group_algebra() {
    let f3 = FieldSpec::prime(3).unwrap();
    let a = group_algebra(f3, &fixtures::z2());
    let lift = lift_idempotents(&a, &budget()).unwrap();
    assert_eq!(lift.idempotents.len(), 2);
    // e± = 2(1 ± g) up to order
    let e_plus = Mat::from_i64(f3, &[&[2], &[2]]);
    let e_minus = Mat::from_i64(f3, &[&[2], &[1]]);
    assert!(lift.idempotents.contains(&e_plus));
    assert!(lift.idempotents.contains(&e_minus));
}

#[test]
fn field_extension_has_only_the_unit_idempotent() {
    // the crossed algebra of the sign cocycle is F_9: one primitive idempotent
    let t = fixtures::point3();
    let g = fixtures::z2();
    let act = fixtures::trivial_action(&t, &g);
    let lam = fixtures::z2tw_factors(&t, &g, &act);
    let ct = build_crossed(&t, &g, &act, &lam);
    let end = crate::decomp::nu::twisted_group_algebra(
        &scalar_algebra(t.field()),
        &g,
        &[Mat::identity(t.field(), 1), Mat::identity(t.field(), 1)],
        &[
            Mat::from_i64(t.field(), &[&[1]]),
            Mat::from_i64(t.field(), &[&[1]]),
            Mat::from_i64(t.field(), &[&[1]]),
            Mat::from_i64(t.field(), &[&[2]]),
        ],
    );
    let lift = lift_idempotents(&end, &budget()).unwrap();
    assert_eq!(lift.idempotents.len(), 1);
    assert_eq!(lift.idempotents[0], end.unit);
    let _ = ct;
}

#[test]
fn local_modular_algebra_has_only_the_unit_idempotent() {
    let f2 = FieldSpec::prime(2).unwrap();
    let a = group_algebra(f2, &fixtures::z2());
    let lift = lift_idempotents(&a, &budget()).unwrap();
    assert_eq!(lift.idempotents.len(), 1);
    assert_eq!(lift.idempotents[0], a.unit);
}

#[test]
fn count_simple_components_examples() {
    let f3 = FieldSpec::prime(3).unwrap();
    // F_3 × F_3
    let a = group_algebra(f3, &fixtures::z2());
    assert_eq!(count_simple_components(&a, &budget()).unwrap(), 2);
    // F_9 over F_3: the sign-twisted algebra
    let f9 = crate::decomp::nu::twisted_group_algebra(
        &scalar_algebra(f3),
        &fixtures::z2(),
        &[Mat::identity(f3, 1), Mat::identity(f3, 1)],
        &[
            Mat::from_i64(f3, &[&[1]]),
            Mat::from_i64(f3, &[&[1]]),
            Mat::from_i64(f3, &[&[1]]),
            Mat::from_i64(f3, &[&[2]]),
        ],
    );
    assert_eq!(count_simple_components(&f9, &budget()).unwrap(), 1);
    // F_2 itself
    let f2 = FieldSpec::prime(2).unwrap();
    assert_eq!(count_simple_components(&scalar_algebra(f2), &budget()).unwrap(), 1);
}

#[test]
fn krull_schmidt_on_plain_sums() {
    let t = fixtures::point3();
    let x = AddObject::plain(&t.cat, vec![0, 0]);
    let rep = krull_schmidt(&t.cat, &x, &budget()).unwrap();
    assert_eq!(rep.summands.len(), 2);
    assert_eq!(rep.nu, 1);
    assert_eq!(rep.multiplicities, vec![2]);
    assert_eq!(rep.iso_witnesses.len(), 1);
}

#[test]
fn krull_schmidt_in_crossed_categories() {
    // trivial cocycle: the point splits into two non-isomorphic summands
    let t = fixtures::point3();
    let g = fixtures::z2();
    let act = fixtures::trivial_action(&t, &g);
    let lam = fixtures::trivial_factors(&t, &g, &act);
    let ct = build_crossed(&t, &g, &act, &lam);
    let x = AddObject::plain(&ct.triple.cat, vec![0]);
    let rep = krull_schmidt(&ct.triple.cat, &x, &budget()).unwrap();
    assert_eq!(rep.summands.len(), 2);
    assert_eq!(rep.nu, 2);

    // sign cocycle: F_9 is local, the point stays indecomposable
    let lam = fixtures::z2tw_factors(&t, &g, &act);
    let ct = build_crossed(&t, &g, &act, &lam);
    let rep = krull_schmidt(&ct.triple.cat, &x, &budget()).unwrap();
    assert_eq!(rep.summands.len(), 1);
    assert_eq!(rep.nu, 1);
}

#[test]
fn krull_schmidt_uniqueness_under_permuted_bases() {
    let t = fixtures::ardual();
    let x1 = AddObject::plain(&t.cat, vec![0, 1]);
    let x2 = AddObject::plain(&t.cat, vec![1, 0]);
    let r1 = krull_schmidt(&t.cat, &x1, &budget()).unwrap();
    let r2 = krull_schmidt(&t.cat, &x2, &budget()).unwrap();
    assert_eq!(r1.nu, r2.nu);
    let mut m1 = r1.multiplicities.clone();
    let mut m2 = r2.multiplicities.clone();
    m1.sort();
    m2.sort();
    assert_eq!(m1, m2);
    let mut d1: Vec<usize> = r1.summands.iter().map(|s| s.corner_dim).collect();
    let mut d2: Vec<usize> = r2.summands.iter().map(|s| s.corner_dim).collect();
    d1.sort();
    d2.sort();
    assert_eq!(d1, d2);
}

#[test]
fn stabilizers_of_fixture_actions() {
    let t = fixtures::point3();
    let g = fixtures::z2();
    let act = fixtures::trivial_action(&t, &g);
    let stab = stabilizer(&t, &g, &act, 0, &budget()).unwrap();
    assert_eq!(stab.members, vec![0, 1]);

    let t = fixtures::double_point3();
    let act = fixtures::swap_action(&t, &g);
    let stab = stabilizer(&t, &g, &act, 0, &budget()).unwrap();
    assert_eq!(stab.members, vec![0]);

    let t = fixtures::dual3();
    let act = fixtures::dual3_action(&t, &g);
    let stab = stabilizer(&t, &g, &act, 0, &budget()).unwrap();
    assert_eq!(stab.members, vec![0, 1]);
    assert_eq!(stab.witnesses[&1], *t.cat.id_coords(0));
}

#[test]
fn prop42_identifies_quotients() {
    // full-stabilizer case: the inclusion is the identity
    let t = fixtures::point3();
    let g = fixtures::z2();
    let act = fixtures::trivial_action(&t, &g);
    let lam = fixtures::trivial_factors(&t, &g, &act);
    let stab = stabilizer(&t, &g, &act, 0, &budget()).unwrap();
    let rep = check_prop42(&t, &g, &act, &lam, 0, &stab).unwrap();
    assert!(rep.all_pass());

    // swap case: H = {1}, ν_G(p1) = 1
    let t = fixtures::double_point3();
    let act = fixtures::swap_action(&t, &g);
    let lam = fixtures::trivial_factors(&t, &g, &act);
    let stab = stabilizer(&t, &g, &act, 0, &budget()).unwrap();
    let rep = check_prop42(&t, &g, &act, &lam, 0, &stab).unwrap();
    assert!(rep.all_pass());

    // mixed case: V4 acting through the swap, H = {1, ab}
    let g4 = fixtures::v4();
    let act4 = fixtures::v4_swap_action(&t, &g4);
    let lam4 = fixtures::trivial_factors(&t, &g4, &act4);
    let stab4 = stabilizer(&t, &g4, &act4, 0, &budget()).unwrap();
    assert_eq!(stab4.members.len(), 2);
    let rep = check_prop42(&t, &g4, &act4, &lam4, 0, &stab4).unwrap();
    assert!(rep.all_pass());
}

#[test]
fn reduce_cocycle_on_sign_twist() {
    let t = fixtures::point3();
    let g = fixtures::z2();
    let act = fixtures::trivial_action(&t, &g);
    let lam = fixtures::z2tw_factors(&t, &g, &act);
    let stab = stabilizer(&t, &g, &act, 0, &budget()).unwrap();
    let red = reduce_cocycle(&t, &g, &act, &lam, 0, &stab, &budget()).unwrap();
    assert!(red.report.all_pass());
    assert_eq!(red.d_quotient.dim, 1);
    assert_eq!(red.n_members, vec![0, 1]);
    assert_eq!(red.h0_members, vec![0, 1]);
    // μ_{g,g} = −1
    assert_eq!(red.mu[3], Mat::from_i64(t.field(), &[&[2]]));
}

#[test]
fn reduce_cocycle_on_v4_twist_has_trivial_h0() {
    let t = fixtures::point5();
    let g = fixtures::v4();
    let act = fixtures::trivial_action(&t, &g);
    let lam = fixtures::v4tw_factors(&t, &g, &act);
    let stab = stabilizer(&t, &g, &act, 0, &budget()).unwrap();
    let red = reduce_cocycle(&t, &g, &act, &lam, 0, &stab, &budget()).unwrap();
    assert!(red.report.all_pass());
    assert_eq!(red.h0_members, vec![0]);

    // trivial cocycle: H₀ = H
    let lam = fixtures::trivial_factors(&t, &g, &act);
    let red = reduce_cocycle(&t, &g, &act, &lam, 0, &stab, &budget()).unwrap();
    assert_eq!(red.h0_members.len(), 4);
}

#[test]
fn nu_values_on_the_fixture_suite() {
    // trivial Z/2 on the F_3 point: F_3[Z/2] ≅ F_3 × F_3, ν = 2 = |H₀|
    let t = fixtures::point3();
    let g = fixtures::z2();
    let act = fixtures::trivial_action(&t, &g);
    let lam = fixtures::trivial_factors(&t, &g, &act);
    let rep = nu(&t, &g, &act, &lam, 0, &budget()).unwrap();
    assert!(rep.report.all_pass(), "{:?}", rep.report);
    assert_eq!(rep.nu, 2);
    assert_eq!(rep.h0_size, Some(2));

    // sign twist: F_9 is a field, ν = 1; the literal |H₀| count does not
    // apply (nonsplit twisted center) and must be reported skipped
    let lam = fixtures::z2tw_factors(&t, &g, &act);
    let rep = nu(&t, &g, &act, &lam, 0, &budget()).unwrap();
    assert!(!rep.report.any_fail(), "{:?}", rep.report);
    assert_eq!(rep.nu, 1);
    assert_eq!(rep.h0_size, Some(2));
    let literal = rep.report.find("cyclic_count").unwrap();
    assert_eq!(literal.status, Status::Skipped);

    // V4 twist over F_5: M_2(F_5), ν = 1 = |H₀|
    let t5 = fixtures::point5();
    let g4 = fixtures::v4();
    let act5 = fixtures::trivial_action(&t5, &g4);
    let lam5 = fixtures::v4tw_factors(&t5, &g4, &act5);
    let rep = nu(&t5, &g4, &act5, &lam5, 0, &budget()).unwrap();
    assert!(rep.report.all_pass(), "{:?}", rep.report);
    assert_eq!(rep.nu, 1);
    assert_eq!(rep.h0_size, Some(1));

    // swap action: the stabilizer is trivial and p1 stays indecomposable
    let td = fixtures::double_point3();
    let actd = fixtures::swap_action(&td, &g);
    let lamd = fixtures::trivial_factors(&td, &g, &actd);
    let rep = nu(&td, &g, &actd, &lamd, 0, &budget()).unwrap();
    assert!(rep.report.all_pass(), "{:?}", rep.report);
    assert_eq!(rep.nu, 1);
}

#[test]
fn prop41_on_dual_numbers() {
    let t = fixtures::dual3();
    let g = fixtures::z2();
    let act = fixtures::dual3_action(&t, &g);
    let lam = fixtures::trivial_factors(&t, &g, &act);
    // rad A = span{t}: the crossed radical must be {t[1], t[g]} of dim 2 and
    // the crossed quotient ≅ F_3[Z/2] semisimple
    let rep = check_prop41(&t, &g, &act, &lam, &budget()).unwrap();
    assert!(rep.all_pass(), "{:?}", rep);

    let t = fixtures::point3();
    let act = fixtures::trivial_action(&t, &g);
    let lam = fixtures::trivial_factors(&t, &g, &act);
    let rep = check_prop41(&t, &g, &act, &lam, &budget()).unwrap();
    assert!(rep.all_pass());
}

#[test]
fn ardual_sequence_is_almost_split() {
    let t = fixtures::ardual();
    let s = AddObject::plain(&t.cat, vec![0]);
    let p = AddObject::plain(&t.cat, vec![1]);
    let declared = vec![s.clone(), p.clone()];
    let f = t.field();
    let mut iota = crate::fincat::BlockMat::zero_hom(&t.cat, vec![0], vec![1]);
    iota.set_block(0, 0, Mat::from_i64(f, &[&[1]]));
    let mut pi = crate::fincat::BlockMat::zero_hom(&t.cat, vec![1], vec![0]);
    pi.set_block(0, 0, Mat::from_i64(f, &[&[1]]));
    let rep = is_almost_split_sequence(&t.cat, &declared, &s, &p, &s, &iota, &pi).unwrap();
    assert!(rep.all_pass(), "{:?}", rep);

    // the identity is not almost split: it is not radical
    let rep = is_left_almost_split(&t.cat, &declared, &p, &p, &p.identity()).unwrap();
    assert_eq!(rep.find("in_radical").unwrap().status, Status::Fail);
}

#[test]
fn ardual_sequence_transfers_to_the_crossed_category() {
    let t = fixtures::ardual();
    let g = fixtures::z2();
    let act = fixtures::ardual_action(&t, &g);
    let lam = fixtures::trivial_factors(&t, &g, &act);
    assert!(crate::groupact::validate_action(&t, &g, &act).all_pass());
    assert!(crate::groupact::validate_factor_system(&t, &g, &act, &lam).all_pass());
    assert!(crate::centersep::is_separable(&t, &g, &act, &lam).is_some());
    let ct = build_crossed(&t, &g, &act, &lam);
    let c = &ct.triple.cat;
    let s = AddObject::plain(c, vec![0]);
    let p = AddObject::plain(c, vec![1]);
    let declared = vec![s.clone(), p.clone()];
    let f = t.field();
    let mut iota = crate::fincat::BlockMat::zero_hom(c, vec![0], vec![1]);
    iota.set_block(0, 0, ct.embed_hom(0, 1, &Mat::from_i64(f, &[&[1]])));
    let mut pi = crate::fincat::BlockMat::zero_hom(c, vec![1], vec![0]);
    pi.set_block(0, 0, ct.embed_hom(1, 0, &Mat::from_i64(f, &[&[1]])));
    let rep = is_almost_split_sequence(c, &declared, &s, &p, &s, &iota, &pi).unwrap();
    assert!(rep.all_pass(), "{:?}", rep);
}

#[test]
fn cor47_generators_transfer_and_missing_generators_fail() {
    let t = fixtures::ardual();
    let p = AddObject::plain(&t.cat, vec![1]);
    let s = AddObject::plain(&t.cat, vec![0]);
    let declared = vec![s.clone(), p.clone()];
    let f = t.field();
    // rad(P,_) is generated by t: P→P and π: P→S
    let mut tmor = crate::fincat::BlockMat::zero_hom(&t.cat, vec![1], vec![1]);
    tmor.set_block(0, 0, Mat::from_i64(f, &[&[0], &[1]]));
    let mut pi = crate::fincat::BlockMat::zero_hom(&t.cat, vec![1], vec![0]);
    pi.set_block(0, 0, Mat::from_i64(f, &[&[1]]));
    let gens = vec![(p.clone(), tmor.clone()), (s.clone(), pi.clone())];
    let rep = check_radical_generators(&t.cat, &declared, &p, &gens).unwrap();
    assert!(rep.all_pass(), "{:?}", rep);
    // dropping π loses rad(P,S)
    let rep = check_radical_generators(&t.cat, &declared, &p, &[(p.clone(), tmor)]).unwrap();
    assert!(rep.any_fail());

    // the [1]-images generate the crossed radical (separable action)
    let g = fixtures::z2();
    let act = fixtures::ardual_action(&t, &g);
    let lam = fixtures::trivial_factors(&t, &g, &act);
    let ct = build_crossed(&t, &g, &act, &lam);
    let c = &ct.triple.cat;
    let pc = AddObject::plain(c, vec![1]);
    let sc = AddObject::plain(c, vec![0]);
    let declared_c = vec![sc.clone(), pc.clone()];
    let mut tc = crate::fincat::BlockMat::zero_hom(c, vec![1], vec![1]);
    tc.set_block(0, 0, ct.embed_hom(1, 1, &Mat::from_i64(f, &[&[0], &[1]])));
    let mut pic = crate::fincat::BlockMat::zero_hom(c, vec![1], vec![0]);
    pic.set_block(0, 0, ct.embed_hom(1, 0, &Mat::from_i64(f, &[&[1]])));
    let gens_c = vec![(pc.clone(), tc), (sc.clone(), pic)];
    let rep = check_radical_generators(c, &declared_c, &pc, &gens_c).unwrap();
    assert!(rep.all_pass(), "{:?}", rep);
    // zero radical: the empty generator set passes
    let t3 = fixtures::point3();
    let pt = AddObject::plain(&t3.cat, vec![0]);
    let rep = check_radical_generators(&t3.cat, &[pt.clone()], &pt, &[]).unwrap();
    assert!(rep.all_pass());
}
