use super::*;
use crate::centersep::{is_separable, CenterElement};
use crate::crossed::build_crossed;
use crate::fixtures;
use crate::groupact::{validate_action, validate_factor_system};

fn scalar_el(t: &BimoduleTriple, obj: usize, slot: usize, value: i64) -> ElObject {
    let carrier = AddObject::plain(&t.cat, vec![obj]);
    let mut elem = BlockMat::zero_el(&t.cat, &t.bim, vec![obj], vec![obj]);
    let mut v = t.bim.zero_el(t.field(), obj, obj);
    v.set(slot, 0, t.field().from_i64(value));
    elem.set_block(0, 0, v);
    ElObject::new(t, carrier, elem).unwrap()
}

fn z2triv() -> (BimoduleTriple, crate::groupact::FiniteGroup, crate::groupact::GroupAction, crate::groupact::FactorSystem) {
    let t = fixtures::point3();
    let g = fixtures::z2();
    let act = fixtures::trivial_action(&t, &g);
    let lam = fixtures::trivial_factors(&t, &g, &act);
    (t, g, act, lam)
}

#[test]
fn el_hom_dimensions_on_point3() {
    let t = fixtures::point3();
    let zero = scalar_el(&t, 0, 0, 0);
    let one = scalar_el(&t, 0, 0, 1);
    // x = y = 0: every scalar is a morphism
    assert_eq!(el_hom_basis(&t, &zero, &zero).len(), 1);
    // x = 1, y = 0: a·1 = 0 forces a = 0
    assert_eq!(el_hom_basis(&t, &one, &zero).len(), 0);
    assert_eq!(el_hom_basis(&t, &zero, &one).len(), 0);
    assert_eq!(el_hom_basis(&t, &one, &one).len(), 1);
}

#[test]
fn jordan_block_hom_space_matches_brute_force() {
    // carrier pt², x = y = the nilpotent Jordan block; the commutant is the
    // 2-dimensional algebra of upper-triangular Toeplitz matrices
    let t = fixtures::point3();
    let carrier = AddObject::plain(&t.cat, vec![0, 0]);
    let mut elem = BlockMat::zero_el(&t.cat, &t.bim, vec![0, 0], vec![0, 0]);
    elem.set_block(0, 1, Mat::from_i64(t.field(), &[&[1]]));
    let x = ElObject::new(&t, carrier, elem).unwrap();
    let basis = el_hom_basis(&t, &x, &x);
    assert_eq!(basis.len(), 2);

    // independent oracle: walk all 3^4 block matrices and count morphisms
    let f = t.field();
    let mut count = 0;
    for n in 0..81u64 {
        let digits: Vec<i64> = (0..4).map(|k| ((n / 3u64.pow(k)) % 3) as i64).collect();
        let mut a = BlockMat::zero_hom(&t.cat, vec![0, 0], vec![0, 0]);
        for (k, d) in digits.iter().enumerate() {
            let (j, i) = (k / 2, k % 2);
            a.set_block(j, i, Mat::from_i64(f, &[&[*d]]));
        }
        if is_el_morphism(&t, &x, &x, &a) {
            count += 1;
        }
    }
    assert_eq!(count, 9); // 3^dim with dim = 2
}

#[test]
fn fragment_of_point3_materializes_and_validates() {
    let t = fixtures::point3();
    let objects = vec![scalar_el(&t, 0, 0, 0), scalar_el(&t, 0, 0, 1)];
    let frag = materialize_fragment(&t, objects);
    assert!(crate::fincat::validate_category(&frag.triple.cat).all_pass());
    assert_eq!(frag.triple.cat.hom_dim(0, 0), 1);
    assert_eq!(frag.triple.cat.hom_dim(0, 1), 0);
    assert_eq!(frag.triple.cat.hom_dim(1, 1), 1);
}

#[test]
fn induced_action_validates_on_fragments() {
    // trivial case
    let (t, g, act, lam) = z2triv();
    let seeds = vec![scalar_el(&t, 0, 0, 1)];
    let objects = close_under_action(&t, &g, &act, &seeds);
    let frag = materialize_fragment(&t, objects);
    let (ind_act, ind_lam) = induced_action(&t, &g, &act, &lam, &frag).unwrap();
    assert!(validate_action(&frag.triple, &g, &ind_act).all_pass());
    assert!(validate_factor_system(&frag.triple, &g, &ind_act, &ind_lam).all_pass());

    // sign action on the dual numbers: the element t moves to −t
    let t = fixtures::dual3();
    let g = fixtures::z2();
    let act = fixtures::dual3_action(&t, &g);
    let lam = fixtures::trivial_factors(&t, &g, &act);
    let el_t = scalar_el(&t, 0, 1, 1);
    let moved = el_act(&t, &act, 1, &el_t);
    assert_eq!(moved, scalar_el(&t, 0, 1, -1));
    let objects = close_under_action(&t, &g, &act, &[el_t, scalar_el(&t, 0, 0, 0)]);
    assert_eq!(objects.len(), 3); // t, −t, 0
    let frag = materialize_fragment(&t, objects);
    let (ind_act, ind_lam) = induced_action(&t, &g, &act, &lam, &frag).unwrap();
    assert!(validate_action(&frag.triple, &g, &ind_act).all_pass());
    assert!(validate_factor_system(&frag.triple, &g, &ind_act, &ind_lam).all_pass());
}

#[test]
fn phi_is_fully_faithful_on_z2triv_pairs() {
    let (t, g, act, lam) = z2triv();
    let ct = build_crossed(&t, &g, &act, &lam);
    let x = scalar_el(&t, 0, 0, 1);
    let y = scalar_el(&t, 0, 0, 1);
    let cmp = check_phi_fully_faithful(&ct, &x, &y);
    assert!(cmp.report.all_pass());
    assert_eq!(cmp.dim_tagged_family, 2);
    assert_eq!(cmp.dim_crossed_hom, 2);
    // mixed pair: x = 1, y = 0 has no morphisms on either side
    let zero = scalar_el(&t, 0, 0, 0);
    let cmp = check_phi_fully_faithful(&ct, &x, &zero);
    assert!(cmp.report.all_pass());
    assert_eq!(cmp.dim_crossed_hom, 0);
}

#[test]
fn psi_of_embedded_unit_is_identity_matrix() {
    let (t, g, act, lam) = z2triv();
    let ct = build_crossed(&t, &g, &act, &lam);
    let x = scalar_el(&t, 0, 0, 1);
    let xi = phi(&ct, &x);
    let tilde = psi(&ct, &xi).unwrap();
    assert_eq!(tilde.carrier.summands, vec![0, 0]);
    // components: diag(1, 1)
    let f = t.field();
    assert_eq!(tilde.elem.block(0, 0), &Mat::from_i64(f, &[&[1]]));
    assert_eq!(tilde.elem.block(1, 1), &Mat::from_i64(f, &[&[1]]));
    assert!(tilde.elem.block(0, 1).is_zero());
    assert!(tilde.elem.block(1, 0).is_zero());

    // ξ = 0 → Ψξ = 0 on the doubled carrier
    let zero = phi(&ct, &scalar_el(&t, 0, 0, 0));
    let tilde0 = psi(&ct, &zero).unwrap();
    assert!(tilde0.elem.is_zero());
}

#[test]
fn psi_mor_preserves_the_morphism_equation() {
    let t = fixtures::dual3();
    let g = fixtures::z2();
    let act = fixtures::dual3_action(&t, &g);
    let lam = fixtures::trivial_factors(&t, &g, &act);
    let ct = build_crossed(&t, &g, &act, &lam);
    let x = phi(&ct, &scalar_el(&t, 0, 1, 1)); // element t
    let y = phi(&ct, &scalar_el(&t, 0, 0, 0));
    for (i, alpha) in el_hom_basis(&ct.triple, &x, &y).iter().enumerate() {
        let image = psi_mor(&ct, &x, &y, alpha).unwrap();
        let px = psi(&ct, &x).unwrap();
        let py = psi(&ct, &y).unwrap();
        assert!(
            is_el_morphism(&t, &px, &py, &image),
            "psi image of basis morphism {i} fails the equation"
        );
    }
}

#[test]
fn adjoint_of_identity_on_zero_elements() {
    let (t, g, act, lam) = z2triv();
    let ct = build_crossed(&t, &g, &act, &lam);
    let x = scalar_el(&t, 0, 0, 0);
    let eta = phi(&ct, &x);
    // α = 1[1]: Φx → η
    let alpha = ct.embed_hom_block(&x.carrier.identity());
    assert!(is_el_morphism(&ct.triple, &phi(&ct, &x), &eta, &alpha));
    let beta = adjoint_forward(&ct, &x, &eta, &alpha).unwrap();
    // β_1 = 1, β_g = 0
    let f = t.field();
    assert_eq!(beta.block(0, 0), &Mat::from_i64(f, &[&[1]]));
    assert!(beta.block(1, 0).is_zero());
    // β = 0 → α = 0
    let zero_beta = BlockMat::zero_hom(&t.cat, vec![0], vec![0, 0]);
    let alpha0 = adjoint_backward(&ct, &x, &eta, &zero_beta).unwrap();
    assert!(alpha0.is_zero());
}

#[test]
fn adjunction_is_bijective_on_fixture_pairs() {
    // trivial action fixture
    let (t, g, act, lam) = z2triv();
    let ct = build_crossed(&t, &g, &act, &lam);
    for xv in 0..3 {
        for ev in 0..3 {
            let x = scalar_el(&t, 0, 0, xv);
            let eta = phi(&ct, &scalar_el(&t, 0, 0, ev));
            let cmp = check_adjunction(&ct, &x, &eta).unwrap();
            assert!(cmp.report.all_pass(), "failed at x={xv}, η={ev}");
        }
    }
    // sign action on the dual numbers, including a genuinely tagged η
    let t = fixtures::dual3();
    let g = fixtures::z2();
    let act = fixtures::dual3_action(&t, &g);
    let lam = fixtures::trivial_factors(&t, &g, &act);
    let ct = build_crossed(&t, &g, &act, &lam);
    let x = scalar_el(&t, 0, 1, 1);
    // η = t[g] over the crossed triple
    let carrier = AddObject::plain(&ct.triple.cat, vec![0]);
    let mut elem = BlockMat::zero_el(&ct.triple.cat, &ct.triple.bim, vec![0], vec![0]);
    let mut tv = t.bim.zero_el(t.field(), 0, 0);
    tv.set(1, 0, t.field().one());
    elem.set_block(0, 0, ct.el_tagged(0, 0, 1, &tv));
    let eta = ElObject::new(&ct.triple, carrier, elem).unwrap();
    let cmp = check_adjunction(&ct, &x, &eta).unwrap();
    assert!(cmp.report.all_pass());
    assert_eq!(cmp.dim_crossed_side, cmp.dim_base_side);
}

#[test]
fn summand_witness_on_z2triv() {
    let (t, g, act, lam) = z2triv();
    let ct = build_crossed(&t, &g, &act, &lam);
    let alpha = is_separable(&t, &g, &act, &lam).unwrap();
    for v in 0..3 {
        let xi = phi(&ct, &scalar_el(&t, 0, 0, v));
        let w = summand_witness(&ct, &xi, &alpha).unwrap();
        assert!(w.report.all_pass(), "splitting failed for ξ = {v}");
    }
    // a genuinely tagged ξ: the element [g] ∈ BG(pt,pt)
    let carrier = AddObject::plain(&ct.triple.cat, vec![0]);
    let mut elem = BlockMat::zero_el(&ct.triple.cat, &ct.triple.bim, vec![0], vec![0]);
    elem.set_block(0, 0, ct.el_tagged(0, 0, 1, &Mat::from_i64(t.field(), &[&[1]])));
    let xi = ElObject::new(&ct.triple, carrier, elem).unwrap();
    let w = summand_witness(&ct, &xi, &alpha).unwrap();
    assert!(w.report.all_pass());
}

#[test]
fn summand_witness_with_nontrivial_factors() {
    let t = fixtures::point3();
    let g = fixtures::z2();
    let act = fixtures::trivial_action(&t, &g);
    let lam = fixtures::z2tw_factors(&t, &g, &act);
    let ct = build_crossed(&t, &g, &act, &lam);
    let alpha = is_separable(&t, &g, &act, &lam).unwrap();
    let xi = phi(&ct, &scalar_el(&t, 0, 0, 1));
    let w = summand_witness(&ct, &xi, &alpha).unwrap();
    assert!(w.report.all_pass());
}

#[test]
fn non_witness_breaks_the_splitting_identity() {
    let (t, g, act, lam) = z2triv();
    let ct = build_crossed(&t, &g, &act, &lam);
    // α = 1 has trace 2 ≠ 1, so π∘ι = 2·id ≠ id
    let alpha = CenterElement::identity(&t);
    let xi = phi(&ct, &scalar_el(&t, 0, 0, 1));
    let w = summand_witness(&ct, &xi, &alpha).unwrap();
    assert!(w.report.any_fail());
}

#[test]
fn generated_objects_are_deduped_and_capped() {
    let (t, g, act, _) = z2triv();
    let seeds = vec![scalar_el(&t, 0, 0, 0), scalar_el(&t, 0, 0, 1)];
    let objs = generate_el_objects(&t, Some((&g, &act)), &seeds, 16);
    assert!(objs.len() >= 5);
    for (i, a) in objs.iter().enumerate() {
        for b in objs.iter().skip(i + 1) {
            assert_ne!(a, b);
        }
    }
}
