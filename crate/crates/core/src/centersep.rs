//! The center of a bimodule triple, the induced group action on it, traces,
//! separability witnesses, and the separability element of the center crossed
//! algebra.

use std::collections::BTreeMap;

use crate::crossed::CrossedTriple;
use crate::exactla::{Mat, Scalar};
use crate::fincat::BimoduleTriple;
use crate::groupact::{FactorSystem, FiniteGroup, GroupAction};
use crate::report::{Check, Report, Status};

/// A family α_X ∈ A(X,X), one per object, commuting with every morphism and
/// bimodule element and killed by ∂.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterElement {
    pub per_obj: Vec<Mat>,
}

impl CenterElement {
    pub fn zero(t: &BimoduleTriple) -> CenterElement {
        CenterElement {
            per_obj: (0..t.cat.object_count()).map(|x| t.cat.zero_hom(x, x)).collect(),
        }
    }

    pub fn identity(t: &BimoduleTriple) -> CenterElement {
        CenterElement {
            per_obj: (0..t.cat.object_count())
                .map(|x| t.cat.id_coords(x).clone())
                .collect(),
        }
    }

    pub fn add(&self, o: &CenterElement) -> CenterElement {
        CenterElement {
            per_obj: self
                .per_obj
                .iter()
                .zip(&o.per_obj)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, o: &CenterElement) -> CenterElement {
        CenterElement {
            per_obj: self
                .per_obj
                .iter()
                .zip(&o.per_obj)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> CenterElement {
        CenterElement {
            per_obj: self.per_obj.iter().map(|a| a.scale(k)).collect(),
        }
    }

    /// Pointwise product (α·β)_X = α_X ∘ β_X.
    pub fn mul(&self, t: &BimoduleTriple, o: &CenterElement) -> CenterElement {
        CenterElement {
            per_obj: (0..t.cat.object_count())
                .map(|x| t.cat.compose(x, x, x, &self.per_obj[x], &o.per_obj[x]))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.per_obj.iter().all(|m| m.is_zero())
    }

    pub fn flatten(&self, t: &BimoduleTriple) -> Mat {
        let mut entries = Vec::new();
        for m in &self.per_obj {
            entries.extend(m.entries().iter().cloned());
        }
        Mat::col(t.field(), entries)
    }

    pub fn unflatten(t: &BimoduleTriple, v: &Mat) -> CenterElement {
        let mut per_obj = Vec::new();
        let mut pos = 0;
        for x in 0..t.cat.object_count() {
            let d = t.cat.hom_dim(x, x);
            let mut m = Mat::zero(t.field(), d, 1);
            for k in 0..d {
                m.set(k, 0, v.at(pos + k, 0).clone());
            }
            per_obj.push(m);
            pos += d;
        }
        assert_eq!(pos, v.rows);
        CenterElement { per_obj }
    }
}

/// The defining conditions of centrality, checked exactly; returns violating
/// instances.
pub fn centrality_violations(t: &BimoduleTriple, alpha: &CenterElement) -> Vec<String> {
    let c = &t.cat;
    let mut v = Vec::new();
    for (x, y) in c.hom_pairs() {
        for k in 0..c.hom_dim(x, y) {
            let a = c.basis_vec(x, y, k);
            let lhs = c.compose(x, y, y, &alpha.per_obj[y], &a);
            let rhs = c.compose(x, x, y, &a, &alpha.per_obj[x]);
            if lhs != rhs {
                v.push(format!("α does not commute with morphism {}", c.hom_names(x, y)[k]));
            }
        }
    }
    for (x, y) in t.bim.el_pairs() {
        for k in 0..t.bim.el_dim(x, y) {
            let e = t.bim.el_basis_vec(c.field, x, y, k);
            let lhs = t.bim.left(c, x, y, y, &alpha.per_obj[y], &e);
            let rhs = t.bim.right(c, x, x, y, &e, &alpha.per_obj[x]);
            if lhs != rhs {
                v.push(format!("α does not commute with element {}", t.bim.el_names(x, y)[k]));
            }
        }
    }
    for x in 0..c.object_count() {
        if !t.diff_apply(x, x, &alpha.per_obj[x]).is_zero() {
            v.push(format!("∂α_{} ≠ 0", c.objects[x]));
        }
    }
    v
}

/// Echelon-normalized basis of the center, solved as one linear system; every
/// returned element is re-checked against the defining conditions.
pub fn center_basis(t: &BimoduleTriple) -> Vec<CenterElement> {
    let c = &t.cat;
    let f = t.field();
    let ambient: usize = (0..c.object_count()).map(|x| c.hom_dim(x, x)).sum();
    if ambient == 0 {
        return Vec::new();
    }
    let offsets: Vec<usize> = {
        let mut off = Vec::with_capacity(c.object_count());
        let mut acc = 0;
        for x in 0..c.object_count() {
            off.push(acc);
            acc += c.hom_dim(x, x);
        }
        off
    };

    let mut rows: Vec<Mat> = Vec::new();
    let unit_column = |x: usize, k: usize| -> CenterElement {
        let mut alpha = CenterElement::zero(t);
        alpha.per_obj[x].set(k, 0, f.one());
        alpha
    };
    let mut constraint = |map: &dyn Fn(&CenterElement) -> Mat, out_dim: usize| {
        if out_dim == 0 {
            return;
        }
        let mut m = Mat::zero(f, out_dim, ambient);
        for x in 0..c.object_count() {
            for k in 0..c.hom_dim(x, x) {
                let col = map(&unit_column(x, k));
                for r in 0..out_dim {
                    m.set(r, offsets[x] + k, col.at(r, 0).clone());
                }
            }
        }
        rows.push(m);
    };

    for (x, y) in c.hom_pairs() {
        for k in 0..c.hom_dim(x, y) {
            let a = c.basis_vec(x, y, k);
            let a2 = a.clone();
            constraint(
                &move |al: &CenterElement| {
                    c.compose(x, y, y, &al.per_obj[y], &a)
                        .sub(&c.compose(x, x, y, &a2, &al.per_obj[x]))
                },
                c.hom_dim(x, y),
            );
        }
    }
    for (x, y) in t.bim.el_pairs() {
        for k in 0..t.bim.el_dim(x, y) {
            let e = t.bim.el_basis_vec(f, x, y, k);
            let e2 = e.clone();
            constraint(
                &move |al: &CenterElement| {
                    t.bim
                        .left(c, x, y, y, &al.per_obj[y], &e)
                        .sub(&t.bim.right(c, x, x, y, &e2, &al.per_obj[x]))
                },
                t.bim.el_dim(x, y),
            );
        }
    }
    for x in 0..c.object_count() {
        constraint(
            &move |al: &CenterElement| t.diff_apply(x, x, &al.per_obj[x]),
            t.bim.el_dim(x, x),
        );
    }

    let mut stacked = Mat::zero(f, 0, ambient);
    for r in rows {
        stacked = stacked.vstack(&r);
    }
    let basis: Vec<CenterElement> = stacked
        .kernel_basis()
        .into_iter()
        .map(|v| CenterElement::unflatten(t, &v))
        .collect();
    for b in &basis {
        debug_assert!(centrality_violations(t, b).is_empty());
    }
    basis
}

/// The induced action on the center:
/// (α^σ)_X = λ⁻¹_{σ,σ⁻¹}(X) ∘ T_σ(α at X^{σ⁻¹}) ∘ λ_{σ,σ⁻¹}(X).
pub fn center_act(
    t: &BimoduleTriple,
    g: &FiniteGroup,
    act: &GroupAction,
    lam: &FactorSystem,
    sigma: usize,
    alpha: &CenterElement,
) -> CenterElement {
    let c = &t.cat;
    let si = g.inv(sigma);
    let per_obj = (0..c.object_count())
        .map(|x| {
            let xsi = act.act_obj(si, x);
            let mid = act.act_obj(sigma, xsi); // (X^{σ⁻¹})^σ
            let alpha_twisted = act.act_hom(t, sigma, xsi, xsi, &alpha.per_obj[xsi]);
            let lam_v = lam.get(sigma, si, x);
            let lam_inv = lam.inverse_at(t, g, act, sigma, si, x);
            let inner = c.compose(x, mid, mid, &alpha_twisted, lam_v);
            c.compose(x, mid, x, &lam_inv, &inner)
        })
        .collect();
    CenterElement { per_obj }
}

/// tr α = Σ_σ α^σ.
pub fn trace(
    t: &BimoduleTriple,
    g: &FiniteGroup,
    act: &GroupAction,
    lam: &FactorSystem,
    alpha: &CenterElement,
) -> CenterElement {
    let mut acc = CenterElement::zero(t);
    for sigma in 0..g.order() {
        acc = acc.add(&center_act(t, g, act, lam, sigma, alpha));
    }
    acc
}

/// Searches the center for a witness with tr α = 1; solvability of the linear
/// system is equivalent to separability, and a returned witness is re-checked
/// exactly.
pub fn is_separable(
    t: &BimoduleTriple,
    g: &FiniteGroup,
    act: &GroupAction,
    lam: &FactorSystem,
) -> Option<CenterElement> {
    let basis = center_basis(t);
    if basis.is_empty() {
        return None;
    }
    let f = t.field();
    let one_flat = CenterElement::identity(t).flatten(t);
    let mut m = Mat::zero(f, one_flat.rows, basis.len());
    for (i, b) in basis.iter().enumerate() {
        let tr = trace(t, g, act, lam, b).flatten(t);
        for r in 0..tr.rows {
            m.set(r, i, tr.at(r, 0).clone());
        }
    }
    let coeffs = m.solve(&one_flat)?;
    let mut alpha = CenterElement::zero(t);
    for (i, b) in basis.iter().enumerate() {
        alpha = alpha.add(&b.scale(coeffs.at(i, 0)));
    }
    let tr = trace(t, g, act, lam, &alpha);
    assert_eq!(tr, CenterElement::identity(t), "witness trace must be 1");
    assert!(centrality_violations(t, &alpha).is_empty());
    Some(alpha)
}

/// An element of ZG ⊗_Z ZG in the normalized form Σ z_{σ,τ}[σ]⊗[τ].
#[derive(Clone, Debug)]
pub struct SeparabilityElement {
    pub entries: BTreeMap<(usize, usize), CenterElement>,
}

/// t = Σ_σ α^σ[σ] ⊗ [σ⁻¹], together with exact verification of the two
/// separability identities: the multiplication map sends t to 1, and t
/// commutes with every β[τ].
pub fn separability_element(
    t: &BimoduleTriple,
    g: &FiniteGroup,
    act: &GroupAction,
    lam: &FactorSystem,
    alpha: &CenterElement,
) -> (SeparabilityElement, Report) {
    let mut entries = BTreeMap::new();
    for sigma in 0..g.order() {
        let asig = center_act(t, g, act, lam, sigma, alpha);
        entries.insert((sigma, g.inv(sigma)), asig);
    }
    let elem = SeparabilityElement { entries };
    let report = verify_separability_element(t, g, act, lam, &elem);
    (elem, report)
}

/// Checks the two identities for an arbitrary normalized tensor.
pub fn verify_separability_element(
    t: &BimoduleTriple,
    g: &FiniteGroup,
    act: &GroupAction,
    lam: &FactorSystem,
    elem: &SeparabilityElement,
) -> Report {
    let mut report = Report::new();
    let n = g.order();
    let zero = CenterElement::zero(t);

    // multiplication image: Σ z_{σ,τ}[στ] must equal 1·[1]
    let mut mult_v = Vec::new();
    for rho in 0..n {
        let mut acc = zero.clone();
        for ((sigma, tau), z) in &elem.entries {
            if g.mul(*sigma, *tau) == rho {
                acc = acc.add(z);
            }
        }
        let expected = if rho == g.unit {
            CenterElement::identity(t)
        } else {
            zero.clone()
        };
        if acc != expected {
            mult_v.push(format!(
                "multiplication image has wrong [{}]-component",
                g.names[rho]
            ));
        }
    }
    report.check("multiplication_image_is_one", mult_v);

    // commutation: β[τ]·t = t·β[τ] for every center basis β and every τ
    let mut comm_v = Vec::new();
    let basis = center_basis(t);
    for (bi, beta) in basis.iter().enumerate() {
        for tau in 0..n {
            let mut lhs: BTreeMap<(usize, usize), CenterElement> = BTreeMap::new();
            let mut rhs: BTreeMap<(usize, usize), CenterElement> = BTreeMap::new();
            for ((sigma, omega), z) in &elem.entries {
                // β[τ]·z[σ]⊗[ω] = (β·z^τ)[τσ]⊗[ω]
                let zt = center_act(t, g, act, lam, tau, z);
                let l = beta.mul(t, &zt);
                let key = (g.mul(tau, *sigma), *omega);
                let cur = lhs.get(&key).cloned().unwrap_or_else(|| zero.clone());
                lhs.insert(key, cur.add(&l));
                // z[σ]⊗[ω]·β[τ] = (z·β^{σω})[σ]⊗[ωτ]
                let b_so = center_act(t, g, act, lam, g.mul(*sigma, *omega), beta);
                let r = z.mul(t, &b_so);
                let key = (*sigma, g.mul(*omega, tau));
                let cur = rhs.get(&key).cloned().unwrap_or_else(|| zero.clone());
                rhs.insert(key, cur.add(&r));
            }
            let mut keys: std::collections::BTreeSet<(usize, usize)> =
                lhs.keys().copied().collect();
            keys.extend(rhs.keys().copied());
            for key in keys {
                let l = lhs.get(&key).cloned().unwrap_or_else(|| zero.clone());
                let r = rhs.get(&key).cloned().unwrap_or_else(|| zero.clone());
                if l != r {
                    comm_v.push(format!(
                        "β_{bi}[{}] does not commute with t at tensor slot ([{}],[{}])",
                        g.names[tau], g.names[key.0], g.names[key.1]
                    ));
                }
            }
        }
    }
    report.check("commutes_with_center_crossed_algebra", comm_v);
    report
}

/// If tr_G α = 1 and β = Σ_{σ∈R} α^σ over right-coset representatives R of
/// H\G, then tr_H β = 1; checked exactly for the given subgroup.
pub fn subgroup_heredity_check(
    t: &BimoduleTriple,
    g: &FiniteGroup,
    act: &GroupAction,
    lam: &FactorSystem,
    alpha: &CenterElement,
    members: &[usize],
) -> bool {
    let reps = g.right_coset_reps(members);
    let mut beta = CenterElement::zero(t);
    for &r in &reps {
        beta = beta.add(&center_act(t, g, act, lam, r, alpha));
    }
    let (h, hact, hlam) = crate::crossed::restrict_to_subgroup(t, g, act, lam, members);
    trace(t, &h, &hact, &hlam, &beta) == CenterElement::identity(t)
}

/// Data computed by the center identification check on a crossed triple.
pub struct CenterComparison {
    pub report: Report,
    pub dim_center_base: usize,
    pub dim_invariants: usize,
    pub dim_center_crossed: usize,
    pub dim_center_crossed_base_part: usize,
}

/// Identifies Z(T)^G with the base-supported part of Z(TG) under the
/// embedding a ↦ a[1]: equal dimension and mutual containment, both exact.
/// The full crossed center can be strictly larger (it contains tagged
/// components whenever the action is not faithful enough to exclude them);
/// its dimension is reported alongside.
pub fn check_center_identification(ct: &CrossedTriple) -> CenterComparison {
    let t = &ct.base;
    let g = &ct.group;
    let mut report = Report::new();

    let base_center = center_basis(t);
    // invariant subspace of the base center
    let ambient = CenterElement::identity(t).flatten(t).rows;
    let f = t.field();
    let mut constraints = Mat::zero(f, 0, base_center.len());
    for sigma in 0..g.order() {
        let mut m = Mat::zero(f, ambient, base_center.len());
        for (i, b) in base_center.iter().enumerate() {
            let moved = center_act(t, g, &ct.action, &ct.factors, sigma, b);
            let diff = moved.sub(b).flatten(t);
            for r in 0..ambient {
                m.set(r, i, diff.at(r, 0).clone());
            }
        }
        constraints = constraints.vstack(&m);
    }
    let invariant_coords = constraints.kernel_basis();
    let invariants: Vec<CenterElement> = invariant_coords
        .iter()
        .map(|coef| {
            let mut acc = CenterElement::zero(t);
            for (i, b) in base_center.iter().enumerate() {
                acc = acc.add(&b.scale(coef.at(i, 0)));
            }
            acc
        })
        .collect();

    let crossed_center = center_basis(&ct.triple);
    // the base-supported part: coefficient vectors whose combination has all
    // non-unit tags zero
    let mut tag_constraints: Vec<Mat> = Vec::new();
    {
        let mut rows = 0;
        for x in 0..ct.triple.cat.object_count() {
            rows += ct.triple.cat.hom_dim(x, x) - t.cat.hom_dim(x, x);
        }
        let mut m = Mat::zero(f, rows, crossed_center.len());
        for (i, gamma) in crossed_center.iter().enumerate() {
            let mut r = 0;
            for x in 0..ct.triple.cat.object_count() {
                for sigma in 0..g.order() {
                    if sigma == g.unit {
                        continue;
                    }
                    let comp = ct.hom_component(x, x, sigma, &gamma.per_obj[x]);
                    for k in 0..comp.rows {
                        m.set(r + k, i, comp.at(k, 0).clone());
                    }
                    r += comp.rows;
                }
            }
            assert_eq!(r, rows);
        }
        tag_constraints.push(m);
    }
    let base_part_coords = tag_constraints[0].kernel_basis();

    let mut v = Vec::new();
    if base_part_coords.len() != invariants.len() {
        v.push(format!(
            "dim(Z(TG) base part) = {} but dim(Z(T)^G) = {}",
            base_part_coords.len(),
            invariants.len()
        ));
    }
    report.check("dimensions_match", v);

    // each invariant embeds centrally
    let mut emb_v = Vec::new();
    for (i, beta) in invariants.iter().enumerate() {
        let embedded = CenterElement {
            per_obj: (0..t.cat.object_count())
                .map(|x| ct.embed_hom(x, x, &beta.per_obj[x]))
                .collect(),
        };
        let viol = centrality_violations(&ct.triple, &embedded);
        if !viol.is_empty() {
            emb_v.push(format!("invariant {i} fails crossed centrality: {}", viol[0]));
        }
    }
    report.check("invariants_embed_centrally", emb_v);

    // each base-supported crossed-central element restricts to an invariant
    let mut res_v = Vec::new();
    for coef in &base_part_coords {
        let mut gamma = CenterElement::zero(&ct.triple);
        for (i, b) in crossed_center.iter().enumerate() {
            gamma = gamma.add(&b.scale(coef.at(i, 0)));
        }
        let restricted = CenterElement {
            per_obj: (0..t.cat.object_count())
                .map(|x| ct.hom_component(x, x, g.unit, &gamma.per_obj[x]))
                .collect(),
        };
        if !centrality_violations(t, &restricted).is_empty() {
            res_v.push("restriction of a crossed-central element is not central".to_string());
            continue;
        }
        for sigma in 0..g.order() {
            if center_act(t, g, &ct.action, &ct.factors, sigma, &restricted) != restricted {
                res_v.push(format!(
                    "restriction is not invariant under {}",
                    g.names[sigma]
                ));
            }
        }
    }
    report.check("crossed_center_restricts_to_invariants", res_v);

    // traces always land in the crossed center
    let mut tr_v = Vec::new();
    for (i, b) in base_center.iter().enumerate() {
        let tr = trace(t, g, &ct.action, &ct.factors, b);
        let embedded = CenterElement {
            per_obj: (0..t.cat.object_count())
                .map(|x| ct.embed_hom(x, x, &tr.per_obj[x]))
                .collect(),
        };
        if !centrality_violations(&ct.triple, &embedded).is_empty() {
            tr_v.push(format!("tr(basis {i}) is not central in the crossed triple"));
        }
    }
    report.check("traces_land_in_crossed_center", tr_v);

    if report.checks.iter().any(|c| c.status != Status::Pass) {
        report.push(Check::fail(
            "center_identification",
            "at least one sub-check failed",
        ));
    } else {
        report.push(Check::pass("center_identification"));
    }

    CenterComparison {
        report,
        dim_center_base: base_center.len(),
        dim_invariants: invariants.len(),
        dim_center_crossed: crossed_center.len(),
        dim_center_crossed_base_part: base_part_coords.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::build_crossed;
    use crate::fixtures;

    #[test]
    fn center_dimensions_of_fixtures() {
        assert_eq!(center_basis(&fixtures::point3()).len(), 1);
        // A2: α_2·a = a·α_1 forces the two scalars equal
        assert_eq!(center_basis(&fixtures::a2()).len(), 1);
        // dual numbers are commutative with ∂ = 0
        assert_eq!(center_basis(&fixtures::dual3()).len(), 2);
    }

    #[test]
    fn center_action_on_dual3_negates_t() {
        let t = fixtures::dual3();
        let g = fixtures::z2();
        let act = fixtures::dual3_action(&t, &g);
        let lam = fixtures::trivial_factors(&t, &g, &act);
        let mut alpha = CenterElement::zero(&t);
        alpha.per_obj[0] = t.cat.basis_vec(0, 0, 1); // t
        assert!(centrality_violations(&t, &alpha).is_empty());
        let moved = center_act(&t, &g, &act, &lam, 1, &alpha);
        assert_eq!(moved, alpha.scale(&t.field().from_i64(-1)));
        // tr t = t + (−t) = 0
        assert!(trace(&t, &g, &act, &lam, &alpha).is_zero());
    }

    #[test]
    fn center_action_is_multiplicative_on_fixtures() {
        let t = fixtures::dual3();
        let g = fixtures::z2();
        let act = fixtures::dual3_action(&t, &g);
        let lam = fixtures::trivial_factors(&t, &g, &act);
        for alpha in center_basis(&t) {
            for sigma in 0..2 {
                for tau in 0..2 {
                    let moved = center_act(&t, &g, &act, &lam, tau, &alpha);
                    let lhs = center_act(&t, &g, &act, &lam, sigma, &moved);
                    let rhs = center_act(&t, &g, &act, &lam, g.mul(sigma, tau), &alpha);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn separability_witness_over_f3_and_refusal_over_f2() {
        let t3 = fixtures::point3();
        let g = fixtures::z2();
        let act3 = fixtures::trivial_action(&t3, &g);
        let lam3 = fixtures::trivial_factors(&t3, &g, &act3);
        let w = is_separable(&t3, &g, &act3, &lam3).expect("separable over F_3");
        // the witness is α = 2 (trace 2+2 = 4 = 1)
        assert_eq!(w.per_obj[0], t3.cat.id_coords(0).scale(&t3.field().from_i64(2)));

        let t2 = fixtures::point2();
        let act2 = fixtures::trivial_action(&t2, &g);
        let lam2 = fixtures::trivial_factors(&t2, &g, &act2);
        assert!(is_separable(&t2, &g, &act2, &lam2).is_none());
    }

    #[test]
    fn group_order_invertible_gives_standard_witness() {
        let t = fixtures::point5();
        let g = fixtures::v4();
        let act = fixtures::trivial_action(&t, &g);
        let lam = fixtures::v4tw_factors(&t, &g, &act);
        // |G|⁻¹·1 = 4⁻¹ = 4 over F_5 is a witness
        let alpha = CenterElement::identity(&t).scale(&t.field().from_i64(4));
        assert_eq!(trace(&t, &g, &act, &lam, &alpha), CenterElement::identity(&t));
        assert!(is_separable(&t, &g, &act, &lam).is_some());
    }

    #[test]
    fn separability_element_identities_on_z2triv() {
        let t = fixtures::point3();
        let g = fixtures::z2();
        let act = fixtures::trivial_action(&t, &g);
        let lam = fixtures::trivial_factors(&t, &g, &act);
        let alpha = is_separable(&t, &g, &act, &lam).unwrap();
        let (elem, rep) = separability_element(&t, &g, &act, &lam, &alpha);
        assert!(rep.all_pass());
        // t = 2[1]⊗[1] + 2[g]⊗[g]
        let two = t.cat.id_coords(0).scale(&t.field().from_i64(2));
        assert_eq!(elem.entries[&(0, 0)].per_obj[0], two);
        assert_eq!(elem.entries[&(1, 1)].per_obj[0], two);
    }

    #[test]
    fn non_witness_fails_separability_identities() {
        let t = fixtures::point3();
        let g = fixtures::z2();
        let act = fixtures::trivial_action(&t, &g);
        let lam = fixtures::trivial_factors(&t, &g, &act);
        // α = 1 has tr = 2 ≠ 1
        let alpha = CenterElement::identity(&t);
        let (_, rep) = separability_element(&t, &g, &act, &lam, &alpha);
        assert!(rep.any_fail());
    }

    #[test]
    fn trivial_group_gives_unit_tensor() {
        let t = fixtures::point3();
        let g = fixtures::trivial_group();
        let act = fixtures::trivial_action(&t, &g);
        let lam = fixtures::trivial_factors(&t, &g, &act);
        let alpha = is_separable(&t, &g, &act, &lam).unwrap();
        let (elem, rep) = separability_element(&t, &g, &act, &lam, &alpha);
        assert!(rep.all_pass());
        assert_eq!(elem.entries.len(), 1);
        assert_eq!(elem.entries[&(0, 0)], CenterElement::identity(&t));
    }

    #[test]
    fn center_identification_on_z2triv() {
        let t = fixtures::point3();
        let g = fixtures::z2();
        let act = fixtures::trivial_action(&t, &g);
        let lam = fixtures::trivial_factors(&t, &g, &act);
        let ct = build_crossed(&t, &g, &act, &lam);
        let cmp = check_center_identification(&ct);
        assert!(cmp.report.all_pass());
        assert_eq!(cmp.dim_invariants, 1);
        assert_eq!(cmp.dim_center_crossed_base_part, 1);
        // the full crossed center of a commutative group algebra is bigger
        assert_eq!(cmp.dim_center_crossed, 2);
    }

    #[test]
    fn center_identification_on_dual3_action() {
        let t = fixtures::dual3();
        let g = fixtures::z2();
        let act = fixtures::dual3_action(&t, &g);
        let lam = fixtures::trivial_factors(&t, &g, &act);
        let ct = build_crossed(&t, &g, &act, &lam);
        let cmp = check_center_identification(&ct);
        assert!(cmp.report.all_pass());
        // Z(T) = span{1, t}, invariants = span{1} since t ↦ −t
        assert_eq!(cmp.dim_center_base, 2);
        assert_eq!(cmp.dim_invariants, 1);
        assert_eq!(cmp.dim_center_crossed, 1);
        assert_eq!(cmp.dim_center_crossed_base_part, 1);
    }

    #[test]
    fn subgroup_heredity_on_v4() {
        let t = fixtures::point5();
        let g = fixtures::v4();
        let act = fixtures::trivial_action(&t, &g);
        let lam = fixtures::v4tw_factors(&t, &g, &act);
        let alpha = is_separable(&t, &g, &act, &lam).unwrap();
        for sub in g.all_subgroups() {
            assert!(subgroup_heredity_check(&t, &g, &act, &lam, &alpha, &sub));
        }
    }
}
