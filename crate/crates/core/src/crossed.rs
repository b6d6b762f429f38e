//! The crossed group triple TG: same objects as the base category, morphisms
//! are tagged sums Σ a_σ[σ] with a_σ: X^σ → Y, multiplied by
//! a_σ[σ]·b_τ[τ] = a_σ b^σ_τ λ_{σ,τ}[στ].
//!
//! The result is materialized as an ordinary category/bimodule/differentiation
//! so that every downstream construction applies unchanged. Crossed
//! coordinates are laid out σ-major (group input order), base-coordinate
//! minor.

use std::collections::BTreeMap;

use crate::exactla::Mat;
use crate::fincat::{
    validate_category, validate_triple, Bimodule, BimoduleTriple, BlockMat, Differentiation,
    FinCat,
};
use crate::groupact::{FactorSystem, FiniteGroup, GroupAction};
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct CrossedTriple {
    pub triple: BimoduleTriple,
    pub base: BimoduleTriple,
    pub group: FiniteGroup,
    pub action: GroupAction,
    pub factors: FactorSystem,
}

impl CrossedTriple {
    /// Offset of the σ-tagged block inside the crossed hom coordinates of
    /// (X,Y).
    pub fn hom_offset(&self, x: usize, y: usize, sigma: usize) -> usize {
        (0..sigma)
            .map(|s| self.base.cat.hom_dim(self.action.act_obj(s, x), y))
            .sum()
    }

    pub fn el_offset(&self, x: usize, y: usize, sigma: usize) -> usize {
        (0..sigma)
            .map(|s| self.base.bim.el_dim(self.action.act_obj(s, x), y))
            .sum()
    }

    /// The σ-component a_σ ∈ A(X^σ, Y) of a crossed hom coordinate column.
    pub fn hom_component(&self, x: usize, y: usize, sigma: usize, v: &Mat) -> Mat {
        let off = self.hom_offset(x, y, sigma);
        let d = self.base.cat.hom_dim(self.action.act_obj(sigma, x), y);
        let mut out = Mat::zero(self.base.field(), d, 1);
        for k in 0..d {
            out.set(k, 0, v.at(off + k, 0).clone());
        }
        out
    }

    pub fn el_component(&self, x: usize, y: usize, sigma: usize, v: &Mat) -> Mat {
        let off = self.el_offset(x, y, sigma);
        let d = self.base.bim.el_dim(self.action.act_obj(sigma, x), y);
        let mut out = Mat::zero(self.base.field(), d, 1);
        for k in 0..d {
            out.set(k, 0, v.at(off + k, 0).clone());
        }
        out
    }

    /// Builds a crossed hom coordinate column from one tagged component.
    pub fn hom_tagged(&self, x: usize, y: usize, sigma: usize, base_coords: &Mat) -> Mat {
        let mut v = self.triple.cat.zero_hom(x, y);
        let off = self.hom_offset(x, y, sigma);
        for k in 0..base_coords.rows {
            v.set(off + k, 0, base_coords.at(k, 0).clone());
        }
        v
    }

    pub fn el_tagged(&self, x: usize, y: usize, sigma: usize, base_coords: &Mat) -> Mat {
        let mut v = self.triple.bim.zero_el(self.base.field(), x, y);
        let off = self.el_offset(x, y, sigma);
        for k in 0..base_coords.rows {
            v.set(off + k, 0, base_coords.at(k, 0).clone());
        }
        v
    }

    /// The embedding a ↦ a[1].
    pub fn embed_hom(&self, x: usize, y: usize, a: &Mat) -> Mat {
        self.hom_tagged(x, y, self.group.unit, a)
    }

    pub fn embed_el(&self, x: usize, y: usize, e: &Mat) -> Mat {
        self.el_tagged(x, y, self.group.unit, e)
    }

    /// Blockwise embedding of an additive-hull morphism into the crossed
    /// category (object indices carry over unchanged).
    pub fn embed_hom_block(&self, a: &BlockMat) -> BlockMat {
        let mut out = BlockMat::zero_hom(&self.triple.cat, a.src.clone(), a.dst.clone());
        for j in 0..a.dst.len() {
            for i in 0..a.src.len() {
                out.set_block(j, i, self.embed_hom(a.src[i], a.dst[j], a.block(j, i)));
            }
        }
        out
    }

    pub fn embed_el_block(&self, e: &BlockMat) -> BlockMat {
        let mut out = BlockMat::zero_el(&self.triple.cat, &self.triple.bim, e.src.clone(), e.dst.clone());
        for j in 0..e.dst.len() {
            for i in 0..e.src.len() {
                out.set_block(j, i, self.embed_el(e.src[i], e.dst[j], e.block(j, i)));
            }
        }
        out
    }

    /// Blockwise single-tag morphism: every block of `a` (with base-level
    /// blocks from (src)^σ to dst) lands in the σ-tagged slot.
    pub fn hom_tagged_block(&self, src: &[usize], dst: &[usize], sigma: usize, a: &BlockMat) -> BlockMat {
        let mut out = BlockMat::zero_hom(&self.triple.cat, src.to_vec(), dst.to_vec());
        for j in 0..dst.len() {
            for i in 0..src.len() {
                out.set_block(j, i, self.hom_tagged(src[i], dst[j], sigma, a.block(j, i)));
            }
        }
        out
    }
}

/// Builds the crossed group triple; inputs are expected to have passed
/// validation (group, action, factor system).
pub fn build_crossed(
    t: &BimoduleTriple,
    g: &FiniteGroup,
    act: &GroupAction,
    lam: &FactorSystem,
) -> CrossedTriple {
    let field = t.field();
    let c = &t.cat;
    let n_obj = c.object_count();
    let n = g.order();

    let tagged_hom_names = |x: usize, y: usize| -> Vec<String> {
        let mut names = Vec::new();
        for sigma in 0..n {
            let xs = act.act_obj(sigma, x);
            for b in c.hom_names(xs, y) {
                names.push(format!("{b}[{}]", g.names[sigma]));
            }
        }
        names
    };
    let tagged_el_names = |x: usize, y: usize| -> Vec<String> {
        let mut names = Vec::new();
        for sigma in 0..n {
            let xs = act.act_obj(sigma, x);
            for b in t.bim.el_names(xs, y) {
                names.push(format!("{b}[{}]", g.names[sigma]));
            }
        }
        names
    };

    let mut hom = BTreeMap::new();
    let mut el = BTreeMap::new();
    for x in 0..n_obj {
        for y in 0..n_obj {
            let hn = tagged_hom_names(x, y);
            if !hn.is_empty() {
                hom.insert((x, y), hn);
            }
            let en = tagged_el_names(x, y);
            if !en.is_empty() {
                el.insert((x, y), en);
            }
        }
    }
    let hom_dim = |x: usize, y: usize| hom.get(&(x, y)).map(|v| v.len()).unwrap_or(0);
    let el_dim = |x: usize, y: usize| el.get(&(x, y)).map(|v| v.len()).unwrap_or(0);
    let hom_offset = |x: usize, y: usize, sigma: usize| -> usize {
        (0..sigma).map(|s| c.hom_dim(act.act_obj(s, x), y)).sum()
    };
    let el_offset = |x: usize, y: usize, sigma: usize| -> usize {
        (0..sigma).map(|s| t.bim.el_dim(act.act_obj(s, x), y)).sum()
    };

    // composition: c_σ[σ] ∘ b_τ[τ] = c_σ ∘ (b_τ)^σ ∘ λ_{σ,τ}(X) tagged [στ]
    let mut comp = BTreeMap::new();
    for x in 0..n_obj {
        for y in 0..n_obj {
            for z in 0..n_obj {
                let dxy = hom_dim(x, y);
                let dyz = hom_dim(y, z);
                let dxz = hom_dim(x, z);
                if dxy == 0 || dyz == 0 || dxz == 0 {
                    continue;
                }
                let mut m = Mat::zero(field, dxz, dyz * dxy);
                for sigma in 0..n {
                    let ys = act.act_obj(sigma, y);
                    for tau in 0..n {
                        let xt = act.act_obj(tau, x);
                        let xts = act.act_obj(sigma, xt);
                        let st = g.mul(sigma, tau);
                        let xst = act.act_obj(st, x);
                        let lam_v = lam.get(sigma, tau, x);
                        for ck in 0..c.hom_dim(ys, z) {
                            let cv = c.basis_vec(ys, z, ck);
                            for bk in 0..c.hom_dim(xt, y) {
                                let bv = c.basis_vec(xt, y, bk);
                                let b_sigma = act.act_hom(t, sigma, xt, y, &bv);
                                let inner = c.compose(xst, xts, ys, &b_sigma, lam_v);
                                let result = c.compose(xst, ys, z, &cv, &inner);
                                let col = (hom_offset(y, z, sigma) + ck) * dxy
                                    + hom_offset(x, y, tau)
                                    + bk;
                                let row0 = hom_offset(x, z, st);
                                for r in 0..result.rows {
                                    m.set(row0 + r, col, result.at(r, 0).clone());
                                }
                            }
                        }
                    }
                }
                comp.insert((x, y, z), m);
            }
        }
    }

    let mut ids = Vec::new();
    for x in 0..n_obj {
        let mut v = Mat::zero(field, hom_dim(x, x), 1);
        let off = hom_offset(x, x, g.unit);
        let idv = c.id_coords(x);
        for k in 0..idv.rows {
            v.set(off + k, 0, idv.at(k, 0).clone());
        }
        ids.push(v);
    }

    // left action: c_σ[σ] · x_τ[τ] = (c_σ · (x_τ)^σ) · λ_{σ,τ}(X) tagged [στ]
    let mut lact = BTreeMap::new();
    // right action: x_σ[σ] · a_τ[τ] = x_σ · ((a_τ)^σ ∘ λ_{σ,τ}(X)) tagged [στ]
    let mut ract = BTreeMap::new();
    for x in 0..n_obj {
        for y in 0..n_obj {
            for z in 0..n_obj {
                // lact: x ∈ BG(X,Y), c: Y→Z in AG
                let exy = el_dim(x, y);
                let hyz = hom_dim(y, z);
                let exz = el_dim(x, z);
                if exy > 0 && hyz > 0 && exz > 0 {
                    let mut m = Mat::zero(field, exz, hyz * exy);
                    for sigma in 0..n {
                        let ys = act.act_obj(sigma, y);
                        for tau in 0..n {
                            let xt = act.act_obj(tau, x);
                            let xts = act.act_obj(sigma, xt);
                            let st = g.mul(sigma, tau);
                            let xst = act.act_obj(st, x);
                            let lam_v = lam.get(sigma, tau, x);
                            for ck in 0..c.hom_dim(ys, z) {
                                let cv = c.basis_vec(ys, z, ck);
                                for xk in 0..t.bim.el_dim(xt, y) {
                                    let xv = t.bim.el_basis_vec(field, xt, y, xk);
                                    let x_sigma = act.act_el(t, sigma, xt, y, &xv);
                                    let cx = t.bim.left(c, xts, ys, z, &cv, &x_sigma);
                                    let result = t.bim.right(c, xst, xts, z, &cx, lam_v);
                                    let col = (hom_offset(y, z, sigma) + ck) * exy
                                        + el_offset(x, y, tau)
                                        + xk;
                                    let row0 = el_offset(x, z, st);
                                    for r in 0..result.rows {
                                        m.set(row0 + r, col, result.at(r, 0).clone());
                                    }
                                }
                            }
                        }
                    }
                    lact.insert((x, y, z), m);
                }
                // ract: x ∈ BG(Y,Z), a: X→Y in AG
                let eyz = el_dim(y, z);
                let hxy = hom_dim(x, y);
                let exz2 = el_dim(x, z);
                if eyz > 0 && hxy > 0 && exz2 > 0 {
                    let mut m = Mat::zero(field, exz2, eyz * hxy);
                    for sigma in 0..n {
                        let ys = act.act_obj(sigma, y);
                        for tau in 0..n {
                            let xt = act.act_obj(tau, x);
                            let xts = act.act_obj(sigma, xt);
                            let st = g.mul(sigma, tau);
                            let xst = act.act_obj(st, x);
                            let lam_v = lam.get(sigma, tau, x);
                            for xk in 0..t.bim.el_dim(ys, z) {
                                let xv = t.bim.el_basis_vec(field, ys, z, xk);
                                for ak in 0..c.hom_dim(xt, y) {
                                    let av = c.basis_vec(xt, y, ak);
                                    let a_sigma = act.act_hom(t, sigma, xt, y, &av);
                                    let inner = c.compose(xst, xts, ys, &a_sigma, lam_v);
                                    let result = t.bim.right(c, xst, ys, z, &xv, &inner);
                                    let col = (el_offset(y, z, sigma) + xk) * hxy
                                        + hom_offset(x, y, tau)
                                        + ak;
                                    let row0 = el_offset(x, z, st);
                                    for r in 0..result.rows {
                                        m.set(row0 + r, col, result.at(r, 0).clone());
                                    }
                                }
                            }
                        }
                    }
                    ract.insert((x, y, z), m);
                }
            }
        }
    }
    // ∂(Σ a_σ[σ]) = Σ (∂a_σ)[σ]
    let mut diff_maps = BTreeMap::new();
    for x in 0..n_obj {
        for y in 0..n_obj {
            let dh = hom_dim(x, y);
            let de = el_dim(x, y);
            if dh == 0 || de == 0 {
                continue;
            }
            let mut m = Mat::zero(field, de, dh);
            let mut nonzero = false;
            for sigma in 0..n {
                let xs = act.act_obj(sigma, x);
                for k in 0..c.hom_dim(xs, y) {
                    let da = t.diff_apply(xs, y, &c.basis_vec(xs, y, k));
                    if da.is_zero() {
                        continue;
                    }
                    nonzero = true;
                    let row0 = el_offset(x, y, sigma);
                    let col = hom_offset(x, y, sigma) + k;
                    for r in 0..da.rows {
                        m.set(row0 + r, col, da.at(r, 0).clone());
                    }
                }
            }
            if nonzero {
                diff_maps.insert((x, y), m);
            }
        }
    }
    let crossed_diff = Differentiation::new(diff_maps);
    let objects = c.objects.clone();
    let crossed_cat = FinCat::new(field, objects, hom, comp, ids);
    let crossed_bim = Bimodule::new(&crossed_cat, el, lact, ract);

    CrossedTriple {
        triple: BimoduleTriple::new(crossed_cat, crossed_bim, crossed_diff),
        base: t.clone(),
        group: g.clone(),
        action: act.clone(),
        factors: lam.clone(),
    }
}

/// Exhaustive associativity check over the materialized crossed data: the
/// category axioms plus the bimodule compatibilities.
pub fn check_associativity(ct: &CrossedTriple) -> Report {
    let mut report = validate_category(&ct.triple.cat);
    report.merge(validate_triple(&ct.triple));
    report
}

/// Restriction of group, action, and factor system to a subgroup given by its
/// (closed) member list; returns the restricted crossed inputs.
pub fn restrict_to_subgroup(
    t: &BimoduleTriple,
    g: &FiniteGroup,
    act: &GroupAction,
    lam: &FactorSystem,
    members: &[usize],
) -> (FiniteGroup, GroupAction, FactorSystem) {
    let names: Vec<String> = members.iter().map(|&m| g.names[m].clone()).collect();
    let pos = |old: usize| -> usize {
        members
            .iter()
            .position(|&m| m == old)
            .expect("subgroup member list is not closed under multiplication")
    };
    let mut entries = Vec::new();
    for &a in members {
        for &b in members {
            entries.push((g.names[a].as_str(), g.names[b].as_str(), g.names[g.mul(a, b)].as_str()));
        }
    }
    let entries: Vec<(&str, &str, &str)> = entries;
    let sub = FiniteGroup::from_table(names, &g.names[g.unit], &entries).unwrap();
    let sub_act = GroupAction::new(
        members
            .iter()
            .map(|&m| act.bifunctor(m).clone())
            .collect(),
    );
    let mut lam_map = BTreeMap::new();
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            for x in 0..t.cat.object_count() {
                let _ = pos(g.mul(a, b)); // closure check
                lam_map.insert((i, j, x), lam.get(a, b, x).clone());
            }
        }
    }
    (sub, sub_act, FactorSystem::new(lam_map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::groupact::validate_factor_system;

    #[test]
    fn z2triv_crossed_is_group_algebra() {
        let t = fixtures::point3();
        let g = fixtures::z2();
        let act = fixtures::trivial_action(&t, &g);
        let lam = fixtures::trivial_factors(&t, &g, &act);
        let ct = build_crossed(&t, &g, &act, &lam);
        assert_eq!(ct.triple.cat.hom_dim(0, 0), 2);
        assert!(check_associativity(&ct).all_pass());
        // [g]·[g] = [1]
        let tag_g = ct.hom_tagged(0, 0, 1, &t.cat.basis_vec(0, 0, 0));
        let sq = ct.triple.cat.compose(0, 0, 0, &tag_g, &tag_g);
        assert_eq!(sq, ct.embed_hom(0, 0, &t.cat.basis_vec(0, 0, 0)));
        // [1]·[1] = [1]
        let tag_1 = ct.embed_hom(0, 0, &t.cat.basis_vec(0, 0, 0));
        assert_eq!(ct.triple.cat.compose(0, 0, 0, &tag_1, &tag_1), tag_1);
    }

    #[test]
    fn z2tw_crossed_squares_to_minus_one() {
        let t = fixtures::point3();
        let g = fixtures::z2();
        let act = fixtures::trivial_action(&t, &g);
        let lam = fixtures::z2tw_factors(&t, &g, &act);
        let ct = build_crossed(&t, &g, &act, &lam);
        assert!(check_associativity(&ct).all_pass());
        // [g]·[g] = 2[1] over F_3: the crossed algebra is F_9
        let tag_g = ct.hom_tagged(0, 0, 1, &t.cat.basis_vec(0, 0, 0));
        let sq = ct.triple.cat.compose(0, 0, 0, &tag_g, &tag_g);
        let expected = ct
            .embed_hom(0, 0, &t.cat.basis_vec(0, 0, 0))
            .scale(&t.field().from_i64(2));
        assert_eq!(sq, expected);
    }

    #[test]
    fn dual3_crossed_has_dimension_four_and_sign_rule() {
        let t = fixtures::dual3();
        let g = fixtures::z2();
        let act = fixtures::dual3_action(&t, &g);
        let lam = fixtures::trivial_factors(&t, &g, &act);
        assert!(validate_factor_system(&t, &g, &act, &lam).all_pass());
        let ct = build_crossed(&t, &g, &act, &lam);
        assert_eq!(ct.triple.cat.hom_dim(0, 0), 4);
        assert!(check_associativity(&ct).all_pass());
        // [g]·t[1] = (t^g)[g] = -t[g]
        let tv = t.cat.basis_vec(0, 0, 1);
        let tag_g = ct.hom_tagged(0, 0, 1, &t.cat.basis_vec(0, 0, 0));
        let t1 = ct.embed_hom(0, 0, &tv);
        let prod = ct.triple.cat.compose(0, 0, 0, &tag_g, &t1);
        let expected = ct.hom_tagged(0, 0, 1, &tv.scale(&t.field().from_i64(-1)));
        assert_eq!(prod, expected);
        // t[1]·[g] = t[g]
        let prod2 = ct.triple.cat.compose(0, 0, 0, &t1, &tag_g);
        assert_eq!(prod2, ct.hom_tagged(0, 0, 1, &tv));
    }

    #[test]
    fn embed_is_multiplicative_and_diff_compatible() {
        let t = fixtures::dual3();
        let g = fixtures::z2();
        let act = fixtures::dual3_action(&t, &g);
        let lam = fixtures::trivial_factors(&t, &g, &act);
        let ct = build_crossed(&t, &g, &act, &lam);
        for i in 0..2 {
            for j in 0..2 {
                let a = t.cat.basis_vec(0, 0, i);
                let b = t.cat.basis_vec(0, 0, j);
                let ab = t.cat.compose(0, 0, 0, &b, &a);
                let lhs = ct.embed_hom(0, 0, &ab);
                let rhs = ct
                    .triple
                    .cat
                    .compose(0, 0, 0, &ct.embed_hom(0, 0, &b), &ct.embed_hom(0, 0, &a));
                assert_eq!(lhs, rhs);
            }
        }
        // embed(t)·embed(t) = 0
        let tv = ct.embed_hom(0, 0, &t.cat.basis_vec(0, 0, 1));
        assert!(ct.triple.cat.compose(0, 0, 0, &tv, &tv).is_zero());
        assert_eq!(
            ct.embed_hom(0, 0, &t.cat.id_coords(0)),
            ct.triple.cat.id_coords(0).clone()
        );
    }

    #[test]
    fn crossed_dimension_formula() {
        let t = fixtures::double_point3();
        let g = fixtures::z2();
        let act = fixtures::swap_action(&t, &g);
        let lam = fixtures::trivial_factors(&t, &g, &act);
        let ct = build_crossed(&t, &g, &act, &lam);
        // dim AG(X,Y) = Σ_σ dim A(X^σ, Y)
        for x in 0..2 {
            for y in 0..2 {
                let expected: usize = (0..2)
                    .map(|s| t.cat.hom_dim(act.act_obj(s, x), y))
                    .sum();
                assert_eq!(ct.triple.cat.hom_dim(x, y), expected);
            }
        }
        // p1 and p2 each see one morphism from themselves and one from the
        // swapped copy
        assert_eq!(ct.triple.cat.hom_dim(0, 0), 1);
        assert_eq!(ct.triple.cat.hom_dim(0, 1), 1);
        assert!(check_associativity(&ct).all_pass());
    }

    #[test]
    fn degenerate_factor_value_breaks_validation_and_associativity_stays_equiv() {
        // replacing λ_{g,g} by 0 is degenerate: the factor-system validator
        // rejects it (invertibility), and the crossed data fails the
        // identity/associativity axioms because [g] has no proper products
        let t = fixtures::point3();
        let g = fixtures::z2();
        let act = fixtures::trivial_action(&t, &g);
        let mut lam = fixtures::z2tw_factors(&t, &g, &act);
        lam.set_scalar(&t, &g, &act, "g", "g", t.field().from_i64(0))
            .unwrap();
        let rep = validate_factor_system(&t, &g, &act, &lam);
        assert!(rep.any_fail());
        let ct = build_crossed(&t, &g, &act, &lam);
        // [g]·[g] = 0 ≠ any unit multiple; associativity still holds for this
        // particular degeneration, but the categorical axioms it feeds are
        // exercised via the acceptance perturbation suite
        let tag_g = ct.hom_tagged(0, 0, 1, &t.cat.basis_vec(0, 0, 0));
        assert!(ct.triple.cat.compose(0, 0, 0, &tag_g, &tag_g).is_zero());
    }

    #[test]
    fn subgroup_restriction_is_consistent() {
        let t = fixtures::point5();
        let g = fixtures::v4();
        let act = fixtures::trivial_action(&t, &g);
        let lam = fixtures::v4tw_factors(&t, &g, &act);
        let members = g.subgroup_closure(&[g.index("a").unwrap()]);
        let (h, hact, hlam) = restrict_to_subgroup(&t, &g, &act, &lam, &members);
        assert_eq!(h.order(), 2);
        assert!(validate_factor_system(&t, &h, &hact, &hlam).all_pass());
        let ct = build_crossed(&t, &h, &hact, &hlam);
        assert_eq!(ct.triple.cat.hom_dim(0, 0), 2);
    }
}
