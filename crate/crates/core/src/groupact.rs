//! Finite groups, their actions on bimodule triples by bifunctors, and factor
//! systems (normalized 2-cocycles valued in isomorphisms).

use std::collections::BTreeMap;

use crate::exactla::{Mat, Scalar};
use crate::fincat::{invert_morphism, validate_bifunctor, Bifunctor, BimoduleTriple, BlockMat};
use crate::report::Report;

/// A finite group given by its complete multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub names: Vec<String>,
    mult: Vec<usize>,
    pub unit: usize,
    inv: Vec<Option<usize>>,
}

impl FiniteGroup {
    pub fn from_table(
        names: Vec<String>,
        unit_name: &str,
        entries: &[(&str, &str, &str)],
    ) -> Result<FiniteGroup, String> {
        let n = names.len();
        let index = |name: &str| -> Result<usize, String> {
            names
                .iter()
                .position(|m| m == name)
                .ok_or_else(|| format!("unknown group element {name:?}"))
        };
        let unit = index(unit_name)?;
        let mut mult = vec![usize::MAX; n * n];
        for (a, b, c) in entries {
            let (a, b, c) = (index(a)?, index(b)?, index(c)?);
            mult[a * n + b] = c;
        }
        if let Some(pos) = mult.iter().position(|&v| v == usize::MAX) {
            return Err(format!(
                "multiplication table is missing the product {:?} * {:?}",
                names[pos / n],
                names[pos % n]
            ));
        }
        let inv = (0..n)
            .map(|a| (0..n).find(|&b| mult[a * n + b] == unit && mult[b * n + a] == unit))
            .collect();
        Ok(FiniteGroup {
            names,
            mult,
            unit,
            inv,
        })
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a].expect("element has no inverse; validate the group first")
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|m| m == name)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.unit {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order()).any(|a| self.element_order(a) == self.order())
    }

    /// Smallest subgroup containing the seed elements, sorted.
    pub fn subgroup_closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut members = std::collections::BTreeSet::new();
        members.insert(self.unit);
        for &x in seed {
            members.insert(x);
        }
        loop {
            let snapshot: Vec<usize> = members.iter().copied().collect();
            let before = members.len();
            for &a in &snapshot {
                members.insert(self.inv(a));
                for &b in &snapshot {
                    members.insert(self.mul(a, b));
                }
            }
            if members.len() == before {
                break;
            }
        }
        members.into_iter().collect()
    }

    /// All subgroups, by closure of element subsets; intended for the small
    /// groups this crate works with.
    pub fn all_subgroups(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = std::collections::BTreeSet::new();
        for mask in 0u32..(1 << n) {
            let seed: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            seen.insert(self.subgroup_closure(&seed));
        }
        seen.into_iter().collect()
    }

    /// Representatives of the right cosets H\G, first-seen order.
    pub fn right_coset_reps(&self, subgroup: &[usize]) -> Vec<usize> {
        let mut reps = Vec::new();
        let mut covered = vec![false; self.order()];
        for g in 0..self.order() {
            if covered[g] {
                continue;
            }
            reps.push(g);
            for &h in subgroup {
                covered[self.mul(h, g)] = true;
            }
        }
        reps
    }
}

/// Exhaustive group-axiom check: associativity on all triples, unit laws,
/// two-sided inverses.
pub fn validate_group(g: &FiniteGroup) -> Report {
    let mut report = Report::new();
    let n = g.order();
    let mut unit_v = Vec::new();
    for a in 0..n {
        if g.mul(g.unit, a) != a || g.mul(a, g.unit) != a {
            unit_v.push(format!("unit law fails at {}", g.names[a]));
        }
    }
    report.check("unit_laws", unit_v);
    let mut assoc_v = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                    assoc_v.push(format!(
                        "({} {}) {} ≠ {} ({} {})",
                        g.names[a], g.names[b], g.names[c], g.names[a], g.names[b], g.names[c]
                    ));
                }
            }
        }
    }
    report.check("associativity", assoc_v);
    let mut inv_v = Vec::new();
    for a in 0..n {
        if g.inv[a].is_none() {
            inv_v.push(format!("{} has no two-sided inverse", g.names[a]));
        }
    }
    report.check("inverses", inv_v);
    report
}

/// A group action: one explicit bifunctor per group element, with the unit
/// acting as the identity.
#[derive(Clone, Debug)]
pub struct GroupAction {
    per_sigma: Vec<Bifunctor>,
}

impl GroupAction {
    pub fn new(per_sigma: Vec<Bifunctor>) -> GroupAction {
        GroupAction { per_sigma }
    }

    pub fn trivial(t: &BimoduleTriple, g: &FiniteGroup) -> GroupAction {
        GroupAction {
            per_sigma: (0..g.order()).map(|_| Bifunctor::identity(t)).collect(),
        }
    }

    /// Builds an action from object maps and hom-basis images for the listed
    /// elements; unlisted elements act as the identity. Element images are
    /// copied from the hom images, which requires the bimodule to be the
    /// regular one (identical bases per pair).
    pub fn from_hom_images(
        t: &BimoduleTriple,
        g: &FiniteGroup,
        entries: &[(
            &str,
            Vec<(&str, &str)>,
            Vec<(&str, Vec<(&str, Scalar)>)>,
        )],
    ) -> Result<GroupAction, String> {
        let mut per_sigma: Vec<Bifunctor> = (0..g.order()).map(|_| Bifunctor::identity(t)).collect();
        for (sigma, obj_pairs, hom_images) in entries {
            let si = g
                .index(sigma)
                .ok_or_else(|| format!("unknown group element {sigma:?}"))?;
            let mut obj_map: Vec<usize> = (0..t.cat.object_count()).collect();
            for (from, to) in obj_pairs {
                let fi = t
                    .cat
                    .object_index(from)
                    .ok_or_else(|| format!("unknown object {from:?}"))?;
                let ti = t
                    .cat
                    .object_index(to)
                    .ok_or_else(|| format!("unknown object {to:?}"))?;
                obj_map[fi] = ti;
            }
            let mut hom_mats = BTreeMap::new();
            for (x, y) in t.cat.hom_pairs() {
                let rows = t.cat.hom_dim(obj_map[x], obj_map[y]);
                hom_mats.insert((x, y), Mat::zero(t.cat.field, rows, t.cat.hom_dim(x, y)));
            }
            for (basis, image) in hom_images {
                let (pair, slot) = find_hom_basis(t, basis)
                    .ok_or_else(|| format!("unknown hom basis {basis:?}"))?;
                let m = hom_mats.get_mut(&pair).unwrap();
                for (img_name, value) in image {
                    let (img_pair, img_slot) = find_hom_basis(t, img_name)
                        .ok_or_else(|| format!("unknown hom basis {img_name:?}"))?;
                    if img_pair != (obj_map[pair.0], obj_map[pair.1]) {
                        return Err(format!(
                            "image of {basis:?} under {sigma:?} lands in the wrong hom pair"
                        ));
                    }
                    m.set(img_slot, slot, value.clone());
                }
            }
            let bim_mats = hom_mats
                .iter()
                .map(|(&(x, y), m)| {
                    assert_eq!(
                        t.bim.el_names(x, y),
                        t.cat.hom_names(x, y),
                        "from_hom_images requires the regular bimodule"
                    );
                    ((x, y), m.clone())
                })
                .collect();
            per_sigma[si] = Bifunctor {
                obj_map,
                hom_mats,
                bim_mats,
            };
        }
        Ok(GroupAction { per_sigma })
    }

    pub fn bifunctor(&self, sigma: usize) -> &Bifunctor {
        &self.per_sigma[sigma]
    }

    pub fn act_obj(&self, sigma: usize, x: usize) -> usize {
        self.per_sigma[sigma].obj_map[x]
    }

    /// a ↦ a^σ on base hom coordinates.
    pub fn act_hom(&self, t: &BimoduleTriple, sigma: usize, x: usize, y: usize, a: &Mat) -> Mat {
        self.per_sigma[sigma].apply_hom(&t.cat, x, y, a)
    }

    /// x ↦ x^σ on base element coordinates.
    pub fn act_el(&self, t: &BimoduleTriple, sigma: usize, x: usize, y: usize, e: &Mat) -> Mat {
        self.per_sigma[sigma].apply_el(t, x, y, e)
    }

    /// Blockwise extension of a ↦ a^σ to the additive hull.
    pub fn act_block(&self, t: &BimoduleTriple, sigma: usize, a: &BlockMat) -> BlockMat {
        self.per_sigma[sigma].apply_hom_block(&t.cat, a)
    }

    pub fn act_el_block(&self, t: &BimoduleTriple, sigma: usize, e: &BlockMat) -> BlockMat {
        self.per_sigma[sigma].apply_el_block(t, e)
    }
}

fn find_hom_basis(t: &BimoduleTriple, name: &str) -> Option<((usize, usize), usize)> {
    for (x, y) in t.cat.hom_pairs() {
        if let Some(slot) = t.cat.hom_names(x, y).iter().position(|n| n == name) {
            return Some(((x, y), slot));
        }
    }
    None
}

/// Checks that the unit acts as the identity and that every T_σ is a valid
/// bifunctor with bijective object/hom/element data. Composition T_{στ} is
/// not compared with T_σT_τ on the nose; a factor system witnesses those
/// isomorphisms.
pub fn validate_action(t: &BimoduleTriple, g: &FiniteGroup, act: &GroupAction) -> Report {
    let mut report = Report::new();
    let mut unit_v = Vec::new();
    let idf = Bifunctor::identity(t);
    let tu = act.bifunctor(g.unit);
    if tu.obj_map != idf.obj_map || tu.hom_mats != idf.hom_mats || tu.bim_mats != idf.bim_mats {
        unit_v.push("the unit does not act as the identity bifunctor".to_string());
    }
    report.check("unit_acts_trivially", unit_v);

    for sigma in 0..g.order() {
        let f = act.bifunctor(sigma);
        let mut sub = validate_bifunctor(t, t, f);
        for c in &mut sub.checks {
            c.name = format!("T[{}]_{}", g.names[sigma], c.name);
        }
        report.merge(sub);

        let mut bij = Vec::new();
        let mut seen = vec![false; t.cat.object_count()];
        for &o in &f.obj_map {
            seen[o] = true;
        }
        if !seen.iter().all(|&s| s) {
            bij.push("object map is not a bijection".to_string());
        }
        for (x, y) in t.cat.hom_pairs() {
            if let Some(m) = f.hom_mats.get(&(x, y)) {
                if !m.is_invertible() {
                    bij.push(format!(
                        "hom map at ({},{}) not invertible",
                        t.cat.objects[x], t.cat.objects[y]
                    ));
                }
            }
        }
        for (x, y) in t.bim.el_pairs() {
            if let Some(m) = f.bim_mats.get(&(x, y)) {
                if !m.is_invertible() {
                    bij.push(format!(
                        "element map at ({},{}) not invertible",
                        t.cat.objects[x], t.cat.objects[y]
                    ));
                }
            }
        }
        report.check(format!("T[{}]_bijective", g.names[sigma]), bij);
    }
    report
}

/// A factor system: per (σ, τ, X) an invertible morphism
/// λ_{σ,τ}(X): X^{στ} → (X^τ)^σ.
#[derive(Clone, Debug)]
pub struct FactorSystem {
    lam: BTreeMap<(usize, usize, usize), Mat>,
}

impl FactorSystem {
    pub fn new(lam: BTreeMap<(usize, usize, usize), Mat>) -> FactorSystem {
        FactorSystem { lam }
    }

    /// The identity factor system; requires T_σT_τ and T_{στ} to agree on
    /// objects (true for honest permutation actions).
    pub fn trivial(t: &BimoduleTriple, g: &FiniteGroup, act: &GroupAction) -> FactorSystem {
        let mut lam = BTreeMap::new();
        for sigma in 0..g.order() {
            for tau in 0..g.order() {
                for x in 0..t.cat.object_count() {
                    let src = act.act_obj(g.mul(sigma, tau), x);
                    let dst = act.act_obj(sigma, act.act_obj(tau, x));
                    assert_eq!(
                        src, dst,
                        "trivial factor system needs object-level composition to hold on the nose"
                    );
                    lam.insert((sigma, tau, x), t.cat.id_coords(src).clone());
                }
            }
        }
        FactorSystem { lam }
    }

    /// Overwrites λ_{σ,τ} with scalar·identity on every object.
    pub fn set_scalar(
        &mut self,
        t: &BimoduleTriple,
        g: &FiniteGroup,
        act: &GroupAction,
        sigma: &str,
        tau: &str,
        value: Scalar,
    ) -> Result<(), String> {
        let si = g
            .index(sigma)
            .ok_or_else(|| format!("unknown group element {sigma:?}"))?;
        let ti = g
            .index(tau)
            .ok_or_else(|| format!("unknown group element {tau:?}"))?;
        for x in 0..t.cat.object_count() {
            let src = act.act_obj(g.mul(si, ti), x);
            let dst = act.act_obj(si, act.act_obj(ti, x));
            if src != dst {
                return Err("scalar shorthand requires the action to fix composition on objects".into());
            }
            self.lam
                .insert((si, ti, x), t.cat.id_coords(src).scale(&value));
        }
        Ok(())
    }

    pub fn set(&mut self, sigma: usize, tau: usize, x: usize, coords: Mat) {
        self.lam.insert((sigma, tau, x), coords);
    }

    pub fn get(&self, sigma: usize, tau: usize, x: usize) -> &Mat {
        self.lam
            .get(&(sigma, tau, x))
            .expect("factor system value missing")
    }

    /// Source and destination objects of λ_{σ,τ}(X).
    pub fn endpoints(
        &self,
        g: &FiniteGroup,
        act: &GroupAction,
        sigma: usize,
        tau: usize,
        x: usize,
    ) -> (usize, usize) {
        (
            act.act_obj(g.mul(sigma, tau), x),
            act.act_obj(sigma, act.act_obj(tau, x)),
        )
    }

    pub fn inverse_at(
        &self,
        t: &BimoduleTriple,
        g: &FiniteGroup,
        act: &GroupAction,
        sigma: usize,
        tau: usize,
        x: usize,
    ) -> Mat {
        let (src, dst) = self.endpoints(g, act, sigma, tau, x);
        invert_morphism(&t.cat, src, dst, self.get(sigma, tau, x))
            .expect("factor system value is not invertible")
    }
}

/// Exhaustive factor-system validation: normalization, invertibility, zero
/// differentiation, the cocycle relation on all |G|³ triples and objects, and
/// naturality against every hom and element basis vector.
pub fn validate_factor_system(
    t: &BimoduleTriple,
    g: &FiniteGroup,
    act: &GroupAction,
    lam: &FactorSystem,
) -> Report {
    let mut report = Report::new();
    let n = g.order();
    let c = &t.cat;

    let mut norm = Vec::new();
    for sigma in 0..n {
        for x in 0..c.object_count() {
            let (src, _) = lam.endpoints(g, act, sigma, g.unit, x);
            if lam.get(sigma, g.unit, x) != c.id_coords(src) {
                norm.push(format!("λ[{},1]({}) ≠ 1", g.names[sigma], c.objects[x]));
            }
            let (src, _) = lam.endpoints(g, act, g.unit, sigma, x);
            if lam.get(g.unit, sigma, x) != c.id_coords(src) {
                norm.push(format!("λ[1,{}]({}) ≠ 1", g.names[sigma], c.objects[x]));
            }
        }
    }
    report.check("normalization", norm);

    let mut invv = Vec::new();
    let mut dv = Vec::new();
    for sigma in 0..n {
        for tau in 0..n {
            for x in 0..c.object_count() {
                let (src, dst) = lam.endpoints(g, act, sigma, tau, x);
                let v = lam.get(sigma, tau, x);
                if invert_morphism(c, src, dst, v).is_none() {
                    invv.push(format!(
                        "λ[{},{}]({}) is not invertible",
                        g.names[sigma], g.names[tau], c.objects[x]
                    ));
                }
                if !t.diff_apply(src, dst, v).is_zero() {
                    dv.push(format!(
                        "∂λ[{},{}]({}) ≠ 0",
                        g.names[sigma], g.names[tau], c.objects[x]
                    ));
                }
            }
        }
    }
    report.check("invertibility", invv);
    report.check("differentiation_vanishes", dv);

    let mut cocycle = Vec::new();
    for rho in 0..n {
        for sigma in 0..n {
            for tau in 0..n {
                for x in 0..c.object_count() {
                    // λ^ρ_{σ,τ}(X) ∘ λ_{ρ,στ}(X) = λ_{ρ,σ}(X^τ) ∘ λ_{ρσ,τ}(X)
                    let (l1_src, l1_dst) = lam.endpoints(g, act, sigma, tau, x);
                    let lam_st_rho = act.act_hom(t, rho, l1_src, l1_dst, lam.get(sigma, tau, x));
                    let (l2_src, _l2_dst) = lam.endpoints(g, act, rho, g.mul(sigma, tau), x);
                    let lhs = c.compose(
                        l2_src,
                        act.act_obj(rho, l1_src),
                        act.act_obj(rho, l1_dst),
                        &lam_st_rho,
                        lam.get(rho, g.mul(sigma, tau), x),
                    );
                    let xt = act.act_obj(tau, x);
                    let (r2_src, r2_mid) = lam.endpoints(g, act, g.mul(rho, sigma), tau, x);
                    let (_r1_src, r1_dst) = lam.endpoints(g, act, rho, sigma, xt);
                    let rhs = c.compose(
                        r2_src,
                        r2_mid,
                        r1_dst,
                        lam.get(rho, sigma, xt),
                        lam.get(g.mul(rho, sigma), tau, x),
                    );
                    if lhs != rhs {
                        cocycle.push(format!(
                            "cocycle fails at ρ={}, σ={}, τ={}, X={}",
                            g.names[rho], g.names[sigma], g.names[tau], c.objects[x]
                        ));
                    }
                }
            }
        }
    }
    report.check("cocycle", cocycle);

    let mut nat = Vec::new();
    for sigma in 0..n {
        for tau in 0..n {
            let st = g.mul(sigma, tau);
            for (x, y) in c.hom_pairs() {
                for k in 0..c.hom_dim(x, y) {
                    let a = c.basis_vec(x, y, k);
                    let a_st = act.act_hom(t, st, x, y, &a);
                    let a_t = act.act_hom(t, tau, x, y, &a);
                    let a_ts = act.act_hom(t, sigma, act.act_obj(tau, x), act.act_obj(tau, y), &a_t);
                    let (sx, dx) = lam.endpoints(g, act, sigma, tau, x);
                    let (_sy, dy) = lam.endpoints(g, act, sigma, tau, y);
                    let lhs = c.compose(sx, act.act_obj(st, y), dy, lam.get(sigma, tau, y), &a_st);
                    let rhs = c.compose(sx, dx, dy, &a_ts, lam.get(sigma, tau, x));
                    if lhs != rhs {
                        nat.push(format!(
                            "naturality fails at σ={}, τ={}, morphism {}",
                            g.names[sigma],
                            g.names[tau],
                            c.hom_names(x, y)[k]
                        ));
                    }
                }
            }
            for (x, y) in t.bim.el_pairs() {
                for k in 0..t.bim.el_dim(x, y) {
                    let e = t.bim.el_basis_vec(c.field, x, y, k);
                    let e_st = act.act_el(t, st, x, y, &e);
                    let e_t = act.act_el(t, tau, x, y, &e);
                    let e_ts = act.act_el(t, sigma, act.act_obj(tau, x), act.act_obj(tau, y), &e_t);
                    let (sx, dx) = lam.endpoints(g, act, sigma, tau, x);
                    let (_sy, dy) = lam.endpoints(g, act, sigma, tau, y);
                    let lhs = t
                        .bim
                        .left(c, sx, act.act_obj(st, y), dy, lam.get(sigma, tau, y), &e_st);
                    let rhs = t.bim.right(c, sx, dx, dy, &e_ts, lam.get(sigma, tau, x));
                    if lhs != rhs {
                        nat.push(format!(
                            "naturality fails at σ={}, τ={}, element {}",
                            g.names[sigma],
                            g.names[tau],
                            t.bim.el_names(x, y)[k]
                        ));
                    }
                }
            }
        }
    }
    report.check("naturality", nat);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn group_tables_validate() {
        for g in [fixtures::z2(), fixtures::z4(), fixtures::v4()] {
            assert!(validate_group(&g).all_pass());
        }
        assert!(fixtures::v4().is_abelian());
        assert!(!fixtures::v4().is_cyclic());
        assert!(fixtures::z4().is_cyclic());
    }

    #[test]
    fn broken_associativity_is_reported() {
        // z/3-like table with one corrupted entry
        let g = FiniteGroup::from_table(
            vec!["1".into(), "a".into(), "b".into()],
            "1",
            &[
                ("1", "1", "1"),
                ("1", "a", "a"),
                ("1", "b", "b"),
                ("a", "1", "a"),
                ("a", "a", "b"),
                ("a", "b", "b"), // should be 1
                ("b", "1", "b"),
                ("b", "a", "1"),
                ("b", "b", "a"),
            ],
        )
        .unwrap();
        let rep = validate_group(&g);
        assert!(rep.any_fail());
        let assoc = rep.find("associativity").unwrap();
        assert!(!assoc.details.is_empty());
    }

    #[test]
    fn trivial_action_on_point3_validates() {
        let t = fixtures::point3();
        let g = fixtures::z2();
        let act = fixtures::trivial_action(&t, &g);
        assert!(validate_action(&t, &g, &act).all_pass());
    }

    #[test]
    fn dual3_sign_action_validates() {
        let t = fixtures::dual3();
        let g = fixtures::z2();
        let act = fixtures::dual3_action(&t, &g);
        assert!(validate_action(&t, &g, &act).all_pass());
        // t^g = -t
        let tm = t.cat.basis_vec(0, 0, 1);
        assert_eq!(act.act_hom(&t, 1, 0, 0, &tm), tm.scale(&t.field().from_i64(-1)));
    }

    #[test]
    fn non_multiplicative_action_fails() {
        // sending t to the identity is not an algebra map
        let t = fixtures::dual3();
        let g = fixtures::z2();
        let f = t.field();
        let act = GroupAction::from_hom_images(
            &t,
            &g,
            &[(
                "g",
                vec![],
                vec![
                    ("one", vec![("one", f.from_i64(1))]),
                    ("t", vec![("one", f.from_i64(1))]),
                ],
            )],
        )
        .unwrap();
        assert!(validate_action(&t, &g, &act).any_fail());
    }

    #[test]
    fn z2tw_cocycle_passes_and_normalization_catches_corruption() {
        let t = fixtures::point3();
        let g = fixtures::z2();
        let act = fixtures::trivial_action(&t, &g);
        let lam = fixtures::z2tw_factors(&t, &g, &act);
        assert!(validate_factor_system(&t, &g, &act, &lam).all_pass());

        let mut bad = lam.clone();
        bad.set_scalar(&t, &g, &act, "g", "1", t.field().from_i64(2))
            .unwrap();
        let rep = validate_factor_system(&t, &g, &act, &bad);
        assert_eq!(
            rep.find("normalization").unwrap().status,
            crate::report::Status::Fail
        );
    }

    #[test]
    fn derived_identity_for_inverses() {
        // λ^σ_{σ⁻¹,σ} = λ_{σ,σ⁻¹} on validated fixtures
        let t = fixtures::point3();
        let g = fixtures::z2();
        let act = fixtures::trivial_action(&t, &g);
        for lam in [
            fixtures::trivial_factors(&t, &g, &act),
            fixtures::z2tw_factors(&t, &g, &act),
        ] {
            assert!(validate_factor_system(&t, &g, &act, &lam).all_pass());
            for sigma in 0..g.order() {
                let si = g.inv(sigma);
                for x in 0..t.cat.object_count() {
                    let (src, dst) = lam.endpoints(&g, &act, si, sigma, x);
                    let lhs = act.act_hom(&t, sigma, src, dst, lam.get(si, sigma, x));
                    assert_eq!(&lhs, lam.get(sigma, si, act.act_obj(sigma, x)));
                }
            }
        }
    }

    #[test]
    fn v4tw_cocycle_passes() {
        let t = fixtures::point5();
        let g = fixtures::v4();
        let act = fixtures::trivial_action(&t, &g);
        let lam = fixtures::v4tw_factors(&t, &g, &act);
        assert!(validate_factor_system(&t, &g, &act, &lam).all_pass());
    }

    #[test]
    fn swap_action_with_trivial_factors_validates() {
        let t = fixtures::double_point3();
        let g = fixtures::z2();
        let act = fixtures::swap_action(&t, &g);
        assert!(validate_action(&t, &g, &act).all_pass());
        let lam = fixtures::trivial_factors(&t, &g, &act);
        assert!(validate_factor_system(&t, &g, &act, &lam).all_pass());
    }
}
