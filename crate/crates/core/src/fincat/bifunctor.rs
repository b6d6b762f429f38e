//! Bifunctors between bimodule triples and the equivalence criterion: fully
//! faithful, ∂-dense, and bijective on bimodule elements.

use std::collections::BTreeMap;

use super::{BimoduleTriple, BlockMat, FinCat};
use crate::exactla::Mat;
use crate::report::{Check, Report, SearchBudget};
use crate::search::{coeff_vectors, SearchKind};

/// A pair (F₀, F₁): object map, per-pair hom matrices, per-pair element
/// matrices.
#[derive(Clone, Debug)]
pub struct Bifunctor {
    pub obj_map: Vec<usize>,
    pub hom_mats: BTreeMap<(usize, usize), Mat>,
    pub bim_mats: BTreeMap<(usize, usize), Mat>,
}

impl Bifunctor {
    pub fn identity(t: &BimoduleTriple) -> Bifunctor {
        let n = t.cat.object_count();
        let mut hom_mats = BTreeMap::new();
        for (x, y) in t.cat.hom_pairs() {
            hom_mats.insert((x, y), Mat::identity(t.cat.field, t.cat.hom_dim(x, y)));
        }
        let mut bim_mats = BTreeMap::new();
        for (x, y) in t.bim.el_pairs() {
            bim_mats.insert((x, y), Mat::identity(t.cat.field, t.bim.el_dim(x, y)));
        }
        Bifunctor {
            obj_map: (0..n).collect(),
            hom_mats,
            bim_mats,
        }
    }

    pub fn apply_obj(&self, x: usize) -> usize {
        self.obj_map[x]
    }

    pub fn apply_hom(&self, dst: &FinCat, x: usize, y: usize, a: &Mat) -> Mat {
        match self.hom_mats.get(&(x, y)) {
            Some(m) => m.mul(a),
            None => dst.zero_hom(self.obj_map[x], self.obj_map[y]),
        }
    }

    pub fn apply_el(&self, dst: &BimoduleTriple, x: usize, y: usize, e: &Mat) -> Mat {
        match self.bim_mats.get(&(x, y)) {
            Some(m) => m.mul(e),
            None => dst.bim.zero_el(dst.cat.field, self.obj_map[x], self.obj_map[y]),
        }
    }

    /// Blockwise extension to the free additive hull.
    pub fn apply_hom_block(&self, dst: &FinCat, a: &BlockMat) -> BlockMat {
        let src_objs: Vec<usize> = a.src.iter().map(|&o| self.obj_map[o]).collect();
        let dst_objs: Vec<usize> = a.dst.iter().map(|&o| self.obj_map[o]).collect();
        let mut out = BlockMat::zero_hom(dst, src_objs, dst_objs);
        for j in 0..a.dst.len() {
            for i in 0..a.src.len() {
                let im = self.apply_hom(dst, a.src[i], a.dst[j], a.block(j, i));
                out.set_block(j, i, im);
            }
        }
        out
    }

    pub fn apply_el_block(&self, dst: &BimoduleTriple, e: &BlockMat) -> BlockMat {
        let src_objs: Vec<usize> = e.src.iter().map(|&o| self.obj_map[o]).collect();
        let dst_objs: Vec<usize> = e.dst.iter().map(|&o| self.obj_map[o]).collect();
        let mut out = BlockMat::zero_el(&dst.cat, &dst.bim, src_objs, dst_objs);
        for j in 0..e.dst.len() {
            for i in 0..e.src.len() {
                let im = self.apply_el(dst, e.src[i], e.dst[j], e.block(j, i));
                out.set_block(j, i, im);
            }
        }
        out
    }

    /// g∘f as bifunctors, f first.
    pub fn compose(g: &Bifunctor, f: &Bifunctor, src: &BimoduleTriple) -> Bifunctor {
        let obj_map: Vec<usize> = f.obj_map.iter().map(|&x| g.obj_map[x]).collect();
        let mut hom_mats = BTreeMap::new();
        for (x, y) in src.cat.hom_pairs() {
            if let (Some(mf), Some(mg)) = (
                f.hom_mats.get(&(x, y)),
                g.hom_mats.get(&(f.obj_map[x], f.obj_map[y])),
            ) {
                hom_mats.insert((x, y), mg.mul(mf));
            }
        }
        let mut bim_mats = BTreeMap::new();
        for (x, y) in src.bim.el_pairs() {
            if let (Some(mf), Some(mg)) = (
                f.bim_mats.get(&(x, y)),
                g.bim_mats.get(&(f.obj_map[x], f.obj_map[y])),
            ) {
                bim_mats.insert((x, y), mg.mul(mf));
            }
        }
        Bifunctor {
            obj_map,
            hom_mats,
            bim_mats,
        }
    }
}

/// Checks that F preserves identities, composition, both bimodule actions,
/// and the differentiation, on all basis instances.
pub fn validate_bifunctor(src: &BimoduleTriple, dst: &BimoduleTriple, f: &Bifunctor) -> Report {
    let mut report = Report::new();
    let c = &src.cat;
    let dc = &dst.cat;

    let mut shape = Vec::new();
    if f.obj_map.len() != c.object_count() {
        shape.push("object map arity mismatch".to_string());
    }
    for (x, y) in c.hom_pairs() {
        let m = f.hom_mats.get(&(x, y));
        let ok = m.map(|m| {
            m.cols == c.hom_dim(x, y) && m.rows == dc.hom_dim(f.obj_map[x], f.obj_map[y])
        });
        if ok != Some(true) && c.hom_dim(x, y) > 0 {
            shape.push(format!(
                "hom matrix for ({},{}) missing or mis-shaped",
                c.objects[x], c.objects[y]
            ));
        }
    }
    for (x, y) in src.bim.el_pairs() {
        let m = f.bim_mats.get(&(x, y));
        let ok = m.map(|m| {
            m.cols == src.bim.el_dim(x, y) && m.rows == dst.bim.el_dim(f.obj_map[x], f.obj_map[y])
        });
        if ok != Some(true) && src.bim.el_dim(x, y) > 0 {
            shape.push(format!(
                "element matrix for ({},{}) missing or mis-shaped",
                c.objects[x], c.objects[y]
            ));
        }
    }
    if !shape.is_empty() {
        report.check("bifunctor_shapes", shape);
        return report;
    }
    report.check("bifunctor_shapes", Vec::new());

    let mut idv = Vec::new();
    for x in 0..c.object_count() {
        if f.apply_hom(dc, x, x, c.id_coords(x)) != *dc.id_coords(f.obj_map[x]) {
            idv.push(format!("F(1_{}) ≠ 1", c.objects[x]));
        }
    }
    report.check("preserves_identities", idv);

    let mut compv = Vec::new();
    let pairs: Vec<(usize, usize)> = c.hom_pairs().collect();
    for &(x, y) in &pairs {
        for &(y1, z) in &pairs {
            if y1 != y {
                continue;
            }
            for i in 0..c.hom_dim(x, y) {
                let a = c.basis_vec(x, y, i);
                let fa = f.apply_hom(dc, x, y, &a);
                for j in 0..c.hom_dim(y, z) {
                    let b = c.basis_vec(y, z, j);
                    let fb = f.apply_hom(dc, y, z, &b);
                    let lhs = f.apply_hom(dc, x, z, &c.compose(x, y, z, &b, &a));
                    let rhs = dc.compose(f.obj_map[x], f.obj_map[y], f.obj_map[z], &fb, &fa);
                    if lhs != rhs {
                        compv.push(format!(
                            "F({} ∘ {}) ≠ F({}) ∘ F({})",
                            c.hom_names(y, z)[j],
                            c.hom_names(x, y)[i],
                            c.hom_names(y, z)[j],
                            c.hom_names(x, y)[i]
                        ));
                    }
                }
            }
        }
    }
    report.check("preserves_composition", compv);

    let mut actv = Vec::new();
    let el_pairs: Vec<(usize, usize)> = src.bim.el_pairs().collect();
    for &(x, y) in &el_pairs {
        for k in 0..src.bim.el_dim(x, y) {
            let xe = src.bim.el_basis_vec(c.field, x, y, k);
            let fxe = f.apply_el(dst, x, y, &xe);
            for &(y1, z) in &pairs {
                if y1 != y {
                    continue;
                }
                for j in 0..c.hom_dim(y, z) {
                    let b = c.basis_vec(y, z, j);
                    let fb = f.apply_hom(dc, y, z, &b);
                    let lhs = f.apply_el(dst, x, z, &src.bim.left(c, x, y, z, &b, &xe));
                    let rhs =
                        dst.bim
                            .left(dc, f.obj_map[x], f.obj_map[y], f.obj_map[z], &fb, &fxe);
                    if lhs != rhs {
                        actv.push(format!(
                            "F({}·{}) ≠ F({})·F({})",
                            c.hom_names(y, z)[j],
                            src.bim.el_names(x, y)[k],
                            c.hom_names(y, z)[j],
                            src.bim.el_names(x, y)[k]
                        ));
                    }
                }
            }
            for &(w, x1) in &pairs {
                if x1 != x {
                    continue;
                }
                for j in 0..c.hom_dim(w, x) {
                    let a = c.basis_vec(w, x, j);
                    let fa = f.apply_hom(dc, w, x, &a);
                    let lhs = f.apply_el(dst, w, y, &src.bim.right(c, w, x, y, &xe, &a));
                    let rhs =
                        dst.bim
                            .right(dc, f.obj_map[w], f.obj_map[x], f.obj_map[y], &fxe, &fa);
                    if lhs != rhs {
                        actv.push(format!(
                            "F({}·{}) ≠ F({})·F({})",
                            src.bim.el_names(x, y)[k],
                            c.hom_names(w, x)[j],
                            src.bim.el_names(x, y)[k],
                            c.hom_names(w, x)[j]
                        ));
                    }
                }
            }
        }
    }
    report.check("preserves_actions", actv);

    let mut diffv = Vec::new();
    for &(x, y) in &pairs {
        for i in 0..c.hom_dim(x, y) {
            let a = c.basis_vec(x, y, i);
            let lhs = f.apply_el(dst, x, y, &src.diff_apply(x, y, &a));
            let rhs = dst.diff_apply(
                f.obj_map[x],
                f.obj_map[y],
                &f.apply_hom(dc, x, y, &a),
            );
            if lhs != rhs {
                diffv.push(format!("F₁(∂{}) ≠ ∂'F₀({})", c.hom_names(x, y)[i], c.hom_names(x, y)[i]));
            }
        }
    }
    report.check("preserves_differentiation", diffv);
    report
}

/// Finds a two-sided inverse of the morphism `a: X → Y`, if one exists.
pub fn invert_morphism(cat: &FinCat, x: usize, y: usize, a: &Mat) -> Option<Mat> {
    let dyx = cat.hom_dim(y, x);
    if dyx == 0 {
        return None;
    }
    let f = cat.field;
    // stack b∘a = 1_X over b∘-columns with a∘b = 1_Y
    let mut m = Mat::zero(f, cat.hom_dim(x, x) + cat.hom_dim(y, y), dyx);
    for k in 0..dyx {
        let b = cat.basis_vec(y, x, k);
        let ba = cat.compose(x, y, x, &b, a);
        let ab = cat.compose(y, x, y, a, &b);
        for r in 0..ba.rows {
            m.set(r, k, ba.at(r, 0).clone());
        }
        for r in 0..ab.rows {
            m.set(ba.rows + r, k, ab.at(r, 0).clone());
        }
    }
    let rhs = cat.id_coords(x).vstack(cat.id_coords(y));
    let b = m.solve(&rhs)?;
    // exactness re-check
    let ba = cat.compose(x, y, x, &b, a);
    let ab = cat.compose(y, x, y, a, &b);
    if &ba == cat.id_coords(x) && &ab == cat.id_coords(y) {
        Some(b)
    } else {
        None
    }
}

pub use crate::search::coeff_vectors as enumerate_coeff_vectors;

/// Lemma-style equivalence test: (1) hom matrices bijective, (2) each object
/// of `dst` admits an isomorphism with zero differentiation onto some F₀X,
/// (3) element matrices bijective. The ∂-dense search in (2) enumerates
/// `ker ∂` when the budget allows, otherwise samples; failure after a sampled
/// search is reported inconclusive, never as a pass. Over the rationals the
/// search tries only `witnesses` (triples of dst object, src object, and
/// candidate coordinates).
pub fn is_equivalence(
    f: &Bifunctor,
    src: &BimoduleTriple,
    dst: &BimoduleTriple,
    budget: &SearchBudget,
    witnesses: &[(usize, usize, Mat)],
) -> Report {
    let mut report = Report::new();
    let c = &src.cat;
    let dc = &dst.cat;

    let mut ff = Vec::new();
    for x in 0..c.object_count() {
        for y in 0..c.object_count() {
            let sd = c.hom_dim(x, y);
            let dd = dc.hom_dim(f.obj_map[x], f.obj_map[y]);
            if sd == 0 && dd == 0 {
                continue;
            }
            if sd != dd {
                ff.push(format!(
                    "hom dimensions differ at ({},{}): {} vs {}",
                    c.objects[x], c.objects[y], sd, dd
                ));
                continue;
            }
            let m = f.hom_mats.get(&(x, y));
            if m.map(|m| m.is_invertible()) != Some(true) {
                ff.push(format!(
                    "hom matrix at ({},{}) is not bijective",
                    c.objects[x], c.objects[y]
                ));
            }
        }
    }
    report.check("fully_faithful", ff);

    // condition (2): ∂-density
    let mut density_failures = Vec::new();
    let mut density_inconclusive = Vec::new();
    'objects: for xp in 0..dc.object_count() {
        // fast path: xp is literally the image of some source object and the
        // identity has ∂ = 0
        for x in 0..c.object_count() {
            if f.obj_map[x] == xp && dst.diff_apply(xp, xp, dc.id_coords(xp)).is_zero() {
                continue 'objects;
            }
        }
        for &(w_obj, w_src, ref w) in witnesses {
            if w_obj == xp
                && dst.diff_apply(xp, f.obj_map[w_src], w).is_zero()
                && invert_morphism(dc, xp, f.obj_map[w_src], w).is_some()
            {
                continue 'objects;
            }
        }
        let mut saw_sampling = false;
        for x in 0..c.object_count() {
            let fx = f.obj_map[x];
            let d = dc.hom_dim(xp, fx);
            if d == 0 {
                continue;
            }
            // candidates live in ker ∂ ∩ Hom(xp, fx)
            let mut dm = Mat::zero(dc.field, dst.bim.el_dim(xp, fx), d);
            for k in 0..d {
                let col = dst.diff_apply(xp, fx, &dc.basis_vec(xp, fx, k));
                for r in 0..col.rows {
                    dm.set(r, k, col.at(r, 0).clone());
                }
            }
            let kernel = dm.kernel_basis();
            if kernel.is_empty() {
                continue;
            }
            let search = coeff_vectors(dc.field, kernel.len(), budget);
            if matches!(search.kind, SearchKind::Sampled | SearchKind::NotEnumerable) {
                saw_sampling = true;
            }
            for coeffs in search {
                let mut alpha = dc.zero_hom(xp, fx);
                for (k, kv) in kernel.iter().enumerate() {
                    alpha = alpha.add(&kv.scale(coeffs.at(k, 0)));
                }
                if alpha.is_zero() {
                    continue;
                }
                if invert_morphism(dc, xp, fx, &alpha).is_some() {
                    continue 'objects;
                }
            }
        }
        if saw_sampling {
            density_inconclusive.push(format!(
                "∂-density search for object {} exceeded the enumeration budget",
                dc.objects[xp]
            ));
        } else {
            density_failures.push(format!(
                "no ∂-compatible isomorphism found for object {}",
                dc.objects[xp]
            ));
        }
    }
    if !density_failures.is_empty() {
        report.push(Check {
            name: "partial_dense".into(),
            status: crate::report::Status::Fail,
            details: density_failures,
        });
    } else if !density_inconclusive.is_empty() {
        report.push(Check {
            name: "partial_dense".into(),
            status: crate::report::Status::Inconclusive,
            details: density_inconclusive,
        });
    } else {
        report.push(Check::pass("partial_dense"));
    }

    let mut elb = Vec::new();
    for x in 0..c.object_count() {
        for y in 0..c.object_count() {
            let sd = src.bim.el_dim(x, y);
            let dd = dst.bim.el_dim(f.obj_map[x], f.obj_map[y]);
            if sd == 0 && dd == 0 {
                continue;
            }
            if sd != dd {
                elb.push(format!(
                    "element dimensions differ at ({},{}): {} vs {}",
                    c.objects[x], c.objects[y], sd, dd
                ));
                continue;
            }
            let m = f.bim_mats.get(&(x, y));
            if m.map(|m| m.is_invertible()) != Some(true) {
                elb.push(format!(
                    "element matrix at ({},{}) is not bijective",
                    c.objects[x], c.objects[y]
                ));
            }
        }
    }
    report.check("elements_bijective", elb);
    report
}
