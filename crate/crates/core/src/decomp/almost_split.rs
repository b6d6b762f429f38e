//! Almost-split predicates over a declared object set: radical membership,
//! generation of the radical module by one morphism, one-sided-inverse
//! splitting tests, and hom-sequence exactness.

use super::radical_of_pair;
use crate::exactla::{Mat, Subspace};
use crate::fincat::{add_compose, add_hom_basis, AddObject, BlockMat, FinCat};
use crate::report::Report;

fn rad_span(cat: &FinCat, u: &AddObject, v: &AddObject) -> Result<Subspace, String> {
    let blocks = radical_of_pair(cat, u, v)?;
    let dim = BlockMat::hom_flat_dim(cat, &u.summands, &v.summands);
    Ok(Subspace::from_vectors(
        cat.field,
        dim,
        &blocks.iter().map(|b| b.flatten(cat.field)).collect::<Vec<_>>(),
    ))
}

fn solve_one_sided(
    cat: &FinCat,
    candidates: &[BlockMat],
    combine: impl Fn(&BlockMat) -> BlockMat,
    target: &BlockMat,
) -> bool {
    let f = cat.field;
    let tflat = target.flatten(f);
    if candidates.is_empty() {
        return tflat.is_zero();
    }
    let mut m = Mat::zero(f, tflat.rows, candidates.len());
    for (k, c) in candidates.iter().enumerate() {
        let col = combine(c).flatten(f);
        for r in 0..tflat.rows {
            m.set(r, k, col.at(r, 0).clone());
        }
    }
    m.solve(&tflat).is_some()
}

/// Left almost split in the sense used here: `a: src → dst` lies in the
/// radical, generates rad(_, dst) over every declared object, and is not a
/// split epimorphism.
pub fn is_left_almost_split(
    cat: &FinCat,
    declared: &[AddObject],
    src: &AddObject,
    dst: &AddObject,
    a: &BlockMat,
) -> Result<Report, String> {
    let mut report = Report::new();
    let f = cat.field;

    let mut v = Vec::new();
    if !rad_span(cat, src, dst)?.contains(&a.flatten(f)) {
        v.push("morphism is not in the radical".to_string());
    }
    report.check("in_radical", v);

    let mut v = Vec::new();
    for (zi, z) in declared.iter().enumerate() {
        let rad = rad_span(cat, z, dst)?;
        let generated: Vec<Mat> = add_hom_basis(cat, z, src)
            .iter()
            .map(|g| add_compose(cat, a, g).flatten(f))
            .collect();
        let gen_span = Subspace::from_vectors(f, rad.ambient_dim, &generated);
        if !gen_span.same_space(&rad) {
            v.push(format!(
                "a∘Hom(Z{zi}, src) spans {} of the {}-dimensional rad(Z{zi}, dst)",
                gen_span.dim(),
                rad.dim()
            ));
        }
    }
    report.check("generates_radical_into_target", v);

    let mut v = Vec::new();
    let sections = add_hom_basis(cat, dst, src);
    if solve_one_sided(cat, &sections, |s| add_compose(cat, a, s), &dst.identity()) {
        v.push("morphism is a split epimorphism".to_string());
    }
    report.check("not_split_epi", v);
    Ok(report)
}

/// Right almost split: in the radical, generates rad(src, _) over every
/// declared object, and is not a split monomorphism.
pub fn is_right_almost_split(
    cat: &FinCat,
    declared: &[AddObject],
    src: &AddObject,
    dst: &AddObject,
    a: &BlockMat,
) -> Result<Report, String> {
    let mut report = Report::new();
    let f = cat.field;

    let mut v = Vec::new();
    if !rad_span(cat, src, dst)?.contains(&a.flatten(f)) {
        v.push("morphism is not in the radical".to_string());
    }
    report.check("in_radical", v);

    let mut v = Vec::new();
    for (zi, z) in declared.iter().enumerate() {
        let rad = rad_span(cat, src, z)?;
        let generated: Vec<Mat> = add_hom_basis(cat, dst, z)
            .iter()
            .map(|h| add_compose(cat, h, a).flatten(f))
            .collect();
        let gen_span = Subspace::from_vectors(f, rad.ambient_dim, &generated);
        if !gen_span.same_space(&rad) {
            v.push(format!(
                "Hom(dst, Z{zi})∘a spans {} of the {}-dimensional rad(src, Z{zi})",
                gen_span.dim(),
                rad.dim()
            ));
        }
    }
    report.check("generates_radical_out_of_source", v);

    let mut v = Vec::new();
    let retractions = add_hom_basis(cat, dst, src);
    if solve_one_sided(cat, &retractions, |r| add_compose(cat, r, a), &src.identity()) {
        v.push("morphism is a split monomorphism".to_string());
    }
    report.check("not_split_mono", v);
    Ok(report)
}

/// Almost-split sequence X →a Y →b X': a left almost split, b right almost
/// split, and for every declared Z the two induced hom sequences are exact
/// (a = Ker b and b = Cok a).
pub fn is_almost_split_sequence(
    cat: &FinCat,
    declared: &[AddObject],
    x: &AddObject,
    y: &AddObject,
    xp: &AddObject,
    a: &BlockMat,
    b: &BlockMat,
) -> Result<Report, String> {
    let f = cat.field;
    let mut report = Report::new();
    {
        let mut sub = is_left_almost_split(cat, declared, x, y, a)?;
        for c in &mut sub.checks {
            c.name = format!("a_{}", c.name);
        }
        report.merge(sub);
    }
    {
        let mut sub = is_right_almost_split(cat, declared, y, xp, b)?;
        for c in &mut sub.checks {
            c.name = format!("b_{}", c.name);
        }
        report.merge(sub);
    }

    let mut v = Vec::new();
    for (zi, z) in declared.iter().enumerate() {
        // 0 → Hom(Z,X) → Hom(Z,Y) → Hom(Z,X') exact
        let hzx = add_hom_basis(cat, z, x);
        let hzy = add_hom_basis(cat, z, y);
        let a_post: Vec<Mat> = hzx.iter().map(|g| add_compose(cat, a, g).flatten(f)).collect();
        let dim_zy = BlockMat::hom_flat_dim(cat, &z.summands, &y.summands);
        let a_span = Subspace::from_vectors(f, dim_zy, &a_post);
        if a_span.dim() != hzx.len() {
            v.push(format!("a∘− is not injective on Hom(Z{zi}, X)"));
        }
        let kernel: Vec<Mat> = {
            // kernel of b∘− on Hom(Z,Y)
            let dim_zxp = BlockMat::hom_flat_dim(cat, &z.summands, &xp.summands);
            let mut m = Mat::zero(f, dim_zxp, hzy.len());
            for (k, g) in hzy.iter().enumerate() {
                let col = add_compose(cat, b, g).flatten(f);
                for r in 0..dim_zxp {
                    m.set(r, k, col.at(r, 0).clone());
                }
            }
            m.kernel_basis()
                .iter()
                .map(|coef| {
                    let mut acc = Mat::zero(f, dim_zy, 1);
                    for (k, g) in hzy.iter().enumerate() {
                        acc = acc.add(&g.flatten(f).scale(coef.at(k, 0)));
                    }
                    acc
                })
                .collect()
        };
        let ker_span = Subspace::from_vectors(f, dim_zy, &kernel);
        if !ker_span.same_space(&a_span) {
            v.push(format!("ker(b∘−) ≠ im(a∘−) at Z{zi}"));
        }

        // 0 → Hom(X',Z) → Hom(Y,Z) → Hom(X,Z) exact
        let hxpz = add_hom_basis(cat, xp, z);
        let hyz = add_hom_basis(cat, y, z);
        let b_pre: Vec<Mat> = hxpz.iter().map(|h| add_compose(cat, h, b).flatten(f)).collect();
        let dim_yz = BlockMat::hom_flat_dim(cat, &y.summands, &z.summands);
        let b_span = Subspace::from_vectors(f, dim_yz, &b_pre);
        if b_span.dim() != hxpz.len() {
            v.push(format!("−∘b is not injective on Hom(X', Z{zi})"));
        }
        let kernel2: Vec<Mat> = {
            let dim_xz = BlockMat::hom_flat_dim(cat, &x.summands, &z.summands);
            let mut m = Mat::zero(f, dim_xz, hyz.len());
            for (k, h) in hyz.iter().enumerate() {
                let col = add_compose(cat, h, a).flatten(f);
                for r in 0..dim_xz {
                    m.set(r, k, col.at(r, 0).clone());
                }
            }
            m.kernel_basis()
                .iter()
                .map(|coef| {
                    let mut acc = Mat::zero(f, dim_yz, 1);
                    for (k, h) in hyz.iter().enumerate() {
                        acc = acc.add(&h.flatten(f).scale(coef.at(k, 0)));
                    }
                    acc
                })
                .collect()
        };
        let ker2_span = Subspace::from_vectors(f, dim_yz, &kernel2);
        if !ker2_span.same_space(&b_span) {
            v.push(format!("ker(−∘a) ≠ im(−∘b) at Z{zi}"));
        }
    }
    report.check("hom_sequences_exact", v);
    Ok(report)
}

/// Do the given morphisms a_i: X → Y_i generate the radical module
/// rad(X, _) over the declared objects?
pub fn check_radical_generators(
    cat: &FinCat,
    declared: &[AddObject],
    x: &AddObject,
    generators: &[(AddObject, BlockMat)],
) -> Result<Report, String> {
    let f = cat.field;
    let mut report = Report::new();
    let mut v = Vec::new();
    for (k, (y, a)) in generators.iter().enumerate() {
        if !rad_span(cat, x, y)?.contains(&a.flatten(f)) {
            v.push(format!("generator {k} is not in the radical"));
        }
    }
    report.check("generators_in_radical", v);

    let mut v = Vec::new();
    for (zi, z) in declared.iter().enumerate() {
        let rad = rad_span(cat, x, z)?;
        let mut generated = Vec::new();
        for (y, a) in generators {
            for h in add_hom_basis(cat, y, z) {
                generated.push(add_compose(cat, &h, a).flatten(f));
            }
        }
        let gen_span = Subspace::from_vectors(f, rad.ambient_dim, &generated);
        if !gen_span.same_space(&rad) {
            v.push(format!(
                "generators span {} of the {}-dimensional rad(X, Z{zi})",
                gen_span.dim(),
                rad.dim()
            ));
        }
    }
    report.check("generate_radical_module", v);
    Ok(report)
}
