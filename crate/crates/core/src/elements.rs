//! The bimodule category El(T): objects are elements x ∈ B(X,X) over the
//! additive hull, morphisms a: x → y satisfy ax = ya + ∂a. Includes the
//! induced group action on a materialized fragment, the functors between
//! El(T)G and El(TG), their adjunction, and the separability splitting.

use std::collections::BTreeMap;

use crate::crossed::CrossedTriple;
use crate::exactla::{Mat, Subspace};
use crate::fincat::{
    add_compose, add_left, add_right, AddObject, Bifunctor,
    BimoduleTriple, BlockMat, FinCat,
};
use crate::groupact::{FactorSystem, FiniteGroup, GroupAction};
use crate::report::Report;

/// An object of El(T): a carrier in the additive hull and an element of
/// B(carrier, carrier) absorbed by the carrier idempotent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElObject {
    pub carrier: AddObject,
    pub elem: BlockMat,
}

impl ElObject {
    pub fn new(t: &BimoduleTriple, carrier: AddObject, elem: BlockMat) -> Result<ElObject, String> {
        let absorbed = add_right(
            &t.cat,
            &t.bim,
            &add_left(&t.cat, &t.bim, &carrier.idem, &elem),
            &carrier.idem,
        );
        if absorbed != elem {
            return Err("element is not absorbed by the carrier idempotent".into());
        }
        Ok(ElObject { carrier, elem })
    }

    /// The zero element on a plain carrier.
    pub fn zero_on(t: &BimoduleTriple, summands: Vec<usize>) -> ElObject {
        let carrier = AddObject::plain(&t.cat, summands.clone());
        let elem = BlockMat::zero_el(&t.cat, &t.bim, summands.clone(), summands);
        ElObject { carrier, elem }
    }

    pub fn direct_sum(t: &BimoduleTriple, a: &ElObject, b: &ElObject) -> ElObject {
        let carrier = AddObject::direct_sum(&t.cat, &a.carrier, &b.carrier);
        let mut elem = BlockMat::zero_el(
            &t.cat,
            &t.bim,
            carrier.summands.clone(),
            carrier.summands.clone(),
        );
        let na = a.carrier.summands.len();
        for j in 0..na {
            for i in 0..na {
                elem.set_block(j, i, a.elem.block(j, i).clone());
            }
        }
        for j in 0..b.carrier.summands.len() {
            for i in 0..b.carrier.summands.len() {
                elem.set_block(na + j, na + i, b.elem.block(j, i).clone());
            }
        }
        ElObject { carrier, elem }
    }
}

/// x ↦ x^σ on El objects.
pub fn el_act(t: &BimoduleTriple, act: &GroupAction, sigma: usize, x: &ElObject) -> ElObject {
    let summands: Vec<usize> = x
        .carrier
        .summands
        .iter()
        .map(|&o| act.act_obj(sigma, o))
        .collect();
    let idem = act.act_block(t, sigma, &x.carrier.idem);
    let elem = act.act_el_block(t, sigma, &x.elem);
    ElObject {
        carrier: AddObject { summands, idem },
        elem,
    }
}

/// Is `a` a morphism x → y, i.e. absorbed and satisfying ax = ya + ∂a?
pub fn is_el_morphism(t: &BimoduleTriple, x: &ElObject, y: &ElObject, a: &BlockMat) -> bool {
    let absorbed = add_compose(
        &t.cat,
        &y.carrier.idem,
        &add_compose(&t.cat, a, &x.carrier.idem),
    );
    if &absorbed != a {
        return false;
    }
    let ax = add_left(&t.cat, &t.bim, a, &x.elem);
    let ya = add_right(&t.cat, &t.bim, &y.elem, a);
    let da = AddObject::cut_diff(t, &x.carrier, &y.carrier, a);
    ax == ya.add(&da)
}

/// Echelon-normalized basis of Hom_T(x, y), solved as the kernel of
/// a ↦ (a − f a e, ax − ya − ∂a).
pub fn el_hom_basis(t: &BimoduleTriple, x: &ElObject, y: &ElObject) -> Vec<BlockMat> {
    let c = &t.cat;
    let f = t.field();
    let src = &x.carrier.summands;
    let dst = &y.carrier.summands;
    let dim = BlockMat::hom_flat_dim(c, src, dst);
    if dim == 0 {
        return Vec::new();
    }
    let el_dim = BlockMat::el_flat_dim(&t.bim, src, dst);
    let mut m = Mat::zero(f, dim + el_dim, dim);
    for k in 0..dim {
        let mut unit = Mat::zero(f, dim, 1);
        unit.set(k, 0, f.one());
        let a = BlockMat::unflatten_hom(c, src.clone(), dst.clone(), &unit);
        let absorbed = add_compose(c, &y.carrier.idem, &add_compose(c, &a, &x.carrier.idem));
        let c1 = absorbed.flatten(f).sub(&unit);
        let ax = add_left(c, &t.bim, &a, &x.elem);
        let ya = add_right(c, &t.bim, &y.elem, &a);
        let da = AddObject::cut_diff(t, &x.carrier, &y.carrier, &a);
        let c2 = ax.sub(&ya).sub(&da).flatten(f);
        for r in 0..dim {
            m.set(r, k, c1.at(r, 0).clone());
        }
        for r in 0..el_dim {
            m.set(dim + r, k, c2.at(r, 0).clone());
        }
    }
    m.kernel_basis()
        .into_iter()
        .map(|v| BlockMat::unflatten_hom(c, src.clone(), dst.clone(), &v))
        .collect()
}

/// A finite fragment of El(T) materialized as an ordinary category (the
/// principal triple over it), with its objects and hom bases kept alongside.
pub struct ElFragment {
    pub triple: BimoduleTriple,
    pub objects: Vec<ElObject>,
    hom_spans: BTreeMap<(usize, usize), Subspace>,
}

impl ElFragment {
    /// Coordinates of a block morphism in the fragment's hom basis.
    pub fn hom_coords(&self, t: &BimoduleTriple, i: usize, j: usize, a: &BlockMat) -> Option<Mat> {
        let span = self.hom_spans.get(&(i, j))?;
        let flat = a.flatten(t.field());
        let coords = span.coords_of(&flat)?;
        Some(Mat::col(t.field(), coords))
    }
}

/// Materializes the full subcategory of El(T) on the given objects.
pub fn materialize_fragment(t: &BimoduleTriple, objects: Vec<ElObject>) -> ElFragment {
    let f = t.field();
    let k = objects.len();
    let mut hom = BTreeMap::new();
    let mut bases: BTreeMap<(usize, usize), Vec<BlockMat>> = BTreeMap::new();
    let mut spans = BTreeMap::new();
    for i in 0..k {
        for j in 0..k {
            let basis = el_hom_basis(t, &objects[i], &objects[j]);
            if basis.is_empty() {
                continue;
            }
            let names = (0..basis.len())
                .map(|m| format!("h{i}_{j}_{m}"))
                .collect::<Vec<_>>();
            let flat_dim = basis[0].flatten(f).rows;
            let span = Subspace::from_vectors(
                f,
                flat_dim,
                &basis.iter().map(|b| b.flatten(f)).collect::<Vec<_>>(),
            );
            hom.insert((i, j), names);
            spans.insert((i, j), span);
            bases.insert((i, j), basis);
        }
    }
    let hom_dim = |i: usize, j: usize| hom.get(&(i, j)).map(|v| v.len()).unwrap_or(0);

    let mut comp = BTreeMap::new();
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                let dij = hom_dim(i, j);
                let djl = hom_dim(j, l);
                let dil = hom_dim(i, l);
                if dij == 0 || djl == 0 || dil == 0 {
                    continue;
                }
                let mut m = Mat::zero(f, dil, djl * dij);
                for (gk, gmat) in bases[&(j, l)].iter().enumerate() {
                    for (fk, fmat) in bases[&(i, j)].iter().enumerate() {
                        let composed = add_compose(&t.cat, gmat, fmat);
                        let coords = spans[&(i, l)]
                            .coords_of(&composed.flatten(f))
                            .expect("composite of El morphisms is an El morphism");
                        for (r, v) in coords.iter().enumerate() {
                            m.set(r, gk * dij + fk, v.clone());
                        }
                    }
                }
                comp.insert((i, j, l), m);
            }
        }
    }

    let mut ids = Vec::new();
    for (i, x) in objects.iter().enumerate() {
        let e = x.carrier.identity();
        let coords = spans[&(i, i)]
            .coords_of(&e.flatten(f))
            .expect("carrier idempotent is an El endomorphism");
        ids.push(Mat::col(f, coords));
    }

    let names = (0..k).map(|i| format!("el{i}")).collect();
    let cat = FinCat::new(f, names, hom, comp, ids);
    ElFragment {
        triple: BimoduleTriple::principal(cat),
        objects,
        hom_spans: spans,
    }
}

/// Closes a seed list under the action and direct sums (one round), then
/// dedups structurally and caps the list; deterministic.
pub fn generate_el_objects(
    t: &BimoduleTriple,
    g: Option<(&FiniteGroup, &GroupAction)>,
    seeds: &[ElObject],
    cap: usize,
) -> Vec<ElObject> {
    let mut out: Vec<ElObject> = Vec::new();
    let push = |x: ElObject, out: &mut Vec<ElObject>| {
        if out.len() < cap && !out.contains(&x) {
            out.push(x);
        }
    };
    for s in seeds {
        push(s.clone(), &mut out);
    }
    if let Some((group, act)) = g {
        let snapshot = out.clone();
        for x in &snapshot {
            for sigma in 0..group.order() {
                push(el_act(t, act, sigma, x), &mut out);
            }
        }
    }
    let snapshot = out.clone();
    for (i, a) in snapshot.iter().enumerate() {
        for b in snapshot.iter().skip(i) {
            push(ElObject::direct_sum(t, a, b), &mut out);
        }
    }
    out
}

/// Closes under the action only, for fragments that must carry an induced
/// action.
pub fn close_under_action(
    t: &BimoduleTriple,
    g: &FiniteGroup,
    act: &GroupAction,
    seeds: &[ElObject],
) -> Vec<ElObject> {
    let mut out: Vec<ElObject> = Vec::new();
    for s in seeds {
        if !out.contains(s) {
            out.push(s.clone());
        }
    }
    let mut i = 0;
    while i < out.len() {
        for sigma in 0..g.order() {
            let moved = el_act(t, act, sigma, &out[i]);
            if !out.contains(&moved) {
                out.push(moved);
            }
        }
        i += 1;
    }
    out
}

/// Diagonal extension of λ_{σ,τ} to an additive-hull carrier, absorbed by the
/// endpoint idempotents.
fn lambda_block(
    t: &BimoduleTriple,
    g: &FiniteGroup,
    act: &GroupAction,
    lam: &FactorSystem,
    sigma: usize,
    tau: usize,
    carrier: &AddObject,
    inverse: bool,
) -> BlockMat {
    let st = g.mul(sigma, tau);
    let src_objs: Vec<usize> = carrier.summands.iter().map(|&o| act.act_obj(st, o)).collect();
    let dst_objs: Vec<usize> = carrier
        .summands
        .iter()
        .map(|&o| act.act_obj(sigma, act.act_obj(tau, o)))
        .collect();
    let (mut s, mut d) = (src_objs, dst_objs);
    if inverse {
        std::mem::swap(&mut s, &mut d);
    }
    let mut m = BlockMat::zero_hom(&t.cat, s, d);
    for (i, &o) in carrier.summands.iter().enumerate() {
        let v = if inverse {
            lam.inverse_at(t, g, act, sigma, tau, o)
        } else {
            lam.get(sigma, tau, o).clone()
        };
        m.set_block(i, i, v);
    }
    // absorb by the transported carrier idempotents
    let e_src = if inverse {
        act.act_block(t, sigma, &act.act_block(t, tau, &carrier.idem))
    } else {
        act.act_block(t, st, &carrier.idem)
    };
    let e_dst = if inverse {
        act.act_block(t, st, &carrier.idem)
    } else {
        act.act_block(t, sigma, &act.act_block(t, tau, &carrier.idem))
    };
    add_compose(&t.cat, &e_dst, &add_compose(&t.cat, &m, &e_src))
}

/// The induced action of G on a materialized fragment of El(T), together with
/// its factor system (λ_*)_{σ,τ}(x) = λ_{σ,τ}(carrier of x).
pub fn induced_action(
    t: &BimoduleTriple,
    g: &FiniteGroup,
    act: &GroupAction,
    lam: &FactorSystem,
    fragment: &ElFragment,
) -> Result<(GroupAction, FactorSystem), String> {
    let k = fragment.objects.len();
    let find = |x: &ElObject| -> Result<usize, String> {
        fragment
            .objects
            .iter()
            .position(|o| o == x)
            .ok_or_else(|| "fragment is not closed under the action".to_string())
    };
    let mut per_sigma = Vec::new();
    for sigma in 0..g.order() {
        let mut obj_map = Vec::with_capacity(k);
        for x in &fragment.objects {
            obj_map.push(find(&el_act(t, act, sigma, x))?);
        }
        let mut hom_mats = BTreeMap::new();
        for (i, j) in fragment.triple.cat.hom_pairs().collect::<Vec<_>>() {
            let src_dim = fragment.triple.cat.hom_dim(i, j);
            let dst_dim = fragment.triple.cat.hom_dim(obj_map[i], obj_map[j]);
            let mut m = Mat::zero(t.field(), dst_dim, src_dim);
            let basis = el_hom_basis(t, &fragment.objects[i], &fragment.objects[j]);
            for (kk, b) in basis.iter().enumerate() {
                let moved = act.act_block(t, sigma, b);
                let coords = fragment
                    .hom_coords(t, obj_map[i], obj_map[j], &moved)
                    .ok_or("action image of an El morphism leaves the fragment")?;
                for r in 0..dst_dim {
                    m.set(r, kk, coords.at(r, 0).clone());
                }
            }
            hom_mats.insert((i, j), m);
        }
        let bim_mats = hom_mats.clone();
        per_sigma.push(Bifunctor {
            obj_map,
            hom_mats,
            bim_mats,
        });
    }
    let action = GroupAction::new(per_sigma);

    let mut lam_map = BTreeMap::new();
    for sigma in 0..g.order() {
        for tau in 0..g.order() {
            for (i, x) in fragment.objects.iter().enumerate() {
                let lb = lambda_block(t, g, act, lam, sigma, tau, &x.carrier, false);
                let src_idx = action.act_obj(g.mul(sigma, tau), i);
                let dst_idx = action.act_obj(sigma, action.act_obj(tau, i));
                let coords = fragment
                    .hom_coords(t, src_idx, dst_idx, &lb)
                    .ok_or("induced factor value is not a fragment morphism")?;
                lam_map.insert((sigma, tau, i), coords);
            }
        }
    }
    Ok((action, FactorSystem::new(lam_map)))
}

/// Φ on objects: x ↦ x[1] over the crossed triple.
pub fn phi(ct: &CrossedTriple, x: &ElObject) -> ElObject {
    let carrier = AddObject {
        summands: x.carrier.summands.clone(),
        idem: ct.embed_hom_block(&x.carrier.idem),
    };
    let elem = ct.embed_el_block(&x.elem);
    ElObject { carrier, elem }
}

/// Φ on morphisms: reinterprets a family of tagged components
/// (a_σ: x^σ → y over the base) as one crossed morphism; the coordinate
/// identity of the construction.
pub fn phi_mor(ct: &CrossedTriple, x: &ElObject, sigma: usize, a: &BlockMat) -> BlockMat {
    let xs = el_act(&ct.base, &ct.action, sigma, x);
    debug_assert_eq!(a.src, xs.carrier.summands);
    ct.hom_tagged_block(&x.carrier.summands, &a.dst, sigma, a)
}

fn require_embedded_carrier(ct: &CrossedTriple, x: &ElObject) -> Result<AddObject, String> {
    let mut idem = BlockMat::zero_hom(
        &ct.base.cat,
        x.carrier.summands.clone(),
        x.carrier.summands.clone(),
    );
    for j in 0..x.carrier.summands.len() {
        for i in 0..x.carrier.summands.len() {
            let v = x.carrier.idem.block(j, i);
            for sigma in 0..ct.group.order() {
                let comp = ct.hom_component(
                    x.carrier.summands[i],
                    x.carrier.summands[j],
                    sigma,
                    v,
                );
                if sigma == ct.group.unit {
                    idem.set_block(j, i, comp);
                } else if !comp.is_zero() {
                    return Err(
                        "carrier idempotent has components outside the embedded base category"
                            .into(),
                    );
                }
            }
        }
    }
    Ok(AddObject {
        summands: x.carrier.summands.clone(),
        idem,
    })
}

/// Ψ on objects: carrier ⊕_σ X^σ (σ-major, group input order) and components
/// (Ψξ)_{σ,τ} = (x_{σ⁻¹τ})^σ · λ_{σ,σ⁻¹τ}(X). The carrier idempotent of ξ
/// must be embedded from the base category.
pub fn psi(ct: &CrossedTriple, xi: &ElObject) -> Result<ElObject, String> {
    let t = &ct.base;
    let g = &ct.group;
    let act = &ct.action;
    let base_carrier = require_embedded_carrier(ct, xi)?;
    let n = g.order();
    let ns = base_carrier.summands.len();

    let mut summands = Vec::new();
    for sigma in 0..n {
        for &o in &base_carrier.summands {
            summands.push(act.act_obj(sigma, o));
        }
    }
    let mut idem = BlockMat::zero_hom(&t.cat, summands.clone(), summands.clone());
    for sigma in 0..n {
        let e_sigma = act.act_block(t, sigma, &base_carrier.idem);
        for j in 0..ns {
            for i in 0..ns {
                idem.set_block(sigma * ns + j, sigma * ns + i, e_sigma.block(j, i).clone());
            }
        }
    }
    let carrier = AddObject { summands: summands.clone(), idem };

    // tagged components of ξ at base level: x_ρ ∈ B(X^ρ, X) blockwise
    let component = |rho: usize| -> BlockMat {
        let src: Vec<usize> = base_carrier
            .summands
            .iter()
            .map(|&o| act.act_obj(rho, o))
            .collect();
        let mut out = BlockMat::zero_el(&t.cat, &t.bim, src, base_carrier.summands.clone());
        for j in 0..ns {
            for i in 0..ns {
                let comp = ct.el_component(
                    base_carrier.summands[i],
                    base_carrier.summands[j],
                    rho,
                    xi.elem.block(j, i),
                );
                out.set_block(j, i, comp);
            }
        }
        out
    };

    let mut elem = BlockMat::zero_el(&t.cat, &t.bim, summands.clone(), summands);
    for sigma in 0..n {
        for tau in 0..n {
            let rho = g.mul(g.inv(sigma), tau);
            let x_rho = component(rho);
            let moved = act.act_el_block(t, sigma, &x_rho);
            let lb = lambda_block(t, g, act, &ct.factors, sigma, rho, &base_carrier, false);
            let block = add_right(&t.cat, &t.bim, &moved, &lb);
            for j in 0..ns {
                for i in 0..ns {
                    elem.set_block(sigma * ns + j, tau * ns + i, block.block(j, i).clone());
                }
            }
        }
    }
    ElObject::new(t, carrier, elem)
}

/// Ψ on morphisms: (Ψα)_{σ,τ} = (a_{σ⁻¹τ})^σ ∘ λ_{σ,σ⁻¹τ}(X) for a crossed
/// morphism α: ξ → η with tagged components a_ρ: X^ρ → Y.
pub fn psi_mor(
    ct: &CrossedTriple,
    xi: &ElObject,
    eta: &ElObject,
    alpha: &BlockMat,
) -> Result<BlockMat, String> {
    let t = &ct.base;
    let g = &ct.group;
    let act = &ct.action;
    let src_carrier = require_embedded_carrier(ct, xi)?;
    let dst_carrier = require_embedded_carrier(ct, eta)?;
    let n = g.order();
    let ns = src_carrier.summands.len();
    let nd = dst_carrier.summands.len();

    let component = |rho: usize| -> BlockMat {
        let src: Vec<usize> = src_carrier
            .summands
            .iter()
            .map(|&o| act.act_obj(rho, o))
            .collect();
        let mut out = BlockMat::zero_hom(&t.cat, src, dst_carrier.summands.clone());
        for j in 0..nd {
            for i in 0..ns {
                let comp = ct.hom_component(
                    src_carrier.summands[i],
                    dst_carrier.summands[j],
                    rho,
                    alpha.block(j, i),
                );
                out.set_block(j, i, comp);
            }
        }
        out
    };

    let mut src_summands = Vec::new();
    for sigma in 0..n {
        for &o in &src_carrier.summands {
            src_summands.push(act.act_obj(sigma, o));
        }
    }
    let mut dst_summands = Vec::new();
    for sigma in 0..n {
        for &o in &dst_carrier.summands {
            dst_summands.push(act.act_obj(sigma, o));
        }
    }
    let mut out = BlockMat::zero_hom(&t.cat, src_summands, dst_summands);
    for sigma in 0..n {
        for tau in 0..n {
            let rho = g.mul(g.inv(sigma), tau);
            let a_rho = component(rho);
            let moved = act.act_block(t, sigma, &a_rho);
            let lb = lambda_block(t, g, act, &ct.factors, sigma, rho, &src_carrier, false);
            let block = add_compose(&t.cat, &moved, &lb);
            for j in 0..nd {
                for i in 0..ns {
                    out.set_block(sigma * nd + j, tau * ns + i, block.block(j, i).clone());
                }
            }
        }
    }
    Ok(out)
}

/// Adjunction, forward direction: a morphism α: Φx → η yields
/// β: x → Ψη with β_σ = (a_{σ⁻¹})^σ ∘ λ_{σ,σ⁻¹}(X).
pub fn adjoint_forward(
    ct: &CrossedTriple,
    x: &ElObject,
    eta: &ElObject,
    alpha: &BlockMat,
) -> Result<BlockMat, String> {
    let t = &ct.base;
    let g = &ct.group;
    let act = &ct.action;
    let dst_carrier = require_embedded_carrier(ct, eta)?;
    let n = g.order();
    let ns = x.carrier.summands.len();
    let nd = dst_carrier.summands.len();

    let component = |rho: usize| -> BlockMat {
        let src: Vec<usize> = x
            .carrier
            .summands
            .iter()
            .map(|&o| act.act_obj(rho, o))
            .collect();
        let mut out = BlockMat::zero_hom(&t.cat, src, dst_carrier.summands.clone());
        for j in 0..nd {
            for i in 0..ns {
                out.set_block(
                    j,
                    i,
                    ct.hom_component(
                        x.carrier.summands[i],
                        dst_carrier.summands[j],
                        rho,
                        alpha.block(j, i),
                    ),
                );
            }
        }
        out
    };

    let mut dst_summands = Vec::new();
    for sigma in 0..n {
        for &o in &dst_carrier.summands {
            dst_summands.push(act.act_obj(sigma, o));
        }
    }
    let mut beta = BlockMat::zero_hom(&t.cat, x.carrier.summands.clone(), dst_summands);
    for sigma in 0..n {
        let a = component(g.inv(sigma));
        let moved = act.act_block(t, sigma, &a);
        let lb = lambda_block(t, g, act, &ct.factors, sigma, g.inv(sigma), &x.carrier, false);
        let block = add_compose(&t.cat, &moved, &lb);
        for j in 0..nd {
            for i in 0..ns {
                beta.set_block(sigma * nd + j, i, block.block(j, i).clone());
            }
        }
    }
    Ok(beta)
}

/// Adjunction, backward direction: β: x → Ψη yields α: Φx → η with
/// a_σ = λ⁻¹_{σ,σ⁻¹}(Y) ∘ (β_{σ⁻¹})^σ, assembled as a crossed morphism.
pub fn adjoint_backward(
    ct: &CrossedTriple,
    x: &ElObject,
    eta: &ElObject,
    beta: &BlockMat,
) -> Result<BlockMat, String> {
    let t = &ct.base;
    let g = &ct.group;
    let act = &ct.action;
    let dst_carrier = require_embedded_carrier(ct, eta)?;
    let n = g.order();
    let ns = x.carrier.summands.len();
    let nd = dst_carrier.summands.len();

    let row_component = |rho: usize| -> BlockMat {
        // β_ρ: X → Y^ρ
        let dst: Vec<usize> = dst_carrier
            .summands
            .iter()
            .map(|&o| act.act_obj(rho, o))
            .collect();
        let mut out = BlockMat::zero_hom(&t.cat, x.carrier.summands.clone(), dst);
        for j in 0..nd {
            for i in 0..ns {
                out.set_block(j, i, beta.block(rho * nd + j, i).clone());
            }
        }
        out
    };

    let mut alpha = BlockMat::zero_hom(
        &ct.triple.cat,
        x.carrier.summands.clone(),
        dst_carrier.summands.clone(),
    );
    for sigma in 0..n {
        let si = g.inv(sigma);
        let b = row_component(si);
        let moved = act.act_block(t, sigma, &b); // X^σ → (Y^{σ⁻¹})^σ
        let lb_inv = lambda_block(t, g, act, &ct.factors, sigma, si, &dst_carrier, true);
        let a_sigma = add_compose(&t.cat, &lb_inv, &moved); // X^σ → Y
        let tagged = ct.hom_tagged_block(
            &x.carrier.summands,
            &dst_carrier.summands,
            sigma,
            &a_sigma,
        );
        alpha = alpha.add(&tagged);
    }
    Ok(alpha)
}

/// Dimension bookkeeping and the coordinate identity for Φ being fully
/// faithful: the tagged El(T)-morphism families x^σ → y, reinterpreted
/// verbatim as crossed morphisms, form a basis of Hom(Φx, Φy).
pub struct PhiComparison {
    pub dim_tagged_family: usize,
    pub dim_crossed_hom: usize,
    pub report: Report,
}

pub fn check_phi_fully_faithful(ct: &CrossedTriple, x: &ElObject, y: &ElObject) -> PhiComparison {
    let t = &ct.base;
    let g = &ct.group;
    let f = t.field();
    let phi_x = phi(ct, x);
    let phi_y = phi(ct, y);
    let crossed_basis = el_hom_basis(&ct.triple, &phi_x, &phi_y);

    let mut images: Vec<BlockMat> = Vec::new();
    let mut report = Report::new();
    let mut morph_v = Vec::new();
    for sigma in 0..g.order() {
        let xs = el_act(t, &ct.action, sigma, x);
        for (k, a) in el_hom_basis(t, &xs, y).iter().enumerate() {
            let image = phi_mor(ct, x, sigma, a);
            if !is_el_morphism(&ct.triple, &phi_x, &phi_y, &image) {
                morph_v.push(format!(
                    "tagged image of basis morphism {k} at σ={} is not a crossed morphism",
                    g.names[sigma]
                ));
            }
            images.push(image);
        }
    }
    report.check("tagged_images_are_morphisms", morph_v);

    let flat: Vec<Mat> = images.iter().map(|m| m.flatten(f)).collect();
    let ambient = flat.first().map(|v| v.rows).unwrap_or(0);
    let span = Subspace::from_vectors(f, ambient, &flat);
    let mut dim_v = Vec::new();
    if span.dim() != images.len() {
        dim_v.push("tagged images are linearly dependent".to_string());
    }
    if images.len() != crossed_basis.len() {
        dim_v.push(format!(
            "hom dimensions differ: {} tagged vs {} crossed",
            images.len(),
            crossed_basis.len()
        ));
    } else {
        for (k, b) in crossed_basis.iter().enumerate() {
            if !span.contains(&b.flatten(f)) {
                dim_v.push(format!("crossed basis morphism {k} is outside the tagged span"));
            }
        }
    }
    report.check("coordinate_identity_spans", dim_v);

    PhiComparison {
        dim_tagged_family: images.len(),
        dim_crossed_hom: crossed_basis.len(),
        report,
    }
}

/// Verifies the adjunction on full hom bases: forward and backward are
/// mutually inverse bijections between Hom(Φx, η) and Hom(x, Ψη), and the
/// dimensions agree.
pub struct AdjunctionComparison {
    pub dim_crossed_side: usize,
    pub dim_base_side: usize,
    pub report: Report,
}

pub fn check_adjunction(
    ct: &CrossedTriple,
    x: &ElObject,
    eta: &ElObject,
) -> Result<AdjunctionComparison, String> {
    let t = &ct.base;
    let phi_x = phi(ct, x);
    let psi_eta = psi(ct, eta)?;
    let crossed_side = el_hom_basis(&ct.triple, &phi_x, eta);
    let base_side = el_hom_basis(t, x, &psi_eta);

    let mut report = Report::new();
    let mut v = Vec::new();
    if crossed_side.len() != base_side.len() {
        v.push(format!(
            "dim Hom(Φx, η) = {} but dim Hom(x, Ψη) = {}",
            crossed_side.len(),
            base_side.len()
        ));
    }
    report.check("hom_dimensions_agree", v);

    let mut v = Vec::new();
    for (k, alpha) in crossed_side.iter().enumerate() {
        let beta = adjoint_forward(ct, x, eta, alpha)?;
        if !is_el_morphism(t, x, &psi_eta, &beta) {
            v.push(format!("forward image of crossed basis {k} is not a morphism"));
            continue;
        }
        let back = adjoint_backward(ct, x, eta, &beta)?;
        if &back != alpha {
            v.push(format!("backward∘forward differs from identity on crossed basis {k}"));
        }
    }
    report.check("forward_then_backward_is_identity", v);

    let mut v = Vec::new();
    for (k, beta) in base_side.iter().enumerate() {
        let alpha = adjoint_backward(ct, x, eta, beta)?;
        if !is_el_morphism(&ct.triple, &phi_x, eta, &alpha) {
            v.push(format!("backward image of base basis {k} is not a morphism"));
            continue;
        }
        let fwd = adjoint_forward(ct, x, eta, &alpha)?;
        if &fwd != beta {
            v.push(format!("forward∘backward differs from identity on base basis {k}"));
        }
    }
    report.check("backward_then_forward_is_identity", v);

    Ok(AdjunctionComparison {
        dim_crossed_side: crossed_side.len(),
        dim_base_side: base_side.len(),
        report,
    })
}

/// The Theorem-3.4 splitting: for a separability witness α and an object ξ of
/// El(TG), returns (ι, π) with π: ΦΨξ → ξ, ι: ξ → ΦΨξ, and π∘ι = 1_ξ. All
/// three facts are verified exactly; the report carries them.
pub struct SummandWitness {
    pub psi_xi: ElObject,
    pub phi_psi_xi: ElObject,
    pub iota: BlockMat,
    pub pi: BlockMat,
    pub report: Report,
}

pub fn summand_witness(
    ct: &CrossedTriple,
    xi: &ElObject,
    alpha: &crate::centersep::CenterElement,
) -> Result<SummandWitness, String> {
    let t = &ct.base;
    let g = &ct.group;
    let act = &ct.action;
    let base_carrier = require_embedded_carrier(ct, xi)?;
    let n = g.order();
    let ns = base_carrier.summands.len();

    let psi_xi = psi(ct, xi)?;
    let phi_psi_xi = phi(ct, &psi_xi);

    // π: ΦΨξ → ξ, σ-component λ⁻¹_{σ⁻¹,σ}(X)[σ⁻¹]
    let mut pi = BlockMat::zero_hom(
        &ct.triple.cat,
        psi_xi.carrier.summands.clone(),
        base_carrier.summands.clone(),
    );
    for sigma in 0..n {
        let si = g.inv(sigma);
        // λ⁻¹_{σ⁻¹,σ}(X): (X^σ)^{σ⁻¹} → X, tagged [σ⁻¹] as a morphism X^σ → X
        let lb_inv = lambda_block(t, g, act, &ct.factors, si, sigma, &base_carrier, true);
        for j in 0..ns {
            for i in 0..ns {
                let tagged = ct.hom_tagged(
                    act.act_obj(sigma, base_carrier.summands[i]),
                    base_carrier.summands[j],
                    si,
                    lb_inv.block(j, i),
                );
                pi.set_block(j, sigma * ns + i, tagged);
            }
        }
    }
    // absorb by the endpoint idempotents
    pi = add_compose(
        &ct.triple.cat,
        &xi.carrier.idem,
        &add_compose(&ct.triple.cat, &pi, &phi_psi_xi.carrier.idem),
    );

    // ι: ξ → ΦΨξ, σ-component α_{X^σ}[σ]
    let mut iota = BlockMat::zero_hom(
        &ct.triple.cat,
        base_carrier.summands.clone(),
        psi_xi.carrier.summands.clone(),
    );
    for sigma in 0..n {
        for j in 0..ns {
            for i in 0..ns {
                if i != j {
                    continue;
                }
                let xs = act.act_obj(sigma, base_carrier.summands[i]);
                let tagged = ct.hom_tagged(base_carrier.summands[i], xs, sigma, &alpha.per_obj[xs]);
                iota.set_block(sigma * ns + j, i, tagged);
            }
        }
    }
    iota = add_compose(
        &ct.triple.cat,
        &phi_psi_xi.carrier.idem,
        &add_compose(&ct.triple.cat, &iota, &xi.carrier.idem),
    );

    let mut report = Report::new();
    let mut v = Vec::new();
    if !is_el_morphism(&ct.triple, &phi_psi_xi, xi, &pi) {
        v.push("π is not a morphism ΦΨξ → ξ".to_string());
    }
    report.check("pi_is_morphism", v);
    let mut v = Vec::new();
    if !is_el_morphism(&ct.triple, xi, &phi_psi_xi, &iota) {
        v.push("ι is not a morphism ξ → ΦΨξ".to_string());
    }
    report.check("iota_is_morphism", v);
    let mut v = Vec::new();
    let pi_iota = add_compose(&ct.triple.cat, &pi, &iota);
    if pi_iota != xi.carrier.identity() {
        v.push("π∘ι differs from the identity of ξ".to_string());
    }
    report.check("pi_iota_is_identity", v);

    Ok(SummandWitness {
        psi_xi,
        phi_psi_xi,
        iota,
        pi,
        report,
    })
}

#[cfg(test)]
mod tests;
