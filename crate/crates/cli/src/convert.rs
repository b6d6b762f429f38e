//! Conversion from the parsed JSON schema into core structures, with located
//! error messages for every unresolved reference or inconsistent dimension.

use std::collections::BTreeMap;

use skewcat::crossed::CrossedTriple;
use skewcat::elements::ElObject;
use skewcat::exactla::{FieldSpec, Mat, Scalar};
use skewcat::fincat::{AddObject, Bifunctor, BimoduleTriple, BlockMat, TriplePresentation};
use skewcat::groupact::{FactorSystem, FiniteGroup, GroupAction};

use crate::schema;

pub struct GroupData {
    pub group: FiniteGroup,
    pub action: GroupAction,
    pub factors: FactorSystem,
}

pub struct NamedMorphism {
    pub name: String,
    pub src: AddObject,
    pub dst: AddObject,
    pub map: BlockMat,
}

pub struct Instance {
    pub field: FieldSpec,
    pub triple: BimoduleTriple,
    pub group: Option<GroupData>,
    pub el_objects: Vec<(String, ElObject)>,
    pub crossed_el_decls: Vec<schema::CrossedElObjectDecl>,
    pub morphisms: Vec<NamedMorphism>,
    pub sequences: Vec<(String, String)>,
    pub left_almost_split: Vec<String>,
    pub right_almost_split: Vec<String>,
    pub radical_generators: Vec<(String, Vec<String>)>,
    pub nu_objects: Vec<String>,
    pub decompose: Vec<(String, Vec<String>)>,
    pub zeta: Option<Scalar>,
}

fn parse_field(section: &schema::FieldSection) -> Result<FieldSpec, String> {
    match section.kind.as_str() {
        "prime" => {
            let p = section
                .p
                .as_ref()
                .ok_or("field.p is required for prime fields")?;
            let p: u64 = p
                .parse()
                .map_err(|_| format!("field.p: {p:?} is not an integer"))?;
            FieldSpec::prime(p).map_err(|e| format!("field.p: {e}"))
        }
        "rational" => Ok(FieldSpec::rational()),
        other => Err(format!("field.kind: unknown kind {other:?}")),
    }
}

fn coords_list(
    field: FieldSpec,
    at: &str,
    coords: &schema::Coords,
) -> Result<Vec<(String, Scalar)>, String> {
    coords
        .iter()
        .map(|(k, v)| {
            field
                .parse(v)
                .map(|s| (k.clone(), s))
                .map_err(|e| format!("{at}: {e}"))
        })
        .collect()
}

pub fn convert(file: &schema::InstanceFile) -> Result<Instance, String> {
    let field = parse_field(&file.field)?;

    let mut pres = TriplePresentation {
        objects: file.category.objects.clone(),
        ..Default::default()
    };
    for h in &file.category.homs {
        pres.homs.push((h.src.clone(), h.dst.clone(), h.basis.clone()));
    }
    for (i, c) in file.category.compose.iter().enumerate() {
        pres.comps.push((
            c.after.clone(),
            c.before.clone(),
            coords_list(field, &format!("category.compose[{i}]"), &c.coords)?,
        ));
    }
    for (i, id) in file.category.identities.iter().enumerate() {
        pres.ids.push((
            id.object.clone(),
            coords_list(field, &format!("category.identities[{i}]"), &id.coords)?,
        ));
    }
    if let Some(bim) = &file.bimodule {
        for e in &bim.elements {
            pres.els.push((e.src.clone(), e.dst.clone(), e.basis.clone()));
        }
        for (i, l) in bim.left.iter().enumerate() {
            pres.lefts.push((
                l.morphism.clone(),
                l.element.clone(),
                coords_list(field, &format!("bimodule.left[{i}]"), &l.coords)?,
            ));
        }
        for (i, r) in bim.right.iter().enumerate() {
            pres.rights.push((
                r.element.clone(),
                r.morphism.clone(),
                coords_list(field, &format!("bimodule.right[{i}]"), &r.coords)?,
            ));
        }
    }
    for (i, d) in file.differentiation.iter().enumerate() {
        pres.diffs.push((
            d.morphism.clone(),
            coords_list(field, &format!("differentiation[{i}]"), &d.coords)?,
        ));
    }
    let triple = pres.build(field).map_err(|e| format!("category: {e}"))?;

    let group = match &file.group {
        None => {
            if !file.action.is_empty() || !file.factors.is_empty() {
                return Err("action/factors sections require a group section".into());
            }
            None
        }
        Some(gsec) => {
            let entries: Vec<(&str, &str, &str)> = gsec
                .table
                .iter()
                .map(|e| (e.left.as_str(), e.right.as_str(), e.product.as_str()))
                .collect();
            let group = FiniteGroup::from_table(gsec.elements.clone(), &gsec.unit, &entries)
                .map_err(|e| format!("group: {e}"))?;
            let action = build_action(&triple, &group, &file.action)?;
            let factors = build_factors(field, &triple, &group, &action, &file.factors)?;
            Some(GroupData {
                group,
                action,
                factors,
            })
        }
    };

    let req = file.requests.clone().unwrap_or_default();
    let mut el_objects = Vec::new();
    for (i, decl) in req.el_objects.iter().enumerate() {
        let at = format!("requests.el_objects[{i}]");
        el_objects.push((decl.name.clone(), resolve_el_object(&triple, &at, decl)?));
    }
    let mut morphisms = Vec::new();
    for (i, decl) in req.morphisms.iter().enumerate() {
        let at = format!("requests.morphisms[{i}]");
        morphisms.push(resolve_morphism(&triple, &at, decl)?);
    }
    for (i, s) in req.sequences.iter().enumerate() {
        for name in [&s.a, &s.b] {
            if !morphisms.iter().any(|m| &m.name == name) {
                return Err(format!(
                    "requests.sequences[{i}]: unknown morphism {name:?}"
                ));
            }
        }
    }
    for name in req.left_almost_split.iter().chain(&req.right_almost_split) {
        if !morphisms.iter().any(|m| &m.name == name) {
            return Err(format!("requests: unknown almost-split morphism {name:?}"));
        }
    }
    for (i, r) in req.radical_generators.iter().enumerate() {
        if triple.cat.object_index(&r.source).is_none() {
            return Err(format!(
                "requests.radical_generators[{i}]: unknown object {:?}",
                r.source
            ));
        }
        for name in &r.morphisms {
            if !morphisms.iter().any(|m| &m.name == name) {
                return Err(format!(
                    "requests.radical_generators[{i}]: unknown morphism {name:?}"
                ));
            }
        }
    }
    for name in &req.nu_objects {
        if triple.cat.object_index(name).is_none() {
            return Err(format!("requests.nu_objects: unknown object {name:?}"));
        }
    }
    for (i, d) in req.decompose.iter().enumerate() {
        for s in &d.summands {
            if triple.cat.object_index(s).is_none() {
                return Err(format!("requests.decompose[{i}]: unknown object {s:?}"));
            }
        }
    }
    // crossed element declarations are resolved against group data later, but
    // object names and tags are validated now
    for (i, decl) in req.crossed_el_objects.iter().enumerate() {
        let at = format!("requests.crossed_el_objects[{i}]");
        if group.is_none() {
            return Err(format!("{at}: crossed elements require a group section"));
        }
        for o in &decl.carrier {
            if triple.cat.object_index(o).is_none() {
                return Err(format!("{at}: unknown object {o:?}"));
            }
        }
        for (bi, b) in decl.elem.iter().enumerate() {
            if b.row >= decl.carrier.len() || b.col >= decl.carrier.len() {
                return Err(format!("{at}.elem[{bi}]: block index out of range"));
            }
            if group
                .as_ref()
                .map(|g| g.group.index(&b.sigma).is_none())
                .unwrap_or(true)
            {
                return Err(format!("{at}.elem[{bi}]: unknown group element {:?}", b.sigma));
            }
        }
    }
    let zeta = match &req.zeta {
        Some(z) => Some(field.parse(z).map_err(|e| format!("requests.zeta: {e}"))?),
        None => None,
    };

    Ok(Instance {
        field,
        triple,
        group,
        el_objects,
        crossed_el_decls: req.crossed_el_objects.clone(),
        morphisms,
        sequences: req.sequences.iter().map(|s| (s.a.clone(), s.b.clone())).collect(),
        left_almost_split: req.left_almost_split.clone(),
        right_almost_split: req.right_almost_split.clone(),
        radical_generators: req
            .radical_generators
            .iter()
            .map(|r| (r.source.clone(), r.morphisms.clone()))
            .collect(),
        nu_objects: req.nu_objects.clone(),
        decompose: req
            .decompose
            .iter()
            .map(|d| (d.name.clone(), d.summands.clone()))
            .collect(),
        zeta,
    })
}

fn find_hom_basis(t: &BimoduleTriple, name: &str) -> Option<((usize, usize), usize)> {
    for (x, y) in t.cat.hom_pairs() {
        if let Some(slot) = t.cat.hom_names(x, y).iter().position(|n| n == name) {
            return Some(((x, y), slot));
        }
    }
    None
}

fn find_el_basis(t: &BimoduleTriple, name: &str) -> Option<((usize, usize), usize)> {
    for (x, y) in t.bim.el_pairs() {
        if let Some(slot) = t.bim.el_names(x, y).iter().position(|n| n == name) {
            return Some(((x, y), slot));
        }
    }
    None
}

fn build_action(
    t: &BimoduleTriple,
    g: &FiniteGroup,
    entries: &[schema::ActionEntry],
) -> Result<GroupAction, String> {
    let mut per_sigma: Vec<Bifunctor> = (0..g.order()).map(|_| Bifunctor::identity(t)).collect();
    for (i, entry) in entries.iter().enumerate() {
        let at = format!("action[{i}]");
        let si = g
            .index(&entry.sigma)
            .ok_or_else(|| format!("{at}: unknown group element {:?}", entry.sigma))?;
        if si == g.unit {
            return Err(format!("{at}: the unit action is fixed to the identity"));
        }
        let mut obj_map: Vec<usize> = (0..t.cat.object_count()).collect();
        for om in &entry.objects {
            let s = t
                .cat
                .object_index(&om.src)
                .ok_or_else(|| format!("{at}: unknown object {:?}", om.src))?;
            let d = t
                .cat
                .object_index(&om.dst)
                .ok_or_else(|| format!("{at}: unknown object {:?}", om.dst))?;
            obj_map[s] = d;
        }
        let mut hom_mats = BTreeMap::new();
        for (x, y) in t.cat.hom_pairs() {
            let rows = t.cat.hom_dim(obj_map[x], obj_map[y]);
            hom_mats.insert((x, y), Mat::zero(t.field(), rows, t.cat.hom_dim(x, y)));
        }
        for im in &entry.homs {
            let (pair, slot) = find_hom_basis(t, &im.basis)
                .ok_or_else(|| format!("{at}: unknown hom basis {:?}", im.basis))?;
            let m = hom_mats.get_mut(&pair).unwrap();
            for (name, val) in &im.coords {
                let (ipair, islot) = find_hom_basis(t, name)
                    .ok_or_else(|| format!("{at}: unknown hom basis {name:?}"))?;
                if ipair != (obj_map[pair.0], obj_map[pair.1]) {
                    return Err(format!(
                        "{at}: image of {:?} lands in the wrong hom pair",
                        im.basis
                    ));
                }
                let s = t.field().parse(val).map_err(|e| format!("{at}: {e}"))?;
                m.set(islot, slot, s);
            }
        }
        let mut bim_mats = BTreeMap::new();
        if entry.elements.is_empty() {
            // regular-bimodule shorthand: element images copy the hom images
            for (&(x, y), m) in &hom_mats {
                if t.bim.el_names(x, y) != t.cat.hom_names(x, y) {
                    return Err(format!(
                        "{at}: element images are required when the bimodule is not regular"
                    ));
                }
                bim_mats.insert((x, y), m.clone());
            }
        } else {
            for (x, y) in t.bim.el_pairs() {
                let rows = t.bim.el_dim(obj_map[x], obj_map[y]);
                bim_mats.insert((x, y), Mat::zero(t.field(), rows, t.bim.el_dim(x, y)));
            }
            for im in &entry.elements {
                let (pair, slot) = find_el_basis(t, &im.basis)
                    .ok_or_else(|| format!("{at}: unknown element basis {:?}", im.basis))?;
                let m = bim_mats.get_mut(&pair).unwrap();
                for (name, val) in &im.coords {
                    let (ipair, islot) = find_el_basis(t, name)
                        .ok_or_else(|| format!("{at}: unknown element basis {name:?}"))?;
                    if ipair != (obj_map[pair.0], obj_map[pair.1]) {
                        return Err(format!(
                            "{at}: image of element {:?} lands in the wrong pair",
                            im.basis
                        ));
                    }
                    let s = t.field().parse(val).map_err(|e| format!("{at}: {e}"))?;
                    m.set(islot, slot, s);
                }
            }
        }
        per_sigma[si] = Bifunctor {
            obj_map,
            hom_mats,
            bim_mats,
        };
    }
    Ok(GroupAction::new(per_sigma))
}

fn build_factors(
    field: FieldSpec,
    t: &BimoduleTriple,
    g: &FiniteGroup,
    act: &GroupAction,
    entries: &[schema::FactorEntry],
) -> Result<FactorSystem, String> {
    // default: identity at every (σ,τ,X); requires object-level composition
    let mut explicit: BTreeMap<(usize, usize, Option<usize>), &schema::FactorEntry> =
        BTreeMap::new();
    for (i, e) in entries.iter().enumerate() {
        let at = format!("factors[{i}]");
        let si = g
            .index(&e.sigma)
            .ok_or_else(|| format!("{at}: unknown group element {:?}", e.sigma))?;
        let ti = g
            .index(&e.tau)
            .ok_or_else(|| format!("{at}: unknown group element {:?}", e.tau))?;
        let obj = match &e.object {
            Some(o) => Some(
                t.cat
                    .object_index(o)
                    .ok_or_else(|| format!("{at}: unknown object {o:?}"))?,
            ),
            None => None,
        };
        if e.scalar.is_some() == e.coords.is_some() {
            return Err(format!("{at}: exactly one of scalar/coords is required"));
        }
        if e.coords.is_some() && obj.is_none() {
            return Err(format!("{at}: coords form requires an object"));
        }
        explicit.insert((si, ti, obj), e);
    }
    let mut lam = BTreeMap::new();
    for si in 0..g.order() {
        for ti in 0..g.order() {
            for x in 0..t.cat.object_count() {
                let src = act.act_obj(g.mul(si, ti), x);
                let dst = act.act_obj(si, act.act_obj(ti, x));
                let entry = explicit
                    .get(&(si, ti, Some(x)))
                    .or_else(|| explicit.get(&(si, ti, None)));
                let v = match entry {
                    None => {
                        if src != dst {
                            return Err(format!(
                                "factors: λ[{},{}]({}) must be given explicitly because X^στ ≠ (X^τ)^σ",
                                g.names[si], g.names[ti], t.cat.objects[x]
                            ));
                        }
                        t.cat.id_coords(src).clone()
                    }
                    Some(e) => {
                        if let Some(s) = &e.scalar {
                            if src != dst {
                                return Err(format!(
                                    "factors: scalar shorthand needs X^στ = (X^τ)^σ at {}",
                                    t.cat.objects[x]
                                ));
                            }
                            let sc = field.parse(s).map_err(|err| format!("factors: {err}"))?;
                            t.cat.id_coords(src).scale(&sc)
                        } else {
                            let coords = e.coords.as_ref().unwrap();
                            let mut v = t.cat.zero_hom(src, dst);
                            for (name, val) in coords {
                                let (pair, slot) = find_hom_basis(t, name).ok_or_else(|| {
                                    format!("factors: unknown hom basis {name:?}")
                                })?;
                                if pair != (src, dst) {
                                    return Err(format!(
                                        "factors: basis {name:?} lies outside hom(X^στ, (X^τ)^σ)"
                                    ));
                                }
                                let s =
                                    field.parse(val).map_err(|err| format!("factors: {err}"))?;
                                v.set(slot, 0, s);
                            }
                            v
                        }
                    }
                };
                lam.insert((si, ti, x), v);
            }
        }
    }
    Ok(FactorSystem::new(lam))
}

fn resolve_el_object(
    t: &BimoduleTriple,
    at: &str,
    decl: &schema::ElObjectDecl,
) -> Result<ElObject, String> {
    let summands: Vec<usize> = decl
        .carrier
        .iter()
        .map(|o| {
            t.cat
                .object_index(o)
                .ok_or_else(|| format!("{at}: unknown object {o:?}"))
        })
        .collect::<Result<_, _>>()?;
    let carrier = AddObject::plain(&t.cat, summands.clone());
    let mut elem = BlockMat::zero_el(&t.cat, &t.bim, summands.clone(), summands.clone());
    for (bi, b) in decl.elem.iter().enumerate() {
        if b.row >= summands.len() || b.col >= summands.len() {
            return Err(format!("{at}.elem[{bi}]: block index out of range"));
        }
        let (x, y) = (summands[b.col], summands[b.row]);
        let mut v = t.bim.zero_el(t.field(), x, y);
        for (name, val) in &b.coords {
            let slot = t
                .bim
                .el_names(x, y)
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| format!("{at}.elem[{bi}]: unknown element {name:?} for this pair"))?;
            let s = t.field().parse(val).map_err(|e| format!("{at}: {e}"))?;
            v.set(slot, 0, s);
        }
        elem.set_block(b.row, b.col, v);
    }
    ElObject::new(t, carrier, elem).map_err(|e| format!("{at}: {e}"))
}

fn resolve_morphism(
    t: &BimoduleTriple,
    at: &str,
    decl: &schema::MorphismDecl,
) -> Result<NamedMorphism, String> {
    let src_ids: Vec<usize> = decl
        .src
        .iter()
        .map(|o| {
            t.cat
                .object_index(o)
                .ok_or_else(|| format!("{at}: unknown object {o:?}"))
        })
        .collect::<Result<_, _>>()?;
    let dst_ids: Vec<usize> = decl
        .dst
        .iter()
        .map(|o| {
            t.cat
                .object_index(o)
                .ok_or_else(|| format!("{at}: unknown object {o:?}"))
        })
        .collect::<Result<_, _>>()?;
    let mut map = BlockMat::zero_hom(&t.cat, src_ids.clone(), dst_ids.clone());
    for (bi, b) in decl.blocks.iter().enumerate() {
        if b.row >= dst_ids.len() || b.col >= src_ids.len() {
            return Err(format!("{at}.blocks[{bi}]: block index out of range"));
        }
        let (x, y) = (src_ids[b.col], dst_ids[b.row]);
        let mut v = t.cat.zero_hom(x, y);
        for (name, val) in &b.coords {
            let slot = t
                .cat
                .hom_names(x, y)
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| format!("{at}.blocks[{bi}]: unknown morphism {name:?} for this pair"))?;
            let s = t.field().parse(val).map_err(|e| format!("{at}: {e}"))?;
            v.set(slot, 0, s);
        }
        map.set_block(b.row, b.col, v);
    }
    Ok(NamedMorphism {
        name: decl.name.clone(),
        src: AddObject::plain(&t.cat, src_ids),
        dst: AddObject::plain(&t.cat, dst_ids),
        map,
    })
}

/// Materializes a declared crossed element over the built crossed triple.
pub fn resolve_crossed_el(
    ct: &CrossedTriple,
    decl: &schema::CrossedElObjectDecl,
) -> Result<ElObject, String> {
    let t = &ct.triple;
    let summands: Vec<usize> = decl
        .carrier
        .iter()
        .map(|o| t.cat.object_index(o).ok_or_else(|| format!("unknown object {o:?}")))
        .collect::<Result<_, _>>()?;
    let carrier = AddObject::plain(&t.cat, summands.clone());
    let mut elem = BlockMat::zero_el(&t.cat, &t.bim, summands.clone(), summands.clone());
    for b in &decl.elem {
        let sigma = ct
            .group
            .index(&b.sigma)
            .ok_or_else(|| format!("unknown group element {:?}", b.sigma))?;
        let (x, y) = (summands[b.col], summands[b.row]);
        let xs = ct.action.act_obj(sigma, x);
        let mut base = ct.base.bim.zero_el(ct.base.field(), xs, y);
        for (name, val) in &b.coords {
            let slot = ct
                .base
                .bim
                .el_names(xs, y)
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| format!("unknown element {name:?} at tag {:?}", b.sigma))?;
            let s = ct
                .base
                .field()
                .parse(val)
                .map_err(|e| format!("crossed element: {e}"))?;
            base.set(slot, 0, s);
        }
        let tagged = ct.el_tagged(x, y, sigma, &base);
        let cur = elem.block(b.row, b.col).clone();
        elem.set_block(b.row, b.col, cur.add(&tagged));
    }
    ElObject::new(t, carrier, elem).map_err(|e| format!("crossed element: {e}"))
}
