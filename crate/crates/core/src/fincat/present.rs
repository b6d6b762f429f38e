//! Name-based assembly of category/bimodule/differentiation presentations.
//!
//! Basis names must be globally unique among hom bases (and, separately,
//! among element bases); omitted composition or action entries are zero.

use std::collections::BTreeMap;

use super::{Bimodule, BimoduleTriple, Differentiation, FinCat};
use crate::exactla::{FieldSpec, Mat, Scalar};

#[derive(Clone, Debug, Default)]
pub struct TriplePresentation {
    pub objects: Vec<String>,
    pub homs: Vec<(String, String, Vec<String>)>,
    /// (after, before, coords of after∘before)
    pub comps: Vec<(String, String, Vec<(String, Scalar)>)>,
    pub ids: Vec<(String, Vec<(String, Scalar)>)>,
    /// element bases; empty means "use the regular bimodule"
    pub els: Vec<(String, String, Vec<String>)>,
    /// (morphism, element, coords of m·e)
    pub lefts: Vec<(String, String, Vec<(String, Scalar)>)>,
    /// (element, morphism, coords of e·m)
    pub rights: Vec<(String, String, Vec<(String, Scalar)>)>,
    /// (morphism, element coords of ∂m); omitted morphisms have ∂ = 0
    pub diffs: Vec<(String, Vec<(String, Scalar)>)>,
}

struct NameIndex {
    pair_of: BTreeMap<String, (usize, usize)>,
    slot_of: BTreeMap<String, usize>,
}

impl NameIndex {
    fn build(
        kind: &str,
        spaces: &[(String, String, Vec<String>)],
        obj_index: &BTreeMap<String, usize>,
    ) -> Result<(BTreeMap<(usize, usize), Vec<String>>, NameIndex), String> {
        let mut by_pair: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
        let mut pair_of = BTreeMap::new();
        let mut slot_of = BTreeMap::new();
        for (src, dst, basis) in spaces {
            let &s = obj_index
                .get(src)
                .ok_or_else(|| format!("unknown object {src:?} in {kind} section"))?;
            let &d = obj_index
                .get(dst)
                .ok_or_else(|| format!("unknown object {dst:?} in {kind} section"))?;
            let entry = by_pair.entry((s, d)).or_default();
            for name in basis {
                if pair_of.contains_key(name) {
                    return Err(format!("duplicate {kind} basis name {name:?}"));
                }
                pair_of.insert(name.clone(), (s, d));
                slot_of.insert(name.clone(), entry.len());
                entry.push(name.clone());
            }
        }
        Ok((by_pair, NameIndex { pair_of, slot_of }))
    }

    fn resolve(&self, kind: &str, name: &str) -> Result<((usize, usize), usize), String> {
        let pair = self
            .pair_of
            .get(name)
            .ok_or_else(|| format!("unknown {kind} basis name {name:?}"))?;
        Ok((*pair, self.slot_of[name]))
    }
}

fn coords_to_vec(
    field: FieldSpec,
    dim: usize,
    index: &NameIndex,
    expected_pair: (usize, usize),
    kind: &str,
    coords: &[(String, Scalar)],
) -> Result<Mat, String> {
    let mut v = Mat::zero(field, dim, 1);
    for (name, value) in coords {
        let (pair, slot) = index.resolve(kind, name)?;
        if pair != expected_pair {
            return Err(format!(
                "{kind} basis name {name:?} lives in a different hom pair than the result requires"
            ));
        }
        v.set(slot, 0, field.add(v.at(slot, 0), value));
    }
    Ok(v)
}

impl TriplePresentation {
    pub fn build(&self, field: FieldSpec) -> Result<BimoduleTriple, String> {
        let mut obj_index = BTreeMap::new();
        for (i, o) in self.objects.iter().enumerate() {
            if obj_index.insert(o.clone(), i).is_some() {
                return Err(format!("duplicate object {o:?}"));
            }
        }

        let (hom, hidx) = NameIndex::build("hom", &self.homs, &obj_index)?;
        let hom_dim = |x: usize, y: usize| hom.get(&(x, y)).map(|b| b.len()).unwrap_or(0);

        let mut comp: BTreeMap<(usize, usize, usize), Mat> = BTreeMap::new();
        for (after, before, coords) in &self.comps {
            let ((y1, z), gk) = hidx.resolve("hom", after)?;
            let ((x, y2), fk) = hidx.resolve("hom", before)?;
            if y1 != y2 {
                return Err(format!(
                    "composition {after:?} ∘ {before:?} is not composable"
                ));
            }
            let y = y1;
            let m = comp.entry((x, y, z)).or_insert_with(|| {
                Mat::zero(field, hom_dim(x, z), hom_dim(y, z) * hom_dim(x, y))
            });
            let col = gk * hom_dim(x, y) + fk;
            let v = coords_to_vec(field, hom_dim(x, z), &hidx, (x, z), "hom", coords)?;
            for r in 0..v.rows {
                m.set(r, col, v.at(r, 0).clone());
            }
        }

        let mut ids = vec![None; self.objects.len()];
        for (obj, coords) in &self.ids {
            let &x = obj_index
                .get(obj)
                .ok_or_else(|| format!("unknown object {obj:?} in identities"))?;
            let v = coords_to_vec(field, hom_dim(x, x), &hidx, (x, x), "hom", coords)?;
            ids[x] = Some(v);
        }
        let ids: Vec<Mat> = ids
            .into_iter()
            .enumerate()
            .map(|(x, v)| v.ok_or_else(|| format!("object {:?} has no identity", self.objects[x])))
            .collect::<Result<_, _>>()?;

        let cat = FinCat::new(field, self.objects.clone(), hom, comp, ids);

        let bim = if self.els.is_empty() {
            Bimodule::regular(&cat)
        } else {
            let (el, eidx) = NameIndex::build("element", &self.els, &obj_index)?;
            let el_dim = |x: usize, y: usize| el.get(&(x, y)).map(|b| b.len()).unwrap_or(0);
            let mut lact: BTreeMap<(usize, usize, usize), Mat> = BTreeMap::new();
            for (mor, elem, coords) in &self.lefts {
                let ((y1, z), bk) = hidx.resolve("hom", mor)?;
                let ((x, y2), xk) = eidx.resolve("element", elem)?;
                if y1 != y2 {
                    return Err(format!("left action {mor:?} · {elem:?} is not composable"));
                }
                let y = y1;
                let m = lact.entry((x, y, z)).or_insert_with(|| {
                    Mat::zero(field, el_dim(x, z), cat.hom_dim(y, z) * el_dim(x, y))
                });
                let col = bk * el_dim(x, y) + xk;
                let v = coords_to_vec(field, el_dim(x, z), &eidx, (x, z), "element", coords)?;
                for r in 0..v.rows {
                    m.set(r, col, v.at(r, 0).clone());
                }
            }
            let mut ract: BTreeMap<(usize, usize, usize), Mat> = BTreeMap::new();
            for (elem, mor, coords) in &self.rights {
                let ((y1, z), xk) = eidx.resolve("element", elem)?;
                let ((x, y2), ak) = hidx.resolve("hom", mor)?;
                if y1 != y2 {
                    return Err(format!("right action {elem:?} · {mor:?} is not composable"));
                }
                let y = y1;
                let m = ract.entry((x, y, z)).or_insert_with(|| {
                    Mat::zero(field, el_dim(x, z), el_dim(y, z) * cat.hom_dim(x, y))
                });
                let col = xk * cat.hom_dim(x, y) + ak;
                let v = coords_to_vec(field, el_dim(x, z), &eidx, (x, z), "element", coords)?;
                for r in 0..v.rows {
                    m.set(r, col, v.at(r, 0).clone());
                }
            }
            Bimodule::new(&cat, el, lact, ract)
        };

        let mut diff_maps: BTreeMap<(usize, usize), Mat> = BTreeMap::new();
        if !self.diffs.is_empty() {
            // resolve element coordinates against whichever element index is
            // in force (explicit or regular)
            for (mor, coords) in &self.diffs {
                let ((x, y), mk) = hidx.resolve("hom", mor)?;
                let dim_el = bim.el_dim(x, y);
                let mut v = Mat::zero(field, dim_el, 1);
                for (name, value) in coords {
                    let slot = bim
                        .el_names(x, y)
                        .iter()
                        .position(|n| n == name)
                        .ok_or_else(|| {
                            format!("unknown element {name:?} in ∂{mor:?} (pair mismatch?)")
                        })?;
                    v.set(slot, 0, field.add(v.at(slot, 0), value));
                }
                let m = diff_maps
                    .entry((x, y))
                    .or_insert_with(|| Mat::zero(field, dim_el, cat.hom_dim(x, y)));
                for r in 0..v.rows {
                    m.set(r, mk, v.at(r, 0).clone());
                }
            }
        }
        let diff = Differentiation::new(diff_maps);

        Ok(BimoduleTriple::new(cat, bim, diff))
    }
}
