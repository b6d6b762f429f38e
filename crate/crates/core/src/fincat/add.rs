//! The additive hull: objects are matrix idempotents over the base category,
//! morphisms are block matrices of base-hom coordinates.

use super::{Bimodule, BimoduleTriple, FinCat};
use crate::exactla::{FieldSpec, Mat, Scalar};

/// A block matrix whose (j,i) block is a coordinate column in a base hom or
/// bimodule space from `src[i]` to `dst[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMat {
    pub src: Vec<usize>,
    pub dst: Vec<usize>,
    blocks: Vec<Mat>, // row-major over (dst, src)
}

impl BlockMat {
    pub fn from_blocks(src: Vec<usize>, dst: Vec<usize>, blocks: Vec<Mat>) -> BlockMat {
        assert_eq!(blocks.len(), src.len() * dst.len());
        BlockMat { src, dst, blocks }
    }

    pub fn zero_hom(cat: &FinCat, src: Vec<usize>, dst: Vec<usize>) -> BlockMat {
        let blocks = dst
            .iter()
            .flat_map(|&d| src.iter().map(move |&s| (s, d)))
            .map(|(s, d)| cat.zero_hom(s, d))
            .collect();
        BlockMat { src, dst, blocks }
    }

    pub fn zero_el(cat: &FinCat, bim: &Bimodule, src: Vec<usize>, dst: Vec<usize>) -> BlockMat {
        let blocks = dst
            .iter()
            .flat_map(|&d| src.iter().map(move |&s| (s, d)))
            .map(|(s, d)| bim.zero_el(cat.field, s, d))
            .collect();
        BlockMat { src, dst, blocks }
    }

    pub fn identity(cat: &FinCat, objs: Vec<usize>) -> BlockMat {
        let mut m = BlockMat::zero_hom(cat, objs.clone(), objs);
        for i in 0..m.src.len() {
            let id = cat.id_coords(m.src[i]).clone();
            m.set_block(i, i, id);
        }
        m
    }

    pub fn block(&self, j: usize, i: usize) -> &Mat {
        &self.blocks[j * self.src.len() + i]
    }

    pub fn set_block(&mut self, j: usize, i: usize, m: Mat) {
        self.blocks[j * self.src.len() + i] = m;
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn add(&self, o: &BlockMat) -> BlockMat {
        assert_eq!((&self.src, &self.dst), (&o.src, &o.dst));
        let blocks = self
            .blocks
            .iter()
            .zip(&o.blocks)
            .map(|(a, b)| a.add(b))
            .collect();
        BlockMat {
            src: self.src.clone(),
            dst: self.dst.clone(),
            blocks,
        }
    }

    pub fn sub(&self, o: &BlockMat) -> BlockMat {
        assert_eq!((&self.src, &self.dst), (&o.src, &o.dst));
        let blocks = self
            .blocks
            .iter()
            .zip(&o.blocks)
            .map(|(a, b)| a.sub(b))
            .collect();
        BlockMat {
            src: self.src.clone(),
            dst: self.dst.clone(),
            blocks,
        }
    }

    pub fn scale(&self, k: &Scalar) -> BlockMat {
        let blocks = self.blocks.iter().map(|b| b.scale(k)).collect();
        BlockMat {
            src: self.src.clone(),
            dst: self.dst.clone(),
            blocks,
        }
    }

    /// Flattens into one coordinate column, blocks row-major over (dst, src).
    pub fn flatten(&self, field: FieldSpec) -> Mat {
        let mut entries = Vec::new();
        for b in &self.blocks {
            entries.extend(b.entries().iter().cloned());
        }
        Mat::col(field, entries)
    }

    pub fn unflatten_hom(cat: &FinCat, src: Vec<usize>, dst: Vec<usize>, v: &Mat) -> BlockMat {
        let mut m = BlockMat::zero_hom(cat, src, dst);
        let mut pos = 0;
        for j in 0..m.dst.len() {
            for i in 0..m.src.len() {
                let d = cat.hom_dim(m.src[i], m.dst[j]);
                let mut b = Mat::zero(cat.field, d, 1);
                for k in 0..d {
                    b.set(k, 0, v.at(pos + k, 0).clone());
                }
                m.blocks[j * m.src.len() + i] = b;
                pos += d;
            }
        }
        assert_eq!(pos, v.rows);
        m
    }

    pub fn unflatten_el(
        cat: &FinCat,
        bim: &Bimodule,
        src: Vec<usize>,
        dst: Vec<usize>,
        v: &Mat,
    ) -> BlockMat {
        let mut m = BlockMat::zero_el(cat, bim, src, dst);
        let mut pos = 0;
        for j in 0..m.dst.len() {
            for i in 0..m.src.len() {
                let d = bim.el_dim(m.src[i], m.dst[j]);
                let mut b = Mat::zero(cat.field, d, 1);
                for k in 0..d {
                    b.set(k, 0, v.at(pos + k, 0).clone());
                }
                m.blocks[j * m.src.len() + i] = b;
                pos += d;
            }
        }
        assert_eq!(pos, v.rows);
        m
    }

    pub fn hom_flat_dim(cat: &FinCat, src: &[usize], dst: &[usize]) -> usize {
        dst.iter()
            .map(|&d| src.iter().map(|&s| cat.hom_dim(s, d)).sum::<usize>())
            .sum()
    }

    pub fn el_flat_dim(bim: &Bimodule, src: &[usize], dst: &[usize]) -> usize {
        dst.iter()
            .map(|&d| src.iter().map(|&s| bim.el_dim(s, d)).sum::<usize>())
            .sum()
    }
}

/// Block composition g∘f of morphisms of the free additive hull.
pub fn add_compose(cat: &FinCat, g: &BlockMat, f: &BlockMat) -> BlockMat {
    assert_eq!(g.src, f.dst, "add_compose shape mismatch");
    let mut out = BlockMat::zero_hom(cat, f.src.clone(), g.dst.clone());
    for j in 0..g.dst.len() {
        for i in 0..f.src.len() {
            let mut acc = cat.zero_hom(f.src[i], g.dst[j]);
            for k in 0..g.src.len() {
                let part = cat.compose(f.src[i], g.src[k], g.dst[j], g.block(j, k), f.block(k, i));
                acc = acc.add(&part);
            }
            out.blocks[j * f.src.len() + i] = acc;
        }
    }
    out
}

/// b·x for a hom block b: Y→Z and an element block x ∈ B(X,Y).
pub fn add_left(cat: &FinCat, bim: &Bimodule, b: &BlockMat, x: &BlockMat) -> BlockMat {
    assert_eq!(b.src, x.dst, "add_left shape mismatch");
    let mut out = BlockMat::zero_el(cat, bim, x.src.clone(), b.dst.clone());
    for j in 0..b.dst.len() {
        for i in 0..x.src.len() {
            let mut acc = bim.zero_el(cat.field, x.src[i], b.dst[j]);
            for k in 0..b.src.len() {
                let part = bim.left(cat, x.src[i], b.src[k], b.dst[j], b.block(j, k), x.block(k, i));
                acc = acc.add(&part);
            }
            out.blocks[j * x.src.len() + i] = acc;
        }
    }
    out
}

/// x·a for an element block x ∈ B(Y,Z) and a hom block a: X→Y.
pub fn add_right(cat: &FinCat, bim: &Bimodule, x: &BlockMat, a: &BlockMat) -> BlockMat {
    assert_eq!(x.src, a.dst, "add_right shape mismatch");
    let mut out = BlockMat::zero_el(cat, bim, a.src.clone(), x.dst.clone());
    for j in 0..x.dst.len() {
        for i in 0..a.src.len() {
            let mut acc = bim.zero_el(cat.field, a.src[i], x.dst[j]);
            for k in 0..x.src.len() {
                let part = bim.right(cat, a.src[i], x.src[k], x.dst[j], x.block(j, k), a.block(k, i));
                acc = acc.add(&part);
            }
            out.blocks[j * a.src.len() + i] = acc;
        }
    }
    out
}

/// Blockwise differentiation of a hom block (not yet absorbed by carrier
/// idempotents; see [`AddObject::cut_diff`]).
pub fn add_diff(t: &BimoduleTriple, a: &BlockMat) -> BlockMat {
    let mut out = BlockMat::zero_el(&t.cat, &t.bim, a.src.clone(), a.dst.clone());
    for j in 0..a.dst.len() {
        for i in 0..a.src.len() {
            out.blocks[j * a.src.len() + i] = t.diff_apply(a.src[i], a.dst[j], a.block(j, i));
        }
    }
    out
}

/// An object of the additive hull: a multiset of base summands cut by an
/// idempotent endomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AddObject {
    pub summands: Vec<usize>,
    pub idem: BlockMat,
}

impl AddObject {
    /// A plain direct sum with the identity idempotent.
    pub fn plain(cat: &FinCat, summands: Vec<usize>) -> AddObject {
        let idem = BlockMat::identity(cat, summands.clone());
        AddObject { summands, idem }
    }

    /// The zero object: empty summand list, empty matrices everywhere.
    pub fn zero() -> AddObject {
        AddObject {
            summands: Vec::new(),
            idem: BlockMat {
                src: Vec::new(),
                dst: Vec::new(),
                blocks: Vec::new(),
            },
        }
    }

    pub fn direct_sum(cat: &FinCat, a: &AddObject, b: &AddObject) -> AddObject {
        let mut summands = a.summands.clone();
        summands.extend(b.summands.iter().copied());
        let mut idem = BlockMat::zero_hom(cat, summands.clone(), summands.clone());
        let na = a.summands.len();
        for j in 0..a.summands.len() {
            for i in 0..a.summands.len() {
                idem.blocks[j * summands.len() + i] = a.idem.block(j, i).clone();
            }
        }
        for j in 0..b.summands.len() {
            for i in 0..b.summands.len() {
                idem.blocks[(na + j) * summands.len() + (na + i)] = b.idem.block(j, i).clone();
            }
        }
        AddObject { summands, idem }
    }

    /// Identity morphism of this object (the idempotent itself).
    pub fn identity(&self) -> BlockMat {
        self.idem.clone()
    }

    /// Absorbed differentiation f∘(∂a)∘e; this is the extension of ∂ to the
    /// additive hull and it kills identities of cut objects.
    pub fn cut_diff(t: &BimoduleTriple, src: &AddObject, dst: &AddObject, a: &BlockMat) -> BlockMat {
        let raw = add_diff(t, a);
        let fe = add_left(&t.cat, &t.bim, &dst.idem, &raw);
        add_right(&t.cat, &t.bim, &fe, &src.idem)
    }
}

/// Echelon-normalized basis of the absorbed hom space
/// `{m : dst.idem ∘ m ∘ src.idem = m}`.
pub fn add_hom_basis(cat: &FinCat, src: &AddObject, dst: &AddObject) -> Vec<BlockMat> {
    let dim = BlockMat::hom_flat_dim(cat, &src.summands, &dst.summands);
    if dim == 0 {
        return Vec::new();
    }
    let mut m = Mat::zero(cat.field, dim, dim);
    for k in 0..dim {
        let mut unit = Mat::zero(cat.field, dim, 1);
        unit.set(k, 0, cat.field.one());
        let bm = BlockMat::unflatten_hom(cat, src.summands.clone(), dst.summands.clone(), &unit);
        let projected = add_compose(cat, &dst.idem, &add_compose(cat, &bm, &src.idem));
        let col = projected.flatten(cat.field).sub(&unit);
        for r in 0..dim {
            m.set(r, k, col.at(r, 0).clone());
        }
    }
    m.kernel_basis()
        .into_iter()
        .map(|v| BlockMat::unflatten_hom(cat, src.summands.clone(), dst.summands.clone(), &v))
        .collect()
}

/// Echelon-normalized basis of the absorbed element space
/// `{ξ : dst.idem · ξ · src.idem = ξ}`.
pub fn add_el_basis(
    cat: &FinCat,
    bim: &Bimodule,
    src: &AddObject,
    dst: &AddObject,
) -> Vec<BlockMat> {
    let dim = BlockMat::el_flat_dim(bim, &src.summands, &dst.summands);
    if dim == 0 {
        return Vec::new();
    }
    let mut m = Mat::zero(cat.field, dim, dim);
    for k in 0..dim {
        let mut unit = Mat::zero(cat.field, dim, 1);
        unit.set(k, 0, cat.field.one());
        let bm = BlockMat::unflatten_el(cat, bim, src.summands.clone(), dst.summands.clone(), &unit);
        let projected = add_right(cat, bim, &add_left(cat, bim, &dst.idem, &bm), &src.idem);
        let col = projected.flatten(cat.field).sub(&unit);
        for r in 0..dim {
            m.set(r, k, col.at(r, 0).clone());
        }
    }
    m.kernel_basis()
        .into_iter()
        .map(|v| BlockMat::unflatten_el(cat, bim, src.summands.clone(), dst.summands.clone(), &v))
        .collect()
}

/// Splits an idempotent endomorphism e of `ambient` into (Y, ι, π) with
/// π∘ι = 1_Y and ι∘π = e. Errors when e is not idempotent or not absorbed.
pub fn split_idempotent(
    cat: &FinCat,
    ambient: &AddObject,
    e: &BlockMat,
) -> Result<(AddObject, BlockMat, BlockMat), String> {
    let ee = add_compose(cat, e, e);
    if &ee != e {
        return Err("input is not idempotent".into());
    }
    let absorbed = add_compose(cat, &ambient.idem, &add_compose(cat, e, &ambient.idem));
    if &absorbed != e {
        return Err("idempotent is not absorbed by the ambient object".into());
    }
    let y = AddObject {
        summands: ambient.summands.clone(),
        idem: e.clone(),
    };
    Ok((y, e.clone(), e.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn identity_composes_trivially() {
        let t = fixtures::point3();
        let x = AddObject::plain(&t.cat, vec![0, 0]);
        let id = x.identity();
        let m = {
            let mut m = BlockMat::zero_hom(&t.cat, vec![0, 0], vec![0, 0]);
            m.blocks[0] = Mat::from_i64(t.cat.field, &[&[1]]);
            m.blocks[1] = Mat::from_i64(t.cat.field, &[&[2]]);
            m
        };
        assert_eq!(add_compose(&t.cat, &id, &m), m);
        assert_eq!(add_compose(&t.cat, &m, &id), m);
    }

    #[test]
    fn block_compose_is_matrix_product_over_point3() {
        // over the one-object category with scalar homs, block composition is
        // a plain 2x2 matrix product over F_3
        let t = fixtures::point3();
        let f = t.cat.field;
        let mk = |vals: [i64; 4]| {
            let mut m = BlockMat::zero_hom(&t.cat, vec![0, 0], vec![0, 0]);
            for (k, v) in vals.iter().enumerate() {
                m.blocks[k] = Mat::from_i64(f, &[&[*v]]);
            }
            m
        };
        let a = mk([1, 2, 0, 1]);
        let b = mk([2, 1, 1, 1]);
        let ab = add_compose(&t.cat, &a, &b);
        // [[1,2],[0,1]] * [[2,1],[1,1]] = [[4,3],[1,1]] = [[1,0],[1,1]] mod 3
        assert_eq!(ab, mk([1, 0, 1, 1]));
    }

    #[test]
    fn split_diag_idempotent() {
        let t = fixtures::point3();
        let f = t.cat.field;
        let ambient = AddObject::plain(&t.cat, vec![0, 0]);
        let mut e = BlockMat::zero_hom(&t.cat, vec![0, 0], vec![0, 0]);
        e.blocks[0] = Mat::from_i64(f, &[&[1]]);
        let (y, iota, pi) = split_idempotent(&t.cat, &ambient, &e).unwrap();
        assert_eq!(add_compose(&t.cat, &pi, &iota), y.identity());
        assert_eq!(add_compose(&t.cat, &iota, &pi), e);
        // identity splits to the whole object, zero splits to the zero object
        let (_full, i2, p2) = split_idempotent(&t.cat, &ambient, &ambient.identity()).unwrap();
        assert_eq!(add_compose(&t.cat, &p2, &i2), ambient.identity());
        let z = BlockMat::zero_hom(&t.cat, vec![0, 0], vec![0, 0]);
        let (zero_obj, _, _) = split_idempotent(&t.cat, &ambient, &z).unwrap();
        assert!(add_hom_basis(&t.cat, &zero_obj, &zero_obj).is_empty());
        // non-idempotent input is refused
        let mut bad = BlockMat::zero_hom(&t.cat, vec![0, 0], vec![0, 0]);
        bad.blocks[1] = Mat::from_i64(f, &[&[1]]);
        bad.blocks[2] = Mat::from_i64(f, &[&[1]]);
        assert!(split_idempotent(&t.cat, &ambient, &bad).is_err());
    }

    #[test]
    fn absorbed_hom_basis_respects_idempotents() {
        let t = fixtures::point3();
        let f = t.cat.field;
        let ambient = AddObject::plain(&t.cat, vec![0, 0]);
        let mut e = BlockMat::zero_hom(&t.cat, vec![0, 0], vec![0, 0]);
        e.blocks[0] = Mat::from_i64(f, &[&[1]]);
        let (y, _, _) = split_idempotent(&t.cat, &ambient, &e).unwrap();
        assert_eq!(add_hom_basis(&t.cat, &y, &y).len(), 1);
        assert_eq!(add_hom_basis(&t.cat, &y, &ambient).len(), 2);
        assert_eq!(add_hom_basis(&t.cat, &ambient, &ambient).len(), 4);
    }
}
