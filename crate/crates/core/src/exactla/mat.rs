//! Dense matrices over an exact field and the elimination kernels built on them.
//!
//! Pivoting is deterministic (first nonzero entry scanning top-to-bottom in the
//! leftmost unfinished column), so every basis this module returns is
//! reproducible bit for bit.

use serde::Serialize;

use super::scalar::{FieldSpec, Scalar};
use super::ExactError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldSpec,
    entries: Vec<Scalar>, // row-major
}

impl Mat {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_entries(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Mat {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        Mat {
            rows,
            cols,
            field,
            entries,
        }
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Mat {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for &x in *row {
                entries.push(field.from_i64(x));
            }
        }
        Mat::from_entries(field, r, c, entries)
    }

    /// Column vector from a slice of entries.
    pub fn col(field: FieldSpec, entries: Vec<Scalar>) -> Mat {
        let n = entries.len();
        Mat::from_entries(field, n, 1, entries)
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn add(&self, o: &Mat) -> Mat {
        self.check_same_shape(o);
        let entries = self
            .entries
            .iter()
            .zip(&o.entries)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Mat::from_entries(self.field, self.rows, self.cols, entries)
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        self.check_same_shape(o);
        let entries = self
            .entries
            .iter()
            .zip(&o.entries)
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        Mat::from_entries(self.field, self.rows, self.cols, entries)
    }

    pub fn neg(&self) -> Mat {
        let entries = self.entries.iter().map(|a| self.field.neg(a)).collect();
        Mat::from_entries(self.field, self.rows, self.cols, entries)
    }

    pub fn scale(&self, k: &Scalar) -> Mat {
        let entries = self.entries.iter().map(|a| self.field.mul(k, a)).collect();
        Mat::from_entries(self.field, self.rows, self.cols, entries)
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "dimension mismatch in mul");
        assert_eq!(self.field, o.field, "field mismatch in mul");
        let f = self.field;
        let mut out = Mat::zero(f, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = f.add(out.at(i, j), &f.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Kronecker product of two column vectors, in `self`-major order.
    pub fn kron_vec(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, 1);
        assert_eq!(o.cols, 1);
        let f = self.field;
        let mut entries = Vec::with_capacity(self.rows * o.rows);
        for a in &self.entries {
            for b in &o.entries {
                entries.push(f.mul(a, b));
            }
        }
        Mat::col(f, entries)
    }

    pub fn hstack(&self, o: &Mat) -> Mat {
        assert_eq!(self.rows, o.rows);
        let mut out = Mat::zero(self.field, self.rows, self.cols + o.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c).clone());
            }
            for c in 0..o.cols {
                out.set(r, self.cols + c, o.at(r, c).clone());
            }
        }
        out
    }

    pub fn vstack(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.cols);
        let mut entries = self.entries.clone();
        entries.extend(o.entries.iter().cloned());
        Mat::from_entries(self.field, self.rows + o.rows, self.cols, entries)
    }

    pub fn column(&self, c: usize) -> Mat {
        let entries = (0..self.rows).map(|r| self.at(r, c).clone()).collect();
        Mat::col(self.field, entries)
    }

    fn check_same_shape(&self, o: &Mat) {
        assert_eq!(
            (self.rows, self.cols, self.field),
            (o.rows, o.cols, o.field),
            "shape/field mismatch"
        );
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot_row = (row..m.rows).find(|&r| !m.at(r, col).is_zero());
            let Some(pr) = pivot_row else { continue };
            if pr != row {
                for c in 0..m.cols {
                    let tmp = m.at(row, c).clone();
                    m.set(row, c, m.at(pr, c).clone());
                    m.set(pr, c, tmp);
                }
            }
            let inv = f.inv(m.at(row, col)).expect("pivot nonzero");
            for c in col..m.cols {
                m.set(row, c, f.mul(&inv, m.at(row, c)));
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for c in col..m.cols {
                        let v = f.sub(m.at(r, c), &f.mul(&factor, m.at(row, c)));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// First solution of `self * x = b` in the reduced-echelon parametrization
    /// (free variables set to zero), or `None` when inconsistent.
    pub fn solve(&self, b: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, b.rows, "dimension mismatch in solve");
        assert_eq!(self.field, b.field, "field mismatch in solve");
        let f = self.field;
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        // any pivot in the b-block means inconsistency
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Mat::zero(f, self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.at(i, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// Echelon-normalized basis of the right null space, returned as column
    /// vectors. Empty iff the matrix is injective.
    pub fn kernel_basis(&self) -> Vec<Mat> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = Mat::zero(f, self.cols, 1);
            v.set(free, 0, f.one());
            for (i, &pc) in pivots.iter().enumerate() {
                v.set(pc, 0, f.neg(r.at(i, free)));
            }
            basis.push(v);
        }
        basis
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Mat, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare);
        }
        let id = Mat::identity(self.field, self.rows);
        match self.solve(&id) {
            Some(x) if self.mul(&x) == id => Ok(x),
            _ => Err(ExactError::Singular),
        }
    }

    /// Monic minimal polynomial, low-degree coefficients first, computed by
    /// growing a Krylov-style span of powers of the matrix.
    pub fn min_poly(&self) -> Vec<Scalar> {
        assert!(self.is_square(), "min_poly needs a square matrix");
        let f = self.field;
        let n = self.rows;
        // vectorize successive powers I, A, A^2, ... and look for the first
        // linear dependence
        let mut powers: Vec<Mat> = vec![Mat::identity(f, n)];
        loop {
            let k = powers.len();
            let mut stacked = Mat::zero(f, n * n, k);
            for (j, p) in powers.iter().enumerate() {
                for r in 0..n {
                    for c in 0..n {
                        stacked.set(r * n + c, j, p.at(r, c).clone());
                    }
                }
            }
            let next = powers.last().unwrap().mul(self);
            let mut target = Mat::zero(f, n * n, 1);
            for r in 0..n {
                for c in 0..n {
                    target.set(r * n + c, 0, next.at(r, c).clone());
                }
            }
            if let Some(x) = stacked.solve(&target) {
                // A^k = sum x_j A^j, so minpoly = t^k - sum x_j t^j
                let mut coeffs: Vec<Scalar> = (0..k).map(|j| f.neg(x.at(j, 0))).collect();
                coeffs.push(f.one());
                return coeffs;
            }
            powers.push(next);
        }
    }

    /// Characteristic polynomial via Hessenberg reduction, low-degree
    /// coefficients first; length `n + 1`, leading coefficient 1.
    pub fn char_poly(&self) -> Vec<Scalar> {
        assert!(self.is_square(), "char_poly needs a square matrix");
        let f = self.field;
        let n = self.rows;
        if n == 0 {
            return vec![f.one()];
        }
        let mut h = self.clone();
        // similarity reduction to upper Hessenberg form
        for col in 0..n.saturating_sub(2) {
            let pivot = ((col + 1)..n).find(|&r| !h.at(r, col).is_zero());
            let Some(pr) = pivot else { continue };
            if pr != col + 1 {
                h.swap_rows(pr, col + 1);
                h.swap_cols(pr, col + 1);
            }
            let inv = f.inv(h.at(col + 1, col)).unwrap();
            for r in (col + 2)..n {
                if h.at(r, col).is_zero() {
                    continue;
                }
                let factor = f.mul(&inv, h.at(r, col));
                // row_r -= factor * row_{col+1}; col_{col+1} += factor * col_r
                for c in 0..n {
                    let v = f.sub(h.at(r, c), &f.mul(&factor, h.at(col + 1, c)));
                    h.set(r, c, v);
                }
                for rr in 0..n {
                    let v = f.add(h.at(rr, col + 1), &f.mul(&factor, h.at(rr, r)));
                    h.set(rr, col + 1, v);
                }
            }
        }
        // recurrence over leading principal minors of (tI - H)
        let one = f.one();
        let mut polys: Vec<Vec<Scalar>> = vec![vec![one.clone()]]; // p_0 = 1
        for k in 1..=n {
            // p_k = (t - h[k-1][k-1]) p_{k-1} - sum_{i=1}^{k-1} h[k-1-i][k-1] (prod beta) p_{k-1-i}
            let mut p = poly_mul(
                f,
                &[f.neg(h.at(k - 1, k - 1)), one.clone()],
                &polys[k - 1],
            );
            let mut beta = one.clone();
            for i in 1..k {
                beta = f.mul(&beta, h.at(k - i, k - i - 1));
                if beta.is_zero() {
                    break;
                }
                let coef = f.mul(&beta, h.at(k - 1 - i, k - 1));
                if coef.is_zero() {
                    continue;
                }
                let term = poly_scale(f, &polys[k - 1 - i], &coef);
                p = poly_sub(f, &p, &term);
            }
            polys.push(p);
        }
        let mut out = polys.pop().unwrap();
        out.resize(n + 1, f.zero());
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            let tmp = self.at(a, c).clone();
            self.set(a, c, self.at(b, c).clone());
            self.set(b, c, tmp);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in 0..self.rows {
            let tmp = self.at(r, a).clone();
            self.set(r, a, self.at(r, b).clone());
            self.set(r, b, tmp);
        }
    }
}

pub(crate) fn poly_mul(f: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    out
}

pub(crate) fn poly_scale(f: FieldSpec, a: &[Scalar], k: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| f.mul(x, k)).collect()
}

pub(crate) fn poly_sub(f: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let n = a.len().max(b.len());
    let z = f.zero();
    (0..n)
        .map(|i| f.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect()
}

/// Linear span with a deterministic reduced-echelon basis and membership test.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub field: FieldSpec,
    /// reduced-echelon basis, one column per basis vector
    basis: Vec<Mat>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_vectors(field: FieldSpec, ambient_dim: usize, vectors: &[Mat]) -> Subspace {
        let mut m = Mat::zero(field, vectors.len(), ambient_dim);
        for (r, v) in vectors.iter().enumerate() {
            assert_eq!(v.rows, ambient_dim);
            assert_eq!(v.cols, 1);
            for c in 0..ambient_dim {
                m.set(r, c, v.at(c, 0).clone());
            }
        }
        let (rr, pivots) = m.rref();
        let basis = (0..pivots.len())
            .map(|r| {
                let entries = (0..ambient_dim).map(|c| rr.at(r, c).clone()).collect();
                Mat::col(field, entries)
            })
            .collect();
        Subspace {
            ambient_dim,
            field,
            basis,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    pub fn contains(&self, v: &Mat) -> bool {
        self.coords_of(v).is_some()
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    pub fn coords_of(&self, v: &Mat) -> Option<Vec<Scalar>> {
        assert_eq!(v.rows, self.ambient_dim);
        let mut rem = v.clone();
        let mut coords = Vec::with_capacity(self.basis.len());
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = rem.at(p, 0).clone();
            if !c.is_zero() {
                rem = rem.sub(&b.scale(&c));
            }
            coords.push(c);
        }
        if rem.is_zero() {
            Some(coords)
        } else {
            None
        }
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical representative of `v` modulo the span: the pivot
    /// coordinates are eliminated against the echelon basis.
    pub fn reduce(&self, v: &Mat) -> Mat {
        let mut rem = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = rem.at(p, 0).clone();
            if !c.is_zero() {
                rem = rem.sub(&b.scale(&c));
            }
        }
        rem
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn same_space(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> FieldSpec {
        FieldSpec::prime(3).unwrap()
    }

    #[test]
    fn solve_identity_and_zero() {
        let f = f3();
        let id = Mat::identity(f, 2);
        let b = Mat::from_i64(f, &[&[1], &[2]]);
        assert_eq!(id.solve(&b).unwrap(), b);
        let z = Mat::zero(f, 2, 2);
        let zb = Mat::zero(f, 2, 1);
        assert_eq!(z.solve(&zb).unwrap(), zb);
    }

    #[test]
    fn solve_detects_inconsistency() {
        // row2 = 2*row1 but rhs is not scaled the same way
        let f = f3();
        let a = Mat::from_i64(f, &[&[1, 1], &[2, 2]]);
        let b = Mat::from_i64(f, &[&[0], &[1]]);
        assert!(a.solve(&b).is_none());
    }

    #[test]
    fn kernel_shapes() {
        let f = f3();
        assert!(Mat::identity(f, 4).kernel_basis().is_empty());
        assert_eq!(Mat::zero(f, 2, 3).kernel_basis().len(), 3);
        let a = Mat::from_i64(f, &[&[1, 2]]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], Mat::from_i64(f, &[&[1], &[1]]));
    }

    #[test]
    fn inverse_two_by_two() {
        let f = f3();
        let a = Mat::from_i64(f, &[&[0, 1], &[2, 0]]);
        assert!(a.is_invertible());
        let inv = a.inverse().unwrap();
        assert_eq!(inv, Mat::from_i64(f, &[&[0, 2], &[1, 0]]));
        assert_eq!(a.mul(&inv), Mat::identity(f, 2));
        assert_eq!(inv.mul(&a), Mat::identity(f, 2));
        let sing = Mat::from_i64(FieldSpec::prime(2).unwrap(), &[&[1, 1], &[1, 1]]);
        assert!(!sing.is_invertible());
        assert!(sing.inverse().is_err());
    }

    #[test]
    fn min_poly_examples() {
        let f = f3();
        // zero matrix -> t
        let z = Mat::zero(f, 3, 3);
        assert_eq!(z.min_poly(), vec![f.zero(), f.one()]);
        // identity -> t - 1
        let id = Mat::identity(f, 2);
        assert_eq!(id.min_poly(), vec![f.from_i64(-1), f.one()]);
        // companion matrix of t^2 + 1 over F_3
        let c = Mat::from_i64(f, &[&[0, 2], &[1, 0]]);
        assert_eq!(c.mul(&c).add(&Mat::identity(f, 2)), Mat::zero(f, 2, 2));
        assert_eq!(c.min_poly(), vec![f.one(), f.zero(), f.one()]);
    }

    #[test]
    fn char_poly_matches_min_poly_on_companions() {
        let f = f3();
        let c = Mat::from_i64(f, &[&[0, 2], &[1, 0]]);
        assert_eq!(c.char_poly(), vec![f.one(), f.zero(), f.one()]);
        let id = Mat::identity(f, 3);
        // (t-1)^3 = t^3 - 3t^2 + 3t - 1 = t^3 - 1 over F_3
        assert_eq!(
            id.char_poly(),
            vec![f.from_i64(-1), f.zero(), f.zero(), f.one()]
        );
        // trace shows up with the right sign: c_1 = -tr
        let m = Mat::from_i64(f, &[&[1, 1], &[0, 2]]);
        let cp = m.char_poly();
        assert_eq!(cp[1], f.from_i64(-3)); // -(1+2)
        assert_eq!(cp[0], f.from_i64(2)); // det
    }

    #[test]
    fn subspace_membership() {
        let f = f3();
        let v1 = Mat::from_i64(f, &[&[1], &[2], &[0]]);
        let v2 = Mat::from_i64(f, &[&[0], &[1], &[1]]);
        let s = Subspace::from_vectors(f, 3, &[v1.clone(), v2.clone()]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v1.add(&v2.scale(&f.from_i64(2)))));
        assert!(!s.contains(&Mat::from_i64(f, &[&[0], &[0], &[1]])));
        let coords = s.coords_of(&v1).unwrap();
        let rebuilt = s.basis()[0]
            .scale(&coords[0])
            .add(&s.basis()[1].scale(&coords[1]));
        assert_eq!(rebuilt, v1);
    }
}
