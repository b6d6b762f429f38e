//! Radicals of finite-dimensional algebras and categories, semisimple
//! quotients, idempotent lifting, Krull–Schmidt decomposition, the stabilizer
//! reduction chain for counting indecomposable summands in crossed
//! categories, and almost-split predicates.
//!
//! Radical computation is post-verified on every call: the result must be an
//! ideal, nilpotent, and leave a radical-free quotient. A failed post-check is
//! an error, never silent.

mod almost_split;
mod category;
mod nu;

pub use almost_split::{
    check_radical_generators, is_almost_split_sequence, is_left_almost_split,
    is_right_almost_split,
};
pub use category::{krull_schmidt, radical_of_pair, subalgebra, DecompositionReport, EndAlgebra, SummandInfo};
pub use nu::{check_prop41, check_prop42, nu, reduce_cocycle, stabilizer, NuReport, Reduction, Stabilizer};

use crate::exactla::{poly, FieldSpec, Mat, Scalar, Subspace};
use crate::report::{Report, SearchBudget};
use crate::search::{coeff_vectors, SearchKind};

/// A finite-dimensional associative unital algebra given by structure
/// constants.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub field: FieldSpec,
    pub dim: usize,
    mult: Vec<Mat>, // mult[i*dim+j] = coordinates of b_i · b_j
    pub unit: Mat,
}

impl Algebra {
    pub fn new(field: FieldSpec, dim: usize, mult: Vec<Mat>, unit: Mat) -> Algebra {
        assert_eq!(mult.len(), dim * dim);
        for m in &mult {
            assert_eq!((m.rows, m.cols), (dim, 1));
        }
        assert_eq!((unit.rows, unit.cols), (dim, 1));
        Algebra {
            field,
            dim,
            mult,
            unit,
        }
    }

    pub fn basis_mul(&self, i: usize, j: usize) -> &Mat {
        &self.mult[i * self.dim + j]
    }

    pub fn mul_elems(&self, a: &Mat, b: &Mat) -> Mat {
        let f = self.field;
        let mut out = Mat::zero(f, self.dim, 1);
        for i in 0..self.dim {
            let ai = a.at(i, 0);
            if ai.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                let bj = b.at(j, 0);
                if bj.is_zero() {
                    continue;
                }
                out = out.add(&self.basis_mul(i, j).scale(&f.mul(ai, bj)));
            }
        }
        out
    }

    /// Matrix of left multiplication by `a` on the regular module.
    pub fn left_mult_matrix(&self, a: &Mat) -> Mat {
        let f = self.field;
        let mut m = Mat::zero(f, self.dim, self.dim);
        for j in 0..self.dim {
            let mut unit = Mat::zero(f, self.dim, 1);
            unit.set(j, 0, f.one());
            let col = self.mul_elems(a, &unit);
            for r in 0..self.dim {
                m.set(r, j, col.at(r, 0).clone());
            }
        }
        m
    }

    pub fn pow_elem(&self, a: &Mat, mut n: u64) -> Mat {
        let mut acc = self.unit.clone();
        let mut base = a.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul_elems(&acc, &base);
            }
            base = self.mul_elems(&base, &base);
            n >>= 1;
        }
        acc
    }

    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        let f = self.field;
        let mut unit_v = Vec::new();
        for i in 0..self.dim {
            let mut e = Mat::zero(f, self.dim, 1);
            e.set(i, 0, f.one());
            if self.mul_elems(&self.unit, &e) != e || self.mul_elems(&e, &self.unit) != e {
                unit_v.push(format!("unit law fails at basis {i}"));
            }
        }
        report.check("unit_laws", unit_v);
        let mut assoc_v = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_mul(i, j).clone();
                for k in 0..self.dim {
                    let mut ek = Mat::zero(f, self.dim, 1);
                    ek.set(k, 0, f.one());
                    let lhs = self.mul_elems(&ij, &ek);
                    let mut ei = Mat::zero(f, self.dim, 1);
                    ei.set(i, 0, f.one());
                    let rhs = self.mul_elems(&ei, self.basis_mul(j, k));
                    if lhs != rhs {
                        assoc_v.push(format!("associativity fails at ({i},{j},{k})"));
                    }
                }
            }
        }
        report.check("associativity", assoc_v);
        report
    }

    /// Monic minimal polynomial of an element, low-degree first.
    pub fn elem_min_poly(&self, a: &Mat) -> Vec<Scalar> {
        let f = self.field;
        let mut powers = vec![self.unit.clone()];
        loop {
            let k = powers.len();
            let mut stacked = Mat::zero(f, self.dim, k);
            for (j, p) in powers.iter().enumerate() {
                for r in 0..self.dim {
                    stacked.set(r, j, p.at(r, 0).clone());
                }
            }
            let next = self.mul_elems(powers.last().unwrap(), a);
            if let Some(x) = stacked.solve(&next) {
                let mut coeffs: Vec<Scalar> = (0..k).map(|j| f.neg(x.at(j, 0))).collect();
                coeffs.push(f.one());
                return coeffs;
            }
            powers.push(next);
        }
    }

    /// Invertibility via the constant term of the minimal polynomial.
    pub fn elem_is_invertible(&self, a: &Mat) -> bool {
        !self.elem_min_poly(a)[0].is_zero()
    }

    pub fn elem_inverse(&self, a: &Mat) -> Option<Mat> {
        // a · p(a) = 1 with p read off the minimal polynomial
        let mp = self.elem_min_poly(a);
        let c0 = &mp[0];
        if c0.is_zero() {
            return None;
        }
        let f = self.field;
        let neg_inv = f.neg(&f.inv(c0).unwrap());
        let mut acc = Mat::zero(f, self.dim, 1);
        for (k, c) in mp.iter().enumerate().skip(1) {
            let term = self.pow_elem(a, (k - 1) as u64).scale(c);
            acc = acc.add(&term);
        }
        let inv = acc.scale(&neg_inv);
        debug_assert_eq!(self.mul_elems(&inv, a), self.unit);
        Some(inv)
    }

    /// Basis of the center.
    pub fn center(&self) -> Vec<Mat> {
        let f = self.field;
        let mut rows = Mat::zero(f, 0, self.dim);
        for i in 0..self.dim {
            let mut m = Mat::zero(f, self.dim, self.dim);
            for j in 0..self.dim {
                let mut ej = Mat::zero(f, self.dim, 1);
                ej.set(j, 0, f.one());
                let mut ei = Mat::zero(f, self.dim, 1);
                ei.set(i, 0, f.one());
                let comm = self.mul_elems(&ej, &ei).sub(&self.mul_elems(&ei, &ej));
                for r in 0..self.dim {
                    m.set(r, j, comm.at(r, 0).clone());
                }
            }
            rows = rows.vstack(&m);
        }
        rows.kernel_basis()
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                if self.basis_mul(i, j) != self.basis_mul(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// The quotient by a (verified) two-sided ideal, with projection and a
    /// linear section.
    pub fn quotient(&self, ideal: &Subspace) -> (Algebra, QuotientMap) {
        let f = self.field;
        let qdim = self.dim - ideal.dim();
        // complement coordinates: the non-pivot slots of the ideal basis
        let pivots: std::collections::BTreeSet<usize> = ideal.pivots().iter().copied().collect();
        let complement: Vec<usize> = (0..self.dim).filter(|r| !pivots.contains(r)).collect();
        assert_eq!(complement.len(), qdim);
        let project = {
            let ideal = ideal.clone();
            let complement = complement.clone();
            move |v: &Mat| -> Mat {
                let reduced = ideal.reduce(v);
                let entries = complement.iter().map(|&r| reduced.at(r, 0).clone()).collect();
                Mat::col(f, entries)
            }
        };
        let lift = {
            let complement = complement.clone();
            let dim = self.dim;
            move |q: &Mat| -> Mat {
                let mut v = Mat::zero(f, dim, 1);
                for (k, &r) in complement.iter().enumerate() {
                    v.set(r, 0, q.at(k, 0).clone());
                }
                v
            }
        };
        let mut mult = Vec::with_capacity(qdim * qdim);
        for i in 0..qdim {
            for j in 0..qdim {
                let mut qi = Mat::zero(f, qdim, 1);
                qi.set(i, 0, f.one());
                let mut qj = Mat::zero(f, qdim, 1);
                qj.set(j, 0, f.one());
                mult.push(project(&self.mul_elems(&lift(&qi), &lift(&qj))));
            }
        }
        let unit = project(&self.unit);
        let q = Algebra::new(f, qdim, mult, unit);
        (
            q,
            QuotientMap {
                project: Box::new(project),
                lift: Box::new(lift),
            },
        )
    }

    /// The corner algebra eAe for an idempotent e, with its embedding data.
    pub fn corner(&self, e: &Mat) -> Corner {
        let f = self.field;
        debug_assert_eq!(&self.mul_elems(e, e), e);
        let images: Vec<Mat> = (0..self.dim)
            .map(|i| {
                let mut ei = Mat::zero(f, self.dim, 1);
                ei.set(i, 0, f.one());
                self.mul_elems(e, &self.mul_elems(&ei, e))
            })
            .collect();
        let span = Subspace::from_vectors(f, self.dim, &images);
        let cdim = span.dim();
        let mut mult = Vec::with_capacity(cdim * cdim);
        for i in 0..cdim {
            for j in 0..cdim {
                let prod = self.mul_elems(&span.basis()[i], &span.basis()[j]);
                mult.push(Mat::col(f, span.coords_of(&prod).expect("corner is closed")));
            }
        }
        let unit = Mat::col(f, span.coords_of(e).expect("e lies in its corner"));
        Corner {
            algebra: Algebra::new(f, cdim, mult, unit),
            span,
        }
    }
}

pub struct QuotientMap {
    pub project: Box<dyn Fn(&Mat) -> Mat>,
    pub lift: Box<dyn Fn(&Mat) -> Mat>,
}

pub struct Corner {
    pub algebra: Algebra,
    pub span: Subspace,
}

impl Corner {
    pub fn to_ambient(&self, v: &Mat) -> Mat {
        let f = self.algebra.field;
        let mut acc = Mat::zero(f, self.span.ambient_dim, 1);
        for (k, b) in self.span.basis().iter().enumerate() {
            acc = acc.add(&b.scale(v.at(k, 0)));
        }
        acc
    }

    pub fn from_ambient(&self, v: &Mat) -> Option<Mat> {
        self.span
            .coords_of(v)
            .map(|c| Mat::col(self.algebra.field, c))
    }
}

fn radical_raw(a: &Algebra) -> Subspace {
    let f = a.field;
    match f {
        FieldSpec::Rational => {
            // kernel of the trace form tr(L_x L_y)
            let lms: Vec<Mat> = (0..a.dim)
                .map(|i| {
                    let mut ei = Mat::zero(f, a.dim, 1);
                    ei.set(i, 0, f.one());
                    a.left_mult_matrix(&ei)
                })
                .collect();
            let mut form = Mat::zero(f, a.dim, a.dim);
            for i in 0..a.dim {
                for j in 0..a.dim {
                    let prod = lms[i].mul(&lms[j]);
                    let mut tr = f.zero();
                    for r in 0..a.dim {
                        tr = f.add(&tr, prod.at(r, r));
                    }
                    form.set(j, i, tr);
                }
            }
            let vs = form.kernel_basis();
            Subspace::from_vectors(f, a.dim, &vs)
        }
        FieldSpec::Prime(p) => {
            // descending chain cut out by characteristic-polynomial
            // coefficients c_{p^i} of left multiplications on the regular
            // module; each restriction is linear on the previous member
            let n = a.dim;
            let mut current: Vec<Mat> = (0..n)
                .map(|i| {
                    let mut ei = Mat::zero(f, n, 1);
                    ei.set(i, 0, f.one());
                    ei
                })
                .collect();
            let mut pk = 1u64;
            while pk <= n as u64 && !current.is_empty() {
                let k = current.len();
                let mut form = Mat::zero(f, k, k);
                for i in 0..k {
                    for j in 0..k {
                        let prod = a.mul_elems(&current[i], &current[j]);
                        let cp = a.left_mult_matrix(&prod).char_poly();
                        // char poly is stored low-first with length n+1;
                        // the λ^{n-p^i} coefficient sits at index n - p^i
                        form.set(j, i, cp[n - pk as usize].clone());
                    }
                }
                // vectors u with Σ u_i f(b_i b_j) = 0 for all j
                let next_coords = form.kernel_basis();
                current = next_coords
                    .into_iter()
                    .map(|u| {
                        let mut acc = Mat::zero(f, n, 1);
                        for (i, b) in current.iter().enumerate() {
                            acc = acc.add(&b.scale(u.at(i, 0)));
                        }
                        acc
                    })
                    .collect();
                pk *= p;
            }
            Subspace::from_vectors(f, n, &current)
        }
    }
}

/// Products of all pairs from two vector lists, spanned.
fn span_products(a: &Algebra, left: &[Mat], right: &[Mat]) -> Subspace {
    let mut prods = Vec::new();
    for l in left {
        for r in right {
            prods.push(a.mul_elems(l, r));
        }
    }
    Subspace::from_vectors(a.field, a.dim, &prods)
}

/// The Jacobson radical, post-verified: the returned span is a two-sided
/// ideal, nilpotent, and the same procedure on the quotient returns zero.
pub fn radical(a: &Algebra) -> Result<Subspace, String> {
    let j = radical_raw(a);
    // ideal
    let unit_vecs: Vec<Mat> = (0..a.dim)
        .map(|i| {
            let mut ei = Mat::zero(a.field, a.dim, 1);
            ei.set(i, 0, a.field.one());
            ei
        })
        .collect();
    let jb: Vec<Mat> = j.basis().to_vec();
    for b in &unit_vecs {
        for r in &jb {
            if !j.contains(&a.mul_elems(b, r)) || !j.contains(&a.mul_elems(r, b)) {
                return Err("radical post-check failed: result is not an ideal".into());
            }
        }
    }
    // nilpotent
    let mut power: Vec<Mat> = jb.clone();
    for _ in 0..=a.dim {
        if power.is_empty() {
            break;
        }
        let next = span_products(a, &power, &jb);
        if next.dim() == 0 {
            power = Vec::new();
            break;
        }
        if next.dim() >= Subspace::from_vectors(a.field, a.dim, &power).dim()
            && next.same_space(&Subspace::from_vectors(a.field, a.dim, &power))
        {
            return Err("radical post-check failed: result is not nilpotent".into());
        }
        power = next.basis().to_vec();
    }
    if !power.is_empty() {
        return Err("radical post-check failed: nilpotency did not terminate".into());
    }
    // radical-free quotient
    let (q, _) = a.quotient(&j);
    if radical_raw(&q).dim() != 0 {
        return Err("radical post-check failed: quotient still has radical".into());
    }
    Ok(j)
}

/// Number of simple components of a commutative semisimple algebra over F_p:
/// the dimension of the fixed space of the Frobenius map. Cross-checked by
/// exhaustive idempotent enumeration when the algebra is small enough.
pub fn count_simple_components(a: &Algebra, budget: &SearchBudget) -> Result<usize, String> {
    let FieldSpec::Prime(p) = a.field else {
        return Err("component counting requires a prime field".into());
    };
    if !a.is_commutative() {
        return Err("component counting requires a commutative algebra".into());
    }
    if radical_raw(a).dim() != 0 {
        return Err("component counting requires a semisimple algebra".into());
    }
    let f = a.field;
    let mut frob = Mat::zero(f, a.dim, a.dim);
    for i in 0..a.dim {
        let mut ei = Mat::zero(f, a.dim, 1);
        ei.set(i, 0, f.one());
        let img = a.pow_elem(&ei, p);
        for r in 0..a.dim {
            frob.set(r, i, img.at(r, 0).clone());
        }
    }
    let fixed = frob.sub(&Mat::identity(f, a.dim)).kernel_basis().len();

    if a.dim <= 6 {
        let search = coeff_vectors(f, a.dim, budget);
        if matches!(search.kind, SearchKind::Exhaustive) {
            let mut idempotents = 0u64;
            for v in search {
                if a.mul_elems(&v, &v) == v {
                    idempotents += 1;
                }
            }
            if idempotents != 1u64 << fixed {
                return Err(format!(
                    "component count cross-check failed: {idempotents} idempotents vs 2^{fixed}"
                ));
            }
        }
    }
    Ok(fixed)
}

/// A complete system of primitive orthogonal idempotents lifted from the
/// semisimple quotient.
pub struct IdempotentLift {
    pub radical: Subspace,
    pub idempotents: Vec<Mat>,
    /// central primitive idempotents of the quotient, in ambient quotient
    /// coordinates
    pub central_in_quotient: Vec<Mat>,
    /// for each lifted idempotent, the index of its central class
    pub class_of: Vec<usize>,
    pub quotient: Algebra,
    pub quotient_map: QuotientMap,
}

/// Splits the identity of a semisimple algebra into central primitive
/// idempotents using the fixed space of Frobenius (over F_p) or rational
/// roots of central minimal polynomials (over Q).
fn central_primitive_idempotents(s: &Algebra, budget: &SearchBudget) -> Result<Vec<Mat>, String> {
    let f = s.field;
    let center = s.center();
    let splitters: Vec<Mat> = match f {
        FieldSpec::Prime(p) => {
            // Frobenius fixed space inside the center
            let cspan = Subspace::from_vectors(f, s.dim, &center);
            let mut m = Mat::zero(f, s.dim, cspan.dim());
            for (i, b) in cspan.basis().iter().enumerate() {
                let img = s.pow_elem(b, p).sub(b);
                for r in 0..s.dim {
                    m.set(r, i, img.at(r, 0).clone());
                }
            }
            m.kernel_basis()
                .into_iter()
                .map(|u| {
                    let mut acc = Mat::zero(f, s.dim, 1);
                    for (i, b) in cspan.basis().iter().enumerate() {
                        acc = acc.add(&b.scale(u.at(i, 0)));
                    }
                    acc
                })
                .collect()
        }
        FieldSpec::Rational => center,
    };

    let mut system = vec![s.unit.clone()];
    for v in &splitters {
        let mut next = Vec::new();
        for e in &system {
            let w = s.mul_elems(e, v);
            // minimal polynomial of w inside the corner; over the fixed
            // space every irreducible factor is linear
            let corner = s.corner(e);
            let wc = corner
                .from_ambient(&w)
                .ok_or("splitter leaves its corner")?;
            let mp = corner.algebra.elem_min_poly(&wc);
            let roots = match f {
                FieldSpec::Prime(_) => poly::fp_roots(f, &mp),
                FieldSpec::Rational => rational_roots(f, &mp),
            };
            if roots.len() <= 1 {
                next.push(e.clone());
                continue;
            }
            // Lagrange projectors at each root
            for c in &roots {
                let mut proj = corner.algebra.unit.clone();
                for c2 in &roots {
                    if c2 == c {
                        continue;
                    }
                    let num = wc.sub(&corner.algebra.unit.scale(c2));
                    let denom = f.sub(c, c2);
                    proj = corner
                        .algebra
                        .mul_elems(&proj, &num.scale(&f.inv(&denom).unwrap()));
                }
                let amb = corner.to_ambient(&proj);
                if !amb.is_zero() {
                    next.push(amb);
                }
            }
        }
        system = next;
    }
    let _ = budget;
    // exactness checks
    let mut sum = Mat::zero(f, s.dim, 1);
    for e in &system {
        if s.mul_elems(e, e) != *e {
            return Err("central splitting produced a non-idempotent".into());
        }
        sum = sum.add(e);
    }
    if sum != s.unit {
        return Err("central idempotents do not sum to 1".into());
    }
    for (i, e) in system.iter().enumerate() {
        for e2 in system.iter().skip(i + 1) {
            if !s.mul_elems(e, e2).is_zero() {
                return Err("central idempotents are not orthogonal".into());
            }
        }
    }
    Ok(system)
}

fn rational_roots(f: FieldSpec, mp: &[Scalar]) -> Vec<Scalar> {
    // desk-scale deterministic search: try roots c with small numerator and
    // denominator; adequate for the rational fixtures this crate ships
    let mut roots = Vec::new();
    for num in -16i64..=16 {
        for den in 1i64..=8 {
            let c = match f.parse(&format!("{num}/{den}")) {
                Ok(c) => c,
                Err(_) => continue,
            };
            if poly::eval(f, mp, &c).is_zero() && !roots.contains(&c) {
                roots.push(c);
            }
        }
    }
    roots
}

/// Checks that every nonzero element of the algebra is invertible, by
/// exhaustive enumeration when the budget allows.
pub fn is_division_algebra(a: &Algebra, budget: &SearchBudget) -> Result<bool, String> {
    if a.dim == 0 {
        return Ok(false);
    }
    if a.dim == 1 {
        return Ok(true);
    }
    let search = coeff_vectors(a.field, a.dim, budget);
    match search.kind {
        SearchKind::Exhaustive => {
            for v in search {
                if !v.is_zero() && !a.elem_is_invertible(&v) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        _ => Err("division-algebra check exceeded the enumeration budget".into()),
    }
}

/// First non-invertible nonzero element in lexicographic order, if any.
fn find_zero_divisor(a: &Algebra, budget: &SearchBudget) -> Result<Option<Mat>, String> {
    let search = coeff_vectors(a.field, a.dim, budget);
    match search.kind {
        SearchKind::Exhaustive => {
            for v in search {
                if !v.is_zero() && !a.elem_is_invertible(&v) {
                    return Ok(Some(v));
                }
            }
            Ok(None)
        }
        _ => Err("zero-divisor search exceeded the enumeration budget".into()),
    }
}

/// Refines a central idempotent of a semisimple algebra into primitive
/// orthogonal idempotents by repeatedly splitting along zero divisors.
fn refine_to_primitives(
    s: &Algebra,
    e: &Mat,
    budget: &SearchBudget,
    out: &mut Vec<Mat>,
) -> Result<(), String> {
    let corner = s.corner(e);
    if corner.algebra.dim == 0 {
        return Ok(());
    }
    match find_zero_divisor(&corner.algebra, budget)? {
        None => {
            out.push(e.clone());
            Ok(())
        }
        Some(w) => {
            let f = s.field;
            let mp = corner.algebra.elem_min_poly(&w);
            // w is a zero divisor of a semisimple corner: minpoly = t·h with
            // h(0) ≠ 0
            assert!(mp[0].is_zero(), "zero divisor has invertible minpoly");
            let h: Vec<Scalar> = mp[1..].to_vec();
            assert!(!h[0].is_zero(), "semisimple corner has nilpotents");
            let t_poly = vec![f.zero(), f.one()];
            let (g, u, _v) = poly::bezout(f, &t_poly, &h);
            assert_eq!(g, vec![f.one()], "t and h are coprime");
            // e' = u(w)·w is the CRT idempotent supported where w is invertible
            let mut uw = Mat::zero(f, corner.algebra.dim, 1);
            for (k, c) in u.iter().enumerate() {
                uw = uw.add(&corner.algebra.pow_elem(&w, k as u64).scale(c));
            }
            let e1 = corner.algebra.mul_elems(&uw, &w);
            assert_eq!(
                corner.algebra.mul_elems(&e1, &e1),
                e1,
                "CRT element must be idempotent"
            );
            let e1_amb = corner.to_ambient(&e1);
            let e2_amb = e.sub(&e1_amb);
            if e1_amb.is_zero() || e2_amb.is_zero() {
                return Err("zero-divisor split degenerated".into());
            }
            refine_to_primitives(s, &e1_amb, budget, out)?;
            refine_to_primitives(s, &e2_amb, budget, out)
        }
    }
}

/// Lifts a complete system of primitive orthogonal idempotents from A/rad A
/// along the nilpotent radical, using the Newton step e ← 3e² − 2e³ inside
/// shrinking corners. All outputs are exactly idempotent, orthogonal, sum to
/// 1, and reduce to their seeds.
pub fn lift_idempotents(a: &Algebra, budget: &SearchBudget) -> Result<IdempotentLift, String> {
    let j = radical(a)?;
    let (s, qmap) = a.quotient(&j);
    let central = central_primitive_idempotents(&s, budget)?;
    let mut primitives_in_s: Vec<Mat> = Vec::new();
    let mut class_of = Vec::new();
    for (ci, z) in central.iter().enumerate() {
        let before = primitives_in_s.len();
        refine_to_primitives(&s, z, budget, &mut primitives_in_s)?;
        for _ in before..primitives_in_s.len() {
            class_of.push(ci);
        }
    }

    // sequential Newton lifting inside shrinking corners
    let f = a.field;
    let mut lifted: Vec<Mat> = Vec::new();
    let mut used = Mat::zero(f, a.dim, 1);
    for (k, seed) in primitives_in_s.iter().enumerate() {
        if k + 1 == primitives_in_s.len() {
            let last = a.unit.sub(&used);
            lifted.push(last);
            break;
        }
        let c = a.unit.sub(&used);
        let pre = (qmap.lift)(seed);
        let mut e = a.mul_elems(&c, &a.mul_elems(&pre, &c));
        let mut ok = false;
        for _ in 0..64 {
            let e2 = a.mul_elems(&e, &e);
            if e2 == e {
                ok = true;
                break;
            }
            let e3 = a.mul_elems(&e2, &e);
            e = e2.scale(&f.from_i64(3)).sub(&e3.scale(&f.from_i64(2)));
        }
        if !ok {
            return Err("Newton iteration for idempotent lifting did not converge".into());
        }
        used = used.add(&e);
        lifted.push(e);
    }

    // exactness checks
    let mut sum = Mat::zero(f, a.dim, 1);
    for (k, e) in lifted.iter().enumerate() {
        if a.mul_elems(e, e) != *e {
            return Err(format!("lifted idempotent {k} is not idempotent"));
        }
        if (qmap.project)(e) != primitives_in_s[k] {
            return Err(format!("lifted idempotent {k} does not reduce to its seed"));
        }
        sum = sum.add(e);
    }
    if sum != a.unit {
        return Err("lifted idempotents do not sum to 1".into());
    }
    for (i, e) in lifted.iter().enumerate() {
        for e2 in lifted.iter().skip(i + 1) {
            if !a.mul_elems(e, e2).is_zero() || !a.mul_elems(e2, e).is_zero() {
                return Err("lifted idempotents are not orthogonal".into());
            }
        }
    }
    // primitivity: each corner modulo its radical is a division algebra
    for (k, e) in lifted.iter().enumerate() {
        let corner = a.corner(e);
        let cj = radical(&corner.algebra)?;
        let (cq, _) = corner.algebra.quotient(&cj);
        if !is_division_algebra(&cq, budget)? {
            return Err(format!("lifted idempotent {k} is not primitive"));
        }
    }

    Ok(IdempotentLift {
        radical: j,
        idempotents: lifted,
        central_in_quotient: central,
        class_of,
        quotient: s,
        quotient_map: qmap,
    })
}

#[cfg(test)]
mod tests;
