//! Small univariate polynomial helpers used by the decomposition machinery.
//!
//! Polynomials are coefficient vectors, low degree first, not necessarily
//! normalized; `trim` strips trailing zeros.

use super::scalar::{FieldSpec, Scalar};

pub fn trim(f: FieldSpec, mut p: Vec<Scalar>) -> Vec<Scalar> {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    let _ = f;
    p
}

pub fn degree(p: &[Scalar]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn eval(f: FieldSpec, p: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = f.zero();
    for c in p.iter().rev() {
        acc = f.add(&f.mul(&acc, x), c);
    }
    acc
}

pub fn make_monic(f: FieldSpec, p: &[Scalar]) -> Vec<Scalar> {
    let p = trim(f, p.to_vec());
    if p.is_empty() {
        return p;
    }
    let inv = f.inv(p.last().unwrap()).expect("leading coefficient nonzero");
    p.iter().map(|c| f.mul(c, &inv)).collect()
}

/// Remainder of `a` modulo `b` (b nonzero).
pub fn rem(f: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let b = trim(f, b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(f, a.to_vec());
    let db = b.len() - 1;
    let lead_inv = f.inv(b.last().unwrap()).unwrap();
    while r.len() > db {
        let k = f.mul(r.last().unwrap(), &lead_inv);
        let shift = r.len() - 1 - db;
        for (i, c) in b.iter().enumerate() {
            let v = f.sub(&r[shift + i], &f.mul(&k, c));
            r[shift + i] = v;
        }
        r = trim(f, r);
    }
    r
}

pub fn gcd(f: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut a = trim(f, a.to_vec());
    let mut b = trim(f, b.to_vec());
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    make_monic(f, &a)
}

/// Extended Euclid: returns `(g, u, v)` with `u*a + v*b = g`, `g` monic.
pub fn bezout(f: FieldSpec, a: &[Scalar], b: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>, Vec<Scalar>) {
    let mut r0 = trim(f, a.to_vec());
    let mut r1 = trim(f, b.to_vec());
    let (mut s0, mut s1) = (vec![f.one()], vec![]);
    let (mut t0, mut t1) = (vec![], vec![f.one()]);
    while !r1.is_empty() {
        let (q, r) = divmod(f, &r0, &r1);
        let s2 = sub(f, &s0, &mul(f, &q, &s1));
        let t2 = sub(f, &t0, &mul(f, &q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if r0.is_empty() {
        return (vec![], s0, t0);
    }
    let lead_inv = f.inv(r0.last().unwrap()).unwrap();
    let scale = |p: &[Scalar]| p.iter().map(|c| f.mul(c, &lead_inv)).collect::<Vec<_>>();
    (scale(&r0), scale(&s0), scale(&t0))
}

pub fn divmod(f: FieldSpec, a: &[Scalar], b: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    let b = trim(f, b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(f, a.to_vec());
    let db = b.len() - 1;
    let lead_inv = f.inv(b.last().unwrap()).unwrap();
    let mut q = vec![f.zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let k = f.mul(r.last().unwrap(), &lead_inv);
        let shift = r.len() - 1 - db;
        q[shift] = k.clone();
        for (i, c) in b.iter().enumerate() {
            let v = f.sub(&r[shift + i], &f.mul(&k, c));
            r[shift + i] = v;
        }
        r = trim(f, r);
    }
    (trim(f, q), r)
}

pub fn mul(f: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    trim(f, super::mat::poly_mul(f, a, b))
}

pub fn sub(f: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    trim(f, super::mat::poly_sub(f, a, b))
}

/// Roots in `F_p` of a polynomial over `F_p`, by deterministic trial over the
/// field when `p` is small and by gcd splitting with successive shifts
/// otherwise. Only distinct roots are reported.
pub fn fp_roots(f: FieldSpec, p_poly: &[Scalar]) -> Vec<Scalar> {
    let FieldSpec::Prime(p) = f else {
        panic!("fp_roots requires a prime field")
    };
    let poly = trim(f, p_poly.to_vec());
    if poly.len() <= 1 {
        return vec![];
    }
    if p <= 10_000 {
        return (0..p)
            .map(|x| Scalar::Fp(x))
            .filter(|x| eval(f, &poly, x).is_zero())
            .collect();
    }
    // gcd with t^p - t isolates the split part, then shift-and-split
    let split_part = {
        let tp = pow_mod(f, &[f.zero(), f.one()], p, &poly);
        let tp_minus_t = sub(f, &tp, &[f.zero(), f.one()]);
        gcd(f, &poly, &tp_minus_t)
    };
    let mut roots = Vec::new();
    split_linear(f, p, &split_part, 0, &mut roots);
    roots.sort_by_key(|s| match s {
        Scalar::Fp(v) => *v,
        _ => unreachable!(),
    });
    roots
}

fn split_linear(f: FieldSpec, p: u64, poly: &[Scalar], shift: u64, out: &mut Vec<Scalar>) {
    let poly = make_monic(f, poly);
    match poly.len() {
        0 | 1 => {}
        2 => out.push(f.neg(&poly[0])),
        _ => {
            // (t + shift)^((p-1)/2) - 1 splits odd-characteristic products of
            // distinct linear factors; shift advances deterministically
            assert!(p > 2, "split_linear only reached for large p");
            let base = vec![f.from_i64(shift as i64), f.one()];
            let pw = pow_mod(f, &base, (p - 1) / 2, &poly);
            let g = gcd(f, &sub(f, &pw, &[f.one()]), &poly);
            if g.len() <= 1 || g.len() == poly.len() {
                split_linear(f, p, &poly, shift + 1, out);
            } else {
                let (q, r) = divmod(f, &poly, &g);
                assert!(r.is_empty());
                split_linear(f, p, &g, shift + 1, out);
                split_linear(f, p, &q, shift + 1, out);
            }
        }
    }
}

fn pow_mod(f: FieldSpec, base: &[Scalar], mut n: u64, modulus: &[Scalar]) -> Vec<Scalar> {
    let mut acc = vec![f.one()];
    let mut b = rem(f, base, modulus);
    while n > 0 {
        if n & 1 == 1 {
            acc = rem(f, &mul(f, &acc, &b), modulus);
        }
        b = rem(f, &mul(f, &b, &b), modulus);
        n >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> FieldSpec {
        FieldSpec::prime(5).unwrap()
    }

    fn poly(f: FieldSpec, coeffs: &[i64]) -> Vec<Scalar> {
        coeffs.iter().map(|&c| f.from_i64(c)).collect()
    }

    #[test]
    fn gcd_and_bezout() {
        let f = f5();
        // (t-1)(t-2) and (t-1)(t-3)
        let a = mul(f, &poly(f, &[-1, 1]), &poly(f, &[-2, 1]));
        let b = mul(f, &poly(f, &[-1, 1]), &poly(f, &[-3, 1]));
        let g = gcd(f, &a, &b);
        assert_eq!(g, poly(f, &[-1, 1]));
        let (g2, u, v) = bezout(f, &a, &b);
        assert_eq!(g2, g);
        let ua = mul(f, &u, &a);
        let vb = mul(f, &v, &b);
        let lhs = trim(f, super::super::mat::poly_sub(f, &ua, &vb.iter().map(|c| f.neg(c)).collect::<Vec<_>>()));
        assert_eq!(lhs, g);
    }

    #[test]
    fn roots_by_trial() {
        let f = f5();
        // t^2 + 1 over F_5 has roots 2 and 3
        let r = fp_roots(f, &poly(f, &[1, 0, 1]));
        assert_eq!(r, vec![f.from_i64(2), f.from_i64(3)]);
        // t^2 + 2 has none
        assert!(fp_roots(f, &poly(f, &[2, 0, 1])).is_empty());
    }
}
