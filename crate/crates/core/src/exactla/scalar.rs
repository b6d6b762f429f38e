//! Exact scalars: prime-field residues and arbitrary-precision rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::fmt;

use super::ExactError;

/// The coefficient field every structure in this crate is defined over.
///
/// Either a prime field `F_p` with `p < 2^31` or the rationals. Arithmetic is
/// exact in both cases; there is no floating point anywhere downstream.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FieldSpec {
    Prime(u64),
    Rational,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<FieldSpec, ExactError> {
        if p >= (1 << 31) {
            return Err(ExactError::BadField(format!("p = {p} exceeds 2^31")));
        }
        if !is_prime(p) {
            return Err(ExactError::BadField(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn rational() -> FieldSpec {
        FieldSpec::Rational
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rational => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Prime(_) => Scalar::Fp(0),
            FieldSpec::Rational => Scalar::Rat(Rat::from_int(0)),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Prime(_) => Scalar::Fp(1),
            FieldSpec::Rational => Scalar::Rat(Rat::from_int(1)),
        }
    }

    /// Embeds a signed integer, reducing mod p in the prime case.
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Prime(p) => {
                let p = *p as i128;
                Scalar::Fp((((n as i128) % p + p) % p) as u64)
            }
            FieldSpec::Rational => Scalar::Rat(Rat::from_int(n)),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            (FieldSpec::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x.add(y)),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Fp(x)) => Scalar::Fp((p - x) % p),
            (FieldSpec::Rational, Scalar::Rat(x)) => Scalar::Rat(x.neg()),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(x * y % p),
            (FieldSpec::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x.mul(y)),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar, ExactError> {
        if a.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Fp(x)) => Ok(Scalar::Fp(mod_inv(*x, *p))),
            (FieldSpec::Rational, Scalar::Rat(x)) => Ok(Scalar::Rat(x.inv())),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, ExactError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, mut n: u64) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    /// Parses "a/b" (rational) or a signed decimal residue.
    pub fn parse(&self, s: &str) -> Result<Scalar, ExactError> {
        let s = s.trim();
        match self {
            FieldSpec::Prime(_) => {
                if s.contains('/') {
                    return Err(ExactError::Parse(format!(
                        "fraction {s:?} not allowed over a prime field"
                    )));
                }
                let n: i64 = s
                    .parse()
                    .map_err(|_| ExactError::Parse(format!("bad scalar {s:?}")))?;
                Ok(self.from_i64(n))
            }
            FieldSpec::Rational => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s, "1"),
                };
                let num: BigInt = num
                    .parse()
                    .map_err(|_| ExactError::Parse(format!("bad numerator in {s:?}")))?;
                let den: BigInt = den
                    .parse()
                    .map_err(|_| ExactError::Parse(format!("bad denominator in {s:?}")))?;
                if den.is_zero() {
                    return Err(ExactError::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(Scalar::Rat(Rat::new(num, den)))
            }
        }
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid on signed words; p < 2^31 so no overflow
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    let p = p as i128;
    ((old_s % p + p) % p) as u64
}

/// Rational number kept in lowest terms with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rat {
    num: BigInt,
    den: BigInt,
}

impl Rat {
    pub fn new(num: BigInt, den: BigInt) -> Rat {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = Rat { num, den };
        r.reduce();
        r
    }

    pub fn from_int(n: i64) -> Rat {
        Rat {
            num: BigInt::from(n),
            den: BigInt::one(),
        }
    }

    fn reduce(&mut self) {
        if self.den.is_negative() {
            self.num = -std::mem::take(&mut self.num);
            self.den = -std::mem::take(&mut self.den);
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = &self.num / &g;
            self.den = &self.den / &g;
        }
    }

    fn add(&self, o: &Rat) -> Rat {
        Rat::new(&self.num * &o.den + &o.num * &self.den, &self.den * &o.den)
    }

    fn neg(&self) -> Rat {
        Rat {
            num: -self.num.clone(),
            den: self.den.clone(),
        }
    }

    fn mul(&self, o: &Rat) -> Rat {
        Rat::new(&self.num * &o.num, &self.den * &o.den)
    }

    fn inv(&self) -> Rat {
        Rat::new(self.den.clone(), self.num.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

/// An element of the field named by some [`FieldSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp(u64),
    Rat(Rat),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp(x) => *x == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp(x) => *x == 1,
            Scalar::Rat(r) => r.num.is_one() && r.den.is_one(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp(x) => write!(f, "{x}"),
            Scalar::Rat(r) => {
                if r.den.is_one() {
                    write!(f, "{}", r.num)
                } else {
                    write!(f, "{}/{}", r.num, r.den)
                }
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        let a = f.from_i64(-3);
        assert_eq!(a, Scalar::Fp(4));
        assert_eq!(f.mul(&a, &f.from_i64(2)), Scalar::Fp(1));
        assert_eq!(f.inv(&f.from_i64(3)).unwrap(), Scalar::Fp(5));
        assert!(FieldSpec::prime(6).is_err());
        assert!(FieldSpec::prime(1).is_err());
    }

    #[test]
    fn rational_lowest_terms() {
        let f = FieldSpec::rational();
        let x = f.parse("4/6").unwrap();
        assert_eq!(x, f.parse("2/3").unwrap());
        let y = f.div(&f.one(), &x).unwrap();
        assert_eq!(y, f.parse("3/2").unwrap());
        assert_eq!(f.add(&x, &y), f.parse("13/6").unwrap());
        assert_eq!(f.parse("-2/-4").unwrap(), f.parse("1/2").unwrap());
    }

    #[test]
    fn parse_rejects_garbage() {
        let f = FieldSpec::prime(3).unwrap();
        assert!(f.parse("1/2").is_err());
        assert!(f.parse("x").is_err());
        assert!(FieldSpec::rational().parse("1/0").is_err());
    }
}
