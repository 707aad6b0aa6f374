//! Exact scalars: rationals, or elements of Q[x]/(f) for a monic f.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{HopfError, Result};

type Poly = Vec<BigRational>;

/// A monic modulus, coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Modulus {
    pub coeffs: Poly,
    pub text: String,
}

impl Modulus {
    pub fn parse(s: &str) -> Result<Arc<Modulus>> {
        let mut c = parse_poly(s)?;
        trim(&mut c);
        if c.len() < 2 {
            return Err(HopfError::Parse(format!("modulus `{s}` must have positive degree")));
        }
        let lead = c.last().unwrap().clone();
        if lead != BigRational::one() {
            for x in c.iter_mut() {
                *x = &*x / &lead;
            }
        }
        if let Some(r) = rational_root(&c) {
            return Err(HopfError::Parse(format!("modulus `{s}` is reducible: root {r}")));
        }
        Ok(Arc::new(Modulus { coeffs: c, text: s.to_string() }))
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Rational roots by the rational root test on the integer-scaled polynomial.
fn rational_root(c: &Poly) -> Option<BigRational> {
    let den = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = c.iter().map(|x| (x * BigRational::from(den.clone())).to_integer()).collect();
    if ints[0].is_zero() {
        return Some(BigRational::zero());
    }
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = n.abs();
        let lim: u64 = 10_000;
        let mut out = Vec::new();
        let mut d = BigInt::one();
        while &d <= &n && d <= BigInt::from(lim) {
            if (&n % &d).is_zero() {
                out.push(d.clone());
            }
            d += 1;
        }
        out
    };
    for p in divisors(&ints[0]) {
        for q in divisors(ints.last().unwrap()) {
            for s in [1, -1] {
                let r = BigRational::new(&p * s, q.clone());
                if eval_poly(c, &r).is_zero() {
                    return Some(r);
                }
            }
        }
    }
    None
}

fn eval_poly(c: &Poly, x: &BigRational) -> BigRational {
    c.iter().rev().fold(BigRational::zero(), |acc, k| acc * x + k)
}

fn trim(p: &mut Poly) {
    while p.last().is_some_and(|x| x.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_divrem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let c = r.last().unwrap() / lead;
        for (j, y) in b.iter().enumerate() {
            r[k + j] -= &c * y;
        }
        q[k] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_else(BigRational::zero) - b.get(i).cloned().unwrap_or_else(BigRational::zero))
        .collect();
    trim(&mut out);
    out
}

/// Inverse of `a` modulo `f` by the extended Euclidean algorithm.
fn poly_inv_mod(a: &Poly, f: &Poly) -> Option<Poly> {
    let (mut r0, mut r1) = (f.clone(), a.clone());
    let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![BigRational::one()]);
    trim(&mut r1);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let mut out: Poly = s0.into_iter().map(|x| x / &c).collect();
    out = poly_divrem(&out, f).1;
    Some(out)
}

#[derive(Clone)]
pub struct Scalar {
    c: Poly,
    field: Option<Arc<Modulus>>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c
    }
}

impl Eq for Scalar {}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { c: Vec::new(), field: None }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut c = vec![q];
        trim(&mut c);
        Scalar { c, field: None }
    }

    pub fn frac(a: i64, b: i64) -> Self {
        Self::from_rational(BigRational::new(a.into(), b.into()))
    }

    /// The class of `x` in Q[x]/(f).
    pub fn generator(field: &Arc<Modulus>) -> Self {
        Scalar::from_poly(vec![BigRational::zero(), BigRational::one()], Some(field.clone()))
    }

    fn from_poly(mut c: Poly, field: Option<Arc<Modulus>>) -> Self {
        trim(&mut c);
        if let Some(f) = &field {
            if c.len() >= f.coeffs.len() {
                c = poly_divrem(&c, &f.coeffs).1;
            }
        }
        Scalar { c, field }
    }

    pub fn field(&self) -> Option<&Arc<Modulus>> {
        self.field.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.c.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.c[0].clone()),
            _ => None,
        }
    }

    fn join(&self, other: &Scalar) -> Option<Arc<Modulus>> {
        self.field.clone().or_else(|| other.field.clone())
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(HopfError::DivisionByZero);
        }
        if self.c.len() == 1 {
            return Ok(Scalar { c: vec![self.c[0].recip()], field: self.field.clone() });
        }
        let f = self.field.as_ref().expect("non-constant scalars live in an extension");
        let inv = poly_inv_mod(&self.c, &f.coeffs).ok_or(HopfError::DivisionByZero)?;
        Ok(Scalar::from_poly(inv, Some(f.clone())))
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: u32) -> Scalar {
        (0..k).fold(Scalar::one(), |acc, _| &acc * self)
    }

    /// Parse "a/b", an integer, or (with a field) a polynomial in `x`.
    pub fn parse(s: &str, field: Option<&Arc<Modulus>>) -> Result<Scalar> {
        let c = parse_poly(s)?;
        if c.len() > 1 && field.is_none() {
            return Err(HopfError::Parse(format!("`{s}` uses x outside an extension field")));
        }
        Ok(Scalar::from_poly(c, field.cloned()))
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || HopfError::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.parse().map_err(|_| bad())?;
            let b: BigInt = b.parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(HopfError::DivisionByZero);
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_poly(s: &str) -> Result<Poly> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(HopfError::Parse("empty scalar".into()));
    }
    let mut terms = Vec::new();
    let mut cur = String::new();
    for (i, ch) in t.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    let mut out: Poly = Vec::new();
    for term in terms {
        let (neg, body) = match term.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, term.strip_prefix('+').unwrap_or(&term)),
        };
        let (coef, deg) = match body.find('x') {
            None => (parse_rational(body)?, 0usize),
            Some(k) => {
                let head = body[..k].trim_end_matches('*');
                let coef = if head.is_empty() { BigRational::one() } else { parse_rational(head)? };
                let tail = &body[k + 1..];
                let deg = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^')
                        .and_then(|d| d.parse().ok())
                        .ok_or_else(|| HopfError::Parse(format!("bad exponent in `{s}`")))?
                };
                (coef, deg)
            }
        };
        if out.len() <= deg {
            out.resize(deg + 1, BigRational::zero());
        }
        out[deg] += if neg { -coef } else { coef };
    }
    trim(&mut out);
    Ok(out)
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, q) in self.c.iter().enumerate().rev() {
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let a = q.abs();
            if !out.is_empty() {
                out.push(if neg { '-' } else { '+' });
            } else if neg {
                out.push('-');
            }
            let body = match k {
                0 => fmt_rational(&a),
                _ => {
                    let x = if k == 1 { "x".to_string() } else { format!("x^{k}") };
                    if a.is_one() {
                        x
                    } else {
                        format!("{}*{x}", fmt_rational(&a))
                    }
                }
            };
            out.push_str(&body);
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) | (None, Some(a)) => a.clone(),
                _ => unreachable!(),
            })
            .collect();
        Scalar::from_poly(c, self.join(o))
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.c.len() == 1 && o.c.len() == 1 {
            return Scalar { c: vec![&self.c[0] * &o.c[0]], field: self.join(o) };
        }
        Scalar::from_poly(poly_mul(&self.c, &o.c), self.join(o))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { c: self.c.iter().map(|x| -x).collect(), field: self.field.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, o: Scalar) -> Scalar {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, o: &Scalar) -> Scalar {
                (&self).$f(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
