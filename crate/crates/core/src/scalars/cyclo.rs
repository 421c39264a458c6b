use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::rational::Q;
use super::QRational;
use crate::error::{Error, Result};

/// Parameters of the working field: `xi = exp(2 pi i / ell)`, colors with
/// denominator dividing `d`, conductor `N = ell * d^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    ell: u32,
    d: u32,
}

impl FieldSpec {
    pub fn new(ell: u32, d: u32) -> Result<FieldSpec> {
        if ell < 3 || ell % 2 == 0 {
            return Err(Error::InvalidField(format!("ell must be odd and >= 3, got {ell}")));
        }
        if d == 0 {
            return Err(Error::InvalidField("d must be positive".into()));
        }
        let n = ell as u64 * d as u64 * d as u64;
        if n > 4096 {
            return Err(Error::InvalidField(format!("conductor {n} is too large")));
        }
        Ok(FieldSpec { ell, d })
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Conductor `N = ell * d^2`.
    pub fn n(&self) -> u32 {
        self.ell * self.d * self.d
    }
}

/// An element of the cyclotomic field `Q(z)`, `z = exp(2 pi i / N)`, stored as
/// sparse rational coefficients over the power basis `1, z, .., z^(phi(N)-1)`.
///
/// Entries are sorted by exponent and never zero, so equal field elements have
/// identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Cyclo {
    terms: Vec<(u32, Q)>,
}

impl Cyclo {
    pub fn zero() -> Cyclo {
        Cyclo { terms: Vec::new() }
    }

    pub fn one() -> Cyclo {
        Cyclo::from_q(Q::one())
    }

    pub fn from_q(q: Q) -> Cyclo {
        if q.is_zero() {
            Cyclo::zero()
        } else {
            Cyclo { terms: vec![(0, q)] }
        }
    }

    pub fn int(n: i64) -> Cyclo {
        Cyclo::from_q(Q::int(n))
    }

    pub fn rational(num: i64, den: i64) -> Cyclo {
        Cyclo::from_q(Q::new(num, den))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Q> {
        match self.terms.as_slice() {
            [] => Some(Q::zero()),
            [(0, q)] => Some(q.clone()),
            _ => None,
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> &[(u32, Q)] {
        &self.terms
    }

    pub fn scale(&self, q: &Q) -> Cyclo {
        if q.is_zero() {
            return Cyclo::zero();
        }
        Cyclo { terms: self.terms.iter().map(|(e, c)| (*e, c.mul_ref(q))).collect() }
    }

    pub fn add_assign_ref(&mut self, o: &Cyclo) {
        if o.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = o.clone();
            return;
        }
        *self = merge(&self.terms, &o.terms, false);
    }

    fn from_dense(acc: Vec<Q>) -> Cyclo {
        Cyclo {
            terms: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as u32, c))
                .collect(),
        }
    }
}

fn merge(a: &[(u32, Q)], b: &[(u32, Q)], negate_b: bool) -> Cyclo {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
            out.push((b[j].0, c));
            j += 1;
        } else {
            let c = if negate_b { a[i].1.sub_ref(&b[j].1) } else { a[i].1.add_ref(&b[j].1) };
            if !c.is_zero() {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    Cyclo { terms: out }
}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, o: &Cyclo) -> Cyclo {
        merge(&self.terms, &o.terms, false)
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, o: &Cyclo) -> Cyclo {
        merge(&self.terms, &o.terms, true)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

/// Arithmetic context for `Q(z)`: the cyclotomic polynomial and the reduced
/// form of every power `z^k`, `0 <= k < N`.
#[derive(Debug)]
pub struct Field {
    spec: FieldSpec,
    n: u32,
    phi: u32,
    cyclotomic: Vec<i64>,
    powers: Vec<Vec<(u32, i64)>>,
}

/// Shared handle to a field context.
pub type FieldRef = Arc<Field>;

impl Field {
    pub fn new(spec: FieldSpec) -> Field {
        let n = spec.n();
        let cyclotomic = cyclotomic_poly(n);
        let phi = (cyclotomic.len() - 1) as u32;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi as usize];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(cur.iter().enumerate().filter(|(_, c)| **c != 0).map(|(e, c)| (e as u32, *c)).collect());
            // multiply by z and reduce modulo the monic cyclotomic polynomial
            let top = cur[phi as usize - 1];
            let mut next = vec![0i64; phi as usize];
            next[1..].copy_from_slice(&cur[..phi as usize - 1]);
            if top != 0 {
                for (e, c) in cyclotomic.iter().take(phi as usize).enumerate() {
                    next[e] -= top * c;
                }
            }
            cur = next;
        }
        debug_assert!(cur.iter().enumerate().all(|(e, c)| *c == i64::from(e == 0)));
        Field { spec, n, phi, cyclotomic, powers }
    }

    pub fn shared(spec: FieldSpec) -> FieldRef {
        Arc::new(Field::new(spec))
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn ell(&self) -> u32 {
        self.spec.ell
    }

    /// Conductor `N`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Degree `phi(N)` of the field over `Q`.
    pub fn degree(&self) -> u32 {
        self.phi
    }

    /// Coefficients of the `N`-th cyclotomic polynomial, constant term first.
    pub fn cyclotomic_poly(&self) -> &[i64] {
        &self.cyclotomic
    }

    /// `z^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> Cyclo {
        let k = k.rem_euclid(self.n as i64) as usize;
        Cyclo { terms: self.powers[k].iter().map(|(e, c)| (*e, Q::int(*c))).collect() }
    }

    /// `xi^k = z^(k d^2)` for integer `k`.
    pub fn xi_int(&self, k: i64) -> Cyclo {
        let dd = (self.spec.d * self.spec.d) as i64;
        self.zeta_pow(k.rem_euclid(self.spec.ell as i64) * dd)
    }

    /// Exponent `e` with `xi^x = z^e`; fails unless the denominator of `x` divides `d^2`.
    pub fn xi_exponent(&self, x: QRational) -> Result<i64> {
        let dd = (self.spec.d * self.spec.d) as i64;
        if dd % x.den() != 0 {
            return Err(Error::IncompatibleField(format!(
                "exponent {x} has denominator not dividing d^2 = {dd}"
            )));
        }
        Ok((x.num() * (dd / x.den())).rem_euclid(self.n as i64))
    }

    /// `xi^x` for a rational exponent `x` with denominator dividing `d^2`.
    pub fn xi_pow(&self, x: QRational) -> Result<Cyclo> {
        Ok(self.zeta_pow(self.xi_exponent(x)?))
    }

    /// `{x} = xi^x - xi^(-x)`.
    pub fn brace(&self, x: QRational) -> Result<Cyclo> {
        Ok(&self.xi_pow(x)? - &self.xi_pow(-x)?)
    }

    /// `(k)_xi = (1 - xi^k) / (1 - xi) = 1 + xi + .. + xi^(k-1)`.
    pub fn q_int(&self, k: u32) -> Cyclo {
        let mut s = Cyclo::zero();
        for j in 0..k {
            s.add_assign_ref(&self.xi_int(j as i64));
        }
        s
    }

    /// `(i)_xi! = (1)_xi (2)_xi .. (i)_xi`, defined for `0 <= i < ell`.
    pub fn q_factorial(&self, i: u32) -> Result<Cyclo> {
        if i >= self.spec.ell {
            return Err(Error::OutOfRange(format!(
                "q-factorial ({i})! vanishes at a root of unity of order {}",
                self.spec.ell
            )));
        }
        let mut p = Cyclo::one();
        for k in 1..=i {
            p = self.mul(&p, &self.q_int(k));
        }
        Ok(p)
    }

    pub fn mul(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        if a.is_zero() || b.is_zero() {
            return Cyclo::zero();
        }
        if let Some(q) = a.as_rational() {
            return b.scale(&q);
        }
        if let Some(q) = b.as_rational() {
            return a.scale(&q);
        }
        let mut acc = vec![Q::zero(); self.phi as usize];
        for (i, x) in &a.terms {
            for (j, y) in &b.terms {
                let p = x.mul_ref(y);
                let k = ((i + j) % self.n) as usize;
                if k < self.phi as usize {
                    acc[k].add_assign_ref(&p);
                } else {
                    for (e, c) in &self.powers[k] {
                        acc[*e as usize].add_assign_ref(&p.mul_int(*c));
                    }
                }
            }
        }
        Cyclo::from_dense(acc)
    }

    /// `a * z^k`.
    pub fn mul_zeta(&self, a: &Cyclo, k: i64) -> Cyclo {
        let k = k.rem_euclid(self.n as i64) as u32;
        if k == 0 || a.is_zero() {
            return a.clone();
        }
        if a.terms.len() == 1 {
            let (e, c) = &a.terms[0];
            let idx = ((e + k) % self.n) as usize;
            let terms = self.powers[idx].iter().map(|(f, m)| (*f, c.mul_int(*m))).collect();
            return Cyclo { terms };
        }
        let mut acc = vec![Q::zero(); self.phi as usize];
        for (e, c) in &a.terms {
            let idx = ((e + k) % self.n) as usize;
            for (f, m) in &self.powers[idx] {
                acc[*f as usize].add_assign_ref(&c.mul_int(*m));
            }
        }
        Cyclo::from_dense(acc)
    }

    /// `a * xi^k` for integer `k`.
    pub fn mul_xi(&self, a: &Cyclo, k: i64) -> Cyclo {
        let dd = (self.spec.d * self.spec.d) as i64;
        self.mul_zeta(a, k.rem_euclid(self.spec.ell as i64) * dd)
    }

    pub fn pow(&self, a: &Cyclo, k: u32) -> Cyclo {
        let mut r = Cyclo::one();
        for _ in 0..k {
            r = self.mul(&r, a);
        }
        r
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against the
    /// cyclotomic polynomial.
    pub fn inv(&self, a: &Cyclo) -> Result<Cyclo> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = a.as_rational() {
            return Ok(Cyclo::from_q(q.recip().expect("nonzero")));
        }
        let m: Vec<Q> = self.cyclotomic.iter().map(|c| Q::int(*c)).collect();
        let mut x: Vec<Q> = vec![Q::zero(); self.phi as usize];
        for (e, c) in &a.terms {
            x[*e as usize] = c.clone();
        }
        // invariant: s0 * a == r0 and s1 * a == r1 modulo the cyclotomic polynomial
        let (mut r0, mut r1) = (m, trim(x));
        let (mut s0, mut s1): (Vec<Q>, Vec<Q>) = (vec![], vec![Q::one()]);
        while !(r1.len() == 1) {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                return Err(Error::DivisionByZero);
            }
        }
        let c = r1[0].recip().ok_or(Error::DivisionByZero)?;
        let s: Vec<Q> = s1.iter().map(|t| t.mul_ref(&c)).collect();
        let mut out = Cyclo::zero();
        for (e, t) in s.iter().enumerate() {
            if !t.is_zero() {
                out.add_assign_ref(&self.mul_zeta(&Cyclo::from_q(t.clone()), e as i64));
            }
        }
        Ok(out)
    }

    pub fn div(&self, a: &Cyclo, b: &Cyclo) -> Result<Cyclo> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Complex value with `z = exp(2 pi i / N)`.
    pub fn to_complex(&self, a: &Cyclo) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (e, c) in &a.terms {
            let t = 2.0 * std::f64::consts::PI * (*e as f64) / (self.n as f64);
            let v = c.to_f64();
            re += v * t.cos();
            im += v * t.sin();
        }
        (re, im)
    }

    /// Canonical exact rendering: integer combination of powers of `z` over a
    /// common positive denominator.
    pub fn format_exact(&self, a: &Cyclo) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let mut den = BigInt::one();
        for (_, c) in &a.terms {
            den = den.lcm(&c.denom());
        }
        let mut body = String::new();
        for (idx, (e, c)) in a.terms.iter().enumerate() {
            let k = c.numer() * (&den / c.denom());
            let neg = k.is_negative();
            let mag = k.abs();
            if idx == 0 {
                if neg {
                    body.push('-');
                }
            } else {
                body.push_str(if neg { " - " } else { " + " });
            }
            let mono = match e {
                0 => String::new(),
                1 => "z".into(),
                _ => format!("z^{e}"),
            };
            if mono.is_empty() {
                body.push_str(&mag.to_string());
            } else if mag.is_one() {
                body.push_str(&mono);
            } else {
                body.push_str(&format!("{mag}*{mono}"));
            }
        }
        if den.is_one() {
            body
        } else if a.terms.len() == 1 {
            format!("{body}/{den}")
        } else {
            format!("({body})/{den}")
        }
    }

    /// Fixed-precision decimal rendering of the complex value.
    pub fn format_decimal(&self, a: &Cyclo, precision: usize) -> String {
        let (re, im) = self.to_complex(a);
        let clean = |v: f64| if v.abs() < 0.5 * 10f64.powi(-(precision as i32)) { 0.0 } else { v };
        let (re, im) = (clean(re), clean(im));
        let sign = if im < 0.0 { '-' } else { '+' };
        format!("{re:.p$} {sign} {:.p$}i", im.abs(), p = precision)
    }
}

fn trim(mut p: Vec<Q>) -> Vec<Q> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().max(b.len());
    let mut out = vec![Q::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] = c.clone();
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = out[i].sub_ref(c);
    }
    trim(out)
}

fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j].add_assign_ref(&x.mul_ref(y));
        }
    }
    trim(out)
}

fn poly_divrem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].recip().expect("nonzero leading coefficient");
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![Q::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r[r.len() - 1].mul_ref(&lead);
        for (i, y) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].sub_ref(&c.mul_ref(y));
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, by exact division
/// of `z^n - 1` by the cyclotomic polynomials of the proper divisors.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = int_poly_exact_div(&p, &cyclotomic_poly(d));
        }
    }
    p
}

fn int_poly_exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    assert_eq!(b[db], 1, "monic divisor");
    let mut q = vec![0i64; a.len() - db];
    for shift in (0..q.len()).rev() {
        let c = r[shift + db];
        q[shift] = c;
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= c * y;
        }
    }
    assert!(r.iter().all(|c| *c == 0), "inexact cyclotomic division");
    q
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})z^{e}")?;
        }
        Ok(())
    }
}
