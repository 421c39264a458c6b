//! Exact arithmetic in cyclotomic fields and the quantum numbers built on `xi`.

mod cyclo;
mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;

pub use cyclo::{cyclotomic_poly, Cyclo, Field, FieldRef, FieldSpec};
pub use rational::Q;

use crate::error::{Error, Result};

/// A reduced fraction with machine-word parts; used for exponents of `xi`
/// and for color entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QRational {
    num: i64,
    den: i64,
}

impl QRational {
    pub fn new(num: i64, den: i64) -> QRational {
        assert!(den != 0, "zero denominator");
        let g = num.gcd(&den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        QRational { num: s * num / g, den: s * den / g }
    }

    pub fn int(n: i64) -> QRational {
        QRational { num: n, den: 1 }
    }

    pub fn zero() -> QRational {
        QRational::int(0)
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Representative in `[0, 1)`.
    pub fn frac(&self) -> QRational {
        QRational::new(self.num.rem_euclid(self.den), self.den)
    }

    pub fn mul_int(&self, k: i64) -> QRational {
        QRational::new(self.num * k, self.den)
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Add for QRational {
    type Output = QRational;
    fn add(self, o: QRational) -> QRational {
        QRational::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }
}

impl Sub for QRational {
    type Output = QRational;
    fn sub(self, o: QRational) -> QRational {
        self + (-o)
    }
}

impl Mul for QRational {
    type Output = QRational;
    fn mul(self, o: QRational) -> QRational {
        QRational::new(self.num * o.num, self.den * o.den)
    }
}

impl Neg for QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        QRational { num: -self.num, den: self.den }
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for QRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<QRational> {
        let bad = || Error::Parse { line: 0, col: 0, msg: format!("bad rational '{s}'") };
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim().parse::<i64>().map_err(|_| bad())?, d.trim().parse::<i64>().map_err(|_| bad())?),
            None => (s.parse::<i64>().map_err(|_| bad())?, 1),
        };
        if d == 0 {
            return Err(bad());
        }
        Ok(QRational::new(n, d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn field(ell: u32, d: u32) -> Field {
        Field::new(FieldSpec::new(ell, d).unwrap())
    }

    #[test]
    fn field_spec_validation() {
        assert!(FieldSpec::new(4, 1).is_err());
        assert!(FieldSpec::new(1, 1).is_err());
        assert!(FieldSpec::new(3, 0).is_err());
        assert_eq!(FieldSpec::new(3, 3).unwrap().n(), 27);
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic_poly(15), vec![1, -1, 0, 1, -1, 1, 0, -1, 1]);
        assert_eq!(cyclotomic_poly(27).len(), 19);
    }

    #[test]
    fn xi_pow_examples() {
        let f = field(3, 3);
        assert!(f.xi_pow(QRational::zero()).unwrap().is_one());
        assert!(f.xi_pow(QRational::int(3)).unwrap().is_one());
        let g = field(3, 1);
        let x = g.xi_pow(QRational::int(1)).unwrap();
        assert!(!x.is_one());
        assert!(g.pow(&x, 3).is_one());
        // minimal polynomial of a primitive cube root: x^2 + x + 1
        let m = &(&g.mul(&x, &x) + &x) + &Cyclo::one();
        assert!(m.is_zero());
    }

    #[test]
    fn xi_pow_rejects_foreign_denominators() {
        let f = field(3, 3);
        assert!(f.xi_pow(QRational::new(1, 9)).is_ok());
        assert!(matches!(f.xi_pow(QRational::new(1, 2)), Err(Error::IncompatibleField(_))));
        assert!(f.xi_pow(QRational::new(1, 27)).is_err());
    }

    #[test]
    fn brace_examples() {
        let f = field(3, 1);
        assert!(f.brace(QRational::zero()).unwrap().is_zero());
        let b = f.brace(QRational::int(1)).unwrap();
        assert_eq!(f.mul(&b, &b), Cyclo::int(-3));
        let g = field(5, 3);
        for x in [QRational::new(1, 3), QRational::new(-4, 9), QRational::int(2)] {
            assert_eq!(g.brace(x).unwrap(), -&g.brace(-x).unwrap());
        }
    }

    #[test]
    fn q_factorial_examples() {
        let f = field(3, 1);
        assert!(f.q_factorial(0).unwrap().is_one());
        assert!(f.q_factorial(1).unwrap().is_one());
        let xi = f.xi_int(1);
        assert_eq!(f.q_factorial(2).unwrap(), &Cyclo::one() + &xi);
        assert!(f.q_factorial(3).is_err());
    }

    #[test]
    fn top_q_factorial_is_ell_over_power_of_one_minus_xi() {
        for ell in [3u32, 5, 7] {
            let f = field(ell, 1);
            let one_minus = &Cyclo::one() - &f.xi_int(1);
            let rhs = f.div(&Cyclo::int(ell as i64), &f.pow(&one_minus, ell - 1)).unwrap();
            assert_eq!(f.q_factorial(ell - 1).unwrap(), rhs, "ell = {ell}");
            let wrong = f.div(&Cyclo::int(ell as i64 - 1), &f.pow(&one_minus, ell - 1)).unwrap();
            assert_ne!(f.q_factorial(ell - 1).unwrap(), wrong);
        }
    }

    #[test]
    fn character_orthogonality() {
        for ell in [3u32, 5] {
            let f = field(ell, 1);
            for i in 0..ell as i64 {
                for j in 0..ell as i64 {
                    let mut s = Cyclo::zero();
                    for k in 0..ell as i64 {
                        s.add_assign_ref(&f.xi_int(k * (i - j)));
                    }
                    let want = if i == j { Cyclo::int(ell as i64) } else { Cyclo::zero() };
                    assert_eq!(s, want);
                }
            }
        }
    }

    #[test]
    fn exact_and_decimal_rendering() {
        let f = field(3, 1);
        let x = f.xi_int(1);
        assert_eq!(f.format_exact(&x), "z");
        assert_eq!(f.format_exact(&x.scale(&Q::new(-1, 2))), "-z/2");
        let y = &Cyclo::rational(1, 3) + &f.xi_int(2);
        assert_eq!(f.format_exact(&y), "(-2 - 3*z)/3");
        assert_eq!(f.format_decimal(&x, 4), "-0.5000 + 0.8660i");
    }

    fn arb_elem(phi: u32) -> impl Strategy<Value = Vec<(i64, i64)>> {
        proptest::collection::vec((-20i64..20, 1i64..9), phi as usize)
    }

    fn build(v: &[(i64, i64)], f: &Field) -> Cyclo {
        let mut s = Cyclo::zero();
        for (e, (n, d)) in v.iter().enumerate() {
            s.add_assign_ref(&f.mul_zeta(&Cyclo::rational(*n, *d), e as i64));
        }
        s
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn field_axioms_q27(a in arb_elem(18), b in arb_elem(18), c in arb_elem(18)) {
            let f = field(3, 3);
            let (a, b, c) = (build(&a, &f), build(&b, &f), build(&c, &f));
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            prop_assert_eq!(f.mul(&a, &(&b + &c)), &f.mul(&a, &b) + &f.mul(&a, &c));
            prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
            if !a.is_zero() {
                let inv = f.inv(&a).unwrap();
                prop_assert!(f.mul(&a, &inv).is_one());
            }
        }

        #[test]
        fn xi_pow_is_a_homomorphism(p in -60i64..60, q in -60i64..60, d1 in prop::sample::select(vec![1i64, 3, 9]), d2 in prop::sample::select(vec![1i64, 3, 9])) {
            let f = field(3, 3);
            let x = QRational::new(p, d1);
            let y = QRational::new(q, d2);
            let lhs = f.mul(&f.xi_pow(x).unwrap(), &f.xi_pow(y).unwrap());
            prop_assert_eq!(lhs, f.xi_pow(x + y).unwrap());
        }
    }
}
