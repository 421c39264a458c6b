//! Exact rationals with an overflow-checked machine-word fast path.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedSub, One, Signed, ToPrimitive, Zero};

/// An exact rational number.
///
/// Values that fit a reduced `i64` fraction are kept in the small form; anything
/// larger is promoted to a big rational. The representation is canonical, so
/// structural equality is numeric equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Q {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl Q {
    pub fn zero() -> Q {
        Q::Small(Ratio::new_raw(0, 1))
    }

    pub fn one() -> Q {
        Q::Small(Ratio::new_raw(1, 1))
    }

    pub fn int(n: i64) -> Q {
        Q::Small(Ratio::from_integer(n))
    }

    pub fn new(num: i64, den: i64) -> Q {
        assert!(den != 0, "zero denominator");
        if num == i64::MIN || den == i64::MIN {
            return Q::from_big(BigRational::new(num.into(), den.into()));
        }
        Q::Small(Ratio::new(num, den))
    }

    pub fn from_big(r: BigRational) -> Q {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => Q::Small(Ratio::new_raw(n, d)),
            _ => Q::Big(r),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Q::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Q::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Q::Small(r) => r.numer().is_zero(),
            Q::Big(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Q::Small(r) => *r.numer() == 1 && *r.denom() == 1,
            Q::Big(r) => r.is_one(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Q::Small(r) => *r.numer() < 0,
            Q::Big(r) => r.is_negative(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Q::Small(r) => BigInt::from(*r.numer()),
            Q::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Q::Small(r) => BigInt::from(*r.denom()),
            Q::Big(r) => r.denom().clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Q::Small(r) => *r.numer() as f64 / *r.denom() as f64,
            Q::Big(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn recip(&self) -> Option<Q> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Q::Small(r) if *r.numer() != i64::MIN => Q::Small(r.recip()),
            _ => Q::from_big(self.to_big().recip()),
        })
    }

    pub fn add_ref(&self, o: &Q) -> Q {
        if let (Q::Small(a), Q::Small(b)) = (self, o) {
            if let Some(c) = a.checked_add(b) {
                return Q::Small(c);
            }
        }
        Q::from_big(self.to_big() + o.to_big())
    }

    pub fn sub_ref(&self, o: &Q) -> Q {
        if let (Q::Small(a), Q::Small(b)) = (self, o) {
            if let Some(c) = a.checked_sub(b) {
                return Q::Small(c);
            }
        }
        Q::from_big(self.to_big() - o.to_big())
    }

    pub fn mul_ref(&self, o: &Q) -> Q {
        if let (Q::Small(a), Q::Small(b)) = (self, o) {
            if let Some(c) = checked_mul_reduced(a, b) {
                return Q::Small(c);
            }
        }
        Q::from_big(self.to_big() * o.to_big())
    }

    pub fn mul_int(&self, k: i64) -> Q {
        self.mul_ref(&Q::int(k))
    }

    pub fn add_assign_ref(&mut self, o: &Q) {
        *self = self.add_ref(o);
    }
}

fn checked_mul_reduced(a: &Ratio<i64>, b: &Ratio<i64>) -> Option<Ratio<i64>> {
    // cross-cancel first so intermediate products stay small
    let g1 = a.numer().gcd(b.denom());
    let g2 = b.numer().gcd(a.denom());
    let (g1, g2) = (g1.max(1), g2.max(1));
    let n = (a.numer() / g1).checked_mul(b.numer() / g2)?;
    let d = (a.denom() / g2).checked_mul(b.denom() / g1)?;
    if n == i64::MIN || d == i64::MIN {
        return None;
    }
    Some(Ratio::new_raw(n, d))
}

impl Add for &Q {
    type Output = Q;
    fn add(self, o: &Q) -> Q {
        self.add_ref(o)
    }
}

impl Sub for &Q {
    type Output = Q;
    fn sub(self, o: &Q) -> Q {
        self.sub_ref(o)
    }
}

impl Mul for &Q {
    type Output = Q;
    fn mul(self, o: &Q) -> Q {
        self.mul_ref(o)
    }
}

impl Neg for &Q {
    type Output = Q;
    fn neg(self) -> Q {
        match self {
            Q::Small(r) if *r.numer() != i64::MIN => Q::Small(-*r),
            _ => Q::from_big(-self.to_big()),
        }
    }
}

impl PartialOrd for Q {
    fn partial_cmp(&self, o: &Q) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Q {
    fn cmp(&self, o: &Q) -> Ordering {
        match (self, o) {
            (Q::Small(a), Q::Small(b)) => {
                let l = *a.numer() as i128 * *b.denom() as i128;
                let r = *b.numer() as i128 * *a.denom() as i128;
                l.cmp(&r)
            }
            _ => self.to_big().cmp(&o.to_big()),
        }
    }
}

impl From<i64> for Q {
    fn from(n: i64) -> Q {
        Q::int(n)
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q::Small(r) => write!(f, "{}", r),
            Q::Big(r) => write!(f, "{}", r),
        }
    }
}
