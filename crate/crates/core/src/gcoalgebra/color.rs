use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalars::{FieldSpec, QRational};

/// An element `(alpha1, alpha2)` of `G = C^2 / Z^2`, stored with both entries
/// reduced into `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color {
    a: [QRational; 2],
}

impl Color {
    pub fn new(a1: QRational, a2: QRational) -> Color {
        Color { a: [a1.frac(), a2.frac()] }
    }

    pub fn zero() -> Color {
        Color::new(QRational::zero(), QRational::zero())
    }

    pub fn entries(&self) -> [QRational; 2] {
        self.a
    }

    pub fn is_zero(&self) -> bool {
        self.a[0].is_zero() && self.a[1].is_zero()
    }

    /// Entries must have denominators dividing `d` to live in the field.
    pub fn check_field(&self, spec: FieldSpec) -> Result<()> {
        for x in self.a {
            if spec.d() as i64 % x.den() != 0 {
                return Err(Error::IncompatibleField(format!(
                    "color entry {x} needs denominator dividing d = {}",
                    spec.d()
                )));
            }
        }
        Ok(())
    }
}

impl Add for Color {
    type Output = Color;
    fn add(self, o: Color) -> Color {
        Color::new(self.a[0] + o.a[0], self.a[1] + o.a[1])
    }
}

impl Sub for Color {
    type Output = Color;
    fn sub(self, o: Color) -> Color {
        self + (-o)
    }
}

impl Neg for Color {
    type Output = Color;
    fn neg(self) -> Color {
        Color::new(-self.a[0], -self.a[1])
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a[0], self.a[1])
    }
}

impl FromStr for Color {
    type Err = Error;
    /// Accepts `a1 a2`, `a1,a2` or `(a1, a2)`.
    fn from_str(s: &str) -> Result<Color> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = t.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty()).collect();
        if parts.len() != 2 {
            return Err(Error::Parse { line: 0, col: 0, msg: format!("a color needs two entries, got '{s}'") });
        }
        Ok(Color::new(parts[0].parse()?, parts[1].parse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_group_law() {
        let a: Color = "(4/3, -1/3)".parse().unwrap();
        assert_eq!(a.entries(), [QRational::new(1, 3), QRational::new(2, 3)]);
        assert!((a + (-a)).is_zero());
        let b: Color = "1/3 1/3".parse().unwrap();
        assert!(b.check_field(FieldSpec::new(3, 3).unwrap()).is_ok());
        assert!(b.check_field(FieldSpec::new(3, 1).unwrap()).is_err());
    }
}
