use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A PBW monomial `f1^i f3^r f2^d e1^i' e3^r' e2^d' k1^j1 k2^j2 s^m`.
///
/// The derived order is lexicographic on that exponent tuple.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    pub f1: u8,
    pub f3: u8,
    pub f2: u8,
    pub e1: u8,
    pub e3: u8,
    pub e2: u8,
    pub k1: i32,
    pub k2: i32,
    pub s: u8,
}

impl Mono {
    pub const ONE: Mono = Mono { f1: 0, f3: 0, f2: 0, e1: 0, e3: 0, e2: 0, k1: 0, k2: 0, s: 0 };

    pub fn cartan(k1: i32, k2: i32, s: u8) -> Mono {
        Mono { k1, k2, s: s & 1, ..Mono::ONE }
    }

    pub fn f_part(f1: u8, f3: u8, f2: u8) -> Mono {
        Mono { f1, f3, f2, ..Mono::ONE }
    }

    pub fn e_part(e1: u8, e3: u8, e2: u8) -> Mono {
        Mono { e1, e3, e2, ..Mono::ONE }
    }

    /// Weight `(|x|_1, |x|_2)` with `|e1| = (2,-1)`, `|e2| = (-1,0)`, `|e3| = (1,-1)`.
    pub fn weight(&self) -> [i64; 2] {
        let a = self.e1 as i64 - self.f1 as i64;
        let b = self.e3 as i64 - self.f3 as i64;
        let c = self.e2 as i64 - self.f2 as i64;
        [2 * a + b - c, -a - b]
    }

    /// Super degree modulo 2; `e2, e3, f2, f3` are odd.
    pub fn parity(&self) -> u8 {
        (self.f3 + self.f2 + self.e3 + self.e2) & 1
    }

    /// True when the monomial lies in the group algebra of `k1, k2, s`.
    pub fn is_cartan(&self) -> bool {
        self.f1 == 0 && self.f3 == 0 && self.f2 == 0 && self.e1 == 0 && self.e3 == 0 && self.e2 == 0
    }

    pub(crate) fn f_index(&self) -> usize {
        self.f1 as usize * 4 + self.f3 as usize * 2 + self.f2 as usize
    }

    pub(crate) fn e_index(&self) -> usize {
        self.e1 as usize * 4 + self.e3 as usize * 2 + self.e2 as usize
    }

    pub(crate) fn from_f_index(i: usize) -> Mono {
        Mono::f_part((i / 4) as u8, ((i / 2) % 2) as u8, (i % 2) as u8)
    }

    pub(crate) fn from_e_index(i: usize) -> Mono {
        Mono::e_part((i / 4) as u8, ((i / 2) % 2) as u8, (i % 2) as u8)
    }

    pub(crate) fn with_f(mut self, f: Mono) -> Mono {
        self.f1 = f.f1;
        self.f3 = f.f3;
        self.f2 = f.f2;
        self
    }

    /// Total number of letters, counting Cartan generators by absolute exponent.
    pub fn degree(&self) -> u32 {
        (self.f1 + self.f3 + self.f2 + self.e1 + self.e3 + self.e2 + self.s) as u32
            + self.k1.unsigned_abs()
            + self.k2.unsigned_abs()
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "f1^{} f3^{} f2^{} e1^{} e3^{} e2^{} k1^{} k2^{} s^{}",
            self.f1, self.f3, self.f2, self.e1, self.e3, self.e2, self.k1, self.k2, self.s
        )
    }
}

impl FromStr for Mono {
    type Err = Error;

    /// Parses the canonical form; letters may be omitted or given in any order
    /// as long as the result is already a PBW word.
    fn from_str(s: &str) -> Result<Mono> {
        let bad = |msg: String| Error::Parse { line: 0, col: 0, msg };
        let mut m = Mono::ONE;
        let order = ["f1", "f3", "f2", "e1", "e3", "e2", "k1", "k2", "s"];
        let mut last = 0usize;
        for tok in s.split_whitespace() {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (n, e.parse::<i32>().map_err(|_| bad(format!("bad exponent in '{tok}'")))?),
                None => (tok, 1),
            };
            let pos = order.iter().position(|o| *o == name).ok_or_else(|| bad(format!("unknown letter '{name}'")))?;
            if pos < last {
                return Err(bad(format!("letter '{name}' out of PBW order")));
            }
            last = pos;
            let small = |e: i32| u8::try_from(e).map_err(|_| bad(format!("exponent out of range in '{tok}'")));
            match pos {
                0 => m.f1 = small(exp)?,
                1 => m.f3 = small(exp)?,
                2 => m.f2 = small(exp)?,
                3 => m.e1 = small(exp)?,
                4 => m.e3 = small(exp)?,
                5 => m.e2 = small(exp)?,
                6 => m.k1 = exp,
                7 => m.k2 = exp,
                _ => m.s = (exp.rem_euclid(2)) as u8,
            }
        }
        Ok(m)
    }
}

/// Algebra generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    E1,
    E2,
    E3,
    F1,
    F2,
    F3,
    K1,
    K1Inv,
    K2,
    K2Inv,
    Sigma,
}

impl Generator {
    pub const ALL: [Generator; 11] = [
        Generator::E1,
        Generator::E2,
        Generator::E3,
        Generator::F1,
        Generator::F2,
        Generator::F3,
        Generator::K1,
        Generator::K1Inv,
        Generator::K2,
        Generator::K2Inv,
        Generator::Sigma,
    ];

    pub fn mono(self) -> Mono {
        match self {
            Generator::E1 => Mono::e_part(1, 0, 0),
            Generator::E2 => Mono::e_part(0, 0, 1),
            Generator::E3 => Mono::e_part(0, 1, 0),
            Generator::F1 => Mono::f_part(1, 0, 0),
            Generator::F2 => Mono::f_part(0, 0, 1),
            Generator::F3 => Mono::f_part(0, 1, 0),
            Generator::K1 => Mono::cartan(1, 0, 0),
            Generator::K1Inv => Mono::cartan(-1, 0, 0),
            Generator::K2 => Mono::cartan(0, 1, 0),
            Generator::K2Inv => Mono::cartan(0, -1, 0),
            Generator::Sigma => Mono::cartan(0, 0, 1),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Generator> {
        Ok(match s {
            "e1" => Generator::E1,
            "e2" => Generator::E2,
            "e3" => Generator::E3,
            "f1" => Generator::F1,
            "f2" => Generator::F2,
            "f3" => Generator::F3,
            "k1" => Generator::K1,
            "k1^-1" | "k1inv" => Generator::K1Inv,
            "k2" => Generator::K2,
            "k2^-1" | "k2inv" => Generator::K2Inv,
            "s" | "sigma" => Generator::Sigma,
            _ => return Err(Error::Parse { line: 0, col: 0, msg: format!("unknown generator '{s}'") }),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_of_generators() {
        assert_eq!(Generator::E1.mono().weight(), [2, -1]);
        assert_eq!(Generator::E2.mono().weight(), [-1, 0]);
        assert_eq!(Generator::E3.mono().weight(), [1, -1]);
        assert_eq!(Generator::F3.mono().weight(), [-1, 1]);
        assert_eq!(Generator::Sigma.mono().weight(), [0, 0]);
    }

    #[test]
    fn text_round_trip() {
        let m = Mono { f1: 2, f3: 1, f2: 0, e1: 1, e3: 0, e2: 1, k1: -3, k2: 4, s: 1 };
        assert_eq!(m.to_string().parse::<Mono>().unwrap(), m);
        assert_eq!("e1 k2^-1".parse::<Mono>().unwrap(), Mono { e1: 1, k2: -1, ..Mono::ONE });
        assert!("e1 f1".parse::<Mono>().is_err());
    }

    #[test]
    fn index_round_trip() {
        for i in 0..20 {
            assert_eq!(Mono::from_f_index(i).f_index(), i);
            assert_eq!(Mono::from_e_index(i).e_index(), i);
        }
    }
}
