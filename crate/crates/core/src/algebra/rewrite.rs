//! Letter-by-letter straightening into PBW normal form.
//!
//! This is the slow reference path: every product is rewritten one generator at
//! a time using the commutation relations. It is only used to fill the product
//! tables of [`super::Algebra`], and by tests as an independent oracle.

use rustc_hash::FxHashMap;

use super::mono::Mono;
use crate::scalars::{Cyclo, Field};

pub(crate) type Lin = Vec<(Mono, Cyclo)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Letter {
    F1,
    F3,
    F2,
    E1,
    E3,
    E2,
    K1(i32),
    K2(i32),
    S,
}

pub(crate) struct Rewriter<'a> {
    f: &'a Field,
    ell: u8,
    // 1 / (xi - xi^-1)
    inv_brace: Cyclo,
}

fn collect(acc: FxHashMap<Mono, Cyclo>) -> Lin {
    let mut v: Lin = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}

fn push(acc: &mut FxHashMap<Mono, Cyclo>, m: Mono, c: &Cyclo) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&m) {
        Some(x) => x.add_assign_ref(c),
        None => {
            acc.insert(m, c.clone());
        }
    }
}

impl<'a> Rewriter<'a> {
    pub(crate) fn new(f: &'a Field) -> Rewriter<'a> {
        let b = &f.xi_int(1) - &f.xi_int(-1);
        let inv_brace = f.inv(&b).expect("xi is not a fourth root of unity");
        Rewriter { f, ell: f.ell() as u8, inv_brace }
    }

    fn xi(&self, k: i64) -> Cyclo {
        self.f.xi_int(k)
    }

    /// `(k - k^-1) / (xi - xi^-1)` for a Cartan monomial `k`.
    fn bracket(&self, k1: i32, k2: i32) -> Lin {
        let c = self.inv_brace.clone();
        vec![(Mono::cartan(k1, k2, 0), c.clone()), (Mono::cartan(-k1, -k2, 0), -&c)]
    }

    /// Left product of an F letter with an F-only monomial.
    fn f_left(&self, l: Letter, m: Mono) -> Lin {
        let (i, r, d) = (m.f1, m.f3, m.f2);
        match l {
            Letter::F1 => {
                if i + 1 < self.ell {
                    vec![(Mono::f_part(i + 1, r, d), Cyclo::one())]
                } else {
                    vec![]
                }
            }
            // f3 f1 = xi^-1 f1 f3
            Letter::F3 => {
                if r == 1 {
                    vec![]
                } else {
                    vec![(Mono::f_part(i, 1, d), self.xi(-(i as i64)))]
                }
            }
            Letter::F2 => {
                if i > 0 {
                    // f2 f1 = xi f1 f2 + f3
                    let rest = Mono::f_part(i - 1, r, d);
                    let mut acc = FxHashMap::default();
                    let xi = self.xi(1);
                    for (x, c) in self.f_left(Letter::F2, rest) {
                        for (y, e) in self.f_left(Letter::F1, x) {
                            push(&mut acc, y, &self.f.mul(&self.f.mul(&c, &e), &xi));
                        }
                    }
                    for (y, e) in self.f_left(Letter::F3, rest) {
                        push(&mut acc, y, &e);
                    }
                    collect(acc)
                } else if d == 1 {
                    vec![]
                } else if r == 1 {
                    // f2 f3 = -xi f3 f2
                    vec![(Mono::f_part(0, 1, 1), -&self.xi(1))]
                } else {
                    vec![(Mono::f_part(0, 0, 1), Cyclo::one())]
                }
            }
            _ => unreachable!("not an F letter"),
        }
    }

    /// Left product of an E letter with an E-only monomial.
    fn e_left(&self, l: Letter, m: Mono) -> Lin {
        let (i, r, d) = (m.e1, m.e3, m.e2);
        match l {
            Letter::E1 => {
                if i + 1 < self.ell {
                    vec![(Mono::e_part(i + 1, r, d), Cyclo::one())]
                } else {
                    vec![]
                }
            }
            // e3 e1 = xi^-1 e1 e3
            Letter::E3 => {
                if r == 1 {
                    vec![]
                } else {
                    vec![(Mono::e_part(i, 1, d), self.xi(-(i as i64)))]
                }
            }
            Letter::E2 => {
                if i > 0 {
                    // e2 e1 = xi e1 e2 - xi e3
                    let rest = Mono::e_part(i - 1, r, d);
                    let mut acc = FxHashMap::default();
                    let xi = self.xi(1);
                    for (x, c) in self.e_left(Letter::E2, rest) {
                        for (y, e) in self.e_left(Letter::E1, x) {
                            push(&mut acc, y, &self.f.mul(&self.f.mul(&c, &e), &xi));
                        }
                    }
                    let mxi = -&xi;
                    for (y, e) in self.e_left(Letter::E3, rest) {
                        push(&mut acc, y, &self.f.mul(&e, &mxi));
                    }
                    collect(acc)
                } else if d == 1 {
                    vec![]
                } else if r == 1 {
                    // e2 e3 = -xi e3 e2
                    vec![(Mono::e_part(0, 1, 1), -&self.xi(1))]
                } else {
                    vec![(Mono::e_part(0, 0, 1), Cyclo::one())]
                }
            }
            _ => unreachable!("not an E letter"),
        }
    }

    /// `e g = sign g e + extra` for an E letter `e` and an F letter `g`.
    fn exchange(&self, e: Letter, g: Letter) -> (i64, Lin) {
        use Letter::*;
        let xi = self.xi(1);
        match (e, g) {
            (E1, F1) => (1, self.bracket(1, 0)),
            (E1, F3) => (1, vec![(Mono { f2: 1, k1: 1, ..Mono::ONE }, -&xi)]),
            (E1, F2) => (1, vec![]),
            (E3, F1) => (1, vec![(Mono { e2: 1, k1: -1, ..Mono::ONE }, Cyclo::int(-1))]),
            (E3, F3) => (-1, self.bracket(1, 1)),
            (E3, F2) => (-1, vec![(Mono { e1: 1, k2: 1, ..Mono::ONE }, self.xi(-1))]),
            (E2, F1) => (1, vec![]),
            (E2, F3) => (-1, vec![(Mono { f1: 1, k2: -1, ..Mono::ONE }, Cyclo::one())]),
            (E2, F2) => (-1, self.bracket(0, 1)),
            _ => unreachable!(),
        }
    }

    /// Product of an E letter with an F-only monomial.
    fn e_times_f(&self, l: Letter, m: Mono) -> Lin {
        let (g, rest) = if m.f1 > 0 {
            (Letter::F1, Mono::f_part(m.f1 - 1, m.f3, m.f2))
        } else if m.f3 > 0 {
            (Letter::F3, Mono::f_part(0, 0, m.f2))
        } else if m.f2 > 0 {
            (Letter::F2, Mono::ONE)
        } else {
            let e = match l {
                Letter::E1 => Mono::e_part(1, 0, 0),
                Letter::E3 => Mono::e_part(0, 1, 0),
                Letter::E2 => Mono::e_part(0, 0, 1),
                _ => unreachable!(),
            };
            return vec![(e, Cyclo::one())];
        };
        let (sign, extra) = self.exchange(l, g);
        let mut acc = FxHashMap::default();
        let sc = Cyclo::int(sign);
        for (x, c) in self.e_times_f(l, rest) {
            for (y, e) in self.letter_times(g, x) {
                push(&mut acc, y, &self.f.mul(&self.f.mul(&c, &e), &sc));
            }
        }
        for (x, c) in extra {
            for (y, e) in self.mul(x, rest) {
                push(&mut acc, y, &self.f.mul(&c, &e));
            }
        }
        collect(acc)
    }

    /// Left product of a single letter with a normal monomial.
    pub(crate) fn letter_times(&self, l: Letter, m: Mono) -> Lin {
        match l {
            Letter::F1 | Letter::F3 | Letter::F2 => {
                let fm = Mono::f_part(m.f1, m.f3, m.f2);
                self.f_left(l, fm).into_iter().map(|(x, c)| (m.with_f(x), c)).collect()
            }
            Letter::E1 | Letter::E3 | Letter::E2 => {
                let fm = Mono::f_part(m.f1, m.f3, m.f2);
                let em = Mono::e_part(m.e1, m.e3, m.e2);
                let we = em.weight();
                let mut acc = FxHashMap::default();
                for (g, c) in self.e_times_f(l, fm) {
                    // g = F' E' K'; move K' past the E part of m
                    let c = self.f.mul_xi(&c, g.k1 as i64 * we[0] + g.k2 as i64 * we[1]);
                    for (e2, ce) in self.e_prod(Mono::e_part(g.e1, g.e3, g.e2), em) {
                        let mono = Mono {
                            f1: g.f1,
                            f3: g.f3,
                            f2: g.f2,
                            e1: e2.e1,
                            e3: e2.e3,
                            e2: e2.e2,
                            k1: g.k1 + m.k1,
                            k2: g.k2 + m.k2,
                            s: m.s,
                        };
                        push(&mut acc, mono, &self.f.mul(&c, &ce));
                    }
                }
                collect(acc)
            }
            Letter::K1(j) => {
                let w = m.weight();
                vec![(Mono { k1: m.k1 + j, ..m }, self.xi(j as i64 * w[0]))]
            }
            Letter::K2(j) => {
                let w = m.weight();
                vec![(Mono { k2: m.k2 + j, ..m }, self.xi(j as i64 * w[1]))]
            }
            Letter::S => {
                let c = if m.parity() == 1 { Cyclo::int(-1) } else { Cyclo::one() };
                vec![(Mono { s: m.s ^ 1, ..m }, c)]
            }
        }
    }

    fn e_prod(&self, a: Mono, b: Mono) -> Lin {
        let mut cur: Lin = vec![(b, Cyclo::one())];
        let letters = std::iter::repeat(Letter::E2)
            .take(a.e2 as usize)
            .chain(std::iter::repeat(Letter::E3).take(a.e3 as usize))
            .chain(std::iter::repeat(Letter::E1).take(a.e1 as usize));
        for l in letters {
            let mut acc = FxHashMap::default();
            for (x, c) in &cur {
                for (y, e) in self.e_left(l, *x) {
                    push(&mut acc, y, &self.f.mul(c, &e));
                }
            }
            cur = collect(acc);
        }
        cur
    }

    /// Applies a letter on the left of a linear combination.
    pub(crate) fn apply(&self, l: Letter, lin: &Lin) -> Lin {
        let mut acc = FxHashMap::default();
        for (x, c) in lin {
            for (y, e) in self.letter_times(l, *x) {
                push(&mut acc, y, &self.f.mul(c, &e));
            }
        }
        collect(acc)
    }

    /// Product of two normal monomials, rewriting the left factor letter by letter.
    pub(crate) fn mul(&self, a: Mono, b: Mono) -> Lin {
        let mut cur: Lin = vec![(b, Cyclo::one())];
        for l in letters_of(a).into_iter().rev() {
            cur = self.apply(l, &cur);
        }
        cur
    }
}

/// The word of a monomial, left to right.
pub(crate) fn letters_of(a: Mono) -> Vec<Letter> {
    let mut v = Vec::new();
    v.extend(std::iter::repeat(Letter::F1).take(a.f1 as usize));
    v.extend(std::iter::repeat(Letter::F3).take(a.f3 as usize));
    v.extend(std::iter::repeat(Letter::F2).take(a.f2 as usize));
    v.extend(std::iter::repeat(Letter::E1).take(a.e1 as usize));
    v.extend(std::iter::repeat(Letter::E3).take(a.e3 as usize));
    v.extend(std::iter::repeat(Letter::E2).take(a.e2 as usize));
    if a.k1 != 0 {
        v.push(Letter::K1(a.k1));
    }
    if a.k2 != 0 {
        v.push(Letter::K2(a.k2));
    }
    if a.s == 1 {
        v.push(Letter::S);
    }
    v
}
