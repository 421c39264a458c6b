use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use super::engine::{finish, AlgebraRef};
use super::mono::{Generator, Mono};
use super::tensor::TensorElement;
use super::Ctx;
use crate::error::{Error, Result};
use crate::gcoalgebra::Color;
use crate::scalars::Cyclo;

/// A finite linear combination of PBW monomials, either in `U^sigma` or in a
/// colored quotient `U_alpha`.
#[derive(Clone)]
pub struct AlgebraElement {
    alg: AlgebraRef,
    ctx: Ctx,
    terms: BTreeMap<Mono, Cyclo>,
}

impl AlgebraElement {
    pub fn zero(alg: &AlgebraRef, ctx: Ctx) -> AlgebraElement {
        AlgebraElement { alg: alg.clone(), ctx, terms: BTreeMap::new() }
    }

    pub fn scalar(alg: &AlgebraRef, ctx: Ctx, c: Cyclo) -> AlgebraElement {
        AlgebraElement::from_mono(alg, ctx, Mono::ONE, c)
    }

    pub fn one(alg: &AlgebraRef, ctx: Ctx) -> AlgebraElement {
        AlgebraElement::scalar(alg, ctx, Cyclo::one())
    }

    pub fn from_mono(alg: &AlgebraRef, ctx: Ctx, m: Mono, c: Cyclo) -> AlgebraElement {
        AlgebraElement::from_terms(alg, ctx, [(m, c)])
    }

    pub fn generator(alg: &AlgebraRef, ctx: Ctx, g: Generator) -> AlgebraElement {
        AlgebraElement::from_mono(alg, ctx, g.mono(), Cyclo::one())
    }

    /// Sums the given terms, reducing each monomial into the basis of `ctx`.
    /// Exponents of `e1`, `f1` at or beyond `ell` give zero.
    pub fn from_terms(alg: &AlgebraRef, ctx: Ctx, terms: impl IntoIterator<Item = (Mono, Cyclo)>) -> AlgebraElement {
        let ell = alg.ell() as u8;
        let mut acc: FxHashMap<Mono, Cyclo> = FxHashMap::default();
        for (m, c) in terms {
            if m.e1 >= ell || m.f1 >= ell || m.e2 > 1 || m.e3 > 1 || m.f2 > 1 || m.f3 > 1 {
                continue;
            }
            let m = Mono { s: m.s & 1, ..m };
            let (m, c) = alg.reduce_coeff(&ctx, m, c);
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(x) => x.add_assign_ref(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        AlgebraElement { alg: alg.clone(), ctx, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.alg
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Mono, Cyclo> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Mono, Cyclo> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> Cyclo {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn same(&self, o: &AlgebraElement) -> Result<()> {
        if self.alg.spec() != o.alg.spec() {
            return Err(Error::IncompatibleField(format!("{:?} vs {:?}", self.alg.spec(), o.alg.spec())));
        }
        if self.ctx != o.ctx {
            return Err(Error::ContextMismatch(format!("{} vs {}", self.ctx, o.ctx)));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &AlgebraElement) -> Result<AlgebraElement> {
        self.same(o)?;
        let mut t = self.terms.clone();
        for (m, c) in &o.terms {
            let e = t.entry(*m).or_default();
            e.add_assign_ref(c);
            if e.is_zero() {
                t.remove(m);
            }
        }
        Ok(AlgebraElement { alg: self.alg.clone(), ctx: self.ctx, terms: t })
    }

    pub fn try_sub(&self, o: &AlgebraElement) -> Result<AlgebraElement> {
        self.try_add(&-o)
    }

    pub fn try_mul(&self, o: &AlgebraElement) -> Result<AlgebraElement> {
        self.same(o)?;
        let mut acc = FxHashMap::default();
        let f = self.alg.field();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                self.alg.mul_acc(&self.ctx, a, b, &f.mul(ca, cb), &mut acc);
            }
        }
        Ok(AlgebraElement { alg: self.alg.clone(), ctx: self.ctx, terms: finish(acc).into_iter().collect() })
    }

    pub fn scale(&self, c: &Cyclo) -> AlgebraElement {
        let f = self.alg.field();
        let terms = self.terms.iter().map(|(m, x)| (*m, f.mul(x, c))).filter(|(_, x)| !x.is_zero()).collect();
        AlgebraElement { alg: self.alg.clone(), ctx: self.ctx, terms }
    }

    pub fn pow(&self, n: u32) -> AlgebraElement {
        let mut r = AlgebraElement::one(&self.alg, self.ctx);
        for _ in 0..n {
            r = &r * self;
        }
        r
    }

    /// Image in the quotient `U_alpha`.
    pub fn project(&self, color: Color) -> Result<AlgebraElement> {
        if self.ctx != Ctx::Unrolled {
            return Err(Error::ContextMismatch(format!("projection needs an unrolled element, got {}", self.ctx)));
        }
        color.check_field(self.alg.spec())?;
        Ok(AlgebraElement::from_terms(&self.alg, Ctx::Colored(color), self.terms.clone()))
    }

    /// Coproduct in `U^sigma (x) U^sigma`; for a colored element use
    /// [`AlgebraElement::coproduct_split`].
    pub fn coproduct(&self) -> Result<TensorElement> {
        if self.ctx != Ctx::Unrolled {
            return Err(Error::ContextMismatch("coproduct of a colored element needs a split of its color".into()));
        }
        Ok(self.coproduct_into([Ctx::Unrolled, Ctx::Unrolled]))
    }

    /// The component `Delta_{a,b} : U_{a+b} -> U_a (x) U_b`.
    pub fn coproduct_split(&self, a: Color, b: Color) -> Result<TensorElement> {
        match self.ctx {
            Ctx::Colored(g) if g == a + b => Ok(self.coproduct_into([Ctx::Colored(a), Ctx::Colored(b)])),
            _ => Err(Error::ContextMismatch(format!("cannot split {} as {} + {}", self.ctx, a, b))),
        }
    }

    pub(crate) fn coproduct_into(&self, ctxs: [Ctx; 2]) -> TensorElement {
        let f = self.alg.field();
        let mut acc: FxHashMap<Vec<Mono>, Cyclo> = FxHashMap::default();
        for (m, c) in &self.terms {
            for (t, x) in self.alg.delta_mono(m).iter() {
                let (a, za) = self.alg.reduce(&ctxs[0], t[0]);
                let (b, zb) = self.alg.reduce(&ctxs[1], t[1]);
                let v = f.mul_zeta(&f.mul(c, x), za + zb);
                acc.entry(vec![a, b]).or_default().add_assign_ref(&v);
            }
        }
        TensorElement::from_map(&self.alg, ctxs.to_vec(), acc)
    }

    /// Antipode; maps `U_alpha` to `U_{-alpha}`.
    pub fn antipode(&self) -> AlgebraElement {
        let ctx = match self.ctx {
            Ctx::Unrolled => Ctx::Unrolled,
            Ctx::Colored(a) => Ctx::Colored(-a),
        };
        let mut terms = Vec::new();
        let f = self.alg.field();
        for (m, c) in &self.terms {
            for (x, cx) in self.alg.antipode_mono(m) {
                terms.push((x, f.mul(c, &cx)));
            }
        }
        AlgebraElement::from_terms(&self.alg, ctx, terms)
    }

    /// Counit; defined on `U^sigma` and on the untwisted quotient `U_0`.
    pub fn counit(&self) -> Result<Cyclo> {
        if let Ctx::Colored(a) = self.ctx {
            if !a.is_zero() {
                return Err(Error::ContextMismatch(format!("no counit on U_{a}")));
            }
        }
        let mut s = Cyclo::zero();
        for (m, c) in &self.terms {
            if m.is_cartan() {
                s.add_assign_ref(c);
            }
        }
        Ok(s)
    }

    /// Supercommutator-free commutator `xy - yx`.
    pub fn commutator(&self, o: &AlgebraElement) -> Result<AlgebraElement> {
        self.try_mul(o)?.try_sub(&o.try_mul(self)?)
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, o: &AlgebraElement) -> bool {
        self.alg.spec() == o.alg.spec() && self.ctx == o.ctx && self.terms == o.terms
    }
}

impl Eq for AlgebraElement {}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.ctx, self)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.alg.field();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}) {}", field.format_exact(c), m)?;
        }
        Ok(())
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, o: &AlgebraElement) -> AlgebraElement {
        self.try_add(o).expect("operands live in different algebras")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, o: &AlgebraElement) -> AlgebraElement {
        self.try_sub(o).expect("operands live in different algebras")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, o: &AlgebraElement) -> AlgebraElement {
        self.try_mul(o).expect("operands live in different algebras")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            alg: self.alg.clone(),
            ctx: self.ctx,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}
