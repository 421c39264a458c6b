use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::element::AlgebraElement;
use super::engine::AlgebraRef;
use super::mono::Mono;
use super::Ctx;
use crate::error::{Error, Result};
use crate::gcoalgebra::Color;
use crate::scalars::Cyclo;

/// An element of a tensor power, one context per slot.
///
/// The tensor product is the plain (bosonized) one: `(a (x) b)(c (x) d) = ac (x) bd`.
#[derive(Clone)]
pub struct TensorElement {
    alg: AlgebraRef,
    ctxs: Vec<Ctx>,
    terms: BTreeMap<Vec<Mono>, Cyclo>,
}

impl TensorElement {
    pub(crate) fn from_map(alg: &AlgebraRef, ctxs: Vec<Ctx>, acc: FxHashMap<Vec<Mono>, Cyclo>) -> TensorElement {
        TensorElement { alg: alg.clone(), ctxs, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Builds from raw terms, reducing every slot into its context.
    pub fn from_terms(alg: &AlgebraRef, ctxs: Vec<Ctx>, terms: impl IntoIterator<Item = (Vec<Mono>, Cyclo)>) -> TensorElement {
        let f = alg.field();
        let mut acc: FxHashMap<Vec<Mono>, Cyclo> = FxHashMap::default();
        for (ms, c) in terms {
            assert_eq!(ms.len(), ctxs.len(), "term arity");
            let mut z = 0;
            let ms: Vec<Mono> = ms
                .iter()
                .zip(&ctxs)
                .map(|(m, ctx)| {
                    let (m, zz) = alg.reduce(ctx, *m);
                    z += zz;
                    m
                })
                .collect();
            acc.entry(ms).or_default().add_assign_ref(&f.mul_zeta(&c, z));
        }
        TensorElement::from_map(alg, ctxs, acc)
    }

    pub fn unit(alg: &AlgebraRef, ctxs: Vec<Ctx>) -> TensorElement {
        let n = ctxs.len();
        TensorElement::from_terms(alg, ctxs, [(vec![Mono::ONE; n], Cyclo::one())])
    }

    /// `a_1 (x) .. (x) a_n`.
    pub fn tensor(factors: &[&AlgebraElement]) -> TensorElement {
        let alg = factors[0].algebra().clone();
        let f = alg.field().clone();
        let mut cur: Vec<(Vec<Mono>, Cyclo)> = vec![(vec![], Cyclo::one())];
        for x in factors {
            let mut next = Vec::with_capacity(cur.len() * x.len());
            for (ms, c) in &cur {
                for (m, cm) in x.terms() {
                    let mut v = ms.clone();
                    v.push(*m);
                    next.push((v, f.mul(c, cm)));
                }
            }
            cur = next;
        }
        let ctxs = factors.iter().map(|x| *x.ctx()).collect();
        TensorElement { alg, ctxs, terms: cur.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.alg
    }

    pub fn ctxs(&self) -> &[Ctx] {
        &self.ctxs
    }

    pub fn arity(&self) -> usize {
        self.ctxs.len()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Mono>, Cyclo> {
        &self.terms
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

    fn check_slot(&self, i: usize) -> Result<()> {
        if i >= self.arity() {
            return Err(Error::SlotOutOfRange { slot: i, n: self.arity() });
        }
        Ok(())
    }

    fn same(&self, o: &TensorElement) -> Result<()> {
        if self.alg.spec() != o.alg.spec() {
            return Err(Error::IncompatibleField("tensor factors over different fields".into()));
        }
        if self.ctxs != o.ctxs {
            return Err(Error::ContextMismatch("tensor contexts differ".into()));
        }
        Ok(())
    }

    pub fn add(&self, o: &TensorElement) -> Result<TensorElement> {
        self.same(o)?;
        let mut t = self.terms.clone();
        for (m, c) in &o.terms {
            let e = t.entry(m.clone()).or_default();
            e.add_assign_ref(c);
            if e.is_zero() {
                t.remove(m);
            }
        }
        Ok(TensorElement { alg: self.alg.clone(), ctxs: self.ctxs.clone(), terms: t })
    }

    pub fn sub(&self, o: &TensorElement) -> Result<TensorElement> {
        self.add(&o.scale(&Cyclo::int(-1)))
    }

    pub fn scale(&self, c: &Cyclo) -> TensorElement {
        let f = self.alg.field();
        let terms = self.terms.iter().map(|(m, x)| (m.clone(), f.mul(x, c))).filter(|(_, x)| !x.is_zero()).collect();
        TensorElement { alg: self.alg.clone(), ctxs: self.ctxs.clone(), terms }
    }

    /// Slotwise product.
    pub fn mul(&self, o: &TensorElement) -> Result<TensorElement> {
        self.same(o)?;
        let lhs: Vec<(&Vec<Mono>, &Cyclo)> = self.terms.iter().collect();
        let acc = if lhs.len() * o.terms.len() < 4096 {
            let mut acc = FxHashMap::default();
            for (a, ca) in lhs {
                self.mul_term_into(a, ca, o, &mut acc);
            }
            acc
        } else {
            lhs.par_chunks(16)
                .fold(FxHashMap::default, |mut acc, chunk| {
                    for (a, ca) in chunk {
                        self.mul_term_into(a, ca, o, &mut acc);
                    }
                    acc
                })
                .reduce(FxHashMap::default, merge_maps)
        };
        Ok(TensorElement::from_map(&self.alg, self.ctxs.clone(), acc))
    }

    fn mul_term_into(&self, a: &[Mono], ca: &Cyclo, o: &TensorElement, acc: &mut FxHashMap<Vec<Mono>, Cyclo>) {
        let f = self.alg.field();
        let n = self.arity();
        for (b, cb) in &o.terms {
            let mut partial: Vec<(Vec<Mono>, Cyclo)> = vec![(Vec::with_capacity(n), f.mul(ca, cb))];
            for s in 0..n {
                let mut next = Vec::with_capacity(partial.len());
                for (ms, c) in &partial {
                    self.alg.mul_mono_with(&a[s], &b[s], c, |m, x| {
                        let (m, x) = self.alg.reduce_coeff(&self.ctxs[s], m, x);
                        let mut v = ms.clone();
                        v.push(m);
                        next.push((v, x));
                    });
                }
                partial = next;
            }
            for (ms, c) in partial {
                acc.entry(ms).or_default().add_assign_ref(&c);
            }
        }
    }

    /// Reorders slots: slot `i` of the result is slot `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<TensorElement> {
        if perm.len() != self.arity() {
            return Err(Error::SlotOutOfRange { slot: perm.len(), n: self.arity() });
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            self.check_slot(p)?;
            seen[p] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::OutOfRange("not a permutation".into()));
        }
        let ctxs = perm.iter().map(|&p| self.ctxs[p]).collect();
        let terms = self.terms.iter().map(|(m, c)| (perm.iter().map(|&p| m[p]).collect(), c.clone())).collect();
        Ok(TensorElement { alg: self.alg.clone(), ctxs, terms })
    }

    /// Embeds into `n` slots, slot `s` going to `pos[s]`; the remaining slots
    /// carry `1` in context `fill`.
    pub fn place(&self, n: usize, pos: &[usize], fill: Ctx) -> Result<TensorElement> {
        if pos.len() != self.arity() || pos.iter().any(|&p| p >= n) {
            return Err(Error::SlotOutOfRange { slot: n, n: self.arity() });
        }
        let mut ctxs = vec![fill; n];
        for (s, &p) in pos.iter().enumerate() {
            ctxs[p] = self.ctxs[s];
        }
        let terms = self
            .terms
            .iter()
            .map(|(ms, c)| {
                let mut v = vec![Mono::ONE; n];
                for (s, &p) in pos.iter().enumerate() {
                    v[p] = ms[s];
                }
                (v, c.clone())
            })
            .collect();
        Ok(TensorElement { alg: self.alg.clone(), ctxs, terms })
    }

    /// `self (x) o`, the slots of `o` following those of `self`.
    pub fn concat(&self, o: &TensorElement) -> Result<TensorElement> {
        if self.alg.spec() != o.alg.spec() {
            return Err(Error::IncompatibleField("tensor factors over different fields".into()));
        }
        let f = self.alg.field();
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let mut v = a.clone();
                v.extend_from_slice(b);
                terms.insert(v, f.mul(ca, cb));
            }
        }
        let mut ctxs = self.ctxs.clone();
        ctxs.extend_from_slice(&o.ctxs);
        Ok(TensorElement { alg: self.alg.clone(), ctxs, terms })
    }

    /// Swap of the two slots of a 2-tensor.
    pub fn flip(&self) -> Result<TensorElement> {
        if self.arity() != 2 {
            return Err(Error::SlotOutOfRange { slot: 2, n: self.arity() });
        }
        self.permute(&[1, 0])
    }

    /// Coproduct on slot `i` of an unrolled slot; the result has one more slot.
    pub fn coproduct_slot(&self, i: usize) -> Result<TensorElement> {
        self.check_slot(i)?;
        let pair = match self.ctxs[i] {
            Ctx::Unrolled => [Ctx::Unrolled, Ctx::Unrolled],
            Ctx::Colored(_) => {
                return Err(Error::ContextMismatch("colored slot needs a color split".into()));
            }
        };
        self.coproduct_slot_into(i, pair)
    }

    /// `Delta_{a,b}` on a slot colored `a + b`.
    pub fn coproduct_slot_split(&self, i: usize, a: Color, b: Color) -> Result<TensorElement> {
        self.check_slot(i)?;
        match self.ctxs[i] {
            Ctx::Colored(g) if g == a + b => self.coproduct_slot_into(i, [Ctx::Colored(a), Ctx::Colored(b)]),
            c => Err(Error::ContextMismatch(format!("cannot split {c} as {a} + {b}"))),
        }
    }

    fn coproduct_slot_into(&self, i: usize, pair: [Ctx; 2]) -> Result<TensorElement> {
        let f = self.alg.field();
        let mut acc: FxHashMap<Vec<Mono>, Cyclo> = FxHashMap::default();
        for (ms, c) in &self.terms {
            for (t, x) in self.alg.delta_mono(&ms[i]).iter() {
                let (a, za) = self.alg.reduce(&pair[0], t[0]);
                let (b, zb) = self.alg.reduce(&pair[1], t[1]);
                let mut v = Vec::with_capacity(ms.len() + 1);
                v.extend_from_slice(&ms[..i]);
                v.push(a);
                v.push(b);
                v.extend_from_slice(&ms[i + 1..]);
                acc.entry(v).or_default().add_assign_ref(&f.mul_zeta(&f.mul(c, x), za + zb));
            }
        }
        let mut ctxs = self.ctxs.clone();
        ctxs.splice(i..=i, pair);
        Ok(TensorElement::from_map(&self.alg, ctxs, acc))
    }

    /// Counit on slot `i`; the result has one fewer slot.
    pub fn counit_slot(&self, i: usize) -> Result<TensorElement> {
        self.check_slot(i)?;
        if let Ctx::Colored(a) = self.ctxs[i] {
            if !a.is_zero() {
                return Err(Error::ContextMismatch(format!("no counit on U_{a}")));
            }
        }
        let mut acc: FxHashMap<Vec<Mono>, Cyclo> = FxHashMap::default();
        for (ms, c) in &self.terms {
            if ms[i].is_cartan() {
                let mut v = ms.clone();
                v.remove(i);
                acc.entry(v).or_default().add_assign_ref(c);
            }
        }
        let mut ctxs = self.ctxs.clone();
        ctxs.remove(i);
        Ok(TensorElement::from_map(&self.alg, ctxs, acc))
    }

    /// Antipode on slot `i`.
    pub fn antipode_slot(&self, i: usize) -> Result<TensorElement> {
        self.check_slot(i)?;
        let f = self.alg.field();
        let ctx = match self.ctxs[i] {
            Ctx::Unrolled => Ctx::Unrolled,
            Ctx::Colored(a) => Ctx::Colored(-a),
        };
        let mut acc: FxHashMap<Vec<Mono>, Cyclo> = FxHashMap::default();
        for (ms, c) in &self.terms {
            for (x, cx) in self.alg.antipode_mono(&ms[i]) {
                let (x, z) = self.alg.reduce(&ctx, x);
                let mut v = ms.clone();
                v[i] = x;
                acc.entry(v).or_default().add_assign_ref(&f.mul_zeta(&f.mul(c, &cx), z));
            }
        }
        let mut ctxs = self.ctxs.clone();
        ctxs[i] = ctx;
        Ok(TensorElement::from_map(&self.alg, ctxs, acc))
    }

    /// Multiplies slot `j` into slot `i` (as `x_i x_j`) and drops slot `j`.
    /// Slot `i` keeps its context; both slots must share it.
    pub fn multiply_slots(&self, i: usize, j: usize) -> Result<TensorElement> {
        self.check_slot(i)?;
        self.check_slot(j)?;
        if i == j {
            return Err(Error::OutOfRange("cannot multiply a slot with itself".into()));
        }
        if self.ctxs[i] != self.ctxs[j] {
            return Err(Error::ContextMismatch("multiplied slots must share a context".into()));
        }
        let f = self.alg.field();
        let mut acc: FxHashMap<Vec<Mono>, Cyclo> = FxHashMap::default();
        for (ms, c) in &self.terms {
            self.alg.mul_mono_with(&ms[i], &ms[j], c, |m, x| {
                let (m, z) = self.alg.reduce(&self.ctxs[i], m);
                let mut v = ms.clone();
                v[i] = m;
                v.remove(j);
                acc.entry(v).or_default().add_assign_ref(&f.mul_zeta(&x, z));
            });
        }
        let mut ctxs = self.ctxs.clone();
        ctxs.remove(j);
        Ok(TensorElement::from_map(&self.alg, ctxs, acc))
    }

    /// Collapses a 1-tensor to an algebra element.
    pub fn to_element(&self) -> Result<AlgebraElement> {
        if self.arity() != 1 {
            return Err(Error::SlotOutOfRange { slot: 1, n: self.arity() });
        }
        Ok(AlgebraElement::from_terms(&self.alg, self.ctxs[0], self.terms.iter().map(|(m, c)| (m[0], c.clone()))))
    }

    /// Projects unrolled slots into the given colors.
    pub fn project(&self, colors: &[Color]) -> Result<TensorElement> {
        if colors.len() != self.arity() {
            return Err(Error::SlotOutOfRange { slot: colors.len(), n: self.arity() });
        }
        if self.ctxs.iter().any(|c| *c != Ctx::Unrolled) {
            return Err(Error::ContextMismatch("projection needs unrolled slots".into()));
        }
        for c in colors {
            c.check_field(self.alg.spec())?;
        }
        let ctxs: Vec<Ctx> = colors.iter().map(|c| Ctx::Colored(*c)).collect();
        Ok(TensorElement::from_terms(&self.alg, ctxs, self.terms.clone()))
    }
}

impl PartialEq for TensorElement {
    fn eq(&self, o: &TensorElement) -> bool {
        self.alg.spec() == o.alg.spec() && self.ctxs == o.ctxs && self.terms == o.terms
    }
}

impl Eq for TensorElement {}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.alg.field();
        for (i, (ms, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let parts: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
            write!(f, "({}) {}", field.format_exact(c), parts.join(" (x) "))?;
        }
        Ok(())
    }
}

pub(crate) fn merge_maps<K: std::hash::Hash + Eq>(mut a: FxHashMap<K, Cyclo>, b: FxHashMap<K, Cyclo>) -> FxHashMap<K, Cyclo> {
    if a.len() < b.len() {
        return merge_maps(b, a);
    }
    for (k, c) in b {
        a.entry(k).or_default().add_assign_ref(&c);
    }
    a
}
