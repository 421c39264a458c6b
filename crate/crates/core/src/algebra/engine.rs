use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use rustc_hash::FxHashMap;

use super::mono::Mono;
use super::rewrite::{Lin, Rewriter};
use super::Ctx;
use crate::error::Result;
use crate::scalars::{Cyclo, Field, FieldRef, FieldSpec};

/// `E_a F_b = sum F' E' K'`, stored by F/E table index.
#[derive(Clone, Debug)]
struct EfTerm {
    f: u16,
    e: u16,
    k1: i32,
    k2: i32,
    c: Cyclo,
}

pub(crate) type Lin2 = Vec<([Mono; 2], Cyclo)>;

/// Multiplication tables and Hopf structure maps of `U^sigma` for one field.
///
/// Products of PBW monomials reduce to three small tables: `F*F`, `E*E` and the
/// exchange `E*F = sum F E K`. Coproducts and antipodes of the `E` and `F`
/// parts are cached; the Cartan parts are handled in closed form.
pub struct Algebra {
    field: FieldRef,
    ell: u32,
    nb: usize,
    ff: Vec<Vec<(u16, Cyclo)>>,
    ee: Vec<Vec<(u16, Cyclo)>>,
    ef: Vec<Vec<EfTerm>>,
    e_weight: Vec<[i64; 2]>,
    delta_f: Vec<Lin2>,
    delta_e: Vec<Lin2>,
    anti_f: Vec<Lin>,
    anti_e: Vec<Lin>,
    delta_cache: RwLock<FxHashMap<Mono, Arc<Lin2>>>,
}

pub type AlgebraRef = Arc<Algebra>;

fn push(acc: &mut FxHashMap<Mono, Cyclo>, m: Mono, c: Cyclo) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&m) {
        Some(x) => {
            x.add_assign_ref(&c);
        }
        None => {
            acc.insert(m, c);
        }
    }
}

pub(crate) fn push2(acc: &mut FxHashMap<[Mono; 2], Cyclo>, m: [Mono; 2], c: Cyclo) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&m) {
        Some(x) => {
            x.add_assign_ref(&c);
        }
        None => {
            acc.insert(m, c);
        }
    }
}

pub(crate) fn finish<K: Ord + Copy>(acc: impl IntoIterator<Item = (K, Cyclo)>) -> Vec<(K, Cyclo)> {
    let mut v: Vec<(K, Cyclo)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}

impl Algebra {
    /// Shared instance for a field; tables are built once per process.
    pub fn get(spec: FieldSpec) -> AlgebraRef {
        static CACHE: OnceLock<Mutex<HashMap<FieldSpec, AlgebraRef>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut g = cache.lock().expect("algebra cache poisoned");
        g.entry(spec).or_insert_with(|| Arc::new(Algebra::build(Field::shared(spec)))).clone()
    }

    pub fn new(ell: u32, d: u32) -> Result<AlgebraRef> {
        Ok(Algebra::get(FieldSpec::new(ell, d)?))
    }

    fn build(field: FieldRef) -> Algebra {
        let ell = field.ell();
        let nb = 4 * ell as usize;
        let rw = Rewriter::new(&field);
        let mut ff = Vec::with_capacity(nb * nb);
        let mut ee = Vec::with_capacity(nb * nb);
        let mut ef = Vec::with_capacity(nb * nb);
        for a in 0..nb {
            for b in 0..nb {
                let p = rw.mul(Mono::from_f_index(a), Mono::from_f_index(b));
                ff.push(p.into_iter().map(|(m, c)| (m.f_index() as u16, c)).collect());
                let p = rw.mul(Mono::from_e_index(a), Mono::from_e_index(b));
                ee.push(p.into_iter().map(|(m, c)| (m.e_index() as u16, c)).collect());
                let p = rw.mul(Mono::from_e_index(a), Mono::from_f_index(b));
                ef.push(
                    p.into_iter()
                        .map(|(m, c)| {
                            debug_assert_eq!(m.s, 0);
                            EfTerm { f: m.f_index() as u16, e: m.e_index() as u16, k1: m.k1, k2: m.k2, c }
                        })
                        .collect(),
                );
            }
        }
        let e_weight = (0..nb).map(|i| Mono::from_e_index(i).weight()).collect();
        let mut alg = Algebra {
            field,
            ell,
            nb,
            ff,
            ee,
            ef,
            e_weight,
            delta_f: vec![],
            delta_e: vec![],
            anti_f: vec![],
            anti_e: vec![],
            delta_cache: RwLock::new(FxHashMap::default()),
        };
        alg.build_hopf();
        alg
    }

    fn build_hopf(&mut self) {
        let f = self.field.clone();
        let one = Cyclo::one();
        let m = |k1: i32, k2: i32, s: u8| Mono::cartan(k1, k2, s);
        let (e1, e2) = (Mono::e_part(1, 0, 0), Mono::e_part(0, 0, 1));
        let (f1, f2) = (Mono::f_part(1, 0, 0), Mono::f_part(0, 0, 1));
        let d_e1: Lin2 = vec![([e1, Mono::ONE], one.clone()), ([m(-1, 0, 0), e1], one.clone())];
        let d_e2: Lin2 = vec![([e2, Mono::ONE], one.clone()), ([m(0, -1, 1), e2], one.clone())];
        let d_f1: Lin2 = vec![([f1, m(1, 0, 0)], one.clone()), ([Mono::ONE, f1], one.clone())];
        let d_f2: Lin2 = vec![([f2, m(0, 1, 0)], one.clone()), ([m(0, 0, 1), f2], one.clone())];
        // e3 = e1 e2 - xi^-1 e2 e1, f3 = f2 f1 - xi f1 f2
        let d_e3 = self.lin2_sub(&self.mul2(&d_e1, &d_e2), &self.lin2_scale(&self.mul2(&d_e2, &d_e1), &f.xi_int(-1)));
        let d_f3 = self.lin2_sub(&self.mul2(&d_f2, &d_f1), &self.lin2_scale(&self.mul2(&d_f1, &d_f2), &f.xi_int(1)));
        let unit2: Lin2 = vec![([Mono::ONE, Mono::ONE], one.clone())];
        let power = |x: &Lin2, n: u8, alg: &Algebra| {
            let mut r = unit2.clone();
            for _ in 0..n {
                r = alg.mul2(&r, x);
            }
            r
        };
        let mut delta_f = Vec::with_capacity(self.nb);
        let mut delta_e = Vec::with_capacity(self.nb);
        for i in 0..self.nb {
            let fm = Mono::from_f_index(i);
            let d = self.mul2(&self.mul2(&power(&d_f1, fm.f1, self), &power(&d_f3, fm.f3, self)), &power(&d_f2, fm.f2, self));
            delta_f.push(d);
            let em = Mono::from_e_index(i);
            let d = self.mul2(&self.mul2(&power(&d_e1, em.e1, self), &power(&d_e3, em.e3, self)), &power(&d_e2, em.e2, self));
            delta_e.push(d);
        }
        self.delta_f = delta_f;
        self.delta_e = delta_e;

        // S(e1) = -xi^2 e1 k1, S(e2) = e2 k2 s, S(f1) = -f1 k1^-1, S(f2) = f2 k2^-1 s
        let s_e1: Lin = vec![(Mono { e1: 1, k1: 1, ..Mono::ONE }, -&f.xi_int(2))];
        let s_e2: Lin = vec![(Mono { e2: 1, k2: 1, s: 1, ..Mono::ONE }, one.clone())];
        let s_f1: Lin = vec![(Mono { f1: 1, k1: -1, ..Mono::ONE }, Cyclo::int(-1))];
        let s_f2: Lin = vec![(Mono { f2: 1, k2: -1, s: 1, ..Mono::ONE }, one.clone())];
        // antimultiplicative
        let s_e3 = self.lin_sub(&self.lin_mul(&s_e2, &s_e1), &self.lin_scale(&self.lin_mul(&s_e1, &s_e2), &f.xi_int(-1)));
        let s_f3 = self.lin_sub(&self.lin_mul(&s_f1, &s_f2), &self.lin_scale(&self.lin_mul(&s_f2, &s_f1), &f.xi_int(1)));
        let lpow = |x: &Lin, n: u8, alg: &Algebra| {
            let mut r: Lin = vec![(Mono::ONE, Cyclo::one())];
            for _ in 0..n {
                r = alg.lin_mul(&r, x);
            }
            r
        };
        let mut anti_f = Vec::with_capacity(self.nb);
        let mut anti_e = Vec::with_capacity(self.nb);
        for i in 0..self.nb {
            let fm = Mono::from_f_index(i);
            anti_f.push(self.lin_mul(&self.lin_mul(&lpow(&s_f2, fm.f2, self), &lpow(&s_f3, fm.f3, self)), &lpow(&s_f1, fm.f1, self)));
            let em = Mono::from_e_index(i);
            anti_e.push(self.lin_mul(&self.lin_mul(&lpow(&s_e2, em.e2, self), &lpow(&s_e3, em.e3, self)), &lpow(&s_e1, em.e1, self)));
        }
        self.anti_f = anti_f;
        self.anti_e = anti_e;
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn spec(&self) -> FieldSpec {
        self.field.spec()
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// Dimension of each colored quotient, `32 ell^4`.
    pub fn quotient_dim(&self) -> usize {
        32 * (self.ell as usize).pow(4)
    }

    /// Calls `emit` with the unrolled PBW expansion of `c * a * b`.
    #[inline]
    pub fn mul_mono_with(&self, a: &Mono, b: &Mono, c: &Cyclo, mut emit: impl FnMut(Mono, Cyclo)) {
        let f = &*self.field;
        let wb = b.weight();
        let x0 = a.k1 as i64 * wb[0] + a.k2 as i64 * wb[1];
        let neg = a.s == 1 && b.parity() == 1;
        let be = b.e_index();
        let web = self.e_weight[be];
        let (k1, k2, s) = (a.k1 + b.k1, a.k2 + b.k2, (a.s + b.s) & 1);
        for t in &self.ef[a.e_index() * self.nb + b.f_index()] {
            let x = x0 + t.k1 as i64 * web[0] + t.k2 as i64 * web[1];
            let mut c1 = f.mul_xi(&f.mul(c, &t.c), x);
            if neg {
                c1 = -&c1;
            }
            for (fi, cf) in &self.ff[a.f_index() * self.nb + t.f as usize] {
                let c2 = f.mul(&c1, cf);
                let fm = Mono::from_f_index(*fi as usize);
                for (ei, ce) in &self.ee[t.e as usize * self.nb + be] {
                    let em = Mono::from_e_index(*ei as usize);
                    let m = Mono {
                        f1: fm.f1,
                        f3: fm.f3,
                        f2: fm.f2,
                        e1: em.e1,
                        e3: em.e3,
                        e2: em.e2,
                        k1: k1 + t.k1,
                        k2: k2 + t.k2,
                        s,
                    };
                    emit(m, f.mul(&c2, ce));
                }
            }
        }
    }

    /// Brings a monomial into the basis of `ctx`; returns the monomial and a
    /// power of the primitive `N`-th root `z` to multiply by.
    #[inline]
    pub fn reduce(&self, ctx: &Ctx, m: Mono) -> (Mono, i64) {
        match ctx {
            Ctx::Unrolled => (m, 0),
            Ctx::Colored(col) => {
                let l = self.ell as i32;
                let (q1, r1) = (m.k1.div_euclid(l), m.k1.rem_euclid(l));
                let (q2, r2) = (m.k2.div_euclid(l), m.k2.rem_euclid(l));
                if q1 == 0 && q2 == 0 {
                    return (m, 0);
                }
                let a = col.entries();
                // k_i^ell = xi^(ell alpha_i)
                let z1 = self.field.xi_exponent(a[0].mul_int(self.ell as i64)).expect("color fits the field");
                let z2 = self.field.xi_exponent(a[1].mul_int(self.ell as i64)).expect("color fits the field");
                (Mono { k1: r1, k2: r2, ..m }, q1 as i64 * z1 + q2 as i64 * z2)
            }
        }
    }

    pub(crate) fn reduce_coeff(&self, ctx: &Ctx, m: Mono, c: Cyclo) -> (Mono, Cyclo) {
        let (m, z) = self.reduce(ctx, m);
        if z == 0 {
            (m, c)
        } else {
            (m, self.field.mul_zeta(&c, z))
        }
    }

    /// Adds `c * a * b`, reduced in `ctx`, into `acc`.
    pub(crate) fn mul_acc(&self, ctx: &Ctx, a: &Mono, b: &Mono, c: &Cyclo, acc: &mut FxHashMap<Mono, Cyclo>) {
        self.mul_mono_with(a, b, c, |m, x| {
            let (m, x) = self.reduce_coeff(ctx, m, x);
            push(acc, m, x);
        });
    }

    /// Unrolled product of two linear combinations of monomials.
    pub(crate) fn lin_mul(&self, x: &Lin, y: &Lin) -> Lin {
        let mut acc = FxHashMap::default();
        for (a, ca) in x {
            for (b, cb) in y {
                self.mul_acc(&Ctx::Unrolled, a, b, &self.field.mul(ca, cb), &mut acc);
            }
        }
        finish(acc)
    }

    pub(crate) fn lin_scale(&self, x: &Lin, c: &Cyclo) -> Lin {
        x.iter().map(|(m, a)| (*m, self.field.mul(a, c))).filter(|(_, a)| !a.is_zero()).collect()
    }

    pub(crate) fn lin_sub(&self, x: &Lin, y: &Lin) -> Lin {
        let mut acc: FxHashMap<Mono, Cyclo> = x.iter().cloned().collect();
        for (m, c) in y {
            push(&mut acc, *m, -c);
        }
        finish(acc)
    }

    /// Unrolled product in `U^sigma (x) U^sigma`.
    pub(crate) fn mul2(&self, x: &Lin2, y: &Lin2) -> Lin2 {
        let mut acc = FxHashMap::default();
        for (a, ca) in x {
            for (b, cb) in y {
                let c = self.field.mul(ca, cb);
                let left = {
                    let mut v = Vec::new();
                    self.mul_mono_with(&a[0], &b[0], &c, |m, x| v.push((m, x)));
                    v
                };
                for (l, cl) in left {
                    self.mul_mono_with(&a[1], &b[1], &cl, |m, x| push2(&mut acc, [l, m], x));
                }
            }
        }
        finish(acc)
    }

    fn lin2_scale(&self, x: &Lin2, c: &Cyclo) -> Lin2 {
        x.iter().map(|(m, a)| (*m, self.field.mul(a, c))).collect()
    }

    fn lin2_sub(&self, x: &Lin2, y: &Lin2) -> Lin2 {
        let mut acc: FxHashMap<[Mono; 2], Cyclo> = x.iter().cloned().collect();
        for (m, c) in y {
            push2(&mut acc, *m, -c);
        }
        finish(acc)
    }

    /// Unrolled coproduct of a monomial.
    pub fn delta_mono(&self, m: &Mono) -> Arc<Lin2> {
        if let Some(v) = self.delta_cache.read().expect("cache poisoned").get(m) {
            return v.clone();
        }
        let fm = m.f_index();
        let em = m.e_index();
        let k = Mono::cartan(m.k1, m.k2, m.s);
        let de = self.delta_e[em].iter().map(|(t, c)| {
            // E part times the grouplike tail, one tensor factor at a time
            let mut acc = FxHashMap::default();
            self.mul_mono_with(&t[0], &k, c, |x, cx| {
                self.mul_mono_with(&t[1], &k, &cx, |y, cy| push2(&mut acc, [x, y], cy));
            });
            finish(acc)
        });
        let mut tail: Lin2 = Vec::new();
        for part in de {
            tail.extend(part);
        }
        let v = Arc::new(self.mul2(&self.delta_f[fm], &tail));
        self.delta_cache.write().expect("cache poisoned").insert(*m, v.clone());
        v
    }

    /// Unrolled antipode of a monomial.
    pub fn antipode_mono(&self, m: &Mono) -> Lin {
        // S(F E K s) = s K^-1 S(E) S(F)
        let head: Lin = vec![(Mono::cartan(-m.k1, -m.k2, m.s), Cyclo::one())];
        let se = self.lin_mul(&head, &self.anti_e[m.e_index()]);
        self.lin_mul(&se, &self.anti_f[m.f_index()])
    }

    pub fn counit_mono(m: &Mono) -> bool {
        m.is_cartan()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_match_the_rewriter() {
        let alg = Algebra::new(3, 1).unwrap();
        let rw = Rewriter::new(alg.field());
        let monos = [
            Mono { f1: 2, f3: 1, e2: 1, k1: 1, s: 1, ..Mono::ONE },
            Mono { e1: 1, e3: 1, e2: 1, k2: -2, ..Mono::ONE },
            Mono { f1: 1, f2: 1, e1: 2, k1: -1, k2: 3, s: 1, ..Mono::ONE },
        ];
        for a in &monos {
            for b in &monos {
                assert_eq!(alg.lin_mul(&vec![(*a, Cyclo::one())], &vec![(*b, Cyclo::one())]), rw.mul(*a, *b));
            }
        }
    }
}
