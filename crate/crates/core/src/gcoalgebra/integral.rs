use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::Color;
use crate::algebra::{AlgebraElement, AlgebraRef, Ctx, Mono};
use crate::error::{Error, Result};
use crate::scalars::{Cyclo, Field};

/// Normalization `eta` of the right G-integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralForm {
    eta: Cyclo,
}

impl IntegralForm {
    pub fn new(eta: Cyclo) -> Result<IntegralForm> {
        if eta.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(IntegralForm { eta })
    }

    /// `eta = 1`.
    pub fn unit() -> IntegralForm {
        IntegralForm { eta: Cyclo::one() }
    }

    /// The normalization under which the twist of `U_0` integrates to one.
    /// With `eta = 1` both `lambda(theta)` and `lambda(theta^-1)` equal
    /// `-{1}^(ell+1) (1 - xi)^(ell-1) / ell^2`, so `eta` is its inverse.
    pub fn normalized(field: &Field) -> IntegralForm {
        let eta = field.inv(&twist_integral_unit(field)).expect("nonzero");
        IntegralForm { eta }
    }

    /// `eta = ell (ell - 1) / ({1}^(ell+1) (1 - xi)^(ell-1))`, the constant
    /// obtained from the uncorrected closed formula for `lambda(theta)`.
    pub fn closed_formula(field: &Field) -> IntegralForm {
        let ell = field.ell();
        let eta = field.div(&Cyclo::int((ell * (ell - 1)) as i64), &brace_power(field)).expect("nonzero");
        IntegralForm { eta }
    }

    pub fn eta(&self) -> &Cyclo {
        &self.eta
    }
}

fn brace_power(field: &Field) -> Cyclo {
    let ell = field.ell();
    let one_minus = &Cyclo::one() - &field.xi_int(1);
    let brace = &field.xi_int(1) - &field.xi_int(-1);
    field.mul(&field.pow(&brace, ell + 1), &field.pow(&one_minus, ell - 1))
}

/// `lambda_0(theta) = lambda_0(theta^-1)` for `eta = 1`:
/// `-{1}^(ell+1) (1 - xi)^(ell-1) / ell^2`.
pub fn twist_integral_unit(field: &Field) -> Cyclo {
    let l2 = (field.ell() * field.ell()) as i64;
    brace_power(field).scale(&crate::scalars::Q::new(-1, l2))
}

/// `{1}^(ell+1) (1 - xi)^(ell-1) / (ell (ell - 1))`, the closed formula for
/// `lambda_0(theta)` at `eta = 1` as derived by hand expansion.
pub fn twist_integral_closed_formula(field: &Field) -> Cyclo {
    let ell = field.ell() as i64;
    brace_power(field).scale(&crate::scalars::Q::new(1, ell * (ell - 1)))
}

/// The unique PBW monomial on which `lambda_alpha` is supported.
pub fn top_monomial(ell: u32) -> Mono {
    let l = ell as u8;
    Mono { f1: l - 1, f3: 1, f2: 1, e1: l - 1, e3: 1, e2: 1, k1: 0, k2: ell as i32 - 2, s: 0 }
}

fn color_of(x: &AlgebraElement) -> Result<Color> {
    x.ctx().color().ok_or_else(|| Error::ContextMismatch("expected an element of a colored quotient".into()))
}

/// `lambda_alpha(top) = eta xi^(ell (alpha1 + alpha2))`.
pub fn integral_value_on_top(alg: &AlgebraRef, color: Color, form: &IntegralForm) -> Cyclo {
    let f = alg.field();
    let a = color.entries();
    let x = (a[0] + a[1]).mul_int(alg.ell() as i64);
    f.mul(form.eta(), &f.xi_pow(x).expect("color fits the field"))
}

/// The right G-integral `lambda_alpha` applied to an element of `U_alpha`.
pub fn integral(x: &AlgebraElement, form: &IntegralForm) -> Result<Cyclo> {
    let color = color_of(x)?;
    let c = x.coeff(&top_monomial(x.algebra().ell()));
    Ok(x.algebra().field().mul(&c, &integral_value_on_top(x.algebra(), color, form)))
}

/// `G_alpha`, the image of the pivot `s k1^-ell k2^-2` in `U_alpha`.
pub fn g_element(alg: &AlgebraRef, color: Color) -> AlgebraElement {
    let l = alg.ell() as i32;
    AlgebraElement::from_mono(alg, Ctx::Colored(color), Mono::cartan(-l, -2, 1), Cyclo::one())
}

pub fn g_element_inverse(alg: &AlgebraRef, color: Color) -> AlgebraElement {
    let l = alg.ell() as i32;
    AlgebraElement::from_mono(alg, Ctx::Colored(color), Mono::cartan(l, 2, 1), Cyclo::one())
}

/// The G-trace `tr^alpha(x) = lambda_alpha(G_alpha x)`.
pub fn gtrace(x: &AlgebraElement, form: &IntegralForm) -> Result<Cyclo> {
    let color = color_of(x)?;
    integral(&(&g_element(x.algebra(), color) * x), form)
}

/// `Delta_{a,b}` of an element of `U_{a+b}`.
pub fn delta_colored(x: &AlgebraElement, a: Color, b: Color) -> Result<crate::algebra::TensorElement> {
    x.coproduct_split(a, b)
}

/// `S_alpha : U_alpha -> U_{-alpha}`.
pub fn antipode_colored(x: &AlgebraElement) -> Result<AlgebraElement> {
    color_of(x)?;
    Ok(x.antipode())
}

/// Checks `(lambda_a (x) id) Delta_{a,b}(x) = lambda_{a+b}(x) 1_b` on every PBW
/// basis monomial of `U_{a+b}`. Returns the number of monomials checked, or
/// the first failing one.
pub fn check_right_integral(alg: &AlgebraRef, a: Color, b: Color, form: &IntegralForm) -> std::result::Result<usize, Mono> {
    let f = alg.field().clone();
    let top = top_monomial(alg.ell());
    let (ca, cb) = (Ctx::Colored(a), Ctx::Colored(b));
    let lam_a = integral_value_on_top(alg, a, form);
    let lam_ab = integral_value_on_top(alg, a + b, form);
    let basis = alg.quotient_basis();
    let bad = basis.par_iter().find_any(|m| {
        let mut acc: FxHashMap<Mono, Cyclo> = FxHashMap::default();
        for (t, c) in alg.delta_mono(m).iter() {
            let (x, zx) = alg.reduce(&ca, t[0]);
            if x != top {
                continue;
            }
            let (y, zy) = alg.reduce(&cb, t[1]);
            acc.entry(y).or_default().add_assign_ref(&f.mul_zeta(c, zx + zy));
        }
        let want = if **m == top { lam_ab.clone() } else { Cyclo::zero() };
        acc.retain(|_, c| !c.is_zero());
        let got_one = acc.remove(&Mono::ONE).unwrap_or_default();
        let got_one = f.mul(&got_one, &lam_a);
        !(acc.is_empty() && got_one == want)
    });
    match bad {
        Some(m) => Err(*m),
        None => Ok(basis.len()),
    }
}

/// Outcome of solving for all right integrals of `U_0` by linear algebra.
#[derive(Clone, Debug)]
pub struct IntegralOracle {
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub closed_form_is_solution: bool,
}

/// Solves `(lambda (x) id) Delta(x) = lambda(x) 1` for `lambda` on `U_0` with
/// exact sparse elimination, independently of the closed formula.
pub fn integral_oracle(alg: &AlgebraRef) -> IntegralOracle {
    let f = alg.field().clone();
    let c0 = Ctx::zero();
    let basis = alg.quotient_basis();
    let index: FxHashMap<Mono, u32> = basis.iter().enumerate().map(|(i, m)| (*m, i as u32)).collect();
    // one equation per (x, y): sum_z c(z (x) y) lambda(z) - [y = 1] lambda(x) = 0
    let mut rows: Vec<Vec<(u32, Cyclo)>> = basis
        .par_iter()
        .enumerate()
        .flat_map_iter(|(xi, m)| {
            let mut by_y: FxHashMap<Mono, FxHashMap<u32, Cyclo>> = FxHashMap::default();
            for (t, c) in alg.delta_mono(m).iter() {
                let (z, zz) = alg.reduce(&c0, t[0]);
                let (y, zy) = alg.reduce(&c0, t[1]);
                by_y.entry(y).or_default().entry(index[&z]).or_default().add_assign_ref(&f.mul_zeta(c, zz + zy));
            }
            let e = by_y.entry(Mono::ONE).or_default().entry(xi as u32).or_default();
            *e = &*e - &Cyclo::one();
            by_y.into_values()
                .map(|r| {
                    let mut v: Vec<(u32, Cyclo)> = r.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                    v.sort_by_key(|p| p.0);
                    v
                })
                .filter(|v| !v.is_empty())
                .collect::<Vec<_>>()
        })
        .collect();
    let equations = rows.len();
    rows.sort_by_key(|r| r.len());

    // closed form: supported on the top monomial
    let top = index[&top_monomial(alg.ell())];
    let closed_form_is_solution = rows.iter().all(|r| r.iter().all(|(v, _)| *v != top));

    let mut pivots: FxHashMap<u32, Vec<(u32, Cyclo)>> = FxHashMap::default();
    for row in rows {
        let mut r: FxHashMap<u32, Cyclo> = row.into_iter().collect();
        loop {
            let hit = r.keys().find(|v| pivots.contains_key(v)).copied();
            let Some(v) = hit else { break };
            let c = r.remove(&v).expect("present");
            for (w, pc) in &pivots[&v] {
                if *w == v {
                    continue;
                }
                let e = r.entry(*w).or_default();
                *e = &*e - &f.mul(&c, pc);
                if e.is_zero() {
                    r.remove(w);
                }
            }
        }
        if r.is_empty() {
            continue;
        }
        let (&pv, pc) = r.iter().min_by_key(|(v, _)| **v).expect("nonempty");
        let inv = f.inv(pc).expect("nonzero pivot");
        let mut prow: Vec<(u32, Cyclo)> = r.iter().map(|(w, c)| (*w, f.mul(c, &inv))).collect();
        prow.sort_by_key(|p| p.0);
        pivots.insert(pv, prow);
    }
    let rank = pivots.len();
    IntegralOracle { unknowns: basis.len(), equations, rank, kernel_dim: basis.len() - rank, closed_form_is_solution }
}
