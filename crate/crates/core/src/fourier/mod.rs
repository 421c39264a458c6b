//! Periodicity of Cartan exponentials on the lattices `alpha + Z^(2n)` and the
//! discrete Fourier transform turning them into `k`-monomial sums of the
//! colored quotients.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{AlgebraRef, Ctx, Mono, TensorElement};
use crate::error::{Error, Result};
use crate::gcoalgebra::Color;
use crate::ribbon::{r_matrix, BeadedTensor, CartanExponent};
use crate::scalars::{Cyclo, Field, QRational};

/// A linear combination of `prod_s k_{1,s}^a k_{2,s}^b` with exponents in
/// `0..ell`, an element of the Cartan part of `U_alpha_1 (x) .. (x) U_alpha_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KMonomialSum {
    colors: Vec<Color>,
    terms: BTreeMap<Vec<u32>, Cyclo>,
}

impl KMonomialSum {
    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Cyclo> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[u32]) -> Cyclo {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn to_tensor(&self, alg: &AlgebraRef) -> TensorElement {
        let ctxs = self.colors.iter().map(|c| Ctx::Colored(*c)).collect();
        let terms = self.terms.iter().map(|(e, c)| {
            let ms = e.chunks(2).map(|p| Mono::cartan(p[0] as i32, p[1] as i32, 0)).collect();
            (ms, c.clone())
        });
        TensorElement::from_terms(alg, ctxs, terms)
    }

    /// Value at the lattice point `h = alpha + s`, where `k_{i,j}` acts as `xi^h_{i,j}`.
    pub fn evaluate(&self, field: &Field, s: &[i64]) -> Result<Cyclo> {
        let h = lattice_point(&self.colors, s);
        let mut acc = Cyclo::zero();
        for (e, c) in &self.terms {
            let x = e.iter().zip(&h).fold(QRational::zero(), |a, (i, hv)| a + hv.mul_int(*i as i64));
            acc.add_assign_ref(&field.mul(c, &field.xi_pow(x)?));
        }
        Ok(acc)
    }

    pub fn sub(&self, o: &KMonomialSum) -> KMonomialSum {
        let mut terms = self.terms.clone();
        for (e, c) in &o.terms {
            let x = terms.entry(e.clone()).or_default();
            *x = &*x - c;
            if x.is_zero() {
                terms.remove(e);
            }
        }
        KMonomialSum { colors: self.colors.clone(), terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

fn lattice_point(colors: &[Color], s: &[i64]) -> Vec<QRational> {
    (0..2 * colors.len()).map(|a| colors[a / 2].entries()[a % 2] + QRational::int(s[a])).collect()
}

fn alpha_vec(colors: &[Color]) -> Vec<QRational> {
    lattice_point(colors, &vec![0; 2 * colors.len()])
}

/// Whether `xi^E` restricted to `alpha + Z^(2n)` is `ell`-periodic in every
/// variable. The shift `h_a -> h_a + ell` multiplies it by `xi^(ell (M alpha)_a)`
/// (the remaining terms are multiples of `ell`), so this asks for `M alpha` integral.
pub fn is_periodic(e: &CartanExponent, colors: &[Color]) -> bool {
    if e.n() != colors.len() {
        return false;
    }
    let alpha = alpha_vec(colors);
    (0..e.dim()).all(|a| {
        (0..e.dim()).fold(QRational::zero(), |s, b| s + alpha[b].mul_int(e.doubled(a, b))).is_integer()
    })
}

fn check(e: &CartanExponent, colors: &[Color], field: &Field) -> Result<()> {
    if e.n() != colors.len() {
        return Err(Error::SlotOutOfRange { slot: colors.len(), n: e.n() });
    }
    for c in colors {
        c.check_field(field.spec())?;
    }
    if !is_periodic(e, colors) {
        return Err(Error::NotPeriodic(format!("exponent {e} on lattice {colors:?}")));
    }
    Ok(())
}

fn grid(dim: usize, ell: u32) -> impl Iterator<Item = Vec<i64>> {
    let total = (ell as usize).pow(dim as u32);
    (0..total).map(move |mut x| {
        let mut v = vec![0i64; dim];
        for a in v.iter_mut() {
            *a = (x % ell as usize) as i64;
            x /= ell as usize;
        }
        v
    })
}

/// `zeta_N` exponent of `xi^x`.
fn zexp(field: &Field, x: QRational) -> i64 {
    field.xi_exponent(x).expect("exponent fits the field")
}

fn from_histogram(field: &Field, h: &[i64]) -> Cyclo {
    let mut c = Cyclo::zero();
    for (e, k) in h.iter().enumerate() {
        if *k != 0 {
            c.add_assign_ref(&field.zeta_pow(e as i64).scale(&crate::scalars::Q::int(*k)));
        }
    }
    c
}

/// Fourier coefficients by direct summation:
/// `a_i = ell^(-2n) sum_s xi^(-i.(alpha+s)) xi^E(alpha+s)` over `s` in `[0, ell)^(2n)`.
pub fn fourier_exponent_direct(field: &Field, e: &CartanExponent, colors: &[Color]) -> Result<KMonomialSum> {
    check(e, colors, field)?;
    let (dim, ell, nz) = (e.dim(), field.ell(), field.n() as i64);
    let values: Vec<(Vec<QRational>, i64)> =
        grid(dim, ell).map(|s| lattice_point(colors, &s)).map(|h| (h.clone(), zexp(field, e.value(&h)))).collect();
    let norm = crate::scalars::Q::new(1, (ell as i64).pow(dim as u32));
    let idx: Vec<Vec<i64>> = grid(dim, ell).collect();
    let terms: BTreeMap<Vec<u32>, Cyclo> = idx
        .par_iter()
        .map(|i| {
            let mut hist = vec![0i64; nz as usize];
            for (h, z) in &values {
                let lin = i.iter().zip(h).fold(QRational::zero(), |a, (k, x)| a + x.mul_int(*k));
                hist[(z - zexp(field, lin)).rem_euclid(nz) as usize] += 1;
            }
            (i.iter().map(|x| *x as u32).collect::<Vec<u32>>(), from_histogram(field, &hist).scale(&norm))
        })
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Ok(KMonomialSum { colors: colors.to_vec(), terms })
}

/// The same coefficients by a separable transform: one length-`ell` DFT along
/// each of the `2n` axes of the grid of values.
pub fn fourier_exponent_fast(field: &Field, e: &CartanExponent, colors: &[Color]) -> Result<KMonomialSum> {
    check(e, colors, field)?;
    let (dim, ell) = (e.dim(), field.ell() as usize);
    let alpha = alpha_vec(colors);
    let mut vals: Vec<Cyclo> = grid(dim, ell as u32)
        .map(|s| field.zeta_pow(zexp(field, e.value(&lattice_point(colors, &s)))))
        .collect();
    let mut stride = 1;
    for a in 0..dim {
        // twiddle[i][s] = xi^(-i (alpha_a + s))
        let tw: Vec<Vec<i64>> = (0..ell)
            .map(|i| (0..ell).map(|s| zexp(field, -(alpha[a] + QRational::int(s as i64)).mul_int(i as i64))).collect())
            .collect();
        let mut next = vec![Cyclo::zero(); vals.len()];
        next.par_iter_mut().enumerate().for_each(|(x, out)| {
            let i = (x / stride) % ell;
            let base = x - i * stride;
            let mut acc = Cyclo::zero();
            for s in 0..ell {
                acc.add_assign_ref(&field.mul_zeta(&vals[base + s * stride], tw[i][s]));
            }
            *out = acc;
        });
        vals = next;
        stride *= ell;
    }
    let norm = crate::scalars::Q::new(1, (ell as i64).pow(dim as u32));
    let terms = grid(dim, ell as u32)
        .zip(vals)
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i.iter().map(|x| *x as u32).collect(), c.scale(&norm)))
        .collect();
    Ok(KMonomialSum { colors: colors.to_vec(), terms })
}

/// The unique `k`-monomial sum agreeing with `xi^E` on `alpha + Z^(2n)`.
pub fn fourier_exponent(field: &Field, e: &CartanExponent, colors: &[Color]) -> Result<KMonomialSum> {
    if e.n() <= 1 {
        fourier_exponent_direct(field, e, colors)
    } else {
        fourier_exponent_fast(field, e, colors)
    }
}

/// `F_alpha(body xi^E) = p_alpha(body) F_alpha(xi^E)`.
pub fn fourier_element(x: &BeadedTensor, colors: &[Color]) -> Result<TensorElement> {
    let alg = x.algebra();
    let body = if x.body().ctxs().iter().all(|c| *c == Ctx::Unrolled) {
        x.body().project(colors)?
    } else {
        let want: Vec<Ctx> = colors.iter().map(|c| Ctx::Colored(*c)).collect();
        if x.body().ctxs() != want.as_slice() {
            return Err(Error::ContextMismatch("body colors differ from the lattice".into()));
        }
        x.body().clone()
    };
    if x.cartan().is_zero() {
        return Ok(body);
    }
    let k = fourier_exponent(alg.field(), x.cartan(), colors)?.to_tensor(alg);
    body.mul(&k)
}

/// The R-matrix of `U_0`: `R_1 R-hat F_0(K)`.
pub fn r_matrix_u0(alg: &AlgebraRef) -> TensorElement {
    fourier_element(&r_matrix(alg), &[Color::zero(), Color::zero()]).expect("K is periodic on the zero lattice")
}

/// Compares `Delta_{b,c} F_(b+c)(xi^E)` with `F_(b,c)(xi^E(h' + h''))` for a
/// one-strand exponent.
pub fn fourier_delta_check(alg: &AlgebraRef, e: &CartanExponent, b: Color, c: Color) -> Result<bool> {
    if e.n() != 1 {
        return Err(Error::SlotOutOfRange { slot: e.n(), n: 1 });
    }
    let f = alg.field();
    let lhs = fourier_exponent(f, e, &[b + c])?.to_tensor(alg).coproduct_slot_split(0, b, c)?;
    let de = e.substitute(&[1, 0, 1, 0, 0, 1, 0, 1], 2);
    let rhs = fourier_exponent(f, &de, &[b, c])?.to_tensor(alg);
    Ok(lhs == rhs)
}

/// Compares `S_a F_a(xi^E)` with `F_(-a)(xi^E(-h))` for a one-strand exponent.
pub fn fourier_antipode_check(alg: &AlgebraRef, e: &CartanExponent, a: Color) -> Result<bool> {
    let f = alg.field();
    let lhs = fourier_exponent(f, e, &[a])?.to_tensor(alg).antipode_slot(0)?;
    let se = e.substitute(&[-1, 0, 0, -1], 1);
    let rhs = fourier_exponent(f, &se, &[-a])?.to_tensor(alg);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests;
