//! Ribbon data: the R-matrix as beads times a Cartan exponential, its inverse,
//! the pivot and the twist of `U_0`.

mod beaded;
mod cartan;

pub use beaded::BeadedTensor;
pub use cartan::{var, CartanExponent, B};

use crate::algebra::{AlgebraElement, AlgebraRef, Ctx, Mono, TensorElement};
use crate::fourier::r_matrix_u0;
use crate::gcoalgebra::{g_element, g_element_inverse, Color};
use crate::scalars::Cyclo;

/// `R_1 = (1 (x) 1 + s (x) 1 + 1 (x) s - s (x) s) / 2`.
pub fn r1(alg: &AlgebraRef, ctxs: [Ctx; 2]) -> TensorElement {
    let s = Mono::cartan(0, 0, 1);
    let h = Cyclo::rational(1, 2);
    TensorElement::from_terms(
        alg,
        ctxs.to_vec(),
        [
            (vec![Mono::ONE, Mono::ONE], h.clone()),
            (vec![s, Mono::ONE], h.clone()),
            (vec![Mono::ONE, s], h.clone()),
            (vec![s, s], -&h),
        ],
    )
}

/// Bead part of the R-matrix: `R_1 sum c_(i,r,d) e1^i e3^r e2^d s^(r+d) (x) f1^i f3^r f2^d`
/// with `c = (-1)^(r d) {1}^i (-{1})^(r+d) / (i)!`.
pub fn rhat_beads(alg: &AlgebraRef) -> TensorElement {
    let f = alg.field();
    let ell = alg.ell();
    let b1 = f.brace(crate::scalars::QRational::int(1)).expect("integer exponent");
    let mut terms = Vec::new();
    for i in 0..ell as u8 {
        let ci = f.div(&f.pow(&b1, i as u32), &f.q_factorial(i as u32).expect("i < ell")).expect("nonzero");
        for r in 0..2u8 {
            for d in 0..2u8 {
                // (e3 (x) f3)(e2 (x) f2) = -e3 e2 (x) f3 f2 in the super tensor product
                let sign = if r * d == 1 { Cyclo::int(-1) } else { Cyclo::one() };
                let mut c = f.mul(&f.mul(&ci, &f.pow(&-&b1, (r + d) as u32)), &sign);
                if c.is_zero() {
                    continue;
                }
                let e = Mono { e1: i, e3: r, e2: d, s: (r + d) & 1, ..Mono::ONE };
                let y = Mono { f1: i, f3: r, f2: d, ..Mono::ONE };
                terms.push((vec![e, y], std::mem::take(&mut c)));
            }
        }
    }
    let beads = TensorElement::from_terms(alg, vec![Ctx::Unrolled; 2], terms);
    r1(alg, [Ctx::Unrolled; 2]).mul(&beads).expect("same contexts")
}

/// `R = R-hat xi^Q_12` in beaded form.
pub fn r_matrix(alg: &AlgebraRef) -> BeadedTensor {
    BeadedTensor::new(rhat_beads(alg), CartanExponent::cartan_k(1, 0, 1, 2).expect("two strands")).expect("arity")
}

/// `R^-1 = (S (x) id)(R)`, again in beaded form (Cartan factor `xi^-Q_12` on the right).
pub fn r_inverse(alg: &AlgebraRef) -> BeadedTensor {
    r_matrix(alg).antipode_slot(0).expect("slot 0 exists")
}

/// Bead part of `R^-1` when its Cartan factor is written on the right.
pub fn rhat_inverse_beads(alg: &AlgebraRef) -> TensorElement {
    r_inverse(alg).into_parts().0
}

/// The pivot `s k1^-ell k2^-2` of the unrolled algebra.
pub fn pivot(alg: &AlgebraRef) -> AlgebraElement {
    let l = alg.ell() as i32;
    AlgebraElement::from_mono(alg, Ctx::Unrolled, Mono::cartan(-l, -2, 1), Cyclo::one())
}

pub fn pivot_inverse(alg: &AlgebraRef) -> AlgebraElement {
    let l = alg.ell() as i32;
    AlgebraElement::from_mono(alg, Ctx::Unrolled, Mono::cartan(l, 2, 1), Cyclo::one())
}

/// The pivot in `U_alpha`, `G_alpha`.
pub fn pivot_colored(alg: &AlgebraRef, color: Color) -> AlgebraElement {
    g_element(alg, color)
}

/// The super flip `x (x) y -> (-1)^(|x| |y|) y (x) x` of a 2-tensor.
pub fn super_flip(t: &TensorElement) -> TensorElement {
    let terms = t.terms().iter().map(|(ms, c)| {
        let c = if ms[0].parity() * ms[1].parity() == 1 { -c } else { c.clone() };
        (vec![ms[1], ms[0]], c)
    });
    TensorElement::from_terms(t.algebra(), vec![t.ctxs()[1], t.ctxs()[0]], terms)
}

fn mult(t: &TensorElement) -> AlgebraElement {
    t.multiply_slots(0, 1).and_then(|x| x.to_element()).expect("2-tensor in one context")
}

/// `theta^-1 = m tau^s (id (x) S)(R_0) (s k2^2)` in `U_0`.
pub fn twist_inverse_u0(alg: &AlgebraRef) -> AlgebraElement {
    let r = r_matrix_u0(alg);
    let u = mult(&r.antipode_slot(1).and_then(|t| t.flip()).expect("slot"));
    &u * &g_element_inverse(alg, Color::zero())
}

/// `theta = (s k2^-2) m tau^s (S^2 (x) id)(R_0)` in `U_0`.
pub fn twist_u0(alg: &AlgebraRef) -> AlgebraElement {
    let r = r_matrix_u0(alg);
    let r = r.antipode_slot(0).and_then(|t| t.antipode_slot(0)).expect("slot");
    &g_element(alg, Color::zero()) * &mult(&r.flip().expect("2-tensor"))
}

fn single(x: &AlgebraElement) -> BeadedTensor {
    BeadedTensor::from_body(TensorElement::tensor(&[x]))
}

/// `theta^-1 = m tau (id (x) S)(R) (s k1^ell k2^2)` in the unrolled algebra,
/// a body times `xi^(Q(h, h))`.
pub fn twist_inverse_beaded(alg: &AlgebraRef) -> BeadedTensor {
    let u = r_matrix(alg).antipode_slot(1).and_then(|t| t.permute(&[1, 0])).and_then(|t| t.multiply_slots(0, 1));
    u.and_then(|u| u.mul(&single(&pivot_inverse(alg)))).expect("two slots")
}

/// `theta = (s k1^-ell k2^-2) m tau (S^2 (x) id)(R)` in the unrolled algebra.
pub fn twist_beaded(alg: &AlgebraRef) -> BeadedTensor {
    let r = r_matrix(alg).antipode_slot(0).and_then(|t| t.antipode_slot(0));
    let u = r.and_then(|t| t.permute(&[1, 0])).and_then(|t| t.multiply_slots(0, 1)).expect("two slots");
    single(&pivot(alg)).mul(&u).expect("one slot")
}

#[cfg(test)]
mod tests;
