use crate::algebra::{AlgebraRef, Ctx, Mono, TensorElement};
use crate::error::{Error, Result};
use crate::gcoalgebra::Color;
use crate::scalars::Cyclo;

use super::cartan::CartanExponent;

/// `body * xi^cartan(h)`, the Cartan factor kept to the right of the body.
///
/// `h_{i,s}` acts on strand `s` and obeys `h x = x (h + |x|)`, so moving the
/// Cartan factor past a term of weight `v` produces the `k`-monomial `K^(M v)`
/// and the scalar `xi^E(v)` (see [`CartanExponent::conjugate_past`]).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BeadedTensor {
    body: TensorElement,
    cartan: CartanExponent,
}

fn weights(ms: &[Mono]) -> Vec<i64> {
    ms.iter().flat_map(|m| m.weight()).collect()
}

fn add_k(m: Mono, k1: i64, k2: i64) -> Mono {
    Mono { k1: m.k1 + k1 as i32, k2: m.k2 + k2 as i32, ..m }
}

impl BeadedTensor {
    pub fn new(body: TensorElement, cartan: CartanExponent) -> Result<BeadedTensor> {
        if body.arity() != cartan.n() {
            return Err(Error::SlotOutOfRange { slot: cartan.n(), n: body.arity() });
        }
        Ok(BeadedTensor { body, cartan })
    }

    pub fn from_body(body: TensorElement) -> BeadedTensor {
        let n = body.arity();
        BeadedTensor { body, cartan: CartanExponent::zero(n) }
    }

    pub fn unit(alg: &AlgebraRef, ctxs: Vec<Ctx>) -> BeadedTensor {
        BeadedTensor::from_body(TensorElement::unit(alg, ctxs))
    }

    pub fn body(&self) -> &TensorElement {
        &self.body
    }

    pub fn cartan(&self) -> &CartanExponent {
        &self.cartan
    }

    pub fn into_parts(self) -> (TensorElement, CartanExponent) {
        (self.body, self.cartan)
    }

    pub fn arity(&self) -> usize {
        self.body.arity()
    }

    pub fn algebra(&self) -> &AlgebraRef {
        self.body.algebra()
    }

    /// Rebuilds the body term by term: `f` maps a term to a new term (slots,
    /// extra `k`-exponents per variable of the new layout, extra power of `xi`).
    fn map_terms(
        body: &TensorElement,
        ctxs: Vec<Ctx>,
        mut f: impl FnMut(&[Mono]) -> (Vec<Mono>, Vec<i64>, i64),
    ) -> TensorElement {
        let alg = body.algebra();
        let field = alg.field();
        let terms: Vec<(Vec<Mono>, Cyclo)> = body
            .terms()
            .iter()
            .map(|(ms, c)| {
                let (mut out, k, x) = f(ms);
                for (s, m) in out.iter_mut().enumerate() {
                    *m = add_k(*m, k[2 * s], k[2 * s + 1]);
                }
                (out, field.mul_xi(c, x))
            })
            .collect();
        TensorElement::from_terms(alg, ctxs, terms)
    }

    /// Product, moving the left Cartan factor past the right body.
    pub fn mul(&self, o: &BeadedTensor) -> Result<BeadedTensor> {
        if o.arity() != self.arity() {
            return Err(Error::SlotOutOfRange { slot: o.arity(), n: self.arity() });
        }
        let shifted = if self.cartan.is_zero() {
            o.body.clone()
        } else {
            Self::map_terms(&o.body, o.body.ctxs().to_vec(), |ms| {
                let (k, c) = self.cartan.conjugate_past(&weights(ms));
                (ms.to_vec(), k, c)
            })
        };
        Ok(BeadedTensor { body: self.body.mul(&shifted)?, cartan: &self.cartan + &o.cartan })
    }

    fn coproduct_matrix(&self, i: usize) -> Vec<i64> {
        let (d, d2) = (self.cartan.dim(), self.cartan.dim() + 2);
        let mut p = vec![0i64; d * d2];
        for a in 0..d {
            let (g, s) = (a % 2, a / 2);
            if s < i {
                p[a * d2 + a] = 1;
            } else if s == i {
                p[a * d2 + 2 * i + g] = 1;
                p[a * d2 + 2 * (i + 1) + g] = 1;
            } else {
                p[a * d2 + a + 2] = 1;
            }
        }
        p
    }

    /// `Delta` on an unrolled slot; `h_i` becomes `h_i + h_(i+1)`.
    pub fn coproduct_slot(&self, i: usize) -> Result<BeadedTensor> {
        let body = self.body.coproduct_slot(i)?;
        Ok(BeadedTensor { body, cartan: self.cartan.substitute(&self.coproduct_matrix(i), self.arity() + 1) })
    }

    pub fn coproduct_slot_split(&self, i: usize, a: Color, b: Color) -> Result<BeadedTensor> {
        let body = self.body.coproduct_slot_split(i, a, b)?;
        Ok(BeadedTensor { body, cartan: self.cartan.substitute(&self.coproduct_matrix(i), self.arity() + 1) })
    }

    /// Antipode on slot `i`: `S(w xi^E) = S(w) xi^E'` with `h_i -> -h_i + |w|_i`.
    pub fn antipode_slot(&self, i: usize) -> Result<BeadedTensor> {
        let body = self.body.antipode_slot(i)?;
        let n = self.arity();
        let d = 2 * n;
        let mut p = vec![0i64; d * d];
        for a in 0..d {
            p[a * d + a] = if a / 2 == i { -1 } else { 1 };
        }
        let cartan = self.cartan.substitute(&p, n);
        if self.cartan.is_zero() {
            return Ok(BeadedTensor { body, cartan });
        }
        let body = Self::map_terms(&body, body.ctxs().to_vec(), |ms| {
            let u = ms[i].weight();
            let mut nu = vec![0i64; d];
            nu[2 * i] = -u[0];
            nu[2 * i + 1] = -u[1];
            let (k, c) = self.cartan.shift_factor(&p, n, &nu);
            (ms.to_vec(), k, c)
        });
        Ok(BeadedTensor { body, cartan })
    }

    /// Counit on slot `i`; sets `h_i = 0`.
    pub fn counit_slot(&self, i: usize) -> Result<BeadedTensor> {
        Ok(BeadedTensor { body: self.body.counit_slot(i)?, cartan: self.cartan.drop_strand(i) })
    }

    /// Slot `t` of the result is slot `perm[t]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<BeadedTensor> {
        let body = self.body.permute(perm)?;
        let mut pos = vec![0; perm.len()];
        for (t, &s) in perm.iter().enumerate() {
            pos[s] = t;
        }
        Ok(BeadedTensor { body, cartan: self.cartan.place(perm.len(), &pos) })
    }

    /// Embeds into `n` slots, slot `s` going to `pos[s]`; the other slots
    /// carry `1` in context `fill`.
    pub fn place(&self, n: usize, pos: &[usize], fill: Ctx) -> Result<BeadedTensor> {
        let body = self.body.place(n, pos, fill)?;
        Ok(BeadedTensor { body, cartan: self.cartan.place(n, pos) })
    }

    /// `self (x) o`; the two Cartan factors act on disjoint strands.
    pub fn concat(&self, o: &BeadedTensor) -> Result<BeadedTensor> {
        let (n, m) = (self.arity(), o.arity());
        let body = self.body.concat(&o.body)?;
        let left: Vec<usize> = (0..n).collect();
        let right: Vec<usize> = (n..n + m).collect();
        let cartan = &self.cartan.place(n + m, &left) + &o.cartan.place(n + m, &right);
        Ok(BeadedTensor { body, cartan })
    }

    /// Multiplies slot `j` into slot `i` (as `x_i x_j`) and drops slot `j`.
    pub fn multiply_slots(&self, i: usize, j: usize) -> Result<BeadedTensor> {
        let n = self.arity();
        if i >= n || j >= n || i == j {
            return Err(Error::SlotOutOfRange { slot: i.max(j), n });
        }
        let new_index = |s: usize| if s > j { s - 1 } else { s };
        let (d, d2) = (2 * n, 2 * n - 2);
        let mut p = vec![0i64; d * d2];
        for a in 0..d {
            let (g, s) = (a % 2, a / 2);
            let t = if s == j { new_index(i) } else { new_index(s) };
            p[a * d2 + 2 * t + g] = 1;
        }
        let cartan = self.cartan.substitute(&p, n - 1);
        let shifted = if self.cartan.is_zero() {
            self.body.clone()
        } else {
            Self::map_terms(&self.body, self.body.ctxs().to_vec(), |ms| {
                let u = ms[j].weight();
                let mut nu = vec![0i64; d];
                nu[2 * i] = u[0];
                nu[2 * i + 1] = u[1];
                let (k, c) = self.cartan.shift_factor(&p, n - 1, &nu);
                // the multiplier sits at the right end of each new slot, which
                // for the merged slot is the end of the old slot j
                let mut kk = vec![0i64; d];
                for s in 0..n {
                    if s == i {
                        continue;
                    }
                    let t = if s == j { new_index(i) } else { new_index(s) };
                    kk[2 * s] = k[2 * t];
                    kk[2 * s + 1] = k[2 * t + 1];
                }
                (ms.to_vec(), kk, c)
            })
        };
        Ok(BeadedTensor { body: shifted.multiply_slots(i, j)?, cartan })
    }

    /// Projects the body into colored quotients; the Cartan factor is kept.
    pub fn project(&self, colors: &[Color]) -> Result<BeadedTensor> {
        Ok(BeadedTensor { body: self.body.project(colors)?, cartan: self.cartan.clone() })
    }

    pub fn scale(&self, c: &Cyclo) -> BeadedTensor {
        BeadedTensor { body: self.body.scale(c), cartan: self.cartan.clone() }
    }
}
