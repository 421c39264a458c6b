//! PBW normal-form arithmetic in the bosonized algebra `U^sigma` and its
//! colored quotients `U_alpha`, with coproduct, antipode and counit.

mod element;
mod engine;
mod mono;
pub(crate) mod rewrite;
mod tensor;

use std::fmt;

pub use element::AlgebraElement;
pub use engine::{Algebra, AlgebraRef};
pub use mono::{Generator, Mono};
pub use tensor::TensorElement;

use crate::gcoalgebra::Color;

/// Where an element lives: the unrolled algebra with unbounded `k`-exponents,
/// or a quotient `U_alpha` with `k_i^ell = xi^(ell alpha_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ctx {
    Unrolled,
    Colored(Color),
}

impl Ctx {
    pub fn zero() -> Ctx {
        Ctx::Colored(Color::zero())
    }

    pub fn color(&self) -> Option<Color> {
        match self {
            Ctx::Unrolled => None,
            Ctx::Colored(c) => Some(*c),
        }
    }
}

impl fmt::Display for Ctx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ctx::Unrolled => write!(f, "U^s"),
            Ctx::Colored(c) => write!(f, "U_{c}"),
        }
    }
}

impl Algebra {
    /// The PBW basis of a quotient `U_alpha`, in monomial order.
    pub fn quotient_basis(&self) -> Vec<Mono> {
        let l = self.ell() as u8;
        let mut v = Vec::with_capacity(self.quotient_dim());
        for f1 in 0..l {
            for f3 in 0..2 {
                for f2 in 0..2 {
                    for e1 in 0..l {
                        for e3 in 0..2 {
                            for e2 in 0..2 {
                                for k1 in 0..l as i32 {
                                    for k2 in 0..l as i32 {
                                        for s in 0..2 {
                                            v.push(Mono { f1, f3, f2, e1, e3, e2, k1, k2, s });
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Cyclo;
    use proptest::prelude::*;
    use rewrite::Rewriter;
    use Generator::*;

    fn alg() -> AlgebraRef {
        Algebra::new(3, 1).unwrap()
    }

    fn g(a: &AlgebraRef, ctx: Ctx, x: Generator) -> AlgebraElement {
        AlgebraElement::generator(a, ctx, x)
    }

    fn xi(a: &AlgebraRef, k: i64) -> Cyclo {
        a.field().xi_int(k)
    }

    fn mono_el(a: &AlgebraRef, ctx: Ctx, m: Mono) -> AlgebraElement {
        AlgebraElement::from_mono(a, ctx, m, Cyclo::one())
    }

    #[test]
    fn basis_has_32_ell_to_the_fourth_elements() {
        for ell in [3, 5] {
            let a = Algebra::new(ell, 1).unwrap();
            let b = a.quotient_basis();
            assert_eq!(b.len(), 32 * (ell as usize).pow(4));
            let set: std::collections::BTreeSet<_> = b.iter().collect();
            assert_eq!(set.len(), b.len());
        }
    }

    #[test]
    fn generators_are_single_monomials() {
        let a = alg();
        let e3 = g(&a, Ctx::Unrolled, E3);
        assert_eq!(e3.terms().keys().copied().collect::<Vec<_>>(), vec![Mono { e3: 1, ..Mono::ONE }]);
        let k = g(&a, Ctx::zero(), K1Inv);
        assert_eq!(k.terms().keys().copied().collect::<Vec<_>>(), vec![Mono { k1: 2, ..Mono::ONE }]);
    }

    #[test]
    fn defining_relations() {
        let a = alg();
        let u = Ctx::Unrolled;
        let (e1, e2, e3) = (g(&a, u, E1), g(&a, u, E2), g(&a, u, E3));
        let (f1, f2, f3) = (g(&a, u, F1), g(&a, u, F2), g(&a, u, F3));
        let (k1, k1i, k2, k2i, s) = (g(&a, u, K1), g(&a, u, K1Inv), g(&a, u, K2), g(&a, u, K2Inv), g(&a, u, Sigma));
        let inv_b = a.field().inv(&(&xi(&a, 1) - &xi(&a, -1))).unwrap();
        let br = |x: &AlgebraElement, y: &AlgebraElement| (x - y).scale(&inv_b);
        // e1 f1 = f1 e1 + [k1]
        assert_eq!(&e1 * &f1, &(&f1 * &e1) + &br(&k1, &k1i));
        // e2 f2 + f2 e2 = [k2]
        assert_eq!(&(&e2 * &f2) + &(&f2 * &e2), br(&k2, &k2i));
        assert_eq!(&e1 * &f2, &f2 * &e1);
        assert_eq!(&e2 * &f1, &f1 * &e2);
        assert!((&e2 * &e2).is_zero());
        assert!((&f2 * &f2).is_zero());
        assert!((&e3 * &e3).is_zero());
        assert!((&f3 * &f3).is_zero());
        assert!(e1.pow(3).is_zero());
        assert!(f1.pow(3).is_zero());
        // k1 e1 = xi^2 e1 k1, k2 f1 = xi f1 k2
        assert_eq!(&k1 * &e1, (&e1 * &k1).scale(&xi(&a, 2)));
        assert_eq!(&k2 * &f1, (&f1 * &k2).scale(&xi(&a, 1)));
        assert_eq!(&k1 * &k1i, AlgebraElement::one(&a, u));
        // sigma f3 = -f3 sigma, sigma e1 = e1 sigma
        assert_eq!(&s * &f3, -&(&f3 * &s));
        assert_eq!(&s * &e1, &e1 * &s);
        // the composite odd generators
        assert_eq!(e3, &(&e1 * &e2) - &(&e2 * &e1).scale(&xi(&a, -1)));
        assert_eq!(f3, &(&f2 * &f1) - &(&f1 * &f2).scale(&xi(&a, 1)));
        // Serre relations
        let q2 = &xi(&a, 1) + &xi(&a, -1);
        let serre_e = &(&(&e1 * &e1) * &e2) - &(&(&(&e1 * &e2) * &e1).scale(&q2));
        assert!((&serre_e + &(&(&e2 * &e1) * &e1)).is_zero());
        let serre_f = &(&(&f1 * &f1) * &f2) - &(&(&(&f1 * &f2) * &f1).scale(&q2));
        assert!((&serre_f + &(&(&f2 * &f1) * &f1)).is_zero());
    }

    #[test]
    fn spec_multiplication_examples() {
        let a = alg();
        let u = Ctx::Unrolled;
        let e1f1 = &g(&a, u, E1) * &g(&a, u, F1);
        assert_eq!(e1f1.len(), 3);
        assert_eq!(e1f1.coeff(&Mono { f1: 1, e1: 1, ..Mono::ONE }), Cyclo::one());
        let sf3 = &g(&a, u, Sigma) * &g(&a, u, F3);
        assert_eq!(sf3.coeff(&Mono { f3: 1, s: 1, ..Mono::ONE }), Cyclo::int(-1));
    }

    #[test]
    fn odd_generators_commute_past_top_f1_power() {
        // f2 f3 f1^(l-1) = f1^(l-1) f2 f3
        let a = alg();
        let u = Ctx::Unrolled;
        let f1t = g(&a, u, F1).pow(2);
        let f2f3 = &g(&a, u, F2) * &g(&a, u, F3);
        assert_eq!(&f2f3 * &f1t, &f1t * &f2f3);
    }

    #[test]
    fn quotient_projection() {
        let a = alg();
        let k13 = mono_el(&a, Ctx::Unrolled, Mono::cartan(3, 0, 0));
        assert_eq!(k13.project(Color::zero()).unwrap(), AlgebraElement::one(&a, Ctx::zero()));
        let b = Algebra::new(3, 3).unwrap();
        let k13 = mono_el(&b, Ctx::Unrolled, Mono::cartan(3, 0, 0));
        let col: Color = "1/3 0".parse().unwrap();
        let p = k13.project(col).unwrap();
        assert_eq!(p, AlgebraElement::scalar(&b, Ctx::Colored(col), b.field().xi_int(1)));
        assert_eq!(p.project(col).unwrap_err().to_string().contains("unrolled"), true);
        assert!(k13.project("1/2 0".parse().unwrap()).is_err());
    }

    #[test]
    fn coproduct_examples() {
        let a = alg();
        let u = Ctx::Unrolled;
        let d = g(&a, u, K1).coproduct().unwrap();
        assert_eq!(d, TensorElement::tensor(&[&g(&a, u, K1), &g(&a, u, K1)]));
        let d = g(&a, u, E2).coproduct().unwrap();
        let want = TensorElement::tensor(&[&g(&a, u, E2), &AlgebraElement::one(&a, u)])
            .add(&TensorElement::tensor(&[&mono_el(&a, u, Mono::cartan(0, -1, 1)), &g(&a, u, E2)]))
            .unwrap();
        assert_eq!(d, want);
        // e3: the cross term carries no sigma
        let d = g(&a, u, E3).coproduct().unwrap();
        let b = &xi(&a, 1) - &xi(&a, -1);
        let want = TensorElement::from_terms(
            &a,
            vec![u, u],
            [
                (vec![Mono { e3: 1, ..Mono::ONE }, Mono::ONE], Cyclo::one()),
                (vec![Mono::cartan(-1, -1, 1), Mono { e3: 1, ..Mono::ONE }], Cyclo::one()),
                (vec![Mono { e2: 1, k1: -1, ..Mono::ONE }, Mono { e1: 1, ..Mono::ONE }], b),
            ],
        );
        assert_eq!(d, want);
        let kk = TensorElement::tensor(&[&g(&a, u, K1), &g(&a, u, K2)]);
        let want = TensorElement::tensor(&[&g(&a, u, K1), &g(&a, u, K1), &g(&a, u, K2)]);
        assert_eq!(kk.coproduct_slot(0).unwrap(), want);
        assert!(kk.coproduct_slot(2).is_err());
    }

    #[test]
    fn antipode_examples() {
        let a = alg();
        let u = Ctx::Unrolled;
        assert_eq!(g(&a, u, K1).antipode(), g(&a, u, K1Inv));
        assert_eq!(g(&a, u, E1).antipode(), -&(&g(&a, u, K1) * &g(&a, u, E1)));
        // S(f3) = s (-xi^-2 f3 + (xi^-2 - 1) f2 f1) k1^-1 k2^-1
        let (f1, f2, f3, s) = (g(&a, u, F1), g(&a, u, F2), g(&a, u, F3), g(&a, u, Sigma));
        let kk = mono_el(&a, u, Mono::cartan(-1, -1, 0));
        let inner = &f3.scale(&-&xi(&a, -2)) + &(&f2 * &f1).scale(&(&xi(&a, -2) - &Cyclo::one()));
        assert_eq!(f3.antipode(), &(&s * &inner) * &kk);
    }

    #[test]
    fn counit_examples() {
        let a = alg();
        let u = Ctx::Unrolled;
        assert!(mono_el(&a, u, Mono::cartan(1, 1, 1)).counit().unwrap().is_one());
        assert!((&g(&a, u, E1) * &g(&a, u, F2)).counit().unwrap().is_zero());
        let x = &AlgebraElement::one(&a, u) + &(&g(&a, u, E2) * &g(&a, u, F2));
        assert!(x.counit().unwrap().is_one());
        let col: Color = "1/3 0".parse().unwrap();
        let b = Algebra::new(3, 3).unwrap();
        assert!(AlgebraElement::one(&b, Ctx::Colored(col)).counit().is_err());
    }

    #[test]
    fn hopf_axioms_on_generators() {
        let a = alg();
        for ctx in [Ctx::Unrolled, Ctx::zero()] {
            let gens: Vec<AlgebraElement> = Generator::ALL.iter().map(|x| g(&a, ctx, *x)).collect();
            for x in &gens {
                let dx = coproduct_any(x);
                // (S (x) id) then multiply, and (id (x) S) then multiply
                let l = dx.antipode_slot(0).unwrap().with_ctxs(vec![ctx, ctx]).multiply_slots(0, 1).unwrap().to_element().unwrap();
                let r = dx.antipode_slot(1).unwrap().with_ctxs(vec![ctx, ctx]).multiply_slots(0, 1).unwrap().to_element().unwrap();
                let eps = AlgebraElement::scalar(&a, ctx, x.counit().unwrap());
                assert_eq!(l, eps, "left antipode axiom on {x}");
                assert_eq!(r, eps, "right antipode axiom on {x}");
                // counit axioms
                assert_eq!(dx.counit_slot(0).unwrap().to_element().unwrap(), *x);
                assert_eq!(dx.counit_slot(1).unwrap().to_element().unwrap(), *x);
                // coassociativity
                assert_eq!(dx.coproduct_slot_any(0), dx.coproduct_slot_any(1));
                for y in &gens {
                    let lhs = coproduct_any(&(x * y));
                    let rhs = dx.mul(&coproduct_any(y)).unwrap();
                    assert_eq!(lhs, rhs, "coproduct of {x} * {y}");
                }
            }
        }
    }

    #[test]
    fn antipode_squared_is_pivot_conjugation() {
        let a = alg();
        let ell = a.ell() as i32;
        for ctx in [Ctx::Unrolled, Ctx::zero()] {
            let piv = mono_el(&a, ctx, Mono::cartan(-ell, -2, 1));
            let piv_inv = mono_el(&a, ctx, Mono::cartan(ell, 2, 1));
            for x in Generator::ALL {
                let x = g(&a, ctx, x);
                assert_eq!(x.antipode().antipode(), &(&piv * &x) * &piv_inv);
            }
        }
    }

    fn coproduct_any(x: &AlgebraElement) -> TensorElement {
        match x.ctx() {
            Ctx::Unrolled => x.coproduct().unwrap(),
            Ctx::Colored(c) => x.coproduct_split(*c, Color::zero()).unwrap(),
        }
    }

    impl TensorElement {
        fn coproduct_slot_any(&self, i: usize) -> TensorElement {
            match self.ctxs()[i] {
                Ctx::Unrolled => self.coproduct_slot(i).unwrap(),
                Ctx::Colored(c) => self.coproduct_slot_split(i, c, Color::zero()).unwrap(),
            }
        }

        fn with_ctxs(&self, ctxs: Vec<Ctx>) -> TensorElement {
            TensorElement::from_terms(self.algebra(), ctxs, self.terms().clone())
        }
    }

    fn arb_mono(ell: u8) -> impl Strategy<Value = Mono> {
        (0..ell, 0..2u8, 0..2u8, 0..ell, 0..2u8, 0..2u8, 0..ell as i32, 0..ell as i32, 0..2u8).prop_map(
            |(f1, f3, f2, e1, e3, e2, k1, k2, s)| Mono { f1, f3, f2, e1, e3, e2, k1, k2, s },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn associativity_in_u0(x in arb_mono(3), y in arb_mono(3), z in arb_mono(3)) {
            let a = alg();
            let c = Ctx::zero();
            let (x, y, z) = (mono_el(&a, c, x), mono_el(&a, c, y), mono_el(&a, c, z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        }

        #[test]
        fn tables_agree_with_letter_rewriting(x in arb_mono(3), y in arb_mono(3)) {
            let a = alg();
            let rw = Rewriter::new(a.field());
            let fast = &mono_el(&a, Ctx::Unrolled, x) * &mono_el(&a, Ctx::Unrolled, y);
            let slow = AlgebraElement::from_terms(&a, Ctx::Unrolled, rw.mul(x, y));
            prop_assert_eq!(fast, slow);
        }

        #[test]
        fn weights_add(x in arb_mono(3), y in arb_mono(3)) {
            let a = alg();
            let p = &mono_el(&a, Ctx::Unrolled, x) * &mono_el(&a, Ctx::Unrolled, y);
            let w = [x.weight()[0] + y.weight()[0], x.weight()[1] + y.weight()[1]];
            for m in p.terms().keys() {
                prop_assert_eq!(m.weight(), w);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn hopf_axioms_on_random_elements(ms in proptest::collection::vec((arb_mono(3), -3i64..4), 1..4)) {
            let a = alg();
            let c = Ctx::zero();
            let x = AlgebraElement::from_terms(&a, c, ms.iter().map(|(m, k)| (*m, Cyclo::int(*k))));
            let dx = x.coproduct_split(Color::zero(), Color::zero()).unwrap();
            let l = dx.antipode_slot(0).unwrap().multiply_slots(0, 1).unwrap().to_element().unwrap();
            let r = dx.antipode_slot(1).unwrap().multiply_slots(0, 1).unwrap().to_element().unwrap();
            let eps = AlgebraElement::scalar(&a, c, x.counit().unwrap());
            prop_assert_eq!(&l, &eps);
            prop_assert_eq!(&r, &eps);
            prop_assert_eq!(dx.counit_slot(0).unwrap().to_element().unwrap(), x.clone());
        }

        #[test]
        fn coproduct_is_multiplicative_on_monomials(x in arb_mono(3), y in arb_mono(3)) {
            let a = alg();
            let c = Ctx::zero();
            let (x, y) = (mono_el(&a, c, x), mono_el(&a, c, y));
            let z = Color::zero();
            let lhs = (&x * &y).coproduct_split(z, z).unwrap();
            let rhs = x.coproduct_split(z, z).unwrap().mul(&y.coproduct_split(z, z).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn antipode_is_antimultiplicative(x in arb_mono(3), y in arb_mono(3)) {
            let a = alg();
            let (x, y) = (mono_el(&a, Ctx::Unrolled, x), mono_el(&a, Ctx::Unrolled, y));
            prop_assert_eq!((&x * &y).antipode(), &y.antipode() * &x.antipode());
        }
    }
}
