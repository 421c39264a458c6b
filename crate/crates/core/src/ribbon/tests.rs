use super::*;
use crate::algebra::{Algebra, Generator};

fn alg() -> AlgebraRef {
    Algebra::new(3, 1).unwrap()
}

fn beaded(t: TensorElement) -> BeadedTensor {
    BeadedTensor::from_body(t)
}

fn u() -> Vec<Ctx> {
    vec![Ctx::Unrolled; 2]
}

#[test]
fn r_intertwines_coproduct() {
    let a = alg();
    let r = r_matrix(&a);
    for g in Generator::ALL {
        let d = AlgebraElement::generator(&a, Ctx::Unrolled, g).coproduct().unwrap();
        let lhs = r.mul(&beaded(d.clone())).unwrap();
        let rhs = beaded(d.flip().unwrap()).mul(&r).unwrap();
        assert_eq!(lhs, rhs, "{g:?}");
    }
}

// With Delta(e1) = e1 (x) 1 + k1^-1 (x) e1 the terms of R Delta^op(e1) whose
// first leg is Cartan are k1 (x) e1, against k1^-1 (x) e1 in Delta(e1) R.
#[test]
fn reversed_intertwining_fails_in_degree_zero() {
    let a = alg();
    let r = r_matrix(&a);
    let d = AlgebraElement::generator(&a, Ctx::Unrolled, Generator::E1).coproduct().unwrap();
    assert_ne!(r.mul(&beaded(d.flip().unwrap())).unwrap(), beaded(d).mul(&r).unwrap());
}

fn leg(r: &BeadedTensor, pos: [usize; 2]) -> BeadedTensor {
    r.place(3, &pos, Ctx::Unrolled).unwrap()
}

#[test]
fn hexagons() {
    let a = alg();
    let r = r_matrix(&a);
    let (r12, r13, r23) = (leg(&r, [0, 1]), leg(&r, [0, 2]), leg(&r, [1, 2]));
    assert_eq!(r.coproduct_slot(0).unwrap(), r13.mul(&r23).unwrap());
    assert_eq!(r.coproduct_slot(1).unwrap(), r13.mul(&r12).unwrap());
}

#[test]
fn yang_baxter() {
    let a = alg();
    let r = r_matrix(&a);
    let (r12, r13, r23) = (leg(&r, [0, 1]), leg(&r, [0, 2]), leg(&r, [1, 2]));
    let lhs = r12.mul(&r13).unwrap().mul(&r23).unwrap();
    let rhs = r23.mul(&r13).unwrap().mul(&r12).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn antipode_and_counit_of_r() {
    let a = alg();
    let r = r_matrix(&a);
    let ss = r.antipode_slot(0).unwrap().antipode_slot(1).unwrap();
    assert_eq!(ss, r);
    let one = BeadedTensor::unit(&a, vec![Ctx::Unrolled]);
    assert_eq!(r.counit_slot(0).unwrap(), one);
    assert_eq!(r.counit_slot(1).unwrap(), one);
}

#[test]
fn r_times_inverse_is_one() {
    let a = alg();
    let one = BeadedTensor::unit(&a, u());
    assert_eq!(r_matrix(&a).mul(&r_inverse(&a)).unwrap(), one);
    assert_eq!(r_inverse(&a).mul(&r_matrix(&a)).unwrap(), one);
}

#[test]
fn twist_is_a_ribbon_element_in_beaded_form() {
    let a = alg();
    let th = twist_beaded(&a);
    let one = BeadedTensor::unit(&a, vec![Ctx::Unrolled]);
    assert_eq!(th.mul(&twist_inverse_beaded(&a)).unwrap(), one);
    let r = r_matrix(&a);
    let r21 = r.permute(&[1, 0]).unwrap();
    let tt = th.place(2, &[0], Ctx::Unrolled).unwrap().mul(&th.place(2, &[1], Ctx::Unrolled).unwrap()).unwrap();
    assert_eq!(th.coproduct_slot(0).unwrap(), r21.mul(&r).unwrap().mul(&tt).unwrap());
}

mod u0 {
    use super::*;
    use crate::fourier::{fourier_element, r_matrix_u0};
    use crate::gcoalgebra::{integral, twist_integral_closed_formula, twist_integral_unit, Color, IntegralForm};

    fn c0() -> Ctx {
        Ctx::Colored(Color::zero())
    }

    #[test]
    fn r_matrix_intertwines_and_is_antipode_invariant() {
        let a = alg();
        let r = r_matrix_u0(&a);
        for g in Generator::ALL {
            let d = AlgebraElement::generator(&a, c0(), g).coproduct_split(Color::zero(), Color::zero()).unwrap();
            assert_eq!(r.mul(&d).unwrap(), d.flip().unwrap().mul(&r).unwrap(), "{g:?}");
        }
        assert_eq!(r.antipode_slot(0).unwrap().antipode_slot(1).unwrap(), r);
        let one = TensorElement::unit(&a, vec![c0()]);
        assert_eq!(r.counit_slot(0).unwrap(), one);
        assert_eq!(r.counit_slot(1).unwrap(), one);
    }

    #[test]
    fn twist_axioms() {
        let a = alg();
        let th = twist_u0(&a);
        let ti = twist_inverse_u0(&a);
        assert_eq!(&th * &ti, AlgebraElement::one(&a, c0()));
        assert_eq!(th.counit().unwrap(), Cyclo::one());
        assert_eq!(th.antipode(), th);
        for g in Generator::ALL {
            let x = AlgebraElement::generator(&a, c0(), g);
            assert_eq!(&th * &x, &x * &th, "{g:?}");
        }
    }

    #[test]
    fn twist_is_the_transform_of_the_beaded_twist() {
        let a = alg();
        let z = [Color::zero()];
        assert_eq!(fourier_element(&twist_beaded(&a), &z).unwrap().to_element().unwrap(), twist_u0(&a));
        assert_eq!(fourier_element(&twist_inverse_beaded(&a), &z).unwrap().to_element().unwrap(), twist_inverse_u0(&a));
    }

    #[test]
    fn integral_of_the_twist() {
        for ell in [3, 5] {
            let a = Algebra::new(ell, 1).unwrap();
            let f = a.field();
            let form = IntegralForm::unit();
            let l = integral(&twist_u0(&a), &form).unwrap();
            assert_eq!(l, integral(&twist_inverse_u0(&a), &form).unwrap());
            assert_eq!(l, twist_integral_unit(f));
            assert_ne!(l, twist_integral_closed_formula(f));
            let norm = IntegralForm::normalized(f);
            assert_eq!(integral(&twist_u0(&a), &norm).unwrap(), Cyclo::one());
        }
    }
}
