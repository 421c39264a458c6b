use proptest::prelude::*;

use super::*;
use crate::algebra::{Algebra, AlgebraElement, Generator};
use crate::ribbon::{r_matrix, rhat_beads, BeadedTensor};
use crate::scalars::Q;

fn alg(d: u32) -> AlgebraRef {
    Algebra::new(3, d).unwrap()
}

fn color(a: i64, b: i64, den: i64) -> Color {
    Color::new(QRational::new(a, den), QRational::new(b, den))
}

fn k_exponent() -> CartanExponent {
    CartanExponent::cartan_k(1, 0, 1, 2).unwrap()
}

#[test]
fn transform_of_the_cartan_factor() {
    let a = alg(1);
    let f = a.field();
    let z = [Color::zero(), Color::zero()];
    let k = fourier_exponent(f, &k_exponent(), &z).unwrap();
    let ninth = Q::new(1, 9);
    let mut count = 0;
    for i1 in 0..3i64 {
        for j1 in 0..3i64 {
            for i2 in 0..3i64 {
                for j2 in 0..3i64 {
                    let want = f.xi_int(j1 * i2 + j2 * i1 - 2 * i1 * i2).scale(&ninth);
                    let e = [i1 as u32, j1 as u32, i2 as u32, j2 as u32];
                    assert_eq!(k.coeff(&e), want, "{e:?}");
                    count += 1;
                }
            }
        }
    }
    assert_eq!(count, 81);
    assert_eq!(k, fourier_exponent_direct(f, &k_exponent(), &z).unwrap());
}

#[test]
fn constant_exponentials() {
    let a = alg(1);
    let f = a.field();
    let z = [Color::zero()];
    let one = fourier_exponent(f, &CartanExponent::zero(1), &z).unwrap();
    assert_eq!(one.terms().len(), 1);
    assert_eq!(one.coeff(&[0, 0]), Cyclo::one());
    // every value of xi^(3 h1^2 + 3 h1 h2) on the integer lattice is 1
    let e = CartanExponent::from_matrix(1, vec![6, 3, 3, 0]).unwrap();
    assert_eq!(fourier_exponent(f, &e, &z).unwrap(), one);
}

#[test]
fn periodicity_examples() {
    let z = Color::zero();
    assert!(is_periodic(&k_exponent(), &[z, z]));
    assert!(!is_periodic(&k_exponent(), &[color(1, 0, 3), z]));
    // linking 3 kills the third-integral colors
    let q = CartanExponent::from_linking(&[vec![0, 3], vec![3, 0]]);
    assert!(is_periodic(&q, &[color(1, 0, 3), color(0, 2, 3)]));
    let q = CartanExponent::from_linking(&[vec![0, 1], vec![1, 0]]);
    assert!(!is_periodic(&q, &[color(1, 0, 3), color(0, 2, 3)]));
    // Hopf link, framings 0: sum_j lk_ij alpha_j = alpha_other
    assert!(is_periodic(&q, &[z, z]));
    let a = alg(3);
    assert!(matches!(fourier_exponent(a.field(), &k_exponent(), &[color(1, 0, 3), z]), Err(Error::NotPeriodic(_))));
}

#[test]
fn direct_and_separable_transforms_agree() {
    let a = alg(3);
    let f = a.field();
    let cases = [
        (k_exponent(), [Color::zero(), Color::zero()]),
        (CartanExponent::from_linking(&[vec![3, 3], vec![3, -3]]), [color(1, 0, 3), color(2, 1, 3)]),
        (CartanExponent::from_matrix(2, vec![2, 1, 0, 3, 1, 0, 3, 0, 0, 3, 4, 3, 3, 0, 3, 0]).unwrap(), [Color::zero(), Color::zero()]),
    ];
    for (e, cols) in cases {
        assert!(is_periodic(&e, &cols), "{e}");
        let d = fourier_exponent_direct(f, &e, &cols).unwrap();
        let s = fourier_exponent_fast(f, &e, &cols).unwrap();
        assert!(d.sub(&s).is_zero(), "{e}");
    }
}

#[test]
fn coproduct_compatibility() {
    let a = alg(3);
    let z = Color::zero();
    // xi^(h1 h2)
    let e = CartanExponent::from_matrix(1, vec![0, 1, 1, 0]).unwrap();
    assert!(fourier_delta_check(&a, &e, z, z).unwrap());
    assert!(fourier_delta_check(&a, &CartanExponent::zero(1), z, z).unwrap());
    // xi^Q(h, h), the restriction of K to the diagonal, split as 1/3 + 2/3
    let e = CartanExponent::cartan_k(1, 0, 0, 1).unwrap();
    assert!(fourier_delta_check(&a, &e, color(1, 0, 3), color(2, 0, 3)).unwrap());
}

#[test]
fn antipode_compatibility() {
    let a = alg(3);
    let e = CartanExponent::cartan_k(1, 0, 0, 1).unwrap();
    assert!(fourier_antipode_check(&a, &e, Color::zero()).unwrap());
    let e = CartanExponent::from_matrix(1, vec![0, 3, 3, 6]).unwrap();
    assert!(fourier_antipode_check(&a, &e, color(1, 2, 3)).unwrap());
}

#[test]
fn transform_is_multiplicative_on_exponentials() {
    let a = alg(3);
    let f = a.field();
    let cols = [color(1, 0, 3), color(2, 0, 3)];
    let e1 = CartanExponent::from_linking(&[vec![3, 0], vec![0, 0]]);
    let e2 = CartanExponent::from_linking(&[vec![0, 3], vec![3, 3]]);
    let lhs = fourier_exponent(f, &(&e1 + &e2), &cols).unwrap().to_tensor(&a);
    let p = fourier_exponent(f, &e1, &cols).unwrap().to_tensor(&a);
    let q = fourier_exponent(f, &e2, &cols).unwrap().to_tensor(&a);
    assert_eq!(lhs, p.mul(&q).unwrap());
}

#[test]
fn transform_is_multiplicative_on_beaded_tensors() {
    let a = alg(1);
    let z = [Color::zero(), Color::zero()];
    let r = r_matrix(&a);
    let d = AlgebraElement::generator(&a, Ctx::Unrolled, Generator::E3).coproduct().unwrap();
    let x = BeadedTensor::from_body(d);
    let y = BeadedTensor::new(rhat_beads(&a), CartanExponent::cartan_k(-1, 1, 1, 2).unwrap()).unwrap();
    for (p, q) in [(&r, &x), (&x, &r), (&r, &y), (&y, &r)] {
        let lhs = fourier_element(&p.mul(q).unwrap(), &z).unwrap();
        let rhs = fourier_element(p, &z).unwrap().mul(&fourier_element(q, &z).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

// (1/ell^2) R_1 sum c xi^(i1 j2 + i2 j1 - 2 i1 i2) e1^i e3^r e2^d k1^i1 k2^j1 s^(r+d) (x) f1^i f3^r f2^d k1^i2 k2^j2
#[test]
fn r_matrix_of_u0_matches_its_expansion() {
    let a = alg(1);
    let f = a.field();
    let c0 = Ctx::Colored(Color::zero());
    let b1 = f.brace(QRational::int(1)).unwrap();
    let mut terms = Vec::new();
    for i in 0..3u8 {
        for r in 0..2u8 {
            for d in 0..2u8 {
                let sign = if r * d == 1 { -1 } else { 1 };
                let c = f.div(&f.mul(&f.pow(&b1, i as u32), &f.pow(&-&b1, (r + d) as u32)), &f.q_factorial(i as u32).unwrap()).unwrap();
                let c = c.scale(&Q::new(sign, 9));
                for (i1, j1, i2, j2) in index_quadruples() {
                    let x = f.mul(&c, &f.xi_int((i1 * j2 + i2 * j1 - 2 * i1 * i2) as i64));
                    let e = Mono { e1: i, e3: r, e2: d, k1: i1, k2: j1, s: (r + d) & 1, ..Mono::ONE };
                    let y = Mono { f1: i, f3: r, f2: d, k1: i2, k2: j2, ..Mono::ONE };
                    terms.push((vec![e, y], x));
                }
            }
        }
    }
    let body = TensorElement::from_terms(&a, vec![c0, c0], terms);
    let expanded = crate::ribbon::r1(&a, [c0, c0]).mul(&body).unwrap();
    assert_eq!(r_matrix_u0(&a), expanded);
}

fn index_quadruples() -> impl Iterator<Item = (i32, i32, i32, i32)> {
    (0..81).map(|x| (x % 3, (x / 3) % 3, (x / 9) % 3, x / 27))
}

fn lattice_case() -> impl Strategy<Value = (CartanExponent, Vec<Color>)> {
    (1usize..=2, prop::collection::vec(-3i64..=3, 10), prop::collection::vec(0i64..3, 4)).prop_filter_map(
        "periodic",
        |(n, raw, cols)| {
            let d = 2 * n;
            let mut m = vec![0i64; d * d];
            let mut it = raw.into_iter();
            for a in 0..d {
                for b in a..d {
                    let x = it.next().unwrap_or(0);
                    m[a * d + b] = if a == b { 2 * x } else { x };
                    m[b * d + a] = m[a * d + b];
                }
            }
            // scale by 3 so third-integral colors give periodic exponentials
            let m: Vec<i64> = m.into_iter().map(|x| 3 * x).collect();
            let e = CartanExponent::from_matrix(n, m).ok()?;
            let colors: Vec<Color> = (0..n).map(|s| color(cols[2 * s], cols[2 * s + 1], 3)).collect();
            is_periodic(&e, &colors).then_some((e, colors))
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn interpolation_on_random_lattice_points(
        (e, colors) in lattice_case(),
        pts in prop::collection::vec(prop::collection::vec(-7i64..=7, 4), 20),
    ) {
        let a = alg(3);
        let f = a.field();
        let k = fourier_exponent(f, &e, &colors).unwrap();
        for p in pts {
            let s = &p[..e.dim()];
            let h = lattice_point(&colors, s);
            prop_assert_eq!(k.evaluate(f, s).unwrap(), f.xi_pow(e.value(&h)).unwrap());
        }
    }
}
