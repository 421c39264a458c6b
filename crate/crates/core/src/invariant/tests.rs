use proptest::prelude::*;

use super::*;
use crate::algebra::Algebra;
use crate::scalars::QRational;
use crate::tangles::parse_sliced;

fn alg(d: u32) -> AlgebraRef {
    Algebra::new(3, d).unwrap()
}

fn link(text: &str) -> LinkDiagram {
    LinkDiagram::new(parse_sliced(text).unwrap()).unwrap()
}

fn color(a: i64, b: i64, den: i64) -> Color {
    Color::new(QRational::new(a, den), QRational::new(b, den))
}

fn value(a: &AlgebraRef, l: &LinkDiagram, colors: Vec<Color>) -> Cyclo {
    let form = IntegralForm::normalized(a.field());
    three_manifold_invariant(a, l, &Coloring::new(colors), &form).unwrap()
}

const UNKNOT: &str = "word:\ncupr\ncapl\n";
const KINK: &str = "word:\ncupr\nid cupr id\nxp id^2\nid capl id\ncapl\n";
const NKINK: &str = "word:\ncupr\nid cupr id\nxn id^2\nid capl id\ncapl\n";
const HOPF: &str = "word:\ncupr\nid^2 cupr\nid xp id\nid xp id\nid^2 capl\ncapl\n";

/// `n` kinks (sign of `n`) on the downward strand at position `q` of a word of length `len`.
fn kinks(q: usize, len: usize, n: i64) -> String {
    let x = if n > 0 { "xp" } else { "xn" };
    let mut s = String::new();
    for _ in 0..n.abs() {
        s += &format!("id^{} cupr id^{}\nid^{q} {x} id^{}\nid^{} capl id^{}\n", q + 1, len - q - 1, len - q, q + 1, len - q - 1);
    }
    s
}

fn framed_unknot(f: i64) -> String {
    format!("cupr\n{}capl\n", kinks(0, 2, f))
}

fn hopf(a: i64, b: i64) -> String {
    format!("word:\ncupr\n{}id^2 cupr\n{}id xp id\nid xp id\nid^2 capl\ncapl\n", kinks(0, 2, a), kinks(2, 4, b))
}

fn unrolled(d: &str) -> BeadedTensor {
    tangle_invariant(&alg(1), &parse_sliced(d).unwrap()).unwrap()
}

#[test]
fn surgery_values() {
    let a = alg(3);
    assert_eq!(value(&a, &link("word:\n"), vec![]), Cyclo::one());
    assert_eq!(value(&a, &link(KINK), vec![Color::zero()]), Cyclo::one());
    assert_eq!(value(&a, &link(NKINK), vec![Color::zero()]), Cyclo::one());
    for c in [Color::zero(), color(1, 0, 3), color(1, 2, 3)] {
        assert!(value(&a, &link(UNKNOT), vec![c]).is_zero());
    }
}

#[test]
fn lens_space_values_at_zero() {
    // |H_1|^2 on the 3- and 4-framed unknots
    let a = alg(1);
    assert_eq!(value(&a, &link(&format!("word:\n{}", framed_unknot(3))), vec![Color::zero()]), Cyclo::int(9));
    assert_eq!(value(&a, &link(&format!("word:\n{}", framed_unknot(-4))), vec![Color::zero()]), Cyclo::int(16));
}

#[test]
fn inadmissible_colorings_are_rejected() {
    let a = alg(3);
    let form = IntegralForm::normalized(a.field());
    let r = three_manifold_invariant(&a, &link(KINK), &Coloring::new(vec![color(1, 0, 3)]), &form);
    assert!(matches!(r, Err(Error::Inadmissible(_))));
    let j = universal_invariant(&a, &link(KINK)).unwrap();
    assert!(matches!(colored_invariant(&j, &Coloring::zero(2)), Err(Error::Inadmissible(_))));
}

#[test]
fn universal_invariant_of_small_links() {
    let a = alg(1);
    let j = universal_invariant(&a, &link("word:\n")).unwrap();
    assert_eq!(j.n(), 0);
    assert_eq!(colored_invariant(&j, &Coloring::zero(0)).unwrap().terms().len(), 1);
    // the counterclockwise circle carries the pivot
    let j = universal_invariant(&a, &link(UNKNOT)).unwrap();
    assert_eq!(j.body(), &TensorElement::tensor(&[&pivot(&a)]));
    assert!(j.cartan().is_zero());
    let c = color(1, 2, 3);
    let a3 = alg(3);
    let j3 = universal_invariant(&a3, &link(UNKNOT)).unwrap();
    let colored = colored_invariant(&j3, &Coloring::new(vec![c])).unwrap();
    assert_eq!(colored, TensorElement::tensor(&[&g_element(&a3, c)]));
    let j = universal_invariant(&a, &link(HOPF)).unwrap();
    assert_eq!(j.cartan(), &CartanExponent::from_linking(&[vec![0, 1], vec![1, 0]]));
    assert!(j.cartan_matches_linking());
}

#[test]
fn kinks_are_twists() {
    // a kink on a downward strand, read along the strand
    let a = alg(1);
    let pos = fourier_element(&unrolled("word: d\nid cupr\nxp id\nid capl\n"), &[Color::zero()]).unwrap();
    let neg = fourier_element(&unrolled("word: d\nid cupr\nxn id\nid capl\n"), &[Color::zero()]).unwrap();
    let theta = TensorElement::tensor(&[&crate::ribbon::twist_u0(&a)]);
    let theta_inv = TensorElement::tensor(&[&crate::ribbon::twist_inverse_u0(&a)]);
    assert_eq!(pos, theta);
    assert_eq!(neg, theta_inv);
}

#[test]
fn reidemeister_moves_on_string_links() {
    let id2 = unrolled("word: d d\n");
    assert_eq!(unrolled("word: d d\nxp\nxn\n"), id2);
    assert_eq!(unrolled("word: d d\nxn\nxp\n"), id2);
    // antiparallel strands
    assert_eq!(unrolled("word: d u\nxp\nxn\n"), unrolled("word: d u\n"));
    assert_eq!(unrolled("word: u d\nxn\nxp\n"), unrolled("word: u d\n"));
    // braid relation, all downward and with one strand reversed
    assert_eq!(unrolled("word: d d d\nxp id\nid xp\nxp id\n"), unrolled("word: d d d\nid xp\nxp id\nid xp\n"));
    assert_eq!(unrolled("word: u d d\nxp id\nid xp\nxn id\n"), unrolled("word: u d d\nid xn\nxp id\nid xp\n"));
    // opposite kinks cancel
    let kinked = "word: d\nid cupr\nxp id\nid capl\nid cupr\nxn id\nid capl\n";
    assert_eq!(unrolled(kinked), unrolled("word: d\n"));
}

#[test]
fn reidemeister_moves_on_closed_links() {
    let a = alg(1);
    let z = vec![Color::zero(); 2];
    let base = hopf(1, 3);
    let v = value(&a, &link(&base), z.clone());
    assert_eq!(v, Cyclo::int(4));
    // an extra pair of crossings between the components
    let r2 = base.replace("id xp id\nid xp id\n", "id xp id\nid xp id\nid xn id\nid xp id\n");
    assert_eq!(value(&a, &link(&r2), z.clone()), v);
    // cancelling kinks on the second component
    let r1 = base.replace("id^2 capl\n", &format!("{}{}id^2 capl\n", kinks(2, 4, 1), kinks(2, 4, -1)));
    assert_eq!(value(&a, &link(&r1), z.clone()), v);
}

#[test]
fn reidemeister_three_on_a_closed_braid() {
    let a = alg(1);
    let close = |w: &str| format!("word:\ncupr\nid cupr id\nid^2 cupr id^2\n{w}{}id^2 capl id^2\nid capl id\ncapl\n", kinks(0, 6, 1));
    let lhs = link(&close("xp id^4\nid xp id^3\nxp id^4\n"));
    let rhs = link(&close("id xp id^3\nxp id^4\nid xp id^3\n"));
    assert_eq!(lhs.lk(), rhs.lk());
    let z = vec![Color::zero(); lhs.n()];
    assert_eq!(value(&a, &lhs, z.clone()), value(&a, &rhs, z));
}

#[test]
fn blow_ups_leave_the_invariant_unchanged() {
    let a = alg(1);
    let base = framed_unknot(3);
    let v = value(&a, &link(&format!("word:\n{base}")), vec![Color::zero()]);
    for k in [1, -1] {
        let l = link(&format!("word:\n{base}{}", framed_unknot(k)));
        assert_eq!(value(&a, &l, vec![Color::zero(); 2]), v);
    }
    let a = alg(2);
    let c = color(1, 0, 2);
    let base = framed_unknot(4);
    let v = value(&a, &link(&format!("word:\n{base}")), vec![c]);
    assert_eq!(v, Cyclo::int(16));
    for k in [1, -1] {
        let l = link(&format!("word:\n{}{base}", framed_unknot(k)));
        assert_eq!(value(&a, &l, vec![Color::zero(), c]), v);
    }
}

#[test]
fn handle_slide() {
    // sliding a 2-framed unknot over a 1-framed one gives the Hopf link with
    // framings 1 and 3; the slid-over meridian picks up minus the other color
    let a = alg(2);
    for c in [color(1, 0, 2), color(1, 1, 2)] {
        let unlink = link(&format!("word:\n{}{}", framed_unknot(1), framed_unknot(2)));
        let slid = link(&hopf(1, 3));
        assert_eq!(slid.lk(), &[vec![1, 1], vec![1, 3]]);
        let before = value(&a, &unlink, vec![Color::zero(), c]);
        assert_eq!(before, Cyclo::int(4));
        assert_eq!(value(&a, &slid, vec![-c, c]), before);
    }
}

#[test]
fn basepoints_do_not_matter() {
    let a = alg(1);
    let l = link(&hopf(1, 3));
    let form = IntegralForm::normalized(a.field());
    let z = Coloring::zero(2);
    let v = three_manifold_invariant(&a, &l, &z, &form).unwrap();
    for b in [[1, 0], [0, 2], [3, 5]] {
        assert_eq!(three_manifold_invariant_based(&a, &l, &z, &form, &b).unwrap(), v);
    }
}

#[test]
fn reversing_orientation() {
    let a = alg(2);
    let l = link(&hopf(1, 3));
    let omega = Coloring::new(vec![color(1, 0, 2), color(1, 0, 2)]);
    let form = IntegralForm::normalized(a.field());
    let v = three_manifold_invariant(&a, &l, &omega, &form).unwrap();
    assert!(!v.is_zero());
    let (r, w) = reverse_orientation(&l, &omega, 1).unwrap();
    assert_eq!(r.lk(), &[vec![1, -1], vec![-1, 3]]);
    assert_eq!(three_manifold_invariant(&a, &r, &w, &form).unwrap(), v);
}

#[test]
fn closure_proposition() {
    let a = alg(1);
    let form = IntegralForm::normalized(a.field());
    let cases = [("word: d\n", 1), ("word: d\nid cupr\nxp id\nid capl\n", 1), ("word: d d\nxp\nxp\n", 2)];
    for (t, n) in cases {
        let t = parse_sliced(t).unwrap();
        let (lhs, rhs) = closure_check(&a, &t, &Coloring::zero(n), &form).unwrap();
        assert_eq!(lhs, rhs);
    }
    let a = alg(3);
    let t = parse_sliced("word: d\n").unwrap();
    let (lhs, rhs) = closure_check(&a, &t, &Coloring::new(vec![color(1, 0, 3)]), &form).unwrap();
    assert_eq!((lhs.is_zero(), rhs.is_zero()), (true, true));
    assert!(matches!(closure_check(&a, &parse_sliced("word: d u\n").unwrap(), &Coloring::zero(1), &form), Err(Error::NotStringLink(_))));
}

fn braid_closure(n: usize, word: &[(usize, bool)]) -> LinkDiagram {
    let mut text = String::from("word:\n");
    for k in 0..n {
        text += &format!("id^{k} cupr id^{k}\n");
    }
    for &(i, pos) in word {
        text += &format!("id^{i} {} id^{}\n", if pos { "xp" } else { "xn" }, 2 * n - i - 2);
    }
    for k in (0..n).rev() {
        text += &format!("id^{k} capl id^{k}\n");
    }
    link(&text)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn cartan_exponent_is_the_linking_form(
        (n, word) in (2usize..=3).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n - 1, any::<bool>()), 0..4)))
    ) {
        let l = braid_closure(n, &word);
        let j = universal_invariant(&alg(1), &l).unwrap();
        prop_assert!(j.cartan_matches_linking());
        prop_assert_eq!(j.n(), l.n());
    }

    #[test]
    fn basepoint_shifts_on_closed_braids(
        word in prop::collection::vec((0usize..1, any::<bool>()), 1..4),
        shift in 0usize..6,
    ) {
        let a = alg(1);
        let l = braid_closure(2, &word);
        let form = IntegralForm::normalized(a.field());
        let z = Coloring::zero(l.n());
        let v = three_manifold_invariant(&a, &l, &z, &form).unwrap();
        let b = vec![shift; l.n()];
        prop_assert_eq!(three_manifold_invariant_based(&a, &l, &z, &form, &b).unwrap(), v);
    }
}
