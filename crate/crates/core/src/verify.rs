//! Property suites over the algebra, ribbon, integral, Fourier and surgery
//! layers, run at a configurable `ell` and reported check by check.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::algebra::{Algebra, AlgebraElement, AlgebraRef, Ctx, Generator, Mono, TensorElement};
use crate::error::{Error, Result};
use crate::fourier::{
    fourier_antipode_check, fourier_delta_check, fourier_element, fourier_exponent, fourier_exponent_direct,
    fourier_exponent_fast, r_matrix_u0,
};
use crate::gcoalgebra::{check_right_integral, integral, Color, IntegralForm};
use crate::invariant::{reverse_orientation, three_manifold_invariant, three_manifold_invariant_based};
use crate::ribbon::{r_matrix, twist_beaded, twist_inverse_u0, twist_u0, BeadedTensor, CartanExponent};
use crate::scalars::{Cyclo, QRational, Q};
use crate::tangles::{fixtures, Coloring, LinkDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Hopf,
    Ribbon,
    Integral,
    Fourier,
    Kirby,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Hopf, Suite::Ribbon, Suite::Integral, Suite::Fourier, Suite::Kirby];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::Ribbon => "ribbon",
            Suite::Integral => "integral",
            Suite::Fourier => "fourier",
            Suite::Kirby => "kirby",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown suite '{s}' (hopf, ribbon, integral, fourier, kirby, all)")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One named property: how many instances were compared and the first that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub count: usize,
    pub failure: Option<String>,
}

impl Check {
    fn new(name: &str, count: usize, failure: Option<String>) -> Check {
        Check { name: name.to_string(), count, failure }
    }

    /// Passes when every labelled case holds; the first false label is the counterexample.
    fn cases(name: &str, cases: impl IntoIterator<Item = (String, bool)>) -> Check {
        let mut count = 0;
        let mut failure = None;
        for (label, ok) in cases {
            count += 1;
            if !ok && failure.is_none() {
                failure = Some(label);
            }
        }
        Check::new(name, count, failure)
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "ok   {} ({})", self.name, self.count),
            Some(x) => write!(f, "FAIL {} ({}): {x}", self.name, self.count),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub ell: u32,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// Total number of compared instances.
    pub fn count(&self) -> usize {
        self.checks.iter().map(|c| c.count).sum()
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        writeln!(f, "suite {} (ell={}): {verdict}, {} checks", self.suite, self.ell, self.count())?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        Ok(())
    }
}

type Job = Box<dyn Fn() -> Result<Check> + Send + Sync>;

fn job(name: &'static str, f: impl Fn() -> Result<Check> + Send + Sync + 'static) -> (&'static str, Job) {
    (name, Box::new(f))
}

/// Runs a suite at `ell` with color denominator `d`. Checks run on the
/// current rayon pool and are reported in a fixed order.
pub fn run_suite(suite: Suite, ell: u32, d: u32) -> Result<SuiteReport> {
    let alg = Algebra::new(ell, d)?;
    let jobs = match suite {
        Suite::Hopf => hopf_jobs(&alg),
        Suite::Ribbon => ribbon_jobs(&alg),
        Suite::Integral => integral_jobs(&alg),
        Suite::Fourier => fourier_jobs(&alg),
        Suite::Kirby => kirby_jobs(ell, d)?,
    };
    let checks = jobs
        .into_par_iter()
        .map(|(name, f)| f().unwrap_or_else(|e| Check::new(name, 0, Some(format!("error: {e}")))))
        .collect();
    Ok(SuiteReport { suite, ell, checks })
}

fn gens(alg: &AlgebraRef, ctx: Ctx) -> Vec<AlgebraElement> {
    Generator::ALL.iter().map(|g| AlgebraElement::generator(alg, ctx, *g)).collect()
}

/// `Delta` on the unrolled algebra, `Delta_{alpha,0}` on `U_alpha`.
fn coproduct(x: &AlgebraElement) -> Result<TensorElement> {
    match x.ctx() {
        Ctx::Unrolled => x.coproduct(),
        Ctx::Colored(c) => x.coproduct_split(*c, Color::zero()),
    }
}

fn coproduct_slot(t: &TensorElement, i: usize) -> Result<TensorElement> {
    match t.ctxs()[i] {
        Ctx::Unrolled => t.coproduct_slot(i),
        Ctx::Colored(c) => t.coproduct_slot_split(i, c, Color::zero()),
    }
}

/// `m (S (x) id)` or `m (id (x) S)` of a two-slot tensor, landing in `ctx`.
fn antipode_contract(t: &TensorElement, slot: usize, ctx: Ctx) -> Result<AlgebraElement> {
    let s = t.antipode_slot(slot)?;
    TensorElement::from_terms(t.algebra(), vec![ctx, ctx], s.terms().clone()).multiply_slots(0, 1)?.to_element()
}

fn a_nonzero_color(alg: &AlgebraRef) -> Option<Color> {
    let d = alg.spec().d() as i64;
    (d > 1).then(|| Color::new(QRational::new(1, d), QRational::new(d - 1, d)))
}

fn hopf_jobs(alg: &AlgebraRef) -> Vec<(&'static str, Job)> {
    let a = alg.clone();
    let dimension = job("PBW basis of U_0 has 32 ell^4 elements", move || {
        let basis = a.quotient_basis();
        let mut sorted = basis.clone();
        sorted.sort();
        sorted.dedup();
        let l = a.ell() as usize;
        let want = 32 * l.pow(4);
        let fail = (basis.len() != want || sorted.len() != want)
            .then(|| format!("{} elements ({} distinct), expected {want}", basis.len(), sorted.len()));
        Ok(Check::new("PBW basis of U_0 has 32 ell^4 elements", basis.len(), fail))
    });
    let mut jobs = vec![dimension];
    for ctx in [Ctx::Unrolled, Ctx::zero()] {
        let a = alg.clone();
        jobs.push(job("Hopf axioms on generators", move || {
            let mut cases = vec![];
            let g = gens(&a, ctx);
            for x in &g {
                let dx = coproduct(x)?;
                let eps = AlgebraElement::scalar(&a, ctx, x.counit()?);
                cases.push((format!("m(S (x) id)Delta({x}) in {ctx}"), antipode_contract(&dx, 0, ctx)? == eps));
                cases.push((format!("m(id (x) S)Delta({x}) in {ctx}"), antipode_contract(&dx, 1, ctx)? == eps));
                cases.push((format!("(eps (x) id)Delta({x}) in {ctx}"), dx.counit_slot(0)?.to_element()? == *x));
                cases.push((format!("(id (x) eps)Delta({x}) in {ctx}"), dx.counit_slot(1)?.to_element()? == *x));
                cases.push((format!("coassociativity on {x} in {ctx}"), coproduct_slot(&dx, 0)? == coproduct_slot(&dx, 1)?));
                for y in &g {
                    let xy = x * y;
                    cases.push((format!("Delta({x} {y}) in {ctx}"), coproduct(&xy)? == dx.mul(&coproduct(y)?)?));
                    cases.push((format!("S({x} {y}) in {ctx}"), xy.antipode() == &y.antipode() * &x.antipode()));
                }
            }
            Ok(Check::cases("Hopf axioms on generators", cases))
        }));
    }
    let a = alg.clone();
    jobs.push(job("S^2 is conjugation by the pivot", move || {
        let l = a.ell() as i32;
        let mut cases = vec![];
        for ctx in [Ctx::Unrolled, Ctx::zero()] {
            let piv = AlgebraElement::from_mono(&a, ctx, Mono::cartan(-l, -2, 1), Cyclo::one());
            let inv = AlgebraElement::from_mono(&a, ctx, Mono::cartan(l, 2, 1), Cyclo::one());
            for x in gens(&a, ctx) {
                cases.push((format!("S^2({x}) in {ctx}"), x.antipode().antipode() == &(&piv * &x) * &inv));
            }
        }
        Ok(Check::cases("S^2 is conjugation by the pivot", cases))
    }));
    if let Some(c) = a_nonzero_color(alg) {
        let a = alg.clone();
        jobs.push(job("G-coalgebra axioms at a nonzero color", move || {
            let z = Color::zero();
            let mut cases = vec![];
            for x in gens(&a, Ctx::zero()) {
                // Delta_{c,-c} then S on the first leg lands in U_{-c} (x) U_{-c}
                let d = x.coproduct_split(c, -c)?;
                let one = AlgebraElement::scalar(&a, Ctx::Colored(-c), x.counit()?);
                cases.push((format!("m(S (x) id)Delta_(c,-c)({x})"), d.antipode_slot(0)?.multiply_slots(0, 1)?.to_element()? == one));
                // (Delta_(a,b) (x) id)Delta_(a+b,c) = (id (x) Delta_(b,c))Delta_(a,b+c)
                let l = d.coproduct_slot_split(0, c, z)?;
                let r = d.coproduct_slot_split(1, z, -c)?;
                cases.push((format!("coassociativity of Delta_(c,0,-c) on {x}"), l == r));
                let l = x.coproduct_split(z, z)?.coproduct_slot_split(0, c, -c)?;
                let r = d.coproduct_slot_split(1, -c, z)?;
                cases.push((format!("coassociativity of Delta_(c,-c,0) on {x}"), l == r));
            }
            Ok(Check::cases("G-coalgebra axioms at a nonzero color", cases))
        }));
    }
    jobs
}

fn leg3(r: &TensorElement, pos: [usize; 2]) -> Result<TensorElement> {
    r.place(3, &pos, Ctx::zero())
}

fn beaded_leg3(r: &BeadedTensor, pos: [usize; 2]) -> Result<BeadedTensor> {
    r.place(3, &pos, Ctx::Unrolled)
}

fn ribbon_jobs(alg: &AlgebraRef) -> Vec<(&'static str, Job)> {
    let z = Color::zero();
    let mut jobs = vec![];
    let a = alg.clone();
    jobs.push(job("R Delta(x) = Delta^op(x) R in U_0", move || {
        let r = r_matrix_u0(&a);
        let mut cases = vec![];
        for x in gens(&a, Ctx::zero()) {
            let d = x.coproduct_split(z, z)?;
            cases.push((format!("{x}"), r.mul(&d)? == d.flip()?.mul(&r)?));
        }
        Ok(Check::cases("R Delta(x) = Delta^op(x) R in U_0", cases))
    }));
    let a = alg.clone();
    jobs.push(job("(S (x) S)R = R and (eps (x) id)R = (id (x) eps)R = 1", move || {
        let r = r_matrix_u0(&a);
        let one = TensorElement::unit(&a, vec![Ctx::zero()]);
        Ok(Check::cases(
            "(S (x) S)R = R and (eps (x) id)R = (id (x) eps)R = 1",
            [
                ("(S (x) S)R".to_string(), r.antipode_slot(0)?.antipode_slot(1)? == r),
                ("(eps (x) id)R".to_string(), r.counit_slot(0)? == one),
                ("(id (x) eps)R".to_string(), r.counit_slot(1)? == one),
            ],
        ))
    }));
    let a = alg.clone();
    jobs.push(job("hexagons in U_0", move || {
        let r = r_matrix_u0(&a);
        let (r12, r13, r23) = (leg3(&r, [0, 1])?, leg3(&r, [0, 2])?, leg3(&r, [1, 2])?);
        Ok(Check::cases(
            "hexagons in U_0",
            [
                ("(Delta (x) id)R = R13 R23".to_string(), r.coproduct_slot_split(0, z, z)? == r13.mul(&r23)?),
                ("(id (x) Delta)R = R13 R12".to_string(), r.coproduct_slot_split(1, z, z)? == r13.mul(&r12)?),
            ],
        ))
    }));
    let a = alg.clone();
    jobs.push(job("Yang-Baxter in U_0 (x3)", move || {
        let r = r_matrix(&a);
        let (r12, r13, r23) = (beaded_leg3(&r, [0, 1])?, beaded_leg3(&r, [0, 2])?, beaded_leg3(&r, [1, 2])?);
        let zs = [z, z, z];
        let lhs = fourier_element(&r12.mul(&r13)?.mul(&r23)?, &zs)?;
        let rhs = fourier_element(&r23.mul(&r13)?.mul(&r12)?, &zs)?;
        Ok(Check::cases("Yang-Baxter in U_0 (x3)", [("R12 R13 R23 = R23 R13 R12".to_string(), lhs == rhs)]))
    }));
    let a = alg.clone();
    jobs.push(job("twist axioms in U_0", move || {
        let th = twist_u0(&a);
        let ti = twist_inverse_u0(&a);
        let mut cases = vec![
            ("theta theta^-1 = 1".to_string(), &th * &ti == AlgebraElement::one(&a, Ctx::zero())),
            ("eps(theta) = 1".to_string(), th.counit()? == Cyclo::one()),
            ("S(theta) = theta".to_string(), th.antipode() == th),
        ];
        for x in gens(&a, Ctx::zero()) {
            cases.push((format!("theta central: {x}"), &th * &x == &x * &th));
        }
        // Delta(theta) = tau(R) R (theta (x) theta), in beaded form then transformed
        let tb = twist_beaded(&a);
        let r = r_matrix(&a);
        let tt = tb.place(2, &[0], Ctx::Unrolled)?.mul(&tb.place(2, &[1], Ctx::Unrolled)?)?;
        let rhs = r.permute(&[1, 0])?.mul(&r)?.mul(&tt)?;
        let zs = [z, z];
        let lhs = fourier_element(&tb.coproduct_slot(0)?, &zs)?;
        cases.push(("Delta(theta) = tau(R) R (theta (x) theta)".to_string(), lhs == fourier_element(&rhs, &zs)?));
        cases.push(("theta = F(beaded twist)".to_string(), fourier_element(&tb, &[z])?.to_element()? == th));
        Ok(Check::cases("twist axioms in U_0", cases))
    }));
    jobs
}

fn integral_jobs(alg: &AlgebraRef) -> Vec<(&'static str, Job)> {
    let mut pairs = vec![(Color::zero(), Color::zero())];
    if let Some(c) = a_nonzero_color(alg) {
        let d = alg.spec().d() as i64;
        let b = Color::new(QRational::new(d - 1, d), QRational::zero());
        pairs.push((c, -c));
        pairs.push((c, b));
    }
    let mut jobs = vec![];
    for (x, y) in pairs {
        let a = alg.clone();
        jobs.push(job("right integral on the PBW basis", move || {
            let name = format!("(lambda_a (x) id)Delta_(a,b) = lambda_(a+b) 1_b at a={x}, b={y}");
            Ok(match check_right_integral(&a, x, y, &IntegralForm::unit()) {
                Ok(n) => Check::new(&name, n, None),
                Err(m) => Check::new(&name, a.quotient_dim(), Some(format!("basis monomial {m}"))),
            })
        }));
    }
    let a = alg.clone();
    jobs.push(job("integral of the twist", move || {
        let norm = IntegralForm::normalized(a.field());
        let l = integral(&twist_u0(&a), &norm)?;
        let li = integral(&twist_inverse_u0(&a), &norm)?;
        Ok(Check::cases(
            "integral of the twist",
            [
                ("lambda(theta) = lambda(theta^-1)".to_string(), l == li),
                ("lambda(theta) = 1 under the default eta".to_string(), l.is_one()),
            ],
        ))
    }));
    jobs
}

fn fourier_jobs(alg: &AlgebraRef) -> Vec<(&'static str, Job)> {
    let mut jobs = vec![];
    let a = alg.clone();
    jobs.push(job("coefficients of F_0(K)", move || {
        let f = a.field();
        let l = a.ell() as i64;
        let z = [Color::zero(), Color::zero()];
        let k = fourier_exponent(f, &CartanExponent::cartan_k(1, 0, 1, 2)?, &z)?;
        let w = Q::new(1, l * l);
        let mut cases = vec![];
        for x in 0..l.pow(4) {
            let (i1, j1, i2, j2) = (x % l, (x / l) % l, (x / (l * l)) % l, x / (l * l * l));
            let want = f.xi_int(j1 * i2 + j2 * i1 - 2 * i1 * i2).scale(&w);
            let e = [i1 as u32, j1 as u32, i2 as u32, j2 as u32];
            cases.push((format!("index {e:?}"), k.coeff(&e) == want));
        }
        Ok(Check::cases("coefficients of F_0(K)", cases))
    }));
    let a = alg.clone();
    jobs.push(job("interpolation on the lattice", move || {
        let f = a.field();
        let l = a.ell() as i64;
        let mut cases = vec![];
        for (e, cols) in exponent_cases(&a)? {
            let k = fourier_exponent(f, &e, &cols)?;
            let direct = fourier_exponent_direct(f, &e, &cols)?;
            let fast = fourier_exponent_fast(f, &e, &cols)?;
            cases.push((format!("direct = separable for {e} on {cols:?}"), direct == fast));
            let dim = e.dim();
            // one full period and its shift by ell in every direction
            for x in 0..l.pow(dim as u32) {
                let s: Vec<i64> = (0..dim).map(|a| (x / l.pow(a as u32)) % l - if x % 2 == 0 { 0 } else { l }).collect();
                let h: Vec<QRational> =
                    (0..dim).map(|a| cols[a / 2].entries()[a % 2] + QRational::int(s[a])).collect();
                cases.push((format!("{e} at {s:?}"), k.evaluate(f, &s)? == f.xi_pow(e.value(&h))?));
            }
        }
        Ok(Check::cases("interpolation on the lattice", cases))
    }));
    let a = alg.clone();
    jobs.push(job("uniqueness: characters of the period grid are orthogonal", move || {
        // sum_s xi^((a-b).s) = ell^2 [a = b], so a k-monomial sum is fixed by its values
        let f = a.field();
        let l = a.ell() as i64;
        let mut cases = vec![];
        for x in 0..l * l {
            for y in 0..l * l {
                let (da, db) = (x % l - y % l, x / l - y / l);
                let mut s = Cyclo::zero();
                for p in 0..l {
                    for q in 0..l {
                        s.add_assign_ref(&f.xi_int(da * p + db * q));
                    }
                }
                let want = if x == y { Cyclo::int(l * l) } else { Cyclo::zero() };
                cases.push((format!("characters {x}, {y}"), s == want));
            }
        }
        Ok(Check::cases("uniqueness: characters of the period grid are orthogonal", cases))
    }));
    let a = alg.clone();
    jobs.push(job("F is an algebra map on beaded tensors", move || {
        let z = [Color::zero(), Color::zero()];
        let r = r_matrix(&a);
        let d = AlgebraElement::generator(&a, Ctx::Unrolled, Generator::E3).coproduct()?;
        let x = BeadedTensor::from_body(d);
        let mut cases = vec![];
        for (n, p, q) in [("R x", &r, &x), ("x R", &x, &r), ("R R", &r, &r)] {
            let lhs = fourier_element(&p.mul(q)?, &z)?;
            let rhs = fourier_element(p, &z)?.mul(&fourier_element(q, &z)?)?;
            cases.push((n.to_string(), lhs == rhs));
        }
        Ok(Check::cases("F is an algebra map on beaded tensors", cases))
    }));
    let a = alg.clone();
    jobs.push(job("F commutes with Delta and S", move || {
        let z = Color::zero();
        let mut cases = vec![];
        let cross = CartanExponent::from_matrix(1, vec![0, 1, 1, 0])?;
        let k = CartanExponent::cartan_k(1, 0, 0, 1)?;
        cases.push(("Delta on xi^(h1 h2) at 0".to_string(), fourier_delta_check(&a, &cross, z, z)?));
        cases.push(("Delta on xi^Q(h,h) at 0".to_string(), fourier_delta_check(&a, &k, z, z)?));
        cases.push(("S on xi^Q(h,h) at 0".to_string(), fourier_antipode_check(&a, &k, z)?));
        if let Some(c) = a_nonzero_color(&a) {
            let d = a.spec().d() as i64;
            let m: Vec<i64> = [0, 1, 1, 0].iter().map(|x| x * 2 * d).collect();
            let e = CartanExponent::from_matrix(1, m)?;
            cases.push((format!("Delta split {c} + {}", -c), fourier_delta_check(&a, &e, c, -c)?));
            cases.push((format!("S at {c}"), fourier_antipode_check(&a, &e, c)?));
        }
        Ok(Check::cases("F commutes with Delta and S", cases))
    }));
    jobs
}

/// Periodic exponents on one and two strands, with a nonzero lattice when
/// the field allows it.
fn exponent_cases(alg: &AlgebraRef) -> Result<Vec<(CartanExponent, Vec<Color>)>> {
    let z = Color::zero();
    let mut v = vec![
        (CartanExponent::cartan_k(1, 0, 0, 1)?, vec![z]),
        (CartanExponent::cartan_k(1, 0, 1, 2)?, vec![z, z]),
        (CartanExponent::from_linking(&[vec![1, 1], vec![1, 3]]), vec![z, z]),
    ];
    if let Some(c) = a_nonzero_color(alg) {
        let d = alg.spec().d() as i64;
        v.push((CartanExponent::from_linking(&[vec![d, d], vec![d, -d]]), vec![c, -c]));
    }
    Ok(v)
}

fn surgery_value(alg: &AlgebraRef, text: &str, colors: Vec<Color>) -> Result<Cyclo> {
    let l = LinkDiagram::parse(text)?;
    three_manifold_invariant(alg, &l, &Coloring::new(colors), &IntegralForm::normalized(alg.field()))
}

fn kirby_jobs(ell: u32, d: u32) -> Result<Vec<(&'static str, Job)>> {
    let alg = Algebra::new(ell, d)?;
    let z = Color::zero();
    let mut jobs = vec![];
    let a = alg.clone();
    jobs.push(job("normalization", move || {
        let mut cases = vec![
            ("empty link gives 1".to_string(), surgery_value(&a, "word:\n", vec![])?.is_one()),
            ("+1 kink gives 1".to_string(), surgery_value(&a, &fixtures::unlink(&[1]), vec![z])?.is_one()),
            ("-1 kink gives 1".to_string(), surgery_value(&a, &fixtures::unlink(&[-1]), vec![z])?.is_one()),
            ("0-framed unknot at 0 gives 0".to_string(), surgery_value(&a, &fixtures::unlink(&[0]), vec![z])?.is_zero()),
        ];
        if let Some(c) = a_nonzero_color(&a) {
            let v = surgery_value(&a, &fixtures::unlink(&[0]), vec![c])?;
            cases.push((format!("0-framed unknot at {c} gives 0"), v.is_zero()));
        }
        Ok(Check::cases("normalization", cases))
    }));
    let a = alg.clone();
    jobs.push(job("blow-ups", move || {
        let mut cases = vec![];
        for base in [vec![2], vec![3]] {
            let v = surgery_value(&a, &fixtures::unlink(&base), vec![z])?;
            for k in [1, -1] {
                let mut fr = base.clone();
                fr.push(k);
                let w = surgery_value(&a, &fixtures::unlink(&fr), vec![z, z])?;
                cases.push((format!("unknot({}) with a {k:+} kink", base[0]), v == w));
            }
        }
        Ok(Check::cases("blow-ups", cases))
    }));
    // nonzero lens-space values need colors with 2 alpha integral, so the
    // slide runs over the half-integer field
    let a = Algebra::new(ell, 2)?;
    jobs.push(job("handle slide", move || {
        let mut cases = vec![];
        for c in [Color::new(QRational::new(1, 2), QRational::zero()), Color::new(QRational::new(1, 2), QRational::new(1, 2))] {
            let before = surgery_value(&a, &fixtures::unlink(&[1, 2]), vec![z, c])?;
            let after = surgery_value(&a, &fixtures::hopf(1, 3), vec![-c, c])?;
            cases.push((format!("unknot(1) + unknot(2) slid to Hopf(1,3) at {c}"), before == after && !before.is_zero()));
        }
        Ok(Check::cases("handle slide", cases))
    }));
    let a = alg.clone();
    jobs.push(job("basepoints and orientation on the Hopf link", move || {
        let form = IntegralForm::normalized(a.field());
        let l = LinkDiagram::parse(&fixtures::hopf(1, 3))?;
        let omega = Coloring::zero(2);
        let v = three_manifold_invariant(&a, &l, &omega, &form)?;
        let mut cases = vec![];
        for b in [[1, 0], [0, 2]] {
            cases.push((format!("basepoints {b:?}"), three_manifold_invariant_based(&a, &l, &omega, &form, &b)? == v));
        }
        for j in 0..2 {
            let (r, w) = reverse_orientation(&l, &omega, j)?;
            cases.push((format!("reversing component {}", j + 1), three_manifold_invariant(&a, &r, &w, &form)? == v));
        }
        Ok(Check::cases("basepoints and orientation on the Hopf link", cases))
    }));
    Ok(jobs)
}
