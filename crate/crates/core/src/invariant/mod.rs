//! The universal invariant of a link diagram in beaded normal form, its
//! Fourier coloring and the 3-manifold invariant obtained by G-traces.
//!
//! Beads are read along the orientation, each component's word running left
//! to right from its basepoint. A crossing carries `R` when its over strand
//! joins bottom-left to top-right and `R^-1 = (S (x) id)(R)` otherwise, the
//! first leg on the over strand; legs on upward strands get an antipode.
//! Cups and caps carry `1` except `cupl` (`phi0^-1`) and `capl` (`phi0`).

use std::collections::HashMap;

use crate::algebra::{AlgebraElement, AlgebraRef, Ctx, Mono, TensorElement};
use crate::error::{Error, Result};
use crate::fourier::fourier_element;
use crate::gcoalgebra::{g_element, gtrace, Color, IntegralForm};
use crate::ribbon::{pivot, pivot_inverse, r_inverse, r_matrix, BeadedTensor, CartanExponent};
use crate::scalars::Cyclo;
use crate::tangles::{Coloring, LinkDiagram, Orient, Piece, PointKind, SlicedDiagram};

/// `J_L` as beads times `xi^Q_L`, one slot per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalInvariant {
    beaded: BeadedTensor,
    lk: Vec<Vec<i64>>,
}

impl UniversalInvariant {
    pub fn beaded(&self) -> &BeadedTensor {
        &self.beaded
    }

    pub fn body(&self) -> &TensorElement {
        self.beaded.body()
    }

    pub fn cartan(&self) -> &CartanExponent {
        self.beaded.cartan()
    }

    pub fn lk(&self) -> &[Vec<i64>] {
        &self.lk
    }

    pub fn n(&self) -> usize {
        self.lk.len()
    }

    /// Whether the accumulated exponent is `sum lk_ij Q_ij`.
    pub fn cartan_matches_linking(&self) -> bool {
        *self.cartan() == CartanExponent::from_linking(&self.lk)
    }
}

/// Where each bead sits: component, position in the component's word.
struct BeadLayout {
    at: Vec<Option<(usize, usize)>>,
    counts: Vec<usize>,
}

fn carries_bead(kind: PointKind) -> bool {
    matches!(kind, PointKind::Leg { .. } | PointKind::Cup(Piece::CupL) | PointKind::Cap(Piece::CapL))
}

impl BeadLayout {
    /// `basepoints[c]` shifts the start of component `c`'s word by that many beads.
    fn new(d: &SlicedDiagram, basepoints: &[usize]) -> BeadLayout {
        let mut at = vec![None; d.points().len()];
        let mut counts = vec![];
        for (c, comp) in d.components().iter().enumerate() {
            let beads: Vec<usize> = comp.points.iter().copied().filter(|&p| carries_bead(d.points()[p].kind)).collect();
            let m = beads.len();
            let shift = if m == 0 { 0 } else { basepoints.get(c).copied().unwrap_or(0) % m };
            for (k, &p) in beads.iter().enumerate() {
                at[p] = Some((c, (k + m - shift) % m));
            }
            counts.push(m);
        }
        BeadLayout { at, counts }
    }
}

/// Builds the crossing and pivot tensors, cached per configuration.
struct Beads<'a> {
    alg: &'a AlgebraRef,
    colors: Option<&'a [Color]>,
    cache: HashMap<(u8, usize, usize), BeadedTensor>,
}

impl<'a> Beads<'a> {
    fn project(&self, x: BeadedTensor, comps: &[usize]) -> Result<BeadedTensor> {
        match self.colors {
            None => Ok(x),
            Some(cols) => {
                let cs: Vec<Color> = comps.iter().map(|&c| cols[c]).collect();
                x.project(&cs)
            }
        }
    }

    fn crossing(&mut self, braiding: bool, up: [bool; 2], comps: [usize; 2]) -> Result<BeadedTensor> {
        let key = (braiding as u8 | (up[0] as u8) << 1 | (up[1] as u8) << 2, comps[0], comps[1]);
        if let Some(x) = self.cache.get(&key) {
            return Ok(x.clone());
        }
        let mut x = if braiding { r_matrix(self.alg) } else { r_inverse(self.alg) };
        for (k, u) in up.iter().enumerate() {
            if *u {
                x = x.antipode_slot(k)?;
            }
        }
        let x = self.project(x, &comps)?;
        self.cache.insert(key, x.clone());
        Ok(x)
    }

    fn pivot(&mut self, inverse: bool, comp: usize) -> Result<BeadedTensor> {
        let key = (8 + inverse as u8, comp, 0);
        if let Some(x) = self.cache.get(&key) {
            return Ok(x.clone());
        }
        let g = if inverse { pivot_inverse(self.alg) } else { pivot(self.alg) };
        let x = self.project(BeadedTensor::from_body(TensorElement::tensor(&[&g])), &[comp])?;
        self.cache.insert(key, x.clone());
        Ok(x)
    }
}

/// Multiplies the beads of `d` along its components. Slots of the result are
/// the components in order; with `colors` every bead is first projected to
/// its component's quotient, and with `form` as well each finished component
/// is replaced by its trace functional (see [`trace_functional`]).
fn assemble(
    alg: &AlgebraRef,
    d: &SlicedDiagram,
    colors: Option<&[Color]>,
    form: Option<&IntegralForm>,
    basepoints: &[usize],
) -> Result<BeadedTensor> {
    let layout = BeadLayout::new(d, basepoints);
    let mut crossing_of = vec![None; d.points().len()];
    for (k, x) in d.crossings().iter().enumerate() {
        crossing_of[x.over] = Some(k);
        crossing_of[x.under] = Some(k);
    }
    let mut beads = Beads { alg, colors, cache: HashMap::new() };
    let mut traces = TraceCache::default();
    let mut cur = BeadedTensor::unit(alg, vec![]);
    // slot s holds the product of beads start..=end of one component
    let mut runs: Vec<(usize, usize, usize)> = vec![];
    let mut done = vec![false; d.points().len()];
    let points = d.points();
    for (ci, comp) in d.components().iter().enumerate() {
        // walk the word from its basepoint so the component's run grows in one piece
        let mut order: Vec<(usize, usize)> =
            comp.points.iter().filter_map(|&p| layout.at[p].map(|(_, k)| (k, p))).collect();
        order.sort_unstable();
        for (_, p) in order {
            if done[p] {
                continue;
            }
            let (x, slots) = match points[p].kind {
                PointKind::Leg { .. } => {
                    let c = d.crossings()[crossing_of[p].expect("legs belong to crossings")];
                    let (o, u) = (c.over, c.under);
                    let up = [points[o].orient == Orient::Up, points[u].orient == Orient::Up];
                    let x = beads.crossing(c.braiding, up, [points[o].component, points[u].component])?;
                    (x, vec![o, u])
                }
                PointKind::Cup(_) => (beads.pivot(true, points[p].component)?, vec![p]),
                PointKind::Cap(_) => (beads.pivot(false, points[p].component)?, vec![p]),
            };
            cur = cur.concat(&x)?;
            for q in slots {
                done[q] = true;
                let (c, k) = layout.at[q].expect("bead");
                runs.push((c, k, k));
            }
            // merge runs that have become adjacent along a component
            while let Some((a, b)) = adjacent_runs(&runs) {
                cur = cur.multiply_slots(a, b)?;
                runs[a].2 = runs[b].2;
                runs.remove(b);
            }
        }
        if layout.counts[ci] == 0 {
            let ctx = colors.map_or(Ctx::Unrolled, |cols| Ctx::Colored(cols[ci]));
            cur = cur.concat(&BeadedTensor::unit(alg, vec![ctx]))?;
            runs.push((ci, 0, 0));
        }
        if let Some(form) = form {
            let s = runs.iter().position(|r| r.0 == ci).expect("finished component");
            let (body, cartan) = cur.into_parts();
            cur = BeadedTensor::new(trace_functional(&body, s, form, &mut traces)?, cartan)?;
        }
    }
    let mut perm: Vec<usize> = (0..runs.len()).collect();
    perm.sort_by_key(|&s| runs[s].0);
    cur.permute(&perm)
}

#[derive(Default)]
struct TraceCache(HashMap<(Ctx, Mono), Cyclo>);

impl TraceCache {
    fn get(&mut self, alg: &AlgebraRef, ctx: Ctx, m: Mono, form: &IntegralForm) -> Result<Cyclo> {
        if let Some(v) = self.0.get(&(ctx, m)) {
            return Ok(v.clone());
        }
        let v = gtrace(&AlgebraElement::from_mono(alg, ctx, m, Cyclo::one()), form)?;
        self.0.insert((ctx, m), v.clone());
        Ok(v)
    }
}

/// Replaces slot `s` (in a colored quotient) by `D(x) = sum_a tr(x k^a) k^-a`
/// over `a` in `(Z/ell)^2`. `D` commutes with right multiplication by
/// `k`-monomials, which is all that later happens to a finished component,
/// and `tr(x)` is the coefficient of `1` in `D(x)`.
fn trace_functional(t: &TensorElement, s: usize, form: &IntegralForm, traces: &mut TraceCache) -> Result<TensorElement> {
    let alg = t.algebra();
    let f = alg.field();
    let ctx = t.ctxs()[s];
    let ell = alg.ell() as i32;
    let mut terms = vec![];
    for (ms, c) in t.terms() {
        for a1 in 0..ell {
            for a2 in 0..ell {
                let shifted = Mono { k1: ms[s].k1 + a1, k2: ms[s].k2 + a2, ..ms[s] };
                let v = traces.get(alg, ctx, shifted, form)?;
                if v.is_zero() {
                    continue;
                }
                let mut out = ms.clone();
                out[s] = Mono::cartan(-a1, -a2, 0);
                terms.push((out, f.mul(c, &v)));
            }
        }
    }
    Ok(TensorElement::from_terms(alg, t.ctxs().to_vec(), terms))
}

fn adjacent_runs(runs: &[(usize, usize, usize)]) -> Option<(usize, usize)> {
    for (a, ra) in runs.iter().enumerate() {
        for (b, rb) in runs.iter().enumerate() {
            if ra.0 == rb.0 && ra.2 + 1 == rb.1 {
                return Some((a, b));
            }
        }
    }
    None
}

/// `J_L` of a closed diagram, with the Cartan exponent checked against the
/// linking matrix.
pub fn universal_invariant(alg: &AlgebraRef, d: &LinkDiagram) -> Result<UniversalInvariant> {
    universal_invariant_based(alg, d, &[])
}

/// As [`universal_invariant`], starting component `c`'s word `basepoints[c]`
/// beads after its default basepoint.
pub fn universal_invariant_based(alg: &AlgebraRef, d: &LinkDiagram, basepoints: &[usize]) -> Result<UniversalInvariant> {
    let beaded = assemble(alg, d.diagram(), None, None, basepoints)?;
    let j = UniversalInvariant { beaded, lk: d.lk().to_vec() };
    assert!(j.cartan_matches_linking(), "Cartan exponent {} disagrees with the linking matrix", j.cartan());
    Ok(j)
}

/// Beads of any diagram, closed or not, one slot per strand component.
pub fn tangle_invariant(alg: &AlgebraRef, d: &SlicedDiagram) -> Result<BeadedTensor> {
    assemble(alg, d, None, None, &[])
}

fn check_coloring(lk: &[Vec<i64>], omega: &Coloring) -> Result<()> {
    let report = crate::tangles::validate_coloring(lk, omega);
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::Inadmissible(report.to_string()))
    }
}

/// `J_L^omega = F_alpha(J_L)` in `U_alpha_1 (x) .. (x) U_alpha_n`.
pub fn colored_invariant(j: &UniversalInvariant, omega: &Coloring) -> Result<TensorElement> {
    check_coloring(&j.lk, omega)?;
    fourier_element(&j.beaded, &omega.colors)
}

/// `prod_j tr^alpha_j` applied to a tensor over `U_alpha_1 (x) .. (x) U_alpha_n`.
pub fn trace_tensor(t: &TensorElement, form: &IntegralForm) -> Result<Cyclo> {
    let alg = t.algebra();
    let f = alg.field();
    let mut cache: HashMap<(usize, Mono), Cyclo> = HashMap::new();
    let mut total = Cyclo::zero();
    for (ms, c) in t.terms() {
        let mut acc = c.clone();
        for (s, m) in ms.iter().enumerate() {
            let key = (s, *m);
            let v = match cache.get(&key) {
                Some(v) => v.clone(),
                None => {
                    let v = gtrace(&AlgebraElement::from_mono(alg, t.ctxs()[s], *m, Cyclo::one()), form)?;
                    cache.insert(key, v.clone());
                    v
                }
            };
            if v.is_zero() {
                acc = Cyclo::zero();
                break;
            }
            acc = f.mul(&acc, &v);
        }
        total.add_assign_ref(&acc);
    }
    Ok(total)
}

/// `J(M, omega) = (tr^alpha_1 (x) .. (x) tr^alpha_n)(J_L^omega)` for the
/// surgery presentation `d`.
pub fn three_manifold_invariant(alg: &AlgebraRef, d: &LinkDiagram, omega: &Coloring, form: &IntegralForm) -> Result<Cyclo> {
    three_manifold_invariant_based(alg, d, omega, form, &[])
}

pub fn three_manifold_invariant_based(
    alg: &AlgebraRef,
    d: &LinkDiagram,
    omega: &Coloring,
    form: &IntegralForm,
    basepoints: &[usize],
) -> Result<Cyclo> {
    check_coloring(d.lk(), omega)?;
    // projection is an algebra map, so beads are projected before assembly
    let beaded = assemble(alg, d.diagram(), Some(&omega.colors), Some(form), basepoints)?;
    let colored = fourier_element(&beaded, &omega.colors)?;
    let one = vec![Mono::ONE; d.n()];
    Ok(colored.terms().get(&one).cloned().unwrap_or_else(Cyclo::zero))
}

/// The surgery diagram with component `j` reversed, and the coloring that
/// goes with it (`alpha_j -> -alpha_j`).
pub fn reverse_orientation(d: &LinkDiagram, omega: &Coloring, j: usize) -> Result<(LinkDiagram, Coloring)> {
    let r = LinkDiagram::new(d.diagram().reverse_component(j)?)?;
    let mut colors = omega.colors.clone();
    colors[j] = -colors[j];
    Ok((r, Coloring::new(colors)))
}

/// Both sides of `J_cl(T) = tr(phi0 (x) .. (x) phi0) J_T` after coloring and
/// tracing, for a string link `t`.
pub fn closure_check(alg: &AlgebraRef, t: &SlicedDiagram, omega: &Coloring, form: &IntegralForm) -> Result<(Cyclo, Cyclo)> {
    let n = t.string_link_width()?;
    let closed = LinkDiagram::new(t.closure()?)?;
    check_coloring(closed.lk(), omega)?;
    let lhs = three_manifold_invariant(alg, &closed, omega, form)?;
    let jt = fourier_element(&tangle_invariant(alg, t)?, &omega.colors)?;
    let g: Vec<AlgebraElement> = omega.colors.iter().map(|c| g_element(alg, *c)).collect();
    let refs: Vec<&AlgebraElement> = g.iter().collect();
    let pivots = if n == 0 { jt.clone() } else { TensorElement::tensor(&refs) };
    let rhs = trace_tensor(&pivots.mul(&jt)?, form)?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests;
