//! Framed oriented link diagrams as Morse words of elementary slices: crossings,
//! cups and caps acting on words in `d` (downward) and `u` (upward) strands.

pub mod fixtures;
mod pd;
mod slice;

pub use pd::parse_pd;
pub use slice::parse_sliced;

use std::fmt;

use crate::error::{Error, Result};
use crate::gcoalgebra::Color;
use crate::scalars::QRational;

/// Orientation of a strand endpoint: `Down` is the object `↓`, `Up` is `↑`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orient {
    Down,
    Up,
}

impl Orient {
    pub fn flip(self) -> Orient {
        match self {
            Orient::Down => Orient::Up,
            Orient::Up => Orient::Down,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Orient::Down => 'd',
            Orient::Up => 'u',
        }
    }
}

/// An elementary morphism acting at two adjacent positions.
///
/// Cups and caps carry the direction in which they are traversed: `CupR` is
/// `coev_↓` (codomain `d u`), `CupL` is `coev_↑` (`u d`), `CapR` is `ev_↓`
/// (domain `u d`) and `CapL` is `ev_↑` (domain `d u`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Piece {
    Pos,
    Neg,
    CupR,
    CupL,
    CapR,
    CapL,
}

impl Piece {
    pub const ALL: [Piece; 6] = [Piece::Pos, Piece::Neg, Piece::CupR, Piece::CupL, Piece::CapR, Piece::CapL];

    pub fn name(self) -> &'static str {
        match self {
            Piece::Pos => "xp",
            Piece::Neg => "xn",
            Piece::CupR => "cupr",
            Piece::CupL => "cupl",
            Piece::CapR => "capr",
            Piece::CapL => "capl",
        }
    }

    /// Number of strands consumed at the bottom.
    pub fn arity_in(self) -> usize {
        match self {
            Piece::Pos | Piece::Neg => 2,
            Piece::CupR | Piece::CupL => 0,
            Piece::CapR | Piece::CapL => 2,
        }
    }

    pub fn is_crossing(self) -> bool {
        matches!(self, Piece::Pos | Piece::Neg)
    }

    pub fn cup(left: Orient) -> Piece {
        match left {
            Orient::Down => Piece::CupR,
            Orient::Up => Piece::CupL,
        }
    }

    pub fn cap(left: Orient) -> Piece {
        match left {
            Orient::Up => Piece::CapR,
            Orient::Down => Piece::CapL,
        }
    }

    /// The same piece with its traversal direction reversed.
    pub fn reversed(self) -> Piece {
        match self {
            Piece::CupR => Piece::CupL,
            Piece::CupL => Piece::CupR,
            Piece::CapR => Piece::CapL,
            Piece::CapL => Piece::CapR,
            p => p,
        }
    }
}

/// One slice: `id^left piece id^rest`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slice {
    pub left: usize,
    pub piece: Piece,
}

/// What sits at a point of the diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointKind {
    /// The over (`true`) or under strand of a crossing.
    Leg { over: bool },
    Cup(Piece),
    Cap(Piece),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Point {
    pub slice: usize,
    pub kind: PointKind,
    /// Orientation of the strand through the point (for cups and caps, of the left end).
    pub orient: Orient,
    pub component: usize,
    /// Position along the component, counted from its basepoint.
    pub index: usize,
}

/// A crossing with its sign and the points on its two strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub slice: usize,
    pub sign: i64,
    /// Whether the over strand is the one joining bottom-left and top-right;
    /// such a crossing is the braiding `c`, the other kind is `c^-1`.
    pub braiding: bool,
    pub over: usize,
    pub under: usize,
}

/// A strand component: its points in traversal order from the basepoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub points: Vec<usize>,
    /// `None` for a closed loop; otherwise the (top, bottom) boundary positions
    /// where the arc starts and ends, `true` meaning the top boundary.
    pub ends: Option<((bool, usize), (bool, usize))>,
}

impl Component {
    pub fn is_closed(&self) -> bool {
        self.ends.is_none()
    }
}

/// A validated sliced diagram with its strand bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlicedDiagram {
    bottom: Vec<Orient>,
    slices: Vec<Slice>,
    top: Vec<Orient>,
    points: Vec<Point>,
    crossings: Vec<Crossing>,
    components: Vec<Component>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Node {
    Point(usize),
    Bottom(usize),
    Top(usize),
}

/// Applies one slice to a word, or explains why it does not fit.
fn apply(word: &[Orient], s: Slice) -> std::result::Result<Vec<Orient>, String> {
    let k = s.piece.arity_in();
    if s.left + k > word.len() {
        return Err(format!("{} at position {} needs {} strands, the word has {}", s.piece.name(), s.left, s.left + k, word.len()));
    }
    let mut out = word[..s.left].to_vec();
    let rest = &word[s.left + k..];
    match s.piece {
        Piece::Pos | Piece::Neg => out.extend([word[s.left + 1], word[s.left]]),
        Piece::CupR => out.extend([Orient::Down, Orient::Up]),
        Piece::CupL => out.extend([Orient::Up, Orient::Down]),
        Piece::CapR | Piece::CapL => {
            let want = if s.piece == Piece::CapR { [Orient::Up, Orient::Down] } else { [Orient::Down, Orient::Up] };
            let got = [word[s.left], word[s.left + 1]];
            if got != want {
                return Err(format!(
                    "{} needs {}{} but the strands are {}{}",
                    s.piece.name(),
                    want[0].symbol(),
                    want[1].symbol(),
                    got[0].symbol(),
                    got[1].symbol()
                ));
            }
        }
    }
    out.extend_from_slice(rest);
    Ok(out)
}

impl SlicedDiagram {
    /// Validates the slices against the bottom word and follows the strands.
    /// A failing slice is reported by its index.
    pub fn new(bottom: Vec<Orient>, slices: Vec<Slice>) -> std::result::Result<SlicedDiagram, (usize, String)> {
        let mut word = bottom.clone();
        for (t, s) in slices.iter().enumerate() {
            word = apply(&word, *s).map_err(|m| (t, m))?;
        }
        let mut d = SlicedDiagram { bottom, slices, top: word, points: vec![], crossings: vec![], components: vec![] };
        d.follow_strands();
        Ok(d)
    }

    /// A closed diagram from slices alone.
    pub fn closed(slices: Vec<Slice>) -> Result<SlicedDiagram> {
        let d = SlicedDiagram::new(vec![], slices).map_err(|(t, m)| Error::Parse { line: t + 1, col: 1, msg: m })?;
        if !d.top.is_empty() {
            return Err(Error::OpenDiagram(format!("{} strands left open at the top", d.top.len())));
        }
        Ok(d)
    }

    pub fn empty() -> SlicedDiagram {
        SlicedDiagram::new(vec![], vec![]).expect("empty diagram")
    }

    fn follow_strands(&mut self) {
        // arcs: lower end, upper end, orientation
        let mut open: Vec<Node> = (0..self.bottom.len()).map(Node::Bottom).collect();
        let mut arcs: Vec<(Node, Node, Orient)> = vec![];
        let mut word = self.bottom.clone();
        let mut points = vec![];
        let mut crossings = vec![];
        for (t, s) in self.slices.iter().enumerate() {
            let p = s.left;
            match s.piece {
                Piece::Pos | Piece::Neg => {
                    let (oa, ob) = (word[p], word[p + 1]);
                    let same = oa == ob;
                    let positive = s.piece == Piece::Pos;
                    // a braiding crossing is positive iff both strands point the same way
                    let braiding = positive == same;
                    let a = points.len();
                    points.push(Point { slice: t, kind: PointKind::Leg { over: braiding }, orient: oa, component: 0, index: 0 });
                    points.push(Point { slice: t, kind: PointKind::Leg { over: !braiding }, orient: ob, component: 0, index: 0 });
                    let b = a + 1;
                    arcs.push((open[p], Node::Point(a), oa));
                    arcs.push((open[p + 1], Node::Point(b), ob));
                    open[p] = Node::Point(b);
                    open[p + 1] = Node::Point(a);
                    let (over, under) = if braiding { (a, b) } else { (b, a) };
                    crossings.push(Crossing { slice: t, sign: if positive { 1 } else { -1 }, braiding, over, under });
                }
                Piece::CupR | Piece::CupL => {
                    let c = points.len();
                    let o = if s.piece == Piece::CupR { Orient::Down } else { Orient::Up };
                    points.push(Point { slice: t, kind: PointKind::Cup(s.piece), orient: o, component: 0, index: 0 });
                    open.splice(p..p, [Node::Point(c), Node::Point(c)]);
                }
                Piece::CapR | Piece::CapL => {
                    let c = points.len();
                    points.push(Point { slice: t, kind: PointKind::Cap(s.piece), orient: word[p], component: 0, index: 0 });
                    arcs.push((open[p], Node::Point(c), word[p]));
                    arcs.push((open[p + 1], Node::Point(c), word[p + 1]));
                    open.drain(p..p + 2);
                }
            }
            word = apply(&word, *s).expect("validated");
        }
        for (q, node) in open.iter().enumerate() {
            arcs.push((*node, Node::Top(q), word[q]));
        }
        // successor of each node along the orientation
        let mut next_point: Vec<Option<Node>> = vec![None; points.len()];
        let mut next_top: Vec<Option<Node>> = vec![None; word.len()];
        let mut next_bottom: Vec<Option<Node>> = vec![None; self.bottom.len()];
        let mut has_pred_point = vec![false; points.len()];
        for &(lo, hi, o) in &arcs {
            let (from, to) = if o == Orient::Down { (hi, lo) } else { (lo, hi) };
            match from {
                Node::Point(i) => next_point[i] = Some(to),
                Node::Top(q) => next_top[q] = Some(to),
                Node::Bottom(q) => next_bottom[q] = Some(to),
            }
            if let Node::Point(i) = to {
                has_pred_point[i] = true;
            }
        }
        let mut comps: Vec<Component> = vec![];
        let mut seen = vec![false; points.len()];
        let walk = |start: Node, seen: &mut Vec<bool>| -> (Vec<usize>, Node) {
            let mut cur = start;
            let mut pts = vec![];
            loop {
                let nx = match cur {
                    Node::Point(i) => next_point[i],
                    Node::Top(q) => next_top[q],
                    Node::Bottom(q) => next_bottom[q],
                };
                match nx {
                    Some(Node::Point(i)) if !seen[i] => {
                        seen[i] = true;
                        pts.push(i);
                        cur = Node::Point(i);
                    }
                    Some(n) => return (pts, n),
                    None => return (pts, cur),
                }
            }
        };
        // open arcs start at a top end pointing down or a bottom end pointing up
        let starts = (0..word.len())
            .filter(|&q| word[q] == Orient::Down)
            .map(|q| (true, q))
            .chain((0..self.bottom.len()).filter(|&q| self.bottom[q] == Orient::Up).map(|q| (false, q)));
        for (is_top, q) in starts {
            let (pts, end) = walk(if is_top { Node::Top(q) } else { Node::Bottom(q) }, &mut seen);
            let end = match end {
                Node::Top(r) => (true, r),
                Node::Bottom(r) => (false, r),
                Node::Point(_) => unreachable!("open arcs end on the boundary"),
            };
            comps.push(Component { points: pts, ends: Some(((is_top, q), end)) });
        }
        // closed loops, based at their first point in slice order
        for i in 0..points.len() {
            if seen[i] {
                continue;
            }
            seen[i] = true;
            let mut pts = vec![i];
            let (rest, _) = walk(Node::Point(i), &mut seen);
            pts.extend(rest);
            comps.push(Component { points: pts, ends: None });
        }
        for (c, comp) in comps.iter().enumerate() {
            for (k, &i) in comp.points.iter().enumerate() {
                points[i].component = c;
                points[i].index = k;
            }
        }
        self.points = points;
        self.crossings = crossings;
        self.components = comps;
    }

    pub fn bottom(&self) -> &[Orient] {
        &self.bottom
    }

    pub fn top(&self) -> &[Orient] {
        &self.top
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn n_components(&self) -> usize {
        self.components.len()
    }

    pub fn is_closed(&self) -> bool {
        self.bottom.is_empty() && self.top.is_empty()
    }

    fn require_closed(&self) -> Result<()> {
        if self.is_closed() {
            Ok(())
        } else {
            Err(Error::OpenDiagram(format!("boundary words {} and {}", word_string(&self.bottom), word_string(&self.top))))
        }
    }

    /// Writhe of each component (signed self-crossings).
    pub fn writhes(&self) -> Vec<i64> {
        let mut w = vec![0; self.components.len()];
        for c in &self.crossings {
            let (i, j) = (self.points[c.over].component, self.points[c.under].component);
            if i == j {
                w[i] += c.sign;
            }
        }
        w
    }

    /// The diagram with component `j` traversed backwards: its strands flip,
    /// crossings with other components change sign and its cups and caps
    /// change direction.
    pub fn reverse_component(&self, j: usize) -> Result<SlicedDiagram> {
        if j >= self.components.len() {
            return Err(Error::SlotOutOfRange { slot: j, n: self.components.len() });
        }
        let mut slices = self.slices.clone();
        for c in &self.crossings {
            let (a, b) = (self.points[c.over].component, self.points[c.under].component);
            if (a == j) != (b == j) {
                let s = &mut slices[c.slice];
                s.piece = if s.piece == Piece::Pos { Piece::Neg } else { Piece::Pos };
            }
        }
        for p in &self.points {
            if p.component == j {
                if let PointKind::Cup(_) | PointKind::Cap(_) = p.kind {
                    slices[p.slice].piece = slices[p.slice].piece.reversed();
                }
            }
        }
        let mut bottom = self.bottom.clone();
        if let Some(((t0, q0), (t1, q1))) = self.components[j].ends {
            for (t, q) in [(t0, q0), (t1, q1)] {
                if !t {
                    bottom[q] = bottom[q].flip();
                }
            }
        }
        SlicedDiagram::new(bottom, slices).map_err(|(t, m)| Error::Parse { line: t + 1, col: 1, msg: m })
    }

    /// Canonical text in the slice grammar.
    pub fn to_text(&self) -> String {
        let mut s = format!("word: {}\n", word_string(&self.bottom));
        let mut word = self.bottom.clone();
        for sl in &self.slices {
            let rest = word.len() - sl.left - sl.piece.arity_in();
            s.push_str(&format!("id^{} {} id^{}\n", sl.left, sl.piece.name(), rest));
            word = apply(&word, *sl).expect("validated");
        }
        s
    }

    /// Closure of a string link: each strand runs down through the diagram
    /// and returns upward on the right.
    pub fn closure(&self) -> Result<SlicedDiagram> {
        let n = self.string_link_width()?;
        let mut slices = vec![];
        for k in 0..n {
            slices.push(Slice { left: k, piece: Piece::CupR });
        }
        slices.extend(self.slices.iter().copied());
        for k in (0..n).rev() {
            slices.push(Slice { left: k, piece: Piece::CapL });
        }
        SlicedDiagram::closed(slices)
    }

    /// Number of strands when this is a string link (all strands downward,
    /// strand `i` running from top position `i` to bottom position `i`).
    pub fn string_link_width(&self) -> Result<usize> {
        let n = self.bottom.len();
        if self.top.len() != n || self.bottom.iter().chain(&self.top).any(|o| *o != Orient::Down) {
            return Err(Error::NotStringLink("boundary words must be equal and all downward".into()));
        }
        if self.components.len() != n {
            return Err(Error::NotStringLink("closed components present".into()));
        }
        for (i, c) in self.components.iter().enumerate() {
            if c.ends != Some(((true, i), (false, i))) {
                return Err(Error::NotStringLink(format!("strand {i} does not return to its own position")));
            }
        }
        Ok(n)
    }
}

pub fn word_string(w: &[Orient]) -> String {
    w.iter().map(|o| o.symbol().to_string()).collect::<Vec<_>>().join(" ")
}

/// A closed diagram with its linking matrix (diagonal: blackboard framings).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    diagram: SlicedDiagram,
    lk: Vec<Vec<i64>>,
}

impl LinkDiagram {
    /// Parses a closed diagram, taking PD notation when the first token is
    /// `PD`, `X[` or `Loop[` and the slice grammar otherwise.
    pub fn parse(text: &str) -> Result<LinkDiagram> {
        let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty()).unwrap_or("");
        let d = if first.starts_with("PD") || first.starts_with("X[") || first.starts_with("Loop[") {
            parse_pd(text)?
        } else {
            parse_sliced(text)?
        };
        LinkDiagram::new(d)
    }

    pub fn new(diagram: SlicedDiagram) -> Result<LinkDiagram> {
        let lk = linking_matrix(&diagram)?;
        Ok(LinkDiagram { diagram, lk })
    }

    pub fn diagram(&self) -> &SlicedDiagram {
        &self.diagram
    }

    pub fn n(&self) -> usize {
        self.lk.len()
    }

    pub fn lk(&self) -> &[Vec<i64>] {
        &self.lk
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_matrix(&self.lk))
    }
}

pub fn format_matrix(m: &[Vec<i64>]) -> String {
    let rows: Vec<String> =
        m.iter().map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))).collect();
    format!("[{}]", rows.join(","))
}

/// Signed crossing counts: self-crossings on the diagonal, half the mixed
/// count off it.
pub fn linking_matrix(d: &SlicedDiagram) -> Result<Vec<Vec<i64>>> {
    d.require_closed()?;
    let n = d.n_components();
    let mut lk = vec![vec![0i64; n]; n];
    for c in d.crossings() {
        let (i, j) = (d.points[c.over].component, d.points[c.under].component);
        if i == j {
            lk[i][i] += c.sign;
        } else {
            lk[i][j] += c.sign;
            lk[j][i] += c.sign;
        }
    }
    for (i, row) in lk.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            if i != j {
                debug_assert!(*x % 2 == 0, "closed components cross an even number of times");
                *x /= 2;
            }
        }
    }
    Ok(lk)
}

/// The values of a cohomology class on the meridians, one color per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<Color>,
}

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Coloring {
        Coloring { colors }
    }

    pub fn zero(n: usize) -> Coloring {
        Coloring { colors: vec![Color::zero(); n] }
    }

    /// One color per nonempty line, `p/q p/q`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Coloring> {
        let mut colors = vec![];
        for (k, line) in text.lines().enumerate() {
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let c: Color = body.parse().map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line: k + 1, col: 1, msg },
                e => Error::Parse { line: k + 1, col: 1, msg: e.to_string() },
            })?;
            colors.push(c);
        }
        Ok(Coloring { colors })
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Outcome of the admissibility check `sum_j lk_ij alpha_j = 0` in `(Q/Z)^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringReport {
    /// Rows `i` whose sum is nonzero, with the offending value.
    pub violations: Vec<(usize, Color)>,
    pub size_mismatch: Option<(usize, usize)>,
}

impl ColoringReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty() && self.size_mismatch.is_none()
    }
}

impl fmt::Display for ColoringReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((n, m)) = self.size_mismatch {
            return write!(f, "{m} colors for {n} components");
        }
        if self.violations.is_empty() {
            return write!(f, "admissible");
        }
        let parts: Vec<String> = self.violations.iter().map(|(i, c)| format!("row {}: {}", i + 1, c)).collect();
        write!(f, "{}", parts.join("; "))
    }
}

pub fn validate_coloring(lk: &[Vec<i64>], omega: &Coloring) -> ColoringReport {
    let n = lk.len();
    if omega.colors.len() != n {
        return ColoringReport { violations: vec![], size_mismatch: Some((n, omega.colors.len())) };
    }
    let mut violations = vec![];
    for (i, row) in lk.iter().enumerate() {
        let mut s = [QRational::zero(); 2];
        for (j, &x) in row.iter().enumerate() {
            let a = omega.colors[j].entries();
            s[0] = s[0] + a[0].mul_int(x);
            s[1] = s[1] + a[1].mul_int(x);
        }
        let c = Color::new(s[0], s[1]);
        if !c.is_zero() {
            violations.push((i, c));
        }
    }
    ColoringReport { violations, size_mismatch: None }
}

impl LinkDiagram {
    pub fn validate_coloring(&self, omega: &Coloring) -> ColoringReport {
        validate_coloring(&self.lk, omega)
    }

    /// Admissibility as linear constraints on the colors mod `Z^2`.
    pub fn admissibility_constraints(&self) -> Vec<String> {
        self.lk
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let terms: Vec<String> = row
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| **x != 0)
                    .map(|(j, x)| if *x == 1 { format!("a{}", j + 1) } else { format!("{x} a{}", j + 1) })
                    .collect();
                let lhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                format!("row {}: {lhs} = 0 mod Z^2", i + 1)
            })
            .collect()
    }
}
