//! Planar diagram codes and their conversion to sliced diagrams.
//!
//! A code is a list of crossings `X[i,j,k,l]s`, optionally wrapped in
//! `PD[...]`. The labels name edges and are listed counterclockwise starting
//! from the incoming under-strand, so the under-strand runs `i -> k`. The sign
//! `s` is `+` or `-`; on a positive crossing the over-strand runs `l -> j`, on
//! a negative one `j -> l`. `Loop[a]` adds a crossingless unknot.
//!
//! The diagram is swept into slices by attaching crossings one at a time to
//! the top boundary of the part already built, which always stays a disc:
//! the next crossing is one whose already-built neighbours sit on a contiguous
//! stretch of the boundary, in the counterclockwise order of its edges.

use std::collections::HashMap;

use super::{Orient, Piece, Slice, SlicedDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
struct PdCrossing {
    edges: [i64; 4],
    positive: bool,
    at: (usize, usize),
}

impl PdCrossing {
    /// Whether the edge in slot `t` points into the crossing.
    fn incoming(&self, t: usize) -> bool {
        match t {
            0 => true,
            2 => false,
            1 => !self.positive,
            _ => self.positive,
        }
    }
}

fn err(at: (usize, usize), msg: impl Into<String>) -> Error {
    Error::Parse { line: at.0, col: at.1, msg: msg.into() }
}

struct Scanner<'a> {
    chars: Vec<char>,
    i: usize,
    line: usize,
    col: usize,
    _src: &'a str,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Scanner<'a> {
        Scanner { chars: src.chars().collect(), i: 0, line: 1, col: 1, _src: src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.i += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn at(&self) -> (usize, usize) {
        (self.line, self.col)
    }

    /// Skips whitespace, commas and `#` comments.
    fn skip(&mut self) {
        while let Some(c) = self.peek() {
            if c == '#' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() || c == ',' {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip();
        let at = self.at();
        match self.bump() {
            Some(c) if c == want => Ok(()),
            Some(c) => Err(err(at, format!("expected '{want}', found '{c}'"))),
            None => Err(err(at, format!("expected '{want}', found end of input"))),
        }
    }

    fn ident(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_alphabetic()) {
            s.push(c);
            self.bump();
        }
        s
    }

    fn int(&mut self) -> Result<i64> {
        self.skip();
        let at = self.at();
        let mut s = String::new();
        if self.peek() == Some('-') {
            s.push('-');
            self.bump();
        }
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            s.push(c);
            self.bump();
        }
        s.parse().map_err(|_| err(at, "expected an edge label"))
    }

    fn labels(&mut self) -> Result<Vec<i64>> {
        self.expect('[')?;
        let mut v = vec![];
        loop {
            self.skip();
            if self.peek() == Some(']') {
                self.bump();
                return Ok(v);
            }
            v.push(self.int()?);
        }
    }
}

struct Code {
    crossings: Vec<PdCrossing>,
    loops: Vec<(i64, (usize, usize))>,
}

fn scan(text: &str) -> Result<Code> {
    let mut s = Scanner::new(text);
    let mut crossings = vec![];
    let mut loops = vec![];
    let mut wrapped = false;
    loop {
        s.skip();
        let at = s.at();
        let Some(c) = s.peek() else { break };
        if c == ']' && wrapped {
            s.bump();
            wrapped = false;
            continue;
        }
        let name = s.ident();
        match name.as_str() {
            "PD" if !wrapped => {
                s.expect('[')?;
                wrapped = true;
            }
            "X" => {
                let e = s.labels()?;
                if e.len() != 4 {
                    return Err(err(at, format!("a crossing has 4 edges, found {}", e.len())));
                }
                let sat = s.at();
                let positive = match s.bump() {
                    Some('+') => true,
                    Some('-') => false,
                    _ => return Err(err(sat, "expected the crossing sign '+' or '-'")),
                };
                crossings.push(PdCrossing { edges: [e[0], e[1], e[2], e[3]], positive, at });
            }
            "Loop" => {
                let e = s.labels()?;
                if e.len() != 1 {
                    return Err(err(at, "a loop has exactly one edge"));
                }
                loops.push((e[0], at));
            }
            "" => return Err(err(at, format!("unexpected character '{c}'"))),
            other => return Err(err(at, format!("unknown token '{other}'"))),
        }
    }
    if wrapped {
        return Err(err(s.at(), "unclosed 'PD['"));
    }
    Ok(Code { crossings, loops })
}

/// Each edge is entered once and left once.
fn check_edges(code: &Code) -> Result<HashMap<i64, [(usize, usize); 2]>> {
    let mut ends: HashMap<i64, Vec<(usize, usize)>> = HashMap::new();
    for (c, x) in code.crossings.iter().enumerate() {
        for t in 0..4 {
            ends.entry(x.edges[t]).or_default().push((c, t));
        }
    }
    let mut out = HashMap::new();
    for (label, v) in ends {
        let at = code.crossings[v[0].0].at;
        if v.len() != 2 {
            return Err(err(at, format!("edge {label} appears {} times", v.len())));
        }
        let inc: Vec<bool> = v.iter().map(|&(c, t)| code.crossings[c].incoming(t)).collect();
        if inc[0] == inc[1] {
            let what = if inc[0] { "entered" } else { "left" };
            return Err(err(at, format!("edge {label} is {what} at both ends; signs or labels are inconsistent")));
        }
        out.insert(label, [v[0], v[1]]);
    }
    for (label, at) in &code.loops {
        if out.contains_key(label) {
            return Err(err(*at, format!("loop edge {label} is also a crossing edge")));
        }
    }
    Ok(out)
}

struct Sweep<'a> {
    code: &'a Code,
    ends: HashMap<i64, [(usize, usize); 2]>,
    done: Vec<bool>,
    slices: Vec<Slice>,
    /// Current top boundary: edge label and orientation.
    bnd: Vec<(i64, Orient)>,
    piece_start: usize,
}

impl<'a> Sweep<'a> {
    /// Orientation of the strand leaving crossing `c` upward through slot `t`.
    fn up_orient(&self, c: usize, t: usize) -> Orient {
        if self.code.crossings[c].incoming(t) {
            Orient::Down
        } else {
            Orient::Up
        }
    }

    fn other_end(&self, c: usize, t: usize) -> (usize, usize) {
        let e = self.ends[&self.code.crossings[c].edges[t]];
        if e[0] == (c, t) {
            e[1]
        } else {
            e[0]
        }
    }

    /// Moves the leftmost boundary strand to the right end, looping it under
    /// the part built since `piece_start`.
    fn rotate(&mut self) {
        let (label, o) = self.bnd.remove(0);
        for s in &mut self.slices[self.piece_start..] {
            s.left += 1;
        }
        self.slices.insert(self.piece_start, Slice { left: 0, piece: Piece::cup(o.flip()) });
        self.slices.push(Slice { left: 0, piece: Piece::cap(o.flip()) });
        self.bnd.push((label, o));
    }

    /// Shared slots of `c` with their boundary positions, or `None` when the
    /// crossing touches the boundary in a way that cannot be attached yet.
    /// Returns `(s, m, p, wrap)`: slots `s..s+m` sit at positions `p..` in order,
    /// `wrap` counting the strands that continue past the right end.
    fn placement(&self, c: usize) -> Option<(usize, usize, usize, usize)> {
        let x = &self.code.crossings[c];
        let pos: Vec<Option<usize>> = (0..4)
            .map(|t| {
                let (c2, _) = self.other_end(c, t);
                if c2 != c && self.done[c2] {
                    self.bnd.iter().position(|(l, _)| *l == x.edges[t])
                } else {
                    None
                }
            })
            .collect();
        let m = pos.iter().filter(|p| p.is_some()).count();
        if m == 0 {
            return None;
        }
        let len = self.bnd.len();
        for s in 0..4 {
            if (0..m).any(|k| pos[(s + k) % 4].is_none()) {
                continue;
            }
            let p = pos[s].expect("shared");
            if (0..m).all(|k| pos[(s + k) % 4] == Some((p + k) % len)) {
                let wrap = (p + m).saturating_sub(len);
                return Some((s, m, p, wrap));
            }
        }
        None
    }

    fn cap_adjacent(&mut self) -> Result<()> {
        while let Some(q) = (0..self.bnd.len().saturating_sub(1)).find(|&q| self.bnd[q].0 == self.bnd[q + 1].0) {
            let (l, a) = self.bnd[q];
            if a == self.bnd[q + 1].1 {
                return Err(Error::Parse { line: 0, col: 0, msg: format!("edge {l} closes up with inconsistent orientation") });
            }
            self.slices.push(Slice { left: q, piece: Piece::cap(a) });
            self.bnd.drain(q..q + 2);
        }
        Ok(())
    }

    fn attach(&mut self, c: usize, s: usize, m: usize, p: usize) -> Result<()> {
        let x = self.code.crossings[c].clone();
        let slot = |k: usize| (s + k) % 4;
        let mut p = p;
        if m == 0 {
            // two cups feed the bottom slots
            for k in 0..2 {
                // orientation where the cup meets the crossing: right end of
                // the first cup, left end of the second
                let o = self.up_orient(c, slot(k)).flip();
                let left = if k == 0 { o.flip() } else { o };
                let at = p + 2 * k;
                self.slices.push(Slice { left: at, piece: Piece::cup(left) });
                let e = x.edges[slot(k)];
                self.bnd.splice(at..at, [(e, left), (e, left.flip())]);
            }
            p += 1;
        } else if m == 1 {
            let o = self.up_orient(c, slot(1)).flip();
            self.slices.push(Slice { left: p + 1, piece: Piece::cup(o) });
            let e = x.edges[slot(1)];
            self.bnd.splice(p + 1..p + 1, [(e, o), (e, o.flip())]);
        }
        let (oa, ob) = (self.bnd[p].1, self.bnd[p + 1].1);
        // the strand through slots s and s+2 joins bottom-left to top-right
        let braiding = s % 2 == 1;
        if braiding != (x.positive == (oa == ob)) {
            return Err(err(x.at, "crossing sign does not match the planar orientation of its edges"));
        }
        let piece = if x.positive { Piece::Pos } else { Piece::Neg };
        self.slices.push(Slice { left: p, piece });
        let out = [(x.edges[slot(3)], self.up_orient(c, slot(3))), (x.edges[slot(2)], self.up_orient(c, slot(2)))];
        self.bnd.splice(p..p + 2, out);
        self.done[c] = true;
        self.cap_adjacent().map_err(|e| match e {
            Error::Parse { msg, .. } => err(x.at, msg),
            e => e,
        })
    }

    fn run_piece(&mut self, members: &[usize]) -> Result<()> {
        self.piece_start = self.slices.len();
        let first = members[0];
        let x = &self.code.crossings[first];
        // start with the bottom-left slot chosen so no self-loop straddles the two cups
        let s = (0..4)
            .find(|&s| x.edges[s] != x.edges[(s + 1) % 4])
            .ok_or_else(|| err(x.at, "crossing joined to itself on all sides"))?;
        self.attach(first, s, 0, 0)?;
        loop {
            let todo: Vec<usize> = members.iter().copied().filter(|&c| !self.done[c]).collect();
            if todo.is_empty() {
                break;
            }
            let cands: Vec<(usize, (usize, usize, usize, usize))> =
                todo.iter().filter_map(|&c| self.placement(c).map(|pl| (c, pl))).collect();
            let pick = cands.iter().find(|(_, pl)| pl.3 == 0).or_else(|| cands.first()).copied();
            let Some((c, (s, m, p, wrap))) = pick else {
                let at = self.code.crossings[todo[0]].at;
                return Err(err(at, "the code is not planar: no crossing can be attached to the boundary"));
            };
            for _ in 0..wrap {
                self.rotate();
            }
            self.attach(c, s, m, p - wrap)?;
        }
        if !self.bnd.is_empty() {
            let at = self.code.crossings[first].at;
            return Err(err(at, "the code is not planar: edges remain unmatched"));
        }
        Ok(())
    }
}

/// Parses a planar diagram code into a closed sliced diagram.
pub fn parse_pd(text: &str) -> Result<SlicedDiagram> {
    let code = scan(text)?;
    let ends = check_edges(&code)?;
    let n = code.crossings.len();
    // connected pieces in order of their first crossing
    let mut piece_of = vec![usize::MAX; n];
    let mut pieces: Vec<Vec<usize>> = vec![];
    for c0 in 0..n {
        if piece_of[c0] != usize::MAX {
            continue;
        }
        let id = pieces.len();
        let mut stack = vec![c0];
        let mut members = vec![];
        piece_of[c0] = id;
        while let Some(c) = stack.pop() {
            members.push(c);
            for t in 0..4 {
                for &(c2, _) in &ends[&code.crossings[c].edges[t]] {
                    if piece_of[c2] == usize::MAX {
                        piece_of[c2] = id;
                        stack.push(c2);
                    }
                }
            }
        }
        members.sort_unstable();
        pieces.push(members);
    }
    let mut sweep = Sweep { code: &code, ends, done: vec![false; n], slices: vec![], bnd: vec![], piece_start: 0 };
    for members in &pieces {
        sweep.run_piece(members)?;
    }
    for _ in &code.loops {
        sweep.slices.push(Slice { left: 0, piece: Piece::CupR });
        sweep.slices.push(Slice { left: 0, piece: Piece::CapL });
    }
    SlicedDiagram::closed(sweep.slices)
}
