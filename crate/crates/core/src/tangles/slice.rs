//! The slice grammar:
//!
//! ```text
//! # comment
//! word: d u          object word at the bottom (`d`/`↓` down, `u`/`↑` up)
//! id^0 cupr id^2     one slice per line: identities, a piece, identities
//! id^1 xp id^1
//! ```
//!
//! Pieces are `xp`, `xn`, `cupr`, `cupl`, `capr`, `capl`; `id` alone means
//! `id^1`, and whitespace between tokens is optional.

use super::{Orient, Piece, Slice, SlicedDiagram};
use crate::error::{Error, Result};

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

#[derive(Debug, PartialEq)]
enum Tok {
    Id(usize),
    Piece(Piece),
}

/// Tokens with their 1-based columns.
fn tokenize(body: &str, line: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = body.chars().collect();
    let mut out = vec![];
    let mut i = 0;
    while i < chars.len() {
        if chars[i].is_whitespace() {
            i += 1;
            continue;
        }
        let col = i + 1;
        if !chars[i].is_ascii_alphabetic() {
            return Err(err(line, col, format!("unexpected character '{}'", chars[i])));
        }
        // `id` binds tightly so that `id^1xp` splits as `id^1`, `xp`
        if chars[i..].starts_with(&['i', 'd']) {
            i += 2;
            let mut k = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(err(line, start + 1, "expected a number after '^'"));
                }
                let digits: String = chars[start..i].iter().collect();
                k = digits.parse().map_err(|_| err(line, start + 1, "identity count too large"))?;
            }
            out.push((Tok::Id(k), col));
            continue;
        }
        let piece = Piece::ALL.iter().find(|p| chars[i..].starts_with(&p.name().chars().collect::<Vec<_>>()));
        match piece {
            Some(p) => {
                i += p.name().len();
                out.push((Tok::Piece(*p), col));
            }
            None => {
                let word: String = chars[i..].iter().take_while(|c| c.is_ascii_alphanumeric()).collect();
                return Err(err(line, col, format!("unknown piece '{word}'")));
            }
        }
    }
    Ok(out)
}

fn parse_word(rest: &str, line: usize, col0: usize) -> Result<Vec<Orient>> {
    let mut w = vec![];
    for (k, c) in rest.chars().enumerate() {
        match c {
            'd' | 'D' | '↓' => w.push(Orient::Down),
            'u' | 'U' | '↑' => w.push(Orient::Up),
            c if c.is_whitespace() || c == ',' => {}
            c => return Err(err(line, col0 + k, format!("'{c}' is not a strand symbol"))),
        }
    }
    Ok(w)
}

/// Parses and validates a sliced diagram; errors carry line and column.
pub fn parse_sliced(text: &str) -> Result<SlicedDiagram> {
    let mut word: Option<Vec<Orient>> = None;
    let mut bottom = vec![];
    let mut slices = vec![];
    let mut lines_of = vec![];
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let lead = body.len() - body.trim_start().len();
        let trimmed = body.trim_start();
        if word.is_none() {
            let Some(rest) = trimmed.strip_prefix("word") else {
                return Err(err(line, lead + 1, "expected the object word declaration 'word: ...'"));
            };
            let rest = rest.trim_start();
            let rest = rest.strip_prefix(':').unwrap_or(rest);
            let col0 = body[..body.len() - rest.len()].chars().count() + 1;
            let w = parse_word(rest, line, col0)?;
            bottom = w.clone();
            word = Some(w);
            continue;
        }
        let cur = word.as_mut().expect("declared");
        let toks = tokenize(body, line)?;
        let mut left = 0;
        let mut right = 0;
        let mut piece: Option<(Piece, usize)> = None;
        for (t, col) in toks {
            match t {
                Tok::Id(k) if piece.is_none() => left += k,
                Tok::Id(k) => right += k,
                Tok::Piece(p) => {
                    if piece.is_some() {
                        return Err(err(line, col, "only one piece per slice"));
                    }
                    piece = Some((p, col));
                }
            }
        }
        let Some((p, col)) = piece else {
            return Err(err(line, lead + 1, "slice has no piece"));
        };
        let width = left + p.arity_in() + right;
        if width != cur.len() {
            return Err(err(
                line,
                col,
                format!("slice spans {width} strands but the word {} has {}", super::word_string(cur), cur.len()),
            ));
        }
        let s = Slice { left, piece: p };
        *cur = super::apply(cur, s).map_err(|m| err(line, col, m))?;
        slices.push(s);
        lines_of.push(line);
    }
    if word.is_none() {
        return Err(err(1, 1, "missing object word declaration"));
    }
    SlicedDiagram::new(bottom, slices).map_err(|(t, m)| err(lines_of[t], 1, m))
}
