//! Slice-grammar text for the small surgery diagrams used by the checks.

/// `n` kinks (sign of `n`) on the downward strand at position `q` of a word of length `len`.
pub fn kinks(q: usize, len: usize, n: i64) -> String {
    let x = if n > 0 { "xp" } else { "xn" };
    let mut s = String::new();
    for _ in 0..n.abs() {
        s += &format!("id^{} cupr id^{}\nid^{q} {x} id^{}\nid^{} capl id^{}\n", q + 1, len - q - 1, len - q, q + 1, len - q - 1);
    }
    s
}

/// Slices of an unknot with blackboard framing `f`, to be placed on an empty word.
pub fn framed_unknot(f: i64) -> String {
    format!("cupr\n{}capl\n", kinks(0, 2, f))
}

/// A closed diagram: the split union of unknots with the given framings.
pub fn unlink(framings: &[i64]) -> String {
    let mut s = String::from("word:\n");
    for f in framings {
        s += &framed_unknot(*f);
    }
    s
}

/// The Hopf link with framings `a` and `b`.
pub fn hopf(a: i64, b: i64) -> String {
    format!("word:\ncupr\n{}id^2 cupr\n{}id xp id\nid xp id\nid^2 capl\ncapl\n", kinks(0, 2, a), kinks(2, 4, b))
}
