use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::QRational;

/// The bilinear form `B` of the Cartan factor: `Q(x, y) = x^t B y`.
pub const B: [[i64; 2]; 2] = [[0, -1], [-1, -2]];

/// A formal Cartan exponential `xi^E(h)`, `E` an integral quadratic form in the
/// variables `h_{i,s}` (`i` in {1, 2}, `s` a strand).
///
/// Stored as the integer symmetric matrix `M` with even diagonal such that
/// `E(h) = h^t M h / 2`. Variable `h_{i,s}` has index `2 s + i - 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CartanExponent {
    n: usize,
    m: Vec<i64>,
}

pub fn var(i: usize, strand: usize) -> usize {
    debug_assert!(i == 1 || i == 2);
    2 * strand + i - 1
}

impl CartanExponent {
    pub fn zero(n: usize) -> CartanExponent {
        CartanExponent { n, m: vec![0; 4 * n * n] }
    }

    /// From the doubled matrix `M`; rejects asymmetric input or odd diagonal.
    pub fn from_matrix(n: usize, m: Vec<i64>) -> Result<CartanExponent> {
        let d = 2 * n;
        if m.len() != d * d {
            return Err(Error::OutOfRange(format!("expected a {d}x{d} matrix")));
        }
        for a in 0..d {
            if m[a * d + a] % 2 != 0 {
                return Err(Error::OutOfRange("exponent has a non-integral square coefficient".into()));
            }
            for b in 0..a {
                if m[a * d + b] != m[b * d + a] {
                    return Err(Error::OutOfRange("exponent matrix is not symmetric".into()));
                }
            }
        }
        Ok(CartanExponent { n, m })
    }

    /// `sign * Q_{ij}(h) = sign * h_[i]^t B h_[j]`; `i = j` is allowed.
    pub fn cartan_k(sign: i64, i: usize, j: usize, n: usize) -> Result<CartanExponent> {
        for s in [i, j] {
            if s >= n {
                return Err(Error::SlotOutOfRange { slot: s, n });
            }
        }
        let mut e = CartanExponent::zero(n);
        for a in 0..2 {
            for b in 0..2 {
                e.add_at(2 * i + a, 2 * j + b, sign * B[a][b]);
                e.add_at(2 * j + b, 2 * i + a, sign * B[a][b]);
            }
        }
        Ok(e)
    }

    /// `Q_L(h) = sum_{i,j} lk_ij Q_ij(h)`.
    pub fn from_linking(lk: &[Vec<i64>]) -> CartanExponent {
        let n = lk.len();
        let mut e = CartanExponent::zero(n);
        for i in 0..n {
            for j in 0..n {
                let q = CartanExponent::cartan_k(lk[i][j], i, j, n).expect("in range");
                e = &e + &q;
            }
        }
        e
    }

    fn add_at(&mut self, a: usize, b: usize, x: i64) {
        let d = 2 * self.n;
        self.m[a * d + b] += x;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// Entry of the doubled matrix `M`.
    pub fn doubled(&self, a: usize, b: usize) -> i64 {
        self.m[a * self.dim() + b]
    }

    pub fn matrix(&self) -> &[i64] {
        &self.m
    }

    /// Entry of the symmetric matrix `E` with `E(h) = sum_{a,b} E_ab h_a h_b`.
    pub fn entry(&self, a: usize, b: usize) -> QRational {
        QRational::new(self.doubled(a, b), 2)
    }

    /// Coefficient of the monomial `h_a h_b` in the expanded form.
    pub fn coefficient(&self, a: usize, b: usize) -> i64 {
        if a == b {
            self.doubled(a, a) / 2
        } else {
            self.doubled(a, b)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().all(|x| *x == 0)
    }

    /// `M v`.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let d = self.dim();
        (0..d).map(|a| (0..d).map(|b| self.m[a * d + b] * v[b]).sum()).collect()
    }

    /// `E(v)` at an integer point.
    pub fn value_int(&self, v: &[i64]) -> i64 {
        let mv = self.apply(v);
        let twice: i64 = v.iter().zip(&mv).map(|(x, y)| x * y).sum();
        twice / 2
    }

    /// `E(h)` at a rational point.
    pub fn value(&self, h: &[QRational]) -> QRational {
        let d = self.dim();
        let mut s = QRational::zero();
        for a in 0..d {
            for b in 0..d {
                let c = self.m[a * d + b];
                if c != 0 {
                    s = s + (h[a] * h[b]).mul_int(c);
                }
            }
        }
        s * QRational::new(1, 2)
    }

    /// `xi^E (x) w = w xi^c K^k xi^E` for a term `w` of weight vector `v`:
    /// returns the `k`-exponents `k = M v` (per variable) and `c = E(v)`.
    pub fn conjugate_past(&self, v: &[i64]) -> (Vec<i64>, i64) {
        (self.apply(v), self.value_int(v))
    }

    /// Substitution `h = P h' + nu` for an integer `dim x dim'` matrix `P`
    /// (row-major): returns the new exponent `P^t M P` on `n'` strands. The
    /// per-term factor is given by [`CartanExponent::shift_factor`].
    pub fn substitute(&self, p: &[i64], n_new: usize) -> CartanExponent {
        let (d, d2) = (self.dim(), 2 * n_new);
        assert_eq!(p.len(), d * d2);
        let mut mp = vec![0i64; d * d2];
        for a in 0..d {
            for b in 0..d {
                let x = self.m[a * d + b];
                if x == 0 {
                    continue;
                }
                for c in 0..d2 {
                    mp[a * d2 + c] += x * p[b * d2 + c];
                }
            }
        }
        let mut out = vec![0i64; d2 * d2];
        for a in 0..d {
            for c in 0..d2 {
                let pa = p[a * d2 + c];
                if pa == 0 {
                    continue;
                }
                for e in 0..d2 {
                    out[c * d2 + e] += pa * mp[a * d2 + e];
                }
            }
        }
        CartanExponent { n: n_new, m: out }
    }

    /// For `h = P h' + nu`: `xi^E(h) = xi^c K'^k xi^E'(h')` with `k = P^t M nu`
    /// (new variables) and `c = E(nu)`.
    pub fn shift_factor(&self, p: &[i64], n_new: usize, nu: &[i64]) -> (Vec<i64>, i64) {
        let d2 = 2 * n_new;
        let mnu = self.apply(nu);
        let k = (0..d2).map(|c| (0..self.dim()).map(|a| p[a * d2 + c] * mnu[a]).sum()).collect();
        (k, self.value_int(nu))
    }

    /// Restriction `h_s = 0` for the given strand, which is removed.
    pub fn drop_strand(&self, s: usize) -> CartanExponent {
        let keep: Vec<usize> = (0..self.dim()).filter(|a| a / 2 != s).collect();
        let m = keep.iter().flat_map(|a| keep.iter().map(move |b| (a, b))).map(|(a, b)| self.doubled(*a, *b)).collect();
        CartanExponent { n: self.n - 1, m }
    }

    /// Places strand `s` of `self` at strand `pos[s]` of an `n`-strand form.
    pub fn place(&self, n: usize, pos: &[usize]) -> CartanExponent {
        let mut e = CartanExponent::zero(n);
        let d = 2 * n;
        for a in 0..self.dim() {
            for b in 0..self.dim() {
                let (na, nb) = (2 * pos[a / 2] + a % 2, 2 * pos[b / 2] + b % 2);
                e.m[na * d + nb] += self.doubled(a, b);
            }
        }
        e
    }
}

impl std::ops::Add for &CartanExponent {
    type Output = CartanExponent;
    fn add(self, o: &CartanExponent) -> CartanExponent {
        assert_eq!(self.n, o.n, "exponents on different strand counts");
        CartanExponent { n: self.n, m: self.m.iter().zip(&o.m).map(|(a, b)| a + b).collect() }
    }
}

impl std::ops::Neg for &CartanExponent {
    type Output = CartanExponent;
    fn neg(self) -> CartanExponent {
        CartanExponent { n: self.n, m: self.m.iter().map(|a| -a).collect() }
    }
}

impl fmt::Debug for CartanExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CartanExponent({self})")
    }
}

impl fmt::Display for CartanExponent {
    /// Expanded form, e.g. `-h1_1 h2_2 - 2 h2_1 h2_2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |a: usize| format!("h{}_{}", a % 2 + 1, a / 2 + 1);
        let mut first = true;
        for a in 0..self.dim() {
            for b in a..self.dim() {
                let c = self.coefficient(a, b);
                if c == 0 {
                    continue;
                }
                let sign = if c < 0 { "-" } else if first { "" } else { "+" };
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{sign}")?;
                if !first && c != 0 {
                    write!(f, " ")?;
                }
                if c.abs() != 1 {
                    write!(f, "{} ", c.abs())?;
                }
                if a == b {
                    write!(f, "{}^2", name(a))?;
                } else {
                    write!(f, "{} {}", name(a), name(b))?;
                }
                first = false;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_k_examples() {
        let k = CartanExponent::cartan_k(1, 0, 1, 2).unwrap();
        assert_eq!(k.coefficient(var(1, 0), var(2, 1)), -1);
        assert_eq!(k.coefficient(var(2, 0), var(1, 1)), -1);
        assert_eq!(k.coefficient(var(2, 0), var(2, 1)), -2);
        assert_eq!(k.coefficient(var(1, 0), var(1, 1)), 0);
        assert_eq!(k.coefficient(var(1, 0), var(2, 0)), 0);
        assert_eq!(-&k, CartanExponent::cartan_k(-1, 0, 1, 2).unwrap());
        let s = CartanExponent::cartan_k(1, 0, 0, 1).unwrap();
        assert_eq!(s.coefficient(0, 1), -2);
        assert_eq!(s.coefficient(1, 1), -2);
        assert_eq!(s.coefficient(0, 0), 0);
        assert_eq!(s.to_string(), "-2 h1_1 h2_1 - 2 h2_1^2");
        assert!(CartanExponent::cartan_k(1, 0, 2, 2).is_err());
    }

    #[test]
    fn conjugation_example() {
        // E = -h_{1,1} h_{2,2}; moving past e1 on strand 1 gives k_{2,2}^-2
        let mut m = vec![0; 16];
        m[var(1, 0) * 4 + var(2, 1)] = -1;
        m[var(2, 1) * 4 + var(1, 0)] = -1;
        let e = CartanExponent::from_matrix(2, m).unwrap();
        let (k, c) = e.conjugate_past(&[2, -1, 0, 0]);
        assert_eq!(k, vec![0, 0, 0, -2]);
        assert_eq!(c, 0);
        let (k, c) = e.conjugate_past(&[0, 0, 0, 0]);
        assert!(k.iter().all(|x| *x == 0) && c == 0);
    }

    #[test]
    fn linking_form() {
        let q = CartanExponent::from_linking(&[vec![0, 1], vec![1, 0]]);
        let k = CartanExponent::cartan_k(1, 0, 1, 2).unwrap();
        assert_eq!(q, &k + &k);
        let q = CartanExponent::from_linking(&[vec![1]]);
        assert_eq!(q, CartanExponent::cartan_k(1, 0, 0, 1).unwrap());
    }

    #[test]
    fn substitution_matches_evaluation() {
        let k = CartanExponent::cartan_k(1, 0, 1, 2).unwrap();
        let e = &k + &CartanExponent::cartan_k(-1, 1, 1, 2).unwrap();
        // h_0 = h'_0 + h'_1, h_1 = -h'_1 (one strand each)
        let p = vec![1, 0, 1, 0, 0, 1, 0, 1, 0, 0, -1, 0, 0, 0, 0, -1];
        let nu = [1, -2, 3, 0];
        let e2 = e.substitute(&p, 2);
        let (kk, c) = e.shift_factor(&p, 2, &nu);
        for hp in [[0i64, 0, 0, 0], [1, 2, -1, 3], [-2, 5, 4, -1]] {
            let h: Vec<i64> = (0..4).map(|a| (0..4).map(|b| p[a * 4 + b] * hp[b]).sum::<i64>() + nu[a]).collect();
            let lhs = e.value_int(&h);
            let rhs = c + kk.iter().zip(&hp).map(|(x, y)| x * y).sum::<i64>() + e2.value_int(&hp);
            assert_eq!(lhs, rhs);
        }
    }
}
