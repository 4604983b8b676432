//! Small concrete groups used by the fixture dessins.

use crate::affine::FiniteGroup;
use crate::arith;
use crate::error::{Error, Result};

/// `C_a x C_b`; element `i + a j` is `(i, j)`.
#[derive(Clone, Copy, Debug)]
pub struct AbelianPair {
    pub a: usize,
    pub b: usize,
}

impl AbelianPair {
    pub fn element(&self, i: usize, j: usize) -> usize {
        i % self.a + self.a * (j % self.b)
    }
}

impl FiniteGroup for AbelianPair {
    fn order(&self) -> usize {
        self.a * self.b
    }

    fn compose(&self, x: usize, y: usize) -> usize {
        self.element(x % self.a + y % self.a, x / self.a + y / self.a)
    }

    fn inverse(&self, x: usize) -> usize {
        self.element(self.a - x % self.a, self.b - x / self.a)
    }
}

/// `Q_8 = {±1, ±i, ±j, ±k}`; element `4 s + u` is `(-1)^s` times unit `u`
/// in the order `1, i, j, k`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Quaternion;

impl Quaternion {
    pub const I: usize = 1;
    pub const J: usize = 2;
    pub const MINUS_ONE: usize = 4;
}

impl FiniteGroup for Quaternion {
    fn order(&self) -> usize {
        8
    }

    fn compose(&self, x: usize, y: usize) -> usize {
        // unit products as (sign, unit)
        const TABLE: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let (s, u) = TABLE[x % 4][y % 4];
        4 * ((s + x / 4 + y / 4) % 2) + u
    }

    fn inverse(&self, x: usize) -> usize {
        if x.is_multiple_of(4) {
            x
        } else {
            x ^ 4
        }
    }
}

/// `<x, y | x^n = y^m = 1, y^-1 x y = x^r>` with `r^m = 1 mod n`; element
/// `i + n j` is `x^i y^j`.
///
/// With `n = p^2`, `m = p`, `r = p + 1` this is the nonabelian group of order
/// `p^3` and exponent `p^2`.
#[derive(Clone, Debug)]
pub struct Metacyclic {
    n: usize,
    m: usize,
    /// `r^-j mod n` for `j in 0..m`
    twist: Vec<usize>,
}

impl Metacyclic {
    pub fn new(n: u64, m: u64, r: u64) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidParams("orders must be positive".into()));
        }
        let r_inv = arith::inv_mod(r, n).ok_or(Error::NotCoprime { n, p: r })?;
        if arith::pow_mod(r, m, n) != 1 % n {
            return Err(Error::InvalidParams(format!("{r}^{m} is not 1 modulo {n}")));
        }
        let twist = (0..m)
            .map(|j| arith::pow_mod(r_inv, j, n) as usize)
            .collect();
        Ok(Metacyclic {
            n: n as usize,
            m: m as usize,
            twist,
        })
    }

    pub fn element(&self, i: usize, j: usize) -> usize {
        i % self.n + self.n * (j % self.m)
    }
}

impl FiniteGroup for Metacyclic {
    fn order(&self) -> usize {
        self.n * self.m
    }

    fn compose(&self, a: usize, b: usize) -> usize {
        let (i1, j1) = (a % self.n, a / self.n);
        let (i2, j2) = (b % self.n, b / self.n);
        // y^j1 x^i2 = x^(i2 r^-j1) y^j1
        self.element(i1 + i2 * self.twist[j1] % self.n, j1 + j2)
    }

    fn inverse(&self, a: usize) -> usize {
        let (i, j) = (a % self.n, a / self.n);
        // (x^i y^j)^-1 = y^-j x^-i = x^(-i r^j) y^-j
        let back = (self.m - j) % self.m;
        let k = (self.n - i) * self.twist[back] % self.n;
        self.element(k, back)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_group(g: &impl FiniteGroup) {
        let n = g.order();
        for a in 0..n {
            assert_eq!(g.compose(a, 0), a);
            assert_eq!(g.compose(0, a), a);
            assert_eq!(g.compose(a, g.inverse(a)), 0);
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.compose(g.compose(a, b), c), g.compose(a, g.compose(b, c)));
                }
            }
        }
    }

    #[test]
    fn group_axioms() {
        check_group(&AbelianPair { a: 4, b: 3 });
        check_group(&Quaternion);
        check_group(&Metacyclic::new(9, 3, 4).unwrap());
        check_group(&Metacyclic::new(7, 3, 2).unwrap());
        check_group(&Metacyclic::new(6, 2, 5).unwrap());
    }

    #[test]
    fn quaternion_relations() {
        let q = Quaternion;
        let (i, j) = (Quaternion::I, Quaternion::J);
        assert_eq!(q.compose(i, i), Quaternion::MINUS_ONE);
        assert_eq!(q.compose(i, j), 3);
        assert_eq!(q.compose(j, i), 7);
        assert_eq!(q.element_order(i), 4);
    }

    #[test]
    fn metacyclic_relation() {
        let g = Metacyclic::new(9, 3, 4).unwrap();
        let (x, y) = (g.element(1, 0), g.element(0, 1));
        let conj = g.compose(g.compose(g.inverse(y), x), y);
        assert_eq!(conj, g.pow(x, 4));
        assert!(Metacyclic::new(9, 3, 2).is_err());
    }
}
