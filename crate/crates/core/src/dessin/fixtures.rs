//! Standard small regular dessins.

use super::groups::{AbelianPair, Metacyclic, Quaternion};
use super::{GroupTag, RegularDessin};
use crate::arith;
use crate::error::{Error, Result};

/// The `m`-star: `m` black vertices of valency 1 joined to one white vertex,
/// type `(1, m, m)`, with group `C_m`.
pub fn build_star(m: u64) -> Result<RegularDessin> {
    if m == 0 {
        return Err(Error::InvalidParams("star needs m >= 1".into()));
    }
    let g = AbelianPair {
        a: m as usize,
        b: 1,
    };
    RegularDessin::from_triple(&g, 0, 1 % m as usize, GroupTag::Cyclic { m })
}

/// The Fermat dessin of type `(n, n, n)` with group `C_n x C_n`.
pub fn build_fermat(n: u64) -> RegularDessin {
    assert!(n >= 1, "Fermat dessin needs n >= 1");
    let g = AbelianPair {
        a: n as usize,
        b: n as usize,
    };
    RegularDessin::from_triple(
        &g,
        g.element(1, 0),
        g.element(0, 1),
        GroupTag::AbelianPair { a: n, b: n },
    )
    .expect("the standard basis generates C_n x C_n")
}

/// Type `(4, 4, 4)` and genus 2, with `x = i`, `y = j` in `Q_8`.
pub fn build_quaternion() -> RegularDessin {
    RegularDessin::from_triple(
        &Quaternion,
        Quaternion::I,
        Quaternion::J,
        GroupTag::Quaternion,
    )
    .expect("i and j generate Q_8")
}

/// The nonabelian group of order `p^3` and exponent `p^2` with `x = a`,
/// `y = ab`.
pub fn build_p3(p: u64) -> Result<RegularDessin> {
    if p == 2 || !arith::is_prime(p) {
        return Err(Error::InvalidParams(format!("{p} is not an odd prime")));
    }
    let g = Metacyclic::new(p * p, p, p + 1)?;
    RegularDessin::from_triple(
        &g,
        g.element(1, 0),
        g.element(1, 1),
        GroupTag::Metacyclic {
            n: p * p,
            m: p,
            r: p + 1,
        },
    )
}

/// `<x, y | x^n = y^p = 1, y^-1 x y = x^r>` for `r` of prime order `p`
/// in `Z_n^*`.
pub fn build_metacyclic(n: u64, p: u64, r: u64) -> Result<RegularDessin> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if arith::mult_order(r % n, n)? != p {
        return Err(Error::InvalidParams(format!(
            "{r} does not have order {p} modulo {n}"
        )));
    }
    let g = Metacyclic::new(n, p, r)?;
    RegularDessin::from_triple(
        &g,
        g.element(1, 0),
        g.element(0, 1),
        GroupTag::Metacyclic { n, m: p, r },
    )
}
