//! Deterministic construction of and arithmetic in `GF(p^d)`.
//!
//! The field is `Z_p[t]/(f)` where `f` is the lexicographically smallest monic
//! irreducible polynomial of degree `d`, comparing the non-leading coefficients
//! as a tuple `(a_0, a_1, ..., a_{d-1})`. The canonical multiplicative
//! generator is the smallest element of order `q - 1` in the same tuple order.
//!
//! Elements are packed into a `u32` as `sum c_i p^i`; multiplication goes
//! through exp/log tables built from the canonical generator.

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};

/// Default upper bound on `q = p^d`.
pub const DEFAULT_MAX_Q: u64 = 1 << 20;

/// An element of a field context. Only meaningful together with the
/// [`FieldCtx`] that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Packed index in `[0, q)`.
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone)]
pub struct FieldCtx {
    p: u64,
    d: u32,
    q: u64,
    modulus: Vec<u64>,
    generator: FieldElement,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("d", &self.d)
            .field("modulus", &self.modulus)
            .field("generator", &self.coeffs(self.generator))
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.d == other.d && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// `GF(p^d)` with the default size bound.
    pub fn new(p: u64, d: u32) -> Result<Self> {
        Self::with_max_q(p, d, DEFAULT_MAX_Q)
    }

    pub fn with_max_q(p: u64, d: u32, max_q: u64) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if d < 1 {
            return Err(Error::InvalidDimension(d));
        }
        let limit = max_q.min(u32::MAX as u64);
        let q = p
            .checked_pow(d)
            .filter(|&q| q <= limit)
            .ok_or(Error::SizeBound {
                what: "q",
                value: (p as u128).saturating_pow(d),
                limit: limit as u128,
            })?;

        let modulus = smallest_irreducible(p, d as usize);
        let generator_coeffs = smallest_primitive(p, d as usize, q, &modulus);

        let mut ctx = FieldCtx {
            p,
            d,
            q,
            modulus,
            generator: FieldElement(0),
            exp: Vec::new(),
            log: Vec::new(),
        };
        ctx.generator = ctx.pack(&generator_coeffs);

        let order = (q - 1) as usize;
        let mut exp = Vec::with_capacity(order);
        let mut log = vec![0u32; q as usize];
        let mut cur = vec![1u64];
        for k in 0..order {
            let e = ctx.pack(&cur);
            exp.push(e.0);
            log[e.index()] = k as u32;
            cur = poly_mulmod(&cur, &generator_coeffs, &ctx.modulus, p);
        }
        ctx.exp = exp;
        ctx.log = log;
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Monic modulus, lowest coefficient first, length `d + 1`.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The canonical generator of the multiplicative group.
    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    pub fn contains(&self, e: FieldElement) -> bool {
        (e.0 as u64) < self.q
    }

    pub fn check(&self, e: FieldElement) -> Result<FieldElement> {
        if self.contains(e) {
            Ok(e)
        } else {
            Err(Error::ForeignElement { q: self.q })
        }
    }

    /// Element with packed index `i`.
    pub fn element(&self, i: usize) -> FieldElement {
        assert!(
            (i as u64) < self.q,
            "index {i} out of range for q = {}",
            self.q
        );
        FieldElement(i as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u32).map(FieldElement)
    }

    /// The prime-field residue `r mod p`.
    pub fn from_int(&self, r: i64) -> FieldElement {
        FieldElement(arith::residue(r, self.p) as u32)
    }

    /// If `e` lies in the prime field, its residue in `[0, p)`.
    pub fn to_int(&self, e: FieldElement) -> Option<u64> {
        ((e.0 as u64) < self.p).then_some(e.0 as u64)
    }

    pub fn coeffs(&self, e: FieldElement) -> Vec<u64> {
        let mut v = e.0 as u64;
        (0..self.d)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.d as usize {
            return Err(Error::Parse(format!(
                "expected {} coefficients, got {}",
                self.d,
                coeffs.len()
            )));
        }
        if let Some(c) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::Parse(format!(
                "coefficient {c} not below p = {}",
                self.p
            )));
        }
        Ok(self.pack(coeffs))
    }

    fn pack(&self, coeffs: &[u64]) -> FieldElement {
        let v = coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.p + c);
        FieldElement(v as u32)
    }

    /// Position in the lexicographic order on coefficient tuples
    /// (coefficient of `t^0` most significant).
    pub fn lex_rank(&self, e: FieldElement) -> u64 {
        self.coeffs(e).iter().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if self.d == 1 {
            return FieldElement(((a.0 as u64 + b.0 as u64) % self.p) as u32);
        }
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let (mut out, mut place) = (0u64, 1u64);
        for _ in 0..self.d {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElement(out as u32)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        let mut x = a.0 as u64;
        let (mut out, mut place) = (0u64, 1u64);
        for _ in 0..self.d {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        FieldElement(out as u32)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let order = self.q - 1;
        let k = (self.log[a.index()] as u64 + self.log[b.index()] as u64) % order;
        FieldElement(self.exp[k as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let order = self.q - 1;
        let k = (order - self.log[a.index()] as u64) % order;
        Ok(FieldElement(self.exp[k as usize]))
    }

    /// `a^k` for any integer `k`; negative powers need `a != 0`.
    pub fn pow(&self, a: FieldElement, k: i64) -> Result<FieldElement> {
        if a.0 == 0 {
            return match k.signum() {
                0 => Ok(FieldElement::ONE),
                1 => Ok(FieldElement::ZERO),
                _ => Err(Error::ZeroInverse),
            };
        }
        // square-and-multiply on the discrete log
        let order = (self.q - 1) as i128;
        let e = (k as i128).rem_euclid(order) as u64;
        let base = self.log[a.index()] as u64;
        let k = ((base as u128 * e as u128) % order as u128) as usize;
        Ok(FieldElement(self.exp[k]))
    }

    /// `g^k` for the canonical generator `g`.
    pub fn exp(&self, k: i64) -> FieldElement {
        let order = (self.q - 1) as i64;
        FieldElement(self.exp[k.rem_euclid(order) as usize])
    }

    /// Discrete logarithm to the canonical generator.
    pub fn log(&self, a: FieldElement) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.log[a.index()] as u64)
    }

    /// `e^(p^i)` for `0 <= i < d`.
    pub fn frobenius(&self, e: FieldElement, i: u32) -> Result<FieldElement> {
        if i >= self.d {
            return Err(Error::InvalidParams(format!(
                "Frobenius exponent {i} out of range [0, {})",
                self.d
            )));
        }
        if e.0 == 0 {
            return Ok(e);
        }
        let order = self.q - 1;
        let shift = arith::pow_mod(self.p, i as u64, order.max(1));
        let k = (self.log[e.index()] as u128 * shift as u128 % order as u128) as usize;
        Ok(FieldElement(self.exp[k]))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, e: FieldElement) -> Result<u64> {
        let l = self.log(e)?;
        let order = self.q - 1;
        Ok(order / arith::gcd(l, order))
    }

    /// `g^((q-1)/n)`, the canonical generator of the order-`n` subgroup.
    pub fn subgroup_generator(&self, n: u64) -> Result<FieldElement> {
        let order = self.q - 1;
        if n == 0 || !order.is_multiple_of(n) {
            return Err(Error::NotDivisor { n, order });
        }
        Ok(FieldElement(
            self.exp[(order / n) as usize % order as usize],
        ))
    }

    pub fn format(&self, e: FieldElement) -> String {
        self.coeffs(e)
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(&self, s: &str) -> Result<FieldElement> {
        let coeffs = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::Parse(format!("bad coefficient {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.from_coeffs(&coeffs)
    }
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let f = trim(f.to_vec());
    let lead_inv = arith::pow_mod(*f.last().expect("nonzero divisor"), p - 2, p);
    while r.len() >= f.len() {
        let shift = r.len() - f.len();
        let factor = r.last().unwrap() * lead_inv % p;
        for (i, &c) in f.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - factor * c % p) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(&prod, f, p)
}

fn poly_powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, f, p);
        }
        b = poly_mulmod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin-style test: `f` of degree `d` is irreducible iff it shares no factor
/// with `t^(p^k) - t` for `1 <= k <= d/2`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    let t = vec![0, 1];
    let mut frob = t.clone();
    for _ in 1..=d / 2 {
        frob = poly_powmod(&frob, p, f, p);
        let mut diff = frob.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        let g = poly_gcd(f, &diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// Tuples in lexicographic order with the first entry most significant.
fn lex_tuples(p: u64, d: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = p.pow(d as u32);
    (0..total).map(move |mut r| {
        let mut t = vec![0u64; d];
        for slot in t.iter_mut().rev() {
            *slot = r % p;
            r /= p;
        }
        t
    })
}

fn smallest_irreducible(p: u64, d: usize) -> Vec<u64> {
    lex_tuples(p, d)
        .map(|mut low| {
            low.push(1);
            low
        })
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial exists in every degree")
}

fn smallest_primitive(p: u64, d: usize, q: u64, f: &[u64]) -> Vec<u64> {
    let order = q - 1;
    let primes: Vec<u64> = arith::factorize(order)
        .into_iter()
        .map(|(r, _)| r)
        .collect();
    lex_tuples(p, d)
        .map(trim)
        .filter(|c| !c.is_empty())
        .find(|c| {
            primes
                .iter()
                .all(|&r| trim(poly_powmod(c, order / r, f, p)) != vec![1])
        })
        .map(|mut c| {
            c.resize(d, 0);
            c
        })
        .expect("the multiplicative group of a finite field is cyclic")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(ctx: &FieldCtx, e: FieldElement) -> u64 {
        let mut k = 1;
        let mut x = e;
        while x != FieldElement::ONE {
            x = ctx.mul(x, e);
            k += 1;
        }
        k
    }

    #[test]
    fn prime_field_generator_is_smallest_primitive_root() {
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
            let ctx = FieldCtx::new(p, 1).unwrap();
            let expected = (1..p)
                .find(|&a| {
                    let mut x = a;
                    let mut k = 1;
                    while x != 1 {
                        x = x * a % p;
                        k += 1;
                    }
                    k == p - 1
                })
                .unwrap();
            assert_eq!(ctx.to_int(ctx.generator()), Some(expected), "p = {p}");
        }
        assert_eq!(
            FieldCtx::new(13, 1)
                .unwrap()
                .to_int(FieldCtx::new(13, 1).unwrap().generator()),
            Some(2)
        );
        assert_eq!(FieldCtx::new(2, 1).unwrap().generator(), FieldElement::ONE);
    }

    #[test]
    fn gf4_uses_the_only_irreducible_quadratic() {
        // exhaustive root check over Z_2
        let irreducible: Vec<Vec<u64>> = lex_tuples(2, 2)
            .filter(|c| (0..2).all(|t| (c[0] + c[1] * t + t * t) % 2 != 0))
            .collect();
        assert_eq!(irreducible, vec![vec![1, 1]]);
        let ctx = FieldCtx::new(2, 2).unwrap();
        assert_eq!(ctx.modulus(), &[1, 1, 1]);
        assert_eq!(ctx.element_order(ctx.generator()).unwrap(), 3);
        assert_eq!(ctx.pow(ctx.generator(), 3).unwrap(), FieldElement::ONE);
    }

    #[test]
    fn moduli_have_no_roots_for_small_degree() {
        for (p, d) in [(2u64, 3u32), (3, 2), (3, 3), (5, 2), (5, 3), (7, 2), (2, 2)] {
            let ctx = FieldCtx::new(p, d).unwrap();
            let f = ctx.modulus();
            for t in 0..p {
                let v = f.iter().rev().fold(0, |acc, &c| (acc * t + c) % p);
                assert_ne!(v, 0, "root {t} of modulus for GF({p}^{d})");
            }
            // every smaller monic candidate of the same degree has a root
            let rank = |c: &[u64]| c[..d as usize].iter().fold(0, |a, &x| a * p + x);
            for cand in lex_tuples(p, d as usize) {
                if rank(&cand) >= rank(f) {
                    break;
                }
                let has_root = (0..p).any(|t| {
                    let mut full = cand.clone();
                    full.push(1);
                    full.iter().rev().fold(0, |acc, &c| (acc * t + c) % p) == 0
                });
                assert!(has_root || d > 3, "smaller irreducible {cand:?} skipped");
            }
        }
    }

    #[test]
    fn arithmetic_examples() {
        let ctx = FieldCtx::new(13, 1).unwrap();
        assert_eq!(ctx.mul(ctx.from_int(4), ctx.from_int(10)), ctx.from_int(1));
        assert_eq!(ctx.element_order(ctx.from_int(4)).unwrap(), 6);
        assert_eq!(ctx.inv(FieldElement::ZERO), Err(Error::ZeroInverse));
        assert!(ctx.element_order(FieldElement::ZERO).is_err());
        let f29 = FieldCtx::new(29, 1).unwrap();
        assert_eq!(f29.element_order(f29.from_int(-5)).unwrap(), 7);
        assert_eq!(f29.from_int(-5), f29.from_int(24));
    }

    #[test]
    fn field_axioms_exhaustive_small_fields() {
        for (p, d) in [
            (2u64, 1u32),
            (2, 2),
            (2, 3),
            (3, 2),
            (2, 4),
            (5, 2),
            (7, 2),
            (2, 6),
            (13, 1),
        ] {
            let ctx = FieldCtx::new(p, d).unwrap();
            let els: Vec<_> = ctx.elements().collect();
            for &a in &els {
                assert_eq!(ctx.add(a, ctx.neg(a)), FieldElement::ZERO);
                if a != FieldElement::ZERO {
                    assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), FieldElement::ONE);
                }
                for &b in &els {
                    // table multiplication against the polynomial route
                    let direct = ctx.pack(&poly_mulmod(
                        &trim(ctx.coeffs(a)),
                        &trim(ctx.coeffs(b)),
                        ctx.modulus(),
                        p,
                    ));
                    assert_eq!(ctx.mul(a, b), direct);
                    assert_eq!(ctx.add(a, b), ctx.add(b, a));
                }
            }
            for &a in els.iter().step_by(3) {
                for &b in els.iter().step_by(2) {
                    for &c in &els {
                        assert_eq!(
                            ctx.mul(a, ctx.add(b, c)),
                            ctx.add(ctx.mul(a, b), ctx.mul(a, c))
                        );
                        assert_eq!(ctx.add(a, ctx.add(b, c)), ctx.add(ctx.add(a, b), c));
                        assert_eq!(ctx.mul(a, ctx.mul(b, c)), ctx.mul(ctx.mul(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_an_automorphism_of_order_d() {
        for (p, d) in [(2u64, 2u32), (2, 3), (3, 2), (3, 3), (5, 2), (2, 5)] {
            let ctx = FieldCtx::new(p, d).unwrap();
            for a in ctx.elements() {
                assert_eq!(ctx.frobenius(a, 0).unwrap(), a);
                let mut x = a;
                for _ in 0..d {
                    x = ctx.frobenius(x, 1).unwrap();
                }
                assert_eq!(x, a);
                assert_eq!(ctx.frobenius(a, 1).unwrap(), ctx.pow(a, p as i64).unwrap());
                for b in ctx.elements().step_by(5) {
                    let f = |e| ctx.frobenius(e, 1).unwrap();
                    assert_eq!(f(ctx.add(a, b)), ctx.add(f(a), f(b)));
                    assert_eq!(f(ctx.mul(a, b)), ctx.mul(f(a), f(b)));
                }
            }
            assert!(ctx.frobenius(FieldElement::ONE, d).is_err());
        }
        let gf4 = FieldCtx::new(2, 2).unwrap();
        let g = gf4.generator();
        let g2 = gf4.frobenius(g, 1).unwrap();
        assert_eq!(g2, gf4.mul(g, g));
        assert_ne!(g2, g);
        assert_eq!(gf4.mul(g2, g2), g);
    }

    #[test]
    fn subgroup_generators_have_exact_order() {
        for (p, d) in [(13u64, 1u32), (2, 4), (3, 3), (7, 2), (29, 1)] {
            let ctx = FieldCtx::new(p, d).unwrap();
            let order = ctx.q() - 1;
            for n in (1..=order).filter(|n| order.is_multiple_of(*n)) {
                let x = ctx.subgroup_generator(n).unwrap();
                assert_eq!(brute_order(&ctx, x), n);
            }
            assert_eq!(ctx.subgroup_generator(order).unwrap(), ctx.generator());
            assert_eq!(ctx.subgroup_generator(1).unwrap(), FieldElement::ONE);
        }
        let ctx = FieldCtx::new(13, 1).unwrap();
        let x0 = ctx.subgroup_generator(6).unwrap();
        let mut members: Vec<u64> = (0..6)
            .map(|k| ctx.to_int(ctx.pow(x0, k).unwrap()).unwrap())
            .collect();
        members.sort();
        let mut squares: Vec<u64> = (1..13u64).map(|a| a * a % 13).collect();
        squares.sort();
        squares.dedup();
        assert_eq!(members, squares);
        assert_eq!(members, vec![1, 3, 4, 9, 10, 12]);
        assert!(matches!(
            ctx.subgroup_generator(5),
            Err(Error::NotDivisor { .. })
        ));
    }

    #[test]
    fn construction_errors_and_determinism() {
        assert_eq!(FieldCtx::new(12, 1).unwrap_err(), Error::NotPrime(12));
        assert_eq!(FieldCtx::new(3, 0).unwrap_err(), Error::InvalidDimension(0));
        assert!(matches!(FieldCtx::new(2, 21), Err(Error::SizeBound { .. })));
        assert!(FieldCtx::with_max_q(2, 21, 1 << 21).is_ok());
        let a = FieldCtx::new(3, 4).unwrap();
        let b = FieldCtx::new(3, 4).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.generator(), b.generator());
    }

    #[test]
    fn text_form_round_trips() {
        let ctx = FieldCtx::new(3, 3).unwrap();
        for e in ctx.elements() {
            assert_eq!(ctx.parse(&ctx.format(e)).unwrap(), e);
        }
        assert_eq!(FieldCtx::new(13, 1).unwrap().format(FieldElement(7)), "7");
        assert!(ctx.parse("1,2").is_err());
        assert!(ctx.parse("1,2,3").is_err());
    }
}
