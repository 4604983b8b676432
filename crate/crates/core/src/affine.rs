//! Affine and semi-affine maps of a finite field and the groups `T ⋊ S`.
//!
//! Products are read left to right: `f.then(g)` applies `f` first. The same
//! convention is used for words, edge actions and cosets everywhere else.

use std::sync::Arc;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};

/// A finite group with elements numbered `0..order()`, identity at 0.
pub trait FiniteGroup {
    fn order(&self) -> usize;
    /// Product `a` then `b`.
    fn compose(&self, a: usize, b: usize) -> usize;
    fn inverse(&self, a: usize) -> usize;

    fn identity(&self) -> usize {
        0
    }

    fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inverse(a) } else { a };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.compose(acc, b);
            }
            b = self.compose(b, b);
            e >>= 1;
        }
        acc
    }

    fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity() {
            x = self.compose(x, a);
            k += 1;
        }
        k
    }
}

/// `t -> a t + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    pub a: FieldElement,
    pub b: FieldElement,
}

impl AffineMap {
    pub const IDENTITY: AffineMap = AffineMap {
        a: FieldElement::ONE,
        b: FieldElement::ZERO,
    };

    pub fn new(ctx: &FieldCtx, a: FieldElement, b: FieldElement) -> Result<Self> {
        ctx.check(b)?;
        if ctx.check(a)? == FieldElement::ZERO {
            return Err(Error::InvalidParams(
                "affine multiplier must be nonzero".into(),
            ));
        }
        Ok(AffineMap { a, b })
    }

    pub fn apply(&self, ctx: &FieldCtx, t: FieldElement) -> FieldElement {
        ctx.add(ctx.mul(self.a, t), self.b)
    }

    /// `self` first, then `g`.
    pub fn then(&self, ctx: &FieldCtx, g: &AffineMap) -> AffineMap {
        AffineMap {
            a: ctx.mul(self.a, g.a),
            b: ctx.add(ctx.mul(g.a, self.b), g.b),
        }
    }

    pub fn inverse(&self, ctx: &FieldCtx) -> AffineMap {
        let a = ctx.inv(self.a).expect("affine multiplier is nonzero");
        AffineMap {
            a,
            b: ctx.neg(ctx.mul(a, self.b)),
        }
    }

    pub fn format(&self, ctx: &FieldCtx) -> String {
        format!("a={};b={}", ctx.format(self.a), ctx.format(self.b))
    }
}

/// `t -> a t^(p^i) + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SemiaffineMap {
    pub a: FieldElement,
    pub b: FieldElement,
    pub i: u32,
}

impl From<AffineMap> for SemiaffineMap {
    fn from(f: AffineMap) -> Self {
        SemiaffineMap {
            a: f.a,
            b: f.b,
            i: 0,
        }
    }
}

impl SemiaffineMap {
    pub fn new(ctx: &FieldCtx, a: FieldElement, b: FieldElement, i: u32) -> Result<Self> {
        AffineMap::new(ctx, a, b)?;
        if i >= ctx.d() {
            return Err(Error::InvalidParams(format!(
                "Frobenius exponent {i} out of range [0, {})",
                ctx.d()
            )));
        }
        Ok(SemiaffineMap { a, b, i })
    }

    fn frob(ctx: &FieldCtx, e: FieldElement, i: u32) -> FieldElement {
        ctx.frobenius(e, i).expect("exponent reduced mod d")
    }

    pub fn apply(&self, ctx: &FieldCtx, t: FieldElement) -> FieldElement {
        ctx.add(ctx.mul(self.a, Self::frob(ctx, t, self.i)), self.b)
    }

    /// `self` first, then `g`.
    pub fn then(&self, ctx: &FieldCtx, g: &SemiaffineMap) -> SemiaffineMap {
        SemiaffineMap {
            a: ctx.mul(g.a, Self::frob(ctx, self.a, g.i)),
            b: ctx.add(ctx.mul(g.a, Self::frob(ctx, self.b, g.i)), g.b),
            i: (self.i + g.i) % ctx.d(),
        }
    }

    pub fn inverse(&self, ctx: &FieldCtx) -> SemiaffineMap {
        let back = (ctx.d() - self.i) % ctx.d();
        let a_inv = ctx.inv(self.a).expect("affine multiplier is nonzero");
        SemiaffineMap {
            a: Self::frob(ctx, a_inv, back),
            b: ctx.neg(Self::frob(ctx, ctx.mul(a_inv, self.b), back)),
            i: back,
        }
    }

    pub fn format(&self, ctx: &FieldCtx) -> String {
        format!(
            "a={};b={};i={}",
            ctx.format(self.a),
            ctx.format(self.b),
            self.i
        )
    }
}

/// `alpha^-1 f alpha`; semi-affine conjugation normalises the affine group.
pub fn aut_conjugate(ctx: &FieldCtx, alpha: &SemiaffineMap, f: &AffineMap) -> AffineMap {
    let r = alpha
        .inverse(ctx)
        .then(ctx, &SemiaffineMap::from(*f))
        .then(ctx, alpha);
    debug_assert_eq!(r.i, 0);
    AffineMap { a: r.a, b: r.b }
}

/// The group `{t -> a t + b : a in S, b in F_q}` for the order-`n` subgroup
/// `S` of the multiplicative group.
///
/// Element `k * q + b` is the map with multiplier `x0^k` and translation with
/// packed index `b`, where `x0` is the canonical generator of `S`.
#[derive(Clone, Debug)]
pub struct AffineGroup {
    ctx: Arc<FieldCtx>,
    n: u64,
    step: u64,
    x0: FieldElement,
}

impl AffineGroup {
    pub fn new(ctx: Arc<FieldCtx>, n: u64) -> Result<Self> {
        let x0 = ctx.subgroup_generator(n)?;
        let step = (ctx.q() - 1) / n;
        Ok(AffineGroup { ctx, n, step, x0 })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn ctx_arc(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// The canonical generator `x0` of `S`.
    pub fn x0(&self) -> FieldElement {
        self.x0
    }

    /// Index of multiplication by `x0`.
    pub fn x(&self) -> usize {
        self.index_of(&AffineMap {
            a: self.x0,
            b: FieldElement::ZERO,
        })
        .expect("x0 lies in S")
    }

    fn q(&self) -> usize {
        self.ctx.q() as usize
    }

    pub fn element(&self, idx: usize) -> AffineMap {
        let (k, b) = (idx / self.q(), idx % self.q());
        AffineMap {
            a: self.ctx.exp((k as u64 * self.step) as i64),
            b: self.ctx.element(b),
        }
    }

    /// Exponent `k` with `a = x0^k`, if `a` lies in `S`.
    pub fn multiplier_exponent(&self, a: FieldElement) -> Option<u64> {
        let l = self.ctx.log(a).ok()?;
        (l % self.step == 0).then_some(l / self.step)
    }

    pub fn index_of(&self, f: &AffineMap) -> Option<usize> {
        if !self.ctx.contains(f.b) {
            return None;
        }
        let k = self.multiplier_exponent(f.a)?;
        Some(k as usize * self.q() + f.b.index())
    }

    pub fn elements(&self) -> impl Iterator<Item = AffineMap> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }
}

impl FiniteGroup for AffineGroup {
    fn order(&self) -> usize {
        self.n as usize * self.q()
    }

    fn compose(&self, f: usize, g: usize) -> usize {
        let q = self.q();
        let (k1, b1) = (f / q, f % q);
        let (k2, b2) = (g / q, g % q);
        let a2 = self.ctx.exp((k2 as u64 * self.step) as i64);
        let b = self
            .ctx
            .add(self.ctx.mul(a2, self.ctx.element(b1)), self.ctx.element(b2));
        ((k1 + k2) % self.n as usize) * q + b.index()
    }

    fn inverse(&self, f: usize) -> usize {
        let inv = self.element(f).inverse(&self.ctx);
        self.index_of(&inv).expect("closed under inversion")
    }
}

/// The three conditions of the primitivity criterion for `T ⋊ S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimitivityConditions {
    /// `S` acts irreducibly on `F_q` as a `Z_p`-space. Only evaluated for
    /// `q <= IRREDUCIBILITY_SCAN_MAX_Q`.
    pub irreducible: Option<bool>,
    /// `S` spans `F_q` additively.
    pub spans: bool,
    /// `p` has multiplicative order `d` modulo `n`.
    pub order_matches: bool,
}

impl PrimitivityConditions {
    /// All evaluated conditions agree.
    pub fn consistent(&self) -> bool {
        self.irreducible.is_none_or(|a| a == self.spans) && self.spans == self.order_matches
    }
}

pub const IRREDUCIBILITY_SCAN_MAX_Q: u64 = 1 << 12;

/// Row-reduced basis over `Z_p`, grown one vector at a time.
struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    fn new(p: u64) -> Self {
        Echelon {
            p,
            rows: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn insert(&mut self, mut v: Vec<u64>) {
        let p = self.p;
        for (pivot, row) in &self.rows {
            let f = v[*pivot];
            if f != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = (*x + p - f * r % p) % p;
                }
            }
        }
        if let Some(pivot) = v.iter().position(|&x| x != 0) {
            let inv = arith::inv_mod(v[pivot], p).expect("p is prime");
            for x in v.iter_mut() {
                *x = *x * inv % p;
            }
            self.rows.push((pivot, v));
        }
    }
}

fn spans_space(vectors: impl Iterator<Item = Vec<u64>>, p: u64, d: usize) -> bool {
    let mut basis = Echelon::new(p);
    for v in vectors {
        basis.insert(v);
        if basis.rank() == d {
            return true;
        }
    }
    false
}

pub fn primitivity_conditions(ctx: &FieldCtx, n: u64) -> Result<PrimitivityConditions> {
    let order = ctx.q() - 1;
    if n == 0 || !order.is_multiple_of(n) {
        return Err(Error::NotDivisor { n, order });
    }
    if n == 1 {
        return Err(Error::NotApplicable(
            "the conditions are vacuous for the trivial subgroup".into(),
        ));
    }
    let x0 = ctx.subgroup_generator(n)?;
    let s: Vec<FieldElement> = (0..n as i64).map(|k| ctx.pow(x0, k).unwrap()).collect();
    let d = ctx.d() as usize;

    let spans = spans_space(s.iter().map(|&e| ctx.coeffs(e)), ctx.p(), d);
    let order_matches = arith::mult_order(ctx.p(), n)? == ctx.d() as u64;
    let irreducible = (ctx.q() <= IRREDUCIBILITY_SCAN_MAX_Q).then(|| {
        // Every invariant subspace contains the span of some orbit S v, and
        // the span only depends on the orbit, so one v per orbit suffices.
        let mut seen = vec![false; ctx.q() as usize];
        ctx.elements().skip(1).all(|v| {
            if seen[v.index()] {
                return true;
            }
            let orbit: Vec<FieldElement> = s.iter().map(|&a| ctx.mul(a, v)).collect();
            for w in &orbit {
                seen[w.index()] = true;
            }
            spans_space(orbit.iter().map(|&w| ctx.coeffs(w)), ctx.p(), d)
        })
    });
    Ok(PrimitivityConditions {
        irreducible,
        spans,
        order_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64, d: u32) -> Arc<FieldCtx> {
        Arc::new(FieldCtx::new(p, d).unwrap())
    }

    #[test]
    fn composition_order_is_left_to_right() {
        let ctx = gf(13, 1);
        let f = AffineMap {
            a: ctx.from_int(4),
            b: ctx.from_int(0),
        };
        let g = AffineMap {
            a: ctx.from_int(1),
            b: ctx.from_int(1),
        };
        assert_eq!(
            f.then(&ctx, &g),
            AffineMap {
                a: ctx.from_int(4),
                b: ctx.from_int(1)
            }
        );
        assert_eq!(
            g.then(&ctx, &f),
            AffineMap {
                a: ctx.from_int(4),
                b: ctx.from_int(4)
            }
        );
        for t in [0, 1] {
            let t = ctx.from_int(t);
            assert_eq!(
                f.then(&ctx, &g).apply(&ctx, t),
                g.apply(&ctx, f.apply(&ctx, t))
            );
            assert_eq!(
                g.then(&ctx, &f).apply(&ctx, t),
                f.apply(&ctx, g.apply(&ctx, t))
            );
        }
        assert_eq!(f.then(&ctx, &AffineMap::IDENTITY), f);
        assert_eq!(f.inverse(&ctx).then(&ctx, &f), AffineMap::IDENTITY);
    }

    #[test]
    fn conjugation_example() {
        let ctx = gf(13, 1);
        let f = AffineMap {
            a: ctx.from_int(4),
            b: ctx.from_int(0),
        };
        let tr = SemiaffineMap {
            a: ctx.from_int(1),
            b: ctx.from_int(1),
            i: 0,
        };
        let c = aut_conjugate(&ctx, &tr, &f);
        assert_eq!(
            c,
            AffineMap {
                a: ctx.from_int(4),
                b: ctx.from_int(10)
            }
        );
        assert_eq!(c.apply(&ctx, ctx.from_int(0)), ctx.from_int(10));
        assert_eq!(aut_conjugate(&ctx, &AffineMap::IDENTITY.into(), &f), f);
    }

    #[test]
    fn semiaffine_maps_form_a_group_acting_correctly() {
        let ctx = gf(2, 3);
        let maps: Vec<SemiaffineMap> = ctx
            .elements()
            .skip(1)
            .step_by(2)
            .flat_map(|a| ctx.elements().step_by(3).map(move |b| (a, b)))
            .flat_map(|(a, b)| (0..3).map(move |i| SemiaffineMap { a, b, i }))
            .collect();
        for f in &maps {
            let inv = f.inverse(&ctx);
            assert_eq!(f.then(&ctx, &inv), AffineMap::IDENTITY.into());
            for g in maps.iter().step_by(7) {
                let fg = f.then(&ctx, g);
                for t in ctx.elements() {
                    assert_eq!(fg.apply(&ctx, t), g.apply(&ctx, f.apply(&ctx, t)));
                }
            }
        }
    }

    #[test]
    fn conjugation_preserves_order_and_translations() {
        let ctx = gf(3, 2);
        let group = AffineGroup::new(ctx.clone(), 8).unwrap();
        let alphas = [
            SemiaffineMap {
                a: ctx.element(4),
                b: ctx.element(2),
                i: 1,
            },
            SemiaffineMap {
                a: ctx.element(1),
                b: ctx.element(7),
                i: 0,
            },
            SemiaffineMap {
                a: ctx.element(5),
                b: ctx.element(0),
                i: 1,
            },
        ];
        for idx in 0..group.order() {
            let f = group.element(idx);
            for alpha in &alphas {
                let c = aut_conjugate(&ctx, alpha, &f);
                let ci = group.index_of(&c).unwrap();
                assert_eq!(group.element_order(ci), group.element_order(idx));
                if f.a == FieldElement::ONE {
                    assert_eq!(c.a, FieldElement::ONE);
                }
            }
        }
    }

    fn closure_size(group: &AffineGroup) -> usize {
        let ctx = group.ctx();
        let gens = [
            AffineMap {
                a: group.x0(),
                b: FieldElement::ZERO,
            },
            AffineMap {
                a: FieldElement::ONE,
                b: FieldElement::ONE,
            },
        ];
        let mut seen = std::collections::HashSet::from([AffineMap::IDENTITY]);
        let mut frontier = vec![AffineMap::IDENTITY];
        while let Some(f) = frontier.pop() {
            for g in &gens {
                let h = f.then(ctx, g);
                if seen.insert(h) {
                    frontier.push(h);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn group_orders() {
        let g = AffineGroup::new(gf(13, 1), 6).unwrap();
        assert_eq!(g.order(), 78);
        let t = AffineGroup::new(gf(7, 1), 1).unwrap();
        assert_eq!(t.order(), 7);
        assert!((0..7).all(|i| t.element(i).a == FieldElement::ONE));
        let agl8 = AffineGroup::new(gf(2, 3), 7).unwrap();
        assert_eq!(agl8.order(), 56);
        assert!(AffineGroup::new(gf(13, 1), 5).is_err());
    }

    #[test]
    fn table_product_matches_map_composition() {
        for (p, d, n) in [
            (13u64, 1u32, 6u64),
            (2, 3, 7),
            (3, 2, 4),
            (5, 2, 3),
            (7, 1, 1),
        ] {
            let g = AffineGroup::new(gf(p, d), n).unwrap();
            // an S-orbit of 1 spans the additive group, so x0 and t+1 generate
            if n > 1 || d == 1 {
                let full = primitivity_conditions(g.ctx(), n)
                    .map(|c| c.spans)
                    .unwrap_or(true);
                if full {
                    assert_eq!(closure_size(&g), g.order());
                }
            }
            for i in 0..g.order() {
                assert_eq!(g.index_of(&g.element(i)), Some(i));
                assert_eq!(g.compose(i, g.inverse(i)), 0);
                for j in (0..g.order()).step_by(5) {
                    let k = g.compose(i, j);
                    assert_eq!(g.element(k), g.element(i).then(g.ctx(), &g.element(j)));
                }
            }
            assert_eq!(g.element_order(g.x()), n as usize);
            let translations = (0..g.order())
                .filter(|&i| g.element(i).a == FieldElement::ONE)
                .count();
            assert_eq!(translations as u64, g.ctx().q());
        }
    }

    #[test]
    fn primitivity_condition_examples() {
        let all = |c: PrimitivityConditions| (c.irreducible, c.spans, c.order_matches);
        assert_eq!(
            all(primitivity_conditions(&gf(13, 1), 6).unwrap()),
            (Some(true), true, true)
        );
        assert_eq!(
            all(primitivity_conditions(&gf(2, 2), 3).unwrap()),
            (Some(true), true, true)
        );
        assert_eq!(
            all(primitivity_conditions(&gf(3, 2), 2).unwrap()),
            (Some(false), false, false)
        );
        assert!(matches!(
            primitivity_conditions(&gf(13, 1), 1),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            primitivity_conditions(&gf(13, 1), 5),
            Err(Error::NotDivisor { .. })
        ));
    }

    #[test]
    fn primitivity_conditions_agree_everywhere_small() {
        for q in 2..=(1u64 << 12) {
            let Some((p, d)) = arith::prime_power(q) else {
                continue;
            };
            let ctx = FieldCtx::new(p, d).unwrap();
            let order = q - 1;
            for n in (2..=order).filter(|n| order % n == 0) {
                let c = primitivity_conditions(&ctx, n).unwrap();
                assert!(c.irreducible.is_some());
                assert!(c.consistent(), "q = {q}, n = {n}: {c:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn affine_group_axioms(i in 0usize..78, j in 0usize..78, k in 0usize..78) {
            let g = AffineGroup::new(gf(13, 1), 6).unwrap();
            prop_assert_eq!(g.compose(g.compose(i, j), k), g.compose(i, g.compose(j, k)));
            prop_assert_eq!(g.compose(i, 0), i);
            prop_assert_eq!(g.compose(0, i), i);
        }
    }
}
