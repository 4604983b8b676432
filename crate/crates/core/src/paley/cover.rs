//! Cyclic covers `T ⋊ S~ -> T ⋊ S` with `S~ = C_(kn)` acting on `T`
//! through `S`.

use std::sync::Arc;

use super::{check_edges, Limits, PaleyParams};
use crate::affine::FiniteGroup;
use crate::dessin::{GroupTag, RegularDessin};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};

/// Element `s q + b` is `x~^s` followed by translation by `b`, for
/// `s in Z_(kn)`; `x~` scales `T` by the multiplier of the base `x`.
#[derive(Clone, Debug)]
pub struct CoverGroup {
    ctx: Arc<FieldCtx>,
    n: u64,
    k: u64,
    /// `a^s` for `s in 0..n`, `a` the base multiplier
    powers: Vec<FieldElement>,
}

impl CoverGroup {
    pub fn new(params: &PaleyParams, k: u64, limits: Limits) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParams(
                "cover degree k must be positive".into(),
            ));
        }
        let ctx = Arc::new(params.field_bounded(limits.max_q)?);
        check_edges(k as u128 * params.n as u128 * ctx.q() as u128, limits)?;
        let a = params.multiplier(&ctx);
        let powers = (0..params.n as i64)
            .map(|s| ctx.pow(a, s).unwrap())
            .collect();
        Ok(CoverGroup {
            ctx,
            n: params.n,
            k,
            powers,
        })
    }

    fn q(&self) -> usize {
        self.ctx.q() as usize
    }

    pub fn element(&self, s: u64, b: FieldElement) -> usize {
        (s % (self.k * self.n)) as usize * self.q() + b.index()
    }

    /// The central subgroup `{x~^s : n | s}` of order `k`.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.k)
            .map(|i| self.element(i * self.n, FieldElement::ZERO))
            .collect()
    }

    /// When `gcd(k, nq) = 1`, the elements of order dividing `nq` form a
    /// normal complement to the kernel.
    pub fn complement(&self) -> Option<Vec<usize>> {
        let base = self.n as usize * self.q();
        let h: Vec<usize> = (0..self.order())
            .filter(|&g| self.pow(g, base as i64) == 0)
            .collect();
        if h.len() != base {
            return None;
        }
        let mut member = vec![false; self.order()];
        for &g in &h {
            member[g] = true;
        }
        let closed = h
            .iter()
            .all(|&a| h.iter().all(|&b| member[self.compose(a, b)]));
        let meets_kernel_trivially = self.kernel().iter().filter(|&&g| member[g]).count() == 1;
        (closed && meets_kernel_trivially).then_some(h)
    }
}

impl FiniteGroup for CoverGroup {
    fn order(&self) -> usize {
        (self.k * self.n) as usize * self.q()
    }

    fn compose(&self, f: usize, g: usize) -> usize {
        let q = self.q();
        let (s1, b1) = (f / q, f % q);
        let (s2, b2) = (g / q, g % q);
        let a2 = self.powers[s2 % self.n as usize];
        let b = self
            .ctx
            .add(self.ctx.mul(a2, self.ctx.element(b1)), self.ctx.element(b2));
        ((s1 + s2) % (self.k * self.n) as usize) * q + b.index()
    }

    fn inverse(&self, f: usize) -> usize {
        let q = self.q();
        let kn = (self.k * self.n) as usize;
        let (s, b) = (f / q, f % q);
        let back = (kn - s) % kn;
        // (x~^s t_b)^-1 = t_(-b) x~^-s = x~^-s t_(-b a^-s)
        let b = self.ctx.neg(
            self.ctx
                .mul(self.powers[back % self.n as usize], self.ctx.element(b)),
        );
        back * q + b.index()
    }
}

#[derive(Clone, Debug)]
pub struct CyclicCover {
    pub group: CoverGroup,
    pub dessin: RegularDessin,
    /// Edges of the kernel of the covering.
    pub kernel: Vec<usize>,
}

/// The `k`-fold cyclic cover of `construct(params)` with
/// `y~ = (x~^c_tilde, translation 1)`.
pub fn cyclic_cover(params: &PaleyParams, k: u64, c_tilde: u64) -> Result<CyclicCover> {
    cyclic_cover_bounded(params, k, c_tilde, Limits::default())
}

pub fn cyclic_cover_bounded(
    params: &PaleyParams,
    k: u64,
    c_tilde: u64,
    limits: Limits,
) -> Result<CyclicCover> {
    let group = CoverGroup::new(params, k, limits)?;
    if c_tilde >= k * params.n || c_tilde % params.n != params.c {
        return Err(Error::InvalidParams(format!(
            "c~ = {c_tilde} must lie in Z_{} and reduce to c = {} modulo {}",
            k * params.n,
            params.c,
            params.n
        )));
    }
    let x = group.element(1, FieldElement::ZERO);
    let y = group.element(c_tilde, FieldElement::ONE);
    let dessin = RegularDessin::from_triple(
        &group,
        x,
        y,
        GroupTag::AffineCover {
            q: group.ctx.q(),
            n: params.n,
            k,
        },
    )?;
    let kernel = group.kernel();
    Ok(CyclicCover {
        group,
        dessin,
        kernel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paley::construct;

    #[test]
    fn group_axioms() {
        let params = PaleyParams::new(3, 7, 1, 1).unwrap();
        let g = CoverGroup::new(&params, 2, Limits::default()).unwrap();
        for a in 0..g.order() {
            assert_eq!(g.compose(a, g.inverse(a)), 0);
            for b in (0..g.order()).step_by(3) {
                for c in (0..g.order()).step_by(5) {
                    assert_eq!(g.compose(g.compose(a, b), c), g.compose(a, g.compose(b, c)));
                }
            }
        }
        for &z in &g.kernel() {
            assert!((0..g.order()).all(|a| g.compose(a, z) == g.compose(z, a)));
        }
    }

    #[test]
    fn trivial_cover_is_the_base() {
        for params in crate::paley::enumerate(4, 5, None).unwrap() {
            let cover = cyclic_cover(&params, 1, params.c).unwrap();
            assert!(cover.dessin.is_isomorphic(&construct(&params).unwrap()));
        }
    }

    #[test]
    fn covers_reduce_to_the_base() {
        for (n, p, k) in [
            (2u64, 5u64, 2u64),
            (2, 7, 3),
            (3, 7, 2),
            (4, 5, 3),
            (3, 2, 2),
        ] {
            for params in crate::paley::enumerate(n, p, None).unwrap() {
                for t in 0..k {
                    let ct = params.c + t * n;
                    let cover = cyclic_cover(&params, k, ct).unwrap();
                    assert_eq!(
                        cover.dessin.edge_count() as u64,
                        k * n * params.q().unwrap()
                    );
                    let base = cover.dessin.quotient(&cover.kernel).unwrap();
                    assert!(
                        base.is_isomorphic(&construct(&params).unwrap()),
                        "{params} k={k} c~={ct}"
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_incongruent_colour() {
        let params = PaleyParams::new(2, 5, 0, 1).unwrap();
        assert!(cyclic_cover(&params, 2, 1).is_err());
        assert!(cyclic_cover(&params, 2, 4).is_err());
        assert!(cyclic_cover(&params, 0, 0).is_err());
    }

    #[test]
    fn complement_when_coprime() {
        let params = PaleyParams::new(2, 5, 0, 1).unwrap();
        let split = cyclic_cover(&params, 3, 0).unwrap();
        assert_eq!(split.group.complement().map(|h| h.len()), Some(10));
        let nonsplit = cyclic_cover(&params, 2, 0).unwrap();
        assert_eq!(nonsplit.group.complement(), None);
    }
}
