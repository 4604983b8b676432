//! Matching relator words in `x, y` against the generalised Paley groups.
//!
//! Words use `x`, `y`, `z` and their inverses `X`, `Y`, `Z`, read left to
//! right, with `z = (xy)^-1 = YX` and `Z = xy`.

use crate::affine::AffineMap;
use crate::arith;
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::paley::{self, PaleyParams};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    relators: Vec<String>,
}

impl Presentation {
    pub fn new<S: AsRef<str>>(relators: &[S]) -> Result<Self> {
        let relators: Vec<String> = relators
            .iter()
            .map(|r| r.as_ref().trim().to_string())
            .collect();
        for r in &relators {
            if let Some(ch) = r.chars().find(|ch| !"xXyYzZ".contains(*ch)) {
                return Err(Error::Parse(format!("relator {r:?} contains {ch:?}")));
            }
            if r.is_empty() {
                return Err(Error::Parse("empty relator".into()));
            }
        }
        Ok(Presentation { relators })
    }

    /// One relator per line or separated by commas; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let words: Vec<&str> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(|l| l.split(','))
            .map(str::trim)
            .filter(|w| !w.is_empty())
            .collect();
        Self::new(&words)
    }

    pub fn relators(&self) -> &[String] {
        &self.relators
    }

    /// Exponent sums of `x` and `y` in each relator.
    fn abelianized(&self) -> Vec<(i64, i64)> {
        self.relators
            .iter()
            .map(|r| {
                r.chars().fold((0, 0), |(a, b), ch| match ch {
                    'x' => (a + 1, b),
                    'X' => (a - 1, b),
                    'y' => (a, b + 1),
                    'Y' => (a, b - 1),
                    'z' => (a - 1, b - 1),
                    _ => (a + 1, b + 1),
                })
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationMatch {
    /// Parameters with the actual `j` used, not necessarily canonical.
    pub params: PaleyParams,
    /// The multiplier of `x` as a residue mod `p`, signed, when `d = 1`.
    pub r: Option<i64>,
}

fn evaluate(word: &str, ctx: &FieldCtx, x: AffineMap, y: AffineMap) -> AffineMap {
    let z = x.then(ctx, &y).inverse(ctx);
    word.chars().fold(AffineMap::IDENTITY, |acc, ch| {
        let g = match ch {
            'x' => x,
            'X' => x.inverse(ctx),
            'y' => y,
            'Y' => y.inverse(ctx),
            'z' => z,
            _ => z.inverse(ctx),
        };
        acc.then(ctx, &g)
    })
}

/// Every `P(x^j, c)` over `GF(p^d)`, `d = ord_n(p)`, satisfying all relators.
/// An empty presentation is satisfied by every candidate.
pub fn match_presentation(n: u64, p: u64, pres: &Presentation) -> Result<Vec<PresentationMatch>> {
    let d = paley::order_mod(p, n)?;
    let ctx = FieldCtx::new(p, d)?;
    let mut out = Vec::new();
    for j in arith::units(n) {
        let j = if n == 1 { 1 } else { j };
        for c in 0..n {
            let params = PaleyParams::new(n, p, c, j)?;
            let (x, y) = params.generators(&ctx);
            if pres
                .relators()
                .iter()
                .all(|w| evaluate(w, &ctx, x, y) == AffineMap::IDENTITY)
            {
                let r = if d == 1 {
                    ctx.to_int(x.a).map(|a| arith::signed_residue(a, p))
                } else {
                    None
                };
                out.push(PresentationMatch { params, r });
            }
        }
    }
    Ok(out)
}

/// The colours `c` mod `n` with `y = x^c` in the abelianisation of the
/// group presented by the relators together with `x^n`.
pub fn abelianized_colours(n: u64, pres: &Presentation) -> Vec<u64> {
    let mut rows = pres.abelianized();
    rows.push((n as i64, 0));
    let (g0, h, g1) = hermite_2d(&rows);
    // (-c, 1) must lie in the lattice spanned by (g0, h), (0, g1)
    (0..n)
        .filter(|&c| {
            let u = -(c as i64);
            let k = if g0 == 0 {
                if u != 0 {
                    return false;
                }
                0
            } else if u % g0 != 0 {
                return false;
            } else {
                u / g0
            };
            let rest = 1 - k * h;
            if g1 == 0 {
                rest == 0
            } else {
                rest % g1 == 0
            }
        })
        .collect()
}

/// Basis `(g0, h), (0, g1)` of the lattice spanned by `rows`.
fn hermite_2d(rows: &[(i64, i64)]) -> (i64, i64, i64) {
    let mut pivot = (0i64, 0i64);
    let mut g1 = 0i64;
    for &(a, b) in rows {
        // combine (a, b) into the pivot row via the extended gcd on column 0
        let (g, s, t) = ext_gcd(pivot.0, a);
        if g == 0 {
            g1 = gcd(g1, b);
            continue;
        }
        let new_pivot = (g, s * pivot.1 + t * b);
        // the other combination has zero first entry
        let (u, v) = (a / g, pivot.0 / g);
        let residual = u * pivot.1 - v * b;
        g1 = gcd(g1, residual);
        pivot = new_pivot;
    }
    if g1 != 0 {
        pivot.1 = pivot.1.rem_euclid(g1);
    }
    (pivot.0, pivot.1, g1)
}

fn gcd(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b)
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = num_integer::Integer::extended_gcd(&a, &b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}
