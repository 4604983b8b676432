//! Generalised Paley dessins `GP(n, p, c)`.
//!
//! A dessin is named by `(n, p, c, j)`: its group is `T ⋊ S` over
//! `GF(p^d)` with `d` the order of `p` modulo `n` and `|S| = n`; the
//! generators are `x = x0^j` (multiplication) and `y : t -> x0^(jc) t + 1`,
//! where `x0` is the canonical generator of `S`. Two names give isomorphic
//! dessins exactly when their `c` agree and their `j` lie in the same coset
//! of `<p>` in `Z_n^*`, so the coset minimum is used as canonical label.

mod cover;
mod curve;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

pub use cover::{cyclic_cover, cyclic_cover_bounded, CoverGroup, CyclicCover};
pub use curve::{curve_model, CurveModel, CurveVariant};

use crate::affine::{AffineGroup, AffineMap, FiniteGroup};
use crate::arith;
use crate::dessin::{GroupTag, RegularDessin};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement, DEFAULT_MAX_Q};

/// Default upper bound on the number of edges `n q` of a constructed dessin.
pub const DEFAULT_MAX_EDGES: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_q: u64,
    pub max_edges: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_q: DEFAULT_MAX_Q,
            max_edges: DEFAULT_MAX_EDGES,
        }
    }
}

/// Multiplicative order of `p` modulo `n`.
pub fn order_mod(p: u64, n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::InvalidParams("n must be positive".into()));
    }
    if arith::gcd(p, n) != 1 {
        return Err(Error::NotCoprime { n, p });
    }
    Ok(arith::mult_order(p, n)? as u32)
}

fn check_np(n: u64, p: u64) -> Result<u32> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    order_mod(p, n)
}

fn q_of(p: u64, d: u32) -> Result<u64> {
    p.checked_pow(d).ok_or(Error::SizeBound {
        what: "q",
        value: (p as u128).saturating_pow(d),
        limit: u64::MAX as u128,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PaleyParams {
    pub n: u64,
    pub p: u64,
    pub d: u32,
    pub c: u64,
    pub j: u64,
    pub canonical: bool,
}

impl PaleyParams {
    /// Validated parameters; `c` and `j` are reduced modulo `n`. For `n = 1`
    /// the only generator class is written `j = 1`.
    pub fn new(n: u64, p: u64, c: u64, j: u64) -> Result<Self> {
        let d = check_np(n, p)?;
        let c = c % n;
        let j = if n == 1 { 1 } else { j % n };
        if arith::gcd(j, n) != 1 {
            return Err(Error::InvalidParams(format!(
                "generator exponent j = {j} is not a unit modulo {n}"
            )));
        }
        let mut params = PaleyParams {
            n,
            p,
            d,
            c,
            j,
            canonical: false,
        };
        params.canonical = params.canonical_j() == j;
        Ok(params)
    }

    /// Smallest member of the coset `j <p>` in `Z_n^*`.
    pub fn canonical_j(&self) -> u64 {
        if self.n == 1 {
            return 1;
        }
        arith::powers_mod(self.p, self.n)
            .into_iter()
            .map(|s| (s as u128 * self.j as u128 % self.n as u128) as u64)
            .min()
            .expect("nonempty coset")
    }

    pub fn canonicalize(&self) -> Self {
        let mut out = *self;
        out.j = self.canonical_j();
        out.canonical = true;
        out
    }

    /// `q = p^d`; may exceed machine integers for valid parameters.
    pub fn q(&self) -> Result<u64> {
        q_of(self.p, self.d)
    }

    pub fn with_j(&self, j: u64) -> Result<Self> {
        Self::new(self.n, self.p, self.c, j)
    }

    pub fn field(&self) -> Result<FieldCtx> {
        self.field_bounded(DEFAULT_MAX_Q)
    }

    pub fn field_bounded(&self, max_q: u64) -> Result<FieldCtx> {
        FieldCtx::with_max_q(self.p, self.d, max_q)
    }

    /// `x0^j`, the multiplier of `x`.
    pub fn multiplier(&self, ctx: &FieldCtx) -> FieldElement {
        let x0 = ctx.subgroup_generator(self.n).expect("n divides q - 1");
        ctx.pow(x0, self.j as i64).expect("x0 is nonzero")
    }

    /// For prime fields, the residue `r` with `x : t -> r t`.
    pub fn multiplier_residue(&self) -> Result<Option<u64>> {
        if self.d != 1 {
            return Ok(None);
        }
        let ctx = self.field()?;
        Ok(ctx.to_int(self.multiplier(&ctx)))
    }

    /// `x` and `y` as affine maps.
    pub fn generators(&self, ctx: &FieldCtx) -> (AffineMap, AffineMap) {
        let a = self.multiplier(ctx);
        let x = AffineMap {
            a,
            b: FieldElement::ZERO,
        };
        let y = AffineMap {
            a: ctx.pow(a, self.c as i64).expect("nonzero"),
            b: FieldElement::ONE,
        };
        (x, y)
    }
}

impl fmt::Display for PaleyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GP(n={},p={},c={},j={})", self.n, self.p, self.c, self.j)
    }
}

impl FromStr for PaleyParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix("GP(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected GP(...), got {s:?}")))?;
        let mut vals = [None; 4];
        for part in inner.split(',') {
            let (key, val) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad field {part:?}")))?;
            let slot = match key.trim() {
                "n" => 0,
                "p" => 1,
                "c" => 2,
                "j" => 3,
                other => return Err(Error::Parse(format!("unknown field {other:?}"))),
            };
            vals[slot] = Some(
                val.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::Parse(format!("bad value {val:?}: {e}")))?,
            );
        }
        let [Some(n), Some(p), Some(c), Some(j)] = vals else {
            return Err(Error::Parse("GP(...) needs n, p, c and j".into()));
        };
        PaleyParams::new(n, p, c, j)
    }
}

pub fn construct(params: &PaleyParams) -> Result<RegularDessin> {
    construct_bounded(params, Limits::default())
}

pub fn check_edges(edges: u128, limits: Limits) -> Result<()> {
    if edges > limits.max_edges as u128 {
        return Err(Error::SizeBound {
            what: "edges",
            value: edges,
            limit: limits.max_edges as u128,
        });
    }
    Ok(())
}

pub fn construct_bounded(params: &PaleyParams, limits: Limits) -> Result<RegularDessin> {
    let ctx = Arc::new(params.field_bounded(limits.max_q)?);
    check_edges(params.n as u128 * ctx.q() as u128, limits)?;
    let group = AffineGroup::new(ctx.clone(), params.n)?;
    let (x, y) = params.generators(&ctx);
    let xi = group.index_of(&x).expect("x lies in the group");
    let yi = group.index_of(&y).expect("y lies in the group");
    RegularDessin::from_triple(
        &group,
        xi,
        yi,
        GroupTag::Affine {
            q: ctx.q(),
            n: params.n,
        },
    )
}

/// Edges of the translation subgroup in a constructed dessin.
pub fn translation_edges(params: &PaleyParams) -> Result<Vec<usize>> {
    Ok((0..params.q()? as usize).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeGenus {
    pub n: u64,
    pub m: u64,
    pub l: u64,
    pub chi: i64,
    pub genus: u64,
}

impl TypeGenus {
    pub fn dessin_type(&self) -> (u64, u64, u64) {
        (self.n, self.m, self.l)
    }
}

/// Type, Euler characteristic and genus of the dessins in `GP(n, p, c)`.
pub fn type_genus(n: u64, p: u64, c: u64) -> Result<TypeGenus> {
    let d = check_np(n, p)?;
    let q = q_of(p, d)?;
    let c = c % n;
    let white = (c + 1) % n;
    let m = if c == 0 { p } else { n / arith::gcd(n, c) };
    let l = if white == 0 {
        p
    } else {
        n / arith::gcd(n, white)
    };
    let chi = if n == 1 {
        // both special colours at once: one black vertex per edge
        let e = q as i64;
        e + e / m as i64 + e / l as i64 - e
    } else if c == 0 || white == 0 {
        let pd = (q / p) as i64;
        let (p, n) = (p as i64, n as i64);
        pd * (2 * p + n - n * p)
    } else {
        q as i64 * (1 + arith::gcd(n, c) as i64 + arith::gcd(n, white) as i64 - n as i64)
    };
    Ok(TypeGenus {
        n,
        m,
        l,
        chi,
        genus: (1 - chi / 2) as u64,
    })
}

/// `|GP(n, p)| = n phi(n) / d`.
pub fn count(n: u64, p: u64) -> Result<u64> {
    let d = check_np(n, p)? as u64;
    Ok(n * arith::euler_phi(n) / d)
}

/// `|GP(n, p, c)| = phi(n) / d`.
pub fn count_c(n: u64, p: u64, c: u64) -> Result<u64> {
    let d = check_np(n, p)? as u64;
    if c >= n {
        return Err(Error::InvalidParams(format!("c = {c} not below n = {n}")));
    }
    Ok(arith::euler_phi(n) / d)
}

/// Canonical representatives of the cosets of `<p>` in `Z_n^*`, ascending.
pub fn canonical_exponents(n: u64, p: u64) -> Result<Vec<u64>> {
    check_np(n, p)?;
    if n == 1 {
        return Ok(vec![1]);
    }
    let powers = arith::powers_mod(p, n);
    Ok(arith::units(n)
        .into_iter()
        .filter(|&j| powers.iter().all(|&s| s * j % n >= j))
        .collect())
}

/// One canonical parameter set per isomorphism class, ordered by `c`
/// then `j`.
pub fn enumerate(n: u64, p: u64, c: Option<u64>) -> Result<Vec<PaleyParams>> {
    let js = canonical_exponents(n, p)?;
    let cs: Vec<u64> = match c {
        Some(c) if c >= n => {
            return Err(Error::InvalidParams(format!("c = {c} not below n = {n}")))
        }
        Some(c) => vec![c],
        None => (0..n).collect(),
    };
    cs.into_iter()
        .flat_map(|c| js.iter().map(move |&j| PaleyParams::new(n, p, c, j)))
        .collect()
}

/// Whether `-1` is a power of `p` modulo `n`, i.e. every dessin in
/// `GP(n, p)` is isomorphic to its mirror image.
pub fn is_real(n: u64, p: u64) -> Result<bool> {
    check_np(n, p)?;
    let minus_one = (n - 1) % n;
    Ok(arith::powers_mod(p, n).contains(&minus_one))
}

/// Some `i` with `p^i = -1 mod n`, found prime power by prime power.
pub fn minus_one_exponent(n: u64, p: u64) -> Result<Option<u64>> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("n = {n} must be at least 2")));
    }
    order_mod(p, n)?;
    let mut two_part = None;
    let mut halves = Vec::new();
    let mut n2 = 1;
    for (r, e) in arith::factorize(n) {
        let nr = r.pow(e);
        if r == 2 {
            n2 = nr;
            continue;
        }
        let dr = arith::mult_order(p % nr, nr)?;
        let k = arith::two_part_exponent(dr);
        if k == 0 || two_part.is_some_and(|k0| k0 != k) {
            return Ok(None);
        }
        two_part = Some(k);
        halves.push(dr / 2);
    }
    if n2 >= 2 && p % n2 != n2 - 1 {
        return Ok(None);
    }
    if n2 >= 4 && two_part.is_some_and(|k| k != 1) {
        return Ok(None);
    }
    Ok(Some(halves.into_iter().fold(1, arith::lcm)))
}

/// The mirror image `P(x^-1, c)`.
pub fn mirror(params: &PaleyParams) -> PaleyParams {
    let mut out = *params;
    if params.n > 1 {
        out.j = params.n - params.j;
    }
    out.canonicalize()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Substructure {
    pub white_primitive: bool,
    pub face_primitive: bool,
    /// White vertices have valency at most 2.
    pub is_map: bool,
    pub defined_over_q: bool,
}

pub fn substructure_predicates(n: u64, p: u64, c: u64) -> Result<Substructure> {
    check_np(n, p)?;
    let c = c % n;
    let special = arith::is_prime(n) && p % n == 1;
    let m = if c == 0 { p } else { n / arith::gcd(n, c) };
    Ok(Substructure {
        white_primitive: arith::gcd(c, n) == 1 || (special && c == 0),
        face_primitive: arith::gcd(c + 1, n) == 1 || (special && c == n - 1),
        is_map: m <= 2,
        defined_over_q: defined_over_q(n, p)?,
    })
}

/// `Z_n^*` is cyclic and generated by `p`.
pub fn defined_over_q(n: u64, p: u64) -> Result<bool> {
    check_np(n, p)?;
    Ok(arith::has_cyclic_units(n) && arith::powers_mod(p, n).len() as u64 == arith::euler_phi(n))
}

/// Genus of the quotient by the translation subgroup.
pub fn quotient_genus(n: u64, c: u64) -> Result<u64> {
    if n == 0 || c >= n {
        return Err(Error::InvalidParams(format!(
            "need 0 <= c < n, got c = {c}, n = {n}"
        )));
    }
    if c == 0 || c == n - 1 {
        return Ok(0);
    }
    Ok((1 + n - arith::gcd(n, c) - arith::gcd(n, c + 1)) / 2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisData {
    pub orbit: Vec<PaleyParams>,
    pub field_degree: u64,
}

pub fn galois_data(n: u64, p: u64, c: u64) -> Result<GaloisData> {
    let d = check_np(n, p)? as u64;
    Ok(GaloisData {
        orbit: enumerate(n, p, Some(c))?,
        field_degree: arith::euler_phi(n) / d,
    })
}

/// All generating pairs `(x, y)` of `T ⋊ S` with `x` of order `n`
/// generating `S`, as group indices. Exhaustive; test oracle only.
#[doc(hidden)]
pub fn all_standard_pairs(group: &AffineGroup) -> Vec<(usize, usize)> {
    let n = group.n() as usize;
    let q = group.ctx().q() as usize;
    let xs: Vec<usize> = (1..n.max(2))
        .filter(|&k| n == 1 || arith::gcd(k as u64, n as u64) == 1)
        .map(|k| if n == 1 { 0 } else { k * q })
        .collect();
    let mut out = Vec::new();
    for &x in &xs {
        for y in 0..group.order() {
            // y must move 0; otherwise <x, y> fixes a point
            if y % q != 0 {
                out.push((x, y));
            }
        }
    }
    out
}
