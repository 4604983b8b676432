//! Dualities, trialities, mirror images and hole operations.
//!
//! An operation of `Ω*` is a permutation `pi` of the generator triple
//! `(x, y, z)` together with an optional mirror. It sends a dessin with
//! generating pair `(x, y)` to the one with pair `(g[pi[0]], g[pi[1]])`,
//! inverting both when mirrored. On abelianisations these are exactly the
//! twelve signed permutations of `{x, y, z}`, so composition is respected up
//! to inner automorphisms, i.e. up to dessin isomorphism.

use std::fmt;
use std::str::FromStr;

use crate::arith;
use crate::classify::recognize_paley;
use crate::dessin::RegularDessin;
use crate::error::{Error, Result};
use crate::paley::{self, construct_bounded, Limits, PaleyParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OmegaStarOp {
    pub pi: [u8; 3],
    pub mirrored: bool,
}

const NAMED: [(&str, [u8; 3]); 6] = [
    ("id", [0, 1, 2]),
    ("d01", [1, 0, 2]),
    ("d02", [2, 1, 0]),
    ("d12", [0, 2, 1]),
    ("d012", [1, 2, 0]),
    ("d210", [2, 0, 1]),
];

impl OmegaStarOp {
    pub const IDENTITY: OmegaStarOp = OmegaStarOp {
        pi: [0, 1, 2],
        mirrored: false,
    };

    /// The six operations of `Ω` followed by their mirrored versions.
    pub fn all() -> [OmegaStarOp; 12] {
        std::array::from_fn(|i| OmegaStarOp {
            pi: NAMED[i % 6].1,
            mirrored: i >= 6,
        })
    }

    pub fn name(&self) -> String {
        let base = NAMED
            .iter()
            .find(|(_, pi)| *pi == self.pi)
            .map(|(name, _)| *name)
            .expect("pi is a permutation of 0..3");
        if self.mirrored {
            format!("m{base}")
        } else {
            base.to_string()
        }
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &OmegaStarOp) -> OmegaStarOp {
        OmegaStarOp {
            pi: std::array::from_fn(|i| self.pi[other.pi[i] as usize]),
            mirrored: self.mirrored ^ other.mirrored,
        }
    }

    pub fn is_in_omega(&self) -> bool {
        !self.mirrored
    }

    /// Multiplier exponents, relative to `x`, of the new generating pair of
    /// a dessin in `GP(n, p, c)`.
    fn exponent_pair(&self, n: u64, c: u64) -> (u64, u64) {
        let e = [1 % n, c % n, (2 * n - 1 - c % n) % n];
        let sign = |v: u64| if self.mirrored { (n - v) % n } else { v };
        (sign(e[self.pi[0] as usize]), sign(e[self.pi[1] as usize]))
    }
}

impl fmt::Display for OmegaStarOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for OmegaStarOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (mirrored, base) = match s.strip_prefix('m') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        NAMED
            .iter()
            .find(|(name, _)| *name == base)
            .map(|&(_, pi)| OmegaStarOp { pi, mirrored })
            .ok_or_else(|| Error::Parse(format!("unknown operation {s:?}")))
    }
}

pub fn apply_omega(op: &OmegaStarOp, d: &RegularDessin) -> RegularDessin {
    let pick = |i: u8| {
        let s = d.sigma(i as usize);
        if op.mirrored {
            s.inverse()
        } else {
            s.clone()
        }
    };
    d.regenerate(pick(op.pi[0]), pick(op.pi[1]))
}

/// The mirror image `H_-1` of any regular dessin.
pub fn mirror_dessin(d: &RegularDessin) -> RegularDessin {
    apply_omega(
        &OmegaStarOp {
            pi: [0, 1, 2],
            mirrored: true,
        },
        d,
    )
}

/// `H_j` at the level of parameters: `P(x, c) -> P(x^j, c)`.
pub fn apply_hole(params: &PaleyParams, j: u64) -> Result<PaleyParams> {
    if arith::gcd(j, params.n) != 1 {
        return Err(Error::NotCoprime { n: params.n, p: j });
    }
    let jj = (j as u128 * params.j as u128 % params.n as u128) as u64;
    Ok(params.with_j(jj)?.canonicalize())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceTable {
    pub n: u64,
    pub p: u64,
    pub c: u64,
    /// Whether `D ≅ op(D)`, in the order of [`OmegaStarOp::all`].
    pub entries: [(OmegaStarOp, bool); 12],
    /// The five equivalent conditions for invariance under every `H_j`:
    /// checked directly on the hole orbit, one class per colour,
    /// `d = phi(n)`, `p` generates `Z_n^*`, and the explicit list of `n`.
    pub hole_conditions: [bool; 5],
    pub hole_invariant: bool,
    pub kaleidoscopic: bool,
}

impl InvarianceTable {
    pub fn get(&self, op: &OmegaStarOp) -> bool {
        self.entries
            .iter()
            .find(|(o, _)| o == op)
            .map(|&(_, b)| b)
            .expect("all twelve operations are listed")
    }

    /// Order of the stabiliser in `Ω`.
    pub fn k(&self) -> usize {
        self.entries
            .iter()
            .filter(|(o, b)| *b && o.is_in_omega())
            .count()
    }

    /// Order of the stabiliser in `Ω*`.
    pub fn k_star(&self) -> usize {
        self.entries.iter().filter(|(_, b)| *b).count()
    }
}

fn coset_contains(p: u64, n: u64, e_u: u64, e_v: u64, c: u64) -> bool {
    arith::powers_mod(p, n)
        .into_iter()
        .any(|s| s == e_u % n && (s as u128 * c as u128 % n as u128) as u64 == e_v % n)
}

/// Invariance of the dessins in `GP(n, p, c)` under `Ω*` and the hole
/// operations.
///
/// `op(D)` has generating pair with multipliers `a^e_u`, `a^e_v`; when
/// `e_u` is a unit this is `P(x^e_u, e_v / e_u)`, which is isomorphic to
/// `P(x, c)` iff `e_u = p^i` and `e_v = c p^i` for some `i`. For `n = 1`
/// every generator but `x` is a translation, so only the operations fixing
/// the first slot preserve the type.
pub fn invariance_table(n: u64, p: u64, c: u64) -> Result<InvarianceTable> {
    let d = paley::order_mod(p, n)?;
    let c = c % n;
    let entries = OmegaStarOp::all().map(|op| {
        let inv = if n == 1 {
            op.pi[0] == 0
        } else {
            let (e_u, e_v) = op.exponent_pair(n, c);
            coset_contains(p, n, e_u, e_v, c)
        };
        (op, inv)
    });
    let phi = arith::euler_phi(n);
    let params = PaleyParams::new(n, p, c, 1)?;
    let orbit_trivial = arith::units(n).into_iter().all(|j| {
        apply_hole(&params, j)
            .map(|h| h == params.canonicalize())
            .unwrap_or(false)
    });
    let generates = arith::powers_mod(p, n).len() as u64 == phi;
    let hole_conditions = [
        orbit_trivial,
        paley::count_c(n, p, c)? == 1,
        d as u64 == phi,
        arith::has_cyclic_units(n) && generates,
        n_is_cyclic_type(n) && generates,
    ];
    let hole_invariant = hole_conditions[0];
    let kaleidoscopic = hole_invariant && entries.iter().all(|&(_, b)| b);
    Ok(InvarianceTable {
        n,
        p,
        c,
        entries,
        hole_conditions,
        hole_invariant,
        kaleidoscopic,
    })
}

/// `n = 1, 2, 4, r^e` or `2 r^e` with `r` an odd prime, read off the
/// factorisation.
fn n_is_cyclic_type(n: u64) -> bool {
    match arith::factorize(n).as_slice() {
        [] => true,
        [(2, e)] => *e <= 2,
        [(r, _)] => *r > 2,
        [(2, 1), (r, _)] => *r > 2,
        _ => false,
    }
}

/// The invariance conditions exactly as usually stated for `Ω` and `Ω*`
/// (for `n >= 2`), kept for comparison with [`invariance_table`]. Three of
/// the mirrored statements disagree with direct isomorphism testing; see
/// the tests.
pub fn stated_criteria(n: u64, p: u64, c: u64) -> Result<[(OmegaStarOp, bool); 12]> {
    let d = paley::order_mod(p, n)? as u64;
    let c = c % n;
    let pw = |e: u64| arith::pow_mod(p, e, n);
    let inv = |v: u64| arith::inv_mod(v, n);
    let neg = |v: u64| (n - v % n) % n;
    let half = d.is_multiple_of(2);
    let third = d.is_multiple_of(3);
    let real = paley::is_real(n, p)?;
    let d12 = n % 2 == 1 && c == (n - 1) / 2;
    let d01 = c == 1 % n || (half && pw(d / 2) == c);
    let d02 = c == neg(2) || (half && pw(d / 2) == neg(1 + c));
    let d012 = (n == 3 && c == 1) || (third && (pw(d / 3) == c || pw(2 * d / 3) == c));
    let md12 = d12;
    let md01 = c == 1 % n || (half && inv(c) == Some(pw(d / 2)));
    let md02 = c == 0 || (half && inv(neg(1 + c)) == Some(pw(d / 2)));
    let md012 = (n == 3 && c == 1 && p % 3 == 2)
        || (d.is_multiple_of(6) && (pw(d / 3) == c || pw(2 * d / 3) == c) && pw(d / 2) == neg(1));
    let values = [
        true, d01, d02, d12, d012, d012, real, md01, md02, md12, md012, md012,
    ];
    let ops = OmegaStarOp::all();
    Ok(std::array::from_fn(|i| (ops[i], values[i])))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitMember {
    /// Operations producing this class, in [`OmegaStarOp::all`] order.
    pub ops: Vec<OmegaStarOp>,
    pub dessin_type: (usize, usize, usize),
    /// Canonical parameters if the class is a generalised Paley dessin.
    pub paley: Option<PaleyParams>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaOrbit {
    pub omega_length: usize,
    pub omega_star_length: usize,
    pub members: Vec<OrbitMember>,
}

/// Orbit of `construct(params)` under `Ω*`, by applying all twelve
/// operations and grouping the results up to isomorphism.
pub fn omega_orbits(params: &PaleyParams, limits: Limits) -> Result<OmegaOrbit> {
    let base = construct_bounded(params, limits)?;
    let mut classes: Vec<(RegularDessin, Vec<OmegaStarOp>)> = Vec::new();
    let mut omega_length = 0;
    for op in OmegaStarOp::all() {
        let image = apply_omega(&op, &base);
        match classes.iter_mut().find(|(d, _)| d.is_isomorphic(&image)) {
            Some((_, ops)) => ops.push(op),
            None => classes.push((image, vec![op])),
        }
        if op.is_in_omega() {
            omega_length = classes.len();
        }
    }
    let omega_star_length = classes.len();
    let members = classes
        .into_iter()
        .map(|(d, ops)| {
            let paley = recognize_paley(&d)?.params;
            Ok(OrbitMember {
                ops,
                dessin_type: d.dessin_type(),
                paley,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OmegaOrbit {
        omega_length,
        omega_star_length,
        members,
    })
}
