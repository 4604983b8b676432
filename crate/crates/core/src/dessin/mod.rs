//! Regular dessins realised as permutation triples on their edges.
//!
//! For a group `G` with generating pair `(x, y)` the edges are the elements of
//! `G`, and `x`, `y`, `z = (xy)^-1` act by right multiplication. Black
//! vertices, white vertices and faces are the cycles of `sigma0`, `sigma1` and
//! `sigma2`, i.e. the cosets `g<x>`, `g<y>`, `g<z>`. Automorphisms are left
//! multiplications, so the automorphism sending edge 0 to edge `h` is
//! `e -> h e`.

mod fixtures;
mod format;
pub mod groups;
mod perm;

use std::collections::VecDeque;
use std::fmt;

pub use fixtures::{build_fermat, build_metacyclic, build_p3, build_quaternion, build_star};
pub use format::{parse_perm_dessin, write_graph, write_perm_dessin};
pub use perm::Perm;

use crate::affine::FiniteGroup;
use crate::error::{Error, Result};

/// What concrete group a dessin was built from, if known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupTag {
    /// `T ⋊ S` over `GF(q)` with `|S| = n`.
    Affine {
        q: u64,
        n: u64,
    },
    /// `T ⋊ S~` with `|S~| = k n`, covering `Affine { q, n }`.
    AffineCover {
        q: u64,
        n: u64,
        k: u64,
    },
    Cyclic {
        m: u64,
    },
    AbelianPair {
        a: u64,
        b: u64,
    },
    Quaternion,
    Metacyclic {
        n: u64,
        m: u64,
        r: u64,
    },
    /// Known only through its permutations.
    Permutation,
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Affine { q, n } => write!(f, "affine(q={q},n={n})"),
            GroupTag::AffineCover { q, n, k } => write!(f, "affine-cover(q={q},n={n},k={k})"),
            GroupTag::Cyclic { m } => write!(f, "cyclic({m})"),
            GroupTag::AbelianPair { a, b } => write!(f, "abelian({a}x{b})"),
            GroupTag::Quaternion => write!(f, "quaternion"),
            GroupTag::Metacyclic { n, m, r } => write!(f, "metacyclic(n={n},m={m},r={r})"),
            GroupTag::Permutation => write!(f, "permutation"),
        }
    }
}

/// A dessin given by its two monodromy permutations; `sigma2` is derived.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermDessin {
    pub sigma0: Perm,
    pub sigma1: Perm,
}

impl PermDessin {
    pub fn new(sigma0: Perm, sigma1: Perm) -> Result<Self> {
        if sigma0.len() != sigma1.len() {
            return Err(Error::InvalidPermutation(format!(
                "permutations of different degrees {} and {}",
                sigma0.len(),
                sigma1.len()
            )));
        }
        if sigma0.is_empty() {
            return Err(Error::InvalidPermutation("no edges".into()));
        }
        if !is_transitive(&[&sigma0, &sigma1]) {
            return Err(Error::NotTransitive);
        }
        Ok(PermDessin { sigma0, sigma1 })
    }

    pub fn edge_count(&self) -> usize {
        self.sigma0.len()
    }

    pub fn sigma2(&self) -> Perm {
        self.sigma0.then(&self.sigma1).inverse()
    }

    /// Whether the monodromy group acts regularly: equivalently its
    /// centraliser is transitive, i.e. every seed `0 -> h` extends to a
    /// monodromy-preserving bijection.
    pub fn is_regular(&self) -> bool {
        let gens = [&self.sigma0, &self.sigma1];
        (0..self.edge_count()).all(|h| propagate(gens, gens, h).is_some())
    }

    /// Isomorphism of arbitrary connected dessins: some seed `0 -> h` must
    /// extend to a bijection intertwining the monodromy.
    pub fn is_isomorphic(&self, other: &PermDessin) -> bool {
        if self.edge_count() != other.edge_count() {
            return false;
        }
        let a = [&self.sigma0, &self.sigma1];
        let b = [&other.sigma0, &other.sigma1];
        (0..other.edge_count()).any(|h| propagate(a, b, h).is_some())
    }

    pub fn to_regular(&self) -> Result<RegularDessin> {
        if !self.is_regular() {
            return Err(Error::NotRegular(
                "the monodromy group is larger than the edge set".into(),
            ));
        }
        RegularDessin::assemble(
            self.sigma0.clone(),
            self.sigma1.clone(),
            GroupTag::Permutation,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularDessin {
    sigma: [Perm; 3],
    valency: [usize; 3],
    chi: i64,
    genus: u64,
    tag: GroupTag,
}

impl RegularDessin {
    /// The dessin of `group` with generating pair `(x, y)`.
    pub fn from_triple(
        group: &impl FiniteGroup,
        x: usize,
        y: usize,
        tag: GroupTag,
    ) -> Result<Self> {
        let order = group.order();
        let generated = reachable_count(order, |e, k| group.compose(e, if k == 0 { x } else { y }));
        if generated != order {
            return Err(Error::NotGenerating { generated, order });
        }
        let sigma0 = Perm::from_fn(order, |e| group.compose(e, x));
        let sigma1 = Perm::from_fn(order, |e| group.compose(e, y));
        Self::assemble(sigma0, sigma1, tag)
    }

    /// Validating constructor from raw permutations.
    pub fn from_perms(sigma0: Perm, sigma1: Perm) -> Result<Self> {
        PermDessin::new(sigma0, sigma1)?.to_regular()
    }

    /// Builds the record for permutations already known to generate a
    /// regular group.
    fn assemble(sigma0: Perm, sigma1: Perm, tag: GroupTag) -> Result<Self> {
        let sigma2 = sigma0.then(&sigma1).inverse();
        let sigma = [sigma0, sigma1, sigma2];
        let e = sigma[0].len();
        let cycles = sigma.clone().map(|s| s.cycle_count());
        let valency = cycles.map(|c| e / c);
        let chi = cycles.iter().sum::<usize>() as i64 - e as i64;
        if chi % 2 != 0 {
            return Err(Error::OddEulerCharacteristic(chi));
        }
        let genus = (1 - chi / 2) as u64;
        Ok(RegularDessin {
            sigma,
            valency,
            chi,
            genus,
            tag,
        })
    }

    pub fn edge_count(&self) -> usize {
        self.sigma[0].len()
    }

    pub fn sigma(&self, i: usize) -> &Perm {
        &self.sigma[i]
    }

    pub fn sigma0(&self) -> &Perm {
        &self.sigma[0]
    }

    pub fn sigma1(&self) -> &Perm {
        &self.sigma[1]
    }

    pub fn sigma2(&self) -> &Perm {
        &self.sigma[2]
    }

    /// Orders `(n, m, l)` of `x`, `y`, `z`.
    pub fn dessin_type(&self) -> (usize, usize, usize) {
        (self.valency[0], self.valency[1], self.valency[2])
    }

    /// Numbers of black vertices, white vertices and faces.
    pub fn cell_counts(&self) -> (usize, usize, usize) {
        let e = self.edge_count();
        (
            e / self.valency[0],
            e / self.valency[1],
            e / self.valency[2],
        )
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn euler_and_genus(&self) -> (i64, u64) {
        (self.chi, self.genus)
    }

    pub fn tag(&self) -> &GroupTag {
        &self.tag
    }

    pub fn with_tag(mut self, tag: GroupTag) -> Self {
        self.tag = tag;
        self
    }

    pub fn to_perm_dessin(&self) -> PermDessin {
        PermDessin {
            sigma0: self.sigma[0].clone(),
            sigma1: self.sigma[1].clone(),
        }
    }

    /// The regular dessin with generating pair given by the right
    /// multiplications `a`, `b` on the same edge set.
    pub(crate) fn regenerate(&self, a: Perm, b: Perm) -> RegularDessin {
        Self::assemble(a, b, self.tag.clone()).expect("same group, same edge set")
    }

    /// The automorphism `e -> h e`.
    pub fn automorphism(&self, h: usize) -> Perm {
        let gens = [&self.sigma[0], &self.sigma[1]];
        Perm::from_images(propagate(gens, gens, h).expect("regular dessins are edge-transitive"))
            .expect("propagation yields a bijection")
    }

    /// Product `a b` of two edges viewed as group elements.
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.automorphism(a).apply(b)
    }

    /// Since `Aut` is transitive on edges, any isomorphism can be composed
    /// with an automorphism to fix edge 0, so one seed decides the question.
    pub fn is_isomorphic(&self, other: &RegularDessin) -> bool {
        if self.edge_count() != other.edge_count() || self.valency != other.valency {
            return false;
        }
        let a = [&self.sigma[0], &self.sigma[1]];
        let b = [&other.sigma[0], &other.sigma[1]];
        propagate(a, b, 0).is_some()
    }

    /// Quotient by the normal subgroup whose elements are the edges `normal`.
    pub fn quotient(&self, normal: &[usize]) -> Result<RegularDessin> {
        let e = self.edge_count();
        let mut member = vec![false; e];
        for &h in normal {
            if h >= e {
                return Err(Error::InvalidParams(format!(
                    "edge {h} out of range 0..{e}"
                )));
            }
            member[h] = true;
        }
        if !member[0] {
            return Err(Error::NotSubgroup);
        }
        let elements: Vec<usize> = (0..e).filter(|&h| member[h]).collect();
        let mut left = Vec::with_capacity(elements.len());
        for &h in &elements {
            let phi = self.automorphism(h);
            if elements.iter().any(|&k| !member[phi.apply(k)]) {
                return Err(Error::NotSubgroup);
            }
            left.push(phi);
        }
        // normal iff stable under conjugation by the generators x and y
        for s in &self.sigma[..2] {
            let s_inv = self.automorphism(s.inverse().apply(0));
            if elements.iter().any(|&h| !member[s_inv.apply(s.apply(h))]) {
                return Err(Error::NotNormal);
            }
        }
        // cosets N g, numbered by smallest member
        let mut coset = vec![usize::MAX; e];
        let mut count = 0;
        for g in 0..e {
            if coset[g] != usize::MAX {
                continue;
            }
            for phi in &left {
                coset[phi.apply(g)] = count;
            }
            count += 1;
        }
        let mut reps = vec![0; count];
        for g in (0..e).rev() {
            reps[coset[g]] = g;
        }
        let induced = |s: &Perm| Perm::from_fn(count, |c| coset[s.apply(reps[c])]);
        Self::assemble(
            induced(&self.sigma[0]),
            induced(&self.sigma[1]),
            GroupTag::Permutation,
        )
    }
}

fn reachable_count(len: usize, mut step: impl FnMut(usize, usize) -> usize) -> usize {
    let mut seen = vec![false; len];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut count = 1;
    while let Some(e) = queue.pop_front() {
        for k in 0..2 {
            let f = step(e, k);
            if !seen[f] {
                seen[f] = true;
                count += 1;
                queue.push_back(f);
            }
        }
    }
    count
}

pub(crate) fn is_transitive(gens: &[&Perm; 2]) -> bool {
    let len = gens[0].len();
    reachable_count(len, |e, k| gens[k].apply(e)) == len
}

/// Extends `0 -> seed` to a bijection `phi` with `phi(a_k(e)) = b_k(phi(e))`.
/// Both sides must be transitive on the same number of points.
fn propagate(a: [&Perm; 2], b: [&Perm; 2], seed: usize) -> Option<Vec<usize>> {
    let len = a[0].len();
    let mut phi = vec![usize::MAX; len];
    let mut used = vec![false; len];
    phi[0] = seed;
    used[seed] = true;
    let mut stack = vec![0];
    while let Some(e) = stack.pop() {
        for k in 0..2 {
            let (f, target) = (a[k].apply(e), b[k].apply(phi[e]));
            if phi[f] == usize::MAX {
                if std::mem::replace(&mut used[target], true) {
                    return None;
                }
                phi[f] = target;
                stack.push(f);
            } else if phi[f] != target {
                return None;
            }
        }
    }
    Some(phi)
}
