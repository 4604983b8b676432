//! Recognising generalised Paley dessins by how their automorphism group
//! acts on black vertices, and by presentations.

mod presentation;

pub use presentation::{abelianized_colours, match_presentation, Presentation, PresentationMatch};

use crate::arith;
use crate::dessin::{Perm, PermDessin, RegularDessin};
use crate::error::{Error, Result};
use crate::paley::{self, construct, PaleyParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientKind {
    /// Regular of prime degree on black vertices.
    RegularPrimeDegree,
    /// A Frobenius group on black vertices.
    Frobenius,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlackActionReport {
    pub black_count: usize,
    pub transitive: bool,
    /// A single black vertex counts as imprimitive.
    pub primitive: bool,
    pub faithful: bool,
    pub regular_on_black: bool,
    pub kernel_order: usize,
    pub kernel_cyclic: bool,
    pub kernel_central: bool,
    pub quotient_kind: QuotientKind,
}

/// Action of `Aut(D)` on the black vertices of a regular dessin.
///
/// Black vertices are the cosets `g<x>`, so the point stabiliser of the
/// vertex through edge 0 is `<x>` and the kernel is the core of `<x>`.
pub fn analyze_black_action(d: &RegularDessin) -> BlackActionReport {
    let black_count = d.sigma0().cycle_count();
    let labels = d.sigma0().cycle_labels();
    let gens = black_generators(d);
    let transitive = orbit_size(&gens, 0) == black_count;
    let primitive = transitive && is_primitive(&gens, black_count);

    // walk <x> = the sigma0-cycle through edge 0
    let mut stabiliser = vec![0usize];
    loop {
        let next = d.sigma0().apply(*stabiliser.last().unwrap());
        if next == 0 {
            break;
        }
        stabiliser.push(next);
    }
    let n = stabiliser.len();
    let mut kernel = Vec::new();
    let mut frobenius_fixed = true;
    for &h in &stabiliser {
        let img = project_to_black(&labels, &d.automorphism(h));
        let fixed = img.iter().enumerate().filter(|&(v, &w)| v == w).count();
        if fixed == black_count {
            kernel.push(h);
        } else if fixed != 1 {
            frobenius_fixed = false;
        }
    }
    let kernel_order = kernel.len();
    let kernel_cyclic = kernel.iter().any(|&h| element_order(d, h) == kernel_order);
    let kernel_central = kernel.iter().all(|&k| {
        (0..2).all(|s| {
            let g = d.sigma(s).apply(0);
            d.sigma(s).apply(k) == d.automorphism(g).apply(k)
        })
    });
    let regular_on_black = transitive && kernel_order == n;
    let quotient_kind = if !primitive {
        QuotientKind::Other
    } else if regular_on_black {
        QuotientKind::RegularPrimeDegree
    } else if frobenius_fixed {
        QuotientKind::Frobenius
    } else {
        QuotientKind::Other
    };
    BlackActionReport {
        black_count,
        transitive,
        primitive,
        faithful: kernel_order == 1,
        regular_on_black,
        kernel_order,
        kernel_cyclic,
        kernel_central,
        quotient_kind,
    }
}

fn project_to_black(labels: &[usize], phi: &Perm) -> Vec<usize> {
    let count = labels.iter().max().map_or(0, |m| m + 1);
    let mut img = vec![0; count];
    for (e, &v) in labels.iter().enumerate() {
        img[v] = labels[phi.apply(e)];
    }
    img
}

/// Left multiplication by `x` and by `y`, acting on black vertices.
fn black_generators(d: &RegularDessin) -> Vec<Vec<usize>> {
    let labels = d.sigma0().cycle_labels();
    (0..2)
        .map(|s| project_to_black(&labels, &d.automorphism(d.sigma(s).apply(0))))
        .collect()
}

pub fn analyze_perm_dessin(d: &PermDessin) -> Result<BlackActionReport> {
    Ok(analyze_black_action(&d.to_regular()?))
}

/// The `c` with `y x^-c` a translation. A non-translation affine map fixes
/// exactly one point, so translations are the elements moving every black
/// vertex.
fn colour_constant(d: &RegularDessin) -> Result<u64> {
    let n = d.dessin_type().0;
    let inverse_x = d.sigma0().inverse();
    let labels = d.sigma0().cycle_labels();
    let mut e = d.sigma1().apply(0);
    for c in 0..n {
        let img = project_to_black(&labels, &d.automorphism(e));
        if n == 1 || img.iter().enumerate().all(|(v, &w)| v != w) {
            return Ok(c as u64);
        }
        e = inverse_x.apply(e);
    }
    Err(Error::InternalConsistency(
        "no power of x maps y into the translations".into(),
    ))
}

fn element_order(d: &RegularDessin, h: usize) -> usize {
    let phi = d.automorphism(h);
    let mut e = h;
    let mut k = 1;
    while e != 0 {
        e = phi.apply(e);
        k += 1;
    }
    k
}

fn orbit_size(gens: &[Vec<usize>], start: usize) -> usize {
    let mut seen = vec![false; gens[0].len()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for g in gens {
            if !std::mem::replace(&mut seen[g[v]], true) {
                count += 1;
                stack.push(g[v]);
            }
        }
    }
    count
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// For each `w`, the finest block system with `0 ~ w`; primitive iff every
/// one of them is the trivial single block.
fn is_primitive(gens: &[Vec<usize>], len: usize) -> bool {
    if len <= 1 {
        return false;
    }
    if arith::is_prime(len as u64) {
        return true;
    }
    (1..len).all(|w| {
        let mut parent: Vec<usize> = (0..len).collect();
        let mut classes = len - 1;
        parent[w] = 0;
        let mut queue = vec![(0, w)];
        while let Some((a, b)) = queue.pop() {
            for g in gens {
                let (ra, rb) = (find(&mut parent, g[a]), find(&mut parent, g[b]));
                if ra != rb {
                    parent[rb] = ra;
                    classes -= 1;
                    queue.push((ra, rb));
                }
            }
        }
        classes == 1
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recognition {
    pub report: BlackActionReport,
    pub params: Option<PaleyParams>,
    /// Why the dessin is not a generalised Paley dessin, if it is not.
    pub diagnosis: Option<String>,
}

/// A regular dessin is a generalised Paley dessin iff `Aut(D)` acts
/// faithfully and primitively on black vertices; the parameters are then
/// found among the candidates of matching type.
pub fn recognize_paley(d: &RegularDessin) -> Result<Recognition> {
    let report = analyze_black_action(d);
    let reject = |report: BlackActionReport, why: &str| {
        Ok(Recognition {
            report,
            params: None,
            diagnosis: Some(why.to_string()),
        })
    };
    if !report.primitive {
        return reject(report, "not primitive on black vertices");
    }
    if !report.faithful {
        return reject(report, "not faithful on black vertices");
    }
    let (n, m, l) = d.dessin_type();
    let q = (d.edge_count() / n) as u64;
    let n = n as u64;
    let (p, _) = arith::prime_power(q).ok_or_else(|| {
        Error::InternalConsistency(format!(
            "primitive faithful action of non-prime-power degree {q}"
        ))
    })?;
    let c = colour_constant(d)?;
    for params in paley::enumerate(n, p, Some(c))? {
        let t = paley::type_genus(params.n, params.p, params.c)?;
        if t.dessin_type() != (n, m as u64, l as u64) || params.q()? != q {
            continue;
        }
        if construct(&params)?.is_isomorphic(d) {
            return Ok(Recognition {
                report,
                params: Some(params),
                diagnosis: None,
            });
        }
    }
    Err(Error::InternalConsistency(format!(
        "primitive faithful dessin of type ({n}, {m}, {l}) on {q} black vertices matches no GP({n}, {p}, c)"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dessin::{build_fermat, build_metacyclic, build_p3, build_quaternion, build_star};
    use crate::paley::cyclic_cover;

    #[test]
    fn paley_dessins_are_recognised() {
        for (n, p) in [
            (6u64, 13u64),
            (7, 29),
            (3, 2),
            (5, 11),
            (4, 3),
            (7, 2),
            (1, 5),
        ] {
            for params in enumerate_or_star(n, p) {
                let d = construct(&params).unwrap();
                let r = recognize_paley(&d).unwrap();
                assert!(r.report.primitive && r.report.faithful, "{params}");
                assert_eq!(r.params, Some(params));
            }
        }
    }

    fn enumerate_or_star(n: u64, p: u64) -> Vec<PaleyParams> {
        if n == 1 {
            vec![PaleyParams::new(1, p, 0, 1).unwrap()]
        } else {
            paley::enumerate(n, p, None).unwrap()
        }
    }

    #[test]
    fn black_action_of_paley_dessins() {
        let d = construct(&PaleyParams::new(6, 13, 3, 1).unwrap()).unwrap();
        let r = analyze_black_action(&d);
        assert_eq!(r.black_count, 13);
        assert_eq!(r.quotient_kind, QuotientKind::Frobenius);
        assert!(!r.regular_on_black);
        let star = build_star(7).unwrap();
        let r = analyze_black_action(&star);
        assert_eq!(r.quotient_kind, QuotientKind::RegularPrimeDegree);
        // q = 9 is not prime, so the block test does the work
        let d = construct(&PaleyParams::new(4, 3, 1, 1).unwrap()).unwrap();
        assert!(analyze_black_action(&d).primitive);
    }

    #[test]
    fn non_paley_dessins() {
        let r = recognize_paley(&build_quaternion()).unwrap();
        assert!(r.params.is_none());
        assert!(r.report.primitive && !r.report.faithful);
        assert_eq!(r.report.kernel_order, 4);
        let r = analyze_black_action(&build_fermat(3));
        assert!(r.primitive && !r.faithful);
        assert_eq!(r.kernel_order, 3);
        assert!(r.kernel_cyclic && r.kernel_central);
        assert!(recognize_paley(&build_fermat(3)).unwrap().params.is_none());
        let r = analyze_black_action(&build_p3(3).unwrap());
        assert!(r.primitive && !r.faithful);
        assert_eq!(r.kernel_order, 9);
        let r = analyze_black_action(&build_metacyclic(7, 3, 2).unwrap());
        assert_eq!(r.black_count, 3);
        assert!(r.primitive && !r.faithful);
        assert!(!r.kernel_central);
        let r = analyze_black_action(&build_star(1).unwrap());
        assert!(!r.primitive);
    }

    #[test]
    fn covers_are_primitive_with_cyclic_central_kernel() {
        for (n, p, c, k) in [(3u64, 7u64, 1u64, 2u64), (4, 5, 2, 3), (6, 7, 1, 2)] {
            let params = PaleyParams::new(n, p, c, 1).unwrap();
            let cover = cyclic_cover(&params, k, c).unwrap();
            let r = analyze_black_action(&cover.dessin);
            assert!(r.primitive, "{params} k={k}");
            assert_eq!(r.kernel_order as u64, k);
            assert!(r.kernel_cyclic && r.kernel_central);
            assert!(recognize_paley(&cover.dessin).unwrap().params.is_none());
        }
    }

    fn set_partitions(len: usize) -> Vec<Vec<usize>> {
        // restricted growth strings
        let mut out = Vec::new();
        let mut a = vec![0usize; len];
        loop {
            out.push(a.clone());
            let mut i = len;
            loop {
                if i <= 1 {
                    return out;
                }
                i -= 1;
                let max = a[..i].iter().copied().max().unwrap_or(0);
                if a[i] <= max {
                    a[i] += 1;
                    for v in &mut a[i + 1..] {
                        *v = 0;
                    }
                    break;
                }
            }
        }
    }

    fn primitive_by_partitions(gens: &[Vec<usize>]) -> bool {
        let len = gens[0].len();
        len > 1
            && set_partitions(len).into_iter().all(|part| {
                let blocks = part.iter().max().unwrap() + 1;
                let invariant = gens.iter().all(|g| {
                    (0..len).all(|u| {
                        (0..len).all(|v| (part[u] == part[v]) == (part[g[u]] == part[g[v]]))
                    })
                });
                !invariant || blocks == 1 || blocks == len
            })
    }

    #[test]
    fn primitivity_matches_exhaustive_block_search() {
        let mut pool = vec![
            build_quaternion(),
            build_p3(3).unwrap(),
            build_star(1).unwrap(),
        ];
        pool.extend((1..=7).map(build_fermat));
        pool.push(build_metacyclic(8, 2, 7).unwrap());
        pool.push(build_metacyclic(7, 3, 2).unwrap());
        for (n, p) in [(2u64, 3u64), (4, 3), (8, 3), (3, 2), (6, 7), (2, 7)] {
            for params in paley::enumerate(n, p, None).unwrap() {
                pool.push(construct(&params).unwrap());
                pool.push(cyclic_cover(&params, 2, params.c).unwrap().dessin);
            }
        }
        for d in &pool {
            let gens = black_generators(d);
            if gens[0].len() > 9 {
                continue;
            }
            assert_eq!(
                analyze_black_action(d).primitive,
                primitive_by_partitions(&gens),
                "{:?}",
                d.dessin_type()
            );
        }
    }

    #[test]
    fn affine_primitivity_matches_the_spanning_conditions() {
        use crate::affine::primitivity_conditions;
        use crate::field::FieldCtx;
        for q in 2..=256u64 {
            let Some((p, d)) = arith::prime_power(q) else {
                continue;
            };
            let ctx = FieldCtx::new(p, d).unwrap();
            let translations: Vec<Vec<usize>> = (0..d as usize)
                .map(|k| {
                    let mut coeffs = vec![0; d as usize];
                    coeffs[k] = 1;
                    let e = ctx.from_coeffs(&coeffs).unwrap();
                    (0..q as usize)
                        .map(|i| ctx.add(ctx.element(i), e).index())
                        .collect()
                })
                .collect();
            for n in (1..q).filter(|n| (q - 1) % n == 0) {
                let x0 = ctx.subgroup_generator(n).unwrap();
                let mut gens = translations.clone();
                gens.push(
                    (0..q as usize)
                        .map(|i| ctx.mul(x0, ctx.element(i)).index())
                        .collect(),
                );
                let primitive = is_primitive(&gens, q as usize);
                if n == 1 {
                    assert_eq!(primitive, d == 1, "q={q} n=1");
                    continue;
                }
                let c = primitivity_conditions(&ctx, n).unwrap();
                assert!(c.consistent());
                assert_eq!(primitive, c.spans, "q={q} n={n}");
            }
        }
    }
}
