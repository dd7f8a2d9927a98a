//! Closed-form generator families: the vector and quaternionic syzygies of
//! the quaternionic product, and the explicit Gröbner bases of the vector
//! syzygy ideal (multilinear and general).

use std::fmt;

use crate::error::{domain, Result};
use crate::freealg::{bracket, int, Poly, Word};
use crate::qvars::{QLetter, QPolynomial};
use crate::rewrite::{RewriteRule, RuleSet};

/// Which closed-form pattern an element instantiates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    V2,
    V3,
    V4,
    Q0,
    Q1,
    Q2,
    Q3,
    Q4,
    /// Degree-3 multilinear base elements.
    G3,
    /// Degree-`m` multilinear base elements, `m >= 4`.
    Gm,
    /// The two square rules of degree 3 in the general base.
    VG3sq,
    /// Degree-`m` general base elements, `m >= 4`.
    VGm,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One instance of a generator pattern.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorFamily<P = Poly> {
    pub tag: FamilyTag,
    /// The subscripts instantiating the pattern, in pattern order.
    pub indices: Vec<u32>,
    /// Which of the two degree-3 shapes (G3) or square shapes (VG3sq), or
    /// for Q-families the bitmask choosing barred letters; 0 otherwise.
    pub variant: u32,
    pub element: P,
}

fn word(letters: &[u32]) -> Poly {
    Poly::word(Word::from(letters))
}

fn check_n(n: u32, min: u32) -> Result<()> {
    if n < min {
        return Err(domain(format!("need at least {min} variables, got {n}")));
    }
    Ok(())
}

/// Ordered tuples of `k` pairwise-distinct indices from `1..=n`.
pub(crate) fn distinct_tuples(n: u32, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 1..=n {
            if !cur.contains(&i) {
                cur.push(i);
                rec(n, k, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, k, &mut cur, &mut out);
    out
}

/// `s·x − x·s`.
fn commutator(s: &Poly, x: &Poly) -> Poly {
    &(s * x) - &(x * s)
}

/// V2, V3, V4 over pairwise-distinct indices in `1..=n`.
pub fn gen_vector_syzygies(n: u32) -> Result<Vec<GeneratorFamily>> {
    check_n(n, 2)?;
    let mut out = Vec::new();
    for t in distinct_tuples(n, 2) {
        let (i, j) = (t[0], t[1]);
        out.push(GeneratorFamily {
            tag: FamilyTag::V2,
            element: &word(&[i, i, j]) - &word(&[j, i, i]),
            indices: t,
            variant: 0,
        });
    }
    for t in distinct_tuples(n, 3) {
        let (i, j, k) = (t[0], t[1], t[2]);
        let sym = &word(&[i, j]) + &word(&[j, i]);
        out.push(GeneratorFamily {
            tag: FamilyTag::V3,
            element: commutator(&sym, &word(&[k])),
            indices: t,
            variant: 0,
        });
    }
    for t in distinct_tuples(n, 4) {
        let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
        let anti = &word(&[i, j, k]) - &word(&[k, j, i]);
        out.push(GeneratorFamily {
            tag: FamilyTag::V4,
            element: commutator(&anti, &word(&[l])),
            indices: t,
            variant: 0,
        });
    }
    Ok(out)
}

/// Q0–Q4 over the `q`/`q̄` alphabet. Each free letter `p_i` ranges over
/// both `q_i` and `q̄_i`; `variant` bit `b` set means the `b`-th free letter
/// is barred.
pub fn gen_quaternion_syzygies(n: u32) -> Result<Vec<GeneratorFamily<QPolynomial>>> {
    check_n(n, 2)?;
    let q = |i: u32| QPolynomial::letter(QLetter::plain(i));
    let qb = |i: u32| QPolynomial::letter(QLetter::bar(i));
    let p = |i: u32, barred: bool| if barred { qb(i) } else { q(i) };
    let bit = |mask: u32, b: u32| mask >> b & 1 == 1;
    let qcomm = |a: &QPolynomial, b: &QPolynomial| &(a * b) - &(b * a);

    let mut out = Vec::new();
    for i in 1..=n {
        out.push(GeneratorFamily {
            tag: FamilyTag::Q0,
            indices: vec![i],
            variant: 0,
            element: qcomm(&q(i), &qb(i)),
        });
    }
    for t in distinct_tuples(n, 2) {
        let (i, j) = (t[0], t[1]);
        let re = &q(i) + &qb(i);
        for mask in 0..2 {
            out.push(GeneratorFamily {
                tag: FamilyTag::Q1,
                indices: t.clone(),
                variant: mask,
                element: qcomm(&re, &p(j, bit(mask, 0))),
            });
        }
    }
    for t in distinct_tuples(n, 2) {
        let (i, j) = (t[0], t[1]);
        let norm = &q(i) * &qb(i);
        for mask in 0..2 {
            out.push(GeneratorFamily {
                tag: FamilyTag::Q2,
                indices: t.clone(),
                variant: mask,
                element: qcomm(&norm, &p(j, bit(mask, 0))),
            });
        }
    }
    for t in distinct_tuples(n, 3) {
        let (i, j, k) = (t[0], t[1], t[2]);
        for mask in 0..8 {
            let pi = p(i, bit(mask, 0));
            let pj = p(j, bit(mask, 1));
            let pk = p(k, bit(mask, 2));
            let prod = &pi * &pj;
            let re = &prod + &prod.qconjugate();
            out.push(GeneratorFamily {
                tag: FamilyTag::Q3,
                indices: t.clone(),
                variant: mask,
                element: qcomm(&re, &pk),
            });
        }
    }
    for t in distinct_tuples(n, 4) {
        let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
        for mask in 0..16 {
            let pi = p(i, bit(mask, 0));
            let pj = p(j, bit(mask, 1));
            let pk = p(k, bit(mask, 2));
            let pl = p(l, bit(mask, 3));
            let prod = &(&pi * &pj) * &pk;
            let re = &prod + &prod.qconjugate();
            out.push(GeneratorFamily {
                tag: FamilyTag::Q4,
                indices: t.clone(),
                variant: mask,
                element: qcomm(&re, &pl),
            });
        }
    }
    Ok(out)
}

/// `2([a] − [b])` for vector words `a`, `b` of equal length.
fn bracket_difference(a: &[u32], b: &[u32]) -> Poly {
    (&bracket(&Word::from(a)) - &bracket(&Word::from(b))).scale(&int(2))
}

fn g3_elements(i1: u32, i2: u32, i3: u32) -> [Poly; 2] {
    [
        bracket_difference(&[i3, i2, i1], &[i1, i3, i2]),
        bracket_difference(&[i3, i1, i2], &[i2, i3, i1]),
    ]
}

/// `2([v_{i3} v_{i2} V v_{i1}] − [v_{i2} V v_{i1} v_{i3}])` with
/// `V = v_{i4} ⋯ v_{im}`.
fn gm_element(chain: &[u32]) -> Poly {
    let (i1, i2, i3) = (chain[0], chain[1], chain[2]);
    let tail = &chain[3..];
    let mut lead = vec![i3, i2];
    lead.extend_from_slice(tail);
    lead.push(i1);
    let mut other = vec![i2];
    other.extend_from_slice(tail);
    other.extend_from_slice(&[i1, i3]);
    bracket_difference(&lead, &other)
}

fn strict_triples(n: u32) -> impl Iterator<Item = (u32, u32, u32)> {
    (1..=n).flat_map(move |a| {
        (a + 1..=n).flat_map(move |b| (b + 1..=n).map(move |c| (a, b, c)))
    })
}

/// Strictly increasing `m`-tuples from `1..=n`.
fn strict_chains(n: u32, m: usize) -> Vec<Vec<u32>> {
    chains(n, m, |_| true)
}

/// Index chains for the general degree-`m` family:
/// `i1 < i2 < i3 <= i4 <= ... <= i_m`, with the last step strict when
/// `m >= 5`.
///
/// At `m = 4` the chain must admit `i3 = i4`: the word `v3 v2 v3 v1` is the
/// leading word of an ideal element and is not divisible by any degree-3
/// lead, so dropping it would leave the base incomplete.
pub fn vgm_chains(n: u32, m: usize) -> Vec<Vec<u32>> {
    chains(n, m, |pos| pos < 3 || (m >= 5 && pos == m - 1))
}

/// Non-decreasing `m`-tuples from `1..=n` whose step into position `pos`
/// is strict when `strict(pos)`.
fn chains(n: u32, m: usize, strict: impl Fn(usize) -> bool) -> Vec<Vec<u32>> {
    fn rec(
        n: u32,
        m: usize,
        strict: &dyn Fn(usize) -> bool,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        let last = cur.last().copied().unwrap_or(0);
        let lo = if strict(cur.len()) { last + 1 } else { last.max(1) };
        for x in lo..=n {
            cur.push(x);
            rec(n, m, strict, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, m, &strict, &mut Vec::with_capacity(m), &mut out);
    out
}

fn rule(tag: FamilyTag, indices: Vec<u32>, variant: u32, element: Poly) -> RewriteRule {
    RewriteRule::from_element(&element, tag, indices, variant)
        .expect("base elements are nonzero")
}

/// The G3 and Gm elements of the multilinear base, `4 <= m <= n`, as
/// generator families (each scaled by 2).
pub fn multilinear_families(n: u32) -> Result<Vec<GeneratorFamily>> {
    check_n(n, 3)?;
    let mut out = Vec::new();
    for (i1, i2, i3) in strict_triples(n) {
        for (variant, element) in g3_elements(i1, i2, i3).into_iter().enumerate() {
            out.push(GeneratorFamily {
                tag: FamilyTag::G3,
                indices: vec![i1, i2, i3],
                variant: variant as u32,
                element,
            });
        }
    }
    for m in 4..=n as usize {
        for c in strict_chains(n, m) {
            out.push(GeneratorFamily {
                tag: FamilyTag::Gm,
                element: gm_element(&c),
                indices: c,
                variant: 0,
            });
        }
    }
    Ok(out)
}

/// The reduced Gröbner base of the multilinear syzygy ideal on `n`
/// variables. Its leads have degree at most `n`.
pub fn gb_multilinear(n: u32) -> Result<RuleSet> {
    let rules = multilinear_families(n)?
        .into_iter()
        .map(|g| rule(g.tag, g.indices, g.variant, g.element))
        .collect();
    Ok(RuleSet::new(rules, n as usize))
}

/// The general base elements up to degree `max_degree`, as generator
/// families (each scaled by 2).
pub fn vector_families(n: u32, max_degree: usize) -> Result<Vec<GeneratorFamily>> {
    if max_degree < 3 {
        return Err(domain(format!("degree bound must be at least 3, got {max_degree}")));
    }
    let mut out = Vec::new();
    for (i1, i2, i3) in strict_triples(n) {
        for (variant, element) in g3_elements(i1, i2, i3).into_iter().enumerate() {
            out.push(GeneratorFamily {
                tag: FamilyTag::G3,
                indices: vec![i1, i2, i3],
                variant: variant as u32,
                element,
            });
        }
    }
    for i1 in 1..=n {
        for i2 in i1 + 1..=n {
            out.push(GeneratorFamily {
                tag: FamilyTag::VG3sq,
                indices: vec![i1, i2],
                variant: 0,
                element: &word(&[i2, i2, i1]) - &word(&[i1, i2, i2]),
            });
            out.push(GeneratorFamily {
                tag: FamilyTag::VG3sq,
                indices: vec![i1, i2],
                variant: 1,
                element: &word(&[i2, i1, i1]) - &word(&[i1, i1, i2]),
            });
        }
    }
    for m in 4..=max_degree {
        for c in vgm_chains(n, m) {
            out.push(GeneratorFamily {
                tag: FamilyTag::VGm,
                element: gm_element(&c),
                indices: c,
                variant: 0,
            });
        }
    }
    Ok(out)
}

/// The reduced Gröbner base of the vector syzygy ideal on `n` variables,
/// truncated at degree `max_degree`.
pub fn gb_vector(n: u32, max_degree: usize) -> Result<RuleSet> {
    let rules = vector_families(n, max_degree)?
        .into_iter()
        .map(|g| rule(g.tag, g.indices, g.variant, g.element))
        .collect();
    Ok(RuleSet::new(rules, max_degree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Multiset;

    #[test]
    fn vector_syzygy_counts() {
        let g = gen_vector_syzygies(2).unwrap();
        assert_eq!(g.iter().filter(|f| f.tag == FamilyTag::V2).count(), 2);
        assert!(g.iter().all(|f| f.tag != FamilyTag::V4));
        let g4 = gen_vector_syzygies(4).unwrap();
        assert_eq!(g4.iter().filter(|f| f.tag == FamilyTag::V4).count(), 24);
        assert!(gen_vector_syzygies(1).is_err());
    }

    #[test]
    fn v3_instance_shape() {
        let g = gen_vector_syzygies(3).unwrap();
        let v3 = g
            .iter()
            .find(|f| f.tag == FamilyTag::V3 && f.indices == [1, 2, 3])
            .unwrap();
        let s = &word(&[1, 2]) + &word(&[2, 1]);
        let expected = &(&s * &word(&[3])) - &(&word(&[3]) * &s);
        assert_eq!(v3.element, expected);
    }

    #[test]
    fn generators_are_multihomogeneous() {
        for g in gen_vector_syzygies(4).unwrap() {
            assert_eq!(g.element.multidegree().len(), 1, "{:?}", g);
        }
        for g in vector_families(4, 6).unwrap() {
            assert_eq!(g.element.multidegree().len(), 1, "{:?}", g);
        }
        let g3 = &multilinear_families(3).unwrap()[0];
        assert_eq!(
            g3.element.multidegree().into_iter().collect::<Vec<_>>(),
            vec![Multiset::new(vec![1, 2, 3])]
        );
    }

    #[test]
    fn multilinear_base_n3() {
        let base = gb_multilinear(3).unwrap();
        assert_eq!(base.len(), 2);
        let r = &base.rules()[0];
        assert_eq!(r.lead, Word::from([3, 2, 1]));
        let rhs = &(&word(&[1, 2, 3]) + &word(&[1, 3, 2])) - &word(&[2, 3, 1]);
        assert_eq!(r.rhs, rhs);
        assert!(gb_multilinear(2).is_err());
    }

    #[test]
    fn multilinear_base_n4() {
        let base = gb_multilinear(4).unwrap();
        let g3 = base.rules().iter().filter(|r| r.tag == Some(FamilyTag::G3)).count();
        let g4: Vec<_> = base.rules().iter().filter(|r| r.tag == Some(FamilyTag::Gm)).collect();
        assert_eq!((g3, g4.len()), (8, 1));
        assert_eq!(g4[0].lead, Word::from([3, 2, 4, 1]));
        let rhs = &(&word(&[3, 1, 4, 2]) + &word(&[2, 4, 1, 3])) - &word(&[1, 4, 2, 3]);
        assert_eq!(g4[0].rhs, rhs);
    }

    #[test]
    fn square_rules_n2() {
        let base = gb_vector(2, 3).unwrap();
        let leads: Vec<String> = base.rules().iter().map(|r| r.to_string()).collect();
        assert_eq!(leads, vec!["v2*v2*v1 -> v1*v2*v2", "v2*v1*v1 -> v1*v1*v2"]);
        assert!(gb_vector(2, 2).is_err());
    }

    #[test]
    fn vgm_chains_match_pattern() {
        // n = 3: at m = 4 only i3 = i4 = 3 is possible; at m = 5 the strict
        // final step needs i5 > 3
        assert_eq!(vgm_chains(3, 4), vec![vec![1, 2, 3, 3]]);
        assert!(vgm_chains(3, 5).is_empty());
        assert_eq!(vgm_chains(4, 5), vec![vec![1, 2, 3, 3, 4]]);
        for m in 4..=7 {
            for c in vgm_chains(5, m) {
                assert!(c[0] < c[1] && c[1] < c[2]);
                assert!(c.windows(2).all(|w| w[0] <= w[1]));
                if m >= 5 {
                    assert!(c[m - 2] < c[m - 1]);
                }
            }
        }
    }

    #[test]
    fn vgm_leads_have_expected_shape() {
        let base = gb_vector(4, 6).unwrap();
        for r in base.rules().iter().filter(|r| r.tag == Some(FamilyTag::VGm)) {
            let c = &r.indices;
            let mut expect = vec![c[2], c[1]];
            expect.extend_from_slice(&c[3..]);
            expect.push(c[0]);
            assert_eq!(r.lead.letters(), &expect[..]);
        }
    }

    #[test]
    fn quaternion_syzygy_shapes() {
        let g = gen_quaternion_syzygies(2).unwrap();
        let q0 = g.iter().find(|f| f.tag == FamilyTag::Q0).unwrap();
        assert_eq!(q0.element.to_string(), "-q1'*q1 + q1*q1'");
        let q1 = g
            .iter()
            .find(|f| f.tag == FamilyTag::Q1 && f.indices == [1, 2] && f.variant == 0)
            .unwrap();
        let expect = QPolynomial::letter(QLetter::plain(1)) + QPolynomial::letter(QLetter::bar(1));
        let q2 = QPolynomial::letter(QLetter::plain(2));
        assert_eq!(q1.element, &(&expect * &q2) - &(&q2 * &expect));
        let q4 = gen_quaternion_syzygies(4).unwrap();
        assert_eq!(q4.iter().filter(|f| f.tag == FamilyTag::Q4).count(), 24 * 16);
    }
}
