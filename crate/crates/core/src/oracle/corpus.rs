//! Polynomial identities among vector variables, each stored as
//! `lhs - rhs` expanded to words.
//!
//! Identities quantified over arbitrary indices are instantiated once per
//! order type: every index tuple whose values are exactly `1..=r` for some
//! `r`. Since the rewrite rules only see the relative order of indices, this
//! covers every index choice up to relabeling. Arity-6 identities use the
//! distinct-index order types only, to keep the corpus small.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use super::eval::{zero_test, Verdict};
use crate::error::Result;
use crate::freealg::{cross, int, rat, Poly, Word};
use crate::rewrite::{normalize, RuleSet};
use crate::syzygy::gb_vector;

/// A named polynomial that must vanish modulo the syzygy ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct CorpusItem {
    /// The identity this item instantiates.
    pub family: &'static str,
    /// Family plus the index tuple, e.g. `triple-bracket-cramer[1,2,3,4]`.
    pub name: String,
    pub poly: Poly,
}

/// The full corpus over at most six variables.
pub fn identity_corpus() -> Vec<CorpusItem> {
    identity_corpus_up_to(6)
}

/// The corpus restricted to items whose variables lie in `v1..v{max_n}`.
pub fn identity_corpus_up_to(max_n: u32) -> Vec<CorpusItem> {
    let mut c = Corpus::default();
    commutation(&mut c);
    cross_products(&mut c);
    bracket_products(&mut c);
    expansions(&mut c);
    rule_multiples(&mut c);
    monomial_commutators(&mut c);
    c.items.retain(|it| it.poly.max_vector_index() <= max_n);
    c.items
}

#[derive(Default)]
struct Corpus {
    items: Vec<CorpusItem>,
}

impl Corpus {
    fn push(&mut self, family: &'static str, idx: &[u32], poly: Poly) {
        let list: Vec<String> = idx.iter().map(u32::to_string).collect();
        self.items.push(CorpusItem {
            family,
            name: format!("{family}[{}]", list.join(",")),
            poly,
        });
    }

    /// One item per order type of arity `k`.
    fn each(&mut self, family: &'static str, k: usize, f: impl Fn(&[u32]) -> Poly) {
        let tuples = if k >= 6 { permutations(k) } else { order_types(k) };
        for t in tuples {
            let p = f(&t);
            self.push(family, &t, p);
        }
    }
}

/// Index tuples of length `k` whose value set is `{1, ..., r}` for some `r`,
/// in lexicographic order.
pub fn order_types(k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            let max = cur.iter().copied().max().unwrap_or(0);
            if (1..=max).all(|v| cur.contains(&v)) {
                out.push(cur.clone());
            }
            return;
        }
        for v in 1..=k as u32 {
            cur.push(v);
            rec(k, cur, out);
            cur.pop();
        }
    }
    rec(k, &mut cur, &mut out);
    out
}

/// All orderings of `1..=k`, in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<u32>> {
    order_types(k)
        .into_iter()
        .filter(|t| t.iter().max().map_or(0, |&m| m as usize) == k)
        .collect()
}

fn v(i: u32) -> Poly {
    Poly::var(i)
}

fn w(letters: &[u32]) -> Poly {
    Poly::word(Word::from(letters))
}

fn br(p: &Poly) -> Poly {
    p.bracket()
}

fn comm(a: &Poly, b: &Poly) -> Poly {
    &(a * b) - &(b * a)
}

fn half(p: &Poly) -> Poly {
    p.scale_rational(&rat(1, 2))
}

fn sign_of(seq: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                s = -s;
            }
        }
    }
    s
}

fn pick(t: &[u32], positions: &[usize]) -> Vec<u32> {
    positions.iter().map(|&p| t[p]).collect()
}

fn subsets(m: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, m: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, size, cur, out);
            cur.pop();
        }
    }
    rec(0, m, size, &mut cur, &mut out);
    out
}

fn complement(m: usize, s: &[usize]) -> Vec<usize> {
    (0..m).filter(|i| !s.contains(i)).collect()
}

fn commutation(c: &mut Corpus) {
    c.each("square-commutes", 2, |t| &w(&[t[0], t[0], t[1]]) - &w(&[t[1], t[0], t[0]]));
    c.each("symmetric-pair-commutes", 3, |t| {
        let s = &w(&[t[0], t[1]]) + &w(&[t[1], t[0]]);
        comm(&s, &v(t[2]))
    });
    c.each("antisymmetric-triple-commutes", 4, |t| {
        let a = &w(&[t[0], t[1], t[2]]) - &w(&[t[2], t[1], t[0]]);
        comm(&a, &v(t[3]))
    });
    c.each("triple-bracket-shift", 3, |t| {
        &br(&w(&[t[0], t[1], t[2]])) - &br(&w(&[t[2], t[0], t[1]]))
    });
    c.each("quadruple-bracket-shift", 4, |t| {
        &br(&w(&[t[0], t[1], t[2], t[3]])) - &br(&w(&[t[3], t[0], t[1], t[2]]))
    });
    c.each("triple-bracket-cramer", 4, |t| {
        let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
        let terms = [
            &br(&w(&[i, j, k])) * &v(l),
            -(&br(&w(&[i, j, l])) * &v(k)),
            &br(&w(&[i, k, l])) * &v(j),
            -(&v(i) * &br(&w(&[j, k, l]))),
        ];
        terms.iter().fold(Poly::zero(), |acc, p| &acc + p)
    });
}

fn cross_products(c: &mut Corpus) {
    c.each("double-cross", 3, |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        let lhs = cross(&cross(&v(i), &v(j)), &v(k));
        let rhs = &(&br(&w(&[j, k])) * &v(i)) - &(&br(&w(&[i, k])) * &v(j));
        &lhs - &rhs
    });
    c.each("double-cross-words", 3, |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        let lhs = cross(&cross(&v(i), &v(j)), &v(k));
        &lhs - &half(&(&w(&[i, j, k]) - &w(&[k, i, j])))
    });
    c.each("cross-pair-bracket", 4, |t| {
        let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
        let lhs = br(&(&cross(&v(i), &v(j)) * &cross(&v(k), &v(l))));
        let rhs = &(&br(&w(&[i, l])) * &br(&w(&[j, k]))) - &(&br(&w(&[i, k])) * &br(&w(&[j, l])));
        &lhs - &rhs
    });
    c.each("cross-pair-bracket-words", 4, |t| {
        let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
        let lhs = br(&(&cross(&v(i), &v(j)) * &cross(&v(k), &v(l))));
        &lhs - &br(&(&w(&[i, j]) * &cross(&v(k), &v(l))))
    });
    c.each("cross-of-crosses", 4, |t| {
        let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
        let lhs = cross(&cross(&v(i), &v(j)), &cross(&v(k), &v(l)));
        let rhs = &(&br(&w(&[j, k, l])) * &v(i)) - &(&br(&w(&[i, k, l])) * &v(j));
        &lhs - &rhs
    });
    c.each("cross-of-crosses-words", 4, |t| {
        let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
        let lhs = cross(&cross(&v(i), &v(j)), &cross(&v(k), &v(l)));
        &lhs - &half(&(&w(&[i, j, k, l]) - &w(&[k, l, i, j])))
    });

    let x = cross(&v(1), &v(2));
    let square = &x * &x;
    c.push("cross-square", &[1, 2], &br(&(&x * &w(&[1, 2]))) - &square);
    let words = (&(&w(&[1, 2, 1, 2]) + &w(&[2, 1, 2, 1])) - &w(&[1, 1, 2, 2]).scale(&int(2)))
        .scale_rational(&rat(1, 4));
    c.push("cross-square-words", &[1, 2], &square - &words);

    c.each("cross-bracket-cramer", 5, |t| {
        let (i, j, k, l, m) = (t[0], t[1], t[2], t[3], t[4]);
        let x = cross(&v(i), &v(j));
        let xb = |a: u32, b: u32| br(&(&x * &w(&[a, b])));
        let terms = [
            &xb(k, l) * &v(m),
            -(&xb(k, m) * &v(l)),
            &xb(l, m) * &v(k),
            -(&br(&w(&[k, l, m])) * &x),
        ];
        terms.iter().fold(Poly::zero(), |acc, p| &acc + p)
    });
}

fn bracket_products(c: &mut Corpus) {
    c.each("triple-bracket-determinant", 6, |t| {
        let lhs = &br(&w(&t[..3])) * &br(&w(&t[3..]));
        let g = |a: usize, b: usize| br(&w(&[t[a], t[3 + b]]));
        let mut det = Poly::zero();
        for p in permutations(3) {
            let p: Vec<usize> = p.iter().map(|&x| x as usize - 1).collect();
            let term = &(&g(0, p[0]) * &g(1, p[1])) * &g(2, p[2]);
            det = &det + &term.scale(&int(sign_of(&p)));
        }
        &lhs + &det
    });
    for k in 1..=4 {
        c.each("bracket-central", k + 1, |t| comm(&v(t[0]), &br(&w(&t[1..]))));
        c.each("bracket-shift", k + 1, |t| {
            let tail: Vec<u32> = t[1..].iter().chain(&t[..1]).copied().collect();
            &br(&w(t)) - &br(&w(&tail))
        });
    }
}

// Expansions of the bracket and vector part of a word of length m into
// products of shorter brackets; the sign of each reordering is carried by
// the first factor.
fn expansions(c: &mut Corpus) {
    for m in [4, 6] {
        c.each("even-bracket-expansion", m, |t| {
            let mut rhs = Poly::zero();
            for i in 1..m {
                let rest: Vec<u32> = (1..m).filter(|&r| r != i).map(|r| t[r]).collect();
                let term = &br(&w(&[t[0], t[i]])) * &br(&w(&rest));
                rhs = &rhs + &term.scale(&int(if i % 2 == 1 { 1 } else { -1 }));
            }
            &br(&w(t)) - &rhs
        });
        c.each("even-vector-expansion", m, |t| {
            let mut rhs = Poly::zero();
            for two in subsets(m, 2) {
                let one = complement(m, &two);
                let order: Vec<usize> = one.iter().chain(&two).copied().collect();
                let term = &br(&w(&pick(t, &one))) * &w(&pick(t, &two)).vector_part();
                rhs = &rhs + &term.scale(&int(sign_of(&order)));
            }
            &w(t).vector_part() - &rhs
        });
    }
    for m in [3, 5] {
        c.each("odd-vector-expansion", m, |t| {
            let mut rhs = Poly::zero();
            for p in 0..m {
                let rest = complement(m, &[p]);
                let order: Vec<usize> = rest.iter().chain(&[p]).copied().collect();
                let term = &br(&w(&pick(t, &rest))) * &v(t[p]);
                rhs = &rhs + &term.scale(&int(sign_of(&order)));
            }
            &w(t).vector_part() - &rhs
        });
    }
    c.each("odd-bracket-expansion", 5, |t| {
        let mut rhs = Poly::zero();
        for three in subsets(5, 3) {
            let rest = complement(5, &three);
            let order: Vec<usize> = rest.iter().chain(&three).copied().collect();
            let term = &br(&w(&pick(t, &rest))) * &br(&w(&pick(t, &three)));
            rhs = &rhs + &term.scale(&int(sign_of(&order)));
        }
        &br(&w(t)) - &rhs
    });
}

/// `v_c v_b v_a - v_a v_b v_c - v_a v_c v_b + v_b v_c v_a`: twice the
/// difference of the two brackets whose leading word is `v_c v_b v_a`.
fn g3(c: u32, b: u32, a: u32) -> Poly {
    let terms = [w(&[c, b, a]), -w(&[a, b, c]), -w(&[a, c, b]), w(&[b, c, a])];
    terms.iter().fold(Poly::zero(), |acc, p| &acc + p)
}

// Polynomials that are one-sided multiples of base elements, taken from the
// critical cases of the multilinear Gröbner argument. Each must reduce to 0.
fn rule_multiples(c: &mut Corpus) {
    c.push("left-times-triple-rule", &[4, 3, 2, 1], &v(4) * &g3(3, 2, 1));
    c.push("left-times-triple-rule", &[4, 3, 1, 2], &v(4) * &g3(3, 1, 2));

    // v5 v_a (v4 v_b v_c + v_b v4 v_c - v_c v4 v_b - v_c v_b v4), all (a, b, c)
    for p in permutations(3) {
        let (a, b, cc) = (p[0], p[1], p[2]);
        let inner = [
            w(&[4, b, cc]),
            w(&[b, 4, cc]),
            -w(&[cc, 4, b]),
            -w(&[cc, b, 4]),
        ]
        .iter()
        .fold(Poly::zero(), |acc, x| &acc + x);
        c.push("pair-times-triple-rule", &[5, a, 4, b, cc], &w(&[5, a]) * &inner);
    }

    // v_w (v3 X - X v3) with X = v2 Y v1 + (-1)^q v1 Y† v2, Y ascending
    for q in [5u32, 6] {
        for lead in 4..=q {
            let y: Vec<u32> = (4..=q).filter(|&i| i != lead).collect();
            let yr: Vec<u32> = y.iter().rev().copied().collect();
            let s = int(if q % 2 == 0 { 1 } else { -1 });
            let x = &w(&[&[2][..], &y, &[1]].concat())
                + &w(&[&[1][..], &yr, &[2]].concat()).scale(&s);
            let h = &v(lead) * &comm(&v(3), &x);
            let mut idx = vec![lead, 3, 2];
            idx.extend(&y);
            idx.push(1);
            c.push("letter-times-bracket-commutator", &idx, h);
        }
    }

    // v4 v3 Y v5 G3(6, 2, 1) and the two sibling cases
    let q = 6;
    for (prefix, rule) in [
        ([4, 3], g3(q, 2, 1)),
        ([4, 3], g3(q, 1, 2)),
        ([4, 2], g3(q, 1, 3)),
    ] {
        let mut idx = prefix.to_vec();
        idx.push(q - 1);
        idx.extend(rule.leading_word().expect("nonzero").letters());
        c.push("prefix-times-triple-rule", &idx, &w(&[prefix[0], prefix[1], q - 1]) * &rule);
    }

    // v3 v2 Y G3(q, 1, q-1), Y = 4..q-1
    for q in [5u32, 6] {
        let mut prefix = vec![3, 2];
        prefix.extend(4..q - 1);
        let mut idx = prefix.clone();
        idx.extend([q, 1, q - 1]);
        c.push("ascending-prefix-times-triple-rule", &idx, &w(&prefix) * &g3(q, 1, q - 1));
    }
}

fn monomial_commutators(c: &mut Corpus) {
    for m in 2..=6 {
        let tuples = if m >= 6 { permutations(m) } else { order_types(m) };
        for t in &tuples {
            for j in 1..m {
                let (a, b) = (w(&t[..j]), w(&t[j..]));
                let k = m - j;
                let sk = int(if k % 2 == 0 { 1 } else { -1 });
                let sym = &b + &b.reversion().scale(&sk);
                c.push("symmetrized-word-commutes", t, comm(&sym, &a));

                let sjk = int(if m % 2 == 0 { 1 } else { -1 });
                let rev = comm(&a.reversion(), &b.reversion());
                c.push("reversed-commutator", t, &comm(&a, &b) - &rev.scale(&sjk));
            }
        }
    }

    // v_{i3} Y v_{i1} v_{i2} rewritten with the order-reducing identity, with
    // i1, i2 below every other letter
    for a in 0..=3usize {
        for (i1, i2) in [(1u32, 2u32), (2, 1)] {
            for rest in permutations(a + 1) {
                let rest: Vec<u32> = rest.iter().map(|x| x + 2).collect();
                let (i3, ya) = (rest[0], &rest[1..]);
                let yr: Vec<u32> = ya.iter().rev().copied().collect();
                let s = int(if a % 2 == 0 { 1 } else { -1 });
                let lhs = w(&[&[i3][..], ya, &[i1, i2]].concat());
                let inner = &w(&[ya, &[i1, i3]].concat()) + &w(&[&[i3, i1][..], &yr].concat()).scale(&s);
                let rhs = &(&v(i2) * &inner) - &w(&[&[i1][..], &yr, &[i3, i2]].concat()).scale(&s);
                let idx = [&[i3][..], ya, &[i1, i2]].concat();
                c.push("order-reducing", &idx, &lhs - &rhs);
            }
        }
    }
}

/// Result of checking one corpus item by both routes.
#[derive(Clone, Debug, PartialEq)]
pub struct CorpusCheck {
    pub family: &'static str,
    pub name: String,
    /// The normal form modulo the vector base is zero.
    pub normalizes_to_zero: bool,
    pub verdict: Verdict,
}

impl CorpusCheck {
    pub fn passed(&self) -> bool {
        self.normalizes_to_zero && self.verdict.passed()
    }
}

impl fmt::Display for CorpusCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let nf = if self.normalizes_to_zero { "0" } else { "nonzero" };
        let zt = match &self.verdict {
            Verdict::Zero { trials } => format!("zero on {trials} trials"),
            Verdict::Counterexample { trial, .. } => format!("nonzero at trial {trial}"),
        };
        write!(f, "{status} {}: normal form {nf}, {zt}", self.name)
    }
}

/// Normalizes each item modulo the vector base for its variables and
/// degree, and separately zero-tests it at `trials` random assignments.
pub fn check_corpus(items: &[CorpusItem], trials: usize, seed: u64) -> Result<Vec<CorpusCheck>> {
    let mut bases: HashMap<(u32, usize), RuleSet> = HashMap::new();
    for it in items {
        let key = base_key(&it.poly);
        if let std::collections::hash_map::Entry::Vacant(e) = bases.entry(key) {
            e.insert(gb_vector(key.0, key.1)?);
        }
    }
    items
        .par_iter()
        .map(|it| {
            let base = &bases[&base_key(&it.poly)];
            Ok(CorpusCheck {
                family: it.family,
                name: it.name.clone(),
                normalizes_to_zero: normalize(&it.poly, base)?.is_zero(),
                verdict: zero_test(&it.poly, trials, seed),
            })
        })
        .collect()
}

fn base_key(p: &Poly) -> (u32, usize) {
    (p.max_vector_index().max(1), p.degree().max(3))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_type_counts() {
        // ordered set partitions
        let counts: Vec<usize> = (1..=5).map(|k| order_types(k).len()).collect();
        assert_eq!(counts, vec![1, 3, 13, 75, 541]);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(order_types(2), vec![vec![1, 1], vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn double_cross_item_matches_hand_expansion() {
        let corpus = identity_corpus();
        let item = corpus.iter().find(|i| i.name == "double-cross[1,2,3]").unwrap();
        // (v1 x v2) x v3 = (v1v2v3 - v2v1v3 - v3v1v2 + v3v2v1)/4
        let x = cross(&cross(&v(1), &v(2)), &v(3));
        let expected = &x - &(&br(&w(&[2, 3])) * &v(1)) + br(&w(&[1, 3])) * v(2);
        assert_eq!(item.poly, expected);
        assert_eq!(x.len(), 4);
    }

    #[test]
    fn determinant_item_uses_six_letters() {
        let corpus = identity_corpus();
        let item = corpus
            .iter()
            .find(|i| i.name == "triple-bracket-determinant[1,2,3,4,5,6]")
            .unwrap();
        assert_eq!(item.poly.degree(), 6);
        assert!(item.poly.terms().all(|(w, _)| w.is_multilinear()));
    }

    #[test]
    fn prefix_rule_item_at_six() {
        let corpus = identity_corpus();
        let item = corpus
            .iter()
            .find(|i| i.name == "prefix-times-triple-rule[4,3,5,6,2,1]")
            .unwrap();
        assert_eq!(item.poly.leading_word(), Some(&Word::from([4, 3, 5, 6, 2, 1])));
    }

    #[test]
    fn flipped_sign_is_caught_by_both_routes() {
        // the real-vector-algebra sign convention is wrong here
        let x = cross(&cross(&v(1), &v(2)), &v(3));
        let wrong = &(&x + &(&br(&w(&[2, 3])) * &v(1))) - &(&br(&w(&[1, 3])) * &v(2));
        let item = CorpusItem {
            family: "double-cross",
            name: "flipped".into(),
            poly: wrong,
        };
        let check = &check_corpus(&[item], 20, 0).unwrap()[0];
        assert!(!check.normalizes_to_zero);
        assert!(!check.verdict.passed());
        assert!(check.to_string().starts_with("FAIL flipped"));
    }

    #[test]
    fn restriction_by_variable_count() {
        let small = identity_corpus_up_to(3);
        assert!(small.iter().all(|i| i.poly.max_vector_index() <= 3));
        assert!(small.iter().any(|i| i.family == "cross-square"));
    }

    #[test]
    fn sample_items_vanish() {
        let corpus = identity_corpus_up_to(4);
        let sample: Vec<CorpusItem> = corpus.into_iter().step_by(7).collect();
        for c in check_corpus(&sample, 10, 3).unwrap() {
            assert!(c.passed(), "{c}");
        }
    }
}
