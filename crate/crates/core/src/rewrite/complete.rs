use std::collections::BTreeMap;

use super::{normalize_unchecked, overlaps, RewriteRule, RuleSet};
use crate::error::{domain, Error, Result};
use crate::freealg::Poly;

/// Default limit on the number of rules `complete` may create.
pub const DEFAULT_RULE_CAP: usize = 100_000;

/// Degree-by-degree completion of homogeneous generators up to
/// `max_degree`, with the default rule cap.
pub fn complete(generators: &[Poly], max_degree: usize) -> Result<RuleSet> {
    complete_with_cap(generators, max_degree, DEFAULT_RULE_CAP)
}

/// Bounded completion: at each degree `k` the generators of degree `k` and
/// the S-polynomials of overlap words of degree `k` are reduced by the
/// rules found so far, and every nonzero remainder becomes a new monic
/// rule. For homogeneous input this yields every leading word of the ideal
/// up to `max_degree`. The result is tail-reduced.
pub fn complete_with_cap(generators: &[Poly], max_degree: usize, cap: usize) -> Result<RuleSet> {
    let mut by_degree: BTreeMap<usize, Vec<&Poly>> = BTreeMap::new();
    for g in generators {
        if g.is_zero() {
            continue;
        }
        if !g.is_homogeneous() {
            return Err(domain(format!("generator {g} is not homogeneous")));
        }
        by_degree.entry(g.degree()).or_default().push(g);
    }

    let mut rules: Vec<RewriteRule> = Vec::new();
    for k in 0..=max_degree {
        let mut base = RuleSet::new(rules.clone(), max_degree);
        let mut candidates: Vec<Poly> = by_degree.get(&k).into_iter().flatten().map(|g| (*g).clone()).collect();
        // overlaps among rules of lower degree that land exactly at degree k
        for o in overlaps(&base, k) {
            if o.word.degree() == k {
                candidates.push(o.s_polynomial(&base));
            }
        }
        for c in candidates {
            let r = normalize_unchecked(&c, &base);
            if let Some(rule) = RewriteRule::computed(&r) {
                rules.push(rule);
                if rules.len() > cap {
                    return Err(Error::RuleCap { cap, degree: k });
                }
                base = RuleSet::new(rules.clone(), max_degree);
            }
        }
    }
    Ok(RuleSet::new(rules, max_degree).tail_reduced())
}
