use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::One;

use crate::freealg::{Poly, Rational, Word};
use crate::syzygy::FamilyTag;

/// A monic base element split as `lead -> rhs`: the element is
/// `lead - rhs`, and every word of `rhs` is smaller than `lead`.
#[derive(Clone, Debug, PartialEq)]
pub struct RewriteRule {
    pub lead: Word,
    pub rhs: Poly,
    /// The closed-form family this rule instantiates; `None` for rules
    /// found by completion.
    pub tag: Option<FamilyTag>,
    pub indices: Vec<u32>,
    pub variant: u32,
}

impl RewriteRule {
    /// Scales `element` to be monic and splits off its leading word.
    /// Returns `None` for the zero polynomial.
    pub fn from_element(
        element: &Poly,
        tag: impl Into<Option<FamilyTag>>,
        indices: Vec<u32>,
        variant: u32,
    ) -> Option<RewriteRule> {
        let (lead, c) = element.leading_term()?;
        let lead = lead.clone();
        let inv = -c.recip();
        let mut rhs = element.scale(&inv);
        rhs.add_term(lead.clone(), Rational::one());
        debug_assert!(rhs.coeff(&lead).is_none());
        Some(RewriteRule {
            lead,
            rhs,
            tag: tag.into(),
            indices,
            variant,
        })
    }

    /// A rule with no family information.
    pub fn computed(element: &Poly) -> Option<RewriteRule> {
        Self::from_element(element, None, Vec::new(), 0)
    }

    /// The monic base element `lead - rhs`.
    pub fn element(&self) -> Poly {
        &Poly::word(self.lead.clone()) - &self.rhs
    }

    pub fn degree(&self) -> usize {
        self.lead.degree()
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.tag.cmp(&other.tag))
            .then_with(|| self.indices.cmp(&other.indices))
            .then_with(|| self.variant.cmp(&other.variant))
            .then_with(|| self.lead.cmp(&other.lead))
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lead, self.rhs)
    }
}

/// Leftmost offset of `lead` inside `w`. The empty word occurs at 0.
pub fn find_factor(w: &Word, lead: &Word) -> Option<usize> {
    let (w, l) = (w.letters(), lead.letters());
    if l.len() > w.len() {
        return None;
    }
    (0..=w.len() - l.len()).find(|&p| &w[p..p + l.len()] == l)
}

/// A family of rewrite rules in canonical order, valid for words up to a
/// degree bound.
#[derive(Clone, Debug)]
pub struct RuleSet {
    rules: Vec<RewriteRule>,
    degree_bound: usize,
    // lead -> first rule with that lead, in canonical order
    by_lead: HashMap<Vec<u32>, usize>,
    lead_lengths: Vec<usize>,
}

impl RuleSet {
    /// Sorts `rules` into canonical order: degree, family tag, index tuple,
    /// variant, lead.
    pub fn new(mut rules: Vec<RewriteRule>, degree_bound: usize) -> RuleSet {
        rules.sort_by(RewriteRule::canonical_cmp);
        let mut by_lead = HashMap::new();
        let mut lengths = BTreeSet::new();
        for (i, r) in rules.iter().enumerate() {
            by_lead.entry(r.lead.letters().to_vec()).or_insert(i);
            lengths.insert(r.lead.degree());
        }
        RuleSet {
            rules,
            degree_bound,
            by_lead,
            lead_lengths: lengths.into_iter().collect(),
        }
    }

    pub fn empty(degree_bound: usize) -> RuleSet {
        RuleSet::new(Vec::new(), degree_bound)
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Highest degree of input this set is guaranteed to normalize correctly.
    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn leads(&self) -> impl Iterator<Item = &Word> {
        self.rules.iter().map(|r| &r.lead)
    }

    pub fn lead_set(&self) -> BTreeSet<Word> {
        self.leads().cloned().collect()
    }

    /// Rule whose lead is exactly `lead`.
    pub fn rule_for_lead(&self, lead: &[u32]) -> Option<&RewriteRule> {
        self.by_lead.get(lead).map(|&i| &self.rules[i])
    }

    /// Copy without the rules matching `drop`.
    pub fn without(&self, drop: impl Fn(&RewriteRule) -> bool) -> RuleSet {
        let rules = self.rules.iter().filter(|r| !drop(r)).cloned().collect();
        RuleSet::new(rules, self.degree_bound)
    }

    /// Copy keeping only rules of degree at most `d`.
    pub fn truncated(&self, d: usize) -> RuleSet {
        let rules = self.rules.iter().filter(|r| r.degree() <= d).cloned().collect();
        RuleSet::new(rules, self.degree_bound.min(d))
    }

    /// Leftmost match in `w`: the offset and the first rule (in canonical
    /// order) whose lead starts there.
    pub fn first_match(&self, w: &[u32]) -> Option<(usize, usize)> {
        for start in 0..w.len() {
            let mut best: Option<usize> = None;
            for &len in &self.lead_lengths {
                if start + len > w.len() {
                    break;
                }
                if let Some(&i) = self.by_lead.get(&w[start..start + len]) {
                    best = Some(best.map_or(i, |b| b.min(i)));
                }
            }
            if let Some(i) = best {
                return Some((start, i));
            }
        }
        None
    }

    /// Every `(offset, rule)` such that the rule's lead occurs in `w` at
    /// that offset.
    pub fn all_matches(&self, w: &[u32]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for start in 0..w.len() {
            for &len in &self.lead_lengths {
                if start + len > w.len() {
                    break;
                }
                let slice = &w[start..start + len];
                for (i, r) in self.rules.iter().enumerate() {
                    if r.lead.letters() == slice {
                        out.push((start, i));
                    }
                }
            }
        }
        out
    }

    /// True when no lead occurs in `w`.
    pub fn is_irreducible(&self, w: &[u32]) -> bool {
        self.first_match(w).is_none()
    }

    /// Pairs of distinct rules where one lead is a factor of the other.
    pub fn lead_containments(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, a) in self.rules.iter().enumerate() {
            for (j, b) in self.rules.iter().enumerate() {
                if i != j && find_factor(&a.lead, &b.lead).is_some() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Replaces each right-hand side by its normal form with respect to the
    /// whole set.
    pub fn tail_reduced(&self) -> RuleSet {
        let rules = self
            .rules
            .iter()
            .map(|r| {
                let rhs = super::normalize_unchecked(&r.rhs, self);
                RewriteRule { rhs, ..r.clone() }
            })
            .collect();
        RuleSet::new(rules, self.degree_bound)
    }
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::int;

    #[test]
    fn find_factor_examples() {
        let w = Word::from([2, 4, 1, 3]);
        assert_eq!(find_factor(&w, &Word::from([4, 1, 3])), Some(1));
        assert_eq!(find_factor(&Word::from([1, 2, 3]), &Word::from([3, 2, 1])), None);
        assert_eq!(find_factor(&w, &Word::empty()), Some(0));
        assert_eq!(find_factor(&Word::from([1, 2, 1, 2]), &Word::from([1, 2])), Some(0));
    }

    #[test]
    fn rule_from_element_is_monic() {
        let p = &Poly::word(Word::from([2, 1])).scale(&int(-2)) + &Poly::word(Word::from([1, 2])).scale(&int(4));
        let r = RewriteRule::computed(&p).unwrap();
        assert_eq!(r.lead, Word::from([2, 1]));
        assert_eq!(r.to_string(), "v2*v1 -> 2*v1*v2");
        assert_eq!(r.element(), p.scale(&Rational::new((-1).into(), 2.into())));
        assert!(RewriteRule::computed(&Poly::zero()).is_none());
    }

    #[test]
    fn leftmost_then_canonical() {
        let a = RewriteRule::computed(&Poly::word(Word::from([2, 1]))).unwrap();
        let b = RewriteRule::computed(&Poly::word(Word::from([1, 2, 1]))).unwrap();
        let set = RuleSet::new(vec![b, a], 3);
        // degree orders v2*v1 first; v1*v2*v1 still matches further left
        assert_eq!(set.rules()[0].lead, Word::from([2, 1]));
        assert_eq!(set.first_match(&[1, 2, 1]), Some((0, 1)));
        assert_eq!(set.first_match(&[3, 2, 1]), Some((1, 0)));
        assert_eq!(set.first_match(&[1, 1]), None);
        assert_eq!(set.all_matches(&[1, 2, 1]).len(), 2);
        assert_eq!(set.lead_containments(), vec![(1, 0)]);
    }

    #[test]
    fn zero_rhs_displays() {
        let r = RewriteRule::computed(&Poly::word(Word::from([2, 1]))).unwrap();
        assert!(r.rhs.is_zero());
        assert_eq!(r.to_string(), "v2*v1 -> 0");
    }
}
