//! Reduction of polynomials modulo a rule set: factor matching, normal
//! forms, structural normality predicates, critical-pair checks and
//! bounded completion.

mod complete;
mod normal;
mod overlap;
mod rules;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::freealg::{Coefficient, Polynomial, Word};

pub use complete::{complete, complete_with_cap, DEFAULT_RULE_CAP};
pub use normal::{is_normal_structural, NormalMode};
pub use overlap::{
    check_groebner, check_groebner_for, check_groebner_multilinear, overlaps, GroebnerReport,
    Obstruction, Residue, ResidueSource,
};
pub use rules::{find_factor, RewriteRule, RuleSet};

fn check_bound<C: Coefficient>(p: &Polynomial<C>, base: &RuleSet) -> Result<()> {
    if p.degree() > base.degree_bound() {
        return Err(Error::DegreeBound {
            degree: p.degree(),
            bound: base.degree_bound(),
        });
    }
    Ok(())
}

/// `c · left · rhs · right`, added into `target`.
fn add_rewrite<C: Coefficient>(
    target: &mut Polynomial<C>,
    c: &C,
    word: &Word,
    offset: usize,
    rule: &RewriteRule,
) {
    let letters = word.letters();
    let left = &letters[..offset];
    let right = &letters[offset + rule.lead.degree()..];
    for (w, r) in rule.rhs.terms() {
        target.add_term(Word::sandwich(left, w.letters(), right), c.mul_rational(r));
    }
}

/// One reduction step: the highest reducible term is rewritten at its
/// leftmost lead occurrence by the first matching rule.
pub fn reduce_once<C: Coefficient>(
    p: &Polynomial<C>,
    base: &RuleSet,
) -> Result<(Polynomial<C>, bool)> {
    check_bound(p, base)?;
    for (w, c) in p.terms() {
        if let Some((offset, i)) = base.first_match(w.letters()) {
            let mut out = p.clone();
            let c = c.clone();
            let w = w.clone();
            out.terms_mut().remove(&w);
            add_rewrite(&mut out, &c, &w, offset, &base.rules()[i]);
            return Ok((out, true));
        }
    }
    Ok((p.clone(), false))
}

/// The normal form of `p`: no word of the result contains a lead.
///
/// Fails when `p` has higher degree than the set's bound, since rules
/// beyond the bound may be missing.
pub fn normalize<C: Coefficient>(p: &Polynomial<C>, base: &RuleSet) -> Result<Polynomial<C>> {
    check_bound(p, base)?;
    Ok(normalize_unchecked(p, base))
}

// Same strategy as iterating `reduce_once`: rewrites only produce smaller
// words, so once the highest remaining word is irreducible it is final.
pub(crate) fn normalize_unchecked<C: Coefficient>(
    p: &Polynomial<C>,
    base: &RuleSet,
) -> Polynomial<C> {
    let mut work = p.clone();
    let mut done = Polynomial::zero();
    while let Some((w, c)) = work.terms_mut().pop_last() {
        match base.first_match(w.letters()) {
            Some((offset, i)) => add_rewrite(&mut work, &c, &w, offset, &base.rules()[i]),
            None => {
                done.terms_mut().insert(w, c);
            }
        }
    }
    done
}

/// Normal form reached by rewriting a random reducible term at a random
/// lead occurrence with a random matching rule at every step.
pub fn normalize_randomized<C: Coefficient, R: Rng>(
    p: &Polynomial<C>,
    base: &RuleSet,
    rng: &mut R,
) -> Result<Polynomial<C>> {
    check_bound(p, base)?;
    let mut cur = p.clone();
    loop {
        let reducible: Vec<Word> = cur
            .terms()
            .filter(|(w, _)| !base.is_irreducible(w.letters()))
            .map(|(w, _)| w.clone())
            .collect();
        let Some(w) = reducible.choose(rng) else {
            return Ok(cur);
        };
        let matches = base.all_matches(w.letters());
        let &(offset, i) = matches.choose(rng).expect("reducible word has a match");
        let c = cur.terms_mut().remove(w).expect("term present");
        add_rewrite(&mut cur, &c, w, offset, &base.rules()[i]);
    }
}

/// True when no lead of `base` is a factor of `w`.
pub fn is_normal_factorfree(w: &Word, base: &RuleSet) -> bool {
    base.is_irreducible(w.letters())
}
