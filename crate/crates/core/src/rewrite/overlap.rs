use rayon::prelude::*;

use super::{add_rewrite, normalize_unchecked, RuleSet};
use crate::error::{Error, Result};
use crate::freealg::{Poly, Rational, Word};

/// Two lead occurrences sharing letters inside one word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub rule_a: usize,
    pub rule_b: usize,
    pub word: Word,
    /// Offsets of the two leads inside `word`.
    pub offset_a: usize,
    pub offset_b: usize,
}

impl Obstruction {
    /// The difference of the two one-step rewrites of the overlap word.
    pub fn s_polynomial(&self, base: &RuleSet) -> Poly {
        let one = Rational::from_integer(1.into());
        let mut out = Poly::zero();
        add_rewrite(&mut out, &one, &self.word, self.offset_a, &base.rules()[self.rule_a]);
        add_rewrite(&mut out, &-one, &self.word, self.offset_b, &base.rules()[self.rule_b]);
        out
    }
}

/// All suffix-prefix overlaps (including a lead with itself) and
/// containments among the leads of `base` with overlap word of degree at
/// most `max_degree`.
pub fn overlaps(base: &RuleSet, max_degree: usize) -> Vec<Obstruction> {
    let mut out = Vec::new();
    let rules = base.rules();
    for (i, a) in rules.iter().enumerate() {
        let la = a.lead.letters();
        for (j, b) in rules.iter().enumerate() {
            let lb = b.lead.letters();
            // suffix of a equals prefix of b, both occurrences proper
            for k in 1..la.len().min(lb.len()) {
                if la.len() + lb.len() - k > max_degree {
                    continue;
                }
                if la[la.len() - k..] == lb[..k] {
                    let mut letters = la.to_vec();
                    letters.extend_from_slice(&lb[k..]);
                    out.push(Obstruction {
                        rule_a: i,
                        rule_b: j,
                        word: Word::new(letters),
                        offset_a: 0,
                        offset_b: la.len() - k,
                    });
                }
            }
            // b inside a
            if i != j && lb.len() <= la.len() && la.len() <= max_degree {
                for p in 0..=la.len() - lb.len() {
                    if la[p..p + lb.len()] == *lb {
                        out.push(Obstruction {
                            rule_a: i,
                            rule_b: j,
                            word: a.lead.clone(),
                            offset_a: 0,
                            offset_b: p,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Where a nonzero residue came from.
#[derive(Clone, Debug, PartialEq)]
pub enum ResidueSource {
    Overlap(Obstruction),
    /// Index into the generator list passed to the check.
    Generator(usize),
}

/// A polynomial that should reduce to zero but does not.
#[derive(Clone, Debug, PartialEq)]
pub struct Residue {
    pub source: ResidueSource,
    pub residue: Poly,
}

/// Outcome of a Gröbner check.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerReport {
    pub max_degree: usize,
    pub obstructions: usize,
    pub generators: usize,
    /// Nonzero residues: generators first, then overlaps, each in order.
    pub residues: Vec<Residue>,
}

impl GroebnerReport {
    pub fn is_confluent(&self) -> bool {
        self.residues.is_empty()
    }
}

fn check(
    base: &RuleSet,
    generators: &[Poly],
    max_degree: usize,
    multilinear: bool,
) -> Result<GroebnerReport> {
    if max_degree > base.degree_bound() {
        return Err(Error::DegreeBound {
            degree: max_degree,
            bound: base.degree_bound(),
        });
    }
    let keep_word = |w: &Word| !multilinear || w.is_multilinear();
    let gens: Vec<(usize, &Poly)> = generators
        .iter()
        .enumerate()
        .filter(|(_, g)| g.degree() <= max_degree && g.terms().all(|(w, _)| keep_word(w)))
        .collect();
    let obs: Vec<Obstruction> = overlaps(base, max_degree)
        .into_iter()
        .filter(|o| keep_word(&o.word))
        .collect();

    let reduce = |p: Poly| {
        let r = normalize_unchecked(&p, base);
        (!r.is_zero()).then_some(r)
    };
    let mut residues: Vec<Residue> = gens
        .par_iter()
        .filter_map(|&(i, g)| {
            reduce(g.clone()).map(|residue| Residue {
                source: ResidueSource::Generator(i),
                residue,
            })
        })
        .collect();
    residues.par_extend(obs.par_iter().filter_map(|o| {
        reduce(o.s_polynomial(base)).map(|residue| Residue {
            source: ResidueSource::Overlap(o.clone()),
            residue,
        })
    }));
    Ok(GroebnerReport {
        max_degree,
        obstructions: obs.len(),
        generators: gens.len(),
        residues,
    })
}

/// Reduces every S-polynomial of overlap degree at most `max_degree`. An
/// empty residue list means the rules are locally confluent up to that
/// degree, so they form a Gröbner base of the ideal they generate.
pub fn check_groebner(base: &RuleSet, max_degree: usize) -> Result<GroebnerReport> {
    check(base, &[], max_degree, false)
}

/// As [`check_groebner`], and additionally reduces each generator of the
/// intended ideal: together these show the rules are a Gröbner base of
/// that ideal up to `max_degree`, provided each rule lies in it.
pub fn check_groebner_for(
    base: &RuleSet,
    generators: &[Poly],
    max_degree: usize,
) -> Result<GroebnerReport> {
    check(base, generators, max_degree, false)
}

/// As [`check_groebner_for`], restricted to words without repeated letters:
/// only multilinear generators and overlap words are considered. The degree
/// is capped at the set's bound, since a multilinear word on `n` letters
/// never exceeds degree `n`.
pub fn check_groebner_multilinear(
    base: &RuleSet,
    generators: &[Poly],
    max_degree: usize,
) -> Result<GroebnerReport> {
    check(base, generators, max_degree.min(base.degree_bound()), true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::RewriteRule;
    use crate::syzygy::{gb_multilinear, gb_vector, gen_vector_syzygies, FamilyTag};

    fn vector_generators(n: u32) -> Vec<Poly> {
        gen_vector_syzygies(n).unwrap().into_iter().map(|g| g.element).collect()
    }

    fn set(leads: &[&[u32]]) -> RuleSet {
        let rules = leads
            .iter()
            .map(|l| RewriteRule::computed(&Poly::word(Word::from(*l))).unwrap())
            .collect();
        RuleSet::new(rules, 8)
    }

    #[test]
    fn square_leads_overlap() {
        let base = gb_vector(2, 4).unwrap();
        let obs = overlaps(&base, 4);
        assert!(obs.iter().any(|o| o.word == Word::from([2, 2, 1, 1])));
    }

    #[test]
    fn no_self_overlap_for_v2v1() {
        assert!(overlaps(&set(&[&[2, 1]]), 8).is_empty());
    }

    #[test]
    fn self_overlap_and_containment() {
        let obs = overlaps(&set(&[&[1, 2, 1]]), 5);
        assert_eq!(obs.len(), 1);
        assert_eq!(obs[0].word, Word::from([1, 2, 1, 2, 1]));
        let obs = overlaps(&set(&[&[1, 2, 3], &[2]]), 3);
        assert!(obs.iter().any(|o| o.word == Word::from([1, 2, 3]) && o.offset_b == 1));
    }

    #[test]
    fn g3_leads_do_not_overlap() {
        // both leads start with v3 and end below it
        let base = gb_multilinear(3).unwrap();
        assert!(overlaps(&base, 9).is_empty());
    }

    #[test]
    fn small_bases_are_confluent() {
        assert!(check_groebner(&gb_vector(2, 5).unwrap(), 5).unwrap().is_confluent());
        assert!(check_groebner(&gb_vector(3, 4).unwrap(), 4).unwrap().is_confluent());
        let ml = gb_multilinear(4).unwrap();
        let gens = vector_generators(4);
        assert!(check_groebner_multilinear(&ml, &gens, 6).unwrap().is_confluent());
        let full = check_groebner_for(&gb_vector(3, 5).unwrap(), &vector_generators(3), 5).unwrap();
        assert!(full.is_confluent());
        assert_eq!(full.generators, 6 + 6);
    }

    #[test]
    fn dropping_g4_is_detected() {
        let base = gb_multilinear(4).unwrap().without(|r| r.tag == Some(FamilyTag::Gm));
        // the overlaps alone stay confluent: G4 comes from the degree-4
        // generators, not from any overlap of degree-3 leads
        assert!(check_groebner(&base, 4).unwrap().is_confluent());
        let report = check_groebner_multilinear(&base, &vector_generators(4), 6).unwrap();
        assert!(!report.is_confluent());
        assert!(report
            .residues
            .iter()
            .all(|r| r.residue.leading_word() == Some(&Word::from([3, 2, 4, 1]))));
    }
}
