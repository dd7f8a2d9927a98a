use std::fmt::Write as _;
use std::io::Read;

use super::parse::{parse_expression, Expression};
use super::*;
use crate::error::{domain, Error, Result};
use crate::freealg::{Coefficient, Poly, Polynomial};
use crate::oracle::{check_corpus, dimension_check_with_guard, identity_corpus_up_to, zero_test, Slice, Verdict};
use crate::qvars::{normalize_q, split};
use crate::rewrite::{
    check_groebner_for, check_groebner_multilinear, complete_with_cap, is_normal_structural, normalize,
    NormalMode, ResidueSource, RuleSet,
};
use crate::syzygy::{gb_multilinear, gb_vector, gen_vector_syzygies};

pub(super) fn dispatch(command: Command, stdin: &mut dyn Read) -> Result<Outcome> {
    match command {
        Command::Normalize(a) => normalize_cmd(a, stdin),
        Command::CheckNormal(a) => check_normal(a, stdin),
        Command::Gb(a) => gb(a),
        Command::VerifyGroebner(a) => verify(a),
        Command::ZeroTest(a) => zero_test_cmd(a, stdin),
        Command::DimCheck(a) => dim_check(a),
        Command::Identities(a) => identities(a),
        Command::Complete(a) => complete_cmd(a),
    }
}

/// Parses the argument expressions, or each nonempty stdin line. Parse
/// errors on stdin report the stdin line number.
fn expressions(input: &Exprs, stdin: &mut dyn Read) -> Result<Vec<Expression>> {
    if !input.exprs.is_empty() {
        return input.exprs.iter().map(|e| parse_expression(e)).collect();
    }
    let mut text = String::new();
    stdin
        .read_to_string(&mut text)
        .map_err(|e| domain(format!("cannot read standard input: {e}")))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let e = parse_expression(line).map_err(|e| match e {
            Error::Parse { column, message, .. } => Error::Parse {
                line: i + 1,
                column,
                message,
            },
            other => other,
        })?;
        out.push(e);
    }
    if out.is_empty() {
        return Err(domain("no expression given"));
    }
    Ok(out)
}

fn check_vars(e: &Expression, vars: u32) -> Result<()> {
    if e.max_index() > vars {
        return Err(domain(format!(
            "index {} is outside the {vars} declared variables",
            e.max_index()
        )));
    }
    Ok(())
}

fn vector_base(vars: u32, degree: usize) -> Result<RuleSet> {
    gb_vector(vars, degree.max(3))
}

fn generators(vars: u32) -> Result<Vec<Poly>> {
    Ok(gen_vector_syzygies(vars)?.into_iter().map(|g| g.element).collect())
}

fn normalize_cmd(a: NormalizeArgs, stdin: &mut dyn Read) -> Result<Outcome> {
    let mut out = String::new();
    for e in expressions(&a.input, stdin)? {
        check_vars(&e, a.vars)?;
        let d = a.max_deg.unwrap_or_else(|| e.degree());
        let nf = match &e {
            Expression::Vector(p) => normalize(p, &vector_base(a.vars, d)?)?,
            Expression::Quaternion(q) => normalize_q(q, a.vars, d)?,
        };
        writeln!(out, "{nf}").unwrap();
    }
    Ok(Outcome::new(0, out))
}

fn check_normal(a: CheckNormalArgs, stdin: &mut dyn Read) -> Result<Outcome> {
    let mut out = String::new();
    let mut status = 0;
    for e in expressions(&a.input, stdin)? {
        check_vars(&e, a.vars)?;
        let Expression::Vector(p) = &e else {
            return Err(domain("check-normal expects an expression in v letters"));
        };
        let (base, mode) = if a.multilinear {
            (gb_multilinear(a.vars)?, NormalMode::Multilinear)
        } else {
            (vector_base(a.vars, p.degree())?, NormalMode::General)
        };
        for (w, _) in p.terms() {
            let factor = base.first_match(w.letters()).map(|(_, i)| &base.rules()[i].lead);
            let structural = is_normal_structural(w, mode)?;
            match factor {
                None => write!(out, "{w}: normal").unwrap(),
                Some(lead) => {
                    status = 1;
                    write!(out, "{w}: reducible by {lead}").unwrap()
                }
            }
            if structural != factor.is_none() {
                status = 1;
                out.push_str(" (structural predicate disagrees)");
            }
            out.push('\n');
        }
    }
    Ok(Outcome::new(status, out))
}

fn gb(a: GbArgs) -> Result<Outcome> {
    let base = if a.multilinear {
        gb_multilinear(a.vars)?
    } else {
        gb_vector(a.vars, a.max_deg.unwrap_or(a.vars.max(3) as usize))?
    };
    let base = if a.tail_reduce { base.tail_reduced() } else { base };
    Ok(Outcome::new(0, base.to_string()))
}

fn verify(a: VerifyArgs) -> Result<Outcome> {
    let gens = generators(a.vars)?;
    let (base, report) = if a.multilinear {
        let base = gb_multilinear(a.vars)?;
        let r = check_groebner_multilinear(&base, &gens, a.max_deg)?;
        (base, r)
    } else {
        let base = gb_vector(a.vars, a.max_deg)?;
        let r = check_groebner_for(&base, &gens, a.max_deg)?;
        (base, r)
    };
    let mut out = format!(
        "{} rules; {} overlaps and {} generators up to degree {}\n",
        base.len(),
        report.obstructions,
        report.generators,
        report.max_degree
    );
    if report.is_confluent() {
        out.push_str("all S-polynomials reduce to 0\n");
        return Ok(Outcome::new(0, out));
    }
    for r in &report.residues {
        match &r.source {
            ResidueSource::Generator(i) => write!(out, "generator {}", gens[*i]).unwrap(),
            ResidueSource::Overlap(o) => write!(
                out,
                "overlap {} of {} and {}",
                o.word,
                base.rules()[o.rule_a].lead,
                base.rules()[o.rule_b].lead
            )
            .unwrap(),
        }
        writeln!(out, " leaves {}", r.residue).unwrap();
    }
    writeln!(out, "{} nonzero residues", report.residues.len()).unwrap();
    Ok(Outcome::new(1, out))
}

fn report_verdict<C: Coefficient>(p: &Polynomial<C>, trials: usize, seed: u64, out: &mut String) -> bool {
    match zero_test(p, trials, seed) {
        Verdict::Zero { trials } => {
            writeln!(out, "zero at {trials} trials").unwrap();
            true
        }
        Verdict::Counterexample {
            trial,
            assignment,
            value,
        } => {
            writeln!(out, "nonzero at trial {trial}: value {value}").unwrap();
            let used = p.max_vector_index();
            for (i, q) in assignment.vectors.iter().filter(|(&i, _)| i <= used) {
                writeln!(out, "  v{i} = {q}").unwrap();
            }
            let used = p.max_scalar_index();
            for (i, s) in assignment.scalars.iter().filter(|(&i, _)| i <= used) {
                writeln!(out, "  s{i} = {s}").unwrap();
            }
            false
        }
    }
}

fn zero_test_cmd(a: ZeroTestArgs, stdin: &mut dyn Read) -> Result<Outcome> {
    let mut out = String::new();
    let mut status = 0;
    for e in expressions(&a.input, stdin)? {
        let ok = match &e {
            Expression::Vector(p) => report_verdict(p, a.trials, a.seed, &mut out),
            Expression::Quaternion(q) => report_verdict(&split(q), a.trials, a.seed, &mut out),
        };
        if !ok {
            status = 1;
        }
    }
    Ok(Outcome::new(status, out))
}

fn dim_check(a: DimCheckArgs) -> Result<Outcome> {
    let (slice, base) = if a.multilinear {
        (Slice::multilinear(a.vars), gb_multilinear(a.vars)?)
    } else {
        let d = a.deg.ok_or_else(|| domain("dim-check needs --deg unless --multilinear"))?;
        (Slice::Full { n: a.vars, d }, vector_base(a.vars, d)?)
    };
    let report = dimension_check_with_guard(&slice, &generators(a.vars)?, &base, a.guard)?;
    let status = if report.agrees() { 0 } else { 1 };
    Ok(Outcome::new(status, format!("{report}\n")))
}

fn identities(a: IdentitiesArgs) -> Result<Outcome> {
    let items = identity_corpus_up_to(a.max_n);
    let checks = check_corpus(&items, a.trials, a.seed)?;
    let mut out = String::new();
    let mut families: Vec<(&str, usize, usize)> = Vec::new();
    for c in &checks {
        if a.verbose {
            writeln!(out, "{c}").unwrap();
        }
        if families.last().map(|f| f.0) != Some(c.family) {
            families.push((c.family, 0, 0));
        }
        let f = families.last_mut().expect("pushed");
        f.1 += 1;
        if !c.passed() {
            f.2 += 1;
        }
    }
    let failed: usize = families.iter().map(|f| f.2).sum();
    if !a.verbose {
        for (family, total, bad) in &families {
            if *bad == 0 {
                writeln!(out, "PASS {family}: {total} instances").unwrap();
            } else {
                writeln!(out, "FAIL {family}: {bad} of {total} instances").unwrap();
            }
        }
    }
    writeln!(out, "{} identities, {failed} failing", checks.len()).unwrap();
    Ok(Outcome::new(if failed == 0 { 0 } else { 1 }, out))
}

fn complete_cmd(a: CompleteArgs) -> Result<Outcome> {
    let base = complete_with_cap(&generators(a.vars)?, a.max_deg, a.cap)?;
    if !a.compare {
        return Ok(Outcome::new(0, base.to_string()));
    }
    let closed = vector_base(a.vars, a.max_deg)?.truncated(a.max_deg);
    let (mine, theirs) = (base.lead_set(), closed.lead_set());
    if mine == theirs {
        let msg = format!("{} rules; lead set matches the closed-form base\n", base.len());
        return Ok(Outcome::new(0, msg));
    }
    let mut out = String::new();
    for w in mine.difference(&theirs) {
        writeln!(out, "only from completion: {w}").unwrap();
    }
    for w in theirs.difference(&mine) {
        writeln!(out, "only in the closed form: {w}").unwrap();
    }
    Ok(Outcome::new(1, out))
}
