use std::fmt::Write as _;

use involutive::polynomials::{buchberger, nf_conventional, nf_involutive};
use involutive::{
    divisions, involutive_complete, is_involutive_basis, minimal_involutive_basis, BasisError, BasisOptions,
    CompletionError, CompletionLimits, CompletionOptions, Division, Monomial, Polynomial, ProblemFile,
};

use crate::Failure;

fn monomials(problem: &ProblemFile) -> Result<Vec<Monomial>, Failure> {
    let set = problem.monomials().map_err(|e| Failure::Usage(format!("input:{e}")))?;
    if set.is_empty() {
        return Err(Failure::Usage("no monomials in input".into()));
    }
    Ok(set)
}

fn polynomials(problem: &ProblemFile) -> Result<Vec<Polynomial>, Failure> {
    let polys = problem.polynomials();
    if polys.is_empty() {
        return Err(Failure::Usage("no polynomials in input".into()));
    }
    Ok(polys)
}

fn write_table(rows: &[Vec<String>], out: &mut String) {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            let _ = write!(line, "{cell:<width$}", width = widths[c]);
        }
        let _ = writeln!(out, "{}", line.trim_end());
    }
}

pub fn separate(problem: &ProblemFile, kinds: &[Division], out: &mut String) -> Result<(), Failure> {
    let set = monomials(problem)?;
    let ctx = &problem.context;
    let mut rows = vec![std::iter::once("monomial".to_string())
        .chain(kinds.iter().map(|k| k.name().to_string()))
        .collect::<Vec<_>>()];
    let separations: Vec<Vec<divisions::Separation>> = kinds.iter().map(|&k| divisions::separations(k, &set)).collect();
    for (i, u) in set.iter().enumerate() {
        let mut row = vec![u.display(ctx).to_string()];
        row.extend(separations.iter().map(|seps| seps[i].multiplicative.display(ctx).to_string()));
        rows.push(row);
    }
    write_table(&rows, out);
    Ok(())
}

pub fn complete_monomials(
    problem: &ProblemFile,
    kind: Division,
    limits: CompletionLimits,
    options: CompletionOptions,
    show_stats: bool,
    out: &mut String,
) -> Result<(), Failure> {
    let set = monomials(problem)?;
    let ctx = &problem.context;
    let order = problem.completion_order();
    if options.monotone_fast_path && !kind.is_monotone_for(order) {
        return Err(Failure::Usage(format!(
            "--monotone-fast-path needs a division monotone for the completion ordering ({kind} is not monotone for {order})"
        )));
    }
    let (result, stats, failure) = match involutive::mono_completion::involutive_complete_with(&set, kind, order, limits, options) {
        Ok((result, stats)) => (result, stats, None),
        Err(CompletionError::LimitExceeded { limit, partial, stats }) => {
            (partial, stats, Some(Failure::Limit(format!("completion stopped: {limit}; partial set printed"))))
        }
        Err(CompletionError::Kernel(e)) => return Err(e.into()),
    };
    for m in &result {
        let _ = writeln!(out, "{}", m.display(ctx));
    }
    if show_stats {
        let _ = writeln!(out, "\n{stats}");
    }
    failure.map_or(Ok(()), Err)
}

/// Checks `basis` against an independent Buchberger computation: `basis` is
/// involutive, both bases generate the same ideal, and the leading monomials
/// of `basis` are the involutive completion of the reduced basis's ones.
pub fn cross_check(input: &[Polynomial], basis: &[Polynomial], kind: Division, limits: CompletionLimits) -> Result<bool, Failure> {
    let Some(first) = basis.first() else { return Ok(false) };
    let order = first.order();
    if !is_involutive_basis(basis, kind, order) {
        return Ok(false);
    }
    let input: Vec<Polynomial> = input.iter().map(|p| p.with_order(order)).collect();
    let gb = buchberger(&input, limits)?;
    let lm_gb: Vec<Monomial> = gb.iter().map(|g| g.lm().clone()).collect();
    let ideal_ok = gb.iter().all(|g| nf_involutive(g, basis, kind).is_zero())
        && basis.iter().all(|g| nf_conventional(g, &gb).is_zero());
    if !ideal_ok {
        return Ok(false);
    }
    let Ok((mut completed, _)) = involutive_complete(&lm_gb, kind, order, limits) else {
        return Ok(false);
    };
    let mut lm_basis: Vec<Monomial> = basis.iter().map(|g| g.lm().clone()).collect();
    completed.sort();
    lm_basis.sort();
    Ok(completed == lm_basis)
}

pub fn involutive_basis(
    problem: &ProblemFile,
    kind: Division,
    limits: CompletionLimits,
    options: BasisOptions,
    verify: bool,
    show_stats: bool,
    out: &mut String,
) -> Result<(), Failure> {
    let input = polynomials(problem)?;
    let ctx = &problem.context;
    let result = minimal_involutive_basis(&input, kind, problem.order, problem.completion_order(), limits, options);
    let (basis, stats) = match result {
        Ok(done) => done,
        Err(BasisError::LimitExceeded { limit, partial, stats }) => {
            for g in &partial {
                let _ = writeln!(out, "{}", g.display(ctx));
            }
            if show_stats {
                let _ = writeln!(out, "\n{stats}");
            }
            return Err(Failure::Limit(format!("involutive basis stopped: {limit}; partial set printed")));
        }
        Err(BasisError::Kernel(e)) => return Err(e.into()),
    };
    for g in &basis {
        let _ = writeln!(out, "{}", g.display(ctx));
    }
    if show_stats {
        let _ = writeln!(out, "\n{stats}");
    }
    if verify {
        if cross_check(&input, &basis, kind, limits)? {
            let _ = writeln!(out, "\nverification: PASSED");
        } else {
            let _ = writeln!(out, "\nverification: FAILED");
            return Err(Failure::Verification("computed basis failed verification".into()));
        }
    }
    Ok(())
}

pub fn groebner(problem: &ProblemFile, limits: CompletionLimits, out: &mut String) -> Result<(), Failure> {
    let input = polynomials(problem)?;
    for g in buchberger(&input, limits)? {
        let _ = writeln!(out, "{}", g.display(&problem.context));
    }
    Ok(())
}

pub fn verify(problem: &ProblemFile, kind: Division, out: &mut String) -> Result<(), Failure> {
    let input = polynomials(problem)?;
    if is_involutive_basis(&input, kind, problem.order) {
        let _ = writeln!(out, "involutive: PASSED");
        Ok(())
    } else {
        let _ = writeln!(out, "involutive: FAILED");
        Err(Failure::Verification(format!("input is not a {kind} involutive basis")))
    }
}
