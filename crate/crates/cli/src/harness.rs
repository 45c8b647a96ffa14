//! Seeded randomized checks, summarized as one line per check.

use std::fmt::Write as _;

use involutive::divisions::{self, pairwise_update};
use involutive::mono_completion::{involutive_complete_with, is_involutive_bruteforce};
use involutive::samples::{monomial_corpus, polynomial_corpus, random_nonzero_scalar, rng};
use involutive::{
    minimal_involutive_basis, BasisOptions, CompletionLimits, CompletionOptions, Division, Monomial, MonomialOrdering,
    Polynomial, VarSet,
};
use rand::seq::SliceRandom;

use crate::Failure;

const PLAIN: CompletionOptions = CompletionOptions {
    monotone_fast_path: false,
    cross_check: false,
};

fn report(out: &mut String, name: &str, checked: usize, failures: usize) -> bool {
    let verdict = if failures == 0 { "PASSED" } else { "FAILED" };
    let _ = writeln!(out, "{name}: checked={checked} failures={failures} {verdict}");
    failures == 0
}

fn sorted(mut v: Vec<Monomial>) -> Vec<Monomial> {
    v.sort();
    v
}

pub fn monomials(seed: u64, count: usize, out: &mut String) -> Result<(), Failure> {
    let corpus = monomial_corpus(seed, count, 4, 5, 6);
    let limits = CompletionLimits::default();
    let kinds: Vec<Division> = Division::NOETHERIAN.to_vec();
    let (mut invariance, mut bruteforce, mut fast) = ((0, 0), (0, 0), (0, 0));
    for set in &corpus {
        for &kind in &kinds {
            let runs = MonomialOrdering::ALL
                .iter()
                .map(|&o| involutive_complete_with(set, kind, o, limits, PLAIN).map(|(s, st)| (sorted(s), st)))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::Limit(e.to_string()))?;
            invariance.0 += 1;
            if runs.iter().any(|(s, st)| *s != runs[0].0 || st.prolongations_checked != runs[0].1.prolongations_checked) {
                invariance.1 += 1;
            }
            let reference = &runs[0].0;
            let bound = reference.iter().map(Monomial::degree).max().unwrap_or(0) + 4;
            bruteforce.0 += 1;
            if !is_involutive_bruteforce(reference, kind, bound) {
                bruteforce.1 += 1;
            }
            for (&order, (plain, plain_stats)) in MonomialOrdering::ALL.iter().zip(&runs) {
                if !kind.is_monotone_for(order) {
                    continue;
                }
                let options = CompletionOptions {
                    monotone_fast_path: true,
                    ..PLAIN
                };
                let (quick, quick_stats) =
                    involutive_complete_with(set, kind, order, limits, options).map_err(|e| Failure::Limit(e.to_string()))?;
                fast.0 += 1;
                if sorted(quick) != *plain || quick_stats.elements_added != plain_stats.elements_added {
                    fast.1 += 1;
                }
            }
        }
    }
    let mut pairwise = (0, 0);
    for set in &corpus {
        for kind in Division::ALL {
            for u in set {
                pairwise.0 += 1;
                let nm = set.iter().fold(VarSet::EMPTY, |acc, v| pairwise_update(kind, u, acc, v));
                if divisions::separation(kind, u, set).map(|s| s.nonmultiplicative) != Ok(nm) {
                    pairwise.1 += 1;
                }
            }
        }
    }
    let _ = writeln!(out, "seed={seed} sets={}", corpus.len());
    let ok = [
        report(out, "ordering_invariance", invariance.0, invariance.1),
        report(out, "bruteforce_involutive", bruteforce.0, bruteforce.1),
        report(out, "monotone_fast_path", fast.0, fast.1),
        report(out, "pairwise_separation", pairwise.0, pairwise.1),
    ];
    if ok.iter().all(|&b| b) {
        Ok(())
    } else {
        Err(Failure::Verification("monomial harness found failures".into()))
    }
}

pub fn polynomials(seed: u64, count: usize, out: &mut String) -> Result<(), Failure> {
    let order = MonomialOrdering::DegRevLex;
    let corpus = polynomial_corpus(seed, count, 3, order, 3, 3);
    let limits = CompletionLimits::default();
    let mut r = rng(seed ^ 0x5eed);
    let run = |f: &[Polynomial], options: BasisOptions| {
        minimal_involutive_basis(f, Division::Janet, order, order, limits, options).map_err(|e| Failure::Limit(e.to_string()))
    };
    let defaults = BasisOptions {
        cross_check: false,
        ..BasisOptions::default()
    };
    let (mut presentation, mut criterion) = ((0, 0), (0, 0));
    for f in &corpus {
        let (reference, stats_on) = run(f, defaults)?;
        let (raw, _) = run(
            f,
            BasisOptions {
                autoreduce_input: false,
                ..defaults
            },
        )?;
        let mut shuffled = f.clone();
        shuffled.shuffle(&mut r);
        let (permuted, _) = run(&shuffled, defaults)?;
        let scaled: Vec<Polynomial> = f.iter().map(|p| p.scale(&random_nonzero_scalar(&mut r))).collect();
        let (rescaled, _) = run(&scaled, defaults)?;
        presentation.0 += 1;
        if raw != reference || permuted != reference || rescaled != reference {
            presentation.1 += 1;
        }
        let (off, stats_off) = run(
            f,
            BasisOptions {
                use_criterion: false,
                ..defaults
            },
        )?;
        criterion.0 += 1;
        if off != reference || stats_on.normal_forms > stats_off.normal_forms {
            criterion.1 += 1;
        }
    }
    let _ = writeln!(out, "seed={seed} systems={}", corpus.len());
    let ok = [
        report(out, "presentation_invariance", presentation.0, presentation.1),
        report(out, "criterion_soundness", criterion.0, criterion.1),
    ];
    if ok.iter().all(|&b| b) {
        Ok(())
    } else {
        Err(Failure::Verification("polynomial harness found failures".into()))
    }
}
