use involutive::divisions::{self, pairwise_update};
use involutive::mono_completion::{involutive_complete_with, is_autoreduced_involutively, is_involutive_bruteforce, is_locally_involutive};
use involutive::{CompletionLimits, CompletionOptions, Division, Monomial, MonomialOrdering, VarSet};
use proptest::prelude::*;

fn monomial_set() -> impl Strategy<Value = Vec<Monomial>> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=3, n), 1..=5)
            .prop_map(|rows| rows.into_iter().map(Monomial::from_exponents).filter(|m| !m.is_one()).collect::<Vec<_>>())
            .prop_filter("nonempty", |s| !s.is_empty())
    })
}

fn complete(set: &[Monomial], kind: Division, order: MonomialOrdering, fast: bool) -> (Vec<Monomial>, usize, usize) {
    let options = CompletionOptions {
        monotone_fast_path: fast,
        cross_check: true,
    };
    let (mut out, stats) = involutive_complete_with(set, kind, order, CompletionLimits::default(), options).unwrap();
    out.sort();
    (out, stats.prolongations_checked, stats.elements_added)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn output_and_work_do_not_depend_on_completion_order(set in monomial_set()) {
        for kind in Division::NOETHERIAN {
            let runs: Vec<_> = MonomialOrdering::ALL.iter().map(|&o| complete(&set, kind, o, false)).collect();
            prop_assert_eq!(&runs[0].0, &runs[1].0);
            prop_assert_eq!(&runs[0].0, &runs[2].0);
            prop_assert_eq!(runs[0].1, runs[1].1);
            prop_assert_eq!(runs[0].1, runs[2].1);
        }
    }

    #[test]
    fn completed_sets_are_involutive(set in monomial_set()) {
        for kind in Division::NOETHERIAN {
            let (out, _, _) = complete(&set, kind, MonomialOrdering::DegRevLex, false);
            let maxdeg = out.iter().map(Monomial::degree).max().unwrap();
            prop_assert!(is_locally_involutive(&out, kind));
            prop_assert!(is_involutive_bruteforce(&out, kind, maxdeg + 2));
            prop_assert!(set.iter().all(|u| out.contains(u) || out.iter().any(|v| v.divides(u))));
        }
    }

    #[test]
    fn fast_path_matches_plain_run_for_monotone_pairs(set in monomial_set()) {
        let mut pairs: Vec<(Division, MonomialOrdering)> = MonomialOrdering::ALL.iter().map(|&o| (Division::Thomas, o)).collect();
        pairs.push((Division::Janet, MonomialOrdering::Lex));
        pairs.extend(MonomialOrdering::ALL.iter().map(|&o| (Division::Induced(o), o)));
        for (kind, order) in pairs {
            prop_assert!(kind.is_monotone_for(order));
            let plain = complete(&set, kind, order, false);
            let fast = complete(&set, kind, order, true);
            prop_assert_eq!(&plain.0, &fast.0, "{} {}", kind, order);
            prop_assert_eq!(plain.2, fast.2);
        }
    }

    #[test]
    fn pairwise_updates_match_rescan(set in monomial_set()) {
        for kind in Division::ALL {
            for u in &set {
                let nm = set.iter().fold(VarSet::EMPTY, |acc, v| pairwise_update(kind, u, acc, v));
                prop_assert_eq!(nm, divisions::separation(kind, u, &set).unwrap().nonmultiplicative);
            }
        }
    }

    #[test]
    fn thomas_and_janet_completions_are_involutively_autoreduced(set in monomial_set()) {
        for kind in [Division::Thomas, Division::Janet] {
            let (out, _, _) = complete(&set, kind, MonomialOrdering::DegLex, false);
            prop_assert!(is_autoreduced_involutively(&out, kind));
        }
    }
}
