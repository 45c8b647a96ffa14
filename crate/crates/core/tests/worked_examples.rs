use involutive::divisions::{self, pairwise_update};
use involutive::mono_completion::{completeness_bound_check, first_incomplete_prolongation, lowest_irreducible_prolongation};
use involutive::samples::example_monomials;
use involutive::{involutive_complete, CompletionError, CompletionLimits, Division, Limit, Monomial, MonomialOrdering, VarSet, VariableContext};

fn mono(s: &str, ctx: &VariableContext) -> Monomial {
    Monomial::parse(s, ctx).unwrap()
}

fn set(items: &[&str], ctx: &VariableContext) -> Vec<Monomial> {
    items.iter().map(|s| mono(s, ctx)).collect()
}

fn vars(s: &str, ctx: &VariableContext) -> VarSet {
    if s == "-" {
        return VarSet::EMPTY;
    }
    VarSet::from_indices(s.split(',').map(|v| ctx.index_of(v).unwrap()))
}

fn sorted(mut v: Vec<Monomial>) -> Vec<Monomial> {
    v.sort();
    v
}

const TABLE: [(&str, [&str; 8]); 5] = [
    ("x^2*y", ["x", "x,y,z", "y,z", "x", "x", "x", "x", "x"]),
    ("x*z", ["-", "y,z", "z", "x", "x,z", "x", "x,z", "x,z"]),
    ("y^2", ["y", "y,z", "y,z", "y", "y", "x,y", "x,y", "y"]),
    ("y*z", ["-", "z", "z", "-", "y,z", "x,y", "x,y,z", "x,y,z"]),
    ("z^3", ["z", "z", "z", "z", "z", "x,y,z", "z", "z"]),
];

#[test]
fn multiplicative_table_for_all_divisions() {
    let (ctx, u) = example_monomials();
    for (row, expected) in TABLE {
        let m = mono(row, &ctx);
        for (kind, cell) in Division::ALL.iter().zip(expected) {
            let sep = divisions::separation(*kind, &m, &u).unwrap();
            assert_eq!(sep.multiplicative, vars(cell, &ctx), "{row} under {kind}");
        }
    }
}

fn completed(kind: Division) -> Vec<Monomial> {
    let (_, u) = example_monomials();
    let (out, _) = involutive_complete(&u, kind, MonomialOrdering::DegRevLex, CompletionLimits::default()).unwrap();
    sorted(out)
}

fn cube_box(include: impl Fn(u32, u32, u32) -> bool) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..=2 {
        for b in 0..=2 {
            for c in 0..=3 {
                if include(a, b, c) {
                    out.push(Monomial::from_exponents(vec![a, b, c]));
                }
            }
        }
    }
    out
}

#[test]
fn completed_sets_for_noetherian_divisions() {
    let (ctx, u) = example_monomials();
    // Thomas: every multiple of U with exponents bounded by the lcm x^2 y^2 z^3.
    let thomas = cube_box(|a, b, c| u.iter().any(|g| g.divides(&Monomial::from_exponents(vec![a, b, c]))));
    assert_eq!(thomas.len(), 29);
    assert_eq!(completed(Division::Thomas), sorted(thomas.clone()));

    let janet = set(&["x^2*y", "x^2*z", "x*y^2", "x*y*z", "x*z", "y^2", "y*z", "z^3"], &ctx);
    assert_eq!(completed(Division::Janet), sorted(janet));

    // Division I: the Thomas set without x^2 z, x^2 z^2, x^2 z^3.
    let div1: Vec<Monomial> = thomas.into_iter().filter(|m| !(m.exponent(0) == 2 && m.exponent(1) == 0)).collect();
    assert_eq!(div1.len(), 26);
    assert_eq!(completed(Division::DivisionI), sorted(div1));

    let div2 = set(&["x^2*y^2", "x^2*y", "x*y^2", "x*y*z", "x*z", "y^2", "y*z", "z^3"], &ctx);
    assert_eq!(completed(Division::DivisionII), sorted(div2));

    let lex = set(&["x^2*y", "x*z^2", "x*z", "y^2", "y*z^2", "y*z", "z^3"], &ctx);
    assert_eq!(completed(Division::Induced(MonomialOrdering::Lex)), sorted(lex));

    assert_eq!(completed(Division::Induced(MonomialOrdering::DegLex)), sorted(u.clone()));

    let drl = set(&["x^2*y", "x*y^2", "x*z", "y^2", "y*z", "z^3"], &ctx);
    assert_eq!(completed(Division::Induced(MonomialOrdering::DegRevLex)), sorted(drl));
}

#[test]
fn pommaret_completion_does_not_terminate() {
    let (ctx, u) = example_monomials();
    let limits = CompletionLimits::new(10, 100_000).unwrap();
    let err = involutive_complete(&u, Division::Pommaret, MonomialOrdering::DegRevLex, limits).unwrap_err();
    let CompletionError::LimitExceeded { limit, partial, .. } = err else {
        panic!("expected a limit error");
    };
    assert_eq!(limit, Limit::Degree(10));
    for k in 3..=9 {
        let xky = mono(&format!("x^{k}*y"), &ctx);
        assert!(partial.contains(&xky), "x^{k}*y missing");
    }
}

#[test]
fn janet_is_not_monotone_for_degree_orderings() {
    let ctx = VariableContext::new(["x", "y", "z", "t"]).unwrap();
    let u = set(&["x*z^2", "x^2*z", "y*z*t^2"], &ctx);
    let w = mono("x^2*y*z", &ctx);
    let inserted = mono("x*y*z*t^2", &ctx);
    let witness = mono("x*y*z^2", &ctx);
    for order in [MonomialOrdering::DegLex, MonomialOrdering::DegRevLex] {
        assert!(completeness_bound_check(&u, Division::Janet, order, &w));
        let lowest = lowest_irreducible_prolongation(&u, Division::Janet, order).unwrap();
        assert_eq!(lowest, inserted);
        assert!(order.less(&w, &lowest));
        let mut grown = u.clone();
        grown.push(lowest);
        assert_eq!(first_incomplete_prolongation(&grown, Division::Janet, order, &w), Some(witness.clone()));
        assert_eq!(lowest_irreducible_prolongation(&grown, Division::Janet, order), Some(witness.clone()));
        assert!(order.less(&witness, &w));
    }
}

#[test]
fn division_one_is_not_monotone() {
    let ctx = VariableContext::new(["x", "y", "z", "t", "w"]).unwrap();
    let u = set(&["x*y^2*w^2", "x*z*t", "y*z*t"], &ctx);
    let expected = [("x,y,w", "z,t"), ("x,z,t", "y,w"), ("y,z,t,w", "x")];
    for (m, (mult, nonmult)) in u.iter().zip(expected) {
        let sep = divisions::separation(Division::DivisionI, m, &u).unwrap();
        assert_eq!(sep.multiplicative, vars(mult, &ctx));
        assert_eq!(sep.nonmultiplicative, vars(nonmult, &ctx));
    }
    let inserted = mono("x*z*t*w", &ctx);
    let witness = mono("y*z*t*w", &ctx);
    let printed_bound = mono("x*y*w^2", &ctx);
    for order in MonomialOrdering::ALL {
        let lowest = lowest_irreducible_prolongation(&u, Division::DivisionI, order).unwrap();
        assert_eq!(lowest, inserted, "{order}");
        let mut grown = u.clone();
        grown.push(lowest);
        assert_eq!(lowest_irreducible_prolongation(&grown, Division::DivisionI, order), Some(witness.clone()));
        // The set is complete up to the witness, and the insertion breaks it.
        assert!(completeness_bound_check(&u, Division::DivisionI, order, &witness), "{order}");
        assert!(!completeness_bound_check(&grown, Division::DivisionI, order, &witness), "{order}");
        // x*y*w^2 cannot serve as the bound: it lies above x*z*t*w under the
        // lexicographic orderings and below y*z*t*w under degrevlex.
        let before = completeness_bound_check(&u, Division::DivisionI, order, &printed_bound);
        let after = completeness_bound_check(&grown, Division::DivisionI, order, &printed_bound);
        assert!(!(before && !after), "{order}");
    }
}

#[test]
fn pairwise_update_reproduces_division_one_table() {
    let ctx = VariableContext::new(["x", "y", "z", "t", "w"]).unwrap();
    let u = set(&["x*y^2*w^2", "x*z*t", "y*z*t"], &ctx);
    for m in &u {
        let mut nm = VarSet::EMPTY;
        for v in &u {
            nm = pairwise_update(Division::DivisionI, m, nm, v);
        }
        assert_eq!(nm, divisions::separation(Division::DivisionI, m, &u).unwrap().nonmultiplicative);
    }
}
