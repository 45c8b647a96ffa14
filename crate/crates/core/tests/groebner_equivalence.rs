use involutive::polynomials::{buchberger, is_groebner_basis, nf_conventional, nf_involutive};
use involutive::samples::{cyclic, katsura};
use involutive::{
    involutive_complete, is_involutive_basis, minimal_involutive_basis, BasisOptions, CompletionLimits, Division, Monomial,
    MonomialOrdering, Polynomial,
};

const DRL: MonomialOrdering = MonomialOrdering::DegRevLex;

fn check_system(name: &str, f: &[Polynomial]) {
    let limits = CompletionLimits::default();
    let (g, _) = minimal_involutive_basis(f, Division::Janet, DRL, DRL, limits, BasisOptions::default()).unwrap();
    let gb = buchberger(f, limits).unwrap();
    assert!(is_groebner_basis(&gb), "{name}: oracle output is not a Gröbner basis");
    assert!(is_involutive_basis(&g, Division::Janet, DRL), "{name}: not involutive");
    for p in &gb {
        assert!(nf_involutive(p, &g, Division::Janet).is_zero(), "{name}: GB element not in ideal of G");
    }
    for p in &g {
        assert!(nf_conventional(p, &gb).is_zero(), "{name}: basis element not in ideal of GB");
    }
    let lm_gb: Vec<Monomial> = gb.iter().map(|p| p.lm().clone()).collect();
    let (mut completed, _) = involutive_complete(&lm_gb, Division::Janet, DRL, limits).unwrap();
    let mut lm_g: Vec<Monomial> = g.iter().map(|p| p.lm().clone()).collect();
    completed.sort();
    lm_g.sort();
    assert_eq!(lm_g, completed, "{name}: leading monomials differ from the completed reduced basis");
}

#[test]
fn cyclic_systems() {
    for n in [3, 4] {
        let (_, f) = cyclic(n, DRL);
        check_system(&format!("cyclic-{n}"), &f);
    }
}

#[test]
fn katsura_systems() {
    for n in [3, 4] {
        let (_, f) = katsura(n, DRL);
        check_system(&format!("katsura-{n}"), &f);
    }
}

#[test]
fn involutive_and_conventional_normal_forms_agree() {
    let (ctx, f) = cyclic(4, DRL);
    let (g, _) =
        minimal_involutive_basis(&f, Division::Janet, DRL, DRL, CompletionLimits::default(), BasisOptions::default()).unwrap();
    let mut rng = involutive::samples::rng(11);
    for _ in 0..40 {
        let p = involutive::samples::random_polynomial(&mut rng, ctx.len(), DRL, 5, 1..=4);
        assert_eq!(nf_involutive(&p, &g, Division::Janet), nf_conventional(&p, &g));
    }
}

#[test]
fn other_divisions_on_cyclic3() {
    let (_, f) = cyclic(3, DRL);
    let gb = buchberger(&f, CompletionLimits::default()).unwrap();
    for division in Division::ALL {
        let (g, _) =
            minimal_involutive_basis(&f, division, DRL, DRL, CompletionLimits::default(), BasisOptions::default()).unwrap();
        assert!(is_involutive_basis(&g, division, DRL), "{division}");
        for p in &gb {
            assert!(nf_involutive(p, &g, division).is_zero(), "{division}");
        }
        for p in &g {
            assert!(nf_conventional(p, &gb).is_zero(), "{division}");
        }
    }
}
