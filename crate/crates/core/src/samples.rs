//! Standard benchmark systems and seeded random inputs.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::monomials::{Monomial, MonomialOrdering, VariableContext};
use crate::polynomials::Polynomial;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sum_of_products(n: usize, order: MonomialOrdering, products: impl Iterator<Item = Vec<usize>>) -> Polynomial {
    Polynomial::from_terms(
        n,
        order,
        products.map(|vars| {
            let mut exps = vec![0u32; n];
            for v in vars {
                exps[v] += 1;
            }
            (BigRational::one(), Monomial::from_exponents(exps))
        }),
    )
    .expect("consistent context")
}

/// The cyclic-n system in variables `x1..xn`.
pub fn cyclic(n: usize, order: MonomialOrdering) -> (VariableContext, Vec<Polynomial>) {
    assert!(n >= 2);
    let ctx = VariableContext::indexed(n).expect("valid context");
    let mut polys = Vec::with_capacity(n);
    for k in 1..n {
        polys.push(sum_of_products(n, order, (0..n).map(|i| (0..k).map(|j| (i + j) % n).collect())));
    }
    let all = sum_of_products(n, order, std::iter::once((0..n).collect()));
    let minus_one = Polynomial::constant(n, order, -BigRational::one());
    polys.push(all.try_add(&minus_one).expect("same ring"));
    (ctx, polys)
}

/// The katsura-n system in variables `u0..un`.
pub fn katsura(n: usize, order: MonomialOrdering) -> (VariableContext, Vec<Polynomial>) {
    assert!(n >= 1);
    let nv = n + 1;
    let ctx = VariableContext::new((0..nv).map(|i| format!("u{i}"))).expect("valid context");
    let int = |c: i64| BigRational::from_integer(BigInt::from(c));
    let var = |i: usize| Monomial::var(nv, i);
    let mut polys = Vec::with_capacity(nv);
    // u0 + 2 u1 + ... + 2 un - 1
    let mut linear: Vec<(BigRational, Monomial)> = (0..nv).map(|i| (int(if i == 0 { 1 } else { 2 }), var(i))).collect();
    linear.push((int(-1), Monomial::one(nv)));
    polys.push(Polynomial::from_terms(nv, order, linear).expect("consistent context"));
    // sum_{l=-n}^{n} u_|l| u_|m-l| - u_m for m = 0..n-1
    for m in 0..n as i64 {
        let mut terms: Vec<(BigRational, Monomial)> = Vec::new();
        for l in -(n as i64)..=(n as i64) {
            let (a, b) = (l.unsigned_abs() as usize, (m - l).unsigned_abs() as usize);
            if b <= n {
                terms.push((int(1), var(a).mul(&var(b)).expect("small degree")));
            }
        }
        terms.push((int(-1), var(m as usize)));
        polys.push(Polynomial::from_terms(nv, order, terms).expect("consistent context"));
    }
    (ctx, polys)
}

/// `{x^2*y, x*z, y^2, y*z, z^3}` over `x > y > z`.
pub fn example_monomials() -> (VariableContext, Vec<Monomial>) {
    let ctx = VariableContext::new(["x", "y", "z"]).expect("valid context");
    let set = ["x^2*y", "x*z", "y^2", "y*z", "z^3"]
        .iter()
        .map(|s| Monomial::parse(s, &ctx).expect("valid monomial"))
        .collect();
    (ctx, set)
}

fn random_monomial<R: Rng>(rng: &mut R, nvars: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u32; nvars];
    for _ in 0..degree {
        exps[rng.random_range(0..nvars)] += 1;
    }
    Monomial::from_exponents(exps)
}

/// Random monomial set: `nvars` variables, between 1 and `max_generators`
/// draws of total degree 1..=`max_degree`, duplicates dropped.
pub fn random_monomial_set<R: Rng>(rng: &mut R, nvars: usize, max_degree: u32, max_generators: usize) -> Vec<Monomial> {
    let count = rng.random_range(1..=max_generators);
    let mut set: Vec<Monomial> = Vec::with_capacity(count);
    for _ in 0..count {
        let d = rng.random_range(1..=max_degree);
        let m = random_monomial(rng, nvars, d);
        if !set.contains(&m) {
            set.push(m);
        }
    }
    set
}

/// A corpus of `count` random monomial sets with 1..=`max_vars` variables.
pub fn monomial_corpus(seed: u64, count: usize, max_vars: usize, max_degree: u32, max_generators: usize) -> Vec<Vec<Monomial>> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_vars);
            random_monomial_set(&mut rng, n, max_degree, max_generators)
        })
        .collect()
}

/// Random sparse polynomial with a term count drawn from `terms`, terms of
/// degree 0..=`max_degree` and small rational coefficients. Never constant.
pub fn random_polynomial<R: Rng>(
    rng: &mut R,
    nvars: usize,
    order: MonomialOrdering,
    max_degree: u32,
    terms: RangeInclusive<usize>,
) -> Polynomial {
    loop {
        let count = rng.random_range(terms.clone());
        let terms = (0..count).map(|_| {
            let mut numer = rng.random_range(-5i64..=4);
            if numer >= 0 {
                numer += 1;
            }
            let denom = rng.random_range(1i64..=3);
            let d = rng.random_range(0..=max_degree);
            (
                BigRational::new(numer.into(), denom.into()),
                random_monomial(rng, nvars, d),
            )
        });
        let p = Polynomial::from_terms(nvars, order, terms.collect::<Vec<_>>()).expect("consistent context");
        if !p.is_zero() && !p.lm().is_one() {
            return p;
        }
    }
}

/// A corpus of `count` random systems of `generators` polynomials with two
/// to four terms each.
pub fn polynomial_corpus(
    seed: u64,
    count: usize,
    nvars: usize,
    order: MonomialOrdering,
    max_degree: u32,
    generators: usize,
) -> Vec<Vec<Polynomial>> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            (0..generators)
                .map(|_| random_polynomial(&mut rng, nvars, order, max_degree, 2..=4))
                .collect()
        })
        .collect()
}

/// Nonzero small rational, used for rescaling generators.
pub fn random_nonzero_scalar<R: Rng>(rng: &mut R) -> BigRational {
    loop {
        let c = BigRational::new(rng.random_range(-7i64..=7).into(), rng.random_range(1i64..=5).into());
        if !c.is_zero() {
            return c;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic3_shape() {
        let (ctx, f) = cyclic(3, MonomialOrdering::DegRevLex);
        let shown: Vec<String> = f.iter().map(|p| p.display(&ctx).to_string()).collect();
        assert_eq!(shown, vec!["x1 + x2 + x3", "x1*x2 + x1*x3 + x2*x3", "x1*x2*x3 - 1"]);
    }

    #[test]
    fn katsura2_shape() {
        let (ctx, f) = katsura(2, MonomialOrdering::DegRevLex);
        let shown: Vec<String> = f.iter().map(|p| p.display(&ctx).to_string()).collect();
        assert_eq!(
            shown,
            vec![
                "u0 + 2*u1 + 2*u2 - 1",
                "u0^2 + 2*u1^2 + 2*u2^2 - u0",
                "2*u0*u1 + 2*u1*u2 - u1",
            ]
        );
    }

    #[test]
    fn corpora_are_reproducible() {
        assert_eq!(monomial_corpus(7, 5, 4, 5, 6), monomial_corpus(7, 5, 4, 5, 6));
        assert_eq!(
            polynomial_corpus(7, 3, 3, MonomialOrdering::DegRevLex, 3, 3),
            polynomial_corpus(7, 3, 3, MonomialOrdering::DegRevLex, 3, 3)
        );
    }
}
