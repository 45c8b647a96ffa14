//! Sparse polynomials with exact rational coefficients, normal forms and a
//! Buchberger Gröbner basis used as a correctness oracle.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::divisions::{self, Division};
use crate::error::{Error, Limit, ParseError};
use crate::mono_completion::CompletionLimits;
use crate::monomials::{Monomial, MonomialOrdering, VarSet, VariableContext};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: BigRational,
    pub monomial: Monomial,
}

/// A polynomial whose terms are kept strictly decreasing under its main
/// ordering, with no zero coefficients. The empty term list is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    order: MonomialOrdering,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(nvars: usize, order: MonomialOrdering) -> Self {
        Polynomial {
            nvars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, order: MonomialOrdering, c: BigRational) -> Self {
        Self::from_monomial_scaled(Monomial::one(nvars), order, c)
    }

    pub fn from_monomial(m: Monomial, order: MonomialOrdering) -> Self {
        Self::from_monomial_scaled(m, order, BigRational::one())
    }

    fn from_monomial_scaled(m: Monomial, order: MonomialOrdering, coeff: BigRational) -> Self {
        let nvars = m.nvars();
        let terms = if coeff.is_zero() {
            Vec::new()
        } else {
            vec![Term { coeff, monomial: m }]
        };
        Polynomial { nvars, order, terms }
    }

    /// Builds a normalized polynomial from arbitrary terms: like terms are
    /// combined and zeros dropped.
    pub fn from_terms<I>(nvars: usize, order: MonomialOrdering, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (BigRational, Monomial)>,
    {
        let mut raw: Vec<Term> = Vec::new();
        for (coeff, monomial) in terms {
            if monomial.nvars() != nvars {
                return Err(Error::ContextMismatch {
                    left: nvars,
                    right: monomial.nvars(),
                });
            }
            raw.push(Term { coeff, monomial });
        }
        raw.sort_by(|a, b| order.compare(&b.monomial, &a.monomial));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.monomial == t.monomial => last.coeff += t.coeff,
                _ => terms.push(t),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        Ok(Polynomial { nvars, order, terms })
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(nvars: usize, order: MonomialOrdering, terms: &[(i64, &[u32])]) -> Result<Self, Error> {
        Self::from_terms(
            nvars,
            order,
            terms
                .iter()
                .map(|(c, e)| (BigRational::from_integer(BigInt::from(*c)), Monomial::from_exponents(e.to_vec()))),
        )
    }

    pub fn parse(text: &str, ctx: &VariableContext, order: MonomialOrdering) -> Result<Self, ParseError> {
        let raw = crate::parse::parse_terms(text, ctx)?;
        Ok(Self::from_terms(ctx.len(), order, raw).expect("parser produces monomials over ctx"))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrdering {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Leading monomial; panics on zero.
    pub fn lm(&self) -> &Monomial {
        &self.terms.first().expect("leading monomial of zero polynomial").monomial
    }

    /// Leading coefficient; panics on zero.
    pub fn lc(&self) -> &BigRational {
        &self.terms.first().expect("leading coefficient of zero polynomial").coeff
    }

    pub fn is_monic(&self) -> bool {
        self.terms.first().is_some_and(|t| t.coeff.is_one())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.monomial.degree()).max().unwrap_or(0)
    }

    fn check(&self, other: &Polynomial) -> Result<(), Error> {
        if self.nvars != other.nvars {
            return Err(Error::ContextMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        if self.order != other.order {
            return Err(Error::OrderingMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.check(other)?;
        Ok(self.merge(other.terms.iter().cloned()))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.check(other)?;
        Ok(self.merge(other.terms.iter().map(|t| Term {
            coeff: -t.coeff.clone(),
            monomial: t.monomial.clone(),
        })))
    }

    /// Full product.
    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.check(other)?;
        let mut acc = Polynomial::zero(self.nvars, self.order);
        for t in &other.terms {
            acc = acc.try_add(&self.mul_term(&t.coeff, &t.monomial)?)?;
        }
        Ok(acc)
    }

    // Merge with a descending term stream.
    fn merge(&self, other: impl Iterator<Item = Term>) -> Polynomial {
        let terms = merge_terms(self.order, self.terms.iter().cloned(), other);
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms,
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.order);
        }
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    /// `c * m * self`. Multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, c: &BigRational, m: &Monomial) -> Result<Polynomial, Error> {
        if m.nvars() != self.nvars {
            return Err(Error::ContextMismatch {
                left: self.nvars,
                right: m.nvars(),
            });
        }
        if c.is_zero() {
            return Ok(Polynomial::zero(self.nvars, self.order));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    coeff: &t.coeff * c,
                    monomial: t.monomial.mul(m)?,
                })
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms,
        })
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Polynomial, Error> {
        self.mul_term(&BigRational::one(), m)
    }

    /// Prolongation by the variable at position `i`.
    pub fn mul_var(&self, i: usize) -> Result<Polynomial, Error> {
        self.mul_monomial(&Monomial::var(self.nvars, i))
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            Some(t) if !t.coeff.is_one() => self.scale(&t.coeff.recip()),
            _ => self.clone(),
        }
    }

    /// The same polynomial with terms re-sorted under another ordering.
    pub fn with_order(&self, order: MonomialOrdering) -> Polynomial {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.compare(&b.monomial, &a.monomial));
        Polynomial {
            nvars: self.nvars,
            order,
            terms,
        }
    }

    pub fn display<'a>(&'a self, ctx: &'a VariableContext) -> PolynomialDisplay<'a> {
        PolynomialDisplay { p: self, ctx }
    }
}

fn merge_terms(order: MonomialOrdering, a: impl Iterator<Item = Term>, b: impl Iterator<Item = Term>) -> Vec<Term> {
    let mut a = a.peekable();
    let mut b = b.peekable();
    let mut out = Vec::new();
    loop {
        let next = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => a.next().unwrap(),
            (None, Some(_)) => b.next().unwrap(),
            (Some(x), Some(y)) => match order.compare(&x.monomial, &y.monomial) {
                Ordering::Greater => a.next().unwrap(),
                Ordering::Less => b.next().unwrap(),
                Ordering::Equal => {
                    let mut t = a.next().unwrap();
                    t.coeff += b.next().unwrap().coeff;
                    if t.coeff.is_zero() {
                        continue;
                    }
                    t
                }
            },
        };
        out.push(next);
    }
    out
}

pub struct PolynomialDisplay<'a> {
    p: &'a Polynomial,
    ctx: &'a VariableContext,
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.p.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = t.coeff.abs();
            if t.monomial.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.monomial.display(self.ctx))?;
            } else {
                write!(f, "{abs}*{}", t.monomial.display(self.ctx))?;
            }
        }
        Ok(())
    }
}

/// Checks that all polynomials share one context and ordering.
pub fn common_ring(polys: &[Polynomial]) -> Result<(usize, MonomialOrdering), Error> {
    let first = polys.first().ok_or(Error::EmptyInput)?;
    for p in &polys[1..] {
        first.check(p)?;
    }
    Ok((first.nvars, first.order))
}

/// Full reduction: repeatedly eliminates the highest term for which
/// `find` names a reducer, moving irreducible terms to the remainder.
fn reduce_with(p: &Polynomial, reducers: &[&Polynomial], find: impl Fn(&Monomial) -> Option<usize>) -> Polynomial {
    let order = p.order;
    let mut terms = p.terms.clone();
    let mut pos = 0;
    while pos < terms.len() {
        let Some(i) = find(&terms[pos].monomial) else {
            pos += 1;
            continue;
        };
        let f = reducers[i];
        let lead = &terms[pos];
        let shift = f.lm().quotient_of(&lead.monomial).expect("reducer divides the term");
        let factor = -(&lead.coeff / f.lc());
        let subtrahend = f.terms[1..].iter().map(|t| Term {
            coeff: &t.coeff * &factor,
            monomial: t.monomial.mul(&shift).expect("exponent overflow during reduction"),
        });
        let tail = merge_terms(order, terms.drain(pos + 1..), subtrahend);
        terms.truncate(pos);
        terms.extend(tail);
    }
    Polynomial {
        nvars: p.nvars,
        order,
        terms,
    }
}

/// Conventional normal form with full (tail) reduction.
pub fn nf_conventional(p: &Polynomial, set: &[Polynomial]) -> Polynomial {
    let reducers: Vec<&Polynomial> = set.iter().filter(|f| !f.is_zero()).collect();
    reduce_with(p, &reducers, |t| reducers.iter().position(|f| f.lm().divides(t)))
}

/// Involutive normal form with respect to `division`, separations taken on
/// the leading monomials of `set`.
pub fn nf_involutive(p: &Polynomial, set: &[Polynomial], division: Division) -> Polynomial {
    let reducers: Vec<&Polynomial> = set.iter().filter(|f| !f.is_zero()).collect();
    let lms: Vec<Monomial> = reducers.iter().map(|f| f.lm().clone()).collect();
    let mult: Vec<VarSet> = divisions::separations(division, &lms)
        .into_iter()
        .map(|s| s.multiplicative)
        .collect();
    nf_involutive_with(p, &reducers, &mult)
}

/// Involutive normal form with precomputed multiplicative sets (indexed like
/// `reducers`).
pub fn nf_involutive_with(p: &Polynomial, reducers: &[&Polynomial], mult: &[VarSet]) -> Polynomial {
    reduce_with(p, reducers, |t| {
        (0..reducers.len()).find(|&i| reducers[i].lm().divides_within(t, mult[i]))
    })
}

/// Monic, pairwise interreduced generating set of the same ideal, sorted by
/// leading monomial ascending.
pub fn autoreduce(set: &[Polynomial]) -> Vec<Polynomial> {
    let mut work: Vec<Polynomial> = set.iter().filter(|f| !f.is_zero()).map(Polynomial::monic).collect();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < work.len() {
            let others: Vec<Polynomial> = work
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, f)| f.clone())
                .collect();
            let h = nf_conventional(&work[i], &others);
            if h.is_zero() {
                work.remove(i);
                changed = true;
                continue;
            }
            let h = h.monic();
            if h != work[i] {
                work[i] = h;
                changed = true;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    sort_by_lm(&mut work);
    work
}

pub fn sort_by_lm(polys: &mut [Polynomial]) {
    polys.sort_by(|a, b| match (a.is_zero(), b.is_zero()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => a.order.compare(a.lm(), b.lm()),
    });
}

/// Conventional S-polynomial of two nonzero polynomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, Error> {
    f.check(g)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let l = f.lm().lcm(g.lm())?;
    let a = f.mul_term(&f.lc().recip(), &f.lm().quotient_of(&l)?)?;
    let b = g.mul_term(&g.lc().recip(), &g.lm().quotient_of(&l)?)?;
    a.try_sub(&b)
}

/// `g*x - f*w` on lc-normalized `f`, `g`, where `lm(f)*w = lm(g)*x`.
pub fn s_polynomial_involutive(g: &Polynomial, x: usize, f: &Polynomial, w: &Monomial) -> Result<Polynomial, Error> {
    f.check(g)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if x >= g.nvars || f.lm().mul(w)? != g.lm().mul_var(x)? {
        return Err(Error::SPolynomialPrecondition);
    }
    let a = g.mul_term(&g.lc().recip(), &Monomial::var(g.nvars, x))?;
    let b = f.mul_term(&f.lc().recip(), w)?;
    a.try_sub(&b)
}

/// Reduced Gröbner basis by Buchberger's algorithm with the normal selection
/// strategy and the coprime criterion. Returns the monic basis sorted by
/// leading monomial ascending; the zero ideal gives an empty basis.
pub fn buchberger(set: &[Polynomial], limits: CompletionLimits) -> Result<Vec<Polynomial>, Error> {
    let (_, order) = common_ring(set)?;
    let mut basis: Vec<Polynomial> = set.iter().filter(|f| !f.is_zero()).map(Polynomial::monic).collect();
    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j, basis[i].lm().lcm(basis[j].lm())?));
        }
    }
    let mut iterations = 0usize;
    while let Some(pos) = (0..pairs.len()).min_by(|&a, &b| order.compare(&pairs[a].2, &pairs[b].2).then(a.cmp(&b))) {
        let (i, j, lcm) = pairs.remove(pos);
        iterations += 1;
        if iterations > limits.max_iterations {
            return Err(Error::LimitExceeded(Limit::Iterations(limits.max_iterations)));
        }
        let (fi, fj) = (&basis[i], &basis[j]);
        if fi.lm().mul(fj.lm())? == lcm {
            continue;
        }
        let h = nf_conventional(&s_polynomial(fi, fj)?, &basis);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        if h.lm().degree() > limits.max_degree {
            return Err(Error::LimitExceeded(Limit::Degree(limits.max_degree)));
        }
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            pairs.push((i, k, g.lm().lcm(h.lm())?));
        }
        basis.push(h);
    }
    Ok(reduce_basis(basis))
}

/// Minimalizes and interreduces a Gröbner basis.
pub fn reduce_basis(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, f)| j != i && f.lm().divides(g.lm()) && (f.lm() != g.lm() || j < i));
        if !redundant {
            minimal.push(g.monic());
        }
    }
    let reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, f)| f.clone())
                .collect();
            nf_conventional(&minimal[i], &others).monic()
        })
        .collect();
    let mut reduced = reduced;
    sort_by_lm(&mut reduced);
    reduced
}

/// Every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    for j in 0..basis.len() {
        for i in 0..j {
            match s_polynomial(&basis[i], &basis[j]) {
                Ok(s) if nf_conventional(&s, basis).is_zero() => {}
                _ => return false,
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> VariableContext {
        VariableContext::new(["x", "y", "z"]).unwrap()
    }

    fn p(text: &str) -> Polynomial {
        Polynomial::parse(text, &ctx(), MonomialOrdering::DegLex).unwrap()
    }

    fn show(q: &Polynomial) -> String {
        q.display(&ctx()).to_string()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(p("x + 1").try_add(&p("-x")).unwrap(), p("1"));
        assert_eq!(p("x*y - 3").try_add(&p("0")).unwrap(), p("x*y - 3"));
        assert_eq!(p("2*x^2 + 4").monic(), p("x^2 + 2"));
        assert_eq!(p("x - y").try_mul(&p("x + y")).unwrap(), p("x^2 - y^2"));
        assert_eq!(p("x + y").try_sub(&p("x + y")).unwrap(), p("0"));
        assert!(p("0").is_zero());
    }

    #[test]
    fn mismatches() {
        let lex = Polynomial::parse("x", &ctx(), MonomialOrdering::Lex).unwrap();
        assert_eq!(lex.try_add(&p("x")), Err(Error::OrderingMismatch));
        let two = Polynomial::zero(2, MonomialOrdering::DegLex);
        assert!(matches!(two.try_add(&p("x")), Err(Error::ContextMismatch { .. })));
    }

    #[test]
    fn rendering() {
        assert_eq!(show(&p("-3/2*x*y + y^2 - 1 + 2*z")), "-3/2*x*y + y^2 + 2*z - 1");
        assert_eq!(show(&p("0")), "0");
        assert_eq!(show(&p("-x")), "-x");
    }

    #[test]
    fn conventional_normal_form() {
        let f = p("x*y - 1");
        assert_eq!(nf_conventional(&p("x^2*y"), std::slice::from_ref(&f)), p("x"));
        assert_eq!(nf_conventional(&p("x^2 + z"), &[]), p("x^2 + z"));
        let g = p("3*x^2 - y*z + 7");
        let fg = f.try_mul(&g).unwrap();
        assert!(nf_conventional(&fg, &[f]).is_zero());
    }

    #[test]
    fn involutive_normal_form_fixed_points() {
        let set = vec![p("x^2*y - z"), p("x*z - y")];
        for f in &set {
            assert!(nf_involutive(f, &set, Division::Janet).is_zero());
        }
        let q = p("y^3 + z^2 + 1");
        assert_eq!(nf_involutive(&q, &set, Division::Janet), q);
    }

    #[test]
    fn autoreduction() {
        assert_eq!(autoreduce(&[p("x"), p("x + y")]), vec![p("y"), p("x")]);
        let f = p("2*x*y - z");
        assert_eq!(autoreduce(&[f.clone(), f.scale(&BigRational::from_integer(2.into()))]), vec![f.monic()]);
        let reduced = vec![p("y^2 - 1"), p("x - y")];
        let mut expected = reduced.clone();
        sort_by_lm(&mut expected);
        assert_eq!(autoreduce(&reduced), expected);
    }

    #[test]
    fn s_polynomials() {
        let f = p("x*y - 1");
        assert!(s_polynomial(&f, &f).unwrap().is_zero());
        let (a, b) = (p("x^2"), p("y^2"));
        assert!(nf_conventional(&s_polynomial(&a, &b).unwrap(), &[a, b]).is_zero());
        let g = p("x*z - y");
        let h = p("x*y*z - y^2");
        // lm(h) = x*y*z = lm(g)*y
        let s = s_polynomial_involutive(&g, 1, &h, &Monomial::one(3)).unwrap();
        assert_eq!(s, g.mul_var(1).unwrap().try_sub(&h).unwrap());
        assert_eq!(
            s_polynomial_involutive(&g, 2, &h, &Monomial::one(3)),
            Err(Error::SPolynomialPrecondition)
        );
        assert_eq!(s_polynomial(&p("0"), &g), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn buchberger_examples() {
        let limits = CompletionLimits::default();
        let gb = buchberger(&[p("x*y - 1"), p("y^2 - 1")], limits).unwrap();
        let mut expected = vec![p("x - y"), p("y^2 - 1")];
        sort_by_lm(&mut expected);
        assert_eq!(gb, expected);
        // x*y - 1 reduces to y^2 - 1 modulo x - y, so it drops out of the reduced basis
        assert!(nf_conventional(&p("x*y - 1"), &gb).is_zero());
        assert_eq!(buchberger(&gb, limits).unwrap(), gb);
        assert_eq!(buchberger(&[p("3*x^2 + y")], limits).unwrap(), vec![p("x^2 + 1/3*y")]);
        assert!(is_groebner_basis(&gb));
        assert!(buchberger(&[], limits).is_err());
    }
}
