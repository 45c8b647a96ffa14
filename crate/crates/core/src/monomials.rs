//! Dense exponent-vector monomials, variable sets and the three admissible
//! orderings.
//!
//! Variables are identified by their position in a [`VariableContext`];
//! position 0 is the greatest variable, so every ordering here satisfies
//! `x1 > x2 > ... > xn`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError};

/// Largest number of variables a context may hold (one bit per variable in
/// [`VarSet`]).
pub const MAX_VARIABLES: usize = 64;

/// Ordered list of variable names; index 0 is the greatest variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
}

impl VariableContext {
    pub fn new<I, S>(names: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidContext("no variables declared".into()));
        }
        if names.len() > MAX_VARIABLES {
            return Err(Error::InvalidContext(format!(
                "{} variables declared, at most {MAX_VARIABLES} supported",
                names.len()
            )));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidContext(format!("`{name}` is not a valid variable name")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidContext(format!("variable `{name}` declared twice")));
            }
        }
        Ok(VariableContext { names })
    }

    /// Context `x1, ..., xn`.
    pub fn indexed(n: usize) -> Result<Self, Error> {
        Self::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn all(&self) -> VarSet {
        VarSet::full(self.len())
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A set of variable positions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    /// All variables `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VARIABLES);
        if n == 64 {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        VarSet(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().fold(VarSet::EMPTY, |s, i| s.with(i))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        VarSet(self.0 | 1 << i)
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn union(self, other: VarSet) -> Self {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> Self {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> Self {
        VarSet(self.0 & !other.0)
    }

    /// Complement relative to the first `n` variables.
    pub fn complement(self, n: usize) -> Self {
        VarSet::full(n).difference(self)
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Renders as `x,y,z` or `-` for the empty set.
    pub fn display<'a>(&self, ctx: &'a VariableContext) -> VarSetDisplay<'a> {
        VarSetDisplay { set: *self, ctx }
    }
}

pub struct VarSetDisplay<'a> {
    set: VarSet,
    ctx: &'a VariableContext,
}

impl fmt::Display for VarSetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.set.is_empty() {
            return f.write_str("-");
        }
        for (k, i) in self.set.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(self.ctx.name(i))?;
        }
        Ok(())
    }
}

/// A monomial `x1^e1 * ... * xn^en` stored as its exponent vector.
///
/// The derived `Ord` is the structural order of exponent vectors and is only
/// meant for sorted containers; use [`MonomialOrdering`] for algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The variable at position `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exponents(exps: impl Into<Vec<u32>>) -> Self {
        Monomial { exps: exps.into() }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Total degree. Exponents are kept small enough by [`Monomial::mul`]
    /// that this never overflows.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Variables with a positive exponent.
    pub fn support(&self) -> VarSet {
        VarSet::from_indices(self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i))
    }

    fn check_context(&self, other: &Monomial) -> Result<(), Error> {
        if self.exps.len() == other.exps.len() {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: self.exps.len(),
                right: other.exps.len(),
            })
        }
    }

    /// Product; fails if the total degree would leave `u32`.
    pub fn mul(&self, other: &Monomial) -> Result<Monomial, Error> {
        self.check_context(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<u32>>>()
            .ok_or(Error::DegreeOverflow)?;
        let product = Monomial { exps };
        product
            .exps
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .ok_or(Error::DegreeOverflow)?;
        Ok(product)
    }

    /// Prolongation by the variable at position `i`.
    pub fn mul_var(&self, i: usize) -> Result<Monomial, Error> {
        self.degree().checked_add(1).ok_or(Error::DegreeOverflow)?;
        let mut m = self.clone();
        m.exps[i] += 1;
        Ok(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial, Error> {
        self.check_context(other)?;
        Ok(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        })
    }

    /// Does `self` divide `other`? Mismatched lengths never divide.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`.
    pub fn quotient_of(&self, other: &Monomial) -> Result<Monomial, Error> {
        self.check_context(other)?;
        if !self.divides(other) {
            return Err(Error::NotDivisible {
                divisor: self.exps.clone(),
                dividend: other.exps.clone(),
            });
        }
        Ok(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        })
    }

    /// True iff `self | other` and every variable of `other / self` lies in
    /// `allowed`.
    pub fn divides_within(&self, other: &Monomial, allowed: VarSet) -> bool {
        self.exps.len() == other.exps.len()
            && self
                .exps
                .iter()
                .zip(&other.exps)
                .enumerate()
                .all(|(i, (a, b))| a == b || (a < b && allowed.contains(i)))
    }

    pub fn display<'a>(&'a self, ctx: &'a VariableContext) -> MonomialDisplay<'a> {
        MonomialDisplay { m: self, ctx }
    }

    /// Parses `x^2*y` style text; `1` is the unit monomial.
    pub fn parse(text: &str, ctx: &VariableContext) -> Result<Monomial, ParseError> {
        crate::parse::parse_monomial(text, ctx)
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    ctx: &'a VariableContext,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.m.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ctx.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// The admissible orderings supported by the kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrdering {
    Lex,
    DegLex,
    DegRevLex,
}

impl MonomialOrdering {
    pub const ALL: [MonomialOrdering; 3] = [Self::Lex, Self::DegLex, Self::DegRevLex];

    /// Compares two monomials over the same context. Monomials of different
    /// lengths are a caller bug; see [`MonomialOrdering::try_compare`].
    pub fn compare(self, u: &Monomial, v: &Monomial) -> Ordering {
        debug_assert_eq!(u.nvars(), v.nvars());
        match self {
            MonomialOrdering::Lex => lex(u, v),
            MonomialOrdering::DegLex => u.degree().cmp(&v.degree()).then_with(|| lex(u, v)),
            MonomialOrdering::DegRevLex => u.degree().cmp(&v.degree()).then_with(|| revlex(u, v)),
        }
    }

    pub fn try_compare(self, u: &Monomial, v: &Monomial) -> Result<Ordering, Error> {
        u.check_context(v)?;
        Ok(self.compare(u, v))
    }

    pub fn less(self, u: &Monomial, v: &Monomial) -> bool {
        self.compare(u, v) == Ordering::Less
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrdering::Lex => "lex",
            MonomialOrdering::DegLex => "deglex",
            MonomialOrdering::DegRevLex => "degrevlex",
        }
    }

    pub fn is_degree_compatible(self) -> bool {
        !matches!(self, MonomialOrdering::Lex)
    }
}

fn lex(u: &Monomial, v: &Monomial) -> Ordering {
    u.exps.cmp(&v.exps)
}

// Larger monomial has the smaller exponent in the last differing position.
fn revlex(u: &Monomial, v: &Monomial) -> Ordering {
    for (a, b) in u.exps.iter().rev().zip(v.exps.iter().rev()) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

impl fmt::Display for MonomialOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrdering {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lex" | "plex" => Ok(MonomialOrdering::Lex),
            "deglex" | "grlex" => Ok(MonomialOrdering::DegLex),
            "degrevlex" | "grevlex" | "drl" => Ok(MonomialOrdering::DegRevLex),
            other => Err(format!("unknown monomial ordering `{other}` (expected lex, deglex or degrevlex)")),
        }
    }
}
