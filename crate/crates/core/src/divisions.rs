//! The eight involutive divisions.
//!
//! Every division maps an element `u` of a finite monomial set `U` to a
//! [`Separation`] of the variables into multiplicative and nonmultiplicative
//! ones. Functions here are stateless; callers decide whether to recompute
//! separations from scratch or to patch them with [`pairwise_update`].

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::monomials::{Monomial, MonomialOrdering, VarSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Division {
    Thomas,
    Janet,
    Pommaret,
    DivisionI,
    DivisionII,
    /// Division induced by an admissible ordering (independent of the main
    /// ordering used for leading terms).
    Induced(MonomialOrdering),
}

impl Division {
    pub const ALL: [Division; 8] = [
        Division::Thomas,
        Division::Janet,
        Division::Pommaret,
        Division::DivisionI,
        Division::DivisionII,
        Division::Induced(MonomialOrdering::Lex),
        Division::Induced(MonomialOrdering::DegLex),
        Division::Induced(MonomialOrdering::DegRevLex),
    ];

    /// The divisions for which every finite set has a finite completion.
    pub const NOETHERIAN: [Division; 7] = [
        Division::Thomas,
        Division::Janet,
        Division::DivisionI,
        Division::DivisionII,
        Division::Induced(MonomialOrdering::Lex),
        Division::Induced(MonomialOrdering::DegLex),
        Division::Induced(MonomialOrdering::DegRevLex),
    ];

    pub fn name(self) -> &'static str {
        match self {
            Division::Thomas => "thomas",
            Division::Janet => "janet",
            Division::Pommaret => "pommaret",
            Division::DivisionI => "div1",
            Division::DivisionII => "div2",
            Division::Induced(MonomialOrdering::Lex) => "induced-lex",
            Division::Induced(MonomialOrdering::DegLex) => "induced-deglex",
            Division::Induced(MonomialOrdering::DegRevLex) => "induced-degrevlex",
        }
    }

    /// Separation does not depend on the surrounding set.
    pub fn is_globally_defined(self) -> bool {
        matches!(self, Division::Pommaret | Division::DivisionII)
    }

    pub fn is_noetherian(self) -> bool {
        self != Division::Pommaret
    }

    /// Whether skipping re-checks below the completeness bound is known to be
    /// safe for this division under the given completion ordering.
    pub fn is_monotone_for(self, completion_order: MonomialOrdering) -> bool {
        match self {
            Division::Thomas | Division::Pommaret | Division::DivisionII => true,
            Division::Janet => completion_order == MonomialOrdering::Lex,
            Division::Induced(o) => o == completion_order,
            Division::DivisionI => false,
        }
    }
}

impl fmt::Display for Division {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Division {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        Division::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown division `{s}` (expected one of: {})",
                    Division::ALL.map(Division::name).join(", ")
                )
            })
    }
}

/// Multiplicative / nonmultiplicative split of the variables for one element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Separation {
    pub multiplicative: VarSet,
    pub nonmultiplicative: VarSet,
}

impl Separation {
    pub fn from_nonmultiplicative(nonmultiplicative: VarSet, nvars: usize) -> Self {
        Separation {
            multiplicative: nonmultiplicative.complement(nvars),
            nonmultiplicative,
        }
    }
}

fn ensure_member(u: &Monomial, set: &[Monomial]) -> Result<(), Error> {
    if set.contains(u) {
        Ok(())
    } else {
        Err(Error::NotInSet(u.exponents().to_vec()))
    }
}

/// Separation of the variables for `u` with respect to `set`, computed
/// directly from the definition of the division.
pub fn separation(kind: Division, u: &Monomial, set: &[Monomial]) -> Result<Separation, Error> {
    ensure_member(u, set)?;
    Ok(Separation::from_nonmultiplicative(
        nonmultiplicative_unchecked(kind, u, set),
        u.nvars(),
    ))
}

/// Full-rescan nonmultiplicative set. `u` is assumed to belong to `set`.
pub(crate) fn nonmultiplicative_unchecked(kind: Division, u: &Monomial, set: &[Monomial]) -> VarSet {
    let n = u.nvars();
    match kind {
        Division::Thomas => {
            let mut nm = VarSet::EMPTY;
            for i in 0..n {
                let max = set.iter().map(|v| v.exponent(i)).max().unwrap_or(0);
                if u.exponent(i) < max {
                    nm.insert(i);
                }
            }
            nm
        }
        Division::Janet => {
            // group [d1..d_{i-1}] shrinks as i grows
            let mut group: Vec<&Monomial> = set.iter().collect();
            let mut nm = VarSet::EMPTY;
            for i in 0..n {
                if i > 0 {
                    group.retain(|v| v.exponent(i - 1) == u.exponent(i - 1));
                }
                let max = group.iter().map(|v| v.exponent(i)).max().unwrap_or(0);
                if u.exponent(i) < max {
                    nm.insert(i);
                }
            }
            nm
        }
        Division::Pommaret | Division::DivisionII => global_nonmultiplicative(kind, u),
        Division::DivisionI => {
            let bound = n / 2;
            let mut nm = VarSet::EMPTY;
            for v in set {
                let s = lcm_excess(u, v);
                if !s.is_empty() && s.len() <= bound {
                    nm = nm.union(s);
                }
            }
            nm
        }
        Division::Induced(order) => {
            let mut nm = VarSet::EMPTY;
            for v in set.iter().filter(|v| order.less(v, u)) {
                nm = nm.union(exceeds(u, v));
            }
            nm
        }
    }
}

/// Variables where `v` has strictly larger degree than `u`, i.e. the support
/// of `lcm(u, v) / u`.
fn lcm_excess(u: &Monomial, v: &Monomial) -> VarSet {
    exceeds(u, v)
}

fn exceeds(u: &Monomial, v: &Monomial) -> VarSet {
    VarSet::from_indices(
        u.exponents()
            .iter()
            .zip(v.exponents())
            .enumerate()
            .filter(|(_, (a, b))| a < b)
            .map(|(i, _)| i),
    )
}

fn global_nonmultiplicative(kind: Division, u: &Monomial) -> VarSet {
    let n = u.nvars();
    match kind {
        Division::Pommaret => match u.exponents().iter().rposition(|&e| e > 0) {
            // class k: x_j multiplicative for j >= k
            Some(k) => VarSet::full(k),
            None => VarSet::EMPTY,
        },
        Division::DivisionII => {
            let dmax = u.exponents().iter().copied().max().unwrap_or(0);
            VarSet::from_indices((0..n).filter(|&i| u.exponent(i) != dmax))
        }
        _ => unreachable!("only globally defined divisions"),
    }
}

/// Nonmultiplicative variables of `u` with respect to the pair `{u, v}`.
pub fn pair_nonmultiplicative(kind: Division, u: &Monomial, v: &Monomial) -> VarSet {
    match kind {
        Division::Pommaret | Division::DivisionII => global_nonmultiplicative(kind, u),
        Division::Thomas => exceeds(u, v),
        Division::Janet => match u.exponents().iter().zip(v.exponents()).position(|(a, b)| a != b) {
            Some(i) if u.exponent(i) < v.exponent(i) => VarSet::singleton(i),
            _ => VarSet::EMPTY,
        },
        Division::DivisionI => {
            let s = lcm_excess(u, v);
            if !s.is_empty() && s.len() <= u.nvars() / 2 {
                s
            } else {
                VarSet::EMPTY
            }
        }
        Division::Induced(order) => {
            if order.less(v, u) {
                exceeds(u, v)
            } else {
                VarSet::EMPTY
            }
        }
    }
}

/// `NM(u, U ∪ {v})` from `NM(u, U)` without rescanning `U`.
pub fn pairwise_update(kind: Division, u: &Monomial, nm_current: VarSet, v: &Monomial) -> VarSet {
    nm_current.union(pair_nonmultiplicative(kind, u, v))
}

/// `u |_L w` with respect to `set`.
pub fn involutive_divides(kind: Division, u: &Monomial, set: &[Monomial], w: &Monomial) -> Result<bool, Error> {
    let sep = separation(kind, u, set)?;
    Ok(u.divides_within(w, sep.multiplicative))
}

/// Some involutive divisor of `w` in `set`, if any. Unique when `set` is
/// involutively autoreduced.
pub fn find_involutive_divisor<'a>(kind: Division, set: &'a [Monomial], w: &Monomial) -> Option<&'a Monomial> {
    set.iter().find(|u| {
        u.divides(w) && {
            let m = nonmultiplicative_unchecked(kind, u, set).complement(u.nvars());
            u.divides_within(w, m)
        }
    })
}

/// Separations for every element of `set`, indexed like `set`.
pub fn separations(kind: Division, set: &[Monomial]) -> Vec<Separation> {
    set.iter()
        .map(|u| Separation::from_nonmultiplicative(nonmultiplicative_unchecked(kind, u, set), u.nvars()))
        .collect()
}

/// Separations assembled from pairwise contributions only.
pub fn separations_pairwise(kind: Division, set: &[Monomial]) -> Vec<Separation> {
    set.iter()
        .map(|u| {
            let nm = set
                .iter()
                .fold(pairwise_update(kind, u, VarSet::EMPTY, u), |acc, v| pairwise_update(kind, u, acc, v));
            Separation::from_nonmultiplicative(nm, u.nvars())
        })
        .collect()
}
