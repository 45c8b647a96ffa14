//! Completion of finite monomial sets to involution.
//!
//! [`involutive_complete`] repeatedly inserts the lowest (under the
//! completion ordering) nonmultiplicative prolongation that has no
//! involutive divisor in the current set. Separations are kept up to date
//! with the pairwise rule instead of being rescanned after every insertion.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::divisions::{self, pairwise_update, Division};
use crate::error::{Error, Limit};
use crate::monomials::{Monomial, MonomialOrdering, VarSet};

/// Resource guards for completion runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompletionLimits {
    /// No element of larger total degree is ever inserted.
    pub max_degree: u32,
    /// Cap on involutive-divisor searches.
    pub max_iterations: usize,
}

impl CompletionLimits {
    pub fn new(max_degree: u32, max_iterations: usize) -> Result<Self, Error> {
        if max_degree == 0 || max_iterations == 0 {
            return Err(Error::InvalidContext("completion limits must be positive".into()));
        }
        Ok(CompletionLimits {
            max_degree,
            max_iterations,
        })
    }
}

impl Default for CompletionLimits {
    fn default() -> Self {
        CompletionLimits {
            max_degree: 50,
            max_iterations: 100_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompletionOptions {
    /// Check every nonmultiplicative prolongation exactly once, in ascending
    /// order, and never re-check it after later insertions. Only sound for
    /// divisions that are monotone for the chosen completion ordering.
    pub monotone_fast_path: bool,
    /// Compare every pairwise separation update against a full rescan.
    pub cross_check: bool,
}

impl Default for CompletionOptions {
    fn default() -> Self {
        CompletionOptions {
            monotone_fast_path: false,
            cross_check: cfg!(debug_assertions),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CompletionStats {
    /// Distinct nonmultiplicative prolongations `(u, x)` examined.
    pub prolongations_checked: usize,
    /// Irreducible prolongations inserted.
    pub elements_added: usize,
    pub final_size: usize,
}

impl fmt::Display for CompletionStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "prolongations_checked={}", self.prolongations_checked)?;
        writeln!(f, "elements_added={}", self.elements_added)?;
        write!(f, "final_size={}", self.final_size)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    /// A guard tripped; `partial` is the set reached so far, sorted under the
    /// completion ordering.
    #[error("completion stopped: {limit}")]
    LimitExceeded {
        limit: Limit,
        partial: Vec<Monomial>,
        stats: CompletionStats,
    },
    #[error(transparent)]
    Kernel(#[from] Error),
}

/// Completes `input` to an involutive set with the plain algorithm.
pub fn involutive_complete(
    input: &[Monomial],
    kind: Division,
    completion_order: MonomialOrdering,
    limits: CompletionLimits,
) -> Result<(Vec<Monomial>, CompletionStats), CompletionError> {
    involutive_complete_with(input, kind, completion_order, limits, CompletionOptions::default())
}

pub fn involutive_complete_with(
    input: &[Monomial],
    kind: Division,
    completion_order: MonomialOrdering,
    limits: CompletionLimits,
    options: CompletionOptions,
) -> Result<(Vec<Monomial>, CompletionStats), CompletionError> {
    let first = input.first().ok_or(Error::EmptyInput)?;
    let n = first.nvars();
    if let Some(bad) = input.iter().find(|m| m.nvars() != n) {
        return Err(Error::ContextMismatch {
            left: n,
            right: bad.nvars(),
        }
        .into());
    }
    let mut elems: Vec<Monomial> = Vec::with_capacity(input.len());
    for m in input {
        if !elems.contains(m) {
            elems.push(m.clone());
        }
    }
    let mut run = Completion::new(elems, kind, completion_order, limits, options);
    if options.monotone_fast_path {
        run.run_fast()?;
    } else {
        run.run_plain()?;
    }
    Ok(run.finish())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Reducible(usize),
    Irreducible,
}

struct Pair {
    elem: usize,
    var: usize,
    product: Monomial,
    status: Status,
}

struct Completion {
    kind: Division,
    order: MonomialOrdering,
    limits: CompletionLimits,
    cross_check: bool,
    elems: Vec<Monomial>,
    nm: Vec<VarSet>,
    stats: CompletionStats,
    work: usize,
}

impl Completion {
    fn new(
        elems: Vec<Monomial>,
        kind: Division,
        order: MonomialOrdering,
        limits: CompletionLimits,
        options: CompletionOptions,
    ) -> Self {
        let nm = divisions::separations(kind, &elems)
            .into_iter()
            .map(|s| s.nonmultiplicative)
            .collect();
        Completion {
            kind,
            order,
            limits,
            cross_check: options.cross_check,
            elems,
            nm,
            stats: CompletionStats::default(),
            work: 0,
        }
    }

    fn nvars(&self) -> usize {
        self.elems[0].nvars()
    }

    fn multiplicative(&self, i: usize) -> VarSet {
        self.nm[i].complement(self.nvars())
    }

    fn sorted(&self) -> Vec<Monomial> {
        let mut out = self.elems.clone();
        out.sort_by(|a, b| self.order.compare(a, b));
        out
    }

    fn finish(mut self) -> (Vec<Monomial>, CompletionStats) {
        self.stats.final_size = self.elems.len();
        (self.sorted(), self.stats)
    }

    fn limit(&self, limit: Limit) -> CompletionError {
        let mut stats = self.stats;
        stats.final_size = self.elems.len();
        CompletionError::LimitExceeded {
            limit,
            partial: self.sorted(),
            stats,
        }
    }

    fn find_divisor(&mut self, w: &Monomial) -> Result<Option<usize>, CompletionError> {
        self.work += 1;
        if self.work > self.limits.max_iterations {
            return Err(self.limit(Limit::Iterations(self.limits.max_iterations)));
        }
        Ok((0..self.elems.len()).find(|&i| self.elems[i].divides_within(w, self.multiplicative(i))))
    }

    fn pair_key(&self, a: (usize, usize, &Monomial), b: (usize, usize, &Monomial)) -> Ordering {
        self.order
            .compare(a.2, b.2)
            .then_with(|| self.order.compare(&self.elems[a.0], &self.elems[b.0]))
            .then(a.1.cmp(&b.1))
    }

    fn prolong(&self, i: usize, x: usize) -> Result<Monomial, CompletionError> {
        Ok(self.elems[i].mul_var(x).map_err(Error::from)?)
    }

    /// Inserts `new` and returns, per old element, the variables that just
    /// became nonmultiplicative, plus the nonmultiplicative set of `new`.
    fn insert(&mut self, new: Monomial) -> Result<(Vec<VarSet>, VarSet), CompletionError> {
        if new.degree() > self.limits.max_degree {
            return Err(self.limit(Limit::Degree(self.limits.max_degree)));
        }
        let mut grown = Vec::with_capacity(self.elems.len());
        for i in 0..self.elems.len() {
            let updated = pairwise_update(self.kind, &self.elems[i], self.nm[i], &new);
            grown.push(updated.difference(self.nm[i]));
            self.nm[i] = updated;
        }
        let own = self
            .elems
            .iter()
            .fold(pairwise_update(self.kind, &new, VarSet::EMPTY, &new), |acc, v| {
                pairwise_update(self.kind, &new, acc, v)
            });
        self.elems.push(new);
        self.nm.push(own);
        self.stats.elements_added += 1;
        if self.cross_check {
            let rescan: Vec<VarSet> = divisions::separations(self.kind, &self.elems)
                .into_iter()
                .map(|s| s.nonmultiplicative)
                .collect();
            assert_eq!(rescan, self.nm, "pairwise separation update diverged from full rescan");
        }
        Ok((grown, own))
    }

    fn run_plain(&mut self) -> Result<(), CompletionError> {
        let mut pairs: Vec<Pair> = Vec::new();
        for i in 0..self.elems.len() {
            for x in self.nm[i].iter() {
                self.push_pair(&mut pairs, i, x)?;
            }
        }
        loop {
            let best = pairs
                .iter()
                .filter(|p| p.status == Status::Irreducible)
                .min_by(|a, b| self.pair_key((a.elem, a.var, &a.product), (b.elem, b.var, &b.product)));
            let Some(best) = best else { break };
            let new = best.product.clone();
            let (grown, own) = self.insert(new)?;
            let k = self.elems.len() - 1;
            let mult_new = self.multiplicative(k);
            for idx in 0..pairs.len() {
                match pairs[idx].status {
                    Status::Irreducible => {
                        if self.elems[k].divides_within(&pairs[idx].product, mult_new) {
                            pairs[idx].status = Status::Reducible(k);
                        }
                    }
                    Status::Reducible(j) if !grown[j].is_empty() => {
                        let product = pairs[idx].product.clone();
                        pairs[idx].status = match self.find_divisor(&product)? {
                            Some(d) => Status::Reducible(d),
                            None => Status::Irreducible,
                        };
                    }
                    Status::Reducible(_) => {}
                }
            }
            for (i, vars) in grown.iter().enumerate() {
                for x in vars.iter() {
                    self.push_pair(&mut pairs, i, x)?;
                }
            }
            for x in own.iter() {
                self.push_pair(&mut pairs, k, x)?;
            }
        }
        self.stats.prolongations_checked = pairs.len();
        Ok(())
    }

    fn push_pair(&mut self, pairs: &mut Vec<Pair>, elem: usize, var: usize) -> Result<(), CompletionError> {
        let product = self.prolong(elem, var)?;
        let status = match self.find_divisor(&product)? {
            Some(d) => Status::Reducible(d),
            None => Status::Irreducible,
        };
        pairs.push(Pair {
            elem,
            var,
            product,
            status,
        });
        Ok(())
    }

    fn run_fast(&mut self) -> Result<(), CompletionError> {
        let mut pending: Vec<(usize, usize, Monomial)> = Vec::new();
        for i in 0..self.elems.len() {
            for x in self.nm[i].iter() {
                pending.push((i, x, self.prolong(i, x)?));
            }
        }
        while let Some(pos) = (0..pending.len()).min_by(|&a, &b| {
            let (pa, pb) = (&pending[a], &pending[b]);
            self.pair_key((pa.0, pa.1, &pa.2), (pb.0, pb.1, &pb.2))
        }) {
            let (_, _, product) = pending.swap_remove(pos);
            self.stats.prolongations_checked += 1;
            if self.find_divisor(&product)?.is_some() {
                continue;
            }
            let (grown, own) = self.insert(product.clone())?;
            let k = self.elems.len() - 1;
            let fresh = grown
                .iter()
                .enumerate()
                .flat_map(|(i, vars)| vars.iter().map(move |x| (i, x)))
                .chain(own.iter().map(|x| (k, x)))
                .collect::<Vec<_>>();
            for (i, x) in fresh {
                pending.push((i, x, self.prolong(i, x)?));
            }
        }
        Ok(())
    }
}

fn multiplicative_sets(set: &[Monomial], kind: Division) -> Vec<VarSet> {
    divisions::separations(kind, set)
        .into_iter()
        .map(|s| s.multiplicative)
        .collect()
}

fn in_involutive_cone(set: &[Monomial], mult: &[VarSet], w: &Monomial) -> bool {
    set.iter().zip(mult).any(|(u, m)| u.divides_within(w, *m))
}

/// Every nonmultiplicative prolongation has an involutive divisor in `set`.
pub fn is_locally_involutive(set: &[Monomial], kind: Division) -> bool {
    let seps = divisions::separations(kind, set);
    let mult: Vec<VarSet> = seps.iter().map(|s| s.multiplicative).collect();
    set.iter().zip(&seps).all(|(u, s)| {
        s.nonmultiplicative.iter().all(|x| match u.mul_var(x) {
            Ok(p) => in_involutive_cone(set, &mult, &p),
            Err(_) => false,
        })
    })
}

/// Enumerates every monomial of total degree at most `degree_bound` and
/// checks that each one in the cone of `set` lies in its involutive cone.
pub fn is_involutive_bruteforce(set: &[Monomial], kind: Division, degree_bound: u32) -> bool {
    let Some(first) = set.first() else { return true };
    let n = first.nvars();
    let mult = multiplicative_sets(set, kind);
    let mut exps = vec![0u32; n];
    loop {
        let w = Monomial::from_exponents(exps.clone());
        if set.iter().any(|u| u.divides(&w)) && !in_involutive_cone(set, &mult, &w) {
            return false;
        }
        if !next_exponents(&mut exps, degree_bound) {
            return true;
        }
    }
}

// Odometer over exponent vectors with total degree <= bound.
fn next_exponents(exps: &mut [u32], bound: u32) -> bool {
    for i in (0..exps.len()).rev() {
        exps[i] += 1;
        if exps.iter().sum::<u32>() <= bound {
            return true;
        }
        exps[i] = 0;
    }
    false
}

/// No two distinct elements have intersecting involutive cones.
pub fn is_autoreduced_involutively(set: &[Monomial], kind: Division) -> bool {
    let mult = multiplicative_sets(set, kind);
    for i in 0..set.len() {
        for j in 0..set.len() {
            if i != j && set[i].divides_within(&set[j], mult[i]) {
                return false;
            }
        }
    }
    true
}

/// Every nonmultiplicative prolongation `u*x` with `u*x <= w` under
/// `completion_order` lies in the involutive cone of `set`. Vacuously true
/// when every prolongation is above `w`.
pub fn completeness_bound_check(
    set: &[Monomial],
    kind: Division,
    completion_order: MonomialOrdering,
    w: &Monomial,
) -> bool {
    first_incomplete_prolongation(set, kind, completion_order, w).is_none()
}

/// The lowest nonmultiplicative prolongation `<= w` outside the involutive
/// cone, if any.
pub fn first_incomplete_prolongation(
    set: &[Monomial],
    kind: Division,
    completion_order: MonomialOrdering,
    w: &Monomial,
) -> Option<Monomial> {
    lowest_irreducible_where(set, kind, completion_order, |p| {
        completion_order.compare(p, w) != Ordering::Greater
    })
}

/// The lowest nonmultiplicative prolongation of `set` without an involutive
/// divisor.
pub fn lowest_irreducible_prolongation(
    set: &[Monomial],
    kind: Division,
    completion_order: MonomialOrdering,
) -> Option<Monomial> {
    lowest_irreducible_where(set, kind, completion_order, |_| true)
}

fn lowest_irreducible_where(
    set: &[Monomial],
    kind: Division,
    order: MonomialOrdering,
    keep: impl Fn(&Monomial) -> bool,
) -> Option<Monomial> {
    let seps = divisions::separations(kind, set);
    let mult: Vec<VarSet> = seps.iter().map(|s| s.multiplicative).collect();
    set.iter()
        .zip(&seps)
        .flat_map(|(u, s)| s.nonmultiplicative.iter().filter_map(move |x| u.mul_var(x).ok()))
        .filter(|p| keep(p) && !in_involutive_cone(set, &mult, p))
        .min_by(|a, b| order.compare(a, b))
}

/// Minimal generating set of the monomial ideal (conventional
/// autoreduction), in input order.
pub fn minimal_generators(set: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for (i, u) in set.iter().enumerate() {
        let redundant = set
            .iter()
            .enumerate()
            .any(|(j, v)| j != i && v.divides(u) && (v != u || j < i));
        if !redundant {
            out.push(u.clone());
        }
    }
    out
}
