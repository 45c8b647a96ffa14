//! Minimal involutive bases of polynomial ideals.
//!
//! The algorithm keeps two lists of triples `(g, u, P)`: `T`, whose
//! polynomials form the current basis `G`, and the queue `Q`. Each triple
//! remembers the leading monomial `u` of the polynomial it descends from and
//! the nonmultiplicative variables `P` whose prolongations were already
//! examined. The upper loop drains `Q` in increasing main order; the lower
//! loop prolongs elements of `T` in increasing completion order as long as
//! the prolongations stay below everything still queued.

use std::fmt;

use log::warn;
use thiserror::Error;

use crate::divisions::{self, pairwise_update, Division};
use crate::error::{Error, Limit};
use crate::mono_completion::CompletionLimits;
use crate::monomials::{Monomial, MonomialOrdering, VarSet};
use crate::polynomials::{self, nf_involutive_with, Polynomial, Term};

/// `(g, u, P)`: polynomial, ancestor monomial and processed variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple {
    pub poly: Polynomial,
    pub ancestor: Monomial,
    pub processed: VarSet,
    seq: usize,
}

impl Triple {
    pub fn new(poly: Polynomial, ancestor: Monomial, processed: VarSet) -> Self {
        Triple {
            poly,
            ancestor,
            processed,
            seq: 0,
        }
    }

    pub fn lm(&self) -> &Monomial {
        self.poly.lm()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisOptions {
    /// Conventionally autoreduce the input first.
    pub autoreduce_input: bool,
    /// Discard prolongations with the involutive chain criterion.
    pub use_criterion: bool,
    /// Compare every incremental separation update with a full rescan.
    pub cross_check: bool,
}

impl Default for BasisOptions {
    fn default() -> Self {
        BasisOptions {
            autoreduce_input: true,
            use_criterion: true,
            cross_check: cfg!(debug_assertions),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BasisStats {
    pub prolongations_examined: usize,
    pub criterion_hits: usize,
    pub normal_forms: usize,
    pub displacements: usize,
    pub final_size: usize,
}

impl fmt::Display for BasisStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "prolongations_examined={}", self.prolongations_examined)?;
        writeln!(f, "criterion_hits={}", self.criterion_hits)?;
        writeln!(f, "normal_forms={}", self.normal_forms)?;
        writeln!(f, "displacements={}", self.displacements)?;
        write!(f, "final_size={}", self.final_size)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasisError {
    /// A guard tripped; `partial` is the current `G`.
    #[error("involutive basis computation stopped: {limit}")]
    LimitExceeded {
        limit: Limit,
        partial: Vec<Polynomial>,
        stats: BasisStats,
    },
    #[error(transparent)]
    Kernel(#[from] Error),
}

/// The involutive chain criterion: some `(f, v, D)` in `triples` has
/// `lm(f) |_L lm_g` and `lcm(u, v)` strictly below `lm_g` in the completion
/// ordering. Separations are taken on the leading monomials of `triples`.
pub fn criterion(
    lm_g: &Monomial,
    ancestor: &Monomial,
    triples: &[Triple],
    division: Division,
    completion_order: MonomialOrdering,
) -> bool {
    let lms: Vec<Monomial> = triples.iter().map(|t| t.lm().clone()).collect();
    let mult: Vec<VarSet> = divisions::separations(division, &lms)
        .into_iter()
        .map(|s| s.multiplicative)
        .collect();
    criterion_with(lm_g, ancestor, triples, &mult, completion_order)
}

fn criterion_with(
    lm_g: &Monomial,
    ancestor: &Monomial,
    triples: &[Triple],
    mult: &[VarSet],
    completion_order: MonomialOrdering,
) -> bool {
    triples.iter().zip(mult).any(|(t, m)| {
        t.lm().divides_within(lm_g, *m)
            && ancestor
                .lcm(&t.ancestor)
                .is_ok_and(|l| completion_order.less(&l, lm_g))
    })
}

/// Computes the monic minimal involutive basis of the ideal generated by
/// `input`, sorted by leading monomial ascending under `main_order`.
pub fn minimal_involutive_basis(
    input: &[Polynomial],
    division: Division,
    main_order: MonomialOrdering,
    completion_order: MonomialOrdering,
    limits: CompletionLimits,
    options: BasisOptions,
) -> Result<(Vec<Polynomial>, BasisStats), BasisError> {
    if input.is_empty() {
        return Err(Error::EmptyInput.into());
    }
    let nvars = input[0].nvars();
    let mut generators = Vec::with_capacity(input.len());
    for f in input {
        if f.nvars() != nvars {
            return Err(Error::ContextMismatch {
                left: nvars,
                right: f.nvars(),
            }
            .into());
        }
        if f.is_zero() {
            return Err(Error::ZeroPolynomial.into());
        }
        generators.push(f.with_order(main_order).monic());
    }
    if division == Division::Pommaret && !main_order.is_degree_compatible() {
        warn!("pommaret division with a non degree-compatible main ordering may not terminate");
    }
    if options.autoreduce_input {
        generators = polynomials::autoreduce(&generators);
    }
    let mut run = Run {
        division,
        main: main_order,
        completion: completion_order,
        limits,
        options,
        t: Vec::new(),
        nm: Vec::new(),
        q: Vec::new(),
        seq: 0,
        iterations: 0,
        stats: BasisStats::default(),
    };
    run.execute(generators)?;
    Ok(run.finish())
}

struct Run {
    division: Division,
    main: MonomialOrdering,
    completion: MonomialOrdering,
    limits: CompletionLimits,
    options: BasisOptions,
    t: Vec<Triple>,
    // nonmultiplicative variables of T's leading monomials w.r.t. lm(T)
    nm: Vec<VarSet>,
    q: Vec<Triple>,
    seq: usize,
    iterations: usize,
    stats: BasisStats,
}

impl Run {
    fn nvars(&self) -> usize {
        self.t[0].poly.nvars()
    }

    fn mult(&self) -> Vec<VarSet> {
        let n = self.nvars();
        self.nm.iter().map(|s| s.complement(n)).collect()
    }

    fn current_basis(&self) -> Vec<Polynomial> {
        let mut g: Vec<Polynomial> = self.t.iter().map(|t| t.poly.clone()).collect();
        polynomials::sort_by_lm(&mut g);
        g
    }

    fn limit(&self, limit: Limit) -> BasisError {
        let mut stats = self.stats;
        stats.final_size = self.t.len();
        BasisError::LimitExceeded {
            limit,
            partial: self.current_basis(),
            stats,
        }
    }

    fn tick(&mut self) -> Result<(), BasisError> {
        self.iterations += 1;
        if self.iterations > self.limits.max_iterations {
            return Err(self.limit(Limit::Iterations(self.limits.max_iterations)));
        }
        Ok(())
    }

    fn next_seq(&mut self) -> usize {
        self.seq += 1;
        self.seq
    }

    fn cross_check(&self) {
        if self.options.cross_check {
            let lms: Vec<Monomial> = self.t.iter().map(|t| t.lm().clone()).collect();
            let rescan: Vec<VarSet> = divisions::separations(self.division, &lms)
                .into_iter()
                .map(|s| s.nonmultiplicative)
                .collect();
            assert_eq!(rescan, self.nm, "incremental separations diverged from full rescan");
        }
    }

    fn push_t(&mut self, triple: Triple) {
        let lm = triple.lm().clone();
        for (t, nm) in self.t.iter().zip(self.nm.iter_mut()) {
            *nm = pairwise_update(self.division, t.lm(), *nm, &lm);
        }
        let own = self
            .t
            .iter()
            .fold(pairwise_update(self.division, &lm, VarSet::EMPTY, &lm), |acc, t| {
                pairwise_update(self.division, &lm, acc, t.lm())
            });
        self.t.push(triple);
        self.nm.push(own);
        self.cross_check();
    }

    // Separations only gain multiplicative variables when elements leave,
    // so rebuild the survivors from pairwise contributions.
    fn refresh_after_removal(&mut self) {
        let lms: Vec<Monomial> = self.t.iter().map(|t| t.lm().clone()).collect();
        self.nm = divisions::separations_pairwise(self.division, &lms)
            .into_iter()
            .map(|s| s.nonmultiplicative)
            .collect();
        self.cross_check();
    }

    fn normal_form(&mut self, p: &Polynomial) -> Polynomial {
        self.stats.normal_forms += 1;
        let reducers: Vec<&Polynomial> = self.t.iter().map(|t| &t.poly).collect();
        nf_involutive_with(p, &reducers, &self.mult())
    }

    fn criterion_holds(&mut self, lm_g: &Monomial, ancestor: &Monomial) -> bool {
        if !self.options.use_criterion {
            return false;
        }
        let hit = criterion_with(lm_g, ancestor, &self.t, &self.mult(), self.completion);
        if hit {
            self.stats.criterion_hits += 1;
        }
        hit
    }

    /// Inserts `h` into `T`, then moves every triple whose leading monomial
    /// exceeds `lm(h)` back to `Q` and prunes processed sets.
    fn insert(&mut self, h: Polynomial, ancestor: Monomial, processed: VarSet) -> Result<(), BasisError> {
        if h.lm().degree() > self.limits.max_degree {
            return Err(self.limit(Limit::Degree(self.limits.max_degree)));
        }
        let seq = self.next_seq();
        let lm_h = h.lm().clone();
        self.push_t(Triple {
            poly: h,
            ancestor,
            processed,
            seq,
        });
        let k = self.t.len() - 1;
        self.t[k].processed = self.t[k].processed.intersection(self.nm[k]);

        let mut displaced = false;
        let mut i = 0;
        while i < self.t.len() {
            if self.main.less(&lm_h, self.t[i].lm()) {
                let triple = self.t.remove(i);
                self.nm.remove(i);
                self.q.push(triple);
                self.stats.displacements += 1;
                displaced = true;
            } else {
                i += 1;
            }
        }
        if displaced {
            self.refresh_after_removal();
        }
        for (t, nm) in self.t.iter_mut().zip(&self.nm) {
            t.processed = t.processed.intersection(*nm);
        }
        Ok(())
    }

    fn pop_lowest_queued(&mut self) -> Triple {
        let pos = (0..self.q.len())
            .min_by(|&a, &b| {
                self.main
                    .compare(self.q[a].lm(), self.q[b].lm())
                    .then(self.q[a].seq.cmp(&self.q[b].seq))
            })
            .expect("queue is nonempty");
        self.q.remove(pos)
    }

    /// The lowest unprocessed nonmultiplicative prolongation lying below
    /// every queued leading monomial.
    fn select_prolongation(&self) -> Option<(usize, usize, Monomial)> {
        let queue_min = self
            .q
            .iter()
            .map(Triple::lm)
            .min_by(|a, b| self.main.compare(a, b));
        let mut best: Option<(usize, usize, Monomial)> = None;
        for (i, (t, nm)) in self.t.iter().zip(&self.nm).enumerate() {
            for x in nm.difference(t.processed).iter() {
                let Ok(product) = t.lm().mul_var(x) else { continue };
                if let Some(qm) = queue_min {
                    if !self.main.less(&product, qm) {
                        continue;
                    }
                }
                let better = match &best {
                    None => true,
                    Some((bi, bx, bp)) => self
                        .completion
                        .compare(&product, bp)
                        .then(self.t[i].seq.cmp(&self.t[*bi].seq))
                        .then(x.cmp(bx))
                        .is_lt(),
                };
                if better {
                    best = Some((i, x, product));
                }
            }
        }
        best
    }

    fn execute(&mut self, generators: Vec<Polynomial>) -> Result<(), BasisError> {
        let mut generators = generators;
        let first = (0..generators.len())
            .min_by(|&a, &b| self.main.compare(generators[a].lm(), generators[b].lm()).then(a.cmp(&b)))
            .expect("nonempty input");
        let g = generators.remove(first);
        let seq = self.next_seq();
        self.push_t(Triple {
            ancestor: g.lm().clone(),
            poly: g,
            processed: VarSet::EMPTY,
            seq,
        });
        for f in generators {
            let seq = self.next_seq();
            self.q.push(Triple {
                ancestor: f.lm().clone(),
                poly: f,
                processed: VarSet::EMPTY,
                seq,
            });
        }

        loop {
            // upper loop: drain the queue until something new appears
            let mut found: Option<(Polynomial, Triple)> = None;
            while !self.q.is_empty() && found.is_none() {
                self.tick()?;
                let triple = self.pop_lowest_queued();
                if self.criterion_holds(triple.lm(), &triple.ancestor) {
                    continue;
                }
                let h = self.normal_form(&triple.poly);
                if !h.is_zero() {
                    found = Some((h.monic(), triple));
                }
            }
            if let Some((h, g)) = found {
                if h.lm() == g.lm() {
                    self.insert(h, g.ancestor, g.processed)?;
                } else {
                    let lm = h.lm().clone();
                    self.insert(h, lm, VarSet::EMPTY)?;
                }
            }

            // lower loop: prolongations below everything still queued
            while let Some((i, x, product)) = self.select_prolongation() {
                self.tick()?;
                self.stats.prolongations_examined += 1;
                self.t[i].processed.insert(x);
                let ancestor = self.t[i].ancestor.clone();
                if self.criterion_holds(&product, &ancestor) {
                    continue;
                }
                let prolonged = self.t[i].poly.mul_var(x)?;
                let h = self.normal_form(&prolonged);
                if h.is_zero() {
                    continue;
                }
                let h = h.monic();
                let ancestor = if *h.lm() == product { ancestor } else { h.lm().clone() };
                self.insert(h, ancestor, VarSet::EMPTY)?;
            }

            if self.q.is_empty() {
                return Ok(());
            }
        }
    }

    fn finish(self) -> (Vec<Polynomial>, BasisStats) {
        let mut stats = self.stats;
        stats.final_size = self.t.len();
        let basis = self.current_basis();
        (reduce_tails(&basis, self.division), stats)
    }
}

/// Involutively reduces every non-leading term against the whole basis.
fn reduce_tails(basis: &[Polynomial], division: Division) -> Vec<Polynomial> {
    let lms: Vec<Monomial> = basis.iter().map(|g| g.lm().clone()).collect();
    let mult: Vec<VarSet> = divisions::separations(division, &lms)
        .into_iter()
        .map(|s| s.multiplicative)
        .collect();
    let reducers: Vec<&Polynomial> = basis.iter().collect();
    basis
        .iter()
        .map(|g| {
            let lead = g.leading_term().expect("basis elements are nonzero").clone();
            let tail = Polynomial::from_terms(
                g.nvars(),
                g.order(),
                g.terms()[1..].iter().map(|t| (t.coeff.clone(), t.monomial.clone())),
            )
            .expect("same context");
            let reduced = nf_involutive_with(&tail, &reducers, &mult);
            let Term { coeff, monomial } = lead;
            Polynomial::from_terms(
                g.nvars(),
                g.order(),
                std::iter::once((coeff, monomial))
                    .chain(reduced.terms().iter().map(|t| (t.coeff.clone(), t.monomial.clone()))),
            )
            .expect("same context")
        })
        .collect()
}

/// `basis` is involutively autoreduced and every nonmultiplicative
/// prolongation has involutive normal form zero.
pub fn is_involutive_basis(basis: &[Polynomial], division: Division, main_order: MonomialOrdering) -> bool {
    if basis.iter().any(Polynomial::is_zero) {
        return false;
    }
    let basis: Vec<Polynomial> = basis.iter().map(|g| g.with_order(main_order)).collect();
    let lms: Vec<Monomial> = basis.iter().map(|g| g.lm().clone()).collect();
    for (i, u) in lms.iter().enumerate() {
        if lms[..i].contains(u) {
            return false;
        }
    }
    if !crate::mono_completion::is_autoreduced_involutively(&lms, division) {
        return false;
    }
    let seps = divisions::separations(division, &lms);
    let mult: Vec<VarSet> = seps.iter().map(|s| s.multiplicative).collect();
    let in_cone = |m: &Monomial| lms.iter().zip(&mult).any(|(u, s)| u.divides_within(m, *s));
    if basis.iter().any(|g| g.terms()[1..].iter().any(|t| in_cone(&t.monomial))) {
        return false;
    }
    let reducers: Vec<&Polynomial> = basis.iter().collect();
    basis.iter().zip(&seps).all(|(g, s)| {
        s.nonmultiplicative.iter().all(|x| match g.mul_var(x) {
            Ok(p) => nf_involutive_with(&p, &reducers, &mult).is_zero(),
            Err(_) => false,
        })
    })
}
