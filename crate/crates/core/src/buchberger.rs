//! Groebner bases under global orders.

use crate::division::{self, DivisionEvent};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};

/// Knobs shared by the Buchberger and Mora completion loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompletionOptions {
    /// Skip pairs whose leading monomials are coprime.
    pub product_criterion: bool,
}

impl Default for CompletionOptions {
    fn default() -> Self {
        CompletionOptions {
            product_criterion: true,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CompletionStats {
    pub pairs_considered: usize,
    pub pairs_skipped: usize,
    pub zero_reductions: usize,
    pub basis_additions: usize,
}

/// What happened to one critical pair during completion. Indices refer to
/// the working basis, generators first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairEvent {
    Skipped {
        i: usize,
        j: usize,
    },
    Zero {
        i: usize,
        j: usize,
    },
    Added {
        i: usize,
        j: usize,
        index: usize,
        poly: Polynomial,
    },
}

/// True iff `lcm(lm f, lm g) = lm f * lm g`. Such pairs reduce to zero and can
/// be skipped in both Groebner and standard-basis completion.
pub fn product_criterion(f: &Polynomial, g: &Polynomial) -> bool {
    match (f.leading_monomial(), g.leading_monomial()) {
        (Ok(a), Ok(b)) => a.is_coprime(b),
        _ => false,
    }
}

/// Critical pairs, popped by the normal strategy: smallest lcm under the
/// active order first, ties to the lexicographically smallest `(i, j)`.
#[derive(Debug, Default)]
pub(crate) struct PairQueue {
    pairs: Vec<(usize, usize, Monomial)>,
}

impl PairQueue {
    pub(crate) fn push(&mut self, i: usize, j: usize, lcm: Monomial) {
        self.pairs.push((i, j, lcm));
    }

    pub(crate) fn pop(&mut self, ring: &Ring) -> Option<(usize, usize)> {
        let order = ring.order();
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| order.compare(&a.2, &b.2).then((a.0, a.1).cmp(&(b.0, b.1))))
            .map(|(idx, _)| idx)?;
        let (i, j, _) = self.pairs.swap_remove(best);
        Some((i, j))
    }
}

pub(crate) fn common_ring(polys: &[Polynomial]) -> Result<Option<Ring>> {
    let Some(first) = polys.first() else {
        return Ok(None);
    };
    let ring = *first.ring();
    if polys.iter().any(|g| g.ring() != &ring) {
        return Err(Error::RingMismatch);
    }
    Ok(Some(ring))
}

/// Pair-completion loop. `reduce` maps an S-polynomial and the current basis
/// to a normal form; nonzero results join the basis as monic polynomials.
pub(crate) fn complete<F>(
    gens: &[Polynomial],
    opts: CompletionOptions,
    mut reduce: F,
    mut on_pair: impl FnMut(&PairEvent),
) -> Result<(Vec<Polynomial>, CompletionStats)>
where
    F: FnMut(&Polynomial, &[Polynomial]) -> Result<Polynomial>,
{
    let mut stats = CompletionStats::default();
    let Some(ring) = common_ring(gens)? else {
        return Ok((Vec::new(), stats));
    };
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(Polynomial::monic).collect();
    let mut queue = PairQueue::default();
    for j in 0..basis.len() {
        for i in 0..j {
            queue.push(i, j, basis[i].leading_monomial()?.lcm(basis[j].leading_monomial()?));
        }
    }
    while let Some((i, j)) = queue.pop(&ring) {
        stats.pairs_considered += 1;
        if opts.product_criterion && product_criterion(&basis[i], &basis[j]) {
            stats.pairs_skipped += 1;
            on_pair(&PairEvent::Skipped { i, j });
            continue;
        }
        let s = basis[i].s_polynomial(&basis[j])?;
        let h = reduce(&s, &basis)?;
        if h.is_zero() {
            stats.zero_reductions += 1;
            on_pair(&PairEvent::Zero { i, j });
            continue;
        }
        let h = h.monic();
        let new = basis.len();
        for (t, b) in basis.iter().enumerate() {
            queue.push(t, new, b.leading_monomial()?.lcm(h.leading_monomial()?));
        }
        on_pair(&PairEvent::Added {
            i,
            j,
            index: new,
            poly: h.clone(),
        });
        basis.push(h);
        stats.basis_additions += 1;
    }
    Ok((basis, stats))
}

/// Buchberger completion. The result is a monic Groebner basis of the ideal
/// generated by `gens`, containing the (monic) generators; pass it through
/// [`reduce_basis`] for the canonical form.
pub fn groebner(gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    Ok(groebner_with(gens, CompletionOptions::default())?.0)
}

pub fn groebner_with(gens: &[Polynomial], opts: CompletionOptions) -> Result<(Vec<Polynomial>, CompletionStats)> {
    groebner_traced(gens, opts, |_| {}, |_| {})
}

/// [`groebner_with`] reporting every pair and every division step.
pub fn groebner_traced(
    gens: &[Polynomial],
    opts: CompletionOptions,
    on_pair: impl FnMut(&PairEvent),
    mut on_step: impl FnMut(&DivisionEvent),
) -> Result<(Vec<Polynomial>, CompletionStats)> {
    if let Some(ring) = common_ring(gens)? {
        if ring.order().is_local() {
            return Err(Error::LocalOrder { order: ring.order() });
        }
    }
    complete(
        gens,
        opts,
        |s, basis| Ok(division::divide_traced(s, basis, &mut on_step)?.remainder),
        on_pair,
    )
}

/// The reduced Groebner basis with all S-polynomials processed, sorted by
/// descending leading monomial.
pub fn reduced_groebner(gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    reduce_basis(&groebner(gens)?)
}

/// Monic elements whose leading monomials are not divisible by another
/// element's, sorted by descending leading monomial. Among equal leading
/// monomials the first one is kept.
pub fn minimalize(basis: &[Polynomial]) -> Vec<Polynomial> {
    let nonzero: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    let mut kept: Vec<Polynomial> = Vec::new();
    for (idx, g) in nonzero.iter().enumerate() {
        let lm = &g.terms()[0].mono;
        let redundant = nonzero.iter().enumerate().any(|(jdx, h)| {
            let other = &h.terms()[0].mono;
            jdx != idx && other.divides(lm) && (other != lm || jdx < idx)
        });
        if !redundant {
            kept.push(g.monic());
        }
    }
    sort_by_leading(&mut kept);
    kept
}

pub(crate) fn sort_by_leading(basis: &mut [Polynomial]) {
    basis.sort_by(|a, b| match (a.terms().first(), b.terms().first()) {
        (Some(x), Some(y)) => a.order().compare(&y.mono, &x.mono),
        _ => b.len().cmp(&a.len()),
    });
}

/// Turns a Groebner basis into the reduced one: minimal, monic, and with no
/// monomial of any element divisible by another element's leading monomial.
pub fn reduce_basis(basis: &[Polynomial]) -> Result<Vec<Polynomial>> {
    if let Some(ring) = common_ring(basis)? {
        if ring.order().is_local() {
            return Err(Error::LocalOrder { order: ring.order() });
        }
    }
    let minimal = minimalize(basis);
    let mut out = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h.clone())
            .collect();
        out.push(division::remainder(g, &others)?.monic());
    }
    sort_by_leading(&mut out);
    Ok(out)
}

/// Buchberger's criterion: every S-polynomial divides to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> Result<bool> {
    for j in 0..basis.len() {
        for i in 0..j {
            let s = basis[i].s_polynomial(&basis[j])?;
            if !division::remainder(&s, basis)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
