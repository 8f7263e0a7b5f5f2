//! Weak normal forms and standard bases under local orders.
//!
//! Local orders are not well-founded (`X > X^2 > X^3 > ...`), so plain
//! division can run forever. Mora's algorithm picks the divisor of minimal
//! ecart and, when that divisor is "worse" than the current remainder, keeps
//! the remainder around as a future divisor. The price is a unit `u` with
//! `lt(u) = 1` multiplying the input: `u f = sum a_i f_i + h`.

use crate::buchberger::{self, CompletionOptions, CompletionStats, PairEvent};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring, Term};

/// `unit * f = sum coefficients[i] * divisors[i] + h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakNormalForm {
    pub h: Polynomial,
    pub unit: Polynomial,
    pub coefficients: Vec<Polynomial>,
    pub stats: MoraStats,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MoraStats {
    /// Reduction steps performed.
    pub steps: usize,
    /// How many intermediate remainders were appended to the divisor list.
    pub appends: usize,
    /// Largest size reached by the divisor list.
    pub max_divisors: usize,
}

/// Where a divisor in the working list came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivisorRef {
    /// One of the caller's divisors (zero-based).
    Input(usize),
    /// The `n`-th intermediate remainder appended during this run.
    Appended(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoraEvent {
    /// `h` was pushed onto the divisor list because the selected divisor had
    /// larger ecart.
    Appended {
        lead: Term,
        ecart: u32,
        list_len: usize,
    },
    Reduced {
        by: DivisorRef,
        ecart: u32,
        lead: Term,
    },
    /// The selected divisor has a constant leading term, so it is a unit in
    /// the localization and absorbs the whole remainder.
    UnitAbsorbed {
        by: DivisorRef,
    },
}

struct Entry {
    poly: Polynomial,
    ecart: u32,
    inv_lc: u32,
    origin: Origin,
}

enum Origin {
    Input(usize),
    /// Snapshot of the certificate at the time `poly` was the remainder:
    /// `unit * f = sum coeffs * divisors + poly`.
    Appended {
        index: usize,
        unit: Polynomial,
        coeffs: Vec<Polynomial>,
    },
}

fn check_local(ring: &Ring) -> Result<()> {
    if ring.order().is_global() {
        return Err(Error::GlobalOrder { order: ring.order() });
    }
    Ok(())
}

fn check_divisors(ring: &Ring, divisors: &[Polynomial]) -> Result<()> {
    for g in divisors {
        if g.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    Ok(())
}

/// Mora's weak normal form of `f` with respect to `divisors`.
pub fn weak_normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Result<WeakNormalForm> {
    weak_normal_form_traced(f, divisors, |_| {})
}

pub fn weak_normal_form_traced(
    f: &Polynomial,
    divisors: &[Polynomial],
    mut trace: impl FnMut(&MoraEvent),
) -> Result<WeakNormalForm> {
    let ring = *f.ring();
    check_local(&ring)?;
    check_divisors(&ring, divisors)?;
    let k = ring.field();

    let mut list = Vec::with_capacity(divisors.len());
    for (i, g) in divisors.iter().enumerate() {
        list.push(Entry {
            poly: g.clone(),
            ecart: g.ecart()?,
            inv_lc: k.inv(g.terms()[0].coeff)?,
            origin: Origin::Input(i),
        });
    }

    let mut stats = MoraStats {
        max_divisors: list.len(),
        ..MoraStats::default()
    };
    let mut h = f.clone();
    let mut unit = ring.one();
    let mut coeffs = vec![ring.zero(); divisors.len()];
    // quotient terms for input divisors, folded into `coeffs` lazily
    let mut pending: Vec<Vec<Term>> = vec![Vec::new(); divisors.len()];
    let flush = |coeffs: &mut [Polynomial], pending: &mut [Vec<Term>]| {
        for (a, ts) in coeffs.iter_mut().zip(pending.iter_mut()) {
            if !ts.is_empty() {
                *a = &*a + &Polynomial::from_unsorted(ring, std::mem::take(ts));
            }
        }
    };
    let mut appended = 0usize;

    while let Some(lead) = h.terms().first().cloned() {
        // a unit wins outright; otherwise minimal ecart among divisors of
        // lm(h), earliest inserted on ties
        let Some(sel) = list
            .iter()
            .enumerate()
            .filter(|(_, e)| e.poly.terms()[0].mono.divides(&lead.mono))
            .min_by_key(|(idx, e)| (!e.poly.terms()[0].mono.is_one(), e.ecart, *idx))
            .map(|(idx, _)| idx)
        else {
            break;
        };
        let h_ecart = h.ecart()?;
        if list[sel].ecart > h_ecart && !list[sel].poly.terms()[0].mono.is_one() {
            flush(&mut coeffs, &mut pending);
            list.push(Entry {
                poly: h.clone(),
                ecart: h_ecart,
                inv_lc: k.inv(lead.coeff)?,
                origin: Origin::Appended {
                    index: appended,
                    unit: unit.clone(),
                    coeffs: coeffs.clone(),
                },
            });
            appended += 1;
            stats.appends += 1;
            stats.max_divisors = stats.max_divisors.max(list.len());
            trace(&MoraEvent::Appended {
                lead: lead.clone(),
                ecart: h_ecart,
                list_len: list.len(),
            });
        }

        let g = &list[sel];
        if g.poly.terms()[0].mono.is_one() {
            // g' = g / lc(g) has lt 1; multiplying the identity by g' and
            // writing g' h = (h / lc(g)) g leaves remainder zero.
            flush(&mut coeffs, &mut pending);
            let unit_g = g.poly.mul_term(g.inv_lc, &Monomial::one(ring.nvars()));
            let quot = h.mul_term(g.inv_lc, &Monomial::one(ring.nvars()));
            unit = &unit * &unit_g;
            for a in coeffs.iter_mut() {
                *a = &*a * &unit_g;
            }
            let by = match &g.origin {
                Origin::Input(i) => {
                    coeffs[*i] = &coeffs[*i] + &quot;
                    DivisorRef::Input(*i)
                }
                Origin::Appended {
                    index,
                    unit: u_k,
                    coeffs: a_k,
                } => {
                    unit = &unit - &(&quot * u_k);
                    for (a, b) in coeffs.iter_mut().zip(a_k) {
                        *a = &*a - &(&quot * b);
                    }
                    DivisorRef::Appended(*index)
                }
            };
            h = ring.zero();
            stats.steps += 1;
            trace(&MoraEvent::UnitAbsorbed { by });
            break;
        }
        let q = lead.mono.quotient(&g.poly.terms()[0].mono)?;
        let c = k.mul(lead.coeff, g.inv_lc);
        h.cancel_leading(c, &q, &g.poly);
        let by = match &g.origin {
            Origin::Input(i) => {
                pending[*i].push(Term { coeff: c, mono: q });
                DivisorRef::Input(*i)
            }
            Origin::Appended {
                index,
                unit: u_k,
                coeffs: a_k,
            } => {
                // h_k = u_k f - sum a_k f_i, so subtracting c q h_k moves
                // c q u_k into the unit and c q a_k into the coefficients
                flush(&mut coeffs, &mut pending);
                unit.sub_mul_term_assign(c, &q, u_k);
                for (a, b) in coeffs.iter_mut().zip(a_k) {
                    a.sub_mul_term_assign(c, &q, b);
                }
                DivisorRef::Appended(*index)
            }
        };
        stats.steps += 1;
        trace(&MoraEvent::Reduced {
            by,
            ecart: g.ecart,
            lead,
        });
    }

    flush(&mut coeffs, &mut pending);
    Ok(WeakNormalForm {
        h,
        unit,
        coefficients: coeffs,
        stats,
    })
}

impl WeakNormalForm {
    /// Re-multiplies and checks `unit * f - sum a_i f_i - h == 0` and
    /// `lt(unit) == 1`.
    pub fn verify(&self, f: &Polynomial, divisors: &[Polynomial]) -> bool {
        let unit_ok = self
            .unit
            .terms()
            .first()
            .is_some_and(|t| t.coeff == 1 && t.mono.is_one());
        if !unit_ok || self.coefficients.len() != divisors.len() {
            return false;
        }
        let mut rhs = self.h.clone();
        for (a, g) in self.coefficients.iter().zip(divisors) {
            rhs = &rhs + &(a * g);
        }
        (&self.unit * f) == rhs
    }

    /// `h == 0` or `lm(h)` is divisible by no `lm(f_i)`.
    pub fn is_reduced(&self, divisors: &[Polynomial]) -> bool {
        match self.h.terms().first() {
            None => true,
            Some(t) => divisors.iter().all(|g| !g.terms()[0].mono.divides(&t.mono)),
        }
    }
}

/// Outcome of [`naive_local_reduce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NaiveOutcome {
    Finished {
        h: Polynomial,
        steps: usize,
    },
    /// The step budget ran out; `last` is the remainder at that point.
    BudgetExceeded {
        last: Polynomial,
        steps: usize,
    },
}

/// Leading-term reduction under a local order without Mora's bookkeeping:
/// same divisor selection, but remainders are never appended. Can diverge,
/// hence the step budget.
pub fn naive_local_reduce(f: &Polynomial, divisors: &[Polynomial], budget: usize) -> Result<NaiveOutcome> {
    let ring = *f.ring();
    check_local(&ring)?;
    check_divisors(&ring, divisors)?;
    let ecarts: Vec<u32> = divisors.iter().map(Polynomial::ecart).collect::<Result<_>>()?;
    let mut h = f.clone();
    let mut steps = 0;
    while let Some(lead) = h.terms().first() {
        let Some(sel) = (0..divisors.len())
            .filter(|&i| divisors[i].terms()[0].mono.divides(&lead.mono))
            .min_by_key(|&i| (ecarts[i], i))
        else {
            break;
        };
        if steps == budget {
            return Ok(NaiveOutcome::BudgetExceeded { last: h, steps });
        }
        h = h.reduce_step(&divisors[sel])?;
        steps += 1;
    }
    Ok(NaiveOutcome::Finished { h, steps })
}

/// Standard basis of the ideal generated by `gens` in the localization at the
/// origin: pair completion with weak normal forms, then minimalized.
pub fn standard_basis(gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    Ok(standard_basis_with(gens, CompletionOptions::default())?.0)
}

pub fn standard_basis_with(gens: &[Polynomial], opts: CompletionOptions) -> Result<(Vec<Polynomial>, CompletionStats)> {
    standard_basis_traced(gens, opts, |_| {}, |_| {})
}

/// [`standard_basis_with`] reporting every pair and every Mora step.
pub fn standard_basis_traced(
    gens: &[Polynomial],
    opts: CompletionOptions,
    on_pair: impl FnMut(&PairEvent),
    mut on_step: impl FnMut(&MoraEvent),
) -> Result<(Vec<Polynomial>, CompletionStats)> {
    if let Some(ring) = buchberger::common_ring(gens)? {
        check_local(&ring)?;
    }
    let (basis, stats) = buchberger::complete(
        gens,
        opts,
        |s, basis| Ok(weak_normal_form_traced(s, basis, &mut on_step)?.h),
        on_pair,
    )?;
    Ok((buchberger::minimalize(&basis), stats))
}

/// Why a candidate failed [`is_standard_basis`]. Indices are zero-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardBasisFailure {
    /// `NF(spoly(s_i, s_j) | S) != 0`.
    SPolynomial { i: usize, j: usize, nf: Polynomial },
    /// Generator `index` does not reduce to zero modulo the candidate.
    GeneratorNotCovered { index: usize, nf: Polynomial },
    /// Candidate element `index` is not in the ideal of the generators.
    ElementNotInIdeal { index: usize, nf: Polynomial },
}

impl std::fmt::Display for StandardBasisFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StandardBasisFailure::SPolynomial { i, j, nf } => {
                write!(f, "NF(spoly(s{}, s{})) = {nf}", i + 1, j + 1)
            }
            StandardBasisFailure::GeneratorNotCovered { index, nf } => {
                write!(f, "generator {} has nonzero normal form {nf}", index + 1)
            }
            StandardBasisFailure::ElementNotInIdeal { index, nf } => {
                write!(f, "basis element {} not in the ideal: normal form {nf}", index + 1)
            }
        }
    }
}

/// Decides whether `candidate` is a standard basis of the ideal generated by
/// `gens`: every generator reduces to zero modulo `candidate`, every
/// S-polynomial has weak normal form zero, and every candidate element reduces
/// to zero modulo a standard basis computed from `gens`. Checks run in that
/// order; the generator check is cheap and catches a missing element before
/// any S-polynomial work.
pub fn is_standard_basis(candidate: &[Polynomial], gens: &[Polynomial]) -> Result<Option<StandardBasisFailure>> {
    let mut all = candidate.to_vec();
    all.extend_from_slice(gens);
    if let Some(ring) = buchberger::common_ring(&all)? {
        check_local(&ring)?;
    }
    for (index, g) in gens.iter().enumerate() {
        let nf = weak_normal_form(g, candidate)?.h;
        if !nf.is_zero() {
            return Ok(Some(StandardBasisFailure::GeneratorNotCovered { index, nf }));
        }
    }
    for j in 0..candidate.len() {
        for i in 0..j {
            let s = candidate[i].s_polynomial(&candidate[j])?;
            let nf = weak_normal_form(&s, candidate)?.h;
            if !nf.is_zero() {
                return Ok(Some(StandardBasisFailure::SPolynomial { i, j, nf }));
            }
        }
    }
    let reference = standard_basis(gens)?;
    for (index, s) in candidate.iter().enumerate() {
        let nf = weak_normal_form(s, &reference)?.h;
        if !nf.is_zero() {
            return Ok(Some(StandardBasisFailure::ElementNotInIdeal { index, nf }));
        }
    }
    Ok(None)
}

/// Leading monomials of a basis, in basis order.
pub fn leading_monomials(basis: &[Polynomial]) -> Result<Vec<Monomial>> {
    basis.iter().map(|g| g.leading_monomial().cloned()).collect()
}

/// Cosmetic tail reduction for display. Only homogeneous elements (ecart 0)
/// are used as reducers, since reducing a tail term by them stays within one
/// degree and always terminates. Leading terms and the localized ideal are
/// unchanged.
pub fn tail_reduce(basis: &[Polynomial]) -> Result<Vec<Polynomial>> {
    if let Some(ring) = buchberger::common_ring(basis)? {
        check_local(&ring)?;
    }
    let mut out = Vec::with_capacity(basis.len());
    for (i, g) in basis.iter().enumerate() {
        let reducers: Vec<&Polynomial> = basis
            .iter()
            .enumerate()
            .filter(|&(j, r)| j != i && !r.is_zero() && r.ecart() == Ok(0))
            .map(|(_, r)| r)
            .collect();
        let Some(lead) = g.terms().first() else {
            out.push(g.clone());
            continue;
        };
        let mut head = vec![lead.clone()];
        let mut tail = g.clone();
        tail.drop_leading();
        while let Some(t) = tail.terms().first().cloned() {
            match reducers.iter().find(|r| r.terms()[0].mono.divides(&t.mono)) {
                Some(r) => tail = tail.reduce_step(r)?,
                None => {
                    head.push(t);
                    tail.drop_leading();
                }
            }
        }
        out.push(Polynomial::from_unsorted(*g.ring(), head));
    }
    Ok(out)
}
