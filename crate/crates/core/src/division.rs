//! Multivariate division with remainder under a global (well-founded) order.

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Term};

/// `f = sum quotients[i] * divisors[i] + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// One step of the division loop, reported to the trace callback.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DivisionEvent {
    /// The leading term of the running dividend was cancelled by divisor `divisor`.
    Reduced { divisor: usize, term: Term },
    /// No divisor applied; the leading term moved into the remainder.
    ToRemainder { term: Term },
}

/// Divides `f` by the ordered `divisors`; the first divisor whose leading
/// monomial divides the current leading term is used.
pub fn divide(f: &Polynomial, divisors: &[Polynomial]) -> Result<Division> {
    divide_traced(f, divisors, |_| {})
}

pub fn divide_traced(
    f: &Polynomial,
    divisors: &[Polynomial],
    mut trace: impl FnMut(&DivisionEvent),
) -> Result<Division> {
    let ring = *f.ring();
    if ring.order().is_local() {
        return Err(Error::LocalOrder { order: ring.order() });
    }
    for g in divisors {
        if g.ring() != &ring {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    let k = ring.field();
    let inv_lc: Vec<u32> = divisors
        .iter()
        .map(|g| k.inv(g.terms()[0].coeff))
        .collect::<Result<_>>()?;

    let mut quotient_terms: Vec<Vec<Term>> = vec![Vec::new(); divisors.len()];
    let mut remainder = Vec::new();
    let mut p = f.clone();
    while let Some(lead) = p.terms().first().cloned() {
        let hit = divisors.iter().position(|g| g.terms()[0].mono.divides(&lead.mono));
        match hit {
            Some(i) => {
                let g = &divisors[i];
                let q = lead.mono.quotient(&g.terms()[0].mono)?;
                let c = k.mul(lead.coeff, inv_lc[i]);
                p.cancel_leading(c, &q, g);
                quotient_terms[i].push(Term { coeff: c, mono: q });
                trace(&DivisionEvent::Reduced { divisor: i, term: lead });
            }
            None => {
                trace(&DivisionEvent::ToRemainder { term: lead.clone() });
                remainder.push(lead);
                p.drop_leading();
            }
        }
    }
    Ok(Division {
        quotients: quotient_terms
            .into_iter()
            .map(|ts| Polynomial::from_unsorted(ring, ts))
            .collect(),
        remainder: Polynomial::from_unsorted(ring, remainder),
    })
}

/// Remainder of `f` on division by `divisors`.
pub fn remainder(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
    Ok(divide(f, divisors)?.remainder)
}
