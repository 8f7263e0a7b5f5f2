//! Exponent vectors and the semigroup orders on them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};

type Exps = SmallVec<[u32; 8]>;

/// `X^a` stored as its exponent vector, with the total degree cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .expect("monomial degree overflows u32");
        Monomial {
            exps: Exps::from_vec(exps),
            degree,
        }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, n),
            degree: 0,
        }
    }

    /// `X_var^e`, with `var` zero-based.
    pub fn var_pow(n: usize, var: usize, e: u32) -> Self {
        let mut exps: Exps = SmallVec::from_elem(0, n);
        exps[var] = e;
        Monomial { exps, degree: e }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    fn check_len(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::LengthMismatch(self.exps.len(), other.exps.len()));
        }
        Ok(())
    }

    /// Componentwise sum. Panics on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            degree: self.degree.checked_add(other.degree).expect("exponent overflow"),
        }
    }

    /// True iff `self` divides `other`, i.e. componentwise `self <= other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / divisor`; fails unless `divisor` divides `self`.
    pub fn quotient(&self, divisor: &Monomial) -> Result<Monomial> {
        self.check_len(divisor)?;
        if !divisor.divides(self) {
            return Err(Error::NotDivisible);
        }
        Ok(Monomial {
            exps: self.exps.iter().zip(&divisor.exps).map(|(a, b)| a - b).collect(),
            degree: self.degree - divisor.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps: Exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let degree = exps
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .expect("monomial degree overflows u32");
        Monomial { exps, degree }
    }

    /// No variable occurs in both.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Checked form of [`Monomial::divides`].
pub fn mono_divides(a: &Monomial, b: &Monomial) -> Result<bool> {
    a.check_len(b)?;
    Ok(a.divides(b))
}

pub fn mono_quotient(b: &Monomial, a: &Monomial) -> Result<Monomial> {
    b.quotient(a)
}

pub fn mono_lcm(a: &Monomial, b: &Monomial) -> Result<Monomial> {
    a.check_len(b)?;
    Ok(a.lcm(b))
}

/// The four semigroup orders. Variables are ranked `X1 > X2 > ... > Xn`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegLex,
    DegRevLex,
    /// Negative degree lexicographic: lower total degree is larger, ties
    /// broken lexicographically. A local order: `1 > X_i`.
    NegDegLex,
}

impl MonomialOrder {
    pub const ALL: [MonomialOrder; 4] = [
        MonomialOrder::Lex,
        MonomialOrder::DegLex,
        MonomialOrder::DegRevLex,
        MonomialOrder::NegDegLex,
    ];

    pub fn is_local(self) -> bool {
        matches!(self, MonomialOrder::NegDegLex)
    }

    pub fn is_global(self) -> bool {
        !self.is_local()
    }

    /// Compares two monomials of equal length. Panics in debug builds on a
    /// length mismatch; use [`MonomialOrder::try_compare`] at API boundaries.
    #[inline]
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.exps.len(), b.exps.len());
        match self {
            MonomialOrder::Lex => lex(&a.exps, &b.exps),
            MonomialOrder::DegLex => a.degree.cmp(&b.degree).then_with(|| lex(&a.exps, &b.exps)),
            MonomialOrder::DegRevLex => a.degree.cmp(&b.degree).then_with(|| {
                // the last differing exponent decides; smaller exponent wins
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::NegDegLex => b.degree.cmp(&a.degree).then_with(|| lex(&a.exps, &b.exps)),
        }
    }

    pub fn try_compare(self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        a.check_len(b)?;
        Ok(self.compare(a, b))
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::NegDegLex => "negdeglex",
        }
    }
}

#[inline]
fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

pub fn is_local(order: MonomialOrder) -> bool {
    order.is_local()
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        MonomialOrder::ALL
            .into_iter()
            .find(|o| o.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown order '{s}' (expected lex, deglex, degrevlex or negdeglex)"))
    }
}
