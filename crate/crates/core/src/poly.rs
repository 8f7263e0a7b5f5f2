//! Sparse multivariate polynomials over GF(p), bound to one monomial order.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::monomial::{Monomial, MonomialOrder};

/// The ambient ring `GF(p)[X1..Xn]` together with the active order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ring {
    field: PrimeField,
    nvars: usize,
    order: MonomialOrder,
}

impl Ring {
    pub fn new(p: u64, nvars: usize, order: MonomialOrder) -> Result<Self> {
        Ok(Ring {
            field: PrimeField::new(p)?,
            nvars,
            order,
        })
    }

    pub fn with_field(field: PrimeField, nvars: usize, order: MonomialOrder) -> Self {
        Ring { field, nvars, order }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn modulus(&self) -> u32 {
        self.field.modulus()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Same field and variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Ring { order, ..*self }
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: *self,
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        self.term(c, Monomial::one(self.nvars))
    }

    /// `X_{var+1}` (zero-based index).
    pub fn var(&self, var: usize) -> Polynomial {
        self.term(1, Monomial::var_pow(self.nvars, var, 1))
    }

    pub fn term(&self, c: i64, mono: Monomial) -> Polynomial {
        assert_eq!(mono.nvars(), self.nvars, "monomial length does not match the ring");
        let coeff = self.field.reduce(c);
        if coeff == 0 {
            return self.zero();
        }
        Polynomial {
            ring: *self,
            terms: vec![Term { coeff, mono }],
        }
    }

    /// Builds a normalized polynomial from raw `(coefficient, monomial)` pairs:
    /// duplicates merged, zeros dropped, terms sorted strictly descending.
    pub fn polynomial<I>(&self, raw: I) -> Result<Polynomial>
    where
        I: IntoIterator<Item = (i64, Monomial)>,
    {
        let mut terms = Vec::new();
        for (c, mono) in raw {
            if mono.nvars() != self.nvars {
                return Err(Error::LengthMismatch(mono.nvars(), self.nvars));
            }
            terms.push(Term {
                coeff: self.field.reduce(c),
                mono,
            });
        }
        Ok(Polynomial::from_unsorted(*self, terms))
    }
}

/// A nonzero coefficient (a residue in `[1, p)`) times a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: u32,
    pub mono: Monomial,
}

/// `f = sum c_i X^a_i` with terms strictly descending under the ring's order.
/// The zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Polynomial {
    pub(crate) fn from_unsorted(ring: Ring, mut terms: Vec<Term>) -> Polynomial {
        let order = ring.order;
        terms.sort_by(|a, b| order.compare(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = ring.field.add(last.coeff, t.coeff);
                }
                _ => {
                    if out.last().is_some_and(|l| l.coeff == 0) {
                        out.pop();
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|l| l.coeff == 0) {
            out.pop();
        }
        Polynomial { ring, terms: out }
    }

    /// Re-sorts under `order`. Orders are never switched implicitly.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.ring.order {
            return self.clone();
        }
        Polynomial::from_unsorted(self.ring.with_order(order), self.terms.clone())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order
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

    /// True iff this is exactly the constant `1`.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].coeff == 1 && self.terms[0].mono.is_one()
    }

    pub fn leading_term(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        Ok(&self.leading_term()?.mono)
    }

    pub fn leading_coefficient(&self) -> Result<FieldElement> {
        Ok(self.ring.field.element(i64::from(self.leading_term()?.coeff)))
    }

    /// `(lt, lm, lc)` in one call.
    pub fn leading_data(&self) -> Result<(Term, Monomial, FieldElement)> {
        let lt = self.leading_term()?.clone();
        let lc = self.ring.field.element(i64::from(lt.coeff));
        Ok((lt.clone(), lt.mono, lc))
    }

    /// Largest total degree among the terms; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// `deg(f) - deg(lm(f))`.
    pub fn ecart(&self) -> Result<u32> {
        let lead = self.leading_term()?.mono.degree();
        Ok(self.degree().unwrap_or(0) - lead)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    /// Merges two sorted term lists; with `negate`, subtracts `other`.
    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let k = self.ring.field;
        let rhs = other.terms.iter().map(|t| Term {
            coeff: if negate { k.neg(t.coeff) } else { t.coeff },
            mono: t.mono.clone(),
        });
        let terms = merge_terms(
            self.ring,
            self.terms.iter().cloned(),
            rhs,
            self.terms.len() + other.terms.len(),
        );
        Polynomial { ring: self.ring, terms }
    }

    /// `self -= c * X^mono * g` in place, reusing the existing terms.
    pub(crate) fn sub_mul_term_assign(&mut self, coeff: u32, mono: &Monomial, g: &Polynomial) {
        let k = self.ring.field;
        let neg = k.neg(coeff % k.modulus());
        if neg == 0 {
            return;
        }
        let old = std::mem::take(&mut self.terms);
        let cap = old.len() + g.terms.len();
        let rhs = g.terms.iter().map(|t| Term {
            coeff: k.mul(t.coeff, neg),
            mono: t.mono.mul(mono),
        });
        self.terms = merge_terms(self.ring, old.into_iter(), rhs, cap);
    }

    /// Like [`Self::sub_mul_term_assign`] when the leading terms are known to
    /// cancel: both are dropped without comparing them.
    pub(crate) fn cancel_leading(&mut self, coeff: u32, mono: &Monomial, g: &Polynomial) {
        let k = self.ring.field;
        let neg = k.neg(coeff % k.modulus());
        let old = std::mem::take(&mut self.terms);
        let cap = old.len() + g.terms.len();
        let rhs = g.terms.iter().skip(1).map(|t| Term {
            coeff: k.mul(t.coeff, neg),
            mono: t.mono.mul(mono),
        });
        self.terms = merge_terms(self.ring, old.into_iter().skip(1), rhs, cap);
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        let k = self.ring.field;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for s in &self.terms {
            for t in &other.terms {
                raw.push(Term {
                    coeff: k.mul(s.coeff, t.coeff),
                    mono: s.mono.mul(&t.mono),
                });
            }
        }
        Polynomial::from_unsorted(self.ring, raw)
    }

    pub(crate) fn drop_leading(&mut self) {
        if !self.terms.is_empty() {
            self.terms.remove(0);
        }
    }

    /// `c * X^mono * self`. Multiplying by a monomial preserves the order of
    /// terms, so no re-sort is needed.
    pub fn mul_term(&self, coeff: u32, mono: &Monomial) -> Polynomial {
        let k = self.ring.field;
        let coeff = coeff % k.modulus();
        if coeff == 0 {
            return self.ring.zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: k.mul(t.coeff, coeff),
                mono: t.mono.mul(mono),
            })
            .collect();
        Polynomial { ring: self.ring, terms }
    }

    /// `self - c * X^mono * g`, merged in one pass.
    pub(crate) fn sub_mul_term(&self, coeff: u32, mono: &Monomial, g: &Polynomial) -> Polynomial {
        self.merge(&g.mul_term(coeff, mono), true)
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Polynomial> {
        if c.modulus() != self.ring.modulus() {
            return Err(Error::ModulusMismatch(c.modulus(), self.ring.modulus()));
        }
        Ok(self.mul_term(c.value(), &Monomial::one(self.ring.nvars)))
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) if t.coeff == 1 => self.clone(),
            Some(t) => {
                let inv = self.ring.field.inv(t.coeff).expect("terms have nonzero coefficients");
                self.mul_term(inv, &Monomial::one(self.ring.nvars))
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.product(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base);
            }
        }
        acc
    }

    /// Substitutes `X_i -> X_i + shift` for every variable.
    pub fn shift_variables(&self, shift: i64) -> Polynomial {
        let ring = self.ring;
        let shifted: Vec<Polynomial> = (0..ring.nvars)
            .map(|i| ring.var(i).merge(&ring.constant(shift), false))
            .collect();
        let mut acc = ring.zero();
        for t in &self.terms {
            let mut img = ring.term(i64::from(t.coeff), Monomial::one(ring.nvars));
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e > 0 {
                    img = img.product(&shifted[i].pow(e));
                }
            }
            acc = acc.merge(&img, false);
        }
        acc
    }

    /// Evaluates at a point of `GF(p)^n`.
    pub fn evaluate(&self, point: &[u32]) -> FieldElement {
        let k = self.ring.field;
        let mut acc = 0u32;
        for t in &self.terms {
            let mut v = t.coeff;
            for (x, &e) in point.iter().zip(t.mono.exponents()) {
                for _ in 0..e {
                    v = k.mul(v, *x % k.modulus());
                }
            }
            acc = k.add(acc, v);
        }
        k.element(i64::from(acc))
    }

    /// `red(f, g) = f - q g` with `q = lt(f) / lt(g)`.
    pub fn reduce_step(&self, g: &Polynomial) -> Result<Polynomial> {
        self.check_ring(g)?;
        let lf = self.leading_term()?;
        let lg = g.leading_term()?;
        let q = lf.mono.quotient(&lg.mono)?;
        let k = self.ring.field;
        let c = k.mul(lf.coeff, k.inv(lg.coeff)?);
        Ok(self.sub_mul_term(c, &q, g))
    }

    /// `(X^g / lt(f)) f - (X^g / lt(g)) g` with `X^g = lcm(lm f, lm g)`.
    pub fn s_polynomial(&self, g: &Polynomial) -> Result<Polynomial> {
        self.check_ring(g)?;
        let lf = self.leading_term()?;
        let lg = g.leading_term()?;
        let lcm = lf.mono.lcm(&lg.mono);
        let k = self.ring.field;
        let left = self.mul_term(k.inv(lf.coeff)?, &lcm.quotient(&lf.mono)?);
        Ok(left.sub_mul_term(k.inv(lg.coeff)?, &lcm.quotient(&lg.mono)?, g))
    }
}

pub fn reduce_step(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.reduce_step(g)
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.s_polynomial(g)
}

// Operator forms panic when the rings differ; the checked_* methods report it.

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch in addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.ring.zero().merge(self, true)
    }
}

fn merge_terms(ring: Ring, a: impl Iterator<Item = Term>, b: impl Iterator<Item = Term>, capacity: usize) -> Vec<Term> {
    let k = ring.field;
    let order = ring.order;
    let mut out = Vec::with_capacity(capacity);
    let mut a = a.peekable();
    let mut b = b.peekable();
    loop {
        let step = match (a.peek(), b.peek()) {
            (Some(x), Some(y)) => order.compare(&x.mono, &y.mono),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => break,
        };
        match step {
            Ordering::Greater => out.extend(a.next()),
            Ordering::Less => out.extend(b.next()),
            Ordering::Equal => {
                let (mut x, y) = (a.next().unwrap(), b.next().unwrap());
                x.coeff = k.add(x.coeff, y.coeff);
                if x.coeff != 0 {
                    out.push(x);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn x1(ring: &Ring) -> Polynomial {
        ring.var(0)
    }

    #[test]
    fn normalize_merges_and_drops() {
        let r = Ring::new(3, 6, NegDegLex).unwrap();
        let x1 = mono(&[1, 0, 0, 0, 0, 0]);
        assert!(r.polynomial([(1, x1.clone()), (2, x1.clone())]).unwrap().is_zero());
        let f = r.polynomial([(2, mono(&[0, 0, 0, 2, 0, 2])), (1, x1.clone())]).unwrap();
        assert_eq!(f.terms()[0].mono, x1);
        assert_eq!(f.terms()[1].coeff, 2);
        assert!(r.polynomial(Vec::new()).unwrap().is_zero());
        assert_eq!(r.polynomial([(1, mono(&[1]))]), Err(Error::LengthMismatch(1, 6)));
    }

    #[test]
    fn arithmetic() {
        let r = Ring::new(2, 1, Lex).unwrap();
        let x = x1(&r);
        let f = &x + &r.one();
        assert_eq!(&f * &f, &x.pow(2) + &r.one());
        assert!((&f - &f).is_zero());
        let other = Ring::new(3, 1, Lex).unwrap().one();
        assert_eq!(f.checked_add(&other), Err(Error::RingMismatch));
        assert_eq!(f.checked_mul(&f.with_order(DegLex)), Err(Error::RingMismatch));
    }

    #[test]
    fn leading_data_and_ecart() {
        let r = Ring::new(3, 1, NegDegLex).unwrap();
        let x = x1(&r);
        let g = &x - &x.pow(2);
        let (lt, lm, lc) = g.leading_data().unwrap();
        assert_eq!(lm, mono(&[1]));
        assert_eq!(lt.coeff, 1);
        assert_eq!(lc.value(), 1);
        assert_eq!(g.ecart().unwrap(), 1);
        assert_eq!(x.pow(4).ecart().unwrap(), 0);
        assert_eq!(r.zero().leading_data(), Err(Error::ZeroPolynomial));
        assert_eq!(r.zero().ecart(), Err(Error::ZeroPolynomial));

        let r = Ring::new(3, 4, Lex).unwrap();
        let f = &r.var(3).pow(3) - &r.one();
        assert_eq!(f.leading_monomial().unwrap(), &mono(&[0, 0, 0, 3]));
    }

    #[test]
    fn reduction_steps() {
        let r = Ring::new(3, 1, NegDegLex).unwrap();
        let x = x1(&r);
        let g = &x - &x.pow(2);
        assert_eq!(x.reduce_step(&g).unwrap(), x.pow(2));
        assert!(x.pow(2).reduce_step(&x).unwrap().is_zero());
        assert!(g.reduce_step(&g).unwrap().is_zero());
        assert_eq!(x.reduce_step(&x.pow(2)), Err(Error::NotDivisible));
        assert_eq!(r.zero().reduce_step(&x), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn s_polynomials() {
        let r = Ring::new(3, 2, NegDegLex).unwrap();
        let (a, b) = (r.var(0).pow(3), r.var(1).pow(3));
        assert!(a.s_polynomial(&b).unwrap().is_zero());
        let f = &r.var(0) + &r.var(1).pow(2);
        assert!(f.s_polynomial(&f).unwrap().is_zero());
        assert_eq!(f.s_polynomial(&r.zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn shift_variables_binomial() {
        let r = Ring::new(3, 1, NegDegLex).unwrap();
        let x = x1(&r);
        // (X+1)^3 + 2 = X^3 over GF(3)
        let f = &x.pow(3).shift_variables(1) + &r.constant(2);
        assert_eq!(f, x.pow(3));
    }

    #[test]
    fn with_order_round_trip() {
        let r = Ring::new(5, 3, Lex).unwrap();
        let f = r
            .polynomial([(1, mono(&[2, 0, 0])), (3, mono(&[0, 1, 1])), (4, mono(&[0, 0, 0]))])
            .unwrap();
        let g = f.with_order(NegDegLex);
        assert_eq!(g.leading_monomial().unwrap(), &Monomial::one(3));
        assert_eq!(g.with_order(Lex), f);
    }
}
