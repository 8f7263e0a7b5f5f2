//! Arithmetic in the prime field GF(p).

use std::fmt;

use crate::error::{Error, Result};

/// Ambient prime field. Validated once; every element built from it carries
/// the modulus so mixing fields is caught at the API boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p > u64::from(u32::MAX) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    pub fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(i64::from(self.p)) as u32
    }

    pub fn element(&self, v: i64) -> FieldElement {
        FieldElement {
            value: self.reduce(v),
            modulus: self.p,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    // Raw residue arithmetic used by the polynomial layer. Inputs are assumed
    // to already lie in [0, p).

    #[inline]
    pub(crate) fn add(&self, a: u32, b: u32) -> u32 {
        let s = u64::from(a) + u64::from(b);
        (s % u64::from(self.p)) as u32
    }

    #[inline]
    pub(crate) fn sub(&self, a: u32, b: u32) -> u32 {
        let p = u64::from(self.p);
        ((u64::from(a) + p - u64::from(b)) % p) as u32
    }

    #[inline]
    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        ((u64::from(a) * u64::from(b)) % u64::from(self.p)) as u32
    }

    #[inline]
    pub(crate) fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub(crate) fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero(self.p));
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (i64::from(self.p), i64::from(a));
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.reduce(t0))
    }

    /// `C(m, t) mod p` by Pascal's rule, reducing at every step.
    ///
    /// Returns 0 for `t > m` and 1 for `t == 0`. Arguments in this crate never
    /// exceed `p`, so the triangle stays tiny.
    pub fn binomial(&self, m: i64, t: i64) -> Result<FieldElement> {
        if m < 0 {
            return Err(Error::NegativeArgument(m));
        }
        if t < 0 {
            return Err(Error::NegativeArgument(t));
        }
        if t > m {
            return Ok(self.zero());
        }
        let (m, t) = (m as usize, t as usize);
        let mut row = vec![0u32; t + 1];
        row[0] = 1 % self.p;
        for i in 1..=m {
            for j in (1..=t.min(i)).rev() {
                row[j] = self.add(row[j], row[j - 1]);
            }
        }
        Ok(FieldElement {
            value: row[t],
            modulus: self.p,
        })
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

/// Trial division; moduli used here are at most a few thousand.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `C(m, t) mod p`; see [`PrimeField::binomial`].
pub fn binom_mod_p(m: i64, t: i64, field: &PrimeField) -> Result<FieldElement> {
    field.binomial(m, t)
}

/// A residue in `[0, p)` tagged with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    modulus: u32,
}

impl FieldElement {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn field(&self) -> PrimeField {
        PrimeField { p: self.modulus }
    }

    fn check(&self, other: &FieldElement) -> Result<PrimeField> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(self.field())
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        let k = self.check(other)?;
        Ok(FieldElement {
            value: k.add(self.value, other.value),
            modulus: self.modulus,
        })
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        let k = self.check(other)?;
        Ok(FieldElement {
            value: k.sub(self.value, other.value),
            modulus: self.modulus,
        })
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        let k = self.check(other)?;
        Ok(FieldElement {
            value: k.mul(self.value, other.value),
            modulus: self.modulus,
        })
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            value: self.field().neg(self.value),
            modulus: self.modulus,
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(FieldElement {
            value: self.field().inv(self.value)?,
            modulus: self.modulus,
        })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn small_arith() {
        let f3 = gf(3);
        assert_eq!(f3.element(1).add(&f3.element(2)).unwrap().value(), 0);
        assert_eq!(f3.element(2).mul(&f3.element(2)).unwrap().value(), 1);
        let f5 = gf(5);
        assert_eq!(f5.element(0).sub(&f5.element(1)).unwrap().value(), 4);
    }

    #[test]
    fn inverses() {
        assert_eq!(gf(5).element(2).inv().unwrap().value(), 3);
        assert_eq!(gf(7).element(4).inv().unwrap().value(), 2);
        for p in [2, 3, 11, 101] {
            assert_eq!(gf(p).one().inv().unwrap().value(), 1);
        }
        assert_eq!(gf(5).zero().inv(), Err(Error::DivisionByZero(5)));
    }

    #[test]
    fn inverse_exhaustive() {
        for p in (2..=101).filter(|&p| is_prime(p)) {
            let k = gf(p);
            for a in 1..p as i64 {
                let a = k.element(a);
                assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), k.one());
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for p in [2u64, 3, 5] {
            let k = gf(p);
            let els: Vec<_> = (0..p as i64).map(|v| k.element(v)).collect();
            for a in &els {
                for b in &els {
                    assert_eq!(a.add(b), b.add(a));
                    assert_eq!(a.mul(b), b.mul(a));
                    for c in &els {
                        let lhs = a.add(&b.add(c).unwrap()).unwrap();
                        assert_eq!(lhs, a.add(b).unwrap().add(c).unwrap());
                        let lhs = a.mul(&b.mul(c).unwrap()).unwrap();
                        assert_eq!(lhs, a.mul(b).unwrap().mul(c).unwrap());
                        let lhs = a.mul(&b.add(c).unwrap()).unwrap();
                        let rhs = a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = gf(3).one();
        let b = gf(5).one();
        assert_eq!(a.add(&b), Err(Error::ModulusMismatch(3, 5)));
        assert!(a.mul(&b).is_err());
        assert!(a.sub(&b).is_err());
    }

    #[test]
    fn rejects_composites() {
        for n in [0, 1, 4, 9, 15, 91] {
            assert_eq!(PrimeField::new(n), Err(Error::NotPrime(n)));
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binom_mod_p(3, 1, &gf(3)).unwrap().value(), 0);
        assert_eq!(binom_mod_p(2, 1, &gf(3)).unwrap().value(), 2);
        assert_eq!(binom_mod_p(2, 3, &gf(5)).unwrap().value(), 0);
        assert_eq!(binom_mod_p(4, 0, &gf(5)).unwrap().value(), 1);
        assert_eq!(binom_mod_p(-1, 0, &gf(5)), Err(Error::NegativeArgument(-1)));
        assert_eq!(binom_mod_p(2, -3, &gf(5)), Err(Error::NegativeArgument(-3)));
        // binom(p, j) vanishes for 0 < j < p
        for p in [2u64, 3, 5, 7] {
            for j in 1..p as i64 {
                assert!(binom_mod_p(p as i64, j, &gf(p)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn binomial_row_sums() {
        for p in [2u64, 3, 5, 7, 11] {
            let k = gf(p);
            for m in 0..=p as i64 {
                let mut sum = k.zero();
                for t in 0..=m {
                    sum = sum.add(&k.binomial(m, t).unwrap()).unwrap();
                }
                assert_eq!(sum, k.element(1i64 << m));
            }
        }
    }
}
