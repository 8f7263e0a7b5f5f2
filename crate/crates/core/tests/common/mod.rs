#![allow(dead_code)]

use rand::Rng;
use stdbasis::{GeneratorMatrix, Monomial, MonomialOrder, Polynomial, Ring};

pub const EXAMPLE_MATRIX: &str = "p=3\nk=3 n=6\n1 0 0 1 0 1\n0 1 0 2 1 0\n0 0 1 2 2 1\n";

pub const G1: &str = "X1+X4+X6+2X4^2+2X4X6+2X6^2+X4^2X6+X4X6^2+2X4^2X6^2";
pub const G2: &str = "X2+2X4+X5+X4X5+2X5^2+2X4X5^2";
pub const G3: &str = "X3+2X4+2X5+X6+2X4X5+X4X6+X5X6+2X6^2+X4X5X6+2X4X6^2+2X5X6^2+2X4X5X6^2";

pub fn example() -> GeneratorMatrix {
    GeneratorMatrix::parse(EXAMPLE_MATRIX).unwrap()
}

/// Random polynomial with up to `max_terms` terms of total degree <= `max_deg`.
pub fn random_poly<R: Rng>(rng: &mut R, ring: &Ring, max_terms: usize, max_deg: u32) -> Polynomial {
    let n = ring.nvars();
    let p = i64::from(ring.modulus());
    let count = rng.gen_range(1..=max_terms);
    let raw: Vec<(i64, Monomial)> = (0..count)
        .map(|_| {
            let mut exps = vec![0u32; n];
            let deg = rng.gen_range(0..=max_deg);
            for _ in 0..deg {
                exps[rng.gen_range(0..n)] += 1;
            }
            (rng.gen_range(1..p), Monomial::new(exps))
        })
        .collect();
    ring.polynomial(raw).unwrap()
}

pub fn random_nonzero_poly<R: Rng>(rng: &mut R, ring: &Ring, max_terms: usize, max_deg: u32) -> Polynomial {
    loop {
        let f = random_poly(rng, ring, max_terms, max_deg);
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn random_matrix<R: Rng>(rng: &mut R, primes: &[u64], max_k: usize, max_n: usize) -> GeneratorMatrix {
    let p = primes[rng.gen_range(0..primes.len())];
    let k = rng.gen_range(1..=max_k);
    let n = rng.gen_range(k..=max_n);
    GeneratorMatrix::random(rng, p, k, n).unwrap()
}

pub fn ring(p: u64, n: usize, order: MonomialOrder) -> Ring {
    Ring::new(p, n, order).unwrap()
}
