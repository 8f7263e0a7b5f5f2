//! Fixed inputs shared by the benchmarks.

use stdbasis::{GeneratorMatrix, MonomialOrder, Polynomial, Ring};

pub const EXAMPLE: &str = "p=3\nk=3 n=6\n1 0 0 1 0 1\n0 1 0 2 1 0\n0 0 1 2 2 1\n";

pub fn example() -> GeneratorMatrix {
    GeneratorMatrix::parse(EXAMPLE).expect("example matrix parses")
}

/// `(1 | 1 ... 1)`: one row whose closed-form element has `(p - 1)^(n - 1)`
/// terms, the largest possible for `k = 1`.
pub fn dense_row(p: u64, n: usize) -> GeneratorMatrix {
    GeneratorMatrix::new(p, vec![vec![1; n]]).expect("standard form")
}

/// The divergent local example: `X1` against `X1 - X1^2`.
pub fn pathology() -> (Polynomial, Vec<Polynomial>) {
    let ring = Ring::new(3, 1, MonomialOrder::NegDegLex).expect("3 is prime");
    let x = ring.var(0);
    let g = &x - &(&x * &x);
    (x, vec![g])
}
