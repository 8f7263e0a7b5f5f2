//! Linear codes over GF(p) and their binomial ideals.
//!
//! A code with generator matrix `(I_k | M)` gives the ideal generated by
//! `X^c - X^c'` for `c - c'` in the code, plus `X_i^p - 1`. Under lex its
//! reduced Groebner basis is `{X_i - X^{m_i}} u {X_j^p - 1}`. Translating the
//! common zero `(1, ..., 1)` to the origin and localizing there, the closed
//! form `{X_i - sum binom * X^t} u {X_j^p}` is a standard basis.
//!
//! Row and column indices in this API are zero-based; the text formats and
//! printed polynomials are one-based.

use std::cmp::Ordering;
use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::buchberger::sort_by_leading;
use crate::error::Error;
use crate::field::{is_prime, PrimeField};
use crate::monomial::{Monomial, MonomialOrder};
use crate::mora::{self, StandardBasisFailure};
use crate::poly::{Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("p={0} is not a prime")]
    NotPrime(u64),
    #[error("k={k} exceeds n={n}")]
    KExceedsN { k: usize, n: usize },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("row {row}: expected {expected} entries, found {found}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("row {row}, column {col}: entry {value} not in [0, {p})")]
    EntryOutOfRange { row: usize, col: usize, value: u64, p: u64 },
    #[error("not in standard form: row {row}, column {col} should be {expected}{hint}")]
    NotStandardForm {
        row: usize,
        col: usize,
        expected: u32,
        hint: String,
    },
}

/// A `k x n` matrix over GF(p) as read from text, before the standard-form
/// check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawMatrix {
    pub p: u64,
    pub k: usize,
    pub n: usize,
    pub rows: Vec<Vec<u32>>,
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn parse_assignment(tok: &str, key: &str, line: usize) -> Result<u64, MatrixError> {
    let syntax = |msg: String| MatrixError::Syntax { line, msg };
    let value = tok
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| syntax(format!("expected `{key}=<int>`, found `{tok}`")))?;
    value
        .parse::<u64>()
        .map_err(|_| syntax(format!("bad integer `{value}` for {key}")))
}

impl RawMatrix {
    /// Parses the matrix text format:
    ///
    /// ```text
    /// p=3
    /// k=3 n=6
    /// 1 0 0 1 0 1
    /// 0 1 0 2 1 0
    /// 0 0 1 2 2 1
    /// ```
    ///
    /// `#` starts a comment; blank lines are ignored.
    pub fn parse(text: &str) -> Result<RawMatrix, MatrixError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, strip_comment(l)))
            .filter(|(_, l)| !l.is_empty());

        let (line, header) = lines.next().ok_or(MatrixError::Syntax {
            line: 1,
            msg: "missing `p=<prime>` line".into(),
        })?;
        let p = parse_assignment(header, "p", line)?;
        if !is_prime(p) || p > u64::from(u32::MAX) {
            return Err(MatrixError::NotPrime(p));
        }

        let (line, dims) = lines.next().ok_or(MatrixError::Syntax {
            line: line + 1,
            msg: "missing `k=<int> n=<int>` line".into(),
        })?;
        let toks: Vec<&str> = dims.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(MatrixError::Syntax {
                line,
                msg: "expected `k=<int> n=<int>`".into(),
            });
        }
        let k = parse_assignment(toks[0], "k", line)? as usize;
        let n = parse_assignment(toks[1], "n", line)? as usize;
        if k > n {
            return Err(MatrixError::KExceedsN { k, n });
        }

        let mut rows = Vec::with_capacity(k);
        for (line, text) in lines {
            let row = rows.len() + 1;
            if row > k {
                return Err(MatrixError::RowCount {
                    expected: k,
                    found: row,
                });
            }
            let mut entries = Vec::with_capacity(n);
            for (c, tok) in text.split_whitespace().enumerate() {
                let value = tok.parse::<u64>().map_err(|_| MatrixError::Syntax {
                    line,
                    msg: format!("bad matrix entry `{tok}`"),
                })?;
                if value >= p {
                    return Err(MatrixError::EntryOutOfRange {
                        row,
                        col: c + 1,
                        value,
                        p,
                    });
                }
                entries.push(value as u32);
            }
            if entries.len() != n {
                return Err(MatrixError::RowLength {
                    row,
                    expected: n,
                    found: entries.len(),
                });
            }
            rows.push(entries);
        }
        if rows.len() != k {
            return Err(MatrixError::RowCount {
                expected: k,
                found: rows.len(),
            });
        }
        Ok(RawMatrix { p, k, n, rows })
    }
}

/// Result of row-reducing a raw matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardFormReport {
    /// Row operations alone reach `(I_k | M)`; same code.
    RowReducible(GeneratorMatrix),
    /// Pivots are not the first `k` columns; `pivots` lists them (zero-based).
    /// Moving them to the front changes the code, so it is not done here.
    NeedsColumnPermutation { pivots: Vec<usize> },
    /// The rows are linearly dependent.
    RankDeficient { rank: usize },
}

/// Reduced row echelon form over GF(p). Returns the reduced rows and the
/// pivot columns.
pub fn rref(field: PrimeField, rows: &[Vec<u32>]) -> (Vec<Vec<u32>>, Vec<usize>) {
    let mut m: Vec<Vec<u32>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = field.inv(m[r][c]).expect("pivot is nonzero");
        for v in m[r].iter_mut() {
            *v = field.mul(*v, inv);
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                let pivot_row = m[r].clone();
                for (v, &pv) in m[i].iter_mut().zip(&pivot_row) {
                    *v = field.sub(*v, field.mul(factor, pv));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Row-reduces `raw` and reports whether it reaches standard form.
pub fn standard_form(raw: &RawMatrix) -> Result<StandardFormReport, MatrixError> {
    let field = PrimeField::new(raw.p).map_err(|_| MatrixError::NotPrime(raw.p))?;
    let (reduced, pivots) = rref(field, &raw.rows);
    if pivots.len() < raw.k {
        return Ok(StandardFormReport::RankDeficient { rank: pivots.len() });
    }
    if pivots.iter().enumerate().all(|(i, &c)| i == c) {
        let g = GeneratorMatrix::from_raw(RawMatrix {
            rows: reduced,
            ..raw.clone()
        })?;
        Ok(StandardFormReport::RowReducible(g))
    } else {
        Ok(StandardFormReport::NeedsColumnPermutation { pivots })
    }
}

/// Generator matrix in standard form `(I_k | M)` over GF(p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    field: PrimeField,
    k: usize,
    n: usize,
    rows: Vec<Vec<u32>>,
}

/// `m_i = (0, ..., 0, p - g_{i,k+1}, ..., p - g_{i,n})` reduced mod p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiVector {
    pub values: Vec<u32>,
    /// Zero-based columns `j >= k` with `values[j] != 0`, ascending.
    pub support: Vec<usize>,
    pub sigma: usize,
}

impl GeneratorMatrix {
    pub fn new(p: u64, rows: Vec<Vec<u32>>) -> Result<Self, MatrixError> {
        let k = rows.len();
        let n = rows.first().map_or(k, Vec::len);
        Self::from_raw(RawMatrix { p, k, n, rows })
    }

    pub fn parse(text: &str) -> Result<Self, MatrixError> {
        Self::from_raw(RawMatrix::parse(text)?)
    }

    pub fn from_raw(raw: RawMatrix) -> Result<Self, MatrixError> {
        let field = PrimeField::new(raw.p).map_err(|_| MatrixError::NotPrime(raw.p))?;
        if raw.k > raw.n {
            return Err(MatrixError::KExceedsN { k: raw.k, n: raw.n });
        }
        if raw.rows.len() != raw.k {
            return Err(MatrixError::RowCount {
                expected: raw.k,
                found: raw.rows.len(),
            });
        }
        for (i, row) in raw.rows.iter().enumerate() {
            if row.len() != raw.n {
                return Err(MatrixError::RowLength {
                    row: i + 1,
                    expected: raw.n,
                    found: row.len(),
                });
            }
            if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| u64::from(v) >= raw.p) {
                return Err(MatrixError::EntryOutOfRange {
                    row: i + 1,
                    col: j + 1,
                    value: v.into(),
                    p: raw.p,
                });
            }
        }
        for i in 0..raw.k {
            for j in 0..raw.k {
                let expected = u32::from(i == j);
                if raw.rows[i][j] != expected {
                    let hint = match standard_form(&raw) {
                        Ok(StandardFormReport::RowReducible(_)) => {
                            "; row reduction reaches standard form (see `standard-form`)".to_string()
                        }
                        Ok(StandardFormReport::NeedsColumnPermutation { pivots }) => {
                            let cols: Vec<String> = pivots.iter().map(|c| (c + 1).to_string()).collect();
                            format!(
                                "; pivot columns are {}, a column permutation is required",
                                cols.join(",")
                            )
                        }
                        Ok(StandardFormReport::RankDeficient { rank }) => {
                            format!("; rows are dependent (rank {rank})")
                        }
                        Err(_) => String::new(),
                    };
                    return Err(MatrixError::NotStandardForm {
                        row: i + 1,
                        col: j + 1,
                        expected,
                        hint,
                    });
                }
            }
        }
        Ok(GeneratorMatrix {
            field,
            k: raw.k,
            n: raw.n,
            rows: raw.rows,
        })
    }

    /// Standard-form matrix with a uniformly random `M` block.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, p: u64, k: usize, n: usize) -> Result<Self, MatrixError> {
        let mut rows = vec![vec![0u32; n]; k];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
            for v in row.iter_mut().skip(k) {
                *v = rng.gen_range(0..p as u32);
            }
        }
        Self::from_raw(RawMatrix { p, k, n, rows })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.modulus()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn ring(&self, order: MonomialOrder) -> Ring {
        Ring::with_field(self.field, self.n, order)
    }

    /// The matrix text format, byte-exact.
    pub fn to_text(&self) -> String {
        let mut s = format!("p={}\nk={} n={}\n", self.p(), self.k, self.n);
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s
    }

    /// `message * G`.
    pub fn encode(&self, message: &[u32]) -> Vec<u32> {
        assert_eq!(message.len(), self.k, "message length must equal k");
        let f = self.field;
        (0..self.n)
            .map(|j| {
                message
                    .iter()
                    .zip(&self.rows)
                    .fold(0, |acc, (&x, row)| f.add(acc, f.mul(x % f.modulus(), row[j])))
            })
            .collect()
    }

    pub fn mi_vector(&self, row: usize) -> Result<MiVector, Error> {
        if row >= self.k {
            return Err(Error::IndexOutOfRange {
                index: row + 1,
                bound: self.k,
            });
        }
        let f = self.field;
        let values: Vec<u32> = (0..self.n)
            .map(|j| if j < self.k { 0 } else { f.neg(self.rows[row][j]) })
            .collect();
        let support: Vec<usize> = (self.k..self.n).filter(|&j| values[j] != 0).collect();
        Ok(MiVector {
            sigma: support.len(),
            values,
            support,
        })
    }

    fn mi_vectors(&self) -> Vec<MiVector> {
        (0..self.k).map(|i| self.mi_vector(i).expect("row in range")).collect()
    }

    /// `{X_i - X^{m_i}} u {X_j^p - 1}` under lex, rows first.
    pub fn lex_code_basis(&self) -> Vec<Polynomial> {
        let ring = self.ring(MonomialOrder::Lex);
        let mut out = Vec::with_capacity(self.n);
        for (i, m) in self.mi_vectors().into_iter().enumerate() {
            let xi = ring.var(i);
            out.push(&xi - &ring.term(1, Monomial::new(m.values)));
        }
        for j in self.k..self.n {
            out.push(&ring.term(1, Monomial::var_pow(self.n, j, self.p())) - &ring.one());
        }
        out
    }

    /// Image of the lex basis under `X_i -> X_i + 1`, expanded, under the
    /// negative degree lexicographic order:
    /// `(X_i + 1) + (p - 1) prod (X_j + 1)^{p - g_ij}` and `(X_j + 1)^p + p - 1`.
    pub fn translated_generators(&self) -> Vec<Polynomial> {
        let ring = self.ring(MonomialOrder::NegDegLex);
        let one = ring.one();
        let shifted = |j: usize| &ring.var(j) + &one;
        let p = i64::from(self.p());
        let mut out = Vec::with_capacity(self.n);
        for (i, m) in self.mi_vectors().into_iter().enumerate() {
            let mut prod = ring.one();
            for &j in &m.support {
                prod = &prod * &shifted(j).pow(m.values[j]);
            }
            let scaled = &prod * &ring.constant(p - 1);
            out.push(&shifted(i) + &scaled);
        }
        for j in self.k..self.n {
            out.push(&shifted(j).pow(self.p()) + &ring.constant(p - 1));
        }
        out
    }

    /// The closed-form standard basis under the negative degree
    /// lexicographic order:
    /// `X_i - sum_{t != 0} prod_h binom(p - g_{i,j_h}, t_h) X_{j_h}^{t_h}` for
    /// each row, and `X_j^p` for each column past `k`.
    pub fn closed_form_basis(&self) -> Vec<Polynomial> {
        let ring = self.ring(MonomialOrder::NegDegLex);
        let f = self.field;
        let mut out = Vec::with_capacity(self.n);
        for (i, m) in self.mi_vectors().into_iter().enumerate() {
            let bounds: Vec<u32> = m.support.iter().map(|&j| m.values[j]).collect();
            let mut raw = vec![(1i64, Monomial::var_pow(self.n, i, 1))];
            // odometer over (t_1, ..., t_sigma), last index fastest
            let mut t = vec![0u32; bounds.len()];
            while let Some(pos) = (0..t.len()).rev().find(|&l| t[l] < bounds[l]) {
                t[pos] += 1;
                for slot in &mut t[pos + 1..] {
                    *slot = 0;
                }
                let mut coeff = 1u32;
                let mut exps = vec![0u32; self.n];
                for (l, &j) in m.support.iter().enumerate() {
                    let b = f.binomial(i64::from(bounds[l]), i64::from(t[l])).expect("non-negative");
                    coeff = f.mul(coeff, b.value());
                    exps[j] = t[l];
                }
                raw.push((-i64::from(coeff), Monomial::new(exps)));
            }
            out.push(ring.polynomial(raw).expect("lengths match"));
        }
        for j in self.k..self.n {
            out.push(ring.term(1, Monomial::var_pow(self.n, j, self.p())));
        }
        out
    }

    /// Binary case written with subsets: `X_i - sum_{J nonempty in supp} X_J`
    /// and `X_j^2`. `None` unless `p = 2`.
    pub fn binary_closed_form(&self) -> Option<Vec<Polynomial>> {
        if self.p() != 2 {
            return None;
        }
        let ring = self.ring(MonomialOrder::NegDegLex);
        let mut out = Vec::with_capacity(self.n);
        for (i, m) in self.mi_vectors().into_iter().enumerate() {
            let mut raw = vec![(1i64, Monomial::var_pow(self.n, i, 1))];
            for mask in 1u64..(1u64 << m.sigma) {
                let mut exps = vec![0u32; self.n];
                for (bit, &j) in m.support.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        exps[j] = 1;
                    }
                }
                raw.push((-1, Monomial::new(exps)));
            }
            out.push(ring.polynomial(raw).expect("lengths match"));
        }
        for j in self.k..self.n {
            out.push(ring.term(1, Monomial::var_pow(self.n, j, 2)));
        }
        Some(out)
    }

    /// `{X_1, ..., X_k, X_{k+1}^p, ..., X_n^p}`.
    pub fn expected_leading_monomials(&self) -> Vec<Monomial> {
        (0..self.n)
            .map(|j| Monomial::var_pow(self.n, j, if j < self.k { 1 } else { self.p() }))
            .collect()
    }

    /// `X^c - X^{c - d}` under lex, exponents reduced into `[0, p)`. When `d`
    /// is a codeword this lies in the code ideal.
    pub fn difference_binomial(&self, word: &[u32], codeword: &[u32]) -> Polynomial {
        let f = self.field;
        let ring = self.ring(MonomialOrder::Lex);
        let other: Vec<u32> = word
            .iter()
            .zip(codeword)
            .map(|(&a, &b)| f.sub(a % f.modulus(), b))
            .collect();
        &ring.term(1, Monomial::new(word.to_vec())) - &ring.term(1, Monomial::new(other))
    }

    /// Checks the closed form against the translated generators.
    pub fn verify_closed_form(&self) -> Result<ClosedFormReport, Error> {
        self.verify_candidate(&self.closed_form_basis())
    }

    /// Runs the three checks on an arbitrary candidate basis.
    pub fn verify_candidate(&self, candidate: &[Polynomial]) -> Result<ClosedFormReport, Error> {
        let gens = self.translated_generators();
        let generation = same_set(candidate, &gens);
        let criterion = mora::is_standard_basis(candidate, &gens)?;
        let mut leads = mora::leading_monomials(candidate)?;
        let mut expected = self.expected_leading_monomials();
        let order = MonomialOrder::NegDegLex;
        leads.sort_by(|a, b| order.compare(b, a));
        expected.sort_by(|a, b| order.compare(b, a));
        Ok(ClosedFormReport {
            generation,
            criterion,
            leading_terms: leads == expected,
        })
    }
}

impl fmt::Display for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormReport {
    /// Candidate equals the expanded translated generators as a set.
    pub generation: bool,
    /// `None` when the standard-basis criterion passes.
    pub criterion: Option<StandardBasisFailure>,
    /// Leading monomials are exactly `X_1..X_k, X_{k+1}^p..X_n^p`.
    pub leading_terms: bool,
}

impl ClosedFormReport {
    pub fn passed(&self) -> bool {
        self.generation && self.criterion.is_none() && self.leading_terms
    }
}

fn cmp_polys(a: &Polynomial, b: &Polynomial) -> Ordering {
    let order = a.order();
    for (x, y) in a.terms().iter().zip(b.terms()) {
        let c = order.compare(&y.mono, &x.mono).then(x.coeff.cmp(&y.coeff));
        if c != Ordering::Equal {
            return c;
        }
    }
    a.len().cmp(&b.len())
}

/// Sorts a basis canonically: by descending leading monomial, then by the
/// remaining terms.
pub fn canonical_order(basis: &[Polynomial]) -> Vec<Polynomial> {
    let mut v = basis.to_vec();
    sort_by_leading(&mut v);
    v.sort_by(cmp_polys);
    v
}

/// Equality of two bases as sets of normalized polynomials.
pub fn same_set(a: &[Polynomial], b: &[Polynomial]) -> bool {
    let (mut a, mut b) = (canonical_order(a), canonical_order(b));
    a.dedup();
    b.dedup();
    a == b
}
