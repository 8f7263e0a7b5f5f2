use std::fmt::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use stdbasis::buchberger::{groebner_traced, reduce_basis};
use stdbasis::code::{canonical_order, standard_form, RawMatrix, StandardFormReport};
use stdbasis::division::divide_traced;
use stdbasis::mora::{standard_basis_traced, weak_normal_form_traced};
use stdbasis::{parse_poly, CompletionOptions, GeneratorMatrix, MonomialOrder, Polynomial};

use crate::input::BasisFile;
use crate::trace;
use crate::CliError;

fn lines(polys: &[Polynomial]) -> String {
    polys.iter().fold(String::new(), |mut out, f| {
        let _ = writeln!(out, "{f}");
        out
    })
}

fn need_global(order: MonomialOrder) -> Result<(), CliError> {
    if order.is_local() {
        return Err(CliError::Input(format!(
            "{order} is a local order; groebner needs lex, deglex or degrevlex"
        )));
    }
    Ok(())
}

fn need_local(order: MonomialOrder) -> Result<(), CliError> {
    if order.is_global() {
        return Err(CliError::Input(format!(
            "{order} is a global order; standard bases need negdeglex"
        )));
    }
    Ok(())
}

pub fn groebner(g: &GeneratorMatrix, order: MonomialOrder, tracing: bool) -> Result<String, CliError> {
    need_global(order)?;
    let ring = g.ring(order);
    let gens: Vec<Polynomial> = g.lex_code_basis().iter().map(|f| f.with_order(order)).collect();
    if tracing {
        for (i, f) in gens.iter().enumerate() {
            trace::emit(format!("s{} = {f}", i + 1));
        }
    }
    let (basis, stats) = groebner_traced(
        &gens,
        CompletionOptions::default(),
        |e| {
            if tracing {
                trace::emit(trace::pair(e));
            }
        },
        |e| {
            if tracing {
                trace::emit(trace::division(&ring, e));
            }
        },
    )?;
    if tracing {
        trace::emit(format!("{stats:?}"));
    }
    Ok(lines(&reduce_basis(&basis)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    ClosedForm,
    Mora,
}

pub fn standard_basis(
    g: &GeneratorMatrix,
    method: Method,
    order: MonomialOrder,
    tracing: bool,
) -> Result<String, CliError> {
    need_local(order)?;
    match method {
        Method::ClosedForm => {
            if tracing {
                for i in 0..g.k() {
                    let m = g.mi_vector(i)?;
                    trace::emit(format!("m{} = {:?}", i + 1, m.values));
                }
            }
            let basis = g.binary_closed_form().unwrap_or_else(|| g.closed_form_basis());
            Ok(lines(&basis))
        }
        Method::Mora => {
            let ring = g.ring(order);
            let gens = g.translated_generators();
            if tracing {
                for (i, f) in gens.iter().enumerate() {
                    trace::emit(format!("s{} = {f}", i + 1));
                }
            }
            let (basis, stats) = standard_basis_traced(
                &gens,
                CompletionOptions::default(),
                |e| {
                    if tracing {
                        trace::emit(trace::pair(e));
                    }
                },
                |e| {
                    if tracing {
                        trace::emit(trace::mora(&ring, e));
                    }
                },
            )?;
            if tracing {
                trace::emit(format!("{stats:?}"));
            }
            Ok(lines(&basis))
        }
    }
}

pub struct VerifyOutcome {
    pub text: String,
    pub passed: bool,
}

fn difference(a: &[Polynomial], b: &[Polynomial]) -> Vec<String> {
    a.iter().filter(|f| !b.contains(f)).map(ToString::to_string).collect()
}

/// Runs the three checks on the closed form of `g`, with element `drop`
/// (one-based) removed when given.
pub fn verify_matrix(g: &GeneratorMatrix, drop: Option<usize>) -> Result<VerifyOutcome, CliError> {
    let mut candidate = g.closed_form_basis();
    if let Some(d) = drop {
        if d == 0 || d > candidate.len() {
            return Err(CliError::Input(format!(
                "--inject-drop {d}: basis has {} elements",
                candidate.len()
            )));
        }
        candidate.remove(d - 1);
    }
    let report = g.verify_candidate(&candidate)?;
    let gens = canonical_order(&g.translated_generators());
    let mut text = String::new();
    if report.generation {
        text.push_str("generation: pass\n");
    } else {
        let missing = difference(&gens, &candidate);
        let extra = difference(&candidate, &gens);
        let _ = writeln!(
            text,
            "generation: FAIL (missing [{}], extra [{}])",
            missing.join(", "),
            extra.join(", ")
        );
    }
    match &report.criterion {
        None => text.push_str("standard basis: pass\n"),
        Some(failure) => {
            let _ = writeln!(text, "standard basis: FAIL ({failure})");
        }
    }
    if report.leading_terms {
        text.push_str("leading terms: pass\n");
    } else {
        let leads: Vec<String> = candidate
            .iter()
            .filter_map(|f| f.leading_term().ok())
            .map(|t| t.mono.to_string())
            .collect();
        let _ = writeln!(text, "leading terms: FAIL ({})", leads.join(", "));
    }
    let passed = report.passed();
    text.push_str(if passed { "PASS\n" } else { "FAIL\n" });
    Ok(VerifyOutcome { text, passed })
}

#[derive(Debug, Clone, Copy)]
pub struct RandomBatch {
    pub count: usize,
    pub seed: u64,
    pub p: Option<u64>,
    pub k: Option<usize>,
    pub n: Option<usize>,
}

fn random_instance(batch: &RandomBatch, index: usize) -> Result<GeneratorMatrix, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(batch.seed);
    rng.set_stream(index as u64);
    let p = batch.p.unwrap_or_else(|| [2, 3, 5][rng.gen_range(0..3)]);
    let (k, n) = match (batch.k, batch.n) {
        (Some(k), Some(n)) => (k, n),
        (Some(k), None) => (k, rng.gen_range(k..=k.max(6))),
        (None, Some(n)) => (rng.gen_range(1..=n.clamp(1, 3)).min(n), n),
        (None, None) => {
            let k = rng.gen_range(1..=3);
            (k, rng.gen_range(k..=6))
        }
    };
    GeneratorMatrix::random(&mut rng, p, k, n).map_err(|e| CliError::Input(e.to_string()))
}

/// Verifies `count` random matrices in parallel; the report lists them in
/// instance order regardless of scheduling.
pub fn verify_random(batch: &RandomBatch, drop: Option<usize>, tracing: bool) -> Result<VerifyOutcome, CliError> {
    let results: Vec<Result<(GeneratorMatrix, VerifyOutcome), CliError>> = (0..batch.count)
        .into_par_iter()
        .map(|i| {
            let g = random_instance(batch, i)?;
            let out = verify_matrix(&g, drop)?;
            Ok((g, out))
        })
        .collect();
    let mut text = String::new();
    let mut passed = 0;
    for (i, r) in results.into_iter().enumerate() {
        let (g, out) = r?;
        let verdict = if out.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(
            text,
            "instance {}: p={} k={} n={} {verdict}",
            i + 1,
            g.p(),
            g.k(),
            g.n()
        );
        if tracing {
            trace::emit(format!("instance {}:\n{}", i + 1, g.to_text().trim_end()));
        }
        if out.passed {
            passed += 1;
        } else {
            for line in g.to_text().lines().chain(out.text.lines()) {
                let _ = writeln!(text, "  {line}");
            }
        }
    }
    let _ = writeln!(text, "{passed}/{} passed", batch.count);
    Ok(VerifyOutcome {
        text,
        passed: passed == batch.count,
    })
}

pub fn nf(f: &str, basis: &BasisFile, tracing: bool) -> Result<String, CliError> {
    let ring = basis.ring;
    let f = parse_poly(f, &ring).map_err(|e| CliError::Input(format!("polynomial: {e}")))?;
    if tracing {
        for (i, g) in basis.polys.iter().enumerate() {
            trace::emit(format!("f{} = {g}", i + 1));
        }
    }
    let emit = |line: String| {
        if tracing {
            trace::emit(line);
        }
    };
    if ring.order().is_global() {
        let d = divide_traced(&f, &basis.polys, |e| emit(trace::division(&ring, e)))?;
        return Ok(format!("{}\n", d.remainder));
    }
    let w = weak_normal_form_traced(&f, &basis.polys, |e| emit(trace::mora(&ring, e)))?;
    let mut out = format!("NF: {}\nunit: {}\n", w.h, w.unit);
    for (i, a) in w.coefficients.iter().enumerate() {
        let _ = writeln!(out, "a{}: {a}", i + 1);
    }
    Ok(out)
}

pub fn standard_form_cmd(raw: &RawMatrix) -> Result<String, CliError> {
    match standard_form(raw).map_err(|e| CliError::Input(e.to_string()))? {
        StandardFormReport::RowReducible(g) => Ok(g.to_text()),
        StandardFormReport::NeedsColumnPermutation { pivots } => {
            let cols: Vec<String> = pivots.iter().map(|c| (c + 1).to_string()).collect();
            Err(CliError::Input(format!(
                "pivot columns are {}; a column permutation is needed for standard form",
                cols.join(",")
            )))
        }
        StandardFormReport::RankDeficient { rank } => {
            Err(CliError::Input(format!("rows are linearly dependent (rank {rank})")))
        }
    }
}
