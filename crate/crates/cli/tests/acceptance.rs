//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails. All comparisons are exact.

use std::fs;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stdbasis::buchberger::reduce_basis;
use stdbasis::code::same_set;
use stdbasis::mora::{leading_monomials, naive_local_reduce, NaiveOutcome};
use stdbasis::{
    divide, groebner, is_standard_basis, parse_poly, standard_basis, weak_normal_form, GeneratorMatrix, Monomial,
    MonomialOrder, Polynomial, Ring,
};

const EXAMPLE: &str = "p=3\nk=3 n=6\n1 0 0 1 0 1\n0 1 0 2 1 0\n0 0 1 2 2 1\n";

const GOLDEN: [&str; 6] = [
    "X1+X4+X6+2X4^2+2X4X6+2X6^2+X4^2X6+X4X6^2+2X4^2X6^2",
    "X2+2X4+X5+X4X5+2X5^2+2X4X5^2",
    "X3+2X4+2X5+X6+2X4X5+X4X6+X5X6+2X6^2+X4X5X6+2X4X6^2+2X5X6^2+2X4X5X6^2",
    "X4^3",
    "X5^3",
    "X6^3",
];

type Outcome = Result<String, String>;
type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &Ring, max_terms: usize, max_deg: u32) -> Polynomial {
    let n = ring.nvars();
    let p = i64::from(ring.modulus());
    let count = rng.gen_range(0..=max_terms);
    let raw: Vec<(i64, Monomial)> = (0..count)
        .map(|_| {
            let mut exps = vec![0u32; n];
            for _ in 0..rng.gen_range(0..=max_deg) {
                exps[rng.gen_range(0..n)] += 1;
            }
            (rng.gen_range(1..p), Monomial::new(exps))
        })
        .collect();
    ring.polynomial(raw).unwrap()
}

fn random_nonzero(rng: &mut ChaCha8Rng, ring: &Ring, max_terms: usize, max_deg: u32) -> Polynomial {
    loop {
        let f = random_poly(rng, ring, max_terms, max_deg);
        if !f.is_zero() {
            return f;
        }
    }
}

fn random_matrices(seed: u64, count: usize, primes: &[u64]) -> Vec<GeneratorMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let p = primes[rng.gen_range(0..primes.len())];
            let k = rng.gen_range(1..=3);
            let n = rng.gen_range(k..=6);
            GeneratorMatrix::random(&mut rng, p, k, n).unwrap()
        })
        .collect()
}

fn describe(g: &GeneratorMatrix) -> String {
    g.to_text().trim_end().replace('\n', " / ")
}

fn golden_reproduction() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("example.txt");
    fs::write(&path, EXAMPLE).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_stdbasis"))
        .args(["standard-basis", "--method", "closed-form"])
        .arg(&path)
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.success(), || format!("exit status {}", out.status))?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let expected: String = GOLDEN.iter().map(|l| format!("{l}\n")).collect();
    ensure(text == expected, || format!("output differs:\n{text}"))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("6 lines byte-identical in {elapsed:.2?}"))
}

fn translation_identity(ms: &[GeneratorMatrix]) -> Outcome {
    let start = Instant::now();
    for g in ms {
        ensure(same_set(&g.translated_generators(), &g.closed_form_basis()), || {
            describe(g)
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("{} matrices in {elapsed:.2?}", ms.len()))
}

fn sorted_leads(basis: &[Polynomial]) -> Vec<Monomial> {
    let mut leads = leading_monomials(basis).unwrap();
    leads.sort_by(|a, b| MonomialOrder::NegDegLex.compare(b, a));
    leads
}

fn standard_basis_verification(ms: &[GeneratorMatrix]) -> Outcome {
    let mut controls = 0;
    for g in ms {
        let closed = g.closed_form_basis();
        let gens = g.translated_generators();
        if let Some(f) = is_standard_basis(&closed, &gens).map_err(|e| e.to_string())? {
            return Err(format!("{}: {f}", describe(g)));
        }
        let mut expected = g.expected_leading_monomials();
        expected.sort_by(|a, b| MonomialOrder::NegDegLex.compare(b, a));
        ensure(sorted_leads(&closed) == expected, || {
            format!("{}: leading terms", describe(g))
        })?;
        for drop in 0..closed.len() {
            let mut partial = closed.clone();
            partial.remove(drop);
            let failure = is_standard_basis(&partial, &gens).map_err(|e| e.to_string())?;
            ensure(failure.is_some(), || {
                format!("{}: dropping element {} still verifies", describe(g), drop + 1)
            })?;
            controls += 1;
        }
    }
    Ok(format!("{} matrices, {controls} drop controls rejected", ms.len()))
}

fn oracle_equivalence(ms: &[GeneratorMatrix]) -> Outcome {
    for g in ms {
        let sb = standard_basis(&g.translated_generators()).map_err(|e| e.to_string())?;
        ensure(sorted_leads(&sb) == sorted_leads(&g.closed_form_basis()), || {
            describe(g)
        })?;
    }
    Ok(format!("{} matrices", ms.len()))
}

fn lex_reproduction(ms: &[GeneratorMatrix]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut binomials = 0;
    for g in ms {
        let basis = g.lex_code_basis();
        let completed = groebner(&basis).map_err(|e| e.to_string())?;
        let reduced = reduce_basis(&completed).map_err(|e| e.to_string())?;
        ensure(same_set(&reduced, &basis), || {
            format!("{}: reduced basis changed", describe(g))
        })?;
        for _ in 0..100 {
            let p = g.p();
            let word: Vec<u32> = (0..g.n()).map(|_| rng.gen_range(0..p)).collect();
            let msg: Vec<u32> = (0..g.k()).map(|_| rng.gen_range(0..p)).collect();
            let b = g.difference_binomial(&word, &g.encode(&msg));
            let r = divide(&b, &basis).map_err(|e| e.to_string())?.remainder;
            ensure(r.is_zero(), || format!("{}: {b} leaves {r}", describe(g)))?;
            binomials += 1;
        }
    }
    Ok(format!("{} fixpoints, {binomials} binomials reduce to 0", ms.len()))
}

fn pathology() -> Outcome {
    let ring = Ring::new(3, 1, MonomialOrder::NegDegLex).map_err(|e| e.to_string())?;
    let f = parse_poly("X1", &ring).map_err(|e| e.to_string())?;
    let g = parse_poly("X1-X1^2", &ring).map_err(|e| e.to_string())?;
    let w = weak_normal_form(&f, std::slice::from_ref(&g)).map_err(|e| e.to_string())?;
    ensure(w.h.is_zero(), || format!("h = {}", w.h))?;
    ensure(w.verify(&f, std::slice::from_ref(&g)), || {
        "certificate does not verify".into()
    })?;
    let lhs = &w.unit * &f;
    let rhs = &w.coefficients[0] * &g;
    ensure(lhs == rhs, || format!("{lhs} != {rhs}"))?;
    let budget = 50;
    match naive_local_reduce(&f, &[g], budget).map_err(|e| e.to_string())? {
        NaiveOutcome::BudgetExceeded { last, steps } => {
            let degree = last.leading_monomial().map_err(|e| e.to_string())?.degree();
            Ok(format!(
                "u = {}, a = {}; naive loop at X1^{degree} after {steps} steps",
                w.unit, w.coefficients[0]
            ))
        }
        NaiveOutcome::Finished { h, steps } => Err(format!("naive loop finished after {steps} steps with {h}")),
    }
}

fn mora_certificates() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut appends = 0;
    for case in 0..1000 {
        let p = [2u64, 3, 5][rng.gen_range(0..3)];
        let n = rng.gen_range(1..=4);
        let ring = Ring::new(p, n, MonomialOrder::NegDegLex).unwrap();
        let f = random_poly(&mut rng, &ring, 6, 5);
        let m = rng.gen_range(1..=3);
        let divs: Vec<Polynomial> = (0..m).map(|_| random_nonzero(&mut rng, &ring, 4, 5)).collect();
        let w = weak_normal_form(&f, &divs).map_err(|e| e.to_string())?;
        let mut rhs = w.h.clone();
        for (a, g) in w.coefficients.iter().zip(&divs) {
            rhs = &rhs + &(a * g);
        }
        let lead_one = w.unit.terms().first().is_some_and(|t| t.coeff == 1 && t.mono.is_one());
        ensure(&w.unit * &f == rhs, || format!("case {case}: identity fails"))?;
        ensure(lead_one, || format!("case {case}: lt(u) = {}", w.unit))?;
        ensure(w.is_reduced(&divs), || format!("case {case}: lm(h) divisible"))?;
        appends += w.stats.appends;
    }
    Ok(format!("1000 instances, {appends} L-appends"))
}

fn division_contract() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let orders = [MonomialOrder::Lex, MonomialOrder::DegLex, MonomialOrder::DegRevLex];
    for case in 0..1000 {
        let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
        let n = rng.gen_range(1..=4);
        let order = orders[rng.gen_range(0..3)];
        let ring = Ring::new(p, n, order).unwrap();
        let f = random_poly(&mut rng, &ring, 8, 6);
        let m = rng.gen_range(1..=4);
        let divs: Vec<Polynomial> = (0..m).map(|_| random_nonzero(&mut rng, &ring, 4, 4)).collect();
        let d = divide(&f, &divs).map_err(|e| e.to_string())?;
        let mut rhs = d.remainder.clone();
        for (q, g) in d.quotients.iter().zip(&divs) {
            rhs = &rhs + &(q * g);
        }
        ensure(rhs == f, || format!("case {case}: f != sum q_i f_i + r"))?;
        let leads = leading_monomials(&divs).unwrap();
        for t in d.remainder.terms() {
            ensure(!leads.iter().any(|l| l.divides(&t.mono)), || {
                format!("case {case}: {} reducible", t.mono)
            })?;
        }
    }
    Ok("1000 instances".into())
}

fn binary_corollary() -> Outcome {
    let ms = random_matrices(0x5eed_0009, 50, &[2]);
    for g in &ms {
        let binary = g.binary_closed_form().ok_or("binary form unavailable")?;
        ensure(binary == g.closed_form_basis(), || describe(g))?;
    }
    Ok("50 binary matrices".into())
}

fn round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
    for case in 0..1000 {
        let p = [2u64, 3, 5, 7, 11][rng.gen_range(0..5)];
        let n = rng.gen_range(1..=6);
        let order = MonomialOrder::ALL[rng.gen_range(0..MonomialOrder::ALL.len())];
        let ring = Ring::new(p, n, order).unwrap();
        let f = random_poly(&mut rng, &ring, 8, 6);
        let text = f.to_string();
        let back = parse_poly(&text, &ring).map_err(|e| format!("case {case}: {text}: {e}"))?;
        ensure(back == f, || format!("case {case}: {text} -> {back}"))?;
    }
    let g = GeneratorMatrix::parse(EXAMPLE).map_err(|e| e.to_string())?;
    let g2 = g.closed_form_basis()[1].to_string();
    ensure(g2 == "X2+2X4+X5+X4X5+2X5^2+2X4X5^2", || format!("g2 printed as {g2}"))?;
    Ok(format!("1000 round trips, g2 = {g2}"))
}

fn main() -> ExitCode {
    let ms = random_matrices(0x5eed_0002, 200, &[2, 3, 5]);
    let criteria: Vec<(&str, Check)> = vec![
        ("golden closed form", Box::new(golden_reproduction)),
        (
            "translated generators = closed form",
            Box::new(|| translation_identity(&ms)),
        ),
        (
            "standard-basis verification",
            Box::new(|| standard_basis_verification(&ms)),
        ),
        ("Mora oracle equivalence", Box::new(|| oracle_equivalence(&ms))),
        ("lex Groebner reproduction", Box::new(|| lex_reproduction(&ms))),
        ("local pathology", Box::new(pathology)),
        ("Mora certificate identity", Box::new(mora_certificates)),
        ("division contract", Box::new(division_contract)),
        ("binary corollary", Box::new(binary_corollary)),
        ("parser round trip", Box::new(round_trip)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {name}: {detail} [{:.2?}]",
                i + 1,
                start.elapsed()
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
