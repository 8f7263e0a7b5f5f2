use std::io::Write;

use stdbasis::buchberger::PairEvent;
use stdbasis::division::DivisionEvent;
use stdbasis::mora::{DivisorRef, MoraEvent};
use stdbasis::{Ring, Term};

fn term(ring: &Ring, t: &Term) -> String {
    ring.term(i64::from(t.coeff), t.mono.clone()).to_string()
}

fn divisor(r: DivisorRef) -> String {
    match r {
        DivisorRef::Input(i) => format!("f{}", i + 1),
        DivisorRef::Appended(i) => format!("h{}", i + 1),
    }
}

pub fn emit(line: String) {
    let _ = writeln!(std::io::stderr().lock(), "{line}");
}

pub fn division(ring: &Ring, e: &DivisionEvent) -> String {
    match e {
        DivisionEvent::Reduced { divisor, term: t } => format!("  cancel {} by f{}", term(ring, t), divisor + 1),
        DivisionEvent::ToRemainder { term: t } => format!("  remainder += {}", term(ring, t)),
    }
}

pub fn mora(ring: &Ring, e: &MoraEvent) -> String {
    match e {
        MoraEvent::Appended { lead, ecart, list_len } => {
            format!(
                "  L-append: h with lead {} (ecart {ecart}), |L| = {list_len}",
                term(ring, lead)
            )
        }
        MoraEvent::Reduced { by, ecart, lead } => {
            format!("  cancel {} by {} (ecart {ecart})", term(ring, lead), divisor(*by))
        }
        MoraEvent::UnitAbsorbed { by } => format!("  {} is a unit, remainder absorbed", divisor(*by)),
    }
}

pub fn pair(e: &PairEvent) -> String {
    match e {
        PairEvent::Skipped { i, j } => format!("pair ({}, {}): coprime leading monomials, skipped", i + 1, j + 1),
        PairEvent::Zero { i, j } => format!("pair ({}, {}): reduces to 0", i + 1, j + 1),
        PairEvent::Added { i, j, index, poly } => {
            format!("pair ({}, {}): new element s{} = {poly}", i + 1, j + 1, index + 1)
        }
    }
}
