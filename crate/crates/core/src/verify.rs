//! Invariant suites: set counts, run lemmas, duality and sequences.

use crate::bounds::{lemma_suite, Verdict};
use crate::codes::{dual_defining_set, generator_polynomial, CodeId, DualConvention};
use crate::cosets::{max_h, CosetTable};
use crate::defset::DefiningSet;
use crate::error::Result;
use crate::gf2m::FieldSpec;
use crate::sequences::{berlekamp_massey, dft_support, trinomial_sequence, inverse_sequence, BinarySequence};
use rayon::prelude::*;
use serde::Serialize;

/// Largest `m` for which the D-set counts are checked.
pub const D_COUNT_MAX_M: u32 = 16;
/// Largest `m` for which sequences are generated and transformed.
pub const SEQUENCE_MAX_M: u32 = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Counts,
    Lemmas,
    Duality,
    Sequences,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Counts, Suite::Lemmas, Suite::Duality, Suite::Sequences];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::Lemmas => "lemmas",
            Suite::Duality => "duality",
            Suite::Sequences => "sequences",
        }
    }
}

/// One verified statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub m: u32,
    pub h: Option<u32>,
    pub verdict: Verdict,
    pub detail: String,
}

impl Check {
    fn new(suite: Suite, name: impl Into<String>, m: u32, h: Option<u32>, ok: bool, detail: String) -> Self {
        let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        Check { suite: suite.name(), name: name.into(), m, h, verdict, detail }
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}

/// Runs one suite for `m` up to `max_m`.
pub fn run_suite(suite: Suite, max_m: u32) -> Result<Vec<Check>> {
    match suite {
        Suite::Counts => counts(max_m),
        Suite::Lemmas => lemmas(max_m),
        Suite::Duality => duality(max_m),
        Suite::Sequences => sequences(max_m),
    }
}

fn par_over_m<F>(lo: u32, hi: u32, f: F) -> Result<Vec<Check>>
where
    F: Fn(u32) -> Result<Vec<Check>> + Sync + Send,
{
    let parts: Vec<Result<Vec<Check>>> = (lo..=hi).into_par_iter().map(f).collect();
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

/// Sizes of the T and D sets, and that each pair partitions `Z_n`.
pub fn counts(max_m: u32) -> Result<Vec<Check>> {
    par_over_m(2, max_m.min(26), |m| {
        let table = CosetTable::new(m)?;
        let n = table.n();
        let half = 1u64 << (m - 1);
        let t1 = table.t_set(1)?;
        let t0 = table.t_set(0)?;
        let mut out = vec![
            Check::new(Suite::Counts, "t1-size", m, None, t1.size() == half, format!("|T1| = {}", t1.size())),
            Check::new(Suite::Counts, "t0-size", m, None, t0.size() == half - 1, format!("|T0| = {}", t0.size())),
            Check::new(Suite::Counts, "t-partition", m, None, partitions(&t0, &t1, n), String::new()),
        ];
        if m <= D_COUNT_MAX_M {
            for h in 1..=max_h(m) {
                let d1 = table.d_set(h, 1)?;
                let d0 = table.d_set(h, 0)?;
                let ok = d1.size() == t1.size() && d0.size() == t0.size();
                let detail = format!("|D1| = {}, |D0| = {}", d1.size(), d0.size());
                out.push(Check::new(Suite::Counts, "d-size", m, Some(h), ok, detail));
                out.push(Check::new(Suite::Counts, "d-partition", m, Some(h), partitions(&d0, &d1, n), String::new()));
            }
        }
        Ok(out)
    })
}

fn partitions(a: &DefiningSet, b: &DefiningSet, n: u64) -> bool {
    let disjoint = a.leaders().iter().all(|j| b.leaders().binary_search(j).is_err());
    disjoint && a.size() + b.size() == n
}

/// Run statements, reported as pass or fail; skipped instances are dropped.
pub fn lemmas(max_m: u32) -> Result<Vec<Check>> {
    Ok(lemma_suite(max_m)?
        .into_iter()
        .filter(|v| v.verdict != Verdict::Skip)
        .map(|v| Check {
            suite: Suite::Lemmas.name(),
            name: v.lemma_id,
            m: v.m,
            h: v.h,
            verdict: v.verdict,
            detail: String::new(),
        })
        .collect())
}

/// T sets against the weight-parity sets, the dual-code relations, and the
/// round trip of the dual map.
pub fn duality(max_m: u32) -> Result<Vec<Check>> {
    par_over_m(2, max_m.min(26), |m| {
        let table = CosetTable::new(m)?;
        let conv = DualConvention::Complement;
        let t1 = table.t_set(1)?;
        let t0 = table.t_set(0)?;
        let n1 = table.n_set(1)?;
        let n0 = table.n_set(0)?;
        let s1 = CodeId::s(m, 1).defining_set(&table)?;
        let s0 = CodeId::s(m, 0).defining_set(&table)?;
        let zero = |s: &DefiningSet| s.with_adjoined_zero().map(|z| z.normalized());
        let mut out = Vec::new();
        let mut push = |name: &str, ok: bool| out.push(Check::new(Suite::Duality, name, m, None, ok, String::new()));
        if m % 2 == 1 {
            push("t1-is-n0-with-zero", t1.same_roots(&zero(&n0)?));
            push("t0-is-n1", t0.same_roots(&n1));
            push("s0-equals-tangding1", s0.same_roots(&n1));
            push("s1-is-dual-of-tangding1", s1.same_roots(&dual_defining_set(&n1, conv)));
            push("s1-inside-tangding0", n0.leaders().iter().all(|&j| s1.contains(j)));
        } else {
            push("t0-is-n0-with-zero", t0.same_roots(&zero(&n0)?));
            push("t1-is-n1", t1.same_roots(&n1));
            push("s1-roots-are-n1-with-zero", s1.same_roots(&zero(&n1)?));
            push("s1-is-dual-of-tangding0", s1.same_roots(&dual_defining_set(&n0, conv)));
            push("s1-inside-tangding1", n1.leaders().iter().all(|&j| s1.contains(j)));
            push("s0-is-dual-of-tangding1", s0.same_roots(&dual_defining_set(&n1, conv)));
            push("s0-inside-tangding0", n0.leaders().iter().all(|&j| s0.contains(j)));
        }
        for c in [DualConvention::NegateComplement, DualConvention::Complement] {
            let ok = [&t0, &t1, &n0, &n1, &s1]
                .iter()
                .all(|s| dual_defining_set(&dual_defining_set(s, c), c).same_roots(s));
            push(&format!("dual-round-trip-{}", convention_name(c)), ok);
        }
        Ok(out)
    })
}

pub fn convention_name(c: DualConvention) -> &'static str {
    match c {
        DualConvention::NegateComplement => "negate-complement",
        DualConvention::Complement => "complement",
    }
}

/// Berlekamp–Massey, DFT support and the parity-1 sets agree for both
/// sequence families.
pub fn sequences(max_m: u32) -> Result<Vec<Check>> {
    par_over_m(2, max_m.min(SEQUENCE_MAX_M), |m| {
        let field = FieldSpec::new(m)?;
        let table = CosetTable::new(m)?;
        let mut out = vec![sequence_check(&field, &inverse_sequence(&field), &table.t_set(1)?, m, None)?];
        for h in 1..=max_h(m) {
            let seq = trinomial_sequence(&field, h)?;
            out.push(sequence_check(&field, &seq, &table.d_set(h, 1)?, m, Some(h))?);
        }
        Ok(out)
    })
}

fn sequence_check(field: &FieldSpec, seq: &BinarySequence, set: &DefiningSet, m: u32, h: Option<u32>) -> Result<Check> {
    let support = dft_support(seq, field)?;
    let (l, poly) = berlekamp_massey(seq);
    let expected = generator_polynomial(field, set);
    let same_support = support == set.expanded();
    let ok = same_support && l as u64 == set.size() && support.len() == l && poly == expected;
    let detail = format!("L = {l}, |support| = {}, |set| = {}", support.len(), set.size());
    let name = if h.is_some() { "trinomial-sequence" } else { "inverse-sequence" };
    Ok(Check::new(Suite::Sequences, name, m, h, ok, detail))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let checks = run_suite(s, 6).unwrap();
            assert!(!checks.is_empty());
            assert!(checks.iter().all(|c| !c.failed()), "{:?}", checks.iter().find(|c| c.failed()));
        }
    }
}
