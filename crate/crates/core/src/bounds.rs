//! BCH lower bounds found by multiplier search, run-membership checks, and
//! closed-form lower bounds for the code families.
//!
//! A cyclic code whose roots, written as powers of `γ = α^b` for a unit `b`,
//! include `δ - 1` consecutive exponents has minimum distance at least `δ`.
//! With `a' = b^-1` the exponents are `a'·Z`, so a certificate names `a'` and
//! a circular run inside `a'·Z mod n`.

use crate::codes::{CodeId, Family};
use crate::cosets::{check_h, gcd, leader_of, max_h, mod_inverse, CosetTable};
use crate::defset::DefiningSet;
use crate::error::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;

/// Largest `m` for which [`default_search`] tries every multiplier.
pub const FULL_SEARCH_MAX_M: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BchCertificate {
    pub multiplier: u64,
    pub run_start: u64,
    pub run_length: u64,
    pub implied_bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MultiplierSearch {
    /// Every unit, up to multiplication by powers of 2.
    All,
    Only(Vec<u64>),
}

/// Multipliers used by the run lemmas for degree `m`.
pub fn lemma_multipliers(m: u32) -> Vec<u64> {
    let mut out = Vec::new();
    let p = |e: u32| 1u64 << e;
    if m % 4 == 0 && m >= 4 {
        out.push(p((m + 2) / 2) - 1);
    }
    if m % 4 == 2 && m >= 6 {
        out.push(p((m + 4) / 2) - 1);
    }
    if m % 2 == 0 {
        let two_l = 1u32 << m.trailing_zeros();
        if m / two_l > 1 {
            out.push(p((m + two_l) / 2) + 1);
        }
    }
    if m % 4 == 1 && m >= 5 {
        out.push(p((m - 1) / 2) - 1);
    }
    if m % 4 == 3 && m >= 7 {
        out.push(p((m + 1) / 2) - 1);
    }
    match m {
        3 => out.push(3),
        4 => out.push(7),
        6 => out.extend([5, 38]),
        _ => {}
    }
    out
}

/// Full search for small `m`, otherwise 1, the lemma multipliers and their inverses.
pub fn default_search(m: u32) -> MultiplierSearch {
    if m <= FULL_SEARCH_MAX_M {
        return MultiplierSearch::All;
    }
    let n = (1u64 << m) - 1;
    let mut list = vec![1];
    for a in lemma_multipliers(m) {
        let a = a % n;
        if gcd(a, n) == 1 {
            list.push(a);
            list.push(mod_inverse(a, n).expect("unit"));
        }
    }
    list.sort_unstable();
    list.dedup();
    MultiplierSearch::Only(list)
}

fn member(bits: &[u64], i: u64) -> bool {
    bits[(i / 64) as usize] >> (i % 64) & 1 == 1
}

/// Longest circular run of `k` with `b·k mod n` in the bitmap; ties go to the
/// smallest start.
fn longest_run(bits: &[u64], n: u64, b: u64) -> (u64, u64) {
    let Some(gap) = (0..n).find(|&k| !member(bits, ((k as u128 * b as u128) % n as u128) as u64)) else {
        return (0, n);
    };
    let (mut best_start, mut best_len) = (0u64, 0u64);
    let (mut start, mut len) = (0u64, 0u64);
    let mut k = gap;
    let mut idx = ((gap as u128 * b as u128) % n as u128) as u64;
    for _ in 0..n {
        k += 1;
        if k == n {
            k = 0;
        }
        idx += b;
        if idx >= n {
            idx -= n;
        }
        if member(bits, idx) {
            if len == 0 {
                start = k;
            }
            len += 1;
            if len > best_len || (len == best_len && start < best_start) {
                best_start = start;
                best_len = len;
            }
        } else {
            len = 0;
        }
    }
    (best_start, best_len)
}

fn certificate(bits: &[u64], n: u64, multiplier: u64) -> BchCertificate {
    let b = mod_inverse(multiplier, n).expect("unit");
    let (run_start, run_length) = longest_run(bits, n, b);
    BchCertificate { multiplier, run_start, run_length, implied_bound: run_length + 1 }
}

fn better(x: BchCertificate, y: BchCertificate) -> BchCertificate {
    let kx = (std::cmp::Reverse(x.implied_bound), x.multiplier, x.run_start);
    let ky = (std::cmp::Reverse(y.implied_bound), y.multiplier, y.run_start);
    if kx <= ky {
        x
    } else {
        y
    }
}

/// Best BCH certificate over the searched multipliers.
pub fn bch_bound(set: &DefiningSet, search: &MultiplierSearch) -> Result<BchCertificate> {
    let (m, n) = (set.m(), set.n());
    let trivial = BchCertificate { multiplier: 1, run_start: 0, run_length: 0, implied_bound: 1 };
    if set.size() == 0 {
        return Ok(trivial);
    }
    let bits = set.bitmap();
    let multipliers: Vec<u64> = match search {
        MultiplierSearch::All => {
            let half = 1u64 << (m - 1);
            let mut v = vec![1];
            v.extend((3..half).step_by(2).filter(|&i| leader_of(i, m) == i && gcd(i, n) == 1));
            v
        }
        MultiplierSearch::Only(list) => {
            let mut v = Vec::with_capacity(list.len());
            for &a in list {
                let r = a % n;
                if gcd(r, n) != 1 {
                    return Err(Error::NotAUnit { a, n });
                }
                v.push(r);
            }
            v
        }
    };
    Ok(multipliers.par_iter().map(|&a| certificate(&bits, n, a)).reduce(|| trivial, better))
}

/// Whether the certificate's run lies in `a'·Z`.
pub fn check_certificate(set: &DefiningSet, cert: &BchCertificate) -> bool {
    let n = set.n();
    if cert.run_length == 0 {
        return true;
    }
    let Some(b) = mod_inverse(cert.multiplier % n, n) else { return false };
    (0..cert.run_length).all(|i| {
        let k = (cert.run_start + i) % n;
        set.contains(((k as u128 * b as u128) % n as u128) as u64)
    })
}

/// `{a·k mod n : k in ranges} ⊆ set`, with inclusive ranges.
pub fn check_membership(set: &DefiningSet, a: u64, ranges: &[(u64, u64)]) -> bool {
    let n = set.n();
    ranges.iter().all(|&(lo, hi)| (lo..=hi).all(|k| set.contains(((a as u128 * k as u128) % n as u128) as u64)))
}

/// One instance of a run statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaFixture {
    pub lemma_id: &'static str,
    pub m: u32,
    pub h: Option<u32>,
    pub family: Family,
    pub parity: u8,
    pub multiplier: u64,
    pub ranges: Vec<(u64, u64)>,
    /// Check against the code's defining set (with the `(x - 1)` factor)
    /// instead of the bare parity set.
    pub code_set: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaVerdict {
    pub lemma_id: String,
    pub m: u32,
    pub h: Option<u32>,
    pub verdict: Verdict,
}

/// Identifiers of the run statements, in a fixed order.
pub const LEMMA_IDS: [&str; 11] = [
    "s1-run-m0mod4",
    "s1-run-m2mod4",
    "s0-run-even",
    "d1-run-m1mod4",
    "d0-run-m1mod4",
    "d1-run-m3mod4",
    "d0-run-m3mod4",
    "d1-run-m0mod4",
    "d1-run-m2mod4",
    "d0-run-even",
    "d-run-small-m",
];

fn fixture(id: &'static str, m: u32, h: Option<u32>, family: Family, parity: u8, a: u64, ranges: Vec<(u64, u64)>) -> LemmaFixture {
    LemmaFixture { lemma_id: id, m, h, family, parity, multiplier: a, ranges, code_set: false }
}

/// Instances of statement `id` at `(m, h)`, or `None` when its hypotheses fail.
/// Statements about S sets ignore `h` and are only instantiated for `h = None`.
pub fn lemma_fixture(id: &str, m: u32, h: Option<u32>) -> Option<Vec<LemmaFixture>> {
    let p = |e: u32| 1u64 << e;
    let q = p(m);
    let two_l = 1u32 << m.trailing_zeros();
    let e = m >> m.trailing_zeros();
    let lid = LEMMA_IDS.iter().copied().find(|&x| x == id)?;
    let d_h = |lo: u32, hi: u32| h.filter(|&h| h >= lo.max(1) && h <= hi);
    let f = match (lid, h) {
        ("s1-run-m0mod4", None) if m % 4 == 0 && m >= 4 => {
            let t = p((m - 2) / 2);
            vec![fixture(lid, m, h, Family::S, 1, p((m + 2) / 2) - 1, vec![(1, t), (q - t - 1, q - 2)])]
        }
        ("s1-run-m2mod4", None) if m % 4 == 2 && m >= 6 => {
            let t = p((m - 4) / 2);
            vec![fixture(lid, m, h, Family::S, 1, p((m + 4) / 2) - 1, vec![(1, t), (q - t - 1, q - 2)])]
        }
        ("s0-run-even", None) if m % 2 == 0 && e > 1 && m >= 4 => {
            let t = p((m - two_l) / 2);
            vec![fixture(lid, m, h, Family::S, 0, p((m + two_l) / 2) + 1, vec![(1, t), (q - t - 1, q - 1)])]
        }
        ("d1-run-m1mod4", Some(_)) if m % 4 == 1 && m >= 5 => {
            let h = d_h(1, (m - 3) / 2)?;
            let t = p((m - 1) / 2);
            vec![fixture(lid, m, Some(h), Family::D, 1, t - 1, vec![(0, t + 2)])]
        }
        ("d0-run-m1mod4", Some(_)) if m % 4 == 1 && m >= 5 => {
            let h = d_h(1, (m - 3) / 2)?;
            let t = p((m - 1) / 2);
            let lo = if h % 2 == 1 { q - t - 3 } else { q - t - 1 };
            vec![fixture(lid, m, Some(h), Family::D, 0, t - 1, vec![(lo, q - 2)])]
        }
        ("d1-run-m3mod4", Some(_)) if m % 4 == 3 && m >= 7 => {
            let h = d_h(1, (m - 3) / 2)?;
            let t = p((m - 1) / 2);
            let hi = if h % 2 == 0 { t + 2 } else { t };
            vec![fixture(lid, m, Some(h), Family::D, 1, p((m + 1) / 2) - 1, vec![(0, hi)])]
        }
        ("d0-run-m3mod4", Some(_)) if m % 4 == 3 && m >= 7 => {
            let h = d_h(1, (m - 3) / 2)?;
            let t = p((m - 1) / 2);
            vec![fixture(lid, m, Some(h), Family::D, 0, p((m + 1) / 2) - 1, vec![(q - t - 1, q - 2)])]
        }
        ("d1-run-m0mod4", Some(_)) if m % 4 == 0 && m >= 8 => {
            let h = d_h(1, (m - 4) / 2)?;
            let t = p((m - 2) / 2);
            let hi = if h % 2 == 0 { t + 2 } else { t };
            vec![fixture(lid, m, Some(h), Family::D, 1, p((m + 2) / 2) - 1, vec![(1, hi), (q - t - 1, q - 2)])]
        }
        ("d1-run-m2mod4", Some(_)) if m % 4 == 2 && m >= 10 => {
            let h = d_h(1, (m - 6) / 2)?;
            let t = p((m - 4) / 2);
            let hi = if h >= 4 && h % 2 == 0 { t + 2 } else { t };
            vec![fixture(lid, m, Some(h), Family::D, 1, p((m + 4) / 2) - 1, vec![(1, hi), (q - t - 1, q - 2)])]
        }
        ("d0-run-even", Some(_)) if m % 2 == 0 && e > 1 && m >= 6 => {
            let h = d_h(1, two_l)?;
            let t = p((m - two_l) / 2);
            let lo = if h == two_l { q - t + 1 } else { q - t - 1 };
            vec![fixture(lid, m, Some(h), Family::D, 0, p((m + two_l) / 2) + 1, vec![(1, t), (lo, q - 1)])]
        }
        ("d-run-small-m", Some(h)) => small_m_runs(m, h)?,
        _ => return None,
    };
    Some(f)
}

/// Runs for `m = 3, 4, 6` stated with an explicit primitive root `α^g`.
fn small_m_runs(m: u32, h: u32) -> Option<Vec<LemmaFixture>> {
    let id = "d-run-small-m";
    let code = |parity: u8, g: u64, ranges: Vec<(u64, u64)>| LemmaFixture {
        lemma_id: id,
        m,
        h: Some(h),
        family: Family::D,
        parity,
        multiplier: g,
        ranges,
        code_set: true,
    };
    let out = match (m, h) {
        (3, 1) => vec![code(1, 3, vec![(0, 2)]), code(0, 3, vec![(5, 6)])],
        (3, 2) => vec![code(1, 3, vec![(0, 0), (5, 6)]), code(0, 3, vec![(1, 2)])],
        (4, 1) => vec![code(1, 13, vec![(0, 2), (13, 14)])],
        (4, 2) => vec![code(1, 13, vec![(0, 4)])],
        (6, 1) => vec![code(1, 38, vec![(0, 2), (61, 62)]), code(0, 5, vec![(0, 4), (59, 62)])],
        (6, 2) => vec![code(1, 38, vec![(0, 2), (55, 62)]), code(0, 5, vec![(0, 4), (61, 62)])],
        _ => return None,
    };
    Some(out)
}

fn fixture_set(table: &CosetTable, f: &LemmaFixture) -> Result<DefiningSet> {
    let id = match f.family {
        Family::S => CodeId::s(f.m, f.parity),
        Family::D => CodeId::d(f.m, f.h.unwrap_or(0), f.parity),
        Family::TangDing => CodeId::tang_ding(f.m, f.parity),
    };
    if f.code_set {
        return id.defining_set(table);
    }
    match f.family {
        Family::S => table.t_set(f.parity),
        Family::D => table.d_set(f.h.unwrap_or(0), f.parity),
        Family::TangDing => table.n_set(f.parity),
    }
}

/// Evaluates one fixture.
pub fn run_fixture(table: &CosetTable, f: &LemmaFixture) -> Result<bool> {
    let set = fixture_set(table, f)?;
    Ok(check_membership(&set, f.multiplier, &f.ranges))
}

/// Verdicts for every statement, every `m` in `3..=max_m` and every `h`.
pub fn lemma_suite(max_m: u32) -> Result<Vec<LemmaVerdict>> {
    let per_m: Vec<Result<Vec<LemmaVerdict>>> = (3..=max_m.min(26))
        .into_par_iter()
        .map(|m| {
            let table = CosetTable::new(m)?;
            let mut out = Vec::new();
            for id in LEMMA_IDS {
                let hs: Vec<Option<u32>> = if id.starts_with('s') {
                    vec![None]
                } else {
                    (1..=max_h(m)).map(Some).collect()
                };
                for h in hs {
                    let verdict = match lemma_fixture(id, m, h) {
                        None => Verdict::Skip,
                        Some(fs) => {
                            let mut ok = true;
                            for f in &fs {
                                ok &= run_fixture(&table, f)?;
                            }
                            if ok {
                                Verdict::Pass
                            } else {
                                Verdict::Fail
                            }
                        }
                    };
                    out.push(LemmaVerdict { lemma_id: id.to_string(), m, h, verdict });
                }
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for r in per_m {
        all.extend(r?);
    }
    Ok(all)
}

/// Closed-form lower bound on the minimum distance, or `None` outside the
/// covered parameter regions.
pub fn theorem_bound(family: Family, m: u32, h: Option<u32>, parity: u8) -> Option<u64> {
    let p = |e: u32| 1u64 << e;
    let l = m.trailing_zeros();
    let two_l = 1u32 << l;
    let e = m >> l;
    let mut best: Option<u64> = None;
    let mut offer = |b: u64| best = Some(best.map_or(b, |x| x.max(b)));
    match (family, parity) {
        (Family::S, 1) if m % 2 == 0 && m > 2 => offer(if l >= 2 { p(m / 2) + 2 } else { p((m - 2) / 2) + 2 }),
        (Family::S, 0) if m % 2 == 0 && m > 2 && e >= 3 => offer(p((m - two_l + 2) / 2) + 2),
        (Family::D, _) => {
            let h = h?;
            check_h(m, h).ok()?;
            if m % 2 == 0 {
                if parity == 1 {
                    if l >= 2 && m >= 8 && h <= (m - 4) / 2 {
                        offer(if h % 2 == 0 { p(m / 2) + 4 } else { p(m / 2) + 2 });
                    }
                    if m == 4 {
                        offer(p(m / 2) + 2);
                    }
                    if l == 1 && m >= 10 && h <= (m - 6) / 2 {
                        if h >= 4 && h % 2 == 0 {
                            offer(p((m - 2) / 2) + 4);
                        } else if h <= 3 || h % 2 == 1 {
                            offer(p((m - 2) / 2) + 2);
                        }
                    }
                    if m == 6 {
                        offer(if h % 2 == 0 { p(2) + 4 } else { p(2) + 2 });
                    }
                } else if e >= 3 && h <= two_l {
                    let base = p((m - two_l + 2) / 2);
                    offer(if h == two_l { base } else { base + 2 });
                }
            } else if m == 3 {
                offer(if parity == 1 { 4 } else { 3 });
            } else if h <= (m - 3) / 2 {
                let t = p((m - 1) / 2);
                match (m % 4, parity) {
                    (1, 1) => offer(t + 4),
                    (1, _) => offer(if h % 2 == 0 { t + 1 } else { t + 3 }),
                    (3, 1) => offer(if h % 2 == 0 { t + 4 } else { t + 2 }),
                    (3, _) => offer(t + 1),
                    _ => {}
                }
            }
        }
        _ => {}
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_empty_sets() {
        let full = DefiningSet::from_residues(4, 0..15).unwrap();
        assert_eq!(bch_bound(&full, &MultiplierSearch::All).unwrap().implied_bound, 16);
        let empty = DefiningSet::empty(4).unwrap();
        assert_eq!(bch_bound(&empty, &MultiplierSearch::All).unwrap().implied_bound, 1);
    }

    #[test]
    fn narrow_sense_bch() {
        let set = DefiningSet::from_residues(4, [1, 3]).unwrap();
        let c = bch_bound(&set, &MultiplierSearch::Only(vec![1])).unwrap();
        assert_eq!((c.run_start, c.run_length, c.implied_bound), (1, 4, 5));
        assert!(check_certificate(&set, &c));
    }

    #[test]
    fn circular_runs_wrap() {
        let set = DefiningSet::from_residues(3, [0, 3]).unwrap();
        let c = bch_bound(&set, &MultiplierSearch::Only(vec![1])).unwrap();
        assert_eq!((c.run_start, c.run_length), (5, 3));
        assert!(check_certificate(&set, &c));
    }

    #[test]
    fn theorem_regions() {
        assert_eq!(theorem_bound(Family::S, 12, None, 1), Some(66));
        assert_eq!(theorem_bound(Family::D, 6, Some(1), 0), Some(10));
        assert_eq!(theorem_bound(Family::D, 5, Some(1), 1), Some(8));
        assert_eq!(theorem_bound(Family::S, 7, None, 1), None);
        assert_eq!(theorem_bound(Family::D, 8, Some(4), 1), None);
    }

    #[test]
    fn first_run_statement_at_m8() {
        let table = CosetTable::new(8).unwrap();
        let f = &lemma_fixture("s1-run-m0mod4", 8, None).unwrap()[0];
        assert_eq!(f.multiplier, 31);
        assert_eq!(f.ranges, vec![(1, 8), (247, 254)]);
        assert!(run_fixture(&table, f).unwrap());
    }
}
