//! Minimum distance of binary linear codes.
//!
//! Two engines are provided: a Gray-code walk over all nonzero messages, and
//! Brouwer–Zimmermann enumeration over information sets. For cyclic codes the
//! latter uses a single systematic window: every `k` cyclically consecutive
//! positions form an information set, so after all messages of weight `<= w`
//! have been tried, any codeword not yet seen has at least `w + 1` ones in each
//! of the `n` windows, hence weight at least `ceil(n (w + 1) / k)`.

use crate::codes::BinaryCyclicCode;
use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Default dimension limit for the exhaustive engine.
pub const EXHAUSTIVE_LIMIT: usize = 28;

/// Engine selection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Engine {
    /// Exhaustive for `k <= 20`, cyclic Brouwer–Zimmermann otherwise.
    Auto,
    Exhaustive,
    /// Brouwer–Zimmermann over the cyclic windows.
    Cyclic,
    /// Brouwer–Zimmermann over column-disjoint information sets.
    Disjoint,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct DistanceOptions {
    pub engine: Engine,
    /// Maximum number of codewords to evaluate.
    pub budget: u64,
    /// A lower bound already known to hold, such as the BCH bound.
    pub known_lower_bound: Option<u32>,
    /// Random information sets tried for low-weight codewords before enumeration.
    pub probe_iterations: u32,
    /// Message weight enumerated on each random information set.
    pub probe_depth: usize,
    /// Seed for the random information sets.
    pub seed: u64,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            engine: Engine::Auto,
            budget: 1 << 40,
            known_lower_bound: None,
            probe_iterations: 256,
            probe_depth: 2,
            seed: 0x5eed,
        }
    }
}

/// Outcome of a distance computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceResult {
    /// Smallest weight found.
    pub upper: u32,
    /// Proven lower bound.
    pub lower: u32,
    /// Whether `lower == upper`.
    pub proven: bool,
    /// Codewords evaluated.
    pub work: u64,
    /// Highest message weight fully enumerated.
    pub levels: u32,
    /// Support of a codeword of weight `upper`.
    pub witness: Vec<usize>,
}

impl DistanceResult {
    pub fn exact(&self) -> Option<u32> {
        self.proven.then_some(self.upper)
    }
}

fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 * 64 {
            return acc;
        }
    }
    acc
}

#[inline(always)]
fn popcnt<const W: usize>(a: &[u64; W]) -> u32 {
    let mut s = 0;
    for x in a {
        s += x.count_ones();
    }
    s
}

#[inline(always)]
fn xor<const W: usize>(a: &[u64; W], b: &[u64; W]) -> [u64; W] {
    let mut out = [0u64; W];
    for i in 0..W {
        out[i] = a[i] ^ b[i];
    }
    out
}

fn pack<const W: usize>(rows: &[Vec<u64>]) -> Vec<[u64; W]> {
    rows.iter()
        .map(|r| {
            let mut a = [0u64; W];
            for (i, &x) in r.iter().enumerate() {
                a[i] = x;
            }
            a
        })
        .collect()
}

/// Padded word counts with compiled kernels.
const WIDTHS: [usize; 12] = [1, 2, 3, 4, 6, 8, 16, 32, 64, 128, 256, 512];

fn width_for(words: usize) -> Option<usize> {
    WIDTHS.iter().copied().find(|&w| w >= words.max(1))
}

macro_rules! with_width {
    ($words:expr, $f:ident ( $($arg:expr),* )) => {
        match width_for($words) {
            Some(1) => Some($f::<1>($($arg),*)),
            Some(2) => Some($f::<2>($($arg),*)),
            Some(3) => Some($f::<3>($($arg),*)),
            Some(4) => Some($f::<4>($($arg),*)),
            Some(6) => Some($f::<6>($($arg),*)),
            Some(8) => Some($f::<8>($($arg),*)),
            Some(16) => Some($f::<16>($($arg),*)),
            Some(32) => Some($f::<32>($($arg),*)),
            Some(64) => Some($f::<64>($($arg),*)),
            Some(128) => Some($f::<128>($($arg),*)),
            Some(256) => Some($f::<256>($($arg),*)),
            Some(512) => Some($f::<512>($($arg),*)),
            _ => None,
        }
    };
}

fn support(words: &[u64], n: usize) -> Vec<usize> {
    (0..n).filter(|&i| (words[i / 64] >> (i % 64)) & 1 == 1).collect()
}

fn gray_walk<const W: usize>(rows: &[Vec<u64>]) -> (u32, Vec<u64>) {
    let rows = pack::<W>(rows);
    let k = rows.len();
    let mut cur = [0u64; W];
    let mut best = u32::MAX;
    let mut best_word = cur;
    for i in 1u64..(1u64 << k) {
        cur = xor(&cur, &rows[i.trailing_zeros() as usize]);
        let wt = popcnt(&cur);
        if wt < best {
            best = wt;
            best_word = cur;
        }
    }
    (best, best_word.to_vec())
}

/// Minimum weight over all nonzero combinations of `rows` (`n` bits each).
pub fn exhaustive_rows(rows: &[Vec<u64>], n: usize, limit: usize) -> Result<DistanceResult> {
    let k = rows.len();
    if k > limit || k > 62 {
        return Err(Error::DimensionTooLarge { k, limit });
    }
    if k == 0 {
        return Ok(DistanceResult { upper: 0, lower: 0, proven: true, work: 0, levels: 0, witness: vec![] });
    }
    let (best, word) = with_width!(n.div_ceil(64), gray_walk(rows))
        .ok_or(Error::DimensionTooLarge { k: n, limit: 64 * 512 })?;
    Ok(DistanceResult {
        upper: best,
        lower: best,
        proven: true,
        work: (1u64 << k) - 1,
        levels: k as u32,
        witness: support(&word, n),
    })
}

/// Exhaustive minimum distance of a cyclic code via a Gray-code walk.
pub fn min_distance_exhaustive(code: &BinaryCyclicCode, limit: usize) -> Result<u32> {
    Ok(exhaustive_rows(&code.generator_rows(), code.n(), limit)?.upper)
}

/// Best leaf found while enumerating one level.
#[derive(Clone, Debug)]
struct LevelBest {
    weight: u32,
    combo: Vec<u32>,
}

fn descend<const W: usize>(
    rows: &[[u64; W]],
    start: usize,
    depth: usize,
    partial: &[u64; W],
    offset: u32,
    combo: &mut Vec<u32>,
    best: &mut LevelBest,
) {
    let k = rows.len();
    if depth == 1 {
        let mut local = best.weight;
        let mut arg = usize::MAX;
        for (j, row) in rows.iter().enumerate().skip(start) {
            let wt = popcnt(&xor(partial, row)) + offset;
            if wt < local {
                local = wt;
                arg = j;
            }
        }
        if arg != usize::MAX {
            best.weight = local;
            best.combo = combo.clone();
            best.combo.push(arg as u32);
        }
        return;
    }
    for j in start..=k - depth {
        combo.push(j as u32);
        let next = xor(partial, &rows[j]);
        descend(rows, j + 1, depth - 1, &next, offset, combo, best);
        combo.pop();
    }
}

/// Lowest-weight sum of exactly `w` rows (weight counted plus `offset`),
/// ties broken by lexicographically smallest index tuple.
fn enumerate_level<const W: usize>(rows: &[Vec<u64>], w: usize, offset: u32) -> (u32, Vec<u32>) {
    let packed = pack::<W>(rows);
    let k = packed.len();
    if w == 0 || w > k {
        return (u32::MAX, Vec::new());
    }
    let per_first: Vec<LevelBest> = (0..=k - w)
        .into_par_iter()
        .map(|i| {
            let mut best = LevelBest { weight: u32::MAX, combo: Vec::new() };
            let mut combo = vec![i as u32];
            if w == 1 {
                best.weight = popcnt(&packed[i]) + offset;
                best.combo = combo;
            } else {
                descend(&packed, i + 1, w - 1, &packed[i], offset, &mut combo, &mut best);
            }
            best
        })
        .collect();
    let mut out = LevelBest { weight: u32::MAX, combo: Vec::new() };
    for b in per_first {
        if b.weight < out.weight {
            out = b;
        }
    }
    (out.weight, out.combo)
}

fn xor_rows(rows: &[Vec<u64>], combo: &[u32], words: usize) -> Vec<u64> {
    let mut acc = vec![0u64; words];
    for &i in combo {
        for (a, b) in acc.iter_mut().zip(&rows[i as usize]) {
            *a ^= b;
        }
    }
    acc
}

fn all_even(rows: &[Vec<u64>]) -> bool {
    rows.iter().all(|r| r.iter().map(|w| w.count_ones()).sum::<u32>() % 2 == 0)
}

fn round_even(x: u32, even: bool) -> u32 {
    if even && x % 2 == 1 {
        x + 1
    } else {
        x
    }
}

/// Brouwer–Zimmermann on a cyclic code using the windows as information sets.
pub fn min_distance_cyclic(code: &BinaryCyclicCode, opts: &DistanceOptions) -> Result<DistanceResult> {
    let n = code.n();
    let k = code.k();
    let r = n - k;
    let full_rows = code.generator_rows();
    if k == 0 {
        return Ok(DistanceResult { upper: 0, lower: 0, proven: true, work: 0, levels: 0, witness: vec![] });
    }
    let even = all_even(&full_rows);
    let redundancy = code.systematic_redundancy();
    let rwords = r.div_ceil(64).max(1);
    width_for(rwords).ok_or(Error::DimensionTooLarge { k: r, limit: 64 * 512 })?;

    let gen = code.generator();
    let mut upper = gen.weight();
    let mut witness = gen.exponents();
    let mut lower = round_even(opts.known_lower_bound.unwrap_or(1).max(1), even);
    let mut work = 0u64;
    let mut levels = 0u32;
    if lower < upper {
        if let Some((wt, s)) =
            probe_low_weight(&full_rows, n, opts.probe_iterations, opts.probe_depth, opts.seed, lower)
        {
            if wt < upper {
                upper = wt;
                witness = s;
            }
        }
    }

    let codeword = |combo: &[u32]| -> Vec<usize> {
        let red = xor_rows(&redundancy, combo, rwords);
        let mut s = support(&red, r);
        s.extend(combo.iter().map(|&i| r + i as usize));
        s
    };

    let level_bound = |w: usize| round_even(((n as u64 * (w as u64 + 1)).div_ceil(k as u64)) as u32, even);
    for w in 1..=k {
        if lower >= upper {
            break;
        }
        // Stop once certifying the current upper bound would overrun the budget.
        let mut needed = 0u128;
        for v in w..=k {
            needed += binomial(k, v);
            if level_bound(v) >= upper || work as u128 + needed > opts.budget as u128 {
                break;
            }
        }
        if work as u128 + needed > opts.budget as u128 {
            break;
        }
        let cost = binomial(k, w);
        let (wt, combo) = with_width!(rwords, enumerate_level(&redundancy, w, w as u32)).unwrap();
        work += cost as u64;
        levels = w as u32;
        if wt < upper {
            upper = wt;
            witness = codeword(&combo);
        }
        lower = lower.max(level_bound(w));
        if w == k {
            lower = upper;
        }
    }
    lower = lower.min(upper);
    Ok(DistanceResult { upper, lower, proven: lower == upper, work, levels, witness })
}

/// Searches random information sets for low-weight codewords, stopping once
/// the weight reaches `target`. Returns the best weight and its support.
pub fn probe_low_weight(
    rows: &[Vec<u64>],
    n: usize,
    iterations: u32,
    depth: usize,
    seed: u64,
    target: u32,
) -> Option<(u32, Vec<usize>)> {
    let k = rows.len();
    let words = n.div_ceil(64).max(1);
    width_for(words)?;
    if k == 0 || iterations == 0 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    let mut best: Option<(u32, Vec<usize>)> = None;
    for _ in 0..iterations {
        order.shuffle(&mut rng);
        let mat = systematic_on(rows, &order);
        for w in 1..=depth.min(k) {
            let (wt, combo) = with_width!(words, enumerate_level(&mat, w, 0)).unwrap();
            if best.as_ref().map_or(true, |(b, _)| wt < *b) {
                best = Some((wt, support(&xor_rows(&mat, &combo, words), n)));
            }
        }
        if best.as_ref().map_or(false, |(b, _)| *b <= target) {
            break;
        }
    }
    best
}

/// Row-reduces `rows` taking pivots in the given column order.
fn systematic_on(rows: &[Vec<u64>], order: &[usize]) -> Vec<Vec<u64>> {
    let k = rows.len();
    let mut mat = rows.to_vec();
    let mut pivot_row = 0;
    for &col in order {
        if pivot_row == k {
            break;
        }
        let bit = |r: &Vec<u64>| (r[col / 64] >> (col % 64)) & 1 == 1;
        let Some(p) = (pivot_row..k).find(|&i| bit(&mat[i])) else { continue };
        mat.swap(pivot_row, p);
        let prow = mat[pivot_row].clone();
        for (i, row) in mat.iter_mut().enumerate() {
            if i != pivot_row && bit(row) {
                for (a, b) in row.iter_mut().zip(&prow) {
                    *a ^= b;
                }
            }
        }
        pivot_row += 1;
    }
    mat
}

/// One block of the disjoint information-set decomposition.
#[derive(Clone, Debug)]
struct InfoBlock {
    rows: Vec<Vec<u64>>,
    rank: usize,
}

/// Repeated Gaussian elimination on column-disjoint blocks, leftmost columns first.
fn information_blocks(rows: &[Vec<u64>], n: usize) -> Vec<InfoBlock> {
    let k = rows.len();
    let mut mat: Vec<Vec<u64>> = rows.to_vec();
    let mut used = vec![false; n];
    let mut blocks = Vec::new();
    loop {
        let mut pivot_row = 0;
        let mut pivots = Vec::new();
        for col in 0..n {
            if used[col] || pivot_row == k {
                continue;
            }
            let bit = |r: &Vec<u64>| (r[col / 64] >> (col % 64)) & 1 == 1;
            let Some(p) = (pivot_row..k).find(|&i| bit(&mat[i])) else { continue };
            mat.swap(pivot_row, p);
            let prow = mat[pivot_row].clone();
            for (i, row) in mat.iter_mut().enumerate() {
                if i != pivot_row && bit(row) {
                    for (a, b) in row.iter_mut().zip(&prow) {
                        *a ^= b;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        if pivots.is_empty() {
            break;
        }
        for &c in &pivots {
            used[c] = true;
        }
        blocks.push(InfoBlock { rows: mat.clone(), rank: pivots.len() });
    }
    blocks
}

/// Brouwer–Zimmermann over column-disjoint information sets of arbitrary rows.
pub fn min_distance_disjoint(rows: &[Vec<u64>], n: usize, opts: &DistanceOptions) -> Result<DistanceResult> {
    let k = rows.len();
    let words = n.div_ceil(64).max(1);
    width_for(words).ok_or(Error::DimensionTooLarge { k: n, limit: 64 * 512 })?;
    if k == 0 {
        return Ok(DistanceResult { upper: 0, lower: 0, proven: true, work: 0, levels: 0, witness: vec![] });
    }
    let even = all_even(rows);
    let blocks = information_blocks(rows, n);
    let weight_of = |r: &Vec<u64>| r.iter().map(|w| w.count_ones()).sum::<u32>();
    let (mut upper, mut witness) = rows
        .iter()
        .map(|r| (weight_of(r), support(r, n)))
        .min_by_key(|(w, _)| *w)
        .unwrap();
    let mut lower = round_even(opts.known_lower_bound.unwrap_or(1).max(1), even);
    let mut work = 0u64;
    let mut levels = 0u32;
    if lower < upper {
        if let Some((wt, s)) = probe_low_weight(rows, n, opts.probe_iterations, opts.probe_depth, opts.seed, lower) {
            if wt < upper {
                upper = wt;
                witness = s;
            }
        }
    }

    for w in 1..=k {
        if lower >= upper {
            break;
        }
        let active: Vec<&InfoBlock> = blocks.iter().filter(|b| w + b.rank > k).collect();
        let cost = binomial(k, w) * active.len() as u128;
        if work as u128 + cost > opts.budget as u128 {
            break;
        }
        for b in &active {
            let (wt, combo) = with_width!(words, enumerate_level(&b.rows, w, 0)).unwrap();
            if wt < upper {
                upper = wt;
                witness = support(&xor_rows(&b.rows, &combo, words), n);
            }
        }
        work += cost as u64;
        levels = w as u32;
        let bound: usize = blocks.iter().map(|b| (w + 1).saturating_sub(k - b.rank)).sum();
        lower = lower.max(round_even(bound as u32, even));
        if w == k {
            lower = upper;
        }
    }
    lower = lower.min(upper);
    Ok(DistanceResult { upper, lower, proven: lower == upper, work, levels, witness })
}

/// Minimum distance of a cyclic code with the selected engine.
pub fn min_distance(code: &BinaryCyclicCode, opts: &DistanceOptions) -> Result<DistanceResult> {
    match opts.engine {
        Engine::Exhaustive => exhaustive_rows(&code.generator_rows(), code.n(), EXHAUSTIVE_LIMIT),
        Engine::Cyclic => min_distance_cyclic(code, opts),
        Engine::Disjoint => min_distance_disjoint(&code.generator_rows(), code.n(), opts),
        Engine::Auto if code.k() <= 20 => exhaustive_rows(&code.generator_rows(), code.n(), EXHAUSTIVE_LIMIT),
        Engine::Auto => min_distance_cyclic(code, opts),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming_rows() -> Vec<Vec<u64>> {
        vec![vec![0b0001011], vec![0b0010110], vec![0b0101100], vec![0b1011000]]
    }

    #[test]
    fn hamming_exhaustive() {
        let r = exhaustive_rows(&hamming_rows(), 7, 28).unwrap();
        assert_eq!(r.upper, 3);
        assert_eq!(r.witness.len(), 3);
    }

    #[test]
    fn hamming_disjoint() {
        let r = min_distance_disjoint(&hamming_rows(), 7, &DistanceOptions::default()).unwrap();
        assert!(r.proven);
        assert_eq!(r.upper, 3);
    }

    #[test]
    fn zero_budget_is_unproven() {
        let opts = DistanceOptions { budget: 0, ..Default::default() };
        let rows: Vec<Vec<u64>> = (0..8).map(|i| vec![0b111u64 << i]).collect();
        let r = min_distance_disjoint(&rows, 24, &opts).unwrap();
        assert!(!r.proven);
        assert_eq!(r.work, 0);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), 120);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(128, 6), 5_423_611_200);
    }
}
