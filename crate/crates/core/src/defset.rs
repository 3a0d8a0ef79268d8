//! Defining sets of binary cyclic codes of length `2^m - 1`.

use crate::cosets::{coset_elements, coset_size, gcd, leader_of};
use crate::error::{Error, Result};
use serde::Serialize;

/// A union of cyclotomic cosets, stored by sorted leaders, plus a flag for an
/// extra root at `α^0` contributed by an `(x - 1)` factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DefiningSet {
    m: u32,
    n: u64,
    leaders: Vec<u64>,
    adjoin_zero: bool,
}

impl DefiningSet {
    /// Validates and normalizes a list of leaders.
    pub fn new(m: u32, leaders: Vec<u64>, adjoin_zero: bool) -> Result<Self> {
        if !(2..=26).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let n = (1u64 << m) - 1;
        for &j in &leaders {
            if j >= n || leader_of(j, m) != j {
                return Err(Error::NotALeader(j));
            }
        }
        let mut leaders = leaders;
        leaders.sort_unstable();
        leaders.dedup();
        if adjoin_zero && leaders.first() == Some(&0) {
            return Err(Error::RepeatedRoot);
        }
        Ok(DefiningSet { m, n, leaders, adjoin_zero })
    }

    pub(crate) fn from_sorted_leaders(m: u32, leaders: Vec<u64>, adjoin_zero: bool) -> Self {
        DefiningSet { m, n: (1u64 << m) - 1, leaders, adjoin_zero }
    }

    /// Closure under doubling of arbitrary residues (reduced mod `n`).
    pub fn from_residues<I: IntoIterator<Item = u64>>(m: u32, residues: I) -> Result<Self> {
        if !(2..=26).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let n = (1u64 << m) - 1;
        let mut leaders: Vec<u64> = residues.into_iter().map(|r| leader_of(r % n, m)).collect();
        leaders.sort_unstable();
        leaders.dedup();
        Ok(Self::from_sorted_leaders(m, leaders, false))
    }

    pub fn empty(m: u32) -> Result<Self> {
        Self::new(m, Vec::new(), false)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn leaders(&self) -> &[u64] {
        &self.leaders
    }

    pub fn adjoin_zero(&self) -> bool {
        self.adjoin_zero
    }

    /// Whether 0 is a root, either as a coset or through the adjoined factor.
    pub fn contains_zero(&self) -> bool {
        self.adjoin_zero || self.leaders.first() == Some(&0)
    }

    /// Returns a copy with the `(x - 1)` factor adjoined.
    pub fn with_adjoined_zero(&self) -> Result<Self> {
        if self.leaders.first() == Some(&0) {
            return Err(Error::RepeatedRoot);
        }
        let mut out = self.clone();
        out.adjoin_zero = true;
        Ok(out)
    }

    /// Same roots with 0 folded into the leader list.
    pub fn normalized(&self) -> Self {
        let mut out = self.clone();
        if out.adjoin_zero {
            out.adjoin_zero = false;
            out.leaders.insert(0, 0);
        }
        out
    }

    /// Number of roots counted with the adjoined zero.
    pub fn size(&self) -> u64 {
        self.leaders.iter().map(|&j| coset_size(j, self.m) as u64).sum::<u64>() + self.adjoin_zero as u64
    }

    pub fn contains(&self, i: u64) -> bool {
        let i = i % self.n;
        (i == 0 && self.adjoin_zero) || self.leaders.binary_search(&leader_of(i, self.m)).is_ok()
    }

    /// All roots as sorted residues; the adjoined zero appears once.
    pub fn expanded(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self.leaders.iter().flat_map(|&j| coset_elements(j, self.m)).collect();
        if self.adjoin_zero {
            out.push(0);
        }
        out.sort_unstable();
        out
    }

    /// Membership bitmap over `0..n`.
    pub fn bitmap(&self) -> Vec<u64> {
        let mut bits = vec![0u64; (self.n as usize).div_ceil(64)];
        for &j in &self.leaders {
            for x in coset_elements(j, self.m) {
                bits[(x / 64) as usize] |= 1 << (x % 64);
            }
        }
        if self.adjoin_zero {
            bits[0] |= 1;
        }
        bits
    }

    /// Image under multiplication by the unit `a`.
    pub fn scaled(&self, a: u64) -> Result<Self> {
        if gcd(a, self.n) != 1 {
            return Err(Error::NotAUnit { a, n: self.n });
        }
        let mut leaders: Vec<u64> = self
            .leaders
            .iter()
            .map(|&j| leader_of(((j as u128 * a as u128) % self.n as u128) as u64, self.m))
            .collect();
        leaders.sort_unstable();
        Ok(DefiningSet { m: self.m, n: self.n, leaders, adjoin_zero: self.adjoin_zero })
    }

    /// Leaders of the cosets not in this set; 0 is included unless it is a root.
    pub fn complement(&self) -> Self {
        let mut leaders = Vec::new();
        if !self.contains_zero() {
            leaders.push(0);
        }
        let half = 1u64 << (self.m - 1);
        let mut i = 1;
        while i < half {
            if leader_of(i, self.m) == i && self.leaders.binary_search(&i).is_err() {
                leaders.push(i);
            }
            i += 2;
        }
        Self::from_sorted_leaders(self.m, leaders, false)
    }

    /// Image under negation modulo `n`.
    pub fn negated(&self) -> Self {
        self.scaled(self.n - 1).expect("-1 is a unit")
    }

    /// Whether both sets have the same roots, ignoring how 0 is recorded.
    pub fn same_roots(&self, other: &DefiningSet) -> bool {
        self.n == other.n && self.normalized().leaders == other.normalized().leaders
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(DefiningSet::new(4, vec![2], false).is_err());
        assert!(DefiningSet::new(4, vec![0, 1], true).is_err());
        let s = DefiningSet::new(4, vec![7, 1], true).unwrap();
        assert_eq!(s.leaders(), &[1, 7]);
        assert_eq!(s.size(), 9);
        assert!(s.contains(0) && s.contains(14) && !s.contains(3));
    }

    #[test]
    fn complement_and_scaling() {
        let s = DefiningSet::new(5, vec![1, 3, 5], false).unwrap();
        let c = s.complement();
        assert_eq!(c.leaders(), &[0, 7, 11, 15]);
        assert_eq!(s.scaled(25).unwrap().leaders(), &[1, 7, 11]);
    }
}
