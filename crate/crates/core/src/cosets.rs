//! 2-cyclotomic cosets modulo `2^m - 1` and the parity functionals built on them.
//!
//! Multiplication by 2 modulo `2^m - 1` is a left rotation of the `m`-bit
//! representation, so coset membership is computed by rotation rather than by
//! tables indexed by residue.

use crate::defset::DefiningSet;
use crate::error::{Error, Result};

/// Binary weight of `i`.
pub fn wt2(i: u64) -> u32 {
    i.count_ones()
}

/// Largest odd divisor of `i`.
pub fn odd_part(i: u64) -> Result<u64> {
    if i == 0 {
        return Err(Error::OddPartOfZero);
    }
    Ok(i >> i.trailing_zeros())
}

/// `ε_a^(t)`: 1 when `a = 2^t - 1`, otherwise the number of doublings of `a`
/// that stay at most `2^t - 1`, which equals `ceil(log2((2^t - 1)/a))`.
pub fn epsilon(a: u64, t: u32) -> Result<u32> {
    if t == 0 || t > 62 || a == 0 || a > (1u64 << t) - 1 {
        return Err(Error::EpsilonDomain { a, t });
    }
    let top = (1u64 << t) - 1;
    if a == top {
        return Ok(1);
    }
    let mut k = 0;
    let mut x = a;
    while x <= top {
        k += 1;
        x <<= 1;
    }
    Ok(k)
}

/// Left rotation of the low `m` bits, i.e. multiplication by 2 modulo `2^m - 1`.
#[inline]
pub fn rotl(i: u64, m: u32) -> u64 {
    let mask = (1u64 << m) - 1;
    ((i << 1) | (i >> (m - 1))) & mask
}

/// Smallest element of the coset containing `i`, for `i < 2^m - 1`.
pub fn leader_of(i: u64, m: u32) -> u64 {
    let mut best = i;
    let mut x = i;
    for _ in 1..m {
        x = rotl(x, m);
        if x < best {
            best = x;
        }
    }
    best
}

/// Size of the coset containing `i`.
pub fn coset_size(i: u64, m: u32) -> u32 {
    let mut x = rotl(i, m);
    let mut l = 1;
    while x != i {
        x = rotl(x, m);
        l += 1;
    }
    l
}

/// Elements of the coset containing `i`, in doubling order starting at `i`.
pub fn coset_elements(i: u64, m: u32) -> Vec<u64> {
    let mut out = vec![i];
    let mut x = rotl(i, m);
    while x != i {
        out.push(x);
        x = rotl(x, m);
    }
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverse of `a` modulo `n`, if it exists.
pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(n as i128) as u64)
}

/// All cosets modulo `2^m - 1` with leaders, sizes and even-element counts.
#[derive(Clone, Debug)]
pub struct CosetTable {
    m: u32,
    n: u64,
    leaders: Vec<u64>,
    sizes: Vec<u32>,
    rhos: Vec<u32>,
}

impl CosetTable {
    pub fn new(m: u32) -> Result<Self> {
        if !(2..=26).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let n = (1u64 << m) - 1;
        let mut leaders = vec![0u64];
        let mut sizes = vec![1u32];
        let mut rhos = vec![1u32];
        let half = 1u64 << (m - 1);
        let mut i = 1;
        while i < half {
            if leader_of(i, m) == i {
                let mut l = 1;
                let mut evens = 0;
                let mut x = rotl(i, m);
                while x != i {
                    l += 1;
                    evens += (x & 1 == 0) as u32;
                    x = rotl(x, m);
                }
                leaders.push(i);
                sizes.push(l);
                rhos.push(evens);
            }
            i += 2;
        }
        Ok(CosetTable { m, n, leaders, sizes, rhos })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Sorted coset leaders `Γ`.
    pub fn leaders(&self) -> &[u64] {
        &self.leaders
    }

    pub fn index_of(&self, leader: u64) -> Result<usize> {
        self.leaders.binary_search(&leader).map_err(|_| Error::NotALeader(leader))
    }

    pub fn leader_of(&self, i: u64) -> u64 {
        leader_of(i % self.n, self.m)
    }

    pub fn size_of(&self, leader: u64) -> Result<u32> {
        Ok(self.sizes[self.index_of(leader)?])
    }

    /// Number of even elements in the coset of `leader`.
    pub fn rho_of(&self, leader: u64) -> Result<u32> {
        Ok(self.rhos[self.index_of(leader)?])
    }

    pub fn coset(&self, leader: u64) -> Vec<u64> {
        coset_elements(leader, self.m)
    }

    /// `v_i = m ρ_i / l_i mod 2`.
    pub fn v_value(&self, leader: u64) -> Result<u8> {
        let idx = self.index_of(leader)?;
        let (l, rho) = (self.sizes[idx] as u64, self.rhos[idx] as u64);
        let product = self.m as u64 * rho;
        if product % l != 0 {
            return Err(Error::CorruptTable { size: l, product });
        }
        Ok(((product / l) % 2) as u8)
    }

    /// `u_j` for the given `h`: differs from `v_j` only on leaders `j <= 2^h - 1`.
    pub fn u_value(&self, leader: u64, h: u32) -> Result<u8> {
        check_h(self.m, h)?;
        let v = self.v_value(leader)?;
        if leader == 1 {
            return Ok(((v as u32 + h + 1) % 2) as u8);
        }
        if leader != 0 && leader <= (1u64 << h) - 1 {
            let kappa = (epsilon(leader, h)? % 2) as u8;
            return Ok(kappa ^ v);
        }
        Ok(v)
    }

    pub fn parity_tables(&self, h: Option<u32>) -> Result<ParityTables> {
        let v = self.leaders.iter().map(|&j| self.v_value(j)).collect::<Result<Vec<_>>>()?;
        let u = match h {
            Some(h) => {
                Some(self.leaders.iter().map(|&j| self.u_value(j, h)).collect::<Result<Vec<_>>>()?)
            }
            None => None,
        };
        Ok(ParityTables { m: self.m, h, leaders: self.leaders.clone(), v, u })
    }

    /// `T_(parity, m)`: union of cosets with `v_i = parity`.
    pub fn t_set(&self, parity: u8) -> Result<DefiningSet> {
        check_parity(parity)?;
        let mut leaders = Vec::new();
        for &j in &self.leaders {
            if self.v_value(j)? == parity {
                leaders.push(j);
            }
        }
        Ok(DefiningSet::from_sorted_leaders(self.m, leaders, false))
    }

    /// `D_(parity, m)` for the given `h`: union of cosets with `u_i = parity`.
    pub fn d_set(&self, h: u32, parity: u8) -> Result<DefiningSet> {
        check_parity(parity)?;
        check_h(self.m, h)?;
        let mut leaders = Vec::new();
        for &j in &self.leaders {
            if self.u_value(j, h)? == parity {
                leaders.push(j);
            }
        }
        Ok(DefiningSet::from_sorted_leaders(self.m, leaders, false))
    }

    /// `{1 <= j <= n-1 : wt2(j) = parity mod 2}`.
    pub fn n_set(&self, parity: u8) -> Result<DefiningSet> {
        check_parity(parity)?;
        let leaders =
            self.leaders.iter().copied().filter(|&j| j != 0 && wt2(j) % 2 == parity as u32).collect();
        Ok(DefiningSet::from_sorted_leaders(self.m, leaders, false))
    }

    /// Total size of a set of leaders.
    pub fn expanded_size(&self, set: &DefiningSet) -> u64 {
        set.leaders().iter().map(|&j| self.size_of(j).unwrap_or(0) as u64).sum::<u64>()
            + set.adjoin_zero() as u64
    }

    /// Checks the even-count of `C_a` against the digit expansion of `a` in
    /// base `2^(l_a)`: `ρ_a = l_a - wt2(a mod 2^(l_a))`.
    pub fn verify_decomposition(&self, a: u64) -> Result<DecompositionReport> {
        if a % 2 == 0 {
            return Err(Error::EvenResidue(a));
        }
        if a == 0 || a >= self.n {
            return Err(Error::NotALeader(a));
        }
        let m = self.m;
        let l = coset_size(a, m);
        let digits = a & ((1u64 << l) - 1);
        let reps = m / l;
        let s_a: u64 = (0..reps).map(|r| 1u64 << (r * l)).sum();
        let expansion_ok = digits * s_a == a;
        let nonzero_digits = wt2(digits) - 1;
        let rho_formula = l - nonzero_digits - 1;
        let rho_enumerated = coset_elements(a, m).iter().filter(|&&x| x % 2 == 0).count() as u32;
        let full_length_formula = (l == m).then(|| m - wt2(a));
        let consistent = expansion_ok
            && rho_formula == rho_enumerated
            && full_length_formula.map_or(true, |f| f == rho_enumerated);
        Ok(DecompositionReport {
            a,
            coset_size: l,
            nonzero_digits,
            rho_formula,
            rho_enumerated,
            consistent,
        })
    }

    /// Whether `a*b` has a full-length coset for every odd `b` up to
    /// `2^(m/2)` (even `m`) or `2^((m+1)/2) - 1` (odd `m`).
    pub fn verify_full_length(&self, a: u64) -> Result<bool> {
        if gcd(a, self.n) != 1 {
            return Err(Error::NotAUnit { a, n: self.n });
        }
        let bmax = if self.m % 2 == 0 { 1u64 << (self.m / 2) } else { (1u64 << ((self.m + 1) / 2)) - 1 };
        Ok((1..=bmax)
            .step_by(2)
            .all(|b| coset_size(((a as u128 * b as u128) % self.n as u128) as u64, self.m) == self.m))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DecompositionReport {
    pub a: u64,
    pub coset_size: u32,
    pub nonzero_digits: u32,
    pub rho_formula: u32,
    pub rho_enumerated: u32,
    pub consistent: bool,
}

/// The `v` and (optionally) `u` functionals over all leaders.
#[derive(Clone, Debug)]
pub struct ParityTables {
    pub m: u32,
    pub h: Option<u32>,
    pub leaders: Vec<u64>,
    pub v: Vec<u8>,
    pub u: Option<Vec<u8>>,
}

/// Largest admissible `h`, `ceil(m/2)`.
pub fn max_h(m: u32) -> u32 {
    m.div_ceil(2)
}

pub fn check_h(m: u32, h: u32) -> Result<()> {
    if h == 0 || h > max_h(m) {
        return Err(Error::HOutOfRange { m, h, max: max_h(m) });
    }
    Ok(())
}

pub fn check_parity(parity: u8) -> Result<()> {
    if parity > 1 {
        return Err(Error::BadParity(parity));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_functions() {
        assert_eq!(wt2(13), 3);
        assert_eq!(odd_part(12).unwrap(), 3);
        assert_eq!(odd_part(64).unwrap(), 1);
        assert!(odd_part(0).is_err());
        assert_eq!(epsilon(7, 3).unwrap(), 1);
        assert_eq!(epsilon(1, 3).unwrap(), 3);
        assert_eq!(epsilon(3, 3).unwrap(), 2);
        assert!(epsilon(8, 3).is_err());
    }

    #[test]
    fn m4_table() {
        let t = CosetTable::new(4).unwrap();
        assert_eq!(t.leaders(), &[0, 1, 3, 5, 7]);
        assert_eq!(t.coset(5), vec![5, 10]);
        assert_eq!(t.rho_of(1).unwrap(), 3);
        assert_eq!(t.v_value(1).unwrap(), 1);
        assert_eq!(t.v_value(5).unwrap(), 0);
        assert_eq!(t.v_value(0).unwrap(), 0);
        assert_eq!(t.u_value(3, 2).unwrap(), 1);
        assert_eq!(t.t_set(1).unwrap().leaders(), &[1, 7]);
    }

    #[test]
    fn m5_coset() {
        let t = CosetTable::new(5).unwrap();
        assert_eq!(t.coset(7), vec![7, 14, 28, 25, 19]);
        assert_eq!(t.u_value(1, 1).unwrap(), t.v_value(1).unwrap());
    }

    #[test]
    fn inverse_mod() {
        assert_eq!(mod_inverse(7, 15), Some(13));
        assert_eq!(mod_inverse(5, 63), Some(38));
        assert_eq!(mod_inverse(3, 15), None);
    }
}
