//! Binary cyclic codes of length `2^m - 1` built from defining sets.

use crate::cosets::{check_h, check_parity, gcd, CosetTable};
pub use crate::defset::DefiningSet;
use crate::error::{Error, Result};
use crate::gf2m::{FieldElement, FieldSpec};
use crate::gf2poly::Gf2Poly;
use serde::Serialize;
use std::fmt;

/// The code families handled by the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, PartialOrd, Ord)]
pub enum Family {
    /// Codes from the inverse-function sequence, defining set `T`.
    S,
    /// Codes from the trinomial sequence, defining set `D` (needs `h`).
    D,
    /// Codes with defining set `{j : wt2(j) = parity mod 2}`.
    TangDing,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::S => "S",
            Family::D => "D",
            Family::TangDing => "TangDing",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "s" => Ok(Family::S),
            "d" => Ok(Family::D),
            "tangding" | "tang-ding" | "n" => Ok(Family::TangDing),
            _ => Err(format!("unknown family '{s}' (expected S, D or TangDing)")),
        }
    }
}

/// Identifies one code of one family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CodeId {
    pub family: Family,
    pub m: u32,
    pub h: Option<u32>,
    pub parity: u8,
}

impl CodeId {
    pub fn s(m: u32, parity: u8) -> Self {
        CodeId { family: Family::S, m, h: None, parity }
    }

    pub fn d(m: u32, h: u32, parity: u8) -> Self {
        CodeId { family: Family::D, m, h: Some(h), parity }
    }

    pub fn tang_ding(m: u32, parity: u8) -> Self {
        CodeId { family: Family::TangDing, m, h: None, parity }
    }

    /// Validates the parameters against the family.
    pub fn validate(&self) -> Result<()> {
        if !(2..=26).contains(&self.m) {
            return Err(Error::DegreeOutOfRange(self.m));
        }
        check_parity(self.parity)?;
        match (self.family, self.h) {
            (Family::D, Some(h)) => check_h(self.m, h),
            (Family::D, None) => Err(Error::HOutOfRange { m: self.m, h: 0, max: self.m.div_ceil(2) }),
            (_, _) => Ok(()),
        }
    }

    /// Whether the `(x - 1)` factor is adjoined: parity 1 and `m` even, for S and D.
    pub fn adjoins_zero(&self) -> bool {
        self.family != Family::TangDing && self.parity == 1 && self.m % 2 == 0
    }

    pub fn defining_set(&self, table: &CosetTable) -> Result<DefiningSet> {
        self.validate()?;
        let base = match self.family {
            Family::S => table.t_set(self.parity)?,
            Family::D => table.d_set(self.h.unwrap_or(0), self.parity)?,
            Family::TangDing => table.n_set(self.parity)?,
        };
        if self.adjoins_zero() {
            base.with_adjoined_zero()
        } else {
            Ok(base)
        }
    }

    /// Dimension from the defining-set size, without building the generator.
    pub fn dimension(&self, table: &CosetTable) -> Result<u64> {
        let set = self.defining_set(table)?;
        Ok(table.n() - set.size())
    }
}

impl fmt::Display for CodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.h {
            Some(h) => write!(f, "{}{}(m={}, h={})", self.family, self.parity, self.m, h),
            None => write!(f, "{}{}(m={})", self.family, self.parity, self.m),
        }
    }
}

/// A binary cyclic code with its generator polynomial.
#[derive(Clone, Debug)]
pub struct BinaryCyclicCode {
    n: usize,
    defining: DefiningSet,
    generator: Gf2Poly,
}

/// Minimal polynomial over GF(2) of `α^j`.
pub fn minimal_polynomial(field: &FieldSpec, j: u64) -> Gf2Poly {
    let m = field.m();
    let roots = crate::cosets::coset_elements(j % field.n() as u64, m);
    let mut coeffs = vec![FieldElement::ONE];
    for &r in &roots {
        let root = field.alpha_pow(r as i64);
        let mut next = vec![FieldElement::ZERO; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] = field.add(next[i + 1], c);
            next[i] = field.add(next[i], field.mul(c, root));
        }
        coeffs = next;
    }
    assert!(coeffs.iter().all(|c| c.bits() <= 1), "minimal polynomial left GF(2)");
    Gf2Poly::from_exponents(coeffs.iter().enumerate().filter(|(_, c)| c.bits() == 1).map(|(i, _)| i))
}

/// Evaluates a GF(2) polynomial at a field element.
pub fn evaluate(field: &FieldSpec, p: &Gf2Poly, x: FieldElement) -> FieldElement {
    let Some(d) = p.degree() else { return FieldElement::ZERO };
    let mut acc = FieldElement::ZERO;
    for i in (0..=d).rev() {
        acc = field.mul(acc, x);
        if p.coeff(i) {
            acc = field.add(acc, FieldElement::ONE);
        }
    }
    acc
}

/// Product of `(x - α^j)` over the roots of the set.
pub fn generator_polynomial(field: &FieldSpec, set: &DefiningSet) -> Gf2Poly {
    let mut g = Gf2Poly::one();
    for &j in set.leaders() {
        g = g.mul(&minimal_polynomial(field, j));
    }
    if set.adjoin_zero() {
        g = g.mul(&Gf2Poly::from_exponents([0, 1]));
    }
    g
}

impl BinaryCyclicCode {
    /// Builds the code with the given defining set.
    pub fn build(field: &FieldSpec, set: &DefiningSet) -> Result<Self> {
        if set.m() != field.m() {
            return Err(Error::LengthMismatch { expected: field.n() as usize, got: set.n() as usize });
        }
        let generator = generator_polynomial(field, set);
        Ok(BinaryCyclicCode { n: field.n() as usize, defining: set.clone(), generator })
    }

    pub fn id_build(field: &FieldSpec, table: &CosetTable, id: CodeId) -> Result<Self> {
        let set = id.defining_set(table)?;
        Self::build(field, &set)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.n - self.generator.degree().unwrap_or(0)
    }

    pub fn generator(&self) -> &Gf2Poly {
        &self.generator
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.defining
    }

    /// `m(x) g(x)` for a message of `k` bits, ascending.
    pub fn encode(&self, message: &[bool]) -> Result<Vec<bool>> {
        if message.len() != self.k() {
            return Err(Error::LengthMismatch { expected: self.k(), got: message.len() });
        }
        Ok(Gf2Poly::from_bits(message).mul(&self.generator).to_bits(self.n))
    }

    pub fn is_codeword(&self, word: &[bool]) -> Result<bool> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: word.len() });
        }
        Ok(Gf2Poly::from_bits(word).rem(&self.generator).is_zero())
    }

    /// Rows `x^i g(x)` for `i < k`, each packed into words of 64 bits.
    pub fn generator_rows(&self) -> Vec<Vec<u64>> {
        let words = self.n.div_ceil(64);
        (0..self.k())
            .map(|i| {
                let mut row = self.generator.shl(i).words().to_vec();
                row.resize(words, 0);
                row
            })
            .collect()
    }

    /// Redundancy rows `x^(n-k+i) mod g(x)` for `i < k`: the codeword with
    /// message bit `i` on the last `k` positions has these bits on the first
    /// `n - k` positions.
    pub fn systematic_redundancy(&self) -> Vec<Vec<u64>> {
        let r = self.n - self.k();
        let words = r.div_ceil(64).max(1);
        let mut out = Vec::with_capacity(self.k());
        let mut cur = Gf2Poly::monomial(r).rem(&self.generator);
        for _ in 0..self.k() {
            let mut row = cur.words().to_vec();
            row.resize(words, 0);
            out.push(row);
            cur = cur.shl(1);
            if cur.coeff(r) {
                cur = cur.add(&self.generator);
            }
        }
        out
    }
}

/// Which map from a defining set to its dual's defining set is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DualConvention {
    /// `-(Z_n \ Z)`: the defining set of the true dual code.
    NegateComplement,
    /// `Z_n \ Z`: the defining set of the dual after replacing `α` by `α^-1`.
    Complement,
}

/// Defining set of the dual code under the chosen convention.
pub fn dual_defining_set(set: &DefiningSet, convention: DualConvention) -> DefiningSet {
    let c = set.complement();
    match convention {
        DualConvention::NegateComplement => c.negated(),
        DualConvention::Complement => c,
    }
}

/// Smallest unit `a` with `a A = B`, if any.
pub fn multiplier_equivalent(a: &DefiningSet, b: &DefiningSet) -> Option<u64> {
    if a.n() != b.n() || a.size() != b.size() || a.contains_zero() != b.contains_zero() {
        return None;
    }
    let (a, b) = (a.normalized(), b.normalized());
    let n = a.n();
    (1..n.max(2)).find(|&mult| gcd(mult, n) == 1 && a.scaled(mult).map_or(false, |s| s.leaders() == b.leaders()))
}
