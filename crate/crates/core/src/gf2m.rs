//! Arithmetic in GF(2^m) for 2 <= m <= 26.
//!
//! Elements are stored in the polynomial basis over the Conway polynomial of
//! degree `m`; the primitive element is the class of `x`.

use crate::error::{Error, Result};

/// Smallest supported extension degree.
pub const MIN_DEGREE: u32 = 2;
/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 26;

/// Conway polynomials over GF(2), bit `i` holding the coefficient of `x^i`.
const CONWAY: [u32; 25] = [
    0x7, 0xb, 0x13, 0x25, 0x5b, 0x83, 0x11d, 0x211, 0x46f, 0x805, 0x10eb, 0x201b, 0x40a9,
    0x8035, 0x1002d, 0x20009, 0x41403, 0x80027, 0x1006f3, 0x200065, 0x401f61, 0x800021,
    0x101e6a9, 0x2000145, 0x40045d3,
];

/// Degrees up to this value get exp/log tables.
const TABLE_DEGREE: u32 = 16;

/// Bit-encoded Conway polynomial of degree `m`, if supported.
pub fn conway_polynomial(m: u32) -> Option<u32> {
    if (MIN_DEGREE..=MAX_DEGREE).contains(&m) {
        Some(CONWAY[(m - MIN_DEGREE) as usize])
    } else {
        None
    }
}

/// An element of GF(2^m) in polynomial-basis coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The field GF(2^m) with a fixed modulus and primitive element.
#[derive(Clone, Debug)]
pub struct FieldSpec {
    m: u32,
    modulus: u32,
    n: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl FieldSpec {
    /// Builds GF(2^m) over the embedded Conway polynomial.
    pub fn new(m: u32) -> Result<Self> {
        let modulus = conway_polynomial(m).ok_or(Error::DegreeOutOfRange(m))?;
        let n = (1u32 << m) - 1;
        let mut field = FieldSpec { m, modulus, n, exp: Vec::new(), log: Vec::new() };
        if m <= TABLE_DEGREE {
            let mut exp = vec![0u32; 2 * n as usize];
            let mut log = vec![0u32; n as usize + 1];
            let mut x = 1u32;
            for i in 0..n {
                exp[i as usize] = x;
                exp[(i + n) as usize] = x;
                log[x as usize] = i;
                x = field.mul_shift(x, 2);
            }
            field.exp = exp;
            field.log = log;
        }
        Ok(field)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Bit-encoded modulus, including the `x^m` term.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Order of the multiplicative group, `2^m - 1`.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn has_tables(&self) -> bool {
        !self.exp.is_empty()
    }

    /// The primitive element `α`.
    pub fn alpha(&self) -> FieldElement {
        FieldElement(2)
    }

    /// Wraps raw coordinates, rejecting values of `m` bits or more.
    pub fn element(&self, bits: u32) -> Result<FieldElement> {
        if bits >> self.m != 0 {
            return Err(Error::ElementOutOfRange { bits, m: self.m });
        }
        Ok(FieldElement(bits))
    }

    /// `α^e` for any integer exponent.
    pub fn alpha_pow(&self, e: i64) -> FieldElement {
        let r = e.rem_euclid(self.n as i64) as u32;
        if self.has_tables() {
            FieldElement(self.exp[r as usize])
        } else {
            self.pow(self.alpha(), r as u64)
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.has_tables() {
            if a.0 == 0 || b.0 == 0 {
                return FieldElement::ZERO;
            }
            let s = self.log[a.0 as usize] + self.log[b.0 as usize];
            FieldElement(self.exp[s as usize])
        } else {
            FieldElement(self.mul_shift(a.0, b.0))
        }
    }

    /// Shift-and-reduce multiplication, independent of the tables.
    pub fn mul_shift(&self, mut a: u32, mut b: u32) -> u32 {
        let top = 1u32 << self.m;
        let mut r = 0u32;
        while b != 0 {
            if b & 1 != 0 {
                r ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus;
            }
        }
        r
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    /// `a^e` by square-and-multiply; `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if a.is_zero() {
            return if e == 0 { FieldElement::ONE } else { FieldElement::ZERO };
        }
        let mut e = e % self.n as u64;
        if self.has_tables() {
            let l = (self.log[a.0 as usize] as u64 * e) % self.n as u64;
            return FieldElement(self.exp[l as usize]);
        }
        let mut base = a;
        let mut r = FieldElement::ONE;
        while e != 0 {
            if e & 1 != 0 {
                r = self.mul(r, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        r
    }

    /// `a^(2^m - 2)`, which is `a^{-1}` for nonzero `a` and `0` for `a = 0`.
    pub fn inverse_via_power(&self, a: FieldElement) -> FieldElement {
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        if self.has_tables() {
            let l = self.log[a.0 as usize];
            return FieldElement(self.exp[((self.n - l) % self.n) as usize]);
        }
        self.pow(a, self.n as u64 - 1)
    }

    /// Absolute trace onto GF(2).
    pub fn trace(&self, a: FieldElement) -> u8 {
        let mut acc = a;
        let mut x = a;
        for _ in 1..self.m {
            x = self.square(x);
            acc = self.add(acc, x);
        }
        debug_assert!(acc.0 <= 1);
        acc.0 as u8
    }

    /// Discrete logarithm to base `α`, for nonzero elements.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        if self.has_tables() {
            return Some(self.log[a.0 as usize]);
        }
        let mut x = FieldElement::ONE;
        for i in 0..self.n {
            if x == a {
                return Some(i);
            }
            x = self.mul(x, self.alpha());
        }
        None
    }
}

/// Distinct prime factors of `n`.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Whether the bit-encoded polynomial of degree `m` is primitive over GF(2).
pub fn is_primitive(modulus: u32, m: u32) -> bool {
    if m < 2 || m > 31 || modulus >> m != 1 || modulus & 1 == 0 {
        return false;
    }
    let n = (1u64 << m) - 1;
    let pow_x = |e: u64| -> u32 {
        let mulm = |mut a: u32, mut b: u32| {
            let mut r = 0u32;
            while b != 0 {
                if b & 1 != 0 {
                    r ^= a;
                }
                b >>= 1;
                a <<= 1;
                if (a >> m) & 1 != 0 {
                    a ^= modulus;
                }
            }
            r
        };
        let mut base = 2u32;
        let mut r = 1u32;
        let mut e = e;
        while e != 0 {
            if e & 1 != 0 {
                r = mulm(r, base);
            }
            base = mulm(base, base);
            e >>= 1;
        }
        r
    };
    pow_x(n) == 1 && prime_factors(n).into_iter().all(|p| pow_x(n / p) != 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_moduli() {
        assert_eq!(FieldSpec::new(2).unwrap().modulus(), 0b111);
        assert_eq!(FieldSpec::new(3).unwrap().modulus(), 0b1011);
        assert_eq!(FieldSpec::new(5).unwrap().modulus(), 0b100101);
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new(27).is_err());
    }

    #[test]
    fn every_table_entry_is_primitive() {
        for m in MIN_DEGREE..=MAX_DEGREE {
            assert!(is_primitive(conway_polynomial(m).unwrap(), m), "m={m}");
        }
    }

    #[test]
    fn trace_examples() {
        let f3 = FieldSpec::new(3).unwrap();
        assert_eq!(f3.trace(FieldElement::ONE), 1);
        assert_eq!(f3.trace(f3.alpha()), 0);
        let f4 = FieldSpec::new(4).unwrap();
        assert_eq!(f4.trace(FieldElement::ONE), 0);
    }

    #[test]
    fn inverse_edge_cases() {
        for m in [2, 9, 17, 26] {
            let f = FieldSpec::new(m).unwrap();
            assert_eq!(f.inverse_via_power(FieldElement::ZERO), FieldElement::ZERO);
            assert_eq!(f.inverse_via_power(FieldElement::ONE), FieldElement::ONE);
            assert_eq!(f.pow(f.alpha(), f.n() as u64), FieldElement::ONE);
            let a = f.alpha_pow(12345);
            assert_eq!(f.mul(a, f.inverse_via_power(a)), FieldElement::ONE);
        }
    }

    #[test]
    fn table_and_shift_agree() {
        let f = FieldSpec::new(8).unwrap();
        for a in 0..256 {
            for b in 0..256 {
                assert_eq!(f.mul(FieldElement(a), FieldElement(b)).0, f.mul_shift(a, b));
            }
        }
    }
}
