//! Dense polynomials over GF(2), packed into 64-bit words in ascending degree.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn monomial(d: usize) -> Self {
        let mut p = Gf2Poly { words: vec![0; d / 64 + 1] };
        p.set(d, true);
        p
    }

    /// Builds a polynomial from exponents with odd multiplicity.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = Gf2Poly::zero();
        for e in exps {
            p.flip(e);
        }
        p.trim();
        p
    }

    /// Ascending coefficients, one bool per degree.
    pub fn from_bits(bits: &[bool]) -> Self {
        Self::from_exponents(bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i))
    }

    pub fn from_words(words: Vec<u64>) -> Self {
        let mut p = Gf2Poly { words };
        p.trim();
        p
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words.get(i / 64).map_or(false, |w| (w >> (i % 64)) & 1 == 1)
    }

    fn set(&mut self, i: usize, v: bool) {
        if i / 64 >= self.words.len() {
            self.words.resize(i / 64 + 1, 0);
        }
        if v {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    fn flip(&mut self, i: usize) {
        if i / 64 >= self.words.len() {
            self.words.resize(i / 64 + 1, 0);
        }
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(wi * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    pub fn add(&self, other: &Gf2Poly) -> Gf2Poly {
        let len = self.words.len().max(other.words.len());
        let words = (0..len)
            .map(|i| self.words.get(i).copied().unwrap_or(0) ^ other.words.get(i).copied().unwrap_or(0))
            .collect();
        Gf2Poly::from_words(words)
    }

    pub fn mul(&self, other: &Gf2Poly) -> Gf2Poly {
        let (Some(da), Some(db)) = (self.degree(), other.degree()) else {
            return Gf2Poly::zero();
        };
        let mut out = vec![0u64; (da + db) / 64 + 2];
        for e in self.exponents() {
            let (q, r) = (e / 64, e % 64);
            for (j, &w) in other.words.iter().enumerate() {
                out[q + j] ^= w << r;
                if r != 0 {
                    out[q + j + 1] ^= w >> (64 - r);
                }
            }
        }
        Gf2Poly::from_words(out)
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Gf2Poly) -> (Gf2Poly, Gf2Poly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Gf2Poly::zero();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            quot.flip(shift);
            rem = rem.add(&divisor.shl(shift));
        }
        quot.trim();
        (quot, rem)
    }

    pub fn rem(&self, divisor: &Gf2Poly) -> Gf2Poly {
        self.div_rem(divisor).1
    }

    /// Multiplication by `x^s`.
    pub fn shl(&self, s: usize) -> Gf2Poly {
        if self.is_zero() {
            return Gf2Poly::zero();
        }
        let (q, r) = (s / 64, s % 64);
        let mut out = vec![0u64; self.words.len() + q + 1];
        for (i, &w) in self.words.iter().enumerate() {
            out[i + q] ^= w << r;
            if r != 0 {
                out[i + q + 1] ^= w >> (64 - r);
            }
        }
        Gf2Poly::from_words(out)
    }

    /// `x^d p(1/x)` for `d >= deg p`.
    pub fn reciprocal(&self, d: usize) -> Gf2Poly {
        Gf2Poly::from_exponents(self.exponents().into_iter().map(|e| d - e))
    }

    /// Ascending coefficients padded to `len`.
    pub fn to_bits(&self, len: usize) -> Vec<bool> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    /// Hex of the ascending bit packing: bit `i` of the integer is the coefficient of `x^i`.
    pub fn to_hex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = format!("{:x}", self.words.last().unwrap());
        for w in self.words.iter().rev().skip(1) {
            s.push_str(&format!("{w:016x}"));
        }
        s
    }

    pub fn from_hex(s: &str) -> Option<Gf2Poly> {
        let s = s.trim().trim_start_matches("0x");
        if s.is_empty() {
            return None;
        }
        let mut words = Vec::new();
        let bytes = s.as_bytes();
        let mut end = bytes.len();
        while end > 0 {
            let start = end.saturating_sub(16);
            words.push(u64::from_str_radix(&s[start..end], 16).ok()?);
            end = start;
        }
        Some(Gf2Poly::from_words(words))
    }

    /// Monomial sum in descending degree, e.g. `x^3 + x + 1`.
    pub fn to_monomials(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .rev()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        terms.join(" + ")
    }

    /// Parses the output of [`Gf2Poly::to_monomials`], tolerant of spacing.
    pub fn parse_monomials(s: &str) -> Option<Gf2Poly> {
        let mut exps = Vec::new();
        for term in s.split('+') {
            let t = term.trim();
            let e = match t {
                "1" => 0,
                "x" => 1,
                _ => t.strip_prefix("x^")?.trim_matches(|c| c == '{' || c == '}').parse().ok()?,
            };
            exps.push(e);
        }
        Some(Gf2Poly::from_exponents(exps))
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({})", self.to_monomials())
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_monomials())
    }
}
