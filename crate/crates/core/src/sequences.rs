//! Trace sequences over GF(2^m), their DFT support and linear complexity.

use crate::cosets::check_h;
use crate::error::{Error, Result};
use crate::gf2m::{FieldElement, FieldSpec};
use crate::gf2poly::Gf2Poly;
use rayon::prelude::*;

/// One period of a binary sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinarySequence {
    bits: Vec<u8>,
}

impl BinarySequence {
    pub fn new(bits: Vec<u8>) -> Self {
        BinarySequence { bits: bits.into_iter().map(|b| b & 1).collect() }
    }

    pub fn period(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    /// Hex packing with `s_0` as the most significant bit, padded on the right.
    pub fn to_hex(&self) -> String {
        let mut out = String::with_capacity(self.bits.len().div_ceil(4));
        for chunk in self.bits.chunks(4) {
            let mut nib = 0u8;
            for (i, &b) in chunk.iter().enumerate() {
                nib |= b << (3 - i);
            }
            out.push(char::from_digit(nib as u32, 16).unwrap());
        }
        out
    }

    pub fn from_hex(hex: &str, period: usize) -> Option<Self> {
        let mut bits = Vec::with_capacity(period);
        for c in hex.chars() {
            let nib = c.to_digit(16)? as u8;
            for i in 0..4 {
                bits.push((nib >> (3 - i)) & 1);
            }
        }
        if bits.len() < period || bits[period..].iter().any(|&b| b != 0) {
            return None;
        }
        bits.truncate(period);
        Some(BinarySequence { bits })
    }
}

fn trace_sequence<F>(field: &FieldSpec, f: F) -> BinarySequence
where
    F: Fn(FieldElement) -> FieldElement + Sync,
{
    let bits = (0..field.n() as i64)
        .into_par_iter()
        .map(|t| {
            let x = field.add(FieldElement::ONE, field.alpha_pow(t));
            field.trace(f(x))
        })
        .collect();
    BinarySequence { bits }
}

/// `s_t = Tr((1 + α^t)^(2^m - 2))`.
pub fn inverse_sequence(field: &FieldSpec) -> BinarySequence {
    trace_sequence(field, |x| field.inverse_via_power(x))
}

/// `s_t = Tr(f(1 + α^t))` with `f(x) = x + x^(2^m - 2) + x^(2^h - 1)`.
pub fn trinomial_sequence(field: &FieldSpec, h: u32) -> Result<BinarySequence> {
    check_h(field.m(), h)?;
    let e = (1u64 << h) - 1;
    Ok(trace_sequence(field, |x| {
        let y = field.add(x, field.inverse_via_power(x));
        field.add(y, field.pow(x, e))
    }))
}

/// Coefficients `a_i = Σ_t s_t α^(-i t)` for all `i`.
pub fn dft(seq: &BinarySequence, field: &FieldSpec) -> Result<Vec<FieldElement>> {
    let n = field.n() as u64;
    if seq.period() as u64 != n {
        return Err(Error::LengthMismatch { expected: n as usize, got: seq.period() });
    }
    let ones: Vec<u64> = seq.bits.iter().enumerate().filter(|(_, &b)| b == 1).map(|(t, _)| t as u64).collect();
    Ok((0..n)
        .into_par_iter()
        .map(|i| {
            let mut acc = 0u32;
            for &t in &ones {
                let e = (n - (i * t) % n) % n;
                acc ^= field.alpha_pow(e as i64).bits();
            }
            FieldElement(acc)
        })
        .collect())
}

/// `{i : a_i != 0}`, ascending.
pub fn dft_support(seq: &BinarySequence, field: &FieldSpec) -> Result<Vec<u64>> {
    Ok(dft(seq, field)?
        .into_iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(i, _)| i as u64)
        .collect())
}

/// Linear complexity and minimal polynomial of a periodic sequence.
///
/// The polynomial is returned in root form `x^L C(1/x)`, where `C` is the
/// connection polynomial, so its roots are the `α^i` for `i` in the DFT support.
pub fn berlekamp_massey(seq: &BinarySequence) -> (usize, Gf2Poly) {
    let s: Vec<u8> = seq.bits.iter().chain(seq.bits.iter()).copied().collect();
    let len = s.len();
    let mut c = vec![0u8; len + 1];
    let mut b = vec![0u8; len + 1];
    c[0] = 1;
    b[0] = 1;
    let mut l = 0usize;
    let mut lb = 0usize;
    let mut shift = 1usize;
    for i in 0..len {
        let mut d = s[i];
        for j in 1..=l {
            d ^= c[j] & s[i - j];
        }
        if d == 0 {
            shift += 1;
        } else if 2 * l <= i {
            let prev = c.clone();
            for j in 0..=lb.min(len - shift) {
                c[j + shift] ^= b[j];
            }
            lb = l;
            l = i + 1 - l;
            b = prev;
            shift = 1;
        } else {
            for j in 0..=lb.min(len - shift) {
                c[j + shift] ^= b[j];
            }
            shift += 1;
        }
    }
    let conn = Gf2Poly::from_exponents((0..=l).filter(|&j| c[j] == 1));
    (l, conn.reciprocal(l))
}
