//! Library results checked against independent, deliberately naive oracles.

use seqcodes_core::codes::{evaluate, generator_polynomial, minimal_polynomial};
use seqcodes_core::cosets::{epsilon, leader_of, max_h, odd_part, wt2};
use seqcodes_core::distance::{exhaustive_rows, min_distance_cyclic, min_distance_disjoint};
use seqcodes_core::sequences::{berlekamp_massey, dft_support, trinomial_sequence, inverse_sequence};
use seqcodes_core::{BinaryCyclicCode, CodeId, CosetTable, DefiningSet, DistanceOptions, FieldElement, FieldSpec, Gf2Poly};

/// Schoolbook product of two bit polynomials reduced by `modulus`.
fn slow_mul(a: u32, b: u32, modulus: u32, m: u32) -> u32 {
    let mut prod: u64 = 0;
    for i in 0..m {
        if b >> i & 1 == 1 {
            prod ^= (a as u64) << i;
        }
    }
    for i in (m..2 * m).rev() {
        if prod >> i & 1 == 1 {
            prod ^= (modulus as u64) << (i - m);
        }
    }
    prod as u32
}

fn deg(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

/// Inverse by the extended Euclidean algorithm in GF(2)[x].
fn euclid_inverse(a: u32, modulus: u32) -> u32 {
    let (mut r0, mut r1) = (modulus as u64, a as u64);
    let (mut s0, mut s1) = (0u64, 1u64);
    while r1 != 0 {
        let (mut q, mut r) = (0u64, r0);
        while r != 0 && deg(r) >= deg(r1) {
            let shift = deg(r) - deg(r1);
            q ^= 1 << shift;
            r ^= r1 << shift;
        }
        let mut qs = 0u64;
        for i in 0..32 {
            if q >> i & 1 == 1 {
                qs ^= s1 << i;
            }
        }
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s0 ^ qs);
    }
    assert_eq!(r0, 1);
    s0 as u32
}

#[test]
fn multiplication_matches_schoolbook() {
    for m in 2..=10 {
        let f = FieldSpec::new(m).unwrap();
        let modulus = f.modulus();
        for a in 0..(1u32 << m) {
            for b in (0..(1u32 << m)).step_by(3) {
                assert_eq!(f.mul(FieldElement(a), FieldElement(b)).bits(), slow_mul(a, b, modulus, m));
            }
        }
    }
    for m in [17, 21, 26] {
        let f = FieldSpec::new(m).unwrap();
        let mut x = 0x1234_5678u32 & ((1 << m) - 1);
        for _ in 0..2000 {
            let y = x.rotate_left(7) & ((1 << m) - 1);
            assert_eq!(f.mul(FieldElement(x), FieldElement(y)).bits(), slow_mul(x, y, f.modulus(), m));
            x = x.wrapping_mul(2_654_435_761) & ((1 << m) - 1);
        }
    }
}

#[test]
fn field_axioms_on_samples() {
    for m in [3, 8, 13, 20] {
        let f = FieldSpec::new(m).unwrap();
        let e = |i: i64| f.alpha_pow(i * 7919 + 3);
        for i in 0..200 {
            let (a, b, c) = (e(i), e(i + 1), e(2 * i + 5));
            assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            assert_eq!(f.mul(a, b), f.mul(b, a));
        }
    }
}

#[test]
fn alpha_has_full_order() {
    for m in 2..=16 {
        let f = FieldSpec::new(m).unwrap();
        let n = (1i64 << m) - 1;
        assert_eq!(f.alpha_pow(n), FieldElement::ONE);
        for p in seqcodes_core::gf2m::prime_factors(n as u64) {
            assert_ne!(f.alpha_pow(n / p as i64), FieldElement::ONE, "m={m}");
        }
    }
}

#[test]
fn inverse_matches_extended_euclid() {
    for m in [2, 5, 9, 12, 19, 26] {
        let f = FieldSpec::new(m).unwrap();
        let step = ((1u32 << m) / 3000).max(1);
        for a in (1..(1u32 << m)).step_by(step as usize) {
            assert_eq!(f.inverse_via_power(FieldElement(a)).bits(), euclid_inverse(a, f.modulus()), "m={m} a={a}");
        }
        assert!(f.inverse_via_power(FieldElement::ZERO).is_zero());
    }
}

#[test]
fn trace_is_balanced() {
    for m in 2..=14 {
        let f = FieldSpec::new(m).unwrap();
        let ones = (0..(1u32 << m)).filter(|&a| f.trace(FieldElement(a)) == 1).count();
        assert_eq!(ones, 1 << (m - 1));
    }
}

#[test]
fn epsilon_identities() {
    for t in 1..=16u32 {
        for a in 1..(1u64 << t) - 1 {
            let e = epsilon(a, t).unwrap();
            let log_ceil = (((1u64 << t) - 1) as f64 / a as f64).log2().ceil() as u32;
            assert_eq!(e, log_ceil, "a={a} t={t}");
            assert_eq!(epsilon(a, t + 1).unwrap(), e + 1);
            for k in 0..e {
                assert_eq!(epsilon(a << k, t).unwrap(), e - k);
            }
        }
        assert_eq!(epsilon((1 << t) - 1, t).unwrap(), 1);
    }
    assert!(epsilon(0, 3).is_err());
    assert!(epsilon(8, 3).is_err());
}

#[test]
fn small_function_examples() {
    assert_eq!((wt2(0), wt2(13)), (0, 3));
    assert_eq!((odd_part(12).unwrap(), odd_part(7).unwrap(), odd_part(64).unwrap()), (3, 7, 1));
    assert!(odd_part(0).is_err());
    assert_eq!((epsilon(7, 3).unwrap(), epsilon(1, 3).unwrap(), epsilon(3, 3).unwrap()), (1, 3, 2));
}

#[test]
fn cosets_partition_residues() {
    for m in 2..=16 {
        let table = CosetTable::new(m).unwrap();
        let n = table.n();
        let mut seen = vec![false; n as usize];
        let mut total = 0;
        for &l in table.leaders() {
            let coset = table.coset(l);
            assert_eq!(coset.len() as u32, table.size_of(l).unwrap());
            assert_eq!(*coset.iter().min().unwrap(), l);
            for &x in &coset {
                assert!(!seen[x as usize]);
                seen[x as usize] = true;
                assert_eq!(leader_of(x, m), l);
            }
            total += coset.len() as u64;
            if l != 0 {
                assert!(l % 2 == 1 && l < 1 << (m - 1), "m={m} leader {l}");
            }
            let evens = coset.iter().filter(|&&x| x % 2 == 0).count() as u32;
            assert_eq!(table.rho_of(l).unwrap(), evens);
        }
        assert_eq!(total, n);
    }
}

#[test]
fn coset_examples() {
    let t4 = CosetTable::new(4).unwrap();
    assert_eq!(t4.leaders(), &[0, 1, 3, 5, 7]);
    assert_eq!(t4.coset(1), vec![1, 2, 4, 8]);
    assert_eq!(t4.coset(5), vec![5, 10]);
    assert_eq!(t4.rho_of(1).unwrap(), 3);
    assert_eq!((t4.v_value(1).unwrap(), t4.v_value(5).unwrap(), t4.v_value(0).unwrap()), (1, 0, 0));
    assert_eq!(t4.u_value(3, 2).unwrap(), 1);
    let t5 = CosetTable::new(5).unwrap();
    let mut c7 = t5.coset(7);
    c7.sort_unstable();
    assert_eq!(c7, vec![7, 14, 19, 25, 28]);
    for &l in t5.leaders().iter().filter(|&&l| l != 0) {
        assert_eq!(t5.rho_of(l).unwrap(), 5 - wt2(l));
        assert_eq!(t5.u_value(1, 1).unwrap(), t5.v_value(1).unwrap());
    }
    let r = CosetTable::new(6).unwrap().verify_decomposition(21).unwrap();
    assert!(r.consistent);
    assert_eq!(r.coset_size, 2);
    assert!(CosetTable::new(5).unwrap().verify_full_length(1).unwrap());
    assert!(CosetTable::new(6).unwrap().verify_full_length(5).unwrap());
    assert_eq!(CosetTable::new(6).unwrap().size_of(9).unwrap(), 3);
}

/// The v functional recomputed from its definition as `m ρ / l mod 2`.
#[test]
fn parity_functional_from_definition() {
    for m in 2..=14 {
        let table = CosetTable::new(m).unwrap();
        for &l in table.leaders() {
            let coset = table.coset(l);
            let rho = coset.iter().filter(|&&x| x % 2 == 0).count() as u32;
            let v = ((m * rho / coset.len() as u32) % 2) as u8;
            assert_eq!(table.v_value(l).unwrap(), v, "m={m} l={l}");
        }
        assert_eq!(table.v_value(0).unwrap(), (m % 2) as u8);
    }
}

#[test]
fn set_examples() {
    let t4 = CosetTable::new(4).unwrap();
    let t1 = t4.t_set(1).unwrap();
    assert_eq!(t1.leaders(), &[1, 7]);
    assert_eq!(t1.size(), 8);
    let n1 = t4.n_set(1).unwrap();
    let n0 = t4.n_set(0).unwrap();
    assert_eq!(n1.size() + n0.size() + 1, 15);
    for m in [5u32, 7, 9] {
        let t = CosetTable::new(m).unwrap();
        assert_eq!(t.n_set(1).unwrap().size(), (1 << (m - 1)) - 1);
    }
    assert_eq!(CosetTable::new(6).unwrap().n_set(0).unwrap().size(), 30);
}

#[test]
fn nine_bit_trinomial_leaders() {
    let d1_listed = [
        1, 5, 9, 15, 17, 23, 27, 29, 39, 43, 45, 51, 53, 57, 63, 75, 77, 83, 85, 95, 111, 119, 123, 125, 175, 183,
        187, 219, 255,
    ];
    let d0_listed = [
        3, 7, 11, 13, 19, 21, 25, 31, 35, 37, 41, 47, 55, 59, 61, 73, 79, 87, 91, 93, 103, 107, 109, 117, 127, 171,
        191, 223, 239,
    ];
    let table = CosetTable::new(9).unwrap();
    let d1 = table.d_set(2, 1).unwrap();
    let d0 = table.d_set(2, 0).unwrap();
    // The listed parity-1 leaders omit 0, whose functional is 1 for odd m.
    assert_eq!(d1.leaders()[0], 0);
    assert_eq!(&d1.leaders()[1..], &d1_listed);
    assert_eq!(d0.leaders(), &d0_listed);
    let field = FieldSpec::new(9).unwrap();
    let support = dft_support(&trinomial_sequence(&field, 2).unwrap(), &field).unwrap();
    let leaders: Vec<u64> = support.iter().copied().filter(|&i| leader_of(i, 9) == i).collect();
    assert_eq!(leaders, d1.leaders());
}

#[test]
fn dimensions_match_examples() {
    let t = |m| CosetTable::new(m).unwrap();
    assert_eq!(CodeId::s(4, 1).dimension(&t(4)).unwrap(), 6);
    assert_eq!(CodeId::s(6, 0).dimension(&t(6)).unwrap(), 32);
    assert_eq!(CodeId::d(5, 1, 0).dimension(&t(5)).unwrap(), 16);
    assert_eq!(CodeId::d(5, 1, 1).dimension(&t(5)).unwrap(), 15);
    assert_eq!(CodeId::d(9, 2, 1).dimension(&t(9)).unwrap(), 255);
    assert_eq!(CodeId::d(9, 2, 0).dimension(&t(9)).unwrap(), 256);
}

fn all_ids(m: u32) -> Vec<CodeId> {
    let mut ids = vec![CodeId::s(m, 0), CodeId::s(m, 1), CodeId::tang_ding(m, 0), CodeId::tang_ding(m, 1)];
    for h in 1..=max_h(m) {
        ids.push(CodeId::d(m, h, 0));
        ids.push(CodeId::d(m, h, 1));
    }
    ids
}

/// `x^n - 1` over GF(2).
fn x_n_minus_one(n: usize) -> Gf2Poly {
    Gf2Poly::from_exponents([0, n])
}

#[test]
fn generators_divide_and_vanish() {
    for m in 2..=9 {
        let field = FieldSpec::new(m).unwrap();
        let table = CosetTable::new(m).unwrap();
        let n = table.n() as usize;
        for id in all_ids(m) {
            let code = BinaryCyclicCode::id_build(&field, &table, id).unwrap();
            let g = code.generator();
            let set = id.defining_set(&table).unwrap();
            assert_eq!(g.degree().unwrap() as u64, set.size(), "{id}");
            assert!(x_n_minus_one(n).rem(g).is_zero(), "{id}");
            for j in 0..n as u64 {
                let root = evaluate(&field, g, field.alpha_pow(j as i64)).is_zero();
                assert_eq!(root, set.contains(j), "{id} j={j}");
            }
        }
    }
}

#[test]
fn minimal_polynomials_divide_and_have_coset_degree() {
    for m in 2..=10 {
        let field = FieldSpec::new(m).unwrap();
        let table = CosetTable::new(m).unwrap();
        for &l in table.leaders() {
            let p = minimal_polynomial(&field, l);
            assert_eq!(p.degree().unwrap() as u32, table.size_of(l).unwrap());
            assert!(x_n_minus_one(table.n() as usize).rem(&p).is_zero());
        }
    }
}

/// Product of `(x - α^j)` over the expanded set, computed in GF(2^m)[x].
fn root_product(field: &FieldSpec, roots: &[u64]) -> Gf2Poly {
    let mut coeffs = vec![FieldElement::ONE];
    for &j in roots {
        let r = field.alpha_pow(j as i64);
        let mut next = vec![FieldElement::ZERO; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] = field.add(next[i + 1], c);
            next[i] = field.add(next[i], field.mul(c, r));
        }
        coeffs = next;
    }
    let bits: Vec<bool> = coeffs
        .iter()
        .map(|c| {
            assert!(c.bits() <= 1, "coefficient outside GF(2)");
            c.bits() == 1
        })
        .collect();
    Gf2Poly::from_bits(&bits)
}

#[test]
fn generator_equals_root_product() {
    for m in [3u32, 4, 5, 6] {
        let field = FieldSpec::new(m).unwrap();
        let table = CosetTable::new(m).unwrap();
        for id in all_ids(m) {
            let set = id.defining_set(&table).unwrap();
            assert_eq!(generator_polynomial(&field, &set), root_product(&field, &set.expanded()), "{id}");
        }
    }
}

#[test]
fn sequence_minimal_polynomial_is_root_product() {
    let field = FieldSpec::new(5).unwrap();
    let table = CosetTable::new(5).unwrap();
    let t1 = table.t_set(1).unwrap();
    let (l, poly) = berlekamp_massey(&inverse_sequence(&field));
    assert_eq!(l, 16);
    assert_eq!(poly, root_product(&field, &t1.expanded()));
}

/// Sequences recomputed directly from the trace definitions.
#[test]
fn sequences_from_definition() {
    for m in [4u32, 7] {
        let field = FieldSpec::new(m).unwrap();
        let n = (1i64 << m) - 1;
        let inv = |x: FieldElement| field.pow(x, (n - 1) as u64);
        let si = inverse_sequence(&field);
        for t in 0..n {
            let y = field.add(FieldElement::ONE, field.alpha_pow(t));
            assert_eq!(si.bits()[t as usize], field.trace(inv(y)), "m={m} t={t}");
        }
        for h in 1..=max_h(m) {
            let dz = trinomial_sequence(&field, h).unwrap();
            for t in 0..n {
                let y = field.add(FieldElement::ONE, field.alpha_pow(t));
                let f = field.add(field.add(y, inv(y)), field.pow(y, (1u64 << h) - 1));
                assert_eq!(dz.bits()[t as usize], field.trace(f), "m={m} h={h} t={t}");
            }
        }
        assert_eq!(si.bits()[0], 0);
    }
}

#[test]
fn sequence_support_examples() {
    let f4 = FieldSpec::new(4).unwrap();
    let support = dft_support(&inverse_sequence(&f4), &f4).unwrap();
    assert_eq!(support.len(), 8);
    assert_eq!(support, CosetTable::new(4).unwrap().t_set(1).unwrap().expanded());
    let f5 = FieldSpec::new(5).unwrap();
    let t5 = CosetTable::new(5).unwrap();
    assert_eq!(dft_support(&trinomial_sequence(&f5, 1).unwrap(), &f5).unwrap(), t5.d_set(1, 1).unwrap().expanded());
    let zero = seqcodes_core::BinarySequence::new(vec![0; 31]);
    assert!(dft_support(&zero, &f5).unwrap().is_empty());
    assert_eq!(berlekamp_massey(&zero), (0, Gf2Poly::one()));
    let trace = seqcodes_core::BinarySequence::new((0..31).map(|t| f5.trace(f5.alpha_pow(t))).collect());
    assert_eq!(dft_support(&trace, &f5).unwrap(), t5.coset(1).into_iter().collect::<std::collections::BTreeSet<_>>().into_iter().collect::<Vec<_>>());
}

#[test]
fn distance_engines_agree() {
    let opts = DistanceOptions { probe_iterations: 0, ..DistanceOptions::default() };
    for m in 3..=6 {
        let field = FieldSpec::new(m).unwrap();
        let table = CosetTable::new(m).unwrap();
        for id in all_ids(m) {
            let code = BinaryCyclicCode::id_build(&field, &table, id).unwrap();
            if code.k() > 20 || code.k() == 0 {
                continue;
            }
            let exact = exhaustive_rows(&code.generator_rows(), code.n(), 28).unwrap();
            let cyclic = min_distance_cyclic(&code, &opts).unwrap();
            let disjoint = min_distance_disjoint(&code.generator_rows(), code.n(), &opts).unwrap();
            assert_eq!(cyclic.exact(), Some(exact.upper), "{id}");
            assert_eq!(disjoint.exact(), Some(exact.upper), "{id}");
            let mut word = vec![false; code.n()];
            for &i in &cyclic.witness {
                word[i] = true;
            }
            assert!(code.is_codeword(&word).unwrap());
            assert_eq!(cyclic.witness.len() as u32, exact.upper);
        }
    }
}

#[test]
fn hamming_and_degenerate_distances() {
    let field = FieldSpec::new(3).unwrap();
    let table = CosetTable::new(3).unwrap();
    let ham = BinaryCyclicCode::id_build(&field, &table, CodeId::d(3, 1, 0)).unwrap();
    assert_eq!(seqcodes_core::distance::min_distance_exhaustive(&ham, 28).unwrap(), 3);
    // Every nonzero root present except 0: the repetition code.
    let all_but_zero: Vec<u64> = table.leaders().iter().copied().filter(|&l| l != 0).collect();
    let rep = BinaryCyclicCode::build(&field, &DefiningSet::new(3, all_but_zero, false).unwrap()).unwrap();
    assert_eq!(rep.k(), 1);
    assert_eq!(seqcodes_core::distance::min_distance_exhaustive(&rep, 28).unwrap(), rep.generator().weight());
}
