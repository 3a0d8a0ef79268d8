use proptest::prelude::*;
use seqcodes_core::bounds::{bch_bound, check_certificate, MultiplierSearch};
use seqcodes_core::codes::{dual_defining_set, multiplier_equivalent};
use seqcodes_core::distance::exhaustive_rows;
use seqcodes_core::{BinaryCyclicCode, CosetTable, DefiningSet, DualConvention, FieldSpec};

/// A random union of cosets for degree `m`, chosen by a bit mask over the leaders.
fn random_set(m: u32, mask: u64) -> DefiningSet {
    let table = CosetTable::new(m).unwrap();
    let leaders: Vec<u64> =
        table.leaders().iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, &l)| l).collect();
    DefiningSet::new(m, leaders, false).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_map_is_an_involution(m in 2u32..=10, mask in any::<u64>()) {
        let set = random_set(m, mask);
        for c in [DualConvention::NegateComplement, DualConvention::Complement] {
            let dual = dual_defining_set(&set, c);
            prop_assert_eq!(dual.size() + set.size(), set.n());
            prop_assert!(dual_defining_set(&dual, c).same_roots(&set));
        }
    }

    #[test]
    fn true_dual_is_orthogonal(m in 3u32..=5, mask in any::<u64>()) {
        let field = FieldSpec::new(m).unwrap();
        let set = random_set(m, mask);
        let dual = dual_defining_set(&set, DualConvention::NegateComplement);
        let a = BinaryCyclicCode::build(&field, &set).unwrap();
        let b = BinaryCyclicCode::build(&field, &dual).unwrap();
        prop_assert_eq!(a.k() + b.k(), a.n());
        for ra in a.generator_rows() {
            for rb in b.generator_rows() {
                let dot: u32 = ra.iter().zip(&rb).map(|(x, y)| (x & y).count_ones()).sum();
                prop_assert_eq!(dot % 2, 0);
            }
        }
    }

    #[test]
    fn bch_bound_is_sound(m in 3u32..=5, mask in any::<u64>()) {
        let field = FieldSpec::new(m).unwrap();
        let set = random_set(m, mask);
        let code = BinaryCyclicCode::build(&field, &set).unwrap();
        prop_assume!(code.k() >= 1 && code.k() <= 22);
        let cert = bch_bound(&set, &MultiplierSearch::All).unwrap();
        prop_assert!(check_certificate(&set, &cert));
        let d = exhaustive_rows(&code.generator_rows(), code.n(), 28).unwrap().upper;
        prop_assert!(cert.implied_bound <= d as u64, "bound {} > d {}", cert.implied_bound, d);
    }

    #[test]
    fn multiplier_images_are_equivalent(m in 3u32..=9, mask in any::<u64>(), seed in 1u64..1000) {
        let set = random_set(m, mask);
        let n = set.n();
        let a = (1..n).cycle().skip(seed as usize % n as usize).find(|&a| seqcodes_core::cosets::gcd(a, n) == 1).unwrap();
        let image = set.scaled(a).unwrap();
        let found = multiplier_equivalent(&set, &image);
        prop_assert!(found.is_some());
        prop_assert!(set.scaled(found.unwrap()).unwrap().same_roots(&image));
    }
}
