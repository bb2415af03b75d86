use num_traits::{One, Zero};
use proptest::prelude::*;
use scn_core::exact::binomial;
use scn_core::krawtchouk::{krawtchouk_at, scn_via_krawtchouk};
use scn_core::lattice_paths::{
    closed_form_histogram, enumerate_paths, histogram, signed_sum_enumerated, HeightCensus,
};
use scn_core::super_catalan::{catalan, middle_binomial, scn_closed_form, scn_von_szily, signed_scn};
use scn_core::{Int, Limits, Nat, ScnIndex};

#[test]
fn closed_form_and_von_szily_agree_up_to_twenty() {
    for idx in ScnIndex::up_to(20) {
        let closed: Int = scn_closed_form(idx).unwrap();
        assert_eq!(scn_von_szily::<Int>(idx).unwrap(), closed, "S{idx}");
        assert_eq!(scn_via_krawtchouk::<Int>(idx).unwrap(), closed, "S{idx}");
        assert_eq!(scn_closed_form::<Int>(idx.swapped()).unwrap(), closed);
        assert!(closed >= Int::one());
    }
}

#[test]
fn special_cases() {
    for n in 0..=15 {
        let two_catalan = catalan::<Nat>(n).unwrap() * 2u32;
        assert_eq!(scn_closed_form::<Nat>(ScnIndex::new(1, n)).unwrap(), two_catalan);
        assert_eq!(scn_closed_form::<Nat>(ScnIndex::new(0, n)).unwrap(), middle_binomial::<Nat>(n).unwrap());
    }
}

#[test]
fn large_values_stay_exact() {
    // S(0,20) = C(40,20)
    assert_eq!(scn_closed_form::<Nat>(ScnIndex::new(0, 20)).unwrap().to_string(), "137846528820");
    let big = ScnIndex::new(30, 25);
    assert_eq!(scn_closed_form::<Int>(big).unwrap(), scn_von_szily::<Int>(big).unwrap());
    assert_eq!(scn_closed_form::<Int>(big).unwrap(), scn_via_krawtchouk::<Int>(big).unwrap());
    // too large for u64: overflow is reported rather than wrapped
    assert!(scn_closed_form::<u64>(big).is_err());
}

#[test]
fn signed_path_sum_matches_closed_form_up_to_ten() {
    let l = Limits::default();
    for total in 0..=10 {
        let census = HeightCensus::new(total, &l).unwrap();
        for idx in ScnIndex::with_total(total) {
            let expected: Int = signed_scn(idx).unwrap();
            assert_eq!(census.signed_sum::<Int>(idx.m).unwrap(), expected, "census {idx}");
            let h = census.histogram::<Nat>(idx.m).unwrap();
            assert!(h.columns_agree(), "histogram {idx}");
        }
    }
    for idx in ScnIndex::up_to(7) {
        assert_eq!(signed_sum_enumerated::<Int>(idx, &l).unwrap(), signed_scn::<Int>(idx).unwrap());
        assert!(histogram::<Nat>(idx, &l).unwrap().columns_agree());
    }
}

#[test]
fn histogram_closed_form_sums_without_enumeration() {
    for idx in ScnIndex::up_to(20) {
        let column = closed_form_histogram::<Int>(idx).unwrap();
        let total: Int = column.iter().sum();
        assert_eq!(total, binomial::<Int>(2 * u64::from(idx.total()), idx.total().into()).unwrap());
        let alternating: Int = column
            .iter()
            .enumerate()
            .map(|(h, c)| if h % 2 == 0 { c.clone() } else { -c.clone() })
            .sum();
        assert_eq!(alternating, signed_scn::<Int>(idx).unwrap());
        // nonzero entries sit where both binomials are nonzero
        for (h, c) in column.iter().enumerate() {
            let h = h as i64;
            let support = h <= 2 * i64::from(idx.m) && i64::from(idx.total()) - h <= 2 * i64::from(idx.n);
            assert_eq!(!c.is_zero(), support, "{idx} h={h}");
        }
    }
}

#[test]
fn enumeration_is_complete_and_strictly_increasing() {
    let l = Limits::default();
    for n in 0..=9 {
        let paths: Vec<_> = enumerate_paths(n, &l).unwrap().collect();
        assert_eq!(paths.len() as u64, binomial::<u64>(2 * u64::from(n), n.into()).unwrap());
        assert!(paths.windows(2).all(|w| w[0] < w[1] && w[0].to_string() < w[1].to_string()));
        assert!(paths.iter().all(|p| p.steps().filter(|s| *s == scn_core::lattice_paths::Step::Up).count() == n as usize));
    }
}

#[test]
fn krawtchouk_identities() {
    for d in 0..=16u32 {
        for j in 0..=d {
            assert_eq!(krawtchouk_at::<Int>(d, j, 0).unwrap(), binomial::<Int>(d.into(), j.into()).unwrap());
        }
        if d >= 1 {
            for x in 0..=d {
                assert_eq!(krawtchouk_at::<i64>(d, 1, x).unwrap(), i64::from(d) - 2 * i64::from(x));
            }
        }
    }
    for d in 0..=12u32 {
        for j in 0..=d {
            for x in 0..=d {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                assert_eq!(krawtchouk_at::<i64>(d, j, d - x).unwrap(), sign * krawtchouk_at::<i64>(d, j, x).unwrap());
            }
        }
        for i in 0..=d {
            for j in 0..=d {
                let inner: Int = (0..=d)
                    .map(|x| {
                        binomial::<Int>(d.into(), x.into()).unwrap()
                            * krawtchouk_at::<Int>(d, i, x).unwrap()
                            * krawtchouk_at::<Int>(d, j, x).unwrap()
                    })
                    .sum();
                let expected = if i == j {
                    (Int::one() << d as usize) * binomial::<Int>(d.into(), j.into()).unwrap()
                } else {
                    Int::zero()
                };
                assert_eq!(inner, expected, "d={d} i={i} j={j}");
            }
        }
    }
}

proptest! {
    #[test]
    fn fixed_width_agrees_with_big_integers(m in 0u32..12, n in 0u32..12) {
        let idx = ScnIndex::new(m, n);
        let big: Int = scn_closed_form(idx).unwrap();
        prop_assert_eq!(Int::from(scn_von_szily::<i128>(idx).unwrap()), big.clone());
        prop_assert_eq!(Int::from(scn_via_krawtchouk::<i128>(idx).unwrap()), big);
    }

    #[test]
    fn symmetry(m in 0u32..40, n in 0u32..40) {
        let idx = ScnIndex::new(m, n);
        prop_assert_eq!(scn_closed_form::<Nat>(idx).unwrap(), scn_closed_form::<Nat>(idx.swapped()).unwrap());
    }
}
