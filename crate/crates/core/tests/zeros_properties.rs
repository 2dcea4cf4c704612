use proptest::prelude::*;
use robin_core::special::{bessel_j, Order};
use robin_core::zeros::{bessel_zero, zero, zero_bracket, ZeroIndex};
use std::f64::consts::PI;
use std::thread;

fn idx(nu: f64, m: u32) -> ZeroIndex {
    ZeroIndex::new(Order::new(nu).unwrap(), m).unwrap()
}

#[test]
fn interlacing_integer_and_half_orders() {
    for twice_nu in 0..=40 {
        let nu = twice_nu as f64 / 2.0;
        for m in 1..=50 {
            let (a, b, c) = (
                zero(nu, m).unwrap(),
                zero(nu + 1.0, m).unwrap(),
                zero(nu, m + 1).unwrap(),
            );
            assert!(a < b && b < c, "nu={nu} m={m}: {a} {b} {c}");
        }
    }
}

#[test]
fn gap_tends_to_pi() {
    for nu in 0..=5 {
        let gap = zero(nu as f64, 51).unwrap() - zero(nu as f64, 50).unwrap();
        assert!((gap - PI).abs() < 0.05, "nu={nu} gap={gap}");
    }
}

#[test]
fn documented_zeros() {
    for m in 1..=20 {
        assert!((zero(0.5, m).unwrap() - m as f64 * PI).abs() < 1e-12 * m as f64);
    }
    assert!((zero(0.0, 1).unwrap() - 2.404826).abs() < 1e-6);
    let ratio = (zero(1.0, 1).unwrap() / zero(0.0, 1).unwrap()).powi(2);
    assert!((ratio - 2.5387).abs() < 5e-5);
    let (lo, hi) = zero_bracket(idx(0.5, 2)).unwrap();
    assert!(lo < 2.0 * PI && 2.0 * PI < hi);
    let (lo, hi) = zero_bracket(idx(0.0, 1)).unwrap();
    assert!(lo < 2.404826 && 2.404826 < hi);
}

#[test]
fn bracket_interlaces_with_lower_order() {
    let (lo, hi) = zero_bracket(idx(5.0, 3)).unwrap();
    let z = bessel_zero(idx(5.0, 3)).unwrap();
    assert!(lo < z && z < hi);
    // j_{4,3} < j_{5,3} < j_{4,4}, and the bracket overlaps that window
    let (below, above) = (zero(4.0, 3).unwrap(), zero(4.0, 4).unwrap());
    assert!(below < z && z < above);
    assert!(lo < above && hi > below);
}

#[test]
fn rejects_m_zero_and_large_order() {
    assert!(ZeroIndex::new(Order::new(1.0).unwrap(), 0).is_err());
    assert!(ZeroIndex::new(Order::new(250.0).unwrap(), 1).is_err());
}

#[test]
fn concurrent_lookups_agree_with_serial() {
    let serial: Vec<f64> = (1..=200).map(|m| zero(7.25, m).unwrap()).collect();
    let handles: Vec<_> = (0..8)
        .map(|t| {
            thread::spawn(move || {
                let ms: Vec<u32> = if t % 2 == 0 {
                    (1..=200).collect()
                } else {
                    (1..=200).rev().collect()
                };
                ms.into_iter().map(|m| (m, zero(7.25, m).unwrap())).collect::<Vec<_>>()
            })
        })
        .collect();
    for h in handles {
        for (m, z) in h.join().unwrap() {
            assert_eq!(z.to_bits(), serial[m as usize - 1].to_bits());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn zeros_are_zeros(nu in 0.0f64..60.0, m in 1u32..300) {
        let z = zero(nu, m).unwrap();
        prop_assert!(bessel_j(nu, z).unwrap().abs() <= 1e-10, "nu={nu} m={m}");
    }

    #[test]
    fn bracket_is_tight_and_signed(nu in 0.0f64..30.0, m in 1u32..100) {
        let (lo, hi) = zero_bracket(idx(nu, m)).unwrap();
        let z = zero(nu, m).unwrap();
        prop_assert!(lo < z && z < hi);
        prop_assert!(bessel_j(nu, lo).unwrap() * bessel_j(nu, hi).unwrap() < 0.0);
        if m > 1 {
            prop_assert!(lo > zero(nu, m - 1).unwrap());
        }
        prop_assert!(hi < zero(nu, m + 1).unwrap());
    }
}
