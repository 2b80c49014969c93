use coverdepth_core::depth::{
    delta_max_dp, depth_bruteforce_exponents, depth_bruteforce_subsets, depth_closed, feasible,
    floor_identities, s_of_exponents, witness_blocks, Budget,
};
use coverdepth_core::monomial::{cover_ideal_path, Monomial};
use num_rational::Ratio;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn realized_edge_sets_are_nonempty_outside_the_power() {
    for n in 2..=6 {
        for t in 1..=3u32 {
            let power = cover_ideal_path(n).unwrap().power(t);
            let mut a = vec![0u32; n];
            'outer: loop {
                let f = Monomial::new(a.clone());
                let inside = power.contains(&f).unwrap();
                assert_eq!(!inside, !s_of_exponents(&a, t).is_empty(), "n={n} t={t} a={a:?}");
                for i in 0..n {
                    if a[i] < t + 1 {
                        a[i] += 1;
                        continue 'outer;
                    }
                    a[i] = 0;
                }
                break;
            }
        }
    }
}

#[test]
fn floor_identities_hold_on_random_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..10_000 {
        let a = rng.gen_range(1..1_000_000u64);
        let x = Ratio::new(rng.gen_range(-1_000_000..1_000_000i64), rng.gen_range(1..1000i64));
        let b = rng.gen_range(1..1000i64);
        assert_eq!(floor_identities(a, x, b).unwrap(), (true, true), "a={a} x={x} b={b}");
    }
}

#[test]
fn oracles_on_small_grid() {
    let budget = Budget::default();
    for n in 2..=9 {
        for t in 1..=3 {
            let closed = depth_closed(n, t).unwrap();
            assert_eq!(depth_bruteforce_exponents(n, t, &budget).unwrap(), closed);
            assert_eq!(depth_bruteforce_subsets(n, t, &budget).unwrap(), closed);
        }
    }
}

proptest! {
    #[test]
    fn exponents_above_t_behave_like_t(a in prop::collection::vec(0u32..12, 2..12), t in 1u32..6) {
        let capped: Vec<u32> = a.iter().map(|&x| x.min(t)).collect();
        prop_assert_eq!(s_of_exponents(&a, t), s_of_exponents(&capped, t));
    }

    #[test]
    fn dp_witnesses_are_realizable(n in 2usize..80, t in 1u32..12) {
        let (delta, w) = delta_max_dp(n, t).unwrap();
        prop_assert_eq!(w.nu_prime(), delta);
        prop_assert!(w.a.iter().all(|&x| x <= t));
        let a = feasible(n, t, &w.s);
        prop_assert!(a.is_some());
        prop_assert_eq!(s_of_exponents(&a.unwrap(), t), w.s.clone());
        let blocks = witness_blocks(n, t).unwrap();
        prop_assert_eq!(blocks.nu_prime(), delta);
    }

    #[test]
    fn depth_is_monotone_in_t(n in 2usize..300, t in 1u32..60) {
        prop_assert!(depth_closed(n, t).unwrap() >= depth_closed(n, t + 1).unwrap());
    }
}
