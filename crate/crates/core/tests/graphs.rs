use coverdepth_core::graph::{
    components, is_induced_matching, matching_number_bruteforce, nu_prime_bruteforce,
    nu_prime_forest, nu_prime_path, nu_zero_bruteforce, nu_zero_path, EdgeSubset, SimpleGraph,
};
use proptest::prelude::*;

#[test]
fn forest_formula_matches_bruteforce_on_every_subset() {
    for n in 2..=12 {
        for mask in 0..1u64 << (n - 1) {
            let s = EdgeSubset::from_mask(n, mask).unwrap();
            assert_eq!(
                nu_prime_forest(&s),
                nu_prime_bruteforce(&s.to_simple_graph()).unwrap(),
                "n={n} S={s}"
            );
        }
    }
}

#[test]
fn path_formulas_match_bruteforce() {
    for n in 2..=12 {
        let g = SimpleGraph::path(n);
        assert_eq!(nu_prime_path(n), nu_prime_bruteforce(&g).unwrap(), "nu' n={n}");
        assert_eq!(nu_zero_path(n), nu_zero_bruteforce(&g).unwrap(), "nu0 n={n}");
        assert_eq!(n / 2, matching_number_bruteforce(&g).unwrap(), "nu n={n}");
    }
}

fn arb_graph() -> impl Strategy<Value = SimpleGraph> {
    (2usize..=8).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..14).prop_map(move |pairs| {
            let edges: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
            SimpleGraph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn matching_chain(g in arb_graph()) {
        let induced = nu_prime_bruteforce(&g).unwrap();
        let ordered = nu_zero_bruteforce(&g).unwrap();
        let plain = matching_number_bruteforce(&g).unwrap();
        prop_assert!(induced <= ordered, "nu'={} nu0={}", induced, ordered);
        prop_assert!(ordered <= plain, "nu0={} nu={}", ordered, plain);
    }

    #[test]
    fn runs_reconstruct_subset(n in 2usize..40, bits in prop::collection::vec(any::<bool>(), 39)) {
        let edges: Vec<usize> = (1..n).filter(|&e| bits[e - 1]).collect();
        let s = EdgeSubset::from_edges(n, &edges).unwrap();
        let c = components(&s);
        prop_assert_eq!(c.to_edge_subset(n).unwrap(), s.clone());
        for w in c.runs.windows(2) {
            prop_assert!(w[0].0 + w[0].1 < w[1].0);
        }
        prop_assert!(c.runs.iter().all(|&(_, len)| len >= 1));
        prop_assert_eq!(EdgeSubset::parse(n, &s.to_string()).unwrap(), s);
    }
}

#[test]
fn greedy_runs_are_induced_matchings() {
    // every third edge of a run forms an induced matching of size ceil(e/3)
    for len in 1..20 {
        let n = len + 1;
        let g = SimpleGraph::path(n);
        let m: Vec<(usize, usize)> = (0..len).step_by(3).map(|i| (i, i + 1)).collect();
        assert!(is_induced_matching(&g, &m));
        assert_eq!(m.len(), nu_prime_path(n));
    }
}
