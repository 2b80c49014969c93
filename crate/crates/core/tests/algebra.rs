use coverdepth_core::graph::{minimal_vertex_covers, SimpleGraph};
use coverdepth_core::monomial::{
    cover_ideal_path, minimalize, symbolic_power_contains, symbolic_power_path, Monomial,
    MonomialIdeal,
};
use proptest::prelude::*;

fn box_monomials(n: usize, cap: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut a = vec![0u32; n];
    loop {
        out.push(Monomial::new(a.clone()));
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if a[i] < cap {
                a[i] += 1;
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

fn arb_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0u32..4, n), 0..6)
        .prop_map(move |gens| MonomialIdeal::from_exponents(n, gens).unwrap())
}

fn arb_monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..6, n).prop_map(Monomial::new)
}

proptest! {
    #[test]
    fn minimalize_is_idempotent(i in arb_ideal(3)) {
        let again = minimalize(3, i.generators().iter().cloned()).unwrap();
        prop_assert_eq!(&again, &i);
        for (x, y) in i.generators().iter().zip(i.generators().iter().skip(1)) {
            prop_assert!(x < y);
        }
        for x in i.generators() {
            for y in i.generators() {
                prop_assert!(x == y || !x.divides(y));
            }
        }
    }

    #[test]
    fn intersection_membership(a in arb_ideal(3), b in arb_ideal(3)) {
        let both = a.intersect(&b).unwrap();
        for f in box_monomials(3, 4) {
            prop_assert_eq!(
                both.contains(&f).unwrap(),
                a.contains(&f).unwrap() && b.contains(&f).unwrap()
            );
        }
    }

    #[test]
    fn colon_only_sees_capped_exponents(i in arb_ideal(4), u in arb_monomial(4)) {
        let caps = i.exponent_caps();
        prop_assert_eq!(i.colon(&u).unwrap(), i.colon(&u.capped(&caps)).unwrap());
    }

    #[test]
    fn assrad_contains_radical(i in arb_ideal(3)) {
        prop_assume!(!i.is_zero() && !i.is_unit());
        let set = i.assrad_enumerate(1 << 20).unwrap();
        prop_assert!(set.contains(&i.radical()));
    }

    #[test]
    fn power_is_repeated_product(i in arb_ideal(3), t in 1u32..4) {
        let mut acc = i.clone();
        for _ in 1..t {
            acc = acc.product(&i).unwrap();
        }
        prop_assert_eq!(i.power(t), acc);
    }
}

#[test]
fn example_intersections() {
    let p1 = MonomialIdeal::variables(3, &[0, 1]);
    let p2 = MonomialIdeal::variables(3, &[1, 2]);
    // pairwise lcms {x1x2, x1x3, x2, x2x3} minimalize to {x2, x1x3}
    let expected = MonomialIdeal::from_exponents(3, [vec![0, 1, 0], vec![1, 0, 1]]).unwrap();
    assert_eq!(p1.intersect(&p2).unwrap(), expected);
}

#[test]
fn cover_ideal_generators_are_minimal_cover_monomials() {
    for n in 2..=8 {
        let covers = minimal_vertex_covers(&SimpleGraph::path(n)).unwrap();
        let from_covers =
            MonomialIdeal::from_generators(n, covers.iter().map(|c| Monomial::squarefree(n, c)))
                .unwrap();
        let ideal = cover_ideal_path(n).unwrap();
        assert_eq!(ideal, from_covers, "n={n}");
        assert_eq!(ideal.generators().len(), covers.len());
    }
}

#[test]
fn symbolic_membership_matches_ordinary_power() {
    for n in 2..=7 {
        let j = cover_ideal_path(n).unwrap();
        for s in 1..=3 {
            let power = j.power(s);
            for f in box_monomials(n, s) {
                assert_eq!(
                    symbolic_power_contains(n, s, &f).unwrap(),
                    power.contains(&f).unwrap(),
                    "n={n} s={s} f={f}"
                );
            }
        }
    }
}

#[test]
fn symbolic_power_equals_ordinary_power() {
    for n in 2..=6 {
        let j = cover_ideal_path(n).unwrap();
        for s in 1..=3 {
            assert_eq!(j.power(s), symbolic_power_path(n, s).unwrap(), "n={n} s={s}");
        }
    }
}

/// `sqrt(I : u) = intersection of P_i over components Q_i not containing u`,
/// enumerated from an explicit primary decomposition.
fn assrad_from_decomposition(
    n: usize,
    components: &[(MonomialIdeal, MonomialIdeal)],
    cap: u32,
) -> std::collections::BTreeSet<MonomialIdeal> {
    let mut out = std::collections::BTreeSet::new();
    for u in box_monomials(n, cap) {
        let mut acc: Option<MonomialIdeal> = None;
        for (q, p) in components {
            if !q.contains(&u).unwrap() {
                acc = Some(match acc {
                    Some(a) => a.intersect(p).unwrap(),
                    None => p.clone(),
                });
            }
        }
        out.extend(acc);
    }
    out
}

#[test]
fn mixed_primary_example_assrad() {
    let n = 3;
    let p1 = MonomialIdeal::variables(n, &[0, 1]);
    let p2 = MonomialIdeal::variables(n, &[1, 2]);
    let p3 = MonomialIdeal::variables(n, &[0, 2]);
    let q1 = MonomialIdeal::from_exponents(n, [vec![1, 0, 0], vec![0, 2, 0]]).unwrap();
    let q2 = MonomialIdeal::from_exponents(n, [vec![0, 1, 0], vec![0, 0, 3]]).unwrap();
    let ideal = q1.intersect(&q2).unwrap().intersect(&p3).unwrap();
    let components = [(q1, p1.clone()), (q2, p2.clone()), (p3.clone(), p3.clone())];
    let oracle = assrad_from_decomposition(n, &components, 3);
    let got = ideal.assrad_enumerate(1 << 20).unwrap();
    assert_eq!(got, oracle);

    // u = x2 avoids Q1 and P3 but lies in Q2, so P1 ∩ P3 occurs; P2 ∩ P3
    // would need u outside Q2 and P3 (forcing u = 1) yet inside Q1.
    assert!(got.contains(&p1.intersect(&p3).unwrap()));
    assert!(!got.contains(&p2.intersect(&p3).unwrap()));
    assert_eq!(got.len(), 6);
}

#[test]
fn cover_power_assrad_matches_decomposition() {
    for n in 2..=4 {
        for t in 1..=2 {
            let power = cover_ideal_path(n).unwrap().power(t);
            let components: Vec<_> = (1..n)
                .map(|i| {
                    let p = MonomialIdeal::variables(n, &[i - 1, i]);
                    (p.power(t), p)
                })
                .collect();
            let oracle = assrad_from_decomposition(n, &components, t);
            assert_eq!(power.assrad_enumerate(1 << 20).unwrap(), oracle, "n={n} t={t}");
        }
    }
}
