//! Realizable edge sets and the dynamic program for their largest
//! induced matching number.
//!
//! A monomial `f = x^a` outside `J(P_n)^t` selects the edge set
//! `S(a) = { e_i : a_i + a_{i+1} <= t - 1 }`. Every state below caps exponents
//! at `t`: edge constraints only compare sums against `t - 1` and `t`, so an
//! exponent above `t` behaves exactly like `t`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{nu_prime_forest, EdgeSubset};

use super::DepthQuery;

/// An exponent vector together with the edge set it realizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityWitness {
    pub a: Vec<u32>,
    pub s: EdgeSubset,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct WitnessWire {
    pub a: Vec<u32>,
    #[serde(rename = "S")]
    pub s: String,
}

impl FeasibilityWitness {
    /// Build from exponents, deriving `S` from them.
    pub fn from_exponents(a: Vec<u32>, t: u32) -> Result<Self> {
        let s = s_of_exponents(&a, t);
        if s.is_empty() {
            return Err(Error::Precondition(format!(
                "exponents {a:?} realize an empty edge set at t={t}"
            )));
        }
        Ok(FeasibilityWitness { a, s })
    }

    pub fn nu_prime(&self) -> usize {
        nu_prime_forest(&self.s)
    }

    pub(crate) fn to_wire(&self) -> WitnessWire {
        WitnessWire {
            a: self.a.clone(),
            s: self.s.to_string(),
        }
    }

    pub(crate) fn from_wire(w: WitnessWire) -> Result<Self> {
        let s = EdgeSubset::parse(w.a.len(), &w.s)?;
        Ok(FeasibilityWitness { a: w.a, s })
    }
}

/// `S(a) = { e_i : a_i + a_{i+1} <= t - 1 }`.
pub fn s_of_exponents(a: &[u32], t: u32) -> EdgeSubset {
    let present = a
        .windows(2)
        .map(|w| u64::from(w[0]) + u64::from(w[1]) < u64::from(t));
    EdgeSubset::from_bools(a.len(), present)
}

/// Find exponents in `0..=t` whose realized edge set is exactly `s`.
///
/// Forward propagation of the set of reachable values per vertex, then a
/// backward pass picking one compatible value per vertex.
pub fn feasible(n: usize, t: u32, s: &EdgeSubset) -> Option<Vec<u32>> {
    if s.n() != n || n == 0 {
        return None;
    }
    let values = t as usize + 1;
    let allowed = |edge: usize, x: usize, y: usize| {
        let sum = x + y;
        if s.contains(edge) {
            sum < t as usize
        } else {
            sum >= t as usize
        }
    };
    let mut reach: Vec<Vec<bool>> = Vec::with_capacity(n);
    reach.push(vec![true; values]);
    for v in 1..n {
        let prev = &reach[v - 1];
        let next: Vec<bool> = (0..values)
            .map(|y| (0..values).any(|x| prev[x] && allowed(v, x, y)))
            .collect();
        if !next.iter().any(|&b| b) {
            return None;
        }
        reach.push(next);
    }
    let mut a = vec![0u32; n];
    let mut cur = reach[n - 1].iter().position(|&b| b)?;
    a[n - 1] = cur as u32;
    for v in (0..n - 1).rev() {
        cur = (0..values).find(|&x| reach[v][x] && allowed(v + 1, x, cur))?;
        a[v] = cur as u32;
    }
    Some(a)
}

const NEG: i64 = i64::MIN / 4;

/// Index of a DP state `(value, run residue, nonempty)`.
#[inline]
fn idx(value: usize, residue: usize, nonempty: usize) -> usize {
    value * 6 + residue * 2 + nonempty
}

/// One step of the DP from vertex `v` to `v + 1`.
///
/// `old[idx(a, r, f)]` is the best number of completed-or-open run credits
/// over prefixes ending with exponent `a`, the current S-run length being
/// `r` mod 3, and `f` recording whether any S-edge occurred. A new S-edge
/// earns one credit when it brings a run to length `1 mod 3`, which sums to
/// `ceil(e/3)` for a run of `e` edges.
///
/// For the next value `w`, the edge is in S iff `a <= t - 1 - w`, so both
/// transitions read a prefix or suffix maximum over `a`.
fn step(
    t: usize,
    old: &[i64],
    new: &mut [i64],
    mut parents: Option<&mut [u32]>,
    scratch: &mut Scratch,
) {
    let values = t + 1;
    // prefix[(r, f)][x] = max over a <= x of old[a, r, f]
    for r in 0..3 {
        for f in 0..2 {
            let mut best = (NEG, 0usize);
            for a in 0..values {
                let v = old[idx(a, r, f)];
                if v > best.0 {
                    best = (v, a);
                }
                scratch.prefix[(r * 2 + f) * values + a] = best;
            }
        }
    }
    // suffix[f][x] = max over a >= x and every r of old[a, r, f]
    for f in 0..2 {
        let mut best = (NEG, 0usize, 0usize);
        for a in (0..values).rev() {
            for r in 0..3 {
                let v = old[idx(a, r, f)];
                if v > best.0 {
                    best = (v, a, r);
                }
            }
            scratch.suffix[f * values + a] = best;
        }
    }
    new.fill(NEG);
    for w in 0..values {
        // edge in S: a + w <= t - 1
        if w < t {
            let cap = t - 1 - w;
            for r in 0..3 {
                let gain = i64::from(r == 0);
                let target = idx(w, (r + 1) % 3, 1);
                for f in 0..2 {
                    let (v, a) = scratch.prefix[(r * 2 + f) * values + cap];
                    if v > NEG && v + gain > new[target] {
                        new[target] = v + gain;
                        if let Some(p) = parents.as_deref_mut() {
                            p[target] = idx(a, r, f) as u32;
                        }
                    }
                }
            }
        }
        // edge not in S: a + w >= t
        let lo = t - w;
        for f in 0..2 {
            let (v, a, r) = scratch.suffix[f * values + lo];
            let target = idx(w, 0, f);
            if v > NEG && v > new[target] {
                new[target] = v;
                if let Some(p) = parents.as_deref_mut() {
                    p[target] = idx(a, r, f) as u32;
                }
            }
        }
    }
}

struct Scratch {
    prefix: Vec<(i64, usize)>,
    suffix: Vec<(i64, usize, usize)>,
}

impl Scratch {
    fn new(t: usize) -> Self {
        Scratch {
            prefix: vec![(NEG, 0); 6 * (t + 1)],
            suffix: vec![(NEG, 0, 0); 2 * (t + 1)],
        }
    }
}

fn initial_layer(t: usize) -> Vec<i64> {
    let mut layer = vec![NEG; 6 * (t + 1)];
    for a in 0..=t {
        layer[idx(a, 0, 0)] = 0;
    }
    layer
}

fn best_nonempty(layer: &[i64]) -> Option<(i64, usize)> {
    layer
        .iter()
        .enumerate()
        .filter(|(i, &v)| i % 2 == 1 && v > NEG)
        .map(|(i, &v)| (v, i))
        .max_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)))
}

/// `Delta = max nu'(G_S)` over nonempty realizable `S`, with an achieving witness.
pub fn delta_max_dp(n: usize, t: u32) -> Result<(usize, FeasibilityWitness)> {
    let q = DepthQuery::new(n, t)?;
    let t = q.t as usize;
    let states = 6 * (t + 1);
    let mut parents = vec![0u32; states * n];
    let mut layer = initial_layer(t);
    let mut next = vec![NEG; states];
    let mut scratch = Scratch::new(t);
    for v in 1..n {
        let slot = &mut parents[v * states..(v + 1) * states];
        step(t, &layer, &mut next, Some(slot), &mut scratch);
        std::mem::swap(&mut layer, &mut next);
    }
    let (best, mut state) = best_nonempty(&layer).expect("all-zero exponents realize every edge");
    let mut a = vec![0u32; n];
    for v in (0..n).rev() {
        a[v] = (state / 6) as u32;
        if v > 0 {
            state = parents[v * states + state] as usize;
        }
    }
    let witness = FeasibilityWitness::from_exponents(a, q.t)?;
    debug_assert_eq!(witness.nu_prime() as i64, best);
    Ok((best as usize, witness))
}

/// `Delta` for every path `P_2, ..., P_{n_max}` at a fixed `t`, from a single
/// left-to-right sweep. Entry `i` holds the value for `n = i + 2`.
pub fn delta_profile(n_max: usize, t: u32) -> Result<Vec<usize>> {
    let q = DepthQuery::new(n_max, t)?;
    let t = q.t as usize;
    let mut layer = initial_layer(t);
    let mut next = vec![NEG; 6 * (t + 1)];
    let mut scratch = Scratch::new(t);
    let mut out = Vec::with_capacity(n_max - 1);
    for _ in 1..n_max {
        step(t, &layer, &mut next, None, &mut scratch);
        std::mem::swap(&mut layer, &mut next);
        let (best, _) = best_nonempty(&layer).expect("all-zero exponents realize every edge");
        out.push(best as usize);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(n: usize, e: &[usize]) -> EdgeSubset {
        EdgeSubset::from_edges(n, e).unwrap()
    }

    /// Exhaustive `Delta` over every exponent vector in `0..=t`.
    fn delta_by_enumeration(n: usize, t: u32) -> usize {
        let mut a = vec![0u32; n];
        let caps = vec![t; n];
        let mut best = 0;
        loop {
            let s = s_of_exponents(&a, t);
            if !s.is_empty() {
                best = best.max(nu_prime_forest(&s));
            }
            if !crate::monomial::odometer_step(&mut a, &caps) {
                return best;
            }
        }
    }

    #[test]
    fn s_of_exponents_examples() {
        assert_eq!(s_of_exponents(&[0, 0, 0, 0], 1), EdgeSubset::full(4));
        assert_eq!(s_of_exponents(&[0, 0, 1], 1), edges(3, &[1]));
        assert_eq!(s_of_exponents(&[0, 1, 1, 0], 2), edges(4, &[1, 3]));
        assert!(s_of_exponents(&[5, 5, 5], 3).is_empty());
    }

    #[test]
    fn feasible_examples() {
        for t in 1..5 {
            assert_eq!(feasible(5, t, &EdgeSubset::full(5)), Some(vec![0; 5]));
        }
        assert_eq!(feasible(4, 1, &edges(4, &[1, 3])), None);
        let a = feasible(4, 2, &edges(4, &[1, 3])).unwrap();
        assert_eq!(s_of_exponents(&a, 2), edges(4, &[1, 3]));
        assert_eq!(feasible(4, 2, &edges(5, &[1])), None);
    }

    #[test]
    fn feasible_agrees_with_enumeration() {
        for n in 2..7 {
            for t in 1..4 {
                let caps = vec![t; n];
                let mut realized = std::collections::BTreeSet::new();
                let mut a = vec![0u32; n];
                loop {
                    realized.insert(s_of_exponents(&a, t));
                    if !crate::monomial::odometer_step(&mut a, &caps) {
                        break;
                    }
                }
                for mask in 0..1u64 << (n - 1) {
                    let s = EdgeSubset::from_mask(n, mask).unwrap();
                    let got = feasible(n, t, &s);
                    assert_eq!(got.is_some(), realized.contains(&s), "n={n} t={t} S={s}");
                    if let Some(a) = got {
                        assert_eq!(s_of_exponents(&a, t), s);
                        assert!(a.iter().all(|&x| x <= t));
                    }
                }
            }
        }
    }

    #[test]
    fn dp_examples() {
        assert_eq!(delta_max_dp(3, 1).unwrap().0, 1);
        assert_eq!(delta_max_dp(4, 1).unwrap().0, 1);
        for k in 1..8 {
            for t in k as u32..k as u32 + 3 {
                assert_eq!(delta_max_dp(2 * k, t).unwrap().0, k, "k={k} t={t}");
            }
        }
        assert!(delta_max_dp(4, 0).is_err());
    }

    #[test]
    fn dp_matches_enumeration_and_witness_is_optimal() {
        for n in 2..10 {
            for t in 1..4 {
                let (delta, w) = delta_max_dp(n, t).unwrap();
                assert_eq!(delta, delta_by_enumeration(n, t), "n={n} t={t}");
                assert_eq!(w.nu_prime(), delta);
                assert_eq!(s_of_exponents(&w.a, t), w.s);
            }
        }
    }

    #[test]
    fn profile_matches_single_runs() {
        for t in 1..6 {
            let profile = delta_profile(40, t).unwrap();
            for n in 2..=40 {
                assert_eq!(profile[n - 2], delta_max_dp(n, t).unwrap().0, "n={n} t={t}");
            }
        }
    }
}
