//! Brute-force depth oracles and the algebraic cross-check of the
//! associated-radical reduction.

use crate::error::{Error, Result};
use crate::graph::{nu_prime_forest, nu_prime_run, EdgeSubset};
use crate::monomial::{cover_ideal_edges, cover_ideal_path, Monomial, MonomialIdeal};

use super::dp::{feasible, s_of_exponents};
use super::{Budget, DepthQuery};

/// `n - nu'(G_S) - 1`, the depth of `R/J_S` for a nonempty forest `G_S`.
pub fn depth_forest_cover(n: usize, s: &EdgeSubset) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::domain("J_S needs a nonempty edge set"));
    }
    if s.n() != n {
        return Err(Error::VariableMismatch {
            expected: n,
            found: s.n(),
        });
    }
    Ok(n - nu_prime_forest(s) - 1)
}

/// Depth by visiting every exponent vector in `{0..t}^n`.
///
/// Each vector is walked edge by edge, tracking the length of the current
/// run of realized edges; runs contribute `ceil(len/3)` when they close.
pub fn depth_bruteforce_exponents(n: usize, t: u32, budget: &Budget) -> Result<usize> {
    let q = DepthQuery::new(n, t)?;
    let volume = (u128::from(t) + 1).checked_pow(n as u32).unwrap_or(u128::MAX);
    if volume > budget.exponent_evals {
        return Err(Error::BudgetExceeded {
            what: "exponent oracle",
            required: volume,
            limit: budget.exponent_evals,
        });
    }

    struct Walk {
        n: usize,
        t: u32,
        best: Option<usize>,
    }

    impl Walk {
        fn visit(&mut self, v: usize, prev: u32, run: usize, count: usize, any: bool) {
            if v == self.n {
                if any {
                    let total = count + nu_prime_run(run);
                    self.best = Some(self.best.map_or(total, |b| b.max(total)));
                }
                return;
            }
            for a in 0..=self.t {
                if prev + a < self.t {
                    self.visit(v + 1, a, run + 1, count, true);
                } else {
                    self.visit(v + 1, a, 0, count + nu_prime_run(run), any);
                }
            }
        }
    }

    let mut walk = Walk {
        n: q.n,
        t,
        best: None,
    };
    for a0 in 0..=t {
        walk.visit(1, a0, 0, 0, false);
    }
    let delta = walk.best.expect("the zero vector realizes every edge");
    Ok(n - 1 - delta)
}

/// Depth by enumerating every nonempty edge set and testing realizability.
pub fn depth_bruteforce_subsets(n: usize, t: u32, budget: &Budget) -> Result<usize> {
    let q = DepthQuery::new(n, t)?;
    let edges = q.n - 1;
    let count = 1u128 << edges.min(127);
    if edges > 63 || count > budget.subsets {
        return Err(Error::BudgetExceeded {
            what: "subset oracle",
            required: count,
            limit: budget.subsets,
        });
    }
    let mut best = None::<usize>;
    for mask in 1u64..1 << edges {
        let s = EdgeSubset::from_mask(n, mask)?;
        if feasible(n, t, &s).is_some() {
            let nu = nu_prime_forest(&s);
            best = Some(best.map_or(nu, |b| b.max(nu)));
        }
    }
    let delta = best.expect("the full edge set is realizable");
    Ok(n - 1 - delta)
}

/// Check `sqrt(J(P_n)^t : f) == intersection of (x_i, x_{i+1}) over S(f)`
/// with explicit ideal arithmetic.
pub fn hochster_cross_check(n: usize, t: u32, f: &Monomial, budget: &Budget) -> Result<bool> {
    let power = cover_power(n, t, budget)?;
    hochster_cross_check_with(&power, t, f)
}

/// `J(P_n)^t`, refusing sizes whose exponent box exceeds the algebra budget.
pub fn cover_power(n: usize, t: u32, budget: &Budget) -> Result<MonomialIdeal> {
    let q = DepthQuery::new(n, t)?;
    let volume = (u128::from(t) + 1).checked_pow(q.n as u32).unwrap_or(u128::MAX);
    if volume > budget.algebra_box {
        return Err(Error::BudgetExceeded {
            what: "algebra box",
            required: volume,
            limit: budget.algebra_box,
        });
    }
    Ok(cover_ideal_path(n)?.power(t))
}

/// As [`hochster_cross_check`], reusing a precomputed `J(P_n)^t`.
pub fn hochster_cross_check_with(power: &MonomialIdeal, t: u32, f: &Monomial) -> Result<bool> {
    let n = power.n();
    if power.contains(f)? {
        return Err(Error::Precondition(format!("{f} lies in J(P_{n})^{t}")));
    }
    let lhs = power.colon(f)?.radical();
    let s = s_of_exponents(f.exponents(), t);
    let rhs = cover_ideal_edges(n, &s)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::depth::closed::depth_closed;

    #[test]
    fn forest_cover_examples() {
        assert_eq!(depth_forest_cover(6, &EdgeSubset::full(6)).unwrap(), 3);
        assert_eq!(depth_forest_cover(2, &EdgeSubset::full(2)).unwrap(), 0);
        let s = EdgeSubset::from_edges(6, &[1, 3, 5]).unwrap();
        assert_eq!(depth_forest_cover(6, &s).unwrap(), 2);
        assert!(matches!(
            depth_forest_cover(6, &EdgeSubset::empty(6)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn exponent_oracle_examples() {
        let b = Budget::default();
        assert_eq!(depth_bruteforce_exponents(4, 1, &b).unwrap(), 2);
        assert_eq!(depth_bruteforce_exponents(3, 2, &b).unwrap(), 1);
        // even branch, t <= k-1 at k = 3: 2 + floor(5/5) = 3
        assert_eq!(depth_bruteforce_exponents(6, 2, &b).unwrap(), 3);
        assert_eq!(depth_closed(6, 2).unwrap(), 3);
    }

    #[test]
    fn subset_oracle_examples() {
        let b = Budget::default();
        assert_eq!(depth_bruteforce_subsets(4, 1, &b).unwrap(), 2);
        assert_eq!(depth_bruteforce_subsets(7, 1, &b).unwrap(), 4);
        for t in 1..6 {
            assert_eq!(depth_bruteforce_subsets(2, t, &b).unwrap(), 0);
        }
    }

    #[test]
    fn oracles_respect_budgets() {
        let tight = Budget {
            exponent_evals: 15,
            subsets: 8,
            ..Budget::default()
        };
        let err = depth_bruteforce_exponents(4, 1, &tight).unwrap_err();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                what: "exponent oracle",
                required: 16,
                limit: 15
            }
        );
        assert!(depth_bruteforce_subsets(5, 1, &tight).unwrap_err().is_budget());
        assert!(depth_bruteforce_subsets(4, 1, &tight).is_ok());
        assert!(depth_bruteforce_subsets(80, 1, &Budget::default()).unwrap_err().is_budget());
    }

    #[test]
    fn hochster_examples() {
        let b = Budget::default();
        let x1 = Monomial::new(vec![1, 0, 0]);
        assert!(hochster_cross_check(3, 1, &x1, &b).unwrap());
        let x2 = Monomial::new(vec![0, 1, 0]);
        assert!(hochster_cross_check(3, 2, &x2, &b).unwrap());
        // x2 lies in J(P_3) itself
        assert!(matches!(
            hochster_cross_check(3, 1, &x2, &b),
            Err(Error::Precondition(_))
        ));
    }
}
