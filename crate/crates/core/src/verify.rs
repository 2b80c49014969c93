//! Cross-verification sweeps over `(n, t)` grids.
//!
//! Brute force arbitrates: any disagreement between methods is reported as
//! a failure with full context, never resolved in favour of a formula.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::depth::closed::dstab_scan_with;
use crate::depth::{
    cover_power, delta_max_dp, depth_closed, dstab_closed, feasible,
    hochster_cross_check_with, limit_depth, witness_blocks, BlockLayout, Budget, DepthQuery,
    Method,
};
use crate::error::Result;
use crate::monomial::Monomial;

/// Deliberate defects for exercising the harness itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Subtract the floor term of the closed form instead of adding it.
    NegatedClosed,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub n_range: RangeInclusive<usize>,
    pub t_range: RangeInclusive<u32>,
    /// Upper `n` for the stability-index scan.
    pub dstab_n_max: usize,
    pub hochster_samples: usize,
    pub hochster_n_max: usize,
    pub hochster_t_max: u32,
    pub seed: u64,
    pub budget: Budget,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_range: 2..=12,
            t_range: 1..=4,
            dstab_n_max: 40,
            hochster_samples: 200,
            hochster_n_max: 6,
            hochster_t_max: 3,
            seed: 0x5eed,
            budget: Budget::default(),
            fault: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub check: &'static str,
    pub n: usize,
    pub t: Option<u32>,
    pub s: Option<String>,
    pub a: Option<Vec<u32>>,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] n={}", self.check, self.n)?;
        if let Some(t) = self.t {
            write!(f, " t={t}")?;
        }
        if let Some(s) = &self.s {
            write!(f, " S={{{s}}}")?;
        }
        if let Some(a) = &self.a {
            write!(f, " a={a:?}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug, Clone)]
pub struct CheckSummary {
    pub name: &'static str,
    pub cases: usize,
    /// Cases (or method evaluations) skipped for budget reasons.
    pub skipped: usize,
    pub failures: Vec<Failure>,
}

impl CheckSummary {
    fn new(name: &'static str) -> Self {
        CheckSummary {
            name,
            cases: 0,
            skipped: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub checks: Vec<CheckSummary>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckSummary::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Failure> {
        self.checks.iter().flat_map(|c| &c.failures)
    }
}

fn negated_closed(n: usize, t: u32) -> Result<usize> {
    let q = DepthQuery::new(n, t)?;
    let d = 2 * q.t as usize + 1;
    Ok(if n % 2 == 0 {
        let k = n / 2;
        (k - 1).saturating_sub((k + q.t as usize) / d)
    } else {
        let a = (n - 1) / 2;
        a - a / d
    })
}

struct Formulas {
    closed: fn(usize, u32) -> Result<usize>,
}

impl Formulas {
    fn new(fault: Option<Fault>) -> Self {
        Formulas {
            closed: match fault {
                Some(Fault::NegatedClosed) => negated_closed,
                None => depth_closed,
            },
        }
    }
}

pub fn run(cfg: &VerifyConfig) -> VerifyReport {
    let formulas = Formulas::new(cfg.fault);
    let cells: Vec<DepthQuery> = cfg
        .n_range
        .clone()
        .flat_map(|n| cfg.t_range.clone().filter_map(move |t| DepthQuery::new(n, t).ok()))
        .collect();

    let checks = vec![
        method_agreement(&cells, cfg, &formulas),
        monotonicity(cfg, &formulas),
        stabilization(cfg, &formulas),
        witness_optimality(&cells),
        block_arithmetic(&cells),
        hochster(cfg),
        dstab(cfg, &formulas),
    ];
    VerifyReport { checks }
}

struct CellOutcome {
    skipped: usize,
    failure: Option<Failure>,
}

fn agreement_cell(q: DepthQuery, cfg: &VerifyConfig, formulas: &Formulas) -> CellOutcome {
    let mut values: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut skipped = 0;
    let mut errors = Vec::new();
    let (delta, wit) = match delta_max_dp(q.n, q.t) {
        Ok(v) => v,
        Err(e) => {
            return CellOutcome {
                skipped,
                failure: Some(Failure {
                    check: "method-agreement",
                    n: q.n,
                    t: Some(q.t),
                    s: None,
                    a: None,
                    detail: e.to_string(),
                }),
            }
        }
    };
    values.insert("dp", q.n - 1 - delta);
    match (formulas.closed)(q.n, q.t) {
        Ok(v) => {
            values.insert("closed", v);
        }
        Err(e) => errors.push(format!("closed: {e}")),
    }
    for m in [Method::Unified, Method::BruteExp, Method::BruteSubset] {
        match m.compute(q, &cfg.budget) {
            Ok(v) => {
                values.insert(m.name(), v);
            }
            Err(e) if e.is_budget() => skipped += 1,
            Err(e) => errors.push(format!("{m}: {e}")),
        }
    }
    let first = values.values().next().copied();
    let agree = values.values().all(|&v| Some(v) == first);
    let failure = (!agree || !errors.is_empty()).then(|| Failure {
        check: "method-agreement",
        n: q.n,
        t: Some(q.t),
        s: Some(wit.s.to_string()),
        a: Some(wit.a.clone()),
        detail: format!("values {values:?} errors {errors:?}"),
    });
    CellOutcome { skipped, failure }
}

fn method_agreement(cells: &[DepthQuery], cfg: &VerifyConfig, formulas: &Formulas) -> CheckSummary {
    let outcomes: Vec<CellOutcome> = cells
        .par_iter()
        .map(|&q| agreement_cell(q, cfg, formulas))
        .collect();
    let mut summary = CheckSummary::new("method-agreement");
    summary.cases = cells.len();
    for o in outcomes {
        summary.skipped += o.skipped;
        summary.failures.extend(o.failure);
    }
    summary
}

fn simple_failure(check: &'static str, n: usize, t: Option<u32>, detail: String) -> Failure {
    Failure {
        check,
        n,
        t,
        s: None,
        a: None,
        detail,
    }
}

fn monotonicity(cfg: &VerifyConfig, formulas: &Formulas) -> CheckSummary {
    let mut summary = CheckSummary::new("monotonicity");
    for n in cfg.n_range.clone().filter(|&n| n >= 2) {
        for t in cfg.t_range.clone().filter(|&t| t >= 1) {
            summary.cases += 1;
            let pair = (formulas.closed)(n, t).and_then(|a| Ok((a, (formulas.closed)(n, t + 1)?)));
            match pair {
                Ok((a, b)) if a >= b => {}
                Ok((a, b)) => summary.failures.push(simple_failure(
                    "monotonicity",
                    n,
                    Some(t),
                    format!("depth {a} at t, {b} at t+1"),
                )),
                Err(e) => summary
                    .failures
                    .push(simple_failure("monotonicity", n, Some(t), e.to_string())),
            }
        }
    }
    summary
}

fn stabilization(cfg: &VerifyConfig, formulas: &Formulas) -> CheckSummary {
    let mut summary = CheckSummary::new("stabilization");
    for n in cfg.n_range.clone().filter(|&n| n >= 2) {
        let (Ok(stab), Ok(limit)) = (dstab_closed(n), limit_depth(n)) else {
            continue;
        };
        let t_max = (*cfg.t_range.end()).max(stab + 2);
        for t in 1..=t_max {
            summary.cases += 1;
            let Ok(d) = (formulas.closed)(n, t) else {
                continue;
            };
            let ok = if t >= stab { d == limit } else { d > limit };
            if !ok {
                summary.failures.push(simple_failure(
                    "stabilization",
                    n,
                    Some(t),
                    format!("depth {d}, limit {limit}, dstab {stab}"),
                ));
            }
        }
    }
    summary
}

fn witness_optimality(cells: &[DepthQuery]) -> CheckSummary {
    let failures: Vec<Option<Failure>> = cells
        .par_iter()
        .map(|&q| {
            let fail = |detail: String, w: Option<&crate::depth::FeasibilityWitness>| Failure {
                check: "witness-optimality",
                n: q.n,
                t: Some(q.t),
                s: w.map(|w| w.s.to_string()),
                a: w.map(|w| w.a.clone()),
                detail,
            };
            let (delta, _) = match delta_max_dp(q.n, q.t) {
                Ok(v) => v,
                Err(e) => return Some(fail(e.to_string(), None)),
            };
            let w = match witness_blocks(q.n, q.t) {
                Ok(w) => w,
                Err(e) => return Some(fail(e.to_string(), None)),
            };
            if feasible(q.n, q.t, &w.s).is_none() {
                return Some(fail("witness edge set not realizable".into(), Some(&w)));
            }
            (w.nu_prime() != delta)
                .then(|| fail(format!("nu' {} vs dp delta {delta}", w.nu_prime()), Some(&w)))
        })
        .collect();
    let mut summary = CheckSummary::new("witness-optimality");
    summary.cases = cells.len();
    summary.failures = failures.into_iter().flatten().collect();
    summary
}

fn block_arithmetic(cells: &[DepthQuery]) -> CheckSummary {
    let mut summary = CheckSummary::new("block-arithmetic");
    for &q in cells {
        summary.cases += 1;
        let Ok(layout) = BlockLayout::new(q.n, q.t) else {
            continue;
        };
        let mut problems = Vec::new();
        if layout.edges != layout.blocks * layout.block_width() + layout.remainder
            || layout.remainder > 2 * q.t as usize
        {
            problems.push(format!("bad layout {layout:?}"));
        }
        if let Ok((delta, _)) = delta_max_dp(q.n, q.t) {
            let k = q.n / 2;
            if let Some(formula) = layout.even_delta_formula() {
                if (q.t as usize) < k && formula != delta {
                    problems.push(format!("even delta formula {formula} vs dp {delta}"));
                }
            }
            if layout.delta() != delta {
                problems.push(format!("block count {} vs dp {delta}", layout.delta()));
            }
        }
        if !problems.is_empty() {
            summary.failures.push(simple_failure(
                "block-arithmetic",
                q.n,
                Some(q.t),
                problems.join("; "),
            ));
        }
    }
    summary
}

/// Random exponent vectors outside `J(P_n)^t`, deterministic in `seed`.
pub fn hochster_samples(
    count: usize,
    n_max: usize,
    t_max: u32,
    seed: u64,
    budget: &Budget,
) -> Result<Vec<(usize, u32, Monomial)>> {
    let mut powers = BTreeMap::new();
    for n in 2..=n_max.max(2) {
        for t in 1..=t_max.max(1) {
            powers.insert((n, t), cover_power(n, t, budget)?);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=n_max.max(2));
        let t = rng.gen_range(1..=t_max.max(1));
        // one past t also exercises the capping argument
        let a: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=t + 1)).collect();
        let f = Monomial::new(a);
        if !powers[&(n, t)].contains(&f)? {
            out.push((n, t, f));
        }
    }
    Ok(out)
}

fn hochster(cfg: &VerifyConfig) -> CheckSummary {
    let mut summary = CheckSummary::new("hochster-cross-check");
    let samples = match hochster_samples(
        cfg.hochster_samples,
        cfg.hochster_n_max,
        cfg.hochster_t_max,
        cfg.seed,
        &cfg.budget,
    ) {
        Ok(s) => s,
        Err(e) => {
            summary.skipped = cfg.hochster_samples;
            if !e.is_budget() {
                summary
                    .failures
                    .push(simple_failure("hochster-cross-check", 0, None, e.to_string()));
            }
            return summary;
        }
    };
    let mut powers = BTreeMap::new();
    for (n, t, f) in samples {
        summary.cases += 1;
        let power = powers
            .entry((n, t))
            .or_insert_with(|| cover_power(n, t, &cfg.budget).expect("checked above"));
        let outcome = hochster_cross_check_with(power, t, &f);
        if !matches!(outcome, Ok(true)) {
            summary.failures.push(Failure {
                check: "hochster-cross-check",
                n,
                t: Some(t),
                s: Some(crate::depth::s_of_exponents(f.exponents(), t).to_string()),
                a: Some(f.exponents().to_vec()),
                detail: format!("{outcome:?}"),
            });
        }
    }
    summary
}

fn dstab(cfg: &VerifyConfig, formulas: &Formulas) -> CheckSummary {
    let mut summary = CheckSummary::new("dstab-scan");
    for n in 2..=cfg.dstab_n_max {
        summary.cases += 1;
        let scan = dstab_scan_with(n, formulas.closed);
        let closed = dstab_closed(n);
        if scan.as_ref().ok() != closed.as_ref().ok() {
            summary.failures.push(simple_failure(
                "dstab-scan",
                n,
                None,
                format!("scan {scan:?} vs closed {closed:?}"),
            ));
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            n_range: 2..=8,
            t_range: 1..=3,
            dstab_n_max: 20,
            hochster_samples: 20,
            hochster_n_max: 4,
            hochster_t_max: 2,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn small_grid_passes() {
        let report = run(&small());
        for c in &report.checks {
            assert!(c.passed(), "{}: {:?}", c.name, c.failures);
            assert!(c.cases > 0, "{} ran nothing", c.name);
        }
    }

    #[test]
    fn injected_fault_is_reported() {
        let cfg = VerifyConfig {
            fault: Some(Fault::NegatedClosed),
            ..small()
        };
        let report = run(&cfg);
        assert!(!report.passed());
        let agreement = &report.checks[0];
        assert!(!agreement.passed());
        let f = &agreement.failures[0];
        assert!(f.s.is_some() && f.a.is_some());
        assert!(f.to_string().starts_with("[method-agreement]"));
    }

    #[test]
    fn budget_skips_are_counted() {
        let cfg = VerifyConfig {
            budget: Budget {
                exponent_evals: 10,
                subsets: 10,
                ..Budget::default()
            },
            ..small()
        };
        let report = run(&cfg);
        assert!(report.checks[0].passed());
        assert!(report.checks[0].skipped > 0);
    }

    #[test]
    fn samples_are_deterministic() {
        let b = Budget::default();
        let x = hochster_samples(10, 5, 2, 7, &b).unwrap();
        let y = hochster_samples(10, 5, 2, 7, &b).unwrap();
        assert_eq!(x, y);
    }
}
