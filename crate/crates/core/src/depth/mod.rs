//! `depth R/J(P_n)^t` by several independent routes.
//!
//! * [`Method::Closed`] and [`Method::Unified`]: closed formulas.
//! * [`Method::Dp`]: `n - 1 - Delta` with `Delta` from the dynamic program.
//! * [`Method::BruteExp`] and [`Method::BruteSubset`]: exhaustive oracles.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub mod closed;
pub mod dp;
pub mod oracle;
pub mod witness;

pub use closed::{
    depth_closed, depth_closed_unified, dstab_closed, dstab_scan, floor_identities, limit_depth,
    BlockLayout,
};
pub use dp::{delta_max_dp, delta_profile, feasible, s_of_exponents, FeasibilityWitness};
pub use oracle::{
    cover_power, depth_bruteforce_exponents, depth_bruteforce_subsets, depth_forest_cover,
    hochster_cross_check, hochster_cross_check_with,
};
pub use witness::witness_blocks;

/// A validated `(n, t)` pair, `n >= 2` and `t >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DepthQuery {
    pub n: usize,
    pub t: u32,
}

impl DepthQuery {
    pub fn new(n: usize, t: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("path needs n >= 2, got {n}")));
        }
        if t == 0 {
            return Err(Error::domain("power t must be at least 1"));
        }
        Ok(DepthQuery { n, t })
    }
}

/// Work limits for the exhaustive routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum `(t+1)^n` for the exponent oracle.
    pub exponent_evals: u128,
    /// Maximum `2^(n-1)` for the subset oracle.
    pub subsets: u128,
    /// Maximum exponent box for explicit ideal arithmetic.
    pub algebra_box: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            exponent_evals: 100_000_000,
            subsets: 1 << 24,
            algebra_box: 1 << 24,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Closed,
    Unified,
    Dp,
    BruteExp,
    BruteSubset,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Closed,
        Method::Unified,
        Method::Dp,
        Method::BruteExp,
        Method::BruteSubset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Unified => "unified",
            Method::Dp => "dp",
            Method::BruteExp => "brute-exp",
            Method::BruteSubset => "brute-subset",
        }
    }

    pub fn is_bruteforce(self) -> bool {
        matches!(self, Method::BruteExp | Method::BruteSubset)
    }

    pub fn compute(self, q: DepthQuery, budget: &Budget) -> Result<usize> {
        match self {
            Method::Closed => depth_closed(q.n, q.t),
            Method::Unified => depth_closed_unified(q.n, q.t),
            Method::Dp => delta_max_dp(q.n, q.t).map(|(delta, _)| q.n - 1 - delta),
            Method::BruteExp => depth_bruteforce_exponents(q.n, q.t, budget),
            Method::BruteSubset => depth_bruteforce_subsets(q.n, q.t, budget),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

/// Depth values of one query by every requested method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthReport {
    pub query: DepthQuery,
    pub depth_by_method: BTreeMap<Method, usize>,
    /// `Delta` from the dynamic program.
    pub delta: usize,
    pub witness: Option<FeasibilityWitness>,
}

impl DepthReport {
    /// Run `methods` on `query`. The DP always runs to supply `delta`.
    pub fn compute(query: DepthQuery, methods: &[Method], budget: &Budget) -> Result<Self> {
        let (delta, witness) = delta_max_dp(query.n, query.t)?;
        let mut depth_by_method = BTreeMap::new();
        for &m in methods {
            let value = match m {
                Method::Dp => query.n - 1 - delta,
                _ => m.compute(query, budget)?,
            };
            depth_by_method.insert(m, value);
        }
        Ok(DepthReport {
            query,
            depth_by_method,
            delta,
            witness: Some(witness),
        })
    }

    /// The common depth if every method agrees (and matches `n - delta - 1`).
    pub fn agreed_depth(&self) -> Option<usize> {
        let expected = self.query.n - self.delta - 1;
        self.depth_by_method
            .values()
            .all(|&d| d == expected)
            .then_some(expected)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ReportWire::from(self)).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: ReportWire =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        wire.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct ReportWire {
    n: usize,
    t: u32,
    depth: BTreeMap<Method, usize>,
    delta: usize,
    witness: Option<dp::WitnessWire>,
}

impl From<&DepthReport> for ReportWire {
    fn from(r: &DepthReport) -> Self {
        ReportWire {
            n: r.query.n,
            t: r.query.t,
            depth: r.depth_by_method.clone(),
            delta: r.delta,
            witness: r.witness.as_ref().map(FeasibilityWitness::to_wire),
        }
    }
}

impl TryFrom<ReportWire> for DepthReport {
    type Error = Error;

    fn try_from(w: ReportWire) -> Result<Self> {
        let query = DepthQuery::new(w.n, w.t)?;
        let witness = w.witness.map(FeasibilityWitness::from_wire).transpose()?;
        if let Some(wit) = &witness {
            if wit.a.len() != w.n {
                return Err(Error::VariableMismatch {
                    expected: w.n,
                    found: wit.a.len(),
                });
            }
        }
        Ok(DepthReport {
            query,
            depth_by_method: w.depth,
            delta: w.delta,
            witness,
        })
    }
}
