//! Closed-form depth values, stability index and limit depth.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::nu_zero_path;

use super::DepthQuery;

/// Piecewise closed form for `depth R/J(P_n)^t`, branch by branch.
///
/// * `n = 2k`: `k - 1 + floor((k+t)/(2t+1))` for `t <= k-1`, else `k - 1`.
/// * `n = 4k+3`: `2k+1 + floor((2k+1)/(2t+1))` for `t <= k`, else `2k+1`.
/// * `n = 4k+1`: `2k + floor(2k/(2t+1))` for `t <= k-1`, else `2k`.
pub fn depth_closed(n: usize, t: u32) -> Result<usize> {
    let q = DepthQuery::new(n, t)?;
    let t = q.t as usize;
    let d = 2 * t + 1;
    let value = if n % 2 == 0 {
        let k = n / 2;
        if t < k {
            k - 1 + (k + t) / d
        } else {
            k - 1
        }
    } else if n % 4 == 3 {
        let k = (n - 3) / 4;
        if t <= k {
            2 * k + 1 + (2 * k + 1) / d
        } else {
            2 * k + 1
        }
    } else {
        let k = (n - 1) / 4;
        if t < k {
            2 * k + (2 * k) / d
        } else {
            2 * k
        }
    };
    Ok(value)
}

/// Single-expression form: `A + floor(A/(2t+1))` with `A = (n-1)/2` for odd
/// `n`, and `k - 1 + floor((k+t)/(2t+1))` for `n = 2k`, at every `t >= 1`.
pub fn depth_closed_unified(n: usize, t: u32) -> Result<usize> {
    let q = DepthQuery::new(n, t)?;
    let t = q.t as usize;
    let d = 2 * t + 1;
    Ok(if n % 2 == 0 {
        let k = n / 2;
        k - 1 + (k + t) / d
    } else {
        let a = (n - 1) / 2;
        a + a / d
    })
}

/// `n - nu_0(P_n) - 1`, the eventual constant value of the depth function.
pub fn limit_depth(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::domain(format!("path needs n >= 2, got {n}")));
    }
    Ok(n - nu_zero_path(n) - 1)
}

/// Depth stability index: `n/2` for even `n`, `ceil((n-1)/4)` for odd `n`.
pub fn dstab_closed(n: usize) -> Result<u32> {
    if n < 2 {
        return Err(Error::domain(format!("path needs n >= 2, got {n}")));
    }
    let v = if n % 2 == 0 {
        n / 2
    } else {
        (n - 1).div_ceil(4)
    };
    Ok(v as u32)
}

/// Smallest `t >= 1` with `depth_closed(n, t) <= limit_depth(n)`.
pub fn dstab_scan(n: usize) -> Result<u32> {
    dstab_scan_with(n, depth_closed)
}

pub(crate) fn dstab_scan_with(
    n: usize,
    depth: impl Fn(usize, u32) -> Result<usize>,
) -> Result<u32> {
    let limit = limit_depth(n)?;
    // the depth function reaches its limit by t = n
    for t in 1..=n as u32 {
        if depth(n, t)? <= limit {
            return Ok(t);
        }
    }
    Err(Error::Precondition(format!(
        "depth of n={n} never reached its limit {limit}"
    )))
}

/// Decomposition of the `n - 1` path edges into blocks of `2t + 1` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockLayout {
    pub edges: usize,
    pub t: u32,
    /// Number of complete blocks.
    pub blocks: usize,
    /// Edges left after the complete blocks, `0..=2t`.
    pub remainder: usize,
    /// `(n-1)/2` when `n` is odd.
    pub half: Option<usize>,
}

impl BlockLayout {
    pub fn new(n: usize, t: u32) -> Result<Self> {
        let q = DepthQuery::new(n, t)?;
        let edges = q.n - 1;
        let width = 2 * t as usize + 1;
        Ok(BlockLayout {
            edges,
            t,
            blocks: edges / width,
            remainder: edges % width,
            half: (n % 2 == 1).then_some(edges / 2),
        })
    }

    pub fn block_width(&self) -> usize {
        2 * self.t as usize + 1
    }

    /// Induced matching number realized by the block construction:
    /// `t` isolated S-edges per block plus `floor((r+1)/2)` in the remainder.
    pub fn delta(&self) -> usize {
        self.blocks * self.t as usize + (self.remainder + 1) / 2
    }

    /// `k - floor((k+t)/(2t+1))`, the even-path value of the maximum.
    pub fn even_delta_formula(&self) -> Option<usize> {
        let n = self.edges + 1;
        (n % 2 == 0).then(|| {
            let k = n / 2;
            k - (k + self.t as usize) / self.block_width()
        })
    }
}

/// The two floor identities used when simplifying the closed forms:
/// `ceil(a/2) == floor((a+1)/2)` and `floor(floor(x)/b) == floor(x/b)`.
pub fn floor_identities(a: u64, x: Ratio<i64>, b: i64) -> Result<(bool, bool)> {
    if a == 0 || b <= 0 {
        return Err(Error::domain("floor identities need a, b >= 1"));
    }
    let first = a.div_ceil(2) == (a + 1) / 2;
    let b = Ratio::from_integer(b);
    let lhs = (x.floor() / b).floor();
    let rhs = (x / b).floor();
    Ok((first, lhs == rhs))
}
