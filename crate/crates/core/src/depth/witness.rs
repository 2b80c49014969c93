//! Explicit exponent vectors realizing the block construction.

use crate::error::Result;

use super::closed::BlockLayout;
use super::dp::FeasibilityWitness;

/// Exponent assigned to position `p` (0-based) of a block of `2t + 1` edges.
///
/// Within a block the values run `0, t-1, 1, t-2, ..., t-1, 0, t`: every
/// edge starting at an even position sums to `t - 1` and lies in `S`, every
/// other edge sums to `t`. The last vertex of the block carries `t`, so the
/// joining edge to the next block's leading `0` stays outside `S`.
fn block_exponent(p: usize, t: u32) -> u32 {
    if p % 2 == 0 {
        (p / 2) as u32
    } else {
        t - 1 - ((p - 1) / 2) as u32
    }
}

/// Build the block-construction witness for `P_n` at power `t`.
///
/// The path is cut into `floor((n-1)/(2t+1))` blocks of `2t + 1` edges, each
/// holding `t` isolated S-edges; the remaining `r` edges reuse the same
/// assignment truncated, holding `floor((r+1)/2)` more.
pub fn witness_blocks(n: usize, t: u32) -> Result<FeasibilityWitness> {
    let layout = BlockLayout::new(n, t)?;
    let width = layout.block_width();
    let a = (0..n).map(|v| block_exponent(v % width, t)).collect();
    let w = FeasibilityWitness::from_exponents(a, t)?;
    debug_assert_eq!(w.nu_prime(), layout.delta());
    Ok(w)
}
