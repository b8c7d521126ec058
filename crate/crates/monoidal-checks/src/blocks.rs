//! Block structure of a family of Karoubi objects: linkage classes,
//! triviality flags, and an explicit recheck that distinct blocks have no
//! Homs between them.  Everything is scoped to the finite truncation.

use crate::{MonCtx, MonError};
use diagram_category::{blocks, hom_dimension, KarObject};

pub struct EnvelopeReport {
    /// Indices of the input objects grouped into linkage classes.
    pub blocks: Vec<Vec<usize>>,
    /// Per block: a unique indecomposable up to isomorphism.
    pub almost_trivial: Vec<bool>,
    /// Per block: almost trivial with one-dimensional endomorphisms.
    pub trivial: Vec<bool>,
    pub all_trivial: bool,
    /// Cross-block Homs rechecked to vanish in both directions.
    pub cross_homs_zero: bool,
    /// The truncation cap this report is scoped to.
    pub truncation_cap: usize,
}

/// The block report of the given objects, with the cross-block Hom
/// vanishing rechecked directly.
pub fn envelope_block_report(
    mc: &MonCtx,
    objects: &[KarObject],
) -> Result<EnvelopeReport, MonError> {
    let u = mc.u();
    let report = blocks(objects, u, &mc.limits)?;
    let block_of = {
        let mut map = vec![0usize; objects.len()];
        for (b, members) in report.blocks.iter().enumerate() {
            for &i in members {
                map[i] = b;
            }
        }
        map
    };
    let mut cross_homs_zero = true;
    for i in 0..objects.len() {
        for j in 0..objects.len() {
            if i != j
                && block_of[i] != block_of[j]
                && hom_dimension(&objects[i], &objects[j], u, &mc.limits)? != 0
            {
                cross_homs_zero = false;
            }
        }
    }
    let all_trivial = !report.trivial.is_empty() && report.trivial.iter().all(|&t| t);
    Ok(EnvelopeReport {
        blocks: report.blocks,
        almost_trivial: report.almost_trivial,
        trivial: report.trivial,
        all_trivial,
        cross_homs_zero,
        truncation_cap: mc.ta.n_cap,
    })
}
