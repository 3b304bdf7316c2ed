//! Sweeps over many coverings: every covering of a tiny universe, or
//! seeded random ones.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{check_property, Mode, PropertyId, PropertyOutcome, Status};
use crate::covering::SoftCoveringSpace;
use crate::error::{Error, Result};
use crate::limit::ExhaustiveLimit;
use crate::sets::{Bits, SetFamily, Universe};
use crate::soft_set::SoftSet;

/// Largest universe whose coverings can all be listed (`2^(2^n - 1)`
/// candidate families).
pub const MAX_ENUMERATED: usize = 4;

/// Every covering of the universe by distinct nonempty blocks, optionally
/// with at most `max_blocks` blocks. Families are listed in increasing
/// order of their block-selection mask.
pub fn enumerate_coverings(
    universe: &Arc<Universe>,
    max_blocks: Option<usize>,
) -> Result<impl Iterator<Item = SoftCoveringSpace>> {
    let n = universe.len();
    if n > MAX_ENUMERATED {
        return Err(Error::UniverseTooLarge { size: n, limit: MAX_ENUMERATED });
    }
    let full = universe.full_bits();
    let candidates = full as usize; // nonempty subsets 1..=full
    let universe = universe.clone();
    let max_blocks = max_blocks.unwrap_or(candidates);
    Ok((1u64..1u64 << candidates).filter_map(move |choice| {
        if choice.count_ones() as usize > max_blocks {
            return None;
        }
        let blocks: Vec<Bits> = (0..candidates)
            .filter(|i| choice & (1 << i) != 0)
            .map(|i| i as Bits + 1)
            .collect();
        if blocks.iter().fold(0, |acc, b| acc | b) != full {
            return None;
        }
        SoftCoveringSpace::from_bits(&universe, blocks).ok()
    }))
}

/// A random covering soft set with between 1 and `max_blocks` parameters.
/// Blocks may repeat; elements left uncovered are added to random blocks.
pub fn random_covering(rng: &mut impl Rng, universe: &Arc<Universe>, max_blocks: usize) -> SoftCoveringSpace {
    let full = universe.full_bits();
    let count = rng.gen_range(1..=max_blocks.max(1));
    let mut blocks: Vec<Bits> = (0..count)
        .map(|_| loop {
            let b = rng.gen::<Bits>() & full;
            if b != 0 {
                break b;
            }
        })
        .collect();
    let covered = blocks.iter().fold(0, |acc, b| acc | b);
    for x in 0..universe.len() {
        if covered & (1 << x) == 0 {
            let i = rng.gen_range(0..blocks.len());
            blocks[i] |= 1 << x;
        }
    }
    SoftCoveringSpace::from_bits(universe, blocks).expect("patched blocks cover the universe")
}

/// A random soft set with up to `max_parameters` parameters; images may be
/// empty and need not cover the universe.
pub fn random_soft_set(rng: &mut impl Rng, universe: &Arc<Universe>, max_parameters: usize) -> SoftSet {
    let full = universe.full_bits();
    let count = rng.gen_range(1..=max_parameters.max(1));
    SoftSet::from_bits(universe, (0..count).map(|_| rng.gen::<Bits>() & full))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoveringSource {
    /// Every covering of an `size`-element universe.
    All { size: usize, max_blocks: Option<usize> },
    /// `count` seeded random coverings on universes of `min_size` to
    /// `max_size` elements.
    Random { count: usize, seed: u64, min_size: usize, max_size: usize, max_blocks: usize },
}

impl CoveringSource {
    pub fn spaces(self) -> Result<Box<dyn Iterator<Item = SoftCoveringSpace>>> {
        match self {
            CoveringSource::All { size, max_blocks } => {
                let universe = Universe::numbered("x", size)?;
                Ok(Box::new(enumerate_coverings(&universe, max_blocks)?))
            }
            CoveringSource::Random { count, seed, min_size, max_size, max_blocks } => {
                if max_size > Universe::CAPACITY {
                    return Err(Error::UniverseCapacity { size: max_size, capacity: Universe::CAPACITY });
                }
                if min_size == 0 || min_size > max_size {
                    return Err(Error::Validation {
                        field: "size".into(),
                        message: format!("empty size range {min_size}..={max_size}"),
                    });
                }
                let universes = (min_size..=max_size)
                    .map(|n| Universe::numbered("x", n))
                    .collect::<Result<Vec<_>>>()?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Ok(Box::new((0..count).map(move |_| {
                    let u = &universes[rng.gen_range(0..universes.len())];
                    random_covering(&mut rng, u, max_blocks)
                })))
            }
        }
    }
}

/// A violated positive claim found during a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepViolation {
    pub blocks: SetFamily,
    pub outcome: PropertyOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyTally {
    pub property: PropertyId,
    pub holds: u64,
    pub fails: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub spaces: u64,
    /// Spaces satisfying the intersection condition.
    pub intersection_union_closed: u64,
    pub tallies: Vec<PropertyTally>,
    pub violations: Vec<SweepViolation>,
}

/// Checks `properties` exhaustively on every space of `source`.
pub fn sweep_coverings(
    source: CoveringSource,
    properties: &[PropertyId],
    limit: ExhaustiveLimit,
) -> Result<SweepReport> {
    let mut report = SweepReport {
        spaces: 0,
        intersection_union_closed: 0,
        tallies: properties
            .iter()
            .map(|&property| PropertyTally { property, holds: 0, fails: 0 })
            .collect(),
        violations: Vec::new(),
    };
    for space in source.spaces()? {
        report.spaces += 1;
        if space.is_intersection_union_closed().holds {
            report.intersection_union_closed += 1;
        }
        for (tally, &p) in report.tallies.iter_mut().zip(properties) {
            let outcome = check_property(&space, p, Mode::Exhaustive, limit)?;
            if outcome.status == Status::Fails {
                tally.fails += 1;
            } else {
                tally.holds += 1;
            }
            if outcome.is_violation() {
                report.violations.push(SweepViolation {
                    blocks: space.cover().clone(),
                    outcome,
                });
            }
        }
    }
    Ok(report)
}

/// Checks the four equivalences between the intersection condition and the
/// operator laws on every space of `source`.
pub fn check_biconditionals(source: CoveringSource, limit: ExhaustiveLimit) -> Result<SweepReport> {
    sweep_coverings(source, &PropertyId::BICONDITIONALS, limit)
}
