//! Soft covering approximation space: minimal descriptions, the lower and
//! upper soft covering approximations, and the intersection condition under
//! which both operators become well behaved.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pawlak::RegionReport;
use crate::sets::{ensure_same, is_subset_bits, positions, Bits, SetFamily, Subset, Universe};
use crate::soft_set::SoftSet;

#[derive(Debug, Clone)]
pub struct SoftCoveringSpace {
    soft_set: SoftSet,
    cover: SetFamily,
    /// Minimal blocks containing each element, by position.
    descriptions: Vec<Vec<Bits>>,
    /// Union of `descriptions[x]`.
    reach: Vec<Bits>,
}

/// The ⊆-minimal blocks of the cover containing one element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalDescription {
    pub element: String,
    pub blocks: SetFamily,
}

/// Outcome of testing whether every pairwise block intersection is a union
/// of blocks. `witness` names the first failing pair in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureCheck {
    pub holds: bool,
    pub witness: Option<BlockPair>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockPair {
    pub first: Subset,
    pub second: Subset,
    pub intersection: Subset,
    /// Union of the blocks inside the intersection; strictly smaller than it.
    pub covered: Subset,
}

impl SoftCoveringSpace {
    pub fn new(soft_set: SoftSet) -> Result<Self> {
        if let Some(p) = soft_set.empty_parameter() {
            return Err(Error::NotACovering(format!("block {p} is empty")));
        }
        if !soft_set.is_full() {
            let uncovered = !soft_set.blocks().union().bits() & soft_set.universe().full_bits();
            let name = soft_set.universe().name(uncovered.trailing_zeros() as usize);
            return Err(Error::NotACovering(format!("element {name} lies in no block")));
        }
        let cover = soft_set.blocks();
        let n = soft_set.universe().len();
        let descriptions: Vec<Vec<Bits>> = (0..n)
            .map(|x| {
                let holding: Vec<Bits> = cover
                    .bits()
                    .iter()
                    .copied()
                    .filter(|b| b & (1 << x) != 0)
                    .collect();
                holding
                    .iter()
                    .copied()
                    .filter(|&b| !holding.iter().any(|&a| a != b && is_subset_bits(a, b)))
                    .collect()
            })
            .collect();
        let reach = descriptions
            .iter()
            .map(|d| d.iter().fold(0, |acc, b| acc | b))
            .collect();
        Ok(Self {
            soft_set,
            cover,
            descriptions,
            reach,
        })
    }

    /// Builds the space from raw block masks, naming parameters `e1..em`.
    pub fn from_bits<I: IntoIterator<Item = Bits>>(universe: &Arc<Universe>, blocks: I) -> Result<Self> {
        Self::new(SoftSet::from_bits(universe, blocks))
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.soft_set.universe()
    }

    pub fn soft_set(&self) -> &SoftSet {
        &self.soft_set
    }

    pub fn cover(&self) -> &SetFamily {
        &self.cover
    }

    pub fn minimal_description(&self, element: &str) -> Result<MinimalDescription> {
        let x = self
            .universe()
            .position(element)
            .ok_or_else(|| Error::UnknownElement(element.to_string()))?;
        Ok(MinimalDescription {
            element: element.to_string(),
            blocks: SetFamily::from_bits(self.universe(), self.descriptions[x].iter().copied()),
        })
    }

    #[inline]
    pub(crate) fn lower_bits(&self, x: Bits) -> Bits {
        self.cover.inner_union_bits(x)
    }

    #[inline]
    pub(crate) fn upper_bits(&self, x: Bits) -> Bits {
        let lower = self.lower_bits(x);
        positions(x & !lower).fold(lower, |acc, y| acc | self.reach[y])
    }

    /// Union of the blocks contained in `x`.
    pub fn lower(&self, x: &Subset) -> Result<Subset> {
        ensure_same(self.universe(), x.universe())?;
        Ok(x.with_bits(self.lower_bits(x.bits())))
    }

    /// The lower approximation together with every minimal-description block
    /// of every point of `x` the lower approximation misses.
    pub fn upper(&self, x: &Subset) -> Result<Subset> {
        ensure_same(self.universe(), x.universe())?;
        Ok(x.with_bits(self.upper_bits(x.bits())))
    }

    pub fn regions(&self, x: &Subset) -> Result<RegionReport> {
        Ok(RegionReport::from_approximations(self.lower(x)?, self.upper(x)?))
    }

    pub fn is_definable(&self, x: &Subset) -> Result<bool> {
        ensure_same(self.universe(), x.universe())?;
        Ok(self.lower_bits(x.bits()) == self.upper_bits(x.bits()))
    }

    /// Tests that `B1 ∩ B2` is a union of blocks for every pair of blocks.
    /// Disjoint pairs pass through the empty union.
    pub fn is_intersection_union_closed(&self) -> ClosureCheck {
        let blocks = self.cover.bits();
        for (i, &a) in blocks.iter().enumerate() {
            for &b in &blocks[i + 1..] {
                let meet = a & b;
                let covered = self.cover.inner_union_bits(meet);
                if covered != meet {
                    let u = self.universe();
                    return ClosureCheck {
                        holds: false,
                        witness: Some(BlockPair {
                            first: Subset::from_bits(u, a),
                            second: Subset::from_bits(u, b),
                            intersection: Subset::from_bits(u, meet),
                            covered: Subset::from_bits(u, covered),
                        }),
                    };
                }
            }
        }
        ClosureCheck {
            holds: true,
            witness: None,
        }
    }
}
