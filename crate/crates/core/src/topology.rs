//! Finite topologies generated from a soft covering, and the interior,
//! closure and boundary operators they induce.

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::covering::SoftCoveringSpace;
use crate::error::{Error, Result};
use crate::limit::ExhaustiveLimit;
use crate::sets::{ensure_same, Bits, SetFamily, Subset, Universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    Subbase,
    LowerFixed,
    UpperFixed,
    Explicit,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Origin::Subbase => "subbase",
            Origin::LowerFixed => "lower-fixed",
            Origin::UpperFixed => "upper-fixed",
            Origin::Explicit => "explicit",
        })
    }
}

/// A candidate family of open sets. Whether it really is a topology is
/// decided by [`TopologyFamily::is_topology`].
#[derive(Debug, Clone)]
pub struct TopologyFamily {
    opens: SetFamily,
    origin: Origin,
    violation: OnceLock<Option<TopologyViolation>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TopologyViolation {
    MissingEmpty,
    MissingUniverse,
    Union { first: Subset, second: Subset, result: Subset },
    Intersection { first: Subset, second: Subset, result: Subset },
}

impl fmt::Display for TopologyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MissingEmpty => f.write_str("the empty set is missing"),
            Self::MissingUniverse => f.write_str("the universe is missing"),
            Self::Union { first, second, result } => {
                write!(f, "union of {first} and {second} is {result}, not in family")
            }
            Self::Intersection { first, second, result } => {
                write!(f, "intersection of {first} and {second} is {result}, not in family")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopologyCheck {
    pub holds: bool,
    pub violation: Option<TopologyViolation>,
}

impl From<Option<TopologyViolation>> for TopologyCheck {
    fn from(violation: Option<TopologyViolation>) -> Self {
        Self {
            holds: violation.is_none(),
            violation,
        }
    }
}

impl TopologyFamily {
    pub fn new(opens: SetFamily, origin: Origin) -> Self {
        Self {
            opens,
            origin,
            violation: OnceLock::new(),
        }
    }

    pub fn explicit(opens: SetFamily) -> Self {
        Self::new(opens, Origin::Explicit)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.opens.universe()
    }

    pub fn opens(&self) -> &SetFamily {
        &self.opens
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    /// Checks `∅, U` membership and closure under pairwise union and
    /// intersection, which suffices for a finite family. The first violating
    /// pair in canonical order is reported.
    pub fn is_topology(&self, limit: ExhaustiveLimit) -> Result<TopologyCheck> {
        limit.check(self.universe().len())?;
        Ok(self.cached_violation().clone().into())
    }

    /// Checks the family as a system of closed sets: its complements must
    /// form a topology. Violations are reported in terms of the original
    /// members (a failed complement union is a failed intersection here).
    pub fn closed_set_check(&self, limit: ExhaustiveLimit) -> Result<TopologyCheck> {
        limit.check(self.universe().len())?;
        let dual = find_violation(&self.opens.complements()).map(|v| match v {
            TopologyViolation::MissingEmpty => TopologyViolation::MissingUniverse,
            TopologyViolation::MissingUniverse => TopologyViolation::MissingEmpty,
            TopologyViolation::Union { first, second, result } => TopologyViolation::Intersection {
                first: !&first,
                second: !&second,
                result: !&result,
            },
            TopologyViolation::Intersection { first, second, result } => TopologyViolation::Union {
                first: !&first,
                second: !&second,
                result: !&result,
            },
        });
        Ok(dual.into())
    }

    fn cached_violation(&self) -> &Option<TopologyViolation> {
        self.violation.get_or_init(|| find_violation(&self.opens))
    }

    fn ensure_topology(&self) -> Result<()> {
        match self.cached_violation() {
            None => Ok(()),
            Some(v) => Err(Error::NotATopology(v.to_string())),
        }
    }

    #[inline]
    pub(crate) fn interior_bits(&self, x: Bits) -> Bits {
        self.opens.inner_union_bits(x)
    }

    #[inline]
    pub(crate) fn closure_bits(&self, x: Bits) -> Bits {
        let full = self.universe().full_bits();
        !self.interior_bits(!x & full) & full
    }

    /// Largest open set inside `x`.
    pub fn interior(&self, x: &Subset) -> Result<Subset> {
        ensure_same(self.universe(), x.universe())?;
        self.ensure_topology()?;
        Ok(x.with_bits(self.interior_bits(x.bits())))
    }

    /// Smallest closed set containing `x`.
    pub fn closure(&self, x: &Subset) -> Result<Subset> {
        ensure_same(self.universe(), x.universe())?;
        self.ensure_topology()?;
        Ok(x.with_bits(self.closure_bits(x.bits())))
    }

    pub fn boundary(&self, x: &Subset) -> Result<Subset> {
        let cl = self.closure(x)?;
        let int = self.interior(x)?;
        Ok(&cl - &int)
    }
}

fn find_violation(opens: &SetFamily) -> Option<TopologyViolation> {
    let u = opens.universe();
    if !opens.contains_bits(0) {
        return Some(TopologyViolation::MissingEmpty);
    }
    if !opens.contains_bits(u.full_bits()) {
        return Some(TopologyViolation::MissingUniverse);
    }
    let members = opens.bits();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            let join = a | b;
            if !opens.contains_bits(join) {
                return Some(TopologyViolation::Union {
                    first: Subset::from_bits(u, a),
                    second: Subset::from_bits(u, b),
                    result: Subset::from_bits(u, join),
                });
            }
            let meet = a & b;
            if !opens.contains_bits(meet) {
                return Some(TopologyViolation::Intersection {
                    first: Subset::from_bits(u, a),
                    second: Subset::from_bits(u, b),
                    result: Subset::from_bits(u, meet),
                });
            }
        }
    }
    None
}

/// All finite intersections of cover blocks, with the empty intersection `U`.
pub fn subbase_base(space: &SoftCoveringSpace) -> SetFamily {
    let full = space.universe().full_bits();
    let mut base: HashSet<Bits> = HashSet::from([full]);
    for &block in space.cover().bits() {
        let met: Vec<Bits> = base.iter().map(|&s| s & block).collect();
        base.extend(met);
    }
    SetFamily::from_bits(space.universe(), base)
}

/// Topology with the cover as subbase: every union of members of
/// [`subbase_base`], with the empty union `∅`.
pub fn generate_from_subbase(space: &SoftCoveringSpace) -> TopologyFamily {
    let base = subbase_base(space);
    let mut opens: HashSet<Bits> = HashSet::from([0]);
    for &b in base.bits() {
        let joined: Vec<Bits> = opens.iter().map(|&o| o | b).collect();
        opens.extend(joined);
    }
    TopologyFamily::new(SetFamily::from_bits(space.universe(), opens), Origin::Subbase)
}

/// `{ X ⊆ U : S_-(X) = X }`, found by sweeping all subsets.
pub fn lower_fixed_point_family(
    space: &SoftCoveringSpace,
    limit: ExhaustiveLimit,
) -> Result<TopologyFamily> {
    fixed_points(space, limit, Origin::LowerFixed, |x| space.lower_bits(x) == x)
}

/// `{ X ⊆ U : S^-(X) = X }`, found by sweeping all subsets.
pub fn upper_fixed_point_family(
    space: &SoftCoveringSpace,
    limit: ExhaustiveLimit,
) -> Result<TopologyFamily> {
    fixed_points(space, limit, Origin::UpperFixed, |x| space.upper_bits(x) == x)
}

fn fixed_points(
    space: &SoftCoveringSpace,
    limit: ExhaustiveLimit,
    origin: Origin,
    fixed: impl Fn(Bits) -> bool,
) -> Result<TopologyFamily> {
    let n = space.universe().len();
    limit.check(n)?;
    let members = (0..=space.universe().full_bits()).filter(|&x| fixed(x));
    Ok(TopologyFamily::new(
        SetFamily::from_bits(space.universe(), members),
        origin,
    ))
}
