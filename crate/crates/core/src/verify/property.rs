use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// The closed catalog of checkable properties. Each variant carries a fixed
/// catalog label (see [`PropertyId::label`]) used on the command line and in
/// reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropertyId {
    UniverseFixed,
    EmptyFixed,
    Sandwich,
    LowerMonotone,
    LowerIdempotent,
    UpperIdempotent,
    LowerFixesBlocks,
    UpperFixesBlocks,
    LowerMeetDistributive,
    UpperJoinDistributive,
    UpperMonotone,
    LowerDualOfUpper,
    UpperDualOfLower,
    LowerComplementFixed,
    UpperComplementFixed,
    LowerFixedIffBlockUnion,
    UpperFixedIffBlockUnion,
    MeetDistributiveIffClosed,
    UpperMonotoneIffClosed,
    UpperMonotoneIffJoinDistributive,
    JoinDistributiveIffClosed,
    LowerFixedPointsTopology,
    UpperFixedPointsTopology,
    LowerInsideInterior,
    UpperVersusClosure,
    PartitionMatchesPawlak,
    PartitionMatchesTopology,
}

/// Whether a property is claimed to hold on every space, or is a law that
/// fails in general (so a counterexample is an expected finding).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    Holds,
    FailsInGeneral,
}

use PropertyId::*;

impl PropertyId {
    pub const ALL: [PropertyId; 27] = [
        UniverseFixed,
        EmptyFixed,
        Sandwich,
        LowerMonotone,
        LowerIdempotent,
        UpperIdempotent,
        LowerFixesBlocks,
        UpperFixesBlocks,
        LowerMeetDistributive,
        UpperJoinDistributive,
        UpperMonotone,
        LowerDualOfUpper,
        UpperDualOfLower,
        LowerComplementFixed,
        UpperComplementFixed,
        LowerFixedIffBlockUnion,
        UpperFixedIffBlockUnion,
        MeetDistributiveIffClosed,
        UpperMonotoneIffClosed,
        UpperMonotoneIffJoinDistributive,
        JoinDistributiveIffClosed,
        LowerFixedPointsTopology,
        UpperFixedPointsTopology,
        LowerInsideInterior,
        UpperVersusClosure,
        PartitionMatchesPawlak,
        PartitionMatchesTopology,
    ];

    /// The eight basic laws every soft covering space satisfies.
    pub const BASIC_LAWS: [PropertyId; 8] = [
        UniverseFixed,
        EmptyFixed,
        Sandwich,
        LowerMonotone,
        LowerIdempotent,
        UpperIdempotent,
        LowerFixesBlocks,
        UpperFixesBlocks,
    ];

    /// Laws that fail on some soft covering spaces.
    pub const FAILING_LAWS: [PropertyId; 7] = [
        LowerMeetDistributive,
        UpperJoinDistributive,
        UpperMonotone,
        LowerDualOfUpper,
        UpperDualOfLower,
        LowerComplementFixed,
        UpperComplementFixed,
    ];

    /// Equivalences between the intersection condition and operator laws.
    pub const BICONDITIONALS: [PropertyId; 4] = [
        MeetDistributiveIffClosed,
        UpperMonotoneIffClosed,
        UpperMonotoneIffJoinDistributive,
        JoinDistributiveIffClosed,
    ];

    pub fn label(self) -> &'static str {
        match self {
            UniverseFixed => "T14.1",
            EmptyFixed => "T14.2",
            Sandwich => "T14.3",
            LowerMonotone => "T14.4",
            LowerIdempotent => "T14.5",
            UpperIdempotent => "T14.6",
            LowerFixesBlocks => "T14.7",
            UpperFixesBlocks => "T14.8",
            LowerMeetDistributive => "T15.1",
            UpperJoinDistributive => "T15.2",
            UpperMonotone => "T15.3",
            LowerDualOfUpper => "T15.4",
            UpperDualOfLower => "T15.5",
            LowerComplementFixed => "T15.6",
            UpperComplementFixed => "T15.7",
            LowerFixedIffBlockUnion => "P19.lower",
            UpperFixedIffBlockUnion => "P19.upper",
            MeetDistributiveIffClosed => "T20",
            UpperMonotoneIffClosed => "T21",
            UpperMonotoneIffJoinDistributive => "T22",
            JoinDistributiveIffClosed => "C23",
            LowerFixedPointsTopology => "T24",
            UpperFixedPointsTopology => "T25",
            LowerInsideInterior => "P28.lower_subset_interior",
            UpperVersusClosure => "P29.upper_vs_closure",
            PartitionMatchesPawlak => "T33",
            PartitionMatchesTopology => "T34",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            UniverseFixed => "S_-(U) = S^-(U) = U",
            EmptyFixed => "S_-(∅) = S^-(∅) = ∅",
            Sandwich => "S_-(X) ⊆ X ⊆ S^-(X)",
            LowerMonotone => "X ⊆ Y ⇒ S_-(X) ⊆ S_-(Y)",
            LowerIdempotent => "S_-(S_-(X)) = S_-(X)",
            UpperIdempotent => "S^-(S^-(X)) = S^-(X)",
            LowerFixesBlocks => "S_-(F(e)) = F(e)",
            UpperFixesBlocks => "S^-(F(e)) = F(e)",
            LowerMeetDistributive => "S_-(X∩Y) = S_-(X) ∩ S_-(Y)",
            UpperJoinDistributive => "S^-(X∪Y) = S^-(X) ∪ S^-(Y)",
            UpperMonotone => "X ⊆ Y ⇒ S^-(X) ⊆ S^-(Y)",
            LowerDualOfUpper => "S_-(X) = -S^-(-X)",
            UpperDualOfLower => "S^-(X) = -S_-(-X)",
            LowerComplementFixed => "S_-(-S_-(X)) = -S_-(X)",
            UpperComplementFixed => "S^-(-S^-(X)) = -S^-(X)",
            LowerFixedIffBlockUnion => "S_-(X) = X ⇔ X is a union of blocks",
            UpperFixedIffBlockUnion => "S^-(X) = X ⇔ X is a union of blocks",
            MeetDistributiveIffClosed => "S_-(X∩Y) = S_-(X) ∩ S_-(Y) for all X,Y ⇔ block intersections are block unions",
            UpperMonotoneIffClosed => "S^- monotone ⇔ block intersections are block unions",
            UpperMonotoneIffJoinDistributive => "S^- monotone ⇔ S^-(X∪Y) = S^-(X) ∪ S^-(Y) for all X,Y",
            JoinDistributiveIffClosed => "S^-(X∪Y) = S^-(X) ∪ S^-(Y) for all X,Y ⇔ block intersections are block unions",
            LowerFixedPointsTopology => "block intersections are block unions ⇒ {X : S_-(X) = X} is a topology",
            UpperFixedPointsTopology => "block intersections are block unions ⇒ {X : S^-(X) = X} is a topology",
            LowerInsideInterior => "S_-(X) ⊆ int(X) in the subbase topology",
            UpperVersusClosure => "S^-(X) and cl(X) are ordered the same way for every X",
            PartitionMatchesPawlak => "partition ⇒ S_- = R_- and S^- = R^-",
            PartitionMatchesTopology => "partition ⇒ S_- = int, S^- = cl, BND_S = Bnd",
        }
    }

    pub fn claim(self) -> Claim {
        if Self::FAILING_LAWS.contains(&self) || self == UpperVersusClosure {
            Claim::FailsInGeneral
        } else {
            Claim::Holds
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for PropertyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim();
        Self::ALL
            .iter()
            .copied()
            .find(|p| p.label().eq_ignore_ascii_case(wanted))
            .ok_or_else(|| Error::UnknownProperty(wanted.to_string()))
    }
}

impl Serialize for PropertyId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}
