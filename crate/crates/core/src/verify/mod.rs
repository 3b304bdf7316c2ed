//! Exhaustive and sampled checking of the property catalog, with
//! self-validating witnesses.
//!
//! Exhaustive sweeps visit subsets in canonical order (ascending bitmask) and
//! pairs with `X` as the outer index, so the reported witness is always the
//! first violation in that order, regardless of how the sweep is split
//! across worker threads.

mod property;
pub mod sweep;

use std::fmt;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use property::{Claim, PropertyId};

use crate::covering::{BlockPair, ClosureCheck, SoftCoveringSpace};
use crate::error::{Error, Result};
use crate::limit::ExhaustiveLimit;
use crate::pawlak::PawlakSpace;
use crate::sets::{ensure_same, is_subset_bits, positions, Bits, Subset};
use crate::topology::{
    generate_from_subbase, lower_fixed_point_family, upper_fixed_point_family, Origin,
    TopologyFamily, TopologyViolation,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Mode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

impl Mode {
    pub const DEFAULT_SAMPLES: usize = 10_000;
    pub const DEFAULT_SEED: u64 = 42;

    pub fn sampled(samples: usize, seed: u64) -> Self {
        Mode::Sampled { samples, seed }
    }
}

impl Default for Mode {
    fn default() -> Self {
        Mode::Sampled {
            samples: Self::DEFAULT_SAMPLES,
            seed: Self::DEFAULT_SEED,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exhaustive => f.write_str("exhaustive"),
            Mode::Sampled { samples, seed } => write!(f, "sampled ({samples} samples, seed {seed})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    HoldsExhaustive,
    HoldsSampled,
    Fails,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::HoldsExhaustive => "holds-exhaustive",
            Status::HoldsSampled => "holds-sampled",
            Status::Fails => "fails",
        })
    }
}

/// Evidence that a property fails on a space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A law violated at `X` (and `Y` for binary laws): `lhs` and `rhs` are
    /// the two sides that should have agreed.
    Law {
        x: Subset,
        y: Option<Subset>,
        lhs_label: &'static str,
        lhs: Subset,
        rhs_label: &'static str,
        rhs: Subset,
    },
    /// Two blocks whose intersection is not a union of blocks.
    Condition(BlockPair),
    /// A fixed-point family that breaks a topology axiom.
    Topology {
        family: Origin,
        violation: TopologyViolation,
    },
    /// `cl(X) ⊄ S^-(X)` and `S^-(Y) ⊄ cl(Y)`.
    Incomparable {
        x: Subset,
        upper_x: Subset,
        closure_x: Subset,
        y: Subset,
        upper_y: Subset,
        closure_y: Subset,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Law { x, y, lhs_label, lhs, rhs_label, rhs } => {
                write!(f, "X={x}")?;
                if let Some(y) = y {
                    write!(f, " Y={y}")?;
                }
                write!(f, ": {lhs_label}={lhs} vs {rhs_label}={rhs}")
            }
            Witness::Condition(pair) => write!(
                f,
                "{} ∩ {} = {} is not a union of blocks (blocks inside cover {})",
                pair.first, pair.second, pair.intersection, pair.covered
            ),
            Witness::Topology { family, violation } => write!(f, "{family} family: {violation}"),
            Witness::Incomparable { x, upper_x, closure_x, y, upper_y, closure_y } => write!(
                f,
                "X={x}: S^-(X)={upper_x}, cl(X)={closure_x}; Y={y}: S^-(Y)={upper_y}, cl(Y)={closure_y}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyOutcome {
    pub property: PropertyId,
    pub statement: &'static str,
    pub claim: Claim,
    pub status: Status,
    pub witness: Option<Witness>,
    /// Candidate subsets, pairs or blocks evaluated.
    pub examined: u64,
    pub note: Option<String>,
}

impl PropertyOutcome {
    /// A property claimed to hold everywhere was found to fail.
    pub fn is_violation(&self) -> bool {
        self.status == Status::Fails && self.property.claim() == Claim::Holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceSummary {
    pub elements: usize,
    pub parameters: usize,
    pub distinct_blocks: usize,
    pub partition: bool,
    pub intersection_union_closed: bool,
}

impl SpaceSummary {
    pub fn of(space: &SoftCoveringSpace) -> Self {
        Self {
            elements: space.universe().len(),
            parameters: space.soft_set().len(),
            distinct_blocks: space.cover().len(),
            partition: space.soft_set().is_partition(),
            intersection_union_closed: space.is_intersection_union_closed().holds,
        }
    }
}

impl fmt::Display for SpaceSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "|U|={}, |E|={}, distinct blocks={}, partition={}, intersection-union-closed={}",
            self.elements, self.parameters, self.distinct_blocks, self.partition, self.intersection_union_closed
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub space: SpaceSummary,
    pub mode: Mode,
    pub entries: Vec<PropertyOutcome>,
    pub examined: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn violations(&self) -> impl Iterator<Item = &PropertyOutcome> {
        self.entries.iter().filter(|e| e.is_violation())
    }

    pub fn entry(&self, property: PropertyId) -> Option<&PropertyOutcome> {
        self.entries.iter().find(|e| e.property == property)
    }
}

/// Checks one property of the catalog.
pub fn check_property(
    space: &SoftCoveringSpace,
    property: PropertyId,
    mode: Mode,
    limit: ExhaustiveLimit,
) -> Result<PropertyOutcome> {
    let ctx = Context::new(space, mode, limit)?;
    ctx.check(property)
}

/// Checks a list of properties, sharing precomputed operator tables.
pub fn verify_properties(
    space: &SoftCoveringSpace,
    properties: &[PropertyId],
    mode: Mode,
    limit: ExhaustiveLimit,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let ctx = Context::new(space, mode, limit)?;
    let entries = properties
        .iter()
        .map(|&p| ctx.check(p))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport {
        space: SpaceSummary::of(space),
        mode,
        examined: entries.iter().map(|e| e.examined).sum(),
        entries,
        elapsed: started.elapsed(),
    })
}

/// Checks the whole catalog.
pub fn verify_all(space: &SoftCoveringSpace, mode: Mode, limit: ExhaustiveLimit) -> Result<VerificationReport> {
    verify_properties(space, &PropertyId::ALL, mode, limit)
}

/// Evaluates a pointwise law at a given `X` (and `Y` for binary laws).
/// Returns the violation, if the law fails there.
pub fn evaluate_at(
    space: &SoftCoveringSpace,
    property: PropertyId,
    x: &Subset,
    y: Option<&Subset>,
) -> Result<Option<Witness>> {
    ensure_same(space.universe(), x.universe())?;
    if let Some(y) = y {
        ensure_same(space.universe(), y.universe())?;
    }
    let domain = law_domain(property).ok_or_else(|| Error::Validation {
        field: "property".into(),
        message: format!("{property} is not a pointwise law"),
    })?;
    let ctx = Context::new(space, Mode::default(), ExhaustiveLimit(0))?;
    if let Some(premise) = ctx.premise(property) {
        if !premise {
            return Ok(None);
        }
    }
    let (xb, yb) = match domain {
        Domain::Binary | Domain::Nested => {
            let y = y.ok_or_else(|| Error::Validation {
                field: "y".into(),
                message: format!("{property} needs both X and Y"),
            })?;
            (x.bits(), y.bits())
        }
        _ => (x.bits(), 0),
    };
    Ok(ctx
        .law(property, xb, yb)
        .map(|b| ctx.law_witness(domain, xb, yb, b)))
}

/// Re-derives a witness from the core operators and confirms that it is a
/// genuine violation of `property` on `space`.
pub fn revalidate(space: &SoftCoveringSpace, property: PropertyId, witness: &Witness) -> bool {
    let Ok(ctx) = Context::new(space, Mode::Exhaustive, ExhaustiveLimit(Subset::full(space.universe()).len()))
    else {
        return false;
    };
    match witness {
        Witness::Law { x, y, .. } => {
            let Some(domain) = law_domain(property) else {
                return false;
            };
            let xb = x.bits();
            let yb = y.as_ref().map_or(0, Subset::bits);
            match property {
                PropertyId::MeetDistributiveIffClosed
                | PropertyId::UpperMonotoneIffClosed
                | PropertyId::JoinDistributiveIffClosed => {
                    // law broken although the condition holds
                    ctx.closed.holds && ctx.law(property, xb, yb).is_some()
                }
                PropertyId::UpperMonotoneIffJoinDistributive => {
                    let (broken, other) = if ctx.law(PropertyId::UpperMonotone, xb, yb).is_some() {
                        (true, PropertyId::UpperJoinDistributive)
                    } else {
                        (
                            ctx.law(PropertyId::UpperJoinDistributive, xb, yb).is_some(),
                            PropertyId::UpperMonotone,
                        )
                    };
                    broken && ctx.search(other, law_domain(other).unwrap()).hit.is_none()
                }
                _ => {
                    ctx.premise(property) != Some(false)
                        && ctx
                            .law(property, xb, yb)
                            .map(|b| ctx.law_witness(domain, xb, yb, b))
                            .as_ref()
                            == Some(witness)
                }
            }
        }
        Witness::Condition(pair) => {
            let meet = pair.first.bits() & pair.second.bits();
            let genuine = ctx.space.cover().contains(&pair.first)
                && ctx.space.cover().contains(&pair.second)
                && meet == pair.intersection.bits()
                && ctx.space.cover().inner_union_bits(meet) != meet;
            let law = match property {
                PropertyId::MeetDistributiveIffClosed => PropertyId::LowerMeetDistributive,
                PropertyId::UpperMonotoneIffClosed => PropertyId::UpperMonotone,
                PropertyId::JoinDistributiveIffClosed => PropertyId::UpperJoinDistributive,
                _ => return false,
            };
            genuine && ctx.search(law, law_domain(law).unwrap()).hit.is_none()
        }
        Witness::Topology { family, violation } => {
            let limit = ExhaustiveLimit(ctx.space.universe().len());
            let rebuilt = match family {
                Origin::LowerFixed => lower_fixed_point_family(ctx.space, limit),
                Origin::UpperFixed => upper_fixed_point_family(ctx.space, limit),
                _ => return false,
            };
            let Ok(rebuilt) = rebuilt else { return false };
            ctx.closed.holds && genuine_topology_violation(&rebuilt, violation)
        }
        Witness::Incomparable { x, y, .. } => {
            let (xb, yb) = (x.bits(), y.bits());
            let topo = ctx.topology();
            !is_subset_bits(topo.closure_bits(xb), ctx.upper(xb))
                && !is_subset_bits(ctx.upper(yb), topo.closure_bits(yb))
        }
    }
}

fn genuine_topology_violation(family: &TopologyFamily, violation: &TopologyViolation) -> bool {
    let opens = family.opens();
    let full = family.universe().full_bits();
    match violation {
        TopologyViolation::MissingEmpty => !opens.contains_bits(0),
        TopologyViolation::MissingUniverse => !opens.contains_bits(full),
        TopologyViolation::Union { first, second, result } => {
            opens.contains(first)
                && opens.contains(second)
                && first.bits() | second.bits() == result.bits()
                && !opens.contains(result)
        }
        TopologyViolation::Intersection { first, second, result } => {
            opens.contains(first)
                && opens.contains(second)
                && first.bits() & second.bits() == result.bits()
                && !opens.contains(result)
        }
    }
}

/// How `S^-(X)` relates to `cl(X)` (subbase topology) across all `X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpperClosureComparison {
    pub examined: u64,
    pub equal: u64,
    pub upper_inside_closure: u64,
    pub closure_inside_upper: u64,
    pub incomparable: u64,
    /// First `X` with `S^-(X) ⊊ cl(X)`.
    pub upper_inside_example: Option<UpperClosurePoint>,
    /// First `X` with `cl(X) ⊊ S^-(X)`.
    pub closure_inside_example: Option<UpperClosurePoint>,
    pub incomparable_example: Option<UpperClosurePoint>,
    /// First `X` with `BND_S(X) ⊊ Bnd(X)`.
    pub soft_boundary_inside_example: Option<BoundaryPoint>,
    /// First `X` with `Bnd(X) ⊊ BND_S(X)`.
    pub boundary_inside_soft_example: Option<BoundaryPoint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpperClosurePoint {
    pub x: Subset,
    pub upper: Subset,
    pub closure: Subset,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryPoint {
    pub x: Subset,
    pub soft_boundary: Subset,
    pub boundary: Subset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    StrictlyInside,
    StrictlyOutside,
    Incomparable,
}

pub fn compare(a: Bits, b: Bits) -> Comparison {
    match (is_subset_bits(a, b), is_subset_bits(b, a)) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::StrictlyInside,
        (false, true) => Comparison::StrictlyOutside,
        (false, false) => Comparison::Incomparable,
    }
}

/// Classifies every `X` by how `S^-(X)` compares with `cl(X)`, and records
/// the first example of each strict direction, also for the boundaries.
pub fn compare_upper_closure(space: &SoftCoveringSpace, limit: ExhaustiveLimit) -> Result<UpperClosureComparison> {
    limit.check(space.universe().len())?;
    let topology = generate_from_subbase(space);
    let u = space.universe();
    let point = |x: Bits, upper: Bits, closure: Bits| UpperClosurePoint {
        x: Subset::from_bits(u, x),
        upper: Subset::from_bits(u, upper),
        closure: Subset::from_bits(u, closure),
    };
    let mut report = UpperClosureComparison {
        examined: 0,
        equal: 0,
        upper_inside_closure: 0,
        closure_inside_upper: 0,
        incomparable: 0,
        upper_inside_example: None,
        closure_inside_example: None,
        incomparable_example: None,
        soft_boundary_inside_example: None,
        boundary_inside_soft_example: None,
    };
    for x in 0..=u.full_bits() {
        report.examined += 1;
        let lower = space.lower_bits(x);
        let upper = space.upper_bits(x);
        let closure = topology.closure_bits(x);
        let interior = topology.interior_bits(x);
        match compare(upper, closure) {
            Comparison::Equal => report.equal += 1,
            Comparison::StrictlyInside => {
                report.upper_inside_closure += 1;
                report.upper_inside_example.get_or_insert_with(|| point(x, upper, closure));
            }
            Comparison::StrictlyOutside => {
                report.closure_inside_upper += 1;
                report.closure_inside_example.get_or_insert_with(|| point(x, upper, closure));
            }
            Comparison::Incomparable => {
                report.incomparable += 1;
                report.incomparable_example.get_or_insert_with(|| point(x, upper, closure));
            }
        }
        let soft_boundary = upper & !lower;
        let boundary = closure & !interior;
        let bpoint = || BoundaryPoint {
            x: Subset::from_bits(u, x),
            soft_boundary: Subset::from_bits(u, soft_boundary),
            boundary: Subset::from_bits(u, boundary),
        };
        match compare(soft_boundary, boundary) {
            Comparison::StrictlyInside => {
                report.soft_boundary_inside_example.get_or_insert_with(bpoint);
            }
            Comparison::StrictlyOutside => {
                report.boundary_inside_soft_example.get_or_insert_with(bpoint);
            }
            _ => {}
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionCoincidence {
    pub examined: u64,
    pub disagreements: Vec<CoincidenceDisagreement>,
}

/// One `X` where the soft covering, classical and topological operators
/// do not all agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoincidenceDisagreement {
    pub x: Subset,
    pub operator: &'static str,
    pub soft: Subset,
    pub classical: Subset,
    pub topological: Subset,
}

/// On a partition soft set, checks for every `X` that the soft covering
/// lower/upper/boundary coincide with the classical ones and with
/// interior/closure/boundary of the subbase topology.
pub fn check_partition_coincidence(
    space: &SoftCoveringSpace,
    limit: ExhaustiveLimit,
) -> Result<PartitionCoincidence> {
    let pawlak = PawlakSpace::from_partition_soft_set(space.soft_set())?;
    limit.check(space.universe().len())?;
    let topology = generate_from_subbase(space);
    let u = space.universe();
    let mut report = PartitionCoincidence {
        examined: 0,
        disagreements: Vec::new(),
    };
    for x in 0..=u.full_bits() {
        report.examined += 1;
        let lower = (space.lower_bits(x), pawlak.lower_bits(x), topology.interior_bits(x));
        let upper = (space.upper_bits(x), pawlak.upper_bits(x), topology.closure_bits(x));
        let boundary = (upper.0 & !lower.0, upper.1 & !lower.1, upper.2 & !lower.2);
        for (operator, (soft, classical, topological)) in
            [("lower", lower), ("upper", upper), ("boundary", boundary)]
        {
            if soft != classical || soft != topological {
                report.disagreements.push(CoincidenceDisagreement {
                    x: Subset::from_bits(u, x),
                    operator,
                    soft: Subset::from_bits(u, soft),
                    classical: Subset::from_bits(u, classical),
                    topological: Subset::from_bits(u, topological),
                });
            }
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// evaluation engine

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Domain {
    /// A single fixed subset.
    Fixed(FixedPoint),
    /// Every `X`.
    Unary,
    /// Every pair `(X, Y)`.
    Binary,
    /// Every pair with `X ⊆ Y`.
    Nested,
    /// Every block `F(e)`, in parameter order.
    Blocks,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FixedPoint {
    Empty,
    Universe,
}

fn law_domain(p: PropertyId) -> Option<Domain> {
    use PropertyId::*;
    Some(match p {
        UniverseFixed => Domain::Fixed(FixedPoint::Universe),
        EmptyFixed => Domain::Fixed(FixedPoint::Empty),
        Sandwich | LowerIdempotent | UpperIdempotent | LowerDualOfUpper | UpperDualOfLower
        | LowerComplementFixed | UpperComplementFixed | LowerFixedIffBlockUnion
        | UpperFixedIffBlockUnion | LowerInsideInterior | PartitionMatchesPawlak
        | PartitionMatchesTopology => Domain::Unary,
        LowerMonotone | UpperMonotone | UpperMonotoneIffClosed => Domain::Nested,
        LowerMeetDistributive | UpperJoinDistributive | MeetDistributiveIffClosed
        | JoinDistributiveIffClosed => Domain::Binary,
        LowerFixesBlocks | UpperFixesBlocks => Domain::Blocks,
        // pairs drawn for either side of the equivalence
        UpperMonotoneIffJoinDistributive => Domain::Binary,
        LowerFixedPointsTopology | UpperFixedPointsTopology | UpperVersusClosure => return None,
    })
}

/// The two sides of a law that failed to agree.
#[derive(Debug, Clone, Copy)]
struct Breach {
    lhs_label: &'static str,
    lhs: Bits,
    rhs_label: &'static str,
    rhs: Bits,
}

fn breach(lhs_label: &'static str, lhs: Bits, rhs_label: &'static str, rhs: Bits) -> Option<Breach> {
    Some(Breach { lhs_label, lhs, rhs_label, rhs })
}

fn equal(lhs_label: &'static str, lhs: Bits, rhs_label: &'static str, rhs: Bits) -> Option<Breach> {
    if lhs == rhs {
        None
    } else {
        breach(lhs_label, lhs, rhs_label, rhs)
    }
}

fn inside(lhs_label: &'static str, lhs: Bits, rhs_label: &'static str, rhs: Bits) -> Option<Breach> {
    if is_subset_bits(lhs, rhs) {
        None
    } else {
        breach(lhs_label, lhs, rhs_label, rhs)
    }
}

struct Hit {
    x: Bits,
    y: Bits,
    breach: Breach,
}

struct Search {
    hit: Option<Hit>,
    examined: u64,
    exhaustive: bool,
}

struct Tables {
    lower: Vec<Bits>,
    upper: Vec<Bits>,
}

struct Context<'a> {
    space: &'a SoftCoveringSpace,
    mode: Mode,
    limit: ExhaustiveLimit,
    full: Bits,
    closed: ClosureCheck,
    pawlak: Option<PawlakSpace>,
    topology: OnceLock<TopologyFamily>,
    tables: Option<Tables>,
}

const PARALLEL_FROM: usize = 10;

impl<'a> Context<'a> {
    fn new(space: &'a SoftCoveringSpace, mode: Mode, limit: ExhaustiveLimit) -> Result<Self> {
        let n = space.universe().len();
        if mode == Mode::Exhaustive {
            limit.check(n)?;
        }
        let full = space.universe().full_bits();
        let tables = (mode == Mode::Exhaustive).then(|| {
            let (lower, upper) = (0..=full)
                .map(|x| (space.lower_bits(x), space.upper_bits(x)))
                .unzip();
            Tables { lower, upper }
        });
        Ok(Self {
            space,
            mode,
            limit,
            full,
            closed: space.is_intersection_union_closed(),
            pawlak: PawlakSpace::from_partition_soft_set(space.soft_set()).ok(),
            topology: OnceLock::new(),
            tables,
        })
    }

    fn topology(&self) -> &TopologyFamily {
        self.topology.get_or_init(|| generate_from_subbase(self.space))
    }

    #[inline]
    fn lower(&self, x: Bits) -> Bits {
        match &self.tables {
            Some(t) => t.lower[x as usize],
            None => self.space.lower_bits(x),
        }
    }

    #[inline]
    fn upper(&self, x: Bits) -> Bits {
        match &self.tables {
            Some(t) => t.upper[x as usize],
            None => self.space.upper_bits(x),
        }
    }

    #[inline]
    fn not(&self, x: Bits) -> Bits {
        !x & self.full
    }

    /// Every point of `x` lies in some block inside `x`.
    fn covered_pointwise(&self, x: Bits) -> bool {
        let blocks = self.space.cover().bits();
        positions(x).all(|p| {
            blocks
                .iter()
                .any(|&b| b & (1 << p) != 0 && is_subset_bits(b, x))
        })
    }

    /// `Some(false)` when a conditional law's premise is not met.
    fn premise(&self, p: PropertyId) -> Option<bool> {
        match p {
            PropertyId::PartitionMatchesPawlak | PropertyId::PartitionMatchesTopology => {
                Some(self.pawlak.is_some())
            }
            _ => None,
        }
    }

    /// Evaluates a pointwise law; `None` means it holds at `(x, y)`.
    fn law(&self, p: PropertyId, x: Bits, y: Bits) -> Option<Breach> {
        use PropertyId::*;
        match p {
            UniverseFixed => {
                let (l, u) = (self.lower(self.full), self.upper(self.full));
                if l == self.full && u == self.full {
                    None
                } else {
                    breach("S_-(U)", l, "S^-(U)", u)
                }
            }
            EmptyFixed => {
                let (l, u) = (self.lower(0), self.upper(0));
                if l == 0 && u == 0 {
                    None
                } else {
                    breach("S_-(∅)", l, "S^-(∅)", u)
                }
            }
            Sandwich => {
                let (l, u) = (self.lower(x), self.upper(x));
                if is_subset_bits(l, x) && is_subset_bits(x, u) {
                    None
                } else {
                    breach("S_-(X)", l, "S^-(X)", u)
                }
            }
            LowerMonotone => {
                if !is_subset_bits(x, y) {
                    return None;
                }
                inside("S_-(X)", self.lower(x), "S_-(Y)", self.lower(y))
            }
            LowerIdempotent => {
                let l = self.lower(x);
                equal("S_-(S_-(X))", self.lower(l), "S_-(X)", l)
            }
            UpperIdempotent => {
                let u = self.upper(x);
                equal("S^-(S^-(X))", self.upper(u), "S^-(X)", u)
            }
            LowerFixesBlocks => equal("S_-(F(e))", self.lower(x), "F(e)", x),
            UpperFixesBlocks => equal("S^-(F(e))", self.upper(x), "F(e)", x),
            LowerMeetDistributive | MeetDistributiveIffClosed => equal(
                "S_-(X∩Y)",
                self.lower(x & y),
                "S_-(X)∩S_-(Y)",
                self.lower(x) & self.lower(y),
            ),
            UpperJoinDistributive | JoinDistributiveIffClosed => equal(
                "S^-(X∪Y)",
                self.upper(x | y),
                "S^-(X)∪S^-(Y)",
                self.upper(x) | self.upper(y),
            ),
            UpperMonotone | UpperMonotoneIffClosed => {
                if !is_subset_bits(x, y) {
                    return None;
                }
                inside("S^-(X)", self.upper(x), "S^-(Y)", self.upper(y))
            }
            LowerDualOfUpper => equal("S_-(X)", self.lower(x), "-S^-(-X)", self.not(self.upper(self.not(x)))),
            UpperDualOfLower => equal("S^-(X)", self.upper(x), "-S_-(-X)", self.not(self.lower(self.not(x)))),
            LowerComplementFixed => {
                let c = self.not(self.lower(x));
                equal("S_-(-S_-(X))", self.lower(c), "-S_-(X)", c)
            }
            UpperComplementFixed => {
                let c = self.not(self.upper(x));
                equal("S^-(-S^-(X))", self.upper(c), "-S^-(X)", c)
            }
            LowerFixedIffBlockUnion => {
                let l = self.lower(x);
                match (l == x, self.covered_pointwise(x)) {
                    (true, true) | (false, false) => None,
                    (true, false) => breach("S_-(X)", l, "X (not a block union)", x),
                    (false, true) => breach("S_-(X)", l, "X (a block union)", x),
                }
            }
            UpperFixedIffBlockUnion => {
                let u = self.upper(x);
                match (u == x, self.covered_pointwise(x)) {
                    (true, true) | (false, false) => None,
                    (true, false) => breach("S^-(X)", u, "X (not a block union)", x),
                    (false, true) => breach("S^-(X)", u, "X (a block union)", x),
                }
            }
            LowerInsideInterior => inside("S_-(X)", self.lower(x), "int(X)", self.topology().interior_bits(x)),
            PartitionMatchesPawlak => {
                let pawlak = self.pawlak.as_ref()?;
                equal("S_-(X)", self.lower(x), "R_-(X)", pawlak.lower_bits(x))
                    .or_else(|| equal("S^-(X)", self.upper(x), "R^-(X)", pawlak.upper_bits(x)))
            }
            PartitionMatchesTopology => {
                let t = self.topology();
                let (l, u) = (self.lower(x), self.upper(x));
                let (int, cl) = (t.interior_bits(x), t.closure_bits(x));
                equal("S_-(X)", l, "int(X)", int)
                    .or_else(|| equal("S^-(X)", u, "cl(X)", cl))
                    .or_else(|| equal("BND_S(X)", u & !l, "Bnd(X)", cl & !int))
            }
            UpperMonotoneIffJoinDistributive
            | LowerFixedPointsTopology
            | UpperFixedPointsTopology
            | UpperVersusClosure => None,
        }
    }

    fn law_witness(&self, domain: Domain, x: Bits, y: Bits, b: Breach) -> Witness {
        let u = self.space.universe();
        let x = match domain {
            Domain::Fixed(FixedPoint::Universe) => self.full,
            Domain::Fixed(FixedPoint::Empty) => 0,
            _ => x,
        };
        Witness::Law {
            x: Subset::from_bits(u, x),
            y: matches!(domain, Domain::Binary | Domain::Nested).then(|| Subset::from_bits(u, y)),
            lhs_label: b.lhs_label,
            lhs: Subset::from_bits(u, b.lhs),
            rhs_label: b.rhs_label,
            rhs: Subset::from_bits(u, b.rhs),
        }
    }

    fn parallel(&self) -> bool {
        self.space.universe().len() >= PARALLEL_FROM
    }

    fn rng(&self, seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    /// Looks for the first violation of a pointwise law.
    fn search(&self, p: PropertyId, domain: Domain) -> Search {
        let side = self.full as u64 + 1;
        match domain {
            Domain::Fixed(_) => Search {
                hit: self.law(p, 0, 0).map(|breach| Hit { x: 0, y: 0, breach }),
                examined: 1,
                exhaustive: true,
            },
            Domain::Blocks => {
                let blocks = self.space.soft_set().image_bits();
                let found = blocks
                    .iter()
                    .enumerate()
                    .find_map(|(i, &b)| self.law(p, b, 0).map(|breach| (i, Hit { x: b, y: 0, breach })));
                Search {
                    examined: found.as_ref().map_or(blocks.len() as u64, |(i, _)| *i as u64 + 1),
                    hit: found.map(|(_, h)| h),
                    exhaustive: true,
                }
            }
            Domain::Unary => match self.mode {
                Mode::Exhaustive => {
                    let probe = |x: Bits| self.law(p, x, 0).map(|breach| Hit { x, y: 0, breach });
                    let hit = if self.parallel() {
                        (0..=self.full).into_par_iter().find_map_first(probe)
                    } else {
                        (0..=self.full).find_map(probe)
                    };
                    Search {
                        examined: hit.as_ref().map_or(side, |h| h.x as u64 + 1),
                        hit,
                        exhaustive: true,
                    }
                }
                Mode::Sampled { samples, seed } => {
                    let mut rng = self.rng(seed);
                    for k in 0..samples {
                        let x = rng.gen::<Bits>() & self.full;
                        if let Some(breach) = self.law(p, x, 0) {
                            return Search {
                                hit: Some(Hit { x, y: 0, breach }),
                                examined: k as u64 + 1,
                                exhaustive: false,
                            };
                        }
                    }
                    Search {
                        hit: None,
                        examined: samples as u64,
                        exhaustive: false,
                    }
                }
            },
            Domain::Binary | Domain::Nested => match self.mode {
                Mode::Exhaustive => {
                    let nested = domain == Domain::Nested;
                    let row = |x: Bits| {
                        (0..=self.full).find_map(|y| {
                            if nested && !is_subset_bits(x, y) {
                                return None;
                            }
                            self.law(p, x, y).map(|breach| Hit { x, y, breach })
                        })
                    };
                    let hit = if self.parallel() {
                        (0..=self.full).into_par_iter().find_map_first(row)
                    } else {
                        (0..=self.full).find_map(row)
                    };
                    Search {
                        examined: hit
                            .as_ref()
                            .map_or(side * side, |h| h.x as u64 * side + h.y as u64 + 1),
                        hit,
                        exhaustive: true,
                    }
                }
                Mode::Sampled { samples, seed } => {
                    let mut rng = self.rng(seed);
                    for k in 0..samples {
                        let x = rng.gen::<Bits>() & self.full;
                        let mut y = rng.gen::<Bits>() & self.full;
                        if domain == Domain::Nested {
                            y |= x;
                        }
                        if let Some(breach) = self.law(p, x, y) {
                            return Search {
                                hit: Some(Hit { x, y, breach }),
                                examined: k as u64 + 1,
                                exhaustive: false,
                            };
                        }
                    }
                    Search {
                        hit: None,
                        examined: samples as u64,
                        exhaustive: false,
                    }
                }
            },
        }
    }

    fn outcome(
        &self,
        p: PropertyId,
        status: Status,
        witness: Option<Witness>,
        examined: u64,
        note: Option<String>,
    ) -> PropertyOutcome {
        PropertyOutcome {
            property: p,
            statement: p.statement(),
            claim: p.claim(),
            status,
            witness,
            examined,
            note,
        }
    }

    fn holds(&self, exhaustive: bool) -> Status {
        if exhaustive {
            Status::HoldsExhaustive
        } else {
            Status::HoldsSampled
        }
    }

    fn check(&self, p: PropertyId) -> Result<PropertyOutcome> {
        use PropertyId::*;
        match p {
            MeetDistributiveIffClosed | UpperMonotoneIffClosed | JoinDistributiveIffClosed => {
                Ok(self.check_iff_closed(p))
            }
            UpperMonotoneIffJoinDistributive => Ok(self.check_monotone_iff_join()),
            LowerFixedPointsTopology | UpperFixedPointsTopology => self.check_fixed_point_topology(p),
            UpperVersusClosure => Ok(self.check_upper_versus_closure()),
            _ => {
                let domain = law_domain(p).expect("pointwise law");
                if self.premise(p) == Some(false) {
                    return Ok(self.outcome(
                        p,
                        Status::HoldsExhaustive,
                        None,
                        0,
                        Some("premise false: not a partition soft set".into()),
                    ));
                }
                let s = self.search(p, domain);
                Ok(match s.hit {
                    Some(h) => self.outcome(
                        p,
                        Status::Fails,
                        Some(self.law_witness(domain, h.x, h.y, h.breach)),
                        s.examined,
                        None,
                    ),
                    None => self.outcome(p, self.holds(s.exhaustive), None, s.examined, None),
                })
            }
        }
    }

    fn check_iff_closed(&self, p: PropertyId) -> PropertyOutcome {
        let domain = law_domain(p).unwrap();
        if self.closed.holds {
            let s = self.search(p, domain);
            return match s.hit {
                Some(h) => self.outcome(
                    p,
                    Status::Fails,
                    Some(self.law_witness(domain, h.x, h.y, h.breach)),
                    s.examined,
                    Some("condition holds but the law fails".into()),
                ),
                None => self.outcome(p, self.holds(s.exhaustive), None, s.examined, Some("condition and law both hold".into())),
            };
        }
        let pair = self.closed.witness.as_ref().expect("failing pair");
        let (a, b) = (pair.first.bits(), pair.second.bits());
        let meet = a & b;
        let targeted: &[(Bits, Bits)] = match p {
            PropertyId::MeetDistributiveIffClosed => &[(a, b)],
            _ => &[(meet, a), (meet, b)],
        };
        let mut examined = 0;
        let mut found = None;
        for &(x, y) in targeted {
            examined += 1;
            if let Some(breach) = self.law(p, x, y) {
                found = Some(Hit { x, y, breach });
                break;
            }
        }
        let exhaustive = found.is_some() || self.mode == Mode::Exhaustive;
        if found.is_none() {
            let s = self.search(p, domain);
            examined += s.examined;
            found = s.hit;
        }
        match found {
            Some(h) => self.outcome(
                p,
                Status::HoldsExhaustive,
                None,
                examined,
                Some(format!(
                    "condition and law both fail: {}",
                    self.law_witness(domain, h.x, h.y, h.breach)
                )),
            ),
            None if exhaustive => self.outcome(
                p,
                Status::Fails,
                Some(Witness::Condition(pair.clone())),
                examined,
                Some("condition fails but the law holds".into()),
            ),
            None => self.outcome(
                p,
                Status::Fails,
                Some(Witness::Condition(pair.clone())),
                examined,
                Some("condition fails but no sampled pair breaks the law".into()),
            ),
        }
    }

    fn check_monotone_iff_join(&self) -> PropertyOutcome {
        let p = PropertyId::UpperMonotoneIffJoinDistributive;
        let monotone = PropertyId::UpperMonotone;
        let join = PropertyId::UpperJoinDistributive;
        let m = self.search(monotone, Domain::Nested);
        let j = self.search(join, Domain::Binary);
        let examined = m.examined + j.examined;
        let exhaustive = m.exhaustive && j.exhaustive;
        match (m.hit, j.hit) {
            (None, None) => self.outcome(p, self.holds(exhaustive), None, examined, Some("both laws hold".into())),
            (Some(_), Some(_)) => self.outcome(p, Status::HoldsExhaustive, None, examined, Some("both laws fail".into())),
            (Some(h), None) => {
                // a monotonicity failure at X ⊆ Y is a join failure at (X, Y)
                if self.law(join, h.x, h.y).is_some() {
                    self.outcome(p, Status::HoldsExhaustive, None, examined + 1, Some("both laws fail".into()))
                } else {
                    self.outcome(
                        p,
                        Status::Fails,
                        Some(self.law_witness(Domain::Nested, h.x, h.y, h.breach)),
                        examined,
                        Some("monotonicity fails but join-distributivity holds".into()),
                    )
                }
            }
            (None, Some(h)) => {
                let joined = h.x | h.y;
                let probes = [
                    (h.x, joined),
                    (h.y, joined),
                    (joined, self.upper(h.x) | self.upper(h.y)),
                ];
                if probes.iter().any(|&(x, y)| self.law(monotone, x, y).is_some()) {
                    self.outcome(p, Status::HoldsExhaustive, None, examined + 3, Some("both laws fail".into()))
                } else {
                    self.outcome(
                        p,
                        Status::Fails,
                        Some(self.law_witness(Domain::Binary, h.x, h.y, h.breach)),
                        examined,
                        Some("join-distributivity fails but monotonicity holds".into()),
                    )
                }
            }
        }
    }

    fn check_fixed_point_topology(&self, p: PropertyId) -> Result<PropertyOutcome> {
        let n = self.space.universe().len();
        let family = if p == PropertyId::LowerFixedPointsTopology {
            lower_fixed_point_family(self.space, self.limit)?
        } else {
            upper_fixed_point_family(self.space, self.limit)?
        };
        let open = family.is_topology(self.limit)?;
        let closed = family.closed_set_check(self.limit)?;
        let examined = 1u64 << n;
        let describe = |c: &crate::topology::TopologyCheck| match &c.violation {
            None => "satisfied".to_string(),
            Some(v) => v.to_string(),
        };
        let detail = format!(
            "{} members; open-set axioms: {}; closed-set axioms: {}",
            family.opens().len(),
            describe(&open),
            describe(&closed)
        );
        if !self.closed.holds {
            return Ok(self.outcome(
                p,
                Status::HoldsExhaustive,
                None,
                examined,
                Some(format!("premise false (vacuous); {detail}")),
            ));
        }
        let violation = open.violation.or(closed.violation);
        Ok(match violation {
            None => self.outcome(p, Status::HoldsExhaustive, None, examined, Some(detail)),
            Some(v) => self.outcome(
                p,
                Status::Fails,
                Some(Witness::Topology {
                    family: family.origin(),
                    violation: v,
                }),
                examined,
                Some(detail),
            ),
        })
    }

    fn check_upper_versus_closure(&self) -> PropertyOutcome {
        let p = PropertyId::UpperVersusClosure;
        let topology = self.topology();
        let mut first_x: Option<Bits> = None; // cl(X) ⊄ S^-(X)
        let mut first_y: Option<Bits> = None; // S^-(Y) ⊄ cl(Y)
        let mut examined = 0u64;
        let mut observe = |x: Bits| {
            examined += 1;
            let (upper, closure) = (self.upper(x), topology.closure_bits(x));
            if first_x.is_none() && !is_subset_bits(closure, upper) {
                first_x = Some(x);
            }
            if first_y.is_none() && !is_subset_bits(upper, closure) {
                first_y = Some(x);
            }
            first_x.is_some() && first_y.is_some()
        };
        let exhaustive = match self.mode {
            Mode::Exhaustive => {
                for x in 0..=self.full {
                    if observe(x) {
                        break;
                    }
                }
                true
            }
            Mode::Sampled { samples, seed } => {
                let mut rng = self.rng(seed);
                for _ in 0..samples {
                    if observe(rng.gen::<Bits>() & self.full) {
                        break;
                    }
                }
                false
            }
        };
        let u = self.space.universe();
        match (first_x, first_y) {
            (Some(x), Some(y)) => self.outcome(
                p,
                Status::Fails,
                Some(Witness::Incomparable {
                    x: Subset::from_bits(u, x),
                    upper_x: Subset::from_bits(u, self.upper(x)),
                    closure_x: Subset::from_bits(u, topology.closure_bits(x)),
                    y: Subset::from_bits(u, y),
                    upper_y: Subset::from_bits(u, self.upper(y)),
                    closure_y: Subset::from_bits(u, topology.closure_bits(y)),
                }),
                examined,
                None,
            ),
            (fx, fy) => {
                let note = match (fx, fy) {
                    (None, None) => "S^-(X) = cl(X) for every X examined",
                    (Some(_), None) => "S^-(X) ⊆ cl(X) for every X examined",
                    _ => "cl(X) ⊆ S^-(X) for every X examined",
                };
                self.outcome(p, self.holds(exhaustive), None, examined, Some(note.into()))
            }
        }
    }
}
