//! Exact set algebra over a fixed finite universe.
//!
//! A [`Subset`] is a membership bitmask over the positions of its
//! [`Universe`]; bit `i` is set iff the `i`-th element of the universe is a
//! member. Families of subsets are kept deduplicated and ordered by their
//! bitmask (the last universe element is the most significant position), so
//! every listing produced by this crate is reproducible.

use std::collections::HashMap;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Raw membership bitmask. Bit `i` stands for the `i`-th universe element.
pub type Bits = u32;

#[derive(Debug, Clone)]
pub struct Universe {
    elements: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    /// Largest supported universe; one bit per element in a [`Bits`] mask.
    pub const CAPACITY: usize = 30;

    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let elements: Vec<String> = names.into_iter().map(Into::into).collect();
        if elements.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if elements.len() > Self::CAPACITY {
            return Err(Error::UniverseCapacity {
                size: elements.len(),
                capacity: Self::CAPACITY,
            });
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, name) in elements.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        Ok(Arc::new(Self { elements, index }))
    }

    /// Universe whose elements are `prefix1..prefixN`.
    pub fn numbered(prefix: &str, size: usize) -> Result<Arc<Self>> {
        Self::new((1..=size).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn name(&self, position: usize) -> &str {
        &self.elements[position]
    }

    /// Mask with every element set.
    pub fn full_bits(&self) -> Bits {
        full_mask(self.len())
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Universe {}

pub(crate) fn full_mask(n: usize) -> Bits {
    if n >= Bits::BITS as usize {
        Bits::MAX
    } else {
        (1 << n) - 1
    }
}

pub(crate) fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn ensure_same(a: &Arc<Universe>, b: &Arc<Universe>) -> Result<()> {
    if same_universe(a, b) {
        Ok(())
    } else {
        Err(Error::UniverseMismatch)
    }
}

/// Iterates the positions of the set bits in ascending order.
pub(crate) fn positions(mut bits: Bits) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if bits == 0 {
            None
        } else {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) fn is_subset_bits(a: Bits, b: Bits) -> bool {
    a & !b == 0
}

#[derive(Clone)]
pub struct Subset {
    universe: Arc<Universe>,
    bits: Bits,
}

impl Subset {
    pub fn empty(universe: &Arc<Universe>) -> Self {
        Self::from_bits(universe, 0)
    }

    pub fn full(universe: &Arc<Universe>) -> Self {
        Self::from_bits(universe, universe.full_bits())
    }

    /// Builds a subset from a raw mask; bits beyond the universe are dropped.
    pub fn from_bits(universe: &Arc<Universe>, bits: Bits) -> Self {
        Self {
            universe: Arc::clone(universe),
            bits: bits & universe.full_bits(),
        }
    }

    pub fn from_names<I, S>(universe: &Arc<Universe>, names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0;
        for name in names {
            let name = name.as_ref();
            let i = universe
                .position(name)
                .ok_or_else(|| Error::UnknownElement(name.to_string()))?;
            bits |= 1 << i;
        }
        Ok(Self::from_bits(universe, bits))
    }

    /// Parses `a,b,c`, `{a,b,c}` or `{}`. Whitespace around names is ignored.
    pub fn parse(universe: &Arc<Universe>, text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .unwrap_or(trimmed);
        let names = inner.split(',').map(str::trim).filter(|s| !s.is_empty());
        Self::from_names(universe, names)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn bits(&self) -> Bits {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == self.universe.full_bits()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.universe
            .position(name)
            .is_some_and(|i| self.bits & (1 << i) != 0)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> + '_ {
        positions(self.bits).map(move |i| self.universe.name(i))
    }

    pub fn complement(&self) -> Self {
        Self::from_bits(&self.universe, !self.bits)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.universe, &other.universe)?;
        Ok(self.with_bits(self.bits | other.bits))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.universe, &other.universe)?;
        Ok(self.with_bits(self.bits & other.bits))
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.universe, &other.universe)?;
        Ok(self.with_bits(self.bits & !other.bits))
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        ensure_same(&self.universe, &other.universe)?;
        Ok(is_subset_bits(self.bits, other.bits))
    }

    pub(crate) fn with_bits(&self, bits: Bits) -> Self {
        Self::from_bits(&self.universe, bits)
    }
}

impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits && same_universe(&self.universe, &other.universe)
    }
}

impl Eq for Subset {}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.bits.cmp(&other.bits)
    }
}

impl std::hash::Hash for Subset {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, name) in self.names().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(name)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.names())
    }
}

// Operator forms panic on mismatched universes; the named methods return
// `Error::UniverseMismatch` instead.
macro_rules! binary_op {
    ($trait:ident, $method:ident, $named:ident) => {
        impl $trait for &Subset {
            type Output = Subset;
            fn $method(self, rhs: &Subset) -> Subset {
                self.$named(rhs).expect("subsets over different universes")
            }
        }
    };
}

binary_op!(BitOr, bitor, union);
binary_op!(BitAnd, bitand, intersection);
binary_op!(Sub, sub, difference);

impl Not for &Subset {
    type Output = Subset;
    fn not(self) -> Subset {
        self.complement()
    }
}

pub fn complement(x: &Subset) -> Subset {
    x.complement()
}

/// Union of a list of subsets over `universe`; the empty list yields `∅`.
pub fn family_union<'a, I>(universe: &Arc<Universe>, subsets: I) -> Result<Subset>
where
    I: IntoIterator<Item = &'a Subset>,
{
    let mut bits = 0;
    for s in subsets {
        ensure_same(universe, &s.universe)?;
        bits |= s.bits;
    }
    Ok(Subset::from_bits(universe, bits))
}

/// True iff `t` is a union of some blocks of `family` (`∅` is the empty union).
pub fn is_union_of_blocks(t: &Subset, family: &SetFamily) -> Result<bool> {
    ensure_same(&t.universe, &family.universe)?;
    Ok(family.is_union_of_blocks_bits(t.bits))
}

/// A deduplicated collection of subsets in canonical (bitmask) order.
#[derive(Clone)]
pub struct SetFamily {
    universe: Arc<Universe>,
    blocks: Vec<Bits>,
}

impl SetFamily {
    pub fn new<'a, I>(universe: &Arc<Universe>, subsets: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Subset>,
    {
        let mut blocks = Vec::new();
        for s in subsets {
            ensure_same(universe, &s.universe)?;
            blocks.push(s.bits);
        }
        Ok(Self::from_bits(universe, blocks))
    }

    pub fn from_bits<I: IntoIterator<Item = Bits>>(universe: &Arc<Universe>, bits: I) -> Self {
        let full = universe.full_bits();
        let mut blocks: Vec<Bits> = bits.into_iter().map(|b| b & full).collect();
        blocks.sort_unstable();
        blocks.dedup();
        Self {
            universe: Arc::clone(universe),
            blocks,
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn bits(&self) -> &[Bits] {
        &self.blocks
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.blocks
            .iter()
            .map(move |&b| Subset::from_bits(&self.universe, b))
    }

    pub fn contains(&self, s: &Subset) -> bool {
        same_universe(&self.universe, &s.universe) && self.contains_bits(s.bits)
    }

    pub(crate) fn contains_bits(&self, bits: Bits) -> bool {
        self.blocks.binary_search(&bits).is_ok()
    }

    pub fn union(&self) -> Subset {
        Subset::from_bits(&self.universe, self.blocks.iter().fold(0, |acc, b| acc | b))
    }

    /// Union of the blocks contained in `t`.
    pub(crate) fn inner_union_bits(&self, t: Bits) -> Bits {
        self.blocks
            .iter()
            .filter(|&&b| is_subset_bits(b, t))
            .fold(0, |acc, b| acc | b)
    }

    // Any union of blocks inside `t` is contained in the union of all blocks
    // inside `t`, so testing that single candidate decides membership.
    pub(crate) fn is_union_of_blocks_bits(&self, t: Bits) -> bool {
        self.inner_union_bits(t) == t
    }

    pub fn is_union_of_blocks(&self, t: &Subset) -> Result<bool> {
        is_union_of_blocks(t, self)
    }

    /// Family of complements of the members.
    pub fn complements(&self) -> Self {
        let full = self.universe.full_bits();
        Self::from_bits(&self.universe, self.blocks.iter().map(|b| !b & full))
    }
}

impl PartialEq for SetFamily {
    fn eq(&self, other: &Self) -> bool {
        self.blocks == other.blocks && same_universe(&self.universe, &other.universe)
    }
}

impl Eq for SetFamily {}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.iter() {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

impl Serialize for SetFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
