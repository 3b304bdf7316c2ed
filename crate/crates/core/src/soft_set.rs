//! Soft sets over a finite universe and their correspondence with binary
//! relations between parameters and elements.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sets::{ensure_same, Bits, SetFamily, Subset, Universe};

/// A parameterized family of subsets: each parameter `e` names a block `F(e)`.
///
/// Distinct parameters may share the same block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftSet {
    universe: Arc<Universe>,
    parameters: Vec<String>,
    images: Vec<Bits>,
}

impl SoftSet {
    pub fn new<I, S>(universe: &Arc<Universe>, assignment: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, Subset)>,
        S: Into<String>,
    {
        let mut parameters = Vec::new();
        let mut images = Vec::new();
        let mut seen = HashSet::new();
        for (name, block) in assignment {
            let name = name.into();
            ensure_same(universe, block.universe())?;
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateParameter(name));
            }
            parameters.push(name);
            images.push(block.bits());
        }
        Ok(Self {
            universe: Arc::clone(universe),
            parameters,
            images,
        })
    }

    /// Parameters are named `e1..em` in block order.
    pub fn from_bits<I: IntoIterator<Item = Bits>>(universe: &Arc<Universe>, blocks: I) -> Self {
        let full = universe.full_bits();
        let images: Vec<Bits> = blocks.into_iter().map(|b| b & full).collect();
        let parameters = (1..=images.len()).map(|i| format!("e{i}")).collect();
        Self {
            universe: Arc::clone(universe),
            parameters,
            images,
        }
    }

    /// Convenience constructor from `(parameter, "a,b,c")` pairs.
    pub fn parse<'a, I>(universe: &Arc<Universe>, assignment: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let pairs = assignment
            .into_iter()
            .map(|(p, text)| Subset::parse(universe, text).map(|s| (p, s)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, pairs)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn len(&self) -> usize {
        self.parameters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parameters.is_empty()
    }

    pub fn image(&self, parameter: &str) -> Result<Subset> {
        self.parameters
            .iter()
            .position(|p| p == parameter)
            .map(|i| Subset::from_bits(&self.universe, self.images[i]))
            .ok_or_else(|| Error::UnknownParameter(parameter.to_string()))
    }

    /// `(parameter, F(parameter))` in parameter order.
    pub fn assignment(&self) -> impl Iterator<Item = (&str, Subset)> + '_ {
        self.parameters
            .iter()
            .zip(&self.images)
            .map(move |(p, &b)| (p.as_str(), Subset::from_bits(&self.universe, b)))
    }

    pub(crate) fn image_bits(&self) -> &[Bits] {
        &self.images
    }

    /// The deduplicated family of block values, `C_G`.
    pub fn blocks(&self) -> SetFamily {
        SetFamily::from_bits(&self.universe, self.images.iter().copied())
    }

    /// Blocks cover the universe.
    pub fn is_full(&self) -> bool {
        self.images.iter().fold(0, |acc, b| acc | b) == self.universe.full_bits()
    }

    /// Full, and no block is empty.
    pub fn is_covering(&self) -> bool {
        self.is_full() && self.images.iter().all(|&b| b != 0)
    }

    /// Distinct block values are nonempty, pairwise disjoint and cover `U`.
    pub fn is_partition(&self) -> bool {
        if !self.is_covering() {
            return false;
        }
        let blocks = self.blocks();
        let mut seen: Bits = 0;
        for &b in blocks.bits() {
            if seen & b != 0 {
                return false;
            }
            seen |= b;
        }
        true
    }

    /// First parameter whose block is empty, if any.
    pub(crate) fn empty_parameter(&self) -> Option<&str> {
        self.parameters
            .iter()
            .zip(&self.images)
            .find(|(_, &b)| b == 0)
            .map(|(p, _)| p.as_str())
    }

    /// `(e, y)` is related iff `y ∈ F(e)`.
    pub fn induced_relation(&self) -> BinaryRelation {
        let pairs = self
            .images
            .iter()
            .enumerate()
            .flat_map(|(p, &b)| crate::sets::positions(b).map(move |y| (p, y)))
            .collect();
        BinaryRelation {
            parameters: self.parameters.clone(),
            universe: Arc::clone(&self.universe),
            pairs,
        }
    }

    /// `F_R(e) = { y : (e, y) ∈ R }`.
    pub fn from_relation(relation: &BinaryRelation) -> Self {
        let mut images = vec![0; relation.parameters.len()];
        for &(p, y) in &relation.pairs {
            images[p] |= 1 << y;
        }
        Self {
            universe: Arc::clone(&relation.universe),
            parameters: relation.parameters.clone(),
            images,
        }
    }
}

/// A relation from a parameter list to universe elements, stored as
/// `(parameter index, element position)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryRelation {
    parameters: Vec<String>,
    universe: Arc<Universe>,
    pairs: BTreeSet<(usize, usize)>,
}

impl BinaryRelation {
    pub fn new<I, S>(universe: &Arc<Universe>, parameters: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let parameters: Vec<String> = parameters.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for p in &parameters {
            if !seen.insert(p) {
                return Err(Error::DuplicateParameter(p.clone()));
            }
        }
        Ok(Self {
            parameters,
            universe: Arc::clone(universe),
            pairs: BTreeSet::new(),
        })
    }

    pub fn insert(&mut self, parameter: &str, element: &str) -> Result<bool> {
        let p = self
            .parameters
            .iter()
            .position(|q| q == parameter)
            .ok_or_else(|| Error::UnknownParameter(parameter.to_string()))?;
        let y = self
            .universe
            .position(element)
            .ok_or_else(|| Error::UnknownElement(element.to_string()))?;
        Ok(self.pairs.insert((p, y)))
    }

    pub fn contains(&self, parameter: &str, element: &str) -> bool {
        match (
            self.parameters.iter().position(|q| q == parameter),
            self.universe.position(element),
        ) {
            (Some(p), Some(y)) => self.pairs.contains(&(p, y)),
            _ => false,
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.pairs
            .iter()
            .map(move |&(p, y)| (self.parameters[p].as_str(), self.universe.name(y)))
    }
}
