//! Classical approximation space over a partition of the universe.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sets::{ensure_same, is_subset_bits, Bits, SetFamily, Subset, Universe};
use crate::soft_set::SoftSet;

/// Lower/upper approximations of one query set together with the derived
/// positive, negative and boundary regions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionReport {
    pub lower: Subset,
    pub upper: Subset,
    pub positive: Subset,
    pub negative: Subset,
    pub boundary: Subset,
    pub definable: bool,
}

impl RegionReport {
    pub fn from_approximations(lower: Subset, upper: Subset) -> Self {
        let boundary = upper.with_bits(upper.bits() & !lower.bits());
        Self {
            positive: lower.clone(),
            negative: upper.complement(),
            definable: boundary.is_empty(),
            boundary,
            lower,
            upper,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PawlakSpace {
    classes: SetFamily,
}

impl PawlakSpace {
    /// `classes` must be nonempty, pairwise disjoint and cover the universe.
    pub fn new(classes: SetFamily) -> Result<Self> {
        let mut seen: Bits = 0;
        for &c in classes.bits() {
            if c == 0 || seen & c != 0 {
                return Err(Error::NotAPartition);
            }
            seen |= c;
        }
        if seen != classes.universe().full_bits() {
            return Err(Error::NotAPartition);
        }
        Ok(Self { classes })
    }

    /// Quotient of `x ~ y ⇔ ∃e. {x, y} ⊆ F(e)`, which is an equivalence
    /// exactly when the blocks form a partition.
    pub fn from_partition_soft_set(soft_set: &SoftSet) -> Result<Self> {
        if !soft_set.is_partition() {
            return Err(Error::NotAPartition);
        }
        let universe = soft_set.universe();
        let blocks = soft_set.image_bits();
        let classes = (0..universe.len()).map(|x| {
            blocks
                .iter()
                .filter(|&&b| b & (1 << x) != 0)
                .fold(0, |acc, b| acc | b)
        });
        Self::new(SetFamily::from_bits(universe, classes))
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.classes.universe()
    }

    pub fn classes(&self) -> &SetFamily {
        &self.classes
    }

    pub(crate) fn lower_bits(&self, x: Bits) -> Bits {
        self.classes.inner_union_bits(x)
    }

    pub(crate) fn upper_bits(&self, x: Bits) -> Bits {
        self.classes
            .bits()
            .iter()
            .filter(|&&c| c & x != 0)
            .fold(0, |acc, c| acc | c)
    }

    pub fn lower(&self, x: &Subset) -> Result<Subset> {
        ensure_same(self.universe(), x.universe())?;
        Ok(x.with_bits(self.lower_bits(x.bits())))
    }

    pub fn upper(&self, x: &Subset) -> Result<Subset> {
        ensure_same(self.universe(), x.universe())?;
        Ok(x.with_bits(self.upper_bits(x.bits())))
    }

    pub fn regions(&self, x: &Subset) -> Result<RegionReport> {
        Ok(RegionReport::from_approximations(self.lower(x)?, self.upper(x)?))
    }

    pub fn is_definable(&self, x: &Subset) -> Result<bool> {
        ensure_same(self.universe(), x.universe())?;
        let u = self.upper_bits(x.bits());
        Ok(is_subset_bits(u, self.lower_bits(x.bits())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space_d() -> PawlakSpace {
        let u = Universe::numbered("h", 7).unwrap();
        let s = SoftSet::parse(&u, [("e1", "h1,h2"), ("e2", "h3,h4"), ("e3", "h5,h6,h7")]).unwrap();
        PawlakSpace::from_partition_soft_set(&s).unwrap()
    }

    fn set(p: &PawlakSpace, text: &str) -> Subset {
        Subset::parse(p.universe(), text).unwrap()
    }

    #[test]
    fn classes_from_partition_soft_set() {
        let p = space_d();
        let listed: Vec<String> = p.classes().iter().map(|c| c.to_string()).collect();
        assert_eq!(listed, ["{h1,h2}", "{h3,h4}", "{h5,h6,h7}"]);

        let u = Universe::new(["a", "b"]).unwrap();
        let one = SoftSet::parse(&u, [("e", "a,b")]).unwrap();
        assert_eq!(PawlakSpace::from_partition_soft_set(&one).unwrap().classes().len(), 1);

        let uc = Universe::numbered("h", 5).unwrap();
        let c = SoftSet::parse(&uc, [("e1", "h1,h2,h3"), ("e2", "h3,h4"), ("e3", "h4,h5")]).unwrap();
        assert_eq!(
            PawlakSpace::from_partition_soft_set(&c).unwrap_err(),
            Error::NotAPartition
        );
    }

    #[test]
    fn approximations() {
        let p = space_d();
        let x = set(&p, "h1,h2,h3");
        assert_eq!(p.lower(&x).unwrap(), set(&p, "h1,h2"));
        assert_eq!(p.upper(&x).unwrap(), set(&p, "h1,h2,h3,h4"));
        assert_eq!(p.upper(&set(&p, "h5")).unwrap(), set(&p, "h5,h6,h7"));
        let full = Subset::full(p.universe());
        assert_eq!(p.lower(&full).unwrap(), full);
        let empty = Subset::empty(p.universe());
        assert_eq!(p.lower(&empty).unwrap(), empty);
        assert_eq!(p.upper(&empty).unwrap(), empty);
    }

    #[test]
    fn regions() {
        let p = space_d();
        let r = p.regions(&set(&p, "h1,h2,h3")).unwrap();
        assert_eq!(r.boundary, set(&p, "h3,h4"));
        assert_eq!(r.negative, set(&p, "h5,h6,h7"));
        assert!(!r.definable);

        let r = p.regions(&set(&p, "h1,h2")).unwrap();
        assert!(r.definable && r.boundary.is_empty());
        assert_eq!(r.lower, r.upper);
    }

    #[test]
    fn mismatched_universe() {
        let p = space_d();
        let other = Universe::numbered("h", 6).unwrap();
        assert_eq!(
            p.lower(&Subset::empty(&other)).unwrap_err(),
            Error::UniverseMismatch
        );
    }

    #[test]
    fn rejects_overlapping_classes() {
        let u = Universe::new(["a", "b", "c"]).unwrap();
        let f = SetFamily::from_bits(&u, [0b011, 0b110]);
        assert_eq!(PawlakSpace::new(f).unwrap_err(), Error::NotAPartition);
        let f = SetFamily::from_bits(&u, [0b011]);
        assert_eq!(PawlakSpace::new(f).unwrap_err(), Error::NotAPartition);
    }
}
