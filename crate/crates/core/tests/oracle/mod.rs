//! Brute-force reference implementations written straight from the
//! definitions. They share nothing with the library beyond the bitmask
//! encoding, and favour obviousness over speed.

#![allow(dead_code)]

pub type Mask = u32;

pub fn full(n: usize) -> Mask {
    if n == 32 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

pub fn subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

pub fn members(x: Mask, n: usize) -> Vec<usize> {
    (0..n).filter(|i| x & (1 << i) != 0).collect()
}

/// Union of every subfamily of `blocks` (duplicates kept out).
pub fn all_block_unions(blocks: &[Mask]) -> Vec<Mask> {
    let mut out = Vec::new();
    for choice in 0u64..1 << blocks.len() {
        let u = (0..blocks.len())
            .filter(|i| choice & (1 << i) != 0)
            .fold(0, |acc, i| acc | blocks[i]);
        out.push(u);
    }
    out
}

/// Some subfamily of `blocks` has union exactly `t`.
pub fn is_union_of_blocks(blocks: &[Mask], t: Mask) -> bool {
    all_block_unions(blocks).contains(&t)
}

pub fn lower(blocks: &[Mask], x: Mask) -> Mask {
    blocks.iter().filter(|&&b| subset(b, x)).fold(0, |acc, b| acc | b)
}

/// Blocks containing `p` with no strictly smaller block containing `p`.
pub fn minimal_description(blocks: &[Mask], p: usize) -> Vec<Mask> {
    let holding: Vec<Mask> = blocks.iter().copied().filter(|b| b & (1 << p) != 0).collect();
    let mut out: Vec<Mask> = holding
        .iter()
        .copied()
        .filter(|&b| !holding.iter().any(|&c| c != b && subset(c, b)))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn upper(blocks: &[Mask], n: usize, x: Mask) -> Mask {
    let l = lower(blocks, x);
    let mut out = l;
    for p in members(x, n) {
        if l & (1 << p) == 0 {
            for b in minimal_description(blocks, p) {
                out |= b;
            }
        }
    }
    out
}

/// Every pairwise intersection of blocks is a union of blocks.
pub fn intersection_union_closed(blocks: &[Mask]) -> bool {
    blocks
        .iter()
        .all(|&a| blocks.iter().all(|&b| is_union_of_blocks(blocks, a & b)))
}

/// Open sets generated by `blocks` as a subbase: `X` is open when every
/// point of `X` lies in a finite intersection of blocks (or in `U`) inside
/// `X`.
pub fn subbase_topology(blocks: &[Mask], n: usize) -> Vec<Mask> {
    let mut base = vec![full(n)];
    for choice in 1u64..1 << blocks.len() {
        let meet = (0..blocks.len())
            .filter(|i| choice & (1 << i) != 0)
            .fold(full(n), |acc, i| acc & blocks[i]);
        base.push(meet);
    }
    (0..=full(n))
        .filter(|&x| {
            members(x, n)
                .into_iter()
                .all(|p| base.iter().any(|&b| b & (1 << p) != 0 && subset(b, x)))
        })
        .collect()
}

/// Largest open set inside `x`.
pub fn interior(opens: &[Mask], x: Mask) -> Mask {
    opens
        .iter()
        .copied()
        .filter(|&o| subset(o, x))
        .max_by_key(|o| o.count_ones())
        .unwrap_or(0)
}

/// Intersection of the closed sets containing `x`.
pub fn closure(opens: &[Mask], n: usize, x: Mask) -> Mask {
    opens
        .iter()
        .map(|&o| full(n) & !o)
        .filter(|&c| subset(x, c))
        .fold(full(n), |acc, c| acc & c)
}

pub fn is_topology(family: &[Mask], n: usize) -> bool {
    family.contains(&0)
        && family.contains(&full(n))
        && family
            .iter()
            .all(|&a| family.iter().all(|&b| family.contains(&(a | b)) && family.contains(&(a & b))))
}

pub fn lower_fixed(blocks: &[Mask], n: usize) -> Vec<Mask> {
    (0..=full(n)).filter(|&x| lower(blocks, x) == x).collect()
}

pub fn upper_fixed(blocks: &[Mask], n: usize) -> Vec<Mask> {
    (0..=full(n)).filter(|&x| upper(blocks, n, x) == x).collect()
}

pub fn meet_distributive(blocks: &[Mask], n: usize) -> bool {
    (0..=full(n)).all(|x| (0..=full(n)).all(|y| lower(blocks, x & y) == lower(blocks, x) & lower(blocks, y)))
}

pub fn join_distributive(blocks: &[Mask], n: usize) -> bool {
    (0..=full(n))
        .all(|x| (0..=full(n)).all(|y| upper(blocks, n, x | y) == upper(blocks, n, x) | upper(blocks, n, y)))
}

pub fn upper_monotone(blocks: &[Mask], n: usize) -> bool {
    (0..=full(n)).all(|x| {
        (0..=full(n))
            .filter(|&y| subset(x, y))
            .all(|y| subset(upper(blocks, n, x), upper(blocks, n, y)))
    })
}

/// Equivalence classes of a partition given by its blocks; `None` when the
/// nonempty blocks overlap without coinciding or miss a point.
pub fn partition_classes(blocks: &[Mask], n: usize) -> Option<Vec<Mask>> {
    let mut classes: Vec<Mask> = blocks.iter().copied().filter(|&b| b != 0).collect();
    classes.sort_unstable();
    classes.dedup();
    let disjoint = classes
        .iter()
        .enumerate()
        .all(|(i, &a)| classes[i + 1..].iter().all(|&b| a & b == 0));
    let covers = classes.iter().fold(0, |acc, b| acc | b) == full(n);
    (disjoint && covers).then_some(classes)
}

pub fn pawlak_lower(classes: &[Mask], x: Mask) -> Mask {
    classes.iter().filter(|&&c| subset(c, x)).fold(0, |acc, c| acc | c)
}

pub fn pawlak_upper(classes: &[Mask], x: Mask) -> Mask {
    classes.iter().filter(|&&c| c & x != 0).fold(0, |acc, c| acc | c)
}

/// Every covering of an `n`-point set by distinct nonempty blocks.
pub fn all_coverings(n: usize) -> Vec<Vec<Mask>> {
    let subsets: Vec<Mask> = (1..=full(n)).collect();
    let mut out = Vec::new();
    for choice in 1u64..1 << subsets.len() {
        let family: Vec<Mask> = (0..subsets.len())
            .filter(|i| choice & (1 << i) != 0)
            .map(|i| subsets[i])
            .collect();
        if family.iter().fold(0, |acc, b| acc | b) == full(n) {
            out.push(family);
        }
    }
    out
}
