//! Divisor-class calculus on the moduli space of stable n-pointed rational
//! curves: boundary divisor classes, numerical F-curve classes, the
//! intersection pairing between them, symmetrization under a permutation
//! group, and the F-nefness scan.
//!
//! A boundary class is determined by an unordered splitting `S | S^c` of
//! the marked points with both sides of size at least 2; the stored
//! representative is the side containing the label 1. An F-curve is kept
//! only as its numerical class, i.e. the partition of the markings into
//! four blocks; one-dimensional families with the same partition are
//! numerically equivalent and pair identically with every boundary class.
//!
//! The pairing rule: a boundary splitting meets a four-block partition in
//! `-1` if one side of the splitting is a block, `+1` if one side is a
//! union of exactly two blocks, and `0` otherwise. For six or seven
//! marked points a class pairing non-negatively with every F-curve is nef;
//! for larger n the scan only certifies F-nefness.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exact::Rat;
use crate::perm::{orbit, PermError, PermGroup, Permutation, SubsetClass};

/// Enumeration sizes stay desk-scale only for small n.
pub const MAX_POINTS: usize = 9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MzeronError {
    #[error("marked-point count {0} is outside the supported range 4..={MAX_POINTS}")]
    UnsupportedPointCount(usize),
    #[error("boundary subset must satisfy 2 <= |S| <= n-2, got |S| = {size} with n = {n}")]
    InvalidSubsetSize { size: usize, n: usize },
    #[error("labels must lie in 1..={n}")]
    LabelOutOfRange { n: usize },
    #[error("blocks must form a partition of 1..={n} into exactly four nonempty parts")]
    InvalidBlocks { n: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

fn check_points(n: usize) -> Result<(), MzeronError> {
    if !(4..=MAX_POINTS).contains(&n) {
        return Err(MzeronError::UnsupportedPointCount(n));
    }
    Ok(())
}

/// The class of the boundary divisor attached to a splitting `S | S^c` of
/// the n marked points. The two sides give the same divisor; the canonical
/// representative is the side containing the label 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoundaryClass {
    n: usize,
    rep: BTreeSet<usize>,
}

impl BoundaryClass {
    pub fn new(n: usize, subset: BTreeSet<usize>) -> Result<Self, MzeronError> {
        check_points(n)?;
        if subset.iter().any(|&x| x < 1 || x > n) {
            return Err(MzeronError::LabelOutOfRange { n });
        }
        if subset.len() < 2 || subset.len() > n - 2 {
            return Err(MzeronError::InvalidSubsetSize {
                size: subset.len(),
                n,
            });
        }
        let rep = if subset.contains(&1) {
            subset
        } else {
            (1..=n).filter(|x| !subset.contains(x)).collect()
        };
        Ok(BoundaryClass { n, rep })
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn rep(&self) -> &BTreeSet<usize> {
        &self.rep
    }

    pub fn complement(&self) -> BTreeSet<usize> {
        (1..=self.n).filter(|x| !self.rep.contains(x)).collect()
    }

    pub fn apply(&self, p: &Permutation) -> BoundaryClass {
        assert_eq!(p.degree(), self.n, "permutation degree mismatch");
        BoundaryClass::new(self.n, self.rep.iter().map(|&x| p.image_of(x)).collect())
            .expect("relabeling preserves validity")
    }
}

impl fmt::Display for BoundaryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{{")?;
        for (i, x) in self.rep.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// The numerical class of an F-curve: a partition of the n marked points
/// into exactly four nonempty blocks, sorted by least element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FCurve {
    n: usize,
    blocks: Vec<BTreeSet<usize>>,
}

impl FCurve {
    pub fn new(n: usize, mut blocks: Vec<BTreeSet<usize>>) -> Result<Self, MzeronError> {
        check_points(n)?;
        let covered: BTreeSet<usize> = blocks.iter().flatten().copied().collect();
        let total: usize = blocks.iter().map(BTreeSet::len).sum();
        if blocks.len() != 4
            || blocks.iter().any(BTreeSet::is_empty)
            || total != n
            || covered.len() != n
            || covered.iter().any(|&x| x < 1 || x > n)
        {
            return Err(MzeronError::InvalidBlocks { n });
        }
        blocks.sort();
        Ok(FCurve { n, blocks })
    }

    /// Convenience constructor from slices of labels.
    pub fn from_blocks(n: usize, blocks: [&[usize]; 4]) -> Result<Self, MzeronError> {
        FCurve::new(
            n,
            blocks
                .iter()
                .map(|b| b.iter().copied().collect())
                .collect(),
        )
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[BTreeSet<usize>] {
        &self.blocks
    }

    pub fn apply(&self, p: &Permutation) -> FCurve {
        assert_eq!(p.degree(), self.n, "permutation degree mismatch");
        FCurve::new(
            self.n,
            self.blocks
                .iter()
                .map(|b| b.iter().map(|&x| p.image_of(x)).collect())
                .collect(),
        )
        .expect("relabeling preserves validity")
    }
}

impl fmt::Display for FCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{{")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, x) in block.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "}}")
    }
}

/// A sparse rational combination of boundary classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    n: usize,
    coeffs: BTreeMap<BoundaryClass, Rat>,
}

impl DivisorClass {
    pub fn zero(n: usize) -> Self {
        DivisorClass {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn points(&self) -> usize {
        self.n
    }

    /// Add `c * boundary`; zero coefficients are dropped.
    pub fn add_term(&mut self, boundary: BoundaryClass, c: &Rat) {
        assert_eq!(boundary.n, self.n, "marked-point count mismatch");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(boundary) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn add(&self, other: &DivisorClass) -> DivisorClass {
        assert_eq!(self.n, other.n, "marked-point count mismatch");
        let mut out = self.clone();
        for (b, c) in &other.coeffs {
            out.add_term(b.clone(), c);
        }
        out
    }

    pub fn scale(&self, factor: &Rat) -> DivisorClass {
        if factor.is_zero() {
            return DivisorClass::zero(self.n);
        }
        DivisorClass {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|(b, c)| (b.clone(), c * factor))
                .collect(),
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<BoundaryClass, Rat> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn apply(&self, p: &Permutation) -> DivisorClass {
        let mut out = DivisorClass::zero(self.n);
        for (b, c) in &self.coeffs {
            out.add_term(b.apply(p), c);
        }
        out
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{b}")?;
        }
        Ok(())
    }
}

/// All boundary classes for n marked points, canonically sorted.
pub fn enumerate_boundaries(n: usize) -> Result<Vec<BoundaryClass>, MzeronError> {
    check_points(n)?;
    let mut out = BTreeSet::new();
    // Subsets containing 1 are exactly the canonical representatives.
    for mask in 0..(1u32 << (n - 1)) {
        let mut subset: BTreeSet<usize> = BTreeSet::from([1]);
        for bit in 0..(n - 1) {
            if mask & (1 << bit) != 0 {
                subset.insert(bit + 2);
            }
        }
        if subset.len() >= 2 && subset.len() <= n - 2 {
            out.insert(BoundaryClass::new(n, subset)?);
        }
    }
    Ok(out.into_iter().collect())
}

/// All partitions of `1..=n` into exactly four nonempty blocks,
/// canonically sorted.
pub fn enumerate_fcurves(n: usize) -> Result<Vec<FCurve>, MzeronError> {
    check_points(n)?;
    let mut out = Vec::new();
    let mut blocks: Vec<BTreeSet<usize>> = Vec::new();
    fn place(
        label: usize,
        n: usize,
        blocks: &mut Vec<BTreeSet<usize>>,
        out: &mut Vec<FCurve>,
    ) {
        if label > n {
            if blocks.len() == 4 {
                out.push(FCurve::new(n, blocks.clone()).expect("constructed partition is valid"));
            }
            return;
        }
        // Remaining labels must still be able to fill four blocks.
        let remaining = n - label + 1;
        for i in 0..blocks.len() {
            if blocks.len() + remaining - 1 >= 4 {
                blocks[i].insert(label);
                place(label + 1, n, blocks, out);
                blocks[i].remove(&label);
            }
        }
        if blocks.len() < 4 {
            blocks.push(BTreeSet::from([label]));
            place(label + 1, n, blocks, out);
            blocks.pop();
        }
    }
    place(1, n, &mut blocks, &mut out);
    out.sort();
    Ok(out)
}

/// Intersection number of a boundary class with an F-curve: `-1` if one
/// side of the splitting is a block, `+1` if one side is the union of
/// exactly two blocks, `0` otherwise. Panics if the point counts differ.
pub fn intersect(d: &BoundaryClass, f: &FCurve) -> i64 {
    assert_eq!(d.n, f.n, "marked-point count mismatch");
    let sides = [d.rep.clone(), d.complement()];
    for side in &sides {
        if f.blocks.iter().any(|b| b == side) {
            return -1;
        }
    }
    for side in &sides {
        for i in 0..4 {
            for j in (i + 1)..4 {
                if f.blocks[i].len() + f.blocks[j].len() == side.len()
                    && f.blocks[i].union(&f.blocks[j]).eq(side.iter())
                {
                    return 1;
                }
            }
        }
    }
    0
}

/// Linear extension of [`intersect`] to sparse divisor classes.
pub fn intersect_class(d: &DivisorClass, f: &FCurve) -> Rat {
    assert_eq!(d.n, f.n, "marked-point count mismatch");
    let mut acc = Rat::zero();
    for (b, c) in &d.coeffs {
        match intersect(b, f) {
            0 => {}
            1 => acc += c,
            -1 => acc -= c,
            _ => unreachable!("pairing values lie in -1..=1"),
        }
    }
    acc
}

/// Sum of the distinct boundary classes in the orbit of `seed`, each with
/// coefficient 1.
pub fn orbit_sum(group: &PermGroup, seed: &BoundaryClass) -> Result<DivisorClass, MzeronError> {
    if group.degree() != seed.n {
        return Err(MzeronError::Perm(PermError::DegreeMismatch {
            expected: seed.n,
            found: group.degree(),
        }));
    }
    let class = SubsetClass::new(seed.n, seed.rep.clone())?;
    let mut out = DivisorClass::zero(seed.n);
    let one = Rat::from(num_bigint::BigInt::from(1));
    for member in orbit(group, &class)? {
        out.add_term(BoundaryClass::new(seed.n, member.rep().clone())?, &one);
    }
    Ok(out)
}

/// First F-curve (in canonical order) pairing negatively with the class,
/// or `None` when the class is F-nef.
pub fn fnef_violation(d: &DivisorClass) -> Option<FCurve> {
    enumerate_fcurves(d.n)
        .expect("point count validated at construction")
        .into_iter()
        .find(|f| intersect_class(d, f) < Rat::zero())
}

/// First F-curve pairing non-positively with the class, or `None` when
/// the class is F-ample.
pub fn fample_violation(d: &DivisorClass) -> Option<FCurve> {
    enumerate_fcurves(d.n)
        .expect("point count validated at construction")
        .into_iter()
        .find(|f| intersect_class(d, f) <= Rat::zero())
}

pub fn is_fnef(d: &DivisorClass) -> bool {
    fnef_violation(d).is_none()
}

pub fn is_fample(d: &DivisorClass) -> bool {
    fample_violation(d).is_none()
}
