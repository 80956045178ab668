//! Combinatorics of theta characteristics on genus-2 and genus-1 curves.
//!
//! On a genus-2 curve the six Weierstrass points are labeled `1..=6`. An
//! even theta characteristic corresponds to a 3-element subset of the
//! labels modulo complement (10 classes); an odd one corresponds to a
//! single label (6 in total), so all 16 = 2^4 spin structures are
//! accounted for. A genus-1 curve carries 4 theta characteristics, 3 even
//! and 1 odd; products of these counts drive the fiber degrees of the
//! forgetful map over the boundary.
//!
//! The bielliptic involution pairs the Weierstrass points without fixed
//! points; with the labeling `x1,x2,x3,x1',x2',x3' -> 1..6` it is the
//! permutation `(1 4)(2 5)(3 6)`. Any other consistent labeling gives a
//! conjugate involution and the same counts.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::perm::Permutation;
use crate::VerifyError;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ThetaError {
    #[error("expected an involution, got {0}")]
    NotInvolution(String),
    #[error("an even theta characteristic is a 3-subset of 1..=6, got {0:?}")]
    InvalidSubset(BTreeSet<usize>),
    #[error("a Weierstrass label lies in 1..=6, got {0}")]
    InvalidLabel(usize),
}

/// An even theta characteristic: a 3-subset of the Weierstrass labels
/// modulo complement, stored as the side containing the label 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EvenTheta {
    rep: BTreeSet<usize>,
}

impl EvenTheta {
    pub fn new(subset: BTreeSet<usize>) -> Result<Self, ThetaError> {
        if subset.len() != 3 || subset.iter().any(|&x| x < 1 || x > 6) {
            return Err(ThetaError::InvalidSubset(subset));
        }
        let rep = if subset.contains(&1) {
            subset
        } else {
            (1..=6).filter(|x| !subset.contains(x)).collect()
        };
        Ok(EvenTheta { rep })
    }

    pub fn from_labels(labels: [usize; 3]) -> Result<Self, ThetaError> {
        EvenTheta::new(labels.into_iter().collect())
    }

    pub fn rep(&self) -> &BTreeSet<usize> {
        &self.rep
    }

    pub fn complement(&self) -> BTreeSet<usize> {
        (1..=6).filter(|x| !self.rep.contains(x)).collect()
    }

    pub fn apply(&self, p: &Permutation) -> EvenTheta {
        assert_eq!(p.degree(), 6, "permutation degree mismatch");
        EvenTheta::new(self.rep.iter().map(|&x| p.image_of(x)).collect())
            .expect("relabeling preserves validity")
    }
}

impl fmt::Display for EvenTheta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let write_set = |f: &mut fmt::Formatter<'_>, set: &BTreeSet<usize>| {
            write!(f, "{{")?;
            for (i, x) in set.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")
        };
        write_set(f, &self.rep)?;
        write!(f, "|")?;
        write_set(f, &self.complement())
    }
}

/// An odd theta characteristic: a single Weierstrass label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct OddTheta {
    label: usize,
}

impl OddTheta {
    pub fn new(label: usize) -> Result<Self, ThetaError> {
        if !(1..=6).contains(&label) {
            return Err(ThetaError::InvalidLabel(label));
        }
        Ok(OddTheta { label })
    }

    pub fn label(&self) -> usize {
        self.label
    }
}

/// Theta-characteristic counts on a genus-1 curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Genus1ThetaCount {
    pub total: usize,
    pub even: usize,
    pub odd: usize,
}

pub const GENUS1_THETA: Genus1ThetaCount = Genus1ThetaCount {
    total: 4,
    even: 3,
    odd: 1,
};

/// The 10 even classes, canonically sorted.
pub fn enumerate_even() -> Vec<EvenTheta> {
    let mut out = BTreeSet::new();
    for a in 1..=6usize {
        for b in (a + 1)..=6 {
            for c in (b + 1)..=6 {
                out.insert(EvenTheta::from_labels([a, b, c]).unwrap());
            }
        }
    }
    out.into_iter().collect()
}

/// The 6 odd characteristics.
pub fn enumerate_odd() -> Vec<OddTheta> {
    (1..=6).map(|l| OddTheta::new(l).unwrap()).collect()
}

/// The bielliptic involution under the fixed labeling: `(1 4)(2 5)(3 6)`.
pub fn bielliptic_involution() -> Permutation {
    Permutation::from_cycles(6, &[&[1, 4], &[2, 5], &[3, 6]]).unwrap()
}

/// Even classes fixed by an involution of the Weierstrass labels.
pub fn bielliptic_fixed(rho: &Permutation) -> Result<Vec<EvenTheta>, ThetaError> {
    Ok(involution_orbits(rho)?.fixed)
}

/// Orbit structure of an involution on the 10 even classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionOrbits {
    pub fixed: Vec<EvenTheta>,
    /// Two-element orbits as ordered pairs (smaller class first).
    pub swapped: Vec<(EvenTheta, EvenTheta)>,
}

pub fn involution_orbits(rho: &Permutation) -> Result<InvolutionOrbits, ThetaError> {
    if rho.degree() != 6 || !rho.is_involution() {
        return Err(ThetaError::NotInvolution(rho.to_string()));
    }
    let mut fixed = Vec::new();
    let mut swapped = Vec::new();
    for theta in enumerate_even() {
        let image = theta.apply(rho);
        if image == theta {
            fixed.push(theta);
        } else if theta < image {
            swapped.push((theta, image));
        }
    }
    Ok(InvolutionOrbits { fixed, swapped })
}

/// The splitting of the Weierstrass labels determined by an even class:
/// the canonical representative followed by its complement.
pub fn even_theta_to_partition(theta: &EvenTheta) -> (BTreeSet<usize>, BTreeSet<usize>) {
    (theta.rep().clone(), theta.complement())
}

/// Counts of same-parity pairs of genus-1 theta characteristics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairCounts {
    pub even_even: usize,
    pub odd_odd: usize,
    pub same_parity: usize,
}

/// Same-parity pairs on a two-component genus-2 degeneration; their total
/// must equal the number of even classes on a smooth curve.
pub fn genus1_pair_counts() -> Result<PairCounts, VerifyError> {
    let counts = PairCounts {
        even_even: GENUS1_THETA.even * GENUS1_THETA.even,
        odd_odd: GENUS1_THETA.odd * GENUS1_THETA.odd,
        same_parity: GENUS1_THETA.even * GENUS1_THETA.even + GENUS1_THETA.odd * GENUS1_THETA.odd,
    };
    if counts.same_parity != enumerate_even().len() {
        return Err(VerifyError::new(
            "genus1-parity-pairs",
            format!(
                "same-parity pair count {} does not match the {} even classes",
                counts.same_parity,
                enumerate_even().len()
            ),
        ));
    }
    Ok(counts)
}
