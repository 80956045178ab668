//! Permutations of labeled points, subgroup generation by closure, and
//! orbit/stabilizer machinery for the actions used throughout the crate:
//! subsets, subsets modulo complement, perfect pairings, and sign vectors
//! modulo global negation.
//!
//! Labels are 1-based, matching the usual conventions for marked points
//! and Weierstrass points. Groups are stored exhaustively (every group in
//! scope has at most 720 elements), which keeps every operation a simple
//! deterministic scan.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("images are not a bijection of 1..{0}")]
    NotABijection(usize),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid object for action: {0}")]
    InvalidObject(String),
    #[error("collection is not closed under the group action: orbit of {0} leaves it")]
    NotClosed(String),
}

/// A permutation of the labels `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // images[i] is the 0-based image of the 0-based point i.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// From the sequence of images of `1, 2, ..., n` (1-based).
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in images {
            if img < 1 || img > n || seen[img - 1] {
                return Err(PermError::NotABijection(n));
            }
            seen[img - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&i| i - 1).collect(),
        })
    }

    /// From disjoint cycles in 1-based labels; omitted labels are fixed.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let from = cycle[window];
                let to = cycle[(window + 1) % cycle.len()];
                if from < 1 || from > degree || moved[from - 1] {
                    return Err(PermError::NotABijection(degree));
                }
                moved[from - 1] = true;
                images[from - 1] = to;
            }
        }
        Self::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based label.
    pub fn image_of(&self, label: usize) -> usize {
        self.images[label - 1] + 1
    }

    /// Image of a 0-based index.
    pub fn image_of_index(&self, index: usize) -> usize {
        self.images[index]
    }

    /// Function composition: `(a.compose(b))(x) = a(b(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// True when the permutation squares to the identity (order 1 or 2).
    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    /// Cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation on 1-based labels, e.g. `(1 4)(2 5)(3 6)`; the
    /// identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut cur = start;
            let mut first = true;
            while !seen[cur] {
                seen[cur] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", cur + 1)?;
                first = false;
                cur = self.images[cur];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A permutation group given by its complete, lexicographically sorted
/// element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PermGroup {
    /// Close the generators under composition. The element list is sorted
    /// lexicographically on image sequences, so it is deterministic.
    pub fn generate(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut elements = BTreeSet::new();
        elements.insert(Permutation::identity(degree));
        let mut frontier = vec![Permutation::identity(degree)];
        while let Some(p) = frontier.pop() {
            for g in &generators {
                let q = g.compose(&p);
                if elements.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            elements: elements.into_iter().collect(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::generate(degree, Vec::new()).unwrap()
    }

    /// The full symmetric group on `1..=degree`.
    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::from_cycles(degree, &[&[1, 2]]).unwrap());
            let cycle: Vec<usize> = (1..=degree).collect();
            gens.push(Permutation::from_cycles(degree, &[&cycle]).unwrap());
        }
        PermGroup::generate(degree, gens).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

/// Stabilizer in the symmetric group on six labels of the unordered
/// partition `{{1,2,3},{4,5,6}}`: the two blockwise symmetric groups
/// extended by the swap `(1 4)(2 5)(3 6)`. It has order 72.
pub fn split_stabilizer() -> PermGroup {
    let gens = vec![
        Permutation::from_cycles(6, &[&[1, 2, 3]]).unwrap(),
        Permutation::from_cycles(6, &[&[1, 2]]).unwrap(),
        Permutation::from_cycles(6, &[&[4, 5, 6]]).unwrap(),
        Permutation::from_cycles(6, &[&[4, 5]]).unwrap(),
        Permutation::from_cycles(6, &[&[1, 4], &[2, 5], &[3, 6]]).unwrap(),
    ];
    PermGroup::generate(6, gens).unwrap()
}

/// An object a permutation group can act on. `act` must return the
/// canonical representative of the image, and `Ord` on canonical
/// representatives fixes all enumeration orders.
pub trait PermAct: Clone + Ord {
    fn act(&self, p: &Permutation) -> Self;
    fn validate(&self, degree: usize) -> Result<(), PermError>;
    /// Short text form used in error messages.
    fn describe(&self) -> String;
}

/// A subset of the labels `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subset(pub BTreeSet<usize>);

impl PermAct for Subset {
    fn act(&self, p: &Permutation) -> Self {
        Subset(self.0.iter().map(|&x| p.image_of(x)).collect())
    }

    fn validate(&self, degree: usize) -> Result<(), PermError> {
        if self.0.iter().any(|&x| x < 1 || x > degree) {
            return Err(PermError::InvalidObject(format!(
                "subset {:?} not within 1..={degree}",
                self.0
            )));
        }
        Ok(())
    }

    fn describe(&self) -> String {
        format!("{:?}", self.0)
    }
}

/// A subset of `1..=n` modulo complement; the stored representative is the
/// side containing the label 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubsetClass {
    degree: usize,
    rep: BTreeSet<usize>,
}

impl SubsetClass {
    pub fn new(degree: usize, subset: BTreeSet<usize>) -> Result<Self, PermError> {
        if subset.is_empty()
            || subset.len() >= degree
            || subset.iter().any(|&x| x < 1 || x > degree)
        {
            return Err(PermError::InvalidObject(format!(
                "subset {subset:?} is not a proper nonempty subset of 1..={degree}"
            )));
        }
        Ok(SubsetClass {
            degree,
            rep: canonical_side(degree, subset),
        })
    }

    pub fn rep(&self) -> &BTreeSet<usize> {
        &self.rep
    }

    pub fn complement(&self) -> BTreeSet<usize> {
        (1..=self.degree).filter(|x| !self.rep.contains(x)).collect()
    }
}

fn canonical_side(degree: usize, subset: BTreeSet<usize>) -> BTreeSet<usize> {
    if subset.contains(&1) {
        subset
    } else {
        (1..=degree).filter(|x| !subset.contains(x)).collect()
    }
}

impl PermAct for SubsetClass {
    fn act(&self, p: &Permutation) -> Self {
        let image = self.rep.iter().map(|&x| p.image_of(x)).collect();
        SubsetClass {
            degree: self.degree,
            rep: canonical_side(self.degree, image),
        }
    }

    fn validate(&self, degree: usize) -> Result<(), PermError> {
        if self.degree != degree {
            return Err(PermError::DegreeMismatch {
                expected: degree,
                found: self.degree,
            });
        }
        Ok(())
    }

    fn describe(&self) -> String {
        format!("{:?} mod complement", self.rep)
    }
}

/// An unordered perfect pairing of `1..=n` into two-element blocks,
/// stored as `(low, high)` pairs sorted by the low element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pairing(Vec<(usize, usize)>);

impl Pairing {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Result<Self, PermError> {
        let mut seen = BTreeSet::new();
        for p in pairs.iter_mut() {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
            if p.0 == p.1 || !seen.insert(p.0) || !seen.insert(p.1) {
                return Err(PermError::InvalidObject(format!(
                    "pairs {pairs:?} are not disjoint two-element blocks"
                )));
            }
        }
        pairs.sort_unstable();
        Ok(Pairing(pairs))
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.0
    }
}

impl PermAct for Pairing {
    fn act(&self, p: &Permutation) -> Self {
        let mut pairs: Vec<(usize, usize)> = self
            .0
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (p.image_of(a), p.image_of(b));
                (x.min(y), x.max(y))
            })
            .collect();
        pairs.sort_unstable();
        Pairing(pairs)
    }

    fn validate(&self, degree: usize) -> Result<(), PermError> {
        let covered: BTreeSet<usize> = self.0.iter().flat_map(|&(a, b)| [a, b]).collect();
        if covered.len() != degree || covered.iter().any(|&x| x < 1 || x > degree) {
            return Err(PermError::InvalidObject(format!(
                "pairing {:?} does not cover 1..={degree}",
                self.0
            )));
        }
        Ok(())
    }

    fn describe(&self) -> String {
        format!("{:?}", self.0)
    }
}

/// A length-n vector of signs up to global negation; the representative
/// has its first nonzero entry positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignClass(Vec<i8>);

impl SignClass {
    pub fn new(signs: Vec<i8>) -> Result<Self, PermError> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(PermError::InvalidObject(format!(
                "sign vector {signs:?} has entries other than ±1"
            )));
        }
        Ok(SignClass(canonical_signs(signs)))
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }
}

fn canonical_signs(mut signs: Vec<i8>) -> Vec<i8> {
    if let Some(&first) = signs.iter().find(|&&s| s != 0) {
        if first < 0 {
            for s in signs.iter_mut() {
                *s = -*s;
            }
        }
    }
    signs
}

impl PermAct for SignClass {
    fn act(&self, p: &Permutation) -> Self {
        let mut signs = vec![0i8; self.0.len()];
        for (i, &s) in self.0.iter().enumerate() {
            signs[p.image_of_index(i)] = s;
        }
        SignClass(canonical_signs(signs))
    }

    fn validate(&self, degree: usize) -> Result<(), PermError> {
        if self.0.len() != degree {
            return Err(PermError::DegreeMismatch {
                expected: degree,
                found: self.0.len(),
            });
        }
        Ok(())
    }

    fn describe(&self) -> String {
        format!("{:?} mod negation", self.0)
    }
}

/// The full orbit of `x`, sorted canonically.
pub fn orbit<T: PermAct>(group: &PermGroup, x: &T) -> Result<Vec<T>, PermError> {
    x.validate(group.degree())?;
    let set: BTreeSet<T> = group.elements().iter().map(|p| x.act(p)).collect();
    Ok(set.into_iter().collect())
}

/// The subgroup fixing `x`.
pub fn stabilizer<T: PermAct>(group: &PermGroup, x: &T) -> Result<PermGroup, PermError> {
    x.validate(group.degree())?;
    let canonical = x.act(&Permutation::identity(group.degree()));
    let fixing: Vec<Permutation> = group
        .elements()
        .iter()
        .filter(|p| x.act(p) == canonical)
        .cloned()
        .collect();
    PermGroup::generate(group.degree(), fixing)
}

/// Partition a closed collection into orbits, each sorted canonically;
/// orbits are listed by size, then lexicographically.
pub fn orbit_partition<T: PermAct>(group: &PermGroup, xs: &[T]) -> Result<Vec<Vec<T>>, PermError> {
    let pool: BTreeSet<T> = xs.iter().cloned().collect();
    let mut assigned: BTreeMap<T, usize> = BTreeMap::new();
    let mut orbits: Vec<Vec<T>> = Vec::new();
    for x in &pool {
        if assigned.contains_key(x) {
            continue;
        }
        let orb = orbit(group, x)?;
        for member in &orb {
            if !pool.contains(member) {
                return Err(PermError::NotClosed(x.describe()));
            }
            assigned.insert(member.clone(), orbits.len());
        }
        orbits.push(orb);
    }
    orbits.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subset(labels: &[usize]) -> Subset {
        Subset(labels.iter().copied().collect())
    }

    #[test]
    fn cycle_notation_round_trip() {
        let tau = Permutation::from_cycles(6, &[&[1, 4], &[2, 5], &[3, 6]]).unwrap();
        assert_eq!(tau.to_string(), "(1 4)(2 5)(3 6)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert!(tau.is_involution());
        assert_eq!(tau.cycle_type(), vec![2, 2, 2]);
    }

    #[test]
    fn generate_trivial_and_symmetric() {
        assert_eq!(PermGroup::trivial(6).order(), 1);
        assert_eq!(PermGroup::symmetric(6).order(), 720);
    }

    #[test]
    fn split_stabilizer_has_order_72() {
        let g = split_stabilizer();
        assert_eq!(g.order(), 72);
        // Closure idempotence: regenerating from the element list changes nothing.
        let again = PermGroup::generate(6, g.elements().to_vec()).unwrap();
        assert_eq!(again.elements(), g.elements());
    }

    #[test]
    fn subset_orbits_under_split_stabilizer() {
        let g = split_stabilizer();
        let within = orbit(&g, &subset(&[1, 2])).unwrap();
        assert_eq!(within.len(), 6);
        for s in &within {
            let inside_first = s.0.iter().all(|&x| x <= 3);
            let inside_second = s.0.iter().all(|&x| x >= 4);
            assert!(inside_first || inside_second);
        }
        let mixed = orbit(&g, &subset(&[1, 4])).unwrap();
        assert_eq!(mixed.len(), 9);
        for s in &mixed {
            assert_eq!(s.0.iter().filter(|&&x| x <= 3).count(), 1);
        }
    }

    #[test]
    fn pairing_orbit_of_fully_mixed_matching() {
        let g = split_stabilizer();
        let matching = Pairing::new(vec![(1, 4), (2, 5), (3, 6)]).unwrap();
        let orb = orbit(&g, &matching).unwrap();
        assert_eq!(orb.len(), 6);
        for m in &orb {
            for &(a, b) in m.pairs() {
                assert!(a <= 3 && b >= 4, "pair ({a},{b}) is not mixed");
            }
        }
    }

    #[test]
    fn theta_class_stabilizer_in_s6() {
        let s6 = PermGroup::symmetric(6);
        let class = SubsetClass::new(6, [1, 2, 3].into_iter().collect()).unwrap();
        let stab = stabilizer(&s6, &class).unwrap();
        assert_eq!(stab.order(), 72);
        assert_eq!(stab.elements(), split_stabilizer().elements());
    }

    #[test]
    fn trivial_group_stabilizes_nothing_extra() {
        let g = PermGroup::trivial(6);
        let stab = stabilizer(&g, &subset(&[2, 5])).unwrap();
        assert_eq!(stab.order(), 1);
    }

    #[test]
    fn sign_class_fixed_by_whole_group() {
        let g = split_stabilizer();
        let balanced = SignClass::new(vec![1, 1, 1, -1, -1, -1]).unwrap();
        let stab = stabilizer(&g, &balanced).unwrap();
        assert_eq!(stab.order(), 72);
    }

    #[test]
    fn orbit_stabilizer_counting() {
        let g = split_stabilizer();
        for labels in [vec![1, 2], vec![1, 4], vec![1, 2, 4], vec![2, 3, 5]] {
            let x = subset(&labels);
            let orb = orbit(&g, &x).unwrap();
            let stab = stabilizer(&g, &x).unwrap();
            assert_eq!(orb.len() * stab.order(), g.order());
        }
    }

    #[test]
    fn two_subset_orbit_partitions() {
        let g = split_stabilizer();
        let all_pairs: Vec<Subset> = (1..=6usize)
            .flat_map(|a| ((a + 1)..=6).map(move |b| subset(&[a, b])))
            .collect();
        assert_eq!(all_pairs.len(), 15);
        let orbits = orbit_partition(&g, &all_pairs).unwrap();
        let sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![6, 9]);
        let s6 = PermGroup::symmetric(6);
        let orbits = orbit_partition(&s6, &all_pairs).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].len(), 15);
    }

    #[test]
    fn triple_class_orbit_partition() {
        let g = split_stabilizer();
        let mut classes = BTreeSet::new();
        for a in 1..=6usize {
            for b in (a + 1)..=6 {
                for c in (b + 1)..=6 {
                    classes.insert(SubsetClass::new(6, [a, b, c].into_iter().collect()).unwrap());
                }
            }
        }
        let classes: Vec<SubsetClass> = classes.into_iter().collect();
        assert_eq!(classes.len(), 10);
        let orbits = orbit_partition(&g, &classes).unwrap();
        let sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 9]);
        assert_eq!(
            orbits[0][0].rep().iter().copied().collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
    }

    #[test]
    fn partition_rejects_unclosed_collections() {
        let g = split_stabilizer();
        let partial = vec![subset(&[1, 2]), subset(&[1, 3])];
        assert!(matches!(
            orbit_partition(&g, &partial),
            Err(PermError::NotClosed(_))
        ));
    }

    #[test]
    fn generator_degree_is_checked() {
        let err = PermGroup::generate(6, vec![Permutation::identity(5)]);
        assert_eq!(
            err.unwrap_err(),
            PermError::DegreeMismatch {
                expected: 6,
                found: 5
            }
        );
    }
}
