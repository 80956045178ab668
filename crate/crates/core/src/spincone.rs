//! Divisor-class arithmetic on the compactified moduli space of even
//! genus-2 spin curves in the boundary coordinates `(A0, B0, A1, B1)`:
//! the nef/ample cone, the relation between the four boundary classes,
//! canonical/bielliptic/log-canonical classes, the nef thresholds of the
//! two compactifications, and the classification of log-canonical models
//! by the boundary weight.
//!
//! The space is the quotient of the moduli of stable six-pointed rational
//! curves by the label symmetries preserving the splitting
//! `{1,2,3} | {4,5,6}`, so every class here lifts to a symmetrized
//! boundary class upstairs ([`SpinClass::lift`]) and every cone statement
//! can be checked against the brute-force F-curve scan in [`crate::mzeron`].
//!
//! Coordinates are free: distinct tuples may name the same class, because
//! the four boundary classes satisfy one relation (`3*A0 - 2*B0 - A1 +
//! 9*B1 = 0`, recomputed from scratch by [`picard_relation`]). Equality
//! as classes is [`SpinClass::class_eq`], and `{A0, B0, B1}` is an honest
//! basis ([`SpinClass::to_basis3`]).

use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{rat, Rat, RationalMatrix};
use crate::mzeron::{
    enumerate_fcurves, fample_violation, fnef_violation, intersect_class, orbit_sum,
    BoundaryClass, DivisorClass, FCurve,
};
use crate::perm::split_stabilizer;
use crate::theta::{enumerate_even, GENUS1_THETA};
use crate::VerifyError;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpinError {
    #[error("curve index {0} out of range 1..=5")]
    GammaIndex(usize),
}

/// A divisor class written in the coordinates `(A0, B0, A1, B1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinClass {
    pub a0: Rat,
    pub b0: Rat,
    pub a1: Rat,
    pub b1: Rat,
}

impl SpinClass {
    pub fn new(a0: Rat, b0: Rat, a1: Rat, b1: Rat) -> Self {
        SpinClass { a0, b0, a1, b1 }
    }

    pub fn from_ints(a0: i64, b0: i64, a1: i64, b1: i64) -> Self {
        SpinClass::new(
            rat(a0, 1),
            rat(b0, 1),
            rat(a1, 1),
            rat(b1, 1),
        )
    }

    pub fn zero() -> Self {
        SpinClass::from_ints(0, 0, 0, 0)
    }

    pub fn coords(&self) -> [&Rat; 4] {
        [&self.a0, &self.b0, &self.a1, &self.b1]
    }

    pub fn add(&self, other: &SpinClass) -> SpinClass {
        SpinClass::new(
            &self.a0 + &other.a0,
            &self.b0 + &other.b0,
            &self.a1 + &other.a1,
            &self.b1 + &other.b1,
        )
    }

    pub fn sub(&self, other: &SpinClass) -> SpinClass {
        SpinClass::new(
            &self.a0 - &other.a0,
            &self.b0 - &other.b0,
            &self.a1 - &other.a1,
            &self.b1 - &other.b1,
        )
    }

    pub fn scale(&self, factor: &Rat) -> SpinClass {
        SpinClass::new(
            &self.a0 * factor,
            &self.b0 * factor,
            &self.a1 * factor,
            &self.b1 * factor,
        )
    }

    /// The symmetrized boundary class upstairs: `a0` copies of the orbit
    /// sum of `D{1,2}`, `b0` of `D{1,4}`, `a1` of `D{1,2,4}`, and `b1`
    /// times the single class `D{1,2,3}`.
    pub fn lift(&self) -> DivisorClass {
        let bases = base_lifts();
        let mut out = DivisorClass::zero(6);
        for (base, coeff) in bases.iter().zip(self.coords()) {
            out = out.add(&base.scale(coeff));
        }
        out
    }

    /// Coordinates in the basis `{A0, B0, B1}`, eliminating `A1` via the
    /// relation `A1 = 3*A0 - 2*B0 + 9*B1`.
    pub fn to_basis3(&self) -> SpinClass3 {
        SpinClass3 {
            a0: &self.a0 + rat(3, 1) * &self.a1,
            b0: &self.b0 - rat(2, 1) * &self.a1,
            b1: &self.b1 + rat(9, 1) * &self.a1,
        }
    }

    /// Equality as divisor classes: the difference is a multiple of the
    /// relation `(3, -2, -1, 9)`.
    pub fn class_eq(&self, other: &SpinClass) -> bool {
        self.to_basis3() == other.to_basis3()
    }
}

impl fmt::Display for SpinClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}*A0 + {}*B0 + {}*A1 + {}*B1",
            self.a0, self.b0, self.a1, self.b1
        )
    }
}

/// A divisor class in the basis `{A0, B0, B1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinClass3 {
    pub a0: Rat,
    pub b0: Rat,
    pub b1: Rat,
}

impl SpinClass3 {
    pub fn new(a0: Rat, b0: Rat, b1: Rat) -> Self {
        SpinClass3 { a0, b0, b1 }
    }

    pub fn to_full(&self) -> SpinClass {
        SpinClass::new(
            self.a0.clone(),
            self.b0.clone(),
            Rat::zero(),
            self.b1.clone(),
        )
    }
}

impl fmt::Display for SpinClass3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*A0 + {}*B0 + {}*B1", self.a0, self.b0, self.b1)
    }
}

/// A divisor class on the invariant-theoretical compactification, written
/// in the normalized form `r * A0inv` after reducing along the relation
/// `3*A0inv = 2*B0inv`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvClass {
    coeff: Rat,
}

impl InvClass {
    /// Reduce `x*A0inv + y*B0inv` to `(x + 3y/2) * A0inv`.
    pub fn new(a0inv: Rat, b0inv: Rat) -> Self {
        InvClass {
            coeff: a0inv + rat(3, 2) * b0inv,
        }
    }

    pub fn coeff(&self) -> &Rat {
        &self.coeff
    }

    pub fn add(&self, other: &InvClass) -> InvClass {
        InvClass {
            coeff: &self.coeff + &other.coeff,
        }
    }

    pub fn scale(&self, factor: &Rat) -> InvClass {
        InvClass {
            coeff: &self.coeff * factor,
        }
    }
}

impl fmt::Display for InvClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*A0inv", self.coeff)
    }
}

/// Log-canonical-model regimes by boundary weight, ordered from the
/// degenerate end upward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EpsilonRegime {
    NotEffective,
    Point,
    InvariantModel,
    FullModel,
}

impl EpsilonRegime {
    pub fn as_str(&self) -> &'static str {
        match self {
            EpsilonRegime::FullModel => "full",
            EpsilonRegime::InvariantModel => "invariant",
            EpsilonRegime::Point => "point",
            EpsilonRegime::NotEffective => "not-effective",
        }
    }
}

impl fmt::Display for EpsilonRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn base_lifts() -> &'static [DivisorClass; 4] {
    static BASES: OnceLock<[DivisorClass; 4]> = OnceLock::new();
    BASES.get_or_init(|| {
        let g = split_stabilizer();
        let seed = |labels: &[usize]| {
            BoundaryClass::new(6, labels.iter().copied().collect())
                .expect("seed subsets are valid")
        };
        [
            orbit_sum(&g, &seed(&[1, 2])).expect("orbit of D{1,2}"),
            orbit_sum(&g, &seed(&[1, 4])).expect("orbit of D{1,4}"),
            orbit_sum(&g, &seed(&[1, 2, 4])).expect("orbit of D{1,2,4}"),
            orbit_sum(&g, &seed(&[1, 2, 3])).expect("orbit of D{1,2,3}"),
        ]
    })
}

/// The five standard F-curves used to cut out the nef cone; every F-curve
/// orbit under the label symmetries meets this list up to numerical
/// equivalence.
pub fn gamma(i: usize) -> Result<FCurve, SpinError> {
    let blocks: [&[usize]; 4] = match i {
        1 => [&[1], &[2], &[3], &[4, 5, 6]],
        2 => [&[1], &[2], &[4], &[3, 5, 6]],
        3 => [&[1], &[2], &[3, 4], &[5, 6]],
        4 => [&[1], &[4], &[2, 3], &[5, 6]],
        5 => [&[1], &[4], &[2, 5], &[3, 6]],
        _ => return Err(SpinError::GammaIndex(i)),
    };
    Ok(FCurve::from_blocks(6, blocks).expect("gamma blocks partition 1..=6"))
}

pub fn gammas() -> [FCurve; 5] {
    [1, 2, 3, 4, 5].map(|i| gamma(i).unwrap())
}

/// Pairing of the four boundary classes (rows `A0, B0, A1, B1`) with the
/// five curves `gamma(1)..gamma(5)` (columns). [`intersection_table`]
/// recomputes the table from the intersection rule and checks it against
/// these values.
pub const PAIRING_TABLE: [[i64; 5]; 4] = [
    [3, 1, 0, -2, 0],
    [0, 2, -1, 1, -1],
    [0, -1, 2, 1, 2],
    [-1, 0, 0, 1, 0],
];

/// Recompute the 4x5 pairing table via lifts and the intersection rule.
pub fn intersection_table() -> Result<[[i64; 5]; 4], VerifyError> {
    let bases = base_lifts();
    let curves = gammas();
    let mut table = [[0i64; 5]; 4];
    for (r, base) in bases.iter().enumerate() {
        for (c, curve) in curves.iter().enumerate() {
            let value = intersect_class(base, curve);
            if !value.is_integer() {
                return Err(VerifyError::new(
                    "pairing-table",
                    format!("non-integer pairing {value} at row {r}, column {c}"),
                ));
            }
            table[r][c] = i64::try_from(value.to_integer()).expect("small integer");
        }
    }
    if table != PAIRING_TABLE {
        return Err(VerifyError::new(
            "pairing-table",
            format!("recomputed table {table:?} differs from {PAIRING_TABLE:?}"),
        ));
    }
    Ok(table)
}

/// Pairings of a class with `gamma(1)..gamma(5)` in closed form.
pub fn gamma_pairings(s: &SpinClass) -> [Rat; 5] {
    let SpinClass { a0, b0, a1, b1 } = s;
    [
        rat(3, 1) * a0 - b1,
        a0 + rat(2, 1) * b0 - a1,
        rat(2, 1) * a1 - b0,
        -rat(2, 1) * a0 + b0 + a1 + b1,
        rat(2, 1) * a1 - b0,
    ]
}

/// A violated cone inequality together with the curve that witnesses it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeViolation {
    pub inequality: &'static str,
    pub curve: FCurve,
}

const INEQUALITY_NAMES: [&str; 4] = ["3a >= d", "a + 2b >= c", "2c >= b", "b + c + d >= 2a"];
const INEQUALITY_CURVES: [usize; 4] = [1, 2, 3, 4];

fn cone_violation(s: &SpinClass, strict: bool) -> Option<ConeViolation> {
    let pairings = gamma_pairings(s);
    for (k, &curve_index) in INEQUALITY_CURVES.iter().enumerate() {
        let value = &pairings[curve_index - 1];
        let bad = if strict {
            !value.is_positive()
        } else {
            value.is_negative()
        };
        if bad {
            return Some(ConeViolation {
                inequality: INEQUALITY_NAMES[k],
                curve: gamma(curve_index).unwrap(),
            });
        }
    }
    None
}

/// First violated nef inequality, or `None` when the class is nef.
pub fn nef_violation(s: &SpinClass) -> Option<ConeViolation> {
    cone_violation(s, false)
}

/// First violated ample inequality, or `None` when the class is ample.
pub fn ample_violation(s: &SpinClass) -> Option<ConeViolation> {
    cone_violation(s, true)
}

pub fn is_nef(s: &SpinClass) -> bool {
    nef_violation(s).is_none()
}

pub fn is_ample(s: &SpinClass) -> bool {
    ample_violation(s).is_none()
}

/// Nef test in the basis `{A0, B0, B1}`: `b <= 0` and
/// `max(c/3, -2b) <= a <= (b + c)/2`, strict for ample.
pub fn nef3_violation(t: &SpinClass3, strict: bool) -> Option<&'static str> {
    let SpinClass3 { a0: a, b0: b, b1: c } = t;
    let lower = (c / rat(3, 1)).max(-(rat(2, 1) * b));
    let upper = (b + c) / rat(2, 1);
    let checks: [(&'static str, bool); 3] = if strict {
        [
            ("b < 0", b.is_negative()),
            ("max(c/3, -2b) < a", lower < *a),
            ("a < (b + c)/2", *a < upper),
        ]
    } else {
        [
            ("b <= 0", !b.is_positive()),
            ("max(c/3, -2b) <= a", lower <= *a),
            ("a <= (b + c)/2", *a <= upper),
        ]
    };
    checks.into_iter().find(|(_, ok)| !ok).map(|(name, _)| name)
}

pub fn is_nef3(t: &SpinClass3) -> bool {
    nef3_violation(t, false).is_none()
}

pub fn is_ample3(t: &SpinClass3) -> bool {
    nef3_violation(t, true).is_none()
}

/// Recompute the one relation between the four boundary classes as the
/// kernel of the pairing with all 65 F-curves.
pub fn picard_relation() -> Result<SpinClass, VerifyError> {
    let bases = base_lifts();
    let curves = enumerate_fcurves(6).expect("n = 6 is supported");
    let rows: Vec<Vec<Rat>> = curves
        .iter()
        .map(|f| bases.iter().map(|b| intersect_class(b, f)).collect())
        .collect();
    let kernel = RationalMatrix::from_rows(rows).kernel_basis();
    if kernel.len() != 1 {
        return Err(VerifyError::new(
            "picard-relation",
            format!(
                "kernel of the class/F-curve pairing has dimension {}, expected 1",
                kernel.len()
            ),
        ));
    }
    let v = &kernel[0];
    Ok(SpinClass::new(
        v[0].clone(),
        v[1].clone(),
        v[2].clone(),
        v[3].clone(),
    ))
}

/// Pullback of `r0 * D0 + r1 * D1` along the forgetful map to the moduli
/// of stable genus-2 curves: `D0` pulls back to `A0 + 2*B0` (the
/// ramification along `B0` doubles that coefficient) and `D1` to
/// `A1 + B1`.
pub fn pullback_from_stable_moduli(r0: &Rat, r1: &Rat) -> SpinClass {
    SpinClass::new(
        r0.clone(),
        rat(2, 1) * r0,
        r1.clone(),
        r1.clone(),
    )
}

/// Canonical class of the moduli of stable genus-2 curves in the boundary
/// basis `(D0, D1)`.
pub const K_STABLE_MODULI: (i64, i64, i64, i64) = (-11, 5, -16, 5);

/// Class of the bielliptic locus closure in the moduli of stable genus-2
/// curves, in the boundary basis `(D0, D1)`.
pub const BIELLIPTIC_STABLE_MODULI: (i64, i64) = (3, 12);

/// Canonical class: pull back the downstairs canonical class and add the
/// simple ramification along `B0`.
pub fn canonical_class() -> SpinClass {
    let k_downstairs = pullback_from_stable_moduli(&rat(-11, 5), &rat(-16, 5));
    k_downstairs.add(&SpinClass::from_ints(0, 1, 0, 0))
}

/// Class of the locus of spin curves invariant under a bielliptic
/// involution: of the 10 even classes exactly 4 are invariant, so the
/// locus captures 4/10 of the pullback of the downstairs bielliptic class.
pub fn bielliptic_class() -> SpinClass {
    pullback_from_stable_moduli(&rat(3, 1), &rat(12, 1)).scale(&rat(2, 5))
}

/// Coefficients of the stack boundary class on `(A0, B0, A1, B1)`: the
/// two reducible-type divisors carry automorphisms that halve them.
pub fn stack_boundary_coeffs() -> SpinClass {
    SpinClass::new(Rat::one(), Rat::one(), rat(1, 2), rat(1, 2))
}

/// The log-canonical divisor at boundary weight `eps`, assembled from the
/// canonical class, the boundary weights, the reducible-type corrections,
/// and half the bielliptic class:
/// `K + eps*(A0 + B0) + (eps + 1)/2 * (A1 + B1) + E/2`.
pub fn log_canonical_divisor(eps: &Rat) -> SpinClass {
    let half = rat(1, 2);
    let weight_reducible = (eps + Rat::one()) * &half;
    canonical_class()
        .add(&SpinClass::new(eps.clone(), eps.clone(), Rat::zero(), Rat::zero()))
        .add(&SpinClass::new(
            Rat::zero(),
            Rat::zero(),
            weight_reducible.clone(),
            weight_reducible,
        ))
        .add(&bielliptic_class().scale(&half))
}

/// Closed form of [`log_canonical_divisor`]:
/// `(eps - 8/5, eps - 11/5, eps/2 - 3/10, eps/2 - 3/10)`.
pub fn log_canonical_closed_form(eps: &Rat) -> SpinClass {
    let half_eps = eps * rat(1, 2);
    SpinClass::new(
        eps - rat(8, 5),
        eps - rat(11, 5),
        &half_eps - rat(3, 10),
        half_eps - rat(3, 10),
    )
}

/// Least boundary weight at which the log-canonical divisor is nef,
/// obtained by solving each cone inequality as a linear condition in the
/// weight and intersecting the resulting rays.
pub fn nef_threshold_spin() -> Result<Rat, VerifyError> {
    let at_zero = gamma_pairings(&log_canonical_divisor(&Rat::zero()));
    let at_one = gamma_pairings(&log_canonical_divisor(&Rat::one()));
    let mut lower: Option<Rat> = None;
    for k in 0..5 {
        let intercept = at_zero[k].clone();
        let slope = &at_one[k] - &at_zero[k];
        if slope.is_zero() {
            if intercept.is_negative() {
                return Err(VerifyError::new(
                    "nef-threshold",
                    format!("inequality {k} is infeasible for every weight"),
                ));
            }
            continue;
        }
        if slope.is_negative() {
            return Err(VerifyError::new(
                "nef-threshold",
                format!("inequality {k} bounds the weight from above; the feasible set is not a closed ray"),
            ));
        }
        let bound = -intercept / slope;
        lower = Some(match lower {
            Some(cur) => cur.max(bound),
            None => bound,
        });
    }
    let threshold = lower.ok_or_else(|| {
        VerifyError::new("nef-threshold", "no inequality depends on the weight".to_string())
    })?;
    // Threshold duality: nef exactly at and above, ample strictly above.
    let eps_minus = &threshold - rat(1, 25);
    let eps_plus = &threshold + rat(1, 25);
    let checks = [
        is_nef(&log_canonical_divisor(&threshold)),
        !is_ample(&log_canonical_divisor(&threshold)),
        !is_nef(&log_canonical_divisor(&eps_minus)),
        is_ample(&log_canonical_divisor(&eps_plus)),
    ];
    if checks.iter().any(|ok| !ok) {
        return Err(VerifyError::new(
            "nef-threshold",
            format!("boundary behaviour around {threshold} is not a closed nef ray"),
        ));
    }
    Ok(threshold)
}

/// The log-canonical class of the invariant-theoretical compactification
/// at boundary weight `eps`, reduced to the normalized `A0inv` form.
///
/// Assembled from: the pullback `D0 -> A0inv + 2*B0inv`, the downstairs
/// canonical class `-11/5 * D0`, the simple ramification along `B0inv`,
/// half the bielliptic class `(2/5) * 3 * (A0inv + 2*B0inv)`, and the
/// boundary `eps * (A0inv + B0inv)`.
pub fn inv_log_canonical(eps: &Rat) -> InvClass {
    let pullback_d0 = InvClass::new(Rat::one(), rat(2, 1));
    let k_downstairs = pullback_d0.scale(&rat(-11, 5));
    let ramification = InvClass::new(Rat::zero(), Rat::one());
    let bielliptic = pullback_d0.scale(&(rat(2, 5) * rat(3, 1)));
    let boundary = InvClass::new(Rat::one(), Rat::one()).scale(eps);
    k_downstairs
        .add(&ramification)
        .add(&bielliptic.scale(&rat(1, 2)))
        .add(&boundary)
}

/// Weight at which the invariant-model log-canonical class vanishes.
pub fn inv_threshold() -> Result<Rat, VerifyError> {
    let at_zero = inv_log_canonical(&Rat::zero()).coeff().clone();
    let at_one = inv_log_canonical(&Rat::one()).coeff().clone();
    let slope = &at_one - &at_zero;
    if !slope.is_positive() {
        return Err(VerifyError::new(
            "inv-threshold",
            format!("invariant-model coefficient has non-positive slope {slope}"),
        ));
    }
    Ok(-at_zero / slope)
}

/// Log-canonical-model regime of a boundary weight.
pub fn classify(eps: &Rat) -> Result<EpsilonRegime, VerifyError> {
    let full = nef_threshold_spin()?;
    let point = inv_threshold()?;
    Ok(if *eps > full {
        EpsilonRegime::FullModel
    } else if *eps > point {
        EpsilonRegime::InvariantModel
    } else if *eps == point {
        EpsilonRegime::Point
    } else {
        EpsilonRegime::NotEffective
    })
}

/// Degrees of the forgetful map restricted to the four boundary divisors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiberDegrees {
    /// Over the irreducible-nodal locus: the `(A0, B0)` degrees.
    pub over_irreducible: (usize, usize),
    /// Over the reducible locus: the `(A1, B1)` degrees.
    pub over_reducible: (usize, usize),
}

/// Fiber degrees from genus-1 theta counts: `A0` carries the 4 theta
/// characteristics of the normalization, `B0` its 3 even ones doubled by
/// the simple ramification, `A1` the 3x3 even/even pairs, and `B1` the
/// single odd/odd pair. Both rows must sum to the generic degree 10.
pub fn fiber_degrees() -> Result<FiberDegrees, VerifyError> {
    let degrees = FiberDegrees {
        over_irreducible: (GENUS1_THETA.total, 2 * GENUS1_THETA.even),
        over_reducible: (
            GENUS1_THETA.even * GENUS1_THETA.even,
            GENUS1_THETA.odd * GENUS1_THETA.odd,
        ),
    };
    let generic = enumerate_even().len();
    for (name, (a, b)) in [
        ("irreducible", degrees.over_irreducible),
        ("reducible", degrees.over_reducible),
    ] {
        if a + b != generic {
            return Err(VerifyError::new(
                "forgetful-fiber-degrees",
                format!("degrees over the {name} locus sum to {} instead of {generic}", a + b),
            ));
        }
    }
    Ok(degrees)
}

/// A named constant with its mathematical origin, surfaced by the CLI so
/// reports can be audited input by input.
#[derive(Debug, Clone)]
pub struct ConstantInfo {
    pub name: &'static str,
    pub value: String,
    pub meaning: &'static str,
}

pub fn named_constants() -> Vec<ConstantInfo> {
    vec![
        ConstantInfo {
            name: "K_downstairs",
            value: "-11/5*D0 + -16/5*D1".to_string(),
            meaning: "canonical class of the moduli of stable genus-2 curves in the boundary basis (D0, D1)",
        },
        ConstantInfo {
            name: "bielliptic_downstairs",
            value: "3*D0 + 12*D1".to_string(),
            meaning: "class of the closure of the bielliptic locus downstairs",
        },
        ConstantInfo {
            name: "pullback_D0",
            value: pullback_from_stable_moduli(&Rat::one(), &Rat::zero()).to_string(),
            meaning: "pullback of D0 along the forgetful map; B0 appears doubled by the simple ramification",
        },
        ConstantInfo {
            name: "pullback_D1",
            value: pullback_from_stable_moduli(&Rat::zero(), &Rat::one()).to_string(),
            meaning: "pullback of D1 along the forgetful map",
        },
        ConstantInfo {
            name: "ramification_correction",
            value: "1*B0".to_string(),
            meaning: "the forgetful map is simply ramified along B0 and unramified elsewhere in codimension one",
        },
        ConstantInfo {
            name: "bielliptic_fraction",
            value: "2/5".to_string(),
            meaning: "4 of the 10 even theta characteristics are invariant under a bielliptic involution",
        },
        ConstantInfo {
            name: "stack_boundary",
            value: stack_boundary_coeffs().to_string(),
            meaning: "boundary class of the moduli stack; reducible-type divisors are halved by the extra automorphism",
        },
        ConstantInfo {
            name: "inv_relation",
            value: "3*A0inv = 2*B0inv".to_string(),
            meaning: "the one relation between the two boundary classes of the invariant-theoretical compactification",
        },
        ConstantInfo {
            name: "K_downstairs_inv",
            value: "-11/5*D0".to_string(),
            meaning: "canonical class downstairs from the invariant-theoretical compactification",
        },
        ConstantInfo {
            name: "bielliptic_inv",
            value: inv_log_canonical(&Rat::zero())
                .add(&InvClass::new(rat(44, 5), Rat::zero()))
                .add(&InvClass::new(rat(-3, 2), Rat::zero()))
                .scale(&rat(2, 1))
                .to_string(),
            meaning: "bielliptic locus class on the invariant-theoretical compactification",
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;
    use crate::mzeron::is_fnef;

    #[test]
    fn lifts_have_expected_supports() {
        let a0 = SpinClass::from_ints(1, 0, 0, 0).lift();
        assert_eq!(a0.coeffs().len(), 6);
        let b1 = SpinClass::from_ints(0, 0, 0, 1).lift();
        assert_eq!(b1.coeffs().len(), 1);
        assert!(SpinClass::zero().lift().is_zero());
        let all = SpinClass::from_ints(1, 1, 1, 1).lift();
        assert_eq!(all.coeffs().len(), 25);
    }

    #[test]
    fn table_matches_stored_values() {
        let table = intersection_table().unwrap();
        assert_eq!(table[0], [3, 1, 0, -2, 0]);
        assert_eq!(table[3], [-1, 0, 0, 1, 0]);
        assert_eq!(table[2], [0, -1, 2, 1, 2]);
    }

    #[test]
    fn gamma_index_is_validated() {
        assert_eq!(gamma(0).unwrap_err(), SpinError::GammaIndex(0));
        assert_eq!(gamma(6).unwrap_err(), SpinError::GammaIndex(6));
        assert_eq!(gamma(4).unwrap().to_string(), "F{1|2,3|4|5,6}");
    }

    #[test]
    fn ample_and_nef_examples() {
        assert!(is_ample(&SpinClass::from_ints(1, 1, 1, 1)));
        let zero = SpinClass::zero();
        assert!(is_nef(&zero));
        assert!(!is_ample(&zero));
        let f = log_canonical_divisor(&rat(57, 25));
        assert_eq!(
            f,
            SpinClass::new(rat(17, 25), rat(2, 25), rat(21, 25), rat(21, 25))
        );
        assert!(is_nef(&f));
        let violation = ample_violation(&f).expect("threshold class is not ample");
        assert_eq!(violation.inequality, "a + 2b >= c");
    }

    #[test]
    fn relation_is_one_dimensional() {
        let relation = picard_relation().unwrap();
        assert_eq!(relation, SpinClass::from_ints(3, -2, -1, 9));
        // Membership: the relation pairs to zero with every F-curve.
        let lift = relation.lift();
        for f in enumerate_fcurves(6).unwrap() {
            assert!(intersect_class(&lift, &f).is_zero());
        }
        assert!(gamma_pairings(&relation).iter().all(Rat::is_zero));
    }

    #[test]
    fn basis3_round_trip_and_class_equality() {
        let a1 = SpinClass::from_ints(0, 0, 1, 0);
        let in_basis = a1.to_basis3();
        assert_eq!(
            in_basis,
            SpinClass3::new(rat_int(3), rat_int(-2), rat_int(9))
        );
        assert!(in_basis.to_full().class_eq(&a1));
        let basis_vector = SpinClass::from_ints(1, 0, 0, 0);
        assert_eq!(
            basis_vector.to_basis3(),
            SpinClass3::new(rat_int(1), rat_int(0), rat_int(0))
        );
        let shifted = basis_vector.add(&SpinClass::from_ints(3, -2, -1, 9).scale(&rat(7, 3)));
        assert!(basis_vector.class_eq(&shifted));
        assert!(!basis_vector.class_eq(&SpinClass::from_ints(0, 1, 0, 0)));
    }

    #[test]
    fn pullback_examples() {
        assert_eq!(
            pullback_from_stable_moduli(&Rat::one(), &Rat::zero()),
            SpinClass::from_ints(1, 2, 0, 0)
        );
        assert_eq!(
            pullback_from_stable_moduli(&Rat::zero(), &Rat::one()),
            SpinClass::from_ints(0, 0, 1, 1)
        );
        assert_eq!(
            pullback_from_stable_moduli(&Rat::zero(), &Rat::zero()),
            SpinClass::zero()
        );
    }

    #[test]
    fn canonical_class_value() {
        let k = canonical_class();
        assert_eq!(
            k,
            SpinClass::new(rat(-11, 5), rat(-17, 5), rat(-16, 5), rat(-16, 5))
        );
        // The B0 coefficient exceeds the raw pullback by the ramification term.
        let raw = pullback_from_stable_moduli(&rat(-11, 5), &rat(-16, 5));
        assert_eq!(&k.b0 - &raw.b0, Rat::one());
        assert!(!is_nef(&k));
    }

    #[test]
    fn bielliptic_class_value() {
        let e = bielliptic_class();
        assert_eq!(
            e,
            SpinClass::new(rat(6, 5), rat(12, 5), rat(24, 5), rat(24, 5))
        );
        assert_eq!(
            e,
            pullback_from_stable_moduli(&rat_int(3), &rat_int(12)).scale(&rat(2, 5))
        );
        assert_eq!(e.scale(&rat_int(5)), SpinClass::from_ints(6, 12, 24, 24));
    }

    #[test]
    fn log_canonical_closed_form_matches_assembly() {
        for (n, d) in [(57, 25), (8, 5), (11, 5), (0, 1), (3, 1), (-7, 4), (49, 25)] {
            let eps = rat(n, d);
            assert_eq!(log_canonical_divisor(&eps), log_canonical_closed_form(&eps));
        }
        assert_eq!(
            log_canonical_divisor(&rat(8, 5)),
            SpinClass::new(rat(0, 1), rat(-3, 5), rat(1, 2), rat(1, 2))
        );
        assert_eq!(
            log_canonical_divisor(&rat(11, 5)),
            SpinClass::new(rat(3, 5), rat(0, 1), rat(4, 5), rat(4, 5))
        );
    }

    #[test]
    fn nef_threshold_value() {
        assert_eq!(nef_threshold_spin().unwrap(), rat(57, 25));
        // The second inequality alone already forces the threshold.
        let eps = rat(57, 25);
        let f = log_canonical_divisor(&eps);
        assert!(gamma_pairings(&f)[1].is_zero());
        // The first inequality alone only forces 9/5.
        let f95 = log_canonical_divisor(&rat(9, 5));
        assert!(gamma_pairings(&f95)[0].is_zero());
    }

    #[test]
    fn inv_log_canonical_values() {
        assert!(inv_log_canonical(&rat(49, 25)).coeff().is_zero());
        assert_eq!(inv_log_canonical(&rat(57, 25)).coeff(), &rat(4, 5));
        assert_eq!(inv_log_canonical(&rat_int(2)).coeff(), &rat(1, 10));
        assert_eq!(inv_threshold().unwrap(), rat(49, 25));
    }

    #[test]
    fn regime_classification() {
        assert_eq!(classify(&rat_int(3)).unwrap(), EpsilonRegime::FullModel);
        assert_eq!(classify(&rat_int(2)).unwrap(), EpsilonRegime::InvariantModel);
        assert_eq!(classify(&rat(57, 25)).unwrap(), EpsilonRegime::InvariantModel);
        assert_eq!(classify(&rat(49, 25)).unwrap(), EpsilonRegime::Point);
        assert_eq!(classify(&rat(48, 25)).unwrap(), EpsilonRegime::NotEffective);
        // Monotone in the weight.
        let mut previous = None;
        for n in 0..=80 {
            let regime = classify(&rat(n, 25)).unwrap();
            if let Some(p) = previous {
                assert!(regime >= p);
            }
            previous = Some(regime);
        }
    }

    #[test]
    fn fiber_degree_values() {
        let d = fiber_degrees().unwrap();
        assert_eq!(d.over_irreducible, (4, 6));
        assert_eq!(d.over_reducible, (9, 1));
    }

    #[test]
    fn nef_matches_brute_force_on_sign_patterns() {
        for a in -1..=1i64 {
            for b in -1..=1i64 {
                for c in -1..=1i64 {
                    for d in -1..=1i64 {
                        let s = SpinClass::from_ints(a, b, c, d);
                        assert_eq!(is_nef(&s), is_fnef(&s.lift()), "pattern ({a},{b},{c},{d})");
                        assert_eq!(is_nef(&s), is_nef3(&s.to_basis3()));
                        assert_eq!(is_ample(&s), is_ample3(&s.to_basis3()));
                    }
                }
            }
        }
    }

    #[test]
    fn certificate_for_negative_b1() {
        let s = SpinClass::from_ints(0, 0, 0, -1);
        let violation = nef_violation(&s).expect("not nef");
        assert_eq!(violation.inequality, "b + c + d >= 2a");
        let brute = fnef_violation(&s.lift()).expect("not F-nef");
        assert_eq!(brute.to_string(), "F{1|2,3|4|5,6}");
    }

    #[test]
    fn display_forms() {
        let k = canonical_class();
        assert_eq!(k.to_string(), "-11/5*A0 + -17/5*B0 + -16/5*A1 + -16/5*B1");
        assert_eq!(inv_log_canonical(&rat_int(2)).to_string(), "1/10*A0inv");
        assert_eq!(EpsilonRegime::Point.to_string(), "point");
    }
}
