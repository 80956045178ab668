use num_traits::{One, Zero};
use thiserror::Error;

use super::Rat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("polynomial must have constant term 1")]
    ConstantTermNotOne,
}

/// Formal power series in one variable, truncated at a fixed order `D`:
/// exactly the coefficients of `q^0 .. q^D` are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>,
}

impl TruncatedSeries {
    /// Series with the given coefficients for `q^0 .. q^D`.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least q^0");
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    /// Embed a polynomial (low-to-high coefficients), truncating or
    /// zero-padding to the given order.
    pub fn from_polynomial(poly: &[Rat], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in poly.iter().enumerate().take(order + 1) {
            s.coeffs[k] = c.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch(self.order(), other.order()));
        }
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch(self.order(), other.order()));
        }
        let d = self.order();
        let mut coeffs = vec![Rat::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(d + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Multiplicative inverse of a polynomial with constant term 1, as a
    /// series up to `order`: the unique `s` with `p * s = 1 + O(q^{order+1})`.
    pub fn inverse_of_poly(poly: &[Rat], order: usize) -> Result<Self, SeriesError> {
        if poly.first().map_or(true, |c| !c.is_one()) {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[0] = Rat::one();
        for k in 1..=order {
            let mut acc = Rat::zero();
            for (j, pj) in poly.iter().enumerate().skip(1).take(k) {
                if !pj.is_zero() {
                    acc += pj * &coeffs[k - j];
                }
            }
            coeffs[k] = -acc;
        }
        Ok(TruncatedSeries { coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    fn poly(cs: &[i64]) -> Vec<Rat> {
        cs.iter().map(|&c| rat_int(c)).collect()
    }

    #[test]
    fn difference_of_squares() {
        let a = TruncatedSeries::from_polynomial(&poly(&[1, 1]), 2);
        let b = TruncatedSeries::from_polynomial(&poly(&[1, -1]), 2);
        assert_eq!(
            a.mul(&b).unwrap(),
            TruncatedSeries::from_polynomial(&poly(&[1, 0, -1]), 2)
        );
    }

    #[test]
    fn geometric_series_squared() {
        let g = TruncatedSeries::inverse_of_poly(&poly(&[1, -1]), 3).unwrap();
        assert_eq!(g, TruncatedSeries::from_polynomial(&poly(&[1, 1, 1, 1]), 3));
        let sq = g.mul(&g).unwrap();
        assert_eq!(sq, TruncatedSeries::from_polynomial(&poly(&[1, 2, 3, 4]), 3));
    }

    #[test]
    fn inverse_of_squared_factor() {
        let s = TruncatedSeries::inverse_of_poly(&poly(&[1, -2, 1]), 2).unwrap();
        assert_eq!(s, TruncatedSeries::from_polynomial(&poly(&[1, 2, 3]), 2));
    }

    #[test]
    fn inverse_of_cube_factor() {
        let s = TruncatedSeries::inverse_of_poly(&poly(&[1, 0, 0, -1]), 6).unwrap();
        assert_eq!(
            s,
            TruncatedSeries::from_polynomial(&poly(&[1, 0, 0, 1, 0, 0, 1]), 6)
        );
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        let a = TruncatedSeries::one(2);
        let b = TruncatedSeries::one(3);
        assert_eq!(a.mul(&b), Err(SeriesError::OrderMismatch(2, 3)));
    }

    #[test]
    fn constant_term_must_be_one() {
        assert_eq!(
            TruncatedSeries::inverse_of_poly(&poly(&[2, 1]), 3),
            Err(SeriesError::ConstantTermNotOne)
        );
    }

    // Oracle for the trivial-group case: the number of degree-2 monomials
    // in six variables, counted by direct enumeration.
    #[test]
    fn six_variable_molien_factor_counts_monomials() {
        let factor = TruncatedSeries::inverse_of_poly(&poly(&[1, -1]), 4).unwrap();
        let mut prod = TruncatedSeries::one(4);
        for _ in 0..6 {
            prod = prod.mul(&factor).unwrap();
        }
        let mut count = 0u64;
        for e0 in 0..=2u32 {
            for e1 in 0..=2 {
                for e2 in 0..=2 {
                    for e3 in 0..=2 {
                        for e4 in 0..=2 {
                            for e5 in 0..=2 {
                                if e0 + e1 + e2 + e3 + e4 + e5 == 2 {
                                    count += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(count, 21);
        assert_eq!(prod.coeff(2), rat_int(count as i64));
    }
}
