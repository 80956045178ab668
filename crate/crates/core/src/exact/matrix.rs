use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rat;

/// Dense matrix of exact rationals.
///
/// Sized for the linear systems that actually occur here (a few dozen rows
/// and columns), so no sparsity or pivoting heuristics are attempted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RationalMatrix {
    /// Build from a rectangular grid of rows. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "rows must all have the same length"
        );
        RationalMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.entry_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.entries[r * self.cols + c]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.entry_mut(c, r) = self.entry(r, c).clone();
            }
        }
        t
    }

    /// Matrix-vector product. Panics on a length mismatch.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for c in 0..self.cols {
                    acc += self.entry(r, c) * &v[c];
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form together with the pivot columns.
    fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.entry(r, col).is_zero()) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..m.cols {
                    let a = m.entry(src, c).clone();
                    let b = m.entry(pivot_row, c).clone();
                    *m.entry_mut(src, c) = b;
                    *m.entry_mut(pivot_row, c) = a;
                }
            }
            let inv = m.entry(pivot_row, col).recip();
            for c in col..m.cols {
                let scaled = m.entry(pivot_row, c) * &inv;
                *m.entry_mut(pivot_row, c) = scaled;
            }
            for r in 0..m.rows {
                if r == pivot_row || m.entry(r, col).is_zero() {
                    continue;
                }
                let factor = m.entry(r, col).clone();
                for c in col..m.cols {
                    let delta = &factor * m.entry(pivot_row, c);
                    let updated = m.entry(r, c) - delta;
                    *m.entry_mut(r, c) = updated;
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        (m, pivot_cols)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{v : m v = 0}`.
    ///
    /// Basis vectors are scaled to integer entries with content 1 and a
    /// positive leading entry, listed by ascending free column, so the
    /// result is canonical. The zero matrix yields the standard basis.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (rref, pivot_cols) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -rref.entry(row, free).clone();
            }
            normalize_primitive(&mut v);
            basis.push(v);
        }
        basis
    }
}

/// Scale a rational vector to integer entries with gcd 1 and a positive
/// first nonzero entry. The zero vector is left unchanged.
fn normalize_primitive(v: &mut [Rat]) {
    let mut denom_lcm = BigInt::one();
    for x in v.iter() {
        denom_lcm = denom_lcm.lcm(x.denom());
    }
    let mut num_gcd = BigInt::zero();
    for x in v.iter() {
        let scaled = x * Rat::from(denom_lcm.clone());
        debug_assert!(scaled.denom().is_one());
        num_gcd = num_gcd.gcd(scaled.numer());
    }
    if num_gcd.is_zero() {
        return;
    }
    let scale = Rat::new(denom_lcm, num_gcd);
    for x in v.iter_mut() {
        *x *= &scale;
    }
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    fn int_rows(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let m = RationalMatrix::identity(3);
        assert!(m.kernel_basis().is_empty());
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn row_of_ones() {
        let m = int_rows(&[&[1, 1]]);
        assert_eq!(m.kernel_basis(), vec![vec![rat_int(1), rat_int(-1)]]);
    }

    #[test]
    fn zero_matrix_kernel_is_standard_basis() {
        let m = RationalMatrix::zeros(2, 3);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 3);
        for (i, v) in basis.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(*x, rat_int((i == j) as i64));
            }
        }
    }

    // Pairing of the four symmetrized boundary classes with the curves
    // Γ₁..Γ₅; the kernel on the class side is the one relation between
    // the four classes.
    #[test]
    fn pairing_table_relation() {
        let table = int_rows(&[
            &[3, 1, 0, -2, 0],
            &[0, 2, -1, 1, -1],
            &[0, -1, 2, 1, 2],
            &[-1, 0, 0, 1, 0],
        ]);
        let basis = table.transpose().kernel_basis();
        assert_eq!(
            basis,
            vec![vec![rat_int(3), rat_int(-2), rat_int(-1), rat_int(9)]]
        );
        // Membership: the relation pairs to zero with each curve column.
        assert!(table
            .transpose()
            .mul_vec(&basis[0])
            .iter()
            .all(|x| x.is_zero()));
    }

    #[test]
    fn kernel_vectors_are_primitive() {
        let m = RationalMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)]]);
        let basis = m.kernel_basis();
        assert_eq!(basis, vec![vec![rat_int(2), rat_int(-3)]]);
    }

    #[test]
    fn rank_plus_nullity_is_cols() {
        let m = int_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
    }
}
