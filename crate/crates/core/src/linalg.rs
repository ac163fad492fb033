//! Sparse exact linear algebra over the rationals.
//!
//! Everything downstream needs just two primitives: the rank of a set of
//! rows, and the residual of a vector against an echelon basis (zero iff
//! the vector lies in the span). Rows stream in as graded components grow,
//! so the echelon basis is maintained incrementally.

use std::collections::BTreeMap;

use crate::rational::Rational;

/// A sparse vector: column index -> nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVector {
    entries: BTreeMap<usize, Rational>,
}

impl SparseVector {
    pub fn new() -> Self {
        SparseVector::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut v = SparseVector::new();
        for (col, c) in entries {
            v.add_to(col, &c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Smallest column index with a nonzero entry.
    pub fn pivot(&self) -> Option<usize> {
        self.entries.keys().next().copied()
    }

    pub fn get(&self, col: usize) -> Option<&Rational> {
        self.entries.get(&col)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(&c, r)| (c, r))
    }

    pub fn add_to(&mut self, col: usize, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&col) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.entries.remove(&col);
                }
            }
            None => {
                self.entries.insert(col, c.clone());
            }
        }
    }

    /// self += c * other
    pub fn add_scaled(&mut self, c: &Rational, other: &SparseVector) {
        if c.is_zero() {
            return;
        }
        for (col, v) in other.iter() {
            self.add_to(col, &(c * v));
        }
    }

    pub fn scale(&mut self, c: &Rational) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for v in self.entries.values_mut() {
            *v *= c;
        }
    }
}

/// An ordered list of sparse rows; `ncols` bounds every stored column index.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub rows: Vec<SparseVector>,
    pub ncols: usize,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix { rows: Vec::new(), ncols }
    }

    pub fn push_row(&mut self, row: SparseVector) {
        debug_assert!(row.pivot().map_or(true, |p| p < self.ncols));
        self.rows.push(row);
    }

    /// Gaussian elimination. Returns the rank and an echelon basis of the
    /// row space with strictly increasing pivots and leading coefficient 1.
    ///
    /// Pivot selection is the smallest column index, then the sparsest row,
    /// then first occurrence, so identical inputs give identical bases.
    pub fn row_reduce(&self) -> (usize, Vec<SparseVector>) {
        let mut pending: Vec<SparseVector> =
            self.rows.iter().filter(|r| !r.is_zero()).cloned().collect();
        let mut basis: Vec<SparseVector> = Vec::new();

        while !pending.is_empty() {
            let mut best: Option<(usize, usize, usize)> = None; // (pivot, nnz, index)
            for (i, row) in pending.iter().enumerate() {
                let key = (row.pivot().unwrap(), row.nnz(), i);
                if best.map_or(true, |b| key < b) {
                    best = Some(key);
                }
            }
            let (pcol, _, idx) = best.unwrap();
            let mut pivot_row = pending.swap_remove(idx);
            let lead = pivot_row.get(pcol).unwrap().clone();
            pivot_row.scale(&lead.recip().expect("nonzero leading coefficient"));
            let mut still_pending = Vec::with_capacity(pending.len());
            for mut row in pending {
                if let Some(c) = row.get(pcol).cloned() {
                    row.add_scaled(&-&c, &pivot_row);
                }
                if !row.is_zero() {
                    still_pending.push(row);
                }
            }
            pending = still_pending;
            basis.push(pivot_row);
        }

        basis.sort_by_key(|r| r.pivot().unwrap());
        (basis.len(), basis)
    }
}

/// Row-space basis in echelon form, grown one row at a time.
///
/// Rows are kept sorted by pivot with leading coefficient 1; pivots are
/// strictly increasing.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: Vec<SparseVector>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        EchelonBasis::default()
    }

    pub fn from_rows(rows: impl IntoIterator<Item = SparseVector>) -> Self {
        let mut basis = EchelonBasis::new();
        for row in rows {
            basis.insert(row);
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }

    /// Residual of `v` after eliminating every pivot position of the basis.
    /// The residual is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &SparseVector) -> SparseVector {
        let mut residual = v.clone();
        for row in &self.rows {
            let p = row.pivot().unwrap();
            if let Some(c) = residual.get(p).cloned() {
                residual.add_scaled(&-&c, row);
            }
        }
        residual
    }

    /// Reduce `v` against the basis and adjoin the residual if nonzero.
    /// Returns true when the rank grew.
    pub fn insert(&mut self, v: SparseVector) -> bool {
        let mut residual = self.reduce(&v);
        if residual.is_zero() {
            return false;
        }
        let p = residual.pivot().unwrap();
        let lead = residual.get(p).unwrap().clone();
        residual.scale(&lead.recip().expect("nonzero leading coefficient"));
        let pos = self
            .rows
            .partition_point(|row| row.pivot().unwrap() < p);
        self.rows.insert(pos, residual);
        true
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        self.reduce(v).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(entries: &[(usize, i64)]) -> SparseVector {
        SparseVector::from_entries(
            entries.iter().map(|&(c, n)| (c, Rational::from_int(n))),
        )
    }

    #[test]
    fn identity_has_full_rank() {
        let mut m = SparseMatrix::new(2);
        m.push_row(vec_of(&[(0, 1)]));
        m.push_row(vec_of(&[(1, 1)]));
        let (rank, basis) = m.row_reduce();
        assert_eq!(rank, 2);
        assert_eq!(basis.len(), 2);
    }

    #[test]
    fn dependent_rows_collapse() {
        let mut m = SparseMatrix::new(2);
        m.push_row(vec_of(&[(0, 1), (1, 2)]));
        m.push_row(vec_of(&[(0, 2), (1, 4)]));
        assert_eq!(m.row_reduce().0, 1);

        // (1/2, 1/3) and (1/4, 1/6)
        let mut m = SparseMatrix::new(2);
        m.push_row(SparseVector::from_entries([
            (0, Rational::new(1, 2)),
            (1, Rational::new(1, 3)),
        ]));
        m.push_row(SparseVector::from_entries([
            (0, Rational::new(1, 4)),
            (1, Rational::new(1, 6)),
        ]));
        assert_eq!(m.row_reduce().0, 1);
    }

    #[test]
    fn reduce_against_basis() {
        let mut basis = EchelonBasis::new();
        basis.insert(vec_of(&[(0, 1), (2, 3)]));
        basis.insert(vec_of(&[(1, 2), (2, 1)]));
        assert_eq!(basis.rank(), 2);

        // a basis row reduces to zero
        assert!(basis.reduce(&vec_of(&[(0, 1), (2, 3)])).is_zero());
        // zero reduces to zero
        assert!(basis.reduce(&SparseVector::new()).is_zero());
        // support disjoint from the pivots passes through unchanged
        let v = vec_of(&[(3, 5)]);
        assert_eq!(basis.reduce(&v), v);
    }

    #[test]
    fn insert_reports_rank_growth() {
        let mut basis = EchelonBasis::new();
        assert!(basis.insert(vec_of(&[(0, 1), (1, 1)])));
        assert!(!basis.insert(vec_of(&[(0, 2), (1, 2)])));
        assert!(basis.insert(vec_of(&[(1, 1)])));
        assert_eq!(basis.rank(), 2);
        // pivots strictly increasing
        let pivots: Vec<_> = basis.rows().iter().map(|r| r.pivot().unwrap()).collect();
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn rank_is_order_independent() {
        // a fixed 4x5 example, checked against every row order
        let rows = [
            vec_of(&[(0, 1), (1, 2), (3, 1)]),
            vec_of(&[(1, 1), (2, 1)]),
            vec_of(&[(0, 1), (1, 1), (2, -1), (3, 1)]),
            vec_of(&[(0, 2), (1, 4), (3, 2)]),
        ];
        let perms = [
            [0, 1, 2, 3],
            [3, 2, 1, 0],
            [1, 3, 0, 2],
            [2, 0, 3, 1],
        ];
        for perm in perms {
            let mut m = SparseMatrix::new(5);
            for i in perm {
                m.push_row(rows[i].clone());
            }
            assert_eq!(m.row_reduce().0, 2);
            let basis = EchelonBasis::from_rows(perm.iter().map(|&i| rows[i].clone()));
            assert_eq!(basis.rank(), 2);
        }
    }
}
