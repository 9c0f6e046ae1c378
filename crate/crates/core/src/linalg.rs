//! Exact dense linear algebra by Gaussian elimination over any field
//! scalar: rank, row reduction, linear solve, and an incremental row space
//! used for minimal polynomials and span-dimension checks.

#![allow(clippy::needless_range_loop, clippy::ptr_arg)]

use crate::scalar::Scalar;

/// Reduce rows in place to row echelon form, returning the rank.
pub fn row_reduce<S: Scalar>(rows: &mut Vec<Vec<S>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = S::one() / rows[rank][col].clone();
        for c in col..cols {
            rows[rank][c] = rows[rank][c].clone() * inv.clone();
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..cols {
                    let t = rows[r][c].clone() - factor.clone() * rows[rank][c].clone();
                    rows[r][c] = t;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m)
}

/// Incrementally maintained row space with reduced echelon basis; answers
/// membership queries and expresses new vectors over the current basis.
pub struct RowSpace<S> {
    cols: usize,
    /// (pivot column, reduced row, coordinates over inserted vectors)
    basis: Vec<(usize, Vec<S>, Vec<S>)>,
    inserted: usize,
}

impl<S: Scalar> RowSpace<S> {
    pub fn new(cols: usize) -> Self {
        RowSpace {
            cols,
            basis: Vec::new(),
            inserted: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduce `v` against the basis; returns the residual and the
    /// combination of previously inserted vectors that was subtracted.
    fn reduce(&self, mut v: Vec<S>) -> (Vec<S>, Vec<S>) {
        let mut combo = vec![S::zero(); self.inserted];
        for (pivot, row, coords) in &self.basis {
            if !v[*pivot].is_zero() {
                let f = v[*pivot].clone();
                for c in 0..self.cols {
                    let t = v[c].clone() - f.clone() * row[c].clone();
                    v[c] = t;
                }
                for (i, coord) in coords.iter().enumerate() {
                    let t = combo[i].clone() + f.clone() * coord.clone();
                    combo[i] = t;
                }
            }
        }
        (v, combo)
    }

    /// Insert a vector. Returns `None` if it enlarged the space, otherwise
    /// the coordinates expressing it over the previously inserted vectors.
    pub fn insert(&mut self, v: Vec<S>) -> Option<Vec<S>> {
        assert_eq!(v.len(), self.cols);
        let (res, combo) = self.reduce(v);
        match res.iter().position(|c| !c.is_zero()) {
            None => {
                self.inserted += 1;
                Some(combo)
            }
            Some(pivot) => {
                let inv = S::one() / res[pivot].clone();
                let row: Vec<S> = res.iter().map(|c| c.clone() * inv.clone()).collect();
                let mut coords = combo
                    .iter()
                    .map(|c| S::zero() - c.clone())
                    .collect::<Vec<_>>();
                coords.push(S::one());
                // normalize the dependency coordinates by the pivot inverse
                let coords: Vec<S> = coords.into_iter().map(|c| c * inv.clone()).collect();
                for (_, _, old) in self.basis.iter_mut() {
                    old.push(S::zero());
                }
                self.inserted += 1;
                let mut padded = coords;
                padded.resize(self.inserted, S::zero());
                self.basis.push((pivot, row, padded));
                None
            }
        }
    }
}
