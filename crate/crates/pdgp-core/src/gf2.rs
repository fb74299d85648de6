//! GF(2) ranks of symmetric zero-diagonal bit matrices and of their
//! principal submatrices, without materializing the submatrices.

use crate::graph::{bits, SimpleGraph};
use crate::{Error, Result, MAX_VERTICES};

/// Symmetric zero-diagonal matrix over GF(2), one `u64` per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    n: usize,
    rows: Vec<u64>,
}

/// Rank over GF(2) of the principal submatrix indexed by `subset`: rows
/// outside the subset are skipped and every row is masked to the subset's
/// columns. Elimination keeps one pivot row per column, indexed by the
/// row's lowest set bit; a pivot row always has its pivot bit set, so 0 is
/// a free "no pivot" sentinel.
pub fn subset_rank(rows: &[u64], subset: u64) -> usize {
    let mut piv = [0u64; 64];
    let mut rank = 0;
    for i in bits(subset) {
        let mut v = rows[i] & subset;
        loop {
            if v == 0 {
                break;
            }
            let c = v.trailing_zeros() as usize;
            let p = piv[c];
            if p == 0 {
                piv[c] = v;
                rank += 1;
                break;
            }
            v ^= p;
        }
    }
    rank
}

impl Gf2Matrix {
    /// Validates symmetry, zero diagonal and row width.
    pub fn new(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::SizeCapExceeded { size: n, cap: MAX_VERTICES });
        }
        let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        for (i, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::BadParameter(format!("row {i} has bits beyond column {n}")));
            }
            if row >> i & 1 == 1 {
                return Err(Error::BadParameter(format!("nonzero diagonal entry at {i}")));
            }
            for j in bits(row) {
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::BadParameter(format!("asymmetric at ({i}, {j})")));
                }
            }
        }
        Ok(Self { n, rows })
    }

    /// The adjacency matrix of a graph; the graph's invariants already
    /// guarantee the matrix invariants.
    pub fn from_graph(g: &SimpleGraph) -> Self {
        Self { n: g.n(), rows: g.adjacency_rows().to_vec() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    fn full_mask(&self) -> u64 {
        if self.n == 0 {
            0
        } else {
            u64::MAX >> (64 - self.n)
        }
    }

    pub fn rank(&self) -> usize {
        subset_rank(&self.rows, self.full_mask())
    }

    pub fn rank_of_subset(&self, subset: u64) -> usize {
        subset_rank(&self.rows, subset & self.full_mask())
    }

    /// Materialized principal submatrix, index order preserved.
    pub fn principal_submatrix(&self, subset: u64) -> Gf2Matrix {
        let subset = subset & self.full_mask();
        let verts: Vec<usize> = bits(subset).collect();
        let rows = verts
            .iter()
            .map(|&i| {
                let mut row = 0u64;
                for (j, &v) in verts.iter().enumerate() {
                    row |= (self.rows[i] >> v & 1) << j;
                }
                row
            })
            .collect();
        Gf2Matrix { n: verts.len(), rows }
    }
}
