//! Matrices of polynomials and 2x2 minor extraction.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{same_ring, RingDescriptor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Arc<RingDescriptor>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    /// Row-major entries; all must share one ring.
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::BadMatrixShape("rows and cols must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::BadMatrixShape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let ring = entries[0].ring().clone();
        for e in &entries {
            if !same_ring(e.ring(), &ring) {
                return Err(Error::RingMismatch("matrix entries".into()));
            }
        }
        Ok(PolyMatrix {
            ring,
            rows,
            cols,
            entries,
        })
    }

    pub fn ring(&self) -> &Arc<RingDescriptor> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Zero-based access.
    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    /// All 2x2 minors of a 2-row matrix, one per column pair `(p, q)` with
    /// `p < q` in lexicographic order. Duplicates are retained so indices
    /// match the full count `C(cols, 2)`.
    pub fn two_by_two_minors(&self) -> Result<Vec<Polynomial>> {
        if self.rows != 2 {
            return Err(Error::WrongRowCount(self.rows));
        }
        let mut out = Vec::with_capacity(self.cols * (self.cols - 1) / 2);
        for p in 0..self.cols {
            for q in (p + 1)..self.cols {
                let m = &(self.entry(0, p) * self.entry(1, q))
                    - &(self.entry(1, p) * self.entry(0, q));
                out.push(m);
            }
        }
        Ok(out)
    }

    /// Column-pair labels aligned with [`Self::two_by_two_minors`], 1-based.
    pub fn minor_labels(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for p in 0..self.cols {
            for q in (p + 1)..self.cols {
                out.push((p + 1, q + 1));
            }
        }
        out
    }
}
