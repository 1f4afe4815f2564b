//! Integer lattices and membership through a column-style Hermite normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::RatMatrix;
use super::rational::Rational;
use crate::Error;

/// A sublattice of ℤⁿ given by linearly independent integral basis rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerLattice {
    pub ambient_dim: usize,
    pub basis: RatMatrix,
}

impl IntegerLattice {
    pub fn new(basis: RatMatrix) -> Result<Self, Error> {
        if !basis.is_integral() {
            return Err(Error::Invalid("lattice basis must be integral".into()));
        }
        if basis.rank() != basis.rows() {
            return Err(Error::Invalid(
                "lattice basis rows are linearly dependent".into(),
            ));
        }
        Ok(IntegerLattice {
            ambient_dim: basis.cols(),
            basis,
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, Error> {
        Self::new(RatMatrix::from_i64_rows(rows))
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn hnf(&self) -> Hnf {
        Hnf::of_rows(&self.basis)
    }
}

/// Column-style Hermite normal form `H = B·U` of the matrix whose columns
/// are the lattice basis vectors. Column `k` of `H` has its leading nonzero
/// entry, positive, in row `pivot_rows[k]` and zeros above it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hnf {
    pub columns: Vec<Vec<BigInt>>,
    pub pivot_rows: Vec<usize>,
}

impl Hnf {
    pub fn of_rows(basis: &RatMatrix) -> Hnf {
        let n = basis.cols();
        let mut cols: Vec<Vec<BigInt>> = (0..basis.rows())
            .map(|k| basis.row(k).iter().map(|q| q.to_integer()).collect())
            .collect();
        let mut pivot_rows = Vec::new();
        let mut c = 0;
        for row in 0..n {
            if c == cols.len() {
                break;
            }
            loop {
                // smallest nonzero |entry| in this row among columns >= c, lowest index on ties
                let pick = (c..cols.len())
                    .filter(|&k| !cols[k][row].is_zero())
                    .min_by(|&a, &b| cols[a][row].abs().cmp(&cols[b][row].abs()).then(a.cmp(&b)));
                let Some(p) = pick else { break };
                cols.swap(c, p);
                let mut done = true;
                for k in c + 1..cols.len() {
                    if cols[k][row].is_zero() {
                        continue;
                    }
                    let q = cols[k][row].div_floor(&cols[c][row]);
                    let pivot = cols[c].clone();
                    for (x, y) in cols[k].iter_mut().zip(&pivot) {
                        *x -= &q * y;
                    }
                    if !cols[k][row].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if c < cols.len() && !cols[c][row].is_zero() {
                if cols[c][row].is_negative() {
                    for x in cols[c].iter_mut() {
                        *x = -x.clone();
                    }
                }
                for k in 0..c {
                    let q = cols[k][row].div_floor(&cols[c][row]);
                    if !q.is_zero() {
                        let pivot = cols[c].clone();
                        for (x, y) in cols[k].iter_mut().zip(&pivot) {
                            *x -= &q * y;
                        }
                    }
                }
                pivot_rows.push(row);
                c += 1;
            }
        }
        cols.truncate(c);
        Hnf {
            columns: cols,
            pivot_rows,
        }
    }

    /// Integer coefficients `y` with `H y = v`, if they exist.
    pub fn solve(&self, v: &[Rational]) -> Option<Vec<BigInt>> {
        if v.iter().any(|q| !q.is_integer()) {
            return None;
        }
        let mut r: Vec<BigInt> = v.iter().map(|q| q.to_integer()).collect();
        let mut y = Vec::with_capacity(self.columns.len());
        let mut next = 0;
        for row in 0..r.len() {
            if next < self.pivot_rows.len() && self.pivot_rows[next] == row {
                let col = &self.columns[next];
                let (q, rem) = r[row].div_rem(&col[row]);
                if !rem.is_zero() {
                    return None;
                }
                for (x, c) in r.iter_mut().zip(col) {
                    *x -= &q * c;
                }
                y.push(q);
                next += 1;
            } else if !r[row].is_zero() {
                return None;
            }
        }
        Some(y)
    }
}

/// True iff `v` is an integer combination of the basis rows of `lattice`.
pub fn lattice_member(lattice: &IntegerLattice, v: &[Rational]) -> bool {
    assert_eq!(v.len(), lattice.ambient_dim, "dimension mismatch");
    lattice.hnf().solve(v).is_some()
}
