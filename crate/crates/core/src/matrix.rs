//! Boolean matrices over the AND/OR semiring.
//!
//! This is an independent route to the primitive exponent: the least `k`
//! with `Aᵏ` all-ones. It shares no code with the walk search.

use std::fmt;

use crate::length::{ExtLen, Finite, Infinite};
use crate::{Error, Graph, Result};

/// Square bit matrix, each row packed into `u64` words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    dim: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BoolMatrix {
    pub fn zeros(dim: usize) -> Self {
        let words_per_row = dim.div_ceil(64);
        Self {
            dim,
            words_per_row,
            data: vec![0; dim * words_per_row],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, true);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.row(i)[j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let word = &mut self.data[i * self.words_per_row + j / 64];
        let mask = 1u64 << (j % 64);
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    /// Every entry set.
    pub fn is_all_ones(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.get(i, j)))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BoolMatrix({})", self.dim)?;
        for i in 0..self.dim {
            let row: String = (0..self.dim).map(|j| if self.get(i, j) { '1' } else { '0' }).collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

/// Bit `(u, v)` set iff `v` is a neighbor of `u`; diagonal bits are loops.
pub fn adjacency(g: &Graph) -> BoolMatrix {
    let mut m = BoolMatrix::zeros(g.order());
    for (u, v) in g.edges() {
        m.set(u, v, true);
        m.set(v, u, true);
    }
    m
}

/// Boolean product: row `i` of the result is the OR of the rows of `b`
/// selected by row `i` of `a`.
pub fn bool_mul(a: &BoolMatrix, b: &BoolMatrix) -> Result<BoolMatrix> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch(a.dim, b.dim));
    }
    let mut out = BoolMatrix::zeros(a.dim);
    let w = a.words_per_row;
    for i in 0..a.dim {
        for t in 0..a.dim {
            if a.get(i, t) {
                let (src, dst) = (t * w, i * w);
                for k in 0..w {
                    out.data[dst + k] |= b.data[src + k];
                }
            }
        }
    }
    Ok(out)
}

/// `aᵏ` by iterated multiplication, `k >= 1`.
pub fn bool_pow(a: &BoolMatrix, k: usize) -> Result<BoolMatrix> {
    if k == 0 {
        return Err(Error::InvalidParameter("matrix power needs k >= 1".into()));
    }
    let mut acc = a.clone();
    for _ in 1..k {
        acc = bool_mul(&acc, a)?;
    }
    Ok(acc)
}

/// `2n`: enough for any primitive graph since its exponent is at most twice
/// its diameter, which is at most `n - 1`.
pub fn default_exponent_cap(order: usize) -> usize {
    2 * order
}

/// Least `k <= cap` with `Aᵏ` all-ones, or infinite.
pub fn oracle_exponent(g: &Graph, cap: usize) -> ExtLen {
    let a = adjacency(g);
    let mut power = a.clone();
    for k in 1..=cap {
        if power.is_all_ones() {
            return Finite(k);
        }
        power = bool_mul(&power, &a).expect("same dimension");
    }
    Infinite
}

/// Kronecker product: entry `(i·n_b + k, j·n_b + l)` is `a[i][j] ∧ b[k][l]`.
pub fn kron_matrix(a: &BoolMatrix, b: &BoolMatrix) -> BoolMatrix {
    let nb = b.dim;
    let mut out = BoolMatrix::zeros(a.dim * nb);
    for i in 0..a.dim {
        for j in 0..a.dim {
            if !a.get(i, j) {
                continue;
            }
            for k in 0..nb {
                for l in 0..nb {
                    if b.get(k, l) {
                        out.set(i * nb + k, j * nb + l, true);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle};
    use crate::kronecker::kronecker_product;

    #[test]
    fn adjacency_examples() {
        let k1_plus = adjacency(&complete(1, true).unwrap());
        assert!(k1_plus.is_all_ones());
        let k2 = adjacency(&complete(2, false).unwrap());
        assert!(k2.get(0, 1) && k2.get(1, 0) && !k2.get(0, 0) && !k2.get(1, 1));
        let c3 = adjacency(&cycle(3).unwrap());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(c3.get(i, j), i != j);
            }
        }
    }

    #[test]
    fn identity_is_neutral() {
        let a = adjacency(&cycle(5).unwrap());
        assert_eq!(bool_mul(&BoolMatrix::identity(5), &a).unwrap(), a);
        assert_eq!(bool_mul(&a, &BoolMatrix::identity(5)).unwrap(), a);
        assert!(bool_mul(&a, &BoolMatrix::identity(4)).is_err());
        assert!(bool_pow(&a, 0).is_err());
    }

    #[test]
    fn even_cycle_square_keeps_parity() {
        // In C₄ two vertices at odd distance have no walk of length 2.
        let sq = bool_pow(&adjacency(&cycle(4).unwrap()), 2).unwrap();
        assert!(!sq.get(0, 1) && !sq.get(0, 3) && sq.get(0, 2) && sq.get(0, 0));
        assert!(sq.is_symmetric());
    }

    #[test]
    fn triangle_square_is_all_ones() {
        assert!(bool_pow(&adjacency(&cycle(3).unwrap()), 2).unwrap().is_all_ones());
    }

    #[test]
    fn oracle_exponents() {
        assert_eq!(oracle_exponent(&complete(4, true).unwrap(), 8), Finite(1));
        assert_eq!(oracle_exponent(&cycle(5).unwrap(), 10), Finite(4));
        assert_eq!(oracle_exponent(&cycle(4).unwrap(), 8), Infinite);
        assert_eq!(oracle_exponent(&cycle(5).unwrap(), 3), Infinite);
    }

    #[test]
    fn kron_block_structure() {
        let a = adjacency(&cycle(3).unwrap());
        let block = kron_matrix(&BoolMatrix::identity(2), &a);
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(block.get(i, j), i / 3 == j / 3 && a.get(i % 3, j % 3));
            }
        }
        let k2 = complete(2, false).unwrap();
        let kk = kron_matrix(&adjacency(&k2), &adjacency(&k2));
        assert_eq!(kk, adjacency(&kronecker_product(&k2, &k2)));
    }
}
