//! Block data for the quantized coordinate algebra of SL(2) at a root of
//! unity of odd order ℓ.
//!
//! A nontrivial block with base weight `r0 < ℓ - 1` has vertices `0, 1, 2, ...`
//! where vertex `n` carries the weight `τⁿ(r0)`. Weights with `r0 = ℓ - 1`
//! form singleton blocks.

mod block;
mod label;

pub use block::{
    basic_block, block_quiver, dimension_vector, indecomposables_with_dimension_vector, realize,
    string_block, string_word, window_for,
};
pub use label::{parse_label, BlockForm, ComoduleLabel, Family};

use serde::Serialize;

use crate::error::{Error, Result};

/// The order ℓ of the root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RootParams {
    ell: u64,
}

impl RootParams {
    pub fn new(ell: u64) -> Result<Self> {
        if ell < 3 || ell.is_multiple_of(2) {
            return Err(Error::domain(format!(
                "ℓ must be odd and at least 3, got {ell}"
            )));
        }
        Ok(RootParams { ell })
    }

    pub fn ell(self) -> u64 {
        self.ell
    }

    /// `r = r1·ℓ + r0`, returned as `(r1, r0)`.
    pub fn decompose(self, r: u64) -> (u64, u64) {
        (r / self.ell, r % self.ell)
    }

    pub fn is_steinberg(self, r: u64) -> bool {
        r % self.ell == self.ell - 1
    }

    pub fn tau(self, r: u64) -> u64 {
        let (r1, r0) = self.decompose(r);
        if r0 == self.ell - 1 {
            r
        } else {
            (r1 + 1) * self.ell + self.ell - r0 - 2
        }
    }

    pub fn sigma(self, r: u64) -> Result<u64> {
        let (r1, r0) = self.decompose(r);
        if r1 == 0 || r0 == self.ell - 1 {
            return Err(Error::domain(format!(
                "σ({r}) is undefined for ℓ = {}",
                self.ell
            )));
        }
        Ok((r1 - 1) * self.ell + self.ell - r0 - 2)
    }

    /// Weight at vertex `n` of the block with base `r0`.
    pub fn vertex_weight(self, base: u64, n: usize) -> u64 {
        let n = n as u64;
        if n.is_multiple_of(2) {
            n * self.ell + base
        } else {
            n * self.ell + self.ell - base - 2
        }
    }

    /// `(base, vertex)` of a weight, or `None` for a singleton block.
    pub fn weight_vertex(self, r: u64) -> Option<(u64, usize)> {
        let (r1, r0) = self.decompose(r);
        if r0 == self.ell - 1 {
            return None;
        }
        let base = if r1 % 2 == 0 { r0 } else { self.ell - r0 - 2 };
        Some((base, r1 as usize))
    }

    pub fn check_base(self, base: u64) -> Result<()> {
        if base + 1 >= self.ell {
            return Err(Error::domain(format!(
                "block base must lie in [0, {}], got {base}",
                self.ell - 2
            )));
        }
        Ok(())
    }

    /// `dim L(r) = (r0 + 1)(r1 + 1)`.
    pub fn simple_dim(self, r: u64) -> u64 {
        let (r1, r0) = self.decompose(r);
        (r0 + 1) * (r1 + 1)
    }

    /// The weights of `L(r)` with multiplicity, in descending order.
    pub fn weights(self, r: u64) -> Vec<i64> {
        let (r1, r0) = self.decompose(r);
        let (r1, r0, ell) = (r1 as i64, r0 as i64, self.ell as i64);
        let mut out: Vec<i64> = (0..=r0)
            .flat_map(|i| (0..=r1).map(move |j| (r0 - 2 * i) + ell * (r1 - 2 * j)))
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflections() {
        let p = RootParams::new(5).unwrap();
        assert_eq!(p.decompose(13), (2, 3));
        assert_eq!(p.decompose(7), (1, 2));
        assert_eq!(p.tau(1), 7);
        assert_eq!(p.tau(7), 11);
        assert_eq!(p.tau(4), 4);
        assert_eq!(p.sigma(7).unwrap(), 1);
        assert!(p.sigma(3).is_err());
        assert!(p.sigma(9).is_err());
    }

    #[test]
    fn vertices() {
        let p = RootParams::new(5).unwrap();
        assert_eq!(
            (0..3).map(|n| p.vertex_weight(1, n)).collect::<Vec<_>>(),
            vec![1, 7, 11]
        );
        assert_eq!(p.weight_vertex(11), Some((1, 2)));
        assert_eq!(p.weight_vertex(4), None);
    }

    #[test]
    fn simple_weights() {
        let p = RootParams::new(5).unwrap();
        assert_eq!(p.weights(1), vec![1, -1]);
        assert_eq!(p.weights(5), vec![5, -5]);
        assert_eq!(p.weights(7), vec![7, 5, 3, -3, -5, -7]);
        assert_eq!(p.simple_dim(7), 6);
    }

    #[test]
    fn even_ell_rejected() {
        assert!(RootParams::new(4).is_err());
        assert!(RootParams::new(1).is_err());
    }
}
