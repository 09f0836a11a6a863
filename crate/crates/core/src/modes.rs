//! Mode subsets and bipartitions.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A split of `n_modes` modes into `side_a` and its complement.
///
/// `side_a` is always a nonempty proper subset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    side_a: FixedBitSet,
}

impl Bipartition {
    pub fn new<I>(n_modes: usize, side_a: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = FixedBitSet::with_capacity(n_modes);
        for index in side_a {
            if index >= n_modes {
                return Err(Error::ModeOutOfRange { index, n_modes });
            }
            set.insert(index);
        }
        Self::from_set(set)
    }

    /// Builds a bipartition from a bit mask over the first `n_modes` modes.
    pub fn from_mask(n_modes: usize, mask: u64) -> Result<Self> {
        if n_modes > 64 {
            return Err(Error::InvalidParameter(format!(
                "bit masks cover at most 64 modes, got {n_modes}"
            )));
        }
        if n_modes < 64 && mask >> n_modes != 0 {
            let index = 63 - mask.leading_zeros() as usize;
            return Err(Error::ModeOutOfRange { index, n_modes });
        }
        let mut set = FixedBitSet::with_capacity(n_modes);
        let mut rest = mask;
        while rest != 0 {
            set.insert(rest.trailing_zeros() as usize);
            rest &= rest - 1;
        }
        Self::from_set(set)
    }

    pub fn from_set(side_a: FixedBitSet) -> Result<Self> {
        let n = side_a.len();
        let count = side_a.count_ones(..);
        if count == 0 || count == n {
            return Err(Error::InvalidBipartition(format!(
                "side holds {count} of {n} modes; it must be a nonempty proper subset"
            )));
        }
        Ok(Self { side_a })
    }

    pub fn n_modes(&self) -> usize {
        self.side_a.len()
    }

    pub fn contains(&self, mode: usize) -> bool {
        self.side_a.contains(mode)
    }

    pub fn side_a(&self) -> Vec<usize> {
        self.side_a.ones().collect()
    }

    pub fn side_b(&self) -> Vec<usize> {
        self.side_a.zeroes().collect()
    }

    pub fn side_a_len(&self) -> usize {
        self.side_a.count_ones(..)
    }

    pub fn as_set(&self) -> &FixedBitSet {
        &self.side_a
    }

    pub fn complement(&self) -> Self {
        let mut set = self.side_a.clone();
        set.toggle_range(..);
        Self { side_a: set }
    }

    /// The representative of `{self, complement}` whose side contains mode 0.
    pub fn canonical(&self) -> Self {
        if self.contains(0) {
            self.clone()
        } else {
            self.complement()
        }
    }

    /// The side with fewer modes (ties go to the side holding mode 0).
    pub fn smaller_side(&self) -> Vec<usize> {
        let a = self.side_a_len();
        let b = self.n_modes() - a;
        if a < b || (a == b && self.contains(0)) {
            self.side_a()
        } else {
            self.side_b()
        }
    }

    /// Bit mask of `side_a`, when it fits in 64 bits.
    pub fn mask(&self) -> Option<u64> {
        if self.n_modes() > 64 {
            return None;
        }
        Some(self.side_a.ones().fold(0u64, |m, i| m | (1 << i)))
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bipartition({self})")
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<usize>| {
            v.iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{{{}}}|{{{}}}", join(self.side_a()), join(self.side_b()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_trivial_sides() {
        assert!(Bipartition::new(3, []).is_err());
        assert!(Bipartition::new(3, [0, 1, 2]).is_err());
        assert!(matches!(
            Bipartition::new(3, [3]),
            Err(Error::ModeOutOfRange { index: 3, n_modes: 3 })
        ));
    }

    #[test]
    fn complement_and_canonical() {
        let cut = Bipartition::new(4, [1, 3]).unwrap();
        assert_eq!(cut.complement().side_a(), vec![0, 2]);
        assert_eq!(cut.canonical().side_a(), vec![0, 2]);
        assert_eq!(cut.complement().complement(), cut);
        assert_eq!(cut.to_string(), "{1,3}|{0,2}");
    }

    #[test]
    fn mask_round_trip() {
        let cut = Bipartition::from_mask(5, 0b10110).unwrap();
        assert_eq!(cut.side_a(), vec![1, 2, 4]);
        assert_eq!(cut.mask(), Some(0b10110));
        assert!(Bipartition::from_mask(3, 0b1000).is_err());
    }

    #[test]
    fn smaller_side_prefers_fewer_modes() {
        let cut = Bipartition::new(5, [0, 1, 2]).unwrap();
        assert_eq!(cut.smaller_side(), vec![3, 4]);
        let even = Bipartition::new(4, [2, 3]).unwrap();
        assert_eq!(even.smaller_side(), vec![0, 1]);
    }
}
