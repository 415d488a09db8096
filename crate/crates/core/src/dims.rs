//! Validated subsystem dimension pair.

use crate::error::{Error, Result};
use std::fmt;

/// Dimension pair `(m, n)` of the two subsystems, with the standing
/// convention `1 <= m <= n` (the entropy lives on the smaller side).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dims {
    m: u32,
    n: u32,
}

impl Dims {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m < 1 || m > n {
            return Err(Error::InvalidDims {
                m: i64::from(m),
                n: i64::from(n),
            });
        }
        Ok(Self { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Laguerre weight exponent `n - m`.
    pub fn alpha(&self) -> u32 {
        self.n - self.m
    }

    /// Total Hilbert-space dimension `m * n`.
    pub fn product(&self) -> u32 {
        self.m * self.n
    }
}

impl fmt::Display for Dims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, n={})", self.m, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_valid_pairs() {
        let d = Dims::new(2, 5).unwrap();
        assert_eq!((d.m(), d.n(), d.alpha(), d.product()), (2, 5, 3, 10));
        assert!(Dims::new(1, 1).is_ok());
        assert!(Dims::new(7, 7).is_ok());
    }

    #[test]
    fn rejects_invalid_pairs() {
        assert!(matches!(Dims::new(0, 3), Err(Error::InvalidDims { .. })));
        assert!(matches!(Dims::new(4, 3), Err(Error::InvalidDims { .. })));
    }
}
