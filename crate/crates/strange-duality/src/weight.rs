use std::fmt;

use crate::error::{Error, Result};

/// A weight system `(a1, a2, a3; h)` with the convention `a0 = 1`,
/// so the degree is always `h = a1 + a2 + a3 + 1`.
///
/// Weight components are positive and kept in machine integers: every
/// operation that consumes a weight enumerates `O(a1^2 a2^2 a3^2)` matrix
/// candidates, so weights anywhere near the `u64` limit are unusable long
/// before the representation overflows. All derived matrix and polynomial
/// arithmetic is arbitrary-precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    a: [u64; 3],
}

impl Weight {
    pub fn new(a: [u64; 3]) -> Result<Self> {
        if a.iter().any(|&x| x == 0) {
            return Err(Error::InvalidWeight(format!(
                "weights must be positive, got ({}, {}, {})",
                a[0], a[1], a[2]
            )));
        }
        let sum = a[0]
            .checked_add(a[1])
            .and_then(|s| s.checked_add(a[2]))
            .and_then(|s| s.checked_add(1));
        if sum.is_none() {
            return Err(Error::InvalidWeight(format!(
                "degree a1+a2+a3+1 overflows for ({}, {}, {})",
                a[0], a[1], a[2]
            )));
        }
        Ok(Weight { a })
    }

    /// The weight triple `(a1, a2, a3)`.
    pub fn a(&self) -> [u64; 3] {
        self.a
    }

    /// The degree `h = a1 + a2 + a3 + 1`.
    pub fn h(&self) -> u64 {
        self.a[0] + self.a[1] + self.a[2] + 1
    }

    /// The triple sorted ascending, for multiset comparisons
    /// (no variable order is fixed across dual pairs).
    pub fn sorted(&self) -> [u64; 3] {
        let mut s = self.a;
        s.sort_unstable();
        s
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}; {})",
            self.a[0],
            self.a[1],
            self.a[2],
            self.h()
        )
    }
}
