//! Arithmetic progressions `AP(a, d) = {a + k·d : k ≥ 0}` over the
//! nonnegative integers, and the test for whether two of them share a
//! positive element.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// The progression `{start + k·step : k = 0, 1, 2, …}`.
///
/// A zero step denotes the singleton `{start}`, so [`ApPair::SENTINEL`]
/// `(0, 0)` is `{0}` and never meets the positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ApPair {
    pub start: u64,
    pub step: u64,
}

impl ApPair {
    pub const SENTINEL: ApPair = ApPair { start: 0, step: 0 };

    pub const fn new(start: u64, step: u64) -> Self {
        ApPair { start, step }
    }

    pub fn is_sentinel(self) -> bool {
        self == Self::SENTINEL
    }

    /// Membership of `m` in the progression.
    pub fn contains(self, m: u64) -> bool {
        if m < self.start {
            return false;
        }
        match self.step {
            0 => m == self.start,
            d => (m - self.start).is_multiple_of(d),
        }
    }

    /// Whether some `m ≥ 1` lies in both progressions.
    ///
    /// Decided arithmetically. With two positive steps a common element
    /// exists iff the starts agree modulo `gcd(step, step')`, and then there
    /// are infinitely many, so one of them is positive.
    pub fn intersects_positively(self, other: ApPair) -> bool {
        match (self.step, other.step) {
            (0, 0) => self.start == other.start && self.start >= 1,
            (0, _) => self.start >= 1 && other.contains(self.start),
            (_, 0) => other.start >= 1 && self.contains(other.start),
            (d, e) => self.start % d.gcd(&e) == other.start % d.gcd(&e),
        }
    }

    /// Enumeration oracle for [`ApPair::intersects_positively`].
    ///
    /// Lists both progressions up to `max(start) + 2·lcm(step∨1, step'∨1)`
    /// and intersects the two sets. If the progressions meet at all, their
    /// least common element lies below `max(start) + lcm`, so the bound is
    /// sufficient.
    pub fn intersects_by_enumeration(self, other: ApPair) -> bool {
        let period = self.step.max(1).lcm(&other.step.max(1));
        let bound = self.start.max(other.start) + 2 * period;
        let left = self.elements_up_to(bound);
        let right = other.elements_up_to(bound);
        left.intersection(&right).any(|&m| m >= 1)
    }

    /// All members `≤ bound`.
    pub fn elements_up_to(self, bound: u64) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        let mut m = self.start;
        while m <= bound {
            out.insert(m);
            if self.step == 0 {
                break;
            }
            m += self.step;
        }
        out
    }
}

impl fmt::Display for ApPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.start, self.step)
    }
}

impl From<(u64, u64)> for ApPair {
    fn from((start, step): (u64, u64)) -> Self {
        ApPair { start, step }
    }
}
