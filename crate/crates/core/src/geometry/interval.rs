use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// A bounded interval of the real line with independent endpoint flags.
///
/// Either `lo < hi`, or `lo == hi` with both endpoints closed (a single
/// point). Empty intervals are not representable; operations that may
/// produce one return `Option`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Interval {
    #[serde(with = "crate::scalar::serde_text")]
    lo: Scalar,
    #[serde(with = "crate::scalar::serde_text")]
    hi: Scalar,
    lo_closed: bool,
    hi_closed: bool,
}

impl Interval {
    pub fn new(lo: Scalar, hi: Scalar, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        Self::try_new(lo.clone(), hi.clone(), lo_closed, hi_closed).ok_or_else(|| {
            Error::InvalidInterval(format!(
                "{}{lo}, {hi}{}",
                if lo_closed { '[' } else { '(' },
                if hi_closed { ']' } else { ')' }
            ))
        })
    }

    /// Like [`Interval::new`] but returns `None` for an empty interval.
    pub fn try_new(lo: Scalar, hi: Scalar, lo_closed: bool, hi_closed: bool) -> Option<Self> {
        let valid = lo < hi || (lo == hi && lo_closed && hi_closed);
        valid.then_some(Self {
            lo,
            hi,
            lo_closed,
            hi_closed,
        })
    }

    pub fn closed(lo: Scalar, hi: Scalar) -> Result<Self> {
        Self::new(lo, hi, true, true)
    }

    pub fn open(lo: Scalar, hi: Scalar) -> Result<Self> {
        Self::new(lo, hi, false, false)
    }

    pub fn point(at: Scalar) -> Self {
        Self {
            lo: at.clone(),
            hi: at,
            lo_closed: true,
            hi_closed: true,
        }
    }

    pub fn unit() -> Self {
        Self {
            lo: scalar::zero(),
            hi: scalar::one(),
            lo_closed: true,
            hi_closed: true,
        }
    }

    pub fn lo(&self) -> &Scalar {
        &self.lo
    }

    pub fn hi(&self) -> &Scalar {
        &self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_open(&self) -> bool {
        !self.lo_closed && !self.hi_closed
    }

    pub fn length(&self) -> Scalar {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        let above = if self.lo_closed { *x >= self.lo } else { *x > self.lo };
        let below = if self.hi_closed { *x <= self.hi } else { *x < self.hi };
        above && below
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            std::cmp::Ordering::Greater => (self.lo.clone(), self.lo_closed),
            std::cmp::Ordering::Less => (other.lo.clone(), other.lo_closed),
            std::cmp::Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            std::cmp::Ordering::Less => (self.hi.clone(), self.hi_closed),
            std::cmp::Ordering::Greater => (other.hi.clone(), other.hi_closed),
            std::cmp::Ordering::Equal => (self.hi.clone(), self.hi_closed && other.hi_closed),
        };
        Interval::try_new(lo, hi, lo_closed, hi_closed)
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.intersect(other).is_some()
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        self.intersect(other).as_ref() == Some(self)
    }

    /// Minkowski sum. An endpoint of the sum is attained iff both summand
    /// endpoints are.
    pub fn minkowski_sum(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
            lo_closed: self.lo_closed && other.lo_closed,
            hi_closed: self.hi_closed && other.hi_closed,
        }
    }

    pub fn translate(&self, by: &Scalar) -> Interval {
        Interval {
            lo: &self.lo + by,
            hi: &self.hi + by,
            ..self.clone()
        }
    }

    pub fn midpoint(&self) -> Scalar {
        scalar::midpoint(&self.lo, &self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_degenerate() {
            return write!(f, "{{{}}}", self.lo);
        }
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn iv(lo: (i64, i64), hi: (i64, i64), lc: bool, hc: bool) -> Interval {
        Interval::new(rat(lo.0, lo.1), rat(hi.0, hi.1), lc, hc).unwrap()
    }

    #[test]
    fn rejects_empty_and_half_open_points() {
        assert!(Interval::new(rat(1, 2), rat(1, 3), true, true).is_err());
        assert!(Interval::new(rat(1, 2), rat(1, 2), true, false).is_err());
        assert!(Interval::new(rat(1, 2), rat(1, 2), true, true).is_ok());
    }

    #[test]
    fn membership_honors_flags() {
        let half_open = iv((0, 1), (1, 2), true, false);
        assert!(half_open.contains(&rat(0, 1)));
        assert!(!half_open.contains(&rat(1, 2)));
        assert!(half_open.contains(&rat(49, 100)));
    }

    #[test]
    fn intersection_of_touching_intervals() {
        let a = iv((0, 1), (1, 2), true, false);
        let b = iv((1, 2), (1, 1), true, true);
        assert!(a.intersect(&b).is_none());
        let c = iv((0, 1), (1, 2), true, true);
        assert_eq!(c.intersect(&b), Some(Interval::point(rat(1, 2))));
    }

    #[test]
    fn sum_of_open_intervals() {
        let a = Interval::open(rat(-1, 4), rat(1, 4)).unwrap();
        let b = Interval::open(rat(-1, 3), rat(1, 3)).unwrap();
        assert_eq!(a.minkowski_sum(&b), Interval::open(rat(-7, 12), rat(7, 12)).unwrap());
        let closed = Interval::closed(rat(0, 1), rat(1, 2)).unwrap();
        assert_eq!(closed.minkowski_sum(&a), Interval::open(rat(-1, 4), rat(3, 4)).unwrap());
    }
}
