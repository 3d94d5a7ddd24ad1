use crate::error::{Error, Result};

/// A weakly increasing map `[m] → [n]`, stored by its values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneMap {
    values: Vec<usize>,
    target: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonotoneKind {
    StrictlyIncreasing,
    /// Each step increases by at most one.
    SlowlyIncreasing,
    General,
}

impl MonotoneMap {
    pub fn new(values: Vec<usize>, target: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::RangeMismatch("a monotone map needs a nonempty source".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::RangeMismatch(format!("{values:?} is not weakly increasing")));
        }
        if values.iter().any(|&v| v > target) {
            return Err(Error::RangeMismatch(format!("{values:?} leaves [0..{target}]")));
        }
        Ok(MonotoneMap { values, target })
    }

    pub fn identity(n: usize) -> Self {
        MonotoneMap {
            values: (0..=n).collect(),
            target: n,
        }
    }

    /// The coface `δ_i: [n-1] → [n]` that skips `i`.
    pub fn coface(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n);
        MonotoneMap {
            values: (0..=n).filter(|&v| v != i).collect(),
            target: n,
        }
    }

    /// The codegeneracy `σ_i: [n+1] → [n]` that hits `i` twice.
    pub fn codegeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n);
        MonotoneMap {
            values: (0..=n + 1).map(|v| if v <= i { v } else { v - 1 }).collect(),
            target: n,
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `m` for a map out of `[m]`.
    pub fn source(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// `self ∘ other`, so that `x(self ∘ other) = (x(self))(other)`.
    pub fn compose(&self, other: &MonotoneMap) -> Result<MonotoneMap> {
        if other.target != self.source() {
            return Err(Error::RangeMismatch(format!(
                "cannot compose [..{}] → [..{}] after [..{}] → [..{}]",
                self.source(),
                self.target,
                other.source(),
                other.target
            )));
        }
        Ok(MonotoneMap {
            values: other.values.iter().map(|&j| self.values[j]).collect(),
            target: self.target,
        })
    }

    pub fn kind(&self) -> MonotoneKind {
        let steps = || self.values.windows(2).map(|w| w[1] - w[0]);
        if steps().all(|s| s == 1) {
            MonotoneKind::StrictlyIncreasing
        } else if steps().all(|s| s <= 1) {
            MonotoneKind::SlowlyIncreasing
        } else {
            MonotoneKind::General
        }
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0
            && *self.values.last().unwrap() == self.target
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds() {
        assert_eq!(MonotoneMap::identity(3).kind(), MonotoneKind::StrictlyIncreasing);
        assert_eq!(
            MonotoneMap::new(vec![0, 0, 1, 2], 2).unwrap().kind(),
            MonotoneKind::SlowlyIncreasing
        );
        assert_eq!(MonotoneMap::new(vec![0, 2], 2).unwrap().kind(), MonotoneKind::General);
        assert!(MonotoneMap::new(vec![1, 0], 2).is_err());
        assert!(MonotoneMap::new(vec![0, 3], 2).is_err());
    }

    #[test]
    fn composition_is_associative_on_cosimplicial_maps() {
        let a = MonotoneMap::coface(3, 1);
        let b = MonotoneMap::codegeneracy(2, 0);
        let c = MonotoneMap::coface(3, 3);
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        assert_eq!(left, right);
        assert!(a.compose(&a).is_err());
    }
}
