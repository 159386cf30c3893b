//! Half-open unit intervals and canonical sets of available units.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A contiguous run of frequency-slot units, `[lo, hi)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[u32; 2]", into = "[u32; 2]")]
pub struct UnitInterval {
    lo: u32,
    hi: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("empty or inverted interval [{0}, {1})")]
    Empty(u32, u32),
    #[error("interval [{lo}, {hi}) overlaps units that are already free")]
    AlreadyFree { lo: u32, hi: u32 },
    #[error("interval [{lo}, {hi}) is not fully available")]
    NotAvailable { lo: u32, hi: u32 },
}

impl UnitInterval {
    pub fn new(lo: u32, hi: u32) -> Result<Self, IntervalError> {
        if lo < hi {
            Ok(Self { lo, hi })
        } else {
            Err(IntervalError::Empty(lo, hi))
        }
    }

    /// Panicking constructor for literals in tests and examples.
    pub fn of(lo: u32, hi: u32) -> Self {
        Self::new(lo, hi).expect("interval must be non-empty")
    }

    pub fn lo(&self) -> u32 {
        self.lo
    }

    pub fn hi(&self) -> u32 {
        self.hi
    }

    pub fn len(&self) -> u32 {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `self ⊇ other`
    pub fn contains(&self, other: &UnitInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_unit(&self, unit: u32) -> bool {
        self.lo <= unit && unit < self.hi
    }

    pub fn intersect(&self, other: &UnitInterval) -> Option<UnitInterval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo < hi).then_some(UnitInterval { lo, hi })
    }

    /// The lowest `units`-wide sub-interval (first fit).
    pub fn first_fit(&self, units: u32) -> Option<UnitInterval> {
        (units > 0 && units <= self.len()).then(|| UnitInterval {
            lo: self.lo,
            hi: self.lo + units,
        })
    }

    pub fn units(&self) -> std::ops::Range<u32> {
        self.lo..self.hi
    }
}

impl TryFrom<[u32; 2]> for UnitInterval {
    type Error = IntervalError;

    fn try_from(value: [u32; 2]) -> Result<Self, Self::Error> {
        UnitInterval::new(value[0], value[1])
    }
}

impl From<UnitInterval> for [u32; 2] {
    fn from(value: UnitInterval) -> Self {
        [value.lo, value.hi]
    }
}

impl fmt::Display for UnitInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.lo, self.hi)
    }
}

/// Units available on a link, kept as sorted, pairwise disjoint and
/// non-touching intervals. Two sets holding the same units compare equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SlotSet {
    runs: Vec<UnitInterval>,
}

impl SlotSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn full(units: u32) -> Self {
        match UnitInterval::new(0, units) {
            Ok(iv) => Self { runs: vec![iv] },
            Err(_) => Self::empty(),
        }
    }

    /// Builds the canonical form of an arbitrary collection of intervals,
    /// merging overlapping and adjacent ones.
    pub fn from_intervals(intervals: impl IntoIterator<Item = UnitInterval>) -> Self {
        let mut all: Vec<UnitInterval> = intervals.into_iter().collect();
        all.sort_unstable();
        let mut runs: Vec<UnitInterval> = Vec::with_capacity(all.len());
        for iv in all {
            match runs.last_mut() {
                Some(last) if iv.lo <= last.hi => last.hi = last.hi.max(iv.hi),
                _ => runs.push(iv),
            }
        }
        Self { runs }
    }

    pub fn from_units(units: impl IntoIterator<Item = u32>) -> Self {
        Self::from_intervals(units.into_iter().map(|u| UnitInterval { lo: u, hi: u + 1 }))
    }

    pub fn intervals(&self) -> &[UnitInterval] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn unit_count(&self) -> u32 {
        self.runs.iter().map(UnitInterval::len).sum()
    }

    pub fn contains_unit(&self, unit: u32) -> bool {
        self.runs.iter().any(|iv| iv.contains_unit(unit))
    }

    pub fn contains_interval(&self, iv: &UnitInterval) -> bool {
        self.runs.iter().any(|run| run.contains(iv))
    }

    /// Highest unit bound, if any unit is present.
    pub fn upper_bound(&self) -> Option<u32> {
        self.runs.last().map(UnitInterval::hi)
    }

    /// Maximal runs of `iv ∩ self`, in ascending order.
    pub fn clip<'a>(&'a self, iv: &'a UnitInterval) -> impl Iterator<Item = UnitInterval> + 'a {
        self.runs.iter().filter_map(move |run| run.intersect(iv))
    }

    pub fn intersect(&self, other: &SlotSet) -> SlotSet {
        let mut runs = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.runs.len() && j < other.runs.len() {
            let (a, b) = (self.runs[i], other.runs[j]);
            if let Some(x) = a.intersect(&b) {
                runs.push(x);
            }
            if a.hi < b.hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        SlotSet { runs }
    }

    /// Takes `iv` out of the set; every unit of `iv` must be present.
    pub fn allocate(&mut self, iv: UnitInterval) -> Result<(), IntervalError> {
        let pos = self.runs.iter().position(|run| run.contains(&iv)).ok_or(
            IntervalError::NotAvailable {
                lo: iv.lo,
                hi: iv.hi,
            },
        )?;
        let run = self.runs.remove(pos);
        let mut at = pos;
        if run.lo < iv.lo {
            self.runs.insert(
                at,
                UnitInterval {
                    lo: run.lo,
                    hi: iv.lo,
                },
            );
            at += 1;
        }
        if iv.hi < run.hi {
            self.runs.insert(
                at,
                UnitInterval {
                    lo: iv.hi,
                    hi: run.hi,
                },
            );
        }
        Ok(())
    }

    /// Returns `iv` to the set; none of its units may already be present.
    pub fn release(&mut self, iv: UnitInterval) -> Result<(), IntervalError> {
        if self.runs.iter().any(|run| run.intersect(&iv).is_some()) {
            return Err(IntervalError::AlreadyFree {
                lo: iv.lo,
                hi: iv.hi,
            });
        }
        let mut runs = std::mem::take(&mut self.runs);
        runs.push(iv);
        *self = SlotSet::from_intervals(runs);
        Ok(())
    }
}

impl<'de> Deserialize<'de> for SlotSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let runs = Vec::<UnitInterval>::deserialize(d)?;
        Ok(SlotSet::from_intervals(runs))
    }
}

impl FromIterator<UnitInterval> for SlotSet {
    fn from_iter<T: IntoIterator<Item = UnitInterval>>(iter: T) -> Self {
        SlotSet::from_intervals(iter)
    }
}
