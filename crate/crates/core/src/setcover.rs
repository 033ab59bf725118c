//! Weighted set cover instances.

use fixedbitset::FixedBitSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetCoverError {
    #[error("set {set} contains element {element} outside universe of size {universe}")]
    ElementOutOfRange { set: usize, element: usize, universe: usize },
    #[error("set {set} lists element {element} twice")]
    DuplicateElement { set: usize, element: usize },
    #[error("set index {0} out of range")]
    SetOutOfRange(usize),
    #[error("set {0} chosen twice")]
    DuplicateSet(usize),
    #[error("element {0} is not covered")]
    Uncovered(usize),
    #[error("cover weight overflows u64")]
    Overflow,
}

/// Universe `0..universe_size` and an ordered list of weighted subsets.
/// Set weights are finite raw units.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetCoverInstance {
    universe_size: usize,
    sets: Vec<(Vec<usize>, u64)>,
}

impl SetCoverInstance {
    pub fn new(universe_size: usize, sets: Vec<(Vec<usize>, u64)>) -> Result<Self, SetCoverError> {
        let mut out = Vec::with_capacity(sets.len());
        for (i, (mut elems, w)) in sets.into_iter().enumerate() {
            elems.sort_unstable();
            if let Some(win) = elems.windows(2).find(|win| win[0] == win[1]) {
                return Err(SetCoverError::DuplicateElement { set: i, element: win[0] });
            }
            if let Some(&e) = elems.iter().find(|&&e| e >= universe_size) {
                return Err(SetCoverError::ElementOutOfRange {
                    set: i,
                    element: e,
                    universe: universe_size,
                });
            }
            out.push((elems, w));
        }
        Ok(SetCoverInstance { universe_size, sets: out })
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn set_count(&self) -> usize {
        self.sets.len()
    }

    pub fn set(&self, i: usize) -> &[usize] {
        &self.sets[i].0
    }

    pub fn set_weight(&self, i: usize) -> u64 {
        self.sets[i].1
    }

    pub fn sets(&self) -> impl Iterator<Item = (&[usize], u64)> {
        self.sets.iter().map(|(e, w)| (e.as_slice(), *w))
    }

    pub(crate) fn bitset(&self, i: usize) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(self.universe_size);
        for &e in &self.sets[i].0 {
            b.insert(e);
        }
        b
    }

    /// First element contained in no set, if any.
    pub fn uncoverable(&self) -> Option<usize> {
        let mut all = FixedBitSet::with_capacity(self.universe_size);
        for (elems, _) in &self.sets {
            all.extend(elems.iter().copied());
        }
        all.zeroes().next()
    }

    /// Checks that `cover` (sorted, distinct set indices) covers the
    /// universe and returns its total weight.
    pub fn check_cover(&self, cover: &[usize]) -> Result<u64, SetCoverError> {
        let mut covered = FixedBitSet::with_capacity(self.universe_size);
        let mut weight = 0u64;
        let mut seen = FixedBitSet::with_capacity(self.sets.len());
        for &i in cover {
            if i >= self.sets.len() {
                return Err(SetCoverError::SetOutOfRange(i));
            }
            if seen.put(i) {
                return Err(SetCoverError::DuplicateSet(i));
            }
            covered.extend(self.sets[i].0.iter().copied());
            weight = weight.checked_add(self.sets[i].1).ok_or(SetCoverError::Overflow)?;
        }
        match covered.zeroes().next() {
            Some(e) => Err(SetCoverError::Uncovered(e)),
            None => Ok(weight),
        }
    }
}
