use std::fmt;

/// A subset of a ground set of at most 32 elements, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VarSet(pub u32);

pub const MAX_GROUND: usize = 32;

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_GROUND);
        VarSet(1 << i)
    }

    /// The full ground set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND);
        if n == MAX_GROUND {
            VarSet(u32::MAX)
        } else {
            VarSet((1u32 << n) - 1)
        }
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        elems.into_iter().fold(VarSet::EMPTY, |s, e| s.with(e))
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_GROUND && self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        VarSet(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        VarSet(self.0 & !(1 << i))
    }

    pub fn union(self, other: VarSet) -> Self {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> Self {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> Self {
        VarSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: VarSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        let mask = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(VarSet(cur))
        })
    }

    /// Applies a relabeling of the ground set.
    pub fn map(self, perm: &[usize]) -> VarSet {
        VarSet::from_elems(self.iter().map(|i| perm[i]))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
