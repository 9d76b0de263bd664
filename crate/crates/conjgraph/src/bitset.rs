//! Dense bitset over a fixed universe, used for class member sets and
//! subgroup member sets indexed by a group's element enumeration.

/// Fixed-size bitset. Unused bits of the last block are kept zero so that
/// equality and hashing work on the raw blocks.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitSet {
    blocks: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            blocks: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &BitSet) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        assert_eq!(self.len, other.len);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        assert_eq!(self.len, other.len);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & b == 0)
    }

    /// Indices of set bits in increasing order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let mut b = block;
            std::iter::from_fn(move || {
                if b == 0 {
                    None
                } else {
                    let t = b.trailing_zeros() as usize;
                    b &= b - 1;
                    Some(bi * 64 + t)
                }
            })
        })
    }

    /// Smallest set index, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter_ones().next()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_count() {
        let mut s = BitSet::new(130);
        for i in [0, 1, 63, 64, 65, 129] {
            s.insert(i);
        }
        assert_eq!(s.count(), 6);
        assert!(s.contains(63));
        assert!(!s.contains(62));
        assert_eq!(s.iter_ones().collect::<Vec<_>>(), vec![0, 1, 63, 64, 65, 129]);
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn set_algebra() {
        let mut a = BitSet::new(10);
        let mut b = BitSet::new(10);
        a.insert(1);
        a.insert(2);
        b.insert(2);
        b.insert(3);
        let mut u = a.clone();
        u.union_with(&b);
        assert_eq!(u.count(), 3);
        let mut i = a.clone();
        i.intersect_with(&b);
        assert_eq!(i.iter_ones().collect::<Vec<_>>(), vec![2]);
        assert!(i.is_subset(&a));
        assert!(!a.is_disjoint(&b));
    }
}
