//! Fixed-capacity bitsets used by the branch-and-bound search.

pub trait Bits: Clone + Eq {
    fn empty(len: usize) -> Self;
    fn insert(&mut self, i: usize);
    fn remove(&mut self, i: usize);
    fn contains(&self, i: usize) -> bool;
    fn count(&self) -> usize;
    fn is_empty(&self) -> bool;
    /// `|self ∩ other|`
    fn count_and(&self, other: &Self) -> usize;
    fn intersects(&self, other: &Self) -> bool;
    /// `self \= other`
    fn subtract(&mut self, other: &Self);
    /// `self |= other`
    fn union_with(&mut self, other: &Self);
    fn ones(&self) -> Vec<usize>;

    fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }
}

macro_rules! word_bits {
    ($t:ty, $width:expr) => {
        impl Bits for $t {
            fn empty(len: usize) -> Self {
                assert!(len <= $width, "bitset capacity exceeded");
                0
            }
            fn insert(&mut self, i: usize) {
                *self |= 1 << i;
            }
            fn remove(&mut self, i: usize) {
                *self &= !(1 << i);
            }
            fn contains(&self, i: usize) -> bool {
                *self >> i & 1 == 1
            }
            fn count(&self) -> usize {
                self.count_ones() as usize
            }
            fn is_empty(&self) -> bool {
                *self == 0
            }
            fn count_and(&self, other: &Self) -> usize {
                (self & other).count_ones() as usize
            }
            fn intersects(&self, other: &Self) -> bool {
                self & other != 0
            }
            fn subtract(&mut self, other: &Self) {
                *self &= !other;
            }
            fn union_with(&mut self, other: &Self) {
                *self |= other;
            }
            fn ones(&self) -> Vec<usize> {
                let mut out = Vec::with_capacity(self.count());
                let mut w = *self;
                while w != 0 {
                    out.push(w.trailing_zeros() as usize);
                    w &= w - 1;
                }
                out
            }
        }
    };
}

word_bits!(u64, 64);
word_bits!(u128, 128);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Wide(Vec<u64>);

impl Bits for Wide {
    fn empty(len: usize) -> Self {
        Wide(vec![0; len.div_ceil(64)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn count_and(&self, other: &Self) -> usize {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }
    fn intersects(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }
    fn subtract(&mut self, other: &Self) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }
    fn union_with(&mut self, other: &Self) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
    fn ones(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (k, &word) in self.0.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                out.push(k * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exercise<B: Bits + std::fmt::Debug>(len: usize) {
        let mut a = B::empty(len);
        let mut b = B::empty(len);
        for i in (0..len).step_by(3) {
            a.insert(i);
        }
        for i in (0..len).step_by(2) {
            b.insert(i);
        }
        let both = (0..len).filter(|i| i % 6 == 0).count();
        assert_eq!(a.count_and(&b), both);
        assert!(a.intersects(&b));
        let mut c = a.clone();
        c.subtract(&b);
        assert_eq!(c.ones(), (0..len).filter(|i| i % 3 == 0 && i % 2 != 0).collect::<Vec<_>>());
        c.union_with(&b);
        assert_eq!(c.count(), (0..len).filter(|i| i % 3 == 0 || i % 2 == 0).count());
        a.remove(0);
        assert!(!a.contains(0));
        assert_eq!(B::full(len).count(), len);
        assert!(B::empty(len).is_empty());
    }

    #[test]
    fn all_backends_agree() {
        exercise::<u64>(64);
        exercise::<u128>(128);
        exercise::<Wide>(200);
    }
}
