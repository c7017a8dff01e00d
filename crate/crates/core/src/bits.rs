//! Word-packed bit vectors indexed by group elements, plus the xor-shift
//! kernels the counting forms are built on.
//!
//! All index spaces here have power-of-two length, so `i ^ t` never leaves
//! the valid range and xor-translation is a permutation of bit positions.

const WORD_BITS: usize = 64;

/// Fixed-length bit vector. Length is always a power of two in this crate.
#[derive(Clone, PartialEq, Eq)]
pub struct Bitset {
    nbits: usize,
    words: Vec<u64>,
}

impl std::fmt::Debug for Bitset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Bitset[{}; {} set]", self.nbits, self.count())
    }
}

fn words_for(nbits: usize) -> usize {
    nbits.div_ceil(WORD_BITS)
}

impl Bitset {
    pub fn new(nbits: usize) -> Self {
        Bitset {
            nbits,
            words: vec![0; words_for(nbits)],
        }
    }

    pub fn full(nbits: usize) -> Self {
        let mut b = Bitset {
            nbits,
            words: vec![!0u64; words_for(nbits)],
        };
        b.mask_tail();
        b
    }

    pub fn from_indices(nbits: usize, idx: &[usize]) -> Self {
        let mut b = Bitset::new(nbits);
        for &i in idx {
            b.set(i, true);
        }
        b
    }

    fn mask_tail(&mut self) {
        let rem = self.nbits % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.nbits
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.nbits);
        let w = &mut self.words[i / WORD_BITS];
        let m = 1u64 << (i % WORD_BITS);
        if v {
            *w |= m;
        } else {
            *w &= !m;
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    pub fn and(&self, other: &Bitset) -> Bitset {
        assert_eq!(self.nbits, other.nbits);
        Bitset {
            nbits: self.nbits,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn or(&self, other: &Bitset) -> Bitset {
        assert_eq!(self.nbits, other.nbits);
        Bitset {
            nbits: self.nbits,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn minus(&self, other: &Bitset) -> Bitset {
        assert_eq!(self.nbits, other.nbits);
        Bitset {
            nbits: self.nbits,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn complement(&self) -> Bitset {
        let mut b = Bitset {
            nbits: self.nbits,
            words: self.words.iter().map(|w| !w).collect(),
        };
        b.mask_tail();
        b
    }

    pub fn or_assign(&mut self, other: &Bitset) {
        assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset_of(&self, other: &Bitset) -> bool {
        assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn and_count(&self, other: &Bitset) -> usize {
        assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Bit `i` of the result is bit `i ^ t` of `self`.
    pub fn xor_shift(&self, t: usize) -> Bitset {
        assert!(t < self.nbits.max(1));
        let mut out = self.clone();
        out.xor_shift_in_place(t);
        out
    }

    fn xor_shift_in_place(&mut self, t: usize) {
        let t_lo = t % WORD_BITS;
        let t_hi = t / WORD_BITS;
        if t_hi != 0 {
            // Permute whole words: word w takes word w ^ t_hi.
            let n = self.words.len();
            for w in 0..n {
                let p = w ^ t_hi;
                if p > w {
                    self.words.swap(w, p);
                }
            }
            debug_assert!(n.is_power_of_two() || t_hi == 0);
        }
        if t_lo != 0 {
            for w in self.words.iter_mut() {
                *w = xor_shuffle_word(*w, t_lo as u32);
            }
        }
    }
}

/// Permute the bits of one word so that bit `i` of the result is bit
/// `i ^ t` of the input, `t < 64`. Butterfly on each set bit of `t`.
#[inline]
fn xor_shuffle_word(mut x: u64, t: u32) -> u64 {
    const MASKS: [u64; 6] = [
        0x5555_5555_5555_5555,
        0x3333_3333_3333_3333,
        0x0F0F_0F0F_0F0F_0F0F,
        0x00FF_00FF_00FF_00FF,
        0x0000_FFFF_0000_FFFF,
        0x0000_0000_FFFF_FFFF,
    ];
    for (k, &m) in MASKS.iter().enumerate() {
        if t >> k & 1 == 1 {
            let s = 1u32 << k;
            x = ((x >> s) & m) | ((x & m) << s);
        }
    }
    x
}

/// All xor-translates of a base bitset, one row per shift. Row `t` satisfies
/// `row(t)[i] == base[i ^ t]`. Rows are stored in one flat allocation.
pub struct ShiftTable {
    nbits: usize,
    stride: usize,
    data: Vec<u64>,
}

impl ShiftTable {
    pub fn new(base: &Bitset) -> Self {
        let nbits = base.len();
        assert!(nbits.is_power_of_two());
        let stride = words_for(nbits);
        let mut data = vec![0u64; nbits * stride];
        data[..stride].copy_from_slice(base.words());
        // row(t) = row(t without lowest bit) shifted by lowbit(t)
        let mut scratch = base.clone();
        for t in 1..nbits {
            let low = t & t.wrapping_neg();
            let parent = t ^ low;
            scratch.words.copy_from_slice(&data[parent * stride..(parent + 1) * stride]);
            scratch.xor_shift_in_place(low);
            data[t * stride..(t + 1) * stride].copy_from_slice(&scratch.words);
        }
        ShiftTable { nbits, stride, data }
    }

    #[inline]
    pub fn row(&self, t: usize) -> &[u64] {
        debug_assert!(t < self.nbits);
        &self.data[t * self.stride..(t + 1) * self.stride]
    }
}

#[inline]
pub fn and2_count(a: &[u64], b: &[u64]) -> u64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = 0u64;
    for i in 0..a.len() {
        acc += (a[i] & b[i]).count_ones() as u64;
    }
    acc
}

#[inline]
pub fn and3_count(a: &[u64], b: &[u64], c: &[u64]) -> u64 {
    debug_assert_eq!(a.len(), b.len());
    debug_assert_eq!(a.len(), c.len());
    let mut acc = 0u64;
    for i in 0..a.len() {
        acc += (a[i] & b[i] & c[i]).count_ones() as u64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_count() {
        let mut b = Bitset::new(100);
        b.set(0, true);
        b.set(63, true);
        b.set(64, true);
        b.set(99, true);
        assert!(b.get(63) && b.get(64));
        assert!(!b.get(1));
        assert_eq!(b.count(), 4);
        assert_eq!(b.iter_ones().collect::<Vec<_>>(), vec![0, 63, 64, 99]);
        b.set(63, false);
        assert_eq!(b.count(), 3);
    }

    #[test]
    fn full_masks_tail() {
        let b = Bitset::full(70);
        assert_eq!(b.count(), 70);
        assert_eq!(b.complement().count(), 0);
    }

    #[test]
    fn xor_shift_matches_naive() {
        // lengths crossing the word boundary and the multi-word regime
        for dim in [3usize, 6, 7, 9] {
            let n = 1 << dim;
            let mut b = Bitset::new(n);
            for i in 0..n {
                if (i * 2654435761usize) % 7 < 3 {
                    b.set(i, true);
                }
            }
            for t in [0usize, 1, 5, n / 2, n - 1] {
                let s = b.xor_shift(t);
                for i in 0..n {
                    assert_eq!(s.get(i), b.get(i ^ t), "dim={dim} t={t} i={i}");
                }
            }
        }
    }

    #[test]
    fn shift_table_rows() {
        let n = 1 << 7;
        let mut b = Bitset::new(n);
        for i in 0..n {
            if i % 3 == 0 {
                b.set(i, true);
            }
        }
        let table = ShiftTable::new(&b);
        for t in [0usize, 1, 17, 64, 127] {
            assert_eq!(table.row(t), b.xor_shift(t).words());
        }
    }

    #[test]
    fn and_counts() {
        let n = 1 << 8;
        let a = Bitset::from_indices(n, &[1, 2, 3, 100, 200]);
        let b = Bitset::from_indices(n, &[2, 3, 100, 201]);
        let c = Bitset::from_indices(n, &[3, 100, 201]);
        assert_eq!(and2_count(a.words(), b.words()), 3);
        assert_eq!(and3_count(a.words(), b.words(), c.words()), 2);
        assert_eq!(a.and(&b).count(), 3);
        assert_eq!(a.minus(&b).iter_ones().collect::<Vec<_>>(), vec![1, 200]);
        assert!(c.and(&b).is_subset_of(&b));
    }
}
