//! Square bit matrix, one row of `u64` words per vertex.

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Self {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.bits[r * self.words + c / 64] >> (c % 64)) & 1 == 1
    }

    #[inline]
    pub fn assign(&mut self, r: usize, c: usize, value: bool) {
        let word = &mut self.bits[r * self.words + c / 64];
        let mask = 1u64 << (c % 64);
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    #[inline]
    pub fn row_count(&self, r: usize) -> usize {
        self.row(r).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_row(&self, r: usize) -> RowIter<'_> {
        RowIter {
            row: self.row(r),
            word_idx: 0,
            current: self.row(r).first().copied().unwrap_or(0),
        }
    }
}

pub(crate) struct RowIter<'a> {
    row: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for RowIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * 64 + bit);
            }
            self.word_idx += 1;
            self.current = *self.row.get(self.word_idx)?;
        }
    }
}
