//! Word-level helpers for the fixed-width bit rows used by [`crate::Graph`].

#[inline]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub fn get(words: &[u64], i: usize) -> bool {
    words[i >> 6] >> (i & 63) & 1 == 1
}

#[inline]
pub fn set(words: &mut [u64], i: usize) {
    words[i >> 6] |= 1 << (i & 63);
}

#[inline]
pub fn clear(words: &mut [u64], i: usize) {
    words[i >> 6] &= !(1 << (i & 63));
}

pub fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

pub fn is_empty(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}

/// Lowest set bit at index `>= start`.
pub fn next_one(words: &[u64], start: usize) -> Option<usize> {
    let mut wi = start >> 6;
    if wi >= words.len() {
        return None;
    }
    let mut w = words[wi] & (u64::MAX << (start & 63));
    loop {
        if w != 0 {
            return Some((wi << 6) + w.trailing_zeros() as usize);
        }
        wi += 1;
        if wi == words.len() {
            return None;
        }
        w = words[wi];
    }
}

pub fn ones(words: &[u64]) -> Ones<'_> {
    Ones {
        words,
        wi: 0,
        cur: words.first().copied().unwrap_or(0),
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    wi: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some((self.wi << 6) + b);
            }
            self.wi += 1;
            if self.wi >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.wi];
        }
    }
}
