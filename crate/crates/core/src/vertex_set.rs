//! Bitset of vertex indices.
//!
//! The first 64 vertices live in an inline word. Larger indices spill into a
//! heap vector that is kept trimmed, so two equal sets always share one
//! representation.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    low: u64,
    high: Vec<u64>,
}

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet { low: 0, high: Vec::new() }
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet { low: bits, high: Vec::new() }
    }

    /// The set {0, ..., n-1}.
    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::new();
        let words = n / 64;
        let rem = n % 64;
        if words == 0 {
            s.low = if rem == 0 { 0 } else { (1u64 << rem) - 1 };
            return s;
        }
        s.low = u64::MAX;
        s.high = vec![u64::MAX; words - 1];
        if rem > 0 {
            s.high.push((1u64 << rem) - 1);
        }
        s.trim();
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = VertexSet::new();
        s.insert(v);
        s
    }

    /// Low word, valid as the whole set when every element is below 64.
    pub fn low_bits(&self) -> u64 {
        self.low
    }

    pub fn fits_one_word(&self) -> bool {
        self.high.is_empty()
    }

    fn word(&self, i: usize) -> u64 {
        if i == 0 {
            self.low
        } else {
            self.high.get(i - 1).copied().unwrap_or(0)
        }
    }

    fn word_mut(&mut self, i: usize) -> &mut u64 {
        if i == 0 {
            return &mut self.low;
        }
        if self.high.len() < i {
            self.high.resize(i, 0);
        }
        &mut self.high[i - 1]
    }

    fn words(&self) -> usize {
        1 + self.high.len()
    }

    fn trim(&mut self) {
        while self.high.last() == Some(&0) {
            self.high.pop();
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.word(v / 64) >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        *self.word_mut(v / 64) |= 1u64 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v / 64 < self.words() {
            *self.word_mut(v / 64) &= !(1u64 << (v % 64));
            self.trim();
        }
    }

    pub fn with(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    pub fn without(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    pub fn len(&self) -> usize {
        self.low.count_ones() as usize + self.high.iter().map(|w| w.count_ones() as usize).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.low == 0 && self.high.is_empty()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        let n = self.words().max(other.words());
        let mut s = VertexSet { low: f(self.low, other.low), high: Vec::with_capacity(n - 1) };
        for i in 1..n {
            s.high.push(f(self.word(i), other.word(i)));
        }
        s.trim();
        s
    }

    pub fn union(&self, other: &Self) -> Self {
        if self.high.is_empty() && other.high.is_empty() {
            return VertexSet::from_bits(self.low | other.low);
        }
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        if self.high.is_empty() || other.high.is_empty() {
            return VertexSet::from_bits(self.low & other.low);
        }
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        if self.high.is_empty() {
            return VertexSet::from_bits(self.low & !other.low);
        }
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        if self.high.len() > other.high.len() {
            return false;
        }
        (0..self.words()).all(|i| self.word(i) & !other.word(i) == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        (0..self.words().min(other.words())).all(|i| self.word(i) & other.word(i) == 0)
    }

    pub fn min_vertex(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn max_vertex(&self) -> Option<usize> {
        for i in (0..self.words()).rev() {
            let w = self.word(i);
            if w != 0 {
                return Some(i * 64 + 63 - w.leading_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { set: self, word: 0, bits: self.low }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Shift every element up by `offset`.
    pub fn shifted(&self, offset: usize) -> Self {
        self.iter().map(|v| v + offset).collect()
    }

    /// Compare as increasing vertex sequences (dictionary order).
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl Ord for VertexSet {
    /// Numeric order of the bitmasks.
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.words().max(other.words());
        for i in (0..n).rev() {
            match self.word(i).cmp(&other.word(i)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let t = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + t);
            }
            self.word += 1;
            if self.word >= self.set.words() {
                return None;
            }
            self.bits = self.set.word(self.word);
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        Ok(v.into_iter().collect())
    }
}

/// All k-subsets of {0..n-1} in increasing bitmask order.
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    KSubsets { n, idx: if k <= n { Some((0..k).collect()) } else { None } }
}

pub struct KSubsets {
    n: usize,
    idx: Option<Vec<usize>>,
}

impl Iterator for KSubsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        let idx = self.idx.as_mut()?;
        let out: VertexSet = idx.iter().copied().collect();
        // colex successor: bump the lowest index that has room, reset the ones below it
        let k = idx.len();
        let mut i = 0;
        while i < k && idx[i] + 1 == if i + 1 < k { idx[i + 1] } else { self.n } {
            i += 1;
        }
        if i == k {
            self.idx = None;
        } else {
            idx[i] += 1;
            for (j, slot) in idx.iter_mut().enumerate().take(i) {
                *slot = j;
            }
        }
        Some(out)
    }
}

/// Subsets of `set` in increasing bitmask order, the empty set included.
pub fn subsets_of(set: &VertexSet) -> impl Iterator<Item = VertexSet> {
    let elems = set.to_vec();
    let m = elems.len();
    assert!(m < 64, "subset enumeration limited to 63 elements");
    (0u64..(1u64 << m)).map(move |mask| {
        let mut s = VertexSet::new();
        let mut bits = mask;
        while bits != 0 {
            s.insert(elems[bits.trailing_zeros() as usize]);
            bits &= bits - 1;
        }
        s
    })
}

/// Binomial coefficient as u128; panics only on overflow far beyond desk scale.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}
