use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A monomial in the generators, stored as a sequence of 1-based generator
/// indices. The empty word is the monomial `1`.
///
/// Words are ordered degree first, then lexicographically on the letters.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[u16; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn letter(index: u16) -> Self {
        let mut w = SmallVec::new();
        w.push(index);
        Word(w)
    }

    pub fn from_letters<I: IntoIterator<Item = u16>>(letters: I) -> Self {
        Word(letters.into_iter().collect())
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    /// Multiset union of two sorted words, for commuting generators.
    pub(crate) fn merge_sorted(&self, other: &Word) -> Word {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] <= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Word(out)
    }

    /// Product of two Grassmann basis blades given as strictly increasing
    /// words. Returns `None` when an index repeats, otherwise the merged blade
    /// and whether reordering flipped the sign.
    pub(crate) fn wedge(&self, other: &Word) -> Option<(Word, bool)> {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut swaps = 0usize;
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Equal => return None,
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    // b[j] jumps over the remaining letters of a
                    swaps += a.len() - i;
                    out.push(b[j]);
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Some((Word(out), swaps % 2 == 1))
    }

    /// Lexicographically smallest cyclic rotation.
    pub fn min_rotation(&self) -> Word {
        let n = self.0.len();
        (0..n.max(1))
            .map(|k| {
                let mut r: SmallVec<[u16; 8]> = SmallVec::with_capacity(n);
                r.extend_from_slice(&self.0[k.min(n)..]);
                r.extend_from_slice(&self.0[..k.min(n)]);
                r
            })
            .min()
            .map(Word)
            .unwrap_or_default()
    }

    /// Occurrence count of each generator `1..=generator_count`.
    /// Letters as `x1*x2^3*x1` for a generator prefix `x`; empty for the empty word.
    pub fn display<'a>(&'a self, prefix: &'a str) -> WordDisplay<'a> {
        WordDisplay { word: self, prefix }
    }

    pub fn content(&self, generator_count: usize) -> Vec<u32> {
        let mut c = vec![0u32; generator_count];
        for &l in self.0.iter() {
            c[l as usize - 1] += 1;
        }
        c
    }

    pub(crate) fn is_strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    pub(crate) fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    prefix: &'a str,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.word.letters();
        let mut i = 0;
        while i < letters.len() {
            let mut j = i;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{}{}", self.prefix, letters[i])?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}
