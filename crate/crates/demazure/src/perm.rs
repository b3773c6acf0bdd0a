//! Permutations of `{1, …, n}` in one-line notation.
//!
//! A word is stored positions → values: `entries[p]` is the image of
//! position `p + 1`.  Composition is right-to-left, `(w ∘ v)(p) = w(v(p))`,
//! so left-multiplying by the simple transposition `s_i` swaps the *values*
//! `i, i+1` while right-multiplying swaps the entries at *positions*
//! `i, i+1`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line word, validating bijectivity.
    pub fn from_one_line(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ZeroRank);
        }
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v < 1 || v > n {
                return Err(Error::ValueRange { value: v as i64, n });
            }
            if seen[v] {
                return Err(Error::DuplicateValue(v as i64));
            }
            seen[v] = true;
        }
        Ok(Permutation { entries })
    }

    /// Skips validation; callers must supply a genuine one-line word.
    pub(crate) fn from_entries_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_one_line(entries.clone()).is_ok());
        Permutation { entries }
    }

    /// The identity of `S_n`.
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Permutation { entries: (1..=n).collect() })
    }

    /// The simple transposition `s_i` swapping `i` and `i + 1`.
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        if i < 1 || i + 1 > n {
            return Err(Error::GeneratorRange { i, n });
        }
        let mut entries: Vec<usize> = (1..=n).collect();
        entries.swap(i - 1, i);
        Ok(Permutation { entries })
    }

    /// The string generator `cs_{a,b} = s_a s_{a+1} ⋯ s_{a+b-1}`, the cycle
    /// sending `a, …, a+b-1` to `a+1, …, a+b` and `a+b` back to `a`.
    pub fn string_generator(a: usize, b: usize, n: usize) -> Result<Self> {
        if a < 1 || a + 1 > n || b > n - a {
            return Err(Error::StringRange { a, b, n });
        }
        let mut entries: Vec<usize> = (1..=n).collect();
        for p in a..a + b {
            entries[p - 1] = p + 1;
        }
        if b > 0 {
            entries[a + b - 1] = a;
        }
        Ok(Permutation { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(p, &v)| v == p + 1)
    }

    /// The image `w(p)` of a 1-based position.
    pub fn apply(&self, p: usize) -> usize {
        self.entries[p - 1]
    }

    /// The 1-based position of a value in the one-line word.
    pub fn position_of(&self, v: usize) -> usize {
        1 + self.entries.iter().position(|&x| x == v).expect("value in range")
    }

    /// Right-to-left composition: `(self ∘ v)(p) = self(v(p))`.
    pub fn compose(&self, v: &Permutation) -> Result<Self> {
        self.check_rank(v)?;
        let entries = v.entries.iter().map(|&q| self.entries[q - 1]).collect();
        Ok(Permutation { entries })
    }

    pub fn inverse(&self) -> Self {
        let mut entries = vec![0; self.entries.len()];
        for (p, &v) in self.entries.iter().enumerate() {
            entries[v - 1] = p + 1;
        }
        Permutation { entries }
    }

    /// Coxeter length: the number of inversions of the one-line word.
    pub fn length(&self) -> usize {
        let n = self.rank();
        let mut count = 0;
        for p in 0..n {
            for q in p + 1..n {
                if self.entries[p] > self.entries[q] {
                    count += 1;
                }
            }
        }
        count
    }

    /// A reduced word `(i_1, …, i_k)` with `w = s_{i_1} ∘ ⋯ ∘ s_{i_k}`,
    /// obtained by stripping the rightmost descent.  The rightmost descent
    /// moves right by at most one position per strip, so a cursor suffices
    /// and the extraction runs in `O(n + ℓ(w))`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.rank();
        let mut u = self.entries.clone();
        let mut word = Vec::new();
        let mut d = n as isize - 2;
        while d >= 0 {
            let i = d as usize;
            if u[i] > u[i + 1] {
                u.swap(i, i + 1);
                word.push(i + 1);
                d = if i + 2 < n { d + 1 } else { d - 1 };
            } else {
                d -= 1;
            }
        }
        word.reverse();
        word
    }

    /// The ordered image `w(L)` of a hop list.
    pub fn apply_to_list(&self, list: &HopList) -> Result<HopList> {
        let n = self.rank();
        let mut values = Vec::with_capacity(list.len());
        for &v in list.values() {
            if v < 1 || v > n {
                return Err(Error::ValueRange { value: v as i64, n });
            }
            values.push(self.entries[v - 1]);
        }
        Ok(HopList { values })
    }

    /// The left subword `w ↖ a`: values appearing strictly left of `a` in
    /// the one-line word, filtered to those greater than `a`.
    pub fn left_subword(&self, a: usize) -> Result<HopList> {
        let n = self.rank();
        if a < 1 || a > n {
            return Err(Error::ValueRange { value: a as i64, n });
        }
        let mut values = Vec::new();
        for &v in &self.entries {
            if v == a {
                break;
            }
            if v > a {
                values.push(v);
            }
        }
        Ok(HopList { values })
    }

    /// The inversion sequence `(j_1, …, j_{n-1})` where `j_i` counts the
    /// entries greater than `i` standing strictly left of `i`; equivalently
    /// `j_i = |w ↖ i|`.
    pub fn inversion_sequence(&self) -> InversionSequence {
        let n = self.rank();
        let mut pos = vec![0; n + 1];
        for (p, &v) in self.entries.iter().enumerate() {
            pos[v] = p;
        }
        let js = (1..n)
            .map(|i| (i + 1..=n).filter(|&q| pos[q] < pos[i]).count())
            .collect();
        InversionSequence { js }
    }

    /// Rebuilds the permutation `cs_{n-1,j_{n-1}} ∘ ⋯ ∘ cs_{1,j_1}`; the
    /// inverse of [`Permutation::inversion_sequence`].
    pub fn from_inversion_sequence(js: &InversionSequence) -> Self {
        let n = js.rank();
        let mut acc = Permutation::identity(n).expect("rank ≥ 1");
        for i in (1..n).rev() {
            let cs = Permutation::string_generator(i, js.js[i - 1], n).expect("validated bounds");
            acc = acc.compose(&cs).expect("equal ranks");
        }
        acc
    }

    /// Bruhat order via the sorted-prefix dominance criterion: `u ≤ w` iff
    /// for every `k` the sorted first `k` entries of `u` are elementwise at
    /// most those of `w`.
    pub fn bruhat_leq(&self, w: &Permutation) -> Result<bool> {
        self.check_rank(w)?;
        let n = self.rank();
        let mut su: Vec<usize> = Vec::with_capacity(n);
        let mut sw: Vec<usize> = Vec::with_capacity(n);
        for k in 0..n {
            let (a, b) = (self.entries[k], w.entries[k]);
            su.insert(su.partition_point(|&x| x < a), a);
            sw.insert(sw.partition_point(|&x| x < b), b);
            if su.iter().zip(&sw).any(|(x, y)| x > y) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub(crate) fn check_rank(&self, other: &Permutation) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: other.rank() });
        }
        Ok(())
    }
}

impl fmt::Display for Permutation {
    /// Compact digit string for ranks up to 9, space-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() <= 9 {
            for v in &self.entries {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let words: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", words.join(" "))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts whitespace- or comma-separated values, or a compact digit
    /// string for ranks up to 9; brackets are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.replace(['[', ']', ','], " ");
        let tokens: Vec<&str> = cleaned.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(Error::Parse(s.to_string()));
        }
        let entries: Vec<usize> = if tokens.len() == 1 && tokens[0].len() > 1 {
            // single multi-character token: the compact one-digit-per-value form
            tokens[0]
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(s.to_string())))
                .collect::<Result<_>>()?
        } else {
            tokens
                .iter()
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(s.to_string())))
                .collect::<Result<_>>()?
        };
        Permutation::from_one_line(entries)
    }
}

/// An ordered, duplicate-free list of values: the `L` of a hopping
/// operator `h_{t,L}`.  Order is significant and preserved by every
/// operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopList {
    values: Vec<usize>,
}

impl HopList {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let mut seen = HashSet::new();
        for &v in &values {
            if v == 0 {
                return Err(Error::ValueRange { value: 0, n: 0 });
            }
            if !seen.insert(v) {
                return Err(Error::DuplicateValue(v as i64));
            }
        }
        Ok(HopList { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// The exponent vector `(j_1, …, j_{n-1})` of the canonical factorization
/// into string generators, with `0 ≤ j_i ≤ n - i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionSequence {
    js: Vec<usize>,
}

impl InversionSequence {
    pub fn new(js: Vec<usize>) -> Result<Self> {
        let n = js.len() + 1;
        for (idx, &j) in js.iter().enumerate() {
            if j > n - (idx + 1) {
                return Err(Error::InvalidSequence(format!(
                    "j_{} = {} exceeds {}",
                    idx + 1,
                    j,
                    n - (idx + 1)
                )));
            }
        }
        Ok(InversionSequence { js })
    }

    pub fn js(&self) -> &[usize] {
        &self.js
    }

    pub fn rank(&self) -> usize {
        self.js.len() + 1
    }
}
