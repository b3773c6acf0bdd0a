//! Signed permutations (the hyperoctahedral group `B_n`) and their
//! Demazure product.
//!
//! A signed permutation maps `{1, …, n}` bijectively onto `±{1, …, n}`
//! with distinct absolute values, extended to `±[n]` by `w(-i) = -w(i)`.
//! `B_n` embeds into `S_{2n}` by *unfolding*: append a reversed,
//! sign-flipped copy of the window and replace each signed value by its
//! key (`v` for positive `v`, `2n+1+v` for negative `v`).  Keys are
//! ordered by the plain integer order, which realizes the special total
//! order `1 < 2 < … < n < -n < … < -2 < -1` on signed values.
//!
//! Type-B hopping moves a value through the unfolding exactly as in type
//! A, except every swap is accompanied by its mirrored swap (skipped when
//! the two coincide, i.e. when `t` hops over `-t`).

use std::fmt;
use std::str::FromStr;

use crate::perm::Permutation;
use crate::{Error, Result};

/// A signed permutation in window notation `[w(1), …, w(n)]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    entries: Vec<i64>,
}

/// The special total order `1 < 2 < … < n < -n < … < -2 < -1`:
/// positives precede negatives, each block in integer order.
pub fn b_less(p: i64, q: i64) -> bool {
    match (p > 0, q > 0) {
        (true, false) => true,
        (false, true) => false,
        _ => p < q,
    }
}

/// The key of a signed value inside the unfolding: positives keep their
/// value, `-i` becomes `2n+1-i`.  Integer order on keys is [`b_less`].
fn key(v: i64, n: usize) -> usize {
    if v > 0 {
        v as usize
    } else {
        (2 * n as i64 + 1 + v) as usize
    }
}

/// Inverse of the key map: the signed value a key stands for.
pub fn extended_value(k: usize, n: usize) -> Result<i64> {
    if k < 1 || k > 2 * n {
        return Err(Error::ValueRange { value: k as i64, n });
    }
    if k <= n {
        Ok(k as i64)
    } else {
        Ok(k as i64 - (2 * n as i64 + 1))
    }
}

/// Folds an extended generator index into `1..=n`: `s_{n+j}` acts as
/// `s_{n-j}` in the unfolding.
pub fn normalize_generator(k: usize, n: usize) -> Result<usize> {
    if k < 1 || k > 2 * n - 1 {
        return Err(Error::GeneratorRange { i: k, n });
    }
    Ok(if k <= n { k } else { 2 * n - k })
}

impl SignedPermutation {
    /// Builds a signed permutation from its window, validating that the
    /// absolute values form a permutation of `1..=n`.
    pub fn from_one_line(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ZeroRank);
        }
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n {
                return Err(Error::ValueRange { value: v, n });
            }
            if seen[a] {
                return Err(Error::DuplicateValue(v));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { entries })
    }

    fn from_entries_unchecked(entries: Vec<i64>) -> Self {
        debug_assert!(SignedPermutation::from_one_line(entries.clone()).is_ok());
        SignedPermutation { entries }
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(SignedPermutation { entries: (1..=n as i64).collect() })
    }

    /// The simple generator `s_i`: for `i < n` the swap of `i` and `i+1`
    /// (mirrored on the negatives), for `i = n` the sign change `n ↦ -n`.
    pub fn simple_b(i: usize, n: usize) -> Result<Self> {
        if i < 1 || i > n {
            return Err(Error::GeneratorRange { i, n });
        }
        let mut entries: Vec<i64> = (1..=n as i64).collect();
        if i < n {
            entries.swap(i - 1, i);
        } else {
            entries[n - 1] = -(n as i64);
        }
        Ok(SignedPermutation { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(p, &v)| v == p as i64 + 1)
    }

    /// The image `w(q)` of a signed value, using `w(-q) = -w(q)`.
    /// Panics when `q` is zero or out of range.
    pub fn apply_signed(&self, q: i64) -> i64 {
        if q > 0 {
            self.entries[q as usize - 1]
        } else {
            -self.entries[(-q) as usize - 1]
        }
    }

    /// The ordered image `w(L)` of a signed hop list.
    pub fn apply_to_list(&self, list: &SignedHopList) -> Result<SignedHopList> {
        let n = self.rank();
        let mut values = Vec::with_capacity(list.len());
        for &q in list.values() {
            if q == 0 || q.unsigned_abs() as usize > n {
                return Err(Error::ValueRange { value: q, n });
            }
            values.push(self.apply_signed(q));
        }
        Ok(SignedHopList { values })
    }

    /// Right-to-left composition `(self ∘ v)(p) = self(v(p))` on signed
    /// values.
    pub fn compose_b(&self, v: &SignedPermutation) -> Result<Self> {
        self.check_rank(v)?;
        let entries = v.entries.iter().map(|&q| self.apply_signed(q)).collect();
        Ok(SignedPermutation { entries })
    }

    pub fn inverse_b(&self) -> Self {
        let mut entries = vec![0; self.entries.len()];
        for (p, &v) in self.entries.iter().enumerate() {
            if v > 0 {
                entries[v as usize - 1] = p as i64 + 1;
            } else {
                entries[(-v) as usize - 1] = -(p as i64 + 1);
            }
        }
        SignedPermutation { entries }
    }

    /// The unfolding: the element of `S_{2n}` (in key form) whose window
    /// is `w` followed by the reversed, sign-flipped copy of `w`.
    pub fn unfold(&self) -> Permutation {
        let n = self.rank();
        let mut keys = vec![0; 2 * n];
        for (p, &v) in self.entries.iter().enumerate() {
            let k = key(v, n);
            keys[p] = k;
            keys[2 * n - 1 - p] = 2 * n + 1 - k;
        }
        Permutation::from_entries_unchecked(keys)
    }

    /// Inverse of [`unfold`](Self::unfold): reinterprets a mirror-symmetric
    /// element of `S_{2n}` as a signed permutation.
    pub fn fold(p: &Permutation) -> Result<Self> {
        let n2 = p.rank();
        if n2 % 2 != 0 {
            return Err(Error::FoldRank(n2));
        }
        let n = n2 / 2;
        let keys = p.entries();
        for q in 0..n {
            if keys[n2 - 1 - q] != n2 + 1 - keys[q] {
                return Err(Error::MirrorViolation(q + 1));
            }
        }
        Ok(Self::fold_keys(keys))
    }

    /// Folds a key table already known to be mirror-symmetric.
    fn fold_keys(keys: &[usize]) -> Self {
        let n = keys.len() / 2;
        let entries = keys[..n]
            .iter()
            .map(|&k| extended_value(k, n).expect("key in range"))
            .collect();
        SignedPermutation::from_entries_unchecked(entries)
    }

    /// Coxeter length in `B_n`: half of the unfolded inversion count plus
    /// half the number of sign changes.
    pub fn length(&self) -> usize {
        let negatives = self.entries.iter().filter(|&&v| v < 0).count();
        (self.unfold().length() + negatives) / 2
    }

    /// The string generator `cs^B_{a,b} = s_a s_{a+1} ⋯ s_{a+b-1}` (indices
    /// above `n` normalized): in the unfolded identity, the value `a`
    /// shifts `b` slots to the right and `-a` mirrors it.
    pub fn string_generator_b(a: usize, b: usize, n: usize) -> Result<Self> {
        if n == 0 || a < 1 || a > n || b > 2 * n - a {
            return Err(Error::StringRange { a, b, n });
        }
        let n2 = 2 * n;
        let mut keys = vec![0; n2];
        keys[a + b - 1] = a;
        keys[n2 - (a + b)] = n2 + 1 - a;
        let mut spare = (1..=n2).filter(|&k| k != a && k != n2 + 1 - a);
        for slot in keys.iter_mut() {
            if *slot == 0 {
                *slot = spare.next().expect("as many spare keys as free slots");
            }
        }
        debug_assert!((0..n).all(|q| keys[n2 - 1 - q] == n2 + 1 - keys[q]));
        Ok(Self::fold_keys(&keys))
    }

    /// The left subword `w ↖ i`: entries of the unfolding strictly left of
    /// the value `i` that are `> i` or `≤ -i`, in order of appearance.
    pub fn left_subword_b(&self, i: usize) -> Result<SignedHopList> {
        let n = self.rank();
        if i < 1 || i > n {
            return Err(Error::ValueRange { value: i as i64, n });
        }
        let mut values = Vec::new();
        for &k in self.unfold().entries() {
            if k == i {
                break;
            }
            let q = extended_value(k, n)?;
            if q > i as i64 || q <= -(i as i64) {
                values.push(q);
            }
        }
        Ok(SignedHopList { values })
    }

    /// The exponent sequence `(j_1, …, j_n)` of the canonical factorization
    /// into string generators: `j_i` is how far the value `i` sits beyond
    /// the first slot of the unfolding not taken by values of absolute
    /// value below `i`.
    pub fn inversion_sequence_b(&self) -> Vec<usize> {
        let n = self.rank();
        let keys = self.unfold();
        let keys = keys.entries();
        (1..=n)
            .map(|i| {
                let pos = keys.iter().position(|&k| k == i).expect("value present");
                let first_free = keys
                    .iter()
                    .position(|&k| k.min(2 * n + 1 - k) >= i)
                    .expect("value i itself qualifies");
                pos - first_free
            })
            .collect()
    }

    /// Rebuilds the signed permutation from its exponent sequence by
    /// placing `1, …, n` in turn: value `i` lands `j_i` slots past the
    /// first free slot of the unfolding, `-i` in the mirrored slot.
    /// Inverse of [`inversion_sequence_b`](Self::inversion_sequence_b).
    pub fn from_inversion_sequence(js: &[usize]) -> Result<Self> {
        let n = js.len();
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        let n2 = 2 * n;
        let mut keys = vec![0; n2];
        for (idx, &j) in js.iter().enumerate() {
            let i = idx + 1;
            let first_free = keys.iter().position(|&k| k == 0).expect("slots remain");
            let target = first_free + j;
            if target >= n2 {
                return Err(Error::InvalidSequence(format!(
                    "j_{i} = {j} pushes {i} past the end of the unfolding"
                )));
            }
            if keys[target] != 0 {
                return Err(Error::InvalidSequence(format!(
                    "j_{i} = {j} lands {i} on an occupied slot"
                )));
            }
            keys[target] = i;
            keys[n2 - 1 - target] = n2 + 1 - i;
        }
        Ok(Self::fold_keys(&keys))
    }

    pub(crate) fn check_rank(&self, other: &SignedPermutation) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: other.rank() });
        }
        Ok(())
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", words.join(","))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Accepts whitespace- or comma-separated signed values; brackets are
    /// ignored.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.replace(['[', ']', ','], " ");
        let entries: Vec<i64> = cleaned
            .split_whitespace()
            .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(s.to_string())))
            .collect::<Result<_>>()?;
        SignedPermutation::from_one_line(entries)
    }
}

/// An ordered, duplicate-free list of signed values; `q` and `-q` may
/// both appear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedHopList {
    values: Vec<i64>,
}

impl SignedHopList {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        for (idx, &q) in values.iter().enumerate() {
            if q == 0 {
                return Err(Error::ValueRange { value: 0, n: 0 });
            }
            if values[..idx].contains(&q) {
                return Err(Error::DuplicateValue(q));
            }
        }
        Ok(SignedHopList { values })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// A record of one type-B hopping-operator application.  Swaps are the
/// primary `(from, to)` 0-based positions of the tracked value inside the
/// unfolding; each is implicitly accompanied by its mirrored swap except
/// when the two coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedHopTrace {
    start: SignedPermutation,
    tracked: i64,
    swaps: Vec<(usize, usize)>,
    end: SignedPermutation,
}

impl SignedHopTrace {
    pub fn start(&self) -> &SignedPermutation {
        &self.start
    }

    pub fn tracked(&self) -> i64 {
        self.tracked
    }

    pub fn swaps(&self) -> &[(usize, usize)] {
        &self.swaps
    }

    pub fn end(&self) -> &SignedPermutation {
        &self.end
    }

    /// Materializes the chain of signed permutations, starting word first
    /// and final word last (`swaps().len() + 1` entries).
    pub fn steps(&self) -> Vec<SignedPermutation> {
        let mut keys = self.start.unfold().entries().to_vec();
        let n2 = keys.len();
        let mut chain = Vec::with_capacity(self.swaps.len() + 1);
        chain.push(self.start.clone());
        for &(from, to) in &self.swaps {
            keys.swap(from, to);
            if to != n2 - 1 - from {
                keys.swap(n2 - 1 - from, n2 - 1 - to);
            }
            chain.push(SignedPermutation::fold_keys(&keys));
        }
        chain
    }
}

/// Reverse scan over the unfolded key tables; returns the primary swaps.
fn hop_b_in_place(
    keys: &mut [usize],
    pos: &mut [usize],
    t: i64,
    list: &[i64],
    n: usize,
) -> Vec<(usize, usize)> {
    let n2 = 2 * n;
    let tkey = key(t, n);
    let mut swaps = Vec::new();
    for &q in list.iter().rev() {
        let qkey = key(q, n);
        if qkey > tkey && pos[qkey] > pos[tkey] {
            let (from, to) = (pos[tkey], pos[qkey]);
            keys.swap(from, to);
            pos[keys[from]] = from;
            pos[keys[to]] = to;
            if to != n2 - 1 - from {
                let (mfrom, mto) = (n2 - 1 - from, n2 - 1 - to);
                keys.swap(mfrom, mto);
                pos[keys[mfrom]] = mfrom;
                pos[keys[mto]] = mto;
            }
            swaps.push((from, to));
        }
    }
    swaps
}

fn key_position_table(keys: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; keys.len() + 1];
    for (p, &k) in keys.iter().enumerate() {
        pos[k] = p;
    }
    pos
}

fn check_signed_value(q: i64, n: usize) -> Result<()> {
    if q == 0 || q.unsigned_abs() as usize > n {
        return Err(Error::ValueRange { value: q, n });
    }
    Ok(())
}

/// The type-B hopping operator `h_{t,L}` applied to `w`: hops the value
/// `t` through the unfolding, mirroring every swap.
pub fn hop_b(w: &SignedPermutation, t: i64, list: &SignedHopList) -> Result<SignedHopTrace> {
    let n = w.rank();
    check_signed_value(t, n)?;
    for &q in list.values() {
        check_signed_value(q, n)?;
    }
    let mut keys = w.unfold().entries().to_vec();
    let mut pos = key_position_table(&keys);
    let swaps = hop_b_in_place(&mut keys, &mut pos, t, list.values(), n);
    Ok(SignedHopTrace {
        start: w.clone(),
        tracked: t,
        swaps,
        end: SignedPermutation::fold_keys(&keys),
    })
}

/// The type-B Demazure product `w ⋆ v`, with one [`SignedHopTrace`] per
/// tracked value `t = 1, …, n` (no-op hops included): apply
/// `h_{t, w ↖ t}` to `w ∘ v` for each `t` in increasing order.
pub fn demazure_star_b(
    w: &SignedPermutation,
    v: &SignedPermutation,
) -> Result<(SignedPermutation, Vec<SignedHopTrace>)> {
    w.check_rank(v)?;
    let n = w.rank();
    let mut keys = w.compose_b(v)?.unfold().entries().to_vec();
    let mut pos = key_position_table(&keys);
    let mut traces = Vec::with_capacity(n);
    for t in 1..=n {
        let start = SignedPermutation::fold_keys(&keys);
        let list = w.left_subword_b(t)?;
        let swaps = hop_b_in_place(&mut keys, &mut pos, t as i64, list.values(), n);
        traces.push(SignedHopTrace {
            start,
            tracked: t as i64,
            swaps,
            end: SignedPermutation::fold_keys(&keys),
        });
    }
    Ok((SignedPermutation::fold_keys(&keys), traces))
}

/// The Demazure product `(s_i s_{i+1} ⋯ s_j) ⋆ v` of a generator string
/// (extended indices allowed): a single hop `h_{t,[i+1,…,j+1]}` applied to
/// the composed word, with indices and list entries above `n` normalized.
pub fn star_string_b(i: usize, j: usize, v: &SignedPermutation) -> Result<SignedPermutation> {
    let n = v.rank();
    if i < 1 || i > j || j > 2 * n - 1 {
        return Err(Error::StringRange { a: i, b: j, n });
    }
    let mut word = SignedPermutation::identity(n)?;
    for k in i..=j {
        let s = SignedPermutation::simple_b(normalize_generator(k, n)?, n)?;
        word = word.compose_b(&s)?;
    }
    let t = extended_value(i, n)?;
    let values = (i + 1..=j + 1).map(|k| extended_value(k, n)).collect::<Result<_>>()?;
    let list = SignedHopList { values };
    Ok(hop_b(&word.compose_b(v)?, t, &list)?.end().clone())
}
