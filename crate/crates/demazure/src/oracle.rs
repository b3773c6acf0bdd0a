//! Independent reference implementations used to validate the hopping
//! algorithm: the reduced-word fold for the Demazure product, Bruhat
//! lower-interval enumeration, and Cayley-graph breadth-first length.
//!
//! Everything here favors obviousness over speed; the enumerating
//! operations carry hard rank caps.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use itertools::Itertools;

use crate::hop::demazure_star;
use crate::perm::Permutation;
use crate::signed::SignedPermutation;
use crate::{Error, Result};

/// Largest rank enumerated by [`symmetric_group`].
pub const MAX_ENUM_RANK_A: usize = 8;
/// Largest rank enumerated by [`hyperoctahedral_group`].
pub const MAX_ENUM_RANK_B: usize = 5;
/// Largest rank accepted by [`lower_interval`] and [`length_by_bfs`].
pub const MAX_INTERVAL_RANK: usize = 6;
/// Largest rank accepted by [`verify_interval_product`].
pub const MAX_PRODUCT_RANK: usize = 5;
/// Largest rank accepted by [`length_by_bfs_b`].
pub const MAX_BFS_RANK_B: usize = 4;

/// Left Demazure action of a simple generator: `s_i ⋆ v` is `s_i ∘ v`
/// when that raises length, `v` otherwise.  The length comparison comes
/// down to which of the values `i`, `i+1` stands further left.
pub fn star_simple_left(i: usize, v: &Permutation) -> Result<Permutation> {
    let n = v.rank();
    if i < 1 || i + 1 > n {
        return Err(Error::GeneratorRange { i, n });
    }
    let pi = v.position_of(i);
    let pi1 = v.position_of(i + 1);
    if pi1 < pi {
        return Ok(v.clone());
    }
    let mut entries = v.entries().to_vec();
    entries.swap(pi - 1, pi1 - 1);
    Ok(Permutation::from_one_line(entries).expect("swap preserves bijectivity"))
}

/// Folds `s_{i_1} ⋆ (s_{i_2} ⋆ (… ⋆ (s_{i_k} ⋆ v)))` over a generator
/// word, right to left.  With a reduced word for `w` this computes
/// `w ⋆ v`.
pub fn demazure_over_word(word: &[usize], v: &Permutation) -> Result<Permutation> {
    let n = v.rank();
    let mut entries = v.entries().to_vec();
    let mut pos = vec![0; n + 1];
    for (p, &val) in entries.iter().enumerate() {
        pos[val] = p;
    }
    for &i in word.iter().rev() {
        if i < 1 || i + 1 > n {
            return Err(Error::GeneratorRange { i, n });
        }
        if pos[i] < pos[i + 1] {
            entries.swap(pos[i], pos[i + 1]);
            pos.swap(i, i + 1);
        }
    }
    Ok(Permutation::from_one_line(entries).expect("swaps preserve bijectivity"))
}

/// The Demazure product computed the expensive way: extract a reduced
/// word for `w` and fold simple generators over `v`.
pub fn demazure_oracle(w: &Permutation, v: &Permutation) -> Result<Permutation> {
    w.check_rank(v)?;
    demazure_over_word(&w.reduced_word(), v)
}

/// The type-B Demazure product by embedding: unfold both factors,
/// multiply with the type-A oracle, and fold back.  The result of the
/// product is always mirror-symmetric, so folding cannot fail.
pub fn demazure_oracle_b(
    w: &SignedPermutation,
    v: &SignedPermutation,
) -> Result<SignedPermutation> {
    w.check_rank(v)?;
    let product = demazure_oracle(&w.unfold(), &v.unfold())?;
    Ok(SignedPermutation::fold(&product).expect("Demazure product of unfoldings must fold"))
}

/// All of `S_n` in lexicographic one-line order.
pub fn symmetric_group(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if n > MAX_ENUM_RANK_A {
        return Err(Error::RankCap { n, max: MAX_ENUM_RANK_A });
    }
    Ok((1..=n)
        .permutations(n)
        .map(|entries| Permutation::from_one_line(entries).expect("permutations are valid"))
        .collect())
}

/// All of `B_n`: every sign pattern on every underlying permutation, in
/// a fixed deterministic order.
pub fn hyperoctahedral_group(n: usize) -> Result<Vec<SignedPermutation>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if n > MAX_ENUM_RANK_B {
        return Err(Error::RankCap { n, max: MAX_ENUM_RANK_B });
    }
    let mut out = Vec::with_capacity((1 << n) * (1..=n).product::<usize>());
    for perm in (1..=n as i64).permutations(n) {
        for mask in 0..1u32 << n {
            let entries = perm
                .iter()
                .enumerate()
                .map(|(idx, &v)| if mask >> idx & 1 == 1 { -v } else { v })
                .collect();
            out.push(SignedPermutation::from_one_line(entries).expect("valid window"));
        }
    }
    Ok(out)
}

/// The lower Bruhat interval `[e, w] = {u : u ≤ w}`.
pub fn lower_interval(w: &Permutation) -> Result<BTreeSet<Permutation>> {
    let n = w.rank();
    if n > MAX_INTERVAL_RANK {
        return Err(Error::RankCap { n, max: MAX_INTERVAL_RANK });
    }
    let mut out = BTreeSet::new();
    for u in symmetric_group(n)? {
        if u.bruhat_leq(w)? {
            out.insert(u);
        }
    }
    Ok(out)
}

/// Checks the interval identity `[e, w ⋆ u] = {a b : a ≤ w, b ≤ u}`.
pub fn verify_interval_product(w: &Permutation, u: &Permutation) -> Result<bool> {
    w.check_rank(u)?;
    let n = w.rank();
    if n > MAX_PRODUCT_RANK {
        return Err(Error::RankCap { n, max: MAX_PRODUCT_RANK });
    }
    let interval = lower_interval(&demazure_star(w, u)?.0)?;
    let mut products = BTreeSet::new();
    for a in lower_interval(w)? {
        for b in lower_interval(u)? {
            products.insert(a.compose(&b)?);
        }
    }
    Ok(interval == products)
}

/// Word length of every element of `S_n` by breadth-first search over
/// right multiplication by simple transpositions.
pub fn length_by_bfs(n: usize) -> Result<BTreeMap<Permutation, usize>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if n > MAX_INTERVAL_RANK {
        return Err(Error::RankCap { n, max: MAX_INTERVAL_RANK });
    }
    let generators: Vec<Permutation> =
        (1..n).map(|i| Permutation::simple(i, n).expect("valid generator")).collect();
    let mut dist = BTreeMap::new();
    let start = Permutation::identity(n)?;
    dist.insert(start.clone(), 0);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let d = dist[&u];
        for s in &generators {
            let next = u.compose(s)?;
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    Ok(dist)
}

/// Word length of every element of `B_n` by breadth-first search over
/// right multiplication by the type-B generators.
pub fn length_by_bfs_b(n: usize) -> Result<BTreeMap<SignedPermutation, usize>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if n > MAX_BFS_RANK_B {
        return Err(Error::RankCap { n, max: MAX_BFS_RANK_B });
    }
    let generators: Vec<SignedPermutation> =
        (1..=n).map(|i| SignedPermutation::simple_b(i, n).expect("valid generator")).collect();
    let mut dist = BTreeMap::new();
    let start = SignedPermutation::identity(n)?;
    dist.insert(start.clone(), 0);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let d = dist[&u];
        for s in &generators {
            let next = u.compose_b(s)?;
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    Ok(dist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed::demazure_star_b;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn star_simple_left_examples() {
        assert_eq!(star_simple_left(1, &p("213")).unwrap(), p("213"));
        assert_eq!(star_simple_left(1, &p("123")).unwrap(), p("213"));
        assert!(star_simple_left(0, &p("123")).is_err());
        assert!(star_simple_left(3, &p("123")).is_err());
    }

    #[test]
    fn star_simple_left_matches_length_comparison() {
        for v in symmetric_group(4).unwrap() {
            for i in 1..4 {
                let result = star_simple_left(i, &v).unwrap();
                let si_v = Permutation::simple(i, 4).unwrap().compose(&v).unwrap();
                if si_v.length() > v.length() {
                    assert_eq!(result, si_v, "i={i} v={v}");
                } else {
                    assert_eq!(result, v, "i={i} v={v}");
                }
            }
        }
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(demazure_oracle(&p("6541723"), &p("5436217")).unwrap(), p("7654213"));
        assert_eq!(demazure_oracle(&p("124567893"), &p("891726435")).unwrap(), p("981726543"));
        let v = p("35142");
        assert_eq!(demazure_oracle(&Permutation::identity(5).unwrap(), &v).unwrap(), v);
        assert!(demazure_oracle(&p("123"), &p("1234")).is_err());
    }

    #[test]
    fn oracle_is_word_independent() {
        // 321 = s_1 s_2 s_1 = s_2 s_1 s_2
        for v in symmetric_group(3).unwrap() {
            let a = demazure_over_word(&[1, 2, 1], &v).unwrap();
            let b = demazure_over_word(&[2, 1, 2], &v).unwrap();
            assert_eq!(a, b, "v={v}");
            assert_eq!(a, demazure_oracle(&p("321"), &v).unwrap());
        }
    }

    #[test]
    fn oracle_agrees_with_hopping_on_s4() {
        let group = symmetric_group(4).unwrap();
        for w in &group {
            for v in &group {
                assert_eq!(
                    demazure_star(w, v).unwrap().0,
                    demazure_oracle(w, v).unwrap(),
                    "w={w} v={v}"
                );
            }
        }
    }

    #[test]
    fn oracle_b_examples() {
        assert_eq!(
            demazure_oracle_b(&sp("[-5,3,1,-2,4]"), &sp("[-4,2,-1,-3,5]")).unwrap(),
            sp("[-2,-5,-1,-3,-4]")
        );
        let v = sp("[3,-1,2]");
        let e = SignedPermutation::identity(3).unwrap();
        assert_eq!(demazure_oracle_b(&e, &v).unwrap(), v);
        let sn = SignedPermutation::simple_b(3, 3).unwrap();
        assert_eq!(demazure_oracle_b(&sn, &sp("[1,2,-3]")).unwrap(), sp("[1,2,-3]"));
    }

    #[test]
    fn oracle_b_agrees_with_hopping_on_b2() {
        let group = hyperoctahedral_group(2).unwrap();
        for w in &group {
            for v in &group {
                assert_eq!(
                    demazure_star_b(w, v).unwrap().0,
                    demazure_oracle_b(w, v).unwrap(),
                    "w={w} v={v}"
                );
            }
        }
    }

    #[test]
    fn products_dominate_their_factors() {
        let group = symmetric_group(4).unwrap();
        for w in &group {
            for v in &group {
                let product = demazure_oracle(w, v).unwrap();
                assert!(w.bruhat_leq(&product).unwrap(), "w={w} v={v}");
                assert!(v.bruhat_leq(&product).unwrap(), "w={w} v={v}");
            }
        }
    }

    #[test]
    fn enumerators_have_the_right_sizes() {
        assert_eq!(symmetric_group(1).unwrap().len(), 1);
        assert_eq!(symmetric_group(4).unwrap().len(), 24);
        assert_eq!(hyperoctahedral_group(1).unwrap().len(), 2);
        assert_eq!(hyperoctahedral_group(3).unwrap().len(), 48);
        assert!(symmetric_group(9).is_err());
        assert!(hyperoctahedral_group(6).is_err());
        let all = symmetric_group(3).unwrap();
        let dedup: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn lower_interval_examples() {
        let e = Permutation::identity(4).unwrap();
        assert_eq!(lower_interval(&e).unwrap(), BTreeSet::from([e]));
        assert_eq!(lower_interval(&p("321")).unwrap().len(), 6);
        let interval = lower_interval(&p("4231")).unwrap();
        assert_eq!(interval.len(), 20);
        for included in ["3142", "2413", "1432"] {
            assert!(interval.contains(&p(included)), "{included}");
        }
        for excluded in ["3412", "3421", "4312", "4321"] {
            assert!(!interval.contains(&p(excluded)), "{excluded}");
        }
        assert!(lower_interval(&Permutation::identity(7).unwrap()).is_err());
    }

    #[test]
    fn interval_product_identity() {
        assert!(verify_interval_product(&p("2341"), &p("3124")).unwrap());
        let e = Permutation::identity(3).unwrap();
        assert!(verify_interval_product(&e, &e).unwrap());
        let e6 = Permutation::identity(6).unwrap();
        assert_eq!(
            verify_interval_product(&e6, &e6).unwrap_err(),
            Error::RankCap { n: 6, max: 5 }
        );
        // the motivating witness: s_2 s_3 s_1 lies in [e, s_2 s_3 ⋆ s_1]
        let s = |i| Permutation::simple(i, 4).unwrap();
        let w = s(2).compose(&s(3)).unwrap();
        let u = s(1);
        let witness = s(2).compose(&s(3)).unwrap().compose(&s(1)).unwrap();
        let interval = lower_interval(&demazure_star(&w, &u).unwrap().0).unwrap();
        assert!(interval.contains(&witness));
    }

    #[test]
    fn bfs_lengths_match_inversions() {
        let dist = length_by_bfs(3).unwrap();
        assert_eq!(dist.values().max(), Some(&3));
        assert_eq!(dist[&p("321")], 3);
        assert_eq!(dist[&Permutation::identity(3).unwrap()], 0);
        let dist4 = length_by_bfs(4).unwrap();
        assert_eq!(dist4[&p("4231")], 5);
        for (u, d) in &dist4 {
            assert_eq!(*d, u.length(), "u={u}");
        }
        assert!(length_by_bfs(7).is_err());
    }

    #[test]
    fn bfs_lengths_match_type_b_formula() {
        let dist = length_by_bfs_b(2).unwrap();
        assert_eq!(dist.len(), 8);
        assert_eq!(dist.values().max(), Some(&4));
        assert_eq!(dist[&sp("[-1,-2]")], 4);
        for (u, d) in &dist {
            assert_eq!(*d, u.length(), "u={u}");
        }
        assert!(length_by_bfs_b(5).is_err());
    }
}
