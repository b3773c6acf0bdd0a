//! Hopping operators and the Demazure product on `S_n`.
//!
//! The hopping operator `h_{t,L}` repeatedly swaps the value `t` with a
//! larger value from the list `L` standing strictly to its right, always
//! choosing the candidate furthest along `L`, until no candidate remains.
//! A single reverse scan of `L` realizes the whole iteration: once the
//! candidate at index `j` is used, every value at a later index stays
//! ineligible, because `t` only ever moves right.
//!
//! The Demazure (0-Hecke) product `w ⋆ v` is the unique Bruhat-maximal
//! element of `{w' v' : w' ≤ w, v' ≤ v}`; it is computed here by composing
//! and then hopping each value `t = 1, 2, …` through the left subword
//! `w ↖ t`.

use crate::perm::{HopList, Permutation};
use crate::{Error, Result};

/// A record of one hopping-operator application: the starting word, the
/// tracked value, and each swap as a pair of 0-based positions
/// `(from, to)` of the tracked value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopTrace {
    start: Permutation,
    tracked: usize,
    swaps: Vec<(usize, usize)>,
    end: Permutation,
}

impl HopTrace {
    pub fn start(&self) -> &Permutation {
        &self.start
    }

    /// The value `t` moved by the operator.
    pub fn tracked(&self) -> usize {
        self.tracked
    }

    /// Each hop as `(from, to)` 0-based positions of the tracked value.
    pub fn swaps(&self) -> &[(usize, usize)] {
        &self.swaps
    }

    pub fn end(&self) -> &Permutation {
        &self.end
    }

    /// Materializes the full chain of intermediate words, starting word
    /// first and final word last (`swaps().len() + 1` entries).
    pub fn steps(&self) -> Vec<Permutation> {
        let mut entries = self.start.entries().to_vec();
        let mut chain = Vec::with_capacity(self.swaps.len() + 1);
        chain.push(self.start.clone());
        for &(from, to) in &self.swaps {
            entries.swap(from, to);
            chain.push(Permutation::from_entries_unchecked(entries.clone()));
        }
        chain
    }
}

/// Applies the reverse scan on raw entry/position tables, returning the
/// performed swaps.  `pos` must be the inverse table of `entries`
/// (`pos[v]` = 0-based position of value `v`); both are kept in sync.
fn hop_in_place(
    entries: &mut [usize],
    pos: &mut [usize],
    t: usize,
    list: &[usize],
) -> Vec<(usize, usize)> {
    let mut swaps = Vec::new();
    for &q in list.iter().rev() {
        if q > t && pos[q] > pos[t] {
            let (from, to) = (pos[t], pos[q]);
            entries.swap(from, to);
            pos.swap(t, q);
            swaps.push((from, to));
        }
    }
    swaps
}

fn position_table(entries: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; entries.len() + 1];
    for (p, &v) in entries.iter().enumerate() {
        pos[v] = p;
    }
    pos
}

/// The hopping operator `h_{t,L}` applied to `w`.
pub fn hop(w: &Permutation, t: usize, list: &HopList) -> Result<HopTrace> {
    let n = w.rank();
    if t < 1 || t > n {
        return Err(Error::ValueRange { value: t as i64, n });
    }
    for &q in list.values() {
        if q < 1 || q > n {
            return Err(Error::ValueRange { value: q as i64, n });
        }
    }
    let mut entries = w.entries().to_vec();
    let mut pos = position_table(&entries);
    let swaps = hop_in_place(&mut entries, &mut pos, t, list.values());
    Ok(HopTrace {
        start: w.clone(),
        tracked: t,
        swaps,
        end: Permutation::from_entries_unchecked(entries),
    })
}

/// The Demazure product `w ⋆ v`, with one [`HopTrace`] per tracked value
/// `t = 1, …, n-1` (no-op hops included).  `w ⋆ v` is obtained from the
/// ordinary composition `w ∘ v` by applying `h_{t, w ↖ t}` for each `t`
/// in increasing order.
pub fn demazure_star(w: &Permutation, v: &Permutation) -> Result<(Permutation, Vec<HopTrace>)> {
    w.check_rank(v)?;
    let n = w.rank();
    let mut entries = w.compose(v)?.entries().to_vec();
    let mut pos = position_table(&entries);
    let mut traces = Vec::with_capacity(n.saturating_sub(1));
    for t in 1..n {
        let start = Permutation::from_entries_unchecked(entries.clone());
        let list = w.left_subword(t)?;
        let swaps = hop_in_place(&mut entries, &mut pos, t, list.values());
        traces.push(HopTrace {
            start,
            tracked: t,
            swaps,
            end: Permutation::from_entries_unchecked(entries.clone()),
        });
    }
    Ok((Permutation::from_entries_unchecked(entries), traces))
}

/// The Demazure product `cs_{a,b} ⋆ v` of a string generator with an
/// arbitrary permutation: a single hop `h_{a,[a+1,…,a+b]}` applied to
/// `cs_{a,b} ∘ v`.
pub fn star_string(a: usize, b: usize, v: &Permutation) -> Result<Permutation> {
    let n = v.rank();
    let cs = Permutation::string_generator(a, b, n)?;
    let u = cs.compose(v)?;
    let list = HopList::new((a + 1..=a + b).collect())?;
    Ok(hop(&u, a, &list)?.end().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn l(values: &[usize]) -> HopList {
        HopList::new(values.to_vec()).unwrap()
    }

    fn chain(trace: &HopTrace) -> Vec<String> {
        trace.steps().iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn hop_chain_contiguous_list() {
        let trace = hop(&p("891726435"), 1, &l(&[2, 3, 4, 5, 6, 7, 8])).unwrap();
        assert_eq!(chain(&trace), ["891726435", "897126435", "897621435", "897625431"]);
        assert_eq!(trace.end(), &p("897625431"));
        assert_eq!(trace.swaps().len(), 3);
    }

    #[test]
    fn hop_chain_respects_list_order() {
        let trace = hop(&p("891726435"), 1, &l(&[3, 6, 5, 7, 2])).unwrap();
        assert_eq!(chain(&trace), ["891726435", "892716435", "892756431"]);
    }

    #[test]
    fn hop_without_candidates_is_identity_map() {
        let w = p("891726435");
        let trace = hop(&w, 9, &l(&[1, 2, 3, 4, 5, 6, 7, 8])).unwrap();
        assert!(trace.swaps().is_empty());
        assert_eq!(trace.end(), &w);
        let trace = hop(&w, 1, &l(&[])).unwrap();
        assert_eq!(trace.end(), &w);
        assert_eq!(trace.steps(), vec![w.clone()]);
    }

    #[test]
    fn hop_rejects_out_of_range_input() {
        assert!(hop(&p("321"), 4, &l(&[1])).is_err());
        assert!(hop(&p("321"), 0, &l(&[1])).is_err());
        assert!(hop(&p("321"), 1, &l(&[5])).is_err());
    }

    #[test]
    fn hop_commutes_with_smaller_simple_reflections() {
        // h_{t,L} s_i = s_i h_{t,s_i(L)} whenever i ≥ t, checked on the
        // worked six-letter example with t = 1, i = 3.
        let w = p("514632");
        let s3 = Permutation::simple(3, 6).unwrap();
        let left = s3
            .compose(hop(&w, 1, &l(&[2, 3, 4, 5])).unwrap().end())
            .unwrap();
        assert_eq!(left, p("534621"));
        let mapped = s3.apply_to_list(&l(&[2, 3, 4, 5])).unwrap();
        assert_eq!(mapped.values(), &[2, 4, 3, 5]);
        let right = hop(&s3.compose(&w).unwrap(), 1, &mapped).unwrap();
        assert_eq!(right.start(), &p("513642"));
        assert_eq!(right.end(), &left);
    }

    #[test]
    fn star_seven_letter_example() {
        let w = p("6541723");
        let v = p("5436217");
        let (result, traces) = demazure_star(&w, &v).unwrap();
        assert_eq!(result, p("7654213"));
        assert_eq!(traces.len(), 6);
        assert_eq!(traces[0].start(), &p("7142563"));
        let ends: Vec<String> = traces.iter().map(|t| t.end().to_string()).collect();
        assert_eq!(ends, ["7452613", "7456213", "7456213", "7564213", "7654213", "7654213"]);
        // hop lists are the left subwords of w
        let lists: Vec<Vec<usize>> =
            (1..7).map(|t| w.left_subword(t).unwrap().values().to_vec()).collect();
        assert_eq!(
            lists,
            [vec![6, 5, 4], vec![6, 5, 4, 7], vec![6, 5, 4, 7], vec![6, 5], vec![6], vec![]]
        );
        // traces chain together: each starts where the previous ended
        for pair in traces.windows(2) {
            assert_eq!(pair[0].end(), pair[1].start());
        }
    }

    #[test]
    fn star_on_rank_one() {
        let e = Permutation::identity(1).unwrap();
        let (result, traces) = demazure_star(&e, &e).unwrap();
        assert_eq!(result, e);
        assert!(traces.is_empty());
    }

    #[test]
    fn star_identity_laws() {
        let e = Permutation::identity(4).unwrap();
        let w = p("4231");
        assert_eq!(demazure_star(&e, &w).unwrap().0, w);
        assert_eq!(demazure_star(&w, &e).unwrap().0, w);
    }

    #[test]
    fn star_is_idempotent_on_simples() {
        for i in 1..4 {
            let s = Permutation::simple(i, 4).unwrap();
            assert_eq!(demazure_star(&s, &s).unwrap().0, s);
        }
    }

    #[test]
    fn star_absorbs_into_longest_element() {
        let w0 = p("4321");
        for v in ["1234", "2143", "4231", "3412"] {
            assert_eq!(demazure_star(&w0, &p(v)).unwrap().0, w0);
            assert_eq!(demazure_star(&p(v), &w0).unwrap().0, w0);
        }
    }

    #[test]
    fn star_rejects_rank_mismatch() {
        assert!(demazure_star(&p("123"), &p("1234")).is_err());
    }

    #[test]
    fn star_string_nine_letter_example() {
        assert_eq!(star_string(3, 6, &p("891726435")).unwrap(), p("981726543"));
        // the same product via the underlying single hop
        let u = Permutation::string_generator(3, 6, 9)
            .unwrap()
            .compose(&p("891726435"))
            .unwrap();
        assert_eq!(u, p("931827546"));
        let trace = hop(&u, 3, &l(&[4, 5, 6, 7, 8, 9])).unwrap();
        assert_eq!(chain(&trace), ["931827546", "981327546", "981723546", "981726543"]);
    }

    #[test]
    fn star_string_agrees_with_general_star() {
        let v = p("891726435");
        for a in 1..9 {
            for b in 0..=(9 - a) {
                let cs = Permutation::string_generator(a, b, 9).unwrap();
                assert_eq!(
                    star_string(a, b, &v).unwrap(),
                    demazure_star(&cs, &v).unwrap().0,
                    "a={a} b={b}"
                );
            }
        }
    }

    #[test]
    fn star_string_with_zero_length_is_composition() {
        let v = p("35142");
        assert_eq!(star_string(2, 0, &v).unwrap(), v);
    }
}
