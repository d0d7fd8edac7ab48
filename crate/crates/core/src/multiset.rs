//! Multiset permutations over `[k]` with every symbol repeated `ell` times.
//!
//! Vertices of every graph in this crate are such strings. Positions are
//! zero-based; position 0 is the "star" position that every generator moves.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default upper bound on the number of vertices an enumeration may produce.
pub const DEFAULT_VERTEX_CAP: u128 = 10_000_000;

/// Number of symbols `k` and repetitions per symbol `ell`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    pub k: usize,
    pub ell: usize,
}

impl Params {
    pub fn new(k: usize, ell: usize) -> Result<Self> {
        if k == 0 || ell == 0 {
            return Err(Error::malformed(format!(
                "k and ell must be at least 1 (got k={k}, ell={ell})"
            )));
        }
        if k > u8::MAX as usize {
            return Err(Error::OutOfRange {
                what: "k",
                value: k as i64,
                allowed: format!("1..={}", u8::MAX),
            });
        }
        Ok(Params { k, ell })
    }

    /// String length `k * ell`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.k * self.ell
    }

    /// `(k ell)! / (ell!)^k`, or `None` on `u128` overflow.
    pub fn vertex_count(&self) -> Option<u128> {
        // product of binomials C(i*ell, ell) for i = 1..=k
        let mut total: u128 = 1;
        for i in 1..=self.k {
            total = total.checked_mul(binomial((i * self.ell) as u128, self.ell as u128)?)?;
        }
        Some(total)
    }

    /// Vertex count, failing with [`Error::InstanceTooLarge`] above `cap`.
    pub fn checked_vertex_count(&self, cap: u128) -> Result<usize> {
        match self.vertex_count() {
            Some(n) if n <= cap => Ok(n as usize),
            Some(n) => Err(Error::InstanceTooLarge {
                what: format!("V(k={}, l={})", self.k, self.ell),
                count: n,
                cap,
            }),
            None => Err(Error::InstanceTooLarge {
                what: format!("V(k={}, l={})", self.k, self.ell),
                count: u128::MAX,
                cap,
            }),
        }
    }

    /// The lexicographically smallest string `0^ell 1^ell ... (k-1)^ell`.
    pub fn identity(&self) -> MString {
        let entries = (0..self.k)
            .flat_map(|s| std::iter::repeat_n(s as u8, self.ell))
            .collect();
        MString {
            params: *self,
            entries,
        }
    }
}

fn binomial(n: u128, r: u128) -> Option<u128> {
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// An `ell`-set permutation: a string of length `k * ell` over `[k]` in which
/// every symbol occurs exactly `ell` times.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MString {
    params: Params,
    entries: Vec<u8>,
}

impl MString {
    pub fn new(params: Params, entries: Vec<u8>) -> Result<Self> {
        if entries.len() != params.len() {
            return Err(Error::malformed(format!(
                "string of length {} for k={}, l={}",
                entries.len(),
                params.k,
                params.ell
            )));
        }
        let mut counts = vec![0usize; params.k];
        for &s in &entries {
            let s = s as usize;
            if s >= params.k {
                return Err(Error::malformed(format!("symbol {s} not in [{}]", params.k)));
            }
            counts[s] += 1;
        }
        if let Some(s) = counts.iter().position(|&c| c != params.ell) {
            return Err(Error::malformed(format!(
                "symbol {s} occurs {} times, expected {}",
                counts[s], params.ell
            )));
        }
        Ok(MString { params, entries })
    }

    /// Parses either a digit string (`"001122"`) or a comma-separated list
    /// (`"0,0,11,11"`).
    pub fn parse(params: Params, text: &str) -> Result<Self> {
        let text = text.trim();
        let entries: Result<Vec<u8>> = if text.contains(',') {
            text.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u8>()
                        .map_err(|_| Error::malformed(format!("bad symbol {t:?}")))
                })
                .collect()
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::malformed(format!("bad symbol {c:?} in {text:?}")))
                })
                .collect()
        };
        MString::new(params, entries?)
    }

    pub(crate) fn from_raw(params: Params, entries: Vec<u8>) -> Self {
        debug_assert!(MString::new(params, entries.clone()).is_ok());
        MString { params, entries }
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn first(&self) -> u8 {
        self.entries[0]
    }

    fn check_position(&self, j: usize) -> Result<()> {
        if j == 0 || j >= self.len() {
            return Err(Error::OutOfRange {
                what: "position",
                value: j as i64,
                allowed: format!("1..={}", self.len().saturating_sub(1)),
            });
        }
        Ok(())
    }

    /// Swaps entries 0 and `j`.
    pub fn transpose(&self, j: usize) -> Result<MString> {
        self.check_position(j)?;
        let mut entries = self.entries.clone();
        entries.swap(0, j);
        Ok(MString::from_raw(self.params, entries))
    }

    /// All star neighbors `(j, w)`, one per position `j` holding a symbol
    /// different from the first; ordered by `j`.
    pub fn star_neighbors(&self) -> Vec<(usize, MString)> {
        let v0 = self.first();
        (1..self.len())
            .filter(|&j| self.entries[j] != v0)
            .map(|j| {
                let mut entries = self.entries.clone();
                entries.swap(0, j);
                (j, MString::from_raw(self.params, entries))
            })
            .collect()
    }

    /// Reverses entries `0..=j`.
    pub fn prefix_reversal(&self, j: usize) -> Result<MString> {
        self.check_position(j)?;
        let mut entries = self.entries.clone();
        entries[..=j].reverse();
        Ok(MString::from_raw(self.params, entries))
    }

    /// Position `i >= 1` of the second occurrence of the first symbol.
    /// Only defined for `ell = 2`.
    pub fn repeat_position(&self) -> Result<usize> {
        if self.params.ell != 2 {
            return Err(Error::precondition(format!(
                "repeat position needs l = 2, got l = {}",
                self.params.ell
            )));
        }
        let v0 = self.first();
        Ok((1..self.len())
            .find(|&j| self.entries[j] == v0)
            .expect("valid string repeats its first symbol"))
    }

    /// `L(v) = { j >= 1 : v_j = v_0 }`, which has `ell - 1` elements.
    pub fn list_assignment(&self) -> Result<Vec<usize>> {
        if self.params.ell < 2 {
            return Err(Error::precondition("list assignment needs l >= 2"));
        }
        let v0 = self.first();
        Ok((1..self.len()).filter(|&j| self.entries[j] == v0).collect())
    }

    /// Lexicographic rank among all strings with the same parameters.
    pub fn rank(&self) -> usize {
        let mut counts = vec![self.params.ell; self.params.k];
        let mut remaining = self.len();
        // arrangements of the remaining multiset
        let mut arrangements = self.params.vertex_count().expect("rank of oversized instance");
        let mut rank: u128 = 0;
        for &s in &self.entries {
            let s = s as usize;
            for &c in counts.iter().take(s) {
                rank += arrangements * c as u128 / remaining as u128;
            }
            arrangements = arrangements * counts[s] as u128 / remaining as u128;
            counts[s] -= 1;
            remaining -= 1;
        }
        rank as usize
    }

    /// Inverse of [`MString::rank`].
    pub fn unrank(params: Params, index: usize) -> Result<MString> {
        let total = params.vertex_count().ok_or_else(|| Error::InstanceTooLarge {
            what: "vertex count".into(),
            count: u128::MAX,
            cap: u128::MAX,
        })?;
        if index as u128 >= total {
            return Err(Error::OutOfRange {
                what: "rank",
                value: index as i64,
                allowed: format!("0..{total}"),
            });
        }
        let mut counts = vec![params.ell; params.k];
        let mut remaining = params.len();
        let mut arrangements = total;
        let mut index = index as u128;
        let mut entries = Vec::with_capacity(params.len());
        while remaining > 0 {
            for (s, count) in counts.iter_mut().enumerate() {
                if *count == 0 {
                    continue;
                }
                let block = arrangements * *count as u128 / remaining as u128;
                if index < block {
                    entries.push(s as u8);
                    arrangements = block;
                    *count -= 1;
                    remaining -= 1;
                    break;
                }
                index -= block;
            }
        }
        Ok(MString::from_raw(params, entries))
    }
}

impl fmt::Display for MString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.params.k <= 10 {
            for &s in &self.entries {
                write!(f, "{s}")?;
            }
        } else {
            for (i, &s) in self.entries.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MString({self})")
    }
}

/// Rearranges `entries` into the next lexicographic permutation; returns
/// `false` when `entries` was already the last one.
pub(crate) fn next_permutation(entries: &mut [u8]) -> bool {
    let n = entries.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && entries[i - 1] >= entries[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while entries[j] <= entries[i - 1] {
        j -= 1;
    }
    entries.swap(i - 1, j);
    entries[i..].reverse();
    true
}

/// All `ell`-set permutations in lexicographic order, refusing instances with
/// more than [`DEFAULT_VERTEX_CAP`] vertices.
pub fn enumerate_vertices(params: Params) -> Result<Vec<MString>> {
    enumerate_vertices_capped(params, DEFAULT_VERTEX_CAP)
}

pub fn enumerate_vertices_capped(params: Params, cap: u128) -> Result<Vec<MString>> {
    let n = params.checked_vertex_count(cap)?;
    let mut out = Vec::with_capacity(n);
    let mut current = params.identity().entries;
    loop {
        out.push(MString::from_raw(params, current.clone()));
        if !next_permutation(&mut current) {
            break;
        }
    }
    debug_assert_eq!(out.len(), n);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: usize, ell: usize) -> Params {
        Params::new(k, ell).unwrap()
    }

    fn ms(k: usize, ell: usize, s: &str) -> MString {
        MString::parse(p(k, ell), s).unwrap()
    }

    fn factorial(n: u128) -> u128 {
        (1..=n).product()
    }

    #[test]
    fn enumerates_six_strings_for_k2_l2() {
        let names: Vec<String> = enumerate_vertices(p(2, 2))
            .unwrap()
            .iter()
            .map(|v| v.to_string())
            .collect();
        assert_eq!(names, ["0011", "0101", "0110", "1001", "1010", "1100"]);
    }

    #[test]
    fn counts_match_multinomial() {
        assert_eq!(enumerate_vertices(p(3, 2)).unwrap().len(), 90);
        let ones = enumerate_vertices(p(1, 5)).unwrap();
        assert_eq!(ones.len(), 1);
        assert_eq!(ones[0].to_string(), "00000");
        for k in 1..=4 {
            for ell in 1..=3 {
                let expected = factorial((k * ell) as u128) / factorial(ell as u128).pow(k as u32);
                let got = enumerate_vertices(p(k, ell)).unwrap().len() as u128;
                assert_eq!(got, expected, "k={k} l={ell}");
                assert_eq!(p(k, ell).vertex_count(), Some(expected));
            }
        }
    }

    #[test]
    fn cap_rejects_large_instances() {
        let err = enumerate_vertices_capped(p(4, 2), 1000).unwrap_err();
        assert!(matches!(err, Error::InstanceTooLarge { count: 2520, .. }));
        assert!(matches!(
            enumerate_vertices(p(20, 3)),
            Err(Error::InstanceTooLarge { .. })
        ));
    }

    #[test]
    fn rank_and_unrank_extremes() {
        assert_eq!(ms(2, 2, "0011").rank(), 0);
        assert_eq!(MString::unrank(p(2, 2), 5).unwrap().to_string(), "1100");
        assert!(MString::unrank(p(2, 2), 6).is_err());
    }

    #[test]
    fn rank_roundtrip_exhaustive_k3_l2() {
        let all = enumerate_vertices(p(3, 2)).unwrap();
        for (i, v) in all.iter().enumerate() {
            assert_eq!(v.rank(), i);
            assert_eq!(&MString::unrank(p(3, 2), i).unwrap(), v);
        }
    }

    #[test]
    fn star_neighbors_examples() {
        let got: Vec<(usize, String)> = ms(2, 2, "0011")
            .star_neighbors()
            .into_iter()
            .map(|(j, w)| (j, w.to_string()))
            .collect();
        assert_eq!(got, [(2, "1001".into()), (3, "1010".into())]);

        let got: Vec<(usize, String)> = ms(3, 2, "100122")
            .star_neighbors()
            .into_iter()
            .map(|(j, w)| (j, w.to_string()))
            .collect();
        assert_eq!(
            got,
            [
                (1, "010122".into()),
                (2, "001122".into()),
                (4, "200112".into()),
                (5, "200121".into())
            ]
        );
        assert!(ms(1, 4, "0000").star_neighbors().is_empty());
    }

    #[test]
    fn prefix_reversal_examples() {
        assert_eq!(ms(2, 2, "0011").prefix_reversal(3).unwrap().to_string(), "1100");
        assert_eq!(ms(3, 2, "001122").prefix_reversal(2).unwrap().to_string(), "100122");
        assert_eq!(ms(2, 2, "0101").prefix_reversal(2).unwrap().to_string(), "0101");
        assert!(ms(2, 2, "0101").prefix_reversal(0).is_err());
        assert!(ms(2, 2, "0101").prefix_reversal(4).is_err());
    }

    #[test]
    fn repeat_positions_and_lists() {
        assert_eq!(ms(2, 2, "0011").repeat_position().unwrap(), 1);
        assert_eq!(ms(2, 2, "0101").repeat_position().unwrap(), 2);
        assert_eq!(ms(2, 2, "0110").repeat_position().unwrap(), 3);
        assert!(ms(2, 3, "000111").repeat_position().is_err());

        assert_eq!(ms(2, 3, "010011").list_assignment().unwrap(), vec![2, 3]);
        assert_eq!(ms(2, 2, "0011").list_assignment().unwrap(), vec![1]);
        assert!(ms(3, 1, "012").list_assignment().is_err());
    }

    #[test]
    fn parsing_rejects_bad_strings() {
        assert!(MString::parse(p(2, 2), "0012").is_err());
        assert!(MString::parse(p(2, 2), "001").is_err());
        assert!(MString::parse(p(2, 2), "0111").is_err());
        assert!(MString::parse(p(2, 2), "0x11").is_err());
        assert_eq!(MString::parse(p(2, 2), "0,1,1,0").unwrap().to_string(), "0110");
    }

    #[test]
    fn wide_alphabets_render_with_commas() {
        let v = p(11, 1).identity();
        assert_eq!(v.to_string(), "0,1,2,3,4,5,6,7,8,9,10");
        assert_eq!(MString::parse(p(11, 1), &v.to_string()).unwrap(), v);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_vertex() -> impl Strategy<Value = MString> {
            (1usize..=4, 1usize..=3).prop_flat_map(|(k, ell)| {
                let params = Params::new(k, ell).unwrap();
                let n = params.vertex_count().unwrap() as usize;
                (0..n).prop_map(move |i| MString::unrank(params, i).unwrap())
            })
        }

        proptest! {
            #[test]
            fn star_neighbors_are_symmetric(v in arb_vertex()) {
                let nbrs = v.star_neighbors();
                prop_assert_eq!(nbrs.len(), (v.params().k - 1) * v.params().ell);
                for (j, w) in nbrs {
                    let back = w.star_neighbors();
                    prop_assert!(back.iter().any(|(i, u)| *i == j && *u == v));
                }
            }

            #[test]
            fn prefix_reversal_is_an_involution(v in arb_vertex(), j in 1usize..12) {
                prop_assume!(j < v.len());
                let w = v.prefix_reversal(j).unwrap();
                prop_assert_eq!(w.prefix_reversal(j).unwrap(), v);
            }

            #[test]
            fn rank_inverts_unrank(v in arb_vertex()) {
                prop_assert_eq!(MString::unrank(v.params(), v.rank()).unwrap(), v);
            }

            #[test]
            fn lists_of_adjacent_vertices_are_disjoint(v in arb_vertex()) {
                prop_assume!(v.params().ell >= 2);
                let lv = v.list_assignment().unwrap();
                prop_assert_eq!(lv.len(), v.params().ell - 1);
                if v.params().ell == 2 {
                    prop_assert_eq!(lv.clone(), vec![v.repeat_position().unwrap()]);
                }
                for (_, w) in v.star_neighbors() {
                    let lw = w.list_assignment().unwrap();
                    prop_assert!(lv.iter().all(|j| !lw.contains(j)));
                }
            }
        }
    }
}
