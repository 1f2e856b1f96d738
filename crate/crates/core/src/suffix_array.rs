//! Suffix array construction by induced sorting (SA-IS).
//!
//! Runs in O(n + σ) time and O(n + σ) extra space, where σ is the alphabet
//! bound. The recursion works on reduced strings of at most half the length,
//! so the total work stays linear.

use crate::error::{Error, Result};
use crate::text::SymbolText;

const NONE: u32 = u32::MAX;

/// Lexicographically sorted suffix positions of a text, plus the inverse permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuffixArray {
    sa: Vec<usize>,
    rank: Vec<usize>,
}

impl SuffixArray {
    /// Suffix start positions in increasing lexicographic order.
    pub fn positions(&self) -> &[usize] {
        &self.sa
    }

    /// `rank()[p]` is the index of suffix `p` within [`positions`](Self::positions).
    pub fn rank(&self) -> &[usize] {
        &self.rank
    }

    pub fn len(&self) -> usize {
        self.sa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sa.is_empty()
    }

    pub fn into_positions(self) -> Vec<usize> {
        self.sa
    }
}

/// Builds the suffix array of `text` in linear time.
///
/// `SymbolText` guarantees every symbol is below its alphabet bound; callers
/// holding a raw slice should go through [`SymbolText::new`], which reports
/// out-of-bound symbols as [`Error::InvalidInput`](crate::Error::InvalidInput).
pub fn build_suffix_array(text: &SymbolText) -> Result<SuffixArray> {
    check_length(text.len())?;
    let sa: Vec<usize> = sa_is(text.symbols(), text.alphabet_bound() as usize)
        .into_iter()
        .map(|p| p as usize)
        .collect();
    let mut rank = vec![0; sa.len()];
    for (r, &p) in sa.iter().enumerate() {
        rank[p] = r;
    }
    Ok(SuffixArray { sa, rank })
}

fn check_length(n: usize) -> Result<()> {
    if n >= NONE as usize {
        return Err(Error::InvalidInput(format!(
            "texts must be shorter than {NONE} symbols, got {n}"
        )));
    }
    Ok(())
}

/// Suffix array as 32-bit positions, skipping the rank table.
pub(crate) fn suffix_positions(text: &SymbolText) -> Result<Vec<u32>> {
    check_length(text.len())?;
    Ok(sa_is(text.symbols(), text.alphabet_bound() as usize))
}

/// Symbol and S/L type in one word, `symbol << 1 | is_s`, so the random
/// accesses of induced sorting touch a single small array.
trait Packed: Copy + Eq {
    fn pack(symbol: u32, is_s: bool) -> Self;
    fn symbol(self) -> usize;
    fn is_s(self) -> bool;
}

macro_rules! packed {
    ($t:ty) => {
        impl Packed for $t {
            #[inline]
            fn pack(symbol: u32, is_s: bool) -> Self {
                ((symbol as $t) << 1) | is_s as $t
            }
            #[inline]
            fn symbol(self) -> usize {
                (self >> 1) as usize
            }
            #[inline]
            fn is_s(self) -> bool {
                self & 1 == 1
            }
        }
    };
}

packed!(u8);
packed!(u16);
packed!(u32);
packed!(u64);

/// SA-IS over symbols in `0..bound`. There is no explicit sentinel; the end of
/// the string is treated as smaller than every symbol.
fn sa_is(s: &[u32], bound: usize) -> Vec<u32> {
    match s.len() {
        0 => return Vec::new(),
        1 => return vec![0],
        2 => return if s[0] < s[1] { vec![0, 1] } else { vec![1, 0] },
        _ => {}
    }
    // Small alphabets with gaps (bytes plus delimiters, say) are renumbered
    // densely, order preserved, so they pack into one byte per symbol.
    if bound > 1 << 7 && bound <= 1 << 16 {
        let mut used = vec![false; bound];
        for &c in s {
            used[c as usize] = true;
        }
        let distinct = used.iter().filter(|&&u| u).count();
        if distinct <= 1 << 7 {
            let mut dense = vec![0u32; bound];
            let mut next = 0;
            for (c, &u) in used.iter().enumerate() {
                if u {
                    dense[c] = next;
                    next += 1;
                }
            }
            return sa_is_packed::<u8>(s, distinct, |c| dense[c as usize]);
        }
    }
    let same = |c: u32| c;
    if bound <= 1 << 7 {
        sa_is_packed::<u8>(s, bound, same)
    } else if bound <= 1 << 15 {
        sa_is_packed::<u16>(s, bound, same)
    } else if bound <= 1 << 31 {
        sa_is_packed::<u32>(s, bound, same)
    } else {
        sa_is_packed::<u64>(s, bound, same)
    }
}

/// `map` sends each symbol of `s` into `0..bound`, preserving order.
fn sa_is_packed<P: Packed>(s: &[u32], bound: usize, map: impl Fn(u32) -> u32) -> Vec<u32> {
    let n = s.len();

    // S-type or L-type; the last symbol is L-type relative to the end.
    let mut t = vec![P::pack(map(s[n - 1]), false); n];
    let mut next_s = false;
    for i in (0..n - 1).rev() {
        next_s = if s[i] == s[i + 1] { next_s } else { s[i] < s[i + 1] };
        t[i] = P::pack(map(s[i]), next_s);
    }

    // Bucket boundaries: start_l[c] is where L-type suffixes of c begin,
    // start_s[c] where S-type suffixes of c begin.
    let mut start_l = vec![0u32; bound + 1];
    let mut start_s = vec![0u32; bound + 1];
    for &x in &t {
        if x.is_s() {
            start_l[x.symbol() + 1] += 1;
        } else {
            start_s[x.symbol()] += 1;
        }
    }
    for c in 0..=bound {
        start_s[c] += start_l[c];
        if c < bound {
            start_l[c + 1] += start_s[c];
        }
    }

    let is_lms = |i: usize| i > 0 && !t[i - 1].is_s() && t[i].is_s();

    let mut sa = vec![NONE; n];
    let mut buf = vec![0u32; bound + 1];
    let mut induce = |sa: &mut [u32], lms: &[u32]| {
        sa.fill(NONE);
        buf.copy_from_slice(&start_s);
        for &d in lms {
            let c = t[d as usize].symbol();
            sa[buf[c] as usize] = d;
            buf[c] += 1;
        }
        buf.copy_from_slice(&start_l);
        let c = t[n - 1].symbol();
        sa[buf[c] as usize] = (n - 1) as u32;
        buf[c] += 1;
        for i in 0..n {
            let v = sa[i];
            if v != NONE && v >= 1 {
                let prev = t[v as usize - 1];
                if !prev.is_s() {
                    let c = prev.symbol();
                    sa[buf[c] as usize] = v - 1;
                    buf[c] += 1;
                }
            }
        }
        buf.copy_from_slice(&start_l);
        for i in (0..n).rev() {
            let v = sa[i];
            if v != NONE && v >= 1 {
                let prev = t[v as usize - 1];
                if prev.is_s() {
                    let c = prev.symbol() + 1;
                    buf[c] -= 1;
                    sa[buf[c] as usize] = v - 1;
                }
            }
        }
    };

    let lms: Vec<u32> = (1..n).filter(|&i| is_lms(i)).map(|i| i as u32).collect();
    let m = lms.len();

    induce(&mut sa, &lms);

    if m > 0 {
        let sorted_lms: Vec<u32> = sa
            .iter()
            .copied()
            .filter(|&v| v != NONE && is_lms(v as usize))
            .collect();
        // End of the LMS substring starting at `p`: the next LMS position, or `n`.
        let lms_end = |p: usize| (p + 1..n).find(|&q| is_lms(q)).unwrap_or(n);

        // Name LMS substrings; equal substrings share a name. Comparing packed
        // words also compares types, which agree whenever the symbols do.
        // LMS positions are at least two apart, so `p / 2` indexes a scratch
        // slot per substring inside the no longer needed `sa`.
        let scratch = &mut sa;
        let mut name = 0u32;
        scratch[sorted_lms[0] as usize / 2] = 0;
        let mut prev_end = lms_end(sorted_lms[0] as usize);
        for w in sorted_lms.windows(2) {
            let end_r = lms_end(w[1] as usize);
            let (mut l, mut r) = (w[0] as usize, w[1] as usize);
            let mut same = prev_end - l == end_r - r;
            if same {
                while l < prev_end && t[l] == t[r] {
                    l += 1;
                    r += 1;
                }
                if l == n || t[l] != t[r] {
                    same = false;
                }
            }
            if !same {
                name += 1;
            }
            scratch[w[1] as usize / 2] = name;
            prev_end = end_r;
        }
        let reduced: Vec<u32> = lms.iter().map(|&p| scratch[p as usize / 2]).collect();

        let reduced_sa = sa_is(&reduced, name as usize + 1);
        let sorted: Vec<u32> = reduced_sa.iter().map(|&i| lms[i as usize]).collect();
        induce(&mut sa, &sorted);
    }
    sa
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive(s: &[u32]) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..s.len()).collect();
        idx.sort_by(|&a, &b| s[a..].cmp(&s[b..]));
        idx
    }

    fn sa_of(s: &str) -> Vec<usize> {
        build_suffix_array(&SymbolText::from(s))
            .unwrap()
            .into_positions()
    }

    #[test]
    fn empty_text() {
        assert!(sa_of("").is_empty());
    }

    #[test]
    fn banana() {
        assert_eq!(sa_of("banana"), vec![5, 3, 1, 0, 4, 2]);
    }

    #[test]
    fn unary_runs() {
        assert_eq!(sa_of("aaa"), vec![2, 1, 0]);
        assert_eq!(sa_of("a"), vec![0]);
    }

    #[test]
    fn rank_is_inverse() {
        let sa = build_suffix_array(&SymbolText::from("mississippi")).unwrap();
        for (k, &p) in sa.positions().iter().enumerate() {
            assert_eq!(sa.rank()[p], k);
        }
    }

    #[test]
    fn delimiter_symbols_sort_after_bytes() {
        let t = SymbolText::new(vec![98, 256, 97, 257, 98], 258).unwrap();
        let sa = build_suffix_array(&t).unwrap();
        assert_eq!(sa.positions(), naive(t.symbols()).as_slice());
    }

    proptest! {
        #[test]
        fn matches_naive_sort(
            alphabet in prop::sample::select(vec![1u32, 2, 4, 26, 200, 300, 70_000]),
            raw in prop::collection::vec(any::<u32>(), 0..512),
        ) {
            let s: Vec<u32> = raw.iter().map(|x| x % alphabet).collect();
            let t = SymbolText::new(s.clone(), alphabet).unwrap();
            let sa = build_suffix_array(&t).unwrap();
            prop_assert_eq!(sa.positions().to_vec(), naive(&s));
        }

        #[test]
        fn sparse_symbols_match_naive_sort(raw in prop::collection::vec(0u32..6, 0..512)) {
            let s: Vec<u32> = raw.iter().map(|x| x * 9000 + 7).collect();
            let t = SymbolText::new(s.clone(), 60_000).unwrap();
            prop_assert_eq!(build_suffix_array(&t).unwrap().positions().to_vec(), naive(&s));
        }
    }
}
