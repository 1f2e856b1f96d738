//! Greedy LZ77 factorization.
//!
//! Each phrase is the longest prefix of the remaining input that also starts at
//! an earlier position (the earlier occurrence may overlap the phrase itself).
//! Positions with no earlier occurrence of their symbol become literals.
//!
//! Phrase lengths come from the previous/next-smaller-value technique over the
//! suffix array: among all earlier suffixes, the one with the longest common
//! prefix with suffix `i` is either the nearest earlier suffix ranked just
//! below `i` or the nearest earlier suffix ranked just above it. Every phrase
//! is found with `O(len + 1)` symbol comparisons, so the parse is linear after
//! the suffix array.

use crate::error::Result;
use crate::suffix_array::{build_suffix_array, suffix_positions};
use crate::text::SymbolText;

const NIL: u32 = u32::MAX;

/// One factor of an LZ77 parse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Phrase {
    /// A symbol with no earlier occurrence.
    Literal(u32),
    /// `len` symbols copied from `source`, which lies strictly before the phrase.
    Copy { source: usize, len: usize },
}

impl Phrase {
    pub fn len(&self) -> usize {
        match *self {
            Phrase::Literal(_) => 1,
            Phrase::Copy { len, .. } => len,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// The phrase list of a greedy LZ77 parse.
///
/// Copy sources are canonical: the leftmost earlier occurrence of the phrase.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LzFactorization {
    phrases: Vec<Phrase>,
    total_length: usize,
}

impl LzFactorization {
    pub fn phrases(&self) -> &[Phrase] {
        &self.phrases
    }

    /// Number of phrases, `LZ(text)`.
    pub fn count(&self) -> usize {
        self.phrases.len()
    }

    pub fn total_length(&self) -> usize {
        self.total_length
    }

    /// Rebuilds the factorized symbols, copying overlapping sources symbol by symbol.
    pub fn decode(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.total_length);
        for phrase in &self.phrases {
            match *phrase {
                Phrase::Literal(s) => out.push(s),
                Phrase::Copy { source, len } => {
                    for k in 0..len {
                        let s = out[source + k];
                        out.push(s);
                    }
                }
            }
        }
        out
    }
}

/// Nearest earlier suffixes in rank order: `nb[p] = [psv, nsv]` hold the
/// position of the closest suffix ranked below / above `p` among positions
/// `< p`. The pair shares a cache line, halving the scattered writes.
fn smaller_value_neighbours(sa: &[u32]) -> Vec<[u32; 2]> {
    let mut nb = vec![[NIL; 2]; sa.len()];
    let mut stack: Vec<u32> = Vec::new();
    for &p in sa {
        while let Some(&top) = stack.last() {
            if top > p {
                nb[top as usize][1] = p;
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&top) = stack.last() {
            nb[p as usize][0] = top;
        }
        stack.push(p);
    }
    nb
}

fn common_prefix(s: &[u32], i: usize, j: u32) -> usize {
    if j == NIL {
        return 0;
    }
    let j = j as usize;
    s[i..]
        .iter()
        .zip(&s[j..])
        .take_while(|(a, b)| a == b)
        .count()
}

/// Runs the greedy parse, calling `visit(start, len, candidate_source)` per phrase.
/// `len == 0` marks a literal; otherwise `candidate_source` is some earlier
/// occurrence of the phrase (not necessarily the leftmost).
fn greedy_parse(symbols: &[u32], sa: &[u32], mut visit: impl FnMut(usize, usize, usize)) {
    assert!(
        symbols.len() < NIL as usize,
        "texts must be shorter than 2^32 - 1 symbols"
    );
    let nb = smaller_value_neighbours(sa);
    let n = symbols.len();
    let mut i = 0;
    while i < n {
        let [psv, nsv] = nb[i];
        let lp = common_prefix(symbols, i, psv);
        let ln = common_prefix(symbols, i, nsv);
        let (len, src) = if lp >= ln { (lp, psv) } else { (ln, nsv) };
        visit(i, len, src as usize);
        i += len.max(1);
    }
}

/// Start positions of every phrase in the greedy parse of `text`.
pub(crate) fn phrase_starts(text: &SymbolText) -> Result<Vec<usize>> {
    let sa = suffix_positions(text)?;
    let mut starts = Vec::new();
    greedy_parse(text.symbols(), &sa, |start, _, _| starts.push(start));
    Ok(starts)
}

/// Number of phrases in the greedy LZ77 parse of `text`.
///
/// Skips source canonicalization, so it is cheaper than [`lz_factorize`] but
/// always agrees with its phrase count.
///
/// # Panics
///
/// If `text` has `u32::MAX` symbols or more.
pub fn lz_phrase_count(text: &SymbolText) -> usize {
    let sa = suffix_positions(text).expect("text length fits in 32 bits");
    let mut count = 0;
    greedy_parse(text.symbols(), &sa, |_, _, _| count += 1);
    count
}

/// Greedy LZ77 factorization of `text` with leftmost copy sources.
pub fn lz_factorize(text: &SymbolText) -> Result<LzFactorization> {
    let symbols = text.symbols();
    let n = symbols.len();
    let sa = build_suffix_array(text)?;
    let sa32: Vec<u32> = sa.positions().iter().map(|&p| p as u32).collect();
    let mut raw = Vec::new();
    greedy_parse(symbols, &sa32, |start, len, _| raw.push((start, len)));

    let lcp = lcp_array(symbols, sa.positions(), sa.rank());
    let lcp_tree = MinTree::new(lcp.iter().map(|&v| v as u32));
    let pos_tree = MinTree::new(sa.positions().iter().map(|&p| p as u32));

    let phrases = raw
        .into_iter()
        .map(|(start, len)| {
            if len == 0 {
                return Phrase::Literal(symbols[start]);
            }
            // Suffixes sharing at least `len` symbols with `start` form a
            // contiguous rank interval; its minimum position is the leftmost source.
            let r = sa.rank()[start];
            let bound = len as u32;
            let lo = lcp_tree.last_below(r, bound).unwrap_or(0);
            let hi = lcp_tree
                .first_below(r + 1, bound)
                .map_or(n - 1, |x| x - 1);
            let source = pos_tree.range_min(lo, hi) as usize;
            debug_assert!(source < start);
            Phrase::Copy { source, len }
        })
        .collect();

    Ok(LzFactorization {
        phrases,
        total_length: n,
    })
}

/// Kasai et al.: `lcp[r]` is the common prefix length of suffixes ranked `r - 1` and `r`.
fn lcp_array(s: &[u32], sa: &[usize], rank: &[usize]) -> Vec<usize> {
    let n = s.len();
    let mut lcp = vec![0; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i];
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1];
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Range-minimum segment tree over `u32` with threshold searches.
struct MinTree {
    size: usize,
    len: usize,
    tree: Vec<u32>,
}

impl MinTree {
    fn new(values: impl ExactSizeIterator<Item = u32>) -> Self {
        let len = values.len();
        let size = len.next_power_of_two().max(1);
        let mut tree = vec![u32::MAX; 2 * size];
        for (i, v) in values.enumerate() {
            tree[size + i] = v;
        }
        for i in (1..size).rev() {
            tree[i] = tree[2 * i].min(tree[2 * i + 1]);
        }
        Self { size, len, tree }
    }

    /// Minimum over the inclusive range `lo..=hi`.
    fn range_min(&self, lo: usize, hi: usize) -> u32 {
        let (mut l, mut r) = (lo + self.size, hi + self.size + 1);
        let mut best = u32::MAX;
        while l < r {
            if l & 1 == 1 {
                best = best.min(self.tree[l]);
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                best = best.min(self.tree[r]);
            }
            l >>= 1;
            r >>= 1;
        }
        best
    }

    /// Smallest index `>= from` holding a value `< bound`.
    fn first_below(&self, from: usize, bound: u32) -> Option<usize> {
        if from >= self.len {
            return None;
        }
        self.first_below_in(1, 0, self.size, from, bound)
    }

    fn first_below_in(&self, node: usize, nl: usize, nr: usize, from: usize, bound: u32) -> Option<usize> {
        if nr <= from || self.tree[node] >= bound {
            return None;
        }
        if nr - nl == 1 {
            return Some(nl);
        }
        let mid = (nl + nr) / 2;
        self.first_below_in(2 * node, nl, mid, from, bound)
            .or_else(|| self.first_below_in(2 * node + 1, mid, nr, from, bound))
    }

    /// Largest index `<= upto` holding a value `< bound`.
    fn last_below(&self, upto: usize, bound: u32) -> Option<usize> {
        self.last_below_in(1, 0, self.size, upto, bound)
    }

    fn last_below_in(&self, node: usize, nl: usize, nr: usize, upto: usize, bound: u32) -> Option<usize> {
        if nl > upto || self.tree[node] >= bound {
            return None;
        }
        if nr - nl == 1 {
            return Some(nl);
        }
        let mid = (nl + nr) / 2;
        self.last_below_in(2 * node + 1, mid, nr, upto, bound)
            .or_else(|| self.last_below_in(2 * node, nl, mid, upto, bound))
    }
}
