//! Multi-indices, semistandard pairs and the chain structure of the neighbour
//! map.
//!
//! A semistandard pair `(i, j)` encodes the tableau of shape `(2,1^{N-1})`
//! with first column `i_1 < ... < i_N` and `j` to the right of `i_1`. All
//! positional parameters called `alpha` are 1-based, matching the usual
//! indexing of tableau rows.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::binomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    /// Validates `0 <= entry <= cap` for every entry.
    pub fn new(entries: Vec<u32>, cap: u32) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&e| e > cap) {
            return Err(Error::InvalidMultiIndex {
                entries: entries.clone(),
                reason: format!("entry {bad} exceeds cap {cap}"),
            });
        }
        Ok(Self(entries))
    }

    pub fn strictly_increasing(entries: Vec<u32>, cap: u32) -> Result<Self> {
        let m = Self::new(entries, cap)?;
        if !m.is_strictly_increasing() {
            return Err(Error::InvalidMultiIndex {
                entries: m.0,
                reason: "not strictly increasing".into(),
            });
        }
        Ok(m)
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        Self(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (t, e) in self.0.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// All strictly increasing elements of `{0..=c}^r` in lexicographic order.
pub fn enumerate_increasing(c: u32, r: usize) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let n = c as usize + 1;
    if r > n {
        return out;
    }
    let mut cur: Vec<u32> = (0..r as u32).collect();
    loop {
        out.push(MultiIndex(cur.clone()));
        // rightmost position that can still move
        let Some(pos) = (0..r).rev().find(|&t| (cur[t] as usize) < n - r + t) else {
            break;
        };
        cur[pos] += 1;
        for t in pos + 1..r {
            cur[t] = cur[t - 1] + 1;
        }
    }
    out
}

/// All weakly increasing elements of `{0..=c}^r` in lexicographic order.
pub fn enumerate_weakly_increasing(c: u32, r: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; r];
    loop {
        out.push(cur.clone());
        let Some(pos) = (0..r).rev().find(|&t| cur[t] < c) else {
            break;
        };
        cur[pos] += 1;
        for t in pos + 1..r {
            cur[t] = cur[pos];
        }
    }
    out
}

/// Sorted content multiset of a semistandard pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Content(Vec<u32>);

impl Content {
    pub fn from_unsorted(mut values: Vec<u32>) -> Self {
        values.sort_unstable();
        Self(values)
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    /// The repeated value, if any. Contents of semistandard pairs repeat at
    /// most one value.
    pub fn repeated(&self) -> Option<u32> {
        self.0.windows(2).find(|w| w[0] == w[1]).map(|w| w[0])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemistandardPair {
    i: MultiIndex,
    j: u32,
}

impl SemistandardPair {
    pub fn new(i: Vec<u32>, j: u32, d: u32) -> Result<Self> {
        let not_ss = |i: Vec<u32>| Error::NotSemistandard { i, j };
        if i.is_empty() || j > d {
            return Err(not_ss(i));
        }
        let i = match MultiIndex::strictly_increasing(i.clone(), d) {
            Ok(m) => m,
            Err(_) => return Err(not_ss(i)),
        };
        if i.0[0] > j {
            return Err(not_ss(i.0));
        }
        Ok(Self { i, j })
    }

    pub fn i(&self) -> &MultiIndex {
        &self.i
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    /// `N`, the length of the first column.
    pub fn n(&self) -> usize {
        self.i.len()
    }

    pub fn content(&self) -> Content {
        let mut v = self.i.0.clone();
        v.push(self.j);
        Content::from_unsorted(v)
    }

    /// Y-degree `|i| + j` of the vector `F(i, j)`.
    pub fn weight(&self) -> u32 {
        self.i.sum() + self.j
    }

    /// Maximal (1-based) `alpha` with `i_alpha <= j`.
    pub fn alpha(&self) -> usize {
        self.i.0.iter().rposition(|&x| x <= self.j).expect("i_1 <= j") + 1
    }

    pub fn is_fixed(&self) -> bool {
        self.i.0.contains(&self.j)
    }

    /// The neighbour: `j` swapped into position `alpha`, `i_alpha` pushed out.
    /// The result need not be semistandard.
    pub fn neighbour(&self) -> (MultiIndex, u32) {
        let alpha = self.alpha();
        let mut next = self.i.0.clone();
        let out = std::mem::replace(&mut next[alpha - 1], self.j);
        (MultiIndex(next), out)
    }

    /// Neighbour, if it is itself semistandard.
    pub fn neighbour_pair(&self) -> Option<SemistandardPair> {
        let (i, j) = self.neighbour();
        (i.0[0] <= j).then_some(SemistandardPair { i, j })
    }

    pub(crate) fn from_parts_unchecked(i: Vec<u32>, j: u32) -> Self {
        Self {
            i: MultiIndex(i),
            j,
        }
    }
}

impl fmt::Display for SemistandardPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Order by content (lexicographic on the sorted multiset), then by
/// decreasing `j`. Chains of the neighbour map are increasing in this order.
impl Ord for SemistandardPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.content()
            .cmp(&other.content())
            .then_with(|| other.j.cmp(&self.j))
    }
}

impl PartialOrd for SemistandardPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn pair_order(p: &SemistandardPair, q: &SemistandardPair) -> Result<Ordering> {
    if p.n() != q.n() {
        return Err(Error::ParameterMismatch(format!(
            "pairs with N = {} and N = {}",
            p.n(),
            q.n()
        )));
    }
    Ok(p.cmp(q))
}

/// The `N` semistandard pairs whose content is the set `a` (`|a| = N + 1`),
/// as iterated neighbours of `((a_1..a_N), a_{N+1})`.
pub fn chain(a: &[u32]) -> Result<Vec<SemistandardPair>> {
    let mut sorted = a.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::RepeatedContent(a.to_vec()));
    }
    if sorted.len() < 2 {
        return Err(Error::ParameterMismatch(format!(
            "content {a:?} must have at least two elements"
        )));
    }
    let b = sorted.pop().expect("nonempty");
    let n = sorted.len();
    let mut out = Vec::with_capacity(n);
    let mut cur = SemistandardPair::from_parts_unchecked(sorted, b);
    for _ in 1..n {
        let next = cur.neighbour_pair().ok_or_else(|| {
            Error::Consistency(format!("chain of {a:?} stopped early at {cur}"))
        })?;
        out.push(cur);
        cur = next;
    }
    out.push(cur);
    Ok(out)
}

/// Odometer over `[k_1,k_2) x ... x [k_N,k_{N+1})`, last coordinate fastest.
#[derive(Debug, Clone)]
pub struct BoxIter {
    lo: Vec<u32>,
    hi: Vec<u32>,
    cur: Option<Vec<u32>>,
}

impl Iterator for BoxIter {
    type Item = MultiIndex;

    fn next(&mut self) -> Option<MultiIndex> {
        let cur = self.cur.as_mut()?;
        let item = MultiIndex(cur.clone());
        let mut pos = cur.len();
        loop {
            if pos == 0 {
                self.cur = None;
                break;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] < self.hi[pos] {
                break;
            }
            cur[pos] = self.lo[pos];
        }
        Some(item)
    }
}

/// The box `B(k)` of a strictly increasing `k` of length `N + 1`.
pub fn box_of(k: &MultiIndex) -> Result<BoxIter> {
    if !k.is_strictly_increasing() || k.len() < 2 {
        return Err(Error::InvalidMultiIndex {
            entries: k.0.clone(),
            reason: "box needs a strictly increasing index of length >= 2".into(),
        });
    }
    let lo = k.0[..k.len() - 1].to_vec();
    let hi = k.0[1..].to_vec();
    Ok(BoxIter {
        cur: Some(lo.clone()),
        lo,
        hi,
    })
}

pub fn box_size(k: &MultiIndex) -> usize {
    k.0.windows(2).map(|w| (w[1] - w[0]) as usize).product()
}

/// `N * C(d+2, N+1)`.
pub fn count_ssyt_hook(n: u32, d: u32) -> BigInt {
    BigInt::from(n) * binomial(d as u64 + 2, n as u64 + 1)
}

/// All semistandard pairs for `(N, d)`, sorted by the pair order.
pub fn enumerate_semistandard(n: usize, d: u32) -> Vec<SemistandardPair> {
    let mut out = Vec::new();
    for i in enumerate_increasing(d, n) {
        for j in i.0[0]..=d {
            out.push(SemistandardPair { i: i.clone(), j });
        }
    }
    out.sort();
    out
}

/// Lemma-style bijection from the class `S_alpha` (pairs with
/// `i_alpha <= j < i_{alpha+1}`) to strictly increasing indices of length
/// `N + 1` with entries at most `d + 1`.
pub fn s_alpha_bijection(p: &SemistandardPair, alpha: usize) -> Result<MultiIndex> {
    if alpha == 0 || alpha > p.n() || p.alpha() != alpha {
        return Err(Error::NotInAlphaClass {
            i: p.i.0.clone(),
            j: p.j,
            alpha,
        });
    }
    let i = &p.i.0;
    let mut k = Vec::with_capacity(i.len() + 1);
    k.extend_from_slice(&i[..alpha]);
    k.push(p.j + 1);
    k.extend(i[alpha..].iter().map(|x| x + 1));
    Ok(MultiIndex(k))
}

pub fn s_alpha_inverse(k: &MultiIndex, alpha: usize, d: u32) -> Result<SemistandardPair> {
    let bad = || Error::InvalidMultiIndex {
        entries: k.0.clone(),
        reason: format!("not the image of a pair in S_{alpha}"),
    };
    let n = k.len().checked_sub(1).ok_or_else(bad)?;
    if alpha == 0 || alpha > n || !k.is_strictly_increasing() || k.0[alpha] == 0 {
        return Err(bad());
    }
    let mut i = k.0[..alpha].to_vec();
    i.extend(k.0[alpha + 1..].iter().map(|x| x - 1));
    let j = k.0[alpha] - 1;
    let p = SemistandardPair::new(i, j, d).map_err(|_| bad())?;
    if p.alpha() != alpha {
        return Err(bad());
    }
    Ok(p)
}

/// `(s, k)` with `s = alpha - 1` and `k` the `S_alpha` image of `p`: the
/// domain basis label whose image under the isomorphism has leading term
/// `F_Delta(p)`.
pub fn triangular_witness(p: &SemistandardPair) -> (u32, MultiIndex) {
    let alpha = p.alpha();
    let k = s_alpha_bijection(p, alpha).expect("alpha is maximal by construction");
    (alpha as u32 - 1, k)
}
