//! Permutation algebra on `{1, ..., d}` and integer partitions.
//!
//! Points are stored 0-based; every textual form (cycle notation, one-line
//! notation) is 1-based.
//!
//! **Composition is right-to-left**: `p.compose(&q)` is the map
//! `x -> p(q(x))`, so a product written `s2 . t_r . ... . t_1 . s1` is built
//! as `s2.compose(&t_r)...compose(&s1)` and `s1` acts first.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use smallvec::SmallVec;

use crate::error::{HurwitzError, Result};

/// Default cap on the degree accepted by the counting routines.
pub const DEFAULT_MAX_DEGREE: usize = 16;

/// Degree cap, overridable through the `HNUM_MAX_D` environment variable.
pub fn degree_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("HNUM_MAX_D")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_DEGREE)
    })
}

pub(crate) fn check_degree(d: usize) -> Result<()> {
    let cap = degree_cap();
    if d > cap || d > u8::MAX as usize {
        return Err(HurwitzError::DegreeTooLarge { degree: d, cap });
    }
    Ok(())
}

type Images = SmallVec<[u8; 16]>;

/// A bijection of `{0, ..., d-1}` in one-line form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Images,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation {
            images: (0..d as u8).collect(),
        }
    }

    /// Builds from 0-based images, validating bijectivity.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let d = images.len();
        if d > u8::MAX as usize {
            return Err(HurwitzError::InvalidPermutation(format!("degree {d} too large")));
        }
        let mut seen = vec![false; d];
        for &x in images {
            if x >= d || seen[x] {
                return Err(HurwitzError::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 0..{d}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// Builds from a 1-based one-line array such as `[2,3,1]`.
    pub fn from_one_line(one_based: &[usize]) -> Result<Self> {
        if one_based.contains(&0) {
            return Err(HurwitzError::InvalidPermutation("points are 1-based".into()));
        }
        let zero: Vec<usize> = one_based.iter().map(|&x| x - 1).collect();
        Self::from_images(&zero)
    }

    /// Builds a permutation of degree `d` from disjoint 1-based cycles.
    pub fn from_cycles(d: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..d).collect();
        let mut touched = vec![false; d];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a == 0 || a > d {
                    return Err(HurwitzError::InvalidPermutation(format!("point {a} outside 1..={d}")));
                }
                if touched[a - 1] {
                    return Err(HurwitzError::InvalidPermutation(format!(
                        "point {a} repeated in cycles"
                    )));
                }
                touched[a - 1] = true;
                let b = cycle[(i + 1) % cycle.len()];
                images[a - 1] = b - 1;
            }
        }
        Self::from_images(&images)
    }

    /// The transposition swapping 0-based points `a` and `b`.
    pub fn transposition(d: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(d);
        p.images.swap(a, b);
        p
    }

    /// The 3-cycle `a -> b -> c -> a` on 0-based points.
    pub fn three_cycle(d: usize, a: usize, b: usize, c: usize) -> Self {
        let mut p = Self::identity(d);
        p.images[a] = b as u8;
        p.images[b] = c as u8;
        p.images[c] = a as u8;
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// `x -> self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.same_degree(other)?;
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv: Images = smallvec::smallvec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// `g . self . g^-1`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation> {
        self.same_degree(g)?;
        Ok(g.compose_unchecked(&self.compose_unchecked(&g.inverse())))
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| self.images[x as usize] as usize == i)
    }

    /// True iff `g` is an involution with `g . self . g = self^-1`.
    pub fn is_reversed_by(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree() || !g.is_involution() {
            return false;
        }
        // g s g = s^-1  <=>  (g s)^2 = id
        g.compose_unchecked(self).is_involution()
    }

    /// Disjoint cycles (0-based), fixed points included, each starting at its
    /// smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(Vec::len).collect()).expect("cycle lengths are positive")
    }

    /// 1-based cycle notation, fixed points omitted; the identity prints `()`.
    pub fn to_cycle_string(&self) -> String {
        let parts: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                format!("({})", inner.join(" "))
            })
            .collect();
        if parts.is_empty() {
            "()".to_string()
        } else {
            parts.concat()
        }
    }

    /// 1-based one-line notation, e.g. `[2,3,1]`.
    pub fn to_one_line_string(&self) -> String {
        let inner: Vec<String> = self.images.iter().map(|x| (x + 1).to_string()).collect();
        format!("[{}]", inner.join(","))
    }

    /// Parses cycle notation for an explicit degree.
    pub fn parse_cycles(s: &str, d: usize) -> Result<Permutation> {
        let cycles = parse_cycle_groups(s)?;
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Permutation::from_cycles(d, &refs)
    }

    fn same_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(HurwitzError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }
}

fn parse_cycle_groups(s: &str) -> Result<Vec<Vec<usize>>> {
    let bad = || HurwitzError::InvalidPermutation(format!("cannot parse cycles `{s}`"));
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        rest = rest.strip_prefix('(').ok_or_else(bad)?;
        let close = rest.find(')').ok_or_else(bad)?;
        let body = &rest[..close];
        let points: Vec<usize> = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        if !points.is_empty() {
            out.push(points);
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(out)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_one_line_string())
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the one-line form.
impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.images.cmp(&other.images)
    }
}

/// Accepts `[2,3,1]` (one-line) or `(1 2 3)(4 5)` (cycles; the degree is the
/// largest point mentioned).
impl FromStr for Permutation {
    type Err = HurwitzError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(body) = t.strip_prefix('[') {
            let body = body
                .strip_suffix(']')
                .ok_or_else(|| HurwitzError::InvalidPermutation(format!("unterminated `{s}`")))?;
            let pts: Vec<usize> = body
                .split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| {
                    x.parse::<usize>()
                        .map_err(|_| HurwitzError::InvalidPermutation(format!("bad point `{x}`")))
                })
                .collect::<Result<_>>()?;
            return Permutation::from_one_line(&pts);
        }
        let groups = parse_cycle_groups(t)?;
        let d = groups.iter().flatten().copied().max().unwrap_or(0);
        let refs: Vec<&[usize]> = groups.iter().map(Vec::as_slice).collect();
        Permutation::from_cycles(d, &refs)
    }
}

/// True iff the orbit of point 0 under the group generated by `gens` is all
/// of `{0, ..., d-1}`. Computed by union-find on points.
pub fn is_transitive(gens: &[Permutation], d: usize) -> bool {
    if d <= 1 {
        return true;
    }
    let mut uf = UnionFind::new(d);
    for g in gens {
        debug_assert_eq!(g.degree(), d);
        for x in 0..d {
            uf.union(x, g.apply(x));
        }
    }
    uf.components() == 1
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    count: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            count: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.count -= 1;
        }
    }

    pub(crate) fn components(&self) -> usize {
        self.count
    }
}

/// All involutions `g` with `g . sigma . g = sigma^-1`, lexicographically.
///
/// Built cycle by cycle: each cycle of `sigma` is either reversed onto itself
/// (one choice per axis) or swapped, reversed, with another cycle of the same
/// length.
pub fn reversing_involutions(sigma: &Permutation) -> Vec<Permutation> {
    let d = sigma.degree();
    let cycles = sigma.cycles();
    let mut out = Vec::new();
    let mut images = vec![usize::MAX; d];
    let mut used = vec![false; cycles.len()];
    extend_reversals(&cycles, &mut used, &mut images, &mut out);
    out.sort();
    out
}

fn extend_reversals(cycles: &[Vec<usize>], used: &mut [bool], images: &mut [usize], out: &mut Vec<Permutation>) {
    let Some(first) = used.iter().position(|u| !u) else {
        out.push(Permutation::from_images(images).expect("reversal is a bijection"));
        return;
    };
    let c = &cycles[first];
    let l = c.len();
    used[first] = true;
    for t in 0..l {
        for j in 0..l {
            images[c[j]] = c[(t + l - j) % l];
        }
        extend_reversals(cycles, used, images, out);
    }
    for other in first + 1..cycles.len() {
        if used[other] || cycles[other].len() != l {
            continue;
        }
        let c2 = &cycles[other];
        used[other] = true;
        for t in 0..l {
            for j in 0..l {
                images[c[j]] = c2[(t + l - j) % l];
                images[c2[(t + l - j) % l]] = c[j];
            }
            extend_reversals(cycles, used, images, out);
        }
        used[other] = false;
    }
    used[first] = false;
}

/// All permutations of cycle type `t`, each exactly once, in lexicographic
/// one-line order.
pub fn permutations_of_type(d: usize, t: &Partition) -> Result<std::vec::IntoIter<Permutation>> {
    if t.sum() != d {
        return Err(HurwitzError::PartitionSum {
            partition: t.to_string(),
            expected: d,
        });
    }
    check_degree(d)?;
    let mut remaining: Vec<(usize, usize)> = t.multiplicities();
    let mut images = vec![usize::MAX; d];
    let mut out = Vec::new();
    build_of_type(d, &mut remaining, &mut images, &mut out);
    out.sort();
    Ok(out.into_iter())
}

fn build_of_type(d: usize, remaining: &mut [(usize, usize)], images: &mut [usize], out: &mut Vec<Permutation>) {
    let Some(start) = images.iter().position(|&x| x == usize::MAX) else {
        out.push(Permutation::from_images(images).expect("cycle assembly is a bijection"));
        return;
    };
    let free: Vec<usize> = (start + 1..d).filter(|&x| images[x] == usize::MAX).collect();
    for idx in 0..remaining.len() {
        let (len, count) = remaining[idx];
        if count == 0 || len - 1 > free.len() {
            continue;
        }
        remaining[idx].1 -= 1;
        for_each_arrangement(&free, len - 1, &mut Vec::new(), &mut |tail| {
            let mut prev = start;
            for &x in tail {
                images[prev] = x;
                prev = x;
            }
            images[prev] = start;
            build_of_type(d, remaining, images, out);
            images[start] = usize::MAX;
            for &x in tail {
                images[x] = usize::MAX;
            }
        });
        remaining[idx].1 += 1;
    }
}

/// Calls `f` on every ordered selection of `k` distinct items from `pool`.
fn for_each_arrangement(pool: &[usize], k: usize, chosen: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    for &x in pool {
        if chosen.contains(&x) {
            continue;
        }
        chosen.push(x);
        for_each_arrangement(pool, k, chosen, f);
        chosen.pop();
    }
}

/// All 3-cycles of `S_d`, lexicographically; there are `2 * C(d, 3)`.
pub fn three_cycles(d: usize) -> Result<std::vec::IntoIter<Permutation>> {
    if d < 3 {
        return Err(HurwitzError::Precondition(format!("no 3-cycles in S_{d}")));
    }
    check_degree(d)?;
    let mut out = Vec::with_capacity(d * (d - 1) * (d - 2) / 3);
    for a in 0..d {
        for b in a + 1..d {
            for c in b + 1..d {
                out.push(Permutation::three_cycle(d, a, b, c));
                out.push(Permutation::three_cycle(d, a, c, b));
            }
        }
    }
    out.sort();
    Ok(out.into_iter())
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts non-increasingly; rejects zero parts. The empty
    /// partition is allowed (it shows up in tail decompositions).
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(HurwitzError::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// `(1, 1, ..., 1)` with `m` ones.
    pub fn ones(m: usize) -> Self {
        Partition { parts: vec![1; m] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `(lambda_oo, lambda_ee, lambda_o, lambda_e)`.
    pub fn tail_decomposition(&self) -> TailDecomposition {
        let mut dec = TailDecomposition::default();
        for (p, m) in self.multiplicities() {
            let (pairs, single) = if p % 2 == 1 {
                (&mut dec.odd_pairs, &mut dec.odd_single)
            } else {
                (&mut dec.even_pairs, &mut dec.even_single)
            };
            pairs.parts.extend(std::iter::repeat_n(p, m / 2));
            if m % 2 == 1 {
                single.parts.push(p);
            }
        }
        dec
    }

    /// Concatenation, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts).expect("parts stay positive")
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = HurwitzError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(HurwitzError::InvalidPartition("empty partition".into()));
        }
        let parts = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| HurwitzError::InvalidPartition(format!("bad part `{x}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// The four tails of a partition: repeated odd parts taken in pairs,
/// repeated even parts taken in pairs, and the leftover singles.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TailDecomposition {
    pub odd_pairs: Partition,
    pub even_pairs: Partition,
    pub odd_single: Partition,
    pub even_single: Partition,
}

impl TailDecomposition {
    pub fn reassemble(&self) -> Partition {
        let mut parts = Vec::new();
        for p in self.odd_pairs.parts().iter().chain(self.even_pairs.parts()) {
            parts.push(*p);
            parts.push(*p);
        }
        parts.extend_from_slice(self.odd_single.parts());
        parts.extend_from_slice(self.even_single.parts());
        Partition::new(parts).expect("parts stay positive")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Which of the `r` branch-point pairs are positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignSplitting {
    signs: Vec<Sign>,
}

impl SignSplitting {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignSplitting { signs }
    }

    pub fn all_plus(r: usize) -> Self {
        SignSplitting {
            signs: vec![Sign::Plus; r],
        }
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// Number of positive entries.
    pub fn positives(&self) -> usize {
        self.signs.iter().filter(|&&s| s == Sign::Plus).count()
    }

    /// The transposition-level sequence: every sign repeated twice.
    pub fn doubled(&self) -> Vec<Sign> {
        self.signs.iter().flat_map(|&s| [s, s]).collect()
    }

    /// All `2^r` sequences, in lexicographic order with `+` first.
    pub fn all(r: usize) -> Vec<SignSplitting> {
        (0..1u32 << r)
            .map(|mask| SignSplitting {
                signs: (0..r)
                    .map(|i| {
                        if mask >> (r - 1 - i) & 1 == 0 {
                            Sign::Plus
                        } else {
                            Sign::Minus
                        }
                    })
                    .collect(),
            })
            .collect()
    }

    /// All sequences of length `r` with exactly `s` positive entries.
    pub fn with_positives(r: usize, s: usize) -> Vec<SignSplitting> {
        Self::all(r).into_iter().filter(|x| x.positives() == s).collect()
    }
}

impl fmt::Display for SignSplitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.signs.iter().map(|s| s.as_char()).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for SignSplitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for SignSplitting {
    type Err = HurwitzError;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(HurwitzError::InvalidSigns(format!(
                    "unexpected `{other}` in `{s}`, expected only + and -"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        if signs.is_empty() {
            return Err(HurwitzError::InvalidSigns("empty sign string".into()));
        }
        Ok(SignSplitting { signs })
    }
}

/// `r = (l(lambda) + l(mu) + 2g - 2) / 2`, the number of 3-cycle branch points.
pub fn branch_count(g: usize, lambda: &Partition, mu: &Partition) -> Result<usize> {
    if lambda.sum() != mu.sum() {
        return Err(HurwitzError::PartitionSum {
            partition: mu.to_string(),
            expected: lambda.sum(),
        });
    }
    if lambda.len() % 2 != mu.len() % 2 {
        return Err(HurwitzError::ParityMismatch {
            left: lambda.len(),
            right: mu.len(),
        });
    }
    let twice = lambda.len() + mu.len() + 2 * g;
    if twice <= 2 {
        return Err(HurwitzError::DegenerateBranchData(format!(
            "r = (l(lambda)+l(mu)+2g-2)/2 = 0 for g={g}, lambda={lambda}, mu={mu}"
        )));
    }
    Ok((twice - 2) / 2)
}
