//! Universally enhanced covers and the enhanced number `E_g(lambda, mu)`.
//!
//! A universal cover matches the uncoloured pair templates and has no even
//! inner edge other than bridges. Its real structure is forced: the dotted
//! pairs are the forks at the two-ended vertices, and every splitting picks
//! out exactly one colouring.

use crate::error::{HurwitzError, Result};
use crate::par::Strategy;
use crate::perms::{Partition, Sign, SignSplitting};
use crate::tropical::cover::{Colour, CoverClass, Endpoint, EnhancedCover, KeyEdge, RealStructure, TropicalCover};
use crate::tropical::sweep::{check_type, classes, sweep, Mode};
use crate::tropical::templates::{match_pair, SlotKind};

fn key_edge(from: Endpoint, to: Endpoint, weight: usize, dotted: bool) -> KeyEdge {
    KeyEdge {
        from,
        to,
        weight,
        colour: None,
        dotted,
    }
}

/// The forced dotted pairs: both inputs of a first vertex with two inputs,
/// both outputs of a second vertex with two outputs. `None` if such a pair
/// is not a symmetric fork or circle.
fn forced_dotted(c: &TropicalCover) -> Option<Vec<[usize; 2]>> {
    let mut pairs = Vec::new();
    for i in 0..c.pairs {
        let (v1, v2) = (Endpoint::Vertex(2 * i), Endpoint::Vertex(2 * i + 1));
        let ins: Vec<usize> = (0..c.edges.len()).filter(|&k| c.edges[k].to == v1).collect();
        let outs: Vec<usize> = (0..c.edges.len()).filter(|&k| c.edges[k].from == v2).collect();
        for group in [ins, outs] {
            if let [a, b] = group[..] {
                if c.edges[a] != c.edges[b] {
                    return None;
                }
                if !pairs.contains(&[a, b]) {
                    pairs.push([a, b]);
                }
            }
        }
    }
    Some(pairs)
}

/// The cover with its forced dotted pairs and no colours, in normal form.
pub fn universal_structure(c: &TropicalCover) -> Result<EnhancedCover> {
    let dotted = forced_dotted(c).ok_or_else(|| HurwitzError::NotUniversal("a forced fork is not symmetric".into()))?;
    let edges = c
        .edges
        .iter()
        .enumerate()
        .map(|(k, e)| key_edge(e.from, e.to, e.weight, dotted.iter().any(|p| p.contains(&k))))
        .collect();
    EnhancedCover::from_key_edges(c.degree, c.pairs, edges)
}

fn universal_reason(c: &TropicalCover) -> Option<String> {
    let ec = match universal_structure(c) {
        Ok(ec) => ec,
        Err(e) => return Some(e.to_string()),
    };
    let c = &ec.cover;
    if let Some(k) =
        (0..c.edges.len()).find(|&k| c.edges[k].is_inner() && c.edges[k].weight % 2 == 0 && !c.is_bridge(k))
    {
        let e = &c.edges[k];
        return Some(format!(
            "even inner edge {}>{}:{} is not a bridge",
            e.from, e.to, e.weight
        ));
    }
    (0..c.pairs)
        .find(|&i| match_pair(&ec, i, Sign::Plus).is_empty())
        .map(|i| format!("pair {i} matches no template"))
}

/// Whether `c` is universally enhanced. `c` is assumed to be a valid cover.
pub fn is_universally_enhanced(c: &TropicalCover) -> bool {
    universal_reason(c).is_none()
}

fn require_universal(c: &TropicalCover) -> Result<EnhancedCover> {
    match universal_reason(c) {
        Some(why) => Err(HurwitzError::NotUniversal(why)),
        None => universal_structure(c),
    }
}

/// The unique colouring under which every pair matches a template of its
/// sign in `splitting`.
pub fn canonical_colouring(c: &TropicalCover, splitting: &SignSplitting) -> Result<RealStructure> {
    Ok(coloured_cover(c, splitting)?.real)
}

/// [`canonical_colouring`] applied, returned as a whole cover.
pub fn coloured_cover(c: &TropicalCover, splitting: &SignSplitting) -> Result<EnhancedCover> {
    let mut ec = require_universal(c)?;
    if splitting.len() != c.pairs {
        return Err(HurwitzError::InvalidSigns(format!(
            "expected {} signs, got {}",
            c.pairs,
            splitting.len()
        )));
    }
    let mut colours: Vec<Option<Colour>> = vec![None; ec.cover.edges.len()];
    for (i, &sign) in splitting.signs().iter().enumerate() {
        let found = match_pair(&ec, i, Sign::Plus);
        let [m] = &found[..] else {
            return Err(HurwitzError::LemmaViolation(format!(
                "pair {i} matches {} uncoloured templates",
                found.len()
            )));
        };
        for (slot, edges) in &m.slots {
            let SlotKind::Even(c) = slot.kind else { continue };
            let c = if sign == Sign::Minus { c.flipped() } else { c };
            for &k in edges {
                if colours[k].is_some_and(|x| x != c) {
                    return Err(HurwitzError::LemmaViolation(format!("edge {k} gets two colours")));
                }
                colours[k] = Some(c);
            }
        }
    }
    ec.real.colours = colours;
    Ok(ec)
}

/// `2^{|C ∩ I|} · prod w(e)` over dotted circles; with a single pair the
/// general multiplicity of the canonical colouring is used instead.
pub fn universal_mult(c: &TropicalCover) -> Result<u128> {
    let ec = require_universal(c)?;
    if c.pairs == 1 {
        return coloured_cover(c, &SignSplitting::all_plus(1))?.multiplicity();
    }
    let circles = ec.dotted_circles();
    let mut m = 1u128 << circles.len();
    for p in circles {
        m = m
            .checked_mul(ec.cover.edges[p[0]].weight as u128)
            .ok_or(HurwitzError::Overflow("universal multiplicity"))?;
    }
    Ok(m)
}

/// All universally enhanced covers of type `(g, lambda, mu)`, uncoloured,
/// sorted by canonical key.
pub fn enumerate_universal(g: usize, lambda: &Partition, mu: &Partition) -> Result<Vec<CoverClass>> {
    enumerate_universal_with(g, lambda, mu, Strategy::default())
}

pub fn enumerate_universal_with(
    g: usize,
    lambda: &Partition,
    mu: &Partition,
    strategy: Strategy,
) -> Result<Vec<CoverClass>> {
    let r = check_type(g, lambda, mu)?;
    let raw = sweep(lambda, mu, r, &Mode::Universal, strategy);
    let mut out = classes(lambda.sum(), r, raw)?;
    for class in &mut out {
        class.multiplicity = universal_mult(&class.cover.cover)?;
    }
    Ok(out)
}

/// `E_g(lambda, mu)`.
pub fn enhanced_number(g: usize, lambda: &Partition, mu: &Partition) -> Result<u128> {
    enumerate_universal(g, lambda, mu)?.iter().try_fold(0u128, |acc, c| {
        acc.checked_add(c.multiplicity)
            .ok_or(HurwitzError::Overflow("enhanced number"))
    })
}

/// Incremental builder: appends pairs left to right.
struct Builder {
    degree: usize,
    pairs: usize,
    edges: Vec<KeyEdge>,
}

impl Builder {
    fn new(degree: usize) -> Self {
        Builder {
            degree,
            pairs: 0,
            edges: Vec::new(),
        }
    }

    fn next_pair(&mut self) -> (Endpoint, Endpoint) {
        let i = self.pairs;
        self.pairs += 1;
        (Endpoint::Vertex(2 * i), Endpoint::Vertex(2 * i + 1))
    }

    fn edge(&mut self, from: Endpoint, to: Endpoint, weight: usize) {
        self.edges.push(key_edge(from, to, weight, false));
    }

    fn fork(&mut self, from: Endpoint, to: Endpoint, weight: usize) {
        self.edges.push(key_edge(from, to, weight, true));
        self.edges.push(key_edge(from, to, weight, true));
    }

    /// (ii): a symmetric fork of weight `k` joins a string arriving from
    /// `from` with weight `w`. Returns the new string end.
    fn join_fork(&mut self, from: Endpoint, w: usize, k: usize) -> (Endpoint, usize) {
        let (v1, v2) = self.next_pair();
        self.fork(Endpoint::NegInf, v1, k);
        self.edge(v1, v2, 2 * k);
        self.edge(from, v2, w);
        (v2, w + 2 * k)
    }

    /// (iv): a symmetric fork of weight `k` leaves the string.
    fn cut_fork(&mut self, from: Endpoint, w: usize, k: usize) -> (Endpoint, usize) {
        let (v1, v2) = self.next_pair();
        self.edge(from, v1, w);
        self.edge(v1, v2, 2 * k);
        self.fork(v2, Endpoint::PosInf, k);
        (v1, w - 2 * k)
    }

    /// (xii): the string keeps `keep`, the even rest bridges onto a new
    /// string entering with weight `enter`; `keep` leaves to `to`.
    fn hand_over(
        &mut self,
        from: Endpoint,
        w: usize,
        keep: usize,
        to: Endpoint,
        enter_from: Endpoint,
        enter: usize,
    ) -> (Endpoint, usize) {
        let (v1, v2) = self.next_pair();
        self.edge(from, v1, w);
        self.edge(v1, to, keep);
        self.edge(v1, v2, w - keep);
        self.edge(enter_from, v2, enter);
        (v2, w - keep + enter)
    }

    /// (xiii): an odd string splits into `w - 2` and 2 and rejoins.
    fn circle(&mut self, from: Endpoint, w: usize) -> (Endpoint, usize) {
        let (v1, v2) = self.next_pair();
        self.edge(from, v1, w);
        self.edge(v1, v2, w - 2);
        self.edge(v1, v2, 2);
        (v2, w)
    }

    fn finish(self) -> Result<EnhancedCover> {
        EnhancedCover::from_key_edges(self.degree, self.pairs, self.edges)
    }
}

/// A universally enhanced cover of type `(g, lambda, mu)` when
/// `l(lambda_o) = l(mu_o) > 0` and `lambda_e`, `mu_e` are empty.
pub fn build_nonvanishing_cover(g: usize, lambda: &Partition, mu: &Partition) -> Result<TropicalCover> {
    Ok(build_nonvanishing(g, lambda, mu)?.cover)
}

pub(crate) fn build_nonvanishing(g: usize, lambda: &Partition, mu: &Partition) -> Result<EnhancedCover> {
    let (tl, tm) = (lambda.tail_decomposition(), mu.tail_decomposition());
    let k = tl.odd_single.len();
    if k == 0 || tm.odd_single.len() != k || !tl.even_single.is_empty() || !tm.even_single.is_empty() {
        return Err(HurwitzError::HypothesisNotMet(format!(
            "need l(lambda_o) = l(mu_o) > 0 and no lambda_e, mu_e; got lambda={lambda}, mu={mu}"
        )));
    }
    if lambda.sum() == 1 {
        return Err(HurwitzError::HypothesisNotMet("degree 1 has no 3-cycles".into()));
    }
    let r = check_type(g, lambda, mu)?;
    let mut lo: Vec<usize> = tl.odd_single.parts().to_vec();
    let mut mo: Vec<usize> = tm.odd_single.parts().to_vec();
    lo.sort_unstable();
    mo.sort_unstable();

    let mut b = Builder::new(lambda.sum());
    let (mut at, mut w) = (Endpoint::NegInf, lo[k - 1]);
    for &t in tl.odd_pairs.parts().iter().chain(tl.even_pairs.parts()) {
        (at, w) = b.join_fork(at, w, t);
    }
    for i in 1..k {
        let keep = mo[i - 1];
        if w <= keep {
            return Err(HurwitzError::LemmaViolation(format!(
                "string {i} ends with {w} <= {keep}"
            )));
        }
        (at, w) = b.hand_over(at, w, keep, Endpoint::PosInf, Endpoint::NegInf, lo[k - 1 - i]);
    }
    if g > 0 && w < 3 {
        return Err(HurwitzError::HypothesisNotMet(format!(
            "no room for a circle on weight {w}"
        )));
    }
    for _ in 0..g {
        (at, w) = b.circle(at, w);
    }
    for &t in tm.odd_pairs.parts().iter().chain(tm.even_pairs.parts()) {
        (at, w) = b.cut_fork(at, w, t);
    }
    if w != mo[k - 1] {
        return Err(HurwitzError::LemmaViolation(format!(
            "last string ends with {w}, not {}",
            mo[k - 1]
        )));
    }
    b.edge(at, Endpoint::PosInf, w);
    let ec = b.finish()?;
    debug_assert_eq!(ec.cover.pairs, r);
    Ok(ec)
}

/// Where each block's open ends sit, for gluing.
struct Block {
    /// Second vertex of the opening (ii): its weight-1 left end.
    upper_in: Endpoint,
    /// First vertex of the closing (iv): its weight-1 right end.
    lower_out: Endpoint,
    /// First vertex of the first (xii): weight-1 right end of string 1.
    upper_out: Endpoint,
    /// Second vertex of the last (xii): weight-1 left end of the last string.
    lower_in: Endpoint,
}

fn strip(edges: &mut Vec<KeyEdge>, from: Endpoint, to: Endpoint) {
    let k = edges
        .iter()
        .position(|e| e.from == from && e.to == to && e.weight == 1 && !e.dotted)
        .expect("block end present");
    edges.remove(k);
}

fn block(b: &mut Builder, strings: usize) -> Block {
    let (mut at, mut w) = b.join_fork(Endpoint::NegInf, 1, 1);
    let upper_in = at;
    let (mut upper_out, mut lower_in) = (None, at);
    for _ in 1..strings {
        upper_out.get_or_insert(Endpoint::Vertex(2 * b.pairs));
        (at, w) = b.hand_over(at, w, 1, Endpoint::PosInf, Endpoint::NegInf, 1);
        lower_in = at;
    }
    let (lower_out, w) = b.cut_fork(at, w, 1);
    b.edge(lower_out, Endpoint::PosInf, w);
    Block {
        upper_in,
        lower_out,
        upper_out: upper_out.expect("at least one hand-over"),
        lower_in,
    }
}

fn factorial_usize(n: usize) -> usize {
    (1..=n).product()
}

fn nth_permutation(n: usize, mut index: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for left in (1..=n).rev() {
        let f = factorial_usize(left - 1);
        out.push(pool.remove(index / f));
        index %= f;
    }
    out
}

/// Blocks of the family for `m`: sizes in strings.
fn block_sizes(m: usize) -> Vec<usize> {
    let n = (m - 1) / 3;
    let first = match m % 3 {
        1 => 2,
        2 => 3,
        _ => 4,
    };
    let mut sizes = vec![2; n];
    sizes[0] = first;
    sizes
}

/// `floor((m-1)/3)!` universally enhanced covers of type `(0, 1^m, 1^m)`,
/// one per left-to-right arrangement of a fixed chain of blocks.
pub fn build_block_family(m: usize) -> Result<impl Iterator<Item = TropicalCover>> {
    if m <= 3 {
        return Err(HurwitzError::Precondition(format!("block family needs m > 3, got {m}")));
    }
    let sizes = block_sizes(m);
    let n = sizes.len();
    let total = factorial_usize(n);
    Ok((0..total).map(move |idx| glue_blocks(m, &sizes, &nth_permutation(n, idx)).cover))
}

/// Blocks `C_1..C_n` glued in chain order, `C_j` placed at position
/// `order[j]`.
fn glue_blocks(m: usize, sizes: &[usize], order: &[usize]) -> EnhancedCover {
    let n = sizes.len();
    let mut b = Builder::new(m);
    let mut placed: Vec<Option<Block>> = (0..n).map(|_| None).collect();
    let mut by_position: Vec<usize> = (0..n).collect();
    by_position.sort_by_key(|&j| order[j]);
    for &j in &by_position {
        placed[j] = Some(block(&mut b, sizes[j]));
    }
    let blocks: Vec<Block> = placed.into_iter().map(|x| x.expect("placed")).collect();
    for j in 0..n.saturating_sub(1) {
        let (a, c) = (&blocks[j], &blocks[j + 1]);
        let (from, to) = if order[j + 1] > order[j] {
            (a.lower_out, c.upper_in)
        } else {
            (c.upper_out, a.lower_in)
        };
        strip(&mut b.edges, from, Endpoint::PosInf);
        strip(&mut b.edges, Endpoint::NegInf, to);
        b.edge(from, to, 1);
    }
    b.finish().expect("block family is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::cover::validate_cover;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn three_to_ones() {
        let classes = enumerate_universal(0, &p("3"), &p("1,1,1")).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(enhanced_number(0, &p("3"), &p("1,1,1")).unwrap(), 1);
        let c = &classes[0].cover.cover;
        assert!(is_universally_enhanced(c));
        for (s, want) in [("+", Colour::Blue), ("-", Colour::Red)] {
            let rho = canonical_colouring(c, &s.parse().unwrap()).unwrap();
            let bridge = c.bridges(0)[0];
            assert_eq!(rho.colours[bridge], Some(want));
            assert_eq!(rho.dotted.len(), 1);
        }
    }

    #[test]
    fn even_non_bridge_is_not_universal() {
        // (iii) then (i): the weight-2 edge between them is even and inner.
        let mut b = Builder::new(6);
        let (v1, v2) = b.next_pair();
        b.edge(Endpoint::NegInf, v1, 4);
        b.edge(v1, v2, 2);
        b.fork(v2, Endpoint::PosInf, 1);
        let (w1, w2) = b.next_pair();
        b.edge(v1, w2, 2);
        b.fork(Endpoint::NegInf, w1, 1);
        b.edge(w1, w2, 2);
        b.edge(w2, Endpoint::PosInf, 4);
        let ec = b.finish().unwrap();
        assert_eq!(validate_cover(&ec.cover, 0, &p("4,1,1"), &p("4,1,1")), Ok(()));
        assert!(!is_universally_enhanced(&ec.cover));
        assert!(matches!(universal_mult(&ec.cover), Err(HurwitzError::NotUniversal(_))));
    }

    #[test]
    fn nonvanishing_examples() {
        let c = build_nonvanishing_cover(0, &p("3"), &p("1,1,1")).unwrap();
        assert_eq!(validate_cover(&c, 0, &p("3"), &p("1,1,1")), Ok(()));
        let one = &enumerate_universal(0, &p("3"), &p("1,1,1")).unwrap()[0];
        assert_eq!(universal_structure(&c).unwrap().canonical_key(), one.key);

        let c1 = build_nonvanishing_cover(1, &p("3"), &p("1,1,1")).unwrap();
        assert_eq!(validate_cover(&c1, 1, &p("3"), &p("1,1,1")), Ok(()));
        assert_eq!(c1.genus(), 1);
        assert!(is_universally_enhanced(&c1));

        assert!(matches!(
            build_nonvanishing_cover(0, &p("2,1,1"), &p("2,1,1")),
            Err(HurwitzError::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn block_family_small() {
        for (m, count) in [(4, 1), (5, 1), (6, 1), (7, 2), (10, 6)] {
            let covers: Vec<_> = build_block_family(m).unwrap().collect();
            assert_eq!(covers.len(), count, "m={m}");
            let ones = Partition::ones(m);
            for c in &covers {
                assert_eq!(validate_cover(c, 0, &ones, &ones), Ok(()), "m={m}");
                assert!(is_universally_enhanced(c), "m={m}");
                assert_eq!(universal_mult(c).unwrap(), 1);
            }
        }
        assert!(build_block_family(3).is_err());
    }
}
