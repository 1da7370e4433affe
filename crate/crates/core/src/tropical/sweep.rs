//! Left-to-right sweep enumeration of enhanced covers.
//!
//! The sweep keeps the multiset of edges crossing the current vertical line
//! ("actives"). Each pair applies one template: it consumes actives, emits
//! the finished edges, and pushes the new actives. Identical actives are
//! chosen once, so isomorphic covers are generated only from distinct
//! choices; a canonical-key set removes whatever coincidences remain.

use std::collections::BTreeMap;

use crate::error::{HurwitzError, Result};
use crate::par::{self, Strategy};
use crate::perms::{branch_count, check_degree, Partition, Sign, SignSplitting, UnionFind};
use crate::tropical::cover::{Colour, CoverClass, Endpoint, EnhancedCover, KeyEdge};
use crate::tropical::templates::{signed_templates, PairTemplate, Slot, SlotKind, Structure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum ActiveKind {
    Odd,
    Even(Option<Colour>),
    /// A symmetric pair; `weight` is per edge.
    Dotted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Active {
    weight: usize,
    kind: ActiveKind,
    origin: Endpoint,
}

impl Active {
    fn edge_count(&self) -> usize {
        if self.kind == ActiveKind::Dotted {
            2
        } else {
            1
        }
    }
}

/// Coloured sweep for one splitting, or the uncoloured universal sweep.
#[derive(Clone, Debug)]
pub(crate) enum Mode {
    Coloured(SignSplitting),
    Universal,
}

impl Mode {
    fn coloured(&self) -> bool {
        matches!(self, Mode::Coloured(_))
    }

    fn pool(&self, pair: usize) -> &'static [PairTemplate] {
        match self {
            Mode::Coloured(s) => signed_templates(s.signs()[pair]),
            Mode::Universal => signed_templates(Sign::Plus),
        }
    }

    fn accepts(&self, slot: &Slot, a: &Active) -> bool {
        let kind_ok = match (slot.kind, a.kind) {
            (SlotKind::Odd, ActiveKind::Odd) | (SlotKind::Dotted, ActiveKind::Dotted) => true,
            (SlotKind::Even(c), ActiveKind::Even(x)) => !self.coloured() || x == Some(c),
            _ => false,
        };
        kind_ok
            && match self {
                Mode::Coloured(_) => true,
                // no even inner edge may be consumed
                Mode::Universal => a.weight % 2 == 1 || a.origin == Endpoint::NegInf,
            }
    }

    fn produce(&self, slot: &Slot, weight: usize, origin: Endpoint) -> Option<Active> {
        let kind = match slot.kind {
            SlotKind::Odd if weight % 2 == 1 => ActiveKind::Odd,
            SlotKind::Even(c) if weight.is_multiple_of(2) => ActiveKind::Even(self.coloured().then_some(c)),
            SlotKind::Dotted => ActiveKind::Dotted,
            _ => return None,
        };
        Some(Active { weight, kind, origin })
    }

    fn colour(&self, slot: &Slot) -> Option<Colour> {
        match (self, slot.kind) {
            (Mode::Coloured(_), SlotKind::Even(c)) => Some(c),
            _ => None,
        }
    }

    fn fits_parity(slot: &Slot, w: usize) -> bool {
        match slot.kind {
            SlotKind::Odd => w % 2 == 1,
            SlotKind::Even(_) => w.is_multiple_of(2),
            SlotKind::Dotted => true,
        }
    }
}

#[derive(Clone, Debug)]
struct State {
    actives: Vec<Active>,
    edges: Vec<KeyEdge>,
}

impl State {
    fn take(&self, idx: usize) -> (Active, Vec<Active>) {
        let mut rest = self.actives.clone();
        let a = rest.remove(idx);
        (a, rest)
    }

    fn distinct(actives: &[Active]) -> impl Iterator<Item = usize> + '_ {
        (0..actives.len()).filter(move |&i| i == 0 || actives[i] != actives[i - 1])
    }
}

fn close(edges: &mut Vec<KeyEdge>, a: &Active, to: Endpoint) {
    let colour = match a.kind {
        ActiveKind::Even(c) => c,
        _ => None,
    };
    for _ in 0..a.edge_count() {
        edges.push(KeyEdge {
            from: a.origin,
            to,
            weight: a.weight,
            colour,
            dotted: a.kind == ActiveKind::Dotted,
        });
    }
}

fn bridge_edge(edges: &mut Vec<KeyEdge>, mode: &Mode, slot: &Slot, v1: usize, w: usize) {
    edges.push(KeyEdge {
        from: Endpoint::Vertex(v1),
        to: Endpoint::Vertex(v1 + 1),
        weight: w,
        colour: mode.colour(slot),
        dotted: false,
    });
}

fn finish(mut actives: Vec<Active>, edges: Vec<KeyEdge>) -> State {
    actives.sort();
    State { actives, edges }
}

/// All ways of applying template `t` at pair `pair` to `state`.
fn apply(mode: &Mode, t: &PairTemplate, pair: usize, state: &State) -> Vec<State> {
    let (v1, v2) = (2 * pair, 2 * pair + 1);
    let (p1, p2) = (Endpoint::Vertex(v1), Endpoint::Vertex(v2));
    let in1 = t.in1.as_ref().expect("every template has an incoming slot");
    let mut out = Vec::new();
    for i in State::distinct(&state.actives) {
        if !mode.accepts(in1, &state.actives[i]) {
            continue;
        }
        let (a1, rest) = state.take(i);
        let mut edges = state.edges.clone();
        close(&mut edges, &a1, p1);
        match t.shape.structure() {
            Structure::JoinJoin => {
                let bw = 2 * a1.weight;
                bridge_edge(&mut edges, mode, &t.bridge[0], v1, bw);
                let (in2, out2) = (t.in2.as_ref().expect("in2"), t.out2.as_ref().expect("out2"));
                for j in State::distinct(&rest) {
                    if !mode.accepts(in2, &rest[j]) {
                        continue;
                    }
                    let mut rest2 = rest.clone();
                    let a2 = rest2.remove(j);
                    let Some(o) = mode.produce(out2, bw + a2.weight, p2) else {
                        continue;
                    };
                    let mut e2 = edges.clone();
                    close(&mut e2, &a2, p2);
                    rest2.push(o);
                    out.push(finish(rest2, e2));
                }
            }
            Structure::CutCut => {
                let (out1, out2) = (t.out1.as_ref().expect("out1"), t.out2.as_ref().expect("out2"));
                for k in 1..=a1.weight / 2 {
                    let w1 = a1.weight - 2 * k;
                    if w1 == 0 || !Mode::fits_parity(out1, w1) {
                        continue;
                    }
                    let mut e = edges.clone();
                    bridge_edge(&mut e, mode, &t.bridge[0], v1, 2 * k);
                    let mut next = rest.clone();
                    next.push(mode.produce(out1, w1, p1).expect("parity checked"));
                    next.push(mode.produce(out2, k, p2).expect("dotted"));
                    out.push(finish(next, e));
                }
            }
            Structure::Circle => {
                let out2 = t.out2.as_ref().expect("out2");
                let (s1, s2) = (&t.bridge[0], &t.bridge[1]);
                let symmetric = s1.kind == s2.kind;
                for w1 in 1..a1.weight {
                    let w2 = a1.weight - w1;
                    if !Mode::fits_parity(s1, w1) || !Mode::fits_parity(s2, w2) || symmetric && w1 > w2 {
                        continue;
                    }
                    let mut e = edges.clone();
                    bridge_edge(&mut e, mode, s1, v1, w1);
                    bridge_edge(&mut e, mode, s2, v1, w2);
                    let mut next = rest.clone();
                    let Some(o) = mode.produce(out2, a1.weight, p2) else {
                        continue;
                    };
                    next.push(o);
                    out.push(finish(next, e));
                }
            }
            Structure::CutJoin => {
                let out1 = t.out1.as_ref().expect("out1");
                let (in2, out2) = (t.in2.as_ref().expect("in2"), t.out2.as_ref().expect("out2"));
                let sb = &t.bridge[0];
                for w1 in 1..a1.weight {
                    let bw = a1.weight - w1;
                    if !Mode::fits_parity(out1, w1) || !Mode::fits_parity(sb, bw) {
                        continue;
                    }
                    let first = mode.produce(out1, w1, p1).expect("parity checked");
                    for j in State::distinct(&rest) {
                        if !mode.accepts(in2, &rest[j]) {
                            continue;
                        }
                        let mut rest2 = rest.clone();
                        let a2 = rest2.remove(j);
                        let Some(o) = mode.produce(out2, bw + a2.weight, p2) else {
                            continue;
                        };
                        let mut e = edges.clone();
                        bridge_edge(&mut e, mode, sb, v1, bw);
                        close(&mut e, &a2, p2);
                        rest2.push(first);
                        rest2.push(o);
                        out.push(finish(rest2, e));
                    }
                }
            }
        }
    }
    out
}

/// Lower bound on the components left after all remaining pairs: each pair
/// merges at most two components.
fn hopeless(state: &State, done_pairs: usize, pairs_left: usize, target_len: usize) -> bool {
    let ends: usize = state.actives.iter().map(Active::edge_count).sum();
    if ends.abs_diff(target_len) > 2 * pairs_left {
        return true;
    }
    let v = 2 * done_pairs;
    let mut uf = UnionFind::new(v);
    for e in &state.edges {
        if let (Endpoint::Vertex(a), Endpoint::Vertex(b)) = (e.from, e.to) {
            uf.union(a, b);
        }
    }
    let loose = state.actives.iter().filter(|a| a.origin == Endpoint::NegInf).count();
    uf.components() + loose > pairs_left + 1
}

fn terminal(state: &State, mu: &Partition, pairs: usize) -> Option<Vec<KeyEdge>> {
    if state.actives.iter().any(|a| a.origin == Endpoint::NegInf) {
        return None;
    }
    let mut parts: Vec<usize> = state
        .actives
        .iter()
        .flat_map(|a| std::iter::repeat_n(a.weight, a.edge_count()))
        .collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    if parts != mu.parts() {
        return None;
    }
    let mut edges = state.edges.clone();
    for a in &state.actives {
        close(&mut edges, a, Endpoint::PosInf);
    }
    let mut uf = UnionFind::new(2 * pairs);
    for e in &edges {
        if let (Endpoint::Vertex(a), Endpoint::Vertex(b)) = (e.from, e.to) {
            uf.union(a, b);
        }
    }
    (uf.components() == 1).then(|| {
        edges.sort();
        edges
    })
}

fn initial_states(lambda: &Partition, mode: &Mode) -> Vec<State> {
    let mut states = vec![Vec::<Active>::new()];
    for (value, mult) in lambda.multiplicities() {
        let mut next = Vec::new();
        for base in &states {
            for dotted in 0..=mult / 2 {
                let singles = mult - 2 * dotted;
                let reds: Vec<Option<usize>> = if value % 2 == 0 && mode.coloured() {
                    (0..=singles).map(Some).collect()
                } else {
                    vec![None]
                };
                for red in reds {
                    let mut s = base.clone();
                    for _ in 0..dotted {
                        s.push(Active {
                            weight: value,
                            kind: ActiveKind::Dotted,
                            origin: Endpoint::NegInf,
                        });
                    }
                    for j in 0..singles {
                        let kind = if value % 2 == 1 {
                            ActiveKind::Odd
                        } else {
                            match red {
                                Some(r) if j < r => ActiveKind::Even(Some(Colour::Red)),
                                Some(_) => ActiveKind::Even(Some(Colour::Blue)),
                                None => ActiveKind::Even(None),
                            }
                        };
                        s.push(Active {
                            weight: value,
                            kind,
                            origin: Endpoint::NegInf,
                        });
                    }
                    next.push(s);
                }
            }
        }
        states = next;
    }
    states.into_iter().map(|a| finish(a, Vec::new())).collect()
}

fn descend(
    mode: &Mode,
    state: &State,
    pair: usize,
    pairs: usize,
    mu: &Partition,
    found: &mut BTreeMap<Vec<KeyEdge>, ()>,
) {
    if pair == pairs {
        if let Some(edges) = terminal(state, mu, pairs) {
            found.insert(edges, ());
        }
        return;
    }
    for t in mode.pool(pair) {
        for next in apply(mode, t, pair, state) {
            if !hopeless(&next, pair + 1, pairs - pair - 1, mu.len()) {
                descend(mode, &next, pair + 1, pairs, mu, found);
            }
        }
    }
}

/// Raw sweep: normalised edge lists of every class, sorted.
pub(crate) fn sweep(
    lambda: &Partition,
    mu: &Partition,
    pairs: usize,
    mode: &Mode,
    strategy: Strategy,
) -> Vec<Vec<KeyEdge>> {
    let mut seeds = Vec::new();
    for s in initial_states(lambda, mode) {
        for t in mode.pool(0) {
            for next in apply(mode, t, 0, &s) {
                if !hopeless(&next, 1, pairs - 1, mu.len()) {
                    seeds.push(next);
                }
            }
        }
    }
    let parts = par::map(&seeds, strategy, |seed| {
        let mut found = BTreeMap::new();
        descend(mode, seed, 1, pairs, mu, &mut found);
        found
    });
    let mut all = BTreeMap::new();
    for p in parts {
        all.extend(p);
    }
    all.into_keys().collect()
}

pub(crate) fn check_type(g: usize, lambda: &Partition, mu: &Partition) -> Result<usize> {
    check_degree(lambda.sum())?;
    branch_count(g, lambda, mu)
}

/// Isomorphism classes of enhanced real covers of type `(g, lambda, mu)`
/// whose pair signs reproduce `splitting`, sorted by canonical key.
pub fn enumerate_enhanced_covers(
    g: usize,
    lambda: &Partition,
    mu: &Partition,
    splitting: &SignSplitting,
) -> Result<Vec<CoverClass>> {
    enumerate_enhanced_covers_with(g, lambda, mu, splitting, Strategy::default())
}

pub fn enumerate_enhanced_covers_with(
    g: usize,
    lambda: &Partition,
    mu: &Partition,
    splitting: &SignSplitting,
    strategy: Strategy,
) -> Result<Vec<CoverClass>> {
    let r = check_type(g, lambda, mu)?;
    if splitting.len() != r {
        return Err(HurwitzError::InvalidSigns(format!(
            "expected {r} signs, got {} (`{splitting}`)",
            splitting.len()
        )));
    }
    let mode = Mode::Coloured(splitting.clone());
    classes(lambda.sum(), r, sweep(lambda, mu, r, &mode, strategy))
}

pub(crate) fn classes(degree: usize, pairs: usize, raw: Vec<Vec<KeyEdge>>) -> Result<Vec<CoverClass>> {
    let mut out = raw
        .into_iter()
        .map(|edges| {
            let cover = EnhancedCover::from_key_edges(degree, pairs, edges)?;
            let m = cover.multiplicity()?;
            Ok(CoverClass::new(cover, m))
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(out)
}

/// The enhanced multiplicity of a coloured cover.
pub fn mult_enhanced(cover: &EnhancedCover) -> Result<u128> {
    cover.multiplicity()
}

/// Sum of enhanced multiplicities over [`enumerate_enhanced_covers`].
pub fn real_hurwitz_tropical(g: usize, lambda: &Partition, mu: &Partition, splitting: &SignSplitting) -> Result<u128> {
    enumerate_enhanced_covers(g, lambda, mu, splitting)?
        .iter()
        .try_fold(0u128, |acc, c| {
            acc.checked_add(c.multiplicity)
                .ok_or(HurwitzError::Overflow("tropical sum"))
        })
}
