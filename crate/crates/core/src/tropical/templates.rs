//! The signed pair templates.
//!
//! Every pair of inner vertices `(v1, v2)` of an enhanced cover looks like
//! one of fourteen local pictures. Each picture has five slots: the edge(s)
//! entering `v1`, the edge leaving `v1` away from `v2`, the bridge edge(s)
//! from `v1` to `v2`, the edge entering `v2` from elsewhere, and the edge(s)
//! leaving `v2`. A dotted slot is a symmetric pair of edges of weight `k`
//! each. Slot labels are sums of variables: `e..` even, `o..` odd, `k` any.
//!
//! Negative templates are the positive ones with red and blue exchanged.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use smallvec::SmallVec;

use crate::oracle::{CycleClass, CycleKind, TransitionDescriptor};
use crate::perms::Sign;
use crate::tropical::cover::{Colour, Endpoint, EnhancedCover};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Shape {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
    XI,
    XII,
    XIII,
    XIV,
}

impl Shape {
    pub const ALL: [Shape; 14] = [
        Shape::I,
        Shape::II,
        Shape::III,
        Shape::IV,
        Shape::V,
        Shape::VI,
        Shape::VII,
        Shape::VIII,
        Shape::IX,
        Shape::X,
        Shape::XI,
        Shape::XII,
        Shape::XIII,
        Shape::XIV,
    ];

    pub fn roman(self) -> &'static str {
        const NAMES: [&str; 14] = [
            "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii", "xiii", "xiv",
        ];
        NAMES[self as usize]
    }

    /// The shape seen after reflecting the picture left to right.
    pub fn mirror(self) -> Shape {
        match self {
            Shape::I => Shape::III,
            Shape::III => Shape::I,
            Shape::II => Shape::IV,
            Shape::IV => Shape::II,
            Shape::VIII => Shape::X,
            Shape::X => Shape::VIII,
            Shape::VI => Shape::XI,
            Shape::XI => Shape::VI,
            s => s,
        }
    }

    pub fn structure(self) -> Structure {
        match self {
            Shape::I | Shape::II => Structure::JoinJoin,
            Shape::III | Shape::IV => Structure::CutCut,
            Shape::XIII | Shape::XIV => Structure::Circle,
            _ => Structure::CutJoin,
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.roman())
    }
}

/// How the two vertices of a pair act on the edges passing through.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Structure {
    /// A dotted pair joins into the bridge, which joins one more edge.
    JoinJoin,
    /// One edge splits off the bridge, which splits into a dotted pair.
    CutCut,
    /// One edge splits off the bridge, which joins one more edge.
    CutJoin,
    /// One edge splits into two bridges that join again.
    Circle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Orientation {
    AsDrawn,
    Reflected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SlotKind {
    Odd,
    Even(Colour),
    Dotted,
}

impl SlotKind {
    fn recoloured(self) -> SlotKind {
        match self {
            SlotKind::Even(c) => SlotKind::Even(c.flipped()),
            k => k,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slot {
    pub kind: SlotKind,
    pub label: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTemplate {
    pub shape: Shape,
    pub sign: Sign,
    pub orientation: Orientation,
    pub in1: Option<Slot>,
    pub out1: Option<Slot>,
    pub bridge: Vec<Slot>,
    pub in2: Option<Slot>,
    pub out2: Option<Slot>,
    /// Number of 3-cycles realising this pair from a fixed permutation.
    pub local_count: &'static str,
}

impl PairTemplate {
    pub fn slots(&self) -> impl Iterator<Item = &Slot> {
        self.in1
            .iter()
            .chain(self.out1.iter())
            .chain(self.bridge.iter())
            .chain(self.in2.iter())
            .chain(self.out2.iter())
    }
}

const fn s(kind: SlotKind, label: &'static str) -> Option<Slot> {
    Some(Slot { kind, label })
}

const O: SlotKind = SlotKind::Odd;
const B: SlotKind = SlotKind::Even(Colour::Blue);
const R: SlotKind = SlotKind::Even(Colour::Red);
const D: SlotKind = SlotKind::Dotted;

struct Row {
    shape: Shape,
    orientation: Orientation,
    in1: Option<Slot>,
    out1: Option<Slot>,
    bridge: &'static [Slot],
    in2: Option<Slot>,
    out2: Option<Slot>,
    count: &'static str,
}

const fn b(kind: SlotKind, label: &'static str) -> Slot {
    Slot { kind, label }
}

use Orientation::{AsDrawn, Reflected};

const POSITIVE: [Row; 14] = [
    Row {
        shape: Shape::I,
        orientation: Reflected,
        in1: s(D, "k"),
        out1: None,
        bridge: &[b(B, "2k")],
        in2: s(B, "e"),
        out2: s(B, "e+2k"),
        count: "4k",
    },
    Row {
        shape: Shape::II,
        orientation: Reflected,
        in1: s(D, "k"),
        out1: None,
        bridge: &[b(B, "2k")],
        in2: s(O, "o"),
        out2: s(O, "o+2k"),
        count: "2k",
    },
    Row {
        shape: Shape::III,
        orientation: AsDrawn,
        in1: s(B, "e+2k"),
        out1: s(B, "e"),
        bridge: &[b(B, "2k")],
        in2: None,
        out2: s(D, "k"),
        count: "2",
    },
    Row {
        shape: Shape::IV,
        orientation: AsDrawn,
        in1: s(O, "o+2k"),
        out1: s(O, "o"),
        bridge: &[b(B, "2k")],
        in2: None,
        out2: s(D, "k"),
        count: "1",
    },
    Row {
        shape: Shape::V,
        orientation: AsDrawn,
        in1: s(B, "e1'+e2'"),
        out1: s(B, "e1'"),
        bridge: &[b(B, "e2'")],
        in2: s(B, "e"),
        out2: s(B, "e2'+e"),
        count: "4",
    },
    Row {
        shape: Shape::VI,
        orientation: AsDrawn,
        in1: s(R, "o1+o2"),
        out1: s(O, "o1"),
        bridge: &[b(O, "o2")],
        in2: s(B, "e2"),
        out2: s(O, "o2+e2"),
        count: "4",
    },
    Row {
        shape: Shape::VII,
        orientation: AsDrawn,
        in1: s(R, "o1+o2"),
        out1: s(O, "o1"),
        bridge: &[b(O, "o2")],
        in2: s(O, "o"),
        out2: s(R, "o2+o"),
        count: "2",
    },
    Row {
        shape: Shape::VIII,
        orientation: AsDrawn,
        in1: s(B, "e1+e2"),
        out1: s(B, "e1"),
        bridge: &[b(B, "e2")],
        in2: s(O, "o"),
        out2: s(O, "e2+o"),
        count: "2",
    },
    Row {
        shape: Shape::IX,
        orientation: AsDrawn,
        in1: s(O, "e1+o1"),
        out1: s(B, "e1"),
        bridge: &[b(O, "o1")],
        in2: s(B, "e"),
        out2: s(O, "o1+e"),
        count: "2",
    },
    Row {
        shape: Shape::X,
        orientation: Reflected,
        in1: s(O, "o1+e1"),
        out1: s(O, "o1"),
        bridge: &[b(B, "e1")],
        in2: s(B, "e"),
        out2: s(B, "e1+e"),
        count: "2",
    },
    Row {
        shape: Shape::XI,
        orientation: Reflected,
        in1: s(O, "e1'+o1'"),
        out1: s(B, "e1'"),
        bridge: &[b(O, "o1'")],
        in2: s(O, "o2"),
        out2: s(R, "o1'+o2"),
        count: "1",
    },
    Row {
        shape: Shape::XII,
        orientation: AsDrawn,
        in1: s(O, "o1'+e1'"),
        out1: s(O, "o1'"),
        bridge: &[b(B, "e1'")],
        in2: s(O, "o2"),
        out2: s(O, "e1'+o2"),
        count: "1",
    },
    Row {
        shape: Shape::XIII,
        orientation: AsDrawn,
        in1: s(O, "o1+e1"),
        out1: None,
        bridge: &[b(O, "o1"), b(B, "e1")],
        in2: None,
        out2: s(O, "o1+e1"),
        count: "1",
    },
    Row {
        shape: Shape::XIV,
        orientation: AsDrawn,
        in1: s(B, "e1+e2"),
        out1: None,
        bridge: &[b(B, "e1"), b(B, "e2")],
        in2: None,
        out2: s(B, "e1+e2"),
        count: "4(2)",
    },
];

fn build(row: &Row, sign: Sign) -> PairTemplate {
    let paint = |slot: Option<Slot>| {
        slot.map(|x| match sign {
            Sign::Plus => x,
            Sign::Minus => Slot {
                kind: x.kind.recoloured(),
                label: x.label,
            },
        })
    };
    PairTemplate {
        shape: row.shape,
        sign,
        orientation: row.orientation,
        in1: paint(row.in1),
        out1: paint(row.out1),
        bridge: row.bridge.iter().map(|x| paint(Some(*x)).expect("some")).collect(),
        in2: paint(row.in2),
        out2: paint(row.out2),
        local_count: row.count,
    }
}

/// All 28 templates: the positive ones in shape order, then the negative ones.
pub fn templates() -> &'static [PairTemplate] {
    static TABLE: OnceLock<Vec<PairTemplate>> = OnceLock::new();
    TABLE.get_or_init(|| {
        [Sign::Plus, Sign::Minus]
            .into_iter()
            .flat_map(|sign| POSITIVE.iter().map(move |row| build(row, sign)))
            .collect()
    })
}

pub fn template(shape: Shape, sign: Sign) -> &'static PairTemplate {
    let offset = if sign == Sign::Plus { 0 } else { 14 };
    &templates()[offset + shape as usize]
}

pub fn signed_templates(sign: Sign) -> &'static [PairTemplate] {
    let t = templates();
    match sign {
        Sign::Plus => &t[..14],
        Sign::Minus => &t[14..],
    }
}

/// What actually sits in a slot of a pair of some cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObsKind {
    Odd,
    Even(Option<Colour>),
    Dotted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obs {
    /// Weight of one edge (for a dotted pair, of each of its two edges).
    pub weight: usize,
    pub kind: ObsKind,
    pub edges: SmallVec<[usize; 2]>,
}

impl Obs {
    fn bare(weight: usize, kind: ObsKind) -> Self {
        Obs {
            weight,
            kind,
            edges: SmallVec::new(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairView {
    pub in1: Vec<Obs>,
    pub out1: Vec<Obs>,
    pub bridge: Vec<Obs>,
    pub in2: Vec<Obs>,
    pub out2: Vec<Obs>,
}

/// Splits the edges at pair `i` into the five slot groups.
pub fn pair_view(ec: &EnhancedCover, i: usize) -> PairView {
    let (v1, v2) = (Endpoint::Vertex(2 * i), Endpoint::Vertex(2 * i + 1));
    let edges = &ec.cover.edges;
    let pick = |f: &dyn Fn(Endpoint, Endpoint) -> bool| -> Vec<Obs> {
        let ks: Vec<usize> = (0..edges.len()).filter(|&k| f(edges[k].from, edges[k].to)).collect();
        let mut out = Vec::new();
        let mut used = vec![false; ks.len()];
        for a in 0..ks.len() {
            if used[a] {
                continue;
            }
            let k = ks[a];
            let partner = ec
                .real
                .dotted
                .iter()
                .find(|p| p.contains(&k))
                .map(|p| if p[0] == k { p[1] } else { p[0] });
            if let Some(j) = partner.and_then(|p| ks.iter().position(|&x| x == p)) {
                used[j] = true;
                out.push(Obs {
                    weight: edges[k].weight,
                    kind: ObsKind::Dotted,
                    edges: SmallVec::from_slice(&[k, ks[j]]),
                });
            } else {
                let kind = if edges[k].weight % 2 == 1 {
                    ObsKind::Odd
                } else {
                    ObsKind::Even(ec.real.colours.get(k).copied().flatten())
                };
                out.push(Obs {
                    weight: edges[k].weight,
                    kind,
                    edges: SmallVec::from_slice(&[k]),
                });
            }
            used[a] = true;
        }
        out
    };
    PairView {
        in1: pick(&|_, t| t == v1),
        out1: pick(&|f, t| f == v1 && t != v2),
        bridge: pick(&|f, t| f == v1 && t == v2),
        in2: pick(&|f, t| t == v2 && f != v1),
        out2: pick(&|f, _| f == v2),
    }
}

fn kind_fits(slot: SlotKind, obs: ObsKind, coloured: bool) -> bool {
    match (slot, obs) {
        (SlotKind::Odd, ObsKind::Odd) | (SlotKind::Dotted, ObsKind::Dotted) => true,
        (SlotKind::Even(c), ObsKind::Even(o)) => !coloured || o == Some(c),
        _ => false,
    }
}

fn parse_label(label: &str) -> Vec<(usize, &str)> {
    label
        .split('+')
        .map(|term| {
            let split = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
            let coef = if split == 0 {
                1
            } else {
                term[..split].parse().expect("coefficient")
            };
            (coef, &term[split..])
        })
        .collect()
}

fn var_parity_ok(name: &str, value: usize) -> bool {
    value > 0
        && match name.as_bytes()[0] {
            b'e' => value.is_multiple_of(2),
            b'o' => value % 2 == 1,
            _ => true,
        }
}

/// Solves `label = weight` for all given pairs; returns the variable values.
pub fn solve_labels<'a>(eqs: &[(&'a str, usize)]) -> Option<BTreeMap<&'a str, usize>> {
    let parsed: Vec<(Vec<(usize, &str)>, usize)> = eqs.iter().map(|&(l, w)| (parse_label(l), w)).collect();
    let mut vars: BTreeMap<&str, usize> = BTreeMap::new();
    loop {
        let mut progress = false;
        for (terms, w) in &parsed {
            let unknown: Vec<&(usize, &str)> = terms.iter().filter(|(_, v)| !vars.contains_key(v)).collect();
            if unknown.len() != 1 {
                continue;
            }
            let known: usize = terms
                .iter()
                .filter(|(_, v)| vars.contains_key(v))
                .map(|(c, v)| c * vars[v])
                .sum();
            let (c, v) = *unknown[0];
            if *w <= known || !(w - known).is_multiple_of(c) {
                return None;
            }
            vars.insert(v, (w - known) / c);
            progress = true;
        }
        if !progress {
            break;
        }
    }
    for (terms, w) in &parsed {
        let mut total = 0;
        for (c, v) in terms {
            total += c * vars.get(v)?;
        }
        if total != *w {
            return None;
        }
    }
    vars.iter().all(|(v, &x)| var_parity_ok(v, x)).then_some(vars)
}

/// A successful match: the template and, per slot in [`PairTemplate::slots`]
/// order, the edges it covers.
#[derive(Clone, Debug)]
pub struct Match {
    pub template: &'static PairTemplate,
    pub slots: Vec<(Slot, SmallVec<[usize; 2]>)>,
}

fn match_groups(t: &'static PairTemplate, view: &PairView, coloured: bool) -> Option<Match> {
    let single = |slot: &Option<Slot>, obs: &[Obs]| -> Option<Option<(Slot, Obs)>> {
        match (slot, obs) {
            (None, []) => Some(None),
            (Some(sl), [o]) => kind_fits(sl.kind, o.kind, coloured).then(|| Some((*sl, o.clone()))),
            _ => None,
        }
    };
    let in1 = single(&t.in1, &view.in1)?;
    let out1 = single(&t.out1, &view.out1)?;
    let in2 = single(&t.in2, &view.in2)?;
    let out2 = single(&t.out2, &view.out2)?;
    if t.bridge.len() != view.bridge.len() {
        return None;
    }
    let orders: Vec<Vec<usize>> = if view.bridge.len() == 2 {
        vec![vec![0, 1], vec![1, 0]]
    } else {
        vec![(0..view.bridge.len()).collect()]
    };
    for order in orders {
        let bridges: Vec<(Slot, Obs)> = t
            .bridge
            .iter()
            .zip(order.iter().map(|&j| &view.bridge[j]))
            .map(|(sl, o)| (*sl, o.clone()))
            .collect();
        if !bridges.iter().all(|(sl, o)| kind_fits(sl.kind, o.kind, coloured)) {
            continue;
        }
        let all: Vec<(Slot, Obs)> = in1
            .iter()
            .cloned()
            .chain(out1.iter().cloned())
            .chain(bridges)
            .chain(in2.iter().cloned())
            .chain(out2.iter().cloned())
            .collect();
        let eqs: Vec<(&str, usize)> = all.iter().map(|(sl, o)| (sl.label, o.weight)).collect();
        if solve_labels(&eqs).is_some() {
            return Some(Match {
                template: t,
                slots: all.into_iter().map(|(sl, o)| (sl, o.edges)).collect(),
            });
        }
    }
    None
}

/// Templates matched by pair `i`. A coloured cover is matched against the
/// coloured templates of `sign`; an uncoloured one against the positive
/// templates with colours ignored.
pub fn match_pair(ec: &EnhancedCover, i: usize, sign: Sign) -> Vec<Match> {
    let view = pair_view(ec, i);
    let coloured = ec.is_coloured();
    let pool = if coloured {
        signed_templates(sign)
    } else {
        signed_templates(Sign::Plus)
    };
    pool.iter().filter_map(|t| match_groups(t, &view, coloured)).collect()
}

fn class_obs(c: &CycleClass) -> Obs {
    let kind = match c.kind {
        CycleKind::OddReal => ObsKind::Odd,
        CycleKind::EvenRealNoFix => ObsKind::Even(Some(Colour::Blue)),
        CycleKind::EvenRealTwoFix => ObsKind::Even(Some(Colour::Red)),
        CycleKind::ConjugatedPair => ObsKind::Dotted,
    };
    Obs::bare(c.size, kind)
}

fn splits(items: &[Obs], first: usize) -> Vec<(Vec<Obs>, Vec<Obs>)> {
    let n = items.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != first {
            continue;
        }
        let (a, b): (Vec<_>, Vec<_>) = (0..n).partition(|&j| mask & (1 << j) != 0);
        out.push((
            a.into_iter().map(|j| items[j].clone()).collect(),
            b.into_iter().map(|j| items[j].clone()).collect(),
        ));
    }
    out
}

/// Shapes whose positive template fits a census transition, reading cycles
/// without fixed points as blue and those with two as red.
pub fn shapes_for_descriptor(desc: &TransitionDescriptor) -> Vec<Shape> {
    let incoming: Vec<Obs> = desc.incoming.iter().map(class_obs).collect();
    let outgoing: Vec<Obs> = desc.outgoing.iter().map(class_obs).collect();
    let bridge: Vec<Obs> = desc.bridge.iter().map(class_obs).collect();
    let mut out = Vec::new();
    for t in signed_templates(Sign::Plus) {
        let found = splits(&incoming, usize::from(t.in1.is_some()))
            .into_iter()
            .any(|(in1, in2)| {
                splits(&outgoing, usize::from(t.out1.is_some()))
                    .into_iter()
                    .any(|(out1, out2)| {
                        let view = PairView {
                            in1: in1.clone(),
                            out1,
                            bridge: bridge.clone(),
                            in2: in2.clone(),
                            out2,
                        };
                        match_groups(t, &view, true).is_some()
                    })
            });
        if found {
            out.push(t.shape);
        }
    }
    out
}
