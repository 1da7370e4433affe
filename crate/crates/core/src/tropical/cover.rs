//! Cover data model: ordered inner vertices grouped into pairs, weighted
//! edges between vertices and the two boundary points.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{HurwitzError, Result};
use crate::perms::{Partition, UnionFind};

/// Where an edge starts or stops. Inner vertices are numbered `0..2r`
/// left to right; pair `i` is `(2i, 2i + 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    NegInf,
    Vertex(usize),
    PosInf,
}

impl Endpoint {
    pub fn vertex(self) -> Option<usize> {
        match self {
            Endpoint::Vertex(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_inner(self) -> bool {
        matches!(self, Endpoint::Vertex(_))
    }

    fn position(self, vertices: usize) -> i64 {
        match self {
            Endpoint::NegInf => -1,
            Endpoint::Vertex(v) => v as i64,
            Endpoint::PosInf => vertices as i64,
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::NegInf => f.write_str("-inf"),
            Endpoint::Vertex(v) => write!(f, "{v}"),
            Endpoint::PosInf => f.write_str("+inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub fn flipped(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Colour::Red => "red",
            Colour::Blue => "blue",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub from: Endpoint,
    pub to: Endpoint,
    pub weight: usize,
}

impl Edge {
    pub fn is_inner(&self) -> bool {
        self.from.is_inner() && self.to.is_inner()
    }

    pub fn touches(&self, v: usize) -> bool {
        self.from == Endpoint::Vertex(v) || self.to == Endpoint::Vertex(v)
    }
}

/// The combinatorial type of a tropical cover. Edge lengths are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropicalCover {
    pub degree: usize,
    pub pairs: usize,
    pub edges: Vec<Edge>,
}

impl TropicalCover {
    pub fn vertex_count(&self) -> usize {
        2 * self.pairs
    }

    pub fn left_profile(&self) -> Partition {
        Partition::new(
            self.edges
                .iter()
                .filter(|e| e.from == Endpoint::NegInf)
                .map(|e| e.weight)
                .collect(),
        )
        .expect("weights are positive")
    }

    pub fn right_profile(&self) -> Partition {
        Partition::new(
            self.edges
                .iter()
                .filter(|e| e.to == Endpoint::PosInf)
                .map(|e| e.weight)
                .collect(),
        )
        .expect("weights are positive")
    }

    /// Edges joining the two vertices of pair `i`.
    pub fn bridges(&self, i: usize) -> Vec<usize> {
        let (a, b) = (Endpoint::Vertex(2 * i), Endpoint::Vertex(2 * i + 1));
        (0..self.edges.len())
            .filter(|&k| self.edges[k].from == a && self.edges[k].to == b)
            .collect()
    }

    pub fn is_bridge(&self, k: usize) -> bool {
        match (self.edges[k].from, self.edges[k].to) {
            (Endpoint::Vertex(a), Endpoint::Vertex(b)) => a % 2 == 0 && b == a + 1,
            _ => false,
        }
    }

    pub fn inner_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_inner()).count()
    }

    /// Connected components of the graph with every end attached to its
    /// inner vertex (ends from `-inf` straight to `+inf` are components of
    /// their own).
    pub fn component_count(&self) -> usize {
        let v = self.vertex_count();
        let stray = self
            .edges
            .iter()
            .filter(|e| !e.from.is_inner() && !e.to.is_inner())
            .count();
        let mut uf = UnionFind::new(v);
        for e in &self.edges {
            if let (Endpoint::Vertex(a), Endpoint::Vertex(b)) = (e.from, e.to) {
                uf.union(a, b);
            }
        }
        uf.components() + stray
    }

    /// First Betti number, assuming the graph is connected.
    pub fn genus(&self) -> i64 {
        self.inner_edge_count() as i64 - self.vertex_count() as i64 + 1
    }
}

/// The first clause of the cover definition that fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverViolation {
    Endpoint(usize),
    Valence(usize),
    Balancing(usize),
    Degree { slice: usize, found: usize },
    Connectivity,
    Genus { expected: usize, found: i64 },
    LeftProfile,
    RightProfile,
    DottedPair(usize),
    Colouring(usize),
}

impl CoverViolation {
    pub fn clause(&self) -> &'static str {
        match self {
            CoverViolation::Endpoint(_) => "endpoint",
            CoverViolation::Valence(_) => "valence",
            CoverViolation::Balancing(_) => "balancing",
            CoverViolation::Degree { .. } => "degree",
            CoverViolation::Connectivity => "connectivity",
            CoverViolation::Genus { .. } => "genus",
            CoverViolation::LeftProfile => "left profile",
            CoverViolation::RightProfile => "right profile",
            CoverViolation::DottedPair(_) => "dotted pair",
            CoverViolation::Colouring(_) => "colouring",
        }
    }
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverViolation::Endpoint(e) => write!(f, "endpoint: edge {e} does not run left to right"),
            CoverViolation::Valence(v) => write!(f, "valence: vertex {v} is not 3-valent"),
            CoverViolation::Balancing(v) => write!(f, "balancing: vertex {v}"),
            CoverViolation::Degree { slice, found } => write!(f, "degree: slice {slice} carries {found}"),
            CoverViolation::Connectivity => f.write_str("connectivity"),
            CoverViolation::Genus { expected, found } => write!(f, "genus: expected {expected}, found {found}"),
            CoverViolation::LeftProfile => f.write_str("left profile"),
            CoverViolation::RightProfile => f.write_str("right profile"),
            CoverViolation::DottedPair(p) => write!(f, "dotted pair {p} is not a symmetric fork or circle"),
            CoverViolation::Colouring(e) => write!(f, "colouring: edge {e}"),
        }
    }
}

/// Checks valence, balancing, degree, connectivity, genus and profiles, in
/// that order.
pub fn validate_cover(
    c: &TropicalCover,
    g: usize,
    lambda: &Partition,
    mu: &Partition,
) -> std::result::Result<(), CoverViolation> {
    let v = c.vertex_count();
    for (k, e) in c.edges.iter().enumerate() {
        let ok = e.weight > 0
            && e.from != Endpoint::PosInf
            && e.to != Endpoint::NegInf
            && e.from.position(v) < e.to.position(v)
            && e.from.vertex().is_none_or(|x| x < v)
            && e.to.vertex().is_none_or(|x| x < v);
        if !ok {
            return Err(CoverViolation::Endpoint(k));
        }
    }
    for x in 0..v {
        let valence = c
            .edges
            .iter()
            .map(|e| usize::from(e.from == Endpoint::Vertex(x)) + usize::from(e.to == Endpoint::Vertex(x)))
            .sum::<usize>();
        if valence != 3 {
            return Err(CoverViolation::Valence(x));
        }
    }
    for x in 0..v {
        let here = Endpoint::Vertex(x);
        let incoming: usize = c.edges.iter().filter(|e| e.to == here).map(|e| e.weight).sum();
        let outgoing: usize = c.edges.iter().filter(|e| e.from == here).map(|e| e.weight).sum();
        if incoming != outgoing {
            return Err(CoverViolation::Balancing(x));
        }
    }
    for slice in 0..=v {
        let s = slice as i64;
        let found: usize = c
            .edges
            .iter()
            .filter(|e| e.from.position(v) < s && e.to.position(v) >= s)
            .map(|e| e.weight)
            .sum();
        if found != c.degree {
            return Err(CoverViolation::Degree { slice, found });
        }
    }
    if c.component_count() != 1 {
        return Err(CoverViolation::Connectivity);
    }
    if c.genus() != g as i64 {
        return Err(CoverViolation::Genus {
            expected: g,
            found: c.genus(),
        });
    }
    if c.left_profile() != *lambda {
        return Err(CoverViolation::LeftProfile);
    }
    if c.right_profile() != *mu {
        return Err(CoverViolation::RightProfile);
    }
    Ok(())
}

/// Dotted symmetric pairs (the set `I_rho`) and a colour on every even edge
/// outside them. Colours are stored per edge; [`EnhancedCover::validate_real`]
/// checks they are constant on even components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RealStructure {
    pub dotted: Vec<[usize; 2]>,
    pub colours: Vec<Option<Colour>>,
}

/// One edge of a cover together with its real-structure annotations, in the
/// order used by canonical keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KeyEdge {
    pub from: Endpoint,
    pub to: Endpoint,
    pub weight: usize,
    pub colour: Option<Colour>,
    pub dotted: bool,
}

impl fmt::Display for KeyEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}:{}", self.from, self.to, self.weight)?;
        match self.colour {
            Some(Colour::Red) => f.write_str("r")?,
            Some(Colour::Blue) => f.write_str("b")?,
            None => {}
        }
        if self.dotted {
            f.write_str("*")?;
        }
        Ok(())
    }
}

/// A cover with a real structure (possibly uncoloured).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EnhancedCover {
    pub cover: TropicalCover,
    pub real: RealStructure,
}

impl EnhancedCover {
    /// Builds a normalised cover: edges sorted, dotted edges with equal
    /// endpoints and weight paired in order.
    pub fn from_key_edges(degree: usize, pairs: usize, mut edges: Vec<KeyEdge>) -> Result<Self> {
        edges.sort();
        let mut dotted = Vec::new();
        let mut pending: Option<usize> = None;
        for (k, e) in edges.iter().enumerate() {
            if !e.dotted {
                continue;
            }
            match pending.take() {
                None => pending = Some(k),
                Some(j) => {
                    let o = &edges[j];
                    if (o.from, o.to, o.weight) != (e.from, e.to, e.weight) {
                        return Err(HurwitzError::MalformedCover(format!("unpaired dotted edge {o}")));
                    }
                    dotted.push([j, k]);
                }
            }
        }
        if let Some(j) = pending {
            return Err(HurwitzError::MalformedCover(format!(
                "unpaired dotted edge {}",
                edges[j]
            )));
        }
        Ok(EnhancedCover {
            cover: TropicalCover {
                degree,
                pairs,
                edges: edges
                    .iter()
                    .map(|e| Edge {
                        from: e.from,
                        to: e.to,
                        weight: e.weight,
                    })
                    .collect(),
            },
            real: RealStructure {
                dotted,
                colours: edges.iter().map(|e| e.colour).collect(),
            },
        })
    }

    pub fn is_dotted(&self, k: usize) -> bool {
        self.real.dotted.iter().any(|p| p.contains(&k))
    }

    pub fn key_edges(&self) -> Vec<KeyEdge> {
        let mut out: Vec<KeyEdge> = self
            .cover
            .edges
            .iter()
            .enumerate()
            .map(|(k, e)| KeyEdge {
                from: e.from,
                to: e.to,
                weight: e.weight,
                colour: self.real.colours.get(k).copied().flatten(),
                dotted: self.is_dotted(k),
            })
            .collect();
        out.sort();
        out
    }

    /// A string that two covers share iff they are isomorphic. Vertices are
    /// pinned by their images, so an isomorphism can only permute parallel
    /// edges with equal annotations.
    pub fn canonical_key(&self) -> String {
        let edges: Vec<String> = self.key_edges().iter().map(|e| e.to_string()).collect();
        format!("d{};r{};{}", self.cover.degree, self.cover.pairs, edges.join(" "))
    }

    /// The same cover with all colours removed.
    pub fn uncoloured(&self) -> EnhancedCover {
        let mut out = self.clone();
        out.real.colours = vec![None; out.cover.edges.len()];
        out
    }

    pub fn is_coloured(&self) -> bool {
        self.real.colours.iter().any(Option::is_some)
    }

    /// `C(phi)`: pairs of parallel inner edges with equal weight.
    pub fn symmetric_circles(&self) -> Vec<[usize; 2]> {
        parallel_pairs(&self.cover, |e| e.is_inner())
    }

    /// Pairs of ends of equal weight at one inner vertex.
    pub fn symmetric_forks(&self) -> Vec<[usize; 2]> {
        parallel_pairs(&self.cover, |e| !e.is_inner())
    }

    /// `C(phi) ∩ I_rho`.
    pub fn dotted_circles(&self) -> Vec<[usize; 2]> {
        self.real
            .dotted
            .iter()
            .copied()
            .filter(|p| self.cover.edges[p[0]].is_inner())
            .collect()
    }

    /// `E(I_rho)`: even inner edges that are not dotted.
    pub fn even_inner_undotted(&self) -> Vec<usize> {
        (0..self.cover.edges.len())
            .filter(|&k| {
                let e = &self.cover.edges[k];
                e.is_inner() && e.weight.is_multiple_of(2) && !self.is_dotted(k)
            })
            .collect()
    }

    /// `E_b(phi)`: even bridge edges.
    pub fn even_bridges(&self) -> Vec<usize> {
        (0..self.cover.edges.len())
            .filter(|&k| self.cover.is_bridge(k) && self.cover.edges[k].weight.is_multiple_of(2))
            .collect()
    }

    /// `C_n(phi)`: pairs whose two bridge edges are even of different weights.
    pub fn nonsymmetric_bridge_circles(&self) -> Vec<usize> {
        (0..self.cover.pairs)
            .filter(|&i| {
                let b = self.cover.bridges(i);
                b.len() == 2 && {
                    let (x, y) = (self.cover.edges[b[0]].weight, self.cover.edges[b[1]].weight);
                    x % 2 == 0 && y % 2 == 0 && x != y
                }
            })
            .collect()
    }

    /// `2^{|E(I)\E_b| + |C∩I| + |C_n|} · prod w(e)` over dotted circles.
    pub fn multiplicity(&self) -> Result<u128> {
        let undotted = self.even_inner_undotted();
        let bridges = self.even_bridges();
        let outside = undotted.iter().filter(|k| !bridges.contains(k)).count();
        let circles = self.dotted_circles();
        let exponent = outside + circles.len() + self.nonsymmetric_bridge_circles().len();
        let mut m = 1u128
            .checked_shl(exponent as u32)
            .filter(|_| exponent < 127)
            .ok_or(HurwitzError::Overflow("multiplicity"))?;
        for c in circles {
            m = m
                .checked_mul(self.cover.edges[c[0]].weight as u128)
                .ok_or(HurwitzError::Overflow("multiplicity"))?;
        }
        Ok(m)
    }

    /// Dotted pairs are genuine symmetric forks or circles; when
    /// `require_colours` is set, exactly the even undotted edges carry a
    /// colour and colours are constant on even components.
    pub fn validate_real(&self, require_colours: bool) -> std::result::Result<(), CoverViolation> {
        let edges = &self.cover.edges;
        for (p, pair) in self.real.dotted.iter().enumerate() {
            let (a, b) = (&edges[pair[0]], &edges[pair[1]]);
            let fork_or_circle = pair[0] != pair[1]
                && a.from == b.from
                && a.to == b.to
                && a.weight == b.weight
                && (a.from.is_inner() || a.to.is_inner());
            if !fork_or_circle {
                return Err(CoverViolation::DottedPair(p));
            }
        }
        if self.real.colours.len() != edges.len() {
            return Err(CoverViolation::Colouring(edges.len()));
        }
        for (k, e) in edges.iter().enumerate() {
            let wants = e.weight % 2 == 0 && !self.is_dotted(k);
            let has = self.real.colours[k].is_some();
            if has && !wants || require_colours && wants && !has {
                return Err(CoverViolation::Colouring(k));
            }
        }
        let v = self.cover.vertex_count();
        for x in 0..v {
            let mut seen: Option<Colour> = None;
            for (k, e) in edges.iter().enumerate() {
                if !e.touches(x) {
                    continue;
                }
                if let Some(c) = self.real.colours[k] {
                    if seen.is_some_and(|s| s != c) {
                        return Err(CoverViolation::Colouring(k));
                    }
                    seen = Some(c);
                }
            }
        }
        Ok(())
    }
}

fn parallel_pairs(c: &TropicalCover, keep: impl Fn(&Edge) -> bool) -> Vec<[usize; 2]> {
    let mut out = Vec::new();
    for a in 0..c.edges.len() {
        for b in a + 1..c.edges.len() {
            let (x, y) = (&c.edges[a], &c.edges[b]);
            if keep(x) && x == y && (x.from.is_inner() || x.to.is_inner()) {
                out.push([a, b]);
            }
        }
    }
    out
}

/// One isomorphism class produced by an enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverClass {
    pub key: String,
    pub cover: EnhancedCover,
    pub multiplicity: u128,
}

impl CoverClass {
    pub fn new(cover: EnhancedCover, multiplicity: u128) -> Self {
        CoverClass {
            key: cover.canonical_key(),
            cover,
            multiplicity,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Endpoint::*;

    fn fork_cover() -> TropicalCover {
        TropicalCover {
            degree: 3,
            pairs: 1,
            edges: vec![
                Edge {
                    from: NegInf,
                    to: Vertex(0),
                    weight: 3,
                },
                Edge {
                    from: Vertex(0),
                    to: PosInf,
                    weight: 1,
                },
                Edge {
                    from: Vertex(0),
                    to: Vertex(1),
                    weight: 2,
                },
                Edge {
                    from: Vertex(1),
                    to: PosInf,
                    weight: 1,
                },
                Edge {
                    from: Vertex(1),
                    to: PosInf,
                    weight: 1,
                },
            ],
        }
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn validates_simple_cover() {
        assert_eq!(validate_cover(&fork_cover(), 0, &p("3"), &p("1,1,1")), Ok(()));
    }

    #[test]
    fn reports_balancing() {
        let mut c = fork_cover();
        c.edges[2].weight = 5;
        let err = validate_cover(&c, 0, &p("3"), &p("1,1,1")).unwrap_err();
        assert_eq!(err.clause(), "balancing");
    }

    #[test]
    fn reports_connectivity() {
        let mut c = fork_cover();
        c.degree = 4;
        c.edges.push(Edge {
            from: NegInf,
            to: PosInf,
            weight: 1,
        });
        let err = validate_cover(&c, 0, &p("3,1"), &p("1,1,1,1")).unwrap_err();
        assert_eq!(err.clause(), "connectivity");
    }

    #[test]
    fn reports_genus_and_profiles() {
        let c = fork_cover();
        assert_eq!(
            validate_cover(&c, 1, &p("3"), &p("1,1,1")).unwrap_err().clause(),
            "genus"
        );
        assert_eq!(
            validate_cover(&c, 0, &p("2,1"), &p("1,1,1")).unwrap_err().clause(),
            "left profile"
        );
        assert_eq!(
            validate_cover(&c, 0, &p("3"), &p("2,1")).unwrap_err().clause(),
            "right profile"
        );
    }

    #[test]
    fn multiplicity_of_simple_cover() {
        let c = fork_cover();
        let ec = EnhancedCover {
            real: RealStructure {
                dotted: vec![[3, 4]],
                colours: vec![None, None, Some(Colour::Blue), None, None],
            },
            cover: c,
        };
        assert_eq!(ec.validate_real(true), Ok(()));
        assert_eq!(ec.multiplicity().unwrap(), 1);
        assert_eq!(ec.symmetric_forks(), vec![[3, 4]]);
    }

    #[test]
    fn dotted_circle_multiplicity() {
        // (iii) then (i): a dotted circle of weight-2 edges
        let edges = vec![
            KeyEdge {
                from: NegInf,
                to: Vertex(0),
                weight: 6,
                colour: Some(Colour::Blue),
                dotted: false,
            },
            KeyEdge {
                from: Vertex(0),
                to: PosInf,
                weight: 2,
                colour: Some(Colour::Blue),
                dotted: false,
            },
            KeyEdge {
                from: Vertex(0),
                to: Vertex(1),
                weight: 4,
                colour: Some(Colour::Blue),
                dotted: false,
            },
            KeyEdge {
                from: Vertex(1),
                to: Vertex(2),
                weight: 2,
                colour: None,
                dotted: true,
            },
            KeyEdge {
                from: Vertex(1),
                to: Vertex(2),
                weight: 2,
                colour: None,
                dotted: true,
            },
            KeyEdge {
                from: Vertex(2),
                to: Vertex(3),
                weight: 4,
                colour: Some(Colour::Blue),
                dotted: false,
            },
            KeyEdge {
                from: NegInf,
                to: Vertex(3),
                weight: 1,
                colour: None,
                dotted: false,
            },
            KeyEdge {
                from: Vertex(3),
                to: PosInf,
                weight: 5,
                colour: None,
                dotted: false,
            },
        ];
        let ec = EnhancedCover::from_key_edges(7, 2, edges).unwrap();
        assert_eq!(validate_cover(&ec.cover, 1, &p("6,1"), &p("5,2")), Ok(()));
        assert_eq!(ec.dotted_circles().len(), 1);
        assert_eq!(ec.multiplicity().unwrap(), 4);
    }

    #[test]
    fn key_is_order_independent() {
        let mut c = fork_cover();
        let a = EnhancedCover {
            cover: c.clone(),
            real: RealStructure {
                dotted: vec![[3, 4]],
                colours: vec![None; 5],
            },
        };
        c.edges.reverse();
        let b = EnhancedCover {
            cover: c,
            real: RealStructure {
                dotted: vec![[0, 1]],
                colours: vec![None; 5],
            },
        };
        assert_eq!(a.canonical_key(), b.canonical_key());
    }
}
