//! Labeled reference for the tropical correspondence.
//!
//! Every real monodromy tuple is turned into an enhanced cover directly:
//! each 3-cycle is split into its two admissible transpositions, and the
//! cycles of the running product become the edges. Tallying tuples per
//! cover class gives an independent check of both the sweep and the
//! multiplicity formula.

use std::collections::BTreeMap;

use crate::error::{HurwitzError, Result};
use crate::oracle::{classify_cycles, decompose_with_involution, factorial, fold_real_tuples, CycleKind};
use crate::par::Strategy;
use crate::perms::{Partition, Permutation, Sign, SignSplitting};
use crate::tropical::cover::{Colour, Endpoint, EnhancedCover, KeyEdge};
use crate::tropical::sweep::{check_type, enumerate_enhanced_covers_with};
use crate::tropical::templates::match_pair;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Attr {
    colour: Option<Colour>,
    dotted: bool,
}

#[derive(Clone, Debug)]
struct Open {
    origin: Endpoint,
    attr: Attr,
    partner: Option<Vec<usize>>,
}

fn attributes(perm: &Permutation, inv: &Permutation, sign: Sign) -> BTreeMap<Vec<usize>, (Attr, Option<Vec<usize>>)> {
    let classes = classify_cycles(perm, inv);
    let cycles: Vec<Vec<usize>> = classes.iter().map(|c| c.0.clone()).collect();
    classes
        .into_iter()
        .map(|(cycle, class, partner)| {
            let attr = match class.kind {
                CycleKind::OddReal => Attr {
                    colour: None,
                    dotted: false,
                },
                CycleKind::ConjugatedPair => Attr {
                    colour: None,
                    dotted: true,
                },
                kind => {
                    let no_fix = kind == CycleKind::EvenRealNoFix;
                    let blue = no_fix ^ (sign == Sign::Minus);
                    Attr {
                        colour: Some(if blue { Colour::Blue } else { Colour::Red }),
                        dotted: false,
                    }
                }
            };
            (cycle, (attr, partner.map(|j| cycles[j].clone())))
        })
        .collect()
}

fn edge(o: &Open, to: Endpoint, weight: usize) -> KeyEdge {
    KeyEdge {
        from: o.origin,
        to,
        weight,
        colour: o.attr.colour,
        dotted: o.attr.dotted,
    }
}

fn violation(msg: String) -> HurwitzError {
    HurwitzError::LemmaViolation(msg)
}

/// The key edges of the enhanced cover a real tuple determines.
pub fn cover_of_tuple(
    gamma: &Permutation,
    sigma1: &Permutation,
    taus: &[Permutation],
    signs: &SignSplitting,
) -> Result<Vec<KeyEdge>> {
    let mut open: BTreeMap<Vec<usize>, Open> = attributes(sigma1, gamma, Sign::Plus)
        .into_iter()
        .map(|(c, (attr, partner))| {
            (
                c,
                Open {
                    origin: Endpoint::NegInf,
                    attr,
                    partner,
                },
            )
        })
        .collect();
    let mut edges = Vec::new();
    let mut product = sigma1.clone();
    let mut inv = gamma.clone();
    let mut prev = Sign::Plus;
    for (i, (tau, &sign)) in taus.iter().zip(signs.signs()).enumerate() {
        if sign != prev {
            inv = inv.compose_unchecked(&product);
        }
        prev = sign;
        let now = attributes(&product, &inv, sign);
        for (c, o) in &open {
            if now[c].0 != o.attr {
                return Err(violation(format!("cycle {c:?} changes type at pair {i}")));
            }
        }
        let (t1, t2) = decompose_with_involution(&product, &inv, tau)?;
        for (j, t) in [(2 * i, t1), (2 * i + 1, t2)] {
            let here = Endpoint::Vertex(j);
            let moved: Vec<usize> = (0..t.degree()).filter(|&x| t.apply(x) != x).collect();
            let next = t.compose_unchecked(&product);
            let touched = |c: &Vec<usize>| c.iter().any(|x| moved.contains(x));
            let consumed: Vec<Vec<usize>> = open.keys().filter(|c| touched(c)).cloned().collect();
            for c in &consumed {
                let o = open.remove(c).expect("open cycle");
                if let Some(p) = &o.partner {
                    if !consumed.contains(p) {
                        return Err(violation(format!("dotted partner of {c:?} survives vertex {j}")));
                    }
                }
                edges.push(edge(&o, here, c.len()));
            }
            let fresh = attributes(&next, &inv, sign);
            for (c, (attr, partner)) in fresh {
                if !touched(&c) {
                    continue;
                }
                if let Some(p) = &partner {
                    if !touched(p) {
                        return Err(violation(format!("dotted partner of {c:?} predates vertex {j}")));
                    }
                }
                open.insert(
                    c,
                    Open {
                        origin: here,
                        attr,
                        partner,
                    },
                );
            }
            product = next;
        }
    }
    for (c, o) in &open {
        edges.push(edge(o, Endpoint::PosInf, c.len()));
    }
    edges.sort();
    Ok(edges)
}

/// Tuples grouped by the cover class they determine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceClass {
    pub cover: EnhancedCover,
    pub tuples: u128,
}

/// Runs every real tuple of type `(g, lambda, mu)` with the given signs
/// through [`cover_of_tuple`] and tallies the classes by canonical key.
pub fn labeled_reference(
    g: usize,
    lambda: &Partition,
    mu: &Partition,
    splitting: &SignSplitting,
    strategy: Strategy,
) -> Result<BTreeMap<String, ReferenceClass>> {
    let r = check_type(g, lambda, mu)?;
    if splitting.len() != r {
        return Err(HurwitzError::InvalidSigns(format!(
            "expected {r} signs, got {}",
            splitting.len()
        )));
    }
    let d = lambda.sum();
    let tally = fold_real_tuples(
        lambda,
        splitting,
        strategy,
        || Ok(BTreeMap::<Vec<KeyEdge>, u128>::new()),
        |acc: &mut Result<BTreeMap<Vec<KeyEdge>, u128>>, t| {
            let Ok(map) = acc else { return };
            if t.product.cycle_type() != *mu {
                return;
            }
            match cover_of_tuple(t.gamma, t.sigma1, t.taus, t.signs) {
                Ok(edges) => *map.entry(edges).or_insert(0) += 1,
                Err(e) => *acc = Err(e),
            }
        },
        |a, b| {
            let (mut a, b) = (a?, b?);
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            Ok(a)
        },
    )??;
    let mut out = BTreeMap::new();
    for (edges, tuples) in tally {
        let cover = EnhancedCover::from_key_edges(d, r, edges)?;
        out.insert(cover.canonical_key(), ReferenceClass { cover, tuples });
    }
    Ok(out)
}

/// Outcome of checking the sweep against the labeled reference.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Comparison {
    pub classes: usize,
    pub problems: Vec<String>,
}

impl Comparison {
    pub fn ok(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Checks that the sweep and the reference produce the same classes, that
/// every class is hit by exactly `d! * mult` tuples, and that every pair of
/// every class matches exactly one template of its sign.
pub fn compare_with_sweep(
    g: usize,
    lambda: &Partition,
    mu: &Partition,
    splitting: &SignSplitting,
    strategy: Strategy,
) -> Result<Comparison> {
    let reference = labeled_reference(g, lambda, mu, splitting, strategy)?;
    let swept = enumerate_enhanced_covers_with(g, lambda, mu, splitting, strategy)?;
    let fact = factorial(lambda.sum())?;
    let mut cmp = Comparison {
        classes: swept.len(),
        problems: Vec::new(),
    };
    for c in &swept {
        match reference.get(&c.key) {
            None => cmp.problems.push(format!("sweep only: {}", c.key)),
            Some(rc) => {
                let want = fact
                    .checked_mul(c.multiplicity)
                    .ok_or(HurwitzError::Overflow("reference"))?;
                if rc.tuples != want {
                    cmp.problems
                        .push(format!("{}: {} tuples, expected {}", c.key, rc.tuples, want));
                }
            }
        }
    }
    for (key, rc) in &reference {
        if !swept.iter().any(|c| &c.key == key) {
            cmp.problems.push(format!("reference only: {key}"));
        }
        for (i, &s) in splitting.signs().iter().enumerate() {
            let n = match_pair(&rc.cover, i, s).len();
            if n != 1 {
                cmp.problems.push(format!("{key}: pair {i} matches {n} templates"));
            }
        }
    }
    Ok(cmp)
}
