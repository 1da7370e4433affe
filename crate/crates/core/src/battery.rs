//! The acceptance battery: eight checks, each reported as one PASS/FAIL line.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::{Duration, Instant};

use num_rational::Ratio;

use crate::enhanced::{
    build_block_family, build_nonvanishing, enhanced_number, enumerate_universal_with, is_universally_enhanced,
    universal_structure,
};
use crate::error::Result;
use crate::oracle::{
    active_involution, count_fixed_target_factorizations, decompose_with_involution, factorial,
    local_multiplicity_census, real_census, CycleClass, CycleKind, TransitionDescriptor,
};
use crate::par::Strategy;
use crate::perms::{reversing_involutions, three_cycles, Partition, Permutation, Sign, SignSplitting};
use crate::tropical::cover::validate_cover;
use crate::tropical::sweep::enumerate_enhanced_covers_with;

/// Limits of the exhaustive parts of the battery.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_d: usize,
    pub max_r: usize,
    pub strategy: Strategy,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_d: 6,
            max_r: 3,
            strategy: Strategy::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub criterion: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.criterion,
            self.name,
            self.detail
        )
    }
}

fn timed(criterion: u8, name: &'static str, run: impl FnOnce() -> Result<(bool, String)>) -> Report {
    let start = Instant::now();
    let (passed, detail) = run().unwrap_or_else(|e| (false, format!("error: {e}")));
    Report {
        criterion,
        name,
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

/// Collects failures, keeping the first few for the report.
#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, unit: &str) -> (bool, String) {
        if self.failures.is_empty() {
            (true, format!("{} {unit} checked", self.checked))
        } else {
            let shown: Vec<&str> = self.failures.iter().take(3).map(String::as_str).collect();
            (
                false,
                format!(
                    "{} of {} {unit} failed; first: {}",
                    self.failures.len(),
                    self.checked,
                    shown.join("; ")
                ),
            )
        }
    }
}

pub fn fixed_target() -> Report {
    timed(1, "fixed-target", || {
        let mut t = Tally::default();
        for d in [3usize, 5, 7] {
            let n = count_fixed_target_factorizations(d)?;
            let want = (d as u128).pow(((d - 3) / 2) as u32);
            t.check(n == want, || format!("d={d}: N={n} expected={want}"));
        }
        Ok(t.finish("degrees"))
    })
}

/// One branch type with every splitting's oracle count.
#[derive(Clone, Debug)]
pub struct TypeCounts {
    pub g: usize,
    pub lambda: Partition,
    pub mu: Partition,
    pub oracle: BTreeMap<SignSplitting, Ratio<u128>>,
}

/// Oracle counts for every `(g, lambda, mu)` with `d <= max_d` and
/// `1 <= r <= max_r`, all splittings. Types with no tuples are kept, with
/// count zero.
pub fn oracle_table(bounds: Bounds) -> Result<Vec<TypeCounts>> {
    let mut table: BTreeMap<(usize, Partition, Partition), TypeCounts> = BTreeMap::new();
    for d in 1..=bounds.max_d {
        let fact = factorial(d)?;
        let parts = Partition::all_of(d);
        for lambda in &parts {
            for r in 1..=bounds.max_r {
                let types: Vec<(usize, &Partition)> = parts
                    .iter()
                    .filter_map(|mu| {
                        let twice = 2 * r + 2;
                        let lengths = lambda.len() + mu.len();
                        (twice >= lengths && (twice - lengths) % 2 == 0).then(|| ((twice - lengths) / 2, mu))
                    })
                    .collect();
                if types.is_empty() {
                    continue;
                }
                for s in SignSplitting::all(r) {
                    let census = real_census(lambda, &s, bounds.strategy)?;
                    for &(g, mu) in &types {
                        let raw = census.get(mu).copied().unwrap_or(0);
                        table
                            .entry((g, lambda.clone(), mu.clone()))
                            .or_insert_with(|| TypeCounts {
                                g,
                                lambda: lambda.clone(),
                                mu: mu.clone(),
                                oracle: BTreeMap::new(),
                            })
                            .oracle
                            .insert(s.clone(), Ratio::new(raw, fact));
                    }
                }
            }
        }
    }
    Ok(table.into_values().collect())
}

pub fn correspondence(table: &[TypeCounts], strategy: Strategy) -> Report {
    timed(2, "correspondence", || {
        let mut t = Tally::default();
        for ty in table {
            for (s, &oracle) in &ty.oracle {
                let classes = enumerate_enhanced_covers_with(ty.g, &ty.lambda, &ty.mu, s, strategy)?;
                let tropical: u128 = classes.iter().map(|c| c.multiplicity).sum();
                t.check(Ratio::from_integer(tropical) == oracle, || {
                    format!(
                        "g={} {} -> {} s={s}: oracle={oracle} tropical={tropical}",
                        ty.g, ty.lambda, ty.mu
                    )
                });
            }
        }
        Ok(t.finish("splittings"))
    })
}

pub fn lower_bound(table: &[TypeCounts], strategy: Strategy) -> Report {
    timed(3, "lower-bound-parity", || {
        let mut t = Tally::default();
        for ty in table {
            let e: u128 = enumerate_universal_with(ty.g, &ty.lambda, &ty.mu, strategy)?
                .iter()
                .map(|c| c.multiplicity)
                .sum();
            let e = Ratio::from_integer(e);
            for (s, &h) in &ty.oracle {
                let parity = h.is_integer() && (h.to_integer() % 2) == (e.to_integer() % 2);
                t.check(e <= h && parity, || {
                    format!("g={} {} -> {} s={s}: E={e} H={h}", ty.g, ty.lambda, ty.mu)
                });
            }
        }
        Ok(t.finish("splittings"))
    })
}

pub fn sign_invariance(table: &[TypeCounts]) -> Report {
    timed(4, "sign-invariance", || {
        let mut t = Tally::default();
        for ty in table {
            let mut by_positives: BTreeMap<usize, BTreeSet<Ratio<u128>>> = BTreeMap::new();
            for (s, &h) in &ty.oracle {
                by_positives.entry(s.positives()).or_default().insert(h);
            }
            for (pos, values) in by_positives {
                t.check(values.len() == 1, || {
                    format!("g={} {} -> {} with {pos} positive: {values:?}", ty.g, ty.lambda, ty.mu)
                });
            }
        }
        Ok(t.finish("sign classes"))
    })
}

fn all_perms(d: usize) -> Vec<Permutation> {
    Partition::all_of(d)
        .iter()
        .flat_map(|t| crate::perms::permutations_of_type(d, t).expect("degree in range"))
        .collect()
}

/// Exhaustive check that each admissible 3-cycle splits in exactly one way.
pub fn unique_decomposition(max_d: usize) -> Report {
    timed(5, "unique-decomposition", || {
        let mut t = Tally::default();
        for d in 3..=max_d {
            let taus: Vec<Permutation> = three_cycles(d)?.collect();
            for sigma in all_perms(d) {
                for gamma in reversing_involutions(&sigma) {
                    for sign in [Sign::Plus, Sign::Minus] {
                        let inv = active_involution(&sigma, &gamma, sign);
                        for tau in &taus {
                            if !tau.compose_unchecked(&sigma).is_reversed_by(&inv) {
                                continue;
                            }
                            let res = decompose_with_involution(&sigma, &inv, tau);
                            t.check(res.is_ok(), || {
                                format!("sigma={sigma} gamma={gamma} tau={tau}: {res:?}")
                            });
                        }
                    }
                }
            }
        }
        Ok(t.finish("admissible 3-cycles"))
    })
}

/// A cycle in a local configuration.
#[derive(Clone, Copy, Debug)]
enum Piece {
    /// Odd cycle.
    O(usize),
    /// Even cycle without fixed points of the involution.
    B(usize),
    /// Even cycle with two fixed points.
    R(usize),
    /// Conjugated pair of cycles of this length.
    D(usize),
}

impl Piece {
    fn class(self) -> CycleClass {
        let (kind, size) = match self {
            Piece::O(n) => (CycleKind::OddReal, n),
            Piece::B(n) => (CycleKind::EvenRealNoFix, n),
            Piece::R(n) => (CycleKind::EvenRealTwoFix, n),
            Piece::D(n) => (CycleKind::ConjugatedPair, n),
        };
        CycleClass { kind, size }
    }
}

/// `(sigma, gamma)` realising the given cycles, `gamma` reversing `sigma`.
fn configuration(pieces: &[Piece]) -> (Permutation, Permutation) {
    let d: usize = pieces
        .iter()
        .map(|p| match *p {
            Piece::D(n) => 2 * n,
            Piece::O(n) | Piece::B(n) | Piece::R(n) => n,
        })
        .sum();
    let mut sigma = vec![0; d];
    let mut gamma = vec![0; d];
    let mut next = 0;
    let real = |len: usize, t: usize, sigma: &mut [usize], gamma: &mut [usize], base: usize| {
        for j in 0..len {
            sigma[base + j] = base + (j + 1) % len;
            gamma[base + j] = base + (t + len - j) % len;
        }
    };
    for p in pieces {
        match *p {
            Piece::O(n) | Piece::R(n) => real(n, 0, &mut sigma, &mut gamma, next),
            Piece::B(n) => real(n, 1, &mut sigma, &mut gamma, next),
            Piece::D(n) => {
                let (a, b) = (next, next + n);
                for j in 0..n {
                    sigma[a + j] = a + (j + 1) % n;
                    sigma[b + j] = b + (j + 1) % n;
                    gamma[a + j] = b + (n - j) % n;
                    gamma[b + j] = a + (n - j) % n;
                }
                next += n;
            }
        }
        next += match *p {
            Piece::O(n) | Piece::B(n) | Piece::R(n) | Piece::D(n) => n,
        };
    }
    (
        Permutation::from_images(&sigma).expect("cycles cover all points"),
        Permutation::from_images(&gamma).expect("involution"),
    )
}

struct CensusCase {
    label: &'static str,
    incoming: &'static [Piece],
    bridge: &'static [Piece],
    outgoing: &'static [Piece],
    expected: u128,
}

use Piece::{B, D, O, R};

const CENSUS: &[CensusCase] = &[
    CensusCase {
        label: "(i) k=1",
        incoming: &[D(1), B(2)],
        bridge: &[B(2)],
        outgoing: &[B(4)],
        expected: 4,
    },
    CensusCase {
        label: "(i) k=2",
        incoming: &[D(2), B(2)],
        bridge: &[B(4)],
        outgoing: &[B(6)],
        expected: 8,
    },
    CensusCase {
        label: "(ii) k=1",
        incoming: &[D(1), O(1)],
        bridge: &[B(2)],
        outgoing: &[O(3)],
        expected: 2,
    },
    CensusCase {
        label: "(ii) k=2",
        incoming: &[D(2), O(3)],
        bridge: &[B(4)],
        outgoing: &[O(7)],
        expected: 4,
    },
    CensusCase {
        label: "(iii)",
        incoming: &[B(4)],
        bridge: &[B(2)],
        outgoing: &[B(2), D(1)],
        expected: 2,
    },
    CensusCase {
        label: "(iv)",
        incoming: &[O(3)],
        bridge: &[B(2)],
        outgoing: &[O(1), D(1)],
        expected: 1,
    },
    CensusCase {
        label: "(v)",
        incoming: &[B(6), B(2)],
        bridge: &[B(4)],
        outgoing: &[B(2), B(6)],
        expected: 4,
    },
    CensusCase {
        label: "(vi)",
        incoming: &[R(2), B(2)],
        bridge: &[O(1)],
        outgoing: &[O(1), O(3)],
        expected: 4,
    },
    CensusCase {
        label: "(vii)",
        incoming: &[R(2), O(1)],
        bridge: &[O(1)],
        outgoing: &[O(1), R(2)],
        expected: 2,
    },
    CensusCase {
        label: "(viii)",
        incoming: &[B(4), O(1)],
        bridge: &[B(2)],
        outgoing: &[B(2), O(3)],
        expected: 2,
    },
    CensusCase {
        label: "(ix)",
        incoming: &[O(3), B(2)],
        bridge: &[O(1)],
        outgoing: &[B(2), O(3)],
        expected: 2,
    },
    CensusCase {
        label: "(x)",
        incoming: &[O(3), B(2)],
        bridge: &[B(2)],
        outgoing: &[O(1), B(4)],
        expected: 2,
    },
    CensusCase {
        label: "(xi)",
        incoming: &[O(3), O(1)],
        bridge: &[O(1)],
        outgoing: &[B(2), R(2)],
        expected: 1,
    },
    CensusCase {
        label: "(xii)",
        incoming: &[O(3), O(1)],
        bridge: &[B(2)],
        outgoing: &[O(1), O(3)],
        expected: 1,
    },
    CensusCase {
        label: "(xiii)",
        incoming: &[O(3)],
        bridge: &[O(1), B(2)],
        outgoing: &[O(3)],
        expected: 1,
    },
    CensusCase {
        label: "(xiv) 2+4",
        incoming: &[B(6)],
        bridge: &[B(2), B(4)],
        outgoing: &[B(6)],
        expected: 4,
    },
    CensusCase {
        label: "(xiv) 2+2",
        incoming: &[B(4)],
        bridge: &[B(2), B(2)],
        outgoing: &[B(4)],
        expected: 2,
    },
];

fn classes(pieces: &[Piece]) -> Vec<CycleClass> {
    let mut v: Vec<CycleClass> = pieces.iter().map(|p| p.class()).collect();
    v.sort();
    v
}

/// Number of admissible 3-cycles producing exactly the listed transition.
fn census_value(case: &CensusCase) -> Result<u128> {
    let (sigma, gamma) = configuration(case.incoming);
    let census = local_multiplicity_census(&sigma, &gamma, Sign::Plus)?;
    let want = TransitionDescriptor {
        incoming: classes(case.incoming),
        bridge: classes(case.bridge),
        outgoing: classes(case.outgoing),
        sign: Sign::Plus,
    };
    Ok(census.get(&want).copied().unwrap_or(0))
}

pub fn local_census() -> Report {
    timed(6, "local-census", || {
        let mut t = Tally::default();
        for case in CENSUS {
            let got = census_value(case)?;
            t.check(got == case.expected, || {
                format!("{}: {got} expected {}", case.label, case.expected)
            });
        }
        Ok(t.finish("configurations"))
    })
}

/// Types satisfying the non-vanishing hypothesis with `d <= max_d` and
/// `r <= max_r`.
pub fn nonvanishing_types(max_d: usize, max_r: usize) -> Vec<(usize, Partition, Partition)> {
    let ok = |p: &Partition| {
        let t = p.tail_decomposition();
        (t.odd_single.len(), t.even_single.is_empty())
    };
    let mut out = Vec::new();
    for d in 2..=max_d {
        let parts = Partition::all_of(d);
        for lambda in &parts {
            let (kl, el) = ok(lambda);
            if kl == 0 || !el {
                continue;
            }
            for mu in &parts {
                let (km, em) = ok(mu);
                if km != kl || !em {
                    continue;
                }
                for g in 0..=max_r {
                    let twice = lambda.len() + mu.len() + 2 * g;
                    if twice > 2 && twice % 2 == 0 && (twice - 2) / 2 <= max_r {
                        out.push((g, lambda.clone(), mu.clone()));
                    }
                }
            }
        }
    }
    out
}

pub fn nonvanishing(max_d: usize, max_r: usize, strategy: Strategy) -> Report {
    timed(7, "non-vanishing", || {
        let mut t = Tally::default();
        for (g, lambda, mu) in nonvanishing_types(max_d, max_r) {
            let built = build_nonvanishing(g, &lambda, &mu)?;
            let valid = validate_cover(&built.cover, g, &lambda, &mu).is_ok() && is_universally_enhanced(&built.cover);
            let key = universal_structure(&built.cover)?.canonical_key();
            let all = enumerate_universal_with(g, &lambda, &mu, strategy)?;
            let member = all.iter().any(|c| c.key == key);
            t.check(valid && member, || {
                format!(
                    "g={g} {lambda} -> {mu}: valid={valid} classes={} member={member}",
                    all.len()
                )
            });
        }
        Ok(t.finish("types"))
    })
}

/// `floor((m - 1) / 3)!`.
pub fn family_bound(m: usize) -> u128 {
    (1..=((m - 1) / 3) as u128).product()
}

pub fn asymptotic_family(builder_max_m: usize, enumeration_max_m: usize) -> Report {
    timed(8, "asymptotic-family", || {
        let mut t = Tally::default();
        for m in 4..=builder_max_m {
            let ones = Partition::ones(m);
            let mut keys = BTreeSet::new();
            let mut bad = 0usize;
            for c in build_block_family(m)? {
                if validate_cover(&c, 0, &ones, &ones).is_err() || !is_universally_enhanced(&c) {
                    bad += 1;
                }
                keys.insert(universal_structure(&c)?.canonical_key());
            }
            let bound = family_bound(m);
            t.check(bad == 0 && keys.len() as u128 >= bound, || {
                format!("m={m}: {} distinct, bound {bound}, {bad} invalid", keys.len())
            });
        }
        for m in 4..=enumeration_max_m {
            let ones = Partition::ones(m);
            let e = enhanced_number(0, &ones, &ones)?;
            let bound = family_bound(m);
            t.check(e >= bound, || format!("E_0(1^{m},1^{m})={e} < {bound}"));
        }
        Ok(t.finish("bounds"))
    })
}

/// Every criterion in order.
pub fn run_all(bounds: Bounds) -> Vec<Report> {
    let mut out = vec![fixed_target()];
    match oracle_table(bounds) {
        Ok(table) => {
            out.push(correspondence(&table, bounds.strategy));
            out.push(lower_bound(&table, bounds.strategy));
            out.push(sign_invariance(&table));
        }
        Err(e) => {
            for (c, name) in [(2, "correspondence"), (3, "lower-bound-parity"), (4, "sign-invariance")] {
                out.push(Report {
                    criterion: c,
                    name,
                    passed: false,
                    detail: format!("oracle table failed: {e}"),
                    elapsed: Duration::ZERO,
                });
            }
        }
    }
    out.push(unique_decomposition(bounds.max_d));
    out.push(local_census());
    out.push(nonvanishing(bounds.max_d + 2, bounds.max_r + 1, bounds.strategy));
    out.push(asymptotic_family(13, 7));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn configurations_are_real() {
        for case in CENSUS {
            let (sigma, gamma) = configuration(case.incoming);
            assert!(gamma.is_involution(), "{}", case.label);
            assert!(sigma.is_reversed_by(&gamma), "{}", case.label);
        }
    }

    #[test]
    fn family_bounds() {
        assert_eq!(family_bound(4), 1);
        assert_eq!(family_bound(7), 2);
        assert_eq!(family_bound(13), 24);
    }
}
