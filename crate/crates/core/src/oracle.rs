//! Counting monodromy tuples in `S_d`.
//!
//! A real tuple is `(gamma, s1, t_1, ..., t_r, s2)` with `s2 . t_r ... t_1 . s1 = id`,
//! `s1` of type `lambda`, every `t_i` a 3-cycle, `s2` of type `mu`, the group
//! generated by `s1, t_1, ..., t_r` transitive, and a chain of involutions
//! `gamma_i` reversing every partial product `t_i ... t_1 . s1`:
//!
//! * `gamma_0 = gamma` reverses `s1` and is attached to the sign `+`;
//! * `gamma_i = gamma_{i-1}` when the sign does not change, otherwise
//!   `gamma_i = gamma_{i-1} . (t_{i-1} ... t_1 . s1)`.
//!
//! The search fixes `s1`, then `gamma`, then extends the chain of 3-cycles
//! one step at a time keeping only those that satisfy the reality condition
//! for the current partial product.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{HurwitzError, Result};
use crate::par::{self, Strategy};
use crate::perms::{
    branch_count, check_degree, is_transitive, permutations_of_type, reversing_involutions, three_cycles, Partition,
    Permutation, Sign, SignSplitting,
};
use crate::tropical::templates::{self, Shape};

/// A tuple count together with its normalisation by `d!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzCount {
    pub raw: u128,
    pub degree_factorial: u128,
    pub value: Ratio<u128>,
}

impl HurwitzCount {
    pub fn new(raw: u128, degree: usize) -> Result<Self> {
        let degree_factorial = factorial(degree)?;
        Ok(HurwitzCount {
            raw,
            degree_factorial,
            value: Ratio::new(raw, degree_factorial),
        })
    }

    /// The value when it is an integer.
    pub fn as_integer(&self) -> Option<u128> {
        self.value.is_integer().then(|| self.value.to_integer())
    }
}

impl fmt::Display for HurwitzCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.is_integer() {
            write!(f, "{}", self.value.numer())
        } else {
            write!(f, "{}/{}", self.value.numer(), self.value.denom())
        }
    }
}

pub fn factorial(n: usize) -> Result<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| {
        acc.checked_mul(k).ok_or(HurwitzError::Overflow("factorial"))
    })
}

/// One complete real tuple, as seen by a visitor.
pub struct RealTuple<'a> {
    pub gamma: &'a Permutation,
    pub sigma1: &'a Permutation,
    pub taus: &'a [Permutation],
    /// `t_r ... t_1 . s1`, the inverse of `s2`.
    pub product: &'a Permutation,
    pub signs: &'a SignSplitting,
}

/// Which implementation counts real tuples.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SearchMode {
    /// Depth-first with per-step reality filtering.
    #[default]
    Pruned,
    /// Enumerates every involution and every sequence of 3-cycles, then
    /// filters. Exponentially slower; kept as a reference.
    Naive,
}

struct RealSearch<'a> {
    d: usize,
    sigma1: &'a Permutation,
    gamma: &'a Permutation,
    signs: &'a SignSplitting,
    cycles3: &'a [Permutation],
}

impl RealSearch<'_> {
    fn run<F: FnMut(&RealTuple<'_>)>(&self, visit: &mut F) {
        let mut taus = Vec::with_capacity(self.signs.len());
        self.step(self.sigma1, self.gamma, Sign::Plus, &mut taus, visit);
    }

    fn step<F: FnMut(&RealTuple<'_>)>(
        &self,
        product: &Permutation,
        involution: &Permutation,
        prev_sign: Sign,
        taus: &mut Vec<Permutation>,
        visit: &mut F,
    ) {
        let depth = taus.len();
        if depth == self.signs.len() {
            let mut gens = Vec::with_capacity(depth + 1);
            gens.push(self.sigma1.clone());
            gens.extend(taus.iter().cloned());
            if is_transitive(&gens, self.d) {
                visit(&RealTuple {
                    gamma: self.gamma,
                    sigma1: self.sigma1,
                    taus,
                    product,
                    signs: self.signs,
                });
            }
            return;
        }
        let sign = self.signs.signs()[depth];
        let active = if sign == prev_sign {
            involution.clone()
        } else {
            involution.compose_unchecked(product)
        };
        for tau in self.cycles3 {
            let next = tau.compose_unchecked(product);
            if active.compose_unchecked(&next).is_involution() {
                taus.push(tau.clone());
                self.step(&next, &active, sign, taus, visit);
                taus.pop();
            }
        }
    }
}

/// All `(s1, gamma)` starting points for partition `lambda`.
pub fn real_roots(lambda: &Partition) -> Result<Vec<(Permutation, Permutation)>> {
    let d = lambda.sum();
    let mut roots = Vec::new();
    for sigma in permutations_of_type(d, lambda)? {
        for gamma in reversing_involutions(&sigma) {
            roots.push((sigma.clone(), gamma));
        }
    }
    Ok(roots)
}

fn cycles3_or_empty(d: usize) -> Result<Vec<Permutation>> {
    if d < 3 {
        return Ok(Vec::new());
    }
    Ok(three_cycles(d)?.collect())
}

/// Folds a visitor over every transitive real tuple with `s1` of type
/// `lambda` and the given signs, any `s2`. Each root is folded separately
/// (possibly in parallel) and the partial results are merged in root order.
pub fn fold_real_tuples<A, I, F, M>(
    lambda: &Partition,
    signs: &SignSplitting,
    strategy: Strategy,
    init: I,
    visit: F,
    merge: M,
) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &RealTuple<'_>) + Sync + Send,
    M: Fn(A, A) -> A,
{
    let d = lambda.sum();
    check_degree(d)?;
    if signs.is_empty() {
        return Err(HurwitzError::InvalidSigns(
            "at least one branch pair is required".into(),
        ));
    }
    let roots = real_roots(lambda)?;
    let cycles3 = cycles3_or_empty(d)?;
    let parts = par::map(&roots, strategy, |(sigma1, gamma)| {
        let mut acc = init();
        let search = RealSearch {
            d,
            sigma1,
            gamma,
            signs,
            cycles3: &cycles3,
        };
        search.run(&mut |t| visit(&mut acc, t));
        acc
    });
    Ok(parts.into_iter().fold(init(), merge))
}

/// Number of transitive real tuples for `lambda` and `signs`, keyed by the
/// cycle type of `s2`.
pub fn real_census(lambda: &Partition, signs: &SignSplitting, strategy: Strategy) -> Result<BTreeMap<Partition, u128>> {
    fold_real_tuples(
        lambda,
        signs,
        strategy,
        BTreeMap::new,
        |acc: &mut BTreeMap<Partition, u128>, t| {
            *acc.entry(t.product.cycle_type()).or_insert(0) += 1;
        },
        merge_counts,
    )
}

fn merge_counts<K: Ord>(mut a: BTreeMap<K, u128>, b: BTreeMap<K, u128>) -> BTreeMap<K, u128> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

fn check_signs(r: usize, signs: &SignSplitting) -> Result<()> {
    if signs.len() != r {
        return Err(HurwitzError::InvalidSigns(format!(
            "expected {r} signs, got {} (`{signs}`)",
            signs.len()
        )));
    }
    Ok(())
}

/// `|F^R(g, lambda, mu; signs)|`.
pub fn count_real_tuples(g: usize, lambda: &Partition, mu: &Partition, signs: &SignSplitting) -> Result<u128> {
    count_real_tuples_with(g, lambda, mu, signs, SearchMode::Pruned, Strategy::default())
}

pub fn count_real_tuples_with(
    g: usize,
    lambda: &Partition,
    mu: &Partition,
    signs: &SignSplitting,
    mode: SearchMode,
    strategy: Strategy,
) -> Result<u128> {
    let r = branch_count(g, lambda, mu)?;
    check_signs(r, signs)?;
    check_degree(lambda.sum())?;
    match mode {
        SearchMode::Pruned => Ok(real_census(lambda, signs, strategy)?.get(mu).copied().unwrap_or(0)),
        SearchMode::Naive => count_real_tuples_naive(lambda, mu, signs),
    }
}

fn all_involutions(d: usize) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for t in Partition::all_of(d) {
        if t.parts().iter().all(|&p| p <= 2) {
            out.extend(permutations_of_type(d, &t)?);
        }
    }
    out.sort();
    Ok(out)
}

fn count_real_tuples_naive(lambda: &Partition, mu: &Partition, signs: &SignSplitting) -> Result<u128> {
    let d = lambda.sum();
    let r = signs.len();
    let cycles3 = cycles3_or_empty(d)?;
    let involutions = all_involutions(d)?;
    let mut count = 0u128;
    if cycles3.is_empty() {
        return Ok(0);
    }
    for sigma1 in permutations_of_type(d, lambda)? {
        let sigma_inv = sigma1.inverse();
        for gamma in &involutions {
            if gamma.compose_unchecked(&sigma1).compose_unchecked(gamma) != sigma_inv {
                continue;
            }
            let mut idx = vec![0usize; r];
            'tuples: loop {
                let taus: Vec<&Permutation> = idx.iter().map(|&i| &cycles3[i]).collect();
                if naive_tuple_ok(&sigma1, gamma, &taus, signs, mu) {
                    count += 1;
                }
                for pos in (0..r).rev() {
                    idx[pos] += 1;
                    if idx[pos] < cycles3.len() {
                        continue 'tuples;
                    }
                    idx[pos] = 0;
                }
                break;
            }
        }
    }
    Ok(count)
}

fn naive_tuple_ok(
    sigma1: &Permutation,
    gamma: &Permutation,
    taus: &[&Permutation],
    signs: &SignSplitting,
    mu: &Partition,
) -> bool {
    let d = sigma1.degree();
    let mut partials = vec![sigma1.clone()];
    for t in taus {
        let last = partials.last().expect("nonempty");
        partials.push(t.compose_unchecked(last));
    }
    let sigma2 = partials[taus.len()].inverse();
    if sigma2.cycle_type() != *mu {
        return false;
    }
    let mut gens = vec![sigma1.clone()];
    gens.extend(taus.iter().map(|t| (*t).clone()));
    if !is_transitive(&gens, d) {
        return false;
    }
    let mut g_i = gamma.clone();
    let mut prev = Sign::Plus;
    for (i, &s) in signs.signs().iter().enumerate() {
        if s != prev {
            g_i = g_i.compose_unchecked(&partials[i]);
        }
        prev = s;
        let p = &partials[i + 1];
        if !g_i.is_involution() || g_i.compose_unchecked(p).compose_unchecked(&g_i) != p.inverse() {
            return false;
        }
    }
    true
}

/// `bar H^R_g(lambda, mu; s) = |F^R| / d!`.
pub fn real_hurwitz_oracle(
    g: usize,
    lambda: &Partition,
    mu: &Partition,
    signs: &SignSplitting,
) -> Result<HurwitzCount> {
    let raw = count_real_tuples(g, lambda, mu, signs)?;
    HurwitzCount::new(raw, lambda.sum())
}

/// Transitive tuples `(s1, t_1, ..., t_r)` with `s1` of type `lambda`, keyed
/// by the cycle type of `s2`.
pub fn complex_census(lambda: &Partition, r: usize, strategy: Strategy) -> Result<BTreeMap<Partition, u128>> {
    let d = lambda.sum();
    check_degree(d)?;
    let cycles3 = cycles3_or_empty(d)?;
    let sigmas: Vec<Permutation> = permutations_of_type(d, lambda)?.collect();
    let parts = par::map(&sigmas, strategy, |sigma1| {
        let mut acc = BTreeMap::new();
        let mut taus = Vec::with_capacity(r);
        complex_step(d, sigma1, sigma1, r, &cycles3, &mut taus, &mut acc);
        acc
    });
    Ok(parts.into_iter().fold(BTreeMap::new(), merge_counts))
}

fn complex_step(
    d: usize,
    sigma1: &Permutation,
    product: &Permutation,
    r: usize,
    cycles3: &[Permutation],
    taus: &mut Vec<Permutation>,
    acc: &mut BTreeMap<Partition, u128>,
) {
    if taus.len() == r {
        let mut gens = vec![sigma1.clone()];
        gens.extend(taus.iter().cloned());
        if is_transitive(&gens, d) {
            *acc.entry(product.cycle_type()).or_insert(0) += 1;
        }
        return;
    }
    for tau in cycles3 {
        taus.push(tau.clone());
        complex_step(d, sigma1, &tau.compose_unchecked(product), r, cycles3, taus, acc);
        taus.pop();
    }
}

/// `H^C_g(lambda, mu)` with 3-cycle branch points.
pub fn complex_hurwitz_oracle(g: usize, lambda: &Partition, mu: &Partition) -> Result<HurwitzCount> {
    let r = branch_count(g, lambda, mu)?;
    let raw = complex_census(lambda, r, Strategy::default())?
        .get(mu)
        .copied()
        .unwrap_or(0);
    HurwitzCount::new(raw, lambda.sum())
}

/// Number of sequences of `(d-1)/2` 3-cycles whose product is `(1 2 ... d)`.
pub fn count_fixed_target_factorizations(d: usize) -> Result<u128> {
    if d < 3 || d.is_multiple_of(2) {
        return Err(HurwitzError::DegenerateBranchData(format!(
            "a d-cycle factors into 3-cycles minimally only for odd d >= 3, got d={d}"
        )));
    }
    check_degree(d)?;
    let r = (d - 1) / 2;
    let images: Vec<usize> = (0..d).map(|i| (i + 1) % d).collect();
    let target = Permutation::from_images(&images)?;
    let cycles3: Vec<Permutation> = three_cycles(d)?.collect();
    let firsts: Vec<&Permutation> = cycles3.iter().collect();
    let counts = par::map(&firsts, Strategy::default(), |t1| {
        fixed_target_step(&target, t1, r - 1, &cycles3)
    });
    Ok(counts.into_iter().sum())
}

fn fixed_target_step(target: &Permutation, prefix: &Permutation, left: usize, cycles3: &[Permutation]) -> u128 {
    if left == 0 {
        return u128::from(prefix == target);
    }
    if left == 1 {
        let last = target.compose_unchecked(&prefix.inverse());
        return u128::from(is_three_cycle(&last));
    }
    cycles3
        .iter()
        .map(|t| fixed_target_step(target, &t.compose_unchecked(prefix), left - 1, cycles3))
        .sum()
}

fn is_three_cycle(p: &Permutation) -> bool {
    let moved = (0..p.degree()).filter(|&x| p.apply(x) != x).count();
    moved == 3 && p.compose_unchecked(p).compose_unchecked(p).is_identity()
}

/// The points `(a, b, c)` of a 3-cycle with `a -> b -> c -> a`, `a` smallest.
pub(crate) fn three_cycle_points(tau: &Permutation) -> Option<(usize, usize, usize)> {
    if !is_three_cycle(tau) {
        return None;
    }
    let a = (0..tau.degree()).find(|&x| tau.apply(x) != x)?;
    let b = tau.apply(a);
    Some((a, b, tau.apply(b)))
}

/// The three factorisations `t = t2 . t1` of a 3-cycle into transpositions.
pub fn three_cycle_splittings(tau: &Permutation) -> Result<[(Permutation, Permutation); 3]> {
    let (a, b, c) =
        three_cycle_points(tau).ok_or_else(|| HurwitzError::Precondition(format!("{tau} is not a 3-cycle")))?;
    let d = tau.degree();
    let t = |x, y| Permutation::transposition(d, x, y);
    Ok([(t(a, b), t(a, c)), (t(b, c), t(a, b)), (t(a, c), t(b, c))])
}

/// The involution the reality condition is checked against for a pair with
/// the given sign: `gamma` itself, or `gamma . sigma`.
pub fn active_involution(sigma: &Permutation, gamma: &Permutation, sign: Sign) -> Permutation {
    match sign {
        Sign::Plus => gamma.clone(),
        Sign::Minus => gamma.compose_unchecked(sigma),
    }
}

/// The unique `(t1, t2)` with `t = t2 . t1` and `t1 . sigma` reversed by the
/// active involution.
pub fn real_decompose_3cycle(
    sigma: &Permutation,
    gamma: &Permutation,
    tau: &Permutation,
    sign: Sign,
) -> Result<(Permutation, Permutation)> {
    check_reversing(sigma, gamma)?;
    decompose_with_involution(sigma, &active_involution(sigma, gamma, sign), tau)
}

fn check_reversing(sigma: &Permutation, gamma: &Permutation) -> Result<()> {
    if sigma.degree() != gamma.degree() {
        return Err(HurwitzError::DegreeMismatch {
            left: sigma.degree(),
            right: gamma.degree(),
        });
    }
    if !sigma.is_reversed_by(gamma) {
        return Err(HurwitzError::Precondition(format!(
            "{gamma} is not an involution reversing {sigma}"
        )));
    }
    Ok(())
}

/// As [`real_decompose_3cycle`] with the active involution given directly.
pub fn decompose_with_involution(
    sigma: &Permutation,
    inv: &Permutation,
    tau: &Permutation,
) -> Result<(Permutation, Permutation)> {
    if tau.degree() != sigma.degree() {
        return Err(HurwitzError::DegreeMismatch {
            left: sigma.degree(),
            right: tau.degree(),
        });
    }
    let after = tau.compose_unchecked(sigma);
    if !after.is_reversed_by(inv) || !sigma.is_reversed_by(inv) {
        return Err(HurwitzError::Precondition(format!(
            "{inv} does not reverse both {sigma} and {tau}.{sigma}"
        )));
    }
    let mut found: Option<(Permutation, Permutation)> = None;
    let mut hits = 0;
    for (t1, t2) in three_cycle_splittings(tau)? {
        if t1.compose_unchecked(sigma).is_reversed_by(inv) {
            hits += 1;
            found = Some((t1, t2));
        }
    }
    match (hits, found) {
        (1, Some(pair)) => Ok(pair),
        _ => Err(HurwitzError::LemmaViolation(format!(
            "{hits} admissible splittings of {tau} over sigma={sigma}, involution={inv}"
        ))),
    }
}

/// How a cycle sits relative to an involution that reverses its permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CycleKind {
    OddReal,
    EvenRealNoFix,
    EvenRealTwoFix,
    ConjugatedPair,
}

/// A cycle (or a conjugated pair of cycles, each of length `size`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CycleClass {
    pub kind: CycleKind,
    pub size: usize,
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            CycleKind::OddReal => "O",
            CycleKind::EvenRealNoFix => "E0",
            CycleKind::EvenRealTwoFix => "E2",
            CycleKind::ConjugatedPair => "D",
        };
        write!(f, "{tag}({})", self.size)
    }
}

/// The cycles a 3-cycle consumes, passes between its two transpositions,
/// and produces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TransitionDescriptor {
    pub incoming: Vec<CycleClass>,
    pub bridge: Vec<CycleClass>,
    pub outgoing: Vec<CycleClass>,
    pub sign: Sign,
}

impl TransitionDescriptor {
    /// Total degree on each side; the two agree for every census entry.
    pub fn degrees(&self) -> (usize, usize) {
        let total = |v: &[CycleClass]| {
            v.iter()
                .map(|c| {
                    if c.kind == CycleKind::ConjugatedPair {
                        2 * c.size
                    } else {
                        c.size
                    }
                })
                .sum()
        };
        (total(&self.incoming), total(&self.outgoing))
    }

    /// The pair shape this transition realises, if exactly one fits.
    pub fn shape(&self) -> Option<Shape> {
        match templates::shapes_for_descriptor(self).as_slice() {
            [one] => Some(*one),
            _ => None,
        }
    }
}

impl fmt::Display for TransitionDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[CycleClass]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
        write!(
            f,
            "[{}] -> bridge [{}] -> [{}] ({})",
            list(&self.incoming),
            list(&self.bridge),
            list(&self.outgoing),
            self.sign.as_char()
        )
    }
}

/// Classifies every cycle of `perm` under an involution reversing it.
/// Returns, per cycle (in [`Permutation::cycles`] order), the class and the
/// index of the conjugate cycle if any.
pub(crate) fn classify_cycles(perm: &Permutation, inv: &Permutation) -> Vec<(Vec<usize>, CycleClass, Option<usize>)> {
    let cycles = perm.cycles();
    let mut owner = vec![0usize; perm.degree()];
    for (i, c) in cycles.iter().enumerate() {
        for &x in c {
            owner[x] = i;
        }
    }
    cycles
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let image = owner[inv.apply(c[0])];
            let size = c.len();
            if image != i {
                return (
                    c.clone(),
                    CycleClass {
                        kind: CycleKind::ConjugatedPair,
                        size,
                    },
                    Some(image),
                );
            }
            let fixed = c.iter().filter(|&&x| inv.apply(x) == x).count();
            let kind = match (size % 2, fixed) {
                (1, _) => CycleKind::OddReal,
                (_, 0) => CycleKind::EvenRealNoFix,
                _ => CycleKind::EvenRealTwoFix,
            };
            (c.clone(), CycleClass { kind, size }, None)
        })
        .collect()
}

/// Classes of the cycles of `perm` that contain any of `points`; a
/// conjugated pair is reported once.
fn touched_classes(perm: &Permutation, inv: &Permutation, points: &[usize], only: Option<&[usize]>) -> Vec<CycleClass> {
    let classes = classify_cycles(perm, inv);
    let mut picked: Vec<usize> = classes
        .iter()
        .enumerate()
        .filter(|(_, (c, _, _))| c.iter().any(|x| points.contains(x)))
        .filter(|(_, (c, _, _))| only.is_none_or(|o| c.iter().any(|x| o.contains(x))))
        .map(|(i, _)| i)
        .collect();
    picked.retain(|&i| match classes[i].2 {
        Some(j) => i < j || !picked_contains(&classes, points, only, j),
        None => true,
    });
    let mut out: Vec<CycleClass> = picked.into_iter().map(|i| classes[i].1).collect();
    out.sort();
    out
}

fn picked_contains(
    classes: &[(Vec<usize>, CycleClass, Option<usize>)],
    points: &[usize],
    only: Option<&[usize]>,
    j: usize,
) -> bool {
    let c = &classes[j].0;
    c.iter().any(|x| points.contains(x)) && only.is_none_or(|o| c.iter().any(|x| o.contains(x)))
}

/// For fixed `(sigma, gamma, sign)`, counts the 3-cycles `t` for which the
/// active involution reverses `t . sigma`, grouped by the transition they
/// induce.
pub fn local_multiplicity_census(
    sigma: &Permutation,
    gamma: &Permutation,
    sign: Sign,
) -> Result<BTreeMap<TransitionDescriptor, u128>> {
    check_reversing(sigma, gamma)?;
    let d = sigma.degree();
    let inv = active_involution(sigma, gamma, sign);
    let mut out = BTreeMap::new();
    for tau in cycles3_or_empty(d)? {
        let after = tau.compose_unchecked(sigma);
        if !inv.compose_unchecked(&after).is_involution() {
            continue;
        }
        let desc = describe_transition(sigma, &inv, &tau, sign)?;
        *out.entry(desc).or_insert(0) += 1;
    }
    Ok(out)
}

/// The transition induced by one admissible 3-cycle.
pub fn describe_transition(
    sigma: &Permutation,
    inv: &Permutation,
    tau: &Permutation,
    sign: Sign,
) -> Result<TransitionDescriptor> {
    let (t1, t2) = decompose_with_involution(sigma, inv, tau)?;
    let (a, b, c) = three_cycle_points(tau).expect("checked by decomposition");
    let support = [a, b, c];
    let p1: Vec<usize> = (0..sigma.degree()).filter(|&x| t1.apply(x) != x).collect();
    let p2: Vec<usize> = (0..sigma.degree()).filter(|&x| t2.apply(x) != x).collect();
    let middle = t1.compose_unchecked(sigma);
    let after = tau.compose_unchecked(sigma);
    Ok(TransitionDescriptor {
        incoming: touched_classes(sigma, inv, &support, None),
        bridge: touched_classes(&middle, inv, &p1, Some(&p2)),
        outgoing: touched_classes(&after, inv, &support, None),
        sign,
    })
}
