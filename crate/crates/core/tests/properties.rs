use proptest::prelude::*;

use hurwitz_core::oracle::{
    active_involution, decompose_with_involution, fold_real_tuples, local_multiplicity_census, real_decompose_3cycle,
    real_hurwitz_oracle,
};
use hurwitz_core::par::Strategy as Exec;
use hurwitz_core::perms::{
    branch_count, permutations_of_type, reversing_involutions, three_cycles, Partition, Permutation, Sign,
    SignSplitting,
};
use hurwitz_core::tropical::cover::Colour;
use hurwitz_core::tropical::export::{from_json, to_json};
use hurwitz_core::tropical::sweep::{enumerate_enhanced_covers_with, mult_enhanced};

fn perm(d: usize) -> impl Strategy<Value = Permutation> {
    Just((0..d).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn perms3(max_d: usize) -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1..=max_d).prop_flat_map(|d| (perm(d), perm(d), perm(d)))
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

/// A partition of some `d` in `lo..=hi`.
fn partition(lo: usize, hi: usize) -> impl Strategy<Value = Partition> {
    (lo..=hi).prop_flat_map(|d| {
        let all = Partition::all_of(d);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

/// A reversing pair `(sigma, gamma)` of degree `d`.
fn real_root(d: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    perm(d).prop_flat_map(|sigma| {
        let invs = reversing_involutions(&sigma);
        (Just(sigma), 0..invs.len()).prop_map(move |(s, i)| (s, invs[i].clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative((a, b, c) in perms3(8)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn conjugation_preserves_cycle_type((a, g, _) in perms3(8)) {
        prop_assert_eq!(a.conjugate_by(&g).unwrap().cycle_type(), a.cycle_type());
    }

    #[test]
    fn inverse_cancels((a, _, _) in perms3(8)) {
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
    }

    #[test]
    fn cycle_strings_round_trip((a, _, _) in perms3(8)) {
        let back = Permutation::parse_cycles(&a.to_cycle_string(), a.degree()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn partitions_round_trip(p in partition(1, 9)) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        prop_assert_eq!(p.tail_decomposition().reassemble(), p);
    }

    #[test]
    fn reversing_involutions_reverse((sigma, gamma) in (1usize..=6).prop_flat_map(real_root)) {
        prop_assert!(gamma.is_involution());
        prop_assert_eq!(gamma.compose(&sigma).unwrap().compose(&gamma).unwrap(), sigma.inverse());
    }

    #[test]
    fn decompositions_recompose(
        (sigma, gamma) in (3usize..=6).prop_flat_map(real_root),
        s in sign(),
        pick in any::<prop::sample::Index>(),
    ) {
        let inv = active_involution(&sigma, &gamma, s);
        let admissible: Vec<Permutation> = three_cycles(sigma.degree())
            .unwrap()
            .filter(|t| t.compose(&sigma).unwrap().is_reversed_by(&inv))
            .collect();
        prop_assume!(!admissible.is_empty());
        let tau = pick.get(&admissible);
        let (t1, t2) = real_decompose_3cycle(&sigma, &gamma, tau, s).unwrap();
        prop_assert_eq!(&t2.compose(&t1).unwrap(), tau);
        prop_assert!(t1.compose(&sigma).unwrap().is_reversed_by(&inv));
    }

    #[test]
    fn census_counts_admissible_cycles((sigma, gamma) in (3usize..=6).prop_flat_map(real_root), s in sign()) {
        let inv = active_involution(&sigma, &gamma, s);
        let direct = three_cycles(sigma.degree())
            .unwrap()
            .filter(|t| t.compose(&sigma).unwrap().is_reversed_by(&inv))
            .count() as u128;
        let census = local_multiplicity_census(&sigma, &gamma, s).unwrap();
        prop_assert_eq!(census.values().sum::<u128>(), direct);
    }
}

/// Types of degree at most `max_d` with `1 <= r <= max_r`, as `(g, lambda, mu, r)`.
fn small_type(max_d: usize, max_r: usize) -> impl Strategy<Value = (usize, Partition, Partition, usize)> {
    let mut out = Vec::new();
    for d in 3..=max_d {
        let parts = Partition::all_of(d);
        for l in &parts {
            for m in &parts {
                for g in 0..=1 {
                    if let Ok(r) = branch_count(g, l, m) {
                        if (1..=max_r).contains(&r) {
                            out.push((g, l.clone(), m.clone(), r));
                        }
                    }
                }
            }
        }
    }
    prop::sample::select(out)
}

fn splitting_and_shuffle(r: usize) -> impl Strategy<Value = (SignSplitting, SignSplitting)> {
    prop::collection::vec(sign(), r).prop_flat_map(|v| {
        let shuffled = Just(v.clone()).prop_shuffle();
        (Just(SignSplitting::new(v)), shuffled.prop_map(SignSplitting::new))
    })
}

fn typed_splitting(
    max_d: usize,
    max_r: usize,
) -> impl Strategy<Value = ((usize, Partition, Partition, usize), (SignSplitting, SignSplitting))> {
    small_type(max_d, max_r).prop_flat_map(|t| {
        let r = t.3;
        (Just(t), splitting_and_shuffle(r))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn oracle_ignores_sign_order(((g, l, m, _), (s, shuffled)) in typed_splitting(5, 3)) {
        let a = real_hurwitz_oracle(g, &l, &m, &s).unwrap();
        let b = real_hurwitz_oracle(g, &l, &m, &shuffled).unwrap();
        prop_assert_eq!(a.raw, b.raw);
    }

    #[test]
    fn transposition_chain_with_doubled_signs(((_, l, _, _), (s, _)) in typed_splitting(6, 2)) {
        let doubled = s.doubled();
        let checked = fold_real_tuples(
            &l,
            &s,
            Exec::Sequential,
            || Ok(0usize),
            |acc: &mut Result<usize, String>, t| {
                let Ok(n) = acc else { return };
                let mut product = t.sigma1.clone();
                let mut gamma = t.gamma.clone();
                let mut prev = Sign::Plus;
                for (i, tau) in t.taus.iter().enumerate() {
                    let mut halves = None;
                    for j in [2 * i, 2 * i + 1] {
                        if doubled[j] != prev {
                            gamma = gamma.compose(&product).unwrap();
                            prev = doubled[j];
                        }
                        if halves.is_none() {
                            match decompose_with_involution(&product, &gamma, tau) {
                                Ok((t1, t2)) => halves = Some([t1, t2]),
                                Err(e) => {
                                    *acc = Err(e.to_string());
                                    return;
                                }
                            }
                        }
                        let step = &halves.as_ref().expect("decomposed")[j - 2 * i];
                        product = step.compose(&product).unwrap();
                        if !gamma.is_involution() || !product.is_reversed_by(&gamma) {
                            *acc = Err(format!("transposition {j} breaks the chain"));
                            return;
                        }
                    }
                }
                *n += 1;
            },
            |a, b| Ok(a? + b?),
        )
        .unwrap();
        prop_assert!(checked.is_ok(), "{:?}", checked);
    }

    #[test]
    fn multiplicity_ignores_colours(((g, l, m, _), (s, _)) in typed_splitting(5, 3)) {
        for c in enumerate_enhanced_covers_with(g, &l, &m, &s, Exec::Sequential).unwrap() {
            let mut flipped = c.cover.clone();
            for col in flipped.real.colours.iter_mut().flatten() {
                *col = match col {
                    Colour::Red => Colour::Blue,
                    Colour::Blue => Colour::Red,
                };
            }
            prop_assert_eq!(mult_enhanced(&flipped).unwrap(), c.multiplicity);
        }
    }

    #[test]
    fn json_round_trips(((g, l, m, _), (s, _)) in typed_splitting(5, 3)) {
        for c in enumerate_enhanced_covers_with(g, &l, &m, &s, Exec::Sequential).unwrap() {
            let (back, split) = from_json(&to_json(&c.cover, Some(&s)).unwrap()).unwrap();
            prop_assert_eq!(back.canonical_key(), c.key);
            prop_assert_eq!(split, Some(s.clone()));
        }
    }

    #[test]
    fn sigma_orbits_are_complete(l in partition(1, 6)) {
        let d = l.sum();
        let n = permutations_of_type(d, &l).unwrap().count() as u128;
        let fact: u128 = (1..=d as u128).product();
        let centraliser: u128 = l
            .multiplicities()
            .iter()
            .map(|&(part, k)| (part as u128).pow(k as u32) * (1..=k as u128).product::<u128>())
            .product();
        prop_assert_eq!(n * centraliser, fact);
    }
}
