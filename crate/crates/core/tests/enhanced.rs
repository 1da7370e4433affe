use std::collections::BTreeSet;

use hurwitz_core::enhanced::{
    build_block_family, build_nonvanishing_cover, canonical_colouring, coloured_cover, enhanced_number,
    enumerate_universal, is_universally_enhanced, universal_mult, universal_structure,
};
use hurwitz_core::par::Strategy;
use hurwitz_core::perms::{branch_count, Partition, SignSplitting};
use hurwitz_core::tropical::cover::{validate_cover, Colour};
use hurwitz_core::tropical::sweep::{enumerate_enhanced_covers_with, mult_enhanced};
use hurwitz_core::HurwitzError;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn types(max_d: usize, max_r: usize) -> Vec<(usize, Partition, Partition, usize)> {
    let mut out = Vec::new();
    for d in 2..=max_d {
        let parts = Partition::all_of(d);
        for lambda in &parts {
            for mu in &parts {
                for g in 0..=max_r {
                    if let Ok(r) = branch_count(g, lambda, mu) {
                        if (1..=max_r).contains(&r) {
                            out.push((g, lambda.clone(), mu.clone(), r));
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn colourings_sum_to_enhanced_number() {
    for (g, lambda, mu, r) in types(5, 3) {
        let universal = enumerate_universal(g, &lambda, &mu).unwrap();
        let e = enhanced_number(g, &lambda, &mu).unwrap();
        assert_eq!(e, universal.iter().map(|c| c.multiplicity).sum::<u128>());
        for s in SignSplitting::all(r) {
            let swept: BTreeSet<String> = enumerate_enhanced_covers_with(g, &lambda, &mu, &s, Strategy::Sequential)
                .unwrap()
                .into_iter()
                .map(|c| c.key)
                .collect();
            let mut total = 0;
            for c in &universal {
                let coloured = coloured_cover(&c.cover.cover, &s).unwrap();
                assert!(swept.contains(&coloured.canonical_key()), "g={g} {lambda} -> {mu} {s}");
                total += mult_enhanced(&coloured).unwrap();
            }
            assert_eq!(total, e, "g={g} {lambda} -> {mu} {s}");
        }
    }
}

#[test]
fn universal_multiplicity_matches_coloured() {
    for (g, lambda, mu, r) in types(6, 3) {
        let s = SignSplitting::all_plus(r);
        for c in enumerate_universal(g, &lambda, &mu).unwrap() {
            let m = universal_mult(&c.cover.cover).unwrap();
            assert_eq!(m, c.multiplicity);
            assert_eq!(m, mult_enhanced(&coloured_cover(&c.cover.cover, &s).unwrap()).unwrap());
        }
    }
}

#[test]
fn odd_multiplicity_implies_universal() {
    for (g, lambda, mu, r) in types(5, 3) {
        for s in SignSplitting::all(r) {
            for c in enumerate_enhanced_covers_with(g, &lambda, &mu, &s, Strategy::Sequential).unwrap() {
                if c.multiplicity % 2 == 1 {
                    assert!(
                        is_universally_enhanced(&c.cover.cover),
                        "g={g} {lambda} -> {mu} {s}: {}",
                        c.key
                    );
                }
            }
        }
    }
}

#[test]
fn universal_without_dotted_circles_is_odd() {
    let mut seen = 0;
    for (g, lambda, mu, r) in types(6, 3) {
        if r < 2 {
            continue;
        }
        for c in enumerate_universal(g, &lambda, &mu).unwrap() {
            if c.cover.dotted_circles().is_empty() {
                assert_eq!(c.multiplicity % 2, 1, "g={g} {lambda} -> {mu}: {}", c.key);
                seen += 1;
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn dotted_circles_double_the_multiplicity() {
    let mut seen = 0;
    for (g, lambda, mu, _) in types(6, 3) {
        for c in enumerate_universal(g, &lambda, &mu).unwrap() {
            let circles = c.cover.dotted_circles().len() as u32;
            if circles > 0 {
                assert_eq!(c.multiplicity % 2u128.pow(circles), 0, "{}", c.key);
                seen += 1;
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn dotted_set_is_independent_of_splitting() {
    for (g, lambda, mu, r) in types(5, 3) {
        for c in enumerate_universal(g, &lambda, &mu).unwrap() {
            let dotted: BTreeSet<Vec<[usize; 2]>> = SignSplitting::all(r)
                .iter()
                .map(|s| canonical_colouring(&c.cover.cover, s).unwrap().dotted)
                .collect();
            assert_eq!(dotted.len(), 1, "{}", c.key);
        }
    }
}

#[test]
fn three_to_ones_colouring() {
    let classes = enumerate_universal(0, &p("3"), &p("1,1,1")).unwrap();
    assert_eq!(classes.len(), 1);
    assert_eq!(enhanced_number(0, &p("3"), &p("1,1,1")).unwrap(), 1);
    let cover = &classes[0].cover.cover;
    let bridge = (0..cover.edges.len()).find(|&k| cover.edges[k].weight == 2).unwrap();
    for (s, colour) in [("+", Colour::Blue), ("-", Colour::Red)] {
        let real = canonical_colouring(cover, &s.parse().unwrap()).unwrap();
        assert_eq!(real.dotted.len(), 1);
        assert_eq!(real.colours[bridge], Some(colour));
    }
}

#[test]
fn nonvanishing_builder_examples() {
    let c = build_nonvanishing_cover(0, &p("3"), &p("1,1,1")).unwrap();
    assert_eq!(
        universal_structure(&c).unwrap().canonical_key(),
        enumerate_universal(0, &p("3"), &p("1,1,1")).unwrap()[0].key
    );
    let c = build_nonvanishing_cover(1, &p("3"), &p("1,1,1")).unwrap();
    assert_eq!(c.genus(), 1);
    assert!(validate_cover(&c, 1, &p("3"), &p("1,1,1")).is_ok());
    assert!(is_universally_enhanced(&c));
    assert!(matches!(
        build_nonvanishing_cover(0, &p("2"), &p("2")),
        Err(HurwitzError::HypothesisNotMet(_) | HurwitzError::DegenerateBranchData(_))
    ));
}

#[test]
fn block_family_counts() {
    for (m, want) in [(4, 1), (7, 2)] {
        let ones = Partition::ones(m);
        let keys: BTreeSet<String> = build_block_family(m)
            .unwrap()
            .map(|c| {
                assert!(validate_cover(&c, 0, &ones, &ones).is_ok());
                assert!(is_universally_enhanced(&c));
                universal_structure(&c).unwrap().canonical_key()
            })
            .collect();
        assert_eq!(keys.len(), want, "m={m}");
    }
    assert!(enhanced_number(0, &Partition::ones(4), &Partition::ones(4)).unwrap() >= 1);
    assert!(build_block_family(3).is_err());
}

#[test]
fn single_pair_universal_covers_can_be_even() {
    let even: Vec<String> = types(6, 1)
        .into_iter()
        .flat_map(|(g, lambda, mu, _)| enumerate_universal(g, &lambda, &mu).unwrap())
        .filter(|c| c.cover.dotted_circles().is_empty() && c.multiplicity % 2 == 0)
        .map(|c| c.key)
        .collect();
    assert!(!even.is_empty());
}
