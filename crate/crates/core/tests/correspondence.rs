use hurwitz_core::oracle::{real_hurwitz_oracle, SearchMode};
use hurwitz_core::par::Strategy;
use hurwitz_core::perms::{branch_count, Partition, SignSplitting};
use hurwitz_core::tropical::cover::Endpoint;
use hurwitz_core::tropical::export::{export_all, from_json, from_json_all, to_json, Format};
use hurwitz_core::tropical::reference::compare_with_sweep;
use hurwitz_core::tropical::sweep::{enumerate_enhanced_covers_with, real_hurwitz_tropical};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn types(max_d: usize, max_r: usize) -> Vec<(usize, Partition, Partition, usize)> {
    let mut out = Vec::new();
    for d in 1..=max_d {
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
fn labeled_reference_agrees_up_to_degree_five() {
    let mut checked = 0;
    for (g, lambda, mu, r) in types(5, 3) {
        for s in SignSplitting::all(r) {
            let cmp = compare_with_sweep(g, &lambda, &mu, &s, Strategy::default()).unwrap();
            assert!(cmp.ok(), "g={g} {lambda} -> {mu} {s}: {:?}", cmp.problems);
            checked += 1;
        }
    }
    assert!(checked > 100, "only {checked} splittings");
}

#[test]
fn three_to_ones_count_once() {
    for s in ["+", "-"] {
        let s = s.parse().unwrap();
        let t = real_hurwitz_tropical(0, &p("3"), &p("1,1,1"), &s).unwrap();
        let o = real_hurwitz_oracle(0, &p("3"), &p("1,1,1"), &s).unwrap();
        assert_eq!(t, 1);
        assert_eq!(o.raw, 6);
        assert_eq!(o.as_integer(), Some(t));
    }
}

#[test]
fn naive_and_pruned_oracles_agree() {
    use hurwitz_core::oracle::count_real_tuples_with;
    for (g, lambda, mu, r) in types(4, 2) {
        for s in SignSplitting::all(r) {
            let a = count_real_tuples_with(g, &lambda, &mu, &s, SearchMode::Pruned, Strategy::Sequential).unwrap();
            let b = count_real_tuples_with(g, &lambda, &mu, &s, SearchMode::Naive, Strategy::Sequential).unwrap();
            assert_eq!(a, b, "g={g} {lambda} -> {mu} {s}");
        }
    }
}

#[test]
fn sweep_strategies_agree() {
    for (g, l, m, s) in [
        (0, "4,2", "3,3", "-"),
        (1, "3,1", "2,2", "+-"),
        (0, "1,1,1,1", "1,1,1,1", "+-+"),
    ] {
        let (l, m, s) = (p(l), p(m), s.parse().unwrap());
        let a = enumerate_enhanced_covers_with(g, &l, &m, &s, Strategy::Sequential).unwrap();
        let b = enumerate_enhanced_covers_with(g, &l, &m, &s, Strategy::Parallel).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn three_to_ones_export() {
    let s: SignSplitting = "+".parse().unwrap();
    let classes = enumerate_enhanced_covers_with(0, &p("3"), &p("1,1,1"), &s, Strategy::Sequential).unwrap();
    assert_eq!(classes.len(), 1);
    let text = to_json(&classes[0].cover, Some(&s)).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["pairs"].as_array().unwrap().len(), 1);
    let edges = doc["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 5);
    assert_eq!(edges.iter().filter(|e| e["from"] == "-inf").count(), 1);
    assert_eq!(edges.iter().filter(|e| e["to"] == "+inf").count(), 3);
    assert_eq!(edges.iter().filter(|e| e["dotted_pair"].is_number()).count(), 2);
    let (back, _) = from_json(&text).unwrap();
    let ends: Vec<_> = back.cover.edges.iter().filter(|e| e.from == Endpoint::NegInf).collect();
    assert_eq!(ends.len(), 1);
    assert_eq!(ends[0].weight, 3);
}

#[test]
fn export_all_round_trips() {
    let s: SignSplitting = "-+".parse().unwrap();
    let classes = enumerate_enhanced_covers_with(0, &p("2,2"), &p("1,1,1,1"), &s, Strategy::Sequential).unwrap();
    let text = export_all(classes.iter().map(|c| &c.cover), Some(&s), Format::Json).unwrap();
    let back = from_json_all(&text).unwrap();
    assert_eq!(back.len(), classes.len());
    for (c, (b, split)) in classes.iter().zip(back) {
        assert_eq!(b.canonical_key(), c.key);
        assert_eq!(split.as_ref(), Some(&s));
    }
    let dot = export_all(classes.iter().map(|c| &c.cover), Some(&s), Format::Dot).unwrap();
    assert_eq!(dot.matches("digraph").count(), classes.len());
}
