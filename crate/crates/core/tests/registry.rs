mod common;

use certidom_core::enumerate::{enumerate_labeled_graphs, DEFAULT_MAX_ORDER};
use certidom_core::families::FamilySpec;
use certidom_core::graph::named;
use certidom_core::structure::{classify_structure, StructureKind};
use certidom_core::theorems::{
    chain_pattern, check_theorem, ids, lookup, registry, Chain, InputKind, Outcome,
};
use certidom_core::InvariantKind;
use common::Matrix;

const REQUIRED: [&str; 21] = [
    "thm-2.1",
    "cor-2.2",
    "cor-2.3",
    "cor-2.4",
    "cor-2.5",
    "thm-2.6",
    "thm-2.7",
    "cor-2.8",
    "lem-2.9",
    "lem-2.10",
    "thm-2.11",
    "cor-corona-strict",
    "cor-2subdivision",
    "thm-maximal-family",
    "lem-3.1",
    "thm-3.2",
    "thm-3.3",
    "gap-law",
    "lem-3.4",
    "thm-3.5",
    "cor-3.6",
];

#[test]
fn every_required_id_is_registered_once() {
    for id in REQUIRED {
        assert_eq!(ids().filter(|&k| k == id).count(), 1, "{id}");
    }
    let family_ids: Vec<_> = registry()
        .iter()
        .filter(|t| t.input == InputKind::Family)
        .map(|t| t.id)
        .collect();
    assert_eq!(family_ids, ["lem-2.10", "thm-2.11", "refinement-monotone"]);
    for id in ["thm-2.1", "cor-2.3", "gap-law", "thm-3.2", "lem-3.4"] {
        assert!(lookup(id).unwrap().cheap, "{id}");
    }
}

#[test]
fn enumerator_counts_against_oracle() {
    for n in 1..=5 {
        let all: Vec<_> = enumerate_labeled_graphs(n, false, DEFAULT_MAX_ORDER)
            .unwrap()
            .collect();
        assert_eq!(all.len(), 1 << (n * (n - 1) / 2));
        let connected = all
            .iter()
            .filter(|(_, g)| Matrix::of(g).connected())
            .count();
        let filtered = enumerate_labeled_graphs(n, true, DEFAULT_MAX_ORDER)
            .unwrap()
            .count();
        assert_eq!(filtered, connected);
    }
    // labeled connected graphs: 1, 1, 4, 38, 728
    let counts: Vec<_> = (1..=5)
        .map(|n| enumerate_labeled_graphs(n, true, 7).unwrap().count())
        .collect();
    assert_eq!(counts, [1, 1, 4, 38, 728]);
}

#[test]
fn spec_examples() {
    let outcome = |id: &str, g: &certidom_core::Graph| check_theorem(id, g).unwrap().outcome;
    assert_eq!(outcome("thm-2.7", &named::path(4)), Outcome::Pass);
    assert_eq!(outcome("cor-2.3", &named::cycle(5)), Outcome::Pass);
    let r = check_theorem("cor-2.3", &named::cycle(5)).unwrap();
    assert!(r.detail.contains("gamma=2"), "{}", r.detail);
    assert_eq!(outcome("thm-3.3", &named::complete(2)), Outcome::Skipped);
    assert_eq!(outcome("thm-maximal-family", &named::path(5)), Outcome::Skipped);
    assert_eq!(outcome("thm-maximal-family", &named::cycle(4)), Outcome::Pass);
    assert_eq!(outcome("thm-2.11", &named::edgeless(2)), Outcome::Skipped);
}

#[test]
fn chain_patterns() {
    let p4 = chain_pattern(&named::path(4));
    assert_eq!((p4.chain, p4.degenerate), (Chain::Chain1, false));
    let k1 = chain_pattern(&named::complete(1));
    assert_eq!((k1.chain, k1.degenerate), (Chain::Chain1, true));
    let star = chain_pattern(&named::star(3));
    assert_eq!((star.chain, star.degenerate), (Chain::Chain3, false));
}

fn golden_specs() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for n in 3..=9 {
        specs.push(FamilySpec::Path(n));
        specs.push(FamilySpec::Cycle(n));
    }
    for n in 1..=7 {
        specs.push(FamilySpec::Complete(n));
        specs.push(FamilySpec::Star(n));
    }
    for m in 2..=4 {
        for n in m..=5 {
            specs.push(FamilySpec::CompleteBipartite(m, n));
        }
    }
    specs
}

#[test]
fn family_formulas_match_the_subset_oracle() {
    for spec in golden_specs() {
        let g = spec.build().unwrap();
        let m = Matrix::of(&g);
        let e = spec.expected();
        let oracle = [
            (InvariantKind::Gamma, m.gamma()),
            (InvariantKind::GammaCer, m.gamma_cer()),
            (InvariantKind::UpperGamma, m.upper_gamma()),
            (InvariantKind::UpperGammaCer, m.upper_gamma_cer()),
        ];
        for (kind, value) in oracle {
            if let Some(expected) = e.get(kind) {
                assert_eq!(expected, value, "{spec} {}", kind.as_str());
            }
        }
    }
}

#[test]
fn corona_and_diadem_builders() {
    for base in ["path:1", "path:3", "cycle:3", "kbip:1,2", "complete:4"] {
        let corona: FamilySpec = format!("corona:{base}").parse().unwrap();
        let g = corona.build().unwrap();
        let m = Matrix::of(&g);
        assert_eq!(m.gamma_cer(), g.order(), "{corona}");
        assert_eq!(m.upper_gamma_cer(), g.order(), "{corona}");
        assert_eq!(classify_structure(&g).kind, StructureKind::Corona);
        if base == "path:1" {
            continue;
        }
        for (prefix, kind) in [
            ("sdiadem", StructureKind::SimpleDiadem),
            ("diadem", StructureKind::Diadem),
        ] {
            let spec: FamilySpec = format!("{prefix}:corona:{base}").parse().unwrap();
            let d = spec.build().unwrap();
            assert_eq!(classify_structure(&d).kind, kind, "{spec}");
            assert_eq!(Matrix::of(&d).upper_gamma_cer(), d.order() - 2, "{spec}");
        }
    }
}
