use certidom::graph6;
use certidom::sweep::{census, sweep, Source, SweepConfig, SweepError, DEFAULT_SEED};
use certidom_core::enumerate::DEFAULT_MAX_ORDER;
use certidom_core::families::FamilySpec;
use certidom_core::graph::named;

fn config(ids: &[&str], source: Source) -> SweepConfig {
    SweepConfig {
        ids: ids.iter().map(|s| s.to_string()).collect(),
        source,
        seed: DEFAULT_SEED,
        jobs: 2,
        max_order: 12,
    }
}

fn enumerate(max_n: usize, connected: bool) -> Source {
    Source::Enumerate {
        min_n: 1,
        max_n,
        connected,
        cap: DEFAULT_MAX_ORDER,
    }
}

#[test]
fn cor_2_3_and_thm_3_2_anchor_sweeps() {
    let r = sweep(&config(&["cor-2.3"], enumerate(6, true))).unwrap();
    let c = r.counters("cor-2.3").unwrap();
    assert_eq!(c.failed, 0);
    assert_eq!(c.checked + c.skipped, r.graphs);
    let r = sweep(&config(&["thm-3.2"], enumerate(6, false))).unwrap();
    assert_eq!(r.graphs, 1 + 2 + 8 + 64 + 1024 + 32768);
    assert_eq!(r.total_failed(), 0);
}

#[test]
fn sampled_family_sweep() {
    let src = Source::Samples {
        count: 200,
        max_n: 5,
    };
    let r = sweep(&config(&["lem-2.10", "thm-2.11", "refinement-monotone"], src)).unwrap();
    assert_eq!(r.graphs, 200);
    assert_eq!(r.total_failed(), 0);
    assert_eq!(r.counters("lem-2.10").unwrap().checked, 200);
    assert_eq!(r.config.seed, DEFAULT_SEED);
    assert_eq!(r.config.samples, Some(200));
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let ids = ["gap-law", "lem-3.1", "sandwich"];
    let mut a = config(&ids, enumerate(5, false));
    a.jobs = 1;
    let mut b = a.clone();
    b.jobs = 4;
    assert_eq!(sweep(&a).unwrap().to_json(), sweep(&b).unwrap().to_json());
    let src = Source::Samples {
        count: 50,
        max_n: 4,
    };
    let c = config(&["thm-2.11"], src.clone());
    assert_eq!(sweep(&c).unwrap().to_json(), sweep(&c).unwrap().to_json());
    let mut d = config(&["thm-2.11"], src);
    d.seed = 7;
    assert_ne!(sweep(&c).unwrap().to_json(), sweep(&d).unwrap().to_json());
}

#[test]
fn unknown_ids_are_rejected() {
    let err = sweep(&config(&["gap-law", "thm-9.9"], enumerate(2, false))).unwrap_err();
    assert_eq!(err, SweepError::UnknownTheorem("thm-9.9".into()));
}

#[test]
fn graph6_source_collects_errors_and_keeps_going() {
    let text = format!(
        "{}\n\n{}\nbad line\n{}\n",
        graph6::encode(&named::cycle(5)),
        graph6::encode(&named::path(4)),
        graph6::encode(&named::complete(13)),
    );
    let r = sweep(&config(
        &["gap-law"],
        Source::Graph6 {
            name: "inline".into(),
            text,
        },
    ))
    .unwrap();
    assert_eq!(r.graphs, 2);
    assert_eq!(r.errors.len(), 2);
    assert_eq!(r.errors[0].line, 4);
    assert!(r.errors[1].message.contains("--force"));
    assert_eq!(r.config.source, "graph6:inline");
}

#[test]
fn family_source() {
    let specs: Vec<FamilySpec> = ["cycle:6", "sdiadem:corona:path:3", "joink2bar:5"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let r = sweep(&config(&["thm-3.3", "lem-3.4"], Source::Families(specs))).unwrap();
    assert_eq!(r.graphs, 3);
    let c = r.counters("thm-3.3").unwrap();
    assert_eq!((c.checked, c.failed), (3, 0));
}

#[test]
fn census_examples() {
    let r = census(&config(&[], enumerate(4, true))).unwrap();
    assert_eq!(r.graphs, 1 + 1 + 4 + 38);
    let row = |q: (usize, usize, usize, usize)| {
        r.rows
            .iter()
            .find(|x| (x.gamma, x.upper_gamma, x.gamma_cer, x.upper_gamma_cer) == q)
            .cloned()
    };
    assert_eq!(row((1, 1, 1, 1)).unwrap().witness, "@");
    let p4 = row((2, 2, 4, 4)).unwrap();
    // first labeled P4 in mask order: 0-2, 1-3, 2-3
    assert_eq!(p4.witness, "Ck");
    assert_eq!(p4.count, 12);
    assert_eq!(r.rows.iter().map(|x| x.count).sum::<u64>(), r.graphs);

    let k2 = census(&config(
        &[],
        Source::Graph6 {
            name: "k2".into(),
            text: "A_\n".into(),
        },
    ))
    .unwrap();
    assert_eq!(k2.rows.len(), 1);
    let k = &k2.rows[0];
    assert_eq!((k.gamma, k.upper_gamma, k.gamma_cer, k.upper_gamma_cer), (1, 1, 2, 2));

    let empty = census(&config(
        &[],
        Source::Graph6 {
            name: "empty".into(),
            text: String::new(),
        },
    ))
    .unwrap();
    assert!(empty.rows.is_empty());
    assert!(empty.chains.iter().all(|c| c.note.contains("no strict witness")));
}
