//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Runs without the libtest harness so the lines always
//! show up in `cargo test` output.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::process::{Command, ExitCode};

use icosa_a5::fixtures::Fixtures;
use icosa_a5::group::{verify_relations, Relation};
use icosa_a5::icosa::{RotationKind, LISTED_ANTIPODAL_PAIRS};
use icosa_a5::iso::expected_a5_cycle_type;
use icosa_a5::verify::{CheckStatus, Verifier};
use icosa_a5::{CycleType, Group, Model, Permutation};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn group_orders(m: &Model) -> Outcome {
    let (r, a) = (m.rotations().order(), m.a5().order());
    outcome(r == 60 && a == 60, format!("rotations {r}, A5 {a}"))
}

fn relations(m: &Model, f: &Fixtures) -> Outcome {
    let mut held = 0;
    let mut total = 0;
    for group in [m.rotations(), m.a5()] {
        let gens = group.generators();
        let rels: Vec<Relation> = f
            .relations
            .iter()
            .map(|r| Relation::parse(r, gens.names()).unwrap())
            .collect();
        let report = verify_relations(gens, &rels).unwrap();
        total += report.checks.len();
        held += report.checks.iter().filter(|c| c.holds).count();
    }
    outcome(
        held == total && total == 12,
        format!("{held} of {total} relation checks hold"),
    )
}

fn words(m: &Model, f: &Fixtures) -> Outcome {
    let domain = m.rotations().domain();
    let report = Verifier::new(f.clone()).table(1);
    let mut matched = 0;
    let mut flagged = 0;
    for w in &f.generator_words {
        let row = f.table1_row(&w.name, domain).unwrap();
        if m.rotation_word(&w.word, f).unwrap() == row {
            matched += 1;
        } else if report
            .checks
            .iter()
            .any(|c| c.name == format!("table1/{}", w.name) && c.status == CheckStatus::Errata)
        {
            flagged += 1;
        }
    }
    outcome(
        matched + flagged == 7 && f.generator_words.len() == 7,
        format!("{matched} of 7 words equal their rows, {flagged} flagged as errata"),
    )
}

fn census(m: &Model) -> Outcome {
    let kinds = m.correspondence().unwrap().census();
    let geo: Vec<usize> = [
        RotationKind::Identity,
        RotationKind::Face,
        RotationKind::Edge,
        RotationKind::Vertex,
    ]
    .iter()
    .map(|k| kinds.get(k).copied().unwrap_or(0))
    .collect();
    let by_type = |g: &Group| -> Vec<usize> {
        let parts = g.partition_by_cycle_type();
        [
            RotationKind::Identity,
            RotationKind::Face,
            RotationKind::Edge,
            RotationKind::Vertex,
        ]
        .iter()
        .map(|k| parts.get(&expected_a5_cycle_type(*k)).map_or(0, Vec::len))
        .collect()
    };
    let a5 = by_type(m.a5());
    let ok = geo == [1, 20, 15, 24] && a5 == geo && geo[1] == 60 - 1 - 15 - 24;
    outcome(ok, format!("rotations {geo:?}, A5 {a5:?}"))
}

fn isomorphism(m: &Model) -> Outcome {
    let r = m.iso.report();
    let ok = r.pairs_checked == 3600
        && r.multiplicative_failures.is_empty()
        && r.injective
        && r.surjective;
    outcome(
        ok,
        format!(
            "{} pairs, {} failures, injective {}, surjective {}",
            r.pairs_checked,
            r.multiplicative_failures.len(),
            r.injective,
            r.surjective
        ),
    )
}

fn geometry(m: &Model) -> Outcome {
    let g = &m.graph;
    let regular = (0..12).all(|v| g.degree(v) == 5);
    let derived: HashSet<[usize; 2]> = g.antipodal_pairs().into_iter().collect();
    let listed: HashSet<[usize; 2]> = LISTED_ANTIPODAL_PAIRS
        .iter()
        .map(|[a, b]| {
            let mut p = [g.vertex(a).unwrap(), g.vertex(b).unwrap()];
            p.sort_unstable();
            p
        })
        .collect();
    let ok = g.domain().len() == 12
        && g.edges().len() == 30
        && g.faces().len() == 20
        && regular
        && derived == listed;
    outcome(
        ok,
        format!(
            "{} faces, {} edges, {} vertices, 5-regular {regular}, antipodes match {}",
            g.faces().len(),
            g.edges().len(),
            g.domain().len(),
            derived == listed
        ),
    )
}

fn trichotomy(m: &Model) -> Outcome {
    let c = m.graph.shared_vertex_census();
    let most = c.witnesses.values().copied().max().unwrap_or(0);
    let ok = c.pairs > 0 && c.mismatches.is_empty() && most >= 2;
    outcome(
        ok,
        format!(
            "{} pairs ({} case1, {} case2, {} not_edge_rotation), {} mismatches, up to {most} pairs per edge rotation",
            c.pairs,
            c.adjacent,
            c.separated,
            c.not_edge,
            c.mismatches.len()
        ),
    )
}

fn tables(f: &Fixtures) -> Outcome {
    let v = Verifier::new(f.clone());
    let mut fails = 0;
    let mut errata = Vec::new();
    for n in 1..=7 {
        let r = v.table(n);
        fails += r.summary.fail;
        errata.extend(r.entries_with(CheckStatus::Errata).map(|c| c.name.clone()));
    }
    let detail = if errata.is_empty() {
        format!("{fails} fail entries, no errata")
    } else {
        format!("{fails} fail entries, errata: {}", errata.join(", "))
    };
    outcome(fails == 0, detail)
}

fn powers(m: &Model, f: &Fixtures) -> Outcome {
    let five = CycleType::from_counts([(5, 1)]);
    let mut images: HashMap<Permutation, (usize, i64)> = HashMap::new();
    let mut agree = 0;
    for (i, row) in f.table6.iter().enumerate() {
        let s = m.rotation_word(&row.word, f).unwrap();
        let q = m.iso.image(&s).unwrap().clone();
        for b in 1..=4 {
            let lhs = m.iso.image(&s.power(b)).unwrap();
            if *lhs == q.power(b) && lhs.cycle_type() == five {
                agree += 1;
            }
            images.insert(lhs.clone(), (i + 1, b));
        }
    }
    // The listing: each printed cycle is Q_i^b for the stated i, b.
    let listed: BTreeMap<String, (usize, i64)> = f
        .table7
        .iter()
        .map(|r| (r.cycle.clone(), (r.base, i64::from(r.exponent))))
        .collect();
    let domain = m.a5().domain();
    let listing_ok = listed.len() == 24
        && f.table7.windows(2).all(|w| w[0].cycle < w[1].cycle)
        && listed.iter().all(|(cycle, at)| {
            Permutation::parse(cycle, domain)
                .ok()
                .and_then(|p| images.get(&p).copied())
                == Some(*at)
        });
    outcome(
        agree == 24 && images.len() == 24 && listing_ok,
        format!(
            "{agree} of 24 powers agree, {} distinct 5-cycles, listing matches {listing_ok}",
            images.len()
        ),
    )
}

fn round_trip_and_determinism(m: &Model) -> Outcome {
    let mut good = 0;
    for g in [m.rotations(), m.a5()] {
        good += g
            .elements()
            .iter()
            .filter(|p| Permutation::parse(&p.format_cycles(), p.domain()).as_ref() == Ok(*p))
            .count();
    }
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_icosa-a5"))
            .args(["verify", "--json"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let same =
        a.status.success() && b.status.success() && a.stdout == b.stdout && !a.stdout.is_empty();
    outcome(
        good == 120 && same,
        format!("{good} of 120 round-trip, verify --json identical across runs {same}"),
    )
}

fn main() -> ExitCode {
    let f = Fixtures::published();
    let m = Model::from_fixtures(&f).expect("published generators build a model");
    let criteria: [(&str, Outcome); 10] = [
        ("group orders", group_orders(&m)),
        ("relation suite", relations(&m, &f)),
        ("word suite", words(&m, &f)),
        ("class census", census(&m)),
        ("isomorphism oracle", isomorphism(&m)),
        ("geometry reconstruction", geometry(&m)),
        ("shared-vertex trichotomy", trichotomy(&m)),
        ("table fixtures", tables(&f)),
        ("power correspondence", powers(&m, &f)),
        ("round-trip and determinism", round_trip_and_determinism(&m)),
    ];
    let mut failed = 0;
    for (i, (name, o)) in criteria.iter().enumerate() {
        let tag = if o.ok { "PASS" } else { "FAIL" };
        println!("{tag} criterion {:>2} {name}: {}", i + 1, o.detail);
        failed += usize::from(!o.ok);
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
