//! Checks every published table, and the structural facts behind them,
//! against computed truth.
//!
//! A table row that disagrees with the computation is reported as
//! [`CheckStatus::Errata`] as long as the computed side stands on its own
//! (the generators give a 60-element group, an icosahedron and a verified
//! isomorphism). Structural checks report [`CheckStatus::Fail`]. A report
//! passes iff it has no fail entries.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use crate::error::IsoError;
use crate::fixtures::{cycle_product, word_items, Fixtures, SEPARATED_FACE_ROWS_START};
use crate::group::{verify_relations, Relation};
use crate::icosa::{Edge, RotationClass, RotationKind, LISTED_ANTIPODAL_PAIRS};
use crate::iso::{double_transposition_identity, expected_a5_cycle_type, Model};
use crate::perm::{CycleType, Domain, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Errata,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Errata => "ERRATA",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub status: CheckStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub errata: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckEntry>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(checks: Vec<CheckEntry>) -> Self {
        let count = |s| checks.iter().filter(|c| c.status == s).count();
        let fail = count(CheckStatus::Fail);
        let summary = Summary {
            total: checks.len(),
            pass: count(CheckStatus::Pass),
            fail,
            errata: count(CheckStatus::Errata),
            passed: fail == 0,
        };
        VerificationReport { checks, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.passed
    }

    pub fn entries_with(&self, status: CheckStatus) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().filter(move |c| c.status == status)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check, then a summary line.
    pub fn to_text(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let _ = write!(
                out,
                "{:<6} {:<width$}  {}",
                c.status.as_str(),
                c.name,
                c.computed
            );
            if c.status != CheckStatus::Pass {
                let _ = write!(out, "  (expected {})", c.expected);
            }
            out.push('\n');
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} checks: {} pass, {} fail, {} errata",
            s.total, s.pass, s.fail, s.errata
        );
        out
    }
}

/// Runs checks for one set of fixtures.
pub struct Verifier {
    fixtures: Fixtures,
    model: Result<Model, IsoError>,
}

impl Verifier {
    pub fn new(fixtures: Fixtures) -> Self {
        let model = Model::from_fixtures(&fixtures);
        Verifier { fixtures, model }
    }

    pub fn published() -> Self {
        Verifier::new(Fixtures::published())
    }

    pub fn model(&self) -> Option<&Model> {
        self.model.as_ref().ok()
    }

    /// Checks one table, `1..=7`.
    pub fn table(&self, n: u8) -> VerificationReport {
        VerificationReport::new(self.table_checks(n))
    }

    /// Structural suites first, then tables 1 to 7.
    pub fn all(&self) -> VerificationReport {
        let mut checks = self.structural_checks();
        for n in 1..=7 {
            checks.extend(self.table_checks(n));
        }
        VerificationReport::new(checks)
    }

    fn table_checks(&self, n: u8) -> Vec<CheckEntry> {
        let model = match &self.model {
            Ok(m) => m,
            Err(e) => return vec![model_failure(&format!("table{n}"), e)],
        };
        let ctx = TableContext {
            f: &self.fixtures,
            m: model,
        };
        match n {
            1 => ctx.table1(),
            2 => ctx.table2(),
            3 => ctx.table3(),
            4 => ctx.table4(),
            5 => ctx.table5(),
            6 => ctx.table6(),
            7 => ctx.table7(),
            _ => vec![CheckEntry {
                name: format!("table{n}"),
                expected: "a table number from 1 to 7".into(),
                computed: "no such table".into(),
                status: CheckStatus::Fail,
            }],
        }
    }

    fn structural_checks(&self) -> Vec<CheckEntry> {
        let model = match &self.model {
            Ok(m) => m,
            Err(e) => return vec![model_failure("model", e)],
        };
        let mut out = Vec::new();
        let s = Structural {
            f: &self.fixtures,
            m: model,
        };
        out.extend(s.orders());
        out.extend(s.relations());
        out.extend(s.census());
        out.extend(s.isomorphism());
        out.extend(s.geometry());
        out.extend(s.shared_vertex());
        out.extend(s.powers());
        out.extend(s.words());
        out.extend(s.round_trip());
        out.push(s.double_transpositions());
        out
    }
}

/// `verify_table` on the published fixtures.
pub fn verify_table(n: u8) -> VerificationReport {
    Verifier::published().table(n)
}

/// `verify_all` on the published fixtures.
pub fn verify_all() -> VerificationReport {
    Verifier::published().all()
}

fn model_failure(name: &str, e: &IsoError) -> CheckEntry {
    CheckEntry {
        name: name.to_string(),
        expected: "generators define the rotation group, the icosahedron and the isomorphism"
            .into(),
        computed: e.to_string(),
        status: CheckStatus::Fail,
    }
}

fn entry(
    name: String,
    expected: String,
    computed: String,
    ok: bool,
    miss: CheckStatus,
) -> CheckEntry {
    CheckEntry {
        name,
        expected,
        computed,
        status: if ok { CheckStatus::Pass } else { miss },
    }
}

fn structural(
    name: &str,
    expected: impl Into<String>,
    computed: impl Into<String>,
    ok: bool,
) -> CheckEntry {
    entry(
        name.to_string(),
        expected.into(),
        computed.into(),
        ok,
        CheckStatus::Fail,
    )
}

fn split_cycles(text: &str) -> Vec<&str> {
    crate::fixtures::split_cycles(text).collect()
}

struct TableContext<'a> {
    f: &'a Fixtures,
    m: &'a Model,
}

impl TableContext<'_> {
    fn vertices(&self) -> &Arc<Domain> {
        self.m.rotations().domain()
    }

    fn points(&self) -> &Arc<Domain> {
        self.m.a5().domain()
    }

    fn rotation(&self, word: &str) -> Result<Permutation, String> {
        self.m
            .rotation_word(word, self.f)
            .map_err(|e| e.to_string())
    }

    fn image(&self, word: &str) -> Result<Permutation, String> {
        let r = self.rotation(word)?;
        self.m.iso.image(&r).cloned().map_err(|e| e.to_string())
    }

    fn a5_cycles(&self, text: &str) -> Result<Permutation, String> {
        Permutation::parse(text, self.points()).map_err(|e| format!("{text}: {e}"))
    }

    fn row(
        &self,
        name: String,
        expected: String,
        computed: Result<(String, bool), String>,
    ) -> CheckEntry {
        match computed {
            Ok((computed, ok)) => entry(name, expected, computed, ok, CheckStatus::Errata),
            Err(e) => entry(name, expected, e, false, CheckStatus::Errata),
        }
    }

    fn table1(&self) -> Vec<CheckEntry> {
        self.f
            .table1
            .iter()
            .map(|row| {
                let printed = Permutation::from_image_labels(self.vertices(), &row.images);
                let expected = match &printed {
                    Ok(p) => format!("{} = {}", row.name, p),
                    Err(_) => format!("{} = [{}]", row.name, row.images.join(" ")),
                };
                let computed = (|| {
                    let printed = printed.as_ref().map_err(|e| e.to_string())?;
                    if let Some(g) = self.m.rotations().generators().get(&row.name) {
                        let ok = g == printed
                            && matches!(self.m.graph.classify(g), Ok(RotationClass::Face { .. }));
                        return Ok((
                            format!("{} = {} (generator, face rotation)", row.name, g),
                            ok,
                        ));
                    }
                    let word = self
                        .f
                        .generator_words
                        .iter()
                        .find(|w| w.name == row.name)
                        .ok_or_else(|| format!("no generator word for {}", row.name))?;
                    let value = self.rotation(&word.word)?;
                    Ok((
                        format!("{} = {} = {}", row.name, word.word, value),
                        value == *printed,
                    ))
                })();
                self.row(format!("table1/{}", row.name), expected, computed)
            })
            .collect()
    }

    fn table2(&self) -> Vec<CheckEntry> {
        self.f
            .table2
            .iter()
            .map(|row| {
                let expected = format!("{} <-> {}", row.cycle, row.rotation);
                let computed = (|| {
                    let printed = self.a5_cycles(&row.cycle)?;
                    let image = self.image(&row.rotation)?;
                    Ok((format!("{} -> {}", row.rotation, image), image == printed))
                })();
                self.row(format!("table2/{}", row.rotation), expected, computed)
            })
            .collect()
    }

    fn table3(&self) -> Vec<CheckEntry> {
        let g = &self.m.graph;
        self.f
            .table3
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let want_case = if i >= SEPARATED_FACE_ROWS_START {
                    "case2"
                } else {
                    "case1"
                };
                let expected = format!(
                    "({},{}),({},{}) = {} via {}",
                    row.first[0], row.first[1], row.second[0], row.second[1], row.word, want_case
                );
                let computed = (|| {
                    let p = self.rotation(&row.word)?;
                    let class = g.classify(&p).map_err(|e| e.to_string())?;
                    let items = word_items(&row.word);
                    let case = match items[..] {
                        [a, b] => g
                            .shared_vertex_compose(&self.rotation(a)?, &self.rotation(b)?)
                            .map(|r| r.case.name())
                            .unwrap_or("none"),
                        _ => "none",
                    };
                    let vertex = |l: &str| g.vertex(l).map_err(|e| e.to_string());
                    let maps = |pair: &[String; 2]| -> Result<bool, String> {
                        Ok(p.apply(vertex(&pair[0])?) == vertex(&pair[1])?)
                    };
                    let stated = [
                        Edge::new(vertex(&row.first[0])?, vertex(&row.first[1])?),
                        Edge::new(vertex(&row.second[0])?, vertex(&row.second[1])?),
                    ];
                    let axis_ok = match class {
                        RotationClass::Edge { axis } => {
                            stated.iter().all(|e| axis.contains(e)) && stated[0] != stated[1]
                        }
                        _ => false,
                    };
                    let ok =
                        axis_ok && maps(&row.first)? && maps(&row.second)? && case == want_case;
                    Ok((
                        format!(
                            "{} = {} is {} about {} via {}",
                            row.word,
                            p,
                            class.kind().as_str(),
                            axis_text(g, &class),
                            case
                        ),
                        ok,
                    ))
                })();
                self.row(format!("table3/{}", row.word), expected, computed)
            })
            .collect()
    }

    fn table4(&self) -> Vec<CheckEntry> {
        self.f
            .table4
            .iter()
            .map(|row| {
                let mut expected = format!("{} <-> {}", row.word, row.product);
                if let Some(r) = &row.rewritten {
                    let _ = write!(expected, " = {r}");
                }
                let _ = write!(expected, " = {}", row.result);
                let computed = (|| {
                    let target = self.image(&row.word)?;
                    let mut ok = true;
                    let items = word_items(&row.word);
                    let factors = split_cycles(&row.product);
                    ok &= items.len() == factors.len();
                    for (item, factor) in items.iter().zip(&factors) {
                        ok &= self.image(item)? == self.a5_cycles(factor)?;
                    }
                    let product = |text: &str| -> Result<(Permutation, Vec<usize>), String> {
                        cycle_product(text, self.points()).map_err(|e| format!("{text}: {e}"))
                    };
                    ok &= product(&row.product)?.0 == target;
                    let lemma_source = row.rewritten.as_deref().unwrap_or(&row.product);
                    if let Some(r) = &row.rewritten {
                        ok &= product(r)?.0 == target;
                    }
                    ok &= lemma_holds(lemma_source, self.points());
                    let (result, fixed) = product(&row.result)?;
                    ok &= result == target && fixed.iter().all(|&x| target.apply(x) == x);
                    Ok((
                        format!("{} -> {}", row.word, target.format_cycles_full()),
                        ok,
                    ))
                })();
                self.row(format!("table4/{}", row.word), expected, computed)
            })
            .collect()
    }

    fn table5(&self) -> Vec<CheckEntry> {
        let g = &self.m.graph;
        self.f
            .table5
            .iter()
            .map(|row| {
                let expected = format!(
                    "{} = ({})({}){}",
                    row.word, row.fixed[0], row.fixed[1], row.cycles
                );
                let computed = (|| {
                    let p = self.rotation(&row.word)?;
                    let printed = Permutation::parse(&row.cycles, self.vertices())
                        .map_err(|e| format!("{}: {e}", row.cycles))?;
                    let fixed = [g.vertex(&row.fixed[0]), g.vertex(&row.fixed[1])];
                    let fixed_ok = fixed
                        .iter()
                        .all(|v| v.as_ref().is_ok_and(|&v| p.apply(v) == v));
                    let class = g.classify(&p).map_err(|e| e.to_string())?;
                    let axis_ok = match (class, &fixed) {
                        (RotationClass::Vertex { axis }, [Ok(a), Ok(b)]) => {
                            axis.contains(a) && axis.contains(b)
                        }
                        _ => false,
                    };
                    Ok((
                        format!("{} = {} fixes {}", row.word, p, axis_text(g, &class)),
                        p == printed && fixed_ok && axis_ok,
                    ))
                })();
                self.row(format!("table5/{}", row.word), expected, computed)
            })
            .collect()
    }

    fn table6(&self) -> Vec<CheckEntry> {
        self.f
            .table6
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let expected = format!(
                    "S{} = {} <-> {} = {}",
                    i + 1,
                    row.word,
                    row.product,
                    row.image
                );
                let computed = (|| {
                    let image = self.image(&row.word)?;
                    let mut ok = image == self.a5_cycles(&row.image)?;
                    let items = word_items(&row.word);
                    let factors = split_cycles(&row.product);
                    ok &= items.len() == factors.len();
                    for (item, factor) in items.iter().zip(&factors) {
                        ok &= self.image(item)? == self.a5_cycles(factor)?;
                    }
                    let (product, _) = cycle_product(&row.product, self.points())
                        .map_err(|e| format!("{}: {e}", row.product))?;
                    ok &= product == image;
                    Ok((format!("S{} = {} -> {}", i + 1, row.word, image), ok))
                })();
                self.row(format!("table6/S{}", i + 1), expected, computed)
            })
            .collect()
    }

    fn table7(&self) -> Vec<CheckEntry> {
        // Q_i comes from the image of S_i, the words of the previous table.
        let bases: Vec<Result<Permutation, String>> =
            self.f.table6.iter().map(|r| self.image(&r.word)).collect();
        let mut out: Vec<CheckEntry> = self
            .f
            .table7
            .iter()
            .map(|row| {
                let expected = format!("{} = Q{}^{}", row.cycle, row.base, row.exponent);
                let computed = (|| {
                    let base = bases
                        .get(row.base.wrapping_sub(1))
                        .ok_or_else(|| format!("no Q{}", row.base))?
                        .clone()?;
                    let value = base.power(i64::from(row.exponent));
                    Ok((
                        format!("Q{}^{} = {}", row.base, row.exponent, value),
                        value == self.a5_cycles(&row.cycle)?,
                    ))
                })();
                self.row(format!("table7/{}", row.cycle), expected, computed)
            })
            .collect();

        let listed: Vec<&str> = self.f.table7.iter().map(|r| r.cycle.as_str()).collect();
        let mut sorted = listed.clone();
        sorted.sort_unstable();
        out.push(self.row(
            "table7/lexicographic".into(),
            "rows listed in lexicographic order".into(),
            Ok((
                if listed == sorted {
                    "sorted".into()
                } else {
                    "out of order".into()
                },
                listed == sorted,
            )),
        ));

        let five_cycles: HashSet<Permutation> = self
            .m
            .a5()
            .elements()
            .iter()
            .filter(|p| p.cycle_type() == CycleType::from_counts([(5, 1)]))
            .cloned()
            .collect();
        let parsed: HashSet<Permutation> = listed
            .iter()
            .filter_map(|c| self.a5_cycles(c).ok())
            .collect();
        let exponents: HashSet<(usize, u32)> =
            self.f.table7.iter().map(|r| (r.base, r.exponent)).collect();
        let ok = parsed == five_cycles && listed.len() == 24 && exponents.len() == 24;
        out.push(self.row(
            "table7/coverage".into(),
            "24 distinct 5-cycles, each Q_i^b used once".into(),
            Ok((
                format!(
                    "{} rows, {} distinct cycles of {} in A5, {} distinct powers",
                    listed.len(),
                    parsed.len(),
                    five_cycles.len(),
                    exponents.len()
                ),
                ok,
            )),
        ));
        out
    }
}

/// If `text` is `(a,b,c)(a,b,d)`, checks it against `(a,d)(b,c)`.
fn lemma_holds(text: &str, domain: &Arc<Domain>) -> bool {
    let cycles: Vec<Vec<&str>> = split_cycles(text)
        .iter()
        .map(|c| {
            c.trim_matches(|ch| ch == '(' || ch == ')')
                .split(',')
                .map(str::trim)
                .collect()
        })
        .collect();
    match &cycles[..] {
        [p, q] if p.len() == 3 && q.len() == 3 && p[..2] == q[..2] => {
            double_transposition_identity([p[0], p[1], p[2], q[2]], domain).is_ok_and(|c| c.holds)
        }
        _ => true,
    }
}

/// Axis parts as `{a,b} {c,d}`, or `-` for the identity.
pub fn axis_text(g: &crate::icosa::IcosaGraph, class: &RotationClass) -> String {
    let parts: Vec<String> = class
        .axis_parts()
        .iter()
        .map(|p| format!("{{{}}}", g.labels_of(p).join(",")))
        .collect();
    if parts.is_empty() {
        "-".into()
    } else {
        parts.join(" ")
    }
}

struct Structural<'a> {
    f: &'a Fixtures,
    m: &'a Model,
}

impl Structural<'_> {
    fn orders(&self) -> Vec<CheckEntry> {
        vec![
            structural(
                "group/rotation-order",
                "60",
                self.m.rotations().order().to_string(),
                self.m.rotations().order() == 60,
            ),
            structural(
                "group/a5-order",
                "60",
                self.m.a5().order().to_string(),
                self.m.a5().order() == 60,
            ),
        ]
    }

    fn relations(&self) -> Vec<CheckEntry> {
        let ico = self.m.rotations().generators();
        let a5 = self.m.a5().generators();
        self.f
            .relations
            .iter()
            .map(|text| {
                let name = format!("relations/{text}");
                let result = (|| {
                    let rel = Relation::parse(text, ico.names())?;
                    let r1 = verify_relations(ico, std::slice::from_ref(&rel))?;
                    let r2 = verify_relations(a5, std::slice::from_ref(&rel))?;
                    Ok::<_, crate::error::GroupError>((r1.passed(), r2.passed()))
                })();
                match result {
                    Ok((on_ico, on_a5)) => structural(
                        &name,
                        "holds on both sides",
                        format!("rotations: {on_ico}, a5: {on_a5}"),
                        on_ico && on_a5,
                    ),
                    Err(e) => structural(&name, "holds on both sides", e.to_string(), false),
                }
            })
            .collect()
    }

    fn census(&self) -> Vec<CheckEntry> {
        let sizes = |group: &crate::group::Group| -> String {
            group
                .partition_by_cycle_type()
                .iter()
                .map(|(t, v)| format!("{t}:{}", v.len()))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let ico_types = sizes(self.m.rotations());
        let a5_types = sizes(self.m.a5());
        let ico_expected = "k1=2,k5=2:24 k1=12:1 k2=6:15 k3=4:20";
        let a5_expected = "k1=1,k2=2:15 k1=2,k3=1:20 k1=5:1 k5=1:24";

        let kinds = match self.m.correspondence() {
            Ok(c) => c
                .census()
                .iter()
                .map(|(k, n)| format!("{}:{n}", k.as_str()))
                .collect::<Vec<_>>()
                .join(" "),
            Err(e) => e.to_string(),
        };
        let kinds_expected = "identity:1 face:20 edge:15 vertex:24";
        vec![
            structural(
                "census/rotation-classes",
                kinds_expected,
                kinds.clone(),
                kinds == kinds_expected,
            ),
            structural(
                "census/rotation-cycle-types",
                ico_expected,
                ico_types.clone(),
                ico_types == ico_expected,
            ),
            structural(
                "census/a5-cycle-types",
                a5_expected,
                a5_types.clone(),
                a5_types == a5_expected,
            ),
        ]
    }

    fn isomorphism(&self) -> Vec<CheckEntry> {
        let report = self.m.iso.homomorphism().verify();
        let source = self.m.rotations().elements();
        let image = |g: &Permutation| self.m.iso.image(g).expect("source element").clone();

        let order_mismatch = source
            .iter()
            .filter(|g| g.order() != image(g).order())
            .count();
        let inverse_mismatch = source
            .iter()
            .filter(|g| image(&g.inverse()) != image(g).inverse())
            .count();
        let class_mismatch = source
            .iter()
            .filter(|g| match self.m.graph.classify(g) {
                Ok(c) => image(g).cycle_type() != expected_a5_cycle_type(c.kind()),
                Err(_) => true,
            })
            .count();
        vec![
            structural(
                "isomorphism/multiplicative",
                "0 failures over 3600 pairs",
                format!(
                    "{} failures over {} pairs",
                    report.multiplicative_failures.len(),
                    report.pairs_checked
                ),
                report.multiplicative_failures.is_empty() && report.pairs_checked == 3600,
            ),
            structural(
                "isomorphism/injective",
                "true",
                report.injective.to_string(),
                report.injective,
            ),
            structural(
                "isomorphism/surjective",
                "true",
                report.surjective.to_string(),
                report.surjective,
            ),
            structural(
                "isomorphism/class-preservation",
                "0 mismatches",
                format!("{class_mismatch} mismatches"),
                class_mismatch == 0,
            ),
            structural(
                "isomorphism/order-preservation",
                "0 mismatches",
                format!("{order_mismatch} mismatches"),
                order_mismatch == 0,
            ),
            structural(
                "isomorphism/inverse-preservation",
                "0 mismatches",
                format!("{inverse_mismatch} mismatches"),
                inverse_mismatch == 0,
            ),
        ]
    }

    fn geometry(&self) -> Vec<CheckEntry> {
        let g = &self.m.graph;
        let regular = (0..g.domain().len()).all(|v| g.degree(v) == 5);
        let counts = format!(
            "{} vertices, {} edges, {} faces, 5-regular: {regular}",
            g.domain().len(),
            g.edges().len(),
            g.faces().len()
        );
        let counts_ok =
            g.domain().len() == 12 && g.edges().len() == 30 && g.faces().len() == 20 && regular;

        let computed: Vec<String> = g
            .antipodal_pairs()
            .iter()
            .map(|p| format!("{{{}}}", g.labels_of(p).join(",")))
            .collect();
        let listed: HashSet<Edge> = LISTED_ANTIPODAL_PAIRS
            .iter()
            .filter_map(|[a, b]| Some(Edge::new(g.vertex(a).ok()?, g.vertex(b).ok()?)))
            .collect();
        let derived: HashSet<Edge> = g
            .antipodal_pairs()
            .iter()
            .map(|[a, b]| Edge::new(*a, *b))
            .collect();
        let listed_text: Vec<String> = LISTED_ANTIPODAL_PAIRS
            .iter()
            .map(|[a, b]| format!("{{{a},{b}}}"))
            .collect();

        let all_auto = self
            .m
            .rotations()
            .elements()
            .iter()
            .all(|p| g.is_automorphism(p));
        let flip = g.antipode_permutation();
        let flip_outside = g.is_automorphism(&flip) && !self.m.rotations().contains(&flip);
        vec![
            structural(
                "geometry/counts",
                "12 vertices, 30 edges, 20 faces, 5-regular: true",
                counts,
                counts_ok,
            ),
            structural(
                "geometry/antipodes",
                listed_text.join(" "),
                computed.join(" "),
                listed == derived && listed.len() == 6,
            ),
            structural(
                "geometry/automorphisms",
                "all 60 rotations preserve edges; the antipodal map does but is not a rotation",
                format!("rotations: {all_auto}, antipodal map outside group: {flip_outside}"),
                all_auto && flip_outside,
            ),
        ]
    }

    fn shared_vertex(&self) -> Vec<CheckEntry> {
        let census = self.m.graph.shared_vertex_census();
        let min_witnesses = census.witnesses.values().copied().min().unwrap_or(0);
        vec![
            structural(
                "shared-vertex/trichotomy",
                "every prediction matches the product",
                format!(
                    "{} pairs: {} case1, {} case2, {} not_edge_rotation, {} mismatches",
                    census.pairs,
                    census.adjacent,
                    census.separated,
                    census.not_edge,
                    census.mismatches.len()
                ),
                census.mismatches.is_empty()
                    && census.pairs > 0
                    && census.pairs == census.adjacent + census.separated + census.not_edge,
            ),
            structural(
                "shared-vertex/multiplicity",
                "all 15 edge rotations, each from 2 or more ordered pairs",
                format!(
                    "{} edge rotations, fewest pairs for one: {min_witnesses}",
                    census.witnesses.len()
                ),
                census.witnesses.len() == 15 && min_witnesses >= 2,
            ),
        ]
    }

    fn powers(&self) -> Vec<CheckEntry> {
        let ctx = TableContext {
            f: self.f,
            m: self.m,
        };
        let mut mismatches = 0;
        let mut images = HashSet::new();
        let mut count = 0;
        for row in &self.f.table6 {
            let (Ok(s), Ok(q)) = (ctx.rotation(&row.word), ctx.image(&row.word)) else {
                mismatches += 1;
                continue;
            };
            for b in 1..=4 {
                count += 1;
                let lhs = self.m.iso.image(&s.power(b)).cloned();
                let rhs = q.power(b);
                if lhs.as_ref() != Ok(&rhs) {
                    mismatches += 1;
                }
                if rhs.cycle_type() == CycleType::from_counts([(5, 1)]) {
                    images.insert(rhs);
                }
            }
        }
        vec![structural(
            "powers/image-of-power",
            "24 of 24 agree, 24 distinct 5-cycles",
            format!(
                "{} of {count} agree, {} distinct 5-cycles",
                count - mismatches,
                images.len()
            ),
            mismatches == 0 && count == 24 && images.len() == 24,
        )]
    }

    fn words(&self) -> Vec<CheckEntry> {
        [
            ("words/rotations", self.m.rotations()),
            ("words/a5", self.m.a5()),
        ]
        .into_iter()
        .map(|(name, group)| {
            let bad = group
                .elements()
                .iter()
                .filter(|p| {
                    group
                        .shortest_word(p)
                        .ok()
                        .and_then(|w| group.generators().evaluate(w).ok())
                        .as_ref()
                        != Some(p)
                })
                .count();
            structural(
                name,
                "every shortest word evaluates back",
                format!("{bad} failures, diameter {}", group.diameter()),
                bad == 0,
            )
        })
        .collect()
    }

    fn round_trip(&self) -> Vec<CheckEntry> {
        let groups = [self.m.rotations(), self.m.a5()];
        let total: usize = groups.iter().map(|g| g.order()).sum();
        let bad = groups
            .iter()
            .flat_map(|g| g.elements())
            .filter(|p| Permutation::parse(&p.format_cycles(), p.domain()).as_ref() != Ok(*p))
            .count();
        vec![structural(
            "notation/round-trip",
            "120 of 120",
            format!("{} of {total}", total - bad),
            bad == 0 && total == 120,
        )]
    }

    fn double_transpositions(&self) -> CheckEntry {
        let domain = self.m.a5().domain();
        let labels: Vec<&str> = domain.labels().iter().map(|l| l.as_str()).collect();
        let mut tuples = 0;
        let mut failures = 0;
        for &a in &labels {
            for &b in &labels {
                for &c in &labels {
                    for &d in &labels {
                        if HashSet::from([a, b, c, d]).len() < 4 {
                            continue;
                        }
                        tuples += 1;
                        if !double_transposition_identity([a, b, c, d], domain)
                            .is_ok_and(|c| c.holds)
                        {
                            failures += 1;
                        }
                    }
                }
            }
        }
        structural(
            "lemma/double-transposition",
            "holds for all 120 ordered 4-tuples",
            format!("{} of {tuples}", tuples - failures),
            failures == 0 && tuples == 120,
        )
    }
}

/// Per-kind counts, used by the CLI summary.
pub fn kind_counts(model: &Model) -> BTreeMap<RotationKind, usize> {
    model
        .correspondence()
        .map(|c| c.census())
        .unwrap_or_default()
}
