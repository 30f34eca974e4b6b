use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use icosa_a5::fixtures::{a5_domain, Fixtures};
use icosa_a5::icosa::vertex_domain;
use icosa_a5::tables::{self, format_columns};
use icosa_a5::verify::{axis_text, Verifier};
use icosa_a5::{Domain, Group, Model, Permutation};

#[derive(Parser)]
#[command(
    name = "icosa-a5",
    version,
    about = "Icosahedral rotations and the alternating group A5"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the tables and the structural invariants; exit 1 on any failure.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=7))]
        table: Option<u8>,
        #[arg(long)]
        json: bool,
    },
    /// Print the tables rebuilt from computation.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=7))]
        table: Option<u8>,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
    },
    /// Class, axis, order and partner of a rotation or an A5 element.
    Classify {
        perm: String,
        #[arg(long, value_enum)]
        domain: Option<Side>,
    },
    /// Shortest word in D, Y, T (ties broken D < Y < T).
    Word {
        perm: String,
        #[arg(long, value_enum)]
        domain: Option<Side>,
    },
    /// Image under the isomorphism, in either direction.
    Map {
        perm: String,
        #[arg(long, value_enum)]
        from: Side,
    },
    /// Vertices, edges, faces and antipodal pairs of the derived icosahedron.
    Graph {
        #[arg(long)]
        json: bool,
    },
    /// All 60 rotations next to their A5 partners.
    Correspondence {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Ico,
    A5,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Primed or plus labels only exist on the icosahedron; bare digits default to A5.
fn infer_side(text: &str, explicit: Option<Side>) -> Side {
    explicit.unwrap_or(if text.contains(['\'', '+']) {
        Side::Ico
    } else {
        Side::A5
    })
}

fn domain_of(side: Side) -> Arc<Domain> {
    match side {
        Side::Ico => vertex_domain(),
        Side::A5 => a5_domain(),
    }
}

fn parse_member<'g>(
    text: &str,
    side: Side,
    model: &'g Model,
) -> Result<(Permutation, &'g Group), Failure> {
    let p =
        Permutation::parse(text, &domain_of(side)).map_err(|e| usage(format!("{text:?}: {e}")))?;
    let group = match side {
        Side::Ico => model.rotations(),
        Side::A5 => model.a5(),
    };
    if !group.contains(&p) {
        let why = match side {
            Side::A5 => format!(
                "{text:?} is not in A5 ({} permutation)",
                p.parity().as_str()
            ),
            Side::Ico => format!("{text:?} is not a rotation of the icosahedron"),
        };
        return Err(usage(why));
    }
    Ok((p, group))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn run(command: Command) -> Result<String, Failure> {
    let fixtures = Fixtures::published();
    match command {
        Command::Verify {
            table,
            json: as_json,
        } => {
            let verifier = Verifier::new(fixtures);
            let report = match table {
                Some(n) => verifier.table(n),
                None => verifier.all(),
            };
            let out = if as_json {
                json(&report)
            } else {
                report.to_text()
            };
            if report.passed() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure {
                    code: 1,
                    message: format!("{} checks failed", report.summary.fail),
                })
            }
        }
        Command::Tables {
            table,
            json: as_json,
            ..
        } => {
            let model = Model::from_fixtures(&fixtures)?;
            let list = match table {
                Some(n) => vec![tables::table(&model, &fixtures, n)?],
                None => tables::all_tables(&model, &fixtures)?,
            };
            Ok(if as_json {
                json(&list)
            } else {
                list.iter()
                    .map(|t| t.to_text())
                    .collect::<Vec<_>>()
                    .join("\n")
            })
        }
        Command::Classify { perm, domain } => {
            let model = Model::from_fixtures(&fixtures)?;
            let side = infer_side(&perm, domain);
            let (p, _) = parse_member(&perm, side, &model)?;
            let (rotation, image) = match side {
                Side::Ico => (p.clone(), model.iso.image(&p)?.clone()),
                Side::A5 => (model.iso.preimage(&p)?.clone(), p.clone()),
            };
            let class = model.graph.classify(&rotation)?;
            let word = model.rotations().shortest_word(&rotation)?;
            let rows = vec![
                vec!["class".into(), class.kind().as_str().into()],
                vec!["axis".into(), axis_text(&model.graph, &class)],
                vec!["order".into(), rotation.order().to_string()],
                vec!["word".into(), word.to_string()],
                vec!["rotation".into(), or_dash(&rotation.format_cycles())],
                vec!["a5".into(), or_dash(&image.format_cycles())],
                vec!["a5_class".into(), image.cycle_type().to_string()],
            ];
            Ok(key_values(&rows))
        }
        Command::Word { perm, domain } => {
            let model = Model::from_fixtures(&fixtures)?;
            let side = infer_side(&perm, domain);
            let (p, group) = parse_member(&perm, side, &model)?;
            let word = group.shortest_word(&p)?;
            // Certify before printing.
            if group.generators().evaluate(word)? != p {
                return Err(Failure {
                    code: 1,
                    message: format!("word {word} does not evaluate to {perm:?}"),
                });
            }
            Ok(format!("{word}\n"))
        }
        Command::Map { perm, from } => {
            let model = Model::from_fixtures(&fixtures)?;
            let (p, _) = parse_member(&perm, from, &model)?;
            let image = match from {
                Side::Ico => model.iso.image(&p)?,
                Side::A5 => model.iso.preimage(&p)?,
            };
            Ok(format!("{}\n", image.format_cycles()))
        }
        Command::Graph { json: as_json } => {
            let model = Model::from_fixtures(&fixtures)?;
            let g = &model.graph;
            let dump = GraphDump {
                vertices: g.labels_of(&(0..g.domain().len()).collect::<Vec<_>>()),
                edges: g.edges().iter().map(|e| g.labels_of(&e.0)).collect(),
                faces: g.faces().iter().map(|f| g.labels_of(&f.0)).collect(),
                antipodal_pairs: g.antipodal_pairs().iter().map(|p| g.labels_of(p)).collect(),
            };
            Ok(if as_json { json(&dump) } else { dump.to_text() })
        }
        Command::Correspondence { json: as_json } => {
            let model = Model::from_fixtures(&fixtures)?;
            let entries = model.correspondence()?.entries(&model.graph);
            if as_json {
                return Ok(json(&entries));
            }
            let rows: Vec<Vec<String>> = entries
                .iter()
                .map(|e| {
                    vec![
                        e.word.clone(),
                        or_dash(&e.rotation_cycles),
                        e.class.as_str().into(),
                        if e.axis.is_empty() {
                            "-".into()
                        } else {
                            e.axis
                                .iter()
                                .map(|a| format!("{{{}}}", a.join(",")))
                                .collect::<Vec<_>>()
                                .join(" ")
                        },
                        or_dash(&e.a5_cycles),
                        e.a5_class.clone(),
                    ]
                })
                .collect();
            Ok(format_columns(
                &[
                    "word",
                    "rotation_cycles",
                    "class",
                    "axis",
                    "a5_cycles",
                    "a5_class",
                ],
                &rows,
            ))
        }
    }
}

fn or_dash(s: &str) -> String {
    if s.is_empty() {
        "-".into()
    } else {
        s.into()
    }
}

fn key_values(rows: &[Vec<String>]) -> String {
    rows.iter()
        .map(|r| format!("{:<9} {}\n", format!("{}:", r[0]), r[1]))
        .collect()
}

#[derive(Serialize)]
struct GraphDump {
    vertices: Vec<String>,
    edges: Vec<Vec<String>>,
    faces: Vec<Vec<String>>,
    antipodal_pairs: Vec<Vec<String>>,
}

impl GraphDump {
    fn to_text(&self) -> String {
        let list = |items: &[Vec<String>]| {
            items
                .iter()
                .map(|i| format!("{{{}}}", i.join(",")))
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!(
            "vertices ({}): {}\nedges ({}): {}\nfaces ({}): {}\nantipodal pairs ({}): {}\n",
            self.vertices.len(),
            self.vertices.join(" "),
            self.edges.len(),
            list(&self.edges),
            self.faces.len(),
            list(&self.faces),
            self.antipodal_pairs.len(),
            list(&self.antipodal_pairs),
        )
    }
}
