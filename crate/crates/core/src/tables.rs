//! The seven tables, rebuilt from computation.
//!
//! Row keys (which words, which rotations) follow the fixtures so that the
//! output can be diffed against the printed tables line by line. Every value
//! in a row is computed.

use std::fmt::Write as _;

use serde::ser::{Serialize, SerializeMap, SerializeStruct, Serializer};

use crate::error::IsoError;
use crate::error::ModelError;
use crate::fixtures::{word_items, Fixtures};
use crate::icosa::RotationClass;
use crate::iso::Model;
use crate::perm::{CycleType, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub number: u8,
    pub title: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

struct Row<'a>(&'a [&'static str], &'a [String]);

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0.iter().zip(self.1) {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl Serialize for Table {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Row<'_>> = self.rows.iter().map(|r| Row(&self.columns, r)).collect();
        let mut st = s.serialize_struct("Table", 3)?;
        st.serialize_field("table", &self.number)?;
        st.serialize_field("title", self.title)?;
        st.serialize_field("rows", &rows)?;
        st.end()
    }
}

impl Table {
    pub fn to_text(&self) -> String {
        let mut out = format!("Table {}: {}\n", self.number, self.title);
        out.push_str(&format_columns(&self.columns, &self.rows));
        out
    }
}

/// Header plus rows, left-aligned, columns two spaces apart.
pub fn format_columns(columns: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = columns.iter().map(|c| c.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut out = String::new();
        for (i, (cell, w)) in cells.zip(&widths).enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            let _ = write!(out, "{cell:<w$}");
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
        out
    };
    let mut out = line(&mut columns.iter().copied());
    for row in rows {
        out.push_str(&line(&mut row.iter().map(String::as_str)));
    }
    out
}

/// Rebuilds table `n` (1 to 7).
pub fn table(model: &Model, fixtures: &Fixtures, n: u8) -> Result<Table, IsoError> {
    let b = Builder {
        m: model,
        f: fixtures,
    };
    match n {
        1 => b.vertex_images(),
        2 => b.three_cycles(),
        3 => b.edge_products(),
        4 => b.double_transpositions(),
        5 => b.vertex_rotations(),
        6 => b.five_cycles(),
        7 => b.powers(),
        _ => Err(
            ModelError::Inconsistent(format!("no table {n}; tables are numbered 1 to 7")).into(),
        ),
    }
}

pub fn all_tables(model: &Model, fixtures: &Fixtures) -> Result<Vec<Table>, IsoError> {
    (1..=7).map(|n| table(model, fixtures, n)).collect()
}

struct Builder<'a> {
    m: &'a Model,
    f: &'a Fixtures,
}

/// `(a,b,c)(a,b,d)` for two 3-cycles meeting in two points, with `a -> b`
/// in both. `None` if the factors do not have that shape.
fn lemma_form(p: &Permutation, q: &Permutation) -> Option<String> {
    let pc = p.cycle_labels(false);
    let qc = q.cycle_labels(false);
    let (pc, qc) = match (&pc[..], &qc[..]) {
        ([x], [y]) if x.len() == 3 && y.len() == 3 => (x, y),
        _ => return None,
    };
    for i in 0..3 {
        let (a, b, c) = (&pc[i], &pc[(i + 1) % 3], &pc[(i + 2) % 3]);
        for j in 0..3 {
            if &qc[j] == a && &qc[(j + 1) % 3] == b {
                let d = &qc[(j + 2) % 3];
                return Some(format!("({a},{b},{c})({a},{b},{d})"));
            }
        }
    }
    None
}

impl Builder<'_> {
    fn rotation(&self, word: &str) -> Result<Permutation, IsoError> {
        self.m.rotation_word(word, self.f)
    }

    fn image(&self, word: &str) -> Result<Permutation, IsoError> {
        let r = self.rotation(word)?;
        Ok(self.m.iso.image(&r)?.clone())
    }

    fn factor_images(&self, word: &str) -> Result<Vec<Permutation>, IsoError> {
        word_items(word)
            .into_iter()
            .map(|w| self.image(w))
            .collect()
    }

    fn labels(&self, vs: &[usize]) -> String {
        self.m.graph.labels_of(vs).join(",")
    }

    fn vertex_images(&self) -> Result<Table, IsoError> {
        let domain = self.m.rotations().domain();
        let mut columns = vec!["rotation"];
        columns.extend(crate::icosa::VERTEX_LABELS);
        let mut rows = Vec::new();
        for row in &self.f.table1 {
            let p = match self.m.rotations().generators().get(&row.name) {
                Some(g) => g.clone(),
                None => {
                    let word = self
                        .f
                        .generator_words
                        .iter()
                        .find(|w| w.name == row.name)
                        .ok_or_else(|| IsoError::Unmapped(row.name.clone()))?;
                    self.rotation(&word.word)?
                }
            };
            let mut cells = vec![row.name.clone()];
            cells.extend((0..domain.len()).map(|v| domain.label(p.apply(v)).to_string()));
            rows.push(cells);
        }
        Ok(Table {
            number: 1,
            title: "vertex images of the named face rotations",
            columns,
            rows,
        })
    }

    fn three_cycles(&self) -> Result<Table, IsoError> {
        let rows = self
            .f
            .table2
            .iter()
            .map(|row| {
                Ok(vec![
                    self.image(&row.rotation)?.format_cycles(),
                    row.rotation.clone(),
                ])
            })
            .collect::<Result<_, IsoError>>()?;
        Ok(Table {
            number: 2,
            title: "3-cycles of A5 and the face rotations they correspond to",
            columns: vec!["a5_cycle", "rotation"],
            rows,
        })
    }

    fn edge_products(&self) -> Result<Table, IsoError> {
        let mut rows = Vec::new();
        for row in &self.f.table3 {
            let p = self.rotation(&row.word)?;
            let axis = match self.m.graph.classify(&p)? {
                RotationClass::Edge { axis } => axis,
                _ => {
                    return Err(ModelError::Inconsistent(format!(
                        "{} is not an edge rotation",
                        row.word
                    ))
                    .into())
                }
            };
            let parts = word_items(&row.word);
            let case = match parts[..] {
                [a, b] => self
                    .m
                    .graph
                    .shared_vertex_compose(&self.rotation(a)?, &self.rotation(b)?)
                    .map(|r| r.case.name())
                    .unwrap_or("-"),
                _ => "-",
            };
            rows.push(vec![
                format!("({})", self.labels(&axis[0].0)),
                format!("({})", self.labels(&axis[1].0)),
                row.word.clone(),
                case.to_string(),
            ]);
        }
        Ok(Table {
            number: 3,
            title: "edge rotations as products of face rotations",
            columns: vec!["edge", "opposite_edge", "word", "case"],
            rows,
        })
    }

    fn double_transpositions(&self) -> Result<Table, IsoError> {
        let mut rows = Vec::new();
        for row in &self.f.table4 {
            let factors = self.factor_images(&row.word)?;
            let product: String = factors.iter().map(Permutation::format_cycles).collect();
            let rewritten = match &factors[..] {
                [p, q] => lemma_form(p, q).filter(|r| *r != product),
                _ => None,
            };
            rows.push(vec![
                row.word.clone(),
                product,
                rewritten.unwrap_or_else(|| "-".into()),
                self.image(&row.word)?.format_cycles_full(),
            ]);
        }
        Ok(Table {
            number: 4,
            title: "edge rotations and the double transpositions of A5",
            columns: vec!["word", "product", "rewritten", "result"],
            rows,
        })
    }

    fn vertex_rotations(&self) -> Result<Table, IsoError> {
        let mut rows = Vec::new();
        for row in &self.f.table5 {
            let p = self.rotation(&row.word)?;
            let fixed = match self.m.graph.classify(&p)? {
                RotationClass::Vertex { axis } => axis,
                _ => {
                    return Err(ModelError::Inconsistent(format!(
                        "{} is not a vertex rotation",
                        row.word
                    ))
                    .into())
                }
            };
            rows.push(vec![
                row.word.clone(),
                format!(
                    "({})({})",
                    self.labels(&fixed[..1]),
                    self.labels(&fixed[1..])
                ),
                p.format_cycles(),
            ]);
        }
        Ok(Table {
            number: 5,
            title: "vertex rotations generated by face rotations",
            columns: vec!["word", "fixed", "cycles"],
            rows,
        })
    }

    fn five_cycles(&self) -> Result<Table, IsoError> {
        let mut rows = Vec::new();
        for (i, row) in self.f.table6.iter().enumerate() {
            let product: String = self
                .factor_images(&row.word)?
                .iter()
                .map(Permutation::format_cycles)
                .collect();
            rows.push(vec![
                format!("S{}", i + 1),
                row.word.clone(),
                product,
                self.image(&row.word)?.format_cycles(),
                format!("Q{}", i + 1),
            ]);
        }
        Ok(Table {
            number: 6,
            title: "vertex rotations and the 5-cycles of A5",
            columns: vec!["rotation", "word", "product", "image", "name"],
            rows,
        })
    }

    fn powers(&self) -> Result<Table, IsoError> {
        let bases = self
            .f
            .table6
            .iter()
            .map(|r| self.image(&r.word))
            .collect::<Result<Vec<_>, _>>()?;
        let mut found: Vec<(String, usize, i64)> = Vec::new();
        for (i, q) in bases.iter().enumerate() {
            for b in 1..=4 {
                let p = q.power(b);
                if p.cycle_type() == CycleType::from_counts([(5, 1)]) {
                    found.push((p.format_cycles(), i + 1, b));
                }
            }
        }
        found.sort();
        let rows = found
            .into_iter()
            .map(|(cycle, i, b)| vec![cycle, format!("Q{i}^{b}"), format!("S{i}^{b}")])
            .collect();
        Ok(Table {
            number: 7,
            title: "the 5-cycles of A5 as powers of Q1 to Q6",
            columns: vec!["a5_cycle", "power", "rotation"],
            rows,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::a5_domain;

    #[test]
    fn lemma_form_rotates_both_cycles() {
        let d = a5_domain();
        let p = Permutation::parse("(1,5,3)", &d).unwrap();
        let q = Permutation::parse("(1,4,3)", &d).unwrap();
        assert_eq!(lemma_form(&p, &q).as_deref(), Some("(3,1,5)(3,1,4)"));
    }

    #[test]
    fn text_layout_is_aligned() {
        let t = Table {
            number: 9,
            title: "demo",
            columns: vec!["a", "long"],
            rows: vec![vec!["xyz".into(), "1".into()]],
        };
        assert_eq!(t.to_text(), "Table 9: demo\na    long\nxyz  1\n");
    }
}
