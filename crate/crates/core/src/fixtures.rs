//! The published tables, transcribed as printed.
//!
//! Rows are copied character for character (modulo the ASCII label spelling
//! `1+`, `1'`, `1''`), typos included. Nothing here is corrected; the
//! verifier compares each row with computed truth and reports any
//! disagreement as errata.
//!
//! Powers in words are written `A^2`. Trivial cycles such as the `(2)` in
//! `(3,4)(1,5)(2)` are kept because the tables print them.

use std::sync::Arc;

use crate::error::{GroupError, PermError};
use crate::group::GeneratorSet;
use crate::icosa::vertex_domain;
use crate::perm::{Domain, Permutation};

/// Column heads of the vertex table.
pub const TABLE1_COLUMNS: [&str; 12] = crate::icosa::VERTEX_LABELS;

const TABLE1: [(&str, [&str; 12]); 10] = [
    (
        "D",
        [
            "3", "3'", "2+", "2", "1''", "1'", "2''", "1", "1+", "3''", "3+", "2'",
        ],
    ),
    (
        "Y",
        [
            "3+", "1", "1'", "2'", "3", "2''", "2+", "3''", "2", "3'", "1''", "1+",
        ],
    ),
    (
        "T",
        [
            "2'", "1+", "2", "3''", "3'", "1", "3", "3+", "1''", "2+", "1'", "2''",
        ],
    ),
    (
        "A",
        [
            "1+", "1''", "3'", "2", "3''", "2+", "2''", "3", "2'", "1'", "1", "3+",
        ],
    ),
    (
        "Z",
        [
            "1'", "2+", "2''", "3+", "3", "1''", "3'", "3''", "1", "1+", "2'", "2",
        ],
    ),
    (
        "V",
        [
            "3''", "2'", "3+", "2''", "1+", "1", "2", "1'", "1''", "3", "2+", "3'",
        ],
    ),
    (
        "X",
        [
            "2", "3", "1", "2'", "3'", "1'", "2+", "3+", "1+", "2''", "3''", "1''",
        ],
    ),
    (
        "W",
        [
            "2'", "1''", "1+", "3+", "2''", "3", "3'", "2", "3''", "2+", "1", "1'",
        ],
    ),
    (
        "B",
        [
            "2+", "3'", "2''", "1", "1+", "3''", "1''", "1'", "3", "2'", "3+", "2",
        ],
    ),
    (
        "C",
        [
            "3''", "3+", "1'", "1''", "2", "2+", "1", "2''", "2'", "3", "3'", "1+",
        ],
    ),
];

const GENERATOR_WORDS: [(&str, &str); 7] = [
    ("A", "DYDT"),
    ("Z", "YTYD"),
    ("V", "TDTY"),
    ("W", "DTYT"),
    ("B", "YDTD"),
    ("C", "TYDY"),
    ("X", "YA^2YV"),
];

const RELATIONS: [&str; 6] = [
    "D^3=I", "Y^3=I", "T^3=I", "(DT)^2=I", "(DY)^2=I", "(YT)^2=I",
];

const A5_GENERATORS: [(&str, &str); 3] = [("D", "(1,4,5)"), ("Y", "(2,4,5)"), ("T", "(3,4,5)")];

// Left column, then right column.
const TABLE2: [(&str, &str); 10] = [
    ("(1,4,5)", "D"),
    ("(2,4,5)", "Y"),
    ("(3,4,5)", "T"),
    ("(1,3,5)", "C^2"),
    ("(2,3,5)", "B"),
    ("(1,2,5)", "W"),
    ("(1,3,4)", "Z^2"),
    ("(2,3,4)", "A"),
    ("(1,2,4)", "V"),
    ("(1,2,3)", "X"),
];

// Left column, right column, then the bottom line.
const TABLE3: [([&str; 2], [&str; 2], &str); 15] = [
    (["1", "2"], ["1''", "2''"], "CZ"),
    (["2", "3"], ["2''", "3''"], "YD"),
    (["3", "1"], ["3''", "1''"], "TY"),
    (["1", "3+"], ["3'", "1''"], "XC"),
    (["3", "1+"], ["1'", "3''"], "VX"),
    (["1", "2+"], ["2'", "1''"], "AX"),
    (["3+", "2"], ["3'", "2''"], "ZX"),
    (["1+", "2"], ["1'", "2''"], "XW"),
    (["2+", "3"], ["2'", "3''"], "XB"),
    (["1'", "3+"], ["3'", "1+"], "BY"),
    (["1'", "2+"], ["2'", "1+"], "CT"),
    (["2'", "3+"], ["3'", "2+"], "YV"),
    (["1", "1'"], ["1+", "1''"], "DY"),
    (["2", "2'"], ["2+", "2''"], "YT"),
    (["3", "3'"], ["3+", "3''"], "TD"),
];

/// Edge-table rows from this index on come from the second shared-vertex
/// case (the product turns about an edge through the shared vertex).
pub const SEPARATED_FACE_ROWS_START: usize = 12;

const TABLE4: [(&str, &str, Option<&str>, &str); 15] = [
    (
        "CZ",
        "(1,5,3)(1,4,3)",
        Some("(3,1,5)(3,1,4)"),
        "(3,4)(1,5)(2)",
    ),
    (
        "YD",
        "(2,4,5)(1,4,5)",
        Some("(4,5,2)(4,5,1)"),
        "(4,1)(5,2)(3)",
    ),
    (
        "TY",
        "(3,4,5)(2,4,5)",
        Some("(4,5,3)(4,5,2)"),
        "(4,2)(5,3)(1)",
    ),
    (
        "XC",
        "(1,2,3)(1,5,3)",
        Some("(3,1,2)(3,1,5)"),
        "(3,5)(1,2)(4)",
    ),
    ("VX", "(1,2,4)(1,2,3)", None, "(1,3)(2,4)(5)"),
    (
        "AX",
        "(2,3,4)(1,2,3)",
        Some("(2,3,4)(2,3,1)"),
        "(2,1)(3,4)(5)",
    ),
    (
        "ZX",
        "(1,4,3)(1,2,3)",
        Some("(3,1,4)(3,1,2)"),
        "(3,2)(1,4)(5)",
    ),
    ("XW", "(1,2,3)(1,2,5)", None, "(1,5)(2,3)(4)"),
    (
        "XB",
        "(1,2,3)(2,3,5)",
        Some("(2,3,1)(2,3,5)"),
        "(2,5)(1,3)(4)",
    ),
    (
        "BY",
        "(2,3,5)(2,4,5)",
        Some("(5,2,3)(5,2,4)"),
        "(5,4)(2,3)(1)",
    ),
    (
        "CT",
        "(1,5,3)(3,4,5)",
        Some("(5,3,1)(5,3,4)"),
        "(5,4)(3,1)(2)",
    ),
    (
        "YV",
        "(2,4,5)(1,2,4)",
        Some("(2,4,5)(2,4,1)"),
        "(2,1)(4,5)(3)",
    ),
    (
        "DY",
        "(1,4,5)(2,4,5)",
        Some("(4,5,1)(4,5,2)"),
        "(4,2)(5,1)(3)",
    ),
    (
        "YT",
        "(2,4,5)(3,4,5)",
        Some("(4,5,2)(4,5,3)"),
        "(4,3)(5,2)(1)",
    ),
    (
        "TD",
        "(3,4,5)(1,4,5)",
        Some("(4,5,3)(4,5,1)"),
        "(4,1)(5,3)(2)",
    ),
];

const TABLE5: [(&str, [&str; 2], &str); 6] = [
    ("X^2D", ["1'", "1+"], "(1,2+,2'',3'',3+)(2,3,3',1'',2')"),
    ("X^2Y", ["2'", "2+"], "(1,1',2'',3',3)(2,3+,3'',1'',1+)"),
    ("X^2T", ["3'", "3+"], "(1,2,2',3'',1')(3,1+,1'',2'',2+)"),
    ("W^2A", ["1", "1''"], "(2,3,2+,1',3+)(2',1+,3',2'',3'')"),
    ("B^2Z", ["2", "2''"], "(1,3+,2',1+,3)(1',3'',1'',3',2+)"),
    ("C^2V", ["3", "3''"], "(1,2,1+,3',2+)(1',3+,2',1'',2'')"),
];

const TABLE6: [(&str, &str, &str); 6] = [
    ("X^2D", "(1,3,2)(1,4,5)", "(1,3,2,4,5)"),
    ("X^2Y", "(1,3,2)(2,4,5)", "(1,3,4,5,2)"),
    ("X^2T", "(1,3,2)(3,4,5)", "(1,4,5,3,2)"),
    ("W^2A", "(1,5,2)(2,3,4)", "(1,5,3,4,2)"),
    ("B^2Z", "(2,5,3)(1,4,3)", "(1,4,3,2,5)"),
    ("C^2V", "(1,3,5)(1,2,4)", "(1,3,5,2,4)"),
];

// Read down the columns, which is lexicographic order.
const TABLE7: [(&str, usize, u32); 24] = [
    ("(1,2,3,4,5)", 6, 3),
    ("(1,2,3,5,4)", 3, 4),
    ("(1,2,4,3,5)", 4, 4),
    ("(1,2,4,5,3)", 5, 3),
    ("(1,2,5,3,4)", 1, 2),
    ("(1,2,5,4,3)", 2, 4),
    ("(1,3,2,4,5)", 1, 1),
    ("(1,3,2,5,4)", 4, 2),
    ("(1,3,4,2,5)", 3, 3),
    ("(1,3,4,5,2)", 2, 1),
    ("(1,3,5,2,4)", 6, 1),
    ("(1,3,5,4,2)", 5, 2),
    ("(1,4,2,3,5)", 2, 2),
    ("(1,4,2,5,3)", 6, 4),
    ("(1,4,3,2,5)", 5, 1),
    ("(1,4,3,5,2)", 1, 3),
    ("(1,4,5,2,3)", 4, 3),
    ("(1,4,5,3,2)", 3, 1),
    ("(1,5,2,3,4)", 5, 4),
    ("(1,5,2,4,3)", 3, 2),
    ("(1,5,3,2,4)", 2, 3),
    ("(1,5,3,4,2)", 4, 1),
    ("(1,5,4,2,3)", 1, 4),
    ("(1,5,4,3,2)", 6, 2),
];

pub const A5_LABELS: &str = "1 2 3 4 5";

pub fn a5_domain() -> Arc<Domain> {
    Arc::new(Domain::from_text(A5_LABELS).expect("static labels are valid"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexRow {
    pub name: String,
    pub images: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedWord {
    pub name: String,
    pub word: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeCycleRow {
    pub cycle: String,
    pub rotation: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeRow {
    pub first: [String; 2],
    pub second: [String; 2],
    pub word: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleTranspositionRow {
    pub word: String,
    pub product: String,
    pub rewritten: Option<String>,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexRotationRow {
    pub word: String,
    pub fixed: [String; 2],
    pub cycles: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiveCycleRow {
    pub word: String,
    pub product: String,
    pub image: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerRow {
    pub cycle: String,
    pub base: usize,
    pub exponent: u32,
}

/// Every published table plus the generator words and relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixtures {
    pub table1: Vec<VertexRow>,
    pub generator_words: Vec<NamedWord>,
    pub relations: Vec<String>,
    pub a5_generators: Vec<NamedWord>,
    pub table2: Vec<ThreeCycleRow>,
    pub table3: Vec<EdgeRow>,
    pub table4: Vec<DoubleTranspositionRow>,
    pub table5: Vec<VertexRotationRow>,
    pub table6: Vec<FiveCycleRow>,
    pub table7: Vec<PowerRow>,
}

fn s(text: &str) -> String {
    text.to_string()
}

impl Fixtures {
    pub fn published() -> Self {
        Fixtures {
            table1: TABLE1
                .iter()
                .map(|(name, row)| VertexRow {
                    name: s(name),
                    images: row.iter().map(|l| s(l)).collect(),
                })
                .collect(),
            generator_words: GENERATOR_WORDS
                .iter()
                .map(|(name, word)| NamedWord {
                    name: s(name),
                    word: s(word),
                })
                .collect(),
            relations: RELATIONS.iter().map(|r| s(r)).collect(),
            a5_generators: A5_GENERATORS
                .iter()
                .map(|(name, word)| NamedWord {
                    name: s(name),
                    word: s(word),
                })
                .collect(),
            table2: TABLE2
                .iter()
                .map(|(cycle, rotation)| ThreeCycleRow {
                    cycle: s(cycle),
                    rotation: s(rotation),
                })
                .collect(),
            table3: TABLE3
                .iter()
                .map(|(a, b, word)| EdgeRow {
                    first: a.map(s),
                    second: b.map(s),
                    word: s(word),
                })
                .collect(),
            table4: TABLE4
                .iter()
                .map(
                    |(word, product, rewritten, result)| DoubleTranspositionRow {
                        word: s(word),
                        product: s(product),
                        rewritten: rewritten.map(s),
                        result: s(result),
                    },
                )
                .collect(),
            table5: TABLE5
                .iter()
                .map(|(word, fixed, cycles)| VertexRotationRow {
                    word: s(word),
                    fixed: fixed.map(s),
                    cycles: s(cycles),
                })
                .collect(),
            table6: TABLE6
                .iter()
                .map(|(word, product, image)| FiveCycleRow {
                    word: s(word),
                    product: s(product),
                    image: s(image),
                })
                .collect(),
            table7: TABLE7
                .iter()
                .map(|&(cycle, base, exponent)| PowerRow {
                    cycle: s(cycle),
                    base,
                    exponent,
                })
                .collect(),
        }
    }

    pub fn table1_row(&self, name: &str, domain: &Arc<Domain>) -> Result<Permutation, PermError> {
        let row = self
            .table1
            .iter()
            .find(|r| r.name == name)
            .ok_or_else(|| PermError::UnknownLabel(name.to_string()))?;
        Permutation::from_image_labels(domain, &row.images)
    }

    /// `D`, `Y`, `T` as vertex permutations, from the first three rows of the
    /// vertex table.
    pub fn rotation_generators(&self) -> Result<GeneratorSet, GroupError> {
        let domain = vertex_domain();
        let gens = ["D", "Y", "T"]
            .into_iter()
            .map(|n| Ok((n, self.table1_row(n, &domain)?)))
            .collect::<Result<Vec<_>, PermError>>()?;
        GeneratorSet::new(gens)
    }

    /// `D`, `Y`, `T` as 3-cycles on five points.
    pub fn a5_generators(&self) -> Result<GeneratorSet, GroupError> {
        let domain = a5_domain();
        let gens = self
            .a5_generators
            .iter()
            .map(|g| Ok((g.name.as_str(), Permutation::parse(&g.word, &domain)?)))
            .collect::<Result<Vec<_>, PermError>>()?;
        GeneratorSet::new(gens)
    }
}

pub fn rotation_generators() -> Result<GeneratorSet, GroupError> {
    Fixtures::published().rotation_generators()
}

pub fn a5_generators() -> Result<GeneratorSet, GroupError> {
    Fixtures::published().a5_generators()
}

pub fn table1_row(name: &str, domain: &Arc<Domain>) -> Result<Permutation, PermError> {
    Fixtures::published().table1_row(name, domain)
}

/// Product of the cycles in `text`, taken left to right, where the cycles may
/// overlap and 1-cycles are allowed. Each cycle is read on its own with the
/// strict parser; 1-cycles are returned separately so the caller can check
/// that those points really are fixed.
pub fn cycle_product(
    text: &str,
    domain: &Arc<Domain>,
) -> Result<(Permutation, Vec<usize>), PermError> {
    let mut product = Permutation::identity(domain);
    let mut singletons = Vec::new();
    for group in split_cycles(text) {
        let inner = group.trim_start_matches('(').trim_end_matches(')').trim();
        if !inner.contains(',') {
            let point = domain
                .position(inner)
                .ok_or_else(|| PermError::UnknownLabel(inner.to_string()))?;
            singletons.push(point);
            continue;
        }
        product = product.compose(&Permutation::parse(group, domain)?)?;
    }
    Ok((product, singletons))
}

/// Splits `X^2D` into `["X^2", "D"]`: one item per generator name.
pub fn word_items(word: &str) -> Vec<&str> {
    let mut starts: Vec<usize> = word
        .char_indices()
        .filter(|(_, c)| c.is_ascii_alphabetic())
        .map(|(i, _)| i)
        .collect();
    starts.push(word.len());
    starts.windows(2).map(|w| &word[w[0]..w[1]]).collect()
}

pub(crate) fn split_cycles(text: &str) -> impl Iterator<Item = &str> {
    text.split_inclusive(')')
        .map(str::trim)
        .filter(|g| !g.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_rows_are_bijections() {
        let d = vertex_domain();
        let f = Fixtures::published();
        for row in &f.table1 {
            assert!(f.table1_row(&row.name, &d).is_ok(), "row {}", row.name);
        }
    }

    #[test]
    fn power_rows_are_listed_lexicographically() {
        let f = Fixtures::published();
        let cycles: Vec<&str> = f.table7.iter().map(|r| r.cycle.as_str()).collect();
        let mut sorted = cycles.clone();
        sorted.sort();
        assert_eq!(cycles, sorted);
    }

    #[test]
    fn overlapping_product() {
        let d = a5_domain();
        let (p, fixed) = cycle_product("(1,5,3)(1,4,3)", &d).unwrap();
        assert_eq!(p.format_cycles(), "(1,5)(3,4)");
        assert!(fixed.is_empty());
        let (q, fixed) = cycle_product("(3,4)(1,5)(2)", &d).unwrap();
        assert_eq!(q, p);
        assert_eq!(fixed, vec![1]);
    }

    #[test]
    fn overlapping_product_propagates_parse_errors() {
        let d = a5_domain();
        assert!(cycle_product("(1,5,9)", &d).is_err());
        assert!(cycle_product("(7)", &d).is_err());
    }
}
