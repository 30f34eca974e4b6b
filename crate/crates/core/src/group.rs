//! Finite permutation groups given by named generators.
//!
//! [`Group::generate`] enumerates the closure breadth first, so the first
//! word that reaches an element is a shortest one. Generators are tried in
//! their declared order, which makes that word the lexicographically least
//! among the shortest (a prefix of a least shortest word is itself a least
//! shortest word, so first discovery is enough).

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::GroupError;
use crate::perm::{CycleType, Domain, Label, Permutation};

/// Default cap on closure size; mistyped generators usually blow far past it.
pub const DEFAULT_CLOSURE_BOUND: usize = 10_000;

#[derive(Debug, Clone)]
pub struct GeneratorSet {
    names: Vec<String>,
    values: Vec<Permutation>,
}

impl GeneratorSet {
    pub fn new<S: Into<String>>(
        generators: impl IntoIterator<Item = (S, Permutation)>,
    ) -> Result<Self, GroupError> {
        let mut names: Vec<String> = Vec::new();
        let mut values: Vec<Permutation> = Vec::new();
        for (name, value) in generators {
            let name = name.into();
            Label::new(name.as_str())
                .map_err(|_| GroupError::InvalidGeneratorName(name.clone()))?;
            if names.contains(&name) {
                return Err(GroupError::DuplicateGenerator(name));
            }
            if values.first().is_some_and(|v| v.domain() != value.domain()) {
                return Err(GroupError::MixedDomains);
            }
            names.push(name);
            values.push(value);
        }
        if names.is_empty() {
            return Err(GroupError::NoGenerators);
        }
        Ok(GeneratorSet { names, values })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn values(&self) -> &[Permutation] {
        &self.values
    }

    pub fn get(&self, name: &str) -> Option<&Permutation> {
        self.position(name).map(|i| &self.values[i])
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn domain(&self) -> &Arc<Domain> {
        self.values[0].domain()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Permutation)> {
        self.names.iter().map(String::as_str).zip(&self.values)
    }

    /// Parses a word over these generator names.
    pub fn parse_word(&self, text: &str) -> Result<Word, GroupError> {
        Word::parse(text, &self.names)
    }

    /// Left-to-right product of the named generators; the empty word is the
    /// identity.
    pub fn evaluate(&self, word: &Word) -> Result<Permutation, GroupError> {
        let mut out = Permutation::identity(self.domain());
        let mut offset = 0;
        for token in word.tokens() {
            let g = self
                .get(token)
                .ok_or_else(|| GroupError::UnknownGenerator {
                    word: word.concatenated(),
                    position: offset,
                })?;
            out = &out * g;
            offset += token.len();
        }
        Ok(out)
    }
}

/// A sequence of generator names.
///
/// Written as the names run together (`DYDT`); the empty word displays as
/// `-`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<String>);

impl Word {
    pub fn new<S: Into<String>>(tokens: impl IntoIterator<Item = S>) -> Self {
        Word(tokens.into_iter().map(Into::into).collect())
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn tokens(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn repeat(&self, n: usize) -> Word {
        Word(
            std::iter::repeat_n(self.0.iter().cloned(), n)
                .flatten()
                .collect(),
        )
    }

    /// Replaces every token that has an entry in `table` by its expansion.
    pub fn substitute(&self, table: &HashMap<String, Word>) -> Word {
        let mut out = Vec::new();
        for token in &self.0 {
            match table.get(token) {
                Some(expansion) => out.extend(expansion.0.iter().cloned()),
                None => out.push(token.clone()),
            }
        }
        Word(out)
    }

    /// Concatenated names, without the `-` placeholder for the empty word.
    pub fn concatenated(&self) -> String {
        self.0.concat()
    }

    /// Parses `name*` with optional `^n` powers and parenthesised groups,
    /// e.g. `DYDT`, `YA^2YV`, `(DT)^2`. Names are matched longest first.
    /// `-` alone is the empty word.
    pub fn parse<S: AsRef<str>>(text: &str, names: &[S]) -> Result<Word, GroupError> {
        if text.trim() == "-" {
            return Ok(Word::empty());
        }
        let mut names: Vec<&str> = names.iter().map(AsRef::as_ref).collect();
        names.sort_by_key(|n| std::cmp::Reverse(n.len()));
        let mut parser = WordParser {
            text,
            pos: 0,
            names,
        };
        let word = parser.sequence()?;
        if parser.pos != text.len() {
            return Err(parser.error());
        }
        Ok(word)
    }
}

struct WordParser<'a> {
    text: &'a str,
    pos: usize,
    names: Vec<&'a str>,
}

impl<'a> WordParser<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn error(&self) -> GroupError {
        GroupError::UnknownGenerator {
            word: self.text.to_string(),
            position: self.pos,
        }
    }

    fn skip_spaces(&mut self) {
        while self.rest().starts_with(' ') {
            self.pos += 1;
        }
    }

    fn sequence(&mut self) -> Result<Word, GroupError> {
        let mut out = Word::empty();
        loop {
            self.skip_spaces();
            let rest = self.rest();
            let item = if rest.starts_with('(') {
                self.pos += 1;
                let inner = self.sequence()?;
                if !self.rest().starts_with(')') {
                    return Err(self.error());
                }
                self.pos += 1;
                inner
            } else if let Some(name) = self.names.iter().find(|n| rest.starts_with(**n)) {
                self.pos += name.len();
                Word::new([*name])
            } else {
                return Ok(out);
            };
            let item = match self.exponent()? {
                Some(n) => item.repeat(n),
                None => item,
            };
            out = out.concat(&item);
        }
    }

    fn exponent(&mut self) -> Result<Option<usize>, GroupError> {
        self.skip_spaces();
        if !self.rest().starts_with('^') {
            return Ok(None);
        }
        self.pos += 1;
        let digits: String = self
            .rest()
            .chars()
            .take_while(char::is_ascii_digit)
            .collect();
        if digits.is_empty() {
            return Err(self.error());
        }
        self.pos += digits.len();
        digits.parse().map(Some).map_err(|_| self.error())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&self.0.concat())
        }
    }
}

/// The closure of a generator set, with a shortest word for each element.
#[derive(Debug, Clone)]
pub struct Group {
    generators: GeneratorSet,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    words: Vec<Word>,
}

impl Group {
    pub fn generate(generators: GeneratorSet) -> Result<Group, GroupError> {
        Group::generate_bounded(generators, DEFAULT_CLOSURE_BOUND)
    }

    /// Breadth-first closure; elements are listed by word length, then by
    /// the order in which generators were declared.
    pub fn generate_bounded(generators: GeneratorSet, bound: usize) -> Result<Group, GroupError> {
        let identity = Permutation::identity(generators.domain());
        let mut elements = vec![identity.clone()];
        let mut words = vec![Word::empty()];
        let mut index = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);

        while let Some(at) = queue.pop_front() {
            for (name, g) in generators.iter() {
                let next = &elements[at] * g;
                if index.contains_key(&next) {
                    continue;
                }
                if elements.len() == bound {
                    return Err(GroupError::ClosureTooLarge { bound });
                }
                index.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                words.push(words[at].concat(&Word::new([name])));
                elements.push(next);
            }
        }

        Ok(Group {
            generators,
            elements,
            index,
            words,
        })
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in breadth-first discovery order; the identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn identity(&self) -> &Permutation {
        &self.elements[0]
    }

    pub fn domain(&self) -> &Arc<Domain> {
        self.generators.domain()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// The least shortest word for `target`: minimum length, then
    /// lexicographic in generator order.
    pub fn shortest_word(&self, target: &Permutation) -> Result<&Word, GroupError> {
        self.index_of(target)
            .map(|i| &self.words[i])
            .ok_or_else(|| GroupError::NotInGroup(target.to_string()))
    }

    /// Longest shortest word, i.e. the diameter of the Cayley graph on the
    /// positive generators.
    pub fn diameter(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }

    /// Disjoint cover of the group by cycle type.
    pub fn partition_by_cycle_type(&self) -> BTreeMap<CycleType, Vec<Permutation>> {
        let mut out: BTreeMap<CycleType, Vec<Permutation>> = BTreeMap::new();
        for p in &self.elements {
            out.entry(p.cycle_type()).or_default().push(p.clone());
        }
        out
    }

    /// Elements as a set, for comparisons that ignore enumeration order.
    pub fn element_set(&self) -> HashSet<&Permutation> {
        self.elements.iter().collect()
    }
}

/// An equation between two words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Relation { lhs, rhs }
    }

    /// `lhs = rhs`, where either side may be `I` for the empty word.
    pub fn parse<S: AsRef<str>>(text: &str, names: &[S]) -> Result<Relation, GroupError> {
        let (lhs, rhs) = text
            .split_once('=')
            .ok_or_else(|| GroupError::UnknownGenerator {
                word: text.to_string(),
                position: text.len(),
            })?;
        let side = |s: &str| {
            if s.trim() == "I" && !names.iter().any(|n| n.as_ref() == "I") {
                Ok(Word::empty())
            } else {
                Word::parse(s.trim(), names)
            }
        };
        Ok(Relation::new(side(lhs)?, side(rhs)?))
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |w: &Word| {
            if w.is_empty() {
                "I".to_string()
            } else {
                w.to_string()
            }
        };
        write!(f, "{}={}", side(&self.lhs), side(&self.rhs))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Evaluates both sides of every relation; failures are report entries.
pub fn verify_relations(
    generators: &GeneratorSet,
    relations: &[Relation],
) -> Result<RelationReport, GroupError> {
    let mut checks = Vec::with_capacity(relations.len());
    for rel in relations {
        let lhs = generators.evaluate(&rel.lhs)?;
        let rhs = generators.evaluate(&rel.rhs)?;
        checks.push(RelationCheck {
            relation: rel.to_string(),
            holds: lhs == rhs,
            lhs: lhs.format_cycles(),
            rhs: rhs.format_cycles(),
        });
    }
    Ok(RelationReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn five() -> Arc<Domain> {
        Arc::new(Domain::from_text("1 2 3 4 5").unwrap())
    }

    fn a5_gens() -> GeneratorSet {
        let d = five();
        GeneratorSet::new([
            ("D", Permutation::parse("(1,4,5)", &d).unwrap()),
            ("Y", Permutation::parse("(2,4,5)", &d).unwrap()),
            ("T", Permutation::parse("(3,4,5)", &d).unwrap()),
        ])
        .unwrap()
    }

    #[test]
    fn generator_set_validation() {
        let d = five();
        let id = Permutation::identity(&d);
        assert_eq!(
            GeneratorSet::new(Vec::<(&str, Permutation)>::new()).unwrap_err(),
            GroupError::NoGenerators
        );
        assert!(matches!(
            GeneratorSet::new([("D", id.clone()), ("D", id.clone())]),
            Err(GroupError::DuplicateGenerator(_))
        ));
        let other = Arc::new(Domain::from_text("1 2 3").unwrap());
        assert_eq!(
            GeneratorSet::new([("D", id), ("Y", Permutation::identity(&other))]).unwrap_err(),
            GroupError::MixedDomains
        );
    }

    #[test]
    fn word_parsing() {
        let names = ["D", "Y", "T", "A", "V"];
        assert_eq!(Word::parse("DYDT", &names).unwrap().to_string(), "DYDT");
        assert_eq!(Word::parse("YA^2YV", &names).unwrap().to_string(), "YAAYV");
        assert_eq!(Word::parse("(DT)^2", &names).unwrap().to_string(), "DTDT");
        assert_eq!(Word::parse("-", &names).unwrap(), Word::empty());
        assert_eq!(Word::parse("", &names).unwrap(), Word::empty());
        match Word::parse("DQ", &names) {
            Err(GroupError::UnknownGenerator { position, .. }) => assert_eq!(position, 1),
            other => panic!("{other:?}"),
        }
        assert!(Word::parse("(DT", &names).is_err());
        assert!(Word::parse("D^", &names).is_err());
    }

    #[test]
    fn longest_name_wins() {
        let names = ["g1", "g10", "g"];
        let w = Word::parse("g10g1g", &names).unwrap();
        assert_eq!(w.tokens(), &["g10", "g1", "g"]);
    }

    #[test]
    fn substitution_expands_tokens() {
        let table = HashMap::from([("A".to_string(), Word::new(["D", "Y", "D", "T"]))]);
        let w = Word::new(["Y", "A", "A"]).substitute(&table);
        assert_eq!(w.to_string(), "YDYDTDYDT");
    }

    #[test]
    fn empty_word_is_identity() {
        assert!(a5_gens().evaluate(&Word::empty()).unwrap().is_identity());
        assert_eq!(Word::empty().to_string(), "-");
    }

    #[test]
    fn a5_has_sixty_elements() {
        let g = Group::generate(a5_gens()).unwrap();
        assert_eq!(g.order(), 60);
        assert!(g.identity().is_identity());
    }

    #[test]
    fn trivial_group() {
        let d = five();
        let g = Group::generate(GeneratorSet::new([("e", Permutation::identity(&d))]).unwrap())
            .unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn closure_bound_is_enforced() {
        let d = five();
        let gens = GeneratorSet::new([
            ("s", Permutation::parse("(1,2)", &d).unwrap()),
            ("c", Permutation::parse("(1,2,3,4,5)", &d).unwrap()),
        ])
        .unwrap();
        assert_eq!(Group::generate(gens.clone()).unwrap().order(), 120);
        assert_eq!(
            Group::generate_bounded(gens, 100).unwrap_err(),
            GroupError::ClosureTooLarge { bound: 100 }
        );
    }

    #[test]
    fn false_relation_fails() {
        let gens = a5_gens();
        let rels = [
            Relation::parse("D^3 = I", gens.names()).unwrap(),
            Relation::parse("D^2 = I", gens.names()).unwrap(),
        ];
        let report = verify_relations(&gens, &rels).unwrap();
        assert!(report.checks[0].holds);
        assert!(!report.checks[1].holds);
        assert!(!report.passed());
        assert_eq!(report.checks[1].relation, "DD=I");
    }

    #[test]
    fn shortest_word_rejects_outsiders() {
        let g = Group::generate(a5_gens()).unwrap();
        let odd = Permutation::parse("(1,2)", &five()).unwrap();
        assert!(matches!(
            g.shortest_word(&odd),
            Err(GroupError::NotInGroup(_))
        ));
        assert!(g.shortest_word(g.identity()).unwrap().is_empty());
    }
}
