//! Permutations of finite labelled domains.
//!
//! Every permutation carries the [`Domain`] it acts on. Points are stored as
//! positions in that domain, so composition and equality are plain integer
//! work; labels only matter at the text boundary.
//!
//! Composition is **left to right** throughout the crate: `p.compose(&q)` is
//! the permutation that applies `p` first and then `q`, so that
//! `p.compose(&q).apply(x) == q.apply(p.apply(x))`. A word such as `DYDT`
//! therefore means "apply `D`, then `Y`, then `D`, then `T`".

use std::borrow::Borrow;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Mul;
use std::sync::Arc;

use crate::error::PermError;
use crate::parse;

/// A point name such as `1`, `2+`, `3'` or `1''`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(String);

impl Label {
    pub fn new(text: impl Into<String>) -> Result<Self, PermError> {
        let text = text.into();
        if text.is_empty()
            || text
                .chars()
                .any(|c| c.is_whitespace() || matches!(c, ',' | '(' | ')'))
        {
            return Err(PermError::InvalidLabel(text));
        }
        Ok(Label(text))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Borrow<str> for Label {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An ordered set of distinct labels.
///
/// The order is fixed at construction and is the canonical order used for
/// printing cycles and sorting anything built from points.
#[derive(Debug, Clone)]
pub struct Domain {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

impl Domain {
    pub fn new(labels: Vec<Label>) -> Result<Self, PermError> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(PermError::DuplicateDomainLabel(label.clone()));
            }
        }
        Ok(Domain { labels, index })
    }

    /// Builds a domain from whitespace-separated label text, e.g. `"1 2 3 4 5"`.
    pub fn from_text(text: &str) -> Result<Self, PermError> {
        let labels = text
            .split_whitespace()
            .map(Label::new)
            .collect::<Result<Vec<_>, _>>()?;
        Domain::new(labels)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, point: usize) -> &Label {
        &self.labels[point]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.position(label).is_some()
    }

    /// Comma-separated label list, used in error messages.
    pub fn describe(&self) -> String {
        let names: Vec<&str> = self.labels.iter().map(Label::as_str).collect();
        format!("{{{}}}", names.join(","))
    }
}

impl PartialEq for Domain {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for Domain {}

impl Hash for Domain {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.labels.hash(state);
    }
}

/// Even or odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// Multiplicity of each cycle length, fixed points included.
///
/// Displayed in the `k1=2,k3=1` style: `k<length>=<count>`, by increasing
/// length, zero counts omitted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CycleType(BTreeMap<usize, usize>);

impl CycleType {
    pub fn from_counts(counts: impl IntoIterator<Item = (usize, usize)>) -> Self {
        CycleType(counts.into_iter().filter(|&(_, m)| m > 0).collect())
    }

    /// Number of cycles of the given length.
    pub fn count(&self, length: usize) -> usize {
        self.0.get(&length).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.0
    }

    /// Number of points the permutation acts on.
    pub fn degree(&self) -> usize {
        self.0.iter().map(|(l, m)| l * m).sum()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(l, m)| format!("k{l}={m}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// A bijection of a [`Domain`] onto itself.
#[derive(Debug, Clone)]
pub struct Permutation {
    domain: Arc<Domain>,
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(domain: &Arc<Domain>) -> Self {
        Permutation {
            domain: Arc::clone(domain),
            images: (0..domain.len()).collect(),
        }
    }

    /// Builds a permutation from the image of every point, by position.
    pub fn from_images(domain: &Arc<Domain>, images: Vec<usize>) -> Result<Self, PermError> {
        if images.len() != domain.len() {
            return Err(PermError::NotBijection(format!(
                "{} images for a domain of {} points",
                images.len(),
                domain.len()
            )));
        }
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= seen.len() || std::mem::replace(&mut seen[i], true) {
                return Err(PermError::NotBijection(format!(
                    "image list {images:?} repeats or overflows"
                )));
            }
        }
        Ok(Permutation {
            domain: Arc::clone(domain),
            images,
        })
    }

    /// Builds a permutation from the image label of each domain point, in
    /// domain order. This is the row layout of a two-line table.
    pub fn from_image_labels<S: AsRef<str>>(
        domain: &Arc<Domain>,
        labels: &[S],
    ) -> Result<Self, PermError> {
        let images = labels
            .iter()
            .map(|l| {
                domain
                    .position(l.as_ref())
                    .ok_or_else(|| PermError::UnknownLabel(l.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::from_images(domain, images)
    }

    /// Builds the product of disjoint cycles given by point positions.
    pub fn from_cycles(domain: &Arc<Domain>, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..domain.len()).collect();
        let mut used = vec![false; domain.len()];
        for cycle in cycles {
            for (k, &point) in cycle.iter().enumerate() {
                if point >= domain.len() || std::mem::replace(&mut used[point], true) {
                    return Err(PermError::NotBijection(format!(
                        "cycles {cycles:?} are not disjoint"
                    )));
                }
                images[point] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation {
            domain: Arc::clone(domain),
            images,
        })
    }

    /// Parses cycle notation such as `(1,4,5)` or `(1,2+,2'')(2,3,3')`.
    pub fn parse(text: &str, domain: &Arc<Domain>) -> Result<Self, PermError> {
        parse::parse_cycles(text, domain)
    }

    pub fn domain(&self) -> &Arc<Domain> {
        &self.domain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn apply_label(&self, label: &str) -> Option<&Label> {
        let point = self.domain.position(label)?;
        Some(self.domain.label(self.images[point]))
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.domain != other.domain {
            return Err(PermError::DomainMismatch {
                left: self.domain.describe(),
                right: other.domain.describe(),
            });
        }
        Ok(Permutation {
            domain: Arc::clone(&self.domain),
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation {
            domain: Arc::clone(&self.domain),
            images,
        }
    }

    /// `n`-fold product; negative exponents use the inverse.
    pub fn power(&self, n: i64) -> Permutation {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut exp = n.unsigned_abs();
        // Reduce by the order so huge exponents stay cheap.
        exp %= self.order();
        let mut out = Permutation::identity(&self.domain);
        for _ in 0..exp {
            out = &out * &base;
        }
        out
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles(false)
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }

    /// Canonical cycle decomposition by position: every cycle starts at its
    /// smallest point and cycles are sorted by that point.
    pub fn cycles(&self, include_fixed: bool) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.images[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.images[next];
            }
            if include_fixed || cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Same as [`cycles`](Self::cycles) with labels in place of positions.
    pub fn cycle_labels(&self, include_fixed: bool) -> Vec<Vec<Label>> {
        self.cycles(include_fixed)
            .into_iter()
            .map(|c| {
                c.into_iter()
                    .map(|p| self.domain.label(p).clone())
                    .collect()
            })
            .collect()
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut counts = BTreeMap::new();
        for cycle in self.cycles(true) {
            *counts.entry(cycle.len()).or_insert(0) += 1;
        }
        CycleType(counts)
    }

    pub fn parity(&self) -> Parity {
        if (self.images.len() - self.cycles(true).len()).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.images.len())
            .filter(|&i| self.images[i] == i)
            .collect()
    }

    /// Canonical cycle notation with fixed points omitted; the identity is `""`.
    pub fn format_cycles(&self) -> String {
        self.format_with(false)
    }

    /// Cycle notation listing fixed points as 1-cycles, e.g. `(1,4,5)(2)(3)`.
    ///
    /// This is display only; the parser accepts cycles of length two or more.
    pub fn format_cycles_full(&self) -> String {
        self.format_with(true)
    }

    fn format_with(&self, include_fixed: bool) -> String {
        let mut out = String::new();
        for cycle in self.cycle_labels(include_fixed) {
            out.push('(');
            let names: Vec<&str> = cycle.iter().map(Label::as_str).collect();
            out.push_str(&names.join(","));
            out.push(')');
        }
        out
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
            && (Arc::ptr_eq(&self.domain, &other.domain) || self.domain == other.domain)
    }
}

impl Eq for Permutation {}

impl Hash for Permutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.images.hash(state);
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by domain labels, then by image list.
impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.domain, &other.domain) {
            return self.images.cmp(&other.images);
        }
        self.domain
            .labels
            .cmp(&other.domain.labels)
            .then_with(|| self.images.cmp(&other.images))
    }
}

/// Left-to-right product. Panics if the domains differ; use
/// [`Permutation::compose`] to get an error instead.
impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
            .expect("permutations on different domains")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_cycles())
    }
}
