//! The isomorphism from the rotation group onto A5.
//!
//! The map is defined on generators only: `D`, `Y`, `T` go to `(1,4,5)`,
//! `(2,4,5)`, `(3,4,5)`. [`Homomorphism::extend`] pushes that assignment
//! through each element's shortest word. Whether the result is well defined
//! is not argued; it is checked on all 3600 ordered pairs by
//! [`Homomorphism::verify`].

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

use crate::error::{GroupError, IsoError, ModelError};
use crate::fixtures;
use crate::group::{GeneratorSet, Group, Word};
use crate::icosa::{IcosaGraph, RotationClass, RotationKind};
use crate::perm::{CycleType, Domain, Permutation};

/// A5 on `{1,...,5}`, generated by `(1,4,5)`, `(2,4,5)`, `(3,4,5)`.
pub fn build_a5() -> Result<Group, GroupError> {
    Group::generate(fixtures::a5_generators()?)
}

/// The cycle type an A5 element must have to match a rotation of `kind`.
pub fn expected_a5_cycle_type(kind: RotationKind) -> CycleType {
    match kind {
        RotationKind::Identity => CycleType::from_counts([(1, 5)]),
        RotationKind::Face => CycleType::from_counts([(1, 2), (3, 1)]),
        RotationKind::Edge => CycleType::from_counts([(1, 1), (2, 2)]),
        RotationKind::Vertex => CycleType::from_counts([(5, 1)]),
    }
}

/// A candidate homomorphism, fixed by generator images.
#[derive(Debug, Clone)]
pub struct Homomorphism {
    source: Group,
    target: Group,
    generator_images: GeneratorSet,
    element_map: Vec<Permutation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsomorphismReport {
    pub pairs_checked: usize,
    /// Ordered pairs `(g, h)` with `f(gh) != f(g)f(h)`, as cycle notation.
    pub multiplicative_failures: Vec<(String, String)>,
    pub injective: bool,
    pub surjective: bool,
}

impl IsomorphismReport {
    pub fn passed(&self) -> bool {
        self.multiplicative_failures.is_empty() && self.injective && self.surjective
    }
}

impl Homomorphism {
    /// Maps every source element through its shortest word. `images` must
    /// name exactly the source generators.
    pub fn extend(
        source: Group,
        target: Group,
        images: GeneratorSet,
    ) -> Result<Homomorphism, IsoError> {
        for name in source.generators().names() {
            if images.get(name).is_none() {
                return Err(GroupError::UnknownGenerator {
                    word: name.clone(),
                    position: 0,
                }
                .into());
            }
        }
        let element_map = source
            .elements()
            .iter()
            .map(|g| images.evaluate(source.shortest_word(g)?))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Homomorphism {
            source,
            target,
            generator_images: images,
            element_map,
        })
    }

    pub fn source(&self) -> &Group {
        &self.source
    }

    pub fn target(&self) -> &Group {
        &self.target
    }

    pub fn generator_images(&self) -> &GeneratorSet {
        &self.generator_images
    }

    pub fn image(&self, g: &Permutation) -> Result<&Permutation, IsoError> {
        self.source
            .index_of(g)
            .map(|i| &self.element_map[i])
            .ok_or_else(|| IsoError::Unmapped(g.to_string()))
    }

    /// Multiplicativity over every ordered pair, then injectivity and
    /// surjectivity onto the target group.
    pub fn verify(&self) -> IsomorphismReport {
        let elements = self.source.elements();
        let mut failures = Vec::new();
        for (i, g) in elements.iter().enumerate() {
            for (j, h) in elements.iter().enumerate() {
                let gh = g * h;
                let lhs = self.image(&gh).expect("group is closed");
                let rhs = &self.element_map[i] * &self.element_map[j];
                if *lhs != rhs {
                    failures.push((g.to_string(), h.to_string()));
                }
            }
        }
        let distinct: HashSet<&Permutation> = self.element_map.iter().collect();
        let inside = self.element_map.iter().all(|p| self.target.contains(p));
        IsomorphismReport {
            pairs_checked: elements.len() * elements.len(),
            multiplicative_failures: failures,
            injective: distinct.len() == elements.len(),
            surjective: inside && distinct.len() == self.target.order(),
        }
    }

    /// Verifies the map and, if it is a bijective homomorphism, returns it
    /// with its inverse.
    pub fn into_isomorphism(self) -> Result<Isomorphism, Box<IsomorphismReport>> {
        let report = self.verify();
        if !report.passed() {
            return Err(Box::new(report));
        }
        let inverse = self
            .element_map
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Ok(Isomorphism {
            forward: self,
            inverse,
            report,
        })
    }
}

/// A homomorphism that has passed [`Homomorphism::verify`].
#[derive(Debug, Clone)]
pub struct Isomorphism {
    forward: Homomorphism,
    inverse: HashMap<Permutation, usize>,
    report: IsomorphismReport,
}

impl Isomorphism {
    pub fn homomorphism(&self) -> &Homomorphism {
        &self.forward
    }

    pub fn report(&self) -> &IsomorphismReport {
        &self.report
    }

    pub fn source(&self) -> &Group {
        self.forward.source()
    }

    pub fn target(&self) -> &Group {
        self.forward.target()
    }

    pub fn image(&self, g: &Permutation) -> Result<&Permutation, IsoError> {
        self.forward.image(g)
    }

    pub fn preimage(&self, q: &Permutation) -> Result<&Permutation, IsoError> {
        self.inverse
            .get(q)
            .map(|&i| &self.forward.source.elements()[i])
            .ok_or_else(|| IsoError::Unmapped(q.to_string()))
    }
}

/// One rotation and its partner in A5.
#[derive(Debug, Clone)]
pub struct CorrespondenceRow {
    pub rotation: Permutation,
    pub word: Word,
    pub class: RotationClass,
    pub step: u32,
    pub image: Permutation,
}

/// Serialized form of a correspondence row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrespondenceEntry {
    pub word: String,
    pub rotation_cycles: String,
    pub class: RotationKind,
    pub axis: Vec<Vec<String>>,
    pub a5_cycles: String,
    pub a5_class: String,
}

/// All 60 rows: identity, then face, edge and vertex rotations, each kind
/// ordered by axis and then by step.
#[derive(Debug, Clone)]
pub struct Correspondence {
    pub rows: Vec<CorrespondenceRow>,
}

impl Correspondence {
    pub fn build(iso: &Isomorphism, graph: &IcosaGraph) -> Result<Correspondence, IsoError> {
        let mut rows = iso
            .source()
            .elements()
            .iter()
            .map(|g| {
                let class = graph.classify(g)?;
                Ok(CorrespondenceRow {
                    rotation: g.clone(),
                    word: iso.source().shortest_word(g)?.clone(),
                    step: graph.step(g, &class),
                    image: iso.image(g)?.clone(),
                    class,
                })
            })
            .collect::<Result<Vec<_>, IsoError>>()?;
        rows.sort_by(|a, b| {
            (a.class.kind(), a.class.axis_parts(), a.step).cmp(&(
                b.class.kind(),
                b.class.axis_parts(),
                b.step,
            ))
        });
        Ok(Correspondence { rows })
    }

    pub fn entries(&self, graph: &IcosaGraph) -> Vec<CorrespondenceEntry> {
        self.rows
            .iter()
            .map(|r| CorrespondenceEntry {
                word: r.word.to_string(),
                rotation_cycles: r.rotation.format_cycles(),
                class: r.class.kind(),
                axis: r
                    .class
                    .axis_parts()
                    .iter()
                    .map(|part| graph.labels_of(part))
                    .collect(),
                a5_cycles: r.image.format_cycles(),
                a5_class: r.image.cycle_type().to_string(),
            })
            .collect()
    }

    /// Distinct rotations, distinct images.
    pub fn is_bijection(&self) -> bool {
        let rotations: HashSet<_> = self.rows.iter().map(|r| &r.rotation).collect();
        let images: HashSet<_> = self.rows.iter().map(|r| &r.image).collect();
        rotations.len() == self.rows.len() && images.len() == self.rows.len()
    }

    /// Rows whose A5 cycle type does not match their geometric kind.
    pub fn class_mismatches(&self) -> Vec<&CorrespondenceRow> {
        self.rows
            .iter()
            .filter(|r| r.image.cycle_type() != expected_a5_cycle_type(r.class.kind()))
            .collect()
    }

    pub fn census(&self) -> BTreeMap<RotationKind, usize> {
        let mut out = BTreeMap::new();
        for r in &self.rows {
            *out.entry(r.class.kind()).or_insert(0) += 1;
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleTranspositionCheck {
    pub points: [String; 4],
    pub product: String,
    pub expected: String,
    pub holds: bool,
}

/// Checks `(a,b,c)(a,b,d) = (a,d)(b,c)` with the left-to-right product.
pub fn double_transposition_identity(
    points: [&str; 4],
    domain: &std::sync::Arc<Domain>,
) -> Result<DoubleTranspositionCheck, IsoError> {
    let distinct: HashSet<&str> = points.iter().copied().collect();
    if distinct.len() != 4 {
        return Err(IsoError::PointsNotDistinct(
            points.iter().map(|p| p.to_string()).collect(),
        ));
    }
    let [a, b, c, d] = points;
    let parse = |text: String| Permutation::parse(&text, domain);
    let lhs = parse(format!("({a},{b},{c})"))?.compose(&parse(format!("({a},{b},{d})"))?)?;
    let rhs = parse(format!("({a},{d})({b},{c})"))?;
    Ok(DoubleTranspositionCheck {
        points: points.map(str::to_string),
        product: lhs.format_cycles(),
        expected: rhs.format_cycles(),
        holds: lhs == rhs,
    })
}

/// Everything derived from the published generators: the rotation group
/// with its icosahedron, A5, and the verified isomorphism between them.
#[derive(Debug, Clone)]
pub struct Model {
    pub graph: IcosaGraph,
    pub iso: Isomorphism,
}

impl Model {
    pub fn published() -> Result<Model, IsoError> {
        Model::from_fixtures(&fixtures::Fixtures::published())
    }

    pub fn from_fixtures(f: &fixtures::Fixtures) -> Result<Model, IsoError> {
        let graph = IcosaGraph::from_generators(f.rotation_generators()?)?;
        let a5_gens = f.a5_generators()?;
        let a5 = Group::generate(a5_gens.clone())?;
        let iso = Homomorphism::extend(graph.group().clone(), a5, a5_gens)?
            .into_isomorphism()
            .map_err(|report| {
                IsoError::Model(ModelError::Inconsistent(format!(
                    "generator images do not define an isomorphism: {} multiplicative failures, injective={}, surjective={}",
                    report.multiplicative_failures.len(),
                    report.injective,
                    report.surjective
                )))
            })?;
        Ok(Model { graph, iso })
    }

    pub fn rotations(&self) -> &Group {
        self.graph.group()
    }

    pub fn a5(&self) -> &Group {
        self.iso.target()
    }

    pub fn correspondence(&self) -> Result<Correspondence, IsoError> {
        Correspondence::build(&self.iso, &self.graph)
    }

    /// Evaluates a rotation word such as `X^2D` or `YA^2YV`: named rotations
    /// from the vertex table are expanded into `D`, `Y`, `T` first.
    pub fn rotation_word(
        &self,
        text: &str,
        f: &fixtures::Fixtures,
    ) -> Result<Permutation, IsoError> {
        let word = expand_word(text, f)?;
        Ok(self.rotations().generators().evaluate(&word)?)
    }
}

/// Parses a word over `D`, `Y`, `T` and the derived rotation names, and
/// rewrites it into `D`, `Y`, `T` only.
pub fn expand_word(text: &str, f: &fixtures::Fixtures) -> Result<Word, GroupError> {
    let mut names: Vec<String> = vec!["D".into(), "Y".into(), "T".into()];
    names.extend(f.generator_words.iter().map(|g| g.name.clone()));
    let mut word = Word::parse(text, &names)?;
    let mut table = HashMap::new();
    for g in &f.generator_words {
        table.insert(g.name.clone(), Word::parse(&g.word, &names)?);
    }
    // Derived names may refer to each other (X uses A and V).
    for _ in 0..=table.len() {
        let next = word.substitute(&table);
        if next == word {
            break;
        }
        word = next;
    }
    Ok(word)
}
