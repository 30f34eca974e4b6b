//! The icosahedron, rebuilt from its rotation group.
//!
//! Nothing about the solid is typed in except one face. The faces are the
//! orbit of that seed face under the group generated by `D`, `Y`, `T`; the
//! edges are the pairs inside faces; the antipodal pairing is read off the
//! fixed points of the order-5 elements. Every other structure (axes,
//! pentagons, the shared-vertex products) is computed from those three.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use serde::Serialize;

use crate::error::ModelError;
use crate::group::{GeneratorSet, Group};
use crate::perm::{Domain, Label, Permutation};

/// Vertex names in canonical order.
pub const VERTEX_LABELS: [&str; 12] = [
    "1", "2", "3", "1'", "2'", "3'", "1+", "2+", "3+", "1''", "2''", "3''",
];

/// The face through which the generator `D` turns.
pub const SEED_FACE: [&str; 3] = ["1", "2+", "3"];

/// The six vertex axes as named in the source tables.
pub const LISTED_ANTIPODAL_PAIRS: [[&str; 2]; 6] = [
    ["1'", "1+"],
    ["2'", "2+"],
    ["3'", "3+"],
    ["1", "1''"],
    ["2", "2''"],
    ["3", "3''"],
];

pub fn vertex_domain() -> Arc<Domain> {
    Arc::new(Domain::from_text(&VERTEX_LABELS.join(" ")).expect("static labels are valid"))
}

/// A vertex, as a position in the vertex domain.
pub type Vertex = usize;

/// An unordered vertex pair, stored sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(pub [Vertex; 2]);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        Edge(if a <= b { [a, b] } else { [b, a] })
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }
}

/// An unordered vertex triple, stored sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(pub [Vertex; 3]);

impl Face {
    pub fn new(mut vs: [Vertex; 3]) -> Self {
        vs.sort_unstable();
        Face(vs)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn edges(&self) -> [Edge; 3] {
        let [a, b, c] = self.0;
        [Edge::new(a, b), Edge::new(a, c), Edge::new(b, c)]
    }

    pub fn shared(&self, other: &Face) -> Vec<Vertex> {
        self.0
            .iter()
            .copied()
            .filter(|&v| other.contains(v))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RotationKind {
    Identity,
    Face,
    Edge,
    Vertex,
}

impl RotationKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RotationKind::Identity => "identity",
            RotationKind::Face => "face",
            RotationKind::Edge => "edge",
            RotationKind::Vertex => "vertex",
        }
    }
}

/// What a rotation is, geometrically, and the two antipodal pieces its axis
/// passes through. Axis parts are ordered by their smallest vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RotationClass {
    Identity,
    Face { axis: [Face; 2] },
    Edge { axis: [Edge; 2] },
    Vertex { axis: [Vertex; 2] },
}

impl RotationClass {
    pub fn kind(&self) -> RotationKind {
        match self {
            RotationClass::Identity => RotationKind::Identity,
            RotationClass::Face { .. } => RotationKind::Face,
            RotationClass::Edge { .. } => RotationKind::Edge,
            RotationClass::Vertex { .. } => RotationKind::Vertex,
        }
    }

    /// Axis parts as vertex lists, empty for the identity.
    pub fn axis_parts(&self) -> Vec<Vec<Vertex>> {
        match self {
            RotationClass::Identity => Vec::new(),
            RotationClass::Face { axis } => axis.iter().map(|f| f.0.to_vec()).collect(),
            RotationClass::Edge { axis } => axis.iter().map(|e| e.0.to_vec()).collect(),
            RotationClass::Vertex { axis } => axis.iter().map(|&v| vec![v]).collect(),
        }
    }
}

/// The roles in a pair of face rotations turning about one shared vertex.
///
/// `x` is the shared vertex; the first rotation turns `x → y → z` and the
/// second `x → u → v`; `a` is the fifth neighbour of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SharedVertexConfig {
    pub x: Vertex,
    pub y: Vertex,
    pub z: Vertex,
    pub u: Vertex,
    pub v: Vertex,
    pub a: Vertex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SharedVertexCase {
    /// Pentagon order `y,z,u,v,a`: the product turns about edge `[u,z]`.
    AdjacentFaces { axis_edge: Edge },
    /// Pentagon order `y,z,a,u,v`: the product turns about edge `[x,a]`.
    SeparatedFaces { axis_edge: Edge },
    /// The two rotations move the pentagon in opposite senses.
    NotEdgeRotation,
}

impl SharedVertexCase {
    pub fn name(&self) -> &'static str {
        match self {
            SharedVertexCase::AdjacentFaces { .. } => "case1",
            SharedVertexCase::SeparatedFaces { .. } => "case2",
            SharedVertexCase::NotEdgeRotation => "not_edge_rotation",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SharedVertexReport {
    pub config: SharedVertexConfig,
    pub case: SharedVertexCase,
    pub product: Permutation,
    pub product_class: RotationClass,
}

/// Outcome of the shared-vertex scan over all face-rotation pairs.
#[derive(Debug, Clone, Default)]
pub struct SharedVertexCensus {
    pub pairs: usize,
    pub adjacent: usize,
    pub separated: usize,
    pub not_edge: usize,
    pub mismatches: Vec<String>,
    /// How many ordered pairs produce each edge rotation.
    pub witnesses: HashMap<Permutation, usize>,
}

/// Vertices, edges and faces of the icosahedron together with its rotation
/// group.
#[derive(Debug, Clone)]
pub struct IcosaGraph {
    group: Group,
    faces: Vec<Face>,
    edges: Vec<Edge>,
    face_set: HashSet<Face>,
    edge_set: HashSet<Edge>,
    neighbors: Vec<Vec<Vertex>>,
    antipode: Vec<Vertex>,
}

impl IcosaGraph {
    /// Builds the graph from `D`, `Y`, `T` and the default seed face.
    pub fn from_generators(generators: GeneratorSet) -> Result<Self, ModelError> {
        Self::build(generators, SEED_FACE)
    }

    pub fn build(generators: GeneratorSet, seed_face: [&str; 3]) -> Result<Self, ModelError> {
        let group = Group::generate(generators)?;
        let domain = Arc::clone(group.domain());
        let mut seed = [0; 3];
        for (slot, name) in seed.iter_mut().zip(seed_face) {
            *slot = domain
                .position(name)
                .ok_or_else(|| ModelError::NotAVertex(name.to_string()))?;
        }
        if seed[0] == seed[1] || seed[1] == seed[2] || seed[0] == seed[2] {
            return Err(ModelError::Structure {
                what: "distinct seed vertices",
                found: seed.iter().collect::<BTreeSet<_>>().len(),
                expected: 3,
            });
        }

        let faces: BTreeSet<Face> = group
            .elements()
            .iter()
            .map(|g| Face::new(seed.map(|v| g.apply(v))))
            .collect();
        let edges: BTreeSet<Edge> = faces.iter().flat_map(Face::edges).collect();
        let covered: BTreeSet<Vertex> = faces.iter().flat_map(|f| f.0).collect();
        expect_count("faces", faces.len(), 20)?;
        expect_count("edges", edges.len(), 30)?;
        expect_count("vertices", covered.len(), 12)?;
        expect_count("domain points", domain.len(), 12)?;

        let mut neighbors = vec![Vec::new(); domain.len()];
        for e in &edges {
            neighbors[e.0[0]].push(e.0[1]);
            neighbors[e.0[1]].push(e.0[0]);
        }
        for ns in &neighbors {
            expect_count("neighbours of a vertex", ns.len(), 5)?;
        }
        for e in &edges {
            let incident = faces.iter().filter(|f| f.edges().contains(e)).count();
            expect_count("faces on an edge", incident, 2)?;
        }

        let antipode = antipode_from_fixed_points(&group)?;

        let graph = IcosaGraph {
            face_set: faces.iter().copied().collect(),
            edge_set: edges.iter().copied().collect(),
            faces: faces.into_iter().collect(),
            edges: edges.into_iter().collect(),
            neighbors,
            antipode,
            group,
        };
        let flip = graph.antipode_permutation();
        if !graph.is_automorphism(&flip) {
            return Err(ModelError::Inconsistent(
                "the antipodal map does not preserve edges".into(),
            ));
        }
        if graph.faces.iter().any(|f| {
            !graph
                .face_set
                .contains(&Face::new(f.0.map(|v| graph.antipode[v])))
        }) {
            return Err(ModelError::Inconsistent(
                "the antipodal map does not preserve faces".into(),
            ));
        }
        Ok(graph)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn domain(&self) -> &Arc<Domain> {
        self.group.domain()
    }

    pub fn label(&self, v: Vertex) -> &Label {
        self.domain().label(v)
    }

    pub fn vertex(&self, name: &str) -> Result<Vertex, ModelError> {
        self.domain()
            .position(name)
            .ok_or_else(|| ModelError::NotAVertex(name.to_string()))
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edge_set.contains(&Edge::new(a, b))
    }

    pub fn has_face(&self, face: &Face) -> bool {
        self.face_set.contains(face)
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    pub fn antipode(&self, v: Vertex) -> Vertex {
        self.antipode[v]
    }

    /// Antipodal pairs, each sorted, ordered by first vertex.
    pub fn antipodal_pairs(&self) -> Vec<[Vertex; 2]> {
        (0..self.antipode.len())
            .filter(|&v| v < self.antipode[v])
            .map(|v| [v, self.antipode[v]])
            .collect()
    }

    /// The central inversion as a permutation of the vertices. It preserves
    /// the graph but is not a rotation.
    pub fn antipode_permutation(&self) -> Permutation {
        Permutation::from_images(self.domain(), self.antipode.clone())
            .expect("antipode is an involution")
    }

    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.domain() == self.domain()
            && self
                .edges
                .iter()
                .all(|e| self.has_edge(p.apply(e.0[0]), p.apply(e.0[1])))
    }

    pub fn classify(&self, p: &Permutation) -> Result<RotationClass, ModelError> {
        if !self.group.contains(p) {
            return Err(ModelError::NotARotation(p.to_string()));
        }
        match p.order() {
            1 => Ok(RotationClass::Identity),
            3 => {
                let faces: Vec<Face> = p
                    .cycles(false)
                    .iter()
                    .filter(|c| c.len() == 3)
                    .map(|c| Face::new([c[0], c[1], c[2]]))
                    .filter(|f| self.has_face(f))
                    .collect();
                let [f, g] =
                    self.antipodal_parts(p, faces, |f| Face::new(f.0.map(|v| self.antipode[v])))?;
                Ok(RotationClass::Face { axis: [f, g] })
            }
            2 => {
                let edges: Vec<Edge> = p
                    .cycles(false)
                    .iter()
                    .map(|c| Edge::new(c[0], c[1]))
                    .filter(|e| self.has_edge(e.0[0], e.0[1]))
                    .collect();
                let [e, f] = self.antipodal_parts(p, edges, |e| {
                    Edge::new(self.antipode[e.0[0]], self.antipode[e.0[1]])
                })?;
                Ok(RotationClass::Edge { axis: [e, f] })
            }
            5 => {
                let fixed = p.fixed_points();
                let [v, w] = self.antipodal_parts(p, fixed, |&v| self.antipode[v])?;
                Ok(RotationClass::Vertex { axis: [v, w] })
            }
            order => Err(ModelError::UnexpectedOrder {
                perm: p.to_string(),
                order,
            }),
        }
    }

    fn antipodal_parts<T: Copy + Ord + PartialEq>(
        &self,
        p: &Permutation,
        mut parts: Vec<T>,
        flip: impl Fn(&T) -> T,
    ) -> Result<[T; 2], ModelError> {
        parts.sort();
        match parts[..] {
            [a, b] if flip(&a) == b => Ok([a, b]),
            _ => Err(ModelError::Inconsistent(format!(
                "{p} does not have exactly two antipodal axis parts ({} found)",
                parts.len()
            ))),
        }
    }

    /// Which turn about its axis a rotation is, counted in steps.
    ///
    /// Face rotations: the first axis face is `{a<b<c}`; one step sends `a`
    /// to `b`. Vertex rotations: one step sends the first vertex of the
    /// canonical pentagon around the first axis vertex to the second. Edge
    /// rotations are a single step; the identity is zero.
    pub fn step(&self, p: &Permutation, class: &RotationClass) -> u32 {
        match class {
            RotationClass::Identity => 0,
            RotationClass::Edge { .. } => 1,
            RotationClass::Face { axis } => {
                let [a, b, _] = axis[0].0;
                if p.apply(a) == b {
                    1
                } else {
                    2
                }
            }
            RotationClass::Vertex { axis } => {
                let ring = self.pentagon(axis[0]);
                let target = p.apply(ring[0]);
                ring.iter().position(|&w| w == target).unwrap_or(0) as u32
            }
        }
    }

    /// The five neighbours of `x` in cyclic order around it.
    ///
    /// Starts at the smallest neighbour and continues toward the smaller of
    /// its two ring neighbours. The ring order is combinatorial only; it does
    /// not say which way is clockwise.
    pub fn neighbor_pentagon(&self, x: &str) -> Result<Vec<Vertex>, ModelError> {
        Ok(self.pentagon(self.vertex(x)?))
    }

    pub fn pentagon(&self, x: Vertex) -> Vec<Vertex> {
        let ring = &self.neighbors[x];
        let start = *ring.iter().min().expect("five neighbours");
        let ring_neighbors = |w: Vertex| ring.iter().copied().filter(move |&n| self.has_edge(w, n));
        let mut out = vec![start];
        let mut prev = start;
        let mut cur = ring_neighbors(start).min().expect("pentagon is a cycle");
        while cur != start {
            out.push(cur);
            let next = ring_neighbors(cur)
                .find(|&n| n != prev)
                .expect("pentagon is a cycle");
            prev = cur;
            cur = next;
        }
        out
    }

    /// Composes two face rotations whose axis faces meet in one vertex and
    /// predicts, from the pentagon around that vertex, what the product is.
    ///
    /// The prediction is checked against [`classify`](Self::classify) of the
    /// product; a disagreement is reported as an internal inconsistency.
    pub fn shared_vertex_compose(
        &self,
        r1: &Permutation,
        r2: &Permutation,
    ) -> Result<SharedVertexReport, ModelError> {
        let axis_faces = |r: &Permutation| match self.classify(r)? {
            RotationClass::Face { axis } => Ok(axis),
            _ => Err(ModelError::NotFaceRotation(r.to_string())),
        };
        let (first, second) = (axis_faces(r1)?, axis_faces(r2)?);

        let mut best_overlap = 0;
        let mut shared = None;
        for f in &first {
            for g in &second {
                let common = f.shared(g);
                best_overlap = best_overlap.max(common.len());
                if let [x] = common[..] {
                    shared = Some(shared.map_or(x, |s: Vertex| s.min(x)));
                }
            }
        }
        let x = shared.ok_or(ModelError::SharedVertices(best_overlap))?;

        let (y, u) = (r1.apply(x), r2.apply(x));
        let (z, v) = (r1.apply(y), r2.apply(u));
        let rest: Vec<Vertex> = self.neighbors[x]
            .iter()
            .copied()
            .filter(|n| ![y, z, u, v].contains(n))
            .collect();
        let a = match rest[..] {
            [a] => a,
            _ => {
                return Err(ModelError::Inconsistent(format!(
                    "roles around {} do not fill its pentagon",
                    self.label(x)
                )))
            }
        };
        let config = SharedVertexConfig { x, y, z, u, v, a };

        let case = if self.has_edge(u, z) {
            SharedVertexCase::AdjacentFaces {
                axis_edge: Edge::new(u, z),
            }
        } else if self.has_edge(v, y) {
            SharedVertexCase::SeparatedFaces {
                axis_edge: Edge::new(x, a),
            }
        } else {
            SharedVertexCase::NotEdgeRotation
        };

        let product = r1.compose(r2)?;
        let product_class = self.classify(&product)?;
        let consistent = match (&case, &product_class) {
            (
                SharedVertexCase::AdjacentFaces { axis_edge }
                | SharedVertexCase::SeparatedFaces { axis_edge },
                RotationClass::Edge { axis },
            ) => axis.contains(axis_edge),
            (SharedVertexCase::NotEdgeRotation, _) => product.order() != 2,
            _ => false,
        };
        if !consistent {
            return Err(ModelError::Inconsistent(format!(
                "predicted {} for {r1} then {r2}, but the product {product} is {:?}",
                case.name(),
                product_class.kind()
            )));
        }

        Ok(SharedVertexReport {
            config,
            case,
            product,
            product_class,
        })
    }

    /// Runs [`shared_vertex_compose`](Self::shared_vertex_compose) over every
    /// ordered pair of face rotations whose axis faces meet in one vertex.
    pub fn shared_vertex_census(&self) -> SharedVertexCensus {
        let face_rotations: Vec<&Permutation> = self
            .group
            .elements()
            .iter()
            .filter(|p| p.order() == 3)
            .collect();
        let mut census = SharedVertexCensus::default();
        for r1 in &face_rotations {
            for r2 in &face_rotations {
                match self.shared_vertex_compose(r1, r2) {
                    Ok(report) => {
                        census.pairs += 1;
                        match report.case {
                            SharedVertexCase::AdjacentFaces { .. } => census.adjacent += 1,
                            SharedVertexCase::SeparatedFaces { .. } => census.separated += 1,
                            SharedVertexCase::NotEdgeRotation => census.not_edge += 1,
                        }
                        if report.product.order() == 2 {
                            *census.witnesses.entry(report.product).or_insert(0) += 1;
                        }
                    }
                    Err(ModelError::SharedVertices(_)) => {}
                    Err(err) => {
                        census.pairs += 1;
                        census.mismatches.push(err.to_string());
                    }
                }
            }
        }
        census
    }

    pub fn labels_of(&self, vs: &[Vertex]) -> Vec<String> {
        vs.iter().map(|&v| self.label(v).to_string()).collect()
    }
}

fn expect_count(what: &'static str, found: usize, expected: usize) -> Result<(), ModelError> {
    if found == expected {
        Ok(())
    } else {
        Err(ModelError::Structure {
            what,
            found,
            expected,
        })
    }
}

/// Pairs the two fixed points of every order-5 element.
fn antipode_from_fixed_points(group: &Group) -> Result<Vec<Vertex>, ModelError> {
    let n = group.domain().len();
    let mut antipode: Vec<Option<Vertex>> = vec![None; n];
    for p in group.elements().iter().filter(|p| p.order() == 5) {
        let fixed = p.fixed_points();
        let [a, b] = fixed[..] else {
            return Err(ModelError::Structure {
                what: "fixed vertices of an order-5 rotation",
                found: fixed.len(),
                expected: 2,
            });
        };
        for (v, w) in [(a, b), (b, a)] {
            match antipode[v] {
                None => antipode[v] = Some(w),
                Some(old) if old == w => {}
                Some(_) => {
                    return Err(ModelError::Inconsistent(
                        "order-5 fixed pairs overlap".into(),
                    ))
                }
            }
        }
    }
    let paired = antipode.iter().filter(|a| a.is_some()).count();
    expect_count("vertices on a five-fold axis", paired, n)?;
    Ok(antipode.into_iter().map(|a| a.expect("checked")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn graph() -> IcosaGraph {
        IcosaGraph::from_generators(fixtures::rotation_generators().unwrap()).unwrap()
    }

    fn v(g: &IcosaGraph, name: &str) -> Vertex {
        g.vertex(name).unwrap()
    }

    #[test]
    fn counts() {
        let g = graph();
        assert_eq!(g.faces().len(), 20);
        assert_eq!(g.edges().len(), 30);
        assert!((0..12).all(|x| g.degree(x) == 5));
    }

    #[test]
    fn opposite_seed_face_is_present() {
        let g = graph();
        let f = Face::new([v(&g, "1''"), v(&g, "3''"), v(&g, "2'")]);
        assert!(g.has_face(&f));
    }

    #[test]
    fn antipode_of_one_prime() {
        let g = graph();
        assert_eq!(g.antipode(v(&g, "1'")), v(&g, "1+"));
    }

    #[test]
    fn pentagon_around_one() {
        let g = graph();
        let ring = g.neighbor_pentagon("1").unwrap();
        assert_eq!(g.labels_of(&ring), ["2", "3", "2+", "1'", "3+"]);
        assert!(g.neighbor_pentagon("7").is_err());
    }

    #[test]
    fn transposition_is_not_automorphism() {
        let g = graph();
        let swap = Permutation::parse("(1,2)", g.domain()).unwrap();
        assert!(!g.is_automorphism(&swap));
    }

    #[test]
    fn classify_rejects_outsiders() {
        let g = graph();
        let swap = Permutation::parse("(1,2)", g.domain()).unwrap();
        assert!(matches!(
            g.classify(&swap),
            Err(ModelError::NotARotation(_))
        ));
        let flip = g.antipode_permutation();
        assert!(matches!(
            g.classify(&flip),
            Err(ModelError::NotARotation(_))
        ));
    }

    #[test]
    fn same_axis_pair_is_rejected() {
        let g = graph();
        let d = fixtures::table1_row("D", g.domain()).unwrap();
        let err = g.shared_vertex_compose(&d, &d.inverse()).unwrap_err();
        assert_eq!(err, ModelError::SharedVertices(3));
    }

    #[test]
    fn shared_vertex_rejects_non_face_rotations() {
        let g = graph();
        let d = fixtures::table1_row("D", g.domain()).unwrap();
        let dy = fixtures::table1_row("Y", g.domain()).unwrap();
        let edge = &d * &dy;
        assert!(matches!(
            g.shared_vertex_compose(&edge, &d),
            Err(ModelError::NotFaceRotation(_))
        ));
    }

    #[test]
    fn structural_error_for_bad_seed() {
        let gens = fixtures::rotation_generators().unwrap();
        // An edge plus its antipode is not a face; its orbit is too big.
        let err = IcosaGraph::build(gens, ["1", "2", "1''"]).unwrap_err();
        assert!(matches!(err, ModelError::Structure { .. }), "{err:?}");
    }
}
