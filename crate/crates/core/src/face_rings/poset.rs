//! Simplicial posets over a fixed vertex set, with ghost vertices allowed.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex or element name in input documents; numbers and strings both work.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Int(i64),
    Str(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(n) => write!(f, "{n}"),
            Label::Str(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementSpec {
    pub id: Label,
    pub rank: usize,
    #[serde(default)]
    pub covers: Vec<Label>,
    #[serde(default)]
    pub vertices: Option<Vec<Label>>,
}

/// Input document: either the facets of a simplicial complex or the Hasse
/// diagram of a simplicial poset. Rank-1 elements covering nothing cover the
/// initial element, which is added if absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetSpec {
    pub vertices: Vec<Label>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<Label>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<ElementSpec>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PosetReport {
    pub valid: bool,
    pub diagnostics: Vec<String>,
    pub elements: usize,
    /// Number of elements of each rank.
    pub f_vector: Vec<usize>,
    pub ghost_vertices: Vec<String>,
    pub is_complex: bool,
    /// Pairs of elements with more than one minimal upper bound.
    pub multiple_joins: Vec<(String, String, Vec<String>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetElement {
    pub id: String,
    pub rank: usize,
    pub covers: Vec<usize>,
    /// Folding image, as sorted vertex indices.
    pub vertices: Vec<usize>,
}

/// A finite simplicial poset: every interval `[0̂, σ]` is Boolean, and the
/// folding map identifies the atoms below `σ` with distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialPoset {
    vertex_labels: Vec<String>,
    elements: Vec<PosetElement>,
    bottom: usize,
    down: Vec<BTreeSet<usize>>,
}

fn subsets_of(v: &[usize]) -> Vec<Vec<usize>> {
    (0..1usize << v.len())
        .map(|m| (0..v.len()).filter(|i| m & (1 << i) != 0).map(|i| v[i]).collect())
        .collect()
}

impl PosetSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn build(&self) -> Result<SimplicialPoset> {
        let raw = self.raw()?;
        let diagnostics = raw.check();
        if diagnostics.is_empty() {
            Ok(raw.finalize_vertices())
        } else {
            Err(Error::InvalidPoset(diagnostics))
        }
    }

    pub fn validate(&self) -> Result<PosetReport> {
        let raw = self.raw()?;
        let diagnostics = raw.check();
        let valid = diagnostics.is_empty();
        let raw = if valid { raw.finalize_vertices() } else { raw };
        let mut f_vector = Vec::new();
        for e in &raw.elements {
            if f_vector.len() <= e.rank {
                f_vector.resize(e.rank + 1, 0);
            }
            f_vector[e.rank] += 1;
        }
        let mut report = PosetReport {
            valid,
            diagnostics,
            elements: raw.elements.len(),
            f_vector,
            ghost_vertices: raw.ghosts().into_iter().map(|v| raw.vertex_labels[v].clone()).collect(),
            is_complex: false,
            multiple_joins: Vec::new(),
        };
        if valid {
            report.is_complex = raw.is_complex();
            for a in 0..raw.len() {
                for b in a + 1..raw.len() {
                    let j = raw.join(a, b);
                    if j.len() > 1 {
                        report
                            .multiple_joins
                            .push((raw.id(a).into(), raw.id(b).into(), j.iter().map(|&r| raw.id(r).to_string()).collect()));
                    }
                }
            }
        }
        Ok(report)
    }

    /// Parses names and links without checking the simplicial axioms.
    fn raw(&self) -> Result<SimplicialPoset> {
        let vertex_labels: Vec<String> = self.vertices.iter().map(Label::to_string).collect();
        let mut vindex = HashMap::new();
        for (i, v) in vertex_labels.iter().enumerate() {
            if vindex.insert(v.clone(), i).is_some() {
                return Err(Error::Invalid(format!("vertex {v} listed twice")));
            }
        }
        let vertex = |l: &Label| {
            vindex
                .get(&l.to_string())
                .copied()
                .ok_or_else(|| Error::Invalid(format!("unknown vertex {l}")))
        };
        match (&self.facets, &self.elements) {
            (Some(facets), None) => {
                let mut faces = BTreeSet::new();
                for f in facets {
                    let mut vs: Vec<usize> = f.iter().map(vertex).collect::<Result<_>>()?;
                    vs.sort_unstable();
                    if vs.windows(2).any(|w| w[0] == w[1]) {
                        return Err(Error::Invalid(format!("facet {f:?} repeats a vertex")));
                    }
                    faces.extend(subsets_of(&vs));
                }
                faces.insert(Vec::new());
                Ok(SimplicialPoset::from_faces(vertex_labels, faces.into_iter().collect()))
            }
            (None, Some(elements)) => {
                let mut specs = elements.clone();
                if !specs.iter().any(|e| e.rank == 0) {
                    specs.insert(
                        0,
                        ElementSpec {
                            id: Label::Str("0̂".into()),
                            rank: 0,
                            covers: Vec::new(),
                            vertices: Some(Vec::new()),
                        },
                    );
                }
                let mut ids = HashMap::new();
                for (i, e) in specs.iter().enumerate() {
                    if ids.insert(e.id.to_string(), i).is_some() {
                        return Err(Error::Invalid(format!("element {} listed twice", e.id)));
                    }
                }
                let bottoms: Vec<usize> = (0..specs.len()).filter(|&i| specs[i].rank == 0).collect();
                let mut elements = Vec::new();
                for e in &specs {
                    let mut covers: Vec<usize> = e
                        .covers
                        .iter()
                        .map(|c| ids.get(&c.to_string()).copied().ok_or_else(|| Error::Invalid(format!("unknown element {c}"))))
                        .collect::<Result<_>>()?;
                    if e.rank == 1 && covers.is_empty() && bottoms.len() == 1 {
                        covers.push(bottoms[0]);
                    }
                    covers.sort_unstable();
                    covers.dedup();
                    let vertices = match &e.vertices {
                        Some(vs) => {
                            let mut v: Vec<usize> = vs.iter().map(vertex).collect::<Result<_>>()?;
                            v.sort_unstable();
                            v
                        }
                        None => Vec::new(),
                    };
                    elements.push((e.id.to_string(), e.rank, covers, vertices));
                }
                Ok(SimplicialPoset::from_hasse(vertex_labels, elements))
            }
            _ => Err(Error::Parse("give exactly one of `facets` or `elements`".into())),
        }
    }
}

impl SimplicialPoset {
    /// The face poset of a simplicial complex given by all its faces.
    fn from_faces(vertex_labels: Vec<String>, mut faces: Vec<Vec<usize>>) -> Self {
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        let index: HashMap<Vec<usize>, usize> = faces.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
        let elements = faces
            .iter()
            .map(|f| {
                let covers = (0..f.len())
                    .map(|i| {
                        let mut g = f.clone();
                        g.remove(i);
                        index[&g]
                    })
                    .collect();
                let id = if f.is_empty() {
                    "0̂".to_string()
                } else {
                    f.iter().map(|&v| vertex_labels[v].as_str()).collect::<Vec<_>>().join(",")
                };
                PosetElement {
                    id,
                    rank: f.len(),
                    covers,
                    vertices: f.clone(),
                }
            })
            .collect();
        Self::assemble(vertex_labels, elements)
    }

    fn from_hasse(vertex_labels: Vec<String>, specs: Vec<(String, usize, Vec<usize>, Vec<usize>)>) -> Self {
        // folding images of higher elements are recomputed from their atoms
        // once `check` has compared them with any explicit ones
        let elements = specs
            .into_iter()
            .map(|(id, rank, covers, vertices)| PosetElement { id, rank, covers, vertices })
            .collect();
        Self::assemble(vertex_labels, elements)
    }

    fn assemble(vertex_labels: Vec<String>, elements: Vec<PosetElement>) -> Self {
        let n = elements.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| elements[i].rank);
        let mut down: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for &i in &order {
            let mut d = BTreeSet::from([i]);
            for &c in &elements[i].covers {
                if elements[c].rank < elements[i].rank {
                    d.extend(down[c].iter().copied());
                }
            }
            down[i] = d;
        }
        let bottom = (0..n).find(|&i| elements[i].rank == 0).unwrap_or(0);
        SimplicialPoset {
            vertex_labels,
            elements,
            bottom,
            down,
        }
    }

    /// All violated axioms, one message each.
    fn check(&self) -> Vec<String> {
        let mut diags = Vec::new();
        let bottoms: Vec<usize> = (0..self.len()).filter(|&i| self.elements[i].rank == 0).collect();
        if bottoms.len() != 1 {
            diags.push(format!("expected one element of rank 0, found {}", bottoms.len()));
            return diags;
        }
        for (i, e) in self.elements.iter().enumerate() {
            for &c in &e.covers {
                if self.elements[c].rank + 1 != e.rank {
                    diags.push(format!("{} (rank {}) covers {} (rank {})", e.id, e.rank, self.elements[c].id, self.elements[c].rank));
                }
            }
            if e.rank > 0 && e.covers.is_empty() {
                diags.push(format!("{} covers nothing", e.id));
            }
            if !self.down[i].contains(&self.bottom) {
                diags.push(format!("{} is not above the initial element", e.id));
            }
        }
        if !diags.is_empty() {
            return diags;
        }
        let mut atom_of_vertex: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, e) in self.elements.iter().enumerate().filter(|(_, e)| e.rank == 1) {
            if e.vertices.len() != 1 {
                diags.push(format!("atom {} must name exactly one vertex", e.id));
            } else if let Some(j) = atom_of_vertex.insert(e.vertices[0], i) {
                diags.push(format!("atoms {} and {} share vertex {}", self.elements[j].id, e.id, self.vertex_labels[e.vertices[0]]));
            }
        }
        if !diags.is_empty() {
            return diags;
        }
        for (i, e) in self.elements.iter().enumerate() {
            let atoms: Vec<usize> = self.down[i].iter().copied().filter(|&a| self.elements[a].rank == 1).collect();
            let folded: BTreeSet<usize> = atoms.iter().map(|&a| self.elements[a].vertices[0]).collect();
            if folded.len() != e.rank {
                diags.push(format!("{} has rank {} but {} vertices below it", e.id, e.rank, folded.len()));
                continue;
            }
            if e.rank > 1 && !e.vertices.is_empty() && e.vertices.iter().copied().collect::<BTreeSet<_>>() != folded {
                diags.push(format!("{} lists vertices inconsistent with its atoms", e.id));
            }
            if self.down[i].len() != 1 << e.rank {
                diags.push(format!("interval below {} has {} elements, not {}", e.id, self.down[i].len(), 1usize << e.rank));
                continue;
            }
            // τ ↦ atoms(τ) must be an order isomorphism onto the subsets
            let mut seen = BTreeSet::new();
            for &t in &self.down[i] {
                let at: BTreeSet<usize> = self.down[t].iter().copied().filter(|&a| self.elements[a].rank == 1).collect();
                if at.len() != self.elements[t].rank || !seen.insert(at) {
                    diags.push(format!("interval below {} is not Boolean", e.id));
                    break;
                }
            }
        }
        diags
    }

    fn finalize_vertices(mut self) -> Self {
        for i in 0..self.len() {
            if self.elements[i].rank != 1 {
                let mut vs: Vec<usize> = self.down[i]
                    .iter()
                    .filter(|&&a| self.elements[a].rank == 1)
                    .map(|&a| self.elements[a].vertices[0])
                    .collect();
                vs.sort_unstable();
                self.elements[i].vertices = vs;
            }
        }
        self
    }

    /// The simplicial complex with the given facets, over vertices `0..n`.
    pub fn from_facets(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        PosetSpec {
            vertices: (1..=n as i64).map(Label::Int).collect(),
            facets: Some(facets.iter().map(|f| f.iter().map(|&v| Label::Int(v as i64 + 1)).collect()).collect()),
            elements: None,
        }
        .build()
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Self {
        Self::from_facets(n, &[(0..n).collect()]).expect("a simplex is a simplicial complex")
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertex_labels[v]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &PosetElement {
        &self.elements[i]
    }

    pub fn id(&self, i: usize) -> &str {
        &self.elements[i].id
    }

    pub fn find(&self, id: &str) -> Option<usize> {
        self.elements.iter().position(|e| e.id == id)
    }

    pub fn rank(&self, i: usize) -> usize {
        self.elements[i].rank
    }

    pub fn vertices_of(&self, i: usize) -> &[usize] {
        &self.elements[i].vertices
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.down[b].contains(&a)
    }

    pub fn below(&self, i: usize) -> &BTreeSet<usize> {
        &self.down[i]
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| (0..self.len()).all(|j| j == i || !self.leq(i, j))).collect()
    }

    pub fn atoms(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.rank(i) == 1).collect()
    }

    /// Vertices not appearing in any element.
    pub fn ghosts(&self) -> Vec<usize> {
        let used: BTreeSet<usize> = self.elements.iter().flat_map(|e| e.vertices.iter().copied()).collect();
        (0..self.n_vertices()).filter(|v| !used.contains(v)).collect()
    }

    /// Whether the folding map is injective, i.e. `Σ` is a simplicial complex.
    pub fn is_complex(&self) -> bool {
        let images: BTreeSet<&Vec<usize>> = self.elements.iter().map(|e| &e.vertices).collect();
        images.len() == self.len()
    }

    /// The unique `τ ≤ σ` with the given vertex set, if any.
    pub fn face_with_vertices(&self, sigma: usize, vertices: &[usize]) -> Option<usize> {
        self.down[sigma].iter().copied().find(|&t| self.elements[t].vertices == vertices)
    }

    /// `σ ∨ τ`: the minimal common upper bounds.
    pub fn join(&self, a: usize, b: usize) -> Vec<usize> {
        let ub: Vec<usize> = (0..self.len()).filter(|&r| self.leq(a, r) && self.leq(b, r)).collect();
        ub.iter().copied().filter(|&r| ub.iter().all(|&s| s == r || !self.leq(s, r))).collect()
    }

    /// `σ ∧ τ`, when the maximal common lower bound is unique.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lb: Vec<usize> = self.down[a].intersection(&self.down[b]).copied().collect();
        let max: Vec<usize> = lb.iter().copied().filter(|&r| lb.iter().all(|&s| s == r || !self.leq(r, s))).collect();
        (max.len() == 1).then(|| max[0])
    }

    /// The down-closed subposet on `keep`, with the inclusion as a map of indices.
    pub fn subposet(&self, keep: &BTreeSet<usize>) -> Result<(SimplicialPoset, Vec<usize>)> {
        for &i in keep {
            if let Some(&missing) = self.down[i].iter().find(|j| !keep.contains(j)) {
                return Err(Error::Invalid(format!("subposet contains {} but not {}", self.id(i), self.id(missing))));
            }
        }
        if !keep.contains(&self.bottom) {
            return Err(Error::Invalid("subposet misses the initial element".into()));
        }
        let old: Vec<usize> = keep.iter().copied().collect();
        let new_index: HashMap<usize, usize> = old.iter().enumerate().map(|(n, &o)| (o, n)).collect();
        let elements = old
            .iter()
            .map(|&o| {
                let e = &self.elements[o];
                PosetElement {
                    id: e.id.clone(),
                    rank: e.rank,
                    covers: e.covers.iter().map(|c| new_index[c]).collect(),
                    vertices: e.vertices.clone(),
                }
            })
            .collect();
        Ok((Self::assemble(self.vertex_labels.clone(), elements), old))
    }

    /// The subposet generated by the named elements.
    pub fn generated_by(&self, ids: &[usize]) -> Result<(SimplicialPoset, Vec<usize>)> {
        let mut keep = BTreeSet::from([self.bottom]);
        for &i in ids {
            keep.extend(self.down[i].iter().copied());
        }
        self.subposet(&keep)
    }

    pub fn format_vertices(&self, vs: &[usize]) -> String {
        let names: Vec<&str> = vs.iter().map(|&v| self.vertex_labels[v].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// A vertex-preserving morphism `Σ → Σ'` over the same vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPreservingMap {
    images: Vec<usize>,
    target_len: usize,
}

impl VertexPreservingMap {
    pub fn new(source: &SimplicialPoset, target: &SimplicialPoset, images: Vec<usize>) -> Result<Self> {
        if source.vertex_labels != target.vertex_labels {
            return Err(Error::Invalid("posets have different vertex sets".into()));
        }
        if images.len() != source.len() || images.iter().any(|&j| j >= target.len()) {
            return Err(Error::Invalid("map does not match the posets".into()));
        }
        for i in 0..source.len() {
            let j = images[i];
            if source.vertices_of(i) != target.vertices_of(j) {
                return Err(Error::Invalid(format!("{} ↦ {} does not preserve vertices", source.id(i), target.id(j))));
            }
            for &c in &source.element(i).covers {
                if !target.leq(images[c], j) {
                    return Err(Error::Invalid(format!("{} ↦ {} is not order preserving", source.id(i), target.id(j))));
                }
            }
        }
        Ok(VertexPreservingMap {
            images,
            target_len: target.len(),
        })
    }

    /// The inclusion of a subposet produced by `subposet`.
    pub fn inclusion(sub: &SimplicialPoset, ambient: &SimplicialPoset, map: &[usize]) -> Result<Self> {
        Self::new(sub, ambient, map.to_vec())
    }

    /// The folding map to the full simplex on the vertex set.
    pub fn folding(source: &SimplicialPoset) -> (SimplicialPoset, Self) {
        let spec = PosetSpec {
            vertices: source.vertex_labels.iter().map(|l| Label::Str(l.clone())).collect(),
            facets: Some(vec![source.vertex_labels.iter().map(|l| Label::Str(l.clone())).collect()]),
            elements: None,
        };
        let target = spec.build().expect("a simplex is valid");
        let images = (0..source.len())
            .map(|i| {
                (0..target.len())
                    .find(|&j| target.vertices_of(j) == source.vertices_of(i))
                    .expect("every vertex set is a face of the simplex")
            })
            .collect();
        let map = VertexPreservingMap::new(source, &target, images).expect("folding preserves vertices");
        (target, map)
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &VertexPreservingMap) -> VertexPreservingMap {
        VertexPreservingMap {
            images: first.images.iter().map(|&i| self.images[i]).collect(),
            target_len: self.target_len,
        }
    }
}
