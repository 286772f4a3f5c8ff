//! Quivers, paths, linear combinations of paths, and finite presentations of
//! admissible subcoalgebras of path coalgebras.
//!
//! A path `a_t ... a_1` is stored in written order: `arrows[0]` is the last
//! arrow traversed and ends at the path's target, `arrows.last()` is the first
//! arrow traversed and starts at the path's source. The coproduct of a path
//! sums over all ways of cutting it into a left factor (ending at the target)
//! and a right factor (starting at the source).

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Matrix, Rational};

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, VertexId>,
    arrow_index: HashMap<String, ArrowId>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(name, from, to)` arrow triples.
    pub fn new<S: Into<String>>(
        vertices: impl IntoIterator<Item = S>,
        arrows: impl IntoIterator<Item = (S, S, S)>,
    ) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {v:?}")));
            }
        }
        let mut out = Vec::new();
        let mut arrow_index = HashMap::new();
        for (name, from, to) in arrows {
            let (name, from, to): (String, String, String) = (name.into(), from.into(), to.into());
            let lookup = |v: &String| {
                vertex_index.get(v).copied().ok_or_else(|| {
                    Error::InvalidQuiver(format!("arrow {name:?} uses unknown vertex {v:?}"))
                })
            };
            let arrow = Arrow {
                source: lookup(&from)?,
                target: lookup(&to)?,
                name: name.clone(),
            };
            if arrow_index.insert(name.clone(), out.len()).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate arrow {name:?}")));
            }
            out.push(arrow);
        }
        Ok(Quiver {
            vertices,
            arrows: out,
            vertex_index,
            arrow_index,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn arrow_id(&self, name: &str) -> Option<ArrowId> {
        self.arrow_index.get(name).copied()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    pub fn out_arrows(&self, v: VertexId) -> impl Iterator<Item = ArrowId> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn in_arrows(&self, v: VertexId) -> impl Iterator<Item = ArrowId> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    pub fn trivial_path(&self, v: VertexId) -> Path {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow_path(&self, a: ArrowId) -> Path {
        Path {
            source: self.arrows[a].source,
            target: self.arrows[a].target,
            arrows: vec![a],
        }
    }

    /// Path from arrow names in written order (`["b0", "a0"]` is `b0 a0`,
    /// traversing `a0` first).
    pub fn path(&self, written: &[&str]) -> Result<Path> {
        let ids = written
            .iter()
            .map(|n| {
                self.arrow_id(n)
                    .ok_or_else(|| Error::InvalidQuiver(format!("unknown arrow {n:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.path_from_ids(ids)
    }

    pub fn path_from_ids(&self, written: Vec<ArrowId>) -> Result<Path> {
        let (Some(&last), Some(&first)) = (written.first(), written.last()) else {
            return Err(Error::Composition(
                "a nontrivial path needs at least one arrow".into(),
            ));
        };
        for w in written.windows(2) {
            if self.arrows[w[1]].target != self.arrows[w[0]].source {
                return Err(Error::Composition(format!(
                    "{} does not continue {}",
                    self.arrows[w[0]].name, self.arrows[w[1]].name
                )));
            }
        }
        Ok(Path {
            source: self.arrows[first].source,
            target: self.arrows[last].target,
            arrows: written,
        })
    }

    /// All paths of the given length, in a fixed order.
    pub fn paths_of_length(&self, len: usize) -> Vec<Path> {
        if len == 0 {
            return (0..self.vertices.len())
                .map(|v| self.trivial_path(v))
                .collect();
        }
        // Grow by prepending arrows at the target end.
        let mut current: Vec<Path> = (0..self.arrows.len()).map(|a| self.arrow_path(a)).collect();
        for _ in 1..len {
            let mut next = Vec::new();
            for p in &current {
                for a in self.out_arrows(p.target) {
                    let mut arrows = Vec::with_capacity(p.arrows.len() + 1);
                    arrows.push(a);
                    arrows.extend_from_slice(&p.arrows);
                    next.push(Path {
                        source: p.source,
                        target: self.arrows[a].target,
                        arrows,
                    });
                }
            }
            current = next;
        }
        current.sort();
        current
    }

    pub fn paths_between(&self, source: VertexId, target: VertexId, len: usize) -> Vec<Path> {
        self.paths_of_length(len)
            .into_iter()
            .filter(|p| p.source == source && p.target == target)
            .collect()
    }

    pub fn to_json_value(&self) -> QuiverJson {
        QuiverJson {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    name: a.name.clone(),
                    from: self.vertices[a.source].clone(),
                    to: self.vertices[a.target].clone(),
                })
                .collect(),
        }
    }
}

/// A path of a quiver; trivial paths have no arrows and `source == target`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    /// True for trivial paths.
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Arrow ids in written order.
    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    /// Vertices visited, from source to target.
    pub fn vertices(&self, q: &Quiver) -> Vec<VertexId> {
        let mut out = vec![self.source];
        for &a in self.arrows.iter().rev() {
            out.push(q.arrow(a).target);
        }
        out
    }

    /// Left factor of length `len`: the subpath made of the last `len`
    /// arrows traversed.
    pub fn left_factor(&self, len: usize, q: &Quiver) -> Path {
        assert!(len <= self.len());
        if len == 0 {
            return q.trivial_path(self.target);
        }
        let arrows = self.arrows[..len].to_vec();
        Path {
            source: q.arrow(arrows[len - 1]).source,
            target: self.target,
            arrows,
        }
    }

    /// Right factor of length `len`: the first `len` arrows traversed.
    pub fn right_factor(&self, len: usize, q: &Quiver) -> Path {
        assert!(len <= self.len());
        if len == 0 {
            return q.trivial_path(self.source);
        }
        let arrows = self.arrows[self.len() - len..].to_vec();
        Path {
            source: self.source,
            target: q.arrow(arrows[0]).target,
            arrows,
        }
    }

    /// All subpaths (contiguous runs of arrows), trivial ones excluded.
    pub fn subpaths(&self, q: &Quiver) -> Vec<Path> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..=n {
                out.push(
                    q.path_from_ids(self.arrows[i..j].to_vec())
                        .expect("subpath of a path composes"),
                );
            }
        }
        out
    }

    /// Renders left-to-right in written order with an explicit
    /// `[source→target]` annotation, e.g. `b0 a0 [0→0]`.
    pub fn render(&self, q: &Quiver) -> String {
        let body = if self.is_trivial() {
            format!("e_{}", q.vertex_name(self.source))
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrow(a).name.as_str())
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!(
            "{body} [{}→{}]",
            q.vertex_name(self.source),
            q.vertex_name(self.target)
        )
    }
}

/// Concatenation `p q` (first `q`, then `p`); requires `t(q) = s(p)`.
pub fn compose_paths(q: &Quiver, p: &Path, r: &Path) -> Result<Path> {
    if r.target != p.source {
        return Err(Error::Composition(format!(
            "{} ends at {} but {} starts at {}",
            r.render(q),
            q.vertex_name(r.target),
            p.render(q),
            q.vertex_name(p.source)
        )));
    }
    let mut arrows = p.arrows.clone();
    arrows.extend_from_slice(&r.arrows);
    Ok(Path {
        source: r.source,
        target: p.target,
        arrows,
    })
}

/// All terms `p2 ⊗ p1` of the coproduct of `p`, ordered by the length of the
/// left factor. The boundary terms `t(p) ⊗ p` and `p ⊗ s(p)` come first and
/// last; a trivial path yields the single term `g ⊗ g`.
pub fn coproduct_terms(q: &Quiver, p: &Path) -> Vec<(Path, Path)> {
    let n = p.len();
    (0..=n)
        .map(|j| (p.left_factor(j, q), p.right_factor(n - j, q)))
        .collect()
}

/// A finite linear combination of distinct paths with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathVector {
    terms: BTreeMap<Path, Rational>,
}

impl PathVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(p: Path) -> Self {
        let mut v = Self::new();
        v.add_term(p, Rational::one());
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Path, Rational)>) -> Self {
        let mut v = Self::new();
        for (p, c) in terms {
            v.add_term(p, c);
        }
        v
    }

    pub fn add_term(&mut self, p: Path, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, p: &Path) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Path> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Components grouped by `(source, target, length)`.
    pub fn homogeneous_components(&self) -> BTreeMap<(VertexId, VertexId, usize), PathVector> {
        let mut out: BTreeMap<_, PathVector> = BTreeMap::new();
        for (p, c) in &self.terms {
            out.entry((p.source, p.target, p.len()))
                .or_default()
                .add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&Path) -> bool) -> PathVector {
        PathVector {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| keep(p))
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Path::len).max().unwrap_or(0)
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            if !c.is_one() {
                let _ = write!(s, "({})·", format_rational(c));
            }
            s.push_str(&p.render(q));
        }
        s
    }
}

/// Coproduct of a linear combination of paths, as a map on tensor terms.
pub fn coproduct(q: &Quiver, v: &PathVector) -> BTreeMap<(Path, Path), Rational> {
    let mut out: BTreeMap<(Path, Path), Rational> = BTreeMap::new();
    for (p, c) in v.terms() {
        for term in coproduct_terms(q, p) {
            *out.entry(term).or_insert_with(Rational::zero) += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Row-reduced basis of a span of path vectors.
#[derive(Debug, Clone)]
pub struct SpanSpace {
    index: BTreeMap<Path, usize>,
    paths: Vec<Path>,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl SpanSpace {
    pub fn new<'a>(vectors: impl IntoIterator<Item = &'a PathVector>) -> Self {
        let vectors: Vec<&PathVector> = vectors.into_iter().collect();
        let paths: Vec<Path> = vectors
            .iter()
            .flat_map(|v| v.support().cloned())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: BTreeMap<Path, usize> = paths
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let m = Matrix::from_rows(
            vectors
                .iter()
                .map(|v| {
                    let mut row = vec![Rational::zero(); paths.len()];
                    for (p, c) in v.terms() {
                        row[index[p]] = c.clone();
                    }
                    row
                })
                .collect(),
            paths.len(),
        );
        let (r, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        SpanSpace {
            index,
            paths,
            rows,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &PathVector) -> bool {
        let mut x = vec![Rational::zero(); self.paths.len()];
        for (p, c) in v.terms() {
            match self.index.get(p) {
                Some(&i) => x[i] = c.clone(),
                None => return false,
            }
        }
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if x[pc].is_zero() {
                continue;
            }
            let f = x[pc].clone();
            for (xi, ri) in x.iter_mut().zip(row) {
                if !ri.is_zero() {
                    *xi -= &f * ri;
                }
            }
        }
        x.iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in the reduced basis returned by [`SpanSpace::basis`].
    pub fn coordinates(&self, v: &PathVector) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(
            self.pivots
                .iter()
                .map(|&pc| v.coefficient(&self.paths[pc]))
                .collect(),
        )
    }

    pub fn contains_path(&self, p: &Path) -> bool {
        self.contains(&PathVector::single(p.clone()))
    }

    /// The reduced basis, as path vectors.
    pub fn basis(&self) -> Vec<PathVector> {
        self.rows
            .iter()
            .map(|row| {
                PathVector::from_terms(
                    row.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (self.paths[i].clone(), c.clone())),
                )
            })
            .collect()
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }
}

/// A finite spanning set for a subcoalgebra of a path coalgebra.
///
/// When `admissible` is set (the normal case) every vertex and arrow of the
/// quiver belongs to the span implicitly and `elements` lists only the
/// additional spanning vectors. `boundary` marks vertices where a truncation
/// window was cut; injectives at those vertices are not the injectives of the
/// untruncated coalgebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalgebraPresentation {
    quiver: Arc<Quiver>,
    elements: Vec<PathVector>,
    admissible: bool,
    boundary: BTreeSet<VertexId>,
}

impl CoalgebraPresentation {
    pub fn new(quiver: Arc<Quiver>, elements: Vec<PathVector>) -> Self {
        CoalgebraPresentation {
            quiver,
            elements: elements.into_iter().filter(|e| !e.is_zero()).collect(),
            admissible: true,
            boundary: BTreeSet::new(),
        }
    }

    /// A span given exactly by `elements`, with no implicit vertices or arrows.
    pub fn explicit_span(quiver: Arc<Quiver>, elements: Vec<PathVector>) -> Self {
        CoalgebraPresentation {
            admissible: false,
            ..Self::new(quiver, elements)
        }
    }

    /// The full path coalgebra truncated to paths of length at most `max_len`.
    pub fn path_coalgebra_truncation(quiver: Arc<Quiver>, max_len: usize) -> Self {
        let elements = (2..=max_len)
            .flat_map(|l| quiver.paths_of_length(l))
            .map(PathVector::single)
            .collect();
        Self::new(quiver, elements)
    }

    pub fn with_boundary(mut self, boundary: impl IntoIterator<Item = VertexId>) -> Self {
        self.boundary = boundary.into_iter().collect();
        self
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn elements(&self) -> &[PathVector] {
        &self.elements
    }

    pub fn is_admissible(&self) -> bool {
        self.admissible
    }

    pub fn boundary(&self) -> &BTreeSet<VertexId> {
        &self.boundary
    }

    /// Implicit vertices and arrows (when admissible) followed by the elements.
    pub fn spanning_vectors(&self) -> Vec<PathVector> {
        let q = &self.quiver;
        let mut out = Vec::new();
        if self.admissible {
            out.extend((0..q.vertex_count()).map(|v| PathVector::single(q.trivial_path(v))));
            out.extend((0..q.arrow_count()).map(|a| PathVector::single(q.arrow_path(a))));
        }
        out.extend(self.elements.iter().cloned());
        out
    }

    pub fn span(&self) -> SpanSpace {
        SpanSpace::new(&self.spanning_vectors())
    }

    pub fn dimension(&self) -> usize {
        self.span().dim()
    }

    /// Longest path occurring in any spanning vector.
    pub fn max_path_length(&self) -> usize {
        self.spanning_vectors()
            .iter()
            .map(PathVector::max_len)
            .max()
            .unwrap_or(0)
    }

    /// `p ⊢ B`: the path lies in the support of some spanning element.
    pub fn appears(&self, p: &Path) -> bool {
        if self.admissible && p.len() <= 1 {
            return true;
        }
        self.elements.iter().any(|e| !e.coefficient(p).is_zero())
    }

    /// Whether every left and right tensor component of every coproduct lies
    /// in the span, i.e. whether the span is a subcoalgebra.
    pub fn check_subcoalgebra(&self) -> bool {
        self.subcoalgebra_violation().is_none()
    }

    /// A coproduct component falling outside the span, if any.
    pub fn subcoalgebra_violation(&self) -> Option<PathVector> {
        let span = self.span();
        for b in self.spanning_vectors() {
            let delta = coproduct(&self.quiver, &b);
            let mut left: BTreeMap<&Path, PathVector> = BTreeMap::new();
            let mut right: BTreeMap<&Path, PathVector> = BTreeMap::new();
            for ((p2, p1), c) in &delta {
                left.entry(p1).or_default().add_term(p2.clone(), c.clone());
                right.entry(p2).or_default().add_term(p1.clone(), c.clone());
            }
            let bad = left
                .into_values()
                .chain(right.into_values())
                .find(|v| !span.contains(v));
            if bad.is_some() {
                return bad;
            }
        }
        None
    }

    /// `(source, target)`-components of the spanning vectors, split further
    /// by path length.
    pub fn homogeneous_components(&self) -> BTreeMap<(VertexId, VertexId, usize), Vec<PathVector>> {
        let mut out: BTreeMap<_, Vec<PathVector>> = BTreeMap::new();
        for v in self.spanning_vectors() {
            for (key, comp) in v.homogeneous_components() {
                out.entry(key).or_default().push(comp);
            }
        }
        out
    }

    /// Span of all components with the given source and target.
    pub fn component_span(&self, source: VertexId, target: VertexId) -> SpanSpace {
        let comps: Vec<PathVector> = self
            .spanning_vectors()
            .iter()
            .map(|v| v.filter(|p| p.source() == source && p.target() == target))
            .filter(|v| !v.is_zero())
            .collect();
        SpanSpace::new(&comps)
    }

    /// Whether both presentations span the same subspace over the same quiver.
    pub fn same_span(&self, other: &CoalgebraPresentation) -> bool {
        if *self.quiver != *other.quiver {
            return false;
        }
        let a = self.span();
        let b = other.span();
        a.dim() == b.dim() && a.basis().iter().all(|v| b.contains(v))
    }

    pub fn to_json(&self) -> PresentationJson {
        let q = &self.quiver;
        let qj = q.to_json_value();
        PresentationJson {
            vertices: qj.vertices,
            arrows: qj.arrows,
            elements: self
                .elements
                .iter()
                .map(|e| {
                    e.terms()
                        .map(|(p, c)| TermJson {
                            path: p
                                .arrows()
                                .iter()
                                .map(|&a| q.arrow(a).name.clone())
                                .collect(),
                            vertex: p
                                .is_trivial()
                                .then(|| q.vertex_name(p.source()).to_string()),
                            coeff: format_rational(c),
                        })
                        .collect()
                })
                .collect(),
            admissible: self.admissible,
            boundary: self
                .boundary
                .iter()
                .map(|&v| q.vertex_name(v).to_string())
                .collect(),
        }
    }

    pub fn from_json(j: &PresentationJson) -> Result<Self> {
        let quiver = Arc::new(Quiver::new(
            j.vertices.iter().map(String::as_str),
            j.arrows
                .iter()
                .map(|a| (a.name.as_str(), a.from.as_str(), a.to.as_str())),
        )?);
        let mut elements = Vec::new();
        for e in &j.elements {
            let mut v = PathVector::new();
            for t in e {
                let p = if t.path.is_empty() {
                    let name = t
                        .vertex
                        .as_deref()
                        .ok_or_else(|| Error::parse("trivial term needs a \"vertex\"", 0))?;
                    let id = quiver
                        .vertex(name)
                        .ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex {name:?}")))?;
                    quiver.trivial_path(id)
                } else {
                    let names: Vec<&str> = t.path.iter().map(String::as_str).collect();
                    quiver.path(&names)?
                };
                v.add_term(p, parse_rational(&t.coeff)?);
            }
            elements.push(v);
        }
        let boundary = j
            .boundary
            .iter()
            .map(|n| {
                quiver
                    .vertex(n)
                    .ok_or_else(|| Error::InvalidQuiver(format!("unknown boundary vertex {n:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let p = if j.admissible {
            Self::new(quiver, elements)
        } else {
            Self::explicit_span(quiver, elements)
        };
        Ok(p.with_boundary(boundary))
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(text)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("presentation serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    /// Arrow names in written order; empty for a trivial path.
    #[serde(default)]
    pub path: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<String>,
    pub coeff: String,
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowJson>,
    #[serde(default)]
    pub elements: Vec<Vec<TermJson>>,
    #[serde(default = "default_true")]
    pub admissible: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub boundary: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    /// `0 ⇄ 1` with `a0: 0→1`, `b0: 1→0`.
    fn two_cycle() -> Quiver {
        Quiver::new(["0", "1"], [("a0", "0", "1"), ("b0", "1", "0")]).unwrap()
    }

    #[test]
    fn quiver_validation() {
        assert!(Quiver::new(["g", "g"], Vec::<(&str, &str, &str)>::new()).is_err());
        assert!(Quiver::new(["g"], [("a", "g", "h")]).is_err());
        assert!(Quiver::new(["g"], [("a", "g", "g"), ("a", "g", "g")]).is_err());
    }

    #[test]
    fn composition() {
        let q = two_cycle();
        let a0 = q.path(&["a0"]).unwrap();
        let b0 = q.path(&["b0"]).unwrap();
        let e0 = q.trivial_path(0);
        let e1 = q.trivial_path(1);
        assert_eq!(compose_paths(&q, &a0, &e0).unwrap(), a0);
        assert_eq!(compose_paths(&q, &e1, &a0).unwrap(), a0);
        let ba = compose_paths(&q, &b0, &a0).unwrap();
        assert_eq!(ba, q.path(&["b0", "a0"]).unwrap());
        assert_eq!(ba.len(), 2);
        assert_eq!((ba.source(), ba.target()), (0, 0));
        assert!(matches!(
            compose_paths(&q, &a0, &a0),
            Err(Error::Composition(_))
        ));
    }

    #[test]
    fn coproduct_of_vertex_arrow_and_path() {
        let q = two_cycle();
        let e0 = q.trivial_path(0);
        assert_eq!(coproduct_terms(&q, &e0), vec![(e0.clone(), e0.clone())]);

        // a0: h=0 → g=1, Δa = g⊗a + a⊗h
        let a0 = q.path(&["a0"]).unwrap();
        assert_eq!(
            coproduct_terms(&q, &a0),
            vec![
                (q.trivial_path(1), a0.clone()),
                (a0.clone(), q.trivial_path(0))
            ]
        );

        let ba = q.path(&["b0", "a0"]).unwrap();
        let b0 = q.path(&["b0"]).unwrap();
        assert_eq!(
            coproduct_terms(&q, &ba),
            vec![(e0.clone(), ba.clone()), (b0, a0), (ba.clone(), e0)]
        );
    }

    #[test]
    fn explicit_span_missing_subpath_is_not_a_subcoalgebra() {
        let q =
            Arc::new(Quiver::new(["0", "1", "2"], [("a0", "0", "1"), ("a1", "1", "2")]).unwrap());
        let mut elems: Vec<PathVector> = (0..3)
            .map(|v| PathVector::single(q.trivial_path(v)))
            .collect();
        elems.push(PathVector::single(q.path(&["a0"]).unwrap()));
        elems.push(PathVector::single(q.path(&["a1", "a0"]).unwrap()));
        let b = CoalgebraPresentation::explicit_span(q.clone(), elems.clone());
        assert!(!b.check_subcoalgebra());
        elems.push(PathVector::single(q.path(&["a1"]).unwrap()));
        assert!(CoalgebraPresentation::explicit_span(q, elems).check_subcoalgebra());
    }

    #[test]
    fn truncations_are_subcoalgebras() {
        let q = Arc::new(two_cycle());
        for l in 0..5 {
            assert!(
                CoalgebraPresentation::path_coalgebra_truncation(q.clone(), l).check_subcoalgebra()
            );
        }
    }

    #[test]
    fn mixed_element_without_its_components_fails() {
        let q = Arc::new(two_cycle());
        // the components at e_0 and e_1 are not in the span separately
        let ba = q.path(&["b0", "a0"]).unwrap();
        let ab = q.path(&["a0", "b0"]).unwrap();
        let v = PathVector::from_terms([(ba, rat(1)), (ab, rat(2))]);
        assert!(!CoalgebraPresentation::new(q, vec![v]).check_subcoalgebra());
    }

    #[test]
    fn json_round_trip() {
        let q = Arc::new(two_cycle());
        let ba = q.path(&["b0", "a0"]).unwrap();
        let b =
            CoalgebraPresentation::new(q, vec![PathVector::from_terms([(ba, rat(3) / rat(2))])]);
        let text = b.to_json_string();
        assert!(text.contains("\"3/2\""));
        assert_eq!(CoalgebraPresentation::from_json_str(&text).unwrap(), b);
    }

    #[test]
    fn paths_of_length_counts() {
        let q = two_cycle();
        assert_eq!(q.paths_of_length(0).len(), 2);
        assert_eq!(q.paths_of_length(3).len(), 2);
        assert_eq!(q.paths_between(0, 0, 2).len(), 1);
    }
}
