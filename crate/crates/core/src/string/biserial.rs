//! Special biserial conditions, injective comodules and the associated
//! string coalgebra.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::rep::Representation;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};
use crate::quiver::{CoalgebraPresentation, Path, PathVector, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BiserialReport {
    pub s1: bool,
    pub s2: bool,
    pub s3: bool,
    /// One human-readable witness per failed condition.
    pub witnesses: Vec<String>,
}

impl BiserialReport {
    pub fn is_special_biserial(&self) -> bool {
        self.s1 && self.s2
    }

    pub fn is_string(&self) -> bool {
        self.s1 && self.s2 && self.s3
    }
}

pub fn check_special_biserial(b: &CoalgebraPresentation) -> BiserialReport {
    let q = b.quiver();
    let mut witnesses = Vec::new();

    let mut s1 = true;
    for v in 0..q.vertex_count() {
        let outs = q.out_arrows(v).count();
        let ins = q.in_arrows(v).count();
        if outs > 2 || ins > 2 {
            s1 = false;
            witnesses.push(format!(
                "S1: vertex {} starts {outs} and ends {ins} arrows",
                q.vertex_name(v)
            ));
            break;
        }
    }

    let mut s2 = true;
    'arrows: for beta in 0..q.arrow_count() {
        let after: Vec<&str> = q
            .out_arrows(q.arrow(beta).target)
            .filter(|&alpha| b.appears(&q.path_from_ids(vec![alpha, beta]).expect("composable")))
            .map(|alpha| q.arrow(alpha).name.as_str())
            .collect();
        let before: Vec<&str> = q
            .in_arrows(q.arrow(beta).source)
            .filter(|&gamma| b.appears(&q.path_from_ids(vec![beta, gamma]).expect("composable")))
            .map(|gamma| q.arrow(gamma).name.as_str())
            .collect();
        for (list, side) in [(&after, "follow"), (&before, "precede")] {
            if list.len() > 1 {
                s2 = false;
                witnesses.push(format!(
                    "S2: arrows {} all {side} {} in B",
                    list.join(", "),
                    q.arrow(beta).name
                ));
                break 'arrows;
            }
        }
    }

    let span = b.span();
    let path_basis: Vec<PathVector> = span
        .paths()
        .iter()
        .filter(|p| span.contains_path(p))
        .cloned()
        .map(PathVector::single)
        .collect();
    let s3 = path_basis.len() == span.dim();
    if !s3 {
        let by_paths = crate::quiver::SpanSpace::new(&path_basis);
        if let Some(v) = span.basis().into_iter().find(|v| !by_paths.contains(v)) {
            witnesses.push(format!(
                "S3: {} is not a combination of paths in B",
                v.render(q)
            ));
        }
    }

    BiserialReport {
        s1,
        s2,
        s3,
        witnesses,
    }
}

/// The injective comodule `I(g) = B e_g`: all elements of `b` ending at `g`,
/// with an arrow acting by removing itself from the start of each path.
#[derive(Debug, Clone)]
pub struct InjectiveComodule {
    pub vertex: VertexId,
    pub rep: Representation,
    /// `basis[v]` lists the basis elements of the component at vertex `v`.
    pub basis: Vec<Vec<PathVector>>,
}

impl InjectiveComodule {
    /// The element of `b` with coordinates `x` at vertex `v`.
    pub fn element(&self, v: VertexId, x: &[Rational]) -> PathVector {
        let mut out = PathVector::new();
        for (e, c) in self.basis[v].iter().zip(x) {
            if c.is_zero() {
                continue;
            }
            for (p, d) in e.terms() {
                out.add_term(p.clone(), c * d);
            }
        }
        out
    }
}

pub fn injective_comodule(b: &CoalgebraPresentation, g: VertexId) -> InjectiveComodule {
    let q = b.quiver();
    let spans: Vec<_> = (0..q.vertex_count())
        .map(|s| b.component_span(s, g))
        .collect();
    let basis: Vec<Vec<PathVector>> = spans.iter().map(|s| s.basis()).collect();
    let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
    let maps = (0..q.arrow_count())
        .map(|a| {
            let arrow = q.arrow(a);
            let (u, v) = (arrow.source, arrow.target);
            let columns: Vec<Vec<Rational>> = basis[u]
                .iter()
                .map(|e| {
                    let mut stripped = PathVector::new();
                    for (p, c) in e.terms() {
                        if p.arrows().last() == Some(&a) {
                            stripped.add_term(strip_first(p, q), c.clone());
                        }
                    }
                    spans[v]
                        .coordinates(&stripped)
                        .expect("span is closed under coproduct components")
                })
                .collect();
            Matrix::from_columns(&columns, dims[v])
        })
        .collect();
    InjectiveComodule {
        vertex: g,
        rep: Representation::new(q.clone(), dims, maps).expect("shapes agree"),
        basis,
    }
}

fn strip_first(p: &Path, q: &crate::quiver::Quiver) -> Path {
    p.left_factor(p.len() - 1, q)
}

/// Dimension of the projective cover of the simple at `x`.
fn projective_dim(b: &CoalgebraPresentation, x: VertexId) -> usize {
    (0..b.quiver().vertex_count())
        .map(|t| b.component_span(x, t).dim())
        .sum()
}

/// Whether `I(g)` is also projective: its top is simple at some `x` and it
/// has the dimension of the projective cover of that simple. Boundary
/// vertices of a truncation never qualify.
pub fn is_projective(b: &CoalgebraPresentation, g: VertexId) -> bool {
    if b.boundary().contains(&g) {
        return false;
    }
    let inj = injective_comodule(b, g);
    let top = inj.rep.top();
    let support = top.rep.support();
    support.len() == 1
        && top.rep.total_dim() == 1
        && inj.rep.total_dim() == projective_dim(b, support[0])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum FormCase {
    /// Uniserial, generated by one path.
    A,
    /// Two uniserials generated by paths meeting only at `g`.
    B,
    /// Two uniserials generated by paths meeting at `g` and a common start.
    C,
    /// Generated by a reduced element `p + λq`.
    D,
}

impl fmt::Display for FormCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            FormCase::A => "a",
            FormCase::B => "b",
            FormCase::C => "c",
            FormCase::D => "d",
        };
        f.write_str(c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectiveForm {
    pub case: FormCase,
    /// Generating paths (cases a to c) or the reduced element (case d).
    pub generators: Vec<PathVector>,
}

pub fn injective_form(b: &CoalgebraPresentation, g: VertexId) -> Result<InjectiveForm> {
    let q = b.quiver();
    if b.boundary().contains(&g) {
        return Err(Error::WindowOverflow(format!(
            "I({}) is cut off by the truncation window",
            q.vertex_name(g)
        )));
    }
    let report = check_special_biserial(b);
    if !report.is_special_biserial() {
        return Err(Error::NotSpecialBiserial(report.witnesses.join("; ")));
    }
    let inj = injective_comodule(b, g);
    let top = inj.rep.top();
    let mut generators = Vec::new();
    for v in 0..q.vertex_count() {
        for col in top.section[v].columns() {
            generators.push(normalize(inj.element(v, &col)));
        }
    }
    let case = match generators.as_slice() {
        [x] if x.len() == 1 => FormCase::A,
        [_] => FormCase::D,
        [x, y] if x.len() == 1 && y.len() == 1 => {
            let p = x.support().next().expect("nonzero");
            let r = y.support().next().expect("nonzero");
            let common: BTreeSet<VertexId> = p
                .vertices(q)
                .into_iter()
                .collect::<BTreeSet<_>>()
                .intersection(&r.vertices(q).into_iter().collect())
                .copied()
                .collect();
            if common.len() > 1 && p.source() == r.source() {
                FormCase::C
            } else {
                FormCase::B
            }
        }
        _ => {
            return Err(Error::NotSpecialBiserial(format!(
                "I({}) has a top of dimension {}",
                q.vertex_name(g),
                generators.len()
            )))
        }
    };
    Ok(InjectiveForm { case, generators })
}

/// Scales so that the smallest path has coefficient one.
fn normalize(v: PathVector) -> PathVector {
    let Some((_, lead)) = v.terms().next() else {
        return v;
    };
    let inv = Rational::one() / lead;
    PathVector::from_terms(v.terms().map(|(p, c)| (p.clone(), c * &inv)))
}

/// `⊕_{g projective} rad I(g) ⊕ ⊕_{h not projective} I(h)` as a presentation.
pub fn associated_string_coalgebra(b: &CoalgebraPresentation) -> Result<CoalgebraPresentation> {
    let report = check_special_biserial(b);
    if !report.is_special_biserial() {
        return Err(Error::NotSpecialBiserial(report.witnesses.join("; ")));
    }
    let q = b.quiver();
    let mut vectors = Vec::new();
    for g in 0..q.vertex_count() {
        let inj = injective_comodule(b, g);
        if is_projective(b, g) {
            let rad = inj.rep.radical();
            for v in 0..q.vertex_count() {
                for col in rad.inclusion[v].columns() {
                    vectors.push(inj.element(v, &col));
                }
            }
        } else {
            vectors.extend(inj.basis.into_iter().flatten());
        }
    }
    let span = crate::quiver::SpanSpace::new(&vectors);
    let admissible = (0..q.vertex_count()).all(|v| span.contains_path(&q.trivial_path(v)))
        && (0..q.arrow_count()).all(|a| span.contains_path(&q.arrow_path(a)));
    let out = if admissible {
        let long: Vec<PathVector> = span
            .basis()
            .into_iter()
            .filter(|v| v.max_len() >= 2)
            .collect();
        CoalgebraPresentation::new(q.clone(), long)
    } else {
        CoalgebraPresentation::explicit_span(q.clone(), span.basis())
    };
    Ok(out.with_boundary(b.boundary().iter().copied()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;
    use std::sync::Arc;

    fn kronecker() -> CoalgebraPresentation {
        let q = Quiver::new(["g", "h"], [("a", "g", "h"), ("b", "g", "h")]).unwrap();
        CoalgebraPresentation::path_coalgebra_truncation(Arc::new(q), 2)
    }

    #[test]
    fn three_arrows_violate_s1() {
        let q = Quiver::new(
            ["0", "1"],
            [("a", "0", "1"), ("b", "0", "1"), ("c", "0", "1")],
        )
        .unwrap();
        let r = check_special_biserial(&CoalgebraPresentation::new(Arc::new(q), vec![]));
        assert!(!r.s1);
        assert!(r.witnesses[0].starts_with("S1"));
    }

    #[test]
    fn kronecker_is_string() {
        let r = check_special_biserial(&kronecker());
        assert!(r.is_string());
    }

    #[test]
    fn kronecker_injective_at_h() {
        let b = kronecker();
        let h = b.quiver().vertex("h").unwrap();
        let inj = injective_comodule(&b, h);
        assert_eq!(inj.rep.dims(), &[2, 1]);
        let form = injective_form(&b, h).unwrap();
        assert_eq!(form.case, FormCase::C);
        assert!(!is_projective(&b, h));
        let g = b.quiver().vertex("g").unwrap();
        assert_eq!(injective_form(&b, g).unwrap().case, FormCase::A);
    }

    #[test]
    fn kronecker_string_coalgebra_is_itself() {
        let b = kronecker();
        let c = associated_string_coalgebra(&b).unwrap();
        assert!(c.same_span(&b));
    }

    #[test]
    fn injective_socle_is_simple() {
        let b = kronecker();
        let h = b.quiver().vertex("h").unwrap();
        let soc = injective_comodule(&b, h).rep.socle();
        assert_eq!(soc.rep.dims(), &[0, 1]);
    }
}
