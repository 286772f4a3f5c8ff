//! Relations of the dual bound quiver algebra of a presentation.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::rep::Representation;
use crate::linalg::Matrix;
use crate::quiver::{CoalgebraPresentation, PathVector, Quiver};

/// Homogeneous relations up to `vanish_above`; every longer path is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSet {
    pub relations: Vec<PathVector>,
    pub vanish_above: usize,
}

impl RelationSet {
    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    /// Relations of a given path length.
    pub fn of_length(&self, len: usize) -> Vec<&PathVector> {
        self.relations
            .iter()
            .filter(|r| r.support().next().is_some_and(|p| p.len() == len))
            .collect()
    }

    /// Whether every relation acts as zero on `m`.
    pub fn satisfied_by(&self, m: &Representation) -> bool {
        self.violation(m).is_none()
    }

    /// The first relation, or overlong path, acting nontrivially on `m`.
    pub fn violation(&self, m: &Representation) -> Option<PathVector> {
        for r in &self.relations {
            let mut acc: Option<Matrix> = None;
            for (p, c) in r.terms() {
                let term = m.path_action(p).scale(c);
                acc = Some(match acc {
                    Some(a) => a.add(&term),
                    None => term,
                });
            }
            if acc.is_some_and(|a| !a.is_zero()) {
                return Some(r.clone());
            }
        }
        let q: &Quiver = m.quiver();
        q.paths_of_length(self.vanish_above + 1)
            .into_iter()
            .find(|p| !m.path_action(p).is_zero())
            .map(PathVector::single)
    }
}

/// Annihilator of `b` inside the path algebra, degree by degree.
///
/// For each source, target and length the relations are a kernel basis of
/// the matrix whose rows are the corresponding homogeneous components of the
/// spanning vectors, so a path vector is a relation exactly when it pairs to
/// zero with every element of `b`. Paths longer than
/// `max(degree_bound, longest path of b)` vanish.
pub fn dual_relations(b: &CoalgebraPresentation, degree_bound: usize) -> RelationSet {
    let q = b.quiver();
    let vanish_above = degree_bound.max(b.max_path_length());
    let components = b.homogeneous_components();
    let mut relations = Vec::new();
    for len in 0..=vanish_above {
        let mut by_ends: BTreeMap<(usize, usize), Vec<_>> = BTreeMap::new();
        for p in q.paths_of_length(len) {
            by_ends.entry((p.source(), p.target())).or_default().push(p);
        }
        for ((s, t), paths) in by_ends {
            let rows: Vec<Vec<_>> = components
                .get(&(s, t, len))
                .map(|vs| {
                    vs.iter()
                        .map(|v| paths.iter().map(|p| v.coefficient(p)).collect())
                        .collect()
                })
                .unwrap_or_default();
            let pairing = Matrix::from_rows(rows, paths.len());
            for x in pairing.kernel() {
                relations.push(PathVector::from_terms(
                    paths.iter().cloned().zip(x).filter(|(_, c)| !c.is_zero()),
                ));
            }
        }
    }
    RelationSet {
        relations,
        vanish_above,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use std::sync::Arc;

    fn two_cycle() -> Arc<Quiver> {
        Arc::new(Quiver::new(["0", "1"], [("a0", "0", "1"), ("b0", "1", "0")]).unwrap())
    }

    #[test]
    fn truncation_has_only_long_paths() {
        let q = two_cycle();
        let b = CoalgebraPresentation::path_coalgebra_truncation(q, 3);
        let r = dual_relations(&b, 3);
        assert!(r.is_empty());
        assert_eq!(r.vanish_above, 3);
    }

    #[test]
    fn string_truncation_kills_length_two() {
        let q = two_cycle();
        let b = CoalgebraPresentation::new(q.clone(), vec![]);
        let r = dual_relations(&b, 2);
        assert_eq!(r.of_length(2).len(), 2);
        assert!(r.of_length(1).is_empty());
    }

    #[test]
    fn relations_annihilate_elements() {
        let q = two_cycle();
        let ba = q.path(&["b0", "a0"]).unwrap();
        let b = CoalgebraPresentation::new(
            q.clone(),
            vec![PathVector::from_terms([(ba.clone(), rat(1))])],
        );
        let r = dual_relations(&b, 2);
        // only a0 b0 is a relation in length 2
        let len2 = r.of_length(2);
        assert_eq!(len2.len(), 1);
        assert!(len2[0].coefficient(&ba).is_zero());
    }
}
