//! Letters, words and strings over a quiver.
//!
//! Words are kept in traversal order internally (`w_1` first); constructors
//! and renderings use the written order `w_n ... w_1`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{ArrowId, CoalgebraPresentation, Path, Quiver, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Direct,
    Inverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub arrow: ArrowId,
    pub direction: Direction,
}

impl Letter {
    pub fn direct(arrow: ArrowId) -> Self {
        Letter {
            arrow,
            direction: Direction::Direct,
        }
    }

    pub fn inverse_of(arrow: ArrowId) -> Self {
        Letter {
            arrow,
            direction: Direction::Inverse,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            arrow: self.arrow,
            direction: match self.direction {
                Direction::Direct => Direction::Inverse,
                Direction::Inverse => Direction::Direct,
            },
        }
    }

    pub fn is_direct(self) -> bool {
        self.direction == Direction::Direct
    }

    pub fn source(self, q: &Quiver) -> VertexId {
        let a = q.arrow(self.arrow);
        if self.is_direct() {
            a.source
        } else {
            a.target
        }
    }

    pub fn target(self, q: &Quiver) -> VertexId {
        let a = q.arrow(self.arrow);
        if self.is_direct() {
            a.target
        } else {
            a.source
        }
    }

    pub fn render(self, q: &Quiver) -> String {
        let name = &q.arrow(self.arrow).name;
        if self.is_direct() {
            name.clone()
        } else {
            format!("{name}^-1")
        }
    }

    fn key(self, q: &Quiver) -> (&str, Direction) {
        (q.arrow(self.arrow).name.as_str(), self.direction)
    }
}

/// A walk `w_n ... w_1` with no immediate cancellation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    start: VertexId,
    letters: Vec<Letter>,
}

/// Validates letters given in written order. An empty word needs `base`;
/// a nonempty one may give `base` as a consistency check on its start.
pub fn make_word(q: &Quiver, written: &[Letter], base: Option<VertexId>) -> Result<Word> {
    let letters: Vec<Letter> = written.iter().rev().copied().collect();
    Word::from_traversal(q, letters, base)
}

impl Word {
    pub fn empty(v: VertexId) -> Self {
        Word {
            start: v,
            letters: Vec::new(),
        }
    }

    /// Letters in traversal order (`w_1` first).
    pub fn from_traversal(
        q: &Quiver,
        letters: Vec<Letter>,
        base: Option<VertexId>,
    ) -> Result<Word> {
        let start = match (letters.first(), base) {
            (None, None) => {
                return Err(Error::InvalidWord(
                    "the empty word needs a base vertex".into(),
                ))
            }
            (None, Some(v)) => v,
            (Some(l), b) => {
                let s = l.source(q);
                if let Some(v) = b.filter(|&v| v != s) {
                    return Err(Error::InvalidWord(format!(
                        "word starts at {} not at base {}",
                        q.vertex_name(s),
                        q.vertex_name(v)
                    )));
                }
                s
            }
        };
        if start >= q.vertex_count() {
            return Err(Error::InvalidWord("base vertex out of range".into()));
        }
        for w in letters.windows(2) {
            if w[0].target(q) != w[1].source(q) {
                return Err(Error::InvalidWord(format!(
                    "{} ends at {} but {} starts at {}",
                    w[0].render(q),
                    q.vertex_name(w[0].target(q)),
                    w[1].render(q),
                    q.vertex_name(w[1].source(q))
                )));
            }
            if w[1] == w[0].inverse() {
                return Err(Error::InvalidWord(format!(
                    "{} cancels {}",
                    w[1].render(q),
                    w[0].render(q)
                )));
            }
        }
        Ok(Word { start, letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn end(&self, q: &Quiver) -> VertexId {
        self.letters.last().map_or(self.start, |l| l.target(q))
    }

    pub fn traversal(&self) -> &[Letter] {
        &self.letters
    }

    pub fn written(&self) -> Vec<Letter> {
        self.letters.iter().rev().copied().collect()
    }

    /// Vertex of each basis vector `v_0, ..., v_n` of the string module.
    pub fn vertex_sequence(&self, q: &Quiver) -> Vec<VertexId> {
        let mut out = vec![self.start];
        out.extend(self.letters.iter().map(|l| l.target(q)));
        out
    }

    pub fn inverse(&self, q: &Quiver) -> Word {
        Word {
            start: self.end(q),
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    fn key<'q>(&self, q: &'q Quiver) -> Vec<(&'q str, Direction)> {
        self.letters.iter().rev().map(|l| l.key(q)).collect()
    }

    fn compare(&self, other: &Word, q: &Quiver) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.key(q).cmp(&other.key(q)))
            .then_with(|| q.vertex_name(self.start).cmp(q.vertex_name(other.start)))
    }

    /// The smaller of `w` and `w⁻¹` under (arrow name, direction) order on
    /// written letters, direct before inverse.
    pub fn canonical(&self, q: &Quiver) -> Word {
        let inv = self.inverse(q);
        if inv.compare(self, q) == Ordering::Less {
            inv
        } else {
            self.clone()
        }
    }

    /// Maximal runs of equally directed letters, each as a directed path.
    pub fn directed_runs(&self, q: &Quiver) -> Vec<Path> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let dir = self.letters[i].direction;
            let mut j = i;
            while j + 1 < self.letters.len() && self.letters[j + 1].direction == dir {
                j += 1;
            }
            let run: Vec<ArrowId> = self.letters[i..=j].iter().map(|l| l.arrow).collect();
            let written = match dir {
                Direction::Direct => run.into_iter().rev().collect(),
                Direction::Inverse => run,
            };
            out.push(
                q.path_from_ids(written)
                    .expect("runs of a valid word compose"),
            );
            i = j + 1;
        }
        out
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.is_empty() {
            return format!("e_{}", q.vertex_name(self.start));
        }
        self.letters
            .iter()
            .rev()
            .map(|l| l.render(q))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// JSON letters in written order.
    pub fn to_json(&self, q: &Quiver) -> Vec<LetterJson> {
        self.letters
            .iter()
            .rev()
            .map(|l| LetterJson {
                arrow: q.arrow(l.arrow).name.clone(),
                dir: if l.is_direct() { "+" } else { "-" }.into(),
            })
            .collect()
    }

    pub fn from_json(q: &Quiver, letters: &[LetterJson], base: Option<VertexId>) -> Result<Word> {
        let written = letters
            .iter()
            .map(|l| {
                let arrow = q
                    .arrow_id(&l.arrow)
                    .ok_or_else(|| Error::InvalidWord(format!("unknown arrow {:?}", l.arrow)))?;
                match l.dir.as_str() {
                    "+" => Ok(Letter::direct(arrow)),
                    "-" => Ok(Letter::inverse_of(arrow)),
                    d => Err(Error::InvalidWord(format!(
                        "direction must be \"+\" or \"-\", got {d:?}"
                    ))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        make_word(q, &written, base)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterJson {
    pub arrow: String,
    pub dir: String,
}

/// Whether every directed run of `w`, and each of its subpaths, appears in `b`.
pub fn is_string(w: &Word, b: &CoalgebraPresentation) -> bool {
    let q = b.quiver();
    w.directed_runs(q)
        .iter()
        .all(|run| run.subpaths(q).iter().all(|p| b.appears(p)))
}

/// An equivalence class of words under `w ~ w⁻¹`, held by its canonical word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StringClass {
    word: Word,
}

impl StringClass {
    pub fn new(w: &Word, q: &Quiver) -> Self {
        StringClass {
            word: w.canonical(q),
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }
}

/// All strings with at most `max_letters` letters, ordered by length and then
/// by canonical written form.
type SortKey = (usize, Vec<(String, Direction)>, String);

pub fn enumerate_strings(b: &CoalgebraPresentation, max_letters: usize) -> Vec<StringClass> {
    let q = b.quiver().as_ref();
    let mut letters = Vec::new();
    for a in 0..q.arrow_count() {
        letters.push(Letter::direct(a));
        letters.push(Letter::inverse_of(a));
    }
    // Keyed by an owned sort key so the output order is independent of
    // discovery order.
    let mut found: BTreeMap<SortKey, Word> = BTreeMap::new();
    let mut stack: Vec<Word> = (0..q.vertex_count()).map(Word::empty).collect();
    while let Some(w) = stack.pop() {
        let c = w.canonical(q);
        let key = (
            c.len(),
            c.key(q)
                .into_iter()
                .map(|(n, d)| (n.to_string(), d))
                .collect(),
            q.vertex_name(c.start).to_string(),
        );
        found.entry(key).or_insert(c);
        if w.len() == max_letters {
            continue;
        }
        let end = w.end(q);
        for &l in &letters {
            if l.source(q) != end || w.letters.last().is_some_and(|&last| l == last.inverse()) {
                continue;
            }
            let mut next = w.letters.clone();
            next.push(l);
            let nw = Word {
                start: w.start,
                letters: next,
            };
            if is_string(&nw, b) {
                stack.push(nw);
            }
        }
    }
    found
        .into_values()
        .map(|word| StringClass { word })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn kronecker() -> Quiver {
        Quiver::new(["g", "h"], [("a", "g", "h"), ("b", "g", "h")]).unwrap()
    }

    fn letters(q: &Quiver, spec: &[(&str, bool)]) -> Vec<Letter> {
        spec.iter()
            .map(|&(n, direct)| {
                let a = q.arrow_id(n).unwrap();
                if direct {
                    Letter::direct(a)
                } else {
                    Letter::inverse_of(a)
                }
            })
            .collect()
    }

    #[test]
    fn kronecker_word_is_valid() {
        let q = kronecker();
        let w = make_word(
            &q,
            &letters(&q, &[("b", false), ("a", true), ("b", false), ("a", true)]),
            None,
        )
        .unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w.render(&q), "b^-1 a b^-1 a");
        assert_eq!(w.start(), q.vertex("g").unwrap());
    }

    #[test]
    fn cancellation_and_mismatch_rejected() {
        let q = kronecker();
        let cancel = make_word(&q, &letters(&q, &[("a", true), ("a", false)]), None);
        assert!(matches!(cancel, Err(Error::InvalidWord(_))));
        let mismatch = make_word(&q, &letters(&q, &[("a", true), ("b", true)]), None);
        assert!(matches!(mismatch, Err(Error::InvalidWord(_))));
        assert!(make_word(&q, &[], None).is_err());
        let e = make_word(&q, &[], Some(0)).unwrap();
        assert!(e.is_empty());
        assert_eq!(e.start(), 0);
    }

    #[test]
    fn canonical_is_inverse_invariant() {
        let q = kronecker();
        let w = make_word(&q, &letters(&q, &[("b", false), ("a", true)]), None).unwrap();
        let inv = w.inverse(&q);
        assert_eq!(w.canonical(&q), inv.canonical(&q));
        assert_eq!(inv.inverse(&q), w);
    }

    #[test]
    fn runs_become_paths() {
        let q = Quiver::new(["0", "1", "2"], [("a0", "0", "1"), ("a1", "1", "2")]).unwrap();
        let w = make_word(&q, &letters(&q, &[("a1", true), ("a0", true)]), None).unwrap();
        let runs = w.directed_runs(&q);
        assert_eq!(runs, vec![q.path(&["a1", "a0"]).unwrap()]);
        let inv = w.inverse(&q);
        assert_eq!(inv.directed_runs(&q), runs);
        let b = CoalgebraPresentation::path_coalgebra_truncation(Arc::new(q.clone()), 1);
        assert!(!is_string(&w, &b));
        let b2 = CoalgebraPresentation::path_coalgebra_truncation(Arc::new(q), 2);
        assert!(is_string(&w, &b2));
    }

    #[test]
    fn json_round_trip() {
        let q = kronecker();
        let w = make_word(&q, &letters(&q, &[("b", false), ("a", true)]), None).unwrap();
        let j = w.to_json(&q);
        assert_eq!(
            j[0],
            LetterJson {
                arrow: "b".into(),
                dir: "-".into()
            }
        );
        assert_eq!(Word::from_json(&q, &j, None).unwrap(), w);
    }
}
