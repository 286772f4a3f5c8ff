use std::sync::Arc;

use super::label::{BlockForm, ComoduleLabel, Family};
use super::RootParams;
use crate::error::{Error, Result};
use crate::linalg::rat;
use crate::quiver::{CoalgebraPresentation, PathVector, Quiver};
use crate::string::{injective_comodule, string_module, Letter, Representation, Word};

/// The linear quiver `0 ⇄ 1 ⇄ ... ⇄ n` with `a_i: i → i+1` and `b_i: i+1 → i`.
pub fn block_quiver(n: usize) -> Quiver {
    let vertices: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
    let mut arrows = Vec::new();
    for i in 0..n {
        arrows.push((format!("a{i}"), i.to_string(), (i + 1).to_string()));
        arrows.push((format!("b{i}"), (i + 1).to_string(), i.to_string()));
    }
    Quiver::new(vertices, arrows).expect("block quiver is valid")
}

/// `B_n`: vertices, arrows, `d_0 = b_0 a_0` and `d_{i+1} = a_i b_i + b_{i+1} a_{i+1}`
/// for `i + 1 < n`. Vertex `n` is marked as the truncation boundary.
pub fn basic_block(n: usize) -> CoalgebraPresentation {
    let q = Arc::new(block_quiver(n));
    let mut elements = Vec::new();
    if n >= 1 {
        let d0 = q.path(&["b0", "a0"]).expect("valid");
        elements.push(PathVector::single(d0));
    }
    for i in 0..n.saturating_sub(1) {
        let (a_i, b_i) = (format!("a{i}"), format!("b{i}"));
        let (a_j, b_j) = (format!("a{}", i + 1), format!("b{}", i + 1));
        let left = q.path(&[&a_i, &b_i]).expect("valid");
        let right = q.path(&[&b_j, &a_j]).expect("valid");
        elements.push(PathVector::from_terms([(left, rat(1)), (right, rat(1))]));
    }
    CoalgebraPresentation::new(q, elements).with_boundary([n])
}

/// `B'_n`: only vertices and arrows.
pub fn string_block(n: usize) -> CoalgebraPresentation {
    CoalgebraPresentation::new(Arc::new(block_quiver(n)), Vec::new()).with_boundary([n])
}

/// Smallest window whose padding allows syzygy computations for `label`.
pub fn window_for(label: ComoduleLabel, p: RootParams) -> usize {
    label.block_form(p).max_vertex() + 2
}

/// The defining word of a string label over the block quiver `q`.
pub fn string_word(label: ComoduleLabel, p: RootParams, q: &Quiver) -> Result<Word> {
    let (family, t, s) = match label.block_form(p) {
        BlockForm::String { family, t, s, .. } => (family, t, s),
        BlockForm::Simple { n, .. } => {
            if n >= q.vertex_count() {
                return Err(overflow(label, q.vertex_count() - 1));
            }
            return Ok(Word::empty(n));
        }
        _ => return Err(Error::domain(format!("{label} is not a string comodule"))),
    };
    if t >= q.vertex_count() {
        return Err(overflow(label, q.vertex_count() - 1));
    }
    let letters: Vec<Letter> = (0..t - s)
        .map(|i| {
            let j = s + i;
            let inverse_b = (i % 2 == 0) == family.starts_inverse();
            if inverse_b {
                Letter::inverse_of(q.arrow_id(&format!("b{j}")).expect("in window"))
            } else {
                Letter::direct(q.arrow_id(&format!("a{j}")).expect("in window"))
            }
        })
        .collect();
    Word::from_traversal(q, letters, Some(s))
}

fn overflow(label: ComoduleLabel, n: usize) -> Error {
    Error::WindowOverflow(format!(
        "{label} does not fit in the window [0, {n}] with padding 2"
    ))
}

/// A representation of `label` over `basic_block(n)`; every vertex touched
/// must be at most `n - 2`.
pub fn realize(label: ComoduleLabel, p: RootParams, n: usize) -> Result<Representation> {
    let form = label.block_form(p);
    if let BlockForm::Steinberg(r) = form {
        return Err(Error::domain(format!(
            "L({r}) lies in a singleton block without arrows"
        )));
    }
    if form.max_vertex() + 2 > n {
        return Err(overflow(label, n));
    }
    let block = basic_block(n);
    match form {
        BlockForm::Injective { n: m, .. } => Ok(injective_comodule(&block, m).rep),
        _ => {
            let q = block.quiver().clone();
            let w = string_word(label, p, &q)?;
            Ok(string_module(&w, q))
        }
    }
}

/// Dimension vector over the window `[0, n]`.
pub fn dimension_vector(label: ComoduleLabel, p: RootParams, n: usize) -> Result<Vec<usize>> {
    let form = label.block_form(p);
    if matches!(form, BlockForm::Steinberg(_)) {
        return Err(Error::domain(format!("{label} lies in a singleton block")));
    }
    if form.max_vertex() > n {
        return Err(overflow(label, n));
    }
    let mut v = vec![0; n + 1];
    for (i, m) in form.vertex_counts() {
        v[i] += m;
    }
    Ok(v)
}

/// All indecomposables of the block with base `base` having dimension
/// vector `v` (indexed by block vertex), in a fixed order.
pub fn indecomposables_with_dimension_vector(
    p: RootParams,
    base: u64,
    v: &[usize],
) -> Result<Vec<ComoduleLabel>> {
    p.check_base(base)?;
    let support: Vec<usize> = (0..v.len()).filter(|&i| v[i] > 0).collect();
    let (Some(&lo), Some(&hi)) = (support.first(), support.last()) else {
        return Ok(Vec::new());
    };
    let mut candidates = Vec::new();
    for family in [Family::M, Family::MPrime, Family::N, Family::NPrime] {
        if let Ok(l) = ComoduleLabel::string(p, family, base, hi, lo) {
            if !candidates.contains(&l) {
                candidates.push(l);
            }
        }
    }
    for m in lo..=hi {
        candidates.push(ComoduleLabel::injective_at(p, base, m));
    }
    let matches = |l: &ComoduleLabel| {
        let mut w = vec![0; v.len()];
        for (i, m) in l.block_form(p).vertex_counts() {
            if i >= w.len() {
                return false;
            }
            w[i] += m;
        }
        w == v
    };
    let out = candidates.into_iter().filter(matches).collect();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::string::{check_special_biserial, is_isomorphic};

    fn p5() -> RootParams {
        RootParams::new(5).unwrap()
    }

    #[test]
    fn block_dimensions() {
        assert_eq!(basic_block(0).dimension(), 1);
        assert_eq!(basic_block(1).dimension(), 5);
        assert_eq!(basic_block(2).dimension(), 9);
        assert!(basic_block(4).check_subcoalgebra());
        let q = basic_block(2).quiver().clone();
        assert!(basic_block(2).appears(&q.path(&["b0", "a0"]).unwrap()));
        assert!(!basic_block(2).appears(&q.path(&["a1", "a0"]).unwrap()));
    }

    #[test]
    fn block_is_special_biserial_but_not_string() {
        let r = check_special_biserial(&basic_block(3));
        assert!((r.s1, r.s2, r.s3) == (true, true, false));
        let r = check_special_biserial(&string_block(3));
        assert!(r.is_string());
    }

    #[test]
    fn words_of_labels() {
        let p = p5();
        let q = block_quiver(6);
        let m20 = ComoduleLabel::string(p, Family::M, 1, 2, 0).unwrap();
        assert_eq!(string_word(m20, p, &q).unwrap().render(&q), "a1 b0^-1");
        let n10 = ComoduleLabel::string(p, Family::NPrime, 1, 1, 0).unwrap();
        assert_eq!(string_word(n10, p, &q).unwrap().render(&q), "b0^-1");
        let s3 = ComoduleLabel::string(p, Family::M, 1, 3, 3).unwrap();
        assert!(string_word(s3, p, &q).unwrap().is_empty());
    }

    #[test]
    fn realize_injective_and_strings() {
        let p = p5();
        let i2 = realize(ComoduleLabel::injective_at(p, 1, 2), p, 6).unwrap();
        assert_eq!(i2.dims(), &[0, 1, 2, 1, 0, 0, 0]);
        assert_eq!(i2.socle().rep.dims(), &[0, 0, 1, 0, 0, 0, 0]);
        let m20 = realize(ComoduleLabel::string(p, Family::M, 1, 2, 0).unwrap(), p, 6).unwrap();
        assert_eq!(&m20.dims()[..3], &[1, 1, 1]);
        let m20p = realize(
            ComoduleLabel::string(p, Family::MPrime, 1, 2, 0).unwrap(),
            p,
            6,
        )
        .unwrap();
        assert!(!is_isomorphic(&m20, &m20p));
        assert!(matches!(
            realize(ComoduleLabel::injective_at(p, 1, 5), p, 6),
            Err(Error::WindowOverflow(_))
        ));
    }

    #[test]
    fn dimension_vector_lookup() {
        let p = p5();
        let found = indecomposables_with_dimension_vector(p, 1, &[0, 1, 1, 1]).unwrap();
        let names: Vec<String> = found.iter().map(|l| l.to_string()).collect();
        assert_eq!(names, vec!["M(3,1)@b1", "M'(3,1)@b1"]);
        let found = indecomposables_with_dimension_vector(p, 1, &[0, 1, 2, 1]).unwrap();
        assert_eq!(found, vec![ComoduleLabel::injective_at(p, 1, 2)]);
        let found = indecomposables_with_dimension_vector(p, 1, &[0, 0, 1]).unwrap();
        assert_eq!(found, vec![ComoduleLabel::Simple(11)]);
    }
}
