mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::{non_injective_labels, params};
use qcomod::linalg::{rat, Matrix};
use qcomod::qdim::{
    decompose_tensor, green_class, green_mul, q_int, qdim, qdim_trace_oracle, GreenElem, Monomial,
};
use qcomod::quantum::{
    basic_block, parse_label, realize, string_block, ComoduleLabel, Family, RootParams,
};
use qcomod::quiver::{compose_paths, coproduct_terms};
use qcomod::string::{
    associated_string_coalgebra, check_special_biserial, dual_relations, is_isomorphic, is_string,
    string_module, Letter, Word,
};
use qcomod::syzygy::{
    label_of, omega, omega_inv, omega_inv_oracle, omega_oracle, orbit_of, OrbitCoord,
};

fn ell() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7, 9, 11])
}

/// A string label or simple of some block, with vertices at most `tmax`.
fn label(tmax: usize) -> impl Strategy<Value = (RootParams, ComoduleLabel)> {
    (
        ell(),
        0..4u8,
        0..=tmax,
        0..=tmax,
        any::<prop::sample::Index>(),
    )
        .prop_map(|(ell, fam, a, b, base)| {
            let p = params(ell);
            let base = base.index(ell as usize - 1) as u64;
            let (t, s) = (a.max(b), a.min(b));
            let family = [Family::M, Family::MPrime, Family::N, Family::NPrime][fam as usize];
            let family = match (family.even_span(), (t - s) % 2 == 0) {
                (true, false) => Family::N,
                (false, true) => Family::M,
                _ => family,
            };
            (p, ComoduleLabel::string(p, family, base, t, s).unwrap())
        })
}

/// A walk in the block quiver of `B_8` starting at `start`.
fn walk() -> impl Strategy<Value = (usize, Vec<u8>)> {
    (0..8usize, prop::collection::vec(0..4u8, 0..7))
}

fn build_word(start: usize, choices: &[u8]) -> Option<Word> {
    let b = basic_block(8);
    let q = b.quiver();
    let mut v = start;
    let mut letters = Vec::new();
    for &c in choices {
        let (letter, next) = match c {
            0 if v < 8 => (Letter::direct(q.arrow_id(&format!("a{v}"))?), v + 1),
            1 if v < 8 => (Letter::inverse_of(q.arrow_id(&format!("b{v}"))?), v + 1),
            2 if v > 0 => (Letter::direct(q.arrow_id(&format!("b{}", v - 1))?), v - 1),
            3 if v > 0 => (
                Letter::inverse_of(q.arrow_id(&format!("a{}", v - 1))?),
                v - 1,
            ),
            _ => return None,
        };
        letters.push(letter);
        v = next;
    }
    Word::from_traversal(q, letters, Some(start)).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_nullity(rows in 1..5usize, cols in 1..5usize, seed in prop::collection::vec(-3i64..4, 25)) {
        let a = Matrix::from_fn(rows, cols, |i, j| rat(seed[i * 5 + j]));
        let k = a.kernel();
        prop_assert_eq!(a.rank() + k.len(), cols);
        for v in &k {
            prop_assert!(a.mul_vec(v).iter().all(|x| *x == rat(0)));
        }
    }

    #[test]
    fn coproduct_splits_paths((start, choices) in walk()) {
        let q = basic_block(8).quiver().clone();
        let mut v = start;
        let mut arrows = Vec::new();
        for &c in &choices {
            let name = if c % 2 == 0 && v < 8 { v += 1; format!("a{}", v - 1) } else if v > 0 { v -= 1; format!("b{v}") } else { continue };
            arrows.insert(0, name);
        }
        let names: Vec<&str> = arrows.iter().map(String::as_str).collect();
        let p = if names.is_empty() { q.trivial_path(start) } else { q.path(&names).unwrap() };
        let terms = coproduct_terms(&q, &p);
        prop_assert_eq!(terms.len(), p.len() + 1);
        for (l, r) in terms {
            prop_assert_eq!(compose_paths(&q, &l, &r).unwrap(), p.clone());
        }
    }

    #[test]
    fn string_modules((start, choices) in walk()) {
        let w = build_word(start, &choices);
        prop_assume!(w.is_some());
        let w = w.unwrap();
        let b = string_block(8);
        prop_assume!(is_string(&w, &b));
        let q = b.quiver().clone();
        let m = string_module(&w, q.clone());
        prop_assert_eq!(m.total_dim(), w.len() + 1);
        prop_assert!(is_isomorphic(&m, &string_module(&w.inverse(&q), q.clone())));
        prop_assert!(dual_relations(&b, 2).satisfied_by(&m));
        // the radical dies in the top
        let rad = m.radical();
        let top = m.top();
        for v in 0..q.vertex_count() {
            let comp = &top.projection[v] * &rad.inclusion[v];
            prop_assert!(comp.is_zero());
        }
        prop_assert!(m.socle().rep.total_dim() >= 1);
    }

    #[test]
    fn associated_string_coalgebra_is_string(n in 0..10usize) {
        let c = associated_string_coalgebra(&basic_block(n)).unwrap();
        prop_assert!(check_special_biserial(&c).is_string());
    }

    #[test]
    fn reflections(ell in ell(), r in 0..500u64) {
        let p = params(ell);
        if !p.is_steinberg(r) {
            prop_assert_eq!(p.sigma(p.tau(r)).unwrap(), r);
            let (base, n) = p.weight_vertex(r).unwrap();
            prop_assert_eq!(p.vertex_weight(base, n), r);
        } else {
            prop_assert_eq!(p.tau(r), r);
            prop_assert!(p.weight_vertex(r).is_none());
        }
    }

    #[test]
    fn labels_render_and_parse((p, l) in label(20)) {
        prop_assert_eq!(parse_label(&l.to_string(), p).unwrap(), l);
        prop_assert_eq!(l.duality().duality(), l);
        let c = orbit_of(l, p).unwrap();
        let base = l.block_form(p).base().unwrap();
        prop_assert_eq!(label_of(c, base, p), l);
        prop_assert_eq!(orbit_of(l.duality(), p).unwrap(), OrbitCoord::new(-c.k, c.n));
        prop_assert_eq!(omega(omega_inv(l, p).unwrap(), p).unwrap(), l);
        let factors: u64 = l.composition_factors(p).iter().map(|&r| p.simple_dim(r)).sum();
        prop_assert_eq!(l.dim(p), factors);
        let layers: u64 = l.socle_layers(p).iter().flatten().map(|&r| p.simple_dim(r)).sum();
        prop_assert_eq!(l.dim(p), layers);
    }

    #[test]
    fn realized_dimension_vectors((p, l) in label(8)) {
        let n = l.block_form(p).max_vertex() + 2;
        let m = realize(l, p, n).unwrap();
        let base = l.block_form(p).base().unwrap();
        let weighted: u64 = m.dims().iter().enumerate().map(|(v, &d)| d as u64 * p.simple_dim(p.vertex_weight(base, v))).sum();
        prop_assert_eq!(weighted, l.dim(p));
    }

    #[test]
    fn quantum_integer_reflection(ell in ell(), m in 1..20u64) {
        prop_assume!(m < ell);
        prop_assert_eq!(q_int(ell - m, ell), -&q_int(m, ell));
    }

    #[test]
    fn qdim_matches_trace((p, l) in label(30)) {
        let q = qdim(l, p);
        prop_assert_eq!(&q, &qdim_trace_oracle(l, p));
        prop_assert!(!q.is_zero());
    }

    #[test]
    fn injectives_have_zero_qdim(ell in ell(), r in 0..400u64) {
        let p = params(ell);
        let l = ComoduleLabel::Injective(r);
        prop_assert!(qdim(l, p).is_zero());
        prop_assert!(qdim_trace_oracle(l, p).is_zero());
    }

    #[test]
    fn tensor_conserves_dimension(ell in prop::sample::select(vec![3u64, 5, 7, 9, 11, 13, 15]), a in 0..15u64, b in 0..15u64) {
        prop_assume!(a < ell && b < ell);
        let p = params(ell);
        let ab = decompose_tensor(a, b, p).unwrap();
        prop_assert_eq!(&ab, &decompose_tensor(b, a, p).unwrap());
        let total: u64 = ab.iter().map(|l| l.dim(p)).sum();
        prop_assert_eq!(total, (a + 1) * (b + 1));
    }

    #[test]
    fn omega_shifts_green_classes((p, l) in label(12)) {
        let w = GreenElem::w_pow(p.ell(), 1);
        prop_assert_eq!(green_class(omega(l, p).unwrap(), p), green_mul(&w, &green_class(l, p)));
    }
}

fn green_elem(ell: u64) -> impl Strategy<Value = GreenElem> {
    prop::collection::vec((-2i64..3, 0..6usize, 0..3usize, -3i64..4), 0..4).prop_map(move |terms| {
        qcomod::qdim::green_reduce(
            ell,
            terms
                .into_iter()
                .map(|(w, x, y, c)| (Monomial::new(w, x, y), c)),
        )
    })
}

fn green_triple() -> impl Strategy<Value = (GreenElem, GreenElem, GreenElem)> {
    prop::sample::select(vec![3u64, 5, 7])
        .prop_flat_map(|ell| (green_elem(ell), green_elem(ell), green_elem(ell)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn green_ring_laws((u, v, z) in green_triple()) {
        let ell = u.ell();
        prop_assert_eq!(green_mul(&u, &v), green_mul(&v, &u));
        prop_assert_eq!(green_mul(&green_mul(&u, &v), &z), green_mul(&u, &green_mul(&v, &z)));
        prop_assert_eq!(green_mul(&u, &v.add(&z)), green_mul(&u, &v).add(&green_mul(&u, &z)));
        prop_assert_eq!(green_mul(&u, &GreenElem::one(ell)), u.clone());
        prop_assert!(u.terms().keys().all(|m| m.x + 1 < ell as usize));
        prop_assert!(u.terms().values().all(|&c| c != 0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Ω and Ω⁻¹ computed by linear algebra are mutually inverse on strings.
    #[test]
    fn oracle_round_trip((p, l) in label(5)) {
        let n = 9;
        let b = basic_block(n);
        let m = realize(l, p, n).unwrap();
        let up = omega_inv_oracle(&m, &b).unwrap();
        prop_assert!(is_isomorphic(&omega_oracle(&up, &b).unwrap(), &m));
    }
}

#[test]
fn green_classes_separate_indecomposables() {
    for ell in [3, 5, 7] {
        let p = params(ell);
        let mut seen = BTreeSet::new();
        let mut count = 0;
        for base in 0..ell - 1 {
            for l in non_injective_labels(p, base, 6) {
                let class = green_class(l, p).to_string();
                assert!(seen.insert(class.clone()), "{l} shares the class {class}");
                count += 1;
            }
        }
        assert_eq!(seen.len(), count);
    }
}

#[test]
fn green_relation_identity() {
    for ell in [3u64, 5, 7, 9] {
        let x = GreenElem::x(ell);
        let top = GreenElem::x_poly(ell, ell as usize - 2);
        assert_eq!(
            green_mul(&x, &top),
            GreenElem::x_poly(ell, ell as usize - 3)
        );
        assert!(GreenElem::x_poly(ell, ell as usize - 1).is_zero());
        assert_eq!(
            green_mul(&GreenElem::w_pow(ell, 3), &GreenElem::w_pow(ell, -3)),
            GreenElem::one(ell)
        );
    }
}
