//! Syzygies computed directly: cokernel of an injective hull and kernel of a
//! projective cover, both by exact linear algebra.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};
use crate::quiver::{CoalgebraPresentation, VertexId};
use crate::string::{hom_basis, injective_comodule, is_projective, Homomorphism, Representation};

/// Vertices within one arrow of the truncation boundary.
fn near_boundary(b: &CoalgebraPresentation) -> BTreeSet<VertexId> {
    let q = b.quiver();
    let mut out = b.boundary().clone();
    for a in q.arrows() {
        if b.boundary().contains(&a.source) {
            out.insert(a.target);
        }
        if b.boundary().contains(&a.target) {
            out.insert(a.source);
        }
    }
    out
}

fn check_padding(m: &Representation, b: &CoalgebraPresentation) -> Result<()> {
    let near = near_boundary(b);
    if let Some(v) = m.support().into_iter().find(|v| near.contains(v)) {
        return Err(Error::WindowOverflow(format!(
            "vertex {} is within distance 1 of the truncation boundary",
            b.quiver().vertex_name(v)
        )));
    }
    Ok(())
}

/// Solves `Σ λ_k A_k = rhs` for the coefficients of a homomorphism basis,
/// where `A_k` is the column obtained by applying basis element `k`.
fn combine(
    basis: &[Homomorphism],
    apply: impl Fn(&Homomorphism) -> Vec<Rational>,
    rhs: &[Rational],
) -> Option<Homomorphism> {
    if basis.is_empty() {
        return None;
    }
    let columns: Vec<Vec<Rational>> = basis.iter().map(apply).collect();
    let a = Matrix::from_columns(&columns, rhs.len());
    let lambda = a.solve_vec(rhs)?;
    Some(Homomorphism::linear_combination(basis, &lambda))
}

/// `Ω^{-1}(M)`: the cokernel of an injective hull `M → ⊕ I(g)`.
///
/// The embedding is found by requiring that the `i`-th socle basis vector at
/// `g` goes to the socle generator of the `i`-th copy of `I(g)`.
pub fn omega_inv_oracle(m: &Representation, b: &CoalgebraPresentation) -> Result<Representation> {
    let q = b.quiver().clone();
    if m.is_zero() {
        return Ok(m.clone());
    }
    check_padding(m, b)?;
    let soc = m.socle();
    let mut injectives: BTreeMap<VertexId, Representation> = BTreeMap::new();
    let mut summands = Vec::new();
    let mut maps: Vec<Homomorphism> = Vec::new();
    for g in soc.rep.support() {
        let inj = injectives
            .entry(g)
            .or_insert_with(|| injective_comodule(b, g).rep)
            .clone();
        let z = inj.socle().inclusion[g].column(0);
        let basis = hom_basis(m, &inj);
        let socle_vectors = soc.inclusion[g].columns();
        for j in 0..socle_vectors.len() {
            let rhs: Vec<Rational> = (0..socle_vectors.len())
                .flat_map(|i| {
                    z.iter()
                        .map(move |x| if i == j { x.clone() } else { Rational::zero() })
                })
                .collect();
            let f = combine(
                &basis,
                |h| {
                    socle_vectors
                        .iter()
                        .flat_map(|u| h.blocks[g].mul_vec(u))
                        .collect()
                },
                &rhs,
            )
            .ok_or_else(|| {
                Error::NoEmbedding(format!(
                    "no map to I({}) extends the socle",
                    q.vertex_name(g)
                ))
            })?;
            maps.push(f);
            summands.push(inj.clone());
        }
    }
    let hull = Representation::direct_sum_all(q.clone(), &summands);
    let blocks: Vec<Matrix> = (0..q.vertex_count())
        .map(|v| {
            maps.iter().fold(Matrix::zeros(0, m.dims()[v]), |acc, f| {
                acc.vstack(&f.blocks[v])
            })
        })
        .collect();
    if blocks.iter().any(|f| f.rank() != f.cols()) {
        return Err(Error::NoEmbedding("the hull map is not injective".into()));
    }
    Ok(hull.quotient(&blocks)?.rep)
}

/// `Ω(M)`: the kernel of a projective cover `⊕ P(x) → M`, using that the
/// projective covers are injective comodules of the window.
pub fn omega_oracle(m: &Representation, b: &CoalgebraPresentation) -> Result<Representation> {
    let q = b.quiver().clone();
    if m.is_zero() {
        return Ok(m.clone());
    }
    check_padding(m, b)?;
    let top = m.top();
    let mut summands = Vec::new();
    let mut maps: Vec<Homomorphism> = Vec::new();
    for x in top.rep.support() {
        if !is_projective(b, x) {
            return Err(Error::NoEmbedding(format!(
                "I({}) is not projective in this window",
                q.vertex_name(x)
            )));
        }
        let proj = injective_comodule(b, x).rep;
        let y = proj.top().section[x].column(0);
        let basis = hom_basis(&proj, m);
        for target in top.section[x].columns() {
            let f = combine(&basis, |h| h.blocks[x].mul_vec(&y), &target).ok_or_else(|| {
                Error::NoEmbedding(format!(
                    "no map from P({}) reaches the top",
                    q.vertex_name(x)
                ))
            })?;
            maps.push(f);
            summands.push(proj.clone());
        }
    }
    let cover = Representation::direct_sum_all(q.clone(), &summands);
    let f = Homomorphism {
        blocks: (0..q.vertex_count())
            .map(|v| {
                maps.iter().fold(Matrix::zeros(m.dims()[v], 0), |acc, g| {
                    acc.hstack(&g.blocks[v])
                })
            })
            .collect(),
    };
    if f.blocks.iter().any(|blk| blk.rank() != blk.rows()) {
        return Err(Error::NoEmbedding("the cover map is not surjective".into()));
    }
    Ok(cover.kernel_of(&f).rep)
}
