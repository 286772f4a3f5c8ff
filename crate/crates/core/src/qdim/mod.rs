//! Quantum dimensions in `ℤ[ζ]`, tensor products of restricted simples and
//! the stable Green ring.

mod chebyshev;
mod cyclotomic;
mod green;

pub use chebyshev::{chebyshev_u, poly_mul, rescale_half, rescaled_relation, x_n};
pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};
pub use green::{green_class, green_mul, green_reduce, GreenElem, Monomial};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quantum::{BlockForm, ComoduleLabel, RootParams};

/// The balanced quantum integer `[n]_ζ = ζ^{n-1} + ζ^{n-3} + ... + ζ^{1-n}`.
pub fn q_int(n: u64, ell: u64) -> Cyclotomic {
    let zero = Cyclotomic::zero(ell);
    let n = n as i64;
    (0..n).fold(zero, |acc, k| &acc + &acc.power(n - 1 - 2 * k))
}

/// `qdim L(r) = (r1 + 1)[r0 + 1]_ζ`.
pub fn qdim_simple(r: u64, p: RootParams) -> Cyclotomic {
    let (r1, r0) = p.decompose(r);
    q_int(r0 + 1, p.ell()).scale(r1 as i64 + 1)
}

fn sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Closed form: `[r0 + 1]_ζ Σ_{i=s}^{t} (-1)^i (i + 1)` on block vertices.
pub fn qdim(label: ComoduleLabel, p: RootParams) -> Cyclotomic {
    let unit = |base: u64| q_int(base + 1, p.ell());
    match label.block_form(p) {
        BlockForm::Steinberg(r) => qdim_simple(r, p),
        BlockForm::Simple { base, n } => unit(base).scale(sign(n) * (n as i64 + 1)),
        BlockForm::String { base, t, s, .. } => {
            let c: i64 = (s..=t).map(|i| sign(i) * (i as i64 + 1)).sum();
            unit(base).scale(c)
        }
        BlockForm::Injective { base, n } => {
            let nn = n as i64;
            let mut c = 2 * sign(n) * (nn + 1) + sign(n + 1) * (nn + 2);
            if n > 0 {
                c += sign(n - 1) * nn;
            }
            unit(base).scale(c)
        }
    }
}

/// The trace of `K`: `Σ ζ^μ` over the weights of every composition factor.
pub fn qdim_trace_oracle(label: ComoduleLabel, p: RootParams) -> Cyclotomic {
    let zero = Cyclotomic::zero(p.ell());
    label
        .composition_factors(p)
        .into_iter()
        .flat_map(|r| p.weights(r))
        .fold(zero, |acc, mu| &acc + &acc.power(mu))
}

/// `L(a) ⊗ L(b)` for restricted `a, b`: simples first, then injectives.
pub fn decompose_tensor(a: u64, b: u64, p: RootParams) -> Result<Vec<ComoduleLabel>> {
    let ell = p.ell();
    if a >= ell || b >= ell {
        return Err(Error::domain(format!(
            "tensor factors must be restricted (< {ell}), got {a} and {b}"
        )));
    }
    let (a, b) = if a >= b {
        (a as i64, b as i64)
    } else {
        (b as i64, a as i64)
    };
    let ell = ell as i64;
    let mut out = Vec::new();
    if a + b < ell {
        out.extend(
            (a - b..=a + b)
                .step_by(2)
                .map(|t| ComoduleLabel::Simple(t as u64)),
        );
        return Ok(out);
    }
    let (a2, b2) = (ell - a - 2, ell - b - 2);
    let mut t = a - b;
    while t <= a2 + b2 {
        out.push(ComoduleLabel::Simple(t as u64));
        t += 2;
    }
    let first = if (ell - 1 - (a + b)) % 2 == 0 {
        ell - 1
    } else {
        ell
    };
    for t in (first..=a + b).step_by(2) {
        let r = if t == ell - 1 {
            t as u64
        } else {
            p.sigma(t as u64)?
        };
        out.push(ComoduleLabel::Injective(r));
    }
    Ok(out)
}

/// `I(r) ≅ I(r0) ⊗ L(r1·ℓ)` with its dimension count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TensorFactorization {
    pub r0: u64,
    pub r1: u64,
    pub dim_injective: u64,
    pub dim_restricted: u64,
    pub dim_twist: u64,
}

impl TensorFactorization {
    pub fn certified(&self) -> bool {
        self.dim_injective == self.dim_restricted * self.dim_twist
    }
}

pub fn injective_tensor_factorization(r: u64, p: RootParams) -> Result<TensorFactorization> {
    if p.is_steinberg(r) {
        return Err(Error::domain(format!(
            "I({r}) = L({r}) is of Steinberg type"
        )));
    }
    let (r1, r0) = p.decompose(r);
    Ok(TensorFactorization {
        r0,
        r1,
        dim_injective: ComoduleLabel::Injective(r).dim(p),
        dim_restricted: ComoduleLabel::Injective(r0).dim(p),
        dim_twist: p.simple_dim(r1 * p.ell()),
    })
}
