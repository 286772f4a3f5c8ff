//! Syzygies of a nontrivial block in closed form, their linear-algebra
//! counterparts, almost split sequences and windows of the AR quiver.
//!
//! Every non-injective indecomposable is `Ω^{-k}(S(n))` for a unique orbit
//! coordinate `(k, n)`, so `Ω^{-1}` is the shift `k ↦ k + 1`.

mod ar;
mod oracle;

pub use ar::{ar_window, ARWindowGraph, ARWindowJson};
pub use oracle::{omega_inv_oracle, omega_oracle};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quantum::{BlockForm, ComoduleLabel, Family, RootParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrbitCoord {
    pub k: i64,
    pub n: usize,
}

impl OrbitCoord {
    pub fn new(k: i64, n: usize) -> Self {
        OrbitCoord { k, n }
    }

    pub fn shift(self, by: i64) -> Self {
        OrbitCoord {
            k: self.k + by,
            n: self.n,
        }
    }
}

fn injective_error(label: ComoduleLabel) -> Error {
    Error::domain(format!("{label} is injective and has no orbit coordinate"))
}

pub fn orbit_of(label: ComoduleLabel, p: RootParams) -> Result<OrbitCoord> {
    let (t, s, family) = match label.block_form(p) {
        BlockForm::Simple { n, .. } => return Ok(OrbitCoord::new(0, n)),
        BlockForm::String { family, t, s, .. } => (t as i64, s as i64, family),
        _ => return Err(injective_error(label)),
    };
    let (k, n) = if family.even_span() {
        ((t - s) / 2, (t + s) / 2)
    } else {
        ((t + s + 1) / 2, (t - s - 1) / 2)
    };
    let k = if matches!(family, Family::MPrime | Family::NPrime) {
        -k
    } else {
        k
    };
    Ok(OrbitCoord::new(k, n as usize))
}

/// The string label at an orbit coordinate of the block with base `base`.
pub fn label_of(c: OrbitCoord, base: u64, p: RootParams) -> ComoduleLabel {
    let (k, n) = (c.k.unsigned_abs() as usize, c.n);
    if k == 0 {
        return ComoduleLabel::simple_at(p, base, n);
    }
    let (family, t, s) = if k <= n {
        (Family::M, n + k, n - k)
    } else {
        (Family::N, k + n, k - n - 1)
    };
    let family = if c.k < 0 { family.dual() } else { family };
    ComoduleLabel::String { family, base, t, s }
}

fn block_base(label: ComoduleLabel, p: RootParams) -> Result<u64> {
    label
        .block_form(p)
        .base()
        .ok_or_else(|| injective_error(label))
}

/// `Ω^j(label)`; negative `j` gives cosyzygies.
pub fn omega_power(label: ComoduleLabel, j: i64, p: RootParams) -> Result<ComoduleLabel> {
    let c = orbit_of(label, p)?;
    Ok(label_of(c.shift(-j), block_base(label, p)?, p))
}

pub fn omega(label: ComoduleLabel, p: RootParams) -> Result<ComoduleLabel> {
    omega_power(label, 1, p)
}

pub fn omega_inv(label: ComoduleLabel, p: RootParams) -> Result<ComoduleLabel> {
    omega_power(label, -1, p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlmostSplitSeq {
    pub left: ComoduleLabel,
    pub middle: Vec<ComoduleLabel>,
    pub right: ComoduleLabel,
}

impl AlmostSplitSeq {
    pub fn render(&self) -> String {
        let middle: Vec<String> = self.middle.iter().map(ToString::to_string).collect();
        format!(
            "0 → {} → {} → {} → 0",
            self.left,
            middle.join(" ⊕ "),
            self.right
        )
    }
}

/// The almost split sequence ending in `right = Ω^{i-1}(S(n))`:
/// `Ω^{i+1}S(n) → Ω^i S(n-1) ⊕ Ω^i S(n+1) (⊕ I_n if i = 0) → Ω^{i-1}S(n)`.
pub fn almost_split(right: ComoduleLabel, p: RootParams) -> Result<AlmostSplitSeq> {
    let c = orbit_of(right, p)?;
    let base = block_base(right, p)?;
    let mut middle = Vec::new();
    if c.n > 0 {
        middle.push(label_of(OrbitCoord::new(c.k - 1, c.n - 1), base, p));
    }
    middle.push(label_of(OrbitCoord::new(c.k - 1, c.n + 1), base, p));
    if c.k == 1 {
        middle.push(ComoduleLabel::injective_at(p, base, c.n));
    }
    Ok(AlmostSplitSeq {
        left: label_of(c.shift(-2), base, p),
        middle,
        right,
    })
}
