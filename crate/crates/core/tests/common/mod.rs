#![allow(dead_code)]

use qcomod::quantum::{ComoduleLabel, Family, RootParams};

pub fn params(ell: u64) -> RootParams {
    RootParams::new(ell).unwrap()
}

/// Every non-injective label of a block with all vertices at most `tmax`:
/// simples first, then `M, M', N, N'` by `(t, s)`.
pub fn non_injective_labels(p: RootParams, base: u64, tmax: usize) -> Vec<ComoduleLabel> {
    let mut out: Vec<ComoduleLabel> = (0..=tmax)
        .map(|n| ComoduleLabel::simple_at(p, base, n))
        .collect();
    for family in [Family::M, Family::MPrime, Family::N, Family::NPrime] {
        for t in 1..=tmax {
            for s in 0..t {
                if let Ok(l @ ComoduleLabel::String { .. }) =
                    ComoduleLabel::string(p, family, base, t, s)
                {
                    out.push(l);
                }
            }
        }
    }
    out
}

/// Every label touching block vertices at most `tmax`, over all blocks,
/// plus Weyl, dual Weyl and Steinberg-type weights in the same range.
pub fn all_labels(p: RootParams, tmax: usize) -> Vec<ComoduleLabel> {
    let mut out = Vec::new();
    for base in 0..p.ell() - 1 {
        out.extend(non_injective_labels(p, base, tmax));
        out.extend((0..=tmax).map(|n| ComoduleLabel::injective_at(p, base, n)));
    }
    for r in 0..(tmax as u64 + 1) * p.ell() {
        out.push(ComoduleLabel::Weyl(r));
        out.push(ComoduleLabel::DualWeyl(r));
        if p.is_steinberg(r) {
            out.push(ComoduleLabel::Simple(r));
            out.push(ComoduleLabel::Injective(r));
        }
    }
    out
}
