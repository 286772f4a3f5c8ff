//! The stable Green ring `ℤ[x, y, w^{±1}] / (x_{ℓ-1})` of one root of unity.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::chebyshev::x_n;
use crate::quantum::{BlockForm, ComoduleLabel, RootParams};
use crate::syzygy::orbit_of;

/// Exponents of `w^m x^i y^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial {
    pub w: i64,
    pub x: usize,
    pub y: usize,
}

impl Monomial {
    pub fn new(w: i64, x: usize, y: usize) -> Self {
        Monomial { w, x, y }
    }

    fn times(self, o: Monomial) -> Monomial {
        Monomial::new(self.w + o.w, self.x + o.x, self.y + o.y)
    }

    fn render(self) -> String {
        let mut parts = Vec::new();
        for (name, e) in [("w", self.w), ("x", self.x as i64), ("y", self.y as i64)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("·")
    }
}

/// A reduced element: every `x`-exponent is below `ℓ - 1` and no stored
/// coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenElem {
    ell: u64,
    terms: BTreeMap<Monomial, i64>,
}

/// Reduces raw terms modulo `x_{ℓ-1}`.
pub fn green_reduce(ell: u64, raw: impl IntoIterator<Item = (Monomial, i64)>) -> GreenElem {
    let modulus = x_n(ell as usize - 1);
    let d = modulus.len() - 1;
    // x-polynomials grouped by (w, y)
    let mut groups: BTreeMap<(i64, usize), Vec<i64>> = BTreeMap::new();
    for (m, c) in raw {
        let v = groups.entry((m.w, m.y)).or_default();
        if v.len() <= m.x {
            v.resize(m.x + 1, 0);
        }
        v[m.x] += c;
    }
    let mut terms = BTreeMap::new();
    for ((w, y), mut v) in groups {
        for k in (d..v.len()).rev() {
            let c = v[k];
            if c != 0 {
                for (i, &mi) in modulus.iter().enumerate() {
                    v[k - d + i] -= c * mi;
                }
            }
        }
        v.truncate(d);
        for (x, c) in v.into_iter().enumerate() {
            if c != 0 {
                terms.insert(Monomial::new(w, x, y), c);
            }
        }
    }
    GreenElem { ell, terms }
}

impl GreenElem {
    pub fn zero(ell: u64) -> Self {
        GreenElem {
            ell,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(ell: u64, m: Monomial, c: i64) -> Self {
        green_reduce(ell, [(m, c)])
    }

    pub fn one(ell: u64) -> Self {
        Self::monomial(ell, Monomial::new(0, 0, 0), 1)
    }

    pub fn x(ell: u64) -> Self {
        Self::monomial(ell, Monomial::new(0, 1, 0), 1)
    }

    pub fn y(ell: u64) -> Self {
        Self::monomial(ell, Monomial::new(0, 0, 1), 1)
    }

    /// `w^m`; `m = -1` gives `w⁻¹`.
    pub fn w_pow(ell: u64, m: i64) -> Self {
        Self::monomial(ell, Monomial::new(m, 0, 0), 1)
    }

    /// `x_n(x)` in the ring.
    pub fn x_poly(ell: u64, n: usize) -> Self {
        green_reduce(
            ell,
            x_n(n)
                .into_iter()
                .enumerate()
                .map(|(i, c)| (Monomial::new(0, i, 0), c)),
        )
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &GreenElem) -> GreenElem {
        assert_eq!(self.ell, other.ell, "mixed roots of unity");
        green_reduce(
            self.ell,
            self.terms.iter().chain(&other.terms).map(|(&m, &c)| (m, c)),
        )
    }

    pub fn scale(&self, k: i64) -> GreenElem {
        green_reduce(self.ell, self.terms.iter().map(|(&m, &c)| (m, c * k)))
    }

    pub fn sub(&self, other: &GreenElem) -> GreenElem {
        self.add(&other.scale(-1))
    }
}

pub fn green_mul(u: &GreenElem, v: &GreenElem) -> GreenElem {
    assert_eq!(u.ell, v.ell, "mixed roots of unity");
    let raw = u
        .terms
        .iter()
        .flat_map(|(&m, &c)| v.terms.iter().map(move |(&n, &d)| (m.times(n), c * d)));
    green_reduce(u.ell, raw)
}

impl std::iter::Sum for GreenElem {
    fn sum<I: Iterator<Item = GreenElem>>(mut iter: I) -> GreenElem {
        let first = iter.next().expect("sum of at least one element");
        iter.fold(first, |acc, x| acc.add(&x))
    }
}

fn simple_class(r: u64, p: RootParams) -> GreenElem {
    let (r1, r0) = p.decompose(r);
    let xs = x_n(r0 as usize);
    let ys = x_n(r1 as usize);
    let raw = xs.iter().enumerate().flat_map(|(i, &a)| {
        ys.iter()
            .enumerate()
            .map(move |(j, &b)| (Monomial::new(0, i, j), a * b))
    });
    green_reduce(p.ell(), raw)
}

/// The stable class of an indecomposable; injectives vanish.
pub fn green_class(label: ComoduleLabel, p: RootParams) -> GreenElem {
    match label.block_form(p) {
        BlockForm::Steinberg(_) | BlockForm::Injective { .. } => GreenElem::zero(p.ell()),
        BlockForm::Simple { .. } => match label {
            ComoduleLabel::Simple(r) => simple_class(r, p),
            _ => green_class(ComoduleLabel::from_block_form(p, label.block_form(p)), p),
        },
        BlockForm::String { base, .. } => {
            let c = orbit_of(label, p).expect("string labels have orbit coordinates");
            let s = simple_class(p.vertex_weight(base, c.n), p);
            green_mul(&GreenElem::w_pow(p.ell(), -c.k), &s)
        }
    }
}

impl fmt::Display for GreenElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, &c)) in self.terms.iter().rev().enumerate() {
            let body = m.render();
            let sign = if c < 0 { "-" } else { "+" };
            match idx {
                0 if c < 0 => write!(f, "-")?,
                0 => {}
                _ => write!(f, " {sign} ")?,
            }
            let a = c.abs();
            match (a, body.is_empty()) {
                (_, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{body}")?,
                _ => write!(f, "{a}·{body}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for GreenElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            w: i64,
            x: usize,
            y: usize,
            coeff: i64,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(m, &c)| Term {
                w: m.w,
                x: m.x,
                y: m.y,
                coeff: c,
            })
            .collect();
        terms.serialize(serializer)
    }
}
