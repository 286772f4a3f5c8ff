use std::fmt;

use serde::{Deserialize, Serialize};

use super::RootParams;
use crate::error::{Error, Result};

/// The four string families of a nontrivial block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    M,
    MPrime,
    N,
    NPrime,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::M => "M",
            Family::MPrime => "M'",
            Family::N => "N",
            Family::NPrime => "N'",
        }
    }

    /// `M` and `M'` span an even number of steps, `N` and `N'` an odd number.
    pub fn even_span(self) -> bool {
        matches!(self, Family::M | Family::MPrime)
    }

    /// Whether the defining word starts (in traversal order) with an inverse `b`.
    pub fn starts_inverse(self) -> bool {
        matches!(self, Family::M | Family::NPrime)
    }

    pub fn dual(self) -> Family {
        match self {
            Family::M => Family::MPrime,
            Family::MPrime => Family::M,
            Family::N => Family::NPrime,
            Family::NPrime => Family::N,
        }
    }
}

/// Symbolic name of an indecomposable comodule.
///
/// `Simple`, `Weyl`, `DualWeyl` and `Injective` carry global weights; string
/// labels carry a block base and block-local vertices `t ≥ s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComoduleLabel {
    Simple(u64),
    Weyl(u64),
    DualWeyl(u64),
    Injective(u64),
    String {
        family: Family,
        base: u64,
        t: usize,
        s: usize,
    },
}

/// A label resolved against its block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockForm {
    /// A weight with `r0 = ℓ - 1`: simple, Weyl and injective at once.
    Steinberg(u64),
    Simple {
        base: u64,
        n: usize,
    },
    Injective {
        base: u64,
        n: usize,
    },
    /// Always with `t > s`.
    String {
        family: Family,
        base: u64,
        t: usize,
        s: usize,
    },
}

impl BlockForm {
    pub fn base(self) -> Option<u64> {
        match self {
            BlockForm::Steinberg(_) => None,
            BlockForm::Simple { base, .. }
            | BlockForm::Injective { base, .. }
            | BlockForm::String { base, .. } => Some(base),
        }
    }

    /// Block vertices with their multiplicity in a composition series.
    pub fn vertex_counts(self) -> Vec<(usize, usize)> {
        match self {
            BlockForm::Steinberg(_) => Vec::new(),
            BlockForm::Simple { n, .. } => vec![(n, 1)],
            BlockForm::Injective { n: 0, .. } => vec![(0, 2), (1, 1)],
            BlockForm::Injective { n, .. } => vec![(n - 1, 1), (n, 2), (n + 1, 1)],
            BlockForm::String { t, s, .. } => (s..=t).map(|v| (v, 1)).collect(),
        }
    }

    /// Largest block vertex touched.
    pub fn max_vertex(self) -> usize {
        self.vertex_counts()
            .iter()
            .map(|&(v, _)| v)
            .max()
            .unwrap_or(0)
    }
}

impl ComoduleLabel {
    /// A validated string label; `M(i,i)` and `M'(i,i)` become simples.
    pub fn string(p: RootParams, family: Family, base: u64, t: usize, s: usize) -> Result<Self> {
        p.check_base(base)?;
        if t < s {
            return Err(Error::domain(format!(
                "{}({t},{s}) needs t ≥ s",
                family.name()
            )));
        }
        let even = (t - s).is_multiple_of(2);
        if family.even_span() != even {
            let need = if family.even_span() { "even" } else { "odd" };
            return Err(Error::domain(format!(
                "{}({t},{s}): t − s must be {need}",
                family.name()
            )));
        }
        if t == s {
            return Ok(ComoduleLabel::Simple(p.vertex_weight(base, t)));
        }
        Ok(ComoduleLabel::String { family, base, t, s })
    }

    pub fn simple_at(p: RootParams, base: u64, n: usize) -> Self {
        ComoduleLabel::Simple(p.vertex_weight(base, n))
    }

    pub fn injective_at(p: RootParams, base: u64, n: usize) -> Self {
        ComoduleLabel::Injective(p.vertex_weight(base, n))
    }

    pub fn block_form(self, p: RootParams) -> BlockForm {
        let located = |r: u64| p.weight_vertex(r);
        match self {
            ComoduleLabel::Simple(r) => match located(r) {
                Some((base, n)) => BlockForm::Simple { base, n },
                None => BlockForm::Steinberg(r),
            },
            ComoduleLabel::Injective(r) => match located(r) {
                Some((base, n)) => BlockForm::Injective { base, n },
                None => BlockForm::Steinberg(r),
            },
            ComoduleLabel::Weyl(r) | ComoduleLabel::DualWeyl(r) => match located(r) {
                None => BlockForm::Steinberg(r),
                Some((base, 0)) => BlockForm::Simple { base, n: 0 },
                Some((base, n)) => {
                    let family = if matches!(self, ComoduleLabel::Weyl(_)) {
                        Family::NPrime
                    } else {
                        Family::N
                    };
                    BlockForm::String {
                        family,
                        base,
                        t: n,
                        s: n - 1,
                    }
                }
            },
            ComoduleLabel::String { family, base, t, s } => {
                BlockForm::String { family, base, t, s }
            }
        }
    }

    /// The label naming a block form; Weyl modules come back as `N'`.
    pub fn from_block_form(p: RootParams, f: BlockForm) -> Self {
        match f {
            BlockForm::Steinberg(r) => ComoduleLabel::Simple(r),
            BlockForm::Simple { base, n } => ComoduleLabel::simple_at(p, base, n),
            BlockForm::Injective { base, n } => ComoduleLabel::injective_at(p, base, n),
            BlockForm::String { family, base, t, s } => {
                ComoduleLabel::String { family, base, t, s }
            }
        }
    }

    pub fn is_injective(self, p: RootParams) -> bool {
        matches!(
            self.block_form(p),
            BlockForm::Injective { .. } | BlockForm::Steinberg(_)
        )
    }

    /// The contravariant duality exchanging `a_i` with `b_i⁻¹`.
    pub fn duality(self) -> Self {
        match self {
            ComoduleLabel::Weyl(r) => ComoduleLabel::DualWeyl(r),
            ComoduleLabel::DualWeyl(r) => ComoduleLabel::Weyl(r),
            ComoduleLabel::String { family, base, t, s } => ComoduleLabel::String {
                family: family.dual(),
                base,
                t,
                s,
            },
            other => other,
        }
    }

    /// Composition factors as weights, in ascending order.
    pub fn composition_factors(self, p: RootParams) -> Vec<u64> {
        let mut out: Vec<u64> = match self.block_form(p) {
            BlockForm::Steinberg(r) => vec![r],
            f => {
                let base = f.base().expect("nontrivial");
                f.vertex_counts()
                    .into_iter()
                    .flat_map(|(v, m)| std::iter::repeat_n(p.vertex_weight(base, v), m))
                    .collect()
            }
        };
        out.sort_unstable();
        out
    }

    pub fn dim(self, p: RootParams) -> u64 {
        match self {
            ComoduleLabel::Weyl(r) | ComoduleLabel::DualWeyl(r) => r + 1,
            ComoduleLabel::Injective(r) if !p.is_steinberg(r) => {
                2 * p.ell() * (p.decompose(r).0 + 1)
            }
            _ => self
                .composition_factors(p)
                .into_iter()
                .map(|r| p.simple_dim(r))
                .sum(),
        }
    }

    /// Socle series as weights, socle first.
    pub fn socle_layers(self, p: RootParams) -> Vec<Vec<u64>> {
        let w = |n: usize, base: u64| p.vertex_weight(base, n);
        match self.block_form(p) {
            BlockForm::Steinberg(r) => vec![vec![r]],
            BlockForm::Simple { base, n } => vec![vec![w(n, base)]],
            BlockForm::Injective { base, n } => {
                let mut middle = Vec::new();
                if n > 0 {
                    middle.push(w(n - 1, base));
                }
                middle.push(w(n + 1, base));
                vec![vec![w(n, base)], middle, vec![w(n, base)]]
            }
            BlockForm::String { family, base, t, s } => {
                // an initial inverse letter makes vertex s a sink
                let start_sink = family.starts_inverse();
                let (mut socle, mut top) = (Vec::new(), Vec::new());
                for v in s..=t {
                    if ((v - s) % 2 == 0) == start_sink {
                        socle.push(w(v, base));
                    } else {
                        top.push(w(v, base));
                    }
                }
                socle.sort_unstable();
                top.sort_unstable();
                vec![socle, top]
            }
        }
    }

    /// Renders in the label grammar.
    pub fn render(self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ComoduleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ComoduleLabel::Simple(r) => write!(f, "L({r})"),
            ComoduleLabel::Weyl(r) => write!(f, "V({r})"),
            ComoduleLabel::DualWeyl(r) => write!(f, "coV({r})"),
            ComoduleLabel::Injective(r) => write!(f, "I({r})"),
            ComoduleLabel::String { family, base, t, s } => {
                write!(f, "{}({t},{s})@b{base}", family.name())
            }
        }
    }
}

impl Serialize for ComoduleLabel {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(' ') {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(Error::parse(format!("expected {token:?}"), self.char_pos()))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let digits: usize = self.text[self.pos..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(Error::parse(
                "expected a nonnegative integer",
                self.char_pos(),
            ));
        }
        let value = self.text[self.pos..self.pos + digits]
            .parse()
            .map_err(|_| Error::parse("integer too large", self.char_pos()))?;
        self.pos += digits;
        Ok(value)
    }

    /// Position in characters, for caret diagnostics.
    fn char_pos(&self) -> usize {
        self.text[..self.pos].chars().count()
    }
}

/// Parses `L(r)`, `V(r)`, `coV(r)`, `I(r)` and `M(t,s)@b<r0>` style labels
/// (families `M`, `M'`, `N`, `N'`).
pub fn parse_label(text: &str, p: RootParams) -> Result<ComoduleLabel> {
    let mut c = Cursor { text, pos: 0 };
    let label = parse_inner(&mut c, p)?;
    c.skip_ws();
    if c.pos != text.len() {
        return Err(Error::parse("unexpected trailing input", c.char_pos()));
    }
    Ok(label)
}

fn parse_inner(c: &mut Cursor<'_>, p: RootParams) -> Result<ComoduleLabel> {
    let weight = |c: &mut Cursor<'_>, make: fn(u64) -> ComoduleLabel| -> Result<ComoduleLabel> {
        c.expect("(")?;
        let r = c.number()?;
        c.expect(")")?;
        Ok(make(r))
    };
    if c.eat("coV") {
        return weight(c, ComoduleLabel::DualWeyl);
    }
    if c.eat("L") {
        return weight(c, ComoduleLabel::Simple);
    }
    if c.eat("V") {
        return weight(c, ComoduleLabel::Weyl);
    }
    if c.eat("I") {
        return weight(c, ComoduleLabel::Injective);
    }
    let family_at = c.char_pos();
    let family = if c.eat("M") {
        Family::M
    } else if c.eat("N") {
        Family::N
    } else {
        return Err(Error::parse(
            "expected one of L, V, coV, I, M, M', N, N'",
            family_at,
        ));
    };
    let primed = c.eat("'") || c.eat("′");
    let family = match (family, primed) {
        (Family::M, true) => Family::MPrime,
        (Family::N, true) => Family::NPrime,
        (f, _) => f,
    };
    c.expect("(")?;
    let args_at = c.char_pos();
    let t = c.number()? as usize;
    c.expect(",")?;
    let s = c.number()? as usize;
    c.expect(")")?;
    c.expect("@b")?;
    let base_at = c.char_pos();
    let base = c.number()?;
    if base + 1 >= p.ell() {
        return Err(Error::parse(
            format!("block base must lie in [0, {}]", p.ell() - 2),
            base_at,
        ));
    }
    ComoduleLabel::string(p, family, base, t, s).map_err(|e| match e {
        Error::Domain(msg) => Error::parse(msg, args_at),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5() -> RootParams {
        RootParams::new(5).unwrap()
    }

    #[test]
    fn parse_and_render() {
        let p = p5();
        for text in [
            "L(7)",
            "V(7)",
            "coV(3)",
            "I(7)",
            "M(3,1)@b1",
            "M'(3,1)@b1",
            "N(2,1)@b0",
            "N'(1,0)@b0",
        ] {
            assert_eq!(parse_label(text, p).unwrap().to_string(), text);
        }
        assert_eq!(
            parse_label("M(3,1)@b1", p).unwrap(),
            ComoduleLabel::String {
                family: Family::M,
                base: 1,
                t: 3,
                s: 1
            }
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        let p = p5();
        match parse_label("M(3,0)@b1", p) {
            Err(Error::Parse { position, message }) => {
                assert_eq!(position, 2);
                assert!(message.contains("even"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_label("Q(1)", p),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(
            parse_label("L(1", p),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_label("M(1,1)@b4", p),
            Err(Error::Parse { position: 8, .. })
        ));
    }

    #[test]
    fn diagonal_is_simple() {
        let p = p5();
        assert_eq!(
            parse_label("M(2,2)@b1", p).unwrap(),
            ComoduleLabel::Simple(11)
        );
    }

    #[test]
    fn socle_layers_and_dims() {
        let p = p5();
        assert_eq!(
            ComoduleLabel::Injective(7).socle_layers(p),
            vec![vec![7], vec![1, 11], vec![7]]
        );
        assert_eq!(
            ComoduleLabel::Injective(1).socle_layers(p),
            vec![vec![1], vec![7], vec![1]]
        );
        assert_eq!(
            ComoduleLabel::Weyl(7).socle_layers(p),
            vec![vec![1], vec![7]]
        );
        assert_eq!(ComoduleLabel::Weyl(7).dim(p), 8);
        assert_eq!(ComoduleLabel::Injective(7).dim(p), 20);
        assert_eq!(ComoduleLabel::Simple(7).dim(p), 6);
        assert_eq!(ComoduleLabel::Weyl(4).socle_layers(p), vec![vec![4]]);
        assert_eq!(ComoduleLabel::Weyl(3).socle_layers(p), vec![vec![3]]);
    }

    #[test]
    fn composition_factors_examples() {
        let p = p5();
        let m20 = ComoduleLabel::string(p, Family::M, 1, 2, 0).unwrap();
        assert_eq!(m20.composition_factors(p), vec![1, 7, 11]);
        assert_eq!(
            ComoduleLabel::Injective(7).composition_factors(p),
            vec![1, 7, 7, 11]
        );
        // M(2,0) has top at vertex 1
        assert_eq!(m20.socle_layers(p), vec![vec![1, 11], vec![7]]);
    }

    #[test]
    fn duality_examples() {
        let p = p5();
        let m = ComoduleLabel::string(p, Family::M, 1, 3, 1).unwrap();
        assert_eq!(m.duality().to_string(), "M'(3,1)@b1");
        let n = ComoduleLabel::string(p, Family::N, 1, 2, 1).unwrap();
        assert_eq!(n.duality().to_string(), "N'(2,1)@b1");
        assert_eq!(
            ComoduleLabel::Injective(7).duality(),
            ComoduleLabel::Injective(7)
        );
    }
}
