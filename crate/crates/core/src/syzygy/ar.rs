use std::collections::BTreeMap;
use std::fmt::Write as _;

use petgraph::algo::connected_components;
use petgraph::graph::DiGraph;
use serde::{Deserialize, Serialize};

use super::{label_of, OrbitCoord};
use crate::error::{Error, Result};
use crate::quantum::{parse_label, ComoduleLabel, RootParams};

/// A finite piece of the AR quiver of one nontrivial block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ARWindowGraph {
    pub params: RootParams,
    pub base: u64,
    pub nodes: Vec<ComoduleLabel>,
    /// Pairs of indices into `nodes`, sorted.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ARWindowJson {
    pub ell: u64,
    pub block: u64,
    pub nodes: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

/// Nodes `Ω^{-k}S(n)` for `k` in `[kmin, kmax]` and `n ≤ nmax`, mesh arrows
/// `(k-1, n±1) → (k, n)`, and `ΩS(n) → I_n → Ω^{-1}S(n)` when both ends are
/// present.
pub fn ar_window(
    p: RootParams,
    base: u64,
    kmin: i64,
    kmax: i64,
    nmax: usize,
) -> Result<ARWindowGraph> {
    p.check_base(base)?;
    let mut index: BTreeMap<NodeKey, usize> = BTreeMap::new();
    let mut keys = Vec::new();
    if kmin <= kmax {
        for k in kmin..=kmax {
            for n in 0..=nmax {
                keys.push(NodeKey::Orbit(OrbitCoord::new(k, n)));
            }
        }
        if kmin <= -1 && kmax >= 1 {
            keys.extend((0..=nmax).map(NodeKey::Injective));
        }
    }
    keys.sort();
    for (i, key) in keys.iter().enumerate() {
        index.insert(*key, i);
    }
    let mut edges = Vec::new();
    for key in &keys {
        match *key {
            NodeKey::Orbit(c) => {
                for n in [c.n.checked_sub(1), Some(c.n + 1)].into_iter().flatten() {
                    if let Some(&from) = index.get(&NodeKey::Orbit(OrbitCoord::new(c.k - 1, n))) {
                        edges.push((from, index[key]));
                    }
                }
            }
            NodeKey::Injective(n) => {
                let i = index[key];
                edges.push((index[&NodeKey::Orbit(OrbitCoord::new(-1, n))], i));
                edges.push((i, index[&NodeKey::Orbit(OrbitCoord::new(1, n))]));
            }
        }
    }
    edges.sort_unstable();
    let nodes = keys
        .iter()
        .map(|key| match *key {
            NodeKey::Orbit(c) => label_of(c, base, p),
            NodeKey::Injective(n) => ComoduleLabel::injective_at(p, base, n),
        })
        .collect();
    Ok(ARWindowGraph {
        params: p,
        base,
        nodes,
        edges,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum NodeKey {
    Orbit(OrbitCoord),
    Injective(usize),
}

impl ARWindowGraph {
    pub fn to_petgraph(&self) -> DiGraph<ComoduleLabel, ()> {
        let mut g = DiGraph::new();
        let ids: Vec<_> = self.nodes.iter().map(|l| g.add_node(*l)).collect();
        for &(a, b) in &self.edges {
            g.add_edge(ids[a], ids[b], ());
        }
        g
    }

    pub fn component_count(&self) -> usize {
        connected_components(&self.to_petgraph())
    }

    pub fn in_degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|e| e.1 == i).count()
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == i).count()
    }

    pub fn node_index(&self, label: ComoduleLabel) -> Option<usize> {
        self.nodes.iter().position(|&l| l == label)
    }

    pub fn export_dot(&self) -> String {
        let mut out = String::from("digraph AR {\n");
        for l in &self.nodes {
            let _ = writeln!(out, "  \"{l}\";");
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  \"{}\" -> \"{}\";", self.nodes[a], self.nodes[b]);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> ARWindowJson {
        ARWindowJson {
            ell: self.params.ell(),
            block: self.base,
            nodes: self.nodes.iter().map(ToString::to_string).collect(),
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| [self.nodes[a].to_string(), self.nodes[b].to_string()])
                .collect(),
        }
    }

    pub fn export_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("plain data serializes")
    }

    pub fn from_json(j: &ARWindowJson) -> Result<Self> {
        let p = RootParams::new(j.ell)?;
        let nodes = j
            .nodes
            .iter()
            .map(|t| parse_label(t, p))
            .collect::<Result<Vec<_>>>()?;
        let find = |t: &str| -> Result<usize> {
            let l = parse_label(t, p)?;
            nodes
                .iter()
                .position(|&n| n == l)
                .ok_or_else(|| Error::Serialization(format!("edge endpoint {t} is not a node")))
        };
        let mut edges = j
            .edges
            .iter()
            .map(|[a, b]| Ok((find(a)?, find(b)?)))
            .collect::<Result<Vec<_>>>()?;
        edges.sort_unstable();
        Ok(ARWindowGraph {
            params: p,
            base: j.block,
            nodes,
            edges,
        })
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5() -> RootParams {
        RootParams::new(5).unwrap()
    }

    #[test]
    fn empty_window() {
        let g = ar_window(p5(), 1, 1, 0, 3).unwrap();
        assert!(g.nodes.is_empty());
        assert_eq!(g.export_dot(), "digraph AR {\n}\n");
    }

    #[test]
    fn small_window_edges() {
        let p = p5();
        let g = ar_window(p, 1, -1, 1, 2).unwrap();
        // 9 orbit nodes and I_0, I_1, I_2
        assert_eq!(g.nodes.len(), 12);
        // mesh: from k=-1 to k=0 and from k=0 to k=1, each 4 edges; plus 6 injective edges
        assert_eq!(g.edges.len(), 14);
        assert_eq!(g.component_count(), 2);
        let i0 = g.node_index(ComoduleLabel::injective_at(p, 1, 0)).unwrap();
        let om = g
            .node_index(label_of(OrbitCoord::new(-1, 0), 1, p))
            .unwrap();
        let co = g.node_index(label_of(OrbitCoord::new(1, 0), 1, p)).unwrap();
        assert!(g.edges.contains(&(om, i0)) && g.edges.contains(&(i0, co)));
    }

    #[test]
    fn json_round_trip() {
        let g = ar_window(p5(), 0, -2, 2, 3).unwrap();
        assert_eq!(ARWindowGraph::parse_json(&g.export_json()).unwrap(), g);
    }
}
