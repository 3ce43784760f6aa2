//! Characteristic bipartite graph of a pair and the Gács–Körner variable.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::dist::JointDistribution;
use crate::error::{Error, Result};
use crate::scalar::Exact;

/// Disjoint-set forest over `0..n` with path halving.
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// States of `x` and `y` with positive mass, joined by an edge when the pair
/// has positive joint mass.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteSupportGraph {
    pub x: String,
    pub y: String,
    /// ascending
    pub left: Vec<u32>,
    /// ascending
    pub right: Vec<u32>,
    /// ascending `(x, y)` pairs
    pub edges: Vec<(u32, u32)>,
    /// component id of each left state, numbered by smallest left state
    pub left_component: BTreeMap<u32, usize>,
    pub right_component: BTreeMap<u32, usize>,
}

impl BipartiteSupportGraph {
    pub fn component_count(&self) -> usize {
        self.left_component.values().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Left and right states of each component.
    pub fn components(&self) -> Vec<(Vec<u32>, Vec<u32>)> {
        let mut out = vec![(Vec::new(), Vec::new()); self.component_count()];
        for (&x, &c) in &self.left_component {
            out[c].0.push(x);
        }
        for (&y, &c) in &self.right_component {
            out[c].1.push(y);
        }
        out
    }
}

pub fn support_graph<Q: Exact>(d: &JointDistribution<Q>, x: &str, y: &str) -> Result<BipartiteSupportGraph> {
    let schema = d.schema();
    let (ix, iy) = (schema.index_of(x)?, schema.index_of(y)?);
    if ix == iy {
        return Err(Error::DuplicateVariable(x.to_string()));
    }
    let pair = d.marginal_masses(schema.set_of(&[x, y])?);
    // marginal keys follow ascending variable index
    let edges: Vec<(u32, u32)> = {
        let mut e: Vec<(u32, u32)> = pair
            .keys()
            .map(|k| if ix < iy { (k[0], k[1]) } else { (k[1], k[0]) })
            .collect();
        e.sort_unstable();
        e
    };
    let mut left: Vec<u32> = edges.iter().map(|e| e.0).collect();
    left.dedup();
    let mut right: Vec<u32> = edges.iter().map(|e| e.1).collect();
    right.sort_unstable();
    right.dedup();

    let lpos: BTreeMap<u32, usize> = left.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let rpos: BTreeMap<u32, usize> = right.iter().enumerate().map(|(k, &v)| (v, left.len() + k)).collect();
    let mut uf = UnionFind::new(left.len() + right.len());
    for (a, b) in &edges {
        uf.union(lpos[a], rpos[b]);
    }
    // roots are minimal indices, and left states come first in ascending
    // order, so first appearance over `left` gives ids by smallest left state
    let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
    let mut left_component = BTreeMap::new();
    for &v in &left {
        let root = uf.find(lpos[&v]);
        let next = ids.len();
        left_component.insert(v, *ids.entry(root).or_insert(next));
    }
    let right_component = right
        .iter()
        .map(|&v| (v, ids[&uf.find(rpos[&v])]))
        .collect();
    Ok(BipartiteSupportGraph {
        x: x.to_string(),
        y: y.to_string(),
        left,
        right,
        edges,
        left_component,
        right_component,
    })
}

/// Appends the common-information variable `name`: the support-graph
/// component of `(x, y)`.
pub fn gk_extend<Q: Exact>(d: &JointDistribution<Q>, x: &str, y: &str, name: &str) -> Result<JointDistribution<Q>> {
    if d.schema().index_of(name).is_ok() {
        return Err(Error::NameCollision(name.to_string()));
    }
    let g = support_graph(d, x, y)?;
    let ix = d.schema().index_of(x)?;
    let card = g.component_count().max(1) as u32;
    d.function_extend(name, card, |o| g.left_component[&o[ix]] as u32)
}
