//! Finite simple graphs with labeled nodes `1..=m`, their cliques, links and
//! link-regularity profiles.
//!
//! Nodes carry a fixed total order (their labels); the branching rules used by
//! the counting modules depend on it, so input validation insists on
//! contiguous 1-based labels.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::exact::Polynomial;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("node {0} out of range 1..={1}")]
    NodeOutOfRange(usize, usize),
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("at most {MAX_NODES} nodes supported, got {0}")]
    TooManyNodes(usize),
    #[error("node set {0:?} is not a clique")]
    NotAClique(Vec<usize>),
    #[error("duplicate node {0} in clique")]
    DuplicateNode(usize),
    #[error("invalid link profile: {0}")]
    InvalidProfile(String),
    #[error("invalid graph input: {0}")]
    Parse(String),
}

/// Adjacency is stored in one 64-bit mask per node.
pub const MAX_NODES: usize = 64;

/// A finite simple graph on nodes `1..=m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    m: usize,
    adj: Vec<u64>,
}

fn low_bits(m: usize) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

impl Graph {
    /// Validates and builds a graph. Rejects out-of-range endpoints,
    /// self-loops and duplicate edges.
    pub fn new(m: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if m > MAX_NODES {
            return Err(GraphError::TooManyNodes(m));
        }
        let mut adj = vec![0u64; m];
        for &(i, j) in edges {
            if i == 0 || i > m {
                return Err(GraphError::NodeOutOfRange(i, m));
            }
            if j == 0 || j > m {
                return Err(GraphError::NodeOutOfRange(j, m));
            }
            if i == j {
                return Err(GraphError::SelfLoop(i));
            }
            if adj[i - 1] >> (j - 1) & 1 == 1 {
                return Err(GraphError::DuplicateEdge(i.min(j), i.max(j)));
            }
            adj[i - 1] |= 1 << (j - 1);
            adj[j - 1] |= 1 << (i - 1);
        }
        Ok(Graph { m, adj })
    }

    /// The edgeless graph on `m` nodes.
    pub fn empty(m: usize) -> Self {
        Self::new(m, &[]).expect("no edges to validate")
    }

    /// The complete graph `K_m`.
    pub fn complete(m: usize) -> Self {
        let mut edges = Vec::new();
        for i in 1..=m {
            for j in i + 1..=m {
                edges.push((i, j));
            }
        }
        Self::new(m, &edges).expect("complete graph is simple")
    }

    /// The path `P_m` with edges `1-2, 2-3, ..`.
    pub fn path(m: usize) -> Self {
        let edges: Vec<_> = (1..m).map(|i| (i, i + 1)).collect();
        Self::new(m, &edges).expect("path is simple")
    }

    /// The cycle `C_m` (requires `m >= 3`).
    pub fn cycle(m: usize) -> Self {
        assert!(m >= 3, "cycle needs at least three nodes");
        let mut edges: Vec<_> = (1..m).map(|i| (i, i + 1)).collect();
        edges.push((m, 1));
        Self::new(m, &edges).expect("cycle is simple")
    }

    /// The complete bipartite graph `K_{a,b}` on nodes `1..=a` and `a+1..=a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::new();
        for i in 1..=a {
            for j in a + 1..=a + b {
                edges.push((i, j));
            }
        }
        Self::new(a + b, &edges).expect("complete bipartite graph is simple")
    }

    pub fn node_count(&self) -> usize {
        self.m
    }

    pub fn nodes(&self) -> impl Iterator<Item = usize> {
        1..=self.m
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i - 1] >> (j - 1) & 1 == 1
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i - 1].count_ones() as usize
    }

    pub(crate) fn neighbors_mask(&self, i: usize) -> u64 {
        self.adj[i - 1]
    }

    pub(crate) fn full_mask(&self) -> u64 {
        low_bits(self.m)
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        mask_to_nodes(self.adj[i - 1])
    }

    /// Edges as sorted pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.m {
            for j in i + 1..=self.m {
                if self.adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Parses either supported input format, keying on the leading `{`.
    pub fn parse(input: &str) -> Result<Self, GraphError> {
        if input.trim_start().starts_with('{') {
            Self::from_json_str(input)
        } else {
            Self::from_text_str(input)
        }
    }

    /// JSON form: `{"nodes": m, "edges": [[i, j], ..]}` with 1-based labels.
    pub fn from_json_str(input: &str) -> Result<Self, GraphError> {
        let value: serde_json::Value = serde_json::from_str(input)
            .map_err(|e| GraphError::Parse(format!("bad JSON: {e}")))?;
        let obj = value
            .as_object()
            .ok_or_else(|| GraphError::Parse("expected a JSON object".into()))?;
        let m = obj
            .get("nodes")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| GraphError::Parse("missing integer field \"nodes\"".into()))?
            as usize;
        let mut edges = Vec::new();
        if let Some(raw) = obj.get("edges") {
            let list = raw
                .as_array()
                .ok_or_else(|| GraphError::Parse("\"edges\" must be an array".into()))?;
            for e in list {
                let pair = e
                    .as_array()
                    .filter(|p| p.len() == 2)
                    .ok_or_else(|| GraphError::Parse("each edge must be a pair".into()))?;
                let i = pair[0]
                    .as_u64()
                    .ok_or_else(|| GraphError::Parse("edge endpoints must be integers".into()))?;
                let j = pair[1]
                    .as_u64()
                    .ok_or_else(|| GraphError::Parse("edge endpoints must be integers".into()))?;
                edges.push((i as usize, j as usize));
            }
        }
        Self::new(m, &edges)
    }

    /// Plain-text form: a line `nodes m`, then one `edge i j` per line.
    pub fn from_text_str(input: &str) -> Result<Self, GraphError> {
        let mut m: Option<usize> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in input.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            match parts.next() {
                Some("nodes") => {
                    let v = parts
                        .next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .ok_or_else(|| {
                            GraphError::Parse(format!("line {}: expected `nodes m`", lineno + 1))
                        })?;
                    if m.is_some() {
                        return Err(GraphError::Parse("repeated `nodes` line".into()));
                    }
                    m = Some(v);
                }
                Some("edge") => {
                    let i = parts.next().and_then(|s| s.parse::<usize>().ok());
                    let j = parts.next().and_then(|s| s.parse::<usize>().ok());
                    match (i, j) {
                        (Some(i), Some(j)) => edges.push((i, j)),
                        _ => {
                            return Err(GraphError::Parse(format!(
                                "line {}: expected `edge i j`",
                                lineno + 1
                            )))
                        }
                    }
                }
                Some(other) => {
                    return Err(GraphError::Parse(format!(
                        "line {}: unknown directive `{other}`",
                        lineno + 1
                    )))
                }
                None => unreachable!("blank lines were skipped"),
            }
        }
        let m = m.ok_or_else(|| GraphError::Parse("missing `nodes m` line".into()))?;
        Self::new(m, &edges)
    }
}

fn mask_to_nodes(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        out.push(v + 1);
        mask &= mask - 1;
    }
    out
}

/// A set of pairwise-adjacent nodes, stored as a strictly increasing label
/// sequence. The empty clique is allowed.
///
/// `Ord` is the canonical clique order used everywhere in this crate: by
/// cardinality first, then lexicographically by node sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clique {
    nodes: Vec<usize>,
}

impl Clique {
    pub fn empty() -> Self {
        Clique { nodes: Vec::new() }
    }

    /// Validates that `nodes` (in any order) is a clique of `g`.
    pub fn new(g: &Graph, mut nodes: Vec<usize>) -> Result<Self, GraphError> {
        nodes.sort_unstable();
        for w in nodes.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateNode(w[0]));
            }
        }
        for &v in &nodes {
            if v == 0 || v > g.node_count() {
                return Err(GraphError::NodeOutOfRange(v, g.node_count()));
            }
        }
        for (a, &i) in nodes.iter().enumerate() {
            for &j in &nodes[a + 1..] {
                if !g.adjacent(i, j) {
                    return Err(GraphError::NotAClique(nodes.clone()));
                }
            }
        }
        Ok(Clique { nodes })
    }

    pub(crate) fn from_sorted_unchecked(nodes: Vec<usize>) -> Self {
        debug_assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        Clique { nodes }
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, node: usize) -> bool {
        self.nodes.binary_search(&node).is_ok()
    }

    pub fn max_node(&self) -> Option<usize> {
        self.nodes.last().copied()
    }

    pub fn is_subset_of(&self, nodes: &[usize]) -> bool {
        self.nodes.iter().all(|v| nodes.contains(v))
    }

    pub(crate) fn mask(&self) -> u64 {
        self.nodes.iter().fold(0u64, |m, &v| m | 1 << (v - 1))
    }
}

impl Ord for Clique {
    fn cmp(&self, other: &Self) -> Ordering {
        self.nodes
            .len()
            .cmp(&other.nodes.len())
            .then_with(|| self.nodes.cmp(&other.nodes))
    }
}

impl PartialOrd for Clique {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.nodes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Every non-empty clique of a graph in the canonical order, with positional
/// lookup. The order is deterministic for a given graph.
#[derive(Clone, Debug)]
pub struct CliqueIndex {
    cliques: Vec<Clique>,
    pos: HashMap<Vec<usize>, usize>,
}

impl CliqueIndex {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn cliques(&self) -> &[Clique] {
        &self.cliques
    }

    pub fn get(&self, i: usize) -> &Clique {
        &self.cliques[i]
    }

    pub fn position(&self, c: &Clique) -> Option<usize> {
        self.pos.get(c.nodes()).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Clique> {
        self.cliques.iter()
    }
}

/// Enumerates every non-empty clique of `g` in the canonical order
/// (cardinality, then lexicographic by node sequence).
pub fn enumerate_cliques(g: &Graph) -> CliqueIndex {
    fn extend(g: &Graph, current: &mut Vec<usize>, candidates: u64, out: &mut Vec<Vec<usize>>) {
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize + 1;
            rest &= rest - 1;
            current.push(v);
            out.push(current.clone());
            // Only common neighbors with higher labels keep the DFS duplicate-free.
            let above = if v >= 64 { 0 } else { !low_bits(v) };
            extend(g, current, candidates & g.neighbors_mask(v) & above, out);
            current.pop();
        }
    }
    let mut raw = Vec::new();
    extend(g, &mut Vec::new(), g.full_mask(), &mut raw);
    let mut cliques: Vec<Clique> = raw.into_iter().map(Clique::from_sorted_unchecked).collect();
    cliques.sort();
    let pos = cliques
        .iter()
        .enumerate()
        .map(|(i, c)| (c.nodes().to_vec(), i))
        .collect();
    CliqueIndex { cliques, pos }
}

/// The clique polynomial `1 + c_1 t + c_2 t^2 + ..` where `c_i` counts the
/// `i`-cliques of `g`.
pub fn clique_polynomial<T: Scalar>(g: &Graph) -> Polynomial<T> {
    let idx = enumerate_cliques(g);
    let d = idx.cliques().last().map_or(0, Clique::size);
    let mut coeffs = vec![T::zero(); d + 1];
    coeffs[0] = T::one();
    for c in idx.iter() {
        coeffs[c.size()] = coeffs[c.size()].clone() + T::one();
    }
    Polynomial::from_coeffs(coeffs)
}

/// The induced subgraph after deleting `remove`, with the relabeling recorded:
/// the second component maps new labels (by index, 1-based) to old labels.
pub fn induced_delete(g: &Graph, remove: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
    for &v in remove {
        if v == 0 || v > g.node_count() {
            return Err(GraphError::NodeOutOfRange(v, g.node_count()));
        }
    }
    let kept: Vec<usize> = g.nodes().filter(|v| !remove.contains(v)).collect();
    let mut edges = Vec::new();
    for (a, &i) in kept.iter().enumerate() {
        for (b, &j) in kept.iter().enumerate().skip(a + 1) {
            if g.adjacent(i, j) {
                edges.push((a + 1, b + 1));
            }
        }
    }
    let sub = Graph::new(kept.len(), &edges).expect("induced subgraph is simple");
    Ok((sub, kept))
}

/// All nodes outside `c` adjacent to every node of `c`. The link of the empty
/// clique is the whole node set.
pub fn link(g: &Graph, c: &Clique) -> Result<Vec<usize>, GraphError> {
    // Re-validate against this graph: the clique may come from elsewhere.
    let c = Clique::new(g, c.nodes().to_vec())?;
    let mut mask = g.full_mask();
    for &v in c.nodes() {
        mask &= g.neighbors_mask(v);
    }
    mask &= !c.mask();
    Ok(mask_to_nodes(mask))
}

/// The link-size profile of a link-regular graph: `L[r]` is the common link
/// cardinality of every `r`-clique, for `r = 0..=d` with `L[0] = m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkProfile {
    m: usize,
    link_sizes: Vec<i64>,
}

impl LinkProfile {
    /// Builds a profile from `L_0..L_d`; requires `L_0 = m` and `L_r >= 0`.
    pub fn new(m: usize, link_sizes: Vec<i64>) -> Result<Self, GraphError> {
        if link_sizes.is_empty() {
            return Err(GraphError::InvalidProfile("needs at least L_0".into()));
        }
        if link_sizes[0] != m as i64 {
            return Err(GraphError::InvalidProfile(format!(
                "L_0 = {} must equal the node count {m}",
                link_sizes[0]
            )));
        }
        if link_sizes.iter().any(|&l| l < 0) {
            return Err(GraphError::InvalidProfile("negative link size".into()));
        }
        Ok(LinkProfile { m, link_sizes })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The largest clique cardinality `d`.
    pub fn d(&self) -> usize {
        self.link_sizes.len() - 1
    }

    pub fn link_sizes(&self) -> &[i64] {
        &self.link_sizes
    }

    pub fn link_size(&self, r: usize) -> Option<i64> {
        self.link_sizes.get(r).copied()
    }

    /// `{"m":..,"d":..,"L":[..]}`.
    pub fn to_json_string(&self) -> String {
        let ls: Vec<String> = self.link_sizes.iter().map(|l| l.to_string()).collect();
        format!(
            "{{\"m\":{},\"d\":{},\"L\":[{}]}}",
            self.m,
            self.d(),
            ls.join(",")
        )
    }
}

/// The profile of `g` when it is link-regular, `None` otherwise.
///
/// For a link-regular graph the clique counts satisfy
/// `n c_n = c_(n-1) L_(n-1)`; this identity is checked against the clique
/// polynomial before returning.
pub fn link_regular_profile(g: &Graph) -> Option<LinkProfile> {
    let idx = enumerate_cliques(g);
    let d = idx.cliques().last().map_or(0, Clique::size);
    let mut sizes: Vec<Option<i64>> = vec![None; d + 1];
    sizes[0] = Some(g.node_count() as i64);
    for c in idx.iter() {
        let l = link(g, c).expect("enumerated cliques are valid").len() as i64;
        match sizes[c.size()] {
            None => sizes[c.size()] = Some(l),
            Some(prev) if prev != l => return None,
            Some(_) => {}
        }
    }
    let link_sizes: Vec<i64> = sizes
        .into_iter()
        .map(|s| s.expect("cliques are closed under subsets, so every size occurs"))
        .collect();
    // Clique-count identity for link-regular graphs.
    let p: Polynomial<i64> = clique_polynomial(g);
    for n in 2..=d {
        let lhs = (n as i64) * p.coeff(n);
        let rhs = p.coeff(n - 1) * link_sizes[n - 1];
        assert_eq!(lhs, rhs, "link-regular clique-count identity failed at n={n}");
    }
    Some(LinkProfile {
        m: g.node_count(),
        link_sizes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(1, 4)]),
            Err(GraphError::NodeOutOfRange(4, 3))
        );
        assert_eq!(Graph::new(3, &[(2, 2)]), Err(GraphError::SelfLoop(2)));
        assert_eq!(
            Graph::new(3, &[(1, 2), (2, 1)]),
            Err(GraphError::DuplicateEdge(1, 2))
        );
        assert!(Graph::new(65, &[]).is_err());
    }

    #[test]
    fn enumerates_single_edge_cliques() {
        let g = Graph::complete(2);
        let idx = enumerate_cliques(&g);
        let got: Vec<_> = idx.iter().map(|c| c.nodes().to_vec()).collect();
        assert_eq!(got, vec![vec![1], vec![2], vec![1, 2]]);
    }

    #[test]
    fn enumerates_square_cliques() {
        // C4 has 4 vertices and 4 edges, 8 non-empty cliques in total.
        let idx = enumerate_cliques(&Graph::cycle(4));
        assert_eq!(idx.len(), 8);
        assert!(idx.iter().all(|c| c.size() <= 2));
    }

    #[test]
    fn enumerates_empty_graph_cliques() {
        let idx = enumerate_cliques(&Graph::empty(3));
        let got: Vec<_> = idx.iter().map(|c| c.nodes().to_vec()).collect();
        assert_eq!(got, vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn clique_count_matches_polynomial_at_one() {
        for g in [
            Graph::cycle(5),
            Graph::complete(4),
            Graph::path(4),
            Graph::empty(3),
            Graph::complete_bipartite(2, 3),
        ] {
            let p: Polynomial<i64> = clique_polynomial(&g);
            let count = enumerate_cliques(&g).len() as i64;
            assert_eq!(p.evaluate(&1), 1 + count);
        }
    }

    #[test]
    fn clique_index_closed_under_subsets() {
        let g = Graph::complete(4);
        let idx = enumerate_cliques(&g);
        for c in idx.iter() {
            for drop in c.nodes() {
                let sub: Vec<usize> = c.nodes().iter().copied().filter(|v| v != drop).collect();
                if !sub.is_empty() {
                    assert!(idx.position(&Clique::from_sorted_unchecked(sub)).is_some());
                }
            }
        }
    }

    #[test]
    fn clique_polynomial_examples() {
        let p: Polynomial<i64> = clique_polynomial(&Graph::cycle(4));
        assert_eq!(p, Polynomial::from_i64(&[1, 4, 4]));
        for m in 1..=6 {
            let p: Polynomial<i64> = clique_polynomial(&Graph::path(m));
            assert_eq!(
                p,
                Polynomial::from_i64(&[1, m as i64, m as i64 - 1]),
                "line graph on {m} nodes"
            );
        }
        let p: Polynomial<i64> = clique_polynomial(&Graph::empty(5));
        assert_eq!(p, Polynomial::from_i64(&[1, 5]));
    }

    #[test]
    fn induced_delete_examples() {
        let (sub, labels) = induced_delete(&Graph::cycle(4), &[1]).unwrap();
        assert_eq!(sub, Graph::path(3));
        assert_eq!(labels, vec![2, 3, 4]);

        let g = Graph::cycle(5);
        let (same, _) = induced_delete(&g, &[]).unwrap();
        assert_eq!(same, g);

        let (single, labels) = induced_delete(&Graph::complete(3), &[2, 3]).unwrap();
        assert_eq!(single, Graph::empty(1));
        assert_eq!(labels, vec![1]);

        assert!(induced_delete(&g, &[9]).is_err());
    }

    #[test]
    fn link_examples() {
        let c4 = Graph::cycle(4);
        let corner = Clique::new(&c4, vec![1]).unwrap();
        assert_eq!(link(&c4, &corner).unwrap(), vec![2, 4]);
        let edge = Clique::new(&c4, vec![1, 2]).unwrap();
        assert_eq!(link(&c4, &edge).unwrap(), Vec::<usize>::new());
        let k4 = Graph::complete(4);
        let pair = Clique::new(&k4, vec![2, 3]).unwrap();
        assert_eq!(link(&k4, &pair).unwrap(), vec![1, 4]);
        assert_eq!(link(&c4, &Clique::empty()).unwrap(), vec![1, 2, 3, 4]);
        // Nodes 1 and 3 are opposite corners of the square, not a clique.
        let bogus = Clique::from_sorted_unchecked(vec![1, 3]);
        assert!(link(&c4, &bogus).is_err());
    }

    #[test]
    fn link_extension_stays_clique() {
        for g in [Graph::cycle(5), Graph::complete(4), Graph::path(4)] {
            let idx = enumerate_cliques(&g);
            for c in idx.iter() {
                for x in link(&g, c).unwrap() {
                    let mut nodes = c.nodes().to_vec();
                    nodes.push(x);
                    assert!(Clique::new(&g, nodes).is_ok());
                }
            }
        }
    }

    #[test]
    fn profile_of_pentagon() {
        let p = link_regular_profile(&Graph::cycle(5)).unwrap();
        assert_eq!(p.m(), 5);
        assert_eq!(p.d(), 2);
        assert_eq!(p.link_sizes(), &[5, 2, 0]);
    }

    #[test]
    fn profile_of_complete_graphs() {
        for m in 1..=5 {
            let p = link_regular_profile(&Graph::complete(m)).unwrap();
            let expected: Vec<i64> = (0..=m).map(|r| (m - r) as i64).collect();
            assert_eq!(p.link_sizes(), &expected[..]);
        }
    }

    #[test]
    fn path_is_not_link_regular() {
        // Vertex links of P3 have sizes 1 and 2.
        assert!(link_regular_profile(&Graph::path(3)).is_none());
    }

    #[test]
    fn profile_validation() {
        assert!(LinkProfile::new(5, vec![5, 2, 0]).is_ok());
        assert!(LinkProfile::new(5, vec![4, 2]).is_err());
        assert!(LinkProfile::new(5, vec![]).is_err());
        assert!(LinkProfile::new(5, vec![5, -1]).is_err());
    }

    #[test]
    fn profile_json() {
        let p = link_regular_profile(&Graph::cycle(5)).unwrap();
        assert_eq!(p.to_json_string(), "{\"m\":5,\"d\":2,\"L\":[5,2,0]}");
    }

    #[test]
    fn canonical_clique_order() {
        let mut cliques = [
            Clique::from_sorted_unchecked(vec![1, 2]),
            Clique::from_sorted_unchecked(vec![3]),
            Clique::from_sorted_unchecked(vec![1, 3]),
            Clique::from_sorted_unchecked(vec![2]),
        ];
        cliques.sort();
        let got: Vec<_> = cliques.iter().map(|c| c.nodes().to_vec()).collect();
        assert_eq!(got, vec![vec![2], vec![3], vec![1, 2], vec![1, 3]]);
    }

    #[test]
    fn parses_json_and_text() {
        let g = Graph::from_json_str(r#"{"nodes": 4, "edges": [[1,2],[2,3],[3,4],[4,1]]}"#).unwrap();
        assert_eq!(g, Graph::cycle(4));
        let g = Graph::from_text_str("nodes 4\nedge 1 2\nedge 2 3\nedge 3 4\nedge 4 1\n").unwrap();
        assert_eq!(g, Graph::cycle(4));
        assert_eq!(
            Graph::parse("nodes 2\nedge 1 2").unwrap(),
            Graph::parse(r#"{"nodes":2,"edges":[[1,2]]}"#).unwrap()
        );
        assert!(Graph::from_json_str(r#"{"edges": []}"#).is_err());
        assert!(Graph::from_text_str("vertices 3").is_err());
        assert!(Graph::from_json_str(r#"{"nodes":2,"edges":[[1,1]]}"#).is_err());
        assert!(Graph::from_text_str("nodes 2\nedge 1 2\nedge 2 1").is_err());
    }
}
