//! The cyclic graph Δ(G) on `G \ {1}` and the commuting graph Γ(G) on
//! `G \ Z(G)`, by brute force.
//!
//! `x ≈ y` in Δ exactly when both lie in one cyclic subgroup `<z>`, so Δ is
//! the union of the cliques on `<z> \ {1}`; components come from a union-find
//! over those cyclic subgroups rather than from pairwise adjacency tests.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::group::EnumeratedGroup;
use crate::perm::cycle_notation;

pub const DEFAULT_PAIR_CAP: u64 = 25_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Cyclic,
    Commuting,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphKind::Cyclic => "cyclic",
            GraphKind::Commuting => "commuting",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    BruteForce,
    Formula,
    Structured,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::BruteForce => "brute-force",
            Method::Formula => "formula",
            Method::Structured => "structured",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    pub kind: GraphKind,
    pub method: Method,
    pub component_count: u64,
    /// Ascending component sizes; only known when components were built.
    pub component_sizes: Option<Vec<u64>>,
    pub vertex_count: u64,
}

/// Disjoint sets with path compression and union by rank.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
    roots: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            rank: vec![0; n],
            roots: n,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut cur = x;
        while self.parent[cur] as usize != root {
            let next = self.parent[cur] as usize;
            self.parent[cur] = root as u32;
            cur = next;
        }
        root
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (hi, lo) = if self.rank[ra] >= self.rank[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[lo] = hi as u32;
        if self.rank[hi] == self.rank[lo] {
            self.rank[hi] += 1;
        }
        self.roots -= 1;
        true
    }

    pub fn component_count(&self) -> usize {
        self.roots
    }

    /// Ascending sizes of all sets.
    pub fn component_sizes(&mut self) -> Vec<u64> {
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for x in 0..self.len() {
            *counts.entry(self.find(x)).or_insert(0) += 1;
        }
        let mut sizes: Vec<u64> = counts.into_values().collect();
        sizes.sort_unstable();
        sizes
    }
}

fn check_vertex(group: &EnumeratedGroup, x: usize) -> Result<()> {
    if x >= group.order() {
        return Err(Error::NotMember);
    }
    if x == group.identity() {
        return Err(Error::InvalidVertex("the identity is not a vertex of the cyclic graph".into()));
    }
    Ok(())
}

/// Whether `<x, y>` is cyclic, for distinct nonidentity `x`, `y`.
pub fn cyclic_adjacent(group: &EnumeratedGroup, x: usize, y: usize) -> Result<bool> {
    check_vertex(group, x)?;
    check_vertex(group, y)?;
    if x == y {
        return Err(Error::InvalidVertex("adjacency needs two distinct vertices".into()));
    }
    if !group.commute(x, y) {
        return Ok(false);
    }
    if gcd(group.element_order(x), group.element_order(y)) == 1 {
        return Ok(true);
    }
    let sub = group.subgroup(&[x, y]);
    let size = sub.order() as u64;
    Ok(sub.members().iter().any(|&z| group.element_order(z) == size))
}

/// Δ-component label of every element (`u32::MAX` for the identity).
pub fn delta_component_labels(group: &EnumeratedGroup) -> Vec<u32> {
    let n = group.order();
    let mut uf = UnionFind::new(n);
    // elements already seen as a generator of some processed cyclic subgroup
    let mut covered = vec![false; n];
    let mut buf = vec![0; group.degree()];
    for g in 1..n {
        if covered[g] {
            continue;
        }
        let order = group.element_order(g);
        let mut cur = g;
        let mut k = 1u64;
        while cur != 0 {
            if gcd(k, order) == 1 {
                covered[cur] = true;
            }
            uf.union(g, cur);
            cur = group.product_with(cur, g, &mut buf);
            k += 1;
        }
    }
    (0..n)
        .map(|x| if x == 0 { u32::MAX } else { uf.find(x) as u32 })
        .collect()
}

fn report_from_labels(kind: GraphKind, labels: impl Iterator<Item = u32>) -> ComponentReport {
    let mut sizes: BTreeMap<u32, u64> = BTreeMap::new();
    let mut vertices = 0u64;
    for l in labels {
        *sizes.entry(l).or_insert(0) += 1;
        vertices += 1;
    }
    let mut component_sizes: Vec<u64> = sizes.into_values().collect();
    component_sizes.sort_unstable();
    ComponentReport {
        kind,
        method: Method::BruteForce,
        component_count: component_sizes.len() as u64,
        component_sizes: Some(component_sizes),
        vertex_count: vertices,
    }
}

pub fn delta_components(group: &EnumeratedGroup) -> ComponentReport {
    let labels = delta_component_labels(group);
    report_from_labels(GraphKind::Cyclic, labels.into_iter().skip(1))
}

pub fn gamma_components(group: &EnumeratedGroup, pair_cap: u64) -> Result<ComponentReport> {
    let center = group.center();
    let vertices: Vec<usize> = (0..group.order()).filter(|&x| !center.contains(x)).collect();
    if vertices.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let v = vertices.len() as u64;
    if v.saturating_mul(v) > pair_cap {
        return Err(Error::CapExceeded {
            cap: pair_cap as usize,
        });
    }
    let mut uf = UnionFind::new(vertices.len());
    for (a, &x) in vertices.iter().enumerate() {
        for (b, &y) in vertices.iter().enumerate().skip(a + 1) {
            if group.commute(x, y) {
                uf.union(a, b);
            }
        }
    }
    let labels: Vec<u32> = (0..vertices.len()).map(|a| uf.find(a) as u32).collect();
    Ok(report_from_labels(GraphKind::Commuting, labels.into_iter()))
}

/// Explicit cyclic-subgroup structure of Δ(G), for distance and edge queries.
pub struct CyclicGraph<'g> {
    group: &'g EnumeratedGroup,
    /// Distinct cyclic subgroups minus the identity, as sorted indices.
    cliques: Vec<Vec<usize>>,
    /// Cliques containing each element.
    containing: Vec<Vec<usize>>,
}

impl<'g> CyclicGraph<'g> {
    pub fn new(group: &'g EnumeratedGroup) -> Self {
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
        for g in 1..group.order() {
            let mut members = group.cyclic_subgroup(g);
            members.pop();
            members.sort_unstable();
            set.insert(members);
        }
        let cliques: Vec<Vec<usize>> = set.into_iter().collect();
        let mut containing = vec![Vec::new(); group.order()];
        for (c, members) in cliques.iter().enumerate() {
            for &m in members {
                containing[m].push(c);
            }
        }
        CyclicGraph {
            group,
            cliques,
            containing,
        }
    }

    pub fn neighbors(&self, x: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &c in &self.containing[x] {
            out.extend(self.cliques[c].iter().copied().filter(|&y| y != x));
        }
        out
    }

    /// BFS distance; `None` when `x` and `y` lie in different components.
    pub fn distance(&self, x: usize, y: usize) -> Result<Option<u64>> {
        check_vertex(self.group, x)?;
        check_vertex(self.group, y)?;
        let mut dist = vec![u64::MAX; self.group.order()];
        dist[x] = 0;
        let mut queue = VecDeque::from([x]);
        while let Some(u) = queue.pop_front() {
            if u == y {
                return Ok(Some(dist[u]));
            }
            for v in self.neighbors(u) {
                if dist[v] == u64::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        Ok(None)
    }

    /// Every unordered adjacent pair `(x, y)` with `x < y`.
    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for members in &self.cliques {
            for (a, &x) in members.iter().enumerate() {
                for &y in &members[a + 1..] {
                    out.insert((x, y));
                }
            }
        }
        out
    }
}

pub fn delta_distance(group: &EnumeratedGroup, x: usize, y: usize) -> Result<Option<u64>> {
    CyclicGraph::new(group).distance(x, y)
}

/// Deterministic Graphviz text. Vertices are canonical element indices in
/// increasing order, optionally labelled in cycle notation; one edge per
/// unordered adjacent pair.
pub fn export_dot(group: &EnumeratedGroup, kind: GraphKind, labels: bool, pair_cap: u64) -> Result<String> {
    let (vertices, edges, report): (Vec<usize>, BTreeSet<(usize, usize)>, ComponentReport) = match kind {
        GraphKind::Cyclic => {
            let graph = CyclicGraph::new(group);
            ((1..group.order()).collect(), graph.edges(), delta_components(group))
        }
        GraphKind::Commuting => {
            let report = gamma_components(group, pair_cap)?;
            let center = group.center();
            let vertices: Vec<usize> = (0..group.order()).filter(|&x| !center.contains(x)).collect();
            let mut edges = BTreeSet::new();
            for (a, &x) in vertices.iter().enumerate() {
                for &y in &vertices[a + 1..] {
                    if group.commute(x, y) {
                        edges.insert((x, y));
                    }
                }
            }
            (vertices, edges, report)
        }
    };
    let mut out = String::new();
    let _ = writeln!(out, "graph {kind} {{");
    let _ = writeln!(
        out,
        "  // group order {}, {} vertices, {} edges, {} components",
        group.order(),
        vertices.len(),
        edges.len(),
        report.component_count
    );
    for &v in &vertices {
        if labels {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", cycle_notation(group.element(v)));
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (x, y) in &edges {
        let _ = writeln!(out, "  {x} -- {y};");
    }
    out.push_str("}\n");
    Ok(out)
}

impl fmt::Display for ComponentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} graph: {} components over {} vertices ({})",
            self.kind, self.component_count, self.vertex_count, self.method
        )?;
        if let Some(sizes) = &self.component_sizes {
            let text: Vec<String> = sizes.iter().map(|s| format!("{s}")).collect();
            write!(f, "; sizes [{}]", text.join(", "))?;
        }
        Ok(())
    }
}
