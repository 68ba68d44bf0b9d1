//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.
//!
//! Vertices are the dense ids `0..order`. Adjacency is stored as one `u64`
//! row mask per vertex, so vertex sets are plain bitmasks and most set
//! algebra is a handful of instructions.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard representation limit on the number of vertices.
pub const MAX_ORDER: usize = 64;

/// A subset of the vertices `0..64` of some graph.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "vertex set order {n} exceeds {MAX_ORDER}");
        if n == MAX_ORDER {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_ORDER);
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_ORDER);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < MAX_ORDER {
            self.0 &= !(1u64 << v);
        }
    }

    pub fn with(self, v: usize) -> Self {
        let mut s = self;
        s.insert(v);
        s
    }

    pub fn without(self, v: usize) -> Self {
        let mut s = self;
        s.remove(v);
        s
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

macro_rules! set_op {
    ($tr:ident, $f:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            fn $f(self, rhs: VertexSet) -> VertexSet {
                VertexSet(self.0 $op rhs.0)
            }
        }
    };
}

set_op!(BitOr, bitor, |);
set_op!(BitAnd, bitand, &);
set_op!(BitXor, bitxor, ^);

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = members.iter().find(|&&v| v >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!(
                "vertex {bad} out of range"
            )));
        }
        Ok(members.into_iter().collect())
    }
}

/// An undirected edge, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs distinct endpoints");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn endpoints(self) -> VertexSet {
        VertexSet::singleton(self.u).with(self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[usize; 2]>::deserialize(deserializer)?;
        if a == b {
            return Err(serde::de::Error::custom("edge endpoints must differ"));
        }
        Ok(Edge::new(a, b))
    }
}

/// A simple, loopless, undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

/// An induced subgraph together with the original id of each new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `vertices[i]` is the id in the parent graph of subgraph vertex `i`.
    pub vertices: Vec<usize>,
}

impl Subgraph {
    /// Lifts a set of subgraph vertices back to parent ids.
    pub fn lift(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.vertices[v]).collect()
    }
}

/// Result of contracting one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    /// `map[old]` is the id of `old` in the contracted graph.
    pub map: Vec<usize>,
}

impl Graph {
    /// The edgeless graph on `order` vertices. Panics above [`MAX_ORDER`].
    pub fn new(order: usize) -> Self {
        assert!(order <= MAX_ORDER, "graph order {order} exceeds {MAX_ORDER}");
        Graph {
            order,
            adj: vec![0; order],
        }
    }

    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderCap {
                order,
                cap: MAX_ORDER,
            });
        }
        Ok(Graph::new(order))
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order)?;
        for (a, b) in edges {
            if a == b {
                return Err(Error::domain(format!("self-loop at vertex {a}")));
            }
            if a >= order || b >= order {
                return Err(Error::domain(format!(
                    "edge ({a}, {b}) out of range for order {order}"
                )));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    pub(crate) fn from_rows(order: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), order);
        let g = Graph { order, adj };
        debug_assert!(g.check_invariants());
        g
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert!(a != b && a < self.order && b < self.order);
        self.adj[a] |= 1u64 << b;
        self.adj[b] |= 1u64 << a;
    }

    pub(crate) fn remove_edge_mut(&mut self, a: usize, b: usize) {
        self.adj[a] &= !(1u64 << b);
        self.adj[b] &= !(1u64 << a);
    }

    fn check_invariants(&self) -> bool {
        (0..self.order).all(|v| {
            self.adj[v] >> v & 1 == 0
                && self.neighbors(v).is_subset(self.vertex_set())
                && self.neighbors(v).iter().all(|u| self.has_edge(u, v))
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order && b < self.order && self.adj[a] >> b & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges in ascending `(u, v)` order with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.order).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u) - 1))
                .iter()
                .map(move |v| Edge { u, v })
        })
    }

    /// Edges of `G[s]`, ascending.
    pub fn edges_within(&self, s: VertexSet) -> impl Iterator<Item = Edge> + '_ {
        s.iter().flat_map(move |u| {
            (self.neighbors(u) & s)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| Edge { u, v })
        })
    }

    pub fn edge_count_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.neighbors(v) & s).len()).sum::<usize>() / 2
    }

    /// Union of the neighborhoods of `s`, minus `s` itself.
    pub fn boundary(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in s {
            out = out | self.neighbors(v);
        }
        out - s
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertex_set()) {
            Ok(())
        } else {
            let bad = (s - self.vertex_set()).first().unwrap_or_default();
            Err(Error::domain(format!(
                "vertex {bad} out of range for order {}",
                self.order
            )))
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "vertex {v} out of range for order {}",
                self.order
            )))
        }
    }

    /// `G[s]`, relabeled by the order-preserving map.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Subgraph> {
        self.check_set(s)?;
        let vertices = s.to_vec();
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                (self.neighbors(v) & s)
                    .iter()
                    .fold(0u64, |row, u| row | 1u64 << index[u])
            })
            .collect();
        Ok(Subgraph {
            graph: Graph::from_rows(vertices.len(), adj),
            vertices,
        })
    }

    /// `G - s`.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<Subgraph> {
        self.check_set(s)?;
        self.induced_subgraph(self.vertex_set() - s)
    }

    pub fn without_edge(&self, e: Edge) -> Result<Graph> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::domain(format!("edge ({}, {}) not present", e.u, e.v)));
        }
        let mut g = self.clone();
        g.remove_edge_mut(e.u, e.v);
        Ok(g)
    }

    pub fn without_edges(&self, edges: &[Edge]) -> Result<Graph> {
        let mut g = self.clone();
        for &e in edges {
            if !g.has_edge(e.u, e.v) {
                return Err(Error::domain(format!("edge ({}, {}) not present", e.u, e.v)));
            }
            g.remove_edge_mut(e.u, e.v);
        }
        Ok(g)
    }

    /// Spanning subgraph on all vertices with exactly `edges`.
    pub fn spanning(&self, edges: &[Edge]) -> Result<Graph> {
        let mut g = Graph::new(self.order);
        for &e in edges {
            if !self.has_edge(e.u, e.v) {
                return Err(Error::domain(format!("edge ({}, {}) not present", e.u, e.v)));
            }
            g.add_edge(e.u, e.v);
        }
        Ok(g)
    }

    /// Contracts `e`; the merged vertex takes the id of `e.u` in the
    /// compacted numbering. Parallel edges and loops are dropped.
    pub fn contract_edge(&self, e: Edge) -> Result<Contraction> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::domain(format!("edge ({}, {}) not present", e.u, e.v)));
        }
        let map: Vec<usize> = (0..self.order)
            .map(|x| match x.cmp(&e.v) {
                std::cmp::Ordering::Less => x,
                std::cmp::Ordering::Equal => e.u,
                std::cmp::Ordering::Greater => x - 1,
            })
            .collect();
        let mut g = Graph::new(self.order - 1);
        for edge in self.edges() {
            let (a, b) = (map[edge.u], map[edge.v]);
            if a != b {
                g.add_edge(a, b);
            }
        }
        Ok(Contraction { graph: g, map })
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        if !within.contains(start) {
            return VertexSet::EMPTY;
        }
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next | self.neighbors(v);
            }
            frontier = (next & within) - seen;
            seen = seen | frontier;
        }
        seen
    }

    /// Connected components of `G[within]`, ordered by minimum vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(v, left);
            left = left - c;
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertex_set())
    }

    /// True iff `G[s]` is connected. The empty set counts as connected.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.reach(v, s) == s,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertex_set())
    }

    pub fn is_forest(&self, s: VertexSet) -> bool {
        self.edge_count_within(s) + self.components_within(s).len() == s.len()
    }

    /// True iff `G[s]` is a tree (connected and acyclic, nonempty).
    pub fn is_tree(&self, s: VertexSet) -> bool {
        !s.is_empty() && self.is_connected_set(s) && self.edge_count_within(s) + 1 == s.len()
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.neighbors(v).intersects(s))
    }

    pub fn neighbors_in(&self, v: usize, s: VertexSet) -> VertexSet {
        self.neighbors(v) & s
    }

    /// Some cycle of `G[s]` as a closed vertex walk without the repeated
    /// endpoint, or `None` if `G[s]` is a forest.
    pub fn find_cycle(&self, s: VertexSet) -> Option<Vec<usize>> {
        let mut parent = [usize::MAX; MAX_ORDER];
        let mut depth = [usize::MAX; MAX_ORDER];
        for root in s {
            if depth[root] != usize::MAX {
                continue;
            }
            depth[root] = 0;
            let mut stack = vec![root];
            while let Some(x) = stack.pop() {
                for y in self.neighbors(x) & s {
                    if y == parent[x] {
                        continue;
                    }
                    if depth[y] == usize::MAX {
                        depth[y] = depth[x] + 1;
                        parent[y] = x;
                        stack.push(y);
                    } else {
                        return Some(tree_cycle(&parent, &depth, x, y));
                    }
                }
            }
        }
        None
    }

    /// Odd cycle of `G[s]` if it is not bipartite.
    pub fn find_odd_cycle(&self, s: VertexSet) -> Option<Vec<usize>> {
        let mut side = [u8::MAX; MAX_ORDER];
        let mut parent = [usize::MAX; MAX_ORDER];
        let mut depth = [usize::MAX; MAX_ORDER];
        for root in s {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            depth[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) & s {
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        depth[y] = depth[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if side[y] == side[x] {
                        return Some(tree_cycle(&parent, &depth, x, y));
                    }
                }
            }
        }
        None
    }

    /// Proper 2-coloring of `G[s]` (the minimum vertex of each component
    /// gets side 0), or `None` if `G[s]` has an odd cycle.
    pub fn bipartition(&self, s: VertexSet) -> Option<(VertexSet, VertexSet)> {
        let mut zero = VertexSet::EMPTY;
        let mut one = VertexSet::EMPTY;
        for comp in self.components_within(s) {
            let root = comp.first().expect("components are nonempty");
            let mut seen = VertexSet::singleton(root);
            let mut layer = seen;
            let mut parity = 0;
            while !layer.is_empty() {
                if parity == 0 {
                    zero = zero | layer;
                } else {
                    one = one | layer;
                }
                let next = self.boundary(layer) & comp;
                layer = next - seen;
                seen = seen | layer;
                parity ^= 1;
            }
        }
        (self.is_independent(zero) && self.is_independent(one)).then_some((zero, one))
    }
}

/// Joins the tree paths of `x` and `y` into a cycle closed by edge `xy`.
fn tree_cycle(parent: &[usize], depth: &[usize], x: usize, y: usize) -> Vec<usize> {
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges().map(|e| (e.u, e.v)).collect();
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &edges)
            .finish()
    }
}
