//! Non-isomorphic graphs by vertex extension and canonical codes.
//!
//! The canonical code of a graph is the largest upper-triangle adjacency
//! code over the leaves of an individualization-refinement tree. Every
//! graph on `n` vertices arises from some graph on `n - 1` vertices by
//! adding a vertex, so extending one representative per class of the
//! previous order and keeping one graph per code yields every class once.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const MAX_ENUMERATION_ORDER: usize = 8;

type Partition = Vec<Vec<usize>>;

/// Splits cells by neighbor counts into every cell until stable.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().collect()).collect();
        let mut next: Partition = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let sig = |v: usize| -> Vec<usize> {
                masks.iter().map(|&m| (g.neighbors(v) & m).len()).collect()
            };
            let mut keyed: Vec<(Vec<usize>, usize)> = cell.iter().map(|&v| (sig(v), v)).collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

/// Adjacency code of `g` relabelled so that `order[i]` becomes vertex `i`.
fn code(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut c = 0u64;
    for j in 1..n {
        for i in 0..j {
            c = (c << 1) | u64::from(g.has_edge(order[i], order[j]));
        }
    }
    c
}

fn search(g: &Graph, cells: Partition, best: &mut Option<(u64, Vec<usize>)>) {
    let Some(pos) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let c = code(g, &order);
        if best.as_ref().is_none_or(|(b, _)| c > *b) {
            *best = Some((c, order));
        }
        return;
    };
    for &v in &cells[pos] {
        let mut split = cells[..pos].to_vec();
        split.push(vec![v]);
        split.push(cells[pos].iter().copied().filter(|&u| u != v).collect());
        split.extend_from_slice(&cells[pos + 1..]);
        search(g, refine(g, split), best);
    }
}

/// Canonical code and a relabelling achieving it (`order[i]` is the old id
/// of new vertex `i`). Isomorphic graphs get equal codes.
pub fn canonical_form(g: &Graph) -> (u64, Vec<usize>) {
    assert!(g.order() <= 11, "canonical codes fit orders up to 11");
    if g.order() == 0 {
        return (0, Vec::new());
    }
    let mut best = None;
    search(g, refine(g, vec![g.vertices().collect()]), &mut best);
    best.expect("search reaches a leaf")
}

pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, order) = canonical_form(g);
    relabel(g, &order)
}

fn relabel(g: &Graph, order: &[usize]) -> Graph {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    Graph::from_edges(g.order(), g.edges().map(|e| (pos[e.u], pos[e.v])))
        .expect("relabelling keeps the order")
}

/// One graph per isomorphism class on exactly `n` vertices, each in
/// canonical labelling, sorted by edge count then canonical code.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderCap {
            order: n,
            cap: MAX_ENUMERATION_ORDER,
        });
    }
    let mut level = vec![Graph::new(0)];
    for k in 1..=n {
        let mut next: BTreeMap<(usize, u64), Graph> = BTreeMap::new();
        for g in &level {
            for mask in 0u64..1 << (k - 1) {
                let mut edges: Vec<(usize, usize)> = g.edges().map(|e| (e.u, e.v)).collect();
                edges.extend(VertexSet::from_bits(mask).iter().map(|u| (u, k - 1)));
                let h = Graph::from_edges(k, edges).expect("order within cap");
                let (c, order) = canonical_form(&h);
                next.entry((h.size(), c)).or_insert_with(|| relabel(&h, &order));
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// All classes with `1..=n` vertices, smaller orders first.
pub fn enumerate_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_graphs(k)?);
    }
    Ok(out)
}
