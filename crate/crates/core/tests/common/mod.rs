//! Brute-force oracles and fixtures shared by the integration tests.
//!
//! The oracles read a graph only through `order`, `has_edge` and `edges`
//! and re-derive everything else from scratch.

#![allow(dead_code)]

use rpgraph_core::Graph;

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

fn connected(adj: &[Vec<bool>], block: &[usize]) -> bool {
    if block.is_empty() {
        return false;
    }
    let mut seen = vec![block[0]];
    let mut i = 0;
    while i < seen.len() {
        let u = seen[i];
        for &v in block {
            if adj[u][v] && !seen.contains(&v) {
                seen.push(v);
            }
        }
        i += 1;
    }
    seen.len() == block.len()
}

/// Calls `f` with every labelling of `0..n` into blocks where label 0 marks
/// unused vertices and labels `1..` form a restricted growth string.
fn for_each_labelling(n: usize, f: &mut impl FnMut(&[usize], usize) -> bool) -> bool {
    fn go(
        i: usize,
        labels: &mut Vec<usize>,
        used: usize,
        n: usize,
        f: &mut impl FnMut(&[usize], usize) -> bool,
    ) -> bool {
        if i == n {
            return f(labels, used);
        }
        for l in 0..=used + 1 {
            labels[i] = l;
            if go(i + 1, labels, used.max(l), n, f) {
                return true;
            }
        }
        false
    }
    let mut labels = vec![0; n];
    go(0, &mut labels, 0, n, f)
}

/// `K_t` minor by trying every partition of a vertex subset into `t`
/// branch sets, with no pruning.
pub fn brute_has_clique_minor(g: &Graph, t: usize) -> bool {
    if t == 0 {
        return true;
    }
    let n = g.order();
    let adj = adjacency(g);
    for_each_labelling(n, &mut |labels, used| {
        if used != t {
            return false;
        }
        let blocks: Vec<Vec<usize>> = (1..=t)
            .map(|b| (0..n).filter(|&v| labels[v] == b).collect())
            .collect();
        if !blocks.iter().all(|b| connected(&adj, b)) {
            return false;
        }
        (0..t).all(|i| {
            (i + 1..t).all(|j| {
                blocks[i]
                    .iter()
                    .any(|&u| blocks[j].iter().any(|&v| adj[u][v]))
            })
        })
    })
}

pub fn brute_hadwiger(g: &Graph) -> usize {
    (1..=g.order())
        .take_while(|&t| brute_has_clique_minor(g, t))
        .last()
        .unwrap_or(0)
}

/// Smallest `k` admitting a proper assignment, trying all `k^n`.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().map(|e| (e.u, e.v)).collect();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
            let mut i = 0;
            while i < n {
                colors[i] += 1;
                if colors[i] < k {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    0
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k % 2 == 0 { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

/// Isomorphism by trying every vertex permutation.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort();
    db.sort();
    if da != db {
        return false;
    }
    let ea: Vec<(usize, usize)> = a.edges().map(|e| (e.u, e.v)).collect();
    permutations(n)
        .iter()
        .any(|p| ea.iter().all(|&(u, v)| b.has_edge(p[u], p[v])))
}

/// Acyclicity of the subgraph induced by `set`, by union-find.
pub fn uf_is_forest(g: &Graph, set: &[usize]) -> bool {
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut x = x;
        while p[x] != r {
            let nx = p[x];
            p[x] = r;
            x = nx;
        }
        r
    }
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if g.has_edge(u, v) {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru == rv {
                    return false;
                }
                parent[ru] = rv;
            }
        }
    }
    true
}

pub fn dominates(g: &Graph, set: &[usize]) -> bool {
    (0..g.order()).all(|v| set.contains(&v) || set.iter().any(|&u| g.has_edge(u, v)))
}

pub fn independent(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .all(|&u| set.iter().all(|&v| u == v || !g.has_edge(u, v)))
}

/// Subgraph induced by `set`, relabelled `0..set.len()` in the given order.
pub fn induced(g: &Graph, set: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for (i, &u) in set.iter().enumerate() {
        for (j, &v) in set.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(set.len(), edges).unwrap()
}

pub fn proper(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.order() && g.edges().all(|e| colors[e.u] != colors[e.v])
}

/// Two disjoint trees `4-5` and `6-7` dominating a `K_4` on `0..4`.
pub fn two_tree_configuration() -> (Graph, Vec<usize>, Vec<usize>) {
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    edges.extend([(4, 5), (4, 0), (5, 1), (6, 7), (6, 2), (7, 3)]);
    (
        Graph::from_edges(8, edges).unwrap(),
        vec![4, 5, 6, 7],
        vec![0, 1, 2, 3],
    )
}

/// One graph fitting the four-minor configuration `A_1..A_4` (ids are
/// `v_i - 1`). A reconstruction, not a known original: any 8-vertex graph
/// whose inclusion-minimal `K_4` minors span exactly these vertex sets and
/// where `N(v_8) = {v_1, v_4, v_5, v_6}` fits equally well.
pub fn four_minor_graph() -> Graph {
    let edges = [
        (1, 5), (1, 6), (1, 8), (2, 4), (2, 6), (2, 7), (3, 4),
        (3, 5), (3, 7), (4, 7), (4, 8), (5, 8), (6, 8),
    ];
    Graph::from_edges(8, edges.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
}

/// The four vertex sets of the configuration, 0-based.
pub fn four_minor_sets() -> Vec<Vec<usize>> {
    [
        vec![1, 2, 3, 4, 5, 6, 7],
        vec![2, 3, 4, 5, 6, 7, 8],
        vec![1, 2, 3, 4, 5, 6, 8],
        vec![1, 2, 3, 5, 6, 7, 8],
    ]
    .into_iter()
    .map(|s| s.into_iter().map(|v| v - 1).collect())
    .collect()
}
