//! Named graph families and seeded random generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::new(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v);
    }
    g
}

/// Hub 0 joined to every vertex of the rim cycle `1..=rim`.
pub fn wheel(rim: usize) -> Graph {
    assert!(rim >= 3);
    let mut g = Graph::new(rim + 1);
    for v in 1..=rim {
        g.add_edge(0, v);
        g.add_edge(v, if v == rim { 1 } else { v + 1 });
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

/// Outer 5-cycle 0..5, inner pentagram 5..10, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    g
}

/// `K_{2,2,2}`: vertex `i` is opposite `i + 3`.
pub fn octahedron() -> Graph {
    let mut g = complete(6);
    for i in 0..3 {
        g.remove_edge_mut(i, i + 3);
    }
    g
}

/// Disjoint union, second graph shifted past the first.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let mut g = Graph::new(a.order() + b.order());
    for e in a.edges() {
        g.add_edge(e.u, e.v);
    }
    for e in b.edges() {
        g.add_edge(a.order() + e.u, a.order() + e.v);
    }
    g
}

/// Maximal planar graph on `n >= 3` vertices grown from a triangle by
/// repeatedly inserting a vertex into a uniformly chosen face.
pub fn random_planar(n: usize, seed: u64) -> Graph {
    assert!(n >= 3, "a triangulation needs at least 3 vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for (a, b) in [(0, 1), (1, 2), (0, 2)] {
        g.add_edge(a, b);
    }
    // Both sides of the initial triangle are faces.
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        g.add_edge(v, a);
        g.add_edge(v, b);
        g.add_edge(v, c);
        faces.push([a, b, v]);
        faces.push([b, c, v]);
        faces.push([c, a, v]);
    }
    g
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Uniformly relabels the vertices of `g`.
pub fn shuffle_labels(g: &Graph, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(&mut rng);
    let mut h = Graph::new(g.order());
    for e in g.edges() {
        h.add_edge(perm[e.u], perm[e.v]);
    }
    h
}
