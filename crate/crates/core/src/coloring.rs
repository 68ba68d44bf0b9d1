//! Exact chromatic number, first-fit baselines and partition-guided
//! colorings.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::certificate::{Evidence, FailureCertificate};
use crate::error::{BudgetExhausted, Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::limits::{Limits, Meter};
use crate::minor::{hadwiger_number, is_planar};
use crate::partition::{build_erp, build_srp, BuildError};

/// `colors[v]` is the 0-based color of vertex `v`; `k` is the number of
/// distinct colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        let mut seen: Vec<usize> = colors.clone();
        seen.sort_unstable();
        seen.dedup();
        Coloring {
            k: seen.len(),
            colors,
        }
    }

    pub fn num_colors(&self) -> usize {
        self.k
    }
}

/// Total, proper, and `k` equal to the number of distinct colors.
pub fn validate_coloring(g: &Graph, c: &Coloring) -> bool {
    c.colors.len() == g.order()
        && g.edges().all(|e| c.colors[e.u] != c.colors[e.v])
        && Coloring::new(c.colors.clone()).k == c.k
}

/// First-fit in the given vertex order.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Result<Coloring> {
    let mut seen = VertexSet::EMPTY;
    for &v in order {
        g.check_vertex(v)?;
        if seen.contains(v) {
            return Err(Error::domain(format!("vertex {v} repeated in order")));
        }
        seen.insert(v);
    }
    if seen != g.vertex_set() {
        return Err(Error::domain("order is not a permutation of the vertices"));
    }
    let mut colors = vec![usize::MAX; g.order()];
    for &v in order {
        colors[v] = least_absent(g.neighbors(v).iter().map(|u| colors[u]));
    }
    Ok(Coloring::new(colors))
}

fn least_absent(used: impl Iterator<Item = usize>) -> usize {
    let mask = used
        .filter(|&c| c < 64)
        .fold(0u64, |acc, c| acc | (1u64 << c));
    (!mask).trailing_zeros() as usize
}

/// Proper colorings with at most `k` colors, in canonical order: vertices
/// in `order`, and a vertex may open only the next unused color.
struct Colorer<'a, F> {
    g: &'a Graph,
    order: &'a [usize],
    k: usize,
    colors: Vec<usize>,
    meter: &'a mut Meter,
    on_coloring: F,
}

impl<F> Colorer<'_, F>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn dfs(&mut self, pos: usize, opened: usize) -> Result<ControlFlow<()>, BudgetExhausted> {
        self.meter.tick()?;
        if pos == self.order.len() {
            return Ok((self.on_coloring)(&self.colors));
        }
        let v = self.order[pos];
        let mut blocked = 0u64;
        for u in self.g.neighbors(v) {
            if self.colors[u] != usize::MAX {
                blocked |= 1 << self.colors[u];
            }
        }
        for c in 0..self.k.min(opened + 1) {
            if blocked & (1 << c) != 0 {
                continue;
            }
            self.colors[v] = c;
            let flow = self.dfs(pos + 1, opened.max(c + 1))?;
            self.colors[v] = usize::MAX;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

fn for_each_coloring<F>(
    g: &Graph,
    order: &[usize],
    k: usize,
    meter: &mut Meter,
    on_coloring: F,
) -> Result<(), BudgetExhausted>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut c = Colorer {
        g,
        order,
        k,
        colors: vec![usize::MAX; g.order()],
        meter,
        on_coloring,
    };
    let _ = c.dfs(0, 0)?;
    Ok(())
}

/// Descending degree, then ascending id.
fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn color_with(g: &Graph, k: usize, meter: &mut Meter) -> Result<Option<Coloring>, BudgetExhausted> {
    let order = degree_order(g);
    let mut found = None;
    for_each_coloring(g, &order, k, meter, |colors| {
        found = Some(Coloring::new(colors.to_vec()));
        ControlFlow::Break(())
    })?;
    Ok(found)
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ChromaticError {
    #[error(transparent)]
    Cap(#[from] Error),
    #[error(transparent)]
    Budget(#[from] BudgetExhausted),
}

/// Smallest `k` with a proper `k`-coloring, by iterative deepening.
pub fn chromatic_number(g: &Graph, limits: &Limits) -> Result<(usize, Coloring), ChromaticError> {
    if g.order() > limits.chromatic_cap {
        return Err(Error::OrderCap {
            order: g.order(),
            cap: limits.chromatic_cap,
        }
        .into());
    }
    if g.order() == 0 {
        return Ok((0, Coloring::new(Vec::new())));
    }
    let mut meter = Meter::new(limits.node_budget);
    for k in 1..=g.order() {
        if let Some(c) = color_with(g, k, &mut meter)? {
            return Ok((k, c));
        }
    }
    unreachable!("n colors always suffice")
}

/// 1 color when edgeless, 2 for a forest with edges.
fn forest_coloring(g: &Graph) -> Option<Vec<usize>> {
    if !g.is_forest(g.vertex_set()) {
        return None;
    }
    let (a, _) = g.bipartition(g.vertex_set())?;
    Some(g.vertices().map(|v| usize::from(!a.contains(v))).collect())
}

fn srp_colors(g: &Graph, limits: &Limits) -> Result<Vec<usize>, BuildError> {
    if let Some(c) = forest_coloring(g) {
        return Ok(c);
    }
    let srp = build_srp(g, None, limits)?;
    let (s1, s2) = (srp.parts[0], srp.parts[1]);
    let sub = g.induced_subgraph(s2).expect("part within graph");
    let inner = srp_colors(&sub.graph, limits)?;
    let mut colors = vec![usize::MAX; g.order()];
    for (i, &v) in sub.vertices.iter().enumerate() {
        colors[v] = inner[i];
    }
    for v in s1 {
        colors[v] = least_absent(g.neighbors_in(v, s2).iter().map(|u| colors[u]));
    }
    Ok(colors)
}

/// Colors `G[S_2]` of a special reducible partition recursively, then each
/// `S_1` vertex first-fit against its neighbors in `S_2`. Fails when more
/// colors than the Hadwiger number are used.
pub fn srp_inductive_coloring(g: &Graph, limits: &Limits) -> Result<Coloring, BuildError> {
    if g.order() == 0 {
        return Ok(Coloring::new(Vec::new()));
    }
    let h = hadwiger_number(g, limits)?.number;
    let colors = srp_colors(g, limits)?;
    let c = Coloring::new(colors);
    if c.k > h {
        let v = g
            .vertices()
            .find(|&v| c.colors[v] >= h)
            .expect("some vertex uses a color past the bound");
        let nb = g.neighbors(v);
        let mut seen = Coloring::new(nb.iter().map(|u| c.colors[u]).collect()).colors;
        seen.sort_unstable();
        seen.dedup();
        return Err(BuildError::Failure(Box::new(FailureCertificate::new(
            "hadwiger-bound",
            g,
            vec![
                Evidence::Rainbow {
                    vertex: v,
                    neighbors: nb,
                    colors: seen,
                    allowed: h,
                },
                Evidence::Coloring {
                    colors: c.colors.clone(),
                    k: c.k,
                },
            ],
        ))));
    }
    debug_assert!(validate_coloring(g, &c));
    Ok(c)
}

const MAX_PATHS: usize = 64;

/// Chordless paths of 2 to 4 edges between two vertices of `nb`, through
/// vertices of `within` outside `nb`.
fn connecting_paths(g: &Graph, nb: VertexSet, within: VertexSet) -> Vec<Vec<usize>> {
    fn extend(
        g: &Graph,
        path: &mut Vec<usize>,
        nb: VertexSet,
        inner: VertexSet,
        out: &mut Vec<Vec<usize>>,
    ) {
        if out.len() >= MAX_PATHS {
            return;
        }
        let last = *path.last().expect("nonempty path");
        let on_path: VertexSet = path.iter().collect();
        let edges = path.len() - 1;
        for w in g.neighbors(last) - on_path {
            // Chordless: w touches only its predecessor on the path.
            if (g.neighbors(w) & on_path) != VertexSet::singleton(last) {
                continue;
            }
            if nb.contains(w) {
                if edges >= 1 && w > path[0] {
                    let mut p = path.clone();
                    p.push(w);
                    out.push(p);
                }
            } else if inner.contains(w) && edges + 1 < 4 {
                path.push(w);
                extend(g, path, nb, inner, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    let inner = within - nb;
    for u in nb {
        extend(g, &mut vec![u], nb, inner, &mut out);
    }
    out
}

/// Four-coloring of a planar graph guided by its ERP: the layers after the
/// first are 3-colored, and the first layer is then colored from four
/// colors, using only 3-colorings of the rest under which every common
/// neighborhood of an adjacent first-layer pair shows at most two colors.
pub fn planar_fc4_coloring(g: &Graph, limits: &Limits) -> Result<Coloring, BuildError> {
    if !is_planar(g, limits)? {
        return Err(BuildError::Inapplicable("graph is not planar".into()));
    }
    if let Some(c) = forest_coloring(g) {
        return Ok(Coloring::new(c));
    }
    let erp = build_erp(g, limits)?;
    let s1 = erp.parts[0];
    let rest = g.vertex_set() - s1;
    let pairs: Vec<Edge> = g.edges_within(s1).collect();
    let mut commons = Vec::with_capacity(pairs.len());
    for &e in &pairs {
        let nb = g.neighbors(e.u) & g.neighbors(e.v) & rest;
        if let Some(odd) = g.find_odd_cycle(nb) {
            return Err(BuildError::Failure(Box::new(FailureCertificate::new(
                "common-neighborhood",
                g,
                vec![Evidence::CommonNeighborhood {
                    pair: e,
                    neighborhood: nb,
                    odd_cycle: odd,
                    paths: connecting_paths(g, nb, rest),
                }],
            ))));
        }
        commons.push(nb);
    }

    let sub = g.induced_subgraph(rest).expect("rest within graph");
    let rest_order: Vec<usize> = (0..sub.graph.order()).collect();
    let mut meter = Meter::new(limits.node_budget);
    let mut thetas = 0u64;
    let mut admissible = 0u64;
    let mut result = None;
    let mut inner_budget = Ok(());
    let walk = for_each_coloring(&sub.graph, &rest_order, 3, &mut meter, |theta| {
        thetas += 1;
        let mut colors = vec![usize::MAX; g.order()];
        for (i, &v) in sub.vertices.iter().enumerate() {
            colors[v] = theta[i];
        }
        let ok = commons.iter().all(|nb| {
            Coloring::new(nb.iter().map(|v| colors[v]).collect()).k <= 2
        });
        if !ok {
            return ControlFlow::Continue(());
        }
        admissible += 1;
        let mut m = Meter::new(limits.node_budget);
        match extend_first_layer(g, s1, &mut colors, &mut m) {
            Ok(true) => {
                result = Some(colors);
                ControlFlow::Break(())
            }
            Ok(false) => ControlFlow::Continue(()),
            Err(b) => {
                inner_budget = Err(b);
                ControlFlow::Break(())
            }
        }
    });
    walk?;
    inner_budget?;
    if let Some(colors) = result {
        let c = Coloring::new(colors);
        debug_assert!(validate_coloring(g, &c));
        return Ok(c);
    }
    let (stage, text) = if thetas == 0 {
        ("rest-coloring", "the layers after the first are not 3-colorable".to_string())
    } else if admissible == 0 {
        (
            "theta-map",
            format!("none of {thetas} 3-colorings keeps every common neighborhood within 2 colors"),
        )
    } else {
        (
            "extend-s1",
            format!("none of {admissible} admissible 3-colorings extends to the first layer"),
        )
    };
    Err(BuildError::Failure(Box::new(FailureCertificate::new(
        stage,
        g,
        vec![
            Evidence::Set { vertices: s1 },
            Evidence::Exhausted { searched: thetas },
            Evidence::note(text),
        ],
    ))))
}

/// Backtracking over `s1` in ascending id with colors 0..4.
fn extend_first_layer(
    g: &Graph,
    s1: VertexSet,
    colors: &mut [usize],
    meter: &mut Meter,
) -> Result<bool, BudgetExhausted> {
    fn go(
        g: &Graph,
        order: &[usize],
        colors: &mut [usize],
        meter: &mut Meter,
    ) -> Result<bool, BudgetExhausted> {
        meter.tick()?;
        let Some((&v, tail)) = order.split_first() else {
            return Ok(true);
        };
        let blocked = g
            .neighbors(v)
            .iter()
            .filter(|&u| colors[u] != usize::MAX)
            .fold(0u64, |acc, u| acc | (1 << colors[u]));
        for c in 0..4 {
            if blocked & (1 << c) == 0 {
                colors[v] = c;
                if go(g, tail, colors, meter)? {
                    return Ok(true);
                }
            }
        }
        colors[v] = usize::MAX;
        Ok(false)
    }
    go(g, &s1.to_vec(), colors, meter)
}
