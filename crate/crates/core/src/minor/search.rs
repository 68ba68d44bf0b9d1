//! Backtracking branch-set search.
//!
//! Vertices are decided one at a time, in descending degree then ascending
//! id, as "unused" or as a member of one of the pattern's branch sets.
//! Interchangeable branch sets are opened in a fixed order, so each model
//! is visited once up to pattern symmetry. After every decision the partial
//! model is pruned when some branch set can no longer become connected
//! through undecided vertices, or when two branch sets that must touch
//! cannot reach each other.

use std::ops::ControlFlow;

use crate::error::BudgetExhausted;
use crate::graph::{Graph, VertexSet};
use crate::limits::Meter;

/// Target minor shape: `required[i]` has bit `j` set when branch sets `i`
/// and `j` must be adjacent.
#[derive(Clone, Debug)]
pub(crate) struct Pattern {
    pub(crate) required: Vec<u64>,
    /// Classes of interchangeable branch sets, each listed in opening order.
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    /// The first two classes are interchangeable as wholes.
    swap_first_two: bool,
}

impl Pattern {
    pub(crate) fn clique(t: usize) -> Self {
        let all = if t == 64 { u64::MAX } else { (1u64 << t) - 1 };
        Pattern {
            required: (0..t).map(|i| all & !(1u64 << i)).collect(),
            classes: vec![(0..t).collect()],
            class_of: vec![0; t],
            swap_first_two: false,
        }
    }

    pub(crate) fn complete_bipartite(a: usize, b: usize) -> Self {
        let left = (1u64 << a) - 1;
        let right = ((1u64 << b) - 1) << a;
        let mut required = vec![right; a];
        required.extend(std::iter::repeat_n(left, b));
        Pattern {
            required,
            classes: vec![(0..a).collect(), (a..a + b).collect()],
            class_of: (0..a + b).map(|i| usize::from(i >= a)).collect(),
            swap_first_two: a == b,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.required.len()
    }

    fn edge_count(&self) -> usize {
        self.required.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    fn min_degree(&self) -> usize {
        self.required
            .iter()
            .map(|r| r.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }
}

/// Static decision order: descending degree, then ascending id.
fn branch_order(g: &Graph, within: VertexSet) -> Vec<usize> {
    let mut order: Vec<usize> = within.to_vec();
    order.sort_by_key(|&v| (std::cmp::Reverse((g.neighbors(v) & within).len()), v));
    order
}

/// Repeatedly drops vertices of degree <= 1: a model of a pattern with
/// minimum degree >= 2 never needs them.
fn prune_low_degree(g: &Graph, pattern: &Pattern) -> VertexSet {
    let mut keep = g.vertex_set();
    if pattern.min_degree() < 2 {
        return keep;
    }
    loop {
        let low: VertexSet = keep
            .iter()
            .filter(|&v| (g.neighbors(v) & keep).len() <= 1)
            .collect();
        if low.is_empty() {
            return keep;
        }
        keep = keep - low;
    }
}

struct Search<'a, F> {
    g: &'a Graph,
    pattern: &'a Pattern,
    order: Vec<usize>,
    sets: Vec<VertexSet>,
    opened: Vec<bool>,
    /// Next unopened index within each class.
    next_in_class: Vec<usize>,
    undecided: VertexSet,
    meter: &'a mut Meter,
    /// Stop at the first model and do not insist on deciding every vertex.
    first_only: bool,
    on_model: F,
}

impl<'a, F> Search<'a, F>
where
    F: FnMut(&[VertexSet]) -> ControlFlow<()>,
{
    fn region(&self, i: usize) -> VertexSet {
        let b = self.sets[i];
        self.g.reach(b.first().expect("opened sets are nonempty"), b | self.undecided)
    }

    fn feasible(&self) -> bool {
        let k = self.pattern.len();
        let unopened = self.opened.iter().filter(|&&o| !o).count();
        if unopened > self.undecided.len() {
            return false;
        }
        let mut regions = [VertexSet::EMPTY; 64];
        for i in 0..k {
            if self.opened[i] {
                let r = self.region(i);
                if !self.sets[i].is_subset(r) {
                    return false;
                }
                regions[i] = r;
            }
        }
        for i in 0..k {
            if !self.opened[i] {
                continue;
            }
            let reach = regions[i] | self.g.boundary(regions[i]);
            let need = self.pattern.required[i];
            for j in VertexSet::from_bits(need) {
                if self.opened[j] {
                    if j > i && !reach.intersects(regions[j]) {
                        return false;
                    }
                } else if !reach.intersects(self.undecided) {
                    return false;
                }
            }
        }
        true
    }

    fn complete(&self) -> bool {
        if !self.opened.iter().all(|&o| o) {
            return false;
        }
        let k = self.pattern.len();
        for i in 0..k {
            if !self.g.is_connected_set(self.sets[i]) {
                return false;
            }
        }
        for i in 0..k {
            let nb = self.g.boundary(self.sets[i]);
            for j in VertexSet::from_bits(self.pattern.required[i]) {
                if j > i && !nb.intersects(self.sets[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Classes from which a new branch set may be opened right now.
    fn openable(&self) -> Vec<usize> {
        let p = self.pattern;
        let mut out = Vec::new();
        let nothing_opened = !self.opened.iter().any(|&o| o);
        for (c, members) in p.classes.iter().enumerate() {
            if self.next_in_class[c] >= members.len() {
                continue;
            }
            if p.swap_first_two && nothing_opened && c == 1 {
                continue;
            }
            out.push(members[self.next_in_class[c]]);
        }
        out
    }

    fn dfs(&mut self, pos: usize) -> Result<ControlFlow<()>, BudgetExhausted> {
        self.meter.tick()?;
        if !self.feasible() {
            return Ok(ControlFlow::Continue(()));
        }
        if self.first_only && self.complete() {
            return Ok((self.on_model)(&self.sets));
        }
        if pos == self.order.len() {
            if !self.first_only && self.complete() {
                return Ok((self.on_model)(&self.sets));
            }
            return Ok(ControlFlow::Continue(()));
        }
        let v = self.order[pos];
        self.undecided.remove(v);

        for i in self.openable() {
            let c = self.pattern.class_of[i];
            self.opened[i] = true;
            self.next_in_class[c] += 1;
            self.sets[i].insert(v);
            let flow = self.dfs(pos + 1);
            self.sets[i].remove(v);
            self.next_in_class[c] -= 1;
            self.opened[i] = false;
            if flow?.is_break() {
                self.undecided.insert(v);
                return Ok(ControlFlow::Break(()));
            }
        }
        for i in 0..self.pattern.len() {
            if !self.opened[i] {
                continue;
            }
            self.sets[i].insert(v);
            let flow = self.dfs(pos + 1);
            self.sets[i].remove(v);
            if flow?.is_break() {
                self.undecided.insert(v);
                return Ok(ControlFlow::Break(()));
            }
        }
        let flow = self.dfs(pos + 1);
        self.undecided.insert(v);
        flow
    }
}

fn run<F>(
    g: &Graph,
    pattern: &Pattern,
    meter: &mut Meter,
    first_only: bool,
    on_model: F,
) -> Result<(), BudgetExhausted>
where
    F: FnMut(&[VertexSet]) -> ControlFlow<()>,
{
    let k = pattern.len();
    if k == 0 {
        return Ok(());
    }
    let within = if first_only {
        prune_low_degree(g, pattern)
    } else {
        g.vertex_set()
    };
    if within.len() < k || g.edge_count_within(within) < pattern.edge_count() {
        return Ok(());
    }
    let mut search = Search {
        g,
        pattern,
        order: branch_order(g, within),
        sets: vec![VertexSet::EMPTY; k],
        opened: vec![false; k],
        next_in_class: vec![0; pattern.classes.len()],
        undecided: within,
        meter,
        first_only,
        on_model,
    };
    let _ = search.dfs(0)?;
    Ok(())
}

/// First model of `pattern` in canonical branch order.
pub(crate) fn find_model(
    g: &Graph,
    pattern: &Pattern,
    meter: &mut Meter,
) -> Result<Option<Vec<VertexSet>>, BudgetExhausted> {
    let mut found = None;
    run(g, pattern, meter, true, |sets| {
        found = Some(sets.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Every model (full assignment of all vertices) up to pattern symmetry.
pub(crate) fn for_each_model<F>(
    g: &Graph,
    pattern: &Pattern,
    meter: &mut Meter,
    on_model: F,
) -> Result<(), BudgetExhausted>
where
    F: FnMut(&[VertexSet]) -> ControlFlow<()>,
{
    run(g, pattern, meter, false, on_model)
}
