//! Treewidth: exact subset DP for small graphs, greedy bounds, and tree
//! decomposition checking. The empty graph has treewidth -1.

use std::collections::{BTreeSet, HashMap};

use crate::error::{check_budget, Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_EXACT_BUDGET: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    /// Pairs of bag indices.
    pub tree_edges: Vec<(usize, usize)>,
    pub width: isize,
}

/// `lower <= tw(G) <= upper`, with the elimination order achieving `upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwBounds {
    pub lower: isize,
    pub upper: isize,
    pub upper_witness: Vec<usize>,
}

pub fn treewidth_bounds(g: &Graph) -> TwBounds {
    let (upper, upper_witness) = treewidth_upper(g);
    TwBounds {
        lower: treewidth_lower(g),
        upper,
        upper_witness,
    }
}

/// Tree decomposition induced by eliminating vertices in `order`.
///
/// Each vertex gets the bag of itself plus its not-yet-eliminated neighbors
/// in the filled graph; that bag hangs below the bag of the earliest of those
/// neighbors to be eliminated.
pub fn decomposition_from_order(g: &Graph, order: &[usize]) -> Result<TreeDecomposition> {
    let n = g.vertex_count();
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || position[v] != usize::MAX {
            return Err(Error::Input(
                "elimination order is not a permutation".into(),
            ));
        }
        position[v] = i;
    }
    if order.len() != n {
        return Err(Error::Input(
            "elimination order is not a permutation".into(),
        ));
    }
    let mut adj: Vec<VertexSet> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut bags = Vec::with_capacity(n);
    let mut parent_of = vec![None; n];
    let mut width: isize = -1;
    for (i, &v) in order.iter().enumerate() {
        let later = adj[v].clone();
        for u in later.iter() {
            let mut others = later.clone();
            others.remove(u);
            adj[u].union_with(&others);
            adj[u].remove(v);
        }
        parent_of[i] = later.iter().map(|u| position[u]).min();
        let mut bag = later;
        bag.insert(v);
        width = width.max(bag.len() as isize - 1);
        bags.push(bag);
    }
    let mut tree_edges = Vec::with_capacity(n.saturating_sub(1));
    let mut last_root: Option<usize> = None;
    for (i, p) in parent_of.iter().enumerate() {
        match p {
            Some(p) => tree_edges.push((i, *p)),
            None => {
                if let Some(r) = last_root {
                    tree_edges.push((r, i));
                }
                last_root = Some(i);
            }
        }
    }
    Ok(TreeDecomposition {
        bags,
        tree_edges,
        width,
    })
}

/// Greedy min-fill elimination; ties go to lower degree, then lower id.
pub fn treewidth_upper(g: &Graph) -> (isize, Vec<usize>) {
    let n = g.vertex_count();
    let mut adj: Vec<VertexSet> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive = g.vertices();
    let mut order = Vec::with_capacity(n);
    let mut width: isize = -1;
    while let Some(first) = alive.first() {
        let mut best = (usize::MAX, usize::MAX, first);
        for v in alive.iter() {
            let nb = adj[v].to_vec();
            let mut fill = 0;
            for (i, &a) in nb.iter().enumerate() {
                fill += nb[i + 1..].iter().filter(|&&b| !adj[a].contains(b)).count();
                if fill > best.0 {
                    break;
                }
            }
            let key = (fill, nb.len(), v);
            if key < best {
                best = key;
            }
        }
        let v = best.2;
        let nb = adj[v].clone();
        width = width.max(nb.len() as isize);
        for u in nb.iter() {
            adj[u].union_with(&nb);
            adj[u].remove(u);
            adj[u].remove(v);
        }
        alive.remove(v);
        order.push(v);
    }
    (width, order)
}

/// Minimum-degree lower bound: the largest minimum degree seen while
/// repeatedly deleting a minimum-degree vertex.
pub fn treewidth_lower(g: &Graph) -> isize {
    degeneracy_within(g, &g.vertices())
}

/// Minimum-degree lower bound of the subgraph induced by `within`; -1 when
/// `within` is empty.
pub(crate) fn degeneracy_within(g: &Graph, within: &VertexSet) -> isize {
    let mut degree: HashMap<usize, usize> = within
        .iter()
        .map(|v| {
            (
                v,
                g.neighbors(v)
                    .iter()
                    .filter(|&&w| within.contains(w))
                    .count(),
            )
        })
        .collect();
    let mut queue: BTreeSet<(usize, usize)> = degree.iter().map(|(&v, &d)| (d, v)).collect();
    let mut best: isize = -1;
    while let Some((d, v)) = queue.pop_first() {
        best = best.max(d as isize);
        degree.remove(&v);
        for &w in g.neighbors(v) {
            if let Some(dw) = degree.get_mut(&w) {
                queue.remove(&(*dw, w));
                *dw -= 1;
                queue.insert((*dw, w));
            }
        }
    }
    best
}

/// Exact treewidth with an optimal tree decomposition.
pub fn treewidth_exact(g: &Graph) -> Result<(isize, TreeDecomposition)> {
    treewidth_exact_with_budget(g, DEFAULT_EXACT_BUDGET)
}

pub fn treewidth_exact_with_budget(g: &Graph, budget: usize) -> Result<(isize, TreeDecomposition)> {
    check_budget("exact treewidth", g.vertex_count(), budget.min(28))?;
    let mut bags = Vec::new();
    let mut tree_edges = Vec::new();
    let mut width: isize = -1;
    for comp in g.connected_components() {
        let view = g.induced_subgraph(&comp)?;
        let order = exact_order(&view.graph);
        let td = decomposition_from_order(&view.graph, &order)?;
        let offset = bags.len();
        if offset > 0 {
            tree_edges.push((0, offset));
        }
        width = width.max(td.width);
        tree_edges.extend(td.tree_edges.iter().map(|&(a, b)| (a + offset, b + offset)));
        bags.extend(td.bags.iter().map(|b| view.lift(b)));
    }
    Ok((
        width,
        TreeDecomposition {
            bags,
            tree_edges,
            width,
        },
    ))
}

/// Exact treewidth value only; same budget rules as `treewidth_exact`.
pub fn treewidth_exact_value(g: &Graph, budget: usize) -> Result<isize> {
    check_budget("exact treewidth", g.vertex_count(), budget.min(28))?;
    let mut width = -1;
    for comp in g.connected_components() {
        let view = g.induced_subgraph(&comp)?;
        width = width.max(exact_value(&view.graph));
    }
    Ok(width)
}

fn exact_value(g: &Graph) -> isize {
    let lower = treewidth_lower(g);
    let (upper, _) = treewidth_upper(g);
    if lower == upper {
        return upper;
    }
    let table = subset_table(g);
    table[(1usize << g.vertex_count()) - 1] as isize
}

/// Elimination order of optimal width.
fn exact_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let lower = treewidth_lower(g);
    let (upper, order) = treewidth_upper(g);
    if lower == upper {
        return order;
    }
    let table = subset_table(g);
    let adj = g.adjacency_masks();
    let mut rev = Vec::with_capacity(n);
    let mut s: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    while s != 0 {
        let target = table[s as usize];
        let v = (0..n)
            .find(|&v| {
                s >> v & 1 == 1 && {
                    let rest = s & !(1 << v);
                    table[rest as usize].max(q_size(&adj, rest, v)) == target
                }
            })
            .expect("optimal predecessor exists");
        rev.push(v);
        s &= !(1 << v);
    }
    rev.reverse();
    rev
}

/// `TW(S) = min over v in S of max(TW(S \ v), |Q(S \ v, v)|)` where `Q(S, v)`
/// are the vertices outside `S + v` reachable from `v` through `S`.
fn subset_table(g: &Graph) -> Vec<u8> {
    let n = g.vertex_count();
    let adj = g.adjacency_masks();
    let size = 1usize << n;
    let mut table = vec![0u8; size];
    for s in 1..size {
        let s = s as u32;
        let mut best = u8::MAX;
        let mut rest_bits = s;
        while rest_bits != 0 {
            let v = rest_bits.trailing_zeros() as usize;
            rest_bits &= rest_bits - 1;
            let rest = s & !(1 << v);
            let prev = table[rest as usize];
            if prev >= best {
                continue;
            }
            let q = q_size(&adj, rest, v);
            best = best.min(prev.max(q));
        }
        table[s as usize] = best;
    }
    table
}

fn q_size(adj: &[u32], s: u32, v: usize) -> u8 {
    let mut comp: u32 = 1 << v;
    let mut frontier: u32 = 1 << v;
    let mut reach: u32 = 0;
    while frontier != 0 {
        let u = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let nb = adj[u];
        reach |= nb;
        let new = nb & s & !comp;
        comp |= new;
        frontier |= new;
    }
    (reach & !s & !(1 << v)).count_ones() as u8
}

/// Checks the three tree decomposition properties and that `tree_edges` is
/// a tree over the bags.
pub fn verify_tree_decomposition(g: &Graph, td: &TreeDecomposition) -> Result<bool> {
    let n = g.vertex_count();
    let nb = td.bags.len();
    for bag in &td.bags {
        if bag.last().is_some_and(|v| v >= n) {
            return Err(Error::Input(format!(
                "bag {bag:?} has a vertex outside 0..{n}"
            )));
        }
    }
    for &(a, b) in &td.tree_edges {
        if a >= nb || b >= nb {
            return Err(Error::Input(format!(
                "tree edge ({a}, {b}) outside 0..{nb}"
            )));
        }
    }
    if nb == 0 {
        return Ok(n == 0 && td.tree_edges.is_empty());
    }
    if td.tree_edges.len() != nb - 1 {
        return Ok(false);
    }
    let mut dsu: Vec<usize> = (0..nb).collect();
    fn find(d: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while d[r] != r {
            r = d[r];
        }
        let mut y = x;
        while d[y] != r {
            let next = d[y];
            d[y] = r;
            y = next;
        }
        r
    }
    for &(a, b) in &td.tree_edges {
        let (ra, rb) = (find(&mut dsu, a), find(&mut dsu, b));
        if ra == rb {
            return Ok(false);
        }
        dsu[ra] = rb;
    }
    let mut covered = VertexSet::new();
    for bag in &td.bags {
        covered.union_with(bag);
    }
    if covered != g.vertices() {
        return Ok(false);
    }
    for (u, v) in g.edges() {
        if !td.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
            return Ok(false);
        }
    }
    for v in 0..n {
        let bags_with = td.bags.iter().filter(|b| b.contains(v)).count();
        let edges_with = td
            .tree_edges
            .iter()
            .filter(|&&(a, b)| td.bags[a].contains(v) && td.bags[b].contains(v))
            .count();
        if edges_with + 1 != bags_with {
            return Ok(false);
        }
    }
    Ok(true)
}
