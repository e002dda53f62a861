//! Chordal graphs and clique trees, cographs, and small-minor tests.

use crate::error::{check_budget, Error, Result};
use crate::graph::Graph;
use crate::separators::SeparatorSet;
use crate::vertex_set::VertexSet;

pub const DEFAULT_MINOR_BUDGET: usize = 16;

/// Perfect elimination ordering from lexicographic BFS (ties to the lowest
/// id), or `None` if `g` is not chordal.
pub fn is_chordal(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .fold(None::<usize>, |best, v| match best {
                Some(b) if labels[b] >= labels[v] => Some(b),
                _ => Some(v),
            })
            .expect("an unvisited vertex remains");
        visited[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                labels[w].push(n - step);
            }
        }
    }
    visit.reverse();
    is_perfect_elimination(g, &visit).then_some(visit)
}

fn is_perfect_elimination(g: &Graph, order: &[usize]) -> bool {
    let mut position = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    order.iter().all(|&v| {
        let later: VertexSet = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| position[w] > position[v])
            .collect();
        g.is_clique(&later)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTreeEdge {
    pub a: usize,
    pub b: usize,
    /// `cliques[a] ∩ cliques[b]`.
    pub separator: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    /// Maximal cliques.
    pub cliques: Vec<VertexSet>,
    pub edges: Vec<CliqueTreeEdge>,
}

impl CliqueTree {
    pub fn max_clique_size(&self) -> usize {
        self.cliques.iter().map(VertexSet::len).max().unwrap_or(0)
    }
}

/// Maximal cliques read off a perfect elimination ordering, joined by a
/// maximum-weight spanning tree on intersection sizes. Cliques of different
/// components are joined through empty intersections.
pub fn clique_tree(g: &Graph) -> Result<CliqueTree> {
    let order = is_chordal(g).ok_or_else(|| Error::Domain("graph is not chordal".into()))?;
    let mut position = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let candidates: Vec<VertexSet> = order
        .iter()
        .map(|&v| {
            let mut c: VertexSet = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| position[w] > position[v])
                .collect();
            c.insert(v);
            c
        })
        .collect();
    let mut cliques: Vec<VertexSet> = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(j, d)| j != i && c.is_subset(d) && (c.len() < d.len() || j < i));
        if !dominated {
            cliques.push(c.clone());
        }
    }
    // Prim, ties to the lowest indices
    let k = cliques.len();
    let mut edges = Vec::new();
    let mut in_tree = vec![false; k];
    let mut best: Vec<Option<(usize, usize)>> = vec![None; k];
    if k > 0 {
        in_tree[0] = true;
        for j in 1..k {
            best[j] = Some((cliques[0].intersection(&cliques[j]).len(), 0));
        }
    }
    for _ in 1..k {
        let j = (0..k)
            .filter(|&j| !in_tree[j])
            .max_by(|&x, &y| {
                let (wx, _) = best[x].expect("weight set");
                let (wy, _) = best[y].expect("weight set");
                wx.cmp(&wy).then(y.cmp(&x))
            })
            .expect("a clique is outside the tree");
        let (_, from) = best[j].expect("weight set");
        in_tree[j] = true;
        edges.push(CliqueTreeEdge {
            a: from,
            b: j,
            separator: cliques[from].intersection(&cliques[j]),
        });
        for t in 0..k {
            if !in_tree[t] {
                let w = cliques[j].intersection(&cliques[t]).len();
                if best[t].is_none_or(|(bw, _)| w > bw) {
                    best[t] = Some((w, j));
                }
            }
        }
    }
    Ok(CliqueTree { cliques, edges })
}

/// Distinct edge intersections of a clique tree: the minimal separators of
/// the underlying chordal graph.
pub fn chordal_minimal_separators(ct: &CliqueTree) -> SeparatorSet {
    SeparatorSet::new(ct.edges.iter().map(|e| e.separator.clone()).collect(), None)
}

/// A graph is a cograph iff every induced subgraph on two or more vertices
/// is disconnected or has a disconnected complement.
pub fn is_cograph(g: &Graph) -> bool {
    cograph_within(g, &g.vertices())
}

fn cograph_within(g: &Graph, w: &VertexSet) -> bool {
    if w.len() <= 1 {
        return true;
    }
    let comps = g.components_within(w);
    if comps.len() > 1 {
        return comps.iter().all(|c| cograph_within(g, c));
    }
    let co = complement_components(g, w);
    co.len() > 1 && co.iter().all(|c| cograph_within(g, c))
}

fn complement_components(g: &Graph, w: &VertexSet) -> Vec<VertexSet> {
    let mut left = w.clone();
    let mut out = Vec::new();
    while let Some(start) = left.first() {
        left.remove(start);
        let mut comp = VertexSet::singleton(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let non_neighbors: Vec<usize> = left.iter().filter(|&u| !g.has_edge(u, v)).collect();
            for u in non_neighbors {
                left.remove(u);
                comp.insert(u);
                stack.push(u);
            }
        }
        out.push(comp);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Minor {
    K4,
    K23,
}

impl Minor {
    fn order(self) -> usize {
        match self {
            Minor::K4 => 4,
            Minor::K23 => 5,
        }
    }
}

pub fn has_minor(g: &Graph, h: Minor) -> Result<bool> {
    has_minor_with_budget(g, h, DEFAULT_MINOR_BUDGET)
}

/// Branch-set search. In a connected graph any model of a connected minor
/// extends to one whose branch sets cover every vertex, so it suffices to
/// split each component into `|V(H)|` connected parts.
pub fn has_minor_with_budget(g: &Graph, h: Minor, budget: usize) -> Result<bool> {
    check_budget("minor search", g.vertex_count(), budget.min(28))?;
    let core = reduce(g, h);
    for comp in core.connected_components() {
        if comp.len() < h.order() {
            continue;
        }
        let sub = core.induced_subgraph(&comp)?.graph;
        let adj = sub.adjacency_masks();
        let all = (1u32 << sub.vertex_count()) - 1;
        if split(&adj, all, &mut Vec::new(), h) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Drops vertices of degree at most one; for `K4` also suppresses degree-two
/// vertices by joining their neighbors.
fn reduce(g: &Graph, h: Minor) -> Graph {
    let n = g.vertex_count();
    let mut adj: Vec<VertexSet> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive = vec![true; n];
    loop {
        let mut changed = false;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            let d = adj[v].len();
            if d <= 1 || (h == Minor::K4 && d == 2) {
                let nb = adj[v].to_vec();
                for &u in &nb {
                    adj[u].remove(v);
                }
                if let [a, b] = nb[..] {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
                adj[v] = VertexSet::new();
                alive[v] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut edges = Vec::new();
    for (u, row) in adj.iter().enumerate() {
        edges.extend(row.iter().filter(|&w| w > u).map(|w| (u, w)));
    }
    let kept: VertexSet = (0..n).filter(|&v| alive[v]).collect();
    let reduced = Graph::from_edges(n, &edges).expect("edges in range");
    reduced
        .induced_subgraph(&kept)
        .expect("kept vertices in range")
        .graph
}

fn neighbors_of(adj: &[u32], set: u32) -> u32 {
    let mut out = 0;
    let mut bits = set;
    while bits != 0 {
        out |= adj[bits.trailing_zeros() as usize];
        bits &= bits - 1;
    }
    out & !set
}

fn touches(adj: &[u32], a: u32, b: u32) -> bool {
    neighbors_of(adj, a) & b != 0
}

fn component_count(adj: &[u32], within: u32) -> usize {
    let mut left = within;
    let mut count = 0;
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & within & !comp;
            comp |= new;
            frontier |= new;
        }
        left &= !comp;
        count += 1;
    }
    count
}

/// Splits `remaining` into connected parts, the next part always holding
/// the lowest remaining vertex.
fn split(adj: &[u32], remaining: u32, parts: &mut Vec<u32>, h: Minor) -> bool {
    let need = h.order() - parts.len();
    if need == 0 {
        return remaining == 0 && quotient_has(adj, parts, h);
    }
    if (remaining.count_ones() as usize) < need || component_count(adj, remaining) > need {
        return false;
    }
    if need == 1 {
        parts.push(remaining);
        let found = extends(adj, parts, h) && quotient_has(adj, parts, h);
        parts.pop();
        return found;
    }
    let v = remaining.trailing_zeros() as usize;
    connected_sets(adj, remaining, 1 << v, 0, &mut |part| {
        parts.push(part);
        let found = extends(adj, parts, h) && split(adj, remaining & !part, parts, h);
        parts.pop();
        found
    })
}

/// For `K4` every pair of parts must touch, so a new part has to touch all
/// earlier ones.
fn extends(adj: &[u32], parts: &[u32], h: Minor) -> bool {
    match h {
        Minor::K4 => {
            let (last, earlier) = parts.split_last().expect("a part was pushed");
            earlier.iter().all(|&p| touches(adj, p, *last))
        }
        Minor::K23 => true,
    }
}

fn quotient_has(adj: &[u32], parts: &[u32], h: Minor) -> bool {
    let k = parts.len();
    let touch = |i: usize, j: usize| touches(adj, parts[i], parts[j]);
    match h {
        Minor::K4 => (0..k).all(|i| (i + 1..k).all(|j| touch(i, j))),
        Minor::K23 => (0..k).any(|a| {
            (a + 1..k).any(|b| {
                (0..k)
                    .filter(|&c| c != a && c != b)
                    .all(|c| touch(a, c) && touch(b, c))
            })
        }),
    }
}

/// Calls `f` on every connected `P` with `start ⊆ P ⊆ within` that avoids
/// `excluded`, each exactly once, stopping early when `f` returns true.
fn connected_sets(
    adj: &[u32],
    within: u32,
    start: u32,
    excluded: u32,
    f: &mut dyn FnMut(u32) -> bool,
) -> bool {
    if f(start) {
        return true;
    }
    let mut ext = neighbors_of(adj, start) & within & !excluded;
    let mut excluded = excluded;
    while ext != 0 {
        let w = ext & ext.wrapping_neg();
        ext &= !w;
        if connected_sets(adj, within, start | w, excluded, f) {
            return true;
        }
        excluded |= w;
    }
    false
}

/// No `K4` and no `K_{2,3}` minor.
pub fn is_outerplanar(g: &Graph) -> Result<bool> {
    is_outerplanar_with_budget(g, DEFAULT_MINOR_BUDGET)
}

pub fn is_outerplanar_with_budget(g: &Graph, budget: usize) -> Result<bool> {
    Ok(!has_minor_with_budget(g, Minor::K4, budget)?
        && !has_minor_with_budget(g, Minor::K23, budget)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{basic, exp_sep_graph, random_family, BasicKind, RandomFamily};
    use crate::separators::minimal_separators_bruteforce;
    use proptest::prelude::*;

    fn set(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn chordal_examples() {
        assert!(is_chordal(&basic(BasicKind::Cycle(4)).unwrap()).is_none());
        assert!(is_chordal(&basic(BasicKind::Complete(4)).unwrap()).is_some());
        let tree = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        assert!(is_chordal(&tree).is_some());
        assert!(is_chordal(&Graph::empty(0)).is_some());
    }

    #[test]
    fn clique_tree_examples() {
        let p4 = basic(BasicKind::Path(4)).unwrap();
        let ct = clique_tree(&p4).unwrap();
        let mut cliques = ct.cliques.clone();
        cliques.sort();
        assert_eq!(cliques, vec![set(&[0, 1]), set(&[1, 2]), set(&[2, 3])]);
        assert_eq!(
            chordal_minimal_separators(&ct).as_slice(),
            &[set(&[1]), set(&[2])]
        );

        let k4 = clique_tree(&basic(BasicKind::Complete(4)).unwrap()).unwrap();
        assert_eq!(k4.cliques, vec![set(&[0, 1, 2, 3])]);
        assert!(k4.edges.is_empty());
        assert!(chordal_minimal_separators(&k4).is_empty());

        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let ct = clique_tree(&diamond).unwrap();
        assert_eq!(ct.cliques.len(), 2);
        assert_eq!(ct.edges.len(), 1);
        assert_eq!(ct.edges[0].separator, set(&[1, 2]));

        assert!(matches!(
            clique_tree(&basic(BasicKind::Cycle(5)).unwrap()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn cograph_examples() {
        assert!(!is_cograph(&basic(BasicKind::Path(4)).unwrap()));
        assert!(is_cograph(&basic(BasicKind::Cycle(4)).unwrap()));
        assert!(is_cograph(&basic(BasicKind::Complete(6)).unwrap()));
        assert!(is_cograph(&Graph::empty(3)));
        assert!(!is_cograph(&basic(BasicKind::Cycle(5)).unwrap()));
    }

    #[test]
    fn minor_examples() {
        let k4 = basic(BasicKind::Complete(4)).unwrap();
        let k23 = basic(BasicKind::CompleteBipartite(2, 3)).unwrap();
        assert!(has_minor(&k4, Minor::K4).unwrap());
        assert!(!has_minor(&basic(BasicKind::Cycle(5)).unwrap(), Minor::K4).unwrap());
        assert!(has_minor(&k23, Minor::K23).unwrap());
        assert!(!has_minor(&basic(BasicKind::Path(6)).unwrap(), Minor::K23).unwrap());
        assert!(has_minor(&basic(BasicKind::Grid(3, 3)).unwrap(), Minor::K4).unwrap());
        assert!(!has_minor(&basic(BasicKind::Grid(2, 4)).unwrap(), Minor::K23).unwrap());
        assert!(has_minor(&exp_sep_graph(3).unwrap(), Minor::K23).unwrap());
        assert!(!has_minor(&exp_sep_graph(3).unwrap(), Minor::K4).unwrap());
        assert!(has_minor(&basic(BasicKind::Path(17)).unwrap(), Minor::K4).is_err());
    }

    #[test]
    fn outerplanar_examples() {
        assert!(!is_outerplanar(&basic(BasicKind::Complete(4)).unwrap()).unwrap());
        assert!(!is_outerplanar(&basic(BasicKind::CompleteBipartite(2, 3)).unwrap()).unwrap());
        assert!(is_outerplanar(&basic(BasicKind::Cycle(6)).unwrap()).unwrap());
        for seed in 0..20 {
            let n = 3 + (seed as usize % 8);
            let g = random_family(RandomFamily::MaximalOuterplanar, n, seed).unwrap();
            assert!(is_outerplanar(&g).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn ktree_separators_match_bruteforce() {
        for seed in 0..10 {
            let g = random_family(RandomFamily::KTree { k: 2 }, 8, seed).unwrap();
            let ct = clique_tree(&g).unwrap();
            assert_eq!(
                chordal_minimal_separators(&ct),
                minimal_separators_bruteforce(&g).unwrap()
            );
        }
    }

    /// Induced `P_4` by exhaustive search over ordered 4-tuples.
    fn has_induced_p4(g: &Graph) -> bool {
        let n = g.vertex_count();
        (0..n).any(|a| {
            (0..n).any(|b| {
                (0..n).any(|c| {
                    (0..n).any(|d| {
                        let vs = [a, b, c, d];
                        let distinct = (0..4).all(|i| (i + 1..4).all(|j| vs[i] != vs[j]));
                        distinct
                            && g.has_edge(a, b)
                            && g.has_edge(b, c)
                            && g.has_edge(c, d)
                            && !g.has_edge(a, c)
                            && !g.has_edge(b, d)
                            && !g.has_edge(a, d)
                    })
                })
            })
        })
    }

    /// Chordless cycle of length at least four, by checking every subset.
    fn has_hole(g: &Graph) -> bool {
        let n = g.vertex_count();
        (0u32..1 << n).any(|mask| {
            let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            s.len() >= 4
                && g.is_connected_within(&s)
                && s.iter()
                    .all(|v| g.neighbors(v).iter().filter(|&&w| s.contains(w)).count() == 2)
        })
    }

    fn small_graph() -> impl Strategy<Value = Graph> {
        (1usize..=7).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut i = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[i] {
                            edges.push((u, v));
                        }
                        i += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn cograph_iff_no_induced_p4(g in small_graph()) {
            prop_assert_eq!(is_cograph(&g), !has_induced_p4(&g));
        }

        #[test]
        fn chordal_iff_no_hole(g in small_graph()) {
            prop_assert_eq!(is_chordal(&g).is_some(), !has_hole(&g));
        }

        #[test]
        fn clique_tree_is_valid(g in small_graph()) {
            if let Ok(ct) = clique_tree(&g) {
                prop_assert_eq!(ct.edges.len() + 1, ct.cliques.len().max(1));
                for v in 0..g.vertex_count() {
                    let holding: Vec<usize> = (0..ct.cliques.len()).filter(|&i| ct.cliques[i].contains(v)).collect();
                    let inner = ct.edges.iter().filter(|e| ct.cliques[e.a].contains(v) && ct.cliques[e.b].contains(v)).count();
                    prop_assert_eq!(inner + 1, holding.len());
                }
                for c in &ct.cliques {
                    prop_assert!(g.is_clique(c));
                    prop_assert!((0..g.vertex_count()).all(|v| c.contains(v) || !g.is_clique(&c.union(&VertexSet::singleton(v)))));
                }
                prop_assert_eq!(chordal_minimal_separators(&ct), minimal_separators_bruteforce(&g).unwrap());
            }
        }
    }
}
