//! Exact treedepth by recursion over minimal separators.
//!
//! A connected subproblem `U` that is a clique has treedepth `|U|`; otherwise
//! `td(U)` is the minimum over minimal separators `S` of `U` of
//! `|S| + max td(C)` over the components `C` of `U \ S`. Subproblems are
//! memoized by their vertex set in the input graph.
//!
//! Some optimal separator has at most `2 tw(U)` vertices, so with
//! [`Pruning::TwoTw`] only separators up to twice a treewidth upper bound are
//! generated. Both modes return the same decomposition.

use std::collections::HashMap;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separators::{
    enumerate_minimal_separators, minimal_separators_within, BoundedMode, SeparatorSet,
};
use crate::treewidth::{
    degeneracy_within, treewidth_exact_value, treewidth_upper, DEFAULT_EXACT_BUDGET,
};
use crate::vertex_set::VertexSet;

/// Rooted forest on the vertices of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreedepthDecomposition {
    /// `parent[v]`, `None` for roots.
    pub parent: Vec<Option<usize>>,
    /// Number of vertices on a longest root-to-leaf path.
    pub height: usize,
}

impl TreedepthDecomposition {
    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.parent.len())
            .filter(|&v| self.parent[v].is_none())
            .collect()
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.parent.len()];
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                ch[*p].push(v);
            }
        }
        ch
    }

    /// Depth of every vertex (roots have depth 1), or `None` if the parent
    /// mapping has a cycle or an out-of-range entry.
    pub fn depths(&self) -> Option<Vec<usize>> {
        let n = self.parent.len();
        let mut depth = vec![0usize; n];
        for start in 0..n {
            let mut path = Vec::new();
            let mut v = start;
            while depth[v] == 0 {
                if path.len() > n {
                    return None;
                }
                path.push(v);
                match self.parent[v] {
                    None => break,
                    Some(p) if p < n => v = p,
                    Some(_) => return None,
                }
            }
            let mut d = if depth[v] == 0 { 0 } else { depth[v] };
            while let Some(u) = path.pop() {
                d += 1;
                depth[u] = d;
            }
        }
        Some(depth)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Pruning {
    /// Only separators of size at most twice a treewidth upper bound.
    #[default]
    TwoTw,
    None,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TwMode {
    /// Exact treewidth for subproblems within `exact_tw_budget`, min-fill above.
    #[default]
    ExactWithinBudget,
    HeuristicOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveConfig {
    pub pruning: Pruning,
    pub tw_mode: TwMode,
    /// Cap on memoized subproblems.
    pub memo_limit: Option<usize>,
    pub exact_tw_budget: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            pruning: Pruning::default(),
            tw_mode: TwMode::default(),
            memo_limit: None,
            exact_tw_budget: DEFAULT_EXACT_BUDGET,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Distinct connected subproblems visited.
    pub subproblems: usize,
    /// Separator candidates generated over all subproblems.
    pub separators_enumerated: usize,
    /// Generated candidates that bounds discarded without recursing into.
    pub separators_pruned: usize,
    /// Largest separator recursed into.
    pub max_separator_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub td: usize,
    pub decomposition: TreedepthDecomposition,
    pub stats: SolveStats,
}

/// Exact treedepth with a canonical optimal decomposition.
///
/// The separator placed on top of each subproblem is the first optimal one
/// in (size, lexicographic) order, laid out as a chain in ascending vertex
/// order with the component subtrees hanging from its last vertex.
pub fn treedepth(g: &Graph, cfg: &SolveConfig) -> Result<Solution> {
    let mut solver = Solver::new(g, *cfg);
    let mut parent = vec![None; g.vertex_count()];
    let mut td = 0;
    for comp in g.connected_components() {
        td = td.max(solver.exact(&comp)?);
        solver.build(&comp, None, &mut parent)?;
    }
    let stats = solver.stats();
    Ok(Solution {
        td,
        decomposition: TreedepthDecomposition { parent, height: td },
        stats,
    })
}

/// Minimal separators `S` with `|S| + max td(C) = td(G)` over the
/// components `C` of `G \ S`.
pub fn optimal_top_separators(g: &Graph) -> Result<SeparatorSet> {
    if g.is_complete() {
        return Err(Error::Domain(
            "complete graphs have no minimal separator".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Domain(
            "top separators need a connected graph".into(),
        ));
    }
    let cfg = SolveConfig {
        pruning: Pruning::None,
        ..SolveConfig::default()
    };
    let mut solver = Solver::new(g, cfg);
    let all = g.vertices();
    let td = solver.exact(&all)?;
    let mut optimal = Vec::new();
    for s in enumerate_minimal_separators(g, None).iter() {
        if s.len() >= td {
            continue;
        }
        let rem = td - s.len();
        let mut ok = true;
        for c in g.components_within(&all.difference(s)) {
            if !solver.decide(&c, rem)? {
                ok = false;
                break;
            }
        }
        if ok {
            optimal.push(s.clone());
        }
    }
    Ok(SeparatorSet::new(optimal, None))
}

/// Top separator of a single-tree decomposition: every vertex if the tree is
/// a path, otherwise the chain from the root down to the shallowest vertex
/// with at least two children.
pub fn top_separator(t: &TreedepthDecomposition) -> Result<VertexSet> {
    let roots = t.roots();
    if roots.len() != 1 {
        return Err(Error::Domain(format!(
            "top separator needs a single tree, found {} roots",
            roots.len()
        )));
    }
    if t.depths().is_none() {
        return Err(Error::Input("parent mapping is not a forest".into()));
    }
    let children = t.children();
    let mut out = VertexSet::new();
    let mut v = roots[0];
    loop {
        out.insert(v);
        match children[v].as_slice() {
            [] => return Ok((0..t.parent.len()).collect()),
            [only] => v = *only,
            _ => return Ok(out),
        }
    }
}

/// Checks that `t` is a forest on the vertices of `g` in which every edge
/// joins an ancestor and a descendant. Returns the validity and the height
/// recomputed from the parent mapping (0 when the mapping has a cycle).
pub fn verify_treedepth_decomposition(
    g: &Graph,
    t: &TreedepthDecomposition,
) -> Result<(bool, usize)> {
    let n = g.vertex_count();
    if t.parent.len() != n {
        return Err(Error::Input(format!(
            "decomposition covers {} vertices, graph has {n}",
            t.parent.len()
        )));
    }
    if let Some(p) = t.parent.iter().flatten().find(|&&p| p >= n) {
        return Err(Error::Input(format!("parent {p} outside 0..{n}")));
    }
    let Some(depth) = t.depths() else {
        return Ok((false, 0));
    };
    let height = depth.iter().copied().max().unwrap_or(0);
    for (u, v) in g.edges() {
        let (mut deep, shallow) = if depth[u] >= depth[v] { (u, v) } else { (v, u) };
        while depth[deep] > depth[shallow] {
            deep = t.parent[deep].expect("non-root above depth 1");
        }
        if deep != shallow {
            return Ok((false, height));
        }
    }
    Ok((true, height))
}

struct Entry {
    lb: usize,
    ub: usize,
    clique: bool,
    /// Sorted by (size, largest component, lexicographic).
    seps: Option<Rc<Vec<VertexSet>>>,
    expanded: Vec<bool>,
}

struct Solver<'g> {
    g: &'g Graph,
    cfg: SolveConfig,
    memo: HashMap<VertexSet, Entry>,
    enumerated: usize,
    max_separator_size: usize,
}

impl<'g> Solver<'g> {
    fn new(g: &'g Graph, cfg: SolveConfig) -> Self {
        Solver {
            g,
            cfg,
            memo: HashMap::new(),
            enumerated: 0,
            max_separator_size: 0,
        }
    }

    fn stats(&self) -> SolveStats {
        SolveStats {
            subproblems: self.memo.len(),
            separators_enumerated: self.enumerated,
            separators_pruned: self
                .memo
                .values()
                .map(|e| e.expanded.iter().filter(|&&x| !x).count())
                .sum(),
            max_separator_size: self.max_separator_size,
        }
    }

    /// `(lower, upper)` bounds on `td(U)` for connected `U`, creating the
    /// memo entry on first sight.
    fn bounds(&mut self, u: &VertexSet) -> Result<(usize, usize)> {
        if let Some(e) = self.memo.get(u) {
            return Ok((e.lb, e.ub));
        }
        if let Some(limit) = self.cfg.memo_limit {
            if self.memo.len() >= limit {
                return Err(Error::MemoLimit {
                    limit,
                    stats: self.stats(),
                });
            }
        }
        let n = u.len();
        let clique = self.g.is_clique(u);
        let (lb, ub) = if clique {
            (n, n)
        } else {
            let tw_lb = (degeneracy_within(self.g, u) + 1) as usize;
            (tw_lb.max(path_lower_bound(self.g, u)), n - 1)
        };
        self.memo.insert(
            u.clone(),
            Entry {
                lb,
                ub,
                clique,
                seps: None,
                expanded: Vec::new(),
            },
        );
        Ok((lb, ub))
    }

    fn exact(&mut self, u: &VertexSet) -> Result<usize> {
        loop {
            let (lb, ub) = self.bounds(u)?;
            if lb == ub || self.decide(u, lb)? {
                return Ok(lb);
            }
        }
    }

    /// Whether `td(U) <= k`.
    fn decide(&mut self, u: &VertexSet, k: usize) -> Result<bool> {
        let (lb, ub) = self.bounds(u)?;
        if k >= ub {
            return Ok(true);
        }
        if k < lb {
            return Ok(false);
        }
        let seps = self.separators(u)?;
        for (i, s) in seps.iter().enumerate() {
            if s.len() >= k {
                break;
            }
            let rem = k - s.len();
            let mut comps = self.g.components_within(&u.difference(s));
            let mut hopeless = false;
            for c in &comps {
                if self.bounds(c)?.0 > rem {
                    hopeless = true;
                    break;
                }
            }
            if hopeless {
                continue;
            }
            self.mark_expanded(u, i, s.len());
            comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
            let mut ok = true;
            for c in &comps {
                if !self.decide(c, rem)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.memo.get_mut(u).expect("entry exists").ub = k;
                return Ok(true);
            }
        }
        self.memo.get_mut(u).expect("entry exists").lb = k + 1;
        Ok(false)
    }

    fn mark_expanded(&mut self, u: &VertexSet, i: usize, size: usize) {
        self.memo.get_mut(u).expect("entry exists").expanded[i] = true;
        self.max_separator_size = self.max_separator_size.max(size);
    }

    fn separators(&mut self, u: &VertexSet) -> Result<Rc<Vec<VertexSet>>> {
        if let Some(seps) = self.memo.get(u).and_then(|e| e.seps.clone()) {
            return Ok(seps);
        }
        let bound = match self.cfg.pruning {
            Pruning::TwoTw => Some(2 * self.treewidth_bound(u)?),
            Pruning::None => None,
        };
        let list = minimal_separators_within(self.g, u, bound, BoundedMode::ComponentSearch);
        let mut keyed: Vec<(usize, usize, VertexSet)> = list
            .into_iter()
            .map(|s| {
                let largest = self
                    .g
                    .components_within(&u.difference(&s))
                    .iter()
                    .map(VertexSet::len)
                    .max()
                    .unwrap_or(0);
                (s.len(), largest, s)
            })
            .collect();
        keyed.sort();
        let seps: Rc<Vec<VertexSet>> = Rc::new(keyed.into_iter().map(|(_, _, s)| s).collect());
        self.enumerated += seps.len();
        let e = self.memo.get_mut(u).expect("entry exists");
        e.expanded = vec![false; seps.len()];
        e.seps = Some(seps.clone());
        Ok(seps)
    }

    fn treewidth_bound(&self, u: &VertexSet) -> Result<usize> {
        let sub = self.g.induced_subgraph(u)?.graph;
        let n = sub.vertex_count();
        if sub.edge_count() + 1 == n {
            // connected with n - 1 edges: a tree
            return Ok(usize::from(n > 1));
        }
        let w = match self.cfg.tw_mode {
            TwMode::ExactWithinBudget if n <= self.cfg.exact_tw_budget.min(28) => {
                treewidth_exact_value(&sub, self.cfg.exact_tw_budget)?
            }
            _ => treewidth_upper(&sub).0,
        };
        Ok(w.max(0) as usize)
    }

    /// First optimal separator of `U` in (size, lexicographic) order, or
    /// `None` for a clique.
    fn canonical_separator(&mut self, u: &VertexSet) -> Result<Option<VertexSet>> {
        let td = self.exact(u)?;
        if self.memo[u].clique {
            return Ok(None);
        }
        let mut seps: Vec<(usize, VertexSet)> =
            self.separators(u)?.iter().cloned().enumerate().collect();
        seps.sort_by(|a, b| a.1.cmp_size_lex(&b.1));
        for (i, s) in seps {
            if s.len() >= td {
                break;
            }
            let rem = td - s.len();
            let comps = self.g.components_within(&u.difference(&s));
            let mut ok = true;
            for c in &comps {
                if !self.decide(c, rem)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.mark_expanded(u, i, s.len());
                return Ok(Some(s));
            }
        }
        unreachable!("an optimal separator attains the exact value")
    }

    fn build(
        &mut self,
        u: &VertexSet,
        above: Option<usize>,
        parent: &mut [Option<usize>],
    ) -> Result<()> {
        let top = self.canonical_separator(u)?.unwrap_or_else(|| u.clone());
        let mut prev = above;
        for v in top.iter() {
            parent[v] = prev;
            prev = Some(v);
        }
        for c in self.g.components_within(&u.difference(&top)) {
            self.build(&c, prev, parent)?;
        }
        Ok(())
    }
}

/// `td(P_{d+1}) = floor(log2(d + 1)) + 1` where `d` is the eccentricity
/// found by a double BFS sweep; an induced path of `d + 1` vertices exists.
fn path_lower_bound(g: &Graph, u: &VertexSet) -> usize {
    let Some(start) = u.first() else {
        return 0;
    };
    let (far, _) = farthest(g, u, start);
    let (_, d) = farthest(g, u, far);
    let vertices = d + 1;
    (usize::BITS - vertices.leading_zeros()) as usize
}

fn farthest(g: &Graph, u: &VertexSet, start: usize) -> (usize, usize) {
    let mut seen = VertexSet::singleton(start);
    let mut frontier = vec![start];
    let mut last = (start, 0);
    let mut dist = 0;
    while !frontier.is_empty() {
        last = (*frontier.iter().min().expect("non-empty"), dist);
        let mut next = Vec::new();
        for &v in &frontier {
            for &w in g.neighbors(v) {
                if u.contains(w) && seen.insert(w) {
                    next.push(w);
                }
            }
        }
        frontier = next;
        dist += 1;
    }
    last
}
