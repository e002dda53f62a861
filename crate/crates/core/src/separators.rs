//! Full components, minimal separator recognition and enumeration.

use std::collections::{HashMap, HashSet};

use crate::error::{check_budget, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_BRUTE_BUDGET: usize = 16;

/// Deduplicated minimal separators in `(size, lexicographic)` order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SeparatorSet {
    separators: Vec<VertexSet>,
    /// Size bound used during enumeration, if any.
    pub bound: Option<usize>,
}

impl SeparatorSet {
    pub fn new(mut separators: Vec<VertexSet>, bound: Option<usize>) -> SeparatorSet {
        separators.sort_by(VertexSet::cmp_size_lex);
        separators.dedup();
        SeparatorSet { separators, bound }
    }

    pub fn len(&self) -> usize {
        self.separators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.separators.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.separators.iter()
    }

    pub fn as_slice(&self) -> &[VertexSet] {
        &self.separators
    }

    pub fn contains(&self, s: &VertexSet) -> bool {
        self.separators
            .binary_search_by(|x| x.cmp_size_lex(s))
            .is_ok()
    }

    pub fn max_size(&self) -> Option<usize> {
        self.separators.last().map(VertexSet::len)
    }

    /// Members of size at most `k`.
    pub fn bounded(&self, k: usize) -> SeparatorSet {
        SeparatorSet {
            separators: self
                .separators
                .iter()
                .filter(|s| s.len() <= k)
                .cloned()
                .collect(),
            bound: Some(k),
        }
    }
}

impl<'a> IntoIterator for &'a SeparatorSet {
    type Item = &'a VertexSet;
    type IntoIter = std::slice::Iter<'a, VertexSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.separators.iter()
    }
}

/// How a size-bounded enumeration is carried out.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BoundedMode {
    /// Run the unrestricted closure and drop members above the bound.
    #[default]
    FilterClosure,
    /// Search connected full components whose boundary fits the bound.
    /// Never builds a candidate larger than the bound.
    ComponentSearch,
}

/// Components `C` of `G \ S` with `N(C) = S`, ordered by smallest member.
pub fn full_components(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    full_components_within(g, &g.vertices(), s)
}

pub(crate) fn full_components_within(
    g: &Graph,
    universe: &VertexSet,
    s: &VertexSet,
) -> Vec<VertexSet> {
    g.components_within(&universe.difference(s))
        .into_iter()
        .filter(|c| g.neighborhood_within(c, universe) == *s)
        .collect()
}

/// `S` is a minimal separator iff `G \ S` has at least two full components.
pub fn is_minimal_separator(g: &Graph, s: &VertexSet) -> bool {
    full_components(g, s).len() >= 2
}

/// All minimal separators of `g`, or those of size at most `max_size`.
///
/// For a disconnected graph the empty set is included (it separates any two
/// vertices in different components and has no proper subset).
pub fn enumerate_minimal_separators(g: &Graph, max_size: Option<usize>) -> SeparatorSet {
    enumerate_minimal_separators_with(g, max_size, BoundedMode::default())
}

pub fn enumerate_minimal_separators_with(
    g: &Graph,
    max_size: Option<usize>,
    mode: BoundedMode,
) -> SeparatorSet {
    let all = g.vertices();
    let mut seps = minimal_separators_within(g, &all, max_size, mode);
    if g.connected_components().len() >= 2 {
        seps.push(VertexSet::new());
    }
    SeparatorSet::new(seps, max_size)
}

/// Minimal separators of the subgraph induced by `universe` (non-empty ones
/// only), in unspecified order.
pub(crate) fn minimal_separators_within(
    g: &Graph,
    universe: &VertexSet,
    max_size: Option<usize>,
    mode: BoundedMode,
) -> Vec<VertexSet> {
    match (max_size, mode) {
        (Some(k), BoundedMode::ComponentSearch) => bounded_search(g, universe, k),
        (Some(k), BoundedMode::FilterClosure) => {
            let mut v = closure(g, universe);
            v.retain(|s| s.len() <= k);
            v
        }
        (None, _) => closure(g, universe),
    }
}

/// Generation by closure: seeds are neighborhoods of the components of
/// `U \ N[v]`; every separator `S` and `x` in `S` contributes the
/// neighborhoods of the components of `U \ (S ∪ N(x))`.
fn closure(g: &Graph, universe: &VertexSet) -> Vec<VertexSet> {
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut found = Vec::new();
    let mut queue = Vec::new();

    let add_from =
        |removed: &VertexSet, seen: &mut HashSet<VertexSet>, queue: &mut Vec<VertexSet>| {
            for c in g.components_within(&universe.difference(removed)) {
                let s = g.neighborhood_within(&c, universe);
                if !s.is_empty() && !seen.contains(&s) {
                    seen.insert(s.clone());
                    queue.push(s);
                }
            }
        };

    for v in universe.iter() {
        let mut closed = g.neighbors_within(v, universe);
        closed.insert(v);
        add_from(&closed, &mut seen, &mut queue);
    }
    while let Some(s) = queue.pop() {
        for x in s.iter() {
            let removed = s.union(&g.neighbors_within(x, universe));
            add_from(&removed, &mut seen, &mut queue);
        }
        found.push(s);
    }
    found
}

/// Size-bounded enumeration that is complete for every bound.
///
/// Each connected set `C` whose boundary `N(C)` has at most `k` vertices is
/// built exactly once, from `a = min(C)`, by deciding for each boundary
/// vertex in turn whether it joins `C` or the boundary. Vertices below `a`
/// can never join `C`. Every such `C` is a full component of `N(C)`, so a
/// boundary reached from two different components is a minimal separator.
fn bounded_search(g: &Graph, universe: &VertexSet, k: usize) -> Vec<VertexSet> {
    let mut counts: HashMap<VertexSet, u32> = HashMap::new();
    if k == 0 {
        return Vec::new();
    }
    let mut below = VertexSet::new();
    for a in universe.iter() {
        let x = VertexSet::singleton(a);
        let nx = g.neighborhood_within(&x, universe);
        let mut search = BoundedSearch {
            g,
            universe,
            k,
            a,
            below: &below,
            counts: &mut counts,
        };
        search.grow(x, VertexSet::new(), nx);
        below.insert(a);
    }
    counts
        .into_iter()
        .filter(|&(_, c)| c >= 2)
        .map(|(s, _)| s)
        .collect()
}

struct BoundedSearch<'a> {
    g: &'a Graph,
    universe: &'a VertexSet,
    k: usize,
    a: usize,
    below: &'a VertexSet,
    counts: &'a mut HashMap<VertexSet, u32>,
}

impl BoundedSearch<'_> {
    fn grow(&mut self, x: VertexSet, mut y: VertexSet, nx: VertexSet) {
        // boundary vertices below `a` cannot be in C
        y.union_with(&nx.intersection(self.below));
        if y.len() > self.k {
            return;
        }
        let free = nx.difference(&y);
        let Some(v) = free.first() else {
            if !y.is_empty() {
                *self.counts.entry(y).or_insert(0) += 1;
            }
            return;
        };
        if y.len() == self.k {
            // the boundary is full: C must be the component of `a` avoiding it
            let avoid = y.union(self.below);
            let c = self
                .g
                .component_of(self.a, &self.universe.difference(&avoid));
            let nc = self.g.neighborhood_within(&c, self.universe);
            if nc.is_subset(&y) && !nc.is_empty() {
                *self.counts.entry(nc).or_insert(0) += 1;
            }
            return;
        }
        let mut x_in = x.clone();
        x_in.insert(v);
        let mut nx_in = nx.clone();
        for &w in self.g.neighbors(v) {
            if self.universe.contains(w) {
                nx_in.insert(w);
            }
        }
        nx_in.difference_with(&x_in);
        self.grow(x_in, y.clone(), nx_in);

        y.insert(v);
        self.grow(x, y, nx);
    }
}

/// Reference listing: every subset filtered through `is_minimal_separator`.
pub fn minimal_separators_bruteforce(g: &Graph) -> Result<SeparatorSet> {
    minimal_separators_bruteforce_with_budget(g, DEFAULT_BRUTE_BUDGET)
}

pub fn minimal_separators_bruteforce_with_budget(g: &Graph, budget: usize) -> Result<SeparatorSet> {
    let n = g.vertex_count();
    check_budget("brute-force separator listing", n, budget.min(28))?;
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let s: VertexSet = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if is_minimal_separator(g, &s) {
            out.push(s);
        }
    }
    Ok(SeparatorSet::new(out, None))
}
