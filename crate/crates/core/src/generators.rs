//! Graph families: basic shapes, the grid-with-pendant-path constructions
//! (broom, double broom, corner graph), parallel paths with exponentially
//! many minimal separators, and seeded random k-trees, cographs and maximal
//! outerplanar graphs.
//!
//! Vertex labels are stable. Grid vertex `(i, j)` (1-based row `i` of `rows`,
//! column `j` of `cols`) gets label `(i - 1) * cols + (j - 1)`. Path vertices
//! follow in construction order, each path listed from its grid end. Hub
//! vertices come last.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasicKind {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `Grid(rows, cols)`.
    Grid(usize, usize),
}

fn positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::Input(format!("{name} must be positive")))
    } else {
        Ok(())
    }
}

fn default_limit() -> usize {
    Budgets::default().generator_vertices
}

fn within_limit(count: Option<usize>, limit: usize) -> Result<usize> {
    match count {
        Some(c) if c <= limit => Ok(c),
        Some(c) => Err(Error::Budget {
            what: "graph generation",
            size: c,
            budget: limit,
        }),
        None => Err(Error::Budget {
            what: "graph generation",
            size: usize::MAX,
            budget: limit,
        }),
    }
}

pub fn basic(kind: BasicKind) -> Result<Graph> {
    let mut edges = Vec::new();
    let n = match kind {
        BasicKind::Path(n) => {
            positive("path length", n)?;
            edges.extend((1..n).map(|i| (i - 1, i)));
            n
        }
        BasicKind::Cycle(n) => {
            if n < 3 {
                return Err(Error::Input("cycle needs at least 3 vertices".into()));
            }
            edges.extend((0..n).map(|i| (i, (i + 1) % n)));
            n
        }
        BasicKind::Complete(n) => {
            positive("clique size", n)?;
            for u in 0..n {
                edges.extend((u + 1..n).map(|v| (u, v)));
            }
            n
        }
        BasicKind::CompleteBipartite(a, b) => {
            positive("side a", a)?;
            positive("side b", b)?;
            for u in 0..a {
                edges.extend((a..a + b).map(|v| (u, v)));
            }
            a + b
        }
        BasicKind::Grid(rows, cols) => {
            positive("rows", rows)?;
            positive("columns", cols)?;
            grid_edges(rows, cols, &mut edges);
            rows * cols
        }
    };
    Graph::from_edges(n, &edges)
}

fn grid_edges(rows: usize, cols: usize, edges: &mut Vec<(usize, usize)>) {
    for i in 0..rows {
        for j in 0..cols {
            let v = i * cols + j;
            if j + 1 < cols {
                edges.push((v, v + 1));
            }
            if i + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
}

/// A generated graph with its grid, path and hub vertices.
#[derive(Clone, Debug)]
pub struct Construction {
    pub graph: Graph,
    pub grid: VertexSet,
    pub paths: VertexSet,
    pub hubs: VertexSet,
}

/// Label of 1-based grid vertex `(row, col)` in a grid with `cols` columns.
pub fn grid_label(cols: usize, row: usize, col: usize) -> usize {
    (row - 1) * cols + (col - 1)
}

fn pendant_len(k: usize) -> Option<usize> {
    1usize
        .checked_shl(k as u32)
        .filter(|_| k < usize::BITS as usize)
        .map(|p| p - 1)
}

struct Builder {
    edges: Vec<(usize, usize)>,
    next: usize,
}

impl Builder {
    /// Appends a path of `len` fresh vertices, joining its first vertex to
    /// `head` and its last to `tail` when given.
    fn path(&mut self, len: usize, head: Option<usize>, tail: Option<usize>) {
        let start = self.next;
        self.next += len;
        for v in start + 1..self.next {
            self.edges.push((v - 1, v));
        }
        if len > 0 {
            if let Some(h) = head {
                self.edges.push((h, start));
            }
            if let Some(t) = tail {
                self.edges.push((self.next - 1, t));
            }
        }
    }
}

fn grid_builder(rows: usize, cols: usize) -> Builder {
    let mut edges = Vec::new();
    grid_edges(rows, cols, &mut edges);
    Builder {
        edges,
        next: rows * cols,
    }
}

fn finish(b: Builder, total: usize, grid: usize, hubs: usize) -> Result<Construction> {
    debug_assert_eq!(b.next + hubs, total);
    let graph = Graph::from_edges(total, &b.edges)?;
    Ok(Construction {
        graph,
        grid: VertexSet::full(grid),
        paths: (grid..total - hubs).collect(),
        hubs: (total - hubs..total).collect(),
    })
}

/// `n x m` grid with a pendant path of `2^k - 1` vertices at each `(i, m)`.
pub fn broom(n: usize, m: usize, k: usize) -> Result<Construction> {
    broom_limited(n, m, k, default_limit())
}

pub fn broom_limited(n: usize, m: usize, k: usize, limit: usize) -> Result<Construction> {
    positive("n", n)?;
    positive("m", m)?;
    positive("k", k)?;
    let p = pendant_len(k);
    let total = within_limit(
        p.and_then(|p| n.checked_mul(p))
            .and_then(|x| n.checked_mul(m).and_then(|g| g.checked_add(x))),
        limit,
    )?;
    let p = p.unwrap_or(0);
    let mut b = grid_builder(n, m);
    for i in 1..=n {
        b.path(p, Some(grid_label(m, i, m)), None);
    }
    finish(b, total, n * m, 0)
}

/// Grid with pendant paths of `2^k - 1` vertices at both `(i, 1)` and `(i, m)`.
pub fn double_broom(n: usize, m: usize, k: usize) -> Result<Construction> {
    double_broom_limited(n, m, k, default_limit())
}

pub fn double_broom_limited(n: usize, m: usize, k: usize, limit: usize) -> Result<Construction> {
    positive("n", n)?;
    positive("k", k)?;
    if m < 2 {
        return Err(Error::Input("double broom needs m >= 2".into()));
    }
    let p = pendant_len(k);
    let total = within_limit(
        p.and_then(|p| (2 * n).checked_mul(p))
            .and_then(|x| n.checked_mul(m).and_then(|g| g.checked_add(x))),
        limit,
    )?;
    let p = p.unwrap_or(0);
    let mut b = grid_builder(n, m);
    for i in 1..=n {
        for j in [1, m] {
            b.path(p, Some(grid_label(m, i, j)), None);
        }
    }
    finish(b, total, n * m, 0)
}

/// Grid plus `l` hubs; every boundary vertex `(i, 1)`, `(i, m)` is joined to
/// every hub by its own path of `2^k - 1` vertices.
pub fn corner_graph(n: usize, m: usize, k: usize, l: usize) -> Result<Construction> {
    corner_graph_limited(n, m, k, l, default_limit())
}

pub fn corner_graph_limited(
    n: usize,
    m: usize,
    k: usize,
    l: usize,
    limit: usize,
) -> Result<Construction> {
    positive("n", n)?;
    positive("k", k)?;
    if m < 2 {
        return Err(Error::Input("corner graph needs m >= 2".into()));
    }
    let p = pendant_len(k);
    let total = within_limit(
        p.and_then(|p| (2 * n).checked_mul(l)?.checked_mul(p))
            .and_then(|x| n.checked_mul(m)?.checked_add(l)?.checked_add(x)),
        limit,
    )?;
    let p = p.unwrap_or(0);
    let hub0 = total - l;
    let mut b = grid_builder(n, m);
    for i in 1..=n {
        for j in [1, m] {
            for w in 0..l {
                b.path(p, Some(grid_label(m, i, j)), Some(hub0 + w));
            }
        }
    }
    finish(b, total, n * m, l)
}

/// Terminals `a = 0` and `b = 1` joined by `k` disjoint paths `a - x_i - y_i - b`
/// with `x_i = 2 + 2i` and `y_i = 3 + 2i`.
pub fn exp_sep_graph(k: usize) -> Result<Graph> {
    positive("k", k)?;
    let mut edges = Vec::with_capacity(3 * k);
    for i in 0..k {
        let (x, y) = (2 + 2 * i, 3 + 2 * i);
        edges.extend([(0, x), (x, y), (y, 1)]);
    }
    Graph::from_edges(2 + 2 * k, &edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomFamily {
    /// k-tree: `K_{k+1}` grown by attaching vertices to random k-cliques.
    KTree { k: usize },
    /// Cograph built from a random cotree of union and join nodes.
    Cograph,
    /// Maximal outerplanar graph: a triangle grown by random ears.
    MaximalOuterplanar,
}

pub fn random_family(family: RandomFamily, n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match family {
        RandomFamily::KTree { k } => random_ktree(n, k, &mut rng),
        RandomFamily::Cograph => random_cograph(n, &mut rng),
        RandomFamily::MaximalOuterplanar => random_outerplanar(n, &mut rng),
    }
}

fn random_ktree(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if k < 1 || k >= n {
        return Err(Error::Input(format!(
            "k-tree needs 1 <= k < n (k = {k}, n = {n})"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..=k {
        edges.extend((u + 1..=k).map(|v| (u, v)));
    }
    let base: Vec<usize> = (0..=k).collect();
    let mut cliques: Vec<Vec<usize>> = (0..=k)
        .map(|skip| base.iter().copied().filter(|&v| v != skip).collect())
        .collect();
    for v in k + 1..n {
        let q = cliques[rng.gen_range(0..cliques.len())].clone();
        edges.extend(q.iter().map(|&u| (u, v)));
        for skip in 0..k {
            let mut c: Vec<usize> = q.iter().copied().filter(|&u| u != q[skip]).collect();
            c.push(v);
            cliques.push(c);
        }
    }
    Graph::from_edges(n, &edges)
}

fn random_cograph(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    positive("n", n)?;
    let mut pieces: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut edges = Vec::new();
    while pieces.len() > 1 {
        let i = rng.gen_range(0..pieces.len());
        let a = pieces.swap_remove(i);
        let j = rng.gen_range(0..pieces.len());
        let b = pieces.swap_remove(j);
        if rng.gen_bool(0.5) {
            for &u in &a {
                edges.extend(b.iter().map(|&v| (u, v)));
            }
        }
        pieces.push(a.into_iter().chain(b).collect());
    }
    Graph::from_edges(n, &edges)
}

fn random_outerplanar(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Input(
            "maximal outerplanar graph needs n >= 3".into(),
        ));
    }
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut outer = vec![0, 1, 2];
    for v in 3..n {
        let i = rng.gen_range(0..outer.len());
        let (a, b) = (outer[i], outer[(i + 1) % outer.len()]);
        edges.extend([(a, v), (b, v)]);
        outer.insert(i + 1, v);
    }
    // relabel so vertex ids carry no construction order
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = edges.into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(n, &edges)
}
