//! Brute-force ground truth for tiny graphs and the test corpus.

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{check_budget, Error, Result};
use crate::graph::Graph;

pub const DEFAULT_TD_BUDGET: usize = 12;
pub const DEFAULT_TW_BUDGET: usize = 8;
/// Largest `max_n` accepted by the exhaustive corpus.
pub const EXHAUSTIVE_MAX_N: usize = 7;
const CONNECT_RETRIES: usize = 1000;

pub fn treedepth_bruteforce(g: &Graph) -> Result<usize> {
    treedepth_bruteforce_with_budget(g, DEFAULT_TD_BUDGET)
}

/// `td(empty) = 0`, the maximum over components for a disconnected graph,
/// and `1 + min_v td(G - v)` for a connected one.
pub fn treedepth_bruteforce_with_budget(g: &Graph, budget: usize) -> Result<usize> {
    let n = g.vertex_count();
    check_budget("treedepth oracle", n, budget.min(28))?;
    let adj = g.adjacency_masks();
    let mut memo = HashMap::new();
    let all = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    Ok(td_mask(&adj, all, &mut memo) as usize)
}

fn td_mask(adj: &[u32], mask: u32, memo: &mut HashMap<u32, u8>) -> u8 {
    if mask == 0 {
        return 0;
    }
    if mask.count_ones() == 1 {
        return 1;
    }
    if let Some(&t) = memo.get(&mask) {
        return t;
    }
    let first = component(adj, mask, mask.trailing_zeros() as usize);
    let t = if first != mask {
        let mut rest = mask;
        let mut best = 0;
        while rest != 0 {
            let c = component(adj, mask, rest.trailing_zeros() as usize);
            best = best.max(td_mask(adj, c, memo));
            rest &= !c;
        }
        best
    } else {
        let mut best = u8::MAX;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros();
            bits &= bits - 1;
            best = best.min(1 + td_mask(adj, mask & !(1 << v), memo));
        }
        best
    };
    memo.insert(mask, t);
    t
}

fn component(adj: &[u32], within: u32, start: usize) -> u32 {
    let mut comp = 1u32 << start;
    let mut frontier = comp;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & within & !comp;
        comp |= new;
        frontier |= new;
    }
    comp
}

pub fn treewidth_bruteforce(g: &Graph) -> Result<isize> {
    treewidth_bruteforce_with_budget(g, DEFAULT_TW_BUDGET)
}

/// Minimum over all `n!` elimination orderings of the largest number of
/// later neighbors a vertex has when it is eliminated.
pub fn treewidth_bruteforce_with_budget(g: &Graph, budget: usize) -> Result<isize> {
    let n = g.vertex_count();
    check_budget("treewidth oracle", n, budget.min(12))?;
    if n == 0 {
        return Ok(-1);
    }
    let adj = g.adjacency_masks();
    let mut best = n as isize - 1;
    orderings(&adj, (1u32 << n) - 1, 0, &mut best);
    Ok(best)
}

fn orderings(adj: &[u32], alive: u32, width: isize, best: &mut isize) {
    if alive == 0 {
        *best = (*best).min(width);
        return;
    }
    let mut bits = alive;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let nb = adj[v] & alive;
        let mut next = adj.to_vec();
        let mut rest = nb;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next[u] |= nb & !(1 << u);
        }
        orderings(
            &next,
            alive & !(1 << v),
            width.max(nb.count_ones() as isize),
            best,
        );
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusMode {
    /// Every connected graph up to isomorphism.
    ExhaustiveConnected,
    /// Independent edges with a fixed probability, resampled until connected.
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorpusSpec {
    pub mode: CorpusMode,
    pub min_n: usize,
    pub max_n: usize,
    pub samples: usize,
    pub seed: u64,
    pub edge_probability: f64,
}

impl CorpusSpec {
    pub fn exhaustive(max_n: usize) -> CorpusSpec {
        CorpusSpec {
            mode: CorpusMode::ExhaustiveConnected,
            min_n: 1,
            max_n,
            samples: 0,
            seed: 0,
            edge_probability: 0.5,
        }
    }

    pub fn random(min_n: usize, max_n: usize, samples: usize, seed: u64) -> CorpusSpec {
        CorpusSpec {
            mode: CorpusMode::Random,
            min_n,
            max_n,
            samples,
            seed,
            edge_probability: 0.5,
        }
    }
}

/// Graphs described by `spec`, in a deterministic order.
///
/// Random mode draws `n` uniformly from `min_n..=max_n` and resamples until
/// connected; after a bounded number of failures the components of the last
/// draw are chained together through their smallest vertices.
pub fn corpus(spec: &CorpusSpec) -> Result<Vec<Graph>> {
    if spec.min_n > spec.max_n {
        return Err(Error::Input(format!(
            "min_n {} exceeds max_n {}",
            spec.min_n, spec.max_n
        )));
    }
    match spec.mode {
        CorpusMode::ExhaustiveConnected => {
            if spec.max_n > EXHAUSTIVE_MAX_N {
                return Err(Error::Budget {
                    what: "exhaustive corpus",
                    size: spec.max_n,
                    budget: EXHAUSTIVE_MAX_N,
                });
            }
            Ok(exhaustive_connected(spec.max_n)
                .into_iter()
                .filter(|g| g.vertex_count() >= spec.min_n)
                .collect())
        }
        CorpusMode::Random => {
            if spec.samples == 0 {
                return Err(Error::Input(
                    "random corpus needs at least one sample".into(),
                ));
            }
            let p = spec.edge_probability;
            if !(p > 0.0 && p < 1.0) {
                return Err(Error::Input(format!("edge probability {p} outside (0, 1)")));
            }
            if spec.min_n == 0 {
                return Err(Error::Input("random corpus needs min_n >= 1".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            Ok((0..spec.samples)
                .map(|_| {
                    let n = rng.gen_range(spec.min_n..=spec.max_n);
                    random_connected(&mut rng, n, p)
                })
                .collect())
        }
    }
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for _ in 0..CONNECT_RETRIES {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        g = Graph::from_edges(n, &edges).expect("edges in range");
        if g.is_connected() {
            return g;
        }
    }
    let comps = g.connected_components();
    let mut edges = g.edges();
    for pair in comps.windows(2) {
        edges.push((pair[0].first().unwrap(), pair[1].first().unwrap()));
    }
    Graph::from_edges(n, &edges).expect("edges in range")
}

/// Connected graphs on `1..=max_n` vertices, one per isomorphism class,
/// ordered by vertex count and then by canonical code.
fn exhaustive_connected(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    // all graphs on n vertices as canonical adjacency masks
    let mut level: BTreeSet<Vec<u32>> = BTreeSet::new();
    level.insert(Vec::new());
    for n in 1..=max_n {
        let mut next = BTreeSet::new();
        for prev in &level {
            for nb in 0u32..(1 << (n - 1)) {
                let mut adj = prev.clone();
                adj.push(nb);
                for (u, row) in adj.iter_mut().enumerate().take(n - 1) {
                    if nb >> u & 1 == 1 {
                        *row |= 1 << (n - 1);
                    }
                }
                next.insert(canonical(&adj));
            }
        }
        let mut connected: Vec<(u64, Graph)> = next
            .iter()
            .map(|adj| (code(adj), from_masks(adj)))
            .filter(|(_, g)| g.is_connected())
            .collect();
        connected.sort_by_key(|(c, _)| *c);
        out.extend(connected.into_iter().map(|(_, g)| g));
        level = next;
    }
    out
}

fn from_masks(adj: &[u32]) -> Graph {
    let n = adj.len();
    let mut edges = Vec::new();
    for (u, &row) in adj.iter().enumerate() {
        for v in u + 1..n {
            if row >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("edges in range")
}

/// Upper-triangle adjacency bits in row-major order.
fn code(adj: &[u32]) -> u64 {
    let n = adj.len();
    let mut c = 0u64;
    for (u, &row) in adj.iter().enumerate() {
        for v in u + 1..n {
            c = c << 1 | u64::from(row >> v & 1);
        }
    }
    c
}

/// Relabelling with the smallest code among those that list colour-refinement
/// cells in order.
fn canonical(adj: &[u32]) -> Vec<u32> {
    let n = adj.len();
    let colors = refine(adj);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colors[v]);
    for v in order {
        match cells.last_mut() {
            Some(cell) if colors[cell[0]] == colors[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best: Option<(u64, Vec<u32>)> = None;
    let mut labelling = Vec::with_capacity(n);
    permute_cells(adj, &mut cells, 0, &mut labelling, &mut best);
    best.expect("at least one labelling").1
}

fn permute_cells(
    adj: &[u32],
    cells: &mut [Vec<usize>],
    i: usize,
    labelling: &mut Vec<usize>,
    best: &mut Option<(u64, Vec<u32>)>,
) {
    if i == cells.len() {
        let relabelled = relabel(adj, labelling);
        let c = code(&relabelled);
        if best.as_ref().is_none_or(|(b, _)| c < *b) {
            *best = Some((c, relabelled));
        }
        return;
    }
    let mut cell = cells[i].clone();
    permutations(&mut cell, 0, &mut |perm| {
        let len = labelling.len();
        labelling.extend_from_slice(perm);
        permute_cells(adj, cells, i + 1, labelling, best);
        labelling.truncate(len);
    });
}

fn permutations(items: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, f);
        items.swap(k, i);
    }
}

/// `labelling[new] = old`.
fn relabel(adj: &[u32], labelling: &[usize]) -> Vec<u32> {
    let n = adj.len();
    let mut new_of = vec![0; n];
    for (new, &old) in labelling.iter().enumerate() {
        new_of[old] = new;
    }
    labelling
        .iter()
        .map(|&old| {
            let mut row = 0u32;
            let mut bits = adj[old];
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                row |= 1 << new_of[w];
            }
            row
        })
        .collect()
}

/// Stable colour refinement starting from degrees.
fn refine(adj: &[u32]) -> Vec<usize> {
    let n = adj.len();
    let mut colors: Vec<usize> = adj.iter().map(|r| r.count_ones() as usize).collect();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| colors[w])
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = signatures.iter().collect();
        let rank: HashMap<&(usize, Vec<usize>), usize> =
            distinct.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let next: Vec<usize> = signatures.iter().map(|s| rank[s]).collect();
        let before = colors.iter().collect::<BTreeSet<_>>().len();
        if distinct.len() == before {
            return next;
        }
        colors = next;
    }
}
