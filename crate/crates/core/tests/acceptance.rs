//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sepdepth::classes::{chordal_minimal_separators, clique_tree, is_outerplanar};
use sepdepth::generators::{
    basic, broom, corner_graph, double_broom, exp_sep_graph, random_family, BasicKind, RandomFamily,
};
use sepdepth::oracle::{corpus, treedepth_bruteforce, CorpusSpec};
use sepdepth::pace::{parse_gr, parse_tree, write_gr, write_tree, GrDocument};
use sepdepth::{
    enumerate_minimal_separators, minimal_separators_bruteforce, optimal_top_separators, treedepth,
    treewidth_exact, treewidth_upper, verify_treedepth_decomposition, Graph, Pruning, SolveConfig,
    VertexSet,
};

type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], summary: String) -> Outcome {
    if failures.is_empty() {
        Outcome {
            pass: true,
            detail: summary,
        }
    } else {
        let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
        Outcome {
            pass: false,
            detail: format!(
                "{summary}; {} failure(s): {}",
                failures.len(),
                shown.join(" | ")
            ),
        }
    }
}

fn describe(g: &Graph) -> String {
    format!("n={} edges={:?}", g.vertex_count(), g.edges())
}

/// Exhaustive connected graphs on up to 7 vertices plus 500 random connected
/// graphs on 8 to 12 vertices (half at edge probability 0.3, half at 0.5).
fn full_corpus() -> Vec<Graph> {
    let mut graphs = corpus(&CorpusSpec::exhaustive(7)).unwrap();
    for (p, seed) in [(0.3, 0x5eed_0003), (0.5, 0x5eed_0005)] {
        let spec = CorpusSpec {
            edge_probability: p,
            ..CorpusSpec::random(8, 12, 250, seed)
        };
        graphs.extend(corpus(&spec).unwrap());
    }
    graphs
}

fn with_pruning(pruning: Pruning) -> SolveConfig {
    SolveConfig {
        pruning,
        ..SolveConfig::default()
    }
}

fn criterion_1(graphs: &[Graph]) -> Outcome {
    let mut failures = Vec::new();
    for g in graphs {
        let expected = treedepth_bruteforce(g).unwrap();
        for pruning in [Pruning::TwoTw, Pruning::None] {
            let sol = treedepth(g, &with_pruning(pruning)).unwrap();
            if sol.td != expected {
                failures.push(format!(
                    "{pruning:?} td {} vs oracle {expected} on {}",
                    sol.td,
                    describe(g)
                ));
            }
            if verify_treedepth_decomposition(g, &sol.decomposition).unwrap() != (true, sol.td) {
                failures.push(format!(
                    "{pruning:?} decomposition invalid on {}",
                    describe(g)
                ));
            }
        }
    }
    outcome(
        &failures,
        format!("{} graphs, both pruning modes", graphs.len()),
    )
}

/// Optimal top separators recomputed from brute-force separators and the
/// brute-force treedepth of each component.
fn optimal_by_oracle(g: &Graph) -> Vec<VertexSet> {
    let td = treedepth_bruteforce(g).unwrap();
    let all = g.vertices();
    minimal_separators_bruteforce(g)
        .unwrap()
        .iter()
        .filter(|s| {
            let worst = g
                .components_within(&all.difference(s))
                .iter()
                .map(|c| treedepth_bruteforce(&g.induced_subgraph(c).unwrap().graph).unwrap())
                .max()
                .unwrap_or(0);
            s.len() + worst == td
        })
        .cloned()
        .collect()
}

fn criterion_2(graphs: &[Graph]) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for g in graphs
        .iter()
        .filter(|g| g.vertex_count() <= 10 && !g.is_complete())
    {
        checked += 1;
        let (tw, _) = treewidth_exact(g).unwrap();
        let fast = optimal_top_separators(g).unwrap();
        let slow = optimal_by_oracle(g);
        if fast.as_slice() != slow.as_slice() {
            failures.push(format!(
                "optimal separators disagree with oracle on {}",
                describe(g)
            ));
        }
        let smallest = fast.iter().map(VertexSet::len).min().unwrap();
        if smallest as isize > 2 * tw {
            failures.push(format!(
                "min |S*| = {smallest} > 2 tw = {} on {}",
                2 * tw,
                describe(g)
            ));
        }
    }
    outcome(
        &failures,
        format!("{checked} connected non-complete graphs with at most 10 vertices"),
    )
}

fn criterion_3(graphs: &[Graph]) -> Outcome {
    let mut failures = Vec::new();
    for g in graphs {
        let a = treedepth(g, &with_pruning(Pruning::TwoTw)).unwrap();
        let b = treedepth(g, &with_pruning(Pruning::None)).unwrap();
        if a.td != b.td || a.decomposition != b.decomposition {
            failures.push(format!("pruned and unpruned differ on {}", describe(g)));
        }
        if a.stats.separators_pruned > a.stats.separators_enumerated {
            failures.push(format!(
                "pruned count exceeds enumerated on {}",
                describe(g)
            ));
        }
    }
    let mut counts = Vec::new();
    for k in 6..=10 {
        let g = exp_sep_graph(k).unwrap();
        let a = treedepth(&g, &with_pruning(Pruning::TwoTw)).unwrap();
        let b = treedepth(&g, &with_pruning(Pruning::None)).unwrap();
        if a.td != b.td || a.decomposition != b.decomposition {
            failures.push(format!(
                "pruned and unpruned differ on the k={k} parallel-path graph"
            ));
        }
        if a.stats.separators_enumerated >= b.stats.separators_enumerated {
            failures.push(format!(
                "k={k}: pruned enumerated {} vs unpruned {}",
                a.stats.separators_enumerated, b.stats.separators_enumerated
            ));
        }
        counts.push(format!(
            "k={k}: {}/{}",
            a.stats.separators_enumerated, b.stats.separators_enumerated
        ));
    }
    outcome(
        &failures,
        format!(
            "{} corpus graphs identical; candidates pruned/unpruned {}",
            graphs.len(),
            counts.join(", ")
        ),
    )
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    let g = double_broom(1, 7, 8).unwrap().graph;
    let is_path = g.is_connected()
        && (0..g.vertex_count()).all(|v| g.degree(v) <= 2)
        && g.edge_count() + 1 == g.vertex_count();
    if g.vertex_count() != 517 || !is_path {
        failures.push(format!(
            "double broom is not a 517-vertex path ({} vertices)",
            g.vertex_count()
        ));
    }
    let start = Instant::now();
    let sol = treedepth(&g, &with_pruning(Pruning::TwoTw)).unwrap();
    let elapsed = start.elapsed();
    if sol.td != 10 {
        failures.push(format!("solver gives {}", sol.td));
    }
    if verify_treedepth_decomposition(&g, &sol.decomposition).unwrap() != (true, 10) {
        failures.push("decomposition does not verify at height 10".into());
    }
    for n in 1..=12usize {
        let td = treedepth_bruteforce(&basic(BasicKind::Path(n)).unwrap()).unwrap();
        if td != n.ilog2() as usize + 1 {
            failures.push(format!("oracle td(P_{n}) = {td}"));
        }
    }
    let formula = 517usize.ilog2() as usize + 1;
    if formula != sol.td {
        failures.push(format!("log formula gives {formula}"));
    }
    outcome(
        &failures,
        format!(
            "td = {} in {:.2?}; path formula gives {formula}",
            sol.td, elapsed
        ),
    )
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    let mut exact_checked = 0;
    for n in 1..=2 {
        for m in 2..=5 {
            for l in 0..=3 {
                let g = corner_graph(n, m, 1, l).unwrap().graph;
                let bound = (n + l) as isize;
                let (upper, _) = treewidth_upper(&g);
                if upper > bound {
                    failures.push(format!("upper bound {upper} > {bound} at ({n},{m},1,{l})"));
                }
                if let Ok((tw, _)) = treewidth_exact(&g) {
                    exact_checked += 1;
                    if tw > bound {
                        failures.push(format!("exact {tw} > {bound} at ({n},{m},1,{l})"));
                    }
                }
            }
        }
    }
    outcome(
        &failures,
        format!("32 parameter sets, {exact_checked} confirmed exactly"),
    )
}

fn criterion_6(graphs: &[Graph]) -> Outcome {
    let mut failures = Vec::new();
    let small: Vec<&Graph> = graphs.iter().filter(|g| g.vertex_count() <= 8).collect();
    for g in &small {
        if enumerate_minimal_separators(g, None) != minimal_separators_bruteforce(g).unwrap() {
            failures.push(format!(
                "enumeration differs from brute force on {}",
                describe(g)
            ));
        }
    }
    let mut observed = Vec::new();
    for k in 2..=10usize {
        let g = exp_sep_graph(k).unwrap();
        let count = if k <= 4 {
            let brute = minimal_separators_bruteforce(&g).unwrap().len();
            let listed = enumerate_minimal_separators(&g, None).len();
            if brute != listed {
                failures.push(format!(
                    "k={k}: enumeration {listed} vs brute force {brute}"
                ));
            }
            brute
        } else {
            enumerate_minimal_separators(&g, None).len()
        };
        observed.push(format!("k={k}: {count}"));
        let expected = (1usize << k) + 1;
        if count != expected {
            failures.push(format!(
                "k={k}: |separators| = {count}, expected 2^k + 1 = {expected}"
            ));
        }
    }
    outcome(
        &failures,
        format!(
            "{} graphs with at most 8 vertices; parallel-path counts {}",
            small.len(),
            observed.join(", ")
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc1a55e5);
    for i in 0..200u64 {
        let k = rng.gen_range(1..=4);
        let n = rng.gen_range(k + 1..=25);
        let g = random_family(RandomFamily::KTree { k }, n, 1000 + i).unwrap();
        let ct = clique_tree(&g).unwrap();
        let tw = ct.max_clique_size() - 1;
        let seps = enumerate_minimal_separators(&g, None);
        if tw != k {
            failures.push(format!("k-tree seed {i}: clique tree width {tw} != {k}"));
        }
        if seps.max_size().unwrap_or(0) > k {
            failures.push(format!("k-tree seed {i}: separator larger than {k}"));
        }
        if chordal_minimal_separators(&ct) != seps {
            failures.push(format!(
                "k-tree seed {i}: clique tree separators differ from enumeration"
            ));
        }
    }
    for i in 0..200u64 {
        let n = rng.gen_range(3..=14);
        let g = random_family(RandomFamily::MaximalOuterplanar, n, 2000 + i).unwrap();
        if !is_outerplanar(&g).unwrap() {
            failures.push(format!(
                "outerplanar seed {i}: generator output has a forbidden minor"
            ));
        }
        if enumerate_minimal_separators(&g, None)
            .max_size()
            .unwrap_or(0)
            > 2
        {
            failures.push(format!("outerplanar seed {i}: separator larger than 2"));
        }
    }
    for i in 0..200u64 {
        let n = rng.gen_range(1..=12);
        let g = random_family(RandomFamily::Cograph, n, 3000 + i).unwrap();
        let td = treedepth(&g, &SolveConfig::default()).unwrap().td;
        let (tw, _) = treewidth_exact(&g).unwrap();
        if td as isize != tw + 1 {
            failures.push(format!("cograph seed {i}: td {td} != tw {tw} + 1"));
        }
        if td != treedepth_bruteforce(&g).unwrap() {
            failures.push(format!("cograph seed {i}: solver disagrees with oracle"));
        }
    }
    outcome(
        &failures,
        "200 k-trees, 200 maximal outerplanar graphs, 200 cographs".into(),
    )
}

fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_sepdepth"))
}

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    for n in 1..=3 {
        for m in 1..=5 {
            for k in 1..=4 {
                let b = broom(n, m, k).unwrap();
                let tail = (1 << k) - 1;
                if b.graph.vertex_count() != n * m + n * tail {
                    failures.push(format!("broom({n},{m},{k}) size"));
                }
                if b.graph.edge_count() != n * (m - 1) + m * (n - 1) + n * tail {
                    failures.push(format!("broom({n},{m},{k}) edges"));
                }
                if m >= 2 {
                    let d = double_broom(n, m, k).unwrap();
                    if d.graph.vertex_count() != n * m + 2 * n * tail {
                        failures.push(format!("double_broom({n},{m},{k}) size"));
                    }
                    for l in 0..=3 {
                        let c = corner_graph(n, m, k, l).unwrap();
                        if c.graph.vertex_count() != n * m + l + 2 * n * l * tail {
                            failures.push(format!("corner_graph({n},{m},{k},{l}) size"));
                        }
                        let connectors = 2 * n * l * (tail + 1);
                        if c.graph.edge_count() != n * (m - 1) + m * (n - 1) + connectors {
                            failures.push(format!("corner_graph({n},{m},{k},{l}) edges"));
                        }
                    }
                }
            }
        }
    }
    for k in 1..=10 {
        let g = exp_sep_graph(k).unwrap();
        if g.vertex_count() != 2 + 2 * k || g.edge_count() != 3 * k {
            failures.push(format!("exp_sep_graph({k}) size"));
        }
    }
    let out = Command::new(bin())
        .args(["search-ratio", "--max-n", "10", "--seed", "8"])
        .output()
        .unwrap();
    let text = String::from_utf8_lossy(&out.stdout).into_owned();
    let field = |key: &str| {
        text.lines()
            .find_map(|l| l.strip_prefix(&format!("{key}=")))
            .map(str::to_string)
    };
    let ratio: Option<f64> = field("max_ratio").and_then(|r| r.parse().ok());
    if !out.status.success() {
        failures.push(format!("search-ratio exit {:?}", out.status.code()));
    }
    if field("violations").as_deref() != Some("0") {
        failures.push("search-ratio reports violations".into());
    }
    match ratio {
        Some(r) if r > 0.0 && r <= 2.0 => {}
        other => failures.push(format!("max ratio {other:?} outside (0, 2]")),
    }
    // the witness block must parse and satisfy the 2 tw bound again
    if let Some(idx) = text.find("witness:\n") {
        let doc = parse_gr(&text[idx + "witness:\n".len()..]).unwrap();
        let g = doc.to_graph();
        let (tw, _) = treewidth_exact(&g).unwrap();
        let smallest = optimal_by_oracle(&g)
            .iter()
            .map(VertexSet::len)
            .min()
            .unwrap();
        if smallest as isize > 2 * tw {
            failures.push("witness violates the 2 tw bound".into());
        }
    } else {
        failures.push("no witness printed".into());
    }
    outcome(
        &failures,
        format!(
            "size formulas hold; search-ratio max ratio {} over {} samples",
            ratio.map_or("n/a".into(), |r| format!("{r:.4}")),
            field("measured").unwrap_or_default()
        ),
    )
}

/// Valid iff the parents form a forest and every edge joins an ancestor and
/// a descendant. Parents are 1-based with 0 for roots.
fn valid_by_ancestors(g: &Graph, parents: &[usize]) -> bool {
    let n = parents.len();
    let mut ancestors: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut chain = Vec::new();
        let mut u = parents[v];
        while u != 0 {
            if chain.len() > n || u - 1 == v {
                return false;
            }
            chain.push(u - 1);
            u = parents[u - 1];
        }
        ancestors.push(chain);
    }
    g.edges()
        .iter()
        .all(|&(a, b)| ancestors[a].contains(&b) || ancestors[b].contains(&a))
}

fn criterion_9(graphs: &[Graph]) -> Outcome {
    let mut failures = Vec::new();
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let mut solutions: HashMap<usize, String> = HashMap::new();
    for (i, g) in graphs.iter().enumerate() {
        let doc = GrDocument::from_graph(g);
        let text = write_gr(&doc);
        let back = parse_gr(&text).unwrap();
        if back != doc || back.to_graph() != *g {
            failures.push(format!("gr round trip changed {}", describe(g)));
        }
        let sol = treedepth(g, &SolveConfig::default()).unwrap();
        let tree = write_tree(&sol.decomposition);
        if parse_tree(&tree, g.vertex_count())
            .unwrap()
            .to_decomposition()
            != sol.decomposition
        {
            failures.push(format!("tree round trip changed {}", describe(g)));
        }
        let gr_path = dir.join(format!("g{i}.gr"));
        let tree_path = dir.join(format!("g{i}.tree"));
        std::fs::write(&gr_path, &text).unwrap();
        let solve = Command::new(bin())
            .arg("solve")
            .arg(&gr_path)
            .arg("--out")
            .arg(&tree_path)
            .status()
            .unwrap();
        let verify = Command::new(bin())
            .arg("verify")
            .arg(&gr_path)
            .arg(&tree_path)
            .output()
            .unwrap();
        if !solve.success() || !verify.status.success() {
            failures.push(format!("CLI solve/verify rejected {}", describe(g)));
        }
        let cli_tree = std::fs::read_to_string(&tree_path).unwrap_or_default();
        if cli_tree != tree {
            failures.push(format!(
                "CLI tree differs from library tree on {}",
                describe(g)
            ));
        }
        solutions.insert(i, tree);
    }

    // mutation testing on sampled instances with at least 6 vertices
    let mut rng = ChaCha8Rng::seed_from_u64(0x0907_a7e5);
    let candidates: Vec<usize> = (0..graphs.len())
        .filter(|&i| graphs[i].vertex_count() >= 6)
        .collect();
    let sampled: Vec<usize> = (0..20)
        .map(|_| candidates[rng.gen_range(0..candidates.len())])
        .collect();
    let mut rejected = 0;
    for &i in &sampled {
        let g = &graphs[i];
        let n = g.vertex_count();
        let tree = &solutions[&i];
        let mut lines = tree.lines();
        let depth = lines.next().unwrap().to_string();
        let parents: Vec<usize> = lines.map(|l| l.parse().unwrap()).collect();
        let gr_path = dir.join(format!("g{i}.gr"));
        let mut breaking = 0;
        let mut attempts = 0;
        while breaking < 100 {
            attempts += 1;
            if attempts > 100_000 {
                failures.push(format!(
                    "could not find 100 breaking mutations for {}",
                    describe(g)
                ));
                break;
            }
            let v = rng.gen_range(0..n);
            let p = rng.gen_range(0..=n);
            if p == parents[v] {
                continue;
            }
            let mut mutated = parents.clone();
            mutated[v] = p;
            if valid_by_ancestors(g, &mutated) {
                continue;
            }
            breaking += 1;
            let mut text = format!("{depth}\n");
            for q in &mutated {
                text.push_str(&format!("{q}\n"));
            }
            let path = dir.join(format!("m{i}.tree"));
            std::fs::write(&path, text).unwrap();
            let out = Command::new(bin())
                .arg("verify")
                .arg(&gr_path)
                .arg(&path)
                .output()
                .unwrap();
            if out.status.success() {
                failures.push(format!(
                    "verify accepted broken parents {mutated:?} for {}",
                    describe(g)
                ));
            } else {
                rejected += 1;
            }
        }
    }
    outcome(
        &failures,
        format!(
            "{} graphs round-tripped and verified through the CLI; {rejected} breaking mutations rejected over {} instances",
            graphs.len(),
            sampled.len()
        ),
    )
}

fn main() -> ExitCode {
    let graphs = full_corpus();
    let criteria: Vec<(&str, Check)> = vec![
        (
            "1 solver matches brute-force treedepth",
            Box::new(|| criterion_1(&graphs)),
        ),
        (
            "2 some optimal top separator has at most 2 tw vertices",
            Box::new(|| criterion_2(&graphs)),
        ),
        (
            "3 pruning is sound and enumerates fewer candidates",
            Box::new(|| criterion_3(&graphs)),
        ),
        (
            "4 double broom D(1,7,8) has treedepth 10",
            Box::new(criterion_4),
        ),
        (
            "5 corner graph treewidth at most n + l",
            Box::new(criterion_5),
        ),
        (
            "6 separator enumeration and parallel-path counts",
            Box::new(|| criterion_6(&graphs)),
        ),
        (
            "7 chordal, outerplanar and cograph bounds",
            Box::new(criterion_7),
        ),
        ("8 generator sizes and ratio search", Box::new(criterion_8)),
        (
            "9 round trips and verification",
            Box::new(|| criterion_9(&graphs)),
        ),
    ];
    let mut all_pass = true;
    for (name, check) in &criteria {
        let start = Instant::now();
        let o = check();
        all_pass &= o.pass;
        println!(
            "{} criterion {name} [{:.1?}]: {}",
            if o.pass { "PASS" } else { "FAIL" },
            start.elapsed(),
            o.detail
        );
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
