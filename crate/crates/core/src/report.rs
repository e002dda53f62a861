//! Per-graph analysis and the separator-to-treewidth ratio search.

use std::fmt::Write as _;

use crate::budget::Budgets;
use crate::classes::{is_chordal, is_cograph, is_outerplanar_with_budget};
use crate::error::Result;
use crate::graph::Graph;
use crate::oracle::{corpus, CorpusSpec};
use crate::separators::enumerate_minimal_separators;
use crate::solver::{optimal_top_separators, treedepth, SolveConfig, SolveStats};
use crate::treewidth::{treewidth_exact_value, treewidth_lower, treewidth_upper};

/// Above this many vertices separators are only counted up to twice the
/// treewidth upper bound.
const FULL_SEPARATOR_LISTING: usize = 32;

#[derive(Clone, Debug, PartialEq)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub tw_lower: isize,
    pub tw_upper: isize,
    pub tw_exact: Option<isize>,
    pub td: Option<usize>,
    pub separator_count: usize,
    /// Size cap applied to `separator_count`, if any.
    pub separator_bound: Option<usize>,
    pub top_separators: Option<usize>,
    pub min_top_separator: Option<usize>,
    pub max_top_separator: Option<usize>,
    /// `min |S*| / tw`, only with exact treewidth on a connected non-complete graph.
    pub ratio: Option<f64>,
    pub chordal: bool,
    pub cograph: bool,
    pub outerplanar: Option<bool>,
    pub stats: Option<SolveStats>,
}

pub fn analyze(g: &Graph, budgets: &Budgets) -> Result<AnalysisReport> {
    let n = g.vertex_count();
    let tw_upper = treewidth_upper(g).0;
    let tw_exact = if n <= budgets.exact_tw {
        Some(treewidth_exact_value(g, budgets.exact_tw)?)
    } else {
        None
    };
    let separator_bound = (n > FULL_SEPARATOR_LISTING).then(|| 2 * tw_upper.max(0) as usize);
    let separator_count = enumerate_minimal_separators(g, separator_bound).len();
    let small = n <= budgets.analyze;
    let cfg = SolveConfig {
        exact_tw_budget: budgets.exact_tw,
        ..SolveConfig::default()
    };
    let solution = if small {
        Some(treedepth(g, &cfg)?)
    } else {
        None
    };
    let top = if small && n <= FULL_SEPARATOR_LISTING && g.is_connected() && !g.is_complete() {
        Some(optimal_top_separators(g)?)
    } else {
        None
    };
    let min_top = top.as_ref().and_then(|t| t.iter().map(|s| s.len()).min());
    let ratio = match (tw_exact, min_top) {
        (Some(tw), Some(s)) if tw > 0 => Some(s as f64 / tw as f64),
        _ => None,
    };
    let outerplanar = if n <= budgets.minor {
        Some(is_outerplanar_with_budget(g, budgets.minor)?)
    } else {
        None
    };
    Ok(AnalysisReport {
        n,
        m: g.edge_count(),
        tw_lower: treewidth_lower(g),
        tw_upper,
        tw_exact,
        td: solution.as_ref().map(|s| s.td),
        separator_count,
        separator_bound,
        top_separators: top.as_ref().map(|t| t.len()),
        min_top_separator: min_top,
        max_top_separator: top.as_ref().and_then(|t| t.max_size()),
        ratio,
        chordal: is_chordal(g).is_some(),
        cograph: is_cograph(g),
        outerplanar,
        stats: solution.map(|s| s.stats),
    })
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "n/a".to_string(), T::to_string)
}

impl AnalysisReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph: {} vertices, {} edges", self.n, self.m);
        let _ = writeln!(
            out,
            "treewidth: {} <= tw <= {} (exact: {})",
            self.tw_lower,
            self.tw_upper,
            opt(&self.tw_exact)
        );
        let _ = writeln!(out, "treedepth: {}", opt(&self.td));
        match self.separator_bound {
            Some(k) => {
                let _ = writeln!(
                    out,
                    "minimal separators of size <= {k}: {}",
                    self.separator_count
                );
            }
            None => {
                let _ = writeln!(out, "minimal separators: {}", self.separator_count);
            }
        }
        let _ = writeln!(
            out,
            "optimal top separators: {} (sizes {}..{})",
            opt(&self.top_separators),
            opt(&self.min_top_separator),
            opt(&self.max_top_separator)
        );
        let _ = writeln!(
            out,
            "min |S*| / tw: {}",
            self.ratio.map_or("n/a".into(), |r| format!("{r:.4}"))
        );
        let mut classes = Vec::new();
        if self.chordal {
            classes.push("chordal");
        }
        if self.cograph {
            classes.push("cograph");
        }
        if self.outerplanar == Some(true) {
            classes.push("outerplanar");
        }
        let _ = writeln!(
            out,
            "classes: {}",
            if classes.is_empty() {
                "none".to_string()
            } else {
                classes.join(", ")
            }
        );
        out
    }

    /// One `key=value` per line with stable key names.
    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        let mut kv = |k: &str, v: String| {
            let _ = writeln!(out, "{k}={v}");
        };
        kv("n", self.n.to_string());
        kv("m", self.m.to_string());
        kv("tw_lower", self.tw_lower.to_string());
        kv("tw_upper", self.tw_upper.to_string());
        kv("tw_exact", opt(&self.tw_exact));
        kv("td", opt(&self.td));
        kv("separators", self.separator_count.to_string());
        kv("separator_bound", opt(&self.separator_bound));
        kv("top_separators", opt(&self.top_separators));
        kv("top_separator_min", opt(&self.min_top_separator));
        kv("top_separator_max", opt(&self.max_top_separator));
        kv(
            "ratio",
            self.ratio.map_or("n/a".into(), |r| format!("{r:.6}")),
        );
        kv("chordal", self.chordal.to_string());
        kv("cograph", self.cograph.to_string());
        kv("outerplanar", opt(&self.outerplanar));
        let s = self.stats.as_ref();
        kv("subproblems", opt(&s.map(|s| s.subproblems)));
        kv(
            "separators_enumerated",
            opt(&s.map(|s| s.separators_enumerated)),
        );
        kv("separators_pruned", opt(&s.map(|s| s.separators_pruned)));
        kv("max_separator_size", opt(&s.map(|s| s.max_separator_size)));
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RatioReport {
    pub samples: usize,
    /// Connected non-complete samples for which the ratio was computed.
    pub measured: usize,
    pub max_ratio: Option<f64>,
    pub witness: Option<Graph>,
    /// Samples whose smallest optimal top separator exceeds `2 tw`.
    pub violations: usize,
}

/// Samples connected graphs on `4..=max_n` vertices with edge probabilities
/// cycling through 0.2, 0.35, 0.5 and 0.65, and records the largest
/// `min |S*| / tw`.
pub fn search_ratio(
    max_n: usize,
    samples: usize,
    seed: u64,
    budgets: &Budgets,
) -> Result<RatioReport> {
    let probabilities = [0.2, 0.35, 0.5, 0.65];
    let min_n = 4.min(max_n.max(1));
    let mut report = RatioReport {
        samples,
        measured: 0,
        max_ratio: None,
        witness: None,
        violations: 0,
    };
    for (i, &p) in probabilities.iter().enumerate() {
        let count = samples / probabilities.len() + usize::from(i < samples % probabilities.len());
        if count == 0 {
            continue;
        }
        let spec = CorpusSpec {
            edge_probability: p,
            ..CorpusSpec::random(min_n, max_n, count, seed.wrapping_add(i as u64))
        };
        for g in corpus(&spec)? {
            if g.is_complete() {
                continue;
            }
            let tw = treewidth_exact_value(&g, budgets.exact_tw)?;
            let min_top = optimal_top_separators(&g)?
                .iter()
                .map(|s| s.len())
                .min()
                .expect("a non-complete connected graph has an optimal separator");
            report.measured += 1;
            if min_top as isize > 2 * tw {
                report.violations += 1;
            }
            let ratio = min_top as f64 / tw as f64;
            if report.max_ratio.is_none_or(|r| ratio > r) {
                report.max_ratio = Some(ratio);
                report.witness = Some(g);
            }
        }
    }
    Ok(report)
}
