//! Size limits for the exhaustive routines.
//!
//! Defaults can be overridden through the `SEPDEPTH_BUDGET` environment
//! variable, a comma-separated list of `key=value` pairs such as
//! `exact_tw=22,oracle_td=14`.

use crate::error::{Error, Result};

pub const ENV_VAR: &str = "SEPDEPTH_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Vertex limit for `treewidth_exact` (subset DP).
    pub exact_tw: usize,
    /// Vertex limit for the brute-force treedepth oracle.
    pub oracle_td: usize,
    /// Vertex limit for the all-orderings treewidth oracle.
    pub oracle_tw: usize,
    /// Vertex limit for brute-force minimal separator listing.
    pub brute_seps: usize,
    /// Vertex limit for branch-set minor search.
    pub minor: usize,
    /// Largest graph a generator may build.
    pub generator_vertices: usize,
    /// Vertex limit above which `analyze` skips exhaustive separator work.
    pub analyze: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            exact_tw: 20,
            oracle_td: 12,
            oracle_tw: 8,
            brute_seps: 16,
            minor: 16,
            generator_vertices: 1 << 20,
            analyze: 64,
        }
    }
}

impl Budgets {
    pub fn parse(spec: &str) -> Result<Budgets> {
        let mut b = Budgets::default();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Input(format!("budget entry `{item}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("budget value `{value}` is not an integer")))?;
            let slot = match key.trim() {
                "exact_tw" => &mut b.exact_tw,
                "oracle_td" => &mut b.oracle_td,
                "oracle_tw" => &mut b.oracle_tw,
                "brute_seps" => &mut b.brute_seps,
                "minor" => &mut b.minor,
                "generator_vertices" => &mut b.generator_vertices,
                "analyze" => &mut b.analyze,
                other => return Err(Error::Input(format!("unknown budget key `{other}`"))),
            };
            *slot = value;
        }
        // bitmask-based routines use u32 masks
        b.exact_tw = b.exact_tw.min(28);
        b.oracle_td = b.oracle_td.min(28);
        b.brute_seps = b.brute_seps.min(28);
        b.minor = b.minor.min(28);
        Ok(b)
    }

    /// Defaults with any overrides from `SEPDEPTH_BUDGET` applied.
    pub fn from_env() -> Result<Budgets> {
        match std::env::var(ENV_VAR) {
            Ok(spec) => Budgets::parse(&spec),
            Err(_) => Ok(Budgets::default()),
        }
    }
}
