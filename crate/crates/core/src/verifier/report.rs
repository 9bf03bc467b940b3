//! Suite configuration and conformance reports.

use std::fmt::Write as _;

use serde::Serialize;

use super::relations::Role;

/// Ranges and seed of a suite run. Clifford-valued sources and product rules
/// are clamped to the smaller envelope unless `unsafe_limits` is set.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub k_max: u32,
    pub seed: u64,
    /// Random `(f, g)` pairs per dimension for product rules.
    pub pairs: usize,
    #[serde(skip)]
    pub timing: bool,
    #[serde(skip)]
    pub unsafe_limits: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_min: 1,
            n_max: 4,
            k_max: 5,
            seed: 0,
            pairs: 200,
            timing: false,
            unsafe_limits: false,
        }
    }
}

impl SuiteConfig {
    fn clamp<T: Ord>(&self, v: T, limit: T) -> T {
        if self.unsafe_limits {
            v
        } else {
            v.min(limit)
        }
    }

    pub fn clifford_n_max(&self) -> usize {
        self.clamp(self.n_max, 3)
    }

    pub fn clifford_k_max(&self) -> u32 {
        self.clamp(self.k_max, 4)
    }

    pub fn product_n_max(&self) -> usize {
        self.clamp(self.n_max, 3)
    }

    pub fn product_deg_max(&self) -> u32 {
        self.clamp(self.k_max, 4)
    }
}

/// First failing input of an instance.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Counterexample {
    pub instance: String,
    /// Source degree (0 for randomized checks).
    pub k: u32,
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeVerdict {
    pub k: u32,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

/// Verdict of one relation at one dimension.
#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub relation: String,
    pub family: String,
    pub role: Role,
    pub n: usize,
    pub expected_holds: bool,
    pub observed_holds: bool,
    /// Observation agrees with the expectation.
    pub ok: bool,
    /// Matrix comparisons or randomized pair checks performed.
    pub checks: usize,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConformanceReport {
    pub seed: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub k_max: u32,
    pub pairs: usize,
    pub entries: Vec<Entry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl ConformanceReport {
    pub fn all_ok(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "seed {} n {}..{} k <= {} pairs {}", self.seed, self.n_min, self.n_max, self.k_max, self.pairs);
        let width = self.entries.iter().map(|e| e.relation.len()).max().unwrap_or(8).max(8);
        let _ = writeln!(out, "{:<width$}  n  role         expected  observed  checks  status", "relation");
        for e in &self.entries {
            let word = |h: bool| if h { "holds" } else { "fails" };
            let role = format!("{:?}", e.role).to_lowercase();
            let _ = writeln!(
                out,
                "{:<width$}  {}  {:<11}  {:<8}  {:<8}  {:>6}  {}",
                e.relation,
                e.n,
                role,
                word(e.expected_holds),
                word(e.observed_holds),
                e.checks,
                if e.ok { "ok" } else { "MISMATCH" }
            );
            if let Some(c) = &e.counterexample {
                let label = if c.instance.is_empty() { String::new() } else { format!("[{}] ", c.instance) };
                let _ = writeln!(out, "    {label}k={} input {}: lhs {} rhs {}", c.k, c.input, c.lhs, c.rhs);
            }
        }
        let bad = self.entries.iter().filter(|e| !e.ok).count();
        let _ = writeln!(out, "{} entries, {} mismatches", self.entries.len(), bad);
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed {ms} ms");
        }
        out
    }
}
