//! Sweeps over index ranges and the reports they produce.
//!
//! A report's `summary` and `results` depend only on the sweep inputs; the
//! wall-clock timestamp lives in `meta` so that golden comparisons can drop it.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{SystemTime, UNIX_EPOCH};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::identities::{
    check, deviations_for, worked_example_steps, CheckResult, Deviation, ExampleStep, IdentityId,
};
use crate::sequences::Sequences;

/// Seed for subsampling `(m, n)` pairs when a pair budget is set.
pub const PAIR_SEED: u64 = 0x6a33_7165_7374;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub tool: String,
    pub version: String,
    pub identities: Vec<IdentityId>,
    pub max_m: Option<usize>,
    pub pair_budget: Option<usize>,
    pub pair_seed: Option<u64>,
    pub generated_at_unix: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub deviations: Vec<Deviation>,
}

impl Meta {
    fn new(identities: Vec<IdentityId>) -> Self {
        let generated_at_unix = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .ok()
            .map(|d| d.as_secs());
        Meta {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            identities,
            max_m: None,
            pair_budget: None,
            pair_seed: None,
            generated_at_unix,
            deviations: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub meta: Meta,
    pub summary: BTreeMap<IdentityId, Counts>,
    pub results: Vec<CheckResult>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub example_steps: Vec<ExampleStep>,
}

impl Report {
    /// Sorts `results` canonically and rebuilds the summary.
    pub fn from_results(meta: Meta, mut results: Vec<CheckResult>) -> Self {
        results.sort_by_key(|r| (r.identity, r.indices));
        let mut summary: BTreeMap<IdentityId, Counts> = meta
            .identities
            .iter()
            .map(|&id| (id, Counts::default()))
            .collect();
        for r in &results {
            let c = summary.entry(r.identity).or_default();
            c.total += 1;
            if r.pass {
                c.pass += 1;
            } else {
                c.fail += 1;
            }
        }
        Report {
            meta,
            summary,
            results,
            example_steps: Vec::new(),
        }
    }

    pub fn total(&self) -> usize {
        self.results.len() + self.example_steps.len()
    }

    pub fn failures(&self) -> usize {
        self.summary.values().map(|c| c.fail).sum::<usize>()
            + self.example_steps.iter().filter(|s| !s.pass).count()
    }

    pub fn all_passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn failed_results(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.pass)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Serialize(e.to_string()))
    }

    /// JSON of everything except `meta`; stable across runs and worker counts.
    pub fn to_json_without_meta(&self) -> Result<String> {
        let mut value = serde_json::to_value(self).map_err(|e| Error::Serialize(e.to_string()))?;
        if let Some(obj) = value.as_object_mut() {
            obj.remove("meta");
        }
        serde_json::to_string_pretty(&value).map_err(|e| Error::Serialize(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Serialize(e.to_string()))
    }

    /// One row per result: `identity,m,n,pass,lhs,rhs`, with quaternions in
    /// their `s + xi + yj + zk` text form.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| Error::Serialize(e.to_string());
        w.write_record(["identity", "m", "n", "pass", "lhs", "rhs"])
            .map_err(err)?;
        for r in &self.results {
            w.write_record([
                r.identity.tag().to_string(),
                r.indices.m.to_string(),
                r.indices.n.map(|n| n.to_string()).unwrap_or_default(),
                r.pass.to_string(),
                r.lhs.to_string(),
                r.rhs.as_ref().map(ToString::to_string).unwrap_or_default(),
            ])
            .map_err(err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Serialize(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Serialize(e.to_string()))
    }

    /// Short human summary, listing failures in full.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for step in &self.example_steps {
            let mark = if step.pass { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "{mark} {:<42} = {}", step.label, step.computed);
            if !step.pass {
                let _ = writeln!(out, "     printed {}", step.printed);
            }
        }
        for (id, c) in &self.summary {
            let mark = if c.fail == 0 { "ok  " } else { "FAIL" };
            let _ = writeln!(
                out,
                "{mark} {:<12} {:>6} pass {:>4} fail  {}",
                id.tag(),
                c.pass,
                c.fail,
                id.statement()
            );
        }
        for r in self.failed_results() {
            let n = r.indices.n.map(|n| format!(", n={n}")).unwrap_or_default();
            let rhs = r
                .rhs
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_else(|| "<undefined>".into());
            let _ = writeln!(
                out,
                "  {} at m={}{}: lhs {} rhs {}",
                r.identity, r.indices.m, n, r.lhs, rhs
            );
            if let Some(note) = &r.note {
                let _ = writeln!(out, "    {note}");
            }
        }
        for d in &self.meta.deviations {
            let _ = writeln!(
                out,
                "note {}: printed form `{}` fails at m=0 (lhs {} vs {}); checked instead: {}",
                d.identity,
                d.printed,
                d.counterexample.lhs,
                d.counterexample
                    .rhs
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default(),
                d.verified
            );
        }
        let _ = writeln!(out, "{} checks, {} failures", self.total(), self.failures());
        out
    }
}

/// Configures and runs a sweep.
#[derive(Debug, Clone)]
pub struct Sweep {
    ids: Vec<IdentityId>,
    max_m: usize,
    pair_budget: Option<usize>,
    threads: Option<usize>,
}

impl Sweep {
    pub fn new(ids: impl IntoIterator<Item = IdentityId>, max_m: usize) -> Self {
        let mut ids: Vec<_> = ids.into_iter().collect();
        ids.sort();
        ids.dedup();
        Sweep {
            ids,
            max_m,
            pair_budget: None,
            threads: None,
        }
    }

    /// Caps the number of `(m, n)` pairs checked for two-index identities.
    pub fn pair_budget(mut self, budget: Option<usize>) -> Self {
        self.pair_budget = budget;
        self
    }

    /// Worker count; `None` uses the global rayon pool.
    pub fn threads(mut self, threads: Option<usize>) -> Self {
        self.threads = threads;
        self
    }

    /// Every `(identity, m, n)` the sweep will evaluate, in canonical order.
    pub fn tasks(&self) -> Vec<(IdentityId, usize, Option<usize>)> {
        let mut tasks = Vec::new();
        for &id in &self.ids {
            if id.is_two_index() {
                let pairs: Vec<(usize, usize)> = (0..=self.max_m)
                    .flat_map(|m| (m..=self.max_m).map(move |n| (m, n)))
                    .collect();
                let chosen = match self.pair_budget {
                    Some(budget) if budget < pairs.len() => subsample(&pairs, budget),
                    _ => pairs,
                };
                tasks.extend(chosen.into_iter().map(|(m, n)| (id, m, Some(n))));
            } else {
                tasks.extend((id.min_index()..=self.max_m).map(|m| (id, m, None)));
            }
        }
        tasks
    }

    pub fn run(&self) -> Result<Report> {
        if self.ids.is_empty() {
            return Err(Error::EmptySelection);
        }
        // Largest offset any identity reaches past its index is +6.
        Sequences::shared().ensure(self.max_m + 8);

        let tasks = self.tasks();
        let evaluate =
            || -> Result<Vec<CheckResult>> { tasks.par_iter().map(|&(id, m, n)| check(id, m, n)).collect() };
        let results = match self.threads {
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::Serialize(format!("thread pool: {e}")))?
                .install(evaluate)?,
            None => evaluate()?,
        };

        let mut meta = Meta::new(self.ids.clone());
        meta.max_m = Some(self.max_m);
        if self.ids.iter().any(|id| id.is_two_index()) {
            meta.pair_budget = self.pair_budget;
            meta.pair_seed = self.pair_budget.map(|_| PAIR_SEED);
        }
        meta.deviations = deviations_for(&self.ids);
        Ok(Report::from_results(meta, results))
    }
}

fn subsample(pairs: &[(usize, usize)], budget: usize) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(PAIR_SEED);
    let mut picked: Vec<usize> = rand::seq::index::sample(&mut rng, pairs.len(), budget).into_vec();
    picked.sort_unstable();
    picked.into_iter().map(|i| pairs[i]).collect()
}

/// Checks every id in `ids` at each valid `m <= max_m`; two-index identities
/// run over all `0 <= m <= n <= max_m`, subsampled to `pair_budget` pairs
/// when given.
pub fn sweep(ids: &[IdentityId], max_m: usize, pair_budget: Option<usize>) -> Result<Report> {
    Sweep::new(ids.iter().copied(), max_m)
        .pair_budget(pair_budget)
        .run()
}

/// Reproduces the worked Cassini example: the two identity checks at
/// `m = 0, 1` plus every printed intermediate quaternion.
pub fn paper_example() -> Report {
    let results = [0, 1]
        .into_iter()
        .map(|m| check(IdentityId::T6Cassini, m, None).expect("m is in range"))
        .collect();
    let mut report = Report::from_results(Meta::new(vec![IdentityId::T6Cassini]), results);
    report.meta.max_m = Some(1);
    report.example_steps = worked_example_steps();
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_identity_sweep() {
        let r = sweep(&[IdentityId::T1Rec], 10, None).unwrap();
        assert_eq!(r.results.len(), 11);
        assert!(r.all_passed());
        assert_eq!(
            r.summary[&IdentityId::T1Rec],
            Counts {
                pass: 11,
                fail: 0,
                total: 11
            }
        );
    }

    #[test]
    fn max_zero_skips_back_referencing_properties() {
        let r = sweep(&IdentityId::ALL, 0, None).unwrap();
        for id in [IdentityId::P2, IdentityId::P7, IdentityId::P9] {
            assert_eq!(r.summary[&id].total, 0);
        }
        assert_eq!(r.results.len(), 19);
        assert!(r.all_passed());
    }

    #[test]
    fn empty_selection() {
        assert!(matches!(sweep(&[], 5, None), Err(Error::EmptySelection)));
    }

    #[test]
    fn pair_counts_and_budget() {
        let full = Sweep::new([IdentityId::T6Docagne], 10);
        assert_eq!(full.tasks().len(), 66);
        let capped = Sweep::new([IdentityId::T6Docagne], 10).pair_budget(Some(20));
        let a = capped.tasks();
        assert_eq!(a.len(), 20);
        assert_eq!(a, capped.tasks());
        assert!(a.windows(2).all(|w| (w[0].1, w[0].2) < (w[1].1, w[1].2)));
        let roomy = Sweep::new([IdentityId::T6Docagne], 10).pair_budget(Some(1000));
        assert_eq!(roomy.tasks().len(), 66);
    }

    #[test]
    fn ordering_independent_of_threads() {
        let ids = [IdentityId::T6Docagne, IdentityId::P3, IdentityId::T3Sum];
        let one = Sweep::new(ids, 25).threads(Some(1)).run().unwrap();
        let many = Sweep::new(ids, 25).threads(Some(4)).run().unwrap();
        assert_eq!(
            one.to_json_without_meta().unwrap(),
            many.to_json_without_meta().unwrap()
        );
        assert_eq!(one.results.first().unwrap().identity, IdentityId::P3);
    }

    #[test]
    fn csv_layout() {
        let r = sweep(&[IdentityId::P1, IdentityId::T6Docagne], 1, None).unwrap();
        let text = r.to_csv().unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("identity,m,n,pass,lhs,rhs"));
        assert_eq!(lines.next(), Some("P1,0,,true,2,2"));
        assert_eq!(lines.next(), Some("P1,1,,true,4,4"));
        assert_eq!(
            lines.next(),
            Some("T6_DOCAGNE,0,0,true,0 + 0i + 0j + 0k,0 + 0i + 0j + 0k")
        );
        assert_eq!(text.lines().count(), 1 + 2 + 3);
    }

    #[test]
    fn json_schema_shape() {
        let r = sweep(&[IdentityId::T4ConjProd], 2, None).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json().unwrap()).unwrap();
        assert_eq!(v["summary"]["T4_CONJPROD"]["total"], 3);
        let first = &v["results"][0];
        assert_eq!(first["identity"], "T4_CONJPROD");
        assert_eq!(first["indices"]["m"], 0);
        assert_eq!(first["pass"], true);
        assert_eq!(first["lhs"], serde_json::json!(["0", "0", "0", "0"]));
        let dev = &v["meta"]["deviations"][0];
        assert_eq!(
            dev["counterexample"]["rhs"],
            serde_json::json!(["0", "4", "4", "8"])
        );
        assert_eq!(Report::from_json(&r.to_json().unwrap()).unwrap(), r);
    }

    #[test]
    fn example_report() {
        let r = paper_example();
        assert!(r.all_passed());
        assert_eq!(r.results.len(), 2);
        assert_eq!(r.total(), 14);
        assert!(r.to_text().contains("-1 - 3i - 3j - 10k"));
    }
}
