//! Exhaustive enumeration of cyclic Kupisch series, batch verification and
//! CSV output.
//!
//! Rotations of a series are distinct algebras here; nothing is deduplicated.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::modcat::Dim;
use crate::theorems::Analysis;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusParams {
    pub vertices: RangeInclusive<usize>,
    pub max_proj_len: usize,
    /// Worker threads; `0` lets rayon choose.
    pub workers: usize,
    pub output: Option<PathBuf>,
}

impl CensusParams {
    pub fn new(vertices: RangeInclusive<usize>, max_proj_len: usize) -> Self {
        CensusParams {
            vertices,
            max_proj_len,
            workers: 0,
            output: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_proj_len < 2 {
            return Err(Error::InvalidParams(format!(
                "max_proj_len must be at least 2, got {}",
                self.max_proj_len
            )));
        }
        if *self.vertices.start() < 3 {
            return Err(Error::InvalidParams(format!(
                "vertex count must be at least 3, got {}",
                self.vertices.start()
            )));
        }
        Ok(())
    }
}

/// Lexicographic enumeration of valid series on a fixed vertex count.
///
/// The odometer skips any prefix that already breaks `c_{i+1} >= c_i - 1`.
#[derive(Clone, Debug)]
pub struct KupischIter {
    n: usize,
    max: usize,
    cur: Vec<usize>,
    started: bool,
    done: bool,
}

impl KupischIter {
    pub fn new(n: usize, max: usize) -> Self {
        KupischIter {
            n,
            max,
            cur: vec![2; n],
            started: false,
            done: n < 3 || max < 2,
        }
    }

    fn prefix_ok(&self, upto: usize) -> bool {
        (1..=upto).all(|i| self.cur[i] + 1 >= self.cur[i - 1])
    }

    fn closes(&self) -> bool {
        self.cur[0] + 1 >= self.cur[self.n - 1]
    }

    /// Smallest completion of `cur[..=i]` that respects the chain condition.
    fn fill_from(&mut self, i: usize) {
        for j in i + 1..self.n {
            self.cur[j] = self.cur[j - 1].saturating_sub(1).max(2);
        }
    }

    fn advance(&mut self) -> bool {
        let mut i = self.n;
        while i > 0 {
            i -= 1;
            if self.cur[i] < self.max {
                self.cur[i] += 1;
                if self.prefix_ok(i) {
                    self.fill_from(i);
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for KupischIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.closes() {
                return Some(self.cur.clone());
            }
        }
        loop {
            if !self.advance() {
                self.done = true;
                return None;
            }
            if self.closes() {
                return Some(self.cur.clone());
            }
        }
    }
}

pub fn enumerate_kupisch(n: usize, max_proj_len: usize) -> KupischIter {
    KupischIter::new(n, max_proj_len)
}

/// Every valid algebra within the bounds: by vertex count, then
/// lexicographically by series.
pub fn enumerate_algebras(params: &CensusParams) -> impl Iterator<Item = Algebra> + '_ {
    params.vertices.clone().flat_map(move |n| {
        enumerate_kupisch(n, params.max_proj_len)
            .map(|k| Algebra::from_kupisch(&k).expect("enumerated series are valid"))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub kupisch: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub r: usize,
    pub self_injective: bool,
    pub gldim: Dim,
    pub findim: usize,
    pub phi_dim: usize,
    pub gustafson_d: usize,
    pub delta_in_omega_per: bool,
    pub checks_passed: bool,
}

/// A census record together with the names of any failed checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub record: CensusRecord,
    pub failures: Vec<String>,
}

pub fn evaluate(a: &Algebra) -> Evaluation {
    let an = Analysis::new(a);
    let failures: Vec<String> = an
        .verify_all()
        .into_iter()
        .filter(|c| c.is_fail())
        .map(|c| format!("{}: {}", c.name, c.evidence))
        .collect();
    let record = CensusRecord {
        kupisch: a.kupisch_string(),
        n: a.n(),
        r: an.r(),
        self_injective: a.is_self_injective(),
        gldim: an.gldim,
        findim: an.findim,
        phi_dim: an.phi_dim,
        gustafson_d: an.gustafson.d,
        delta_in_omega_per: an.delta_subset_of_periodic(),
        checks_passed: failures.is_empty(),
    };
    Evaluation { record, failures }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Summary {
    pub algebras: usize,
    pub finite_gldim: usize,
    pub infinite_gldim: usize,
    /// φ-dimension histogram over infinite-gldim algebras.
    pub phi_histogram: BTreeMap<usize, usize>,
    /// Largest `phi_dim / 2r` over infinite-gldim algebras.
    pub max_phi_ratio: f64,
    pub all_checks_passed: bool,
}

impl Summary {
    pub fn from_records(records: &[CensusRecord]) -> Self {
        let mut s = Summary {
            all_checks_passed: true,
            ..Summary::default()
        };
        for rec in records {
            s.algebras += 1;
            s.all_checks_passed &= rec.checks_passed;
            match rec.gldim {
                Dim::Finite(_) => s.finite_gldim += 1,
                Dim::Infinite => {
                    s.infinite_gldim += 1;
                    *s.phi_histogram.entry(rec.phi_dim).or_default() += 1;
                    let ratio = rec.phi_dim as f64 / (2 * rec.r) as f64;
                    s.max_phi_ratio = s.max_phi_ratio.max(ratio);
                }
            }
        }
        s
    }
}

#[derive(Clone, Debug)]
pub struct CensusOutcome {
    pub records: Vec<CensusRecord>,
    /// `(kupisch, failure)` for each failed check.
    pub failures: Vec<(String, String)>,
    pub summary: Summary,
}

pub fn run_census(params: &CensusParams) -> Result<CensusOutcome> {
    params.validate()?;
    let algebras: Vec<Algebra> = enumerate_algebras(params).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(params.workers)
        .build()
        .map_err(|e| Error::InvalidParams(e.to_string()))?;
    let evals: Vec<Evaluation> = pool.install(|| algebras.par_iter().map(evaluate).collect());

    let mut records = Vec::with_capacity(evals.len());
    let mut failures = Vec::new();
    for ev in evals {
        for f in ev.failures {
            failures.push((ev.record.kupisch.clone(), f));
        }
        records.push(ev.record);
    }
    let summary = Summary::from_records(&records);
    if let Some(path) = &params.output {
        write_csv(path, &records)?;
    }
    Ok(CensusOutcome {
        records,
        failures,
        summary,
    })
}

pub fn write_records<W: std::io::Write>(w: W, records: &[CensusRecord]) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    for rec in records {
        out.serialize(rec)?;
    }
    out.flush()?;
    Ok(())
}

/// Writes to a sibling temporary file and renames it into place.
pub fn write_csv(path: &Path, records: &[CensusRecord]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    write_records(&mut tmp, records)?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

/// `(2n+1, ..., 2n+1, 2n)` on `n` vertices.
pub fn sharpness_family(n: usize) -> Result<Algebra> {
    if n < 3 {
        return Err(Error::InvalidParams(format!(
            "sharpness family needs n >= 3, got {n}"
        )));
    }
    let mut k = vec![2 * n + 1; n];
    k[n - 1] = 2 * n;
    Algebra::from_kupisch(&k)
}
