//! Cyclic Nakayama algebras and their two presentations.
//!
//! An algebra on the oriented cycle with `N` vertices (arrow `i -> i+1`, and
//! `N -> 1`) is stored by its Kupisch series `c_1..c_N`, where `c_i` is the
//! length of the indecomposable projective `P_i`. The irredundant system of
//! monomial relations is always derived from the series.
//!
//! Vertices are 1-based and all vertex arithmetic is modulo `N` with
//! representatives in `1..=N`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Algebra {
    kupisch: Vec<usize>,
}

/// A monomial relation: the path of `arrow_count` arrows starting at vertex
/// `start` is zero. `end` is the index of the last arrow in the path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    pub start: usize,
    pub arrow_count: usize,
    pub end: usize,
}

/// The projectives sharing one socle, listed from the shortest (`P_min`,
/// at a relation start) to the longest (`P_max`, projective-injective).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveClass {
    pub class_index: usize,
    pub socle_vertex: usize,
    pub members: Vec<usize>,
}

impl ProjectiveClass {
    pub fn p_min(&self) -> usize {
        self.members[0]
    }

    pub fn p_max(&self) -> usize {
        *self.members.last().expect("classes are nonempty")
    }
}

impl Algebra {
    pub fn from_kupisch(series: &[usize]) -> Result<Self> {
        let n = series.len();
        if n < 3 {
            return Err(Error::InvalidKupisch(format!(
                "need at least 3 vertices, got {n}"
            )));
        }
        if let Some(i) = series.iter().position(|&c| c < 2) {
            return Err(Error::InvalidKupisch(format!(
                "c_{} = {} but every projective needs length c >= 2",
                i + 1,
                series[i]
            )));
        }
        for i in 0..n {
            let next = (i + 1) % n;
            if series[next] + 1 < series[i] {
                return Err(Error::InvalidKupisch(format!(
                    "c_{} = {} violates c_{} >= c_{} - 1 = {}",
                    next + 1,
                    series[next],
                    next + 1,
                    i + 1,
                    series[i] - 1
                )));
            }
        }
        Ok(Algebra {
            kupisch: series.to_vec(),
        })
    }

    /// Builds the algebra from an irredundant relation system given as
    /// `(start, arrow_count)` pairs with strictly increasing starts.
    ///
    /// Every non-start vertex `v` is filled in with `c_v = c_{v+1} + 1`.
    pub fn from_relations(n: usize, rels: &[(usize, usize)]) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidKupisch(format!(
                "need at least 3 vertices, got {n}"
            )));
        }
        if rels.is_empty() {
            return Err(Error::InvalidRelation(
                "a relation system needs at least one relation".into(),
            ));
        }
        let mut declared = vec![None; n + 1];
        let mut prev = 0;
        for &(start, len) in rels {
            if start < 1 || start > n {
                return Err(Error::InvalidRelation(format!(
                    "start vertex {start} outside 1..={n}"
                )));
            }
            if start <= prev {
                return Err(Error::InvalidRelation(format!(
                    "starts must be distinct and increasing (got {start} after {prev})"
                )));
            }
            if len < 2 {
                return Err(Error::InvalidRelation(format!(
                    "relation at {start} composes {len} arrow(s); at least 2 required"
                )));
            }
            declared[start] = Some(len);
            prev = start;
        }

        let mut c = vec![0usize; n + 1];
        // walk backwards around the cycle from the last start so every
        // non-start vertex sees its successor already filled
        let last = rels[rels.len() - 1].0;
        let mut v = last;
        for _ in 0..n {
            c[v] = match declared[v] {
                Some(len) => len,
                None => c[v % n + 1] + 1,
            };
            v = if v == 1 { n } else { v - 1 };
        }

        for &(start, len) in rels {
            let next = c[start % n + 1];
            if len > next {
                return Err(Error::RedundantSystem(format!(
                    "the relation at {start} ({len} arrows) contains the path that \
                     is already zero from vertex {} ({next} arrows)",
                    start % n + 1
                )));
            }
        }

        Algebra::from_kupisch(&c[1..])
    }

    pub fn n(&self) -> usize {
        self.kupisch.len()
    }

    pub fn kupisch(&self) -> &[usize] {
        &self.kupisch
    }

    /// Length of the projective `P_v`.
    pub fn c(&self, v: usize) -> usize {
        self.kupisch[self.wrap(v) - 1]
    }

    pub fn max_c(&self) -> usize {
        *self.kupisch.iter().max().expect("nonempty series")
    }

    /// Total number of indecomposable modules, `sum c_i`.
    pub fn module_count(&self) -> usize {
        self.kupisch.iter().sum()
    }

    /// Reduces any positive vertex expression to its representative in `1..=N`.
    pub fn wrap(&self, v: usize) -> usize {
        (v + self.n() - 1) % self.n() + 1
    }

    /// Vertex `v + k` around the cycle.
    pub fn shift(&self, v: usize, k: usize) -> usize {
        self.wrap(v + k % self.n())
    }

    /// Vertex `v - k` around the cycle.
    pub fn unshift(&self, v: usize, k: usize) -> usize {
        self.wrap(v + self.n() - k % self.n())
    }

    fn is_relation_start(&self, v: usize) -> bool {
        self.c(v) <= self.c(v + 1)
    }

    pub fn relations(&self) -> Vec<Relation> {
        (1..=self.n())
            .filter(|&v| self.is_relation_start(v))
            .map(|v| Relation {
                start: v,
                arrow_count: self.c(v),
                end: self.shift(v, self.c(v) - 1),
            })
            .collect()
    }

    /// Number of relations in the irredundant system.
    pub fn r(&self) -> usize {
        (1..=self.n())
            .filter(|&v| self.is_relation_start(v))
            .count()
    }

    pub fn socle_of_projective(&self, v: usize) -> usize {
        self.shift(v, self.c(v) - 1)
    }

    /// One class per relation, in the order of relation starts. Members run
    /// from `P_min = P_start` down the vertex indices to `P_max`.
    pub fn projective_classes(&self) -> Vec<ProjectiveClass> {
        self.relations()
            .iter()
            .enumerate()
            .map(|(j, rel)| {
                let mut members = vec![rel.start];
                let mut v = self.unshift(rel.start, 1);
                while !self.is_relation_start(v) {
                    members.push(v);
                    v = self.unshift(v, 1);
                }
                ProjectiveClass {
                    class_index: j + 1,
                    socle_vertex: rel.end,
                    members,
                }
            })
            .collect()
    }

    pub fn is_self_injective(&self) -> bool {
        self.kupisch.windows(2).all(|w| w[0] == w[1])
    }

    /// `(S, S')`: relation ends and their successors, both in relation order.
    pub fn socle_marks(&self) -> (Vec<usize>, Vec<usize>) {
        let ends: Vec<usize> = self.relations().iter().map(|r| r.end).collect();
        let succ = ends.iter().map(|&e| self.shift(e, 1)).collect();
        (ends, succ)
    }

    pub fn socle_set(&self) -> BTreeSet<usize> {
        self.relations().iter().map(|r| r.end).collect()
    }

    pub fn top_set(&self) -> BTreeSet<usize> {
        self.relations()
            .iter()
            .map(|r| self.shift(r.end, 1))
            .collect()
    }

    pub fn kupisch_string(&self) -> String {
        join(&self.kupisch, ",")
    }

    pub fn relations_string(&self) -> String {
        self.relations()
            .iter()
            .map(|r| format!("{}:{}", r.start, r.arrow_count))
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.kupisch_string())
    }
}

pub(crate) fn join(xs: &[usize], sep: &str) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// Parses `"3,5,4,5,4"`.
pub fn parse_kupisch(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad Kupisch entry {t:?} in {s:?}")))
        })
        .collect()
}

/// Parses `"1:3;3:4"` into `(start, arrow_count)` pairs.
pub fn parse_relations(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (a, b) = t
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("relation {t:?} is not start:arrow_count")))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad number {x:?} in relation {t:?}")))
            };
            Ok((parse(a)?, parse(b)?))
        })
        .collect()
}
