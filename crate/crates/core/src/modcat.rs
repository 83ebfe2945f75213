//! Indecomposable modules, projective covers, syzygies and the classical
//! homological dimensions.
//!
//! Every indecomposable module over a Nakayama algebra is uniserial, so it is
//! determined by its top vertex and its length. The zero module is `None`
//! wherever a syzygy may vanish.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::Algebra;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniserialModule {
    top: usize,
    length: usize,
}

impl UniserialModule {
    pub fn top(&self) -> usize {
        self.top
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn socle(&self, a: &Algebra) -> usize {
        a.shift(self.top, self.length - 1)
    }

    /// Composition factors from top to socle.
    pub fn factors(&self, a: &Algebra) -> Vec<usize> {
        (0..self.length).map(|k| a.shift(self.top, k)).collect()
    }

    pub fn is_projective(&self, a: &Algebra) -> bool {
        self.length == a.c(self.top)
    }

    /// `[S4;S5;S1]` style rendering.
    pub fn display(&self, a: &Algebra) -> String {
        let inner = self
            .factors(a)
            .iter()
            .map(|v| format!("S{v}"))
            .collect::<Vec<_>>()
            .join(";");
        format!("[{inner}]")
    }
}

impl fmt::Display for UniserialModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.top, self.length)
    }
}

/// Validated constructor for the uniserial module with the given top and length.
pub fn module(a: &Algebra, top: usize, length: usize) -> Result<UniserialModule> {
    if top < 1 || top > a.n() {
        return Err(Error::InvalidModule {
            top,
            length,
            reason: format!("top vertex outside 1..={}", a.n()),
        });
    }
    if length < 1 || length > a.c(top) {
        return Err(Error::InvalidModule {
            top,
            length,
            reason: format!("length must lie in 1..={} (c_{top})", a.c(top)),
        });
    }
    Ok(UniserialModule { top, length })
}

/// Parses `top:length`.
pub fn parse_module(a: &Algebra, s: &str) -> Result<UniserialModule> {
    let (t, l) = s
        .trim()
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("module {s:?} is not top:length")))?;
    let num = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad number {x:?} in module {s:?}")))
    };
    module(a, num(t)?, num(l)?)
}

pub fn parse_module_list(a: &Algebra, s: &str) -> Result<Vec<UniserialModule>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| parse_module(a, t))
        .collect()
}

pub fn projective(a: &Algebra, v: usize) -> UniserialModule {
    let top = a.wrap(v);
    UniserialModule {
        top,
        length: a.c(top),
    }
}

pub fn simple(a: &Algebra, v: usize) -> UniserialModule {
    UniserialModule {
        top: a.wrap(v),
        length: 1,
    }
}

pub fn projective_cover(a: &Algebra, m: UniserialModule) -> UniserialModule {
    projective(a, m.top)
}

/// Kernel of the projective cover. `None` is the zero module.
pub fn syzygy(a: &Algebra, m: UniserialModule) -> Option<UniserialModule> {
    let c = a.c(m.top);
    if m.length == c {
        None
    } else {
        Some(UniserialModule {
            top: a.shift(m.top, m.length),
            length: c - m.length,
        })
    }
}

/// `Omega^k(m)`, possibly zero.
pub fn syzygy_power(a: &Algebra, m: UniserialModule, k: usize) -> Option<UniserialModule> {
    let mut cur = Some(m);
    for _ in 0..k {
        cur = cur.and_then(|x| syzygy(a, x));
    }
    cur
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dim {
    Finite(usize),
    Infinite,
}

impl Dim {
    pub fn is_finite(&self) -> bool {
        matches!(self, Dim::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            Dim::Finite(k) => Some(*k),
            Dim::Infinite => None,
        }
    }
}

impl Serialize for Dim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Dim::Finite(k) => s.serialize_u64(*k as u64),
            Dim::Infinite => s.serialize_str("inf"),
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(k) => write!(f, "{k}"),
            Dim::Infinite => f.write_str("inf"),
        }
    }
}

/// Smallest `k` with `Omega^k(m)` projective, or `Infinite` once the syzygy
/// orbit revisits a module.
pub fn pdim(a: &Algebra, m: UniserialModule) -> Dim {
    let mut seen = vec![false; a.module_count()];
    let mut cur = m;
    let mut k = 0;
    loop {
        if cur.is_projective(a) {
            return Dim::Finite(k);
        }
        let idx = module_index(a, cur);
        if seen[idx] {
            return Dim::Infinite;
        }
        seen[idx] = true;
        cur = syzygy(a, cur).expect("nonprojective modules have nonzero syzygy");
        k += 1;
    }
}

pub fn gldim(a: &Algebra) -> Dim {
    let mut best = 0;
    for v in 1..=a.n() {
        match pdim(a, simple(a, v)) {
            Dim::Infinite => return Dim::Infinite,
            Dim::Finite(k) => best = best.max(k),
        }
    }
    debug_assert!(best <= 2 * a.n() - 2, "Gustafson bound violated on {a}");
    Dim::Finite(best)
}

pub fn findim(a: &Algebra) -> usize {
    all_indecomposables(a)
        .into_iter()
        .filter_map(|m| pdim(a, m).finite())
        .max()
        .unwrap_or(0)
}

/// Every `(t, l)` with `1 <= l <= c_t`, ordered by top then length.
pub fn all_indecomposables(a: &Algebra) -> Vec<UniserialModule> {
    (1..=a.n())
        .flat_map(|t| (1..=a.c(t)).map(move |length| UniserialModule { top: t, length }))
        .collect()
}

pub fn nonprojective_indecomposables(a: &Algebra) -> Vec<UniserialModule> {
    all_indecomposables(a)
        .into_iter()
        .filter(|m| !m.is_projective(a))
        .collect()
}

/// Position of `m` in [`all_indecomposables`].
pub fn module_index(a: &Algebra, m: UniserialModule) -> usize {
    a.kupisch()[..m.top - 1].iter().sum::<usize>() + m.length - 1
}

/// True iff no module with the same socle is strictly longer.
pub fn is_injective(a: &Algebra, m: UniserialModule) -> bool {
    let soc = m.socle(a);
    (m.length + 1..=a.max_c()).all(|len| {
        let top = a.unshift(soc, len - 1);
        len > a.c(top)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResolutionStep {
    pub module: UniserialModule,
    pub cover: UniserialModule,
    pub syzygy: Option<UniserialModule>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrailOutcome {
    /// `Omega^k` of the start is projective.
    FiniteAt(usize),
    /// `Omega^t` of the start is the first Omega-periodic syzygy.
    PeriodicEntryAt(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionTrail {
    pub start: UniserialModule,
    pub steps: Vec<ResolutionStep>,
    pub outcome: TrailOutcome,
}

/// The minimal projective resolution of `m`, followed until it reaches a
/// projective or enters the Omega-periodic part.
pub fn resolution_trail(a: &Algebra, m: UniserialModule) -> ResolutionTrail {
    let graph = SyzygyGraph::new(a);
    let mut steps = Vec::new();
    let mut cur = m;
    let outcome = loop {
        if cur.is_projective(a) {
            break TrailOutcome::FiniteAt(steps.len());
        }
        if graph.is_periodic(cur) {
            break TrailOutcome::PeriodicEntryAt(steps.len());
        }
        let syz = syzygy(a, cur);
        steps.push(ResolutionStep {
            module: cur,
            cover: projective_cover(a, cur),
            syzygy: syz,
        });
        cur = syz.expect("nonprojective modules have nonzero syzygy");
    };
    ResolutionTrail {
        start: m,
        steps,
        outcome,
    }
}

/// The syzygy map as a functional graph on the indecomposables, with the
/// zero module as one extra absorbing node.
#[derive(Clone, Debug)]
pub struct SyzygyGraph {
    modules: Vec<UniserialModule>,
    succ: Vec<usize>,
    on_cycle: Vec<bool>,
}

impl SyzygyGraph {
    pub fn new(a: &Algebra) -> Self {
        let modules = all_indecomposables(a);
        let zero = modules.len();
        let mut succ: Vec<usize> = modules
            .iter()
            .map(|&m| syzygy(a, m).map_or(zero, |s| module_index(a, s)))
            .collect();
        succ.push(zero);

        // colour: 0 unvisited, 1 on current path, 2 done
        let mut colour = vec![0u8; succ.len()];
        let mut on_cycle = vec![false; succ.len()];
        for s in 0..succ.len() {
            if colour[s] != 0 {
                continue;
            }
            let mut path = Vec::new();
            let mut v = s;
            while colour[v] == 0 {
                colour[v] = 1;
                path.push(v);
                v = succ[v];
            }
            if colour[v] == 1 {
                let pos = path.iter().position(|&x| x == v).expect("v is on the path");
                for &x in &path[pos..] {
                    on_cycle[x] = true;
                }
            }
            for &x in &path {
                colour[x] = 2;
            }
        }
        on_cycle[zero] = false;

        SyzygyGraph {
            modules,
            succ,
            on_cycle,
        }
    }

    pub fn modules(&self) -> &[UniserialModule] {
        &self.modules
    }

    fn index_of(&self, m: UniserialModule) -> usize {
        self.modules
            .binary_search(&m)
            .expect("module belongs to this algebra")
    }

    pub fn is_periodic(&self, m: UniserialModule) -> bool {
        self.on_cycle[self.index_of(m)]
    }

    pub fn next(&self, m: UniserialModule) -> Option<UniserialModule> {
        self.modules.get(self.succ[self.index_of(m)]).copied()
    }

    pub fn periodic_modules(&self) -> Vec<UniserialModule> {
        self.modules
            .iter()
            .zip(&self.on_cycle)
            .filter(|(_, &p)| p)
            .map(|(&m, _)| m)
            .collect()
    }
}
