//! The Igusa-Todorov φ function over a cyclic Nakayama algebra.
//!
//! For a module `M = ⊕ M_i^{n_i}` the subgroup `L^t⟨add M⟩` of `K_0` is
//! generated by the classes `[Ω^t M_i]`. Each of these is zero (projective or
//! zero syzygy) or a single basis element, because syzygies of indecomposables
//! stay indecomposable. The rank at step `t` is therefore the number of
//! distinct nonprojective modules among the `Ω^t M_i`, and φ(M) is the first
//! step at which that count reaches its eventual value.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::algebra::Algebra;
use crate::delta::DeltaSystem;
use crate::modcat::{self, Dim, SyzygyGraph, UniserialModule};
use crate::theorems;

/// A set of isomorphism classes of nonzero indecomposables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoClassSet(BTreeSet<UniserialModule>);

impl IsoClassSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, m: UniserialModule) -> bool {
        self.0.insert(m)
    }

    pub fn contains(&self, m: &UniserialModule) -> bool {
        self.0.contains(m)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &UniserialModule> {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &IsoClassSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn to_vec(&self) -> Vec<UniserialModule> {
        self.0.iter().copied().collect()
    }

    pub fn nonprojective(&self, a: &Algebra) -> IsoClassSet {
        self.iter()
            .filter(|m| !m.is_projective(a))
            .copied()
            .collect()
    }

    /// Number of nonprojective members: the rank of the subgroup they span.
    pub fn rank(&self, a: &Algebra) -> usize {
        self.iter().filter(|m| !m.is_projective(a)).count()
    }

    /// Classes of the nonzero syzygies of the members.
    pub fn syzygy(&self, a: &Algebra) -> IsoClassSet {
        self.iter().filter_map(|&m| modcat::syzygy(a, m)).collect()
    }
}

impl FromIterator<UniserialModule> for IsoClassSet {
    fn from_iter<I: IntoIterator<Item = UniserialModule>>(iter: I) -> Self {
        IsoClassSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a IsoClassSet {
    type Item = &'a UniserialModule;
    type IntoIter = std::collections::btree_set::Iter<'a, UniserialModule>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rho {
    Defined(usize),
    UndefinedFinitePdim,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiTrace {
    /// `α(Ω^t M)` for `t = 0..=phi`; the last entry is the stable value.
    pub alpha_trace: Vec<usize>,
    pub phi: usize,
    /// Syzygy class sets `Ω^t M` for `t = 0..=phi`.
    pub class_sets: Vec<IsoClassSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaPeriodic {
    pub set: IsoClassSet,
    pub perm: BTreeMap<UniserialModule, UniserialModule>,
}

/// φ-machinery for one algebra with its syzygy graph computed once.
#[derive(Clone, Debug)]
pub struct PhiEngine<'a> {
    algebra: &'a Algebra,
    graph: SyzygyGraph,
}

impl<'a> PhiEngine<'a> {
    pub fn new(algebra: &'a Algebra) -> Self {
        PhiEngine {
            algebra,
            graph: SyzygyGraph::new(algebra),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        self.algebra
    }

    pub fn graph(&self) -> &SyzygyGraph {
        &self.graph
    }

    pub fn alpha(&self, ms: &[UniserialModule]) -> usize {
        ms.iter()
            .copied()
            .collect::<IsoClassSet>()
            .rank(self.algebra)
    }

    pub fn trace(&self, ms: &[UniserialModule]) -> PhiTrace {
        let a = self.algebra;
        let mut sets = vec![ms.iter().copied().collect::<IsoClassSet>()];
        // once every member is periodic the syzygy acts bijectively and the
        // rank cannot change again
        while !sets
            .last()
            .expect("nonempty")
            .iter()
            .all(|&m| self.graph.is_periodic(m))
        {
            let next = sets.last().expect("nonempty").syzygy(a);
            sets.push(next);
        }
        let ranks: Vec<usize> = sets.iter().map(|s| s.rank(a)).collect();
        let stable = *ranks.last().expect("nonempty");
        let phi = ranks
            .iter()
            .position(|&x| x == stable)
            .expect("stable value occurs");
        sets.truncate(phi + 1);
        PhiTrace {
            alpha_trace: ranks[..=phi].to_vec(),
            phi,
            class_sets: sets,
        }
    }

    pub fn phi(&self, ms: &[UniserialModule]) -> usize {
        self.trace(ms).phi
    }

    /// φ of `M†`, the sum of all indecomposables. For finite global dimension
    /// this is cross-checked against gldim.
    pub fn phi_dim(&self) -> usize {
        let all = modcat::all_indecomposables(self.algebra);
        let phi = self.phi(&all);
        if let Dim::Finite(k) = modcat::gldim(self.algebra) {
            assert_eq!(
                phi, k,
                "phi-dim disagrees with finite gldim on {}",
                self.algebra
            );
        }
        phi
    }

    pub fn omega_periodic(&self) -> OmegaPeriodic {
        let set: IsoClassSet = self.graph.periodic_modules().into_iter().collect();
        let perm: BTreeMap<_, _> = set
            .iter()
            .map(|&m| {
                let next = self
                    .graph
                    .next(m)
                    .expect("periodic modules have nonzero syzygy");
                (m, next)
            })
            .collect();
        let image: IsoClassSet = perm.values().copied().collect();
        assert_eq!(image, set, "syzygy does not permute the periodic part");
        OmegaPeriodic { set, perm }
    }

    pub fn is_periodic(&self, m: UniserialModule) -> bool {
        self.graph.is_periodic(m)
    }

    pub fn periodic_projectives(&self) -> IsoClassSet {
        self.graph
            .periodic_modules()
            .into_iter()
            .map(|m| modcat::projective_cover(self.algebra, m))
            .collect()
    }

    pub fn rho(&self, m: UniserialModule) -> Rho {
        let mut cur = m;
        let mut t = 0;
        loop {
            if self.graph.is_periodic(cur) {
                return Rho::Defined(t);
            }
            match self.graph.next(cur) {
                Some(next) if !cur.is_projective(self.algebra) => cur = next,
                _ => return Rho::UndefinedFinitePdim,
            }
            t += 1;
        }
    }
}

pub fn alpha(a: &Algebra, ms: &[UniserialModule]) -> usize {
    PhiEngine::new(a).alpha(ms)
}

pub fn phi(a: &Algebra, ms: &[UniserialModule]) -> usize {
    PhiEngine::new(a).phi(ms)
}

pub fn phi_dim(a: &Algebra) -> usize {
    PhiEngine::new(a).phi_dim()
}

pub fn omega_periodic(a: &Algebra) -> OmegaPeriodic {
    PhiEngine::new(a).omega_periodic()
}

pub fn periodic_projectives(a: &Algebra) -> IsoClassSet {
    PhiEngine::new(a).periodic_projectives()
}

pub fn rho(a: &Algebra, m: UniserialModule) -> Rho {
    PhiEngine::new(a).rho(m)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiReport {
    pub algebra: String,
    pub n: usize,
    pub r: usize,
    pub self_injective: bool,
    pub gldim: Dim,
    pub findim: usize,
    pub phi_dim: usize,
    pub alpha_trace: Vec<usize>,
    pub omega_per_size: usize,
    pub delta_subset_of_omega_per: bool,
    pub gustafson_d: usize,
}

impl PhiReport {
    pub fn compute(a: &Algebra) -> Self {
        let engine = PhiEngine::new(a);
        let all = modcat::all_indecomposables(a);
        let trace = engine.trace(&all);
        let gldim = modcat::gldim(a);
        if let Dim::Finite(k) = gldim {
            assert_eq!(trace.phi, k, "phi-dim disagrees with finite gldim on {a}");
        }
        let ds = DeltaSystem::new(a);
        let per = engine.omega_periodic();
        PhiReport {
            algebra: a.kupisch_string(),
            n: a.n(),
            r: a.r(),
            self_injective: a.is_self_injective(),
            gldim,
            findim: modcat::findim(a),
            phi_dim: trace.phi,
            alpha_trace: trace.alpha_trace,
            omega_per_size: per.set.len(),
            delta_subset_of_omega_per: ds.deltas().iter().all(|d| per.set.contains(d)),
            gustafson_d: theorems::gustafson(a).d,
        }
    }
}
