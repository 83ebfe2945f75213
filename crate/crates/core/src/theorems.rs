//! Decidable statements about cyclic Nakayama algebras, checked on one
//! algebra at a time.
//!
//! Every check yields a [`CheckResult`]. A `Fail` always carries a concrete
//! witness; `NotApplicable` names the hypothesis that did not hold.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::delta::DeltaSystem;
use crate::error::{Error, Result};
use crate::modcat::{self, Dim, UniserialModule};
use crate::phi::{IsoClassSet, OmegaPeriodic, PhiEngine, PhiTrace, Rho};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotApplicable => "n/a",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    pub evidence: String,
}

impl CheckResult {
    fn pass(name: &'static str, evidence: impl Into<String>) -> Self {
        CheckResult {
            name,
            status: Status::Pass,
            evidence: evidence.into(),
        }
    }

    fn fail(name: &'static str, evidence: impl Into<String>) -> Self {
        CheckResult {
            name,
            status: Status::Fail,
            evidence: evidence.into(),
        }
    }

    fn not_applicable(name: &'static str, evidence: impl Into<String>) -> Self {
        CheckResult {
            name,
            status: Status::NotApplicable,
            evidence: evidence.into(),
        }
    }

    fn from_violations(name: &'static str, ok: impl Into<String>, violations: Vec<String>) -> Self {
        match violations.first() {
            None => CheckResult::pass(name, ok),
            Some(first) => CheckResult::fail(
                name,
                format!("{} violation(s), first: {first}", violations.len()),
            ),
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

/// The Gustafson function `f(i) = [i + d_i]` on Δ-indices `1..=r`, with `d`
/// the Δ-level Kupisch series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gustafson {
    /// `f[i-1] = f(i)`.
    pub f: Vec<usize>,
    /// Least iterate after which `f` permutes its image.
    pub d: usize,
    /// The points on cycles of `f`.
    pub cycle_points: Vec<usize>,
    /// Images `f^k([1, r])` for `k = 0..=d`.
    pub image_chain: Vec<Vec<usize>>,
}

pub fn gustafson(a: &Algebra) -> Gustafson {
    gustafson_from(DeltaSystem::new(a).delta_kupisch())
}

pub fn gustafson_from(delta_kupisch: &[usize]) -> Gustafson {
    let r = delta_kupisch.len();
    let f: Vec<usize> = (1..=r)
        .map(|i| (i - 1 + delta_kupisch[i - 1]) % r + 1)
        .collect();
    let mut image: BTreeSet<usize> = (1..=r).collect();
    let mut chain = Vec::new();
    let mut d = 0;
    loop {
        chain.push(image.iter().copied().collect::<Vec<_>>());
        let next: BTreeSet<usize> = image.iter().map(|&i| f[i - 1]).collect();
        if next.len() == image.len() {
            break;
        }
        image = next;
        d += 1;
    }
    Gustafson {
        f,
        d,
        cycle_points: image.into_iter().collect(),
        image_chain: chain,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectiveType {
    /// A periodic submodule `sub` whose cokernel is not periodic.
    Type1 {
        sub: UniserialModule,
    },
    /// An extension of the periodic `top_part` over `sub = Ω(top_part)`.
    Type2 {
        top_part: UniserialModule,
        sub: UniserialModule,
    },
    /// Only a middle subquotient is periodic.
    Type3 {
        middle: UniserialModule,
    },
    NoPeriodicPart,
}

impl fmt::Display for ProjectiveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectiveType::Type1 { sub } => write!(f, "type1(sub {sub})"),
            ProjectiveType::Type2 { top_part, sub } => write!(f, "type2({top_part} over {sub})"),
            ProjectiveType::Type3 { middle } => write!(f, "type3(middle {middle})"),
            ProjectiveType::NoPeriodicPart => f.write_str("no-periodic-part"),
        }
    }
}

/// Cached invariants of one algebra that the checks share.
pub struct Analysis<'a> {
    pub algebra: &'a Algebra,
    pub engine: PhiEngine<'a>,
    pub deltas: DeltaSystem,
    pub gldim: Dim,
    pub findim: usize,
    pub phi_dim: usize,
    pub trace: PhiTrace,
    pub periodic: OmegaPeriodic,
    pub gustafson: Gustafson,
    modules: Vec<UniserialModule>,
    pdims: Vec<Dim>,
    rhos: Vec<Rho>,
}

impl<'a> Analysis<'a> {
    pub fn new(algebra: &'a Algebra) -> Self {
        let a = algebra;
        let engine = PhiEngine::new(a);
        let modules = modcat::all_indecomposables(a);
        let pdims: Vec<Dim> = modules.iter().map(|&m| modcat::pdim(a, m)).collect();
        let rhos: Vec<Rho> = modules.iter().map(|&m| engine.rho(m)).collect();
        let gldim = modcat::gldim(a);
        let findim = pdims.iter().filter_map(Dim::finite).max().unwrap_or(0);
        let trace = engine.trace(&modules);
        let periodic = engine.omega_periodic();
        let deltas = DeltaSystem::new(a);
        let gustafson = gustafson_from(deltas.delta_kupisch());
        Analysis {
            algebra,
            deltas,
            gldim,
            findim,
            phi_dim: trace.phi,
            trace,
            periodic,
            gustafson,
            engine,
            modules,
            pdims,
            rhos,
        }
    }

    pub fn r(&self) -> usize {
        self.deltas.r()
    }

    fn infinite_gldim(&self, name: &'static str) -> Option<CheckResult> {
        match self.gldim {
            Dim::Finite(k) => Some(CheckResult::not_applicable(
                name,
                format!("gldim is finite ({k})"),
            )),
            Dim::Infinite => None,
        }
    }

    pub fn delta_subset_of_periodic(&self) -> bool {
        self.deltas
            .deltas()
            .iter()
            .all(|d| self.periodic.set.contains(d))
    }

    pub fn check_theorem_a(&self) -> CheckResult {
        const NAME: &str = "even_phi_dim";
        if let Some(na) = self.infinite_gldim(NAME) {
            return na;
        }
        let ev = format!("phi_dim = {}", self.phi_dim);
        if self.phi_dim.is_multiple_of(2) {
            CheckResult::pass(NAME, ev)
        } else {
            CheckResult::fail(NAME, format!("{ev} is odd"))
        }
    }

    pub fn check_theorem_b(&self) -> CheckResult {
        const NAME: &str = "phi_dim_at_most_2r";
        if let Some(na) = self.infinite_gldim(NAME) {
            return na;
        }
        let ev = format!("phi_dim = {} vs 2r = {}", self.phi_dim, 2 * self.r());
        if self.phi_dim <= 2 * self.r() {
            CheckResult::pass(NAME, ev)
        } else {
            CheckResult::fail(NAME, ev)
        }
    }

    pub fn check_small_phi(&self) -> CheckResult {
        const NAME: &str = "small_phi_dim";
        if let Some(na) = self.infinite_gldim(NAME) {
            return na;
        }
        let a = self.algebra;
        let mut bad = Vec::new();
        if (self.phi_dim == 0) != a.is_self_injective() {
            bad.push(format!(
                "phi_dim = {} but self_injective = {}",
                self.phi_dim,
                a.is_self_injective()
            ));
        }
        if self.phi_dim == 1 {
            bad.push("phi_dim = 1".to_string());
        }
        let missing: Vec<String> = self
            .deltas
            .deltas()
            .iter()
            .enumerate()
            .filter(|(_, d)| !self.periodic.set.contains(d))
            .map(|(j, d)| format!("Δ{}={d}", j + 1))
            .collect();
        // for self-injective algebras every Δ is a periodic simple while the
        // φ-dimension is 0, so this item concerns the remaining algebras
        if !a.is_self_injective() && (self.phi_dim == 2) != missing.is_empty() {
            bad.push(format!(
                "phi_dim = {} but non-periodic Δ: [{}]",
                self.phi_dim,
                missing.join(", ")
            ));
        }
        if bad.is_empty() {
            let detail = if missing.is_empty() {
                "all Δ periodic".to_string()
            } else {
                format!("non-periodic Δ: {}", missing.join(", "))
            };
            CheckResult::pass(NAME, format!("phi_dim = {}; {detail}", self.phi_dim))
        } else {
            CheckResult::fail(NAME, bad.join("; "))
        }
    }

    pub fn check_one_relation(&self) -> CheckResult {
        const NAME: &str = "one_relation";
        let a = self.algebra;
        let rels = a.relations();
        if rels.len() != 1 {
            return CheckResult::not_applicable(NAME, format!("r = {}", rels.len()));
        }
        let top = a.shift(rels[0].end, 1);
        let d_projective = a.c(top) == a.n();
        if d_projective {
            if self.gldim == Dim::Finite(2) {
                CheckResult::pass(NAME, format!("D = {top}:{} projective, gldim 2", a.n()))
            } else {
                CheckResult::fail(
                    NAME,
                    format!("D = {top}:{} projective but gldim = {}", a.n(), self.gldim),
                )
            }
        } else if self.gldim == Dim::Infinite && self.phi_dim == 2 {
            CheckResult::pass(
                NAME,
                format!("D = {top}:{} not projective, phi_dim 2", a.n()),
            )
        } else {
            CheckResult::fail(
                NAME,
                format!(
                    "D = {top}:{} not projective but gldim = {}, phi_dim = {}",
                    a.n(),
                    self.gldim,
                    self.phi_dim
                ),
            )
        }
    }

    pub fn check_delta_projective(&self) -> CheckResult {
        const NAME: &str = "projective_delta_finite_gldim";
        let a = self.algebra;
        let proj: Vec<String> = self
            .deltas
            .deltas()
            .iter()
            .enumerate()
            .filter(|(_, d)| d.is_projective(a))
            .map(|(j, d)| format!("Δ{}={d}", j + 1))
            .collect();
        if proj.is_empty() {
            return CheckResult::not_applicable(NAME, "no Δ is projective");
        }
        let ev = format!("projective {}; gldim = {}", proj.join(", "), self.gldim);
        if self.gldim.is_finite() {
            CheckResult::pass(NAME, ev)
        } else {
            CheckResult::fail(NAME, ev)
        }
    }

    pub fn check_gustafson(&self) -> CheckResult {
        const NAME: &str = "gustafson_bound";
        let g = &self.gustafson;
        let r = self.r();
        let mut bad = Vec::new();
        if g.d + 1 > r {
            bad.push(format!("d = {} exceeds r - 1 = {}", g.d, r - 1));
        }
        if g.cycle_points.is_empty() {
            bad.push("no periodic points of f".into());
        }
        if self.gldim == Dim::Infinite && self.phi_dim > 2 * g.d + 2 {
            bad.push(format!(
                "phi_dim = {} exceeds 2d + 2 = {}",
                self.phi_dim,
                2 * g.d + 2
            ));
        }
        let ev = format!("d = {}, f = {:?}, Y = {:?}", g.d, g.f, g.cycle_points);
        if bad.is_empty() {
            CheckResult::pass(NAME, ev)
        } else {
            CheckResult::fail(NAME, format!("{ev}: {}", bad.join("; ")))
        }
    }

    /// Levels `t` of ρ attained by some indecomposable, with one witness each.
    pub fn rho_levels(&self) -> BTreeMap<usize, UniserialModule> {
        let mut levels = BTreeMap::new();
        for (m, rho) in self.modules.iter().zip(&self.rhos) {
            if let Rho::Defined(t) = rho {
                levels.entry(*t).or_insert(*m);
            }
        }
        levels
    }

    pub fn check_odd_rho_witness(&self) -> CheckResult {
        const NAME: &str = "odd_rho_witness";
        if let Some(na) = self.infinite_gldim(NAME) {
            return na;
        }
        let levels = self.rho_levels();
        let mut found = Vec::new();
        let mut missing = Vec::new();
        for (&k, &m) in levels.iter().filter(|(&k, _)| k % 2 == 1) {
            match levels.get(&(k + 1)) {
                Some(&w) => found.push(format!("({k}, {m}, {w})")),
                None => missing.push(format!("rho({m}) = {k} but no module has rho {}", k + 1)),
            }
        }
        if found.is_empty() && missing.is_empty() {
            return CheckResult::pass(NAME, "no odd rho level");
        }
        CheckResult::from_violations(NAME, found.join(" "), missing)
    }

    pub fn classify_terminal_projective(&self, p: UniserialModule) -> Result<ProjectiveType> {
        let a = self.algebra;
        if !p.is_projective(a) {
            return Err(Error::NotProjective {
                top: p.top(),
                length: p.length(),
            });
        }
        let per = |m: UniserialModule| self.periodic.set.contains(&m);
        let t = p.top();
        let len = p.length();
        let quotient = |q: usize| modcat::module(a, t, q).expect("quotient of a projective");
        let submodule = |q: usize| {
            modcat::module(a, a.shift(t, q), len - q).expect("submodule of a projective")
        };

        for q in 1..len {
            let (top_part, sub) = (quotient(q), submodule(q));
            if per(top_part) && per(sub) && modcat::syzygy(a, top_part) == Some(sub) {
                return Ok(ProjectiveType::Type2 { top_part, sub });
            }
        }
        // largest periodic submodule: smallest cut
        if let Some(q) = (1..len).find(|&q| per(submodule(q))) {
            return Ok(ProjectiveType::Type1 { sub: submodule(q) });
        }
        for skip in 1..len {
            for l in 1..len - skip {
                let middle = modcat::module(a, a.shift(t, skip), l).expect("subquotient");
                if per(middle) {
                    return Ok(ProjectiveType::Type3 { middle });
                }
            }
        }
        Ok(ProjectiveType::NoPeriodicPart)
    }

    /// For each module of odd finite projective dimension `k`, the type of its
    /// terminal projective predicts a module reaching the periodic part later:
    /// types 1 and 2 give ρ = k + 1, type 3 gives ρ > k.
    pub fn check_terminal_projectives(&self) -> CheckResult {
        const NAME: &str = "terminal_projective_types";
        if let Some(na) = self.infinite_gldim(NAME) {
            return na;
        }
        let a = self.algebra;
        let levels = self.rho_levels();
        let mut counts: BTreeMap<&'static str, usize> = BTreeMap::new();
        let mut bad = Vec::new();
        for (m, dim) in self.modules.iter().zip(&self.pdims) {
            let Dim::Finite(k) = *dim else { continue };
            if k % 2 == 0 {
                continue;
            }
            let p = modcat::syzygy_power(a, *m, k).expect("Omega^pdim is projective");
            let ty = self
                .classify_terminal_projective(p)
                .expect("terminal module is projective");
            let ok = match ty {
                ProjectiveType::Type1 { .. } => {
                    *counts.entry("type1").or_default() += 1;
                    levels.contains_key(&(k + 1))
                }
                ProjectiveType::Type2 { .. } => {
                    *counts.entry("type2").or_default() += 1;
                    levels.contains_key(&(k + 1))
                }
                ProjectiveType::Type3 { .. } => {
                    *counts.entry("type3").or_default() += 1;
                    levels.range(k + 1..).next().is_some()
                }
                ProjectiveType::NoPeriodicPart => {
                    *counts.entry("none").or_default() += 1;
                    true
                }
            };
            if !ok {
                bad.push(format!(
                    "pdim({m}) = {k}, terminal {p} is {ty}, no later rho level"
                ));
            }
        }
        CheckResult::from_violations(NAME, format!("odd-pdim terminal types {counts:?}"), bad)
    }

    // ---- structural invariants ----

    fn inv_round_trip(&self) -> CheckResult {
        const NAME: &str = "presentation_round_trip";
        let a = self.algebra;
        let rels = a.relations();
        let pairs: Vec<(usize, usize)> = rels.iter().map(|r| (r.start, r.arrow_count)).collect();
        let mut bad = Vec::new();
        match Algebra::from_relations(a.n(), &pairs) {
            Ok(b) if &b == a => {}
            Ok(b) => bad.push(format!("relations rebuild {b}")),
            Err(e) => bad.push(format!("relations rejected: {e}")),
        }
        // relation ends are cyclically ordered like the starts
        let ends: Vec<usize> = rels.iter().map(|r| r.end).collect();
        let descents = (0..ends.len())
            .filter(|&i| ends[(i + 1) % ends.len()] <= ends[i])
            .count();
        if ends.len() > 1 && descents != 1 {
            bad.push(format!("ends {ends:?} not cyclically ordered"));
        }
        CheckResult::from_violations(NAME, a.relations_string(), bad)
    }

    fn inv_classes(&self) -> CheckResult {
        const NAME: &str = "projective_classes";
        let a = self.algebra;
        let classes = a.projective_classes();
        let mut bad = Vec::new();
        let mut seen = vec![0usize; a.n() + 1];
        for class in &classes {
            for w in class.members.windows(2) {
                if a.c(w[1]) != a.c(w[0]) + 1 {
                    bad.push(format!(
                        "class {} lengths not consecutive",
                        class.class_index
                    ));
                }
            }
            for &v in &class.members {
                seen[v] += 1;
                if a.socle_of_projective(v) != class.socle_vertex {
                    bad.push(format!("P{v} socle differs from class socle"));
                }
            }
            if !modcat::is_injective(a, modcat::projective(a, class.p_max())) {
                bad.push(format!("P_max = P{} not injective", class.p_max()));
            }
        }
        if seen[1..].iter().any(|&k| k != 1) {
            bad.push("classes do not partition the vertices".into());
        }
        let singletons = classes.iter().all(|c| c.members.len() == 1);
        let distinct_socles = (1..=a.n())
            .map(|v| a.socle_of_projective(v))
            .collect::<BTreeSet<_>>()
            .len()
            == a.n();
        let si = a.is_self_injective();
        if si != singletons || si != (a.r() == a.n()) || si != distinct_socles {
            bad.push("self-injectivity characterisations disagree".into());
        }
        CheckResult::from_violations(NAME, format!("{} classes", classes.len()), bad)
    }

    fn inv_syzygy_marks(&self) -> CheckResult {
        const NAME: &str = "syzygy_socle_top";
        let a = self.algebra;
        let socles = a.socle_set();
        let tops = a.top_set();
        let mut bad = Vec::new();
        for &m in &self.modules {
            if let Some(s) = modcat::syzygy(a, m) {
                if s.top() != a.shift(m.socle(a), 1) {
                    bad.push(format!("top of Ω({m}) is not soc + 1"));
                }
            }
            let mut cur = modcat::syzygy(a, m);
            let mut i = 1;
            while let Some(x) = cur {
                if !socles.contains(&x.socle(a)) {
                    bad.push(format!("soc Ω^{i}({m}) = {} not in S", x.socle(a)));
                }
                if i >= 2 && !tops.contains(&x.top()) {
                    bad.push(format!("top Ω^{i}({m}) = {} not in S'", x.top()));
                }
                if i > self.modules.len() + 1 {
                    break;
                }
                cur = modcat::syzygy(a, x);
                i += 1;
            }
            // no projective sits inside a nonprojective indecomposable
            if !m.is_projective(a) {
                for q in 1..m.length() {
                    let sub =
                        modcat::module(a, a.shift(m.top(), q), m.length() - q).expect("submodule");
                    if sub.is_projective(a) {
                        bad.push(format!("projective {sub} inside {m}"));
                    }
                }
            }
        }
        CheckResult::from_violations(NAME, "all syzygies", bad)
    }

    fn inv_delta_partition(&self) -> CheckResult {
        const NAME: &str = "delta_partition";
        let a = self.algebra;
        let mut hits = vec![0usize; a.n() + 1];
        for d in self.deltas.deltas() {
            for v in d.factors(a) {
                hits[v] += 1;
            }
        }
        let mut bad = Vec::new();
        if hits[1..].iter().any(|&h| h != 1) {
            bad.push(format!("composition factor counts {:?}", &hits[1..]));
        }
        let (s, s_prime) = (a.socle_set(), a.top_set());
        for (j, d) in self.deltas.deltas().iter().enumerate() {
            if !s.contains(&d.socle(a)) || !s_prime.contains(&d.top()) {
                bad.push(format!("Δ{} = {d} has top/socle outside S'/S", j + 1));
            }
        }
        CheckResult::from_violations(NAME, format!("r = {}", self.r()), bad)
    }

    fn inv_delta_filtration(&self) -> CheckResult {
        const NAME: &str = "delta_filtration";
        let a = self.algebra;
        let (s, s_prime) = (a.socle_set(), a.top_set());
        let mut bad = Vec::new();
        for &m in &self.modules {
            let decomposes = self.deltas.decompose(m);
            let marked = s_prime.contains(&m.top()) && s.contains(&m.socle(a));
            if decomposes.is_some() != marked {
                bad.push(format!(
                    "{m}: filtered = {}, marks = {marked}",
                    decomposes.is_some()
                ));
            }
            if let Some(seq) = decomposes {
                let total: usize = seq.iter().map(|&j| self.deltas.delta(j).length()).sum();
                if total != m.length() {
                    bad.push(format!("{m}: Δ lengths sum to {total}"));
                }
            }
            let mut cur = modcat::syzygy_power(a, m, 2);
            let mut i = 2;
            while let Some(x) = cur {
                if self.deltas.decompose(x).is_none() {
                    bad.push(format!("Ω^{i}({m}) = {x} not Δ-filtered"));
                }
                if self.engine.is_periodic(x) || i > self.modules.len() {
                    break;
                }
                cur = modcat::syzygy(a, x);
                i += 1;
            }
        }
        let d = self.deltas.delta_kupisch();
        if self.gldim == Dim::Infinite && d.windows(2).all(|w| w[0] == w[1]) {
            // equal Δ-lengths: Δ-modules never reach a projective and Ω is
            // injective on them
            let delta_modules: Vec<UniserialModule> = self
                .modules
                .iter()
                .copied()
                .filter(|&m| self.deltas.is_delta_module(m) && !m.is_projective(a))
                .collect();
            let mut images = BTreeMap::new();
            for &m in &delta_modules {
                if modcat::pdim(a, m).is_finite() {
                    bad.push(format!("equal Δ-lengths but pdim({m}) finite"));
                }
                if let Some(s) = modcat::syzygy(a, m) {
                    if let Some(prev) = images.insert(s, m) {
                        bad.push(format!("Ω({prev}) = Ω({m})"));
                    }
                }
            }
            if !self.delta_subset_of_periodic() {
                bad.push("equal Δ-lengths but some Δ not periodic".into());
            }
        }
        CheckResult::from_violations(NAME, format!("delta_kupisch {d:?}"), bad)
    }

    fn inv_alpha(&self) -> CheckResult {
        const NAME: &str = "alpha_monotone";
        let a = self.algebra;
        let mut bad = Vec::new();
        if self.trace.alpha_trace.windows(2).any(|w| w[1] > w[0]) {
            bad.push(format!("trace {:?} increases", self.trace.alpha_trace));
        }
        // drop by one syzygy on every class set along the trace
        let mut set: IsoClassSet = self.modules.iter().copied().collect();
        for _ in 0..=self.phi_dim + 1 {
            let next = set.syzygy(a);
            if next.rank(a) > set.rank(a) {
                bad.push(format!("α grew from {} to {}", set.rank(a), next.rank(a)));
            }
            set = next;
        }
        if self.trace.alpha_trace.len() > 1 && self.phi_dim == 1 {
            bad.push("trace first stabilises at index 1".into());
        }
        CheckResult::from_violations(
            NAME,
            format!("alpha_trace {:?}", self.trace.alpha_trace),
            bad,
        )
    }

    fn inv_periodic(&self) -> CheckResult {
        const NAME: &str = "periodic_core";
        let a = self.algebra;
        let mut bad = Vec::new();
        let per = &self.periodic;
        let image: BTreeSet<_> = per.perm.values().collect();
        if image.len() != per.set.len() || per.perm.len() != per.set.len() {
            bad.push("syzygy is not a bijection on the periodic part".into());
        }
        if self.gldim == Dim::Infinite {
            let stable = self.trace.class_sets[self.phi_dim].nonprojective(a);
            if stable != per.set {
                bad.push(format!(
                    "Ω^{}(M†) has {} nonprojective classes, periodic part has {}",
                    self.phi_dim,
                    stable.len(),
                    per.set.len()
                ));
            }
        } else if !per.set.is_empty() {
            bad.push("finite gldim with periodic modules".into());
        }
        // a non-periodic nonprojective class at step k forces phi_dim > k
        let mut set: IsoClassSet = self.modules.iter().copied().collect();
        for k in 0..=self.phi_dim + 1 {
            let stray = set
                .iter()
                .find(|m| !m.is_projective(a) && !per.set.contains(m));
            if let Some(m) = stray {
                if self.gldim == Dim::Infinite && self.phi_dim <= k {
                    bad.push(format!(
                        "{m} non-periodic in Ω^{k}(M†) but phi_dim = {}",
                        self.phi_dim
                    ));
                }
            }
            set = set.syzygy(a);
        }
        CheckResult::from_violations(NAME, format!("|Ω^per| = {}", per.set.len()), bad)
    }

    fn inv_dimensions(&self) -> CheckResult {
        const NAME: &str = "dimension_bounds";
        let a = self.algebra;
        let n = a.n();
        let cutoff = 2 * n - 2;
        let mut bad = Vec::new();
        if self.findim > self.phi_dim {
            bad.push(format!("findim {} > phi_dim {}", self.findim, self.phi_dim));
        }
        if let Dim::Finite(k) = self.gldim {
            if k > cutoff {
                bad.push(format!("gldim {k} > 2N - 2"));
            }
            if k != self.phi_dim {
                bad.push(format!("gldim {k} != phi_dim {}", self.phi_dim));
            }
        }
        // bounded search up to 2N-2 steps, then a periodicity certificate
        for (&m, &dim) in self.modules.iter().zip(&self.pdims) {
            let mut found = None;
            let mut cur = m;
            for k in 0..=cutoff {
                if cur.is_projective(a) {
                    found = Some(k);
                    break;
                }
                cur = modcat::syzygy(a, cur).expect("nonprojective");
            }
            let bounded = match found {
                Some(k) => Dim::Finite(k),
                None => {
                    let start = cur;
                    let mut certified = false;
                    for _ in 0..=self.modules.len() {
                        if cur.is_projective(a) {
                            break;
                        }
                        cur = modcat::syzygy(a, cur).expect("nonprojective");
                        if cur == start {
                            certified = true;
                            break;
                        }
                    }
                    if !certified && !self.engine.is_periodic(start) {
                        // the orbit may enter its cycle later; follow it
                        let mut seen = BTreeSet::new();
                        let mut x = start;
                        certified = loop {
                            if x.is_projective(a) {
                                break false;
                            }
                            if !seen.insert(x) {
                                break true;
                            }
                            x = modcat::syzygy(a, x).expect("nonprojective");
                        };
                    }
                    if certified {
                        Dim::Infinite
                    } else {
                        bad.push(format!(
                            "{m} reaches a projective after more than 2N-2 steps"
                        ));
                        continue;
                    }
                }
            };
            if bounded != dim {
                bad.push(format!(
                    "pdim({m}): iteration {dim}, bounded search {bounded}"
                ));
            }
        }
        CheckResult::from_violations(
            NAME,
            format!(
                "gldim {}, findim {}, phi_dim {}",
                self.gldim, self.findim, self.phi_dim
            ),
            bad,
        )
    }

    pub fn theorem_checks(&self) -> Vec<CheckResult> {
        vec![
            self.check_theorem_a(),
            self.check_theorem_b(),
            self.check_small_phi(),
            self.check_one_relation(),
            self.check_delta_projective(),
            self.check_gustafson(),
            self.check_odd_rho_witness(),
            self.check_terminal_projectives(),
        ]
    }

    pub fn invariant_checks(&self) -> Vec<CheckResult> {
        vec![
            self.inv_round_trip(),
            self.inv_classes(),
            self.inv_syzygy_marks(),
            self.inv_delta_partition(),
            self.inv_delta_filtration(),
            self.inv_alpha(),
            self.inv_periodic(),
            self.inv_dimensions(),
        ]
    }

    pub fn verify_all(&self) -> Vec<CheckResult> {
        let mut out = self.theorem_checks();
        out.extend(self.invariant_checks());
        out
    }
}

pub fn check_theorem_a(a: &Algebra) -> CheckResult {
    Analysis::new(a).check_theorem_a()
}

pub fn check_theorem_b(a: &Algebra) -> CheckResult {
    Analysis::new(a).check_theorem_b()
}

pub fn check_small_phi(a: &Algebra) -> CheckResult {
    Analysis::new(a).check_small_phi()
}

pub fn check_one_relation(a: &Algebra) -> CheckResult {
    Analysis::new(a).check_one_relation()
}

pub fn check_delta_projective(a: &Algebra) -> CheckResult {
    Analysis::new(a).check_delta_projective()
}

pub fn check_odd_rho_witness(a: &Algebra) -> CheckResult {
    Analysis::new(a).check_odd_rho_witness()
}

pub fn classify_terminal_projective(a: &Algebra, p: UniserialModule) -> Result<ProjectiveType> {
    Analysis::new(a).classify_terminal_projective(p)
}

/// Gustafson data plus whether `phi_dim <= 2d + 2` (for infinite gldim) and
/// `d <= r - 1` both hold.
pub fn gustafson_d(a: &Algebra) -> (usize, bool) {
    let an = Analysis::new(a);
    (an.gustafson.d, !an.check_gustafson().is_fail())
}

pub fn verify_all(a: &Algebra) -> Vec<CheckResult> {
    Analysis::new(a).verify_all()
}
