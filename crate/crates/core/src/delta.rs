//! The Δ-modules: for each relation end `s` (a socle of projectives) the
//! shortest uniserial module whose socle is `S_s` and whose top is the
//! successor of the previous relation end.
//!
//! Δ_1..Δ_r are numbered by increasing top vertex. Going down a Δ-filtered
//! module the Δ-index increases by one (cyclically), so the Δ directly below
//! Δ_j is Δ_{j+1}.

use crate::algebra::Algebra;
use crate::modcat::{self, UniserialModule};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSystem {
    deltas: Vec<UniserialModule>,
    delta_kupisch: Vec<usize>,
}

impl DeltaSystem {
    pub fn new(a: &Algebra) -> Self {
        let socles = a.socle_set();
        let tops = a.top_set();
        let deltas: Vec<UniserialModule> = tops
            .iter()
            .map(|&t| {
                let len = (0..a.n())
                    .find(|&k| socles.contains(&a.shift(t, k)))
                    .expect("every algebra has at least one relation")
                    + 1;
                modcat::module(a, t, len).expect("Δ fits inside the projective at its top")
            })
            .collect();
        let mut ds = DeltaSystem {
            deltas,
            delta_kupisch: Vec::new(),
        };
        ds.delta_kupisch = ds
            .deltas
            .iter()
            .map(|d| {
                ds.decompose(modcat::projective(a, d.top()))
                    .expect("projectives with top in S' are Δ-filtered")
                    .len()
            })
            .collect();
        ds
    }

    pub fn r(&self) -> usize {
        self.deltas.len()
    }

    pub fn deltas(&self) -> &[UniserialModule] {
        &self.deltas
    }

    /// Δ_j, 1-based.
    pub fn delta(&self, j: usize) -> UniserialModule {
        self.deltas[j - 1]
    }

    /// `d_j`: Δ-length of the projective whose Δ-top is Δ_j.
    pub fn delta_kupisch(&self) -> &[usize] {
        &self.delta_kupisch
    }

    pub fn index_of_top(&self, top: usize) -> Option<usize> {
        self.deltas
            .iter()
            .position(|d| d.top() == top)
            .map(|j| j + 1)
    }

    pub fn index_of(&self, m: UniserialModule) -> Option<usize> {
        self.deltas.iter().position(|&d| d == m).map(|j| j + 1)
    }

    /// Δ-indices from top to socle whose stacking is `m`, or `None` when `m`
    /// has no Δ-filtration.
    pub fn decompose(&self, m: UniserialModule) -> Option<Vec<usize>> {
        let mut j = self.index_of_top(m.top())?;
        let mut remaining = m.length();
        let mut out = Vec::new();
        while remaining > 0 {
            let len = self.delta(j).length();
            if len > remaining {
                return None;
            }
            out.push(j);
            remaining -= len;
            j = j % self.r() + 1;
        }
        Some(out)
    }

    pub fn is_delta_module(&self, m: UniserialModule) -> bool {
        self.decompose(m).is_some()
    }
}

pub fn delta_system(a: &Algebra) -> DeltaSystem {
    DeltaSystem::new(a)
}

pub fn delta_decompose(a: &Algebra, m: UniserialModule) -> Option<Vec<usize>> {
    DeltaSystem::new(a).decompose(m)
}

/// `(vertex, Δ-length)` for each Δ-projective, ordered by Δ-top index.
pub fn delta_projectives(a: &Algebra) -> Vec<(usize, usize)> {
    let ds = DeltaSystem::new(a);
    ds.deltas()
        .iter()
        .zip(ds.delta_kupisch())
        .map(|(d, &len)| (d.top(), len))
        .collect()
}

pub fn delta_contains_projective(a: &Algebra) -> bool {
    DeltaSystem::new(a)
        .deltas()
        .iter()
        .any(|d| d.is_projective(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modcat::module;

    fn e5() -> Algebra {
        Algebra::from_kupisch(&[3, 5, 4, 5, 4]).unwrap()
    }

    fn e8() -> Algebra {
        Algebra::from_kupisch(&[11, 13, 12, 11, 12, 13, 12, 12]).unwrap()
    }

    #[test]
    fn e5_system() {
        let a = e5();
        let ds = delta_system(&a);
        assert_eq!(
            ds.deltas(),
            &[module(&a, 2, 2).unwrap(), module(&a, 4, 3).unwrap()]
        );
        assert_eq!(ds.delta_kupisch(), &[2, 2]);
        assert_eq!(delta_projectives(&a), vec![(2, 2), (4, 2)]);
        assert!(!delta_contains_projective(&a));
    }

    #[test]
    fn e8_system() {
        let a = e8();
        let ds = delta_system(&a);
        let got: Vec<_> = ds.deltas().iter().map(|d| (d.top(), d.length())).collect();
        assert_eq!(got, vec![(1, 2), (3, 1), (4, 3), (7, 2)]);
        assert_eq!(ds.delta_kupisch(), &[6, 6, 5, 6]);
        assert_eq!(delta_projectives(&a), vec![(1, 6), (3, 6), (4, 5), (7, 6)]);
        // P_1 = |Δ1;Δ2;Δ3;Δ4;Δ1;Δ2|
        assert_eq!(
            ds.decompose(modcat::projective(&a, 1)),
            Some(vec![1, 2, 3, 4, 1, 2])
        );
    }

    #[test]
    fn self_injective_system() {
        let a = Algebra::from_kupisch(&[4, 4, 4]).unwrap();
        let ds = delta_system(&a);
        assert_eq!(ds.r(), 3);
        assert!(ds.deltas().iter().all(|d| d.length() == 1));
        assert_eq!(ds.delta_kupisch(), &[4, 4, 4]);

        let b = Algebra::from_kupisch(&[2, 2, 2]).unwrap();
        assert!(!delta_contains_projective(&b));
    }

    #[test]
    fn decomposition() {
        let a = e5();
        assert_eq!(
            delta_decompose(&a, module(&a, 2, 2).unwrap()),
            Some(vec![1])
        );
        assert_eq!(
            delta_decompose(&a, module(&a, 2, 5).unwrap()),
            Some(vec![1, 2])
        );
        assert_eq!(delta_decompose(&a, module(&a, 1, 2).unwrap()), None);
        // top in S' but socle not in S
        assert_eq!(delta_decompose(&a, module(&a, 2, 1).unwrap()), None);
    }

    #[test]
    fn projective_delta_implies_detectable() {
        // relation from 1 of two arrows on three vertices: Δ = [S3;S1;S2] = P_3
        let a = Algebra::from_kupisch(&[2, 4, 3]).unwrap();
        assert!(delta_contains_projective(&a));
    }
}
