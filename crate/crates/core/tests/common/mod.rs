//! Reference implementations kept apart from the library.
//!
//! Modules here are explicit composition-factor sequences and the φ oracle
//! works with integer matrices, so none of it shares code paths with the
//! `(top, length)` arithmetic of the crate.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A uniserial module as its composition factors from top to socle.
pub type Factors = Vec<usize>;

pub struct Model {
    pub kupisch: Vec<usize>,
}

impl Model {
    pub fn new(kupisch: &[usize]) -> Self {
        Model {
            kupisch: kupisch.to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.kupisch.len()
    }

    fn next_vertex(&self, v: usize) -> usize {
        if v == self.n() {
            1
        } else {
            v + 1
        }
    }

    pub fn projective(&self, v: usize) -> Factors {
        let mut out = vec![v];
        while out.len() < self.kupisch[v - 1] {
            out.push(self.next_vertex(*out.last().unwrap()));
        }
        out
    }

    /// Every quotient of every projective.
    pub fn indecomposables(&self) -> Vec<Factors> {
        (1..=self.n())
            .flat_map(|v| {
                let p = self.projective(v);
                (1..=p.len()).map(move |l| p[..l].to_vec())
            })
            .collect()
    }

    pub fn is_projective(&self, m: &Factors) -> bool {
        m.len() == self.kupisch[m[0] - 1]
    }

    /// The kernel of `P(top) -> m`: the factors of the cover below `m`.
    pub fn syzygy(&self, m: &Factors) -> Option<Factors> {
        let p = self.projective(m[0]);
        assert_eq!(&p[..m.len()], &m[..], "not a quotient of its cover");
        if p.len() == m.len() {
            None
        } else {
            Some(p[m.len()..].to_vec())
        }
    }

    /// `Some(k)` when the k-th syzygy is projective, `None` if no projective
    /// appears within `bound` steps.
    pub fn pdim_bounded(&self, m: &Factors, bound: usize) -> Option<usize> {
        let mut cur = m.clone();
        for k in 0..=bound {
            if self.is_projective(&cur) {
                return Some(k);
            }
            cur = self.syzygy(&cur).expect("nonprojective");
        }
        None
    }

    /// Enough steps for any orbit to either stop or cycle.
    pub fn step_bound(&self) -> usize {
        self.indecomposables().len() + 1
    }

    pub fn pdim(&self, m: &Factors) -> Option<usize> {
        self.pdim_bounded(m, self.step_bound())
    }

    pub fn findim(&self) -> usize {
        self.indecomposables()
            .iter()
            .filter_map(|m| self.pdim(m))
            .max()
            .unwrap_or(0)
    }

    pub fn gldim(&self) -> Option<usize> {
        (1..=self.n())
            .map(|v| self.pdim(&vec![v]))
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }

    /// `Ω^k(m)` returns to `m` for some `k >= 1`.
    pub fn is_periodic(&self, m: &Factors) -> bool {
        let mut cur = m.clone();
        for _ in 0..self.step_bound() {
            match self.syzygy(&cur) {
                None => return false,
                Some(s) => cur = s,
            }
            if &cur == m {
                return true;
            }
        }
        false
    }

    pub fn nonprojectives(&self) -> Vec<Factors> {
        self.indecomposables()
            .into_iter()
            .filter(|m| !self.is_projective(m))
            .collect()
    }
}

pub fn to_pair(m: &Factors) -> (usize, usize) {
    (m[0], m.len())
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn bareiss_rank(rows: &[Vec<i128>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows.to_vec();
    let h = a.len();
    if h == 0 {
        return 0;
    }
    let w = a[0].len();
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..w {
        let Some(pivot) = (rank..h).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        for i in rank + 1..h {
            for j in col + 1..w {
                let v = a[rank][col]
                    .checked_mul(a[i][j])
                    .and_then(|x| x.checked_sub(a[i][col].checked_mul(a[rank][j])?))
                    .expect("overflow in elimination");
                a[i][j] = v / prev;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
        if rank == h {
            break;
        }
    }
    rank
}

/// The syzygy operator on the free group over nonprojective indecomposables.
pub struct RankOracle {
    pub basis: Vec<Factors>,
    index: BTreeMap<Factors, usize>,
    /// `image[x] = Some(y)` when `Ω(basis[x]) = basis[y]`.
    image: Vec<Option<usize>>,
    /// Exponent after which `rank L^t` is constant.
    pub fitting: usize,
}

impl RankOracle {
    pub fn new(model: &Model) -> Self {
        let basis = model.nonprojectives();
        let index: BTreeMap<Factors, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let image: Vec<Option<usize>> = basis
            .iter()
            .map(|m| {
                model
                    .syzygy(m)
                    .filter(|s| !model.is_projective(s))
                    .map(|s| index[&s])
            })
            .collect();
        let mut oracle = RankOracle {
            basis,
            index,
            image,
            fitting: 0,
        };
        let n = oracle.basis.len();
        let identity: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
            .collect();
        let mut cur = identity;
        let mut rank = bareiss_rank(&cur);
        loop {
            let next = oracle.apply(&cur);
            let r = bareiss_rank(&next);
            if r == rank {
                break;
            }
            rank = r;
            cur = next;
            oracle.fitting += 1;
        }
        oracle
    }

    /// Right multiplication of row vectors by `L`.
    pub fn apply(&self, rows: &[Vec<i128>]) -> Vec<Vec<i128>> {
        rows.iter()
            .map(|row| {
                let mut out = vec![0i128; self.basis.len()];
                for (x, &v) in row.iter().enumerate() {
                    if let Some(y) = self.image[x] {
                        out[y] += v;
                    }
                }
                out
            })
            .collect()
    }

    /// Generators of `<add M>`: running sums of the unit vectors of the
    /// nonprojective summands, which span the same lattice.
    pub fn generators(&self, summands: &[(usize, usize)], model: &Model) -> Vec<Vec<i128>> {
        let mut acc = vec![0i128; self.basis.len()];
        let mut rows = Vec::new();
        for &(t, l) in summands {
            let m = model.projective(t)[..l].to_vec();
            if let Some(&i) = self.index.get(&m) {
                acc[i] += 1;
                rows.push(acc.clone());
            }
        }
        rows
    }

    /// `rank L^t <add M>` for `t = 0..=fitting + 1`, and φ.
    pub fn phi(&self, summands: &[(usize, usize)], model: &Model) -> (usize, Vec<usize>) {
        let mut rows = self.generators(summands, model);
        let mut ranks = Vec::new();
        for _ in 0..=self.fitting + 1 {
            ranks.push(bareiss_rank(&rows));
            rows = self.apply(&rows);
        }
        let stable = *ranks.last().unwrap();
        let phi = ranks.iter().position(|&r| r == stable).unwrap();
        (phi, ranks)
    }
}

/// All tuples in `[2, max]^n` that satisfy the cyclic condition, in
/// lexicographic order.
pub fn brute_force_series(n: usize, max: usize) -> Vec<Vec<usize>> {
    let span = max - 1;
    let total = span.pow(n as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = vec![0; n];
        let mut x = code;
        for i in (0..n).rev() {
            c[i] = 2 + x % span;
            x /= span;
        }
        if (0..n).all(|i| c[(i + 1) % n] + 1 >= c[i]) {
            out.push(c);
        }
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random valid series with `3 <= n <= max_n` and `2 <= c_i <= max_c`.
pub fn random_series(rng: &mut impl Rng, max_n: usize, max_c: usize) -> Vec<usize> {
    loop {
        let n = rng.gen_range(3..=max_n);
        let mut c = vec![rng.gen_range(2..=max_c)];
        for _ in 1..n {
            let lo = c.last().unwrap().saturating_sub(1).max(2);
            c.push(rng.gen_range(lo..=max_c));
        }
        if c[0] + 1 >= c[n - 1] {
            return c;
        }
    }
}

/// A random multiset of `(top, length)` summands.
pub fn random_summands(rng: &mut impl Rng, kupisch: &[usize], max: usize) -> Vec<(usize, usize)> {
    let k = rng.gen_range(1..=max);
    (0..k)
        .map(|_| {
            let t = rng.gen_range(1..=kupisch.len());
            (t, rng.gen_range(1..=kupisch[t - 1]))
        })
        .collect()
}

pub fn pair_set(ms: impl IntoIterator<Item = (usize, usize)>) -> BTreeSet<(usize, usize)> {
    ms.into_iter().collect()
}
