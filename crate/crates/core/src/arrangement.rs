//! Permutations written as ordered products of disjoint cycles.
//!
//! A row determinant `rdet_i` visits each permutation through its canonical
//! cycle arrangement: the cycle through the pivot `i` comes first and starts at
//! `i`; every other cycle starts at its smallest element; those cycles follow in
//! ascending order of their leading element. Column determinants use the same
//! arrangement read from right to left.

use alloc::vec;
use alloc::vec::Vec;

use crate::config::LeaderOrder;
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::quat::Quaternion;
use crate::sum::QuatSum;

/// A permutation of `0..n` as an ordered list of disjoint cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleArrangement {
    cycles: Vec<Vec<usize>>,
    len: usize,
}

impl CycleArrangement {
    /// Canonical arrangement of `perm` (where `perm[c]` is the image of `c`)
    /// with respect to `pivot`.
    pub fn from_permutation(perm: &[usize], pivot: usize) -> Result<Self> {
        let n = perm.len();
        if pivot >= n {
            return Err(Error::IndexOutOfRange {
                index: pivot,
                size: n,
            });
        }
        let mut hit = vec![false; n];
        for &p in perm {
            if p >= n || hit[p] {
                return Err(Error::DimensionMismatch("not a permutation".into()));
            }
            hit[p] = true;
        }
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        let trace = |start: usize, seen: &mut [bool]| {
            let mut cyc = Vec::new();
            let mut c = start;
            loop {
                seen[c] = true;
                cyc.push(c);
                c = perm[c];
                if c == start {
                    break;
                }
            }
            cyc
        };
        cycles.push(trace(pivot, &mut seen));
        for v in 0..n {
            if !seen[v] {
                cycles.push(trace(v, &mut seen));
            }
        }
        Ok(Self { cycles, len: n })
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// `(-1)^(n - r)` for `r` cycles.
    pub fn sign(&self) -> f64 {
        if (self.len - self.cycles.len()).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }

    pub fn to_permutation(&self) -> Vec<usize> {
        let mut perm = vec![0; self.len];
        for cyc in &self.cycles {
            for (t, &c) in cyc.iter().enumerate() {
                perm[c] = cyc[(t + 1) % cyc.len()];
            }
        }
        perm
    }

    /// Unsigned row-determinant product: cycles left to right, each cycle
    /// `(c1 c2 … cl)` contributing `a[c1][c2] a[c2][c3] ⋯ a[cl][c1]`.
    pub fn row_product(&self, a: &QMatrix) -> Quaternion {
        let mut prod = Quaternion::ONE;
        for cyc in &self.cycles {
            for (t, &c) in cyc.iter().enumerate() {
                prod *= a[(c, cyc[(t + 1) % cyc.len()])];
            }
        }
        prod
    }

    /// Unsigned column-determinant product: the pivot cycle is rightmost,
    /// cycles with larger leaders further left, and each cycle
    /// `(c1 c2 … cl)` contributes `a[c1][cl] a[cl][c(l-1)] ⋯ a[c2][c1]`.
    pub fn column_product(&self, a: &QMatrix) -> Quaternion {
        let mut prod = Quaternion::ONE;
        for cyc in self.cycles.iter().rev() {
            let l = cyc.len();
            for t in (0..l).rev() {
                let col = cyc[t];
                let row = cyc[(t + 1) % l];
                prod *= a[(row, col)];
            }
        }
        prod
    }
}

/// Permutations of `0..n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Permutations {
    current: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Self {
            current: Some((0..n).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut p = out.clone();
        let n = p.len();
        if n >= 2 {
            let mut i = n - 1;
            while i > 0 && p[i - 1] >= p[i] {
                i -= 1;
            }
            if i > 0 {
                let mut j = n - 1;
                while p[j] <= p[i - 1] {
                    j -= 1;
                }
                p.swap(i - 1, j);
                p[i..].reverse();
                self.current = Some(p);
            }
        }
        Some(out)
    }
}

/// Every canonical arrangement of size `n` with the given pivot, one per
/// permutation, in lexicographic permutation order.
pub fn arrangements(n: usize, pivot: usize) -> impl Iterator<Item = CycleArrangement> {
    Permutations::new(n)
        .map(move |p| CycleArrangement::from_permutation(&p, pivot).expect("valid permutation"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Reading {
    Row,
    Column,
}

/// Signed sum over all permutations, skipping those that hit an exact zero.
///
/// Terms are accumulated in lexicographic permutation order with compensated
/// summation. The caller validates `pivot < n`.
pub(crate) fn signed_sum(
    a: &QMatrix,
    pivot: usize,
    reading: Reading,
    order: LeaderOrder,
) -> Quaternion {
    let n = a.rows();
    let mut walk = Walk {
        a,
        n,
        pivot,
        reading,
        order,
        perm: vec![0; n],
        inv: vec![0; n],
        used: vec![false; n],
        seen: vec![false; n],
        leaders: Vec::with_capacity(n),
        sum: QuatSum::new(),
    };
    walk.descend(0);
    walk.sum.value()
}

struct Walk<'a> {
    a: &'a QMatrix,
    n: usize,
    pivot: usize,
    reading: Reading,
    order: LeaderOrder,
    perm: Vec<usize>,
    inv: Vec<usize>,
    used: Vec<bool>,
    seen: Vec<bool>,
    leaders: Vec<usize>,
    sum: QuatSum,
}

impl Walk<'_> {
    fn descend(&mut self, k: usize) {
        if k == self.n {
            self.emit();
            return;
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            // rdet uses a[k][σ(k)], cdet uses a[σ(k)][k]
            let entry = match self.reading {
                Reading::Row => self.a[(k, v)],
                Reading::Column => self.a[(v, k)],
            };
            if entry.is_zero() {
                continue;
            }
            self.used[v] = true;
            self.perm[k] = v;
            self.inv[v] = k;
            self.descend(k + 1);
            self.used[v] = false;
        }
    }

    fn emit(&mut self) {
        self.leaders.clear();
        self.seen.iter_mut().for_each(|s| *s = false);
        self.mark(self.pivot);
        for v in 0..self.n {
            if !self.seen[v] {
                self.mark(v);
            }
        }
        let r = self.leaders.len();
        if self.order == LeaderOrder::SwappedLeaders && r >= 3 {
            self.leaders.swap(1, 2);
        }
        let mut prod = Quaternion::ONE;
        match self.reading {
            Reading::Row => {
                for &lead in &self.leaders {
                    let mut c = lead;
                    loop {
                        let next = self.perm[c];
                        prod *= self.a[(c, next)];
                        c = next;
                        if c == lead {
                            break;
                        }
                    }
                }
            }
            Reading::Column => {
                for &lead in self.leaders.iter().rev() {
                    let mut c = lead;
                    loop {
                        let prev = self.inv[c];
                        prod *= self.a[(c, prev)];
                        c = prev;
                        if c == lead {
                            break;
                        }
                    }
                }
            }
        }
        if (self.n - r) % 2 == 1 {
            prod = -prod;
        }
        self.sum.add(prod);
    }

    fn mark(&mut self, start: usize) {
        self.leaders.push(start);
        let mut c = start;
        loop {
            self.seen[c] = true;
            c = self.perm[c];
            if c == start {
                break;
            }
        }
    }
}
