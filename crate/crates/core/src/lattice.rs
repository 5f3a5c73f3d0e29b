//! The lattice `L_n` of partitions of `n` under dominance.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::partition::Partition;

/// Default upper bound for [`enumerate_partitions`].
pub const DEFAULT_ENUMERATION_CAP: u32 = 60;
/// Default upper bound for building a full [`PartitionLattice`].
pub const DEFAULT_LATTICE_CAP: u32 = 15;

/// All partitions of `n` in descending lexicographic order.
pub fn enumerate_partitions(n: u32, cap: u32) -> Result<Vec<Partition>, Error> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_canonical(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// Number of partitions of `n` by Euler's pentagonal-number recurrence.
pub fn partition_count(n: u32) -> u64 {
    let n = n as usize;
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i64;
        for k in 1.. {
            let k = k as usize;
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[m - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                total += sign * p[m - g2];
            }
        }
        p[m] = total;
    }
    p[n] as u64
}

/// `L_n` with explicit cover adjacency, indexed by position in the
/// descending lexicographic element list.
#[derive(Debug, Clone)]
pub struct PartitionLattice {
    n: u32,
    elements: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
}

impl PartitionLattice {
    pub fn new(n: u32, cap: u32) -> Result<Self, Error> {
        let elements = enumerate_partitions(n, cap)?;
        let index: BTreeMap<Partition, usize> =
            elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut lower = vec![Vec::new(); elements.len()];
        let mut upper = vec![Vec::new(); elements.len()];
        for (i, p) in elements.iter().enumerate() {
            for q in p.lower_covers() {
                let j = index[&q];
                lower[i].push(j);
                upper[j].push(i);
            }
        }
        for adj in upper.iter_mut() {
            adj.sort_unstable();
        }
        Ok(Self { n, elements, index, lower, upper })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn elements(&self) -> &[Partition] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Indices of the lower covers of element `i`.
    pub fn lower_covers_of(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn upper_covers_of(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    /// Cover pairs `(upper, lower)` in index order.
    pub fn cover_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.lower.iter().enumerate().flat_map(|(i, adj)| adj.iter().map(move |&j| (i, j)))
    }

    pub fn top(&self) -> &Partition {
        &self.elements[0]
    }

    pub fn bottom(&self) -> &Partition {
        &self.elements[self.elements.len() - 1]
    }

    pub fn is_join_irreducible(&self, i: usize) -> bool {
        self.lower[i].len() == 1
    }

    pub fn is_meet_irreducible(&self, i: usize) -> bool {
        self.upper[i].len() == 1
    }
}

/// Largest partition with at least `min_len` parts: `(n-(l-1), 1, ..., 1)`.
pub fn largest_with_min_length(n: u32, min_len: u32) -> Partition {
    assert!(min_len >= 1 && min_len <= n);
    Partition::from_runs(&[(n - (min_len - 1), 1), (1, min_len - 1)])
}

/// Largest partition with height at most `h`: `(h, ..., h, r)` with `n = wh + r`.
pub fn largest_with_max_height(n: u32, h: u32) -> Partition {
    assert!(h >= 1 && h <= n);
    Partition::from_runs(&[(h, n / h), (n % h, 1)])
}

/// Least partition with at most `w` parts: `(k+1, ..., k+1, k, ..., k)` with `n = kw + b`.
pub fn least_with_max_length(n: u32, w: u32) -> Partition {
    assert!(w >= 1 && w <= n);
    let (k, b) = (n / w, n % w);
    Partition::from_runs(&[(k + 1, b), (k, w - b)])
}
