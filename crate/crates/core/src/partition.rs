//! Integer partitions in compact form, conjugation and the dominance order.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

/// A partition of `n`: a non-increasing sequence of positive parts.
///
/// Trailing zeros are never stored, so the empty sequence is the unique
/// partition of 0. The `Ord` impl is *descending* lexicographic, which is
/// the canonical display order used throughout (`7, 61, 511, 43, ...`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
}

impl Partition {
    /// Builds a partition from an arbitrary sequence, stripping trailing zeros.
    pub fn new<I: IntoIterator<Item = u32>>(parts: I) -> Result<Self, Error> {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::ZeroBeforePositive);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotNonIncreasing);
        }
        let n = parts.iter().try_fold(0u32, |acc, &p| acc.checked_add(p));
        let n = n.ok_or(Error::Overflow)?;
        Ok(Self { parts, n })
    }

    /// Internal constructor for sequences already known to be canonical.
    pub(crate) fn from_canonical(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p > 0));
        let n = parts.iter().sum();
        Self { parts, n }
    }

    /// `(value, count)` runs, e.g. `(3,3,1)` is `[(3,2),(1,1)]`.
    pub(crate) fn from_runs(runs: &[(u32, u32)]) -> Self {
        let mut parts = Vec::new();
        for &(value, count) in runs {
            if value > 0 {
                parts.extend(core::iter::repeat_n(value, count as usize));
            }
        }
        Self::from_canonical(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Part `i` (1-based), with absent parts read as 0.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// First (largest) part; 0 for the empty partition.
    pub fn height(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Number of positive parts.
    pub fn length(&self) -> u32 {
        self.parts.len() as u32
    }

    /// The conjugate partition: part `i` counts the parts that are `>= i`.
    pub fn conjugate(&self) -> Self {
        let mut out = Vec::with_capacity(self.height() as usize);
        let mut len = self.parts.len();
        for i in 1..=self.height() {
            while len > 0 && self.parts[len - 1] < i {
                len -= 1;
            }
            out.push(len as u32);
        }
        Self { parts: out, n: self.n }
    }

    /// Partial sums `p_1, p_1 + p_2, ...` up to index `upto`, padding with zeros.
    pub fn prefix_sums(&self, upto: usize) -> Vec<u32> {
        let mut acc = 0;
        (1..=upto)
            .map(|i| {
                acc += self.part(i);
                acc
            })
            .collect()
    }

    /// Dominance order `self <= other`. Fails for partitions of different integers.
    pub fn dominance_leq(&self, other: &Self) -> Result<bool, Error> {
        if self.n != other.n {
            return Err(Error::MismatchedN { left: self.n, right: other.n });
        }
        Ok(self.dominated_by(other))
    }

    /// Dominance comparison without the `n` check; callers guarantee equal `n`.
    #[inline]
    pub(crate) fn dominated_by(&self, other: &Self) -> bool {
        let (mut sa, mut sb) = (0u32, 0u32);
        // Past the end of `self` its prefix sum is `n`, which bounds every sum of `other`.
        for (i, &a) in self.parts.iter().enumerate() {
            sa += a;
            sb += other.parts.get(i).copied().unwrap_or(0);
            if sa > sb {
                return false;
            }
        }
        true
    }

    /// Lower covers in the dominance lattice via the two transition rules:
    /// a brick falls from a cliff, or slips across a slippery step.
    pub fn lower_covers(&self) -> Vec<Self> {
        let mut a = self.parts.clone();
        a.push(0);
        let len = a.len();
        let mut out = Vec::new();
        for j in 0..len - 1 {
            if a[j] >= a[j + 1] + 2 {
                let mut b = a.clone();
                b[j] -= 1;
                b[j + 1] += 1;
                out.push(Self::trimmed(b, self.n));
            } else if a[j + 1] >= 1 && a[j] == a[j + 1] + 1 {
                // Run of value a[j]-1 starting at j+1; the step needs at least two
                // positions before the value drops by exactly one more.
                let k = a[j + 1];
                let mut end = j + 1;
                while end < len && a[end] == k {
                    end += 1;
                }
                if end - j >= 2 && end < len && a[end] + 1 == k {
                    let mut b = a.clone();
                    b[j] -= 1;
                    b[end] += 1;
                    out.push(Self::trimmed(b, self.n));
                }
            }
        }
        out.sort();
        out
    }

    /// Upper covers, obtained by conjugating the lower covers of the conjugate.
    pub fn upper_covers(&self) -> Vec<Self> {
        let mut out: Vec<Self> = self.conjugate().lower_covers().iter().map(Self::conjugate).collect();
        out.sort();
        out
    }

    /// Meet: pointwise minimum of prefix sums.
    pub fn meet(&self, other: &Self) -> Result<Self, Error> {
        if self.n != other.n {
            return Err(Error::MismatchedN { left: self.n, right: other.n });
        }
        let upto = self.parts.len().max(other.parts.len());
        let sa = self.prefix_sums(upto);
        let sb = other.prefix_sums(upto);
        let mut prev = 0;
        let mut parts = Vec::with_capacity(upto);
        for (x, y) in sa.into_iter().zip(sb) {
            let m = x.min(y);
            parts.push(m - prev);
            prev = m;
        }
        Ok(Self::trimmed(parts, self.n))
    }

    /// Join: the conjugate of the meet of the conjugates.
    pub fn join(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.conjugate().meet(&other.conjugate())?.conjugate())
    }

    fn trimmed(mut parts: Vec<u32>, n: u32) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts, n }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical rendering: parts joined by commas, `0` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse);
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }
}
