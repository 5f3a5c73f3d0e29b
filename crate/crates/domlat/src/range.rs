use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

/// A single `n` or an inclusive range `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub start: u32,
    pub end: u32,
}

impl NRange {
    pub fn single(n: u32) -> Self {
        Self { start: n, end: n }
    }

    pub fn is_single(&self) -> bool {
        self.start == self.end
    }

    pub fn iter(&self) -> RangeInclusive<u32> {
        self.start..=self.end
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("invalid n `{t}`"));
        match s.split_once("..") {
            None => Ok(Self::single(num(s)?)),
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                let (start, end) = (num(a)?, num(b)?);
                if start > end {
                    return Err(format!("empty range `{s}`"));
                }
                Ok(Self { start, end })
            }
        }
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_single() {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}..{}", self.start, self.end)
        }
    }
}
