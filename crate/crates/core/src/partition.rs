//! Integer partitions: the index set for Schur polynomials and tableau shapes.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A weakly decreasing sequence of positive integers.
///
/// The empty sequence is the zero partition. Trailing zeros are never
/// stored, so two partitions compare equal iff they have the same parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from a weakly decreasing sequence. Trailing zeros
    /// are dropped; any other zero or an increase is rejected.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, Error> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |λ|
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// ℓ(λ)
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The parts zero-padded to length `d`. Panics if `ℓ(λ) > d`.
    pub fn padded(&self, d: usize) -> Vec<u32> {
        assert!(self.len() <= d, "partition {self} has more than {d} parts");
        let mut v = self.parts.clone();
        v.resize(d, 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (0..width)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Cell-wise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Every partition obtained by adding one box, keeping at most
    /// `max_parts` rows and at most `max_width` columns (`None` = unbounded).
    /// Returned from the top row down.
    pub fn add_box_shapes(&self, max_parts: usize, max_width: Option<u32>) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            if i >= max_parts {
                break;
            }
            let cur = self.part(i);
            if max_width.is_some_and(|w| cur + 1 > w) {
                continue;
            }
            if i == 0 || self.part(i - 1) > cur {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }
}

/// Reverse-lexicographic: larger first parts come first, so `(3) < (2,1)`
/// in this order. Weight is compared before anything else.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"(3,1)"`, `"()"`, and tolerates whitespace. Parentheses are
    /// optional so that `3,1` also parses.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::MalformedPartition(s.to_string());
        let t = s.trim();
        let inner = match (t.strip_prefix('('), t.ends_with(')')) {
            (Some(rest), true) => &rest[..rest.len() - 1],
            (None, false) => t,
            _ => return Err(bad()),
        };
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts).map_err(|_| bad())
    }
}

/// All partitions of `weight` with at most `max_parts` parts, in
/// reverse-lexicographic order: `(4), (3,1), (2,2), ...`.
pub fn enumerate_partitions(weight: u32, max_parts: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(weight, weight, max_parts, &mut cur, &mut out);
    out
}

fn fill(remaining: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=cap.min(remaining)).rev() {
        // the remaining slots must be able to absorb what is left
        if (p as u64) * (slots as u64) < remaining as u64 {
            break;
        }
        cur.push(p);
        fill(remaining - p, p, slots - 1, cur, out);
        cur.pop();
    }
}

/// The `height × width` rectangle `(width, ..., width)`.
pub fn rectangle(height: usize, width: u32) -> Partition {
    if width == 0 {
        return Partition::empty();
    }
    Partition {
        parts: vec![width; height],
    }
}

/// `λ + (w^d)`: pads λ to `d` rows and adds `w` to every row.
pub fn add_rectangle(lambda: &Partition, d: usize, w: u32) -> Result<Partition, Error> {
    if lambda.len() > d {
        return Err(Error::TooManyParts {
            partition: lambda.clone(),
            max: d,
        });
    }
    Partition::new(
        lambda
            .padded(d)
            .into_iter()
            .map(|p| p + w)
            .collect::<Vec<_>>(),
    )
}

/// Hook length of every cell, row by row.
pub fn hook_lengths(lambda: &Partition) -> Vec<u32> {
    let conj = lambda.conjugate();
    let mut hooks = Vec::with_capacity(lambda.weight() as usize);
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = row - j as u32 - 1;
            let leg = conj.part(j) - i as u32 - 1;
            hooks.push(arm + leg + 1);
        }
    }
    hooks
}
