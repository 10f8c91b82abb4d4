//! Exhaustive partition generation.
//!
//! [`partitions`] walks every partition of `n` in reverse lexicographic order
//! (largest part decreasing). [`Restriction`] describes the sets this crate
//! cares about, namely conjunctions of "m-regular" and "m-distinct", and
//! [`restricted_partitions`] generates such a set directly without filtering.

use crate::error::{check_modulus, Error, Result};
use crate::partition::Partition;

/// Default ceiling on `n` for exhaustive generation. p(80) is about 1.6e7.
pub const DEFAULT_BOUND: u64 = 80;

/// Iterator over all partitions of `n`.
#[derive(Debug, Clone)]
pub struct Partitions {
    parts: Vec<u64>,
    started: bool,
    done: bool,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(Partition::from_parts(self.parts.iter().copied()).expect("weight fits"))
    }
}

impl Partitions {
    fn advance(&mut self) -> bool {
        let mut rem = 0;
        while self.parts.last() == Some(&1) {
            self.parts.pop();
            rem += 1;
        }
        let Some(last) = self.parts.pop() else {
            return false;
        };
        let x = last - 1;
        rem += 1;
        self.parts.push(x);
        while rem > x {
            self.parts.push(x);
            rem -= x;
        }
        if rem > 0 {
            self.parts.push(rem);
        }
        true
    }
}

/// All partitions of `n`, refusing `n` above [`DEFAULT_BOUND`].
pub fn partitions(n: u64) -> Result<Partitions> {
    partitions_with_bound(n, DEFAULT_BOUND)
}

pub fn partitions_with_bound(n: u64, bound: u64) -> Result<Partitions> {
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let parts = if n == 0 { Vec::new() } else { vec![n] };
    Ok(Partitions {
        parts,
        started: false,
        done: false,
    })
}

/// A set of partitions defined by per-size multiplicity caps: no part
/// divisible by any of `regular`, and each size appearing fewer than
/// `min(distinct)` times.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Restriction {
    regular: Vec<u64>,
    distinct: Vec<u64>,
}

impl Restriction {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn regular(mut self, m: u64) -> Result<Self> {
        check_modulus(m)?;
        self.regular.push(m);
        Ok(self)
    }

    pub fn distinct(mut self, m: u64) -> Result<Self> {
        check_modulus(m)?;
        self.distinct.push(m);
        Ok(self)
    }

    /// s-regular and t-distinct.
    pub fn regular_distinct(s: u64, t: u64) -> Result<Self> {
        Self::new().regular(s)?.distinct(t)
    }

    /// Largest allowed frequency of `size`, or `None` if unbounded.
    pub fn max_frequency(&self, size: u64) -> Option<u64> {
        if self.regular.iter().any(|&m| size.is_multiple_of(m)) {
            return Some(0);
        }
        self.distinct.iter().min().map(|&m| m - 1)
    }

    /// Membership test.
    pub fn admits(&self, p: &Partition) -> bool {
        self.regular
            .iter()
            .all(|&m| p.is_regular(m).expect("validated modulus"))
            && self
                .distinct
                .iter()
                .all(|&m| p.is_distinct(m).expect("validated modulus"))
    }
}

/// Calls `visit` on every partition of `n` admitted by `restriction`, in
/// reverse lexicographic order.
pub fn visit_restricted<F>(
    n: u64,
    bound: u64,
    restriction: &Restriction,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&Partition),
{
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let mut stack = Vec::new();
    descend(n, n, restriction, &mut stack, &mut visit);
    Ok(())
}

fn descend<F>(rem: u64, max_size: u64, r: &Restriction, stack: &mut Vec<(u64, u64)>, visit: &mut F)
where
    F: FnMut(&Partition),
{
    if rem == 0 {
        let p = Partition::from_pairs(stack.iter().copied()).expect("canonical by construction");
        visit(&p);
        return;
    }
    for size in (1..=max_size.min(rem)).rev() {
        let cap = r.max_frequency(size).unwrap_or(u64::MAX).min(rem / size);
        for freq in (1..=cap).rev() {
            stack.push((size, freq));
            descend(rem - size * freq, size - 1, r, stack, visit);
            stack.pop();
        }
    }
}

/// Every partition of `n` admitted by `restriction`.
pub fn restricted_partitions(n: u64, restriction: &Restriction) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    visit_restricted(n, DEFAULT_BOUND, restriction, |p| out.push(p.clone()))?;
    Ok(out)
}

/// Number of partitions of `n` admitted by `restriction`, by exhaustive generation.
pub fn count_restricted(n: u64, restriction: &Restriction) -> Result<u64> {
    let mut count = 0;
    visit_restricted(n, DEFAULT_BOUND, restriction, |_| count += 1)?;
    Ok(count)
}
