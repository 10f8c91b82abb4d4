//! Canonical sparse partitions.
//!
//! A [`Partition`] is stored as `(size, frequency)` pairs with sizes strictly
//! decreasing and every frequency positive, so two equal multisets always
//! have the same representation. This makes `Eq`/`Hash` structural, which the
//! orbit code relies on for cycle detection.
//!
//! Text form: `"25,18^2,9,5^3,3,2^2"`, parts in strictly decreasing size
//! order, each `SIZE` or `SIZE^FREQ`; the empty string is the empty partition.
//! JSON form: `{"parts":[[25,1],[18,2],...]}` with the same ordering rule.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_modulus, Error, Result};

/// A finite multiset of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition", into = "RawPartition")]
pub struct Partition {
    parts: Vec<(u64, u64)>,
}

#[derive(Serialize, Deserialize)]
struct RawPartition {
    parts: Vec<(u64, u64)>,
}

impl TryFrom<RawPartition> for Partition {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        Partition::from_pairs(raw.parts)
    }
}

impl From<Partition> for RawPartition {
    fn from(p: Partition) -> Self {
        RawPartition { parts: p.parts }
    }
}

impl Partition {
    /// The unique partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from `(size, frequency)` pairs given in strictly
    /// decreasing size order, the canonical form used by the text and JSON
    /// codecs.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut parts = Vec::new();
        let mut weight: u64 = 0;
        for (size, freq) in pairs {
            if size == 0 {
                return Err(Error::Parse("part sizes must be positive".into()));
            }
            if freq == 0 {
                return Err(Error::Parse(format!("part {size} has zero frequency")));
            }
            if let Some(&(prev, _)) = parts.last() {
                if size == prev {
                    return Err(Error::Parse(format!("part size {size} is repeated")));
                }
                if size > prev {
                    return Err(Error::Parse(format!(
                        "part sizes must be strictly decreasing, found {size} after {prev}"
                    )));
                }
            }
            weight = size
                .checked_mul(freq)
                .and_then(|w| w.checked_add(weight))
                .ok_or(Error::Overflow)?;
            parts.push((size, freq));
        }
        Ok(Self { parts })
    }

    /// Builds a partition from a flat list of parts in any order.
    pub fn from_parts<I>(parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = u64>,
    {
        let mut acc = BTreeMap::new();
        for part in parts {
            if part == 0 {
                return Err(Error::Parse("part sizes must be positive".into()));
            }
            *acc.entry(part).or_insert(0u64) += 1;
        }
        Self::try_from_map(acc)
    }

    /// Builds a partition from a size → frequency map; zero frequencies are dropped.
    pub fn try_from_map(map: BTreeMap<u64, u64>) -> Result<Self> {
        Self::from_pairs(map.into_iter().rev().filter(|&(_, f)| f > 0))
    }

    /// Internal constructor for maps whose weight is already known to fit.
    pub(crate) fn from_map(map: BTreeMap<u64, u64>) -> Self {
        let parts = map.into_iter().rev().filter(|&(_, f)| f > 0).collect();
        Self { parts }
    }

    /// `(size, frequency)` pairs, sizes strictly decreasing.
    pub fn parts(&self) -> &[(u64, u64)] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Frequency of `size`, zero if absent.
    pub fn frequency(&self, size: u64) -> u64 {
        self.parts
            .binary_search_by(|&(s, _)| size.cmp(&s))
            .map(|i| self.parts[i].1)
            .unwrap_or(0)
    }

    /// The integer being partitioned.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&(s, f)| s * f).sum()
    }

    /// Number of parts counted with multiplicity.
    pub fn num_parts(&self) -> u64 {
        self.parts.iter().map(|&(_, f)| f).sum()
    }

    /// Largest part, if any.
    pub fn largest(&self) -> Option<u64> {
        self.parts.first().map(|&(s, _)| s)
    }

    /// Parts as a nonincreasing flat list.
    pub fn to_flat(&self) -> Vec<u64> {
        self.parts
            .iter()
            .flat_map(|&(s, f)| std::iter::repeat_n(s, f as usize))
            .collect()
    }

    /// True iff no part size is divisible by `m`.
    pub fn is_regular(&self, m: u64) -> Result<bool> {
        check_modulus(m)?;
        Ok(self.parts.iter().all(|&(s, _)| s % m != 0))
    }

    /// True iff every part size appears fewer than `m` times.
    pub fn is_distinct(&self, m: u64) -> Result<bool> {
        check_modulus(m)?;
        Ok(self.parts.iter().all(|&(_, f)| f < m))
    }

    /// Multiset union: frequencies are added sizewise.
    pub fn merge(&self, other: &Partition) -> Partition {
        let (a, b) = (&self.parts, &other.parts);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let ((sa, fa), (sb, fb)) = (a[i], b[j]);
            match sa.cmp(&sb) {
                std::cmp::Ordering::Greater => {
                    out.push((sa, fa));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((sb, fb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((sa, fa + fb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Partition { parts: out }
    }

    /// Splits off the `(size, frequency)` pairs whose size satisfies `pred`.
    /// Returns `(matching, rest)`.
    pub fn split_by_size<F>(&self, mut pred: F) -> (Partition, Partition)
    where
        F: FnMut(u64) -> bool,
    {
        let (yes, no): (Vec<_>, Vec<_>) = self.parts.iter().partition(|&&(s, _)| pred(s));
        (Partition { parts: yes }, Partition { parts: no })
    }

    /// Splits every frequency `f` into `f mod modulus` (first component) and
    /// the remaining multiple of `modulus` (second component).
    ///
    /// `modulus` may be 1, in which case the first component is always empty.
    pub fn split_frequency_residue(&self, modulus: u64) -> Result<(Partition, Partition)> {
        if modulus == 0 {
            return Err(Error::InvalidFactor(0));
        }
        let mut residue = Vec::new();
        let mut multiple = Vec::new();
        for &(s, f) in &self.parts {
            let r = f % modulus;
            if r > 0 {
                residue.push((s, r));
            }
            if f - r > 0 {
                multiple.push((s, f - r));
            }
        }
        Ok((Partition { parts: residue }, Partition { parts: multiple }))
    }

    /// Multiplies every size by `c`.
    pub fn scale_sizes(&self, c: u64) -> Result<Partition> {
        if c == 0 {
            return Err(Error::InvalidFactor(0));
        }
        self.weight().checked_mul(c).ok_or(Error::Overflow)?;
        Ok(Partition {
            parts: self.parts.iter().map(|&(s, f)| (s * c, f)).collect(),
        })
    }

    /// Divides every size by `c`; every size must be divisible by `c`.
    pub fn divide_sizes(&self, c: u64) -> Result<Partition> {
        if c == 0 {
            return Err(Error::InvalidFactor(0));
        }
        let parts = self
            .parts
            .iter()
            .map(|&(s, f)| {
                if s % c == 0 {
                    Ok((s / c, f))
                } else {
                    Err(Error::SizeNotDivisible {
                        size: s,
                        divisor: c,
                    })
                }
            })
            .collect::<Result<_>>()?;
        Ok(Partition { parts })
    }

    /// Multiplies every frequency by `c`.
    pub fn scale_freqs(&self, c: u64) -> Result<Partition> {
        if c == 0 {
            return Err(Error::InvalidFactor(0));
        }
        self.weight().checked_mul(c).ok_or(Error::Overflow)?;
        Ok(Partition {
            parts: self.parts.iter().map(|&(s, f)| (s, f * c)).collect(),
        })
    }

    /// Divides every frequency by `c`; every frequency must be divisible by `c`.
    pub fn divide_freqs(&self, c: u64) -> Result<Partition> {
        if c == 0 {
            return Err(Error::InvalidFactor(0));
        }
        let parts = self
            .parts
            .iter()
            .map(|&(s, f)| {
                if f % c == 0 {
                    Ok((s, f / c))
                } else {
                    Err(Error::FrequencyNotDivisible {
                        size: s,
                        frequency: f,
                        divisor: c,
                    })
                }
            })
            .collect::<Result<_>>()?;
        Ok(Partition { parts })
    }

    /// Parses the comma-separated text form. Surrounding parentheses and
    /// whitespace around tokens are tolerated.
    pub fn parse(text: &str) -> Result<Partition> {
        let mut body = text.trim();
        if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            body = inner.trim();
        }
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let pairs = body
            .split(',')
            .map(|token| {
                let token = token.trim();
                let (size, freq) = match token.split_once('^') {
                    Some((s, f)) => (s.trim(), f.trim()),
                    None => (token, "1"),
                };
                let size: u64 = size
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad part size {size:?}")))?;
                let freq: u64 = freq
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad frequency {freq:?}")))?;
                Ok((size, freq))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_pairs(pairs)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(size, freq)) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if freq == 1 {
                write!(f, "{size}")?;
            } else {
                write!(f, "{size}^{freq}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}
