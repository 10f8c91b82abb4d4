//! Part-frequency matrices and Glaisher's involution.
//!
//! For a base `m`, every part size factors uniquely as `j * m^k` with
//! `m ∤ j`. The matrix `M_j` has row `k` equal to the ascending base-`m`
//! digits of the frequency of `j * m^k`. An entry `d` at `(k, i)` stands for
//! `d * m^i` copies of `j * m^k`, so every antidiagonal `k + i` carries the
//! same weight per unit and transposing each `M_j` preserves weight.
//! Restricted to m-distinct partitions (only column 0 occupied) the
//! transpose is Glaisher's classical map onto m-regular partitions.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use crate::error::{check_modulus, Error, Result};
use crate::partition::Partition;

/// Splits `n > 0` as `(j, k)` with `n = j * m^k` and `m ∤ j`.
pub(crate) fn core_and_level(mut n: u64, m: u64) -> (u64, u64) {
    let mut k = 0;
    while n.is_multiple_of(m) {
        n /= m;
        k += 1;
    }
    (n, k)
}

/// Sparse family of base-`m` part-frequency matrices, one per core `j`
/// (`m ∤ j`). Only nonzero digits are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartFrequencyMatrices {
    base: u64,
    // core j -> (row k, column i) -> digit in 1..m
    matrices: BTreeMap<u64, BTreeMap<(u64, u64), u64>>,
}

impl PartFrequencyMatrices {
    pub fn base(&self) -> u64 {
        self.base
    }

    /// Cores with at least one nonzero entry, ascending.
    pub fn cores(&self) -> impl Iterator<Item = u64> + '_ {
        self.matrices.keys().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    /// Digit at row `k`, column `i` of `M_j` (zero when not stored).
    pub fn entry(&self, core: u64, row: u64, col: u64) -> u64 {
        self.matrices
            .get(&core)
            .and_then(|m| m.get(&(row, col)))
            .copied()
            .unwrap_or(0)
    }

    /// Dense `rows x cols` view of `M_j`, zero padded.
    pub fn dense(&self, core: u64, rows: usize, cols: usize) -> Vec<Vec<u64>> {
        (0..rows as u64)
            .map(|k| (0..cols as u64).map(|i| self.entry(core, k, i)).collect())
            .collect()
    }

    /// Transposes every matrix about its main diagonal.
    pub fn transpose(&self) -> Self {
        let matrices = self
            .matrices
            .iter()
            .map(|(&j, m)| (j, m.iter().map(|(&(k, i), &d)| ((i, k), d)).collect()))
            .collect();
        Self {
            base: self.base,
            matrices,
        }
    }

    /// Smallest `(rows, cols)` covering every stored entry of every matrix.
    pub fn extent(&self) -> (usize, usize) {
        self.matrices
            .values()
            .flat_map(|m| m.keys())
            .fold((0, 0), |(r, c), &(k, i)| {
                (r.max(k as usize + 1), c.max(i as usize + 1))
            })
    }
}

/// Writes each occupied matrix as `M_j:` followed by its rows of digits,
/// all matrices padded to the family's common extent.
impl fmt::Display for PartFrequencyMatrices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = (self.base - 1).to_string().len();
        let (rows, cols) = self.extent();
        for core in self.cores() {
            writeln!(f, "M_{core}:")?;
            for row in self.dense(core, rows, cols) {
                let cells: Vec<String> = row.iter().map(|d| format!("{d:>width$}")).collect();
                writeln!(f, "  {}", cells.join(" "))?;
            }
        }
        Ok(())
    }
}

/// Base-`m` part-frequency matrices of `p`.
pub fn to_matrices(p: &Partition, m: u64) -> Result<PartFrequencyMatrices> {
    check_modulus(m)?;
    let mut matrices: BTreeMap<u64, BTreeMap<(u64, u64), u64>> = BTreeMap::new();
    for &(size, mut freq) in p.parts() {
        let (core, row) = core_and_level(size, m);
        let matrix = matrices.entry(core).or_default();
        let mut col = 0;
        while freq > 0 {
            let digit = freq % m;
            if digit > 0 {
                matrix.insert((row, col), digit);
            }
            freq /= m;
            col += 1;
        }
    }
    Ok(PartFrequencyMatrices { base: m, matrices })
}

/// Reconstructs the partition whose matrices are `family`.
pub fn from_matrices(family: &PartFrequencyMatrices) -> Partition {
    let m = family.base;
    let mut acc: BTreeMap<u64, u64> = BTreeMap::new();
    for (&core, matrix) in &family.matrices {
        for (&(row, col), &digit) in matrix {
            let size = core * m.pow(row as u32);
            *acc.entry(size).or_insert(0) += digit * m.pow(col as u32);
        }
    }
    Partition::from_map(acc)
}

/// Glaisher's map `φ_m`, extended to an involution on all partitions by
/// transposing every part-frequency matrix.
pub fn phi(p: &Partition, m: u64) -> Result<Partition> {
    Ok(from_matrices(&to_matrices(p, m)?.transpose()))
}

/// Diagonal shift: each size times `m`, each frequency divided by `m`.
///
/// On the matrices this is the move of a family with empty first column one
/// step down and left along each diagonal, so it requires every frequency to
/// be divisible by `m`.
pub fn wrap_shift(p: &Partition, m: u64) -> Result<Partition> {
    check_modulus(m)?;
    p.divide_freqs(m)?.scale_sizes(m)
}

/// Inverse of [`wrap_shift`]; requires every size divisible by `m`.
pub fn unwrap_shift(p: &Partition, m: u64) -> Result<Partition> {
    check_modulus(m)?;
    p.divide_sizes(m)?.scale_freqs(m)
}

fn check_domain(p: &Partition, regular: u64, distinct: u64) -> Result<()> {
    if !p.is_regular(regular)? {
        return Err(Error::NotRegular(regular));
    }
    if !p.is_distinct(distinct)? {
        return Err(Error::NotDistinct(distinct));
    }
    Ok(())
}

fn check_coprime(s: u64, t: u64) -> Result<()> {
    check_modulus(s)?;
    check_modulus(t)?;
    if s.gcd(&t) != 1 {
        return Err(Error::NotCoprime { s, t });
    }
    Ok(())
}

/// `φ_s ∘ φ_t` (φ_t applied first): for coprime `s`, `t` a bijection from
/// s-regular t-distinct partitions onto t-regular s-distinct ones.
pub fn double_glaisher(p: &Partition, s: u64, t: u64) -> Result<Partition> {
    check_coprime(s, t)?;
    check_domain(p, s, t)?;
    phi(&phi(p, t)?, s)
}

/// Inverse of [`double_glaisher`] with the same `(s, t)`: `φ_t ∘ φ_s`.
pub fn double_glaisher_inverse(p: &Partition, s: u64, t: u64) -> Result<Partition> {
    check_coprime(s, t)?;
    check_domain(p, t, s)?;
    phi(&phi(p, s)?, t)
}
