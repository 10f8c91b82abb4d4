#![allow(dead_code)]

use regdist::enumerate::partitions;
use regdist::Partition;

pub fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

/// Every partition of `n`, from the brute-force generator.
pub fn all(n: u64) -> Vec<Partition> {
    partitions(n).unwrap().collect()
}

pub fn filtered(n: u64, pred: impl Fn(&Partition) -> bool) -> Vec<Partition> {
    partitions(n).unwrap().filter(|x| pred(x)).collect()
}

pub fn regular(x: &Partition, m: u64) -> bool {
    x.is_regular(m).unwrap()
}

pub fn distinct(x: &Partition, m: u64) -> bool {
    x.is_distinct(m).unwrap()
}

/// Brute-force counts of partitions by weight, keyed on which moduli
/// `2..=max_m` they avoid and on their largest frequency.
pub struct CountTable {
    max_m: u64,
    // per n: (bitmask of m with x m-regular, largest frequency)
    rows: Vec<Vec<(u64, u64)>>,
}

impl CountTable {
    pub fn new(max_n: u64, max_m: u64) -> Self {
        let rows = (0..=max_n)
            .map(|n| {
                partitions(n)
                    .unwrap()
                    .map(|x| {
                        let mask = (2..=max_m)
                            .filter(|&m| regular(&x, m))
                            .fold(0u64, |acc, m| acc | (1 << m));
                        let maxf = x.parts().iter().map(|&(_, f)| f).max().unwrap_or(0);
                        (mask, maxf)
                    })
                    .collect()
            })
            .collect();
        Self { max_m, rows }
    }

    /// Partitions of `n` that are regular for every modulus in `regular`
    /// and `d`-distinct for every `d` in `distinct`.
    pub fn count(&self, n: u64, regular: &[u64], distinct: &[u64]) -> u64 {
        assert!(regular.iter().all(|&m| m <= self.max_m));
        let need = regular.iter().fold(0u64, |acc, &m| acc | (1 << m));
        let cap = distinct.iter().min().copied().unwrap_or(u64::MAX);
        self.rows[n as usize]
            .iter()
            .filter(|&&(mask, maxf)| mask & need == need && maxf < cap)
            .count() as u64
    }
}
