//! Bijection between s-regular t-distinct and t-regular s-distinct partitions
//! for arbitrary moduli.
//!
//! Write `s = s' * Π p_i^{e_i}` and `t = t' * Π p_i^{b_i}` where the `p_i`
//! are the primes shared by `s` and `t`. The map runs in stages:
//!
//! 1. Parts not divisible by `s'` go through `φ_{s'} ∘ φ_t` (a coprime
//!    double-Glaisher map). Every remaining size is divisible by `s'` and is
//!    divided by it.
//! 2. For each shared prime in the configured order, [`prime_step`] maps the
//!    parts not divisible by `p^e`; the result has its frequencies multiplied
//!    by the running wrap factor `W` (the product of everything divided out
//!    so far). The leftover parts are divided by `p^e` and `W` grows by `p^e`.
//!
//! Stage contributions occupy disjoint "digits" of a mixed-radix frequency
//! (`< s'`, then multiples of `s'` below `s' p_1^{e_1}`, ...), which is what
//! lets [`Bijection::inverse`] peel them apart again.

use std::collections::HashSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::enumerate::{restricted_partitions, Restriction};
use crate::exec::Execution;

use crate::error::{check_modulus, Error, Result};
use crate::glaisher::{phi, unwrap_shift, wrap_shift};
use crate::partition::Partition;

/// Trial-division factorization of `n >= 1` as ascending `(prime, exponent)`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// A prime `p` dividing both moduli, with `p^e ∥ s`, `p^b ∥ t` and the
/// complement `k = t / p^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharedPrime {
    prime: u64,
    s_exp: u32,
    t_exp: u32,
    complement: u64,
}

impl SharedPrime {
    pub fn new(prime: u64, s_exp: u32, t_exp: u32, complement: u64) -> Result<Self> {
        check_modulus(prime)?;
        if s_exp == 0 || t_exp == 0 {
            return Err(Error::InvalidArgument(
                "shared prime exponents must be positive".into(),
            ));
        }
        if complement == 0 || complement.is_multiple_of(prime) {
            return Err(Error::InvalidArgument(format!(
                "complement {complement} must be positive and coprime to {prime}"
            )));
        }
        Ok(Self {
            prime,
            s_exp,
            t_exp,
            complement,
        })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn s_exp(&self) -> u32 {
        self.s_exp
    }

    pub fn t_exp(&self) -> u32 {
        self.t_exp
    }

    /// `k = t / p^b`.
    pub fn complement(&self) -> u64 {
        self.complement
    }

    /// `p^e`.
    pub fn s_power(&self) -> u64 {
        self.prime.pow(self.s_exp)
    }

    /// `t = p^b * k`.
    pub fn t(&self) -> u64 {
        self.prime.pow(self.t_exp) * self.complement
    }
}

/// The factored structure of a modulus pair `(s, t)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModulusPair {
    s: u64,
    t: u64,
    shared: Vec<SharedPrime>,
    s_exclusive: u64,
    t_exclusive: u64,
}

impl ModulusPair {
    /// Factors `s` and `t`; shared primes come out in ascending order.
    pub fn analyze(s: u64, t: u64) -> Result<Self> {
        check_modulus(s)?;
        check_modulus(t)?;
        let t_factors = factorize(t);
        let mut shared = Vec::new();
        let mut s_exclusive = 1;
        for (p, e) in factorize(s) {
            match t_factors.iter().find(|&&(q, _)| q == p) {
                Some(&(_, b)) => shared.push(SharedPrime {
                    prime: p,
                    s_exp: e,
                    t_exp: b,
                    complement: t / p.pow(b),
                }),
                None => s_exclusive *= p.pow(e),
            }
        }
        let t_exclusive = t_factors
            .iter()
            .filter(|&&(q, _)| !s.is_multiple_of(q))
            .map(|&(q, c)| q.pow(c))
            .product();
        Ok(Self {
            s,
            t,
            shared,
            s_exclusive,
            t_exclusive,
        })
    }

    /// Reorders the shared primes; `order` must be a permutation of them.
    pub fn with_order(mut self, order: &[u64]) -> Result<Self> {
        let mut given = order.to_vec();
        let mut have = self.shared_primes();
        given.sort_unstable();
        have.sort_unstable();
        if given != have {
            return Err(Error::InvalidPrimeOrder {
                given: order.to_vec(),
                shared: self.shared_primes(),
            });
        }
        self.shared = order
            .iter()
            .map(|&p| {
                *self
                    .shared
                    .iter()
                    .find(|sp| sp.prime == p)
                    .expect("checked")
            })
            .collect();
        Ok(self)
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Shared primes in processing order.
    pub fn shared(&self) -> &[SharedPrime] {
        &self.shared
    }

    pub fn shared_primes(&self) -> Vec<u64> {
        self.shared.iter().map(|sp| sp.prime).collect()
    }

    /// `s'`: the part of `s` built from primes not dividing `t`.
    pub fn s_exclusive(&self) -> u64 {
        self.s_exclusive
    }

    /// The part of `t` built from primes not dividing `s`. Not used by the map.
    pub fn t_exclusive(&self) -> u64 {
        self.t_exclusive
    }

    pub fn is_coprime(&self) -> bool {
        self.shared.is_empty()
    }
}

/// Which base the a-branch of a prime step finishes in.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// `φ_p ∘ φ_k` on the a-part.
    #[default]
    #[serde(rename = "prime")]
    PrimeBase,
    /// `φ_{p^e} ∘ φ_k` on the a-part. Coincides with `PrimeBase` when `e = 1`.
    #[serde(rename = "primepower")]
    PrimePowerBase,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BijectionConfig {
    /// Processing order of the shared primes; `None` means ascending.
    pub prime_order: Option<Vec<u64>>,
    pub variant: Variant,
}

impl BijectionConfig {
    pub fn with_order(order: Vec<u64>) -> Self {
        Self {
            prime_order: Some(order),
            variant: Variant::default(),
        }
    }
}

/// Maps the parts of `p` not divisible by `p^e` to a t-regular,
/// `p^e`-distinct partition. Returns `(image, remainder)` where the
/// remainder holds the untouched parts (all divisible by `p^e`).
///
/// Each frequency `a + C k` (with `a < k`) is split in two:
/// the `a` copies go through `φ_k` then `φ_p` (or `φ_{p^e}`), and the `C k`
/// copies are shifted to `C` copies of `k` times the size and then go through
/// `φ_p`. The first branch yields sizes not divisible by `k`, the second sizes
/// divisible by `k`, so the merge never mixes them.
pub fn prime_step(
    p: &Partition,
    prime: &SharedPrime,
    variant: Variant,
) -> Result<(Partition, Partition)> {
    let t = prime.t();
    if !p.is_distinct(t)? {
        return Err(Error::NotDistinct(t));
    }
    let pe = prime.s_power();
    let k = prime.complement;
    let (rho, remainder) = p.split_by_size(|x| x % pe != 0);

    let image = if k == 1 {
        phi(&rho, prime.prime)?
    } else {
        let (a_part, ck_part) = rho.split_frequency_residue(k)?;
        let a_base = match variant {
            Variant::PrimeBase => prime.prime,
            Variant::PrimePowerBase => pe,
        };
        let a_image = phi(&phi(&a_part, k)?, a_base)?;
        let ck_image = phi(&wrap_shift(&ck_part, k)?, prime.prime)?;
        a_image.merge(&ck_image)
    };
    Ok((image, remainder))
}

/// Inverse of the image half of [`prime_step`].
pub fn prime_step_inverse(
    image: &Partition,
    prime: &SharedPrime,
    variant: Variant,
) -> Result<Partition> {
    let k = prime.complement;
    if k == 1 {
        return phi(image, prime.prime);
    }
    let (a_image, ck_image) = image.split_by_size(|x| x % k != 0);
    let a_base = match variant {
        Variant::PrimeBase => prime.prime,
        Variant::PrimePowerBase => prime.s_power(),
    };
    let a_part = phi(&phi(&a_image, a_base)?, k)?;
    let ck_part = unwrap_shift(&phi(&ck_image, prime.prime)?, k)?;
    Ok(a_part.merge(&ck_part))
}

/// State of the forward map after one stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    /// Everything produced so far: t-regular and `wrap`-distinct.
    pub image: Partition,
    /// Parts not yet processed, at their original sizes (all divisible by `wrap`).
    pub remainder: Partition,
    /// Product of the factors divided out so far.
    pub wrap: u64,
}

/// The map for a fixed modulus pair, prime order and variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bijection {
    pair: ModulusPair,
    variant: Variant,
}

impl Bijection {
    pub fn new(s: u64, t: u64, cfg: &BijectionConfig) -> Result<Self> {
        let mut pair = ModulusPair::analyze(s, t)?;
        if let Some(order) = &cfg.prime_order {
            pair = pair.with_order(order)?;
        }
        Ok(Self {
            pair,
            variant: cfg.variant,
        })
    }

    pub fn pair(&self) -> &ModulusPair {
        &self.pair
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// s-regular t-distinct → t-regular s-distinct.
    pub fn forward(&self, p: &Partition) -> Result<Partition> {
        let stages = self.stages(p)?;
        let last = stages.into_iter().last().expect("at least one stage");
        debug_assert!(last.remainder.is_empty());
        Ok(last.image)
    }

    /// Runs the forward map and reports the state after the `s'` stage and
    /// after each shared prime.
    pub fn stages(&self, p: &Partition) -> Result<Vec<Stage>> {
        let (s, t) = (self.pair.s, self.pair.t);
        if !p.is_regular(s)? {
            return Err(Error::NotRegular(s));
        }
        if !p.is_distinct(t)? {
            return Err(Error::NotDistinct(t));
        }
        let s1 = self.pair.s_exclusive;
        let (mut image, mut rest) = if s1 > 1 {
            let (head, tail) = p.split_by_size(|x| x % s1 != 0);
            (phi(&phi(&head, t)?, s1)?, tail.divide_sizes(s1)?)
        } else {
            (Partition::empty(), p.clone())
        };
        let mut wrap = s1;
        let mut stages = vec![Stage {
            image: image.clone(),
            remainder: rest.scale_sizes(wrap)?,
            wrap,
        }];
        for prime in &self.pair.shared {
            let (step_image, step_rest) = prime_step(&rest, prime, self.variant)?;
            image = image.merge(&step_image.scale_freqs(wrap)?);
            rest = step_rest.divide_sizes(prime.s_power())?;
            wrap *= prime.s_power();
            stages.push(Stage {
                image: image.clone(),
                remainder: rest.scale_sizes(wrap)?,
                wrap,
            });
        }
        Ok(stages)
    }

    /// t-regular s-distinct → s-regular t-distinct.
    pub fn inverse(&self, p: &Partition) -> Result<Partition> {
        let (s, t) = (self.pair.s, self.pair.t);
        if !p.is_regular(t)? {
            return Err(Error::NotRegular(t));
        }
        if !p.is_distinct(s)? {
            return Err(Error::NotDistinct(s));
        }
        let s1 = self.pair.s_exclusive;
        let (mut out, mut rest) = if s1 > 1 {
            let (residue, multiple) = p.split_frequency_residue(s1)?;
            (phi(&phi(&residue, s1)?, t)?, multiple.divide_freqs(s1)?)
        } else {
            (Partition::empty(), p.clone())
        };
        let mut wrap = s1;
        for prime in &self.pair.shared {
            let pe = prime.s_power();
            let (step_image, multiple) = rest.split_frequency_residue(pe)?;
            let rho = prime_step_inverse(&step_image, prime, self.variant)?;
            out = out.merge(&rho.scale_sizes(wrap)?);
            rest = multiple.divide_freqs(pe)?;
            wrap *= pe;
        }
        debug_assert!(rest.is_empty());
        Ok(out)
    }
}

/// Outcome of running a [`Bijection`] over a whole weight class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightCheck {
    pub n: u64,
    /// Number of s-regular t-distinct partitions of `n`.
    pub domain: usize,
    /// Number of t-regular s-distinct partitions of `n`.
    pub codomain: usize,
    /// Every image is t-regular, s-distinct and of weight `n`.
    pub lands_in_target: bool,
    /// No two inputs share an image.
    pub injective: bool,
    /// The image set equals the whole codomain.
    pub onto: bool,
    /// `inverse(forward(x)) = x` for every input.
    pub round_trip: bool,
}

impl WeightCheck {
    pub fn passed(&self) -> bool {
        self.lands_in_target && self.injective && self.onto && self.round_trip
    }
}

impl Bijection {
    /// Maps every s-regular t-distinct partition of `n` and compares the
    /// image against the generated set of t-regular s-distinct partitions.
    pub fn check_weight(&self, n: u64, exec: Execution) -> Result<WeightCheck> {
        let (s, t) = (self.pair.s, self.pair.t);
        let domain = restricted_partitions(n, &Restriction::regular_distinct(s, t)?)?;
        let codomain: HashSet<Partition> =
            restricted_partitions(n, &Restriction::regular_distinct(t, s)?)?
                .into_iter()
                .collect();
        let mapped = exec.map(&domain, |x| -> Result<(Partition, bool)> {
            let y = self.forward(x)?;
            let back = self.inverse(&y)?;
            Ok((y, &back == x))
        });
        let mut images = HashSet::with_capacity(domain.len());
        let mut lands_in_target = true;
        let mut injective = true;
        let mut round_trip = true;
        for item in mapped {
            let (y, ok) = item?;
            round_trip &= ok;
            lands_in_target &= y.weight() == n && y.is_regular(t)? && y.is_distinct(s)?;
            injective &= images.insert(y);
        }
        Ok(WeightCheck {
            n,
            domain: domain.len(),
            codomain: codomain.len(),
            lands_in_target,
            injective,
            onto: images == codomain,
            round_trip,
        })
    }
}

/// One-shot forward map.
pub fn forward(p: &Partition, s: u64, t: u64, cfg: &BijectionConfig) -> Result<Partition> {
    Bijection::new(s, t, cfg)?.forward(p)
}

/// One-shot inverse map.
pub fn inverse(p: &Partition, s: u64, t: u64, cfg: &BijectionConfig) -> Result<Partition> {
    Bijection::new(s, t, cfg)?.inverse(p)
}

/// `true` iff `gcd(s, t) = 1`.
pub fn coprime(s: u64, t: u64) -> bool {
    s.gcd(&t) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    #[test]
    fn factorizations() {
        assert_eq!(factorize(1), []);
        assert_eq!(factorize(360), [(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(97), [(97, 1)]);
    }

    #[test]
    fn analyze_examples() {
        let pair = ModulusPair::analyze(9, 15).unwrap();
        assert_eq!(pair.shared(), [SharedPrime::new(3, 2, 1, 5).unwrap()]);
        assert_eq!(pair.s_exclusive(), 1);
        assert_eq!(pair.t_exclusive(), 5);

        let pair = ModulusPair::analyze(18, 30).unwrap();
        assert_eq!(
            pair.shared(),
            [
                SharedPrime::new(2, 1, 1, 15).unwrap(),
                SharedPrime::new(3, 2, 1, 10).unwrap()
            ]
        );
        assert_eq!(pair.s_exclusive(), 1);

        let pair = ModulusPair::analyze(6, 10).unwrap();
        assert_eq!(pair.shared(), [SharedPrime::new(2, 1, 1, 5).unwrap()]);
        assert_eq!(pair.s_exclusive(), 3);

        assert_eq!(ModulusPair::analyze(1, 10), Err(Error::InvalidModulus(1)));
        assert!(ModulusPair::analyze(7, 11).unwrap().is_coprime());
    }

    #[test]
    fn prime_order_validation() {
        let pair = ModulusPair::analyze(18, 30).unwrap();
        assert_eq!(
            pair.clone().with_order(&[3, 2]).unwrap().shared_primes(),
            [3, 2]
        );
        assert!(matches!(
            pair.clone().with_order(&[3]),
            Err(Error::InvalidPrimeOrder { .. })
        ));
        assert!(pair.clone().with_order(&[2, 5]).is_err());
        assert!(pair.with_order(&[2, 3, 3]).is_err());
    }

    #[test]
    fn prime_step_examples() {
        let three = SharedPrime::new(3, 2, 1, 5).unwrap();
        let (image, rest) = prime_step(&p("10^4,5^7,3^5,1^2"), &three, Variant::PrimeBase).unwrap();
        assert_eq!(image, p("25,18^2,9,5^3,3,2^2"));
        assert!(rest.is_empty());
        assert_eq!(
            prime_step(&Partition::empty(), &three, Variant::PrimeBase).unwrap(),
            (Partition::empty(), Partition::empty())
        );
        let two = SharedPrime::new(2, 1, 1, 15).unwrap();
        assert_eq!(
            prime_step(&p("9"), &two, Variant::PrimeBase).unwrap(),
            (p("9"), Partition::empty())
        );
        assert_eq!(
            prime_step(&p("1^15"), &three, Variant::PrimeBase),
            Err(Error::NotDistinct(15))
        );
    }

    #[test]
    fn prime_step_splits_off_divisible_parts() {
        let three = SharedPrime::new(3, 2, 1, 5).unwrap();
        let (image, rest) = prime_step(&p("18,10,9^2"), &three, Variant::PrimeBase).unwrap();
        assert_eq!(rest, p("18,9^2"));
        assert_eq!(image.weight(), 10);
    }

    #[test]
    fn prime_power_variant_differs() {
        let three = SharedPrime::new(3, 2, 1, 5).unwrap();
        let (image, _) = prime_step(&p("10^4,5^2,1^2"), &three, Variant::PrimePowerBase).unwrap();
        assert_eq!(image, p("18^2,9,2^2,1^3"));
        assert_eq!(
            prime_step_inverse(&image, &three, Variant::PrimePowerBase).unwrap(),
            p("10^4,5^2,1^2")
        );
    }

    #[test]
    fn trivial_complement() {
        // t = 4 is a power of the only shared prime, so k = 1.
        let bij = Bijection::new(2, 4, &BijectionConfig::default()).unwrap();
        let x = p("7^3,5,3^2,1^3");
        let y = bij.forward(&x).unwrap();
        assert!(y.is_regular(4).unwrap() && y.is_distinct(2).unwrap());
        assert_eq!(bij.inverse(&y).unwrap(), x);
    }

    #[test]
    fn forward_examples() {
        let cfg = BijectionConfig::default();
        assert_eq!(
            forward(&p("10^4,5^7,3^5,1^2"), 9, 15, &cfg).unwrap(),
            p("25,18^2,9,5^3,3,2^2")
        );
        assert_eq!(
            forward(&p("9"), 18, 30, &BijectionConfig::with_order(vec![3, 2])).unwrap(),
            p("1^9")
        );
        assert_eq!(
            forward(&p("9"), 18, 30, &BijectionConfig::with_order(vec![2, 3])).unwrap(),
            p("9")
        );
        assert_eq!(
            forward(&Partition::empty(), 6, 10, &cfg).unwrap(),
            Partition::empty()
        );
    }

    #[test]
    fn inverse_examples() {
        let cfg = BijectionConfig::default();
        assert_eq!(
            inverse(&p("25,18^2,9,5^3,3,2^2"), 9, 15, &cfg).unwrap(),
            p("10^4,5^7,3^5,1^2")
        );
        assert_eq!(
            inverse(&p("1^9"), 18, 30, &BijectionConfig::with_order(vec![3, 2])).unwrap(),
            p("9")
        );
        assert_eq!(
            inverse(&Partition::empty(), 9, 15, &cfg).unwrap(),
            Partition::empty()
        );
    }

    #[test]
    fn domain_errors() {
        let cfg = BijectionConfig::default();
        assert_eq!(forward(&p("18"), 9, 15, &cfg), Err(Error::NotRegular(9)));
        assert_eq!(
            forward(&p("1^15"), 9, 15, &cfg),
            Err(Error::NotDistinct(15))
        );
        assert_eq!(inverse(&p("15"), 9, 15, &cfg), Err(Error::NotRegular(15)));
        assert_eq!(inverse(&p("1^9"), 9, 15, &cfg), Err(Error::NotDistinct(9)));
        assert!(forward(&p("1"), 18, 30, &BijectionConfig::with_order(vec![5])).is_err());
    }

    #[test]
    fn weight_check_small() {
        let bij = Bijection::new(6, 4, &BijectionConfig::default()).unwrap();
        for n in 0..=12 {
            let check = bij.check_weight(n, Execution::Sequential).unwrap();
            assert!(check.passed(), "{check:?}");
            assert_eq!(check.domain, check.codomain);
        }
    }

    #[test]
    fn stages_of_mixed_pair() {
        // s = 6 = 3 * 2, t = 10: s' = 3, shared prime 2.
        let bij = Bijection::new(6, 10, &BijectionConfig::default()).unwrap();
        let stages = bij.stages(&p("9,4^2,3,1")).unwrap();
        assert_eq!(stages.len(), 2);
        assert_eq!(stages[0].wrap, 3);
        assert_eq!(stages[0].remainder, p("9,3"));
        assert_eq!(stages[1].wrap, 6);
        assert!(stages[1].remainder.is_empty());
    }
}
