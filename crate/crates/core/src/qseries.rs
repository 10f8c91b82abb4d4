//! Truncated power series with exact integer coefficients and the eta
//! quotients that count regular/distinct partitions.
//!
//! `f_k` denotes `Π_{i≥1} (1 - q^{ik})`.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{check_modulus, Error, Result};

/// Default truncation degree for command-line expansions.
pub const DEFAULT_DEGREE: usize = 100;

/// Power series known exactly through `q^N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// The constant `c` truncated at degree `n`.
    pub fn constant(c: i64, n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(c);
        Self { coeffs }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(1, n)
    }

    /// Builds a series from coefficients `c_0..=c_N`; the truncation degree is
    /// `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the constant term"
        );
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^n`. Panics past the truncation degree.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    /// Truncated product. The result is exact through the smaller of the two degrees.
    pub fn mul(&self, other: &Series) -> Series {
        let n = self.degree().min(other.degree());
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse, which exists iff the constant term is ±1.
    pub fn inv(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::NotInvertible(c0.to_string()));
        }
        let n = self.degree();
        let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
        out.push(c0.clone());
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &out[k - i];
                }
            }
            // c0 is ±1, so dividing by it is multiplying by it.
            out.push(-(acc * c0));
        }
        Ok(Series { coeffs: out })
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

/// One `n: coefficient` line per degree.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "{n}: {c}")?;
        }
        Ok(())
    }
}

/// `f_k = Π_{i≥1} (1 - q^{ik})` truncated at degree `n`.
pub fn f(k: u64, n: usize) -> Result<Series> {
    if k == 0 {
        return Err(Error::InvalidFactor(0));
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[0] = BigInt::one();
    let k = usize::try_from(k).unwrap_or(usize::MAX);
    let mut step = k;
    while step <= n {
        // multiply in place by (1 - q^step)
        for d in (step..=n).rev() {
            let lower = coeffs[d - step].clone();
            coeffs[d] -= lower;
        }
        step = match step.checked_add(k) {
            Some(s) => s,
            None => break,
        };
    }
    Ok(Series { coeffs })
}

/// `Π_{k∈nums} f_k / Π_{k∈dens} f_k` truncated at degree `n`.
pub fn eta_quotient(nums: &[u64], dens: &[u64], n: usize) -> Result<Series> {
    let mut acc = Series::one(n);
    for &k in nums {
        acc = acc.mul(&f(k, n)?);
    }
    for &k in dens {
        acc = acc.mul(&f(k, n)?.inv()?);
    }
    Ok(acc)
}

/// Generating function of s-regular t-distinct partitions:
/// `f_s f_t / (f_1 f_{st})`.
pub fn gf_regular_distinct(s: u64, t: u64, n: usize) -> Result<Series> {
    check_modulus(s)?;
    check_modulus(t)?;
    eta_quotient(&[s, t], &[1, s * t], n)
}

/// Generating function of partitions both s-regular and t-regular:
/// `f_s f_t / (f_1 f_{lcm(s,t)})`.
pub fn gf_regular_regular(s: u64, t: u64, n: usize) -> Result<Series> {
    check_modulus(s)?;
    check_modulus(t)?;
    eta_quotient(&[s, t], &[1, s.lcm(&t)], n)
}

/// Generating function of partitions that are s-regular, t-regular and
/// s-distinct, for `s < t`:
/// `f_s f_t / (f_1 f_L) · f_s f_{sL} / (f_{s²} f_{st})` with `L = lcm(s, t)`.
pub fn gf_theorem9(s: u64, t: u64, n: usize) -> Result<Series> {
    check_modulus(s)?;
    check_modulus(t)?;
    if s >= t {
        return Err(Error::InvalidArgument(format!(
            "requires s < t, got s = {s}, t = {t}"
        )));
    }
    let l = s.lcm(&t);
    let left = eta_quotient(&[s, t], &[1, l], n)?;
    let right = eta_quotient(&[s, s * l], &[s * s, s * t], n)?;
    Ok(left.mul(&right))
}

/// Checks `(f_t f_d)/(f_1 f_{td}) · (f_{dt} f_s)/(f_d f_{st}) = (f_t f_s)/(f_1 f_{st})`
/// coefficientwise through degree `n`, for `d | s`.
pub fn check_intermediate_identity(s: u64, d: u64, t: u64, n: usize) -> Result<bool> {
    if s == 0 || d == 0 || t == 0 {
        return Err(Error::InvalidFactor(0));
    }
    if !s.is_multiple_of(d) {
        return Err(Error::InvalidArgument(format!("{d} does not divide {s}")));
    }
    let head = eta_quotient(&[t, d], &[1, t * d], n)?;
    let tail = eta_quotient(&[d * t, s], &[d, s * t], n)?;
    let rhs = eta_quotient(&[t, s], &[1, s * t], n)?;
    Ok(head.mul(&tail) == rhs)
}
