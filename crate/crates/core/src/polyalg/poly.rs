use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense polynomial in `t` with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending degree order with no trailing zeros;
/// the zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<BigInt>", into = "Vec<BigInt>")]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl From<Vec<BigInt>> for IntPoly {
    fn from(coeffs: Vec<BigInt>) -> Self {
        IntPoly::new(coeffs)
    }
}

impl From<IntPoly> for Vec<BigInt> {
    fn from(p: IntPoly) -> Self {
        p.coeffs
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `c * t^deg`
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly::new(coeffs)
    }

    /// `1 - t^k`; for `k = 0` this is the zero polynomial.
    pub fn one_minus_t_pow(k: usize) -> Self {
        if k == 0 {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::one();
        coeffs[k] = -BigInt::one();
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Value at `t = 1`, i.e. the sum of the coefficients.
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn pow(&self, mut exp: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiply in place by `1 - t^k`.
    pub(crate) fn mul_one_minus_t_pow(&mut self, k: usize) {
        if self.is_zero() {
            return;
        }
        let n = self.coeffs.len();
        self.coeffs.resize(n + k, BigInt::zero());
        for j in (k..n + k).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(j);
            hi[0] -= &lo[j - k];
        }
        let trimmed = std::mem::take(&mut self.coeffs);
        *self = IntPoly::new(trimmed);
    }

    /// Classical long division over the integers.
    ///
    /// Returns `None` when some step needs a non-integral quotient
    /// coefficient; in that case the divisor does not divide `self` in `Z[t]`.
    pub fn div_rem(&self, divisor: &IntPoly) -> Result<Option<(IntPoly, IntPoly)>> {
        let dlead = divisor
            .leading_coeff()
            .ok_or_else(|| Error::domain("divisor", "division by the zero polynomial"))?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok(Some((IntPoly::zero(), self.clone())));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - ddeg];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + ddeg];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(dlead);
            if !r.is_zero() {
                return Ok(None);
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &q * d;
            }
            quot[shift] = q;
        }
        Ok(Some((IntPoly::new(quot), IntPoly::new(rem))))
    }

    /// Long division where the divisor's leading coefficient is a unit.
    pub(crate) fn div_rem_unit(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        debug_assert!(divisor.leading_coeff().is_some_and(|c| c.abs().is_one()));
        self.div_rem(divisor)
            .expect("nonzero divisor")
            .expect("unit leading coefficient divides every step")
    }

    /// True iff `t -> 1/t` symmetry holds and the constant term is one.
    pub fn is_palindromic_monic(&self) -> Result<bool> {
        let deg = self
            .degree()
            .ok_or_else(|| Error::domain("p", "zero polynomial has no palindromic test"))?;
        if !self.coeffs[0].is_one() {
            return Ok(false);
        }
        Ok((0..=deg / 2).all(|j| self.coeffs[j] == self.coeffs[deg - j]))
    }
}

/// `[n]_t = 1 + t + ... + t^{n-1}`.
pub fn qint(n: i64) -> Result<IntPoly> {
    if n < 1 {
        return Err(Error::domain("n", format!("quantum integer needs n >= 1, got {n}")));
    }
    Ok(IntPoly {
        coeffs: vec![BigInt::one(); n as usize],
    })
}

/// Gaussian binomial `[n choose k]_t`, built by exact division one factor at a time.
pub fn qbinom(n: i64, k: i64) -> Result<IntPoly> {
    if n < 0 {
        return Err(Error::domain("n", format!("n must be nonnegative, got {n}")));
    }
    if k < 0 || k > n {
        return Err(Error::domain("k", format!("need 0 <= k <= n = {n}, got {k}")));
    }
    let mut acc = IntPoly::one();
    for j in 1..=k {
        acc.mul_one_minus_t_pow((n - j + 1) as usize);
        let (q, r) = acc.div_rem_unit(&IntPoly::one_minus_t_pow(j as usize));
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "inexact division building qbinom({n},{k}) at step {j}"
            )));
        }
        acc = q;
    }
    Ok(acc)
}

/// True iff `d` divides `p` in `Z[t]`.
pub fn divides(d: &IntPoly, p: &IntPoly) -> Result<bool> {
    if d.is_zero() {
        return Err(Error::domain("d", "divisor is the zero polynomial"));
    }
    Ok(matches!(p.div_rem(d)?, Some((_, r)) if r.is_zero()))
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{abs}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{abs}*t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn qint_values() {
        assert_eq!(qint(1).unwrap(), p(&[1]));
        assert_eq!(qint(2).unwrap(), p(&[1, 1]));
        assert_eq!(qint(4).unwrap(), p(&[1, 1, 1, 1]));
        assert!(matches!(qint(0), Err(Error::Domain { .. })));
        assert!(matches!(qint(-3), Err(Error::Domain { .. })));
    }

    #[test]
    fn qbinom_values() {
        assert_eq!(qbinom(3, 0).unwrap(), p(&[1]));
        assert_eq!(qbinom(2, 1).unwrap(), p(&[1, 1]));
        assert_eq!(qbinom(4, 2).unwrap(), p(&[1, 1, 2, 1, 1]));
        assert!(qbinom(3, 4).is_err());
        assert!(qbinom(3, -1).is_err());
    }

    #[test]
    fn palindromic_monic() {
        assert!(p(&[1, 1, 1]).is_palindromic_monic().unwrap());
        assert!(p(&[1, 3, 3, 1]).is_palindromic_monic().unwrap());
        assert!(!p(&[1, 2]).is_palindromic_monic().unwrap());
        assert!(!p(&[2, 2]).is_palindromic_monic().unwrap());
        assert!(IntPoly::zero().is_palindromic_monic().is_err());
    }

    #[test]
    fn divisibility() {
        assert!(divides(&p(&[1, 1]), &p(&[1, 2, 1])).unwrap());
        assert!(!divides(&p(&[1, 1]), &p(&[1, 1, 1])).unwrap());
        let master = &qint(2).unwrap().pow(3) * &qint(3).unwrap().pow(5);
        assert!(divides(&p(&[1, 1, 1]), &master).unwrap());
        assert!(divides(&p(&[2]), &p(&[4, 6])).unwrap());
        assert!(!divides(&p(&[2]), &p(&[4, 5])).unwrap());
        assert!(!divides(&p(&[1, 2]), &p(&[1, 1])).unwrap());
        assert!(divides(&IntPoly::zero(), &p(&[1])).is_err());
    }

    #[test]
    fn zero_remainder_of_exact_division() {
        let a = p(&[1, -2, 5, 7]);
        let b = p(&[3, 0, 1]);
        let (q, r) = (&a * &b).div_rem(&b).unwrap().unwrap();
        assert_eq!(q, a);
        assert!(r.is_zero());
    }

    #[test]
    fn in_place_cyclotomic_factor() {
        let mut a = p(&[1, 1]);
        a.mul_one_minus_t_pow(2);
        assert_eq!(a, p(&[1, 1, -1, -1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -1, 0, 2]).to_string(), "1 - t + 2*t^3");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
