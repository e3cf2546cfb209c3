use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::factored::FactoredChar;
use super::poly::IntPoly;
use crate::error::{Error, Result};

/// Power series in `t` known through `t^order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficients of `t^0 ..= t^order`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn from_poly(p: &IntPoly, order: usize) -> Self {
        TruncatedSeries {
            order,
            coeffs: (0..=order).map(|i| p.coeff(i)).collect(),
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { order, coeffs }
    }
}

/// Power-series expansion of `∏ (1 - t^k)^{e_k}` through `t^order`.
///
/// Negative exponents use the geometric series `1/(1 - t^k) = Σ t^{jk}`.
pub fn series_expand(f: &FactoredChar, order: usize) -> Result<TruncatedSeries> {
    if order < 1 {
        return Err(Error::domain("order", "truncation order must be at least 1"));
    }
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::one();
    for (&k, &e) in f.factors() {
        let k = k as usize;
        if k > order {
            continue;
        }
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                for j in (k..=order).rev() {
                    let (lo, hi) = c.split_at_mut(j);
                    hi[0] -= &lo[j - k];
                }
            } else {
                for j in k..=order {
                    let (lo, hi) = c.split_at_mut(j);
                    hi[0] += &lo[j - k];
                }
            }
        }
    }
    Ok(TruncatedSeries { order, coeffs: c })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn geometric_and_binomial() {
        let f = FactoredChar::factor(1, -1).unwrap();
        assert_eq!(series_expand(&f, 3).unwrap().coeffs(), ints(&[1, 1, 1, 1]));
        let f = FactoredChar::factor(1, -2).unwrap();
        assert_eq!(series_expand(&f, 3).unwrap().coeffs(), ints(&[1, 2, 3, 4]));
        let f = FactoredChar::from_pairs([(2, 1), (1, -1)]).unwrap();
        assert_eq!(series_expand(&f, 3).unwrap().coeffs(), ints(&[1, 1, 0, 0]));
        assert!(series_expand(&f, 0).is_err());
    }

    #[test]
    fn product_uses_smaller_order() {
        let a = TruncatedSeries::from_poly(&IntPoly::from_i64s(&[1, 1]), 5);
        let b = TruncatedSeries::from_poly(&IntPoly::from_i64s(&[1, 2, 3]), 2);
        let c = &a * &b;
        assert_eq!(c.order(), 2);
        assert_eq!(c.coeffs(), ints(&[1, 3, 5]));
    }
}
