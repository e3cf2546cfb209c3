use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// A product `∏_k (1 - t^k)^{e_k}` kept in exponent form.
///
/// Keys are `k >= 1`, stored exponents are never zero. Multiplication adds
/// exponent maps pointwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FactoredChar {
    factors: BTreeMap<u32, i64>,
}

/// Outcome of multiplying out a [`FactoredChar`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expansion {
    Polynomial(IntPoly),
    /// The denominator leaves a nonzero remainder of this degree.
    NotPolynomial { remainder_degree: usize },
}

impl Expansion {
    pub fn polynomial(&self) -> Option<&IntPoly> {
        match self {
            Expansion::Polynomial(p) => Some(p),
            Expansion::NotPolynomial { .. } => None,
        }
    }

    pub fn is_polynomial(&self) -> bool {
        matches!(self, Expansion::Polynomial(_))
    }
}

impl FactoredChar {
    pub fn one() -> Self {
        Self::default()
    }

    /// `(1 - t^k)^e`
    pub fn factor(k: u32, e: i64) -> Result<Self> {
        let mut f = Self::one();
        f.push(k, e)?;
        Ok(f)
    }

    /// Builds from `(k, e)` pairs; repeated keys accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (u32, i64)>>(pairs: I) -> Result<Self> {
        let mut f = Self::one();
        for (k, e) in pairs {
            f.push(k, e)?;
        }
        Ok(f)
    }

    /// `(1 - t^k) / (1 - t)` raised to `e`, i.e. `[k]_t^e`.
    pub fn qint_pow(k: u32, e: i64) -> Result<Self> {
        Self::from_pairs([(k, e), (1, -e)])
    }

    fn push(&mut self, k: u32, e: i64) -> Result<()> {
        if k == 0 {
            return Err(Error::domain("k", "factor (1 - t^0) is zero"));
        }
        if e == 0 {
            return Ok(());
        }
        let slot = self.factors.entry(k).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(&k);
        }
        Ok(())
    }

    pub fn exponent(&self, k: u32) -> i64 {
        self.factors.get(&k).copied().unwrap_or(0)
    }

    pub fn factors(&self) -> &BTreeMap<u32, i64> {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, other: &FactoredChar) -> FactoredChar {
        let mut out = self.clone();
        for (&k, &e) in &other.factors {
            out.push(k, e).expect("keys of a canonical FactoredChar are positive");
        }
        out
    }

    pub fn pow(&self, n: i64) -> FactoredChar {
        if n == 0 {
            return FactoredChar::one();
        }
        FactoredChar {
            factors: self.factors.iter().map(|(&k, &e)| (k, e * n)).collect(),
        }
    }

    pub fn inverse(&self) -> FactoredChar {
        self.pow(-1)
    }

    /// Degree of the numerator minus degree of the denominator.
    pub fn degree(&self) -> i64 {
        self.factors.iter().map(|(&k, &e)| k as i64 * e).sum()
    }

    /// Multiplies out numerator and denominator and divides exactly.
    pub fn expand(&self) -> Expansion {
        let mut num = IntPoly::one();
        let mut den = IntPoly::one();
        for (&k, &e) in &self.factors {
            let target = if e > 0 { &mut num } else { &mut den };
            for _ in 0..e.unsigned_abs() {
                target.mul_one_minus_t_pow(k as usize);
            }
        }
        // the denominator has leading coefficient ±1, so integer division never stalls
        let (q, r) = num.div_rem_unit(&den);
        match r.degree() {
            None => Expansion::Polynomial(q),
            Some(d) => Expansion::NotPolynomial { remainder_degree: d },
        }
    }
}

impl fmt::Display for FactoredChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(k, e)| format!("(1-t^{k})^{e}"))
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

// JSON form: {"k": e, ...} with string keys.
impl Serialize for FactoredChar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let as_strings: BTreeMap<String, i64> =
            self.factors.iter().map(|(k, e)| (k.to_string(), *e)).collect();
        as_strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FactoredChar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, i64>::deserialize(d)?;
        let mut pairs = Vec::with_capacity(raw.len());
        for (k, e) in raw {
            let k: u32 = k.parse().map_err(serde::de::Error::custom)?;
            pairs.push((k, e));
        }
        FactoredChar::from_pairs(pairs).map_err(serde::de::Error::custom)
    }
}
