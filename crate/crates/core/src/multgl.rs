//! Virtual equivariant multiplicities for `GL_n` fixed points.
//!
//! The multiplicity of a fixed point is the ratio of the torus characters of
//! `Sym` of the dual upward tangent space and of the dual Hitchin base. Both
//! are products of `(1 - t^k)^{-dim}`, so the ratio is a [`FactoredChar`]
//! whose expansion may or may not be a polynomial.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::chain::{gl_hitchin_base_dims, ChainHiggsBundle, WeightDims};
use crate::error::{Error, Result};
use crate::polyalg::{divides, qbinom, qint, series_expand, Expansion, FactoredChar, IntPoly, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultResult {
    pub factored: FactoredChar,
    pub expansion: Expansion,
}

impl MultResult {
    pub fn from_factored(factored: FactoredChar) -> Self {
        let expansion = factored.expand();
        MultResult { factored, expansion }
    }

    pub fn polynomial(&self) -> Option<&IntPoly> {
        self.expansion.polynomial()
    }

    pub fn is_polynomial(&self) -> bool {
        self.expansion.is_polynomial()
    }

    pub fn value_at_1(&self) -> Option<BigInt> {
        self.polynomial().map(IntPoly::value_at_one)
    }

    pub fn palindromic(&self) -> Option<bool> {
        self.polynomial().map(|p| p.is_palindromic_monic().unwrap_or(false))
    }

    pub fn witness_degree(&self) -> Option<usize> {
        match self.expansion {
            Expansion::NotPolynomial { remainder_degree } => Some(remainder_degree),
            Expansion::Polynomial(_) => None,
        }
    }

    pub fn to_json(&self) -> MultJson {
        MultJson {
            polynomial: self.polynomial().map(|p| p.coeffs().iter().map(ToString::to_string).collect()),
            not_polynomial_witness_degree: self.witness_degree(),
            value_at_1: self.value_at_1().map(|v| v.to_string()),
            palindromic: self.palindromic().unwrap_or(false),
            factored: self.factored.clone(),
        }
    }
}

/// Wire form of a [`MultResult`]. Big integers travel as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultJson {
    pub polynomial: Option<Vec<String>>,
    pub not_polynomial_witness_degree: Option<usize>,
    pub value_at_1: Option<String>,
    pub palindromic: bool,
    pub factored: FactoredChar,
}

/// `∏_k (1 - t^k)^{base[k] - tplus[k]}`.
pub fn virtual_multiplicity(tplus: &WeightDims, base: &WeightDims) -> MultResult {
    let top = tplus.max_weight().max(base.max_weight());
    let pairs = (1..=top).map(|k| (k, base.get(k) as i64 - tplus.get(k) as i64));
    MultResult::from_factored(FactoredChar::from_pairs(pairs).expect("weights start at 1"))
}

fn check_genus_rank(g: i64, n: i64) -> Result<()> {
    if g < 2 {
        return Err(Error::domain("g", format!("genus must be >= 2, got {g}")));
    }
    if n < 1 {
        return Err(Error::domain("n", format!("rank must be >= 1, got {n}")));
    }
    Ok(())
}

/// Type (n): a very stable bundle with zero Higgs field.
/// `∏_{i=2}^{n} [i]_t^{(2i-1)(g-1)}`.
pub fn mult_type_n(g: i64, n: i64) -> Result<MultResult> {
    check_genus_rank(g, n)?;
    let mut factored = FactoredChar::one();
    for i in 2..=n {
        factored = factored.mul(&FactoredChar::qint_pow(i as u32, (2 * i - 1) * (g - 1))?);
    }
    let mut poly = IntPoly::one();
    for i in 2..=n {
        poly = &poly * &qint(i)?.pow(((2 * i - 1) * (g - 1)) as u32);
    }
    Ok(MultResult {
        factored,
        expansion: Expansion::Polynomial(poly),
    })
}

/// `∏_{j=1}^{k} (1 - t^{n-j+1}) / (1 - t^j)` in factored form.
fn qbinom_factored(n: i64, k: i64) -> FactoredChar {
    let pairs = (1..=k).flat_map(|j| [((n - j + 1) as u32, 1), (j as u32, -1)]);
    FactoredChar::from_pairs(pairs).expect("positive keys")
}

/// Type (1,…,1): `∏_{i=1}^{n-1} [n choose i]_t^{m_i}`.
pub fn mult_type111(c: &ChainHiggsBundle) -> Result<MultResult> {
    if !c.is_stable() {
        return Err(Error::domain("chain", "multiplicity needs a stable chain"));
    }
    let n = c.rank() as i64;
    let mut factored = FactoredChar::one();
    let mut poly = IntPoly::one();
    for (idx, &m) in c.m_vector().iter().enumerate() {
        let i = idx as i64 + 1;
        if m == 0 {
            continue;
        }
        factored = factored.mul(&qbinom_factored(n, i).pow(m));
        poly = &poly * &qbinom(n, i)?.pow(m as u32);
    }
    Ok(MultResult {
        factored,
        expansion: Expansion::Polynomial(poly),
    })
}

/// Weight dimensions of `T⁺` at a rank-3 type (1,2) fixed point, where
/// `s = 2ℓ - v` indexes the component.
pub fn type12_rank3_tplus_dims(g: i64, twol_minus_v: i64) -> Result<WeightDims> {
    check_genus_rank(g, 3)?;
    let s = twol_minus_v;
    if !(0 < s && s < 3 * g - 3) {
        return Err(Error::domain(
            "twol_minus_v",
            format!("need 0 < 2l-v < 3g-3 = {}, got {s}", 3 * g - 3),
        ));
    }
    let weight2 = s + 2 * g - 2;
    let weight1 = 9 * g - 8 - weight2;
    Ok(WeightDims::from_pairs([(1, weight1 as u64), (2, weight2 as u64)]))
}

/// Rank-3 type (1,2): `(1+t)^{g-1-s} (1+t+t²)^{5g-5}`, a polynomial iff `s <= g-1`.
pub fn mult_type12_rank3(g: i64, twol_minus_v: i64) -> Result<MultResult> {
    let tplus = type12_rank3_tplus_dims(g, twol_minus_v)?;
    Ok(virtual_multiplicity(&tplus, &gl_hitchin_base_dims(g, 3)?))
}

/// Does the multiplicity divide the type (n) master polynomial at `(g, n)`?
pub fn master_divisibility(m: &MultResult, g: i64, n: i64) -> Result<bool> {
    let p = m
        .polynomial()
        .ok_or_else(|| Error::domain("m", "multiplicity is not a polynomial"))?;
    let master = mult_type_n(g, n)?;
    divides(p, master.polynomial().expect("type (n) is always polynomial"))
}

/// Exponent of the monomial `χ_T(C_1 ⊗ A*)`: `(4n+1)(n-1)n(g-1)/6`.
pub fn euler_prefactor(g: i64, n: i64) -> Result<i64> {
    check_genus_rank(g, n)?;
    let num = (4 * n + 1) * (n - 1) * n * (g - 1);
    if num % 6 != 0 {
        return Err(Error::Internal(format!("prefactor numerator {num} not divisible by 6")));
    }
    let closed = num / 6;
    let summed: i64 = (1..=n).map(|i| (i - 1) * (2 * i - 1) * (g - 1)).sum();
    if closed != summed {
        return Err(Error::Internal(format!(
            "prefactor closed form {closed} disagrees with weight sum {summed}"
        )));
    }
    Ok(closed)
}

/// `m_A(t) m_B(t) χ_T(Sym A*)` through `t^order`.
pub fn euler_pairing_series(
    m_a: &MultResult,
    m_b: &MultResult,
    g: i64,
    n: i64,
    order: usize,
) -> Result<TruncatedSeries> {
    let pa = m_a
        .polynomial()
        .ok_or_else(|| Error::domain("m_a", "multiplicity is not a polynomial"))?;
    let pb = m_b
        .polynomial()
        .ok_or_else(|| Error::domain("m_b", "multiplicity is not a polynomial"))?;
    pairing_series_of_polys(pa, pb, g, n, order)
}

/// Same as [`euler_pairing_series`] for bare polynomials.
pub fn pairing_series_of_polys(
    pa: &IntPoly,
    pb: &IntPoly,
    g: i64,
    n: i64,
    order: usize,
) -> Result<TruncatedSeries> {
    let base = gl_hitchin_base_dims(g, n)?;
    let sym_a = FactoredChar::from_pairs(base.iter().map(|(k, d)| (k, -(d as i64))))?;
    let s = series_expand(&sym_a, order)?;
    let prod = pa * pb;
    Ok(&TruncatedSeries::from_poly(&prod, order) * &s)
}

/// `2^{2i} t^i (1+t)^{3g-3-2i}`: character of the cotangent-fibre mirror at
/// the type (1,1) component with index `i`, for `n = 2`.
pub fn cotangent_cross_character(g: i64, i: i64) -> Result<IntPoly> {
    if g < 2 {
        return Err(Error::domain("g", format!("genus must be >= 2, got {g}")));
    }
    if !(0..g).contains(&i) {
        return Err(Error::domain("i", format!("need 0 <= i <= g-1 = {}, got {i}", g - 1)));
    }
    let e = 3 * g - 3 - 2 * i;
    if e < 0 {
        return Err(Error::domain("i", format!("exponent 3g-3-2i = {e} is negative")));
    }
    let scale = BigInt::one() << (2 * i as usize);
    let mono = IntPoly::monomial(scale, i as usize);
    Ok(&mono * &IntPoly::from_i64s(&[1, 1]).pow(e as u32))
}

/// Fixed-point types with an implemented multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlType {
    /// `(n)`: a stable bundle with zero Higgs field.
    Bundle,
    /// `(1,…,1)`: chains of line bundles.
    Chain,
    /// Rank-3 `(1,2)`.
    Type12,
}

impl std::str::FromStr for GlType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "n" => Ok(GlType::Bundle),
            "chain" | "111" => Ok(GlType::Chain),
            "type12" | "12" => Ok(GlType::Type12),
            other => Err(Error::Unsupported(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::tplus_dims;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn wd(pairs: &[(u32, u64)]) -> WeightDims {
        WeightDims::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn virtual_examples() {
        let m = virtual_multiplicity(&wd(&[(1, 3), (2, 2)]), &wd(&[(1, 2), (2, 3)]));
        assert_eq!(m.polynomial(), Some(&p(&[1, 1])));
        let b = wd(&[(1, 2), (2, 3)]);
        assert_eq!(virtual_multiplicity(&b, &b).polynomial(), Some(&IntPoly::one()));
        for (g, n) in [(2, 3), (3, 2), (2, 4)] {
            let base = gl_hitchin_base_dims(g, n).unwrap();
            let tplus = wd(&[(1, (n * n * (g - 1) + 1) as u64)]);
            let via_ratio = virtual_multiplicity(&tplus, &base);
            assert_eq!(via_ratio.polynomial(), mult_type_n(g, n).unwrap().polynomial());
        }
    }

    #[test]
    fn type_n_examples() {
        let m = mult_type_n(2, 2).unwrap();
        assert_eq!(m.polynomial(), Some(&p(&[1, 3, 3, 1])));
        assert_eq!(m.value_at_1(), Some(BigInt::from(8)));
        let m = mult_type_n(2, 3).unwrap();
        let expect = &p(&[1, 1]).pow(3) * &p(&[1, 1, 1]).pow(5);
        assert_eq!(m.polynomial(), Some(&expect));
        assert_eq!(m.value_at_1(), Some(BigInt::from(1944)));
        assert_eq!(mult_type_n(2, 1).unwrap().polynomial(), Some(&IntPoly::one()));
        assert_eq!(m.factored.expand(), m.expansion);
    }

    #[test]
    fn type111_examples() {
        let c = ChainHiggsBundle::from_m_vector(2, &[1, 1], 0).unwrap();
        let m = mult_type111(&c).unwrap();
        assert_eq!(m.polynomial(), Some(&p(&[1, 1, 1]).pow(2)));
        assert_eq!(m.value_at_1(), Some(BigInt::from(9)));
        let c = ChainHiggsBundle::from_m_vector(2, &[0, 0], 0).unwrap();
        assert_eq!(mult_type111(&c).unwrap().polynomial(), Some(&IntPoly::one()));
        let c = ChainHiggsBundle::from_m_vector(3, &[3], 0).unwrap();
        let m = mult_type111(&c).unwrap();
        assert_eq!(m.polynomial(), Some(&p(&[1, 3, 3, 1])));
        assert_eq!(m.value_at_1(), Some(BigInt::from(8)));
        let ratio = virtual_multiplicity(&tplus_dims(&c).unwrap(), &gl_hitchin_base_dims(3, 2).unwrap());
        assert_eq!(ratio.polynomial(), m.polynomial());
        assert_eq!(ratio.factored, m.factored);
    }

    #[test]
    fn type111_rejects_unstable() {
        let c = ChainHiggsBundle::from_m_vector(2, &[3], 0).unwrap();
        assert!(matches!(mult_type111(&c), Err(Error::Domain { .. })));
    }

    #[test]
    fn type12_examples() {
        let m = mult_type12_rank3(2, 1).unwrap();
        assert_eq!(m.polynomial(), Some(&p(&[1, 1, 1]).pow(5)));
        assert!(!mult_type12_rank3(2, 2).unwrap().is_polynomial());
        let m = mult_type12_rank3(3, 2).unwrap();
        assert_eq!(m.polynomial(), Some(&p(&[1, 1, 1]).pow(10)));
        assert_eq!(m.value_at_1(), Some(BigInt::from(59049)));
        assert!(mult_type12_rank3(2, 0).is_err());
        assert!(mult_type12_rank3(2, 3).is_err());
    }

    #[test]
    fn divisibility_examples() {
        let sq = MultResult::from_factored(FactoredChar::qint_pow(2, 2).unwrap());
        assert!(master_divisibility(&sq, 2, 2).unwrap());
        let quart = MultResult::from_factored(FactoredChar::qint_pow(2, 4).unwrap());
        assert!(!master_divisibility(&quart, 2, 2).unwrap());
        let c = MultResult::from_factored(FactoredChar::qint_pow(3, 2).unwrap());
        assert!(master_divisibility(&c, 2, 3).unwrap());
        let np = mult_type12_rank3(2, 2).unwrap();
        assert!(master_divisibility(&np, 2, 3).is_err());
    }

    #[test]
    fn prefactor_examples() {
        assert_eq!(euler_prefactor(2, 2).unwrap(), 3);
        assert_eq!(euler_prefactor(2, 1).unwrap(), 0);
        assert_eq!(euler_prefactor(3, 3).unwrap(), 26);
    }

    #[test]
    fn pairing_examples() {
        let one = MultResult::from_factored(FactoredChar::one());
        let s = euler_pairing_series(&one, &one, 2, 2, 3).unwrap();
        let ints: Vec<i64> = s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect();
        // 1/((1-t)^2 (1-t^2)^3): coefficients 1, 2, 3+3, 4+6
        assert_eq!(ints, vec![1, 2, 6, 10]);
        let one_plus_t = MultResult::from_factored(FactoredChar::qint_pow(2, 1).unwrap());
        let s = euler_pairing_series(&one_plus_t, &one, 2, 2, 1).unwrap();
        assert_eq!(s.coeffs(), &[BigInt::from(1), BigInt::from(3)]);
        assert!(euler_pairing_series(&mult_type12_rank3(2, 2).unwrap(), &one, 2, 3, 4).is_err());
    }

    #[test]
    fn cotangent_examples() {
        assert_eq!(cotangent_cross_character(2, 0).unwrap(), p(&[1, 3, 3, 1]));
        assert_eq!(cotangent_cross_character(2, 1).unwrap(), p(&[0, 4, 4]));
        assert_eq!(cotangent_cross_character(3, 2).unwrap(), p(&[0, 0, 16, 32, 16]));
        assert!(cotangent_cross_character(2, 2).is_err());
        assert!(cotangent_cross_character(2, -1).is_err());
    }

    #[test]
    fn gl_type_parsing() {
        assert_eq!("n".parse::<GlType>().unwrap(), GlType::Bundle);
        assert!(matches!("2,1".parse::<GlType>(), Err(Error::Unsupported(_))));
    }
}
