//! Multiplicities at chain-type fixed points for a simple group `G`.
//!
//! A section `b_i` with `m_i` zeros per simple root gives the character
//! `∏_i ∏_{α>0} ((1 - t^{ht α + 1}) / (1 - t^{ht α}))^{m_i c_i(α)}`. It is
//! rarely a polynomial; for cominuscule nodes it is the Poincaré polynomial
//! of `G/P` in `t = q²`.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multgl::{MultJson, MultResult};
use crate::polyalg::{FactoredChar, IntPoly};
use crate::rootsys::{cominuscule_nodes, degrees, levi_degrees, weyl_orbit_minuscule, RootSystem};

pub const DEFAULT_SCAN_CAP: u64 = 1_000_000;

/// Zero counts `m_i` of the sections `b_i`, one per simple root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MVector(pub Vec<u32>);

impl MVector {
    pub fn zero(rank: usize) -> Self {
        MVector(vec![0; rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut m = vec![0; rank];
        m[i - 1] = 1;
        MVector(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

/// `(1 - t^{w+1}) / (1 - t^w)`
fn height_ratio(w: i64) -> FactoredChar {
    FactoredChar::from_pairs([(w as u32 + 1, 1), (w as u32, -1)]).expect("heights are positive")
}

/// The root product, accumulated root by root.
pub fn mult_simple(r: &RootSystem, m: &MVector) -> Result<MultResult> {
    if m.0.len() != r.rank() {
        return Err(Error::domain(
            "m",
            format!("m-vector has {} entries, rank is {}", m.0.len(), r.rank()),
        ));
    }
    let mut acc = FactoredChar::one();
    for alpha in r.positive_roots() {
        let e: i64 = alpha
            .coeffs()
            .iter()
            .zip(&m.0)
            .map(|(c, &mi)| c * mi as i64)
            .sum();
        if e != 0 {
            acc = acc.mul(&height_ratio(alpha.height()).pow(e));
        }
    }
    Ok(MultResult::from_factored(acc))
}

/// `∏_{α>0} (1 - t^{ht α + 1}) / (1 - t^{ht α})` straight from the roots.
pub fn q_group_from_roots(r: &RootSystem) -> FactoredChar {
    r.positive_roots()
        .iter()
        .fold(FactoredChar::one(), |acc, a| acc.mul(&height_ratio(a.height())))
}

/// `(1 - t)^{-ℓ} ∏_j (1 - t^{d_j})`.
pub fn q_group(r: &RootSystem) -> Result<FactoredChar> {
    let d = degrees(r)?;
    let pairs = d
        .as_slice()
        .iter()
        .map(|&dj| (dj, 1))
        .chain(std::iter::once((1, -(r.rank() as i64))));
    FactoredChar::from_pairs(pairs)
}

fn require_cominuscule(r: &RootSystem, i: usize) -> Result<()> {
    if !cominuscule_nodes(r).contains(&i) {
        return Err(Error::domain(
            "node",
            format!("node {i} of {} is not cominuscule", r.lie_type()),
        ));
    }
    Ok(())
}

/// `∏_j (1 - t^{d_j}) / (1 - t^{n_j})` with `n_j` the Levi degrees.
pub fn mult_cominuscule(r: &RootSystem, i: usize) -> Result<MultResult> {
    require_cominuscule(r, i)?;
    let d = degrees(r)?;
    let n = levi_degrees(r, i)?;
    let pairs = d
        .as_slice()
        .iter()
        .map(|&x| (x, 1))
        .chain(n.as_slice().iter().map(|&x| (x, -1)));
    Ok(MultResult::from_factored(FactoredChar::from_pairs(pairs)?))
}

/// `Σ_μ t^{depth(μ)}` over the minuscule orbit.
pub fn orbit_depth_polynomial(r: &RootSystem, i: usize) -> Result<IntPoly> {
    let orbit = weyl_orbit_minuscule(r, i)?;
    Ok(orbit.iter().fold(IntPoly::zero(), |acc, w| {
        &acc + &IntPoly::monomial(BigInt::one(), w.depth as usize)
    }))
}

/// The principal grading of the dual minuscule representation agrees with
/// the cominuscule multiplicity.
pub fn gross_check(r: &RootSystem, i: usize) -> Result<bool> {
    let mult = mult_cominuscule(r, i)?;
    let orbit = orbit_depth_polynomial(r, i)?;
    Ok(mult.polynomial() == Some(&orbit))
}

/// `∏_i d_i^{(2d_i - 1)(g - 1)}`.
pub fn global_weyl_order(r: &RootSystem, g: i64) -> Result<BigInt> {
    if g < 2 {
        return Err(Error::domain("g", format!("genus must be >= 2, got {g}")));
    }
    let d = degrees(r)?;
    Ok(d.as_slice()
        .iter()
        .map(|&di| num_traits::pow(BigInt::from(di), ((2 * di as i64 - 1) * (g - 1)) as usize))
        .product())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanEntry {
    pub m: MVector,
    pub result: MultResult,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub entries: Vec<ScanEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntryJson {
    pub m: MVector,
    pub polynomial: Option<Vec<String>>,
    pub not_polynomial_witness_degree: Option<usize>,
}

impl ScanReport {
    pub fn polynomial_count(&self) -> usize {
        self.entries.iter().filter(|e| e.result.is_polynomial()).count()
    }

    pub fn to_json(&self) -> Vec<ScanEntryJson> {
        self.entries
            .iter()
            .map(|e| {
                let MultJson {
                    polynomial,
                    not_polynomial_witness_degree,
                    ..
                } = e.result.to_json();
                ScanEntryJson {
                    m: e.m.clone(),
                    polynomial,
                    not_polynomial_witness_degree,
                }
            })
            .collect()
    }
}

/// Every `m` with `0 <= m_i <= bound`, in lexicographic order.
///
/// Each entry is `∏_i u_i^{m_i}` where `u_i` is the factored form at the
/// unit vector `e_i`.
pub fn polynomiality_scan(r: &RootSystem, bound: u32, cap: u64) -> Result<ScanReport> {
    if bound < 1 {
        return Err(Error::domain("bound", "scan bound must be at least 1"));
    }
    let l = r.rank();
    let side = bound as u64 + 1;
    let size = side.checked_pow(l as u32).filter(|&s| s <= cap).ok_or_else(|| Error::Resource {
        what: "polynomiality scan grid",
        size: format!("{side}^{l}"),
        cap,
    })?;
    let units: Vec<FactoredChar> = (1..=l)
        .map(|i| mult_simple(r, &MVector::unit(l, i)).map(|m| m.factored))
        .collect::<Result<_>>()?;
    let entries = (0..size)
        .into_par_iter()
        .map(|idx| {
            let mut m = vec![0u32; l];
            let mut rest = idx;
            for slot in m.iter_mut().rev() {
                *slot = (rest % side) as u32;
                rest /= side;
            }
            let factored = units
                .iter()
                .zip(&m)
                .fold(FactoredChar::one(), |acc, (u, &mi)| acc.mul(&u.pow(mi as i64)));
            ScanEntry {
                m: MVector(m),
                result: MultResult::from_factored(factored),
            }
        })
        .collect();
    Ok(ScanReport { entries })
}
