//! Type (1,…,1) fixed points: chains `L_0 ⊕ … ⊕ L_{n-1}` with Higgs maps
//! `b_i : L_{i-1} → L_i K`.
//!
//! Only discrete data is modeled: the genus, the degrees `ℓ_i`, and the zero
//! divisors `δ_i = div(b_i)`. With `m_i = ℓ_i - ℓ_{i-1} + 2g - 2` the degree
//! of `b_i`, everything the multiplicity formulas need is determined by
//! `(g, n, m)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of the (abstract) curve, identified by its label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub String);

impl Point {
    pub fn new(label: impl Into<String>) -> Self {
        Point(label.into())
    }

    pub fn label(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Point {
    fn from(s: &str) -> Self {
        Point(s.to_owned())
    }
}

/// Integer combination of points. Zero multiplicities are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "BTreeMap<Point, i64>", into = "BTreeMap<Point, i64>")]
pub struct Divisor {
    mults: BTreeMap<Point, i64>,
}

impl From<BTreeMap<Point, i64>> for Divisor {
    fn from(mut mults: BTreeMap<Point, i64>) -> Self {
        mults.retain(|_, m| *m != 0);
        Divisor { mults }
    }
}

impl From<Divisor> for BTreeMap<Point, i64> {
    fn from(d: Divisor) -> Self {
        d.mults
    }
}

impl Divisor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_pairs<'a, I: IntoIterator<Item = (&'a str, i64)>>(pairs: I) -> Self {
        let mut d = Divisor::zero();
        for (p, m) in pairs {
            d.add(&Point::new(p), m);
        }
        d
    }

    pub fn multiplicity(&self, p: &Point) -> i64 {
        self.mults.get(p).copied().unwrap_or(0)
    }

    pub fn add(&mut self, p: &Point, m: i64) {
        let slot = self.mults.entry(p.clone()).or_insert(0);
        *slot += m;
        if *slot == 0 {
            self.mults.remove(p);
        }
    }

    pub fn plus(&self, other: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (p, &m) in &other.mults {
            out.add(p, m);
        }
        out
    }

    pub fn degree(&self) -> i64 {
        self.mults.values().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.mults.values().all(|&m| m > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, i64)> {
        self.mults.iter().map(|(p, &m)| (p, m))
    }

    /// Points with multiplicity, each repeated `m` times, in label order.
    pub fn points_with_repetition(&self) -> Vec<&Point> {
        self.mults
            .iter()
            .flat_map(|(p, &m)| std::iter::repeat(p).take(m.max(0) as usize))
            .collect()
    }
}

/// A type (1,…,1) fixed point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainHiggsBundle {
    genus: i64,
    degrees: Vec<i64>,
    delta0: Divisor,
    zeros: Vec<Divisor>,
}

/// Very-stability verdict with the first failing reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    VeryStable,
    Unstable { subbundle_start: usize },
    RepeatedZero { point: Point },
}

impl Verdict {
    pub fn is_very_stable(&self) -> bool {
        matches!(self, Verdict::VeryStable)
    }

    pub fn reason(&self) -> Option<String> {
        match self {
            Verdict::VeryStable => None,
            Verdict::Unstable { subbundle_start } => Some(format!(
                "unstable: subbundle L_{subbundle_start} ⊕ … ⊕ L_(n-1) is not slope-decreasing"
            )),
            Verdict::RepeatedZero { point } => Some(format!("repeated zero at {point}")),
        }
    }
}

/// JSON wire form of a chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainJson {
    pub genus: i64,
    pub degrees: Vec<i64>,
    #[serde(default)]
    pub delta0: BTreeMap<String, i64>,
    #[serde(default)]
    pub zeros: Vec<BTreeMap<String, i64>>,
}

fn divisor_from_json(raw: &BTreeMap<String, i64>) -> Divisor {
    let mut d = Divisor::zero();
    for (p, &m) in raw {
        d.add(&Point::new(p.as_str()), m);
    }
    d
}

fn divisor_to_json(d: &Divisor) -> BTreeMap<String, i64> {
    d.iter().map(|(p, m)| (p.0.clone(), m)).collect()
}

impl ChainHiggsBundle {
    /// Validates and builds a chain. Every invariant failure names itself.
    pub fn new(genus: i64, degrees: Vec<i64>, delta0: Divisor, zeros: Vec<Divisor>) -> Result<Self> {
        if genus < 2 {
            return Err(Error::invariant("genus>=2", format!("genus is {genus}")));
        }
        let n = degrees.len();
        if n == 0 {
            return Err(Error::invariant("rank>=1", "degree list is empty"));
        }
        if zeros.len() != n - 1 {
            return Err(Error::invariant(
                "zeros.len==rank-1",
                format!("{} zero divisors for rank {n}", zeros.len()),
            ));
        }
        if delta0.degree() != degrees[0] {
            return Err(Error::invariant(
                "deg(delta0)==degrees[0]",
                format!("deg δ_0 = {}, ℓ_0 = {}", delta0.degree(), degrees[0]),
            ));
        }
        for i in 1..n {
            let m = degrees[i] - degrees[i - 1] + 2 * genus - 2;
            if m < 0 {
                return Err(Error::invariant(
                    "m_i>=0",
                    format!("m_{i} = {m} < 0, so b_{i} cannot be a nonzero section"),
                ));
            }
            let d = &zeros[i - 1];
            if !d.is_effective() {
                return Err(Error::invariant(
                    "zeros_effective",
                    format!("δ_{i} has a negative multiplicity"),
                ));
            }
            if d.degree() != m {
                return Err(Error::invariant(
                    "deg(delta_i)==m_i",
                    format!("deg δ_{i} = {} but m_{i} = {m}", d.degree()),
                ));
            }
        }
        Ok(ChainHiggsBundle {
            genus,
            degrees,
            delta0,
            zeros,
        })
    }

    /// Chain with prescribed `m`-vector, `ℓ_0 = l0`, and distinct fresh zeros
    /// labelled `z{i}_{j}`. `δ_0` is `l0` times the point `o`.
    pub fn from_m_vector(genus: i64, m: &[i64], l0: i64) -> Result<Self> {
        let mut degrees = vec![l0];
        let mut zeros = Vec::with_capacity(m.len());
        for (idx, &mi) in m.iter().enumerate() {
            if mi < 0 {
                return Err(Error::invariant("m_i>=0", format!("m_{} = {mi}", idx + 1)));
            }
            let prev = *degrees.last().unwrap();
            degrees.push(prev + mi - (2 * genus - 2));
            let mut d = Divisor::zero();
            for j in 0..mi {
                d.add(&Point::new(format!("z{}_{}", idx + 1, j)), 1);
            }
            zeros.push(d);
        }
        let mut delta0 = Divisor::zero();
        delta0.add(&Point::new("o"), l0);
        ChainHiggsBundle::new(genus, degrees, delta0, zeros)
    }

    pub fn from_json(raw: &ChainJson) -> Result<Self> {
        ChainHiggsBundle::new(
            raw.genus,
            raw.degrees.clone(),
            divisor_from_json(&raw.delta0),
            raw.zeros.iter().map(divisor_from_json).collect(),
        )
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let raw: ChainJson = serde_json::from_str(text)
            .map_err(|e| Error::invariant("chain_json_schema", e.to_string()))?;
        Self::from_json(&raw)
    }

    pub fn to_json(&self) -> ChainJson {
        ChainJson {
            genus: self.genus,
            degrees: self.degrees.clone(),
            delta0: divisor_to_json(&self.delta0),
            zeros: self.zeros.iter().map(divisor_to_json).collect(),
        }
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn delta0(&self) -> &Divisor {
        &self.delta0
    }

    /// `δ_1, …, δ_{n-1}`; index `i - 1` holds `δ_i`.
    pub fn zeros(&self) -> &[Divisor] {
        &self.zeros
    }

    /// `δ_i` for `1 <= i <= n-1`.
    pub fn zero_divisor(&self, i: usize) -> Option<&Divisor> {
        i.checked_sub(1).and_then(|j| self.zeros.get(j))
    }

    /// `m_1, …, m_{n-1}`.
    pub fn m_vector(&self) -> Vec<i64> {
        self.degrees
            .windows(2)
            .map(|w| w[1] - w[0] + 2 * self.genus - 2)
            .collect()
    }

    /// `div(b) = δ_1 + … + δ_{n-1}`.
    pub fn total_zero_divisor(&self) -> Divisor {
        self.zeros.iter().fold(Divisor::zero(), |acc, d| acc.plus(d))
    }

    /// First index `j` whose invariant tail subbundle destabilises, if any.
    fn destabilising_index(&self) -> Option<usize> {
        let n = self.rank() as i64;
        let total: i64 = self.degrees.iter().sum();
        let mut tail: i64 = total;
        for j in 1..self.rank() {
            tail -= self.degrees[j - 1];
            // slope(L_j ⊕ … ⊕ L_{n-1}) < slope(E), cross-multiplied
            if n * tail >= (n - j as i64) * total {
                return Some(j);
            }
        }
        None
    }

    /// Strict slope stability against the invariant subbundles
    /// `L_j ⊕ … ⊕ L_{n-1}`, `1 <= j <= n-1`.
    pub fn is_stable(&self) -> bool {
        self.destabilising_index().is_none()
    }

    pub fn classify(&self) -> Verdict {
        if let Some(j) = self.destabilising_index() {
            return Verdict::Unstable { subbundle_start: j };
        }
        match self.total_zero_divisor().iter().find(|&(_, m)| m > 1) {
            Some((p, _)) => Verdict::RepeatedZero { point: p.clone() },
            None => Verdict::VeryStable,
        }
    }

    /// Stable and `div(b)` reduced.
    pub fn is_very_stable(&self) -> bool {
        self.classify().is_very_stable()
    }

    /// Weight dimensions of the upward-flow tangent space `T⁺`.
    pub fn tplus_dims(&self) -> Result<WeightDims> {
        if !self.is_stable() {
            return Err(Error::domain("chain", "tplus_dims requires a stable chain"));
        }
        let g = self.genus;
        let n = self.rank();
        let l = &self.degrees;
        let mut dims = BTreeMap::new();
        for k in 1..=n {
            let mut chi: i64 = 0;
            for i in 0..n {
                for j in 0..n {
                    let diff = i as i64 - j as i64;
                    let hom = l[j] - l[i];
                    if diff == k as i64 {
                        chi += hom + 1 - g;
                    }
                    if diff == k as i64 - 1 {
                        chi -= hom + (2 * g - 2) + 1 - g;
                    }
                }
            }
            // trace line contributes one extra dimension in weight 1
            let dim = -chi + i64::from(k == 1);
            if dim < 0 {
                return Err(Error::Internal(format!(
                    "negative weight-{k} dimension {dim} for a stable chain"
                )));
            }
            if dim > 0 {
                dims.insert(k as u32, dim as u64);
            }
        }
        Ok(WeightDims { dims })
    }
}

/// Dimensions of torus weight spaces; absent weights have dimension zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightDims {
    dims: BTreeMap<u32, u64>,
}

impl WeightDims {
    pub fn from_pairs<I: IntoIterator<Item = (u32, u64)>>(pairs: I) -> Self {
        let mut dims = BTreeMap::new();
        for (k, d) in pairs {
            *dims.entry(k).or_insert(0) += d;
        }
        dims.retain(|_, d| *d != 0);
        WeightDims { dims }
    }

    pub fn get(&self, k: u32) -> u64 {
        self.dims.get(&k).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.dims.iter().map(|(&k, &d)| (k, d))
    }

    pub fn max_weight(&self) -> u32 {
        self.dims.keys().next_back().copied().unwrap_or(0)
    }
}

/// `is_stable` as a free function.
pub fn is_stable(c: &ChainHiggsBundle) -> bool {
    c.is_stable()
}

pub fn is_very_stable(c: &ChainHiggsBundle) -> bool {
    c.is_very_stable()
}

pub fn tplus_dims(c: &ChainHiggsBundle) -> Result<WeightDims> {
    c.tplus_dims()
}

/// Weights of the `GL_n` Hitchin base `⊕_k H⁰(K^k)`: `g` in weight 1,
/// `(2k-1)(g-1)` in weight `k >= 2`.
pub fn gl_hitchin_base_dims(g: i64, n: i64) -> Result<WeightDims> {
    if g < 2 {
        return Err(Error::domain("g", format!("genus must be >= 2, got {g}")));
    }
    if n < 1 {
        return Err(Error::domain("n", format!("rank must be >= 1, got {n}")));
    }
    let pairs = (1..=n).map(|k| {
        let d = if k == 1 { g } else { (2 * k - 1) * (g - 1) };
        (k as u32, d as u64)
    });
    Ok(WeightDims::from_pairs(pairs))
}
